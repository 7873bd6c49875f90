//! Words in group generators, finite presentations, and the exact normal
//! forms used by the equality oracles.
//!
//! A [`Word`] is a freely reduced sequence of `(generator, exponent)`
//! syllables. Reduction is maintained by construction: every constructor and
//! operator returns a reduced word, so `Word` equality is free-group equality.

use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum WordError {
    #[error("empty input at position {0}")]
    EmptyInput(usize),
    #[error("unknown generator `{name}` at position {position}")]
    UnknownGenerator { name: String, position: usize },
    #[error("malformed exponent at position {0}")]
    MalformedExponent(usize),
    #[error("unexpected character `{ch}` at position {position}")]
    UnexpectedChar { ch: char, position: usize },
    #[error("generator `{0}` used by a relator is not declared")]
    UndeclaredGenerator(String),
    #[error("word uses generator `{0}` outside the oracle alphabet")]
    OutsideAlphabet(String),
    #[error("presentation file: {0}")]
    PresentationFormat(String),
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
}

/// A freely reduced word: adjacent syllables have distinct generators and no
/// syllable has exponent zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word {
    syllables: Vec<(String, i64)>,
}

impl Word {
    pub fn identity() -> Self {
        Word { syllables: Vec::new() }
    }

    pub fn generator(name: &str, exponent: i64) -> Self {
        if exponent == 0 {
            return Word::identity();
        }
        Word { syllables: vec![(name.to_string(), exponent)] }
    }

    /// Builds a word from raw syllables, freely reducing along the way.
    pub fn from_syllables<I>(syllables: I) -> Self
    where
        I: IntoIterator<Item = (String, i64)>,
    {
        let mut out: Vec<(String, i64)> = Vec::new();
        for (gen, exp) in syllables {
            push_syllable(&mut out, gen, exp);
        }
        Word { syllables: out }
    }

    pub fn syllables(&self) -> &[(String, i64)] {
        &self.syllables
    }

    pub fn is_identity(&self) -> bool {
        self.syllables.is_empty()
    }

    /// Word length: the sum of absolute exponents.
    pub fn len(&self) -> usize {
        self.syllables.iter().map(|(_, e)| e.unsigned_abs() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.syllables.is_empty()
    }

    pub fn inverse(&self) -> Self {
        Word {
            syllables: self
                .syllables
                .iter()
                .rev()
                .map(|(g, e)| (g.clone(), -e))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Word) -> Word {
        let mut out = self.syllables.clone();
        for (gen, exp) in &other.syllables {
            push_syllable(&mut out, gen.clone(), *exp);
        }
        Word { syllables: out }
    }

    pub fn pow(&self, n: i64) -> Word {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        let mut out = Word::identity();
        for _ in 0..n.unsigned_abs() {
            out = out.mul(&base);
        }
        out
    }

    /// Iterates single letters `(generator, ±1)` with exponents expanded.
    pub fn letters(&self) -> impl Iterator<Item = (&str, i64)> + '_ {
        self.syllables.iter().flat_map(|(g, e)| {
            let sign = if *e > 0 { 1 } else { -1 };
            std::iter::repeat((g.as_str(), sign)).take(e.unsigned_abs() as usize)
        })
    }

    /// Exponent sum of one generator.
    pub fn exponent_sum(&self, gen: &str) -> i64 {
        self.syllables
            .iter()
            .filter(|(g, _)| g == gen)
            .map(|(_, e)| e)
            .sum()
    }

    /// Renders in the input grammar, e.g. `a^2*b^-1`.
    pub fn render(&self) -> String {
        if self.syllables.is_empty() {
            return String::new();
        }
        self.syllables
            .iter()
            .map(|(g, e)| if *e == 1 { g.clone() } else { format!("{g}^{e}") })
            .collect::<Vec<_>>()
            .join("*")
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            write!(f, "1")
        } else {
            write!(f, "{}", self.render())
        }
    }
}

fn push_syllable(out: &mut Vec<(String, i64)>, gen: String, exp: i64) {
    if exp == 0 {
        return;
    }
    if let Some(last) = out.last_mut() {
        if last.0 == gen {
            last.1 += exp;
            if last.1 == 0 {
                out.pop();
            }
            return;
        }
    }
    out.push((gen, exp));
}

/// Free reduction of a raw syllable sequence.
pub fn free_reduce(syllables: &[(String, i64)]) -> Word {
    Word::from_syllables(syllables.iter().cloned())
}

/// Parses the word grammar `term ("*" term)*` with `term = gen | gen^int`.
///
/// Generator names are alphanumeric identifiers (ASCII letters, digits and
/// `_`, starting with a letter) and must appear in `generators`.
pub fn parse_word(text: &str, generators: &[String]) -> Result<Word, WordError> {
    let bytes = text.as_bytes();
    let mut pos = 0usize;
    skip_ws(bytes, &mut pos);
    if pos >= bytes.len() {
        return Err(WordError::EmptyInput(pos));
    }
    let mut syllables: Vec<(String, i64)> = Vec::new();
    loop {
        skip_ws(bytes, &mut pos);
        let start = pos;
        let name = take_identifier(bytes, &mut pos);
        if name.is_empty() {
            let ch = text[pos..].chars().next().unwrap_or(' ');
            return Err(WordError::UnexpectedChar { ch, position: pos });
        }
        if !generators.iter().any(|g| g == &name) {
            return Err(WordError::UnknownGenerator { name, position: start });
        }
        let mut exp = 1i64;
        skip_ws(bytes, &mut pos);
        if pos < bytes.len() && bytes[pos] == b'^' {
            pos += 1;
            skip_ws(bytes, &mut pos);
            let estart = pos;
            if pos < bytes.len() && (bytes[pos] == b'-' || bytes[pos] == b'+') {
                pos += 1;
            }
            let dstart = pos;
            while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                pos += 1;
            }
            if dstart == pos {
                return Err(WordError::MalformedExponent(estart));
            }
            exp = text[estart..pos]
                .parse::<i64>()
                .map_err(|_| WordError::MalformedExponent(estart))?;
        }
        push_syllable(&mut syllables, name, exp);
        skip_ws(bytes, &mut pos);
        if pos >= bytes.len() {
            break;
        }
        if bytes[pos] != b'*' {
            let ch = text[pos..].chars().next().unwrap_or(' ');
            return Err(WordError::UnexpectedChar { ch, position: pos });
        }
        pos += 1;
    }
    Ok(Word { syllables })
}

fn skip_ws(bytes: &[u8], pos: &mut usize) {
    while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
        *pos += 1;
    }
}

fn take_identifier(bytes: &[u8], pos: &mut usize) -> String {
    let start = *pos;
    if *pos < bytes.len() && bytes[*pos].is_ascii_alphabetic() {
        *pos += 1;
        while *pos < bytes.len()
            && (bytes[*pos].is_ascii_alphanumeric() || bytes[*pos] == b'_')
        {
            *pos += 1;
        }
    }
    String::from_utf8_lossy(&bytes[start..*pos]).into_owned()
}

/// A finite presentation: an ordered generator list and a relator list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    generators: Vec<String>,
    relators: Vec<Word>,
}

impl Presentation {
    pub fn new(generators: Vec<String>, relators: Vec<Word>) -> Result<Self, WordError> {
        for rel in &relators {
            for (g, _) in rel.syllables() {
                if !generators.iter().any(|d| d == g) {
                    return Err(WordError::UndeclaredGenerator(g.clone()));
                }
            }
        }
        Ok(Presentation { generators, relators })
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    /// Parses the presentation file format:
    ///
    /// ```text
    /// gens: a, b, c
    /// rel: a*b*a^-1*b^-1
    /// ```
    ///
    /// Blank lines are ignored.
    pub fn parse(text: &str) -> Result<Self, WordError> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines
            .next()
            .ok_or_else(|| WordError::PresentationFormat("missing `gens:` line".into()))?;
        let rest = header.trim().strip_prefix("gens:").ok_or_else(|| {
            WordError::PresentationFormat("first line must start with `gens:`".into())
        })?;
        let generators: Vec<String> = rest
            .split(',')
            .map(|s| s.trim().to_string())
            .filter(|s| !s.is_empty())
            .collect();
        if generators.is_empty() {
            return Err(WordError::PresentationFormat("no generators declared".into()));
        }
        let mut relators = Vec::new();
        for line in lines {
            let body = line.trim().strip_prefix("rel:").ok_or_else(|| {
                WordError::PresentationFormat(format!("expected `rel:` line, got `{}`", line.trim()))
            })?;
            relators.push(parse_word(body.trim(), &generators)?);
        }
        Presentation::new(generators, relators)
    }

    /// Serializes to the presentation file format.
    pub fn to_file_string(&self) -> String {
        let mut out = format!("gens: {}\n", self.generators.join(", "));
        for rel in &self.relators {
            out.push_str(&format!("rel: {}\n", rel.render()));
        }
        out
    }
}

/// Normal form in the Klein bottle group `<m, l | l*m*l^-1*m>`: every element
/// is uniquely `m^a l^b`. The sweep uses `l m^k = m^-k l`.
pub fn klein_nf(w: &Word) -> Result<(i64, i64), WordError> {
    let mut a = 0i64;
    let mut b = 0i64;
    for (gen, exp) in w.syllables() {
        match gen.as_str() {
            "m" => {
                a += if b % 2 == 0 { *exp } else { -*exp };
            }
            "l" => b += exp,
            other => return Err(WordError::OutsideAlphabet(other.to_string())),
        }
    }
    Ok((a, b))
}

/// The Klein bottle presentation `<m, l | l*m*l^-1*m>`.
pub fn klein_bottle_presentation() -> Presentation {
    let gens = vec!["m".to_string(), "l".to_string()];
    let rel = Word::from_syllables([
        ("l".to_string(), 1),
        ("m".to_string(), 1),
        ("l".to_string(), -1),
        ("m".to_string(), 1),
    ]);
    Presentation::new(gens, vec![rel]).unwrap()
}

/// Emits the three-relator presentation of the punctured-torus-bundle Dehn
/// fillings with monodromy `[[m, 1], [-1, 0]]`:
///
/// ```text
/// < t, a, b | t^-1 a t = a b a^(m-1),  t^-1 b t = a^-1,  t^-p = (a b a^-1 b^-1)^q >
/// ```
///
/// Requires `gcd(p, q) = 1`, `p > q >= 1`, `m` odd and `m < -2`.
pub fn rss_presentation(p: i64, q: i64, m: i64) -> Result<Presentation, WordError> {
    if q < 1 || p <= q {
        return Err(WordError::InvalidParameters(format!(
            "need p > q >= 1, got p={p}, q={q}"
        )));
    }
    if num_integer::gcd(p, q) != 1 {
        return Err(WordError::InvalidParameters(format!(
            "need gcd(p, q) = 1, got p={p}, q={q}"
        )));
    }
    if m.rem_euclid(2) == 0 || m >= -2 {
        return Err(WordError::InvalidParameters(format!(
            "need m odd and m < -2, got m={m}"
        )));
    }
    let t = |e| ("t".to_string(), e);
    let a = |e| ("a".to_string(), e);
    let b = |e| ("b".to_string(), e);
    // t^-1 a t (a b a^(m-1))^-1
    let r1 = Word::from_syllables(vec![t(-1), a(1), t(1), a(-(m - 1)), b(-1), a(-1)]);
    // t^-1 b t a
    let r2 = Word::from_syllables(vec![t(-1), b(1), t(1), a(1)]);
    // t^-p ((a b a^-1 b^-1)^q)^-1
    let mut r3 = vec![t(-p)];
    for _ in 0..q {
        r3.extend_from_slice(&[b(1), a(1), b(-1), a(-1)]);
    }
    let r3 = Word::from_syllables(r3);
    Presentation::new(
        vec!["t".to_string(), "a".to_string(), "b".to_string()],
        vec![r1, r2, r3],
    )
}
