//! Truncated noncommutative integer power series and the induced bi-order
//! on free groups.
//!
//! The embedding sends a generator `x` to `1 + X` and `x^-1` to the
//! geometric series `1 - X + X^2 - ...`, truncated at a fixed degree. Series
//! are compared term by term, monomials arranged in ascending degree and
//! lexicographically within a degree; a group element is positive when the
//! first nonconstant coefficient of its image is positive. Restricted to the
//! units with constant term one this is a bi-invariant total order, and the
//! embedding is injective, so comparing two words terminates by raising the
//! truncation degree until a difference appears.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::words::{Word, WordError};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MagnusError {
    #[error("truncation degrees differ: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("generator `{0}` has no variable assigned")]
    UnassignedGenerator(String),
    #[error(transparent)]
    Word(#[from] WordError),
}

/// A noncommuting variable: a plain index for finite-rank free groups, or a
/// lattice pair for the plane of generators used by the surface order.
/// Lattice pairs are ordered lexicographically.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum VarId {
    Plain(u32),
    Lattice(i64, i64),
}

impl fmt::Display for VarId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VarId::Plain(i) => write!(f, "X{i}"),
            VarId::Lattice(i, j) => write!(f, "X({i},{j})"),
        }
    }
}

/// A word in the variables; the empty monomial is the constant term.
/// Ordered by degree first, then lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<VarId>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

/// Truncated series with sparse integer coefficients; zero coefficients are
/// never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MagnusSeries {
    degree: usize,
    terms: BTreeMap<Monomial, i128>,
}

impl MagnusSeries {
    pub fn zero(degree: usize) -> Self {
        MagnusSeries { degree, terms: BTreeMap::new() }
    }

    pub fn one(degree: usize) -> Self {
        let mut s = MagnusSeries::zero(degree);
        s.terms.insert(Monomial::one(), 1);
        s
    }

    pub fn truncation_degree(&self) -> usize {
        self.degree
    }

    pub fn coefficient(&self, m: &Monomial) -> i128 {
        self.terms.get(m).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, i128)> {
        self.terms.iter().map(|(m, &c)| (m, c))
    }

    fn insert(&mut self, m: Monomial, c: i128) {
        if m.degree() > self.degree || c == 0 {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(slot) => {
                slot.insert(c);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if *slot.get() == 0 {
                    slot.remove();
                }
            }
        }
    }

    /// Truncating product.
    pub fn mul(&self, other: &MagnusSeries) -> MagnusSeries {
        assert_eq!(self.degree, other.degree);
        let mut out = MagnusSeries::zero(self.degree);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                if m1.degree() + m2.degree() > self.degree {
                    continue;
                }
                let mut word = m1.0.clone();
                word.extend_from_slice(&m2.0);
                out.insert(Monomial(word), c1 * c2);
            }
        }
        out
    }

    /// Image of a single generator power: `(1 + V)^e` for positive `e`,
    /// `(1 - V + V^2 - ...)^{|e|}` for negative `e`.
    pub fn generator_power(var: VarId, exponent: i64, degree: usize) -> MagnusSeries {
        let base = if exponent >= 0 {
            let mut s = MagnusSeries::one(degree);
            s.insert(Monomial(vec![var]), 1);
            s
        } else {
            let mut s = MagnusSeries::zero(degree);
            let mut sign = 1i128;
            for d in 0..=degree {
                s.insert(Monomial(vec![var; d]), sign);
                sign = -sign;
            }
            s
        };
        let mut out = MagnusSeries::one(degree);
        for _ in 0..exponent.unsigned_abs() {
            out = out.mul(&base);
        }
        out
    }

    /// First nonconstant monomial with a nonzero coefficient, if any.
    pub fn leading_term(&self) -> Option<(&Monomial, i128)> {
        self.terms
            .iter()
            .find(|(m, _)| m.degree() >= 1)
            .map(|(m, &c)| (m, c))
    }
}

/// Deterministic assignment of generators to variables.
#[derive(Debug, Clone, Default)]
pub struct VarMap(BTreeMap<String, VarId>);

impl VarMap {
    /// Generators in declaration order become `X0, X1, ...`.
    pub fn from_generators(gens: &[String]) -> Self {
        VarMap(
            gens.iter()
                .enumerate()
                .map(|(i, g)| (g.clone(), VarId::Plain(i as u32)))
                .collect(),
        )
    }

    pub fn insert(&mut self, gen: &str, var: VarId) {
        self.0.insert(gen.to_string(), var);
    }

    pub fn get(&self, gen: &str) -> Option<VarId> {
        self.0.get(gen).copied()
    }
}

/// Image of a word under the series embedding, truncated at `degree`.
pub fn magnus_embed(w: &Word, vars: &VarMap, degree: usize) -> Result<MagnusSeries, MagnusError> {
    let letters: Result<Vec<(VarId, i64)>, MagnusError> = w
        .syllables()
        .iter()
        .map(|(g, e)| {
            vars.get(g)
                .map(|v| (v, *e))
                .ok_or_else(|| MagnusError::UnassignedGenerator(g.clone()))
        })
        .collect();
    Ok(embed_syllables(&letters?, degree))
}

/// Embedding for syllables that already carry their variables.
pub fn embed_syllables(syllables: &[(VarId, i64)], degree: usize) -> MagnusSeries {
    let mut out = MagnusSeries::one(degree);
    for &(var, exp) in syllables {
        out = out.mul(&MagnusSeries::generator_power(var, exp, degree));
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeriesOrdering {
    Lt,
    /// All coefficients up to the truncation degree agree.
    EqAtTruncation,
    Gt,
}

/// Compares coefficient sequences in (degree, lexicographic) monomial order.
pub fn series_compare(
    s1: &MagnusSeries,
    s2: &MagnusSeries,
) -> Result<SeriesOrdering, MagnusError> {
    if s1.truncation_degree() != s2.truncation_degree() {
        return Err(MagnusError::DegreeMismatch(
            s1.truncation_degree(),
            s2.truncation_degree(),
        ));
    }
    let mut it1 = s1.terms.iter().peekable();
    let mut it2 = s2.terms.iter().peekable();
    loop {
        match (it1.peek(), it2.peek()) {
            (None, None) => return Ok(SeriesOrdering::EqAtTruncation),
            (Some((m1, c1)), Some((m2, c2))) => match m1.cmp(m2) {
                std::cmp::Ordering::Equal => {
                    if c1 != c2 {
                        return Ok(if c1 > c2 { SeriesOrdering::Gt } else { SeriesOrdering::Lt });
                    }
                    it1.next();
                    it2.next();
                }
                // s1 has a term s2 lacks: compare its coefficient with zero
                std::cmp::Ordering::Less => {
                    return Ok(if **c1 > 0 { SeriesOrdering::Gt } else { SeriesOrdering::Lt });
                }
                std::cmp::Ordering::Greater => {
                    return Ok(if **c2 > 0 { SeriesOrdering::Lt } else { SeriesOrdering::Gt });
                }
            },
            (Some((_, c1)), None) => {
                return Ok(if **c1 > 0 { SeriesOrdering::Gt } else { SeriesOrdering::Lt });
            }
            (None, Some((_, c2))) => {
                return Ok(if **c2 > 0 { SeriesOrdering::Lt } else { SeriesOrdering::Gt });
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Comparison {
    Lt,
    Eq,
    Gt,
}

/// Total bi-invariant order on a free group: `w1 < w2` iff the image of
/// `w1^-1 w2` exceeds one.
pub fn magnus_compare(w1: &Word, w2: &Word, vars: &VarMap) -> Result<Comparison, MagnusError> {
    let d = w1.inverse().mul(w2);
    if d.is_identity() {
        return Ok(Comparison::Eq);
    }
    let letters: Result<Vec<(VarId, i64)>, MagnusError> = d
        .syllables()
        .iter()
        .map(|(g, e)| {
            vars.get(g)
                .map(|v| (v, *e))
                .ok_or_else(|| MagnusError::UnassignedGenerator(g.clone()))
        })
        .collect();
    Ok(compare_letters_to_one(&letters?))
}

/// Sign of a nontrivial free-group element given as variable syllables:
/// `Lt` means the element is positive (so a left-hand word is smaller).
pub(crate) fn compare_letters_to_one(syllables: &[(VarId, i64)]) -> Comparison {
    // The first nonvanishing term sits at the lower-central depth of the
    // element, finite because the embedding is injective; double until found.
    // Truncating below that depth leaves the series equal to one, and any
    // truncation at or above it exposes the same leading term, so starting
    // low is sound and keeps the series small.
    let mut degree = 2;
    loop {
        let s = embed_syllables(syllables, degree);
        if let Some((_, c)) = s.leading_term() {
            return if c > 0 { Comparison::Lt } else { Comparison::Gt };
        }
        degree *= 2;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::parse_word;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn gens() -> Vec<String> {
        vec!["x".to_string(), "y".to_string()]
    }

    fn vm() -> VarMap {
        VarMap::from_generators(&gens())
    }

    fn mono(vars: &[u32]) -> Monomial {
        Monomial(vars.iter().map(|&i| VarId::Plain(i)).collect())
    }

    #[test]
    fn embed_generator() {
        let w = parse_word("x", &gens()).unwrap();
        let s = magnus_embed(&w, &vm(), 3).unwrap();
        assert_eq!(s.coefficient(&Monomial::one()), 1);
        assert_eq!(s.coefficient(&mono(&[0])), 1);
        assert_eq!(s.terms().count(), 2);
    }

    #[test]
    fn embed_inverse_is_geometric() {
        let w = parse_word("x^-1", &gens()).unwrap();
        let s = magnus_embed(&w, &vm(), 3).unwrap();
        assert_eq!(s.coefficient(&Monomial::one()), 1);
        assert_eq!(s.coefficient(&mono(&[0])), -1);
        assert_eq!(s.coefficient(&mono(&[0, 0])), 1);
        assert_eq!(s.coefficient(&mono(&[0, 0, 0])), -1);
    }

    #[test]
    fn embed_commutator() {
        let w = parse_word("x*y*x^-1*y^-1", &gens()).unwrap();
        let s = magnus_embed(&w, &vm(), 2).unwrap();
        assert_eq!(s.coefficient(&Monomial::one()), 1);
        assert_eq!(s.coefficient(&mono(&[0])), 0);
        assert_eq!(s.coefficient(&mono(&[1])), 0);
        assert_eq!(s.coefficient(&mono(&[0, 1])), 1);
        assert_eq!(s.coefficient(&mono(&[1, 0])), -1);
        assert_eq!(s.coefficient(&mono(&[0, 0])), 0);
    }

    #[test]
    fn series_compare_examples() {
        let one = MagnusSeries::one(2);
        let x = embed_syllables(&[(VarId::Plain(0), 1)], 2);
        assert_eq!(series_compare(&x, &one).unwrap(), SeriesOrdering::Gt);
        let comm = magnus_embed(&parse_word("x*y*x^-1*y^-1", &gens()).unwrap(), &vm(), 2).unwrap();
        assert_eq!(series_compare(&comm, &one).unwrap(), SeriesOrdering::Gt);
        assert_eq!(series_compare(&x, &x).unwrap(), SeriesOrdering::EqAtTruncation);
        let deg3 = MagnusSeries::one(3);
        assert!(series_compare(&one, &deg3).is_err());
    }

    #[test]
    fn compare_examples() {
        let id = Word::identity();
        let x = parse_word("x", &gens()).unwrap();
        let xx = parse_word("x^2", &gens()).unwrap();
        let comm = parse_word("x*y*x^-1*y^-1", &gens()).unwrap();
        assert_eq!(magnus_compare(&x, &id, &vm()).unwrap(), Comparison::Gt);
        assert_eq!(magnus_compare(&x, &xx, &vm()).unwrap(), Comparison::Lt);
        assert_eq!(magnus_compare(&comm, &id, &vm()).unwrap(), Comparison::Gt);
        assert_eq!(magnus_compare(&x, &x, &vm()).unwrap(), Comparison::Eq);
    }

    pub(crate) fn random_reduced(rng: &mut StdRng, max_len: usize) -> Word {
        let len = rng.gen_range(0..=max_len);
        let mut syls = Vec::new();
        for _ in 0..len {
            let g = if rng.gen_bool(0.5) { "x" } else { "y" };
            let e = if rng.gen_bool(0.5) { 1 } else { -1 };
            syls.push((g.to_string(), e));
        }
        Word::from_syllables(syls)
    }

    #[test]
    fn homomorphism_on_products() {
        let mut rng = StdRng::seed_from_u64(31);
        for _ in 0..200 {
            let u = random_reduced(&mut rng, 6);
            let v = random_reduced(&mut rng, 6);
            let d = 4;
            let lhs = magnus_embed(&u.mul(&v), &vm(), d).unwrap();
            let rhs = magnus_embed(&u, &vm(), d)
                .unwrap()
                .mul(&magnus_embed(&v, &vm(), d).unwrap());
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn total_order_axioms_sampled() {
        let mut rng = StdRng::seed_from_u64(32);
        let words: Vec<Word> = (0..60).map(|_| random_reduced(&mut rng, 6)).collect();
        for u in &words {
            for v in &words {
                let uv = magnus_compare(u, v, &vm()).unwrap();
                let vu = magnus_compare(v, u, &vm()).unwrap();
                match uv {
                    Comparison::Eq => assert_eq!(vu, Comparison::Eq),
                    Comparison::Lt => assert_eq!(vu, Comparison::Gt),
                    Comparison::Gt => assert_eq!(vu, Comparison::Lt),
                }
            }
        }
    }

    #[test]
    fn torsion_free_powers() {
        let mut rng = StdRng::seed_from_u64(33);
        let mut tried = 0;
        while tried < 40 {
            let w = random_reduced(&mut rng, 5);
            if w.is_identity() {
                continue;
            }
            tried += 1;
            let sign = magnus_compare(&w, &Word::identity(), &vm()).unwrap();
            for n in 1..=5i64 {
                let p = w.pow(n);
                assert!(!p.is_identity());
                assert_eq!(
                    magnus_compare(&p, &Word::identity(), &vm()).unwrap(),
                    sign
                );
            }
        }
    }
}
