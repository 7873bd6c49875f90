//! Normal forms in the trefoil group `T = <x, y | x^2 = y^3>`.
//!
//! `T` is a central extension of `Z/2 * Z/3` by the infinite cyclic centre
//! generated by `h = x^2 = y^3`. Every element is uniquely `h^k * w` where
//! `w` is an alternating word over the lifted letters `x`, `y`, `y^2`.
//! Equality of group elements is equality of normal forms.

use std::fmt;

use crate::words::{Word, WordError};

/// A letter of the lifted alternating word: `x`, `y` or `y^2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TkLetter {
    X,
    Y,
    Y2,
}

impl TkLetter {
    #[cfg(test)]
    fn is_x(self) -> bool {
        matches!(self, TkLetter::X)
    }
}

impl fmt::Display for TkLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TkLetter::X => write!(f, "x"),
            TkLetter::Y => write!(f, "y"),
            TkLetter::Y2 => write!(f, "Y"),
        }
    }
}

/// Normal form `h^k * s_1 ... s_n` with the `s_i` alternating between the
/// `x`-type letter and the `y`-type letters.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct TorusKnotNF {
    pub h_exponent: i64,
    pub syllables: Vec<TkLetter>,
}

impl TorusKnotNF {
    pub fn identity() -> Self {
        TorusKnotNF { h_exponent: 0, syllables: Vec::new() }
    }

    pub fn is_identity(&self) -> bool {
        self.h_exponent == 0 && self.syllables.is_empty()
    }

    /// Right-multiplies by a single `x`. Uses `x * x = h`.
    fn push_x(&mut self) {
        if self.syllables.last().copied() == Some(TkLetter::X) {
            self.syllables.pop();
            self.h_exponent += 1;
        } else {
            self.syllables.push(TkLetter::X);
        }
    }

    /// Right-multiplies by a single `y`. Uses `y^2 * y = h`.
    fn push_y(&mut self) {
        match self.syllables.last().copied() {
            Some(TkLetter::Y) => {
                self.syllables.pop();
                self.syllables.push(TkLetter::Y2);
            }
            Some(TkLetter::Y2) => {
                self.syllables.pop();
                self.h_exponent += 1;
            }
            _ => self.syllables.push(TkLetter::Y),
        }
    }

    /// Right-multiplies by `x^e` or `y^e` (the letter rewrites
    /// `x^-1 = h^-1 x` and `y^-1 = h^-1 y^2` handle negative exponents).
    pub fn push_generator(&mut self, gen: TkGen, exponent: i64) {
        for _ in 0..exponent.unsigned_abs() {
            match (gen, exponent > 0) {
                (TkGen::X, true) => self.push_x(),
                (TkGen::X, false) => {
                    self.h_exponent -= 1;
                    self.push_x();
                }
                (TkGen::Y, true) => self.push_y(),
                (TkGen::Y, false) => {
                    self.h_exponent -= 1;
                    self.push_y();
                    self.push_y();
                }
            }
        }
    }

    pub fn mul(&self, other: &TorusKnotNF) -> TorusKnotNF {
        let mut out = self.clone();
        out.h_exponent += other.h_exponent;
        for letter in &other.syllables {
            match letter {
                TkLetter::X => out.push_x(),
                TkLetter::Y => out.push_y(),
                TkLetter::Y2 => {
                    out.push_y();
                    out.push_y();
                }
            }
        }
        out
    }

    pub fn inverse(&self) -> TorusKnotNF {
        let mut out = TorusKnotNF::identity();
        out.h_exponent = -self.h_exponent;
        for letter in self.syllables.iter().rev() {
            match letter {
                // x^-1 = h^-1 x
                TkLetter::X => {
                    out.h_exponent -= 1;
                    out.push_x();
                }
                // y^-1 = h^-1 y^2
                TkLetter::Y => {
                    out.h_exponent -= 1;
                    out.push_y();
                    out.push_y();
                }
                // y^-2 = h^-1 y
                TkLetter::Y2 => {
                    out.h_exponent -= 1;
                    out.push_y();
                }
            }
        }
        out
    }

    /// The normal form of the central element `h^k`.
    pub fn h_power(k: i64) -> TorusKnotNF {
        TorusKnotNF { h_exponent: k, syllables: Vec::new() }
    }

    /// The normal form of `c^q` where `c = x * y^-1`.
    ///
    /// `c = h^-1 x y^2`, and the alternating words `(x y^2)^q`, `(y x)^q`
    /// never reduce, so `c^q = h^-q (x y^2)^q` and `c^-q = h^-q (y x)^q`
    /// for `q > 0`.
    pub fn c_power(q: i64) -> TorusKnotNF {
        let mut syllables = Vec::new();
        if q > 0 {
            for _ in 0..q {
                syllables.push(TkLetter::X);
                syllables.push(TkLetter::Y2);
            }
        } else {
            for _ in 0..(-q) {
                syllables.push(TkLetter::Y);
                syllables.push(TkLetter::X);
            }
        }
        TorusKnotNF { h_exponent: -q.abs(), syllables }
    }

    pub fn key(&self) -> String {
        let mut s = format!("{}", self.h_exponent);
        for letter in &self.syllables {
            s.push_str(&letter.to_string());
        }
        s
    }

    #[cfg(test)]
    fn alternates(&self) -> bool {
        self.syllables
            .windows(2)
            .all(|w| w[0].is_x() != w[1].is_x())
    }
}

/// The two generators of the trefoil group.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TkGen {
    X,
    Y,
}

/// Normal form of a word over `{x, y}`.
pub fn torus_knot_nf(w: &Word) -> Result<TorusKnotNF, WordError> {
    let mut nf = TorusKnotNF::identity();
    for (gen, exp) in w.syllables() {
        let g = match gen.as_str() {
            "x" => TkGen::X,
            "y" => TkGen::Y,
            other => return Err(WordError::OutsideAlphabet(other.to_string())),
        };
        nf.push_generator(g, *exp);
    }
    Ok(nf)
}

/// Which vertex copy of the trefoil group an element lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    One,
    Two,
}

/// Membership in the edge subgroup `A = <h, c>` with `h = x^2`, `c = x y^-1`.
///
/// Returns `(p, q)` with the element equal to `h^p c^q` if the syllable word
/// is the normal-form word of some `c^q`, otherwise `None`. The subgroup is
/// the same in both vertex copies; `which_side` only labels the copy.
pub fn bsw_edge_membership(nf: &TorusKnotNF, _which_side: Side) -> Option<(i64, i64)> {
    let w = &nf.syllables;
    if w.is_empty() {
        return Some((nf.h_exponent, 0));
    }
    if w.len() % 2 != 0 {
        return None;
    }
    let q = (w.len() / 2) as i64;
    if w.chunks(2).all(|p| p == [TkLetter::X, TkLetter::Y2]) {
        // (x y^2)^q = h^q c^q
        return Some((nf.h_exponent + q, q));
    }
    if w.chunks(2).all(|p| p == [TkLetter::Y, TkLetter::X]) {
        // (y x)^q = h^q c^-q
        return Some((nf.h_exponent + q, -q));
    }
    None
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

    fn nf(text: &str) -> TorusKnotNF {
        torus_knot_nf(&parse_word(text, &gens()).unwrap()).unwrap()
    }

    #[test]
    fn nf_examples() {
        assert_eq!(nf("x^2"), TorusKnotNF::h_power(1));
        assert_eq!(
            nf("y^-1"),
            TorusKnotNF { h_exponent: -1, syllables: vec![TkLetter::Y2] }
        );
        assert_eq!(
            nf("x*y^-1"),
            TorusKnotNF { h_exponent: -1, syllables: vec![TkLetter::X, TkLetter::Y2] }
        );
    }

    #[test]
    fn h_is_central() {
        // nf(w * x^2 * w^-1) = nf(w * w^-1) with h-exponent bumped by one
        for text in ["x", "y", "x*y", "y^-1*x*y^2", "x*y*x*y^-1"] {
            let w = parse_word(text, &gens()).unwrap();
            let conj = w.mul(&parse_word("x^2", &gens()).unwrap()).mul(&w.inverse());
            let got = torus_knot_nf(&conj).unwrap();
            assert_eq!(got, TorusKnotNF::h_power(1), "conjugating h by {text}");
        }
    }

    fn random_word(rng: &mut StdRng, max_len: usize) -> Word {
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
    fn nf_respects_multiplication() {
        // nf(u*v) equals nf-of-u times nf-of-v, 1000 random pairs
        let mut rng = StdRng::seed_from_u64(7);
        for _ in 0..1000 {
            let u = random_word(&mut rng, 6);
            let v = random_word(&mut rng, 6);
            let lhs = torus_knot_nf(&u.mul(&v)).unwrap();
            let rhs = torus_knot_nf(&u).unwrap().mul(&torus_knot_nf(&v).unwrap());
            assert_eq!(lhs, rhs);
            assert!(lhs.alternates());
        }
    }

    #[test]
    fn inverse_is_exact() {
        let mut rng = StdRng::seed_from_u64(8);
        for _ in 0..500 {
            let u = random_word(&mut rng, 6);
            let n = torus_knot_nf(&u).unwrap();
            assert_eq!(n.mul(&n.inverse()), TorusKnotNF::identity());
            assert_eq!(n.inverse(), torus_knot_nf(&u.inverse()).unwrap());
        }
    }

    #[test]
    fn c_power_matches_word() {
        let c = parse_word("x*y^-1", &gens()).unwrap();
        for q in -5i64..=5 {
            assert_eq!(torus_knot_nf(&c.pow(q)).unwrap(), TorusKnotNF::c_power(q));
        }
    }

    #[test]
    fn edge_membership_examples() {
        assert_eq!(
            bsw_edge_membership(&TorusKnotNF::identity(), Side::One),
            Some((0, 0))
        );
        // x*y^-1 = c, so h^0 c^1
        assert_eq!(bsw_edge_membership(&nf("x*y^-1"), Side::One), Some((0, 1)));
        assert_eq!(bsw_edge_membership(&nf("y"), Side::One), None);
    }

    #[test]
    fn edge_membership_agrees_with_c_powers() {
        for p in -3i64..=3 {
            for q in -4i64..=4 {
                let elem = TorusKnotNF::h_power(p).mul(&TorusKnotNF::c_power(q));
                assert_eq!(bsw_edge_membership(&elem, Side::Two), Some((p, q)));
            }
        }
    }
}
