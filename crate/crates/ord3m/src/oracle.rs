//! Exact word-problem oracles for the group families the positive-cone
//! search supports.
//!
//! Each family comes with a canonical-form key: two words represent the same
//! group element exactly when their keys agree. The family list is a closed
//! enumeration; soundness of cone-search refutations depends on every oracle
//! being an exact decision procedure, and arbitrary presentations do not
//! admit one.

use crate::amalgam;
use crate::trefoil;
use crate::words::{klein_nf, Word, WordError};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EqualityOracle {
    /// Free group of the given rank.
    Free { rank: usize },
    /// Free abelian group of the given rank.
    FreeAbelian { rank: usize },
    /// Cyclic group of order `modulus` (torsion target for the cone search).
    Cyclic { modulus: u64 },
    /// Klein bottle group `<m, l | l*m*l^-1 = m^-1>`.
    KleinBottle,
    /// Trefoil group `<x, y | x^2 = y^3>`.
    TorusKnot23,
    /// The union of two trefoil exteriors with meridian and fibre exchanged.
    BswAmalgam,
}

fn letter_names(rank: usize) -> Vec<String> {
    (0..rank)
        .map(|i| {
            if rank <= 26 {
                ((b'a' + i as u8) as char).to_string()
            } else {
                format!("x{}", i + 1)
            }
        })
        .collect()
}

impl EqualityOracle {
    pub fn generators(&self) -> Vec<String> {
        match self {
            EqualityOracle::Free { rank } | EqualityOracle::FreeAbelian { rank } => {
                letter_names(*rank)
            }
            EqualityOracle::Cyclic { .. } => vec!["a".to_string()],
            EqualityOracle::KleinBottle => vec!["m".to_string(), "l".to_string()],
            EqualityOracle::TorusKnot23 => vec!["x".to_string(), "y".to_string()],
            EqualityOracle::BswAmalgam => amalgam::bsw_generators(),
        }
    }

    fn check_alphabet(&self, w: &Word) -> Result<(), WordError> {
        let gens = self.generators();
        for (g, _) in w.syllables() {
            if !gens.iter().any(|name| name == g) {
                return Err(WordError::OutsideAlphabet(g.clone()));
            }
        }
        Ok(())
    }

    /// Canonical form of the element represented by `w`.
    pub fn canonical_key(&self, w: &Word) -> Result<String, WordError> {
        self.check_alphabet(w)?;
        match self {
            EqualityOracle::Free { .. } => Ok(w.render()),
            EqualityOracle::FreeAbelian { rank } => {
                let gens = letter_names(*rank);
                let sums: Vec<String> = gens
                    .iter()
                    .map(|g| w.exponent_sum(g).to_string())
                    .collect();
                Ok(sums.join(","))
            }
            EqualityOracle::Cyclic { modulus } => {
                let e = w.exponent_sum("a").rem_euclid(*modulus as i64);
                Ok(e.to_string())
            }
            EqualityOracle::KleinBottle => {
                let (a, b) = klein_nf(w)?;
                Ok(format!("{a},{b}"))
            }
            EqualityOracle::TorusKnot23 => Ok(trefoil::torus_knot_nf(w)?.key()),
            EqualityOracle::BswAmalgam => Ok(amalgam::amalgam_nf(w)?.key()),
        }
    }

    /// Exact equality test: true iff the words represent the same element.
    pub fn equal(&self, w1: &Word, w2: &Word) -> Result<bool, WordError> {
        Ok(self.canonical_key(w1)? == self.canonical_key(w2)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::parse_word;

    #[test]
    fn free_oracle_is_reduction() {
        let o = EqualityOracle::Free { rank: 2 };
        let g = o.generators();
        let u = parse_word("a*b*b^-1*a", &g).unwrap();
        let v = parse_word("a^2", &g).unwrap();
        assert!(o.equal(&u, &v).unwrap());
        assert!(!o.equal(&u, &parse_word("b", &g).unwrap()).unwrap());
    }

    #[test]
    fn abelian_oracle_commutes() {
        let o = EqualityOracle::FreeAbelian { rank: 2 };
        let g = o.generators();
        let u = parse_word("a*b", &g).unwrap();
        let v = parse_word("b*a", &g).unwrap();
        assert!(o.equal(&u, &v).unwrap());
    }

    #[test]
    fn cyclic_oracle_has_torsion() {
        let o = EqualityOracle::Cyclic { modulus: 2 };
        let g = o.generators();
        let a = parse_word("a", &g).unwrap();
        assert!(o.equal(&a.pow(2), &Word::identity()).unwrap());
        assert!(o.equal(&a, &a.inverse()).unwrap());
        assert!(!o.equal(&a, &Word::identity()).unwrap());
    }

    #[test]
    fn klein_oracle_relation() {
        let o = EqualityOracle::KleinBottle;
        let g = o.generators();
        let lhs = parse_word("l*m*l^-1", &g).unwrap();
        let rhs = parse_word("m^-1", &g).unwrap();
        assert!(o.equal(&lhs, &rhs).unwrap());
    }

    #[test]
    fn alphabet_mismatch_is_an_error() {
        let o = EqualityOracle::KleinBottle;
        let w = Word::generator("x", 1);
        assert!(o.canonical_key(&w).is_err());
    }
}
