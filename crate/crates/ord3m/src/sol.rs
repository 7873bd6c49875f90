//! Sol manifolds and the complete orderability classification of their
//! fundamental groups.
//!
//! Closed Sol manifolds are torus or Klein-bottle bundles over the circle,
//! or unions of two twisted I-bundles over the Klein bottle; bounded ones
//! are one of five simple pieces. All eigenvalue questions reduce to exact
//! integer sign tests on the determinant and trace of the monodromy.

use thiserror::Error;

use crate::verdict::{Reason, Verdict};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SolError {
    #[error("matrix [[{a},{b}],[{c},{d}]] has determinant {det}, not ±1")]
    NotUnimodular { a: i64, b: i64, c: i64, d: i64, det: i64 },
    #[error("matrix is not a Sol monodromy (eigenvalues on the unit circle)")]
    NotSol,
}

/// An integer matrix with determinant ±1.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GL2Z {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub d: i64,
}

impl GL2Z {
    pub fn new(a: i64, b: i64, c: i64, d: i64) -> Result<Self, SolError> {
        let det = a * d - b * c;
        if det.abs() != 1 {
            return Err(SolError::NotUnimodular { a, b, c, d, det });
        }
        Ok(GL2Z { a, b, c, d })
    }

    pub fn det(&self) -> i64 {
        self.a * self.d - self.b * self.c
    }

    pub fn trace(&self) -> i64 {
        self.a + self.d
    }

    pub fn mul(&self, o: &GL2Z) -> GL2Z {
        GL2Z {
            a: self.a * o.a + self.b * o.c,
            b: self.a * o.b + self.b * o.d,
            c: self.c * o.a + self.d * o.c,
            d: self.c * o.b + self.d * o.d,
        }
    }

    pub fn inverse(&self) -> GL2Z {
        let det = self.det();
        // for det = ±1 the adjugate divided by det stays integral
        GL2Z {
            a: self.d * det,
            b: -self.b * det,
            c: -self.c * det,
            d: self.a * det,
        }
    }
}

/// Anosov test: real eigenvalues off the unit circle. For determinant one
/// this is `|tr| > 2`; for determinant minus one it is `|tr(A^2)| > 2`,
/// which since `tr(A^2) = tr^2 + 2` amounts to `tr != 0`.
pub fn is_sol_monodromy(m: &GL2Z) -> bool {
    match m.det() {
        1 => m.trace().abs() > 2,
        -1 => m.trace() != 0,
        _ => unreachable!("validated at construction"),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundaryKind {
    Ball,
    SolidTorus,
    SolidKleinBottle,
    TorusXInterval,
    TwistedIBundleOverK,
}

/// A compact connected Sol manifold.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolManifold {
    TorusBundle(GL2Z),
    KleinBottleBundle,
    /// Orientable union of two twisted I-bundles over the Klein bottle,
    /// glued along their torus boundaries.
    UnionTwistedIBundlesTorusGlue(GL2Z),
    /// Non-orientable union glued along Klein-bottle boundaries.
    UnionTwistedIBundlesKleinGlue,
    Boundary(BoundaryKind),
}

impl SolManifold {
    pub fn torus_bundle(m: GL2Z) -> Result<Self, SolError> {
        if !is_sol_monodromy(&m) {
            return Err(SolError::NotSol);
        }
        Ok(SolManifold::TorusBundle(m))
    }

    pub fn union_torus_glue(m: GL2Z) -> Result<Self, SolError> {
        if !is_sol_monodromy(&m) {
            return Err(SolError::NotSol);
        }
        Ok(SolManifold::UnionTwistedIBundlesTorusGlue(m))
    }
}

/// Left-orderability: yes for every bounded piece, every non-orientable
/// closed case, and every torus bundle; no exactly for the orientable union
/// of two twisted I-bundles glued along a torus.
pub fn sol_is_left_orderable(m: &SolManifold) -> Verdict {
    match m {
        SolManifold::Boundary(_) => Verdict::yes(Reason::NonemptyBoundary),
        SolManifold::TorusBundle(_) => Verdict::yes(Reason::TorusBundle),
        SolManifold::KleinBottleBundle | SolManifold::UnionTwistedIBundlesKleinGlue => {
            Verdict::yes(Reason::NonOrientableSol)
        }
        SolManifold::UnionTwistedIBundlesTorusGlue(_) => Verdict::no(Reason::TorusGlueUnion),
    }
}

/// Bi-orderability: a torus bundle is bi-orderable exactly when the
/// monodromy has a positive eigenvalue (automatic for determinant -1, and
/// `tr > 2` for determinant one); bounded pieces are bi-orderable except the
/// twisted I-bundle over the Klein bottle; nothing else is.
pub fn sol_is_biorderable(m: &SolManifold) -> Verdict {
    match m {
        SolManifold::Boundary(BoundaryKind::TwistedIBundleOverK) => {
            Verdict::no(Reason::TwistedIBundleOverK)
        }
        SolManifold::Boundary(_) => Verdict::yes(Reason::NonemptyBoundary),
        SolManifold::TorusBundle(a) => {
            if a.det() == -1 {
                // eigenvalue pair (λ, -1/λ) always contains a positive real
                Verdict::yes(Reason::PositiveEigenvalue)
            } else if a.trace() > 2 {
                Verdict::yes(Reason::PositiveEigenvalue)
            } else {
                Verdict::no(Reason::NegativeEigenvalues)
            }
        }
        SolManifold::KleinBottleBundle
        | SolManifold::UnionTwistedIBundlesKleinGlue
        | SolManifold::UnionTwistedIBundlesTorusGlue(_) => {
            Verdict::no(Reason::Pi1InjectiveKleinBottle)
        }
    }
}

/// Every closed Sol manifold is finitely covered by a torus bundle with
/// positive eigenvalues, and the bounded pieces are bi-orderable up to the
/// double cover of the twisted I-bundle.
pub fn sol_is_virtually_biorderable(_m: &SolManifold) -> Verdict {
    Verdict::yes(Reason::VirtuallyBiorderable)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn m(a: i64, b: i64, c: i64, d: i64) -> GL2Z {
        GL2Z::new(a, b, c, d).unwrap()
    }

    #[test]
    fn monodromy_examples() {
        assert!(is_sol_monodromy(&m(2, 1, 1, 1)));
        assert!(!is_sol_monodromy(&m(1, 1, 0, 1))); // Nil, trace 2
        assert!(!is_sol_monodromy(&m(0, 1, 1, 0))); // det -1, trace 0
        assert!(is_sol_monodromy(&m(1, 1, 1, 0))); // det -1, trace 1
        assert!(GL2Z::new(2, 0, 0, 2).is_err());
    }

    #[test]
    fn lo_examples() {
        let tb = SolManifold::torus_bundle(m(2, 1, 1, 1)).unwrap();
        assert!(sol_is_left_orderable(&tb).yes);

        let union = SolManifold::union_torus_glue(m(2, 1, 1, 1)).unwrap();
        let v = sol_is_left_orderable(&union);
        assert!(!v.yes);
        assert_eq!(v.reason, Reason::TorusGlueUnion);

        let tw = SolManifold::Boundary(BoundaryKind::TwistedIBundleOverK);
        assert!(sol_is_left_orderable(&tw).yes);
    }

    #[test]
    fn biorder_examples() {
        let v = sol_is_biorderable(&SolManifold::torus_bundle(m(2, 1, 1, 1)).unwrap());
        assert!(v.yes); // eigenvalues (3 ± sqrt 5)/2 both positive

        let v = sol_is_biorderable(&SolManifold::torus_bundle(m(-2, -1, -1, -1)).unwrap());
        assert!(!v.yes);
        assert_eq!(v.reason, Reason::NegativeEigenvalues);

        let v = sol_is_biorderable(&SolManifold::Boundary(BoundaryKind::TwistedIBundleOverK));
        assert!(!v.yes);

        // det -1 always has a positive eigenvalue
        let v = sol_is_biorderable(&SolManifold::torus_bundle(m(1, 1, 1, 0)).unwrap());
        assert!(v.yes);
    }

    #[test]
    fn virtually_biorderable_examples() {
        assert!(sol_is_virtually_biorderable(&SolManifold::torus_bundle(m(-2, -1, -1, -1)).unwrap()).yes);
        assert!(sol_is_virtually_biorderable(&SolManifold::KleinBottleBundle).yes);
        assert!(sol_is_virtually_biorderable(&SolManifold::Boundary(BoundaryKind::Ball)).yes);
    }

    #[test]
    fn biorderable_implies_left_orderable() {
        let samples = [m(2, 1, 1, 1), m(-2, -1, -1, -1), m(1, 1, 1, 0), m(3, 1, 2, 1)];
        for a in samples {
            if !is_sol_monodromy(&a) {
                continue;
            }
            let tb = SolManifold::TorusBundle(a);
            if sol_is_biorderable(&tb).yes {
                assert!(sol_is_left_orderable(&tb).yes);
            }
        }
    }

    fn random_gl2z(rng: &mut StdRng) -> GL2Z {
        // random product of elementary matrices and a flip
        let mut out = m(1, 0, 0, 1);
        for _ in 0..rng.gen_range(1..8) {
            let k = rng.gen_range(-3..=3i64);
            let e = if rng.gen_bool(0.5) { m(1, k, 0, 1) } else { m(1, 0, k, 1) };
            out = out.mul(&e);
        }
        if rng.gen_bool(0.3) {
            out = out.mul(&m(0, 1, 1, 0));
        }
        out
    }

    #[test]
    fn verdicts_are_conjugation_invariant() {
        let mut rng = StdRng::seed_from_u64(51);
        let bases = [m(2, 1, 1, 1), m(-2, -1, -1, -1), m(1, 1, 1, 0), m(5, 2, 2, 1)];
        for a in bases {
            for _ in 0..100 {
                let p = random_gl2z(&mut rng);
                let conj = p.mul(&a).mul(&p.inverse());
                assert_eq!(conj.det(), a.det());
                assert_eq!(conj.trace(), a.trace());
                assert_eq!(is_sol_monodromy(&conj), is_sol_monodromy(&a));
                if is_sol_monodromy(&a) {
                    let t1 = SolManifold::TorusBundle(a);
                    let t2 = SolManifold::TorusBundle(conj);
                    assert_eq!(sol_is_left_orderable(&t1).yes, sol_is_left_orderable(&t2).yes);
                    assert_eq!(sol_is_biorderable(&t1).yes, sol_is_biorderable(&t2).yes);
                    assert_eq!(
                        sol_is_virtually_biorderable(&t1).yes,
                        sol_is_virtually_biorderable(&t2).yes
                    );
                }
            }
        }
    }

    #[test]
    fn det_minus_one_sol_is_biorderable() {
        let mut rng = StdRng::seed_from_u64(52);
        let mut found = 0;
        while found < 100 {
            let a = random_gl2z(&mut rng);
            if a.det() == -1 && is_sol_monodromy(&a) {
                found += 1;
                assert!(sol_is_biorderable(&SolManifold::TorusBundle(a)).yes);
            }
        }
    }

    #[test]
    fn sol_eigenvector_slopes_are_irrational() {
        // det = 1 Sol monodromies: tr^2 - 4 is never a perfect square
        let mut rng = StdRng::seed_from_u64(53);
        let mut found = 0;
        while found < 100 {
            let a = random_gl2z(&mut rng);
            if a.det() == 1 && is_sol_monodromy(&a) {
                found += 1;
                let disc = a.trace() * a.trace() - 4;
                let root = (disc as f64).sqrt().round() as i64;
                assert_ne!(root * root, disc, "trace {}", a.trace());
            }
        }
    }
}
