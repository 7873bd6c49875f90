//! The one-parameter family of SL(2, R) representations of the figure-eight
//! knot group `< x, y | w*x = y*w >` with `w = x*y^-1*x^-1*y`, and the slope
//! function used to find Dehn fillings carrying non-abelian representations.
//!
//! For `s >= (1 + sqrt 5)/2` the generator images are
//! `X = diag(s, 1/s)` and the explicit `Y` below; the meridian image is `X`
//! and the longitude image `B_s` is diagonal and commutes with `A_s = X`.
//! Writing `zeta` for top-left entries, the filling slope realized at `s` is
//! `g(s) = -ln|zeta(B_s)| / ln|zeta(A_s)|`. The longitude is oriented so
//! that `g` runs from `0` at the reducible endpoint towards `4` as
//! `s -> infinity`; the opposite orientation mirrors every slope, and the
//! filled manifolds for slopes `p/q` and `-p/q` are homeomorphic.

use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum RepsError {
    #[error("s = {0} is below the domain threshold (1 + sqrt 5)/2")]
    BelowThreshold(f64),
    #[error("slope {0} is outside the open interval (-4, 4)")]
    SlopeOutOfRange(String),
    #[error("denominator must be positive")]
    BadDenominator,
}

/// 2x2 real matrix.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Mat2 {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
}

impl Mat2 {
    pub fn identity() -> Self {
        Mat2 { a: 1.0, b: 0.0, c: 0.0, d: 1.0 }
    }

    pub fn mul(&self, o: &Mat2) -> Mat2 {
        Mat2 {
            a: self.a * o.a + self.b * o.c,
            b: self.a * o.b + self.b * o.d,
            c: self.c * o.a + self.d * o.c,
            d: self.c * o.b + self.d * o.d,
        }
    }

    pub fn det(&self) -> f64 {
        self.a * self.d - self.b * self.c
    }

    /// Inverse, exact for determinant-one matrices up to rounding.
    pub fn inverse(&self) -> Mat2 {
        let det = self.det();
        Mat2 { a: self.d / det, b: -self.b / det, c: -self.c / det, d: self.a / det }
    }

    pub fn sub(&self, o: &Mat2) -> Mat2 {
        Mat2 { a: self.a - o.a, b: self.b - o.b, c: self.c - o.c, d: self.d - o.d }
    }

    pub fn frobenius_norm(&self) -> f64 {
        (self.a * self.a + self.b * self.b + self.c * self.c + self.d * self.d).sqrt()
    }

    pub fn commutator_norm(&self, o: &Mat2) -> f64 {
        self.mul(o).sub(&o.mul(self)).frobenius_norm()
    }
}

pub fn golden_ratio() -> f64 {
    (1.0 + 5.0_f64.sqrt()) / 2.0
}

/// Double-double scalar: an unevaluated sum `hi + lo` carrying roughly 32
/// significant digits. The longitude word multiplies eight matrices whose
/// entries reach `s^4`; its off-diagonal entries vanish in exact arithmetic,
/// so plain f64 evaluation leaves noise of order `eps * s^4` that the
/// identity checks cannot absorb at the right end of the sample range.
/// Carrying the word product (and the parameter `t`) in double-double pushes
/// that noise far below every stated tolerance.
mod dd {
    #[derive(Debug, Clone, Copy)]
    pub struct Dd {
        pub hi: f64,
        pub lo: f64,
    }

    fn two_sum(a: f64, b: f64) -> Dd {
        let s = a + b;
        let bb = s - a;
        let err = (a - (s - bb)) + (b - bb);
        Dd { hi: s, lo: err }
    }

    fn quick_two_sum(a: f64, b: f64) -> Dd {
        let s = a + b;
        Dd { hi: s, lo: b - (s - a) }
    }

    fn two_prod(a: f64, b: f64) -> Dd {
        let p = a * b;
        Dd { hi: p, lo: a.mul_add(b, -p) }
    }

    impl Dd {
        pub fn from(a: f64) -> Dd {
            Dd { hi: a, lo: 0.0 }
        }

        pub fn to_f64(self) -> f64 {
            self.hi + self.lo
        }

        pub fn add(self, o: Dd) -> Dd {
            let s = two_sum(self.hi, o.hi);
            let lo = s.lo + self.lo + o.lo;
            quick_two_sum(s.hi, lo)
        }

        pub fn sub(self, o: Dd) -> Dd {
            self.add(o.neg())
        }

        pub fn neg(self) -> Dd {
            Dd { hi: -self.hi, lo: -self.lo }
        }

        pub fn mul(self, o: Dd) -> Dd {
            let p = two_prod(self.hi, o.hi);
            let lo = p.lo + self.hi * o.lo + self.lo * o.hi;
            quick_two_sum(p.hi, lo)
        }

        pub fn div(self, o: Dd) -> Dd {
            let q1 = self.hi / o.hi;
            let r = self.sub(o.mul(Dd::from(q1)));
            let q2 = r.hi / o.hi;
            let r2 = r.sub(o.mul(Dd::from(q2)));
            let q3 = r2.hi / o.hi;
            quick_two_sum(q1, q2).add(Dd::from(q3))
        }

        pub fn sqrt(self) -> Dd {
            if self.hi == 0.0 {
                return Dd::from(0.0);
            }
            let s0 = self.hi.sqrt();
            // one Newton step: s = s0 + (x - s0^2) / (2 s0)
            let err = self.sub(two_prod(s0, s0));
            let corr = err.hi / (2.0 * s0);
            quick_two_sum(s0, corr)
        }
    }

    /// 2x2 matrix over double-double scalars.
    #[derive(Clone, Copy)]
    pub struct DdMat {
        pub a: Dd,
        pub b: Dd,
        pub c: Dd,
        pub d: Dd,
    }

    impl DdMat {
        pub fn mul(self, o: DdMat) -> DdMat {
            DdMat {
                a: self.a.mul(o.a).add(self.b.mul(o.c)),
                b: self.a.mul(o.b).add(self.b.mul(o.d)),
                c: self.c.mul(o.a).add(self.d.mul(o.c)),
                d: self.c.mul(o.b).add(self.d.mul(o.d)),
            }
        }

        /// Inverse for determinant-one matrices.
        pub fn inverse_det_one(self) -> DdMat {
            let det = self.a.mul(self.d).sub(self.b.mul(self.c));
            DdMat {
                a: self.d.div(det),
                b: self.b.neg().div(det),
                c: self.c.neg().div(det),
                d: self.a.div(det),
            }
        }
    }
}

const CLAMP: f64 = 1e-12;

fn check_domain(s: f64) -> Result<(), RepsError> {
    if !s.is_finite() || s < golden_ratio() - CLAMP {
        return Err(RepsError::BelowThreshold(s));
    }
    Ok(())
}

/// Clamps tiny negative radicands; both radicands used here have simple
/// zeros at the left endpoint of the domain.
fn safe_sqrt(radicand: f64) -> f64 {
    if radicand < 0.0 && radicand > -CLAMP {
        0.0
    } else {
        radicand.sqrt()
    }
}

/// The parameter `t = (1 + sqrt(u^4 + 2u^2 - 3)) / (2u)` with `u = s - 1/s`.
pub fn t_of_s(s: f64) -> Result<f64, RepsError> {
    check_domain(s)?;
    let u = s - 1.0 / s;
    let radicand = u.powi(4) + 2.0 * u * u - 3.0;
    Ok((1.0 + safe_sqrt(radicand)) / (2.0 * u))
}

/// Generator images `(X, Y)` of the representation.
pub fn phi_matrices(s: f64) -> Result<(Mat2, Mat2), RepsError> {
    let t = t_of_s(s)?;
    let p = (s + 1.0 / s) / 2.0;
    let q = (s - 1.0 / s) / 2.0;
    let x = Mat2 { a: s, b: 0.0, c: 0.0, d: 1.0 / s };
    let y = Mat2 { a: p + t, b: q + t, c: q - t, d: p - t };
    Ok((x, y))
}

/// Evaluates a matrix word given images of `x` and `y`.
fn eval_word(word: &[(char, i32)], x: &Mat2, y: &Mat2) -> Mat2 {
    let xi = x.inverse();
    let yi = y.inverse();
    let mut out = Mat2::identity();
    for &(gen, exp) in word {
        let m = match (gen, exp >= 0) {
            ('x', true) => x,
            ('x', false) => &xi,
            ('y', true) => y,
            ('y', false) => &yi,
            _ => unreachable!(),
        };
        for _ in 0..exp.unsigned_abs() {
            out = out.mul(m);
        }
    }
    out
}

/// Frobenius norm of `phi(w)*phi(x) - phi(y)*phi(w)`, the defect of the
/// defining relation `w*x = y*w`.
pub fn relation_residual(s: f64) -> Result<f64, RepsError> {
    let (x, y) = phi_matrices(s)?;
    let w = eval_word(&[('x', 1), ('y', -1), ('x', -1), ('y', 1)], &x, &y);
    Ok(w.mul(&x).sub(&y.mul(&w)).frobenius_norm())
}

/// Meridian and longitude images `(A_s, B_s)`.
///
/// `B_s` is the matrix of the longitude word `y*x^-1*y^-1*x^2*y^-1*x^-1*y`,
/// whose top-left entry grows like `s^4`. The word product is carried in
/// double-double arithmetic and rounded at the end, so the off-diagonal
/// entries (zero in exact arithmetic) come out far below f64 noise at the
/// `s^4` scale. The slope convention reads the longitude with the opposite
/// orientation, whose eigenvalue is the reciprocal of the top-left entry.
pub fn holonomy_matrices(s: f64) -> Result<(Mat2, Mat2), RepsError> {
    use dd::{Dd, DdMat};
    check_domain(s)?;
    let sd = Dd::from(s);
    let inv_s = Dd::from(1.0).div(sd);
    let u = sd.sub(inv_s);
    // t = (1 + sqrt(u^4 + 2u^2 - 3)) / (2u), radicand clamped at its simple
    // zero on the left endpoint
    let u2 = u.mul(u);
    let radicand = u2.mul(u2).add(Dd::from(2.0).mul(u2)).sub(Dd::from(3.0));
    let radicand = if radicand.to_f64() < 0.0 { Dd::from(0.0) } else { radicand };
    let t = Dd::from(1.0).add(radicand.sqrt()).div(Dd::from(2.0).mul(u));
    let p = sd.add(inv_s).div(Dd::from(2.0));
    let q = u.div(Dd::from(2.0));

    let x = DdMat { a: sd, b: Dd::from(0.0), c: Dd::from(0.0), d: inv_s };
    let y = DdMat { a: p.add(t), b: q.add(t), c: q.sub(t), d: p.sub(t) };
    let xi = x.inverse_det_one();
    let yi = y.inverse_det_one();
    // longitude word y x^-1 y^-1 x^2 y^-1 x^-1 y
    let b = y
        .mul(xi)
        .mul(yi)
        .mul(x)
        .mul(x)
        .mul(yi)
        .mul(xi)
        .mul(y);
    let to = |m: DdMat| Mat2 {
        a: m.a.to_f64(),
        b: m.b.to_f64(),
        c: m.c.to_f64(),
        d: m.d.to_f64(),
    };
    Ok((to(x), to(b)))
}

/// Independent matrix-word oracle for `zeta(B_s)`: the reciprocal of the
/// stable growing entry of [`holonomy_matrices`].
pub fn zeta_b_from_matrices(s: f64) -> Result<f64, RepsError> {
    let (_, b) = holonomy_matrices(s)?;
    Ok(1.0 / b.a)
}

/// Top-left entries `(zeta(A_s), zeta(B_s))` in closed form:
/// `zeta(A_s) = s`, and `zeta(B_s)` is the decaying root of
///
/// ```text
/// Z^2 - (s^4 - s^2 - 2 - s^-2 + s^-4) Z + 1 = 0,
/// ```
///
/// evaluated in the rationalized form
///
/// ```text
/// zeta(B_s) = 2 s^4 / ((s^8 - s^6 - 2 s^4 - s^2 + 1) + (s^4 - 1) sqrt(R))
/// R         = s^8 - 2 s^6 - s^4 - 2 s^2 + 1
/// ```
///
/// which avoids the cancellation the difference form suffers for large `s`.
/// At the endpoint both roots equal 1.
pub fn zeta_values(s: f64) -> Result<(f64, f64), RepsError> {
    check_domain(s)?;
    let s2 = s * s;
    let s4 = s2 * s2;
    let s6 = s4 * s2;
    let s8 = s4 * s4;
    let radicand = s8 - 2.0 * s6 - s4 - 2.0 * s2 + 1.0;
    let zeta_b =
        2.0 * s4 / ((s8 - s6 - 2.0 * s4 - s2 + 1.0) + (s4 - 1.0) * safe_sqrt(radicand));
    Ok((s, zeta_b))
}

/// The slope function `g(s) = -ln|zeta(B_s)| / ln|zeta(A_s)|`; zero at the
/// reducible endpoint by its limit there.
pub fn g_of_s(s: f64) -> Result<f64, RepsError> {
    check_domain(s)?;
    if (s - golden_ratio()).abs() < CLAMP {
        return Ok(0.0);
    }
    let (za, zb) = zeta_values(s)?;
    Ok(-zb.abs().ln() / za.abs().ln())
}

/// Defaults for the root scan.
pub const DEFAULT_GRID: f64 = 1e-3;
pub const DEFAULT_SMAX: f64 = 50.0;

/// All parameters `s` with `g(s) = |p/q|` found by uniform grid bracketing
/// over `[(1 + sqrt 5)/2, smax]` followed by bisection to `1e-12`.
///
/// `g` is not assumed monotone, so every bracketed root is reported, sorted
/// ascending. Slopes `p/q` and `-p/q` give homeomorphic fillings, so the
/// target is `|p/q|`; it must lie in `(-4, 4)`.
pub fn solve_slope(p: i64, q: i64, grid: f64, smax: f64) -> Result<Vec<f64>, RepsError> {
    if q <= 0 {
        return Err(RepsError::BadDenominator);
    }
    if p.abs() >= 4 * q {
        return Err(RepsError::SlopeOutOfRange(format!("{p}/{q}")));
    }
    let target = (p.abs() as f64) / (q as f64);
    let phi = golden_ratio();
    let mut roots: Vec<f64> = Vec::new();
    if p == 0 {
        roots.push(phi);
    }
    let f = |s: f64| g_of_s(s).expect("scan stays inside the domain") - target;
    let steps = ((smax - phi) / grid).ceil() as usize;
    let mut prev_s = phi;
    let mut prev_f = f(prev_s);
    for k in 1..=steps {
        let s = (phi + grid * k as f64).min(smax);
        let fs = f(s);
        if prev_f == 0.0 && prev_s > phi {
            push_root(&mut roots, prev_s);
        } else if prev_f * fs < 0.0 {
            push_root(&mut roots, bisect(&f, prev_s, s));
        }
        prev_s = s;
        prev_f = fs;
    }
    if prev_f == 0.0 && prev_s > phi {
        push_root(&mut roots, prev_s);
    }
    roots.sort_by(|a, b| a.partial_cmp(b).unwrap());
    Ok(roots)
}

fn push_root(roots: &mut Vec<f64>, s: f64) {
    if roots.iter().all(|r| (r - s).abs() > 1e-9) {
        roots.push(s);
    }
}

fn bisect(f: &dyn Fn(f64) -> f64, mut lo: f64, mut hi: f64) -> f64 {
    let mut flo = f(lo);
    for _ in 0..200 {
        if hi - lo < 1e-12 {
            break;
        }
        let mid = 0.5 * (lo + hi);
        let fm = f(mid);
        if fm == 0.0 {
            return mid;
        }
        if flo * fm < 0.0 {
            hi = mid;
        } else {
            lo = mid;
            flo = fm;
        }
    }
    0.5 * (lo + hi)
}

/// `|zeta(A)^p * zeta(B)^q|` deviation from 1; the filling condition at a
/// root of `g(s) = p/q`.
pub fn filling_defect(s: f64, p: i64, q: i64) -> Result<f64, RepsError> {
    let (za, zb) = zeta_values(s)?;
    let log = (p.abs() as f64) * za.abs().ln() + (q as f64) * zb.abs().ln();
    Ok((log.exp() - 1.0).abs())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn t_examples() {
        let phi = golden_ratio();
        assert!((t_of_s(phi).unwrap() - 0.5).abs() < 1e-9);
        let expected = (1.0 + (105.0_f64 / 16.0).sqrt()) / 3.0;
        assert!((t_of_s(2.0).unwrap() - expected).abs() < 1e-12);
        assert!(t_of_s(1.0).is_err());
    }

    #[test]
    fn phi_matrix_examples() {
        let (x, _) = phi_matrices(2.0).unwrap();
        assert_eq!(x.a, 2.0);
        assert_eq!(x.d, 0.5);
        for s in [golden_ratio(), 2.0, 3.7, 11.0] {
            let (x, y) = phi_matrices(s).unwrap();
            assert!((x.det() - 1.0).abs() < 1e-9);
            assert!((y.det() - 1.0).abs() < 1e-9);
        }
        let phi = golden_ratio();
        let (_, y) = phi_matrices(phi).unwrap();
        // t = 1/2 and s - 1/s = 1 make the lower-left entry vanish
        assert!(y.c.abs() < 1e-9);
    }

    #[test]
    fn relation_residual_examples() {
        for s in [2.0, golden_ratio(), 3.7] {
            assert!(relation_residual(s).unwrap() < 1e-9, "s = {s}");
        }
    }

    #[test]
    fn longitude_commutes_and_is_diagonal() {
        for i in 0..100 {
            let s = golden_ratio() + (20.0 - golden_ratio()) * (i as f64) / 99.0;
            let (a, b) = holonomy_matrices(s).unwrap();
            assert!(a.commutator_norm(&b) < 1e-9, "s = {s}");
            assert!(b.b.abs() < 1e-8 && b.c.abs() < 1e-8, "s = {s}");
        }
    }

    #[test]
    fn zeta_examples() {
        let phi = golden_ratio();
        let (za, zb) = zeta_values(phi).unwrap();
        assert_eq!(za, phi);
        assert!((zb - 1.0).abs() < 1e-9);
        // closed form against the matrix word; the radicand has a simple
        // zero at the endpoint, so independent evaluations can only agree
        // to ~sqrt(eps) there and the samples stay inside the interval
        for i in 0..100 {
            let s = phi + (20.0 - phi) * ((i + 1) as f64) / 100.0;
            let oracle = zeta_b_from_matrices(s).unwrap();
            let (_, zb) = zeta_values(s).unwrap();
            let rel = (oracle - zb).abs() / zb.abs().max(1e-300);
            assert!(rel < 1e-8, "s = {s}: matrix {oracle} vs closed form {zb}");
        }
    }

    #[test]
    fn g_examples() {
        let phi = golden_ratio();
        assert_eq!(g_of_s(phi).unwrap(), 0.0);
        assert!(g_of_s(phi + 1e-6).unwrap().abs() < 1e-2);
        let g = g_of_s(1e6).unwrap();
        assert!((g - 4.0).abs() < 1e-3, "g(1e6) = {g}");
        // regression constant, pinned at first build
        let g2 = g_of_s(2.0).unwrap();
        assert!((g2 - 3.279398218770536).abs() < 1e-12, "g(2) = {g2}");
    }

    #[test]
    fn solve_slope_examples() {
        let phi = golden_ratio();
        let roots = solve_slope(0, 1, DEFAULT_GRID, DEFAULT_SMAX).unwrap();
        assert!(roots.iter().any(|r| (r - phi).abs() < 1e-9));

        let roots = solve_slope(1, 1, DEFAULT_GRID, DEFAULT_SMAX).unwrap();
        assert!(!roots.is_empty());
        for r in &roots {
            assert!((g_of_s(*r).unwrap() - 1.0).abs() < 1e-9);
            assert!(filling_defect(*r, 1, 1).unwrap() < 1e-8);
        }

        assert!(solve_slope(4, 1, DEFAULT_GRID, DEFAULT_SMAX).is_err());
        assert!(solve_slope(-9, 2, DEFAULT_GRID, DEFAULT_SMAX).is_err());
    }

    #[test]
    fn reducible_exactly_at_endpoint() {
        // shared eigenvector measure: X is diagonal, so reducibility means a
        // vanishing off-diagonal entry of Y
        let phi = golden_ratio();
        let (_, y) = phi_matrices(phi).unwrap();
        assert!(y.c.abs().min(y.b.abs()) < 1e-6);
        for i in 1..50 {
            let s = phi + 0.2 * i as f64;
            let (_, y) = phi_matrices(s).unwrap();
            assert!(y.c.abs().min(y.b.abs()) > 1e-6, "s = {s}");
        }
    }
}
