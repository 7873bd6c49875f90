//! Seifert fibred spaces: invariant data model, presentation emitter,
//! orbifold arithmetic, the horizontal-foliation decider, and the
//! left-/bi-orderability classification of their fundamental groups.
//!
//! Closed oriented manifolds are encoded by invariants
//! `M(g; b, b1/a1, ..., bn/an)` with `0 < b_j < a_j` and `gcd(a_j, b_j) = 1`;
//! `g >= 0` is the genus of an orientable base, `g = -k` stands for a base
//! with `k` cross-caps. Manifolds outside that notation (non-orientable total
//! spaces, boundary) enter through [`SpecialSeifert`].

use num_bigint::BigInt;
use num_rational::{BigRational, Rational64};
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::homology::abelianization;
use crate::verdict::{FoliationWitness, Reason, Verdict};
use crate::words::{Presentation, Word};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SeifertError {
    #[error("cone ({alpha}, {beta}) violates 0 < beta < alpha with gcd 1")]
    InvalidCone { alpha: i64, beta: i64 },
    #[error("the foliation criterion applies to g = 0 and n >= 3, got g={g}, n={n}")]
    FoliationScope { g: i64, n: usize },
}

/// One exceptional fibre: `0 < beta < alpha`, `gcd(alpha, beta) = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Cone {
    alpha: i64,
    beta: i64,
}

impl Cone {
    pub fn new(alpha: i64, beta: i64) -> Result<Self, SeifertError> {
        if alpha < 2 || beta <= 0 || beta >= alpha || num_integer::gcd(alpha, beta) != 1 {
            return Err(SeifertError::InvalidCone { alpha, beta });
        }
        Ok(Cone { alpha, beta })
    }

    pub fn alpha(&self) -> i64 {
        self.alpha
    }

    pub fn beta(&self) -> i64 {
        self.beta
    }

    pub fn ratio(&self) -> Rational64 {
        Rational64::new(self.beta, self.alpha)
    }

    /// `beta/alpha -> (alpha - beta)/alpha`, the orientation-reversal image.
    pub fn reversed(&self) -> Cone {
        Cone { alpha: self.alpha, beta: self.alpha - self.beta }
    }
}

/// Invariants of a closed oriented Seifert fibred space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeifertInvariants {
    g: i64,
    b: i64,
    cones: Vec<Cone>,
}

impl SeifertInvariants {
    pub fn new(g: i64, b: i64, cones: Vec<Cone>) -> Self {
        SeifertInvariants { g, b, cones }
    }

    pub fn from_fractions(g: i64, b: i64, fractions: &[(i64, i64)]) -> Result<Self, SeifertError> {
        let cones = fractions
            .iter()
            .map(|&(a, be)| Cone::new(a, be))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(SeifertInvariants { g, b, cones })
    }

    pub fn g(&self) -> i64 {
        self.g
    }

    pub fn b(&self) -> i64 {
        self.b
    }

    pub fn cones(&self) -> &[Cone] {
        &self.cones
    }

    pub fn n(&self) -> usize {
        self.cones.len()
    }

    /// Same manifold with reversed orientation:
    /// `M(g; b, beta/alpha) -> M(g; -n-b, (alpha-beta)/alpha)`.
    pub fn reversed_orientation(&self) -> SeifertInvariants {
        SeifertInvariants {
            g: self.g,
            b: -(self.n() as i64) - self.b,
            cones: self.cones.iter().map(Cone::reversed).collect(),
        }
    }
}

impl std::fmt::Display for SeifertInvariants {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "M({}; {}", self.g, self.b)?;
        for c in &self.cones {
            write!(f, ", {}/{}", c.beta, c.alpha)?;
        }
        write!(f, ")")
    }
}

/// Base surface of a locally trivial circle bundle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BaseSurface {
    /// Orientable of the given genus (0 is the sphere).
    Orientable(u32),
    /// Non-orientable with the given number of cross-caps (1 is the
    /// projective plane, 2 the Klein bottle).
    NonOrientable(u32),
}

impl BaseSurface {
    /// The signed-genus convention: `g >= 0` orientable, `g < 0` cross-caps.
    pub fn from_code(g: i64) -> BaseSurface {
        if g >= 0 {
            BaseSurface::Orientable(g as u32)
        } else {
            BaseSurface::NonOrientable((-g) as u32)
        }
    }
}

/// Seifert manifolds outside the closed oriented notation, plus the small
/// closed cases that are easier to name than to encode.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpecialSeifert {
    S3,
    S1xS2,
    S1TwistS2,
    SolidTorus,
    SolidKleinBottle,
    P2xS1,
    /// Locally trivial circle bundle with coherently oriented fibres.
    /// Over a non-orientable base the bundle class is read modulo 2.
    OrientableCircleBundle { base: BaseSurface, euler: i64 },
    /// Any other compact Seifert manifold with nonempty boundary.
    BoundedSeifert,
}

/// Input to the classifiers.
#[derive(Debug, Clone, PartialEq)]
pub enum SeifertManifold {
    Invariants(SeifertInvariants),
    Special(SpecialSeifert),
}

/// Orbifold Euler characteristic `chi(B) - sum(1 - 1/alpha_i)`, exact.
pub fn chi_orb(inv: &SeifertInvariants) -> BigRational {
    let chi_base = if inv.g >= 0 { 2 - 2 * inv.g } else { 2 + inv.g };
    let mut chi = BigRational::from_integer(BigInt::from(chi_base));
    for c in &inv.cones {
        let term = BigRational::one()
            - BigRational::new(BigInt::one(), BigInt::from(c.alpha));
        chi -= term;
    }
    chi
}

/// Euler number of the fibration, `e = -(b + sum beta_j/alpha_j)`, exact.
/// Only `e = 0` versus `e != 0` (and `|e|`) enter any verdict.
pub fn euler_number(inv: &SeifertInvariants) -> BigRational {
    let mut e = BigRational::from_integer(BigInt::from(inv.b));
    for c in &inv.cones {
        e += BigRational::new(BigInt::from(c.beta), BigInt::from(c.alpha));
    }
    -e
}

/// The standard presentation of the fundamental group, with centrality of
/// the fibre class expanded into commutators against every generator.
///
/// Generators: `a1, b1, ..., ag, bg` (or `a1, ..., a|g|` for a
/// non-orientable base), `c1, ..., cn` for the exceptional fibres, `h` for
/// the regular fibre.
pub fn seifert_presentation(inv: &SeifertInvariants) -> Presentation {
    let mut gens: Vec<String> = Vec::new();
    let orientable = inv.g >= 0;
    let genus = inv.g.unsigned_abs() as usize;
    if orientable {
        for i in 1..=genus {
            gens.push(format!("a{i}"));
            gens.push(format!("b{i}"));
        }
    } else {
        for i in 1..=genus {
            gens.push(format!("a{i}"));
        }
    }
    for j in 1..=inv.n() {
        gens.push(format!("c{j}"));
    }
    gens.push("h".to_string());

    let gen = |name: &str, e: i64| Word::generator(name, e);
    let commutator = |u: &Word, v: &Word| u.mul(v).mul(&u.inverse()).mul(&v.inverse());
    let h = gen("h", 1);
    let mut relators: Vec<Word> = Vec::new();

    if orientable {
        for i in 1..=genus {
            relators.push(commutator(&gen(&format!("a{i}"), 1), &h));
            relators.push(commutator(&gen(&format!("b{i}"), 1), &h));
        }
    } else {
        // a_j h a_j^-1 = h^-1, stored as a_j h a_j^-1 h
        for i in 1..=genus {
            let a = gen(&format!("a{i}"), 1);
            relators.push(a.mul(&h).mul(&a.inverse()).mul(&h));
        }
    }
    for j in 1..=inv.n() {
        relators.push(commutator(&gen(&format!("c{j}"), 1), &h));
    }
    // c_j^alpha_j = h^-beta_j, stored as c_j^alpha_j h^beta_j
    for (j, c) in inv.cones.iter().enumerate() {
        relators.push(gen(&format!("c{}", j + 1), c.alpha).mul(&gen("h", c.beta)));
    }
    // surface relator: [a1,b1]...[ag,bg] c_1...c_n = h^b (a_1^2...a_k^2 ... for g < 0)
    let mut product = Word::identity();
    if orientable {
        for i in 1..=genus {
            product = product.mul(&commutator(
                &gen(&format!("a{i}"), 1),
                &gen(&format!("b{i}"), 1),
            ));
        }
    } else {
        for i in 1..=genus {
            product = product.mul(&gen(&format!("a{i}"), 2));
        }
    }
    for j in 1..=inv.n() {
        product = product.mul(&gen(&format!("c{j}"), 1));
    }
    relators.push(product.mul(&gen("h", -inv.b)));

    Presentation::new(gens, relators).expect("generators are declared")
}

/// Finite fundamental group: spherical base orbifold with nonzero Euler
/// number. All other closed oriented invariants give infinite groups.
pub fn pi1_is_finite(inv: &SeifertInvariants) -> bool {
    chi_orb(inv).is_positive() && !euler_number(inv).is_zero()
}

/// Trivial fundamental group. Finite groups here are cyclic exactly when
/// `n <= 2` (lens-space range); for three or more cones a finite group
/// contains a nontrivial binary polyhedral subgroup even when its
/// abelianization vanishes, so `|H_1| = 1` alone does not suffice.
pub fn pi1_is_trivial(inv: &SeifertInvariants) -> bool {
    pi1_is_finite(inv)
        && inv.n() <= 2
        && abelianization(&seifert_presentation(inv)).is_trivial()
}

/// Decides existence of a horizontal foliation for closed oriented
/// `M(0; b, ...)` with at least three exceptional fibres:
///
/// 1. `-(n-2) <= b <= -2`;
/// 2. `b = -1` and there are coprime `0 < a < m` and an assignment of
///    `(a/m, (m-a)/m, 1/m, ..., 1/m)` to the cones with every
///    `beta_j/alpha_j` strictly below its assigned value;
/// 3. `b = -(n-1)` and clause 2 holds after `beta_j -> alpha_j - beta_j`.
///
/// The clause-2 search is exhaustive: some position with `n - 2 >= 1` must
/// receive `1/m`, forcing `m < alpha_j <= max alpha`, so `m` is bounded.
/// The reported witness is minimal in `(m, a, placement)` order.
pub fn has_horizontal_foliation(inv: &SeifertInvariants) -> Result<Verdict, SeifertError> {
    let n = inv.n();
    if inv.g != 0 || n < 3 {
        return Err(SeifertError::FoliationScope { g: inv.g, n });
    }
    let nn = n as i64;
    if -(nn - 2) <= inv.b && inv.b <= -2 {
        return Ok(Verdict::yes(Reason::FoliationBRange));
    }
    if inv.b == -1 {
        if let Some(w) = clause_two_witness(inv.cones(), false) {
            return Ok(Verdict::yes_with(Reason::FoliationWitness, w));
        }
    }
    if inv.b == -(nn - 1) {
        let reversed: Vec<Cone> = inv.cones.iter().map(Cone::reversed).collect();
        if let Some(w) = clause_two_witness(&reversed, true) {
            return Ok(Verdict::yes_with(Reason::FoliationReversedWitness, w));
        }
    }
    Ok(Verdict::no(Reason::NoHorizontalFoliation))
}

fn clause_two_witness(cones: &[Cone], reversed: bool) -> Option<FoliationWitness> {
    let n = cones.len();
    let max_alpha = cones.iter().map(|c| c.alpha).max().unwrap_or(2);
    for m in 2..=max_alpha {
        for a in 1..m {
            if num_integer::gcd(a, m) != 1 {
                continue;
            }
            for i in 0..n {
                for j in 0..n {
                    if i == j {
                        continue;
                    }
                    let mut bounds = vec![Rational64::new(1, m); n];
                    bounds[i] = Rational64::new(a, m);
                    bounds[j] = Rational64::new(m - a, m);
                    if cones
                        .iter()
                        .zip(&bounds)
                        .all(|(c, bound)| c.ratio() < *bound)
                    {
                        return Some(FoliationWitness { m, a, bounds, reversed });
                    }
                }
            }
        }
    }
    None
}

/// Left-orderability of the fundamental group of a compact, connected
/// Seifert fibred space.
pub fn is_left_orderable(m: &SeifertManifold) -> Verdict {
    match m {
        SeifertManifold::Invariants(inv) => {
            let inv_h1 = abelianization(&seifert_presentation(inv));
            if inv_h1.betti > 0 {
                // closed oriented, so never P^2 x S^1
                return Verdict::yes(Reason::PositiveBetti);
            }
            if pi1_is_trivial(inv) {
                return Verdict::yes(Reason::TrivialGroup);
            }
            if pi1_is_finite(inv) {
                return Verdict::no(Reason::FinitePi1);
            }
            // b1 = 0 and infinite; needs an orientable base sphere plus a
            // horizontal foliation
            if inv.g != 0 {
                return Verdict::no(Reason::BaseNotSphere);
            }
            match has_horizontal_foliation(inv) {
                Ok(v) if v.yes => Verdict {
                    yes: true,
                    reason: Reason::HorizontalFoliation,
                    witness: v.witness,
                },
                Ok(_) => Verdict::no(Reason::NoHorizontalFoliation),
                // g = 0, b1 = 0, infinite group forces n >= 3
                Err(_) => unreachable!("spherical bases with n < 3 have b1 > 0 or finite pi1"),
            }
        }
        SeifertManifold::Special(s) => special_left_orderable(*s),
    }
}

fn special_left_orderable(s: SpecialSeifert) -> Verdict {
    match s {
        SpecialSeifert::S3 => Verdict::yes(Reason::TrivialGroup),
        SpecialSeifert::S1xS2 | SpecialSeifert::S1TwistS2 => Verdict::yes(Reason::PositiveBetti),
        SpecialSeifert::SolidTorus | SpecialSeifert::SolidKleinBottle => {
            Verdict::yes(Reason::NonemptyBoundary)
        }
        SpecialSeifert::P2xS1 => Verdict::no(Reason::P2xS1),
        SpecialSeifert::BoundedSeifert => Verdict::yes(Reason::NonemptyBoundary),
        SpecialSeifert::OrientableCircleBundle { base, euler } => match base {
            BaseSurface::Orientable(0) => match euler.abs() {
                0 | 1 => Verdict::yes(if euler == 0 {
                    Reason::PositiveBetti
                } else {
                    Reason::TrivialGroup
                }),
                _ => Verdict::no(Reason::FinitePi1),
            },
            BaseSurface::NonOrientable(1) => {
                if euler.rem_euclid(2) == 0 {
                    Verdict::no(Reason::P2xS1)
                } else {
                    Verdict::yes(Reason::PositiveBetti)
                }
            }
            // all remaining bases have b1(M) > 0
            _ => Verdict::yes(Reason::PositiveBetti),
        },
    }
}

/// Bi-orderability of the fundamental group of a compact, connected Seifert
/// fibred space.
pub fn is_biorderable(m: &SeifertManifold) -> Verdict {
    match m {
        SeifertManifold::Invariants(inv) => {
            if inv.n() > 0 {
                return Verdict::no(Reason::ExceptionalFibres);
            }
            if inv.g > 0 {
                return Verdict::yes(Reason::CircleBundleGoodBase);
            }
            if inv.g == 0 {
                return match inv.b {
                    0 => Verdict::yes(Reason::RecognizedS1xS2),
                    -1 | 1 => Verdict::yes(Reason::RecognizedS3),
                    _ => Verdict::no(Reason::FinitePi1),
                };
            }
            // non-orientable base: the fibre is conjugate to its inverse
            Verdict::no(Reason::FibreReversed)
        }
        SeifertManifold::Special(s) => special_biorderable(*s),
    }
}

fn special_biorderable(s: SpecialSeifert) -> Verdict {
    match s {
        SpecialSeifert::S3 => Verdict::yes(Reason::RecognizedS3),
        SpecialSeifert::S1xS2 => Verdict::yes(Reason::RecognizedS1xS2),
        SpecialSeifert::S1TwistS2 => Verdict::yes(Reason::RecognizedS1TwistS2),
        SpecialSeifert::SolidTorus => Verdict::yes(Reason::SolidTorus),
        SpecialSeifert::SolidKleinBottle => Verdict::yes(Reason::SolidKleinBottle),
        SpecialSeifert::P2xS1 => Verdict::no(Reason::P2xS1),
        SpecialSeifert::BoundedSeifert => Verdict::no(Reason::NotInBiorderableFamilies),
        SpecialSeifert::OrientableCircleBundle { base, euler } => match base {
            BaseSurface::Orientable(0) => match euler.abs() {
                0 => Verdict::yes(Reason::RecognizedS1xS2),
                1 => Verdict::yes(Reason::RecognizedS3),
                _ => Verdict::no(Reason::FinitePi1),
            },
            BaseSurface::NonOrientable(1) => {
                if euler.rem_euclid(2) == 0 {
                    Verdict::no(Reason::P2xS1)
                } else {
                    Verdict::yes(Reason::RecognizedS1TwistS2)
                }
            }
            BaseSurface::NonOrientable(2) => Verdict::no(Reason::Pi1InjectiveKleinBottle),
            _ => Verdict::yes(Reason::CircleBundleGoodBase),
        },
    }
}

/// Every compact Seifert fibred manifold group is virtually bi-orderable:
/// a finite cover is a circle bundle over an orientable surface.
pub fn is_virtually_biorderable(_m: &SeifertManifold) -> Verdict {
    Verdict::yes(Reason::VirtuallyBiorderable)
}
