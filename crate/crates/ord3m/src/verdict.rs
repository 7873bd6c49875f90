//! Classification verdicts: a yes/no answer, a reason tag naming the clause
//! that decided it, and an optional numeric witness.

use std::fmt;

use num_rational::Rational64;

/// Witness for a horizontal foliation found by the search clause: coprime
/// `0 < a < m` and per-cone strict upper bounds drawn from
/// `{a/m, (m-a)/m, 1/m, ..., 1/m}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FoliationWitness {
    pub m: i64,
    pub a: i64,
    /// Bound assigned to each cone position, in input order.
    pub bounds: Vec<Rational64>,
    /// True when the witness certifies the reversed-orientation clause.
    pub reversed: bool,
}

impl fmt::Display for FoliationWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let bounds: Vec<String> = self.bounds.iter().map(|r| r.to_string()).collect();
        write!(f, "m={} a={} bounds={}", self.m, self.a, bounds.join(","))?;
        if self.reversed {
            write!(f, " orientation=reversed")?;
        }
        Ok(())
    }
}

/// Reason tags; the `Display` strings are the stable CLI vocabulary.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Reason {
    TrivialGroup,
    PositiveBetti,
    NonemptyBoundary,
    FinitePi1,
    P2xS1,
    BaseNotSphere,
    HorizontalFoliation,
    NoHorizontalFoliation,
    FoliationBRange,
    FoliationWitness,
    FoliationReversedWitness,
    RecognizedS3,
    RecognizedS1xS2,
    RecognizedS1TwistS2,
    SolidTorus,
    SolidKleinBottle,
    CircleBundleGoodBase,
    ExceptionalFibres,
    FibreReversed,
    NotInBiorderableFamilies,
    VirtuallyBiorderable,
    TorusBundle,
    NonOrientableSol,
    TorusGlueUnion,
    PositiveEigenvalue,
    NegativeEigenvalues,
    TwistedIBundleOverK,
    Pi1InjectiveKleinBottle,
}

impl fmt::Display for Reason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self {
            Reason::TrivialGroup => "trivial-group",
            Reason::PositiveBetti => "positive-betti",
            Reason::NonemptyBoundary => "nonempty-boundary",
            Reason::FinitePi1 => "finite-pi1",
            Reason::P2xS1 => "p2-x-s1",
            Reason::BaseNotSphere => "base-not-s2",
            Reason::HorizontalFoliation => "horizontal-foliation",
            Reason::NoHorizontalFoliation => "no-horizontal-foliation",
            Reason::FoliationBRange => "b-in-range",
            Reason::FoliationWitness => "witness-found",
            Reason::FoliationReversedWitness => "witness-found-reversed",
            Reason::RecognizedS3 => "s3",
            Reason::RecognizedS1xS2 => "s1-x-s2",
            Reason::RecognizedS1TwistS2 => "s1-twist-s2",
            Reason::SolidTorus => "solid-torus",
            Reason::SolidKleinBottle => "solid-klein-bottle",
            Reason::CircleBundleGoodBase => "circle-bundle-good-base",
            Reason::ExceptionalFibres => "exceptional-fibres",
            Reason::FibreReversed => "fibre-reversed-by-base",
            Reason::NotInBiorderableFamilies => "not-in-biorderable-families",
            Reason::VirtuallyBiorderable => "virtually-biorderable",
            Reason::TorusBundle => "torus-bundle",
            Reason::NonOrientableSol => "non-orientable",
            Reason::TorusGlueUnion => "torus-glue-union",
            Reason::PositiveEigenvalue => "positive-eigenvalue",
            Reason::NegativeEigenvalues => "negative-eigenvalues",
            Reason::TwistedIBundleOverK => "twisted-i-bundle-over-k",
            Reason::Pi1InjectiveKleinBottle => "pi1-injective-klein-bottle",
        };
        write!(f, "{tag}")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub yes: bool,
    pub reason: Reason,
    pub witness: Option<FoliationWitness>,
}

impl Verdict {
    pub fn yes(reason: Reason) -> Self {
        Verdict { yes: true, reason, witness: None }
    }

    pub fn no(reason: Reason) -> Self {
        Verdict { yes: false, reason, witness: None }
    }

    pub fn yes_with(reason: Reason, witness: FoliationWitness) -> Self {
        Verdict { yes: true, reason, witness: Some(witness) }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "verdict: {}\nreason: {}",
            if self.yes { "yes" } else { "no" },
            self.reason
        )?;
        if let Some(w) = &self.witness {
            write!(f, "\nwitness: {w}")?;
        }
        Ok(())
    }
}
