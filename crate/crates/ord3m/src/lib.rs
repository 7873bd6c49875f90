//! Orderability of 3-manifold groups from finite data.
//!
//! The crate decides left- and bi-orderability for the fundamental groups of
//! Seifert fibred spaces (from their invariants) and Sol manifolds (from
//! their monodromy), constructs explicit bi-orders on free groups and on the
//! connected sum of three projective planes through a power-series
//! embedding, searches Cayley balls for machine-checkable
//! non-left-orderability certificates, and realizes the figure-eight knot
//! group's one-parameter family of SL(2, R) representations numerically.
//!
//! Start with the runnable examples (`cargo run --example ...`):
//!
//! * `classify_seifert` — Seifert invariants to orderability verdicts
//! * `classify_sol` — torus bundles and friends
//! * `free_group_biorder` — the power-series order on a free group
//! * `surface_biorder` — the assembled order on `<a,b,c | [a,b] = c^2>`
//! * `cone_refutations` — torsion and Klein-bottle refutation certificates
//! * `bsw_refutation` — the non-left-orderable graph manifold
//! * `homology_of_presentations` — Smith normal form and first homology
//! * `fig8_slopes` — representation family and slope solving
//!
//! The same functionality is exposed by the `ord3m` binary; see the README.

pub mod amalgam;
pub mod cli;
pub mod conesearch;
pub mod homology;
pub mod magnus;
pub mod oracle;
pub mod reps;
pub mod seifert;
pub mod sol;
pub mod surface;
pub mod trefoil;
pub mod verdict;
pub mod words;

pub use conesearch::{build_ball, search_cone, verify_certificate, ConeCertificate, Mode};
pub use homology::{abelianization, lo_via_betti, smith_normal_form, AbelianInvariants, IntMatrix};
pub use magnus::{magnus_compare, magnus_embed, series_compare, Comparison, MagnusSeries, VarMap};
pub use oracle::EqualityOracle;
pub use seifert::{
    chi_orb, euler_number, has_horizontal_foliation, is_biorderable, is_left_orderable,
    is_virtually_biorderable, seifert_presentation, SeifertInvariants, SeifertManifold,
    SpecialSeifert,
};
pub use sol::{
    is_sol_monodromy, sol_is_biorderable, sol_is_left_orderable, sol_is_virtually_biorderable,
    SolManifold, GL2Z,
};
pub use surface::{normal_form, psi, schreier_rewrite, surface_compare, SurfaceElement};
pub use verdict::{Reason, Verdict};
pub use words::{free_reduce, parse_word, Presentation, Word};
