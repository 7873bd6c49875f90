//! Positive-cone searches over Cayley balls: a torsion refutation, the
//! Klein bottle's bi-order refutation, and a consistent (inconclusive)
//! left-order cone for the same group.
//!
//! ```bash
//! cargo run -p ord3m --example cone_refutations
//! ```

use ord3m::conesearch::{build_ball, search_cone, verify_certificate, Mode};
use ord3m::oracle::EqualityOracle;

fn run(label: &str, oracle: EqualityOracle, mode: Mode, radius: u32) {
    let gens = oracle.generators();
    let ball = build_ball(&oracle, &gens, radius).unwrap();
    let cert = search_cone(&ball, mode).unwrap();
    println!(
        "{label}: ball has {} elements at radius {radius}; {}",
        ball.elements().len(),
        if cert.is_refutation() {
            "refuted"
        } else {
            "consistent cone found (inconclusive for the group)"
        }
    );
    println!("  verified: {}", verify_certificate(&ball, &cert, mode));
    let rendered = cert.render(&ball);
    for line in rendered.lines().take(8) {
        println!("  {line}");
    }
    let total = rendered.lines().count();
    if total > 8 {
        println!("  ... ({} more lines)", total - 8);
    }
    println!();
}

fn main() {
    // Z/2 has torsion: no left order exists at all
    run("Z/2", EqualityOracle::Cyclic { modulus: 2 }, Mode::LeftOrder, 2);

    // the Klein bottle group is left-orderable but not bi-orderable:
    // conjugating m by l inverts it
    run("Klein bottle, bi mode", EqualityOracle::KleinBottle, Mode::BiOrder, 3);
    run("Klein bottle, left mode", EqualityOracle::KleinBottle, Mode::LeftOrder, 3);

    // free groups admit bi-orders; every radius stays consistent
    run("free group of rank 2, bi mode", EqualityOracle::Free { rank: 2 }, Mode::BiOrder, 3);
}
