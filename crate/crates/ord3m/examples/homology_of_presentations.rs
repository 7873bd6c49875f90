//! Smith normal form and first homology of finite presentations, plus the
//! positive-Betti-number left-orderability criterion.
//!
//! ```bash
//! cargo run -p ord3m --example homology_of_presentations
//! ```

use ord3m::amalgam::bsw_presentation;
use ord3m::homology::{abelianization, lo_via_betti, smith_normal_form, BettiVerdict, IntMatrix};
use ord3m::words::{klein_bottle_presentation, Presentation};

fn main() {
    let a = IntMatrix::from_rows(vec![vec![2, 4, 4], vec![-6, 6, 12], vec![10, 4, 16]]);
    let (d, u, v) = smith_normal_form(&a);
    println!("smith normal form of a 3x3 example:");
    for i in 0..3 {
        println!(
            "  D row {i}: {} {} {}",
            d[(i, 0)],
            d[(i, 1)],
            d[(i, 2)]
        );
    }
    println!("  det U = {}, det V = {}", u.determinant(), v.determinant());
    println!();

    let presentations: Vec<(&str, Presentation)> = vec![
        ("Klein bottle", klein_bottle_presentation()),
        ("trefoil group", Presentation::parse("gens: x, y\nrel: x^2*y^-3\n").unwrap()),
        ("Z/5", Presentation::parse("gens: a\nrel: a^5\n").unwrap()),
        ("glued trefoil exteriors", bsw_presentation()),
    ];

    for (name, pres) in presentations {
        let h = abelianization(&pres);
        let torsion: Vec<String> = h.torsion.iter().map(|d| d.to_string()).collect();
        println!(
            "{name}: b1 = {}, torsion [{}] -> {}",
            h.betti,
            torsion.join(", "),
            match lo_via_betti(&pres) {
                BettiVerdict::LoIfP2Irreducible =>
                    "left-orderable if the manifold is P2-irreducible",
                BettiVerdict::Inconclusive => "inconclusive",
            }
        );
    }
}
