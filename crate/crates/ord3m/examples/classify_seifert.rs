//! Orderability verdicts for Seifert fibred spaces from their invariants
//! `M(g; b, b1/a1, ..., bn/an)`.
//!
//! ```bash
//! cargo run -p ord3m --example classify_seifert
//! ```

use ord3m::seifert::{
    chi_orb, euler_number, has_horizontal_foliation, is_biorderable, is_left_orderable,
    is_virtually_biorderable, SeifertInvariants, SeifertManifold, SpecialSeifert,
};

fn main() {
    let table = [
        ("Poincare sphere", SeifertInvariants::from_fractions(0, -1, &[(2, 1), (3, 1), (5, 1)])),
        ("Brieskorn (2,3,7)", SeifertInvariants::from_fractions(0, -1, &[(2, 1), (3, 1), (7, 1)])),
        ("flat four-cone space", SeifertInvariants::from_fractions(0, -2, &[(2, 1), (2, 1), (2, 1), (2, 1)])),
        ("bundle over genus two", SeifertInvariants::from_fractions(2, 5, &[])),
        ("bundle over Klein bottle", SeifertInvariants::from_fractions(-2, 1, &[])),
    ];

    for (name, inv) in table {
        let inv = inv.expect("valid invariants");
        println!("{name}: {inv}");
        println!("  chi_orb      = {}", chi_orb(&inv));
        println!("  euler number = {}", euler_number(&inv));
        if inv.g() == 0 && inv.n() >= 3 {
            let f = has_horizontal_foliation(&inv).unwrap();
            print!("  horizontal foliation: {}", if f.yes { "yes" } else { "no" });
            match f.witness {
                Some(w) => println!(" ({w})"),
                None => println!(" ({})", f.reason),
            }
        }
        let m = SeifertManifold::Invariants(inv);
        let lo = is_left_orderable(&m);
        println!("  left-orderable: {} ({})", if lo.yes { "yes" } else { "no" }, lo.reason);
        let bo = is_biorderable(&m);
        println!("  bi-orderable:   {} ({})", if bo.yes { "yes" } else { "no" }, bo.reason);
        println!("  virtually bi-orderable: {}", if is_virtually_biorderable(&m).yes { "yes" } else { "no" });
        println!();
    }

    // manifolds outside the closed oriented notation go in by name
    for special in [SpecialSeifert::S3, SpecialSeifert::P2xS1, SpecialSeifert::SolidKleinBottle] {
        let m = SeifertManifold::Special(special);
        let lo = is_left_orderable(&m);
        let bo = is_biorderable(&m);
        println!(
            "{special:?}: LO {} ({}), O {} ({})",
            if lo.yes { "yes" } else { "no" },
            lo.reason,
            if bo.yes { "yes" } else { "no" },
            bo.reason,
        );
    }
}
