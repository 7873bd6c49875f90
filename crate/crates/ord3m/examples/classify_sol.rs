//! Orderability of Sol-manifold groups from the monodromy matrix.
//!
//! ```bash
//! cargo run -p ord3m --example classify_sol
//! ```

use ord3m::sol::{
    is_sol_monodromy, sol_is_biorderable, sol_is_left_orderable, sol_is_virtually_biorderable,
    BoundaryKind, SolManifold, GL2Z,
};

fn main() {
    let monodromies = [
        ("Anosov, positive eigenvalues", GL2Z::new(2, 1, 1, 1).unwrap()),
        ("Anosov, negative eigenvalues", GL2Z::new(-2, -1, -1, -1).unwrap()),
        ("determinant -1", GL2Z::new(1, 1, 1, 0).unwrap()),
        ("Nil shear (not Sol)", GL2Z::new(1, 1, 0, 1).unwrap()),
    ];

    for (name, a) in monodromies {
        println!("{name}: [[{},{}],[{},{}]]", a.a, a.b, a.c, a.d);
        println!("  det = {}, trace = {}", a.det(), a.trace());
        if !is_sol_monodromy(&a) {
            println!("  not a Sol monodromy\n");
            continue;
        }
        let m = SolManifold::torus_bundle(a).unwrap();
        let lo = sol_is_left_orderable(&m);
        let bo = sol_is_biorderable(&m);
        println!("  torus bundle: LO {} ({}), O {} ({}), virtually O {}",
            if lo.yes { "yes" } else { "no" }, lo.reason,
            if bo.yes { "yes" } else { "no" }, bo.reason,
            if sol_is_virtually_biorderable(&m).yes { "yes" } else { "no" });
        println!();
    }

    // the one closed case without a left order, and the bounded pieces
    let union = SolManifold::union_torus_glue(GL2Z::new(2, 1, 1, 1).unwrap()).unwrap();
    let lo = sol_is_left_orderable(&union);
    println!("orientable union of twisted I-bundles: LO {} ({})",
        if lo.yes { "yes" } else { "no" }, lo.reason);

    let tw = SolManifold::Boundary(BoundaryKind::TwistedIBundleOverK);
    let lo = sol_is_left_orderable(&tw);
    let bo = sol_is_biorderable(&tw);
    println!("twisted I-bundle over the Klein bottle: LO {} ({}), O {} ({})",
        if lo.yes { "yes" } else { "no" }, lo.reason,
        if bo.yes { "yes" } else { "no" }, bo.reason);
}
