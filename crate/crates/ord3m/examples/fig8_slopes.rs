//! The figure-eight knot group's representation family: verify the defining
//! relation numerically, track the slope function, and solve for the
//! parameters realizing small filling slopes.
//!
//! ```bash
//! cargo run -p ord3m --example fig8_slopes
//! ```

use ord3m::reps::{
    filling_defect, g_of_s, golden_ratio, holonomy_matrices, relation_residual, solve_slope,
    t_of_s, zeta_values, DEFAULT_GRID, DEFAULT_SMAX,
};

fn main() {
    let phi = golden_ratio();
    println!("domain starts at (1+sqrt5)/2 = {phi:.12}, where t = {:.12}", t_of_s(phi).unwrap());
    println!();

    println!("   s        residual    |[A,B]|     zeta(B)        g(s)");
    for s in [phi, 1.7, 2.0, 3.0, 5.0, 10.0] {
        let (a, b) = holonomy_matrices(s).unwrap();
        let (_, zb) = zeta_values(s).unwrap();
        println!(
            "  {s:<7.4}  {:.2e}   {:.2e}   {zb:<12.6e}  {:.9}",
            relation_residual(s).unwrap(),
            a.commutator_norm(&b),
            g_of_s(s).unwrap(),
        );
    }
    println!();

    for (p, q) in [(0i64, 1i64), (1, 2), (1, 1), (3, 1), (7, 2)] {
        let roots = solve_slope(p, q, DEFAULT_GRID, DEFAULT_SMAX).unwrap();
        println!("slope {p}/{q}: {} root(s)", roots.len());
        for s in roots {
            println!(
                "  s = {s:.12}, g(s) = {:.12}, |zeta(A)^p zeta(B)^q| - 1 = {:.2e}",
                g_of_s(s).unwrap(),
                filling_defect(s, p, q).unwrap(),
            );
        }
    }
}
