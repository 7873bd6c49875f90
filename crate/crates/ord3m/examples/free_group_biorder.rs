//! The power-series bi-order on a free group: generators map to `1 + X`,
//! inverses to geometric series, and elements compare by the first
//! coefficient at which their series differ.
//!
//! ```bash
//! cargo run -p ord3m --example free_group_biorder
//! ```

use ord3m::magnus::{magnus_compare, magnus_embed, Comparison, VarMap};
use ord3m::words::{parse_word, Word};

fn main() {
    let gens = vec!["x".to_string(), "y".to_string()];
    let vars = VarMap::from_generators(&gens);
    let w = |text: &str| parse_word(text, &gens).unwrap();

    // the commutator embeds as 1 + XY - YX + higher order
    let comm = w("x*y*x^-1*y^-1");
    let series = magnus_embed(&comm, &vars, 3).unwrap();
    println!("series of [x,y] truncated at degree 3:");
    for (monomial, coeff) in series.terms() {
        let name: Vec<String> = monomial.0.iter().map(|v| v.to_string()).collect();
        let name = if name.is_empty() { "1".to_string() } else { name.join("") };
        println!("  {coeff:+} {name}");
    }

    let sym = |c: Comparison| match c {
        Comparison::Lt => "<",
        Comparison::Eq => "=",
        Comparison::Gt => ">",
    };

    println!();
    let pairs = [
        ("x", "y"),
        ("x*y", "y*x"),
        ("x*y*x^-1*y^-1", ""),
        ("x^-1", "x^-2"),
        ("y*x", "y*x^2"),
    ];
    for (a, b) in pairs {
        let wa = if a.is_empty() { Word::identity() } else { w(a) };
        let wb = if b.is_empty() { Word::identity() } else { w(b) };
        let cmp = magnus_compare(&wa, &wb, &vars).unwrap();
        println!("{wa} {} {wb}", sym(cmp));
    }

    // bi-invariance in action: conjugating preserves order
    let u = w("x");
    let v = w("x*y*x");
    let g = w("y^-1*x*y");
    println!();
    println!(
        "u < v: {:?}; gu < gv: {:?}; ug < vg: {:?}",
        magnus_compare(&u, &v, &vars).unwrap(),
        magnus_compare(&g.mul(&u), &g.mul(&v), &vars).unwrap(),
        magnus_compare(&u.mul(&g), &v.mul(&g), &vars).unwrap(),
    );
}
