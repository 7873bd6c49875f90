//! A bi-order on `G = <a, b, c | a*b*a^-1*b^-1 = c^2>`, the fundamental
//! group of the connected sum of three projective planes, assembled from the
//! lexicographic order on the abelian quotient and the power-series order on
//! the free kernel.
//!
//! ```bash
//! cargo run -p ord3m --example surface_biorder
//! ```

use ord3m::magnus::Comparison;
use ord3m::surface::{normal_form, psi, schreier_rewrite, surface_compare, SurfaceElement};

fn main() {
    let el = |text: &str| SurfaceElement::parse(text).unwrap();
    let sym = |c: Comparison| match c {
        Comparison::Lt => "<",
        Comparison::Eq => "=",
        Comparison::Gt => ">",
    };

    // the quotient map and the kernel rewriting
    for text in ["a", "c", "a^2*b^-1*c^3"] {
        let g = el(text);
        println!("psi({text}) = {:?}", psi(&g));
    }
    println!();
    for text in ["c", "a*c*a^-1", "a*b*a^-1*b^-1", "b^-1*a*b*a^-1"] {
        let k = schreier_rewrite(&el(text)).unwrap();
        println!("{text} rewrites to {k}");
    }

    // unique factorization g = (kernel word) * a^m b^n
    println!();
    for text in ["c*a", "a*b*c^-1", "c^2*b*a*b^-1*a^-1"] {
        let nf = normal_form(&el(text));
        println!("{text} = {} * a^{} b^{}", nf.kernel, nf.translation.0, nf.translation.1);
    }

    // comparisons; the defining relator collapses to the identity
    println!();
    let identity = SurfaceElement::identity();
    for text in ["a", "c", "a*b*a^-1*b^-1*c^-2", "c^-1*b"] {
        let g = el(text);
        println!("1 {} {text}", sym(surface_compare(&identity, &g)));
    }

    // conjugation shifts the kernel generators without breaking the order
    let g = el("a^2*b");
    let x = el("c");
    let conj = g.mul(&x).mul(&g.inverse());
    let k = schreier_rewrite(&conj).unwrap();
    println!();
    println!("(a^2*b) c (a^2*b)^-1 rewrites to {k}");
}
