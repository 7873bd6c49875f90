//! Normal forms in the union of two trefoil-knot exteriors glued along their
//! boundary torus so that meridian and fibre slopes are exchanged:
//!
//! ```text
//! G = < x1, y1, x2, y2 | x1^2 = y1^3, x2^2 = y2^3,
//!                        x1^2 = x2*y2^-1, x2^2 = x1*y1^-1 >
//! ```
//!
//! This is the amalgamated product `T1 *_A T2` of two copies of the trefoil
//! group over `A = Z^2`. In `T_i` the edge subgroup is generated by
//! `h_i = x_i^2` (the fibre) and `c_i = x_i * y_i^-1` (the meridian); the
//! gluing identifies `h1 = c2` and `c1 = h2`. Elements carry a unique normal
//! form `r_1 r_2 ... r_k * a` with the `r_i` nontrivial coset representatives
//! from alternating sides and `a` in the edge group, which makes equality in
//! `G` decidable.

use crate::trefoil::{bsw_edge_membership, Side, TkGen, TkLetter, TorusKnotNF};
use crate::words::{Presentation, Word, WordError};

/// Edge-group element in abstract coordinates `(u, v)`: the element
/// `h1^u c1^v` of `T1`, equal to `c2^u h2^v` of `T2`.
type Edge = (i64, i64);

/// Canonical form: alternating transversal representatives (stored as their
/// h-free syllable words) followed by an edge-group element.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct AmalgamNF {
    pub syllables: Vec<(Side, Vec<TkLetter>)>,
    pub edge: Edge,
}

impl AmalgamNF {
    pub fn identity() -> Self {
        AmalgamNF::default()
    }

    pub fn key(&self) -> String {
        let mut s = String::new();
        for (side, word) in &self.syllables {
            s.push(match side {
                Side::One => '1',
                Side::Two => '2',
            });
            s.push(':');
            for letter in word {
                s.push_str(&letter.to_string());
            }
            s.push('|');
        }
        s.push_str(&format!("#{},{}", self.edge.0, self.edge.1));
        s
    }
}

/// Local edge coordinates `(p, q)` of side `s`, meaning `h_s^p c_s^q`,
/// converted to abstract coordinates.
fn to_abstract(side: Side, local: (i64, i64)) -> Edge {
    match side {
        Side::One => local,
        // h2 = c1-image (second abstract coordinate), c2 = h1-image (first)
        Side::Two => (local.1, local.0),
    }
}

/// Re-expresses an abstract edge element inside the given vertex group.
fn inject(side: Side, edge: Edge) -> TorusKnotNF {
    let (p, q) = match side {
        Side::One => edge,
        Side::Two => (edge.1, edge.0),
    };
    TorusKnotNF::h_power(p).mul(&TorusKnotNF::c_power(q))
}

/// Chooses the transversal representative of the coset `tA`: among
/// `t * c^-q` the word part of minimal (length, lexicographic) rank, with
/// the whole h-exponent flushed into the edge element.
///
/// Multiplying by `c^-q` appends `2|q|` letters and can cancel at most the
/// current word, so `|q| <= len + 1` bounds the search.
fn coset_decompose(side: Side, t: &TorusKnotNF) -> (Vec<TkLetter>, Edge) {
    let qmax = t.syllables.len() as i64 + 1;
    let mut best: Option<(Vec<TkLetter>, i64)> = None;
    for q in -qmax..=qmax {
        let cand = t.mul(&TorusKnotNF::c_power(-q));
        let better = match &best {
            None => true,
            Some((w, _)) => {
                (cand.syllables.len(), &cand.syllables) < (w.len(), w)
            }
        };
        if better {
            best = Some((cand.syllables.clone(), q));
        }
    }
    let (word, _) = best.expect("q = 0 always produces a candidate");
    let rep = TorusKnotNF { h_exponent: 0, syllables: word.clone() };
    let a = rep.inverse().mul(t);
    let local = bsw_edge_membership(&a, side)
        .expect("difference of coset members lies in the edge group");
    (word, to_abstract(side, local))
}

/// Running product of an alternating sequence of vertex elements outside the
/// edge group, with a trailing edge element.
#[derive(Default)]
struct Reducer {
    stack: Vec<(Side, TorusKnotNF)>,
    tail: Edge,
}

impl Reducer {
    fn push_letter(&mut self, side: Side, gen: TkGen, sign: i64) {
        let mut letter = TorusKnotNF::identity();
        letter.push_generator(gen, sign);
        let t = inject(side, self.tail).mul(&letter);
        self.tail = (0, 0);
        self.absorb(side, t);
    }

    fn absorb(&mut self, side: Side, t: TorusKnotNF) {
        if let Some(local) = bsw_edge_membership(&t, side) {
            self.tail = to_abstract(side, local);
            return;
        }
        if let Some((top_side, _)) = self.stack.last() {
            if *top_side == side {
                let (_, top) = self.stack.pop().unwrap();
                let merged = top.mul(&t);
                self.absorb(side, merged);
                return;
            }
        }
        self.stack.push((side, t));
    }

    /// Rewrites the alternating product into transversal form, flushing edge
    /// parts rightward.
    fn finish(self) -> AmalgamNF {
        let mut carry: Edge = (0, 0);
        let mut syllables = Vec::with_capacity(self.stack.len());
        for (side, g) in self.stack {
            let t = inject(side, carry).mul(&g);
            let (word, a) = coset_decompose(side, &t);
            debug_assert!(!word.is_empty());
            syllables.push((side, word));
            carry = a;
        }
        AmalgamNF {
            syllables,
            edge: (carry.0 + self.tail.0, carry.1 + self.tail.1),
        }
    }
}

fn letter_of(gen: &str) -> Option<(Side, TkGen)> {
    match gen {
        "x1" => Some((Side::One, TkGen::X)),
        "y1" => Some((Side::One, TkGen::Y)),
        "x2" => Some((Side::Two, TkGen::X)),
        "y2" => Some((Side::Two, TkGen::Y)),
        _ => None,
    }
}

/// Normal form of a word over `{x1, y1, x2, y2}`.
pub fn amalgam_nf(w: &Word) -> Result<AmalgamNF, WordError> {
    let mut red = Reducer::default();
    for (gen, sign) in w.letters() {
        let (side, g) =
            letter_of(gen).ok_or_else(|| WordError::OutsideAlphabet(gen.to_string()))?;
        red.push_letter(side, g, sign);
    }
    Ok(red.finish())
}

/// Exact equality in the amalgamated product.
pub fn amalgam_equal(w1: &Word, w2: &Word) -> Result<bool, WordError> {
    Ok(amalgam_nf(w1)? == amalgam_nf(w2)?)
}

pub fn bsw_generators() -> Vec<String> {
    ["x1", "y1", "x2", "y2"].iter().map(|s| s.to_string()).collect()
}

/// The four-relator presentation of the glued manifold's fundamental group.
pub fn bsw_presentation() -> Presentation {
    let gens = bsw_generators();
    let rel = |text: &str| crate::words::parse_word(text, &gens).unwrap();
    Presentation::new(
        gens.clone(),
        vec![
            rel("x1^2*y1^-3"),
            rel("x2^2*y2^-3"),
            rel("x1^2*y2*x2^-1"),
            rel("x2^2*y1*x1^-1"),
        ],
    )
    .unwrap()
}
