//! Integer linear algebra over arbitrary-precision integers: Smith normal
//! form, abelianization of a presentation, and the positive-first-Betti-number
//! left-orderability criterion.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::words::Presentation;

/// Dense integer matrix in row-major order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, entries: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zero(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<i64>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        IntMatrix {
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().map(BigInt::from).collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows);
        let mut out = IntMatrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let prod = a * &other[(k, j)];
                    out[(i, j)] += prod;
                }
            }
        }
        out
    }

    /// Determinant by fraction-free Gaussian elimination (Bareiss).
    pub fn determinant(&self) -> BigInt {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut m = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if m[(k, k)].is_zero() {
                let Some(swap) = (k + 1..n).find(|&i| !m[(i, k)].is_zero()) else {
                    return BigInt::zero();
                };
                for j in 0..n {
                    let tmp = m[(k, j)].clone();
                    m[(k, j)] = m[(swap, j)].clone();
                    m[(swap, j)] = tmp;
                }
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &m[(i, j)] * &m[(k, k)] - &m[(i, k)] * &m[(k, j)];
                    m[(i, j)] = num / &prev;
                }
                m[(i, k)] = BigInt::zero();
            }
            prev = m[(k, k)].clone();
        }
        sign * m[(n - 1, n - 1)].clone()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.entries.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[dst] += factor * row[src]
    fn add_row(&mut self, dst: usize, src: usize, factor: &BigInt) {
        for j in 0..self.cols {
            let add = factor * &self[(src, j)];
            self[(dst, j)] += add;
        }
    }

    /// col[dst] += factor * col[src]
    fn add_col(&mut self, dst: usize, src: usize, factor: &BigInt) {
        for i in 0..self.rows {
            let add = factor * &self[(i, src)];
            self[(i, dst)] += add;
        }
    }

    fn negate_row(&mut self, r: usize) {
        for j in 0..self.cols {
            let v = -self[(r, j)].clone();
            self[(r, j)] = v;
        }
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.entries[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.entries[i * self.cols + j]
    }
}

/// Smith normal form: returns `(D, U, V)` with `U * A * V = D`, `U` and `V`
/// unimodular, and `D` diagonal with nonnegative entries satisfying
/// `d_i | d_{i+1}`.
///
/// Pivot choice: smallest nonzero absolute value, ties broken in row-major
/// order.
pub fn smith_normal_form(a: &IntMatrix) -> (IntMatrix, IntMatrix, IntMatrix) {
    let mut d = a.clone();
    let mut u = IntMatrix::identity(a.rows());
    let mut v = IntMatrix::identity(a.cols());
    let n = a.rows().min(a.cols());

    for t in 0..n {
        loop {
            let Some((pi, pj)) = smallest_pivot(&d, t) else {
                break;
            };
            d.swap_rows(t, pi);
            u.swap_rows(t, pi);
            d.swap_cols(t, pj);
            v.swap_cols(t, pj);

            let mut dirty = false;
            for i in t + 1..d.rows() {
                if d[(i, t)].is_zero() {
                    continue;
                }
                let q = div_nearest(&d[(i, t)], &d[(t, t)]);
                if !q.is_zero() {
                    let f = -q;
                    d.add_row(i, t, &f);
                    u.add_row(i, t, &f);
                }
                if !d[(i, t)].is_zero() {
                    dirty = true;
                }
            }
            for j in t + 1..d.cols() {
                if d[(t, j)].is_zero() {
                    continue;
                }
                let q = div_nearest(&d[(t, j)], &d[(t, t)]);
                if !q.is_zero() {
                    let f = -q;
                    d.add_col(j, t, &f);
                    v.add_col(j, t, &f);
                }
                if !d[(t, j)].is_zero() {
                    dirty = true;
                }
            }
            if dirty {
                continue;
            }
            // row and column are clear; enforce divisibility of the rest
            let mut fixed = true;
            'scan: for i in t + 1..d.rows() {
                for j in t + 1..d.cols() {
                    if !(&d[(i, j)] % &d[(t, t)]).is_zero() {
                        // fold the offending row into row t and retry
                        let one = BigInt::one();
                        d.add_row(t, i, &one);
                        u.add_row(t, i, &one);
                        fixed = false;
                        break 'scan;
                    }
                }
            }
            if fixed {
                break;
            }
        }
        if d[(t, t)].is_negative() {
            d.negate_row(t);
            u.negate_row(t);
        }
    }
    (d, u, v)
}

/// Nearest-integer division keeps pivot growth small.
fn div_nearest(a: &BigInt, b: &BigInt) -> BigInt {
    let (q, r) = num_integer::Integer::div_rem(a, b);
    if r.abs() * 2 > b.abs() {
        if (a.is_negative()) == (b.is_negative()) {
            q + 1
        } else {
            q - 1
        }
    } else {
        q
    }
}

fn smallest_pivot(d: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<((usize, usize), BigInt)> = None;
    for i in t..d.rows() {
        for j in t..d.cols() {
            let v = d[(i, j)].abs();
            if v.is_zero() {
                continue;
            }
            match &best {
                Some((_, m)) if *m <= v => {}
                _ => best = Some(((i, j), v)),
            }
        }
    }
    best.map(|(ij, _)| ij)
}

/// Invariants of a finitely generated abelian group: rank and the torsion
/// coefficients `d_i >= 2` with `d_i | d_{i+1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbelianInvariants {
    pub betti: usize,
    pub torsion: Vec<BigInt>,
}

impl AbelianInvariants {
    pub fn is_trivial(&self) -> bool {
        self.betti == 0 && self.torsion.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.betti == 0
    }
}

/// Exponent-sum matrix of a presentation: one row per relator, one column
/// per generator.
pub fn relation_matrix(p: &Presentation) -> IntMatrix {
    let gens = p.generators();
    let mut m = IntMatrix::zero(p.relators().len(), gens.len());
    for (i, rel) in p.relators().iter().enumerate() {
        for (j, g) in gens.iter().enumerate() {
            m[(i, j)] = BigInt::from(rel.exponent_sum(g));
        }
    }
    m
}

/// First homology of a presentation: invariants of
/// `Z^gens / image(relation matrix)`.
pub fn abelianization(p: &Presentation) -> AbelianInvariants {
    let m = relation_matrix(p);
    let (d, _, _) = smith_normal_form(&m);
    let n = d.rows().min(d.cols());
    let mut rank = 0;
    let mut torsion = Vec::new();
    for t in 0..n {
        let e = &d[(t, t)];
        if e.is_zero() {
            continue;
        }
        rank += 1;
        if *e > BigInt::one() {
            torsion.push(e.clone());
        }
    }
    AbelianInvariants { betti: p.generators().len() - rank, torsion }
}

/// Verdict of the first-Betti-number sufficient condition.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BettiVerdict {
    /// The group is left-orderable provided the presented group is the
    /// fundamental group of a compact, connected, prime, P^2-irreducible
    /// 3-manifold. That topological hypothesis is the caller's to check.
    LoIfP2Irreducible,
    Inconclusive,
}

/// `b_1 >= 1` makes the group of a P^2-irreducible 3-manifold left-orderable.
pub fn lo_via_betti(p: &Presentation) -> BettiVerdict {
    if abelianization(p).betti >= 1 {
        BettiVerdict::LoIfP2Irreducible
    } else {
        BettiVerdict::Inconclusive
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::amalgam::bsw_presentation;
    use crate::words::{klein_bottle_presentation, parse_word, Presentation};
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn snf_check(a: &IntMatrix) -> IntMatrix {
        let (d, u, v) = smith_normal_form(a);
        assert_eq!(u.mul(a).mul(&v), d, "U*A*V = D");
        assert_eq!(u.determinant().abs(), BigInt::one(), "U unimodular");
        assert_eq!(v.determinant().abs(), BigInt::one(), "V unimodular");
        let n = d.rows().min(d.cols());
        for t in 0..n {
            assert!(!d[(t, t)].is_negative());
            if t + 1 < n && !d[(t, t)].is_zero() && !d[(t + 1, t + 1)].is_zero() {
                assert!((&d[(t + 1, t + 1)] % &d[(t, t)]).is_zero(), "divisibility");
            }
            if d[(t, t)].is_zero() && t + 1 < n {
                assert!(d[(t + 1, t + 1)].is_zero(), "zeros trail");
            }
        }
        for i in 0..d.rows() {
            for j in 0..d.cols() {
                if i != j {
                    assert!(d[(i, j)].is_zero(), "diagonal");
                }
            }
        }
        d
    }

    #[test]
    fn snf_identity() {
        let a = IntMatrix::identity(2);
        let d = snf_check(&a);
        assert_eq!(d, IntMatrix::identity(2));
    }

    #[test]
    fn snf_diag_2_3() {
        let a = IntMatrix::from_rows(vec![vec![2, 0], vec![0, 3]]);
        let d = snf_check(&a);
        assert_eq!(d[(0, 0)], BigInt::from(1));
        assert_eq!(d[(1, 1)], BigInt::from(6));
    }

    #[test]
    fn snf_zero() {
        let a = IntMatrix::from_rows(vec![vec![0]]);
        let d = snf_check(&a);
        assert_eq!(d[(0, 0)], BigInt::zero());
    }

    #[test]
    fn snf_random_matrices() {
        let mut rng = StdRng::seed_from_u64(21);
        for _ in 0..200 {
            let r = rng.gen_range(1..=6);
            let c = rng.gen_range(1..=6);
            let rows: Vec<Vec<i64>> = (0..r)
                .map(|_| (0..c).map(|_| rng.gen_range(-9..=9)).collect())
                .collect();
            snf_check(&IntMatrix::from_rows(rows));
        }
    }

    /// Determinant-divisor oracle: d_1 ... d_k = gcd of all k x k minors.
    #[test]
    fn snf_matches_determinant_divisors() {
        let mut rng = StdRng::seed_from_u64(22);
        for _ in 0..60 {
            let r = rng.gen_range(1..=4);
            let c = rng.gen_range(1..=4);
            let rows: Vec<Vec<i64>> = (0..r)
                .map(|_| (0..c).map(|_| rng.gen_range(-9..=9)).collect())
                .collect();
            let a = IntMatrix::from_rows(rows);
            let (d, _, _) = smith_normal_form(&a);
            let n = r.min(c);
            let mut prod = BigInt::one();
            for k in 1..=n {
                let gk = minor_gcd(&a, k);
                if gk.is_zero() {
                    break;
                }
                prod = &prod * &d[(k - 1, k - 1)];
                assert_eq!(prod, gk, "determinant divisor at k={k}");
            }
        }
    }

    fn minor_gcd(a: &IntMatrix, k: usize) -> BigInt {
        let rows: Vec<Vec<usize>> = combinations(a.rows(), k);
        let cols: Vec<Vec<usize>> = combinations(a.cols(), k);
        let mut g = BigInt::zero();
        for rs in &rows {
            for cs in &cols {
                let mut sub = IntMatrix::zero(k, k);
                for (i, &ri) in rs.iter().enumerate() {
                    for (j, &cj) in cs.iter().enumerate() {
                        sub[(i, j)] = a[(ri, cj)].clone();
                    }
                }
                g = num_integer::Integer::gcd(&g, &sub.determinant());
            }
        }
        g
    }

    fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
        if k > n {
            return Vec::new();
        }
        let mut out = Vec::new();
        let mut idx: Vec<usize> = (0..k).collect();
        loop {
            out.push(idx.clone());
            let mut i = k;
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                if idx[i] != i + n - k {
                    break;
                }
            }
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
        }
    }

    #[test]
    fn abelianization_examples() {
        let klein = abelianization(&klein_bottle_presentation());
        assert_eq!(klein.betti, 1);
        assert_eq!(klein.torsion, vec![BigInt::from(2)]);

        let gens = vec!["x".to_string(), "y".to_string()];
        let trefoil = Presentation::new(
            gens.clone(),
            vec![parse_word("x^2*y^-3", &gens).unwrap()],
        )
        .unwrap();
        let inv = abelianization(&trefoil);
        assert_eq!(inv.betti, 1);
        assert!(inv.torsion.is_empty());

        let gens = vec!["a".to_string()];
        let cyclic = Presentation::new(
            gens.clone(),
            vec![parse_word("a^5", &gens).unwrap()],
        )
        .unwrap();
        let inv = abelianization(&cyclic);
        assert_eq!(inv.betti, 0);
        assert_eq!(inv.torsion, vec![BigInt::from(5)]);
    }

    #[test]
    fn abelianization_invariance() {
        let gens = vec!["m".to_string(), "l".to_string()];
        let base = klein_bottle_presentation();
        let expected = abelianization(&base);
        // relator inversion
        let p = Presentation::new(
            gens.clone(),
            vec![base.relators()[0].inverse()],
        )
        .unwrap();
        assert_eq!(abelianization(&p), expected);
        // cyclic permutation: l*m*l^-1*m -> m*l*m*l^-1
        let p = Presentation::new(
            gens.clone(),
            vec![parse_word("m*l*m*l^-1", &gens).unwrap()],
        )
        .unwrap();
        assert_eq!(abelianization(&p), expected);
        // generator reorder
        let gens_r = vec!["l".to_string(), "m".to_string()];
        let p = Presentation::new(
            gens_r.clone(),
            vec![parse_word("l*m*l^-1*m", &gens_r).unwrap()],
        )
        .unwrap();
        assert_eq!(abelianization(&p), expected);
    }

    #[test]
    fn lo_via_betti_examples() {
        let gens = vec!["x".to_string(), "y".to_string()];
        let trefoil = Presentation::new(
            gens.clone(),
            vec![parse_word("x^2*y^-3", &gens).unwrap()],
        )
        .unwrap();
        assert_eq!(lo_via_betti(&trefoil), BettiVerdict::LoIfP2Irreducible);

        assert_eq!(lo_via_betti(&bsw_presentation()), BettiVerdict::Inconclusive);
        assert_eq!(abelianization(&bsw_presentation()).betti, 0);

        let gens = vec!["a".to_string()];
        let z2 = Presentation::new(
            gens.clone(),
            vec![parse_word("a^2", &gens).unwrap()],
        )
        .unwrap();
        assert_eq!(lo_via_betti(&z2), BettiVerdict::Inconclusive);
    }
}
