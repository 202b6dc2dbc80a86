//! Arbitrary-precision integer matrices and the normal forms everything
//! else is built on.
//!
//! Conventions: matrices are row-major, Hermite normal form is row-style
//! (pivots positive, entries above a pivot reduced into `[0, pivot)`),
//! Smith normal form has a nonnegative diagonal with a divisibility chain.

use num::{BigInt, BigRational, Integer, One, Signed, Zero};

pub type Int = BigInt;
pub type Rat = BigRational;

pub fn int(v: i64) -> Int {
    Int::from(v)
}

pub fn ivec(vals: &[i64]) -> Vec<Int> {
    vals.iter().map(|&v| Int::from(v)).collect()
}

pub fn vdot(a: &[Int], b: &[Int]) -> Int {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn vadd(a: &[Int], b: &[Int]) -> Vec<Int> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn vsub(a: &[Int], b: &[Int]) -> Vec<Int> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn vneg(a: &[Int]) -> Vec<Int> {
    a.iter().map(|x| -x).collect()
}

pub fn vscale(c: &Int, a: &[Int]) -> Vec<Int> {
    a.iter().map(|x| c * x).collect()
}

pub fn vzero(n: usize) -> Vec<Int> {
    vec![Int::zero(); n]
}

pub fn is_zero_vec(a: &[Int]) -> bool {
    a.iter().all(|x| x.is_zero())
}

/// gcd of the entries; zero for the zero vector.
pub fn content(a: &[Int]) -> Int {
    let mut g = Int::zero();
    for x in a {
        g = g.gcd(x);
    }
    g
}

/// Divide out the content, leaving the zero vector unchanged.
pub fn primitive(a: &[Int]) -> Vec<Int> {
    let g = content(a);
    if g.is_zero() {
        return a.to_vec();
    }
    a.iter().map(|x| x / &g).collect()
}

/// Primitive with the first nonzero entry positive; canonical up to sign.
pub fn primitive_signed(a: &[Int]) -> Vec<Int> {
    let p = primitive(a);
    match p.iter().find(|x| !x.is_zero()) {
        Some(x) if x.is_negative() => vneg(&p),
        _ => p,
    }
}

pub fn rat_vec(a: &[Int]) -> Vec<Rat> {
    a.iter().map(|x| Rat::from_integer(x.clone())).collect()
}

pub fn rdot(a: &[Rat], b: &[Rat]) -> Rat {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Clear denominators and make primitive, preserving orientation.
pub fn clear_denominators(a: &[Rat]) -> Vec<Int> {
    let mut lcm = Int::one();
    for x in a {
        lcm = lcm.lcm(x.denom());
    }
    let ints: Vec<Int> = a.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
    let g = content(&ints);
    if g.is_zero() {
        ints
    } else {
        ints.iter().map(|x| x / &g).collect()
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Int>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![Int::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Int::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Int>>, cols: usize) -> Self {
        for r in &rows {
            assert_eq!(r.len(), cols, "ragged row");
        }
        let nrows = rows.len();
        IntMatrix { rows: nrows, cols, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        Self::from_rows(rows.iter().map(|r| ivec(r)).collect(), cols)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Int] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vec(&self, i: usize) -> Vec<Int> {
        self.row(i).to_vec()
    }

    pub fn row_list(&self) -> Vec<Vec<Int>> {
        (0..self.rows).map(|i| self.row_vec(i)).collect()
    }

    pub fn col_vec(&self, j: usize) -> Vec<Int> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = IntMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in matrix product");
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let t = a * &other[(k, j)];
                    out[(i, j)] += t;
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Int]) -> Vec<Int> {
        assert_eq!(self.cols, v.len());
        (0..self.rows).map(|i| vdot(self.row(i), v)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let idx = i * self.cols + j;
            let v = -std::mem::take(&mut self.data[idx]);
            self.data[idx] = v;
        }
    }

    /// row[dst] += q * row[src]
    fn add_multiple(&mut self, dst: usize, src: usize, q: &Int) {
        if q.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let t = q * &self.data[src * self.cols + j];
            self.data[dst * self.cols + j] += t;
        }
    }

    /// Fraction-free determinant (Bareiss).
    pub fn det(&self) -> Int {
        assert_eq!(self.rows, self.cols, "determinant of non-square matrix");
        let n = self.rows;
        if n == 0 {
            return Int::one();
        }
        let mut m = self.clone();
        let mut sign = Int::one();
        let mut prev = Int::one();
        for k in 0..n - 1 {
            if m[(k, k)].is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !m[(i, k)].is_zero()) else {
                    return Int::zero();
                };
                m.swap_rows(k, p);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let t = &m[(k, k)] * &m[(i, j)] - &m[(i, k)] * &m[(k, j)];
                    m[(i, j)] = &t / &prev;
                }
                m[(i, k)] = Int::zero();
            }
            prev = m[(k, k)].clone();
        }
        sign * m[(n - 1, n - 1)].clone()
    }

    pub fn is_unimodular(&self) -> bool {
        self.rows == self.cols && self.det().abs().is_one()
    }

    /// Row Hermite normal form.
    ///
    /// Returns `(h, u)` with `u` unimodular and `u * self = h`. Pivots are
    /// positive, entries above a pivot lie in `[0, pivot)`, pivot columns
    /// strictly increase, and zero rows sink to the bottom.
    pub fn hermite_normal_form(&self) -> (IntMatrix, IntMatrix) {
        let mut h = self.clone();
        let mut u = IntMatrix::identity(self.rows);
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            // Euclidean sweep on the column below `row`.
            loop {
                let mut best: Option<usize> = None;
                for i in row..self.rows {
                    if !h[(i, col)].is_zero()
                        && best.map_or(true, |b| h[(i, col)].abs() < h[(b, col)].abs())
                    {
                        best = Some(i);
                    }
                }
                let Some(p) = best else { break };
                h.swap_rows(row, p);
                u.swap_rows(row, p);
                let mut done = true;
                for i in row + 1..self.rows {
                    if h[(i, col)].is_zero() {
                        continue;
                    }
                    let q = -(&h[(i, col)] / &h[(row, col)]);
                    h.add_multiple(i, row, &q);
                    u.add_multiple(i, row, &q);
                    if !h[(i, col)].is_zero() {
                        done = false;
                    }
                }
                if done {
                    break;
                }
            }
            if h[(row, col)].is_zero() {
                continue;
            }
            if h[(row, col)].is_negative() {
                h.negate_row(row);
                u.negate_row(row);
            }
            for i in 0..row {
                let q = -h[(i, col)].div_floor(&h[(row, col)]);
                h.add_multiple(i, row, &q);
                u.add_multiple(i, row, &q);
            }
            row += 1;
        }
        (h, u)
    }

    /// Smith normal form.
    ///
    /// Returns `(s, u, v)` with `u`, `v` unimodular and `u * self * v = s`,
    /// `s` diagonal with nonnegative entries `s_1 | s_2 | ...`.
    pub fn smith_normal_form(&self) -> (IntMatrix, IntMatrix, IntMatrix) {
        let mut s = self.clone();
        let mut u = IntMatrix::identity(self.rows);
        let mut v = IntMatrix::identity(self.cols);
        let n = self.rows.min(self.cols);
        let swap_cols = |s: &mut IntMatrix, v: &mut IntMatrix, a: usize, b: usize| {
            if a == b {
                return;
            }
            for i in 0..s.rows {
                s.data.swap(i * s.cols + a, i * s.cols + b);
            }
            for i in 0..v.rows {
                v.data.swap(i * v.cols + a, i * v.cols + b);
            }
        };
        for t in 0..n {
            'pivot: loop {
                let mut best: Option<(usize, usize)> = None;
                for i in t..self.rows {
                    for j in t..self.cols {
                        if !s[(i, j)].is_zero()
                            && best.map_or(true, |(bi, bj)| s[(i, j)].abs() < s[(bi, bj)].abs())
                        {
                            best = Some((i, j));
                        }
                    }
                }
                let Some((pi, pj)) = best else { break 'pivot };
                s.swap_rows(t, pi);
                u.swap_rows(t, pi);
                swap_cols(&mut s, &mut v, t, pj);
                let mut clean = true;
                for i in t + 1..self.rows {
                    if s[(i, t)].is_zero() {
                        continue;
                    }
                    let q = -(&s[(i, t)] / &s[(t, t)]);
                    s.add_multiple(i, t, &q);
                    u.add_multiple(i, t, &q);
                    if !s[(i, t)].is_zero() {
                        clean = false;
                    }
                }
                for j in t + 1..self.cols {
                    if s[(t, j)].is_zero() {
                        continue;
                    }
                    let q = -(&s[(t, j)] / &s[(t, t)]);
                    // column op: col_j += q * col_t
                    for i in 0..s.rows {
                        let add = &q * &s[(i, t)];
                        s[(i, j)] += add;
                    }
                    for i in 0..v.rows {
                        let add = &q * &v[(i, t)];
                        v[(i, j)] += add;
                    }
                    if !s[(t, j)].is_zero() {
                        clean = false;
                    }
                }
                if !clean {
                    continue 'pivot;
                }
                // Divisibility fix: fold in any entry the pivot misses.
                for i in t + 1..self.rows {
                    for j in t + 1..self.cols {
                        if !(&s[(i, j)] % &s[(t, t)]).is_zero() {
                            let one = Int::one();
                            s.add_multiple(t, i, &one);
                            u.add_multiple(t, i, &one);
                            continue 'pivot;
                        }
                    }
                }
                break 'pivot;
            }
            if s[(t, t)].is_negative() {
                s.negate_row(t);
                u.negate_row(t);
            }
        }
        (s, u, v)
    }

    pub fn diagonal(&self) -> Vec<Int> {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)].clone()).collect()
    }

    /// Rank over the rationals.
    pub fn rank(&self) -> usize {
        let (h, _) = self.hermite_normal_form();
        (0..h.rows).filter(|&i| !is_zero_vec(h.row(i))).count()
    }

    /// Basis of the integer right kernel `{ x : self * x = 0 }`, as rows.
    ///
    /// The returned lattice is saturated.
    pub fn right_kernel(&self) -> IntMatrix {
        let (s, _, v) = self.smith_normal_form();
        let r = (0..self.rows.min(self.cols)).filter(|&i| !s[(i, i)].is_zero()).count();
        let rows: Vec<Vec<Int>> = (r..self.cols).map(|j| v.col_vec(j)).collect();
        IntMatrix::from_rows(rows, self.cols)
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = Int;
    fn index(&self, (i, j): (usize, usize)) -> &Int {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Int {
        &mut self.data[i * self.cols + j]
    }
}

/// Rank of a set of integer vectors over the rationals.
pub fn rank_of_rows(rows: &[Vec<Int>], cols: usize) -> usize {
    if rows.is_empty() {
        return 0;
    }
    IntMatrix::from_rows(rows.to_vec(), cols).rank()
}

/// Solve `A x = b` over the rationals by Gaussian elimination.
///
/// Returns one solution (free variables set to zero), or `None` when the
/// system is inconsistent.
pub fn solve_rational(a: &[Vec<Rat>], b: &[Rat]) -> Option<Vec<Rat>> {
    let rows = a.len();
    assert_eq!(rows, b.len());
    let cols = a.first().map_or(0, |r| r.len());
    let mut m: Vec<Vec<Rat>> = a
        .iter()
        .zip(b)
        .map(|(r, rhs)| {
            let mut row = r.clone();
            row.push(rhs.clone());
            row
        })
        .collect();
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut prow = 0;
    for col in 0..cols {
        let Some(p) = (prow..rows).find(|&i| !m[i][col].is_zero()) else { continue };
        m.swap(prow, p);
        let inv = m[prow][col].clone();
        for j in col..=cols {
            let t = &m[prow][j] / &inv;
            m[prow][j] = t;
        }
        for i in 0..rows {
            if i != prow && !m[i][col].is_zero() {
                let f = m[i][col].clone();
                for j in col..=cols {
                    let t = &m[i][j] - &f * &m[prow][j];
                    m[i][j] = t;
                }
            }
        }
        pivots.push((prow, col));
        prow += 1;
        if prow == rows {
            break;
        }
    }
    for i in prow..rows {
        if !m[i][cols].is_zero() {
            return None;
        }
    }
    let mut x = vec![Rat::zero(); cols];
    for &(r, c) in &pivots {
        x[c] = m[r][cols].clone();
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> IntMatrix {
        IntMatrix::from_i64(rows)
    }

    /// Independent check: re-multiply the transforms and verify the normal
    /// form shape directly.
    fn check_hnf(a: &IntMatrix) {
        let (h, u) = a.hermite_normal_form();
        assert!(u.is_unimodular(), "u not unimodular");
        assert_eq!(u.mul(a), h, "u*m != h");
        // shape: pivot columns strictly increase, pivots positive, entries
        // above pivots reduced
        let mut last_pivot: Option<usize> = None;
        let mut seen_zero = false;
        for i in 0..h.rows() {
            let piv = (0..h.cols()).find(|&j| !h[(i, j)].is_zero());
            match piv {
                None => seen_zero = true,
                Some(j) => {
                    assert!(!seen_zero, "zero row above nonzero row");
                    assert!(h[(i, j)].is_positive());
                    if let Some(l) = last_pivot {
                        assert!(j > l);
                    }
                    for k in 0..i {
                        assert!(!h[(k, j)].is_negative() && h[(k, j)] < h[(i, j)]);
                    }
                    last_pivot = Some(j);
                }
            }
        }
    }

    fn check_snf(a: &IntMatrix) {
        let (s, u, v) = a.smith_normal_form();
        assert!(u.is_unimodular());
        assert!(v.is_unimodular());
        assert_eq!(u.mul(a).mul(&v), s);
        let d = s.diagonal();
        for i in 0..s.rows() {
            for j in 0..s.cols() {
                if i != j {
                    assert!(s[(i, j)].is_zero());
                }
            }
        }
        for w in d.windows(2) {
            if !w[0].is_zero() {
                assert!((&w[1] % &w[0]).is_zero());
            } else {
                assert!(w[1].is_zero());
            }
        }
    }

    #[test]
    fn hnf_identity() {
        let id = IntMatrix::identity(2);
        let (h, u) = id.hermite_normal_form();
        assert_eq!(h, id);
        assert_eq!(u, id);
    }

    #[test]
    fn hnf_already_reduced() {
        let a = m(&[&[3, 0, -3], &[0, 3, -3]]);
        let (h, _) = a.hermite_normal_form();
        assert_eq!(h, m(&[&[3, 0, -3], &[0, 3, -3]]));
        check_hnf(&a);
    }

    #[test]
    fn hnf_small() {
        let a = m(&[&[2, 4], &[1, 3]]);
        let (h, _) = a.hermite_normal_form();
        // fully reduced form of the lattice with echelon basis {(1,3),(0,2)}
        assert_eq!(h, m(&[&[1, 1], &[0, 2]]));
        let (h2, _) = m(&[&[1, 3], &[0, 2]]).hermite_normal_form();
        assert_eq!(h2, h, "same row lattice as {{(1,3),(0,2)}}");
        check_hnf(&a);
    }

    #[test]
    fn snf_identity() {
        let id = IntMatrix::identity(3);
        let (s, u, v) = id.smith_normal_form();
        assert_eq!(s, id);
        assert_eq!(u, id);
        assert_eq!(v, id);
    }

    #[test]
    fn snf_diag22() {
        let a = m(&[&[2, -2, 0], &[2, 0, -2]]);
        let (s, _, _) = a.smith_normal_form();
        assert_eq!(s.diagonal(), ivec(&[2, 2]));
        check_snf(&a);
    }

    #[test]
    fn snf_diag33() {
        let a = m(&[&[3, 0, -3], &[0, 3, -3]]);
        let (s, _, _) = a.smith_normal_form();
        assert_eq!(s.diagonal(), ivec(&[3, 3]));
        check_snf(&a);
    }

    #[test]
    fn kernel_is_kernel() {
        let a = m(&[&[1, 1, 1, 1], &[0, 2, 4, 6]]);
        let k = a.right_kernel();
        assert_eq!(k.rows(), 2);
        for i in 0..k.rows() {
            assert!(is_zero_vec(&a.mul_vec(k.row(i))));
        }
    }

    #[test]
    fn det_bareiss() {
        assert_eq!(m(&[&[2, 0], &[0, 3]]).det(), int(6));
        assert_eq!(m(&[&[1, 2], &[2, 4]]).det(), int(0));
        assert_eq!(m(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, 1]]).det(), int(-1));
    }

    #[test]
    fn solve_rational_consistent() {
        let a: Vec<Vec<Rat>> = vec![rat_vec(&ivec(&[1, 1])), rat_vec(&ivec(&[1, -1]))];
        let b = rat_vec(&ivec(&[3, 1]));
        let x = solve_rational(&a, &b).unwrap();
        assert_eq!(x, rat_vec(&ivec(&[2, 1])));
        let bad = solve_rational(
            &[rat_vec(&ivec(&[1, 1])), rat_vec(&ivec(&[2, 2]))],
            &rat_vec(&ivec(&[1, 3])),
        );
        assert!(bad.is_none());
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn small_matrix() -> impl Strategy<Value = IntMatrix> {
            (1usize..=4, 1usize..=4).prop_flat_map(|(r, c)| {
                proptest::collection::vec(-6i64..=6, r * c).prop_map(move |vals| {
                    let rows: Vec<Vec<Int>> =
                        vals.chunks(c).map(|ch| ch.iter().map(|&v| int(v)).collect()).collect();
                    IntMatrix::from_rows(rows, c)
                })
            })
        }

        proptest! {
            #[test]
            fn hnf_reconstruction(a in small_matrix()) {
                check_hnf(&a);
            }

            #[test]
            fn snf_reconstruction(a in small_matrix()) {
                check_snf(&a);
            }
        }
    }
}
