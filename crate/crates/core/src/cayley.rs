//! Cayley structures: affine-linear maps from a face of a point
//! configuration into a dilated standard simplex, enumerated up to
//! permutation of the simplex coordinates and classified as
//! imprimitive / cuspidal / nodal / smooth.

use crate::lattice::{exceptional_lattices, span_of_differences, Sublattice};
use crate::matrix::{
    clear_denominators, int, rat_vec, rdot, solve_rational, vdot, vsub, Int, IntMatrix, Rat,
};
use crate::polytope::Face;
use crate::{Error, Result};
use num::{One, Signed, Zero};
use sha2::{Digest, Sha256};

/// A non-constant affine-linear map `pi : tau -> Delta_ell(d)`, stored as
/// one row of simplex coordinates per point of the face.
///
/// Invariants: entries nonnegative, every row sums to the degree, the
/// columns extend affinely over the face, and at least two rows differ.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WeakCayleyStructure {
    face: Face,
    degree: Int,
    values: IntMatrix,
}

/// Basepoint and conciseness report for a weak structure.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BasepointReport {
    pub basepoints: Vec<usize>,
    pub concise: bool,
}

/// Column indices whose minimum over the rows is strictly positive.
pub fn basepoints_of(values: &IntMatrix) -> Vec<usize> {
    (0..values.cols())
        .filter(|&j| (0..values.rows()).all(|i| values[(i, j)].is_positive()))
        .collect()
}

fn column_minima(values: &IntMatrix) -> Vec<Int> {
    (0..values.cols())
        .map(|j| (0..values.rows()).map(|i| values[(i, j)].clone()).min().unwrap())
        .collect()
}

/// Integer basis of the affine dependencies among the face's points.
fn affine_dependencies(face: &Face) -> IntMatrix {
    let pts = face.points();
    let n = face.config().ambient_rank();
    // columns (p, 1); dependencies are the right kernel
    let rows: Vec<Vec<Int>> = (0..=n)
        .map(|coord| {
            pts.iter()
                .map(|p| if coord < n { p[coord].clone() } else { Int::one() })
                .collect()
        })
        .collect();
    IntMatrix::from_rows(rows, pts.len()).right_kernel()
}

impl WeakCayleyStructure {
    pub fn new(face: Face, values: IntMatrix) -> Result<Self> {
        if values.rows() != face.len() {
            return Err(Error::InvalidStructure(format!(
                "value matrix has {} rows for a face with {} points",
                values.rows(),
                face.len()
            )));
        }
        if values.cols() < 2 {
            return Err(Error::InvalidStructure("length must be at least one".into()));
        }
        let mut degree: Option<Int> = None;
        for i in 0..values.rows() {
            let mut sum = Int::zero();
            for j in 0..values.cols() {
                if values[(i, j)].is_negative() {
                    return Err(Error::InvalidStructure("negative simplex coordinate".into()));
                }
                sum += &values[(i, j)];
            }
            match &degree {
                None => degree = Some(sum),
                Some(d) if *d == sum => {}
                Some(d) => {
                    return Err(Error::InvalidStructure(format!(
                        "row sums differ: {d} vs {sum}"
                    )))
                }
            }
        }
        let degree = degree.expect("face is nonempty");
        let first = values.row(0);
        if (1..values.rows()).all(|i| values.row(i) == first) {
            return Err(Error::InvalidStructure("constant map".into()));
        }
        let deps = affine_dependencies(&face);
        for i in 0..deps.rows() {
            let lam = deps.row(i);
            for j in 0..values.cols() {
                let s: Int = (0..values.rows()).map(|r| &lam[r] * &values[(r, j)]).sum();
                if !s.is_zero() {
                    return Err(Error::InvalidStructure(
                        "values do not extend affine-linearly".into(),
                    ));
                }
            }
        }
        Ok(WeakCayleyStructure { face, degree, values })
    }

    pub fn face(&self) -> &Face {
        &self.face
    }

    pub fn degree(&self) -> &Int {
        &self.degree
    }

    pub fn length(&self) -> usize {
        self.values.cols() - 1
    }

    pub fn values(&self) -> &IntMatrix {
        &self.values
    }

    /// Distinct rows of the value matrix, sorted: the image set.
    pub fn image(&self) -> Vec<Vec<Int>> {
        let mut rows = self.values.row_list();
        rows.sort();
        rows.dedup();
        rows
    }

    /// Lattice of differences of the image.
    pub fn image_lattice(&self) -> Sublattice {
        span_of_differences(&self.image())
    }

    pub fn classify(&self) -> BasepointReport {
        let basepoints = basepoints_of(&self.values);
        let concise = (0..self.values.cols())
            .all(|j| (0..self.values.rows()).any(|i| !self.values[(i, j)].is_zero()));
        BasepointReport { basepoints, concise }
    }

    /// Subtract the coordinatewise minimum; the result is basepoint-free
    /// and the operation is idempotent.
    pub fn resolution(&self) -> WeakCayleyStructure {
        let mins = column_minima(&self.values);
        let rows: Vec<Vec<Int>> = (0..self.values.rows())
            .map(|i| (0..self.values.cols()).map(|j| &self.values[(i, j)] - &mins[j]).collect())
            .collect();
        let values = IntMatrix::from_rows(rows, self.values.cols());
        let degree = &self.degree - mins.iter().sum::<Int>();
        WeakCayleyStructure { face: self.face.clone(), degree, values }
    }

    /// Delete the coordinates identically zero on the image; the result is
    /// concise and the operation is idempotent.
    pub fn concision(&self) -> WeakCayleyStructure {
        let keep: Vec<usize> = (0..self.values.cols())
            .filter(|&j| (0..self.values.rows()).any(|i| !self.values[(i, j)].is_zero()))
            .collect();
        let rows: Vec<Vec<Int>> = (0..self.values.rows())
            .map(|i| keep.iter().map(|&j| self.values[(i, j)].clone()).collect())
            .collect();
        let values = IntMatrix::from_rows(rows, keep.len());
        WeakCayleyStructure { face: self.face.clone(), degree: self.degree.clone(), values }
    }

    /// Concision of the resolution: always a Cayley structure.
    pub fn normalized(&self) -> CayleyStructure {
        let w = self.resolution().concision();
        CayleyStructure::new(w.face, w.values)
            .expect("concision of a resolution is basepoint-free and concise")
    }

    /// Value rows over a subset face, without any constancy requirement.
    pub fn restricted_values(&self, sub: &Face) -> IntMatrix {
        assert!(self.face.contains_face(sub), "restriction target is not a subface");
        let pos: Vec<usize> = sub
            .indices()
            .iter()
            .map(|i| self.face.indices().iter().position(|j| j == i).unwrap())
            .collect();
        IntMatrix::from_rows(
            pos.iter().map(|&r| self.values.row_vec(r)).collect(),
            self.values.cols(),
        )
    }

    /// Restriction to a subface as a weak structure; errors when the
    /// restriction is constant.
    pub fn restrict(&self, sub: &Face) -> Result<WeakCayleyStructure> {
        let values = self.restricted_values(sub);
        WeakCayleyStructure::new(sub.clone(), values)
    }

    /// Reduction: for a one-dimensional image, the induced length-one
    /// structure of degree d' (the lattice length of the image hull) and
    /// the multiplicity d/d'. Anything else is its own reduction.
    pub fn reduction(&self) -> (WeakCayleyStructure, Int) {
        let image = self.image();
        let lat = span_of_differences(&image);
        if lat.rank() != 1 {
            return (self.clone(), Int::one());
        }
        let gen = lat.basis_rows().pop().unwrap();
        let base = self.values.row_vec(0);
        let j = (0..gen.len()).find(|&j| !gen[j].is_zero()).unwrap();
        let steps: Vec<Int> = (0..self.values.rows())
            .map(|i| (&self.values[(i, j)] - &base[j]) / &gen[j])
            .collect();
        let kmin = steps.iter().min().unwrap().clone();
        let kmax = steps.iter().max().unwrap().clone();
        let dprime = &kmax - &kmin;
        let rows: Vec<Vec<Int>> =
            steps.iter().map(|k| vec![k - &kmin, &kmax - k]).collect();
        let values = IntMatrix::from_rows(rows, 2);
        let red = WeakCayleyStructure {
            face: self.face.clone(),
            degree: dprime.clone(),
            values,
        };
        let mult = &self.degree / &dprime;
        debug_assert_eq!(&mult * &dprime, self.degree, "degree divisible by reduced degree");
        (red, mult)
    }
}

/// A basepoint-free and concise weak Cayley structure.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CayleyStructure {
    weak: WeakCayleyStructure,
}

impl CayleyStructure {
    pub fn new(face: Face, values: IntMatrix) -> Result<Self> {
        let weak = WeakCayleyStructure::new(face, values)?;
        let report = weak.classify();
        if !report.basepoints.is_empty() {
            return Err(Error::InvalidStructure(format!(
                "not basepoint-free: basepoints {:?}",
                report.basepoints
            )));
        }
        if !report.concise {
            return Err(Error::InvalidStructure("not concise".into()));
        }
        Ok(CayleyStructure { weak })
    }

    pub fn weak(&self) -> &WeakCayleyStructure {
        &self.weak
    }

    pub fn face(&self) -> &Face {
        self.weak.face()
    }

    pub fn degree(&self) -> &Int {
        self.weak.degree()
    }

    pub fn length(&self) -> usize {
        self.weak.length()
    }

    pub fn values(&self) -> &IntMatrix {
        self.weak.values()
    }

    pub fn image(&self) -> Vec<Vec<Int>> {
        self.weak.image()
    }

    pub fn image_lattice(&self) -> Sublattice {
        self.weak.image_lattice()
    }

    /// Columns sorted lexicographically non-increasing: the canonical
    /// representative of the equivalence class under coordinate
    /// permutations.
    pub fn canonical_values(&self) -> IntMatrix {
        let v = self.weak.values();
        let mut cols: Vec<Vec<Int>> = (0..v.cols()).map(|j| v.col_vec(j)).collect();
        cols.sort_by(|a, b| b.cmp(a));
        let rows: Vec<Vec<Int>> = (0..v.rows())
            .map(|i| cols.iter().map(|c| c[i].clone()).collect())
            .collect();
        IntMatrix::from_rows(rows, v.cols())
    }

    pub fn canonicalized(&self) -> CayleyStructure {
        CayleyStructure::new(self.face().clone(), self.canonical_values())
            .expect("permuting columns preserves the invariants")
    }

    /// Same face and same canonical value matrix.
    pub fn equivalent_to(&self, other: &CayleyStructure) -> bool {
        self.face().indices() == other.face().indices()
            && self.canonical_values() == other.canonical_values()
    }

    /// Stable equivalence-class hash for cross-run references.
    pub fn class_hash(&self) -> String {
        let mut hasher = Sha256::new();
        hasher.update(b"cayley:");
        for i in self.face().indices() {
            hasher.update(i.to_string().as_bytes());
            hasher.update(b",");
        }
        hasher.update(b";");
        hasher.update(self.degree().to_string().as_bytes());
        hasher.update(b";");
        let canon = self.canonical_values();
        for i in 0..canon.rows() {
            for j in 0..canon.cols() {
                hasher.update(canon[(i, j)].to_string().as_bytes());
                hasher.update(b",");
            }
            hasher.update(b"|");
        }
        let digest = hasher.finalize();
        digest.iter().take(8).map(|b| format!("{b:02x}")).collect()
    }

    pub fn reduction(&self) -> (CayleyStructure, Int) {
        let (red, mult) = self.weak.reduction();
        let red = CayleyStructure::new(red.face, red.values)
            .expect("reduction of a Cayley structure is a Cayley structure");
        (red, mult)
    }

    /// Primitive: not (one-dimensional image with redundant length or with
    /// an image lattice inside `m Z^2`).
    pub fn is_primitive(&self) -> bool {
        let lat = self.image_lattice();
        if lat.rank() != 1 {
            return true;
        }
        if self.length() > 1 {
            return false;
        }
        let gen = lat.basis_rows().pop().unwrap();
        crate::matrix::content(&gen).is_one()
    }

    fn require_primitive(&self) -> Result<()> {
        if self.is_primitive() {
            Ok(())
        } else {
            Err(Error::Imprimitive)
        }
    }

    /// Cuspidal: some coordinate vanishes at exactly one image point and
    /// exceeds one everywhere else.
    pub fn is_cuspidal(&self) -> Result<bool> {
        self.require_primitive()?;
        let image = self.image();
        let ell1 = self.values().cols();
        for i in 0..ell1 {
            for v in &image {
                if v[i].is_zero()
                    && image.iter().filter(|w| *w != v).all(|w| w[i] > Int::one())
                {
                    return Ok(true);
                }
            }
        }
        Ok(false)
    }

    /// Nodal: either a marked node witness (two coordinates vanishing at a
    /// single common image point) or a planar image lattice that avoids
    /// `e_i - e_j` and is not one of the five exceptional lattices.
    pub fn is_nodal(&self) -> Result<bool> {
        self.require_primitive()?;
        let image = self.image();
        let ell1 = self.values().cols();
        for i in 0..ell1 {
            for j in i + 1..ell1 {
                for v in &image {
                    if v[i].is_zero()
                        && v[j].is_zero()
                        && image
                            .iter()
                            .filter(|w| *w != v)
                            .all(|w| w[i].is_positive() && w[j].is_positive())
                    {
                        return Ok(true);
                    }
                }
            }
        }
        let lat = self.image_lattice();
        if lat.rank() != 2 {
            return Ok(false);
        }
        for i in 0..ell1 {
            for j in 0..ell1 {
                if i == j {
                    continue;
                }
                let mut eij = vec![Int::zero(); ell1];
                eij[i] = Int::one();
                eij[j] = -Int::one();
                if lat.contains(&eij) {
                    return Ok(false);
                }
            }
        }
        for exceptional in exceptional_lattices() {
            if exceptional.ambient_rank() == ell1
                && lat.equal_up_to_coordinate_permutation(&exceptional)
            {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Smooth: neither nodal nor cuspidal.
    pub fn is_smooth(&self) -> Result<bool> {
        Ok(!self.is_nodal()? && !self.is_cuspidal()?)
    }
}

/// The linear map `(Z^{ell+1})* -> N_tau` induced by a structure, held as
/// one rational ambient representative per simplex coordinate. Each
/// representative is the unique solution orthogonal to the annihilator of
/// the face's difference lattice.
#[derive(Clone, Debug)]
pub struct PiStar {
    ambient: usize,
    cols: Vec<Vec<Rat>>,
}

impl PiStar {
    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn len(&self) -> usize {
        self.cols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cols.is_empty()
    }

    pub fn col(&self, i: usize) -> &[Rat] {
        &self.cols[i]
    }

    /// Primitive integer vector along `pi*(e_i*)`; orientation preserved.
    pub fn direction(&self, i: usize) -> Vec<Int> {
        clear_denominators(&self.cols[i])
    }

    /// Evaluate `pi*(e_i*)` on a vector of the face's difference lattice.
    pub fn eval(&self, i: usize, x: &[Int]) -> Int {
        let v = rdot(&self.cols[i], &rat_vec(x));
        debug_assert!(v.is_integer(), "pi* takes integer values on the difference lattice");
        v.to_integer()
    }
}

/// Compute `pi*`: for each simplex coordinate, the functional whose value
/// on `u - w` is `pi(u)_i - pi(w)_i`.
pub fn pi_star(pi: &CayleyStructure) -> PiStar {
    let face = pi.face();
    let ambient = face.config().ambient_rank();
    let pts = face.points();
    let base = &pts[0];
    let diffs: Vec<Vec<Int>> = pts[1..].iter().map(|p| vsub(p, base)).collect();
    let values = pi.values();
    let cols = (0..values.cols())
        .map(|i| {
            if diffs.is_empty() {
                return vec![Rat::zero(); ambient];
            }
            let deltas: Vec<Rat> = (1..values.rows())
                .map(|r| Rat::from_integer(&values[(r, i)] - &values[(0, i)]))
                .collect();
            // minimum-norm solution: w = D^T (D D^T)^{-1} delta restricted
            // to the row space, via the normal equations on a row basis
            let lat = span_of_differences(&pts);
            let basis = lat.basis_rows();
            // express delta on the basis through the original differences
            let m = IntMatrix::from_rows(diffs.clone(), ambient);
            let (h, u) = m.hermite_normal_form();
            let mut basis_delta = Vec::new();
            let mut basis_rows = Vec::new();
            for bi in 0..h.rows() {
                if crate::matrix::is_zero_vec(h.row(bi)) {
                    continue;
                }
                basis_rows.push(h.row_vec(bi));
                let mut d = Rat::zero();
                for k in 0..diffs.len() {
                    d += Rat::from_integer(u[(bi, k)].clone()) * &deltas[k];
                }
                basis_delta.push(d);
            }
            debug_assert_eq!(basis_rows.len(), basis.len());
            let k = basis_rows.len();
            if k == 0 {
                return vec![Rat::zero(); ambient];
            }
            let gram: Vec<Vec<Rat>> = (0..k)
                .map(|a| {
                    (0..k)
                        .map(|b| Rat::from_integer(vdot(&basis_rows[a], &basis_rows[b])))
                        .collect()
                })
                .collect();
            let y = solve_rational(&gram, &basis_delta).expect("Gram matrix invertible");
            (0..ambient)
                .map(|j| {
                    let mut s = Rat::zero();
                    for a in 0..k {
                        s += &y[a] * Rat::from_integer(basis_rows[a][j].clone());
                    }
                    s
                })
                .collect()
        })
        .collect();
    PiStar { ambient, cols }
}

/// All integer-valued, nonnegative, somewhere-zero, non-constant affine
/// functionals on the face with maximum at most `d`, as value vectors in
/// the face's point order.
fn affine_functionals(face: &Face, d: &Int) -> Vec<Vec<Int>> {
    let pts = face.points();
    let m = pts.len();
    let n = face.config().ambient_rank();
    // affine basis (greedy), then rational coordinates of the other points
    let homog: Vec<Vec<Rat>> = pts
        .iter()
        .map(|p| {
            let mut v = rat_vec(p);
            v.push(Rat::one());
            v
        })
        .collect();
    let mut basis_idx: Vec<usize> = Vec::new();
    let mut cur_rows: Vec<Vec<Int>> = Vec::new();
    for i in 0..m {
        let mut cand = cur_rows.clone();
        let mut row: Vec<Int> = pts[i].clone();
        row.push(Int::one());
        cand.push(row.clone());
        if crate::matrix::rank_of_rows(&cand, n + 1) > cur_rows.len() {
            cur_rows = cand;
            basis_idx.push(i);
        }
    }
    let k1 = basis_idx.len(); // affine dim + 1
    let coords: Vec<Option<Vec<Rat>>> = (0..m)
        .map(|i| {
            if basis_idx.contains(&i) {
                return None;
            }
            // solve sum_j lambda_j (b_j, 1) = (p_i, 1)
            let a: Vec<Vec<Rat>> = (0..=n)
                .map(|r| basis_idx.iter().map(|&b| homog[b][r].clone()).collect())
                .collect();
            let b: Vec<Rat> = (0..=n).map(|r| homog[i][r].clone()).collect();
            Some(solve_rational(&a, &b).expect("basis spans the face"))
        })
        .collect();
    let dmax = d.to_string().parse::<i64>().unwrap_or(i64::MAX);
    let mut out: Vec<Vec<Int>> = Vec::new();
    let mut assignment = vec![0i64; k1];
    'outer: loop {
        // extend the assignment on the affine basis to all points
        let mut vals = vec![Int::zero(); m];
        let mut ok = true;
        for (j, &b) in basis_idx.iter().enumerate() {
            vals[b] = int(assignment[j]);
        }
        for i in 0..m {
            let Some(lams) = &coords[i] else { continue };
            let mut v = Rat::zero();
            for (j, lam) in lams.iter().enumerate() {
                v += lam * Rat::from_integer(int(assignment[j]));
            }
            if !v.is_integer() {
                ok = false;
                break;
            }
            let vi = v.to_integer();
            if vi.is_negative() || &vi > d {
                ok = false;
                break;
            }
            vals[i] = vi;
        }
        if ok {
            let minv = vals.iter().min().unwrap();
            let nonconstant = vals.iter().any(|v| v != &vals[0]);
            if minv.is_zero() && nonconstant {
                out.push(vals);
            }
        }
        // next assignment
        let mut pos = 0;
        loop {
            if pos == k1 {
                break 'outer;
            }
            assignment[pos] += 1;
            if assignment[pos] <= dmax {
                break;
            }
            assignment[pos] = 0;
            pos += 1;
        }
    }
    out.sort_by(|a, b| b.cmp(a));
    out.dedup();
    out
}

/// Enumerate every Cayley structure of degree `d` on the face, one
/// canonical representative per equivalence class.
///
/// A structure is a multiset of coordinate functionals summing to the
/// constant function `d`; enumerating multisets of the finite functional
/// pool directly produces basepoint-free concise structures and one
/// representative per class.
pub fn enumerate_cayley_structures(face: &Face, d: &Int) -> Vec<CayleyStructure> {
    enumerate_cayley_structures_bounded(face, d, usize::MAX)
}

/// Enumeration restricted to length at most `max_length`; the unbounded
/// search is the special case with the trivial bound.
pub fn enumerate_cayley_structures_bounded(
    face: &Face,
    d: &Int,
    max_length: usize,
) -> Vec<CayleyStructure> {
    assert!(d.is_positive(), "degree must be at least one");
    let pool = affine_functionals(face, d);
    let m = face.len();
    let target: Vec<Int> = vec![d.clone(); m];
    let max_cols = max_length.saturating_add(1);
    let mut out = Vec::new();
    let mut chosen: Vec<usize> = Vec::new();
    fn rec(
        pool: &[Vec<Int>],
        face: &Face,
        target: &mut Vec<Int>,
        start: usize,
        chosen: &mut Vec<usize>,
        max_cols: usize,
        out: &mut Vec<CayleyStructure>,
    ) {
        if target.iter().all(|t| t.is_zero()) {
            if chosen.len() >= 2 {
                let cols: Vec<&Vec<Int>> = chosen.iter().map(|&i| &pool[i]).collect();
                let rows: Vec<Vec<Int>> = (0..face.len())
                    .map(|r| cols.iter().map(|c| c[r].clone()).collect())
                    .collect();
                let values = IntMatrix::from_rows(rows, cols.len());
                out.push(
                    CayleyStructure::new(face.clone(), values)
                        .expect("multisets of pool functionals are Cayley structures"),
                );
            }
            return;
        }
        if chosen.len() == max_cols {
            return;
        }
        for idx in start..pool.len() {
            let g = &pool[idx];
            if (0..g.len()).all(|r| g[r] <= target[r]) {
                for r in 0..g.len() {
                    target[r] -= &g[r];
                }
                chosen.push(idx);
                rec(pool, face, target, idx, chosen, max_cols, out);
                chosen.pop();
                for r in 0..g.len() {
                    target[r] += &g[r];
                }
            }
        }
    }
    let mut target = target;
    rec(&pool, face, &mut target, 0, &mut chosen, max_cols, &mut out);
    out.sort_by(|a, b| {
        (a.length(), a.canonical_values().row_list())
            .cmp(&(b.length(), b.canonical_values().row_list()))
    });
    out
}

/// Non-identity permutations of the simplex coordinates fixing the
/// structure, with cycle type `(1, 1, k, ..., k)`: exactly the candidates
/// realizable as stabilizers of a member curve.
pub fn stabilizer_candidates(pi: &CayleyStructure) -> Result<Vec<Vec<usize>>> {
    if pi.length() <= 1 {
        return Err(Error::LengthOne);
    }
    let v = pi.values();
    let ncols = v.cols();
    let cols: Vec<Vec<Int>> = (0..ncols).map(|j| v.col_vec(j)).collect();
    // classes of equal columns
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for j in 0..ncols {
        match classes.iter_mut().find(|c| cols[c[0]] == cols[j]) {
            Some(c) => c.push(j),
            None => classes.push(vec![j]),
        }
    }
    // all ways to arrange a class into fixed points and k-cycles
    fn arrangements(elems: &[usize], k: usize) -> Vec<(Vec<(usize, usize)>, usize)> {
        if elems.is_empty() {
            return vec![(Vec::new(), 0)];
        }
        let e = elems[0];
        let rest: Vec<usize> = elems[1..].to_vec();
        let mut out = Vec::new();
        // e fixed
        for (map, fixed) in arrangements(&rest, k) {
            let mut m = map;
            m.push((e, e));
            out.push((m, fixed + 1));
        }
        // e in a k-cycle with an ordered choice of k-1 others
        if rest.len() >= k - 1 {
            let mut picks: Vec<Vec<usize>> = Vec::new();
            fn ordered(rest: &[usize], k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
                if cur.len() == k {
                    out.push(cur.clone());
                    return;
                }
                for (i, &x) in rest.iter().enumerate() {
                    if cur.contains(&x) {
                        continue;
                    }
                    // avoid relabeled cycles: track by set membership is
                    // handled by cur.contains above; all orders are distinct
                    let _ = i;
                    cur.push(x);
                    ordered(rest, k, cur, out);
                    cur.pop();
                }
            }
            ordered(&rest, k - 1, &mut Vec::new(), &mut picks);
            for pick in picks {
                let mut cycle = vec![e];
                cycle.extend(pick.iter().cloned());
                let remaining: Vec<usize> =
                    rest.iter().filter(|x| !pick.contains(x)).cloned().collect();
                for (map, fixed) in arrangements(&remaining, k) {
                    let mut m = map;
                    for w in 0..k {
                        m.push((cycle[w], cycle[(w + 1) % k]));
                    }
                    out.push((m, fixed));
                }
            }
        }
        out
    }
    let mut result: Vec<Vec<usize>> = Vec::new();
    for k in 2..=ncols {
        if (ncols - 2) % k != 0 {
            continue;
        }
        // combine per-class arrangements, requiring exactly two fixed points
        let per_class: Vec<Vec<(Vec<(usize, usize)>, usize)>> =
            classes.iter().map(|c| arrangements(c, k)).collect();
        fn combine(
            per_class: &[Vec<(Vec<(usize, usize)>, usize)>],
            idx: usize,
            fixed: usize,
            acc: &mut Vec<(usize, usize)>,
            ncols: usize,
            out: &mut Vec<Vec<usize>>,
        ) {
            if fixed > 2 {
                return;
            }
            if idx == per_class.len() {
                if fixed == 2 && acc.len() == ncols {
                    let mut perm = vec![0usize; ncols];
                    for &(a, b) in acc.iter() {
                        perm[a] = b;
                    }
                    if perm.iter().enumerate().any(|(i, &p)| i != p) {
                        out.push(perm);
                    }
                }
                return;
            }
            for (map, f) in &per_class[idx] {
                let before = acc.len();
                acc.extend(map.iter().cloned());
                combine(per_class, idx + 1, fixed + f, acc, ncols, out);
                acc.truncate(before);
            }
        }
        combine(&per_class, 0, 0, &mut Vec::new(), ncols, &mut result);
    }
    result.sort();
    result.dedup();
    Ok(result)
}

fn is_identity(perm: &[usize]) -> bool {
    perm.iter().enumerate().all(|(i, &p)| i == p)
}

fn cycle_data(perm: &[usize]) -> (Vec<usize>, Option<usize>) {
    let n = perm.len();
    let mut seen = vec![false; n];
    let mut fixed = Vec::new();
    let mut k: Option<usize> = None;
    let mut uniform = true;
    for i in 0..n {
        if seen[i] {
            continue;
        }
        let mut len = 0;
        let mut j = i;
        while !seen[j] {
            seen[j] = true;
            j = perm[j];
            len += 1;
        }
        if len == 1 {
            fixed.push(i);
        } else {
            match k {
                None => k = Some(len),
                Some(existing) if existing == len => {}
                Some(_) => uniform = false,
            }
        }
    }
    if !uniform {
        (fixed, None)
    } else {
        (fixed, k)
    }
}

/// Kernel of the joint map `M_tau -> prod Z/k_i` attached to stabilizer
/// permutations; a single cyclic stabilizer of order k gives an index-k
/// sublattice of the difference lattice.
pub fn stabilizer_sublattice_joint(
    pi: &CayleyStructure,
    perms: &[Vec<usize>],
) -> Result<Sublattice> {
    if pi.length() <= 1 {
        return Err(Error::LengthOne);
    }
    let face = pi.face();
    let ambient = face.config().ambient_rank();
    let m_tau = face.difference_lattice();
    let mut maps: Vec<(usize, Int)> = Vec::new(); // (fixed coordinate, modulus)
    for perm in perms {
        if is_identity(perm) {
            continue;
        }
        let candidates = stabilizer_candidates(pi)?;
        if !candidates.contains(perm) {
            return Err(Error::NotAStabilizer);
        }
        let (fixed, k) = cycle_data(perm);
        let (Some(k), [_, c1]) = (k, fixed.as_slice()) else {
            return Err(Error::NotAStabilizer);
        };
        maps.push((*c1, int(k as i64)));
    }
    if maps.is_empty() {
        return Ok(m_tau);
    }
    // evaluate each map on a basis of M_tau
    let pts = face.points();
    let diffs: Vec<Vec<Int>> = pts[1..].iter().map(|p| vsub(p, &pts[0])).collect();
    let dif = IntMatrix::from_rows(diffs.clone(), ambient);
    let (h, u) = dif.hermite_normal_form();
    let mut basis_rows: Vec<Vec<Int>> = Vec::new();
    let mut basis_vals: Vec<Vec<Int>> = Vec::new(); // per map
    for bi in 0..h.rows() {
        if crate::matrix::is_zero_vec(h.row(bi)) {
            continue;
        }
        basis_rows.push(h.row_vec(bi));
        let vals: Vec<Int> = maps
            .iter()
            .map(|(c, _)| {
                let mut acc = Int::zero();
                for kdx in 0..diffs.len() {
                    let delta = &pi.values()[(kdx + 1, *c)] - &pi.values()[(0, *c)];
                    acc += &u[(bi, kdx)] * delta;
                }
                acc
            })
            .collect();
        basis_vals.push(vals);
    }
    let r = basis_rows.len();
    let nm = maps.len();
    // kernel of Z^r -> prod Z/k_i: solutions (y, t) of sum y_j w_j + k t = 0
    let mut rows: Vec<Vec<Int>> = Vec::new();
    for mi in 0..nm {
        let mut row: Vec<Int> = (0..r).map(|j| basis_vals[j][mi].clone()).collect();
        for mj in 0..nm {
            row.push(if mi == mj { maps[mi].1.clone() } else { Int::zero() });
        }
        rows.push(row);
    }
    let kernel = IntMatrix::from_rows(rows, r + nm).right_kernel();
    let gens: Vec<Vec<Int>> = (0..kernel.rows())
        .map(|i| {
            let mut acc = vec![Int::zero(); ambient];
            for j in 0..r {
                for c in 0..ambient {
                    let t = &kernel[(i, j)] * &basis_rows[j][c];
                    acc[c] += t;
                }
            }
            acc
        })
        .collect();
    let sub = Sublattice::from_generators(ambient, &gens);
    debug_assert_eq!(sub.rank(), m_tau.rank());
    Ok(sub)
}

/// Kernel lattice for a single stabilizer permutation. The identity gives
/// back the whole difference lattice.
pub fn stabilizer_sublattice(pi: &CayleyStructure, perm: &[usize]) -> Result<Sublattice> {
    if is_identity(perm) {
        if pi.length() <= 1 {
            return Err(Error::LengthOne);
        }
        return Ok(pi.face().difference_lattice());
    }
    stabilizer_sublattice_joint(pi, &[perm.to_vec()])
}

/// Index of a finite-index sublattice inside a larger one of equal rank.
pub fn sublattice_index(sub: &Sublattice, ambient_lat: &Sublattice) -> Int {
    assert_eq!(sub.rank(), ambient_lat.rank(), "index of infinite covolume");
    let coords: Vec<Vec<Int>> = sub
        .basis_rows()
        .iter()
        .map(|row| ambient_lat.coordinates(row).expect("sublattice containment"))
        .collect();
    IntMatrix::from_rows(coords, ambient_lat.rank()).det().abs()
}
