//! Sublattices of `Z^n` in canonical (row Hermite) form.

use crate::matrix::{int, is_zero_vec, vsub, Int, IntMatrix};
use num::{Integer, One, Signed, Zero};

/// A sublattice of `Z^ambient_rank`, stored as a canonical basis.
///
/// The basis rows are linearly independent and in row Hermite normal form,
/// so two sublattices are equal iff their stored bases are equal.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Sublattice {
    ambient_rank: usize,
    basis: IntMatrix,
}

impl Sublattice {
    /// Lattice generated by the given vectors.
    pub fn from_generators(ambient_rank: usize, gens: &[Vec<Int>]) -> Self {
        for g in gens {
            assert_eq!(g.len(), ambient_rank, "generator has wrong length");
        }
        if gens.is_empty() {
            return Sublattice { ambient_rank, basis: IntMatrix::zeros(0, ambient_rank) };
        }
        let m = IntMatrix::from_rows(gens.to_vec(), ambient_rank);
        let (h, _) = m.hermite_normal_form();
        let rows: Vec<Vec<Int>> =
            (0..h.rows()).map(|i| h.row_vec(i)).filter(|r| !is_zero_vec(r)).collect();
        Sublattice { ambient_rank, basis: IntMatrix::from_rows(rows, ambient_rank) }
    }

    pub fn zero(ambient_rank: usize) -> Self {
        Self::from_generators(ambient_rank, &[])
    }

    pub fn full(ambient_rank: usize) -> Self {
        Sublattice { ambient_rank, basis: IntMatrix::identity(ambient_rank) }
    }

    pub fn ambient_rank(&self) -> usize {
        self.ambient_rank
    }

    pub fn rank(&self) -> usize {
        self.basis.rows()
    }

    pub fn basis(&self) -> &IntMatrix {
        &self.basis
    }

    pub fn basis_rows(&self) -> Vec<Vec<Int>> {
        self.basis.row_list()
    }

    /// Membership test: is `v` an integer combination of the basis rows?
    ///
    /// The HNF shape makes this a single forward sweep over the pivots.
    pub fn contains(&self, v: &[Int]) -> bool {
        self.coordinates(v).is_some()
    }

    /// Express `v` in the basis, if possible.
    pub fn coordinates(&self, v: &[Int]) -> Option<Vec<Int>> {
        assert_eq!(v.len(), self.ambient_rank, "ambient rank mismatch");
        let mut rem = v.to_vec();
        let mut coeffs = Vec::with_capacity(self.rank());
        for i in 0..self.basis.rows() {
            let row = self.basis.row(i);
            let pivot_col = (0..self.ambient_rank).find(|&j| !row[j].is_zero()).unwrap();
            let (q, r) = rem[pivot_col].div_rem(&row[pivot_col]);
            if !r.is_zero() {
                return None;
            }
            if !q.is_zero() {
                for j in 0..self.ambient_rank {
                    let t = &q * &row[j];
                    rem[j] -= t;
                }
            }
            coeffs.push(q);
        }
        if is_zero_vec(&rem) {
            Some(coeffs)
        } else {
            None
        }
    }

    /// The saturation `L_Q ∩ Z^n`.
    pub fn saturation(&self) -> Sublattice {
        if self.rank() == 0 {
            return self.clone();
        }
        // L_Q is cut out by the integer kernel of the basis, and the
        // saturation is in turn the kernel of that kernel.
        let k = self.basis.right_kernel();
        if k.rows() == 0 {
            return Sublattice::full(self.ambient_rank);
        }
        let sat = k.right_kernel();
        Sublattice::from_generators(self.ambient_rank, &sat.row_list())
    }

    /// Index of this lattice inside its saturation: the product of the
    /// nonzero Smith diagonal entries of the basis.
    pub fn index_in_saturation(&self) -> Int {
        let (s, _, _) = self.basis.smith_normal_form();
        let mut idx = Int::one();
        for d in s.diagonal() {
            if !d.is_zero() {
                idx *= d.abs();
            }
        }
        idx
    }

    /// Per-coordinate invariant used to prune permutation search: gcd of
    /// the j-th coordinates of all lattice members.
    fn column_gcds(&self) -> Vec<Int> {
        (0..self.ambient_rank)
            .map(|j| {
                let mut g = Int::zero();
                for i in 0..self.basis.rows() {
                    g = g.gcd(&self.basis[(i, j)]);
                }
                g
            })
            .collect()
    }

    fn permute_columns(&self, perm: &[usize]) -> Sublattice {
        let rows: Vec<Vec<Int>> = (0..self.basis.rows())
            .map(|i| {
                let row = self.basis.row(i);
                (0..self.ambient_rank).map(|j| row[perm[j]].clone()).collect()
            })
            .collect();
        Sublattice::from_generators(self.ambient_rank, &rows)
    }

    /// Does some permutation of the coordinates map `self` onto `other`?
    ///
    /// The search is pruned by Smith invariants and by the multiset of
    /// per-coordinate gcds before any permutations are tried; ambient rank
    /// stays small (≤ 8) for every lattice this is used on.
    pub fn equal_up_to_coordinate_permutation(&self, other: &Sublattice) -> bool {
        if self.ambient_rank != other.ambient_rank || self.rank() != other.rank() {
            return false;
        }
        if self == other {
            return true;
        }
        let (s1, _, _) = self.basis.smith_normal_form();
        let (s2, _, _) = other.basis.smith_normal_form();
        if s1.diagonal() != s2.diagonal() {
            return false;
        }
        let g1 = self.column_gcds();
        let g2 = other.column_gcds();
        let mut m1 = g1.clone();
        let mut m2 = g2.clone();
        m1.sort();
        m2.sort();
        if m1 != m2 {
            return false;
        }
        // perm[j] = source column placed at position j; only columns with
        // matching gcd class are eligible.
        let n = self.ambient_rank;
        let mut perm = vec![usize::MAX; n];
        let mut used = vec![false; n];
        fn rec(
            this: &Sublattice,
            other: &Sublattice,
            g1: &[Int],
            g2: &[Int],
            perm: &mut Vec<usize>,
            used: &mut Vec<bool>,
            pos: usize,
        ) -> bool {
            let n = this.ambient_rank;
            if pos == n {
                return &this.permute_columns(perm) == other;
            }
            for src in 0..n {
                if used[src] || g1[src] != g2[pos] {
                    continue;
                }
                used[src] = true;
                perm[pos] = src;
                if rec(this, other, g1, g2, perm, used, pos + 1) {
                    return true;
                }
                used[src] = false;
            }
            false
        }
        rec(self, other, &g1, &g2, &mut perm, &mut used, 0)
    }
}

/// The lattice of all differences of the given points.
pub fn span_of_differences(points: &[Vec<Int>]) -> Sublattice {
    assert!(!points.is_empty(), "span_of_differences of empty set");
    let ambient = points[0].len();
    let diffs: Vec<Vec<Int>> = points[1..].iter().map(|p| vsub(p, &points[0])).collect();
    Sublattice::from_generators(ambient, &diffs)
}

/// The five exceptional difference lattices of non-nodal planar image sets,
/// at their native ambient ranks.
pub fn exceptional_lattices() -> Vec<Sublattice> {
    let raw: Vec<Vec<Vec<i64>>> = vec![
        vec![vec![1, 1, -1, -1, 0, 0], vec![1, 1, 0, 0, -1, -1]],
        vec![vec![2, -1, -1, 0, 0], vec![2, 0, 0, -1, -1]],
        vec![vec![2, -2, 0, 0], vec![2, 0, -1, -1]],
        vec![vec![2, -2, 0], vec![2, 0, -2]],
        vec![vec![2, -2, 0], vec![2, -1, -1]],
    ];
    raw.into_iter()
        .map(|gens| {
            let ambient = gens[0].len();
            let gens: Vec<Vec<Int>> =
                gens.iter().map(|g| g.iter().map(|&x| int(x)).collect()).collect();
            Sublattice::from_generators(ambient, &gens)
        })
        .collect()
}
