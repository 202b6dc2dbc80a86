//! The partial order on Cayley structures and the census of
//! Hilbert-scheme components whose general member is a smooth rational
//! curve: one component per maximal smooth primitive class, of dimension
//! `length - 2 + dim(face)`.

use crate::cayley::{enumerate_cayley_structures, CayleyStructure};
use crate::matrix::{Int, IntMatrix};
use crate::polytope::{enumerate_faces, PointConfiguration};
use num::Zero;
use std::sync::Arc;

/// Which structures participate in the maximality computation.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum StructureFilter {
    All,
    SmoothPrimitive,
}

/// One Hilbert-scheme component: a maximal smooth primitive class.
#[derive(Clone, Debug)]
pub struct CensusEntry {
    pub structure: CayleyStructure,
    pub face_dim: usize,
    pub component_dim: usize,
}

/// Is `sub <= sup` in the partial order: the domain of `sub` is a face of
/// the domain of `sup`, and some merge of simplex coordinates carries the
/// restriction of `sup` onto `sub`.
pub fn is_leq(sub: &CayleyStructure, sup: &CayleyStructure) -> bool {
    if !Arc::ptr_eq(sub.face().config(), sup.face().config())
        && sub.face().config() != sup.face().config()
    {
        return false;
    }
    if !sup.face().contains_face(sub.face()) {
        return false;
    }
    let target = sub.values().clone();
    let source = sup.weak().restricted_values(sub.face());
    merge_exists(&source, &target)
}

/// Backtracking search for a map of coordinate indices with
/// `target_j = sum over the preimage of j of source columns`.
///
/// Source columns are assigned in decreasing weight order; a column only
/// goes to a target whose remaining budget dominates it componentwise.
/// Totals match row by row, so exhausting the sources forces equality.
fn merge_exists(source: &IntMatrix, target: &IntMatrix) -> bool {
    let rows = source.rows();
    debug_assert_eq!(rows, target.rows());
    let mut src_cols: Vec<Vec<Int>> = (0..source.cols()).map(|j| source.col_vec(j)).collect();
    src_cols.sort_by(|a, b| {
        let wa: Int = a.iter().sum();
        let wb: Int = b.iter().sum();
        (wb, b).cmp(&(wa, a))
    });
    let mut remaining: Vec<Vec<Int>> = (0..target.cols()).map(|j| target.col_vec(j)).collect();
    fn assign(src_cols: &[Vec<Int>], k: usize, remaining: &mut Vec<Vec<Int>>) -> bool {
        if k == src_cols.len() {
            return remaining.iter().all(|c| c.iter().all(|x| x.is_zero()));
        }
        let col = src_cols[k].clone();
        let mut tried: Vec<Vec<Int>> = Vec::new();
        for j in 0..remaining.len() {
            if (0..col.len()).all(|r| col[r] <= remaining[j][r]) {
                // identical remaining budgets are interchangeable
                if tried.contains(&remaining[j]) {
                    continue;
                }
                tried.push(remaining[j].clone());
                for r in 0..col.len() {
                    remaining[j][r] -= &col[r];
                }
                if assign(src_cols, k + 1, remaining) {
                    return true;
                }
                for r in 0..col.len() {
                    remaining[j][r] += &col[r];
                }
            }
        }
        false
    }
    assign(&src_cols, 0, &mut remaining)
}

/// Every Cayley structure of the given degree on every face, as canonical
/// class representatives.
pub fn enumerate_all_faces(cfg: &Arc<PointConfiguration>, d: &Int) -> Vec<CayleyStructure> {
    let mut out = Vec::new();
    for face in enumerate_faces(cfg) {
        out.extend(enumerate_cayley_structures(&face, d));
    }
    out
}

/// Per-class maxima of the partial order, restricted to the filtered set.
pub fn maximal_structures(
    cfg: &Arc<PointConfiguration>,
    d: &Int,
    filter: StructureFilter,
) -> Vec<CayleyStructure> {
    let all = enumerate_all_faces(cfg, d);
    let kept: Vec<CayleyStructure> = match filter {
        StructureFilter::All => all,
        StructureFilter::SmoothPrimitive => all
            .into_iter()
            .filter(|s| s.is_primitive() && s.is_smooth().expect("primitive"))
            .collect(),
    };
    // enumeration emits one representative per class, so s <= t together
    // with t <= s can only happen at i == j
    let mut maximal = Vec::new();
    'outer: for (i, s) in kept.iter().enumerate() {
        for (j, t) in kept.iter().enumerate() {
            if i != j && is_leq(s, t) && !is_leq(t, s) {
                continue 'outer;
            }
        }
        maximal.push(s.clone());
    }
    maximal
}

/// The component census: one entry per maximal smooth primitive class.
pub fn hilbert_census(cfg: &Arc<PointConfiguration>, d: &Int) -> Vec<CensusEntry> {
    maximal_structures(cfg, d, StructureFilter::SmoothPrimitive)
        .into_iter()
        .map(|structure| {
            let face_dim = structure.face().dim();
            let component_dim = structure.length() + face_dim - 2;
            CensusEntry { structure, face_dim, component_dim }
        })
        .collect()
}
