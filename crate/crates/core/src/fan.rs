//! Polyhedral fans: inner normal fans, validity and completeness checks,
//! common refinements, and projections along the lineality.

use crate::cone::Cone;
use crate::matrix::{rank_of_rows, vdot, vsub, Int, IntMatrix};
use crate::polytope::{Face, LatticePolytope, PointConfiguration};
use crate::{Error, Result};
use num::Zero;
use std::collections::BTreeSet;

/// A fan given by its maximal cones; all cones share one lineality space.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Fan {
    ambient: usize,
    maximal: Vec<Cone>,
    lineality: Vec<Vec<Int>>,
}

impl Fan {
    pub fn from_maximal_cones(ambient: usize, mut maximal: Vec<Cone>) -> Result<Fan> {
        if maximal.is_empty() {
            return Err(Error::EmptyInput("fan"));
        }
        maximal.sort();
        maximal.dedup();
        let lineality = maximal[0].lineality().to_vec();
        for c in &maximal {
            if c.ambient() != ambient {
                return Err(Error::AmbientMismatch(ambient, c.ambient()));
            }
            if c.lineality() != lineality {
                return Err(Error::Internal(
                    "fan cones do not share a common lineality space".into(),
                ));
            }
        }
        Ok(Fan { ambient, maximal, lineality })
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn maximal_cones(&self) -> &[Cone] {
        &self.maximal
    }

    pub fn lineality(&self) -> &[Vec<Int>] {
        &self.lineality
    }

    pub fn lineality_dim(&self) -> usize {
        self.lineality.len()
    }

    /// All cones of the fan: faces of the maximal cones, deduplicated.
    pub fn all_cones(&self) -> Vec<Cone> {
        let mut seen: BTreeSet<Cone> = BTreeSet::new();
        for c in &self.maximal {
            for f in c.faces() {
                seen.insert(f);
            }
        }
        seen.into_iter().collect()
    }

    /// Exact fan validity: every pairwise intersection of maximal cones is
    /// a face of both.
    pub fn is_valid(&self) -> bool {
        for i in 0..self.maximal.len() {
            for j in i + 1..self.maximal.len() {
                let inter = self.maximal[i].intersect(&self.maximal[j]);
                if inter.lineality() != self.lineality.as_slice() {
                    return false;
                }
                if !inter.is_face_of(&self.maximal[i]) || !inter.is_face_of(&self.maximal[j]) {
                    return false;
                }
            }
        }
        true
    }

    /// Completeness: all maximal cones are full-dimensional and every
    /// ridge (facet of a maximal cone) is shared by exactly two of them.
    pub fn is_complete(&self) -> bool {
        if self.maximal.iter().any(|c| c.dim() != self.ambient) {
            return false;
        }
        if self.maximal.len() == 1 {
            // single full-dimensional cone: complete iff it is everything
            return self.maximal[0].facets().is_empty();
        }
        for c in &self.maximal {
            for f in c.facets() {
                let ridge_rays: Vec<Vec<Int>> = c
                    .rays()
                    .iter()
                    .filter(|r| vdot(f, r).is_zero())
                    .cloned()
                    .collect();
                let ridge = Cone::from_v(self.ambient, &ridge_rays, &self.lineality);
                let count = self
                    .maximal
                    .iter()
                    .filter(|m| {
                        ridge.rays().iter().all(|r| m.contains(r))
                            && ridge.lineality().iter().all(|l| m.contains(l))
                    })
                    .count();
                if count != 2 {
                    return false;
                }
            }
        }
        true
    }

    /// Project the fan along directions inside its lineality space.
    ///
    /// `proj` is a `k x ambient` integer matrix whose kernel must lie in
    /// the lineality span.
    pub fn project(&self, proj: &IntMatrix) -> Result<Fan> {
        if proj.cols() != self.ambient {
            return Err(Error::AmbientMismatch(self.ambient, proj.cols()));
        }
        let kernel = proj.right_kernel();
        let lin_rank = rank_of_rows(&self.lineality, self.ambient);
        let mut joint = self.lineality.clone();
        joint.extend(kernel.row_list());
        if rank_of_rows(&joint, self.ambient) != lin_rank {
            return Err(Error::BadProjection);
        }
        let mapped: Vec<Cone> = self
            .maximal
            .iter()
            .map(|c| {
                let gens: Vec<Vec<Int>> = c.rays().iter().map(|r| proj.mul_vec(r)).collect();
                let lin: Vec<Vec<Int>> =
                    c.lineality().iter().map(|l| proj.mul_vec(l)).collect();
                Cone::from_v(proj.rows(), &gens, &lin)
            })
            .collect();
        Fan::from_maximal_cones(proj.rows(), mapped)
    }

    /// Rays of the fan (one-dimensional cones modulo lineality), canonical.
    pub fn rays(&self) -> Vec<Vec<Int>> {
        let mut out: BTreeSet<Vec<Int>> = BTreeSet::new();
        for c in &self.maximal {
            for r in c.rays() {
                out.insert(r.clone());
            }
        }
        out.into_iter().collect()
    }
}

/// Inner normal cone of the subface `sub` inside the face `tau`: the
/// functionals minimized over `tau` exactly on `sub` (as a closed cone,
/// minimized at least on `sub`).
pub fn normal_cone_in_face(tau: &Face, sub: &Face) -> Cone {
    let cfg = tau.config();
    let base = sub.point(0);
    let eqs: Vec<Vec<Int>> =
        sub.points().iter().skip(1).map(|p| vsub(p, base)).collect();
    let ineqs: Vec<Vec<Int>> = tau.points().iter().map(|p| vsub(p, base)).collect();
    Cone::from_h(cfg.ambient_rank(), &ineqs, &eqs)
}

/// Inner normal fan of a point configuration, complete in the dual of the
/// ambient lattice with lineality the annihilator of the difference span.
pub fn normal_fan(cfg: &PointConfiguration) -> Result<Fan> {
    let hull = crate::polytope::convex_hull(cfg.points())?;
    normal_fan_of_vertices(cfg.ambient_rank(), hull.vertices(), cfg.points())
}

/// Inner normal fan of a lattice polytope; maximal cones correspond to
/// vertices.
pub fn normal_fan_of_polytope(p: &LatticePolytope) -> Result<Fan> {
    normal_fan_of_vertices(p.ambient_rank(), p.vertices(), p.vertices())
}

fn normal_fan_of_vertices(
    ambient: usize,
    vertices: &[Vec<Int>],
    all_points: &[Vec<Int>],
) -> Result<Fan> {
    let cones: Vec<Cone> = vertices
        .iter()
        .map(|v| {
            let ineqs: Vec<Vec<Int>> = all_points.iter().map(|p| vsub(p, v)).collect();
            Cone::from_h(ambient, &ineqs, &[])
        })
        .collect();
    Fan::from_maximal_cones(ambient, cones)
}

/// Coarsest common refinement: all pairwise intersections of maximal
/// cones, the full-dimensional ones being maximal.
pub fn common_refinement(f1: &Fan, f2: &Fan) -> Result<Fan> {
    if f1.ambient() != f2.ambient() {
        return Err(Error::AmbientMismatch(f1.ambient(), f2.ambient()));
    }
    let mut cells = Vec::new();
    let target_dim = f1.ambient();
    for a in f1.maximal_cones() {
        for b in f2.maximal_cones() {
            let c = a.intersect(b);
            if c.dim() == target_dim {
                cells.push(c);
            }
        }
    }
    Fan::from_maximal_cones(f1.ambient(), cells)
}
