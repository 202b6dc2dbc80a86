//! Point configurations, their face lattices, and exact convex hulls.

use crate::cone::Cone;
use crate::lattice::{span_of_differences, Sublattice};
use crate::matrix::{int, vdot, vsub, Int};
use crate::{Error, Result};
use num::{Integer, One, Signed, Zero};
use std::collections::BTreeSet;
use std::sync::Arc;

/// A finite ordered set of distinct lattice points.
///
/// Point order is fixed forever: indices are the stable identifiers every
/// downstream object (faces, Cayley structures, cycles) refers to.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PointConfiguration {
    ambient: usize,
    points: Vec<Vec<Int>>,
    labels: Vec<String>,
}

impl PointConfiguration {
    pub fn new(points: Vec<Vec<Int>>) -> Result<Self> {
        let labels = (0..points.len()).map(|i| format!("p{i}")).collect();
        Self::with_labels(points, labels)
    }

    pub fn with_labels(points: Vec<Vec<Int>>, labels: Vec<String>) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::EmptyInput("point configuration"));
        }
        let ambient = points[0].len();
        for p in &points {
            if p.len() != ambient {
                return Err(Error::DimensionMismatch { expected: ambient, got: p.len() });
            }
        }
        for i in 0..points.len() {
            for j in 0..i {
                if points[i] == points[j] {
                    return Err(Error::DuplicatePoint(i));
                }
            }
        }
        if labels.len() != points.len() {
            return Err(Error::DimensionMismatch { expected: points.len(), got: labels.len() });
        }
        Ok(PointConfiguration { ambient, points, labels })
    }

    pub fn from_i64(points: &[&[i64]]) -> Result<Self> {
        Self::new(points.iter().map(|p| p.iter().map(|&x| int(x)).collect()).collect())
    }

    pub fn ambient_rank(&self) -> usize {
        self.ambient
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn point(&self, i: usize) -> &Vec<Int> {
        &self.points[i]
    }

    pub fn points(&self) -> &[Vec<Int>] {
        &self.points
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Dimension of the affine span.
    pub fn affine_dim(&self) -> usize {
        span_of_differences(&self.points).rank()
    }

    pub fn index_of(&self, point: &[Int]) -> Option<usize> {
        self.points.iter().position(|p| p[..] == *point)
    }
}

/// A face of a configuration: the points lying on a face of the convex
/// hull, together with a supporting functional exhibiting it.
///
/// The witness is `(a, c)` with `a·p + c >= 0` on the whole configuration
/// and equality exactly on the face; the full face carries no witness.
#[derive(Clone, Debug)]
pub struct Face {
    cfg: Arc<PointConfiguration>,
    indices: Vec<usize>,
    dim: usize,
    witness: Option<(Vec<Int>, Int)>,
}

impl PartialEq for Face {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.cfg, &other.cfg) && self.indices == other.indices
            || self.cfg == other.cfg && self.indices == other.indices
    }
}
impl Eq for Face {}

impl Face {
    /// The configuration as a face of itself.
    pub fn full(cfg: &Arc<PointConfiguration>) -> Face {
        Face {
            cfg: cfg.clone(),
            indices: (0..cfg.len()).collect(),
            dim: cfg.affine_dim(),
            witness: None,
        }
    }

    pub fn config(&self) -> &Arc<PointConfiguration> {
        &self.cfg
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn witness(&self) -> Option<&(Vec<Int>, Int)> {
        self.witness.as_ref()
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn point(&self, k: usize) -> &Vec<Int> {
        self.cfg.point(self.indices[k])
    }

    pub fn points(&self) -> Vec<Vec<Int>> {
        self.indices.iter().map(|&i| self.cfg.point(i).clone()).collect()
    }

    pub fn is_full(&self) -> bool {
        self.indices.len() == self.cfg.len()
    }

    pub fn contains_face(&self, other: &Face) -> bool {
        other.indices.iter().all(|i| self.indices.binary_search(i).is_ok())
    }

    /// Lattice of differences of the face's points.
    pub fn difference_lattice(&self) -> Sublattice {
        span_of_differences(&self.points())
    }
}

/// Facets of the convex hull, as pairs `(normal, offset)` with
/// `normal·p + offset >= 0` on the configuration and `= 0` on the facet.
fn hull_facets(points: &[Vec<Int>]) -> Vec<(Vec<Int>, Int)> {
    let ambient = points[0].len();
    let homog: Vec<Vec<Int>> = points
        .iter()
        .map(|p| {
            let mut v = p.clone();
            v.push(Int::one());
            v
        })
        .collect();
    let cone = Cone::from_v(ambient + 1, &homog, &[]);
    // A genuine facet is incident to at least one point; the leftover
    // "height" ray of low-dimensional hulls is incident to none.
    cone.facets()
        .iter()
        .map(|f| (f[..ambient].to_vec(), f[ambient].clone()))
        .filter(|(a, c)| points.iter().any(|p| (vdot(a, p) + c).is_zero()))
        .collect()
}

/// All faces of every dimension, vertices through the full configuration,
/// each with a supporting witness. Sorted by dimension, then indices.
pub fn enumerate_faces(cfg: &Arc<PointConfiguration>) -> Vec<Face> {
    let facets = hull_facets(cfg.points());
    let facet_sets: Vec<BTreeSet<usize>> = facets
        .iter()
        .map(|(a, c)| {
            (0..cfg.len()).filter(|&i| (vdot(a, cfg.point(i)) + c).is_zero()).collect()
        })
        .collect();
    let mut sets: BTreeSet<BTreeSet<usize>> = facet_sets.iter().cloned().collect();
    loop {
        let snapshot: Vec<BTreeSet<usize>> = sets.iter().cloned().collect();
        let before = sets.len();
        for i in 0..snapshot.len() {
            for j in i + 1..snapshot.len() {
                let inter: BTreeSet<usize> =
                    snapshot[i].intersection(&snapshot[j]).cloned().collect();
                if !inter.is_empty() {
                    sets.insert(inter);
                }
            }
        }
        if sets.len() == before {
            break;
        }
    }
    let mut faces: Vec<Face> = Vec::new();
    for set in &sets {
        let indices: Vec<usize> = set.iter().cloned().collect();
        let pts: Vec<Vec<Int>> = indices.iter().map(|&i| cfg.point(i).clone()).collect();
        let dim = span_of_differences(&pts).rank();
        let mut wa = vec![Int::zero(); cfg.ambient_rank()];
        let mut wc = Int::zero();
        for (k, fs) in facet_sets.iter().enumerate() {
            if set.is_subset(fs) {
                for j in 0..wa.len() {
                    wa[j] += &facets[k].0[j];
                }
                wc += &facets[k].1;
            }
        }
        faces.push(Face { cfg: cfg.clone(), indices, dim, witness: Some((wa, wc)) });
    }
    faces.push(Face::full(cfg));
    faces.sort_by(|a, b| (a.dim, &a.indices).cmp(&(b.dim, &b.indices)));
    faces
}

/// The subface of `face` on which the functional `v` is minimal.
pub fn minimizing_face(face: &Face, v: &[Int]) -> Face {
    assert_eq!(v.len(), face.config().ambient_rank());
    let cfg = face.config().clone();
    let vals: Vec<Int> = face.indices().iter().map(|&i| vdot(v, cfg.point(i))).collect();
    let minv = vals.iter().min().expect("face is nonempty").clone();
    let indices: Vec<usize> = face
        .indices()
        .iter()
        .zip(&vals)
        .filter(|(_, val)| **val == minv)
        .map(|(&i, _)| i)
        .collect();
    let pts: Vec<Vec<Int>> = indices.iter().map(|&i| cfg.point(i).clone()).collect();
    let dim = span_of_differences(&pts).rank();
    // Witness against the whole configuration: scale the witness of the
    // ambient face until it dominates the spread of v outside it. Integer
    // slacks are >= 1, so the spread itself is a big enough multiplier.
    let (wa, wc) = match face.witness() {
        None => (vec![Int::zero(); cfg.ambient_rank()], Int::zero()),
        Some((a, c)) => (a.clone(), c.clone()),
    };
    let mut spread = Int::zero();
    for i in 0..cfg.len() {
        let d = &minv - vdot(v, cfg.point(i));
        if d > spread {
            spread = d;
        }
    }
    let m = spread + Int::one();
    let new_a: Vec<Int> = wa.iter().zip(v).map(|(w, x)| &m * w + x).collect();
    let new_c = &m * &wc - &minv;
    debug_assert!((0..cfg.len()).all(|i| !(vdot(&new_a, cfg.point(i)) + &new_c).is_negative()));
    Face { cfg, indices, dim, witness: Some((new_a, new_c)) }
}

/// Lattice length of an edge with respect to its own difference lattice:
/// the integer `t` with (endpoint difference) = `t` · (generator of the
/// edge's difference lattice).
pub fn edge_lattice_length(e: &Face) -> Result<Int> {
    if e.dim() != 1 {
        return Err(Error::NotAnEdge(e.dim()));
    }
    let pts = e.points();
    let lat = span_of_differences(&pts);
    let gen = lat.basis_rows().pop().expect("edge lattice has rank 1");
    // endpoints: extremes of the projection along the generator
    let vals: Vec<Int> = pts.iter().map(|p| vdot(&gen, p)).collect();
    let (mut lo, mut hi) = (0usize, 0usize);
    for i in 1..pts.len() {
        if vals[i] < vals[lo] {
            lo = i;
        }
        if vals[i] > vals[hi] {
            hi = i;
        }
    }
    let diff = vsub(&pts[hi], &pts[lo]);
    let j = (0..gen.len()).find(|&j| !gen[j].is_zero()).expect("nonzero generator");
    let (t, r) = diff[j].div_rem(&gen[j]);
    debug_assert!(r.is_zero());
    Ok(t.abs())
}

/// Lattice polytope with an irredundant vertex list and facet description.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LatticePolytope {
    ambient: usize,
    vertices: Vec<Vec<Int>>,
    facets: Vec<(Vec<Int>, Int)>,
}

impl LatticePolytope {
    pub fn ambient_rank(&self) -> usize {
        self.ambient
    }

    pub fn vertices(&self) -> &[Vec<Int>] {
        &self.vertices
    }

    pub fn facets(&self) -> &[(Vec<Int>, Int)] {
        &self.facets
    }

    pub fn dim(&self) -> usize {
        span_of_differences(&self.vertices).rank()
    }
}

/// Convex hull of a nonempty set of lattice points.
pub fn convex_hull(points: &[Vec<Int>]) -> Result<LatticePolytope> {
    if points.is_empty() {
        return Err(Error::EmptyInput("convex hull"));
    }
    let ambient = points[0].len();
    for p in points {
        if p.len() != ambient {
            return Err(Error::DimensionMismatch { expected: ambient, got: p.len() });
        }
    }
    let mut dedup: Vec<Vec<Int>> = points.to_vec();
    dedup.sort();
    dedup.dedup();
    let homog: Vec<Vec<Int>> = dedup
        .iter()
        .map(|p| {
            let mut v = p.clone();
            v.push(Int::one());
            v
        })
        .collect();
    let cone = Cone::from_v(ambient + 1, &homog, &[]);
    let mut vertices: Vec<Vec<Int>> = cone
        .rays()
        .iter()
        .map(|r| {
            debug_assert!(r[ambient].is_one(), "homogenization ray not at height one");
            r[..ambient].to_vec()
        })
        .collect();
    vertices.sort();
    let facets = hull_facets(&dedup);
    Ok(LatticePolytope { ambient, vertices, facets })
}
