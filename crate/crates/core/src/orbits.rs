//! Torus-orbit degenerations of the curves attached to a primitive Cayley
//! structure: limit one-cycles under one-parameter subgroups, the fan of
//! regions with constant generic limit, Chow polytopes, and the refined
//! fan describing conic orbits in the Hilbert scheme.
//!
//! Everything is computed in the dual of the ambient lattice; lineality
//! spaces carry the directions a quotient presentation would divide out.

use crate::cayley::{basepoints_of, pi_star, CayleyStructure, PiStar, WeakCayleyStructure};
use crate::cone::Cone;
use crate::fan::{common_refinement, normal_cone_in_face, normal_fan_of_polytope, Fan};
use crate::matrix::{
    primitive_signed, rat_vec, rdot, vadd, vdot, vscale, Int, Rat,
};
use crate::oracle::{wedge, BinaryForm};
use crate::polytope::{
    convex_hull, edge_lattice_length, enumerate_faces, minimizing_face, Face, LatticePolytope,
};
use crate::{Error, Result};
use num::{One, Signed, Zero};
use std::collections::BTreeMap;

/// Formal nonnegative integer combination of edges of a face, keyed by the
/// edges' index sets.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Default)]
pub struct EdgeCycle {
    terms: BTreeMap<Vec<usize>, Int>,
}

impl EdgeCycle {
    pub fn zero() -> Self {
        EdgeCycle::default()
    }

    pub fn add(&mut self, edge: &Face, mult: Int) {
        if mult.is_zero() {
            return;
        }
        debug_assert_eq!(edge.dim(), 1);
        *self.terms.entry(edge.indices().to_vec()).or_insert_with(Int::zero) += mult;
    }

    pub fn terms(&self) -> &BTreeMap<Vec<usize>, Int> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn plus(&self, other: &EdgeCycle) -> EdgeCycle {
        let mut out = self.clone();
        for (k, v) in &other.terms {
            *out.terms.entry(k.clone()).or_insert_with(Int::zero) += v;
        }
        out
    }

    /// Total degree: sum of multiplicity times lattice length over the
    /// edges.
    pub fn total_degree(&self, faces: &[Face]) -> Int {
        let mut acc = Int::zero();
        for (k, m) in &self.terms {
            let edge = faces
                .iter()
                .find(|f| f.indices() == k.as_slice())
                .expect("edge cycle refers to a face");
            acc += m * edge_lattice_length(edge).expect("edges have dimension one");
        }
        acc
    }
}

/// The weight map on edges: an edge goes to its lattice length times the
/// sum of its endpoints. Additive on cycles.
pub fn mu_of_edge(edge: &Face) -> Result<Vec<Int>> {
    let l = edge_lattice_length(edge)?;
    let pts = edge.points();
    let lat = edge.difference_lattice();
    let gen = lat.basis_rows().pop().expect("edge has rank one");
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
    Ok(vscale(&l, &vadd(&pts[lo], &pts[hi])))
}

pub fn mu_of_cycle(cycle: &EdgeCycle, faces: &[Face]) -> Result<Vec<Int>> {
    let ambient = faces
        .first()
        .map(|f| f.config().ambient_rank())
        .ok_or(Error::EmptyInput("face list"))?;
    let mut acc = vec![Int::zero(); ambient];
    for (k, m) in cycle.terms() {
        let edge = faces
            .iter()
            .find(|f| f.indices() == k.as_slice())
            .ok_or_else(|| Error::Internal("edge cycle refers to a missing face".into()))?;
        let mu = mu_of_edge(edge)?;
        for j in 0..ambient {
            acc[j] += &m.clone() * &mu[j];
        }
    }
    Ok(acc)
}

/// A torus translate in factored form, or the symbolic identity.
#[derive(Clone, Debug)]
pub enum TorusTranslate {
    Identity,
    Factored(FactoredTorusElement),
}

/// Product of one-parameter subgroup values `prod scalar_j ^ <m, w_j>`,
/// kept factored; the cocharacters are rational ambient representatives of
/// elements of the dual of the face's difference lattice.
#[derive(Clone, Debug)]
pub struct FactoredTorusElement {
    pub factors: Vec<(Rat, Vec<Rat>)>,
}

impl FactoredTorusElement {
    /// Evaluate at a character `m` of the face's difference lattice.
    pub fn eval(&self, m: &[Int]) -> Rat {
        let mr = rat_vec(m);
        let mut acc = Rat::one();
        for (scalar, w) in &self.factors {
            let e = rdot(w, &mr);
            debug_assert!(e.is_integer());
            let e = i64::try_from(&e.to_integer()).expect("small exponent");
            if e >= 0 {
                for _ in 0..e {
                    acc *= scalar;
                }
            } else {
                for _ in 0..(-e) {
                    acc /= scalar;
                }
            }
        }
        acc
    }
}

/// One boundary component of a limit cycle: a length-one structure on a
/// face of the domain, with multiplicity and torus translate.
#[derive(Clone, Debug)]
pub struct BoundaryTerm {
    pub face: Face,
    pub structure: CayleyStructure,
    pub multiplicity: Int,
    pub translate: TorusTranslate,
}

/// Interior component of a limit cycle, present when the structure
/// restricted to the minimizing face is non-constant.
#[derive(Clone, Debug)]
pub struct InteriorTerm {
    pub structure: WeakCayleyStructure,
    pub multiplicity: Int,
}

/// The limit one-cycle of the curve family under a one-parameter subgroup.
#[derive(Clone, Debug)]
pub struct LimitCycle {
    pub interior: Option<InteriorTerm>,
    pub boundary: Vec<BoundaryTerm>,
    /// True when the direction is generic: the minimizing face is a vertex
    /// and all crossed cones have codimension one.
    pub generic: bool,
}

impl LimitCycle {
    /// Degree of the cycle: multiplicity times component degree, summed.
    pub fn total_degree(&self) -> Int {
        let mut acc = Int::zero();
        if let Some(t) = &self.interior {
            acc += &t.multiplicity * t.structure.degree();
        }
        for b in &self.boundary {
            acc += &b.multiplicity * b.structure.degree();
        }
        acc
    }

    /// The boundary support as an edge cycle (defined when all boundary
    /// faces are edges, i.e. for generic directions).
    pub fn boundary_edge_cycle(&self) -> Option<EdgeCycle> {
        let mut out = EdgeCycle::zero();
        for b in &self.boundary {
            if b.face.dim() != 1 {
                return None;
            }
            out.add(&b.face, b.multiplicity.clone());
        }
        Some(out)
    }
}

fn require_primitive(pi: &CayleyStructure) -> Result<()> {
    if pi.is_primitive() {
        Ok(())
    } else {
        Err(Error::Imprimitive)
    }
}

/// Faces of the structure's domain, smallest first.
fn faces_of_domain(pi: &CayleyStructure) -> Vec<Face> {
    let tau = pi.face();
    enumerate_faces(tau.config())
        .into_iter()
        .filter(|f| tau.contains_face(f))
        .collect()
}

/// The cones of the inner normal fan of the domain corresponding to
/// faces on which the i-th simplex coordinate is non-constant.
pub fn i_face_fan(pi: &CayleyStructure, i: usize) -> Result<Vec<(Face, Cone)>> {
    require_primitive(pi)?;
    assert!(i <= pi.length(), "coordinate index out of range");
    let tau = pi.face();
    let mut out = Vec::new();
    for f in faces_of_domain(pi) {
        let vals = pi.weak().restricted_values(&f);
        let constant = (0..vals.rows()).all(|r| vals[(r, i)] == vals[(0, i)]);
        if !constant {
            let cone = normal_cone_in_face(tau, &f);
            out.push((f, cone));
        }
    }
    Ok(out)
}

/// Does the ray `v + t*w` (t > 0 when `strict`, t >= 0 otherwise) meet the
/// cone (its relative interior when `strict`)?
fn ray_meets(cone: &Cone, v: &[Rat], w: &[Rat], strict: bool) -> bool {
    let ok = |x: &Rat| -> bool {
        if strict {
            x.is_positive()
        } else {
            !x.is_negative()
        }
    };
    let mut pinned: Option<Rat> = None;
    for e in cone.equations() {
        let er = rat_vec(e);
        let ev = rdot(&er, v);
        let ew = rdot(&er, w);
        if ew.is_zero() {
            if !ev.is_zero() {
                return false;
            }
        } else {
            let t0 = -ev / ew;
            match &pinned {
                None => pinned = Some(t0),
                Some(p) if *p == t0 => {}
                _ => return false,
            }
        }
    }
    if let Some(t0) = pinned {
        if strict {
            if !t0.is_positive() {
                return false;
            }
        } else if t0.is_negative() {
            return false;
        }
        for f in cone.facets() {
            let fr = rat_vec(f);
            let val = rdot(&fr, v) + rdot(&fr, w) * &t0;
            if !ok(&val) {
                return false;
            }
        }
        return true;
    }
    // open or closed interval in t
    let mut lo = Rat::zero();
    let mut lo_strict = strict; // t > 0 or t >= 0
    let mut hi: Option<(Rat, bool)> = None;
    for f in cone.facets() {
        let fr = rat_vec(f);
        let fv = rdot(&fr, v);
        let fw = rdot(&fr, w);
        if fw.is_zero() {
            if !ok(&fv) {
                return false;
            }
        } else if fw.is_positive() {
            let bound = -fv / fw;
            if bound > lo {
                lo = bound;
                lo_strict = strict;
            } else if bound == lo && strict {
                lo_strict = true;
            }
        } else {
            let bound = -fv / fw;
            match &hi {
                None => hi = Some((bound, strict)),
                Some((h, hs)) => {
                    if bound < *h {
                        hi = Some((bound, strict));
                    } else if bound == *h && strict && !hs {
                        hi = Some((bound, true));
                    }
                }
            }
        }
    }
    match hi {
        None => true,
        Some((h, hs)) => lo < h || (lo == h && !lo_strict && !hs),
    }
}

/// The cones of the i-face fan whose relative interior is crossed by the
/// ray `v + t * pi*(e_i*)`, `t > 0`.
pub fn sigma_i_v(pi: &CayleyStructure, i: usize, v: &[Int]) -> Result<Vec<(Face, Cone)>> {
    let ps = pi_star(pi);
    sigma_i_v_with(pi, &ps, i, v)
}

fn sigma_i_v_with(
    pi: &CayleyStructure,
    ps: &PiStar,
    i: usize,
    v: &[Int],
) -> Result<Vec<(Face, Cone)>> {
    let w = rat_vec(&ps.direction(i));
    let vr = rat_vec(v);
    Ok(i_face_fan(pi, i)?
        .into_iter()
        .filter(|(_, cone)| ray_meets(cone, &vr, &w, true))
        .collect())
}

/// The per-edge multiplicity: the swing of the i-th coordinate across the
/// edge divided by the edge's lattice length; zero when the coordinate is
/// constant on the edge.
pub fn mult_i(pi: &CayleyStructure, i: usize, edge: &Face) -> Result<Int> {
    if edge.dim() != 1 {
        return Err(Error::NotAnEdge(edge.dim()));
    }
    let vals = pi.weak().restricted_values(edge);
    let col: Vec<Int> = (0..vals.rows()).map(|r| vals[(r, i)].clone()).collect();
    let max = col.iter().max().unwrap();
    let min = col.iter().min().unwrap();
    if max == min {
        return Ok(Int::zero());
    }
    let l = edge_lattice_length(edge)?;
    let diff = max - min;
    debug_assert!((&diff % &l).is_zero(), "coordinate swing is a multiple of the length");
    Ok(diff / l)
}

/// The edge-cycle value of the limit map at `v`: over every coordinate and
/// every edge on which it varies, the edge weighted by its multiplicity
/// whenever `v` lies in the edge cone pushed back along `pi*(e_i*)`.
pub fn phi_value(pi: &CayleyStructure, v: &[Int]) -> Result<EdgeCycle> {
    let ps = pi_star(pi);
    let data = shifted_cone_data(pi, &ps)?;
    Ok(phi_with(&data, &rat_vec(v)))
}

/// Precomputed membership data: for each coordinate and i-edge, the
/// Minkowski sum `cone(edge) - R_{>=0} pi*(e_i*)` with its multiplicity.
struct ShiftedCone {
    edge: Face,
    mult: Int,
    cone: Cone,
}

fn shifted_cone_data(pi: &CayleyStructure, ps: &PiStar) -> Result<Vec<ShiftedCone>> {
    require_primitive(pi)?;
    let tau = pi.face();
    let ambient = tau.config().ambient_rank();
    let mut out = Vec::new();
    for edge in faces_of_domain(pi).into_iter().filter(|f| f.dim() == 1) {
        let base = normal_cone_in_face(tau, &edge);
        for i in 0..=pi.length() {
            let m = mult_i(pi, i, &edge)?;
            if m.is_zero() {
                continue;
            }
            let w = ps.direction(i);
            let mut gens: Vec<Vec<Int>> = base.rays().to_vec();
            gens.push(crate::matrix::vneg(&w));
            let cone = Cone::from_v(ambient, &gens, base.lineality());
            debug_assert!(cone.is_full_dimensional(), "shifted cones are full-dimensional");
            out.push(ShiftedCone { edge: edge.clone(), mult: m, cone });
        }
    }
    Ok(out)
}

fn phi_with(data: &[ShiftedCone], v: &[Rat]) -> EdgeCycle {
    let mut cycle = EdgeCycle::zero();
    for sc in data {
        if sc.cone.contains_rat(v) {
            cycle.add(&sc.edge, sc.mult.clone());
        }
    }
    cycle
}

/// The limit one-cycle of the curve family under the one-parameter
/// subgroup `v`: the reduced interior component on the minimizing face
/// when the restriction is non-constant, plus one length-one component per
/// crossed cone of each basepoint coordinate.
///
/// When `forms` are supplied the torus translates are returned in factored
/// form; length-one structures always carry the identity.
pub fn limit_cycle(
    pi: &CayleyStructure,
    v: &[Int],
    forms: Option<&[BinaryForm]>,
) -> Result<LimitCycle> {
    require_primitive(pi)?;
    let tau = pi.face();
    if let Some(fs) = forms {
        if fs.len() != pi.length() + 1 {
            return Err(Error::DimensionMismatch {
                expected: pi.length() + 1,
                got: fs.len(),
            });
        }
        for f in fs {
            if !f.is_linear() {
                return Err(Error::DegenerateForms);
            }
        }
    }
    let ps = pi_star(pi);
    let tau_v = minimizing_face(tau, v);
    let restricted = pi.weak().restricted_values(&tau_v);
    let restriction_constant =
        (0..restricted.rows()).all(|r| restricted.row(r) == restricted.row(0));
    let interior = if restriction_constant {
        None
    } else {
        let weak = pi.weak().restrict(&tau_v).expect("non-constant restriction");
        let (red, mult) = weak.resolution().reduction();
        Some(InteriorTerm { structure: red, multiplicity: mult })
    };
    let basepoints = basepoints_of(&restricted);
    let mut boundary = Vec::new();
    let mut generic = tau_v.dim() == 0;
    for &i in &basepoints {
        let translate = match (forms, pi.length()) {
            (_, 1) | (None, _) => TorusTranslate::Identity,
            (Some(fs), _) => {
                let factors: Vec<(Rat, Vec<Rat>)> = (0..fs.len())
                    .filter(|&j| j != i)
                    .map(|j| (wedge(&fs[j], &fs[i]), ps.col(j).to_vec()))
                    .collect();
                TorusTranslate::Factored(FactoredTorusElement { factors })
            }
        };
        for (face, cone) in sigma_i_v_with(pi, &ps, i, v)? {
            if cone.dim() + 1 != tau.config().ambient_rank() {
                generic = false;
            }
            // kappa_i composed with the restriction: coordinate i against
            // the rest, then resolved and reduced to length one
            let vals = pi.weak().restricted_values(&face);
            let d = pi.degree();
            let rows: Vec<Vec<Int>> = (0..vals.rows())
                .map(|r| {
                    let a = vals[(r, i)].clone();
                    vec![a.clone(), d - a]
                })
                .collect();
            let kappa = WeakCayleyStructure::new(
                face.clone(),
                crate::matrix::IntMatrix::from_rows(rows, 2),
            )
            .expect("i-faces make the folded map non-constant");
            let (red, mult) = kappa.resolution().reduction();
            let structure = CayleyStructure::new(red.face().clone(), red.values().clone())
                .expect("reductions of folded restrictions are length-one Cayley structures");
            boundary.push(BoundaryTerm {
                face,
                structure,
                multiplicity: mult,
                translate: translate.clone(),
            });
        }
    }
    Ok(LimitCycle { interior, boundary, generic })
}

/// The fan of directions with constant generic limit: the arrangement
/// generated by the facets of the shifted cones, refined into cells,
/// merged on equal limit values.
pub fn build_sigma_pi(pi: &CayleyStructure) -> Result<Fan> {
    Ok(sigma_pi_with_limits(pi)?.0)
}

/// The fan together with, per maximal cone, a generic interior direction
/// (off every arrangement hyperplane) and the limit cycle there.
pub fn sigma_pi_with_limits(pi: &CayleyStructure) -> Result<(Fan, Vec<(Vec<Int>, EdgeCycle)>)> {
    require_primitive(pi)?;
    let ambient = pi.face().config().ambient_rank();
    let ps = pi_star(pi);
    let data = shifted_cone_data(pi, &ps)?;
    if data.is_empty() {
        return Err(Error::Internal("structure admits no varying edges".into()));
    }
    // hyperplane arrangement from all facets of the shifted cones
    let mut hyperplanes: Vec<Vec<Int>> = Vec::new();
    for sc in &data {
        for f in sc.cone.facets() {
            hyperplanes.push(primitive_signed(f));
        }
    }
    hyperplanes.sort();
    hyperplanes.dedup();
    // recursive splitting into full-dimensional cells
    let mut cells: Vec<Cone> = vec![Cone::everything(ambient)];
    for h in &hyperplanes {
        let mut next = Vec::with_capacity(cells.len());
        for cell in cells {
            let mut has_pos = false;
            let mut has_neg = false;
            for r in cell.rays() {
                match vdot(h, r).sign() {
                    num::bigint::Sign::Plus => has_pos = true,
                    num::bigint::Sign::Minus => has_neg = true,
                    num::bigint::Sign::NoSign => {}
                }
            }
            for l in cell.lineality() {
                if !vdot(h, l).is_zero() {
                    has_pos = true;
                    has_neg = true;
                }
            }
            if has_pos && has_neg {
                let mut pos_ineqs = cell.facets().to_vec();
                pos_ineqs.push(h.clone());
                next.push(Cone::from_h(ambient, &pos_ineqs, cell.equations()));
                let mut neg_ineqs = cell.facets().to_vec();
                neg_ineqs.push(crate::matrix::vneg(h));
                next.push(Cone::from_h(ambient, &neg_ineqs, cell.equations()));
            } else {
                next.push(cell);
            }
        }
        cells = next;
    }
    // limit value and sign vector per cell
    let samples: Vec<Vec<Int>> = cells.iter().map(|c| c.relative_interior_point()).collect();
    let values: Vec<EdgeCycle> =
        samples.iter().map(|s| phi_with(&data, &rat_vec(s))).collect();
    let signs: Vec<Vec<bool>> = samples
        .iter()
        .map(|s| {
            hyperplanes
                .iter()
                .map(|h| {
                    let d = vdot(h, s);
                    debug_assert!(!d.is_zero(), "cell sample on an arrangement hyperplane");
                    d.is_positive()
                })
                .collect()
        })
        .collect();
    // merge adjacent cells with equal values into connected components
    let n = cells.len();
    let mut component: Vec<usize> = (0..n).collect();
    fn find(component: &mut Vec<usize>, mut i: usize) -> usize {
        while component[i] != i {
            component[i] = component[component[i]];
            i = component[i];
        }
        i
    }
    for i in 0..n {
        for j in i + 1..n {
            if values[i] != values[j] {
                continue;
            }
            let diff = signs[i].iter().zip(&signs[j]).filter(|(a, b)| a != b).count();
            if diff != 1 {
                continue;
            }
            // shared wall must be full-dimensional in the hyperplane
            let wall = cells[i].intersect(&cells[j]);
            if wall.dim() == ambient - 1 {
                let (ri, rj) = (find(&mut component, i), find(&mut component, j));
                component[ri] = rj;
            }
        }
    }
    let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for i in 0..n {
        let root = find(&mut component, i);
        groups.entry(root).or_default().push(i);
    }
    let mut maximal = Vec::new();
    let mut limits: Vec<(Cone, Vec<Int>, EdgeCycle)> = Vec::new();
    for (_, members) in groups {
        let mut gens: Vec<Vec<Int>> = Vec::new();
        let mut lin: Vec<Vec<Int>> = Vec::new();
        for &m in &members {
            gens.extend(cells[m].rays().iter().cloned());
            lin.extend(cells[m].lineality().iter().cloned());
        }
        let merged = Cone::from_v(ambient, &gens, &lin);
        // merged regions must be unions of exactly their member cells
        for i in 0..n {
            let inside = merged.relint_contains(&samples[i]);
            let member = members.contains(&i);
            if member && !inside {
                return Err(Error::Internal("merged region does not cover a member cell".into()));
            }
            if !member && merged.contains(&samples[i]) && values[i] != values[members[0]] {
                return Err(Error::Internal(
                    "regions of constant limit failed to merge convexly".into(),
                ));
            }
        }
        // any member cell's sample is generic for the whole region
        let rep = members[0];
        limits.push((merged.clone(), samples[rep].clone(), values[rep].clone()));
        maximal.push(merged);
    }
    let fan = Fan::from_maximal_cones(ambient, maximal)?;
    let aligned: Vec<(Vec<Int>, EdgeCycle)> = fan
        .maximal_cones()
        .iter()
        .map(|c| {
            let (_, sample, value) = limits
                .iter()
                .find(|(cone, _, _)| cone == c)
                .expect("every fan cone came from a merged region");
            (sample.clone(), value.clone())
        })
        .collect();
    Ok((fan, aligned))
}

/// Chow polytope: the convex hull of the weighted limit values, one per
/// maximal cone of the orbit fan. Its normal fan is the orbit fan again.
pub fn chow_polytope(pi: &CayleyStructure) -> Result<LatticePolytope> {
    let (_, limits) = sigma_pi_with_limits(pi)?;
    let faces = faces_of_domain(pi);
    let mut points = Vec::new();
    for (_, cycle) in &limits {
        points.push(mu_of_cycle(cycle, &faces)?);
    }
    convex_hull(&points)
}

/// The hull of all sums of three domain points with pairwise distinct
/// images; for degree-two structures its normal fan is the plane-orbit fan.
pub fn conic_matroid_polytope(pi: &CayleyStructure) -> Result<LatticePolytope> {
    if pi.degree() != &Int::from(2) {
        return Err(Error::WrongDegree {
            expected: 2,
            got: i64::try_from(pi.degree()).unwrap_or(i64::MAX),
        });
    }
    require_primitive(pi)?;
    let tau = pi.face();
    let vals = pi.values();
    let n = tau.len();
    let mut sums = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if vals.row(a) == vals.row(b) {
                continue;
            }
            for c in b + 1..n {
                if vals.row(c) == vals.row(a) || vals.row(c) == vals.row(b) {
                    continue;
                }
                let s = vadd(&vadd(tau.point(a), tau.point(b)), tau.point(c));
                sums.push(s);
            }
        }
    }
    if sums.is_empty() {
        return Err(Error::Internal("no triple of points with distinct images".into()));
    }
    convex_hull(&sums)
}

/// The fan of the torus-orbit closure of a conic in the Hilbert scheme:
/// the coarsest common refinement of the cycle fan and the normal fan of
/// the matroid polytope.
pub fn conic_hilbert_fan(pi: &CayleyStructure) -> Result<Fan> {
    let sigma = build_sigma_pi(pi)?;
    let matroid = conic_matroid_polytope(pi)?;
    let prime = normal_fan_of_polytope(&matroid)?;
    common_refinement(&sigma, &prime)
}


#[cfg(test)]
mod translate_tests {
    use super::*;
    use crate::fixtures;
    use crate::matrix::{int, ivec};
    use crate::oracle::random_forms;
    use std::sync::Arc;

    #[test]
    fn factored_translates_for_longer_structures() {
        let cfg = Arc::new(fixtures::fano_configuration());
        let pi2 = fixtures::fano_pi_double_prime(&cfg);
        let forms = random_forms(pi2.length(), 17);
        // minimizes at the vertex (0,-1,0) of tau, so coordinates 4 and 5
        // become basepoints
        let lim = limit_cycle(&pi2, &ivec(&[2, 1, 0]), Some(&forms)).unwrap();
        assert!(!lim.boundary.is_empty());
        for term in &lim.boundary {
            let TorusTranslate::Factored(t) = &term.translate else {
                panic!("length > 1 with forms supplied gives factored translates");
            };
            assert_eq!(t.factors.len(), pi2.length(), "one wedge factor per other form");
            for (scalar, _) in &t.factors {
                assert!(!scalar.is_zero(), "wedges of distinct-root forms are nonzero");
            }
            // evaluation on a difference of the component's face is an
            // exact nonzero rational
            if term.face.len() >= 2 {
                let m = crate::matrix::vsub(term.face.point(1), term.face.point(0));
                assert!(!t.eval(&m).is_zero());
            }
        }
        assert_eq!(lim.total_degree(), int(2));
    }

    #[test]
    fn limit_cycle_rejects_bad_forms() {
        let cfg = Arc::new(fixtures::fano_configuration());
        let pi = fixtures::fano_pi(&cfg);
        // wrong count
        let forms = random_forms(3, 1);
        assert!(limit_cycle(&pi, &ivec(&[1, 1, 1]), Some(&forms)).is_err());
    }
}
