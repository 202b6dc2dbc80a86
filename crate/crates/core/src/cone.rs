//! Exact rational polyhedral cones via the double description method.
//!
//! A cone carries both representations at all times: extreme rays plus a
//! lineality basis (V), and irredundant facet normals plus equations cutting
//! out the linear span (H). Rays and facet normals are canonicalized to the
//! primitive integer representative orthogonal to the lineality (resp. the
//! equation span), so cone equality is plain field equality.

use crate::matrix::{
    clear_denominators, is_zero_vec, primitive, rank_of_rows, rat_vec, rdot, vdot, vneg, Int,
    Rat,
};
use crate::lattice::Sublattice;
use num::{Signed, Zero};
use std::collections::BTreeSet;

#[derive(Clone, Debug)]
struct Ray {
    vec: Vec<Int>,
    /// Indices of processed inequalities this ray is tight on.
    tight: BTreeSet<u32>,
}

/// Double description: rays and lineality of
/// `{ x : a.x >= 0 for inequalities, a.x = 0 for equations }`.
///
/// Adjacency during combination steps uses the rank test: two rays are
/// adjacent iff their common tight constraints (plus all equations) have
/// rank `ambient - dim lineality - 2`.
fn raw_dd(
    ambient: usize,
    ineqs: &[Vec<Int>],
    eqs: &[Vec<Int>],
) -> (Vec<Vec<Int>>, Vec<Vec<Int>>) {
    let mut lineality: Vec<Vec<Int>> = (0..ambient)
        .map(|i| {
            let mut v = vec![Int::zero(); ambient];
            v[i] = Int::from(1);
            v
        })
        .collect();
    let mut rays: Vec<Ray> = Vec::new();
    let mut processed: Vec<Vec<Int>> = Vec::new(); // inequalities, by index
    let mut eq_list: Vec<Vec<Int>> = Vec::new();

    // Equations first: they only shrink the ambient work.
    let constraints = eqs
        .iter()
        .map(|a| (a.clone(), true))
        .chain(ineqs.iter().map(|a| (a.clone(), false)));

    for (a, is_eq) in constraints {
        assert_eq!(a.len(), ambient);
        if is_zero_vec(&a) {
            continue;
        }
        if let Some(p) = lineality.iter().position(|l| !vdot(&a, l).is_zero()) {
            let mut z = lineality.remove(p);
            if vdot(&a, &z).is_negative() {
                z = vneg(&z);
            }
            let az = vdot(&a, &z);
            for l in lineality.iter_mut() {
                let al = vdot(&a, l);
                let new: Vec<Int> =
                    l.iter().zip(&z).map(|(x, y)| &az * x - &al * y).collect();
                *l = primitive(&new);
            }
            for r in rays.iter_mut() {
                let ar = vdot(&a, &r.vec);
                let new: Vec<Int> =
                    r.vec.iter().zip(&z).map(|(x, y)| &az * x - &ar * y).collect();
                debug_assert!(!is_zero_vec(&new), "ray collapsed during pivot");
                r.vec = primitive(&new);
            }
            if is_eq {
                eq_list.push(a);
            } else {
                // All surviving rays now lie on the hyperplane of `a`; the
                // pivot itself becomes the one ray strictly inside.
                let idx = processed.len() as u32;
                for r in rays.iter_mut() {
                    r.tight.insert(idx);
                }
                let tight: BTreeSet<u32> = (0..idx).collect();
                rays.push(Ray { vec: primitive(&z), tight });
                processed.push(a);
            }
            continue;
        }
        // `a` vanishes on the lineality; classic ray-splitting step.
        let vals: Vec<Int> = rays.iter().map(|r| vdot(&a, &r.vec)).collect();
        let pos: Vec<usize> = (0..rays.len()).filter(|&i| vals[i].is_positive()).collect();
        let neg: Vec<usize> = (0..rays.len()).filter(|&i| vals[i].is_negative()).collect();
        if neg.is_empty() && !is_eq {
            // redundant halfspace; still record tightness
            let idx = processed.len() as u32;
            for (i, r) in rays.iter_mut().enumerate() {
                if vals[i].is_zero() {
                    r.tight.insert(idx);
                }
            }
            processed.push(a);
            continue;
        }
        let lin_dim = lineality.len();
        let adjacent = |r1: &Ray, r2: &Ray| -> bool {
            let common: Vec<Vec<Int>> = r1
                .tight
                .intersection(&r2.tight)
                .map(|&i| processed[i as usize].clone())
                .chain(eq_list.iter().cloned())
                .collect();
            rank_of_rows(&common, ambient) == ambient - lin_dim - 2
        };
        let mut new_rays: Vec<Ray> = Vec::new();
        let idx = processed.len() as u32;
        for (i, r) in rays.iter().enumerate() {
            if vals[i].is_zero() {
                let mut r = r.clone();
                if !is_eq {
                    r.tight.insert(idx);
                }
                new_rays.push(r);
            } else if vals[i].is_positive() && !is_eq {
                new_rays.push(r.clone());
            }
        }
        for &ip in &pos {
            for &im in &neg {
                if ambient >= lin_dim + 2 && !adjacent(&rays[ip], &rays[im]) {
                    continue;
                }
                let (rp, rm) = (&rays[ip], &rays[im]);
                let w: Vec<Int> = rm
                    .vec
                    .iter()
                    .zip(&rp.vec)
                    .map(|(m, p)| &vals[ip] * m - &vals[im] * p)
                    .collect();
                if is_zero_vec(&w) {
                    continue;
                }
                let mut tight: BTreeSet<u32> =
                    rp.tight.intersection(&rm.tight).cloned().collect();
                if !is_eq {
                    tight.insert(idx);
                }
                new_rays.push(Ray { vec: primitive(&w), tight });
            }
        }
        // dedup identical directions
        new_rays.sort_by(|x, y| x.vec.cmp(&y.vec));
        new_rays.dedup_by(|x, y| x.vec == y.vec);
        rays = new_rays;
        if is_eq {
            eq_list.push(a);
        } else {
            processed.push(a);
        }
    }
    (rays.into_iter().map(|r| r.vec).collect(), lineality)
}

/// Canonical basis for the subspace spanned by `gens`: the row HNF basis of
/// the saturated lattice.
fn canonical_subspace(ambient: usize, gens: &[Vec<Int>]) -> Vec<Vec<Int>> {
    let nonzero: Vec<Vec<Int>> = gens.iter().filter(|g| !is_zero_vec(g)).cloned().collect();
    if nonzero.is_empty() {
        return Vec::new();
    }
    Sublattice::from_generators(ambient, &nonzero).saturation().basis_rows()
}

/// Orthogonal projection of `v` onto the complement of `span(basis)`,
/// returned as a primitive integer vector (orientation preserved).
fn reduce_mod_subspace(v: &[Int], basis: &[Vec<Int>]) -> Vec<Int> {
    if basis.is_empty() {
        return primitive(v);
    }
    let k = basis.len();
    let gram: Vec<Vec<Rat>> = (0..k)
        .map(|i| (0..k).map(|j| Rat::from_integer(vdot(&basis[i], &basis[j]))).collect())
        .collect();
    let rhs: Vec<Rat> = (0..k).map(|i| Rat::from_integer(vdot(&basis[i], v))).collect();
    let y = crate::matrix::solve_rational(&gram, &rhs).expect("Gram matrix is invertible");
    let vr = rat_vec(v);
    let proj: Vec<Rat> = (0..v.len())
        .map(|j| {
            let mut s = vr[j].clone();
            for i in 0..k {
                s -= &y[i] * Rat::from_integer(basis[i][j].clone());
            }
            s
        })
        .collect();
    clear_denominators(&proj)
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Cone {
    ambient: usize,
    rays: Vec<Vec<Int>>,
    lineality: Vec<Vec<Int>>,
    facets: Vec<Vec<Int>>,
    equations: Vec<Vec<Int>>,
}

impl Cone {
    pub fn from_h(ambient: usize, ineqs: &[Vec<Int>], eqs: &[Vec<Int>]) -> Cone {
        let (rays_raw, lin_raw) = raw_dd(ambient, ineqs, eqs);
        Self::assemble(ambient, &rays_raw, &lin_raw)
    }

    pub fn from_v(ambient: usize, gens: &[Vec<Int>], lin: &[Vec<Int>]) -> Cone {
        let cone = Self::assemble(ambient, gens, lin);
        #[cfg(debug_assertions)]
        for g in gens {
            debug_assert!(cone.contains(g), "generator escaped its own cone");
        }
        cone
    }

    /// The full space as a cone.
    pub fn everything(ambient: usize) -> Cone {
        Cone::from_h(ambient, &[], &[])
    }

    fn assemble(ambient: usize, rays_raw: &[Vec<Int>], lin_raw: &[Vec<Int>]) -> Cone {
        // Polar pass yields the irredundant H-representation.
        let (facets_raw, eq_raw) = raw_dd(ambient, rays_raw, lin_raw);
        // A second pass through the polar canonicalizes arbitrary
        // V-generators into extreme rays.
        let (rays2, lin2) = raw_dd(ambient, &facets_raw, &eq_raw);
        let lineality = canonical_subspace(ambient, &lin2);
        let equations = canonical_subspace(ambient, &eq_raw);
        let mut rays: Vec<Vec<Int>> =
            rays2.iter().map(|r| reduce_mod_subspace(r, &lineality)).collect();
        rays.sort();
        rays.dedup();
        let mut facets: Vec<Vec<Int>> =
            facets_raw.iter().map(|f| reduce_mod_subspace(f, &equations)).collect();
        facets.sort();
        facets.dedup();
        let cone = Cone { ambient, rays, lineality, facets, equations };
        #[cfg(debug_assertions)]
        cone.check_consistency();
        cone
    }

    #[cfg(debug_assertions)]
    fn check_consistency(&self) {
        for r in &self.rays {
            for f in &self.facets {
                debug_assert!(!vdot(r, f).is_negative(), "ray violates facet");
            }
            for e in &self.equations {
                debug_assert!(vdot(r, e).is_zero(), "ray violates equation");
            }
        }
        for l in &self.lineality {
            for f in &self.facets {
                debug_assert!(vdot(l, f).is_zero(), "lineality violates facet");
            }
            for e in &self.equations {
                debug_assert!(vdot(l, e).is_zero(), "lineality violates equation");
            }
        }
        debug_assert_eq!(self.dim() + rank_of_rows(&self.equations, self.ambient), self.ambient);
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn rays(&self) -> &[Vec<Int>] {
        &self.rays
    }

    pub fn lineality(&self) -> &[Vec<Int>] {
        &self.lineality
    }

    pub fn facets(&self) -> &[Vec<Int>] {
        &self.facets
    }

    pub fn equations(&self) -> &[Vec<Int>] {
        &self.equations
    }

    pub fn dim(&self) -> usize {
        let mut gens = self.rays.clone();
        gens.extend(self.lineality.iter().cloned());
        rank_of_rows(&gens, self.ambient)
    }

    pub fn lineality_dim(&self) -> usize {
        self.lineality.len()
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.equations.is_empty()
    }

    pub fn contains(&self, x: &[Int]) -> bool {
        self.equations.iter().all(|e| vdot(e, x).is_zero())
            && self.facets.iter().all(|f| !vdot(f, x).is_negative())
    }

    pub fn contains_rat(&self, x: &[Rat]) -> bool {
        self.equations.iter().all(|e| rdot(&rat_vec(e), x).is_zero())
            && self.facets.iter().all(|f| !rdot(&rat_vec(f), x).is_negative())
    }

    pub fn relint_contains(&self, x: &[Int]) -> bool {
        self.equations.iter().all(|e| vdot(e, x).is_zero())
            && self.facets.iter().all(|f| vdot(f, x).is_positive())
    }

    pub fn relint_contains_rat(&self, x: &[Rat]) -> bool {
        self.equations.iter().all(|e| rdot(&rat_vec(e), x).is_zero())
            && self.facets.iter().all(|f| rdot(&rat_vec(f), x).is_positive())
    }

    /// A lattice point in the relative interior: the sum of the extreme
    /// rays (the origin for a pure subspace).
    pub fn relative_interior_point(&self) -> Vec<Int> {
        let mut p = vec![Int::zero(); self.ambient];
        for r in &self.rays {
            for j in 0..self.ambient {
                p[j] += &r[j];
            }
        }
        debug_assert!(self.relint_contains(&p) || self.facets.is_empty());
        p
    }

    pub fn intersect(&self, other: &Cone) -> Cone {
        assert_eq!(self.ambient, other.ambient);
        let ineqs: Vec<Vec<Int>> =
            self.facets.iter().chain(&other.facets).cloned().collect();
        let eqs: Vec<Vec<Int>> =
            self.equations.iter().chain(&other.equations).cloned().collect();
        Cone::from_h(self.ambient, &ineqs, &eqs)
    }

    /// All faces, including the cone itself and its minimal face.
    pub fn faces(&self) -> Vec<Cone> {
        let ray_sets = self.face_ray_sets();
        ray_sets
            .into_iter()
            .map(|s| {
                let gens: Vec<Vec<Int>> = s.iter().map(|&i| self.rays[i].clone()).collect();
                Cone::from_v(self.ambient, &gens, &self.lineality)
            })
            .collect()
    }

    fn face_ray_sets(&self) -> Vec<BTreeSet<usize>> {
        let full: BTreeSet<usize> = (0..self.rays.len()).collect();
        let mut sets: BTreeSet<BTreeSet<usize>> = BTreeSet::new();
        sets.insert(full);
        for f in &self.facets {
            let s: BTreeSet<usize> =
                (0..self.rays.len()).filter(|&i| vdot(f, &self.rays[i]).is_zero()).collect();
            sets.insert(s);
        }
        loop {
            let snapshot: Vec<BTreeSet<usize>> = sets.iter().cloned().collect();
            let before = sets.len();
            for i in 0..snapshot.len() {
                for j in i + 1..snapshot.len() {
                    let inter: BTreeSet<usize> =
                        snapshot[i].intersection(&snapshot[j]).cloned().collect();
                    sets.insert(inter);
                }
            }
            if sets.len() == before {
                break;
            }
        }
        sets.into_iter().collect()
    }

    /// Is `self` a face of `other`? Assumes both share the same lineality.
    pub fn is_face_of(&self, other: &Cone) -> bool {
        if self.ambient != other.ambient || self.lineality != other.lineality {
            return false;
        }
        if !self.rays.iter().all(|r| other.rays.contains(r)) {
            return false;
        }
        // facets of `other` tight on all of `self`
        let tight: Vec<&Vec<Int>> = other
            .facets
            .iter()
            .filter(|f| self.rays.iter().all(|r| vdot(f, r).is_zero()))
            .collect();
        let span_rays: Vec<Vec<Int>> = other
            .rays
            .iter()
            .filter(|r| tight.iter().all(|f| vdot(f, r).is_zero()))
            .cloned()
            .collect();
        span_rays == self.rays
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::ivec;

    #[test]
    fn quadrant() {
        let c = Cone::from_h(2, &[ivec(&[1, 0]), ivec(&[0, 1])], &[]);
        assert_eq!(c.rays().len(), 2);
        assert!(c.lineality().is_empty());
        assert_eq!(c.facets().len(), 2);
        assert!(c.contains(&ivec(&[3, 5])));
        assert!(!c.contains(&ivec(&[-1, 2])));
        assert!(c.relint_contains(&ivec(&[1, 1])));
        assert!(!c.relint_contains(&ivec(&[0, 1])));
    }

    #[test]
    fn halfspace_has_lineality() {
        let c = Cone::from_h(3, &[ivec(&[1, 0, 0])], &[]);
        assert_eq!(c.lineality_dim(), 2);
        assert_eq!(c.rays().len(), 1);
        assert_eq!(c.rays()[0], ivec(&[1, 0, 0]));
    }

    #[test]
    fn from_v_redundant_generator() {
        let c = Cone::from_v(2, &[ivec(&[1, 0]), ivec(&[1, 1]), ivec(&[0, 1])], &[]);
        // (1,1) is not extreme
        assert_eq!(c.rays().len(), 2);
        assert_eq!(c.rays(), &[ivec(&[0, 1]), ivec(&[1, 0])]);
    }

    #[test]
    fn v_h_round_trip() {
        let gens = [ivec(&[2, 1, 0]), ivec(&[0, 1, 0]), ivec(&[0, 0, 1])];
        let c = Cone::from_v(3, &gens, &[]);
        let c2 = Cone::from_h(3, c.facets(), c.equations());
        assert_eq!(c, c2);
    }

    #[test]
    fn everything_and_subspace() {
        let e = Cone::everything(3);
        assert_eq!(e.lineality_dim(), 3);
        assert!(e.rays().is_empty() && e.facets().is_empty());
        let s = Cone::from_h(2, &[], &[ivec(&[1, -1])]);
        assert_eq!(s.lineality_dim(), 1);
        assert_eq!(s.dim(), 1);
        assert!(s.contains(&ivec(&[2, 2])));
        assert!(!s.contains(&ivec(&[1, 2])));
    }

    #[test]
    fn lower_dimensional_cone() {
        // the ray (1,1) inside the plane x=y of R^3... use R^2: cone over (1,1) only
        let c = Cone::from_v(2, &[ivec(&[2, 2])], &[]);
        assert_eq!(c.dim(), 1);
        assert_eq!(c.rays(), &[ivec(&[1, 1])]);
        assert_eq!(c.equations().len(), 1);
        assert!(c.contains(&ivec(&[3, 3])));
        assert!(!c.contains(&ivec(&[-1, -1])));
        assert!(!c.contains(&ivec(&[1, 2])));
    }

    #[test]
    fn faces_of_quadrant() {
        let c = Cone::from_h(2, &[ivec(&[1, 0]), ivec(&[0, 1])], &[]);
        let faces = c.faces();
        // origin, two rays, the cone itself
        assert_eq!(faces.len(), 4);
        for f in &faces {
            assert!(f.is_face_of(&c));
        }
    }

    #[test]
    fn intersect_quadrants() {
        let a = Cone::from_h(2, &[ivec(&[1, 0]), ivec(&[0, 1])], &[]);
        let b = Cone::from_h(2, &[ivec(&[-1, 0]), ivec(&[0, 1])], &[]);
        let i = a.intersect(&b);
        assert_eq!(i.dim(), 1);
        assert_eq!(i.rays(), &[ivec(&[0, 1])]);
        assert!(i.is_face_of(&a) && i.is_face_of(&b));
    }

    #[test]
    fn cube_cone_counts() {
        // cone over the 3-cube: 8 extreme rays, 6 facets
        let mut gens = Vec::new();
        for x in [0i64, 1] {
            for y in [0i64, 1] {
                for z in [0i64, 1] {
                    gens.push(ivec(&[x, y, z, 1]));
                }
            }
        }
        let c = Cone::from_v(4, &gens, &[]);
        assert_eq!(c.rays().len(), 8);
        assert_eq!(c.facets().len(), 6);
    }
}
