//! Reference configurations and Cayley structures used across tests and
//! benchmarks: a singular Fano threefold with its degree-two structures,
//! and the conics in projective 3-space.

use crate::cayley::{CayleyStructure, WeakCayleyStructure};
use crate::matrix::{Int, IntMatrix};
use crate::polytope::{Face, PointConfiguration};
use std::sync::Arc;

/// Nine lattice points in `Z^3` whose toric variety is a singular Fano
/// threefold in `P^8`. Labels follow the hexagon-vertex naming `1..6`,
/// apex `A`, bottom `B`, center `O`.
pub fn fano_configuration() -> PointConfiguration {
    let points: Vec<Vec<Int>> = [
        [-1i64, -1, 0], // 5
        [0, -1, 0],     // 6
        [1, 0, 0],      // 1
        [1, 1, 0],      // 2
        [0, 1, 0],      // 3
        [-1, 0, 0],     // 4
        [0, 0, 0],      // O
        [0, 0, 1],      // A
        [0, 0, -1],     // B
    ]
    .iter()
    .map(|p| p.iter().map(|&x| Int::from(x)).collect())
    .collect();
    let labels = ["5", "6", "1", "2", "3", "4", "O", "A", "B"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    PointConfiguration::with_labels(points, labels).expect("valid configuration")
}

fn length_one_values(cfg: &PointConfiguration, f: impl Fn(&[Int]) -> Int, d: i64) -> IntMatrix {
    let rows: Vec<Vec<Int>> = cfg
        .points()
        .iter()
        .map(|p| {
            let a = f(p);
            vec![a.clone(), Int::from(d) - a]
        })
        .collect();
    IntMatrix::from_rows(rows, 2)
}

/// The degree-two Cayley structure `u -> (1 + u_2, 1 - u_2)` on the whole
/// Fano configuration.
pub fn fano_pi(cfg: &Arc<PointConfiguration>) -> CayleyStructure {
    let values = length_one_values(cfg, |p| Int::from(1) + &p[1], 2);
    CayleyStructure::new(Face::full(cfg), values).expect("pi is a Cayley structure")
}

/// The degree-two Cayley structure `u -> (1 + u_2 + u_3, 1 - u_2 - u_3)`.
pub fn fano_pi_prime(cfg: &Arc<PointConfiguration>) -> CayleyStructure {
    let values = length_one_values(cfg, |p| Int::from(1) + &p[1] + &p[2], 2);
    CayleyStructure::new(Face::full(cfg), values).expect("pi' is a Cayley structure")
}

/// The face `{(1,0,0), (0,-1,0), (0,0,1)}` of the Fano configuration.
pub fn fano_tau(cfg: &Arc<PointConfiguration>) -> Face {
    let want = [[1i64, 0, 0], [0, -1, 0], [0, 0, 1]];
    let faces = crate::polytope::enumerate_faces(cfg);
    faces
        .into_iter()
        .find(|f| {
            f.len() == 3
                && want.iter().all(|w| {
                    let w: Vec<Int> = w.iter().map(|&x| Int::from(x)).collect();
                    f.points().contains(&w)
                })
        })
        .expect("tau is a face")
}

/// The unique (up to equivalence) length-five degree-two Cayley structure
/// `pi''` on the face `tau`: `A -> e0+e1`, `1 -> e2+e3`, `6 -> e4+e5`.
pub fn fano_pi_double_prime(cfg: &Arc<PointConfiguration>) -> CayleyStructure {
    let tau = fano_tau(cfg);
    let rows: Vec<Vec<Int>> = tau
        .points()
        .iter()
        .map(|p| {
            let cols: [i64; 6] = if p[..] == [Int::from(1), Int::from(0), Int::from(0)][..] {
                [0, 0, 1, 1, 0, 0]
            } else if p[..] == [Int::from(0), Int::from(-1), Int::from(0)][..] {
                [0, 0, 0, 0, 1, 1]
            } else {
                [1, 1, 0, 0, 0, 0]
            };
            cols.iter().map(|&x| Int::from(x)).collect()
        })
        .collect();
    let values = IntMatrix::from_rows(rows, 6);
    CayleyStructure::new(tau, values).expect("pi'' is a Cayley structure")
}

/// Restriction of a structure on the full configuration to a face, as a
/// weak Cayley structure.
pub fn restrict(pi: &CayleyStructure, face: &Face) -> WeakCayleyStructure {
    pi.weak().restrict(face).expect("restriction is non-constant")
}

/// The vertices of the unimodular 3-simplex in `Z^4`; its toric variety is
/// `P^3`.
pub fn p3_configuration() -> PointConfiguration {
    PointConfiguration::from_i64(&[
        &[1, 0, 0, 0],
        &[0, 1, 0, 0],
        &[0, 0, 1, 0],
        &[0, 0, 0, 1],
    ])
    .expect("valid configuration")
}

/// The length-seven degree-two structure `e_i -> e_i + e_{i+4}` on the
/// 3-simplex, parametrizing general conics in `P^3`.
pub fn p3_pi(cfg: &Arc<PointConfiguration>) -> CayleyStructure {
    let rows: Vec<Vec<Int>> = (0..4)
        .map(|i| {
            (0..8).map(|j| Int::from((j == i || j == i + 4) as i64)).collect()
        })
        .collect();
    let values = IntMatrix::from_rows(rows, 8);
    CayleyStructure::new(Face::full(cfg), values).expect("valid structure")
}

/// The degree-`d` "diagonal" structure `e_j -> e_{jd} + ... + e_{jd+d-1}`
/// on the vertices of a unimodular simplex.
pub fn simplex_maximal_structure(cfg: &Arc<PointConfiguration>, d: usize) -> CayleyStructure {
    let n = cfg.len();
    let rows: Vec<Vec<Int>> = (0..n)
        .map(|j| {
            (0..n * d)
                .map(|c| Int::from((c >= j * d && c < (j + 1) * d) as i64))
                .collect()
        })
        .collect();
    let values = IntMatrix::from_rows(rows, n * d);
    CayleyStructure::new(Face::full(cfg), values).expect("valid structure")
}

/// Vertices of the unimodular `ell`-simplex `Delta_ell(1)` in `Z^{ell+1}`.
pub fn unimodular_simplex(ell: usize) -> PointConfiguration {
    let points: Vec<Vec<Int>> = (0..=ell)
        .map(|i| (0..=ell).map(|j| Int::from((i == j) as i64)).collect())
        .collect();
    PointConfiguration::new(points).expect("valid configuration")
}
