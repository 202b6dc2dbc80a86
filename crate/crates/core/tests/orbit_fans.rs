//! Orbit fans, Chow polytopes, and conic refinements on the reference
//! configurations, checked against the worked values.

use cayley_core::fan::{common_refinement, normal_fan_of_polytope};
use cayley_core::fixtures;
use cayley_core::matrix::{ivec, Int, IntMatrix};
use cayley_core::orbits::{build_sigma_pi, chow_polytope, conic_hilbert_fan, conic_matroid_polytope};
use cayley_core::polytope::PointConfiguration;
use std::sync::Arc;

fn fano() -> Arc<PointConfiguration> {
    Arc::new(fixtures::fano_configuration())
}

#[test]
fn sigma_pi_for_pi() {
    let cfg = fano();
    let pi = fixtures::fano_pi(&cfg);
    let fan = build_sigma_pi(&pi).unwrap();
    assert_eq!(fan.maximal_cones().len(), 6);
    assert_eq!(fan.lineality(), &[ivec(&[0, 1, 0])], "lineality is the image of pi*");
    assert!(fan.is_valid());
    assert!(fan.is_complete());
    // projection along the lineality onto (u1, u3): rays (0,±1), (±1,±1)
    let proj = IntMatrix::from_i64(&[&[1, 0, 0], &[0, 0, 1]]);
    let flat = fan.project(&proj).unwrap();
    assert_eq!(flat.maximal_cones().len(), 6);
    let rays = flat.rays();
    let expect: Vec<Vec<Int>> = [
        [-1i64, -1],
        [-1, 1],
        [0, -1],
        [0, 1],
        [1, -1],
        [1, 1],
    ]
    .iter()
    .map(|r| ivec(r))
    .collect();
    assert_eq!(rays, expect);
}

#[test]
fn sigma_pi_for_pi_prime() {
    let cfg = fano();
    let pi_prime = fixtures::fano_pi_prime(&cfg);
    let fan = build_sigma_pi(&pi_prime).unwrap();
    assert_eq!(fan.maximal_cones().len(), 10);
    assert_eq!(fan.lineality(), &[ivec(&[0, 1, 1])]);
    assert!(fan.is_valid());
    assert!(fan.is_complete());
}

#[test]
fn phi_values_over_sigma_pi_cones() {
    // the multiset of limit values over the maximal cones of the fan for
    // pi': 2·2B, 2·3B, 4B+34, 34+45, 4A+45, 2·5A, 2·6A, 1A+16, 12+16, 12+1B
    let cfg = fano();
    let pi_prime = fixtures::fano_pi_prime(&cfg);
    let fan = build_sigma_pi(&pi_prime).unwrap();
    let label = |name: &str| -> Vec<usize> {
        let mut idx: Vec<usize> = name
            .chars()
            .map(|ch| {
                (0..cfg.len())
                    .find(|&i| cfg.label(i) == ch.to_string())
                    .expect("known label")
            })
            .collect();
        idx.sort();
        idx
    };
    let mut expected: Vec<Vec<(Vec<usize>, i64)>> = vec![
        vec![(label("2B"), 2)],
        vec![(label("3B"), 2)],
        vec![(label("4B"), 1), (label("34"), 1)],
        vec![(label("34"), 1), (label("45"), 1)],
        vec![(label("4A"), 1), (label("45"), 1)],
        vec![(label("5A"), 2)],
        vec![(label("6A"), 2)],
        vec![(label("1A"), 1), (label("16"), 1)],
        vec![(label("12"), 1), (label("16"), 1)],
        vec![(label("12"), 1), (label("1B"), 1)],
    ];
    for terms in &mut expected {
        terms.sort();
    }
    expected.sort();
    let (_, limits) = cayley_core::orbits::sigma_pi_with_limits(&pi_prime).unwrap();
    assert_eq!(limits.len(), fan.maximal_cones().len());
    let mut got: Vec<Vec<(Vec<usize>, i64)>> = limits
        .iter()
        .map(|(v, phi)| {
            // the stored generic direction reproduces the stored value
            assert_eq!(&cayley_core::orbits::phi_value(&pi_prime, v).unwrap(), phi);
            let mut terms: Vec<(Vec<usize>, i64)> = phi
                .terms()
                .iter()
                .map(|(k, m)| (k.clone(), i64::try_from(m).unwrap()))
                .collect();
            terms.sort();
            terms
        })
        .collect();
    got.sort();
    assert_eq!(got, expected);

    // for pi the six values collapse as 2B+6B, 3B+5B, 2A+6A, 3A+5A, 12+16, 34+45
    let pi = fixtures::fano_pi(&cfg);
    let fan = build_sigma_pi(&pi).unwrap();
    let mut expected: Vec<Vec<(Vec<usize>, i64)>> = vec![
        vec![(label("2B"), 1), (label("6B"), 1)],
        vec![(label("3B"), 1), (label("5B"), 1)],
        vec![(label("2A"), 1), (label("6A"), 1)],
        vec![(label("3A"), 1), (label("5A"), 1)],
        vec![(label("12"), 1), (label("16"), 1)],
        vec![(label("34"), 1), (label("45"), 1)],
    ];
    for terms in &mut expected {
        terms.sort();
    }
    expected.sort();
    let (fan2, limits) = cayley_core::orbits::sigma_pi_with_limits(&pi).unwrap();
    assert_eq!(&fan2, &fan);
    let mut got: Vec<Vec<(Vec<usize>, i64)>> = limits
        .iter()
        .map(|(_, phi)| {
            let mut terms: Vec<(Vec<usize>, i64)> = phi
                .terms()
                .iter()
                .map(|(k, m)| (k.clone(), i64::try_from(m).unwrap()))
                .collect();
            terms.sort();
            terms
        })
        .collect();
    got.sort();
    assert_eq!(got, expected);
}

#[test]
fn chow_polytope_of_pi_prime() {
    let cfg = fano();
    let pi_prime = fixtures::fano_pi_prime(&cfg);
    let poly = chow_polytope(&pi_prime).unwrap();
    let mut expect: Vec<Vec<Int>> = [
        [2i64, 2, -2],
        [0, 2, -2],
        [3, 1, -1],
        [3, 0, 0],
        [2, -1, 1],
        [0, -2, 2],
        [-2, -2, 2],
        [-3, -1, 1],
        [-3, 0, 0],
        [-2, 1, -1],
    ]
    .iter()
    .map(|p| ivec(p))
    .collect();
    expect.sort();
    assert_eq!(poly.vertices(), expect.as_slice());
    // one vertex per maximal cone, and the normal fan is the orbit fan
    let fan = build_sigma_pi(&pi_prime).unwrap();
    assert_eq!(poly.vertices().len(), fan.maximal_cones().len());
    let normal = normal_fan_of_polytope(&poly).unwrap();
    assert_eq!(normal, fan);
}

#[test]
fn chow_polytope_of_torus_fixed_line() {
    // a length-1 structure on an edge: the Chow weight is a single point
    let cfg = Arc::new(PointConfiguration::from_i64(&[&[0, 0], &[1, 2]]).unwrap());
    let values = IntMatrix::from_i64(&[&[1, 0], &[0, 1]]);
    let pi = cayley_core::cayley::CayleyStructure::new(
        cayley_core::polytope::Face::full(&cfg),
        values,
    )
    .unwrap();
    let poly = chow_polytope(&pi).unwrap();
    assert_eq!(poly.vertices(), &[ivec(&[1, 2])], "mu of the edge");
}

#[test]
fn p3_fans() {
    let cfg = Arc::new(fixtures::p3_configuration());
    let pi = fixtures::p3_pi(&cfg);
    let sigma = build_sigma_pi(&pi).unwrap();
    assert_eq!(sigma.maximal_cones().len(), 6);
    assert_eq!(sigma.lineality_dim(), 1, "annihilator of the simplex span");
    assert!(sigma.is_valid() && sigma.is_complete());
    assert_eq!(sigma.rays().len(), 8, "rays ±e_i* modulo the lineality");
    let matroid = conic_matroid_polytope(&pi).unwrap();
    // hull of e_i + e_j + e_k over distinct triples: 4 vertices
    assert_eq!(matroid.vertices().len(), 4);
    let prime = normal_fan_of_polytope(&matroid).unwrap();
    assert_eq!(prime.maximal_cones().len(), 4);
    assert_eq!(prime.rays().len(), 4, "rays -e_i*");
    let refined = common_refinement(&sigma, &prime).unwrap();
    assert_eq!(refined.maximal_cones().len(), 12);
    assert!(refined.is_valid() && refined.is_complete());
    let hilbert = conic_hilbert_fan(&pi).unwrap();
    assert_eq!(hilbert, refined);
    // each sigma cone splits in two
    for c in sigma.maximal_cones() {
        let children = refined
            .maximal_cones()
            .iter()
            .filter(|r| r.rays().iter().all(|ray| c.contains(ray)))
            .count();
        assert_eq!(children, 2);
    }
}

#[test]
fn conic_matroid_polytopes_fano() {
    let cfg = fano();
    let pi = fixtures::fano_pi(&cfg);
    let poly = conic_matroid_polytope(&pi).unwrap();
    let mut expect: Vec<Vec<Int>> = [
        [2i64, 0, 0],
        [-2, 0, 0],
        [1, 0, 1],
        [1, 0, -1],
        [-1, 0, 1],
        [-1, 0, -1],
    ]
    .iter()
    .map(|p| ivec(p))
    .collect();
    expect.sort();
    assert_eq!(poly.vertices(), expect.as_slice());

    // the hexagon for pi': vertices (±2,0,0), (±2,±1,∓1), (±1,∓1,±1);
    // e.g. (2,1,-1) = (1,1,0) + (1,0,0) + (0,0,-1), a sum over the three
    // distinct fibers of u_2 + u_3
    let pi_prime = fixtures::fano_pi_prime(&cfg);
    let poly = conic_matroid_polytope(&pi_prime).unwrap();
    let mut expect: Vec<Vec<Int>> = [
        [2i64, 0, 0],
        [-2, 0, 0],
        [-1, 1, -1],
        [-2, -1, 1],
        [2, 1, -1],
        [1, -1, 1],
    ]
    .iter()
    .map(|p| ivec(p))
    .collect();
    expect.sort();
    assert_eq!(poly.vertices(), expect.as_slice());
}

#[test]
fn conic_hilbert_fans_fano() {
    let cfg = fano();
    // for both named structures the refinement is the cycle fan itself
    for pi in [fixtures::fano_pi(&cfg), fixtures::fano_pi_prime(&cfg)] {
        let sigma = build_sigma_pi(&pi).unwrap();
        let hilbert = conic_hilbert_fan(&pi).unwrap();
        assert_eq!(hilbert, sigma);
        // refinement property: every refined cone sits inside a cycle cone
        for c in hilbert.maximal_cones() {
            assert!(sigma.maximal_cones().iter().any(|s| {
                c.rays().iter().all(|r| s.contains(r))
                    && c.lineality().iter().all(|l| s.contains(l))
            }));
        }
    }
    // the matroid fan for pi is exactly the cycle fan
    let pi = fixtures::fano_pi(&cfg);
    let matroid = conic_matroid_polytope(&pi).unwrap();
    let prime = normal_fan_of_polytope(&matroid).unwrap();
    assert_eq!(prime, build_sigma_pi(&pi).unwrap());
    // for pi' the matroid fan is a strict coarsening
    let pi_prime = fixtures::fano_pi_prime(&cfg);
    let matroid = conic_matroid_polytope(&pi_prime).unwrap();
    let prime = normal_fan_of_polytope(&matroid).unwrap();
    assert!(prime.maximal_cones().len() < build_sigma_pi(&pi_prime).unwrap().maximal_cones().len());
}

#[test]
fn conics_reject_wrong_degree() {
    let cfg = Arc::new(PointConfiguration::from_i64(&[&[0], &[1]]).unwrap());
    let values = IntMatrix::from_i64(&[&[1, 0], &[0, 1]]);
    let line = cayley_core::cayley::CayleyStructure::new(
        cayley_core::polytope::Face::full(&cfg),
        values,
    )
    .unwrap();
    assert!(conic_matroid_polytope(&line).is_err());
    assert!(conic_hilbert_fan(&line).is_err());
}
