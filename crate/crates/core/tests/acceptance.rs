//! Frozen acceptance checks, one test per criterion. Every tolerance is
//! exact equality; each test prints a single summary line.

use cayley_core::cayley::{
    enumerate_cayley_structures, enumerate_cayley_structures_bounded, CayleyStructure,
};
use cayley_core::fan::{common_refinement, normal_fan_of_polytope};
use cayley_core::fixtures;
use cayley_core::lattice::{exceptional_lattices, span_of_differences};
use cayley_core::matrix::{int, ivec, Int, IntMatrix};
use cayley_core::oracle;
use cayley_core::orbits::{
    build_sigma_pi, chow_polytope, conic_hilbert_fan, conic_matroid_polytope, limit_cycle,
    TorusTranslate,
};
use cayley_core::order::{hilbert_census, is_leq};
use cayley_core::polytope::{enumerate_faces, Face, PointConfiguration};
use cayley_core::Error;
use std::collections::BTreeMap;
use std::sync::Arc;
use std::time::Instant;

fn fano() -> Arc<PointConfiguration> {
    Arc::new(fixtures::fano_configuration())
}

/// The structure with image the given rows, on the rows themselves.
fn inclusion(points: &[&[i64]]) -> CayleyStructure {
    let cfg = Arc::new(PointConfiguration::from_i64(points).unwrap());
    let values = IntMatrix::from_rows(cfg.points().to_vec(), cfg.ambient_rank());
    CayleyStructure::new(Face::full(&cfg), values).unwrap()
}

/// The nine length-one degree-two formulas listed for the singular Fano
/// threefold: (1 + a·u, 1 - a·u) for a in the three displayed families.
fn listed_fano_structures(cfg: &Arc<PointConfiguration>) -> Vec<CayleyStructure> {
    let mut out = Vec::new();
    for c in [-1i64, 0, 1] {
        for a in [[1i64, 0, c], [0, 1, c], [1, -1, c]] {
            let a = ivec(&a);
            let rows: Vec<Vec<Int>> = cfg
                .points()
                .iter()
                .map(|p| {
                    let g = Int::from(1) + cayley_core::matrix::vdot(&a, p);
                    vec![g.clone(), Int::from(2) - g]
                })
                .collect();
            let values = IntMatrix::from_rows(rows, 2);
            out.push(CayleyStructure::new(Face::full(cfg), values).unwrap());
        }
    }
    out
}

#[test]
fn criterion_01_fano_census() {
    let start = Instant::now();
    let cfg = fano();
    let census = hilbert_census(&cfg, &int(2));
    // the nine listed formulas appear, each with length 1 on the full face
    // and component dimension 2
    let listed = listed_fano_structures(&cfg);
    for (k, s) in listed.iter().enumerate() {
        let hit = census
            .iter()
            .find(|e| e.structure.equivalent_to(&s.canonicalized()))
            .unwrap_or_else(|| panic!("listed structure {k} missing from the census"));
        assert_eq!(hit.structure.length(), 1);
        assert_eq!(hit.face_dim, 3);
        assert_eq!(hit.component_dim, 2);
    }
    // one length-five class per two-dimensional face, of dimension 5
    let facet_entries: Vec<_> = census.iter().filter(|e| e.face_dim == 2).collect();
    assert_eq!(facet_entries.len(), 12);
    for e in &facet_entries {
        assert_eq!(e.structure.length(), 5);
        assert_eq!(e.component_dim, 5);
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs() < 30, "census took {elapsed:?}");
    println!(
        "criterion 1: census has {} entries in {:?} (frozen expectation: 21)",
        census.len(),
        elapsed
    );
    // Frozen count. The enumeration yields one more length-one class than
    // the recorded 21: u -> (1 + u_3, 1 - u_3), which is basepoint-free,
    // concise, primitive, smooth and maximal (its image equals that of
    // u -> (1 + u_2, 1 - u_2)), so the computed census has 22 entries.
    assert_eq!(
        census.len(),
        21,
        "expected the frozen count 21; the enumeration also finds the \
         vertical-functional class u -> (1 + u_3, 1 - u_3), giving 22"
    );
}

#[test]
fn criterion_02_simplex_uniqueness() {
    for ell in 1..=3usize {
        for d in 2..=3i64 {
            let cfg = Arc::new(fixtures::unimodular_simplex(ell));
            let diag = fixtures::simplex_maximal_structure(&cfg, d as usize).canonicalized();
            // every class on every face lies below the diagonal structure,
            // so the diagonal is the unique maximal class
            let mut seen_diag = false;
            for face in enumerate_faces(&cfg) {
                for s in enumerate_cayley_structures(&face, &int(d)) {
                    assert!(
                        is_leq(&s, &diag),
                        "class not below the diagonal (ell={ell}, d={d})"
                    );
                    if s.equivalent_to(&diag) {
                        seen_diag = true;
                    }
                }
            }
            assert!(seen_diag, "diagonal structure enumerated (ell={ell}, d={d})");
        }
    }
    println!("criterion 2: unique maximal structure on simplices, ell in 1..=3, d in 2..=3");
}

/// Marked-node witness straight from the definition.
fn marked_node_witness(image: &[Vec<Int>]) -> bool {
    let ell1 = image[0].len();
    for i in 0..ell1 {
        for j in 0..i {
            for v in image {
                if v[i] == int(0)
                    && v[j] == int(0)
                    && image.iter().filter(|w| *w != v).all(|w| w[i] > int(0) && w[j] > int(0))
                {
                    return true;
                }
            }
        }
    }
    false
}

#[test]
fn criterion_03_fig4_classification() {
    // four degree-3 length-2 image sets: imprimitive, cuspidal, nodal via
    // a marked witness, nodal via the lattice route
    let imprimitive = inclusion(&[&[0, 0, 3], &[1, 2, 0]]);
    assert!(!imprimitive.is_primitive());

    let cuspidal = inclusion(&[&[0, 0, 3], &[1, 0, 2], &[1, 2, 0]]);
    assert!(cuspidal.is_primitive());
    assert!(cuspidal.is_cuspidal().unwrap());
    assert!(!cuspidal.is_nodal().unwrap());

    let nodal1 = inclusion(&[&[0, 0, 3], &[2, 1, 0], &[1, 2, 0]]);
    assert!(nodal1.is_primitive());
    assert!(nodal1.is_nodal().unwrap());
    assert!(marked_node_witness(&nodal1.image()), "case (1): marked witness");
    assert!(!nodal1.is_cuspidal().unwrap());

    let nodal2 = inclusion(&[&[0, 0, 3], &[3, 0, 0], &[0, 3, 0]]);
    assert!(nodal2.is_primitive());
    assert!(nodal2.is_nodal().unwrap());
    assert!(!marked_node_witness(&nodal2.image()), "case (2): no marked witness");
    assert!(!nodal2.is_cuspidal().unwrap());
    println!("criterion 3: imprimitive / cuspidal / nodal(1) / nodal(2) as displayed");
}

#[test]
fn criterion_04_table1_closure() {
    // degree-two three-point image sets realizing the five exceptional
    // lattices
    let realizations: Vec<Vec<&[i64]>> = vec![
        vec![&[1, 1, 0, 0, 0, 0], &[0, 0, 1, 1, 0, 0], &[0, 0, 0, 0, 1, 1]],
        vec![&[2, 0, 0, 0, 0], &[0, 1, 1, 0, 0], &[0, 0, 0, 1, 1]],
        vec![&[2, 0, 0, 0], &[0, 2, 0, 0], &[0, 0, 1, 1]],
        vec![&[2, 0, 0], &[0, 2, 0], &[0, 0, 2]],
        vec![&[2, 0, 0], &[0, 2, 0], &[0, 1, 1]],
    ];
    let lattices = exceptional_lattices();
    for (k, rows) in realizations.iter().enumerate() {
        let pi = inclusion(rows);
        let image_lattice = span_of_differences(&pi.image());
        assert!(
            image_lattice.equal_up_to_coordinate_permutation(&lattices[k]),
            "realization {k} generates exceptional lattice {k}"
        );
        assert!(pi.is_primitive());
        assert!(pi.is_smooth().unwrap(), "realization {k} is smooth");
        for seed in [11u64, 12, 13] {
            let forms = oracle::random_forms(pi.length(), seed);
            let curve = oracle::build_parametrization(&pi, &forms).unwrap();
            let k_deg = oracle::map_degree(&curve, &cayley_core::Rat::new(int(2), int(3))).unwrap();
            assert_eq!(k_deg, 1, "degree-two image for realization {k}, seed {seed}");
            assert!(!oracle::has_cusp(&curve).unwrap());
            assert!(!oracle::has_node(&curve).unwrap());
        }
    }
    println!("criterion 4: five exceptional-lattice realizations smooth, oracle-confirmed");
}

#[test]
fn criterion_05_limit_cycle() {
    let cfg = fano();
    let pi = fixtures::fano_pi(&cfg);
    let forms = oracle::random_forms(1, 3);
    let lim = limit_cycle(&pi, &ivec(&[-1, -1, -1]), Some(&forms)).unwrap();
    assert!(lim.interior.is_none());
    assert_eq!(lim.boundary.len(), 2, "exactly two boundary components");
    let faces = enumerate_faces(&cfg);
    let face_12a = faces
        .iter()
        .find(|f| {
            f.len() == 3
                && [[1i64, 0, 0], [1, 1, 0], [0, 0, 1]]
                    .iter()
                    .all(|p| f.points().contains(&ivec(p)))
        })
        .unwrap();
    let face_16a = faces
        .iter()
        .find(|f| {
            f.len() == 3
                && [[1i64, 0, 0], [0, -1, 0], [0, 0, 1]]
                    .iter()
                    .all(|p| f.points().contains(&ivec(p)))
        })
        .unwrap();
    let mut seen = [false, false];
    for term in &lim.boundary {
        assert_eq!(term.multiplicity, int(1));
        assert!(
            matches!(term.translate, TorusTranslate::Identity),
            "length-one translates are the identity"
        );
        assert_eq!(term.structure.length(), 1);
        assert_eq!(term.structure.degree(), &int(1));
        // the displayed structures, up to the e0/e1 swap: the point set
        // splits as one point against the other two
        let vals = term.structure.values();
        let lone: Vec<usize> = (0..vals.rows())
            .filter(|&r| (0..vals.rows()).filter(|&s| vals.row(s) == vals.row(r)).count() == 1)
            .collect();
        assert_eq!(lone.len(), 1);
        let lone_point = term.face.point(lone[0]).clone();
        if &term.face == face_12a {
            assert_eq!(lone_point, ivec(&[1, 1, 0]));
            seen[0] = true;
        } else if &term.face == face_16a {
            assert_eq!(lone_point, ivec(&[0, -1, 0]));
            seen[1] = true;
        } else {
            panic!("boundary term on an unexpected face");
        }
    }
    assert!(seen[0] && seen[1], "both stated two-faces appear");
    println!("criterion 5: limit under (-1,-1,-1) is two multiplicity-one lines, t = identity");
}

/// Expected maximal cone from quotient generators (signs times standard
/// basis vectors), sharing the fan's lineality.
fn quotient_cone(ambient: usize, gens: &[(usize, i64)], lineality: &[Vec<Int>]) -> cayley_core::cone::Cone {
    let gen_vecs: Vec<Vec<Int>> = gens
        .iter()
        .map(|&(i, sign)| {
            let mut v = vec![Int::from(0); ambient];
            v[i] = Int::from(sign);
            v
        })
        .collect();
    cayley_core::cone::Cone::from_v(ambient, &gen_vecs, lineality)
}

#[test]
fn criterion_06_fans() {
    let cfg = fano();
    // the fan for pi: 6 maximal cones, lineality (0,1,0), projected rays
    let pi = fixtures::fano_pi(&cfg);
    let fan = build_sigma_pi(&pi).unwrap();
    assert_eq!(fan.maximal_cones().len(), 6);
    assert_eq!(fan.lineality(), &[ivec(&[0, 1, 0])]);
    let proj = IntMatrix::from_i64(&[&[1, 0, 0], &[0, 0, 1]]);
    let rays = fan.project(&proj).unwrap().rays();
    let expect: Vec<Vec<Int>> =
        [[-1i64, -1], [-1, 1], [0, -1], [0, 1], [1, -1], [1, 1]].iter().map(|r| ivec(r)).collect();
    assert_eq!(rays, expect);
    // the fan for pi': 10 maximal cones, lineality (0,1,1)
    let pi_prime = fixtures::fano_pi_prime(&cfg);
    let fan_prime = build_sigma_pi(&pi_prime).unwrap();
    assert_eq!(fan_prime.maximal_cones().len(), 10);
    assert_eq!(fan_prime.lineality(), &[ivec(&[0, 1, 1])]);
    // conics in P^3
    let p3 = Arc::new(fixtures::p3_configuration());
    let pi3 = fixtures::p3_pi(&p3);
    let sigma = build_sigma_pi(&pi3).unwrap();
    assert_eq!(sigma.maximal_cones().len(), 6);
    let lin = sigma.lineality().to_vec();
    // maximal cones {e_i, e_j, -e_k, -e_l} over the three splittings
    let mut expected_cones = Vec::new();
    for (i, j, k, l) in [(0, 1, 2, 3), (0, 2, 1, 3), (0, 3, 1, 2)] {
        expected_cones.push(quotient_cone(4, &[(i, 1), (j, 1), (k, -1), (l, -1)], &lin));
        expected_cones.push(quotient_cone(4, &[(k, 1), (l, 1), (i, -1), (j, -1)], &lin));
    }
    expected_cones.sort();
    let mut got = sigma.maximal_cones().to_vec();
    got.sort();
    assert_eq!(got, expected_cones);
    let matroid = conic_matroid_polytope(&pi3).unwrap();
    let prime = normal_fan_of_polytope(&matroid).unwrap();
    assert_eq!(prime.maximal_cones().len(), 4);
    let refined = common_refinement(&sigma, &prime).unwrap();
    assert_eq!(refined.maximal_cones().len(), 12);
    // refinement cones {e_i, -e_j, -e_k}
    let mut expected_ref = Vec::new();
    for i in 0..4usize {
        for j in 0..4usize {
            for k in j + 1..4usize {
                if j == i || k == i {
                    continue;
                }
                expected_ref.push(quotient_cone(4, &[(i, 1), (j, -1), (k, -1)], &lin));
            }
        }
    }
    expected_ref.sort();
    expected_ref.dedup();
    let mut got_ref = refined.maximal_cones().to_vec();
    got_ref.sort();
    assert_eq!(got_ref, expected_ref);
    println!("criterion 6: fan shapes for pi, pi', and conics in P^3 as stated");
}

#[test]
fn criterion_07_chow_polytope() {
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
    assert_eq!(poly.vertices(), expect.as_slice(), "the ten listed vertices");
    let fan = build_sigma_pi(&pi_prime).unwrap();
    assert_eq!(normal_fan_of_polytope(&poly).unwrap(), fan, "normal fan is the orbit fan");
    println!("criterion 7: Chow polytope of pi' has the ten stated vertices, normal fan matches");
}

#[test]
fn criterion_08_matroid_polytopes() {
    let cfg = fano();
    let pi = fixtures::fano_pi(&cfg);
    let poly = conic_matroid_polytope(&pi).unwrap();
    let mut expect: Vec<Vec<Int>> =
        [[2i64, 0, 0], [-2, 0, 0], [1, 0, 1], [1, 0, -1], [-1, 0, 1], [-1, 0, -1]]
            .iter()
            .map(|p| ivec(p))
            .collect();
    expect.sort();
    assert_eq!(poly.vertices(), expect.as_slice());
    // for pi' the displayed hexagon (positions of the drawn polygon, read
    // in the (x1,x3)-projection): (±2,0,0), (±2,±1,∓1), (±1,∓1,±1)
    let pi_prime = fixtures::fano_pi_prime(&cfg);
    let poly = conic_matroid_polytope(&pi_prime).unwrap();
    let mut expect: Vec<Vec<Int>> =
        [[2i64, 0, 0], [-2, 0, 0], [2, 1, -1], [-2, -1, 1], [1, -1, 1], [-1, 1, -1]]
            .iter()
            .map(|p| ivec(p))
            .collect();
    expect.sort();
    assert_eq!(poly.vertices(), expect.as_slice());
    // the refined conic fans coincide with the cycle fans
    assert_eq!(conic_hilbert_fan(&pi).unwrap(), build_sigma_pi(&pi).unwrap());
    assert_eq!(conic_hilbert_fan(&pi_prime).unwrap(), build_sigma_pi(&pi_prime).unwrap());
    println!("criterion 8: matroid hexagons and conic fans as displayed");
}

fn splitmix(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9e3779b97f4a7c15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
    z ^ (z >> 31)
}

fn random_configuration(state: &mut u64) -> Arc<PointConfiguration> {
    loop {
        let size = 4 + (splitmix(state) % 5) as usize; // 4..=8 points
        let mut points: Vec<Vec<Int>> = Vec::new();
        while points.len() < size {
            let r = splitmix(state);
            let p = ivec(&[(r % 3) as i64, ((r >> 8) % 3) as i64, ((r >> 16) % 3) as i64]);
            if !points.contains(&p) {
                points.push(p);
            }
        }
        if let Ok(cfg) = PointConfiguration::new(points) {
            return Arc::new(cfg);
        }
    }
}

/// Majority vote of the oracle verdict triple against the combinatorial
/// prediction, escalating from three to seven seeds on any disagreement.
/// Returns false only on a persistent (majority) contradiction.
fn oracle_majority_agrees(
    image: &[Vec<Int>],
    ell: usize,
    t0: &cayley_core::Rat,
    predicted: (bool, Option<bool>, Option<bool>),
) -> bool {
    let verdict_for_seed = |seed: u64| -> (bool, Option<bool>, Option<bool>) {
        let forms = oracle::random_forms(ell, seed);
        let curve =
            oracle::build_from_image(image, &forms).expect("in-bounds parametrization");
        let v = oracle::oracle_verdicts(&curve, t0).expect("verdicts computable");
        (v.fiber_degree == 1, v.cusp, v.node)
    };
    let mut votes: Vec<(bool, Option<bool>, Option<bool>)> =
        (100..103u64).map(verdict_for_seed).collect();
    if votes.iter().any(|v| *v != predicted) {
        votes.extend((103..107u64).map(verdict_for_seed));
    }
    let majority = votes.len() / 2 + 1;
    let deg_ok = votes.iter().filter(|v| v.0 == predicted.0).count() >= majority;
    let cusp_ok = votes.iter().filter(|v| v.1 == predicted.1).count() >= majority;
    let node_ok = votes.iter().filter(|v| v.2 == predicted.2).count() >= majority;
    deg_ok && cusp_ok && node_ok
}

#[test]
fn criterion_09_oracle_equivalence() {
    let start = Instant::now();
    let t0 = cayley_core::Rat::new(int(2), int(3));
    let mut state = 0xacce55u64;
    let mut verified: BTreeMap<Vec<Vec<Int>>, ()> = BTreeMap::new();
    let mut configs = 0usize;
    while configs < 50 {
        let cfg = random_configuration(&mut state);
        configs += 1;
        for face in enumerate_faces(&cfg) {
            for d in 1..=3i64 {
                for pi in enumerate_cayley_structures_bounded(&face, &int(d), 4) {
                    // the oracle sees only the image, and every verdict is
                    // invariant under permuting the simplex coordinates, so
                    // verify once per image up to column order
                    let mut cols: Vec<Vec<Int>> = {
                        let img = pi.image();
                        (0..img[0].len()).map(|j| img.iter().map(|r| r[j].clone()).collect()).collect()
                    };
                    cols.sort();
                    let canonical: Vec<Vec<Int>> = {
                        let rows = pi.image().len();
                        (0..rows).map(|r| cols.iter().map(|c| c[r].clone()).collect()).collect()
                    };
                    if verified.contains_key(&canonical) {
                        continue;
                    }
                    verified.insert(canonical.clone(), ());
                    let primitive = pi.is_primitive();
                    let predicted = if primitive {
                        (
                            true,
                            Some(pi.is_cuspidal().unwrap()),
                            Some(pi.is_nodal().unwrap()),
                        )
                    } else {
                        (false, None, None)
                    };
                    assert!(
                        oracle_majority_agrees(&canonical, pi.length(), &t0, predicted),
                        "persistent oracle contradiction for image {canonical:?}"
                    );
                    if !primitive {
                        // the image degree equals the degree of the reduction
                        let forms = oracle::random_forms(pi.length(), 100);
                        let curve = oracle::build_from_image(&canonical, &forms).unwrap();
                        let k = oracle::map_degree(&curve, &t0).unwrap();
                        let (red, _) = pi.reduction();
                        let dred = i64::try_from(red.degree()).unwrap();
                        assert_eq!(
                            int(d) / int(k as i64),
                            int(dred),
                            "image degree equals the reduced degree"
                        );
                    }
                }
            }
        }
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs() < 600, "oracle sweep took {elapsed:?}");
    println!(
        "criterion 9: oracle agrees on {} distinct images over {configs} configurations in {elapsed:?}",
        verified.len()
    );
}

#[test]
fn criterion_10_invariant_suites() {
    // degree conservation for limit cycles over every census structure and
    // a seeded sample of directions; fan validity and completeness for
    // every fan the other checks construct
    let cfg = fano();
    let census = hilbert_census(&cfg, &int(2));
    let mut state = 0xdecade5u64;
    let mut checked_cycles = 0usize;
    let mut checked_fans = 0usize;
    for entry in &census {
        let pi = &entry.structure;
        let n = pi.face().config().ambient_rank();
        let mut dirs = vec![vec![Int::from(0); n]];
        for _ in 0..6 {
            let v: Vec<Int> = (0..n)
                .map(|_| Int::from((splitmix(&mut state) % 11) as i64 - 5))
                .collect();
            dirs.push(v);
        }
        for v in dirs {
            let lim = limit_cycle(pi, &v, None).unwrap();
            assert_eq!(&lim.total_degree(), pi.degree(), "degree conserved");
            checked_cycles += 1;
        }
        let fan = build_sigma_pi(pi).unwrap();
        assert!(fan.is_valid(), "cycle fan is a valid fan");
        assert!(fan.is_complete(), "cycle fan is complete");
        checked_fans += 1;
    }
    // the named fans of the conics-in-P^3 check
    let p3 = Arc::new(fixtures::p3_configuration());
    let pi3 = fixtures::p3_pi(&p3);
    let sigma = build_sigma_pi(&pi3).unwrap();
    let prime = normal_fan_of_polytope(&conic_matroid_polytope(&pi3).unwrap()).unwrap();
    let refined = common_refinement(&sigma, &prime).unwrap();
    for fan in [&sigma, &prime, &refined] {
        assert!(fan.is_valid() && fan.is_complete());
        checked_fans += 1;
    }
    let pi_prime = fixtures::fano_pi_prime(&cfg);
    let chow = chow_polytope(&pi_prime).unwrap();
    let chow_fan = normal_fan_of_polytope(&chow).unwrap();
    assert!(chow_fan.is_valid() && chow_fan.is_complete());
    checked_fans += 1;
    // degree conservation on the cubic panels and the
    // exceptional-lattice realizations
    for pi in [
        inclusion(&[&[0, 0, 3], &[1, 0, 2], &[1, 2, 0]]),
        inclusion(&[&[0, 0, 3], &[2, 1, 0], &[1, 2, 0]]),
        inclusion(&[&[0, 0, 3], &[3, 0, 0], &[0, 3, 0]]),
        inclusion(&[&[2, 0, 0], &[0, 2, 0], &[0, 0, 2]]),
        inclusion(&[&[2, 0, 0], &[0, 2, 0], &[0, 1, 1]]),
    ] {
        let n = pi.face().config().ambient_rank();
        for _ in 0..4 {
            let v: Vec<Int> =
                (0..n).map(|_| Int::from((splitmix(&mut state) % 9) as i64 - 4)).collect();
            let lim = limit_cycle(&pi, &v, None).unwrap();
            assert_eq!(&lim.total_degree(), pi.degree());
            checked_cycles += 1;
        }
    }
    // seeded sample matching the criterion-9 generator: degree
    // conservation across random enumerated primitive structures
    let mut gen_state = 0xacce55u64;
    for _ in 0..8 {
        let rc = random_configuration(&mut gen_state);
        for face in enumerate_faces(&rc) {
            for d in 1..=2i64 {
                for pi in enumerate_cayley_structures_bounded(&face, &int(d), 3) {
                    if !pi.is_primitive() {
                        assert!(matches!(
                            limit_cycle(&pi, &vec![Int::from(1); 3], None),
                            Err(Error::Imprimitive)
                        ));
                        continue;
                    }
                    for _ in 0..2 {
                        let v: Vec<Int> = (0..3)
                            .map(|_| Int::from((splitmix(&mut state) % 9) as i64 - 4))
                            .collect();
                        let lim = limit_cycle(&pi, &v, None).unwrap();
                        assert_eq!(&lim.total_degree(), pi.degree());
                        checked_cycles += 1;
                    }
                }
            }
        }
    }
    println!(
        "criterion 10: degree conserved on {checked_cycles} limit cycles, {checked_fans} fans valid and complete"
    );
}
