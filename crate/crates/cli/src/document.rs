//! Input parsing and deterministic JSON output documents. All integers
//! and rationals travel as decimal strings; maps are ordered, so repeated
//! runs produce byte-identical documents.

use crate::AppError;
use cayley_core::cayley::{enumerate_cayley_structures, CayleyStructure};
use cayley_core::fan::{normal_fan_of_polytope, Fan};
use cayley_core::matrix::{Int, IntMatrix, Rat};
use cayley_core::oracle;
use cayley_core::orbits::{self, TorusTranslate};
use cayley_core::order::hilbert_census;
use cayley_core::polytope::{enumerate_faces, Face, LatticePolytope, PointConfiguration};
use serde_json::{json, Map, Value};
use std::path::Path;
use std::sync::Arc;

pub const FORMAT_VERSION: &str = "1";

fn int_str(x: &Int) -> Value {
    Value::String(x.to_string())
}

fn rat_str(x: &Rat) -> Value {
    if x.denom() == &Int::from(1) {
        Value::String(x.numer().to_string())
    } else {
        Value::String(format!("{}/{}", x.numer(), x.denom()))
    }
}

fn vec_str(v: &[Int]) -> Value {
    Value::Array(v.iter().map(int_str).collect())
}

fn matrix_rows(m: &IntMatrix) -> Value {
    Value::Array((0..m.rows()).map(|i| vec_str(m.row(i))).collect())
}

fn parse_int_entry(v: &Value) -> Result<Int, AppError> {
    match v {
        Value::Number(n) => n
            .as_i64()
            .map(Int::from)
            .ok_or_else(|| AppError::Malformed(format!("non-integer number {n}"))),
        Value::String(s) => s
            .trim()
            .parse::<Int>()
            .map_err(|e| AppError::Malformed(format!("integer {s:?}: {e}"))),
        other => Err(AppError::Malformed(format!("expected integer, got {other}"))),
    }
}

/// Parse an input configuration document.
pub fn parse_configuration(text: &str) -> Result<Arc<PointConfiguration>, AppError> {
    let value: Value =
        serde_json::from_str(text).map_err(|e| AppError::Malformed(e.to_string()))?;
    let obj = value
        .as_object()
        .ok_or_else(|| AppError::Malformed("top level must be an object".into()))?;
    match obj.get("format_version") {
        Some(Value::String(v)) if v == FORMAT_VERSION => {}
        Some(other) => {
            return Err(AppError::Malformed(format!(
                "unsupported format_version {other}, expected \"{FORMAT_VERSION}\""
            )))
        }
        None => return Err(AppError::Malformed("missing format_version field".into())),
    }
    let points_val = obj
        .get("points")
        .and_then(Value::as_array)
        .ok_or_else(|| AppError::Malformed("missing points array".into()))?;
    let mut points = Vec::new();
    for (i, row) in points_val.iter().enumerate() {
        let row = row
            .as_array()
            .ok_or_else(|| AppError::Malformed(format!("points[{i}] is not an array")))?;
        let p: Result<Vec<Int>, AppError> = row.iter().map(parse_int_entry).collect();
        points.push(p?);
    }
    let cfg = match obj.get("labels") {
        None => PointConfiguration::new(points),
        Some(Value::Array(ls)) => {
            let labels: Result<Vec<String>, AppError> = ls
                .iter()
                .map(|l| {
                    l.as_str()
                        .map(str::to_string)
                        .ok_or_else(|| AppError::Malformed("labels must be strings".into()))
                })
                .collect();
            PointConfiguration::with_labels(points, labels?)
        }
        Some(other) => {
            return Err(AppError::Malformed(format!("labels must be an array, got {other}")))
        }
    };
    cfg.map(Arc::new).map_err(|e| AppError::Malformed(e.to_string()))
}

fn header(command: &str, extra: &[(&str, Value)]) -> Map<String, Value> {
    let mut m = Map::new();
    m.insert("format_version".into(), Value::String(FORMAT_VERSION.into()));
    m.insert("command".into(), Value::String(command.into()));
    for (k, v) in extra {
        m.insert((*k).into(), v.clone());
    }
    m
}

pub fn write_output(doc: &Value, output: Option<&Path>) -> Result<(), AppError> {
    let text = serde_json::to_string_pretty(doc).expect("serializable document");
    match output {
        None => {
            println!("{text}");
            Ok(())
        }
        Some(path) => std::fs::write(path, text + "\n")
            .map_err(|e| AppError::Domain(format!("{}: {e}", path.display()))),
    }
}

fn face_value(face: &Face) -> Value {
    let cfg = face.config();
    json!({
        "indices": face.indices(),
        "labels": face.indices().iter().map(|&i| cfg.label(i)).collect::<Vec<_>>(),
        "dim": face.dim(),
    })
}

pub fn faces_document(cfg: &Arc<PointConfiguration>) -> Value {
    let faces = enumerate_faces(cfg);
    let mut doc = header("faces", &[]);
    doc.insert(
        "points".into(),
        Value::Array(cfg.points().iter().map(|p| vec_str(p)).collect()),
    );
    doc.insert("faces".into(), Value::Array(faces.iter().map(face_value).collect()));
    doc.insert("count".into(), json!(faces.len()));
    Value::Object(doc)
}

/// Deterministic list of all structures of the degree across all faces,
/// in face order then canonical order; this ordering defines the indices
/// accepted by `--structure`.
pub fn all_structures(cfg: &Arc<PointConfiguration>, d: &Int) -> Vec<CayleyStructure> {
    let mut out = Vec::new();
    for face in enumerate_faces(cfg) {
        out.extend(enumerate_cayley_structures(&face, d));
    }
    out
}

fn structure_value(index: usize, s: &CayleyStructure) -> Value {
    let classification = if !s.is_primitive() {
        "imprimitive"
    } else if s.is_cuspidal().expect("primitive") {
        "cuspidal"
    } else if s.is_nodal().expect("primitive") {
        "nodal"
    } else {
        "smooth"
    };
    json!({
        "index": index,
        "hash": s.class_hash(),
        "face": face_value(s.face()),
        "degree": int_str(s.degree()),
        "length": s.length(),
        "values": matrix_rows(s.values()),
        "classification": classification,
    })
}

pub fn enumerate_document(cfg: &Arc<PointConfiguration>, d: Int) -> Result<Value, AppError> {
    let all = all_structures(cfg, &d);
    let mut doc = header("enumerate", &[("degree", int_str(&d))]);
    doc.insert(
        "structures".into(),
        Value::Array(all.iter().enumerate().map(|(i, s)| structure_value(i, s)).collect()),
    );
    doc.insert("count".into(), json!(all.len()));
    Ok(Value::Object(doc))
}

pub fn census_document(cfg: &Arc<PointConfiguration>, d: Int) -> Result<Value, AppError> {
    let census = hilbert_census(cfg, &d);
    let mut doc = header("census", &[("degree", int_str(&d))]);
    let comps: Vec<Value> = census
        .iter()
        .map(|e| {
            json!({
                "hash": e.structure.class_hash(),
                "face": face_value(e.structure.face()),
                "length": e.structure.length(),
                "face_dim": e.face_dim,
                "component_dim": e.component_dim,
                "values": matrix_rows(e.structure.values()),
            })
        })
        .collect();
    doc.insert("components".into(), Value::Array(comps));
    doc.insert("count".into(), json!(census.len()));
    Ok(Value::Object(doc))
}

/// Resolve a `--structure` selector against the deterministic enumeration.
pub fn select_structure(
    cfg: &Arc<PointConfiguration>,
    d: Int,
    selector: &str,
) -> Result<IndexedStructure, AppError> {
    let all = all_structures(cfg, &d);
    if let Ok(idx) = selector.parse::<usize>() {
        return all
            .get(idx)
            .cloned()
            .map(|s| IndexedStructure { index: idx, structure: s })
            .ok_or_else(|| AppError::Domain(format!("index {idx} out of range ({} classes)", all.len())));
    }
    let matches: Vec<(usize, &CayleyStructure)> = all
        .iter()
        .enumerate()
        .filter(|(_, s)| s.class_hash().starts_with(selector))
        .collect();
    match matches.len() {
        0 => Err(AppError::Domain(format!("no structure with hash {selector:?}"))),
        1 => Ok(IndexedStructure { index: matches[0].0, structure: matches[0].1.clone() }),
        n => Err(AppError::Domain(format!("hash prefix {selector:?} is ambiguous ({n} matches)"))),
    }
}

/// A structure together with its position in the `enumerate` ordering.
pub struct IndexedStructure {
    pub index: usize,
    pub structure: CayleyStructure,
}

impl std::ops::Deref for IndexedStructure {
    type Target = CayleyStructure;
    fn deref(&self) -> &CayleyStructure {
        &self.structure
    }
}

pub fn classify_document(sel: &IndexedStructure) -> Result<Value, AppError> {
    let pi = &sel.structure;
    let mut doc = header("classify", &[]);
    doc.insert("structure".into(), structure_value(sel.index, pi));
    let primitive = pi.is_primitive();
    doc.insert("primitive".into(), json!(primitive));
    if primitive {
        doc.insert("cuspidal".into(), json!(pi.is_cuspidal()?));
        doc.insert("nodal".into(), json!(pi.is_nodal()?));
        doc.insert("smooth".into(), json!(pi.is_smooth()?));
    } else {
        let (red, mult) = pi.reduction();
        doc.insert("reduction_degree".into(), int_str(red.degree()));
        doc.insert("multiplicity".into(), int_str(&mult));
    }
    Ok(Value::Object(doc))
}

pub fn limit_document(
    pi: &CayleyStructure,
    v: &[Int],
    seed: Option<u64>,
) -> Result<Value, AppError> {
    let forms = seed.map(|s| oracle::random_forms(pi.length(), s));
    let lim = orbits::limit_cycle(pi, v, forms.as_deref())?;
    let mut doc = header("limit", &[("v", vec_str(v))]);
    if let Some(s) = seed {
        doc.insert("seed".into(), json!(s));
    }
    doc.insert("generic".into(), json!(lim.generic));
    doc.insert(
        "interior".into(),
        match &lim.interior {
            None => Value::Null,
            Some(t) => json!({
                "multiplicity": int_str(&t.multiplicity),
                "degree": int_str(t.structure.degree()),
                "length": t.structure.length(),
                "values": matrix_rows(t.structure.values()),
            }),
        },
    );
    let boundary: Vec<Value> = lim
        .boundary
        .iter()
        .map(|b| {
            json!({
                "face": face_value(&b.face),
                "multiplicity": int_str(&b.multiplicity),
                "degree": int_str(b.structure.degree()),
                "values": matrix_rows(b.structure.values()),
                "translate": match &b.translate {
                    TorusTranslate::Identity => Value::String("identity".into()),
                    TorusTranslate::Factored(f) => Value::Array(
                        f.factors
                            .iter()
                            .map(|(scalar, cochar)| {
                                json!({
                                    "scalar": rat_str(scalar),
                                    "cocharacter": Value::Array(
                                        cochar.iter().map(rat_str).collect()
                                    ),
                                })
                            })
                            .collect(),
                    ),
                },
            })
        })
        .collect();
    doc.insert("boundary".into(), Value::Array(boundary));
    doc.insert("total_degree".into(), int_str(&lim.total_degree()));
    Ok(Value::Object(doc))
}

fn fan_value(fan: &Fan) -> Value {
    json!({
        "ambient_rank": fan.ambient(),
        "lineality": Value::Array(fan.lineality().iter().map(|l| vec_str(l)).collect()),
        "maximal_cones": Value::Array(
            fan.maximal_cones()
                .iter()
                .map(|c| {
                    json!({
                        "rays": Value::Array(c.rays().iter().map(|r| vec_str(r)).collect()),
                    })
                })
                .collect(),
        ),
        "rays": Value::Array(fan.rays().iter().map(|r| vec_str(r)).collect()),
    })
}

pub fn fan_document(pi: &CayleyStructure) -> Result<(Value, Fan), AppError> {
    let (fan, limits) = orbits::sigma_pi_with_limits(pi)?;
    let mut doc = header("fan", &[]);
    doc.insert("structure_hash".into(), json!(pi.class_hash()));
    let mut fan_val = fan_value(&fan);
    // attach the generic limit value per maximal cone
    if let Value::Object(ref mut m) = fan_val {
        let cones = m.get_mut("maximal_cones").and_then(Value::as_array_mut).unwrap();
        for (cone_val, (sample, cycle)) in cones.iter_mut().zip(&limits) {
            if let Value::Object(c) = cone_val {
                c.insert("generic_direction".into(), vec_str(sample));
                c.insert(
                    "limit".into(),
                    Value::Array(
                        cycle
                            .terms()
                            .iter()
                            .map(|(edge, mult)| {
                                json!({"edge": edge, "multiplicity": int_str(mult)})
                            })
                            .collect(),
                    ),
                );
            }
        }
    }
    doc.insert("fan".into(), fan_val);
    Ok((Value::Object(doc), fan))
}

fn polytope_value(p: &LatticePolytope) -> Value {
    json!({
        "ambient_rank": p.ambient_rank(),
        "dim": p.dim(),
        "vertices": Value::Array(p.vertices().iter().map(|v| vec_str(v)).collect()),
        "facets": Value::Array(
            p.facets()
                .iter()
                .map(|(a, c)| json!({"normal": vec_str(a), "offset": int_str(c)}))
                .collect(),
        ),
    })
}

pub fn chow_document(pi: &CayleyStructure) -> Result<(Value, LatticePolytope), AppError> {
    let poly = orbits::chow_polytope(pi)?;
    let mut doc = header("chow", &[]);
    doc.insert("structure_hash".into(), json!(pi.class_hash()));
    doc.insert("chow_polytope".into(), polytope_value(&poly));
    Ok((Value::Object(doc), poly))
}

pub fn conics_document(pi: &CayleyStructure) -> Result<(Value, LatticePolytope), AppError> {
    let matroid = orbits::conic_matroid_polytope(pi)?;
    let hilbert = orbits::conic_hilbert_fan(pi)?;
    let cycle_fan = orbits::build_sigma_pi(pi)?;
    let mut doc = header("conics", &[]);
    doc.insert("structure_hash".into(), json!(pi.class_hash()));
    doc.insert("matroid_polytope".into(), polytope_value(&matroid));
    doc.insert("matroid_normal_fan".into(), fan_value(&normal_fan_of_polytope(&matroid)?));
    doc.insert("hilbert_fan".into(), fan_value(&hilbert));
    doc.insert("equals_cycle_fan".into(), json!(hilbert == cycle_fan));
    Ok((Value::Object(doc), matroid))
}

pub fn verify_document(pi: &CayleyStructure, seed: u64) -> Result<Value, AppError> {
    let primitive = pi.is_primitive();
    let t0 = Rat::new(Int::from(2), Int::from(3));
    let mut doc = header("verify", &[]);
    doc.insert("structure_hash".into(), json!(pi.class_hash()));
    doc.insert("primitive".into(), json!(primitive));
    let mut seeds = Vec::new();
    let mut all_agree = true;
    for s in seed..seed + 3 {
        let forms = oracle::random_forms(pi.length(), s);
        let curve = oracle::build_parametrization(pi, &forms)?;
        let v = oracle::oracle_verdicts(&curve, &t0)?;
        let image_degree = pi.degree() / Int::from(v.fiber_degree as i64);
        let agrees = if primitive {
            v.fiber_degree == 1
                && v.cusp == Some(pi.is_cuspidal()?)
                && v.node == Some(pi.is_nodal()?)
        } else {
            v.fiber_degree > 1
        };
        all_agree &= agrees;
        seeds.push(json!({
            "seed": s,
            "map_degree": v.fiber_degree,
            "image_degree": int_str(&image_degree),
            "cusp": v.cusp,
            "node": v.node,
            "agrees": agrees,
        }));
    }
    doc.insert("runs".into(), Value::Array(seeds));
    doc.insert("all_agree".into(), json!(all_agree));
    if primitive {
        doc.insert("cuspidal".into(), json!(pi.is_cuspidal()?));
        doc.insert("nodal".into(), json!(pi.is_nodal()?));
        doc.insert("smooth".into(), json!(pi.is_smooth()?));
    }
    Ok(Value::Object(doc))
}
