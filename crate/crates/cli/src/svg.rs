//! Deterministic SVG emission for two-dimensional fans and polytopes.
//!
//! Coordinates are scaled and rounded with integer arithmetic only; rays
//! and vertices carry their exact coordinates as labels.

use crate::AppError;
use cayley_core::fan::Fan;
use cayley_core::matrix::{rank_of_rows, Int, IntMatrix};
use cayley_core::polytope::LatticePolytope;
use num::{Signed, Zero};
use std::path::Path;

const SIZE: i64 = 420;
const CENTER: i64 = 210;
const SCALE: i64 = 150;

/// `center + num * scale / den` with three fixed decimals, via integers.
fn place(num: &Int, den: &Int, scale: i64) -> String {
    let scaled = num * Int::from(scale * 1000) / den + Int::from(CENTER * 1000);
    let v = i128::try_from(&scaled).unwrap_or(0);
    let whole = v.div_euclid(1000);
    let frac = v.rem_euclid(1000);
    format!("{whole}.{frac:03}")
}

fn svg_header() -> String {
    format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{SIZE}\" height=\"{SIZE}\" viewBox=\"0 0 {SIZE} {SIZE}\">\n<rect width=\"{SIZE}\" height=\"{SIZE}\" fill=\"white\"/>\n"
    )
}

fn write_file(path: &Path, body: String) -> Result<(), AppError> {
    let doc = format!("{}{}</svg>\n", svg_header(), body);
    std::fs::write(path, doc).map_err(|e| AppError::Domain(format!("{}: {e}", path.display())))
}

fn coord_label(v: &[Int]) -> String {
    v.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",")
}

/// Draw the rays of a fan; the fan must be two-dimensional after the
/// projection (which must kill exactly the lineality).
pub fn emit_fan(fan: &Fan, proj: Option<&IntMatrix>, path: &Path) -> Result<(), AppError> {
    let flat = match proj {
        None => {
            if fan.ambient() != 2 || fan.lineality_dim() != 0 {
                return Err(AppError::Domain(
                    "fan is not two-dimensional; supply --projection".into(),
                ));
            }
            fan.clone()
        }
        Some(m) => {
            if m.rows() != 2 {
                return Err(AppError::Domain("projection must have two rows".into()));
            }
            fan.project(m).map_err(|e| AppError::Domain(e.to_string()))?
        }
    };
    let mut body = String::new();
    let mut rays = flat.rays();
    rays.sort();
    for ray in &rays {
        let max = ray.iter().map(|x| x.abs()).max().unwrap();
        if max.is_zero() {
            continue;
        }
        let neg_y = -ray[1].clone();
        let ex = place(&ray[0], &max, SCALE);
        let ey = place(&neg_y, &max, SCALE);
        body.push_str(&format!(
            "<line x1=\"{CENTER}\" y1=\"{CENTER}\" x2=\"{ex}\" y2=\"{ey}\" stroke=\"black\" stroke-width=\"1.5\"/>\n"
        ));
        let lx = place(&ray[0], &max, SCALE + 28);
        let ly = place(&neg_y, &max, SCALE + 28);
        body.push_str(&format!(
            "<text x=\"{lx}\" y=\"{ly}\" font-size=\"11\" font-family=\"monospace\" text-anchor=\"middle\">({})</text>\n",
            coord_label(ray)
        ));
    }
    write_file(path, body)
}

/// Draw a polygon with labeled vertices; the polytope must be planar
/// after the projection.
pub fn emit_polytope(
    poly: &LatticePolytope,
    proj: Option<&IntMatrix>,
    path: &Path,
) -> Result<(), AppError> {
    let points: Result<Vec<Vec<Int>>, AppError> = poly
        .vertices()
        .iter()
        .map(|v| match proj {
            None => {
                if v.len() != 2 {
                    Err(AppError::Domain(
                        "polytope is not two-dimensional; supply --projection".into(),
                    ))
                } else {
                    Ok(v.clone())
                }
            }
            Some(m) => {
                if m.rows() != 2 {
                    Err(AppError::Domain("projection must have two rows".into()))
                } else {
                    Ok(m.mul_vec(v))
                }
            }
        })
        .collect();
    let points = points?;
    let diffs: Vec<Vec<Int>> = points
        .iter()
        .skip(1)
        .map(|p| vec![&p[0] - &points[0][0], &p[1] - &points[0][1]])
        .collect();
    if rank_of_rows(&diffs, 2) != 2 {
        return Err(AppError::Domain(
            "polytope is not two-dimensional after projection".into(),
        ));
    }
    // order vertices around the centroid by exact half-plane and
    // cross-product comparison
    let n = Int::from(points.len() as i64);
    let cx: Int = points.iter().map(|p| p[0].clone()).sum();
    let cy: Int = points.iter().map(|p| p[1].clone()).sum();
    let mut order: Vec<usize> = (0..points.len()).collect();
    let dir = |i: usize| -> (Int, Int) {
        (&points[i][0] * &n - &cx, &points[i][1] * &n - &cy)
    };
    let half = |d: &(Int, Int)| -> u8 {
        if d.1.is_positive() || (d.1.is_zero() && d.0.is_positive()) {
            0
        } else {
            1
        }
    };
    order.sort_by(|&a, &b| {
        let (da, db) = (dir(a), dir(b));
        half(&da).cmp(&half(&db)).then_with(|| {
            let cross = &db.0 * &da.1 - &da.0 * &db.1;
            Int::from(0).cmp(&cross)
        })
    });
    let max = points
        .iter()
        .flat_map(|p| p.iter())
        .map(|x| x.abs())
        .max()
        .unwrap()
        .max(Int::from(1));
    let mut path_d = String::new();
    let mut labels = String::new();
    for (k, &i) in order.iter().enumerate() {
        let p = &points[i];
        let neg_y = -p[1].clone();
        let x = place(&p[0], &max, SCALE);
        let y = place(&neg_y, &max, SCALE);
        path_d.push_str(if k == 0 { "M" } else { "L" });
        path_d.push_str(&format!("{x} {y} "));
        let lx = place(&p[0], &max, SCALE + 28);
        let ly = place(&neg_y, &max, SCALE + 28);
        labels.push_str(&format!(
            "<circle cx=\"{x}\" cy=\"{y}\" r=\"2.5\" fill=\"black\"/>\n<text x=\"{lx}\" y=\"{ly}\" font-size=\"11\" font-family=\"monospace\" text-anchor=\"middle\">({})</text>\n",
            coord_label(&poly.vertices()[i])
        ));
    }
    let body = format!(
        "<path d=\"{path_d}Z\" fill=\"#dddddd\" stroke=\"black\" stroke-width=\"1.5\"/>\n{labels}"
    );
    write_file(path, body)
}
