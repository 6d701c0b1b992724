//! Text, CSV, JSON and SVG renderings of library results.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use mcflow::document::{rational_to_value, vector_to_value};
use mcflow::num::format_rational;
use mcflow::{ArcAssignment, Rational, Region, Vector};
use num_traits::ToPrimitive;
use serde_json::{json, Value};

pub fn csv_writer() -> csv::Writer<Vec<u8>> {
    csv::WriterBuilder::new().flexible(true).from_writer(Vec::new())
}

pub fn finish(w: csv::Writer<Vec<u8>>) -> String {
    String::from_utf8(w.into_inner().expect("in-memory writer")).expect("csv output is utf-8")
}

pub fn coords(v: &Vector) -> Vec<String> {
    v.entries().iter().map(format_rational).collect()
}

pub fn coord_header(k: usize) -> Vec<String> {
    (1..=k).map(|i| format!("x{i}")).collect()
}

/// `piece,vertex,x1..xk` for polygons, `point,x1..xk` for point sets.
pub fn region_csv(r: &Region) -> String {
    let mut w = csv_writer();
    write_region_rows(&mut w, r, &[]);
    finish(w)
}

/// Region rows prefixed by `prefix` (header row included when the prefix
/// is empty).
pub fn write_region_rows(w: &mut csv::Writer<Vec<u8>>, r: &Region, prefix: &[String]) {
    let k = r.dim();
    match r {
        Region::Points { points, .. } => {
            if prefix.is_empty() {
                let mut head = vec!["point".to_string()];
                head.extend(coord_header(k));
                w.write_record(&head).expect("csv");
            }
            for (i, p) in points.iter().enumerate() {
                let mut row = prefix.to_vec();
                row.push(i.to_string());
                row.extend(coords(p));
                w.write_record(&row).expect("csv");
            }
        }
        Region::Polygons(_) => {
            if prefix.is_empty() {
                let mut head = vec!["piece".to_string(), "vertex".to_string()];
                head.extend(coord_header(k));
                w.write_record(&head).expect("csv");
            }
            for (i, piece) in r.vertex_lists().iter().enumerate() {
                for (j, p) in piece.iter().enumerate() {
                    let mut row = prefix.to_vec();
                    row.extend([i.to_string(), j.to_string()]);
                    row.extend(coords(p));
                    w.write_record(&row).expect("csv");
                }
            }
        }
    }
}

pub fn region_json(r: &Region) -> Value {
    match r {
        Region::Points { points, .. } => json!({
            "kind": "points",
            "points": points.iter().map(vector_to_value).collect::<Vec<_>>(),
        }),
        Region::Polygons(pieces) => {
            let lists: Vec<Value> = r
                .vertex_lists()
                .iter()
                .map(|vs| Value::Array(vs.iter().map(vector_to_value).collect()))
                .collect();
            let open: Vec<bool> = pieces.iter().map(|p| !p.is_closed()).collect();
            json!({ "kind": "polygons", "pieces": lists, "open_boundary": open })
        }
    }
}

pub fn values_json(values: &BTreeSet<Vector>) -> Value {
    Value::Array(values.iter().map(vector_to_value).collect())
}

pub fn assignment_json(f: &ArcAssignment) -> Value {
    Value::Object(f.iter().map(|(a, v)| (a.clone(), vector_to_value(v))).collect())
}

/// `arc,x1..xk` rows.
pub fn assignment_csv(f: &ArcAssignment, k: usize) -> String {
    let mut w = csv_writer();
    let mut head = vec!["arc".to_string()];
    head.extend(coord_header(k));
    w.write_record(&head).expect("csv");
    for (a, v) in f {
        let mut row = vec![a.clone()];
        row.extend(coords(v));
        w.write_record(&row).expect("csv");
    }
    finish(w)
}

pub fn rational_json(r: &Rational) -> Value {
    rational_to_value(r)
}

/// One layer of a plot.
pub struct Layer<'a> {
    pub label: &'a str,
    pub region: &'a Region,
    pub fill: &'a str,
}

const SCALE: f64 = 40.0;
const MARGIN: f64 = 30.0;

fn f(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// 2-commodity regions drawn over an integer grid. The view always
/// contains the origin and one unit of padding around every layer.
pub fn svg(layers: &[Layer<'_>], stroke: &str) -> String {
    let (mut x0, mut y0, mut x1, mut y1) = (0.0f64, 0.0f64, 1.0f64, 1.0f64);
    for l in layers {
        if let Some((lo, hi)) = l.region.bounding_box() {
            x0 = x0.min(f(&lo[0]).floor());
            y0 = y0.min(f(&lo[1]).floor());
            x1 = x1.max(f(&hi[0]).ceil());
            y1 = y1.max(f(&hi[1]).ceil());
        }
    }
    let (x0, y0, x1, y1) = (x0 - 1.0, y0 - 1.0, x1 + 1.0, y1 + 1.0);
    let width = (x1 - x0) * SCALE + 2.0 * MARGIN;
    let height = (y1 - y0) * SCALE + 2.0 * MARGIN;
    let px = |x: f64| MARGIN + (x - x0) * SCALE;
    let py = |y: f64| MARGIN + (y1 - y) * SCALE;

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {width:.0} {height:.0}" width="{width:.0}" height="{height:.0}">"#
    );
    let _ = writeln!(out, r##"<rect width="100%" height="100%" fill="#ffffff"/>"##);
    let _ = writeln!(out, r##"<g stroke="#dddddd" stroke-width="1">"##);
    for i in (x0 as i64)..=(x1 as i64) {
        let x = px(i as f64);
        let _ = writeln!(out, r#"<line x1="{x:.2}" y1="{:.2}" x2="{x:.2}" y2="{:.2}"/>"#, py(y0), py(y1));
    }
    for j in (y0 as i64)..=(y1 as i64) {
        let y = py(j as f64);
        let _ = writeln!(out, r#"<line x1="{:.2}" y1="{y:.2}" x2="{:.2}" y2="{y:.2}"/>"#, px(x0), px(x1));
    }
    out.push_str("</g>\n");
    let _ = writeln!(
        out,
        r##"<g stroke="#000000" stroke-width="1.5"><line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}"/><line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}"/></g>"##,
        px(x0),
        py(0.0),
        px(x1),
        py(0.0),
        px(0.0),
        py(y0),
        px(0.0),
        py(y1)
    );
    out.push_str(r##"<g font-family="sans-serif" font-size="11" fill="#000000">"##);
    out.push('\n');
    for i in (x0 as i64 + 1)..(x1 as i64) {
        let _ = writeln!(out, r#"<text x="{:.2}" y="{:.2}" text-anchor="middle">{i}</text>"#, px(i as f64), py(0.0) + 14.0);
    }
    for j in (y0 as i64 + 1)..(y1 as i64) {
        if j != 0 {
            let _ = writeln!(out, r#"<text x="{:.2}" y="{:.2}" text-anchor="end">{j}</text>"#, px(0.0) - 4.0, py(j as f64) + 4.0);
        }
    }
    out.push_str("</g>\n");

    for l in layers {
        let _ = writeln!(out, r#"<g id="{}" fill="{}" stroke="{stroke}" stroke-width="2">"#, l.label, l.fill);
        match l.region {
            Region::Points { points, .. } => {
                for p in points {
                    let e = p.entries();
                    let _ = writeln!(out, r#"<circle cx="{:.2}" cy="{:.2}" r="4"/>"#, px(f(&e[0])), py(f(&e[1])));
                }
            }
            Region::Polygons(pieces) => {
                for (piece, vs) in pieces.iter().zip(l.region.vertex_lists()) {
                    let xy: Vec<(f64, f64)> = vs.iter().map(|v| (px(f(&v[0])), py(f(&v[1])))).collect();
                    let pts: Vec<String> = xy.iter().map(|(x, y)| format!("{x:.2},{y:.2}")).collect();
                    let dash = if piece.is_closed() { "" } else { r#" stroke-dasharray="6 4""# };
                    match vs.len() {
                        1 => {
                            let _ = writeln!(out, r#"<circle cx="{:.2}" cy="{:.2}" r="4"{dash}/>"#, xy[0].0, xy[0].1);
                        }
                        2 => {
                            let _ = writeln!(out, r#"<polyline points="{}" fill="none"{dash}/>"#, pts.join(" "));
                        }
                        _ => {
                            let _ = writeln!(out, r#"<polygon points="{}" fill-opacity="0.45"{dash}/>"#, pts.join(" "));
                        }
                    }
                }
            }
        }
        out.push_str("</g>\n");
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use mcflow::num::rat;
    use mcflow::ConvexPolygon;

    #[test]
    fn square_csv() {
        let r = Region::polygon(ConvexPolygon::rectangle(rat(0), rat(2), rat(0), rat(2)).unwrap());
        assert_eq!(region_csv(&r), "piece,vertex,x1,x2\n0,0,0,0\n0,1,2,0\n0,2,2,2\n0,3,0,2\n");
    }

    #[test]
    fn svg_is_deterministic_and_well_formed() {
        let r = Region::int_points(2, &[&[0, 0], &[1, 2]]).unwrap();
        let layer = Layer {
            label: "points",
            region: &r,
            fill: "#4477aa",
        };
        let a = svg(&[layer], "#222222");
        assert!(a.starts_with("<svg") && a.ends_with("</svg>\n"));
        assert_eq!(a.matches("<circle").count(), 2);
    }
}
