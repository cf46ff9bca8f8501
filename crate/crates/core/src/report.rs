//! Rendering of covering reports as JSON, CSV or a plain text table.

use serde::Serialize;

use crate::covering::CoveringReport;
use crate::scalar::{FieldDescriptor, Scalar};

/// Fixed-point rendering with `-0.000…` folded to `0.000…`.
pub fn fixed(x: f64, digits: usize) -> String {
    let s = format!("{x:.digits$}");
    match s.strip_prefix('-') {
        Some(rest) if rest.chars().all(|c| c == '0' || c == '.') => rest.to_string(),
        _ => s,
    }
}

fn scalar_decimal(s: &Scalar, digits: usize) -> String {
    match s {
        Scalar::Float(x) => fixed(*x, digits),
        exact => exact.to_decimal(digits),
    }
}

#[derive(Debug, Serialize)]
struct JsonReport<'a> {
    dimension: usize,
    cardinality: usize,
    backend: &'a FieldDescriptor,
    field: String,
    cos2_radius: String,
    cos2_decimal: String,
    radius: String,
    threshold_radius: String,
    passes: bool,
    margin: String,
    margin_decimal: String,
    radius_margin: String,
    inconclusive: bool,
    xray_bound: usize,
    attaining_vertex: Vec<String>,
    vertex_count: usize,
    halfspaces: usize,
    use_symmetry: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    wall_time_seconds: Option<f64>,
}

impl<'a> JsonReport<'a> {
    fn new(r: &'a CoveringReport, digits: usize, timing: bool) -> Self {
        JsonReport {
            dimension: r.dimension,
            cardinality: r.cardinality,
            backend: &r.backend,
            field: r.backend.to_string(),
            cos2_radius: r.cos2_radius.to_string(),
            cos2_decimal: scalar_decimal(&r.cos2_radius, digits),
            radius: fixed(r.radius, digits),
            threshold_radius: fixed(r.threshold_radius, digits),
            passes: r.passes,
            margin: r.margin.to_string(),
            margin_decimal: scalar_decimal(&r.margin, digits),
            radius_margin: fixed(r.radius_margin, digits),
            inconclusive: r.inconclusive,
            xray_bound: r.xray_bound,
            attaining_vertex: r.attaining_vertex.iter().map(Scalar::to_string).collect(),
            vertex_count: r.vertex_count,
            halfspaces: r.halfspaces,
            use_symmetry: r.use_symmetry,
            wall_time_seconds: timing.then_some(r.wall_time.as_secs_f64()),
        }
    }
}

pub fn to_json(reports: &[CoveringReport], digits: usize, timing: bool) -> String {
    let rows: Vec<JsonReport> = reports.iter().map(|r| JsonReport::new(r, digits, timing)).collect();
    serde_json::to_string_pretty(&rows).expect("reports serialize") + "\n"
}

pub fn to_json_single(report: &CoveringReport, digits: usize, timing: bool) -> String {
    serde_json::to_string_pretty(&JsonReport::new(report, digits, timing)).expect("report serializes") + "\n"
}

pub fn to_csv(reports: &[CoveringReport], digits: usize, timing: bool) -> String {
    let mut out = String::from("n,cardinality,radius,threshold,margin,pass");
    if timing {
        out.push_str(",seconds");
    }
    out.push('\n');
    for r in reports {
        out.push_str(&format!(
            "{},{},{},{},{},{}",
            r.dimension,
            r.cardinality,
            fixed(r.radius, digits),
            fixed(r.threshold_radius, digits),
            fixed(r.radius_margin, digits),
            r.passes && !r.inconclusive
        ));
        if timing {
            out.push_str(&format!(",{:.3}", r.wall_time.as_secs_f64()));
        }
        out.push('\n');
    }
    out
}

fn verdict(r: &CoveringReport) -> &'static str {
    match (r.passes, r.inconclusive) {
        (_, true) => "inconclusive",
        (true, false) => "pass",
        (false, false) => "fail",
    }
}

/// A table with one row per dimension: cardinality, field, exact cos² of
/// the covering radius, and the radius against the threshold.
pub fn to_text(reports: &[CoveringReport], digits: usize, timing: bool) -> String {
    let mut header = vec!["n", "|A|", "X-ray ≤", "field", "cos^2 r", "radius vs threshold", "verdict"];
    if timing {
        header.push("time");
    }
    let rows: Vec<Vec<String>> = reports
        .iter()
        .map(|r| {
            let relation = if r.passes { "≤" } else { ">" };
            let mut row = vec![
                r.dimension.to_string(),
                r.cardinality.to_string(),
                r.xray_bound.to_string(),
                r.backend.to_string(),
                match &r.cos2_radius {
                    Scalar::Float(x) => fixed(*x, digits),
                    exact => exact.to_string(),
                },
                format!(
                    "{} {relation} {}",
                    fixed(r.radius, digits),
                    fixed(r.threshold_radius, digits)
                ),
                verdict(r).to_string(),
            ];
            if timing {
                row.push(format!("{:.3}s", r.wall_time.as_secs_f64()));
            }
            row
        })
        .collect();
    let widths: Vec<usize> = (0..header.len())
        .map(|i| {
            rows.iter()
                .map(|row| row[i].chars().count())
                .chain(std::iter::once(header[i].chars().count()))
                .max()
                .unwrap_or(0)
        })
        .collect();
    let line = |cells: Vec<&str>| {
        let padded: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, &w)| format!("{c}{}", " ".repeat(w - c.chars().count())))
            .collect();
        padded.join("  ").trim_end().to_string() + "\n"
    };
    let mut out = line(header.clone());
    for row in &rows {
        out.push_str(&line(row.iter().map(String::as_str).collect()));
    }
    out
}

/// Key–value rendering of one report.
pub fn to_text_single(r: &CoveringReport, digits: usize, timing: bool) -> String {
    let relation = if r.passes { "≤" } else { ">" };
    let vertex: Vec<String> = r.attaining_vertex.iter().map(Scalar::to_string).collect();
    let mut out = format!(
        "dimension         {}\ncardinality       {}\nfield             {}\ncos^2 r           {}\n\
         radius            {}\nthreshold         {}\nradius vs thresh  {} {relation} {}\nverdict           {}\n\
         x-ray bound       {}\ndeep hole         ({})\nvertices          {}\nhalfspaces        {}\nsymmetry          {}\n",
        r.dimension,
        r.cardinality,
        r.backend,
        r.cos2_radius,
        fixed(r.radius, digits),
        fixed(r.threshold_radius, digits),
        fixed(r.radius, digits),
        fixed(r.threshold_radius, digits),
        verdict(r),
        r.xray_bound,
        vertex.join(", "),
        r.vertex_count,
        r.halfspaces,
        if r.use_symmetry { "on" } else { "off" },
    );
    if timing {
        out.push_str(&format!("time              {:.3}s\n", r.wall_time.as_secs_f64()));
    }
    out
}

#[cfg(test)]
mod tests {
    use std::time::Duration;

    use super::*;
    use crate::scalar::rational;

    fn sample() -> CoveringReport {
        CoveringReport {
            dimension: 5,
            cardinality: 30,
            backend: FieldDescriptor::Rational,
            cos2_radius: Scalar::Rational(rational(2, 5)),
            radius: 0.4f64.sqrt().acos(),
            threshold_radius: 0.4f64.sqrt().acos(),
            passes: true,
            margin: Scalar::Rational(rational(0, 1)),
            radius_margin: -1e-17,
            inconclusive: false,
            xray_bound: 15,
            attaining_vertex: vec![Scalar::Rational(rational(1, 2)); 5],
            vertex_count: 16,
            halfspaces: 9,
            use_symmetry: true,
            wall_time: Duration::from_millis(3),
        }
    }

    #[test]
    fn renderings() {
        let r = sample();
        assert_eq!(fixed(-1e-17, 5), "0.00000");
        let csv = to_csv(std::slice::from_ref(&r), 5, false);
        assert_eq!(csv, "n,cardinality,radius,threshold,margin,pass\n5,30,0.88608,0.88608,0.00000,true\n");
        let text = to_text(std::slice::from_ref(&r), 5, false);
        assert!(text.contains("0.88608 ≤ 0.88608"), "{text}");
        let json: serde_json::Value = serde_json::from_str(&to_json(std::slice::from_ref(&r), 5, false)).unwrap();
        assert_eq!(json[0]["cos2_radius"], "2/5");
        assert_eq!(json[0]["cos2_decimal"], "0.40000");
        assert!(json[0].get("wall_time_seconds").is_none());
        let json: serde_json::Value = serde_json::from_str(&to_json_single(&r, 5, true)).unwrap();
        assert_eq!(json["backend"]["kind"], "rational");
        assert!(json["wall_time_seconds"].is_number());
    }
}
