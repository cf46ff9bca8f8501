//! Plain-text H- and V-representation files.
//!
//! ```text
//! field quadratic 2
//! dim 3
//! polar 1 1 0
//! cone 1 -1 0
//! vertex 1/2 1/2 1/2
//! ```
//!
//! Entries use the scalar literal grammar and are separated by whitespace.
//! Blank lines and lines starting with `#` are ignored.

use std::fmt::Write as _;

use thiserror::Error;

use super::{Halfspace, HalfspaceKind, HPolytope};
use crate::scalar::{Field, FieldDescriptor, Scalar, ScalarError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DumpError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: {source}")]
    Scalar { line: usize, source: ScalarError },
    #[error("missing `{0}` header")]
    MissingHeader(&'static str),
}

/// Contents of a dump file.
#[derive(Debug, Clone, PartialEq)]
pub struct Dump {
    pub field: FieldDescriptor,
    pub dimension: usize,
    pub halfspaces: Vec<(HalfspaceKind, Vec<Scalar>)>,
    pub vertices: Vec<Vec<Scalar>>,
}

fn field_line(field: &FieldDescriptor) -> String {
    match field {
        FieldDescriptor::Rational => "field rational".into(),
        FieldDescriptor::Quadratic { d } => format!("field quadratic {d}"),
        FieldDescriptor::Float => "field float".into(),
    }
}

impl Dump {
    pub fn from_polytope<F: Field>(field: FieldDescriptor, p: &HPolytope<F>) -> Self {
        Dump {
            field,
            dimension: p.dimension,
            halfspaces: p
                .halfspaces
                .iter()
                .map(|h| (h.kind, h.normal.iter().map(Field::to_scalar).collect()))
                .collect(),
            vertices: Vec::new(),
        }
    }

    pub fn polytope<F: Field>(&self) -> Result<HPolytope<F>, ScalarError> {
        let halfspaces = self
            .halfspaces
            .iter()
            .map(|(kind, v)| {
                let normal = v.iter().map(F::from_scalar).collect::<Result<Vec<_>, _>>()?;
                Ok(Halfspace {
                    normal,
                    kind: *kind,
                })
            })
            .collect::<Result<_, ScalarError>>()?;
        Ok(HPolytope::new(self.dimension, halfspaces))
    }

    pub fn vertices<F: Field>(&self) -> Result<Vec<Vec<F>>, ScalarError> {
        self.vertices
            .iter()
            .map(|v| v.iter().map(F::from_scalar).collect())
            .collect()
    }

    pub fn write(&self) -> String {
        let mut out = String::new();
        writeln!(out, "{}", field_line(&self.field)).unwrap();
        writeln!(out, "dim {}", self.dimension).unwrap();
        let row = |out: &mut String, tag: &str, v: &[Scalar]| {
            out.push_str(tag);
            for x in v {
                write!(out, " {x}").unwrap();
            }
            out.push('\n');
        };
        for (kind, v) in &self.halfspaces {
            let tag = match kind {
                HalfspaceKind::Polar => "polar",
                HalfspaceKind::Cone => "cone",
            };
            row(&mut out, tag, v);
        }
        for v in &self.vertices {
            row(&mut out, "vertex", v);
        }
        out
    }

    pub fn parse(text: &str) -> Result<Self, DumpError> {
        let mut field = None;
        let mut dimension = None;
        let mut halfspaces = Vec::new();
        let mut vertices = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let syntax = |message: String| DumpError::Syntax { line, message };
            let trimmed = raw.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let mut words = trimmed.split_whitespace();
            let tag = words.next().unwrap_or_default();
            match tag {
                "field" => {
                    let f = match (words.next(), words.next()) {
                        (Some("rational"), None) => FieldDescriptor::Rational,
                        (Some("float"), None) => FieldDescriptor::Float,
                        (Some("quadratic"), Some(d)) => {
                            let d: u32 = d
                                .parse()
                                .map_err(|_| syntax(format!("bad radicand {d:?}")))?;
                            FieldDescriptor::quadratic(d)
                                .map_err(|source| DumpError::Scalar { line, source })?
                        }
                        _ => return Err(syntax(format!("bad field line {trimmed:?}"))),
                    };
                    field = Some(f);
                }
                "dim" => {
                    let d = words
                        .next()
                        .and_then(|w| w.parse::<usize>().ok())
                        .ok_or_else(|| syntax("bad dim line".into()))?;
                    dimension = Some(d);
                }
                "polar" | "cone" | "vertex" => {
                    let field = field.ok_or(DumpError::MissingHeader("field"))?;
                    let n = dimension.ok_or(DumpError::MissingHeader("dim"))?;
                    let v = words
                        .map(|w| Scalar::parse(w, &field))
                        .collect::<Result<Vec<_>, _>>()
                        .map_err(|source| DumpError::Scalar { line, source })?;
                    if v.len() != n {
                        return Err(syntax(format!("expected {n} entries, found {}", v.len())));
                    }
                    match tag {
                        "polar" => halfspaces.push((HalfspaceKind::Polar, v)),
                        "cone" => halfspaces.push((HalfspaceKind::Cone, v)),
                        _ => vertices.push(v),
                    }
                }
                other => return Err(syntax(format!("unknown record {other:?}"))),
            }
        }
        Ok(Dump {
            field: field.ok_or(DumpError::MissingHeader("field"))?,
            dimension: dimension.ok_or(DumpError::MissingHeader("dim"))?,
            halfspaces,
            vertices,
        })
    }
}
