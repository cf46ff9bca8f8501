//! Halfspace systems for the polar body and their exact vertex enumeration.

mod dd;
pub mod dump;
mod rowset;

use std::cmp::Ordering;

use thiserror::Error;

use crate::config::Configuration;
use crate::scalar::{norm_sq, Field};

pub use dd::{enumerate_vertices, enumerate_vertices_with, Adjacency, DdOptions};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolytopeError {
    /// A recession direction survived: the polyhedron is not bounded.
    #[error(
        "polyhedron is unbounded: the origin is not interior to the convex hull of the points"
    )]
    Unbounded,
    #[error("halfspace {index} has a zero normal")]
    ZeroNormal { index: usize },
    #[error("halfspace {index} has {len} coordinates, expected {dimension}")]
    DimensionMismatch {
        index: usize,
        len: usize,
        dimension: usize,
    },
    #[error("instance too large for brute force: {halfspaces} halfspaces in dimension {dimension}")]
    TooLarge { halfspaces: usize, dimension: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum HalfspaceKind {
    /// `⟨v, x⟩ ≤ 1`
    Polar,
    /// `⟨c, x⟩ ≥ 0`
    Cone,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Halfspace<F> {
    pub normal: Vec<F>,
    pub kind: HalfspaceKind,
}

impl<F: Field> Halfspace<F> {
    pub fn polar(normal: Vec<F>) -> Self {
        Halfspace {
            normal,
            kind: HalfspaceKind::Polar,
        }
    }

    pub fn cone(normal: Vec<F>) -> Self {
        Halfspace {
            normal,
            kind: HalfspaceKind::Cone,
        }
    }

    /// Slack of `x`: `1 − ⟨v,x⟩` for polar rows, `⟨c,x⟩` for cone rows.
    /// Nonnegative iff `x` satisfies the halfspace.
    pub fn slack(&self, x: &[F]) -> F {
        let d = crate::scalar::dot(&self.normal, x);
        match self.kind {
            HalfspaceKind::Polar => F::one() - d,
            HalfspaceKind::Cone => d,
        }
    }

    /// The row `(b, −a)` of the homogenized constraint `b·t − ⟨a,x⟩ ≥ 0`.
    pub(crate) fn homogeneous_row(&self) -> Vec<F> {
        let mut row = Vec::with_capacity(self.normal.len() + 1);
        match self.kind {
            HalfspaceKind::Polar => {
                row.push(F::one());
                row.extend(self.normal.iter().map(|v| -v.clone()));
            }
            HalfspaceKind::Cone => {
                row.push(F::zero());
                row.extend(self.normal.iter().cloned());
            }
        }
        row
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct HPolytope<F> {
    pub dimension: usize,
    pub halfspaces: Vec<Halfspace<F>>,
}

impl<F: Field> HPolytope<F> {
    pub fn new(dimension: usize, halfspaces: Vec<Halfspace<F>>) -> Self {
        HPolytope {
            dimension,
            halfspaces,
        }
    }

    /// Prepends the symmetry cone rows.
    pub fn with_symmetry_cone(mut self) -> Self {
        let mut rows = symmetry_cone(self.dimension);
        rows.append(&mut self.halfspaces);
        self.halfspaces = rows;
        self
    }

    pub fn check(&self) -> Result<(), PolytopeError> {
        for (index, h) in self.halfspaces.iter().enumerate() {
            if h.normal.len() != self.dimension {
                return Err(PolytopeError::DimensionMismatch {
                    index,
                    len: h.normal.len(),
                    dimension: self.dimension,
                });
            }
            if h.normal.iter().all(Field::is_zero) {
                return Err(PolytopeError::ZeroNormal { index });
            }
        }
        Ok(())
    }

    /// Whether `x` satisfies every halfspace, within `tol` on the float
    /// backend.
    pub fn contains(&self, x: &[F], tol: f64) -> bool {
        self.halfspaces
            .iter()
            .all(|h| h.slack(x).sign_tol(tol) != Ordering::Less)
    }

    /// Indices of halfspaces active at `x`.
    pub fn tight_set(&self, x: &[F], tol: f64) -> Vec<usize> {
        self.halfspaces
            .iter()
            .enumerate()
            .filter(|(_, h)| h.slack(x).sign_tol(tol) == Ordering::Equal)
            .map(|(i, _)| i)
            .collect()
    }
}

/// Vertices of a bounded polytope with the halfspaces active at each.
#[derive(Debug, Clone, PartialEq)]
pub struct VertexSet<F> {
    pub vertices: Vec<Vec<F>>,
    pub tight_sets: Vec<Vec<usize>>,
}

impl<F: Field> VertexSet<F> {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }
}

/// One polar halfspace `⟨v,x⟩ ≤ 1` per configuration point.
pub fn polar_hrep<F: Field>(config: &Configuration<F>) -> HPolytope<F> {
    HPolytope::new(
        config.dimension,
        config.points.iter().cloned().map(Halfspace::polar).collect(),
    )
}

/// `x₁ ≥ 0` and `xᵢ − xᵢ₊₁ ≥ 0` for `i = 1..n−1`.
pub fn symmetry_cone<F: Field>(n: usize) -> Vec<Halfspace<F>> {
    let mut rows = Vec::with_capacity(n);
    let mut first = vec![F::zero(); n];
    first[0] = F::one();
    rows.push(Halfspace::cone(first));
    for i in 0..n.saturating_sub(1) {
        let mut row = vec![F::zero(); n];
        row[i] = F::one();
        row[i + 1] = -F::one();
        rows.push(Halfspace::cone(row));
    }
    rows
}

/// The largest squared norm over the vertices and the first vertex attaining
/// it in list order.
pub fn max_squared_norm<F: Field>(vertices: &VertexSet<F>) -> Option<(F, Vec<F>)> {
    let mut best: Option<(F, &Vec<F>)> = None;
    for v in &vertices.vertices {
        let m = norm_sq(v);
        if best.as_ref().is_none_or(|(b, _)| m.cmp_total(b) == Ordering::Greater) {
            best = Some((m, v));
        }
    }
    best.map(|(m, v)| (m, v.clone()))
}
