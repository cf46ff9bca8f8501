//! Origin-symmetric point configurations and their generator rules.

mod any;
mod file;
mod rule;
mod table1;

use std::cmp::Ordering;
use std::fmt;

use rayon::prelude::*;
use thiserror::Error;

use crate::linalg;
use crate::scalar::{cmp_vectors, norm_sq, vector_literal, Field, FieldDescriptor, ScalarError};

pub use any::{AnyConfiguration, Backend};
pub use file::{ConfigFile, GeneratorSpec};
pub use rule::{expand, GeneratorRule};
pub(crate) use rule::for_each_combination;
pub use table1::{build_table1, table1_field, table1_rules, TABLE1_CARDINALITIES, TABLE1_DIMENSIONS};

/// Componentwise tolerance for merging points on the float backend.
pub const FLOAT_DEDUP_TOL: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ConfigError {
    #[error("invalid generator: {0}")]
    InvalidRule(String),
    #[error("dimension {0} is outside the built-in range 5..=15")]
    DimensionOutOfRange(usize),
    #[error("field {field} cannot represent {what}")]
    UnsupportedField { field: FieldDescriptor, what: String },
    #[error("empty configuration")]
    Empty,
    #[error("{field}: {message}")]
    File { field: String, message: String },
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

/// A finite set of vectors meant to be origin-symmetric with a common norm.
///
/// Points are kept unnormalized; `norm_sq` is the squared norm of the first
/// point and [`validate`] checks that all others agree.
#[derive(Debug, Clone)]
pub struct Configuration<F> {
    pub dimension: usize,
    pub field: FieldDescriptor,
    pub rules: Vec<GeneratorRule<F>>,
    pub points: Vec<Vec<F>>,
    pub norm_sq: F,
}

impl<F: Field> Configuration<F> {
    /// Expands `rules` and merges the results in canonical order.
    pub fn from_rules(
        dimension: usize,
        field: FieldDescriptor,
        rules: Vec<GeneratorRule<F>>,
    ) -> Result<Self, ConfigError> {
        let expanded: Vec<Vec<Vec<F>>> = rules
            .par_iter()
            .map(|rule| expand(rule, dimension))
            .collect::<Result<_, _>>()?;
        let points = sort_dedup(expanded.into_iter().flatten().collect());
        let mut config = Configuration::from_points(dimension, field, points)?;
        config.rules = rules;
        Ok(config)
    }

    /// Wraps an explicit point list. No structural checks are made here.
    pub fn from_points(
        dimension: usize,
        field: FieldDescriptor,
        points: Vec<Vec<F>>,
    ) -> Result<Self, ConfigError> {
        let first = points.first().ok_or(ConfigError::Empty)?;
        let norm_sq = norm_sq(first);
        Ok(Configuration {
            dimension,
            field,
            rules: Vec::new(),
            points,
            norm_sq,
        })
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Membership test; exact on exact backends.
    pub fn contains(&self, v: &[F]) -> bool {
        contains_point(&self.points, v)
    }

    /// Whether the set is invariant under all coordinate permutations and
    /// global negation.
    pub fn is_permutation_symmetric(&self) -> bool {
        let mut sorted = self.points.clone();
        sorted.sort_by(|a, b| cmp_vectors(a, b));
        let n = self.dimension;
        sorted.iter().all(|p| {
            let neg: Vec<F> = p.iter().map(|x| -x.clone()).collect();
            if !contains_point(&sorted, &neg) {
                return false;
            }
            (0..n.saturating_sub(1)).all(|i| {
                let mut q = p.clone();
                q.swap(i, i + 1);
                contains_point(&sorted, &q)
            })
        })
    }
}

pub(crate) fn points_equal<F: Field>(a: &[F], b: &[F]) -> bool {
    if F::EXACT {
        a == b
    } else {
        a.iter()
            .zip(b)
            .all(|(x, y)| (x.clone() - y).sign_tol(FLOAT_DEDUP_TOL) == Ordering::Equal)
    }
}

/// Sorts lexicographically and merges equal points.
pub(crate) fn sort_dedup<F: Field>(mut points: Vec<Vec<F>>) -> Vec<Vec<F>> {
    points.sort_by(|a, b| cmp_vectors(a, b));
    points.dedup_by(|a, b| points_equal(a, b));
    points
}

/// Looks `v` up in a lexicographically sorted list.
pub(crate) fn contains_point<F: Field>(sorted: &[Vec<F>], v: &[F]) -> bool {
    if sorted.binary_search_by(|p| cmp_vectors(p, v)).is_ok() {
        return true;
    }
    !F::EXACT && sorted.iter().any(|p| points_equal(p, v))
}

/// The first structural property a configuration violates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ValidationFailure {
    DimensionMismatch { index: usize, len: usize },
    Duplicate { point: String },
    OriginSymmetry { point: String },
    UnequalNorms { point: String },
    NotSpanning { rank: usize },
}

impl fmt::Display for ValidationFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ValidationFailure::DimensionMismatch { index, len } => {
                write!(f, "point {index} has {len} coordinates")
            }
            ValidationFailure::Duplicate { point } => write!(f, "duplicate point {point}"),
            ValidationFailure::OriginSymmetry { point } => {
                write!(f, "origin-symmetry: the negative of {point} is missing")
            }
            ValidationFailure::UnequalNorms { point } => {
                write!(f, "point {point} has a different squared norm")
            }
            ValidationFailure::NotSpanning { rank } => {
                write!(f, "points affinely span only a {rank}-dimensional subspace")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub failure: Option<ValidationFailure>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

/// Checks symmetry, equal norms, distinctness and full affine span.
pub fn validate<F: Field>(config: &Configuration<F>) -> ValidationReport {
    let fail = |failure| ValidationReport {
        failure: Some(failure),
    };
    let n = config.dimension;
    if let Some((index, p)) = config.points.iter().enumerate().find(|(_, p)| p.len() != n) {
        return fail(ValidationFailure::DimensionMismatch {
            index,
            len: p.len(),
        });
    }
    let mut sorted = config.points.clone();
    sorted.sort_by(|a, b| cmp_vectors(a, b));
    if let Some(w) = sorted.windows(2).find(|w| points_equal(&w[0], &w[1])) {
        return fail(ValidationFailure::Duplicate {
            point: vector_literal(&w[0]),
        });
    }
    for p in &config.points {
        let neg: Vec<F> = p.iter().map(|x| -x.clone()).collect();
        if !contains_point(&sorted, &neg) {
            return fail(ValidationFailure::OriginSymmetry {
                point: vector_literal(p),
            });
        }
    }
    let tol = 1e-9 * config.norm_sq.to_f64().abs().max(1.0);
    for p in &config.points {
        if (norm_sq(p) - &config.norm_sq).sign_tol(tol) != Ordering::Equal {
            return fail(ValidationFailure::UnequalNorms {
                point: vector_literal(p),
            });
        }
    }
    let base = &config.points[0];
    let diffs: Vec<Vec<F>> = config.points[1..]
        .iter()
        .map(|p| p.iter().zip(base).map(|(x, y)| x.clone() - y).collect())
        .collect();
    let rank = linalg::rank(&diffs);
    if rank < n {
        return fail(ValidationFailure::NotSpanning { rank });
    }
    ValidationReport { failure: None }
}

#[cfg(test)]
mod tests {
    use num_rational::BigRational;

    use super::*;
    use crate::scalar::rational;

    fn pts(rows: &[&[i64]]) -> Vec<Vec<BigRational>> {
        rows.iter()
            .map(|r| r.iter().map(|&v| rational(v, 1)).collect())
            .collect()
    }

    #[test]
    fn missing_antipode_fails_symmetry() {
        let c = Configuration::from_points(2, FieldDescriptor::Rational, pts(&[&[1, 0], &[0, 1]]))
            .unwrap();
        let report = validate(&c);
        assert!(matches!(
            report.failure,
            Some(ValidationFailure::OriginSymmetry { .. })
        ));
    }

    #[test]
    fn planar_set_in_space_does_not_span() {
        let c = Configuration::from_points(
            3,
            FieldDescriptor::Rational,
            pts(&[&[1, 0, 0], &[-1, 0, 0], &[0, 1, 0], &[0, -1, 0]]),
        )
        .unwrap();
        assert_eq!(
            validate(&c).failure,
            Some(ValidationFailure::NotSpanning { rank: 2 })
        );
    }

    #[test]
    fn unequal_norms_and_duplicates() {
        let c = Configuration::from_points(
            1,
            FieldDescriptor::Rational,
            pts(&[&[1], &[-1], &[2], &[-2]]),
        )
        .unwrap();
        assert!(matches!(
            validate(&c).failure,
            Some(ValidationFailure::UnequalNorms { .. })
        ));
        let c = Configuration::from_points(1, FieldDescriptor::Rational, pts(&[&[1], &[-1], &[1]]))
            .unwrap();
        assert!(matches!(
            validate(&c).failure,
            Some(ValidationFailure::Duplicate { .. })
        ));
    }

    #[test]
    fn single_orbit_of_two_two_zero_passes() {
        // the (2², 0³) orbit alone spans E⁵ and contains the origin in its hull
        let rule = GeneratorRule::subset_values(2, rational(2, 1), rational(0, 1));
        let c = Configuration::from_rules(5, FieldDescriptor::Rational, vec![rule]).unwrap();
        assert_eq!(c.len(), 20);
        assert!(validate(&c).passed());
        assert!(c.is_permutation_symmetric());
    }

    #[test]
    fn permutation_symmetry_detection() {
        let c = Configuration::from_points(
            2,
            FieldDescriptor::Rational,
            pts(&[&[2, 1], &[-2, -1]]),
        )
        .unwrap();
        assert!(!c.is_permutation_symmetric());
    }
}
