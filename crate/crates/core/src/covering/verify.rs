use std::cmp::Ordering;

use log::info;
use thiserror::Error;

use super::{covering_radius, CoveringError, CoveringOptions, CoveringReport, FLOAT_TOL};
use crate::config::{AnyConfiguration, Backend, Configuration};
use crate::scalar::{dot, norm_sq, Field, Scalar, ScalarError};
use crate::with_configuration;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum VerifyError {
    #[error("n = {dimension}: {source}")]
    Covering {
        dimension: usize,
        source: CoveringError,
    },
    #[error("n = {}: |A| = {} is not below 2^{}", .0.dimension, .0.cardinality, .0.dimension)]
    TooManyPoints(Box<CoveringReport>),
    #[error("n = {}: covering radius {:.6} exceeds the threshold {:.6}", .0.dimension, .0.radius, .0.threshold_radius)]
    ThresholdFailed(Box<CoveringReport>),
    #[error("n = {}: float margin {} is too small to decide", .0.dimension, .0.margin)]
    Inconclusive(Box<CoveringReport>),
}

impl VerifyError {
    pub fn dimension(&self) -> usize {
        match self {
            VerifyError::Covering { dimension, .. } => *dimension,
            VerifyError::TooManyPoints(r) | VerifyError::ThresholdFailed(r) | VerifyError::Inconclusive(r) => {
                r.dimension
            }
        }
    }

    /// The computed report, when the computation itself succeeded.
    pub fn report(&self) -> Option<&CoveringReport> {
        match self {
            VerifyError::Covering { .. } => None,
            VerifyError::TooManyPoints(r) | VerifyError::ThresholdFailed(r) | VerifyError::Inconclusive(r) => {
                Some(r)
            }
        }
    }
}

/// Builds the construction for `n`, computes its covering radius and checks
/// `|A| < 2ⁿ` and the threshold.
pub fn verify_dimension(
    n: usize,
    backend: Backend,
    opts: &CoveringOptions,
) -> Result<CoveringReport, VerifyError> {
    let wrap = |source: CoveringError| VerifyError::Covering { dimension: n, source };
    let config = AnyConfiguration::table1(n, backend).map_err(|e| wrap(e.into()))?;
    info!("n = {n}: {} points over {}", config.len(), config.field());
    let report = with_configuration!(&config, c => covering_radius(c, opts)).map_err(wrap)?;
    info!(
        "n = {n}: cos^2 r = {}, radius {:.6} in {:.2?}",
        report.cos2_radius, report.radius, report.wall_time
    );
    if n >= usize::BITS as usize || report.cardinality >= 1usize << n {
        return Err(VerifyError::TooManyPoints(Box::new(report)));
    }
    if report.inconclusive {
        return Err(VerifyError::Inconclusive(Box::new(report)));
    }
    if !report.passes {
        return Err(VerifyError::ThresholdFailed(Box::new(report)));
    }
    Ok(report)
}

/// Runs [`verify_dimension`] for each dimension in order, stopping at the
/// first failure.
pub fn theorem1_verify(
    dims: &[usize],
    backend: Backend,
    opts: &CoveringOptions,
) -> Result<Vec<CoveringReport>, VerifyError> {
    dims.iter().map(|&n| verify_dimension(n, backend, opts)).collect()
}

/// Angular check of a reported deep hole.
#[derive(Debug, Clone, PartialEq)]
pub struct DeepHole {
    /// cos² of the angle from the hole direction to its nearest point.
    pub nearest_cos2: Scalar,
    /// Index of a nearest point.
    pub nearest: usize,
    pub holds: bool,
}

/// Recomputes the angle from the normalized attaining vertex to the nearest
/// point of `config` by a direct scan and compares it with the reported
/// radius.
pub fn deep_hole_check<F: Field>(
    config: &Configuration<F>,
    report: &CoveringReport,
) -> Result<DeepHole, ScalarError> {
    let x: Vec<F> = report
        .attaining_vertex
        .iter()
        .map(F::from_scalar)
        .collect::<Result<_, _>>()?;
    let expected = F::from_scalar(&report.cos2_radius)?;
    let (nearest, best) = config
        .points
        .iter()
        .map(|a| dot(a, &x))
        .enumerate()
        .max_by(|a, b| a.1.cmp_total(&b.1))
        .ok_or(ScalarError::DivisionByZero)?;
    let denom = config.norm_sq.clone() * &norm_sq(&x);
    let nearest_cos2 = best.clone() * &best / &denom;
    let diff = nearest_cos2.clone() - &expected;
    let holds = best.signum() == Ordering::Greater && diff.sign_tol(FLOAT_TOL) == Ordering::Equal;
    Ok(DeepHole {
        nearest_cos2: nearest_cos2.to_scalar(),
        nearest,
        holds,
    })
}

#[cfg(test)]
mod tests {
    use num_rational::BigRational;

    use super::*;
    use crate::config::build_table1;
    use crate::scalar::{rational, FieldDescriptor};

    #[test]
    fn square_hole() {
        let r = |a: i64, b: i64| vec![rational(a, 1), rational(b, 1)];
        let c = Configuration::from_points(
            2,
            FieldDescriptor::Rational,
            vec![r(1, 0), r(-1, 0), r(0, 1), r(0, -1)],
        )
        .unwrap();
        let report = covering_radius(&c, &CoveringOptions::default()).unwrap();
        assert_eq!(report.cos2_radius, Scalar::Rational(rational(1, 2)));
        assert!((report.radius - std::f64::consts::FRAC_PI_4).abs() < 1e-12);
        let hole = deep_hole_check(&c, &report).unwrap();
        assert!(hole.holds);
        let mut wrong = report.clone();
        wrong.attaining_vertex = vec![Scalar::Rational(rational(1, 1)), Scalar::Rational(rational(0, 1))];
        assert!(!deep_hole_check(&c, &wrong).unwrap().holds);
    }

    #[test]
    fn eight_dimensions() {
        let report = verify_dimension(8, Backend::Auto, &CoveringOptions::default()).unwrap();
        assert_eq!(report.cardinality, 240);
        assert_eq!(report.cos2_radius, Scalar::Rational(rational(1, 2)));
        let c = build_table1::<BigRational>(8, FieldDescriptor::Rational).unwrap();
        assert!(deep_hole_check(&c, &report).unwrap().holds);
    }
}
