//! Covering radii from the vertices of the polar polytope.
//!
//! For an origin-symmetric set `A` of vectors of squared norm `R²` whose hull
//! has the origin in its interior, the covering radius `r` satisfies
//! `cos² r = 1 / (R² · m)` where `m` is the largest squared norm of a vertex
//! of `{x : ⟨a,x⟩ ≤ 1 for a ∈ A}`. When `A` is invariant under coordinate
//! permutations and negation, the maximum can be searched inside the cone
//! `x₁ ≥ 0, x₁ ≥ x₂ ≥ … ≥ xₙ`.

mod threshold;
mod verify;

use std::cmp::Ordering;
use std::time::{Duration, Instant};

use log::{debug, info};
use rayon::prelude::*;
use thiserror::Error;

use crate::config::{validate, ConfigError, Configuration, ValidationFailure};
use crate::polytope::{
    enumerate_vertices_with, max_squared_norm, Adjacency, DdOptions, HPolytope, Halfspace,
    PolytopeError,
};
use crate::scalar::{dot, Field, FieldDescriptor, Scalar};

pub use threshold::{threshold_check, threshold_cos2, threshold_radius, ThresholdVerdict, INCONCLUSIVE_MARGIN};
pub use verify::{deep_hole_check, theorem1_verify, verify_dimension, DeepHole, VerifyError};

/// Tolerance for float comparisons of cos² values and slacks.
pub const FLOAT_TOL: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CoveringError {
    #[error("invalid configuration: {0}")]
    Invalid(ValidationFailure),
    #[error("symmetry reduction needs a set invariant under coordinate permutations and negation")]
    NotSymmetric,
    #[error(transparent)]
    Polytope(#[from] PolytopeError),
    #[error(transparent)]
    Config(#[from] ConfigError),
}

#[derive(Debug, Clone, PartialEq)]
pub struct CoveringOptions {
    /// Restrict the search to the fundamental cone.
    pub use_symmetry: bool,
    /// Inside the cone, start from the points with descending coordinates
    /// only and add others back if a vertex violates them.
    pub prefilter: bool,
    /// Overrides the backend's default adjacency test.
    pub adjacency: Option<Adjacency>,
}

impl Default for CoveringOptions {
    fn default() -> Self {
        CoveringOptions {
            use_symmetry: true,
            prefilter: true,
            adjacency: None,
        }
    }
}

impl CoveringOptions {
    pub fn without_symmetry() -> Self {
        CoveringOptions {
            use_symmetry: false,
            prefilter: false,
            adjacency: None,
        }
    }
}

/// The raw outcome of the polar computation in the configuration's field.
#[derive(Debug, Clone, PartialEq)]
pub struct PolarMaximum<F> {
    /// Largest squared vertex norm.
    pub m_max: F,
    /// `1 / (R² · m_max)`
    pub cos2: F,
    /// A vertex attaining `m_max`.
    pub vertex: Vec<F>,
    pub vertex_count: usize,
    /// Halfspaces in the final enumeration, cone rows included.
    pub halfspaces: usize,
    /// Prefilter rounds needed; 1 when nothing was added back.
    pub rounds: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CoveringReport {
    pub dimension: usize,
    pub cardinality: usize,
    pub backend: FieldDescriptor,
    pub cos2_radius: Scalar,
    /// `arccos √cos2_radius`
    pub radius: f64,
    pub threshold_radius: f64,
    pub passes: bool,
    /// `cos2_radius − (n−1)/(2n)`, exact on exact backends.
    pub margin: Scalar,
    /// `threshold_radius − radius`
    pub radius_margin: f64,
    pub inconclusive: bool,
    pub xray_bound: usize,
    pub attaining_vertex: Vec<Scalar>,
    pub vertex_count: usize,
    pub halfspaces: usize,
    pub use_symmetry: bool,
    pub wall_time: Duration,
}

fn is_descending<F: Field>(v: &[F]) -> bool {
    v.windows(2).all(|w| w[0].cmp_total(&w[1]) != Ordering::Less)
}

/// Indices of points violating `⟨v,x⟩ ≤ 1` at some vertex.
fn violated<F: Field>(points: &[Vec<F>], candidates: &[usize], vertices: &[Vec<F>]) -> Vec<usize> {
    let approx: Vec<Vec<f64>> = vertices
        .iter()
        .map(|x| x.iter().map(Field::to_f64).collect())
        .collect();
    candidates
        .par_iter()
        .copied()
        .filter(|&i| {
            let v = &points[i];
            let vf: Vec<f64> = v.iter().map(Field::to_f64).collect();
            vertices.iter().zip(&approx).any(|(x, xf)| {
                let rough: f64 = vf.iter().zip(xf).map(|(a, b)| a * b).sum();
                if rough < 1.0 - 1e-6 {
                    return false;
                }
                let slack = F::one() - dot(v, x);
                slack.sign_tol(FLOAT_TOL) == Ordering::Less
            })
        })
        .collect()
}

/// Finds the largest squared vertex norm of the polar polytope.
pub fn polar_maximum<F: Field>(
    config: &Configuration<F>,
    opts: &CoveringOptions,
) -> Result<PolarMaximum<F>, CoveringError> {
    match validate(config).failure {
        None | Some(ValidationFailure::NotSpanning { .. }) => {}
        Some(other) => return Err(CoveringError::Invalid(other)),
    }
    if opts.use_symmetry && !config.is_permutation_symmetric() {
        return Err(CoveringError::NotSymmetric);
    }
    let n = config.dimension;
    let mut dd = DdOptions::for_field::<F>();
    if let Some(a) = opts.adjacency {
        dd.adjacency = a;
    }

    let all: Vec<usize> = (0..config.len()).collect();
    let (mut active, mut dropped): (Vec<usize>, Vec<usize>) = if opts.use_symmetry && opts.prefilter {
        all.into_iter().partition(|&i| is_descending(&config.points[i]))
    } else {
        (all, Vec::new())
    };

    let mut rounds = 0;
    loop {
        rounds += 1;
        let polar = active
            .iter()
            .map(|&i| Halfspace::polar(config.points[i].clone()))
            .collect();
        let mut p = HPolytope::new(n, polar);
        if opts.use_symmetry {
            p = p.with_symmetry_cone();
        }
        debug!("round {rounds}: {} halfspaces in dimension {n}", p.halfspaces.len());
        let vertices = enumerate_vertices_with(&p, &dd)?;
        let bad = violated(&config.points, &dropped, &vertices.vertices);
        if !bad.is_empty() {
            info!("{} dropped halfspaces violated, adding them back", bad.len());
            dropped.retain(|i| !bad.contains(i));
            active.extend(bad);
            active.sort_unstable();
            continue;
        }
        let (m_max, vertex) = max_squared_norm(&vertices).ok_or(PolytopeError::Unbounded)?;
        let denom = config.norm_sq.clone() * &m_max;
        let cos2 = denom.inv().ok_or(PolytopeError::Unbounded)?;
        return Ok(PolarMaximum {
            m_max,
            cos2,
            vertex,
            vertex_count: vertices.len(),
            halfspaces: p.halfspaces.len(),
            rounds,
        });
    }
}

/// Computes the covering radius of `config` and compares it with the
/// `arccos √((n−1)/(2n))` threshold.
pub fn covering_radius<F: Field>(
    config: &Configuration<F>,
    opts: &CoveringOptions,
) -> Result<CoveringReport, CoveringError> {
    let start = Instant::now();
    let result = polar_maximum(config, opts)?;
    let cos2 = result.cos2.to_scalar();
    let verdict = threshold_check(config.dimension, &cos2);
    Ok(CoveringReport {
        dimension: config.dimension,
        cardinality: config.len(),
        backend: config.field,
        radius: cos2.to_f64().sqrt().acos(),
        threshold_radius: threshold_radius(config.dimension),
        passes: verdict.passes,
        margin: verdict.margin,
        radius_margin: verdict.radius_margin,
        inconclusive: verdict.inconclusive,
        xray_bound: config.len() / 2,
        attaining_vertex: result.vertex.iter().map(Field::to_scalar).collect(),
        vertex_count: result.vertex_count,
        halfspaces: result.halfspaces,
        use_symmetry: opts.use_symmetry,
        cos2_radius: cos2,
        wall_time: start.elapsed(),
    })
}

#[cfg(test)]
mod tests {
    use num_rational::BigRational;

    use super::*;
    use crate::config::build_table1;
    use crate::scalar::rational;

    pub(crate) fn cross_polytope(n: usize) -> Configuration<BigRational> {
        let mut points = Vec::new();
        for i in 0..n {
            for s in [1, -1] {
                let mut v = vec![rational(0, 1); n];
                v[i] = rational(s, 1);
                points.push(v);
            }
        }
        Configuration::from_points(n, FieldDescriptor::Rational, points).unwrap()
    }

    #[test]
    fn cross_polytope_radius() {
        for n in 2..=4 {
            let c = cross_polytope(n);
            for opts in [CoveringOptions::default(), CoveringOptions::without_symmetry()] {
                let m = polar_maximum(&c, &opts).unwrap();
                assert_eq!(m.cos2, rational(1, n as i64));
            }
        }
    }

    #[test]
    fn five_dimensional_equality() {
        let c = build_table1::<BigRational>(5, FieldDescriptor::Rational).unwrap();
        let r = covering_radius(&c, &CoveringOptions::default()).unwrap();
        assert_eq!(r.cos2_radius, Scalar::Rational(rational(2, 5)));
        assert!(r.passes);
        assert_eq!(r.margin.sign(), 0);
        assert_eq!(r.xray_bound, 15);
        let m = polar_maximum(&c, &CoveringOptions::default()).unwrap();
        assert_eq!(m.m_max, rational(5, 16));
        assert_eq!(m.rounds, 1);
    }

    #[test]
    fn asymmetric_set_rejected() {
        let n = 2;
        let r = |a: i64, b: i64| vec![rational(a, 1), rational(b, 1)];
        let c = Configuration::from_points(n, FieldDescriptor::Rational, vec![r(1, 0), r(-1, 0), r(0, 1)]).unwrap();
        assert!(matches!(
            polar_maximum(&c, &CoveringOptions::without_symmetry()),
            Err(CoveringError::Invalid(ValidationFailure::OriginSymmetry { .. }))
        ));
        // symmetric under negation, not under swapping coordinates
        let c = Configuration::from_points(n, FieldDescriptor::Rational, vec![r(3, 4), r(-3, -4), r(5, 0), r(-5, 0)]).unwrap();
        assert_eq!(
            polar_maximum(&c, &CoveringOptions::default()),
            Err(CoveringError::NotSymmetric)
        );
        assert!(polar_maximum(&c, &CoveringOptions::without_symmetry()).is_ok());
    }

    #[test]
    fn flat_set_is_unbounded() {
        let r = |a: i64, b: i64, c: i64| vec![rational(a, 1), rational(b, 1), rational(c, 1)];
        let c = Configuration::from_points(
            3,
            FieldDescriptor::Rational,
            vec![r(1, -1, 0), r(-1, 1, 0), r(0, 1, -1), r(0, -1, 1), r(1, 0, -1), r(-1, 0, 1)],
        )
        .unwrap();
        for opts in [CoveringOptions::default(), CoveringOptions::without_symmetry()] {
            assert_eq!(
                polar_maximum(&c, &opts),
                Err(CoveringError::Polytope(PolytopeError::Unbounded))
            );
        }
    }

    #[test]
    fn single_two_two_zero_orbit_is_bounded() {
        use crate::config::GeneratorRule;
        use crate::oracle::brute_force_vertices;
        use crate::polytope::{max_squared_norm, polar_hrep};

        let rule = GeneratorRule::Pattern {
            entries: vec![(rational(2, 1), 2), (rational(0, 1), 3)],
        };
        let c = Configuration::from_rules(5, FieldDescriptor::Rational, vec![rule]).unwrap();
        let m = polar_maximum(&c, &CoveringOptions::without_symmetry()).unwrap();
        let bf = brute_force_vertices(&polar_hrep(&c)).unwrap();
        let (bf_max, _) = max_squared_norm(&bf).unwrap();
        assert_eq!(m.m_max, bf_max);
        assert_eq!(m.vertex_count, bf.len());
    }
}
