//! Naive cross-checks for the vertex enumeration and covering computations.

use std::cmp::Ordering;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use rayon::prelude::*;

use crate::config::{for_each_combination, Configuration};
use crate::linalg;
use crate::polytope::{HPolytope, PolytopeError, VertexSet};
use crate::scalar::{cmp_vectors, Field};

/// Largest instance [`brute_force_vertices`] accepts.
pub const MAX_HALFSPACES: usize = 40;
pub const MAX_DIMENSION: usize = 6;

/// Tolerance for float feasibility and merging in the brute-force oracle.
const FLOAT_TOL: f64 = 1e-9;

/// Solves every `n`-subset of boundary hyperplanes and keeps the feasible
/// solutions. Exact on exact backends.
pub fn brute_force_vertices<F: Field>(p: &HPolytope<F>) -> Result<VertexSet<F>, PolytopeError> {
    p.check()?;
    let n = p.dimension;
    let h = p.halfspaces.len();
    if h > MAX_HALFSPACES || n > MAX_DIMENSION {
        return Err(PolytopeError::TooLarge {
            halfspaces: h,
            dimension: n,
        });
    }
    // boundary of halfspace i is ⟨aᵢ,x⟩ = bᵢ
    let rhs: Vec<F> = p
        .halfspaces
        .iter()
        .map(|hs| hs.slack(&vec![F::zero(); n]))
        .collect();

    let mut found: Vec<Vec<F>> = (0..h)
        .into_par_iter()
        .flat_map_iter(|first| {
            let mut local = Vec::new();
            let rest = h - first - 1;
            if n >= 1 && rest >= n - 1 {
                for_each_combination(rest, n - 1, |tail| {
                    let rows: Vec<usize> = std::iter::once(first)
                        .chain(tail.iter().map(|&t| first + 1 + t))
                        .collect();
                    let a: Vec<Vec<F>> = rows.iter().map(|&r| p.halfspaces[r].normal.clone()).collect();
                    let b: Vec<F> = rows.iter().map(|&r| rhs[r].clone()).collect();
                    if let Some(x) = linalg::solve(&a, &b) {
                        if p.contains(&x, FLOAT_TOL) {
                            local.push(x);
                        }
                    }
                });
            }
            local
        })
        .collect();

    found.sort_by(|a, b| cmp_vectors(a, b));
    let mut unique: Vec<Vec<F>> = Vec::with_capacity(found.len());
    for x in found {
        if !unique.iter().any(|u| close(u, &x, 1e-8)) {
            unique.push(x);
        }
    }
    let found = unique;
    let tight_sets = found.iter().map(|x| p.tight_set(x, FLOAT_TOL)).collect();
    Ok(VertexSet {
        vertices: found,
        tight_sets,
    })
}

/// Angle from the direction `u` to the nearest point of `config`.
pub fn min_angle<F: Field>(config: &Configuration<F>, u: &[f64]) -> f64 {
    let norm_u = u.iter().map(|x| x * x).sum::<f64>().sqrt();
    let r = config.norm_sq.to_f64().sqrt();
    let best = config
        .points
        .iter()
        .map(|a| a.iter().zip(u).map(|(x, y)| x.to_f64() * y).sum::<f64>())
        .fold(f64::NEG_INFINITY, f64::max);
    (best / (r * norm_u)).clamp(-1.0, 1.0).acos()
}

/// Uniformly distributed unit vectors from a seeded generator.
pub fn sphere_samples(n: usize, samples: usize, seed: u64) -> Vec<Vec<f64>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..samples)
        .map(|_| loop {
            let v: Vec<f64> = (0..n).map(|_| StandardNormal.sample(&mut rng)).collect();
            let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
            if norm > 1e-12 {
                break v.into_iter().map(|x| x / norm).collect();
            }
        })
        .collect()
}

/// Lower bound on the covering radius: the largest distance from a sampled
/// direction to the nearest point.
pub fn sampled_covering_radius<F: Field>(config: &Configuration<F>, samples: usize, seed: u64) -> f64 {
    let points: Vec<Vec<f64>> = config
        .points
        .iter()
        .map(|p| p.iter().map(Field::to_f64).collect())
        .collect();
    let r = config.norm_sq.to_f64().sqrt();
    sphere_samples(config.dimension, samples, seed)
        .par_iter()
        .map(|u| {
            let best = points
                .iter()
                .map(|a| a.iter().zip(u).map(|(x, y)| x * y).sum::<f64>())
                .fold(f64::NEG_INFINITY, f64::max);
            (best / r).clamp(-1.0, 1.0).acos()
        })
        .reduce(|| 0.0, f64::max)
}

fn close<F: Field>(x: &[F], y: &[F], tol: f64) -> bool {
    x.iter()
        .zip(y)
        .all(|(s, t)| (s.clone() - t).sign_tol(tol) == Ordering::Equal)
}

/// Compares two vertex lists as sets, matching entries within `tol`.
pub fn same_vertices<F: Field>(a: &[Vec<F>], b: &[Vec<F>], tol: f64) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let mut used = vec![false; b.len()];
    a.iter().all(|x| {
        let hit = (0..b.len()).find(|&j| !used[j] && close(x, &b[j], tol));
        if let Some(j) = hit {
            used[j] = true;
        }
        hit.is_some()
    })
}
