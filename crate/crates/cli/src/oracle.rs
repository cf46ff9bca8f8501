use std::fs;
use std::path::Path;

use num_rational::BigRational;
use spherecover::covering::{covering_radius, deep_hole_check, CoveringOptions};
use spherecover::oracle::{brute_force_vertices, same_vertices, sampled_covering_radius, MAX_DIMENSION, MAX_HALFSPACES};
use spherecover::polytope::dump::Dump;
use spherecover::polytope::{enumerate_vertices, polar_hrep, HPolytope, PolytopeError};
use spherecover::{with_configuration, Configuration, Field, FieldDescriptor, Quadratic};

use crate::{load, BackendArg, Failure};

const SAMPLE_TOL: f64 = 1e-9;

fn tolerance<F: Field>() -> f64 {
    if F::EXACT {
        0.0
    } else {
        1e-8
    }
}

fn status(ok: bool) -> &'static str {
    if ok {
        "OK"
    } else {
        "MISMATCH"
    }
}

/// Brute-force comparison; `None` when the instance exceeds the guard.
fn brute_force_line<F: Field>(p: &HPolytope<F>, engine: &[Vec<F>]) -> Result<(String, bool), Failure> {
    match brute_force_vertices(p) {
        Ok(bf) => {
            let ok = same_vertices(&bf.vertices, engine, tolerance::<F>());
            Ok((
                format!("brute force vertices: {} (engine {}) {}", bf.len(), engine.len(), status(ok)),
                ok,
            ))
        }
        Err(PolytopeError::TooLarge { halfspaces, dimension }) => Ok((
            format!(
                "brute force vertices: skipped ({halfspaces} halfspaces in dimension {dimension}, limit {MAX_HALFSPACES} and {MAX_DIMENSION})"
            ),
            true,
        )),
        Err(e) => Err(Failure::math(e.to_string())),
    }
}

fn check_config<F: Field>(c: &Configuration<F>, samples: usize, seed: u64) -> Result<(), Failure> {
    let symmetric = c.is_permutation_symmetric();
    let opts = if symmetric {
        CoveringOptions::default()
    } else {
        CoveringOptions::without_symmetry()
    };
    let report = covering_radius(c, &opts).map_err(|e| Failure::math(e.to_string()))?;
    let mut ok = true;
    println!(
        "engine: n = {}, |A| = {}, cos^2 r = {}, radius {:.5}",
        report.dimension, report.cardinality, report.cos2_radius, report.radius
    );

    let mut p = polar_hrep(c);
    if symmetric {
        p = p.with_symmetry_cone();
    }
    let engine = enumerate_vertices(&p).map_err(|e| Failure::math(e.to_string()))?;
    let (line, agree) = brute_force_line(&p, &engine.vertices)?;
    println!("{line}");
    ok &= agree;

    let hole = deep_hole_check(c, &report).map_err(|e| Failure::math(e.to_string()))?;
    println!("deep hole: nearest point at cos^2 {} {}", hole.nearest_cos2, status(hole.holds));
    ok &= hole.holds;

    if samples > 0 {
        let sampled = sampled_covering_radius(c, samples, seed);
        let below = sampled <= report.radius + SAMPLE_TOL;
        println!(
            "sampled lower bound: {sampled:.5} ≤ {:.5} ({samples} samples, seed {seed}) {}",
            report.radius,
            status(below)
        );
        ok &= below;
    }
    if ok {
        Ok(())
    } else {
        Err(Failure::math("oracle disagrees with the engine"))
    }
}

pub(crate) fn run_config(source: &str, backend: Option<BackendArg>, samples: usize, seed: u64) -> Result<(), Failure> {
    let config = load(source, backend)?;
    with_configuration!(&config, c => check_config(c, samples, seed))
}

fn check_dump<F: Field>(hrep: &Dump, expected: &Dump) -> Result<(), Failure> {
    let p: HPolytope<F> = hrep.polytope().map_err(|e| Failure::usage(e.to_string()))?;
    let listed: Vec<Vec<F>> = expected.vertices().map_err(|e| Failure::usage(e.to_string()))?;
    let engine = enumerate_vertices(&p).map_err(|e| Failure::math(e.to_string()))?;
    println!("engine vertices: {}", engine.len());
    let (line, mut ok) = brute_force_line(&p, &engine.vertices)?;
    println!("{line}");
    if !expected.vertices.is_empty() {
        let agree = same_vertices(&listed, &engine.vertices, tolerance::<F>());
        println!("listed vertices: {} (engine {}) {}", listed.len(), engine.len(), status(agree));
        ok &= agree;
    }
    if ok {
        Ok(())
    } else {
        Err(Failure::math("vertex sets disagree"))
    }
}

fn read_dump(path: &Path) -> Result<Dump, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
    Dump::parse(&text).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

pub(crate) fn run_hrep(hrep: &Path, vrep: Option<&Path>) -> Result<(), Failure> {
    let h = read_dump(hrep)?;
    let v = match vrep {
        Some(path) => read_dump(path)?,
        None => h.clone(),
    };
    if v.field != h.field || v.dimension != h.dimension {
        return Err(Failure::usage("--vrep field or dimension differs from --hrep"));
    }
    match h.field {
        FieldDescriptor::Rational => check_dump::<BigRational>(&h, &v),
        FieldDescriptor::Quadratic { .. } => check_dump::<Quadratic>(&h, &v),
        FieldDescriptor::Float => check_dump::<f64>(&h, &v),
    }
}
