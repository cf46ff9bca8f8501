//! End-to-end acceptance checks. Prints one line per criterion and exits
//! non-zero if any fails.

use std::path::Path;
use std::process::Command;
use std::time::Instant;

use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use spherecover::config::{validate, ValidationFailure, TABLE1_CARDINALITIES, TABLE1_DIMENSIONS};
use spherecover::covering::{
    covering_radius, deep_hole_check, polar_maximum, verify_dimension, CoveringError, CoveringOptions,
    CoveringReport,
};
use spherecover::oracle::{brute_force_vertices, same_vertices, sampled_covering_radius};
use spherecover::polytope::{enumerate_vertices, polar_hrep, HPolytope, Halfspace, PolytopeError};
use spherecover::scalar::rational;
use spherecover::{with_configuration, AnyConfiguration, Backend, Configuration, FieldDescriptor, Scalar};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn exact(literal: &str, field: FieldDescriptor) -> Scalar {
    Scalar::parse(literal, &field).unwrap()
}

fn report(n: usize) -> Result<CoveringReport, String> {
    verify_dimension(n, Backend::Auto, &CoveringOptions::default()).map_err(|e| e.to_string())
}

fn cardinalities() -> Outcome {
    for (n, &expected) in TABLE1_DIMENSIONS.zip(TABLE1_CARDINALITIES.iter()) {
        let c = AnyConfiguration::table1(n, Backend::Auto).map_err(|e| e.to_string())?;
        if c.len() != expected {
            return Err(format!("n = {n}: {} points, expected {expected}", c.len()));
        }
        if c.len() >= 1 << n {
            return Err(format!("n = {n}: {} is not below 2^{n}", c.len()));
        }
    }
    Ok("30, 44, 112, 240, 470, 692, 2024, 3832, 7074, 11132, 16442; all below 2^n".into())
}

fn exact_radii() -> Outcome {
    let q = FieldDescriptor::Rational;
    let expected = [
        (5, exact("2/5", q)),
        (6, exact("4/9", FieldDescriptor::Quadratic { d: 6 })),
        (7, exact("351649/801625", q)),
        (8, exact("1/2", q)),
        (9, exact("19/73+12/73*sqrt(2)", FieldDescriptor::Quadratic { d: 2 })),
        // 1/(20 − 8√5)
        (10, exact("1/4+1/10*sqrt(5)", FieldDescriptor::Quadratic { d: 5 })),
    ];
    let inverse = Scalar::parse("20-8*sqrt(5)", &FieldDescriptor::Quadratic { d: 5 }).unwrap();
    let one = Scalar::Rational(rational(1, 1));
    if one.checked_div(&inverse).unwrap() != expected[5].1 {
        return Err("1/(20-8*sqrt(5)) literal mismatch".into());
    }
    let mut times = Vec::new();
    for (n, cos2) in expected {
        let start = Instant::now();
        let r = report(n)?;
        let elapsed = start.elapsed();
        if r.cos2_radius != cos2 {
            return Err(format!("n = {n}: cos^2 r = {}, expected {cos2}", r.cos2_radius));
        }
        if !r.backend.is_exact() {
            return Err(format!("n = {n}: computed over {}", r.backend));
        }
        let limit = match n {
            ..=8 => 60.0,
            9 => 900.0,
            _ => 5400.0,
        };
        if elapsed.as_secs_f64() > limit {
            return Err(format!("n = {n}: {elapsed:.1?} exceeds {limit} s"));
        }
        times.push(format!("{n}: {:.2}s", elapsed.as_secs_f64()));
    }
    Ok(format!("exact equality for n = 5..10 ({})", times.join(", ")))
}

#[allow(clippy::approx_constant)]
fn float_radii() -> Outcome {
    let table = [(11, 0.82071), (12, 0.78540), (13, 0.79098), (14, 0.80395), (15, 0.81793)];
    let mut worst: f64 = 0.0;
    let mut n15 = 0.0;
    for (n, radius) in table {
        let start = Instant::now();
        let r = report(n)?;
        if (r.radius - radius).abs() > 1e-5 {
            return Err(format!("n = {n}: radius {:.6}, expected {radius}", r.radius));
        }
        if !r.passes || r.inconclusive || r.radius_margin < 5e-4 {
            return Err(format!("n = {n}: radius margin {:.2e}", r.radius_margin));
        }
        worst = worst.max((r.radius - radius).abs());
        if n == 15 {
            n15 = start.elapsed().as_secs_f64();
            if n15 > 300.0 {
                return Err(format!("n = 15 took {n15:.1} s"));
            }
        }
    }
    Ok(format!("max deviation {worst:.1e}; n = 15 in {n15:.2}s"))
}

fn threshold_equality() -> Outcome {
    let r = report(5)?;
    if !r.passes || r.margin != Scalar::Rational(rational(0, 1)) || r.inconclusive {
        return Err(format!("margin {} passes {}", r.margin, r.passes));
    }
    Ok("cos^2 r = 2/5 = (n-1)/(2n), exact margin 0, pass".into())
}

/// Polar rows of random integer vectors around a scaled cross-polytope.
fn random_instance(rng: &mut ChaCha8Rng) -> HPolytope<BigRational> {
    let n = rng.gen_range(2..=5);
    let mut hs = Vec::new();
    for i in 0..n {
        for sign in [1, -1] {
            let mut v = vec![rational(0, 1); n];
            v[i] = rational(sign * rng.gen_range(1..=3), 1);
            hs.push(Halfspace::polar(v));
        }
    }
    let budget = if n == 5 { 16 } else { 24 };
    let extra = rng.gen_range(0..=budget - 2 * n);
    while hs.len() < 2 * n + extra {
        let v: Vec<i64> = (0..n).map(|_| rng.gen_range(-3..=3)).collect();
        if v.iter().any(|&x| x != 0) {
            hs.push(Halfspace::polar(v.into_iter().map(|x| rational(x, 1)).collect()));
        }
    }
    HPolytope::new(n, hs)
}

fn oracle_equivalence() -> Outcome {
    let seed = 20240501;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for case in 0..50 {
        let p = random_instance(&mut rng);
        let dd = enumerate_vertices(&p).map_err(|e| format!("case {case}: {e}"))?;
        let bf = brute_force_vertices(&p).map_err(|e| format!("case {case}: {e}"))?;
        if !same_vertices(&dd.vertices, &bf.vertices, 0.0) {
            return Err(format!("case {case} (seed {seed}): {} vs {} vertices", dd.len(), bf.len()));
        }
    }
    let c = spherecover::config::build_table1::<BigRational>(5, FieldDescriptor::Rational).unwrap();
    let p = polar_hrep(&c).with_symmetry_cone();
    let dd = enumerate_vertices(&p).map_err(|e| e.to_string())?;
    let bf = brute_force_vertices(&p).map_err(|e| e.to_string())?;
    if !same_vertices(&dd.vertices, &bf.vertices, 0.0) {
        return Err(format!("table1:5 with cone: {} vs {} vertices", dd.len(), bf.len()));
    }
    Ok(format!(
        "50 random instances (seed {seed}) and table1:5 with cone ({} halfspaces, {} vertices): 0 mismatches",
        p.halfspaces.len(),
        dd.len()
    ))
}

fn cross_polytope(n: usize) -> Configuration<BigRational> {
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

fn analytic_family() -> Outcome {
    for n in 2..=6 {
        let c = cross_polytope(n);
        for opts in [CoveringOptions::default(), CoveringOptions::without_symmetry()] {
            let m = polar_maximum(&c, &opts).map_err(|e| e.to_string())?;
            if m.cos2 != rational(1, n as i64) {
                return Err(format!("n = {n}: cos^2 r = {}", m.cos2));
            }
        }
    }
    Ok("cos^2 r = 1/n for n = 2..6".into())
}

fn symmetry_consistency() -> Outcome {
    for n in [5, 6] {
        let c = AnyConfiguration::table1(n, Backend::Auto).unwrap();
        let with = with_configuration!(&c, c => covering_radius(c, &CoveringOptions::default()))
            .map_err(|e| e.to_string())?;
        let without = with_configuration!(&c, c => covering_radius(c, &CoveringOptions::without_symmetry()))
            .map_err(|e| e.to_string())?;
        if with.cos2_radius != without.cos2_radius {
            return Err(format!("n = {n}: {} vs {}", with.cos2_radius, without.cos2_radius));
        }
    }
    Ok("n = 5, 6 agree with and without the cone".into())
}

fn deep_holes() -> Outcome {
    for n in TABLE1_DIMENSIONS {
        let c = AnyConfiguration::table1(n, Backend::Auto).unwrap();
        let r = report(n)?;
        let hole = with_configuration!(&c, c => deep_hole_check(c, &r)).map_err(|e| e.to_string())?;
        if !hole.holds {
            return Err(format!("n = {n}: nearest cos^2 {} vs {}", hole.nearest_cos2, r.cos2_radius));
        }
    }
    Ok("n = 5..15 (exact for n <= 10, 1e-9 above)".into())
}

fn sampling() -> Outcome {
    let seed = 7;
    let mut gaps = Vec::new();
    for n in 5..=10 {
        let c = AnyConfiguration::table1(n, Backend::Auto).unwrap();
        let r = report(n)?;
        let s = with_configuration!(&c, c => sampled_covering_radius(c, 100_000, seed));
        if s > r.radius + 1e-9 || s < r.radius - 0.05 {
            return Err(format!("n = {n}: sampled {s:.5} vs radius {:.5}", r.radius));
        }
        gaps.push(format!("{:.3}", r.radius - s));
    }
    Ok(format!("seed {seed}, 10^5 samples, gaps {}", gaps.join(" ")))
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.to_string_lossy().into_owned()
}

fn status(args: &[&str]) -> i32 {
    Command::new(env!("CARGO_BIN_EXE_spherecover"))
        .args(args)
        .output()
        .expect("binary runs")
        .status
        .code()
        .unwrap_or(-1)
}

fn error_paths() -> Outcome {
    let r = |a: i64, b: i64| vec![rational(a, 1), rational(b, 1)];
    let lopsided = Configuration::from_points(2, FieldDescriptor::Rational, vec![r(1, 0), r(-1, 0), r(0, 1)]).unwrap();
    if !matches!(validate(&lopsided).failure, Some(ValidationFailure::OriginSymmetry { .. })) {
        return Err("non-symmetric set passed validation".into());
    }
    let r3 = |v: [i64; 3]| v.iter().map(|&x| rational(x, 1)).collect::<Vec<_>>();
    let flat = Configuration::from_points(
        3,
        FieldDescriptor::Rational,
        vec![r3([1, -1, 0]), r3([-1, 1, 0]), r3([0, 1, -1]), r3([0, -1, 1]), r3([1, 0, -1]), r3([-1, 0, 1])],
    )
    .unwrap();
    if polar_maximum(&flat, &CoveringOptions::without_symmetry())
        != Err(CoveringError::Polytope(PolytopeError::Unbounded))
    {
        return Err("flat set did not report an unbounded polar".into());
    }

    let dir = tempfile::tempdir().unwrap();
    let cross = write(
        dir.path(),
        "cross.json",
        r#"{"dimension":4,"field":{"kind":"rational"},"generators":[{"type":"pattern","entries":[["1",1],["0",3]]}]}"#,
    );
    let plane = write(
        dir.path(),
        "plane.json",
        r#"{"dimension":3,"field":{"kind":"rational"},"generators":[{"type":"pattern","entries":[["1",1],["-1",1],["0",1]]}]}"#,
    );
    let bad_counts = write(
        dir.path(),
        "counts.json",
        r#"{"dimension":5,"field":{"kind":"rational"},"generators":[{"type":"subset_signs","support":3,"sign_counts":[0,1],"value":"1"}]}"#,
    );
    let cube = write(
        dir.path(),
        "cube.dump",
        "field rational\ndim 3\npolar 1 0 0\npolar -1 0 0\npolar 0 1 0\npolar 0 -1 0\npolar 0 0 1\npolar 0 0 -1\n",
    );
    let corrupted = write(
        dir.path(),
        "corrupted.dump",
        "field rational\ndim 2\npolar 2 0\npolar -1 0\npolar 0 1\npolar 0 -1\n\
         vertex 1 1\nvertex 1 -1\nvertex -1 1\nvertex -1 -1\n",
    );
    let checks: [(&[&str], i32); 9] = [
        (&["verify", "--dim", "5"], 0),
        (&["verify", "--dim", "16"], 2),
        (&["verify", "--dim", "12", "--backend", "exact"], 2),
        (&["radius", &cross], 0),
        (&["radius", &plane], 1),
        (&["radius", &bad_counts], 2),
        (&["oracle", "--hrep", &cube, "--samples", "0"], 0),
        (&["oracle", "--hrep", &corrupted], 1),
        (&["radius", "/nonexistent/config.json"], 2),
    ];
    for (args, expected) in checks {
        let got = status(args);
        if got != expected {
            return Err(format!("`{}` exited {got}, expected {expected}", args.join(" ")));
        }
    }
    Ok("validation, Unbounded, and exit codes 0/1/2".into())
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("cardinalities", cardinalities),
        ("exact radii n=5..10", exact_radii),
        ("float radii n=11..15", float_radii),
        ("threshold equality n=5", threshold_equality),
        ("oracle equivalence", oracle_equivalence),
        ("cross-polytope family", analytic_family),
        ("symmetry consistency", symmetry_consistency),
        ("deep-hole certification", deep_holes),
        ("sampling sanity", sampling),
        ("error paths", error_paths),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("[PASS] {:>2} {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("[FAIL] {:>2} {name}: {detail}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
