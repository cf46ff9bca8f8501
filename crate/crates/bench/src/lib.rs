//! Fixtures shared by the benchmarks.

use num_rational::BigRational;
use spherecover::config::{build_table1, table1_field};
use spherecover::polytope::{polar_hrep, HPolytope, Halfspace};
use spherecover::scalar::rational;
use spherecover::Configuration;

/// Rational construction for `n` in 5, 7 or 8.
pub fn rational_table1(n: usize) -> Configuration<BigRational> {
    build_table1(n, table1_field(n).unwrap()).unwrap()
}

/// Polar polytope of a rational construction, cut down to one symmetry cone.
pub fn cone_polytope(n: usize) -> HPolytope<BigRational> {
    polar_hrep(&rational_table1(n)).with_symmetry_cone()
}

/// The cube `|xᵢ| ≤ 1` with every sign pattern of a shifted diagonal added.
pub fn clipped_cube(n: usize) -> HPolytope<BigRational> {
    let mut hs = Vec::new();
    for i in 0..n {
        for s in [1, -1] {
            let mut v = vec![rational(0, 1); n];
            v[i] = rational(s, 1);
            hs.push(Halfspace::polar(v));
        }
    }
    for mask in 0..1u32 << n {
        let v = (0..n)
            .map(|i| rational(if mask >> i & 1 == 1 { -1 } else { 1 }, 2))
            .collect();
        hs.push(Halfspace::polar(v));
    }
    HPolytope::new(n, hs)
}
