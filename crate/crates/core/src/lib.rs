//! Covering radii of finite origin-symmetric point sets on the sphere.
//!
//! A configuration `A` of equal-norm points is turned into its polar
//! polytope `{x : ⟨a, x⟩ ≤ 1 for all a ∈ A}`. The deepest hole of `A` lies in
//! the direction of the polar vertex of largest norm, so
//!
//! ```text
//! cos² r = 1 / (R² · max |v|²)
//! ```
//!
//! where `R²` is the common squared norm. Vertices are enumerated by double
//! description over exact rationals, a real quadratic field `Q(√d)`, or `f64`.
//!
//! ```
//! use spherecover::covering::{covering_radius, CoveringOptions};
//! use spherecover::{AnyConfiguration, Backend, with_configuration};
//!
//! let a = AnyConfiguration::table1(8, Backend::Auto).unwrap();
//! let r = with_configuration!(&a, c => covering_radius(c, &CoveringOptions::default())).unwrap();
//! assert_eq!(r.cos2_radius.to_string(), "1/2");
//! assert!(r.passes);
//! ```

pub mod config;
pub mod covering;
pub mod linalg;
pub mod oracle;
pub mod polytope;
pub mod report;
pub mod scalar;

pub use config::{AnyConfiguration, Backend, ConfigError, Configuration, GeneratorRule};
pub use covering::{CoveringError, CoveringOptions, CoveringReport};
pub use polytope::{HPolytope, Halfspace, PolytopeError, VertexSet};
pub use scalar::{Field, FieldDescriptor, Quadratic, Scalar, ScalarError};
