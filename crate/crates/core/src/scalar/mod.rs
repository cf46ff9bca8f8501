//! Field abstraction for the computation backends.
//!
//! Three backends share the [`Field`] trait: exact rationals ([`BigRational`]),
//! exact real quadratic numbers `a + b√d` ([`Quadratic`]) and `f64`. The
//! polytope and covering code is generic over it. [`Scalar`] is the dynamic
//! counterpart used for configuration files and reports.

mod decimal;
mod dynamic;
mod float;
mod literal;
mod quadratic;
mod rational;

use std::cmp::Ordering;
use std::fmt::{self, Debug, Display};
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use dynamic::Scalar;
pub use quadratic::Quadratic;
pub use rational::{rational, rational_literal};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(FieldDescriptor, FieldDescriptor),
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("cannot parse scalar {literal:?}: {reason}")]
    Parse { literal: String, reason: String },
}

/// The computation field of a configuration.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum FieldDescriptor {
    Rational,
    /// `Q(√d)` with `d ≥ 2` square-free.
    Quadratic { d: u32 },
    Float,
}

impl FieldDescriptor {
    pub fn quadratic(d: u32) -> Result<Self, ScalarError> {
        let field = FieldDescriptor::Quadratic { d };
        field.validate()?;
        Ok(field)
    }

    pub fn validate(&self) -> Result<(), ScalarError> {
        if let FieldDescriptor::Quadratic { d } = *self {
            if d < 2 || !is_square_free(d as u64) {
                return Err(ScalarError::InvalidField(format!(
                    "quadratic field needs a square-free d >= 2, got {d}"
                )));
            }
        }
        Ok(())
    }

    pub fn is_exact(&self) -> bool {
        !matches!(self, FieldDescriptor::Float)
    }
}

impl Display for FieldDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldDescriptor::Rational => write!(f, "QQ"),
            FieldDescriptor::Quadratic { d } => write!(f, "QQ(sqrt({d}))"),
            FieldDescriptor::Float => write!(f, "RDF"),
        }
    }
}

pub(crate) fn is_square_free(n: u64) -> bool {
    if n == 0 {
        return false;
    }
    let mut p = 2u64;
    while p * p <= n {
        if n.is_multiple_of(p * p) {
            return false;
        }
        p += 1;
    }
    true
}

/// Splits `m` as `s² · t` with `t` square-free.
pub(crate) fn square_part(m: u64) -> (u64, u64) {
    let mut s = 1u64;
    let mut t = m;
    let mut p = 2u64;
    while p * p <= t {
        while t.is_multiple_of(p * p) {
            t /= p * p;
            s *= p;
        }
        p += 1;
    }
    (s, t)
}

/// An ordered field usable by the vertex enumeration and covering code.
///
/// Exact backends decide signs exactly; the float backend compares natively
/// and callers pass explicit tolerances through [`Field::sign_tol`].
pub trait Field:
    Clone
    + Debug
    + Display
    + PartialEq
    + PartialOrd
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
    + for<'a> Div<&'a Self, Output = Self>
{
    const EXACT: bool;

    fn zero() -> Self;
    fn one() -> Self;
    fn from_rational(r: &BigRational) -> Self;

    /// Sign relative to zero.
    fn signum(&self) -> Ordering;

    /// Sign with `|x| <= tol` treated as zero. Exact backends ignore `tol`.
    fn sign_tol(&self, _tol: f64) -> Ordering {
        self.signum()
    }

    fn to_f64(&self) -> f64;
    fn to_scalar(&self) -> Scalar;

    /// Converts a dynamic scalar into this backend. Exact values may be
    /// demoted to float; the reverse is a field mismatch.
    fn from_scalar(s: &Scalar) -> Result<Self, ScalarError>;

    /// `1/√m` if it lies in `field`.
    fn inv_sqrt(m: u64, field: &FieldDescriptor) -> Option<Self>;

    fn from_i64(v: i64) -> Self {
        Self::from_rational(&BigRational::from_integer(v.into()))
    }

    fn is_zero(&self) -> bool {
        self.signum() == Ordering::Equal
    }

    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(Self::one() / self)
        }
    }

    fn abs(&self) -> Self {
        if self.signum() == Ordering::Less {
            -self.clone()
        } else {
            self.clone()
        }
    }

    /// Rescales a constraint row before vertex enumeration. Only the float
    /// backend does anything: it makes rows unit length so tolerances are
    /// relative to row norms.
    fn scale_row(_row: &mut [Self]) {}

    /// Rescales a ray by a positive factor to keep entries small.
    fn scale_ray(ray: &mut [Self]) {
        let Some(inv) = ray.iter().find(|x| !x.is_zero()).and_then(|x| x.abs().inv()) else {
            return;
        };
        for x in ray.iter_mut() {
            *x = x.clone() * &inv;
        }
    }

    /// Total order used for canonical sorting.
    fn cmp_total(&self, other: &Self) -> Ordering {
        self.partial_cmp(other).unwrap_or(Ordering::Equal)
    }
}

pub fn dot<F: Field>(a: &[F], b: &[F]) -> F {
    debug_assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .fold(F::zero(), |acc, (x, y)| acc + &(x.clone() * y))
}

pub fn norm_sq<F: Field>(v: &[F]) -> F {
    dot(v, v)
}

/// Lexicographic comparison of two vectors.
pub fn cmp_vectors<F: Field>(a: &[F], b: &[F]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        match x.cmp_total(y) {
            Ordering::Equal => continue,
            other => return other,
        }
    }
    a.len().cmp(&b.len())
}

/// Renders a vector with each entry in the exact literal grammar.
pub fn vector_literal<F: Field>(v: &[F]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(", "))
}
