use std::cmp::Ordering;

use num_rational::BigRational;

use super::rational::rational_to_f64;
use super::{Field, FieldDescriptor, Scalar, ScalarError};

impl Field for f64 {
    const EXACT: bool = false;

    fn zero() -> Self {
        0.0
    }

    fn one() -> Self {
        1.0
    }

    fn from_rational(r: &BigRational) -> Self {
        rational_to_f64(r)
    }

    fn signum(&self) -> Ordering {
        self.partial_cmp(&0.0).unwrap_or(Ordering::Equal)
    }

    fn sign_tol(&self, tol: f64) -> Ordering {
        if self.abs() <= tol {
            Ordering::Equal
        } else {
            Field::signum(self)
        }
    }

    fn to_f64(&self) -> f64 {
        *self
    }

    fn to_scalar(&self) -> Scalar {
        Scalar::Float(*self)
    }

    fn from_scalar(s: &Scalar) -> Result<Self, ScalarError> {
        Ok(s.to_f64())
    }

    fn inv_sqrt(m: u64, _field: &FieldDescriptor) -> Option<Self> {
        (m > 0).then(|| 1.0 / (m as f64).sqrt())
    }

    fn from_i64(v: i64) -> Self {
        v as f64
    }

    fn scale_row(row: &mut [Self]) {
        let norm = row.iter().map(|x| x * x).sum::<f64>().sqrt();
        if norm > 0.0 {
            row.iter_mut().for_each(|x| *x /= norm);
        }
    }

    fn scale_ray(ray: &mut [Self]) {
        let max = ray.iter().fold(0.0f64, |m, x| m.max(x.abs()));
        if max > 0.0 {
            ray.iter_mut().for_each(|x| *x /= max);
        }
    }

    fn abs(&self) -> Self {
        f64::abs(*self)
    }
}
