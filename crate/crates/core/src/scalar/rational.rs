use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{square_part, Field, FieldDescriptor, Scalar, ScalarError};

/// Shorthand for `num/den` as a reduced [`BigRational`].
pub fn rational(num: i64, den: i64) -> BigRational {
    BigRational::new(num.into(), den.into())
}

/// `n` or `n/d`, matching the scalar literal grammar.
pub fn rational_literal(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub(crate) fn rational_to_f64(r: &BigRational) -> f64 {
    ToPrimitive::to_f64(r).unwrap_or_else(|| {
        // numerator or denominator beyond f64 range: scale down first
        let shift = r.numer().bits().max(r.denom().bits()).saturating_sub(900) as usize;
        let n = (r.numer() >> shift).to_f64().unwrap_or(f64::NAN);
        let d = (r.denom() >> shift).to_f64().unwrap_or(f64::NAN);
        n / d
    })
}

fn is_perfect_square(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let root = n.sqrt();
    (&root * &root == *n).then_some(root)
}

impl Field for BigRational {
    const EXACT: bool = true;

    fn zero() -> Self {
        Zero::zero()
    }

    fn one() -> Self {
        One::one()
    }

    fn from_rational(r: &BigRational) -> Self {
        r.clone()
    }

    fn signum(&self) -> Ordering {
        if self.is_positive() {
            Ordering::Greater
        } else if self.is_negative() {
            Ordering::Less
        } else {
            Ordering::Equal
        }
    }

    fn to_f64(&self) -> f64 {
        rational_to_f64(self)
    }

    fn to_scalar(&self) -> Scalar {
        Scalar::Rational(self.clone())
    }

    fn from_scalar(s: &Scalar) -> Result<Self, ScalarError> {
        match s {
            Scalar::Rational(r) => Ok(r.clone()),
            Scalar::Quadratic(q) if Zero::is_zero(q.irrational_part()) => Ok(q.rational_part().clone()),
            other => Err(ScalarError::FieldMismatch(
                other.field(),
                FieldDescriptor::Rational,
            )),
        }
    }

    fn inv_sqrt(m: u64, _field: &FieldDescriptor) -> Option<Self> {
        if m == 0 {
            return None;
        }
        let (s, t) = square_part(m);
        if t != 1 {
            return None;
        }
        is_perfect_square(&BigInt::from(m))?;
        Some(rational(1, s as i64))
    }

    fn inv(&self) -> Option<Self> {
        (!Zero::is_zero(self)).then(|| self.recip())
    }

    /// Scales to a primitive integer vector.
    fn scale_ray(ray: &mut [Self]) {
        let lcm = ray
            .iter()
            .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        let gcd = ray
            .iter()
            .fold(BigInt::zero(), |acc, x| acc.gcd(&(x.numer() * (&lcm / x.denom()))));
        if gcd.is_zero() {
            return;
        }
        for x in ray.iter_mut() {
            let scaled = x.numer() * (&lcm / x.denom()) / &gcd;
            *x = BigRational::from_integer(scaled);
        }
    }

    fn cmp_total(&self, other: &Self) -> Ordering {
        self.cmp(other)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduced_storage() {
        let x = rational(2, 4) + rational(1, 4);
        assert_eq!(x.numer(), &BigInt::from(3));
        assert_eq!(x.denom(), &BigInt::from(4));
        let y = rational(3, -6);
        assert_eq!(rational_literal(&y), "-1/2");
    }

    #[test]
    fn primitive_ray_scaling() {
        let mut v = vec![rational(2, 3), rational(-4, 9), rational(0, 1)];
        BigRational::scale_ray(&mut v);
        assert_eq!(v, vec![rational(3, 1), rational(-2, 1), rational(0, 1)]);
    }

    #[test]
    fn inverse_square_roots() {
        let f = FieldDescriptor::Rational;
        assert_eq!(BigRational::inv_sqrt(9, &f), Some(rational(1, 3)));
        assert_eq!(BigRational::inv_sqrt(1, &f), Some(rational(1, 1)));
        assert_eq!(BigRational::inv_sqrt(2, &f), None);
    }
}
