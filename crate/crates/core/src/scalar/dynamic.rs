use std::cmp::Ordering;
use std::fmt;

use num_rational::BigRational;

use super::decimal::{quadratic_to_decimal, rational_to_decimal};
use super::literal::parse_literal;
use super::{Field, FieldDescriptor, Quadratic, ScalarError};

/// A field element tagged with its backend.
#[derive(Clone, Debug, PartialEq)]
pub enum Scalar {
    Rational(BigRational),
    Quadratic(Quadratic),
    Float(f64),
}

impl Scalar {
    /// Parses the scalar literal grammar inside `field`.
    pub fn parse(literal: &str, field: &FieldDescriptor) -> Result<Self, ScalarError> {
        parse_literal(literal, field)
    }

    pub fn field(&self) -> FieldDescriptor {
        match self {
            Scalar::Rational(_) => FieldDescriptor::Rational,
            Scalar::Quadratic(q) => match q.radicand() {
                Some(d) => FieldDescriptor::Quadratic { d },
                None => FieldDescriptor::Rational,
            },
            Scalar::Float(_) => FieldDescriptor::Float,
        }
    }

    /// -1, 0 or +1. Exact on the exact backends.
    pub fn sign(&self) -> i8 {
        let s = match self {
            Scalar::Rational(r) => r.signum(),
            Scalar::Quadratic(q) => q.sign(),
            Scalar::Float(x) => Field::signum(x),
        };
        s as i8
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Scalar::Rational(r) => r.to_f64(),
            Scalar::Quadratic(q) => q.to_f64(),
            Scalar::Float(x) => *x,
        }
    }

    /// Decimal expansion rounded to `digits` places (half away from zero).
    pub fn to_decimal(&self, digits: usize) -> String {
        match self {
            Scalar::Rational(r) => rational_to_decimal(r, digits),
            Scalar::Quadratic(q) => quadratic_to_decimal(q, digits),
            Scalar::Float(x) => format!("{x:.digits$}"),
        }
    }

    fn binary(
        &self,
        other: &Scalar,
        op: fn(&Quadratic, &Quadratic) -> Result<Quadratic, ScalarError>,
        float_op: fn(f64, f64) -> f64,
    ) -> Result<Scalar, ScalarError> {
        match (self, other) {
            (Scalar::Float(x), Scalar::Float(y)) => Ok(Scalar::Float(float_op(*x, *y))),
            (Scalar::Float(_), o) | (o, Scalar::Float(_)) => Err(ScalarError::FieldMismatch(
                FieldDescriptor::Float,
                o.field(),
            )),
            (Scalar::Rational(x), Scalar::Rational(y)) => {
                let r = op(
                    &Quadratic::from_rational(x.clone()),
                    &Quadratic::from_rational(y.clone()),
                )?;
                Ok(Scalar::Rational(r.rational_part().clone()))
            }
            (x, y) => Ok(Scalar::Quadratic(op(&x.as_quadratic(), &y.as_quadratic())?)),
        }
    }

    fn as_quadratic(&self) -> Quadratic {
        match self {
            Scalar::Rational(r) => Quadratic::from_rational(r.clone()),
            Scalar::Quadratic(q) => q.clone(),
            Scalar::Float(_) => unreachable!("float handled by caller"),
        }
    }

    pub fn checked_add(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        self.binary(other, Quadratic::checked_add, |x, y| x + y)
    }

    pub fn checked_sub(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        self.binary(other, Quadratic::checked_sub, |x, y| x - y)
    }

    pub fn checked_mul(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        self.binary(other, Quadratic::checked_mul, |x, y| x * y)
    }

    pub fn checked_div(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        if other.sign() == 0 {
            return Err(ScalarError::DivisionByZero);
        }
        self.binary(other, Quadratic::checked_div, |x, y| x / y)
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Rational(r) => Scalar::Rational(-r.clone()),
            Scalar::Quadratic(q) => Scalar::Quadratic(-q.clone()),
            Scalar::Float(x) => Scalar::Float(-x),
        }
    }

    /// Exact comparison on the exact backends, native on float.
    pub fn compare(&self, other: &Scalar) -> Result<Ordering, ScalarError> {
        let diff = self.checked_sub(other)?;
        Ok(diff.sign().cmp(&0))
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => write!(f, "{}", super::rational_literal(r)),
            Scalar::Quadratic(q) => write!(f, "{q}"),
            Scalar::Float(x) => write!(f, "{x:?}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rational;

    #[test]
    fn mixed_rational_and_quadratic() {
        let f = FieldDescriptor::Quadratic { d: 2 };
        let x = Scalar::parse("1+1*sqrt(2)", &f).unwrap();
        let one = Scalar::Rational(rational(1, 1));
        let inv = one.checked_div(&x).unwrap();
        assert_eq!(inv.to_string(), "-1+1*sqrt(2)");
    }

    #[test]
    fn float_mismatch() {
        let x = Scalar::Float(0.5);
        let y = Scalar::Rational(rational(1, 2));
        assert!(matches!(
            x.checked_add(&y),
            Err(ScalarError::FieldMismatch(..))
        ));
        assert_eq!(
            y.checked_div(&Scalar::Rational(rational(0, 1))),
            Err(ScalarError::DivisionByZero)
        );
    }

    #[test]
    fn reduced_sum() {
        let a = Scalar::Rational(rational(2, 4));
        let b = Scalar::Rational(rational(1, 4));
        assert_eq!(a.checked_add(&b).unwrap().to_string(), "3/4");
    }
}
