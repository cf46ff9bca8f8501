use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::rational::{rational_literal, rational_to_f64};
use super::{square_part, FieldDescriptor, Scalar, ScalarError};

/// An element `a + b√d` of a real quadratic field.
///
/// `d == 0` marks a value built without field context (for instance
/// [`Field::zero`]); such values always have `b == 0` and combine with any
/// field. Mixing two different nonzero `d` with irrational parts panics in
/// the operator impls; the `checked_*` methods report it as an error.
#[derive(Clone)]
pub struct Quadratic {
    a: BigRational,
    b: BigRational,
    d: u32,
}

impl Quadratic {
    pub fn new(a: BigRational, b: BigRational, d: u32) -> Self {
        assert!(d != 0 || b.is_zero(), "irrational part needs a field");
        Quadratic { a, b, d }
    }

    pub fn from_rational(a: BigRational) -> Self {
        Quadratic {
            a,
            b: <BigRational as Zero>::zero(),
            d: 0,
        }
    }

    pub fn rational_part(&self) -> &BigRational {
        &self.a
    }

    pub fn irrational_part(&self) -> &BigRational {
        &self.b
    }

    /// The radicand, or `None` for a value carrying no field.
    pub fn radicand(&self) -> Option<u32> {
        (self.d != 0).then_some(self.d)
    }

    pub fn conjugate(&self) -> Self {
        Quadratic {
            a: self.a.clone(),
            b: -self.b.clone(),
            d: self.d,
        }
    }

    /// `a² − b²d`.
    pub fn norm(&self) -> BigRational {
        &self.a * &self.a - &self.b * &self.b * BigRational::from_integer(self.d.into())
    }

    fn merge_radicand(&self, other: &Self) -> Result<u32, ScalarError> {
        match (self.d, other.d) {
            (x, y) if x == y => Ok(x),
            (0, y) => Ok(y),
            (x, 0) => Ok(x),
            (_, y) if Zero::is_zero(&self.b) => Ok(y),
            (x, _) if Zero::is_zero(&other.b) => Ok(x),
            (x, y) => Err(ScalarError::FieldMismatch(
                FieldDescriptor::Quadratic { d: x },
                FieldDescriptor::Quadratic { d: y },
            )),
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, ScalarError> {
        let d = self.merge_radicand(other)?;
        Ok(Quadratic {
            a: &self.a + &other.a,
            b: &self.b + &other.b,
            d,
        })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, ScalarError> {
        let d = self.merge_radicand(other)?;
        Ok(Quadratic {
            a: &self.a - &other.a,
            b: &self.b - &other.b,
            d,
        })
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, ScalarError> {
        let d = self.merge_radicand(other)?;
        let dd = BigRational::from_integer(d.into());
        Ok(Quadratic {
            a: &self.a * &other.a + &self.b * &other.b * dd,
            b: &self.a * &other.b + &other.a * &self.b,
            d,
        })
    }

    pub fn checked_inv(&self) -> Result<Self, ScalarError> {
        let norm = self.norm();
        if Zero::is_zero(&norm) {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Quadratic {
            a: &self.a / &norm,
            b: -(&self.b / &norm),
            d: self.d,
        })
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self, ScalarError> {
        self.checked_mul(&other.checked_inv()?)
    }

    /// Exact sign of `a + b√d`.
    pub fn sign(&self) -> Ordering {
        let sa = super::Field::signum(&self.a);
        let sb = super::Field::signum(&self.b);
        if sb == Ordering::Equal {
            return sa;
        }
        if sa == Ordering::Equal || sa == sb {
            return sb;
        }
        // opposite signs: sign(a) * sign(a² − b²d)
        let n = super::Field::signum(&self.norm());
        if sa == Ordering::Greater {
            n
        } else {
            n.reverse()
        }
    }
}

impl PartialEq for Quadratic {
    fn eq(&self, other: &Self) -> bool {
        self.a == other.a
            && self.b == other.b
            && (Zero::is_zero(&self.b) || self.d == other.d || self.d == 0 || other.d == 0)
    }
}

impl Eq for Quadratic {}

impl Hash for Quadratic {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.a.hash(state);
        self.b.hash(state);
    }
}

impl PartialOrd for Quadratic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Quadratic {
    fn cmp(&self, other: &Self) -> Ordering {
        if self.b == other.b {
            return self.a.cmp(&other.a);
        }
        (self - other).sign()
    }
}

impl fmt::Debug for Quadratic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Quadratic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if Zero::is_zero(&self.b) {
            return write!(f, "{}", rational_literal(&self.a));
        }
        let b = rational_literal(&Signed::abs(&self.b));
        if Zero::is_zero(&self.a) {
            let sign = if self.b.is_negative() { "-" } else { "" };
            return write!(f, "{sign}{b}*sqrt({})", self.d);
        }
        let op = if self.b.is_negative() { '-' } else { '+' };
        write!(f, "{}{op}{b}*sqrt({})", rational_literal(&self.a), self.d)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl<'a, 'b> $trait<&'b Quadratic> for &'a Quadratic {
            type Output = Quadratic;
            fn $method(self, rhs: &'b Quadratic) -> Quadratic {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl<'a> $trait<&'a Quadratic> for Quadratic {
            type Output = Quadratic;
            fn $method(self, rhs: &'a Quadratic) -> Quadratic {
                (&self).$method(rhs)
            }
        }
        impl $trait<Quadratic> for Quadratic {
            type Output = Quadratic;
            fn $method(self, rhs: Quadratic) -> Quadratic {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);
forward_binop!(Div, div, checked_div);

impl Neg for Quadratic {
    type Output = Quadratic;
    fn neg(self) -> Quadratic {
        Quadratic {
            a: -self.a,
            b: -self.b,
            d: self.d,
        }
    }
}

impl super::Field for Quadratic {
    const EXACT: bool = true;

    fn zero() -> Self {
        Quadratic::from_rational(<BigRational as Zero>::zero())
    }

    fn one() -> Self {
        Quadratic::from_rational(<BigRational as One>::one())
    }

    fn from_rational(r: &BigRational) -> Self {
        Quadratic::from_rational(r.clone())
    }

    fn signum(&self) -> Ordering {
        self.sign()
    }

    fn to_f64(&self) -> f64 {
        if Zero::is_zero(&self.b) {
            return rational_to_f64(&self.a);
        }
        let root = (self.d as f64).sqrt();
        if super::Field::signum(&self.a) == super::Field::signum(&self.b) || Zero::is_zero(&self.a) {
            rational_to_f64(&self.a) + rational_to_f64(&self.b) * root
        } else {
            // avoid cancellation: (a² − b²d) / (a − b√d)
            let denom = rational_to_f64(&self.a) - rational_to_f64(&self.b) * root;
            rational_to_f64(&self.norm()) / denom
        }
    }

    fn to_scalar(&self) -> Scalar {
        Scalar::Quadratic(self.clone())
    }

    fn from_scalar(s: &Scalar) -> Result<Self, ScalarError> {
        match s {
            Scalar::Rational(r) => Ok(Quadratic::from_rational(r.clone())),
            Scalar::Quadratic(q) => Ok(q.clone()),
            Scalar::Float(_) => Err(ScalarError::FieldMismatch(
                FieldDescriptor::Float,
                FieldDescriptor::Quadratic { d: 0 },
            )),
        }
    }

    fn inv_sqrt(m: u64, field: &FieldDescriptor) -> Option<Self> {
        if m == 0 {
            return None;
        }
        let (s, t) = square_part(m);
        let s = BigRational::from_integer(s.into());
        if t == 1 {
            return Some(Quadratic::from_rational(s.recip()));
        }
        match *field {
            FieldDescriptor::Quadratic { d } if d as u64 == t => {
                let b = (s * BigRational::from_integer(d.into())).recip();
                Some(Quadratic::new(<BigRational as Zero>::zero(), b, d))
            }
            _ => None,
        }
    }

    fn inv(&self) -> Option<Self> {
        self.checked_inv().ok()
    }

    fn cmp_total(&self, other: &Self) -> Ordering {
        self.cmp(other)
    }
}
