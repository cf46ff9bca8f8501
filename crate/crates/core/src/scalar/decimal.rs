use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::Quadratic;

fn pow10(k: usize) -> BigInt {
    num_traits::pow(BigInt::from(10), k)
}

fn render(negative: bool, scaled: BigInt, digits: usize) -> String {
    let (int, frac) = scaled.div_rem(&pow10(digits));
    let sign = if negative && !scaled.is_zero() { "-" } else { "" };
    if digits == 0 {
        format!("{sign}{int}")
    } else {
        format!("{sign}{int}.{:0>digits$}", frac.to_string())
    }
}

fn floor_rational(r: &BigRational) -> BigInt {
    r.numer().div_floor(r.denom())
}

pub(super) fn rational_to_decimal(r: &BigRational, digits: usize) -> String {
    let scaled = r.abs() * BigRational::from_integer(pow10(digits))
        + BigRational::new(1.into(), 2.into());
    render(r.is_negative(), floor_rational(&scaled), digits)
}

/// Exact `floor(w)` for a quadratic number.
fn floor_quadratic(w: &Quadratic) -> BigInt {
    let d = BigRational::from_integer(w.radicand().unwrap_or(0).into());
    let b = w.irrational_part();
    let root = floor_rational(&(b * b * d)).sqrt();
    let mut guess = floor_rational(w.rational_part())
        + if b.is_negative() { -root - 1 } else { root };
    let at = |n: &BigInt| w.clone() - Quadratic::from_rational(BigRational::from_integer(n.clone()));
    while at(&guess).sign() == Ordering::Less {
        guess -= 1;
    }
    while at(&(&guess + 1)).sign() != Ordering::Less {
        guess += 1;
    }
    guess
}

pub(super) fn quadratic_to_decimal(q: &Quadratic, digits: usize) -> String {
    if q.irrational_part().is_zero() {
        return rational_to_decimal(q.rational_part(), digits);
    }
    let negative = q.sign() == Ordering::Less;
    let magnitude = if negative { -q.clone() } else { q.clone() };
    let w = magnitude * Quadratic::from_rational(BigRational::from_integer(pow10(digits)))
        + Quadratic::from_rational(BigRational::new(1.into(), 2.into()));
    render(negative, floor_quadratic(&w), digits)
}
