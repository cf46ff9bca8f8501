use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::{is_square_free, FieldDescriptor, Quadratic, Scalar, ScalarError};

fn parse_error(literal: &str, reason: impl Into<String>) -> ScalarError {
    ScalarError::Parse {
        literal: literal.to_string(),
        reason: reason.into(),
    }
}

/// `rat := ["-"] integer ["/" positive-integer]`
fn parse_rat(text: &str, literal: &str) -> Result<BigRational, ScalarError> {
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (text, None),
    };
    let digits = num.strip_prefix('-').unwrap_or(num);
    if digits.is_empty() || !digits.bytes().all(|c| c.is_ascii_digit()) {
        return Err(parse_error(literal, format!("bad integer {num:?}")));
    }
    let num: BigInt = num
        .parse()
        .map_err(|_| parse_error(literal, format!("bad integer {num:?}")))?;
    let den: BigInt = match den {
        Some(d) => {
            if d.is_empty() || !d.bytes().all(|c| c.is_ascii_digit()) {
                return Err(parse_error(literal, format!("bad denominator {d:?}")));
            }
            d.parse()
                .map_err(|_| parse_error(literal, format!("bad denominator {d:?}")))?
        }
        None => BigInt::from(1),
    };
    if den.is_zero() {
        return Err(parse_error(literal, "zero denominator"));
    }
    Ok(BigRational::new(num, den))
}

/// Splits `a±b` at the first sign that follows a digit.
fn split_sum(text: &str) -> Option<(&str, bool, &str)> {
    let bytes = text.as_bytes();
    (1..bytes.len()).find_map(|i| {
        let c = bytes[i];
        if (c == b'+' || c == b'-') && bytes[i - 1].is_ascii_digit() {
            Some((&text[..i], c == b'-', &text[i + 1..]))
        } else {
            None
        }
    })
}

pub(super) fn parse_literal(literal: &str, field: &FieldDescriptor) -> Result<Scalar, ScalarError> {
    field.validate()?;
    let text = literal.trim();
    let Some(idx) = text.find("*sqrt(") else {
        if *field == FieldDescriptor::Float {
            if let Ok(r) = parse_rat(text, literal) {
                return Ok(Scalar::Float(super::rational::rational_to_f64(&r)));
            }
            return text
                .parse::<f64>()
                .ok()
                .filter(|x| x.is_finite())
                .map(Scalar::Float)
                .ok_or_else(|| parse_error(literal, "not a number"));
        }
        let r = parse_rat(text, literal)?;
        return Ok(match field {
            FieldDescriptor::Quadratic { .. } => Scalar::Quadratic(Quadratic::from_rational(r)),
            _ => Scalar::Rational(r),
        });
    };

    let head = &text[..idx];
    let radicand = text[idx + "*sqrt(".len()..]
        .strip_suffix(')')
        .ok_or_else(|| parse_error(literal, "unterminated sqrt("))?;
    if radicand.is_empty() || !radicand.bytes().all(|c| c.is_ascii_digit()) {
        return Err(parse_error(literal, format!("bad sqrt argument {radicand:?}")));
    }
    let radicand: u32 = radicand
        .parse()
        .map_err(|_| parse_error(literal, "sqrt argument too large"))?;

    let (a, b) = match split_sum(head) {
        Some((a, negative, b)) => {
            let a = parse_rat(a, literal)?;
            let b = parse_rat(b, literal)?;
            (a, if negative { -b } else { b })
        }
        None => (BigRational::zero(), parse_rat(head, literal)?),
    };

    match *field {
        FieldDescriptor::Float => {
            let a = super::rational::rational_to_f64(&a);
            let b = super::rational::rational_to_f64(&b);
            Ok(Scalar::Float(a + b * (radicand as f64).sqrt()))
        }
        FieldDescriptor::Rational => Err(parse_error(
            literal,
            "square roots are not allowed in the rational field",
        )),
        FieldDescriptor::Quadratic { d } => {
            if radicand != d {
                return Err(parse_error(
                    literal,
                    format!("sqrt argument {radicand} does not match field d = {d}"),
                ));
            }
            debug_assert!(is_square_free(d as u64));
            Ok(Scalar::Quadratic(Quadratic::new(a, b, d)))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rational;

    const Q2: FieldDescriptor = FieldDescriptor::Quadratic { d: 2 };

    #[test]
    fn grammar_examples() {
        let q = FieldDescriptor::Rational;
        assert_eq!(
            Scalar::parse("2", &q).unwrap(),
            Scalar::Rational(rational(2, 1))
        );
        assert_eq!(
            Scalar::parse("-1/2", &q).unwrap(),
            Scalar::Rational(rational(-1, 2))
        );
        let x = Scalar::parse("1/2*sqrt(2)", &Q2).unwrap();
        assert_eq!(x.to_string(), "1/2*sqrt(2)");
        let x = Scalar::parse("19+12*sqrt(2)", &Q2).unwrap();
        assert_eq!(x.to_string(), "19+12*sqrt(2)");
        let x = Scalar::parse("-1/2-3/4*sqrt(2)", &Q2).unwrap();
        assert_eq!(x.to_string(), "-1/2-3/4*sqrt(2)");
        let x = Scalar::parse("1--2*sqrt(2)", &Q2).unwrap();
        assert_eq!(x.to_string(), "1+2*sqrt(2)");
    }

    #[test]
    fn rejects_malformed() {
        let q = FieldDescriptor::Rational;
        assert!(Scalar::parse("", &q).is_err());
        assert!(Scalar::parse("1/0", &q).is_err());
        assert!(Scalar::parse("1/-2", &q).is_err());
        assert!(Scalar::parse("abc", &q).is_err());
        assert!(Scalar::parse("1*sqrt(2)", &q).is_err());
        assert!(Scalar::parse("1*sqrt(3)", &Q2).is_err());
        assert!(Scalar::parse("1*sqrt(2", &Q2).is_err());
    }

    #[test]
    fn float_field_accepts_decimals_and_roots() {
        let f = FieldDescriptor::Float;
        assert_eq!(Scalar::parse("0.25", &f).unwrap(), Scalar::Float(0.25));
        assert_eq!(Scalar::parse("1/4", &f).unwrap(), Scalar::Float(0.25));
        let Scalar::Float(x) = Scalar::parse("1/3*sqrt(3)", &f).unwrap() else {
            panic!()
        };
        assert!((x - 1.0 / 3f64.sqrt()).abs() < 1e-15);
    }
}
