use crate::scalar::{rational, Scalar};

/// Float margins on cos² below this are reported as inconclusive.
pub const INCONCLUSIVE_MARGIN: f64 = 1e-6;

#[derive(Debug, Clone, PartialEq)]
pub struct ThresholdVerdict {
    pub passes: bool,
    /// `cos2 − (n−1)/(2n)`
    pub margin: Scalar,
    /// `threshold_radius(n) − arccos √cos2`
    pub radius_margin: f64,
    /// Float result too close to the threshold to trust either way.
    pub inconclusive: bool,
}

/// `(n−1)/(2n)` in the same kind of scalar as `like`.
pub fn threshold_cos2(n: usize, like: &Scalar) -> Scalar {
    let (num, den) = (n as i64 - 1, 2 * n as i64);
    match like {
        Scalar::Float(_) => Scalar::Float(num as f64 / den as f64),
        _ => Scalar::Rational(rational(num, den)),
    }
}

/// `arccos √((n−1)/(2n))`
pub fn threshold_radius(n: usize) -> f64 {
    ((n as f64 - 1.0) / (2.0 * n as f64)).sqrt().acos()
}

/// Decides `cos2 ≥ (n−1)/(2n)`, exactly unless `cos2` is a float.
pub fn threshold_check(n: usize, cos2: &Scalar) -> ThresholdVerdict {
    let threshold = threshold_cos2(n, cos2);
    let margin = cos2
        .checked_sub(&threshold)
        .expect("threshold is built in a compatible field");
    let passes = margin.sign() >= 0;
    let inconclusive = matches!(margin, Scalar::Float(m) if m.abs() < INCONCLUSIVE_MARGIN);
    ThresholdVerdict {
        passes,
        radius_margin: threshold_radius(n) - cos2.to_f64().sqrt().acos(),
        margin,
        inconclusive,
    }
}
