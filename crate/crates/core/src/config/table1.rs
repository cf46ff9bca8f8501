//! The built-in constructions for dimensions 5 through 15.
//!
//! For n = 5 the set holds only the `(2², 0³)` and `(2, (−1)⁴)` orbits, 30
//! points. Adding the `(2, −2, 0³)` orbit would give 50.

use std::collections::BTreeSet;

use crate::scalar::{Field, FieldDescriptor};

use super::{ConfigError, Configuration, GeneratorRule};

pub const TABLE1_DIMENSIONS: std::ops::RangeInclusive<usize> = 5..=15;

/// `|A|` for n = 5..=15.
pub const TABLE1_CARDINALITIES: [usize; 11] = [
    30, 44, 112, 240, 470, 692, 2024, 3832, 7074, 11132, 16442,
];

/// Default backend for a built-in dimension.
pub fn table1_field(n: usize) -> Result<FieldDescriptor, ConfigError> {
    Ok(match n {
        5 | 7 | 8 => FieldDescriptor::Rational,
        6 => FieldDescriptor::Quadratic { d: 6 },
        9 => FieldDescriptor::Quadratic { d: 2 },
        10 => FieldDescriptor::Quadratic { d: 5 },
        11..=15 => FieldDescriptor::Float,
        _ => return Err(ConfigError::DimensionOutOfRange(n)),
    })
}

fn all_counts(m: usize) -> BTreeSet<usize> {
    (0..=m).collect()
}

fn even_counts(m: usize) -> BTreeSet<usize> {
    (0..=m).step_by(2).collect()
}

/// Signs on `m`-subsets with value `1/√k`.
fn inv_sqrt_signs<F: Field>(
    m: usize,
    counts: BTreeSet<usize>,
    k: u64,
    field: &FieldDescriptor,
) -> Result<GeneratorRule<F>, ConfigError> {
    let value = F::inv_sqrt(k, field).ok_or_else(|| ConfigError::UnsupportedField {
        field: *field,
        what: format!("1/sqrt({k})"),
    })?;
    Ok(GeneratorRule::SubsetSigns {
        support: m,
        sign_counts: counts,
        value,
    })
}

fn unit_signs<F: Field>(
    m: usize,
    counts: BTreeSet<usize>,
    field: &FieldDescriptor,
) -> Result<GeneratorRule<F>, ConfigError> {
    inv_sqrt_signs(m, counts, m as u64, field)
}

fn signs<F: Field>(m: usize, counts: BTreeSet<usize>, value: i64) -> GeneratorRule<F> {
    GeneratorRule::SubsetSigns {
        support: m,
        sign_counts: counts,
        value: F::from_i64(value),
    }
}

fn values<F: Field>(m: usize, a: i64, b: i64) -> GeneratorRule<F> {
    GeneratorRule::subset_values(m, F::from_i64(a), F::from_i64(b))
}

/// Generator rules of the built-in configuration in dimension `n`.
pub fn table1_rules<F: Field>(
    n: usize,
    field: &FieldDescriptor,
) -> Result<Vec<GeneratorRule<F>>, ConfigError> {
    let set = |ks: &[usize]| ks.iter().copied().collect::<BTreeSet<_>>();
    Ok(match n {
        5 => vec![values(2, 2, 0), values(1, 2, -1)],
        6 => vec![
            unit_signs(1, all_counts(1), field)?,
            unit_signs(6, even_counts(6), field)?,
        ],
        7 => vec![
            values(2, 17, -1),
            values(2, 13, -7),
            values(1, 23, -3),
            values(1, 17, 7),
        ],
        8 => vec![signs(2, all_counts(2), 2), signs(8, even_counts(8), 1)],
        9 => vec![
            unit_signs(2, all_counts(2), field)?,
            unit_signs(9, set(&[0, 2, 4, 5, 7, 9]), field)?,
        ],
        10 => vec![
            signs(2, all_counts(2), 1),
            inv_sqrt_signs(10, even_counts(10), 5, field)?,
        ],
        11 => vec![
            unit_signs(1, all_counts(1), field)?,
            unit_signs(3, all_counts(3), field)?,
            unit_signs(11, set(&[1, 4, 7, 10]), field)?,
        ],
        12 => vec![
            unit_signs(1, all_counts(1), field)?,
            unit_signs(3, all_counts(3), field)?,
            unit_signs(12, even_counts(12), field)?,
        ],
        13 => vec![
            unit_signs(1, all_counts(1), field)?,
            unit_signs(3, all_counts(3), field)?,
            unit_signs(13, set(&[0, 1, 2, 3, 4, 5, 8, 9, 10, 11, 12, 13]), field)?,
        ],
        14 => vec![
            unit_signs(1, all_counts(1), field)?,
            unit_signs(3, all_counts(3), field)?,
            unit_signs(14, even_counts(14), field)?,
        ],
        15 => vec![
            unit_signs(1, all_counts(1), field)?,
            unit_signs(3, set(&[1, 2]), field)?,
            unit_signs(4, set(&[0, 4]), field)?,
            unit_signs(15, set(&[0, 1, 3, 6, 9, 12, 14, 15]), field)?,
        ],
        _ => return Err(ConfigError::DimensionOutOfRange(n)),
    })
}

/// Builds the built-in configuration for `n` in `field`.
pub fn build_table1<F: Field>(
    n: usize,
    field: FieldDescriptor,
) -> Result<Configuration<F>, ConfigError> {
    let rules = table1_rules::<F>(n, &field)?;
    Configuration::from_rules(n, field, rules)
}
