use std::collections::BTreeSet;

use crate::scalar::Field;

use super::{sort_dedup, ConfigError};

/// A generating rule for a point configuration. Every variant expands to a
/// set closed under negation.
#[derive(Debug, Clone, PartialEq)]
pub enum GeneratorRule<F> {
    /// The vector `(x₁^{n₁}, x₂^{n₂}, …)` under all coordinate permutations
    /// and negation.
    Pattern { entries: Vec<(F, usize)> },
    /// All vectors with exactly `support` nonzero coordinates, each `±value`,
    /// whose number of negative entries lies in `sign_counts`.
    SubsetSigns {
        support: usize,
        sign_counts: BTreeSet<usize>,
        value: F,
    },
    /// `a` on `support` coordinates and `b` on the rest, plus negatives.
    SubsetValues { support: usize, a: F, b: F },
}

impl<F: Field> GeneratorRule<F> {
    pub fn subset_signs(support: usize, sign_counts: impl IntoIterator<Item = usize>, value: F) -> Self {
        GeneratorRule::SubsetSigns {
            support,
            sign_counts: sign_counts.into_iter().collect(),
            value,
        }
    }

    pub fn subset_values(support: usize, a: F, b: F) -> Self {
        GeneratorRule::SubsetValues { support, a, b }
    }

    pub fn check(&self, n: usize) -> Result<(), ConfigError> {
        match self {
            GeneratorRule::Pattern { entries } => {
                let total: usize = entries.iter().map(|(_, k)| k).sum();
                if total != n {
                    return Err(ConfigError::InvalidRule(format!(
                        "pattern multiplicities sum to {total}, expected {n}"
                    )));
                }
                if entries.iter().all(|(v, k)| *k == 0 || v.is_zero()) {
                    return Err(ConfigError::InvalidRule("pattern is the zero vector".into()));
                }
            }
            GeneratorRule::SubsetSigns {
                support,
                sign_counts,
                value,
            } => {
                check_support(*support, n)?;
                if *support == 0 {
                    return Err(ConfigError::InvalidRule("support must be positive".into()));
                }
                if sign_counts.is_empty() {
                    return Err(ConfigError::InvalidRule("sign_counts is empty".into()));
                }
                if let Some(&k) = sign_counts.iter().find(|&&k| k > *support) {
                    return Err(ConfigError::InvalidRule(format!(
                        "sign count {k} exceeds support {support}"
                    )));
                }
                if sign_counts.iter().any(|k| !sign_counts.contains(&(support - k))) {
                    return Err(ConfigError::InvalidRule(
                        "sign_counts not negation-symmetric".into(),
                    ));
                }
                if value.is_zero() {
                    return Err(ConfigError::InvalidRule("value must be nonzero".into()));
                }
            }
            GeneratorRule::SubsetValues { support, a, b } => {
                check_support(*support, n)?;
                let zero_a = a.is_zero() || *support == 0;
                let zero_b = b.is_zero() || *support == n;
                if zero_a && zero_b {
                    return Err(ConfigError::InvalidRule(
                        "subset_values produces the zero vector".into(),
                    ));
                }
            }
        }
        Ok(())
    }
}

fn check_support(m: usize, n: usize) -> Result<(), ConfigError> {
    if m > n {
        return Err(ConfigError::InvalidRule(format!(
            "support {m} exceeds dimension {n}"
        )));
    }
    Ok(())
}

/// Calls `visit` with every `m`-subset of `0..n` in lexicographic order.
pub(crate) fn for_each_combination(n: usize, m: usize, mut visit: impl FnMut(&[usize])) {
    if m > n {
        return;
    }
    let mut idx: Vec<usize> = (0..m).collect();
    loop {
        visit(&idx);
        let Some(i) = (0..m).rev().find(|&i| idx[i] != i + n - m) else {
            return;
        };
        idx[i] += 1;
        for j in i + 1..m {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

fn next_permutation<F: Field>(v: &mut [F]) -> bool {
    let Some(i) = (0..v.len().saturating_sub(1))
        .rev()
        .find(|&i| v[i].cmp_total(&v[i + 1]).is_lt())
    else {
        return false;
    };
    let j = (i + 1..v.len())
        .rev()
        .find(|&j| v[i].cmp_total(&v[j]).is_lt())
        .expect("successor exists");
    v.swap(i, j);
    v[i + 1..].reverse();
    true
}

/// Expands `rule` in dimension `n` into its duplicate-free vector list,
/// sorted lexicographically.
pub fn expand<F: Field>(rule: &GeneratorRule<F>, n: usize) -> Result<Vec<Vec<F>>, ConfigError> {
    rule.check(n)?;
    let mut out = Vec::new();
    match rule {
        GeneratorRule::Pattern { entries } => {
            let mut v: Vec<F> = entries
                .iter()
                .flat_map(|(x, k)| std::iter::repeat_n(x.clone(), *k))
                .collect();
            v.sort_by(|a, b| a.cmp_total(b));
            loop {
                out.push(v.iter().map(|x| -x.clone()).collect());
                out.push(v.clone());
                if !next_permutation(&mut v) {
                    break;
                }
            }
        }
        GeneratorRule::SubsetSigns {
            support,
            sign_counts,
            value,
        } => {
            let m = *support;
            for_each_combination(n, m, |comb| {
                for mask in 0u64..(1u64 << m) {
                    if !sign_counts.contains(&(mask.count_ones() as usize)) {
                        continue;
                    }
                    let mut v = vec![F::zero(); n];
                    for (bit, &coord) in comb.iter().enumerate() {
                        v[coord] = if mask >> bit & 1 == 1 {
                            -value.clone()
                        } else {
                            value.clone()
                        };
                    }
                    out.push(v);
                }
            });
        }
        GeneratorRule::SubsetValues { support, a, b } => {
            for_each_combination(n, *support, |comb| {
                let mut v = vec![b.clone(); n];
                for &coord in comb {
                    v[coord] = a.clone();
                }
                out.push(v.iter().map(|x| -x.clone()).collect());
                out.push(v);
            });
        }
    }
    Ok(sort_dedup(out))
}
