use serde::{Deserialize, Serialize};

use crate::scalar::{Field, FieldDescriptor, Scalar};

use super::{ConfigError, Configuration, GeneratorRule};

/// JSON configuration file.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigFile {
    pub dimension: usize,
    pub field: FieldDescriptor,
    pub generators: Vec<GeneratorSpec>,
}

/// One generator entry; scalars use the literal grammar.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum GeneratorSpec {
    Pattern {
        entries: Vec<(String, usize)>,
    },
    SubsetSigns {
        support: usize,
        sign_counts: Vec<usize>,
        /// Defaults to `1/√support` when representable in the field.
        #[serde(default, skip_serializing_if = "Option::is_none")]
        value: Option<String>,
    },
    SubsetValues {
        support: usize,
        a: String,
        b: String,
    },
}

fn file_error(field: impl Into<String>, message: impl ToString) -> ConfigError {
    ConfigError::File {
        field: field.into(),
        message: message.to_string(),
    }
}

impl ConfigFile {
    pub fn parse(text: &str) -> Result<Self, ConfigError> {
        let file: ConfigFile = serde_json::from_str(text).map_err(|e| file_error("json", e))?;
        file.field.validate().map_err(|e| file_error("field", e))?;
        if file.dimension == 0 {
            return Err(file_error("dimension", "must be positive"));
        }
        if file.generators.is_empty() {
            return Err(file_error("generators", "at least one generator is required"));
        }
        Ok(file)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("config serializes")
    }

    /// Describes existing rules in file form.
    pub fn from_rules<F: Field>(
        dimension: usize,
        field: FieldDescriptor,
        rules: &[GeneratorRule<F>],
    ) -> Self {
        let generators = rules
            .iter()
            .map(|rule| match rule {
                GeneratorRule::Pattern { entries } => GeneratorSpec::Pattern {
                    entries: entries.iter().map(|(v, k)| (v.to_string(), *k)).collect(),
                },
                GeneratorRule::SubsetSigns {
                    support,
                    sign_counts,
                    value,
                } => GeneratorSpec::SubsetSigns {
                    support: *support,
                    sign_counts: sign_counts.iter().copied().collect(),
                    value: Some(value.to_string()),
                },
                GeneratorRule::SubsetValues { support, a, b } => GeneratorSpec::SubsetValues {
                    support: *support,
                    a: a.to_string(),
                    b: b.to_string(),
                },
            })
            .collect();
        ConfigFile {
            dimension,
            field,
            generators,
        }
    }

    /// Converts the generators into rules over the backend `F`, evaluating
    /// literals in `field` (which may differ from the file's own field when
    /// a float backend is forced).
    pub fn rules<F: Field>(&self, field: &FieldDescriptor) -> Result<Vec<GeneratorRule<F>>, ConfigError> {
        let scalar = |literal: &str, path: String| -> Result<F, ConfigError> {
            let parsed = Scalar::parse(literal, &self.field).map_err(|e| file_error(&path, e))?;
            let parsed = match field {
                FieldDescriptor::Float => Scalar::Float(parsed.to_f64()),
                _ => parsed,
            };
            F::from_scalar(&parsed).map_err(|e| file_error(path, e))
        };
        let mut rules = Vec::with_capacity(self.generators.len());
        for (i, spec) in self.generators.iter().enumerate() {
            let at = |name: &str| format!("generators[{i}].{name}");
            let rule = match spec {
                GeneratorSpec::Pattern { entries } => GeneratorRule::Pattern {
                    entries: entries
                        .iter()
                        .enumerate()
                        .map(|(j, (v, k))| Ok((scalar(v, at(&format!("entries[{j}]")))?, *k)))
                        .collect::<Result<_, ConfigError>>()?,
                },
                GeneratorSpec::SubsetSigns {
                    support,
                    sign_counts,
                    value,
                } => {
                    let value = match value {
                        Some(v) => scalar(v, at("value"))?,
                        None => F::inv_sqrt(*support as u64, field).ok_or_else(|| {
                            file_error(
                                at("value"),
                                format!("1/sqrt({support}) is not in field {field}"),
                            )
                        })?,
                    };
                    GeneratorRule::subset_signs(*support, sign_counts.iter().copied(), value)
                }
                GeneratorSpec::SubsetValues { support, a, b } => GeneratorRule::subset_values(
                    *support,
                    scalar(a, at("a"))?,
                    scalar(b, at("b"))?,
                ),
            };
            rule.check(self.dimension).map_err(|e| match e {
                ConfigError::InvalidRule(msg) => file_error(format!("generators[{i}]"), msg),
                other => other,
            })?;
            rules.push(rule);
        }
        Ok(rules)
    }

    pub fn build<F: Field>(&self, field: FieldDescriptor) -> Result<Configuration<F>, ConfigError> {
        Configuration::from_rules(self.dimension, field, self.rules(&field)?)
    }
}
