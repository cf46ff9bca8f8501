use std::path::Path;

use num_rational::BigRational;

use crate::scalar::{FieldDescriptor, Quadratic};

use super::{build_table1, table1_field, ConfigError, ConfigFile, Configuration};

/// Which arithmetic to run a configuration in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Backend {
    /// The configuration's own field.
    #[default]
    Auto,
    /// Require the configuration's own exact field.
    Exact,
    /// Force double precision.
    Float,
}

impl Backend {
    fn resolve(self, native: FieldDescriptor) -> Result<FieldDescriptor, ConfigError> {
        match self {
            Backend::Auto => Ok(native),
            Backend::Float => Ok(FieldDescriptor::Float),
            Backend::Exact if native.is_exact() => Ok(native),
            Backend::Exact => Err(ConfigError::UnsupportedField {
                field: native,
                what: "an exact computation (no single quadratic field holds its coordinates)"
                    .into(),
            }),
        }
    }
}

/// A configuration over whichever backend its field selects.
#[derive(Debug, Clone)]
pub enum AnyConfiguration {
    Rational(Configuration<BigRational>),
    Quadratic(Configuration<Quadratic>),
    Float(Configuration<f64>),
}

/// Runs a generic expression against the configuration inside an
/// [`AnyConfiguration`].
#[macro_export]
macro_rules! with_configuration {
    ($any:expr, $c:ident => $body:expr) => {
        match $any {
            $crate::config::AnyConfiguration::Rational($c) => $body,
            $crate::config::AnyConfiguration::Quadratic($c) => $body,
            $crate::config::AnyConfiguration::Float($c) => $body,
        }
    };
}

impl AnyConfiguration {
    pub fn table1(n: usize, backend: Backend) -> Result<Self, ConfigError> {
        let field = backend.resolve(table1_field(n)?)?;
        Ok(match field {
            FieldDescriptor::Rational => AnyConfiguration::Rational(build_table1(n, field)?),
            FieldDescriptor::Quadratic { .. } => {
                AnyConfiguration::Quadratic(build_table1(n, field)?)
            }
            FieldDescriptor::Float => AnyConfiguration::Float(build_table1(n, field)?),
        })
    }

    pub fn from_file(file: &ConfigFile, backend: Backend) -> Result<Self, ConfigError> {
        let field = backend.resolve(file.field)?;
        Ok(match field {
            FieldDescriptor::Rational => AnyConfiguration::Rational(file.build(field)?),
            FieldDescriptor::Quadratic { .. } => AnyConfiguration::Quadratic(file.build(field)?),
            FieldDescriptor::Float => AnyConfiguration::Float(file.build(field)?),
        })
    }

    /// Resolves `table1:<n>` or a path to a JSON configuration file.
    pub fn load(source: &str, backend: Backend) -> Result<Self, ConfigError> {
        if let Some(n) = source.strip_prefix("table1:") {
            let n: usize = n.parse().map_err(|_| ConfigError::File {
                field: "source".into(),
                message: format!("bad built-in name {source:?}"),
            })?;
            return Self::table1(n, backend);
        }
        let text = std::fs::read_to_string(Path::new(source)).map_err(|e| ConfigError::File {
            field: "path".into(),
            message: format!("{source}: {e}"),
        })?;
        Self::from_file(&ConfigFile::parse(&text)?, backend)
    }

    pub fn dimension(&self) -> usize {
        with_configuration!(self, c => c.dimension)
    }

    pub fn len(&self) -> usize {
        with_configuration!(self, c => c.len())
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn field(&self) -> FieldDescriptor {
        with_configuration!(self, c => c.field)
    }

    pub fn to_file(&self) -> ConfigFile {
        with_configuration!(self, c => ConfigFile::from_rules(c.dimension, c.field, &c.rules))
    }
}
