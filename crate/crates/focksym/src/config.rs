//! Run configuration: grid specifications, fraction parsing, flat
//! key=value config files, and the output-directory environment variable.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use num_bigint::BigInt;
use thiserror::Error;

use focksym_core::models::ModelId;
use focksym_core::Rational;

/// Environment variable naming the default output directory.
pub const ENV_OUTPUT_DIR: &str = "FOCKSYM_OUTPUT_DIR";

/// Default deterministic seed for sample points and solver start vectors.
pub const DEFAULT_SEED: u64 = 0x5EED;

/// Production radial grid.
pub const PRODUCTION_GRID: GridSpec = GridSpec {
    m: 12000,
    r_min: 1e-3,
    r_max: 240.0,
};

/// Reduced grid for fast runs, with the correspondingly relaxed tolerance.
pub const CI_GRID: GridSpec = GridSpec {
    m: 3000,
    r_min: 1e-3,
    r_max: 120.0,
};

pub const PRODUCTION_TOLERANCE: f64 = 1e-3;
pub const CI_TOLERANCE: f64 = 5e-3;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ConfigError {
    #[error("cannot parse `{input}` as a rational (use p or p/q)")]
    BadRational { input: String },
    #[error("cannot parse `{input}` as a grid (use M:RMAX or M:RMIN:RMAX)")]
    BadGrid { input: String },
    #[error("cannot parse `{input}` as a model list")]
    BadModel { input: String },
    #[error("config line {line} is not key=value: `{text}`")]
    BadConfigLine { line: usize, text: String },
}

/// Uniform-grid shape: node count and bounds.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    pub m: usize,
    pub r_min: f64,
    pub r_max: f64,
}

impl GridSpec {
    /// The matching oracle tolerance: production accuracy on fine grids,
    /// relaxed on reduced grids.
    pub fn default_tolerance(&self) -> f64 {
        if self.m >= PRODUCTION_GRID.m {
            PRODUCTION_TOLERANCE
        } else {
            CI_TOLERANCE
        }
    }
}

impl FromStr for GridSpec {
    type Err = ConfigError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || ConfigError::BadGrid {
            input: s.to_string(),
        };
        let parts: Vec<&str> = s.split(':').collect();
        match parts.as_slice() {
            [m, rmax] => Ok(GridSpec {
                m: m.parse().map_err(|_| bad())?,
                r_min: 1e-3,
                r_max: rmax.parse().map_err(|_| bad())?,
            }),
            [m, rmin, rmax] => Ok(GridSpec {
                m: m.parse().map_err(|_| bad())?,
                r_min: rmin.parse().map_err(|_| bad())?,
                r_max: rmax.parse().map_err(|_| bad())?,
            }),
            _ => Err(bad()),
        }
    }
}

/// Parse a rational in fraction syntax: `3`, `1/2`, `-5/2`.
pub fn parse_rational(s: &str) -> Result<Rational, ConfigError> {
    let bad = || ConfigError::BadRational {
        input: s.to_string(),
    };
    let s = s.trim();
    let (sign, body) = match s.strip_prefix('-') {
        Some(rest) => (-1, rest),
        None => (1, s),
    };
    let (num, den) = match body.split_once('/') {
        Some((n, d)) => (n, d),
        None => (body, "1"),
    };
    let n: BigInt = num.parse().map_err(|_| bad())?;
    let d: BigInt = den.parse().map_err(|_| bad())?;
    if d == BigInt::from(0) {
        return Err(bad());
    }
    Ok(Rational::new(n * BigInt::from(sign), d))
}

/// Parse a comma-separated list of rationals.
pub fn parse_rational_list(s: &str) -> Result<Vec<Rational>, ConfigError> {
    s.split(',')
        .filter(|p| !p.trim().is_empty())
        .map(parse_rational)
        .collect()
}

/// Parse a model selector: a model name or `all`.
pub fn parse_models(s: &str) -> Result<Vec<ModelId>, ConfigError> {
    if s == "all" {
        return Ok(ModelId::ALL.to_vec());
    }
    s.split(',')
        .filter(|p| !p.trim().is_empty())
        .map(|p| {
            p.trim().parse::<ModelId>().map_err(|_| ConfigError::BadModel {
                input: s.to_string(),
            })
        })
        .collect()
}

/// Output format of tables and reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Json,
    Csv,
}

impl FromStr for OutputFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "json" => Ok(OutputFormat::Json),
            "csv" => Ok(OutputFormat::Csv),
            other => Err(format!("unknown format `{other}` (use json or csv)")),
        }
    }
}

/// Read a flat `key=value` config file. Blank lines and `#` comments are
/// skipped; later keys override earlier ones.
pub fn load_key_values(path: &Path) -> std::io::Result<Result<BTreeMap<String, String>, ConfigError>> {
    let text = std::fs::read_to_string(path)?;
    let mut map = BTreeMap::new();
    for (idx, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        match line.split_once('=') {
            Some((k, v)) => {
                map.insert(k.trim().to_string(), v.trim().to_string());
            }
            None => {
                return Ok(Err(ConfigError::BadConfigLine {
                    line: idx + 1,
                    text: line.to_string(),
                }))
            }
        }
    }
    Ok(Ok(map))
}

/// Resolve an output path against `FOCKSYM_OUTPUT_DIR` when it is relative
/// and the variable is set.
pub fn resolve_output_path(path: &Path) -> PathBuf {
    if path.is_absolute() {
        return path.to_path_buf();
    }
    match std::env::var_os(ENV_OUTPUT_DIR) {
        Some(dir) => PathBuf::from(dir).join(path),
        None => path.to_path_buf(),
    }
}
