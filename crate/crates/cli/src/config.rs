//! Run configuration: a key=value config file merged with CLI flags (flags
//! win).

use reed_core::patterns::ClassExpr;
use thiserror::Error;

use crate::checks::CheckId;

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("config line {line}: expected key=value, got {text:?}")]
    BadLine { line: usize, text: String },
    #[error("config line {line}: unknown key {key:?}")]
    UnknownKey { line: usize, key: String },
    #[error("config line {line}: bad value for {key}: {value:?}")]
    BadValue {
        line: usize,
        key: String,
        value: String,
    },
}

/// Settings shared by the corpus runner and the checks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    /// Hole-enumeration horizon; clamped per graph to min(max_hole_len, n).
    pub max_hole_len: usize,
    pub vertex_cap: usize,
    /// Per-solver wall budget; `None` is unlimited.
    pub time_budget_ms: Option<u64>,
    pub seed: u64,
    /// Worker count; 0 picks the default pool size, 1 forces the
    /// sequential path.
    pub jobs: usize,
    pub classes: Vec<ClassExpr>,
    pub checks: Vec<CheckId>,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            max_hole_len: 9,
            vertex_cap: reed_core::DEFAULT_VERTEX_CAP,
            time_budget_ms: None,
            seed: 0,
            jobs: 0,
            classes: vec![],
            checks: CheckId::all().to_vec(),
        }
    }
}

/// Values read from a config file; `None` fields stay at their default or
/// the flag value.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FileConfig {
    pub max_hole_len: Option<usize>,
    pub vertex_cap: Option<usize>,
    pub time_budget_ms: Option<u64>,
    pub seed: Option<u64>,
    pub parallelism: Option<usize>,
}

/// Parse the key=value format. Blank lines and `#` comments are skipped;
/// keys: max_hole_len, vertex_cap, time_budget_ms, seed, parallelism.
pub fn parse_config_file(text: &str) -> Result<FileConfig, ConfigError> {
    let mut cfg = FileConfig::default();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let (key, value) = content.split_once('=').ok_or_else(|| ConfigError::BadLine {
            line,
            text: raw.to_string(),
        })?;
        let (key, value) = (key.trim(), value.trim());
        let bad = |key: &str, value: &str| ConfigError::BadValue {
            line,
            key: key.to_string(),
            value: value.to_string(),
        };
        match key {
            "max_hole_len" => cfg.max_hole_len = Some(value.parse().map_err(|_| bad(key, value))?),
            "vertex_cap" => cfg.vertex_cap = Some(value.parse().map_err(|_| bad(key, value))?),
            "time_budget_ms" => {
                cfg.time_budget_ms = Some(value.parse().map_err(|_| bad(key, value))?)
            }
            "seed" => cfg.seed = Some(value.parse().map_err(|_| bad(key, value))?),
            "parallelism" => cfg.parallelism = Some(value.parse().map_err(|_| bad(key, value))?),
            _ => {
                return Err(ConfigError::UnknownKey {
                    line,
                    key: key.to_string(),
                })
            }
        }
    }
    Ok(cfg)
}

impl RunConfig {
    /// Apply file values underneath existing (flag-provided) settings:
    /// a file value only lands where the flag was not given.
    pub fn apply_file(
        &mut self,
        file: &FileConfig,
        flag_given: &FlagPresence,
    ) {
        if !flag_given.max_hole_len {
            if let Some(v) = file.max_hole_len {
                self.max_hole_len = v;
            }
        }
        if !flag_given.vertex_cap {
            if let Some(v) = file.vertex_cap {
                self.vertex_cap = v;
            }
        }
        if !flag_given.time_budget_ms {
            if let Some(v) = file.time_budget_ms {
                self.time_budget_ms = Some(v);
            }
        }
        if !flag_given.seed {
            if let Some(v) = file.seed {
                self.seed = v;
            }
        }
        if !flag_given.jobs {
            if let Some(v) = file.parallelism {
                self.jobs = v;
            }
        }
    }
}

/// Which flags were given explicitly on the command line.
#[derive(Clone, Copy, Debug, Default)]
pub struct FlagPresence {
    pub max_hole_len: bool,
    pub vertex_cap: bool,
    pub time_budget_ms: bool,
    pub seed: bool,
    pub jobs: bool,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_merges() {
        let file = parse_config_file(
            "# comment\nmax_hole_len = 7\nseed=42\nparallelism=2\n\ntime_budget_ms = 500\n",
        )
        .unwrap();
        assert_eq!(file.max_hole_len, Some(7));
        assert_eq!(file.seed, Some(42));

        let mut cfg = RunConfig {
            seed: 9,
            ..RunConfig::default()
        };
        let flags = FlagPresence {
            seed: true,
            ..FlagPresence::default()
        };
        cfg.apply_file(&file, &flags);
        assert_eq!(cfg.seed, 9); // flag wins
        assert_eq!(cfg.max_hole_len, 7);
        assert_eq!(cfg.jobs, 2);
        assert_eq!(cfg.time_budget_ms, Some(500));
    }

    #[test]
    fn rejects_unknown_keys() {
        assert!(matches!(
            parse_config_file("budget=1"),
            Err(ConfigError::UnknownKey { .. })
        ));
        assert!(matches!(
            parse_config_file("max_hole_len"),
            Err(ConfigError::BadLine { .. })
        ));
        assert!(matches!(
            parse_config_file("seed=abc"),
            Err(ConfigError::BadValue { .. })
        ));
    }
}
