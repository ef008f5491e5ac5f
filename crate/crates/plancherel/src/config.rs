//! Run configuration: default q list, per-rank resolutions and tolerances,
//! cache directory, output format. Sourced from defaults, then an optional
//! key-value config file, then the cache-dir environment variable.
//!
//! File format: one `key = value` per line, `#` comments. Keys:
//! `q`, `resolution.<a>`, `tol.<a>`, `cache_dir`, `format`, `jobs`.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use crate::counts::is_odd_prime_power;
use crate::verify::{default_resolution, default_tolerance};

pub const CACHE_DIR_ENV: &str = "PLANCHEREL_CACHE_DIR";

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ConfigError {
    #[error("cannot read config file {0}")]
    Unreadable(String),
    #[error("line {0}: expected `key = value`")]
    Syntax(usize),
    #[error("line {0}: {1}")]
    Value(usize, String),
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum OutputFormat {
    Json,
    Csv,
    Text,
}

#[derive(Clone, Debug)]
pub struct Config {
    pub q_list: Vec<u64>,
    pub resolutions: BTreeMap<usize, usize>,
    pub tolerances: BTreeMap<usize, f64>,
    pub cache_dir: PathBuf,
    pub format: OutputFormat,
    pub jobs: usize,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            q_list: vec![3, 5],
            resolutions: BTreeMap::new(),
            tolerances: BTreeMap::new(),
            cache_dir: PathBuf::from(".plancherel-cache"),
            format: OutputFormat::Text,
            jobs: 1,
        }
    }
}

impl Config {
    /// Defaults, overlaid with the config file (if given), overlaid with
    /// the cache-dir environment variable.
    pub fn load(path: Option<&Path>) -> Result<Self, ConfigError> {
        let mut cfg = Config::default();
        if let Some(p) = path {
            let body = std::fs::read_to_string(p)
                .map_err(|_| ConfigError::Unreadable(p.display().to_string()))?;
            cfg.apply_file(&body)?;
        }
        if let Ok(dir) = std::env::var(CACHE_DIR_ENV) {
            if !dir.is_empty() {
                cfg.cache_dir = PathBuf::from(dir);
            }
        }
        Ok(cfg)
    }

    pub fn apply_file(&mut self, body: &str) -> Result<(), ConfigError> {
        for (lineno, raw) in body.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let n = lineno + 1;
            let (key, value) = line.split_once('=').ok_or(ConfigError::Syntax(n))?;
            let (key, value) = (key.trim(), value.trim());
            match key {
                "q" => {
                    let mut qs = Vec::new();
                    for part in value.split(',') {
                        let q: u64 = part
                            .trim()
                            .parse()
                            .map_err(|_| ConfigError::Value(n, format!("bad q `{part}`")))?;
                        if !is_odd_prime_power(q) {
                            return Err(ConfigError::Value(
                                n,
                                format!("q = {q} must be an odd prime power >= 3"),
                            ));
                        }
                        qs.push(q);
                    }
                    self.q_list = qs;
                }
                "cache_dir" => self.cache_dir = PathBuf::from(value),
                "format" => {
                    self.format = match value {
                        "json" => OutputFormat::Json,
                        "csv" => OutputFormat::Csv,
                        "text" => OutputFormat::Text,
                        other => {
                            return Err(ConfigError::Value(n, format!("unknown format `{other}`")))
                        }
                    }
                }
                "jobs" => {
                    self.jobs = value
                        .parse()
                        .map_err(|_| ConfigError::Value(n, format!("bad jobs `{value}`")))?;
                }
                _ => {
                    if let Some(rank) = key.strip_prefix("resolution.") {
                        let a: usize = rank
                            .parse()
                            .map_err(|_| ConfigError::Value(n, format!("bad rank `{rank}`")))?;
                        let res: usize = value
                            .parse()
                            .map_err(|_| ConfigError::Value(n, format!("bad resolution `{value}`")))?;
                        if !res.is_power_of_two() || res < 8 {
                            return Err(ConfigError::Value(
                                n,
                                format!("resolution {res} must be a power of two >= 8"),
                            ));
                        }
                        self.resolutions.insert(a, res);
                    } else if let Some(rank) = key.strip_prefix("tol.") {
                        let a: usize = rank
                            .parse()
                            .map_err(|_| ConfigError::Value(n, format!("bad rank `{rank}`")))?;
                        let tol: f64 = value
                            .parse()
                            .map_err(|_| ConfigError::Value(n, format!("bad tolerance `{value}`")))?;
                        self.tolerances.insert(a, tol);
                    } else {
                        return Err(ConfigError::Value(n, format!("unknown key `{key}`")));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn resolution_for(&self, a: usize) -> usize {
        self.resolutions.get(&a).copied().unwrap_or_else(|| default_resolution(a))
    }

    pub fn tolerance_for(&self, a: usize) -> f64 {
        self.tolerances.get(&a).copied().unwrap_or_else(|| default_tolerance(a))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_key_values() {
        let mut cfg = Config::default();
        cfg.apply_file(
            "# comment\nq = 3, 9\nresolution.2 = 256\ntol.2 = 1e-7\nformat = json\njobs = 4\n",
        )
        .unwrap();
        assert_eq!(cfg.q_list, vec![3, 9]);
        assert_eq!(cfg.resolution_for(2), 256);
        assert_eq!(cfg.resolution_for(1), 4096);
        assert_eq!(cfg.tolerance_for(2), 1e-7);
        assert_eq!(cfg.format, OutputFormat::Json);
        assert_eq!(cfg.jobs, 4);
    }

    #[test]
    fn rejects_bad_values() {
        let mut cfg = Config::default();
        assert!(cfg.apply_file("q = 4\n").is_err());
        assert!(cfg.apply_file("resolution.1 = 100\n").is_err());
        assert!(cfg.apply_file("so = what\n").is_err());
        assert!(cfg.apply_file("just nonsense\n").is_err());
    }
}
