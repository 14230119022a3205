//! Defaults for cutoffs and tolerances.
//!
//! Sources, lowest precedence first: built-in defaults, the config file
//! (`--config PATH`, else `./mzvlab.conf` when present), the
//! `MZVLAB_CUTOFF` environment variable, and finally command-line flags.
//! The file holds `key = value` lines (TOML).

use std::path::Path;

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::numerics::{DEFAULT_CUTOFF, DEFAULT_INNER_CUTOFF, DEFAULT_TOL};

pub const DEFAULT_CONFIG_FILE: &str = "mzvlab.conf";
pub const CUTOFF_ENV: &str = "MZVLAB_CUTOFF";

#[derive(Clone, Debug, PartialEq)]
pub struct Config {
    pub cutoff: u64,
    pub tol: f64,
    pub max_weight: usize,
    pub inner_cutoff: u64,
}

impl Default for Config {
    fn default() -> Config {
        Config {
            cutoff: DEFAULT_CUTOFF,
            tol: DEFAULT_TOL,
            max_weight: 8,
            inner_cutoff: DEFAULT_INNER_CUTOFF,
        }
    }
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct FileConfig {
    cutoff: Option<u64>,
    tol: Option<f64>,
    max_weight: Option<usize>,
    inner_cutoff: Option<u64>,
}

impl Config {
    pub fn parse_file_contents(text: &str) -> Result<FileOverrides> {
        let f: FileConfig = toml::from_str(text).map_err(|e| Error::Config(e.to_string()))?;
        Ok(FileOverrides(f))
    }

    /// Resolves the configuration from an optional explicit path, the
    /// working directory and the given value of `MZVLAB_CUTOFF`.
    pub fn load(explicit: Option<&Path>, cwd: &Path, env_cutoff: Option<&str>) -> Result<Config> {
        let mut cfg = Config::default();
        let path = match explicit {
            Some(p) => Some(p.to_path_buf()),
            None => {
                let p = cwd.join(DEFAULT_CONFIG_FILE);
                p.is_file().then_some(p)
            }
        };
        if let Some(path) = path {
            let text = std::fs::read_to_string(&path)
                .map_err(|e| Error::Config(format!("{}: {e}", path.display())))?;
            cfg.apply(Config::parse_file_contents(&text)?);
        }
        if let Some(v) = env_cutoff {
            cfg.cutoff = v
                .trim()
                .parse()
                .map_err(|e| Error::Config(format!("{CUTOFF_ENV}={v:?}: {e}")))?;
        }
        Ok(cfg)
    }

    fn apply(&mut self, o: FileOverrides) {
        let f = o.0;
        if let Some(v) = f.cutoff {
            self.cutoff = v;
        }
        if let Some(v) = f.tol {
            self.tol = v;
        }
        if let Some(v) = f.max_weight {
            self.max_weight = v;
        }
        if let Some(v) = f.inner_cutoff {
            self.inner_cutoff = v;
        }
    }
}

#[derive(Debug)]
pub struct FileOverrides(FileConfig);
