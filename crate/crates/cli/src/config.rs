//! Optional TOML configuration for `verify`.
//!
//! ```toml
//! budget = 8            # largest flip-set size an exact search may reach
//! witness_cap = 1       # witnesses kept per search
//! threads = 4           # rayon workers; GRAPHSYM_THREADS overrides
//! allowlist = ["Thm2.6-printed-lower", "Rem2.1-remark", "Thm2.8:r=2,s=2"]
//! ```
//!
//! Every key is optional. A present `allowlist` replaces the default one.

use std::path::Path;

use serde::Deserialize;

#[derive(Debug, Clone, Default, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Config {
    pub budget: Option<usize>,
    pub witness_cap: Option<usize>,
    pub threads: Option<usize>,
    pub allowlist: Option<Vec<String>>,
}

impl Config {
    pub fn load(path: &Path) -> Result<Self, String> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
        Self::parse(&text).map_err(|e| format!("{}: {e}", path.display()))
    }

    pub fn parse(text: &str) -> Result<Self, String> {
        toml::from_str(text).map_err(|e| e.to_string())
    }
}

pub const THREADS_ENV: &str = "GRAPHSYM_THREADS";

/// Thread count from the environment, falling back to the config file.
pub fn thread_count(config: Option<usize>) -> Result<Option<usize>, String> {
    match std::env::var(THREADS_ENV) {
        Ok(v) => v
            .trim()
            .parse::<usize>()
            .ok()
            .filter(|&t| t > 0)
            .map(Some)
            .ok_or_else(|| format!("{THREADS_ENV} must be a positive integer, got {v:?}")),
        Err(_) => Ok(config),
    }
}
