//! Optional TOML configuration. Every key is optional; missing keys keep the
//! built-in caps.
//!
//! ```toml
//! [caps]
//! max_degree = 3
//! max_size = 5
//! max_check_size = 5
//! ```

use std::path::Path;

use serde::Deserialize;

use qgr_core::grassmann::{DEFAULT_MAX_DEGREE, DEFAULT_MAX_SIZE};

#[derive(Clone, Debug, Default, Deserialize, PartialEq, Eq)]
#[serde(default, deny_unknown_fields)]
pub struct Config {
    pub caps: Caps,
}

#[derive(Clone, Copy, Debug, Deserialize, PartialEq, Eq)]
#[serde(default, deny_unknown_fields)]
pub struct Caps {
    /// Largest relation or coinvariant degree computed without `--force`.
    pub max_degree: usize,
    /// Largest `m + n` for relation and coinvariant discovery.
    pub max_size: usize,
    /// Largest `m + n` for the verification commands.
    pub max_check_size: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Self {
            max_degree: DEFAULT_MAX_DEGREE,
            max_size: DEFAULT_MAX_SIZE,
            max_check_size: DEFAULT_MAX_SIZE,
        }
    }
}

impl Config {
    pub fn from_toml(text: &str) -> Result<Self, toml::de::Error> {
        toml::from_str(text)
    }

    pub fn load(path: &Path) -> Result<Self, String> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
        Self::from_toml(&text).map_err(|e| format!("invalid config {}: {e}", path.display()))
    }
}
