//! `key = value` recipe files.
//!
//! One assignment per line, `#` starts a comment, blank lines are ignored.
//! Keys are case-sensitive; an unknown key or a repeated key is an error so
//! that a typo in a recipe cannot silently fall back to a default.

use std::collections::BTreeMap;
use std::path::Path;

use crate::error::CliError;

pub const KEYS: &[&str] = &[
    "units",
    "delta",
    "epsilon",
    "amplitude",
    "omega",
    "photon_n",
    "method",
    "t_max",
    "samples",
    "axis",
    "from",
    "to",
    "points",
    "quantity",
    "series_param",
    "series",
    "track_resonance",
    "pad",
    "threshold",
];

#[derive(Debug, Clone, Default, PartialEq)]
pub struct ConfigFile {
    entries: BTreeMap<String, String>,
}

impl ConfigFile {
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Usage(format!("cannot read config {}: {e}", path.display())))?;
        Self::parse(&text).map_err(|e| match e {
            CliError::Usage(m) => CliError::Usage(format!("{}: {m}", path.display())),
            other => other,
        })
    }

    pub fn parse(text: &str) -> Result<Self, CliError> {
        let mut entries = BTreeMap::new();
        for (no, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| CliError::Usage(format!("line {}: expected `key = value`", no + 1)))?;
            let (key, value) = (key.trim(), value.trim());
            if !KEYS.contains(&key) {
                return Err(CliError::Usage(format!("line {}: unknown key `{key}`", no + 1)));
            }
            if value.is_empty() {
                return Err(CliError::Usage(format!("line {}: `{key}` has no value", no + 1)));
            }
            if entries.insert(key.to_string(), value.to_string()).is_some() {
                return Err(CliError::Usage(format!("line {}: `{key}` given twice", no + 1)));
            }
        }
        Ok(Self { entries })
    }

    pub fn raw(&self, key: &str) -> Option<&str> {
        self.entries.get(key).map(String::as_str)
    }

    pub fn get<T: std::str::FromStr>(&self, key: &str) -> Result<Option<T>, CliError> {
        self.raw(key)
            .map(|v| {
                v.parse::<T>()
                    .map_err(|_| CliError::Usage(format!("`{key}`: cannot parse `{v}`")))
            })
            .transpose()
    }

    /// Comma-separated list.
    pub fn list<T: std::str::FromStr>(&self, key: &str) -> Result<Option<Vec<T>>, CliError> {
        self.raw(key)
            .map(|v| {
                v.split(',')
                    .map(|item| {
                        let item = item.trim();
                        item.parse::<T>()
                            .map_err(|_| CliError::Usage(format!("`{key}`: cannot parse `{item}`")))
                    })
                    .collect()
            })
            .transpose()
    }
}
