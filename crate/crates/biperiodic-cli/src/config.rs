//! `key=value` configuration files.
//!
//! A config file supplies defaults for the same settings the flags cover;
//! a flag given on the command line always wins over the file. Blank lines
//! and lines starting with `#` are ignored. Keys use the flag spelling
//! without the leading dashes (for example `n-max=12`).

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use crate::CliError;

const KNOWN_KEYS: &[&str] = &[
    "a", "b", "w0", "w1", "output", "out-path", "grid", "octonion", "n-min", "n-max", "order",
    "r-values",
];

#[derive(Debug, Default)]
pub struct FileConfig {
    values: BTreeMap<String, String>,
}

impl FileConfig {
    pub fn load(path: &Path) -> Result<FileConfig, CliError> {
        let text = fs::read_to_string(path).map_err(|err| {
            CliError::usage(format!("cannot read config file {}: {err}", path.display()))
        })?;
        let mut values = BTreeMap::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let Some((key, value)) = line.split_once('=') else {
                return Err(CliError::usage(format!(
                    "config line {} is not of the form key=value: {raw:?}",
                    lineno + 1
                )));
            };
            let key = key.trim().to_string();
            if !KNOWN_KEYS.contains(&key.as_str()) {
                return Err(CliError::usage(format!(
                    "config line {} has unknown key {key:?} (known: {})",
                    lineno + 1,
                    KNOWN_KEYS.join(", ")
                )));
            }
            values.insert(key, value.trim().to_string());
        }
        Ok(FileConfig { values })
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.values.get(key).map(String::as_str)
    }

    /// Parses the value stored under `key`, if any, reporting a usage
    /// error that names both the key and the offending text.
    pub fn parse<T>(&self, key: &str) -> Result<Option<T>, CliError>
    where
        T: std::str::FromStr,
        T::Err: std::fmt::Display,
    {
        match self.get(key) {
            None => Ok(None),
            Some(text) => text.parse::<T>().map(Some).map_err(|err| {
                CliError::usage(format!("config value {key}={text:?} is invalid: {err}"))
            }),
        }
    }
}
