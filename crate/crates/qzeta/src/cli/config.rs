//! `key = value` configuration files. Keys are the long flag names; a flag
//! given on the command line always wins over the file.

use std::collections::BTreeMap;
use std::path::Path;

use crate::error::{Error, Result};

pub const KEYS: &[&str] =
    &["suite", "order", "m", "n", "r", "Q", "seed", "points", "out", "format", "kind", "deg", "p", "threads"];

/// Parsed file contents, in key order.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ConfigFile {
    values: BTreeMap<String, String>,
}

impl ConfigFile {
    /// Blank lines and lines starting with `#` are skipped.
    pub fn parse(text: &str) -> Result<Self> {
        let mut values = BTreeMap::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (k, v) = line
                .split_once('=')
                .ok_or_else(|| Error::Config(format!("line {}: expected key=value, got '{}'", i + 1, line)))?;
            let (k, v) = (k.trim(), v.trim());
            if !KEYS.contains(&k) {
                return Err(Error::Config(format!("line {}: unknown key '{}'", i + 1, k)));
            }
            if values.insert(k.to_string(), v.to_string()).is_some() {
                return Err(Error::Config(format!("line {}: key '{}' given twice", i + 1, k)));
            }
        }
        Ok(ConfigFile { values })
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {}", path.display(), e)))?;
        Self::parse(&text)
    }

    /// The value for `key`, parsed.
    pub fn get<T: std::str::FromStr>(&self, key: &str) -> Result<Option<T>>
    where
        T::Err: std::fmt::Display,
    {
        match self.values.get(key) {
            None => Ok(None),
            Some(v) => v.parse().map(Some).map_err(|e| Error::Config(format!("key '{}': {}", key, e))),
        }
    }
}

/// CLI value if present, else the file's, else `default`.
pub fn pick<T: std::str::FromStr>(cli: Option<T>, file: &ConfigFile, key: &str, default: T) -> Result<T>
where
    T::Err: std::fmt::Display,
{
    Ok(match cli {
        Some(v) => v,
        None => file.get(key)?.unwrap_or(default),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_override() {
        let f = ConfigFile::parse("# run\nsuite = zeta\nQ=30\n\nseed = 7\n").unwrap();
        assert_eq!(f.get::<String>("suite").unwrap().as_deref(), Some("zeta"));
        assert_eq!(pick(None, &f, "Q", 25usize).unwrap(), 30);
        assert_eq!(pick(Some(12usize), &f, "Q", 25).unwrap(), 12);
        assert_eq!(pick(None, &f, "points", 5usize).unwrap(), 5);
    }

    #[test]
    fn rejects_bad_lines() {
        assert!(ConfigFile::parse("colour = red").is_err());
        assert!(ConfigFile::parse("suite zeta").is_err());
        assert!(ConfigFile::parse("m = 1\nm = 2").is_err());
        assert!(ConfigFile::parse("m = x").unwrap().get::<usize>("m").is_err());
    }
}
