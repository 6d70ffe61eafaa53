//! `key=value` defaults file. Blank lines and `#` comments are skipped;
//! keys are flag names without the leading dashes.

use std::collections::BTreeMap;

use hlm_core::{Error, Result};

pub const KEYS: [&str; 18] = [
    "family", "L2", "M2", "H2", "f", "hbar", "a", "zeta1", "zeta2", "n", "kappa1", "kappa2",
    "kappa3", "which", "dim", "format", "out", "what",
];

pub fn parse_config(text: &str) -> Result<BTreeMap<String, String>> {
    let mut out = BTreeMap::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (k, v) = line.split_once('=').ok_or_else(|| {
            Error::Invalid(format!("config line {}: expected key=value", lineno + 1))
        })?;
        let (k, v) = (k.trim(), v.trim());
        if !KEYS.contains(&k) {
            return Err(Error::Invalid(format!(
                "config line {}: unknown key `{k}`",
                lineno + 1
            )));
        }
        if v.is_empty() {
            return Err(Error::Invalid(format!(
                "config line {}: empty value for `{k}`",
                lineno + 1
            )));
        }
        if out.insert(k.to_string(), v.to_string()).is_some() {
            return Err(Error::Invalid(format!(
                "config line {}: `{k}` set twice",
                lineno + 1
            )));
        }
    }
    Ok(out)
}
