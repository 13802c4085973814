//! OEIS b-file ingestion: lines of `index value`, `#` comments allowed.

use std::collections::BTreeMap;
use std::path::Path;

use anyhow::{bail, Context, Result};

/// Values keyed by sequence index, kept as decimal strings so arbitrarily
/// large entries compare exactly.
pub fn parse_bfile(path: &Path) -> Result<BTreeMap<i64, String>> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("reading b-file {}", path.display()))?;
    let mut out = BTreeMap::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut it = line.split_whitespace();
        let (Some(idx), Some(value)) = (it.next(), it.next()) else {
            bail!("b-file line {}: expected `index value`", lineno + 1);
        };
        let idx: i64 = idx
            .parse()
            .with_context(|| format!("b-file line {}: bad index {idx:?}", lineno + 1))?;
        if value.is_empty() || !value.chars().all(|c| c.is_ascii_digit() || c == '-') {
            bail!("b-file line {}: bad value {value:?}", lineno + 1);
        }
        out.insert(idx, value.to_string());
    }
    Ok(out)
}
