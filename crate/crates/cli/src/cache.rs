//! On-disk persistence of Kostka-Foulkes tables.
//!
//! One JSON document per `n`, named `kostka-n{n}.json`, carrying the format
//! version, convention tag and a checksum of the entries. Loaded tables are
//! validated before use; any mismatch or corruption triggers a recompute and
//! an overwrite.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use num_bigint::BigInt;
use pdr_core::kostka::{CONVENTION_TAG, FORMAT_VERSION};
use pdr_core::{KostkaTable, LaurentPoly, Partition};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

/// Environment variable naming the cache directory when no flag is given.
pub const CACHE_DIR_ENV: &str = "PDR_CACHE_DIR";

#[derive(Serialize, Deserialize)]
struct TableFile {
    format_version: u32,
    convention_tag: String,
    n: u32,
    /// SHA-256 of the serialized entries.
    checksum: String,
    entries: Vec<EntryFile>,
}

#[derive(Serialize, Deserialize)]
struct EntryFile {
    lambda: Vec<u32>,
    mu: Vec<u32>,
    /// `(exponent, coefficient)` pairs, coefficients as decimal strings.
    terms: Vec<(i64, String)>,
}

pub struct Loaded {
    pub table: KostkaTable,
    pub cache_hit: bool,
    pub warnings: Vec<String>,
}

pub fn cache_path(dir: &Path, n: u32) -> PathBuf {
    dir.join(format!("kostka-n{n}.json"))
}

fn checksum(entries: &[EntryFile]) -> String {
    let bytes = serde_json::to_vec(entries).expect("plain data serializes");
    Sha256::digest(bytes)
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect()
}

/// Serialize a table. The output is deterministic for a given table.
pub fn encode(table: &KostkaTable) -> String {
    let entries: Vec<EntryFile> = table
        .entries
        .iter()
        .map(|((lambda, mu), k)| EntryFile {
            lambda: lambda.parts().to_vec(),
            mu: mu.parts().to_vec(),
            terms: k.terms().map(|(e, c)| (e, c.to_string())).collect(),
        })
        .collect();
    let file = TableFile {
        format_version: table.format_version,
        convention_tag: table.convention_tag.clone(),
        n: table.n,
        checksum: checksum(&entries),
        entries,
    };
    serde_json::to_string(&file).expect("plain data serializes")
}

/// Parse and validate a table.
pub fn decode(s: &str) -> Result<KostkaTable, String> {
    let file: TableFile = serde_json::from_str(s).map_err(|e| e.to_string())?;
    if file.format_version != FORMAT_VERSION {
        return Err(format!(
            "format version {} (expected {FORMAT_VERSION})",
            file.format_version
        ));
    }
    if file.convention_tag != CONVENTION_TAG {
        return Err(format!("convention tag {:?}", file.convention_tag));
    }
    if checksum(&file.entries) != file.checksum {
        return Err("checksum mismatch".into());
    }
    let mut entries = std::collections::BTreeMap::new();
    for e in file.entries {
        let lambda = Partition::new(e.lambda).map_err(|e| e.to_string())?;
        let mu = Partition::new(e.mu).map_err(|e| e.to_string())?;
        let terms = e
            .terms
            .into_iter()
            .map(|(x, c)| {
                c.parse::<BigInt>()
                    .map(|c| (x, c))
                    .map_err(|e| e.to_string())
            })
            .collect::<Result<Vec<_>, _>>()?;
        entries.insert((lambda, mu), LaurentPoly::from_terms(terms).with_var("t"));
    }
    let table = KostkaTable {
        n: file.n,
        entries,
        convention_tag: file.convention_tag,
        format_version: file.format_version,
    };
    table.validate()?;
    Ok(table)
}

fn write_atomic(path: &Path, contents: &str) -> std::io::Result<()> {
    let dir = path.parent().unwrap_or(Path::new("."));
    fs::create_dir_all(dir)?;
    let tmp = dir.join(format!(
        ".{}.{}.tmp",
        path.file_name().and_then(|s| s.to_str()).unwrap_or("cache"),
        std::process::id()
    ));
    let result = (|| {
        let mut f = fs::File::create(&tmp)?;
        f.write_all(contents.as_bytes())?;
        f.sync_all()?;
        fs::rename(&tmp, path)
    })();
    if result.is_err() {
        let _ = fs::remove_file(&tmp);
    }
    result
}

/// Load the table for `n` from `dir`, or compute and store it.
///
/// Without a directory the table is computed in memory.
pub fn load_or_compute(dir: Option<&Path>, n: u32) -> Loaded {
    let mut warnings = Vec::new();
    let Some(dir) = dir else {
        return Loaded {
            table: KostkaTable::compute(n),
            cache_hit: false,
            warnings,
        };
    };
    let path = cache_path(dir, n);
    match fs::read_to_string(&path) {
        Ok(s) => match decode(&s) {
            Ok(table) if table.n == n => {
                return Loaded {
                    table,
                    cache_hit: true,
                    warnings,
                }
            }
            Ok(table) => warnings.push(format!(
                "cache file {} holds n={} (expected {n}); recomputing",
                path.display(),
                table.n
            )),
            Err(e) => warnings.push(format!(
                "ignoring cache file {}: {e}; recomputing",
                path.display()
            )),
        },
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => {}
        Err(e) => warnings.push(format!("cannot read {}: {e}; recomputing", path.display())),
    }
    let table = KostkaTable::compute(n);
    if let Err(e) = write_atomic(&path, &encode(&table)) {
        warnings.push(format!(
            "cannot write cache {}: {e}; continuing in memory",
            path.display()
        ));
    }
    Loaded {
        table,
        cache_hit: false,
        warnings,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn encode_decode_round_trip() {
        let table = KostkaTable::compute(4);
        let s = encode(&table);
        assert_eq!(decode(&s).unwrap(), table);
        assert_eq!(encode(&decode(&s).unwrap()), s);
    }

    #[test]
    fn decode_rejects_tampering() {
        let s = encode(&KostkaTable::compute(3));
        assert!(decode(&s.replace(CONVENTION_TAG, "other")).is_err());
        assert!(decode(&s.replace("\"format_version\":1", "\"format_version\":99")).is_err());
        assert!(decode(&s[..s.len() / 2]).is_err());
        // An off-diagonal coefficient that still looks plausible.
        let bad = s.replacen("[[1,\"1\"]", "[[1,\"2\"]", 1);
        assert_ne!(bad, s);
        assert!(decode(&bad).is_err());
    }

    #[test]
    fn memory_only_without_directory() {
        let loaded = load_or_compute(None, 3);
        assert!(!loaded.cache_hit);
        assert!(loaded.warnings.is_empty());
        assert_eq!(loaded.table, KostkaTable::compute(3));
    }
}
