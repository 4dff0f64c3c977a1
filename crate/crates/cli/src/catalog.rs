//! Catalog construction, the record cache, and equivalence scans.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use rayon::prelude::*;
use simconj_core::{build, FiniteGroup, GroupSpec, InvariantRecord};

use crate::format::{
    load_catalog, to_canonical_json, CachedRecord, Catalog, CatalogEntry, EntryStatus, PairFlags, RecordJson,
    ScanReport, RECORD_SCHEMA, SCAN_SCHEMA,
};

/// Environment variable naming the record cache directory.
pub const CACHE_ENV: &str = "SIMCONJ_CACHE_DIR";

pub fn cache_dir() -> Option<PathBuf> {
    std::env::var_os(CACHE_ENV).filter(|v| !v.is_empty()).map(PathBuf::from)
}

/// Writes `contents` to a temporary file next to `path` and renames it over
/// `path`.
pub fn write_atomic(path: &Path, contents: &str) -> Result<()> {
    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d,
        _ => Path::new("."),
    };
    fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(contents.as_bytes())?;
    tmp.as_file().sync_all()?;
    tmp.persist(path)
        .with_context(|| format!("writing {}", path.display()))?;
    Ok(())
}

/// Computes the record of `g`, going through the cache directory if set.
pub fn record_for(g: &FiniteGroup, cache: Option<&Path>) -> Result<InvariantRecord> {
    let Some(dir) = cache else {
        return Ok(InvariantRecord::compute(g)?);
    };
    let path = dir.join(format!("{}.json", g.group_id()));
    if let Ok(text) = fs::read_to_string(&path) {
        if let Ok(cached) = serde_json::from_str::<CachedRecord>(&text) {
            if cached.schema == RECORD_SCHEMA {
                if let Ok(r) = InvariantRecord::try_from(&cached.record) {
                    return Ok(r);
                }
            }
        }
    }
    let record = InvariantRecord::compute(g)?;
    let cached = CachedRecord {
        schema: RECORD_SCHEMA.into(),
        record: RecordJson::from(&record),
    };
    write_atomic(&path, &to_canonical_json(&cached))?;
    Ok(record)
}

fn entry(name: String, spec: GroupSpec, cache: Option<&Path>) -> CatalogEntry {
    let status = match build(&spec) {
        Ok(g) => match record_for(&g, cache) {
            Ok(r) => EntryStatus::Computed {
                record: RecordJson::from(&r),
            },
            Err(e) => EntryStatus::Unavailable {
                reason: format!("{e:#}"),
            },
        },
        Err(e) => EntryStatus::Unavailable { reason: e.to_string() },
    };
    CatalogEntry { name, spec, status }
}

/// Computes every entry, in parallel, keeping the input order.
pub fn build_catalog(specs: Vec<(String, GroupSpec)>, cache: Option<&Path>) -> Catalog {
    let entries = specs
        .into_par_iter()
        .map(|(name, spec)| entry(name, spec, cache))
        .collect();
    Catalog::new(entries)
}

pub fn read_catalog(path: &Path) -> Result<Catalog> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    Ok(load_catalog(&text)?)
}

pub fn save_catalog(path: &Path, catalog: &Catalog) -> Result<()> {
    write_atomic(path, &to_canonical_json(catalog))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Predicate {
    /// A-equivalent but not B-equivalent.
    ANotB,
    /// B-equivalent but not A-equivalent.
    BNotA,
    /// A- and B-equivalent pairs that are different catalog groups.
    AbNotNormalized,
    /// Every same-order pair.
    All,
}

impl Predicate {
    pub fn name(self) -> &'static str {
        match self {
            Predicate::ANotB => "a-not-b",
            Predicate::BNotA => "b-not-a",
            Predicate::AbNotNormalized => "ab-not-normalized",
            Predicate::All => "all",
        }
    }

    fn accepts(self, f: &PairFlags) -> bool {
        match self {
            Predicate::ANotB => f.a_equivalent && !f.b_equivalent,
            Predicate::BNotA => f.b_equivalent && !f.a_equivalent,
            Predicate::AbNotNormalized => f.a_equivalent && f.b_equivalent,
            Predicate::All => true,
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum ScanError {
    #[error("catalog has fewer than two computed entries")]
    TooFewEntries,
    #[error("entry `{0}` is not in the catalog")]
    UnknownEntry(String),
    #[error("entry `{0}` is unavailable: {1}")]
    Unavailable(String, String),
}

/// Evaluates all unordered same-order pairs among the selected entries.
/// An empty `names` selects every computed entry.
pub fn scan(catalog: &Catalog, predicate: Predicate, names: &[String]) -> Result<ScanReport, ScanError> {
    let mut selected: Vec<&CatalogEntry> = Vec::new();
    if names.is_empty() {
        selected.extend(&catalog.entries);
    } else {
        for n in names {
            let e = catalog.get(n).ok_or_else(|| ScanError::UnknownEntry(n.clone()))?;
            if let EntryStatus::Unavailable { reason } = &e.status {
                return Err(ScanError::Unavailable(n.clone(), reason.clone()));
            }
            selected.push(e);
        }
    }
    let mut unavailable = Vec::new();
    let mut computed = Vec::new();
    for e in selected {
        match e.record() {
            Some(r) => computed.push((e.name.clone(), r)),
            None => unavailable.push(e.name.clone()),
        }
    }
    if computed.len() < 2 {
        return Err(ScanError::TooFewEntries);
    }
    let mut pairs = Vec::new();
    for i in 0..computed.len() {
        for j in i + 1..computed.len() {
            let (n1, r1) = &computed[i];
            let (n2, r2) = &computed[j];
            if r1.order != r2.order {
                continue;
            }
            let a_equivalent = r1.a == r2.a;
            assert_eq!(
                a_equivalent,
                r1.spectrum == r2.spectrum,
                "A-equivalence of {n1} and {n2} disagrees with their class equations"
            );
            let (left, right) = if n1 <= n2 { (n1, n2) } else { (n2, n1) };
            let flags = PairFlags {
                left: left.clone(),
                right: right.clone(),
                order: r1.order,
                a_equivalent,
                b_equivalent: r1.b == r2.b,
                same_normalized_a: r1.normalized_a == r2.normalized_a,
                same_normalized_b: r1.normalized_b == r2.normalized_b,
            };
            if predicate.accepts(&flags) {
                pairs.push(flags);
            }
        }
    }
    pairs.sort_by(|x, y| (x.order, &x.left, &x.right).cmp(&(y.order, &y.left, &y.right)));
    Ok(ScanReport {
        schema: SCAN_SCHEMA.into(),
        predicate: predicate.name().into(),
        pairs,
        unavailable,
    })
}
