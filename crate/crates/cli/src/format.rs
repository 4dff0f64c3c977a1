//! JSON forms of specs, invariant records, catalogs and scan reports.
//!
//! Exact rationals are written as `"n"` or `"n/d"` strings. Polynomials are
//! coefficient lists starting at the constant term.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};
use serde_json::Value;
use simconj_core::group::CentralizerSpectrum;
use simconj_core::word::parse_word;
use simconj_core::{
    GroupSpec, InvariantRecord, PartialFraction, PcPresentation, Polynomial, Rational, RationalFunction,
};

pub const CATALOG_SCHEMA: &str = "simconj.catalog/1";
pub const SCAN_SCHEMA: &str = "simconj.scan/1";
pub const RECORD_SCHEMA: &str = "simconj.record/1";

/// A load failure with the JSON path where it happened.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormatError {
    pub path: String,
    pub message: String,
}

impl fmt::Display for FormatError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.path.is_empty() || self.path == "." {
            write!(f, "{}", self.message)
        } else {
            write!(f, "at {}: {}", self.path, self.message)
        }
    }
}

impl std::error::Error for FormatError {}

fn from_json<T: serde::de::DeserializeOwned>(text: &str) -> Result<T, FormatError> {
    let de = &mut serde_json::Deserializer::from_str(text);
    serde_path_to_error::deserialize(de).map_err(|e| FormatError {
        path: e.path().to_string(),
        message: e.into_inner().to_string(),
    })
}

fn at_path(at: &str, inner: &str) -> String {
    match (at.trim_end_matches('.'), inner) {
        ("", "" | ".") => ".".into(),
        (a, "" | ".") => a.into(),
        ("", i) => i.into(),
        (a, i) => format!("{a}.{i}"),
    }
}

fn value_error<T: serde::de::DeserializeOwned>(value: &Value, at: &str) -> Option<FormatError> {
    serde_path_to_error::deserialize::<_, T>(value)
        .err()
        .map(|e| FormatError {
            path: at_path(at, &e.path().to_string()),
            message: e.into_inner().to_string(),
        })
}

/// Finds the innermost failing part of a spec. Tagged enums are buffered by
/// serde, which hides paths below them, so nested specs are retried one by
/// one.
fn locate_spec_error(value: &Value, at: &str) -> Option<FormatError> {
    let top = value_error::<GroupSpec>(value, at)?;
    let obj = match value.as_object() {
        Some(o) => o,
        None => return Some(top),
    };
    let nested = match obj.get("kind").and_then(Value::as_str) {
        Some("direct_product") => obj.get("factors").and_then(Value::as_array).and_then(|fs| {
            fs.iter()
                .enumerate()
                .find_map(|(i, f)| locate_spec_error(f, &format!("{at}factors[{i}].")))
        }),
        Some("semidirect") => ["normal", "complement"]
            .iter()
            .find_map(|k| obj.get(*k).and_then(|v| locate_spec_error(v, &format!("{at}{k}."))))
            .or_else(|| {
                obj.get("action").and_then(Value::as_array).and_then(|acts| {
                    acts.iter().enumerate().find_map(|(i, a)| {
                        value_error::<simconj_core::constructions::Automorphism>(a, &format!("{at}action[{i}]"))
                    })
                })
            }),
        Some("pc") => obj
            .get("presentation")
            .and_then(|p| value_error::<PcPresentation>(p, &format!("{at}presentation"))),
        _ => None,
    };
    Some(nested.unwrap_or(top))
}

/// Parses a group spec and checks every word in it against its generators.
pub fn load_spec(text: &str) -> Result<GroupSpec, FormatError> {
    let value: Value = from_json(text)?;
    let spec: GroupSpec = match GroupSpec::deserialize(&value) {
        Ok(s) => s,
        Err(e) => {
            return Err(locate_spec_error(&value, "").unwrap_or(FormatError {
                path: ".".into(),
                message: e.to_string(),
            }))
        }
    };
    check_words(&spec, "")?;
    Ok(spec)
}

fn check_words(spec: &GroupSpec, at: &str) -> Result<(), FormatError> {
    match spec {
        GroupSpec::Pc { presentation } => {
            let names = &presentation.generators;
            let bad = |path: String, e: simconj_core::word::WordError| FormatError {
                path,
                message: e.to_string(),
            };
            for (i, p) in presentation.powers.iter().enumerate() {
                parse_word(&p.word, names).map_err(|e| bad(format!("{at}presentation.powers[{i}].word"), e))?;
            }
            for (i, r) in presentation.relations.iter().enumerate() {
                let word = match r {
                    simconj_core::constructions::ConjugateRelation::Conjugate { word, .. }
                    | simconj_core::constructions::ConjugateRelation::Action { word, .. }
                    | simconj_core::constructions::ConjugateRelation::Commutator { word, .. } => word,
                };
                parse_word(word, names).map_err(|e| bad(format!("{at}presentation.relations[{i}].word"), e))?;
            }
            Ok(())
        }
        GroupSpec::DirectProduct { factors } => factors
            .iter()
            .enumerate()
            .try_for_each(|(i, f)| check_words(f, &format!("{at}factors[{i}]."))),
        GroupSpec::Semidirect { normal, complement, .. } => {
            check_words(normal, &format!("{at}normal."))?;
            check_words(complement, &format!("{at}complement."))
        }
        _ => Ok(()),
    }
}

pub fn rational_to_string(q: &Rational) -> String {
    q.to_string()
}

pub fn rational_from_str(s: &str) -> Result<Rational, String> {
    let bad = || format!("`{s}` is not an exact rational");
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (
            BigInt::from_str(n).map_err(|_| bad())?,
            BigInt::from_str(d).map_err(|_| bad())?,
        ),
        None => (BigInt::from_str(s).map_err(|_| bad())?, BigInt::one()),
    };
    if d == BigInt::from(0) {
        return Err(bad());
    }
    Ok(Rational::new(n, d))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RationalFunctionJson {
    pub num: Vec<String>,
    pub den: Vec<String>,
}

impl From<&RationalFunction> for RationalFunctionJson {
    fn from(f: &RationalFunction) -> Self {
        let coeffs = |p: &Polynomial| p.coeffs().iter().map(rational_to_string).collect();
        RationalFunctionJson {
            num: coeffs(f.num()),
            den: coeffs(f.den()),
        }
    }
}

impl TryFrom<&RationalFunctionJson> for RationalFunction {
    type Error = String;

    fn try_from(j: &RationalFunctionJson) -> Result<Self, String> {
        let poly = |v: &[String]| -> Result<Polynomial, String> {
            Ok(Polynomial::new(
                v.iter().map(|s| rational_from_str(s)).collect::<Result<_, _>>()?,
            ))
        };
        RationalFunction::new(poly(&j.num)?, poly(&j.den)?).map_err(|e| e.to_string())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PoleTerm {
    pub m: u64,
    pub residue: String,
}

fn pf_to_json(pf: &PartialFraction) -> Vec<PoleTerm> {
    pf.terms()
        .iter()
        .map(|(c, m)| PoleTerm {
            m: *m,
            residue: rational_to_string(c),
        })
        .collect()
}

fn pf_from_json(terms: &[PoleTerm]) -> Result<PartialFraction, String> {
    Ok(PartialFraction::new(
        terms
            .iter()
            .map(|t| Ok((rational_from_str(&t.residue)?, t.m)))
            .collect::<Result<Vec<_>, String>>()?,
    ))
}

/// `z_m` entries, keyed by the centralizer order `m` in decimal.
pub type SpectrumJson = BTreeMap<String, u64>;

fn spectrum_to_json(z: &CentralizerSpectrum) -> SpectrumJson {
    z.iter().map(|(m, c)| (m.to_string(), c)).collect()
}

fn spectrum_from_json(z: &SpectrumJson) -> Result<CentralizerSpectrum, String> {
    let pairs = z
        .iter()
        .map(|(m, &c)| Ok((m.parse::<u64>().map_err(|_| format!("bad centralizer order `{m}`"))?, c)))
        .collect::<Result<Vec<_>, String>>()?;
    Ok(CentralizerSpectrum::from_pairs(pairs))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RecordJson {
    pub group_id: String,
    pub order: u64,
    pub center_order: u64,
    pub class_count: u64,
    pub derived_order: u64,
    pub is_ac: bool,
    pub max_abelian: u64,
    pub spectrum: SpectrumJson,
    pub a: RationalFunctionJson,
    pub b: RationalFunctionJson,
    pub a_pf: Vec<PoleTerm>,
    pub b_pf: Vec<PoleTerm>,
    pub normalized_a: RationalFunctionJson,
    pub normalized_b: RationalFunctionJson,
}

impl From<&InvariantRecord> for RecordJson {
    fn from(r: &InvariantRecord) -> Self {
        RecordJson {
            group_id: r.group_id.clone(),
            order: r.order,
            center_order: r.center_order,
            class_count: r.class_count,
            derived_order: r.derived_order,
            is_ac: r.is_ac,
            max_abelian: r.max_abelian,
            spectrum: spectrum_to_json(&r.spectrum),
            a: (&r.a).into(),
            b: (&r.b).into(),
            a_pf: pf_to_json(&r.a_pf),
            b_pf: pf_to_json(&r.b_pf),
            normalized_a: (&r.normalized_a).into(),
            normalized_b: (&r.normalized_b).into(),
        }
    }
}

impl TryFrom<&RecordJson> for InvariantRecord {
    type Error = String;

    fn try_from(j: &RecordJson) -> Result<Self, String> {
        let r = InvariantRecord {
            group_id: j.group_id.clone(),
            order: j.order,
            center_order: j.center_order,
            class_count: j.class_count,
            derived_order: j.derived_order,
            is_ac: j.is_ac,
            max_abelian: j.max_abelian,
            spectrum: spectrum_from_json(&j.spectrum)?,
            a: (&j.a).try_into()?,
            b: (&j.b).try_into()?,
            a_pf: pf_from_json(&j.a_pf)?,
            b_pf: pf_from_json(&j.b_pf)?,
            normalized_a: (&j.normalized_a).try_into()?,
            normalized_b: (&j.normalized_b).try_into()?,
        };
        if r.spectrum.total() != r.order {
            return Err(format!(
                "spectrum sums to {}, not the order {}",
                r.spectrum.total(),
                r.order
            ));
        }
        let from_spectrum = r.spectrum.iter().fold(RationalFunction::zero(), |acc, (m, z)| {
            acc.add(&RationalFunction::simple_pole(
                Rational::new(z.into(), r.order.into()),
                m,
            ))
        });
        if from_spectrum != r.a {
            return Err("`a` does not match the spectrum".into());
        }
        if r.a_pf.to_rational_function() != r.a || r.b_pf.to_rational_function() != r.b {
            return Err("partial fractions do not match `a` and `b`".into());
        }
        Ok(r)
    }
}

/// A cached record, stored as `<group_id>.json` in the cache directory.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CachedRecord {
    pub schema: String,
    pub record: RecordJson,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case", deny_unknown_fields)]
#[allow(clippy::large_enum_variant)]
pub enum EntryStatus {
    Computed { record: RecordJson },
    Unavailable { reason: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub name: String,
    pub spec: GroupSpec,
    #[serde(flatten)]
    pub status: EntryStatus,
}

impl CatalogEntry {
    pub fn record(&self) -> Option<InvariantRecord> {
        match &self.status {
            EntryStatus::Computed { record } => record.try_into().ok(),
            EntryStatus::Unavailable { .. } => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Catalog {
    pub schema: String,
    pub entries: Vec<CatalogEntry>,
}

impl Catalog {
    pub fn new(entries: Vec<CatalogEntry>) -> Self {
        Catalog {
            schema: CATALOG_SCHEMA.into(),
            entries,
        }
    }

    pub fn get(&self, name: &str) -> Option<&CatalogEntry> {
        self.entries.iter().find(|e| e.name == name)
    }
}

fn locate_catalog_error(value: &Value) -> Option<FormatError> {
    let entries = value.get("entries").and_then(Value::as_array);
    let per_entry = entries.and_then(|es| {
        es.iter().enumerate().find_map(|(i, e)| {
            value_error::<CatalogEntry>(e, &format!("entries[{i}]"))?;
            e.get("spec")
                .and_then(|s| locate_spec_error(s, &format!("entries[{i}].spec.")))
                .or_else(|| {
                    e.get("record")
                        .and_then(|r| value_error::<RecordJson>(r, &format!("entries[{i}].record")))
                })
                .or_else(|| value_error::<CatalogEntry>(e, &format!("entries[{i}]")))
        })
    });
    per_entry.or_else(|| value_error::<Catalog>(value, ""))
}

pub fn load_catalog(text: &str) -> Result<Catalog, FormatError> {
    let value: Value = from_json(text)?;
    let c = match Catalog::deserialize(&value) {
        Ok(c) => c,
        Err(e) => {
            return Err(locate_catalog_error(&value).unwrap_or(FormatError {
                path: ".".into(),
                message: e.to_string(),
            }))
        }
    };
    if c.schema != CATALOG_SCHEMA {
        return Err(FormatError {
            path: "schema".into(),
            message: format!("expected `{CATALOG_SCHEMA}`, found `{}`", c.schema),
        });
    }
    for (i, e) in c.entries.iter().enumerate() {
        check_words(&e.spec, &format!("entries[{i}].spec."))?;
        if let EntryStatus::Computed { record } = &e.status {
            InvariantRecord::try_from(record).map_err(|message| FormatError {
                path: format!("entries[{i}].record"),
                message,
            })?;
        }
    }
    Ok(c)
}

/// Pretty JSON with a trailing newline.
pub fn to_canonical_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PairFlags {
    pub left: String,
    pub right: String,
    pub order: u64,
    pub a_equivalent: bool,
    pub b_equivalent: bool,
    pub same_normalized_a: bool,
    pub same_normalized_b: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScanReport {
    pub schema: String,
    pub predicate: String,
    pub pairs: Vec<PairFlags>,
    /// Catalog entries that could not be computed and were skipped.
    pub unavailable: Vec<String>,
}
