use proptest::prelude::*;
use simconj::catalog::{build_catalog, record_for, scan, Predicate};
use simconj::format::{
    load_catalog, load_spec, rational_from_str, rational_to_string, to_canonical_json, CachedRecord, RecordJson,
    RECORD_SCHEMA,
};
use simconj::registry::{builtin_catalog, named_group, SHIPPED_SPECS};
use simconj_core::ratfun::q;
use simconj_core::{build, GroupSpec, InvariantRecord};
use tempfile::TempDir;

#[test]
fn q8_record_round_trips_byte_for_byte() {
    let g = build(&GroupSpec::quaternion(8)).unwrap();
    let record = InvariantRecord::compute(&g).unwrap();
    let json = to_canonical_json(&RecordJson::from(&record));
    let parsed: RecordJson = serde_json::from_str(&json).unwrap();
    assert_eq!(to_canonical_json(&parsed), json);
    assert_eq!(InvariantRecord::try_from(&parsed).unwrap(), record);
    assert!(json.contains("\"1/2\""), "exact rationals are strings");
}

#[test]
fn tampered_records_are_rejected() {
    let catalog = build_catalog(vec![("Q8".into(), GroupSpec::quaternion(8))], None);
    let json = to_canonical_json(&catalog);
    assert!(load_catalog(&json).is_ok());
    let tampered = json.replacen("\"residue\": \"1/4\"", "\"residue\": \"1/3\"", 1);
    assert_ne!(tampered, json);
    let err = load_catalog(&tampered).unwrap_err();
    assert_eq!(err.path, "entries[0].record");
    let tampered = json.replacen("\"8\": 2", "\"8\": 3", 1);
    assert_ne!(tampered, json);
    assert!(load_catalog(&tampered).unwrap_err().message.contains("spectrum"));
}

#[test]
fn record_cache_is_reused_and_repaired() {
    let dir = TempDir::new().unwrap();
    let g = build(&GroupSpec::dihedral(10)).unwrap();
    let first = record_for(&g, Some(dir.path())).unwrap();
    let path = dir.path().join(format!("{}.json", g.group_id()));
    let bytes = std::fs::read(&path).unwrap();
    let cached: CachedRecord = serde_json::from_slice(&bytes).unwrap();
    assert_eq!(cached.schema, RECORD_SCHEMA);
    assert_eq!(record_for(&g, Some(dir.path())).unwrap(), first);

    std::fs::write(&path, "{ not json").unwrap();
    assert_eq!(record_for(&g, Some(dir.path())).unwrap(), first);
    assert_eq!(std::fs::read(&path).unwrap(), bytes);
}

#[test]
fn spec_errors_carry_json_paths() {
    let cases = [
        (
            r#"{"kind":"direct_product","factors":[{"kind":"cyclic","order":2},
                {"kind":"pc","presentation":{"generators":["a"],"relative_orders":[2],
                 "powers":[{"generator":"a","word":"b"}]}}]}"#,
            "factors[1].presentation.powers[0].word",
        ),
        (
            r#"{"kind":"semidirect","normal":{"kind":"cyclic","order":5},
                "complement":{"kind":"pc","presentation":{"generators":["h"],"relative_orders":[2],
                 "relations":[{"kind":"commutator","left":"h","right":"h","word":"h^x"}]}},"action":[]}"#,
            "complement.presentation.relations[0].word",
        ),
        (
            r#"{"kind":"direct_product","factors":[{"kind":"cyclic","order":2},{"kind":"cyclic","order":"three"}]}"#,
            "factors[1]",
        ),
        (
            r#"{"kind":"pc","presentation":{"generators":["a","b"],"relative_orders":[2,-3]}}"#,
            "presentation.relative_orders[1]",
        ),
        (
            r#"{"kind":"semidirect","normal":{"kind":"cyclic","order":5},"complement":{"kind":"cyclic","order":2},
                "action":[{"kind":"permutation","images":"0 4 3 2 1"}]}"#,
            "action[0]",
        ),
        (r#"{"kind":"dihedral","order":6,"colour":1}"#, "."),
        (
            r#"{"kind":"direct_product","factors":[{"kind":"cyclic"}]}"#,
            "factors[0]",
        ),
    ];
    for (text, path) in cases {
        let err = load_spec(text).unwrap_err();
        assert_eq!(err.path, path, "{err}");
    }
}

#[test]
fn catalog_errors_carry_json_paths() {
    let bad_spec = r#"{"schema":"simconj.catalog/1","entries":[
        {"name":"x","spec":{"kind":"direct_product","factors":[{"kind":"cyclic","order":-1}]},
         "status":"unavailable","reason":"r"}]}"#;
    assert_eq!(load_catalog(bad_spec).unwrap_err().path, "entries[0].spec.factors[0]");
    let bad_record = r#"{"schema":"simconj.catalog/1","entries":[
        {"name":"x","spec":{"kind":"cyclic","order":2},"status":"computed","record":{"order":"two"}}]}"#;
    assert!(load_catalog(bad_record)
        .unwrap_err()
        .path
        .starts_with("entries[0].record"));
    let bad_word = r#"{"schema":"simconj.catalog/1","entries":[
        {"name":"x","spec":{"kind":"pc","presentation":{"generators":["a"],"relative_orders":[2],
          "powers":[{"generator":"a","word":"q"}]}},"status":"unavailable","reason":"r"}]}"#;
    assert_eq!(
        load_catalog(bad_word).unwrap_err().path,
        "entries[0].spec.presentation.powers[0].word"
    );
}

#[test]
fn shipped_specs_round_trip_through_json() {
    for (name, text) in SHIPPED_SPECS {
        let spec = load_spec(text).unwrap();
        let again = load_spec(&serde_json::to_string(&spec).unwrap()).unwrap();
        assert_eq!(spec, again, "{name}");
        assert_eq!(named_group(name).unwrap(), spec);
    }
}

#[test]
fn builtin_catalog_reproduces_the_known_pairs() {
    let dir = TempDir::new().unwrap();
    let catalog = build_catalog(builtin_catalog(), Some(dir.path()));
    assert!(catalog.entries.iter().all(|e| e.record().is_some()));
    let json = to_canonical_json(&catalog);
    assert_eq!(to_canonical_json(&load_catalog(&json).unwrap()), json);
    let recomputed = build_catalog(builtin_catalog(), None);
    assert_eq!(to_canonical_json(&recomputed), json);

    let pairs = |p| -> Vec<(String, String)> {
        scan(&catalog, p, &[])
            .unwrap()
            .pairs
            .into_iter()
            .map(|f| (f.left, f.right))
            .collect()
    };
    let s = |a: &str, b: &str| (a.to_string(), b.to_string());
    assert_eq!(pairs(Predicate::BNotA), vec![s("G54_6", "G54_8")]);
    assert_eq!(pairs(Predicate::ANotB), vec![s("G128_1758", "G128_2022")]);
    let ab = pairs(Predicate::AbNotNormalized);
    assert!(ab.contains(&s("G18_1", "G18_4")));
    assert!(ab.contains(&s("D8", "Q8")));

    let names = vec!["G18_1".to_string(), "G18_4".to_string()];
    let report = scan(&catalog, Predicate::All, &names).unwrap();
    assert_eq!(report.pairs.len(), 1);
    let f = &report.pairs[0];
    assert!(f.a_equivalent && f.b_equivalent && f.same_normalized_a && f.same_normalized_b);
}

#[test]
fn unavailable_entries_are_reported() {
    let bad = GroupSpec::Dihedral { order: 7 };
    let entries = vec![
        ("C3".to_string(), GroupSpec::cyclic(3)),
        ("bad".to_string(), bad),
        ("C3'".to_string(), GroupSpec::cyclic(3)),
    ];
    let catalog = build_catalog(entries, None);
    assert!(catalog.get("bad").unwrap().record().is_none());
    let report = scan(&catalog, Predicate::All, &[]).unwrap();
    assert_eq!(report.unavailable, vec!["bad".to_string()]);
    assert_eq!(report.pairs.len(), 1);
    assert!(scan(&catalog, Predicate::All, &["bad".to_string(), "C3".to_string()]).is_err());
}

proptest! {
    #[test]
    fn rationals_round_trip(n in -10_000i64..10_000, d in 1i64..10_000) {
        let r = q(n, d);
        let text = rational_to_string(&r);
        prop_assert_eq!(rational_from_str(&text).unwrap(), r);
    }

    #[test]
    fn junk_rationals_are_rejected(s in "[a-z ]{1,6}") {
        prop_assert!(rational_from_str(&s).is_err());
    }
}
