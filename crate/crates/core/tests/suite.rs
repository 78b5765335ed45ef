use qheis_core::verify::{run_suite, Selection, Status, DEFAULT_K};

fn schema() -> serde_json::Value {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/../../docs/report.schema.json");
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

/// Structural check against the published schema: required keys, no extra
/// keys, and enum membership. Full validation runs in the Python smoke test.
fn conforms(value: &serde_json::Value, schema: &serde_json::Value, root: &serde_json::Value) {
    if let Some(r) = schema.get("$ref").and_then(|r| r.as_str()) {
        let name = r.trim_start_matches("#/$defs/");
        return conforms(value, &root["$defs"][name], root);
    }
    if let Some(options) = schema.get("enum").and_then(|e| e.as_array()) {
        assert!(options.contains(value), "{value} not in {options:?}");
    }
    if let Some(c) = schema.get("const") {
        assert_eq!(value, c);
    }
    if let Some(props) = schema.get("properties").and_then(|p| p.as_object()) {
        let obj = value.as_object().expect("object");
        for req in schema["required"].as_array().unwrap() {
            assert!(obj.contains_key(req.as_str().unwrap()), "missing {req}");
        }
        for (k, v) in obj {
            let sub = props.get(k).unwrap_or_else(|| panic!("unexpected key {k}"));
            conforms(v, sub, root);
        }
    }
    if let Some(items) = schema.get("items") {
        for v in value.as_array().expect("array") {
            conforms(v, items, root);
        }
    }
}

#[test]
fn full_suite_has_no_unexpected_results() {
    let rep = run_suite(&Selection::All, DEFAULT_K).unwrap();
    let bad: Vec<_> = rep.cases.iter().filter(|c| c.unexpected).map(|c| &c.id).collect();
    assert!(bad.is_empty(), "{bad:?}\n{}", rep.to_table());
    assert_eq!(rep.summary.fail + rep.summary.error, 0);
    let json: serde_json::Value = serde_json::from_str(&rep.to_json()).unwrap();
    let s = schema();
    conforms(&json, &s, &s);
}

#[test]
fn documented_outcomes() {
    let rep = run_suite(&Selection::All, DEFAULT_K).unwrap();
    let status = |id: &str| rep.case(id).unwrap_or_else(|| panic!("{id}")).status;
    for id in [
        "schmudgen-equivalence",
        "wess-rearranged-equivalence",
        "example-wess",
        "example-schmudgen-n1",
        "example-schmudgen-n-1",
        "example-wess-schwenk",
        "example-qhbar",
        "example-qhbar-quantization",
        "classical-limit-default",
        "gaddis-power-left-k01",
        "gaddis-power-right-k10",
        "wess-ore",
        "wess-schwenk-ore",
        "gaddis-ore",
    ] {
        assert_eq!(status(id), Status::Pass, "{id}");
    }
    for id in [
        "schmudgen-equivalence-as-printed",
        "gaddis-power-left-k02",
        "gaddis-power-left-k10",
        "wess-ore-proof-delta",
        "unified-row03-wess",
    ] {
        assert_eq!(status(id), Status::Discrepancy, "{id}");
    }
    let left = rep.case("gaddis-power-left-k02").unwrap();
    assert!(left.annotations.iter().any(|a| a.contains("p = q")), "{:?}", left.annotations);
}

#[test]
fn suite_is_deterministic() {
    let sel = Selection::parse("gaddis");
    let a = run_suite(&sel, 6).unwrap().to_json();
    let b = run_suite(&sel, 6).unwrap().to_json();
    assert_eq!(a, b);
}
