mod common;

use qheis_core::interface::{format_plain, load_presentation, parse_expr, save_presentation};
use qheis_core::verify::random_poly;
use qheis_core::Error;

use common::{all_variants, family, rng};

#[test]
fn plain_text_round_trip() {
    for (k, p) in all_variants().iter().enumerate() {
        let syms = p.symbols();
        let mut r = rng(1000 + k as u64);
        for _ in 0..500 {
            let a = random_poly(&p.alphabet, &mut r, 4, 4);
            let text = format_plain(&a);
            let back = parse_expr(&text, &syms).unwrap_or_else(|e| panic!("{}: `{text}`: {e}", p.name));
            assert_eq!(back, a, "{}: `{text}`", p.name);
        }
    }
}

#[test]
fn presentation_file_round_trip() {
    for p in all_variants() {
        let text = save_presentation(&p);
        let back = load_presentation(&text).unwrap_or_else(|e| panic!("{}: {e}\n{text}", p.name));
        assert_eq!(back, p, "{}", p.name);
        assert_eq!(save_presentation(&back), text);
    }
}

#[test]
fn shipped_example_files_load() {
    let dir = concat!(env!("CARGO_MANIFEST_DIR"), "/../../docs/examples");
    let mut n = 0;
    for entry in std::fs::read_dir(dir).unwrap() {
        let path = entry.unwrap().path();
        if path.extension().is_some_and(|e| e == "qh") {
            let p = load_presentation(&std::fs::read_to_string(&path).unwrap()).unwrap();
            p.rewrite_system().unwrap();
            n += 1;
        }
    }
    assert!(n >= 2);
    let shipped = load_presentation(
        &std::fs::read_to_string(format!("{dir}/wess.qh")).unwrap(),
    )
    .unwrap();
    assert_eq!(shipped.relations, family("wess").relations);
}

#[test]
fn schema_errors_carry_paths() {
    let cases = [
        ("[generators]\nx\n", "name"),
        ("[name]\nt\n[generators]\nx 1y\n", "generators[1]"),
        ("[name]\nt\n[generators]\nx y\n[inverses]\nx\n", "inverses[0]"),
        ("[name]\nt\n[generators]\nx y\n[relations]\nxy: y*x - w*x*y\n", "relations[0] (xy)"),
        ("[name]\nt\n[generators]\nx\n[options]\nfast\n", "options[0]"),
        ("[name]\nt\n[name]\nu\n", "name"),
        ("[name]\nt\n[bogus]\n", "line 3"),
    ];
    for (text, path) in cases {
        match load_presentation(text) {
            Err(Error::Schema { path: p, .. }) => assert_eq!(p, path, "{text}"),
            other => panic!("{text}: {other:?}"),
        }
    }
}

#[test]
fn unknown_symbols_suggest_close_names() {
    let p = family("wess");
    match p.parse("Lamda*x") {
        Err(Error::UnknownSymbol { name, suggestion }) => {
            assert_eq!(name, "Lamda");
            assert_eq!(suggestion.as_deref(), Some("Lambda"));
        }
        other => panic!("{other:?}"),
    }
}
