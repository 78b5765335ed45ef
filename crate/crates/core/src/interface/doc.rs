//! Line-oriented presentation files.
//!
//! ```text
//! [name]
//! wess
//! [order]
//! deglex
//! [generators]
//! Lambda_inv Lambda p x
//! [inverses]
//! Lambda Lambda_inv
//! [relations]
//! xp: q^(1/2)*x*p - q^(-1/2)*p*x - i*hbar*Lambda
//! ```
//!
//! Generators are listed in ascending precedence. Other sections are
//! `[opaques]`, `[options]` (`interreduce`), `[parameters]` (`key = value`)
//! and `[metadata]` (free text). `#` starts a comment line.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use super::format::format_plain;
use crate::error::{Error, Result};
use crate::families::{Presentation, Relation};
use crate::ncpoly::{Alphabet, Generator};
use crate::rewrite::TermOrder;

const SECTIONS: &[&str] = &[
    "name",
    "order",
    "generators",
    "inverses",
    "opaques",
    "options",
    "parameters",
    "relations",
    "metadata",
];

fn schema(path: impl Into<String>, msg: impl Into<String>) -> Error {
    Error::Schema {
        path: path.into(),
        msg: msg.into(),
    }
}

pub fn save_presentation(p: &Presentation) -> String {
    let mut s = String::new();
    writeln!(s, "[name]\n{}", p.name).unwrap();
    writeln!(s, "[order]\n{}", p.order).unwrap();
    writeln!(s, "[generators]\n{}", p.alphabet.spellings().join(" ")).unwrap();
    if !p.inverse_pairs.is_empty() {
        s.push_str("[inverses]\n");
        for (g, h) in &p.inverse_pairs {
            writeln!(s, "{} {}", p.alphabet.get(*g), p.alphabet.get(*h)).unwrap();
        }
    }
    if !p.opaques.is_empty() {
        writeln!(s, "[opaques]\n{}", p.opaques.join(" ")).unwrap();
    }
    if p.interreduce {
        s.push_str("[options]\ninterreduce\n");
    }
    if !p.parameters.is_empty() {
        s.push_str("[parameters]\n");
        for (k, v) in &p.parameters {
            writeln!(s, "{k} = {v}").unwrap();
        }
    }
    s.push_str("[relations]\n");
    for r in &p.relations {
        writeln!(s, "{}: {}", r.label, format_plain(&r.poly)).unwrap();
    }
    if !p.metadata.is_empty() {
        s.push_str("[metadata]\n");
        for m in &p.metadata {
            writeln!(s, "{m}").unwrap();
        }
    }
    s
}

pub fn load_presentation(text: &str) -> Result<Presentation> {
    let mut sections: BTreeMap<&str, Vec<(usize, &str)>> = BTreeMap::new();
    let mut current: Option<&str> = None;
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if let Some(name) = line.strip_prefix('[').and_then(|l| l.strip_suffix(']')) {
            let name = name.trim();
            let Some(known) = SECTIONS.iter().find(|s| **s == name) else {
                return Err(schema(
                    format!("line {}", lineno + 1),
                    format!("unknown section `[{name}]`"),
                ));
            };
            if sections.contains_key(known) {
                return Err(schema(*known, "section appears twice"));
            }
            sections.insert(known, Vec::new());
            current = Some(known);
            continue;
        }
        let Some(sec) = current else {
            return Err(schema(
                format!("line {}", lineno + 1),
                "content before the first section header",
            ));
        };
        sections.get_mut(sec).unwrap().push((lineno + 1, line));
    }
    let lines = |s: &str| sections.get(s).cloned().unwrap_or_default();

    let name = match lines("name").as_slice() {
        [(_, n)] => n.to_string(),
        [] => return Err(schema("name", "missing")),
        _ => return Err(schema("name", "expected a single line")),
    };
    let order = match lines("order").as_slice() {
        [] => TermOrder::DegLex,
        [(_, o)] => o.parse().map_err(|e: Error| schema("order", e.to_string()))?,
        _ => return Err(schema("order", "expected a single line")),
    };
    let gens: Vec<Generator> = lines("generators")
        .iter()
        .flat_map(|(_, l)| l.split_whitespace())
        .map(Generator::from_spelling)
        .collect();
    if gens.is_empty() {
        return Err(schema("generators", "at least one generator is required"));
    }
    for (k, g) in gens.iter().enumerate() {
        let s = g.spelling();
        if !s.chars().next().is_some_and(|c| c.is_ascii_alphabetic())
            || !s.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
        {
            return Err(schema(format!("generators[{k}]"), format!("invalid name `{s}`")));
        }
    }
    let alphabet = Alphabet::new(gens).map_err(|e| schema("generators", e.to_string()))?;
    let mut p = Presentation {
        name,
        alphabet,
        order,
        inverse_pairs: Vec::new(),
        opaques: Vec::new(),
        relations: Vec::new(),
        interreduce: false,
        parameters: BTreeMap::new(),
        metadata: Vec::new(),
    };
    for (k, (_, l)) in lines("inverses").iter().enumerate() {
        let path = format!("inverses[{k}]");
        let parts: Vec<&str> = l.split_whitespace().collect();
        let [g, h] = parts[..] else {
            return Err(schema(path, "expected `generator inverse`"));
        };
        p = p
            .with_inverse(g, h)
            .map_err(|e| schema(path, e.to_string()))?;
    }
    for (k, o) in lines("opaques")
        .iter()
        .flat_map(|(_, l)| l.split_whitespace())
        .enumerate()
    {
        p = p
            .with_opaque(o)
            .map_err(|e| schema(format!("opaques[{k}]"), e.to_string()))?;
    }
    for (k, (_, l)) in lines("options").iter().enumerate() {
        match *l {
            "interreduce" => p.interreduce = true,
            other => return Err(schema(format!("options[{k}]"), format!("unknown option `{other}`"))),
        }
    }
    for (k, (_, l)) in lines("parameters").iter().enumerate() {
        let Some((key, v)) = l.split_once('=') else {
            return Err(schema(format!("parameters[{k}]"), "expected `key = value`"));
        };
        p.parameters.insert(key.trim().to_string(), v.trim().to_string());
    }
    for (k, (_, l)) in lines("relations").iter().enumerate() {
        let Some((label, expr)) = l.split_once(':') else {
            return Err(schema(format!("relations[{k}]"), "expected `label: expression`"));
        };
        let label = label.trim();
        let path = format!("relations[{k}] ({label})");
        if label.is_empty() {
            return Err(schema(path, "empty label"));
        }
        let poly = p.parse(expr.trim()).map_err(|e| match e {
            Error::UnknownSymbol { name, .. } => {
                schema(path.clone(), format!("undeclared generator or symbol `{name}`"))
            }
            other => schema(path.clone(), other.to_string()),
        })?;
        p.push_relation(Relation::new(label, poly))
            .map_err(|e| schema(path, e.to_string()))?;
    }
    p.metadata = lines("metadata").iter().map(|(_, l)| l.to_string()).collect();
    Ok(p)
}
