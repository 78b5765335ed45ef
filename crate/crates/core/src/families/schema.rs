use super::{Presentation, Relation};
use crate::error::{Error, Result};
use crate::ncpoly::NCPoly;

/// A relation template over index variables, e.g.
/// `x_{n}*p_{m} - p_{m}*x_{n} - i*hbar*delta({n},{m})`.
///
/// `{n}` placeholders are replaced in both label and text; `delta(a,b)` is
/// then evaluated to `1` or `0`.
#[derive(Clone, Debug)]
pub struct SchemaTemplate {
    pub label: String,
    pub text: String,
}

impl SchemaTemplate {
    pub fn new(label: &str, text: &str) -> Self {
        Self {
            label: label.to_string(),
            text: text.to_string(),
        }
    }
}

fn placeholders(s: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut rest = s;
    while let Some(i) = rest.find('{') {
        let Some(j) = rest[i..].find('}') else { break };
        out.push(rest[i + 1..i + j].to_string());
        rest = &rest[i + j + 1..];
    }
    out.sort();
    out.dedup();
    out
}

fn substitute(s: &str, binding: &[(String, u8)]) -> String {
    let mut out = s.to_string();
    for (k, v) in binding {
        out = out.replace(&format!("{{{k}}}"), &v.to_string());
    }
    out
}

fn eval_deltas(s: &str) -> Result<String> {
    let mut out = String::new();
    let mut rest = s;
    while let Some(i) = rest.find("delta(") {
        out.push_str(&rest[..i]);
        let after = &rest[i + "delta(".len()..];
        let close = after
            .find(')')
            .ok_or_else(|| Error::Param("unterminated delta(".into()))?;
        let args: Vec<&str> = after[..close].split(',').map(str::trim).collect();
        if args.len() != 2 {
            return Err(Error::Param("delta takes two indices".into()));
        }
        out.push_str(if args[0] == args[1] { "1" } else { "0" });
        rest = &after[close + 1..];
    }
    out.push_str(rest);
    Ok(out)
}

/// `b` is a nonzero central multiple of `a`.
pub fn is_unit_multiple(a: &NCPoly, b: &NCPoly) -> Option<crate::coeffs::Coefficient> {
    let (w, ca) = a.terms().next()?;
    let cb = b.coeff(w);
    if cb.is_zero() {
        return None;
    }
    let u = cb.div(ca).ok()?;
    (a.scale(&u) == *b).then_some(u)
}

/// One relation per assignment of the index variables, each ranging over
/// `lo..=hi`. Zero relations and central multiples of earlier ones are dropped,
/// so antisymmetric templates yield one relation per unordered pair.
pub fn expand_schema(
    p: &Presentation,
    template: &SchemaTemplate,
    ranges: &[(&str, u8, u8)],
) -> Result<Vec<Relation>> {
    let vars = placeholders(&template.text);
    for v in &vars {
        if !ranges.iter().any(|(n, _, _)| n == v) {
            return Err(Error::Param(format!("index `{v}` has no range")));
        }
    }
    let mut bindings: Vec<Vec<(String, u8)>> = vec![Vec::new()];
    for v in &vars {
        let (_, lo, hi) = ranges.iter().find(|(n, _, _)| n == v).unwrap();
        bindings = bindings
            .into_iter()
            .flat_map(|b| {
                (*lo..=*hi).map(move |k| {
                    let mut b = b.clone();
                    b.push((v.clone(), k));
                    b
                })
            })
            .collect();
    }
    let mut out: Vec<Relation> = Vec::new();
    for b in bindings {
        let text = eval_deltas(&substitute(&template.text, &b))?;
        let poly = p.parse(&text)?;
        if poly.is_zero() || out.iter().any(|r| is_unit_multiple(&r.poly, &poly).is_some()) {
            continue;
        }
        out.push(Relation::new(&substitute(&template.label, &b), poly));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn classical(dim: u8) -> Presentation {
        let names: Vec<String> = (1..=dim)
            .map(|k| format!("x_{k}"))
            .chain((1..=dim).map(|k| format!("p_{k}")))
            .collect();
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        Presentation::new("c", &refs).unwrap()
    }

    #[test]
    fn delta_selects_diagonal() {
        let p = classical(2);
        let t = SchemaTemplate::new(
            "xp{n}{m}",
            "x_{n}*p_{m} - p_{m}*x_{n} - i*hbar*delta({n},{m})",
        );
        let rels = expand_schema(&p, &t, &[("n", 1, 1), ("m", 1, 2)]).unwrap();
        assert_eq!(rels.len(), 2);
        assert_eq!(rels[0].poly, p.parse("x_1*p_1 - p_1*x_1 - i*hbar").unwrap());
        assert_eq!(rels[1].poly, p.parse("x_1*p_2 - p_2*x_1").unwrap());
    }

    #[test]
    fn antisymmetric_template_counts_unordered_pairs() {
        let p = classical(3);
        let t = SchemaTemplate::new("xx{n}{m}", "x_{n}*x_{m} - x_{m}*x_{n}");
        let rels = expand_schema(&p, &t, &[("n", 1, 3), ("m", 1, 3)]).unwrap();
        assert_eq!(rels.len(), 3);
    }

    #[test]
    fn unbound_index_is_rejected() {
        let p = classical(1);
        let t = SchemaTemplate::new("bad", "x_{k}*p_1");
        assert!(matches!(expand_schema(&p, &t, &[]), Err(Error::Param(_))));
    }
}
