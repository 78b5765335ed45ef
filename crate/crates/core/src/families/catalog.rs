use std::collections::BTreeMap;

use super::schema::{expand_schema, SchemaTemplate};
use super::unified::{unified, UnifiedParams};
use super::Presentation;
use crate::error::{Error, Result};
use crate::rewrite::TermOrder;

/// Catalog entry: id, one-line description, and `(name, default, meaning)`
/// for each accepted parameter.
#[derive(Clone, Copy, Debug)]
pub struct FamilyInfo {
    pub id: &'static str,
    pub summary: &'static str,
    pub params: &'static [(&'static str, &'static str, &'static str)],
}

pub const FAMILIES: &[FamilyInfo] = &[
    FamilyInfo {
        id: "classical",
        summary: "canonical commutation relations on x_k, p_k",
        params: &[("dim", "3", "number of position/momentum pairs, 1..3")],
    },
    FamilyInfo {
        id: "wess",
        summary: "q-deformed Heisenberg algebra on x, p and the scaling generator Lambda",
        params: &[(
            "form",
            "definition",
            "definition | rearranged (x*p - q^-1*p*x = i*hbar*q^(-1/2)*Lambda)",
        )],
    },
    FamilyInfo {
        id: "schmudgen",
        summary: "q-Heisenberg algebra on x, p, u, u^-1",
        params: &[(
            "relations",
            "definition",
            "definition | solved (p*x and x*p expressed in u, u^-1) | printed",
        )],
    },
    FamilyInfo {
        id: "wess_schwenk",
        summary: "q-Heisenberg algebra over the quantum plane, generators x, xbar, p",
        params: &[],
    },
    FamilyInfo {
        id: "gaddis",
        summary: "two-parameter quantum Heisenberg enveloping algebra on x, z, y",
        params: &[("p", "p", "second deformation parameter (central expression)")],
    },
    FamilyInfo {
        id: "gha",
        summary: "generalized Heisenberg algebra H(f) on x, h, y",
        params: &[("f", "h^2", "polynomial in h")],
    },
    FamilyInfo {
        id: "q_gha",
        summary: "q-generalized Heisenberg algebra H_q(f, g) on x, h, y",
        params: &[("f", "h^2", "polynomial in h"), ("g", "h", "polynomial in h")],
    },
    FamilyInfo {
        id: "qhbar",
        summary: "q-hbar Heisenberg algebra on x_j, p_k",
        params: &[("j", "1", "position index 1..3"), ("k", "1", "momentum index 1..3")],
    },
    FamilyInfo {
        id: "qhbar_quantization",
        summary: "q-hbar quantization relation with opaque central D_jk",
        params: &[("j", "1", "position index 1..3"), ("k", "1", "momentum index 1..3")],
    },
    FamilyInfo {
        id: "unified",
        summary: "unified q-hbar Heisenberg algebra on x_a, y_a, p_a with dynamical functions",
        params: &[
            ("n", "1", "integer exponent in the x-p relation"),
            ("m", "1", "integer exponent in the x-y relation"),
            ("l", "1", "integer exponent in the y-p relation"),
            ("psi", "1", "dynamical function of the x-p relation"),
            ("pi", "0", "dynamical function of the x-y relation"),
            ("phi", "0", "dynamical function of the y-p relation"),
            ("dim", "1", "index range 1..dim for each generator kind"),
            ("opaques", "", "comma-separated opaque central symbols used in psi/pi/phi"),
        ],
    },
];

/// Ids of the fixed catalog (everything except the unified constructor).
pub const CATALOG_IDS: &[&str] = &[
    "classical",
    "wess",
    "schmudgen",
    "wess_schwenk",
    "gaddis",
    "gha",
    "q_gha",
    "qhbar",
    "qhbar_quantization",
];

pub fn family_info(id: &str) -> Option<&'static FamilyInfo> {
    FAMILIES.iter().find(|f| f.id == id)
}

/// Resolved parameters: defaults overlaid with the caller's values.
struct Params {
    values: BTreeMap<String, String>,
}

impl Params {
    fn resolve(info: &FamilyInfo, given: &BTreeMap<String, String>) -> Result<Self> {
        for k in given.keys() {
            if !info.params.iter().any(|(n, _, _)| n == k) {
                return Err(Error::Param(format!(
                    "family `{}` has no parameter `{k}`",
                    info.id
                )));
            }
        }
        let values = info
            .params
            .iter()
            .map(|(n, d, _)| {
                (
                    n.to_string(),
                    given.get(*n).cloned().unwrap_or_else(|| d.to_string()),
                )
            })
            .collect();
        Ok(Self { values })
    }

    fn get(&self, k: &str) -> &str {
        &self.values[k]
    }

    fn int(&self, k: &str, lo: i64, hi: i64) -> Result<i64> {
        let v = self.get(k);
        let n: i64 = v
            .trim()
            .parse()
            .map_err(|_| Error::Param(format!("`{k}` must be an integer, got `{v}`")))?;
        if n < lo || n > hi {
            return Err(Error::Param(format!("`{k}` must lie in {lo}..={hi}, got {n}")));
        }
        Ok(n)
    }

    /// Only parameters that differ from their defaults, for display.
    fn non_default(&self, info: &FamilyInfo) -> BTreeMap<String, String> {
        info.params
            .iter()
            .filter(|(n, d, _)| self.values[*n] != *d)
            .map(|(n, _, _)| (n.to_string(), self.values[*n].clone()))
            .collect()
    }
}

/// Builds a catalog presentation. `params` overrides the documented defaults.
pub fn catalog(id: &str, params: &BTreeMap<String, String>) -> Result<Presentation> {
    let info = family_info(id).ok_or_else(|| Error::UnknownFamily(id.to_string()))?;
    let pr = Params::resolve(info, params)?;
    let mut p = match id {
        "classical" => classical(pr.int("dim", 1, 3)? as u8)?,
        "wess" => wess(pr.get("form"))?,
        "schmudgen" => schmudgen(pr.get("relations"))?,
        "wess_schwenk" => wess_schwenk()?,
        "gaddis" => gaddis(pr.get("p"))?,
        "gha" => gha(pr.get("f"), None)?,
        "q_gha" => gha(pr.get("f"), Some(pr.get("g")))?,
        "qhbar" => qhbar(pr.int("j", 1, 3)?, pr.int("k", 1, 3)?, false)?,
        "qhbar_quantization" => qhbar(pr.int("j", 1, 3)?, pr.int("k", 1, 3)?, true)?,
        "unified" => unified(&UnifiedParams::from_text(&pr.values)?)?,
        _ => unreachable!("family table and dispatch agree"),
    };
    p.parameters = pr.non_default(info);
    Ok(p)
}

/// Catalog presentation with all defaults.
pub fn catalog_default(id: &str) -> Result<Presentation> {
    catalog(id, &BTreeMap::new())
}

fn classical(dim: u8) -> Result<Presentation> {
    let names: Vec<String> = (1..=dim)
        .map(|k| format!("x_{k}"))
        .chain((1..=dim).map(|k| format!("p_{k}")))
        .collect();
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    let mut p = Presentation::new("classical", &refs)?;
    let templates = [
        SchemaTemplate::new(
            "xp_{n}{m}",
            "x_{n}*p_{m} - p_{m}*x_{n} - i*hbar*delta({n},{m})",
        ),
        SchemaTemplate::new("xx_{n}{m}", "x_{n}*x_{m} - x_{m}*x_{n}"),
        SchemaTemplate::new("pp_{n}{m}", "p_{n}*p_{m} - p_{m}*p_{n}"),
    ];
    let ranges = [("n", 1, dim), ("m", 1, dim)];
    for t in &templates {
        for r in expand_schema(&p, t, &ranges)? {
            p.push_relation(r)?;
        }
    }
    Ok(p)
}

fn wess(form: &str) -> Result<Presentation> {
    let xp = match form {
        "definition" => "q^(1/2)*x*p - q^(-1/2)*p*x - i*hbar*Lambda",
        "rearranged" => "x*p - q^-1*p*x - i*hbar*Lambda*q^(-1/2)",
        other => {
            return Err(Error::Param(format!(
                "wess form must be definition or rearranged, got `{other}`"
            )))
        }
    };
    let p = Presentation::new("wess", &["Lambda_inv", "Lambda", "p", "x"])?
        .with_inverse("Lambda", "Lambda_inv")?
        .relation("xp", xp)?
        .relation("Lambda_x", "Lambda*x - q^-1*x*Lambda")?
        .relation("Lambda_p", "Lambda*p - q*p*Lambda")?
        // Consequences of the two relations above and the inverse pair.
        .relation("Lambda_inv_x", "x*Lambda_inv - q^-1*Lambda_inv*x")?
        .relation("Lambda_inv_p", "p*Lambda_inv - q*Lambda_inv*p")?
        .note("q real, q != 0")
        .note("adjointness (recorded only): conj(x) = x, conj(p) = p, conj(Lambda) = Lambda^-1");
    Ok(p)
}

fn schmudgen(relations: &str) -> Result<Presentation> {
    let mut p = Presentation::new("schmudgen", &["x", "p", "u_inv", "u"])?
        .with_inverse("u", "u_inv")?
        .relation("up", "u*p - q*p*u")?
        .relation("ux", "u*x - q^-1*x*u")?
        .relation("u_inv_p", "p*u_inv - q*u_inv*p")?
        .relation("u_inv_x", "x*u_inv - q^-1*u_inv*x")?
        .note("q > 0, q != 1 (positivity recorded only)")
        .note("u_inv_p and u_inv_x follow from up, ux and the inverse pair");
    match relations {
        "definition" => {
            p = p
                .relation("px", "p*x - q*x*p - i*(q^(3/2) - q^(-1/2))*u*hbar")?
                .relation("xp", "x*p - q*p*x + i*(q^(3/2) - q^(-1/2))*u_inv*hbar")?;
            // Both relations lead with p*x; split them before orienting.
            p.interreduce = true;
        }
        "solved" => {
            p = p
                .relation("px", "p*x + i*q^(-1/2)*u*hbar - i*q^(1/2)*u_inv*hbar")?
                .relation("xp", "x*p + i*q^(1/2)*u*hbar - i*q^(-1/2)*u_inv*hbar")?;
        }
        "printed" => {
            p = p
                .relation("px", "p*x - i*q^(1/2)*u + i*q^(-1/2)*u_inv*hbar")?
                .relation("xp", "x*p - i*q^(-1/2)*u_inv + i*q^(1/2)*u*hbar")?;
        }
        other => {
            return Err(Error::Param(format!(
                "schmudgen relations must be definition, solved or printed, got `{other}`"
            )))
        }
    }
    Ok(p)
}

fn wess_schwenk() -> Result<Presentation> {
    Presentation::new("wess_schwenk", &["x", "xbar", "p"])?
        .relation("px", "p*x - q*x*p + i*hbar")?
        .relation("pxbar", "p*xbar - q^-1*xbar*p + i*q^-1*hbar")?
        .relation("xxbar", "x*xbar - q*xbar*x")
}

fn central_param(p: &Presentation, key: &str, text: &str) -> Result<String> {
    let v = p.parse(text)?;
    if v.as_scalar().is_none() {
        return Err(Error::Param(format!("`{key}` must be a central expression")));
    }
    Ok(format!("({text})"))
}

fn gaddis(pval: &str) -> Result<Presentation> {
    let base = Presentation::new("gaddis", &["x", "z", "y"])?;
    let pv = central_param(&base, "p", pval)?;
    base.relation("zx", "z*x - q^-1*x*z")?
        .relation("zy", &format!("z*y - {pv}*y*z"))?
        .relation("yx", "y*x - q*x*y - hbar*z")
}

fn h_polynomial(p: &Presentation, key: &str, text: &str) -> Result<String> {
    let v = p.parse(text)?;
    let h = p.gen("h")?;
    if v.terms().any(|(w, _)| w.letters().iter().any(|g| *g != h)) {
        return Err(Error::Param(format!("`{key}` must be a polynomial in h, got `{text}`")));
    }
    Ok(format!("({text})"))
}

fn gha(f: &str, g: Option<&str>) -> Result<Presentation> {
    let name = if g.is_some() { "q_gha" } else { "gha" };
    let mut base = Presentation::new(name, &["x", "h", "y"])?;
    // h*x -> x*f(h) lengthens words, so count inversions first.
    base.order = TermOrder::InversionsFirst;
    let fv = h_polynomial(&base, "f", f)?;
    let yx = match g {
        None => format!("y*x - x*y - hbar*{fv} + hbar*h"),
        Some(g) => {
            let gv = h_polynomial(&base, "g", g)?;
            format!("y*x - q*x*y - hbar*{gv}")
        }
    };
    base.relation("hx", &format!("h*x - x*{fv}"))?
        .relation("yh", &format!("y*h - {fv}*y"))?
        .relation("yx", &yx)
}

fn qhbar(j: i64, k: i64, quantization: bool) -> Result<Presentation> {
    let (x, pk) = (format!("x_{j}"), format!("p_{k}"));
    if quantization {
        let d = format!("D_{j}{k}");
        Presentation::new("qhbar_quantization", &[&x, &pk])?
            .with_opaque(&d)?
            .relation("xp", &format!("{x}*{pk} - q*{pk}*{x} - i*hbar*{d}"))
            .map(|p| p.note(&format!("{d} is an opaque central function of q")))
    } else {
        Presentation::new("qhbar", &[&x, &pk])?
            .relation("px", &format!("{pk}*{x} - q*{x}*{pk} + i*hbar*q^(1/2)"))
            .map(|p| p.note("q complex, q != 0"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classical_has_fifteen_relations() {
        let p = catalog_default("classical").unwrap();
        assert_eq!(p.relations.len(), 15);
        assert_eq!(p.alphabet.len(), 6);
    }

    #[test]
    fn gaddis_relations_as_defined() {
        let p = catalog_default("gaddis").unwrap();
        let labels: Vec<_> = p.relations.iter().map(|r| r.label.as_str()).collect();
        assert_eq!(labels, ["zx", "zy", "yx"]);
        assert_eq!(p.relations[1].poly, p.parse("z*y - p*y*z").unwrap());
    }

    #[test]
    fn gha_instantiates_f() {
        let p = catalog_default("gha").unwrap();
        assert_eq!(p.relations[0].poly, p.parse("h*x - x*h^2").unwrap());
        assert_eq!(p.relations[2].poly, p.parse("y*x - x*y - hbar*h^2 + hbar*h").unwrap());
        let mut bad = BTreeMap::new();
        bad.insert("f".to_string(), "x*h".to_string());
        assert!(matches!(catalog("gha", &bad), Err(Error::Param(_))));
    }

    #[test]
    fn unknown_family_and_parameter() {
        assert_eq!(
            catalog_default("heisenberg").unwrap_err(),
            Error::UnknownFamily("heisenberg".into())
        );
        let mut bad = BTreeMap::new();
        bad.insert("zeta".to_string(), "1".to_string());
        assert!(matches!(catalog("wess", &bad), Err(Error::Param(_))));
    }

    #[test]
    fn every_family_orients() {
        for id in CATALOG_IDS {
            let p = catalog_default(id).unwrap();
            p.rewrite_system().unwrap_or_else(|e| panic!("{id}: {e}"));
        }
    }
}
