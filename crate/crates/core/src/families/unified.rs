use std::collections::BTreeMap;

use super::schema::is_unit_multiple;
use super::{Presentation, Relation};
use crate::coeffs::monomial::S;
use crate::coeffs::{Coefficient, GaussRational};
use crate::error::{Error, Result};
use crate::ncpoly::NCPoly;

/// Which of the three defining relations of the unified algebra.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum NH {
    /// The x-p relation, governed by `n` and `psi`.
    XP,
    /// The x-y relation, governed by `m` and `pi`.
    XY,
    /// The y-p relation, governed by `l` and `phi`.
    YP,
}

impl NH {
    pub const ALL: [NH; 3] = [NH::XP, NH::XY, NH::YP];

    pub fn name(&self) -> &'static str {
        match self {
            NH::XP => "xp",
            NH::XY => "xy",
            NH::YP => "yp",
        }
    }
}

/// Exponents and dynamical functions, as expression text over the unified
/// alphabet (`x_a`, `y_a`, `p_a`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnifiedParams {
    pub n: i32,
    pub m: i32,
    pub l: i32,
    pub psi: String,
    pub pi: String,
    pub phi: String,
    pub dim: u8,
    pub opaques: Vec<String>,
}

impl Default for UnifiedParams {
    fn default() -> Self {
        Self {
            n: 1,
            m: 1,
            l: 1,
            psi: "1".into(),
            pi: "0".into(),
            phi: "0".into(),
            dim: 1,
            opaques: Vec::new(),
        }
    }
}

fn int_param(v: &BTreeMap<String, String>, k: &str) -> Result<i32> {
    let t = v[k].trim();
    t.parse().map_err(|_| {
        Error::Param(format!(
            "`{k}` must be an integer (real exponents are not supported), got `{t}`"
        ))
    })
}

impl UnifiedParams {
    pub fn from_text(v: &BTreeMap<String, String>) -> Result<Self> {
        let dim = int_param(v, "dim")?;
        if !(1..=3).contains(&dim) {
            return Err(Error::Param(format!("`dim` must lie in 1..=3, got {dim}")));
        }
        Ok(Self {
            n: int_param(v, "n")?,
            m: int_param(v, "m")?,
            l: int_param(v, "l")?,
            psi: v["psi"].clone(),
            pi: v["pi"].clone(),
            phi: v["phi"].clone(),
            dim: dim as u8,
            opaques: v["opaques"]
                .split(',')
                .map(str::trim)
                .filter(|s| !s.is_empty())
                .map(String::from)
                .collect(),
        })
    }
}

/// The exponent and dynamical-function values of one instantiation.
#[derive(Clone, Debug)]
pub struct Dynamics {
    pub n: i32,
    pub m: i32,
    pub l: i32,
    pub psi: NCPoly,
    pub pi: NCPoly,
    pub phi: NCPoly,
}

/// Instantiates one defining relation with `x`, `y`, `p` standing for the
/// three generator kinds (any polynomials over a common alphabet):
///
/// - `XP`: `x*p - q^n*p*x - i*q^(n-1)*hbar^n*psi`
/// - `XY`: `q^m*x*y - y*x + i*(q-1)^(m-1)*hbar^(m-1)*pi`
/// - `YP`: `q^l*y*p - q^(l+1)*p*y - i*hbar^l*phi`
pub fn nh_relation(which: NH, d: &Dynamics, x: &NCPoly, y: &NCPoly, p: &NCPoly) -> Result<NCPoly> {
    let i = Coefficient::i();
    Ok(match which {
        NH::XP => {
            let c = i.mul(&Coefficient::q(d.n - 1)).mul(&Coefficient::hbar(d.n));
            &(&(x * p) - &(p * x).scale(&Coefficient::q(d.n))) - &d.psi.scale(&c)
        }
        NH::XY => {
            let qm1 = Coefficient::q(1).sub(&Coefficient::one());
            let c = i.mul(&qm1.pow(d.m - 1)?).mul(&Coefficient::hbar(d.m - 1));
            &(&(x * y).scale(&Coefficient::q(d.m)) - &(y * x)) + &d.pi.scale(&c)
        }
        NH::YP => {
            let c = i.mul(&Coefficient::hbar(d.l));
            &(&(y * p).scale(&Coefficient::q(d.l)) - &(p * y).scale(&Coefficient::q(d.l + 1)))
                - &d.phi.scale(&c)
        }
    })
}

/// The unified algebra on `x_a < y_a < p_a`, one relation of each kind per
/// index triple. Relations that coincide up to a central factor are kept once.
pub fn unified(params: &UnifiedParams) -> Result<Presentation> {
    let r = 1..=params.dim;
    let names: Vec<String> = r
        .clone()
        .map(|a| format!("x_{a}"))
        .chain(r.clone().map(|a| format!("y_{a}")))
        .chain(r.clone().map(|a| format!("p_{a}")))
        .collect();
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    let mut pres = Presentation::new("unified", &refs)?;
    for o in &params.opaques {
        pres = pres.with_opaque(o)?;
    }
    let d = Dynamics {
        n: params.n,
        m: params.m,
        l: params.l,
        psi: pres.parse(&params.psi)?,
        pi: pres.parse(&params.pi)?,
        phi: pres.parse(&params.phi)?,
    };
    for a in r.clone() {
        for lam in r.clone() {
            for b in r.clone() {
                let x = pres.parse(&format!("x_{a}"))?;
                let y = pres.parse(&format!("y_{lam}"))?;
                let p = pres.parse(&format!("p_{b}"))?;
                for which in NH::ALL {
                    let poly = nh_relation(which, &d, &x, &y, &p)?;
                    if poly.is_zero()
                        || pres
                            .relations
                            .iter()
                            .any(|r| is_unit_multiple(&r.poly, &poly).is_some())
                    {
                        continue;
                    }
                    let label = format!("{}_{a}{lam}{b}", which.name());
                    pres.push_relation(Relation::new(&label, poly))?;
                }
            }
        }
    }
    pres.metadata
        .push("q real, q not in {0, 1}; q = 1 only through the classical limit".into());
    Ok(pres)
}

/// Substitutes `q = 1` in every relation. Fails with a pole error when a
/// relation carries a surviving `(q-1)` denominator.
pub fn classical_limit(p: &Presentation) -> Result<Presentation> {
    let one = GaussRational::one();
    let mut out = p.clone();
    out.name = format!("{}@q=1", p.name);
    out.relations = p
        .relations
        .iter()
        .map(|r| {
            Ok(Relation::new(&r.label, r.poly.substitute_central(S, &one)?))
        })
        .collect::<Result<Vec<_>>>()?;
    out.relations.retain(|r| !r.poly.is_zero());
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classical_row_relations() {
        let p = unified(&UnifiedParams::default()).unwrap();
        assert_eq!(p.relations.len(), 3);
        assert_eq!(
            p.relations[0].poly,
            p.parse("x_1*p_1 - q*p_1*x_1 - i*hbar").unwrap()
        );
        let lim = classical_limit(&p).unwrap();
        assert_eq!(
            lim.relations[0].poly,
            p.parse("x_1*p_1 - p_1*x_1 - i*hbar").unwrap()
        );
        assert_eq!(lim.relations[1].poly, p.parse("x_1*y_1 - y_1*x_1").unwrap());
    }

    #[test]
    fn pole_blocks_classical_limit() {
        let params = UnifiedParams {
            m: 0,
            pi: "1".into(),
            ..UnifiedParams::default()
        };
        let p = unified(&params).unwrap();
        assert!(matches!(classical_limit(&p), Err(Error::PoleAtPoint(_))));
    }

    #[test]
    fn wess_example_reduces_xp_relation() {
        let params = UnifiedParams {
            n: -1,
            psi: "hbar^2*y_1*q^(3/2)".into(),
            ..UnifiedParams::default()
        };
        let p = unified(&params).unwrap();
        let expect = p
            .parse("x_1*p_1 - q^-1*p_1*x_1 - i*hbar*y_1*q^(-1/2)")
            .unwrap();
        assert_eq!(p.relations[0].poly, expect);
    }

    #[test]
    fn non_integer_exponent_rejected() {
        let mut v: BTreeMap<String, String> = [
            ("n", "1/2"),
            ("m", "1"),
            ("l", "1"),
            ("psi", "1"),
            ("pi", "0"),
            ("phi", "0"),
            ("dim", "1"),
            ("opaques", ""),
        ]
        .into_iter()
        .map(|(a, b)| (a.to_string(), b.to_string()))
        .collect();
        assert!(matches!(UnifiedParams::from_text(&v), Err(Error::Param(_))));
        v.insert("n".into(), "2".into());
        assert!(UnifiedParams::from_text(&v).is_ok());
    }
}
