//! The individual verification procedures. Each returns a [`CheckOutcome`];
//! the suite turns outcomes into report records.

use rand::Rng;

use super::random::{random_point, random_poly};
use crate::coeffs::monomial::S;
use crate::coeffs::{Coefficient, GaussRational};
use crate::error::{Error, Result};
use crate::families::{
    extract_ore, is_unit_multiple, nh_relation, ore_identity_holds, Dynamics, Presentation, NH,
};
use crate::interface::{format_coefficient, format_plain};
use crate::ncpoly::{NCPoly, Word};
use crate::rewrite::RewriteSystem;

/// Numeric points used to confirm a symbolic pass.
pub const SPOT_CHECK_POINTS: usize = 5;
const TRACE_LIMIT: usize = 40;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CheckOutcome {
    pub passed: bool,
    /// Rendering of what went wrong: a nonzero remainder, an unresolved
    /// relation, a mismatching Ore datum.
    pub witness: Option<String>,
    /// Central factors relating instantiated and target relations.
    pub units: Vec<String>,
    pub notes: Vec<String>,
    pub trace: Option<Vec<String>>,
    /// Symbolic equality held but some numeric point disagreed.
    pub numeric_mismatch: bool,
}

impl CheckOutcome {
    fn pass() -> Self {
        Self {
            passed: true,
            ..Self::default()
        }
    }

    fn fail(witness: String) -> Self {
        Self {
            passed: false,
            witness: Some(witness),
            ..Self::default()
        }
    }
}

fn is_pole(e: &Error) -> bool {
    matches!(e, Error::PoleAtPoint(_) | Error::DivisionByZero)
}

/// Compares `a` and `b` coefficientwise at `points` random central points,
/// redrawing any point that hits a pole.
pub fn spot_check(a: &NCPoly, b: &NCPoly, points: usize, rng: &mut impl Rng) -> Result<bool> {
    let mut extra: Vec<String> = a
        .central_variables()
        .into_iter()
        .chain(b.central_variables())
        .filter(|v| !["s", "t", "h"].contains(&v.as_str()))
        .collect();
    extra.sort();
    extra.dedup();
    let mut done = 0;
    let mut attempts = 0;
    while done < points {
        attempts += 1;
        if attempts > 50 * points {
            return Err(Error::PoleAtPoint(None));
        }
        let pt = random_point(rng, &extra);
        let (ea, eb) = match (a.central_scale_eval(&pt), b.central_scale_eval(&pt)) {
            (Ok(ea), Ok(eb)) => (ea, eb),
            (Err(e), _) | (_, Err(e)) if is_pole(&e) => continue,
            (Err(e), _) | (_, Err(e)) => return Err(e),
        };
        let zero = GaussRational::zero();
        let words: std::collections::BTreeSet<&Word> = ea.keys().chain(eb.keys()).collect();
        for w in words {
            if ea.get(w).unwrap_or(&zero) != eb.get(w).unwrap_or(&zero) {
                return Ok(false);
            }
        }
        done += 1;
    }
    Ok(true)
}

fn render_trace(sys: &RewriteSystem, a: &NCPoly) -> Option<Vec<String>> {
    let steps = sys.reduce_trace(a).ok()?;
    let al = sys.alphabet();
    Some(
        steps
            .iter()
            .take(TRACE_LIMIT)
            .map(|s| {
                format!(
                    "{} at {} of {} => {}",
                    s.origin,
                    s.position,
                    s.word.render(al),
                    format_plain(&s.result)
                )
            })
            .collect(),
    )
}

/// `lhs = rhs` in the quotient: `lhs - rhs` normalizes to zero, confirmed at
/// [`SPOT_CHECK_POINTS`] numeric points.
pub fn verify_poly_identity(
    lhs: &NCPoly,
    rhs: &NCPoly,
    sys: &RewriteSystem,
    rng: &mut impl Rng,
) -> Result<CheckOutcome> {
    let diff = lhs.checked_sub(rhs)?;
    let rem = sys.normalize(&diff)?;
    if !rem.is_zero() {
        let mut out = CheckOutcome::fail(format_plain(&rem));
        out.trace = render_trace(sys, &diff);
        return Ok(out);
    }
    let mut out = CheckOutcome::pass();
    let (nl, nr) = (sys.normalize(lhs)?, sys.normalize(rhs)?);
    if !spot_check(&nl, &nr, SPOT_CHECK_POINTS, rng)? {
        out.passed = false;
        out.numeric_mismatch = true;
        out.witness = Some(format!(
            "symbolic remainder is zero but {} and {} differ numerically",
            format_plain(&nl),
            format_plain(&nr)
        ));
    }
    Ok(out)
}

/// Every relation of each side vanishes under the other's rules, and
/// `samples` random polynomials with words of length at most `depth` share
/// their normal form.
pub fn verify_relation_set_equivalence(
    p1: &Presentation,
    p2: &Presentation,
    depth: usize,
    samples: usize,
    rng: &mut impl Rng,
) -> Result<CheckOutcome> {
    if p1.alphabet.spellings() != p2.alphabet.spellings() {
        return Err(Error::AlphabetError);
    }
    let (s1, s2) = (p1.rewrite_system()?, p2.rewrite_system()?);
    for (from, to, sys) in [(p1, p2, &s2), (p2, p1, &s1)] {
        for r in &from.relations {
            let nf = sys.normalize(&r.poly.rename_into(&to.alphabet)?)?;
            if !nf.is_zero() {
                return Ok(CheckOutcome::fail(format!(
                    "relation `{}` of {} leaves {} under {}",
                    r.label,
                    from.name,
                    format_plain(&nf),
                    to.name
                )));
            }
        }
    }
    for _ in 0..samples {
        let a = random_poly(&p1.alphabet, rng, depth, 3);
        let n1 = s1.normalize(&a)?;
        let n2 = s2.normalize(&a.rename_into(&p2.alphabet)?)?.rename_into(&p1.alphabet)?;
        if n1 != n2 {
            return Ok(CheckOutcome::fail(format!(
                "{} has normal forms {} and {}",
                format_plain(&a),
                format_plain(&n1),
                format_plain(&n2)
            )));
        }
    }
    let mut out = CheckOutcome::pass();
    out.notes.push(format!(
        "{} relations cross-checked, {samples} random polynomials agree",
        p1.relations.len() + p2.relations.len()
    ));
    Ok(out)
}

/// One side of the power identities in the two-parameter enveloping algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PowerSide {
    /// `y*x^k = q^k*x^k*y + hbar*[k]*x^(k-1)*z`
    Left,
    /// `y^k*x = q^k*x*y^k + hbar*[k]*z*y^(k-1)`
    Right,
}

/// Both sides of a power identity over `p`'s alphabet, with `bracket` as
/// the quantum integer.
pub fn power_identity_sides(
    p: &Presentation,
    side: PowerSide,
    k: u32,
    bracket: &Coefficient,
) -> Result<(NCPoly, NCPoly)> {
    let x = p.parse("x")?;
    let y = p.parse("y")?;
    let z = p.parse("z")?;
    let qk = Coefficient::q(k as i32);
    let c = Coefficient::hbar(1).mul(bracket);
    Ok(match side {
        PowerSide::Left => (
            &y * &x.pow(k),
            &(&x.pow(k) * &y).scale(&qk) + &(&x.pow(k - 1) * &z).scale(&c),
        ),
        PowerSide::Right => (
            &y.pow(k) * &x,
            &(&x * &y.pow(k)).scale(&qk) + &(&z * &y.pow(k - 1)).scale(&c),
        ),
    })
}

/// A proposed specialization of the unified relations onto a target algebra.
#[derive(Clone, Debug)]
pub struct Specialization {
    pub n: i32,
    pub m: i32,
    pub l: i32,
    /// Dynamical functions as text over the target's symbols.
    pub psi: String,
    pub pi: String,
    pub phi: String,
    /// Target spellings substituted for `x_1`, `y_1`, `p_1`.
    pub x: String,
    pub y: Option<String>,
    pub p: String,
    /// Relations the specialization claims to recover.
    pub relations: Vec<NH>,
    /// Substitute `q = 1` after instantiating.
    pub at_q_one: bool,
}

impl Specialization {
    pub fn new(n: i32, m: i32, l: i32, psi: &str, pi: &str, phi: &str) -> Self {
        Self {
            n,
            m,
            l,
            psi: psi.into(),
            pi: pi.into(),
            phi: phi.into(),
            x: "x".into(),
            y: None,
            p: "p".into(),
            relations: NH::ALL.to_vec(),
            at_q_one: false,
        }
    }

    pub fn rename(mut self, x: &str, y: Option<&str>, p: &str) -> Self {
        self.x = x.into();
        self.y = y.map(Into::into);
        self.p = p.into();
        self
    }

    pub fn claiming(mut self, relations: &[NH]) -> Self {
        self.relations = relations.to_vec();
        self
    }

    pub fn at_q_one(mut self) -> Self {
        self.at_q_one = true;
        self
    }

    /// Instantiated relations, one per claimed kind.
    pub fn instantiate(&self, target: &Presentation) -> Result<Vec<(NH, NCPoly)>> {
        let gen = |s: &str| -> Result<NCPoly> {
            target
                .alphabet
                .lookup(s)
                .map(|g| NCPoly::generator(&target.alphabet, g))
                .ok_or_else(|| {
                    Error::Param(format!("renaming target `{s}` is not a generator of {}", target.name))
                })
        };
        let x = gen(&self.x)?;
        let p = gen(&self.p)?;
        let y = match &self.y {
            Some(s) => gen(s)?,
            None => {
                if self.relations.iter().any(|r| *r != NH::XP) {
                    return Err(Error::Param(
                        "the x-y and y-p relations need a target for y".into(),
                    ));
                }
                NCPoly::zero(&target.alphabet)
            }
        };
        let d = Dynamics {
            n: self.n,
            m: self.m,
            l: self.l,
            psi: target.parse(&self.psi)?,
            pi: target.parse(&self.pi)?,
            phi: target.parse(&self.phi)?,
        };
        self.relations
            .iter()
            .map(|&which| {
                let mut rel = nh_relation(which, &d, &x, &y, &p)?;
                if self.at_q_one {
                    rel = rel.substitute_central(S, &GaussRational::one())?;
                }
                Ok((which, rel))
            })
            .collect()
    }
}

/// Each claimed relation, once instantiated, is a central multiple of some
/// target relation or else normalizes to zero in the target.
pub fn verify_specialization(spec: &Specialization, target: &Presentation) -> Result<CheckOutcome> {
    let sys = target.rewrite_system()?;
    let mut out = CheckOutcome::pass();
    for (which, rel) in spec.instantiate(target)? {
        if rel.is_zero() {
            out.notes.push(format!("{}: instantiates to 0", which.name()));
            continue;
        }
        if let Some((label, u)) = target
            .relations
            .iter()
            .find_map(|r| is_unit_multiple(&rel, &r.poly).map(|u| (&r.label, u)))
        {
            out.units
                .push(format!("{} = ({}) * {}", label, format_coefficient(&u), which.name()));
            continue;
        }
        let nf = sys.normalize(&rel)?;
        if nf.is_zero() {
            out.notes
                .push(format!("{}: lies in the target ideal", which.name()));
            continue;
        }
        out.passed = false;
        out.witness = Some(format!("{}: {} does not vanish", which.name(), format_plain(&nf)));
        return Ok(out);
    }
    Ok(out)
}

/// An expected `sigma` / `delta` pair, as text over the presentation.
#[derive(Clone, Debug)]
pub struct OreExpectation {
    pub adjoined: String,
    pub earlier: String,
    pub sigma: String,
    /// `None` when only the twist is stated.
    pub delta: Option<String>,
}

impl OreExpectation {
    pub fn new(adjoined: &str, earlier: &str, sigma: &str, delta: &str) -> Self {
        Self {
            adjoined: adjoined.into(),
            earlier: earlier.into(),
            sigma: sigma.into(),
            delta: Some(delta.into()),
        }
    }

    pub fn twist_only(adjoined: &str, earlier: &str, sigma: &str) -> Self {
        Self {
            delta: None,
            ..Self::new(adjoined, earlier, sigma, "0")
        }
    }
}

/// Extracts Ore data for `tower` and compares it with `expected`. Pairs
/// running against the tower order are checked as identities
/// `adjoined*earlier = sigma*adjoined + delta` in the quotient.
pub fn verify_ore(p: &Presentation, tower: &[&str], expected: &[OreExpectation]) -> Result<CheckOutcome> {
    let ore = extract_ore(p, tower)?;
    let sys = p.rewrite_system()?;
    let mut out = CheckOutcome::pass();
    for e in expected {
        let sigma = p.parse(&e.sigma)?;
        let delta = p.parse(e.delta.as_deref().unwrap_or("0"))?;
        match ore.entry(&e.adjoined, &e.earlier) {
            Some(got) => {
                if got.sigma != sigma || (e.delta.is_some() && got.delta != delta) {
                    out.passed = false;
                    out.witness = Some(format!(
                        "sigma_{a}({b}) = {}, delta_{a}({b}) = {}",
                        format_plain(&got.sigma),
                        format_plain(&got.delta),
                        a = e.adjoined,
                        b = e.earlier,
                    ));
                    return Ok(out);
                }
            }
            None => {
                let y = p.parse(&e.adjoined)?;
                let g = p.parse(&e.earlier)?;
                if !ore_identity_holds(&sys, &y, &g, &sigma, &delta)? {
                    out.passed = false;
                    out.witness = Some(format!(
                        "{a}*{b} != ({}) * {a} + {}",
                        e.sigma,
                        format_plain(&delta),
                        a = e.adjoined,
                        b = e.earlier
                    ));
                    return Ok(out);
                }
                out.notes.push(format!(
                    "sigma_{a}({b}) checked as the identity {a}*{b} = ({}) * {a} + {} (pair runs against the tower)",
                    e.sigma,
                    format_plain(&delta),
                    a = e.adjoined,
                    b = e.earlier
                ));
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::catalog_default;
    use crate::verify::random::rng_for;

    #[test]
    fn wess_remark_identity() {
        let p = catalog_default("wess").unwrap();
        let sys = p.rewrite_system().unwrap();
        let lhs = p.parse("x*p - q^-1*p*x").unwrap();
        let rhs = p.parse("i*hbar*Lambda*q^(-1/2)").unwrap();
        let out = verify_poly_identity(&lhs, &rhs, &sys, &mut rng_for("t")).unwrap();
        assert!(out.passed, "{out:?}");
    }

    #[test]
    fn failing_identity_carries_nonzero_witness() {
        let p = catalog_default("wess").unwrap();
        let sys = p.rewrite_system().unwrap();
        let lhs = p.parse("x*p").unwrap();
        let rhs = p.parse("p*x").unwrap();
        let out = verify_poly_identity(&lhs, &rhs, &sys, &mut rng_for("t")).unwrap();
        assert!(!out.passed);
        assert!(out.witness.is_some_and(|w| w != "0"));
        assert!(out.trace.is_some());
    }

    #[test]
    fn spot_check_sees_different_coefficients() {
        let p = catalog_default("wess").unwrap();
        let a = p.parse("q*x").unwrap();
        let b = p.parse("q^2*x").unwrap();
        assert!(!spot_check(&a, &b, 5, &mut rng_for("t")).unwrap());
        assert!(spot_check(&a, &a, 5, &mut rng_for("t")).unwrap());
    }

    #[test]
    fn renaming_to_unknown_generator_is_a_param_error() {
        let p = catalog_default("wess").unwrap();
        let s = Specialization::new(-1, -1, -1, "0", "0", "0").rename("x", Some("w"), "p");
        assert!(matches!(verify_specialization(&s, &p), Err(Error::Param(_))));
    }
}
