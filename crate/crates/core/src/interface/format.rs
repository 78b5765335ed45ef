use std::fmt::Write as _;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::coeffs::monomial::{H, S, T};
use crate::coeffs::{CentralMonomial, Coefficient, GaussRational, LaurentPoly};
use crate::error::{Error, Result};
use crate::ncpoly::{Alphabet, NCPoly, Word};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum Style {
    #[default]
    Plain,
    Latex,
    Machine,
}

impl FromStr for Style {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "plain" => Ok(Style::Plain),
            "latex" => Ok(Style::Latex),
            "json" | "machine" => Ok(Style::Machine),
            other => Err(Error::Param(format!(
                "unknown format `{other}` (expected plain, latex or json)"
            ))),
        }
    }
}

pub fn format_expr(a: &NCPoly, style: Style) -> String {
    match style {
        Style::Plain => format_plain(a),
        Style::Latex => format_latex(a),
        Style::Machine => machine_json(a).to_string(),
    }
}

/// A product of scalar factors and a word, with a sign pulled out front.
struct TermParts {
    negative: bool,
    factors: Vec<String>,
}

trait Dialect {
    fn number(&self, r: &num_rational::BigRational) -> String;
    fn imag_unit(&self) -> &'static str;
    fn var_power(&self, name: &str, exp: i32) -> String;
    fn word(&self, w: &Word, alphabet: &Alphabet) -> Vec<String>;
    fn join(&self, factors: &[String]) -> String;
    fn group(&self, inner: &str) -> String;
    fn fraction(&self, num: &str, den: &str) -> String;
}

struct PlainDialect;
struct LatexDialect;

impl Dialect for PlainDialect {
    fn number(&self, r: &num_rational::BigRational) -> String {
        r.to_string()
    }

    fn imag_unit(&self) -> &'static str {
        "i"
    }

    fn var_power(&self, name: &str, exp: i32) -> String {
        let (base, e) = match name {
            n if n == S => ("q", half(exp)),
            n if n == T => ("p", half(exp)),
            n if n == H => ("hbar", whole(exp)),
            n => (n, whole(exp)),
        };
        match e.as_str() {
            "1" => base.to_string(),
            _ => format!("{base}^{e}"),
        }
    }

    fn word(&self, w: &Word, alphabet: &Alphabet) -> Vec<String> {
        runs(w)
            .into_iter()
            .map(|(g, k)| {
                let s = alphabet.get(g).spelling();
                if k == 1 {
                    s
                } else {
                    format!("{s}^{k}")
                }
            })
            .collect()
    }

    fn join(&self, factors: &[String]) -> String {
        factors.join("*")
    }

    fn group(&self, inner: &str) -> String {
        format!("({inner})")
    }

    fn fraction(&self, num: &str, den: &str) -> String {
        format!("{num}/({den})")
    }
}

fn half(exp: i32) -> String {
    if exp % 2 == 0 {
        whole(exp / 2)
    } else {
        format!("({exp}/2)")
    }
}

fn whole(exp: i32) -> String {
    exp.to_string()
}

fn runs(w: &Word) -> Vec<(u16, usize)> {
    let mut out: Vec<(u16, usize)> = Vec::new();
    for &g in w.letters() {
        match out.last_mut() {
            Some((h, k)) if *h == g => *k += 1,
            _ => out.push((g, 1)),
        }
    }
    out
}

impl Dialect for LatexDialect {
    fn number(&self, r: &num_rational::BigRational) -> String {
        if r.denom().is_one() {
            r.numer().to_string()
        } else {
            format!("\\frac{{{}}}{{{}}}", r.numer(), r.denom())
        }
    }

    fn imag_unit(&self) -> &'static str {
        "i"
    }

    fn var_power(&self, name: &str, exp: i32) -> String {
        let (base, e) = match name {
            n if n == S => ("q".to_string(), latex_half(exp)),
            n if n == T => ("p".to_string(), latex_half(exp)),
            n if n == H => ("\\hbar".to_string(), exp.to_string()),
            n => (latex_subscripted(n), exp.to_string()),
        };
        if e == "1" {
            base
        } else {
            format!("{base}^{{{e}}}")
        }
    }

    fn word(&self, w: &Word, alphabet: &Alphabet) -> Vec<String> {
        runs(w)
            .into_iter()
            .map(|(g, k)| {
                let gen = alphabet.get(g);
                let (body, inverse) = match gen.name.strip_suffix("_inv") {
                    Some(b) => (b, true),
                    None => (gen.name.as_str(), false),
                };
                let body = if body.len() > 1 && body.chars().next().unwrap().is_ascii_uppercase() {
                    format!("\\{body}")
                } else {
                    body.to_string()
                };
                let mut s = match body.strip_suffix("bar") {
                    Some(b) if !b.is_empty() => format!("\\overline{{\\hat{{{b}}}}}"),
                    _ => format!("\\hat{{{body}}}"),
                };
                if let Some(i) = gen.index {
                    write!(s, "_{{{i}}}").unwrap();
                }
                let exp = if inverse { -(k as i64) } else { k as i64 };
                if exp != 1 {
                    write!(s, "^{{{exp}}}").unwrap();
                }
                s
            })
            .collect()
    }

    fn join(&self, factors: &[String]) -> String {
        factors.concat()
    }

    fn group(&self, inner: &str) -> String {
        format!("({inner})")
    }

    fn fraction(&self, num: &str, den: &str) -> String {
        format!("\\frac{{{num}}}{{{den}}}")
    }
}

fn latex_half(exp: i32) -> String {
    if exp % 2 == 0 {
        (exp / 2).to_string()
    } else {
        format!("{exp}/2")
    }
}

fn latex_subscripted(name: &str) -> String {
    match name.split_once('_') {
        Some((b, sub)) => format!("{b}_{{{sub}}}"),
        None => name.to_string(),
    }
}

/// Content of a monomial set: variables whose exponents share a sign in
/// every term, taken at the exponent closest to zero.
fn monomial_content(p: &LaurentPoly) -> CentralMonomial {
    let mut names: Vec<String> = p.variables();
    names.dedup();
    let mut pairs = Vec::new();
    for n in names {
        let exps: Vec<i32> = p.terms().map(|(m, _)| m.exponent(&n)).collect();
        let e = if exps.iter().all(|e| *e > 0) {
            *exps.iter().min().unwrap()
        } else if exps.iter().all(|e| *e < 0) {
            *exps.iter().max().unwrap()
        } else {
            0
        };
        pairs.push((std::sync::Arc::from(n.as_str()), e));
    }
    CentralMonomial::from_pairs(pairs)
}

fn monomial_factors(m: &CentralMonomial, d: &dyn Dialect) -> Vec<String> {
    // q, p, hbar, then opaque symbols
    let rank = |n: &str| match n {
        n if n == S => 0,
        n if n == T => 1,
        n if n == H => 2,
        _ => 3,
    };
    let mut vars: Vec<(&str, i32)> = m.iter().collect();
    vars.sort_by_key(|(n, _)| (rank(n), n.to_string()));
    vars.into_iter().map(|(n, e)| d.var_power(n, e)).collect()
}

/// Scalar factors of a single Gaussian number; the sign goes to `negative`.
fn gauss_factors(c: &GaussRational, d: &dyn Dialect) -> (bool, Vec<String>) {
    if c.im.is_zero() {
        let neg = c.re.is_negative();
        let a = c.re.abs();
        let f = if a.is_one() { vec![] } else { vec![d.number(&a)] };
        return (neg, f);
    }
    if c.re.is_zero() {
        let neg = c.im.is_negative();
        let a = c.im.abs();
        let mut f = vec![d.imag_unit().to_string()];
        if !a.is_one() {
            f.insert(0, d.number(&a));
        }
        return (neg, f);
    }
    (false, vec![d.group(&gauss_sum(c, d))])
}

fn gauss_sum(c: &GaussRational, d: &dyn Dialect) -> String {
    let re = d.number(&c.re);
    let im_abs = c.im.abs();
    let im = if im_abs.is_one() {
        d.imag_unit().to_string()
    } else {
        d.join(&[d.number(&im_abs), d.imag_unit().to_string()])
    };
    let op = if c.im.is_negative() { " - " } else { " + " };
    format!("{re}{op}{im}")
}

/// Renders a sum of signed parts as `a + b - c`.
fn join_signed(parts: Vec<TermParts>, d: &dyn Dialect) -> String {
    let mut s = String::new();
    for (k, t) in parts.into_iter().enumerate() {
        let body = if t.factors.is_empty() {
            "1".to_string()
        } else {
            d.join(&t.factors)
        };
        match (k, t.negative) {
            (0, false) => s.push_str(&body),
            (0, true) => {
                s.push('-');
                s.push_str(&body);
            }
            (_, false) => {
                s.push_str(" + ");
                s.push_str(&body);
            }
            (_, true) => {
                s.push_str(" - ");
                s.push_str(&body);
            }
        }
    }
    s
}

fn laurent_parts(p: &LaurentPoly, d: &dyn Dialect) -> Vec<TermParts> {
    let mut terms: Vec<_> = p.terms().collect();
    terms.sort_by(|a, b| b.0.lex_cmp(a.0));
    terms
        .into_iter()
        .map(|(m, c)| {
            let (negative, mut factors) = gauss_factors(c, d);
            factors.extend(monomial_factors(m, d));
            TermParts { negative, factors }
        })
        .collect()
}

/// Scalar factors of a Laurent polynomial numerator with content pulled out.
fn numerator_parts(p: &LaurentPoly, d: &dyn Dialect) -> TermParts {
    if let Some((m, c)) = p.single_term() {
        let (negative, mut factors) = gauss_factors(c, d);
        factors.extend(monomial_factors(m, d));
        return TermParts { negative, factors };
    }
    let content = monomial_content(p);
    let mut rest = p.mul_term(&GaussRational::one(), &content.inv());
    let mut factors = Vec::new();
    let all_imag = rest.terms().all(|(_, c)| c.re.is_zero());
    if all_imag {
        factors.push(d.imag_unit().to_string());
        rest = rest.scale(&-GaussRational::i());
    }
    // Leading sign of the lex-largest term goes outside the parentheses.
    let negative = rest
        .terms()
        .max_by(|a, b| a.0.lex_cmp(b.0))
        .is_some_and(|(_, c)| c.leading_sign_negative());
    if negative {
        rest = rest.neg();
    }
    factors.extend(monomial_factors(&content, d));
    factors.push(d.group(&join_signed(laurent_parts(&rest, d), d)));
    TermParts { negative, factors }
}

fn coefficient_term(c: &Coefficient, word: Vec<String>, d: &dyn Dialect) -> TermParts {
    let mut t = numerator_parts(c.numerator(), d);
    if !c.denominator().is_one() {
        let num = if t.factors.is_empty() {
            "1".to_string()
        } else {
            d.join(&t.factors)
        };
        let den = join_signed(laurent_parts(c.denominator(), d), d);
        t.factors = vec![d.fraction(&num, &den)];
    }
    t.factors.extend(word);
    t
}

fn render(a: &NCPoly, d: &dyn Dialect) -> String {
    if a.is_zero() {
        return "0".into();
    }
    let parts = a
        .sorted_terms()
        .into_iter()
        .map(|(w, c)| coefficient_term(c, d.word(w, a.alphabet()), d))
        .collect();
    join_signed(parts, d)
}

/// Plain text that [`crate::interface::parse_expr`] reads back to `a`.
pub fn format_plain(a: &NCPoly) -> String {
    render(a, &PlainDialect)
}

pub fn format_latex(a: &NCPoly) -> String {
    render(a, &LatexDialect)
}

pub fn format_coefficient(c: &Coefficient) -> String {
    let d = PlainDialect;
    let t = coefficient_term(c, vec![], &d);
    join_signed(vec![t], &d)
}

fn laurent_json(p: &LaurentPoly) -> Value {
    let mut terms: Vec<_> = p.terms().collect();
    terms.sort_by(|a, b| b.0.lex_cmp(a.0));
    Value::Array(
        terms
            .into_iter()
            .map(|(m, c)| {
                let mono: serde_json::Map<String, Value> =
                    m.iter().map(|(n, e)| (n.to_string(), json!(e))).collect();
                json!({"re": c.re.to_string(), "im": c.im.to_string(), "monomial": mono})
            })
            .collect(),
    )
}

/// Loss-free JSON rendering: exact rationals as strings, central variables
/// under their internal names (`s` = q^(1/2), `t` = p^(1/2), `h` = hbar).
pub fn machine_json(a: &NCPoly) -> Value {
    let terms: Vec<Value> = a
        .sorted_terms()
        .into_iter()
        .map(|(w, c)| {
            let word: Vec<String> = w
                .letters()
                .iter()
                .map(|g| a.alphabet().get(*g).spelling())
                .collect();
            json!({
                "word": word,
                "numerator": laurent_json(c.numerator()),
                "denominator": laurent_json(c.denominator()),
            })
        })
        .collect();
    json!({ "terms": terms })
}
