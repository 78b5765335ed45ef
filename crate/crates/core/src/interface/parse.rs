//! Expression language: `*` between factors, `^` powers, `[a, b]` brackets.
//!
//! Exponents are integers (`x^2`, `q^-1`) or parenthesized ratios with
//! denominator 1 or 2 (`q^(3/2)`); half powers are allowed only on `q` and
//! `p`. Division is allowed only by central expressions.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::coeffs::{Coefficient, GaussRational};
use crate::error::{Error, Result};
use crate::ncpoly::{Alphabet, GenId, NCPoly};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Exponent {
    pub num: i32,
    /// Either 1 or 2.
    pub den: i32,
}

impl Exponent {
    pub fn int(n: i32) -> Self {
        Self { num: n, den: 1 }
    }
}

impl fmt::Display for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}/{})", self.num, self.den)
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Expr {
    Num(BigInt),
    Sym(String),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, Exponent),
    Bracket(Box<Expr>, Box<Expr>),
}

const PREC_SUM: u8 = 1;
const PREC_PRODUCT: u8 = 2;
const PREC_UNARY: u8 = 3;
const PREC_ATOM: u8 = 5;

impl Expr {
    fn prec(&self) -> u8 {
        match self {
            Expr::Add(..) | Expr::Sub(..) => PREC_SUM,
            Expr::Mul(..) | Expr::Div(..) => PREC_PRODUCT,
            Expr::Neg(_) => PREC_UNARY,
            Expr::Pow(..) => 4,
            Expr::Num(_) | Expr::Sym(_) | Expr::Bracket(..) => PREC_ATOM,
        }
    }

    fn write_at(&self, f: &mut fmt::Formatter<'_>, min: u8) -> fmt::Result {
        if self.prec() < min {
            f.write_str("(")?;
            self.write_at(f, 0)?;
            return f.write_str(")");
        }
        match self {
            Expr::Num(n) => write!(f, "{n}"),
            Expr::Sym(s) => f.write_str(s),
            Expr::Neg(a) => {
                f.write_str("-")?;
                a.write_at(f, PREC_UNARY)
            }
            Expr::Add(a, b) | Expr::Sub(a, b) => {
                a.write_at(f, PREC_SUM)?;
                f.write_str(if matches!(self, Expr::Add(..)) { " + " } else { " - " })?;
                b.write_at(f, PREC_PRODUCT)
            }
            Expr::Mul(a, b) | Expr::Div(a, b) => {
                a.write_at(f, PREC_PRODUCT)?;
                f.write_str(if matches!(self, Expr::Mul(..)) { "*" } else { "/" })?;
                b.write_at(f, PREC_UNARY)
            }
            Expr::Pow(a, e) => {
                a.write_at(f, PREC_ATOM)?;
                write!(f, "^{e}")
            }
            Expr::Bracket(a, b) => {
                f.write_str("[")?;
                a.write_at(f, 0)?;
                f.write_str(", ")?;
                b.write_at(f, 0)?;
                f.write_str("]")
            }
        }
    }
}

/// Prints with the fewest parentheses that parse back to the same tree.
impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_at(f, 0)
    }
}

#[derive(Clone, PartialEq, Debug)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Op(char),
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>> {
    let mut out = Vec::new();
    let bytes = text.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_ascii_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let n: BigInt = text[start..i].parse().expect("digits");
            out.push((start, Tok::Num(n)));
        } else if c.is_ascii_alphabetic() {
            let start = i;
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            out.push((start, Tok::Ident(text[start..i].to_string())));
        } else if "+-*/^()[],".contains(c) {
            out.push((i, Tok::Op(c)));
            i += 1;
        } else {
            let ch = text[i..].chars().next().unwrap_or(c);
            return Err(Error::Parse {
                pos: i,
                msg: format!("unexpected character `{ch}`"),
            });
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map(|(p, _)| *p).unwrap_or(self.end)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            pos: self.pos(),
            msg: msg.into(),
        })
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Op(c)) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            self.err(format!("expected `{c}`"))
        }
    }

    fn sum(&mut self) -> Result<Expr> {
        let mut acc = self.product()?;
        loop {
            if self.eat('+') {
                acc = Expr::Add(Box::new(acc), Box::new(self.product()?));
            } else if self.eat('-') {
                acc = Expr::Sub(Box::new(acc), Box::new(self.product()?));
            } else {
                return Ok(acc);
            }
        }
    }

    fn product(&mut self) -> Result<Expr> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                acc = Expr::Mul(Box::new(acc), Box::new(self.unary()?));
            } else if self.eat('/') {
                acc = Expr::Div(Box::new(acc), Box::new(self.unary()?));
            } else {
                match self.peek() {
                    Some(Tok::Num(_)) | Some(Tok::Ident(_)) | Some(Tok::Op('(' | '[')) => {
                        return self.err("expected `*` between factors");
                    }
                    _ => return Ok(acc),
                }
            }
        }
    }

    fn unary(&mut self) -> Result<Expr> {
        if self.eat('-') {
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        let base = self.atom()?;
        if self.eat('^') {
            let e = self.exponent()?;
            return Ok(Expr::Pow(Box::new(base), e));
        }
        Ok(base)
    }

    fn small_int(&mut self) -> Result<i32> {
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.at += 1;
                i32::try_from(n).or_else(|_| self.err("exponent too large"))
            }
            _ => self.err("expected an integer exponent"),
        }
    }

    fn exponent(&mut self) -> Result<Exponent> {
        if self.eat('(') {
            let neg = self.eat('-');
            let mut num = self.small_int()?;
            if neg {
                num = -num;
            }
            let mut den = 1;
            if self.eat('/') {
                den = self.small_int()?;
            }
            self.expect(')')?;
            if den == 0 {
                return self.err("zero exponent denominator");
            }
            // Reduce n/2 with n even, and reject other denominators.
            let (num, den) = if den == 2 && num % 2 == 0 {
                (num / 2, 1)
            } else if den != 1 && den != 2 {
                if num % den == 0 {
                    (num / den, 1)
                } else {
                    return self.err("exponents must be integers or halves");
                }
            } else {
                (num, den)
            };
            return Ok(Exponent { num, den });
        }
        let neg = self.eat('-');
        let n = self.small_int()?;
        Ok(Exponent::int(if neg { -n } else { n }))
    }

    fn atom(&mut self) -> Result<Expr> {
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.at += 1;
                Ok(Expr::Num(n))
            }
            Some(Tok::Ident(s)) => {
                self.at += 1;
                Ok(Expr::Sym(s))
            }
            Some(Tok::Op('(')) => {
                self.at += 1;
                let e = self.sum()?;
                self.expect(')')?;
                Ok(e)
            }
            Some(Tok::Op('[')) => {
                self.at += 1;
                let a = self.sum()?;
                self.expect(',')?;
                let b = self.sum()?;
                self.expect(']')?;
                Ok(Expr::Bracket(Box::new(a), Box::new(b)))
            }
            Some(_) => self.err("expected a number, symbol, `(` or `[`"),
            None => self.err("unexpected end of input"),
        }
    }
}

/// Parses text into a syntax tree without resolving symbols.
pub fn parse_ast(text: &str) -> Result<Expr> {
    let toks = lex(text)?;
    let mut p = Parser {
        toks,
        at: 0,
        end: text.len(),
    };
    if p.peek().is_none() {
        return p.err("empty expression");
    }
    let e = p.sum()?;
    if p.peek().is_some() {
        return p.err("unexpected trailing input");
    }
    Ok(e)
}

/// Names an expression may refer to.
#[derive(Clone, Debug)]
pub struct Symbols {
    pub alphabet: Arc<Alphabet>,
    pub inverse_pairs: Vec<(GenId, GenId)>,
    pub opaques: Vec<String>,
}

impl Symbols {
    pub fn new(alphabet: &Arc<Alphabet>) -> Self {
        Self {
            alphabet: alphabet.clone(),
            inverse_pairs: Vec::new(),
            opaques: Vec::new(),
        }
    }

    fn known_names(&self) -> Vec<String> {
        let mut v = self.alphabet.spellings();
        v.extend(["q", "p", "hbar", "i"].map(String::from));
        v.extend(self.opaques.iter().cloned());
        v
    }

    fn inverse_of(&self, g: GenId) -> Option<GenId> {
        self.inverse_pairs.iter().find_map(|(a, b)| {
            if *a == g {
                Some(*b)
            } else if *b == g {
                Some(*a)
            } else {
                None
            }
        })
    }
}

enum Resolved {
    Generator(GenId),
    Central(Coefficient),
    /// `q` or `p`, which accept half-integer exponents.
    HalfPowered(fn(i32) -> Coefficient),
}

fn resolve(name: &str, syms: &Symbols) -> Result<Resolved> {
    if let Some(g) = syms.alphabet.lookup(name) {
        return Ok(Resolved::Generator(g));
    }
    match name {
        "q" => return Ok(Resolved::HalfPowered(Coefficient::q_half)),
        "p" => return Ok(Resolved::HalfPowered(|k| {
            Coefficient::var(crate::coeffs::monomial::T, k)
        })),
        "hbar" => return Ok(Resolved::Central(Coefficient::hbar(1))),
        "i" => return Ok(Resolved::Central(Coefficient::i())),
        _ => {}
    }
    if syms.opaques.iter().any(|o| o == name) {
        return Ok(Resolved::Central(Coefficient::var(name, 1)));
    }
    let suggestion = syms
        .known_names()
        .into_iter()
        .map(|k| (strsim::levenshtein(name, &k), k))
        .filter(|(d, _)| *d <= 2)
        .min()
        .map(|(_, k)| k);
    Err(Error::UnknownSymbol {
        name: name.to_string(),
        suggestion,
    })
}

fn lower(e: &Expr, syms: &Symbols) -> Result<NCPoly> {
    let a = &syms.alphabet;
    Ok(match e {
        Expr::Num(n) => NCPoly::constant(
            a,
            Coefficient::from_gauss(GaussRational::real(BigRational::from_integer(n.clone()))),
        ),
        Expr::Sym(s) => match resolve(s, syms)? {
            Resolved::Generator(g) => NCPoly::generator(a, g),
            Resolved::Central(c) => NCPoly::constant(a, c),
            Resolved::HalfPowered(f) => NCPoly::constant(a, f(2)),
        },
        Expr::Neg(x) => lower(x, syms)?.neg_poly(),
        Expr::Add(x, y) => lower(x, syms)?.checked_add(&lower(y, syms)?)?,
        Expr::Sub(x, y) => lower(x, syms)?.checked_sub(&lower(y, syms)?)?,
        Expr::Mul(x, y) => lower(x, syms)?.checked_mul(&lower(y, syms)?)?,
        Expr::Div(x, y) => {
            let d = lower(y, syms)?;
            let Some(c) = d.as_scalar() else {
                return Err(Error::Parse {
                    pos: 0,
                    msg: format!("division by non-central expression `{y}`"),
                });
            };
            lower(x, syms)?.scale(&c.inv()?)
        }
        Expr::Bracket(x, y) => lower(x, syms)?.commutator(&lower(y, syms)?)?,
        Expr::Pow(base, ex) => lower_pow(base, *ex, syms)?,
    })
}

fn lower_pow(base: &Expr, ex: Exponent, syms: &Symbols) -> Result<NCPoly> {
    let a = &syms.alphabet;
    if let Expr::Sym(s) = base {
        match resolve(s, syms)? {
            Resolved::HalfPowered(f) => {
                // f takes the exponent of the square root variable.
                let k = if ex.den == 2 { ex.num } else { 2 * ex.num };
                return Ok(NCPoly::constant(a, f(k)));
            }
            Resolved::Generator(g) if ex.num < 0 && ex.den == 1 => {
                let Some(inv) = syms.inverse_of(g) else {
                    return Err(Error::Parse {
                        pos: 0,
                        msg: format!("generator `{s}` has no declared inverse"),
                    });
                };
                return Ok(NCPoly::generator(a, inv).pow(ex.num.unsigned_abs()));
            }
            _ => {}
        }
    }
    if ex.den != 1 {
        return Err(Error::Parse {
            pos: 0,
            msg: format!("half-integer exponent on `{base}`; only q and p take them"),
        });
    }
    let b = lower(base, syms)?;
    if ex.num >= 0 {
        return Ok(b.pow(ex.num as u32));
    }
    match b.as_scalar() {
        Some(c) => Ok(NCPoly::constant(a, c.pow(ex.num)?)),
        None => Err(Error::Parse {
            pos: 0,
            msg: format!("negative power of non-central expression `{base}`"),
        }),
    }
}

/// Parses and lowers `text` to a free-algebra polynomial.
pub fn parse_expr(text: &str, syms: &Symbols) -> Result<NCPoly> {
    lower(&parse_ast(text)?, syms)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn wess() -> Symbols {
        let a = Alphabet::from_names(&["Lambda_inv", "Lambda", "p", "x"]).unwrap();
        Symbols {
            alphabet: a,
            inverse_pairs: vec![(1, 0)],
            opaques: vec![],
        }
    }

    #[test]
    fn printer_round_trips_tree() {
        for text in [
            "q^(1/2)*x*p - q^(-1/2)*p*x - i*hbar*Lambda",
            "-(a - b) - (c + d)",
            "a/(q - 1)*x",
            "[y, x] - hbar*z",
            "-x^2*-y",
            "(a*b)^3 - p^-1",
            "a - (b - c)",
            "a/(b*c)",
        ] {
            let t = parse_ast(text).unwrap();
            let printed = t.to_string();
            assert_eq!(parse_ast(&printed).unwrap(), t, "{text} -> {printed}");
        }
    }

    #[test]
    fn half_powers_only_on_q_and_p() {
        let s = wess();
        let e = parse_expr("q^(3/2)*x", &s).unwrap();
        let expect = NCPoly::generator(&s.alphabet, 3).scale(&Coefficient::q_half(3));
        assert_eq!(e, expect);
        assert!(matches!(parse_expr("hbar^(1/2)", &s), Err(Error::Parse { .. })));
    }

    #[test]
    fn generator_names_shadow_central_p() {
        let s = wess();
        let e = parse_expr("p", &s).unwrap();
        assert_eq!(e, NCPoly::generator(&s.alphabet, 2));
    }

    #[test]
    fn inverse_power_uses_declared_inverse() {
        let s = wess();
        assert_eq!(
            parse_expr("Lambda^-2", &s).unwrap(),
            NCPoly::generator(&s.alphabet, 0).pow(2)
        );
    }

    #[test]
    fn juxtaposition_and_unknown_symbols_are_errors() {
        let s = wess();
        assert!(matches!(parse_expr("x p", &s), Err(Error::Parse { pos: 2, .. })));
        match parse_expr("Lamda*x", &s) {
            Err(Error::UnknownSymbol { suggestion, .. }) => {
                assert_eq!(suggestion.as_deref(), Some("Lambda"))
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn division_only_by_central() {
        let s = wess();
        assert!(parse_expr("x/(q - 1)", &s).is_ok());
        assert!(parse_expr("x/p", &s).is_err());
        assert_eq!(parse_expr("x/(q - q)", &s), Err(Error::DivisionByZero));
    }

    #[test]
    fn bracket_sugar() {
        let a = Alphabet::from_names(&["x", "z", "y"]).unwrap();
        let s = Symbols::new(&a);
        let e = parse_expr("[y, x] - hbar*z", &s).unwrap();
        let f = parse_expr("y*x - x*y - hbar*z", &s).unwrap();
        assert_eq!(e, f);
        assert_eq!(e.len(), 3);
    }
}
