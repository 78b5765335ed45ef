use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use super::monomial::{H, S, T};
use super::{CentralMonomial, GaussRational, LaurentPoly};
use crate::error::{Error, Result};

/// Element of the coefficient field: a ratio of Laurent polynomials in the central
/// variables over the Gaussian rationals.
///
/// The representation is reduced by monomial content, scalar normalization of the
/// denominator and exact cancellation when one side divides the other. It is not a
/// full gcd normal form, so equality is decided by cross-multiplication.
#[derive(Clone, Debug)]
pub struct Coefficient {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl Coefficient {
    pub fn zero() -> Self {
        Self {
            num: LaurentPoly::zero(),
            den: LaurentPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_poly(LaurentPoly::one())
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        Self {
            num: p,
            den: LaurentPoly::one(),
        }
    }

    pub fn from_gauss(c: GaussRational) -> Self {
        Self::from_poly(LaurentPoly::constant(c))
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_gauss(GaussRational::from_int(n))
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        Self::from_gauss(GaussRational::from_ratio(num, den))
    }

    pub fn i() -> Self {
        Self::from_gauss(GaussRational::i())
    }

    /// `name^exp` for any central variable name (internal or opaque).
    pub fn var(name: &str, exp: i32) -> Self {
        Self::from_poly(LaurentPoly::term(
            GaussRational::one(),
            CentralMonomial::var(name, exp),
        ))
    }

    /// `q^(half_exp / 2)`.
    pub fn q_half(half_exp: i32) -> Self {
        Self::var(S, half_exp)
    }

    /// `q^k`.
    pub fn q(k: i32) -> Self {
        Self::var(S, 2 * k)
    }

    /// `p^k`.
    pub fn p(k: i32) -> Self {
        Self::var(T, 2 * k)
    }

    pub fn hbar(k: i32) -> Self {
        Self::var(H, k)
    }

    /// Builds `num / den`, failing if `den` is zero.
    pub fn fraction(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduced(num, den))
    }

    fn reduced(num: LaurentPoly, den: LaurentPoly) -> Self {
        debug_assert!(!den.is_zero());
        if num.is_zero() {
            return Self::zero();
        }
        if let Some((m, c)) = den.single_term() {
            let ci = c.inv().expect("nonzero denominator term");
            let num = num.mul_term(&ci, &m.inv());
            return Self::from_poly(num);
        }
        // Strip the denominator's monomial content and make its lex-leading coefficient 1.
        let shift = den.min_monomial().inv();
        let (_, lc) = den.lex_leading().expect("nonempty denominator");
        let lci = lc.inv().expect("nonzero leading coefficient");
        let den = den.mul_term(&lci, &shift);
        let num = num.mul_term(&lci, &shift);
        if let Some(q) = num.exact_div(&den) {
            return Self::from_poly(q);
        }
        if num.len() > 1 {
            if let Some(q) = den.exact_div(&num) {
                // num/den = 1/q
                return Self::reduced(LaurentPoly::one(), q);
            }
        }
        Self { num, den }
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denominator(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num.is_one()
    }

    /// True when the coefficient is a Laurent polynomial (unit denominator).
    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_constant(&self) -> Option<GaussRational> {
        if self.den.is_one() {
            self.num.as_constant()
        } else {
            None
        }
    }

    pub fn neg(&self) -> Self {
        Self {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den == other.den {
            let num = self.num.add(&other.num);
            if self.den.is_one() {
                return Self::from_poly(num);
            }
            return Self::reduced(num, self.den.clone());
        }
        let num = self.num.mul(&other.den).add(&other.num.mul(&self.den));
        Self::reduced(num, self.den.mul(&other.den))
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if self.den.is_one() && other.den.is_one() {
            return Self::from_poly(self.num.mul(&other.num));
        }
        Self::reduced(self.num.mul(&other.num), self.den.mul(&other.den))
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduced(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn pow(&self, k: i32) -> Result<Self> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let mut acc = Self::one();
        for _ in 0..k.unsigned_abs() {
            acc = acc.mul(&base);
        }
        Ok(acc)
    }

    /// Exact evaluation at a point assigning every variable that occurs.
    pub fn eval(&self, point: &BTreeMap<String, GaussRational>) -> Result<GaussRational> {
        let lookup = |n: &str| point.get(n).cloned();
        let d = self.den.eval(&lookup)?;
        let n = self.num.eval(&lookup)?;
        if d.is_zero() {
            return Err(Error::PoleAtPoint(None));
        }
        Ok(&n * &d.inv()?)
    }

    /// Replaces one central variable by a constant.
    pub fn substitute(&self, name: &str, value: &GaussRational) -> Result<Self> {
        let den = self.den.substitute(name, value)?;
        if den.is_zero() {
            return Err(Error::PoleAtPoint(Some(name.to_string())));
        }
        let num = self.num.substitute(name, value)?;
        Ok(Self::reduced(num, den))
    }

    pub fn variables(&self) -> Vec<String> {
        let mut v = self.num.variables();
        v.extend(self.den.variables());
        v.sort();
        v.dedup();
        v
    }
}

impl PartialEq for Coefficient {
    fn eq(&self, other: &Self) -> bool {
        if self.den == other.den {
            return self.num == other.num;
        }
        self.num.mul(&other.den) == other.num.mul(&self.den)
    }
}

impl Eq for Coefficient {}

impl Default for Coefficient {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<GaussRational> for Coefficient {
    fn from(c: GaussRational) -> Self {
        Self::from_gauss(c)
    }
}

impl From<i64> for Coefficient {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident) => {
        impl $tr for &Coefficient {
            type Output = Coefficient;
            fn $m(self, rhs: &Coefficient) -> Coefficient {
                Coefficient::$m(self, rhs)
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Neg for &Coefficient {
    type Output = Coefficient;
    fn neg(self) -> Coefficient {
        Coefficient::neg(self)
    }
}

impl Neg for Coefficient {
    type Output = Coefficient;
    fn neg(self) -> Coefficient {
        Coefficient::neg(&self)
    }
}

/// Two-parameter quantum integer `[k]_{p,q}`, built as the finite sum
/// `sum_{i<k} q^i p^-(k-1-i)`.
pub fn qnumber(k: u32) -> Coefficient {
    let k = k as i32;
    (0..k).fold(Coefficient::zero(), |acc, i| {
        acc.add(&Coefficient::q(i).mul(&Coefficient::p(-(k - 1 - i))))
    })
}

/// Closed form `(q^k - p^-k) / (q - p^-1)` of the same quantity.
pub fn qnumber_closed_form(k: u32) -> Coefficient {
    let k = k as i32;
    let num = Coefficient::q(k).sub(&Coefficient::p(-k));
    let den = Coefficient::q(1).sub(&Coefficient::p(-1));
    num.div(&den).expect("q - p^-1 is not the zero function")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn point(s: i64, t: i64) -> BTreeMap<String, GaussRational> {
        [
            (S.to_string(), GaussRational::from_int(s)),
            (T.to_string(), GaussRational::from_int(t)),
            (H.to_string(), GaussRational::from_int(1)),
        ]
        .into_iter()
        .collect()
    }

    #[test]
    fn half_power_sum() {
        let a = Coefficient::q_half(1);
        assert_eq!(a.add(&a), Coefficient::from_int(2).mul(&a));
    }

    #[test]
    fn i_times_i() {
        assert_eq!(Coefficient::i().mul(&Coefficient::i()), Coefficient::from_int(-1));
    }

    #[test]
    fn zero_over_polynomial_is_canonical_zero() {
        let qm1 = Coefficient::q(1).sub(&Coefficient::one());
        let z = Coefficient::zero().div(&qm1).unwrap();
        assert_eq!(z, Coefficient::zero());
        assert!(z.is_zero() && z.is_polynomial());
    }

    #[test]
    fn inverse_of_zero_fails() {
        assert_eq!(Coefficient::zero().inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn schmudgen_proof_ratios() {
        let d = Coefficient::q(-1).sub(&Coefficient::q(1));
        let a = Coefficient::q_half(1).sub(&Coefficient::q_half(-3)).div(&d).unwrap();
        assert_eq!(a, Coefficient::q_half(-1).neg());
        let b = Coefficient::q_half(-1).sub(&Coefficient::q_half(3)).div(&d).unwrap();
        assert_eq!(b, Coefficient::q_half(1));
        // the ratios for the x*p half of the proof
        let c = Coefficient::q_half(3).sub(&Coefficient::q_half(-1)).div(&d).unwrap();
        assert_eq!(c, Coefficient::q_half(1).neg());
        let e = Coefficient::q_half(-3).sub(&Coefficient::q_half(1)).div(&d).unwrap();
        assert_eq!(e, Coefficient::q_half(-1));
    }

    #[test]
    fn qnumber_small_cases() {
        assert_eq!(qnumber(0), Coefficient::zero());
        assert_eq!(qnumber(1), Coefficient::one());
        let expect = Coefficient::q(2)
            .add(&Coefficient::q(1).mul(&Coefficient::p(-1)))
            .add(&Coefficient::p(-2));
        assert_eq!(qnumber(3), expect);
    }

    #[test]
    fn qnumber_closed_form_is_reduced_to_a_polynomial() {
        for k in 1..8 {
            let c = qnumber_closed_form(k);
            assert!(c.is_polynomial(), "k={k}");
            assert_eq!(c, qnumber(k));
        }
    }

    #[test]
    fn evaluation_examples() {
        assert_eq!(
            Coefficient::q_half(1).eval(&point(3, 1)).unwrap(),
            GaussRational::from_int(3)
        );
        assert_eq!(qnumber(2).eval(&point(2, 1)).unwrap(), GaussRational::from_int(5));
        let pole = Coefficient::q(1).sub(&Coefficient::one()).inv().unwrap();
        assert!(matches!(pole.eval(&point(1, 1)), Err(Error::PoleAtPoint(_))));
        let mut partial = BTreeMap::new();
        partial.insert(S.to_string(), GaussRational::one());
        assert_eq!(
            Coefficient::hbar(1).eval(&partial),
            Err(Error::UnboundVariable(H.to_string()))
        );
    }

    #[test]
    fn inverse_times_difference_of_squares() {
        // (q - p^-1)^-1 * (q^2 - p^-2) = q + p^-1
        let a = Coefficient::q(1).sub(&Coefficient::p(-1));
        let b = Coefficient::q(2).sub(&Coefficient::p(-2));
        let r = a.inv().unwrap().mul(&b);
        assert_eq!(r, Coefficient::q(1).add(&Coefficient::p(-1)));
        assert!(r.is_polynomial());
    }

    #[test]
    fn substitute_q_equals_one() {
        let c = Coefficient::q(2).sub(&Coefficient::one());
        assert!(c.substitute(S, &GaussRational::one()).unwrap().is_zero());
        let pole = c.inv().unwrap();
        assert!(matches!(
            pole.substitute(S, &GaussRational::one()),
            Err(Error::PoleAtPoint(_))
        ));
    }
}
