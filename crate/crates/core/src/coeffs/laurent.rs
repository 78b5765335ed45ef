use std::collections::BTreeMap;

use super::{CentralMonomial, GaussRational};
use crate::error::{Error, Result};

/// Laurent polynomial in the central variables with Gaussian-rational coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<CentralMonomial, GaussRational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(GaussRational::one())
    }

    pub fn constant(c: GaussRational) -> Self {
        Self::term(c, CentralMonomial::one())
    }

    pub fn term(c: GaussRational, m: CentralMonomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Self { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .next()
                .is_some_and(|(m, c)| m.is_one() && c.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&CentralMonomial, &GaussRational)> {
        self.terms.iter()
    }

    pub fn single_term(&self) -> Option<(&CentralMonomial, &GaussRational)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    /// Constant value if the polynomial has no variable part.
    pub fn as_constant(&self) -> Option<GaussRational> {
        match self.terms.len() {
            0 => Some(GaussRational::zero()),
            1 => self
                .single_term()
                .filter(|(m, _)| m.is_one())
                .map(|(_, c)| c.clone()),
            _ => None,
        }
    }

    fn add_term(&mut self, m: CentralMonomial, c: GaussRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get() + &c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }

    pub fn neg(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if let Some((m, c)) = other.single_term() {
            return self.mul_term(c, m);
        }
        if let Some((m, c)) = self.single_term() {
            return other.mul_term(c, m);
        }
        let mut out = Self::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }

    pub fn mul_term(&self, c: &GaussRational, m: &CentralMonomial) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self
                .terms
                .iter()
                .map(|(mm, cc)| (mm.mul(m), cc * c))
                .collect(),
        }
    }

    pub fn scale(&self, c: &GaussRational) -> Self {
        self.mul_term(c, &CentralMonomial::one())
    }

    /// Componentwise-minimum monomial over all terms.
    pub fn min_monomial(&self) -> CentralMonomial {
        let mut it = self.terms.keys();
        let Some(first) = it.next() else {
            return CentralMonomial::one();
        };
        it.fold(first.clone(), |acc, m| acc.gcd_min(m))
    }

    /// Leading term under the pure lexicographic monomial order.
    pub fn lex_leading(&self) -> Option<(&CentralMonomial, &GaussRational)> {
        self.terms
            .iter()
            .max_by(|(a, _), (b, _)| a.lex_cmp(b))
    }

    /// Exact quotient `self / divisor` in the Laurent ring, if one exists.
    pub fn exact_div(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        if let Some((m, c)) = divisor.single_term() {
            let ci = c.inv().ok()?;
            return Some(self.mul_term(&ci, &m.inv()));
        }
        // Shift both into the polynomial ring with no monomial content, divide there.
        let shift_a = self.min_monomial().inv();
        let shift_b = divisor.min_monomial().inv();
        let one = GaussRational::one();
        let mut rem = self.mul_term(&one, &shift_a);
        let b = divisor.mul_term(&one, &shift_b);
        let (lm_b, lc_b) = b.lex_leading().map(|(m, c)| (m.clone(), c.clone()))?;
        let lc_b_inv = lc_b.inv().ok()?;
        let lm_b_inv = lm_b.inv();
        let mut quot = Self::zero();
        // Each step strictly lowers the lex-leading monomial of the remainder; bound the loop
        // by a generous multiple of the input size anyway.
        let mut budget = 64 + 16 * (rem.len() + 1) * (b.len() + 1);
        while !rem.is_zero() {
            if budget == 0 {
                return None;
            }
            budget -= 1;
            let (lm, lc) = rem.lex_leading().map(|(m, c)| (m.clone(), c.clone()))?;
            let qm = lm.mul(&lm_b_inv);
            if !qm.all_nonnegative() {
                return None;
            }
            let qc = &lc * &lc_b_inv;
            rem = rem.sub(&b.mul_term(&qc, &qm));
            quot.add_term(qm, qc);
        }
        // self/divisor = (rem_a / shift_a) / (b / shift_b) = quot * shift_b / shift_a
        Some(quot.mul_term(&one, &shift_b.mul(&shift_a.inv())))
    }

    pub fn eval(&self, point: &dyn Fn(&str) -> Option<GaussRational>) -> Result<GaussRational> {
        let mut acc = GaussRational::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (name, e) in m.iter() {
                let x = point(name).ok_or_else(|| Error::UnboundVariable(name.to_string()))?;
                let xe = x
                    .pow(e)
                    .map_err(|_| Error::PoleAtPoint(Some(name.to_string())))?;
                v = &v * &xe;
            }
            acc = &acc + &v;
        }
        Ok(acc)
    }

    /// Substitutes a constant for one variable, leaving the others symbolic.
    pub fn substitute(&self, name: &str, value: &GaussRational) -> Result<Self> {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let (rest, e) = m.without(name);
            let f = if e == 0 {
                GaussRational::one()
            } else {
                value
                    .pow(e)
                    .map_err(|_| Error::PoleAtPoint(Some(name.to_string())))?
            };
            out.add_term(rest, c * &f);
        }
        Ok(out)
    }

    pub fn variables(&self) -> Vec<String> {
        let mut v: Vec<String> = self
            .terms
            .keys()
            .flat_map(|m| m.iter().map(|(n, _)| n.to_string()))
            .collect();
        v.sort();
        v.dedup();
        v
    }
}
