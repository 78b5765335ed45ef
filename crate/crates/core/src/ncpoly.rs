//! Words over a generator alphabet and free-algebra polynomials with
//! [`Coefficient`] scalars.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::coeffs::{Coefficient, GaussRational};
use crate::error::{Error, Result};

/// Position of a generator in its alphabet. Alphabets are built in ascending
/// precedence, so the id doubles as the precedence rank.
pub type GenId = u16;

/// Name of a generator, optionally carrying a small index (`x_2`).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Generator {
    pub name: String,
    pub index: Option<u8>,
}

impl Generator {
    pub fn new(name: &str) -> Self {
        Self {
            name: name.to_string(),
            index: None,
        }
    }

    pub fn indexed(name: &str, index: u8) -> Self {
        Self {
            name: name.to_string(),
            index: Some(index),
        }
    }

    /// Parses the text spelling `name` or `name_k` with `k` a small integer.
    pub fn from_spelling(s: &str) -> Self {
        if let Some((base, idx)) = s.rsplit_once('_') {
            if !base.is_empty() && !idx.is_empty() && idx.bytes().all(|b| b.is_ascii_digit()) {
                if let Ok(k) = idx.parse::<u8>() {
                    return Self::indexed(base, k);
                }
            }
        }
        Self::new(s)
    }

    pub fn spelling(&self) -> String {
        match self.index {
            Some(k) => format!("{}_{}", self.name, k),
            None => self.name.clone(),
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.spelling())
    }
}

/// Ordered generator list; position is precedence.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Alphabet {
    gens: Vec<Generator>,
}

impl Alphabet {
    pub fn new(gens: Vec<Generator>) -> Result<Arc<Self>> {
        let mut seen = std::collections::BTreeSet::new();
        for g in &gens {
            if !seen.insert(g.spelling()) {
                return Err(Error::Param(format!("duplicate generator `{g}`")));
            }
        }
        if gens.len() > GenId::MAX as usize {
            return Err(Error::Param("alphabet too large".into()));
        }
        Ok(Arc::new(Self { gens }))
    }

    /// Alphabet from text spellings, in ascending precedence.
    pub fn from_names(names: &[&str]) -> Result<Arc<Self>> {
        Self::new(names.iter().map(|n| Generator::from_spelling(n)).collect())
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn generators(&self) -> &[Generator] {
        &self.gens
    }

    pub fn get(&self, id: GenId) -> &Generator {
        &self.gens[id as usize]
    }

    pub fn lookup(&self, spelling: &str) -> Option<GenId> {
        self.gens
            .iter()
            .position(|g| g.spelling() == spelling)
            .map(|i| i as GenId)
    }

    pub fn spellings(&self) -> Vec<String> {
        self.gens.iter().map(Generator::spelling).collect()
    }
}

/// A noncommutative monomial; the empty word is the identity.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct Word(pub Vec<GenId>);

impl Word {
    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn letter(g: GenId) -> Self {
        Self(vec![g])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[GenId] {
        &self.0
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.0.len() + other.0.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// Graded order: length first, then lexicographic by precedence.
    pub fn deglex_cmp(&self, other: &Word) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }

    pub fn render(&self, alphabet: &Alphabet) -> String {
        if self.0.is_empty() {
            return "1".into();
        }
        self.0
            .iter()
            .map(|g| alphabet.get(*g).spelling())
            .collect::<Vec<_>>()
            .join("*")
    }
}

impl From<Vec<GenId>> for Word {
    fn from(v: Vec<GenId>) -> Self {
        Word(v)
    }
}

/// Element of the free algebra: finitely many words with nonzero coefficients.
#[derive(Clone, Debug)]
pub struct NCPoly {
    alphabet: Arc<Alphabet>,
    terms: BTreeMap<Word, Coefficient>,
}

impl NCPoly {
    pub fn zero(alphabet: &Arc<Alphabet>) -> Self {
        Self {
            alphabet: alphabet.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(alphabet: &Arc<Alphabet>) -> Self {
        Self::constant(alphabet, Coefficient::one())
    }

    pub fn constant(alphabet: &Arc<Alphabet>, c: Coefficient) -> Self {
        Self::term(alphabet, Word::empty(), c)
    }

    pub fn term(alphabet: &Arc<Alphabet>, w: Word, c: Coefficient) -> Self {
        let mut p = Self::zero(alphabet);
        p.add_term(w, c);
        p
    }

    pub fn word(alphabet: &Arc<Alphabet>, w: Word) -> Self {
        Self::term(alphabet, w, Coefficient::one())
    }

    pub fn generator(alphabet: &Arc<Alphabet>, g: GenId) -> Self {
        Self::word(alphabet, Word::letter(g))
    }

    /// The word spelled by generator names, e.g. `["u", "u_inv"]`.
    pub fn from_spellings(alphabet: &Arc<Alphabet>, names: &[&str]) -> Result<Self> {
        let ids = names
            .iter()
            .map(|n| {
                alphabet
                    .lookup(n)
                    .ok_or_else(|| Error::UnboundGenerator(n.to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::word(alphabet, Word(ids)))
    }

    pub fn from_terms<I: IntoIterator<Item = (Word, Coefficient)>>(
        alphabet: &Arc<Alphabet>,
        terms: I,
    ) -> Self {
        let mut p = Self::zero(alphabet);
        for (w, c) in terms {
            p.add_term(w, c);
        }
        p
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Coefficient)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> BTreeMap<Word, Coefficient> {
        self.terms
    }

    pub fn coeff(&self, w: &Word) -> Coefficient {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    /// Terms sorted from largest to smallest under the graded order.
    pub fn sorted_terms(&self) -> Vec<(&Word, &Coefficient)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| b.0.deglex_cmp(a.0));
        v
    }

    /// Coefficient of the empty word when that is the only term.
    pub fn as_scalar(&self) -> Option<Coefficient> {
        match self.terms.len() {
            0 => Some(Coefficient::zero()),
            1 => self.terms.get(&Word::empty()).cloned(),
            _ => None,
        }
    }

    pub fn add_term(&mut self, w: Word, c: Coefficient) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get().add(&c);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &NCPoly, c: &Coefficient) {
        for (w, a) in &other.terms {
            self.add_term(w.clone(), a.mul(c));
        }
    }

    fn check(&self, other: &NCPoly) -> Result<()> {
        if Arc::ptr_eq(&self.alphabet, &other.alphabet) || self.alphabet == other.alphabet {
            Ok(())
        } else {
            Err(Error::AlphabetError)
        }
    }

    pub fn checked_add(&self, other: &NCPoly) -> Result<NCPoly> {
        self.check(other)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &NCPoly) -> Result<NCPoly> {
        self.checked_add(&other.neg_poly())
    }

    pub fn checked_mul(&self, other: &NCPoly) -> Result<NCPoly> {
        self.check(other)?;
        let mut out = NCPoly::zero(&self.alphabet);
        for (wa, ca) in &self.terms {
            for (wb, cb) in &other.terms {
                out.add_term(wa.concat(wb), ca.mul(cb));
            }
        }
        Ok(out)
    }

    pub fn neg_poly(&self) -> NCPoly {
        NCPoly {
            alphabet: self.alphabet.clone(),
            terms: self.terms.iter().map(|(w, c)| (w.clone(), c.neg())).collect(),
        }
    }

    pub fn scale(&self, c: &Coefficient) -> NCPoly {
        if c.is_zero() {
            return NCPoly::zero(&self.alphabet);
        }
        NCPoly {
            alphabet: self.alphabet.clone(),
            terms: self.terms.iter().map(|(w, a)| (w.clone(), a.mul(c))).collect(),
        }
    }

    /// `left * self * right` for words `left`, `right`.
    pub fn sandwich(&self, left: &Word, right: &Word) -> NCPoly {
        NCPoly {
            alphabet: self.alphabet.clone(),
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (left.concat(w).concat(right), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> NCPoly {
        (0..k).fold(NCPoly::one(&self.alphabet), |acc, _| &acc * self)
    }

    /// `[a, b] = a*b - b*a`.
    pub fn commutator(&self, other: &NCPoly) -> Result<NCPoly> {
        self.checked_mul(other)?
            .checked_sub(&other.checked_mul(self)?)
    }

    /// Homomorphic image under `map`, which sends generator spellings to
    /// polynomials over `target`. Coefficients are carried over unchanged.
    pub fn substitute(
        &self,
        map: &BTreeMap<String, NCPoly>,
        target: &Arc<Alphabet>,
    ) -> Result<NCPoly> {
        let mut images: Vec<Option<&NCPoly>> = Vec::with_capacity(self.alphabet.len());
        for g in self.alphabet.generators() {
            let img = map.get(&g.spelling());
            if let Some(p) = img {
                if p.alphabet != *target && !Arc::ptr_eq(&p.alphabet, target) {
                    return Err(Error::AlphabetError);
                }
            }
            images.push(img);
        }
        let mut out = NCPoly::zero(target);
        for (w, c) in &self.terms {
            let mut acc = NCPoly::constant(target, c.clone());
            for g in w.letters() {
                let img = images[*g as usize]
                    .ok_or_else(|| Error::UnboundGenerator(self.alphabet.get(*g).spelling()))?;
                acc = &acc * img;
            }
            out = &out + &acc;
        }
        Ok(out)
    }

    /// Re-expresses the polynomial over another alphabet by matching spellings.
    pub fn rename_into(&self, target: &Arc<Alphabet>) -> Result<NCPoly> {
        let mut out = NCPoly::zero(target);
        for (w, c) in &self.terms {
            let ids = w
                .letters()
                .iter()
                .map(|g| {
                    let s = self.alphabet.get(*g).spelling();
                    target.lookup(&s).ok_or(Error::UnboundGenerator(s))
                })
                .collect::<Result<Vec<_>>>()?;
            out.add_term(Word(ids), c.clone());
        }
        Ok(out)
    }

    /// Evaluates every coefficient at `point`, keeping the words.
    pub fn central_scale_eval(
        &self,
        point: &BTreeMap<String, GaussRational>,
    ) -> Result<BTreeMap<Word, GaussRational>> {
        self.terms
            .iter()
            .map(|(w, c)| Ok((w.clone(), c.eval(point)?)))
            .collect()
    }

    /// Replaces a central variable by a constant in every coefficient.
    pub fn substitute_central(&self, name: &str, value: &GaussRational) -> Result<NCPoly> {
        let mut out = NCPoly::zero(&self.alphabet);
        for (w, c) in &self.terms {
            out.add_term(w.clone(), c.substitute(name, value)?);
        }
        Ok(out)
    }

    pub fn max_word_len(&self) -> usize {
        self.terms.keys().map(Word::len).max().unwrap_or(0)
    }

    pub fn contains_generator(&self, g: GenId) -> bool {
        self.terms.keys().any(|w| w.letters().contains(&g))
    }

    pub fn central_variables(&self) -> Vec<String> {
        let mut v: Vec<String> = self.terms.values().flat_map(|c| c.variables()).collect();
        v.sort();
        v.dedup();
        v
    }
}

impl PartialEq for NCPoly {
    fn eq(&self, other: &Self) -> bool {
        self.alphabet == other.alphabet && self.terms == other.terms
    }
}

impl Eq for NCPoly {}

impl Add for &NCPoly {
    type Output = NCPoly;
    fn add(self, rhs: &NCPoly) -> NCPoly {
        self.checked_add(rhs).expect("operands over the same alphabet")
    }
}

impl Sub for &NCPoly {
    type Output = NCPoly;
    fn sub(self, rhs: &NCPoly) -> NCPoly {
        self.checked_sub(rhs).expect("operands over the same alphabet")
    }
}

impl Mul for &NCPoly {
    type Output = NCPoly;
    fn mul(self, rhs: &NCPoly) -> NCPoly {
        self.checked_mul(rhs).expect("operands over the same alphabet")
    }
}

impl Neg for &NCPoly {
    type Output = NCPoly;
    fn neg(self) -> NCPoly {
        self.neg_poly()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn abc() -> Arc<Alphabet> {
        Alphabet::from_names(&["x", "p", "u", "u_inv"]).unwrap()
    }

    fn g(a: &Arc<Alphabet>, n: &str) -> NCPoly {
        NCPoly::from_spellings(a, &[n]).unwrap()
    }

    #[test]
    fn free_product_is_noncommutative() {
        let a = abc();
        let xp = &g(&a, "x") * &g(&a, "p");
        let px = &g(&a, "p") * &g(&a, "x");
        assert_ne!(xp, px);
        assert_eq!(xp, NCPoly::from_spellings(&a, &["x", "p"]).unwrap());
    }

    #[test]
    fn inverse_pair_is_not_reduced_in_free_algebra() {
        let a = abc();
        let w = &g(&a, "u") * &g(&a, "u_inv");
        assert_eq!(w.len(), 1);
        assert_eq!(w, NCPoly::from_spellings(&a, &["u", "u_inv"]).unwrap());
    }

    #[test]
    fn difference_of_squares_expansion() {
        let a = abc();
        let (x, p) = (g(&a, "x"), g(&a, "p"));
        let lhs = &(&x + &p) * &(&x - &p);
        let w = |n: &[&str]| NCPoly::from_spellings(&a, n).unwrap();
        let expect = &(&(&w(&["x", "x"]) - &w(&["x", "p"])) + &w(&["p", "x"])) - &w(&["p", "p"]);
        assert_eq!(lhs, expect);
    }

    #[test]
    fn commutator_examples() {
        let a = abc();
        let (x, p) = (g(&a, "x"), g(&a, "p"));
        assert!(x.commutator(&x).unwrap().is_zero());
        let s = &x + &p;
        assert!(s.commutator(&s).unwrap().is_zero());
        let c = x.commutator(&p).unwrap();
        assert_eq!(c, &(&x * &p) - &(&p * &x));
    }

    #[test]
    fn alphabet_mismatch() {
        let a = abc();
        let b = Alphabet::from_names(&["x", "y"]).unwrap();
        assert_eq!(g(&a, "x").checked_add(&g(&b, "x")), Err(Error::AlphabetError));
    }

    #[test]
    fn substitution_renames_and_reports_unbound() {
        let src = Alphabet::from_names(&["x", "y"]).unwrap();
        let dst = abc();
        let xy = NCPoly::from_spellings(&src, &["x", "y"]).unwrap();
        let mut map = BTreeMap::new();
        map.insert("x".to_string(), g(&dst, "u"));
        map.insert("y".to_string(), g(&dst, "u_inv"));
        let img = xy.substitute(&map, &dst).unwrap();
        assert_eq!(img, NCPoly::from_spellings(&dst, &["u", "u_inv"]).unwrap());
        map.remove("y");
        assert_eq!(
            xy.substitute(&map, &dst),
            Err(Error::UnboundGenerator("y".into()))
        );
    }

    #[test]
    fn central_eval_keeps_vanishing_words() {
        use crate::coeffs::monomial::S;
        let a = abc();
        let c = Coefficient::q(1).sub(&Coefficient::one());
        let poly = g(&a, "x").scale(&c);
        let mut pt = BTreeMap::new();
        pt.insert(S.to_string(), GaussRational::one());
        let v = poly.central_scale_eval(&pt).unwrap();
        assert_eq!(v.len(), 1);
        assert!(v.values().next().unwrap().is_zero());
    }

    #[test]
    fn generator_spelling_round_trip() {
        assert_eq!(Generator::from_spelling("x_2"), Generator::indexed("x", 2));
        assert_eq!(Generator::from_spelling("u_inv"), Generator::new("u_inv"));
        assert_eq!(Generator::indexed("p", 3).spelling(), "p_3");
    }
}
