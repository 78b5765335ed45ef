//! Exhaustive reducer used to cross-check [`RewriteSystem::normalize`].
//!
//! Every word is reduced along every applicable `(rule, position)` choice and
//! the resulting normal forms must coincide. The matcher and the splicing of
//! right-hand sides are written out here so that a bug in the engine's own
//! leftmost-match loop cannot hide itself.

use std::collections::{HashMap, HashSet};

use crate::error::{Error, Result};
use crate::interface::format_plain;
use crate::ncpoly::{NCPoly, Word};
use crate::rewrite::RewriteSystem;

pub const DEFAULT_ORACLE_CAP: usize = 200_000;

pub struct Oracle<'a> {
    sys: &'a RewriteSystem,
    cap: usize,
    memo: HashMap<Word, NCPoly>,
    active: HashSet<Word>,
}

impl<'a> Oracle<'a> {
    pub fn new(sys: &'a RewriteSystem, cap: usize) -> Self {
        Self {
            sys,
            cap,
            memo: HashMap::new(),
            active: HashSet::new(),
        }
    }

    /// Number of words whose normal form has been settled.
    pub fn explored(&self) -> usize {
        self.memo.len()
    }

    pub fn reduce(&mut self, a: &NCPoly) -> Result<NCPoly> {
        let mut out = NCPoly::zero(a.alphabet());
        for (w, c) in a.terms() {
            let nf = self.word(w)?;
            out.add_scaled(&nf, c);
        }
        Ok(out)
    }

    fn successors(&self, w: &Word) -> Vec<NCPoly> {
        let a = self.sys.alphabet();
        let letters = w.letters();
        let mut out = Vec::new();
        for rule in self.sys.rules() {
            let lhs = rule.lhs.letters();
            if lhs.len() > letters.len() {
                continue;
            }
            for pos in 0..=letters.len() - lhs.len() {
                if &letters[pos..pos + lhs.len()] != lhs {
                    continue;
                }
                let mut step = NCPoly::zero(a);
                for (rw, rc) in rule.rhs.terms() {
                    let mut spliced = letters[..pos].to_vec();
                    spliced.extend_from_slice(rw.letters());
                    spliced.extend_from_slice(&letters[pos + lhs.len()..]);
                    step.add_term(Word(spliced), rc.clone());
                }
                out.push(step);
            }
        }
        out
    }

    fn word(&mut self, w: &Word) -> Result<NCPoly> {
        if let Some(nf) = self.memo.get(w) {
            return Ok(nf.clone());
        }
        let a = self.sys.alphabet().clone();
        if !self.active.insert(w.clone()) {
            return Err(Error::NonTermination {
                limit: self.cap,
                chain: vec![format!("{} reappears in its own reduction", w.render(&a))],
            });
        }
        let mut result: Option<NCPoly> = None;
        for step in self.successors(w) {
            let nf = match self.reduce(&step) {
                Ok(nf) => nf,
                Err(e) => {
                    self.active.remove(w);
                    return Err(e);
                }
            };
            match &result {
                None => result = Some(nf),
                Some(first) if *first != nf => {
                    self.active.remove(w);
                    return Err(Error::OracleDivergence {
                        word: w.render(&a),
                        first: format_plain(first),
                        second: format_plain(&nf),
                    });
                }
                Some(_) => {}
            }
        }
        self.active.remove(w);
        let nf = result.unwrap_or_else(|| NCPoly::word(&a, w.clone()));
        if self.memo.len() >= self.cap {
            return Err(Error::OracleOverflow(self.cap));
        }
        self.memo.insert(w.clone(), nf.clone());
        Ok(nf)
    }
}

/// Normal form of `a` reached along every reduction path, or the first word
/// at which two paths disagree.
pub fn brute_force_reduce(a: &NCPoly, sys: &RewriteSystem, cap: usize) -> Result<NCPoly> {
    Oracle::new(sys, cap).reduce(a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::catalog_default;

    #[test]
    fn classical_single_rule() {
        let p = catalog_default("classical").unwrap();
        let sys = p.rewrite_system().unwrap();
        let px = p.parse("p_1*x_1").unwrap();
        let nf = brute_force_reduce(&px, &sys, 1000).unwrap();
        assert_eq!(nf, p.parse("x_1*p_1 - i*hbar").unwrap());
        assert_eq!(nf, sys.normalize(&px).unwrap());
    }

    #[test]
    fn divergence_is_reported_with_the_word() {
        let p = catalog_default("gaddis").unwrap();
        let sys = p.rewrite_system().unwrap();
        match brute_force_reduce(&p.parse("y*z*x").unwrap(), &sys, 1000) {
            Err(Error::OracleDivergence { word, .. }) => assert_eq!(word, "y*z*x"),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn cap_is_enforced() {
        let p = catalog_default("wess").unwrap();
        let sys = p.rewrite_system().unwrap();
        let w = p.parse("x^3*p^3").unwrap();
        assert!(matches!(
            brute_force_reduce(&w, &sys, 3),
            Err(Error::OracleOverflow(3))
        ));
    }
}
