use std::collections::BTreeMap;
use std::sync::Arc;

use super::interreduce::interreduce;
use super::order::{OrderKey, TermOrder};
use crate::coeffs::Coefficient;
use crate::error::{Error, Result};
use crate::families::{Presentation, Relation};
use crate::ncpoly::{Alphabet, GenId, NCPoly, Word};

pub const DEFAULT_STEP_LIMIT: usize = 10_000;

/// How many recently rewritten words a [`Error::NonTermination`] reports.
const CHAIN_LEN: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RewriteRule {
    pub lhs: Word,
    pub rhs: NCPoly,
    pub origin: String,
}

/// One rule application recorded by [`RewriteSystem::reduce_trace`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceStep {
    pub rule: usize,
    pub origin: String,
    pub word: Word,
    pub position: usize,
    /// The whole polynomial right after this application.
    pub result: NCPoly,
}

#[derive(Clone, Debug)]
pub struct RewriteSystem {
    alphabet: Arc<Alphabet>,
    order: TermOrder,
    rules: Vec<RewriteRule>,
    step_limit: usize,
    by_first: Vec<Vec<usize>>,
}

/// Compiles a presentation into oriented rules.
pub fn orient(p: &Presentation) -> Result<RewriteSystem> {
    RewriteSystem::from_relations(
        &p.alphabet,
        p.order,
        &p.relations,
        &p.inverse_pairs,
        p.interreduce,
    )
}

/// Normal form of `a` under `sys`.
pub fn normalize(a: &NCPoly, sys: &RewriteSystem) -> Result<NCPoly> {
    sys.normalize(a)
}

impl RewriteSystem {
    pub fn from_relations(
        alphabet: &Arc<Alphabet>,
        order: TermOrder,
        relations: &[Relation],
        inverse_pairs: &[(GenId, GenId)],
        interreduce_first: bool,
    ) -> Result<Self> {
        let reduced;
        let relations = if interreduce_first {
            reduced = interreduce(relations, order)?;
            &reduced[..]
        } else {
            relations
        };
        let mut rules = Vec::new();
        for (g, ginv) in inverse_pairs {
            let name = alphabet.get(*g).spelling();
            for (a, b) in [(*g, *ginv), (*ginv, *g)] {
                rules.push(RewriteRule {
                    lhs: Word(vec![a, b]),
                    rhs: NCPoly::one(alphabet),
                    origin: format!("inverse({name})"),
                });
            }
        }
        for rel in relations {
            if rel.poly.alphabet() != alphabet {
                return Err(Error::AlphabetError);
            }
            rules.push(orient_relation(rel, order)?);
        }
        let mut seen: BTreeMap<&Word, &str> = BTreeMap::new();
        for r in &rules {
            if let Some(first) = seen.insert(&r.lhs, &r.origin) {
                return Err(Error::DuplicateRule {
                    first: first.to_string(),
                    second: r.origin.clone(),
                    lhs: r.lhs.render(alphabet),
                });
            }
        }
        Ok(Self::from_rules(alphabet, order, rules))
    }

    /// Builds a system from already oriented rules.
    pub fn from_rules(alphabet: &Arc<Alphabet>, order: TermOrder, rules: Vec<RewriteRule>) -> Self {
        let mut by_first = vec![Vec::new(); alphabet.len()];
        for (i, r) in rules.iter().enumerate() {
            by_first[r.lhs.letters()[0] as usize].push(i);
        }
        for v in &mut by_first {
            v.sort_by_key(|&i| (rules[i].lhs.len(), i));
        }
        Self {
            alphabet: alphabet.clone(),
            order,
            rules,
            step_limit: DEFAULT_STEP_LIMIT,
            by_first,
        }
    }

    pub fn with_step_limit(mut self, limit: usize) -> Self {
        self.step_limit = limit.max(1);
        self
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn order(&self) -> TermOrder {
        self.order
    }

    pub fn rules(&self) -> &[RewriteRule] {
        &self.rules
    }

    pub fn step_limit(&self) -> usize {
        self.step_limit
    }

    pub fn max_lhs_len(&self) -> usize {
        self.rules.iter().map(|r| r.lhs.len()).max().unwrap_or(0)
    }

    /// Leftmost match in `w`; among rules matching at that position the
    /// shortest lhs wins, then declaration order.
    pub fn find_match(&self, w: &Word) -> Option<(usize, usize)> {
        let l = w.letters();
        for pos in 0..l.len() {
            for &ri in &self.by_first[l[pos] as usize] {
                let lhs = self.rules[ri].lhs.letters();
                if l[pos..].starts_with(lhs) {
                    return Some((ri, pos));
                }
            }
        }
        None
    }

    pub fn is_irreducible(&self, w: &Word) -> bool {
        self.find_match(w).is_none()
    }

    /// Result of applying rule `ri` at `pos` of `w`, with coefficient `c`.
    pub fn apply_at(&self, w: &Word, ri: usize, pos: usize, c: &Coefficient) -> NCPoly {
        let rule = &self.rules[ri];
        let l = w.letters();
        let left = Word(l[..pos].to_vec());
        let right = Word(l[pos + rule.lhs.len()..].to_vec());
        rule.rhs.sandwich(&left, &right).scale(c)
    }

    pub fn normalize(&self, a: &NCPoly) -> Result<NCPoly> {
        self.run(a, None)
    }

    pub fn reduce_trace(&self, a: &NCPoly) -> Result<Vec<TraceStep>> {
        let mut steps = Vec::new();
        self.run(a, Some(&mut steps))?;
        Ok(steps)
    }

    fn run(&self, a: &NCPoly, mut trace: Option<&mut Vec<TraceStep>>) -> Result<NCPoly> {
        if a.alphabet() != &self.alphabet {
            return Err(Error::AlphabetError);
        }
        let mut work: BTreeMap<OrderKey, Coefficient> = BTreeMap::new();
        for (w, c) in a.terms() {
            work.insert(self.order.key(w.clone()), c.clone());
        }
        let mut done = NCPoly::zero(&self.alphabet);
        let mut steps = 0usize;
        let mut chain: Vec<String> = Vec::new();
        while let Some((key, c)) = work.pop_last() {
            let w = key.into_word();
            let Some((ri, pos)) = self.find_match(&w) else {
                done.add_term(w, c);
                continue;
            };
            steps += 1;
            if chain.len() == CHAIN_LEN {
                chain.remove(0);
            }
            chain.push(w.render(&self.alphabet));
            if steps > self.step_limit {
                return Err(Error::NonTermination {
                    limit: self.step_limit,
                    chain,
                });
            }
            let image = self.apply_at(&w, ri, pos, &c);
            for (nw, nc) in image.into_terms() {
                add_into(&mut work, self.order.key(nw), nc);
            }
            if let Some(t) = trace.as_deref_mut() {
                let mut snapshot = done.clone();
                for (k, v) in &work {
                    snapshot.add_term(k.word().clone(), v.clone());
                }
                t.push(TraceStep {
                    rule: ri,
                    origin: self.rules[ri].origin.clone(),
                    word: w,
                    position: pos,
                    result: snapshot,
                });
            }
        }
        Ok(done)
    }

    /// All words over the alphabet of length exactly `len` that no rule reduces.
    pub fn irreducible_words(&self, len: usize) -> Vec<Word> {
        let mut out = vec![Word::empty()];
        for _ in 0..len {
            let mut next = Vec::new();
            for w in &out {
                for g in 0..self.alphabet.len() as GenId {
                    let mut v = w.letters().to_vec();
                    v.push(g);
                    let nw = Word(v);
                    // Only suffixes can create new matches.
                    if self.suffix_irreducible(&nw) {
                        next.push(nw);
                    }
                }
            }
            out = next;
        }
        out
    }

    fn suffix_irreducible(&self, w: &Word) -> bool {
        let l = w.letters();
        !self.rules.iter().any(|r| l.ends_with(r.lhs.letters()))
    }
}

fn add_into(work: &mut BTreeMap<OrderKey, Coefficient>, k: OrderKey, c: Coefficient) {
    if c.is_zero() {
        return;
    }
    match work.entry(k) {
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

/// Turns `poly = 0` into `lead -> lead - poly / lc(lead)`.
pub fn orient_relation(rel: &Relation, order: TermOrder) -> Result<RewriteRule> {
    let alphabet = rel.poly.alphabet();
    let lead = rel
        .poly
        .terms()
        .max_by(|a, b| order.cmp(a.0, b.0))
        .map(|(w, c)| (w.clone(), c.clone()));
    let Some((lhs, lc)) = lead else {
        return Err(Error::Orientation {
            relation: rel.label.clone(),
            reason: "relation is identically zero".into(),
        });
    };
    if lhs.len() < 2 {
        return Err(Error::Orientation {
            relation: rel.label.clone(),
            reason: format!(
                "leading word `{}` is shorter than two letters",
                lhs.render(alphabet)
            ),
        });
    }
    let inv = lc.inv().map_err(|_| Error::Orientation {
        relation: rel.label.clone(),
        reason: "leading coefficient is not invertible".into(),
    })?;
    let mut rhs = rel.poly.scale(&inv.neg());
    rhs.add_term(lhs.clone(), Coefficient::one());
    Ok(RewriteRule {
        lhs,
        rhs,
        origin: rel.label.clone(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn plane() -> (Arc<Alphabet>, RewriteSystem) {
        // p*x = q*x*p with x < p
        let a = Alphabet::from_names(&["x", "p"]).unwrap();
        let px = NCPoly::from_spellings(&a, &["p", "x"]).unwrap();
        let xp = NCPoly::from_spellings(&a, &["x", "p"]).unwrap();
        let rel = Relation::new("plane", &px - &xp.scale(&Coefficient::q(1)));
        let sys = RewriteSystem::from_relations(&a, TermOrder::DegLex, &[rel], &[], false).unwrap();
        (a, sys)
    }

    #[test]
    fn orientation_of_quantum_plane() {
        let (a, sys) = plane();
        let r = &sys.rules()[0];
        assert_eq!(r.lhs.render(&a), "p*x");
        assert_eq!(r.rhs, NCPoly::from_spellings(&a, &["x", "p"]).unwrap().scale(&Coefficient::q(1)));
    }

    #[test]
    fn normal_form_sorts_letters() {
        let (a, sys) = plane();
        let w = NCPoly::from_spellings(&a, &["p", "p", "x"]).unwrap();
        let nf = sys.normalize(&w).unwrap();
        let expect = NCPoly::from_spellings(&a, &["x", "p", "p"])
            .unwrap()
            .scale(&Coefficient::q(2));
        assert_eq!(nf, expect);
        let trace = sys.reduce_trace(&w).unwrap();
        assert_eq!(trace.len(), 2);
        assert_eq!(trace.last().unwrap().result, nf);
    }

    #[test]
    fn single_letter_leading_word_is_rejected() {
        let a = Alphabet::from_names(&["x", "p"]).unwrap();
        let rel = Relation::new(
            "bad",
            &NCPoly::from_spellings(&a, &["p"]).unwrap() - &NCPoly::one(&a),
        );
        let err = RewriteSystem::from_relations(&a, TermOrder::DegLex, &[rel], &[], false).unwrap_err();
        assert!(matches!(err, Error::Orientation { .. }));
    }

    #[test]
    fn duplicate_leading_words_are_rejected() {
        let a = Alphabet::from_names(&["x", "p"]).unwrap();
        let px = NCPoly::from_spellings(&a, &["p", "x"]).unwrap();
        let xp = NCPoly::from_spellings(&a, &["x", "p"]).unwrap();
        let r1 = Relation::new("r1", &px - &xp);
        let r2 = Relation::new("r2", &px - &xp.scale(&Coefficient::from_int(2)));
        let err = RewriteSystem::from_relations(&a, TermOrder::DegLex, &[r1, r2], &[], false).unwrap_err();
        assert!(matches!(err, Error::DuplicateRule { .. }));
    }

    #[test]
    fn step_limit_is_enforced() {
        let (a, sys) = plane();
        let sys = sys.with_step_limit(3);
        let w = NCPoly::from_spellings(&a, &["p", "p", "x", "x"]).unwrap();
        assert!(matches!(sys.normalize(&w), Err(Error::NonTermination { limit: 3, .. })));
    }

    #[test]
    fn inverse_pairs_cancel() {
        let a = Alphabet::from_names(&["x", "u_inv", "u"]).unwrap();
        let sys = RewriteSystem::from_relations(&a, TermOrder::DegLex, &[], &[(2, 1)], false).unwrap();
        let w = NCPoly::from_spellings(&a, &["u", "u_inv", "x"]).unwrap();
        assert_eq!(sys.normalize(&w).unwrap(), NCPoly::from_spellings(&a, &["x"]).unwrap());
        let w = NCPoly::from_spellings(&a, &["u_inv", "u"]).unwrap();
        assert_eq!(sys.normalize(&w).unwrap(), NCPoly::one(&a));
    }
}
