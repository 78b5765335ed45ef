use rayon::prelude::*;

use super::system::RewriteSystem;
use crate::coeffs::Coefficient;
use crate::error::Result;
use crate::ncpoly::{NCPoly, Word};

/// Two one-step reductions of the same overlap word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriticalPair {
    pub overlap: Word,
    /// `(rule, position)` of the left and right reductions.
    pub left_rule: (usize, usize),
    pub right_rule: (usize, usize),
    pub left: NCPoly,
    pub right: NCPoly,
    pub left_normal: NCPoly,
    pub right_normal: NCPoly,
    pub resolved: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConfluenceReport {
    pub confluent: bool,
    pub bound: usize,
    pub pairs_checked: usize,
    pub unresolved: Vec<CriticalPair>,
}

/// `(rule, position)` of one reduction.
type Site = (usize, usize);

/// Overlap words `(word, (rule_a, 0), (rule_b, pos))` up to length `max_len`,
/// covering proper suffix/prefix overlaps and inclusions.
fn ambiguities(sys: &RewriteSystem, max_len: usize) -> Vec<(Word, Site, Site)> {
    let rules = sys.rules();
    let mut out = Vec::new();
    for (i, ri) in rules.iter().enumerate() {
        let a = ri.lhs.letters();
        for (j, rj) in rules.iter().enumerate() {
            let b = rj.lhs.letters();
            // suffix of a == prefix of b, overlap length k
            for k in 1..a.len().min(b.len()) {
                if a[a.len() - k..] == b[..k] {
                    let mut w = a.to_vec();
                    w.extend_from_slice(&b[k..]);
                    if w.len() <= max_len {
                        out.push((Word(w), (i, 0), (j, a.len() - k)));
                    }
                }
            }
            // b strictly inside a
            if i != j && b.len() <= a.len() && a.len() <= max_len {
                for pos in 0..=a.len() - b.len() {
                    if a[pos..pos + b.len()] == *b {
                        out.push((ri.lhs.clone(), (i, 0), (j, pos)));
                    }
                }
            }
        }
    }
    out
}

/// All critical pairs with overlap words of length at most `max_len`, each
/// resolved by full normalization of both sides.
pub fn critical_pairs(sys: &RewriteSystem, max_len: usize) -> Result<Vec<CriticalPair>> {
    let one = Coefficient::one();
    ambiguities(sys, max_len)
        .into_par_iter()
        .map(|(w, l, r)| {
            let left = sys.apply_at(&w, l.0, l.1, &one);
            let right = sys.apply_at(&w, r.0, r.1, &one);
            let left_normal = sys.normalize(&left)?;
            let right_normal = sys.normalize(&right)?;
            let resolved = left_normal == right_normal;
            Ok(CriticalPair {
                overlap: w,
                left_rule: l,
                right_rule: r,
                left,
                right,
                left_normal,
                right_normal,
                resolved,
            })
        })
        .collect()
}

pub fn check_confluence(sys: &RewriteSystem, max_len: usize) -> Result<ConfluenceReport> {
    let pairs = critical_pairs(sys, max_len)?;
    let pairs_checked = pairs.len();
    let unresolved: Vec<_> = pairs.into_iter().filter(|p| !p.resolved).collect();
    Ok(ConfluenceReport {
        confluent: unresolved.is_empty(),
        bound: max_len,
        pairs_checked,
        unresolved,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::Relation;
    use crate::ncpoly::Alphabet;
    use crate::rewrite::TermOrder;

    #[test]
    fn commuting_three_letters_is_confluent() {
        let a = Alphabet::from_names(&["x", "y", "z"]).unwrap();
        let w = |n: &[&str]| NCPoly::from_spellings(&a, n).unwrap();
        let rels = vec![
            Relation::new("yx", &w(&["y", "x"]) - &w(&["x", "y"])),
            Relation::new("zx", &w(&["z", "x"]) - &w(&["x", "z"])),
            Relation::new("zy", &w(&["z", "y"]) - &w(&["y", "z"])),
        ];
        let sys = RewriteSystem::from_relations(&a, TermOrder::DegLex, &rels, &[], false).unwrap();
        let rep = check_confluence(&sys, 6).unwrap();
        assert!(rep.confluent);
        assert_eq!(rep.pairs_checked, 1);
    }

    #[test]
    fn inconsistent_scalars_leave_a_pair_unresolved() {
        // yx = xy + 1 together with zy = 2yz does not close on z*y*x.
        let a = Alphabet::from_names(&["x", "y", "z"]).unwrap();
        let w = |n: &[&str]| NCPoly::from_spellings(&a, n).unwrap();
        let one = NCPoly::one(&a);
        let rels = vec![
            Relation::new("yx", &(&w(&["y", "x"]) - &w(&["x", "y"])) - &one),
            Relation::new("zx", &w(&["z", "x"]) - &w(&["x", "z"])),
            Relation::new("zy", &w(&["z", "y"]) - &w(&["y", "z"]).scale(&Coefficient::from_int(2))),
        ];
        let sys = RewriteSystem::from_relations(&a, TermOrder::DegLex, &rels, &[], false).unwrap();
        let rep = check_confluence(&sys, 6).unwrap();
        assert!(!rep.confluent);
        assert_eq!(rep.unresolved[0].overlap, Word(vec![2, 1, 0]));
    }
}
