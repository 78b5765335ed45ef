use super::order::TermOrder;
use crate::error::Result;
use crate::families::Relation;
use crate::ncpoly::{NCPoly, Word};

fn leading(p: &NCPoly, order: TermOrder) -> Option<Word> {
    p.terms().map(|(w, _)| w).max_by(|a, b| order.cmp(a, b)).cloned()
}

/// Linear interreduction of a relation list: Gaussian elimination with the
/// order-leading word as pivot, followed by back substitution, so every
/// pivot word occurs in exactly one surviving relation. Relations that
/// become zero are dropped. A combined relation is labelled `a+b`.
pub fn interreduce(relations: &[Relation], order: TermOrder) -> Result<Vec<Relation>> {
    let mut rows: Vec<(Relation, Word)> = Vec::new();
    for rel in relations {
        let mut cur = rel.clone();
        while let Some(lead) = leading(&cur.poly, order) {
            let Some((pivot, _)) = rows.iter().find(|(_, w)| *w == lead) else {
                break;
            };
            let f = cur.poly.coeff(&lead).div(&pivot.poly.coeff(&lead))?;
            cur.poly = &cur.poly - &pivot.poly.scale(&f);
            cur.label = format!("{}+{}", cur.label, pivot.label);
        }
        if let Some(lead) = leading(&cur.poly, order) {
            rows.push((cur, lead));
        }
    }
    // Back substitution: clear every pivot word from the other rows.
    let pivots: Vec<(usize, Word)> = rows.iter().map(|(_, w)| w.clone()).enumerate().collect();
    for (pi, pw) in &pivots {
        let pivot = rows[*pi].0.clone();
        let lc = pivot.poly.coeff(pw);
        for (ri, (row, _)) in rows.iter_mut().enumerate() {
            if ri == *pi {
                continue;
            }
            let c = row.poly.coeff(pw);
            if c.is_zero() {
                continue;
            }
            let f = c.div(&lc)?;
            row.poly = &row.poly - &pivot.poly.scale(&f);
        }
    }
    Ok(rows.into_iter().map(|(r, _)| r).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffs::Coefficient;
    use crate::ncpoly::Alphabet;

    #[test]
    fn shared_leading_word_is_split() {
        let a = Alphabet::from_names(&["x", "p"]).unwrap();
        let px = NCPoly::from_spellings(&a, &["p", "x"]).unwrap();
        let xp = NCPoly::from_spellings(&a, &["x", "p"]).unwrap();
        let one = NCPoly::one(&a);
        let r1 = Relation::new("a", &(&px - &xp) - &one);
        let r2 = Relation::new("b", &(&px + &xp) - &one.scale(&Coefficient::from_int(3)));
        let out = interreduce(&[r1, r2], TermOrder::DegLex).unwrap();
        assert_eq!(out.len(), 2);
        assert_eq!(out[1].label, "b+a");
        // Each pivot appears once: px - 2, xp - 1 (up to scaling).
        assert!(out[0].poly.coeff(&xp.terms().next().unwrap().0.clone()).is_zero());
        assert!(out[1].poly.coeff(&px.terms().next().unwrap().0.clone()).is_zero());
    }
}
