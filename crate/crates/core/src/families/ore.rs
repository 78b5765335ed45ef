use super::{Presentation, Relation};
use crate::error::{Error, Result};
use crate::interface::format_plain;
use crate::ncpoly::{GenId, NCPoly, Word};
use crate::rewrite::RewriteSystem;

/// Twist and derivation for one (adjoined, earlier) generator pair:
/// `adjoined * earlier = sigma * adjoined + delta`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OreEntry {
    pub adjoined: String,
    pub earlier: String,
    pub sigma: NCPoly,
    pub delta: NCPoly,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OreData {
    pub tower: Vec<String>,
    pub entries: Vec<OreEntry>,
}

impl OreData {
    pub fn entry(&self, adjoined: &str, earlier: &str) -> Option<&OreEntry> {
        self.entries
            .iter()
            .find(|e| e.adjoined == adjoined && e.earlier == earlier)
    }

    /// Presentation whose tower relations are rebuilt from `(sigma, delta)`.
    /// Relations of `p` that involve generators outside the tower are kept.
    pub fn rebuild(&self, p: &Presentation) -> Result<Presentation> {
        let tower: Vec<GenId> = self
            .tower
            .iter()
            .map(|g| p.gen(g))
            .collect::<Result<_>>()?;
        let mut out = p.clone();
        out.name = format!("{}-ore", p.name);
        out.interreduce = false;
        out.relations = p
            .relations
            .iter()
            .filter(|r| r.poly.terms().any(|(w, _)| w.letters().iter().any(|g| !tower.contains(g))))
            .cloned()
            .collect();
        for e in &self.entries {
            let y = p.parse(&e.adjoined)?;
            let g = p.parse(&e.earlier)?;
            let rel = &(&(&y * &g) - &(&e.sigma * &y)) - &e.delta;
            out.push_relation(Relation::new(&format!("ore_{}_{}", e.adjoined, e.earlier), rel))?;
        }
        Ok(out)
    }
}

/// Whether `y*g = sigma*y + delta` holds in the quotient.
pub fn ore_identity_holds(
    sys: &RewriteSystem,
    y: &NCPoly,
    g: &NCPoly,
    sigma: &NCPoly,
    delta: &NCPoly,
) -> Result<bool> {
    let diff = &(&(y * g) - &(sigma * y)) - delta;
    Ok(sys.normalize(&diff)?.is_zero())
}

/// Reads off `sigma` and `delta` for every pair `(tower[k], tower[j])`, `j < k`,
/// from the normal form of `tower[k] * tower[j]`.
pub fn extract_ore(p: &Presentation, tower: &[&str]) -> Result<OreData> {
    let sys = p.rewrite_system()?;
    let ids: Vec<GenId> = tower.iter().map(|g| p.gen(g)).collect::<Result<_>>()?;
    let a = &p.alphabet;
    let mut entries = Vec::new();
    for k in 1..ids.len() {
        let y = ids[k];
        let earlier = &ids[..k];
        for &g in earlier {
            let nf = sys.normalize(&NCPoly::word(a, Word(vec![y, g])))?;
            let mut sigma = NCPoly::zero(a);
            let mut delta = NCPoly::zero(a);
            for (w, c) in nf.terms() {
                let l = w.letters();
                if l.last() == Some(&y) && l[..l.len() - 1].iter().all(|h| earlier.contains(h)) {
                    sigma.add_term(Word(l[..l.len() - 1].to_vec()), c.clone());
                } else if l.iter().all(|h| earlier.contains(h)) {
                    delta.add_term(w.clone(), c.clone());
                } else {
                    return Err(Error::NotOreShaped(format!(
                        "{}*{} normalizes to {}, which is not of the form P*{} + D over earlier generators",
                        a.get(y),
                        a.get(g),
                        format_plain(&nf),
                        a.get(y),
                    )));
                }
            }
            let (yp, gp) = (NCPoly::generator(a, y), NCPoly::generator(a, g));
            if !ore_identity_holds(&sys, &yp, &gp, &sigma, &delta)? {
                return Err(Error::NotOreShaped(format!(
                    "{}*{} does not re-normalize to its extracted form",
                    a.get(y),
                    a.get(g)
                )));
            }
            entries.push(OreEntry {
                adjoined: a.get(y).spelling(),
                earlier: a.get(g).spelling(),
                sigma,
                delta,
            });
        }
    }
    Ok(OreData {
        tower: tower.iter().map(|s| s.to_string()).collect(),
        entries,
    })
}
