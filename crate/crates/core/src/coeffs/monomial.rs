use std::cmp::Ordering;
use std::sync::Arc;

/// Internal name of the central variable `q^(1/2)`.
pub const S: &str = "s";
/// Internal name of the central variable `p^(1/2)`.
pub const T: &str = "t";
/// Internal name of the central variable `hbar`.
pub const H: &str = "h";

/// A Laurent monomial in commuting central variables.
///
/// Stored as `(name, exponent)` pairs sorted by name with no zero exponents,
/// so the derived ordering is lexicographic by variable name, then exponent.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct CentralMonomial {
    exps: Vec<(Arc<str>, i32)>,
}

impl CentralMonomial {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn var(name: &str, exp: i32) -> Self {
        if exp == 0 {
            return Self::one();
        }
        Self {
            exps: vec![(Arc::from(name), exp)],
        }
    }

    pub fn from_pairs<I: IntoIterator<Item = (Arc<str>, i32)>>(pairs: I) -> Self {
        let mut exps: Vec<(Arc<str>, i32)> = Vec::new();
        for (v, e) in pairs {
            match exps.binary_search_by(|(n, _)| n.as_ref().cmp(v.as_ref())) {
                Ok(i) => exps[i].1 += e,
                Err(i) => exps.insert(i, (v, e)),
            }
        }
        exps.retain(|(_, e)| *e != 0);
        Self { exps }
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn exponent(&self, name: &str) -> i32 {
        self.exps
            .binary_search_by(|(n, _)| n.as_ref().cmp(name))
            .map(|i| self.exps[i].1)
            .unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, i32)> {
        self.exps.iter().map(|(n, e)| (n.as_ref(), *e))
    }

    pub fn vars(&self) -> impl Iterator<Item = &Arc<str>> {
        self.exps.iter().map(|(n, _)| n)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Vec::with_capacity(self.exps.len() + other.exps.len());
        let (mut i, mut j) = (0, 0);
        while i < self.exps.len() && j < other.exps.len() {
            let (a, b) = (&self.exps[i], &other.exps[j]);
            match a.0.cmp(&b.0) {
                Ordering::Less => {
                    out.push(a.clone());
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b.clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let e = a.1 + b.1;
                    if e != 0 {
                        out.push((a.0.clone(), e));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.exps[i..]);
        out.extend_from_slice(&other.exps[j..]);
        Self { exps: out }
    }

    pub fn inv(&self) -> Self {
        Self {
            exps: self.exps.iter().map(|(n, e)| (n.clone(), -e)).collect(),
        }
    }

    pub fn pow(&self, k: i32) -> Self {
        if k == 0 {
            return Self::one();
        }
        Self {
            exps: self.exps.iter().map(|(n, e)| (n.clone(), e * k)).collect(),
        }
    }

    /// Removes `name` from the monomial, returning its exponent.
    pub fn without(&self, name: &str) -> (Self, i32) {
        let e = self.exponent(name);
        let exps = self
            .exps
            .iter()
            .filter(|(n, _)| n.as_ref() != name)
            .cloned()
            .collect();
        (Self { exps }, e)
    }

    /// Componentwise minimum against `other`, treating absent variables as exponent 0.
    pub fn gcd_min(&self, other: &Self) -> Self {
        Self::from_pairs(self.merge_with(other, |a, b| a.min(b)))
    }

    pub fn lcm_max(&self, other: &Self) -> Self {
        Self::from_pairs(self.merge_with(other, |a, b| a.max(b)))
    }

    fn merge_with(&self, other: &Self, f: impl Fn(i32, i32) -> i32) -> Vec<(Arc<str>, i32)> {
        let mut names: Vec<&Arc<str>> = self.vars().chain(other.vars()).collect();
        names.sort();
        names.dedup();
        names
            .into_iter()
            .map(|n| (n.clone(), f(self.exponent(n), other.exponent(n))))
            .collect()
    }

    pub fn total_degree(&self) -> i64 {
        self.exps.iter().map(|(_, e)| *e as i64).sum()
    }

    /// Pure lexicographic comparison over the dense exponent vectors, variables taken
    /// in name order. Unlike the derived `Ord` this is a monomial order.
    pub fn lex_cmp(&self, other: &Self) -> Ordering {
        let (mut i, mut j) = (0, 0);
        loop {
            match (self.exps.get(i), other.exps.get(j)) {
                (None, None) => return Ordering::Equal,
                (Some(a), None) => return a.1.cmp(&0),
                (None, Some(b)) => return 0.cmp(&b.1),
                (Some(a), Some(b)) => match a.0.cmp(&b.0) {
                    Ordering::Less => return a.1.cmp(&0),
                    Ordering::Greater => return 0.cmp(&b.1),
                    Ordering::Equal => {
                        if a.1 != b.1 {
                            return a.1.cmp(&b.1);
                        }
                        i += 1;
                        j += 1;
                    }
                },
            }
        }
    }

    pub fn all_nonnegative(&self) -> bool {
        self.exps.iter().all(|(_, e)| *e >= 0)
    }
}
