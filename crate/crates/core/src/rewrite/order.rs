use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::Error;
use crate::ncpoly::Word;

/// Well-order on words used to orient relations.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub enum TermOrder {
    /// Length first, then lexicographic by generator precedence.
    #[default]
    DegLex,
    /// Number of out-of-order letter pairs first, then [`TermOrder::DegLex`].
    /// Lets a rule like `h*x -> x*h^2` count as decreasing.
    InversionsFirst,
}

/// Sort key realizing a [`TermOrder`]; the derived `Ord` is the term order.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct OrderKey {
    inversions: usize,
    len: usize,
    word: Word,
}

impl OrderKey {
    pub fn word(&self) -> &Word {
        &self.word
    }

    pub fn into_word(self) -> Word {
        self.word
    }
}

pub fn inversions(w: &Word) -> usize {
    let l = w.letters();
    let mut n = 0;
    for i in 0..l.len() {
        for j in i + 1..l.len() {
            if l[i] > l[j] {
                n += 1;
            }
        }
    }
    n
}

impl TermOrder {
    pub fn key(&self, w: Word) -> OrderKey {
        let inversions = match self {
            TermOrder::DegLex => 0,
            TermOrder::InversionsFirst => inversions(&w),
        };
        OrderKey {
            inversions,
            len: w.len(),
            word: w,
        }
    }

    pub fn cmp(&self, a: &Word, b: &Word) -> Ordering {
        self.key(a.clone()).cmp(&self.key(b.clone()))
    }

    pub fn name(&self) -> &'static str {
        match self {
            TermOrder::DegLex => "deglex",
            TermOrder::InversionsFirst => "inversions",
        }
    }
}

impl fmt::Display for TermOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TermOrder {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "deglex" => Ok(TermOrder::DegLex),
            "inversions" => Ok(TermOrder::InversionsFirst),
            other => Err(Error::Param(format!(
                "unknown term order `{other}` (expected deglex or inversions)"
            ))),
        }
    }
}
