use std::collections::BTreeMap;
use std::sync::Arc;

use crate::coeffs::RESERVED_NAMES;
use crate::error::{Error, Result};
use crate::interface::{parse_expr, Symbols};
use crate::ncpoly::{Alphabet, GenId, NCPoly};
use crate::rewrite::{orient, RewriteSystem, TermOrder};

/// A defining relation `poly = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub label: String,
    pub poly: NCPoly,
}

impl Relation {
    pub fn new(label: &str, poly: NCPoly) -> Self {
        Self {
            label: label.to_string(),
            poly,
        }
    }
}

/// A finitely presented algebra: the free algebra on `alphabet` modulo the
/// relations, with declared inverse pairs and opaque central symbols.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    pub name: String,
    /// Generators in ascending precedence.
    pub alphabet: Arc<Alphabet>,
    pub order: TermOrder,
    /// `(g, g_inv)` pairs; each contributes `g*g_inv -> 1` and `g_inv*g -> 1`.
    pub inverse_pairs: Vec<(GenId, GenId)>,
    pub opaques: Vec<String>,
    pub relations: Vec<Relation>,
    /// Interreduce relations linearly before orienting.
    pub interreduce: bool,
    /// Parameter values as given, for display and round trips.
    pub parameters: BTreeMap<String, String>,
    pub metadata: Vec<String>,
}

impl Presentation {
    /// Empty presentation on the given generator spellings.
    pub fn new(name: &str, generators: &[&str]) -> Result<Self> {
        Ok(Self {
            name: name.to_string(),
            alphabet: Alphabet::from_names(generators)?,
            order: TermOrder::DegLex,
            inverse_pairs: Vec::new(),
            opaques: Vec::new(),
            relations: Vec::new(),
            interreduce: false,
            parameters: BTreeMap::new(),
            metadata: Vec::new(),
        })
    }

    pub fn gen(&self, spelling: &str) -> Result<GenId> {
        self.alphabet
            .lookup(spelling)
            .ok_or_else(|| Error::UnboundGenerator(spelling.to_string()))
    }

    pub fn with_inverse(mut self, g: &str, g_inv: &str) -> Result<Self> {
        let pair = (self.gen(g)?, self.gen(g_inv)?);
        self.inverse_pairs.push(pair);
        Ok(self)
    }

    pub fn with_opaque(mut self, name: &str) -> Result<Self> {
        if RESERVED_NAMES.contains(&name) || self.alphabet.lookup(name).is_some() {
            return Err(Error::Param(format!(
                "opaque symbol `{name}` clashes with a reserved or generator name"
            )));
        }
        if !self.opaques.iter().any(|o| o == name) {
            self.opaques.push(name.to_string());
        }
        Ok(self)
    }

    pub fn symbols(&self) -> Symbols {
        Symbols {
            alphabet: self.alphabet.clone(),
            inverse_pairs: self.inverse_pairs.clone(),
            opaques: self.opaques.clone(),
        }
    }

    /// Parses an expression over this presentation's symbols.
    pub fn parse(&self, text: &str) -> Result<NCPoly> {
        parse_expr(text, &self.symbols())
    }

    /// Appends the relation `text = 0`.
    pub fn relation(mut self, label: &str, text: &str) -> Result<Self> {
        let poly = self.parse(text)?;
        self.push_relation(Relation::new(label, poly))?;
        Ok(self)
    }

    pub fn push_relation(&mut self, rel: Relation) -> Result<()> {
        if self.relations.iter().any(|r| r.label == rel.label) {
            return Err(Error::Param(format!("duplicate relation label `{}`", rel.label)));
        }
        if rel.poly.alphabet() != &self.alphabet {
            return Err(Error::AlphabetError);
        }
        self.relations.push(rel);
        Ok(())
    }

    pub fn relation_by_label(&self, label: &str) -> Option<&Relation> {
        self.relations.iter().find(|r| r.label == label)
    }

    pub fn rewrite_system(&self) -> Result<RewriteSystem> {
        orient(self)
    }

    pub fn note(mut self, text: &str) -> Self {
        self.metadata.push(text.to_string());
        self
    }

    pub fn param(mut self, key: &str, value: &str) -> Self {
        self.parameters.insert(key.to_string(), value.to_string());
        self
    }
}
