//! Pass/fail summaries produced by the verification routines.

use serde::Serialize;

/// Outcome of one axiom or identity, with the inputs that broke it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomResult {
    pub name: String,
    pub pass: bool,
    pub witnesses: Vec<String>,
}

/// A named group of axiom results; passes iff every item passes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub check: String,
    pub level: String,
    pub pass: bool,
    pub items: Vec<AxiomResult>,
}

impl CheckReport {
    pub fn new(check: impl Into<String>, level: impl Into<String>) -> Self {
        Self {
            check: check.into(),
            level: level.into(),
            pass: true,
            items: Vec::new(),
        }
    }

    /// Records an axiom; an empty witness list means it held.
    pub fn record(&mut self, name: impl Into<String>, witnesses: Vec<String>) {
        let pass = witnesses.is_empty();
        self.pass &= pass;
        self.items.push(AxiomResult {
            name: name.into(),
            pass,
            witnesses,
        });
    }

    pub fn item(&self, name: &str) -> Option<&AxiomResult> {
        self.items.iter().find(|r| r.name == name)
    }

    /// All witnesses, each prefixed with its axiom name.
    pub fn witnesses(&self) -> Vec<String> {
        self.items
            .iter()
            .flat_map(|r| r.witnesses.iter().map(move |w| format!("{}: {w}", r.name)))
            .collect()
    }

    pub fn merge(&mut self, other: CheckReport) {
        for item in other.items {
            self.pass &= item.pass;
            self.items.push(item);
        }
    }
}
