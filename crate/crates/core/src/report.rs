//! Pass/fail reports produced by validators and lemma verifiers.

use alloc::string::String;
use alloc::vec::Vec;

/// One verified claim: an identifier, the finite universe it was checked
/// over, the outcome, and a concrete witness when it failed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckItem {
    pub id: String,
    pub universe: String,
    pub pass: bool,
    /// Rendered witness (a word, a pair or a label triple) for failures.
    pub witness: Option<String>,
    /// Named counters describing the sizes involved in the check.
    pub counts: Vec<(String, u64)>,
}

impl CheckItem {
    pub fn new(id: impl Into<String>, universe: impl Into<String>) -> Self {
        CheckItem {
            id: id.into(),
            universe: universe.into(),
            pass: true,
            witness: None,
            counts: Vec::new(),
        }
    }

    /// Marks the item failed with the given witness, keeping the first one.
    pub fn fail(&mut self, witness: impl Into<String>) {
        if self.pass {
            self.pass = false;
            self.witness = Some(witness.into());
        }
    }

    pub fn count(mut self, name: impl Into<String>, value: u64) -> Self {
        self.counts.push((name.into(), value));
        self
    }

    pub fn add_count(&mut self, name: impl Into<String>, value: u64) {
        self.counts.push((name.into(), value));
    }
}

/// An ordered list of [`CheckItem`]s; failing items always carry a witness.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VerificationReport {
    pub items: Vec<CheckItem>,
}

impl VerificationReport {
    pub fn new() -> Self {
        VerificationReport { items: Vec::new() }
    }

    pub fn push(&mut self, item: CheckItem) {
        self.items.push(item);
    }

    pub fn all_pass(&self) -> bool {
        self.items.iter().all(|i| i.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckItem> {
        self.items.iter().filter(|i| !i.pass)
    }

    /// Appends all items of `other`, preserving order.
    pub fn extend(&mut self, other: VerificationReport) {
        self.items.extend(other.items);
    }
}
