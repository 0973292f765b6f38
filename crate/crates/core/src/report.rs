//! Pass/fail reports for axiom checkers.
//!
//! A report is an ordered list of named identities, each with a verdict and,
//! on failure, the first differing matrix entry as a witness. The order of
//! items is fixed by the checker that produced them, so reports are
//! deterministic and can be compared across runs.

use std::fmt;

use crate::field::Field;
use crate::tensorlin::LinearMap;

/// Position of the first differing entry between the two sides of an
/// identity, scanned column by column.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Witness {
    pub row: usize,
    pub col: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckItem {
    pub name: String,
    pub pass: bool,
    pub witness: Option<Witness>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CheckReport {
    pub items: Vec<CheckItem>,
    /// Free-form context lines, e.g. the seed of a randomized suite.
    pub notes: Vec<String>,
}

impl CheckReport {
    pub fn new() -> Self {
        CheckReport::default()
    }

    pub fn passed(&self) -> bool {
        self.items.iter().all(|i| i.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckItem> {
        self.items.iter().filter(|i| !i.pass)
    }

    pub fn item(&self, name: &str) -> Option<&CheckItem> {
        self.items.iter().find(|i| i.name == name)
    }

    pub fn push(&mut self, item: CheckItem) {
        self.items.push(item);
    }

    pub fn push_pass(&mut self, name: impl Into<String>, pass: bool) {
        self.items.push(CheckItem {
            name: name.into(),
            pass,
            witness: None,
        });
    }

    /// Record the identity `lhs == rhs`. The two maps must act between the
    /// same total dimensions; callers guarantee this by construction.
    pub fn push_identity<F: Field>(
        &mut self,
        name: impl Into<String>,
        lhs: &LinearMap<F>,
        rhs: &LinearMap<F>,
    ) {
        let witness = lhs.first_difference(rhs);
        self.items.push(CheckItem {
            name: name.into(),
            pass: witness.is_none(),
            witness,
        });
    }

    pub fn note(&mut self, line: impl Into<String>) {
        self.notes.push(line.into());
    }

    /// Append another report, prefixing its item names.
    pub fn absorb(&mut self, prefix: &str, other: CheckReport) {
        for mut item in other.items {
            if !prefix.is_empty() {
                item.name = format!("{prefix}{}", item.name);
            }
            self.items.push(item);
        }
        self.notes.extend(other.notes);
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for note in &self.notes {
            writeln!(f, "# {note}")?;
        }
        for item in &self.items {
            if item.pass {
                writeln!(f, "ok   {}", item.name)?;
            } else if let Some(w) = item.witness {
                writeln!(
                    f,
                    "FAIL {} (first difference at row {}, col {})",
                    item.name, w.row, w.col
                )?;
            } else {
                writeln!(f, "FAIL {}", item.name)?;
            }
        }
        Ok(())
    }
}
