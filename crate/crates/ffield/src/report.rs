//! Inequality reports with exact verdicts.

use alloc::string::String;
use alloc::vec::Vec;

use crate::poly::fmt_rat;
use crate::Rat;

/// One evaluated inequality or identity: both sides as exact rationals, the
/// branch of the statement that applied, and a verdict decided entirely in
/// integer arithmetic. Cube-root comparisons are stored in cubed form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundReport {
    pub check: String,
    pub lhs: Rat,
    pub rhs: Rat,
    pub holds: bool,
    pub branch: String,
    /// (key, exact value) pairs describing the inputs: heights, chi, h, k,
    /// relation data. Values are printed exactly, never as floats.
    pub context: Vec<(String, String)>,
    pub notes: Vec<String>,
}

impl BoundReport {
    pub fn new(check: impl Into<String>, lhs: Rat, rhs: Rat, holds: bool) -> Self {
        BoundReport {
            check: check.into(),
            lhs,
            rhs,
            holds,
            branch: String::new(),
            context: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn with_branch(mut self, branch: impl Into<String>) -> Self {
        self.branch = branch.into();
        self
    }

    pub fn push_context(&mut self, key: impl Into<String>, value: impl Into<String>) {
        self.context.push((key.into(), value.into()));
    }

    pub fn push_context_rat(&mut self, key: impl Into<String>, value: &Rat) {
        self.context.push((key.into(), fmt_rat(value)));
    }

    pub fn push_note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    pub fn lhs_display(&self) -> String {
        fmt_rat(&self.lhs)
    }

    pub fn rhs_display(&self) -> String {
        fmt_rat(&self.rhs)
    }
}

impl core::fmt::Display for BoundReport {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(
            f,
            "{}: lhs {} vs rhs {} [{}] {}",
            self.check,
            self.lhs_display(),
            self.rhs_display(),
            self.branch,
            if self.holds { "holds" } else { "VIOLATED" }
        )
    }
}
