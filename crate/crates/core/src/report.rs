//! Structured results of the verification checks.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::normal_form::NormalFormTuple;
use crate::perm::Permutation;
use crate::word::Word;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StatValue {
    Count(u64),
    Flag(bool),
    Text(String),
}

impl fmt::Display for StatValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StatValue::Count(c) => write!(f, "{c}"),
            StatValue::Flag(b) => write!(f, "{b}"),
            StatValue::Text(t) => f.write_str(t),
        }
    }
}

impl From<u64> for StatValue {
    fn from(v: u64) -> Self {
        StatValue::Count(v)
    }
}

impl From<usize> for StatValue {
    fn from(v: usize) -> Self {
        StatValue::Count(v as u64)
    }
}

impl From<bool> for StatValue {
    fn from(v: bool) -> Self {
        StatValue::Flag(v)
    }
}

impl From<&str> for StatValue {
    fn from(v: &str) -> Self {
        StatValue::Text(v.to_string())
    }
}

impl From<String> for StatValue {
    fn from(v: String) -> Self {
        StatValue::Text(v)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    Word(Word),
    Permutation(Permutation),
    Tuple(NormalFormTuple),
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Word(w) => write!(f, "{w}"),
            Witness::Permutation(p) => write!(f, "{p}"),
            Witness::Tuple(t) => write!(f, "{t}"),
        }
    }
}

/// A labelled group of witnesses, e.g. a failing relation with both evaluated sides.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Payload {
    pub description: String,
    pub witnesses: Vec<(String, Witness)>,
}

impl Payload {
    pub fn new(description: impl Into<String>) -> Payload {
        Payload { description: description.into(), witnesses: Vec::new() }
    }

    pub fn with(mut self, label: impl Into<String>, w: Witness) -> Payload {
        self.witnesses.push((label.into(), w));
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub check: String,
    pub n: usize,
    pub passed: bool,
    /// Present whenever `passed` is false.
    pub counterexample: Option<Payload>,
    pub stats: BTreeMap<String, StatValue>,
    /// Supporting data for passing checks (e.g. orbit representatives).
    pub samples: Vec<Payload>,
    pub notes: Vec<String>,
}

impl VerificationReport {
    pub fn new(check: impl Into<String>, n: usize) -> VerificationReport {
        VerificationReport {
            check: check.into(),
            n,
            passed: true,
            counterexample: None,
            stats: BTreeMap::new(),
            samples: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn stat(&mut self, key: &str, value: impl Into<StatValue>) {
        self.stats.insert(key.to_string(), value.into());
    }

    pub fn count(&self, key: &str) -> Option<u64> {
        match self.stats.get(key) {
            Some(StatValue::Count(c)) => Some(*c),
            _ => None,
        }
    }

    /// Records a failure; keeps the first counterexample.
    pub fn fail(&mut self, payload: Payload) {
        self.passed = false;
        if self.counterexample.is_none() {
            self.counterexample = Some(payload);
        }
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}\tn={}\t{}", self.check, self.n, if self.passed { "PASS" } else { "FAIL" })?;
        for (k, v) in &self.stats {
            write!(f, "\t{k}={v}")?;
        }
        Ok(())
    }
}
