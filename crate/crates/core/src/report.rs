use serde::{Deserialize, Serialize};

/// One verified identity or condition. `lhs_word` and `rhs_word` hold the two
/// sides being compared, rendered as text (braid words, permutations, residues).
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CheckRecord {
    pub relation: String,
    pub indices: Vec<i64>,
    pub lhs_word: String,
    pub rhs_word: String,
    pub pass: bool,
}

impl CheckRecord {
    pub fn new(
        relation: impl Into<String>,
        indices: Vec<i64>,
        lhs: impl Into<String>,
        rhs: impl Into<String>,
        pass: bool,
    ) -> Self {
        CheckRecord {
            relation: relation.into(),
            indices,
            lhs_word: lhs.into(),
            rhs_word: rhs.into(),
            pass,
        }
    }
}

/// A machine-readable list of checks. Failures are entries with `pass: false`,
/// never panics, so callers can audit every instance.
#[derive(Debug, Clone, Default, Serialize, Deserialize)]
pub struct Report {
    pub checks: Vec<CheckRecord>,
}

impl Report {
    pub fn new() -> Self {
        Report { checks: Vec::new() }
    }

    pub fn push(&mut self, record: CheckRecord) {
        self.checks.push(record);
    }

    pub fn record(
        &mut self,
        relation: impl Into<String>,
        indices: Vec<i64>,
        lhs: impl Into<String>,
        rhs: impl Into<String>,
        pass: bool,
    ) {
        self.push(CheckRecord::new(relation, indices, lhs, rhs, pass));
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckRecord> {
        self.checks.iter().filter(|c| !c.pass)
    }

    pub fn len(&self) -> usize {
        self.checks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.checks.is_empty()
    }

    pub fn merge(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }
}
