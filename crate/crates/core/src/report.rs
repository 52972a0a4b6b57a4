//! Verdicts for identity checks.
//!
//! A checker evaluates every case and keeps every violation; only the listing
//! is limited (ten witnesses by default). The verdict always reflects all
//! cases.

use rayon::prelude::*;

use crate::field::Scalar;

pub const DEFAULT_MAX_WITNESSES: usize = 10;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    /// Stable identity id such as `"alt.left"` or `"pb.4"`.
    pub identity: String,
    /// Basis indices of the failing case, in the order the identity takes
    /// its arguments.
    pub witness: Vec<usize>,
    /// Coordinates of the nonzero residual.
    pub residual: Vec<Scalar>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    violations: Vec<Violation>,
    limit: usize,
}

impl Default for CheckReport {
    fn default() -> Self {
        Self::pass()
    }
}

impl CheckReport {
    pub fn pass() -> Self {
        CheckReport { violations: Vec::new(), limit: DEFAULT_MAX_WITNESSES }
    }

    pub fn from_violations(violations: Vec<Violation>) -> Self {
        CheckReport { violations, limit: DEFAULT_MAX_WITNESSES }
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    /// Listed witnesses, at most the configured limit.
    pub fn violations(&self) -> &[Violation] {
        &self.violations[..self.violations.len().min(self.limit)]
    }

    pub fn all_violations(&self) -> &[Violation] {
        &self.violations
    }

    pub fn total_violations(&self) -> usize {
        self.violations.len()
    }

    pub fn truncated(&self) -> bool {
        self.violations.len() > self.limit
    }

    pub fn limit(&self) -> usize {
        self.limit
    }

    pub fn with_limit(mut self, limit: usize) -> Self {
        self.limit = limit;
        self
    }

    /// Appends another report's violations after this one's.
    pub fn merge(mut self, other: CheckReport) -> Self {
        self.violations.extend(other.violations);
        self
    }

    pub fn push(&mut self, v: Violation) {
        self.violations.push(v);
    }

    /// Records `residual` under `identity` unless it is zero.
    pub fn record(&mut self, identity: &str, witness: Vec<usize>, residual: Vec<Scalar>) {
        if let Some(v) = violation(identity, witness, residual) {
            self.violations.push(v);
        }
    }

    /// Violations of one identity family.
    pub fn of(&self, identity: &str) -> impl Iterator<Item = &Violation> {
        let id = identity.to_string();
        self.violations.iter().filter(move |v| v.identity == id)
    }

    pub fn fails(&self, identity: &str) -> bool {
        self.of(identity).next().is_some()
    }
}

pub fn violation(identity: &str, witness: Vec<usize>, residual: Vec<Scalar>) -> Option<Violation> {
    if residual.iter().all(Scalar::is_zero) {
        None
    } else {
        Some(Violation { identity: identity.to_string(), witness, residual })
    }
}

/// Evaluates `f` on every index tuple in `0..n` of the given arity, in
/// parallel, keeping lexicographic order of the results.
pub fn scan<F>(n: usize, arity: usize, f: F) -> Vec<Violation>
where
    F: Fn(&[usize]) -> Vec<Violation> + Sync,
{
    if arity == 0 {
        return f(&[]);
    }
    (0..n)
        .into_par_iter()
        .map(|first| {
            let mut out = Vec::new();
            let mut idx = vec![0usize; arity];
            idx[0] = first;
            loop {
                out.extend(f(&idx));
                // advance the trailing positions odometer-style
                let mut p = arity;
                loop {
                    if p == 1 {
                        return out;
                    }
                    p -= 1;
                    idx[p] += 1;
                    if idx[p] < n {
                        break;
                    }
                    idx[p] = 0;
                }
            }
        })
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect()
}
