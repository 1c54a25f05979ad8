//! Evaluation reports: per-statement outcomes plus a final verdict.

use std::fmt::Write;

/// Outcome of evaluating one recipe statement.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    /// A `let` succeeded and bound `name`.
    Bound { name: String, summary: String },
    /// An assertion held.
    Pass { detail: String },
    /// An assertion failed; evaluation continues.
    Fail { detail: String },
}

/// One evaluated statement with its source text.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StmtResult {
    pub line: usize,
    pub text: String,
    pub outcome: Outcome,
}

/// Full evaluation record for one recipe.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub name: String,
    pub statements: Vec<StmtResult>,
    /// Set when evaluation aborted (bad binding, unknown op); statements
    /// before the abort are still recorded.
    pub error: Option<String>,
}

impl Report {
    pub fn new(name: impl Into<String>) -> Self {
        Report { name: name.into(), statements: Vec::new(), error: None }
    }

    /// True when every assertion passed and no abort occurred.
    pub fn passed(&self) -> bool {
        self.error.is_none()
            && !self.statements.iter().any(|s| matches!(s.outcome, Outcome::Fail { .. }))
    }

    pub fn assertions_total(&self) -> usize {
        self.statements
            .iter()
            .filter(|s| !matches!(s.outcome, Outcome::Bound { .. }))
            .count()
    }

    pub fn assertions_passed(&self) -> usize {
        self.statements
            .iter()
            .filter(|s| matches!(s.outcome, Outcome::Pass { .. }))
            .count()
    }

    /// Deterministic plain-text rendering; identical inputs give identical bytes.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "recipe {}", self.name).expect("string write");
        for s in &self.statements {
            writeln!(out, "{:>3} | {}", s.line, s.text).expect("string write");
            let annotation = match &s.outcome {
                Outcome::Bound { name, summary } => format!("bound {name}: {summary}"),
                Outcome::Pass { detail } => format!("pass: {detail}"),
                Outcome::Fail { detail } => format!("FAIL: {detail}"),
            };
            writeln!(out, "      = {annotation}").expect("string write");
        }
        if let Some(msg) = &self.error {
            writeln!(out, "error: {msg}").expect("string write");
        }
        let verdict = if self.passed() { "pass" } else { "fail" };
        writeln!(
            out,
            "result: {verdict} ({}/{} assertions)",
            self.assertions_passed(),
            self.assertions_total()
        )
        .expect("string write");
        out
    }
}
