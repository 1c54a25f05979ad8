//! A small declarative language for manifold constructions.
//!
//! A recipe is a list of `let` bindings (building blocks combined by cut
//! and paste operations) and `assert` statements whose numbers are
//! recomputed from the bound manifolds. Parsing is whitespace insensitive;
//! the canonical printer is a parser fixed point.

mod ast;
mod eval;
mod parser;
mod printer;
mod report;

pub use ast::{
    Arg, Assertion, BmyWord, Expr, InvKey, Pi1Word, Recipe, Stmt, StmtKind, SurfKey,
};
pub use eval::evaluate;
pub use parser::parse;
pub use printer::{print, print_stmt};
pub use report::{Outcome, Report, StmtResult};

/// Recipe parse errors with source position.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RecipeError {
    #[error("{line}:{col}: {msg}")]
    Syntax { line: usize, col: usize, msg: String },
}
