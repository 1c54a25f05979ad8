//! Canonical text form for recipes: `parse(print(parse(s))) == parse(s)`.

use super::ast::*;
use std::fmt::Write;

/// Renders a whole recipe, one statement per line.
pub fn print(recipe: &Recipe) -> String {
    let mut out = String::new();
    for stmt in &recipe.statements {
        out.push_str(&print_stmt(stmt));
        out.push('\n');
    }
    out
}

/// Renders one statement without a trailing newline.
pub fn print_stmt(stmt: &Stmt) -> String {
    match &stmt.kind {
        StmtKind::Let { name, expr } => format!("let {name} = {}", print_expr(expr)),
        StmtKind::Assert(a) => format!("assert {}", print_assertion(a)),
    }
}

fn print_expr(expr: &Expr) -> String {
    match expr {
        Expr::Call { name, args } => {
            let args: Vec<String> = args.iter().map(print_arg).collect();
            format!("{name}({})", args.join(", "))
        }
        Expr::Project { base, field } => format!("{}.{field}", print_expr(base)),
    }
}

fn print_arg(arg: &Arg) -> String {
    match arg {
        Arg::Int(v) => v.to_string(),
        Arg::Str(s) => format!("\"{s}\""),
        Arg::Name(n) => n.clone(),
        Arg::Selector { owner, surface } => format!("{owner}.{surface}"),
        Arg::KeyVal { key, value } => format!("{key}={value}"),
    }
}

fn print_assertion(a: &Assertion) -> String {
    match a {
        Assertion::Invariants { target, checks } => {
            let mut s = format!("invariants({target}");
            for (key, value) in checks {
                write!(s, ", {}={value}", key.name()).expect("string write");
            }
            s.push(')');
            s
        }
        Assertion::Homeo { target, p, q } => format!("homeo({target}, {p} CP2 # {q} mCP2)"),
        Assertion::HomeoRefused { target } => format!("homeo_refused({target})"),
        Assertion::Bmy { target, status } => format!("bmy({target}, {})", status.name()),
        Assertion::SimplyConnected { target, tag } => {
            format!("simply_connected({target}) by \"{tag}\"")
        }
        Assertion::NonSpin { target, tag } => format!("nonspin({target}) by \"{tag}\""),
        Assertion::Pi1Is { target, claim, tag } => {
            format!("pi1({target}, {}) by \"{tag}\"", claim.name())
        }
        Assertion::H1Trivial { reference } => format!("h1_trivial({reference})"),
        Assertion::SurfaceShape { owner, surface, checks } => {
            let mut s = format!("surface({owner}.{surface}");
            for (key, value) in checks {
                write!(s, ", {}={value}", key.name()).expect("string write");
            }
            s.push(')');
            s
        }
        Assertion::MinimalYes { target } => format!("minimal({target})"),
    }
}
