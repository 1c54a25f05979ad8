//! Recipe evaluator: binds manifolds, applies operations, checks assertions.
//!
//! A bad statement (unknown binding, malformed arguments, failed operation)
//! aborts evaluation with `Report::error` set; a failed assertion is recorded
//! and evaluation continues. Asserted numbers are always recomputed from the
//! bound manifold, never echoed from the recipe text.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use super::ast::*;
use super::printer::print_stmt;
use super::report::{Outcome, Report, StmtResult};
use crate::group;
use crate::manifold::{
    self, BmyStatus, ManifoldClass, Minimal, Parity, Pi1,
};
use crate::{blocks, cover};

type Env = BTreeMap<String, ManifoldClass>;

/// Statement-level failure that aborts the whole evaluation.
struct Abort(String);

type StepResult<T> = Result<T, Abort>;

impl BmyWord {
    fn to_status(self) -> BmyStatus {
        match self {
            BmyWord::OnLine => BmyStatus::OnLine,
            BmyWord::Below => BmyStatus::Below,
            BmyWord::Violated => BmyStatus::Violated,
        }
    }
}

impl Pi1Word {
    fn to_pi1(self) -> Pi1 {
        match self {
            Pi1Word::Trivial => Pi1::Trivial,
            Pi1Word::Z2 => Pi1::Z2,
        }
    }
}

/// Evaluates a parsed recipe under the given report name.
pub fn evaluate(name: &str, recipe: &Recipe) -> Report {
    let mut report = Report::new(name);
    let mut env: Env = Env::new();
    for stmt in &recipe.statements {
        let text = print_stmt(stmt);
        match step(&mut env, stmt) {
            Ok(outcome) => {
                report.statements.push(StmtResult { line: stmt.line, text, outcome });
            }
            Err(Abort(msg)) => {
                report.error = Some(format!("line {}: {msg}", stmt.line));
                break;
            }
        }
    }
    report
}

fn step(env: &mut Env, stmt: &Stmt) -> StepResult<Outcome> {
    match &stmt.kind {
        StmtKind::Let { name, expr } => {
            if env.contains_key(name) {
                return Err(Abort(format!("binding `{name}` is already defined")));
            }
            let mut m = eval_expr(env, expr)?;
            m.normalize();
            let summary = m.summary();
            env.insert(name.clone(), m);
            Ok(Outcome::Bound { name: name.clone(), summary })
        }
        StmtKind::Assert(a) => check(env, a),
    }
}

fn lookup<'e>(env: &'e Env, name: &str) -> StepResult<&'e ManifoldClass> {
    env.get(name).ok_or_else(|| Abort(format!("unknown binding `{name}`")))
}

fn eval_expr(env: &Env, expr: &Expr) -> StepResult<ManifoldClass> {
    match expr {
        Expr::Project { .. } => Err(Abort(
            "cannot bind a surface selection; bind the manifold and select \
             surfaces in operation arguments"
                .to_string(),
        )),
        Expr::Call { name, args } => eval_call(env, name, args),
    }
}

fn bad_args(op: &str, usage: &str) -> Abort {
    Abort(format!("`{op}` expects {usage}"))
}

fn selector<'a>(arg: &'a Arg, op: &str, usage: &str) -> StepResult<(&'a str, &'a str)> {
    match arg {
        Arg::Selector { owner, surface } => Ok((owner, surface)),
        _ => Err(bad_args(op, usage)),
    }
}

fn int_arg(arg: &Arg, op: &str, usage: &str) -> StepResult<i64> {
    match arg {
        Arg::Int(v) => Ok(*v),
        _ => Err(bad_args(op, usage)),
    }
}

fn count_arg(arg: &Arg, op: &str, usage: &str) -> StepResult<u64> {
    let v = int_arg(arg, op, usage)?;
    u64::try_from(v).map_err(|_| Abort(format!("`{op}` counts must be nonnegative, got {v}")))
}

fn op_err(e: manifold::OpError) -> Abort {
    Abort(e.to_string())
}

fn eval_call(env: &Env, name: &str, args: &[Arg]) -> StepResult<ManifoldClass> {
    match name {
        "cover" => {
            let usage = "(hesse, phi_paper)";
            let [Arg::Name(arr), Arg::Name(phi)] = args else {
                return Err(bad_args(name, usage));
            };
            if arr != "hesse" || phi != "phi_paper" {
                return Err(bad_args(name, usage));
            }
            Ok(cover::hesse_w_block())
        }
        "connected_sum" => {
            let usage = "(A, B)";
            let [Arg::Name(a), Arg::Name(b)] = args else {
                return Err(bad_args(name, usage));
            };
            Ok(manifold::connected_sum(lookup(env, a)?, lookup(env, b)?))
        }
        "blow_up" => {
            let usage = "(A, count, Surface=points, ...)";
            if args.len() < 2 {
                return Err(bad_args(name, usage));
            }
            let Arg::Name(a) = &args[0] else {
                return Err(bad_args(name, usage));
            };
            let count = count_arg(&args[1], name, usage)?;
            let mut marks: Vec<(&str, u64)> = Vec::new();
            for arg in &args[2..] {
                let Arg::KeyVal { key, value } = arg else {
                    return Err(bad_args(name, usage));
                };
                let points = u64::try_from(*value).map_err(|_| {
                    Abort(format!("`{name}` mark counts must be nonnegative, got {value}"))
                })?;
                marks.push((key.as_str(), points));
            }
            manifold::blow_up(lookup(env, a)?, &marks, count).map_err(op_err)
        }
        "blow_up_node" => {
            let usage = "(A.Surface)";
            let [arg] = args else {
                return Err(bad_args(name, usage));
            };
            let (owner, surf) = selector(arg, name, usage)?;
            let (m, _exc) = manifold::blow_up_node(lookup(env, owner)?, surf).map_err(op_err)?;
            Ok(m)
        }
        "resolve" => {
            let usage = "(A.S1, A.S2, points, \"NewId\")";
            let [s1, s2, k, new_id] = args else {
                return Err(bad_args(name, usage));
            };
            let (o1, f1) = selector(s1, name, usage)?;
            let (o2, f2) = selector(s2, name, usage)?;
            if o1 != o2 {
                return Err(Abort(format!(
                    "`{name}` surfaces must share a manifold, got `{o1}` and `{o2}`"
                )));
            }
            let k = count_arg(k, name, usage)?;
            let Arg::Str(new_id) = new_id else {
                return Err(bad_args(name, usage));
            };
            manifold::resolve(lookup(env, o1)?, f1, f2, k, new_id).map_err(op_err)
        }
        "symplectic_sum" => {
            let usage = "(A.Sa, B.Sb) or (A.Sa, B.Sb, minimal)";
            let (pair, usher) = match args {
                [a, b] => ((a, b), false),
                [a, b, Arg::Name(flag)] if flag == "minimal" => ((a, b), true),
                _ => return Err(bad_args(name, usage)),
            };
            let (oa, sa) = selector(pair.0, name, usage)?;
            let (ob, sb) = selector(pair.1, name, usage)?;
            manifold::symplectic_sum(lookup(env, oa)?, sa, lookup(env, ob)?, sb, usher)
                .map_err(op_err)
        }
        "luttinger" => {
            let usage = "(A.Torus, n)";
            let [t, n] = args else {
                return Err(bad_args(name, usage));
            };
            let (owner, torus) = selector(t, name, usage)?;
            let n = int_arg(n, name, usage)?;
            manifold::luttinger(lookup(env, owner)?, torus, n).map_err(op_err)
        }
        "torus_surgery" => {
            let usage = "(A.Torus, m)";
            let [t, m] = args else {
                return Err(bad_args(name, usage));
            };
            let (owner, torus) = selector(t, name, usage)?;
            let m = int_arg(m, name, usage)?;
            manifold::torus_surgery(lookup(env, owner)?, torus, m).map_err(op_err)
        }
        "knot_surgery" => {
            let usage = "(A.Torus, \"knot\")";
            let [t, knot] = args else {
                return Err(bad_args(name, usage));
            };
            let (owner, torus) = selector(t, name, usage)?;
            let Arg::Str(knot) = knot else {
                return Err(bad_args(name, usage));
            };
            manifold::knot_surgery(lookup(env, owner)?, torus, knot).map_err(op_err)
        }
        _ => {
            let mut params = Vec::with_capacity(args.len());
            for arg in args {
                match arg {
                    Arg::Int(v) => params.push(*v),
                    _ => {
                        return Err(Abort(format!(
                            "block `{name}` takes integer parameters only"
                        )))
                    }
                }
            }
            blocks::block(name, &params).map_err(op_err)
        }
    }
}

fn check(env: &mut Env, assertion: &Assertion) -> StepResult<Outcome> {
    match assertion {
        Assertion::Invariants { target, checks } => {
            let m = lookup(env, target)?;
            let mut shown = Vec::new();
            let mut wrong = Vec::new();
            for (key, want) in checks {
                let want_big = BigInt::from(*want);
                let got: Option<BigInt> = match key {
                    InvKey::E => Some(m.e().clone()),
                    InvKey::Sigma => Some(m.sigma().clone()),
                    InvKey::C1Sq => Some(m.c1_sq()),
                    InvKey::Chi => m.chi_h(),
                };
                match got {
                    Some(got) if got == want_big => {
                        shown.push(format!("{}={got}", key.name()));
                    }
                    Some(got) => {
                        wrong.push(format!("{}: expected {want}, got {got}", key.name()));
                    }
                    None => {
                        wrong.push(format!(
                            "{}: expected {want}, undefined (4 does not divide e + sigma)",
                            key.name()
                        ));
                    }
                }
            }
            Ok(verdict(wrong, shown.join(" ")))
        }
        Assertion::Homeo { target, p, q } => {
            let m = lookup(env, target)?;
            match manifold::classify_homeo(m) {
                Err(e) => Ok(Outcome::Fail { detail: e.to_string() }),
                Ok(form) => {
                    let want_p = BigInt::from(*p);
                    let want_q = BigInt::from(*q);
                    if form.p == want_p && form.q == want_q && form.parity == Parity::Odd {
                        Ok(Outcome::Pass { detail: format!("homeomorphic to {form}") })
                    } else {
                        Ok(Outcome::Fail {
                            detail: format!(
                                "expected {want_p} CP2 # {want_q} mCP2, classified as {form}"
                            ),
                        })
                    }
                }
            }
        }
        Assertion::HomeoRefused { target } => {
            let m = lookup(env, target)?;
            match manifold::classify_homeo(m) {
                Err(e) => Ok(Outcome::Pass { detail: e.to_string() }),
                Ok(form) => Ok(Outcome::Fail {
                    detail: format!("classification unexpectedly produced {form}"),
                }),
            }
        }
        Assertion::Bmy { target, status } => {
            let m = lookup(env, target)?;
            match manifold::bmy_check(m) {
                Err(e) => Ok(Outcome::Fail { detail: e.to_string() }),
                Ok(got) if got == status.to_status() => {
                    Ok(Outcome::Pass { detail: format!("c1sq vs 9 chi: {got}") })
                }
                Ok(got) => Ok(Outcome::Fail {
                    detail: format!("expected {}, got {got}", status.name()),
                }),
            }
        }
        Assertion::SimplyConnected { target, tag } => {
            cite(env, target, |m| m.cite_simply_connected(tag), "pi1 trivial", tag)
        }
        Assertion::NonSpin { target, tag } => {
            cite(env, target, |m| m.cite_nonspin(tag), "nonspin", tag)
        }
        Assertion::Pi1Is { target, claim, tag } => {
            let label = format!("pi1 {}", claim.name());
            cite(env, target, |m| m.cite_pi1(claim.to_pi1(), tag), &label, tag)
        }
        Assertion::H1Trivial { reference } => {
            let pres = match group::catalog::resolve_ref(reference) {
                Ok(p) => p,
                Err(e) => return Ok(Outcome::Fail { detail: e.to_string() }),
            };
            let h1 = group::abelianization(&pres);
            if h1.is_trivial() {
                Ok(Outcome::Pass {
                    detail: format!("H1 of {reference} is trivial"),
                })
            } else {
                Ok(Outcome::Fail {
                    detail: format!("H1 of {reference} is {h1}"),
                })
            }
        }
        Assertion::SurfaceShape { owner, surface, checks } => {
            let m = lookup(env, owner)?;
            let Some(s) = m.surface(surface) else {
                return Ok(Outcome::Fail {
                    detail: format!("no surface `{surface}` in `{owner}`"),
                });
            };
            let mut shown = Vec::new();
            let mut wrong = Vec::new();
            for (key, want) in checks {
                let want_big = BigInt::from(*want);
                let got: BigInt = match key {
                    SurfKey::Genus => s.genus().clone(),
                    SurfKey::Square => s.square().clone(),
                    SurfKey::Nodes => BigInt::from(s.nodes()),
                };
                if got == want_big {
                    shown.push(format!("{}={got}", key.name()));
                } else {
                    wrong.push(format!("{}: expected {want}, got {got}", key.name()));
                }
            }
            Ok(verdict(wrong, format!("{surface}: {}", shown.join(" "))))
        }
        Assertion::MinimalYes { target } => {
            let m = lookup(env, target)?;
            if m.minimal() == Minimal::Yes {
                Ok(Outcome::Pass { detail: "minimal".to_string() })
            } else {
                Ok(Outcome::Fail { detail: "minimality not established".to_string() })
            }
        }
    }
}

fn verdict(wrong: Vec<String>, shown: String) -> Outcome {
    if wrong.is_empty() {
        Outcome::Pass { detail: shown }
    } else {
        Outcome::Fail { detail: wrong.join("; ") }
    }
}

fn cite(
    env: &mut Env,
    target: &str,
    apply: impl FnOnce(&mut ManifoldClass) -> Result<(), manifold::OpError>,
    label: &str,
    tag: &str,
) -> StepResult<Outcome> {
    let m = env
        .get_mut(target)
        .ok_or_else(|| Abort(format!("unknown binding `{target}`")))?;
    match apply(m) {
        Ok(()) => {
            m.normalize();
            Ok(Outcome::Pass { detail: format!("{label} (by \"{tag}\")") })
        }
        Err(e) => Ok(Outcome::Fail { detail: e.to_string() }),
    }
}
