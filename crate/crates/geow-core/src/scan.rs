//! Geography scan: enumerates one-sum recipe skeletons hitting a target
//! signature and holomorphic Euler characteristic range.
//!
//! Each skeleton decorates two builtin blocks (node blow-ups, symplectic
//! resolutions, blow-ups) and joins them by a single symplectic sum along
//! surfaces of equal genus and opposite square. Every emitted row is a
//! runnable recipe whose assertions recompute the row's numbers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Signed;

use crate::manifold::{self, ManifoldClass, Parity, StandardForm};
use crate::{blocks, cover};

/// One realization found by [`geography_scan`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanHit {
    pub e: BigInt,
    pub sigma: BigInt,
    pub chi: BigInt,
    pub c1_sq: BigInt,
    /// Odd simply connected model with the same `(e, sigma)`. The skeleton
    /// itself never establishes the fundamental group, so this is the
    /// homeomorphism type only once a recipe discharges that obligation
    /// with an explicit citation.
    pub model: Option<StandardForm>,
    /// Single-line recipe text; parsing and evaluating it reproduces the
    /// row.
    pub recipe: String,
}

/// One decorated half of a sum skeleton.
struct Route {
    /// Builtin block the route starts from; the route is available only
    /// when this name is in the scan inventory.
    base: &'static str,
    /// Genus of the prepared gluing surface.
    genus: u64,
    /// DSL statements preparing the half.
    stmts: &'static str,
    /// Binding and surface id of the prepared gluing surface.
    binding: &'static str,
    surface: &'static str,
    build: fn() -> (ManifoldClass, &'static str),
}

fn block(name: &str, params: &[i64]) -> ManifoldClass {
    blocks::block(name, params).expect("builtin block")
}

fn node_route(base: &'static str) -> (ManifoldClass, &'static str) {
    let m = block(base, &[]);
    let (mn, exc) = manifold::blow_up_node(&m, "E").expect("E carries a node");
    let out = manifold::resolve(&mn, "E", &exc, 2, "F").expect("sphere meets E twice");
    (out, "F")
}

fn left_routes() -> Vec<Route> {
    vec![
        Route {
            base: "Mtilde",
            genus: 5,
            stmts: "let L = Mtilde() let LN = blow_up_node(L.E) \
                    let LR = resolve(LN.E, LN.exc1, 2, \"F\")",
            binding: "LR",
            surface: "F",
            build: || node_route("Mtilde"),
        },
        Route {
            base: "M2",
            genus: 5,
            stmts: "let L = M2() let LN = blow_up_node(L.E) \
                    let LR = resolve(LN.E, LN.exc1, 2, \"F\")",
            binding: "LR",
            surface: "F",
            build: || node_route("M2"),
        },
        Route {
            base: "W",
            genus: 9,
            stmts: "let L = W() let LB = blow_up(L, 1, Sigma9=1)",
            binding: "LB",
            surface: "Sigma9",
            build: || {
                let w = cover::hesse_w_block();
                let out = manifold::blow_up(&w, &[("Sigma9", 1)], 1).expect("Sigma9 exists");
                (out, "Sigma9")
            },
        },
    ]
}

fn right_routes() -> Vec<Route> {
    vec![
        Route {
            base: "X_gg2",
            genus: 5,
            stmts: "let R = X_gg2(2) let RR = resolve(R.S, R.SG1, 1, \"G\")",
            binding: "RR",
            surface: "G",
            build: || {
                let x = block("X_gg2", &[2]);
                (manifold::resolve(&x, "S", "SG1", 1, "G").expect("meet once"), "G")
            },
        },
        Route {
            base: "X_gg1",
            genus: 5,
            stmts: "let R = X_gg1(2) let RR = resolve(R.S, R.SG1, 1, \"G\")",
            binding: "RR",
            surface: "G",
            build: || {
                let x = block("X_gg1", &[2]);
                (manifold::resolve(&x, "S", "SG1", 1, "G").expect("meet once"), "G")
            },
        },
        Route {
            base: "X_gg2",
            genus: 5,
            stmts: "let R = X_gg2(1) let RR = resolve(R.S, R.S1, 1, \"G3\") \
                    let RS = resolve(RR.G3, RR.SG1, 1, \"G\") let RB = blow_up(RS, 1, G=1)",
            binding: "RB",
            surface: "G",
            build: || {
                let x = block("X_gg2", &[1]);
                let a = manifold::resolve(&x, "S", "S1", 1, "G3").expect("meet once");
                let b = manifold::resolve(&a, "G3", "SG1", 1, "G").expect("meet once");
                (manifold::blow_up(&b, &[("G", 1)], 1).expect("G exists"), "G")
            },
        },
        Route {
            base: "X_gg1",
            genus: 5,
            stmts: "let R = X_gg1(1) let RR = resolve(R.S, R.E2, 2, \"G\") \
                    let RB = blow_up(RR, 1, G=1)",
            binding: "RB",
            surface: "G",
            build: || {
                let x = block("X_gg1", &[1]);
                let a = manifold::resolve(&x, "S", "E2", 2, "G").expect("meet twice");
                (manifold::blow_up(&a, &[("G", 1)], 1).expect("G exists"), "G")
            },
        },
        Route {
            base: "X_gg2",
            genus: 9,
            stmts: "let R = X_gg2(6) let RR = resolve(R.S, R.SG1, 1, \"G\") \
                    let RB = blow_up(RR, 2, G=2)",
            binding: "RB",
            surface: "G",
            build: || {
                let x = block("X_gg2", &[6]);
                let a = manifold::resolve(&x, "S", "SG1", 1, "G").expect("meet once");
                (manifold::blow_up(&a, &[("G", 2)], 2).expect("G exists"), "G")
            },
        },
        Route {
            base: "X_gg2",
            genus: 9,
            stmts: "let R = X_gg2(7) let RR = resolve(R.S, R.S1, 1, \"G\") \
                    let RB = blow_up(RR, 1, G=1)",
            binding: "RB",
            surface: "G",
            build: || {
                let x = block("X_gg2", &[7]);
                let a = manifold::resolve(&x, "S", "S1", 1, "G").expect("meet once");
                (manifold::blow_up(&a, &[("G", 1)], 1).expect("G exists"), "G")
            },
        },
    ]
}

/// Odd simply connected standard form sharing `(e, sigma)`, assuming
/// `b1 = 0` so `b2 = e - 2`.
fn odd_model(e: &BigInt, sigma: &BigInt) -> Option<StandardForm> {
    let b2 = e - BigInt::from(2);
    if (&b2 + sigma).is_odd() {
        return None;
    }
    let two = BigInt::from(2);
    let p = (&b2 + sigma).div_floor(&two);
    let q = (&b2 - sigma).div_floor(&two);
    if p.is_negative() || q.is_negative() {
        return None;
    }
    Some(StandardForm { p, q, parity: Parity::Odd })
}

/// Enumerates sum skeletons over `inventory` whose signature equals
/// `sigma` and whose holomorphic Euler characteristic lies in
/// `[chi_lo, chi_hi]`. Rows are sorted by recipe text.
pub fn geography_scan(
    inventory: &[&str],
    sigma: &BigInt,
    chi_lo: &BigInt,
    chi_hi: &BigInt,
) -> Vec<ScanHit> {
    let mut hits = Vec::new();
    for l in &left_routes() {
        if !inventory.contains(&l.base) {
            continue;
        }
        for r in &right_routes() {
            if !inventory.contains(&r.base) || l.genus != r.genus {
                continue;
            }
            let (left, ls) = (l.build)();
            let (right, rs) = (r.build)();
            let sum = manifold::symplectic_sum(&left, ls, &right, rs, false)
                .expect("routes prepare matching gluing surfaces");
            if sum.sigma() != sigma {
                continue;
            }
            let Some(chi) = sum.chi_h() else {
                continue;
            };
            if &chi < chi_lo || &chi > chi_hi {
                continue;
            }
            let e = sum.e().clone();
            let c1_sq = sum.c1_sq();
            let recipe = format!(
                "{} {} let M = symplectic_sum({}.{}, {}.{}) \
                 assert invariants(M, e={e}, sigma={sigma}, chi={chi}, c1sq={c1_sq})",
                l.stmts, r.stmts, l.binding, l.surface, r.binding, r.surface
            );
            hits.push(ScanHit {
                e,
                sigma: sigma.clone(),
                chi,
                c1_sq,
                model: odd_model(sum.e(), sigma),
                recipe,
            });
        }
    }
    hits.sort_by(|a, b| a.recipe.cmp(&b.recipe));
    hits.dedup_by(|a, b| a.recipe == b.recipe);
    hits
}

/// Block names the command line scan draws from by default.
pub fn default_inventory() -> Vec<&'static str> {
    vec!["Mtilde", "M2", "W", "X_gg2", "X_gg1"]
}
