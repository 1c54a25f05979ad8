//! Acceptance suite: one test per advertised guarantee, each printing a
//! single pass/fail line. Run with `--nocapture` to see the lines on
//! success; they are always shown for failures.

use std::panic::{catch_unwind, resume_unwind, AssertUnwindSafe};
use std::process::Command;
use std::time::Instant;

use geow_core::cover::{
    canonical_and_chern, hesse_w_block, lift_curve, phi_paper, sigma9_package, Arrangement,
    CurveRef, DivisorModel,
};
use geow_core::group::{
    abelianization, catalog, commutator_pattern_check, coset_enumeration, is_normal,
    quotient_identify, smith_normal_form, DEFAULT_MAX_COSETS,
};
use geow_core::manifold::{
    blow_up, blow_up_node, bmy_check, classify_homeo, knot_surgery, luttinger, resolve,
    symplectic_sum, torus_surgery, BmyStatus, ManifoldClass, Pi1, Spin, Surface, SurfaceKind,
};
use geow_core::recipe::{evaluate, parse, Assertion, InvKey, Pi1Word, Recipe, StmtKind};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

fn bi(x: i64) -> BigInt {
    BigInt::from(x)
}

fn criterion(label: &str, body: impl FnOnce()) {
    let outcome = catch_unwind(AssertUnwindSafe(body));
    println!("{label}: {}", if outcome.is_ok() { "pass" } else { "FAIL" });
    if let Err(panic) = outcome {
        resume_unwind(panic);
    }
}

/// Splitmix-style deterministic generator so the random suites are
/// reproducible.
struct Rng(u64);

impl Rng {
    fn next(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    /// Uniform in `lo..=hi`.
    fn range(&mut self, lo: i64, hi: i64) -> i64 {
        lo + (self.next() % (hi - lo + 1) as u64) as i64
    }
}

#[test]
fn criterion_1_cover_subcommand_reports_the_exact_numbers() {
    criterion("criterion 1 (cover hesse phi_paper numbers)", || {
        let out = Command::new(env!("CARGO_BIN_EXE_geow"))
            .args(["cover", "hesse", "phi_paper"])
            .output()
            .expect("run geow");
        assert!(out.status.success(), "exit: {:?}", out.status);
        let stdout = String::from_utf8(out.stdout).unwrap();
        let lines: Vec<&str> = stdout.lines().map(str::trim).collect();
        for want in ["K^2 = 144", "e = 48", "chi = 16", "bmy = on_line"] {
            assert!(lines.contains(&want), "missing `{want}` in:\n{stdout}");
        }
    });
}

#[test]
fn criterion_2_curve_lifts_and_the_resolved_inventory() {
    criterion("criterion 2 (curve lifts and resolved inventory)", || {
        let d = DivisorModel::new(Arrangement::hesse());
        let c = phi_paper();
        for j in 1..=12 {
            let l = lift_curve(&d, &c, &CurveRef::Line(format!("l{j}"))).unwrap();
            assert_eq!((l.genus, l.self_int), (bi(3), bi(-2)), "l{j}");
        }
        for i in 1..=9 {
            let l = lift_curve(&d, &c, &CurveRef::Exceptional(format!("p{i}"))).unwrap();
            assert_eq!((l.genus, l.self_int), (bi(2), bi(-1)), "p{i}");
        }
        let pencil = lift_curve(&d, &c, &CurveRef::GenericThrough("p1".into())).unwrap();
        assert_eq!(pencil.genus, bi(7));

        let resolved = sigma9_package().resolved;
        let sigma9 = resolved.surface("Sigma9").unwrap();
        assert_eq!((sigma9.genus(), sigma9.square()), (&bi(9), &bi(1)));
        let blown = blow_up(&resolved, &[("Sigma9", 1)], 1).unwrap();
        let sigma9 = blown.surface("Sigma9").unwrap();
        assert_eq!((sigma9.genus(), sigma9.square()), (&bi(9), &bi(0)));

        let w = hesse_w_block();
        assert_eq!(w.surface("Sigma9").unwrap().square(), &bi(1));
    });
}

struct CorpusCase {
    name: &'static str,
    text: &'static str,
    e: i64,
    sigma: i64,
    chi: i64,
    c1_sq: i64,
    model: Option<(i64, i64)>,
}

fn corpus_cases() -> Vec<CorpusCase> {
    let case = |name, text, e, sigma, chi, c1_sq, model| CorpusCase {
        name,
        text,
        e,
        sigma,
        chi,
        c1_sq,
        model,
    };
    vec![
        case("Y_sig12", include_str!("../corpus/Y_sig12.gw"), 112, 12, 31, 260, Some((61, 49))),
        case("V_sig11", include_str!("../corpus/V_sig11.gw"), 109, 11, 30, 251, Some((59, 48))),
        case("L_sig11", include_str!("../corpus/L_sig11.gw"), 117, 11, 32, 267, Some((63, 52))),
        case("M_1_10", include_str!("../corpus/M_1_10.gw"), 39, 1, 10, 81, Some((19, 18))),
        case("M_0_9", include_str!("../corpus/M_0_9.gw"), 36, 0, 9, 72, Some((17, 17))),
        case("M_2_10", include_str!("../corpus/M_2_10.gw"), 38, 2, 10, 82, Some((19, 17))),
        case("M_1_9", include_str!("../corpus/M_1_9.gw"), 35, 1, 9, 73, Some((17, 16))),
        case("remark_z2", include_str!("../corpus/remark_z2.gw"), 32, 0, 8, 64, None),
    ]
}

fn asserted_invariants(recipe: &Recipe, key: InvKey) -> Vec<i64> {
    let mut out = Vec::new();
    for stmt in &recipe.statements {
        if let StmtKind::Assert(Assertion::Invariants { checks, .. }) = &stmt.kind {
            out.extend(checks.iter().filter(|(k, _)| *k == key).map(|(_, v)| *v));
        }
    }
    out
}

#[test]
fn criterion_3_corpus_reproduces_the_stated_invariants() {
    criterion("criterion 3 (corpus invariants and homeomorphism types)", || {
        for case in corpus_cases() {
            let recipe = parse(case.text).unwrap();
            let report = evaluate(case.name, &recipe);
            assert!(report.passed(), "{}:\n{}", case.name, report.render_text());

            assert!(
                asserted_invariants(&recipe, InvKey::E).contains(&case.e),
                "{}: e={} not asserted",
                case.name,
                case.e
            );
            assert!(
                asserted_invariants(&recipe, InvKey::Sigma).contains(&case.sigma),
                "{}: sigma={} not asserted",
                case.name,
                case.sigma
            );
            assert!(
                asserted_invariants(&recipe, InvKey::Chi).contains(&case.chi),
                "{}: chi={} not asserted",
                case.name,
                case.chi
            );
            assert!(
                asserted_invariants(&recipe, InvKey::C1Sq).contains(&case.c1_sq),
                "{}: c1sq={} not asserted",
                case.name,
                case.c1_sq
            );

            let homeos: Vec<(i64, i64)> = recipe
                .statements
                .iter()
                .filter_map(|s| match &s.kind {
                    StmtKind::Assert(Assertion::Homeo { p, q, .. }) => Some((*p, *q)),
                    _ => None,
                })
                .collect();
            match case.model {
                Some(pq) => assert!(homeos.contains(&pq), "{}: missing homeo {pq:?}", case.name),
                None => {
                    let refused = recipe.statements.iter().any(|s| {
                        matches!(s.kind, StmtKind::Assert(Assertion::HomeoRefused { .. }))
                    });
                    let z2 = recipe.statements.iter().any(|s| {
                        matches!(
                            &s.kind,
                            StmtKind::Assert(Assertion::Pi1Is { claim: Pi1Word::Z2, .. })
                        )
                    });
                    assert!(refused && z2, "{}: missing refusal or z2 citation", case.name);
                }
            }
        }
    });
}

#[test]
fn criterion_4_block_library_families() {
    criterion("criterion 4 (block library families)", || {
        for g in 1..=20i64 {
            let x2 = geow_core::blocks::block("X_gg2", &[g]).unwrap();
            assert_eq!((x2.e(), x2.sigma()), (&bi(4 * g + 2), &bi(-2)), "X_gg2({g})");
            let x1 = geow_core::blocks::block("X_gg1", &[g]).unwrap();
            assert_eq!((x1.e(), x1.sigma()), (&bi(4 * g + 1), &bi(-1)), "X_gg1({g})");
        }
        for n in 1..=10i64 {
            let m = geow_core::blocks::block("M_n", &[n]).unwrap();
            assert_eq!(bmy_check(&m).unwrap(), BmyStatus::OnLine, "M_n({n})");
        }
        let mt = geow_core::blocks::block("Mtilde", &[]).unwrap();
        assert_eq!((mt.e(), mt.sigma(), mt.c1_sq()), (&bi(12), &bi(4), bi(36)));
        for p in 3..=10i64 {
            let h = geow_core::blocks::block("FPP_H", &[p]).unwrap();
            let genus = h.surface("H").unwrap().genus();
            assert_eq!(genus, &bi(1 + p * (p + 3) / 2), "FPP_H({p})");
        }
        assert!(geow_core::blocks::block("EnK", &[9, 10]).is_ok());
        assert!(geow_core::blocks::block("EnK", &[16, 15]).is_ok());
        for n in [2i64, 3, 5, 8, 10, 12, 15] {
            assert!(geow_core::blocks::block("EnK", &[n, 10]).is_err(), "EnK({n})");
        }
        assert!(geow_core::blocks::block("EnK", &[9, 11]).is_err());
    });
}

#[test]
fn criterion_5_group_kernel() {
    criterion("criterion 5 (group kernel)", || {
        for n in 2..=4 {
            let p = catalog::yn_presentation(n, 1).unwrap();
            assert!(abelianization(&p).is_trivial(), "n={n}");
        }
        let surf = abelianization(&catalog::surface_group(4));
        assert_eq!(surf.free_rank(), 8);
        assert_eq!(surf.torsion().count(), 0);

        let rel = catalog::ball_quotient_relation();
        assert!(commutator_pattern_check(&rel, 4, false));
        assert!(rel.exponent_sums().is_empty());

        let expected = [
            (catalog::cyclic(3), 3, "Z3"),
            (catalog::klein_four(), 4, "Z2xZ2"),
            (catalog::symmetric_3(), 6, "S3"),
            (catalog::quaternion_8(), 8, "Q8"),
        ];
        for (p, index, tag) in expected {
            let t = coset_enumeration(&p, &[], DEFAULT_MAX_COSETS).unwrap();
            assert_eq!(t.index(), Some(index), "{tag}");
            assert!(is_normal(&t).unwrap(), "{tag}");
            assert_eq!(quotient_identify(&t).unwrap(), tag);
        }
        // Same order, different element orders: the cyclic group of order 4
        // is told apart from the Klein group.
        let z4 = coset_enumeration(&catalog::cyclic(4), &[], DEFAULT_MAX_COSETS).unwrap();
        assert_eq!(quotient_identify(&z4).unwrap(), "Z4");

        let mut rng = Rng(5);
        for _ in 0..200 {
            let rows = rng.range(1, 6) as usize;
            let cols = rng.range(1, 6) as usize;
            let m: Vec<Vec<BigInt>> = (0..rows)
                .map(|_| (0..cols).map(|_| bi(rng.range(-9, 9))).collect())
                .collect();
            let diag: Vec<BigInt> = smith_normal_form(&m).iter().map(|d| d.abs()).collect();
            assert_eq!(diag, invariant_factors_by_minors(&m), "matrix {m:?}");
        }
    });
}

fn det(m: &[Vec<BigInt>]) -> BigInt {
    match m.len() {
        0 => BigInt::one(),
        1 => m[0][0].clone(),
        n => {
            let mut acc = BigInt::zero();
            for j in 0..n {
                if m[0][j].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<BigInt>> = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|&(c, _)| c != j)
                            .map(|(_, v)| v.clone())
                            .collect()
                    })
                    .collect();
                let term = &m[0][j] * det(&minor);
                if j % 2 == 0 {
                    acc += term;
                } else {
                    acc -= term;
                }
            }
            acc
        }
    }
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    if k > n {
        return Vec::new();
    }
    let mut out: Vec<Vec<usize>> = subsets(n - 1, k - 1)
        .into_iter()
        .map(|mut s| {
            s.push(n - 1);
            s
        })
        .collect();
    out.extend(subsets(n - 1, k));
    out
}

fn invariant_factors_by_minors(m: &[Vec<BigInt>]) -> Vec<BigInt> {
    use num_integer::Integer;
    let (rows, cols) = (m.len(), m.first().map_or(0, Vec::len));
    let n = rows.min(cols);
    let mut out = Vec::with_capacity(n);
    let mut prev = BigInt::one();
    for k in 1..=n {
        let mut d = BigInt::zero();
        for ri in subsets(rows, k) {
            for ci in subsets(cols, k) {
                let sub: Vec<Vec<BigInt>> = ri
                    .iter()
                    .map(|&r| ci.iter().map(|&c| m[r][c].clone()).collect())
                    .collect();
                d = d.gcd(&det(&sub));
            }
        }
        if d.is_zero() {
            break;
        }
        out.push(&d / &prev);
        prev = d;
    }
    out.resize(n, BigInt::zero());
    out
}

fn random_host(rng: &mut Rng) -> ManifoldClass {
    let mut a = ManifoldClass::new(rng.range(-50, 50), rng.range(-40, 40))
        .with_b1(rng.range(0, 3))
        .with_symplectic(true);
    a.add_surface(
        Surface::new("T", 1, 0, SurfaceKind::Lagrangian)
            .with_complement_simply_connected(rng.range(0, 1) == 1)
            .with_symplectic_embeddable(true),
    )
    .unwrap();
    a.add_surface(Surface::new("S", 2, -1, SurfaceKind::Symplectic)).unwrap();
    a.record_intersection("T", "S", rng.range(0, 2) as u64).unwrap();
    a
}

#[test]
fn criterion_6_property_suites() {
    criterion("criterion 6 (operation property suites)", || {
        let mut rng = Rng(11);
        for _ in 0..1000 {
            let a = random_host(&mut rng);
            let mut m = rng.range(1, 9);
            if rng.range(0, 1) == 1 {
                m = -m;
            }
            for out in [
                luttinger(&a, "T", m).unwrap(),
                torus_surgery(&a, "T", m).unwrap(),
                knot_surgery(&a, "T", "k").unwrap(),
            ] {
                assert_eq!(out.e(), a.e());
                assert_eq!(out.sigma(), a.sigma());
            }
        }

        for _ in 0..1000 {
            let (chi_a, chi_b) = (rng.range(-5, 20), rng.range(-5, 20));
            let g = rng.range(0, 6);
            let s = rng.range(-5, 5);
            let sigma_a = rng.range(-20, 20);
            let sigma_b = rng.range(-20, 20);
            let mut a = ManifoldClass::new(4 * chi_a - sigma_a, sigma_a).with_symplectic(true);
            a.add_surface(Surface::new("F", g, s, SurfaceKind::Symplectic)).unwrap();
            let mut b = ManifoldClass::new(4 * chi_b - sigma_b, sigma_b).with_symplectic(true);
            b.add_surface(Surface::new("F", g, -s, SurfaceKind::Symplectic)).unwrap();
            let out = symplectic_sum(&a, "F", &b, "F", false).unwrap();
            let e_formula = (a.e() + b.e() + bi(4 * g) - bi(4) + out.sigma()) / bi(4);
            assert_eq!(out.chi_h().unwrap(), e_formula);
            assert_eq!(out.chi_h().unwrap(), bi(chi_a + chi_b + g - 1));
        }

        for _ in 0..1000 {
            let (p, q) = (rng.range(0, 30), rng.range(0, 30));
            if p + q == 0 {
                continue;
            }
            let a = ManifoldClass::new(p + q + 2, p - q)
                .with_pi1(Pi1::Trivial)
                .with_spin(Spin::NonSpin);
            let form = classify_homeo(&a).unwrap();
            assert_eq!((form.p, form.q), (bi(p), bi(q)));
            let form = classify_homeo(&blow_up(&a, &[], 1).unwrap()).unwrap();
            assert_eq!((form.p, form.q), (bi(p), bi(q + 1)));
        }

        let mut host = ManifoldClass::new(12, 4).with_symplectic(true);
        host.add_surface(Surface::new("E", 4, -1, SurfaceKind::Symplectic).with_nodes(1))
            .unwrap();
        let (blown, exc) = blow_up_node(&host, "E").unwrap();
        let traded = resolve(&blown, "E", &exc, 2, "F").unwrap();
        let f = traded.surface("F").unwrap();
        assert_eq!((f.genus(), f.square(), f.nodes()), (&bi(5), &bi(-2), 0));

        let inv =
            canonical_and_chern(&DivisorModel::new(Arrangement::hesse()), &phi_paper()).unwrap();
        assert_eq!(inv.e, bi(48));
        assert_eq!(inv.strata.grouped_total, bi(48));
        let s = &inv.strata;
        assert_eq!(
            bi(9 * s.euler_open_surface) + bi(3 * s.euler_open_components) + bi(s.node_count as i64),
            bi(48)
        );
    });
}

#[test]
fn criterion_7_corpus_check_is_fast_and_clean() {
    criterion("criterion 7 (check --corpus under 10 seconds, exit 0)", || {
        let start = Instant::now();
        let out = Command::new(env!("CARGO_BIN_EXE_geow"))
            .args(["check", "--corpus"])
            .output()
            .expect("run geow");
        let elapsed = start.elapsed();
        assert!(out.status.success(), "exit: {:?}\n{}", out.status, String::from_utf8_lossy(&out.stdout));
        assert!(elapsed.as_secs() < 10, "took {elapsed:?}");
    });
}
