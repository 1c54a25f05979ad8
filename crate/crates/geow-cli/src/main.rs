//! `geow`: command line front end for the construction calculus.
//!
//! Exit codes: 0 success, 1 failed assertions or invalid mathematical
//! input, 2 usage errors (unknown flags, unreadable files, syntax errors).

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use geow_core::cover::{
    canonical_and_chern, phi_paper, validate_cover, Arrangement, CoverData, CoverInvariants,
    CoverReport, DivisorModel,
};
use geow_core::group::{
    abelianization, catalog, coset_enumeration, is_normal, parse_words, quotient_identify,
    CosetTable, GroupPresentation, Word, DEFAULT_MAX_COSETS,
};
use geow_core::recipe::{self, Outcome, Report};
use geow_core::scan::{default_inventory, geography_scan, ScanHit};
use geow_core::{blocks, BmyStatus};
use num_bigint::BigInt;

/// Builtin recipes, ordered by file name.
const CORPUS: &[(&str, &str)] = &[
    ("L_sig11", include_str!("../corpus/L_sig11.gw")),
    ("M_0_9", include_str!("../corpus/M_0_9.gw")),
    ("M_1_10", include_str!("../corpus/M_1_10.gw")),
    ("M_1_9", include_str!("../corpus/M_1_9.gw")),
    ("M_2_10", include_str!("../corpus/M_2_10.gw")),
    ("V_sig11", include_str!("../corpus/V_sig11.gw")),
    ("Y_sig12", include_str!("../corpus/Y_sig12.gw")),
    ("hesse_cover", include_str!("../corpus/hesse_cover.gw")),
    ("remark_z2", include_str!("../corpus/remark_z2.gw")),
];

/// Builtin presentations usable wherever a `.pres` file is expected.
const PRESENTATIONS: &[(&str, &str)] = &[
    ("yn_h1", include_str!("../corpus/yn_h1.pres")),
    ("yn1m_h1", include_str!("../corpus/yn1m_h1.pres")),
];

#[derive(Parser)]
#[command(name = "geow", version, about = "Construction calculus for closed 4-manifolds")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a recipe file and report every statement.
    Eval {
        /// Path to a `.gw` recipe.
        file: PathBuf,
    },
    /// Run builtin self checks.
    Check {
        /// Evaluate every builtin corpus recipe.
        #[arg(long, required = true)]
        corpus: bool,
    },
    /// Compute branched cover invariants of a line arrangement.
    Cover {
        /// Arrangement: `hesse` or a path to an arrangement file.
        arrangement: String,
        /// Branch data: `phi_paper` or a path to a cover data file.
        phi: String,
    },
    /// Finitely presented group computations.
    Group {
        #[command(subcommand)]
        command: GroupCommand,
    },
    /// Enumerate sum skeletons hitting a signature and a chi window.
    Scan {
        /// Target signature.
        #[arg(long)]
        sigma: i64,
        /// Inclusive chi range `A..B` (or a single value).
        #[arg(long)]
        chi: String,
    },
    /// Print the block registry manifest.
    Blocks,
}

#[derive(Subcommand)]
enum GroupCommand {
    /// Abelianization of a presentation.
    Abelianize {
        /// Path to a presentation file, a builtin name, or a reference
        /// like `yn(3, 1)`.
        pres: String,
    },
    /// Coset enumeration of a finitely generated subgroup.
    Coset {
        /// Path to a presentation file, a builtin name, or a reference.
        pres: String,
        /// Subgroup generators: a path to a words file (one per line) or
        /// an inline comma-separated list.
        subgens: String,
        /// Coset table bound; overrides the GEOW_MAX_COSETS variable.
        #[arg(long)]
        max_cosets: Option<usize>,
    },
}

fn main() -> ExitCode {
    // Die quietly when a downstream pipe closes instead of panicking.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Eval { ref file } => cmd_eval(file, cli.format),
        Command::Check { .. } => cmd_check_corpus(cli.format),
        Command::Cover { ref arrangement, ref phi } => cmd_cover(arrangement, phi, cli.format),
        Command::Group { ref command } => match command {
            GroupCommand::Abelianize { pres } => cmd_abelianize(pres, cli.format),
            GroupCommand::Coset { pres, subgens, max_cosets } => {
                cmd_coset(pres, subgens, *max_cosets, cli.format)
            }
        },
        Command::Scan { sigma, ref chi } => cmd_scan(sigma, chi, cli.format),
        Command::Blocks => cmd_blocks(cli.format),
    };
    ExitCode::from(code)
}

fn usage_error(msg: impl std::fmt::Display) -> u8 {
    eprintln!("geow: {msg}");
    2
}

fn print_json(value: &Value) {
    println!("{}", serde_json::to_string_pretty(value).expect("serializable value"));
}

fn big(v: &BigInt) -> Value {
    Value::String(v.to_string())
}

// --- eval -----------------------------------------------------------------

fn report_json(r: &Report) -> Value {
    let statements: Vec<Value> = r
        .statements
        .iter()
        .map(|s| {
            let (outcome, detail) = match &s.outcome {
                Outcome::Bound { name, summary } => {
                    ("bound", json!({ "name": name, "summary": summary }))
                }
                Outcome::Pass { detail } => ("pass", json!(detail)),
                Outcome::Fail { detail } => ("fail", json!(detail)),
            };
            json!({ "line": s.line, "text": s.text, "outcome": outcome, "detail": detail })
        })
        .collect();
    json!({
        "schema": "geow/1",
        "recipe": r.name,
        "passed": r.passed(),
        "assertions_passed": r.assertions_passed(),
        "assertions_total": r.assertions_total(),
        "error": r.error,
        "statements": statements,
    })
}

fn cmd_eval(path: &Path, format: Format) -> u8 {
    let source = match fs::read_to_string(path) {
        Ok(s) => s,
        Err(e) => return usage_error(format_args!("cannot read {}: {e}", path.display())),
    };
    let name = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "recipe".to_string());
    let parsed = match recipe::parse(&source) {
        Ok(r) => r,
        Err(e) => return usage_error(format_args!("{}: {e}", path.display())),
    };
    let report = recipe::evaluate(&name, &parsed);
    match format {
        Format::Text => print!("{}", report.render_text()),
        Format::Json => print_json(&report_json(&report)),
    }
    u8::from(!report.passed())
}

// --- check ----------------------------------------------------------------

fn cmd_check_corpus(format: Format) -> u8 {
    let mut reports = Vec::new();
    for (name, source) in CORPUS {
        let parsed = recipe::parse(source).expect("builtin corpus recipes parse");
        reports.push(recipe::evaluate(name, &parsed));
    }
    let passed = reports.iter().filter(|r| r.passed()).count();
    match format {
        Format::Text => {
            for r in &reports {
                let verdict = if r.passed() { "pass" } else { "FAIL" };
                println!(
                    "{}: {verdict} ({}/{} assertions)",
                    r.name,
                    r.assertions_passed(),
                    r.assertions_total()
                );
                if !r.passed() {
                    print!("{}", r.render_text());
                }
            }
            println!("corpus: {passed}/{} recipes pass", reports.len());
        }
        Format::Json => {
            let rows: Vec<Value> = reports.iter().map(report_json).collect();
            print_json(&json!({
                "schema": "geow/1",
                "passed": passed == reports.len(),
                "recipes": rows,
            }));
        }
    }
    u8::from(passed != reports.len())
}

// --- cover ----------------------------------------------------------------

fn load_arrangement(arg: &str) -> Result<Arrangement, String> {
    if arg == "hesse" {
        return Ok(Arrangement::hesse());
    }
    let text = fs::read_to_string(arg).map_err(|e| format!("cannot read {arg}: {e}"))?;
    Arrangement::parse(&text).map_err(|e| format!("{arg}: {e}"))
}

fn load_cover_data(arg: &str) -> Result<CoverData, String> {
    if arg == "phi_paper" {
        return Ok(phi_paper());
    }
    let text = fs::read_to_string(arg).map_err(|e| format!("cannot read {arg}: {e}"))?;
    CoverData::parse(&text).map_err(|e| format!("{arg}: {e}"))
}

fn bmy_name(status: BmyStatus) -> &'static str {
    match status {
        BmyStatus::OnLine => "on_line",
        BmyStatus::Below => "below",
        BmyStatus::Violated => "violated",
    }
}

fn cover_json(inv: &CoverInvariants, report: &CoverReport) -> Value {
    json!({
        "schema": "geow/1",
        "k_sq": big(&inv.k_sq),
        "e": big(&inv.e),
        "sigma": big(&inv.sigma),
        "chi": big(&inv.chi_h),
        "group_order": big(&inv.group_order),
        "bmy": bmy_name(inv.bmy),
        "warnings": report.warnings,
    })
}

fn cmd_cover(arrangement: &str, phi: &str, format: Format) -> u8 {
    let arr = match load_arrangement(arrangement) {
        Ok(a) => a,
        Err(e) => return usage_error(e),
    };
    let data = match load_cover_data(phi) {
        Ok(d) => d,
        Err(e) => return usage_error(e),
    };
    let model = DivisorModel::new(arr);
    let report = match validate_cover(&model, &data) {
        Ok(r) => r,
        Err(e) => return usage_error(e),
    };
    if !report.is_valid() {
        for f in &report.failures {
            eprintln!("invalid cover: {f}");
        }
        return 1;
    }
    let inv = match canonical_and_chern(&model, &data) {
        Ok(i) => i,
        Err(e) => return usage_error(e),
    };
    match format {
        Format::Text => {
            println!(
                "cover of the blown-up plane: {} components, {} nodes, group order {}",
                model.component_count(),
                model.node_count(),
                inv.group_order
            );
            for w in &report.warnings {
                println!("warning: {w}");
            }
            println!("K^2 = {}", inv.k_sq);
            println!("e = {}", inv.e);
            println!("sigma = {}", inv.sigma);
            println!("chi = {}", inv.chi_h);
            println!("bmy = {}", bmy_name(inv.bmy));
        }
        Format::Json => print_json(&cover_json(&inv, &report)),
    }
    0
}

// --- group ----------------------------------------------------------------

/// Resolves a presentation argument: an existing file, a builtin name, or
/// a catalog reference like `yn(3, 1)`.
fn load_presentation(arg: &str) -> Result<GroupPresentation, String> {
    if Path::new(arg).exists() {
        let text = fs::read_to_string(arg).map_err(|e| format!("cannot read {arg}: {e}"))?;
        return GroupPresentation::parse(&text).map_err(|e| format!("{arg}: {e}"));
    }
    if let Some((_, text)) = PRESENTATIONS.iter().find(|(name, _)| *name == arg) {
        return GroupPresentation::parse(text).map_err(|e| format!("{arg}: {e}"));
    }
    catalog::resolve_ref(arg).map_err(|e| e.to_string())
}

fn load_words(arg: &str) -> Result<Vec<Word>, String> {
    if Path::new(arg).exists() {
        let text = fs::read_to_string(arg).map_err(|e| format!("cannot read {arg}: {e}"))?;
        return parse_words(&text).map_err(|e| format!("{arg}: {e}"));
    }
    if arg.trim().is_empty() {
        return Ok(Vec::new());
    }
    arg.split(',')
        .map(|w| Word::parse(w.trim()).map_err(|e| e.to_string()))
        .collect()
}

fn cmd_abelianize(pres: &str, format: Format) -> u8 {
    let p = match load_presentation(pres) {
        Ok(p) => p,
        Err(e) => return usage_error(e),
    };
    let h1 = abelianization(&p);
    match format {
        Format::Text => {
            println!("generators: {}", p.generators().len());
            println!("relators: {}", p.relators().len());
            println!("abelianization: {h1}");
        }
        Format::Json => {
            let factors: Vec<Value> = h1.factors.iter().map(big).collect();
            print_json(&json!({
                "schema": "geow/1",
                "generators": p.generators().len(),
                "relators": p.relators().len(),
                "abelianization": h1.to_string(),
                "factors": factors,
            }));
        }
    }
    0
}

fn coset_bound(flag: Option<usize>) -> Result<usize, String> {
    if let Some(n) = flag {
        return Ok(n);
    }
    match std::env::var("GEOW_MAX_COSETS") {
        Ok(v) => v
            .parse::<usize>()
            .map_err(|_| format!("GEOW_MAX_COSETS must be a positive integer, got `{v}`")),
        Err(_) => Ok(DEFAULT_MAX_COSETS),
    }
}

fn coset_json(table: &CosetTable, normal: Option<bool>, quotient: &Option<String>) -> Value {
    json!({
        "schema": "geow/1",
        "complete": table.is_complete(),
        "index": table.index(),
        "normal": normal,
        "quotient": quotient,
    })
}

fn cmd_coset(pres: &str, subgens: &str, max_cosets: Option<usize>, format: Format) -> u8 {
    let p = match load_presentation(pres) {
        Ok(p) => p,
        Err(e) => return usage_error(e),
    };
    let words = match load_words(subgens) {
        Ok(w) => w,
        Err(e) => return usage_error(e),
    };
    let bound = match coset_bound(max_cosets) {
        Ok(b) => b,
        Err(e) => return usage_error(e),
    };
    let table = match coset_enumeration(&p, &words, bound) {
        Ok(t) => t,
        Err(e) => return usage_error(e),
    };
    let normal = is_normal(&table).ok();
    let quotient = if normal == Some(true) {
        quotient_identify(&table).ok()
    } else {
        None
    };
    match format {
        Format::Text => match table.index() {
            Some(index) => {
                println!("index: {index}");
                match normal {
                    Some(true) => {
                        println!("normal: yes");
                        if let Some(q) = &quotient {
                            println!("quotient: {q}");
                        }
                    }
                    Some(false) => println!("normal: no"),
                    None => {}
                }
            }
            None => println!("overflowed: no table within {bound} cosets"),
        },
        Format::Json => print_json(&coset_json(&table, normal, &quotient)),
    }
    u8::from(!table.is_complete())
}

// --- scan -----------------------------------------------------------------

fn parse_chi_range(arg: &str) -> Result<(i64, i64), String> {
    let bad = || format!("chi range must be `A..B` or a single integer, got `{arg}`");
    if let Some((lo, hi)) = arg.split_once("..") {
        let lo: i64 = lo.trim().parse().map_err(|_| bad())?;
        let hi: i64 = hi.trim().parse().map_err(|_| bad())?;
        return Ok((lo, hi));
    }
    let v: i64 = arg.trim().parse().map_err(|_| bad())?;
    Ok((v, v))
}

fn scan_hit_json(h: &ScanHit) -> Value {
    let model = h.model.as_ref().map(|m| json!({ "p": big(&m.p), "q": big(&m.q) }));
    json!({
        "e": big(&h.e),
        "sigma": big(&h.sigma),
        "chi": big(&h.chi),
        "c1sq": big(&h.c1_sq),
        "model": model,
        "recipe": h.recipe,
    })
}

fn cmd_scan(sigma: i64, chi: &str, format: Format) -> u8 {
    let (lo, hi) = match parse_chi_range(chi) {
        Ok(r) => r,
        Err(e) => return usage_error(e),
    };
    let hits = geography_scan(
        &default_inventory(),
        &BigInt::from(sigma),
        &BigInt::from(lo),
        &BigInt::from(hi),
    );
    match format {
        Format::Text => {
            println!("scan sigma={sigma} chi={lo}..{hi}: {} realizations", hits.len());
            for h in &hits {
                let model = h
                    .model
                    .as_ref()
                    .map_or("-".to_string(), |m| format!("{} CP2 # {} mCP2", m.p, m.q));
                println!("e={} sigma={} chi={} c1sq={} model: {model}", h.e, h.sigma, h.chi, h.c1_sq);
                println!("  recipe: {}", h.recipe);
            }
        }
        Format::Json => {
            let rows: Vec<Value> = hits.iter().map(scan_hit_json).collect();
            print_json(&json!({
                "schema": "geow/1",
                "sigma": sigma.to_string(),
                "chi_lo": lo.to_string(),
                "chi_hi": hi.to_string(),
                "hits": rows,
            }));
        }
    }
    0
}

// --- blocks ---------------------------------------------------------------

fn cmd_blocks(format: Format) -> u8 {
    match format {
        Format::Text => print!("{}", blocks::manifest()),
        Format::Json => {
            let rows: Vec<Value> = blocks::REGISTRY
                .iter()
                .map(|b| json!({ "name": b.name, "params": b.params, "summary": b.summary }))
                .collect();
            print_json(&json!({
                "schema": "geow/1",
                "version": blocks::MANIFEST_VERSION,
                "blocks": rows,
            }));
        }
    }
    0
}
