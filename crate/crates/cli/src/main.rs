//! `fnq`: element algebra, group queries, exact order comparisons, bound
//! calculators, and the verify runner.
//!
//! Exit codes: 0 on success (for `verify`, also when reports are merely
//! flagged), 1 when a verify report fails or a computation errors out,
//! 2 on usage errors. Nothing is printed to stderr on success.

use std::process::ExitCode;
use std::time::{SystemTime, UNIX_EPOCH};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use fnq_core::autf;
use fnq_core::bounds::{self, Mode, RStar};
use fnq_core::groups::{builders, Element, FiniteGroup};
use fnq_core::linearize;
use fnq_core::orders::{self, Family, GroupOrder, LieSpec, Version};
use fnq_core::report::{CheckReport, CheckStatus};
use fnq_core::verify;

#[derive(Parser)]
#[command(name = "fnq", version, about = "Exact group-theoretic verification toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format for structured results.
    #[arg(long, global = true, value_enum)]
    output: Option<Output>,
    /// Shorthand for --output json.
    #[arg(long, global = true)]
    json: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Output {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate an automorphism expression and print its generator images.
    ///
    /// Elements: rho(i,j), lam(i,j), sig(i,j), sigbar(i), eps(i), delta,
    /// gamma, id; combined with `*`, `^k`, `^-1`, and `^(expr)` for
    /// conjugation.
    Eval {
        /// Ambient free-group rank.
        #[arg(long)]
        rank: u32,
        /// Expression, e.g. "rho(1,2)^(eps(1)*eps(2))".
        expr: String,
    },
    /// Finite-group queries over fully enumerated groups.
    Group {
        #[command(subcommand)]
        cmd: GroupCmd,
    },
    /// Exact order formulas and the appendix inequality sweep.
    Orders {
        #[command(subcommand)]
        cmd: OrdersCmd,
    },
    /// The action-size bound k(n) with its per-r table.
    Kbound {
        #[arg(long)]
        n: u32,
        /// Admissible range for the optimiser.
        #[arg(long, value_enum, default_value_t = ModeArg::Literal)]
        mode: ModeArg,
    },
    /// Run named check suites (all of them when none are given).
    Verify {
        /// Suite names; see --help for the list.
        suites: Vec<String>,
        #[command(flatten)]
        opts: VerifyOpts,
    },
}

#[derive(Args)]
struct VerifyOpts {
    /// Upper end of the inequality sweeps (>= 12).
    #[arg(long, default_value_t = 40)]
    nmax: u32,
    /// Closure cap; FNQ_CAP overrides the default, --cap overrides both.
    #[arg(long)]
    cap: Option<usize>,
    /// Force plain-text output.
    #[arg(long)]
    text: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Literal,
    Proof,
}

#[derive(Subcommand)]
enum GroupCmd {
    /// Conjugacy-class table: order, size, centraliser, reality, and the
    /// commuting-member count of each class.
    Classes {
        /// Target spec: alt:n, sym:n, dprime:n, sp4:q, psp4:q, natural:n:p.
        #[arg(long)]
        target: String,
        /// Closure cap; FNQ_CAP overrides the default, --cap overrides both.
        #[arg(long)]
        cap: Option<usize>,
    },
}

#[derive(Subcommand)]
enum OrdersCmd {
    /// Print the exact orders of the given specs and whether they agree.
    ///
    /// Specs: family:rank:q[:universal] with family in A, 2A, B, C, D, 2D,
    /// G2, F4, E6, 2E6, E7, E8, 2B2, 2G2, 3D4, 2F4; alt:n; spo:NAME;
    /// ln2:n; tits.
    Compare {
        #[arg(required = true)]
        specs: Vec<String>,
    },
    /// The appendix inequality sweep, rows {lemma, n, lhs, rhs, pass}.
    Appendix {
        /// Upper end of the sweep (>= 12).
        #[arg(long, default_value_t = 40)]
        nmax: u32,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let output = if cli.json {
        Output::Json
    } else {
        cli.output.unwrap_or(Output::Text)
    };
    match dispatch(cli.command, output) {
        Ok(code) => code,
        Err(Failure::Usage(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
        Err(Failure::Runtime(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(1)
        }
    }
}

enum Failure {
    Usage(String),
    Runtime(String),
}

fn usage(e: impl std::fmt::Display) -> Failure {
    Failure::Usage(e.to_string())
}

fn runtime(e: impl std::fmt::Display) -> Failure {
    Failure::Runtime(e.to_string())
}

fn dispatch(command: Command, output: Output) -> Result<ExitCode, Failure> {
    match command {
        Command::Eval { rank, expr } => cmd_eval(rank, &expr, output),
        Command::Group {
            cmd: GroupCmd::Classes { target, cap },
        } => cmd_classes(&target, closure_cap(cap)?, output),
        Command::Orders {
            cmd: OrdersCmd::Compare { specs },
        } => cmd_compare(&specs, output),
        Command::Orders {
            cmd: OrdersCmd::Appendix { nmax },
        } => cmd_appendix(nmax, output),
        Command::Kbound { n, mode } => cmd_kbound(n, mode, output),
        Command::Verify { suites, opts } => cmd_verify(&suites, &opts, output),
    }
}

/// Default cap 10^6, overridden by FNQ_CAP, overridden by --cap.
fn closure_cap(flag: Option<usize>) -> Result<usize, Failure> {
    if let Some(cap) = flag {
        return Ok(cap);
    }
    match std::env::var("FNQ_CAP") {
        Ok(raw) => raw
            .parse()
            .map_err(|_| usage(format!("FNQ_CAP must be an integer, got {raw:?}"))),
        Err(_) => Ok(1_000_000),
    }
}

// ---------------------------------------------------------------------
// eval

fn cmd_eval(rank: u32, expr: &str, output: Output) -> Result<ExitCode, Failure> {
    let element = autf::parse::element(rank, expr).map_err(usage)?;
    match output {
        Output::Json => {
            let matrix = linearize::abelianize(&element);
            let rows: Vec<Vec<serde_json::Value>> = matrix
                .rows()
                .iter()
                .map(|row| row.iter().map(|e| big_to_json(&e.to_string())).collect())
                .collect();
            let images: Vec<String> = element
                .forward_images()
                .iter()
                .map(|w| w.to_string())
                .collect();
            let inverse_images: Vec<String> = element
                .inverse_images()
                .iter()
                .map(|w| w.to_string())
                .collect();
            let doc = json!({
                "rank": rank,
                "images": images,
                "inverse_images": inverse_images,
                "abelianized": rows,
                "det": linearize::det_sign(&element),
            });
            println!("{}", serde_json::to_string_pretty(&doc).expect("serializable"));
        }
        Output::Text | Output::Csv => {
            for (i, image) in element.forward_images().iter().enumerate() {
                println!("a{} -> {}", i + 1, image);
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn big_to_json(decimal: &str) -> serde_json::Value {
    match decimal.parse::<i64>() {
        Ok(v) => json!(v),
        Err(_) => json!(decimal),
    }
}

// ---------------------------------------------------------------------
// group classes

struct ClassRow {
    representative: String,
    order: u64,
    size: usize,
    centralizer: u64,
    real: bool,
    commuting_count: u64,
}

fn class_rows<E: Element>(g: &FiniteGroup<E>) -> Vec<ClassRow> {
    let classes = g.conjugacy_classes();
    let mut rows: Vec<ClassRow> = classes
        .classes
        .iter()
        .map(|info| {
            let rep = &g.elements()[info.rep];
            ClassRow {
                representative: rep.describe(),
                order: info.element_order,
                size: info.size,
                centralizer: g.order() / info.size as u64,
                real: g.is_real_with(&classes, rep).expect("rep is in the group"),
                commuting_count: g
                    .class_commuting_count_with(&classes, rep)
                    .expect("rep is in the group"),
            }
        })
        .collect();
    rows.sort_by(|a, b| {
        (a.order, a.size, a.commuting_count, &a.representative).cmp(&(
            b.order,
            b.size,
            b.commuting_count,
            &b.representative,
        ))
    });
    rows
}

fn cmd_classes(target: &str, cap: usize, output: Output) -> Result<ExitCode, Failure> {
    let parts: Vec<&str> = target.split(':').collect();
    let parse_num = |s: &str| -> Result<usize, Failure> {
        s.parse()
            .map_err(|_| usage(format!("bad number {s:?} in target {target:?}")))
    };
    let (group_order, rows) = match parts.as_slice() {
        ["alt", n] => {
            let g = builders::alt(parse_num(n)?, cap).map_err(runtime)?;
            (g.order(), class_rows(&g))
        }
        ["sym", n] => {
            let g = builders::sym(parse_num(n)?, cap).map_err(runtime)?;
            (g.order(), class_rows(&g))
        }
        ["dprime", n] => {
            let g = builders::dprime(parse_num(n)?, cap).map_err(runtime)?;
            (g.order(), class_rows(&g))
        }
        ["sp4", q] => {
            let g = builders::sp4(parse_num(q)? as u32, cap).map_err(runtime)?;
            (g.order(), class_rows(&g))
        }
        ["psp4", q] => {
            let g = builders::psp4(parse_num(q)? as u32, cap).map_err(runtime)?;
            (g.order(), class_rows(&g))
        }
        ["natural", n, p] => {
            let g = builders::natural_image(parse_num(n)?, parse_num(p)? as u32, cap)
                .map_err(runtime)?;
            (g.order(), class_rows(&g))
        }
        _ => {
            return Err(usage(format!(
                "unknown target {target:?}; use alt:n, sym:n, dprime:n, sp4:q, psp4:q, natural:n:p"
            )))
        }
    };

    match output {
        Output::Json => {
            let classes: Vec<serde_json::Value> = rows
                .iter()
                .map(|r| {
                    json!({
                        "order": r.order,
                        "size": r.size,
                        "centralizer": r.centralizer,
                        "real": r.real,
                        "commuting_count": r.commuting_count,
                        "representative": r.representative,
                    })
                })
                .collect();
            let doc = json!({"target": target, "group_order": group_order, "classes": classes});
            println!("{}", serde_json::to_string_pretty(&doc).expect("serializable"));
        }
        Output::Csv => {
            println!("order,size,centralizer,real,commuting_count");
            for r in rows {
                println!(
                    "{},{},{},{},{}",
                    r.order, r.size, r.centralizer, r.real, r.commuting_count
                );
            }
        }
        Output::Text => {
            println!("{target}: order {group_order}, {} classes", rows.len());
            println!("{:>6} {:>8} {:>12} {:>6} {:>10}  representative", "order", "size", "centralizer", "real", "commuting");
            for r in rows {
                println!(
                    "{:>6} {:>8} {:>12} {:>6} {:>10}  {}",
                    r.order, r.size, r.centralizer, r.real, r.commuting_count, r.representative
                );
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

// ---------------------------------------------------------------------
// orders

fn parse_order_spec(spec: &str) -> Result<GroupOrder, Failure> {
    let parts: Vec<&str> = spec.split(':').collect();
    let bad = |reason: String| usage(format!("bad spec {spec:?}: {reason}"));
    match parts.as_slice() {
        ["tits"] => Ok(orders::tits_order()),
        ["alt", n] => {
            let n: u64 = n.parse().map_err(|_| bad("degree must be an integer".into()))?;
            orders::alternating_order(n).map_err(|e| bad(e.to_string()))
        }
        ["spo", name] => orders::sporadic_order(name).map_err(|e| bad(e.to_string())),
        ["ln2", n] => {
            let n: u32 = n.parse().map_err(|_| bad("rank must be an integer".into()))?;
            if n < 2 {
                return Err(bad("ln2 needs n >= 2".into()));
            }
            Ok(orders::ln2(n))
        }
        [family, rank, q, rest @ ..] => {
            let family = Family::parse(family)
                .ok_or_else(|| bad(format!("unknown family {family:?}")))?;
            let rank: u32 = rank.parse().map_err(|_| bad("rank must be an integer".into()))?;
            let q: u64 = q.parse().map_err(|_| bad("field size must be an integer".into()))?;
            let version = match rest {
                [] | ["adjoint"] => Version::Adjoint,
                ["universal"] => Version::Universal,
                other => return Err(bad(format!("unknown version {other:?}"))),
            };
            let lie = LieSpec::new(family, rank, q, version).map_err(|e| bad(e.to_string()))?;
            Ok(orders::lie_order(&lie))
        }
        _ => Err(bad(
            "use family:rank:q[:universal], alt:n, spo:NAME, ln2:n, or tits".into(),
        )),
    }
}

fn cmd_compare(specs: &[String], output: Output) -> Result<ExitCode, Failure> {
    let resolved: Vec<(String, GroupOrder)> = specs
        .iter()
        .map(|s| parse_order_spec(s).map(|o| (s.clone(), o)))
        .collect::<Result<_, _>>()?;
    let all_equal =
        resolved.len() > 1 && resolved.windows(2).all(|w| w[0].1.value == w[1].1.value);
    match output {
        Output::Json => {
            let items: Vec<serde_json::Value> = resolved
                .iter()
                .map(|(spec, o)| {
                    json!({"spec": spec, "label": o.label, "order": o.value.to_string()})
                })
                .collect();
            let doc = json!({"items": items, "all_equal": all_equal});
            println!("{}", serde_json::to_string_pretty(&doc).expect("serializable"));
        }
        Output::Csv => {
            println!("spec,label,order");
            for (spec, o) in &resolved {
                println!("{spec},{},{}", o.label, o.value);
            }
        }
        Output::Text => {
            let width = resolved.iter().map(|(s, _)| s.len()).max().unwrap_or(0);
            for (spec, o) in &resolved {
                println!("{spec:<width$}  {}  ({})", o.value, o.label);
            }
            if resolved.len() > 1 {
                println!(
                    "{}",
                    if all_equal {
                        "orders agree"
                    } else {
                        "orders differ"
                    }
                );
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_appendix(nmax: u32, output: Output) -> Result<ExitCode, Failure> {
    if nmax < 12 {
        return Err(usage(format!("--nmax must be at least 12, got {nmax}")));
    }
    let reports = orders::appendix_suite(nmax);
    let ok = fnq_core::report::all_good(&reports);
    match output {
        Output::Json => {
            let rows: Vec<&serde_json::Value> = reports.iter().map(|r| &r.evidence).collect();
            let doc = json!({"nmax": nmax, "rows": rows, "all_pass": ok});
            println!("{}", serde_json::to_string_pretty(&doc).expect("serializable"));
        }
        Output::Csv => {
            println!("lemma,n,lhs,rhs,pass");
            for r in &reports {
                let e = &r.evidence;
                println!(
                    "{},{},{},{},{}",
                    e["lemma"].as_str().unwrap_or("?"),
                    e["n"],
                    e["lhs"].as_str().unwrap_or("?"),
                    e["rhs"].as_str().unwrap_or("?"),
                    e["pass"]
                );
            }
        }
        Output::Text => {
            for r in &reports {
                let e = &r.evidence;
                println!(
                    "[{}] {}: lhs {} vs rhs {}",
                    if e["pass"] == true { "pass" } else { "FAIL" },
                    r.claim,
                    e["lhs"].as_str().unwrap_or("?"),
                    e["rhs"].as_str().unwrap_or("?"),
                );
            }
            println!("{} rows, all_pass = {ok}", reports.len());
        }
    }
    Ok(if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

// ---------------------------------------------------------------------
// kbound

fn cmd_kbound(n: u32, mode: ModeArg, output: Output) -> Result<ExitCode, Failure> {
    let mode = match mode {
        ModeArg::Literal => Mode::Literal,
        ModeArg::Proof => Mode::ProofConsistent,
    };
    let result = bounds::k(n, mode).map_err(usage)?;
    let r_star_json = match result.r_star {
        RStar::Table => json!("table"),
        RStar::R(r) => json!(r),
        RStar::Vacuous => json!("vacuous"),
    };
    match output {
        Output::Json => {
            let per_r: Vec<serde_json::Value> = result
                .per_r
                .iter()
                .map(|(r, v)| json!({"r": r, "value": v.to_string()}))
                .collect();
            let doc = json!({
                "n": n,
                "mode": mode.label(),
                "k": result.k_value.to_string(),
                "r_star": r_star_json,
                "per_r": per_r,
            });
            println!("{}", serde_json::to_string_pretty(&doc).expect("serializable"));
        }
        Output::Csv => {
            println!("r,value");
            for (r, v) in &result.per_r {
                println!("{r},{v}");
            }
        }
        Output::Text => {
            println!("n = {n}  mode = {}", mode.label());
            println!("k = {}", result.k_value);
            match result.r_star {
                RStar::Table => println!("r* = (fixed small-rank value)"),
                RStar::R(r) => println!("r* = {r}"),
                RStar::Vacuous => println!("r* = (empty admissible range)"),
            }
            if !result.per_r.is_empty() {
                println!("{:>4}  min(2^(n-r-p), C(n,r))", "r");
                for (r, v) in &result.per_r {
                    println!("{r:>4}  {v}");
                }
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

// ---------------------------------------------------------------------
// verify

fn cmd_verify(suites: &[String], opts: &VerifyOpts, output: Output) -> Result<ExitCode, Failure> {
    let config = verify::Config {
        nmax: opts.nmax,
        closure_cap: closure_cap(opts.cap)?,
        ..verify::Config::default()
    };
    config.validate().map_err(usage)?;

    let selected: Vec<String> = if suites.is_empty() {
        verify::SUITE_NAMES.iter().map(|s| s.to_string()).collect()
    } else {
        let mut seen = suites.to_vec();
        seen.sort();
        seen.dedup();
        seen
    };
    let reports: Vec<CheckReport> = verify::run_selected(&selected, &config).map_err(usage)?;

    let pass = reports
        .iter()
        .filter(|r| r.status == CheckStatus::Pass)
        .count();
    let flagged = reports
        .iter()
        .filter(|r| r.status == CheckStatus::Flagged)
        .count();
    let fail = reports.iter().filter(|r| r.is_fail()).count();

    let use_json = output == Output::Json && !opts.text;
    if use_json {
        let timestamp = SystemTime::now()
            .duration_since(UNIX_EPOCH)
            .expect("clock after the epoch")
            .as_millis() as u64;
        let doc = json!({
            "config": {"nmax": config.nmax, "closure_cap": config.closure_cap},
            "suites": selected,
            "timestamp_unix_ms": timestamp,
            "reports": reports,
            "summary": {"pass": pass, "flagged": flagged, "fail": fail},
        });
        println!("{}", serde_json::to_string_pretty(&doc).expect("serializable"));
    } else {
        for r in &reports {
            let tag = match r.status {
                CheckStatus::Pass => "PASS",
                CheckStatus::Flagged => "FLAG",
                CheckStatus::Fail => "FAIL",
            };
            println!("[{tag}] {}/{}", r.suite, r.claim);
            if r.status != CheckStatus::Pass {
                println!("       {}", r.evidence);
            }
        }
        println!("summary: {pass} pass, {flagged} flagged, {fail} fail");
    }
    Ok(if fail == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}
