//! `rankin`: exact reports on highest weights of `GL(n)` over a totally real
//! field, Kostant representatives, Γ-factor inventories and critical sets.
//!
//! Every subcommand prints a single report, as pretty-printed JSON (default)
//! or as an indented text outline.  All rationals travel as exact fraction
//! strings.  Exit codes: `0` success, `1` malformed input, `2` a domain
//! error (the input parses but asks for something undefined, e.g. the
//! cuspidal parameters of a non-pure weight).

use std::fs;
use std::io::Read as _;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use num_traits::One;
use serde_json::{json, Value};

use rankin_core::degrees::{degree_identities, degree_profile, induced_bottom_degree};
use rankin_core::hodge::{
    archimedean_ratio, balance_profile, comb_lemma, critical_set_automorphic,
    critical_set_motivic, gamma_inventory, hodge_eff, hodge_tensor, m0_doubled, odd_odd_report,
    s_shift_doubled, CriticalSet, HodgeSet, Regime,
};
use rankin_core::json::{fundamental_to_schema, weight_from_schema, WeightJson};
use rankin_core::oracles::{
    brute_balanced, brute_kostant, gamma_pole_scan, gamma_ratio_symbolic, gaussian_binomial,
};
use rankin_core::weights::{doubled_string, zero_weight};
use rankin_core::weyl::{find_balanced, interleaving, kostant_reps, BalanceStatus};
use rankin_core::{Error as CoreError, Weight};

#[derive(Parser)]
#[command(name = "rankin", version, about = "Exact highest-weight combinatorics for GL(n)")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Re-derive the results with the independent brute-force and symbolic
    /// oracles and report the comparison.
    #[arg(long, global = true)]
    with_oracle: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Coordinates, integrality, purity and Hodge data of one weight.
    AnalyzeWeight {
        /// Weight file (JSON), or `-` for stdin.
        #[arg(long)]
        weight: String,
    },
    /// Minimal-length coset representatives of a maximal parabolic.
    Kostant {
        /// Total rank `N`.
        #[arg(long)]
        rank: usize,
        /// Size of the first block.
        #[arg(long)]
        block: usize,
    },
    /// Search for the balanced Kostant representative of a pair.
    Balanced {
        #[arg(long)]
        mu: String,
        #[arg(long)]
        mup: String,
    },
    /// Critical sets, Γ-factor inventory and central ratio of a pair.
    Critical {
        #[arg(long)]
        mu: String,
        #[arg(long)]
        mup: String,
        /// Sign of the one-dimensional pieces; required when both ranks are
        /// odd, ignored otherwise.
        #[arg(long)]
        eps0: Option<u8>,
    },
    /// The three equivalent central-criticality conditions of a pair.
    Comblemma {
        #[arg(long)]
        mu: String,
        #[arg(long)]
        mup: String,
    },
    /// Full analysis of a pair with both ranks odd.
    Oddodd {
        #[arg(long)]
        mu: String,
        #[arg(long)]
        mup: String,
    },
    /// Cohomological degree bookkeeping for a pair of ranks.
    Degrees {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        np: usize,
        /// Degree of the totally real base field.
        #[arg(long, default_value_t = 1)]
        r: usize,
        /// With `--v`: also report the equal-block parabolic `(u, ..., u)`.
        #[arg(long, requires = "v")]
        u: Option<usize>,
        #[arg(long, requires = "u")]
        v: Option<usize>,
    },
    /// Weight and critical set of a Hilbert modular form of weight
    /// `(k_1, ..., k_r)` and central twist `m`.
    Hilbert {
        /// Comma-separated weights, one per embedding, all of one parity.
        #[arg(long, value_delimiter = ',', required = true)]
        k: Vec<i64>,
        /// Twist exponent.
        #[arg(long, default_value_t = 0)]
        m: i64,
    },
}

enum Failure {
    Malformed(String),
    Domain(String),
}

impl From<CoreError> for Failure {
    fn from(e: CoreError) -> Self {
        Failure::Domain(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let ok = matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion);
            let _ = e.print();
            return if ok { ExitCode::SUCCESS } else { ExitCode::from(1) };
        }
    };
    match run(&cli) {
        Ok(report) => {
            emit(cli.format, &report);
            ExitCode::SUCCESS
        }
        Err(Failure::Malformed(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<Value, Failure> {
    let oracle = cli.with_oracle;
    match &cli.command {
        Command::AnalyzeWeight { weight } => cmd_analyze(&load_weight(weight)?),
        Command::Kostant { rank, block } => cmd_kostant(*rank, *block, oracle),
        Command::Balanced { mu, mup } => cmd_balanced(&load_weight(mu)?, &load_weight(mup)?, oracle),
        Command::Critical { mu, mup, eps0 } => {
            cmd_critical(&load_weight(mu)?, &load_weight(mup)?, *eps0, oracle)
        }
        Command::Comblemma { mu, mup } => {
            cmd_comblemma(&load_weight(mu)?, &load_weight(mup)?, oracle)
        }
        Command::Oddodd { mu, mup } => cmd_oddodd(&load_weight(mu)?, &load_weight(mup)?, oracle),
        Command::Degrees { n, np, r, u, v } => cmd_degrees(*n, *np, *r, *u, *v),
        Command::Hilbert { k, m } => cmd_hilbert(k, *m, oracle),
    }
}

// ---------------------------------------------------------------- commands

fn cmd_analyze(w: &Weight) -> Result<Value, Failure> {
    let f = fundamental_to_schema(w);
    let pure = w.is_pure();
    let cuspidal = if pure && w.is_dominant() {
        let cp = w.cuspidal_params()?;
        json!({
            "ell": cp.ell,
            "motivic_weight": cp.motivic_weight,
            "purity_weight": doubled_string(cp.purity_weight_doubled),
        })
    } else {
        Value::Null
    };
    let hodge = if pure && w.is_dominant() {
        hodge_json(&hodge_eff(w)?)
    } else {
        Value::Null
    };
    let motivic = if pure && w.is_dominant() {
        match critical_set_motivic(&hodge_eff(w)?) {
            Ok(s) => critical_set_json(&s),
            Err(e) => json!({ "unavailable": e.to_string() }),
        }
    } else {
        Value::Null
    };
    Ok(json!({
        "command": "analyze-weight",
        "rank": w.rank(),
        "field_degree": w.degree(),
        "standard": w.coords(),
        "fundamental": { "a": f.a, "d": f.d },
        "dominant": w.is_dominant(),
        "algebraic": w.is_algebraic(),
        "pure": pure,
        "cuspidal": cuspidal,
        "hodge": hodge,
        "critical_set_motivic": motivic,
    }))
}

fn cmd_kostant(rank: usize, block: usize, oracle: bool) -> Result<Value, Failure> {
    let reps = kostant_reps(rank, block)?;
    let mut histogram = vec![0u64; block * (rank - block.min(rank)) + 1];
    let elements: Vec<Value> = reps
        .iter()
        .map(|w| {
            histogram[w.length() as usize] += 1;
            json!({ "one_line": w.one_line(), "length": w.length() })
        })
        .collect();
    let oracle_block = if oracle {
        let agrees = match brute_kostant(rank, block) {
            Ok(brute) => json!(brute == reps),
            Err(CoreError::TooLarge(msg)) => json!({ "skipped": msg }),
            Err(e) => return Err(e.into()),
        };
        let gauss = gaussian_binomial(rank, block);
        json!({
            "brute_force_agrees": agrees,
            "length_generating_function": gauss,
            "generating_function_matches": gauss == histogram,
        })
    } else {
        Value::Null
    };
    Ok(json!({
        "command": "kostant",
        "blocks": [block, rank - block],
        "count": reps.len(),
        "elements": elements,
        "length_histogram": histogram,
        "oracle": oracle_block,
    }))
}

fn cmd_balanced(mu: &Weight, mup: &Weight, oracle: bool) -> Result<Value, Failure> {
    let out = find_balanced(mu, mup)?;
    let profile = balance_profile(mu, mup).ok();
    let oracle_block = if oracle {
        match brute_balanced(mu, mup) {
            Ok(brute) => {
                let perms_agree = match &out.element {
                    Some(e) => brute.perms == e.perms(),
                    None => brute.perms.is_empty(),
                };
                json!({
                    "collision_agrees": brute.collision == (out.status == BalanceStatus::Collision),
                    "lengths_agree": brute.lengths == out.lengths,
                    "representative_agrees": perms_agree,
                })
            }
            Err(CoreError::TooLarge(msg)) => json!({ "skipped": msg }),
            Err(e) => return Err(e.into()),
        }
    } else {
        Value::Null
    };
    Ok(json!({
        "command": "balanced",
        "status": status_str(out.status),
        "half_dimension": mu.rank() * mup.rank() / 2,
        "lengths": out.lengths,
        "representative": out.element.as_ref().map(|e| {
            e.perms().iter().map(|p| p.one_line()).collect::<Vec<_>>()
        }),
        "dominant_lambda": out.dominant_lambda.as_ref().map(|l| l.coords().to_vec()),
        "profile": profile.map(|p| json!({
            "min_gap": p.min_gap_doubled.iter().map(|&g| doubled_string(g)).collect::<Vec<_>>(),
            "mean_shift": doubled_string(p.mean_shift_doubled),
            "predictions": p.predictions.iter().map(|r| regime_str(*r)).collect::<Vec<_>>(),
        })),
        "oracle": oracle_block,
    }))
}

fn cmd_critical(
    mu: &Weight,
    mup: &Weight,
    eps0: Option<u8>,
    oracle: bool,
) -> Result<Value, Failure> {
    let inv = gamma_inventory(mu, mup, eps0)?;
    let set = inv.critical_set()?;
    let width = mu.cuspidal_width(mup)?;
    let automorphic_closed = match critical_set_automorphic(mu, mup) {
        Ok(s) => critical_set_json(&s),
        Err(e) => json!({ "unavailable": e.to_string() }),
    };
    let motivic = match hodge_tensor(mu, mup).and_then(|h| critical_set_motivic(&h)) {
        Ok(s) => critical_set_json(&s),
        Err(e) => json!({ "unavailable": e.to_string() }),
    };
    let ratio = match archimedean_ratio(mu, mup) {
        Ok(r) => json!({
            "per_place": r.per_place.iter().map(big_ratio_string).collect::<Vec<_>>(),
            "two_pi_exponent_per_place": r.exponent_per_place,
            "two_pi_exponent": r.full_exponent,
        }),
        Err(e) => json!({ "unavailable": e.to_string() }),
    };
    let oracle_block = if oracle {
        let k = inv.min_k().unwrap_or(0);
        let window = (inv.d_diff_doubled - k - 6, inv.d_diff_doubled + k + 6);
        let scan = gamma_pole_scan(mu, mup, eps0, window)?;
        let ratio_check = match (archimedean_ratio(mu, mup), gamma_ratio_symbolic(mu, mup)) {
            (Ok(a), Ok(b)) => json!(
                a.per_place == b.per_place && a.exponent_per_place == b.exponent_per_place
            ),
            _ => Value::Null,
        };
        json!({
            "pole_scan_agrees": scan == set.doubled_points(),
            "symbolic_ratio_agrees": ratio_check,
        })
    } else {
        Value::Null
    };
    Ok(json!({
        "command": "critical",
        "width": width,
        "d_difference": doubled_string(inv.d_diff_doubled),
        "gamma_inventory": {
            "doubled_parameters": inv.ks,
            "eps0": inv.eps0,
            "point_parity": if inv.parity_doubled == 0 { "integer" } else { "half-integer" },
        },
        "critical_set_automorphic": critical_set_json(&set),
        "critical_set_automorphic_closed_form": automorphic_closed,
        "critical_set_motivic": motivic,
        "s_shift": doubled_string(s_shift_doubled(mu, mup)?),
        "central_point_motivic": doubled_string(m0_doubled(mu, mup)?),
        "central_ratio": ratio,
        "oracle": oracle_block,
    }))
}

fn cmd_comblemma(mu: &Weight, mup: &Weight, oracle: bool) -> Result<Value, Failure> {
    let rep = comb_lemma(mu, mup)?;
    let oracle_block = if oracle {
        match brute_balanced(mu, mup) {
            Ok(brute) => {
                let half = (mu.rank() * mup.rank() / 2) as u64;
                let brute_balanced_status =
                    !brute.collision && brute.lengths.iter().all(|&l| l == half);
                json!({ "brute_force_balanced_agrees": brute_balanced_status == rep.balanced })
            }
            Err(CoreError::TooLarge(msg)) => json!({ "skipped": msg }),
            Err(e) => return Err(e.into()),
        }
    } else {
        Value::Null
    };
    Ok(json!({
        "command": "comblemma",
        "swapped": rep.swapped,
        "width": rep.width,
        "d_difference": doubled_string(rep.d_diff_doubled),
        "balanced_representative_exists": rep.balanced,
        "interval_condition": rep.interval,
        "central_points_critical": rep.central_critical,
        "equivalent": rep.equivalent,
        "search_status": status_str(rep.search.status),
        "lengths": rep.search.lengths,
        "oracle": oracle_block,
    }))
}

fn cmd_oddodd(mu: &Weight, mup: &Weight, oracle: bool) -> Result<Value, Failure> {
    let rep = odd_odd_report(mu, mup)?;
    let oracle_block = if oracle {
        let mut agrees = true;
        for (e, set) in rep.sets.iter().enumerate() {
            let window = match (set.doubled_points().first(), set.doubled_points().last()) {
                (Some(&lo), Some(&hi)) => (lo - 8, hi + 8),
                _ => (-40, 40),
            };
            let scan = gamma_pole_scan(mu, mup, Some(e as u8), window)?;
            agrees &= scan == set.doubled_points();
        }
        json!({ "pole_scan_agrees": agrees })
    } else {
        Value::Null
    };
    Ok(json!({
        "command": "oddodd",
        "width_plus": rep.width_plus,
        "critical_set_eps0_0": critical_set_json(&rep.sets[0]),
        "critical_set_eps0_1": critical_set_json(&rep.sets[1]),
        "central_pair_critical": rep.central_pair_critical,
        "central_pair_predicted": rep.central_pair_predicted,
        "collision": rep.collision.as_ref().map(|c| json!({
            "positions": [c.positions.0, c.positions.1],
            "value": doubled_string(c.value_doubled),
        })),
        "balance_status": status_str(rep.balance),
        "oracle": oracle_block,
    }))
}

fn cmd_degrees(
    n: usize,
    np: usize,
    r: usize,
    u: Option<usize>,
    v: Option<usize>,
) -> Result<Value, Failure> {
    let profile_json = |p: rankin_core::degrees::DegreeProfile| {
        json!({ "n": p.n, "bottom": p.bottom, "top": p.top, "top_dual": p.top_dual })
    };
    let identities = match degree_identities(n, np, r) {
        Ok(id) => json!({
            "bottom_holds": id.bottom_holds,
            "top_dual_holds": id.top_dual_holds,
            "half_unipotent_dimension": id.half_unipotent,
        }),
        Err(e) => json!({ "unavailable": e.to_string() }),
    };
    let equal_blocks = match (u, v) {
        (Some(u), Some(v)) => {
            let ib = induced_bottom_degree(u, v)?;
            let iw = interleaving(u, v)?;
            json!({
                "blocks": iw.blocks,
                "induced_bottom": ib.q,
                "bottom": ib.bottom,
                "interleaving_length": iw.length,
                "reflected_length": iw.reflected_length,
                "predicted_length": iw.predicted_length,
            })
        }
        _ => Value::Null,
    };
    Ok(json!({
        "command": "degrees",
        "field_degree": r,
        "first": profile_json(degree_profile(n, r)?),
        "second": profile_json(degree_profile(np, r)?),
        "product": profile_json(degree_profile(n + np, r)?),
        "identities": identities,
        "equal_blocks": equal_blocks,
    }))
}

fn cmd_hilbert(k: &[i64], m: i64, oracle: bool) -> Result<Value, Failure> {
    if k.is_empty() {
        return Err(Failure::Malformed("at least one weight k is required".into()));
    }
    let k0 = *k.iter().max().unwrap();
    for &kt in k {
        if kt < 2 {
            return Err(Failure::Domain(format!("weight k = {kt} is below the cohomological range")));
        }
        if (kt - k0) % 2 != 0 {
            return Err(Failure::Domain("weights must all have the same parity".into()));
        }
    }
    // b^tau = ((k_tau - 2)/2 - m - k0/2, -(k_tau - 2)/2 - m - k0/2)
    let coords: Vec<Vec<i64>> = k
        .iter()
        .map(|&kt| {
            let top2 = (kt - 2) - 2 * m - k0;
            let bot2 = -(kt - 2) - 2 * m - k0;
            debug_assert!(top2 % 2 == 0 && bot2 % 2 == 0);
            vec![top2 / 2, bot2 / 2]
        })
        .collect();
    let w = Weight::new(2, k.len(), coords)?;
    let cp = w.cuspidal_params()?;
    let motivic = critical_set_motivic(&hodge_eff(&w)?)?;
    let trivial = zero_weight(1, w.degree());
    let width = w.cuspidal_width(&trivial)?;
    let automorphic = match critical_set_automorphic(&w, &trivial) {
        Ok(s) => critical_set_json(&s),
        Err(e) => json!({ "unavailable": e.to_string() }),
    };
    let oracle_block = if oracle {
        let d2 = w.d_minus_d_doubled(&trivial)?;
        let scan = gamma_pole_scan(&w, &trivial, None, (d2 - width - 6, d2 + width + 6))?;
        let closed = critical_set_automorphic(&w, &trivial);
        json!({
            "pole_scan_agrees": closed.map(|s| scan == s.doubled_points()).unwrap_or(scan.is_empty()),
        })
    } else {
        Value::Null
    };
    Ok(json!({
        "command": "hilbert",
        "k": k,
        "m": m,
        "weight": { "standard": w.coords() },
        "cuspidal": {
            "ell": cp.ell,
            "motivic_weight": cp.motivic_weight,
            "purity_weight": doubled_string(cp.purity_weight_doubled),
        },
        "width": width,
        "interval_satisfiable": width >= 2,
        "critical_set_motivic": critical_set_json(&motivic),
        "critical_set_automorphic": automorphic,
        "oracle": oracle_block,
    }))
}

// ----------------------------------------------------------------- helpers

fn load_weight(path: &str) -> Result<Weight, Failure> {
    let text = if path == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Failure::Malformed(format!("cannot read stdin: {e}")))?;
        buf
    } else {
        fs::read_to_string(path)
            .map_err(|e| Failure::Malformed(format!("cannot read {path}: {e}")))?
    };
    let schema: WeightJson = serde_json::from_str(&text)
        .map_err(|e| Failure::Malformed(format!("bad weight JSON in {path}: {e}")))?;
    Ok(weight_from_schema(&schema)?)
}

fn status_str(s: BalanceStatus) -> &'static str {
    match s {
        BalanceStatus::Balanced => "balanced",
        BalanceStatus::Unbalanced => "unbalanced",
        BalanceStatus::Collision => "collision",
    }
}

fn regime_str(r: Regime) -> &'static str {
    match r {
        Regime::Balanced => "balanced",
        Regime::BelowHalf => "below-half",
        Regime::AboveHalf => "above-half",
        Regime::Collision => "collision",
    }
}

fn critical_set_json(s: &CriticalSet) -> Value {
    json!({
        "points": s.doubled_points().iter().map(|&p| doubled_string(p)).collect::<Vec<_>>(),
        "cardinality": s.len(),
        "is_progression": s.is_progression(),
    })
}

fn hodge_json(h: &HodgeSet) -> Value {
    json!({
        "pairs": h.pairs,
        "purity_weight": h.purity_weight,
    })
}

fn big_ratio_string(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Print the report.  JSON output is pretty-printed with sorted keys, so it
/// is byte-identical across runs; the text form renders the same tree as an
/// indented outline.
fn emit(format: Format, report: &Value) {
    let text = match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(report).expect("report serializes");
            s.push('\n');
            s
        }
        Format::Text => {
            let mut s = String::new();
            render_text(report, 0, &mut s);
            s
        }
    };
    // tolerate a closed pipe (e.g. piping into `head`)
    let _ = std::io::Write::write_all(&mut std::io::stdout().lock(), text.as_bytes());
}

fn render_text(v: &Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(map) => {
            for (key, val) in map {
                match val {
                    Value::Object(_) | Value::Array(_) if !is_scalar_array(val) => {
                        out.push_str(&format!("{pad}{key}:\n"));
                        render_text(val, indent + 1, out);
                    }
                    _ => out.push_str(&format!("{pad}{key}: {}\n", scalar_str(val))),
                }
            }
        }
        Value::Array(items) => {
            for item in items {
                match item {
                    Value::Object(_) | Value::Array(_) if !is_scalar_array(item) => {
                        out.push_str(&format!("{pad}-\n"));
                        render_text(item, indent + 1, out);
                    }
                    _ => out.push_str(&format!("{pad}- {}\n", scalar_str(item))),
                }
            }
        }
        _ => out.push_str(&format!("{pad}{}\n", scalar_str(v))),
    }
}

fn is_scalar_array(v: &Value) -> bool {
    matches!(v, Value::Array(items) if items.iter().all(|i| !matches!(i, Value::Object(_) | Value::Array(_))))
}

fn scalar_str(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(items) => format!(
            "[{}]",
            items.iter().map(scalar_str).collect::<Vec<_>>().join(", ")
        ),
        other => other.to_string(),
    }
}
