//! Command-line front end. [`dispatch`] parses arguments, runs one
//! subcommand and returns the exit code and captured output, so the binary
//! stays a thin wrapper and tests can drive it in-process.

use std::ffi::OsString;
use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;
use serde_json::{json, Value};

use crate::brute::{alpha_via_boolean_moebius, count_coverings_bruteforce, count_packings_bruteforce};
use crate::error::{Error, Result};
use crate::experiments::{
    alpha_error_report, asymptotic_report, find_period_mod_p, modular_alpha_check, ode_check_power_spec,
    s_mod_p, DEFAULT_PRECISION,
};
use crate::genericity::{is_generic_with, Strategy, DEFAULT_GENERICITY_BUDGET};
use crate::group::{FiniteGroup, SubsetFamily};
use crate::hyperforest::{
    alpha_via_hyperforest_sum, enumerate_hyperforests, moebius_closed_form, moebius_recursive, Hyperforest,
};
use crate::series::{check_functional_equation, gamma_vectors, packing_count, u_series};
use crate::triangle::{
    big_s_sequence, first_row_stirling_check, q_specialize, s_sequence, triangle, weighted_sum_sequence,
    WeightedSum,
};
use crate::verify::{verify, Level};

/// Exit status and captured streams of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self { code: 0, stdout, stderr: String::new() }
    }

    fn verdict(passed: bool, stdout: String) -> Self {
        Self { code: if passed { 0 } else { 1 }, stdout, stderr: String::new() }
    }

    fn failure(code: i32, stderr: String) -> Self {
        Self { code, stdout: String::new(), stderr }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Plain,
}

#[derive(Parser, Debug)]
#[command(name = "packings", version, about = "Packings of generic subset families in finite groups")]
struct Cli {
    /// Output format; each subcommand has its own default.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the triangle T(n).
    Triangle {
        #[arg(long)]
        n: usize,
    },
    /// Print a sequence derived from the triangles.
    Seq(SeqArgs),
    /// Print the series U through x^order.
    Useries {
        #[arg(long, default_value_t = 4)]
        order: usize,
    },
    /// Number of packings from the closed formula.
    Count(CountArgs),
    /// Number of packings by exhaustive scan.
    Brute {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, value_enum, default_value_t = BruteMethod::Scan)]
        method: BruteMethod,
    },
    /// Number of coverings by exhaustive scan.
    Cover {
        #[command(flatten)]
        family: FamilyArgs,
    },
    /// Decide genericity and print a witness when it fails.
    GenericCheck {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, default_value_t = DEFAULT_GENERICITY_BUDGET)]
        budget: u128,
    },
    /// Hyperforests.
    #[command(subcommand)]
    Hf(HfCommand),
    /// Identity checks.
    #[command(subcommand)]
    Check(CheckCommand),
    /// Numerical experiments.
    #[command(subcommand)]
    Exp(ExpCommand),
    /// Run the cross-validation matrix.
    Verify {
        #[arg(long, value_enum, default_value_t = VerifyLevel::Quick)]
        level: VerifyLevel,
    },
}

#[derive(Args, Debug)]
struct SeqArgs {
    /// s, S, gamma, q, a..f, binomial:k or factorial:k.
    kind: String,
    #[arg(long, default_value_t = 10)]
    max: usize,
    /// σ_1 for `gamma`.
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    sigma1: String,
    /// x for `q`.
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    x: String,
    /// y for `q`.
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    y: String,
}

#[derive(Args, Debug)]
struct FamilyArgs {
    /// Z8, Z2xZ9, S3 or the path of a table file.
    #[arg(long)]
    group: String,
    /// Subsets as element indices, e.g. "0,1;0,2".
    #[arg(long)]
    sets: String,
}

#[derive(Args, Debug)]
struct CountArgs {
    /// Group order.
    #[arg(long = "N", conflicts_with = "group")]
    order: Option<BigInt>,
    /// Subset cardinalities, e.g. 2,2,2.
    #[arg(long, value_delimiter = ',', requires = "order")]
    cards: Vec<u64>,
    #[arg(long, requires = "sets")]
    group: Option<String>,
    #[arg(long, requires = "group")]
    sets: Option<String>,
    /// Skip the genericity check for --sets.
    #[arg(long)]
    assume_generic: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum BruteMethod {
    Scan,
    BooleanMoebius,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum VerifyLevel {
    Quick,
    Full,
}

#[derive(Subcommand, Debug)]
enum HfCommand {
    /// List HF(n).
    Enum {
        #[arg(long)]
        n: usize,
    },
    /// μ of one hyperforest, recursively and in closed form.
    Moebius {
        /// Hyperedges with 1-based labels, e.g. "1,2,3;3,4".
        #[arg(long)]
        edges: String,
        /// Number of vertices; defaults to the largest label.
        #[arg(long)]
        n: Option<usize>,
    },
    /// Number of packings as a sum over hyperforests.
    Alpha {
        #[arg(long = "N")]
        order: BigInt,
        #[arg(long, value_delimiter = ',', required = true)]
        cards: Vec<u64>,
    },
}

#[derive(Subcommand, Debug)]
enum CheckCommand {
    /// The functional equation of U, optionally iterated.
    FunctionalEquation {
        #[arg(long, default_value_t = 10)]
        order: usize,
        #[arg(long, default_value_t = 1)]
        folds: u32,
    },
    /// The first row of T(n) against Stirling numbers.
    Stirling {
        #[arg(long, default_value_t = 12)]
        n: usize,
    },
}

#[derive(Subcommand, Debug)]
enum ExpCommand {
    /// s(n) mod p, its period and the reference constants.
    ModP {
        #[arg(long)]
        p: u64,
        #[arg(long, default_value_t = 30)]
        terms: usize,
    },
    /// Ratio of s(n) to its conjectured growth.
    Asympt {
        #[arg(long, default_value_t = 500)]
        n_max: usize,
        #[arg(long, default_value_t = DEFAULT_PRECISION)]
        precision: usize,
    },
    /// Rescaled error of the reference constants.
    AlphaError {
        #[arg(long, default_value_t = DEFAULT_PRECISION)]
        precision: usize,
    },
    /// Differential equation for a specialization of U.
    Ode {
        #[arg(long, default_value_t = 0)]
        r: usize,
        #[arg(long, default_value_t = 4)]
        mx: usize,
        #[arg(long, default_value_t = 8)]
        mz: usize,
    },
}

/// Parses `args` (program name first) and runs the subcommand.
///
/// Exit codes: 0 for success or PASS, 1 for FAIL or a violated
/// precondition, 2 for usage errors.
pub fn dispatch<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() { Outcome::failure(2, text) } else { Outcome::ok(text) };
        }
    };
    match run(cli) {
        Ok(out) => out,
        Err(e) => {
            let code = match e {
                Error::Parse { .. } | Error::Io { .. } => 2,
                _ => 1,
            };
            Outcome::failure(code, format!("error: {e}\n"))
        }
    }
}

fn render<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable output");
    s.push('\n');
    s
}

fn parse_rational(what: &'static str, s: &str) -> Result<BigRational> {
    s.trim().parse().map_err(|_| Error::Parse { what, input: s.to_string() })
}

fn family(args: &FamilyArgs) -> Result<SubsetFamily> {
    let group = FiniteGroup::from_descriptor(&args.group)?;
    SubsetFamily::parse(&group, &args.sets)
}

fn lines<I: IntoIterator<Item = D>, D: std::fmt::Display>(items: I) -> String {
    items.into_iter().fold(String::new(), |mut s, x| {
        let _ = writeln!(s, "{x}");
        s
    })
}

fn run(cli: Cli) -> Result<Outcome> {
    let fmt = cli.format;
    let json_or = |default: Format| fmt.unwrap_or(default) == Format::Json;
    match cli.command {
        Command::Triangle { n } => {
            if n == 0 {
                return Err(Error::SizeGuard { what: "n (must be >= 1)", value: 0, limit: 1 });
            }
            let t = triangle(n);
            if json_or(Format::Plain) {
                let rows: Vec<Vec<String>> =
                    t.rows().iter().map(|r| r.iter().map(ToString::to_string).collect()).collect();
                Ok(Outcome::ok(render(&json!({ "n": n, "first_row": n + 1, "rows": rows }))))
            } else {
                Ok(Outcome::ok(format!("{t}\n")))
            }
        }
        Command::Seq(args) => run_seq(args, json_or(Format::Plain)),
        Command::Useries { order } => {
            let u = u_series(order);
            if json_or(Format::Plain) {
                let coeffs: Vec<String> = u.coefficients().iter().map(ToString::to_string).collect();
                Ok(Outcome::ok(render(&json!({ "order": order, "coefficients": coeffs }))))
            } else {
                Ok(Outcome::ok(format!("{}\n", u.to_grouped_notation())))
            }
        }
        Command::Count(args) => run_count(args, json_or(Format::Plain)),
        Command::Brute { family: fa, method } => {
            let f = family(&fa)?;
            let (alpha, name) = match method {
                BruteMethod::Scan => (count_packings_bruteforce(&f)?, "scan"),
                BruteMethod::BooleanMoebius => (alpha_via_boolean_moebius(&f)?, "boolean-moebius"),
            };
            if json_or(Format::Json) {
                Ok(Outcome::ok(render(&json!({ "alpha": alpha.to_string(), "method": name }))))
            } else {
                Ok(Outcome::ok(format!("{alpha}\n")))
            }
        }
        Command::Cover { family: fa } => {
            let f = family(&fa)?;
            let count = count_coverings_bruteforce(&f)?;
            if json_or(Format::Json) {
                Ok(Outcome::ok(render(&json!({ "coverings": count.to_string(), "method": "scan" }))))
            } else {
                Ok(Outcome::ok(format!("{count}\n")))
            }
        }
        Command::GenericCheck { family: fa, budget } => {
            let f = family(&fa)?;
            let report = is_generic_with(&f, Strategy::Auto, budget)?;
            if json_or(Format::Json) {
                Ok(Outcome::ok(render(&report)))
            } else {
                let text = match &report.witness {
                    None => "generic\n".to_string(),
                    Some(w) => format!(
                        "not generic: ordering {:?}, elements {:?}\n",
                        w.ordering.iter().map(|i| i + 1).collect::<Vec<_>>(),
                        w.choices
                    ),
                };
                Ok(Outcome::ok(text))
            }
        }
        Command::Hf(cmd) => run_hf(cmd, json_or(Format::Plain)),
        Command::Check(cmd) => run_check(cmd, json_or(Format::Plain)),
        Command::Exp(cmd) => run_exp(cmd, json_or(Format::Json)),
        Command::Verify { level } => {
            let level = match level {
                VerifyLevel::Quick => Level::Quick,
                VerifyLevel::Full => Level::Full,
            };
            let report = verify(level);
            let text = if json_or(Format::Plain) {
                render(&report)
            } else {
                let mut s = String::new();
                for c in &report.checks {
                    let _ = writeln!(s, "{} {}: {}", if c.passed { "PASS" } else { "FAIL" }, c.name, c.detail);
                }
                let _ = writeln!(s, "{}", if report.passed { "PASS" } else { "FAIL" });
                s
            };
            Ok(Outcome::verdict(report.passed, text))
        }
    }
}

fn run_seq(args: SeqArgs, json: bool) -> Result<Outcome> {
    let values: Vec<String> = match args.kind.as_str() {
        "s" => s_sequence(args.max).iter().map(ToString::to_string).collect(),
        "S" => big_s_sequence(args.max).iter().map(ToString::to_string).collect(),
        "gamma" => {
            let sigma1 = parse_rational("sigma1", &args.sigma1)?;
            gamma_vectors(&sigma1, args.max)
                .iter()
                .map(|c| c.iter().map(ToString::to_string).collect::<Vec<_>>().join(" "))
                .collect()
        }
        "q" => {
            let x = parse_rational("x", &args.x)?;
            let y = parse_rational("y", &args.y)?;
            (2..=args.max).map(|i| q_specialize(i, &x, &y).to_string()).collect()
        }
        other => {
            let kind: WeightedSum = other.parse()?;
            weighted_sum_sequence(kind, args.max).iter().map(ToString::to_string).collect()
        }
    };
    if json {
        Ok(Outcome::ok(render(&json!({ "kind": args.kind, "values": values }))))
    } else {
        Ok(Outcome::ok(lines(values)))
    }
}

fn run_count(args: CountArgs, json: bool) -> Result<Outcome> {
    let (order, cards, generic) = match (&args.order, &args.group) {
        (Some(n), None) => {
            if args.cards.is_empty() {
                return Err(Error::Parse { what: "--cards", input: String::new() });
            }
            (n.clone(), args.cards.clone(), None)
        }
        (None, Some(g)) => {
            let group = FiniteGroup::from_descriptor(g)?;
            let f = SubsetFamily::parse(&group, args.sets.as_deref().unwrap_or_default())?;
            let generic = if args.assume_generic {
                None
            } else {
                let report = is_generic_with(&f, Strategy::Auto, DEFAULT_GENERICITY_BUDGET)?;
                if !report.generic {
                    let msg = "error: the family is not generic, so the formula does not apply \
                               (use --assume-generic to override)\n";
                    return Ok(Outcome::failure(1, msg.to_string()));
                }
                Some(true)
            };
            (BigInt::from(group.order()), f.cardinalities(), generic)
        }
        _ => return Err(Error::Parse { what: "count arguments (need --N/--cards or --group/--sets)", input: String::new() }),
    };
    if let Some(i) = cards.iter().position(|&c| c == 0) {
        return Err(Error::ZeroCardinality(i));
    }
    let alpha = packing_count(&order, &cards);
    if json {
        let mut v = json!({ "N": order.to_string(), "cards": cards, "alpha": alpha.to_string() });
        if let Some(g) = generic {
            v["generic_checked"] = Value::Bool(g);
        }
        Ok(Outcome::ok(render(&v)))
    } else {
        Ok(Outcome::ok(format!("{alpha}\n")))
    }
}

fn run_hf(cmd: HfCommand, json: bool) -> Result<Outcome> {
    match cmd {
        HfCommand::Enum { n } => {
            let forests = enumerate_hyperforests(n)?;
            if json {
                let views: Vec<_> = forests.iter().map(Hyperforest::to_view).collect();
                Ok(Outcome::ok(render(&json!({ "n": n, "count": forests.len(), "hyperforests": views }))))
            } else {
                Ok(Outcome::ok(lines(&forests)))
            }
        }
        HfCommand::Moebius { edges, n } => {
            let f = Hyperforest::parse(&edges, n)?;
            let closed = moebius_closed_form(&f);
            let recursive = moebius_recursive(&f)?;
            let agree = closed == recursive;
            let text = if json {
                render(&json!({
                    "hyperforest": f.to_view(),
                    "moebius": recursive.to_string(),
                    "closed_form": closed.to_string(),
                    "agree": agree,
                }))
            } else {
                format!("{recursive}\n")
            };
            Ok(Outcome::verdict(agree, text))
        }
        HfCommand::Alpha { order, cards } => {
            let alpha = alpha_via_hyperforest_sum(&order, &cards)?;
            if json {
                Ok(Outcome::ok(render(&json!({ "N": order.to_string(), "cards": cards, "alpha": alpha.to_string() }))))
            } else {
                Ok(Outcome::ok(format!("{alpha}\n")))
            }
        }
    }
}

fn run_check(cmd: CheckCommand, json: bool) -> Result<Outcome> {
    match cmd {
        CheckCommand::FunctionalEquation { order, folds } => {
            let report = check_functional_equation(&u_series(order), folds);
            let text = if json {
                render(&report)
            } else {
                match &report.mismatch {
                    None => "PASS\n".to_string(),
                    Some(m) => format!(
                        "FAIL at x^{}: coefficient of {:?} is {} on the left and {} on the right\n",
                        m.power, m.monomial, m.lhs, m.rhs
                    ),
                }
            };
            Ok(Outcome::verdict(report.holds, text))
        }
        CheckCommand::Stirling { n } => {
            let failed: Vec<usize> = (1..=n).filter(|&k| !first_row_stirling_check(k)).collect();
            let passed = failed.is_empty();
            let text = if json {
                render(&json!({ "n": n, "holds": passed, "failed": failed }))
            } else if passed {
                "PASS\n".to_string()
            } else {
                format!("FAIL at n = {failed:?}\n")
            };
            Ok(Outcome::verdict(passed, text))
        }
    }
}

fn run_exp(cmd: ExpCommand, json: bool) -> Result<Outcome> {
    match cmd {
        ExpCommand::ModP { p, terms } => {
            let residues = s_mod_p(p, terms)?;
            let period = find_period_mod_p(p, 1_000_000)?;
            let alpha = if p <= 11 { Some(modular_alpha_check(p)?) } else { None };
            if json {
                let mut v = json!({ "p": p, "residues": residues, "period": period });
                if let Some(a) = &alpha {
                    v["alpha_check"] = serde_json::to_value(a).expect("serializable");
                }
                Ok(Outcome::ok(render(&v)))
            } else {
                let mut s = format!(
                    "s(n) mod {p}: {}\npreperiod {}, period {}\n",
                    residues.iter().map(ToString::to_string).collect::<Vec<_>>().join(" "),
                    period.preperiod,
                    period.period
                );
                if let Some(a) = &alpha {
                    let _ = writeln!(s, "reference constants {}", if a.agree { "agree" } else { "disagree" });
                }
                Ok(Outcome::ok(s))
            }
        }
        ExpCommand::Asympt { n_max, precision } => {
            let report = asymptotic_report(n_max, precision)?;
            if json {
                return Ok(Outcome::ok(render(&report)));
            }
            let mut s = format!("{:>6} {:>14} {:>14} {:>14}\n", "n", "r(n)-1", "A1/n", "remainder");
            for r in &report.rows {
                let _ = writeln!(
                    s,
                    "{:>6} {:>14.6e} {:>14.6e} {:>14.6e}",
                    r.n, r.deviation, r.first_order, r.corrected_deviation
                );
            }
            if let Some(p) = &report.peak {
                let _ = writeln!(
                    s,
                    "argmax {} (ratio {:.5}), peak ratio {:.5}",
                    p.argmax, p.argmax_ratio, p.peak_ratio
                );
            }
            Ok(Outcome::ok(s))
        }
        ExpCommand::AlphaError { precision } => {
            let report = alpha_error_report(precision)?;
            if json {
                return Ok(Outcome::ok(render(&report)));
            }
            let rows = report.rows.iter().skip(1).map(|r| format!("{:>3} {:.8} {:.8}", r.n, r.scaled, r.predicted));
            Ok(Outcome::ok(lines(rows)))
        }
        ExpCommand::Ode { r, mx, mz } => {
            let report = ode_check_power_spec(r, mx, mz);
            let text = if json {
                render(&report)
            } else if report.holds {
                "PASS\n".to_string()
            } else {
                format!("FAIL: {:?}\n", report.mismatch)
            };
            Ok(Outcome::verdict(report.holds, text))
        }
    }
}
