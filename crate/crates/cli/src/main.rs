//! `orderability`: decide bi-orderability criteria from the command line.
//!
//! Exit codes: `classify` returns 0 BiOrderable, 1 NotBiOrderable,
//! 2 Unknown, 3 Trivial. `matrix`, `lspace check` and `lspace sweep` return
//! 0 when the criterion holds, 1 when it fails, 2 when it was not evaluated.
//! Usage errors exit 64, invalid data 65, unreadable input 66.

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgAction, Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use knot_orderability::census::{self, reference, CsvSchema, ReportFormat};
use knot_orderability::knot_models::{torus_knot_poly, TorusParams};
use knot_orderability::lspace::{self, LSpaceSequence, Recognition};
use knot_orderability::orderability::{
    classify_fibred_knot, full_criterion, necessary_condition, IntegerMatrix, Verdict, DEFAULT_DEGREE_CAP,
};
use knot_orderability::poly::{parse_poly, LaurentPolynomial};
use knot_orderability::roots::positive_roots_decimal;

const EXIT_USAGE: u8 = 64;
const EXIT_DATA: u8 = 65;
const EXIT_NO_INPUT: u8 = 66;

#[derive(Parser)]
#[command(name = "orderability", version, about = "Bi-orderability criteria for knot groups and fibred 3-manifolds")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct PolyArg {
    /// Polynomial in t, e.g. "1-3t+t^2"; read from stdin when absent.
    #[arg(long)]
    poly: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a knot group from its Alexander polynomial.
    Classify {
        #[command(flatten)]
        poly: PolyArg,
        /// Whether the knot is fibred.
        #[arg(long, action = ArgAction::Set, default_value_t = true)]
        fibred: bool,
    },
    /// Positive real roots, rounded, with multiplicities.
    Roots {
        #[command(flatten)]
        poly: PolyArg,
        #[arg(long, default_value_t = 5, value_parser = clap::value_parser!(u32).range(1..=50))]
        decimals: u32,
    },
    /// L-space polynomials: generate, recognize, or sweep.
    Lspace {
        #[command(subcommand)]
        command: LspaceCommand,
    },
    /// Eigenvalue criteria for an integer matrix acting on homology.
    Matrix {
        /// Row-major entries, rows separated by ';', e.g. "2,1;1,1".
        #[arg(long, allow_hyphen_values = true)]
        entries: String,
        /// Also check every irreducible factor of the characteristic polynomial.
        #[arg(long)]
        full: bool,
        /// Largest characteristic polynomial degree to factor.
        #[arg(long, default_value_t = DEFAULT_DEGREE_CAP)]
        degree_cap: usize,
    },
    /// Classify every fibred knot of a knot table.
    Census {
        /// Delimited knot table.
        #[arg(long, required_unless_present = "builtin", conflicts_with = "builtin")]
        csv: Option<PathBuf>,
        /// Column configuration file (key = value lines).
        #[arg(long)]
        schema: Option<PathBuf>,
        /// Use a bundled table instead of --csv.
        #[arg(long, value_enum)]
        builtin: Option<Builtin>,
        /// Ignore knots with more crossings.
        #[arg(long)]
        max_crossings: Option<u32>,
        /// Compare against the bundled up-to-12-crossing outcome lists.
        #[arg(long)]
        diff_reference: bool,
    },
    /// Alexander polynomial and classification of a torus knot.
    Torus {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        q: u32,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Builtin {
    #[value(name = "fibred-up-to-8")]
    FibredUpTo8,
}

#[derive(Subcommand)]
enum LspaceCommand {
    /// Polynomial of a sequence such as 1,3,5.
    Gen { sequence: String },
    /// Whether a polynomial has L-space form.
    Check {
        #[command(flatten)]
        poly: PolyArg,
    },
    /// Check every sequence up to the given bounds for positive roots.
    Sweep {
        #[arg(long, default_value_t = 5)]
        k_max: usize,
        #[arg(long, default_value_t = 10)]
        n_max: u64,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Self { code: EXIT_USAGE, message: message.into() }
    }
    fn data(message: impl ToString) -> Self {
        Self { code: EXIT_DATA, message: message.to_string() }
    }
    fn input(message: impl ToString) -> Self {
        Self { code: EXIT_NO_INPUT, message: message.to_string() }
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::new().filter_or("ORDERABILITY_LOG", "warn")).init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok((out, code)) => {
            print!("{out}");
            ExitCode::from(code)
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

type Outcome = Result<(String, u8), Failure>;

fn run(cli: &Cli) -> Outcome {
    let json = cli.format == Format::Json;
    match &cli.command {
        Command::Classify { poly, fibred } => classify(&read_poly(poly)?, *fibred, json),
        Command::Roots { poly, decimals } => roots(&read_poly(poly)?, *decimals, json),
        Command::Lspace { command } => match command {
            LspaceCommand::Gen { sequence } => lspace_gen(sequence, json),
            LspaceCommand::Check { poly } => lspace_check(&read_poly(poly)?, json),
            LspaceCommand::Sweep { k_max, n_max } => lspace_sweep(*k_max, *n_max, json),
        },
        Command::Matrix { entries, full, degree_cap } => matrix(entries, *full, *degree_cap, json),
        Command::Census { csv, schema, builtin, max_crossings, diff_reference } => {
            let records = match (csv, builtin) {
                (Some(path), _) => {
                    let schema = match schema {
                        Some(p) => CsvSchema::from_file(p).map_err(Failure::input)?,
                        None => CsvSchema::default(),
                    };
                    let loaded = census::load_csv(path, &schema).map_err(|e| match e {
                        census::CensusError::MissingColumn { .. } | census::CensusError::Csv(_) => Failure::data(e),
                        _ => Failure::input(e),
                    })?;
                    if !loaded.skipped.is_empty() {
                        eprintln!("skipped {} unreadable rows", loaded.skipped.len());
                        for s in &loaded.skipped {
                            log::info!("line {} ({}): {}", s.line, s.name, s.reason);
                        }
                    }
                    loaded.records
                }
                (None, Some(Builtin::FibredUpTo8)) => reference::fibred_up_to_8(),
                (None, None) => return Err(Failure::usage("--csv or --builtin is required")),
            };
            let records = match max_crossings {
                Some(max) => census::filter_max_crossings(records, *max),
                None => records,
            };
            census_cmd(&records, *diff_reference, json)
        }
        Command::Torus { p, q } => torus(*p, *q, json),
    }
}

fn read_poly(arg: &PolyArg) -> Result<LaurentPolynomial, Failure> {
    let text = match &arg.poly {
        Some(p) => p.clone(),
        None => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s).map_err(Failure::input)?;
            s
        }
    };
    let text = text.trim();
    if text.is_empty() {
        return Err(Failure::usage("no polynomial given (use --poly or stdin)"));
    }
    parse_poly(text).map_err(Failure::data)
}

fn render(value: Value) -> String {
    format!("{}\n", serde_json::to_string_pretty(&value).expect("json"))
}

fn verdict_code(v: Verdict) -> u8 {
    match v {
        Verdict::BiOrderable => 0,
        Verdict::NotBiOrderable => 1,
        Verdict::Unknown => 2,
        Verdict::Trivial => 3,
    }
}

fn classify(p: &LaurentPolynomial, fibred: bool, json: bool) -> Outcome {
    let c = classify_fibred_knot(p, fibred).map_err(Failure::data)?;
    let out = if json {
        let mut v = serde_json::to_value(c).expect("json");
        v["alexander"] = json!(p.normalize().map_err(Failure::data)?.poly.to_string());
        v["fibred"] = json!(fibred);
        render(v)
    } else if c.verdict == Verdict::Trivial {
        "Trivial\n".to_string()
    } else {
        format!("{c}\n")
    };
    Ok((out, verdict_code(c.verdict)))
}

fn roots(p: &LaurentPolynomial, decimals: u32, json: bool) -> Outcome {
    let roots = positive_roots_decimal(p, decimals).map_err(Failure::data)?;
    let out = if json {
        let list: Vec<Value> = roots
            .iter()
            .map(|(value, m)| json!({ "value": value, "multiplicity": m }))
            .collect();
        render(json!({ "decimals": decimals, "positive_roots": list }))
    } else if roots.is_empty() {
        "(none)\n".to_string()
    } else {
        roots
            .iter()
            .map(|(value, m)| if *m > 1 { format!("{value} (mult {m})\n") } else { format!("{value}\n") })
            .collect()
    };
    Ok((out, 0))
}

fn lspace_gen(sequence: &str, json: bool) -> Outcome {
    let seq = LSpaceSequence::parse(sequence).map_err(Failure::data)?;
    let poly = lspace::lspace_poly(&seq);
    let out = if json {
        render(json!({
            "sequence": seq.as_slice(),
            "grouped": seq.display_grouped(),
            "polynomial": poly.to_string(),
        }))
    } else {
        format!("{}\n", seq.display_grouped())
    };
    Ok((out, 0))
}

fn lspace_check(p: &LaurentPolynomial, json: bool) -> Outcome {
    let r = lspace::recognize_lspace_form(p).map_err(Failure::data)?;
    let (out, code) = match (&r, json) {
        (Recognition::Matches(seq), false) => (format!("matches L-space form, seq=[{seq}]\n"), 0),
        (Recognition::NotOfForm(why), false) => (format!("not of L-space form: {why}\n"), 1),
        (Recognition::Matches(seq), true) => {
            (render(json!({ "matches": true, "sequence": seq.as_slice() })), 0)
        }
        (Recognition::NotOfForm(why), true) => {
            (render(json!({ "matches": false, "reason": why, "message": why.to_string() })), 1)
        }
    };
    Ok((out, code))
}

fn lspace_sweep(k_max: usize, n_max: u64, json: bool) -> Outcome {
    if k_max == 0 || n_max == 0 {
        return Err(Failure::usage("--k-max and --n-max must be positive"));
    }
    let lines = lspace::sweep(k_max, n_max);
    let failures: Vec<_> = lines.iter().filter(|l| !l.ok()).collect();
    let code = u8::from(!failures.is_empty());
    let out = if json {
        render(json!({
            "k_max": k_max,
            "n_max": n_max,
            "sequences": lines.len(),
            "failures": failures,
        }))
    } else if failures.is_empty() {
        format!("all {} sequences: 0 positive roots\n", lines.len())
    } else {
        let mut s: String = failures.iter().map(|l| format!("{l}\n")).collect();
        s.push_str(&format!("{} of {} sequences fail\n", failures.len(), lines.len()));
        s
    };
    Ok((out, code))
}

fn matrix(entries: &str, full: bool, degree_cap: usize, json: bool) -> Outcome {
    let m = IntegerMatrix::parse(entries).map_err(Failure::data)?;
    let report = if full {
        full_criterion(&m, degree_cap).map_err(Failure::data)?
    } else {
        necessary_condition(&m)
    };
    let holds = if full { report.full_criterion } else { Some(report.has_positive_real_eigenvalue) };
    let code = match holds {
        Some(true) => 0,
        Some(false) => 1,
        None => 2,
    };
    if json {
        return Ok((render(serde_json::to_value(&report).expect("json")), code));
    }
    let mut out = format!("characteristic polynomial: {}\n", report.char_poly);
    out.push_str(if report.has_positive_real_eigenvalue {
        "positive real eigenvalue: yes\n"
    } else {
        "positive real eigenvalue: no — cannot preserve any bi-ordering\n"
    });
    if full {
        if let Some(factors) = &report.irreducible_factors {
            out.push_str("irreducible factors:\n");
            for f in factors {
                let mult = if f.multiplicity > 1 { format!(" (mult {})", f.multiplicity) } else { String::new() };
                let yes = if f.has_positive_root { "yes" } else { "no" };
                out.push_str(&format!("  {}{mult}  positive root: {yes}\n", f.factor));
            }
        }
        out.push_str(match report.full_criterion {
            Some(true) => "full criterion: holds\n",
            Some(false) => "full criterion: fails\n",
            None => "full criterion: not evaluated (degree above cap)\n",
        });
    }
    Ok((out, code))
}

fn census_cmd(records: &[census::KnotRecord], diff_reference: bool, json: bool) -> Outcome {
    let report = census::run_census(records);
    let diff = diff_reference.then(|| {
        census::diff_against(
            &report,
            &reference::bi_orderable_up_to_12(),
            &reference::not_bi_orderable_up_to_12(),
        )
    });
    let out = if json {
        let mut v = serde_json::to_value(&report).expect("json");
        if let Some(d) = &diff {
            v["reference_diff"] = serde_json::to_value(d).expect("json");
        }
        render(v)
    } else {
        let mut s = census::emit_report(&report, ReportFormat::Text);
        if let Some(d) = &diff {
            if d.is_empty() {
                s.push_str("\nreference diff: none\n");
            } else {
                s.push_str("\nreference diff:\n");
                for line in d.lines() {
                    s.push_str(&format!("  {line}\n"));
                }
            }
        }
        s
    };
    Ok((out, 0))
}

fn torus(p: u32, q: u32, json: bool) -> Outcome {
    let tp = TorusParams::new(p, q).map_err(Failure::data)?;
    let delta = torus_knot_poly(tp);
    let c = classify_fibred_knot(&delta, true).map_err(Failure::data)?;
    let out = if json {
        let mut v = serde_json::to_value(c).expect("json");
        v["p"] = json!(tp.p());
        v["q"] = json!(tp.q());
        v["alexander"] = json!(delta.to_string());
        render(v)
    } else {
        format!("{delta}  {}\n", c.verdict)
    };
    Ok((out, 0))
}
