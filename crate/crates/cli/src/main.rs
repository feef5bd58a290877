use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use tancone::brsk::{brsk, brsk_inverse, NotchedBitableau};
use tancone::grid::{BetaGrid, GridMultiset};
use tancone::index::{admissible_pairs, enumerate_isotropic, FixedPointIndex};
use tancone::patch::ConeIdeal;
use tancone::poly::{FieldSpec, Fp, Rational};
use tancone::standard::enumerate_standard;
use tancone::verify::{
    sweep, verify_case, CaseSpec, Format, Report, SweepOptions, Timings, DEFAULT_SAMPLE,
};

#[derive(Parser)]
#[command(
    name = "tancone",
    version,
    about = "Groebner bases of tangent cones to Richardson varieties in the Lagrangian Grassmannian"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List I(d), the admissible pairs, and optionally standard monomials.
    Enum(EnumArgs),
    /// Print the generators and the good set of one ideal.
    Ideal(CaseArgs),
    /// Compare the good set with the Buchberger initial ideal.
    GbVerify(CaseArgs),
    /// Per-degree counting table.
    Count(CaseArgs),
    /// Apply BRSK to a multiset, or invert it on a bitableau.
    Brsk(BrskArgs),
    /// Verify every triple at a given d (sampled above d = 3).
    Sweep(SweepArgs),
}

#[derive(Args)]
struct Output {
    /// json or csv
    #[arg(long, default_value = "json")]
    format: String,
    /// Write to this file instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct CaseArgs {
    #[arg(long)]
    d: Option<usize>,
    #[arg(long)]
    alpha: String,
    #[arg(long)]
    beta: String,
    #[arg(long)]
    gamma: String,
    #[arg(long, default_value_t = 4)]
    max_degree: usize,
    /// Q or Fp:p
    #[arg(long, default_value = "Q")]
    field: String,
    /// Report runtime_ms as 0.
    #[arg(long)]
    no_timings: bool,
    #[command(flatten)]
    output: Output,
}

#[derive(Args)]
struct EnumArgs {
    #[arg(long)]
    d: usize,
    #[arg(long, requires_all = ["beta", "gamma"])]
    alpha: Option<String>,
    #[arg(long)]
    beta: Option<String>,
    #[arg(long)]
    gamma: Option<String>,
    #[arg(long, default_value_t = 2)]
    max_degree: usize,
    #[command(flatten)]
    output: Output,
}

#[derive(Args)]
struct BrskArgs {
    #[arg(long)]
    d: Option<usize>,
    #[arg(long)]
    beta: String,
    /// JSON list of {"r","c","mult"} entries.
    #[arg(long, conflicts_with = "bitableau")]
    multiset: Option<String>,
    /// JSON bitableau {"rows":[{"P","Q","sign"}]} to invert.
    #[arg(long)]
    bitableau: Option<String>,
    #[command(flatten)]
    output: Output,
}

#[derive(Args)]
struct SweepArgs {
    #[arg(long)]
    d: usize,
    #[arg(long, default_value_t = 4)]
    max_degree: usize,
    #[arg(long, default_value = "Q")]
    field: String,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Triples sampled when d > 3.
    #[arg(long, default_value_t = DEFAULT_SAMPLE)]
    sample: usize,
    #[arg(long)]
    no_timings: bool,
    #[command(flatten)]
    output: Output,
}

fn parse_index(d: Option<usize>, s: &str) -> Result<FixedPointIndex> {
    let v = match d {
        Some(d) => FixedPointIndex::parse(d, s),
        None => FixedPointIndex::parse_any(s),
    };
    v.with_context(|| format!("invalid index '{s}'"))
}

fn format_of(o: &Output) -> Result<Format> {
    Ok(o.format.parse::<Format>()?)
}

fn emit(o: &Output, text: &str) -> Result<()> {
    match &o.out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            let mut stdout = io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

fn emit_json(o: &Output, v: &Value) -> Result<()> {
    if format_of(o)? != Format::Json {
        bail!("this subcommand only writes json");
    }
    emit(o, &(serde_json::to_string_pretty(v)? + "\n"))
}

fn case_of(a: &CaseArgs) -> Result<CaseSpec> {
    let alpha = parse_index(a.d, &a.alpha)?;
    let beta = parse_index(a.d, &a.beta)?;
    let gamma = parse_index(a.d, &a.gamma)?;
    let field: FieldSpec = a.field.parse()?;
    Ok(CaseSpec::new(alpha, beta, gamma, field, a.max_degree)?)
}

fn timings(no: bool) -> Timings {
    if no {
        Timings::Omit
    } else {
        Timings::Record
    }
}

fn run(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Enum(a) => {
            let iso: Vec<String> = enumerate_isotropic(a.d)
                .iter()
                .map(|v| v.to_string())
                .collect();
            let pairs: Vec<Value> = admissible_pairs(a.d)
                .iter()
                .map(|w| json!({"top": w.top(), "bot": w.bot(), "representative": w.representative()}))
                .collect();
            let mut out = json!({"d": a.d, "isotropic": iso, "admissible_pairs": pairs});
            if let (Some(al), Some(be), Some(ga)) = (&a.alpha, &a.beta, &a.gamma) {
                let (al, be, ga) = (
                    parse_index(Some(a.d), al)?,
                    parse_index(Some(a.d), be)?,
                    parse_index(Some(a.d), ga)?,
                );
                tancone::patch::validate_triple(&al, &be, &ga)?;
                out["standard_monomials"] =
                    serde_json::to_value(enumerate_standard(&al, &be, &ga, a.max_degree))?;
            }
            emit_json(&a.output, &out)?;
            Ok(0)
        }
        Command::Ideal(a) => {
            let c = case_of(&a)?;
            let summary = match c.field {
                FieldSpec::Rational => {
                    ConeIdeal::<Rational>::new(&c.alpha, &c.beta, &c.gamma, ())?.summary()
                }
                FieldSpec::Prime(p) => {
                    ConeIdeal::<Fp>::new(&c.alpha, &c.beta, &c.gamma, p)?.summary()
                }
            };
            emit_json(&a.output, &serde_json::to_value(summary)?)?;
            Ok(0)
        }
        Command::GbVerify(a) => {
            let c = case_of(&a)?;
            let report = Report::new(vec![verify_case(&c, timings(a.no_timings))?]);
            emit(&a.output, &report.render(format_of(&a.output)?)?)?;
            Ok(report.exit_code() as u8)
        }
        Command::Count(a) => {
            let c = case_of(&a)?;
            let v = verify_case(&c, timings(a.no_timings))?;
            let text = match format_of(&a.output)? {
                Format::Json => {
                    serde_json::to_string_pretty(&json!({
                        "alpha": c.alpha, "beta": c.beta, "gamma": c.gamma,
                        "counts": v.counts, "counts_agree": v.counts_agree,
                    }))? + "\n"
                }
                Format::Csv => {
                    let mut s = String::from("degree,outside_good,special_multisets,bitableaux,standard_monomials,outside_init\n");
                    for r in &v.counts {
                        let [a, b, c, d, e] = r.values();
                        s += &format!("{},{a},{b},{c},{d},{e}\n", r.degree);
                    }
                    s
                }
            };
            emit(&a.output, &text)?;
            Ok(if v.counts_agree { 0 } else { 1 })
        }
        Command::Brsk(a) => {
            let beta = parse_index(a.d, &a.beta)?;
            let grid = BetaGrid::new(beta)?;
            let out = match (&a.multiset, &a.bitableau) {
                (Some(m), None) => {
                    let m: GridMultiset = serde_json::from_str(m).context("parsing --multiset")?;
                    serde_json::to_value(brsk(&m, &grid)?)?
                }
                (None, Some(t)) => {
                    let t: NotchedBitableau =
                        serde_json::from_str(t).context("parsing --bitableau")?;
                    serde_json::to_value(brsk_inverse(&t, &grid)?)?
                }
                _ => bail!("pass exactly one of --multiset or --bitableau"),
            };
            emit_json(&a.output, &out)?;
            Ok(0)
        }
        Command::Sweep(a) => {
            let opts = SweepOptions {
                d: a.d,
                max_degree: a.max_degree,
                field: a.field.parse()?,
                seed: a.seed,
                sample: a.sample,
                timings: timings(a.no_timings),
            };
            let report = Report::new(sweep(&opts)?);
            emit(&a.output, &report.render(format_of(&a.output)?)?)?;
            Ok(report.exit_code() as u8)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
