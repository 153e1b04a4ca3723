use std::collections::BTreeMap;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use slchar::characters::{char_v_general, char_v_rect, char_fusion_v, char_fusion_w, string_functions, StringFunction};
use slchar::kostka::{kostka_matrix_pair, kostka_poly};
use slchar::verify::{as_rectangle, run_suite, Suite, VerifyOptions};
use slchar::weights::parse_int_list;
use slchar::{Error, RankedWeight, RectangularSequence, WeightGradedCharacter};

#[derive(Parser)]
#[command(name = "slchar", version, about = "Generalized Kostka polynomials and affine sl(r+1) characters")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// The generalized Kostka polynomial K_{λ,n}(q).
    Kostka {
        #[arg(long)]
        rank: usize,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, allow_hyphen_values = true)]
        n: String,
        #[command(flatten)]
        out: Output,
    },
    /// The ordered Kostka matrix (or its inverse) over one size class.
    KostkaMatrix {
        #[arg(long)]
        rank: usize,
        #[arg(long)]
        width: u64,
        #[arg(long)]
        size_max: u64,
        #[arg(long, default_value_t = 0)]
        residue: u64,
        #[arg(long)]
        inverse: bool,
        #[command(flatten)]
        out: Output,
    },
    /// Weight-graded character of the level-k module with highest weight λ.
    Char {
        #[arg(long)]
        rank: usize,
        #[arg(long)]
        level: u64,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, allow_hyphen_values = true)]
        max_degree: i64,
        #[arg(long, value_enum, default_value_t = FormulaChoice::Auto)]
        formula: FormulaChoice,
        /// Divide out the weight-dependent q-shift of each string function.
        #[arg(long)]
        strings: bool,
        #[command(flatten)]
        out: Output,
    },
    /// Character of the fusion product (or its principal subspace).
    FusionChar {
        #[arg(long)]
        rank: usize,
        #[arg(long)]
        level: u64,
        #[arg(long, allow_hyphen_values = true)]
        n: String,
        #[arg(long, allow_hyphen_values = true)]
        max_degree: i64,
        #[arg(long)]
        principal: bool,
        #[command(flatten)]
        out: Output,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long)]
        max_size: Option<u64>,
        #[arg(long, allow_hyphen_values = true)]
        max_degree: Option<i64>,
        #[command(flatten)]
        out: Output,
    },
}

#[derive(Args)]
struct Output {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormulaChoice {
    Auto,
    Rect,
    General,
}

enum Failure {
    Lib(Error),
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

type Outcome = Result<String, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(Failure::Verification(report)) => {
            print!("{report}");
            ExitCode::from(1)
        }
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::LevelViolation { .. } => 3,
        Error::Parse(_) | Error::InvalidArgument(_) | Error::NotDominant(_) => 2,
        Error::InexactDivision(_) | Error::Consistency(_) => 1,
    }
}

fn run(cmd: Command) -> Outcome {
    match cmd {
        Command::Kostka { rank, lambda, n, out } => {
            check_rank(rank)?;
            let lambda = weight_arg("--lambda", &lambda, rank)?;
            let n = RectangularSequence::new(counts_arg("--n", &n, rank)?)?;
            let p = kostka_poly(&lambda, &n)?;
            Ok(match out.format {
                Format::Text => format!("{p}\n"),
                Format::Json => json_line(&p.to_json()),
            })
        }
        Command::KostkaMatrix {
            rank,
            width,
            size_max,
            residue,
            inverse,
            out,
        } => {
            check_rank(rank)?;
            let pair = kostka_matrix_pair(rank, width, size_max, residue)?;
            let m = if inverse { &pair.1 } else { &pair.0 };
            Ok(match out.format {
                Format::Text => format!("{}\n{}\n", m.render_order(), m.render_text()),
                Format::Json => json_line(&m.to_json()),
            })
        }
        Command::Char {
            rank,
            level,
            lambda,
            max_degree,
            formula,
            strings,
            out,
        } => {
            check_rank(rank)?;
            check_degree(max_degree)?;
            let lambda = weight_arg("--lambda", &lambda, rank)?;
            lambda.require_dominant()?;
            lambda.require_restricted(level as i64)?;
            let ch = match (formula, as_rectangle(&lambda)) {
                (FormulaChoice::General, _) | (FormulaChoice::Auto, None) => char_v_general(&lambda, level, max_degree)?,
                (_, Some((l, beta))) => char_v_rect(rank, level, l, beta, max_degree)?,
                (FormulaChoice::Rect, None) => {
                    return Err(Error::InvalidArgument(format!(
                        "--formula rect needs a rectangular weight l·ω_β, got {lambda}"
                    ))
                    .into())
                }
            };
            if strings {
                let sf = string_functions(&ch, &lambda)?;
                Ok(match out.format {
                    Format::Text => render_strings(&sf),
                    Format::Json => json_line(&strings_json(&ch, &sf)),
                })
            } else {
                Ok(render_char(&ch, out.format))
            }
        }
        Command::FusionChar {
            rank,
            level,
            n,
            max_degree,
            principal,
            out,
        } => {
            check_rank(rank)?;
            check_degree(max_degree)?;
            let n = RectangularSequence::new(counts_arg("--n", &n, rank)?)?;
            n.require_level(level as i64)?;
            let ch = if principal {
                char_fusion_w(rank, level, &n, max_degree)?
            } else {
                char_fusion_v(rank, level, &n, max_degree)?
            };
            Ok(render_char(&ch, out.format))
        }
        Command::Verify {
            suite,
            max_size,
            max_degree,
            out,
        } => {
            if let Some(d) = max_degree {
                check_degree(d)?;
            }
            let suites = Suite::parse(&suite)?;
            let opts = VerifyOptions { max_size, max_degree };
            let reports: Vec<_> = suites.into_iter().map(|s| run_suite(s, opts)).collect();
            let ok = reports.iter().all(|r| r.ok());
            let text = match out.format {
                Format::Text => reports.iter().map(ToString::to_string).collect::<String>(),
                Format::Json => json_line(&reports_json(&reports)),
            };
            if ok {
                Ok(text)
            } else {
                Err(Failure::Verification(text))
            }
        }
    }
}

fn check_rank(rank: usize) -> Result<(), Error> {
    if rank == 0 {
        return Err(Error::InvalidArgument("--rank must be at least 1".into()));
    }
    Ok(())
}

fn check_degree(d: i64) -> Result<(), Error> {
    if d < 0 {
        return Err(Error::InvalidArgument(format!("--max-degree must be nonnegative, got {d}")));
    }
    Ok(())
}

fn weight_arg(flag: &str, s: &str, rank: usize) -> Result<RankedWeight, Error> {
    let v = parse_int_list(s)?;
    if v.len() != rank {
        return Err(Error::Parse(format!("{flag} has {} entries, expected {rank}", v.len())));
    }
    RankedWeight::new(v)
}

fn counts_arg(flag: &str, s: &str, rank: usize) -> Result<Vec<u64>, Error> {
    let w = weight_arg(flag, s, rank)?;
    w.coords()
        .iter()
        .map(|&x| u64::try_from(x).map_err(|_| Error::Parse(format!("{flag} entries must be nonnegative, got {x}"))))
        .collect()
}

fn json_line(v: &Value) -> String {
    format!("{v}\n")
}

fn render_char(ch: &WeightGradedCharacter, format: Format) -> String {
    match format {
        Format::Text => ch.render_text(),
        Format::Json => json_line(&ch.to_json()),
    }
}

fn weight_label(w: &RankedWeight) -> String {
    format!(
        "[{}]",
        w.coords().iter().map(i64::to_string).collect::<Vec<_>>().join(",")
    )
}

fn render_strings(sf: &BTreeMap<RankedWeight, StringFunction>) -> String {
    let mut out = String::new();
    for (w, f) in sf {
        if f.frac == 0.into() {
            out.push_str(&format!("{}: {}\n", weight_label(w), f.series));
        } else {
            out.push_str(&format!("{}: q^(-{}) * ({})\n", weight_label(w), f.frac, f.series));
        }
    }
    out
}

fn strings_json(ch: &WeightGradedCharacter, sf: &BTreeMap<RankedWeight, StringFunction>) -> Value {
    json!({
        "rank": ch.rank,
        "level": ch.level,
        "lambda": ch.label.coords(),
        "max_degree": ch.max_degree,
        "strings": sf
            .iter()
            .map(|(w, f)| json!({
                "weight": w.coords(),
                "frac": [f.frac.numer(), f.frac.denom()],
                "series": f.series.to_json(),
            }))
            .collect::<Vec<_>>(),
    })
}

fn reports_json(reports: &[slchar::verify::SuiteReport]) -> Value {
    Value::Array(
        reports
            .iter()
            .map(|r| {
                json!({
                    "suite": r.suite.name(),
                    "ok": r.ok(),
                    "checks": r.checks.iter().map(|c| json!({
                        "name": c.name,
                        "passed": c.passed,
                        "failed": c.failed,
                        "first_failure": c.first_failure,
                    })).collect::<Vec<_>>(),
                })
            })
            .collect(),
    )
}
