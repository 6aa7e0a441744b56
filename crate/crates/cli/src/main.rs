//! `schubert`: Roberts verdicts for Plücker cones of Grassmannians, Chow-ring
//! arithmetic, tangent-bundle classes and Pfaffian tools, all in exact
//! rational arithmetic.
//!
//! Exit codes: 0 for an affirmative answer, 1 for a negative verdict, 2 for
//! usage or validation errors.

mod commands;
mod output;
mod parse;

use std::io::Write;
use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use grassmann_roberts::{AntisymmetricMatrix, GrassmannShape, Partition};
use serde_json::json;

use commands::{Bundle, BundleClass, Outcome};

const EXIT_USAGE: u8 = 2;
const DEFAULT_MAX_N: usize = 12;

#[derive(Parser)]
#[command(
    name = "schubert",
    version,
    about = "Exact Schubert calculus on Grassmannians and Roberts verdicts"
)]
struct Cli {
    /// Emit the JSON envelope instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Allow n above 12.
    #[arg(long, global = true)]
    force: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether the Plücker cone of G(d,n) is a Roberts ring.
    Roberts {
        d: usize,
        n: usize,
        /// Scan degrees until the first nonzero component only.
        #[arg(long)]
        verdict_only: bool,
    },
    /// Verdicts for every G(d,n) with n <= MAX_N.
    Table { max_n: usize },
    /// Chow-ring arithmetic on the Schubert basis.
    Chow {
        #[command(subcommand)]
        op: ChowOp,
    },
    /// Chern, character or Todd classes of a tautological bundle.
    Bundle(BundleArgs),
    /// Dimensions of the rational Chow groups of the cone over G(d,n).
    Cone { d: usize, n: usize },
    /// Pfaffian rings and Pfaffians of matrices.
    Pfaffian {
        #[command(subcommand)]
        op: PfaffianOp,
    },
}

#[derive(Args)]
struct Display {
    /// Draw a Young diagram for each term.
    #[arg(long)]
    diagrams: bool,
}

#[derive(Subcommand)]
enum ChowOp {
    /// Schubert basis, all degrees or one.
    Basis {
        d: usize,
        n: usize,
        #[arg(long)]
        degree: Option<usize>,
        #[command(flatten)]
        display: Display,
    },
    /// {λ}·σ_m by Pieri's rule.
    Pieri {
        d: usize,
        n: usize,
        partition: String,
        m: usize,
        #[arg(long)]
        mod_h: bool,
        #[command(flatten)]
        display: Display,
    },
    /// {a}·{b}.
    Multiply {
        d: usize,
        n: usize,
        a: String,
        b: String,
        #[arg(long)]
        mod_h: bool,
        #[command(flatten)]
        display: Display,
    },
    /// Canonical representative of a homogeneous class modulo h.
    Reduce {
        d: usize,
        n: usize,
        /// A term such as "[2]:1" or "[1,1]:-1/2"; repeat for sums.
        #[arg(long = "class", required = true)]
        class: Vec<String>,
        #[command(flatten)]
        display: Display,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum BundleChoice {
    Tangent,
    Quotient,
    Sub,
}

#[derive(Args)]
#[command(group(ArgGroup::new("kind").required(true).args(["todd", "chern", "ch"])))]
struct BundleArgs {
    d: usize,
    n: usize,
    #[arg(long)]
    todd: bool,
    #[arg(long)]
    chern: bool,
    #[arg(long)]
    ch: bool,
    #[arg(long, value_enum, default_value = "tangent")]
    bundle: BundleChoice,
    /// Highest degree printed; defaults to dim G.
    #[arg(long)]
    max_degree: Option<usize>,
    /// Also print each component modulo h.
    #[arg(long)]
    mod_h: bool,
}

#[derive(Subcommand)]
enum PfaffianOp {
    /// Generators, height and verdicts for B_m(n).
    Classify { m: usize, n: usize },
    /// Pfaffian and determinant of the matrix in FILE.
    Eval { file: std::path::PathBuf },
}

fn shape(d: usize, n: usize, force: bool) -> Result<GrassmannShape, String> {
    let s = GrassmannShape::new(d, n).map_err(|e| e.to_string())?;
    if n > DEFAULT_MAX_N && !force {
        return Err(format!("n = {n} exceeds {DEFAULT_MAX_N}; pass --force to run anyway"));
    }
    Ok(s)
}

fn partition(s: &str) -> Result<Partition, String> {
    s.parse().map_err(|e| format!("{e}"))
}

fn run(cli: &Cli) -> Result<(String, serde_json::Value, Outcome), String> {
    let force = cli.force;
    Ok(match &cli.command {
        Command::Roberts { d, n, verdict_only } => (
            "roberts".into(),
            json!({ "d": d, "n": n, "verdict_only": verdict_only }),
            commands::roberts(shape(*d, *n, force)?, *verdict_only),
        ),
        Command::Table { max_n } => {
            if *max_n > DEFAULT_MAX_N && !force {
                return Err(format!(
                    "max_n = {max_n} exceeds {DEFAULT_MAX_N}; pass --force to run anyway"
                ));
            }
            ("table".into(), json!({ "max_n": max_n }), commands::table(*max_n))
        }
        Command::Chow { op } => match op {
            ChowOp::Basis { d, n, degree, display } => {
                let s = shape(*d, *n, force)?;
                if let Some(k) = degree.filter(|&k| k > s.dim()) {
                    return Err(format!("degree {k} exceeds dim {s} = {}", s.dim()));
                }
                (
                    "chow basis".into(),
                    json!({ "d": d, "n": n, "degree": degree }),
                    commands::basis(s, *degree, display.diagrams),
                )
            }
            ChowOp::Pieri {
                d,
                n,
                partition: p,
                m,
                mod_h,
                display,
            } => (
                "chow pieri".into(),
                json!({ "d": d, "n": n, "partition": output::partition(&partition(p)?), "m": m, "mod_h": mod_h }),
                commands::pieri(shape(*d, *n, force)?, partition(p)?, *m, *mod_h, display.diagrams)?,
            ),
            ChowOp::Multiply {
                d,
                n,
                a,
                b,
                mod_h,
                display,
            } => {
                let (a, b) = (partition(a)?, partition(b)?);
                (
                    "chow multiply".into(),
                    json!({ "d": d, "n": n, "a": output::partition(&a), "b": output::partition(&b), "mod_h": mod_h }),
                    commands::multiply(shape(*d, *n, force)?, a, b, *mod_h, display.diagrams)?,
                )
            }
            ChowOp::Reduce { d, n, class, display } => {
                let s = shape(*d, *n, force)?;
                let c = parse::parse_class(s, class)?;
                (
                    "chow reduce".into(),
                    json!({ "d": d, "n": n, "class": output::class(&c) }),
                    commands::reduce(s, c, display.diagrams)?,
                )
            }
        },
        Command::Bundle(args) => {
            let kind = if args.todd {
                BundleClass::Todd
            } else if args.chern {
                BundleClass::Chern
            } else {
                BundleClass::Character
            };
            let which = match args.bundle {
                BundleChoice::Tangent => Bundle::Tangent,
                BundleChoice::Quotient => Bundle::Quotient,
                BundleChoice::Sub => Bundle::Sub,
            };
            (
                "bundle".into(),
                json!({ "d": args.d, "n": args.n, "max_degree": args.max_degree, "mod_h": args.mod_h }),
                commands::bundle(shape(args.d, args.n, force)?, which, kind, args.max_degree, args.mod_h)?,
            )
        }
        Command::Cone { d, n } => (
            "cone".into(),
            json!({ "d": d, "n": n }),
            commands::cone(shape(*d, *n, force)?),
        ),
        Command::Pfaffian { op } => match op {
            PfaffianOp::Classify { m, n } => (
                "pfaffian classify".into(),
                json!({ "m": m, "n": n }),
                commands::classify(*m, *n)?,
            ),
            PfaffianOp::Eval { file } => {
                let text = std::fs::read_to_string(file).map_err(|e| format!("{}: {e}", file.display()))?;
                let rows = parse::parse_matrix(&text)?;
                let matrix = AntisymmetricMatrix::new(rows).map_err(|e| e.to_string())?;
                (
                    "pfaffian eval".into(),
                    json!({ "file": file.display().to_string() }),
                    commands::eval(matrix),
                )
            }
        },
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((command, parameters, outcome)) => {
            let text = if cli.json {
                output::render(&output::envelope(&command, parameters, outcome.result)) + "\n"
            } else {
                outcome.text
            };
            // a closed pipe (e.g. `| head`) is not an error worth reporting
            let _ = std::io::stdout().lock().write_all(text.as_bytes());
            ExitCode::from(outcome.exit as u8)
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}
