use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use awdaha::algebras::{algebra, delta_q, Family};
use awdaha::coeff_matrix::CoeffMatrix;
use awdaha::morphisms::{braid, psi, BraidGen, Report};
use awdaha::verify::{run_suite, SUITES};
use awdaha::{specfile, Error, RewriteSystem};

#[derive(Parser)]
#[command(name = "awdaha", version, about = "Normal forms and identity checks in the Askey-Wilson algebra and its DAHA")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum AlgebraArg {
    Delta,
    Hhat,
}

impl From<AlgebraArg> for Family {
    fn from(a: AlgebraArg) -> Family {
        match a {
            AlgebraArg::Delta => Family::Delta,
            AlgebraArg::Hhat => Family::Hhat,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum GenArg {
    Rho,
    Sigma,
    Tau,
}

#[derive(Subcommand)]
enum Command {
    /// Print the normal form of an expression.
    Normalize {
        #[arg(long, value_enum, default_value_t = AlgebraArg::Delta)]
        algebra: AlgebraArg,
        /// Use the algebra with q replaced by q^-1.
        #[arg(long)]
        q_inverse: bool,
        /// Maximum number of rewrite steps.
        #[arg(long)]
        fuel: Option<usize>,
        expr: String,
    },
    /// Resolve every overlap of a rewriting system.
    Confluence {
        #[arg(long, value_enum, default_value_t = AlgebraArg::Delta)]
        algebra: AlgebraArg,
        /// Check a system read from a spec file instead.
        #[arg(long)]
        spec: Option<PathBuf>,
        /// Print each resolution.
        #[arg(long)]
        verbose: bool,
    },
    /// Image of an Askey-Wilson expression under the embedding into the DAHA.
    Psi { expr: String },
    /// Apply a braid group generator.
    Braid {
        #[arg(value_enum)]
        generator: GenArg,
        #[arg(long, value_enum, default_value_t = AlgebraArg::Hhat)]
        algebra: AlgebraArg,
        expr: String,
    },
    /// Coefficient matrix of a DAHA element.
    CoeffMatrix { expr: String },
    /// Enumerate irreducible words.
    Basis {
        #[arg(long, value_enum, default_value_t = AlgebraArg::Delta)]
        algebra: AlgebraArg,
        /// Word length.
        #[arg(long)]
        len: usize,
        /// Include all shorter words too.
        #[arg(long)]
        up_to: bool,
        /// Print only the number of words.
        #[arg(long)]
        count: bool,
    },
    /// Run a verification suite, or `all`.
    Verify { suite: String },
    /// Write a rewriting system as a plain-text algebra description.
    ExportSpec {
        #[arg(long, value_enum, default_value_t = AlgebraArg::Delta)]
        algebra: AlgebraArg,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
}

enum Failure {
    Verification,
    Usage(String),
    Fuel(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::NonTermination { .. } => Failure::Fuel(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

type Outcome = std::result::Result<(), Failure>;

fn print_report(r: &Report, format: Format) {
    if format == Format::Text {
        println!("{}: {}", r.name, if r.passed() { "PASS" } else { "FAIL" });
        for it in &r.items {
            println!("  [{}] {}", if it.pass { "ok" } else { "FAIL" }, it.item);
            if let Some(res) = &it.residual {
                println!("        {res}");
            }
        }
    }
}

fn run(cli: Cli) -> Outcome {
    let format = cli.format;
    match cli.command {
        Command::Normalize { algebra: a, q_inverse, fuel, expr } => {
            let alg = algebra(a.into(), q_inverse);
            let parsed = alg.parse(&expr)?;
            let nf = match fuel {
                Some(f) => alg.system().normalize_with_fuel(&parsed, f)?,
                None => alg.normalize(&parsed)?,
            };
            match format {
                Format::Text => println!("{nf}"),
                Format::Json => println!("{}", nf.to_json()),
            }
        }
        Command::Confluence { algebra: a, spec, verbose } => {
            let sys: RewriteSystem = match spec {
                Some(path) => {
                    let text = fs::read_to_string(&path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
                    specfile::import(&text)?
                }
                None => algebra(a.into(), false).system().clone(),
            };
            let conf = sys.check_confluence()?;
            let al = sys.alphabet();
            match format {
                Format::Text => {
                    println!("{} overlaps, {} unresolved", conf.ambiguities.len(), conf.unresolved().count());
                    for amb in &conf.ambiguities {
                        if verbose || !amb.resolved {
                            let status = if amb.resolved { "ok" } else { "UNRESOLVED" };
                            println!("  [{status}] {} -> {}", amb.word.display(al), amb.left);
                            if !amb.resolved {
                                println!("        other way: {}", amb.right);
                            }
                        }
                    }
                }
                Format::Json => {
                    let items: Vec<_> = conf
                        .ambiguities
                        .iter()
                        .map(|a| json!({"word": a.word.display(al), "resolved": a.resolved, "left": a.left.to_string(), "right": a.right.to_string()}))
                        .collect();
                    println!("{}", json!({"overlaps": items, "confluent": conf.all_resolved()}));
                }
            }
            if !conf.all_resolved() {
                return Err(Failure::Verification);
            }
        }
        Command::Psi { expr } => {
            let img = psi()?.apply(&delta_q().parse(&expr)?)?;
            match format {
                Format::Text => println!("{img}"),
                Format::Json => println!("{}", img.to_json()),
            }
        }
        Command::Braid { generator, algebra: a, expr } => {
            let g = match generator {
                GenArg::Rho => BraidGen::Rho,
                GenArg::Sigma => BraidGen::Sigma,
                GenArg::Tau => BraidGen::Tau,
            };
            let family: Family = a.into();
            let img = braid(g, family)?.apply(&algebra(family, false).parse(&expr)?)?;
            match format {
                Format::Text => println!("{img}"),
                Format::Json => println!("{}", img.to_json()),
            }
        }
        Command::CoeffMatrix { expr } => {
            let m = CoeffMatrix::of(&algebra(Family::Hhat, false).parse(&expr)?)?;
            match format {
                Format::Text => print!("{}", m.to_table()),
                Format::Json => println!("{}", m.to_json()),
            }
        }
        Command::Basis { algebra: a, len, up_to, count } => {
            let alg = algebra(a.into(), false);
            let words = if up_to { alg.enumerate_basis(len) } else { alg.enumerate_basis_exact(len) };
            let shown: Vec<String> = words.iter().map(|w| w.display(alg.alphabet())).collect();
            match (format, count) {
                (Format::Text, true) => println!("{}", words.len()),
                (Format::Text, false) => shown.iter().for_each(|w| println!("{w}")),
                (Format::Json, true) => println!("{}", json!({"count": words.len()})),
                (Format::Json, false) => println!("{}", json!({"count": words.len(), "words": shown})),
            }
        }
        Command::Verify { suite } => {
            let names: Vec<&str> = if suite == "all" {
                SUITES.to_vec()
            } else if SUITES.contains(&suite.as_str()) {
                vec![suite.as_str()]
            } else {
                return Err(Failure::Usage(format!("unknown suite `{suite}`; expected one of: all, {}", SUITES.join(", "))));
            };
            let mut reports = Vec::new();
            for name in names {
                let r = run_suite(name)?;
                print_report(&r, format);
                reports.push(r);
            }
            let ok = reports.iter().all(Report::passed);
            if format == Format::Json {
                println!("{}", json!({"passed": ok, "suites": reports}));
            }
            if !ok {
                return Err(Failure::Verification);
            }
        }
        Command::ExportSpec { algebra: a, output } => {
            let text = specfile::export(algebra(a.into(), false).system());
            match output {
                Some(path) => fs::write(&path, text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?,
                None => print!("{text}"),
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Fuel(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
