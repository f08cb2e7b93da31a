use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use parec_core::matfun::{determinant, immanant, permanent, recombinant, SquareMatrix};
use parec_core::pachar::{character, character_table_for, shapes, ShapeIndex, TableEntry};
use parec_core::scalars::rational;
use parec_core::verify::{self, Suite};
use parec_core::{diagrams, Error, IntegerPartition, PartitionDiagram, Rational};

/// Partition-algebra characters, immanants and recombinants in exact arithmetic.
#[derive(Parser, Debug)]
#[command(name = "parec", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, Default, ValueEnum)]
enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Character values of P_n(r) on every diagram of order n.
    CharTable {
        #[arg(long)]
        n: usize,
        /// Restrict to one shape, as a JSON array ("[]" for the empty shape).
        #[arg(long)]
        shape: Option<String>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// One character value.
    Char {
        #[arg(long)]
        shape: String,
        /// Diagram in text form, e.g. "{{1,2'},{2,1'}}".
        #[arg(long)]
        diagram: String,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Recombinant of a matrix, as a polynomial in r.
    Rec {
        #[arg(long)]
        matrix: PathBuf,
        #[arg(long)]
        shape: String,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Immanant of a matrix for a partition of its order.
    Imm {
        #[arg(long)]
        matrix: PathBuf,
        #[arg(long)]
        shape: String,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Determinant of a matrix.
    Det {
        #[arg(long)]
        matrix: PathBuf,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Permanent of a matrix.
    Perm {
        #[arg(long)]
        matrix: PathBuf,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Run the self-check suites.
    Verify {
        #[arg(long)]
        n: usize,
        /// table1, example, theorem, traces or all.
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Allow n = 4.
        #[arg(long)]
        slow: bool,
    },
    /// List every diagram of order n.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
}

/// Exit status 1 for bad input, 2 for a bound or guard violation.
#[derive(Debug)]
enum Failure {
    Input(String),
    Bound(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_bound_violation() {
            Failure::Bound(e.to_string())
        } else {
            Failure::Input(e.to_string())
        }
    }
}

fn parse_shape(s: &str) -> Result<IntegerPartition, Failure> {
    s.parse().map_err(|e: Error| Failure::Input(e.to_string()))
}

fn read_matrix(path: &Path) -> Result<SquareMatrix, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::Input(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text)
        .map_err(|e| Failure::Input(format!("malformed matrix file {}: {e}", path.display())))
}

fn to_json(value: &impl serde::Serialize) -> String {
    serde_json::to_string_pretty(value).expect("serializable")
}

fn print_rational(q: &Rational, format: Format) {
    match format {
        Format::Text => println!("{}", rational::format(q)),
        Format::Json => println!("{}", to_json(&json!({ "value": rational::format(q) }))),
    }
}

fn run(cli: Cli) -> Result<bool, Failure> {
    match cli.command {
        Command::CharTable { n, shape, format } => {
            let selected = match shape {
                Some(s) => vec![ShapeIndex::new(parse_shape(&s)?, n)?],
                None => shapes(n),
            };
            let table = character_table_for(n, &selected)?;
            match format {
                Format::Text => {
                    for e in &table {
                        println!("{}\t{}\t{}", e.shape, e.diagram, e.value);
                    }
                }
                Format::Json => println!("{}", to_json(&table)),
            }
        }
        Command::Char {
            shape,
            diagram,
            format,
        } => {
            let d: PartitionDiagram = diagram.parse()?;
            let ix = ShapeIndex::new(parse_shape(&shape)?, d.order())?;
            let value = character(&ix, &d)?;
            match format {
                Format::Text => println!("{value}"),
                Format::Json => println!(
                    "{}",
                    to_json(&TableEntry {
                        shape: ix.shape().clone(),
                        diagram: d,
                        value,
                    })
                ),
            }
        }
        Command::Rec {
            matrix,
            shape,
            format,
        } => {
            let a = read_matrix(&matrix)?;
            let ix = ShapeIndex::new(parse_shape(&shape)?, a.order())?;
            let value = recombinant(&ix, &a)?;
            match format {
                Format::Text => println!("{value}"),
                Format::Json => println!(
                    "{}",
                    to_json(&json!({ "shape": ix.shape(), "value": value }))
                ),
            }
        }
        Command::Imm {
            matrix,
            shape,
            format,
        } => {
            let a = read_matrix(&matrix)?;
            print_rational(&immanant(&parse_shape(&shape)?, &a)?, format);
        }
        Command::Det { matrix, format } => {
            print_rational(&determinant(&read_matrix(&matrix)?), format)
        }
        Command::Perm { matrix, format } => {
            print_rational(&permanent(&read_matrix(&matrix)?), format)
        }
        Command::Verify {
            n,
            suite,
            seed,
            slow,
        } => {
            let suite: Suite = suite.parse()?;
            let report = verify::run(&verify::Options {
                n,
                suite,
                seed,
                slow,
            })?;
            print!("{report}");
            return Ok(report.all_passed());
        }
        Command::Enumerate { n, format } => {
            let all = diagrams::enumerate_diagrams(n)?;
            match format {
                Format::Text => {
                    for d in &all {
                        println!("{d}");
                    }
                }
                Format::Json => println!("{}", to_json(&all)),
            }
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Bound(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
