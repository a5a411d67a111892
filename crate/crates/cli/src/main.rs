use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use thiserror::Error;

use pdakit::analysis::{default_rows, make_table, AnalysisError, RowParams, TableFormat, TableId};
use pdakit::construct::{dual, mn_pda, recursive_extend, ConstructionError};
use pdakit::pda::ParseError;
use pdakit::sim::{run_scheme, DemandVector, SimError};
use pdakit::{parse, serialize, validate, PdaArray, ValidationReport};

/// Build, check and run placement delivery arrays for coded caching.
#[derive(Parser, Debug)]
#[command(name = "pdakit", version, about, long_about = None)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a PDA and write it to a file
    Construct {
        #[command(subcommand)]
        kind: ConstructKind,
    },
    /// Check the three PDA conditions for an array file
    Validate {
        #[arg(long = "in", value_name = "FILE")]
        input: PathBuf,
    },
    /// Run an array as a caching scheme on pseudorandom files
    Simulate {
        #[arg(long = "in", value_name = "FILE")]
        input: PathBuf,
        /// Number of files N in the library
        #[arg(long)]
        files: usize,
        /// File length in bytes
        #[arg(long)]
        len: usize,
        /// Comma-separated file index per user (default: user k wants file k mod N)
        #[arg(long, value_delimiter = ',')]
        demands: Option<Vec<usize>>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Emit one JSON object per user instead of text
        #[arg(long)]
        json: bool,
    },
    /// Print a comparison table
    Table {
        #[arg(long, value_enum)]
        id: TableArg,
        #[arg(long, value_enum, default_value_t = FormatArg::Csv)]
        format: FormatArg,
        /// Replace the default rows: K1,K2,t or K1,K2,t,q,m (repeatable)
        #[arg(long = "row", value_name = "PARAMS", value_parser = parse_row)]
        rows: Vec<RowParams>,
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
enum ConstructKind {
    /// The MN array on K users with cache parameter t
    Mn {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        t: usize,
        #[arg(long, value_name = "FILE")]
        out: PathBuf,
    },
    /// Add K2 users to an existing array
    Recursive {
        #[arg(long = "in", value_name = "FILE")]
        input: PathBuf,
        #[arg(long)]
        k2: usize,
        #[arg(long, value_name = "FILE")]
        out: PathBuf,
    },
    /// Swap the roles of packets and transmissions
    Dual {
        #[arg(long = "in", value_name = "FILE")]
        input: PathBuf,
        #[arg(long, value_name = "FILE")]
        out: PathBuf,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum TableArg {
    #[value(name = "mn_vs_ours")]
    MnVsOurs,
    Table2,
    Table3,
}

impl From<TableArg> for TableId {
    fn from(t: TableArg) -> Self {
        match t {
            TableArg::MnVsOurs => TableId::MnVsOurs,
            TableArg::Table2 => TableId::Table2,
            TableArg::Table3 => TableId::Table3,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FormatArg {
    Csv,
    #[value(alias = "markdown")]
    Md,
}

impl From<FormatArg> for TableFormat {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Csv => TableFormat::Csv,
            FormatArg::Md => TableFormat::Markdown,
        }
    }
}

fn parse_row(s: &str) -> Result<RowParams, String> {
    let nums = s
        .split(',')
        .map(|x| x.trim().parse::<u64>().map_err(|e| format!("{x:?}: {e}")))
        .collect::<Result<Vec<_>, _>>()?;
    match nums[..] {
        [k1, k2, t] => Ok(RowParams::new(k1, k2, t)),
        [k1, k2, t, q, m] => Ok(RowParams::new(k1, k2, t).with_family(q, m)),
        _ => Err("expected K1,K2,t or K1,K2,t,q,m".into()),
    }
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Parse { path: PathBuf, source: ParseError },
    #[error("{0}")]
    Construction(#[from] ConstructionError),
    #[error("{0}")]
    Analysis(#[from] AnalysisError),
    #[error("{0}")]
    Simulation(#[from] SimError),
    #[error("{0}")]
    Invalid(Box<ValidationReport>),
    #[error("array is not a PDA")]
    NotPda,
    #[error("{failed} of {users} users failed to decode")]
    DecodeFailed { failed: usize, users: usize },
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Io { .. } | CliError::Parse { .. } => 3,
            CliError::Invalid(_) | CliError::NotPda | CliError::DecodeFailed { .. } => 2,
            CliError::Construction(
                ConstructionError::InvalidInput(_) | ConstructionError::InvalidOutput(_),
            ) => 2,
            CliError::Simulation(SimError::InvalidPda(_)) => 2,
            _ => 1,
        }
    }
}

fn read_pda(path: &Path) -> Result<PdaArray, CliError> {
    let bytes = fs::read(path).map_err(|source| CliError::Io {
        path: path.to_owned(),
        source,
    })?;
    parse(&bytes).map_err(|source| CliError::Parse {
        path: path.to_owned(),
        source,
    })
}

fn write_file(path: &Path, contents: &str) -> Result<(), CliError> {
    fs::write(path, contents).map_err(|source| CliError::Io {
        path: path.to_owned(),
        source,
    })
}

fn summary(report: &ValidationReport) -> String {
    let m = report.memory_ratio;
    let r = report.rate;
    format!(
        "{} M/N={}/{} R={}/{}",
        report.params,
        m.numer(),
        m.denom(),
        r.numer(),
        r.denom()
    )
}

fn write_construction(p: &PdaArray, out: &Path) -> Result<String, CliError> {
    let report = validate(p);
    if !report.is_pda() {
        return Err(CliError::Invalid(Box::new(report)));
    }
    write_file(out, &serialize(p))?;
    Ok(format!("{} VALID\n", summary(&report)))
}

fn run(cli: Cli) -> Result<String, CliError> {
    match cli.command {
        Command::Construct { kind } => {
            let (p, out) = match kind {
                ConstructKind::Mn { k, t, out } => (mn_pda(k, t)?, out),
                ConstructKind::Recursive { input, k2, out } => {
                    (recursive_extend(&read_pda(&input)?, k2)?, out)
                }
                ConstructKind::Dual { input, out } => (dual(&read_pda(&input)?)?, out),
            };
            write_construction(&p, &out)
        }
        Command::Validate { input } => {
            let report = validate(&read_pda(&input)?);
            let text = format!("{}\n{report}\n", summary(&report));
            if report.is_pda() {
                Ok(text)
            } else {
                print!("{text}");
                Err(CliError::NotPda)
            }
        }
        Command::Simulate {
            input,
            files,
            len,
            demands,
            seed,
            json,
        } => {
            let p = read_pda(&input)?;
            if files == 0 {
                return Err(CliError::Usage("--files must be at least 1".into()));
            }
            let d = match demands {
                Some(d) => DemandVector::new(d, files)?,
                None => DemandVector::identity(p.cols(), files),
            };
            let report = run_scheme(&p, files, &d, len, seed)?;
            let text = if json {
                report.to_json_lines()
            } else {
                report.to_text()
            };
            let failed = report.users.iter().filter(|u| !u.ok).count();
            if failed > 0 {
                print!("{text}");
                return Err(CliError::DecodeFailed {
                    failed,
                    users: report.users.len(),
                });
            }
            Ok(text)
        }
        Command::Table {
            id,
            format,
            rows,
            out,
        } => {
            let id = TableId::from(id);
            let rows = if rows.is_empty() {
                default_rows(id)
            } else {
                rows
            };
            let text = make_table(id, &rows)?.render(format.into());
            match out {
                Some(path) => {
                    write_file(&path, &text)?;
                    Ok(String::new())
                }
                None => Ok(text),
            }
        }
    }
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
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
