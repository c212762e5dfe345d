use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use fig8_splittings::classify::{validate, CountMethod, RatioBand};
use fig8_splittings::report::{self, exit_code, Figure, Report, EXIT_IO};
use fig8_splittings::Error;

/// One-sided Heegaard splittings of even fillings of the figure-eight knot.
///
/// Set MOEBIUS_ORACLE=1 to count Möbius bands by exhaustive search.
#[derive(Parser)]
#[command(name = "fig8", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify the splitting surfaces of M(2p, q).
    Classify {
        #[arg(allow_hyphen_values = true)]
        two_p: i64,
        #[arg(allow_hyphen_values = true)]
        q: i64,
        #[arg(long)]
        json: bool,
    },
    /// Tabulate fillings by ratio band and check them against the band tables.
    Table {
        #[arg(long, conflicts_with = "band")]
        all: bool,
        /// neg-outer, neg-inner, mid, pos-inner or pos-outer.
        #[arg(long, value_parser = parse_band)]
        band: Option<RatioBand>,
        /// Largest |p|; 2p ranges over 0..=2*max_p.
        #[arg(long, default_value_t = 10)]
        max_p: u32,
        /// Largest |q|.
        #[arg(long, default_value_t = 9)]
        max_q: u32,
        /// Exit with status 5 if any filling violates its band's table rows.
        #[arg(long)]
        check: bool,
    },
    /// Print the chain of candidate slopes in the Möbius-band tree.
    Figure {
        #[arg(allow_hyphen_values = true)]
        two_p: i64,
        #[arg(allow_hyphen_values = true)]
        q: i64,
        #[arg(long)]
        dot: bool,
    },
    /// Write one JSON record per filling in a box to a JSON-lines file.
    Survey {
        #[arg(long)]
        p_max: u32,
        #[arg(long)]
        q_max: u32,
        #[arg(long)]
        out: PathBuf,
    },
}

fn parse_band(s: &str) -> Result<RatioBand, String> {
    RatioBand::from_name(s)
        .ok_or_else(|| format!("unknown band {s:?}; expected neg-outer, neg-inner, mid, pos-inner or pos-outer"))
}

fn fail(err: &Error) -> ExitCode {
    eprintln!("error: {err}");
    ExitCode::from(exit_code(err) as u8)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let method = CountMethod::from_env();
    match cli.command {
        Command::Classify { two_p, q, json } => {
            let report = match validate(two_p, q).and_then(|f| Report::build(f, method)) {
                Ok(r) => r,
                Err(e) => return fail(&e),
            };
            if json {
                println!("{}", report.to_json());
            } else {
                print!("{}", report.render_text());
            }
        }
        Command::Table {
            all: _,
            band,
            max_p,
            max_q,
            check,
        } => {
            let table = report::build_table(max_p, max_q, band, method);
            print!("{}", table.render_text());
            if check {
                if let Some(v) = table.violations.first() {
                    eprintln!("error: table violated at ({}, {}): {}", v.two_p, v.q, v.reason);
                    return ExitCode::from(5);
                }
            }
        }
        Command::Figure { two_p, q, dot } => {
            let fig = match validate(two_p, q).and_then(|f| Figure::for_filling(f, method)) {
                Ok(f) => f,
                Err(e) => return fail(&e),
            };
            if dot {
                print!("{}", fig.render_dot());
            } else {
                print!("{}", fig.render_text());
            }
        }
        Command::Survey { p_max, q_max, out } => {
            let records = report::survey_records(p_max, q_max, method);
            if let Err(e) = fs::write(&out, report::render_jsonl(&records)) {
                eprintln!("error: cannot write {}: {e}", out.display());
                return ExitCode::from(EXIT_IO as u8);
            }
        }
    }
    ExitCode::SUCCESS
}
