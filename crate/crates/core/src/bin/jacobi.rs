//! Command-line front end.
//!
//! Exit codes: 0 success or affirmative verdict, 1 negative verdict,
//! 2 usage or parse error, 3 internal decider disagreement.

use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use jacobi::error::Error;
use jacobi::free_algebra::expand_bracket;
use jacobi::jacobi::{subset_balance_table, verify_element_report};
use jacobi::lattice::jacobi_lattice_basis;
use jacobi::search::{enumerate_jacobi_subsets, verify_subset_report, SearchOptions};
use jacobi::shuffles::omega;
use jacobi::text::{parse_element, parse_subsets, write_element_stanzas, write_subsets};
use jacobi::Permutation;

#[derive(Parser)]
#[command(name = "jacobi", version, about = "Jacobi elements and Jacobi subsets of the symmetric group")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the bracket element ω_n.
    Omega { n: usize },
    /// Decide whether an element of ℤ[S_n] is Jacobi (reads stdin without FILE).
    CheckElement { file: Option<PathBuf> },
    /// Decide whether subsets of S_n are Jacobi (reads stdin without FILE).
    CheckSubset {
        file: Option<PathBuf>,
        /// Print |T ∩ τI⁺| and |T ∩ τI⁻| for every τ.
        #[arg(long)]
        table: bool,
    },
    /// Print a ℤ-basis of the Jacobi lattice J_n.
    Basis { n: usize },
    /// List Jacobi subsets of S_n.
    Search {
        n: usize,
        #[arg(long)]
        max_size: Option<usize>,
        #[arg(long)]
        nonempty: bool,
        #[arg(long)]
        containing_identity: bool,
        #[arg(long, default_value_t = 1)]
        threads: usize,
    },
    /// Expand the left-normed bracket [x_{p1}, …, x_{pn}].
    Expand {
        #[arg(required = true, num_args = 1..)]
        images: Vec<usize>,
    },
}

const EXIT_NEGATIVE: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_INTERNAL: u8 = 3;

fn fail(err: Error) -> ExitCode {
    eprintln!("error: {err}");
    match err {
        Error::DeciderDisagreement(_) => ExitCode::from(EXIT_INTERNAL),
        _ => ExitCode::from(EXIT_USAGE),
    }
}

fn read_input(file: Option<&PathBuf>) -> Result<String, ExitCode> {
    let mut text = String::new();
    let result = match file {
        Some(path) if path.as_os_str() != "-" => std::fs::read_to_string(path).map(|s| text = s),
        _ => io::stdin().read_to_string(&mut text).map(|_| ()),
    };
    match result {
        Ok(()) => Ok(text),
        Err(e) => {
            eprintln!("error: cannot read input: {e}");
            Err(ExitCode::from(EXIT_USAGE))
        }
    }
}

fn emit(out: &str) -> ExitCode {
    let mut stdout = io::stdout().lock();
    if stdout.write_all(out.as_bytes()).and_then(|_| stdout.flush()).is_err() {
        return ExitCode::from(EXIT_USAGE);
    }
    ExitCode::SUCCESS
}

fn verdict_code(all_jacobi: bool, printed: ExitCode) -> ExitCode {
    if printed != ExitCode::SUCCESS {
        return printed;
    }
    if all_jacobi {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_NEGATIVE)
    }
}

fn check_element(file: Option<&PathBuf>) -> ExitCode {
    let text = match read_input(file) {
        Ok(t) => t,
        Err(code) => return code,
    };
    let element = match parse_element(&text, None) {
        Ok(e) => e,
        Err(e) => return fail(e),
    };
    let report = match verify_element_report(&element) {
        Ok(r) => r,
        Err(e) => return fail(e),
    };
    let mut out = String::new();
    out.push_str(if report.is_jacobi() { "JACOBI\n" } else { "NOT JACOBI\n" });
    if let Some(w) = report.witness() {
        out.push_str(&format!("witness: tau = {}, value = {}\n", w.tau, w.value));
    }
    verdict_code(report.is_jacobi(), emit(&out))
}

fn check_subset(file: Option<&PathBuf>, table: bool) -> ExitCode {
    let text = match read_input(file) {
        Ok(t) => t,
        Err(code) => return code,
    };
    let (n, subsets) = match parse_subsets(&text, None) {
        Ok(v) => v,
        Err(e) => return fail(e),
    };
    let mut out = String::new();
    let mut all_jacobi = true;
    for (i, subset) in subsets.iter().enumerate() {
        if i > 0 {
            out.push_str("---\n");
        }
        let report = match verify_subset_report(subset, n) {
            Ok(r) => r,
            Err(e) => return fail(e),
        };
        all_jacobi &= report.is_jacobi();
        out.push_str(if report.is_jacobi() { "JACOBI\n" } else { "NOT JACOBI\n" });
        if let Some(w) = &report.subset.witness {
            out.push_str(&format!(
                "witness: tau = {}, plus = {}, minus = {}\n",
                w.tau, w.plus, w.minus
            ));
        }
        if table {
            let rows = match subset_balance_table(subset, n) {
                Ok(r) => r,
                Err(e) => return fail(e),
            };
            out.push_str("# tau | plus minus\n");
            for b in rows {
                out.push_str(&format!("{} | {} {}\n", b.tau, b.plus, b.minus));
            }
        }
    }
    verdict_code(all_jacobi, emit(&out))
}

fn run(cli: Cli) -> ExitCode {
    match cli.command {
        Command::Omega { n } => match omega(n) {
            Ok(w) => emit(&w.to_string()),
            Err(e) => fail(e),
        },
        Command::CheckElement { file } => check_element(file.as_ref()),
        Command::CheckSubset { file, table } => check_subset(file.as_ref(), table),
        Command::Basis { n } => match jacobi_lattice_basis(n) {
            Ok(b) => {
                eprintln!("rank {}", b.rank());
                emit(&write_element_stanzas(b.basis()))
            }
            Err(e) => fail(e),
        },
        Command::Search {
            n,
            max_size,
            nonempty,
            containing_identity,
            threads,
        } => {
            let options = SearchOptions {
                max_size,
                require_nonempty: nonempty,
                require_identity: containing_identity,
                threads,
            };
            match enumerate_jacobi_subsets(n, &options) {
                Ok(found) => {
                    eprintln!("{} subsets", found.len());
                    emit(&write_subsets(&found))
                }
                Err(e) => fail(e),
            }
        }
        Command::Expand { images } => match Permutation::new(&images) {
            Ok(sigma) => emit(&expand_bracket(&sigma).to_string()),
            Err(e) => fail(e),
        },
    }
}

fn main() -> ExitCode {
    run(Cli::parse())
}
