use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use singinv::Config;
use singinv_cli::corpus::{matrix, run_corpus};
use singinv_cli::{exit_status, run_session, Record};

#[derive(Parser)]
#[command(name = "singinv", version, about = "Local invariants of 1-forms along hypersurface germs")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args, Clone, Copy)]
struct Budget {
    /// Largest degree bound for the linear-algebra oracle.
    #[arg(long, default_value_t = 64)]
    bound: u32,
    /// Reduction steps per standard basis.
    #[arg(long, default_value_t = 200_000)]
    steps: usize,
    /// Initial series truncation for pullbacks.
    #[arg(long, default_value_t = 64)]
    trunc: u32,
    /// JSON Lines instead of a table.
    #[arg(long)]
    json: bool,
}

impl Budget {
    fn config(&self) -> Config {
        Config {
            max_steps: self.steps,
            truncation: self.trunc,
            max_truncation: Config::default().max_truncation.max(self.trunc),
            oracle_bound: self.bound,
        }
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Run a session file ("-" for stdin).
    Run {
        file: PathBuf,
        #[command(flatten)]
        budget: Budget,
        /// Add wall-clock time per directive (breaks byte-identical output).
        #[arg(long)]
        timing: bool,
    },
    /// Run the built-in example corpus.
    Corpus {
        #[command(flatten)]
        budget: Budget,
        /// Only cases whose name or group contains this string.
        #[arg(long)]
        filter: Option<String>,
        /// Shift every expected value by one; every such check must fail.
        #[arg(long)]
        perturb: bool,
    },
    /// List the directives a session may use.
    Directives,
}

fn emit(records: &[Record], json: bool) {
    for r in records {
        if json {
            println!("{}", r.to_json());
        } else {
            print!("{}", r.to_table());
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.cmd {
        Cmd::Run { file, budget, timing } => {
            let text = if file.as_os_str() == "-" {
                std::io::read_to_string(std::io::stdin())
            } else {
                std::fs::read_to_string(&file)
            };
            match text {
                Err(e) => {
                    eprintln!("{}: {e}", file.display());
                    1
                }
                Ok(text) => match run_session(&text, &budget.config(), timing) {
                    Err(e) => {
                        if budget.json {
                            let err = serde_json::json!({"error": {"kind": "parse", "line": e.line, "column": e.col, "message": e.msg}});
                            println!("{err}");
                        } else {
                            eprintln!("{}: {e}", file.display());
                        }
                        1
                    }
                    Ok(records) => {
                        emit(&records, budget.json);
                        exit_status(&records)
                    }
                },
            }
        }
        Cmd::Corpus { budget, filter, perturb } => {
            let out = run_corpus(filter.as_deref(), &budget.config(), perturb);
            if budget.json {
                for o in &out {
                    emit(&o.records, true);
                }
            } else {
                print!("{}", matrix(&out));
                let bad = out.iter().filter(|o| !o.passed()).count();
                println!("{} cases, {} failed", out.len(), bad);
            }
            exit_status(out.iter().flat_map(|o| &o.records))
        }
        Cmd::Directives => {
            for d in singinv_cli::session::directive_names() {
                println!("{d}");
            }
            0
        }
    };
    ExitCode::from(code as u8)
}
