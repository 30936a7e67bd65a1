use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use gshift::cli::{cmd_dot, run_task, run_tasks, CliError, Manifest, RunOptions, TaskOutput};

#[derive(Parser)]
#[command(
    name = "gshift",
    version,
    about = "Analyze and decompose group shifts described in a JSON manifest"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Common {
    /// Manifest file.
    manifest: PathBuf,
    /// Shift name within the manifest.
    shift: String,
    /// Emit JSON instead of text.
    #[arg(long)]
    json: bool,
    /// Largest period for periodic-point counts.
    #[arg(long, default_value_t = 8)]
    period_bound: usize,
    /// Cap on the size of intermediate block groups.
    #[arg(long, default_value_t = gshift::error::DEFAULT_BUDGET)]
    budget: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Limit degree, entropy, σ-components and periodic counts.
    Analyze(Common),
    /// Subnormal series with simple full-shift factors.
    Decompose {
        #[command(flatten)]
        common: Common,
        /// Include the certificate sliding block codes.
        #[arg(long)]
        certificates: bool,
    },
    /// Periodic-point invariants of the conjugacy class.
    Invariants(Common),
    /// The two-sided shift on the same window and its starred series.
    Star(Common),
    /// Graphviz rendering of the state graph.
    Dot {
        manifest: PathBuf,
        shift: String,
        /// Render the two-sided trimmed graph.
        #[arg(long)]
        two_sided: bool,
        /// Write to this file instead of standard output.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Run every task listed in the manifest.
    Run {
        manifest: PathBuf,
        #[arg(long)]
        json: bool,
        #[arg(long, default_value_t = 8)]
        period_bound: usize,
        #[arg(long, default_value_t = gshift::error::DEFAULT_BUDGET)]
        budget: usize,
        #[arg(long)]
        certificates: bool,
    },
}

fn load(path: &PathBuf) -> Result<Manifest, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Other(format!("{}: {e}", path.display())))?;
    Manifest::parse(&text)
}

fn print_output(out: &TaskOutput, json: bool) {
    if json {
        let v = serde_json::json!({ "command": out.op, "shift": out.shift, "report": out.json });
        println!("{}", serde_json::to_string_pretty(&v).expect("json"));
    } else {
        print!("{}", out.text);
    }
}

fn single(op: &str, c: &Common, certificates: bool) -> Result<bool, CliError> {
    let m = load(&c.manifest)?;
    let opts = RunOptions {
        period_bound: c.period_bound,
        budget: c.budget,
        certificates,
    };
    let out = run_task(&m, op, &c.shift, opts)?;
    print_output(&out, c.json);
    Ok(out.verified)
}

fn execute(cli: Cli) -> Result<bool, CliError> {
    match cli.command {
        Command::Analyze(c) => single("analyze", &c, false),
        Command::Decompose {
            common,
            certificates,
        } => single("decompose", &common, certificates),
        Command::Invariants(c) => single("invariants", &c, false),
        Command::Star(c) => single("star", &c, false),
        Command::Dot {
            manifest,
            shift,
            two_sided,
            output,
        } => {
            let m = load(&manifest)?;
            let g = m.resolve_shift(&shift)?;
            let dot = cmd_dot(&g, m.declared_width(&shift)?, two_sided)?;
            match output {
                Some(path) => std::fs::write(&path, dot)
                    .map_err(|e| CliError::Other(format!("{}: {e}", path.display())))?,
                None => print!("{dot}"),
            }
            Ok(true)
        }
        Command::Run {
            manifest,
            json,
            period_bound,
            budget,
            certificates,
        } => {
            let m = load(&manifest)?;
            let opts = RunOptions {
                period_bound,
                budget,
                certificates,
            };
            let mut all_ok = true;
            let mut first_err: Option<CliError> = None;
            for (task, res) in m.tasks.iter().zip(run_tasks(&m, opts)) {
                match res {
                    Ok(out) => {
                        if !json {
                            println!("== {} {}", out.op, out.shift);
                        }
                        print_output(&out, json);
                        all_ok &= out.verified;
                    }
                    Err(e) => {
                        eprintln!("{} {}: {e}", task.op, task.shift);
                        first_err.get_or_insert(e);
                    }
                }
            }
            match first_err {
                Some(e) => Err(e),
                None => Ok(all_ok),
            }
        }
    }
}

fn main() -> ExitCode {
    match execute(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => {
            eprintln!("verification failed");
            ExitCode::from(5)
        }
        Err(e) => {
            eprintln!("{e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
