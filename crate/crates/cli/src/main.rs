//! Command-line harness: generate family instances, solve DIMACS graphs,
//! sweep the family against the 2^q node-count bound, dump search traces,
//! and run the verification suites.
//!
//! Exit codes: 0 success / all checks passed, 1 usage error, 2 I/O or
//! parse error, 3 limit hit while solving, 4 verification failure.

use std::fs::File;
use std::io::{self, BufWriter, Read, Write};
use std::time::{Duration, Instant};

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};

use mcbb::construct::{c5q, predict_params, FamilyParams};
use mcbb::dimacs::{parse_dimacs, write_dimacs};
use mcbb::search::{render_trace_tsv, solve, SearchLimits, SearchStatus};
use mcbb::sweep::{sweep_family, CSV_HEADER};
use mcbb::verify::run_all;

const EXIT_OK: i32 = 0;
const EXIT_USAGE: i32 = 1;
const EXIT_IO: i32 = 2;
const EXIT_LIMIT: i32 = 3;
const EXIT_VERIFY: i32 = 4;

const DEFAULT_NODE_LIMIT: u64 = 1 << 24;
const DEFAULT_TIME_LIMIT_S: u64 = 600;
const DEFAULT_SEED: u64 = 1729;

#[derive(Parser)]
#[command(
    name = "mcbb",
    version,
    about = "Maximum-clique branch and bound with coloring bounds, plus hard instance families"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write the q-copy join-graph instance as a DIMACS file.
    Gen {
        /// Number of joined 5-cycle copies (q >= 1).
        #[arg(long)]
        q: usize,
        /// Output path, or "-" for stdout.
        #[arg(long, default_value = "-")]
        out: String,
    },
    /// Solve a DIMACS graph and report the maximum clique found.
    Solve {
        /// Input path, or "-" for stdin.
        #[arg(long = "in", default_value = "-")]
        input: String,
        /// Maximum number of branching nodes before giving up.
        #[arg(long, default_value_t = DEFAULT_NODE_LIMIT)]
        node_limit: u64,
        /// Wall-clock budget in seconds.
        #[arg(long, default_value_t = DEFAULT_TIME_LIMIT_S)]
        time_limit_s: u64,
        /// Also dump the per-node search trace (TSV) before the report.
        #[arg(long)]
        trace: bool,
    },
    /// Solve the family for q = 1..=q-max and emit one CSV row per q.
    Sweep {
        #[arg(long)]
        q_max: usize,
        #[arg(long, default_value_t = DEFAULT_NODE_LIMIT)]
        node_limit: u64,
        /// Per-instance wall-clock budget in seconds.
        #[arg(long, default_value_t = DEFAULT_TIME_LIMIT_S)]
        time_limit_s: u64,
        /// Output path, or "-" for stdout.
        #[arg(long, default_value = "-")]
        out: String,
    },
    /// Dump the full search trace on the q-copy instance as TSV.
    Trace {
        /// Number of copies (1..=8; the trace has 2^q rows).
        #[arg(long)]
        q: usize,
        #[arg(long, default_value = "-")]
        out: String,
    },
    /// Run the verification suites and report per-suite pass counts.
    Verify {
        /// Largest q for the node-count lower-bound suite.
        #[arg(long, default_value_t = 10)]
        q_max: usize,
        /// Instances per randomized suite.
        #[arg(long, default_value_t = 200)]
        trials: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
}

fn main() {
    std::process::exit(run());
}

fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
            let _ = e.print();
            return code;
        }
    };
    match cli.command {
        Command::Gen { q, out } => cmd_gen(q, &out),
        Command::Solve {
            input,
            node_limit,
            time_limit_s,
            trace,
        } => cmd_solve(&input, node_limit, time_limit_s, trace),
        Command::Sweep {
            q_max,
            node_limit,
            time_limit_s,
            out,
        } => cmd_sweep(q_max, node_limit, time_limit_s, &out),
        Command::Trace { q, out } => cmd_trace(q, &out),
        Command::Verify {
            q_max,
            trials,
            seed,
        } => cmd_verify(q_max, trials, seed),
    }
}

fn read_input(path: &str) -> io::Result<String> {
    if path == "-" {
        let mut text = String::new();
        io::stdin().read_to_string(&mut text)?;
        Ok(text)
    } else {
        std::fs::read_to_string(path)
    }
}

fn open_output(path: &str) -> io::Result<Box<dyn Write>> {
    if path == "-" {
        Ok(Box::new(io::stdout().lock()))
    } else {
        Ok(Box::new(BufWriter::new(File::create(path)?)))
    }
}

fn limits_from(node_limit: u64, time_limit_s: u64) -> SearchLimits {
    SearchLimits {
        node_limit: Some(node_limit),
        time_limit: Some(Duration::from_secs(time_limit_s)),
    }
}

fn cmd_gen(q: usize, out: &str) -> i32 {
    let params = match FamilyParams::new(q) {
        Ok(p) => p,
        Err(e) => {
            eprintln!("usage error: {e}");
            return EXIT_USAGE;
        }
    };
    let g = c5q(params);
    let text = write_dimacs(&g);
    if let Err(e) = open_output(out).and_then(|mut w| w.write_all(text.as_bytes())) {
        eprintln!("I/O error writing {out}: {e}");
        return EXIT_IO;
    }
    let p = predict_params(params);
    eprintln!(
        "generated c5q(q={q}): n={} m={} alpha={} omega={} chi={} psi={}",
        p.n, p.m, p.alpha, p.omega, p.chi, p.psi
    );
    EXIT_OK
}

fn cmd_solve(input: &str, node_limit: u64, time_limit_s: u64, trace: bool) -> i32 {
    let text = match read_input(input) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("I/O error reading {input}: {e}");
            return EXIT_IO;
        }
    };
    let g = match parse_dimacs(&text) {
        Ok(g) => g,
        Err(e) => {
            eprintln!("parse error in {input}: {e}");
            return EXIT_IO;
        }
    };
    let started = Instant::now();
    let result = solve(&g, &limits_from(node_limit, time_limit_s), trace);
    let wall = started.elapsed().as_secs_f64();
    if let Some(records) = &result.trace {
        print!("{}", render_trace_tsv(records));
    }
    let members: Vec<String> = result
        .best_clique
        .iter()
        .map(|v| (v + 1).to_string())
        .collect();
    println!("size {}", result.best_size);
    if members.is_empty() {
        println!("clique");
    } else {
        println!("clique {}", members.join(" "));
    }
    println!("calls {}", result.calls);
    println!("max_depth {}", result.max_depth);
    println!("wall_seconds {wall:.6}");
    println!("status {}", result.status);
    match result.status {
        SearchStatus::Completed => EXIT_OK,
        _ => EXIT_LIMIT,
    }
}

fn cmd_sweep(q_max: usize, node_limit: u64, time_limit_s: u64, out: &str) -> i32 {
    if q_max < 1 {
        eprintln!("usage error: --q-max must be at least 1");
        return EXIT_USAGE;
    }
    let rows = sweep_family(q_max, &limits_from(node_limit, time_limit_s));
    let write_rows = || -> io::Result<()> {
        let mut w = open_output(out)?;
        writeln!(w, "{CSV_HEADER}")?;
        for row in &rows {
            writeln!(w, "{}", row.to_csv_row())?;
            w.flush()?;
        }
        Ok(())
    };
    if let Err(e) = write_rows() {
        eprintln!("I/O error writing {out}: {e}");
        return EXIT_IO;
    }
    EXIT_OK
}

fn cmd_trace(q: usize, out: &str) -> i32 {
    if !(1..=8).contains(&q) {
        eprintln!("usage error: --q must be in 1..=8 (the trace has 2^q rows)");
        return EXIT_USAGE;
    }
    let g = c5q(FamilyParams::new(q).expect("q >= 1"));
    let result = solve(&g, &SearchLimits::none(), true);
    let tsv = render_trace_tsv(result.trace.as_deref().unwrap_or(&[]));
    if let Err(e) = open_output(out).and_then(|mut w| w.write_all(tsv.as_bytes())) {
        eprintln!("I/O error writing {out}: {e}");
        return EXIT_IO;
    }
    EXIT_OK
}

fn cmd_verify(q_max: usize, trials: usize, seed: u64) -> i32 {
    let report = run_all(q_max, trials, seed);
    for suite in &report.suites {
        println!(
            "suite {}: {}/{} checks passed",
            suite.name,
            suite.passed_count(),
            suite.checks
        );
        for failure in suite.failures.iter().take(10) {
            println!("  FAIL {failure}");
        }
        if suite.name == "lower_bound" {
            for row in &report.lower_bound_rows {
                println!(
                    "  q={} calls={} bound={} {}",
                    row.q,
                    row.calls,
                    row.bound,
                    if row.pass { "pass" } else { "FAIL" }
                );
            }
        }
    }
    if report.all_passed() {
        println!("overall: PASS");
        EXIT_OK
    } else {
        println!("overall: FAIL");
        EXIT_VERIFY
    }
}
