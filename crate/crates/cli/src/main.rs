use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use oddmatch_cli::{generate, solve, transform, verify, GenKind, GenSpec, Reduction, SolveOptions};
use oddmatch_core::format::{parse_instance, parse_solution, Instance, Problem};
use oddmatch_core::gadgets::SwitchEnd;
use oddmatch_core::em;

/// Parity-constrained perfect matching solvers and instance tools.
///
/// Exit status: 0 for YES / ACCEPT, 1 for NO, PROBABLY_NO or REJECT, 2 for errors.
#[derive(Parser)]
#[command(name = "oddmatch", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve an instance and print a report.
    Solve {
        /// em, bcpm, cpm, oac, oace, oap, dap, fdap, bfp, oct, ub, wvc or uvc
        problem: Problem,
        instance: PathBuf,
        /// Use the exhaustive solver.
        #[arg(long)]
        oracle: bool,
        /// Run unbalanced bipartization with budget K and slack L before the
        /// G_Y sweep and sweep over its transversal.
        #[arg(long, num_args = 2, value_names = ["K", "L"])]
        ub: Option<Vec<usize>>,
        /// Sweep every subset of the transversal.
        #[arg(long)]
        full_sweep: bool,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Trials of the randomized exact matching solver.
        #[arg(long, default_value_t = em::DEFAULT_REPETITIONS)]
        reps: u32,
        /// Field prime of the randomized exact matching solver.
        #[arg(long, default_value_t = em::DEFAULT_FIELD_PRIME)]
        prime: u64,
        /// Write the report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Apply a reduction and write the target instance plus a map file.
    Transform {
        /// bfp-to-oace, oace-to-oap, oap-to-dap or attach-pendants
        reduction: Reduction,
        instance: PathBuf,
        /// Target instance file; the map goes to <OUT>.map unless --map is given.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        map: Option<PathBuf>,
        /// Endpoint of the designated edge whose weights are switched.
        #[arg(long, value_enum, default_value_t = End::Lower)]
        switch: End,
    },
    /// Write a seeded random instance.
    Generate {
        /// random, bipartite, low-parameter or digraph
        kind: GenKind,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0.5)]
        p: f64,
        /// Planted transversal size (low-parameter).
        #[arg(long, default_value_t = 2)]
        x: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        problem: Option<Problem>,
        #[arg(long)]
        k: Option<i64>,
        #[arg(long)]
        l: Option<i64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a witness against an instance without solving.
    Verify { instance: PathBuf, witness: PathBuf },
}

#[derive(Clone, Copy, ValueEnum)]
enum End {
    Lower,
    Higher,
}

fn read_instance(path: &Path) -> Result<Instance> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_instance(&text).with_context(|| format!("parsing {}", path.display()))
}

fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Solve {
            problem,
            instance,
            oracle,
            ub,
            full_sweep,
            jobs,
            seed,
            reps,
            prime,
            out,
        } => {
            let inst = read_instance(&instance)?;
            let opts = SolveOptions {
                oracle,
                ub: ub.map(|v| (v[0], v[1])),
                full_sweep,
                jobs,
                seed,
                repetitions: reps,
                field_prime: prime,
            };
            let report = solve(problem, &inst, &opts)?;
            emit(out.as_deref(), &report.to_text())?;
            Ok(report.exit_code())
        }
        Command::Transform {
            reduction,
            instance,
            out,
            map,
            switch,
        } => {
            let inst = read_instance(&instance)?;
            let end = match switch {
                End::Lower => SwitchEnd::Lower,
                End::Higher => SwitchEnd::Higher,
            };
            let t = transform(reduction, &inst, end)?;
            emit(out.as_deref(), &t.instance.to_text())?;
            let map = map.or_else(|| {
                out.map(|p| {
                    let mut s = p.into_os_string();
                    s.push(".map");
                    PathBuf::from(s)
                })
            });
            if let Some(p) = map {
                fs::write(&p, t.map.to_text()).with_context(|| format!("writing {}", p.display()))?;
            }
            Ok(0)
        }
        Command::Generate {
            kind,
            n,
            p,
            x,
            seed,
            problem,
            k,
            l,
            out,
        } => {
            let spec = GenSpec {
                kind,
                n,
                p,
                x,
                seed,
                problem,
                k,
                l,
            };
            emit(out.as_deref(), &generate(&spec)?)?;
            Ok(0)
        }
        Command::Verify { instance, witness } => {
            let inst = read_instance(&instance)?;
            let text = fs::read_to_string(&witness).with_context(|| format!("reading {}", witness.display()))?;
            let sol = parse_solution(&text).with_context(|| format!("parsing {}", witness.display()))?;
            let verdict = verify(&inst, &sol)?;
            println!("{}", verdict.to_line());
            Ok(if verdict.is_accept() { 0 } else { 1 })
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
