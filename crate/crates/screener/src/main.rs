use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};
use screener::config::parse_group;
use screener::{render_report, run_case, CaseConfig, Cover, Flags, Format, ModuleSel};
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "screener", version, about = "Screen Alt(n) subgroups of exceptional groups")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Screen one case and print a report.
    Run(RunArgs),
    /// Simple-module catalogue maintenance.
    Catalogue {
        #[command(subcommand)]
        cmd: CatCmd,
    },
    /// Torus trace tables.
    Traces {
        #[command(subcommand)]
        cmd: TraceCmd,
    },
    /// Run the acceptance fixtures.
    Fixtures,
}

#[derive(clap::Args)]
struct RunArgs {
    /// e.g. alt7
    #[arg(long)]
    group: String,
    /// none, double or triple
    #[arg(long, default_value = "none")]
    cover: Cover,
    /// F4, E6, 2E6, E7 or E8
    #[arg(long)]
    target: String,
    #[arg(long)]
    prime: u32,
    /// vmin, lg or both
    #[arg(long, default_value = "both")]
    module: ModuleSel,
    /// Extra trace table merged into the target's.
    #[arg(long)]
    traces: Option<PathBuf>,
    /// Also write the JSON report here (`-` for stdout instead of text).
    #[arg(long)]
    json: Option<PathBuf>,
    /// Alt(6), p = 3: an odd number 2n-1 of trivial factors needs 2n factors 4.
    #[arg(long)]
    strict_parity: bool,
    /// Report one candidate per orbit of the outer automorphism.
    #[arg(long)]
    collapse_out_orbits: bool,
    /// Skip generated torus traces and use shipped tables only.
    #[arg(long)]
    no_torus_traces: bool,
    /// Recorded in the report; verdicts do not depend on it.
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Subcommand)]
enum CatCmd {
    /// Rebuild every simple from its recipe and check its identification.
    Audit {
        /// Only this catalogue, e.g. 7_5.
        #[arg(long)]
        only: Option<String>,
    },
    /// Search for the simples of Alt(n) in characteristic p and print the table.
    Build {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: u32,
        /// Largest module dimension searched.
        #[arg(long, default_value_t = 200)]
        max_dim: usize,
        /// Write the table here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum TraceCmd {
    /// Print trace rows of every torus element of the given order.
    Generate {
        #[arg(long)]
        target: String,
        #[arg(long)]
        order: u64,
    },
}

fn run(args: RunArgs) -> Result<()> {
    let cfg = CaseConfig {
        group_n: parse_group(&args.group)?,
        cover: args.cover,
        target: args.target,
        p: args.prime,
        module_kind: args.module,
        trace_file: args.traces,
        flags: Flags {
            strict_parity: args.strict_parity,
            collapse_out_orbits: args.collapse_out_orbits,
            seed: args.seed,
        },
        torus_traces: !args.no_torus_traces,
    };
    let report = run_case(&cfg)?;
    let mut out = std::io::stdout().lock();
    match args.json {
        Some(p) if p.as_os_str() == "-" => out.write_all(&render_report(&report, Format::Json))?,
        Some(p) => {
            std::fs::write(&p, render_report(&report, Format::Json)).with_context(|| format!("writing {}", p.display()))?;
            out.write_all(&render_report(&report, Format::Text))?;
        }
        None => out.write_all(&render_report(&report, Format::Text))?,
    }
    Ok(())
}

fn audit(only: Option<String>) -> Result<()> {
    let mut bad = 0;
    for (n, p) in altsieve::repdata::catalogued() {
        if only.as_deref().is_some_and(|o| o != format!("{n}_{p}")) {
            continue;
        }
        let miss = altsieve::repdata::audit(n, p)?;
        println!("Alt({n}) p={p}: {}", if miss.is_empty() { "ok".to_string() } else { format!("{miss:?}") });
        bad += miss.len();
    }
    for m in altsieve::repdata::checksum_mismatches() {
        println!("checksum mismatch: {m}");
        bad += 1;
    }
    if bad > 0 {
        bail!("{bad} audit failures");
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let res = match cli.cmd {
        Cmd::Run(a) => run(a),
        Cmd::Catalogue { cmd: CatCmd::Audit { only } } => audit(only),
        Cmd::Catalogue { cmd: CatCmd::Build { n, p, max_dim, out } } => (|| {
            let text = altsieve::repdata::build_catalogue(n, p, max_dim, &mut |s| eprintln!("{s}"))?;
            match out {
                Some(path) => std::fs::write(&path, text)?,
                None => print!("{text}"),
            }
            Ok(())
        })(),
        Cmd::Traces { cmd: TraceCmd::Generate { target, order } } => (|| {
            let rows = altsieve::repdata::torus_trace_rows(&target, order)?;
            print!("{}", altsieve::repdata::trace_file_text(&target, &rows));
            Ok(())
        })(),
        Cmd::Fixtures => {
            let outcomes = screener::fixtures::run_all();
            for o in &outcomes {
                println!("{o}");
            }
            let failed = outcomes.iter().filter(|o| !o.pass).count();
            println!("{} of {} criteria pass", outcomes.len() - failed, outcomes.len());
            Ok(())
        }
    };
    match res {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
