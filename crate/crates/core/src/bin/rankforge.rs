use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rankforge::report::{self, ChartKind, ReportFormat, SweepConfig, SweepReport};
use rankforge::{default_jobs, Error};

#[derive(Parser)]
#[command(
    name = "rankforge",
    version,
    about = "Sweep MCDM pipeline combinations and compare the rankings"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a config that describes exactly one pipeline.
    Evaluate(RunArgs),
    /// Run every combination of a config and compare the rankings.
    Sweep(RunArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum Svg {
    Boxplot,
    Heatmap,
}

#[derive(Args)]
struct RunArgs {
    /// Sweep config (JSON).
    #[arg(long)]
    config: PathBuf,
    /// Decision-matrix CSV; overrides the config's `matrix_path`.
    #[arg(long)]
    matrix: Option<PathBuf>,
    /// Output directory. JSON goes to stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Charts to write into the output directory.
    #[arg(long, value_enum, value_delimiter = ',')]
    svg: Vec<Svg>,
    /// Worker threads (default: available CPUs).
    #[arg(long, env = "RANKFORGE_JOBS")]
    jobs: Option<usize>,
    /// Reserved; evaluation is deterministic.
    #[arg(long, hide = true)]
    seed: Option<u64>,
}

fn run(cli: Cli) -> Result<(), Error> {
    let (args, single) = match cli.command {
        Command::Evaluate(args) => (args, true),
        Command::Sweep(args) => (args, false),
    };
    let mut config = SweepConfig::from_path(&args.config)?;
    if let Some(matrix) = args.matrix {
        config.matrix_path = matrix;
    }
    if single && config.combination_count() != 1 {
        return Err(Error::InvalidSpec(format!(
            "evaluate needs exactly one pipeline, config describes {}; use `sweep`",
            config.combination_count()
        )));
    }
    let jobs = args.jobs.unwrap_or_else(default_jobs).max(1);
    let report = report::run_sweep_with_jobs(&config, jobs)?;
    if let Some(notice) = &report.notice {
        log::info!("{notice}");
    }

    match &args.out {
        None => {
            if !args.svg.is_empty() {
                return Err(Error::InvalidSpec("--svg requires --out".into()));
            }
            match args.format {
                Format::Json => println!("{}", report.to_json()?),
                Format::Csv => print_ranks(&report),
            }
        }
        Some(dir) => {
            let format = match args.format {
                Format::Json => ReportFormat::Json,
                Format::Csv => ReportFormat::CsvDir,
            };
            for path in report::emit_report(&report, format, dir)? {
                eprintln!("wrote {}", path.display());
            }
            for chart in &args.svg {
                let (kind, name) = match chart {
                    Svg::Boxplot => (ChartKind::Boxplot, "boxplot.svg"),
                    Svg::Heatmap => (ChartKind::Heatmap, "heatmap.svg"),
                };
                let path = dir.join(name);
                report::render_svg(&report, kind, &path)?;
                eprintln!("wrote {}", path.display());
            }
        }
    }
    Ok(())
}

fn print_ranks(report: &SweepReport) {
    for (name, body) in report::csv_tables(report) {
        if name == "ranks.csv" {
            print!("{body}");
        }
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            let line = serde_json::json!({ "error": err.kind(), "message": err.to_string() });
            eprintln!("{line}");
            ExitCode::FAILURE
        }
    }
}
