use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use amitsur_core::commands::{
    cmd_amitsur, cmd_cohomology, cmd_gs, cmd_hopf, cmd_validate, cmd_verify_iso, CoringKind,
    RunConfig,
};
use amitsur_core::report::Report;
use amitsur_core::simplicial::DEFAULT_GS_CAP;

#[derive(Parser)]
#[command(
    name = "amitsur",
    version,
    about = "Relative Hochschild and Amitsur complexes over GF(p)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Prime field; must match JSON inputs, sets the field for gs-compare (default 5)
    #[arg(long, global = true)]
    field: Option<u64>,
    /// Top degree N
    #[arg(long, global = true)]
    max_degree: Option<usize>,
    /// Hard cap on N
    #[arg(long, global = true, default_value_t = 4)]
    degree_cap: usize,
    /// Random pairs per degree split
    #[arg(long, global = true, default_value_t = 50)]
    trials: usize,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Largest incidence algebra accepted by gs-compare
    #[arg(long, global = true, default_value_t = DEFAULT_GS_CAP)]
    cap: usize,
    /// Add wall-clock time to the report
    #[arg(long, global = true)]
    timing: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Markdown,
}

#[derive(Clone, Copy, ValueEnum)]
enum Coring {
    Endo,
    Sweedler,
    Hopf,
    HopfDual,
}

#[derive(Subcommand)]
enum Command {
    /// Check algebra, extension or bialgebra axioms
    Validate {
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
    /// Relative Hochschild cohomology, plus Amitsur cohomology when f2 is bijective
    Cohomology { extension: PathBuf },
    /// Amitsur complex of a coring built from an extension or bialgebra file
    Amitsur {
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Coring::Endo)]
        coring: Coring,
    },
    /// Verify the comparison map is an isomorphism of differential graded algebras
    VerifyIso { extension: PathBuf },
    /// Compare incidence-algebra cohomology with simplicial cohomology
    GsCompare { complex: PathBuf },
    /// Compare Hochschild cohomology of a bialgebra with the cobar cohomology of its dual
    HopfCheck { hopf: PathBuf },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cfg = RunConfig {
        field: cli.field,
        max_degree: cli.max_degree,
        trials: cli.trials,
        seed: cli.seed,
        cap: cli.cap,
        degree_cap: cli.degree_cap,
    };
    let start = Instant::now();
    let result = match &cli.command {
        Command::Validate { files } => {
            let paths: Vec<&std::path::Path> = files.iter().map(|p| p.as_path()).collect();
            cmd_validate(&paths, &cfg)
        }
        Command::Cohomology { extension } => cmd_cohomology(extension, &cfg),
        Command::Amitsur { input, coring } => {
            let kind = match coring {
                Coring::Endo => CoringKind::Endo,
                Coring::Sweedler => CoringKind::Sweedler,
                Coring::Hopf => CoringKind::Hopf,
                Coring::HopfDual => CoringKind::HopfDual,
            };
            cmd_amitsur(input, kind, &cfg)
        }
        Command::VerifyIso { extension } => cmd_verify_iso(extension, &cfg),
        Command::GsCompare { complex } => cmd_gs(complex, &cfg),
        Command::HopfCheck { hopf } => cmd_hopf(hopf, &cfg),
    };
    let mut report: Report = match result {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    if cli.timing {
        report.timing_ms = Some(start.elapsed().as_millis());
    }
    match cli.format {
        Format::Json => print!("{}", report.to_json()),
        Format::Markdown => print!("{}", report.to_markdown()),
    }
    if report.passed {
        ExitCode::SUCCESS
    } else {
        for c in report
            .checks
            .iter()
            .filter(|c| c.status == amitsur_core::report::Status::Fail)
        {
            eprintln!("failed: {}", c.name);
            if let Some(serde_json::Value::Object(m)) = &c.detail {
                if let Some(serde_json::Value::String(d)) = m.get("diagnostic") {
                    eprintln!("{d}");
                }
            }
        }
        ExitCode::from(1)
    }
}
