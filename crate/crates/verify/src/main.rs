use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use lmp_core::classify::all_types;
use lmp_core::{Family, RootSystem, RootSystemType};
use lmp_verify::certfile::CertificateFile;
use lmp_verify::markdown;
use lmp_verify::report::Config;
use lmp_verify::suite::{self, VerifyOptions};
use serde::Serialize;

#[derive(Parser, Debug)]
#[command(name = "lmp-verify", version)]
#[command(
    about = "Vanishing orders on minuscule flag varieties and the identity sum m_d = dim G/P"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Markdown,
}

#[derive(Args, Debug)]
struct ConfigArgs {
    /// Root system family (A-G)
    #[arg(long)]
    family: Family,

    /// Rank of the root system
    #[arg(long)]
    rank: usize,

    /// Omitted simple root of the maximal parabolic, 1-based
    #[arg(long)]
    parabolic: usize,
}

impl ConfigArgs {
    fn config(&self) -> anyhow::Result<Config> {
        let kind = RootSystemType::new(self.family, self.rank)?;
        if !(1..=self.rank).contains(&self.parabolic) {
            bail!("--parabolic must lie in 1..={}", self.rank);
        }
        Ok(Config::new(kind, self.parabolic - 1))
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List minuscule fundamental weights
    ListMinuscule {
        #[arg(long)]
        family: Option<Family>,
        #[arg(long, requires = "family")]
        rank: Option<usize>,
        /// Rank ceiling when listing whole families
        #[arg(long, default_value_t = 12)]
        max_rank: usize,
    },
    /// Compute every m_d for one configuration
    Verify {
        #[command(flatten)]
        config: ConfigArgs,
        /// Also report ladder lengths with every positive root allowed
        #[arg(long)]
        relaxed_edges: bool,
        /// Exit with status 1 unless sum m_d = dim G/P and all routes agree
        #[arg(long)]
        expect_minuscule: bool,
        /// Write one certificate file per d into this directory
        #[arg(long)]
        export_certs: Option<PathBuf>,
    },
    /// Verify every minuscule configuration up to a rank ceiling
    VerifyAll {
        #[arg(long, default_value_t = 12)]
        max_rank: usize,
        #[arg(long)]
        relaxed_edges: bool,
    },
    /// Longest element of the Levi Weyl group and its action on simple roots
    Tau {
        #[command(flatten)]
        config: ConfigArgs,
    },
    /// Validate a certificate file
    CheckCert { file: PathBuf },
}

fn emit<T: Serialize>(
    format: Format,
    value: &T,
    md: impl FnOnce(&T) -> String,
) -> anyhow::Result<()> {
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(value)?),
        Format::Markdown => print!("{}", md(value)),
    }
    Ok(())
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    let format = cli.format;
    match cli.command {
        Command::ListMinuscule {
            family,
            rank,
            max_rank,
        } => {
            let kinds: Vec<RootSystemType> = match (family, rank) {
                (Some(f), Some(n)) => vec![RootSystemType::new(f, n)?],
                (Some(f), None) => all_types(max_rank)
                    .into_iter()
                    .filter(|k| k.family() == f)
                    .collect(),
                _ => all_types(max_rank),
            };
            let listing = kinds
                .into_iter()
                .map(suite::minuscule_listing)
                .collect::<Result<Vec<_>, _>>()?;
            emit(format, &listing, |l| markdown::render_minuscule(l))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            config,
            relaxed_edges,
            expect_minuscule,
            export_certs,
        } => {
            let config = config.config()?;
            let report = suite::verify(
                &config,
                VerifyOptions {
                    relaxed_edges,
                    witnesses: true,
                },
            )?;
            if let Some(dir) = export_certs {
                export(&config, &dir)?;
            }
            emit(format, &report, markdown::render_report)?;
            if expect_minuscule && !(report.lmp_identity && report.all_agreed) {
                eprintln!(
                    "{}: sum m_d = {}, dim G/P = {}, routes agree: {}",
                    config.label(),
                    report.sum_m,
                    report.dim_gp,
                    report.all_agreed
                );
                return Ok(ExitCode::from(1));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::VerifyAll {
            max_rank,
            relaxed_edges,
        } => {
            let report = suite::verify_suite(
                max_rank,
                VerifyOptions {
                    relaxed_edges,
                    witnesses: false,
                },
            )?;
            emit(format, &report, markdown::render_suite)?;
            for f in &report.failures {
                eprintln!("{f}");
            }
            Ok(if report.all_passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Tau { config } => {
            let report = suite::tau_report(&config.config()?)?;
            emit(format, &report, markdown::render_tau)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::CheckCert { file } => {
            let cert = CertificateFile::read(&file)?;
            let check = suite::check_certificate_file(&cert)
                .with_context(|| format!("checking {}", file.display()))?;
            emit(format, &check, markdown::render_check)?;
            Ok(if check.clauses.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
    }
}

fn export(config: &Config, dir: &PathBuf) -> anyhow::Result<()> {
    let rs = RootSystem::new(config.kind()?)?;
    let parabolic = config.parabolic()?;
    std::fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    for d in 0..rs.rank() {
        let (cert, _) = lmp_core::certificates::certificate(&rs, &parabolic, d)?;
        let path = dir.join(format!(
            "{}{}_P{}_d{}.json",
            config.family,
            config.rank,
            config.parabolic,
            d + 1
        ));
        CertificateFile::from_certificate(&cert)?.write(&path)?;
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
