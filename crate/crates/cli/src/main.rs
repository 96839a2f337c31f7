mod commands;
mod output;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

/// Cyclic DNA codes over F2 + uF2: construct, analyse, verify and export.
#[derive(Debug, Parser)]
#[command(name = "dnacodex", version, about)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub global: Global,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct Global {
    /// Largest enumeration allowed, as log2 of the word count.
    #[arg(long, global = true, env = "DNACODEX_BUDGET", default_value_t = dnacodex::DEFAULT_BUDGET,
          value_parser = clap::value_parser!(u32).range(1..=30))]
    pub budget: u32,
    /// Worker threads; defaults to the number of cores. Output does not depend on it.
    #[arg(long, global = true)]
    #[serde(skip)]
    pub threads: Option<usize>,
    #[arg(long, global = true, value_enum, conflicts_with = "export")]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub format: Option<Format>,
    /// Write the codebook instead of the report.
    #[arg(long, global = true, value_enum)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub export: Option<ExportFormat>,
    /// Output file; stdout when absent.
    #[arg(long, short, global = true)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub output: Option<std::path::PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Fasta,
    Table,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ExportFormat {
    Fasta,
}

#[derive(Debug, Clone, Subcommand, Serialize)]
#[serde(tag = "command", rename_all = "lowercase")]
pub enum Command {
    /// Irreducible factors of x^n - 1.
    Factor {
        #[arg(long)]
        n: usize,
    },
    /// 2-cyclotomic cosets modulo n with reversibility.
    Cosets {
        #[arg(long)]
        n: usize,
    },
    /// Report on the code <f0, u f1>.
    Code(CodeArgs),
    /// BCH code with designed distances (d0, d1).
    Bch(BchArgs),
    /// One of the infinite DNA-code families.
    Family {
        #[arg(value_enum)]
        family: FamilyName,
        #[arg(long)]
        m: u32,
    },
    /// Check the DNA constraints on every codeword.
    Verify {
        #[command(flatten)]
        code: CodeArgs,
        /// Required distance; defaults to the code's Hamming distance.
        #[arg(long)]
        d: Option<u32>,
    },
    /// Write all codewords of <f0, u f1> as DNA strands.
    Export {
        #[command(flatten)]
        code: CodeArgs,
    },
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct CodeArgs {
    #[arg(long)]
    pub n: usize,
    /// Residue generator, symbolic ("x^3+x+1") or hex ("0b").
    #[arg(long)]
    pub f0: String,
    /// Torsion generator; must divide f0.
    #[arg(long)]
    pub f1: String,
    /// Also run the definitional constraint checks.
    #[arg(long)]
    pub brute_force: bool,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct BchArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub d0: usize,
    #[arg(long)]
    pub d1: usize,
    /// Require the DNA construction (2^i = -1 mod n).
    #[arg(long)]
    pub dna: bool,
    #[arg(long)]
    pub brute_force: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FamilyName {
    Simplex,
    Zetterberg,
    Rm,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(t) = cli.global.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(t).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    }
    match commands::run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        // a closed downstream pipe (`| head`) is not a failure
        Err(output::CliError::Io(e)) if e.kind() == std::io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
