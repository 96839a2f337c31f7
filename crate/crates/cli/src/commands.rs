use std::io::Write;

use dnacodex::bch::{bch_code, bch_dna};
use dnacodex::code::{make_code, CyclicCodeR, Metric, PolyText, ReportOptions};
use dnacodex::cyclotomic::{build_cosets, find_reversible_coset, has_power_minus_one, Coset};
use dnacodex::families::{rm_dna, simplex_dna, zetterberg_dna};
use dnacodex::gf2::factor_cached;
use dnacodex::ring::write_fasta_record;
use dnacodex::BinPoly;
use serde::Serialize;

use crate::output::{envelope, sink, write_json, write_table, CliError};
use crate::{Cli, CodeArgs, Command, ExportFormat, FamilyName, Format, Global};

#[derive(Serialize)]
struct Config<'a> {
    #[serde(flatten)]
    command: &'a Command,
    #[serde(flatten)]
    global: &'a Global,
}

#[derive(Serialize)]
struct FactorEntry {
    rep: usize,
    members: Vec<usize>,
    reversible: bool,
    polynomial: PolyText,
}

#[derive(Serialize)]
struct FactorReport {
    n: usize,
    field_degree: usize,
    count: usize,
    product_is_x_n_minus_one: bool,
    factors: Vec<FactorEntry>,
}

#[derive(Serialize)]
struct CosetReport {
    n: usize,
    ord2: usize,
    count: usize,
    /// Smallest i with 2^i = -1 (mod n).
    power_minus_one: Option<usize>,
    first_reversible: Option<usize>,
    cosets: Vec<Coset>,
}

#[derive(Serialize)]
struct ExportReport {
    count: usize,
    strands: Vec<String>,
}

fn wants_fasta(g: &Global) -> bool {
    g.export == Some(ExportFormat::Fasta) || g.format == Some(Format::Fasta)
}

fn parse_code(a: &CodeArgs) -> Result<CyclicCodeR, CliError> {
    let f0: BinPoly = a.f0.parse()?;
    let f1: BinPoly = a.f1.parse()?;
    Ok(make_code(a.n, f0, f1)?)
}

fn write_codebook(out: &mut dyn Write, code: &CyclicCodeR, budget: u32) -> Result<(), CliError> {
    for (i, w) in code.enumerate(budget)?.enumerate() {
        write_fasta_record(out, i, &w)?;
    }
    Ok(())
}

pub fn run(cli: &Cli) -> Result<(), CliError> {
    let g = &cli.global;
    let budget = g.budget;
    let opts = |brute_force: bool| ReportOptions { budget, brute_force, d: None };

    // Commands that produce a code can emit a codebook instead of a report.
    let code_for_fasta: Option<CyclicCodeR> = match &cli.command {
        Command::Code(a) => Some(parse_code(a)?),
        Command::Export { code } => Some(parse_code(code)?),
        Command::Bch(a) if a.dna => Some(bch_dna(a.n, a.d0, a.d1)?.code),
        Command::Bch(a) => Some(bch_code(a.n, a.d0, a.d1)?.code),
        Command::Family { family, m } => Some(family_code(*family, *m)?.code),
        Command::Verify { code, .. } => Some(parse_code(code)?),
        Command::Factor { .. } | Command::Cosets { .. } => None,
    };
    let export_default = matches!(cli.command, Command::Export { .. }) && g.format.is_none();
    if wants_fasta(g) || export_default {
        let code = code_for_fasta
            .ok_or_else(|| CliError::Usage("FASTA output needs a command that builds a code".into()))?;
        if code.log2_size > budget as usize {
            return Err(dnacodex::CodeError::BudgetExceeded { needed: code.log2_size, budget }.into());
        }
        let mut out = sink(g.output.as_deref())?;
        write_codebook(&mut *out, &code, budget)?;
        out.flush()?;
        return Ok(());
    }

    let report = match &cli.command {
        Command::Factor { n } => {
            let f = factor_cached(*n)?;
            let factors = f
                .cosets
                .iter()
                .map(|c| FactorEntry {
                    rep: c.rep,
                    members: c.members.clone(),
                    reversible: c.reversible,
                    polynomial: (&f.factors[&c.rep]).into(),
                })
                .collect::<Vec<_>>();
            serde_json::to_value(FactorReport {
                n: *n,
                field_degree: f.field_degree,
                count: factors.len(),
                product_is_x_n_minus_one: f.product() == BinPoly::x_n_minus_one(*n),
                factors,
            })?
        }
        Command::Cosets { n } => {
            let t = build_cosets(*n)?;
            serde_json::to_value(CosetReport {
                n: *n,
                ord2: t.ord2,
                count: t.len(),
                power_minus_one: has_power_minus_one(*n)?,
                first_reversible: find_reversible_coset(*n)?.map(|c| c.rep),
                cosets: t.cosets,
            })?
        }
        Command::Code(a) => serde_json::to_value(code_for_fasta.expect("built").report(opts(a.brute_force))?)?,
        Command::Bch(a) => {
            let spec = if a.dna { bch_dna(a.n, a.d0, a.d1)? } else { bch_code(a.n, a.d0, a.d1)? };
            serde_json::to_value(spec.report(opts(a.brute_force), a.dna)?)?
        }
        Command::Family { family, m } => serde_json::to_value(family_code(*family, *m)?.report(opts(false))?)?,
        Command::Verify { d, .. } => {
            let code = code_for_fasta.expect("built");
            let d = match d {
                Some(d) => *d,
                None => code.min_distance(Metric::Hamming, budget)?.value.unwrap_or(1) as u32,
            };
            serde_json::to_value(code.verify_constraints_bruteforce(d, budget)?)?
        }
        Command::Export { .. } => {
            let code = code_for_fasta.expect("built");
            let strands: Vec<String> = code.enumerate(budget)?.map(|w| w.to_dna().to_string()).collect();
            serde_json::to_value(ExportReport { count: strands.len(), strands })?
        }
    };

    let v = envelope(&Config { command: &cli.command, global: g }, &report)?;
    let mut out = sink(g.output.as_deref())?;
    match g.format.unwrap_or(Format::Json) {
        Format::Table => write_table(&mut *out, &v)?,
        _ => write_json(&mut *out, &v)?,
    }
    out.flush()?;
    Ok(())
}

fn family_code(family: FamilyName, m: u32) -> Result<dnacodex::families::FamilyCode, CliError> {
    Ok(match family {
        FamilyName::Simplex => simplex_dna(m)?,
        FamilyName::Zetterberg => zetterberg_dna(m)?,
        FamilyName::Rm => rm_dna(m)?,
    })
}
