// SPDX-License-Identifier: Apache-2.0

use std::collections::BTreeMap;
use std::io::Write;

use kratzer_core::grid::RadialGrid;
use kratzer_core::spectrum::{spectrum_entry, spectrum_table};
use kratzer_core::units::{derive_kratzer, to_atomic_units, EnergyUnit, MoleculeRecord, UNITS};
use kratzer_core::verify::{self, Suite, VerifyConfig};
use kratzer_core::wavefunction::bound_state;
use kratzer_core::{Error, KratzerParams};
use serde::Serialize;

use crate::args::{Format, MoleculesArgs, SpectrumArgs, VerifyArgs, WavefunctionArgs};
use crate::error::CliError;
use crate::model::{find_molecule, read_table};

type Out<'a> = &'a mut dyn Write;

#[derive(Debug, Serialize)]
struct SpectrumRow {
    n: u32,
    l: u32,
    q0: f64,
    qn: f64,
    sigma_n: f64,
    energy_hartree: f64,
    #[serde(rename = "energy_eV")]
    energy_ev: f64,
    energy_cm1: f64,
}

fn emit<T: Serialize>(out: Out, rows: &[T], format: Format) -> Result<(), CliError> {
    match format {
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            for row in rows {
                w.serialize(row)?;
            }
            w.flush()?;
        }
        Format::Json => {
            serde_json::to_writer_pretty(&mut *out, rows)?;
            writeln!(out)?;
        }
    }
    Ok(())
}

pub fn spectrum(args: &SpectrumArgs, out: Out) -> Result<(), CliError> {
    let params = args.model.require()?;
    let rows: Vec<SpectrumRow> = spectrum_table(&params, args.n_max, args.l_max)?
        .into_iter()
        .map(|e| SpectrumRow {
            n: e.n,
            l: e.l,
            q0: e.q0,
            qn: e.qn,
            sigma_n: e.sigma_n,
            energy_hartree: e.energy,
            energy_ev: EnergyUnit::ElectronVolt.from_hartree(e.energy),
            energy_cm1: EnergyUnit::InverseCm.from_hartree(e.energy),
        })
        .collect();
    emit(out, &rows, args.format)
}

#[derive(Debug, Serialize)]
struct Sample {
    r: f64,
    #[serde(rename = "Q")]
    q: f64,
}

#[derive(Debug, Serialize)]
struct WavefunctionDoc {
    n: u32,
    l: u32,
    sigma_n: f64,
    q0: f64,
    #[serde(rename = "A")]
    norm_constant: f64,
    samples: Vec<Sample>,
}

pub fn wavefunction(args: &WavefunctionArgs, out: Out) -> Result<(), CliError> {
    let params = args.model.require()?;
    let grid = RadialGrid::uniform(args.r_min, args.r_max, args.points)?;
    let entry = spectrum_entry(&params, args.n, args.l)?;
    let state = bound_state(&params, args.n, args.l)?;
    let samples: Vec<Sample> = grid
        .points()
        .iter()
        .map(|&r| Sample { r, q: state.q(r) })
        .collect();
    if let Some(s) = samples.iter().find(|s| !s.q.is_finite()) {
        return Err(Error::Numeric(format!("Q is not finite at r = {}", s.r)).into());
    }
    let doc = WavefunctionDoc {
        n: args.n,
        l: args.l,
        sigma_n: entry.sigma_n,
        q0: entry.q0,
        norm_constant: state.norm_constant,
        samples,
    };
    match args.format {
        Format::Csv => {
            writeln!(out, "# n={}", doc.n)?;
            writeln!(out, "# l={}", doc.l)?;
            writeln!(out, "# sigma_n={}", doc.sigma_n)?;
            writeln!(out, "# q0={}", doc.q0)?;
            writeln!(out, "# A={}", doc.norm_constant)?;
            emit(out, &doc.samples, Format::Csv)
        }
        Format::Json => {
            serde_json::to_writer_pretty(&mut *out, &doc)?;
            writeln!(out)?;
            Ok(())
        }
    }
}

fn parse_tolerances(raw: &[String]) -> Result<(Option<f64>, BTreeMap<String, f64>), CliError> {
    let number = |s: &str| -> Result<f64, CliError> {
        match s.trim().parse::<f64>() {
            Ok(v) if v.is_finite() && v >= 0.0 => Ok(v),
            _ => {
                Err(Error::Usage(format!("--tolerance: `{s}` is not a non-negative number")).into())
            }
        }
    };
    let mut global = None;
    let mut overrides = BTreeMap::new();
    for item in raw {
        match item.rsplit_once('=') {
            Some((name, value)) if !name.is_empty() => {
                overrides.insert(name.to_string(), number(value)?);
            }
            Some(_) => {
                return Err(
                    Error::Usage(format!("--tolerance: empty check name in `{item}`")).into(),
                )
            }
            None => global = Some(number(item)?),
        }
    }
    Ok((global, overrides))
}

pub fn verify(args: &VerifyArgs, out: Out) -> Result<(), CliError> {
    let suites = Suite::parse_selection(&args.suite)?;
    let (tolerance, overrides) = parse_tolerances(&args.tolerance)?;
    let params = args
        .model
        .resolve()?
        .unwrap_or_else(KratzerParams::canonical);
    let config = VerifyConfig {
        params,
        tolerance,
        overrides,
        operator_points: args.points,
        ..VerifyConfig::default()
    };
    let report = verify::run(&suites, &config)?;
    for name in config.overrides.keys() {
        if report.check(name).is_none() {
            eprintln!("warning: tolerance override `{name}` matches no check");
        }
    }
    serde_json::to_writer_pretty(&mut *out, &report)?;
    writeln!(out)?;
    if report.pass {
        Ok(())
    } else {
        Err(CliError::VerificationFailed)
    }
}

pub fn constants(out: Out) -> Result<(), CliError> {
    serde_json::to_writer_pretty(&mut *out, &UNITS)?;
    writeln!(out)?;
    Ok(())
}

#[derive(Debug, Serialize)]
struct MoleculeRow {
    name: String,
    #[serde(rename = "De")]
    de: f64,
    #[serde(rename = "De_unit")]
    de_unit: String,
    re: f64,
    re_unit: String,
    mu_amu: f64,
    de_hartree: f64,
    re_bohr: f64,
    mu_me: f64,
    alpha: f64,
    beta: f64,
}

fn molecule_row(rec: &MoleculeRecord) -> Result<MoleculeRow, CliError> {
    let m = to_atomic_units(rec)?;
    let p = derive_kratzer(&m);
    Ok(MoleculeRow {
        name: rec.name.clone(),
        de: rec.de_value,
        de_unit: rec.de_unit.to_string(),
        re: rec.re_value,
        re_unit: rec.re_unit.to_string(),
        mu_amu: rec.reduced_mass_amu(),
        de_hartree: m.de,
        re_bohr: m.re,
        mu_me: m.mu,
        alpha: p.alpha,
        beta: p.beta,
    })
}

pub fn molecules(args: &MoleculesArgs, out: Out) -> Result<(), CliError> {
    let table = read_table(&args.file)?;
    let records = match &args.name {
        Some(name) => vec![find_molecule(&table, name)?],
        None => table,
    };
    let rows = records
        .iter()
        .map(molecule_row)
        .collect::<Result<Vec<_>, _>>()?;
    emit(out, &rows, args.format)
}
