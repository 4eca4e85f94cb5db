// SPDX-License-Identifier: Apache-2.0

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "kratzer",
    version,
    about = "Kratzer-potential bound states via the so(2,1) algebra"
)]
pub struct Cli {
    /// Write output to this file instead of standard output.
    #[arg(long, short, global = true, value_name = "PATH")]
    pub output: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Closed-form energies for n ≤ n-max, l ≤ l-max.
    Spectrum(SpectrumArgs),
    /// Samples of the normalized radial wavefunction Q_n(r).
    Wavefunction(WavefunctionArgs),
    /// Run the verification suites and print a JSON report.
    Verify(VerifyArgs),
    /// Print the fixed unit-conversion constants as JSON.
    Constants,
    /// List the molecules in a table, or inspect one.
    Molecules(MoleculesArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

/// Model parameters, in one of three modes.
#[derive(Debug, Clone, Default, Args)]
pub struct ModelArgs {
    /// Well depth Dₑ.
    #[arg(long = "De", value_name = "VALUE", allow_negative_numbers = true)]
    pub de: Option<f64>,
    /// Unit of --De: hartree, eV or cm-1.
    #[arg(long = "De-unit", value_name = "UNIT")]
    pub de_unit: Option<String>,
    /// Equilibrium distance rₑ.
    #[arg(long = "re", value_name = "VALUE", allow_negative_numbers = true)]
    pub re: Option<f64>,
    /// Unit of --re: bohr or angstrom.
    #[arg(long = "re-unit", value_name = "UNIT")]
    pub re_unit: Option<String>,
    /// Reduced mass in amu.
    #[arg(long = "mu-amu", value_name = "VALUE", allow_negative_numbers = true)]
    pub mu_amu: Option<f64>,

    /// Molecule table (CSV).
    #[arg(long, value_name = "FILE")]
    pub molecules: Option<PathBuf>,
    /// Molecule name within --molecules.
    #[arg(long, value_name = "NAME")]
    pub name: Option<String>,

    /// Coefficient α of the 1/r term, atomic units.
    #[arg(long, allow_negative_numbers = true)]
    pub alpha: Option<f64>,
    /// Coefficient β of the 1/r² term, atomic units.
    #[arg(long, allow_negative_numbers = true)]
    pub beta: Option<f64>,
    /// Reduced mass in electron masses.
    #[arg(long, allow_negative_numbers = true)]
    pub mu: Option<f64>,
}

#[derive(Debug, Args)]
pub struct SpectrumArgs {
    #[command(flatten)]
    pub model: ModelArgs,
    #[arg(long, default_value_t = 4)]
    pub n_max: u32,
    #[arg(long, default_value_t = 0)]
    pub l_max: u32,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct WavefunctionArgs {
    #[command(flatten)]
    pub model: ModelArgs,
    #[arg(long, default_value_t = 0)]
    pub n: u32,
    #[arg(long, default_value_t = 0)]
    pub l: u32,
    #[arg(long, allow_negative_numbers = true, default_value_t = 0.01)]
    pub r_min: f64,
    #[arg(long, allow_negative_numbers = true, default_value_t = 20.0)]
    pub r_max: f64,
    #[arg(long, default_value_t = 200)]
    pub points: usize,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// algebra, oracle, virial, adjoint, wavefunction or all.
    #[arg(long, default_value = "all")]
    pub suite: String,
    /// VALUE replaces every tolerance; NAME=VALUE sets one check. Repeatable.
    #[arg(long, value_name = "[NAME=]VALUE")]
    pub tolerance: Vec<String>,
    /// Grid points for the operator checks.
    #[arg(long, default_value_t = 4000)]
    pub points: usize,
    #[command(flatten)]
    pub model: ModelArgs,
}

#[derive(Debug, Args)]
pub struct MoleculesArgs {
    /// Molecule table (CSV).
    pub file: PathBuf,
    /// Show one molecule with its derived parameters.
    #[arg(long)]
    pub name: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
}
