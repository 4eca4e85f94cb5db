// SPDX-License-Identifier: Apache-2.0

//! Molecule tables, unit conversion and model-parameter derivation.
//!
//! Everything downstream of this module works in Hartree atomic units:
//! energies in hartree, lengths in bohr, masses in electron masses and
//! ħ = [`HBAR`] = 1.

use std::fmt;
use std::io::Read;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::model::KratzerParams;

/// Reduced Planck constant in the internal unit system.
pub const HBAR: f64 = 1.0;

/// Fixed conversion constants (CODATA 2018).
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct UnitSystem {
    pub hbar: f64,
    #[serde(rename = "hartree_per_eV")]
    pub hartree_per_ev: f64,
    pub hartree_per_invcm: f64,
    pub bohr_per_angstrom: f64,
    pub electronmass_per_amu: f64,
}

/// 1 hartree in eV.
pub const EV_PER_HARTREE: f64 = 27.211_386_245_988;
/// 1 hartree in cm⁻¹.
pub const INVCM_PER_HARTREE: f64 = 219_474.631_363_2;
/// 1 bohr in ångström.
pub const ANGSTROM_PER_BOHR: f64 = 0.529_177_210_903;
/// 1 dalton in electron masses.
pub const ELECTRONMASS_PER_AMU: f64 = 1_822.888_486_209;

pub const UNITS: UnitSystem = UnitSystem {
    hbar: HBAR,
    hartree_per_ev: 1.0 / EV_PER_HARTREE,
    hartree_per_invcm: 1.0 / INVCM_PER_HARTREE,
    bohr_per_angstrom: 1.0 / ANGSTROM_PER_BOHR,
    electronmass_per_amu: ELECTRONMASS_PER_AMU,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum EnergyUnit {
    Hartree,
    #[serde(rename = "eV")]
    ElectronVolt,
    #[serde(rename = "cm-1")]
    InverseCm,
}

impl EnergyUnit {
    pub fn to_hartree(self, value: f64) -> f64 {
        match self {
            Self::Hartree => value,
            Self::ElectronVolt => value / EV_PER_HARTREE,
            Self::InverseCm => value / INVCM_PER_HARTREE,
        }
    }

    pub fn from_hartree(self, value: f64) -> f64 {
        match self {
            Self::Hartree => value,
            Self::ElectronVolt => value * EV_PER_HARTREE,
            Self::InverseCm => value * INVCM_PER_HARTREE,
        }
    }
}

impl FromStr for EnergyUnit {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "hartree" => Ok(Self::Hartree),
            "eV" => Ok(Self::ElectronVolt),
            "cm-1" => Ok(Self::InverseCm),
            other => Err(Error::Unit {
                tag: other.to_string(),
                column: "De_unit",
            }),
        }
    }
}

impl fmt::Display for EnergyUnit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Hartree => "hartree",
            Self::ElectronVolt => "eV",
            Self::InverseCm => "cm-1",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum LengthUnit {
    Bohr,
    Angstrom,
}

impl LengthUnit {
    pub fn to_bohr(self, value: f64) -> f64 {
        match self {
            Self::Bohr => value,
            Self::Angstrom => value / ANGSTROM_PER_BOHR,
        }
    }

    pub fn from_bohr(self, value: f64) -> f64 {
        match self {
            Self::Bohr => value,
            Self::Angstrom => value * ANGSTROM_PER_BOHR,
        }
    }
}

impl FromStr for LengthUnit {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "bohr" => Ok(Self::Bohr),
            "angstrom" => Ok(Self::Angstrom),
            other => Err(Error::Unit {
                tag: other.to_string(),
                column: "re_unit",
            }),
        }
    }
}

impl fmt::Display for LengthUnit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Bohr => "bohr",
            Self::Angstrom => "angstrom",
        })
    }
}

/// One row of a molecule table, still in the units it was published in.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MoleculeRecord {
    pub name: String,
    pub de_value: f64,
    pub de_unit: EnergyUnit,
    pub re_value: f64,
    pub re_unit: LengthUnit,
    pub mass1_amu: f64,
    pub mass2_amu: f64,
    /// Optional reduced mass override, in amu.
    pub mu_amu: Option<f64>,
}

impl MoleculeRecord {
    /// Reduced mass in amu, honouring the override column.
    pub fn reduced_mass_amu(&self) -> f64 {
        self.mu_amu
            .unwrap_or(self.mass1_amu * self.mass2_amu / (self.mass1_amu + self.mass2_amu))
    }
}

/// Physical inputs in atomic units.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MolecularParams {
    /// Well depth, hartree.
    pub de: f64,
    /// Equilibrium distance, bohr.
    pub re: f64,
    /// Reduced mass, electron masses.
    pub mu: f64,
}

impl MolecularParams {
    pub fn new(de: f64, re: f64, mu: f64) -> Result<Self> {
        for (name, v) in [("De", de), ("re", re), ("mu", mu)] {
            if !v.is_finite() {
                return Err(Error::Numeric(format!("{name} is not finite ({v})")));
            }
            if v <= 0.0 {
                return Err(Error::Domain(format!("{name} must be positive, got {v}")));
            }
        }
        Ok(Self { de, re, mu })
    }
}

pub const TABLE_COLUMNS: [&str; 7] = [
    "name",
    "De",
    "De_unit",
    "re",
    "re_unit",
    "mass1_amu",
    "mass2_amu",
];
pub const OVERRIDE_COLUMN: &str = "mu_amu";

/// Parses a molecule table.
///
/// The header must be exactly `name,De,De_unit,re,re_unit,mass1_amu,mass2_amu`,
/// optionally followed by a `mu_amu` column whose cells may be left empty.
pub fn parse_molecule_table<R: Read>(input: R) -> Result<Vec<MoleculeRecord>> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(true)
        .flexible(false)
        .from_reader(input);

    let headers = reader.headers().map_err(csv_error)?.clone();
    let names: Vec<&str> = headers.iter().collect();
    let has_override = match names.len() {
        7 => false,
        8 => names[7] == OVERRIDE_COLUMN,
        _ => false,
    };
    if names[..names.len().min(7)] != TABLE_COLUMNS[..] || (names.len() == 8 && !has_override) {
        return Err(Error::Parse {
            line: 1,
            message: format!(
                "expected header `{}` (optionally `,{OVERRIDE_COLUMN}`), got `{}`",
                TABLE_COLUMNS.join(","),
                names.join(",")
            ),
        });
    }

    let mut out = Vec::new();
    for row in reader.records() {
        let row = row.map_err(csv_error)?;
        let line = row.position().map_or(0, |p| p.line());
        out.push(parse_row(&row, line, has_override)?);
    }
    Ok(out)
}

fn csv_error(e: csv::Error) -> Error {
    let line = e.position().map_or(0, |p| p.line());
    Error::Parse {
        line,
        message: e.to_string(),
    }
}

fn parse_row(row: &csv::StringRecord, line: u64, has_override: bool) -> Result<MoleculeRecord> {
    let field = |i: usize| row.get(i).unwrap_or("").trim();
    let number = |i: usize| -> Result<f64> {
        let raw = field(i);
        let v: f64 = raw.parse().map_err(|_| Error::Parse {
            line,
            message: format!("column `{}`: `{raw}` is not a number", column_name(i)),
        })?;
        if !v.is_finite() || v <= 0.0 {
            return Err(Error::Domain(format!(
                "line {line}: column `{}` must be positive and finite, got {v}",
                column_name(i)
            )));
        }
        Ok(v)
    };

    let name = field(0);
    if name.is_empty() {
        return Err(Error::Parse {
            line,
            message: "empty molecule name".into(),
        });
    }
    let de_value = number(1)?;
    let de_unit: EnergyUnit = field(2).parse()?;
    let re_value = number(3)?;
    let re_unit: LengthUnit = field(4).parse()?;
    let mass1_amu = number(5)?;
    let mass2_amu = number(6)?;
    let mu_amu = if has_override && !field(7).is_empty() {
        Some(number(7)?)
    } else {
        None
    };

    Ok(MoleculeRecord {
        name: name.to_string(),
        de_value,
        de_unit,
        re_value,
        re_unit,
        mass1_amu,
        mass2_amu,
        mu_amu,
    })
}

fn column_name(i: usize) -> &'static str {
    TABLE_COLUMNS.get(i).copied().unwrap_or(OVERRIDE_COLUMN)
}

pub fn to_atomic_units(rec: &MoleculeRecord) -> Result<MolecularParams> {
    let de = rec.de_unit.to_hartree(rec.de_value);
    let re = rec.re_unit.to_bohr(rec.re_value);
    let mu = rec.reduced_mass_amu() * ELECTRONMASS_PER_AMU;
    MolecularParams::new(de, re, mu)
}

/// α = −2Dₑrₑ, β = Dₑrₑ².
pub fn derive_kratzer(p: &MolecularParams) -> KratzerParams {
    KratzerParams {
        alpha: -2.0 * p.de * p.re,
        beta: p.de * p.re * p.re,
        mu: p.mu,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const HEADER: &str = "name,De,De_unit,re,re_unit,mass1_amu,mass2_amu\n";

    #[test]
    fn header_only_table_is_empty() {
        assert!(parse_molecule_table(HEADER.as_bytes()).unwrap().is_empty());
    }

    #[test]
    fn identity_row() {
        let text = format!("{HEADER}X,1.0,hartree,1.0,bohr,1.0,1.0\n");
        let recs = parse_molecule_table(text.as_bytes()).unwrap();
        assert_eq!(recs.len(), 1);
        let r = &recs[0];
        assert_eq!(r.name, "X");
        assert_eq!((r.de_value, r.de_unit), (1.0, EnergyUnit::Hartree));
        assert_eq!((r.re_value, r.re_unit), (1.0, LengthUnit::Bohr));
        assert_eq!((r.mass1_amu, r.mass2_amu), (1.0, 1.0));
    }

    #[test]
    fn unknown_unit_is_named() {
        let text = format!("{HEADER}X,1.0,parsec,1.0,bohr,1.0,1.0\n");
        let err = parse_molecule_table(text.as_bytes()).unwrap_err();
        assert!(matches!(&err, Error::Unit { tag, .. } if tag == "parsec"));
        assert!(err.to_string().contains("parsec"));
    }

    #[test]
    fn malformed_row_reports_line() {
        let text = format!("{HEADER}A,1.0,hartree,1.0,bohr,1.0,1.0\nB,oops,hartree,1,bohr,1,1\n");
        match parse_molecule_table(text.as_bytes()).unwrap_err() {
            Error::Parse { line, .. } => assert_eq!(line, 3),
            e => panic!("unexpected {e:?}"),
        }
        let short = format!("{HEADER}A,1.0,hartree\n");
        assert!(matches!(
            parse_molecule_table(short.as_bytes()).unwrap_err(),
            Error::Parse { line: 2, .. }
        ));
    }

    #[test]
    fn nonpositive_value_is_domain_error() {
        let text = format!("{HEADER}X,-1.0,hartree,1.0,bohr,1.0,1.0\n");
        assert!(matches!(
            parse_molecule_table(text.as_bytes()).unwrap_err(),
            Error::Domain(_)
        ));
    }

    #[test]
    fn wrong_header_rejected() {
        let text = "name,De,re\nX,1,1\n";
        assert!(matches!(
            parse_molecule_table(text.as_bytes()).unwrap_err(),
            Error::Parse { line: 1, .. }
        ));
    }

    #[test]
    fn override_column_and_row_order() {
        let text = "name,De,De_unit,re,re_unit,mass1_amu,mass2_amu,mu_amu\n\
                    B,1,eV,1,angstrom,1,1,\n\
                    A,1,cm-1,1,bohr,1,1,0.25\n";
        let recs = parse_molecule_table(text.as_bytes()).unwrap();
        assert_eq!(recs[0].name, "B");
        assert_eq!(recs[0].reduced_mass_amu(), 0.5);
        assert_eq!(recs[1].reduced_mass_amu(), 0.25);
    }

    #[test]
    fn unit_mass_maps_to_unit_params() {
        let m = 2.0 / ELECTRONMASS_PER_AMU;
        let rec = MoleculeRecord {
            name: "X".into(),
            de_value: 1.0,
            de_unit: EnergyUnit::Hartree,
            re_value: 1.0,
            re_unit: LengthUnit::Bohr,
            mass1_amu: m,
            mass2_amu: m,
            mu_amu: None,
        };
        let p = to_atomic_units(&rec).unwrap();
        assert_eq!((p.de, p.re), (1.0, 1.0));
        assert!((p.mu - 1.0).abs() < 1e-14);
    }

    #[test]
    fn carbon_monoxide_reduced_mass() {
        let rec = MoleculeRecord {
            name: "CO".into(),
            de_value: 1.0,
            de_unit: EnergyUnit::Hartree,
            re_value: 1.0,
            re_unit: LengthUnit::Bohr,
            mass1_amu: 12.0,
            mass2_amu: 15.995,
            mu_amu: None,
        };
        // 12 * 15.995 / 27.995 = 6.856224325772459 amu
        let p = to_atomic_units(&rec).unwrap();
        let expected = 6.856_224_325_772_459 * 1_822.888_486_209;
        assert!((p.mu / expected - 1.0).abs() < 1e-14);
    }

    #[test]
    fn length_round_trip() {
        let bohr = LengthUnit::Angstrom.to_bohr(1.0);
        assert!((LengthUnit::Angstrom.from_bohr(bohr) - 1.0).abs() < 1e-15);
        for unit in [
            EnergyUnit::Hartree,
            EnergyUnit::ElectronVolt,
            EnergyUnit::InverseCm,
        ] {
            let x = 0.123_456;
            assert!((unit.from_hartree(unit.to_hartree(x)) / x - 1.0).abs() < 1e-14);
        }
    }

    #[test]
    fn derive_kratzer_examples() {
        let k = derive_kratzer(&MolecularParams::new(1.0, 1.0, 1.0).unwrap());
        assert_eq!((k.alpha, k.beta, k.mu), (-2.0, 1.0, 1.0));
        let k = derive_kratzer(&MolecularParams::new(2.0, 3.0, 1.0).unwrap());
        assert_eq!((k.alpha, k.beta), (-12.0, 18.0));
    }

    #[test]
    fn invalid_params_rejected() {
        assert!(matches!(
            MolecularParams::new(0.0, 1.0, 1.0),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            MolecularParams::new(f64::INFINITY, 1.0, 1.0),
            Err(Error::Numeric(_))
        ));
    }
}
