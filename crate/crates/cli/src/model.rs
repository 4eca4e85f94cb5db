// SPDX-License-Identifier: Apache-2.0

use std::fs::File;

use kratzer_core::units::{
    derive_kratzer, parse_molecule_table, to_atomic_units, EnergyUnit, LengthUnit, MolecularParams,
    MoleculeRecord, ELECTRONMASS_PER_AMU,
};
use kratzer_core::{Error, KratzerParams};

use crate::args::ModelArgs;
use crate::error::CliError;

fn missing(flag: &str, mode: &str) -> CliError {
    Error::Usage(format!("missing required flag {flag} ({mode} mode)")).into()
}

impl ModelArgs {
    fn physical_given(&self) -> bool {
        self.de.is_some()
            || self.de_unit.is_some()
            || self.re.is_some()
            || self.re_unit.is_some()
            || self.mu_amu.is_some()
    }

    fn file_given(&self) -> bool {
        self.molecules.is_some() || self.name.is_some()
    }

    fn raw_given(&self) -> bool {
        self.alpha.is_some() || self.beta.is_some() || self.mu.is_some()
    }

    /// `Ok(None)` when no mode was selected.
    pub fn resolve(&self) -> Result<Option<KratzerParams>, CliError> {
        let modes = [self.physical_given(), self.file_given(), self.raw_given()];
        match modes.iter().filter(|&&m| m).count() {
            0 => return Ok(None),
            1 => {}
            _ => {
                return Err(Error::Usage(
                    "choose one of --De/--re/--mu-amu, --molecules/--name or --alpha/--beta/--mu"
                        .into(),
                )
                .into())
            }
        }
        if modes[0] {
            let de = self.de.ok_or_else(|| missing("--De", "physical"))?;
            let re = self.re.ok_or_else(|| missing("--re", "physical"))?;
            let mu_amu = self.mu_amu.ok_or_else(|| missing("--mu-amu", "physical"))?;
            let de_unit: EnergyUnit = self.de_unit.as_deref().unwrap_or("hartree").parse()?;
            let re_unit: LengthUnit = self.re_unit.as_deref().unwrap_or("bohr").parse()?;
            let m = MolecularParams::new(
                de_unit.to_hartree(de),
                re_unit.to_bohr(re),
                mu_amu * ELECTRONMASS_PER_AMU,
            )?;
            return Ok(Some(derive_kratzer(&m)));
        }
        if modes[1] {
            let path = self
                .molecules
                .as_ref()
                .ok_or_else(|| missing("--molecules", "file"))?;
            let name = self
                .name
                .as_deref()
                .ok_or_else(|| missing("--name", "file"))?;
            let record = find_molecule(&read_table(path)?, name)?;
            let m = to_atomic_units(&record)?;
            return Ok(Some(derive_kratzer(&m)));
        }
        let alpha = self.alpha.ok_or_else(|| missing("--alpha", "raw"))?;
        let beta = self.beta.ok_or_else(|| missing("--beta", "raw"))?;
        let mu = self.mu.ok_or_else(|| missing("--mu", "raw"))?;
        Ok(Some(KratzerParams::new(alpha, beta, mu)?))
    }

    pub fn require(&self) -> Result<KratzerParams, CliError> {
        self.resolve()?.ok_or_else(|| {
            Error::Usage(
                "no model given: pass --De/--re/--mu-amu, --molecules/--name or --alpha/--beta/--mu".into(),
            )
            .into()
        })
    }
}

pub fn read_table(path: &std::path::Path) -> Result<Vec<MoleculeRecord>, CliError> {
    let file = File::open(path).map_err(|e| CliError::Input {
        path: path.display().to_string(),
        source: e,
    })?;
    Ok(parse_molecule_table(file)?)
}

pub fn find_molecule(table: &[MoleculeRecord], name: &str) -> Result<MoleculeRecord, CliError> {
    table
        .iter()
        .find(|r| r.name == name)
        .cloned()
        .ok_or_else(|| Error::Usage(format!("no molecule named `{name}` in the table")).into())
}
