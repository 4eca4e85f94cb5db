// SPDX-License-Identifier: Apache-2.0

//! Algebraic (so(2,1)) solution of the Kratzer oscillator for diatomic
//! ro-vibration, with two independent numerical checks: a finite-difference
//! representation of the algebra generators on a radial grid, and a
//! tridiagonal eigensolver for the radial Schrödinger equation.
//!
//! All quantities are in Hartree atomic units with ħ = [`units::HBAR`] = 1.

pub mod adjoint;
pub mod algebra;
pub mod error;
pub mod grid;
pub mod model;
pub mod operators;
pub mod oracle;
pub mod poly;
pub mod quadrature;
pub mod spectrum;
pub mod tridiagonal;
pub mod units;
pub mod verify;
pub mod wavefunction;

pub use error::{Error, Result};
pub use model::KratzerParams;
