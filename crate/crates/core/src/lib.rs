//! Construction, application and verification of the quantum Schur transform.
//!
//! The transform is built as a cascade of Clebsch-Gordan transforms, each of
//! which tensors a `U(d)` irrep with the defining representation. Every CG
//! transform is itself assembled recursively from a `U(d-1)` transform and a
//! `d x d` rotation whose entries are reduced Wigner coefficients.
//!
//! Module map:
//!
//! - [`partition`]: integer partitions, interlacing, box moves and exact
//!   dimension formulas.
//! - [`bases`]: Gel'fand-Zetlin patterns, Young-Yamanouchi paths, semistandard
//!   tableaux, path ranking and fixed-width register encodings.
//! - [`wigner`]: reduced Wigner coefficients and the `d x d` reduced Wigner
//!   matrix.
//! - [`clebsch_gordan`]: the recursive CG transform, dense per irrep or
//!   applied to labeled states.
//! - [`schur`]: the CG cascade, as a sparse engine and as a dense unitary.
//! - [`oracle`]: brute-force references (permutation and tensor-power
//!   operators, Young symmetrizers, irrep extraction, Schur polynomials).
//! - [`verify`]: residual reports built on the oracles.
//! - [`circuit`]: two-level unitary synthesis and gate-count accounting.
//! - [`cli`]: the `schurkit` command-line front end.
//!
//! With the default `parallel` feature the heavy loops run on rayon; each of
//! them also has a sequential `_seq` twin that is always available.

pub mod bases;
pub mod circuit;
pub mod clebsch_gordan;
pub mod cli;
mod error;
pub mod json;
pub mod oracle;
pub mod partition;
pub mod schur;
pub mod verify;
pub mod wigner;

pub use num_complex::Complex64 as C64;

pub use bases::{GzPattern, Ssyt, YyPath};
pub use circuit::{GateList, GateCountReport};
pub use clebsch_gordan::{cg_block, CgBlock};
pub use error::{Error, Result};
pub use partition::Partition;
pub use schur::{schur_unitary, SchurLabel, SchurTransform, SchurUnitary};
