//! Command-line surface for the exact Frobenius-structure engine:
//! structure-constant files, axiom checking with witnesses, presentation
//! conversion, and Nakayama analysis.

#![allow(clippy::needless_range_loop)]

pub mod commands;
pub mod format;
pub mod report;
