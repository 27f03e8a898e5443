//! The on-disk structure-constant format.
//!
//! An algebra file is JSON with a fixed field order. All rationals are
//! strings `"p/q"` in lowest terms with positive denominator; emission is
//! canonical, so `parse ∘ emit` is the identity byte for byte. Index
//! conventions:
//!
//! * `m[i][j][k]` — coefficient of `e_k` in `e_i · e_j`
//! * `delta[i][j][k]` — coefficient of `e_j ⊗ e_k` in `Δ(e_i)`
//! * `kappa[i][j]` — `κ(e_i, e_j)`
//! * `phi[i][j]` — dual-basis coordinate `i` of `Φ(e_j)`

use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use frobkit::exact::{Matrix, Scalar};
use frobkit::finvect::{Mor, Obj};
use frobkit::structures::{Algebra, Coalgebra, Pairing};
use frobkit::zoo::GeneratedFrobenius;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Error)]
pub enum FileError {
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),

    #[error("unsupported schema version {0} (expected {SCHEMA_VERSION})")]
    Schema(u32),

    #[error("{0}")]
    Shape(String),

    #[error("{0}")]
    Core(#[from] frobkit::Error),
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct AlgebraFile {
    pub schema_version: u32,
    pub carrier_dim: usize,
    pub basis_labels: Vec<String>,
    pub m: Vec<Vec<Vec<String>>>,
    pub eta: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub delta: Option<Vec<Vec<Vec<String>>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub eps: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kappa: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub phi: Option<Vec<Vec<String>>>,
}

/// The structures described by a parsed file, rebuilt over a fresh
/// carrier object.
pub struct LoadedStructures {
    pub algebra: Algebra,
    pub coalgebra: Option<Coalgebra>,
    pub pairing: Option<Pairing>,
    pub phi: Option<Mor>,
    pub basis_labels: Vec<String>,
}

pub fn parse(text: &str) -> Result<AlgebraFile, FileError> {
    let file: AlgebraFile = serde_json::from_str(text)?;
    if file.schema_version != SCHEMA_VERSION {
        return Err(FileError::Schema(file.schema_version));
    }
    Ok(file)
}

/// Canonical emission: pretty JSON in declaration order plus a trailing
/// newline.
pub fn emit(file: &AlgebraFile) -> String {
    let mut text = serde_json::to_string_pretty(file).expect("serializable");
    text.push('\n');
    text
}

fn scalar(s: &str) -> Result<Scalar, FileError> {
    Ok(Scalar::from_str(s)?)
}

fn scalar_string(s: &Scalar) -> String {
    s.to_string()
}

fn vector(entries: &[String], n: usize, what: &str) -> Result<Vec<Scalar>, FileError> {
    if entries.len() != n {
        return Err(FileError::Shape(format!(
            "{what} has {} entries, expected {n}",
            entries.len()
        )));
    }
    entries.iter().map(|s| scalar(s)).collect()
}

fn cube(
    table: &[Vec<Vec<String>>],
    n: usize,
    what: &str,
) -> Result<Vec<Vec<Vec<Scalar>>>, FileError> {
    if table.len() != n {
        return Err(FileError::Shape(format!(
            "{what} has {} rows, expected {n}",
            table.len()
        )));
    }
    table
        .iter()
        .map(|plane| {
            if plane.len() != n {
                return Err(FileError::Shape(format!("{what} is not {n}x{n}x{n}")));
            }
            plane.iter().map(|row| vector(row, n, what)).collect()
        })
        .collect()
}

fn grid(table: &[Vec<String>], n: usize, what: &str) -> Result<Matrix, FileError> {
    if table.len() != n {
        return Err(FileError::Shape(format!(
            "{what} has {} rows, expected {n}",
            table.len()
        )));
    }
    let mut out = Matrix::zeros(n, n);
    for (i, row) in table.iter().enumerate() {
        let row = vector(row, n, what)?;
        for (j, v) in row.into_iter().enumerate() {
            out.set(i, j, v);
        }
    }
    Ok(out)
}

pub fn to_structures(file: &AlgebraFile) -> Result<LoadedStructures, FileError> {
    let n = file.carrier_dim;
    if n == 0 {
        return Err(FileError::Shape("carrier_dim must be at least 1".into()));
    }
    if file.basis_labels.len() != n {
        return Err(FileError::Shape(format!(
            "expected {n} basis labels, got {}",
            file.basis_labels.len()
        )));
    }
    let carrier = Obj::new("A", n)?;

    let m_table = cube(&file.m, n, "m")?;
    let mut m_matrix = Matrix::zeros(n, n * n);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                m_matrix.set(k, i * n + j, m_table[i][j][k].clone());
            }
        }
    }
    let m = Mor::new(
        vec![carrier.clone(), carrier.clone()],
        vec![carrier.clone()],
        m_matrix,
    )?;
    let eta_coords = vector(&file.eta, n, "eta")?;
    let eta = Mor::new(
        vec![],
        vec![carrier.clone()],
        Matrix::new(n, 1, eta_coords)?,
    )?;
    let algebra = Algebra::new(carrier.clone(), m, eta)?;

    let coalgebra = match (&file.delta, &file.eps) {
        (None, None) => None,
        (Some(delta), Some(eps)) => {
            let delta_table = cube(delta, n, "delta")?;
            let mut delta_matrix = Matrix::zeros(n * n, n);
            for i in 0..n {
                for j in 0..n {
                    for k in 0..n {
                        delta_matrix.set(j * n + k, i, delta_table[i][j][k].clone());
                    }
                }
            }
            let delta = Mor::new(
                vec![carrier.clone()],
                vec![carrier.clone(), carrier.clone()],
                delta_matrix,
            )?;
            let eps_coords = vector(eps, n, "eps")?;
            let eps = Mor::new(
                vec![carrier.clone()],
                vec![],
                Matrix::new(1, n, eps_coords)?,
            )?;
            Some(Coalgebra::new(carrier.clone(), delta, eps)?)
        }
        _ => {
            return Err(FileError::Shape(
                "delta and eps must be present together".into(),
            ))
        }
    };

    let pairing = match &file.kappa {
        None => None,
        Some(kappa) => Some(Pairing::from_gram(carrier.clone(), &grid(kappa, n, "kappa")?)?),
    };

    let phi = match &file.phi {
        None => None,
        Some(phi) => Some(Mor::new(
            vec![carrier.clone()],
            vec![carrier.dual()],
            grid(phi, n, "phi")?,
        )?),
    };

    Ok(LoadedStructures {
        algebra,
        coalgebra,
        pairing,
        phi,
        basis_labels: file.basis_labels.clone(),
    })
}

fn m_block(algebra: &Algebra) -> Vec<Vec<Vec<String>>> {
    let n = algebra.dim();
    let matrix = algebra.m().matrix();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    (0..n)
                        .map(|k| scalar_string(matrix.at(k, i * n + j)))
                        .collect()
                })
                .collect()
        })
        .collect()
}

pub fn delta_block(coalgebra: &Coalgebra) -> Vec<Vec<Vec<String>>> {
    let n = coalgebra.carrier().dim();
    let matrix = coalgebra.delta().matrix();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    (0..n)
                        .map(|k| scalar_string(matrix.at(j * n + k, i)))
                        .collect()
                })
                .collect()
        })
        .collect()
}

pub fn eps_block(coalgebra: &Coalgebra) -> Vec<String> {
    let n = coalgebra.carrier().dim();
    (0..n)
        .map(|i| scalar_string(coalgebra.eps().matrix().at(0, i)))
        .collect()
}

pub fn kappa_block(pairing: &Pairing) -> Vec<Vec<String>> {
    matrix_block(&pairing.gram())
}

pub fn matrix_block(matrix: &Matrix) -> Vec<Vec<String>> {
    (0..matrix.rows())
        .map(|i| {
            (0..matrix.cols())
                .map(|j| scalar_string(matrix.at(i, j)))
                .collect()
        })
        .collect()
}

pub fn vector_block(matrix: &Matrix) -> Vec<String> {
    matrix.entries().iter().map(scalar_string).collect()
}

/// The bare algebra part of a file, without any presentation blocks.
pub fn base_file(algebra: &Algebra, basis_labels: &[String]) -> AlgebraFile {
    AlgebraFile {
        schema_version: SCHEMA_VERSION,
        carrier_dim: algebra.dim(),
        basis_labels: basis_labels.to_vec(),
        m: m_block(algebra),
        eta: vector_block(algebra.eta().matrix()),
        delta: None,
        eps: None,
        kappa: None,
        phi: None,
    }
}

/// The full file for a generated example: algebra plus its `(Δ, ε)` and κ
/// blocks.
pub fn from_generated(g: &GeneratedFrobenius) -> AlgebraFile {
    let mut file = base_file(&g.algebra, &g.basis_labels);
    file.delta = Some(delta_block(&g.coalgebra));
    file.eps = Some(eps_block(&g.coalgebra));
    file.kappa = Some(kappa_block(&g.pairing));
    file
}

#[cfg(test)]
mod tests {
    use super::*;
    use frobkit::zoo;

    #[test]
    fn round_trip_is_byte_exact() {
        let file = from_generated(&zoo::quantum_plane(&Scalar::from_int(2)).unwrap());
        let text = emit(&file);
        let reparsed = parse(&text).unwrap();
        assert_eq!(emit(&reparsed), text);
    }

    #[test]
    fn structures_survive_the_file() {
        let g = zoo::matrix_algebra(2).unwrap();
        let file = from_generated(&g);
        let loaded = to_structures(&file).unwrap();
        assert_eq!(loaded.algebra.m().matrix(), g.algebra.m().matrix());
        assert_eq!(
            loaded.coalgebra.as_ref().unwrap().delta().matrix(),
            g.coalgebra.delta().matrix()
        );
        assert_eq!(loaded.pairing.as_ref().unwrap().gram(), g.pairing.gram());
    }

    #[test]
    fn zero_denominator_is_rejected() {
        let mut file = from_generated(&zoo::matrix_algebra(1).unwrap());
        file.eta = vec!["1/0".into()];
        let text = emit(&file);
        let parsed = parse(&text).unwrap();
        assert!(matches!(
            to_structures(&parsed),
            Err(FileError::Core(frobkit::Error::BadRational(_)))
        ));
    }

    #[test]
    fn schema_version_is_enforced() {
        let mut file = from_generated(&zoo::matrix_algebra(1).unwrap());
        file.schema_version = 99;
        assert!(matches!(parse(&emit(&file)), Err(FileError::Schema(99))));
    }

    #[test]
    fn delta_without_eps_is_rejected() {
        let g = zoo::matrix_algebra(2).unwrap();
        let mut file = from_generated(&g);
        file.eps = None;
        assert!(matches!(
            to_structures(&file),
            Err(FileError::Shape(_))
        ));
    }
}
