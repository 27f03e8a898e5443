//! Seeded random generators for matrices, morphisms and units.
//!
//! All randomized checks in the test suites draw from here so that a run is
//! reproducible from its seed alone.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::exact::{Matrix, Scalar};
use crate::finvect::{Mor, Obj};
use crate::nakayama::{self, PointElement, Unit};
use crate::structures::Algebra;

/// Default seed for every randomized suite and for the CLI `--seed` flag.
pub const DEFAULT_SEED: u64 = 42;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A small rational: numerator in `-4..=4`, denominator in `1..=3`.
pub fn random_scalar(rng: &mut ChaCha8Rng) -> Scalar {
    let num = rng.gen_range(-4i64..=4);
    let den = rng.gen_range(1i64..=3);
    Scalar::ratio(num, den)
}

pub fn random_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> Matrix {
    let entries = (0..rows * cols).map(|_| random_scalar(rng)).collect();
    Matrix::new(rows, cols, entries).expect("shape by construction")
}

/// Retries until the sample is invertible; at these entry distributions a
/// singular draw is rare.
pub fn random_invertible(rng: &mut ChaCha8Rng, n: usize) -> Matrix {
    for _ in 0..1000 {
        let m = random_matrix(rng, n, n);
        if m.rank() == n {
            return m;
        }
    }
    unreachable!("could not sample an invertible {n}x{n} matrix");
}

pub fn random_mor(rng: &mut ChaCha8Rng, dom: &[Obj], cod: &[Obj]) -> Mor {
    let rows: usize = cod.iter().map(Obj::dim).product();
    let cols: usize = dom.iter().map(Obj::dim).product();
    Mor::new(dom.to_vec(), cod.to_vec(), random_matrix(rng, rows, cols))
        .expect("shape by construction")
}

pub fn random_point(rng: &mut ChaCha8Rng, algebra: &Algebra) -> PointElement {
    let vec = random_matrix(rng, algebra.dim(), 1);
    PointElement::from_coords(algebra.clone(), vec.entries()).expect("shape by construction")
}

/// Samples point elements until one is a unit of the algebra.
pub fn random_unit(rng: &mut ChaCha8Rng, algebra: &Algebra) -> Unit {
    for _ in 0..1000 {
        let p = random_point(rng, algebra);
        if let Ok(unit) = nakayama::try_invert_unit(&p) {
            return unit;
        }
    }
    unreachable!("could not sample a unit of {}", algebra.carrier().label());
}
