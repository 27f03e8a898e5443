//! Exact rational scalars and dense matrix kernels.
//!
//! Everything downstream reduces to the operations in this module:
//! multiplication, Kronecker products, exact inversion and null spaces
//! of matrices over arbitrary-precision rationals. There is no floating
//! point anywhere; equality of matrices is entrywise equality of reduced
//! fractions, so every identity checked elsewhere is an exact decision.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Zero};

use crate::error::Error;

/// An arbitrary-precision rational number, kept in lowest terms with a
/// positive denominator.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Scalar(BigRational);

impl Scalar {
    pub fn zero() -> Self {
        Scalar(BigRational::zero())
    }

    pub fn one() -> Self {
        Scalar(BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Scalar(BigRational::from_integer(BigInt::from(n)))
    }

    /// Builds `num/den`. Panics when `den` is zero; use [`Scalar::from_str`]
    /// for untrusted input.
    pub fn ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Scalar(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    /// Multiplicative inverse, or `None` for zero.
    pub fn recip(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(Scalar(self.0.recip()))
        }
    }
}

impl fmt::Display for Scalar {
    /// Canonical form `p/q` with `q > 0`, lowest terms — also the on-disk
    /// representation.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.0.numer(), self.0.denom())
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl FromStr for Scalar {
    type Err = Error;

    /// Accepts `p/q` or a bare integer `p`. Rejects `q = 0` and anything
    /// that is not an integer pair.
    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = || Error::BadRational(s.to_owned());
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (
                BigInt::from_str(n.trim()).map_err(|_| bad())?,
                BigInt::from_str(d.trim()).map_err(|_| bad())?,
            ),
            None => (BigInt::from_str(s.trim()).map_err(|_| bad())?, BigInt::one()),
        };
        if den.is_zero() {
            return Err(bad());
        }
        Ok(Scalar(BigRational::new(num, den)))
    }
}

macro_rules! scalar_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                Scalar((self.0).$method(rhs.0))
            }
        }
        impl<'a> $trait<&'a Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &'a Scalar) -> Scalar {
                Scalar((&self.0).$method(&rhs.0))
            }
        }
    };
}

scalar_binop!(Add, add);
scalar_binop!(Sub, sub);
scalar_binop!(Mul, mul);

impl Div for Scalar {
    type Output = Scalar;
    /// Panics on division by zero.
    fn div(self, rhs: Scalar) -> Scalar {
        assert!(!rhs.is_zero(), "division by zero");
        Scalar(self.0 / rhs.0)
    }
}

impl<'a> Div<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn div(self, rhs: &'a Scalar) -> Scalar {
        assert!(!rhs.is_zero(), "division by zero");
        Scalar(&self.0 / &rhs.0)
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar(-self.0)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar(-&self.0)
    }
}

impl AddAssign for Scalar {
    fn add_assign(&mut self, rhs: Scalar) {
        self.0 += rhs.0;
    }
}

impl SubAssign for Scalar {
    fn sub_assign(&mut self, rhs: Scalar) {
        self.0 -= rhs.0;
    }
}

impl MulAssign for Scalar {
    fn mul_assign(&mut self, rhs: Scalar) {
        self.0 *= rhs.0;
    }
}

impl Sum for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::zero(), |acc, x| acc + x)
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

/// A dense row-major matrix of [`Scalar`]s.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

impl Matrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Scalar>) -> Result<Self, Error> {
        if entries.len() != rows * cols {
            return Err(Error::EntryCount {
                expected: rows * cols,
                got: entries.len(),
            });
        }
        Ok(Matrix { rows, cols, entries })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            entries: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Scalar::one());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> Scalar) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                entries.push(f(r, c));
            }
        }
        Matrix { rows, cols, entries }
    }

    /// Convenience constructor from integer rows; shape is taken from the
    /// nested vectors, which must be rectangular.
    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        let r = rows.len();
        let c = if r == 0 { 0 } else { rows[0].len() };
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix::from_fn(r, c, |i, j| Scalar::from_int(rows[i][j]))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &Scalar {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == Matrix::identity(self.rows)
    }

    /// Exact matrix product. The inner loops skip zero entries, which makes
    /// composites of mostly-zero structure tensors cheap without a sparse
    /// representation.
    pub fn mul(&self, other: &Matrix) -> Result<Matrix, Error> {
        if self.cols != other.rows {
            return Err(Error::MatrixShape {
                left: (self.rows, self.cols),
                right: (other.rows, other.cols),
            });
        }
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.at(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * out.cols + j;
                    out.entries[idx] += a * b;
                }
            }
        }
        Ok(out)
    }

    /// Kronecker product: `(a ⊗ b)[i·p + k, j·q + l] = a[i, j] · b[k, l]`
    /// where `b` is `p × q`.
    pub fn kron(&self, other: &Matrix) -> Matrix {
        let rows = self.rows * other.rows;
        let cols = self.cols * other.cols;
        let mut out = Matrix::zeros(rows, cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.at(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        let b = other.at(k, l);
                        if b.is_zero() {
                            continue;
                        }
                        out.set(i * other.rows + k, j * other.cols + l, a * b);
                    }
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |r, c| self.at(c, r).clone())
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix, Error> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix, Error> {
        self.zip_with(other, |a, b| a - b)
    }

    fn zip_with(
        &self,
        other: &Matrix,
        f: impl Fn(&Scalar, &Scalar) -> Scalar,
    ) -> Result<Matrix, Error> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::MatrixShape {
                left: (self.rows, self.cols),
                right: (other.rows, other.cols),
            });
        }
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| f(a, b))
            .collect();
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            entries,
        })
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| e * s).collect(),
        }
    }

    /// Reduced row echelon form, together with the pivot column of each
    /// pivot row. Pivoting always picks the first row with a nonzero entry,
    /// so the output is a deterministic function of the input.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(pivot_row) = (row..m.rows).find(|&r| !m.at(r, col).is_zero()) else {
                continue;
            };
            if pivot_row != row {
                for c in 0..m.cols {
                    m.entries.swap(pivot_row * m.cols + c, row * m.cols + c);
                }
            }
            let inv = m.at(row, col).recip().expect("pivot is nonzero");
            for c in col..m.cols {
                let v = m.at(row, c) * &inv;
                m.set(row, c, v);
            }
            for r in 0..m.rows {
                if r == row || m.at(r, col).is_zero() {
                    continue;
                }
                let factor = m.at(r, col).clone();
                for c in col..m.cols {
                    let v = m.at(r, c) - &(&factor * m.at(row, c));
                    m.set(r, c, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Exact basis of `{x : self · x = 0}`. Each basis vector is scaled so
    /// its first nonzero coordinate is 1.
    pub fn null_space(&self) -> Vec<Vec<Scalar>> {
        let (r, pivots) = self.rref();
        let mut basis = Vec::new();
        let mut pivot_iter = pivots.iter().copied().peekable();
        let mut pivot_of_col = vec![None; self.cols];
        for (row, col) in pivots.iter().copied().enumerate() {
            pivot_of_col[col] = Some(row);
        }
        for free_col in 0..self.cols {
            if pivot_iter.peek() == Some(&free_col) {
                pivot_iter.next();
                continue;
            }
            let mut v = vec![Scalar::zero(); self.cols];
            v[free_col] = Scalar::one();
            for col in 0..self.cols {
                if let Some(row) = pivot_of_col[col] {
                    v[col] = -r.at(row, free_col);
                }
            }
            normalize_first_nonzero(&mut v);
            basis.push(v);
        }
        basis
    }

    /// Exact inverse when the matrix is square of full rank; otherwise the
    /// rank and a null-space basis.
    pub fn solve_or_invert(&self) -> Result<Inverse, Error> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let mut aug = Matrix::zeros(n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                aug.set(r, c, self.at(r, c).clone());
            }
            aug.set(r, n + r, Scalar::one());
        }
        let (red, pivots) = aug.rref();
        let rank = pivots.iter().take_while(|&&c| c < n).count();
        if rank < n {
            return Ok(Inverse::Singular(SingularReport {
                rank,
                null_basis: self.null_space(),
            }));
        }
        let inv = Matrix::from_fn(n, n, |r, c| red.at(r, n + c).clone());
        Ok(Inverse::Invertible(inv))
    }

    pub fn invert(&self) -> Result<Matrix, Error> {
        match self.solve_or_invert()? {
            Inverse::Invertible(m) => Ok(m),
            Inverse::Singular(report) => Err(Error::Singular { rank: report.rank }),
        }
    }

    /// Solves `self · x = rhs` column by column. Returns `None` when the
    /// system is inconsistent. For underdetermined systems the particular
    /// solution with all free variables zero is returned.
    pub fn solve(&self, rhs: &Matrix) -> Result<Option<Matrix>, Error> {
        if self.rows != rhs.rows {
            return Err(Error::MatrixShape {
                left: (self.rows, self.cols),
                right: (rhs.rows, rhs.cols),
            });
        }
        let mut aug = Matrix::zeros(self.rows, self.cols + rhs.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                aug.set(r, c, self.at(r, c).clone());
            }
            for c in 0..rhs.cols {
                aug.set(r, self.cols + c, rhs.at(r, c).clone());
            }
        }
        let (red, pivots) = aug.rref();
        if pivots.iter().any(|&c| c >= self.cols) {
            return Ok(None);
        }
        let mut x = Matrix::zeros(self.cols, rhs.cols);
        for (row, col) in pivots.iter().copied().enumerate() {
            for c in 0..rhs.cols {
                x.set(col, c, red.at(row, self.cols + c).clone());
            }
        }
        Ok(Some(x))
    }
}

fn normalize_first_nonzero(v: &mut [Scalar]) {
    if let Some(lead) = v.iter().find(|s| !s.is_zero()).cloned() {
        let inv = lead.recip().expect("nonzero");
        for s in v.iter_mut() {
            *s = &*s * &inv;
        }
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            write!(f, "  ")?;
            for c in 0..self.cols {
                write!(f, "{} ", self.at(r, c))?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

/// Outcome of [`Matrix::solve_or_invert`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Inverse {
    Invertible(Matrix),
    Singular(SingularReport),
}

/// Rank and kernel witness for a singular square matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SingularReport {
    pub rank: usize,
    pub null_basis: Vec<Vec<Scalar>>,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(n: i64) -> Scalar {
        Scalar::from_int(n)
    }

    // Independent oracle: plain jik triple loop with no zero skipping.
    fn naive_mul(a: &Matrix, b: &Matrix) -> Matrix {
        assert_eq!(a.cols(), b.rows());
        Matrix::from_fn(a.rows(), b.cols(), |i, j| {
            (0..a.cols()).map(|k| a.at(i, k) * b.at(k, j)).sum()
        })
    }

    #[test]
    fn scalar_canonical_form() {
        let x = Scalar::ratio(4, -6);
        assert_eq!(x.to_string(), "-2/3");
        assert_eq!("-2/3".parse::<Scalar>().unwrap(), x);
        assert_eq!("7".parse::<Scalar>().unwrap(), s(7));
        assert!("1/0".parse::<Scalar>().is_err());
        assert!("a/b".parse::<Scalar>().is_err());
    }

    #[test]
    fn mat_mul_identity_and_permutation() {
        let m = Matrix::from_int_rows(&[&[1, 2], &[3, 4]]);
        assert_eq!(Matrix::identity(2).mul(&m).unwrap(), m);
        let swap = Matrix::from_int_rows(&[&[0, 1], &[1, 0]]);
        let prod = m.mul(&swap).unwrap();
        assert_eq!(prod, Matrix::from_int_rows(&[&[2, 1], &[4, 3]]));
    }

    #[test]
    fn mat_mul_matches_naive_oracle() {
        let mut rng = crate::sample::rng(11);
        for _ in 0..10 {
            let a = crate::sample::random_matrix(&mut rng, 5, 5);
            let b = crate::sample::random_matrix(&mut rng, 5, 5);
            assert_eq!(a.mul(&b).unwrap(), naive_mul(&a, &b));
        }
    }

    #[test]
    fn mat_mul_shape_mismatch() {
        let a = Matrix::zeros(2, 3);
        let b = Matrix::zeros(2, 3);
        assert!(a.mul(&b).is_err());
    }

    #[test]
    fn kron_identities() {
        assert_eq!(
            Matrix::identity(2).kron(&Matrix::identity(3)),
            Matrix::identity(6)
        );
        let m = Matrix::from_int_rows(&[&[1, -2], &[0, 5]]);
        let two = Matrix::from_fn(1, 1, |_, _| s(2));
        assert_eq!(two.kron(&m), m.scale(&s(2)));
    }

    #[test]
    fn kron_mixed_product() {
        let mut rng = crate::sample::rng(12);
        for _ in 0..10 {
            let a = crate::sample::random_matrix(&mut rng, 2, 2);
            let b = crate::sample::random_matrix(&mut rng, 2, 2);
            let c = crate::sample::random_matrix(&mut rng, 2, 2);
            let d = crate::sample::random_matrix(&mut rng, 2, 2);
            let lhs = a.kron(&b).mul(&c.kron(&d)).unwrap();
            let rhs = a.mul(&c).unwrap().kron(&b.mul(&d).unwrap());
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn invert_identity() {
        match Matrix::identity(4).solve_or_invert().unwrap() {
            Inverse::Invertible(inv) => assert_eq!(inv, Matrix::identity(4)),
            Inverse::Singular(_) => panic!("identity is invertible"),
        }
    }

    #[test]
    fn invert_reports_kernel() {
        let m = Matrix::from_int_rows(&[&[1, 1], &[1, 1]]);
        match m.solve_or_invert().unwrap() {
            Inverse::Invertible(_) => panic!("rank 1"),
            Inverse::Singular(report) => {
                assert_eq!(report.rank, 1);
                assert_eq!(report.null_basis, vec![vec![s(1), s(-1)]]);
            }
        }
    }

    #[test]
    fn invert_multiply_back() {
        let mut rng = crate::sample::rng(13);
        let m = crate::sample::random_invertible(&mut rng, 6);
        let inv = m.invert().unwrap();
        assert_eq!(m.mul(&inv).unwrap(), Matrix::identity(6));
        assert_eq!(inv.mul(&m).unwrap(), Matrix::identity(6));
    }

    #[test]
    fn invert_rejects_non_square() {
        assert!(Matrix::zeros(2, 3).solve_or_invert().is_err());
    }

    #[test]
    fn null_space_degenerate_cases() {
        assert_eq!(Matrix::zeros(3, 3).null_space().len(), 3);
        assert!(Matrix::identity(3).null_space().is_empty());
    }

    #[test]
    fn null_space_substitute_back() {
        let m = Matrix::from_int_rows(&[&[1, 2, 3]]);
        let basis = m.null_space();
        assert_eq!(basis.len(), 2);
        for v in &basis {
            let col = Matrix::new(3, 1, v.clone()).unwrap();
            assert!(m.mul(&col).unwrap().is_zero());
        }
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let a = Matrix::from_int_rows(&[&[1, 1], &[1, 1]]);
        let consistent = Matrix::from_int_rows(&[&[2], &[2]]);
        let x = a.solve(&consistent).unwrap().unwrap();
        assert_eq!(a.mul(&x).unwrap(), consistent);
        let inconsistent = Matrix::from_int_rows(&[&[1], &[2]]);
        assert!(a.solve(&inconsistent).unwrap().is_none());
    }

    #[test]
    fn elimination_is_reproducible() {
        let mut rng = crate::sample::rng(14);
        let m = crate::sample::random_matrix(&mut rng, 7, 5);
        assert_eq!(m.rref(), m.rref());
    }
}
