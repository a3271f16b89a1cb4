//! Dense complex matrices of dimension 2 (quartic) or 3 (nonic).
//!
//! Every operation is a pure function over immutable values. Binary
//! operations check that both operands have the same dimension and return
//! [`Error::DimensionMismatch`] otherwise.

use std::fmt;

use num_complex::Complex64;

use crate::{Error, Result};

/// Default matching tolerance.
pub const DEFAULT_TOL: f64 = 1e-9;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// A 2×2 or 3×3 complex matrix, stored row-major.
///
/// Slots beyond `dim²` are always zero so the derived equality compares
/// only meaningful entries.
#[derive(Clone, Copy, PartialEq)]
pub struct CMatrix {
    dim: usize,
    entries: [Complex64; 9],
}

fn check_dim(dim: usize) -> Result<()> {
    match dim {
        2 | 3 => Ok(()),
        other => Err(Error::UnsupportedDimension(other)),
    }
}

fn is_finite(z: &Complex64) -> bool {
    z.re.is_finite() && z.im.is_finite()
}

impl CMatrix {
    /// Builds a matrix from `dim²` row-major entries.
    pub fn new(dim: usize, entries: &[Complex64]) -> Result<Self> {
        check_dim(dim)?;
        if entries.len() != dim * dim {
            return Err(Error::EntryCount {
                expected: dim * dim,
                got: entries.len(),
            });
        }
        if !entries.iter().all(is_finite) {
            return Err(Error::NonFinite);
        }
        let mut out = [ZERO; 9];
        out[..entries.len()].copy_from_slice(entries);
        Ok(CMatrix { dim, entries: out })
    }

    /// Builds a 2×2 matrix from rows. Panics on non-finite input.
    pub fn from_rows2(rows: [[Complex64; 2]; 2]) -> Self {
        Self::new(2, &[rows[0][0], rows[0][1], rows[1][0], rows[1][1]]).expect("finite 2x2 entries")
    }

    /// Builds a 3×3 matrix from rows. Panics on non-finite input.
    pub fn from_rows3(rows: [[Complex64; 3]; 3]) -> Self {
        let flat: Vec<Complex64> = rows.iter().flatten().copied().collect();
        Self::new(3, &flat).expect("finite 3x3 entries")
    }

    /// Builds a 2×2 matrix from real rows.
    pub fn real2(rows: [[f64; 2]; 2]) -> Self {
        Self::from_rows2(rows.map(|r| r.map(|x| Complex64::new(x, 0.0))))
    }

    pub fn zero(dim: usize) -> Result<Self> {
        check_dim(dim)?;
        Ok(CMatrix {
            dim,
            entries: [ZERO; 9],
        })
    }

    pub fn identity(dim: usize) -> Result<Self> {
        let mut m = Self::zero(dim)?;
        for i in 0..dim {
            m.entries[i * dim + i] = ONE;
        }
        Ok(m)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Row-major entries, exactly `dim²` of them.
    pub fn entries(&self) -> &[Complex64] {
        &self.entries[..self.dim * self.dim]
    }

    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        assert!(row < self.dim && col < self.dim, "index out of range");
        self.entries[row * self.dim + col]
    }

    /// Rows as nested vectors, convenient for rendering.
    pub fn rows(&self) -> Vec<Vec<Complex64>> {
        self.entries().chunks(self.dim).map(<[_]>::to_vec).collect()
    }

    fn same_dim(&self, other: &CMatrix) -> Result<()> {
        if self.dim == other.dim {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                left: self.dim,
                right: other.dim,
            })
        }
    }

    fn map(&self, f: impl Fn(Complex64) -> Complex64) -> CMatrix {
        let mut out = *self;
        for z in out.entries[..self.dim * self.dim].iter_mut() {
            *z = f(*z);
        }
        out
    }

    fn zip(
        &self,
        other: &CMatrix,
        f: impl Fn(Complex64, Complex64) -> Complex64,
    ) -> Result<CMatrix> {
        self.same_dim(other)?;
        let mut out = *self;
        let n = self.dim * self.dim;
        for (z, w) in out.entries[..n].iter_mut().zip(&other.entries[..n]) {
            *z = f(*z, *w);
        }
        Ok(out)
    }

    pub fn add(&self, other: &CMatrix) -> Result<CMatrix> {
        self.zip(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &CMatrix) -> Result<CMatrix> {
        self.zip(other, |a, b| a - b)
    }

    pub fn scale(&self, c: Complex64) -> CMatrix {
        self.map(|z| c * z)
    }

    /// Conjugate transpose.
    pub fn dagger(&self) -> CMatrix {
        self.transpose().map(|z| z.conj())
    }

    pub fn transpose(&self) -> CMatrix {
        let mut out = *self;
        let n = self.dim;
        for i in 0..n {
            for j in 0..n {
                out.entries[j * n + i] = self.entries[i * n + j];
            }
        }
        out
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.dim).map(|i| self.entries[i * self.dim + i]).sum()
    }

    pub fn det(&self) -> Complex64 {
        let m = |i: usize, j: usize| self.entries[i * self.dim + j];
        match self.dim {
            2 => m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0),
            _ => {
                m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1))
                    - m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0))
                    + m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0))
            }
        }
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[Complex64]) -> Result<Vec<Complex64>> {
        if v.len() != self.dim {
            return Err(Error::DimensionMismatch {
                left: self.dim,
                right: v.len(),
            });
        }
        Ok(self
            .entries()
            .chunks(self.dim)
            .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
            .collect())
    }

    /// Largest entrywise modulus of `self − other`.
    pub fn max_abs_diff(&self, other: &CMatrix) -> Result<f64> {
        Ok(self.sub(other)?.max_abs())
    }

    /// Largest entry modulus.
    pub fn max_abs(&self) -> f64 {
        self.entries().iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn is_zero(&self, tol: f64) -> bool {
        self.max_abs() < tol
    }
}

impl fmt::Debug for CMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.rows()).finish()
    }
}

impl fmt::Display for CMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows()
            .iter()
            .map(|r| {
                let cells: Vec<String> = r.iter().map(|z| format_complex(*z, 6)).collect();
                format!("[{}]", cells.join(", "))
            })
            .collect();
        write!(f, "[{}]", rows.join(", "))
    }
}

/// Renders a complex number compactly, rounding to `digits` decimals.
pub fn format_complex(z: Complex64, digits: usize) -> String {
    let clean = |x: f64| {
        let p = 10f64.powi(digits as i32);
        let r = (x * p).round() / p;
        if r == 0.0 {
            0.0
        } else {
            r
        }
    };
    let (re, im) = (clean(z.re), clean(z.im));
    match (re == 0.0, im == 0.0) {
        (_, true) => format!("{re}"),
        (true, false) => format!("{im}i"),
        (false, false) if im < 0.0 => format!("{re}-{}i", -im),
        (false, false) => format!("{re}+{im}i"),
    }
}

/// Standard matrix product `m·n`.
pub fn mat_mul(m: &CMatrix, n: &CMatrix) -> Result<CMatrix> {
    m.same_dim(n)?;
    let d = m.dim;
    let mut out = CMatrix::zero(d)?;
    for i in 0..d {
        for j in 0..d {
            out.entries[i * d + j] = (0..d)
                .map(|k| m.entries[i * d + k] * n.entries[k * d + j])
                .sum();
        }
    }
    Ok(out)
}

/// `m·n − n·m`.
pub fn commutator(m: &CMatrix, n: &CMatrix) -> Result<CMatrix> {
    mat_mul(m, n)?.sub(&mat_mul(n, m)?)
}

/// `m·n + n·m`.
pub fn anticommutator(m: &CMatrix, n: &CMatrix) -> Result<CMatrix> {
    mat_mul(m, n)?.add(&mat_mul(n, m)?)
}

/// `‖m − n‖_F`.
pub fn frobenius_distance(m: &CMatrix, n: &CMatrix) -> Result<f64> {
    Ok(m.sub(n)?
        .entries()
        .iter()
        .map(|z| z.norm_sqr())
        .sum::<f64>()
        .sqrt())
}

/// Frobenius inner product `⟨a, b⟩ = Σ conj(a_ij)·b_ij`.
pub fn frobenius_inner(a: &CMatrix, b: &CMatrix) -> Result<Complex64> {
    a.same_dim(b)?;
    Ok(a.entries()
        .iter()
        .zip(b.entries())
        .map(|(x, y)| x.conj() * y)
        .sum())
}

pub fn is_hermitian(m: &CMatrix, tol: f64) -> bool {
    m.max_abs_diff(&m.dagger()).is_ok_and(|r| r <= tol)
}

pub fn is_antihermitian(m: &CMatrix, tol: f64) -> bool {
    m.add(&m.dagger()).is_ok_and(|s| s.max_abs() <= tol)
}

/// Outcome of testing whether a matrix is a complex multiple of a target.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScalarMatch {
    pub matched: bool,
    /// The scale `c` with `m ≈ c·target`; present only when matched.
    pub scale: Option<Complex64>,
    /// Least-squares coefficient, reported whether or not it matched.
    pub coefficient: Complex64,
    /// Max-entry residual `|m − coefficient·target|`.
    pub residual: f64,
}

/// Tests whether `m` is a nonzero complex multiple of `target`.
///
/// The coefficient is the Frobenius projection `⟨target, m⟩ / ⟨target, target⟩`.
/// A match requires the max-entry residual below `tol` and `|c| > tol`, so
/// a zero `m` never matches.
pub fn scalar_multiple_of(m: &CMatrix, target: &CMatrix, tol: f64) -> Result<ScalarMatch> {
    let norm = frobenius_inner(target, target)?.re;
    if norm == 0.0 {
        return Err(Error::ZeroTarget);
    }
    let coefficient = frobenius_inner(target, m)? / norm;
    let residual = m.max_abs_diff(&target.scale(coefficient))?;
    let matched = residual < tol && coefficient.norm() > tol;
    Ok(ScalarMatch {
        matched,
        scale: matched.then_some(coefficient),
        coefficient,
        residual,
    })
}
