//! Dense complex matrices for shift/clock products.
//!
//! Only used as an independent check on the symplectic commutation test.

use std::f64::consts::TAU;

use num_complex::Complex64;

use super::{PauliOperator, SystemSpec};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OracleConfig {
    /// Max-norm threshold under which a commutator counts as zero.
    pub tolerance: f64,
    /// Largest total dimension the oracle will build.
    pub max_dim: usize,
}

impl Default for OracleConfig {
    fn default() -> Self {
        Self {
            tolerance: 1e-9,
            max_dim: 64,
        }
    }
}

/// Square complex matrix in row-major order.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseMatrix {
    dim: usize,
    entries: Vec<Complex64>,
}

impl DenseMatrix {
    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.entries[i * dim + i] = Complex64::new(1.0, 0.0);
        }
        m
    }

    pub fn zeros(dim: usize) -> Self {
        Self {
            dim,
            entries: vec![Complex64::new(0.0, 0.0); dim * dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        self.entries[row * self.dim + col]
    }

    fn set(&mut self, row: usize, col: usize, value: Complex64) {
        self.entries[row * self.dim + col] = value;
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim);
        let n = self.dim;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.entries[i * n + k];
                if a == Complex64::new(0.0, 0.0) {
                    continue;
                }
                for j in 0..n {
                    out.entries[i * n + j] += a * other.entries[k * n + j];
                }
            }
        }
        out
    }

    pub fn kron(&self, other: &Self) -> Self {
        let (n, m) = (self.dim, other.dim);
        let mut out = Self::zeros(n * m);
        for i in 0..n {
            for j in 0..n {
                let a = self.get(i, j);
                for k in 0..m {
                    for l in 0..m {
                        out.set(i * m + k, j * m + l, a * other.get(k, l));
                    }
                }
            }
        }
        out
    }

    pub fn adjoint(&self) -> Self {
        let n = self.dim;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for j in 0..n {
                out.set(j, i, self.get(i, j).conj());
            }
        }
        out
    }

    /// Largest entry modulus of `self - other`.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        assert_eq!(self.dim, other.dim);
        self.entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }
}

fn shift(d: usize) -> DenseMatrix {
    // X|n> = |n+1 mod d>
    let mut m = DenseMatrix::zeros(d);
    for n in 0..d {
        m.set((n + 1) % d, n, Complex64::new(1.0, 0.0));
    }
    m
}

fn clock(d: usize) -> DenseMatrix {
    let mut m = DenseMatrix::zeros(d);
    for n in 0..d {
        m.set(n, n, Complex64::from_polar(1.0, TAU * n as f64 / d as f64));
    }
    m
}

fn matrix_power(m: &DenseMatrix, k: u32) -> DenseMatrix {
    (0..k).fold(DenseMatrix::identity(m.dim()), |acc, _| acc.mul(m))
}

pub fn build_matrix(op: &PauliOperator, spec: &SystemSpec) -> Result<DenseMatrix> {
    build_matrix_capped(op, spec, OracleConfig::default().max_dim)
}

fn build_matrix_capped(
    op: &PauliOperator,
    spec: &SystemSpec,
    max_dim: usize,
) -> Result<DenseMatrix> {
    spec.check(op)?;
    let dim = spec.total_dim();
    if dim > max_dim {
        return Err(Error::DimensionCap { dim, cap: max_dim });
    }
    let mut out = DenseMatrix::identity(1);
    for (&(a, b), &d) in op.exponents().iter().zip(spec.factor_dims()) {
        let d = d as usize;
        let factor = matrix_power(&shift(d), a).mul(&matrix_power(&clock(d), b));
        out = out.kron(&factor);
    }
    Ok(out)
}

/// Commutation decided from explicit matrices.
pub fn matrix_commutes(
    a: &PauliOperator,
    b: &PauliOperator,
    spec: &SystemSpec,
    config: &OracleConfig,
) -> Result<bool> {
    let ma = build_matrix_capped(a, spec, config.max_dim)?;
    let mb = build_matrix_capped(b, spec, config.max_dim)?;
    Ok(ma.mul(&mb).max_abs_diff(&mb.mul(&ma)) < config.tolerance)
}
