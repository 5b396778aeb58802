//! Generalized Pauli operators on a register of prime-dimensional factors.
//!
//! An operator is stored as one exponent pair `(a, b)` per factor, standing
//! for `X^a Z^b` with `X` the cyclic shift and `Z` the clock. Global phases
//! are dropped, so the exponent tuple is the operator's identity.

mod matrix;

pub use matrix::{build_matrix, matrix_commutes, DenseMatrix, OracleConfig};

use std::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};

pub(crate) fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Ordered list of prime factor dimensions.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SystemSpec {
    factor_dims: Vec<u32>,
}

impl SystemSpec {
    pub fn new(factor_dims: Vec<u32>) -> Result<Self> {
        if factor_dims.is_empty() {
            return Err(Error::EmptySpec);
        }
        if let Some(&d) = factor_dims.iter().find(|&&d| !is_prime(d)) {
            return Err(Error::NonPrimeFactor(d));
        }
        Ok(Self { factor_dims })
    }

    pub fn factor_dims(&self) -> &[u32] {
        &self.factor_dims
    }

    pub fn factor_count(&self) -> usize {
        self.factor_dims.len()
    }

    /// Dimension of the full Hilbert space, the product of the factors.
    pub fn total_dim(&self) -> usize {
        self.factor_dims.iter().map(|&d| d as usize).product()
    }

    /// Least common multiple of the factor dimensions. Commutation phases of
    /// any two operators are powers of a primitive root of this order.
    pub fn phase_lcm(&self) -> u64 {
        self.factor_dims
            .iter()
            .fold(1u64, |acc, &d| acc.lcm(&u64::from(d)))
    }

    /// Number of operators including the identity, `D^2`.
    pub fn operator_space_size(&self) -> usize {
        self.total_dim() * self.total_dim()
    }

    pub fn identity(&self) -> PauliOperator {
        PauliOperator {
            exponents: vec![(0, 0); self.factor_count()],
        }
    }

    pub fn operator(&self, exponents: Vec<(u32, u32)>) -> Result<PauliOperator> {
        let op = PauliOperator { exponents };
        self.check(&op)?;
        Ok(op)
    }

    pub(crate) fn check(&self, op: &PauliOperator) -> Result<()> {
        if op.exponents.len() != self.factor_count() {
            return Err(Error::FactorCountMismatch {
                expected: self.factor_count(),
                found: op.exponents.len(),
            });
        }
        for (&(a, b), &d) in op.exponents.iter().zip(&self.factor_dims) {
            for value in [a, b] {
                if value >= d {
                    return Err(Error::ExponentOutOfRange { value, dim: d });
                }
            }
        }
        Ok(())
    }
}

impl fmt::Display for SystemSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let dims: Vec<String> = self.factor_dims.iter().map(u32::to_string).collect();
        write!(f, "[{}]", dims.join(","))
    }
}

/// Tensor product of shift/clock monomials, modulo global phase.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PauliOperator {
    exponents: Vec<(u32, u32)>,
}

impl PauliOperator {
    pub fn exponents(&self) -> &[(u32, u32)] {
        &self.exponents
    }

    pub fn is_identity(&self) -> bool {
        self.exponents.iter().all(|&(a, b)| a == 0 && b == 0)
    }

    /// Number of factors on which the operator acts non-trivially.
    pub fn weight(&self) -> usize {
        self.exponents
            .iter()
            .filter(|&&(a, b)| a != 0 || b != 0)
            .count()
    }

    /// Product of two operators up to phase: exponents add factorwise.
    pub fn product(&self, other: &Self, spec: &SystemSpec) -> Result<Self> {
        spec.check(self)?;
        spec.check(other)?;
        let exponents = self
            .exponents
            .iter()
            .zip(&other.exponents)
            .zip(spec.factor_dims())
            .map(|((&(a, b), &(c, e)), &d)| ((a + c) % d, (b + e) % d))
            .collect();
        Ok(Self { exponents })
    }

    /// `k`-th power up to phase.
    pub fn power(&self, k: u32, spec: &SystemSpec) -> Result<Self> {
        spec.check(self)?;
        let exponents = self
            .exponents
            .iter()
            .zip(spec.factor_dims())
            .map(|(&(a, b), &d)| {
                let k = k % d;
                ((a * k) % d, (b * k) % d)
            })
            .collect();
        Ok(Self { exponents })
    }
}

fn factor_token(a: u32, b: u32) -> String {
    if a == 0 && b == 0 {
        return "I".to_string();
    }
    let mut s = String::new();
    for (sym, e) in [('X', a), ('Z', b)] {
        match e {
            0 => {}
            1 => s.push(sym),
            _ => {
                s.push(sym);
                s.push_str(&e.to_string());
            }
        }
    }
    s
}

impl fmt::Display for PauliOperator {
    /// Factor tokens such as `I`, `X`, `XZ2`, joined with `.`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tokens: Vec<String> = self
            .exponents
            .iter()
            .map(|&(a, b)| factor_token(a, b))
            .collect();
        f.write_str(&tokens.join("."))
    }
}

/// All `D^2 - 1` non-identity operators, in lexicographic order of the
/// flattened exponent tuple `(a_1, b_1, a_2, b_2, ...)`.
pub fn enumerate_operators(spec: &SystemSpec) -> Vec<PauliOperator> {
    let radices: Vec<u32> = spec.factor_dims().iter().flat_map(|&d| [d, d]).collect();
    let total = spec.operator_space_size();
    let mut digits = vec![0u32; radices.len()];
    let mut out = Vec::with_capacity(total - 1);
    for _ in 1..total {
        // odometer increment, last position fastest
        for pos in (0..digits.len()).rev() {
            digits[pos] += 1;
            if digits[pos] < radices[pos] {
                break;
            }
            digits[pos] = 0;
        }
        let exponents = digits.chunks(2).map(|c| (c[0], c[1])).collect();
        out.push(PauliOperator { exponents });
    }
    out
}

/// Commutation phase exponent of `A` past `B`.
///
/// With `A = (a, b)` and `B = (c, e)` factorwise, returns
/// `sum_k (a_k e_k - b_k c_k) * (L / d_k) mod L`, where `L` is the phase lcm.
/// Zero exactly when the operators commute. Weighting by `L / d_k` matters
/// when factors share a prime: per-factor vanishing is then too strong.
pub fn symplectic_residue(a: &PauliOperator, b: &PauliOperator, spec: &SystemSpec) -> Result<u64> {
    spec.check(a)?;
    spec.check(b)?;
    let l = spec.phase_lcm() as i64;
    let mut s: i64 = 0;
    for ((&(a1, b1), &(c1, e1)), &d) in a.exponents.iter().zip(&b.exponents).zip(spec.factor_dims())
    {
        let term = i64::from(a1) * i64::from(e1) - i64::from(b1) * i64::from(c1);
        s = (s + term * (l / i64::from(d))).rem_euclid(l);
    }
    Ok(s as u64)
}

pub fn commutes(a: &PauliOperator, b: &PauliOperator, spec: &SystemSpec) -> Result<bool> {
    Ok(symplectic_residue(a, b, spec)? == 0)
}

/// The `p + 1` commuting classes of a single prime-dimensional factor:
/// `{Z^k}` followed by `{(X Z^m)^k}` for `m = 0..p-1`, each with `k = 1..p-1`.
pub fn mub_classes_prime(p: u32) -> Result<Vec<Vec<PauliOperator>>> {
    let spec = SystemSpec::new(vec![p])?;
    let single = |a: u32, b: u32| PauliOperator {
        exponents: vec![(a, b)],
    };
    let mut classes = Vec::with_capacity(p as usize + 1);
    classes.push((1..p).map(|k| single(0, k)).collect());
    for m in 0..p {
        let generator = single(1, m);
        let class = (1..p)
            .map(|k| generator.power(k, &spec))
            .collect::<Result<Vec<_>>>()?;
        classes.push(class);
    }
    Ok(classes)
}
