//! Exact adjacency spectra.
//!
//! The characteristic polynomial `det(xI - A)` is computed modulo a run of
//! 61-bit primes by Hessenberg reduction and lifted to the integers by
//! Chinese remaindering, with enough primes to cover a Hadamard-style bound
//! on the coefficients. Integer eigenvalues are then peeled off by exact
//! synthetic division; every eigenvalue of a graph lies in `[-Δ, Δ]`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use super::Graph;
use crate::error::{Error, Result};

pub const DEFAULT_SPECTRUM_CAP: usize = 512;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Spectrum {
    eigenvalues: Vec<(i64, usize)>,
    residual_factor: Vec<BigInt>,
}

impl Spectrum {
    /// Integer spectrum from `(eigenvalue, multiplicity)` pairs.
    pub fn from_pairs(pairs: &[(i64, usize)]) -> Self {
        let mut eigenvalues = pairs.to_vec();
        eigenvalues.sort_unstable();
        Self {
            eigenvalues,
            residual_factor: Vec::new(),
        }
    }

    /// `(value, multiplicity)` pairs in ascending order of value.
    pub fn eigenvalues(&self) -> &[(i64, usize)] {
        &self.eigenvalues
    }

    /// Coefficients, constant term first, of the part of the characteristic
    /// polynomial with no integer roots. Empty when the spectrum is integral.
    pub fn residual_factor(&self) -> &[BigInt] {
        &self.residual_factor
    }

    pub fn is_integral(&self) -> bool {
        self.residual_factor.is_empty()
    }

    pub fn multiplicity(&self, value: i64) -> usize {
        self.eigenvalues
            .iter()
            .find(|&&(v, _)| v == value)
            .map_or(0, |&(_, m)| m)
    }

    pub fn total_multiplicity(&self) -> usize {
        self.eigenvalues.iter().map(|&(_, m)| m).sum()
    }
}

impl fmt::Display for Spectrum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .eigenvalues
            .iter()
            .map(|(v, m)| format!("{v}:{m}"))
            .collect();
        write!(f, "{{{}}}", parts.join(", "))?;
        if !self.residual_factor.is_empty() {
            let coeffs: Vec<String> = self.residual_factor.iter().map(BigInt::to_string).collect();
            write!(f, " residual [{}]", coeffs.join(", "))?;
        }
        Ok(())
    }
}

pub fn spectrum_exact(g: &Graph) -> Result<Spectrum> {
    spectrum_exact_capped(g, DEFAULT_SPECTRUM_CAP)
}

pub fn spectrum_exact_capped(g: &Graph, cap: usize) -> Result<Spectrum> {
    let mut poly = characteristic_polynomial_capped(g, cap)?;
    let bound = g.max_degree() as i64;
    let mut eigenvalues = Vec::new();
    for r in -bound..=bound {
        let mut mult = 0;
        while poly.len() > 1 {
            match divide_by_root(&poly, r) {
                Some(q) => {
                    poly = q;
                    mult += 1;
                }
                None => break,
            }
        }
        if mult > 0 {
            eigenvalues.push((r, mult));
        }
    }
    let residual_factor = if poly.len() > 1 { poly } else { Vec::new() };
    Ok(Spectrum {
        eigenvalues,
        residual_factor,
    })
}

/// Quotient of `poly` by `(x - r)` if the division is exact.
fn divide_by_root(poly: &[BigInt], r: i64) -> Option<Vec<BigInt>> {
    let r = BigInt::from(r);
    let n = poly.len() - 1;
    let mut quotient = vec![BigInt::zero(); n];
    let mut carry = BigInt::zero();
    for i in (0..=n).rev() {
        let value = &poly[i] + &carry * &r;
        if i == 0 {
            return value.is_zero().then_some(quotient);
        }
        quotient[i - 1] = value.clone();
        carry = value;
    }
    unreachable!()
}

/// Coefficients of `det(xI - A)`, constant term first.
pub fn characteristic_polynomial(g: &Graph) -> Result<Vec<BigInt>> {
    characteristic_polynomial_capped(g, DEFAULT_SPECTRUM_CAP)
}

fn characteristic_polynomial_capped(g: &Graph, cap: usize) -> Result<Vec<BigInt>> {
    let n = g.order();
    if n > cap {
        return Err(Error::VertexCap { vertices: n, cap });
    }
    // |c_k| <= C(n, k) * prod of k row norms <= 2^n * prod_i sqrt(deg_i)
    let log_bound: f64 = n as f64
        + (0..n)
            .map(|v| 0.5 * (g.degree(v).max(1) as f64).log2())
            .sum::<f64>();
    let needed_bits = log_bound.ceil() as u64 + 2;

    let mut modulus = BigInt::one();
    let mut lifted = vec![BigInt::zero(); n + 1];
    let mut primes = PrimeStream::new();
    while modulus.bits() <= needed_bits {
        let p = primes.next_prime();
        let residues = charpoly_mod(g, p);
        let m_mod_p = (&modulus % p).to_u64().expect("reduced below p");
        let inv = pow_mod(m_mod_p, p - 2, p);
        for (x, &r) in lifted.iter_mut().zip(&residues) {
            let x_mod_p = (&*x % p).to_u64().expect("reduced below p");
            let delta = mul_mod(sub_mod(r, x_mod_p, p), inv, p);
            *x += &modulus * delta;
        }
        modulus *= p;
    }
    let half = &modulus >> 1;
    for x in &mut lifted {
        if *x > half {
            *x -= &modulus;
        }
    }
    debug_assert!(lifted[n].is_one());
    Ok(lifted)
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((u128::from(a) * u128::from(b)) % u128::from(p)) as u64
}

fn sub_mod(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + (p - b)
    }
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &b in &BASES {
        if n.is_multiple_of(b) {
            return n == b;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_even() {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Primes below 2^61 in descending order.
struct PrimeStream {
    next: u64,
}

impl PrimeStream {
    fn new() -> Self {
        Self {
            next: (1 << 61) - 1,
        }
    }

    fn next_prime(&mut self) -> u64 {
        loop {
            let candidate = self.next;
            self.next -= 2;
            if is_prime_u64(candidate) {
                return candidate;
            }
        }
    }
}

/// Characteristic polynomial of the adjacency matrix over `Z/p`, constant
/// term first.
fn charpoly_mod(g: &Graph, p: u64) -> Vec<u64> {
    let n = g.order();
    let mut h: Vec<Vec<u64>> = (0..n)
        .map(|i| (0..n).map(|j| u64::from(g.has_edge(i, j))).collect())
        .collect();

    // similarity transform to upper Hessenberg form
    for m in 1..n.saturating_sub(1) {
        let Some(pivot) = (m..n).find(|&i| h[i][m - 1] != 0) else {
            continue;
        };
        if pivot != m {
            h.swap(pivot, m);
            for row in h.iter_mut() {
                row.swap(pivot, m);
            }
        }
        let inv = pow_mod(h[m][m - 1], p - 2, p);
        for i in m + 1..n {
            let u = mul_mod(h[i][m - 1], inv, p);
            if u == 0 {
                continue;
            }
            let (upper, lower) = h.split_at_mut(i);
            for (x, &y) in lower[0].iter_mut().zip(&upper[m]) {
                *x = sub_mod(*x, mul_mod(u, y, p), p);
            }
            for row in h.iter_mut() {
                let t = mul_mod(u, row[i], p);
                row[m] = (row[m] + t) % p;
            }
        }
    }

    // p_m = (x - h_mm) p_{m-1} - sum_i (prod of subdiagonal) h_{m-i,m} p_{m-i-1}
    let mut polys: Vec<Vec<u64>> = Vec::with_capacity(n + 1);
    polys.push(vec![1]);
    for m in 1..=n {
        let prev = &polys[m - 1];
        let mut cur = vec![0u64; m + 1];
        for (k, &c) in prev.iter().enumerate() {
            cur[k + 1] = (cur[k + 1] + c) % p;
            cur[k] = sub_mod(cur[k], mul_mod(h[m - 1][m - 1], c, p), p);
        }
        let mut t = 1u64;
        for i in 1..m {
            t = mul_mod(t, h[m - i][m - i - 1], p);
            let coef = mul_mod(t, h[m - i - 1][m - 1], p);
            if coef == 0 {
                continue;
            }
            for (k, &c) in polys[m - i - 1].iter().enumerate() {
                cur[k] = sub_mod(cur[k], mul_mod(coef, c, p), p);
            }
        }
        polys.push(cur);
    }
    polys.pop().expect("n + 1 polynomials")
}
