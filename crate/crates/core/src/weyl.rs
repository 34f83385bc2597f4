//! Weyl sums Σ e(P(n)) with e(x) = exp(2πix).
//!
//! The phase P(n) is reduced modulo 1 before exponentiation. Each monomial
//! a·n^j is split into 32-bit limbs of the exact integer n^j and every limb
//! product is formed as an error-free two-product, so the fractional part is
//! accurate even when P(n) is far beyond 2^53.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::sum::ordered_chunk_sum;

/// P(x) = a₁x + ⋯ + a_d x^d with nonnegative coefficients.
#[derive(Debug, Clone, PartialEq)]
pub struct WeylPolynomial {
    coeffs: Vec<f64>,
}

impl WeylPolynomial {
    pub fn new(coeffs: Vec<f64>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::domain("WeylPolynomial", "degree must be at least 1"));
        }
        if let Some(c) = coeffs.iter().find(|c| !c.is_finite() || **c < 0.0) {
            return Err(Error::domain("WeylPolynomial", format!("coefficients must be finite and >= 0, got {c}")));
        }
        Ok(Self { coeffs })
    }

    /// The monomial a·x^d.
    pub fn monomial(a: f64, degree: usize) -> Result<Self> {
        if degree == 0 {
            return Err(Error::domain("WeylPolynomial", "degree must be at least 1"));
        }
        let mut coeffs = vec![0.0; degree];
        coeffs[degree - 1] = a;
        Self::new(coeffs)
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0.0)
    }

    /// Every coefficient multiplied by `factor`.
    pub fn scaled(&self, factor: f64) -> Result<Self> {
        Self::new(self.coeffs.iter().map(|c| c * factor).collect())
    }

    /// P(x) in plain floating point.
    pub fn eval(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, &c| (acc + c) * x)
    }

    /// P(n) mod 1, in [0, 1).
    pub fn frac_at(&self, n: u64) -> f64 {
        frac_poly(&self.coeffs, n)
    }
}

#[inline]
fn frac(x: f64) -> f64 {
    x - x.floor()
}

/// Fractional part of a·m for an exact integer m.
pub(crate) fn frac_mul(a: f64, m: u128) -> f64 {
    let mut acc = 0.0;
    let mut rest = m;
    let mut scale = a;
    while rest != 0 {
        let limb = (rest & 0xffff_ffff) as f64;
        if limb != 0.0 {
            let p = scale * limb;
            let e = scale.mul_add(limb, -p);
            acc += frac(p) + frac(e);
        }
        rest >>= 32;
        scale *= 4294967296.0;
        if scale.is_infinite() {
            break;
        }
        // once scale is an even integer ≥ 2^54 every further limb product is an integer
        if scale.abs() >= 18014398509481984.0 {
            break;
        }
    }
    frac(acc)
}

pub(crate) fn frac_poly(coeffs: &[f64], n: u64) -> f64 {
    let mut acc = 0.0;
    let mut pow: Option<u128> = Some(1);
    let mut pow_f = 1.0f64;
    let n128 = n as u128;
    for &c in coeffs {
        pow = pow.and_then(|p| p.checked_mul(n128));
        pow_f *= n as f64;
        if c == 0.0 {
            continue;
        }
        acc += match pow {
            Some(p) => frac_mul(c, p),
            // beyond u128: plain product, accuracy degrades
            None => frac(c * pow_f),
        };
    }
    frac(acc)
}

#[inline]
pub(crate) fn e_frac(x: f64) -> Complex64 {
    // centre the phase on [-1/2, 1/2) before scaling by 2π
    let y = if x >= 0.5 { x - 1.0 } else { x };
    let (sin, cos) = (std::f64::consts::TAU * y).sin_cos();
    Complex64::new(cos, sin)
}

/// Σ_{n=1}^{N} e(P(n)).
pub fn weyl_sum(p: &WeylPolynomial, n_max: u64) -> Complex64 {
    ordered_chunk_sum(1, n_max + 1, |n| e_frac(p.frac_at(n)))
}

/// Sequential Weyl sum over raw coefficients, for inner loops that are
/// already parallelised by the caller.
pub(crate) fn weyl_sum_seq(coeffs: &[f64], n_max: u64) -> Complex64 {
    let mut acc = crate::sum::ComplexNeumaier::new();
    for n in 1..=n_max {
        acc.add(e_frac(frac_poly(coeffs, n)));
    }
    acc.value()
}

/// log(k/l) for integers 1 ≤ l < k, accurate when k/l is close to 1.
pub fn log_ratio(k: u64, l: u64) -> f64 {
    ((k - l) as f64 / l as f64).ln_1p()
}

/// Σ_{n=1}^{N} (k/l)^{iP(n)} = Σ e(P(n)·log(k/l)/2π).
pub fn ratio_power_sum(k: u64, l: u64, p: &WeylPolynomial, n_max: u64) -> Result<Complex64> {
    if l < 1 || l >= k {
        return Err(Error::domain("ratio_power_sum", format!("need 1 <= l < k, got k={k}, l={l}")));
    }
    let q = p.scaled(log_ratio(k, l) / std::f64::consts::TAU)?;
    Ok(weyl_sum(&q, n_max))
}
