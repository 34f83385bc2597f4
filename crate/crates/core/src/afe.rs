//! The approximate functional equation layer.
//!
//! [`abscissa_a`] is the left edge 𝐀(μ) of the strip in which the Dirichlet
//! polynomial Σ_{n ≤ t^μ} n^{-s} approximates ζ(s) with an error that decays
//! like a power of t. The decay rate is not known in closed form, so
//! [`afe_error_scan`] measures it as a log–log slope.

use num_complex::Complex64;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::fit::log_log_slope;
use crate::zeta::{dirichlet_partial_sum, eval_zeta, EvalPoint, ZetaEvalConfig};

pub const ETA: f64 = 4.45;

/// θ = 4/(27η²).
pub fn theta() -> f64 {
    4.0 / (27.0 * ETA * ETA)
}

/// 𝐀(μ): 1 − 1/μ for μ ≥ 1, min{1/(2μ), 1 − θμ²} for 0 < μ < 1.
pub fn abscissa_a(mu: f64) -> Result<f64> {
    if !(mu > 0.0) || !mu.is_finite() {
        return Err(Error::domain("abscissa_A", format!("mu must be positive and finite, got {mu}")));
    }
    Ok(abscissa_a_unchecked(mu))
}

pub(crate) fn abscissa_a_unchecked(mu: f64) -> f64 {
    if mu >= 1.0 {
        1.0 - 1.0 / mu
    } else {
        (0.5 / mu).min(1.0 - theta() * mu * mu)
    }
}

/// Q(x) = 2θx³ − 2x + 1.
pub fn q_poly(x: f64) -> f64 {
    2.0 * theta() * x * x * x - 2.0 * x + 1.0
}

/// The root μ₀ ∈ [0, 1] of Q, where the two branches of 𝐀 on (0, 1) meet.
pub fn mu_zero() -> f64 {
    // Q(0) = 1 > 0 > Q(1) = 2θ − 1
    let (mut lo, mut hi) = (0.0f64, 1.0f64);
    while hi - lo > 1e-13 {
        let mid = 0.5 * (lo + hi);
        if q_poly(mid) > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// μ and δ with 0 < δ < 1 − 𝐀(μ).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AfeParams {
    pub mu: f64,
    pub delta: f64,
}

impl AfeParams {
    pub fn new(mu: f64, delta: f64) -> Result<Self> {
        let a = abscissa_a(mu)?;
        if !(delta > 0.0 && delta < 1.0 - a) {
            return Err(Error::domain("AfeParams", format!("delta must lie in (0, {}), got {delta}", 1.0 - a)));
        }
        Ok(Self { mu, delta })
    }

    pub fn eta(&self) -> f64 {
        ETA
    }

    pub fn theta(&self) -> f64 {
        theta()
    }

    /// Lower end 𝐀(μ) + δ of the uniform strip.
    pub fn sigma_min(&self) -> f64 {
        abscissa_a_unchecked(self.mu) + self.delta
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AfeSample {
    pub approx: Complex64,
    pub reference: Complex64,
    pub abs_error: f64,
}

/// Dirichlet polynomial of length t^μ against the reference ζ(s).
pub fn afe_approx(s: EvalPoint, mu: f64) -> Result<AfeSample> {
    const OP: &str = "afe_approx";
    let a = abscissa_a(mu)?;
    if !(s.t >= 2.0) {
        return Err(Error::domain(OP, format!("need t >= 2, got {}", s.t)));
    }
    if !(s.sigma > a && s.sigma <= 1.0) {
        return Err(Error::domain(OP, format!("sigma = {} outside the strip ({a}, 1]", s.sigma)));
    }
    let approx = dirichlet_partial_sum(s, s.t.powf(mu));
    let reference = eval_zeta(s, &ZetaEvalConfig::default())?;
    Ok(AfeSample { approx, reference, abs_error: (approx - reference).norm() })
}

/// Σ_{n≤x} n^{-s} + x^{1−s}/(s−1), valid for πx ≥ t.
pub fn afe_classical(s: EvalPoint, x: f64) -> Result<AfeSample> {
    const OP: &str = "afe_classical";
    if !(s.sigma > 0.0 && s.sigma <= 2.0) {
        return Err(Error::precondition(OP, format!("need 0 < sigma <= 2, got {}", s.sigma)));
    }
    if !(x >= 1.0) || !x.is_finite() {
        return Err(Error::precondition(OP, format!("need x >= 1, got {x}")));
    }
    if std::f64::consts::PI * x < s.t.abs() {
        return Err(Error::precondition(OP, format!("pi*x = {} < t = {}", std::f64::consts::PI * x, s.t)));
    }
    let sc = s.s();
    let one = Complex64::new(1.0, 0.0);
    if sc == one {
        return Err(Error::domain(OP, "pole at s = 1"));
    }
    let approx = dirichlet_partial_sum(s, x) + ((one - sc) * x.ln()).exp() / (sc - one);
    let reference = eval_zeta(s, &ZetaEvalConfig::default())?;
    Ok(AfeSample { approx, reference, abs_error: (approx - reference).norm() })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AfeRow {
    pub t: f64,
    pub approx: Complex64,
    pub reference: Complex64,
    pub abs_error: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct AfeReport {
    pub sigma: f64,
    pub mu: f64,
    pub rows: Vec<AfeRow>,
    /// Slope of log(abs_error) against log(t); negative means decay.
    pub fitted_decay: f64,
}

/// Runs [`afe_approx`] along a ladder of heights and fits the error decay.
pub fn afe_error_scan(sigma: f64, mu: f64, t_list: &[f64]) -> Result<AfeReport> {
    const OP: &str = "afe_error_scan";
    if t_list.len() < 3 {
        return Err(Error::domain(OP, format!("need at least 3 heights to fit a slope, got {}", t_list.len())));
    }
    if t_list.windows(2).any(|w| !(w[0] < w[1])) {
        return Err(Error::domain(OP, "heights must be strictly increasing"));
    }
    let rows: Vec<AfeRow> = t_list
        .par_iter()
        .map(|&t| {
            let r = afe_approx(EvalPoint::new(sigma, t)?, mu)?;
            Ok(AfeRow { t, approx: r.approx, reference: r.reference, abs_error: r.abs_error })
        })
        .collect::<Result<_>>()?;
    if rows.iter().any(|r| !(r.abs_error > 0.0)) {
        return Err(Error::numerical(OP, "zero error at some height; slope undefined"));
    }
    let ts: Vec<f64> = rows.iter().map(|r| r.t).collect();
    let errs: Vec<f64> = rows.iter().map(|r| r.abs_error).collect();
    Ok(AfeReport { sigma, mu, fitted_decay: log_log_slope(&ts, &errs), rows })
}
