//! The abscissa calculus: κ, λ, h_mo, e_mo, 𝐁, 𝐁_mo, and the strips 𝐒(d), 𝐒_mo(d).
//!
//! 𝐒(d) is the infimum over μ of max{𝐀(μ), 1 − 𝐁(d, μ)}. On (0, 1) the first
//! term is non-increasing and the second increasing, while on [1, ∞) both
//! increase, so the objective is unimodal apart from the drop of 𝐀 at μ = 1.
//! [`compute_s`] scans a uniform grid, refines the best cell by golden-section
//! search and also checks μ = 1 directly.

use rayon::prelude::*;

use crate::afe::abscissa_a_unchecked;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Variant {
    Polynomial,
    Monomial,
}

impl Variant {
    pub fn label(&self) -> &'static str {
        match self {
            Variant::Polynomial => "poly",
            Variant::Monomial => "mono",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Conditional {
    Unconditional,
    /// 𝐀(μ) replaced by 1/2 on (0, 1).
    Lindelof,
}

impl Conditional {
    pub fn label(&self) -> &'static str {
        match self {
            Conditional::Unconditional => "none",
            Conditional::Lindelof => "lindelof",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct AbscissaProfile {
    pub d: u32,
    pub variant: Variant,
    pub conditional: Conditional,
    pub mu_star: f64,
    pub a_at_mu: f64,
    pub b_at_mu: f64,
    pub s: f64,
    pub h_mo: Option<u32>,
    pub e_mo: Option<f64>,
    /// Set when μ* sits within one grid step of an end of the search
    /// interval, i.e. the infimum may be approached rather than attained.
    pub at_endpoint: bool,
}

/// κ(d, k, m) = Σ_{r=k+1}^{m} (r+1) d^{-1/r}.
pub fn kappa(d: u64, k: u32, m: u32) -> Result<f64> {
    if d < 1 || k >= m {
        return Err(Error::domain("kappa", format!("need d >= 1 and k < m, got d={d}, k={k}, m={m}")));
    }
    let df = d as f64;
    Ok((k + 1..=m).map(|r| (r as f64 + 1.0) * df.powf(-1.0 / r as f64)).sum())
}

fn at_least_power(d: u64, base: u64, exp: u32) -> bool {
    match (base as u128).checked_pow(exp) {
        Some(v) => d as u128 >= v,
        None => false,
    }
}

/// λ(d, h), excess exponent of M_{h,d}(N) − T_h(N) over N^h.
///
/// Uses the most specific applicable branch; (d, h) = (2, 2) returns 0, the
/// exponent implied by Hua's fourth-moment bound.
pub fn lambda_exponent(d: u64, h: u32) -> Result<f64> {
    if d == 2 && h == 2 {
        return Ok(0.0);
    }
    if h < 2 || d < 2 * h as u64 - 1 {
        return Err(Error::domain(
            "lambda_exponent",
            format!("no branch applies: need d >= 2h - 1 >= 3, got d={d}, h={h}"),
        ));
    }
    let kap = kappa(d, h - 1, 2 * h - 2)?;
    if at_least_power(d, 2 * h as u64, 4 * h) {
        Ok(-0.5)
    } else if at_least_power(d, 2 * h as u64 - 1, 2) {
        Ok(-1.0 + kap)
    } else {
        Ok(-2.0 + 2.0 / 3f64.sqrt() + kap)
    }
}

fn e_for(d: u64, h: u32) -> Result<f64> {
    Ok(0.5 - (lambda_exponent(d, h)?.max(0.0) + 1.0) / (2.0 * h as f64))
}

/// (h_mo, e_mo): the h in [2, (d+1)/2] maximising 1/2 − (max{0, λ(d,h)} + 1)/(2h).
pub fn select_h_mo(d: u64) -> Result<(u32, f64)> {
    const OP: &str = "select_h_mo";
    if d < 2 {
        return Err(Error::domain(OP, format!("need d >= 2, got {d}")));
    }
    let h_max = d.div_ceil(2).max(2).min(u32::MAX as u64) as u32;
    let mut best = (2, e_for(d, 2)?);
    let df = d as f64;
    for h in 3..=h_max {
        // Once the λ = −1/2 branch is out of reach, κ(d,h−1,2h−2) ≥ d^{-1/h} Σ_{r=h}^{2h−2}(r+1)
        // bounds e_h by a quantity that only decreases in h.
        let hf = h as f64;
        let kappa_lower = df.powf(-1.0 / hf) * (hf - 1.0) * (3.0 * hf) / 2.0;
        let e_upper = 0.5 - kappa_lower / (2.0 * hf);
        if kappa_lower > 1.0 && e_upper <= best.1 && !at_least_power(d, 2 * h as u64, 4 * h) {
            break;
        }
        let e = e_for(d, h)?;
        if e > best.1 {
            best = (h, e);
        }
    }
    if !(best.1 > 0.0) {
        return Err(Error::numerical(OP, format!("e_mo = {} is not positive for d = {d}", best.1)));
    }
    Ok(best)
}

/// μ_upper(d) = (d² + d − 2)/(4d), where 𝐁(d, μ) changes sign.
pub fn mu_upper(d: u64) -> f64 {
    let d = d as f64;
    (d * d + d - 2.0) / (4.0 * d)
}

/// 𝐁(d, μ) = (1/(2μd))(1/2 − 2μ/(d+1) − 1/(d(d+1))).
pub fn bound_b(d: u64, mu: f64) -> Result<f64> {
    if d < 2 || !(mu > 0.0) {
        return Err(Error::domain("bound_B", format!("need d >= 2 and mu > 0, got d={d}, mu={mu}")));
    }
    Ok(bound_b_unchecked(d as f64, mu))
}

fn bound_b_unchecked(d: f64, mu: f64) -> f64 {
    (0.5 - 2.0 * mu / (d + 1.0) - 1.0 / (d * (d + 1.0))) / (2.0 * mu * d)
}

/// 𝐁_mo(d, h, μ) = (1/(2μd))(1/2 − (max{0, λ(d,h)} + 1 + 2μd)/(2h)).
pub fn bound_b_mo(d: u64, h: u32, mu: f64) -> Result<f64> {
    if d < 2 || !(mu > 0.0) {
        return Err(Error::domain("bound_B_mo", format!("need d >= 2 and mu > 0, got d={d}, mu={mu}")));
    }
    let lam = lambda_exponent(d, h)?.max(0.0);
    Ok(bound_b_mo_unchecked(d as f64, h as f64, lam, mu))
}

fn bound_b_mo_unchecked(d: f64, h: f64, lam_plus: f64, mu: f64) -> f64 {
    (0.5 - (lam_plus + 1.0 + 2.0 * mu * d) / (2.0 * h)) / (2.0 * mu * d)
}

/// Golden-section minimisation of `f` on [a, b] down to an interval of width `tol`.
pub fn golden_section<F: Fn(f64) -> f64>(f: F, mut a: f64, mut b: f64, tol: f64) -> (f64, f64) {
    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    let mut c = b - inv_phi * (b - a);
    let mut d = a + inv_phi * (b - a);
    let mut fc = f(c);
    let mut fd = f(d);
    while b - a > tol {
        if fc <= fd {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    let x = 0.5 * (a + b);
    let fx = f(x);
    [(x, fx), (c, fc), (d, fd)]
        .into_iter()
        .fold((x, fx), |best, cand| if cand.1 < best.1 { cand } else { best })
}

struct Objective {
    d: f64,
    variant: Variant,
    conditional: Conditional,
    h_mo: f64,
    lam_plus: f64,
}

impl Objective {
    fn a(&self, mu: f64) -> f64 {
        match self.conditional {
            Conditional::Lindelof if mu < 1.0 => 0.5,
            _ => abscissa_a_unchecked(mu),
        }
    }

    fn b(&self, mu: f64) -> f64 {
        match self.variant {
            Variant::Polynomial => bound_b_unchecked(self.d, mu),
            Variant::Monomial => bound_b_mo_unchecked(self.d, self.h_mo, self.lam_plus, mu),
        }
    }

    fn f(&self, mu: f64) -> f64 {
        self.a(mu).max(1.0 - self.b(mu))
    }
}

pub const REFINE_TOL: f64 = 1e-8;

/// 𝐒(d) or 𝐒_mo(d) with the optimising μ.
pub fn compute_s(d: u64, variant: Variant, conditional: Conditional, grid_step: f64) -> Result<AbscissaProfile> {
    const OP: &str = "compute_S";
    if d < 2 {
        return Err(Error::domain(OP, format!("need d >= 2, got {d}")));
    }
    if !(grid_step > 0.0 && grid_step <= 1e-2) {
        return Err(Error::domain(OP, format!("grid step must lie in (0, 0.01], got {grid_step}")));
    }
    let (h_mo, e_mo, lam_plus, mut upper) = match variant {
        Variant::Polynomial => (None, None, 0.0, mu_upper(d)),
        Variant::Monomial => {
            let (h, e) = select_h_mo(d)?;
            let lam = lambda_exponent(d, h)?.max(0.0);
            (Some(h), Some(e), lam, e * h as f64 / d as f64)
        }
    };
    if conditional == Conditional::Lindelof {
        upper = upper.min(1.0);
    }
    if !(upper > grid_step) {
        return Err(Error::domain(OP, format!("feasible interval (0, {upper}) holds no grid point")));
    }
    let obj = Objective {
        d: d as f64,
        variant,
        conditional,
        h_mo: h_mo.unwrap_or(0) as f64,
        lam_plus,
    };

    let cells = (upper / grid_step).ceil() as u64;
    let (best_i, best_f) = (1..cells)
        .map(|i| (i, obj.f(i as f64 * grid_step)))
        .filter(|(i, _)| (*i as f64 * grid_step) < upper)
        .fold((0u64, f64::INFINITY), |acc, c| if c.1 < acc.1 { c } else { acc });
    if best_i == 0 {
        return Err(Error::domain(OP, "empty feasible interval"));
    }
    let mut mu_star = best_i as f64 * grid_step;
    let mut s = best_f;

    let lo = (mu_star - grid_step).max(0.0);
    let hi = (mu_star + grid_step).min(upper);
    // keep the bracket strictly inside the open interval so 𝐁 stays finite
    let eps = 1e-15 * upper;
    let (g_mu, g_f) = golden_section(|m| obj.f(m), lo.max(eps), hi - eps, REFINE_TOL);
    if g_f < s {
        mu_star = g_mu;
        s = g_f;
    }
    if conditional == Conditional::Unconditional && 1.0 < upper {
        let f1 = obj.f(1.0);
        if f1 < s {
            mu_star = 1.0;
            s = f1;
        }
    }
    let at_endpoint = mu_star <= grid_step || mu_star >= upper - grid_step;
    Ok(AbscissaProfile {
        d: d as u32,
        variant,
        conditional,
        mu_star,
        a_at_mu: obj.a(mu_star),
        b_at_mu: obj.b(mu_star),
        s,
        h_mo,
        e_mo,
        at_endpoint,
    })
}

/// Every combination of degree, variant and conditional, in input order
/// (degree outermost).
pub fn abscissa_table(
    d_list: &[u64],
    variants: &[Variant],
    conditionals: &[Conditional],
    grid_step: f64,
) -> Result<Vec<AbscissaProfile>> {
    let combos: Vec<(u64, Variant, Conditional)> = d_list
        .iter()
        .flat_map(|&d| {
            variants
                .iter()
                .flat_map(move |&v| conditionals.iter().map(move |&c| (d, v, c)))
        })
        .collect();
    combos
        .par_iter()
        .map(|&(d, v, c)| compute_s(d, v, c, grid_step))
        .collect()
}
