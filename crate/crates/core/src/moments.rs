//! Second moments of ζ shifted along polynomial sequences.
//!
//! The discrete average (1/N) Σ_{n≤N} |ζ(s + iP(n))|² tends to ζ(2σ) for
//! generic coefficients. When every coefficient is 2πm_i/log(k₀/ℓ₀), the
//! pairs (k, ℓ) with k/ℓ a power of k₀/ℓ₀ stop averaging out and the limit
//! picks up the extra series evaluated by [`resonant_target`].

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::sum::{Neumaier, CHUNK};
use crate::weyl::{weyl_sum, WeylPolynomial};
use crate::zeta::{eval_zeta, EvalPoint, ZetaEvalConfig, ZetaLine, ZetaMethod};

/// Default ceiling on the total number of Dirichlet terms one experiment may evaluate.
pub const DEFAULT_BUDGET: u64 = 4_000_000_000;

#[derive(Debug, Clone, PartialEq)]
pub struct MomentExperiment {
    pub s: EvalPoint,
    pub p: WeylPolynomial,
    pub n_schedule: Vec<u64>,
    pub eval_cfg: ZetaEvalConfig,
    pub seed: u64,
    pub budget: u64,
}

impl MomentExperiment {
    /// An experiment with the evaluator chosen by σ: the tail-bounded
    /// Dirichlet series (tolerance 1e-4) above σ = 1, Euler–Maclaurin below.
    pub fn new(s: EvalPoint, p: WeylPolynomial, n_schedule: Vec<u64>) -> Self {
        let eval_cfg = if s.sigma > 1.0 {
            ZetaEvalConfig::tail_bounded(1e-4)
        } else {
            ZetaEvalConfig::euler_maclaurin()
        };
        Self { s, p, n_schedule, eval_cfg, seed: 0, budget: DEFAULT_BUDGET }
    }

    pub fn with_eval(mut self, cfg: ZetaEvalConfig) -> Self {
        self.eval_cfg = cfg;
        self
    }

    pub fn with_budget(mut self, budget: u64) -> Self {
        self.budget = budget;
        self
    }

    fn validate(&self, op: &'static str) -> Result<()> {
        if !(self.s.sigma > 0.5) {
            return Err(Error::domain(op, format!("need sigma > 1/2, got {}", self.s.sigma)));
        }
        if self.n_schedule.is_empty() || self.n_schedule[0] < 1 {
            return Err(Error::domain(op, "schedule must be non-empty and start at N >= 1"));
        }
        if self.n_schedule.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::domain(op, "schedule must be strictly increasing"));
        }
        self.eval_cfg.validate()
    }

    /// Total Dirichlet terms the schedule will cost under the configured evaluator.
    pub fn cost(&self) -> u64 {
        let n_max = *self.n_schedule.last().unwrap_or(&0);
        match self.eval_cfg.method {
            ZetaMethod::DirichletTailBounded => {
                n_max.saturating_mul(ZetaLine::terms_for(self.s.sigma, &self.eval_cfg, 0.0))
            }
            ZetaMethod::EulerMaclaurin => (1..=n_max).fold(0u64, |acc, n| {
                acc.saturating_add(self.eval_cfg.em_cutoff(self.s.t + self.p.eval(n as f64)))
            }),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MomentResult {
    pub n: u64,
    pub average: f64,
    pub target: f64,
    pub abs_dev: f64,
}

impl MomentResult {
    fn new(n: u64, average: f64, target: f64) -> Self {
        Self { n, average, target, abs_dev: (average - target).abs() }
    }
}

/// ζ(2σ) as a real number.
pub fn zeta_two_sigma(sigma: f64) -> Result<f64> {
    Ok(eval_zeta(EvalPoint::new(2.0 * sigma, 0.0)?, &ZetaEvalConfig::default())?.re)
}

/// |ζ(s + iP(n))|² for n = 1..=N_max, in order.
pub fn shifted_moduli_sq(exp: &MomentExperiment) -> Result<Vec<f64>> {
    const OP: &str = "discrete_moment";
    exp.validate(OP)?;
    let cost = exp.cost();
    if cost > exp.budget {
        return Err(Error::resource(OP, format!("schedule needs {cost} Dirichlet terms, budget is {}", exp.budget)));
    }
    let n_max = *exp.n_schedule.last().unwrap();
    let t0 = exp.s.t;
    let heights: Vec<f64> = (1..=n_max).map(|n| t0 + exp.p.eval(n as f64)).collect();
    let t_max = heights.iter().fold(0.0f64, |m, h| m.max(h.abs()));
    let line = ZetaLine::new(exp.s.sigma, &exp.eval_cfg, t_max)?;
    heights
        .par_chunks(CHUNK)
        .map(|chunk| chunk.iter().map(|&h| Ok(line.eval(h)?.norm_sqr())).collect::<Result<Vec<f64>>>())
        .collect::<Result<Vec<Vec<f64>>>>()
        .map(|parts| parts.concat())
}

/// Running averages (1/N) Σ_{n≤N} |ζ(s + iP(n))|² at each checkpoint, against ζ(2σ).
pub fn discrete_moment(exp: &MomentExperiment) -> Result<Vec<MomentResult>> {
    let values = shifted_moduli_sq(exp)?;
    let target = zeta_two_sigma(exp.s.sigma)?;
    Ok(checkpoint_averages(&values, &exp.n_schedule, target))
}

fn checkpoint_averages(values: &[f64], schedule: &[u64], target: f64) -> Vec<MomentResult> {
    let mut acc = Neumaier::new();
    let mut out = Vec::with_capacity(schedule.len());
    let mut next = 0;
    for (i, &v) in values.iter().enumerate() {
        acc.add(v);
        let n = i as u64 + 1;
        if next < schedule.len() && schedule[next] == n {
            out.push(MomentResult::new(n, acc.value() / n as f64, target));
            next += 1;
        }
    }
    out
}

/// (1/T) ∫_0^T |ζ(s + iaτ)|² dτ by the composite trapezoid rule.
pub fn continuous_moment(s: EvalPoint, a: f64, horizon: f64, quad_step: f64) -> Result<MomentResult> {
    continuous_moment_with_budget(s, a, horizon, quad_step, DEFAULT_BUDGET)
}

pub fn continuous_moment_with_budget(
    s: EvalPoint,
    a: f64,
    horizon: f64,
    quad_step: f64,
    budget: u64,
) -> Result<MomentResult> {
    const OP: &str = "continuous_moment";
    if !(s.sigma > 0.5) {
        return Err(Error::domain(OP, format!("need sigma > 1/2, got {}", s.sigma)));
    }
    if !(horizon >= 100.0) || !horizon.is_finite() {
        return Err(Error::precondition(OP, format!("need T >= 100, got {horizon}")));
    }
    if !(a > 0.0) || !(quad_step > 0.0) {
        return Err(Error::precondition(OP, "need a > 0 and a positive quadrature step"));
    }
    let cfg = ZetaEvalConfig::default();
    let intervals = (horizon / quad_step).ceil() as u64;
    let step = horizon / intervals as f64;
    let height = |j: u64| s.t + a * step * j as f64;
    let cost = (0..=intervals).fold(0u64, |acc, j| acc.saturating_add(cfg.em_cutoff(height(j))));
    if cost > budget {
        return Err(Error::resource(OP, format!("quadrature needs {cost} Dirichlet terms, budget is {budget}")));
    }
    let t_max = height(0).abs().max(height(intervals).abs());
    let line = ZetaLine::new(s.sigma, &cfg, t_max)?;
    let nodes: Vec<u64> = (0..=intervals).collect();
    let values: Vec<f64> = nodes
        .par_chunks(CHUNK)
        .map(|chunk| chunk.iter().map(|&j| Ok(line.eval(height(j))?.norm_sqr())).collect::<Result<Vec<f64>>>())
        .collect::<Result<Vec<Vec<f64>>>>()?
        .concat();
    let mut acc = Neumaier::new();
    for (j, &v) in values.iter().enumerate() {
        let w = if j == 0 || j as u64 == intervals { 0.5 } else { 1.0 };
        acc.add(w * v);
    }
    let average = acc.value() * step / horizon;
    Ok(MomentResult::new(intervals + 1, average, zeta_two_sigma(s.sigma)?))
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn exact_root(x: u64, q: u32) -> Option<u64> {
    let guess = (x as f64).powf(1.0 / q as f64).round() as u64;
    (guess.saturating_sub(1)..=guess + 1).find(|&r| r.checked_pow(q) == Some(x))
}

/// Some q ≥ 2 with k0 = a^q and l0 = b^q, if any.
fn common_power(k0: u64, l0: u64) -> Option<u32> {
    (2..=64).find(|&q| exact_root(k0, q).is_some() && exact_root(l0, q).is_some())
}

#[derive(Debug, Clone, PartialEq)]
pub struct ResonantSpec {
    pub k0: u64,
    pub l0: u64,
    pub m: Vec<i64>,
    pub sigma: f64,
    pub t: f64,
    pub truncation_tolerance: f64,
}

impl ResonantSpec {
    fn validate(&self, op: &'static str) -> Result<()> {
        if self.k0 == self.l0 {
            return Err(Error::domain(op, "k0 = l0 makes log(k0/l0) vanish"));
        }
        if self.k0 < 1 || self.l0 < 1 {
            return Err(Error::domain(op, "k0 and l0 must be positive"));
        }
        if gcd(self.k0, self.l0) != 1 {
            return Err(Error::domain(op, format!("gcd({}, {}) != 1", self.k0, self.l0)));
        }
        if let Some(q) = common_power(self.k0, self.l0) {
            return Err(Error::domain(op, format!("k0/l0 = {}/{} is a perfect {q}-th power", self.k0, self.l0)));
        }
        if self.m.is_empty() || self.m.iter().all(|&m| m == 0) {
            return Err(Error::domain(op, "m must have at least one non-zero entry"));
        }
        if !(self.truncation_tolerance > 0.0) {
            return Err(Error::domain(op, "truncation tolerance must be positive"));
        }
        Ok(())
    }

    fn log_ratio(&self) -> f64 {
        (self.k0 as f64).ln() - (self.l0 as f64).ln()
    }
}

/// a_i = 2π m_i / log(k0/l0).
pub fn resonant_coeffs(spec: &ResonantSpec) -> Result<WeylPolynomial> {
    spec.validate("resonant_coeffs")?;
    let l = spec.log_ratio();
    WeylPolynomial::new(spec.m.iter().map(|&m| std::f64::consts::TAU * m as f64 / l).collect())
}

/// Pairs (k, l, u) with k < l ≤ bound and l/k = (k0/l0)^u, sorted by (l, k).
pub fn enumerate_u(k0: u64, l0: u64, bound: u64) -> Result<Vec<(u64, u64, u32)>> {
    const OP: &str = "enumerate_U";
    if !(k0 > l0 && l0 >= 1) {
        return Err(Error::domain(OP, format!("need k0 > l0 >= 1, got k0={k0}, l0={l0}")));
    }
    if gcd(k0, l0) != 1 {
        return Err(Error::domain(OP, format!("gcd({k0}, {l0}) != 1")));
    }
    let mut out = Vec::new();
    let mut u = 1u32;
    while let (Some(ku), Some(lu)) = (k0.checked_pow(u), l0.checked_pow(u)) {
        if ku > bound {
            break;
        }
        for m in 1..=bound / ku {
            out.push((m * lu, m * ku, u));
        }
        u += 1;
    }
    out.sort_by_key(|&(k, l, _)| (l, k));
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ResonantTarget {
    pub value: f64,
    /// Number of u-terms kept before the geometric tail fell below tolerance.
    pub terms: u32,
}

/// ζ(2σ) + 2 Σ_{(k,l)∈U, k<l} cos(t log(k/l)) / (kl)^σ, summed over u with
/// the inner sum over common multiples factored out as ζ(2σ).
pub fn resonant_target(spec: &ResonantSpec) -> Result<ResonantTarget> {
    const OP: &str = "resonant_target";
    spec.validate(OP)?;
    if !(spec.sigma > 1.0) {
        return Err(Error::domain(OP, format!("need sigma > 1, got {}", spec.sigma)));
    }
    let z = zeta_two_sigma(spec.sigma)?;
    let q = ((spec.k0 * spec.l0) as f64).powf(-spec.sigma);
    let l = spec.log_ratio().abs();
    let mut acc = Neumaier::new();
    acc.add(z);
    let mut qu = q;
    let mut u = 1u32;
    // stop once 2·ζ(2σ)·q^u/(1−q), the remaining tail, is under tolerance
    while 2.0 * z * qu / (1.0 - q) >= spec.truncation_tolerance {
        acc.add(2.0 * z * qu * (spec.t * u as f64 * l).cos());
        qu *= q;
        u += 1;
        if u > 100_000 {
            return Err(Error::numerical(OP, "u-series did not reach tolerance"));
        }
    }
    Ok(ResonantTarget { value: acc.value(), terms: u - 1 })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ResonantOutcome {
    pub result: MomentResult,
    pub trunc_terms: u32,
}

/// Discrete moment along the resonant polynomial, compared with [`resonant_target`].
pub fn resonant_experiment(spec: &ResonantSpec, n_max: u64, eval_cfg: &ZetaEvalConfig) -> Result<ResonantOutcome> {
    resonant_experiment_with_budget(spec, n_max, eval_cfg, DEFAULT_BUDGET)
}

pub fn resonant_experiment_with_budget(
    spec: &ResonantSpec,
    n_max: u64,
    eval_cfg: &ZetaEvalConfig,
    budget: u64,
) -> Result<ResonantOutcome> {
    let target = resonant_target(spec)?;
    let p = resonant_coeffs(spec)?;
    let exp = MomentExperiment {
        s: EvalPoint::new(spec.sigma, spec.t)?,
        p,
        n_schedule: vec![n_max],
        eval_cfg: *eval_cfg,
        seed: 0,
        budget,
    };
    let values = shifted_moduli_sq(&exp)?;
    let result = checkpoint_averages(&values, &exp.n_schedule, target.value)[0];
    Ok(ResonantOutcome { result, trunc_terms: target.terms })
}

/// |Σ_{n≤N} e(P(n))| / N.
pub fn equidistribution_ratio(p: &WeylPolynomial, n_max: u64) -> Result<f64> {
    if n_max < 1 {
        return Err(Error::domain("equidistribution_ratio", "need N >= 1"));
    }
    Ok(weyl_sum(p, n_max).norm() / n_max as f64)
}

/// Coefficients drawn uniformly from [0.1, 2], reproducible from `seed`.
pub fn sample_coefficients(degree: usize, seed: u64) -> Result<WeylPolynomial> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    WeylPolynomial::new((0..degree).map(|_| rng.gen_range(0.1..2.0)).collect())
}
