//! Exact and Monte Carlo counting of the mean-value systems.
//!
//! * J_{h,d}(N): 2h-tuples in [1,N] with equal power sums in every degree 1..d.
//! * M_{h,d}(N): the single equation in degree d.
//! * T_h(N): tuples whose halves are permutations of each other.
//!
//! J and M are counted either by brute force over all N^{2h} tuples or by
//! meet-in-the-middle over N^h half-tuples keyed by their exact power sums.
//! The brute-force path is kept as the oracle for the hashed one.

use std::collections::HashMap;
use std::time::Instant;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::fit::log_log_slope;
use crate::sum::Neumaier;
use crate::weyl::{log_ratio, ratio_power_sum, weyl_sum_seq, WeylPolynomial};

/// Largest N^{2h} accepted by the brute-force counter.
pub const BRUTE_LIMIT: u128 = 1_000_000_000;
/// Largest N^h accepted by the meet-in-the-middle counter.
pub const MITM_LIMIT: u128 = 100_000_000;
/// Samples per Monte Carlo batch; batch b draws from ChaCha stream b.
pub const MC_BATCH: u64 = 4096;
pub const MC_MIN_SAMPLES: u64 = 1000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CountTarget {
    /// J_{h,d}(N)
    Vinogradov,
    /// M_{h,d}(N)
    Monomial,
    /// T_h(N)
    Permutation,
}

impl CountTarget {
    pub fn label(&self) -> &'static str {
        match self {
            CountTarget::Vinogradov => "J",
            CountTarget::Monomial => "M",
            CountTarget::Permutation => "T",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CountMethod {
    Brute,
    Mitm,
    MonteCarlo,
    Combinatorial,
}

impl CountMethod {
    pub fn label(&self) -> &'static str {
        match self {
            CountMethod::Brute => "brute",
            CountMethod::Mitm => "mitm",
            CountMethod::MonteCarlo => "mc",
            CountMethod::Combinatorial => "formula",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum CountValue {
    Exact(u128),
    Estimate { mean: f64, stderr: f64 },
}

impl CountValue {
    pub fn exact(&self) -> Option<u128> {
        match *self {
            CountValue::Exact(c) => Some(c),
            CountValue::Estimate { .. } => None,
        }
    }

    pub fn as_f64(&self) -> f64 {
        match *self {
            CountValue::Exact(c) => c as f64,
            CountValue::Estimate { mean, .. } => mean,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CountReport {
    pub target: CountTarget,
    pub h: u32,
    pub d: u32,
    pub n_max: u64,
    pub method: CountMethod,
    pub value: CountValue,
    pub elapsed_seconds: f64,
}

impl CountReport {
    /// Exact count; panics on Monte Carlo reports.
    pub fn count(&self) -> u128 {
        self.value.exact().expect("exact count requested from a Monte Carlo report")
    }
}

fn check_sizes(op: &'static str, h: u32, d: u32, n: u64) -> Result<()> {
    if h < 1 || d < 1 || n < 1 {
        return Err(Error::domain(op, format!("need h, d, N >= 1, got h={h}, d={d}, N={n}")));
    }
    Ok(())
}

fn checked_pow(op: &'static str, n: u64, e: u32) -> Result<u128> {
    (n as u128)
        .checked_pow(e)
        .ok_or_else(|| Error::resource(op, format!("{n}^{e} overflows 128 bits")))
}

/// Exponents whose power sums must agree.
fn exponents(target: CountTarget, d: u32) -> Vec<u32> {
    match target {
        CountTarget::Vinogradov => (1..=d).collect(),
        CountTarget::Monomial => vec![d],
        CountTarget::Permutation => unreachable!("T has no power-sum key"),
    }
}

/// Table x^e for x in 0..=N, one row per exponent; errors if h·N^e overflows.
fn power_table(op: &'static str, h: u32, n: u64, exps: &[u32]) -> Result<Vec<Vec<u128>>> {
    let mut rows = Vec::with_capacity(exps.len());
    for &e in exps {
        let top = checked_pow(op, n, e)?;
        if top.checked_mul(2 * h as u128).is_none_or(|v| v > i128::MAX as u128) {
            return Err(Error::resource(op, format!("{h} * {n}^{e} overflows the power-sum key")));
        }
        rows.push((0..=n).map(|x| (x as u128).pow(e)).collect());
    }
    Ok(rows)
}

fn brute_power_sums(op: &'static str, target: CountTarget, h: u32, d: u32, n: u64) -> Result<u128> {
    let size = checked_pow(op, n, 2 * h)?;
    if size > BRUTE_LIMIT {
        return Err(Error::resource(op, format!("brute force needs N^(2h) = {size} > {BRUTE_LIMIT} tuples")));
    }
    let exps = exponents(target, d);
    let table = power_table(op, h, n, &exps)?;
    let k = exps.len();
    let len = 2 * h as usize;
    let mut partial = vec![0i128; k * (len + 1)];
    let mut count = 0u128;
    let mut idx = vec![1u64; len];
    // odometer over [1,N]^{2h}; partial[depth] holds the signed sums of the first `depth` coordinates
    let mut depth = 0usize;
    loop {
        if depth == len {
            if partial[k * len..k * (len + 1)].iter().all(|&v| v == 0) {
                count += 1;
            }
            // advance
            loop {
                if depth == 0 {
                    return Ok(count);
                }
                depth -= 1;
                if idx[depth] < n {
                    idx[depth] += 1;
                    break;
                }
                idx[depth] = 1;
            }
        }
        let x = idx[depth] as usize;
        let sign: i128 = if depth < h as usize { 1 } else { -1 };
        for j in 0..k {
            partial[k * (depth + 1) + j] = partial[k * depth + j] + sign * table[j][x] as i128;
        }
        depth += 1;
    }
}

fn half_sums(table: &[Vec<u128>], h: usize, n: u64, first: u64) -> HashMap<Vec<u128>, u64> {
    let k = table.len();
    let mut map: HashMap<Vec<u128>, u64> = HashMap::new();
    let key: Vec<u128> = (0..k).map(|j| table[j][first as usize]).collect();
    if h == 1 {
        map.insert(key, 1);
        return map;
    }
    let rest = h - 1;
    let mut idx = vec![1u64; rest];
    loop {
        let sums: Vec<u128> = (0..k)
            .map(|j| key[j] + idx.iter().map(|&x| table[j][x as usize]).sum::<u128>())
            .collect();
        *map.entry(sums).or_insert(0) += 1;
        let mut p = rest;
        loop {
            if p == 0 {
                return map;
            }
            p -= 1;
            if idx[p] < n {
                idx[p] += 1;
                break;
            }
            idx[p] = 1;
        }
    }
}

fn mitm_power_sums(op: &'static str, target: CountTarget, h: u32, d: u32, n: u64) -> Result<u128> {
    let size = checked_pow(op, n, h)?;
    if size > MITM_LIMIT {
        return Err(Error::resource(op, format!("meet-in-the-middle needs N^h = {size} > {MITM_LIMIT} half-tuples")));
    }
    let exps = exponents(target, d);
    let table = power_table(op, h, n, &exps)?;
    let merged = (1..=n)
        .into_par_iter()
        .map(|first| half_sums(&table, h as usize, n, first))
        .reduce(HashMap::new, |mut a, b| {
            if a.len() < b.len() {
                return merge_into(b, a);
            }
            for (key, c) in b {
                *a.entry(key).or_insert(0) += c;
            }
            a
        });
    Ok(merged.values().map(|&c| (c as u128) * (c as u128)).sum())
}

fn merge_into(mut big: HashMap<Vec<u128>, u64>, small: HashMap<Vec<u128>, u64>) -> HashMap<Vec<u128>, u64> {
    for (key, c) in small {
        *big.entry(key).or_insert(0) += c;
    }
    big
}

fn exact_count(
    op: &'static str,
    target: CountTarget,
    h: u32,
    d: u32,
    n: u64,
    method: CountMethod,
) -> Result<CountReport> {
    check_sizes(op, h, d, n)?;
    let start = Instant::now();
    let count = match method {
        CountMethod::Brute => brute_power_sums(op, target, h, d, n)?,
        CountMethod::Mitm => mitm_power_sums(op, target, h, d, n)?,
        other => {
            return Err(Error::domain(op, format!("method {} does not give an exact count here", other.label())))
        }
    };
    Ok(CountReport {
        target,
        h,
        d,
        n_max: n,
        method,
        value: CountValue::Exact(count),
        elapsed_seconds: start.elapsed().as_secs_f64(),
    })
}

/// J_{h,d}(N) by brute force or meet-in-the-middle.
pub fn count_j(h: u32, d: u32, n_max: u64, method: CountMethod) -> Result<CountReport> {
    exact_count("count_J", CountTarget::Vinogradov, h, d, n_max, method)
}

/// M_{h,d}(N) by brute force or meet-in-the-middle.
pub fn count_m(h: u32, d: u32, n_max: u64, method: CountMethod) -> Result<CountReport> {
    exact_count("count_M", CountTarget::Monomial, h, d, n_max, method)
}

/// Integer partitions of `n` with parts in non-increasing order.
fn partitions(n: u32) -> Vec<Vec<u32>> {
    fn go(rem: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if rem == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (1..=rem.min(max)).rev() {
            cur.push(p);
            go(rem - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

fn factorial(n: u32) -> u128 {
    (1..=n as u128).product()
}

fn t_formula(h: u32, n: u64) -> Result<u128> {
    const OP: &str = "count_T";
    let overflow = || Error::resource(OP, format!("T_{h}({n}) overflows 128 bits"));
    let h_fact = factorial(h);
    let mut total = 0u128;
    for parts in partitions(h) {
        let k = parts.len() as u64;
        if k > n {
            continue;
        }
        // ways to assign distinct values to the parts, up to swapping equal parts
        let mut falling = 1u128;
        for i in 0..k {
            falling = falling.checked_mul((n - i) as u128).ok_or_else(overflow)?;
        }
        let mut same = 1u128;
        let mut i = 0;
        while i < parts.len() {
            let j = parts[i..].iter().take_while(|&&p| p == parts[i]).count();
            same *= factorial(j as u32);
            i += j;
        }
        let multisets = falling / same;
        let orderings = h_fact / parts.iter().map(|&p| factorial(p)).product::<u128>();
        let sq = orderings.checked_mul(orderings).ok_or_else(overflow)?;
        total = total.checked_add(multisets.checked_mul(sq).ok_or_else(overflow)?).ok_or_else(overflow)?;
    }
    Ok(total)
}

fn t_brute(h: u32, n: u64) -> Result<u128> {
    const OP: &str = "count_T";
    let size = checked_pow(OP, n, 2 * h)?;
    if size > BRUTE_LIMIT {
        return Err(Error::resource(OP, format!("brute force needs N^(2h) = {size} > {BRUTE_LIMIT} tuples")));
    }
    let len = 2 * h as usize;
    let half = h as usize;
    let mut idx = vec![1u64; len];
    let mut count = 0u128;
    let mut a = vec![0u64; half];
    let mut b = vec![0u64; half];
    loop {
        a.copy_from_slice(&idx[..half]);
        b.copy_from_slice(&idx[half..]);
        a.sort_unstable();
        b.sort_unstable();
        if a == b {
            count += 1;
        }
        let mut p = len;
        loop {
            if p == 0 {
                return Ok(count);
            }
            p -= 1;
            if idx[p] < n {
                idx[p] += 1;
                break;
            }
            idx[p] = 1;
        }
    }
}

/// T_h(N), summed over multiplicity patterns of size-h multisets.
pub fn count_t(h: u32, n_max: u64) -> Result<CountReport> {
    count_t_with(h, n_max, CountMethod::Combinatorial)
}

/// T_h(N) by the combinatorial formula or by brute-force enumeration.
pub fn count_t_with(h: u32, n_max: u64, method: CountMethod) -> Result<CountReport> {
    check_sizes("count_T", h, 1, n_max)?;
    let start = Instant::now();
    let count = match method {
        CountMethod::Combinatorial | CountMethod::Mitm => t_formula(h, n_max)?,
        CountMethod::Brute => t_brute(h, n_max)?,
        CountMethod::MonteCarlo => {
            return Err(Error::domain("count_T", "T_h(N) has no integral representation to sample"))
        }
    };
    Ok(CountReport {
        target: CountTarget::Permutation,
        h,
        d: 1,
        n_max,
        method: if method == CountMethod::Brute { CountMethod::Brute } else { CountMethod::Combinatorial },
        value: CountValue::Exact(count),
        elapsed_seconds: start.elapsed().as_secs_f64(),
    })
}

fn monte_carlo<F>(op: &'static str, samples: u64, seed: u64, dims: usize, integrand: F) -> Result<(f64, f64)>
where
    F: Fn(&[f64]) -> f64 + Sync,
{
    if samples < MC_MIN_SAMPLES {
        return Err(Error::precondition(op, format!("need at least {MC_MIN_SAMPLES} samples, got {samples}")));
    }
    let batches = samples.div_ceil(MC_BATCH);
    let partials: Vec<(Neumaier, Neumaier)> = (0..batches)
        .into_par_iter()
        .map(|b| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(b);
            let count = MC_BATCH.min(samples - b * MC_BATCH);
            let mut point = vec![0.0; dims];
            let mut sum = Neumaier::new();
            let mut sq = Neumaier::new();
            for _ in 0..count {
                for x in point.iter_mut() {
                    *x = rng.gen::<f64>();
                }
                let v = integrand(&point);
                sum.add(v);
                sq.add(v * v);
            }
            (sum, sq)
        })
        .collect();
    let mut sum = Neumaier::new();
    let mut sq = Neumaier::new();
    for (s, q) in &partials {
        sum.merge(s);
        sq.merge(q);
    }
    let n = samples as f64;
    let mean = sum.value() / n;
    let var = ((sq.value() - n * mean * mean) / (n - 1.0)).max(0.0);
    Ok((mean, (var / n).sqrt()))
}

/// Monte Carlo estimate of ∫_{[0,1]^d} |Σ_{n≤N} e(a₁n+⋯+a_dn^d)|^{2h} da.
pub fn mc_mean_value(h: u32, d: u32, n_max: u64, samples: u64, seed: u64) -> Result<CountReport> {
    const OP: &str = "mc_mean_value";
    check_sizes(OP, h, d, n_max)?;
    let start = Instant::now();
    let (mean, stderr) =
        monte_carlo(OP, samples, seed, d as usize, |a| weyl_sum_seq(a, n_max).norm_sqr().powi(h as i32))?;
    Ok(CountReport {
        target: CountTarget::Vinogradov,
        h,
        d,
        n_max,
        method: CountMethod::MonteCarlo,
        value: CountValue::Estimate { mean, stderr },
        elapsed_seconds: start.elapsed().as_secs_f64(),
    })
}

/// Monte Carlo estimate of ∫_0^1 |Σ_{n≤N} e(a n^d)|^{2h} da.
pub fn mc_mean_value_monomial(h: u32, d: u32, n_max: u64, samples: u64, seed: u64) -> Result<CountReport> {
    const OP: &str = "mc_mean_value";
    check_sizes(OP, h, d, n_max)?;
    let start = Instant::now();
    let (mean, stderr) = monte_carlo(OP, samples, seed, 1, |a| {
        let mut c = vec![0.0; d as usize];
        c[d as usize - 1] = a[0];
        weyl_sum_seq(&c, n_max).norm_sqr().powi(h as i32)
    })?;
    Ok(CountReport {
        target: CountTarget::Monomial,
        h,
        d,
        n_max,
        method: CountMethod::MonteCarlo,
        value: CountValue::Estimate { mean, stderr },
        elapsed_seconds: start.elapsed().as_secs_f64(),
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct GrowthFit {
    pub h: u32,
    pub d: u32,
    /// (N, J_{h,d}(N))
    pub points: Vec<(u64, u128)>,
    pub slope: f64,
}

impl GrowthFit {
    /// max(h, 2h − d(d+1)/2), the exponent without ε.
    pub fn bdg_exponent(&self) -> f64 {
        let h = self.h as f64;
        let d = self.d as f64;
        h.max(2.0 * h - d * (d + 1.0) / 2.0)
    }
}

/// Least-squares slope of log J_{h,d}(N) against log N.
pub fn growth_exponent(h: u32, d: u32, n_list: &[u64]) -> Result<GrowthFit> {
    const OP: &str = "growth_exponent";
    if n_list.len() < 4 {
        return Err(Error::domain(OP, format!("need at least 4 values of N, got {}", n_list.len())));
    }
    if n_list.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::domain(OP, "N values must be strictly increasing"));
    }
    let mut points = Vec::with_capacity(n_list.len());
    for &n in n_list {
        points.push((n, count_j(h, d, n, CountMethod::Mitm)?.count()));
    }
    let xs: Vec<f64> = points.iter().map(|p| p.0 as f64).collect();
    let ys: Vec<f64> = points.iter().map(|p| p.1 as f64).collect();
    Ok(GrowthFit { h, d, slope: log_log_slope(&xs, &ys), points })
}

/// |Σ (k/l)^{iP(n)}|^{d(d+1)} divided by
/// ((⌊M log(k/l)/2π⌋ + 1)/log(k/l))^d · N^{d(d+1)/2 + 1 + 2μd + 3ε}.
///
/// The bound holds only up to an unknown constant on a full-measure set of
/// coefficients, so the value is a diagnostic, not a pass/fail check.
#[allow(clippy::too_many_arguments)]
pub fn flm_ratio(p: &WeylPolynomial, m_a: u64, mu: f64, eps: f64, n_max: u64, k: u64, l: u64) -> Result<f64> {
    const OP: &str = "flm_ratio";
    if p.coeffs().iter().any(|&c| c > m_a as f64) {
        return Err(Error::domain(OP, format!("coefficients exceed M_a = {m_a}")));
    }
    if !(mu > 0.0) || !(eps > 0.0) || n_max < 1 {
        return Err(Error::domain(OP, "need mu > 0, eps > 0, N >= 1"));
    }
    let d = p.degree() as f64;
    let k_max = (2.0 * d * m_a as f64 * (n_max as f64).powf(d)).powf(mu);
    if l < 1 || l >= k || k as f64 > k_max {
        return Err(Error::domain(OP, format!("need 1 <= l < k <= (2 d M_a N^d)^mu = {k_max:.6}, got k={k}, l={l}")));
    }
    let sum: Complex64 = ratio_power_sum(k, l, p, n_max)?;
    let lr = log_ratio(k, l);
    let ln_lhs = d * (d + 1.0) * sum.norm().ln();
    let ln_rhs = d * (((m_a as f64 / std::f64::consts::TAU * lr).floor() + 1.0) / lr).ln()
        + (d * (d + 1.0) / 2.0 + 1.0 + 2.0 * mu * d + 3.0 * eps) * (n_max as f64).ln();
    Ok((ln_lhs - ln_rhs).exp())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_anchors() {
        assert_eq!(count_j(1, 1, 9, CountMethod::Brute).unwrap().count(), 9);
        assert_eq!(count_j(1, 1, 9, CountMethod::Mitm).unwrap().count(), 9);
        assert_eq!(count_j(3, 2, 2, CountMethod::Brute).unwrap().count(), 20);
        assert_eq!(count_j(3, 2, 2, CountMethod::Mitm).unwrap().count(), 20);
        assert_eq!(count_j(2, 2, 3, CountMethod::Brute).unwrap().count(), 15);
        assert_eq!(count_j(2, 2, 3, CountMethod::Mitm).unwrap().count(), 15);
    }

    #[test]
    fn taxicab_anchors() {
        assert_eq!(count_m(2, 3, 12, CountMethod::Brute).unwrap().count(), 284);
        assert_eq!(count_m(2, 3, 12, CountMethod::Mitm).unwrap().count(), 284);
        assert_eq!(count_m(2, 3, 11, CountMethod::Brute).unwrap().count(), 231);
        assert_eq!(count_m(2, 3, 11, CountMethod::Mitm).unwrap().count(), 231);
        assert_eq!(count_m(1, 5, 6, CountMethod::Mitm).unwrap().count(), 6);
    }

    #[test]
    fn permutation_counts() {
        assert_eq!(count_t(1, 5).unwrap().count(), 5);
        assert_eq!(count_t(2, 2).unwrap().count(), 6);
        assert_eq!(count_t(2, 12).unwrap().count(), 276);
        assert_eq!(count_t_with(2, 2, CountMethod::Brute).unwrap().count(), 6);
        assert!(count_t_with(2, 2, CountMethod::MonteCarlo).is_err());
        // fewer values than parts: only partitions with at most N parts survive
        assert_eq!(count_t(3, 1).unwrap().count(), 1);
    }

    #[test]
    fn permutation_formula_matches_brute_force() {
        for h in 1..=3 {
            for n in 1..=6 {
                assert_eq!(t_formula(h, n).unwrap(), t_brute(h, n).unwrap(), "h={h} N={n}");
            }
        }
    }

    #[test]
    fn resource_limits() {
        assert!(matches!(count_j(3, 2, 40, CountMethod::Brute), Err(Error::Resource { .. })));
        assert!(matches!(count_j(5, 2, 50, CountMethod::Mitm), Err(Error::Resource { .. })));
        assert!(matches!(count_m(2, 40, 100, CountMethod::Mitm), Err(Error::Resource { .. })));
        assert!(matches!(count_j(0, 2, 5, CountMethod::Mitm), Err(Error::Domain { .. })));
    }

    #[test]
    fn mc_precondition_and_determinism() {
        assert!(matches!(mc_mean_value(1, 1, 9, 999, 1), Err(Error::Precondition { .. })));
        let a = mc_mean_value(2, 2, 3, 20_000, 7).unwrap();
        let b = mc_mean_value(2, 2, 3, 20_000, 7).unwrap();
        assert_eq!(a.value, b.value);
        let c = mc_mean_value(2, 2, 3, 20_000, 8).unwrap();
        assert_ne!(a.value, c.value);
    }

    #[test]
    fn monomial_mc_tracks_exact_count() {
        let r = mc_mean_value_monomial(2, 3, 6, 200_000, 42).unwrap();
        let exact = count_m(2, 3, 6, CountMethod::Mitm).unwrap().count() as f64;
        if let CountValue::Estimate { mean, stderr } = r.value {
            assert!((mean - exact).abs() < 4.0 * stderr, "{mean} ± {stderr} vs {exact}");
        } else {
            panic!("expected estimate");
        }
    }

    #[test]
    fn growth_fit_validation() {
        assert!(growth_exponent(2, 2, &[4, 8, 16]).is_err());
        assert!(growth_exponent(2, 2, &[4, 8, 8, 16]).is_err());
        let fit = growth_exponent(1, 3, &[4, 8, 16, 32]).unwrap();
        assert!((fit.slope - 1.0).abs() < 1e-12);
    }

    #[test]
    fn flm_ratio_cases() {
        let p = WeylPolynomial::new(vec![2f64.sqrt(), 3f64.sqrt()]).unwrap();
        let r = flm_ratio(&p, 2, 0.1, 0.01, 100, 2, 1).unwrap();
        assert!(r.is_finite() && r > 0.0);
        // degenerate coefficients: the sum is N, so the left side is N^{d(d+1)}
        let zero = WeylPolynomial::new(vec![0.0, 0.0]).unwrap();
        let z = flm_ratio(&zero, 2, 0.1, 0.01, 100, 2, 1).unwrap();
        let lr = 2f64.ln();
        let rhs = ((2.0 / std::f64::consts::TAU * lr).floor() + 1.0) / lr;
        let expect = 100f64.powi(6) / (rhs * rhs * 100f64.powf(3.0 + 1.0 + 0.4 + 0.03));
        assert!((z / expect - 1.0).abs() < 1e-9);
        assert!(z > r);
        assert!(flm_ratio(&p, 2, 0.1, 0.01, 100, 4, 1).is_err());
        assert!(flm_ratio(&p, 1, 0.1, 0.01, 100, 2, 1).is_err());
    }
}
