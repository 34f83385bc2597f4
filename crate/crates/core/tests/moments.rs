use zeta_moments::moments::{
    continuous_moment, discrete_moment, enumerate_u, resonant_experiment, resonant_target, sample_coefficients,
    shifted_moduli_sq, zeta_two_sigma, MomentExperiment, ResonantSpec,
};
use zeta_moments::sum::Neumaier;
use zeta_moments::weyl::WeylPolynomial;
use zeta_moments::zeta::{EvalPoint, ZetaEvalConfig};

fn zeta4() -> f64 {
    std::f64::consts::PI.powi(4) / 90.0
}

fn experiment(sigma: f64, coeffs: Vec<f64>, schedule: Vec<u64>) -> MomentExperiment {
    MomentExperiment::new(EvalPoint::new(sigma, 0.0).unwrap(), WeylPolynomial::new(coeffs).unwrap(), schedule)
}

fn resonant(m: Vec<i64>) -> ResonantSpec {
    ResonantSpec { k0: 2, l0: 1, m, sigma: 2.0, t: 0.0, truncation_tolerance: 1e-10 }
}

#[test]
fn generic_linear_shift() {
    let r = discrete_moment(&experiment(2.0, vec![2f64.sqrt()], vec![1000, 10_000])).unwrap();
    assert!(r[1].abs_dev < r[0].abs_dev);
    assert!(r[1].abs_dev < 0.02 * zeta4());
    assert!((r[1].target - zeta4()).abs() < 1e-12);
}

#[test]
fn generic_quadratic_shift() {
    let r = discrete_moment(&experiment(2.0, vec![2f64.sqrt(), 3f64.sqrt()], vec![1000, 10_000])).unwrap();
    assert!(r[1].abs_dev < 0.02 * zeta4());
}

#[test]
fn strip_regime_deviation_shrinks() {
    let r = discrete_moment(&experiment(0.999, vec![1e-3, 1e-3], vec![500, 2000, 5000])).unwrap();
    assert!(r.windows(2).all(|w| w[1].abs_dev <= w[0].abs_dev), "{r:?}");
}

#[test]
fn continuous_average() {
    let s = EvalPoint::new(2.0, 0.0).unwrap();
    let a = continuous_moment(s, 1.0, 1000.0, 0.05).unwrap();
    assert!(a.abs_dev < 0.02 * zeta4());
    let b = continuous_moment(s, 2.0, 1000.0, 0.05).unwrap();
    assert!(b.abs_dev < 0.02 * zeta4());
    assert_eq!(a.target, b.target);
}

#[test]
fn resonant_runs() {
    let target = 5.0 / 3.0 * zeta4();
    let cfg = ZetaEvalConfig::tail_bounded(1e-4);
    let lin = resonant_experiment(&resonant(vec![1]), 10_000, &cfg).unwrap();
    assert!((lin.result.target - target).abs() < 1e-9);
    assert!(lin.result.abs_dev < 0.02 * target);
    let quad = resonant_experiment(&resonant(vec![0, 1]), 10_000, &cfg).unwrap();
    assert!(quad.result.abs_dev < 0.02 * target);
    assert!(target > zeta4());

    let generic = discrete_moment(&experiment(2.0, vec![2f64.sqrt()], vec![10_000])).unwrap()[0];
    assert!((lin.result.average - generic.average).abs() > 0.5);
}

#[test]
fn factorised_series_matches_pair_enumeration() {
    let bound = 10_000u64;
    for &(k0, l0, sigma, t) in &[(2u64, 1u64, 2.0, 0.0), (2, 1, 2.0, 1.3), (3, 2, 1.5, 0.7), (5, 2, 3.0, 10.0)] {
        let spec = ResonantSpec { k0, l0, m: vec![1], sigma, t, truncation_tolerance: 1e-12 };
        let mut acc = Neumaier::new();
        acc.add(zeta_two_sigma(sigma).unwrap());
        for (k, l, _) in enumerate_u(k0, l0, bound).unwrap() {
            let (kf, lf) = (k as f64, l as f64);
            acc.add(2.0 * (t * (kf / lf).ln()).cos() * (kf * lf).powf(-sigma));
        }
        // pairs with l > bound: Σ_u q^u Σ_{m > bound/k0^u} m^{-2σ}
        let q = ((k0 * l0) as f64).powf(-sigma);
        let mut tail = 0.0;
        let mut u = 1;
        while q.powi(u) > 1e-30 {
            let m0 = (bound as f64 / (k0 as f64).powi(u)).floor().max(1.0);
            tail += 2.0 * q.powi(u) * (m0.powf(1.0 - 2.0 * sigma) / (2.0 * sigma - 1.0) + 1.0);
            u += 1;
        }
        let series = resonant_target(&spec).unwrap().value;
        assert!((acc.value() - series).abs() <= 1e-12 + tail, "{k0}/{l0}: {} vs {series}", acc.value());
    }
}

#[test]
fn average_is_order_independent() {
    let e = experiment(2.0, vec![0.37, 1.21], vec![3000]);
    let values = shifted_moduli_sq(&e).unwrap();
    let forward: Neumaier = values.iter().copied().collect();
    let backward: Neumaier = values.iter().rev().copied().collect();
    let mut idx: Vec<usize> = (0..values.len()).collect();
    idx.sort_by_key(|&i| (i * 7919) % values.len());
    let shuffled: Neumaier = idx.iter().map(|&i| values[i]).collect();
    let avg = discrete_moment(&e).unwrap()[0].average;
    let n = values.len() as f64;
    for v in [forward.value(), backward.value(), shuffled.value()] {
        assert!((v / n - avg).abs() <= 1e-12 * avg);
    }
}

#[test]
fn sampled_runs_improve_at_last_checkpoint() {
    // deviations fluctuate like |Z|/√N, so checkpoints a factor 100 apart
    // separate them reliably where a factor 10 does not
    let cfg = ZetaEvalConfig::tail_bounded(1e-3);
    let mut improved = 0;
    for seed in 0..20u64 {
        let p = sample_coefficients(2, seed).unwrap();
        let e = MomentExperiment { seed, ..experiment(2.0, p.coeffs().to_vec(), vec![100, 10_000]) }.with_eval(cfg);
        let r = discrete_moment(&e).unwrap();
        improved += (r[1].abs_dev <= r[0].abs_dev) as usize;
    }
    assert!(improved >= 18, "{improved}/20");
}
