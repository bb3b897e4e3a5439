//! Baseline upper-bound methods: Hoeffding (plain and minimum-tightened),
//! the Maurer & Pontil empirical Bernstein bound, Anderson's bound through
//! the DKW envelope, the Student-t interval, and percentile / BCa
//! bootstraps.
//!
//! All formulas report their raw value; Hoeffding-style bounds can exceed 1,
//! which is vacuous for `[0, 1]` variables. Callers clamp where needed.

use std::cmp::Ordering;

use rayon::prelude::*;

use crate::confidence::{require_alpha_at_most, require_alpha_open};
use crate::error::{Error, Result};
use crate::num::{real, Real};
use crate::order_stats::{empirical_quantile, induced_mean, OrderedSample, SortedUniformVector};
use crate::rng::CounterRng;
use crate::special::{normal_cdf, normal_quantile, student_t_quantile};

/// Default bootstrap resample count.
pub const DEFAULT_BOOTSTRAP_RESAMPLES: usize = 2_000;

/// Sample mean and unbiased variance (divisor n - 1).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SampleStats<T> {
    pub mean: T,
    pub variance: T,
    pub n: usize,
}

impl<T: Real> SampleStats<T> {
    /// Two-pass mean/variance; exactly zero variance for constant samples.
    /// A singleton gets variance 0 (methods that need the unbiased estimate
    /// require n >= 2 themselves).
    pub fn from_sample(x: &[T]) -> Result<Self> {
        if x.is_empty() {
            return Err(Error::EmptySample);
        }
        let n = x.len();
        let nf = real::<T>(n as f64);
        let mean = x.iter().copied().sum::<T>() / nf;
        let variance = if n >= 2 {
            x.iter().map(|&v| (v - mean) * (v - mean)).sum::<T>() / (nf - T::one())
        } else {
            T::zero()
        };
        Ok(Self { mean, variance, n })
    }
}

fn hoeffding_slack<T: Real>(n: usize, alpha: T) -> T {
    let two_n = real::<T>(2.0 * n as f64);
    (alpha.recip().ln() / two_n).sqrt()
}

/// `mean + sqrt(ln(1/alpha) / 2n)` for `0 < alpha <= 1`.
pub fn hoeffding_upper<T: Real>(x: &[T], alpha: T) -> Result<T> {
    require_alpha_at_most(alpha, T::one(), "(0, 1]")?;
    let stats = SampleStats::from_sample(x)?;
    Ok(stats.mean + hoeffding_slack(stats.n, alpha))
}

/// Hoeffding with the slack scaled by `1 - z_1`; valid for `alpha <= 0.5`.
/// Never larger than [`hoeffding_upper`].
pub fn hoeffding_upper_tightened<T: Real>(z: &OrderedSample<T>, alpha: T) -> Result<T> {
    require_alpha_at_most(alpha, real(0.5), "(0, 0.5]")?;
    let stats = SampleStats::from_sample(z.values())?;
    Ok(stats.mean + (T::one() - z.min()) * hoeffding_slack(stats.n, alpha))
}

/// Empirical Bernstein bound
/// `mean + sqrt(2 var ln(2/alpha) / n) + 7 ln(2/alpha) / (3 (n - 1))`.
pub fn maurer_pontil_upper<T: Real>(x: &[T], alpha: T) -> Result<T> {
    let two = real::<T>(2.0);
    require_alpha_at_most(alpha, two, "(0, 2]")?;
    let stats = SampleStats::from_sample(x)?;
    if stats.n < 2 {
        return Err(Error::SampleTooSmall { n: stats.n, min: 2 });
    }
    let nf = real::<T>(stats.n as f64);
    let ln_term = (two / alpha).ln();
    let variance_term = (two * stats.variance * ln_term / nf).sqrt();
    let range_term = real::<T>(7.0) * ln_term / (real::<T>(3.0) * (nf - T::one()));
    Ok(stats.mean + variance_term + range_term)
}

/// The DKW envelope `u_i = max(0, i/n - sqrt(ln(1/alpha) / 2n))`, using the
/// tight constant that requires `alpha <= 0.5`.
pub fn dkw_envelope<T: Real>(n: usize, alpha: T) -> Result<SortedUniformVector<T>> {
    require_alpha_at_most(alpha, real(0.5), "(0, 0.5]")?;
    if n == 0 {
        return Err(Error::EmptySample);
    }
    let slack = hoeffding_slack(n, alpha);
    let nf = real::<T>(n as f64);
    let values = (1..=n)
        .map(|i| (real::<T>(i as f64) / nf - slack).max(T::zero()))
        .collect();
    SortedUniformVector::from_sorted(values)
}

/// Anderson's bound: the induced mean of the sample against the DKW
/// envelope.
pub fn anderson_upper<T: Real>(z: &OrderedSample<T>, alpha: T) -> Result<T> {
    let envelope = dkw_envelope(z.len(), alpha)?;
    induced_mean(z, &envelope)
}

/// Student-t interval upper end:
/// `mean + sqrt(var / n) t_{1 - alpha, n - 1}`.
pub fn student_t_upper<T: Real>(x: &[T], alpha: T) -> Result<T> {
    require_alpha_open(alpha)?;
    let stats = SampleStats::from_sample(x)?;
    if stats.n < 2 {
        return Err(Error::SampleTooSmall { n: stats.n, min: 2 });
    }
    let t = student_t_quantile(T::one() - alpha, stats.n - 1)?;
    Ok(student_t_upper_from_stats(&stats, t))
}

/// Formula body of [`student_t_upper`] for callers that cache the t
/// quantile across many samples of the same size.
pub fn student_t_upper_from_stats<T: Real>(stats: &SampleStats<T>, t_quantile: T) -> T {
    stats.mean + (stats.variance / real::<T>(stats.n as f64)).sqrt() * t_quantile
}

/// Bootstrap configuration: resample count and base seed. Resample `b`
/// draws from stream `(seed, b)`, so results are thread-count independent.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BootstrapConfig {
    pub resamples: usize,
    pub seed: u64,
}

impl Default for BootstrapConfig {
    fn default() -> Self {
        Self {
            resamples: DEFAULT_BOOTSTRAP_RESAMPLES,
            seed: 0,
        }
    }
}

/// Means of `cfg.resamples` with-replacement resamples of `x`.
fn resample_means<T: Real>(x: &[T], cfg: &BootstrapConfig) -> Vec<T> {
    let n = x.len();
    let nf = real::<T>(n as f64);
    (0..cfg.resamples)
        .into_par_iter()
        .map(|b| {
            let mut rng = CounterRng::stream(cfg.seed, b as u64);
            let mut acc = T::zero();
            for _ in 0..n {
                acc += x[rng.next_index(n)];
            }
            acc / nf
        })
        .collect()
}

fn check_bootstrap<T: Real>(x: &[T], alpha: T, cfg: &BootstrapConfig) -> Result<()> {
    require_alpha_open(alpha)?;
    if x.is_empty() {
        return Err(Error::EmptySample);
    }
    if cfg.resamples == 0 {
        return Err(Error::OutOfRange {
            name: "bootstrap resamples",
            value: 0.0,
            range: ">= 1",
        });
    }
    Ok(())
}

/// Percentile bootstrap: the `(1 - alpha)`-quantile of the resample means.
pub fn percentile_bootstrap_upper<T: Real>(
    x: &[T],
    alpha: T,
    cfg: &BootstrapConfig,
) -> Result<T> {
    check_bootstrap(x, alpha, cfg)?;
    let means = resample_means(x, cfg);
    empirical_quantile(&means, T::one() - alpha)
}

/// BCa bootstrap outcome; `fallback` is set when the method degenerated to
/// the percentile bootstrap.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BcaBound<T> {
    pub value: T,
    pub fallback: bool,
}

/// Jackknife acceleration constant `sum d^3 / (6 (sum d^2)^{3/2})` with
/// `d_i = mean(theta) - theta_i` over leave-one-out means. `None` when the
/// denominator vanishes (constant samples).
pub fn jackknife_acceleration<T: Real>(x: &[T]) -> Option<T> {
    let n = x.len();
    if n < 2 {
        return None;
    }
    let nf = real::<T>(n as f64);
    let total = x.iter().copied().sum::<T>();
    let loo: Vec<T> = x.iter().map(|&v| (total - v) / (nf - T::one())).collect();
    let loo_mean = loo.iter().copied().sum::<T>() / nf;
    let mut d2 = T::zero();
    let mut d3 = T::zero();
    for &t in &loo {
        let d = loo_mean - t;
        d2 += d * d;
        d3 += d * d * d;
    }
    if d2 == T::zero() {
        return None;
    }
    Some(d3 / (real::<T>(6.0) * d2.powf(real(1.5))))
}

/// Bias-corrected and accelerated bootstrap. Reverts to the percentile
/// bootstrap (on the same resamples) whenever the bias constant is infinite
/// (all resample means on one side of the sample mean), the jackknife
/// denominator is zero, the sample is constant, or the adjusted level
/// degenerates numerically.
pub fn bca_upper<T: Real>(x: &[T], alpha: T, cfg: &BootstrapConfig) -> Result<BcaBound<T>> {
    check_bootstrap(x, alpha, cfg)?;
    if x.len() < 2 {
        return Err(Error::SampleTooSmall { n: x.len(), min: 2 });
    }
    let means = resample_means(x, cfg);
    let percentile = |means: &[T]| empirical_quantile(means, T::one() - alpha);

    let first = x[0];
    if x.iter().all(|&v| v == first) {
        return Ok(BcaBound {
            value: percentile(&means)?,
            fallback: true,
        });
    }
    let sample_mean = SampleStats::from_sample(x)?.mean;
    let below = means.iter().filter(|&&m| m < sample_mean).count();
    let acceleration = jackknife_acceleration(x);
    if below == 0 || below == means.len() || acceleration.is_none() {
        return Ok(BcaBound {
            value: percentile(&means)?,
            fallback: true,
        });
    }
    let a = acceleration.expect("checked above");

    let bias = normal_quantile(real::<T>(below as f64) / real(means.len() as f64))?;
    let z_level = normal_quantile(T::one() - alpha)?;
    let denom = T::one() - a * (bias + z_level);
    if !(denom > T::zero()) {
        return Ok(BcaBound {
            value: percentile(&means)?,
            fallback: true,
        });
    }
    let adjusted = normal_cdf(bias + (bias + z_level) / denom);
    if !(adjusted > T::zero()) {
        return Ok(BcaBound {
            value: percentile(&means)?,
            fallback: true,
        });
    }
    Ok(BcaBound {
        value: empirical_quantile(&means, adjusted.min(T::one()))?,
        fallback: false,
    })
}

#[allow(dead_code)]
fn sort_for_tests<T: Real>(values: &mut [T]) {
    values.sort_unstable_by(|a, b| a.partial_cmp(b).unwrap_or(Ordering::Equal));
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ordered(values: &[f64]) -> OrderedSample<f64> {
        OrderedSample::from_unsorted(values).unwrap()
    }

    #[test]
    fn sample_stats_basics() {
        let s = SampleStats::from_sample(&[0.1, 0.5, 0.9]).unwrap();
        assert!((s.mean - 0.5).abs() < 1e-15);
        assert!((s.variance - 0.16).abs() < 1e-15);
        let constant = SampleStats::from_sample(&[0.3, 0.3, 0.3]).unwrap();
        assert_eq!(constant.variance, 0.0);
        let single = SampleStats::from_sample(&[0.7]).unwrap();
        assert_eq!(single.variance, 0.0);
        assert!(SampleStats::<f64>::from_sample(&[]).is_err());
    }

    #[test]
    fn hoeffding_formula() {
        let x = [0.25, 0.75, 0.5, 0.5, 0.25, 0.75, 0.25, 0.75]; // mean 0.5, n 8
        assert!((hoeffding_upper(&x, 1.0).unwrap() - 0.5).abs() < 1e-15);
        let got = hoeffding_upper(&x, 0.05).unwrap();
        let want = 0.5 + (20.0f64.ln() / 16.0).sqrt();
        assert!((got - want).abs() < 1e-14);
        assert!(hoeffding_upper(&x, 0.0).is_err());
        assert!(hoeffding_upper(&x, 1.5).is_err());

        // quadrupling n halves the slack at fixed mean
        let x4: Vec<f64> = x.iter().cycle().take(32).copied().collect();
        let slack_n = hoeffding_upper(&x, 0.05).unwrap() - 0.5;
        let slack_4n = hoeffding_upper(&x4, 0.05).unwrap() - 0.5;
        assert!((slack_n - 2.0 * slack_4n).abs() < 1e-14);
    }

    #[test]
    fn tightened_hoeffding() {
        let z0 = ordered(&[0.0, 0.4, 0.8]);
        assert_eq!(
            hoeffding_upper_tightened(&z0, 0.05).unwrap(),
            hoeffding_upper(z0.values(), 0.05).unwrap()
        );
        let ones = ordered(&[1.0, 1.0]);
        assert_eq!(hoeffding_upper_tightened(&ones, 0.05).unwrap(), 1.0);
        let z = ordered(&[0.3, 0.6, 0.9]);
        assert!(
            hoeffding_upper_tightened(&z, 0.05).unwrap()
                < hoeffding_upper(z.values(), 0.05).unwrap()
        );
        assert!(hoeffding_upper_tightened(&z, 0.6).is_err());
    }

    #[test]
    fn maurer_pontil_formula() {
        let constant = [0.4; 6];
        let got = maurer_pontil_upper(&constant, 0.05).unwrap();
        assert!((got - (0.4 + 7.0 * 40.0f64.ln() / 15.0)).abs() < 1e-14);

        // mean 0.5, unbiased variance 5/18, n 10
        let x = [0.0, 1.0, 0.0, 1.0, 0.0, 1.0, 0.0, 1.0, 0.0, 1.0];
        let s = SampleStats::from_sample(&x).unwrap();
        assert!((s.variance - 5.0 / 18.0).abs() < 1e-15);
        let got = maurer_pontil_upper(&x, 0.05).unwrap();
        let ln40 = 40.0f64.ln();
        let want = 0.5 + (2.0 * (5.0 / 18.0) * ln40 / 10.0).sqrt() + 7.0 * ln40 / 27.0;
        assert!((got - want).abs() < 1e-14);

        // boundary alpha = 2: both log terms vanish
        assert!((maurer_pontil_upper(&x, 2.0).unwrap() - 0.5).abs() < 1e-15);
        assert!(maurer_pontil_upper(&[0.5], 0.05).is_err());
        assert!(maurer_pontil_upper(&x, 2.5).is_err());
    }

    #[test]
    fn dkw_envelope_cases() {
        let env = dkw_envelope::<f64>(4, 0.05).unwrap();
        let slack = (20.0f64.ln() / 8.0).sqrt();
        assert!(slack > 0.5); // first two entries clamp at zero
        assert_eq!(env.values()[0], 0.0);
        assert_eq!(env.values()[1], 0.0);
        assert!((env.values()[2] - (0.75 - slack)).abs() < 1e-15);
        assert!((env.values()[3] - (1.0 - slack)).abs() < 1e-15);

        let single = dkw_envelope::<f64>(1, 0.05).unwrap();
        assert_eq!(single.values(), &[0.0]);

        // slack vanishes as n grows
        let big = dkw_envelope::<f64>(200_000, 0.5).unwrap();
        for (i, &u) in big.values().iter().enumerate() {
            let target = (i + 1) as f64 / 200_000.0;
            assert!((u - target).abs() < 0.002);
        }

        assert!(dkw_envelope::<f64>(4, 0.6).is_err());
        assert!(dkw_envelope::<f64>(0, 0.05).is_err());
    }

    #[test]
    fn anderson_cases() {
        let ones = ordered(&[1.0, 1.0, 1.0]);
        assert_eq!(anderson_upper(&ones, 0.05).unwrap(), 1.0);
        // n = 1: envelope [0] makes the bound vacuous
        let single = ordered(&[0.42]);
        assert_eq!(anderson_upper(&single, 0.05).unwrap(), 1.0);

        let mut rng = CounterRng::new(31);
        for _ in 0..200 {
            let n = 1 + rng.next_index(12);
            let x: Vec<f64> = (0..n).map(|_| rng.next_unit()).collect();
            let z = ordered(&x);
            for alpha in [0.01, 0.25, 0.5] {
                let anderson = anderson_upper(&z, alpha).unwrap();
                let hoeffding = hoeffding_upper(&x, alpha).unwrap();
                let tightened = hoeffding_upper_tightened(&z, alpha).unwrap();
                assert!(anderson < hoeffding, "anderson {anderson} !< {hoeffding}");
                assert!(anderson <= tightened + 1e-12);
                assert!(tightened <= hoeffding + 1e-12);
            }
        }
        assert!(anderson_upper(&ones, 0.7).is_err());
    }

    #[test]
    fn student_t_cases() {
        let constant = [0.4; 5];
        assert_eq!(student_t_upper(&constant, 0.05).unwrap(), 0.4);
        let x = [0.0, 1.0, 0.2, 0.8, 0.5];
        let mean = SampleStats::from_sample(&x).unwrap().mean;
        assert!((student_t_upper(&x, 0.5).unwrap() - mean).abs() < 1e-12);

        // mean 0.5, variance 5/18, n 10, frozen t_{0.95, 9}
        let alt = [0.0, 1.0, 0.0, 1.0, 0.0, 1.0, 0.0, 1.0, 0.0, 1.0];
        let got = student_t_upper(&alt, 0.05).unwrap();
        let want = 0.5 + (5.0f64 / 180.0).sqrt() * 1.833112932656237168685;
        assert!((got - want).abs() < 1e-10);
        assert!(student_t_upper(&[0.5], 0.05).is_err());
    }

    #[test]
    fn percentile_bootstrap_cases() {
        let cfg = BootstrapConfig {
            resamples: 500,
            seed: 1,
        };
        let constant = [0.6; 4];
        assert_eq!(percentile_bootstrap_upper(&constant, 0.05, &cfg).unwrap(), 0.6);

        let x = [0.1, 0.9, 0.4, 0.7];
        let near_zero_alpha = percentile_bootstrap_upper(&x, 1e-9, &cfg).unwrap();
        assert!(near_zero_alpha <= 0.9 + 1e-15);

        let value = percentile_bootstrap_upper(&x, 0.05, &cfg).unwrap();
        assert!(value >= 0.1 && value <= 0.9);
        assert!(percentile_bootstrap_upper(&x, 0.05, &BootstrapConfig { resamples: 0, seed: 0 })
            .is_err());
    }

    #[test]
    fn percentile_bootstrap_matches_enumeration() {
        // n = 4 data; all 4^4 equally likely resamples enumerated exactly
        let x = [0.0, 0.0, 1.0, 0.5];
        let n = x.len();
        let alpha = 0.05f64;
        let mut means: Vec<f64> = Vec::with_capacity(256);
        for code in 0..n.pow(4) {
            let mut c = code;
            let mut acc = 0.0;
            for _ in 0..4 {
                acc += x[c % n];
                c /= n;
            }
            means.push(acc / 4.0);
        }
        sort_for_tests(&mut means);
        let exact_cdf = |q: f64| means.iter().filter(|&&m| m <= q).count() as f64 / 256.0;
        let exact_cdf_strict = |q: f64| means.iter().filter(|&&m| m < q).count() as f64 / 256.0;

        let resamples = 40_000usize;
        let cfg = BootstrapConfig { resamples, seed: 5 };
        let got = percentile_bootstrap_upper(&x, alpha, &cfg).unwrap();
        let sigma = (alpha * (1.0 - alpha) / resamples as f64).sqrt();
        assert!(
            exact_cdf(got) >= 1.0 - alpha - 3.0 * sigma,
            "cdf at estimate too small: {}",
            exact_cdf(got)
        );
        assert!(
            exact_cdf_strict(got) <= 1.0 - alpha + 3.0 * sigma,
            "strict cdf at estimate too large: {}",
            exact_cdf_strict(got)
        );
    }

    #[test]
    fn bca_constant_sample_falls_back() {
        let cfg = BootstrapConfig {
            resamples: 400,
            seed: 2,
        };
        let res = bca_upper(&[0.3; 5], 0.05, &cfg).unwrap();
        assert!(res.fallback);
        assert_eq!(res.value, 0.3);
        assert!(bca_upper(&[0.3], 0.05, &cfg).is_err());
    }

    #[test]
    fn jackknife_acceleration_cases() {
        // symmetric sample: zero jackknife skewness
        let a = jackknife_acceleration(&[0.1, 0.3, 0.5, 0.7, 0.9]).unwrap();
        assert!(a.abs() < 1e-14);
        // skewed sample: strictly positive skew pushes a away from zero
        let b = jackknife_acceleration(&[0.0, 0.0, 0.1, 0.9]).unwrap();
        assert!(b.abs() > 1e-3);
        assert!(jackknife_acceleration(&[0.4, 0.4, 0.4]).is_none());
    }

    #[test]
    fn bca_matches_literal_transcription() {
        // Independent straight-line transcription of the BCa recipe, with
        // its own normal CDF (Simpson quadrature) and inverse (bisection).
        fn phi_oracle(x: f64) -> f64 {
            let steps = 20_000usize;
            let lo = -12.0f64.min(x);
            let h = (x - lo) / steps as f64;
            let dens =
                |t: f64| (-t * t / 2.0).exp() / (2.0 * std::f64::consts::PI).sqrt();
            let mut acc = dens(lo) + dens(x);
            for i in 1..steps {
                acc += if i % 2 == 1 { 4.0 } else { 2.0 } * dens(lo + i as f64 * h);
            }
            acc * h / 3.0
        }
        fn phi_inv_oracle(p: f64) -> f64 {
            let (mut lo, mut hi) = (-12.0f64, 12.0f64);
            for _ in 0..80 {
                let mid = 0.5 * (lo + hi);
                if phi_oracle(mid) < p {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            0.5 * (lo + hi)
        }

        let x = [0.1, 0.15, 0.6, 0.8, 0.35, 0.2];
        let alpha = 0.1f64;
        let cfg = BootstrapConfig {
            resamples: 999,
            seed: 77,
        };
        let got = bca_upper(&x, alpha, &cfg).unwrap();
        assert!(!got.fallback);

        let means = resample_means(&x, &cfg);
        let n = x.len() as f64;
        let mean = x.iter().sum::<f64>() / n;
        let frac = means.iter().filter(|&&m| m < mean).count() as f64 / means.len() as f64;
        let z0 = phi_inv_oracle(frac);
        let total: f64 = x.iter().sum();
        let loo: Vec<f64> = x.iter().map(|&v| (total - v) / (n - 1.0)).collect();
        let loo_mean = loo.iter().sum::<f64>() / n;
        let d2: f64 = loo.iter().map(|&t| (loo_mean - t).powi(2)).sum();
        let d3: f64 = loo.iter().map(|&t| (loo_mean - t).powi(3)).sum();
        let a = d3 / (6.0 * d2.powf(1.5));
        let z1 = phi_inv_oracle(1.0 - alpha);
        let level = phi_oracle(z0 + (z0 + z1) / (1.0 - a * (z0 + z1)));
        let mut sorted = means;
        sort_for_tests(&mut sorted);
        let idx = (level * sorted.len() as f64).ceil() as usize;
        let want = sorted[idx.clamp(1, sorted.len()) - 1];

        assert_eq!(got.value, want, "BCa disagrees with the transcription");
    }

    #[test]
    fn bootstraps_stay_within_sample_range() {
        let mut rng = CounterRng::new(41);
        for seed in 0..20u64 {
            let n = 2 + rng.next_index(10);
            let x: Vec<f64> = (0..n).map(|_| rng.next_unit()).collect();
            let lo = x.iter().cloned().fold(f64::INFINITY, f64::min);
            let hi = x.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
            let cfg = BootstrapConfig {
                resamples: 300,
                seed,
            };
            let p = percentile_bootstrap_upper(&x, 0.1, &cfg).unwrap();
            let b = bca_upper(&x, 0.1, &cfg).unwrap().value;
            assert!(p >= lo && p <= hi);
            assert!(b >= lo && b <= hi);
        }
    }

    #[test]
    fn all_equal_samples_bound_from_above() {
        let c = 0.35f64;
        let x = [c; 6];
        let z = ordered(&x);
        let cfg = BootstrapConfig::default();
        assert!(hoeffding_upper(&x, 0.05).unwrap() >= c);
        assert!(hoeffding_upper_tightened(&z, 0.05).unwrap() >= c);
        assert!(maurer_pontil_upper(&x, 0.05).unwrap() >= c);
        assert!(anderson_upper(&z, 0.05).unwrap() >= c);
        assert!(student_t_upper(&x, 0.05).unwrap() >= c);
        assert!(percentile_bootstrap_upper(&x, 0.05, &cfg).unwrap() >= c);
        assert!(bca_upper(&x, 0.05, &cfg).unwrap().value >= c);
    }
}
