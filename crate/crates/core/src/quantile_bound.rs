//! The quantile bound on the mean of a `[0, 1]`-valued random variable.
//!
//! For a sorted sample `z`, the bound is the `(1 - alpha)`-quantile of the
//! induced mean `m(z, U)` taken over random sorted-uniform vectors `U`. Two
//! estimators are provided: Monte Carlo sampling of `U`, and an exact
//! geometric evaluation that reads the CDF of `m(z, U)` off sections of the
//! order-statistic simplex. A lower bound follows by reflecting the sample,
//! and a two-sided interval splits `alpha` across the two sides.

use std::cmp::Ordering;

use rayon::prelude::*;
use serde::Serialize;

use crate::confidence::require_alpha_open;
use crate::error::{Error, Result};
use crate::methods::Method;
use crate::num::{real, to_f64, Real};
use crate::order_stats::{quantile_index, OrderedSample, Spacings};
use crate::rng::CounterRng;

/// Default Monte Carlo repetition count, a reasonable choice for
/// `alpha` around 0.05. Smaller `alpha` needs more repetitions
/// (roughly `200 / alpha`).
pub const DEFAULT_MC_SAMPLES: usize = 10_000;
/// Default bisection tolerance of the exact estimator.
pub const DEFAULT_EXACT_TOL: f64 = 1e-10;

const MAX_BISECT_ITER: usize = 200;

/// Monte Carlo estimator configuration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct McConfig {
    /// Number of Monte Carlo repetitions.
    pub samples: usize,
    /// Base seed; repetition `i` draws from stream `(seed, i)`.
    pub seed: u64,
}

impl Default for McConfig {
    fn default() -> Self {
        Self {
            samples: DEFAULT_MC_SAMPLES,
            seed: 0,
        }
    }
}

/// Method-specific details attached to a [`BoundResult`].
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Diagnostics<T> {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mc_samples: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    /// Standard error of the Monte Carlo quantile estimate, from a
    /// finite-difference density estimate at the quantile. Reported, never
    /// added to the bound.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mc_std_error: Option<T>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bootstrap_resamples: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bootstrap_fallback: Option<bool>,
}

impl<T> Default for Diagnostics<T> {
    fn default() -> Self {
        Self {
            mc_samples: None,
            seed: None,
            mc_std_error: None,
            bootstrap_resamples: None,
            bootstrap_fallback: None,
        }
    }
}

/// A computed bound with its context.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundResult<T> {
    pub value: T,
    pub method: Method,
    pub alpha: T,
    pub n: usize,
    pub diagnostics: Diagnostics<T>,
}

impl<T: Real> BoundResult<T> {
    /// The bound clamped to `[0, 1]`; raw Hoeffding-style values can
    /// exceed 1, which makes them vacuous for `[0, 1]` variables.
    pub fn value_clamped(&self) -> T {
        self.value.max(T::zero()).min(T::one())
    }
}

fn sort_scalars<T: Real>(values: &mut [T]) {
    values.sort_unstable_by(|a, b| a.partial_cmp(b).unwrap_or(Ordering::Equal));
}

/// Draws `cfg.samples` induced means `1 - u . s`, one sorted-uniform vector
/// per repetition, each from its own counter stream. Returns them sorted.
pub(crate) fn sorted_induced_mean_draws<T: Real>(s: &Spacings<T>, cfg: &McConfig) -> Vec<T> {
    let n = s.len();
    let mut ms: Vec<T> = (0..cfg.samples)
        .into_par_iter()
        .map_init(
            || Vec::with_capacity(n),
            |buf, i| {
                let mut rng = CounterRng::stream(cfg.seed, i as u64);
                buf.clear();
                for _ in 0..n {
                    buf.push(rng.next_unit::<T>());
                }
                sort_scalars(buf);
                T::one() - s.dot(buf)
            },
        )
        .collect();
    sort_scalars(&mut ms);
    ms
}

/// Quantile of the sorted draws plus its estimated Monte Carlo standard
/// error `sqrt(level * alpha * l) * (ms[k+h] - ms[k-h]) / (2h)`.
pub(crate) fn mc_quantile_with_error<T: Real>(ms: &[T], alpha: T) -> (T, T) {
    let l = ms.len();
    let level = T::one() - alpha;
    let k = quantile_index(level, l);
    let value = ms[k - 1];
    let h = ((l as f64).sqrt().round() as usize).max(1);
    let k_lo = k.saturating_sub(h).max(1);
    let k_hi = (k + h).min(l);
    let se = if k_hi > k_lo {
        (level * alpha * real::<T>(l as f64)).sqrt() * (ms[k_hi - 1] - ms[k_lo - 1])
            / real::<T>((k_hi - k_lo) as f64)
    } else {
        T::zero()
    };
    (value, se)
}

/// Monte Carlo estimate of the upper bound: sort the sample, form spacings
/// with the sentinel `z_{n+1} = 1`, draw `l` sorted-uniform vectors, take
/// the `ceil((1 - alpha) l)`-th smallest induced mean. Deterministic given
/// `(x, alpha, cfg)` regardless of thread count.
pub fn mc_upper_bound<T: Real>(x: &[T], alpha: T, cfg: &McConfig) -> Result<BoundResult<T>> {
    require_alpha_open(alpha)?;
    if cfg.samples == 0 {
        return Err(Error::OutOfRange {
            name: "mc samples",
            value: 0.0,
            range: ">= 1",
        });
    }
    let z = OrderedSample::from_unsorted(x)?;
    let ms = sorted_induced_mean_draws(&z.spacings(), cfg);
    let (value, se) = mc_quantile_with_error(&ms, alpha);
    Ok(BoundResult {
        value: value.max(T::zero()).min(T::one()),
        method: Method::QuantileMc,
        alpha,
        n: z.len(),
        diagnostics: Diagnostics {
            mc_samples: Some(cfg.samples),
            seed: Some(cfg.seed),
            mc_std_error: Some(se),
            ..Diagnostics::default()
        },
    })
}

/// Fraction of the order-statistic simplex on which `sum c_i v_i >= t`,
/// in the spacing coordinates `v_i = u_i - u_{i-1}` (so `v >= 0`,
/// `sum v_i <= 1`), with coefficients `c_i` in `[0, 1]`.
///
/// Uses Varsi's recursion on the vertex values of the affine form: every
/// intermediate is a convex combination, so the result is exact to roundoff
/// and repeated coefficients need no special handling. `t <= 0` gives 1,
/// `t` above every coefficient gives 0. O(n^2).
pub fn simplex_upper_fraction<T: Real>(coeffs: &[T], t: T) -> T {
    // Vertex values of (sum c_i v_i) - t over the barycentric simplex:
    // c_i - t at the coordinate vertices and -t at the origin vertex.
    // `sat` holds values above the hyperplane, `unsat` the rest (negated).
    let mut sat: Vec<T> = Vec::with_capacity(coeffs.len() + 1);
    let mut unsat: Vec<T> = Vec::with_capacity(coeffs.len() + 1);
    for &c in coeffs.iter().chain(std::iter::once(&T::zero())) {
        if c > t {
            sat.push(c - t);
        } else {
            unsat.push(t - c);
        }
    }
    if sat.is_empty() {
        // no vertex strictly above the threshold: positive volume only if
        // the whole simplex lies on the hyperplane
        return if unsat.iter().all(|g| *g == T::zero()) {
            T::one()
        } else {
            T::zero()
        };
    }
    if unsat.is_empty() {
        return T::one();
    }

    // row[j] = fraction after processing j unsatisfied and k satisfied
    // vertices; row[0] stays 1, and row[j] starts at the k = 0 boundary
    // (1 only while every unsatisfied value so far is exactly on the plane).
    let mut row = vec![T::zero(); unsat.len() + 1];
    row[0] = T::one();
    let mut on_plane = true;
    for (j, &g) in unsat.iter().enumerate() {
        on_plane = on_plane && g == T::zero();
        row[j + 1] = if on_plane { T::one() } else { T::zero() };
    }
    for &d in &sat {
        for j in 1..row.len() {
            let g = unsat[j - 1];
            row[j] = (d * row[j - 1] + g * row[j]) / (d + g);
        }
    }
    row[unsat.len()]
}

/// Exact CDF of the induced mean: `P(m(z, U) <= mu)`, evaluated as the
/// simplex-section fraction at threshold `1 - mu`.
pub fn induced_mean_cdf<T: Real>(z: &OrderedSample<T>, mu: T) -> T {
    let coeffs: Vec<T> = z.values().iter().map(|&zi| T::one() - zi).collect();
    simplex_upper_fraction(&coeffs, T::one() - mu)
}

/// Exact upper bound: the least `mu` (within `tol`) whose simplex-section
/// fraction reaches `1 - alpha`, found by bisection over `[z_1, 1]`.
pub fn exact_upper_bound<T: Real>(
    z: &OrderedSample<T>,
    alpha: T,
    tol: T,
) -> Result<BoundResult<T>> {
    require_alpha_open(alpha)?;
    if !(tol > T::zero()) {
        return Err(Error::OutOfRange {
            name: "tol",
            value: to_f64(tol),
            range: "(0, inf)",
        });
    }
    let level = T::one() - alpha;
    let result = |value: T| BoundResult {
        value: value.max(T::zero()).min(T::one()),
        method: Method::QuantileExact,
        alpha,
        n: z.len(),
        diagnostics: Diagnostics::default(),
    };

    let mut lo = z.min();
    if induced_mean_cdf(z, lo) >= level {
        return Ok(result(lo)); // degenerate: the all-ones sample
    }
    let mut hi = T::one();
    let half = real::<T>(0.5);
    let mut iter = 0;
    while hi - lo > tol {
        iter += 1;
        if iter > MAX_BISECT_ITER {
            return Err(Error::NoConvergence {
                max_iter: MAX_BISECT_ITER,
                tol: to_f64(tol),
            });
        }
        let mid = (lo + hi) * half;
        if mid <= lo || mid >= hi {
            break; // bracket already at roundoff
        }
        if induced_mean_cdf(z, mid) >= level {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(result(hi))
}

/// True iff the exact bound satisfies `m_alpha(z) >= mu`, decided from a
/// single CDF evaluation instead of a full bisection.
pub fn exact_bound_covers<T: Real>(z: &OrderedSample<T>, alpha: T, mu: T) -> Result<bool> {
    require_alpha_open(alpha)?;
    Ok(covers_from_cdf(z, induced_mean_cdf(z, mu), alpha))
}

/// Coverage decision given a precomputed `F(mu) = P(m(z, U) <= mu)`.
///
/// For non-degenerate samples `m(z, U)` is continuous, so the bound reaches
/// `mu` exactly when `F(mu) <= 1 - alpha`. The all-ones sample has
/// `m(z, U) = 1` identically and always covers.
pub(crate) fn covers_from_cdf<T: Real>(z: &OrderedSample<T>, cdf_at_mu: T, alpha: T) -> bool {
    if z.min() == T::one() {
        return true;
    }
    cdf_at_mu <= T::one() - alpha
}

/// Which estimator evaluates the quantile bound.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Estimator<T> {
    MonteCarlo(McConfig),
    Exact { tol: T },
}

impl<T: Real> Estimator<T> {
    pub fn exact_default() -> Self {
        Estimator::Exact {
            tol: real(DEFAULT_EXACT_TOL),
        }
    }

    pub fn upper(&self, x: &[T], alpha: T) -> Result<BoundResult<T>> {
        match self {
            Estimator::MonteCarlo(cfg) => mc_upper_bound(x, alpha, cfg),
            Estimator::Exact { tol } => {
                exact_upper_bound(&OrderedSample::from_unsorted(x)?, alpha, *tol)
            }
        }
    }

    pub fn lower(&self, x: &[T], alpha: T) -> Result<BoundResult<T>> {
        lower_bound(x, alpha, self)
    }
}

/// Lower bound by reflection: `1 - m_alpha` of the sample `1 - x`, using the
/// same estimator family as the upper bound.
pub fn lower_bound<T: Real>(x: &[T], alpha: T, estimator: &Estimator<T>) -> Result<BoundResult<T>> {
    let reflected: Vec<T> = x.iter().map(|&v| T::one() - v).collect();
    let mut result = estimator.upper(&reflected, alpha)?;
    result.value = (T::one() - result.value).max(T::zero()).min(T::one());
    Ok(result)
}

/// Two-sided interval at total failure rate `alpha`, split `alpha / 2` per
/// side (a convention; the one-sided construction does not dictate a split).
pub fn two_sided_interval<T: Real>(
    x: &[T],
    alpha: T,
    estimator: &Estimator<T>,
) -> Result<(T, T)> {
    require_alpha_open(alpha)?;
    let per_side = alpha * real::<T>(0.5);
    let upper = estimator.upper(x, per_side)?.value;
    let lower = lower_bound(x, per_side, estimator)?.value;
    Ok((lower.min(upper), upper))
}
