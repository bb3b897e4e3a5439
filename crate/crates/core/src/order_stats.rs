//! Ordered samples, spacings, induced means, and the conservative
//! stairstep CDF.
//!
//! An [`OrderedSample`] `z` paired with a [`SortedUniformVector`] `u` forms
//! `n` ordered CDF pairs `(z_i, u_i)`. The stairstep CDF through those pairs
//! that pushes mass as far right as possible is the *conservative
//! completion*; its mean is the *induced mean* `m(z, u) = 1 - sum u_i
//! (z_{i+1} - z_i)` with the sentinel `z_{n+1} = 1`.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::num::{real, to_f64, Real};
use crate::rng::CounterRng;

fn check_unit_interval<T: Real>(values: &[T]) -> Result<()> {
    if values.is_empty() {
        return Err(Error::EmptySample);
    }
    for &v in values {
        if !(v >= T::zero() && v <= T::one()) {
            return Err(Error::OutOfUnitInterval(to_f64(v)));
        }
    }
    Ok(())
}

fn check_ascending<T: Real>(values: &[T]) -> Result<()> {
    for i in 1..values.len() {
        if values[i] < values[i - 1] {
            return Err(Error::NotSorted(i));
        }
    }
    Ok(())
}

/// A sample sorted ascending with every value in `[0, 1]`.
///
/// The sentinel `z_{n+1} = 1` is implied by all spacing computations,
/// never stored. Ties are allowed.
#[derive(Debug, Clone, PartialEq)]
pub struct OrderedSample<T> {
    values: Vec<T>,
}

impl<T: Real> OrderedSample<T> {
    /// Sorts `x` ascending (the order-statistics operation).
    pub fn from_unsorted(x: &[T]) -> Result<Self> {
        check_unit_interval(x)?;
        let mut values = x.to_vec();
        values.sort_unstable_by(|a, b| a.partial_cmp(b).unwrap_or(Ordering::Equal));
        Ok(Self { values })
    }

    /// Wraps an already-sorted vector, validating order and range.
    pub fn from_sorted(values: Vec<T>) -> Result<Self> {
        check_unit_interval(&values)?;
        check_ascending(&values)?;
        Ok(Self { values })
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        false // n >= 1 by construction
    }

    /// Smallest observation `z_1`.
    pub fn min(&self) -> T {
        self.values[0]
    }

    /// Successive differences `s_i = z_{i+1} - z_i` with `z_{n+1} = 1`.
    pub fn spacings(&self) -> Spacings<T> {
        let n = self.values.len();
        let mut s = Vec::with_capacity(n);
        for i in 0..n - 1 {
            s.push(self.values[i + 1] - self.values[i]);
        }
        s.push(T::one() - self.values[n - 1]);
        Spacings { values: s }
    }

    /// The sample `sort(1 - z_i)`, used for lower bounds by reflection.
    pub fn reflected(&self) -> Self {
        let mut values: Vec<T> = self.values.iter().map(|&z| T::one() - z).collect();
        values.reverse(); // 1 - z reverses the order, so this restores ascending
        Self { values }
    }
}

/// Order statistics of `n` uniform draws on `[0, 1]`.
#[derive(Debug, Clone, PartialEq)]
pub struct SortedUniformVector<T> {
    values: Vec<T>,
}

impl<T: Real> SortedUniformVector<T> {
    pub fn from_sorted(values: Vec<T>) -> Result<Self> {
        check_unit_interval(&values)?;
        check_ascending(&values)?;
        Ok(Self { values })
    }

    /// Draws `n` uniforms from `rng` and sorts them.
    pub fn sample(n: usize, rng: &mut CounterRng) -> Self {
        let mut values: Vec<T> = (0..n).map(|_| rng.next_unit()).collect();
        values.sort_unstable_by(|a, b| a.partial_cmp(b).unwrap_or(Ordering::Equal));
        Self { values }
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// Spacings of an ordered sample: `s_i >= 0`, `sum s_i = 1 - z_1`.
#[derive(Debug, Clone, PartialEq)]
pub struct Spacings<T> {
    values: Vec<T>,
}

impl<T: Real> Spacings<T> {
    pub fn values(&self) -> &[T] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Dot product with sorted values `u`, i.e. `sum u_i s_i`.
    pub fn dot(&self, u: &[T]) -> T {
        debug_assert_eq!(u.len(), self.values.len());
        let mut acc = T::zero();
        for (&ui, &si) in u.iter().zip(&self.values) {
            acc += ui * si;
        }
        acc
    }
}

/// Induced mean `m(z, u) = 1 - sum u_i (z_{i+1} - z_i)`, the mean of the
/// conservative completion of the ordered CDF pairs (vertical strips).
pub fn induced_mean<T: Real>(z: &OrderedSample<T>, u: &SortedUniformVector<T>) -> Result<T> {
    if z.len() != u.len() {
        return Err(Error::LengthMismatch(z.len(), u.len()));
    }
    Ok(T::one() - z.spacings().dot(u.values()))
}

/// The same induced mean accumulated over horizontal strips:
/// `sum_{i=1}^{n+1} z_i (u_i - u_{i-1})` with `u_0 = 0`, `u_{n+1} = 1`,
/// `z_{n+1} = 1`. Kept as an independent algebraic route; the two forms agree
/// to roundoff.
pub fn induced_mean_horizontal<T: Real>(
    z: &OrderedSample<T>,
    u: &SortedUniformVector<T>,
) -> Result<T> {
    if z.len() != u.len() {
        return Err(Error::LengthMismatch(z.len(), u.len()));
    }
    let zs = z.values();
    let us = u.values();
    let mut acc = T::zero();
    let mut u_prev = T::zero();
    for (&zi, &ui) in zs.iter().zip(us) {
        acc += zi * (ui - u_prev);
        u_prev = ui;
    }
    acc += T::one() - u_prev; // z_{n+1} = 1, u_{n+1} = 1
    Ok(acc)
}

/// Conservative completion CDF evaluated at `t`:
/// 0 below `z_1`, `u_i` on `[z_i, z_{i+1})`, and 1 at `t >= 1`.
/// Right-continuous; with tied `z` values the largest matching `u_i` applies.
pub fn conservative_cdf<T: Real>(
    z: &OrderedSample<T>,
    u: &SortedUniformVector<T>,
    t: T,
) -> Result<T> {
    if z.len() != u.len() {
        return Err(Error::LengthMismatch(z.len(), u.len()));
    }
    if !(t >= T::zero() && t <= T::one()) {
        return Err(Error::OutOfRange {
            name: "t",
            value: to_f64(t),
            range: "[0, 1]",
        });
    }
    if t >= T::one() {
        return Ok(T::one());
    }
    // number of z_i <= t
    let idx = z.values().partition_point(|&zi| zi <= t);
    if idx == 0 {
        Ok(T::zero())
    } else {
        Ok(u.values()[idx - 1])
    }
}

/// One-based order-statistic index `ceil(level * l)` clamped to `[1, l]`,
/// with a relative guard against floating-point roundoff when `level * l`
/// is an exact integer mathematically.
pub(crate) fn quantile_index<T: Real>(level: T, l: usize) -> usize {
    let scaled = level * real::<T>(l as f64);
    let rounded = scaled.round();
    let eps = real::<T>(1e-9) + scaled.abs() * real::<T>(1e-12);
    let k = if (scaled - rounded).abs() <= eps {
        rounded
    } else {
        scaled.ceil()
    };
    let k = k.to_usize().unwrap_or(1);
    k.clamp(1, l)
}

/// The `ceil(level * l)`-th smallest of `values` (one-based), the
/// order-statistic quantile convention used throughout this crate.
/// `level = 1` returns the maximum; `level <= 0` or `level > 1` is an error.
pub fn empirical_quantile<T: Real>(values: &[T], level: T) -> Result<T> {
    if values.is_empty() {
        return Err(Error::EmptySample);
    }
    if !(level > T::zero() && level <= T::one()) {
        return Err(Error::OutOfRange {
            name: "level",
            value: to_f64(level),
            range: "(0, 1]",
        });
    }
    let mut sorted = values.to_vec();
    sorted.sort_unstable_by(|a, b| a.partial_cmp(b).unwrap_or(Ordering::Equal));
    Ok(sorted[quantile_index(level, sorted.len()) - 1])
}
