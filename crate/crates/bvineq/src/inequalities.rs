//! Both-sides evaluators for the mean-vs-norm inequalities on a compact
//! interval.
//!
//! Forward direction: the integral mean is dominated by the sup- or Lp-norm.
//! Reverse direction: the norm is dominated by the integral mean plus a
//! total-variation term whose coefficient is sharp. The pointwise version is
//! the Ostrowski-type bound with kernel `1/2 + |x - (a+b)/2| / (b-a)`, and
//! the Lp reverse inequality's coefficient is exactly the p-norm of that
//! kernel.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::piecewise::{Interval, PiecewiseFunction};
use crate::report::BoundReport;
use crate::scalar::{as_f64, real, Real};

/// Number of uniform sample points in an Ostrowski x-sweep (breakpoints are
/// added on top; the kernel is piecewise affine in x, so extrema sit on the
/// grid).
pub const OSTROWSKI_SWEEP_POINTS: usize = 257;

fn check_p<T: Real>(p: T) -> Result<()> {
    if p.is_finite() && p >= T::one() {
        Ok(())
    } else {
        Err(Error::InvalidExponent { p: as_f64(p) })
    }
}

/// `q(p) = (2^{p+1} - 1)^{1/p} / (p+1)^{1/p}`, evaluated in log space so
/// large `p` neither overflows nor loses the `-1`. Tends to 2 as `p → ∞`.
pub fn kernel_pnorm_factor<T: Real>(p: T) -> Result<T> {
    check_p(p)?;
    let two = real::<T>(2.0);
    let p1 = p + T::one();
    // ln(2^{p+1} - 1) = (p+1) ln 2 + ln(1 - 2^{-(p+1)})
    let ln_num = p1 * two.ln() + (-(two.powf(-p1))).ln_1p();
    Ok(((ln_num - p1.ln()) / p).exp())
}

/// Midpoint kernel `K(x) = 1/2 + |x - (a+b)/2| / (b - a)`.
pub fn midpoint_kernel<T: Real>(iv: &Interval<T>, x: T) -> T {
    real::<T>(0.5) + (x - iv.midpoint()).abs() / iv.width()
}

/// Closed-form p-norm of the midpoint kernel:
/// `(b-a)^{1/p} (2^{p+1}-1)^{1/p} / (2 (p+1)^{1/p})`.
pub fn midpoint_kernel_pnorm<T: Real>(iv: &Interval<T>, p: T) -> Result<T> {
    Ok(iv.width().powf(T::one() / p) * kernel_pnorm_factor(p)? * real::<T>(0.5))
}

/// `|∫f| / (b-a) <= sup |f|`.
pub fn baseline_mean_sup<T: Real>(f: &PiecewiseFunction<T>) -> BoundReport<T> {
    let lhs = f.integral().abs() / f.interval().width();
    BoundReport::new(
        "baseline_mean_sup",
        lhs,
        f.sup_norm(),
        BTreeMap::new(),
        f.digest(),
    )
}

/// `|∫f| / (b-a)^{1-1/p} <= ||f||_p`.
pub fn baseline_mean_lp<T: Real>(f: &PiecewiseFunction<T>, p: T) -> Result<BoundReport<T>> {
    check_p(p)?;
    let w = f.interval().width();
    let lhs = f.integral().abs() / w.powf(T::one() - T::one() / p);
    let mut params = BTreeMap::new();
    params.insert("p".to_string(), p);
    Ok(BoundReport::new(
        "baseline_mean_lp",
        lhs,
        f.lp_norm(p)?,
        params,
        f.digest(),
    ))
}

/// Pointwise Ostrowski bound: `|f(x) - mean(f)| <= K(x) · TV(f)`.
pub fn ostrowski_pointwise<T: Real>(f: &PiecewiseFunction<T>, x: T) -> Result<BoundReport<T>> {
    let iv = f.interval();
    let mean = f.integral() / iv.width();
    let lhs = (f.evaluate(x)? - mean).abs();
    let rhs = midpoint_kernel(&iv, x) * f.total_variation();
    let mut params = BTreeMap::new();
    params.insert("x".to_string(), x);
    Ok(BoundReport::new(
        "ostrowski_pointwise",
        lhs,
        rhs,
        params,
        f.digest(),
    ))
}

/// Ostrowski sweep over `breakpoints ∪ OSTROWSKI_SWEEP_POINTS uniform points`,
/// with the mean, variation and digest hoisted out of the per-point loop.
pub fn ostrowski_sweep<T: Real>(f: &PiecewiseFunction<T>) -> Vec<BoundReport<T>> {
    let iv = f.interval();
    let mean = f.integral() / iv.width();
    let tv = f.total_variation();
    let digest = f.digest();
    let mut grid: Vec<T> = (0..OSTROWSKI_SWEEP_POINTS)
        .map(|i| {
            let frac = real::<T>(i as f64 / (OSTROWSKI_SWEEP_POINTS - 1) as f64);
            // rounding may push a + frac·w past b
            (iv.a() + frac * iv.width()).clamp(iv.a(), iv.b())
        })
        .collect();
    grid.extend_from_slice(f.breakpoints());
    grid.sort_by(|a, b| a.partial_cmp(b).expect("finite grid"));
    grid.dedup();
    grid.into_iter()
        .map(|x| {
            let lhs = (f.evaluate(x).expect("grid point inside interval") - mean).abs();
            let rhs = midpoint_kernel(&iv, x) * tv;
            let mut params = BTreeMap::new();
            params.insert("x".to_string(), x);
            BoundReport::new("ostrowski_pointwise", lhs, rhs, params, digest.clone())
        })
        .collect()
}

/// Reverse sup-norm bound: `sup |f| <= |∫f|/(b-a) + TV(f)`; the coefficient
/// `1` of the variation term is sharp.
pub fn reverse_sup<T: Real>(f: &PiecewiseFunction<T>) -> BoundReport<T> {
    let lhs = f.sup_norm();
    let rhs = f.integral().abs() / f.interval().width() + f.total_variation();
    BoundReport::new("reverse_sup", lhs, rhs, BTreeMap::new(), f.digest())
}

/// Reverse Lp bound:
/// `||f||_p <= |∫f|/(b-a)^{1-1/p} + I_p · TV(f)` with `I_p` the kernel
/// p-norm; the `1/2` hidden in `I_p` is sharp.
pub fn reverse_lp<T: Real>(f: &PiecewiseFunction<T>, p: T) -> Result<BoundReport<T>> {
    check_p(p)?;
    let iv = f.interval();
    let mean_term = f.integral().abs() / iv.width().powf(T::one() - T::one() / p);
    let rhs = mean_term + midpoint_kernel_pnorm(&iv, p)? * f.total_variation();
    let mut params = BTreeMap::new();
    params.insert("p".to_string(), p);
    Ok(BoundReport::new(
        "reverse_lp",
        f.lp_norm(p)?,
        rhs,
        params,
        f.digest(),
    ))
}
