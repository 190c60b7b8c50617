//! Polynomials of degree at most three.
//!
//! The degree cap keeps every derived quantity closed-form: derivatives are
//! quadratics whose roots come from the stable quadratic formula, so total
//! variation and sup-norms of pieces are exact, and cubic roots can be
//! bracketed between critical points and bisected to machine precision.

use crate::error::{Error, Result};
use crate::scalar::{as_f64, real, Real};

/// Absolute/relative tolerance for deduplicating nearby roots.
pub const ROOT_DEDUP_TOL: f64 = 1e-12;

const BISECT_ITERS: usize = 120;

/// `c0 + c1 t + c2 t^2 + c3 t^3`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Polynomial<T> {
    coeffs: [T; 4],
}

impl<T: Real> Polynomial<T> {
    pub fn new(coeffs: [T; 4]) -> Result<Self> {
        if coeffs.iter().any(|c| !c.is_finite()) {
            return Err(Error::NonFiniteCoefficient);
        }
        Ok(Self { coeffs })
    }

    /// Build from a coefficient slice `[c0, c1, ...]`, padding with zeros.
    pub fn from_slice(coeffs: &[T]) -> Result<Self> {
        if coeffs.len() > 4 {
            return Err(Error::DegreeTooHigh(coeffs.len()));
        }
        let mut c = [T::zero(); 4];
        c[..coeffs.len()].copy_from_slice(coeffs);
        Self::new(c)
    }

    pub fn constant(c0: T) -> Self {
        Self {
            coeffs: [c0, T::zero(), T::zero(), T::zero()],
        }
    }

    pub fn linear(c0: T, c1: T) -> Self {
        Self {
            coeffs: [c0, c1, T::zero(), T::zero()],
        }
    }

    pub fn coeffs(&self) -> [T; 4] {
        self.coeffs
    }

    /// Index of the highest exactly-nonzero coefficient (0 for the zero polynomial).
    pub fn degree(&self) -> usize {
        for k in (0..4).rev() {
            if self.coeffs[k] != T::zero() {
                return k;
            }
        }
        0
    }

    #[inline]
    pub fn eval(&self, t: T) -> T {
        let [c0, c1, c2, c3] = self.coeffs;
        ((c3 * t + c2) * t + c1) * t + c0
    }

    pub fn derivative(&self) -> Polynomial<T> {
        let [_, c1, c2, c3] = self.coeffs;
        let two = real::<T>(2.0);
        let three = real::<T>(3.0);
        Polynomial {
            coeffs: [c1, two * c2, three * c3, T::zero()],
        }
    }

    /// Exact `∫_lo^hi p(t) dt` via the antiderivative.
    pub fn definite_integral(&self, lo: T, hi: T) -> T {
        let [c0, c1, c2, c3] = self.coeffs;
        let half = real::<T>(0.5);
        let third = T::one() / real::<T>(3.0);
        let quarter = real::<T>(0.25);
        let anti = |t: T| (((c3 * quarter * t + c2 * third) * t + c1 * half) * t + c0) * t;
        anti(hi) - anti(lo)
    }

    /// Real roots strictly inside `(lo, hi)`, ascending, deduplicated.
    pub fn real_roots_in(&self, lo: T, hi: T) -> Vec<T> {
        let mut roots = match self.degree() {
            0 => Vec::new(),
            1 => {
                let [c0, c1, ..] = self.coeffs;
                vec![-c0 / c1]
            }
            2 => {
                let [c0, c1, c2, _] = self.coeffs;
                quadratic_roots(c0, c1, c2)
            }
            _ => self.cubic_roots_in(lo, hi),
        };
        roots.retain(|&r| r.is_finite() && r > lo && r < hi);
        roots.sort_by(|a, b| a.partial_cmp(b).expect("finite roots"));
        dedup_close(&mut roots);
        roots
    }

    /// Cubic roots by bisection on the monotone segments delimited by the
    /// critical points; double roots that never change sign are not reported.
    fn cubic_roots_in(&self, lo: T, hi: T) -> Vec<T> {
        let mut nodes = vec![lo];
        nodes.extend(self.derivative().real_roots_in(lo, hi));
        nodes.push(hi);
        let mut roots = Vec::new();
        for w in nodes.windows(2) {
            let (x0, x1) = (w[0], w[1]);
            let (f0, f1) = (self.eval(x0), self.eval(x1));
            if f0 == T::zero() {
                roots.push(x0);
            } else if f1 == T::zero() {
                roots.push(x1);
            } else if (f0 < T::zero()) != (f1 < T::zero()) {
                roots.push(self.bisect(x0, x1, f0));
            }
        }
        roots
    }

    fn bisect(&self, mut lo: T, mut hi: T, f_lo: T) -> T {
        let lo_neg = f_lo < T::zero();
        let half = real::<T>(0.5);
        for _ in 0..BISECT_ITERS {
            let mid = (lo + hi) * half;
            if mid <= lo || mid >= hi {
                break;
            }
            let fm = self.eval(mid);
            if fm == T::zero() {
                return mid;
            }
            if (fm < T::zero()) == lo_neg {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        (lo + hi) * half
    }

    /// Interior critical points (roots of the derivative) in `(lo, hi)`.
    pub fn critical_points_in(&self, lo: T, hi: T) -> Vec<T> {
        self.derivative().real_roots_in(lo, hi)
    }

    /// `max |p|` over the closed interval `[lo, hi]`: attained at an endpoint
    /// or an interior critical point.
    pub fn max_abs_on(&self, lo: T, hi: T) -> T {
        let mut m = self.eval(lo).abs().max(self.eval(hi).abs());
        for c in self.critical_points_in(lo, hi) {
            m = m.max(self.eval(c).abs());
        }
        m
    }

    /// Exact `∫_lo^hi |p'(t)| dt`: the derivative keeps one sign between
    /// critical points, so the integral telescopes to `Σ |p(x_{k+1}) - p(x_k)|`.
    pub fn variation_on(&self, lo: T, hi: T) -> T {
        let mut nodes = vec![lo];
        nodes.extend(self.critical_points_in(lo, hi));
        nodes.push(hi);
        let mut tv = T::zero();
        for w in nodes.windows(2) {
            tv = tv + (self.eval(w[1]) - self.eval(w[0])).abs();
        }
        tv
    }

    pub(crate) fn scale(&self, c: T) -> Polynomial<T> {
        let mut out = self.coeffs;
        for k in &mut out {
            *k = *k * c;
        }
        Polynomial { coeffs: out }
    }

    pub(crate) fn offset(&self, c: T) -> Polynomial<T> {
        let mut out = self.coeffs;
        out[0] = out[0] + c;
        Polynomial { coeffs: out }
    }
}

/// Roots of `c0 + c1 x + c2 x^2` (assumes `c2 != 0`), in the numerically
/// stable form that avoids cancellation in the small root.
fn quadratic_roots<T: Real>(c0: T, c1: T, c2: T) -> Vec<T> {
    let four = real::<T>(4.0);
    let disc = c1 * c1 - four * c2 * c0;
    if disc < T::zero() {
        return Vec::new();
    }
    if disc == T::zero() {
        return vec![-c1 / (real::<T>(2.0) * c2)];
    }
    let sq = disc.sqrt();
    let sign = if c1 >= T::zero() { T::one() } else { -T::one() };
    let q = -(c1 + sign * sq) * real::<T>(0.5);
    if q == T::zero() {
        // c1 == 0 and c0 == 0: double root at the origin.
        return vec![T::zero()];
    }
    vec![q / c2, c0 / q]
}

fn dedup_close<T: Real>(roots: &mut Vec<T>) {
    let tol = real::<T>(ROOT_DEDUP_TOL);
    roots.dedup_by(|a, b| {
        let scale = T::one().max(b.abs());
        (*a - *b).abs() <= tol * scale
    });
}

impl<T: Real> std::fmt::Display for Polynomial<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let c: Vec<f64> = self.coeffs.iter().map(|&x| as_f64(x)).collect();
        write!(f, "{} + {}t + {}t^2 + {}t^3", c[0], c[1], c[2], c[3])
    }
}
