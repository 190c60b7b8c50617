//! Minimization of `C/λ^u + Dλ^r` and the derivative-norm bounds built on it.
//!
//! The two-exponent objective has the unique interior minimizer
//! `λ0 = (uC/(rD))^{1/(r+u)}` with minimum value
//! `(r+u) / (u^{u/(r+u)} r^{r/(r+u)}) · C^{r/(r+u)} D^{u/(r+u)}`.
//! Every bound calculator in this module routes through that single formula,
//! so the corollary constants are derived by substitution rather than
//! transcribed, and a logarithmic grid search with ternary refinement serves
//! as the independent brute-force oracle.

use crate::error::{Error, Result};
use crate::scalar::{as_f64, real, Real};

/// Classical best constants for the sup-norm inequality
/// `||g'|| <= C ||g||^{1/2} ||g''||^{1/2}` on the half line and the real
/// line. Reference values only; the bounds computed here carry the weaker
/// constant `2√2` that the variation route yields.
pub const LANDAU_BEST_CONSTANT_HALF_LINE: f64 = 2.0;
pub const LANDAU_BEST_CONSTANT_REAL_LINE: f64 = std::f64::consts::SQRT_2;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MinimizationResult<T> {
    pub lambda0: T,
    pub value: T,
}

/// Growth certificate `(V, r)` for the variation of a derivative:
/// `|TV_a^b(g')| <= V |b - a|^r` with `V > 0`, `0 < r <= 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VariationGrowth<T> {
    v: T,
    r: T,
}

impl<T: Real> VariationGrowth<T> {
    pub fn new(v: T, r: T) -> Result<Self> {
        ensure_positive("V", v)?;
        ensure_exponent("r", r)?;
        Ok(Self { v, r })
    }

    pub fn v(&self) -> T {
        self.v
    }

    pub fn r(&self) -> T {
        self.r
    }
}

fn ensure_positive<T: Real>(name: &'static str, x: T) -> Result<()> {
    if x.is_finite() && x > T::zero() {
        Ok(())
    } else {
        Err(Error::NonPositive {
            name,
            value: as_f64(x),
        })
    }
}

fn ensure_exponent<T: Real>(name: &'static str, x: T) -> Result<()> {
    if x.is_finite() && x > T::zero() && x <= T::one() {
        Ok(())
    } else {
        Err(Error::ExponentOutOfRange {
            name,
            value: as_f64(x),
        })
    }
}

fn ensure_alpha<T: Real>(alpha: T) -> Result<()> {
    if alpha.is_finite() && alpha > T::one() {
        Ok(())
    } else {
        Err(Error::InvalidAlpha {
            alpha: as_f64(alpha),
        })
    }
}

/// `g_{r,u}(λ) = C/λ^u + D λ^r`.
pub fn landau_objective<T: Real>(c: T, d: T, r: T, u: T, lambda: T) -> Result<T> {
    ensure_positive("C", c)?;
    ensure_positive("D", d)?;
    ensure_exponent("r", r)?;
    ensure_exponent("u", u)?;
    ensure_positive("lambda", lambda)?;
    Ok(c / lambda.powf(u) + d * lambda.powf(r))
}

/// `d/dλ g_{r,u}(λ) = -uC/λ^{u+1} + rDλ^{r-1}`; negative below the
/// minimizer, positive above it.
pub fn objective_derivative<T: Real>(c: T, d: T, r: T, u: T, lambda: T) -> T {
    -u * c / lambda.powf(u + T::one()) + r * d * lambda.powf(r - T::one())
}

/// Closed-form global minimum of `C/λ^u + Dλ^r` over `λ ∈ (0, ∞)`.
pub fn minimize_landau_objective<T: Real>(c: T, d: T, r: T, u: T) -> Result<MinimizationResult<T>> {
    ensure_positive("C", c)?;
    ensure_positive("D", d)?;
    ensure_exponent("r", r)?;
    ensure_exponent("u", u)?;
    let ru = r + u;
    let lambda0 = (u * c / (r * d)).powf(T::one() / ru);
    let value = ru / (u.powf(u / ru) * r.powf(r / ru)) * c.powf(r / ru) * d.powf(u / ru);
    Ok(MinimizationResult { lambda0, value })
}

/// The `u = 1` specialization `C/λ + Dλ^r`.
pub fn corollary_32_case_i<T: Real>(c: T, d: T, r: T) -> Result<MinimizationResult<T>> {
    minimize_landau_objective(c, d, r, T::one())
}

/// Sup-norm Landau bound: if `|g| <= g_sup` on an unbounded interval and
/// `g'` has growth certificate `(V, r)`, then
/// `||g'||_∞ <= 2^{r/(r+1)} (r+1) / r^{r/(r+1)} · g_sup^{r/(r+1)} V^{1/(r+1)}`,
/// the minimum of `2·g_sup/λ + Vλ^r`.
pub fn landau_sup_bound<T: Real>(g_sup: T, growth: &VariationGrowth<T>) -> Result<T> {
    ensure_positive("g_sup", g_sup)?;
    Ok(minimize_landau_objective(real::<T>(2.0) * g_sup, growth.v(), growth.r(), T::one())?.value)
}

/// L1 variant: `||g'||_∞ <= (r+1)/r^{r/(r+1)} · ||g'||_1^{r/(r+1)} V^{1/(r+1)}`,
/// the minimum of `||g'||_1/λ + Vλ^r`.
pub fn landau_l1_bound<T: Real>(g1: T, growth: &VariationGrowth<T>) -> Result<T> {
    ensure_positive("g1", g1)?;
    Ok(minimize_landau_objective(g1, growth.v(), growth.r(), T::one())?.value)
}

/// Lα variant (α > 1):
/// `||g'||_∞ <= (αr+1)/(α^{αr/(αr+1)} r^{αr/(αr+1)}) · ||g'||_α^{αr/(αr+1)} V^{1/(αr+1)}`,
/// the minimum of `||g'||_α/λ^{1/α} + Vλ^r`.
pub fn landau_lalpha_bound<T: Real>(
    g_alpha: T,
    alpha: T,
    growth: &VariationGrowth<T>,
) -> Result<T> {
    ensure_positive("g_alpha", g_alpha)?;
    ensure_alpha(alpha)?;
    Ok(minimize_landau_objective(g_alpha, growth.v(), growth.r(), T::one() / alpha)?.value)
}

/// Which norm of `g''` backs a growth certificate for `TV(g')`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SecondDerivativeNorm<T> {
    /// `TV_a^b(g') = ∫|g''| <= ||g''||_∞ |b-a|`, so `(V, r) = (||g''||_∞, 1)`.
    Sup,
    /// Hölder: `∫|g''| <= |b-a|^{(p-1)/p} ||g''||_p`, so `r = (p-1)/p`.
    Lp(T),
}

pub fn growth_from_second_derivative<T: Real>(
    kind: SecondDerivativeNorm<T>,
    g2_norm: T,
) -> Result<VariationGrowth<T>> {
    ensure_positive("g2_norm", g2_norm)?;
    match kind {
        SecondDerivativeNorm::Sup => VariationGrowth::new(g2_norm, T::one()),
        SecondDerivativeNorm::Lp(p) => {
            if !(p.is_finite() && p > T::one()) {
                return Err(Error::InvalidExponent { p: as_f64(p) });
            }
            VariationGrowth::new(g2_norm, (p - T::one()) / p)
        }
    }
}

/// The six corollary families specialize the objective as follows
/// (C, D, r, u), with the constant read off at `C`-weight / `D`-weight 1:
///
/// | family | C | r         | u   |
/// |--------|---|-----------|-----|
/// | c34    | 2 | 1         | 1   |
/// | c35(p) | 2 | (p-1)/p   | 1   |
/// | c37    | 1 | 1         | 1   |
/// | c38(p) | 1 | (p-1)/p   | 1   |
/// | c39(α) | 1 | 1         | 1/α |
/// | c310(α,p) | 1 | (p-1)/p | 1/α |
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum CorollaryFamily<T> {
    C34,
    C35 { p: T },
    C37,
    C38 { p: T },
    C39 { alpha: T },
    C310 { alpha: T, p: T },
}

impl<T: Real> CorollaryFamily<T> {
    /// `(C, D, r, u)` substitution pattern for this family.
    pub fn objective_parameters(&self) -> Result<(T, T, T, T)> {
        let one = T::one();
        let two = real::<T>(2.0);
        let holder = |p: T| -> Result<T> {
            if p.is_finite() && p > one {
                Ok((p - one) / p)
            } else {
                Err(Error::InvalidExponent { p: as_f64(p) })
            }
        };
        Ok(match *self {
            CorollaryFamily::C34 => (two, one, one, one),
            CorollaryFamily::C35 { p } => (two, one, holder(p)?, one),
            CorollaryFamily::C37 => (one, one, one, one),
            CorollaryFamily::C38 { p } => (one, one, holder(p)?, one),
            CorollaryFamily::C39 { alpha } => {
                ensure_alpha(alpha)?;
                (one, one, one, one / alpha)
            }
            CorollaryFamily::C310 { alpha, p } => {
                ensure_alpha(alpha)?;
                (one, one, holder(p)?, one / alpha)
            }
        })
    }
}

/// Multiplicative constant of a corollary bound, derived by substituting the
/// family's `(C, D, r, u)` pattern into the minimum-value formula.
pub fn corollary_constant<T: Real>(family: CorollaryFamily<T>) -> Result<T> {
    let (c, d, r, u) = family.objective_parameters()?;
    Ok(minimize_landau_objective(c, d, r, u)?.value)
}

/// Configuration of the brute-force oracle: a logarithmic λ-grid followed by
/// ternary refinement around the best grid point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSearch {
    pub lambda_min: f64,
    pub lambda_max: f64,
    pub points: usize,
    /// Stop refining once the bracket's relative width drops below this.
    pub refine_rel: f64,
}

impl Default for GridSearch {
    fn default() -> Self {
        Self {
            lambda_min: 1e-8,
            lambda_max: 1e8,
            points: 1_000_000,
            refine_rel: 1e-10,
        }
    }
}

impl GridSearch {
    /// Cheaper settings for unit tests; same refinement target.
    pub fn coarse() -> Self {
        Self {
            points: 20_000,
            ..Self::default()
        }
    }
}

/// Brute-force minimum of `C/λ^u + Dλ^r`. Evaluates the objective directly
/// on the grid (`exp`/`ln` route), never through the closed form, so it is a
/// valid oracle for [`minimize_landau_objective`]. The objective is strictly
/// convex in `ln λ`, so ternary refinement of the bracketing grid cell
/// converges to the global minimum.
pub fn grid_search_minimum<T: Real>(
    c: T,
    d: T,
    r: T,
    u: T,
    cfg: &GridSearch,
) -> Result<MinimizationResult<T>> {
    ensure_positive("C", c)?;
    ensure_positive("D", d)?;
    ensure_exponent("r", r)?;
    ensure_exponent("u", u)?;
    let eval = |s: T| c * (-u * s).exp() + d * (r * s).exp();

    let s_lo = real::<T>(cfg.lambda_min.ln());
    let s_hi = real::<T>(cfg.lambda_max.ln());
    let n = cfg.points.max(3);
    let step = (s_hi - s_lo) / real::<T>((n - 1) as f64);
    let mut best_i = 0usize;
    let mut best_v = T::infinity();
    for i in 0..n {
        let v = eval(s_lo + step * real::<T>(i as f64));
        if v < best_v {
            best_v = v;
            best_i = i;
        }
    }

    let mut lo = s_lo + step * real::<T>(best_i.saturating_sub(1) as f64);
    let mut hi = s_lo + step * real::<T>(best_i.min(n - 2).saturating_add(1) as f64);
    let third = T::one() / real::<T>(3.0);
    let tol = real::<T>(cfg.refine_rel);
    for _ in 0..500 {
        if hi - lo <= tol {
            break;
        }
        let m1 = lo + (hi - lo) * third;
        let m2 = hi - (hi - lo) * third;
        if eval(m1) <= eval(m2) {
            hi = m2;
        } else {
            lo = m1;
        }
    }
    let s = (lo + hi) * real::<T>(0.5);
    Ok(MinimizationResult {
        lambda0: s.exp(),
        value: eval(s),
    })
}
