//! Extremal families and empirical searches for the best constants.
//!
//! The spike (zero with a unit atom at the right endpoint) makes the reverse
//! sup-norm inequality an equality, certifying that its variation
//! coefficient `1` cannot shrink. The unit step on `[0, b]` drives the
//! reverse Lp inequality: the constant `D` replacing `1/2` must satisfy
//! `b^{1-1/p} <= 1 + D·b·q(p)` with `q(p) = (2^{p+1}-1)^{1/p}/(p+1)^{1/p}`,
//! and since `q(p) → 2`, letting `p` then `b` grow forces `D >= 1/2`. The
//! empirical search confirms that no random function beats either constant.

use std::collections::BTreeMap;

use crate::corpus::{corpus, GeneratorProfile};
use crate::error::{Error, Result};
use crate::inequalities::kernel_pnorm_factor;
use crate::piecewise::{Interval, PiecewiseFunction};
use crate::poly::Polynomial;
use crate::scalar::{as_f64, real, Real};

/// Step-extremal widths used alongside the random corpus in searches.
pub const STEP_LADDER: [f64; 4] = [10.0, 100.0, 1_000.0, 10_000.0];

/// Lower bound on an inequality's multiplicative constant, with the witness
/// that achieved it and the sharp target it may approach but not exceed.
#[derive(Debug, Clone, PartialEq)]
pub struct SharpnessEstimate<T> {
    pub inequality: String,
    pub constant_lower_bound: T,
    pub witness_digest: String,
    pub witness_params: BTreeMap<String, T>,
    pub target: T,
}

impl<T: Real> SharpnessEstimate<T> {
    /// CSV row `inequality,p,b,implied_constant,target`.
    pub fn csv_row(&self) -> String {
        let get = |k: &str| {
            self.witness_params
                .get(k)
                .map(|&v| format!("{v}"))
                .unwrap_or_default()
        };
        format!(
            "{},{},{},{},{}",
            self.inequality,
            get("p"),
            get("b"),
            self.constant_lower_bound,
            self.target
        )
    }

    pub fn json_row(&self) -> serde_json::Value {
        let mut obj = serde_json::Map::new();
        obj.insert("inequality".into(), self.inequality.clone().into());
        for (k, &v) in &self.witness_params {
            obj.insert(k.clone(), as_f64(v).into());
        }
        obj.insert(
            "implied_constant".into(),
            as_f64(self.constant_lower_bound).into(),
        );
        obj.insert("target".into(), as_f64(self.target).into());
        obj.insert("witness_digest".into(), self.witness_digest.clone().into());
        serde_json::Value::Object(obj)
    }
}

/// Zero on `[a, b)` with an atom of value 1 at `b`: sup-norm 1, integral 0,
/// total variation 1 — equality in the reverse sup-norm bound.
pub fn spike_extremal<T: Real>(iv: Interval<T>) -> PiecewiseFunction<T> {
    PiecewiseFunction::single(iv, Polynomial::constant(T::zero()))
        .with_atom(1, T::one())
        .expect("index 1 is the right endpoint")
}

/// Unit step on `[0, b]`, `b > 1`: zero on `[0, b-1]`, one on `(b-1, b]`
/// (the atom pins the value 0 at the jump point). Every Lp norm, the
/// integral, and the total variation equal 1.
pub fn step_extremal<T: Real>(b: T) -> Result<PiecewiseFunction<T>> {
    if !(b.is_finite() && b > T::one()) {
        return Err(Error::StepWidth { b: as_f64(b) });
    }
    PiecewiseFunction::new(
        vec![T::zero(), b - T::one(), b],
        vec![
            Polynomial::constant(T::zero()),
            Polynomial::constant(T::one()),
        ],
        [(1usize, T::zero())].into(),
    )
}

/// Smallest constant `D` for which the step extremal satisfies the
/// `D`-weighted reverse Lp bound:
/// `D_min(b, p) = (b^{1-1/p} - 1) (p+1)^{1/p} / (b (2^{p+1}-1)^{1/p})`.
/// Approaches `(b-1)/(2b)` as `p → ∞`, hence `1/2` when `b → ∞` afterwards.
pub fn thm2_constant_lower_bound<T: Real>(b: T, p: T) -> Result<T> {
    if !(b.is_finite() && b > T::one()) {
        return Err(Error::StepWidth { b: as_f64(b) });
    }
    let q = kernel_pnorm_factor(p)?;
    Ok((b.powf(T::one() - T::one() / p) - T::one()) / (b * q))
}

/// `q(p)`, exposed for the limit study: `q(1) = 3/2` and `q(p) → 2`.
pub fn q_limit_check<T: Real>(p: T) -> Result<T> {
    kernel_pnorm_factor(p)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SearchInequality<T> {
    ReverseSup,
    ReverseLp(T),
}

/// Maximum implied constant over `count` seeded corpus functions plus the
/// deterministic extremal family; constant-function candidates (zero total
/// variation) are skipped. The result can approach but never exceed the
/// sharp target (1 for the sup-norm form, 1/2 for the Lp form).
pub fn empirical_constant_search<T: Real>(
    inequality: SearchInequality<T>,
    seed: u64,
    count: usize,
    profile: &GeneratorProfile,
) -> Result<SharpnessEstimate<T>> {
    if count == 0 {
        return Err(Error::EmptySearchSpace);
    }

    // (candidate, label-key, label-value)
    let mut candidates: Vec<(PiecewiseFunction<T>, &str, T)> = Vec::new();
    for (item_seed, f) in corpus::<T>(seed, count, profile)? {
        candidates.push((f, "seed", real(item_seed as f64)));
    }
    match inequality {
        SearchInequality::ReverseSup => {
            candidates.push((
                spike_extremal(Interval::new(T::zero(), T::one())?),
                "b",
                T::one(),
            ));
            candidates.push((
                spike_extremal(Interval::new(-T::one(), real(3.0))?),
                "b",
                real(3.0),
            ));
        }
        SearchInequality::ReverseLp(_) => {
            for b in STEP_LADDER {
                candidates.push((step_extremal(real(b))?, "b", real(b)));
            }
        }
    }

    let mut best: Option<(T, &PiecewiseFunction<T>, &str, T)> = None;
    let implied_of = |f: &PiecewiseFunction<T>| -> Result<Option<T>> {
        let tv = f.total_variation();
        if tv == T::zero() {
            return Ok(None);
        }
        let w = f.interval().width();
        let implied = match inequality {
            SearchInequality::ReverseSup => (f.sup_norm() - f.integral().abs() / w) / tv,
            SearchInequality::ReverseLp(p) => {
                let mean_term = f.integral().abs() / w.powf(T::one() - T::one() / p);
                (f.lp_norm(p)? - mean_term) / (w.powf(T::one() / p) * kernel_pnorm_factor(p)? * tv)
            }
        };
        Ok(Some(implied))
    };
    for (f, key, label) in &candidates {
        if let Some(implied) = implied_of(f)? {
            if best.as_ref().is_none_or(|&(b, ..)| implied > b) {
                best = Some((implied, f, key, *label));
            }
        }
    }
    let (constant, witness, key, label) = best.ok_or(Error::EmptySearchSpace)?;

    let (name, target) = match inequality {
        SearchInequality::ReverseSup => ("reverse_sup", T::one()),
        SearchInequality::ReverseLp(_) => ("reverse_lp", real(0.5)),
    };
    let mut params = BTreeMap::new();
    params.insert(key.to_string(), label);
    if let SearchInequality::ReverseLp(p) = inequality {
        params.insert("p".to_string(), p);
    }
    Ok(SharpnessEstimate {
        inequality: name.to_string(),
        constant_lower_bound: constant,
        witness_digest: witness.digest(),
        witness_params: params,
        target,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::inequalities::reverse_sup;
    use approx::assert_relative_eq;

    fn iv(a: f64, b: f64) -> Interval<f64> {
        Interval::new(a, b).unwrap()
    }

    #[test]
    fn spike_norm_triple() {
        for (a, b) in [(0.0, 1.0), (-2.0, 5.5)] {
            let f = spike_extremal(iv(a, b));
            assert_eq!(f.sup_norm(), 1.0);
            assert_eq!(f.integral(), 0.0);
            assert_eq!(f.total_variation(), 1.0);
        }
        // homogeneity: a spike of height 3
        let f = spike_extremal(iv(0.0, 1.0)).scale(3.0);
        assert_eq!(f.sup_norm(), 3.0);
        assert_eq!(f.total_variation(), 3.0);
    }

    #[test]
    fn spike_saturates_reverse_sup() {
        let r = reverse_sup(&spike_extremal(iv(0.0, 1.0)));
        assert_eq!(r.ratio, 1.0);
    }

    #[test]
    fn step_norm_triple() {
        let f = step_extremal(2.0).unwrap();
        assert_eq!(f.total_variation(), 1.0);
        assert_eq!(f.integral(), 1.0);
        assert_eq!(f.evaluate(1.0).unwrap(), 0.0); // pinned left value at the jump
        assert_eq!(f.evaluate(2.0).unwrap(), 1.0);
        for p in [1.0, 2.0, 7.5] {
            assert_relative_eq!(f.lp_norm(p).unwrap(), 1.0, max_relative = 1e-11);
        }
        let g = step_extremal(10.0).unwrap();
        assert_eq!(g.integral(), 1.0);
        assert_eq!(g.total_variation(), 1.0);
        assert!(step_extremal(1.0).is_err());
        assert!(step_extremal(0.5).is_err());
    }

    #[test]
    fn dmin_values() {
        // p = 1 kills the numerator
        assert_eq!(thm2_constant_lower_bound(2.0, 1.0).unwrap(), 0.0);
        // the p → ∞ surrogate sits near (b-1)/(2b) → 1/2
        let d: f64 = thm2_constant_lower_bound(1e4, 200.0).unwrap();
        assert!((d - 0.5).abs() < 0.05, "D_min(1e4, 200) = {d}");
        // never exceeds the sharp constant
        for b in STEP_LADDER {
            for p in [1.0, 2.0, 50.0, 500.0] {
                let d = thm2_constant_lower_bound(b, p).unwrap();
                assert!((0.0..0.5).contains(&d), "D_min({b}, {p}) = {d}");
            }
        }
        assert!(thm2_constant_lower_bound(1.0, 2.0).is_err());
    }

    #[test]
    fn dmin_is_increasing_in_b_up_to_the_peak() {
        // (b^{1-1/p} - 1)/b rises until b* = p^{p/(p-1)} and falls beyond it,
        // so monotonicity in b only holds on [2, b*].
        let p: f64 = 5.0;
        let peak = p.powf(p / (p - 1.0));
        let mut prev = 0.0;
        for k in 0..=10 {
            let b = 2.0 + (peak - 2.0) * k as f64 / 10.0;
            let d = thm2_constant_lower_bound(b, p).unwrap();
            assert!(d >= prev, "D_min({b}, {p}) fell below its predecessor");
            prev = d;
        }
        let beyond = thm2_constant_lower_bound(100.0 * peak, p).unwrap();
        assert!(beyond < prev, "past the peak D_min decreases again");
    }

    #[test]
    fn q_values_and_limit() {
        assert_relative_eq!(q_limit_check(1.0).unwrap(), 1.5, max_relative = 1e-14);
        assert_relative_eq!(
            q_limit_check(2.0).unwrap(),
            (7.0f64 / 3.0).sqrt(),
            max_relative = 1e-14
        );
        let q1000: f64 = q_limit_check(1000.0).unwrap();
        assert!((q1000 - 2.0).abs() < 0.02);
        // |q - 2| decreasing along the ladder, q staying inside [3/2, 2)
        let mut prev = f64::INFINITY;
        for p in [10.0, 100.0, 1000.0] {
            let q: f64 = q_limit_check(p).unwrap();
            assert!((1.5..2.0).contains(&q));
            let dist = (q - 2.0).abs();
            assert!(dist < prev);
            prev = dist;
        }
        assert!(q_limit_check(0.5).is_err());
    }

    #[test]
    fn search_reverse_sup_hits_one_exactly() {
        let est = empirical_constant_search(
            SearchInequality::<f64>::ReverseSup,
            0,
            200,
            &GeneratorProfile::default(),
        )
        .unwrap();
        assert_eq!(est.constant_lower_bound, 1.0);
        assert_eq!(est.target, 1.0);
        assert!(est.constant_lower_bound <= est.target + 1e-9);
    }

    #[test]
    fn search_reverse_lp_stays_below_half_and_reaches_040() {
        let est = empirical_constant_search(
            SearchInequality::ReverseLp(50.0),
            0,
            200,
            &GeneratorProfile::default(),
        )
        .unwrap();
        assert_eq!(est.target, 0.5);
        assert!(
            est.constant_lower_bound >= 0.40,
            "{}",
            est.constant_lower_bound
        );
        assert!(est.constant_lower_bound <= 0.5 + 1e-9);
        // the witness is a step; its b is recorded
        assert!(est.witness_params.contains_key("b"));
    }

    #[test]
    fn search_rejects_empty_space() {
        assert!(matches!(
            empirical_constant_search(
                SearchInequality::<f64>::ReverseSup,
                0,
                0,
                &GeneratorProfile::default()
            ),
            Err(Error::EmptySearchSpace)
        ));
    }

    #[test]
    fn estimate_rows() {
        let est = empirical_constant_search(
            SearchInequality::ReverseLp(2.0),
            1,
            10,
            &GeneratorProfile::default(),
        )
        .unwrap();
        let row = est.csv_row();
        assert_eq!(row.split(',').count(), 5);
        let json = est.json_row();
        assert_eq!(json["inequality"], "reverse_lp");
        assert_eq!(json["target"], 0.5);
    }
}
