//! Exact model of bounded-variation functions on a compact interval.
//!
//! A [`PiecewiseFunction`] is a sorted breakpoint grid `t0 < … < tn` covering
//! `[a, b]`, one cubic [`Polynomial`] per open sub-interval `(t_i, t_{i+1})`,
//! and optional *atoms*: explicit function values pinned at single
//! breakpoints. Atoms are invisible to integrals and Lp norms (measure
//! zero) but fully visible to the pointwise sup-norm and to total variation,
//! which is exactly what the extremal constructions for the sharp constants
//! require. Breakpoints without an atom take the right-limit value (left
//! limit at `tn`), so evaluation is deterministic everywhere.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::quadrature;
use crate::scalar::{as_f64, real, Real};

/// Absolute quadrature tolerance per smooth sub-piece of an Lp integrand.
pub const LP_QUAD_TOL: f64 = 1e-12;

/// A nonempty compact interval `[a, b]`, `a < b`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Interval<T> {
    a: T,
    b: T,
}

impl<T: Real> Interval<T> {
    pub fn new(a: T, b: T) -> Result<Self> {
        if !(a.is_finite() && b.is_finite() && a < b) {
            return Err(Error::InvalidInterval {
                a: as_f64(a),
                b: as_f64(b),
            });
        }
        Ok(Self { a, b })
    }

    pub fn a(&self) -> T {
        self.a
    }

    pub fn b(&self) -> T {
        self.b
    }

    pub fn width(&self) -> T {
        self.b - self.a
    }

    pub fn midpoint(&self) -> T {
        (self.a + self.b) * real::<T>(0.5)
    }

    pub fn contains(&self, x: T) -> bool {
        self.a <= x && x <= self.b
    }
}

/// Precomputed norm summary; `lp` norms stay on [`PiecewiseFunction::lp_norm`]
/// since they depend on the exponent.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Norms<T> {
    pub sup: T,
    pub integral: T,
    pub total_variation: T,
}

#[derive(Debug, Clone, PartialEq)]
pub struct PiecewiseFunction<T> {
    breakpoints: Vec<T>,
    pieces: Vec<Polynomial<T>>,
    atoms: BTreeMap<usize, T>,
}

impl<T: Real> PiecewiseFunction<T> {
    /// Validates every structural invariant: at least two strictly increasing
    /// finite breakpoints, exactly one piece per gap, atoms keyed by
    /// breakpoint index with finite values.
    pub fn new(
        breakpoints: Vec<T>,
        pieces: Vec<Polynomial<T>>,
        atoms: BTreeMap<usize, T>,
    ) -> Result<Self> {
        if breakpoints.len() < 2 {
            return Err(Error::TooFewBreakpoints(breakpoints.len()));
        }
        if breakpoints.iter().any(|t| !t.is_finite()) {
            return Err(Error::UnsortedBreakpoints);
        }
        if breakpoints.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::UnsortedBreakpoints);
        }
        if pieces.len() + 1 != breakpoints.len() {
            return Err(Error::PieceCountMismatch {
                breakpoints: breakpoints.len(),
                expected: breakpoints.len() - 1,
                actual: pieces.len(),
            });
        }
        for (&idx, &v) in &atoms {
            if idx >= breakpoints.len() || !v.is_finite() {
                return Err(Error::InvalidAtom { index: idx });
            }
        }
        Ok(Self {
            breakpoints,
            pieces,
            atoms,
        })
    }

    /// Constant function on `iv`.
    pub fn constant(iv: Interval<T>, value: T) -> Self {
        Self {
            breakpoints: vec![iv.a(), iv.b()],
            pieces: vec![Polynomial::constant(value)],
            atoms: BTreeMap::new(),
        }
    }

    /// Single polynomial piece on `iv`.
    pub fn single(iv: Interval<T>, piece: Polynomial<T>) -> Self {
        Self {
            breakpoints: vec![iv.a(), iv.b()],
            pieces: vec![piece],
            atoms: BTreeMap::new(),
        }
    }

    /// Returns a copy with an atom pinned at breakpoint `index`.
    pub fn with_atom(mut self, index: usize, value: T) -> Result<Self> {
        if index >= self.breakpoints.len() || !value.is_finite() {
            return Err(Error::InvalidAtom { index });
        }
        self.atoms.insert(index, value);
        Ok(self)
    }

    pub fn interval(&self) -> Interval<T> {
        Interval {
            a: self.breakpoints[0],
            b: *self.breakpoints.last().unwrap(),
        }
    }

    pub fn breakpoints(&self) -> &[T] {
        &self.breakpoints
    }

    pub fn pieces(&self) -> &[Polynomial<T>] {
        &self.pieces
    }

    pub fn atoms(&self) -> &BTreeMap<usize, T> {
        &self.atoms
    }

    pub fn piece_count(&self) -> usize {
        self.pieces.len()
    }

    /// Pointwise evaluation. Atoms win at their breakpoint; an atom-less
    /// breakpoint takes the right-limit piece (left limit at `tn`).
    pub fn evaluate(&self, x: T) -> Result<T> {
        let iv = self.interval();
        if !iv.contains(x) {
            return Err(Error::OutsideInterval {
                x: as_f64(x),
                a: as_f64(iv.a()),
                b: as_f64(iv.b()),
            });
        }
        if let Ok(idx) = self
            .breakpoints
            .binary_search_by(|t| t.partial_cmp(&x).expect("finite breakpoints"))
        {
            if let Some(&v) = self.atoms.get(&idx) {
                return Ok(v);
            }
            let piece = if idx == self.pieces.len() {
                idx - 1
            } else {
                idx
            };
            return Ok(self.pieces[piece].eval(x));
        }
        let idx = self.breakpoints.partition_point(|&t| t <= x) - 1;
        Ok(self.pieces[idx].eval(x))
    }

    /// Exact integral: sum of polynomial antiderivatives; atoms carry no mass.
    pub fn integral(&self) -> T {
        let mut acc = T::zero();
        for (i, p) in self.pieces.iter().enumerate() {
            acc = acc + p.definite_integral(self.breakpoints[i], self.breakpoints[i + 1]);
        }
        acc
    }

    /// Pointwise supremum of `|f|`, atoms included.
    pub fn sup_norm(&self) -> T {
        let mut m = T::zero();
        for (i, p) in self.pieces.iter().enumerate() {
            m = m.max(p.max_abs_on(self.breakpoints[i], self.breakpoints[i + 1]));
        }
        for &v in self.atoms.values() {
            m = m.max(v.abs());
        }
        m
    }

    /// Total variation: exact `∫|p_i'|` per piece plus every jump
    /// contribution. An atom `v` at an interior breakpoint with one-sided
    /// limits `L`, `R` contributes `|v-L| + |R-v|`; without an atom the jump
    /// is `|R-L|`. At the endpoints only the one-sided jump to the atom
    /// counts.
    pub fn total_variation(&self) -> T {
        let n = self.pieces.len();
        let mut tv = T::zero();
        for (i, p) in self.pieces.iter().enumerate() {
            tv = tv + p.variation_on(self.breakpoints[i], self.breakpoints[i + 1]);
        }
        for i in 0..=n {
            let t = self.breakpoints[i];
            let left = (i > 0).then(|| self.pieces[i - 1].eval(t));
            let right = (i < n).then(|| self.pieces[i].eval(t));
            let atom = self.atoms.get(&i).copied();
            tv = tv
                + match (left, right, atom) {
                    (Some(l), Some(r), Some(v)) => (v - l).abs() + (r - v).abs(),
                    (Some(l), Some(r), None) => (r - l).abs(),
                    (None, Some(r), Some(v)) => (r - v).abs(),
                    (Some(l), None, Some(v)) => (v - l).abs(),
                    _ => T::zero(),
                };
        }
        tv
    }

    /// `(∫ |f|^p)^{1/p}` for finite `p >= 1`. Every piece is split at its
    /// real roots so the integrand is smooth per sub-piece, then integrated
    /// adaptively to [`LP_QUAD_TOL`]; atoms are ignored.
    pub fn lp_norm(&self, p: T) -> Result<T> {
        if !(p.is_finite() && p >= T::one()) {
            return Err(Error::InvalidExponent { p: as_f64(p) });
        }
        let tol = real::<T>(LP_QUAD_TOL);
        let mut total = T::zero();
        for (i, poly) in self.pieces.iter().enumerate() {
            let (lo, hi) = (self.breakpoints[i], self.breakpoints[i + 1]);
            let mut nodes = vec![lo];
            nodes.extend(poly.real_roots_in(lo, hi));
            nodes.push(hi);
            for w in nodes.windows(2) {
                total =
                    total + quadrature::integrate(|t| poly.eval(t).abs().powf(p), w[0], w[1], tol);
            }
        }
        Ok(total.max(T::zero()).powf(T::one() / p))
    }

    pub fn norms(&self) -> Norms<T> {
        Norms {
            sup: self.sup_norm(),
            integral: self.integral(),
            total_variation: self.total_variation(),
        }
    }

    /// Split at interior breakpoint index `k`; atoms at the split point are
    /// kept on both halves. Without an atom the full function takes the
    /// right-limit value at `t_k`, which the left half can only reproduce by
    /// pinning it explicitly — otherwise restriction would change the
    /// function and drop the jump's variation.
    pub fn split_at(&self, k: usize) -> Result<(Self, Self)> {
        if k == 0 || k >= self.pieces.len() {
            return Err(Error::BadFunctionSpec(format!(
                "split index {k} is not an interior breakpoint"
            )));
        }
        let mut left_atoms: BTreeMap<usize, T> = self
            .atoms
            .iter()
            .filter(|&(&i, _)| i <= k)
            .map(|(&i, &v)| (i, v))
            .collect();
        left_atoms
            .entry(k)
            .or_insert_with(|| self.pieces[k].eval(self.breakpoints[k]));
        let left = Self {
            breakpoints: self.breakpoints[..=k].to_vec(),
            pieces: self.pieces[..k].to_vec(),
            atoms: left_atoms,
        };
        let right = Self {
            breakpoints: self.breakpoints[k..].to_vec(),
            pieces: self.pieces[k..].to_vec(),
            atoms: self
                .atoms
                .iter()
                .filter(|&(&i, _)| i >= k)
                .map(|(&i, &v)| (i - k, v))
                .collect(),
        };
        Ok((left, right))
    }

    /// `c · f` (pieces and atoms alike).
    pub fn scale(&self, c: T) -> Self {
        Self {
            breakpoints: self.breakpoints.clone(),
            pieces: self.pieces.iter().map(|p| p.scale(c)).collect(),
            atoms: self.atoms.iter().map(|(&i, &v)| (i, v * c)).collect(),
        }
    }

    /// `f + c` (pieces and atoms alike).
    pub fn offset(&self, c: T) -> Self {
        Self {
            breakpoints: self.breakpoints.clone(),
            pieces: self.pieces.iter().map(|p| p.offset(c)).collect(),
            atoms: self.atoms.iter().map(|(&i, &v)| (i, v + c)).collect(),
        }
    }

    pub fn negate(&self) -> Self {
        self.scale(-T::one())
    }

    /// Stable opaque identifier: FNV-1a over the exact bit patterns.
    pub fn digest(&self) -> String {
        let mut h = crate::report::Fnv1a::new();
        for &t in &self.breakpoints {
            h.write_f64(as_f64(t));
        }
        for p in &self.pieces {
            for c in p.coeffs() {
                h.write_f64(as_f64(c));
            }
        }
        for (&i, &v) in &self.atoms {
            h.write_u64(i as u64);
            h.write_f64(as_f64(v));
        }
        format!("{:016x}", h.finish())
    }

    /// Serialize to the function-spec JSON schema.
    pub fn to_json(&self) -> String {
        let spec = FunctionSpec {
            interval: [
                as_f64(self.breakpoints[0]),
                as_f64(*self.breakpoints.last().unwrap()),
            ],
            breakpoints: self.breakpoints.iter().map(|&t| as_f64(t)).collect(),
            pieces: self
                .pieces
                .iter()
                .map(|p| p.coeffs().iter().map(|&c| as_f64(c)).collect())
                .collect(),
            atoms: self
                .atoms
                .iter()
                .map(|(&i, &v)| (format!("{}", as_f64(self.breakpoints[i])), as_f64(v)))
                .collect(),
        };
        serde_json::to_string_pretty(&spec).expect("function spec serializes")
    }

    /// Parse the function-spec JSON schema, revalidating every invariant.
    pub fn from_json(s: &str) -> Result<Self> {
        let spec: FunctionSpec = serde_json::from_str(s)?;
        spec.build()
    }
}

/// On-disk schema:
/// `{"interval":[a,b],"breakpoints":[…],"pieces":[[c0,c1,c2,c3],…],"atoms":{"t":v}}`
#[derive(Debug, Serialize, Deserialize)]
struct FunctionSpec {
    interval: [f64; 2],
    breakpoints: Vec<f64>,
    pieces: Vec<Vec<f64>>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    atoms: BTreeMap<String, f64>,
}

impl FunctionSpec {
    fn build<T: Real>(&self) -> Result<PiecewiseFunction<T>> {
        let breakpoints: Vec<T> = self
            .breakpoints
            .iter()
            .map(|&t| T::from_f64(t).ok_or(Error::UnsortedBreakpoints))
            .collect::<Result<_>>()?;
        let pieces: Vec<Polynomial<T>> = self
            .pieces
            .iter()
            .map(|c| {
                let coeffs: Vec<T> = c.iter().filter_map(|&x| T::from_f64(x)).collect();
                if coeffs.len() != c.len() {
                    return Err(Error::NonFiniteCoefficient);
                }
                Polynomial::from_slice(&coeffs)
            })
            .collect::<Result<_>>()?;
        let mut atoms = BTreeMap::new();
        for (key, &v) in &self.atoms {
            let t: f64 = key
                .parse()
                .map_err(|_| Error::BadFunctionSpec(format!("atom key `{key}` is not a number")))?;
            let idx = self
                .breakpoints
                .iter()
                .position(|&b| b == t)
                .ok_or_else(|| {
                    Error::BadFunctionSpec(format!("atom key {t} matches no breakpoint"))
                })?;
            atoms.insert(
                idx,
                T::from_f64(v).ok_or(Error::InvalidAtom { index: idx })?,
            );
        }
        if self.breakpoints.first() != Some(&self.interval[0])
            || self.breakpoints.last() != Some(&self.interval[1])
        {
            return Err(Error::BadFunctionSpec(
                "interval endpoints must equal the first and last breakpoint".into(),
            ));
        }
        PiecewiseFunction::new(breakpoints, pieces, atoms)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn iv(a: f64, b: f64) -> Interval<f64> {
        Interval::new(a, b).unwrap()
    }

    /// 0 on [a, b) with an atom of value 1 at b.
    fn spike(a: f64, b: f64) -> PiecewiseFunction<f64> {
        PiecewiseFunction::single(iv(a, b), Polynomial::constant(0.0))
            .with_atom(1, 1.0)
            .unwrap()
    }

    fn cubic_minus_t() -> PiecewiseFunction<f64> {
        PiecewiseFunction::single(
            iv(-2.0, 2.0),
            Polynomial::from_slice(&[0.0, -1.0, 0.0, 1.0]).unwrap(),
        )
    }

    #[test]
    fn interval_invariants() {
        assert!(Interval::new(1.0, 1.0).is_err());
        assert!(Interval::new(2.0, 1.0).is_err());
        assert!(Interval::new(f64::NAN, 1.0).is_err());
        assert_eq!(iv(0.0, 4.0).midpoint(), 2.0);
    }

    #[test]
    fn construction_invariants() {
        let p = Polynomial::constant(1.0);
        assert!(matches!(
            PiecewiseFunction::new(vec![0.0], vec![], BTreeMap::new()),
            Err(Error::TooFewBreakpoints(1))
        ));
        assert!(matches!(
            PiecewiseFunction::new(vec![0.0, 0.0], vec![p], BTreeMap::new()),
            Err(Error::UnsortedBreakpoints)
        ));
        assert!(matches!(
            PiecewiseFunction::new(vec![0.0, 1.0], vec![], BTreeMap::new()),
            Err(Error::PieceCountMismatch { .. })
        ));
        let atoms: BTreeMap<usize, f64> = [(5, 1.0)].into();
        assert!(matches!(
            PiecewiseFunction::new(vec![0.0, 1.0], vec![p], atoms),
            Err(Error::InvalidAtom { index: 5 })
        ));
    }

    #[test]
    fn evaluate_conventions() {
        let f = spike(0.0, 1.0);
        assert_eq!(f.evaluate(1.0).unwrap(), 1.0); // atom
        assert_eq!(f.evaluate(0.5).unwrap(), 0.0);
        assert_eq!(f.evaluate(0.0).unwrap(), 0.0);
        assert!(f.evaluate(1.5).is_err());
        assert!(f.evaluate(-0.1).is_err());

        // right-limit convention at an atom-less interior breakpoint
        let g = PiecewiseFunction::new(
            vec![0.0, 1.0, 2.0],
            vec![Polynomial::constant(3.0), Polynomial::constant(7.0)],
            BTreeMap::new(),
        )
        .unwrap();
        assert_eq!(g.evaluate(1.0).unwrap(), 7.0);
        assert_eq!(g.evaluate(2.0).unwrap(), 7.0); // left limit at tn

        let h = PiecewiseFunction::single(
            iv(0.0, 1.0),
            Polynomial::from_slice(&[0.0, 0.0, 0.0, 1.0]).unwrap(),
        );
        assert_eq!(h.evaluate(0.5).unwrap(), 0.125);
    }

    #[test]
    fn total_variation_cases() {
        assert_eq!(
            PiecewiseFunction::constant(iv(0.0, 1.0), 5.0).total_variation(),
            0.0
        );
        let ident = PiecewiseFunction::single(iv(0.0, 1.0), Polynomial::linear(0.0, 1.0));
        assert_eq!(ident.total_variation(), 1.0);
        assert_eq!(spike(0.0, 1.0).total_variation(), 1.0);
        assert_eq!(spike(-3.0, 4.5).total_variation(), 1.0);
        let expect = 12.0 + 8.0 * 3.0_f64.sqrt() / 9.0;
        assert_relative_eq!(
            cubic_minus_t().total_variation(),
            expect,
            max_relative = 1e-14
        );
    }

    #[test]
    fn total_variation_counts_interior_jumps_and_atoms() {
        // step from 0 to 1 at t = 1 with no atom
        let step = PiecewiseFunction::new(
            vec![0.0, 1.0, 2.0],
            vec![Polynomial::constant(0.0), Polynomial::constant(1.0)],
            BTreeMap::new(),
        )
        .unwrap();
        assert_eq!(step.total_variation(), 1.0);
        // pinning the value *between* the one-sided limits leaves TV unchanged
        let pinned = step.clone().with_atom(1, 0.25).unwrap();
        assert_eq!(pinned.total_variation(), 1.0);
        // pinning it outside doubles the excursion
        let outside = step.with_atom(1, 2.0).unwrap();
        assert_eq!(outside.total_variation(), 3.0);
    }

    #[test]
    fn split_preserves_total_variation() {
        let f = PiecewiseFunction::new(
            vec![0.0, 1.0, 2.0, 3.0],
            vec![
                Polynomial::linear(0.0, 1.0),
                Polynomial::constant(-1.0),
                Polynomial::from_slice(&[0.0, 0.0, 1.0]).unwrap(),
            ],
            [(1, 5.0)].into(),
        )
        .unwrap();
        for k in 1..=2 {
            let (l, r) = f.split_at(k).unwrap();
            assert_relative_eq!(
                l.total_variation() + r.total_variation(),
                f.total_variation(),
                max_relative = 1e-14
            );
        }
        assert!(f.split_at(0).is_err());
        assert!(f.split_at(3).is_err());
    }

    #[test]
    fn sup_norm_cases() {
        assert_eq!(spike(0.0, 1.0).sup_norm(), 1.0);
        let parab = PiecewiseFunction::single(
            iv(-2.0, 2.0),
            Polynomial::from_slice(&[-1.0, 0.0, 1.0]).unwrap(),
        );
        assert_eq!(parab.sup_norm(), 3.0);
        let atom_dominates = PiecewiseFunction::constant(iv(0.0, 1.0), 0.0)
            .with_atom(0, -4.0)
            .unwrap();
        assert_eq!(atom_dominates.sup_norm(), 4.0);
    }

    #[test]
    fn integral_cases() {
        assert_eq!(spike(0.0, 1.0).integral(), 0.0);
        let ident = PiecewiseFunction::single(iv(0.0, 1.0), Polynomial::linear(0.0, 1.0));
        assert_relative_eq!(ident.integral(), 0.5, max_relative = 1e-15);
    }

    #[test]
    fn lp_norm_cases() {
        let one = PiecewiseFunction::constant(iv(0.0, 2.0), 1.0);
        assert_relative_eq!(
            one.lp_norm(3.0).unwrap(),
            2f64.powf(1.0 / 3.0),
            max_relative = 1e-12
        );
        let ident = PiecewiseFunction::single(iv(0.0, 1.0), Polynomial::linear(0.0, 1.0));
        assert_relative_eq!(
            ident.lp_norm(2.0).unwrap(),
            (1.0f64 / 3.0).sqrt(),
            max_relative = 1e-12
        );
        assert!(ident.lp_norm(0.5).is_err());
        assert!(ident.lp_norm(f64::INFINITY).is_err());
        // atoms carry no mass
        assert_relative_eq!(spike(0.0, 1.0).lp_norm(2.0).unwrap(), 0.0, epsilon = 1e-15);
    }

    #[test]
    fn lp_norm_splits_at_sign_changes() {
        // |t| on [-1, 1] at p = 1 equals 1 exactly
        let f = PiecewiseFunction::single(iv(-1.0, 1.0), Polynomial::linear(0.0, 1.0));
        assert_relative_eq!(f.lp_norm(1.0).unwrap(), 1.0, max_relative = 1e-12);
    }

    #[test]
    fn scaling_and_offset() {
        let f = cubic_minus_t().with_atom(0, 2.0).unwrap();
        let tv = f.total_variation();
        let c = -2.5;
        assert_relative_eq!(
            f.scale(c).total_variation(),
            c.abs() * tv,
            max_relative = 1e-14
        );
        assert_relative_eq!(f.offset(7.0).total_variation(), tv, max_relative = 1e-14);
        assert_relative_eq!(
            f.scale(c).sup_norm(),
            c.abs() * f.sup_norm(),
            max_relative = 1e-14
        );
        let p = 2.0;
        assert_relative_eq!(
            f.scale(c).lp_norm(p).unwrap(),
            c.abs() * f.lp_norm(p).unwrap(),
            max_relative = 1e-10
        );
    }

    #[test]
    fn json_round_trip_is_value_lossless() {
        let f = PiecewiseFunction::new(
            vec![0.0, 0.125, 1.0],
            vec![
                Polynomial::from_slice(&[1.5, -0.25]).unwrap(),
                Polynomial::from_slice(&[0.0, 0.0, 0.5, -1.0]).unwrap(),
            ],
            [(1, -3.75), (2, 0.5)].into(),
        )
        .unwrap();
        let round = PiecewiseFunction::<f64>::from_json(&f.to_json()).unwrap();
        assert_eq!(f, round);
        assert_eq!(f.digest(), round.digest());
    }

    #[test]
    fn json_parse_errors() {
        // interval endpoints must match the breakpoints
        let bad = r#"{"interval":[0,2],"breakpoints":[0,1],"pieces":[[1]]}"#;
        assert!(PiecewiseFunction::<f64>::from_json(bad).is_err());
        // atom key must be a breakpoint
        let bad = r#"{"interval":[0,1],"breakpoints":[0,1],"pieces":[[1]],"atoms":{"0.5":2}}"#;
        assert!(PiecewiseFunction::<f64>::from_json(bad).is_err());
        // degree cap
        let bad = r#"{"interval":[0,1],"breakpoints":[0,1],"pieces":[[1,1,1,1,1]]}"#;
        assert!(PiecewiseFunction::<f64>::from_json(bad).is_err());
        let ok = r#"{"interval":[0,1],"breakpoints":[0,1],"pieces":[[1]],"atoms":{"1":3}}"#;
        let f = PiecewiseFunction::<f64>::from_json(ok).unwrap();
        assert_eq!(f.evaluate(1.0).unwrap(), 3.0);
    }

    proptest::proptest! {
        #![proptest_config(proptest::prelude::ProptestConfig::with_cases(64))]

        #[test]
        fn json_round_trip_any_corpus_function(seed in 0u64..1_000_000) {
            let f: PiecewiseFunction<f64> =
                crate::corpus::random_bv(seed, &crate::corpus::GeneratorProfile::default())
                    .unwrap();
            let back = PiecewiseFunction::<f64>::from_json(&f.to_json()).unwrap();
            proptest::prop_assert_eq!(&f, &back);
        }
    }

    #[test]
    fn digests_distinguish_functions() {
        let a = spike(0.0, 1.0);
        let b = spike(0.0, 1.0).scale(3.0);
        assert_ne!(a.digest(), b.digest());
        assert_eq!(a.digest(), spike(0.0, 1.0).digest());
    }
}
