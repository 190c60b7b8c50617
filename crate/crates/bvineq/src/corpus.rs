//! Deterministic seeded generation of random BV test functions.
//!
//! Shapes are drawn from a ChaCha8 stream in `f64` and only then lifted into
//! the working scalar type, so a given `(seed, profile)` pair denotes the
//! same function everywhere. Corpus items use per-index derived seeds, which
//! keeps sweeps independent of evaluation order.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::piecewise::PiecewiseFunction;
use crate::poly::Polynomial;
use crate::scalar::{real, Real};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ProfileKind {
    /// Piecewise-constant steps.
    Step,
    /// Continuous zigzag of linear pieces.
    Sawtooth,
    /// Independent random cubics per piece.
    Poly,
    /// Random degree 0..=3 per piece.
    Mixed,
}

impl FromStr for ProfileKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "step" => Ok(Self::Step),
            "sawtooth" => Ok(Self::Sawtooth),
            "poly" => Ok(Self::Poly),
            "mixed" => Ok(Self::Mixed),
            other => Err(Error::UnknownProfile(other.to_string())),
        }
    }
}

impl fmt::Display for ProfileKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Self::Step => "step",
            Self::Sawtooth => "sawtooth",
            Self::Poly => "poly",
            Self::Mixed => "mixed",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct GeneratorProfile {
    pub kind: ProfileKind,
    /// Number of polynomial pieces (>= 1).
    pub pieces: usize,
    /// Range the drawn values/coefficients are taken from.
    pub value_range: (f64, f64),
    /// Range the interval endpoints are drawn from (width >= 1).
    pub interval_range: (f64, f64),
    /// Per-breakpoint probability of pinning an atom.
    pub atom_probability: f64,
}

impl Default for GeneratorProfile {
    fn default() -> Self {
        Self {
            kind: ProfileKind::Mixed,
            pieces: 6,
            value_range: (-4.0, 4.0),
            interval_range: (-2.0, 2.0),
            atom_probability: 0.3,
        }
    }
}

impl GeneratorProfile {
    pub fn with_kind(kind: ProfileKind) -> Self {
        Self {
            kind,
            ..Self::default()
        }
    }

    fn validate(&self) -> Result<()> {
        if self.pieces == 0 {
            return Err(Error::InvalidProfile("piece count must be >= 1".into()));
        }
        if !(self.value_range.0.is_finite()
            && self.value_range.1.is_finite()
            && self.value_range.0 < self.value_range.1)
        {
            return Err(Error::InvalidProfile("value range must be nonempty".into()));
        }
        if !(self.interval_range.0.is_finite()
            && self.interval_range.1.is_finite()
            && self.interval_range.1 - self.interval_range.0 >= 1.0)
        {
            return Err(Error::InvalidProfile(
                "interval range must span at least 1".into(),
            ));
        }
        if !(0.0..=1.0).contains(&self.atom_probability) {
            return Err(Error::InvalidProfile(
                "atom probability must lie in [0, 1]".into(),
            ));
        }
        Ok(())
    }
}

/// Seed for corpus item `index` under `master` (SplitMix64 finalizer), so
/// per-item streams never overlap and are order-independent.
pub fn corpus_seed(master: u64, index: u64) -> u64 {
    let mut z = master.wrapping_add(index.wrapping_add(1).wrapping_mul(0x9e37_79b9_7f4a_7c15));
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Deterministic random BV function for `(seed, profile)`.
pub fn random_bv<T: Real>(seed: u64, profile: &GeneratorProfile) -> Result<PiecewiseFunction<T>> {
    profile.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (vlo, vhi) = profile.value_range;
    let n = profile.pieces;

    // Interval: left endpoint first, then at least width 0.5.
    let (ilo, ihi) = profile.interval_range;
    let a = rng.random_range(ilo..ihi - 0.5);
    let b = rng.random_range(a + 0.5..ihi);

    // Strictly increasing interior breakpoints; collisions are measure-zero
    // but a minimum gap keeps the pieces well separated.
    let breakpoints = loop {
        let mut pts: Vec<f64> = (0..n - 1).map(|_| rng.random_range(a..b)).collect();
        pts.sort_by(|x, y| x.partial_cmp(y).expect("finite draws"));
        let mut all = Vec::with_capacity(n + 1);
        all.push(a);
        all.extend(pts);
        all.push(b);
        let min_gap = (b - a) * 1e-6;
        if all.windows(2).all(|w| w[1] - w[0] > min_gap) {
            break all;
        }
    };

    let value = |rng: &mut ChaCha8Rng| rng.random_range(vlo..vhi);
    let mut pieces: Vec<Polynomial<T>> = Vec::with_capacity(n);
    match profile.kind {
        ProfileKind::Step => {
            for _ in 0..n {
                pieces.push(Polynomial::constant(real(value(&mut rng))));
            }
        }
        ProfileKind::Sawtooth => {
            // connected zigzag through alternating low/high levels
            let mid = 0.5 * (vlo + vhi);
            let mut levels = Vec::with_capacity(n + 1);
            for i in 0..=n {
                let y = if i % 2 == 0 {
                    rng.random_range(vlo..mid)
                } else {
                    rng.random_range(mid..vhi)
                };
                levels.push(y);
            }
            for i in 0..n {
                let (t0, t1) = (breakpoints[i], breakpoints[i + 1]);
                let slope = (levels[i + 1] - levels[i]) / (t1 - t0);
                pieces.push(Polynomial::linear(
                    real(levels[i] - slope * t0),
                    real(slope),
                ));
            }
        }
        ProfileKind::Poly => {
            for _ in 0..n {
                let c: Vec<T> = (0..4).map(|_| real(value(&mut rng))).collect();
                pieces.push(Polynomial::from_slice(&c)?);
            }
        }
        ProfileKind::Mixed => {
            for _ in 0..n {
                let degree = rng.random_range(0..=3usize);
                let c: Vec<T> = (0..=degree).map(|_| real(value(&mut rng))).collect();
                pieces.push(Polynomial::from_slice(&c)?);
            }
        }
    }

    let mut atoms = BTreeMap::new();
    for idx in 0..=n {
        if rng.random_bool(profile.atom_probability) {
            atoms.insert(idx, real::<T>(value(&mut rng)));
        }
    }

    PiecewiseFunction::new(breakpoints.into_iter().map(real).collect(), pieces, atoms)
}

/// The seeded corpus `[(item_seed, f)]` of `count` functions under `master`.
pub fn corpus<T: Real>(
    master: u64,
    count: usize,
    profile: &GeneratorProfile,
) -> Result<Vec<(u64, PiecewiseFunction<T>)>> {
    (0..count as u64)
        .map(|i| {
            let s = corpus_seed(master, i);
            Ok((s, random_bv(s, profile)?))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn profile_names_parse() {
        assert_eq!("step".parse::<ProfileKind>().unwrap(), ProfileKind::Step);
        assert_eq!("mixed".parse::<ProfileKind>().unwrap(), ProfileKind::Mixed);
        assert!(matches!(
            "nope".parse::<ProfileKind>(),
            Err(Error::UnknownProfile(_))
        ));
        assert_eq!(ProfileKind::Sawtooth.to_string(), "sawtooth");
    }

    #[test]
    fn same_seed_same_function() {
        let profile = GeneratorProfile::with_kind(ProfileKind::Step);
        let f: PiecewiseFunction<f64> = random_bv(1, &profile).unwrap();
        let g: PiecewiseFunction<f64> = random_bv(1, &profile).unwrap();
        assert_eq!(f, g);
        assert_eq!(f.digest(), g.digest());
    }

    #[test]
    fn different_seeds_differ() {
        let profile = GeneratorProfile::with_kind(ProfileKind::Step);
        let f: PiecewiseFunction<f64> = random_bv(1, &profile).unwrap();
        let g: PiecewiseFunction<f64> = random_bv(2, &profile).unwrap();
        assert_ne!(f, g);
    }

    #[test]
    fn profile_validation() {
        let p = GeneratorProfile {
            pieces: 0,
            ..Default::default()
        };
        assert!(random_bv::<f64>(0, &p).is_err());
        let p = GeneratorProfile {
            value_range: (1.0, 1.0),
            ..Default::default()
        };
        assert!(random_bv::<f64>(0, &p).is_err());
        let p = GeneratorProfile {
            atom_probability: 1.5,
            ..Default::default()
        };
        assert!(random_bv::<f64>(0, &p).is_err());
    }

    #[test]
    fn generated_functions_satisfy_invariants() {
        for kind in [
            ProfileKind::Step,
            ProfileKind::Sawtooth,
            ProfileKind::Poly,
            ProfileKind::Mixed,
        ] {
            let profile = GeneratorProfile::with_kind(kind);
            for seed in 0..500 {
                // `new` revalidates everything; finite norms are the fuzz oracle
                let f: PiecewiseFunction<f64> = random_bv(seed, &profile).unwrap();
                assert!(f.total_variation().is_finite());
                assert!(f.sup_norm().is_finite());
                assert_eq!(f.piece_count(), profile.pieces);
            }
        }
    }

    #[test]
    fn sawtooth_is_continuous() {
        let profile = GeneratorProfile {
            kind: ProfileKind::Sawtooth,
            atom_probability: 0.0,
            ..Default::default()
        };
        let f: PiecewiseFunction<f64> = random_bv(9, &profile).unwrap();
        for (i, w) in f.breakpoints().windows(2).enumerate().skip(1) {
            let left = f.pieces()[i - 1].eval(w[0]);
            let right = f.pieces()[i].eval(w[0]);
            assert!((left - right).abs() < 1e-9 * (1.0 + left.abs()));
        }
    }

    #[test]
    fn corpus_seeds_are_order_independent() {
        assert_eq!(corpus_seed(0, 3), corpus_seed(0, 3));
        assert_ne!(corpus_seed(0, 3), corpus_seed(0, 4));
        assert_ne!(corpus_seed(0, 3), corpus_seed(1, 3));
        let c: Vec<(u64, PiecewiseFunction<f64>)> =
            corpus(42, 5, &GeneratorProfile::default()).unwrap();
        let f3: PiecewiseFunction<f64> =
            random_bv(corpus_seed(42, 3), &GeneratorProfile::default()).unwrap();
        assert_eq!(c[3].1, f3);
    }
}
