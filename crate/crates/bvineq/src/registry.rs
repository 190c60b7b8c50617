//! Registry of analytic test functions on unbounded intervals.
//!
//! Lp norms over all of `ℝ` or `ℝ₊` are not computed numerically; each entry
//! carries closed-form norm values for `g`, `g'`, `g''` plus a growth
//! certificate for `TV(g')`. The JSON registry file holds only this data;
//! second derivatives needed to *verify* a certificate by sampled
//! integration are bound to well-known entry names in code.

use std::fmt;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::landau::{landau_l1_bound, landau_lalpha_bound, landau_sup_bound, VariationGrowth};
use crate::quadrature;
use crate::report::BoundReport;

/// Relative slack allowed when checking a sampled certificate.
pub const CERTIFICATE_SLACK: f64 = 1e-9;

/// Sampling windows for certificate verification.
const REAL_LINE_WINDOW: (f64, f64) = (-50.0, 50.0);
const HALF_LINE_WINDOW: (f64, f64) = (0.0, 100.0);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum IntervalKind {
    RealLine,
    HalfLine,
}

impl IntervalKind {
    pub fn sample_window(self) -> (f64, f64) {
        match self {
            IntervalKind::RealLine => REAL_LINE_WINDOW,
            IntervalKind::HalfLine => HALF_LINE_WINDOW,
        }
    }
}

/// One `(derivative order, exponent) → norm` table entry; `p` may be
/// `f64::INFINITY`, serialized as the string `"inf"`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct NormEntry {
    pub order: u8,
    #[serde(with = "p_exponent")]
    pub p: f64,
    pub value: f64,
}

mod p_exponent {
    use serde::de::{self, Visitor};
    use serde::{Deserializer, Serializer};

    pub fn serialize<S: Serializer>(p: &f64, s: S) -> Result<S::Ok, S::Error> {
        if p.is_infinite() {
            s.serialize_str("inf")
        } else {
            s.serialize_f64(*p)
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<f64, D::Error> {
        struct PVisitor;
        impl Visitor<'_> for PVisitor {
            type Value = f64;

            fn expecting(&self, f: &mut std::fmt::Formatter) -> std::fmt::Result {
                f.write_str("a number or the string \"inf\"")
            }

            fn visit_f64<E: de::Error>(self, v: f64) -> Result<f64, E> {
                Ok(v)
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> Result<f64, E> {
                Ok(v as f64)
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> Result<f64, E> {
                Ok(v as f64)
            }

            fn visit_str<E: de::Error>(self, v: &str) -> Result<f64, E> {
                match v {
                    "inf" => Ok(f64::INFINITY),
                    other => Err(E::custom(format!("unexpected exponent `{other}`"))),
                }
            }
        }
        d.deserialize_any(PVisitor)
    }
}

/// Growth certificate as stored on disk.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GrowthCertificate {
    pub v: f64,
    pub r: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AnalyticTestFunction {
    pub name: String,
    pub interval_kind: IntervalKind,
    pub norms: Vec<NormEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub growth: Option<GrowthCertificate>,
}

impl AnalyticTestFunction {
    pub fn norm(&self, order: u8, p: f64) -> Option<f64> {
        self.norms
            .iter()
            .find(|e| e.order == order && (e.p == p || (e.p.is_infinite() && p.is_infinite())))
            .map(|e| e.value)
    }

    pub fn require_norm(&self, order: u8, p: f64) -> Result<f64> {
        self.norm(order, p).ok_or_else(|| Error::MissingNorm {
            name: self.name.clone(),
            order,
            p: if p.is_infinite() {
                "inf".into()
            } else {
                format!("{p}")
            },
        })
    }

    pub fn growth_certificate(&self) -> Result<VariationGrowth<f64>> {
        let g = self.growth.ok_or_else(|| Error::MissingGrowthCertificate {
            name: self.name.clone(),
        })?;
        VariationGrowth::new(g.v, g.r)
    }

    pub fn validate(&self) -> Result<()> {
        let invalid = |reason: &str| Error::InvalidRegistryEntry {
            name: self.name.clone(),
            reason: reason.to_string(),
        };
        if self.name.is_empty() {
            return Err(invalid("empty name"));
        }
        if self.norms.is_empty() {
            return Err(invalid("empty norm table"));
        }
        for e in &self.norms {
            if e.order > 2 {
                return Err(invalid("derivative order exceeds 2"));
            }
            if e.p.is_nan() || e.p < 1.0 {
                return Err(invalid("norm exponent must be >= 1"));
            }
            if !(e.value.is_finite() && e.value > 0.0) {
                return Err(invalid("norm values must be positive and finite"));
            }
        }
        for (i, a) in self.norms.iter().enumerate() {
            if self.norms[i + 1..]
                .iter()
                .any(|b| b.order == a.order && b.p == a.p)
            {
                return Err(invalid("duplicate norm entry"));
            }
        }
        if let Some(g) = self.growth {
            VariationGrowth::new(g.v, g.r)?;
        }
        Ok(())
    }
}

const INF: f64 = f64::INFINITY;

fn entry(order: u8, p: f64, value: f64) -> NormEntry {
    NormEntry { order, p, value }
}

/// Built-in registry: six functions with hand-derived closed-form norms.
pub fn builtin_registry() -> Vec<AnalyticTestFunction> {
    use std::f64::consts::{E, PI};
    vec![
        // g = sin t: all three sup-norms are 1; no finite Lp norms exist on ℝ.
        AnalyticTestFunction {
            name: "sin".into(),
            interval_kind: IntervalKind::RealLine,
            norms: vec![entry(0, INF, 1.0), entry(1, INF, 1.0), entry(2, INF, 1.0)],
            growth: Some(GrowthCertificate { v: 1.0, r: 1.0 }),
        },
        // g = e^{-t^2}: g' = -2t e^{-t^2} peaks at t = 1/√2 with √(2/e);
        // ∫|g'| = 2, ||g'||_2 = (π/2)^{1/4}; g'' = (4t^2-2)e^{-t^2} peaks at 2,
        // ||g''||_2 = (3 √(π/2))^{1/2}.
        AnalyticTestFunction {
            name: "gaussian".into(),
            interval_kind: IntervalKind::RealLine,
            norms: vec![
                entry(0, INF, 1.0),
                entry(1, INF, (2.0 / E).sqrt()),
                entry(1, 1.0, 2.0),
                entry(1, 2.0, (PI / 2.0).sqrt().sqrt()),
                entry(2, INF, 2.0),
                entry(2, 2.0, (3.0 * (PI / 2.0).sqrt()).sqrt()),
            ],
            growth: Some(GrowthCertificate { v: 2.0, r: 1.0 }),
        },
        // g = 1/(1+t^2): g' = -2t/(1+t^2)^2, max 3√3/8 at t = 1/√3, ∫|g'| = 2,
        // ||g'||_2 = (π/4)^{1/2}; g'' = (6t^2-2)/(1+t^2)^3, max 2 at 0,
        // ||g''||_2 = (3π/4)^{1/2}.
        AnalyticTestFunction {
            name: "runge".into(),
            interval_kind: IntervalKind::RealLine,
            norms: vec![
                entry(0, INF, 1.0),
                entry(1, INF, 3.0 * 3.0f64.sqrt() / 8.0),
                entry(1, 1.0, 2.0),
                entry(1, 2.0, PI.sqrt() / 2.0),
                entry(2, INF, 2.0),
                entry(2, 2.0, (3.0 * PI / 4.0).sqrt()),
            ],
            growth: Some(GrowthCertificate { v: 2.0, r: 1.0 }),
        },
        // g = tanh t: g' = sech^2, ∫ sech^2 = 2, ∫ sech^4 = 4/3;
        // g'' = -2 sech^2 tanh, max 4√3/9; ||g''||_2^2 = 4(∫sech^4 - ∫sech^6) = 16/15.
        AnalyticTestFunction {
            name: "tanh".into(),
            interval_kind: IntervalKind::RealLine,
            norms: vec![
                entry(0, INF, 1.0),
                entry(1, INF, 1.0),
                entry(1, 1.0, 2.0),
                entry(1, 2.0, (4.0f64 / 3.0).sqrt()),
                entry(2, INF, 4.0 * 3.0f64.sqrt() / 9.0),
                entry(2, 2.0, (16.0f64 / 15.0).sqrt()),
            ],
            growth: Some(GrowthCertificate {
                v: 4.0 * 3.0f64.sqrt() / 9.0,
                r: 1.0,
            }),
        },
        // g = e^{-t} on ℝ₊: ||g^{(k)}||_∞ = 1, ||g'||_p = (1/p)^{1/p}.
        AnalyticTestFunction {
            name: "exp_decay".into(),
            interval_kind: IntervalKind::HalfLine,
            norms: vec![
                entry(0, INF, 1.0),
                entry(1, INF, 1.0),
                entry(1, 1.0, 1.0),
                entry(1, 2.0, 0.5f64.sqrt()),
                entry(2, INF, 1.0),
                entry(2, 2.0, 0.5f64.sqrt()),
            ],
            growth: Some(GrowthCertificate { v: 1.0, r: 1.0 }),
        },
        // g = 1/(1+t) on ℝ₊: g' = -(1+t)^{-2}, ||g'||_p = (2p-1)^{-1/p};
        // g'' = 2(1+t)^{-3}, ||g''||_p = 2(3p-1)^{-1/p}.
        AnalyticTestFunction {
            name: "reciprocal".into(),
            interval_kind: IntervalKind::HalfLine,
            norms: vec![
                entry(0, INF, 1.0),
                entry(1, INF, 1.0),
                entry(1, 1.0, 1.0),
                entry(1, 2.0, (1.0f64 / 3.0).sqrt()),
                entry(2, INF, 2.0),
                entry(2, 2.0, (4.0f64 / 5.0).sqrt()),
            ],
            growth: Some(GrowthCertificate { v: 2.0, r: 1.0 }),
        },
    ]
}

/// Second derivative of a built-in entry, for certificate verification.
pub fn second_derivative(name: &str) -> Option<fn(f64) -> f64> {
    match name {
        "sin" => Some(|t| -t.sin()),
        "gaussian" => Some(|t| (4.0 * t * t - 2.0) * (-t * t).exp()),
        "runge" => Some(|t| (6.0 * t * t - 2.0) / (1.0 + t * t).powi(3)),
        "tanh" => Some(|t| {
            let s = 1.0 / t.cosh();
            -2.0 * t.tanh() * s * s
        }),
        "exp_decay" => Some(|t| (-t).exp()),
        "reciprocal" => Some(|t| 2.0 / (1.0 + t).powi(3)),
        _ => None,
    }
}

/// Parse and validate a registry file.
pub fn registry_from_json(s: &str) -> Result<Vec<AnalyticTestFunction>> {
    let entries: Vec<AnalyticTestFunction> = serde_json::from_str(s)?;
    for e in &entries {
        e.validate()?;
    }
    Ok(entries)
}

pub fn registry_to_json(entries: &[AnalyticTestFunction]) -> String {
    serde_json::to_string_pretty(entries).expect("registry serializes")
}

/// Which derivative bounds an entry carries enough data for.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum BoundKind {
    Sup,
    L1,
    LAlpha(f64),
}

impl fmt::Display for BoundKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoundKind::Sup => write!(f, "sup"),
            BoundKind::L1 => write!(f, "l1"),
            BoundKind::LAlpha(a) => write!(f, "lalpha({a})"),
        }
    }
}

/// Bound kinds whose inputs (lhs norm, growth certificate, consumed norm)
/// are all present on the entry.
pub fn applicable_kinds(tf: &AnalyticTestFunction) -> Vec<BoundKind> {
    if tf.growth.is_none() || tf.norm(1, INF).is_none() {
        return Vec::new();
    }
    let mut kinds = Vec::new();
    if tf.norm(0, INF).is_some() {
        kinds.push(BoundKind::Sup);
    }
    if tf.norm(1, 1.0).is_some() {
        kinds.push(BoundKind::L1);
    }
    for e in &tf.norms {
        if e.order == 1 && e.p.is_finite() && e.p > 1.0 {
            kinds.push(BoundKind::LAlpha(e.p));
        }
    }
    kinds
}

/// Evaluate one derivative bound on a registry entry: lhs is the recorded
/// `||g'||_∞`, rhs the computed bound; a verified entry has gap >= 0.
pub fn landau_check(tf: &AnalyticTestFunction, kind: BoundKind) -> Result<BoundReport<f64>> {
    let lhs = tf.require_norm(1, INF)?;
    let growth = tf.growth_certificate()?;
    let mut params = std::collections::BTreeMap::new();
    let (name, rhs) = match kind {
        BoundKind::Sup => (
            "landau_sup",
            landau_sup_bound(tf.require_norm(0, INF)?, &growth)?,
        ),
        BoundKind::L1 => (
            "landau_l1",
            landau_l1_bound(tf.require_norm(1, 1.0)?, &growth)?,
        ),
        BoundKind::LAlpha(alpha) => {
            // exposed under the reports' `p` column
            params.insert("p".to_string(), alpha);
            (
                "landau_lalpha",
                landau_lalpha_bound(tf.require_norm(1, alpha)?, alpha, &growth)?,
            )
        }
    };
    Ok(BoundReport::new(name, lhs, rhs, params, tf.name.clone()))
}

/// Check `∫_a^b |g''| <= V |b-a|^r (1 + slack)` on `samples` random pairs
/// drawn from the entry's window. Returns `false` on the first violation.
pub fn verify_growth_certificate(
    tf: &AnalyticTestFunction,
    samples: usize,
    seed: u64,
) -> Result<bool> {
    let growth = tf.growth_certificate()?;
    let g2 = second_derivative(&tf.name).ok_or_else(|| Error::MissingEvaluator {
        name: tf.name.clone(),
    })?;
    let (lo, hi) = tf.interval_kind.sample_window();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..samples {
        let a = rng.random_range(lo..hi);
        let b = rng.random_range(lo..hi);
        if a == b {
            continue;
        }
        let (x0, x1) = if a < b { (a, b) } else { (b, a) };
        let variation = quadrature::integrate(|t| g2(t).abs(), x0, x1, 1e-12);
        let budget = growth.v() * (x1 - x0).powf(growth.r()) * (1.0 + CERTIFICATE_SLACK);
        if variation > budget {
            return Ok(false);
        }
    }
    Ok(true)
}
