//! Inequality reports and their flat CSV/JSON encodings.

use std::collections::BTreeMap;

use crate::scalar::{as_f64, Real};

/// CSV schema version stamped into every report header.
pub const CSV_SCHEMA_VERSION: u32 = 1;

/// Fixed, versioned column order (`schema=1`).
pub const CSV_HEADER: &str = "name,p,lhs,rhs,gap,ratio,function_digest,seed";

/// One evaluated inequality instance: both sides, their gap `rhs - lhs`,
/// their ratio, and enough metadata to reproduce the evaluation.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundReport<T> {
    pub name: String,
    pub lhs: T,
    pub rhs: T,
    pub gap: T,
    pub ratio: T,
    pub params: BTreeMap<String, T>,
    pub function_digest: String,
}

impl<T: Real> BoundReport<T> {
    pub fn new(
        name: impl Into<String>,
        lhs: T,
        rhs: T,
        params: BTreeMap<String, T>,
        function_digest: impl Into<String>,
    ) -> Self {
        let gap = rhs - lhs;
        let ratio = if rhs == T::zero() {
            if lhs == T::zero() {
                T::zero()
            } else {
                T::infinity()
            }
        } else {
            lhs / rhs
        };
        Self {
            name: name.into(),
            lhs,
            rhs,
            gap,
            ratio,
            params,
            function_digest: function_digest.into(),
        }
    }

    /// Whether the inequality holds up to roundoff:
    /// `gap >= -rel_tol * max(1, rhs)`.
    pub fn holds(&self, rel_tol: T) -> bool {
        self.gap >= -rel_tol * T::one().max(self.rhs)
    }

    /// CSV row in the `schema=1` column order; absent fields stay empty.
    pub fn csv_row(&self, seed: Option<u64>) -> String {
        let p = self
            .params
            .get("p")
            .map(|&v| format!("{v}"))
            .unwrap_or_default();
        let seed = seed.map(|s| s.to_string()).unwrap_or_default();
        format!(
            "{},{},{},{},{},{},{},{}",
            self.name, p, self.lhs, self.rhs, self.gap, self.ratio, self.function_digest, seed
        )
    }

    /// Flat JSON object carrying the same numeric fields as the CSV row plus
    /// any extra parameters (`x` for pointwise sweeps).
    pub fn json_row(&self, seed: Option<u64>) -> serde_json::Value {
        let mut obj = serde_json::Map::new();
        obj.insert("name".into(), self.name.clone().into());
        for (k, &v) in &self.params {
            obj.insert(k.clone(), as_f64(v).into());
        }
        obj.insert("lhs".into(), as_f64(self.lhs).into());
        obj.insert("rhs".into(), as_f64(self.rhs).into());
        obj.insert("gap".into(), as_f64(self.gap).into());
        obj.insert("ratio".into(), as_f64(self.ratio).into());
        obj.insert(
            "function_digest".into(),
            self.function_digest.clone().into(),
        );
        if let Some(s) = seed {
            obj.insert("seed".into(), s.into());
        }
        serde_json::Value::Object(obj)
    }
}

/// FNV-1a 64-bit, used for opaque function digests.
pub(crate) struct Fnv1a(u64);

impl Fnv1a {
    pub fn new() -> Self {
        Fnv1a(0xcbf2_9ce4_8422_2325)
    }

    pub fn write(&mut self, bytes: &[u8]) {
        for &b in bytes {
            self.0 ^= u64::from(b);
            self.0 = self.0.wrapping_mul(0x100_0000_01b3);
        }
    }

    pub fn write_u64(&mut self, v: u64) {
        self.write(&v.to_le_bytes());
    }

    pub fn write_f64(&mut self, v: f64) {
        self.write_u64(v.to_bits());
    }

    pub fn finish(&self) -> u64 {
        self.0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gap_and_ratio_conventions() {
        let r = BoundReport::new("x", 1.0, 2.0, BTreeMap::new(), "d");
        assert_eq!(r.gap, 1.0);
        assert_eq!(r.ratio, 0.5);
        assert!(r.holds(1e-9));

        let zero = BoundReport::new("x", 0.0, 0.0, BTreeMap::new(), "d");
        assert_eq!(zero.ratio, 0.0);
        assert!(zero.holds(1e-9));

        let violated = BoundReport::new("x", 2.0f64, 0.0, BTreeMap::new(), "d");
        assert!(violated.ratio.is_infinite());
        assert!(!violated.holds(1e-9));
    }

    #[test]
    fn holds_uses_relative_tolerance() {
        // tiny negative gap within tolerance of a large rhs
        let r = BoundReport::new("x", 100.0 + 5e-8, 100.0, BTreeMap::new(), "d");
        assert!(r.holds(1e-9));
        let r = BoundReport::new("x", 100.0 + 5e-7, 100.0, BTreeMap::new(), "d");
        assert!(!r.holds(1e-9));
    }

    #[test]
    fn csv_row_shape() {
        let mut params = BTreeMap::new();
        params.insert("p".to_string(), 2.0);
        let r = BoundReport::new("reverse_lp", 1.0, 4.0, params, "abcd");
        assert_eq!(r.csv_row(Some(7)), "reverse_lp,2,1,4,3,0.25,abcd,7");
        assert_eq!(
            r.csv_row(None).split(',').count(),
            CSV_HEADER.split(',').count()
        );
    }

    #[test]
    fn json_row_matches_csv_fields() {
        let mut params = BTreeMap::new();
        params.insert("p".to_string(), 2.0);
        let r = BoundReport::new("reverse_lp", 1.0, 4.0, params, "abcd");
        let v = r.json_row(Some(7));
        assert_eq!(v["lhs"], 1.0);
        assert_eq!(v["rhs"], 4.0);
        assert_eq!(v["gap"], 3.0);
        assert_eq!(v["p"], 2.0);
        assert_eq!(v["seed"], 7);
    }

    #[test]
    fn fnv_is_stable() {
        let mut h = Fnv1a::new();
        h.write(b"");
        assert_eq!(h.finish(), 0xcbf2_9ce4_8422_2325);
        let mut h = Fnv1a::new();
        h.write(b"a");
        assert_eq!(h.finish(), 0xaf63_dc4c_8601_ec8c);
    }
}
