use std::collections::BTreeMap;
use std::fmt::Write;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::One;
use serde::Serialize;

use super::{ArrayCode, DistanceMethod};
use crate::{Error, Limits, Result};

/// Radius-1 ball data. `ratio = |C|·Φ₁ / q^{bn}`, reduced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Perfectness {
    pub ball_size: BigUint,
    pub space_size: BigUint,
    pub code_size: BigUint,
    pub ratio_num: BigUint,
    pub ratio_den: BigUint,
    pub is_perfect: bool,
}

/// `Φ₁ = 1 + n(q^b − 1)` and the exact packing ratio of radius-1 balls.
pub fn perfectness(c: &ArrayCode) -> Perfectness {
    let q = BigUint::from(c.q());
    let ball_size = BigUint::one() + BigUint::from(c.n()) * (q.pow(c.b() as u32) - 1u32);
    let space_size = q.pow((c.b() * c.n()) as u32);
    let code_size = q.pow(c.dim() as u32);
    let num = &code_size * &ball_size;
    let g = num.gcd(&space_size);
    Perfectness {
        ratio_num: &num / &g,
        ratio_den: &space_size / &g,
        is_perfect: num == space_size,
        ball_size,
        space_size,
        code_size,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Parameters {
    pub q: u32,
    pub b: usize,
    pub n: usize,
    #[serde(rename = "M")]
    pub m: usize,
    pub provenance: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CodeReport {
    pub parameters: Parameters,
    pub distance: Option<usize>,
    pub distance_method: Option<DistanceMethod>,
    pub weight_distribution: Option<BTreeMap<usize, u64>>,
    pub full_column_rank: bool,
    pub mds: Option<bool>,
    pub perfect: bool,
    pub ball_size: String,
    pub space_size: String,
    pub ratio_num: String,
    pub ratio_den: String,
    /// Analyses that were not run, with the reason.
    pub skipped: Vec<String>,
}

impl CodeReport {
    /// Runs every analysis that fits in `limits`; the rest are listed in
    /// `skipped`.
    pub fn build(c: &ArrayCode, limits: &Limits) -> Result<Self> {
        let mut skipped = Vec::new();
        let weight_distribution = match c.weight_distribution(limits) {
            Ok(wd) => Some(wd),
            Err(e @ Error::TooLarge { .. }) => {
                skipped.push(format!("weight_distribution: {e}"));
                None
            }
            Err(e) => return Err(e),
        };
        let (distance, distance_method) = match &weight_distribution {
            Some(wd) => (
                wd.keys().copied().find(|&w| w > 0),
                wd.keys().any(|&w| w > 0).then_some(DistanceMethod::Exhaustive),
            ),
            None => match c.min_distance(limits) {
                Ok(d) => (Some(d.distance), Some(d.method)),
                Err(e @ Error::TooLarge { .. }) => {
                    skipped.push(format!("distance: {e}"));
                    (None, None)
                }
                Err(e) => return Err(e),
            },
        };
        let mds = match (c.mds_bound(), distance) {
            (Ok(bound), Some(d)) => Some(d == bound),
            (Err(e), _) => {
                skipped.push(format!("mds: {e}"));
                None
            }
            (Ok(_), None) => {
                skipped.push("mds: distance unknown".into());
                None
            }
        };
        let p = perfectness(c);
        Ok(CodeReport {
            parameters: Parameters {
                q: c.q(),
                b: c.b(),
                n: c.n(),
                m: c.dim(),
                provenance: c.provenance().to_string(),
            },
            distance,
            distance_method,
            weight_distribution,
            full_column_rank: c.is_full_column_rank(),
            mds,
            perfect: p.is_perfect,
            ball_size: p.ball_size.to_string(),
            space_size: p.space_size.to_string(),
            ratio_num: p.ratio_num.to_string(),
            ratio_den: p.ratio_den.to_string(),
            skipped,
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// `key,value` rows, then one `weight,count` row per distribution entry.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("key,value\n");
        for (k, v) in self.scalar_fields() {
            writeln!(out, "{k},{v}").unwrap();
        }
        if let Some(wd) = &self.weight_distribution {
            out.push_str("weight,count\n");
            for (w, c) in wd {
                writeln!(out, "{w},{c}").unwrap();
            }
        }
        out
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (k, v) in self.scalar_fields() {
            writeln!(out, "{k:<18} {v}").unwrap();
        }
        if let Some(wd) = &self.weight_distribution {
            let parts: Vec<String> = wd.iter().map(|(w, c)| format!("{w}:{c}")).collect();
            writeln!(out, "{:<18} {}", "weights", parts.join(" ")).unwrap();
        }
        for s in &self.skipped {
            writeln!(out, "{:<18} {s}", "skipped").unwrap();
        }
        out
    }

    fn scalar_fields(&self) -> Vec<(&'static str, String)> {
        let opt = |x: Option<String>| x.unwrap_or_else(|| "-".into());
        let p = &self.parameters;
        vec![
            ("provenance", p.provenance.clone()),
            ("q", p.q.to_string()),
            ("b", p.b.to_string()),
            ("n", p.n.to_string()),
            ("M", p.m.to_string()),
            ("distance", opt(self.distance.map(|d| d.to_string()))),
            ("distance_method", opt(self.distance_method.map(|m| m.to_string()))),
            ("full_column_rank", self.full_column_rank.to_string()),
            ("mds", opt(self.mds.map(|m| m.to_string()))),
            ("perfect", self.perfect.to_string()),
            ("ball_size", self.ball_size.clone()),
            ("ratio", format!("{}/{}", self.ratio_num, self.ratio_den)),
        ]
    }
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::arraycode::{construction_spread, construction_std, StdScope};
    use crate::gf::FieldContext;

    fn gf(q: u32) -> Arc<FieldContext> {
        Arc::new(FieldContext::of_order(q).unwrap())
    }

    #[test]
    fn spread_dual_is_perfect() {
        let l = Limits::default();
        let d = construction_spread(gf(2), 4, 2, &l).unwrap().dual().unwrap();
        let p = perfectness(&d);
        assert_eq!(p.ball_size, BigUint::from(16u32));
        assert!(p.is_perfect);
        assert_eq!((p.ratio_num, p.ratio_den), (BigUint::one(), BigUint::one()));
    }

    #[test]
    fn report_fields() {
        let l = Limits::default();
        let c = construction_std(gf(2), 1, 3, 6, StdScope::Par(0), &l).unwrap();
        let r = CodeReport::build(&c, &l).unwrap();
        assert_eq!(r.distance, Some(7));
        assert_eq!(r.mds, Some(true));
        let json: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        for key in ["parameters", "distance", "weight_distribution", "mds", "perfect", "ratio_num", "ratio_den"] {
            assert!(json.get(key).is_some(), "missing {key}");
        }
        assert_eq!(json["weight_distribution"]["7"], 56);
        assert!(r.to_csv().contains("\nweight,count\n0,1\n7,56\n8,7\n"));
        assert!(r.to_text().contains("weights"));
    }

    #[test]
    fn oversized_scan_is_skipped_not_dropped() {
        let l = Limits {
            exhaustive: 16,
            ..Limits::default()
        };
        let c = construction_spread(gf(2), 6, 2, &Limits::default()).unwrap();
        let r = CodeReport::build(&c, &l).unwrap();
        assert!(r.weight_distribution.is_none());
        assert!(r.skipped.iter().any(|s| s.starts_with("weight_distribution")));
    }
}
