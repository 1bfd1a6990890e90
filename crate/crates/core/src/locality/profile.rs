use rayon::prelude::*;
use serde::Serialize;

use super::recovery::{availability, node_locality, symbol_locality, Availability, RecoverySet, Target};
use crate::arraycode::ArrayCode;
use crate::{Error, Limits, Result};

/// Which availability values to compute.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct AvailabilityOptions {
    pub symbol: bool,
    pub node: bool,
}

impl AvailabilityOptions {
    pub fn both() -> Self {
        AvailabilityOptions { symbol: true, node: true }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TargetLocality {
    pub target: Target,
    pub r: usize,
    pub set: Vec<usize>,
}

/// Localities, availabilities and their witnesses. Values that could not
/// be computed are `None` with the reason in `skipped`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LocalityProfile {
    pub r_s: Option<usize>,
    pub r_n: Option<usize>,
    pub t_s: Option<usize>,
    pub t_n: Option<usize>,
    /// `exact` or `bound`.
    pub t_s_flag: Option<&'static str>,
    pub t_n_flag: Option<&'static str>,
    pub columns: Vec<TargetLocality>,
    pub symbols: Vec<TargetLocality>,
    pub symbol_availability: Vec<Availability>,
    pub node_availability: Vec<Availability>,
    pub skipped: Vec<String>,
    #[serde(skip)]
    pub symbol_sets: Vec<RecoverySet>,
    #[serde(skip)]
    pub node_sets: Vec<RecoverySet>,
}

fn summarize(sets: &[RecoverySet]) -> Vec<TargetLocality> {
    sets.iter()
        .map(|s| TargetLocality {
            target: s.target,
            r: s.size(),
            set: s.columns.clone(),
        })
        .collect()
}

fn soft<T>(res: Result<T>, what: &str, skipped: &mut Vec<String>) -> Result<Option<T>> {
    match res {
        Ok(v) => Ok(Some(v)),
        Err(e @ (Error::TooLarge { .. } | Error::NoRecovery(_))) => {
            skipped.push(format!("{what}: {e}"));
            Ok(None)
        }
        Err(e) => Err(e),
    }
}

fn code_availability(
    c: &ArrayCode,
    targets: Vec<Target>,
    r: usize,
    limits: &Limits,
) -> Result<(usize, &'static str, Vec<Availability>)> {
    let all: Vec<Availability> = targets
        .into_par_iter()
        .map(|t| availability(c, t, r, limits))
        .collect::<Result<_>>()?;
    let t = all.iter().map(|a| a.t).min().unwrap_or(0);
    let flag = if all.iter().all(|a| a.exact) { "exact" } else { "bound" };
    Ok((t, flag, all))
}

impl LocalityProfile {
    pub fn compute(c: &ArrayCode, avail: AvailabilityOptions, limits: &Limits) -> Result<Self> {
        let mut skipped = Vec::new();
        let sym = soft(symbol_locality(c, limits), "symbol locality", &mut skipped)?;
        let node = soft(node_locality(c, limits), "node locality", &mut skipped)?;
        let (r_s, symbol_sets) = sym.map_or((None, Vec::new()), |(r, s)| (Some(r), s));
        let (r_n, node_sets) = node.map_or((None, Vec::new()), |(r, s)| (Some(r), s));

        let mut profile = LocalityProfile {
            r_s,
            r_n,
            t_s: None,
            t_n: None,
            t_s_flag: None,
            t_n_flag: None,
            columns: summarize(&node_sets),
            symbols: summarize(&symbol_sets),
            symbol_availability: Vec::new(),
            node_availability: Vec::new(),
            skipped,
            symbol_sets,
            node_sets,
        };
        if avail.symbol {
            if let Some(r) = r_s {
                let targets = profile.symbol_sets.iter().map(|s| s.target).collect();
                if let Some((t, flag, all)) =
                    soft(code_availability(c, targets, r, limits), "symbol availability", &mut profile.skipped)?
                {
                    profile.t_s = Some(t);
                    profile.t_s_flag = Some(flag);
                    profile.symbol_availability = all;
                }
            }
        }
        if avail.node {
            if let Some(r) = r_n {
                let targets = (0..c.n()).map(Target::Node).collect();
                if let Some((t, flag, all)) =
                    soft(code_availability(c, targets, r, limits), "node availability", &mut profile.skipped)?
                {
                    profile.t_n = Some(t);
                    profile.t_n_flag = Some(flag);
                    profile.node_availability = all;
                }
            }
        }
        Ok(profile)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("profile serializes")
    }
}
