use std::collections::BTreeMap;
use std::fmt;

use itertools::Itertools;
use rayon::prelude::*;
use serde::Serialize;

use super::{flat_weight, ArrayCode};
use crate::gf::Elem;
use crate::linalg::{axpy, rank};
use crate::{Error, Limits, Result};

/// Messages per parallel work unit, roughly.
const CHUNK_TARGET: u128 = 1 << 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum DistanceMethod {
    /// Scan of all `q^M` codewords.
    Exhaustive,
    /// Smallest set of thick columns of a parity-check matrix that is
    /// linearly dependent.
    ParityCheck,
}

impl fmt::Display for DistanceMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DistanceMethod::Exhaustive => "exhaustive",
            DistanceMethod::ParityCheck => "parity-check",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MinDistance {
    pub distance: usize,
    pub method: DistanceMethod,
    /// For the parity-check method: the columns carrying a minimum-weight
    /// codeword.
    pub support: Option<Vec<usize>>,
}

impl ArrayCode {
    /// `q^M`, saturating.
    pub fn message_count(&self) -> u128 {
        (self.q() as u128)
            .checked_pow(self.dim() as u32)
            .unwrap_or(u128::MAX)
    }

    /// Folds `step(acc, message, flattened codeword)` over every codeword.
    /// The message space is cut into ranges of fixed leading coordinates
    /// that are scanned in parallel and merged with `merge`; results do not
    /// depend on the split as long as `merge` is associative and commutative.
    pub fn fold_codewords<A, I, S, R>(&self, limits: &Limits, identity: I, step: S, merge: R) -> Result<A>
    where
        A: Send,
        I: Fn() -> A + Sync + Send,
        S: Fn(&mut A, &[Elem], &[Elem]) + Sync + Send,
        R: Fn(A, A) -> A + Sync + Send,
    {
        let total = self.message_count();
        limits.check("codeword scan", total, limits.exhaustive)?;
        let q = self.q() as u128;
        let m = self.dim();
        let mut prefix = 0;
        let mut inner = total;
        while prefix < m && inner > CHUNK_TARGET {
            prefix += 1;
            inner /= q;
        }
        let chunks = q.pow(prefix as u32) as u64;
        let result = (0..chunks)
            .into_par_iter()
            .map(|c| {
                let mut acc = identity();
                self.scan_chunk(c, prefix, &mut acc, &step);
                acc
            })
            .reduce(&identity, &merge);
        Ok(result)
    }

    fn scan_chunk<A>(&self, chunk: u64, prefix: usize, acc: &mut A, step: &impl Fn(&mut A, &[Elem], &[Elem])) {
        let f = self.field();
        let g = self.generator();
        let q = self.q();
        let m = self.dim();
        let mut msg = vec![0 as Elem; m];
        let mut c = chunk;
        for i in (0..prefix).rev() {
            msg[i] = (c % q as u64) as Elem;
            c /= q as u64;
        }
        let mut flat = vec![0 as Elem; g.cols()];
        for (i, &a) in msg.iter().enumerate().take(prefix) {
            axpy(f, &mut flat, a, g.row(i));
        }
        loop {
            step(acc, &msg, &flat);
            let mut k = m;
            loop {
                if k == prefix {
                    return;
                }
                k -= 1;
                let old = msg[k];
                let new = if old + 1 == q { 0 } else { old + 1 };
                msg[k] = new;
                axpy(f, &mut flat, f.sub(new, old), g.row(k));
                if new != 0 {
                    break;
                }
            }
        }
    }

    /// Weight → number of codewords, by exhaustive scan.
    pub fn weight_distribution(&self, limits: &Limits) -> Result<BTreeMap<usize, u64>> {
        let n = self.n();
        let b = self.b();
        let hist = self.fold_codewords(
            limits,
            || vec![0u64; n + 1],
            |h, _, w| h[flat_weight(b, w)] += 1,
            |mut a, b| {
                a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                a
            },
        )?;
        Ok(hist
            .into_iter()
            .enumerate()
            .filter(|&(_, c)| c > 0)
            .collect())
    }

    /// Minimum distance, exhaustively when `q^M` is within the limit and
    /// through the parity-check matrix otherwise.
    pub fn min_distance(&self, limits: &Limits) -> Result<MinDistance> {
        if self.dim() == 0 {
            return Err(Error::BadParams("the zero code has no minimum distance".into()));
        }
        if self.message_count() <= limits.exhaustive as u128 {
            let distance = self.min_distance_exhaustive(limits)?;
            return Ok(MinDistance {
                distance,
                method: DistanceMethod::Exhaustive,
                support: None,
            });
        }
        self.min_distance_parity(limits)
    }

    pub fn min_distance_exhaustive(&self, limits: &Limits) -> Result<usize> {
        let b = self.b();
        let none = usize::MAX;
        let d = self.fold_codewords(
            limits,
            || none,
            |best, _, w| {
                let wt = flat_weight(b, w);
                if wt > 0 && wt < *best {
                    *best = wt;
                }
            },
            usize::min,
        )?;
        Ok(d)
    }

    /// The smallest `|T|` for which the thick columns of `H` indexed by `T`
    /// are linearly dependent; such a dependency is a codeword supported
    /// on `T`. Subsets are tried by size, then lexicographically.
    pub fn min_distance_parity(&self, limits: &Limits) -> Result<MinDistance> {
        let f = self.field();
        let h = self.parity_check();
        let (n, b) = (self.n(), self.b());
        let mut budget = limits.exhaustive as u128;
        for s in 1..=n {
            let count = num_integer::binomial(n as u128, s as u128);
            if count > budget {
                return Err(Error::TooLarge {
                    what: "parity-check distance search",
                    count,
                    limit: limits.exhaustive,
                });
            }
            budget -= count;
            let subsets: Vec<Vec<usize>> = (0..n).combinations(s).collect();
            let hit = subsets.par_iter().find_first(|t| {
                let cols = t.iter().flat_map(|&j| j * b..(j + 1) * b);
                rank(f, &h.select_columns(cols)) < b * s
            });
            if let Some(t) = hit {
                return Ok(MinDistance {
                    distance: s,
                    method: DistanceMethod::ParityCheck,
                    support: Some(t.clone()),
                });
            }
        }
        Err(Error::Inconsistent("no dependent column set found".into()))
    }

    /// MDS in column units: `d = n − M/b + 1`.
    pub fn is_mds(&self, limits: &Limits) -> Result<bool> {
        self.mds_bound()?;
        let d = self.min_distance(limits)?.distance;
        self.is_mds_with(d)
    }

    pub fn is_mds_with(&self, distance: usize) -> Result<bool> {
        Ok(distance == self.mds_bound()?)
    }

    /// `n − M/b + 1`, defined when `b | M`.
    pub fn mds_bound(&self) -> Result<usize> {
        if !self.dim().is_multiple_of(self.b()) {
            return Err(Error::NotDivisible {
                b: self.b(),
                m: self.dim(),
            });
        }
        Ok(self.n() + 1 - self.dim() / self.b())
    }
}
