use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_traits::ToPrimitive;
use rayon::prelude::*;

use super::{build_mrd_fullrank, gaussian, DesignReport};
use crate::gf::{ExtensionContext, FieldContext};
use crate::linalg::{Mat, Subspace};
use crate::{Error, Limits, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SpreadMethod {
    /// Row spaces of echelon matrices `[0 | … | 0 | I_b | A]` with `A` from a
    /// full-rank MRD code. Admits recovery sets built from the unit subspaces.
    GabidulinEchelon,
    /// The cosets `x·GF(q^b)` inside `GF(q^M)`.
    Desarguesian,
}

impl fmt::Display for SpreadMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SpreadMethod::GabidulinEchelon => "gabidulin-echelon",
            SpreadMethod::Desarguesian => "desarguesian",
        })
    }
}

impl FromStr for SpreadMethod {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "gabidulin-echelon" | "gabidulin" => Ok(SpreadMethod::GabidulinEchelon),
            "desarguesian" => Ok(SpreadMethod::Desarguesian),
            _ => Err(Error::BadParams(format!("unknown spread method {s:?}"))),
        }
    }
}

/// A `b`-spread of `F_q^M`: `b`-dimensional subspaces partitioning the
/// nonzero vectors.
#[derive(Debug, Clone)]
pub struct SpreadDesign {
    pub ambient: usize,
    pub b: usize,
    pub blocks: Vec<Subspace>,
    pub method: SpreadMethod,
    /// Positions of the unit subspaces `U_i = rowspace[0 | … | I_b | … | 0]`,
    /// one per echelon level. Empty for the Desarguesian method.
    pub unit_indices: Vec<usize>,
}

pub fn build_spread(
    f: &Arc<FieldContext>,
    ambient: usize,
    b: usize,
    method: SpreadMethod,
    limits: &Limits,
) -> Result<SpreadDesign> {
    if b == 0 || ambient == 0 || !ambient.is_multiple_of(b) {
        return Err(Error::NotDivisible { b, m: ambient });
    }
    match method {
        SpreadMethod::GabidulinEchelon => gabidulin_spread(f, ambient, b, limits),
        SpreadMethod::Desarguesian => desarguesian_spread(f, ambient, b, limits),
    }
}

fn gabidulin_spread(f: &Arc<FieldContext>, ambient: usize, b: usize, limits: &Limits) -> Result<SpreadDesign> {
    let count = (f.order() as u128).checked_pow(ambient as u32).unwrap_or(u128::MAX);
    limits.check("spread blocks", count, limits.enumeration)?;
    let mut blocks = Vec::new();
    let mut unit_indices = Vec::new();
    for level in 1..=ambient / b {
        let offset = (level - 1) * b;
        let tail = ambient - level * b;
        let mut lifted = Mat::zeros(b, ambient);
        for i in 0..b {
            lifted.set(i, offset + i, 1);
        }
        unit_indices.push(blocks.len());
        if tail == 0 {
            blocks.push(Subspace::row_space(f, &lifted));
            continue;
        }
        let mrd = build_mrd_fullrank(f, b, tail, limits)?;
        for a in &mrd.codewords {
            for r in 0..b {
                lifted.row_mut(r)[offset + b..].copy_from_slice(a.row(r));
            }
            blocks.push(Subspace::row_space(f, &lifted));
        }
    }
    Ok(SpreadDesign {
        ambient,
        b,
        blocks,
        method: SpreadMethod::GabidulinEchelon,
        unit_indices,
    })
}

fn desarguesian_spread(f: &Arc<FieldContext>, ambient: usize, b: usize, limits: &Limits) -> Result<SpreadDesign> {
    let ext = ExtensionContext::with_limit(f.clone(), ambient as u32, limits.field_order)?;
    let big = ext.big();
    // GF(q^b) is the fixed field of the q^b-power map
    let mut sub_basis: Vec<Vec<u32>> = Vec::new();
    for x in big.elements().skip(1) {
        if ext.frobenius(x, b as u32) != x {
            continue;
        }
        let mut trial = sub_basis.clone();
        trial.push(ext.expand(x));
        if Subspace::span(f, ambient, &trial)?.dim() == trial.len() {
            sub_basis = trial;
        }
        if sub_basis.len() == b {
            break;
        }
    }
    let sub_basis: Vec<u32> = sub_basis
        .iter()
        .map(|v| ext.recombine(v))
        .collect::<Result<_>>()?;
    let mut blocks: Vec<Subspace> = big
        .elements()
        .skip(1)
        .map(|y| {
            let rows: Vec<Vec<u32>> = sub_basis.iter().map(|&k| ext.expand(big.mul(y, k))).collect();
            Subspace::span(f, ambient, &rows)
        })
        .collect::<Result<_>>()?;
    blocks.sort();
    blocks.dedup();
    Ok(SpreadDesign {
        ambient,
        b,
        blocks,
        method: SpreadMethod::Desarguesian,
        unit_indices: Vec::new(),
    })
}

/// Checks block dimensions, block count, pairwise trivial intersection and
/// coverage of every nonzero vector exactly once.
pub fn verify_spread(f: &FieldContext, d: &SpreadDesign, limits: &Limits) -> Result<DesignReport> {
    let q = f.order() as u64;
    let mut report = DesignReport::new(format!(
        "spread M={} b={} q={} method={}",
        d.ambient, d.b, q, d.method
    ));

    let bad_dim = d.blocks.iter().position(|s| s.dim() != d.b || s.ambient() != d.ambient);
    report.push(
        "block-dimension",
        format!("every block is a {}-dimensional subspace of F_q^{}", d.b, d.ambient),
        bad_dim.map(|i| format!("block {i} has dimension {}", d.blocks[i].dim())),
    );

    let expected = if d.b > 0 && d.ambient.is_multiple_of(d.b) {
        (gaussian(d.ambient, 1, q)? / gaussian(d.b, 1, q)?).to_usize()
    } else {
        None
    };
    report.push(
        "block-count",
        format!("{} blocks, expected {:?}", d.blocks.len(), expected),
        (expected != Some(d.blocks.len()))
            .then(|| format!("found {} blocks, expected {:?}", d.blocks.len(), expected)),
    );

    let n = d.blocks.len();
    let overlap = (0..n).into_par_iter().find_map_first(|i| {
        (i + 1..n).find_map(|j| {
            let dim = d.blocks[i].intersection_dim(f, &d.blocks[j]).ok()?;
            (dim != 0).then(|| format!("blocks {i} and {j} intersect in dimension {dim}"))
        })
    });
    report.push("pairwise-trivial-intersection", "distinct blocks meet only in 0", overlap);

    let space = (q as u128).checked_pow(d.ambient as u32).unwrap_or(u128::MAX);
    limits.check("spread coverage scan", space, limits.enumeration)?;
    let mut hits = vec![0u32; space as usize];
    for block in &d.blocks {
        for v in block.enumerate_vectors(f, limits.enumeration)? {
            hits[index_of(&v, q)] += 1;
        }
    }
    let bad = (1..hits.len()).find(|&i| hits[i] != 1);
    report.push(
        "covering",
        "every nonzero vector lies in exactly one block",
        bad.map(|i| format!("vector #{i} lies in {} blocks", hits[i])),
    );

    if d.method == SpreadMethod::GabidulinEchelon && !d.unit_indices.is_empty() {
        let bad = d.unit_indices.iter().enumerate().find_map(|(lvl, &idx)| {
            let mut m = Mat::zeros(d.b, d.ambient);
            for i in 0..d.b {
                m.set(i, lvl * d.b + i, 1);
            }
            let unit = Subspace::row_space(f, &m);
            (d.blocks.get(idx) != Some(&unit)).then(|| format!("block {idx} is not U_{}", lvl + 1))
        });
        report.push("unit-subspaces", "unit indices point at U_1..U_{M/b}", bad);
    }
    Ok(report)
}

/// Position of `v` in the lexicographic order of `F_q^M`.
pub(crate) fn index_of(v: &[u32], q: u64) -> usize {
    v.iter().fold(0usize, |acc, &x| acc * q as usize + x as usize)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(q: u32) -> Arc<FieldContext> {
        Arc::new(FieldContext::of_order(q).unwrap())
    }

    #[test]
    fn trivial_spread() {
        let f = gf(2);
        let s = build_spread(&f, 3, 3, SpreadMethod::GabidulinEchelon, &Limits::default()).unwrap();
        assert_eq!(s.blocks, vec![Subspace::full(3)]);
    }

    #[test]
    fn spread_4_2() {
        let f = gf(2);
        let l = Limits::default();
        let s = build_spread(&f, 4, 2, SpreadMethod::GabidulinEchelon, &l).unwrap();
        assert_eq!(s.blocks.len(), 5);
        assert_eq!(s.unit_indices, vec![0, 4]);
        let r = verify_spread(&f, &s, &l).unwrap();
        assert!(r.all_passed(), "{r:?}");
        assert_eq!(s.blocks[0].intersection_dim(&f, &s.blocks[1]).unwrap(), 0);
    }

    #[test]
    fn spread_6_2_counts() {
        let f = gf(2);
        let l = Limits::default();
        let s = build_spread(&f, 6, 2, SpreadMethod::GabidulinEchelon, &l).unwrap();
        assert_eq!(s.blocks.len(), 21);
        assert!(verify_spread(&f, &s, &l).unwrap().all_passed());
    }

    #[test]
    fn desarguesian_spreads() {
        let l = Limits::default();
        for (q, m, b) in [(2, 4, 2), (2, 6, 3), (3, 4, 2), (4, 4, 2), (2, 6, 2)] {
            let f = gf(q);
            let s = build_spread(&f, m, b, SpreadMethod::Desarguesian, &l).unwrap();
            let r = verify_spread(&f, &s, &l).unwrap();
            assert!(r.all_passed(), "q={q} M={m} b={b}: {r:?}");
        }
    }

    #[test]
    fn not_divisible() {
        let f = gf(2);
        assert_eq!(
            build_spread(&f, 5, 2, SpreadMethod::GabidulinEchelon, &Limits::default()).unwrap_err(),
            Error::NotDivisible { b: 2, m: 5 }
        );
    }

    #[test]
    fn overlapping_block_is_reported() {
        let f = gf(2);
        let l = Limits::default();
        let mut s = build_spread(&f, 4, 2, SpreadMethod::GabidulinEchelon, &l).unwrap();
        // a plane that shares e_1 with U_1
        s.blocks[1] = Subspace::span(&f, 4, &[[1, 0, 0, 0], [0, 0, 1, 0]]).unwrap();
        let r = verify_spread(&f, &s, &l).unwrap();
        assert!(!r.all_passed());
        let c = r.check("pairwise-trivial-intersection").unwrap();
        assert!(!c.passed);
        assert_eq!(
            c.counterexample.as_deref(),
            Some("blocks 0 and 1 intersect in dimension 1")
        );
        assert!(!r.check("covering").unwrap().passed);
    }
}
