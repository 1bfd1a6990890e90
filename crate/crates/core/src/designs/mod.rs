//! Subspace combinatorics: Gaussian coefficients, Grassmannians, rank-metric
//! codes, spreads and resolvable subspace transversal designs.

pub mod dump;
mod mrd;
mod report;
mod spread;
mod transversal;

pub use mrd::{build_gabidulin, build_mrd_fullrank, GabidulinCode, GabidulinWord, MrdCode};
pub use report::{DesignReport, PropertyCheck};
pub use spread::{build_spread, verify_spread, SpreadDesign, SpreadMethod};
pub use transversal::{build_std, verify_std, TransversalDesign};

use itertools::Itertools;
use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::gf::{Elem, FieldContext};
use crate::linalg::{Mat, Subspace};
use crate::{Error, Limits, Result};

/// The Gaussian coefficient `[n k]_q`: the number of `k`-dimensional
/// subspaces of an `n`-dimensional space over `GF(q)`.
pub fn gaussian(n: usize, k: usize, q: u64) -> Result<BigUint> {
    if k > n {
        return Err(Error::OutOfRange(format!("gaussian({n}, {k}) needs k <= n")));
    }
    if q < 2 {
        return Err(Error::OutOfRange(format!("field order {q} < 2")));
    }
    let q = BigUint::from(q);
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for i in 0..k {
        num *= q.pow((n - i) as u32) - 1u32;
        den *= q.pow((k - i) as u32) - 1u32;
    }
    Ok(num / den)
}

/// [`gaussian`] narrowed to `u128`, failing with `OutOfRange` on overflow.
pub fn gaussian_u128(n: usize, k: usize, q: u64) -> Result<u128> {
    gaussian(n, k, q)?
        .to_u128()
        .ok_or_else(|| Error::OutOfRange(format!("gaussian({n}, {k}, {q}) overflows u128")))
}

/// Number of `k2`-dimensional subspaces of `F_q^n` meeting a fixed
/// `k`-dimensional subspace in exactly `i` dimensions:
/// `q^{(k2-i)(k-i)} [n-k, k2-i] [k, i]`.
pub fn count_intersecting(n: usize, k: usize, k2: usize, i: usize, q: u64) -> Result<BigUint> {
    if k > n || k2 > n || i > k.min(k2) || k2 - i > n - k {
        return Err(Error::OutOfRange(format!(
            "count_intersecting(n={n}, k={k}, k'={k2}, i={i})"
        )));
    }
    let pow = BigUint::from(q).pow(((k2 - i) * (k - i)) as u32);
    Ok(pow * gaussian(n - k, k2 - i, q)? * gaussian(k, i, q)?)
}

/// All `k`-dimensional subspaces of `F_q^M`, sorted by their canonical bases.
pub fn enumerate_grassmannian(
    f: &FieldContext,
    ambient: usize,
    k: usize,
    limits: &Limits,
) -> Result<Vec<Subspace>> {
    let count = gaussian(ambient, k, f.order() as u64)?;
    let count = count.to_u128().unwrap_or(u128::MAX);
    limits.check("grassmannian", count, limits.enumeration)?;
    let q = f.order();
    let mut out = Vec::with_capacity(count as usize);
    for pivots in (0..ambient).combinations(k) {
        // free entries sit right of each row's pivot, outside pivot columns
        let free: Vec<(usize, usize)> = pivots
            .iter()
            .enumerate()
            .flat_map(|(r, &p)| {
                let pivots = &pivots;
                (p + 1..ambient)
                    .filter(move |c| !pivots.contains(c))
                    .map(move |c| (r, c))
            })
            .collect();
        let mut m = Mat::zeros(k, ambient);
        for (r, &p) in pivots.iter().enumerate() {
            m.set(r, p, 1);
        }
        let mut vals = vec![0 as Elem; free.len()];
        loop {
            for (&(r, c), &v) in free.iter().zip(&vals) {
                m.set(r, c, v);
            }
            out.push(Subspace::row_space(f, &m));
            let mut i = free.len();
            let done = loop {
                if i == 0 {
                    break true;
                }
                i -= 1;
                vals[i] += 1;
                if vals[i] < q {
                    break false;
                }
                vals[i] = 0;
            };
            if done {
                break;
            }
        }
    }
    out.sort();
    Ok(out)
}

/// Scales a nonzero vector so its first nonzero entry is 1.
pub fn normalize(f: &FieldContext, v: &[Elem]) -> Option<Vec<Elem>> {
    let lead = *v.iter().find(|&&x| x != 0)?;
    let inv = f.inv(lead).ok()?;
    Some(v.iter().map(|&x| f.mul(x, inv)).collect())
}

/// The distinct 1-dimensional subspaces of `s`, as normalized vectors in
/// lexicographic order.
pub fn projective_points(f: &FieldContext, s: &Subspace, limits: &Limits) -> Result<Vec<Vec<Elem>>> {
    let mut pts: Vec<Vec<Elem>> = s
        .enumerate_vectors(f, limits.enumeration)?
        .iter()
        .filter_map(|v| normalize(f, v))
        .collect();
    pts.sort();
    pts.dedup();
    Ok(pts)
}

pub(crate) fn big_to_u128(x: &BigUint) -> u128 {
    if x.is_zero() {
        0
    } else {
        x.to_u128().unwrap_or(u128::MAX)
    }
}
