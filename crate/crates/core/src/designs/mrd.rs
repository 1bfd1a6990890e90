use std::sync::Arc;

use crate::gf::{Elem, ExtensionContext, FieldContext};
use crate::linalg::Mat;
use crate::{Error, Limits, Result};

/// A rank-metric code of `rows×cols` matrices over `GF(q)`.
#[derive(Debug, Clone)]
pub struct MrdCode {
    pub rows: usize,
    pub cols: usize,
    pub min_rank_distance: usize,
    pub codewords: Vec<Mat>,
}

/// The dimension-one Gabidulin code of `b×s` matrices, `s ≥ b`.
///
/// The codeword for `a ∈ GF(q^s)` has row `i` equal to the coordinates of
/// `a·g_i`, where `g_1, …, g_b` are the first `b` elements of the fixed
/// extension basis. Codewords are listed by the index of `a`, so codeword 0
/// is the zero matrix. Every nonzero codeword, and every difference of two
/// codewords, has rank exactly `b`.
pub fn build_mrd_fullrank(base: &Arc<FieldContext>, b: usize, s: usize, limits: &Limits) -> Result<MrdCode> {
    if b == 0 || s < b {
        return Err(Error::BadParams(format!(
            "full-rank MRD code needs 1 <= b <= s, got b={b}, s={s}"
        )));
    }
    let ext = ExtensionContext::with_limit(base.clone(), s as u32, limits.field_order)?;
    let big = ext.big();
    let points = &ext.basis()[..b];
    let codewords = big
        .elements()
        .map(|a| {
            let rows: Vec<Vec<Elem>> = points.iter().map(|&g| ext.expand(big.mul(a, g))).collect();
            Mat::from_rows(&rows).expect("rows of length s")
        })
        .collect();
    Ok(MrdCode {
        rows: b,
        cols: s,
        min_rank_distance: b,
        codewords,
    })
}

/// One Gabidulin codeword: the coefficients `a_0, …, a_{t-1}` of the
/// linearized polynomial `f(x) = Σ a_j x^{q^j}` and its values at the
/// evaluation points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GabidulinWord {
    pub coeffs: Vec<Elem>,
    pub values: Vec<Elem>,
}

/// A Gabidulin code over `GF(q^m)` of length `n ≤ m` and dimension `t`.
#[derive(Debug, Clone)]
pub struct GabidulinCode {
    pub length: usize,
    pub dimension: usize,
    pub min_rank_distance: usize,
    /// Codeword `i` has coefficients given by the base-`q^m` digits of `i`,
    /// `a_0` least significant.
    pub codewords: Vec<GabidulinWord>,
}

impl GabidulinCode {
    /// The `n×m` matrix over `GF(q)` whose row `i` expands the `i`-th value.
    pub fn to_matrix(&self, ext: &ExtensionContext, word: &GabidulinWord) -> Mat {
        let rows: Vec<Vec<Elem>> = word.values.iter().map(|&v| ext.expand(v)).collect();
        Mat::from_rows(&rows).expect("rows of length m")
    }
}

/// Evaluates every linearized polynomial of `q`-degree below `t` at the first
/// `n` basis elements of `ext`.
pub fn build_gabidulin(ext: &ExtensionContext, n: usize, t: usize, limits: &Limits) -> Result<GabidulinCode> {
    let m = ext.degree() as usize;
    if n == 0 || n > m || t == 0 || t > n {
        return Err(Error::BadParams(format!(
            "Gabidulin code needs 1 <= t <= n <= m, got n={n}, t={t}, m={m}"
        )));
    }
    let big = ext.big();
    let qm = big.order() as u128;
    let count = qm.checked_pow(t as u32).unwrap_or(u128::MAX);
    limits.check("gabidulin codewords", count, limits.enumeration)?;
    let points = &ext.basis()[..n];
    // frob[j][i] = g_i^{q^j}
    let frob: Vec<Vec<Elem>> = (0..t)
        .map(|j| points.iter().map(|&g| ext.frobenius(g, j as u32)).collect())
        .collect();
    let mut codewords = Vec::with_capacity(count as usize);
    for idx in 0..count {
        let mut rest = idx;
        let coeffs: Vec<Elem> = (0..t)
            .map(|_| {
                let d = (rest % qm) as Elem;
                rest /= qm;
                d
            })
            .collect();
        let values = (0..n)
            .map(|i| {
                coeffs
                    .iter()
                    .zip(&frob)
                    .fold(0, |acc, (&a, fj)| big.add(acc, big.mul(a, fj[i])))
            })
            .collect();
        codewords.push(GabidulinWord { coeffs, values });
    }
    Ok(GabidulinCode {
        length: n,
        dimension: t,
        min_rank_distance: n - t + 1,
        codewords,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rank;

    fn gf2() -> Arc<FieldContext> {
        Arc::new(FieldContext::new(2, 1).unwrap())
    }

    fn diff(f: &FieldContext, a: &Mat, b: &Mat) -> Mat {
        let data = a.data().iter().zip(b.data()).map(|(&x, &y)| f.sub(x, y)).collect();
        Mat::from_vec(a.rows(), a.cols(), data).unwrap()
    }

    #[test]
    fn fullrank_2x2() {
        let f = gf2();
        let code = build_mrd_fullrank(&f, 2, 2, &Limits::default()).unwrap();
        assert_eq!(code.codewords.len(), 4);
        assert!(code.codewords[0].is_zero());
        for c in &code.codewords[1..] {
            assert_eq!(rank(&f, c), 2);
        }
        assert!(build_mrd_fullrank(&f, 3, 2, &Limits::default()).is_err());
    }

    #[test]
    fn fullrank_closed_under_scalars_gf3() {
        let f = Arc::new(FieldContext::new(3, 1).unwrap());
        let code = build_mrd_fullrank(&f, 2, 3, &Limits::default()).unwrap();
        assert_eq!(code.codewords.len(), 27);
        let set: std::collections::HashSet<&Mat> = code.codewords.iter().collect();
        for c in &code.codewords {
            let scaled = Mat::from_vec(c.rows(), c.cols(), c.data().iter().map(|&x| f.mul(2, x)).collect()).unwrap();
            assert!(set.contains(&scaled));
        }
        for (i, a) in code.codewords.iter().enumerate() {
            for b in &code.codewords[i + 1..] {
                assert_eq!(rank(&f, &diff(&f, a, b)), 2);
            }
        }
    }

    #[test]
    fn gabidulin_small() {
        let f = gf2();
        let l = Limits::default();
        let ext = ExtensionContext::new(f.clone(), 2).unwrap();
        let code = build_gabidulin(&ext, 2, 1, &l).unwrap();
        assert_eq!(code.codewords.len(), 4);
        for w in &code.codewords[1..] {
            assert_eq!(rank(&f, &code.to_matrix(&ext, w)), 2);
        }
        // t=1 coincides with the full-rank construction
        let mrd = build_mrd_fullrank(&f, 2, 2, &l).unwrap();
        for (w, m) in code.codewords.iter().zip(&mrd.codewords) {
            assert_eq!(&code.to_matrix(&ext, w), m);
        }
    }

    #[test]
    fn gabidulin_3_2_pairwise_distance() {
        let f = gf2();
        let ext = ExtensionContext::new(f.clone(), 3).unwrap();
        let code = build_gabidulin(&ext, 3, 2, &Limits::default()).unwrap();
        assert_eq!(code.codewords.len(), 64);
        assert_eq!(code.min_rank_distance, 2);
        let mats: Vec<Mat> = code.codewords.iter().map(|w| code.to_matrix(&ext, w)).collect();
        let mut min = usize::MAX;
        for i in 0..mats.len() {
            for j in i + 1..mats.len() {
                min = min.min(rank(&f, &diff(&f, &mats[i], &mats[j])));
            }
        }
        assert_eq!(min, 2);
        assert!(build_gabidulin(&ext, 4, 1, &Limits::default()).is_err());
        assert!(build_gabidulin(&ext, 2, 3, &Limits::default()).is_err());
    }
}
