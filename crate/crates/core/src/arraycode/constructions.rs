use std::collections::HashSet;
use std::sync::Arc;

use super::{ArrayCode, Provenance};
use crate::designs::{build_spread, build_std, enumerate_grassmannian, gaussian, SpreadMethod};
use crate::gf::FieldContext;
use crate::linalg::{rank, Mat, Subspace};
use crate::{Error, Limits, Result};

/// Which blocks of a resolvable transversal design become columns.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StdScope {
    /// One parallel class, by index.
    Par(usize),
    /// Every block, class by class.
    Full,
}

/// Builds the code whose thick column `j` is the transposed RREF basis of
/// `subspaces[j]`, right-padded with zero columns up to width `b`.
pub fn code_from_subspaces(
    field: Arc<FieldContext>,
    subspaces: &[Subspace],
    b: usize,
    provenance: Provenance,
) -> Result<ArrayCode> {
    let ambient = subspaces
        .first()
        .map(|s| s.ambient())
        .ok_or_else(|| Error::BadParams("no subspaces given".into()))?;
    if b == 0 {
        return Err(Error::BadParams("b must be positive".into()));
    }
    let mut g = Mat::zeros(ambient, b * subspaces.len());
    for (j, s) in subspaces.iter().enumerate() {
        if s.ambient() != ambient {
            return Err(Error::AmbientMismatch(ambient, s.ambient()));
        }
        if s.dim() > b {
            return Err(Error::DimensionTooLarge { dim: s.dim(), b });
        }
        for (i, row) in (0..s.dim()).map(|r| s.basis().row(r)).enumerate() {
            for (k, &x) in row.iter().enumerate() {
                g.set(k, j * b + i, x);
            }
        }
    }
    let r = rank(&field, &g);
    if r != ambient {
        return Err(Error::RankDeficient { rank: r, expected: ambient });
    }
    ArrayCode::from_generator(field, b, g, provenance)
}

/// Every `b`-dimensional subspace of `F_q^M`, once each, in canonical order.
pub fn construction_all_subspaces(field: Arc<FieldContext>, m: usize, b: usize, limits: &Limits) -> Result<ArrayCode> {
    if b == 0 || b > m {
        return Err(Error::BadParams(format!("need 1 <= b <= M, got b={b}, M={m}")));
    }
    let blocks = enumerate_grassmannian(&field, m, b, limits)?;
    let prov = Provenance::new("all-subspaces").with("M", m).with("b", b);
    code_from_subspaces(field, &blocks, b, prov)
}

/// The spread code on the Gabidulin echelon spread.
pub fn construction_spread(field: Arc<FieldContext>, m: usize, b: usize, limits: &Limits) -> Result<ArrayCode> {
    construction_spread_with(field, m, b, SpreadMethod::GabidulinEchelon, limits)
}

pub fn construction_spread_with(
    field: Arc<FieldContext>,
    m: usize,
    b: usize,
    method: SpreadMethod,
    limits: &Limits,
) -> Result<ArrayCode> {
    let spread = build_spread(&field, m, b, method, limits)?;
    let prov = Provenance::new("spread")
        .with("M", m)
        .with("b", b)
        .with("method", method);
    code_from_subspaces(field, &spread.blocks, b, prov)
}

/// Wraps an arbitrary set of distinct, equal-dimensional blocks. When the
/// blocks form a q-Steiner system the detected strengths are recorded in the
/// provenance under `steiner`.
pub fn construction_from_blocks(field: Arc<FieldContext>, blocks: &[Subspace], limits: &Limits) -> Result<ArrayCode> {
    let first = blocks
        .first()
        .ok_or_else(|| Error::BadParams("empty block set".into()))?;
    let b = first.dim();
    let mut seen = HashSet::new();
    for (i, s) in blocks.iter().enumerate() {
        if s.dim() != b {
            return Err(Error::MixedDimensions(b, s.dim()));
        }
        if !seen.insert(s) {
            return Err(Error::DuplicateBlock(i));
        }
    }
    let mut prov = Provenance::new("blocks").with("M", first.ambient()).with("b", b);
    if let Some(ts) = steiner_strengths(&field, blocks, limits) {
        if !ts.is_empty() {
            let ts: Vec<String> = ts.iter().map(|t| t.to_string()).collect();
            prov = prov.with("steiner", ts.join(","));
        }
    }
    code_from_subspaces(field, blocks, b, prov)
}

/// The strengths `t` for which every `t`-subspace of the ambient space lies
/// in exactly one block. `None` when the scan would exceed the enumeration
/// limit.
pub fn steiner_strengths(f: &FieldContext, blocks: &[Subspace], limits: &Limits) -> Option<Vec<usize>> {
    let first = blocks.first()?;
    let (m, b) = (first.ambient(), first.dim());
    let q = f.order() as u64;
    let mut out = Vec::new();
    for t in 1..=b {
        let per_block = gaussian(b, t, q).ok()?;
        let total = gaussian(m, t, q).ok()?;
        if per_block.clone() * blocks.len() != total {
            continue;
        }
        let work = crate::designs::big_to_u128(&total);
        limits.check("steiner scan", work, limits.enumeration).ok()?;
        let local = enumerate_grassmannian(f, b, t, limits).ok()?;
        let mut seen = HashSet::new();
        let exact = blocks.iter().all(|blk| {
            local.iter().all(|l| {
                let img = l.basis().mul(f, blk.basis()).expect("shapes agree");
                seen.insert(Subspace::row_space(f, &img))
            })
        });
        if exact {
            out.push(t);
        }
    }
    Some(out)
}

/// Codes from a resolvable transversal design with `m = M − b`.
pub fn construction_std(
    field: Arc<FieldContext>,
    t: usize,
    b: usize,
    m: usize,
    scope: StdScope,
    limits: &Limits,
) -> Result<ArrayCode> {
    if m < 2 * b || t == 0 || t > b || b == 0 {
        return Err(Error::BadParams(format!(
            "need M >= 2b and 1 <= t <= b <= M-b, got t={t}, b={b}, M={m}"
        )));
    }
    let design = build_std(&field, t, b, m - b, limits)?;
    let (blocks, prov) = match scope {
        StdScope::Par(class) => (
            design.class_blocks(class)?,
            Provenance::new("std-par")
                .with("t", t)
                .with("b", b)
                .with("M", m)
                .with("class", class),
        ),
        StdScope::Full => (
            design
                .classes
                .iter()
                .flatten()
                .map(|&i| design.blocks[i].clone())
                .collect(),
            Provenance::new("std-full").with("t", t).with("b", b).with("M", m),
        ),
    };
    code_from_subspaces(field, &blocks, b, prov)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(q: u32) -> Arc<FieldContext> {
        Arc::new(FieldContext::of_order(q).unwrap())
    }

    #[test]
    fn parameters() {
        let l = Limits::default();
        let c = construction_all_subspaces(gf(2), 3, 2, &l).unwrap();
        assert_eq!((c.b(), c.n(), c.dim()), (2, 7, 3));
        assert!(c.is_full_column_rank());
        let c = construction_spread(gf(2), 6, 3, &l).unwrap();
        assert_eq!(c.n(), 9);
        let c = construction_std(gf(2), 1, 3, 6, StdScope::Par(0), &l).unwrap();
        assert_eq!(c.summary(), "[3x8, 6]");
        let c = construction_std(gf(2), 2, 2, 4, StdScope::Full, &l).unwrap();
        assert_eq!(c.n(), 16);
        for j in 0..c.n() {
            assert_eq!(&Subspace::column_space(c.field(), &c.thick_column(j)), &c.subspaces()[j]);
        }
    }

    #[test]
    fn bad_inputs() {
        let l = Limits::default();
        let f = gf(2);
        assert!(matches!(
            construction_spread(f.clone(), 5, 2, &l),
            Err(Error::NotDivisible { b: 2, m: 5 })
        ));
        assert!(matches!(
            construction_std(f.clone(), 1, 3, 5, StdScope::Full, &l),
            Err(Error::BadParams(_))
        ));
        let a = Subspace::span(&f, 3, &[[1, 0, 0]]).unwrap();
        let b = Subspace::span(&f, 3, &[[0, 1, 0], [0, 0, 1]]).unwrap();
        assert_eq!(
            construction_from_blocks(f.clone(), &[b.clone(), b.clone()], &l).unwrap_err(),
            Error::DuplicateBlock(1)
        );
        assert_eq!(
            construction_from_blocks(f.clone(), &[b.clone(), a.clone()], &l).unwrap_err(),
            Error::MixedDimensions(2, 1)
        );
        assert_eq!(
            code_from_subspaces(f.clone(), std::slice::from_ref(&b), 1, Provenance::new("x")).unwrap_err(),
            Error::DimensionTooLarge { dim: 2, b: 1 }
        );
        let c = Subspace::span(&f, 2, &[[1, 0]]).unwrap();
        assert_eq!(
            code_from_subspaces(f, &[a, c], 2, Provenance::new("x")).unwrap_err(),
            Error::AmbientMismatch(3, 2)
        );
    }

    #[test]
    fn low_dimensional_blocks_are_padded() {
        let f = gf(2);
        let a = Subspace::span(&f, 2, &[[1, 0]]).unwrap();
        let b = Subspace::span(&f, 2, &[[0, 1]]).unwrap();
        let c = code_from_subspaces(f, &[a, b], 2, Provenance::new("x")).unwrap();
        assert!(!c.is_full_column_rank());
        assert_eq!(c.generator().row(0), &[1, 0, 0, 0]);
        assert_eq!(c.generator().row(1), &[0, 0, 1, 0]);
    }

    #[test]
    fn spread_blocks_are_steiner() {
        let f = gf(2);
        let l = Limits::default();
        let s = build_spread(&f, 4, 2, SpreadMethod::GabidulinEchelon, &l).unwrap();
        let c = construction_from_blocks(f.clone(), &s.blocks, &l).unwrap();
        assert_eq!(c.provenance().get("steiner"), Some("1"));
        assert_eq!(c.generator(), construction_spread(f.clone(), 4, 2, &l).unwrap().generator());
        let all = enumerate_grassmannian(&f, 3, 2, &l).unwrap();
        let c = construction_from_blocks(f.clone(), &all, &l).unwrap();
        assert_eq!(c.provenance().get("steiner"), Some("2"));
        assert_eq!(c.generator(), construction_all_subspaces(f, 3, 2, &l).unwrap().generator());
    }
}
