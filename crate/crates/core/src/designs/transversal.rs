use std::collections::HashMap;
use std::sync::Arc;

use rayon::prelude::*;

use super::{build_gabidulin, enumerate_grassmannian, gaussian_u128, normalize, projective_points, DesignReport};
use crate::gf::{Elem, ExtensionContext, FieldContext};
use crate::linalg::{rank, Mat, Subspace};
use crate::{Error, Limits, Result};

/// A resolvable subspace transversal design `STD_q(t, b, m)` in `F_q^{b+m}`.
///
/// Points are the 1-dimensional subspaces not contained in the space of
/// vectors starting with `b` zeros. A point belongs to the group keyed by its
/// normalized first `b` coordinates. Blocks are the row spaces of lifted
/// Gabidulin matrices `[I_b | A]`; the blocks of parallel class `c` share the
/// higher coefficients `a_1, …, a_{t-1}` (encoded as `c`) and vary `a_0`.
#[derive(Debug, Clone)]
pub struct TransversalDesign {
    pub t: usize,
    pub b: usize,
    pub m: usize,
    pub q: u32,
    /// Normalized spanning vectors of the points, sorted.
    pub points: Vec<Vec<Elem>>,
    /// Point indices of each group, groups sorted by key.
    pub groups: Vec<Vec<usize>>,
    pub blocks: Vec<Subspace>,
    /// Block indices of each parallel class.
    pub classes: Vec<Vec<usize>>,
}

impl TransversalDesign {
    pub fn ambient(&self) -> usize {
        self.b + self.m
    }

    /// Assembles a design from given blocks and classes, deriving the points
    /// and groups from the parameters.
    pub fn from_parts(
        f: &FieldContext,
        t: usize,
        b: usize,
        m: usize,
        blocks: Vec<Subspace>,
        classes: Vec<Vec<usize>>,
        limits: &Limits,
    ) -> Result<Self> {
        let (points, groups) = points_and_groups(f, b, m, limits)?;
        Ok(TransversalDesign {
            t,
            b,
            m,
            q: f.order(),
            points,
            groups,
            blocks,
            classes,
        })
    }

    /// The blocks of parallel class `class`, in order.
    pub fn class_blocks(&self, class: usize) -> Result<Vec<Subspace>> {
        let idx = self.classes.get(class).ok_or_else(|| {
            Error::BadParams(format!("class {class} out of range 0..{}", self.classes.len()))
        })?;
        Ok(idx.iter().map(|&i| self.blocks[i].clone()).collect())
    }
}

fn group_key(v: &[Elem], b: usize, f: &FieldContext) -> Option<Vec<Elem>> {
    normalize(f, &v[..b])
}

/// Normalized point vectors and the point indices of each group.
type PointsAndGroups = (Vec<Vec<Elem>>, Vec<Vec<usize>>);

fn points_and_groups(f: &FieldContext, b: usize, m: usize, limits: &Limits) -> Result<PointsAndGroups> {
    let n = b + m;
    let points: Vec<Vec<Elem>> = projective_points(f, &Subspace::full(n), limits)?
        .into_iter()
        .filter(|v| v[..b].iter().any(|&x| x != 0))
        .collect();
    let mut by_key: std::collections::BTreeMap<Vec<Elem>, Vec<usize>> = Default::default();
    for (i, p) in points.iter().enumerate() {
        by_key
            .entry(group_key(p, b, f).expect("point outside V_0"))
            .or_default()
            .push(i);
    }
    Ok((points, by_key.into_values().collect()))
}

pub fn build_std(f: &Arc<FieldContext>, t: usize, b: usize, m: usize, limits: &Limits) -> Result<TransversalDesign> {
    if !(1 <= t && t <= b && b <= m) {
        return Err(Error::BadParams(format!(
            "STD needs 1 <= t <= b <= m, got t={t}, b={b}, m={m}"
        )));
    }
    let ext = ExtensionContext::with_limit(f.clone(), m as u32, limits.field_order)?;
    let code = build_gabidulin(&ext, b, t, limits)?;
    let mut lifted = Mat::zeros(b, b + m);
    for i in 0..b {
        lifted.set(i, i, 1);
    }
    let blocks: Vec<Subspace> = code
        .codewords
        .iter()
        .map(|w| {
            let a = code.to_matrix(&ext, w);
            for r in 0..b {
                lifted.row_mut(r)[b..].copy_from_slice(a.row(r));
            }
            Subspace::row_space(f, &lifted)
        })
        .collect();
    let class_size = ext.big().order() as usize;
    let classes = (0..blocks.len() / class_size)
        .map(|c| (c * class_size..(c + 1) * class_size).collect())
        .collect();
    TransversalDesign::from_parts(f, t, b, m, blocks, classes, limits)
}

/// Checks the defining properties of a resolvable `STD_q(t, b, m)`. Property
/// five scans every `t`-dimensional subspace of `F_q^{b+m}`.
pub fn verify_std(f: &FieldContext, d: &TransversalDesign, limits: &Limits) -> Result<DesignReport> {
    let q = f.order() as u64;
    let (b, m, t, n) = (d.b, d.m, d.t, d.ambient());
    let mut report = DesignReport::new(format!("std t={t} b={b} m={m} q={q}"));
    let qm = (q as usize).pow(m as u32);
    let gb1 = gaussian_u128(b, 1, q)? as usize;

    // 1. points
    let expected_points: Vec<Vec<Elem>> = enumerate_grassmannian(f, n, 1, limits)?
        .iter()
        .map(|s| s.basis().row(0).to_vec())
        .filter(|v| v[..b].iter().any(|&x| x != 0))
        .collect();
    let mut sorted = expected_points.clone();
    sorted.sort();
    let fail = if d.points != sorted {
        Some("point set differs from the 1-dim subspaces outside V_0".to_string())
    } else if d.points.len() != gb1 * qm {
        Some(format!("{} points, expected {}", d.points.len(), gb1 * qm))
    } else {
        None
    };
    report.push("points", format!("{} points = [b 1]·q^m", d.points.len()), fail);

    let point_index: HashMap<&[Elem], usize> =
        d.points.iter().enumerate().map(|(i, p)| (p.as_slice(), i)).collect();
    let mut group_of = vec![usize::MAX; d.points.len()];
    let mut fail = None;
    for (g, members) in d.groups.iter().enumerate() {
        if members.len() != qm && fail.is_none() {
            fail = Some(format!("group {g} has {} points, expected {qm}", members.len()));
        }
        for &p in members {
            if group_of[p] != usize::MAX && fail.is_none() {
                fail = Some(format!("point {p} lies in groups {} and {g}", group_of[p]));
            }
            group_of[p] = g;
        }
    }
    if fail.is_none() && d.groups.len() != gb1 {
        fail = Some(format!("{} groups, expected {gb1}", d.groups.len()));
    }
    if fail.is_none() {
        if let Some(p) = group_of.iter().position(|&g| g == usize::MAX) {
            fail = Some(format!("point {p} is in no group"));
        }
    }
    report.push("groups", format!("{gb1} groups of size q^m = {qm}"), fail);

    // 3. blocks: dimension b, only points from V, q^{mt} of them, distinct
    let expected_blocks = (qm as u128).checked_pow(t as u32).unwrap_or(u128::MAX);
    let mut fail = None;
    for (i, s) in d.blocks.iter().enumerate() {
        if s.dim() != b || s.ambient() != n {
            fail = Some(format!("block {i} has dimension {}", s.dim()));
            break;
        }
        if rank(f, &s.basis().select_columns(0..b)) != b {
            fail = Some(format!("block {i} contains a point of V_0"));
            break;
        }
    }
    if fail.is_none() && d.blocks.len() as u128 != expected_blocks {
        fail = Some(format!("{} blocks, expected {expected_blocks}", d.blocks.len()));
    }
    if fail.is_none() {
        let mut sorted = d.blocks.clone();
        sorted.sort();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            let i = d.blocks.iter().position(|s| s == &w[0]).unwrap();
            fail = Some(format!("block {i} is repeated"));
        }
    }
    report.push("blocks", format!("{} blocks of dimension {b} avoiding V_0", d.blocks.len()), fail);

    // 4. each block meets each group in exactly one point
    let block_points: Vec<Vec<usize>> = d
        .blocks
        .par_iter()
        .map(|s| -> Result<Vec<usize>> {
            projective_points(f, s, limits)?
                .iter()
                .map(|p| {
                    point_index
                        .get(p.as_slice())
                        .copied()
                        .ok_or_else(|| Error::BadParams("block point outside the point set".into()))
                })
                .collect()
        })
        .collect::<Result<_>>()
        .unwrap_or_default();
    let fail = if block_points.len() != d.blocks.len() {
        Some("some block contains a point outside the point set".to_string())
    } else {
        block_points.iter().enumerate().find_map(|(i, pts)| {
            let mut per_group = vec![0usize; d.groups.len()];
            for &p in pts {
                if group_of[p] < per_group.len() {
                    per_group[group_of[p]] += 1;
                }
            }
            per_group
                .iter()
                .position(|&c| c != 1)
                .map(|g| format!("block {i} meets group {g} in {} points", per_group[g]))
        })
    };
    report.push("block-meets-group", "each block meets each group in exactly one point", fail);

    // 5. every admissible t-subspace lies in exactly one block
    let candidates = enumerate_grassmannian(f, n, t, limits)?;
    let outcome: Vec<Option<String>> = candidates
        .par_iter()
        .map(|ts| {
            let pts = projective_points(f, ts, limits).ok()?;
            let mut seen_groups = Vec::with_capacity(pts.len());
            for p in &pts {
                let idx = *point_index.get(p.as_slice())?;
                if seen_groups.contains(&group_of[idx]) {
                    return None;
                }
                seen_groups.push(group_of[idx]);
            }
            let containing = d
                .blocks
                .iter()
                .filter(|blk| blk.contains(f, ts).unwrap_or(false))
                .count();
            (containing != 1).then(|| {
                format!(
                    "t-subspace {:?} lies in {containing} blocks",
                    ts.basis().data()
                )
            })
        })
        .collect();
    let admissible = candidates
        .par_iter()
        .filter(|ts| rank(f, &ts.basis().select_columns(0..b)) == t)
        .count();
    report.push(
        "t-subspace-coverage",
        format!("{admissible} admissible {t}-subspaces each in exactly one block"),
        outcome.into_iter().flatten().next(),
    );

    // resolution into parallel classes
    let expected_classes = (qm as u128).pow(t as u32 - 1);
    let mut fail = None;
    let mut used = vec![0usize; d.blocks.len()];
    for c in &d.classes {
        for &i in c {
            if i < used.len() {
                used[i] += 1;
            }
        }
    }
    if d.classes.len() as u128 != expected_classes {
        fail = Some(format!("{} classes, expected {expected_classes}", d.classes.len()));
    } else if let Some(i) = used.iter().position(|&u| u != 1) {
        fail = Some(format!("block {i} lies in {} classes", used[i]));
    } else if block_points.len() == d.blocks.len() {
        for (ci, c) in d.classes.iter().enumerate() {
            let mut cover = vec![0usize; d.points.len()];
            for &bi in c {
                for &p in &block_points[bi] {
                    cover[p] += 1;
                }
            }
            if let Some(p) = cover.iter().position(|&x| x != 1) {
                fail = Some(format!("class {ci} covers point {p} {} times", cover[p]));
                break;
            }
        }
    }
    report.push(
        "resolvable",
        format!("q^(m(t-1)) = {expected_classes} parallel classes, each covering every point once"),
        fail,
    );
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(q: u32) -> Arc<FieldContext> {
        Arc::new(FieldContext::of_order(q).unwrap())
    }

    #[test]
    fn single_class_when_t_is_one() {
        let f = gf(2);
        let d = build_std(&f, 1, 2, 2, &Limits::default()).unwrap();
        assert_eq!(d.blocks.len(), 4);
        assert_eq!(d.classes.len(), 1);
    }

    #[test]
    fn std_2_2_2() {
        let f = gf(2);
        let l = Limits::default();
        let d = build_std(&f, 2, 2, 2, &l).unwrap();
        assert_eq!(d.blocks.len(), 16);
        assert_eq!(d.classes.len(), 4);
        assert!(d.classes.iter().all(|c| c.len() == 4));
        assert_eq!(d.points.len(), 12);
        let r = verify_std(&f, &d, &l).unwrap();
        assert!(r.all_passed(), "{r:#?}");
        assert_eq!(r.checks.len(), 6);
    }

    #[test]
    fn bad_params() {
        let f = gf(2);
        assert!(build_std(&f, 3, 2, 2, &Limits::default()).is_err());
        assert!(build_std(&f, 1, 3, 2, &Limits::default()).is_err());
    }

    #[test]
    fn broken_class_detected() {
        let f = gf(2);
        let l = Limits::default();
        let mut d = build_std(&f, 2, 2, 2, &l).unwrap();
        d.classes.swap(0, 1);
        let (a, b) = (d.classes[0][0], d.classes[1][0]);
        d.classes[0][0] = b;
        d.classes[1][0] = a;
        d.classes[0][1] = b;
        let r = verify_std(&f, &d, &l).unwrap();
        assert!(!r.check("resolvable").unwrap().passed);
    }
}
