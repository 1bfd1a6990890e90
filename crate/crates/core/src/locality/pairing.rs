use std::collections::{BTreeMap, HashMap, HashSet};

use crate::arraycode::ArrayCode;
use crate::designs::{enumerate_grassmannian, projective_points};
use crate::gf::{Elem, FieldContext};
use crate::linalg::{axpy, Subspace};
use crate::{Error, Limits, Result};

/// Pairwise-disjoint pairs `{U, W}` of planes other than `V` with
/// `V ⊆ U + W`.
///
/// Planes meeting `V` in a point are grouped by that point; the group of
/// point `i` is cut, in canonical order, into `q` equal parts labelled by
/// the other points, and part `j` of group `i` is zipped with part `i` of
/// group `j`. Planes meeting `V` trivially are grouped by `U + V`; within a
/// group with first member `U = ⟨u₁, u₂⟩` and `V = ⟨v₁, v₂⟩`, the plane
/// `⟨u₁+x₁, u₂+x₂⟩` is paired with `⟨u₁+x₁+v₁, u₂+x₂+v₂⟩` in even
/// characteristic and with `⟨u₁−x₁, u₂−x₂⟩` in odd characteristic, the
/// latter only when `x₁, x₂` are independent.
pub fn grassmann_pairing(f: &FieldContext, v: &Subspace, limits: &Limits) -> Result<Vec<(Subspace, Subspace)>> {
    if v.dim() != 2 {
        return Err(Error::BadParams(format!("the pairing needs a plane, got dimension {}", v.dim())));
    }
    let m = v.ambient();
    let q = f.order();
    let planes = enumerate_grassmannian(f, m, 2, limits)?;
    let points = projective_points(f, v, limits)?;

    let mut first_kind: Vec<Vec<Subspace>> = vec![Vec::new(); points.len()];
    let mut second_kind: BTreeMap<Subspace, Vec<Subspace>> = BTreeMap::new();
    for u in planes.iter().filter(|&u| u != v) {
        match u.intersection_dim(f, v)? {
            1 => {
                let i = points
                    .iter()
                    .position(|p| u.contains_vector(f, p).unwrap_or(false))
                    .expect("a plane meeting V in a point contains one of its points");
                first_kind[i].push(u.clone());
            }
            0 => second_kind.entry(u.sum(f, v)?).or_default().push(u.clone()),
            _ => unreachable!("distinct planes share at most a point"),
        }
    }

    let mut pairs = Vec::new();
    let part = first_kind.first().map_or(0, |g| g.len() / q as usize);
    let part_of = |i: usize, j: usize| -> &[Subspace] {
        let k = if j < i { j } else { j - 1 };
        &first_kind[i][k * part..(k + 1) * part]
    };
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            for (a, b) in part_of(i, j).iter().zip(part_of(j, i)) {
                pairs.push((a.clone(), b.clone()));
            }
        }
    }

    let v1 = v.basis().row(0).to_vec();
    let v2 = v.basis().row(1).to_vec();
    let in_v = v.enumerate_vectors(f, limits.enumeration)?;
    let shift = |base: &[Elem], x: &[Elem], sign: Elem| {
        let mut out = base.to_vec();
        axpy(f, &mut out, sign, x);
        out
    };
    for class in second_kind.values() {
        let u = &class[0];
        let (u1, u2) = (u.basis().row(0), u.basis().row(1));
        let mut used: HashSet<(usize, usize)> = HashSet::new();
        for (a, x1) in in_v.iter().enumerate() {
            for (b, x2) in in_v.iter().enumerate() {
                if used.contains(&(a, b)) {
                    continue;
                }
                let (y1, y2) = if q.is_multiple_of(2) {
                    (shift(x1, &v1, 1), shift(x2, &v2, 1))
                } else {
                    if Subspace::span(f, m, &[x1, x2])?.dim() < 2 {
                        continue;
                    }
                    (shift(&vec![0; m], x1, f.neg(1)), shift(&vec![0; m], x2, f.neg(1)))
                };
                let pa = in_v.iter().position(|z| z == &y1).expect("V is closed");
                let pb = in_v.iter().position(|z| z == &y2).expect("V is closed");
                used.insert((a, b));
                used.insert((pa, pb));
                let w = Subspace::span(f, m, &[shift(u1, x1, 1), shift(u2, x2, 1)])?;
                let fw = Subspace::span(f, m, &[shift(u1, &y1, 1), shift(u2, &y2, 1)])?;
                pairs.push((w, fw));
            }
        }
    }
    Ok(pairs)
}

/// The pairing for column `j` of an all-planes code, as column index pairs.
pub fn pairing_columns(c: &ArrayCode, j: usize, limits: &Limits) -> Result<Vec<[usize; 2]>> {
    let v = c
        .subspaces()
        .get(j)
        .ok_or_else(|| Error::OutOfRange(format!("column {j} of a {} code", c.summary())))?;
    let index: HashMap<&Subspace, usize> = c.subspaces().iter().enumerate().map(|(k, s)| (s, k)).collect();
    grassmann_pairing(c.field(), v, limits)?
        .iter()
        .map(|(a, b)| match (index.get(a), index.get(b)) {
            (Some(&x), Some(&y)) => Ok([x.min(y), x.max(y)]),
            _ => Err(Error::BadParams("the code does not contain every plane".into())),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::arraycode::construction_all_subspaces;
    use crate::locality::RecoverySet;
    use crate::locality::Target;

    fn check(q: u32, m: usize) -> usize {
        let f = Arc::new(FieldContext::of_order(q).unwrap());
        let l = Limits::default();
        let c = construction_all_subspaces(f, m, 2, &l).unwrap();
        let pairs = pairing_columns(&c, 0, &l).unwrap();
        let mut seen = HashSet::new();
        for p in &pairs {
            assert!(!p.contains(&0));
            assert!(seen.insert(p[0]) && seen.insert(p[1]), "pairs overlap");
            assert!(RecoverySet::build(&c, Target::Node(0), p).is_ok());
        }
        pairs.len()
    }

    #[test]
    fn even_q_pairs_everything() {
        assert_eq!(check(2, 3), 3);
        assert_eq!(check(2, 4), 17);
        assert_eq!(check(4, 3), 10);
    }

    #[test]
    fn odd_q_lower_bound() {
        assert!(check(3, 3) >= 6);
        assert!(check(3, 4) >= (130 - 1 - 3 * 11) / 2);
    }
}
