use std::collections::BTreeSet;
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use super::packing::{greedy_packing, max_disjoint_packing};
use super::search::{charge, SumSearch};
use crate::arraycode::{ArrayCode, Codeword};
use crate::gf::Elem;
use crate::linalg::{dot, solve, Mat};
use crate::{Error, Limits, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Target {
    /// A whole codeword column.
    Node(usize),
    /// Entry `(row, column)` of the codeword array.
    Symbol { row: usize, column: usize },
}

impl Target {
    pub fn column(&self) -> usize {
        match *self {
            Target::Node(j) => j,
            Target::Symbol { column, .. } => column,
        }
    }

    fn check(&self, c: &ArrayCode) -> Result<()> {
        let ok = match *self {
            Target::Node(j) => j < c.n(),
            Target::Symbol { row, column } => row < c.b() && column < c.n(),
        };
        if ok {
            Ok(())
        } else {
            Err(Error::OutOfRange(format!("{self} is outside a {} code", c.summary())))
        }
    }

    /// The generator columns that must lie in the recovery sum.
    fn vectors(&self, c: &ArrayCode) -> Vec<Vec<Elem>> {
        match *self {
            Target::Node(j) => (0..c.b()).map(|i| c.symbol_column(i, j)).collect(),
            Target::Symbol { row, column } => vec![c.symbol_column(row, column)],
        }
    }
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Target::Node(j) => write!(f, "column {j}"),
            Target::Symbol { row, column } => write!(f, "symbol ({row}, {column})"),
        }
    }
}

/// Columns `S` and linear functionals that rebuild a target from the
/// symbols stored in `S`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecoverySet {
    pub target: Target,
    pub columns: Vec<usize>,
    /// One row per rebuilt symbol; column `kb + i` weighs entry `i` of the
    /// `k`-th column of `S`.
    pub coefficients: Mat,
}

impl RecoverySet {
    /// Solves for the coefficients. `NoRecovery` when `S` does not span the
    /// target, or contains the target's own column.
    pub fn build(c: &ArrayCode, target: Target, columns: &[usize]) -> Result<Self> {
        target.check(c)?;
        if columns.contains(&target.column()) || columns.iter().any(|&k| k >= c.n()) {
            return Err(Error::NoRecovery(format!("{columns:?} is not a valid recovery set for {target}")));
        }
        let b = c.b();
        let gs = c
            .generator()
            .select_columns(columns.iter().flat_map(|&k| k * b..(k + 1) * b));
        let vectors = target.vectors(c);
        let mut coefficients = Mat::zeros(vectors.len(), gs.cols());
        for (r, v) in vectors.iter().enumerate() {
            let x = solve(c.field(), &gs, v)
                .ok_or_else(|| Error::NoRecovery(format!("columns {columns:?} do not recover {target}")))?;
            coefficients.row_mut(r).copy_from_slice(&x);
        }
        Ok(RecoverySet {
            target,
            columns: columns.to_vec(),
            coefficients,
        })
    }

    pub fn size(&self) -> usize {
        self.columns.len()
    }

    /// Rebuilds the target from the `S` columns of a codeword.
    pub fn apply(&self, c: &ArrayCode, w: &Codeword) -> Vec<Elem> {
        self.apply_flat(c, &w.flatten())
    }

    pub fn apply_flat(&self, c: &ArrayCode, flat: &[Elem]) -> Vec<Elem> {
        let b = c.b();
        let symbols: Vec<Elem> = self
            .columns
            .iter()
            .flat_map(|&k| flat[k * b..(k + 1) * b].iter().copied())
            .collect();
        (0..self.coefficients.rows())
            .map(|r| dot(c.field(), self.coefficients.row(r), &symbols))
            .collect()
    }

    fn expected_flat(&self, b: usize, flat: &[Elem]) -> Vec<Elem> {
        match self.target {
            Target::Node(j) => flat[j * b..(j + 1) * b].to_vec(),
            Target::Symbol { row, column } => vec![flat[column * b + row]],
        }
    }

    /// Checks reconstruction on every one of the `q^M` codewords.
    pub fn verify_exhaustive(&self, c: &ArrayCode, limits: &Limits) -> Result<bool> {
        let b = c.b();
        c.fold_codewords(
            limits,
            || true,
            |ok, _, flat| {
                if *ok && self.apply_flat(c, flat) != self.expected_flat(b, flat) {
                    *ok = false;
                }
            },
            |a, b| a && b,
        )
    }

    /// Checks reconstruction on the rows of `G`, which span the code.
    pub fn verify_on_basis(&self, c: &ArrayCode) -> bool {
        let g = c.generator();
        (0..g.rows()).all(|r| self.apply_flat(c, g.row(r)) == self.expected_flat(c.b(), g.row(r)))
    }
}

/// A smallest recovery set for `target`, lexicographically first among
/// those of its size.
pub fn min_recovery(c: &ArrayCode, target: Target, limits: &Limits) -> Result<RecoverySet> {
    target.check(c)?;
    let vectors = target.vectors(c);
    let search = SumSearch::new(c.field(), c.subspaces(), target.column(), &vectors);
    if search.recovers(&crate::linalg::Subspace::zero(c.dim())) {
        return RecoverySet::build(c, target, &[]);
    }
    if !search.recoverable() {
        return Err(Error::NoRecovery(format!("{target} is not recoverable from the other columns")));
    }
    let mut budget = limits.exhaustive as u128;
    for size in 1..c.n() {
        charge(&mut budget, c.n() - 1, size, limits)?;
        let mut found = None;
        search.visit(size, false, &mut |set, sum| {
            if search.recovers(sum) {
                found = Some(set.to_vec());
                true
            } else {
                false
            }
        });
        if let Some(set) = found {
            return RecoverySet::build(c, target, &set);
        }
    }
    Err(Error::NoRecovery(format!("{target} is not recoverable from the other columns")))
}

pub fn min_symbol_recovery(c: &ArrayCode, row: usize, column: usize, limits: &Limits) -> Result<RecoverySet> {
    min_recovery(c, Target::Symbol { row, column }, limits)
}

pub fn min_node_recovery(c: &ArrayCode, column: usize, limits: &Limits) -> Result<RecoverySet> {
    min_recovery(c, Target::Node(column), limits)
}

fn locality(c: &ArrayCode, targets: Vec<Target>, limits: &Limits) -> Result<(usize, Vec<RecoverySet>)> {
    let sets: Vec<RecoverySet> = targets
        .into_par_iter()
        .map(|t| min_recovery(c, t, limits))
        .collect::<Result<_>>()?;
    let r = sets.iter().map(|s| s.size()).max().unwrap_or(0);
    Ok((r, sets))
}

/// `r_s` with one minimal witness per symbol, in column-major order.
pub fn symbol_locality(c: &ArrayCode, limits: &Limits) -> Result<(usize, Vec<RecoverySet>)> {
    let targets = (0..c.n())
        .flat_map(|column| (0..c.b()).map(move |row| Target::Symbol { row, column }))
        .collect();
    locality(c, targets, limits)
}

/// `r_n` with one minimal witness per column.
pub fn node_locality(c: &ArrayCode, limits: &Limits) -> Result<(usize, Vec<RecoverySet>)> {
    locality(c, (0..c.n()).map(Target::Node).collect(), limits)
}

/// Every recovery set of size at most `r` with no recovering proper
/// subset, ordered by size and then lexicographically.
pub fn minimal_recovery_sets(c: &ArrayCode, target: Target, r: usize, limits: &Limits) -> Result<Vec<Vec<usize>>> {
    target.check(c)?;
    let vectors = target.vectors(c);
    let search = SumSearch::new(c.field(), c.subspaces(), target.column(), &vectors);
    let mut budget = limits.exhaustive as u128;
    let mut found: Vec<Vec<usize>> = Vec::new();
    for size in 1..=r.min(c.n().saturating_sub(1)) {
        charge(&mut budget, c.n() - 1, size, limits)?;
        let smaller: Vec<BTreeSet<usize>> = found.iter().map(|s| s.iter().copied().collect()).collect();
        let mut this_size = Vec::new();
        search.visit(size, true, &mut |set, sum| {
            if search.recovers(sum) && !smaller.iter().any(|s| s.iter().all(|k| set.contains(k))) {
                this_size.push(set.to_vec());
            }
            false
        });
        found.extend(this_size);
    }
    Ok(found)
}

/// A largest family of pairwise-disjoint recovery sets of size at most `r`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Availability {
    pub target: Target,
    pub r: usize,
    pub t: usize,
    pub family: Vec<Vec<usize>>,
    /// False when the packing search gave up and `t` is only a lower bound.
    pub exact: bool,
    pub candidates: usize,
}

pub fn availability(c: &ArrayCode, target: Target, r: usize, limits: &Limits) -> Result<Availability> {
    let cands = minimal_recovery_sets(c, target, r, limits)?;
    let (chosen, exact) = if cands.len() > limits.packing_candidates {
        (greedy_packing(&cands, c.n()), false)
    } else {
        let p = max_disjoint_packing(&cands, c.n(), limits.packing_nodes);
        (p.chosen, p.exact)
    };
    let family: Vec<Vec<usize>> = chosen.iter().map(|&i| cands[i].clone()).collect();
    Ok(Availability {
        target,
        r,
        t: family.len(),
        family,
        exact,
        candidates: cands.len(),
    })
}

pub fn symbol_availability(c: &ArrayCode, row: usize, column: usize, r: usize, limits: &Limits) -> Result<Availability> {
    availability(c, Target::Symbol { row, column }, r, limits)
}

pub fn node_availability(c: &ArrayCode, column: usize, r: usize, limits: &Limits) -> Result<Availability> {
    availability(c, Target::Node(column), r, limits)
}

/// The outcome of rebuilding an erased column.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Repair {
    pub column: Vec<Elem>,
    pub recovery: RecoverySet,
    pub contacted: usize,
}

/// Rebuilds column `j` of `w`, ignoring its current contents, from a
/// minimal node recovery set. The other columns must agree with some
/// codeword, otherwise the input is `Inconsistent`.
pub fn repair(c: &ArrayCode, w: &Codeword, j: usize, limits: &Limits) -> Result<Repair> {
    Target::Node(j).check(c)?;
    if w.0.rows() != c.b() || w.0.cols() != c.n() {
        return Err(Error::DimensionMismatch {
            expected: c.b() * c.n(),
            found: w.0.rows() * w.0.cols(),
        });
    }
    if let Some(&bad) = w.0.data().iter().find(|&&x| x >= c.q()) {
        return Err(Error::Inconsistent(format!("{bad} is not an element of GF({})", c.q())));
    }
    let b = c.b();
    let keep: Vec<usize> = (0..c.n()).filter(|&k| k != j).flat_map(|k| k * b..(k + 1) * b).collect();
    let flat = w.flatten();
    let rhs: Vec<Elem> = keep.iter().map(|&i| flat[i]).collect();
    let punctured = c.generator().select_columns(keep).transpose();
    if solve(c.field(), &punctured, &rhs).is_none() {
        return Err(Error::Inconsistent(format!(
            "the columns other than {j} do not belong to any codeword"
        )));
    }
    let recovery = min_node_recovery(c, j, limits)?;
    Ok(Repair {
        column: recovery.apply_flat(c, &flat),
        contacted: recovery.size(),
        recovery,
    })
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::arraycode::{construction_all_subspaces, construction_spread, construction_std, StdScope};
    use crate::gf::FieldContext;

    fn gf(q: u32) -> Arc<FieldContext> {
        Arc::new(FieldContext::of_order(q).unwrap())
    }

    #[test]
    fn localities() {
        let l = Limits::default();
        let c = construction_all_subspaces(gf(2), 3, 2, &l).unwrap();
        assert_eq!(symbol_locality(&c, &l).unwrap().0, 1);
        assert_eq!(node_locality(&c, &l).unwrap().0, 2);
        let c = construction_all_subspaces(gf(2), 3, 1, &l).unwrap();
        assert_eq!(symbol_locality(&c, &l).unwrap().0, 2);
        let c = construction_spread(gf(2), 4, 2, &l).unwrap();
        let (r, sets) = symbol_locality(&c, &l).unwrap();
        assert_eq!(r, 2);
        assert!(sets.iter().all(|s| s.verify_exhaustive(&c, &l).unwrap()));
        let c = construction_std(gf(2), 1, 3, 6, StdScope::Par(0), &l).unwrap();
        assert_eq!(node_locality(&c, &l).unwrap().0, 2);
        let c = construction_std(gf(2), 1, 2, 5, StdScope::Par(0), &l).unwrap();
        assert_eq!(node_locality(&c, &l).unwrap().0, 3);
    }

    #[test]
    fn witnesses_are_lexicographically_first() {
        let l = Limits::default();
        let c = construction_all_subspaces(gf(2), 3, 1, &l).unwrap();
        let s = min_symbol_recovery(&c, 0, 0, &l).unwrap();
        assert_eq!(s.size(), 2);
        let all = minimal_recovery_sets(&c, Target::Node(0), 2, &l).unwrap();
        assert_eq!(s.columns, all[0]);
        assert_eq!(all.len(), 3);
    }

    #[test]
    fn availability_counts() {
        let l = Limits::default();
        let c = construction_all_subspaces(gf(2), 4, 2, &l).unwrap();
        let a = symbol_availability(&c, 0, 0, 1, &l).unwrap();
        assert_eq!((a.t, a.exact), (6, true));
        let c = construction_all_subspaces(gf(2), 3, 2, &l).unwrap();
        let a = node_availability(&c, 0, 2, &l).unwrap();
        assert_eq!((a.t, a.exact), (3, true));
    }

    #[test]
    fn repair_every_spread_codeword() {
        let l = Limits::default();
        let c = construction_spread(gf(2), 4, 2, &l).unwrap();
        for idx in 0..16u32 {
            let msg: Vec<u32> = (0..4).map(|i| idx >> i & 1).collect();
            let w = c.encode(&msg).unwrap();
            for j in 0..c.n() {
                let mut erased = w.clone();
                erased.0.set(0, j, 1 - erased.0.get(0, j));
                let r = repair(&c, &erased, j, &l).unwrap();
                assert_eq!(r.column, w.column(j));
                assert_eq!(r.contacted, 2);
            }
        }
    }

    #[test]
    fn corrupted_input_is_inconsistent() {
        let l = Limits::default();
        let c = construction_spread(gf(2), 4, 2, &l).unwrap();
        let mut w = c.encode(&[1, 0, 0, 0]).unwrap();
        w.0.set(0, 1, 1 - w.0.get(0, 1));
        assert!(matches!(repair(&c, &w, 0, &l), Err(Error::Inconsistent(_))));
    }

    #[test]
    fn foreign_column_is_no_recovery() {
        let l = Limits::default();
        let c = construction_spread(gf(2), 4, 2, &l).unwrap();
        assert!(matches!(
            RecoverySet::build(&c, Target::Node(0), &[1]),
            Err(Error::NoRecovery(_))
        ));
        assert!(matches!(
            RecoverySet::build(&c, Target::Node(0), &[0, 1]),
            Err(Error::NoRecovery(_))
        ));
    }
}
