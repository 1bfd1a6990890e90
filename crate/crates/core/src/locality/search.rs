use crate::gf::{Elem, FieldContext};
use crate::linalg::Subspace;
use crate::{Error, Limits, Result};

/// Lexicographic subset search over the columns of a code, keeping the
/// running subspace sum of each prefix.
pub(crate) struct SumSearch<'a> {
    f: &'a FieldContext,
    spaces: &'a [Subspace],
    exclude: usize,
    targets: &'a [Vec<Elem>],
}

impl<'a> SumSearch<'a> {
    pub fn new(f: &'a FieldContext, spaces: &'a [Subspace], exclude: usize, targets: &'a [Vec<Elem>]) -> Self {
        SumSearch {
            f,
            spaces,
            exclude,
            targets,
        }
    }

    pub fn recovers(&self, sum: &Subspace) -> bool {
        self.targets
            .iter()
            .all(|t| sum.contains_vector(self.f, t).unwrap_or(false))
    }

    /// Whether all other columns together recover the targets.
    pub fn recoverable(&self) -> bool {
        let ambient = self.spaces.first().map_or(0, |s| s.ambient());
        let mut sum = Subspace::zero(ambient);
        for (k, s) in self.spaces.iter().enumerate() {
            if k != self.exclude {
                sum = sum.sum(self.f, s).expect("same ambient space");
            }
        }
        self.recovers(&sum)
    }

    /// Visits every subset of size `size` in lexicographic order until `cb`
    /// returns true. With `prune`, prefixes that already recover are not
    /// extended. Returns whether the callback stopped the search.
    pub fn visit(&self, size: usize, prune: bool, cb: &mut dyn FnMut(&[usize], &Subspace) -> bool) -> bool {
        let ambient = self.spaces.first().map_or(0, |s| s.ambient());
        let mut chosen = Vec::with_capacity(size);
        self.rec(0, size, prune, &Subspace::zero(ambient), &mut chosen, cb)
    }

    fn rec(
        &self,
        start: usize,
        size: usize,
        prune: bool,
        sum: &Subspace,
        chosen: &mut Vec<usize>,
        cb: &mut dyn FnMut(&[usize], &Subspace) -> bool,
    ) -> bool {
        if chosen.len() == size {
            return cb(chosen, sum);
        }
        let need = size - chosen.len();
        for k in start..self.spaces.len() {
            if k == self.exclude {
                continue;
            }
            let left = self.spaces.len() - k - usize::from(self.exclude > k);
            if left < need {
                break;
            }
            let next = sum.sum(self.f, &self.spaces[k]).expect("same ambient space");
            if prune && chosen.len() + 1 < size && self.recovers(&next) {
                continue;
            }
            chosen.push(k);
            let stop = self.rec(k + 1, size, prune, &next, chosen, cb);
            chosen.pop();
            if stop {
                return true;
            }
        }
        false
    }
}

/// Charges `C(n−1, size)` subsets against a running budget.
pub(crate) fn charge(budget: &mut u128, others: usize, size: usize, limits: &Limits) -> Result<()> {
    let count = num_integer::binomial(others as u128, size as u128);
    if count > *budget {
        return Err(Error::TooLarge {
            what: "recovery-set search",
            count,
            limit: limits.exhaustive,
        });
    }
    *budget -= count;
    Ok(())
}
