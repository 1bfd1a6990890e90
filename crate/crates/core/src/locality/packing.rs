//! Maximum families of pairwise-disjoint sets.

use std::collections::HashMap;

use petgraph::algo::maximum_matching;
use petgraph::graph::{NodeIndex, UnGraph};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Packing {
    /// Indices into the input, ascending.
    pub chosen: Vec<usize>,
    /// False when the node budget ran out before optimality was proved.
    pub exact: bool,
}

type Bits = Vec<u64>;

fn to_bits(set: &[usize], words: usize) -> Bits {
    let mut b = vec![0u64; words];
    for &x in set {
        b[x / 64] |= 1 << (x % 64);
    }
    b
}

fn disjoint(a: &Bits, b: &Bits) -> bool {
    a.iter().zip(b).all(|(x, y)| x & y == 0)
}

fn has(a: &Bits, x: usize) -> bool {
    a[x / 64] >> (x % 64) & 1 == 1
}

struct Solver<'a> {
    bits: &'a [Bits],
    sizes: Vec<usize>,
    words: usize,
    best: Vec<usize>,
    ceiling: usize,
    nodes: u64,
    budget: u64,
    aborted: bool,
}

impl Solver<'_> {
    fn bound(&self, avail: &[usize]) -> usize {
        let mut union = vec![0u64; self.words];
        let mut min = usize::MAX;
        for &i in avail {
            union.iter_mut().zip(&self.bits[i]).for_each(|(u, b)| *u |= b);
            min = min.min(self.sizes[i]);
        }
        let covered: usize = union.iter().map(|w| w.count_ones() as usize).sum();
        avail.len().min(covered / min.max(1))
    }

    fn search(&mut self, avail: &[usize], chosen: &mut Vec<usize>) {
        if self.aborted || self.best.len() == self.ceiling {
            return;
        }
        self.nodes += 1;
        if self.nodes > self.budget {
            self.aborted = true;
            return;
        }
        if chosen.len() > self.best.len() {
            self.best = chosen.clone();
        }
        if avail.is_empty() || chosen.len() + self.bound(avail) <= self.best.len() {
            return;
        }
        // branch on the element lying in the fewest available sets
        let mut counts = vec![0usize; self.words * 64];
        for &i in avail {
            for (w, &word) in self.bits[i].iter().enumerate() {
                let mut x = word;
                while x != 0 {
                    counts[w * 64 + x.trailing_zeros() as usize] += 1;
                    x &= x - 1;
                }
            }
        }
        let e = (0..counts.len())
            .filter(|&x| counts[x] > 0)
            .min_by_key(|&x| counts[x])
            .unwrap_or(usize::MAX);
        let (with, without): (Vec<usize>, Vec<usize>) = avail.iter().partition(|&&i| has(&self.bits[i], e));
        for &s in &with {
            let rest: Vec<usize> = without
                .iter()
                .copied()
                .filter(|&k| disjoint(&self.bits[s], &self.bits[k]))
                .collect();
            chosen.push(s);
            self.search(&rest, chosen);
            chosen.pop();
        }
        self.search(&without, chosen);
    }
}

/// Exact maximum set packing by branch and bound over the elements
/// `0..universe`. Stops after `node_budget` search nodes, returning the
/// best family found with `exact = false`.
///
/// When every set has exactly two elements the problem is a maximum
/// matching and is solved exactly without a budget.
pub fn max_disjoint_packing(sets: &[Vec<usize>], universe: usize, node_budget: u64) -> Packing {
    if !sets.is_empty() && sets.iter().all(|s| s.len() == 2) {
        return matching_packing(sets, universe);
    }
    let words = universe.div_ceil(64).max(1);
    let bits: Vec<Bits> = sets.iter().map(|s| to_bits(s, words)).collect();
    let greedy = greedy_packing(sets, universe);
    let mut solver = Solver {
        bits: &bits,
        sizes: sets.iter().map(|s| s.len()).collect(),
        words,
        best: greedy.clone(),
        ceiling: 0,
        nodes: 0,
        budget: node_budget,
        aborted: false,
    };
    let all: Vec<usize> = (0..sets.len()).filter(|&i| !sets[i].is_empty()).collect();
    solver.ceiling = solver.bound(&all);
    solver.search(&all, &mut Vec::new());
    let mut chosen = solver.best;
    chosen.sort_unstable();
    Packing {
        chosen,
        exact: !solver.aborted,
    }
}

fn matching_packing(sets: &[Vec<usize>], universe: usize) -> Packing {
    let mut g: UnGraph<(), usize> = UnGraph::with_capacity(universe, sets.len());
    let nodes: Vec<NodeIndex> = (0..universe).map(|_| g.add_node(())).collect();
    let mut edge_of = HashMap::new();
    for (i, s) in sets.iter().enumerate() {
        let (a, b) = (s[0].min(s[1]), s[0].max(s[1]));
        edge_of.entry((a, b)).or_insert(i);
        g.add_edge(nodes[a], nodes[b], i);
    }
    let m = maximum_matching(&g);
    let mut chosen: Vec<usize> = m
        .edges()
        .map(|(a, b)| {
            let (a, b) = (a.index().min(b.index()), a.index().max(b.index()));
            edge_of[&(a, b)]
        })
        .collect();
    chosen.sort_unstable();
    Packing { chosen, exact: true }
}

/// Greedy packing, smallest sets first, followed by swaps that trade one
/// chosen set for two compatible ones while any exist.
pub fn greedy_packing(sets: &[Vec<usize>], universe: usize) -> Vec<usize> {
    let words = universe.div_ceil(64).max(1);
    let bits: Vec<Bits> = sets.iter().map(|s| to_bits(s, words)).collect();
    let mut order: Vec<usize> = (0..sets.len()).filter(|&i| !sets[i].is_empty()).collect();
    order.sort_by_key(|&i| (sets[i].len(), i));
    let mut chosen: Vec<usize> = Vec::new();
    for &i in &order {
        if chosen.iter().all(|&c| disjoint(&bits[c], &bits[i])) {
            chosen.push(i);
        }
    }
    'improve: loop {
        for pos in 0..chosen.len() {
            let others: Vec<usize> = chosen.iter().enumerate().filter(|&(p, _)| p != pos).map(|(_, &c)| c).collect();
            let free: Vec<usize> = order
                .iter()
                .copied()
                .filter(|&i| !chosen.contains(&i) && others.iter().all(|&c| disjoint(&bits[c], &bits[i])))
                .collect();
            for (a, &x) in free.iter().enumerate() {
                if let Some(&y) = free[a + 1..].iter().find(|&&y| disjoint(&bits[x], &bits[y])) {
                    chosen = others;
                    chosen.extend([x, y]);
                    continue 'improve;
                }
            }
        }
        break;
    }
    chosen.sort_unstable();
    chosen
}
