//! Exact minimum hitting set over a universe of at most 64 elements.
//!
//! Elements are decided in increasing index order, include before exclude.
//! That visits candidate sets in lexicographic order of their sorted
//! element sequences, and since only strict improvements are accepted the
//! first optimum found is the lexicographically smallest one.

use crate::bitset::VertexSet;

/// Removes duplicates and any set that is a superset of another one.
/// Hitting every survivor is equivalent to hitting every input set.
pub fn reduce(sets: &[VertexSet]) -> Vec<VertexSet> {
    let mut sorted: Vec<VertexSet> = sets.to_vec();
    sorted.sort_unstable_by_key(|s| (s.len(), s.bits()));
    sorted.dedup();
    let mut kept: Vec<VertexSet> = Vec::with_capacity(sorted.len());
    for s in sorted {
        if !kept.iter().any(|k| k.is_subset(s)) {
            kept.push(s);
        }
    }
    kept
}

/// Lexicographically smallest minimum hitting set of `sets` within
/// `universe`, or `None` if some set misses the universe entirely.
///
/// `lower_bound` is a known lower bound on the optimum; the search stops as
/// soon as a set of that size is found.
pub fn minimum_hitting_set(universe: VertexSet, sets: &[VertexSet], lower_bound: usize) -> Option<VertexSet> {
    let sets: Vec<VertexSet> = reduce(&sets.iter().map(|s| s.intersection(universe)).collect::<Vec<_>>());
    if sets.iter().any(|s| s.is_empty()) {
        return None;
    }
    if sets.is_empty() {
        return Some(VertexSet::EMPTY);
    }
    let greedy = greedy_hitting_set(&sets).len();
    let mut search = Search {
        universe,
        best: None,
        // Accept anything no larger than the greedy solution.
        limit: greedy + 1,
        target: lower_bound.max(packing_bound(&sets, universe)),
    };
    let order: Vec<usize> = universe.to_vec();
    search.descend(&order, 0, VertexSet::EMPTY, sets);
    search.best
}

struct Search {
    universe: VertexSet,
    best: Option<VertexSet>,
    /// Only solutions strictly smaller than this are accepted.
    limit: usize,
    target: usize,
}

impl Search {
    fn done(&self) -> bool {
        self.best.is_some_and(|b| b.len() <= self.target)
    }

    fn descend(&mut self, order: &[usize], depth: usize, chosen: VertexSet, uncovered: Vec<VertexSet>) {
        if uncovered.is_empty() {
            if chosen.len() < self.limit {
                self.limit = chosen.len();
                self.best = Some(chosen);
            }
            return;
        }
        if depth == order.len() || chosen.len() + 1 >= self.limit {
            return;
        }
        let v = order[depth];
        let available = self.universe.intersection(VertexSet::above(v).with(v));
        if chosen.len() + packing_bound(&uncovered, available) >= self.limit {
            return;
        }
        if uncovered.iter().any(|s| s.contains(v)) {
            let rest: Vec<VertexSet> = uncovered.iter().copied().filter(|s| !s.contains(v)).collect();
            self.descend(order, depth + 1, chosen.with(v), rest);
            if self.done() {
                return;
            }
        }
        // Excluding v is impossible if some constraint has no other option.
        let after = available.without(v);
        if uncovered.iter().all(|s| s.intersects(after)) {
            self.descend(order, depth + 1, chosen, uncovered);
        }
    }
}

/// Size of a greedily built family of pairwise disjoint sets (restricted to
/// `available`): every hitting set needs one element per member.
fn packing_bound(sets: &[VertexSet], available: VertexSet) -> usize {
    let mut restricted: Vec<VertexSet> = sets.iter().map(|s| s.intersection(available)).collect();
    restricted.sort_unstable_by_key(|s| (s.len(), s.bits()));
    let mut used = VertexSet::EMPTY;
    let mut count = 0;
    for s in restricted {
        if !s.intersects(used) {
            used = used.union(s);
            count += 1;
        }
    }
    count
}

fn greedy_hitting_set(sets: &[VertexSet]) -> VertexSet {
    let mut chosen = VertexSet::EMPTY;
    let mut uncovered: Vec<VertexSet> = sets.to_vec();
    while !uncovered.is_empty() {
        let mut counts = [0usize; 64];
        for s in &uncovered {
            for v in s.iter() {
                counts[v] += 1;
            }
        }
        let best = (0..64).max_by_key(|&v| (counts[v], std::cmp::Reverse(v))).unwrap();
        chosen.insert(best);
        uncovered.retain(|s| !s.contains(best));
    }
    chosen
}
