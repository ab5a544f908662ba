//! Clique number and the true-twin partition.

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// A maximum clique: its size and the lexicographically smallest witness.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Clique {
    pub size: usize,
    pub vertices: VertexSet,
}

/// Exact clique number with the lexicographically smallest maximum clique.
///
/// Depth-first search that extends cliques by increasing vertex index, so
/// cliques are visited in lexicographic order; only strict improvements are
/// recorded, which makes the first maximum clique found the smallest one.
/// Branches are cut with a greedy colouring bound on the candidate set.
pub fn clique_number(g: &Graph) -> Clique {
    let mut search = CliqueSearch { g, best: VertexSet::singleton(0) };
    for v in 0..g.order() {
        search.expand(VertexSet::singleton(v), g.neighbors(v).intersection(VertexSet::above(v)));
    }
    Clique { size: search.best.len(), vertices: search.best }
}

struct CliqueSearch<'a> {
    g: &'a Graph,
    best: VertexSet,
}

impl CliqueSearch<'_> {
    fn expand(&mut self, current: VertexSet, candidates: VertexSet) {
        if candidates.is_empty() {
            if current.len() > self.best.len() {
                self.best = current;
            }
            return;
        }
        if current.len() + colour_bound(self.g, candidates) <= self.best.len() {
            return;
        }
        let mut rest = candidates;
        while let Some(v) = rest.first() {
            if current.len() + rest.len() <= self.best.len() {
                return;
            }
            rest.remove(v);
            self.expand(current.with(v), rest.intersection(self.g.neighbors(v)));
        }
    }
}

/// Number of colours used by greedy sequential colouring of `set`; an upper
/// bound on the largest clique inside it.
fn colour_bound(g: &Graph, set: VertexSet) -> usize {
    let mut uncoloured = set;
    let mut colours = 0;
    while !uncoloured.is_empty() {
        colours += 1;
        let mut available = uncoloured;
        while let Some(v) = available.first() {
            uncoloured.remove(v);
            available = available.without(v).difference(g.neighbors(v));
        }
    }
    colours
}

/// Partition of the vertex set into true-twin classes (equal closed
/// neighbourhoods). Classes are ordered by their smallest vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwinPartition {
    pub classes: Vec<VertexSet>,
}

impl TwinPartition {
    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn class_of(&self, v: usize) -> Option<VertexSet> {
        self.classes.iter().copied().find(|c| c.contains(v))
    }

    /// Class sizes in non-increasing order.
    pub fn sizes(&self) -> Vec<usize> {
        let mut s: Vec<usize> = self.classes.iter().map(|c| c.len()).collect();
        s.sort_unstable_by(|a, b| b.cmp(a));
        s
    }
}

pub fn twin_partition(g: &Graph) -> TwinPartition {
    let mut remaining = g.vertices();
    let mut classes = Vec::new();
    while let Some(v) = remaining.first() {
        let closed = g.closed_neighborhood(v);
        // Twins of v are adjacent to v, so they all lie in N[v].
        let class: VertexSet =
            closed.intersection(remaining).iter().filter(|&u| g.closed_neighborhood(u) == closed).collect();
        remaining = remaining.difference(class);
        classes.push(class);
    }
    TwinPartition { classes }
}

/// `n - k` where `k` is the number of true-twin classes.
pub fn twin_lower_bound(g: &Graph) -> Result<usize> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(g.order() - twin_partition(g).class_count())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{apex_triangles, complete, complete_minus_bipartite, cycle};

    /// All-subsets maximum clique, smallest-first lexicographic tie-break.
    fn naive_clique(g: &Graph) -> Clique {
        let n = g.order();
        let mut best: Option<Vec<usize>> = None;
        for mask in 1u64..1 << n {
            let s = VertexSet::from_bits(mask);
            let is_clique = s.iter().all(|v| s.without(v).is_subset(g.neighbors(v)));
            if !is_clique {
                continue;
            }
            let seq = s.to_vec();
            best = match best {
                None => Some(seq),
                Some(b) if seq.len() > b.len() || (seq.len() == b.len() && seq < b) => Some(seq),
                keep => keep,
            };
        }
        let b = best.unwrap();
        Clique { size: b.len(), vertices: b.into_iter().collect() }
    }

    #[test]
    fn clique_examples() {
        assert_eq!(clique_number(&complete(6).unwrap()).size, 6);
        assert_eq!(clique_number(&cycle(5).unwrap()).size, 2);
        assert_eq!(clique_number(&apex_triangles(4).unwrap()).size, 4);
        let g = complete_minus_bipartite(9, 3, 2).unwrap();
        assert_eq!(clique_number(&g), naive_clique(&g));
        assert_eq!(clique_number(&g).size, 7);
    }

    #[test]
    fn clique_matches_naive_on_random_graphs() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        for _ in 0..300 {
            let n = rng.gen_range(1..=12);
            let p: f64 = rng.gen_range(0.1..0.9);
            let edges: Vec<_> =
                (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|_| rng.gen_bool(p)).collect();
            let g = Graph::new(n, edges).unwrap();
            assert_eq!(clique_number(&g), naive_clique(&g), "{g:?}");
        }
    }

    #[test]
    fn lexicographically_smallest_witness() {
        // Two disjoint triangles {0,3,4} and {1,2,5}: witness must be {0,3,4}.
        let g = Graph::new(6, [(0, 3), (3, 4), (0, 4), (1, 2), (2, 5), (1, 5)]).unwrap();
        assert_eq!(clique_number(&g).vertices.to_vec(), vec![0, 3, 4]);
    }

    #[test]
    fn twin_examples() {
        let k5 = complete(5).unwrap();
        assert_eq!(twin_partition(&k5).classes, vec![VertexSet::full(5)]);
        assert_eq!(twin_partition(&cycle(5).unwrap()).class_count(), 5);
        let g = complete_minus_bipartite(9, 4, 3).unwrap();
        let tp = twin_partition(&g);
        assert_eq!(tp.sizes(), vec![4, 3, 2]);
        assert_eq!(tp.classes[0].to_vec(), vec![0, 1, 2, 3]);
    }

    #[test]
    fn twin_bound_examples() {
        assert_eq!(twin_lower_bound(&complete(7).unwrap()).unwrap(), 6);
        assert_eq!(twin_lower_bound(&cycle(5).unwrap()).unwrap(), 0);
        assert_eq!(twin_lower_bound(&complete_minus_bipartite(9, 4, 3).unwrap()).unwrap(), 6);
        let g = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert!(matches!(twin_lower_bound(&g), Err(Error::Disconnected)));
    }
}
