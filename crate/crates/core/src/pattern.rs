//! Induced subgraph search for small patterns.

use crate::bitset::VertexSet;
use crate::families::{gamma1, gamma2};
use crate::graph::Graph;

/// An induced embedding: `mapping[p]` is the host vertex for pattern vertex
/// `p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PatternMatch {
    pub mapping: Vec<usize>,
}

impl PatternMatch {
    pub fn image(&self) -> VertexSet {
        self.mapping.iter().copied().collect()
    }

    /// Whether the mapping is injective and preserves both adjacency and
    /// non-adjacency.
    pub fn is_induced_embedding(&self, host: &Graph, pattern: &Graph) -> bool {
        let m = &self.mapping;
        m.len() == pattern.order()
            && m.iter().all(|&h| h < host.order())
            && self.image().len() == m.len()
            && (0..m.len()).all(|a| (a + 1..m.len()).all(|b| pattern.has_edge(a, b) == host.has_edge(m[a], m[b])))
    }
}

/// Finds an induced copy of `pattern` in `host`.
///
/// Pattern vertices are placed in degree-descending order (ties by index)
/// and host candidates are tried in increasing order, so the result is the
/// first embedding in that search order.
pub fn find_induced(host: &Graph, pattern: &Graph) -> Option<PatternMatch> {
    let (hn, pn) = (host.order(), pattern.order());
    if pn > hn {
        return None;
    }
    let mut order: Vec<usize> = (0..pn).collect();
    order.sort_by_key(|&p| (std::cmp::Reverse(pattern.degree(p)), p));
    let mut mapping = vec![usize::MAX; pn];
    let mut st = State { host, pattern, order: &order, mapping: &mut mapping };
    if st.place(0, VertexSet::EMPTY) {
        Some(PatternMatch { mapping })
    } else {
        None
    }
}

struct State<'a> {
    host: &'a Graph,
    pattern: &'a Graph,
    order: &'a [usize],
    mapping: &'a mut Vec<usize>,
}

impl State<'_> {
    fn place(&mut self, depth: usize, used: VertexSet) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let p = self.order[depth];
        // Host vertices consistent with every already placed pattern vertex.
        let mut candidates = self.host.vertices().difference(used);
        for &q in &self.order[..depth] {
            let hq = self.mapping[q];
            candidates = if self.pattern.has_edge(p, q) {
                candidates.intersection(self.host.neighbors(hq))
            } else {
                candidates.difference(self.host.neighbors(hq))
            };
        }
        let need = self.pattern.degree(p);
        for h in candidates.iter() {
            if self.host.degree(h) < need {
                continue;
            }
            self.mapping[p] = h;
            if self.place(depth + 1, used.with(h)) {
                return true;
            }
        }
        self.mapping[p] = usize::MAX;
        false
    }
}

/// No induced copy of either forbidden six-vertex configuration.
pub fn is_gamma_free(g: &Graph) -> bool {
    find_induced(g, &gamma1()).is_none() && find_induced(g, &gamma2()).is_none()
}
