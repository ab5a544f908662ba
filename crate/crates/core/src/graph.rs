//! Simple undirected graphs on at most 62 vertices, stored as adjacency
//! bitrows, with graph6 interchange and hop distances.

use std::fmt;

use crate::bitset::VertexSet;
use crate::error::{Error, Graph6Error, Result};

/// Largest supported order. Keeps graph6 to a single size byte and every
/// neighbourhood inside one `u64`.
pub const MAX_ORDER: usize = 62;

const GRAPH6_HEADER: &str = ">>graph6<<";

/// An immutable simple graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<VertexSet>,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges collapse; `(u, v)`
    /// and `(v, u)` are the same edge.
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Self::empty(n)?;
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            g.adj[u].insert(v);
            g.adj[v].insert(u);
        }
        Ok(g)
    }

    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_ORDER {
            return Err(Error::OrderOutOfRange(n));
        }
        Ok(Graph { adj: vec![VertexSet::EMPTY; n] })
    }

    /// Builds a graph directly from neighbourhood rows, checking symmetry and
    /// irreflexivity.
    pub fn from_rows(rows: Vec<VertexSet>) -> Result<Self> {
        let n = rows.len();
        if n == 0 || n > MAX_ORDER {
            return Err(Error::OrderOutOfRange(n));
        }
        for (v, row) in rows.iter().enumerate() {
            if row.contains(v) {
                return Err(Error::SelfLoop(v));
            }
            if let Some(w) = row.difference(VertexSet::full(n)).first() {
                return Err(Error::VertexOutOfRange { vertex: w, n });
            }
            for u in row.iter() {
                if !rows[u].contains(v) {
                    return Err(Error::InvalidParameter {
                        family: "adjacency rows",
                        reason: format!("edge {v}-{u} is not symmetric"),
                    });
                }
            }
        }
        Ok(Graph { adj: rows })
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.adj.len()
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.adj.iter().map(|r| r.len()).sum::<usize>() / 2
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.order())
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    #[inline]
    pub fn closed_neighborhood(&self, v: usize) -> VertexSet {
        self.adj[v].with(v)
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn rows(&self) -> &[VertexSet] {
        &self.adj
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, row)| row.intersection(VertexSet::above(u)).iter().map(move |v| (u, v)))
    }

    pub fn is_complete(&self) -> bool {
        let n = self.order();
        self.size() == n * (n - 1) / 2
    }

    /// Returns a copy with the edge `uv` added.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Self> {
        let n = self.order();
        for w in [u, v] {
            if w >= n {
                return Err(Error::VertexOutOfRange { vertex: w, n });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        let mut adj = self.adj.clone();
        adj[u].insert(v);
        adj[v].insert(u);
        Ok(Graph { adj })
    }

    /// Relabels so that old vertex `v` becomes `perm[v]`.
    ///
    /// Panics if `perm` is not a permutation of `0..n`.
    pub fn relabel(&self, perm: &[usize]) -> Self {
        let n = self.order();
        assert_eq!(perm.len(), n, "permutation length must equal the order");
        assert_eq!(perm.iter().copied().collect::<VertexSet>(), VertexSet::full(n), "not a permutation");
        let mut adj = vec![VertexSet::EMPTY; n];
        for (u, row) in self.adj.iter().enumerate() {
            for v in row.iter() {
                adj[perm[u]].insert(perm[v]);
            }
        }
        Graph { adj }
    }

    /// The subgraph induced by `keep`, with vertices renumbered in
    /// increasing order.
    pub fn induced(&self, keep: VertexSet) -> Result<Self> {
        let keep = keep.intersection(self.vertices());
        let order: Vec<usize> = keep.to_vec();
        let mut index = vec![usize::MAX; self.order()];
        for (i, &v) in order.iter().enumerate() {
            index[v] = i;
        }
        let mut g = Graph::empty(order.len())?;
        for (i, &v) in order.iter().enumerate() {
            for u in self.adj[v].intersection(keep).iter() {
                g.adj[i].insert(index[u]);
            }
        }
        Ok(g)
    }

    pub fn complement(&self) -> Self {
        let all = self.vertices();
        let adj = self.adj.iter().enumerate().map(|(v, row)| all.difference(*row).without(v)).collect();
        Graph { adj }
    }

    /// Vertices reachable from `start`.
    pub fn component_of(&self, start: usize) -> VertexSet {
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier.iter() {
                next = next.union(self.adj[v]);
            }
            frontier = next.difference(seen);
            seen = seen.union(frontier);
        }
        seen
    }

    pub fn is_connected(&self) -> bool {
        self.component_of(0) == self.vertices()
    }

    /// Two-colourability, decided per component.
    pub fn is_bipartite(&self) -> bool {
        let n = self.order();
        let mut colour: Vec<Option<bool>> = vec![None; n];
        let mut stack = Vec::new();
        for s in 0..n {
            if colour[s].is_some() {
                continue;
            }
            colour[s] = Some(false);
            stack.push(s);
            while let Some(v) = stack.pop() {
                let c = colour[v].unwrap();
                for u in self.adj[v].iter() {
                    match colour[u] {
                        None => {
                            colour[u] = Some(!c);
                            stack.push(u);
                        }
                        Some(cu) if cu == c => return false,
                        Some(_) => {}
                    }
                }
            }
        }
        true
    }

    pub fn is_triangle_free(&self) -> bool {
        self.edges().all(|(u, v)| !self.adj[u].intersects(self.adj[v]))
    }

    /// All-pairs hop distances by breadth-first search from every vertex.
    pub fn distances(&self) -> Result<DistanceMatrix> {
        let n = self.order();
        let mut d = vec![0u8; n * n];
        for s in 0..n {
            let mut seen = VertexSet::singleton(s);
            let mut frontier = seen;
            let mut depth = 0u8;
            while !frontier.is_empty() {
                for v in frontier.iter() {
                    d[s * n + v] = depth;
                }
                let mut next = VertexSet::EMPTY;
                for v in frontier.iter() {
                    next = next.union(self.adj[v]);
                }
                frontier = next.difference(seen);
                seen = seen.union(frontier);
                depth += 1;
            }
            if seen.len() != n {
                return Err(Error::Disconnected);
            }
        }
        Ok(DistanceMatrix { n, d })
    }

    /// Decodes a single graph6 line. A leading `>>graph6<<` header and
    /// trailing whitespace are ignored.
    pub fn from_graph6(text: &str) -> Result<Self, Graph6Error> {
        let text = text.trim_end_matches(['\n', '\r']);
        let text = text.strip_prefix(GRAPH6_HEADER).unwrap_or(text);
        let bytes = text.as_bytes();
        let (&size, payload) = bytes.split_first().ok_or(Graph6Error::Empty)?;
        if size == 126 {
            return Err(Graph6Error::ExtendedSize);
        }
        if !(63..=126).contains(&size) {
            return Err(Graph6Error::InvalidByte { offset: 0, byte: size });
        }
        let n = (size - 63) as usize;
        if n == 0 {
            return Err(Graph6Error::ZeroOrder);
        }
        let expected = (n * (n - 1) / 2).div_ceil(6);
        if payload.len() != expected {
            return Err(Graph6Error::Length { n, expected, found: payload.len() });
        }
        let mut adj = vec![VertexSet::EMPTY; n];
        let mut k = 0;
        for v in 1..n {
            for u in 0..v {
                let (byte_i, bit) = (k / 6, 5 - k % 6);
                let b = payload[byte_i];
                if !(63..=126).contains(&b) {
                    return Err(Graph6Error::InvalidByte { offset: byte_i + 1, byte: b });
                }
                if (b - 63) >> bit & 1 == 1 {
                    adj[u].insert(v);
                    adj[v].insert(u);
                }
                k += 1;
            }
        }
        // Validate padding bytes that carried no edge bits.
        if let Some((i, &b)) = payload.iter().enumerate().find(|(_, b)| !(63..=126).contains(*b)) {
            return Err(Graph6Error::InvalidByte { offset: i + 1, byte: b });
        }
        Ok(Graph { adj })
    }

    /// Encodes as a graph6 line (without the trailing newline).
    pub fn to_graph6(&self) -> String {
        let n = self.order();
        let mut out = String::with_capacity(1 + (n * (n - 1) / 2).div_ceil(6));
        out.push((63 + n as u8) as char);
        let mut group = 0u8;
        let mut filled = 0;
        for v in 1..n {
            for u in 0..v {
                group = group << 1 | self.has_edge(u, v) as u8;
                filled += 1;
                if filled == 6 {
                    out.push((63 + group) as char);
                    group = 0;
                    filled = 0;
                }
            }
        }
        if filled > 0 {
            out.push((63 + (group << (6 - filled))) as char);
        }
        out
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({} {:?})", self.to_graph6(), self.edges().collect::<Vec<_>>())
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_graph6())
    }
}

impl std::str::FromStr for Graph {
    type Err = Graph6Error;

    fn from_str(s: &str) -> Result<Self, Graph6Error> {
        Graph::from_graph6(s.trim())
    }
}

/// All-pairs hop distances of a connected graph.
#[derive(Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u8>,
}

impl DistanceMatrix {
    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, u: usize, v: usize) -> usize {
        self.d[u * self.n + v] as usize
    }

    /// Row of distances from `u`.
    pub fn row(&self, u: usize) -> &[u8] {
        &self.d[u * self.n..(u + 1) * self.n]
    }

    pub fn diameter(&self) -> usize {
        self.d.iter().copied().max().unwrap_or(0) as usize
    }

    /// `{w : d(w,u) != d(w,v)}`.
    pub fn distinguishers(&self, u: usize, v: usize) -> VertexSet {
        let (ru, rv) = (self.row(u), self.row(v));
        ru.iter().zip(rv).enumerate().filter(|(_, (a, b))| a != b).map(|(w, _)| w).collect()
    }
}

impl fmt::Debug for DistanceMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut l = f.debug_list();
        for u in 0..self.n {
            l.entry(&self.row(u));
        }
        l.finish()
    }
}
