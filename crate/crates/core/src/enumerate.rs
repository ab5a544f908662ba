//! Canonical forms for small graphs, exhaustive generation of connected
//! graphs up to isomorphism, and graph6 corpus reading.

use std::collections::BTreeMap;
use std::fmt;
use std::fs::File;
use std::io::{BufRead, BufReader};
use std::path::Path;

use crate::bitset::VertexSet;
use crate::error::{Error, Graph6Error, Result};
use crate::graph::Graph;

/// Largest order handled by the brute-force canonical form.
pub const MAX_CANONICAL_ORDER: usize = 8;

/// Largest order for which [`connected_graphs`] generates classes.
pub const MAX_GENERATED_ORDER: usize = 7;

/// Minimum upper-triangle bit string over all relabellings, read in graph6
/// column order `x(0,1), x(0,2), x(1,2), x(0,3), ...`. The first bit is the
/// most significant one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalKey {
    pub n: usize,
    pub bits: u64,
}

impl CanonicalKey {
    fn bit_len(&self) -> usize {
        self.n * (self.n - 1) / 2
    }

    /// The canonically labelled graph this key describes.
    pub fn to_graph(&self) -> Graph {
        let len = self.bit_len();
        let mut edges = Vec::new();
        let mut k = 0;
        for v in 1..self.n {
            for u in 0..v {
                if self.bits >> (len - 1 - k) & 1 == 1 {
                    edges.push((u, v));
                }
                k += 1;
            }
        }
        Graph::new(self.n, edges).expect("key describes a valid graph")
    }
}

impl fmt::Display for CanonicalKey {
    /// graph6 of the canonical labelling.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_graph().to_graph6())
    }
}

pub fn canonical_key(g: &Graph) -> Result<CanonicalKey> {
    canonical_form(g).map(|(key, _)| key)
}

/// Canonical key and a labelling achieving it: `order[i]` is the original
/// vertex placed at position `i`.
///
/// Positions are filled left to right. All candidates for the next position
/// extend the same prefix, so only those producing the smallest next column
/// can lead to the minimum; ties are explored exhaustively.
pub fn canonical_form(g: &Graph) -> Result<(CanonicalKey, Vec<usize>)> {
    let n = g.order();
    if n > MAX_CANONICAL_ORDER {
        return Err(Error::CanonicalRange(n));
    }
    let mut search = CanonSearch { g, n, order: Vec::with_capacity(n), best: u64::MAX, best_order: Vec::new() };
    search.descend(VertexSet::EMPTY, 0, 0);
    Ok((CanonicalKey { n, bits: search.best }, search.best_order))
}

/// The graph relabelled into its canonical form.
pub fn canonical_graph(g: &Graph) -> Result<Graph> {
    canonical_key(g).map(|k| k.to_graph())
}

struct CanonSearch<'a> {
    g: &'a Graph,
    n: usize,
    order: Vec<usize>,
    best: u64,
    best_order: Vec<usize>,
}

impl CanonSearch<'_> {
    fn column(&self, c: usize) -> u64 {
        let j = self.order.len();
        self.order.iter().enumerate().fold(0u64, |acc, (i, &p)| acc | (self.g.has_edge(p, c) as u64) << (j - 1 - i))
    }

    fn descend(&mut self, used: VertexSet, prefix: u64, prefix_len: usize) {
        let total = self.n * (self.n - 1) / 2;
        if self.order.len() == self.n {
            if prefix < self.best {
                self.best = prefix;
                self.best_order = self.order.clone();
            }
            return;
        }
        if self.best != u64::MAX && prefix > self.best >> (total - prefix_len) {
            return;
        }
        let free = VertexSet::full(self.n).difference(used);
        let columns: Vec<(usize, u64)> = free.iter().map(|c| (c, self.column(c))).collect();
        let min_col = columns.iter().map(|&(_, col)| col).min().unwrap();
        let j = self.order.len();
        for c in columns.into_iter().filter(|&(_, col)| col == min_col).map(|(c, _)| c) {
            self.order.push(c);
            self.descend(used.with(c), prefix << j | min_col, prefix_len + j);
            self.order.pop();
        }
    }
}

fn labelled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (1..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect();
    (0u64..1 << pairs.len()).map(move |mask| {
        let edges = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e);
        Graph::new(n, edges).expect("pairs are in range")
    })
}

/// One canonical representative per isomorphism class, found by filtering
/// every labelled graph. Practical up to six vertices.
pub fn classes_by_labelled_filter(n: usize, connected_only: bool) -> Result<Vec<Graph>> {
    if n == 0 || n > 6 {
        return Err(Error::GenerationRange(n));
    }
    let mut seen = BTreeMap::new();
    for g in labelled_graphs(n) {
        if connected_only && !g.is_connected() {
            continue;
        }
        let key = canonical_key(&g)?;
        seen.entry(key).or_insert(());
    }
    Ok(seen.into_keys().map(|k| k.to_graph()).collect())
}

/// Classes on `n + 1` vertices obtained by adding one vertex, with every
/// possible neighbourhood, to each class on `n` vertices. `base` must hold
/// every class on `n` vertices, connected or not; any graph loses a vertex
/// to some member of it.
pub fn classes_by_extension(base: &[Graph], connected_only: bool) -> Result<Vec<Graph>> {
    let mut seen = BTreeMap::new();
    for g in base {
        let n = g.order();
        let mut rows = g.rows().to_vec();
        rows.push(VertexSet::EMPTY);
        for mask in 0u64..1 << n {
            let nbrs = VertexSet::from_bits(mask);
            let mut r = rows.clone();
            r[n] = nbrs;
            for u in nbrs.iter() {
                r[u].insert(n);
            }
            let h = Graph::from_rows(r)?;
            if connected_only && !h.is_connected() {
                continue;
            }
            seen.entry(canonical_key(&h)?).or_insert(());
        }
    }
    Ok(seen.into_keys().map(|k| k.to_graph()).collect())
}

/// Every connected graph on `n` vertices, one canonically labelled
/// representative per isomorphism class, sorted by canonical key.
pub fn connected_graphs(n: usize) -> Result<Vec<Graph>> {
    match n {
        1..=6 => classes_by_labelled_filter(n, true),
        7 => classes_by_extension(&classes_by_labelled_filter(6, false)?, true),
        _ => Err(Error::GenerationRange(n)),
    }
}

/// A graph read from a corpus, with its 1-based line number.
#[derive(Debug, Clone)]
pub struct CorpusEntry {
    pub line: usize,
    pub graph: Graph,
}

#[derive(Debug, Clone, Default)]
pub struct Corpus {
    pub graphs: Vec<CorpusEntry>,
    /// Malformed lines, kept when not reading strictly.
    pub errors: Vec<(usize, Graph6Error)>,
}

/// Reads graph6 lines. Blank lines and a `>>graph6<<` header are skipped.
/// With `strict`, the first malformed line is an error; otherwise malformed
/// lines are collected in [`Corpus::errors`].
pub fn parse_corpus<R: BufRead>(reader: R, strict: bool, path: &Path) -> Result<Corpus> {
    let mut corpus = Corpus::default();
    for (i, line) in reader.lines().enumerate() {
        let line_no = i + 1;
        let line = line.map_err(|source| Error::Io { path: path.to_path_buf(), source })?;
        let text = line.trim();
        if text.is_empty() || text == ">>graph6<<" {
            continue;
        }
        match Graph::from_graph6(text) {
            Ok(graph) => corpus.graphs.push(CorpusEntry { line: line_no, graph }),
            Err(source) if strict => return Err(Error::CorpusLine { line: line_no, source }),
            Err(e) => corpus.errors.push((line_no, e)),
        }
    }
    Ok(corpus)
}

pub fn read_corpus(path: impl AsRef<Path>, strict: bool) -> Result<Corpus> {
    let path = path.as_ref();
    let file = File::open(path).map_err(|source| Error::Io { path: path.to_path_buf(), source })?;
    parse_corpus(BufReader::new(file), strict, path)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::*;
    use std::io::Cursor;

    /// Minimum over every one of the n! relabellings, by explicit
    /// enumeration of permutations.
    fn brute_key(g: &Graph) -> u64 {
        let n = g.order();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut best = u64::MAX;
        loop {
            // perm[i] = original vertex at position i
            let mut bits = 0u64;
            for v in 1..n {
                for u in 0..v {
                    bits = bits << 1 | g.has_edge(perm[u], perm[v]) as u64;
                }
            }
            best = best.min(bits);
            // next lexicographic permutation
            let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| perm[i] < perm[i + 1]) else {
                break;
            };
            let j = (i + 1..n).rev().find(|&j| perm[j] > perm[i]).unwrap();
            perm.swap(i, j);
            perm[i + 1..].reverse();
        }
        best
    }

    #[test]
    fn key_matches_brute_force_minimum() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand::rngs::StdRng::seed_from_u64(3);
        for _ in 0..200 {
            let n = rng.gen_range(1..=7);
            let edges: Vec<_> =
                (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|_| rng.gen_bool(0.5)).collect();
            let g = Graph::new(n, edges).unwrap();
            let (key, order) = canonical_form(&g).unwrap();
            assert_eq!(key.bits, brute_key(&g), "{g:?}");
            // The returned labelling realises the key.
            let mut inv = vec![0; n];
            for (pos, &v) in order.iter().enumerate() {
                inv[v] = pos;
            }
            assert_eq!(g.relabel(&inv), key.to_graph());
        }
    }

    #[test]
    fn key_examples() {
        let c5 = cycle(5).unwrap();
        let relabelled = c5.relabel(&[3, 0, 4, 1, 2]);
        assert_eq!(canonical_key(&c5).unwrap(), canonical_key(&relabelled).unwrap());
        assert_ne!(canonical_key(&gamma1()).unwrap(), canonical_key(&gamma2()).unwrap());
        assert!(matches!(canonical_key(&complete(9).unwrap()), Err(Error::CanonicalRange(9))));
        assert_eq!(canonical_key(&complete(8).unwrap()).unwrap().bits, (1 << 28) - 1);
    }

    #[test]
    fn key_display_is_canonical_graph6() {
        let key = canonical_key(&complete(5).unwrap()).unwrap();
        assert_eq!(key.to_string(), "D~{");
    }

    #[test]
    fn four_vertex_connected_classes() {
        let gs = connected_graphs(4).unwrap();
        assert_eq!(gs.len(), 6);
        let keys: std::collections::BTreeSet<_> = gs.iter().map(|g| canonical_key(g).unwrap()).collect();
        assert_eq!(keys.len(), 6);
    }

    #[test]
    fn small_counts() {
        let counts: Vec<usize> = (1..=6).map(|n| connected_graphs(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 6, 21, 112]);
        let all: Vec<usize> = (1..=6).map(|n| classes_by_labelled_filter(n, false).unwrap().len()).collect();
        assert_eq!(all, vec![1, 2, 4, 11, 34, 156]);
        assert!(connected_graphs(0).is_err());
        assert!(connected_graphs(8).is_err());
    }

    #[test]
    fn extension_agrees_with_labelled_filter() {
        for n in 2..=6 {
            let base = classes_by_labelled_filter(n - 1, false).unwrap();
            assert_eq!(
                classes_by_extension(&base, true).unwrap(),
                classes_by_labelled_filter(n, true).unwrap(),
                "n = {n}"
            );
        }
    }

    #[test]
    fn corpus_reading() {
        let p = Path::new("<mem>");
        let c = parse_corpus(Cursor::new(">>graph6<<D~{\n\nD??\n"), true, p).unwrap();
        assert_eq!(c.graphs.len(), 2);
        assert_eq!(c.graphs[0].graph, complete(5).unwrap());
        assert_eq!(c.graphs[1].line, 3);

        let empty = parse_corpus(Cursor::new(""), true, p).unwrap();
        assert!(empty.graphs.is_empty());

        let lax = parse_corpus(Cursor::new("D~{\nD~!\n"), false, p).unwrap();
        assert_eq!(lax.graphs.len(), 1);
        assert_eq!(lax.errors.len(), 1);
        assert_eq!(lax.errors[0].0, 2);
        let err = parse_corpus(Cursor::new("D~{\nD~!\n"), true, p).unwrap_err();
        assert!(matches!(err, Error::CorpusLine { line: 2, .. }));
        assert!(err.to_string().starts_with("line 2:"));
    }

    #[test]
    fn missing_file_names_path() {
        let err = read_corpus("/nonexistent/corpus.g6", false).unwrap_err();
        assert!(err.to_string().contains("/nonexistent/corpus.g6"));
    }
}
