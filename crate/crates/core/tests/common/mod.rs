#![allow(dead_code, clippy::needless_range_loop)]

use localdim::{Graph, VertexSet};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

/// Random connected graph: a random spanning tree plus each remaining pair
/// with probability `p`.
pub fn random_connected(rng: &mut StdRng, n: usize, p: f64) -> Graph {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut edges = Vec::new();
    for i in 1..n {
        let j = rng.gen_range(0..i);
        edges.push((order[i], order[j]));
    }
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges).unwrap()
}

pub fn random_permutation(rng: &mut StdRng, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}

/// Local resolving test straight from the definition, with distances from
/// Floyd–Warshall so it shares nothing with the library's BFS.
pub fn naive_is_local_resolving(g: &Graph, w: VertexSet, pairs_all: bool) -> bool {
    let d = floyd_warshall(g);
    let n = g.order();
    for u in 0..n {
        for v in u + 1..n {
            if !pairs_all && !g.has_edge(u, v) {
                continue;
            }
            if w.contains(u) || w.contains(v) {
                continue;
            }
            if !w.iter().any(|x| d[x][u] != d[x][v]) {
                return false;
            }
        }
    }
    true
}

/// Smallest (local) resolving set size by enumerating all subsets.
pub fn naive_dimension(g: &Graph, pairs_all: bool) -> usize {
    let n = g.order();
    (0u64..1 << n)
        .map(VertexSet::from_bits)
        .filter(|&w| naive_is_local_resolving(g, w, pairs_all))
        .map(|w| w.len())
        .min()
        .unwrap()
}

pub fn floyd_warshall(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.order();
    let inf = usize::MAX / 4;
    let mut d = vec![vec![inf; n]; n];
    for u in 0..n {
        d[u][u] = 0;
        for v in g.neighbors(u).iter() {
            d[u][v] = 1;
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if d[i][k] + d[k][j] < d[i][j] {
                    d[i][j] = d[i][k] + d[k][j];
                }
            }
        }
    }
    d
}

/// Maximum clique size by checking every vertex subset.
pub fn naive_clique_number(g: &Graph) -> usize {
    let n = g.order();
    (1u64..1 << n)
        .map(VertexSet::from_bits)
        .filter(|s| s.iter().all(|v| s.without(v).is_subset(g.neighbors(v))))
        .map(|s| s.len())
        .max()
        .unwrap()
}

/// Induced copy of `pattern` in `host` by trying every injective tuple.
pub fn naive_has_induced(host: &Graph, pattern: &Graph) -> bool {
    fn rec(host: &Graph, pattern: &Graph, map: &mut Vec<usize>) -> bool {
        let k = map.len();
        if k == pattern.order() {
            return true;
        }
        for h in 0..host.order() {
            if map.contains(&h) {
                continue;
            }
            if (0..k).all(|q| pattern.has_edge(q, k) == host.has_edge(map[q], h)) {
                map.push(h);
                if rec(host, pattern, map) {
                    return true;
                }
                map.pop();
            }
        }
        false
    }
    rec(host, pattern, &mut Vec::new())
}
