//! Local metric dimension and metric dimension via minimum hitting set.
//!
//! For a pair `{u, v}` let `D(u, v) = {w : d(w,u) != d(w,v)}`. A set `W` is
//! local resolving iff it meets `D(u, v)` for every edge `uv`: when an
//! endpoint lies in `W` the intersection is automatic because both
//! endpoints belong to their own distinguisher set. The same holds for
//! resolving sets with every pair in place of every edge.

use std::fmt;

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::{DistanceMatrix, Graph};
use crate::hitting::minimum_hitting_set;
use crate::invariants::{clique_number, twin_partition};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    /// Adjacent pairs only.
    Local,
    /// All unordered pairs.
    Full,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Local => "local",
            Mode::Full => "full",
        })
    }
}

impl std::str::FromStr for Mode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "local" => Ok(Mode::Local),
            "full" => Ok(Mode::Full),
            other => Err(format!("unknown mode `{other}` (expected local or full)")),
        }
    }
}

/// One distinguisher set per edge (local mode) or per pair (full mode).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstraintSystem {
    pub universe: VertexSet,
    pub mode: Mode,
    /// `((u, v), D(u, v))` with `u < v`, in lexicographic pair order.
    pub constraints: Vec<((usize, usize), VertexSet)>,
}

impl ConstraintSystem {
    pub fn sets(&self) -> Vec<VertexSet> {
        self.constraints.iter().map(|&(_, s)| s).collect()
    }

    /// Whether `w` meets every constraint.
    pub fn is_hit_by(&self, w: VertexSet) -> bool {
        self.constraints.iter().all(|&(_, s)| s.intersects(w))
    }
}

pub fn distinguisher_sets(g: &Graph, dm: &DistanceMatrix, mode: Mode) -> ConstraintSystem {
    let n = g.order();
    let constraints = match mode {
        Mode::Local => g.edges().map(|(u, v)| ((u, v), dm.distinguishers(u, v))).collect(),
        Mode::Full => (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .map(|(u, v)| ((u, v), dm.distinguishers(u, v)))
            .collect(),
    };
    ConstraintSystem { universe: g.vertices(), mode, constraints }
}

/// Direct check of the definition: every edge with both endpoints outside
/// `w` is distinguished by some member of `w`.
pub fn is_local_resolving(g: &Graph, w: VertexSet) -> Result<bool> {
    let dm = g.distances()?;
    Ok(g.edges()
        .filter(|&(u, v)| !w.contains(u) && !w.contains(v))
        .all(|(u, v)| w.iter().any(|x| dm.get(x, u) != dm.get(x, v))))
}

/// Direct check of the definition for ordinary resolving sets.
pub fn is_resolving(g: &Graph, w: VertexSet) -> Result<bool> {
    let dm = g.distances()?;
    let outside = g.vertices().difference(w).to_vec();
    Ok(outside
        .iter()
        .enumerate()
        .all(|(i, &u)| outside[i + 1..].iter().all(|&v| w.iter().any(|x| dm.get(x, u) != dm.get(x, v)))))
}

/// Known lower bounds on the local metric dimension.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LowerBounds {
    /// `n - k`, `k` the number of true-twin classes.
    pub twin: usize,
    /// `ceil(log2 ω)`.
    pub log: usize,
    /// `n - 2^(n-ω)` before clamping; may be negative.
    pub gap_raw: i64,
    /// `max(gap_raw, 0)`.
    pub gap: usize,
}

impl LowerBounds {
    pub fn max(&self) -> usize {
        self.twin.max(self.log).max(self.gap)
    }
}

fn ceil_log2(x: usize) -> usize {
    if x <= 1 {
        0
    } else {
        (usize::BITS - (x - 1).leading_zeros()) as usize
    }
}

fn gap_bound(n: usize, omega: usize) -> i64 {
    // n - ω <= 61, so the power fits in an i64.
    n as i64 - (1i64 << (n - omega))
}

pub fn paper_lower_bounds(g: &Graph) -> Result<LowerBounds> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(bounds_from(g.order(), clique_number(g).size, twin_partition(g).class_count()))
}

fn bounds_from(n: usize, omega: usize, twin_classes: usize) -> LowerBounds {
    let gap_raw = gap_bound(n, omega);
    LowerBounds { twin: n - twin_classes, log: ceil_log2(omega), gap_raw, gap: gap_raw.max(0) as usize }
}

/// An optimal set together with the lower bounds that were on hand.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DimResult {
    pub value: usize,
    /// Lexicographically smallest optimal set.
    pub witness: VertexSet,
    pub bounds: LowerBounds,
}

pub fn local_metric_dimension(g: &Graph) -> Result<DimResult> {
    solve(g, Mode::Local)
}

pub fn metric_dimension(g: &Graph) -> Result<DimResult> {
    solve(g, Mode::Full)
}

fn solve(g: &Graph, mode: Mode) -> Result<DimResult> {
    let dm = g.distances()?;
    let bounds = bounds_from(g.order(), clique_number(g).size, twin_partition(g).class_count());
    let system = distinguisher_sets(g, &dm, mode);
    // Every set contains its own pair, so the full vertex set always hits.
    let witness =
        minimum_hitting_set(system.universe, &system.sets(), bounds.max()).expect("distinguisher sets are never empty");
    Ok(DimResult { value: witness.len(), witness, bounds })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::*;

    fn set(v: &[usize]) -> VertexSet {
        v.iter().copied().collect()
    }

    /// Smallest local resolving set by plain subset enumeration.
    fn naive_local(g: &Graph) -> usize {
        (0u64..1 << g.order())
            .map(VertexSet::from_bits)
            .filter(|&w| is_local_resolving(g, w).unwrap())
            .map(|w| w.len())
            .min()
            .unwrap()
    }

    #[test]
    fn c5_distinguishers() {
        let g = cycle(5).unwrap();
        let dm = g.distances().unwrap();
        let sys = distinguisher_sets(&g, &dm, Mode::Local);
        assert_eq!(sys.constraints.len(), 5);
        assert_eq!(sys.constraints[0], ((0, 1), set(&[0, 1, 2, 4])));
        let full = distinguisher_sets(&g, &dm, Mode::Full);
        assert_eq!(full.constraints.len(), 10);
    }

    #[test]
    fn twin_edge_distinguished_only_by_endpoints() {
        let g = apex_triangles(2).unwrap();
        let dm = g.distances().unwrap();
        assert_eq!(dm.distinguishers(0, 1), set(&[0, 1]));
        assert_eq!(dm.distinguishers(4, 5), set(&[4, 5]));
    }

    #[test]
    fn bipartite_edges_distinguished_by_everyone() {
        let g = path(6).unwrap();
        let dm = g.distances().unwrap();
        let sys = distinguisher_sets(&g, &dm, Mode::Local);
        assert!(sys.constraints.iter().all(|&(_, s)| s == g.vertices()));
    }

    #[test]
    fn local_resolving_examples() {
        let c5 = cycle(5).unwrap();
        assert!(!is_local_resolving(&c5, set(&[0])).unwrap());
        assert!(is_local_resolving(&c5, set(&[0, 1])).unwrap());
        for v in 0..5 {
            assert!(is_local_resolving(&c5, c5.vertices().without(v)).unwrap());
        }
        let dis = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert!(matches!(is_local_resolving(&dis, set(&[0])), Err(Error::Disconnected)));
    }

    #[test]
    fn dimension_examples() {
        assert_eq!(local_metric_dimension(&complete(6).unwrap()).unwrap().value, 5);
        assert_eq!(local_metric_dimension(&cycle(6).unwrap()).unwrap().value, 1);
        assert_eq!(local_metric_dimension(&path(7).unwrap()).unwrap().value, 1);
        let c5 = local_metric_dimension(&cycle(5).unwrap()).unwrap();
        assert_eq!(c5.value, 2);
        assert_eq!(c5.witness, set(&[0, 1]));
        assert_eq!(local_metric_dimension(&complete_minus_bipartite(9, 4, 3).unwrap()).unwrap().value, 6);
        let g3 = local_metric_dimension(&apex_triangles(3).unwrap()).unwrap();
        assert_eq!(g3.value, 6);
        assert_eq!(g3.witness, set(&[0, 1, 3, 4, 6, 7]));
    }

    #[test]
    fn metric_dimension_examples() {
        for n in 2..=7 {
            assert_eq!(metric_dimension(&complete(n).unwrap()).unwrap().value, n - 1);
            assert_eq!(metric_dimension(&path(n).unwrap()).unwrap().value, 1);
        }
        assert_eq!(metric_dimension(&cycle(5).unwrap()).unwrap().value, 2);
    }

    #[test]
    fn tiny_orders() {
        let k1 = complete(1).unwrap();
        let r = local_metric_dimension(&k1).unwrap();
        assert_eq!((r.value, r.witness), (0, VertexSet::EMPTY));
        assert_eq!(metric_dimension(&k1).unwrap().value, 0);
        assert_eq!(local_metric_dimension(&complete(2).unwrap()).unwrap().value, 1);
        assert_eq!(metric_dimension(&complete(2).unwrap()).unwrap().value, 1);
    }

    #[test]
    fn disconnected_rejected() {
        let g = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert!(matches!(local_metric_dimension(&g), Err(Error::Disconnected)));
        assert!(matches!(metric_dimension(&g), Err(Error::Disconnected)));
        assert!(matches!(paper_lower_bounds(&g), Err(Error::Disconnected)));
    }

    #[test]
    fn lower_bound_examples() {
        let k8 = paper_lower_bounds(&complete(8).unwrap()).unwrap();
        assert_eq!((k8.twin, k8.log, k8.gap), (7, 3, 7));
        let lam = paper_lower_bounds(&lambda_graph()).unwrap();
        assert_eq!((lam.gap_raw, lam.gap), (3, 3));
        let c5 = paper_lower_bounds(&cycle(5).unwrap()).unwrap();
        assert_eq!((c5.twin, c5.log, c5.gap_raw, c5.gap), (0, 1, -3, 0));
        assert_eq!(c5.max(), 1);
        // Large n - ω must not overflow.
        let star = Graph::new(62, (1..62).map(|v| (0, v))).unwrap();
        let b = paper_lower_bounds(&star).unwrap();
        assert_eq!(b.gap_raw, 62 - (1i64 << 60));
        assert_eq!(b.gap, 0);
    }

    #[test]
    fn ceil_log2_values() {
        let expected = [(1, 0), (2, 1), (3, 2), (4, 2), (5, 3), (8, 3), (9, 4), (62, 6)];
        for (x, e) in expected {
            assert_eq!(ceil_log2(x), e, "{x}");
        }
    }

    #[test]
    fn witness_is_local_resolving() {
        for g in [gamma1(), gamma2(), lambda_graph(), cycle(7).unwrap()] {
            let r = local_metric_dimension(&g).unwrap();
            assert_eq!(r.witness.len(), r.value);
            assert!(is_local_resolving(&g, r.witness).unwrap());
            assert!(r.value >= r.bounds.max());
            assert_eq!(r.value, naive_local(&g));
        }
    }

    #[test]
    fn gamma1_and_upsilon_values() {
        assert_eq!(local_metric_dimension(&gamma1()).unwrap().value, 2);
        for mask in 0..8 {
            assert_eq!(local_metric_dimension(&upsilon(mask).unwrap()).unwrap().value, 3);
        }
    }
}
