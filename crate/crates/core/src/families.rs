//! Constructors for the named graphs and a small textual grammar to reach
//! them from the command line.
//!
//! Labels written `v_1 .. v_k` in the literature map to `0 .. k-1`.

use std::fmt;
use std::str::FromStr;

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;

fn invalid(family: &'static str, reason: impl Into<String>) -> Error {
    Error::InvalidParameter { family, reason: reason.into() }
}

pub fn complete(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(invalid("complete", "n must be at least 1"));
    }
    Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(invalid("cycle", "n must be at least 3"));
    }
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn path(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(invalid("path", "n must be at least 1"));
    }
    Graph::new(n, (1..n).map(|i| (i - 1, i)))
}

/// `K_n` with the edges of a `K_{λ,μ}` removed.
///
/// `L = {0..λ-1}`, `M = {λ..λ+μ-1}`, and the remaining vertices are joined
/// to everything.
pub fn complete_minus_bipartite(n: usize, lambda: usize, mu: usize) -> Result<Graph> {
    const NAME: &str = "complete_minus_bipartite";
    if n < 3 {
        return Err(invalid(NAME, "n must be at least 3"));
    }
    if mu < 1 || mu > lambda {
        return Err(invalid(NAME, format!("need 1 <= mu <= lambda, got lambda={lambda}, mu={mu}")));
    }
    if lambda + mu > n - 1 {
        return Err(invalid(NAME, format!("need lambda + mu <= n - 1, got {} > {}", lambda + mu, n - 1)));
    }
    let is_removed = |u: usize, v: usize| {
        let side = |x: usize| {
            if x < lambda {
                1
            } else if x < lambda + mu {
                2
            } else {
                0
            }
        };
        matches!((side(u), side(v)), (1, 2) | (2, 1))
    };
    Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|&(u, v)| !is_removed(u, v)))
}

/// `K_4` on `0..3` with vertex 4 joined to 0 and 1, and vertex 5 joined to
/// 0 and 2.
pub fn gamma1() -> Graph {
    Graph::new(6, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (0, 4), (0, 5), (1, 4), (2, 5)])
        .expect("static edge list")
}

/// [`gamma1`] plus the edge 4-5.
pub fn gamma2() -> Graph {
    gamma1().with_edge(4, 5).expect("static edge")
}

/// Attachment of the clique vertices `v_1..v_8` (0..7) to `u_1, u_2, u_3`
/// (bits 0, 1, 2 for vertices 8, 9, 10). Every subset of `U` occurs once.
const LAMBDA_ATTACHMENTS: [u8; 8] = [0b000, 0b001, 0b010, 0b100, 0b101, 0b011, 0b110, 0b111];

/// `K_8` on `0..7` plus three pairwise non-adjacent vertices `8, 9, 10`,
/// where the eight clique vertices see pairwise distinct subsets of
/// `{8, 9, 10}`.
pub fn lambda_graph() -> Graph {
    let clique = (0..8).flat_map(|u| (u + 1..8).map(move |v| (u, v)));
    let attach = LAMBDA_ATTACHMENTS
        .iter()
        .enumerate()
        .flat_map(|(v, &mask)| (0..3).filter(move |j| mask >> j & 1 == 1).map(move |j| (v, 8 + j)));
    Graph::new(11, clique.chain(attach)).expect("static construction")
}

/// [`lambda_graph`] with edges among `u_1, u_2, u_3` added according to
/// `mask`: bit 0 adds `u_1u_2`, bit 1 adds `u_1u_3`, bit 2 adds `u_2u_3`.
pub fn upsilon(mask: u8) -> Result<Graph> {
    if mask > 7 {
        return Err(invalid("upsilon", format!("mask must be in 0..=7, got {mask}")));
    }
    let mut g = lambda_graph();
    for (bit, (a, b)) in [(8, 9), (8, 10), (9, 10)].into_iter().enumerate() {
        if mask >> bit & 1 == 1 {
            g = g.with_edge(a, b)?;
        }
    }
    Ok(g)
}

/// `ℓ` disjoint triangles `{3i, 3i+1, 3i+2}` and an apex `3ℓ` joined to all
/// of them.
pub fn apex_triangles(l: usize) -> Result<Graph> {
    if l < 2 {
        return Err(invalid("apex_triangles", format!("need l >= 2, got {l}")));
    }
    let n = 3 * l + 1;
    if n > crate::graph::MAX_ORDER {
        return Err(Error::OrderOutOfRange(n));
    }
    let triangles = (0..l).flat_map(|i| {
        let b = 3 * i;
        [(b, b + 1), (b + 1, b + 2), (b, b + 2)]
    });
    let apex = (0..3 * l).map(|v| (v, 3 * l));
    Graph::new(n, triangles.chain(apex))
}

/// The triangles of [`apex_triangles`].
pub fn apex_triangle_sets(l: usize) -> Vec<VertexSet> {
    (0..l).map(|i| VertexSet::from_bits(0b111 << (3 * i))).collect()
}

/// A named family member, parsed from strings such as `knm(9,4,3)`,
/// `upsilon(5)`, `apex(3)`, `c5` or `gamma1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    Complete(usize),
    Cycle(usize),
    Path(usize),
    CompleteMinusBipartite { n: usize, lambda: usize, mu: usize },
    Gamma1,
    Gamma2,
    Lambda,
    Upsilon(u8),
    ApexTriangles(usize),
}

impl FamilySpec {
    pub fn build(&self) -> Result<Graph> {
        match *self {
            FamilySpec::Complete(n) => complete(n),
            FamilySpec::Cycle(n) => cycle(n),
            FamilySpec::Path(n) => path(n),
            FamilySpec::CompleteMinusBipartite { n, lambda, mu } => complete_minus_bipartite(n, lambda, mu),
            FamilySpec::Gamma1 => Ok(gamma1()),
            FamilySpec::Gamma2 => Ok(gamma2()),
            FamilySpec::Lambda => Ok(lambda_graph()),
            FamilySpec::Upsilon(mask) => upsilon(mask),
            FamilySpec::ApexTriangles(l) => apex_triangles(l),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            FamilySpec::Complete(_) => "complete",
            FamilySpec::Cycle(_) => "cycle",
            FamilySpec::Path(_) => "path",
            FamilySpec::CompleteMinusBipartite { .. } => "complete_minus_bipartite",
            FamilySpec::Gamma1 => "gamma1",
            FamilySpec::Gamma2 => "gamma2",
            FamilySpec::Lambda => "lambda",
            FamilySpec::Upsilon(_) => "upsilon",
            FamilySpec::ApexTriangles(_) => "apex_triangles",
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Complete(n) => write!(f, "kn({n})"),
            FamilySpec::Cycle(n) => write!(f, "cn({n})"),
            FamilySpec::Path(n) => write!(f, "pn({n})"),
            FamilySpec::CompleteMinusBipartite { n, lambda, mu } => {
                write!(f, "knm({n},{lambda},{mu})")
            }
            FamilySpec::Gamma1 => f.write_str("gamma1"),
            FamilySpec::Gamma2 => f.write_str("gamma2"),
            FamilySpec::Lambda => f.write_str("lambda"),
            FamilySpec::Upsilon(m) => write!(f, "upsilon({m})"),
            FamilySpec::ApexTriangles(l) => write!(f, "apex({l})"),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let unknown = || Error::UnknownFamily(s.to_string());
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect::<String>().to_ascii_lowercase();
        let (name, args) = match compact.split_once('(') {
            Some((name, rest)) => {
                let inner = rest.strip_suffix(')').ok_or_else(unknown)?;
                let args =
                    inner.split(',').map(|a| a.parse::<usize>().map_err(|_| unknown())).collect::<Result<Vec<_>>>()?;
                (name.to_string(), args)
            }
            None => {
                // Shorthand such as `c5`, `k6`, `p4`.
                let split = compact.find(|c: char| c.is_ascii_digit()).unwrap_or(compact.len());
                let (name, digits) = compact.split_at(split);
                match name {
                    "k" | "c" | "p" if !digits.is_empty() => {
                        (format!("{name}n"), vec![digits.parse().map_err(|_| unknown())?])
                    }
                    _ => (compact.clone(), Vec::new()),
                }
            }
        };
        let spec = match (name.as_str(), args.as_slice()) {
            ("kn" | "complete", &[n]) => FamilySpec::Complete(n),
            ("cn" | "cycle", &[n]) => FamilySpec::Cycle(n),
            ("pn" | "path", &[n]) => FamilySpec::Path(n),
            ("knm", &[n, lambda, mu]) => FamilySpec::CompleteMinusBipartite { n, lambda, mu },
            ("gamma1", &[]) => FamilySpec::Gamma1,
            ("gamma2", &[]) => FamilySpec::Gamma2,
            ("lambda", &[]) => FamilySpec::Lambda,
            ("upsilon", &[m]) => FamilySpec::Upsilon(u8::try_from(m).map_err(|_| unknown())?),
            ("apex", &[l]) => FamilySpec::ApexTriangles(l),
            _ => return Err(unknown()),
        };
        Ok(spec)
    }
}
