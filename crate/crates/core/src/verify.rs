//! Falsifiable checks of the known statements relating the local metric
//! dimension to order, clique number, twins, bipartiteness and the two
//! forbidden six-vertex configurations, plus corpus-level aggregation.
//!
//! Every check records whether its premise applies separately from whether
//! its conclusion holds, so vacuous cases stay visible. A violation is an
//! applicable check whose conclusion fails.

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};
use std::path::PathBuf;
use std::str::FromStr;
use std::sync::OnceLock;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::enumerate::{canonical_key, connected_graphs, read_corpus, CanonicalKey, MAX_CANONICAL_ORDER};
use crate::error::{Error, Graph6Error, Result};
use crate::families::{apex_triangles, complete_minus_bipartite, cycle, upsilon};
use crate::graph::Graph;
use crate::invariants::{clique_number, twin_partition};
use crate::localdim::{local_metric_dimension, LowerBounds};
use crate::pattern::is_gamma_free;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CheckId {
    /// dim_l = n-1 iff complete.
    C1,
    /// dim_l = n-2 iff ω = n-1.
    C2,
    /// dim_l = 1 iff bipartite.
    C3,
    /// dim_l >= ceil(log2 ω) and dim_l >= n - 2^(n-ω).
    C4,
    /// dim_l >= n - (number of true-twin classes).
    C5,
    /// Triangle-free: dim_l <= 2n/5.
    C6,
    /// ω <= n-3: dim_l <= n-3, with equality exactly for C5 and K_n^-(λ,μ), λ >= μ >= 2.
    C7,
    /// The four order/clique-number implications.
    C8,
    /// dim_l = n-3 iff (ω = n-2 and Γ-free) or C5 or K_n^-(λ,μ), λ >= μ >= 2.
    C9,
    /// ω = n-2: dim_l = n-3 iff Γ-free, dim_l = n-4 iff an induced Γ1 or Γ2 exists.
    C10,
    /// ω in {n-1, n-2, n-3}: dim_l <= (ω-2)/(ω-1) n.
    C11,
}

impl CheckId {
    pub const ALL: [CheckId; 11] = [
        CheckId::C1,
        CheckId::C2,
        CheckId::C3,
        CheckId::C4,
        CheckId::C5,
        CheckId::C6,
        CheckId::C7,
        CheckId::C8,
        CheckId::C9,
        CheckId::C10,
        CheckId::C11,
    ];
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl FromStr for CheckId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CheckId::ALL
            .into_iter()
            .find(|c| c.to_string().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::UnknownCheck(s.to_string()))
    }
}

/// Parses a comma separated list such as `C1,C9`. An empty string selects
/// every check.
pub fn parse_checks(list: &str) -> Result<Vec<CheckId>> {
    if list.trim().is_empty() {
        return Ok(CheckId::ALL.to_vec());
    }
    let mut checks = list.split(',').map(CheckId::from_str).collect::<Result<Vec<_>>>()?;
    checks.sort();
    checks.dedup();
    Ok(checks)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckOutcome {
    pub applicable: bool,
    /// Only ever true when `applicable` is.
    pub holds: bool,
    pub details: String,
}

impl CheckOutcome {
    fn skipped(reason: impl Into<String>) -> Self {
        CheckOutcome { applicable: false, holds: false, details: reason.into() }
    }

    fn verdict(holds: bool, details: impl Into<String>) -> Self {
        CheckOutcome { applicable: true, holds, details: details.into() }
    }

    pub fn is_violation(&self) -> bool {
        self.applicable && !self.holds
    }
}

/// Membership in the equality class of the ω <= n-3 upper bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExtremalClass {
    Cycle5,
    /// `K_n^-(λ, μ)` with `λ >= μ >= 2` and `λ + μ < n`.
    CompleteMinusBipartite {
        lambda: usize,
        mu: usize,
    },
}

impl fmt::Display for ExtremalClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtremalClass::Cycle5 => f.write_str("C5"),
            ExtremalClass::CompleteMinusBipartite { lambda, mu } => write!(f, "knm({lambda},{mu})"),
        }
    }
}

/// Everything the checks consult about one graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphFacts {
    pub n: usize,
    pub m: usize,
    pub omega: usize,
    pub twin_classes: usize,
    pub dim_l: usize,
    pub bounds: LowerBounds,
    pub complete: bool,
    pub bipartite: bool,
    pub triangle_free: bool,
    pub gamma_free: bool,
    pub extremal: Option<ExtremalClass>,
}

impl GraphFacts {
    pub fn compute(g: &Graph) -> Result<Self> {
        let dim = local_metric_dimension(g)?;
        let n = g.order();
        Ok(GraphFacts {
            n,
            m: g.size(),
            omega: clique_number(g).size,
            twin_classes: twin_partition(g).class_count(),
            dim_l: dim.value,
            bounds: dim.bounds,
            complete: g.is_complete(),
            bipartite: g.is_bipartite(),
            triangle_free: g.is_triangle_free(),
            gamma_free: n < 6 || is_gamma_free(g),
            extremal: extremal_class(g),
        })
    }

    fn summary(&self) -> String {
        format!("n={} omega={} dim_l={}", self.n, self.omega, self.dim_l)
    }

    /// `(ω = n-2 and Γ-free)`, `C5`, `K_n^-(λ,μ)` with `μ >= 2`: the three
    /// alternatives characterising `dim_l = n-3`, as labels.
    pub fn classification_branches(&self) -> Vec<&'static str> {
        let mut branches = Vec::new();
        if self.omega + 2 == self.n && self.gamma_free {
            branches.push("i");
        }
        match self.extremal {
            Some(ExtremalClass::Cycle5) => branches.push("ii"),
            Some(ExtremalClass::CompleteMinusBipartite { .. }) => branches.push("iii"),
            None => {}
        }
        branches
    }
}

type FamilyTable = BTreeMap<CanonicalKey, ExtremalClass>;

/// Canonical keys of C5 and every `K_n^-(λ,μ)`, `λ >= μ >= 2`, `λ + μ < n`,
/// for all orders the brute-force canonical form supports.
fn family_table() -> &'static FamilyTable {
    static TABLE: OnceLock<FamilyTable> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut table = BTreeMap::new();
        table.insert(canonical_key(&cycle(5).unwrap()).unwrap(), ExtremalClass::Cycle5);
        for n in 5..=MAX_CANONICAL_ORDER {
            for mu in 2..n {
                for lambda in mu..n - mu {
                    let g = complete_minus_bipartite(n, lambda, mu).unwrap();
                    table.insert(canonical_key(&g).unwrap(), ExtremalClass::CompleteMinusBipartite { lambda, mu });
                }
            }
        }
        table
    })
}

/// Recognises C5 and `K_n^-(λ,μ)` (`λ >= μ >= 2`, `λ + μ < n`) by structure:
/// the complement of the latter is a complete bipartite `K_{λ,μ}` plus at
/// least one isolated vertex.
pub fn extremal_class_structural(g: &Graph) -> Option<ExtremalClass> {
    let n = g.order();
    if n == 5 && g.size() == 5 && g.is_connected() && (0..5).all(|v| g.degree(v) == 2) {
        return Some(ExtremalClass::Cycle5);
    }
    let co = g.complement();
    let support: crate::VertexSet = (0..n).filter(|&v| co.degree(v) > 0).collect();
    if support.len() == n || support.is_empty() {
        return None;
    }
    let h = co.induced(support).ok()?;
    // Complete bipartite: each side's members see exactly the other side.
    let b = h.neighbors(0);
    let a = h.neighbors(b.first()?);
    let complete_bip = a.iter().all(|v| h.neighbors(v) == b) && b.iter().all(|v| h.neighbors(v) == a);
    if !complete_bip || a.union(b) != h.vertices() {
        return None;
    }
    let (lambda, mu) = (a.len().max(b.len()), a.len().min(b.len()));
    (mu >= 2).then_some(ExtremalClass::CompleteMinusBipartite { lambda, mu })
}

/// Equality-class membership: canonical-key lookup against constructed
/// members when the order allows, structural recognition beyond.
pub fn extremal_class(g: &Graph) -> Option<ExtremalClass> {
    if g.order() <= MAX_CANONICAL_ORDER {
        family_table().get(&canonical_key(g).ok()?).copied()
    } else {
        extremal_class_structural(g)
    }
}

/// Identifier used in reports: the canonical graph6 when the order allows
/// canonicalisation, otherwise the graph's own graph6.
pub fn graph_id(g: &Graph) -> String {
    match canonical_key(g) {
        Ok(key) => key.to_string(),
        Err(_) => g.to_graph6(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremReport {
    pub graph_id: String,
    pub facts: GraphFacts,
    pub outcomes: Vec<(CheckId, CheckOutcome)>,
}

impl TheoremReport {
    pub fn outcome(&self, id: CheckId) -> Option<&CheckOutcome> {
        self.outcomes.iter().find(|(c, _)| *c == id).map(|(_, o)| o)
    }

    pub fn violations(&self) -> impl Iterator<Item = CheckId> + '_ {
        self.outcomes.iter().filter(|(_, o)| o.is_violation()).map(|(c, _)| *c)
    }
}

/// Runs every check on a connected graph.
pub fn check_graph(g: &Graph) -> Result<TheoremReport> {
    check_graph_with(g, graph_id(g), &CheckId::ALL)
}

pub fn check_graph_with(g: &Graph, graph_id: String, checks: &[CheckId]) -> Result<TheoremReport> {
    let facts = GraphFacts::compute(g)?;
    let outcomes = checks.iter().map(|&c| (c, evaluate(c, &facts))).collect();
    Ok(TheoremReport { graph_id, facts, outcomes })
}

fn iff(a: bool, b: bool) -> bool {
    a == b
}

/// Evaluates one check from precomputed facts. Orders are `usize`, so
/// expressions such as `n - 3` are written as `x + 3 == n`.
pub fn evaluate(check: CheckId, f: &GraphFacts) -> CheckOutcome {
    let (n, w, d) = (f.n, f.omega, f.dim_l);
    let s = f.summary();
    match check {
        CheckId::C1 => {
            if n < 3 {
                return CheckOutcome::skipped("needs n >= 3");
            }
            CheckOutcome::verdict(iff(d + 1 == n, f.complete), format!("{s} complete={}", f.complete))
        }
        CheckId::C2 => {
            if n < 3 {
                return CheckOutcome::skipped("needs n >= 3");
            }
            CheckOutcome::verdict(iff(d + 2 == n, w + 1 == n), s)
        }
        CheckId::C3 => {
            if n < 3 {
                return CheckOutcome::skipped("needs n >= 3");
            }
            CheckOutcome::verdict(iff(d == 1, f.bipartite), format!("{s} bipartite={}", f.bipartite))
        }
        CheckId::C4 => CheckOutcome::verdict(
            d >= f.bounds.log && d as i64 >= f.bounds.gap_raw,
            format!("{s} log_bound={} gap_bound={}", f.bounds.log, f.bounds.gap_raw),
        ),
        CheckId::C5 => CheckOutcome::verdict(d >= f.bounds.twin, format!("{s} k={}", f.twin_classes)),
        CheckId::C6 => {
            if n < 3 || !f.triangle_free {
                return CheckOutcome::skipped("needs a triangle-free graph with n >= 3");
            }
            CheckOutcome::verdict(5 * d <= 2 * n, s)
        }
        CheckId::C7 => {
            if n < 5 || w + 3 > n {
                return CheckOutcome::skipped("needs n >= 5 and omega <= n-3");
            }
            let at_bound = d + 3 == n;
            let member = f.extremal;
            let class = member.map_or("none".to_string(), |c| c.to_string());
            CheckOutcome::verdict(d + 3 <= n && iff(at_bound, member.is_some()), format!("{s} class={class}"))
        }
        CheckId::C8 => {
            if n < 3 || (w + 3 < n && d + 2 < n) {
                return CheckOutcome::skipped("needs n >= 3 and omega >= n-3 or dim_l >= n-2");
            }
            let eq1 = iff(w == n, d + 1 == n);
            let eq2 = iff(w + 1 == n, d + 2 == n);
            let eq3 = w + 2 != n || (d + 4 >= n && d + 3 <= n);
            let eq4 = w + 3 != n || (d + 8 >= n && d + 3 <= n);
            let engaged = match n - w {
                0 => "eq1",
                1 => "eq2",
                2 => "eq3",
                3 => "eq4",
                _ => "eq1/eq2 converse",
            };
            CheckOutcome::verdict(eq1 && eq2 && eq3 && eq4, format!("{s} {engaged}"))
        }
        CheckId::C9 => {
            if n < 5 {
                return CheckOutcome::skipped("needs n >= 5");
            }
            let branches = f.classification_branches();
            CheckOutcome::verdict(
                iff(d + 3 == n, !branches.is_empty()),
                format!("{s} branches=[{}]", branches.join(",")),
            )
        }
        CheckId::C10 => {
            if n < 5 || w + 2 != n {
                return CheckOutcome::skipped("needs n >= 5 and omega = n-2");
            }
            let in_range = d + 4 >= n && d + 3 <= n;
            let holds = in_range && iff(d + 3 == n, f.gamma_free) && iff(d + 4 == n, !f.gamma_free);
            CheckOutcome::verdict(holds, format!("{s} gamma_free={}", f.gamma_free))
        }
        CheckId::C11 => {
            if w + 3 < n || w == n || w < 3 {
                return CheckOutcome::skipped("needs omega in {n-1,n-2,n-3} and n >= omega+1 >= 4");
            }
            // dim_l <= (ω-2)/(ω-1) n, cross-multiplied.
            CheckOutcome::verdict(d * (w - 1) <= (w - 2) * n, format!("{s} bound={}/{}", (w - 2) * n, w - 1))
        }
    }
}

/// Where a suite run takes its graphs from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Source {
    /// Every connected graph of this order, up to isomorphism.
    Generated(usize),
    /// A graph6 corpus file.
    Corpus(PathBuf),
}

impl fmt::Display for Source {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Source::Generated(n) => write!(f, "generated n={n}"),
            Source::Corpus(p) => write!(f, "corpus {}", p.display()),
        }
    }
}

/// Labelled graphs from a source, plus malformed corpus lines.
pub struct LoadedSource {
    pub graphs: Vec<(String, Graph)>,
    pub malformed: Vec<(usize, Graph6Error)>,
}

pub fn load_source(source: &Source, strict: bool) -> Result<LoadedSource> {
    match source {
        Source::Generated(n) => Ok(LoadedSource {
            graphs: connected_graphs(*n)?.into_iter().map(|g| (g.to_graph6(), g)).collect(),
            malformed: Vec::new(),
        }),
        Source::Corpus(path) => {
            let corpus = read_corpus(path, strict)?;
            Ok(LoadedSource {
                graphs: corpus.graphs.into_iter().map(|e| (graph_id(&e.graph), e.graph)).collect(),
                malformed: corpus.errors,
            })
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Tally {
    pub applicable: usize,
    pub holds: usize,
    /// Graph ids, sorted.
    pub violations: Vec<String>,
}

#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub source: String,
    pub corpus_size: usize,
    pub checks: Vec<CheckId>,
    pub graphs: Vec<TheoremReport>,
    pub tallies: BTreeMap<CheckId, Tally>,
    /// Graphs that could not be checked (e.g. disconnected), with reasons.
    pub skipped: Vec<(String, String)>,
    pub malformed: Vec<(usize, Graph6Error)>,
    pub elapsed: Duration,
}

impl SuiteReport {
    pub fn violation_count(&self) -> usize {
        self.tallies.values().map(|t| t.violations.len()).sum()
    }

    pub fn is_clean(&self) -> bool {
        self.violation_count() == 0
    }

    /// One tab-separated line per (graph, check): id, check, applicable,
    /// holds. Independent of the worker count.
    pub fn format_records(&self) -> String {
        let mut out = String::new();
        for r in &self.graphs {
            for (c, o) in &r.outcomes {
                writeln!(out, "{}\t{}\t{}\t{}", r.graph_id, c, o.applicable, o.holds).unwrap();
            }
        }
        out
    }

    pub fn format_human(&self) -> String {
        let mut out = String::new();
        writeln!(out, "source: {}", self.source).unwrap();
        writeln!(out, "graphs: {}", self.corpus_size).unwrap();
        for (c, t) in &self.tallies {
            writeln!(
                out,
                "{c:<4} applicable {:>6}  holds {:>6}  violations {}",
                t.applicable,
                t.holds,
                t.violations.len()
            )
            .unwrap();
            for id in &t.violations {
                writeln!(out, "     violated by {id}").unwrap();
            }
        }
        for (id, why) in &self.skipped {
            writeln!(out, "skipped {id}: {why}").unwrap();
        }
        for (line, e) in &self.malformed {
            writeln!(out, "malformed line {line}: {e}").unwrap();
        }
        writeln!(out, "total violations: {}", self.violation_count()).unwrap();
        writeln!(out, "elapsed: {:.3}s", self.elapsed.as_secs_f64()).unwrap();
        out
    }
}

/// Runs `f` on a pool of `jobs` workers, or inline for a single job.
pub fn with_workers<T: Send>(jobs: usize, f: impl FnOnce() -> T + Send) -> T {
    if jobs <= 1 {
        return f();
    }
    match rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
        Ok(pool) => pool.install(f),
        Err(_) => f(),
    }
}

/// Checks every graph of `source`. Results do not depend on `jobs`.
pub fn run_suite(source: &Source, checks: &[CheckId], jobs: usize, strict: bool) -> Result<SuiteReport> {
    let start = Instant::now();
    let loaded = load_source(source, strict)?;
    let mut report = run_on(&loaded.graphs, checks, jobs);
    report.source = source.to_string();
    report.malformed = loaded.malformed;
    report.elapsed = start.elapsed();
    Ok(report)
}

/// Checks the given labelled graphs.
pub fn run_on(graphs: &[(String, Graph)], checks: &[CheckId], jobs: usize) -> SuiteReport {
    let start = Instant::now();
    let results: Vec<Result<TheoremReport>> =
        with_workers(jobs, || graphs.par_iter().map(|(id, g)| check_graph_with(g, id.clone(), checks)).collect());
    let mut tallies: BTreeMap<CheckId, Tally> = checks.iter().map(|&c| (c, Tally::default())).collect();
    let mut reports = Vec::with_capacity(results.len());
    let mut skipped = Vec::new();
    for ((id, _), r) in graphs.iter().zip(results) {
        match r {
            Ok(r) => {
                for (c, o) in &r.outcomes {
                    let t = tallies.get_mut(c).unwrap();
                    t.applicable += o.applicable as usize;
                    t.holds += o.holds as usize;
                    if o.is_violation() {
                        t.violations.push(r.graph_id.clone());
                    }
                }
                reports.push(r);
            }
            Err(e) => skipped.push((id.clone(), e.to_string())),
        }
    }
    for t in tallies.values_mut() {
        t.violations.sort();
    }
    SuiteReport {
        source: "graphs".to_string(),
        corpus_size: graphs.len(),
        checks: checks.to_vec(),
        graphs: reports,
        tallies,
        skipped,
        malformed: Vec::new(),
        elapsed: start.elapsed(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Problem1Row {
    pub l: usize,
    pub n: usize,
    pub omega: usize,
    pub dim_l: usize,
    /// `ceil((n+1)/2)`.
    pub bound: usize,
    pub violated: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Problem1Report {
    pub rows: Vec<Problem1Row>,
    pub first_violation: Option<usize>,
}

/// Tests `dim_l <= ceil((n+1)/2)` on the apex-over-triangles graphs for
/// `ℓ = 2..=lmax`.
pub fn check_problem1_refutation(lmax: usize) -> Result<Problem1Report> {
    let mut rows = Vec::new();
    for l in 2..=lmax {
        let g = apex_triangles(l)?;
        let n = g.order();
        let dim_l = local_metric_dimension(&g)?.value;
        let bound = (n + 1).div_ceil(2);
        rows.push(Problem1Row { l, n, omega: clique_number(&g).size, dim_l, bound, violated: dim_l > bound });
    }
    let first_violation = rows.iter().find(|r| r.violated).map(|r| r.l);
    Ok(Problem1Report { rows, first_violation })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyLemmaRow {
    pub n: usize,
    pub lambda: usize,
    pub mu: usize,
    pub expected: usize,
    pub dim_l: usize,
}

impl FamilyLemmaRow {
    pub fn matches(&self) -> bool {
        self.expected == self.dim_l
    }
}

/// Solver value against `n-2` (`μ = 1`) or `n-3` (otherwise) for every
/// valid `K_n^-(λ,μ)` with `3 <= n <= n_max`.
pub fn check_family_lemma(n_max: usize) -> Result<Vec<FamilyLemmaRow>> {
    let mut rows = Vec::new();
    for n in 3..=n_max {
        for mu in 1..n {
            for lambda in mu..n.saturating_sub(mu) {
                let g = complete_minus_bipartite(n, lambda, mu)?;
                let expected = if mu == 1 { n - 2 } else { n - 3 };
                let dim_l = local_metric_dimension(&g)?.value;
                rows.push(FamilyLemmaRow { n, lambda, mu, expected, dim_l });
            }
        }
    }
    Ok(rows)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SharpnessRow {
    pub mask: u8,
    pub n: usize,
    pub omega: usize,
    pub dim_l: usize,
    pub witness: crate::VertexSet,
}

/// `dim_l` and ω for the eight graphs obtained from the 11-vertex
/// construction by adding edges among its three outer vertices.
pub fn check_lower_sharpness() -> Result<Vec<SharpnessRow>> {
    (0..8u8)
        .map(|mask| {
            let g = upsilon(mask)?;
            let r = local_metric_dimension(&g)?;
            Ok(SharpnessRow { mask, n: g.order(), omega: clique_number(&g).size, dim_l: r.value, witness: r.witness })
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjectureViolation {
    pub graph_id: String,
    pub n: usize,
    pub omega: usize,
    pub dim_l: usize,
    /// ω is n-1, n-2 or n-3, where the bound is known to hold.
    pub proved_regime: bool,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ConjectureScan {
    pub checked: usize,
    /// Graphs failing `n >= ω + 1 >= 4` or the ω filter.
    pub skipped: usize,
    pub proved_regime: usize,
    pub open_regime: usize,
    pub violations: Vec<ConjectureViolation>,
}

/// Looks for graphs with `dim_l (ω-1) > (ω-2) n` among those with
/// `n >= ω + 1 >= 4`, optionally restricted to the listed clique numbers.
pub fn scan_conjecture(
    graphs: &[(String, Graph)],
    omega_filter: Option<&[usize]>,
    jobs: usize,
) -> Result<ConjectureScan> {
    // (id, n, ω, dim_l when violated) for each gated graph.
    type Row = Option<(String, usize, usize, Option<usize>)>;
    let rows: Vec<Result<Row>> = with_workers(jobs, || {
        graphs
            .par_iter()
            .map(|(id, g)| {
                let n = g.order();
                let omega = clique_number(g).size;
                let gated = n > omega && omega >= 3 && omega_filter.is_none_or(|f| f.contains(&omega));
                if !gated {
                    return Ok(None);
                }
                let d = local_metric_dimension(g)?.value;
                let violated = d * (omega - 1) > (omega - 2) * n;
                Ok(Some((id.clone(), n, omega, violated.then_some(d))))
            })
            .collect()
    });
    let mut scan = ConjectureScan::default();
    for row in rows {
        match row? {
            None => scan.skipped += 1,
            Some((graph_id, n, omega, violated)) => {
                scan.checked += 1;
                let proved = omega + 3 >= n;
                if proved {
                    scan.proved_regime += 1;
                } else {
                    scan.open_regime += 1;
                }
                if let Some(dim_l) = violated {
                    scan.violations.push(ConjectureViolation { graph_id, n, omega, dim_l, proved_regime: proved });
                }
            }
        }
    }
    scan.violations.sort_by(|a, b| a.graph_id.cmp(&b.graph_id));
    Ok(scan)
}

/// Enumeration-based audit of the `dim_l = n-3` characterisation at one
/// order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationAudit {
    pub n: usize,
    /// Graphs with `dim_l = n-3`, with the branches that predict them.
    pub attained: Vec<(String, Vec<&'static str>)>,
    /// Predicted by some branch but `dim_l != n-3`.
    pub predicted_only: Vec<String>,
    /// `dim_l = n-3` but no branch predicts it.
    pub attained_only: Vec<String>,
    /// Graphs with `ω <= n-3` attaining `dim_l = n-3`.
    pub upper_bound_attained: Vec<String>,
    /// Members of the stated `K_n^-(λ,μ)` family (`λ >= μ >= 2`) whose clique
    /// number is `n-μ > n-3`, i.e. outside the hypothesis `ω <= n-3` of the
    /// upper-bound equality statement although listed in its class.
    pub stated_members_outside_hypothesis: Vec<(String, ExtremalClass, usize)>,
}

impl ClassificationAudit {
    pub fn is_consistent(&self) -> bool {
        self.predicted_only.is_empty() && self.attained_only.is_empty()
    }

    pub fn format(&self) -> String {
        let mut out = String::new();
        writeln!(out, "n={} attained dim_l=n-3: {}", self.n, self.attained.len()).unwrap();
        for (id, b) in &self.attained {
            writeln!(out, "  {id}\t[{}]", b.join(",")).unwrap();
        }
        writeln!(out, "predicted only: {:?}", self.predicted_only).unwrap();
        writeln!(out, "attained only: {:?}", self.attained_only).unwrap();
        writeln!(out, "omega<=n-3 at bound: {:?}", self.upper_bound_attained).unwrap();
        for (id, c, w) in &self.stated_members_outside_hypothesis {
            writeln!(out, "stated member {c} ({id}) has omega={w} > n-3").unwrap();
        }
        out
    }
}

pub fn audit_classification(n: usize) -> Result<ClassificationAudit> {
    let mut audit = ClassificationAudit {
        n,
        attained: Vec::new(),
        predicted_only: Vec::new(),
        attained_only: Vec::new(),
        upper_bound_attained: Vec::new(),
        stated_members_outside_hypothesis: Vec::new(),
    };
    for g in connected_graphs(n)? {
        let id = g.to_graph6();
        let f = GraphFacts::compute(&g)?;
        let at_bound = f.dim_l + 3 == n;
        let branches = f.classification_branches();
        match (at_bound, branches.is_empty()) {
            (true, false) => audit.attained.push((id.clone(), branches)),
            (true, true) => audit.attained_only.push(id.clone()),
            (false, false) => audit.predicted_only.push(id.clone()),
            (false, true) => {}
        }
        if at_bound && f.omega + 3 <= n {
            audit.upper_bound_attained.push(id.clone());
        }
        if let Some(c @ ExtremalClass::CompleteMinusBipartite { .. }) = f.extremal {
            if f.omega + 3 > n {
                audit.stated_members_outside_hypothesis.push((id, c, f.omega));
            }
        }
    }
    Ok(audit)
}
