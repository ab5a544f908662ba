use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use localdim::enumerate::parse_corpus;
use localdim::verify::{self, audit_classification, parse_checks, CheckId, Source};
use localdim::{
    clique_number, find_induced, is_gamma_free, local_metric_dimension, metric_dimension, twin_partition, FamilySpec,
    Graph, Mode,
};

const EXIT_USAGE: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_VIOLATION: u8 = 3;

#[derive(Parser)]
#[command(name = "localdim", version, about = "Exact local metric dimension and theorem checks for small graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the (local) metric dimension of graphs.
    Dim(DimArgs),
    /// Print a named graph as graph6.
    Family(FamilyArgs),
    /// Look for an induced pattern, or test freedom from the two forbidden configurations.
    Pattern(PatternArgs),
    /// Run the theorem checks over every generated graph or a corpus.
    Verify(VerifyArgs),
    /// Scan for graphs exceeding the (ω-2)/(ω-1)·n bound.
    Scan(ScanArgs),
    /// Tabulate dim_l of the apex-over-triangles graphs against ⌈(n+1)/2⌉.
    #[command(name = "refute-problem1")]
    RefuteProblem1(RefuteArgs),
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct GraphInput {
    /// File of graph6 lines (`-` for stdin).
    #[arg(long)]
    input: Option<PathBuf>,
    /// Family spec such as `c5`, `knm(9,4,3)`, `upsilon(5)`, `apex(3)`.
    #[arg(long)]
    family: Option<String>,
}

#[derive(Args)]
struct DimArgs {
    #[command(flatten)]
    graphs: GraphInput,
    #[arg(long, value_enum, default_value_t = ModeArg::Local)]
    mode: ModeArg,
    /// Also print the lexicographically smallest optimal set.
    #[arg(long)]
    witness: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Local,
    Full,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Local => Mode::Local,
            ModeArg::Full => Mode::Full,
        }
    }
}

#[derive(Args)]
struct FamilyArgs {
    /// Family spec, e.g. `gamma1` or `knm(9,4,3)`.
    spec: String,
    /// Print order, size, clique number and twin classes as well.
    #[arg(long)]
    info: bool,
}

#[derive(Args)]
struct PatternArgs {
    #[command(flatten)]
    graphs: GraphInput,
    /// Pattern as a family spec or graph6; without it, report Γ1/Γ2 freedom.
    #[arg(long)]
    pattern: Option<String>,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct SourceArgs {
    /// Generate every connected graph on this many vertices (1..=7).
    #[arg(long)]
    gen: Option<usize>,
    /// Read graphs from a graph6 corpus file.
    #[arg(long)]
    corpus: Option<PathBuf>,
}

impl SourceArgs {
    fn source(&self) -> Source {
        match (&self.gen, &self.corpus) {
            (Some(n), _) => Source::Generated(*n),
            (None, Some(p)) => Source::Corpus(p.clone()),
            (None, None) => unreachable!("clap enforces one source"),
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Human,
    Records,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    source: SourceArgs,
    /// Comma separated check ids (C1..C11); default all.
    #[arg(long, default_value = "")]
    checks: String,
    /// Worker threads.
    #[arg(long, env = "LOCALDIM_JOBS", default_value_t = 1)]
    jobs: usize,
    #[arg(long, value_enum, default_value_t = Format::Human)]
    format: Format,
    /// Treat malformed corpus lines as fatal.
    #[arg(long)]
    strict: bool,
    /// Also print the dim_l = n-3 classification audit (generated sources only).
    #[arg(long)]
    audit: bool,
}

#[derive(Args)]
struct ScanArgs {
    #[command(flatten)]
    source: SourceArgs,
    /// Only consider these clique numbers (comma separated).
    #[arg(long, value_delimiter = ',')]
    omega: Option<Vec<usize>>,
    #[arg(long, env = "LOCALDIM_JOBS", default_value_t = 1)]
    jobs: usize,
    #[arg(long)]
    strict: bool,
}

#[derive(Args)]
struct RefuteArgs {
    /// Largest number of triangles to try.
    #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u64).range(2..=20))]
    lmax: u64,
}

/// An error to report with a given exit status.
struct Failure {
    code: u8,
    message: String,
}

fn input_error(e: impl std::fmt::Display) -> Failure {
    Failure { code: EXIT_INPUT, message: e.to_string() }
}

type CmdResult = Result<u8, Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    let result = match cli.command {
        Command::Dim(a) => run_dim(a),
        Command::Family(a) => run_family(a),
        Command::Pattern(a) => run_pattern(a),
        Command::Verify(a) => run_verify(a),
        Command::Scan(a) => run_scan(a),
        Command::RefuteProblem1(a) => run_refute(a),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("localdim: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn load_graphs(input: &GraphInput) -> Result<Vec<(String, Graph)>, Failure> {
    if let Some(spec) = &input.family {
        let spec: FamilySpec = spec.parse().map_err(input_error)?;
        let g = spec.build().map_err(input_error)?;
        return Ok(vec![(spec.to_string(), g)]);
    }
    let path = input.input.as_deref().expect("clap enforces one input");
    let corpus = if path == Path::new("-") {
        parse_corpus(io::stdin().lock(), true, path)
    } else {
        std::fs::File::open(path)
            .map_err(|source| localdim::Error::Io { path: path.to_path_buf(), source })
            .and_then(|f| parse_corpus(io::BufReader::new(f), true, path))
    }
    .map_err(input_error)?;
    Ok(corpus.graphs.into_iter().map(|e| (format!("line {}", e.line), e.graph)).collect())
}

fn parse_graph_arg(text: &str) -> Result<Graph, Failure> {
    match text.parse::<FamilySpec>() {
        Ok(spec) => spec.build().map_err(input_error),
        Err(_) => Graph::from_graph6(text)
            .map_err(|e| input_error(format!("`{text}` is neither a family spec nor graph6: {e}"))),
    }
}

fn run_dim(a: DimArgs) -> CmdResult {
    let mode: Mode = a.mode.into();
    let mut out = io::stdout().lock();
    for (label, g) in load_graphs(&a.graphs)? {
        let r = match mode {
            Mode::Local => local_metric_dimension(&g),
            Mode::Full => metric_dimension(&g),
        }
        .map_err(|e| input_error(format!("{label}: {e}")))?;
        let name = if mode == Mode::Local { "dim_l" } else { "dim" };
        let mut line = format!(
            "{label}\tgraph6={}\tn={}\tm={}\tomega={}\tk={}\ttwin_bound={}\tlog_bound={}\tgap_bound={}\t{name}={}",
            g.to_graph6(),
            g.order(),
            g.size(),
            clique_number(&g).size,
            twin_partition(&g).class_count(),
            r.bounds.twin,
            r.bounds.log,
            r.bounds.gap_raw,
            r.value
        );
        if a.witness {
            line.push_str(&format!("\twitness={}", r.witness));
        }
        writeln!(out, "{line}").map_err(input_error)?;
    }
    Ok(0)
}

fn run_family(a: FamilyArgs) -> CmdResult {
    let spec: FamilySpec = a.spec.parse().map_err(input_error)?;
    let g = spec.build().map_err(input_error)?;
    if a.info {
        let twins = twin_partition(&g);
        println!(
            "{}\t{spec}\tn={}\tm={}\tomega={}\ttwin_classes={}",
            g.to_graph6(),
            g.order(),
            g.size(),
            clique_number(&g).size,
            twins.class_count()
        );
    } else {
        println!("{}", g.to_graph6());
    }
    Ok(0)
}

fn run_pattern(a: PatternArgs) -> CmdResult {
    let pattern = a.pattern.as_deref().map(parse_graph_arg).transpose()?;
    for (label, host) in load_graphs(&a.graphs)? {
        match &pattern {
            Some(p) => match find_induced(&host, p) {
                Some(m) => println!("{label}\tpresent\tmapping={:?}", m.mapping),
                None => println!("{label}\tabsent"),
            },
            None => println!("{label}\tgamma_free={}", is_gamma_free(&host)),
        }
    }
    Ok(0)
}

fn run_verify(a: VerifyArgs) -> CmdResult {
    let checks: Vec<CheckId> =
        parse_checks(&a.checks).map_err(|e| Failure { code: EXIT_USAGE, message: e.to_string() })?;
    let source = a.source.source();
    let report = verify::run_suite(&source, &checks, a.jobs.max(1), a.strict).map_err(input_error)?;
    match a.format {
        Format::Human => print!("{}", report.format_human()),
        Format::Records => print!("{}", report.format_records()),
    }
    if a.audit {
        match source {
            Source::Generated(n) if n >= 5 => {
                let audit = audit_classification(n).map_err(input_error)?;
                print!("{}", audit.format());
            }
            _ => eprintln!("localdim: --audit needs --gen with n >= 5; skipped"),
        }
    }
    if !report.skipped.is_empty() {
        return Err(input_error(format!("{} graph(s) could not be checked", report.skipped.len())));
    }
    Ok(if report.is_clean() { 0 } else { EXIT_VIOLATION })
}

fn run_scan(a: ScanArgs) -> CmdResult {
    let loaded = verify::load_source(&a.source.source(), a.strict).map_err(input_error)?;
    let graphs: Vec<(String, Graph)> = loaded.graphs.into_iter().filter(|(_, g)| g.is_connected()).collect();
    let scan = verify::scan_conjecture(&graphs, a.omega.as_deref(), a.jobs.max(1)).map_err(input_error)?;
    println!(
        "checked {}  skipped {}  proved-regime {}  open-regime {}  violations {}",
        scan.checked,
        scan.skipped,
        scan.proved_regime,
        scan.open_regime,
        scan.violations.len()
    );
    for v in &scan.violations {
        println!(
            "violation\t{}\tn={}\tomega={}\tdim_l={}\t{}",
            v.graph_id,
            v.n,
            v.omega,
            v.dim_l,
            if v.proved_regime { "proved-regime" } else { "open-regime" }
        );
    }
    Ok(if scan.violations.is_empty() { 0 } else { EXIT_VIOLATION })
}

fn run_refute(a: RefuteArgs) -> CmdResult {
    let report = verify::check_problem1_refutation(a.lmax as usize).map_err(input_error)?;
    println!("l\tn\tomega\tdim_l\tbound\tviolated");
    for r in &report.rows {
        println!("{}\t{}\t{}\t{}\t{}\t{}", r.l, r.n, r.omega, r.dim_l, r.bound, r.violated);
    }
    match report.first_violation {
        Some(l) => {
            println!("first violation at l={l}");
            Ok(0)
        }
        None => {
            eprintln!("localdim: no violation of ceil((n+1)/2) for l <= {}; try a larger --lmax", a.lmax);
            Ok(EXIT_VIOLATION)
        }
    }
}
