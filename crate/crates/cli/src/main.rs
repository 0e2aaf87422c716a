use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use epg::audit::{run_audit, select_checks};
use epg::dot::to_dot;
use epg::enumerate::{enumerate_semigroups, DedupMode, EnumerationConfig};
use epg::epgraph::{enhanced_power_graph, GraphKind};
use epg::format::{parse_table_file, to_json_record, to_text, TableFile};
use epg::green::{green_relations, non_regular_witness, GreenRelation};
use epg::props::{
    chromatic_number, classify, clique_number, independence_number, is_planar, KuratowskiKind,
    CHROMATIC_EXACT_LIMIT,
};
use epg::semigroup::{
    all_monogenic_data, exponent, idempotents, maximal_monogenic, pi_set, Generator,
};
use epg::{CayleyTable, Error};

const MAX_AUDIT_ORDER: usize = 5;

#[derive(Parser)]
#[command(
    name = "epg",
    version,
    about = "Enhanced power graphs of finite semigroups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the invariants of a semigroup and its enhanced power graph.
    Analyze(Input),
    /// Enumerate all semigroups of one order.
    Enumerate {
        order: usize,
        #[arg(long, default_value = "iso-anti")]
        dedup: DedupMode,
        /// A directory to write each table into, or `count-only`.
        #[arg(long, default_value = "count-only")]
        emit: String,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Run the theorem checks over enumerated semigroups.
    Audit {
        n_max: usize,
        /// Comma-separated check ids, or `all`.
        #[arg(long, default_value = "all", value_delimiter = ',')]
        checks: Vec<String>,
        /// Write one JSON record per disagreement to this file.
        #[arg(long)]
        records: Option<PathBuf>,
        /// Include every order from 1 to n_max instead of n_max alone.
        #[arg(long)]
        cumulative: bool,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Write one of the graphs of a semigroup in DOT syntax.
    ExportDot {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value = "epg")]
        graph: GraphKind,
    },
    /// Print a constructed table.
    Gen {
        kind: Generator,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args)]
struct Input {
    /// A table file (text or JSON).
    path: Option<PathBuf>,
    /// A constructor such as `monogenic:2,3` instead of a file.
    #[arg(long = "gen", conflicts_with = "path")]
    generator: Option<Generator>,
}

enum Failure {
    Input(String),
    Cap(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::OrderCapExceeded { .. } | Error::SizeLimitExceeded { .. } => {
                Failure::Cap(e.to_string())
            }
            _ => Failure::Input(e.to_string()),
        }
    }
}

fn io_error(path: &Path, e: std::io::Error) -> Failure {
    Failure::Input(format!("{}: {e}", path.display()))
}

impl Input {
    fn load(&self) -> Result<CayleyTable, Failure> {
        match (&self.path, &self.generator) {
            (_, Some(g)) => Ok(g.build()?),
            (Some(path), None) => {
                let text = fs::read_to_string(path).map_err(|e| io_error(path, e))?;
                Ok(parse_table_file(&text)?.table)
            }
            (None, None) => Err(Failure::Input("give a table file or --gen".into())),
        }
    }
}

fn set_of(s: &CayleyTable, xs: &[usize]) -> String {
    let names: Vec<String> = xs.iter().map(|&x| s.label(x)).collect();
    format!("{{{}}}", names.join(", "))
}

fn shape(c: &epg::props::GraphClassification) -> String {
    let n = c.vertex_count;
    if c.complete {
        format!("complete K_{n}")
    } else if c.star {
        format!("star K_{{1,{}}}", n - 1)
    } else if c.null {
        "null graph".into()
    } else {
        "other".into()
    }
}

fn analyze(s: &CayleyTable) -> Result<String, Failure> {
    let mut out = String::new();
    let data = all_monogenic_data(s);
    let pi: Vec<String> = pi_set(s).iter().map(ToString::to_string).collect();
    let _ = writeln!(out, "order: {}", s.order());
    let _ = writeln!(out, "pi: {{{}}}", pi.join(", "));
    let _ = writeln!(out, "idempotents: {}", set_of(s, &idempotents(s)));
    let _ = writeln!(out, "exponent: {}", exponent(s)?);
    let _ = writeln!(out, "elements:");
    for d in &data {
        let _ = writeln!(
            out,
            "  {}: index {}, period {}, order {}, powers {}, kernel {}, idempotent {}",
            s.label(d.generator),
            d.index,
            d.period,
            d.order(),
            set_of(s, &d.powers),
            set_of(s, &d.kernel),
            s.label(d.idempotent())
        );
    }
    let green = green_relations(s);
    let counts: Vec<String> = GreenRelation::ALL
        .iter()
        .map(|&r| format!("{r:?} {}", green.class_count(r)))
        .collect();
    let _ = writeln!(out, "green classes: {}", counts.join(", "));
    match non_regular_witness(s) {
        None => {
            let _ = writeln!(out, "completely regular: true");
        }
        Some(x) => {
            let _ = writeln!(out, "completely regular: false (witness {})", s.label(x));
        }
    }
    let _ = writeln!(out, "maximal monogenic:");
    for m in maximal_monogenic(s) {
        let _ = writeln!(
            out,
            "  {} generated by {}",
            set_of(s, &m.elements),
            set_of(s, &m.generators)
        );
    }

    let g = enhanced_power_graph(s);
    let c = classify(&g);
    let comps: Vec<String> = g.components().iter().map(|c| set_of(s, c)).collect();
    let _ = writeln!(out, "enhanced power graph:");
    let _ = writeln!(
        out,
        "  vertices: {}, edges: {}",
        c.vertex_count, c.edge_count
    );
    let _ = writeln!(out, "  shape: {}", shape(&c));
    let _ = writeln!(
        out,
        "  components: {} {}",
        c.component_count,
        comps.join(" ")
    );
    let _ = writeln!(out, "  connected: {}", c.connected);
    let _ = writeln!(out, "  complete: {}", c.complete);
    let _ = writeln!(out, "  null: {}", c.null);
    let _ = writeln!(out, "  tree: {}", c.tree);
    let _ = writeln!(out, "  star: {}", c.star);
    let _ = writeln!(out, "  acyclic: {}", c.acyclic);
    let _ = writeln!(out, "  bipartite: {}", c.bipartite);
    match c.regular_degree {
        Some(k) => {
            let _ = writeln!(out, "  regular: {k}");
        }
        None => {
            let _ = writeln!(out, "  regular: no");
        }
    }
    let diam: Vec<String> = c
        .diameter_per_component
        .iter()
        .map(ToString::to_string)
        .collect();
    let _ = writeln!(out, "  diameters: [{}]", diam.join(", "));
    let _ = writeln!(out, "  delta: {}", c.min_degree);
    let (alpha, witness) = independence_number(&g);
    let _ = writeln!(out, "  alpha: {alpha} {}", set_of(s, &witness));
    let (omega, _) = clique_number(&g);
    let _ = writeln!(out, "  omega: {omega}");
    if g.vertex_count() <= CHROMATIC_EXACT_LIMIT {
        let _ = writeln!(out, "  chi: {}", chromatic_number(&g)?);
    } else {
        let _ = writeln!(out, "  chi: >= {omega}");
    }
    let planarity = is_planar(&g);
    let _ = writeln!(out, "  planar: {}", planarity.planar);
    if let Some(w) = planarity.witness {
        let kind = match w.kind {
            KuratowskiKind::K5 => "K5",
            KuratowskiKind::K33 => "K33",
        };
        match &w.parts {
            Some((p, q)) => {
                let _ = writeln!(
                    out,
                    "  kuratowski: {kind} parts {} / {}",
                    set_of(s, p),
                    set_of(s, q)
                );
            }
            None => {
                let _ = writeln!(
                    out,
                    "  kuratowski: {kind} on {}",
                    set_of(s, &w.branch_vertices)
                );
            }
        }
        for path in &w.paths {
            let names: Vec<String> = path.iter().map(|&v| s.label(v)).collect();
            let _ = writeln!(out, "    {}", names.join(" - "));
        }
    }
    Ok(out)
}

fn enumerate(order: usize, dedup: DedupMode, emit: &str, jobs: usize) -> Result<String, Failure> {
    let cfg = EnumerationConfig::new(order, dedup).with_parallel_width(jobs);
    let tables = enumerate_semigroups(&cfg)?;
    if emit != "count-only" {
        let dir = Path::new(emit);
        fs::create_dir_all(dir).map_err(|e| io_error(dir, e))?;
        let width = tables.len().to_string().len();
        for (i, t) in tables.iter().enumerate() {
            let path = dir.join(format!("s{order}_{i:0width$}.txt"));
            fs::write(&path, to_text(t)).map_err(|e| io_error(&path, e))?;
        }
    }
    Ok(format!("{}\n", tables.len()))
}

fn audit(
    n_max: usize,
    checks: &[String],
    records: Option<&Path>,
    cumulative: bool,
    jobs: usize,
) -> Result<(String, bool), Failure> {
    if n_max == 0 {
        return Err(Failure::Input("n_max must be at least 1".into()));
    }
    if n_max > MAX_AUDIT_ORDER {
        return Err(Failure::Cap(format!(
            "audit order {n_max} exceeds the cap of {MAX_AUDIT_ORDER}"
        )));
    }
    let checks = select_checks(checks)?;
    let first = if cumulative { 1 } else { n_max };
    let mut corpus = Vec::new();
    for n in first..=n_max {
        let cfg = EnumerationConfig::new(n, DedupMode::UpToIsoAndAnti).with_parallel_width(jobs);
        corpus.extend(enumerate_semigroups(&cfg)?);
    }
    let pool = rayon_pool(jobs)?;
    let report = pool.install(|| run_audit(&checks, &corpus));
    if let Some(path) = records {
        fs::write(path, report.to_json_lines()).map_err(|e| io_error(path, e))?;
    }
    Ok((report.to_text(), report.counterexample_count() == 0))
}

fn rayon_pool(jobs: usize) -> Result<rayon::ThreadPool, Failure> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| Failure::Input(e.to_string()))
}

fn run(cli: Cli) -> Result<ExitCode, Failure> {
    match cli.command {
        Command::Analyze(input) => print!("{}", analyze(&input.load()?)?),
        Command::Enumerate {
            order,
            dedup,
            emit,
            jobs,
        } => print!("{}", enumerate(order, dedup, &emit, jobs)?),
        Command::Audit {
            n_max,
            checks,
            records,
            cumulative,
            jobs,
        } => {
            let (text, clean) = audit(n_max, &checks, records.as_deref(), cumulative, jobs)?;
            print!("{text}");
            if !clean {
                return Ok(ExitCode::from(2));
            }
        }
        Command::ExportDot { input, graph } => {
            let s = input.load()?;
            print!("{}", to_dot(&graph.build(&s), graph.short_name()));
        }
        Command::Gen { kind, json } => {
            let table = kind.build()?;
            if json {
                let file = TableFile {
                    table,
                    name: Some(kind.to_string()),
                    source: Some("constructed".into()),
                };
                println!("{}", to_json_record(&file));
            } else {
                print!("{}", to_text(&table));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            // keep exit code 2 for audit counterexamples
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Cap(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
