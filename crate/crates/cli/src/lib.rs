//! Commands and output records behind the `reembed` binary.
//!
//! Vertices are 1-based in every record; edge indices are 0-based
//! positions in the lexicographic edge list of the input graph.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::str::FromStr;

use reembed::census::{census_levels, table_row, verify_graph, CensusRow, GraphVerification};
use reembed::engine::{check_preconditions, fold_automorphisms};
use reembed::graph6::parse_graph6_lines;
use reembed::{emit_graph6, enumerate_reembeddings, EdgeSet, EmbeddingScheme, Error, Execution, FacialWalk, Graph, ReEmbedding, Surface};
use serde::{Deserialize, Serialize};

/// Exit codes.
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_PRECONDITION: i32 = 3;
pub const EXIT_VERIFY: i32 = 4;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    pub fn input(message: impl Into<String>) -> Self {
        CliError { code: EXIT_INPUT, message: message.into() }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse(_) | Error::InvalidGraph(_) | Error::UnknownEdge(..) | Error::SweepTooLarge { .. } => EXIT_INPUT,
            Error::NotConnected
            | Error::NotPlanar
            | Error::NotCubic { .. }
            | Error::NotThreeConnected
            | Error::DualNotSimple { .. } => EXIT_PRECONDITION,
            Error::InconsistentSurface { .. } => 1,
        };
        CliError { code, message: e.to_string() }
    }
}

pub type CliResult<T> = Result<T, CliError>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Text,
    Json,
    Csv,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "text" => Ok(Format::Text),
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            _ => Err(format!("unknown format {s:?} (expected text, json or csv)")),
        }
    }
}

/// Surface class and facial walks of one embedding.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WalkReport {
    pub walks: Vec<Vec<usize>>,
    pub chi: i64,
    pub orientable: bool,
    pub surface: Surface,
    pub strong: bool,
}

/// One enumerated re-embedding.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReEmbeddingRecord {
    pub graph: String,
    pub twists: Vec<usize>,
    pub twist_edges: Vec<[usize; 2]>,
    pub pattern: Option<String>,
    pub surface: Surface,
    pub chi: i64,
    pub orientable: bool,
    pub strong: bool,
    pub walks: Vec<Vec<usize>>,
}

/// Spherical embedding: faces as vertex cycles, rotation as edge indices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EmbeddingDump {
    pub edges: Vec<[usize; 2]>,
    pub faces: Vec<Vec<usize>>,
    pub rotation: BTreeMap<usize, Vec<usize>>,
}

fn one_based(w: &FacialWalk) -> Vec<usize> {
    w.canonical().into_iter().map(|v| v + 1).collect()
}

fn edge_pair(g: &Graph, e: usize) -> [usize; 2] {
    let (a, b) = g.edge(e);
    [a + 1, b + 1]
}

/// Reads graphs from inline graph6 or a file (`-` for stdin).
pub fn load_graphs(inline: Option<&str>, input: Option<&str>) -> CliResult<Vec<Graph>> {
    let text = match (inline, input) {
        (Some(g), None) => g.to_string(),
        (None, Some("-")) => std::io::read_to_string(std::io::stdin()).map_err(|e| CliError::input(format!("stdin: {e}")))?,
        (None, Some(path)) => std::fs::read_to_string(path).map_err(|e| CliError::input(format!("{path}: {e}")))?,
        (Some(_), Some(_)) => return Err(CliError::input("give either --graph or --input, not both")),
        (None, None) => return Err(CliError::input("no graph given (use --graph or --input)")),
    };
    let graphs = parse_graph6_lines(&text).map_err(|(line, e)| CliError::input(format!("line {line}: {e}")))?;
    if graphs.is_empty() {
        return Err(CliError::input("no graphs in input"));
    }
    Ok(graphs)
}

/// Exactly one graph from the input.
pub fn load_graph(inline: Option<&str>, input: Option<&str>) -> CliResult<Graph> {
    let mut graphs = load_graphs(inline, input)?;
    if graphs.len() != 1 {
        return Err(CliError::input(format!("expected one graph, found {}", graphs.len())));
    }
    Ok(graphs.pop().unwrap())
}

/// Resolves `u-v[,u-v...]` lists (1-based endpoints) to an edge set.
pub fn parse_twists(g: &Graph, specs: &[String]) -> CliResult<EdgeSet> {
    let mut set = EdgeSet::new(g.edge_count());
    for item in specs.iter().flat_map(|s| s.split(',')).map(str::trim).filter(|s| !s.is_empty()) {
        let bad = || CliError::input(format!("bad edge {item:?} (expected u-v)"));
        let (u, v) = item.split_once('-').ok_or_else(bad)?;
        let u: usize = u.trim().parse().map_err(|_| bad())?;
        let v: usize = v.trim().parse().map_err(|_| bad())?;
        let e = (u >= 1 && v >= 1)
            .then(|| g.edge_index(u - 1, v - 1))
            .flatten()
            .ok_or(Error::UnknownEdge(u, v))?;
        set.insert(e);
    }
    Ok(set)
}

pub fn faces(g: &Graph, twists: &EdgeSet) -> CliResult<WalkReport> {
    let pe = check_preconditions(g)?;
    let scheme = EmbeddingScheme::with_twists(pe.rotation.clone(), twists.clone());
    let class = scheme.classify_surface()?;
    let walks = scheme.all_facial_walks();
    let mut out: Vec<Vec<usize>> = walks.iter().map(one_based).collect();
    out.sort();
    Ok(WalkReport {
        strong: walks.iter().all(FacialWalk::is_cycle),
        walks: out,
        chi: class.euler_characteristic,
        orientable: class.orientable,
        surface: class.surface,
    })
}

pub fn record(g: &Graph, r: &ReEmbedding) -> ReEmbeddingRecord {
    ReEmbeddingRecord {
        graph: emit_graph6(g),
        twists: r.twist_set.iter().collect(),
        twist_edges: r.twist_set.iter().map(|e| edge_pair(g, e)).collect(),
        pattern: r.pattern().map(|p| p.to_string()),
        surface: r.surface.surface,
        chi: r.surface.euler_characteristic,
        orientable: r.surface.orientable,
        strong: r.strong,
        walks: r.walks.iter().map(one_based).collect(),
    }
}

pub fn enumerate(g: &Graph, surface: Surface, strong: bool, fold: bool, exec: Execution) -> CliResult<Vec<ReEmbeddingRecord>> {
    let mut rs = enumerate_reembeddings(g, surface, strong, exec)?;
    if fold {
        rs = fold_automorphisms(g, rs);
    }
    Ok(rs.iter().map(|r| record(g, r)).collect())
}

pub fn embedding(g: &Graph) -> CliResult<EmbeddingDump> {
    let pe = reembed::planar_embed(g)?;
    Ok(EmbeddingDump {
        edges: (0..g.edge_count()).map(|e| edge_pair(g, e)).collect(),
        faces: pe.faces.iter().map(|f| f.vertices.iter().map(|v| v + 1).collect()).collect(),
        rotation: (0..g.vertex_count()).map(|v| (v + 1, pe.rotation.order(v).to_vec())).collect(),
    })
}

/// Table rows for the generated census, or for given graphs grouped by order.
pub fn census(max_n: usize, graphs: Option<&[Graph]>, exec: Execution) -> CliResult<Vec<CensusRow>> {
    let mut rows = Vec::new();
    match graphs {
        None => {
            for (i, level) in census_levels(max_n, exec).iter().enumerate() {
                rows.push(table_row(4 + 2 * i, level, exec)?);
            }
        }
        Some(gs) => {
            let mut by_n: BTreeMap<usize, Vec<Graph>> = BTreeMap::new();
            for g in gs {
                check_preconditions(g)?;
                by_n.entry(g.vertex_count()).or_default().push(g.clone());
            }
            for (n, level) in by_n {
                rows.push(table_row(n, &level, exec)?);
            }
        }
    }
    Ok(rows)
}

pub fn verify(graphs: &[Graph], cap: usize, exec: Execution) -> CliResult<Vec<GraphVerification>> {
    graphs.iter().map(|g| verify_graph(g, cap, exec).map_err(CliError::from)).collect()
}

/// Census graphs on at most `max_n` vertices.
pub fn census_graphs(max_n: usize, exec: Execution) -> Vec<Graph> {
    census_levels(max_n, exec).into_iter().flatten().collect()
}

fn tuple(vs: &[usize]) -> String {
    let parts: Vec<String> = vs.iter().map(usize::to_string).collect();
    format!("({})", parts.join(","))
}

fn pairs(ps: &[[usize; 2]]) -> String {
    ps.iter().map(|[a, b]| format!("{a}-{b}")).collect::<Vec<_>>().join(",")
}

fn json<T: Serialize + ?Sized>(x: &T) -> String {
    serde_json::to_string_pretty(x).expect("records serialize") + "\n"
}

pub fn render_faces(r: &WalkReport, format: Format) -> String {
    let mut s = String::new();
    match format {
        Format::Json => return json(r),
        Format::Csv => {
            s.push_str("walk,length,cycle\n");
            for w in &r.walks {
                let mut seen = w.clone();
                seen.sort_unstable();
                seen.dedup();
                let vs: Vec<String> = w.iter().map(usize::to_string).collect();
                let _ = writeln!(s, "{},{},{}", vs.join(" "), w.len(), seen.len() == w.len());
            }
        }
        Format::Text => {
            for w in &r.walks {
                let _ = writeln!(s, "{}", tuple(w));
            }
            let _ = writeln!(s, "chi {} orientable {} surface {} strong {}", r.chi, r.orientable, r.surface, r.strong);
        }
    }
    s
}

pub fn render_records(rs: &[ReEmbeddingRecord], format: Format) -> String {
    let mut s = String::new();
    match format {
        Format::Json => return json(rs),
        Format::Csv => {
            s.push_str("graph,pattern,twists,surface,chi,orientable,strong,walks\n");
            for r in rs {
                let walks: Vec<String> = r.walks.iter().map(|w| tuple(w)).collect();
                let _ = writeln!(
                    s,
                    "{},{},\"{}\",{},{},{},{},\"{}\"",
                    r.graph,
                    r.pattern.as_deref().unwrap_or(""),
                    pairs(&r.twist_edges),
                    r.surface,
                    r.chi,
                    r.orientable,
                    r.strong,
                    walks.join(" ")
                );
            }
        }
        Format::Text => {
            for r in rs {
                let _ = writeln!(
                    s,
                    "{} {} twists {} strong {}",
                    r.pattern.as_deref().unwrap_or("-"),
                    r.surface,
                    pairs(&r.twist_edges),
                    r.strong
                );
                for w in &r.walks {
                    let _ = writeln!(s, "  {}", tuple(w));
                }
            }
            let _ = writeln!(s, "{} re-embedding(s)", rs.len());
        }
    }
    s
}

pub fn render_embedding(d: &EmbeddingDump, format: Format) -> String {
    let mut s = String::new();
    match format {
        Format::Json => return json(d),
        Format::Csv => {
            s.push_str("face,vertices\n");
            for (i, f) in d.faces.iter().enumerate() {
                let vs: Vec<String> = f.iter().map(usize::to_string).collect();
                let _ = writeln!(s, "{i},{}", vs.join(" "));
            }
        }
        Format::Text => {
            for (v, order) in &d.rotation {
                let nbrs: Vec<String> = order
                    .iter()
                    .map(|&e| {
                        let [a, b] = d.edges[e];
                        (if a == *v { b } else { a }).to_string()
                    })
                    .collect();
                let _ = writeln!(s, "{v}: {}", nbrs.join(" "));
            }
            for f in &d.faces {
                let _ = writeln!(s, "face {}", tuple(f));
            }
        }
    }
    s
}

pub fn render_census(rows: &[CensusRow], format: Format) -> String {
    let mut s = String::new();
    match format {
        Format::Json => return json(rows),
        Format::Csv => {
            s.push_str("n,g,p,r,k\n");
            for r in rows {
                let _ = writeln!(s, "{},{},{},{},{}", r.n, r.g_count, r.p_count, r.r_count, r.k_count);
            }
        }
        Format::Text => {
            let _ = writeln!(s, "{:>4} {:>8} {:>8} {:>8} {:>8}", "n", "graphs", "proj", "torus", "klein");
            for r in rows {
                let _ = writeln!(s, "{:>4} {:>8} {:>8} {:>8} {:>8}", r.n, r.g_count, r.p_count, r.r_count, r.k_count);
            }
        }
    }
    s
}

fn mismatch_text(v: &GraphVerification, g: &Graph) -> Option<String> {
    let c = v.checks.iter().find(|c| c.first_mismatch.is_some())?;
    let t = c.first_mismatch.as_ref()?;
    let es: Vec<[usize; 2]> = t.iter().map(|e| edge_pair(g, e)).collect();
    let kind = if c.strong_only { "strong" } else { "all" };
    Some(format!("{} {kind}: oracle {} predicted {} first mismatch {}", c.surface, c.oracle, c.predicted, pairs(&es)))
}

pub fn render_verification(vs: &[GraphVerification], graphs: &[Graph], format: Format) -> String {
    let mut s = String::new();
    match format {
        Format::Json => return json(vs),
        Format::Csv => {
            s.push_str("graph,surface,strong_only,oracle,predicted,first_mismatch\n");
            for (v, g) in vs.iter().zip(graphs) {
                for c in &v.checks {
                    let mm = c
                        .first_mismatch
                        .as_ref()
                        .map(|t| pairs(&t.iter().map(|e| edge_pair(g, e)).collect::<Vec<_>>()))
                        .unwrap_or_default();
                    let _ = writeln!(s, "{},{},{},{},{},\"{}\"", v.graph6, c.surface, c.strong_only, c.oracle, c.predicted, mm);
                }
            }
        }
        Format::Text => {
            for (v, g) in vs.iter().zip(graphs) {
                match mismatch_text(v, g) {
                    None => {
                        let counts: Vec<String> = v
                            .checks
                            .iter()
                            .map(|c| format!("{}{}={}", c.surface, if c.strong_only { "/strong" } else { "" }, c.oracle))
                            .collect();
                        let _ = writeln!(s, "PASS {} n={} {}", v.graph6, g.vertex_count(), counts.join(" "));
                    }
                    Some(m) => {
                        let _ = writeln!(s, "FAIL {} n={} {m}", v.graph6, g.vertex_count());
                    }
                }
            }
            let passed = vs.iter().filter(|v| v.passed()).count();
            let _ = writeln!(s, "{passed}/{} graphs passed", vs.len());
        }
    }
    s
}
