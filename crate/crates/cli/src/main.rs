//! gzeta: exact counting invariants of finite graphs from the command line.
//!
//! Every verb reads canonical JSON files and computes with exact integer and
//! rational arithmetic; no output value is ever a float. Exit codes separate
//! three situations: 0 for success (including positive decisions), 1 for a
//! computed negative verdict (not weakly equivalent, not a covering, no
//! coloring, a demo check gone red), 2 for input errors of any kind.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use gzeta_core::complexes::{complex_from_str, ramification_profile};
use gzeta_core::cover::{covering_from_str, covering_to_string, find_n_coloring};
use gzeta_core::dessin::{dessin_graph, dessin_passport, Dessin};
use gzeta_core::graph::{
    graph_from_str, graph_to_json, graph_to_string, standard_graph, StandardKind,
};
use gzeta_core::gset::{
    cayley_directed, cayley_undirected, gset_from_str, is_cofibrant_fnset, weak_equiv_gsets,
};
use gzeta_core::lab::demo_by_name;
use gzeta_core::zeta;
use gzeta_core::{DirectedGraph, Graph, UndirectedGraph};

#[derive(Parser)]
#[command(name = "gzeta", version, about = "exact zeta and homotopy counting on finite graphs")]
struct Cli {
    /// output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Cmd {
    /// Check a graph file against the presheaf identities
    Validate { file: PathBuf },
    /// Zeta series of a directed graph and its reciprocal det(I - tA)
    Zeta {
        file: PathBuf,
        /// truncation order of the series
        #[arg(long, default_value_t = 8)]
        terms: usize,
    },
    /// Ihara series of an undirected graph; adds the Hashimoto reciprocal
    /// det(I - tB) and the Bass identity when the graph is loopless
    Ihara {
        file: PathBuf,
        /// truncation order of the series
        #[arg(long, default_value_t = 8)]
        terms: usize,
    },
    /// Count graph morphisms from the cycle of a given length
    Homcount {
        file: PathBuf,
        /// length of the source cycle
        #[arg(long)]
        cycle: usize,
    },
    /// Decide weak equivalence of two graphs of the same flavor
    Weq { a: PathBuf, b: PathBuf },
    /// Primitive cycle multiplicities of a directed graph: the summands of
    /// its truncated cofibrant replacement
    Cofib {
        file: PathBuf,
        /// largest cycle length considered
        #[arg(long, default_value_t = 8)]
        max: usize,
    },
    /// Check the star condition of a packaged morphism of undirected graphs
    Covering { file: PathBuf },
    /// Search for an n-coloring, i.e. a covering of the n-loop bouquet
    Color {
        file: PathBuf,
        /// number of colors
        #[arg(long)]
        n: usize,
    },
    /// Cayley graph of a group action given as a gset file
    Cayley {
        file: PathBuf,
        /// build the undirected Cayley graph (involutive actions only)
        #[arg(long)]
        undirected: bool,
    },
    /// Decide weak equivalence of two actions through their Cayley graphs
    GsetWeq { a: PathBuf, b: PathBuf },
    /// Decide cofibrancy of a free action by component cycle ranks
    GsetCofib { file: PathBuf },
    /// Passport or bipartite graph of a dessin (a free two-generator action)
    Dessin {
        #[command(subcommand)]
        what: DessinCmd,
    },
    /// Ramification profile of a Galoisian complex
    Ramify {
        file: PathBuf,
        /// largest covering degree scanned (cycles up to twice this length)
        #[arg(long, default_value_t = 8)]
        max: usize,
    },
    /// Run a named demonstration and report its checks
    Demo { name: String },
    /// Print a named standard graph as canonical JSON. Kinds: d, a, c, bd,
    /// du, au, vu, path, cu, eight, b, dn, k, petersen
    Standard {
        kind: String,
        /// numeric parameter for the kinds that take one
        #[arg(long)]
        n: Option<usize>,
    },
}

#[derive(Subcommand)]
enum DessinCmd {
    /// Cycle types of s0, s1 and the inverted composite
    Passport { file: PathBuf },
    /// The bipartite graph with its white and black node classes
    Graph { file: PathBuf },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(message) => {
            eprintln!("error: {}", message);
            ExitCode::from(2)
        }
    }
}

/// `Ok(true)` exits 0, `Ok(false)` exits 1, `Err` prints to stderr and
/// exits 2.
type Fallible<T> = Result<T, String>;

fn dispatch(cli: &Cli) -> Fallible<bool> {
    let fmt = cli.format;
    match &cli.command {
        Cmd::Validate { file } => cmd_validate(fmt, file),
        Cmd::Zeta { file, terms } => cmd_zeta(fmt, file, *terms),
        Cmd::Ihara { file, terms } => cmd_ihara(fmt, file, *terms),
        Cmd::Homcount { file, cycle } => cmd_homcount(fmt, file, *cycle),
        Cmd::Weq { a, b } => cmd_weq(fmt, a, b),
        Cmd::Cofib { file, max } => cmd_cofib(fmt, file, *max),
        Cmd::Covering { file } => cmd_covering(fmt, file),
        Cmd::Color { file, n } => cmd_color(fmt, file, *n),
        Cmd::Cayley { file, undirected } => cmd_cayley(fmt, file, *undirected),
        Cmd::GsetWeq { a, b } => cmd_gset_weq(fmt, a, b),
        Cmd::GsetCofib { file } => cmd_gset_cofib(fmt, file),
        Cmd::Dessin { what } => match what {
            DessinCmd::Passport { file } => cmd_dessin_passport(fmt, file),
            DessinCmd::Graph { file } => cmd_dessin_graph(fmt, file),
        },
        Cmd::Ramify { file, max } => cmd_ramify(fmt, file, *max),
        Cmd::Demo { name } => cmd_demo(fmt, name),
        Cmd::Standard { kind, n } => cmd_standard(fmt, kind, *n),
    }
}

fn read(path: &Path) -> Fallible<String> {
    fs::read_to_string(path).map_err(|e| format!("{}: {}", path.display(), e))
}

fn annotate<T>(path: &Path, r: gzeta_core::Result<T>) -> Fallible<T> {
    r.map_err(|e| format!("{}: {}", path.display(), e))
}

fn load_graph(path: &Path) -> Fallible<Graph> {
    annotate(path, graph_from_str(&read(path)?))
}

fn as_directed(g: Graph) -> Fallible<DirectedGraph> {
    match g {
        Graph::Directed(d) => Ok(d),
        Graph::Undirected(_) => {
            Err("flavor mismatch: this verb wants a directed graph".to_string())
        }
    }
}

fn as_undirected(g: Graph) -> Fallible<UndirectedGraph> {
    match g {
        Graph::Undirected(u) => Ok(u),
        Graph::Directed(_) => {
            Err("flavor mismatch: this verb wants an undirected graph".to_string())
        }
    }
}

fn emit(fmt: Format, value: &Value, text: &str) {
    match fmt {
        Format::Json => {
            println!("{}", serde_json::to_string_pretty(value).expect("serializable"))
        }
        Format::Text => println!("{}", text),
    }
}

fn join<T: std::fmt::Display>(items: impl IntoIterator<Item = T>) -> String {
    items
        .into_iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(", ")
}

fn strings<T: std::fmt::Display>(items: impl IntoIterator<Item = T>) -> Vec<String> {
    items.into_iter().map(|x| x.to_string()).collect()
}

fn cmd_validate(fmt: Format, file: &Path) -> Fallible<bool> {
    let diag = load_graph(file)?.validate();
    let valid = diag.is_valid();
    let mut text = format!("valid: {}", valid);
    for v in &diag.violations {
        text.push_str(&format!("\n  {}", v));
    }
    emit(
        fmt,
        &json!({ "valid": valid, "violations": diag.violations }),
        &text,
    );
    Ok(valid)
}

fn cmd_zeta(fmt: Format, file: &Path, terms: usize) -> Fallible<bool> {
    let x = as_directed(load_graph(file)?)?;
    let counts = zeta::closed_walk_counts(&x, terms);
    let series = annotate(file, zeta::zeta_series(&x, terms))?;
    let recip = zeta::zeta_rational(&x);
    let text = format!(
        "counts p = 1..{}: {}\nseries coefficients (order {}): {}\nreciprocal det(I - tA): {}",
        terms,
        join(&counts),
        terms,
        join(series.coeffs()),
        join(recip.coeffs()),
    );
    emit(
        fmt,
        &json!({
            "counts": strings(&counts),
            "series": series.to_json(),
            "reciprocal": recip.to_json(),
        }),
        &text,
    );
    Ok(true)
}

fn cmd_ihara(fmt: Format, file: &Path, terms: usize) -> Fallible<bool> {
    let x = as_undirected(load_graph(file)?)?;
    let counts: Vec<String> = annotate(
        file,
        (1..=terms)
            .map(|p| {
                if x.has_loops() {
                    zeta::nb_cycle_count(&x, p).map(|c| c.to_string())
                } else {
                    zeta::hashimoto_count(&x, p).map(|c| c.to_string())
                }
            })
            .collect(),
    )?;
    let series = annotate(file, zeta::ihara_series(&x, terms))?;
    let mut text = format!(
        "nb counts p = 1..{}: {}\nseries coefficients (order {}): {}",
        terms,
        counts.join(", "),
        terms,
        join(series.coeffs()),
    );
    let (recip_json, bass_json, verdict) = if x.has_loops() {
        text.push_str("\nreciprocal det(I - tB): skipped, the graph has degenerate loops");
        (Value::Null, Value::Null, true)
    } else {
        let recip = annotate(file, zeta::ihara_rational(&x))?;
        let bass = annotate(file, zeta::bass_identity(&x))?;
        text.push_str(&format!(
            "\nreciprocal det(I - tB): {}\nbass identity: {} (edge exponent {})",
            join(recip.coeffs()),
            if bass.holds { "holds" } else { "fails" },
            bass.edge_exponent,
        ));
        (
            recip.to_json(),
            json!({
                "holds": bass.holds,
                "edge_exponent": bass.edge_exponent,
                "vertex_part": bass.vertex_part.to_json(),
            }),
            bass.holds,
        )
    };
    emit(
        fmt,
        &json!({
            "counts": counts,
            "series": series.to_json(),
            "reciprocal": recip_json,
            "bass": bass_json,
        }),
        &text,
    );
    Ok(verdict)
}

fn cmd_homcount(fmt: Format, file: &Path, cycle: usize) -> Fallible<bool> {
    let g = load_graph(file)?;
    let count = annotate(
        file,
        match &g {
            Graph::Directed(x) => zeta::closed_walk_count(x, cycle),
            Graph::Undirected(x) => zeta::undirected_cycle_count(x, cycle),
        },
    )?;
    emit(
        fmt,
        &json!({ "cycle": cycle, "count": count.to_string() }),
        &format!("morphisms from the {}-cycle: {}", cycle, count),
    );
    Ok(true)
}

fn cmd_weq(fmt: Format, a: &Path, b: &Path) -> Fallible<bool> {
    let (pa, pb) = match (load_graph(a)?, load_graph(b)?) {
        (Graph::Directed(x), Graph::Directed(y)) => {
            (zeta::zeta_rational(&x), zeta::zeta_rational(&y))
        }
        (Graph::Undirected(x), Graph::Undirected(y)) => {
            (zeta::uzeta_rational(&x), zeta::uzeta_rational(&y))
        }
        _ => return Err("flavor mismatch: the two graphs must share a flavor".to_string()),
    };
    let eq = pa == pb;
    emit(
        fmt,
        &json!({
            "weakly_equivalent": eq,
            "reciprocal_a": pa.to_json(),
            "reciprocal_b": pb.to_json(),
        }),
        &format!(
            "reciprocal of {}: {}\nreciprocal of {}: {}\nweakly equivalent: {}",
            a.display(),
            join(pa.coeffs()),
            b.display(),
            join(pb.coeffs()),
            eq,
        ),
    );
    Ok(eq)
}

fn cmd_cofib(fmt: Format, file: &Path, max: usize) -> Fallible<bool> {
    let x = as_directed(load_graph(file)?)?;
    let mult = annotate(file, zeta::primitive_multiplicities(&x, max))?;
    emit(
        fmt,
        &json!({ "max": max, "multiplicities": strings(&mult) }),
        &format!("primitive multiplicities m_1..m_{}: {}", max, join(&mult)),
    );
    Ok(true)
}

fn cmd_covering(fmt: Format, file: &Path) -> Fallible<bool> {
    let c = annotate(file, covering_from_str(&read(file)?))?;
    let check = c.check();
    let ok = check.is_covering();
    let degree = c.degree();
    let mut text = format!("covering: {}", ok);
    match degree {
        Some(d) => text.push_str(&format!("\ndegree: {}", d)),
        None if ok => text.push_str("\ndegree: undefined, the base is not connected"),
        None => {}
    }
    for f in &check.failures {
        text.push_str(&format!("\n  {}", f));
    }
    emit(
        fmt,
        &json!({ "covering": ok, "degree": degree, "failures": check.failures }),
        &text,
    );
    Ok(ok)
}

fn cmd_color(fmt: Format, file: &Path, n: usize) -> Fallible<bool> {
    let x = as_undirected(load_graph(file)?)?;
    match annotate(file, find_n_coloring(&x, n))? {
        Some(c) => {
            let wire = covering_to_string(&c);
            let value: Value = serde_json::from_str(&wire).expect("canonical");
            emit(
                fmt,
                &json!({ "found": true, "covering": value }),
                &format!("coloring found: true\n{}", wire),
            );
            Ok(true)
        }
        None => {
            emit(
                fmt,
                &json!({ "found": false, "covering": Value::Null }),
                "coloring found: false",
            );
            Ok(false)
        }
    }
}

fn cmd_cayley(fmt: Format, file: &Path, undirected: bool) -> Fallible<bool> {
    let action = annotate(file, gset_from_str(&read(file)?))?;
    let (graph, labels) = if undirected {
        let c = annotate(file, cayley_undirected(&action))?;
        let labels: Vec<(String, String)> = c
            .labels
            .iter()
            .map(|(k, v)| (k.as_str().to_owned(), v.clone()))
            .collect();
        (Graph::Undirected(c.graph), labels)
    } else {
        let c = annotate(file, cayley_directed(&action))?;
        let labels: Vec<(String, String)> = c
            .labels
            .iter()
            .map(|(k, v)| (k.as_str().to_owned(), v.clone()))
            .collect();
        (Graph::Directed(c.graph), labels)
    };
    let label_map: serde_json::Map<String, Value> = labels
        .iter()
        .map(|(k, v)| (k.clone(), Value::String(v.clone())))
        .collect();
    let mut text = graph_to_string(&graph);
    text.push_str("\nlabels:");
    for (id, generator) in &labels {
        text.push_str(&format!("\n  {} {}", id, generator));
    }
    emit(
        fmt,
        &json!({ "graph": graph_to_json(&graph), "labels": label_map }),
        &text,
    );
    Ok(true)
}

fn cmd_gset_weq(fmt: Format, a: &Path, b: &Path) -> Fallible<bool> {
    let x = annotate(a, gset_from_str(&read(a)?))?;
    let y = annotate(b, gset_from_str(&read(b)?))?;
    let eq = weak_equiv_gsets(&x, &y).map_err(|e| e.to_string())?;
    emit(
        fmt,
        &json!({ "weakly_equivalent": eq }),
        &format!("weakly equivalent: {}", eq),
    );
    Ok(eq)
}

fn cmd_gset_cofib(fmt: Format, file: &Path) -> Fallible<bool> {
    let x = annotate(file, gset_from_str(&read(file)?))?;
    let report = annotate(file, is_cofibrant_fnset(&x))?;
    emit(
        fmt,
        &json!({ "cofibrant": report.cofibrant, "reason": report.reason }),
        &format!("cofibrant: {}\n  {}", report.cofibrant, report.reason),
    );
    Ok(report.cofibrant)
}

fn load_dessin(file: &Path) -> Fallible<Dessin> {
    let action = annotate(file, gset_from_str(&read(file)?))?;
    annotate(file, Dessin::new(action))
}

fn cycle_type_text(t: &[usize]) -> String {
    format!("[{}]", join(t))
}

fn cmd_dessin_passport(fmt: Format, file: &Path) -> Fallible<bool> {
    let passport = dessin_passport(&load_dessin(file)?);
    emit(
        fmt,
        &serde_json::to_value(&passport).expect("serializable"),
        &format!(
            "white: {}\nblack: {}\nfaces: {}",
            cycle_type_text(&passport.white),
            cycle_type_text(&passport.black),
            cycle_type_text(&passport.faces),
        ),
    );
    Ok(true)
}

fn cmd_dessin_graph(fmt: Format, file: &Path) -> Fallible<bool> {
    let dg = dessin_graph(&load_dessin(file)?);
    let white = strings(dg.white.iter());
    let black = strings(dg.black.iter());
    let graph = Graph::Undirected(dg.graph);
    emit(
        fmt,
        &json!({
            "graph": graph_to_json(&graph),
            "white": white,
            "black": black,
        }),
        &format!(
            "{}\nwhite: {}\nblack: {}",
            graph_to_string(&graph),
            white.join(", "),
            black.join(", "),
        ),
    );
    Ok(true)
}

fn cmd_ramify(fmt: Format, file: &Path, max: usize) -> Fallible<bool> {
    let complex = annotate(file, complex_from_str(&read(file)?))?;
    let entries = annotate(file, ramification_profile(&complex, max))?;
    let mut text = String::new();
    if entries.is_empty() {
        text.push_str(&format!("no cycles up to length {}", 2 * max));
    }
    for e in &entries {
        if !text.is_empty() {
            text.push('\n');
        }
        let colors = e.colors.iter().cloned().collect::<Vec<_>>().join("+");
        match e.degree {
            Some(d) => {
                text.push_str(&format!("length {}: colors {}, degree {}", e.length, colors, d));
                if e.vertex_ambiguous {
                    text.push_str(", vertex count ambiguous");
                }
            }
            None => text.push_str(&format!(
                "length {}: colors {}, degree beyond the generator bound",
                e.length, colors,
            )),
        }
    }
    emit(
        fmt,
        &json!({
            "max_degree": max,
            "entries": serde_json::to_value(&entries).expect("serializable"),
        }),
        &text,
    );
    Ok(true)
}

fn cmd_demo(fmt: Format, name: &str) -> Fallible<bool> {
    let report = demo_by_name(name).map_err(|e| e.to_string())?;
    match fmt {
        Format::Json => println!("{}", report.to_json_string()),
        Format::Text => println!("{}", report.to_text()),
    }
    Ok(report.all_green())
}

fn cmd_standard(fmt: Format, kind: &str, n: Option<usize>) -> Fallible<bool> {
    let g = StandardKind::parse(kind, n)
        .and_then(standard_graph)
        .map_err(|e| e.to_string())?;
    emit(fmt, &graph_to_json(&g), &graph_to_string(&g));
    Ok(true)
}
