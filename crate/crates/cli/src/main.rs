use std::fmt::Write as _;
use std::fs;
use std::io::{self, Write};
use std::process::ExitCode;

use clap::{CommandFactory, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use multiline_core::geometry::{
    build_geometry, dual_graph, is_hyperplane, mub_line_sets, multi_line_families, paper_labels,
    IncidenceGeometry, PaperLabeling,
};
use multiline_core::graphs::{maximal_cliques, spectrum_exact, Graph};
use multiline_core::pauli::SystemSpec;
use multiline_core::rings::{
    classify_elements, neighbor_graph, projective_line, PointKind, ProductRing,
};
use multiline_core::verify::{verify, REFERENCE_SYSTEMS};

#[derive(Parser, Debug)]
#[command(
    name = "multiline",
    version,
    about = "Commutation geometry of generalized Pauli operators"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Factor dimensions, e.g. `2,3` (ring moduli for `ringline`).
    #[arg(long, global = true, value_delimiter = ',')]
    dims: Vec<u32>,

    /// Graph to act on.
    #[arg(long, global = true, value_enum, default_value_t = Target::Pauli)]
    target: Target,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Write output here instead of standard output.
    #[arg(long, global = true)]
    out: Option<String>,

    /// List every maximal commuting set with at least this many operators.
    #[arg(long, global = true)]
    min_line_size: Option<usize>,

    #[arg(long, global = true)]
    verbose: bool,
}

#[derive(Subcommand, Debug, Clone, Copy, PartialEq, Eq)]
enum Command {
    /// Non-identity operators with their labels.
    Operators,
    /// Commutation graph (`--target pauli`) or line graph (`--target dual`).
    Graph,
    /// Maximal commuting sets.
    Lines,
    /// Weighted dual graph on lines, with pencils.
    Dual,
    /// Exact adjacency spectrum of the target graph.
    Spectrum,
    /// Maximum sets of pairwise disjoint lines.
    Mubs,
    /// Multi-line families and whether their unions are closed.
    Hyperplanes,
    /// Projective line over a product of residue rings.
    Ringline,
    /// Reproduction checks; `--dims` restricts to one reference system.
    Verify,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum Target {
    Pauli,
    Dual,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum Format {
    Dot,
    Json,
    Csv,
    Text,
}

enum Failure {
    Usage(String),
    Verification(String),
}

impl From<multiline_core::Error> for Failure {
    fn from(e: multiline_core::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<String, Failure>;

fn supported(command: Command, format: Format) -> bool {
    use Command::*;
    use Format::*;
    match command {
        Graph | Dual | Ringline => true,
        Operators | Lines | Mubs => format != Dot,
        Spectrum | Hyperplanes | Verify => matches!(format, Text | Json),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(text) => match emit(&cli, &text) {
            Ok(()) => ExitCode::SUCCESS,
            Err(e) => {
                eprintln!("error: {e}");
                ExitCode::from(2)
            }
        },
        Err(Failure::Verification(text)) => {
            let _ = emit(&cli, &text);
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}\n");
            let _ = Cli::command().write_help(&mut io::stderr());
            ExitCode::from(2)
        }
    }
}

fn emit(cli: &Cli, text: &str) -> io::Result<()> {
    match &cli.out {
        Some(path) => fs::write(path, text),
        None => io::stdout().write_all(text.as_bytes()),
    }
}

fn run(cli: &Cli) -> Outcome {
    if !supported(cli.command, cli.format) {
        return Err(Failure::Usage(format!(
            "{:?} output is not available for {:?}",
            cli.format, cli.command
        )));
    }
    if cli.command == Command::Verify {
        return run_verify(cli);
    }
    if cli.dims.is_empty() {
        return Err(Failure::Usage("--dims is required".into()));
    }
    if cli.command == Command::Ringline {
        return ringline(cli);
    }
    let geo = build_geometry(&SystemSpec::new(cli.dims.clone())?)?;
    let labels = paper_labels(&geo);
    match cli.command {
        Command::Operators => Ok(operators(cli.format, &geo, &labels)),
        Command::Graph => {
            let (g, names) = target_graph(cli.target, &geo, &labels);
            Ok(export_graph(&g, &names, cli.format))
        }
        Command::Dual => Ok(dual(cli.format, &geo, &labels)),
        Command::Lines => Ok(lines(cli, &geo, &labels)),
        Command::Spectrum => {
            let (g, _) = target_graph(cli.target, &geo, &labels);
            let s = spectrum_exact(&g)?;
            Ok(match cli.format {
                Format::Json => {
                    let json = serde_json::json!({
                        "eigenvalues": s.eigenvalues(),
                        "residual_factor": s.residual_factor().iter().map(ToString::to_string).collect::<Vec<_>>(),
                    });
                    format!("{json}\n")
                }
                _ => format!("{s}\n"),
            })
        }
        Command::Mubs => Ok(mubs(cli.format, &geo, &labels)),
        Command::Hyperplanes => Ok(hyperplanes(cli.format, &geo, &labels)),
        Command::Ringline | Command::Verify => unreachable!("handled above"),
    }
}

fn run_verify(cli: &Cli) -> Outcome {
    let only = (!cli.dims.is_empty()).then_some(cli.dims.as_slice());
    if let Some(dims) = only {
        if !REFERENCE_SYSTEMS.contains(&dims) {
            return Err(Failure::Usage(format!("no checks for system {dims:?}")));
        }
    }
    let report = verify(only)?;
    let text = match cli.format {
        Format::Json => {
            let checks: Vec<_> = report
                .checks()
                .iter()
                .map(|c| {
                    serde_json::json!({
                        "criterion": c.criterion,
                        "dims": c.dims,
                        "name": c.name,
                        "passed": c.passed,
                        "details": c.details,
                    })
                })
                .collect();
            format!(
                "{}\n",
                serde_json::json!({ "passed": report.passed(), "checks": checks })
            )
        }
        _ => report.render(cli.verbose),
    };
    if report.passed() {
        Ok(text)
    } else {
        Err(Failure::Verification(text))
    }
}

fn target_graph(
    target: Target,
    geo: &IncidenceGeometry,
    labels: &PaperLabeling,
) -> (Graph, Vec<String>) {
    match target {
        Target::Pauli => (geo.pauli_graph().clone(), labels.labels().to_vec()),
        Target::Dual => (dual_graph(geo).graph().clone(), line_names(geo, labels)),
    }
}

fn line_names(geo: &IncidenceGeometry, labels: &PaperLabeling) -> Vec<String> {
    (0..geo.lines().len())
        .map(|l| labels.line_name(l))
        .collect()
}

fn point_names(points: &[usize], labels: &PaperLabeling) -> Vec<String> {
    points
        .iter()
        .map(|&p| labels.label(p).to_string())
        .collect()
}

#[derive(Serialize)]
struct Node<'a> {
    id: usize,
    label: &'a str,
}

fn export_graph(g: &Graph, names: &[String], format: Format) -> String {
    let edges = g.weighted_edges();
    let mut out = String::new();
    match format {
        Format::Dot => {
            out.push_str("graph G {\n");
            for (id, label) in names.iter().enumerate() {
                let _ = writeln!(out, "  {id} [label={label:?}];");
            }
            for (u, v, w) in edges {
                if g.is_weighted() {
                    let _ = writeln!(out, "  {u} -- {v} [weight={w}];");
                } else {
                    let _ = writeln!(out, "  {u} -- {v};");
                }
            }
            out.push_str("}\n");
        }
        Format::Json => {
            let nodes: Vec<Node> = names
                .iter()
                .enumerate()
                .map(|(id, label)| Node { id, label })
                .collect();
            let json = serde_json::json!({ "nodes": nodes, "edges": edges });
            let _ = writeln!(out, "{json}");
        }
        Format::Csv => {
            out.push_str("u,v,w\n");
            for (u, v, w) in edges {
                let _ = writeln!(out, "{u},{v},{w}");
            }
        }
        Format::Text => {
            let _ = writeln!(out, "vertices {}\nedges {}", g.order(), edges.len());
            for (u, v, w) in edges {
                let _ = writeln!(out, "{} {} {w}", names[u], names[v]);
            }
        }
    }
    out
}

fn operators(format: Format, geo: &IncidenceGeometry, labels: &PaperLabeling) -> String {
    let mut out = String::new();
    let rows = geo
        .points()
        .iter()
        .enumerate()
        .map(|(i, op)| (i, labels.label(i), op.to_string()));
    match format {
        Format::Json => {
            let list: Vec<_> = rows
                .map(|(id, label, op)| serde_json::json!({ "id": id, "label": label, "operator": op }))
                .collect();
            let _ = writeln!(out, "{}", serde_json::Value::Array(list));
        }
        Format::Csv => {
            out.push_str("id,label,operator\n");
            for (id, label, op) in rows {
                let _ = writeln!(out, "{id},{label},{op}");
            }
        }
        _ => {
            for (id, label, op) in rows {
                let _ = writeln!(out, "{id:>4} {label:>6} {op}");
            }
        }
    }
    out
}

fn named_sets(format: Format, sets: &[(String, Vec<String>)], header: &str) -> String {
    let mut out = String::new();
    match format {
        Format::Json => {
            let list: Vec<_> = sets
                .iter()
                .map(|(name, members)| serde_json::json!({ "name": name, "members": members }))
                .collect();
            let _ = writeln!(out, "{}", serde_json::Value::Array(list));
        }
        Format::Csv => {
            let _ = writeln!(out, "{header}");
            for (name, members) in sets {
                for m in members {
                    let _ = writeln!(out, "{name},{m}");
                }
            }
        }
        _ => {
            for (name, members) in sets {
                let _ = writeln!(out, "{name}: {}", members.join(" "));
            }
        }
    }
    out
}

fn lines(cli: &Cli, geo: &IncidenceGeometry, labels: &PaperLabeling) -> String {
    let sets: Vec<(String, Vec<String>)> = match cli.min_line_size {
        Some(min) => maximal_cliques(geo.pauli_graph(), min)
            .iter()
            .enumerate()
            .map(|(i, c)| (format!("#{i}"), point_names(c, labels)))
            .collect(),
        None => geo
            .lines()
            .iter()
            .enumerate()
            .map(|(i, l)| (labels.line_name(i), point_names(l, labels)))
            .collect(),
    };
    if cli.verbose {
        eprintln!("{} sets", sets.len());
    }
    named_sets(cli.format, &sets, "line,point")
}

fn dual(format: Format, geo: &IncidenceGeometry, labels: &PaperLabeling) -> String {
    let d = dual_graph(geo);
    let names = line_names(geo, labels);
    let mut out = export_graph(d.graph(), &names, format);
    if format == Format::Text {
        let _ = writeln!(out, "pencils {}", d.pencils().len());
        for p in d.pencils() {
            let ls: Vec<&str> = p.lines.iter().map(|&l| names[l].as_str()).collect();
            let _ = writeln!(
                out,
                "{{{}}} through {}",
                ls.join(","),
                point_names(&p.points, labels).join(" ")
            );
        }
    }
    out
}

fn mubs(format: Format, geo: &IncidenceGeometry, labels: &PaperLabeling) -> String {
    let sets: Vec<(String, Vec<String>)> = mub_line_sets(geo)
        .iter()
        .enumerate()
        .map(|(i, s)| {
            (
                format!("#{i}"),
                s.iter().map(|&l| labels.line_name(l)).collect(),
            )
        })
        .collect();
    let mut out = String::new();
    if format == Format::Text {
        let size = sets.first().map_or(0, |(_, m)| m.len());
        let _ = writeln!(out, "maximum {size}, sets {}", sets.len());
    }
    out + &named_sets(format, &sets, "set,line")
}

fn hyperplanes(format: Format, geo: &IncidenceGeometry, labels: &PaperLabeling) -> String {
    let rows: Vec<_> = multi_line_families(geo)
        .into_iter()
        .map(|f| {
            let union = geo.union_of(&f.lines);
            let closed = is_hyperplane(geo, &union);
            let lines: Vec<String> = f.lines.iter().map(|&l| labels.line_name(l)).collect();
            (lines, point_names(&f.shared, labels), union.len(), closed)
        })
        .collect();
    let mut out = String::new();
    match format {
        Format::Json => {
            let list: Vec<_> = rows
                .iter()
                .map(|(lines, shared, size, closed)| {
                    serde_json::json!({ "lines": lines, "shared": shared, "union": size, "closed": closed })
                })
                .collect();
            let _ = writeln!(out, "{}", serde_json::Value::Array(list));
        }
        _ => {
            let closed = rows.iter().filter(|r| r.3).count();
            let _ = writeln!(out, "families {}, closed {closed}", rows.len());
            for (lines, shared, size, closed) in &rows {
                let _ = writeln!(
                    out,
                    "{{{}}} share {{{}}}, union {size}, closed {closed}",
                    lines.join(","),
                    shared.join(",")
                );
            }
        }
    }
    out
}

fn ringline(cli: &Cli) -> Outcome {
    let ring = ProductRing::new(cli.dims.clone())?;
    let points = projective_line(&ring);
    let names: Vec<String> = points
        .iter()
        .map(|p| {
            let (a, b) = p.representative;
            format!("({},{})", ring.element_label(a), ring.element_label(b))
        })
        .collect();
    let g = neighbor_graph(&ring);
    if cli.format != Format::Text {
        return Ok(export_graph(&g, &names, cli.format));
    }
    let (units, zero_divisors) = classify_elements(&ring);
    let show = |xs: &[usize]| {
        xs.iter()
            .map(|&e| ring.element_label(e))
            .collect::<Vec<_>>()
            .join(" ")
    };
    let mut out = String::new();
    let _ = writeln!(out, "units {}", show(&units));
    let _ = writeln!(out, "zero divisors {}", show(&zero_divisors));
    let _ = writeln!(out, "points {}", points.len());
    for (p, name) in points.iter().zip(&names) {
        let kind = match p.kind {
            PointKind::UnitAndZeroDivisor => "unit and zero divisor",
            PointKind::BothUnits => "both units",
            PointKind::BothZeroDivisors => "both zero divisors",
        };
        let _ = writeln!(out, "{name} {kind}");
    }
    let _ = writeln!(out, "neighbour pairs {}", g.edge_count());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{} {}", names[u], names[v]);
    }
    Ok(out)
}
