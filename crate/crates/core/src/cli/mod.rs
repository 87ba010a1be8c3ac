//! The `pillowcase` command-line interface.

pub mod svg;

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::{anyhow, bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::assembly::{dehn_fill_verdict, parse_manifold, ManifoldDocument, ManifoldGraph, SplitAnalysis, Verdict, Witness};
use crate::error::Error;
use crate::homology::{h1_order, longitude_of, LongitudeData};
use crate::lipa::{generate_tables, weight_line, weight_mu, Table, TABLE_COLUMNS, TABLE_ROWS};
use crate::pieces::BoundaryTriple;
use crate::su2_oracle::{verify_split, OracleConfig};
use crate::torus_sets::{fmt_q, Slope, Turn};

/// Document schema version written to JSON output.
pub const SCHEMA: u32 = 1;

#[derive(Debug, Parser)]
#[command(name = "pillowcase", version, about = "SU(2) boundary character sets of graph manifolds")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide whether a closed manifold is SU(2)-abelian
    Analyze(AnalyzeArgs),
    /// |H1| of a closed manifold and longitudes of its one-port pieces
    Homology(FileArgs),
    /// The weight μ of a piece with one boundary torus
    Weight(FileArgs),
    /// The m/l reference grids
    Tables(TablesArgs),
    /// SVG of A, H and P
    Plot(PlotArgs),
    /// Numerically certify the verdict witness
    OracleCheck(OracleArgs),
    /// Print the expanded tree of atomic pieces as a document
    Decompose(FileArgs),
}

#[derive(Debug, clap::Args)]
pub struct FileArgs {
    pub file: PathBuf,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, clap::Args)]
pub struct AnalyzeArgs {
    #[arg(required_unless_present = "corpus", conflicts_with = "corpus")]
    pub file: Option<PathBuf>,
    /// Label of the gluing torus to split along
    #[arg(long)]
    pub split: Option<String>,
    #[arg(long)]
    pub json: bool,
    /// Fill the open port along the slope `p/q` (or `p,q`) in its basis
    #[arg(long)]
    pub fill: Option<String>,
    /// Analyze every `*.json` document in a directory
    #[arg(long)]
    pub corpus: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Which {
    #[value(name = "1")]
    One,
    #[value(name = "2")]
    Two,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Tsv,
    Markdown,
}

#[derive(Debug, clap::Args)]
pub struct TablesArgs {
    #[arg(long, value_enum, default_value = "both")]
    pub which: Which,
    #[arg(long, value_enum, default_value = "markdown")]
    pub format: Format,
}

#[derive(Debug, clap::Args)]
pub struct PlotArgs {
    pub file: PathBuf,
    #[arg(long)]
    pub out: PathBuf,
    /// Overwrite an existing output file
    #[arg(long)]
    pub force: bool,
    #[arg(long)]
    pub split: Option<String>,
}

#[derive(Debug, clap::Args)]
pub struct OracleArgs {
    pub file: PathBuf,
    #[arg(long)]
    pub split: Option<String>,
    #[arg(long, default_value_t = 200)]
    pub restarts: usize,
    #[arg(long, default_value_t = 1e-8)]
    pub tol: f64,
}

/// Parses `args` (including the program name), runs, and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    match dispatch(&cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e:#}");
            exit_code(&e)
        }
    }
}

/// 2 for parse and validation errors, 3 for a non-QHS, 1 otherwise.
pub fn exit_code(e: &anyhow::Error) -> i32 {
    match e.downcast_ref::<Error>() {
        Some(Error::NotQhs) => 3,
        Some(
            Error::Parse(_)
            | Error::NonPrimitive(..)
            | Error::NotUnimodular(..)
            | Error::NonCoprime(..)
            | Error::NotTree(_)
            | Error::PortReused(..)
            | Error::PortOutOfRange(..)
            | Error::UnknownPiece(_)
            | Error::DuplicateId(_)
            | Error::OpenPorts(_)
            | Error::NoInteriorEdge
            | Error::UnknownEdge(_)
            | Error::InvalidPiece(..),
        ) => 2,
        _ => 1,
    }
}

fn dispatch(cmd: &Command, out: &mut dyn Write) -> anyhow::Result<i32> {
    match cmd {
        Command::Analyze(a) => cmd_analyze(a, out),
        Command::Homology(a) => cmd_homology(a, out),
        Command::Weight(a) => cmd_weight(a, out),
        Command::Tables(a) => cmd_tables(a, out),
        Command::Plot(a) => cmd_plot(a, out),
        Command::OracleCheck(a) => cmd_oracle_check(a, out),
        Command::Decompose(a) => cmd_decompose(a, out),
    }
}

fn load(path: &Path) -> anyhow::Result<(ManifoldDocument, ManifoldGraph)> {
    let text = fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    let doc = ManifoldDocument::from_json(&text).with_context(|| path.display().to_string())?;
    let graph = parse_manifold(&doc).with_context(|| path.display().to_string())?;
    Ok((doc, graph))
}

fn with_result(doc: &ManifoldDocument, result: Value) -> Value {
    let mut v = serde_json::to_value(doc).expect("documents serialize");
    v["schema"] = json!(SCHEMA);
    v["result"] = result;
    v
}

fn print_json(out: &mut dyn Write, v: &Value) -> anyhow::Result<()> {
    writeln!(out, "{}", serde_json::to_string_pretty(v)?)?;
    Ok(())
}

fn degrees(t: Turn) -> f64 {
    (t.degrees() * 1e6).round() / 1e6
}

fn angle(name: &str, t: Turn) -> String {
    format!("{name} = {t} · 2π ({:.6}°)", t.degrees())
}

fn witness_json(w: &Witness) -> Value {
    json!({
        "u": w.point.0.to_string(),
        "v": w.point.1.to_string(),
        "u_degrees": degrees(w.point.0),
        "v_degrees": degrees(w.point.1),
        "torus": w.torus,
        "kind": format!("{:?}", w.kind),
    })
}

fn verdict_json(v: &Verdict) -> Value {
    json!({
        "status": v.status.to_string(),
        "witness": v.witness.as_ref().map(witness_json),
        "inexact": v.inexact,
    })
}

fn write_verdict(out: &mut dyn Write, v: &Verdict) -> anyhow::Result<()> {
    writeln!(out, "{v}")?;
    if let Some(w) = &v.witness {
        writeln!(out, "  {}", angle("u", w.point.0))?;
        writeln!(out, "  {}", angle("v", w.point.1))?;
    }
    if v.inexact.is_empty() {
        writeln!(out, "exactness: exact")?;
    } else {
        writeln!(out, "exactness: H is a subset, from {}", v.inexact.join(", "))?;
    }
    Ok(())
}

fn fmt_matrix(m: [[i64; 2]; 2]) -> String {
    format!("[[{}, {}], [{}, {}]]", m[0][0], m[0][1], m[1][0], m[1][1])
}

fn parse_slope(s: &str) -> anyhow::Result<Slope> {
    let parts: Vec<&str> = s.split(['/', ',']).map(str::trim).collect();
    let [a, b] = parts[..] else { bail!(Error::Parse(format!("slope {s:?} is not of the form p/q"))) };
    let a: i64 = a.parse().map_err(|_| Error::Parse(format!("bad slope {s:?}")))?;
    let b: i64 = b.parse().map_err(|_| Error::Parse(format!("bad slope {s:?}")))?;
    Ok(Slope::new(a, b)?)
}

fn analysis_json(a: &SplitAnalysis) -> Value {
    json!({
        "split": a.edge,
        "matrix": a.matrix,
        "h1": a.h1.to_string(),
        "verdict": verdict_json(&a.verdict),
        "warnings": a.warnings,
    })
}

fn analyze_closed(graph: &ManifoldGraph, split: Option<&str>) -> anyhow::Result<SplitAnalysis> {
    let a = graph.analyze(split)?;
    if !a.h1.is_qhs() {
        return Err(Error::NotQhs.into());
    }
    Ok(a)
}

fn cmd_analyze(args: &AnalyzeArgs, out: &mut dyn Write) -> anyhow::Result<i32> {
    if let Some(dir) = &args.corpus {
        return cmd_corpus(dir, args, out);
    }
    let path = args.file.as_ref().ok_or_else(|| anyhow!("missing FILE"))?;
    let (doc, graph) = load(path)?;
    if let Some(fill) = &args.fill {
        let slope = parse_slope(fill)?;
        let t = graph.boundary_triple()?;
        let h1 = h1_order(&t.presentation.fill(0, slope.a, slope.b));
        if !h1.is_qhs() {
            return Err(Error::NotQhs.into());
        }
        let v = dehn_fill_verdict(&t, slope);
        if args.json {
            let r = json!({"split": "filling", "filling": [slope.a, slope.b], "h1": h1.to_string(), "verdict": verdict_json(&v)});
            print_json(out, &with_result(&doc, r))?;
        } else {
            if let Some(n) = &doc.name {
                writeln!(out, "name: {n}")?;
            }
            writeln!(out, "filling: ({}, {}) in basis ({}, {})", slope.a, slope.b, t.basis_label.0, t.basis_label.1)?;
            writeln!(out, "|H1| = {h1}")?;
            write_verdict(out, &v)?;
        }
        return Ok(0);
    }
    let a = analyze_closed(&graph, args.split.as_deref())?;
    if args.json {
        print_json(out, &with_result(&doc, analysis_json(&a)))?;
        return Ok(0);
    }
    if let Some(n) = &doc.name {
        writeln!(out, "name: {n}")?;
    }
    writeln!(out, "split: {}, matrix {}", a.edge, fmt_matrix(a.matrix))?;
    writeln!(out, "|H1| = {}", a.h1)?;
    write_verdict(out, &a.verdict)?;
    for w in &a.warnings {
        writeln!(out, "warning: {w}")?;
    }
    Ok(0)
}

fn cmd_corpus(dir: &Path, args: &AnalyzeArgs, out: &mut dyn Write) -> anyhow::Result<i32> {
    let mut files: Vec<PathBuf> = fs::read_dir(dir)
        .map_err(|e| Error::Io(format!("{}: {e}", dir.display())))?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    files.sort();
    let mut code = 0;
    let mut rows = Vec::new();
    for f in &files {
        let name = f.file_name().map(|n| n.to_string_lossy().into_owned()).unwrap_or_default();
        match load(f).and_then(|(_, g)| analyze_closed(&g, args.split.as_deref())) {
            Ok(a) => {
                if args.json {
                    rows.push(json!({"file": name, "result": analysis_json(&a)}));
                } else {
                    writeln!(out, "{name}: {}", a.verdict)?;
                }
            }
            Err(e) => {
                if code == 0 {
                    code = exit_code(&e);
                }
                if args.json {
                    rows.push(json!({"file": name, "error": format!("{e:#}")}));
                } else {
                    writeln!(out, "{name}: error: {e:#}")?;
                }
            }
        }
    }
    if args.json {
        print_json(out, &json!({"schema": SCHEMA, "results": rows}))?;
    }
    Ok(code)
}

fn longitude_line(l: &LongitudeData) -> String {
    format!("longitude ({}, {}), order {}, torsion {}", l.longitude.a, l.longitude.b, l.order, l.torsion)
}

/// Longitudes of the document's own one-port pieces.
fn piece_longitudes(doc: &ManifoldDocument) -> anyhow::Result<Vec<(String, LongitudeData)>> {
    let mut out = Vec::new();
    for p in doc.pieces.iter().filter(|p| p.port_count() == 1) {
        let single = ManifoldDocument { name: None, pieces: vec![p.clone()], gluings: vec![] };
        let t = parse_manifold(&single)?.boundary_triple()?;
        out.push((p.id.clone(), longitude_of(&t.presentation, 0)?));
    }
    Ok(out)
}

fn cmd_homology(args: &FileArgs, out: &mut dyn Write) -> anyhow::Result<i32> {
    let (doc, graph) = load(&args.file)?;
    let pieces = piece_longitudes(&doc)?;
    let mut result = json!({
        "pieces": pieces.iter().map(|(id, l)| json!({"id": id, "longitude": l})).collect::<Vec<_>>(),
    });
    let mut text = Vec::new();
    let mut code = 0;
    if graph.is_closed() {
        let a = graph.analyze(None)?;
        text.push(format!("|H1| = {}", a.h1));
        if let Some(f) = a.h1_formula {
            text.push(format!("split {}: o1·o2·t1·t2·Δ = {f}", a.edge));
        }
        for (name, t) in [("side 1", &a.side1), ("side 2", &a.side2)] {
            if let Ok(l) = longitude_of(&t.presentation, 0) {
                text.push(format!("  {name}: {}", longitude_line(&l)));
            }
        }
        result["h1"] = json!(a.h1.to_string());
        result["split"] = json!(a.edge);
        if !a.h1.is_qhs() {
            code = 3;
        }
    } else {
        let t = graph.boundary_triple()?;
        let l = longitude_of(&t.presentation, 0)?;
        text.push(format!("boundary: {}", longitude_line(&l)));
        result["boundary"] = json!(l);
    }
    for (id, l) in &pieces {
        text.push(format!("piece {id}: {}", longitude_line(l)));
    }
    if args.json {
        print_json(out, &with_result(&doc, result))?;
    } else {
        for line in text {
            writeln!(out, "{line}")?;
        }
    }
    if code == 3 {
        return Err(Error::NotQhs.into());
    }
    Ok(0)
}

fn cmd_weight(args: &FileArgs, out: &mut dyn Write) -> anyhow::Result<i32> {
    let (doc, graph) = load(&args.file)?;
    let t = graph.boundary_triple()?;
    let mu = weight_mu(&t);
    if args.json {
        let line = weight_line(&t).map(|l| l.to_string());
        print_json(out, &with_result(&doc, json!({"mu": fmt_q(mu), "line": line})))?;
    } else {
        writeln!(out, "{}", fmt_q(mu))?;
    }
    Ok(0)
}

fn row_label(d: i64, n: i64) -> String {
    format!("-{d}/{}", -n)
}

fn render_table(t: &Table, index: usize, format: Format) -> String {
    let cols: Vec<String> = TABLE_COLUMNS.iter().map(|(p, q)| format!("{p}/{q}")).collect();
    let mut s = String::new();
    match format {
        Format::Markdown => {
            s.push_str(&format!("### Table {index} (c = {})\n\n", t.c));
            s.push_str(&format!("| λ₂ | {} |\n", cols.join(" | ")));
            s.push_str(&format!("|---|{}\n", "---|".repeat(cols.len())));
            for (row, &(d, n)) in t.entries.iter().zip(TABLE_ROWS.iter()) {
                let cells: Vec<String> = row
                    .iter()
                    .map(|e| if e.flagged { format!("**{}**", fmt_q(e.value)) } else { fmt_q(e.value) })
                    .collect();
                s.push_str(&format!("| {} | {} |\n", row_label(d, n), cells.join(" | ")));
            }
        }
        Format::Tsv => {
            s.push_str(&format!("# Table {index} (c = {}); * marks values ≥ 2/3\n", t.c));
            s.push_str(&format!("lambda2\t{}\n", cols.join("\t")));
            for (row, &(d, n)) in t.entries.iter().zip(TABLE_ROWS.iter()) {
                let cells: Vec<String> =
                    row.iter().map(|e| format!("{}{}", fmt_q(e.value), if e.flagged { "*" } else { "" })).collect();
                s.push_str(&format!("{}\t{}\n", row_label(d, n), cells.join("\t")));
            }
        }
    }
    s
}

fn cmd_tables(args: &TablesArgs, out: &mut dyn Write) -> anyhow::Result<i32> {
    let tables = generate_tables();
    let which: &[usize] = match args.which {
        Which::One => &[1],
        Which::Two => &[2],
        Which::Both => &[1, 2],
    };
    let parts: Vec<String> = which.iter().map(|&i| render_table(&tables[i - 1], i, args.format)).collect();
    write!(out, "{}", parts.join("\n"))?;
    Ok(0)
}

/// The triple to draw: the boundary of an open document, or both sides of a split overlaid.
fn plotted_triple(graph: &ManifoldGraph, split: Option<&str>) -> anyhow::Result<BoundaryTriple> {
    if !graph.is_closed() {
        return Ok(graph.boundary_triple()?);
    }
    let a = graph.analyze(split)?;
    let mut t = a.side1.clone();
    t.a = t.a.union(&a.side2.a);
    t.h = t.h.union(&a.side2.h);
    t.p = t.p.union(&a.side2.p);
    Ok(t)
}

fn cmd_plot(args: &PlotArgs, out: &mut dyn Write) -> anyhow::Result<i32> {
    let (doc, graph) = load(&args.file)?;
    if args.out.exists() && !args.force {
        bail!("{} exists; pass --force to overwrite", args.out.display());
    }
    let t = plotted_triple(&graph, args.split.as_deref())?;
    let title = doc.name.clone().unwrap_or_else(|| args.file.display().to_string());
    fs::write(&args.out, svg::render_svg(&t, &title)).map_err(|e| Error::Io(format!("{}: {e}", args.out.display())))?;
    writeln!(out, "wrote {}", args.out.display())?;
    Ok(0)
}

fn cmd_oracle_check(args: &OracleArgs, out: &mut dyn Write) -> anyhow::Result<i32> {
    let (_, graph) = load(&args.file)?;
    let a = analyze_closed(&graph, args.split.as_deref())?;
    let cfg = OracleConfig { restarts: args.restarts, tol: args.tol, ..OracleConfig::default() };
    let report = verify_split(&a, &cfg)?;
    writeln!(out, "{}", a.verdict)?;
    writeln!(out, "{report}")?;
    Ok(if report.pass { 0 } else { 1 })
}

fn cmd_decompose(args: &FileArgs, out: &mut dyn Write) -> anyhow::Result<i32> {
    let (doc, graph) = load(&args.file)?;
    let mut expanded = graph.to_document();
    expanded.name = doc.name.clone();
    writeln!(out, "{}", expanded.to_json())?;
    Ok(0)
}
