//! `clawcolor`: recognize and optimally color graphs of the class, and compute
//! chromatic indices of graphs with no matching of size four.

mod failure;
mod report;

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use clawcolor::graph::{read_graph_file, write_graph, Format};
use clawcolor::oracle::{brute_chromatic, brute_edge_chromatic, generate, GenSpec, Strategy};
use clawcolor::{
    chromatic_index_with, classify_c5, classify_c7, clique_number, color_class_graph_with, decompose, exact_color,
    find_hole, in_class, validate_claims, AtomTree, Coloring, Graph, DEFAULT_BUDGET,
};

use failure::Failure;
use report::{EdgeColor, Report, StructureReport};

#[derive(Debug, Parser)]
#[command(
    name = "clawcolor",
    version,
    about = "Exact coloring for (claw, 4K1, 5-wheel, C5-twin, P5-twin, K5-e)-free graphs"
)]
struct Cli {
    /// More log output on stderr (repeatable); RUST_LOG overrides.
    #[arg(short, long, global = true, action = clap::ArgAction::Count)]
    verbose: u8,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, clap::Args)]
struct Input {
    /// Graph file: DIMACS (.col, .dimacs) or a 0-indexed edge list.
    graph: PathBuf,
    /// Override the format guessed from the file extension.
    #[arg(long, value_parser = ["dimacs", "edgelist"])]
    format: Option<String>,
    /// Print a JSON report instead of text.
    #[arg(long)]
    json: bool,
}

impl Input {
    fn load(&self) -> Result<Graph, Failure> {
        read(&self.graph, self.format.as_deref())
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Decide class membership; a non-member gets an induced forbidden witness.
    Recognize {
        #[command(flatten)]
        input: Input,
    },
    /// Optimal coloring of a class member.
    Color {
        #[command(flatten)]
        input: Input,
        /// Color a non-member with the exact solver instead of refusing.
        #[arg(long)]
        force: bool,
        /// Node budget of each exact-solver call.
        #[arg(long, env = "CLAWCOLOR_BUDGET", default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Clique-cutset decomposition into atoms, per component.
    Atoms {
        #[command(flatten)]
        input: Input,
    },
    /// Classify the vertices around an induced C5 (or C7) and check the
    /// structural facts.
    Structure {
        #[command(flatten)]
        input: Input,
    },
    /// Optimal edge coloring of a graph with no matching of size four.
    ChromaticIndex {
        #[command(flatten)]
        input: Input,
        #[arg(long, env = "CLAWCOLOR_BUDGET", default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Check a coloring: a JSON array indexed by vertex, or a report with a
    /// `coloring` field.
    Verify {
        graph: PathBuf,
        coloring: PathBuf,
        #[arg(long, value_parser = ["dimacs", "edgelist"])]
        format: Option<String>,
    },
    /// Emit class members as DIMACS.
    Gen {
        /// Vertex count (the minimum when --max-n is given).
        #[arg(long)]
        n: usize,
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// exhaustive_labeled, random_filtered or constructive_c5.
        #[arg(long, default_value = "random_filtered")]
        strategy: Strategy,
        #[arg(long, default_value_t = 1)]
        count: usize,
        /// Write numbered .col files here instead of printing.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Brute-force ground truth for small graphs.
    Oracle {
        #[arg(value_enum)]
        quantity: Quantity,
        graph: PathBuf,
        #[arg(long, value_parser = ["dimacs", "edgelist"])]
        format: Option<String>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Quantity {
    Chi,
    ChiPrime,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let level = match cli.verbose {
        0 => "warn",
        1 => "info",
        2 => "debug",
        _ => "trace",
    };
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or(level)).init();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err((failure, report)) => {
            if let Some(pair) = report {
                let (report, json) = *pair;
                emit(&report, json, &describe_failure(&failure));
            }
            eprintln!("clawcolor: {failure}");
            ExitCode::from(failure.exit_code())
        }
    }
}

/// A failure, optionally with a report to print on stdout first.
type Outcome = Result<(), (Failure, Option<Box<(Report, bool)>>)>;

fn bare(f: impl Into<Failure>) -> (Failure, Option<Box<(Report, bool)>>) {
    (f.into(), None)
}

fn read(path: &Path, format: Option<&str>) -> Result<Graph, Failure> {
    let format = format
        .map(|f| f.parse::<Format>())
        .transpose()
        .map_err(Failure::Input)?;
    read_graph_file(path, format).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn new_report(command: &'static str, g: &Graph) -> Report {
    Report {
        command,
        n: g.n(),
        m: g.edge_count(),
        ..Report::default()
    }
}

fn elapsed_ms(start: Instant) -> f64 {
    (start.elapsed().as_secs_f64() * 1e6).round() / 1e3
}

fn emit(report: &Report, json: bool, text: &str) {
    let mut out = std::io::stdout().lock();
    if json {
        let _ = writeln!(
            out,
            "{}",
            serde_json::to_string_pretty(report).expect("report serializes")
        );
    } else if !text.is_empty() {
        let _ = write!(out, "{text}");
    }
}

fn describe_failure(f: &Failure) -> String {
    match f {
        Failure::NotInClass(w) => format!("not in class: induced {} on {:?}\n", w.kind, w.vertices),
        _ => String::new(),
    }
}

fn run(command: Command) -> Outcome {
    match command {
        Command::Recognize { input } => recognize(&input),
        Command::Color { input, force, budget } => color(&input, force, budget),
        Command::Atoms { input } => atoms(&input),
        Command::Structure { input } => structure(&input),
        Command::ChromaticIndex { input, budget } => edge_color(&input, budget),
        Command::Verify {
            graph,
            coloring,
            format,
        } => verify(&graph, &coloring, format.as_deref()),
        Command::Gen {
            n,
            max_n,
            seed,
            strategy,
            count,
            out,
        } => gen(n, max_n.unwrap_or(n), seed, strategy, count, out),
        Command::Oracle {
            quantity,
            graph,
            format,
        } => oracle(quantity, &graph, format.as_deref()),
    }
}

fn recognize(input: &Input) -> Outcome {
    let g = input.load().map_err(bare)?;
    let start = Instant::now();
    let mut report = new_report("recognize", &g);
    let result = in_class(&g);
    report.in_class = Some(result.is_ok());
    report.timing_ms = elapsed_ms(start);
    match result {
        Ok(()) => {
            emit(&report, input.json, "in class\n");
            Ok(())
        }
        Err(w) => {
            report.witness = Some(w.clone());
            Err((Failure::NotInClass(w), Some(Box::new((report, input.json)))))
        }
    }
}

fn color(input: &Input, force: bool, budget: u64) -> Outcome {
    let g = input.load().map_err(bare)?;
    let start = Instant::now();
    let mut report = new_report("color", &g);
    let (coloring, clique) = match color_class_graph_with(&g, budget) {
        Ok(r) => {
            report.in_class = Some(true);
            report.routes = Some(r.routes);
            (r.coloring, r.clique)
        }
        Err(clawcolor::Error::NotInClass(w)) if force => {
            log::info!(
                "not in class ({} on {:?}); running the exact solver",
                w.kind,
                w.vertices
            );
            report.in_class = Some(false);
            report.witness = Some(w);
            (exact_color(&g, budget).map_err(bare)?, clique_number(&g).1)
        }
        Err(clawcolor::Error::NotInClass(w)) => {
            report.in_class = Some(false);
            report.witness = Some(w.clone());
            report.timing_ms = elapsed_ms(start);
            return Err((Failure::NotInClass(w), Some(Box::new((report, input.json)))));
        }
        Err(e) => return Err(bare(e)),
    };
    if let Err(edge) = coloring.verify(&g) {
        return Err(bare(Failure::Internal(format!(
            "coloring failed re-verification at {edge:?}"
        ))));
    }
    let k = coloring.color_count();
    report.chromatic_number = Some(k);
    report.coloring = Some(coloring.colors().to_vec());
    report.verified = Some(true);
    report.clique = Some(clique.clone());
    report.timing_ms = elapsed_ms(start);
    let mut text = format!("chromatic number {k}\n");
    writeln!(text, "coloring {}", join(coloring.colors())).unwrap();
    writeln!(text, "clique {} (size {})", join(&clique), clique.len()).unwrap();
    emit(&report, input.json, &text);
    Ok(())
}

fn join(xs: &[usize]) -> String {
    xs.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
}

fn atoms(input: &Input) -> Outcome {
    let g = input.load().map_err(bare)?;
    let start = Instant::now();
    let mut report = new_report("atoms", &g);
    let mut trees = Vec::new();
    for comp in g.components() {
        let sub = g.induced_subgraph(&comp).map_err(bare)?;
        trees.push(lift_tree(&decompose(&sub.graph).map_err(bare)?, &sub.origin));
    }
    let atoms: Vec<Vec<usize>> = trees.iter().flat_map(|t| t.atoms()).map(<[usize]>::to_vec).collect();
    let mut text = format!("{} atoms\n", atoms.len());
    for t in &trees {
        render_tree(t, 0, &mut text);
    }
    report.atoms = Some(atoms);
    report.tree = Some(trees);
    report.timing_ms = elapsed_ms(start);
    emit(&report, input.json, &text);
    Ok(())
}

fn lift_tree(t: &AtomTree, origin: &[usize]) -> AtomTree {
    let lift = |vs: &[usize]| vs.iter().map(|&v| origin[v]).collect::<Vec<_>>();
    match t {
        AtomTree::Atom(vs) => AtomTree::Atom(lift(vs)),
        AtomTree::Split { cutset, left, right } => AtomTree::Split {
            cutset: lift(cutset),
            left: Box::new(lift_tree(left, origin)),
            right: Box::new(lift_tree(right, origin)),
        },
    }
}

fn render_tree(t: &AtomTree, depth: usize, out: &mut String) {
    let pad = "  ".repeat(depth);
    match t {
        AtomTree::Atom(vs) => writeln!(out, "{pad}atom {}", join(vs)).unwrap(),
        AtomTree::Split { cutset, left, right } => {
            writeln!(out, "{pad}cutset {}", join(cutset)).unwrap();
            render_tree(left, depth + 1, out);
            render_tree(right, depth + 1, out);
        }
    }
}

fn structure(input: &Input) -> Outcome {
    let g = input.load().map_err(bare)?;
    let start = Instant::now();
    let mut report = new_report("structure", &g);
    if let Err(w) = in_class(&g) {
        report.in_class = Some(false);
        report.witness = Some(w.clone());
        report.timing_ms = elapsed_ms(start);
        return Err((Failure::NotInClass(w), Some(Box::new((report, input.json)))));
    }
    report.in_class = Some(true);
    let mut text = String::new();
    let mut violated = 0;
    let s = if let Some(cycle) = find_hole(&g, 5) {
        let s = classify_c5(&g, &cycle).map_err(bare)?;
        let violations: Vec<String> = validate_claims(&g, &s).iter().map(ToString::to_string).collect();
        violated = violations.len();
        writeln!(text, "C5 {}", join(&s.cycle)).unwrap();
        for i in 0..5 {
            writeln!(text, "X[{i}] {}\nY[{i}] {}", join(&s.x[i]), join(&s.y[i])).unwrap();
        }
        writeln!(text, "R {}", join(&s.r)).unwrap();
        for v in &violations {
            writeln!(text, "violated: {v}").unwrap();
        }
        StructureReport::C5 { classes: s, violations }
    } else if let Some(cycle) = find_hole(&g, 7) {
        let s = classify_c7(&g, &cycle).map_err(bare)?;
        writeln!(text, "C7 {}", join(&s.cycle)).unwrap();
        for i in 0..7 {
            writeln!(text, "Y[{i}] {}\nZ[{i}] {}", join(&s.y[i]), join(&s.z[i])).unwrap();
        }
        StructureReport::C7 { classes: s }
    } else {
        text.push_str("no induced C5 or C7\n");
        StructureReport::None
    };
    report.structure = Some(s);
    report.timing_ms = elapsed_ms(start);
    if violated > 0 {
        return Err((
            Failure::Internal(format!("{violated} structural facts violated")),
            Some(Box::new((report, input.json))),
        ));
    }
    emit(&report, input.json, &text);
    Ok(())
}

fn edge_color(input: &Input, budget: u64) -> Outcome {
    let g = input.load().map_err(bare)?;
    let start = Instant::now();
    let mut report = new_report("chromatic-index", &g);
    let r = chromatic_index_with(&g, budget).map_err(bare)?;
    if !r.coloring.is_proper(&g) {
        return Err(bare(Failure::Internal("edge coloring failed re-verification".into())));
    }
    let edge_colors: Vec<EdgeColor> = r
        .coloring
        .edges
        .iter()
        .zip(&r.coloring.colors)
        .map(|(&(u, v), &color)| EdgeColor { u, v, color })
        .collect();
    let mut text = format!(
        "chromatic index {} (max degree {}, class {})\n",
        r.chi_prime,
        r.max_degree,
        r.class()
    );
    for e in &edge_colors {
        writeln!(text, "{} {} {}", e.u, e.v, e.color).unwrap();
    }
    report.chi_prime = Some(r.chi_prime);
    report.delta = Some(r.max_degree);
    report.class = Some(r.class());
    report.edge_colors = Some(edge_colors);
    report.verified = Some(true);
    report.timing_ms = elapsed_ms(start);
    emit(&report, input.json, &text);
    Ok(())
}

fn verify(graph: &Path, coloring: &Path, format: Option<&str>) -> Outcome {
    let g = read(graph, format).map_err(bare)?;
    let text =
        std::fs::read_to_string(coloring).map_err(|e| bare(Failure::Input(format!("{}: {e}", coloring.display()))))?;
    let value: serde_json::Value =
        serde_json::from_str(&text).map_err(|e| bare(Failure::Input(format!("{}: {e}", coloring.display()))))?;
    let array = value.get("coloring").unwrap_or(&value);
    let colors: Vec<usize> = serde_json::from_value(array.clone()).map_err(|e| {
        bare(Failure::Input(format!(
            "{}: expected an array of colors: {e}",
            coloring.display()
        )))
    })?;
    if colors.len() != g.n() {
        return Err(bare(Failure::Input(format!(
            "coloring has {} entries for {} vertices",
            colors.len(),
            g.n()
        ))));
    }
    let c = Coloring::new(colors);
    match c.verify(&g) {
        Ok(()) => {
            println!("proper coloring with {} colors", c.color_count());
            Ok(())
        }
        Err(Some((u, v))) => Err(bare(Failure::Input(format!(
            "edge {u}-{v} has both endpoints colored {}",
            c.color(u)
        )))),
        Err(None) => Err(bare(Failure::Input("coloring does not match the graph".into()))),
    }
}

fn gen(min_n: usize, max_n: usize, seed: u64, strategy: Strategy, count: usize, out: Option<PathBuf>) -> Outcome {
    if min_n > max_n {
        return Err(bare(Failure::Input(format!("--max-n {max_n} is below --n {min_n}"))));
    }
    let spec = GenSpec::new(min_n, max_n, seed, strategy);
    let mut produced = 0;
    for (k, g) in generate(&spec).take(count).enumerate() {
        let body = format!(
            "c clawcolor gen strategy={strategy} seed={seed} index={k}\n{}",
            write_graph(&g, Format::Dimacs)
        );
        match &out {
            Some(dir) => {
                std::fs::create_dir_all(dir).map_err(|e| bare(Failure::Input(format!("{}: {e}", dir.display()))))?;
                let path = dir.join(format!("{strategy}-{seed}-{k}.col"));
                std::fs::write(&path, body).map_err(|e| bare(Failure::Input(format!("{}: {e}", path.display()))))?;
            }
            None => print!("{body}"),
        }
        produced += 1;
    }
    if produced < count {
        log::warn!("generator stopped after {produced} of {count} graphs");
    }
    Ok(())
}

fn oracle(quantity: Quantity, graph: &Path, format: Option<&str>) -> Outcome {
    let g = read(graph, format).map_err(bare)?;
    let value = match quantity {
        Quantity::Chi => brute_chromatic(&g),
        Quantity::ChiPrime => brute_edge_chromatic(&g),
    }
    .map_err(bare)?;
    println!("{value}");
    Ok(())
}
