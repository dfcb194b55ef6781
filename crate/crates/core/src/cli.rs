//! Command-line front end.
//!
//! Exit codes: 0 clean, 2 counterexample found, 64 usage, 65 domain or size
//! guard, 74 I/O.

use std::collections::BTreeMap;
use std::fs::File;
use std::io::{self, BufRead, BufReader, Write};
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Args, CommandFactory, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::blocks::{block_decomposition, block_leaf_transform, end_blocks};
use crate::enumerate::enumerate_graphs;
use crate::error::{Error, Result};
use crate::extremal::{
    cliques_at_vertex, clique_join_empty, construct_h, f_threshold, family_members, g_value, k1_join_two_cliques,
    lemma4_exceptions, mantel_bound, t2_exceptions,
};
use crate::format::{parse_graph6, to_graph6};
use crate::graph::Graph;
use crate::spectrum::{cycle_spectrum, find_admissible, find_consecutive_even, CycleSpectrum};
use crate::verify::{batch_verify_entries, near_threshold_search, HuntConfig, Statement, STATEMENT_IDS};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FOUND: i32 = 2;
pub const EXIT_USAGE: i32 = 64;
pub const EXIT_DOMAIN: i32 = 65;
pub const EXIT_IO: i32 = 74;

/// Environment variable that lowers the largest accepted input order.
pub const MAX_N_VAR: &str = "CYCLESPEC_MAX_N";

#[derive(Debug, Clone, PartialEq, Eq, Parser)]
#[command(name = "cyclespec", version, about = "Cycle spectra and extremal cycle-length bounds for small graphs")]
pub struct Command {
    #[command(subcommand)]
    pub action: Action,
}

#[derive(Debug, Clone, PartialEq, Eq, Args)]
pub struct Input {
    /// graph6 file, one graph per line; standard input when absent or `-`.
    #[arg(value_name = "INPUT")]
    pub path: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    /// `K_a ∨ (K_{c-2a} ∪ (n-c+a)K_1)` from --n --c --a.
    Kopylov,
    /// `K_1 ∨ (K_k ∪ K_{n-k-1})` from --n --k.
    K1TwoCliques,
    /// `K_{a,b}` from --a --b.
    CompleteBipartite,
    /// `K_{(k+1)/2} ∨ bK_1` from --k (odd) --b.
    HalfClique,
    /// `K_1 ∨ qK_{c-2}` on --n vertices from --n --c.
    CliquesAtVertex,
    /// The path on --n vertices.
    Tree,
    Complete,
    Empty,
    Cycle,
    /// Every extremal graph for --k admissible cycles on --n vertices.
    Members,
    /// Exceptions for all lengths `3..=k+2` on --n vertices.
    #[value(name = "lemma4-exceptions")]
    ShortCycleExceptions,
    /// Exceptions for all lengths `3..=n/2+2` on --n vertices.
    #[value(name = "t2-exceptions")]
    MantelExceptions,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum HuntStatement {
    T1,
    T3,
    T5,
    C1,
}

#[derive(Debug, Clone, PartialEq, Eq, Subcommand)]
pub enum Action {
    /// Cycle lengths of each input graph.
    Spectrum {
        /// Include one witness cycle per length.
        #[arg(long)]
        witness: bool,
        #[command(flatten)]
        input: Input,
    },
    /// Least k lengths in progression with difference 1 or 2.
    Admissible {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        k: u64,
        #[arg(long)]
        witness: bool,
        #[command(flatten)]
        input: Input,
    },
    /// Least run of k consecutive even lengths.
    ConsecEven {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        k: u64,
        #[arg(long)]
        witness: bool,
        #[command(flatten)]
        input: Input,
    },
    /// Cut vertices and blocks.
    Blocks {
        #[command(flatten)]
        input: Input,
    },
    /// Rebuild each graph so that the given block is an end-block.
    Transform {
        #[arg(long)]
        block: usize,
        #[command(flatten)]
        input: Input,
    },
    /// graph6 of a named construction.
    Construct {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        c: Option<usize>,
        #[arg(long)]
        a: Option<usize>,
        #[arg(long)]
        b: Option<usize>,
    },
    /// Edge thresholds for the given parameters.
    Thresholds {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        c: Option<usize>,
        #[arg(long)]
        a: Option<usize>,
    },
    /// Check a statement on every input graph.
    Verify {
        #[arg(long, value_parser = clap::builder::PossibleValuesParser::new(STATEMENT_IDS))]
        statement: String,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        c: Option<usize>,
        /// Worker threads; output order never depends on it.
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
        jobs: u64,
        #[arg(long)]
        witness: bool,
        #[command(flatten)]
        input: Input,
    },
    /// All graphs on n <= 7 vertices up to isomorphism.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        connected: bool,
    },
    /// Random search near the edge threshold for a counterexample.
    Hunt {
        #[arg(long, value_enum)]
        statement: HuntStatement,
        #[arg(long)]
        n: usize,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        k: u64,
        #[arg(long, default_value_t = 1000)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = HuntConfig::default().climb_steps)]
        climb_steps: usize,
    },
}

/// A rejected command line, or a request for help or version text.
#[derive(Debug)]
pub struct UsageError(clap::Error);

impl UsageError {
    /// Prints the message and returns the exit code.
    pub fn report(&self) -> i32 {
        let _ = self.0.print();
        self.exit_code()
    }

    pub fn exit_code(&self) -> i32 {
        match self.0.kind() {
            ErrorKind::DisplayHelp | ErrorKind::DisplayVersion | ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand => EXIT_OK,
            _ => EXIT_USAGE,
        }
    }

    pub fn message(&self) -> String {
        self.0.to_string()
    }
}

fn missing(flag: &str, why: &str) -> UsageError {
    UsageError(Command::command().error(ErrorKind::MissingRequiredArgument, format!("--{flag} is required {why}")))
}

/// Parses `argv` (program name first) and checks that every flag a subcommand
/// needs is present.
pub fn parse_args<S: AsRef<str>>(argv: &[S]) -> std::result::Result<Command, UsageError> {
    let cmd = Command::try_parse_from(argv.iter().map(AsRef::as_ref)).map_err(UsageError)?;
    match &cmd.action {
        Action::Verify { statement, k, c, .. } => {
            let (needs_k, needs_c) = Statement::needs(statement).expect("possible values are statement ids");
            if needs_k && k.is_none() {
                return Err(missing("k", &format!("for statement {statement}")));
            }
            if needs_c && c.is_none() {
                return Err(missing("c", &format!("for statement {statement}")));
            }
            if needs_k && *k == Some(0) {
                return Err(UsageError(Command::command().error(ErrorKind::ValueValidation, "--k must be at least 1")));
            }
        }
        Action::Construct { family, n, k, c, a, b } => {
            let need: &[(&str, bool)] = match family {
                Family::Kopylov => &[("n", n.is_some()), ("c", c.is_some()), ("a", a.is_some())],
                Family::K1TwoCliques | Family::Members | Family::ShortCycleExceptions => &[("n", n.is_some()), ("k", k.is_some())],
                Family::CompleteBipartite => &[("a", a.is_some()), ("b", b.is_some())],
                Family::HalfClique => &[("k", k.is_some()), ("b", b.is_some())],
                Family::CliquesAtVertex => &[("n", n.is_some()), ("c", c.is_some())],
                Family::Tree | Family::Complete | Family::Empty | Family::Cycle | Family::MantelExceptions => &[("n", n.is_some())],
            };
            if let Some((flag, _)) = need.iter().find(|(_, present)| !present) {
                let name = family.to_possible_value().expect("no skipped variants").get_name().to_string();
                return Err(missing(flag, &format!("for family {name}")));
            }
        }
        _ => {}
    }
    Ok(cmd)
}

/// Why a command stopped early.
enum Failure {
    Io(io::Error),
    Domain(Error),
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

/// Runs `cmd` against the process's standard streams.
pub fn execute(cmd: Command) -> i32 {
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let stdin = io::stdin();
    let code = execute_with(cmd, &mut stdin.lock(), &mut out);
    match out.flush() {
        Ok(()) => code,
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_IO
        }
    }
}

/// Runs `cmd`, reading graphs from `stdin` unless a path is given and writing
/// results to `out`. Diagnostics go to standard error.
pub fn execute_with(cmd: Command, stdin: &mut dyn BufRead, out: &mut dyn Write) -> i32 {
    match run(cmd, stdin, out) {
        Ok(code) => code,
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            EXIT_IO
        }
        Err(Failure::Domain(e)) => {
            eprintln!("error: {e}");
            EXIT_DOMAIN
        }
    }
}

fn max_order() -> usize {
    std::env::var(MAX_N_VAR)
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .map_or(Graph::MAX_ORDER, |m| m.min(Graph::MAX_ORDER))
}

fn guard(g: Graph, limit: usize) -> Result<Graph> {
    if g.order() > limit {
        return Err(Error::OrderTooLarge { order: g.order(), limit });
    }
    Ok(g)
}

/// Non-blank input lines.
fn read_lines(input: &Input, stdin: &mut dyn BufRead) -> io::Result<Vec<String>> {
    let mut lines = Vec::new();
    let mut push = |reader: &mut dyn BufRead| -> io::Result<()> {
        for line in reader.lines() {
            let line = line?;
            let t = line.trim();
            if !t.is_empty() {
                lines.push(t.to_string());
            }
        }
        Ok(())
    };
    match &input.path {
        Some(p) if p.as_os_str() != "-" => push(&mut BufReader::new(File::open(p)?))?,
        _ => push(stdin)?,
    }
    Ok(lines)
}

/// Applies `each` to every parsed input graph. A line that fails to parse or
/// to process is reported on standard error and turns the exit code to 65.
fn per_graph(
    input: &Input,
    stdin: &mut dyn BufRead,
    out: &mut dyn Write,
    mut each: impl FnMut(&Graph, &mut dyn Write) -> std::result::Result<(), Failure>,
) -> std::result::Result<i32, Failure> {
    let limit = max_order();
    let mut code = EXIT_OK;
    for (i, line) in read_lines(input, stdin)?.iter().enumerate() {
        match parse_graph6(line).and_then(|g| guard(g, limit)) {
            Ok(g) => match each(&g, out) {
                Ok(()) => {}
                Err(Failure::Domain(e)) => {
                    eprintln!("line {}: {e}", i + 1);
                    code = EXIT_DOMAIN;
                }
                Err(io) => return Err(io),
            },
            Err(e) => {
                eprintln!("line {}: {e}", i + 1);
                code = EXIT_DOMAIN;
            }
        }
    }
    Ok(code)
}

#[derive(Serialize)]
struct SpectrumLine<'a> {
    n: usize,
    m: usize,
    lengths: &'a [usize],
    girth: Option<usize>,
    circumference: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    found: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    start: Option<Option<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    difference: Option<Option<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    witnesses: Option<&'a BTreeMap<usize, Vec<usize>>>,
}

impl<'a> SpectrumLine<'a> {
    fn new(g: &Graph, spec: &'a CycleSpectrum, witness: bool) -> Self {
        SpectrumLine {
            n: g.order(),
            m: g.size(),
            lengths: &spec.lengths,
            girth: spec.girth(),
            circumference: spec.circumference(),
            found: None,
            start: None,
            difference: None,
            witnesses: witness.then_some(&spec.witnesses),
        }
    }

    fn progression(mut self, found: Option<(usize, usize)>) -> Self {
        self.found = Some(found.is_some());
        self.start = Some(found.map(|f| f.0));
        self.difference = Some(found.map(|f| f.1));
        self
    }
}

#[derive(Serialize)]
struct BlocksLine {
    n: usize,
    m: usize,
    cut_vertices: Vec<usize>,
    blocks: Vec<Vec<usize>>,
    end_blocks: Vec<usize>,
}

#[derive(Serialize)]
struct ThresholdsLine {
    #[serde(skip_serializing_if = "Option::is_none")]
    f: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    g: Option<usize>,
    mantel: usize,
}

#[derive(Serialize)]
struct ReportLine<'a> {
    #[serde(rename = "type")]
    kind: &'static str,
    #[serde(flatten)]
    report: &'a crate::verify::Report,
}

fn json_line<T: Serialize>(out: &mut dyn Write, value: &T) -> io::Result<()> {
    let text = serde_json::to_string(value).map_err(io::Error::other)?;
    writeln!(out, "{text}")
}

fn construct(family: Family, n: Option<usize>, k: Option<usize>, c: Option<usize>, a: Option<usize>, b: Option<usize>) -> Result<Vec<Graph>> {
    // parse_args has checked that the flags each family reads are present.
    let (n, k, c, a, b) = (n.unwrap_or(0), k.unwrap_or(0), c.unwrap_or(0), a.unwrap_or(0), b.unwrap_or(0));
    Ok(match family {
        Family::Kopylov => vec![construct_h(n, c, a)?.graph],
        Family::K1TwoCliques => {
            if k < 1 || n < k + 2 {
                return crate::error::domain(format!("needs n >= k+2 >= 3, got n={n}, k={k}"));
            }
            vec![k1_join_two_cliques(k, n - k - 1)?]
        }
        Family::CompleteBipartite => vec![Graph::complete_bipartite(a, b)?],
        Family::HalfClique => {
            if k % 2 == 0 {
                return crate::error::domain(format!("k must be odd, got {k}"));
            }
            vec![clique_join_empty(k.div_ceil(2), b)?]
        }
        Family::CliquesAtVertex => {
            if c < 3 || n < 1 || (n - 1) % (c - 2) != 0 {
                return crate::error::domain(format!("needs c >= 3 and c-2 dividing n-1, got n={n}, c={c}"));
            }
            vec![cliques_at_vertex((n - 1) / (c - 2), c - 2)?]
        }
        Family::Tree => vec![Graph::path(n)?],
        Family::Complete => vec![Graph::complete(n)?],
        Family::Empty => vec![Graph::empty(n)?],
        Family::Cycle => vec![Graph::cycle(n)?],
        Family::Members => family_members(n, k)?.into_iter().map(|m| m.graph).collect(),
        Family::ShortCycleExceptions => lemma4_exceptions(n, k)?.into_iter().map(|m| m.graph).collect(),
        Family::MantelExceptions => t2_exceptions(n)?,
    })
}

fn run(cmd: Command, stdin: &mut dyn BufRead, out: &mut dyn Write) -> std::result::Result<i32, Failure> {
    match cmd.action {
        Action::Spectrum { witness, input } => per_graph(&input, stdin, out, |g, out| {
            let spec = cycle_spectrum(g);
            Ok(json_line(out, &SpectrumLine::new(g, &spec, witness))?)
        }),
        Action::Admissible { k, witness, input } => per_graph(&input, stdin, out, |g, out| {
            let spec = cycle_spectrum(g);
            let found = find_admissible(&spec, k as usize)?.map(|w| (w.start, w.difference));
            Ok(json_line(out, &SpectrumLine::new(g, &spec, witness).progression(found))?)
        }),
        Action::ConsecEven { k, witness, input } => per_graph(&input, stdin, out, |g, out| {
            let spec = cycle_spectrum(g);
            let found = find_consecutive_even(&spec, k as usize)?.map(|m| (m, 2));
            Ok(json_line(out, &SpectrumLine::new(g, &spec, witness).progression(found))?)
        }),
        Action::Blocks { input } => per_graph(&input, stdin, out, |g, out| {
            let d = block_decomposition(g);
            let line = BlocksLine {
                n: g.order(),
                m: g.size(),
                cut_vertices: d.cut_vertices.to_vec(),
                blocks: d.blocks.iter().map(|b| b.vertices.to_vec()).collect(),
                end_blocks: end_blocks(&d),
            };
            Ok(json_line(out, &line)?)
        }),
        Action::Transform { block, input } => per_graph(&input, stdin, out, |g, out| {
            let t = block_leaf_transform(g, block)?;
            Ok(writeln!(out, "{}", to_graph6(&t)?)?)
        }),
        Action::Construct { family, n, k, c, a, b } => {
            let limit = max_order();
            for g in construct(family, n, k, c, a, b)? {
                let g = guard(g, limit)?;
                writeln!(out, "{}", to_graph6(&g)?)?;
            }
            Ok(EXIT_OK)
        }
        Action::Thresholds { n, k, c, a } => {
            let f = k.map(|k| f_threshold(n, k)).transpose()?;
            let g = match (c, a) {
                (Some(c), Some(a)) => Some(g_value(n, c, a)?),
                _ => None,
            };
            json_line(out, &ThresholdsLine { f, g, mantel: mantel_bound(n) })?;
            Ok(EXIT_OK)
        }
        Action::Verify { statement, k, c, jobs, witness, input } => {
            let statement = Statement::from_id(&statement, k, c)?;
            let limit = max_order();
            let entries = read_lines(&input, stdin)?
                .into_iter()
                .map(|line| {
                    let parsed = parse_graph6(&line).and_then(|g| guard(g, limit));
                    (line, parsed)
                })
                .collect();
            let batch = batch_verify_entries(entries, statement, jobs as usize);
            for r in &batch.records {
                writeln!(out, "{}", r.to_json(statement, witness))?;
            }
            json_line(out, &ReportLine { kind: "report", report: &batch.report })?;
            Ok(if batch.report.has_failures() {
                EXIT_FOUND
            } else if batch.report.counts.error > 0 {
                EXIT_DOMAIN
            } else {
                EXIT_OK
            })
        }
        Action::Enumerate { n, connected } => {
            for g in enumerate_graphs(n, connected)? {
                writeln!(out, "{}", to_graph6(&g)?)?;
            }
            Ok(EXIT_OK)
        }
        Action::Hunt { statement, n, k, trials, seed, climb_steps } => {
            let k = k as usize;
            let statement = match statement {
                HuntStatement::T1 => Statement::Admissible { k },
                HuntStatement::T3 => Statement::EvenCycles { k },
                HuntStatement::T5 => Statement::ConsecutiveEven { k },
                HuntStatement::C1 => Statement::ConsecutiveEvenConjecture { k },
            };
            let limit = max_order();
            if n > limit {
                return Err(Error::OrderTooLarge { order: n, limit }.into());
            }
            match near_threshold_search(n, statement, trials, seed, HuntConfig { climb_steps })? {
                Some(g) => {
                    writeln!(out, "{}", to_graph6(&g)?)?;
                    Ok(EXIT_FOUND)
                }
                None => Ok(EXIT_OK),
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_text(args: &[&str], input: &str) -> (i32, String) {
        let mut argv = vec!["cyclespec"];
        argv.extend_from_slice(args);
        let cmd = parse_args(&argv).unwrap();
        let mut out = Vec::new();
        let code = execute_with(cmd, &mut input.as_bytes(), &mut out);
        (code, String::from_utf8(out).unwrap())
    }

    #[test]
    fn parses_verify() {
        let cmd = parse_args(&["cyclespec", "verify", "--statement", "t1", "--k", "3"]).unwrap();
        assert_eq!(
            cmd.action,
            Action::Verify {
                statement: "t1".into(),
                k: Some(3),
                c: None,
                jobs: 1,
                witness: false,
                input: Input { path: None },
            }
        );
    }

    #[test]
    fn usage_errors() {
        let bogus = parse_args(&["cyclespec", "verify", "--statement", "bogus"]).unwrap_err();
        assert_eq!(bogus.exit_code(), EXIT_USAGE);
        assert!(bogus.message().contains("--statement"));
        let no_k = parse_args(&["cyclespec", "verify", "--statement", "t1"]).unwrap_err();
        assert!(no_k.message().contains("--k"));
        let no_a = parse_args(&["cyclespec", "construct", "--family", "kopylov", "--n", "6", "--c", "5"]).unwrap_err();
        assert!(no_a.message().contains("--a"));
        assert_eq!(parse_args(&["cyclespec", "frobnicate"]).unwrap_err().exit_code(), EXIT_USAGE);
        assert_eq!(parse_args(&["cyclespec", "--help"]).unwrap_err().exit_code(), EXIT_OK);
        assert!(parse_args(&["cyclespec", "admissible", "--k", "0"]).is_err());
    }

    #[test]
    fn thresholds_line() {
        assert_eq!(run_text(&["thresholds", "--n", "5", "--k", "2"], ""), (0, "{\"f\":6,\"mantel\":6}\n".into()));
        let (code, text) = run_text(&["thresholds", "--n", "8", "--c", "6", "--a", "2"], "");
        assert_eq!(code, 0);
        assert_eq!(text, "{\"g\":14,\"mantel\":16}\n");
        assert_eq!(run_text(&["thresholds", "--n", "3", "--k", "2"], "").0, EXIT_DOMAIN);
    }

    #[test]
    fn construct_kopylov() {
        let (code, text) = run_text(&["construct", "--family", "kopylov", "--n", "6", "--c", "5", "--a", "2"], "");
        assert_eq!(code, 0);
        let g = parse_graph6(text.trim()).unwrap();
        assert!(crate::iso::isomorphic(&g, &clique_join_empty(2, 4).unwrap()).unwrap());
        assert_eq!(run_text(&["construct", "--family", "kopylov", "--n", "6", "--c", "5", "--a", "3"], "").0, EXIT_DOMAIN);
    }

    #[test]
    fn spectrum_lines() {
        let (code, text) = run_text(&["spectrum"], "D~{\n\nBw\n");
        assert_eq!(code, 0);
        assert_eq!(text, "{\"n\":5,\"m\":10,\"lengths\":[3,4,5],\"girth\":3,\"circumference\":5}\n{\"n\":3,\"m\":3,\"lengths\":[3],\"girth\":3,\"circumference\":3}\n");
        let (code, text) = run_text(&["spectrum", "--witness"], "Bw\n");
        assert_eq!(code, 0);
        assert!(text.contains("\"witnesses\":{\"3\":[0,1,2]}"));
        let (code, text) = run_text(&["spectrum"], "Bw\n!!\n");
        assert_eq!(code, EXIT_DOMAIN);
        assert_eq!(text.lines().count(), 1);
    }

    #[test]
    fn admissible_and_consecutive() {
        let (_, text) = run_text(&["admissible", "--k", "3"], "D~{\n");
        assert!(text.ends_with("\"found\":true,\"start\":3,\"difference\":1}\n"), "{text}");
        let (_, text) = run_text(&["consec-even", "--k", "2"], "D~{\n");
        assert!(text.ends_with("\"found\":false,\"start\":null,\"difference\":null}\n"), "{text}");
    }

    #[test]
    fn verify_reports_and_exit_codes() {
        let (code, text) = run_text(&["verify", "--statement", "mantel"], "Bw\nCr\n");
        assert_eq!(code, 0);
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 3);
        assert!(lines[0].starts_with("{\"index\":0,\"graph6\":\"Bw\",\"statement\":\"mantel\",\"outcome\":\"PASS_WITNESS\""));
        assert!(lines[2].starts_with("{\"type\":\"report\",\"statement\":\"mantel\""));

        // The chain of three triangles fails the stated Erdős–Gallai exception list.
        let chain = to_graph6(&crate::named::triangle_chain()).unwrap();
        let (code, _) = run_text(&["verify", "--statement", "erdos-gallai", "--c", "4"], &chain);
        assert_eq!(code, EXIT_FOUND);
    }

    #[test]
    fn blocks_and_transform() {
        let chain = to_graph6(&crate::named::triangle_chain()).unwrap();
        let (code, text) = run_text(&["blocks"], &chain);
        assert_eq!(code, 0);
        assert_eq!(text, "{\"n\":7,\"m\":9,\"cut_vertices\":[2,4],\"blocks\":[[0,1,2],[2,3,4],[4,5,6]],\"end_blocks\":[0,2]}\n");
        let (code, text) = run_text(&["transform", "--block", "1"], &chain);
        assert_eq!(code, 0);
        let t = parse_graph6(text.trim()).unwrap();
        assert_eq!(t.size(), 9);
        assert_eq!(run_text(&["transform", "--block", "5"], &chain).0, EXIT_DOMAIN);
    }

    #[test]
    fn missing_file_is_io_error() {
        assert_eq!(run_text(&["spectrum", "/nonexistent/graphs.g6"], "").0, EXIT_IO);
    }
}
