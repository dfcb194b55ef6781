//! Corpus verification and report aggregation.

use rayon::prelude::*;
use serde::Serialize;

use super::{verify, Outcome, Statement, StatementParams, Verdict};
use crate::error::Result;
use crate::extremal::FamilyLabel;
use crate::format::to_graph6;
use crate::graph::Graph;

/// The verdict for one corpus entry, or the error it raised.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Record {
    pub index: usize,
    pub graph6: String,
    pub result: Result<Verdict>,
}

#[derive(Serialize)]
struct ErrorDetail<'a> {
    kind: &'static str,
    message: &'a str,
}

#[derive(Serialize)]
struct Line<'a, D: Serialize> {
    index: usize,
    graph6: &'a str,
    statement: &'a str,
    outcome: &'static str,
    detail: D,
}

impl Record {
    /// One JSON line: `{index, graph6, statement, outcome, detail}`.
    pub fn to_json(&self, statement: Statement, witness: bool) -> String {
        let out = match &self.result {
            Ok(v) => {
                let detail = if witness { v.detail.clone() } else { v.detail.without_cycles() };
                serde_json::to_string(&Line {
                    index: self.index,
                    graph6: &self.graph6,
                    statement: statement.id(),
                    outcome: v.outcome.as_str(),
                    detail,
                })
            }
            Err(e) => {
                let message = e.to_string();
                serde_json::to_string(&Line {
                    index: self.index,
                    graph6: &self.graph6,
                    statement: statement.id(),
                    outcome: "ERROR",
                    detail: ErrorDetail { kind: "error", message: &message },
                })
            }
        };
        out.expect("verdicts serialize")
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Counts {
    #[serde(rename = "SKIP_HYPOTHESIS")]
    pub skip: usize,
    #[serde(rename = "PASS_WITNESS")]
    pub witness: usize,
    #[serde(rename = "PASS_EXTREMAL")]
    pub extremal: usize,
    #[serde(rename = "FAIL_COUNTEREXAMPLE")]
    pub fail: usize,
    #[serde(rename = "ERROR")]
    pub error: usize,
}

impl Counts {
    pub fn total(&self) -> usize {
        self.skip + self.witness + self.extremal + self.fail + self.error
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExtremalEntry {
    pub index: usize,
    pub graph6: String,
    pub labels: Vec<FamilyLabel>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RecordError {
    pub index: usize,
    pub graph6: String,
    pub message: String,
}

/// Aggregate over a corpus. Entries are kept sorted by input index, so
/// absorbing records in any order gives the same report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub statement: String,
    pub params: StatementParams,
    pub corpus_size: usize,
    pub counts: Counts,
    /// graph6 strings of counterexamples.
    pub failures: Vec<String>,
    pub extremal: Vec<ExtremalEntry>,
    pub errors: Vec<RecordError>,
    #[serde(skip)]
    failure_index: Vec<usize>,
}

impl Report {
    pub fn new(statement: Statement) -> Self {
        Report {
            statement: statement.id().to_string(),
            params: statement.params(),
            corpus_size: 0,
            counts: Counts::default(),
            failures: Vec::new(),
            extremal: Vec::new(),
            errors: Vec::new(),
            failure_index: Vec::new(),
        }
    }

    pub fn absorb(&mut self, r: &Record) {
        self.corpus_size += 1;
        match &r.result {
            Err(e) => {
                self.counts.error += 1;
                let at = self.errors.partition_point(|x| x.index < r.index);
                self.errors.insert(at, RecordError { index: r.index, graph6: r.graph6.clone(), message: e.to_string() });
            }
            Ok(v) => match v.outcome {
                Outcome::SkipHypothesis => self.counts.skip += 1,
                Outcome::PassWitness => self.counts.witness += 1,
                Outcome::PassExtremal => {
                    self.counts.extremal += 1;
                    let labels = match &v.detail {
                        super::Detail::Labels { labels } => labels.clone(),
                        _ => Vec::new(),
                    };
                    let at = self.extremal.partition_point(|x| x.index < r.index);
                    self.extremal.insert(at, ExtremalEntry { index: r.index, graph6: r.graph6.clone(), labels });
                }
                Outcome::FailCounterexample => {
                    self.counts.fail += 1;
                    let at = self.failure_index.partition_point(|&i| i < r.index);
                    self.failure_index.insert(at, r.index);
                    self.failures.insert(at, r.graph6.clone());
                }
            },
        }
    }

    pub fn has_failures(&self) -> bool {
        self.counts.fail > 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("reports serialize")
    }
}

/// Per-graph verdicts in input order, plus their aggregate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Batch {
    pub records: Vec<Record>,
    pub report: Report,
}

/// One corpus entry: its graph6 text and the parsed graph (or parse error).
pub type Entry = (String, Result<Graph>);

fn run(entries: Vec<Entry>, statement: Statement, jobs: usize) -> Batch {
    let check = |(index, (graph6, parsed)): (usize, Entry)| Record {
        index,
        graph6,
        result: parsed.and_then(|g| verify(statement, &g)),
    };
    let records: Vec<Record> = if jobs <= 1 {
        entries.into_iter().enumerate().map(check).collect()
    } else {
        match rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
            Ok(pool) => pool.install(|| entries.into_par_iter().enumerate().map(check).collect()),
            Err(_) => entries.into_iter().enumerate().map(check).collect(),
        }
    };
    let mut report = Report::new(statement);
    for r in &records {
        report.absorb(r);
    }
    Batch { records, report }
}

/// Verifies `statement` on every graph of `corpus`, on `jobs` worker threads.
/// Per-graph errors are recorded, not raised.
pub fn batch_verify(corpus: &[Graph], statement: Statement, jobs: usize) -> Batch {
    let entries = corpus
        .iter()
        .map(|g| (to_graph6(g).unwrap_or_default(), Ok(g.clone())))
        .collect();
    run(entries, statement, jobs)
}

/// Like [`batch_verify`] for entries that may have failed to parse.
pub fn batch_verify_entries(entries: Vec<Entry>, statement: Statement, jobs: usize) -> Batch {
    run(entries, statement, jobs)
}
