//! Verdict engine: checks one statement about cycle lengths on one graph.
//!
//! Each statement has a size hypothesis and a conclusion. A verdict is
//! `SKIP_HYPOTHESIS` when the hypothesis fails, `PASS_WITNESS` when the
//! conclusion holds (with cycles to prove it), `PASS_EXTREMAL` when the graph is
//! one of the listed exceptions, and `FAIL_COUNTEREXAMPLE` otherwise.
//! Statements restricted to a range of orders reject graphs outside that range
//! with a domain error instead of skipping them.

mod batch;
mod hunt;
mod ordering;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

pub use batch::{batch_verify, batch_verify_entries, Batch, Entry, Counts, ExtremalEntry, Record, RecordError, Report};
pub use hunt::{hunt_threshold, near_threshold_search, HuntConfig};
pub use ordering::{back_degree_ordering, degeneracy};

use crate::blocks::block_decomposition;
use crate::error::{domain, Error, Result};
use crate::extremal::{
    choose2, construct_h, f_threshold, g_value, is_cliques_at_vertex, is_extremal_member, k1_join_two_cliques,
    lemma4_exceptions, mantel_bound, t2_exceptions, two_clique_threshold, FamilyLabel,
};
use crate::graph::Graph;
use crate::iso::isomorphic;
use crate::spectrum::{consecutive_even_starts, cycle_spectrum, find_admissible, AdmissibleWitness, CycleSpectrum};

/// A statement that can be checked on a single graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Statement {
    /// `e >= f(n,k)` forces `k` admissible cycles unless extremal. CLI id `t1`.
    Admissible { k: usize },
    /// On `k+2 <= n <= 2k+1`, `e >= C(k+1,2)+C(n-k,2)` forces every length `3..=k+2`. CLI id `lemma4`.
    ShortCycles { k: usize },
    /// On `2k+2 <= n <= 4k+1`, `e >= C(2k+1,2)+C(n-2k,2)` forces every even length `4..=2k+2`. CLI id `t3`.
    EvenCycles { k: usize },
    /// On `n >= 2k+2`, `e >= 2k(n-k-1/2)` forces `k` consecutive even lengths. CLI id `t5`.
    ConsecutiveEven { k: usize },
    /// `e >= ⌊n²/4⌋` forces every length `3..=⌊n/2⌋+2` unless exceptional. CLI id `t2`.
    MantelStrengthening,
    /// `e >= (2k+1)(n-1)/2` forces `k` consecutive even lengths unless every
    /// block is `K_{2k+1}` at equality (open in general). CLI id `c1`.
    ConsecutiveEvenConjecture { k: usize },
    /// `e >= (c-1)(n-1)/2` forces a cycle of length at least `c` unless `G = K_1 ∨ qK_{c-2}`.
    ErdosGallai { c: usize },
    /// 2-connected, `e >= max(g(n,c,2), g(n,c,s))` forces a cycle of length at least `c`
    /// unless `G` is `H(n,c,2)` or `H(n,c,s)`, `s = ⌊(c-1)/2⌋`.
    Kopylov { c: usize },
    /// Non-bipartite with `e > (n-1)²/4 + 1` forces every length `3..=c(G)`.
    Brandt,
    /// `e >= ⌊n²/4⌋` forces a triangle unless `G = K_{⌈n/2⌉,⌊n/2⌋}`.
    Mantel,
}

/// CLI identifiers accepted by [`Statement::from_id`].
pub const STATEMENT_IDS: [&str; 10] = ["t1", "lemma4", "t3", "t5", "t2", "c1", "erdos-gallai", "kopylov", "brandt", "mantel"];

/// Parameters a statement takes.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct StatementParams {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub c: Option<usize>,
}

impl Statement {
    pub fn id(&self) -> &'static str {
        match self {
            Statement::Admissible { .. } => "t1",
            Statement::ShortCycles { .. } => "lemma4",
            Statement::EvenCycles { .. } => "t3",
            Statement::ConsecutiveEven { .. } => "t5",
            Statement::MantelStrengthening => "t2",
            Statement::ConsecutiveEvenConjecture { .. } => "c1",
            Statement::ErdosGallai { .. } => "erdos-gallai",
            Statement::Kopylov { .. } => "kopylov",
            Statement::Brandt => "brandt",
            Statement::Mantel => "mantel",
        }
    }

    /// Whether the statement needs `k` (first) or `c` (second).
    pub fn needs(id: &str) -> Option<(bool, bool)> {
        Some(match id {
            "t1" | "lemma4" | "t3" | "t5" | "c1" => (true, false),
            "erdos-gallai" | "kopylov" => (false, true),
            "t2" | "brandt" | "mantel" => (false, false),
            _ => return None,
        })
    }

    /// Builds a statement from its identifier and parameters.
    pub fn from_id(id: &str, k: Option<usize>, c: Option<usize>) -> Result<Self> {
        let (needs_k, needs_c) = Self::needs(id).ok_or_else(|| Error::Domain(format!("unknown statement {id:?}")))?;
        let k = if needs_k {
            match k {
                Some(k) if k >= 1 => k,
                Some(_) => return domain("k must be at least 1"),
                None => return domain(format!("statement {id} requires k")),
            }
        } else {
            0
        };
        let c = if needs_c { c.ok_or_else(|| Error::Domain(format!("statement {id} requires c")))? } else { 0 };
        Ok(match id {
            "t1" => Statement::Admissible { k },
            "lemma4" => Statement::ShortCycles { k },
            "t3" => Statement::EvenCycles { k },
            "t5" => Statement::ConsecutiveEven { k },
            "c1" => Statement::ConsecutiveEvenConjecture { k },
            "t2" => Statement::MantelStrengthening,
            "erdos-gallai" => Statement::ErdosGallai { c },
            "kopylov" => Statement::Kopylov { c },
            "brandt" => Statement::Brandt,
            _ => Statement::Mantel,
        })
    }

    pub fn params(&self) -> StatementParams {
        match *self {
            Statement::Admissible { k }
            | Statement::ShortCycles { k }
            | Statement::EvenCycles { k }
            | Statement::ConsecutiveEven { k }
            | Statement::ConsecutiveEvenConjecture { k } => StatementParams { k: Some(k), c: None },
            Statement::ErdosGallai { c } | Statement::Kopylov { c } => StatementParams { k: None, c: Some(c) },
            _ => StatementParams::default(),
        }
    }

    /// Rejects graphs of an order the statement does not speak about.
    fn check_domain(&self, g: &Graph) -> Result<()> {
        let n = g.order();
        match *self {
            Statement::Admissible { k } | Statement::ConsecutiveEvenConjecture { k } if k < 1 => domain("k must be at least 1"),
            Statement::ShortCycles { k } if !(k >= 1 && k + 2 <= n && n <= 2 * k + 1) => {
                domain(format!("order {n} outside k+2..=2k+1 for k={k}"))
            }
            Statement::EvenCycles { k } if !(k >= 1 && 2 * k + 2 <= n && n <= 4 * k + 1) => {
                domain(format!("order {n} outside 2k+2..=4k+1 for k={k}"))
            }
            Statement::ConsecutiveEven { k } if !(k >= 1 && n >= 2 * k + 2) => domain(format!("order {n} below 2k+2 for k={k}")),
            Statement::MantelStrengthening if n < 3 => domain(format!("order {n} below 3")),
            Statement::ErdosGallai { c } if c < 3 || n < 1 => domain(format!("needs c >= 3 and n >= 1, got c={c}, n={n}")),
            Statement::Kopylov { c } => {
                if c < 5 || n < c {
                    return domain(format!("needs n >= c >= 5, got c={c}, n={n}"));
                }
                let d = block_decomposition(g);
                if !(g.is_connected() && d.blocks.len() == 1 && n >= 3) {
                    return domain("graph is not 2-connected");
                }
                Ok(())
            }
            _ => Ok(()),
        }
    }

    /// Least edge count meeting the size hypothesis for order `n`, if the order qualifies.
    pub fn required_edges(&self, n: usize) -> Option<usize> {
        Some(match *self {
            Statement::Admissible { k } => f_threshold(n, k).ok()?,
            Statement::ShortCycles { k } => two_clique_threshold(n, k),
            Statement::EvenCycles { k } => two_clique_threshold(n, 2 * k),
            // 2k(n-k-1/2) = 2k(n-k) - k
            Statement::ConsecutiveEven { k } => (2 * k * n).checked_sub(2 * k * k + k)?,
            Statement::MantelStrengthening | Statement::Mantel => mantel_bound(n),
            Statement::ConsecutiveEvenConjecture { k } => ((2 * k + 1) * n.checked_sub(1)?).div_ceil(2),
            Statement::ErdosGallai { c } => ((c - 1) * n.checked_sub(1)?).div_ceil(2),
            Statement::Kopylov { c } => {
                let s = (c - 1) / 2;
                g_value(n, c, 2).ok()?.max(g_value(n, c, s).ok()?)
            }
            // 4e > (n-1)^2 + 4
            Statement::Brandt => (n.saturating_sub(1).pow(2) + 4) / 4 + 1,
        })
    }
}

impl fmt::Display for Statement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Statement {
    type Err = Error;

    /// Parses `id` or `id:value`, e.g. `t1:3` or `kopylov:6`.
    fn from_str(s: &str) -> Result<Self> {
        let (id, value) = match s.split_once(':') {
            Some((id, v)) => (id, Some(v.parse::<usize>().map_err(|_| Error::Domain(format!("bad parameter in {s:?}")))?)),
            None => (s, None),
        };
        let (needs_k, _) = Self::needs(id).ok_or_else(|| Error::Domain(format!("unknown statement {id:?}")))?;
        if needs_k {
            Self::from_id(id, value, None)
        } else {
            Self::from_id(id, None, value)
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Outcome {
    SkipHypothesis,
    PassWitness,
    PassExtremal,
    FailCounterexample,
}

impl Outcome {
    pub fn as_str(self) -> &'static str {
        match self {
            Outcome::SkipHypothesis => "SKIP_HYPOTHESIS",
            Outcome::PassWitness => "PASS_WITNESS",
            Outcome::PassExtremal => "PASS_EXTREMAL",
            Outcome::FailCounterexample => "FAIL_COUNTEREXAMPLE",
        }
    }
}

/// Evidence attached to a verdict.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Detail {
    /// The size (or structural) hypothesis is not met.
    Hypothesis { edges: usize, required_edges: Option<usize>, unmet: String },
    /// `k` admissible cycles.
    Progression {
        #[serde(flatten)]
        witness: AdmissibleWitness,
        #[serde(skip_serializing_if = "Vec::is_empty")]
        cycles: Vec<Vec<usize>>,
    },
    /// Every required length is present.
    Lengths {
        lengths: Vec<usize>,
        #[serde(skip_serializing_if = "Vec::is_empty")]
        cycles: Vec<Vec<usize>>,
    },
    /// A cycle at least as long as required.
    LongCycle {
        length: usize,
        #[serde(skip_serializing_if = "Vec::is_empty")]
        cycle: Vec<usize>,
    },
    /// Matching exception or family labels.
    Labels { labels: Vec<FamilyLabel> },
    /// The conclusion fails and the graph is not exceptional.
    Missing { requirement: String, spectrum: Vec<usize> },
}

impl Detail {
    /// The same detail without witness cycles.
    pub fn without_cycles(&self) -> Detail {
        let mut d = self.clone();
        match &mut d {
            Detail::Progression { cycles, .. } | Detail::Lengths { cycles, .. } => cycles.clear(),
            Detail::LongCycle { cycle, .. } => cycle.clear(),
            _ => {}
        }
        d
    }
}

/// The outcome of checking one statement on one graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    #[serde(serialize_with = "serialize_id")]
    pub statement: Statement,
    pub outcome: Outcome,
    pub detail: Detail,
}

fn serialize_id<S: serde::Serializer>(s: &Statement, ser: S) -> std::result::Result<S::Ok, S::Error> {
    ser.serialize_str(s.id())
}

impl Verdict {
    /// Re-checks the verdict against `g` from scratch: witnesses are valid
    /// cycles of the claimed lengths, labels match by isomorphism, and failures
    /// still fail.
    pub fn revalidate(&self, g: &Graph) -> Result<bool> {
        use crate::spectrum::is_cycle;
        Ok(match (&self.outcome, &self.detail) {
            (Outcome::SkipHypothesis, _) => hypothesis(self.statement, g)?.is_some(),
            (Outcome::PassWitness, Detail::Progression { witness, cycles }) => {
                witness.witness_lengths.len() == witness.count
                    && matches!(witness.difference, 1 | 2)
                    && cycles.len() == witness.count
                    && cycles.iter().zip(&witness.witness_lengths).all(|(c, &l)| c.len() == l && is_cycle(g, c))
            }
            (Outcome::PassWitness, Detail::Lengths { lengths, cycles }) => {
                cycles.len() == lengths.len() && cycles.iter().zip(lengths).all(|(c, &l)| c.len() == l && is_cycle(g, c))
            }
            (Outcome::PassWitness, Detail::LongCycle { length, cycle }) => cycle.len() == *length && is_cycle(g, cycle),
            (Outcome::PassExtremal, Detail::Labels { labels }) => !labels.is_empty() && exceptional_labels(self.statement, g)? == *labels,
            (Outcome::FailCounterexample, _) => {
                let fresh = verify(self.statement, g)?;
                fresh.outcome == Outcome::FailCounterexample
            }
            _ => false,
        })
    }
}

/// `Some(detail)` when the hypothesis of `statement` fails on `g`.
fn hypothesis(statement: Statement, g: &Graph) -> Result<Option<Detail>> {
    statement.check_domain(g)?;
    let edges = g.size();
    let required = statement.required_edges(g.order());
    if statement == Statement::Brandt && g.is_bipartite().is_some() {
        return Ok(Some(Detail::Hypothesis { edges, required_edges: required, unmet: "graph is bipartite".into() }));
    }
    match required {
        None => Ok(Some(Detail::Hypothesis { edges, required_edges: None, unmet: "order below statement range".into() })),
        Some(r) if edges < r => Ok(Some(Detail::Hypothesis { edges, required_edges: Some(r), unmet: "too few edges".into() })),
        Some(_) => Ok(None),
    }
}

fn witness_cycles(spec: &CycleSpectrum, lengths: &[usize]) -> Vec<Vec<usize>> {
    lengths.iter().map(|l| spec.witnesses[l].clone()).collect()
}

/// Labels of the exceptions of `statement` isomorphic to `g`.
fn exceptional_labels(statement: Statement, g: &Graph) -> Result<Vec<FamilyLabel>> {
    let n = g.order();
    let mut labels = Vec::new();
    match statement {
        Statement::Admissible { k } => {
            if n >= k + 2 {
                labels = is_extremal_member(g, k)?;
            }
        }
        Statement::ShortCycles { k } => {
            for m in lemma4_exceptions(n, k)? {
                if isomorphic(g, &m.graph)? {
                    labels = vec![FamilyLabel::ShortCycleException, m.label];
                    break;
                }
            }
        }
        Statement::EvenCycles { k } => {
            if isomorphic(g, &k1_join_two_cliques(2 * k, n - 2 * k - 1)?)? {
                labels.push(FamilyLabel::K1JoinTwoCliques);
            }
        }
        Statement::MantelStrengthening => {
            for h in t2_exceptions(n)? {
                if isomorphic(g, &h)? {
                    labels.push(FamilyLabel::MantelException);
                    break;
                }
            }
        }
        Statement::ConsecutiveEvenConjecture { k } => {
            let d = block_decomposition(g);
            let at_equality = 2 * g.size() == (2 * k + 1) * n.saturating_sub(1);
            let clique_blocks = !d.blocks.is_empty()
                && d.blocks.iter().all(|b| b.graph.order() == 2 * k + 1 && b.graph.size() == choose2(2 * k + 1));
            if at_equality && clique_blocks && g.is_connected() {
                labels.push(FamilyLabel::CliqueBlocks);
            }
        }
        Statement::ErdosGallai { c } => {
            if c >= 3 && is_cliques_at_vertex(g, c - 2) {
                labels.push(FamilyLabel::CliquesAtVertex);
            }
        }
        Statement::Kopylov { c } => {
            let s = (c - 1) / 2;
            for a in [2, s] {
                if isomorphic(g, &construct_h(n, c, a)?.graph)? {
                    labels.push(FamilyLabel::KopylovH);
                    break;
                }
            }
        }
        Statement::Mantel => {
            if isomorphic(g, &Graph::complete_bipartite(n.div_ceil(2), n / 2)?)? {
                labels.push(FamilyLabel::CompleteBipartite);
            }
        }
        Statement::ConsecutiveEven { .. } | Statement::Brandt => {}
    }
    Ok(labels)
}

/// The conclusion of `statement`, as a witness detail if it holds.
fn conclusion(statement: Statement, g: &Graph, spec: &CycleSpectrum) -> Result<std::result::Result<Detail, String>> {
    let lengths_detail = |lengths: Vec<usize>| Detail::Lengths { cycles: witness_cycles(spec, &lengths), lengths };
    let covers = |lengths: &[usize]| lengths.iter().all(|&l| spec.contains(l));
    let n = g.order();
    Ok(match statement {
        Statement::Admissible { k } => match find_admissible(spec, k)? {
            Some(w) => Ok(Detail::Progression { cycles: witness_cycles(spec, &w.witness_lengths), witness: w }),
            None => Err(format!("{k} admissible cycles")),
        },
        Statement::ShortCycles { k } => {
            let want: Vec<usize> = (3..=k + 2).collect();
            if covers(&want) { Ok(lengths_detail(want)) } else { Err(format!("every cycle length 3..={}", k + 2)) }
        }
        Statement::EvenCycles { k } => {
            let want: Vec<usize> = (2..=k + 1).map(|i| 2 * i).collect();
            if covers(&want) { Ok(lengths_detail(want)) } else { Err(format!("every even cycle length 4..={}", 2 * k + 2)) }
        }
        Statement::ConsecutiveEven { k } | Statement::ConsecutiveEvenConjecture { k } => {
            match consecutive_even_starts(spec, k).next() {
                Some(m) => Ok(lengths_detail((0..k).map(|i| m + 2 * i).collect())),
                None => Err(format!("{k} consecutive even cycle lengths")),
            }
        }
        Statement::MantelStrengthening => {
            let want: Vec<usize> = (3..=n / 2 + 2).collect();
            if covers(&want) { Ok(lengths_detail(want)) } else { Err(format!("every cycle length 3..={}", n / 2 + 2)) }
        }
        Statement::ErdosGallai { c } | Statement::Kopylov { c } => match spec.circumference() {
            Some(l) if l >= c => Ok(Detail::LongCycle { length: l, cycle: spec.witnesses[&l].clone() }),
            _ => Err(format!("a cycle of length at least {c}")),
        },
        Statement::Brandt => {
            let top = spec.circumference().unwrap_or(2);
            let want: Vec<usize> = (3..=top).collect();
            if covers(&want) { Ok(lengths_detail(want)) } else { Err(format!("every cycle length 3..={top}")) }
        }
        Statement::Mantel => {
            if spec.contains(3) { Ok(lengths_detail(vec![3])) } else { Err("a triangle".into()) }
        }
    })
}

/// Verdict for `statement` on `g` using a precomputed spectrum of `g`.
pub(crate) fn judge(statement: Statement, g: &Graph, spec: &CycleSpectrum) -> Result<Verdict> {
    if let Some(detail) = hypothesis(statement, g)? {
        return Ok(Verdict { statement, outcome: Outcome::SkipHypothesis, detail });
    }
    let (outcome, detail) = match conclusion(statement, g, spec)? {
        Ok(d) => (Outcome::PassWitness, d),
        Err(requirement) => {
            let labels = exceptional_labels(statement, g)?;
            if labels.is_empty() {
                (Outcome::FailCounterexample, Detail::Missing { requirement, spectrum: spec.lengths.clone() })
            } else {
                (Outcome::PassExtremal, Detail::Labels { labels })
            }
        }
    };
    Ok(Verdict { statement, outcome, detail })
}

/// Checks `statement` on `g`.
pub fn verify(statement: Statement, g: &Graph) -> Result<Verdict> {
    if let Some(detail) = hypothesis(statement, g)? {
        return Ok(Verdict { statement, outcome: Outcome::SkipHypothesis, detail });
    }
    judge(statement, g, &cycle_spectrum(g))
}

/// `k` admissible cycles above the threshold `f(n,k)` unless `g` is extremal.
pub fn verify_admissible(g: &Graph, k: usize) -> Result<Verdict> {
    verify(Statement::Admissible { k }, g)
}

/// Every length `3..=k+2` on `k+2 <= n <= 2k+1` vertices, with its exception list.
pub fn verify_short_cycles(g: &Graph, k: usize) -> Result<Verdict> {
    verify(Statement::ShortCycles { k }, g)
}

/// Every even length `4..=2k+2` on `2k+2 <= n <= 4k+1` vertices.
pub fn verify_even_cycles(g: &Graph, k: usize) -> Result<Verdict> {
    verify(Statement::EvenCycles { k }, g)
}

/// `k` consecutive even lengths once `e >= 2k(n-k-1/2)`.
pub fn verify_consecutive_even(g: &Graph, k: usize) -> Result<Verdict> {
    verify(Statement::ConsecutiveEven { k }, g)
}

/// Every length `3..=⌊n/2⌋+2` once `e >= ⌊n²/4⌋`.
pub fn verify_mantel_strengthening(g: &Graph) -> Result<Verdict> {
    verify(Statement::MantelStrengthening, g)
}

/// One of the classical statements: Erdős–Gallai, Kopylov, Brandt, or Mantel.
pub fn verify_classical(statement: Statement, g: &Graph) -> Result<Verdict> {
    match statement {
        Statement::ErdosGallai { .. } | Statement::Kopylov { .. } | Statement::Brandt | Statement::Mantel => verify(statement, g),
        other => domain(format!("{other} is not a classical statement")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extremal::{cliques_at_vertex, clique_join_empty};
    use crate::named;

    fn k(n: usize) -> Graph {
        Graph::complete(n).unwrap()
    }

    #[test]
    fn admissible_examples() {
        let v = verify_admissible(&k(6), 3).unwrap();
        assert_eq!(v.outcome, Outcome::PassWitness);
        match &v.detail {
            Detail::Progression { witness, .. } => assert_eq!(witness.witness_lengths, vec![3, 4, 5]),
            d => panic!("unexpected {d:?}"),
        }
        assert!(v.revalidate(&k(6)).unwrap());

        let k37 = Graph::complete_bipartite(3, 7).unwrap();
        let v = verify_admissible(&k37, 3).unwrap();
        assert_eq!(v.outcome, Outcome::PassExtremal);
        assert_eq!(v.detail, Detail::Labels { labels: vec![FamilyLabel::CompleteBipartite] });
        assert!(v.revalidate(&k37).unwrap());

        let c5 = Graph::cycle(5).unwrap();
        let v = verify_admissible(&c5, 2).unwrap();
        assert_eq!(v.outcome, Outcome::SkipHypothesis);
        assert_eq!(v.detail, Detail::Hypothesis { edges: 5, required_edges: Some(6), unmet: "too few edges".into() });

        // Too small to qualify is a skip, not an error.
        assert_eq!(verify_admissible(&k(3), 3).unwrap().outcome, Outcome::SkipHypothesis);
    }

    #[test]
    fn short_cycle_examples() {
        let bowtie = named::bowtie();
        let v = verify_short_cycles(&bowtie, 2).unwrap();
        assert_eq!(v.outcome, Outcome::PassExtremal);
        assert_eq!(v.detail, Detail::Labels { labels: vec![FamilyLabel::ShortCycleException, FamilyLabel::K1JoinTwoCliques] });
        assert_eq!(verify_short_cycles(&k(7), 5).unwrap().outcome, Outcome::PassWitness);
        let h = clique_join_empty(2, 4).unwrap();
        let v = verify_short_cycles(&h, 4).unwrap();
        assert_eq!(v.outcome, Outcome::SkipHypothesis);
        assert_eq!(v.detail, Detail::Hypothesis { edges: 9, required_edges: Some(11), unmet: "too few edges".into() });
        assert!(matches!(verify_short_cycles(&k(8), 3), Err(Error::Domain(_))));
        assert!(matches!(verify_short_cycles(&k(4), 3), Err(Error::Domain(_))));
    }

    #[test]
    fn even_cycle_examples() {
        let paw = k1_join_two_cliques(2, 1).unwrap();
        let v = verify_even_cycles(&paw, 1).unwrap();
        assert_eq!(v.outcome, Outcome::PassExtremal);
        assert_eq!(verify_even_cycles(&k(6), 2).unwrap().outcome, Outcome::PassWitness);
        let v = verify_even_cycles(&Graph::cycle(6).unwrap(), 2).unwrap();
        assert_eq!(v.outcome, Outcome::SkipHypothesis);
        assert!(verify_even_cycles(&k(10), 2).is_err());
    }

    #[test]
    fn consecutive_even_examples() {
        let v = verify_consecutive_even(&k(6), 2).unwrap();
        assert_eq!(v.outcome, Outcome::PassWitness);
        assert_eq!(v.detail.without_cycles(), Detail::Lengths { lengths: vec![4, 6], cycles: vec![] });
        assert_eq!(Statement::ConsecutiveEven { k: 2 }.required_edges(6), Some(14));
        let k33 = Graph::complete_bipartite(3, 3).unwrap();
        assert_eq!(Statement::ConsecutiveEven { k: 1 }.required_edges(6), Some(9));
        assert_eq!(verify_consecutive_even(&k33, 1).unwrap().outcome, Outcome::PassWitness);
        assert_eq!(verify_consecutive_even(&Graph::cycle(8).unwrap(), 1).unwrap().outcome, Outcome::SkipHypothesis);
        assert!(verify_consecutive_even(&k(5), 2).is_err());
    }

    #[test]
    fn mantel_strengthening_examples() {
        assert_eq!(verify_mantel_strengthening(&clique_join_empty(2, 4).unwrap()).unwrap().outcome, Outcome::PassExtremal);
        let c4 = Graph::complete_bipartite(2, 2).unwrap();
        assert_eq!(verify_mantel_strengthening(&c4).unwrap().outcome, Outcome::PassExtremal);
        let v = verify_mantel_strengthening(&k(7)).unwrap();
        assert_eq!(v.outcome, Outcome::PassWitness);
        assert_eq!(v.detail.without_cycles(), Detail::Lengths { lengths: vec![3, 4, 5], cycles: vec![] });
    }

    #[test]
    fn classical_examples() {
        let eg = Statement::ErdosGallai { c: 4 };
        let friendship = cliques_at_vertex(3, 2).unwrap();
        assert_eq!(friendship.size(), 9);
        assert_eq!(verify_classical(eg, &friendship).unwrap().outcome, Outcome::PassExtremal);
        let v = verify_classical(Statement::ErdosGallai { c: 5 }, &cliques_at_vertex(2, 3).unwrap()).unwrap();
        assert_eq!(v.outcome, Outcome::PassExtremal);
        let three_triangles = cliques_at_vertex(3, 3).unwrap();
        assert_eq!(three_triangles.size(), 18);
        assert_eq!(verify_classical(Statement::ErdosGallai { c: 5 }, &three_triangles).unwrap().outcome, Outcome::PassExtremal);
        assert_eq!(verify_classical(Statement::ErdosGallai { c: 4 }, &three_triangles).unwrap().outcome, Outcome::PassWitness);
        let v = verify_classical(Statement::ErdosGallai { c: 5 }, &Graph::cycle(7).unwrap()).unwrap();
        assert_eq!(v.outcome, Outcome::SkipHypothesis);

        let h = construct_h(8, 6, 2).unwrap().graph;
        let v = verify_classical(Statement::Kopylov { c: 6 }, &h).unwrap();
        assert_eq!(v.outcome, Outcome::PassExtremal);
        assert!(matches!(verify_classical(Statement::Kopylov { c: 5 }, &named::bowtie()), Err(Error::Domain(_))));

        let k33 = Graph::complete_bipartite(3, 3).unwrap();
        assert_eq!(verify_classical(Statement::Mantel, &k33).unwrap().outcome, Outcome::PassExtremal);
        assert_eq!(verify_classical(Statement::Brandt, &k33).unwrap().outcome, Outcome::SkipHypothesis);
        assert_eq!(verify_classical(Statement::Brandt, &k(6)).unwrap().outcome, Outcome::PassWitness);
        assert!(verify_classical(Statement::Admissible { k: 2 }, &k(6)).is_err());
    }

    #[test]
    fn erdos_gallai_block_chain_is_reported() {
        // Three triangles in a row have (c-1)(n-1)/2 edges for c = 4 and no
        // 4-cycle, but are not K_1 ∨ 3K_2: the engine reports them as a failure
        // of the stated exception list.
        let g = named::triangle_chain();
        let v = verify_classical(Statement::ErdosGallai { c: 4 }, &g).unwrap();
        assert_eq!(v.outcome, Outcome::FailCounterexample);
        assert!(v.revalidate(&g).unwrap());
    }

    #[test]
    fn conjecture_at_equality() {
        // Two K_5 blocks sharing a vertex: (2k+1)(n-1)/2 edges with k = 2 and no 4,6 pair.
        let g = k1_join_two_cliques(4, 4).unwrap();
        let v = verify(Statement::ConsecutiveEvenConjecture { k: 2 }, &g).unwrap();
        assert_eq!(v.outcome, Outcome::PassExtremal);
        assert_eq!(v.detail, Detail::Labels { labels: vec![FamilyLabel::CliqueBlocks] });
    }

    #[test]
    fn statement_ids() {
        for id in STATEMENT_IDS {
            let s = Statement::from_id(id, Some(2), Some(5)).unwrap();
            assert_eq!(s.id(), id);
        }
        assert!(Statement::from_id("t1", None, None).is_err());
        assert!(Statement::from_id("t1", Some(0), None).is_err());
        assert!(Statement::from_id("bogus", Some(1), None).is_err());
        assert_eq!("t1:3".parse::<Statement>().unwrap(), Statement::Admissible { k: 3 });
        assert_eq!("kopylov:6".parse::<Statement>().unwrap(), Statement::Kopylov { c: 6 });
        assert_eq!("brandt".parse::<Statement>().unwrap(), Statement::Brandt);
    }

    #[test]
    fn revalidation_rejects_forged_witness() {
        let g = Graph::cycle(6).unwrap();
        let forged = Verdict {
            statement: Statement::Mantel,
            outcome: Outcome::PassWitness,
            detail: Detail::Lengths { lengths: vec![3], cycles: vec![vec![0, 1, 2]] },
        };
        assert!(!forged.revalidate(&g).unwrap());
    }
}
