use std::collections::BTreeMap;
use std::fmt::Write;

use rayon::prelude::*;
use serde::Serialize;

use super::{alpha2_swap, alpha3_swap_exists, connected_graphs_between};
use crate::certificate::verify_certificate;
use crate::error::Result;
use crate::exact::{dd_m_exact, DEFAULT_NODE_BUDGET};
use crate::families::doubled_subdivided_triangle;
use crate::graph::Graph;
use crate::params::{domination_number, independence_number};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScanRecord {
    /// graph6 encoding of the canonical labeling.
    pub id: String,
    pub n: usize,
    pub alpha: usize,
    pub gamma: usize,
    /// Swap number, `"infinity"`, or `"?"` when the budget ran out.
    pub dd_m: String,
    pub certificate_size: Option<usize>,
    pub note: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub id: String,
    pub claim: String,
    pub detail: String,
}

/// Largest order of a swap-set-free connected graph seen for one `α`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ThresholdRow {
    pub alpha: usize,
    pub largest_n: usize,
    pub example: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ScanReport {
    pub n_range: (usize, usize),
    pub filter: String,
    pub records: Vec<ScanRecord>,
    pub counterexamples: Vec<Counterexample>,
    pub thresholds: Vec<ThresholdRow>,
}

impl ScanReport {
    pub fn to_tsv(&self) -> String {
        let mut out = String::from("id\tn\talpha\tgamma\tdd_m\tcertificate_size\tnote\n");
        for r in &self.records {
            let size = r.certificate_size.map_or("-".into(), |s| s.to_string());
            let _ = writeln!(
                out,
                "{}\t{}\t{}\t{}\t{}\t{}\t{}",
                r.id, r.n, r.alpha, r.gamma, r.dd_m, size, r.note
            );
        }
        out
    }

    pub fn thresholds_tsv(&self) -> String {
        let mut out = String::from("alpha\tlargest_n_without_swap_set\texample\n");
        for t in &self.thresholds {
            let _ = writeln!(out, "{}\t{}\t{}", t.alpha, t.largest_n, t.example);
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn merge(mut self, other: ScanReport) -> ScanReport {
        self.records.extend(other.records);
        self.counterexamples.extend(other.counterexamples);
        self.thresholds.extend(other.thresholds);
        self
    }
}

struct Analysis {
    record: ScanRecord,
    failures: Vec<Counterexample>,
}

fn base_record(g: &Graph, note: &str) -> Result<ScanRecord> {
    let r = dd_m_exact(g, DEFAULT_NODE_BUDGET)?;
    Ok(ScanRecord {
        id: g.to_graph6(),
        n: g.n(),
        alpha: independence_number(g)?,
        gamma: domination_number(g)?,
        dd_m: r.display_value(),
        certificate_size: r.k,
        note: note.into(),
    })
}

fn failure(id: &str, claim: &str, detail: impl Into<String>) -> Counterexample {
    Counterexample {
        id: id.into(),
        claim: claim.into(),
        detail: detail.into(),
    }
}

fn run<F>(graphs: Vec<Graph>, n_range: (usize, usize), filter: &str, analyze: F) -> Result<ScanReport>
where
    F: Fn(&Graph) -> Result<Option<Analysis>> + Sync,
{
    let results: Vec<Option<Analysis>> = graphs.par_iter().map(&analyze).collect::<Result<_>>()?;
    let mut report = ScanReport {
        n_range,
        filter: filter.into(),
        ..ScanReport::default()
    };
    for a in results.into_iter().flatten() {
        report.records.push(a.record);
        report.counterexamples.extend(a.failures);
    }
    Ok(report)
}

/// Every connected graph with `α = 2` and `4 ≤ n ≤ scope_n` gets a verified
/// certificate of size at most 2.
pub fn alpha2_scan(scope_n: usize) -> Result<ScanReport> {
    let graphs = connected_graphs_between(4, scope_n)?;
    run(graphs, (4, scope_n), "connected, alpha = 2", |g| {
        if independence_number(g)? != 2 {
            return Ok(None);
        }
        let mut record = base_record(g, "")?;
        let mut failures = Vec::new();
        match alpha2_swap(g) {
            Ok(c) if verify_certificate(g, &c) && c.size() <= 2 => {
                record.note = format!("constructed size {}", c.size());
            }
            Ok(c) => failures.push(failure(
                &record.id,
                "alpha = 2 gives swap number at most 2",
                format!("bad certificate {}", c.to_json()),
            )),
            Err(e) => failures.push(failure(
                &record.id,
                "alpha = 2 gives swap number at most 2",
                e.to_string(),
            )),
        }
        Ok(Some(Analysis { record, failures }))
    })
}

/// For connected graphs with `α = 3` up to `scope_n` vertices: every one
/// with a swap set has swap number at most 3, and every one with at least
/// six vertices has a swap set found by `alpha3_swap_exists`.
pub fn alpha3_bound_check(scope_n: usize) -> Result<ScanReport> {
    let graphs = connected_graphs_between(1, scope_n)?;
    run(graphs, (1, scope_n), "connected, alpha = 3", |g| {
        if independence_number(g)? != 3 {
            return Ok(None);
        }
        let mut record = base_record(g, "")?;
        let mut failures = Vec::new();
        if record.certificate_size.is_some_and(|k| k > 3) {
            failures.push(failure(
                &record.id,
                "alpha = 3 with a swap set gives swap number at most 3",
                format!("swap number {}", record.dd_m),
            ));
        }
        if g.n() >= 6 {
            match alpha3_swap_exists(g) {
                Ok(r) if verify_certificate(g, &r.certificate) => {
                    record.note = format!("{:?}", r.path).to_lowercase();
                }
                Ok(r) => failures.push(failure(
                    &record.id,
                    "alpha = 3 and n >= 6 gives a swap set",
                    format!("bad certificate {}", r.certificate.to_json()),
                )),
                Err(e) => failures.push(failure(
                    &record.id,
                    "alpha = 3 and n >= 6 gives a swap set",
                    e.to_string(),
                )),
            }
        }
        Ok(Some(Analysis { record, failures }))
    })
}

/// Swap number against α on every connected graph up to `scope_n`
/// vertices, plus the largest swap-set-free order seen for each α. The
/// nine-vertex doubled, subdivided triangle is always included.
pub fn conjecture_scan(scope_n: usize) -> Result<ScanReport> {
    let mut graphs = connected_graphs_between(1, scope_n)?;
    let named = doubled_subdivided_triangle();
    let named_id = named.to_graph6();
    graphs.push(named);
    let mut report = run(graphs, (1, scope_n), "connected", |g| {
        let mut record = base_record(g, "")?;
        if g.to_graph6() == named_id {
            record.note = "doubled subdivided triangle".into();
        }
        let mut failures = Vec::new();
        if record.certificate_size.is_some_and(|k| k > record.alpha) {
            failures.push(failure(
                &record.id,
                "swap number at most alpha",
                format!("swap number {} > alpha {}", record.dd_m, record.alpha),
            ));
        }
        Ok(Some(Analysis { record, failures }))
    })?;
    let mut largest: BTreeMap<usize, (usize, String)> = BTreeMap::new();
    for r in report.records.iter().filter(|r| r.dd_m == "infinity" && r.n > 1) {
        let entry = largest.entry(r.alpha).or_insert((0, String::new()));
        if r.n > entry.0 {
            *entry = (r.n, r.id.clone());
        }
    }
    report.thresholds = largest
        .into_iter()
        .map(|(alpha, (largest_n, example))| ThresholdRow {
            alpha,
            largest_n,
            example,
        })
        .collect();
    Ok(report)
}
