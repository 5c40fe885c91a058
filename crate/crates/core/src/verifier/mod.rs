//! A certifying checker for the `⌈n/2⌉` line bound.
//!
//! [`verify_theorem`] runs the whole counting argument on a concrete point
//! set. Every intermediate conclusion is checked at runtime; a failed check
//! becomes an [`Anomaly`] in the report instead of a panic, so a
//! counterexample to any step is reproducible from its input file.

mod audit;
mod isolated;
mod normalize;

use std::collections::BTreeSet;

use serde::Serialize;

pub use audit::{build_f, degree_audit, DegreeAudit, FImage, FMap};
pub use isolated::{
    classify_placement, find_d1_d2, is_d1_witness, is_d2_witness, is_special, isolated_witness,
    quadrant_census, Analysis, Frame, IsolatedReport, LemmaUsed, Placement, QuadrantSet,
};
pub use normalize::{normalize, reflection_normalize, right_corners, special_vertices};

use crate::anomaly::{Anomaly, AnomalyKind};
use crate::arrows::{
    build_graph_from, coinciding_pairs, nesting_check, pruned_graph, CoincidingPair,
};
use crate::error::{Error, Result};
use crate::geometry::{MetricKind, PointSet, Symmetry};
use crate::lines::{enumerate_lines, half_ceil};

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub n: usize,
    /// A universal line exists; the bound does not apply and the rest of
    /// the pipeline is skipped.
    pub universal: bool,
    /// The set was moved by a grid symmetry before the analysis.
    pub normalized: bool,
    pub symmetry: Symmetry,
    pub distinct_line_count: usize,
    pub required_lines: usize,
    pub isolated: Vec<usize>,
    pub isolated_reports: Vec<IsolatedReport>,
    pub f: FMap,
    pub coinciding: Vec<CoincidingPair>,
    pub audit: Option<DegreeAudit>,
    pub bound_holds: bool,
    pub anomalies: Vec<Anomaly>,
}

impl VerificationReport {
    /// Bound holds (or a universal line exists) and no check failed.
    pub fn is_clean(&self) -> bool {
        (self.universal || self.bound_holds) && self.anomalies.is_empty()
    }

    pub fn anomaly_kinds(&self) -> BTreeSet<AnomalyKind> {
        self.anomalies.iter().map(|a| a.kind).collect()
    }
}

pub fn verify_theorem(set: &PointSet) -> Result<VerificationReport> {
    let n = set.len();
    if n < 2 {
        return Err(Error::TooFewPoints { needed: 2, got: n });
    }
    let catalog = enumerate_lines(set, MetricKind::L1)?;
    let mut report = VerificationReport {
        n,
        universal: catalog.has_universal(),
        normalized: false,
        symmetry: Symmetry::Identity,
        distinct_line_count: catalog.len(),
        required_lines: half_ceil(n),
        isolated: Vec::new(),
        isolated_reports: Vec::new(),
        f: FMap::new(),
        coinciding: Vec::new(),
        audit: None,
        bound_holds: catalog.len() >= half_ceil(n),
        anomalies: Vec::new(),
    };
    if report.universal {
        return Ok(report);
    }
    if !report.bound_holds {
        report.anomalies.push(Anomaly::new(
            AnomalyKind::Bound,
            vec![],
            format!("{} lines < ceil(n/2) = {}", catalog.len(), half_ceil(n)),
        ));
    }

    let (work, symmetry) = match normalize(set) {
        Ok(pair) => pair,
        Err(anomaly) => {
            report.anomalies.push(anomaly);
            return Ok(report);
        }
    };
    let normalized = symmetry != Symmetry::Identity;
    report.normalized = normalized;
    report.symmetry = symmetry;
    let work_catalog = if normalized {
        let c = enumerate_lines(&work, MetricKind::L1)?;
        if c != catalog {
            report.anomalies.push(Anomaly::new(
                AnomalyKind::UniversalStructure,
                vec![],
                "normalization changed the line catalog",
            ));
        }
        c
    } else {
        catalog
    };

    let graph = build_graph_from(&work, &work_catalog);
    report.anomalies.extend(graph.skipped.iter().cloned());

    let specials = special_vertices(&work);
    report.isolated = graph
        .isolated()
        .into_iter()
        .filter(|a| !specials.contains(a))
        .collect();

    let analysis = Analysis::new(&work, &graph, &work_catalog);
    for &a in &report.isolated {
        match isolated_witness(&analysis, a) {
            Ok(r) => report.isolated_reports.push(r),
            Err(anomaly) => report.anomalies.push(anomaly),
        }
    }
    let (f, f_anomalies) = build_f(&report.isolated_reports, &report.isolated);
    report.f = f;
    report.anomalies.extend(f_anomalies);

    let scan = coinciding_pairs(&work, &graph);
    report.anomalies.extend(scan.violations);
    if scan.pairs.len() >= 2 && !nesting_check(&work, &scan.pairs) {
        report.anomalies.push(Anomaly::new(
            AnomalyKind::Nesting,
            scan.pairs
                .iter()
                .flat_map(|p| [p.blue.tail, p.red.tail])
                .collect(),
            "coinciding rectangles do not cross in their middle parts",
        ));
    }
    let pruned = pruned_graph(&graph, &scan.pairs);
    let distinct: BTreeSet<&Vec<usize>> = pruned.lines.iter().collect();
    if distinct.len() != pruned.edge_count() {
        report.anomalies.push(Anomaly::new(
            AnomalyKind::Rectangle,
            vec![],
            "surviving arrows do not induce pairwise distinct lines",
        ));
    }
    if pruned.edge_count() > report.distinct_line_count {
        report.anomalies.push(Anomaly::new(
            AnomalyKind::Counting,
            vec![],
            "more surviving arrows than distinct lines",
        ));
    }

    let (audit, audit_anomalies) = degree_audit(n, &graph, &pruned, &report.f, &scan.pairs);
    report.anomalies.extend(audit_anomalies);
    report.audit = Some(audit);
    report.coinciding = scan.pairs;
    report.anomalies.sort();
    Ok(report)
}
