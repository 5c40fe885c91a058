//! The mapping `f` and the degree count.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::anomaly::{Anomaly, AnomalyKind};
use crate::arrows::{ArrowGraph, CoincidingPair, Color};
use crate::lines::half_ceil;

use super::isolated::IsolatedReport;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct FImage {
    pub s: usize,
    pub color: Color,
}

/// Isolated vertex `a` ↦ `(s_a, color)`.
pub type FMap = BTreeMap<usize, FImage>;

/// Builds `f` from the witness reports and checks that it maps the isolated
/// set `isolated` injectively into its complement.
pub fn build_f(reports: &[IsolatedReport], isolated: &[usize]) -> (FMap, Vec<Anomaly>) {
    let mut map = FMap::new();
    let mut anomalies = Vec::new();
    let mut preimage: BTreeMap<FImage, usize> = BTreeMap::new();
    for r in reports {
        let image = FImage {
            s: r.s,
            color: r.color,
        };
        if isolated.contains(&r.s) {
            anomalies.push(Anomaly::new(
                AnomalyKind::Injectivity,
                vec![r.a, r.s],
                format!("f({}) = {} lies in the isolated set", r.a, r.s),
            ));
        }
        if let Some(other) = preimage.insert(image, r.a) {
            anomalies.push(Anomaly::new(
                AnomalyKind::Injectivity,
                vec![other, r.a, r.s],
                format!("f({other}) = f({}) = ({}, {:?})", r.a, r.s, r.color),
            ));
        }
        map.insert(r.a, image);
    }
    (map, anomalies)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeAudit {
    /// Number of isolated vertices.
    pub c: usize,
    /// Number of coinciding blue/red pairs.
    pub k: usize,
    /// Isolated vertices and their images under `f`.
    pub a_set: Vec<usize>,
    /// Tails of coinciding arrows (blue and red).
    pub b_set: Vec<usize>,
    /// Everything else.
    pub c_set: Vec<usize>,
    pub a_b_overlap: Vec<usize>,
    /// In-degree summed over `a_set`; each `s_a` receives its two witness arrows.
    pub a_in_degree_sum: usize,
    /// Out-degree summed over `a_set`, as the displayed chain writes it.
    pub a_out_degree_sum: usize,
    pub b_out_degree_sum: usize,
    pub c_degree_sum: usize,
    pub edge_count: usize,
    pub pruned_edge_count: usize,
    /// `2|E(G)| ≥ n + 2k`
    pub inequality_holds: bool,
    /// `|E(G')| ≥ ⌈n/2⌉`
    pub pruned_bound_holds: bool,
    /// Whether the stronger `|E(G')| ≥ n` happens to hold; informational.
    pub strong_claim_holds: bool,
}

pub fn degree_audit(
    n: usize,
    graph: &ArrowGraph,
    pruned: &ArrowGraph,
    fmap: &FMap,
    coinciding: &[CoincidingPair],
) -> (DegreeAudit, Vec<Anomaly>) {
    let mut anomalies = Vec::new();
    let c = fmap.len();
    let k = coinciding.len();

    let a_set: BTreeSet<usize> = fmap.iter().flat_map(|(&a, img)| [a, img.s]).collect();
    let b_set: BTreeSet<usize> = coinciding
        .iter()
        .flat_map(|p| [p.blue.tail, p.red.tail])
        .collect();
    let c_set: Vec<usize> = (0..n)
        .filter(|v| !a_set.contains(v) && !b_set.contains(v))
        .collect();
    let a_b_overlap: Vec<usize> = a_set.intersection(&b_set).copied().collect();

    let a_in_degree_sum: usize = a_set.iter().map(|&v| graph.in_degree[v]).sum();
    let a_out_degree_sum: usize = a_set.iter().map(|&v| graph.out_degree[v]).sum();
    let b_out_degree_sum: usize = b_set.iter().map(|&v| graph.out_degree[v]).sum();
    let c_degree_sum: usize = c_set.iter().map(|&v| graph.degree(v)).sum();

    if a_in_degree_sum < 2 * c {
        anomalies.push(Anomaly::new(
            AnomalyKind::Counting,
            a_set.iter().copied().collect(),
            format!("in-degree over A is {a_in_degree_sum} < 2c = {}", 2 * c),
        ));
    }
    for p in coinciding {
        for tail in [p.blue.tail, p.red.tail] {
            if graph.out_degree[tail] < 2 {
                anomalies.push(Anomaly::new(
                    AnomalyKind::CountingLemma,
                    vec![tail],
                    format!(
                        "tail {tail} of a coinciding pair has out-degree {}",
                        graph.out_degree[tail]
                    ),
                ));
            }
        }
    }
    if b_out_degree_sum < 2 * b_set.len() {
        anomalies.push(Anomaly::new(
            AnomalyKind::Counting,
            b_set.iter().copied().collect(),
            format!(
                "out-degree over B is {b_out_degree_sum} < {}",
                2 * b_set.len()
            ),
        ));
    }
    let bare: Vec<usize> = c_set
        .iter()
        .copied()
        .filter(|&v| graph.degree(v) == 0)
        .collect();
    if !bare.is_empty() {
        anomalies.push(Anomaly::new(
            AnomalyKind::Counting,
            bare,
            "vertices outside A and B without any arrow",
        ));
    }

    let edge_count = graph.edge_count();
    let pruned_edge_count = pruned.edge_count();
    let inequality_holds = 2 * edge_count >= n + 2 * k;
    if !inequality_holds {
        anomalies.push(Anomaly::new(
            AnomalyKind::Counting,
            vec![],
            format!("2|E(G)| = {} < n + 2k = {}", 2 * edge_count, n + 2 * k),
        ));
    }
    let pruned_bound_holds = pruned_edge_count >= half_ceil(n);
    if !pruned_bound_holds {
        anomalies.push(Anomaly::new(
            AnomalyKind::Counting,
            vec![],
            format!(
                "|E(G')| = {pruned_edge_count} < ceil(n/2) = {}",
                half_ceil(n)
            ),
        ));
    }

    let audit = DegreeAudit {
        c,
        k,
        a_set: a_set.into_iter().collect(),
        b_set: b_set.into_iter().collect(),
        c_set,
        a_b_overlap,
        a_in_degree_sum,
        a_out_degree_sum,
        b_out_degree_sum,
        c_degree_sum,
        edge_count,
        pruned_edge_count,
        inequality_holds,
        pruned_bound_holds,
        strong_claim_holds: pruned_edge_count >= n,
    };
    (audit, anomalies)
}
