//! The hat graph of a source, projections of truncations into it, and
//! connectivity checks for truncations.

use std::collections::VecDeque;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{edge_connectivity, vertex_connectivity, EdgeId, Multigraph, Vertex};
use crate::report::VerificationReport;
use crate::truncation::{assemble, excise, complete_truncation, ConstituentAssignment, LabeledMatching, Truncation};

/// One vertex per matching edge, adjacent when the label sets meet. For a
/// loopless source this is its line graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HatGraph {
    pub graph: Multigraph,
    /// Endpoint labels of each matching edge.
    pub labels: Vec<[Vertex; 2]>,
}

pub fn hat_graph(lm: &LabeledMatching) -> HatGraph {
    let labels: Vec<[Vertex; 2]> = (0..lm.size())
        .map(|e| {
            let [a, b] = lm.ends(e);
            [lm.label(a), lm.label(b)]
        })
        .collect();
    let mut graph = Multigraph::new(labels.len());
    for a in 0..labels.len() {
        for b in a + 1..labels.len() {
            if labels[a].iter().any(|l| labels[b].contains(l)) {
                graph.add_edge(a, b).expect("in range");
            }
        }
    }
    HatGraph { graph, labels }
}

/// Spanning subgraph of the hat graph with an edge between two matching
/// edges whenever Y has an edge between their ends.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Projection {
    pub graph: Multigraph,
}

/// Computed from the edges of Y and its cluster map alone.
pub fn project(t: &Truncation) -> Projection {
    let y = t.graph();
    let mut edge_of = vec![0; y.order()];
    for (i, &e) in t.matching_edges().iter().enumerate() {
        let (a, b) = y.endpoints(e);
        edge_of[a] = i;
        edge_of[b] = i;
    }
    let m = t.matching_edges().len();
    let mut graph = Multigraph::new(m);
    for (e, &(a, b)) in y.edges().iter().enumerate() {
        if t.is_matching_edge(e) {
            continue;
        }
        let (p, q) = (edge_of[a].min(edge_of[b]), edge_of[a].max(edge_of[b]));
        if p != q && !graph.adjacent(p, q) {
            graph.add_edge(p, q).expect("in range");
        }
    }
    Projection { graph }
}

/// Y is connected exactly when its projection is.
pub fn check_connectedness_theorem(t: &Truncation, subject: &str) -> VerificationReport {
    let y_connected = t.graph().is_connected();
    let projection = project(t);
    let p_connected = projection.graph.is_connected();
    VerificationReport::new("connectedness-via-projection", subject)
        .fact("truncation_connected", y_connected)
        .fact("projection_connected", p_connected)
        .require(y_connected == p_connected, &projection)
}

/// A truncation that is a tree: the constituents realise a breadth-first
/// spanning tree of the hat graph, each hat edge through the lowest shared
/// label.
pub fn spanning_tree_truncation(x: &Multigraph) -> Result<Truncation> {
    x.require_loopless()?;
    if !x.is_connected() {
        return Err(Error::Disconnected);
    }
    let lm = excise(x)?;
    let hat = hat_graph(&lm);
    let m = lm.size();
    let mut edges: Vec<Vec<(Vertex, Vertex)>> = vec![Vec::new(); x.order()];
    let mut seen = vec![false; m];
    let mut queue = VecDeque::new();
    if m > 0 {
        seen[0] = true;
        queue.push_back(0);
    }
    while let Some(a) = queue.pop_front() {
        for b in hat.graph.neighbors(a) {
            if seen[b] {
                continue;
            }
            seen[b] = true;
            queue.push_back(b);
            let v = *hat.labels[a]
                .iter()
                .filter(|l| hat.labels[b].contains(l))
                .min()
                .expect("adjacent hat vertices share a label");
            let (xa, _) = lm.end_at(a, v).expect("labelled");
            let (xb, _) = lm.end_at(b, v).expect("labelled");
            edges[v].push((xa, xb));
        }
    }
    let ca = ConstituentAssignment::from_cluster_edges(&lm, &edges)?;
    assemble(lm, ca)
}

/// Edge connectivity never grows under truncation.
pub fn check_edge_connectivity_bound(t: &Truncation, subject: &str) -> VerificationReport {
    let report = VerificationReport::new("edge-connectivity-bound", subject);
    let x = t.source();
    if x.order() < 2 {
        return report.skipped("source has fewer than two vertices");
    }
    let kx = edge_connectivity(x).expect("order checked");
    let ky = edge_connectivity(t.graph()).expect("order at least two");
    report
        .fact("source_edge_connectivity", kx)
        .fact("truncation_edge_connectivity", ky)
        .require(ky <= kx, (kx, ky))
}

/// The complete truncation keeps edge connectivity and vertex connectivity
/// of at least 2.
pub fn check_complete_truncation_connectivity(x: &Multigraph, subject: &str) -> Result<VerificationReport> {
    let report = VerificationReport::new("complete-truncation-connectivity", subject);
    if x.order() < 2 {
        return Ok(report.skipped("source has fewer than two vertices"));
    }
    let t = complete_truncation(x)?;
    let (kx_edge, kx_vertex) = (edge_connectivity(x)?, vertex_connectivity(x)?);
    let (ky_edge, ky_vertex) = (edge_connectivity(t.graph())?, vertex_connectivity(t.graph())?);
    let report = report
        .fact("source_edge_connectivity", kx_edge)
        .fact("source_connectivity", kx_vertex)
        .fact("truncation_edge_connectivity", ky_edge)
        .fact("truncation_connectivity", ky_vertex);
    if kx_edge < 2 {
        return Ok(report.skipped("source is not 2-edge-connected"));
    }
    let edge_ok = ky_edge >= kx_edge;
    let vertex_ok = kx_vertex < 2 || ky_vertex >= kx_vertex;
    Ok(report.require(edge_ok && vertex_ok, (kx_edge, kx_vertex, ky_edge, ky_vertex)))
}

/// For a k-regular k-edge-connected source, a truncation is
/// k-edge-connected exactly when it is complete. Checked on the complete
/// truncation and on every truncation missing one constituent edge.
pub fn check_regular_completeness_criterion(x: &Multigraph, subject: &str) -> Result<VerificationReport> {
    let report = VerificationReport::new("regular-completeness-criterion", subject);
    let Some(k) = x.regular_valency() else {
        return Ok(report.skipped("source is not regular"));
    };
    if x.order() < 2 || k < 2 || edge_connectivity(x)? != k {
        return Ok(report.skipped("source is not k-edge-connected with k = valency >= 2"));
    }
    let t = complete_truncation(x)?;
    let complete_k = edge_connectivity(t.graph())?;
    let mut report = report.fact("k", k).fact("complete_edge_connectivity", complete_k);
    report = report.require(complete_k >= k, ("complete", complete_k));
    let mut worst: Option<(Vertex, EdgeId, usize)> = None;
    for v in 0..x.order() {
        let c = t.constituent(v);
        for e in 0..c.size() {
            let (reduced, _) = c.without_edges(&[e]);
            let kt = edge_connectivity(t.with_constituent(v, reduced)?.graph())?;
            if worst.is_none_or(|(_, _, w)| kt > w) {
                worst = Some((v, e, kt));
            }
        }
    }
    if let Some((v, e, kt)) = worst {
        report = report
            .fact("max_edge_connectivity_with_edge_removed", kt)
            .require(kt < k, ("incomplete", v, e, kt));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::canonical_form;
    use crate::graph::generators::*;
    use crate::truncation::spanning_path_truncation;

    fn iso(a: &Multigraph, b: &Multigraph) -> bool {
        canonical_form(a).unwrap() == canonical_form(b).unwrap()
    }

    #[test]
    fn hat_examples() {
        assert!(iso(&hat_graph(&excise(&complete(3)).unwrap()).graph, &complete(3)));
        assert!(iso(&hat_graph(&excise(&star(3)).unwrap()).graph, &complete(3)));
        assert!(iso(&hat_graph(&excise(&path(4)).unwrap()).graph, &path(3)));
    }

    #[test]
    fn projection_examples() {
        let t = complete_truncation(&petersen()).unwrap();
        let sorted = |g: &Multigraph| {
            let mut e = g.edges().to_vec();
            e.sort();
            e
        };
        assert_eq!(sorted(&project(&t).graph), sorted(&hat_graph(t.matching()).graph));
        let lm = excise(&complete(4)).unwrap();
        let t = assemble(lm.clone(), ConstituentAssignment::edgeless(&lm)).unwrap();
        assert_eq!(project(&t).graph.size(), 0);
        // each path on a 3-cluster covers two of the three hat edges there
        let t = spanning_path_truncation(&complete(4)).unwrap();
        let p = project(&t).graph;
        assert_eq!(p.size(), 8);
        let hat = hat_graph(t.matching()).graph;
        assert!(p.edges().iter().all(|&(a, b)| hat.adjacent(a, b)));
    }

    #[test]
    fn connectedness_reports() {
        let t = complete_truncation(&complete(4)).unwrap();
        let r = check_connectedness_theorem(&t, "K4");
        assert!(r.passed());
        assert_eq!(r.facts["truncation_connected"], true);
        let lm = excise(&cycle(4)).unwrap();
        let t = assemble(lm.clone(), ConstituentAssignment::edgeless(&lm)).unwrap();
        let r = check_connectedness_theorem(&t, "C4 edgeless");
        assert!(r.passed());
        assert_eq!(r.facts["projection_connected"], false);
    }

    fn is_tree(g: &Multigraph) -> bool {
        g.is_connected() && g.size() + 1 == g.order()
    }

    #[test]
    fn spanning_tree_examples() {
        let t = spanning_tree_truncation(&complete(3)).unwrap();
        assert!(is_tree(t.graph()) && t.graph().order() == 6);
        let t = spanning_tree_truncation(&path(3)).unwrap();
        assert!(iso(t.graph(), &path(4)));
        let t = spanning_tree_truncation(&complete(4)).unwrap();
        assert!(is_tree(t.graph()) && t.graph().order() == 12);
        let two = complete(2).disjoint_union(&complete(2));
        assert_eq!(spanning_tree_truncation(&two).unwrap_err(), Error::Disconnected);
    }

    #[test]
    fn connectivity_checks() {
        let t = spanning_path_truncation(&petersen()).unwrap();
        assert!(check_edge_connectivity_bound(&t, "petersen").passed());
        for x in [complete(4), complete(5), petersen(), prism(3), hypercube(3)] {
            assert!(check_complete_truncation_connectivity(&x, "x").unwrap().passed());
        }
        let r = check_regular_completeness_criterion(&complete(4), "K4").unwrap();
        assert!(r.passed(), "{r:?}");
        let r = check_regular_completeness_criterion(&path(3), "P3").unwrap();
        assert!(!r.passed() && !r.failed());
    }
}
