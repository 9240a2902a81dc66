//! Generalized truncations: excise every edge of a source multigraph into a
//! labeled matching, then insert a constituent graph on each cluster.

mod builders;
mod expand;

pub use builders::{
    complete_truncation, matching_constituent_truncation, random_cohesive_truncation, random_truncation,
    spanning_path_truncation,
};
pub use expand::{expand_walk, expand_walk_with, Expansion, Visit, VisitContext};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Multigraph, Vertex};

/// The matching obtained by excising every edge of the source. Source edge
/// `e` becomes matching vertices `2e` (slot 0) and `2e + 1` (slot 1) unless
/// the matching was imported with other ids.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LabeledMatching {
    source: Multigraph,
    ends: Vec<[Vertex; 2]>,
    labels: Vec<Vertex>,
    clusters: Vec<Vec<Vertex>>,
}

impl LabeledMatching {
    /// Builds a matching from explicit ends and labels. `ends[e]` are the
    /// matching vertices of source edge `e`; `labels[x]` is the source vertex
    /// of matching vertex `x`.
    pub fn from_parts(source_order: usize, ends: Vec<[Vertex; 2]>, labels: Vec<Vertex>) -> Result<Self> {
        if labels.len() != 2 * ends.len() {
            return Err(Error::InvalidMatching(format!(
                "{} labels for {} matching edges",
                labels.len(),
                ends.len()
            )));
        }
        let mut seen = vec![false; labels.len()];
        for pair in &ends {
            for &x in pair {
                if x >= labels.len() {
                    return Err(Error::InvalidMatching(format!("matching vertex {x} out of range")));
                }
                if std::mem::replace(&mut seen[x], true) {
                    return Err(Error::InvalidMatching(format!("matching vertex {x} covered twice")));
                }
            }
        }
        if let Some(&l) = labels.iter().find(|&&l| l >= source_order) {
            return Err(Error::VertexOutOfRange {
                vertex: l,
                order: source_order,
            });
        }
        let mut source = Multigraph::new(source_order);
        for pair in &ends {
            source.add_edge(labels[pair[0]], labels[pair[1]])?;
        }
        if let Some(v) = source.isolated_vertex() {
            return Err(Error::IsolatedVertex(v));
        }
        let mut clusters = vec![Vec::new(); source_order];
        for (x, &l) in labels.iter().enumerate() {
            clusters[l].push(x);
        }
        Ok(LabeledMatching {
            source,
            ends,
            labels,
            clusters,
        })
    }

    pub fn source(&self) -> &Multigraph {
        &self.source
    }

    /// Number of matching vertices.
    pub fn order(&self) -> usize {
        self.labels.len()
    }

    /// Number of matching edges, one per source edge.
    pub fn size(&self) -> usize {
        self.ends.len()
    }

    pub fn ends(&self, e: EdgeId) -> [Vertex; 2] {
        self.ends[e]
    }

    pub fn label(&self, x: Vertex) -> Vertex {
        self.labels[x]
    }

    pub fn labels(&self) -> &[Vertex] {
        &self.labels
    }

    /// Matching vertices labeled `v`, ascending.
    pub fn cluster(&self, v: Vertex) -> &[Vertex] {
        &self.clusters[v]
    }

    pub fn clusters(&self) -> &[Vec<Vertex>] {
        &self.clusters
    }

    /// Position of `x` within its cluster.
    pub fn local_index(&self, x: Vertex) -> usize {
        self.clusters[self.labels[x]]
            .binary_search(&x)
            .expect("vertex lies in its own cluster")
    }

    /// The end of source edge `e` at source vertex `v`, and the other end.
    /// A loop is left through slot 0 and entered through slot 1.
    pub fn end_at(&self, e: EdgeId, v: Vertex) -> Option<(Vertex, Vertex)> {
        let [a, b] = self.ends[e];
        if self.labels[a] == v {
            Some((a, b))
        } else if self.labels[b] == v {
            Some((b, a))
        } else {
            None
        }
    }
}

/// Splits every edge of `x` into a matching edge whose ends carry the labels
/// of the original endpoints.
pub fn excise(x: &Multigraph) -> Result<LabeledMatching> {
    if let Some(v) = x.isolated_vertex() {
        return Err(Error::IsolatedVertex(v));
    }
    let mut labels = Vec::with_capacity(2 * x.size());
    let mut ends = Vec::with_capacity(x.size());
    for (e, &(u, v)) in x.edges().iter().enumerate() {
        labels.push(u.min(v));
        labels.push(u.max(v));
        ends.push([2 * e, 2 * e + 1]);
    }
    let mut clusters = vec![Vec::new(); x.order()];
    for (i, &l) in labels.iter().enumerate() {
        clusters[l].push(i);
    }
    Ok(LabeledMatching {
        source: x.clone(),
        ends,
        labels,
        clusters,
    })
}

/// One simple graph per source vertex. Vertex `i` of constituent `v` is the
/// `i`-th matching vertex of cluster `v` in ascending order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConstituentAssignment {
    graphs: Vec<Multigraph>,
}

impl ConstituentAssignment {
    pub fn new(graphs: Vec<Multigraph>) -> Self {
        ConstituentAssignment { graphs }
    }

    /// Constituents given by edges on matching-vertex ids.
    pub fn from_cluster_edges(lm: &LabeledMatching, edges: &[Vec<(Vertex, Vertex)>]) -> Result<Self> {
        if edges.len() != lm.source().order() {
            return Err(Error::Precondition(format!(
                "{} constituents for {} source vertices",
                edges.len(),
                lm.source().order()
            )));
        }
        let mut graphs = Vec::with_capacity(edges.len());
        for (v, list) in edges.iter().enumerate() {
            let mut g = Multigraph::new(lm.cluster(v).len());
            for &(a, b) in list {
                for x in [a, b] {
                    if x >= lm.order() || lm.label(x) != v {
                        return Err(Error::BadConstituent {
                            vertex: v,
                            reason: format!("vertex {x} is not in the cluster"),
                        });
                    }
                }
                g.add_edge(lm.local_index(a), lm.local_index(b))?;
            }
            graphs.push(g);
        }
        Ok(ConstituentAssignment { graphs })
    }

    /// Every constituent edgeless.
    pub fn edgeless(lm: &LabeledMatching) -> Self {
        Self::from_fn(lm, Multigraph::new)
    }

    /// Every constituent complete.
    pub fn complete(lm: &LabeledMatching) -> Self {
        Self::from_fn(lm, crate::graph::generators::complete)
    }

    /// Every constituent a path through the cluster in ascending order.
    pub fn paths(lm: &LabeledMatching) -> Self {
        Self::from_fn(lm, crate::graph::generators::path)
    }

    fn from_fn(lm: &LabeledMatching, f: impl Fn(usize) -> Multigraph) -> Self {
        ConstituentAssignment {
            graphs: lm.clusters().iter().map(|c| f(c.len())).collect(),
        }
    }

    pub fn get(&self, v: Vertex) -> &Multigraph {
        &self.graphs[v]
    }

    pub fn graphs(&self) -> &[Multigraph] {
        &self.graphs
    }

    pub fn len(&self) -> usize {
        self.graphs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.graphs.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Truncation {
    graph: Multigraph,
    matching: LabeledMatching,
    constituents: ConstituentAssignment,
    /// Y edge carrying each source edge.
    matching_edges: Vec<EdgeId>,
    is_matching: Vec<bool>,
    /// Y edge ids of each constituent, indexed by constituent edge id.
    constituent_edges: Vec<Vec<EdgeId>>,
}

/// Inserts the constituents into the matching. Matching edges come first in
/// the edge order of Y, then the constituent edges by source vertex.
pub fn assemble(lm: LabeledMatching, ca: ConstituentAssignment) -> Result<Truncation> {
    check_constituents(&lm, &ca)?;
    let mut graph = Multigraph::new(lm.order());
    let mut matching_edges = Vec::with_capacity(lm.size());
    for e in 0..lm.size() {
        let [a, b] = lm.ends(e);
        matching_edges.push(graph.add_edge(a, b)?);
    }
    let mut constituent_edges = Vec::with_capacity(ca.len());
    for (v, c) in ca.graphs().iter().enumerate() {
        let cluster = lm.cluster(v);
        let mut ids = Vec::with_capacity(c.size());
        for &(a, b) in c.edges() {
            ids.push(graph.add_edge(cluster[a], cluster[b])?);
        }
        constituent_edges.push(ids);
    }
    let mut is_matching = vec![false; graph.size()];
    for &e in &matching_edges {
        is_matching[e] = true;
    }
    Ok(Truncation {
        graph,
        matching: lm,
        constituents: ca,
        matching_edges,
        is_matching,
        constituent_edges,
    })
}

fn check_constituents(lm: &LabeledMatching, ca: &ConstituentAssignment) -> Result<()> {
    if ca.len() != lm.source().order() {
        return Err(Error::Precondition(format!(
            "{} constituents for {} source vertices",
            ca.len(),
            lm.source().order()
        )));
    }
    for (v, c) in ca.graphs().iter().enumerate() {
        if c.order() != lm.cluster(v).len() {
            return Err(Error::BadConstituent {
                vertex: v,
                reason: format!("order {} but the cluster has {} vertices", c.order(), lm.cluster(v).len()),
            });
        }
        if !c.is_simple() {
            return Err(Error::BadConstituent {
                vertex: v,
                reason: "not simple".into(),
            });
        }
    }
    Ok(())
}

impl Truncation {
    /// Recovers the truncation structure of an imported graph from its
    /// cluster map and matching edges. Edge ids of `y` are preserved.
    pub fn from_parts(y: Multigraph, cluster_of: Vec<Vertex>, matching_edges: Vec<EdgeId>) -> Result<Self> {
        let bad = |msg: String| Error::InconsistentTruncation(msg);
        if cluster_of.len() != y.order() {
            return Err(bad(format!("{} cluster labels for order {}", cluster_of.len(), y.order())));
        }
        let mut is_matching = vec![false; y.size()];
        let mut ends = Vec::with_capacity(matching_edges.len());
        for &e in &matching_edges {
            y.check_edge(e)?;
            if std::mem::replace(&mut is_matching[e], true) {
                return Err(bad(format!("matching edge {e} listed twice")));
            }
            let (a, b) = y.endpoints(e);
            ends.push([a, b]);
        }
        if 2 * matching_edges.len() != y.order() {
            return Err(bad("matching edges do not cover every vertex exactly once".into()));
        }
        let source_order = cluster_of.iter().map(|&v| v + 1).max().unwrap_or(0);
        let lm = LabeledMatching::from_parts(source_order, ends, cluster_of)
            .map_err(|err| bad(err.to_string()))?;
        let mut constituent_graphs: Vec<Multigraph> =
            lm.clusters().iter().map(|c| Multigraph::new(c.len())).collect();
        let mut constituent_edges = vec![Vec::new(); source_order];
        for (e, &(a, b)) in y.edges().iter().enumerate() {
            if is_matching[e] {
                continue;
            }
            let v = lm.label(a);
            if lm.label(b) != v {
                return Err(bad(format!("edge {e} joins clusters {v} and {}", lm.label(b))));
            }
            constituent_graphs[v].add_edge(lm.local_index(a), lm.local_index(b))?;
            constituent_edges[v].push(e);
        }
        let ca = ConstituentAssignment::new(constituent_graphs);
        check_constituents(&lm, &ca).map_err(|err| bad(err.to_string()))?;
        Ok(Truncation {
            graph: y,
            matching: lm,
            constituents: ca,
            matching_edges,
            is_matching,
            constituent_edges,
        })
    }

    /// The truncation graph Y.
    pub fn graph(&self) -> &Multigraph {
        &self.graph
    }

    pub fn source(&self) -> &Multigraph {
        self.matching.source()
    }

    pub fn matching(&self) -> &LabeledMatching {
        &self.matching
    }

    pub fn constituents(&self) -> &ConstituentAssignment {
        &self.constituents
    }

    pub fn constituent(&self, v: Vertex) -> &Multigraph {
        self.constituents.get(v)
    }

    pub fn cluster(&self, v: Vertex) -> &[Vertex] {
        self.matching.cluster(v)
    }

    /// Source vertex whose cluster contains `y`.
    pub fn cluster_of(&self, y: Vertex) -> Vertex {
        self.matching.label(y)
    }

    pub fn cluster_map(&self) -> &[Vertex] {
        self.matching.labels()
    }

    /// Y edge carrying source edge `e`.
    pub fn matching_edge(&self, e: EdgeId) -> EdgeId {
        self.matching_edges[e]
    }

    pub fn matching_edges(&self) -> &[EdgeId] {
        &self.matching_edges
    }

    pub fn is_matching_edge(&self, e: EdgeId) -> bool {
        self.is_matching[e]
    }

    /// Y edge ids of the constituent at `v`, by constituent edge id.
    pub fn constituent_edges(&self, v: Vertex) -> &[EdgeId] {
        &self.constituent_edges[v]
    }

    /// Every constituent is connected.
    pub fn is_cohesive(&self) -> bool {
        self.constituents.graphs().iter().all(Multigraph::is_connected)
    }

    /// Every constituent is complete.
    pub fn is_complete(&self) -> bool {
        self.constituents.graphs().iter().all(|c| {
            let k = c.order();
            c.size() == k * k.saturating_sub(1) / 2 && c.is_simple()
        })
    }

    /// A constituent edge of Y between `a` and `b`, if any.
    pub fn constituent_edge_between(&self, a: Vertex, b: Vertex) -> Option<EdgeId> {
        self.graph.edges_between(a, b).find(|&e| !self.is_matching[e])
    }

    /// Same matching with constituent `v` replaced.
    pub fn with_constituent(&self, v: Vertex, graph: Multigraph) -> Result<Truncation> {
        self.source().check_vertex(v)?;
        let mut graphs = self.constituents.graphs().to_vec();
        graphs[v] = graph;
        assemble(self.matching.clone(), ConstituentAssignment::new(graphs))
    }

    /// Checks the structural invariants: edges split into matching and
    /// constituent edges, and every valency is one more than the constituent
    /// valency.
    pub fn check_invariants(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InconsistentTruncation(msg));
        let y = &self.graph;
        if y.order() != 2 * self.source().size() {
            return bad(format!("order {} for source size {}", y.order(), self.source().size()));
        }
        let constituent_total: usize = self.constituents.graphs().iter().map(Multigraph::size).sum();
        if y.size() != self.matching_edges.len() + constituent_total {
            return bad("edge count mismatch".into());
        }
        if !crate::graph::is_perfect_matching(y, &self.matching_edges) {
            return bad("matching edges are not a perfect matching".into());
        }
        for x in 0..y.order() {
            let v = self.cluster_of(x);
            let local = self.matching.local_index(x);
            if y.valency(x) != 1 + self.constituent(v).valency(local) {
                return bad(format!("valency of {x} is not one plus its constituent valency"));
            }
        }
        Ok(())
    }
}
