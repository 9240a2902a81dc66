//! Multigraphs with loops and parallel edges, and the exact oracles built on
//! them.

mod canon;
mod color;
mod euler;
mod flow;
pub mod generators;
mod hamilton;
mod matching;
mod subdivision;
mod walk;

pub use canon::{canonical_form, CanonicalForm};
pub use color::{
    chromatic_index_exact, chromatic_index_exact_with, chromatic_number_exact,
    chromatic_number_exact_with, k_edge_coloring, k_vertex_coloring, EdgeColoring,
    VertexColoring,
};
pub use euler::{euler_tour, euler_tour_through};
pub use flow::{edge_connectivity, local_edge_connectivity, vertex_connectivity};
pub use hamilton::{
    for_each_hamilton_cycle, hamilton_cycle, hamilton_cycle_with, hamilton_path,
    hamilton_path_with, is_hamilton_connected,
};
pub use matching::{enumerate_perfect_matchings, for_each_perfect_matching, is_perfect_matching};
pub use subdivision::{find_subdivision, Pattern, Subdivision};
pub use walk::Walk;

use std::collections::VecDeque;

use serde::Serialize;

use crate::error::{Error, Result};

pub type Vertex = usize;
pub type EdgeId = usize;

/// A finite multigraph on the dense vertex set `0..order`.
///
/// Edges are kept in an indexed list so that parallel edges stay distinct by
/// edge id. A loop appears twice in the incidence list of its vertex, which
/// makes it count 2 towards the valency.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize)]
pub struct Multigraph {
    order: usize,
    edges: Vec<(Vertex, Vertex)>,
    #[serde(skip)]
    incidence: Vec<Vec<EdgeId>>,
}

impl Multigraph {
    pub fn new(order: usize) -> Self {
        Multigraph {
            order,
            edges: Vec::new(),
            incidence: vec![Vec::new(); order],
        }
    }

    pub fn from_edges<I>(order: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut g = Multigraph::new(order);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: Vertex, v: Vertex) -> Result<EdgeId> {
        for w in [u, v] {
            if w >= self.order {
                return Err(Error::VertexOutOfRange {
                    vertex: w,
                    order: self.order,
                });
            }
        }
        let id = self.edges.len();
        self.edges.push((u, v));
        self.incidence[u].push(id);
        self.incidence[v].push(id);
        Ok(id)
    }

    pub fn add_vertex(&mut self) -> Vertex {
        self.incidence.push(Vec::new());
        self.order += 1;
        self.order - 1
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn endpoints(&self, e: EdgeId) -> (Vertex, Vertex) {
        self.edges[e]
    }

    /// The end of `e` opposite to `v`; `v` itself for a loop.
    pub fn other_end(&self, e: EdgeId, v: Vertex) -> Vertex {
        let (a, b) = self.edges[e];
        if a == v {
            b
        } else {
            debug_assert_eq!(b, v, "edge {e} not incident with {v}");
            a
        }
    }

    pub fn is_incident(&self, e: EdgeId, v: Vertex) -> bool {
        let (a, b) = self.edges[e];
        a == v || b == v
    }

    pub fn incident(&self, v: Vertex) -> &[EdgeId] {
        &self.incidence[v]
    }

    pub fn valency(&self, v: Vertex) -> usize {
        self.incidence[v].len()
    }

    pub fn valencies(&self) -> Vec<usize> {
        self.incidence.iter().map(Vec::len).collect()
    }

    pub fn max_valency(&self) -> usize {
        self.incidence.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn min_valency(&self) -> usize {
        self.incidence.iter().map(Vec::len).min().unwrap_or(0)
    }

    /// The common valency, when every vertex has the same one.
    pub fn regular_valency(&self) -> Option<usize> {
        let d = self.incidence.first()?.len();
        self.incidence.iter().all(|i| i.len() == d).then_some(d)
    }

    pub fn is_loop(&self, e: EdgeId) -> bool {
        let (a, b) = self.edges[e];
        a == b
    }

    pub fn first_loop(&self) -> Option<Vertex> {
        self.edges.iter().find(|(a, b)| a == b).map(|&(a, _)| a)
    }

    pub fn has_loops(&self) -> bool {
        self.first_loop().is_some()
    }

    pub fn multiplicity(&self, u: Vertex, v: Vertex) -> usize {
        self.edges_between(u, v).count()
    }

    pub fn edges_between(&self, u: Vertex, v: Vertex) -> impl Iterator<Item = EdgeId> + '_ {
        let mut last = None;
        self.incidence[u].iter().copied().filter(move |&e| {
            // a loop is listed twice at its vertex
            if Some(e) == last {
                return false;
            }
            last = Some(e);
            self.other_end(e, u) == v
        })
    }

    /// Lowest-id edge joining `u` and `v`.
    pub fn edge_between(&self, u: Vertex, v: Vertex) -> Option<EdgeId> {
        self.edges_between(u, v).min()
    }

    pub fn adjacent(&self, u: Vertex, v: Vertex) -> bool {
        self.edges_between(u, v).next().is_some()
    }

    /// Distinct neighbours other than `v` itself, ascending.
    pub fn neighbors(&self, v: Vertex) -> Vec<Vertex> {
        let mut out: Vec<Vertex> = self.incidence[v]
            .iter()
            .map(|&e| self.other_end(e, v))
            .filter(|&w| w != v)
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    pub fn is_simple(&self) -> bool {
        let mut seen = std::collections::HashSet::with_capacity(self.edges.len());
        self.edges
            .iter()
            .all(|&(a, b)| a != b && seen.insert((a.min(b), a.max(b))))
    }

    pub fn require_simple(&self) -> Result<()> {
        if self.is_simple() {
            Ok(())
        } else {
            Err(Error::NotSimple)
        }
    }

    pub fn require_loopless(&self) -> Result<()> {
        match self.first_loop() {
            Some(v) => Err(Error::LoopPresent(v)),
            None => Ok(()),
        }
    }

    pub fn isolated_vertex(&self) -> Option<Vertex> {
        (0..self.order).find(|&v| self.incidence[v].is_empty())
    }

    /// Adjacency matrix of multiplicities; a loop contributes 1 on the
    /// diagonal per loop edge.
    pub fn multiplicity_matrix(&self) -> Vec<Vec<usize>> {
        let mut m = vec![vec![0; self.order]; self.order];
        for &(a, b) in &self.edges {
            m[a][b] += 1;
            if a != b {
                m[b][a] += 1;
            }
        }
        m
    }

    /// Component label per vertex and the number of components. Labels are
    /// assigned in order of the lowest vertex of each component.
    pub fn component_labels(&self) -> (Vec<usize>, usize) {
        let mut label = vec![usize::MAX; self.order];
        let mut count = 0;
        let mut queue = VecDeque::new();
        for s in 0..self.order {
            if label[s] != usize::MAX {
                continue;
            }
            label[s] = count;
            queue.push_back(s);
            while let Some(v) = queue.pop_front() {
                for &e in &self.incidence[v] {
                    let w = self.other_end(e, v);
                    if label[w] == usize::MAX {
                        label[w] = count;
                        queue.push_back(w);
                    }
                }
            }
            count += 1;
        }
        (label, count)
    }

    /// Maximal connected vertex sets, each ascending, ordered by their
    /// lowest vertex.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let (label, count) = self.component_labels();
        let mut blocks = vec![Vec::new(); count];
        for (v, &l) in label.iter().enumerate() {
            blocks[l].push(v);
        }
        blocks
    }

    pub fn is_connected(&self) -> bool {
        self.order <= 1 || self.component_labels().1 == 1
    }

    /// Connected once vertices without edges are ignored.
    pub fn edges_connected(&self) -> bool {
        let (label, _) = self.component_labels();
        let mut it = self.edges.iter().map(|&(a, _)| label[a]);
        match it.next() {
            None => true,
            Some(first) => it.all(|l| l == first),
        }
    }

    /// Subgraph induced on `vertices`; vertex `vertices[i]` becomes `i`.
    /// Returns the subgraph and, for each of its edges, the original id.
    pub fn induced_subgraph(&self, vertices: &[Vertex]) -> (Multigraph, Vec<EdgeId>) {
        let mut index = vec![usize::MAX; self.order];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let mut sub = Multigraph::new(vertices.len());
        let mut origin = Vec::new();
        for (e, &(a, b)) in self.edges.iter().enumerate() {
            if index[a] != usize::MAX && index[b] != usize::MAX {
                sub.add_edge(index[a], index[b]).expect("indices in range");
                origin.push(e);
            }
        }
        (sub, origin)
    }

    /// Spanning subgraph on the listed edges; edge `edges[i]` becomes `i`.
    pub fn edge_subgraph(&self, edges: &[EdgeId]) -> Multigraph {
        let mut sub = Multigraph::new(self.order);
        for &e in edges {
            let (a, b) = self.edges[e];
            sub.add_edge(a, b).expect("same vertex set");
        }
        sub
    }

    /// Spanning subgraph with the given edges removed, plus the original id
    /// of each surviving edge.
    pub fn without_edges(&self, removed: &[EdgeId]) -> (Multigraph, Vec<EdgeId>) {
        let mut drop = vec![false; self.edges.len()];
        for &e in removed {
            drop[e] = true;
        }
        let kept: Vec<EdgeId> = (0..self.edges.len()).filter(|&e| !drop[e]).collect();
        (self.edge_subgraph(&kept), kept)
    }

    /// Renames vertex `v` to `perm[v]`; edge ids are preserved.
    pub fn relabel(&self, perm: &[Vertex]) -> Multigraph {
        assert_eq!(perm.len(), self.order);
        let mut g = Multigraph::new(self.order);
        for &(a, b) in &self.edges {
            g.add_edge(perm[a], perm[b]).expect("permutation in range");
        }
        g
    }

    /// One edge per adjacent pair, loops dropped.
    pub fn underlying_simple(&self) -> Multigraph {
        let mut g = Multigraph::new(self.order);
        let mut seen = std::collections::HashSet::new();
        for &(a, b) in &self.edges {
            if a != b && seen.insert((a.min(b), a.max(b))) {
                g.add_edge(a.min(b), a.max(b)).expect("in range");
            }
        }
        g
    }

    /// Vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Multigraph) -> Multigraph {
        let shift = self.order;
        let mut g = self.clone();
        for _ in 0..other.order {
            g.add_vertex();
        }
        for &(a, b) in &other.edges {
            g.add_edge(a + shift, b + shift).expect("in range");
        }
        g
    }

    /// Identifies vertices according to `block_of` (vertex -> block id in
    /// `0..blocks`), keeping every edge; edges inside a block become loops.
    pub fn quotient(&self, block_of: &[usize], blocks: usize) -> Multigraph {
        let mut g = Multigraph::new(blocks);
        for &(a, b) in &self.edges {
            g.add_edge(block_of[a], block_of[b]).expect("block in range");
        }
        g
    }

    pub(crate) fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v < self.order {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.order,
            })
        }
    }

    pub(crate) fn check_edge(&self, e: EdgeId) -> Result<()> {
        if e < self.edges.len() {
            Ok(())
        } else {
            Err(Error::EdgeOutOfRange {
                edge: e,
                size: self.edges.len(),
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::generators::*;
    use super::*;

    #[test]
    fn loop_counts_twice() {
        let g = Multigraph::from_edges(2, [(0, 0), (0, 1), (0, 1)]).unwrap();
        assert_eq!(g.valency(0), 4);
        assert_eq!(g.valency(1), 2);
        assert_eq!(g.multiplicity(0, 1), 2);
        assert_eq!(g.multiplicity(0, 0), 1);
        assert!(!g.is_simple());
        assert_eq!(g.neighbors(0), vec![1]);
        assert_eq!(g.edge_between(1, 0), Some(1));
    }

    #[test]
    fn rejects_out_of_range() {
        assert_eq!(
            Multigraph::from_edges(2, [(0, 2)]),
            Err(Error::VertexOutOfRange { vertex: 2, order: 2 })
        );
    }

    #[test]
    fn components_examples() {
        assert_eq!(Multigraph::new(3).components(), vec![vec![0], vec![1], vec![2]]);
        assert_eq!(cycle(6).components().len(), 1);
        let two_k2 = Multigraph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(two_k2.components(), vec![vec![0, 1], vec![2, 3]]);
    }

    #[test]
    fn induced_and_without() {
        let g = complete(4);
        let (sub, origin) = g.induced_subgraph(&[3, 1, 2]);
        assert_eq!(sub.size(), 3);
        for (i, &e) in origin.iter().enumerate() {
            let (a, b) = sub.endpoints(i);
            let back = [3, 1, 2];
            let (x, y) = g.endpoints(e);
            assert_eq!((back[a].min(back[b]), back[a].max(back[b])), (x.min(y), x.max(y)));
        }
        let (rest, kept) = g.without_edges(&[0, 5]);
        assert_eq!(rest.size(), 4);
        assert_eq!(kept, vec![1, 2, 3, 4]);
    }

    #[test]
    fn quotient_makes_loops() {
        let q = cycle(4).quotient(&[0, 0, 1, 1], 2);
        assert_eq!(q.size(), 4);
        assert_eq!(q.multiplicity(0, 0), 1);
        assert_eq!(q.multiplicity(0, 1), 2);
    }
}
