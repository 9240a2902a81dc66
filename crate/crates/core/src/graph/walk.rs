use serde::Serialize;

use super::{EdgeId, Multigraph, Vertex};
use crate::error::{Error, Result};

/// Alternating vertex/edge sequence `v0 e1 v1 ... ek vk`.
///
/// Edge ids are kept alongside vertices so that walks through parallel edges
/// are unambiguous. The walk is closed when it has at least one edge and
/// `v0 == vk`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Walk {
    vertices: Vec<Vertex>,
    edges: Vec<EdgeId>,
}

impl Walk {
    pub fn new(start: Vertex) -> Self {
        Walk {
            vertices: vec![start],
            edges: Vec::new(),
        }
    }

    pub fn from_parts(vertices: Vec<Vertex>, edges: Vec<EdgeId>) -> Result<Self> {
        if vertices.len() != edges.len() + 1 {
            return Err(Error::InvalidWalk(format!(
                "{} vertices for {} edges",
                vertices.len(),
                edges.len()
            )));
        }
        Ok(Walk { vertices, edges })
    }

    /// Builds the walk through `vertices`, taking the lowest-id edge
    /// between each consecutive pair. `None` if some pair is not adjacent.
    pub fn through(g: &Multigraph, vertices: &[Vertex]) -> Option<Self> {
        let (&first, rest) = vertices.split_first()?;
        let mut w = Walk::new(first);
        for &v in rest {
            let e = g.edge_between(w.end(), v)?;
            w.push(e, v);
        }
        Some(w)
    }

    pub fn push(&mut self, edge: EdgeId, to: Vertex) {
        self.edges.push(edge);
        self.vertices.push(to);
    }

    /// Continues with `other`, which must start where this walk ends.
    pub fn append(&mut self, other: &Walk) -> Result<()> {
        if other.start() != self.end() {
            return Err(Error::InvalidWalk(format!(
                "cannot join a walk ending at {} to one starting at {}",
                self.end(),
                other.start()
            )));
        }
        self.edges.extend_from_slice(&other.edges);
        self.vertices.extend_from_slice(&other.vertices[1..]);
        Ok(())
    }

    pub fn start(&self) -> Vertex {
        self.vertices[0]
    }

    pub fn end(&self) -> Vertex {
        *self.vertices.last().expect("walk has a start vertex")
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &[EdgeId] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn is_closed(&self) -> bool {
        !self.edges.is_empty() && self.start() == self.end()
    }

    pub fn reversed(&self) -> Walk {
        let mut vertices = self.vertices.clone();
        let mut edges = self.edges.clone();
        vertices.reverse();
        edges.reverse();
        Walk { vertices, edges }
    }

    /// Checks every vertex-edge incidence against `g`.
    pub fn validate(&self, g: &Multigraph) -> Result<()> {
        for &v in &self.vertices {
            g.check_vertex(v)?;
        }
        for (i, &e) in self.edges.iter().enumerate() {
            g.check_edge(e)?;
            let (a, b) = g.endpoints(e);
            let (x, y) = (self.vertices[i], self.vertices[i + 1]);
            if !((a == x && b == y) || (a == y && b == x)) {
                return Err(Error::InvalidWalk(format!(
                    "edge {e} = {a}-{b} does not join {x} and {y}"
                )));
            }
        }
        Ok(())
    }

    pub fn is_trail(&self, g: &Multigraph) -> bool {
        if self.validate(g).is_err() {
            return false;
        }
        let mut seen = vec![false; g.size()];
        self.edges.iter().all(|&e| !std::mem::replace(&mut seen[e], true))
    }

    /// Closed trail covering every edge exactly once. The edgeless graph is
    /// covered by the trivial walk.
    pub fn is_euler_tour(&self, g: &Multigraph) -> bool {
        self.is_trail(g)
            && self.edges.len() == g.size()
            && (self.edges.is_empty() || self.is_closed())
    }

    pub fn is_hamilton_cycle(&self, g: &Multigraph) -> bool {
        let n = g.order();
        n > 0
            && self.validate(g).is_ok()
            && self.is_closed()
            && self.edges.len() == n
            && distinct_cover(&self.vertices[..n], n)
            && {
                let mut e = self.edges.clone();
                e.sort_unstable();
                e.windows(2).all(|w| w[0] != w[1])
            }
    }

    pub fn is_hamilton_path(&self, g: &Multigraph) -> bool {
        let n = g.order();
        n > 0
            && self.validate(g).is_ok()
            && self.vertices.len() == n
            && distinct_cover(&self.vertices, n)
    }
}

fn distinct_cover(vs: &[Vertex], n: usize) -> bool {
    let mut seen = vec![false; n];
    vs.len() == n && vs.iter().all(|&v| v < n && !std::mem::replace(&mut seen[v], true))
}
