use std::collections::VecDeque;

use serde::Serialize;

use super::{Multigraph, Vertex};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Pattern {
    K4,
    K23,
    K5,
    K33,
}

impl Pattern {
    pub fn order(self) -> usize {
        match self {
            Pattern::K4 => 4,
            Pattern::K23 | Pattern::K5 => 5,
            Pattern::K33 => 6,
        }
    }

    /// Pattern edges. K23 has parts {0, 1} and {2, 3, 4}; K33 has parts
    /// {0, 1, 2} and {3, 4, 5}.
    pub fn edges(self) -> Vec<(usize, usize)> {
        match self {
            Pattern::K4 | Pattern::K5 => {
                let n = self.order();
                (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect()
            }
            Pattern::K23 => (0..2).flat_map(|i| (2..5).map(move |j| (i, j))).collect(),
            Pattern::K33 => (0..3).flat_map(|i| (3..6).map(move |j| (i, j))).collect(),
        }
    }

    fn degree(self, v: usize) -> usize {
        self.edges().iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    /// Branch vertex `i` must exceed branch vertex `j` for each listed pair;
    /// removes the pattern's own symmetries from the search.
    fn order_constraints(self) -> Vec<(usize, usize)> {
        match self {
            Pattern::K4 => vec![(1, 0), (2, 1), (3, 2)],
            Pattern::K5 => vec![(1, 0), (2, 1), (3, 2), (4, 3)],
            Pattern::K23 => vec![(1, 0), (3, 2), (4, 3)],
            Pattern::K33 => vec![(1, 0), (2, 1), (4, 3), (5, 4), (3, 0)],
        }
    }
}

/// Branch vertices plus internally disjoint connecting paths realising a
/// subdivision of `pattern`. `paths[i]` realises `pattern.edges()[i]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Subdivision {
    pub pattern: Pattern,
    pub branch: Vec<Vertex>,
    pub paths: Vec<Vec<Vertex>>,
}

impl Subdivision {
    pub fn validate(&self, g: &Multigraph) -> bool {
        let edges = self.pattern.edges();
        if self.branch.len() != self.pattern.order() || self.paths.len() != edges.len() {
            return false;
        }
        let mut used = vec![false; g.order()];
        for &b in &self.branch {
            if b >= g.order() || std::mem::replace(&mut used[b], true) {
                return false;
            }
        }
        for (&(a, b), path) in edges.iter().zip(&self.paths) {
            if path.len() < 2 || path[0] != self.branch[a] || path[path.len() - 1] != self.branch[b] {
                return false;
            }
            if !path.windows(2).all(|w| w[0] < g.order() && w[1] < g.order() && g.adjacent(w[0], w[1])) {
                return false;
            }
            for &x in &path[1..path.len() - 1] {
                if std::mem::replace(&mut used[x], true) {
                    return false;
                }
            }
        }
        true
    }
}

struct Router<'a> {
    adj: Vec<Vec<Vertex>>,
    pattern_edges: Vec<(usize, usize)>,
    branch: &'a [Vertex],
    blocked: Vec<bool>,
    paths: Vec<Vec<Vertex>>,
}

impl Router<'_> {
    fn connected(&self, s: Vertex, t: Vertex) -> bool {
        let mut seen = vec![false; self.adj.len()];
        let mut queue = VecDeque::from([s]);
        seen[s] = true;
        while let Some(v) = queue.pop_front() {
            for &w in &self.adj[v] {
                if w == t {
                    return true;
                }
                if !seen[w] && !self.blocked[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        false
    }

    fn route(&mut self, i: usize) -> bool {
        if i == self.pattern_edges.len() {
            return true;
        }
        for &(a, b) in &self.pattern_edges[i..] {
            if !self.connected(self.branch[a], self.branch[b]) {
                return false;
            }
        }
        let (a, b) = self.pattern_edges[i];
        let (s, t) = (self.branch[a], self.branch[b]);
        let mut path = vec![s];
        self.extend(i, t, &mut path)
    }

    fn extend(&mut self, i: usize, t: Vertex, path: &mut Vec<Vertex>) -> bool {
        let v = *path.last().expect("non-empty");
        let mut next = self.adj[v].clone();
        // try the target first
        next.sort_by_key(|&w| (w != t, w));
        for w in next {
            if w == t {
                path.push(t);
                self.paths.push(path.clone());
                if self.route(i + 1) {
                    return true;
                }
                self.paths.pop();
                path.pop();
            } else if !self.blocked[w] {
                self.blocked[w] = true;
                path.push(w);
                if self.extend(i, t, path) {
                    return true;
                }
                path.pop();
                self.blocked[w] = false;
            }
        }
        false
    }
}

/// Exhaustive search for a subdivision of `pattern` in the simple graph `g`.
/// `None` certifies that no such subdivision exists.
pub fn find_subdivision(g: &Multigraph, pattern: Pattern) -> Result<Option<Subdivision>> {
    if !g.is_simple() {
        return Err(Error::NotSimple);
    }
    let k = pattern.order();
    let degrees: Vec<usize> = (0..k).map(|v| pattern.degree(v)).collect();
    let constraints = pattern.order_constraints();
    let adj: Vec<Vec<Vertex>> = (0..g.order()).map(|v| g.neighbors(v)).collect();
    let mut branch = Vec::with_capacity(k);
    Ok(assign(g, pattern, &degrees, &constraints, &adj, &mut branch))
}

fn assign(
    g: &Multigraph,
    pattern: Pattern,
    degrees: &[usize],
    constraints: &[(usize, usize)],
    adj: &[Vec<Vertex>],
    branch: &mut Vec<Vertex>,
) -> Option<Subdivision> {
    let i = branch.len();
    if i == pattern.order() {
        let mut blocked = vec![false; g.order()];
        for &b in branch.iter() {
            blocked[b] = true;
        }
        let mut router = Router {
            adj: adj.to_vec(),
            pattern_edges: pattern.edges(),
            branch,
            blocked,
            paths: Vec::new(),
        };
        return router.route(0).then(|| Subdivision {
            pattern,
            branch: branch.clone(),
            paths: router.paths,
        });
    }
    for v in 0..g.order() {
        if adj[v].len() < degrees[i] || branch.contains(&v) {
            continue;
        }
        if constraints.iter().any(|&(hi, lo)| hi == i && lo < i && v <= branch[lo]) {
            continue;
        }
        branch.push(v);
        if let Some(found) = assign(g, pattern, degrees, constraints, adj, branch) {
            return Some(found);
        }
        branch.pop();
    }
    None
}
