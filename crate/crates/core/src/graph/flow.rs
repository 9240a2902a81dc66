use std::collections::VecDeque;

use super::{Multigraph, Vertex};
use crate::error::{Error, Result};

const INF: u32 = u32::MAX / 2;

/// Residual network; arc `i ^ 1` is the reverse of arc `i`.
struct Network {
    adj: Vec<Vec<usize>>,
    to: Vec<usize>,
    cap: Vec<u32>,
}

impl Network {
    fn new(n: usize) -> Self {
        Network {
            adj: vec![Vec::new(); n],
            to: Vec::new(),
            cap: Vec::new(),
        }
    }

    fn add_arc(&mut self, u: usize, v: usize, forward: u32, backward: u32) {
        self.adj[u].push(self.to.len());
        self.to.push(v);
        self.cap.push(forward);
        self.adj[v].push(self.to.len());
        self.to.push(u);
        self.cap.push(backward);
    }

    /// Augments along shortest paths until no path remains or `limit` units
    /// have been pushed.
    fn max_flow(&mut self, s: usize, t: usize, limit: u32) -> u32 {
        let n = self.adj.len();
        let mut flow = 0;
        let mut pred = vec![usize::MAX; n];
        while flow < limit {
            pred.iter_mut().for_each(|p| *p = usize::MAX);
            let mut queue = VecDeque::from([s]);
            let mut reached = false;
            'bfs: while let Some(u) = queue.pop_front() {
                for &a in &self.adj[u] {
                    let v = self.to[a];
                    if self.cap[a] > 0 && v != s && pred[v] == usize::MAX {
                        pred[v] = a;
                        if v == t {
                            reached = true;
                            break 'bfs;
                        }
                        queue.push_back(v);
                    }
                }
            }
            if !reached {
                break;
            }
            let mut push = limit - flow;
            let mut v = t;
            while v != s {
                let a = pred[v];
                push = push.min(self.cap[a]);
                v = self.to[a ^ 1];
            }
            let mut v = t;
            while v != s {
                let a = pred[v];
                self.cap[a] -= push;
                self.cap[a ^ 1] += push;
                v = self.to[a ^ 1];
            }
            flow += push;
        }
        flow
    }
}

fn edge_network(g: &Multigraph) -> Network {
    let mut net = Network::new(g.order());
    for &(a, b) in g.edges() {
        if a != b {
            net.add_arc(a, b, 1, 1);
        }
    }
    net
}

/// Maximum number of edge-disjoint `s`-`t` paths; parallel edges add
/// capacity, loops are irrelevant.
pub fn local_edge_connectivity(g: &Multigraph, s: Vertex, t: Vertex) -> Result<usize> {
    g.check_vertex(s)?;
    g.check_vertex(t)?;
    if s == t {
        return Err(Error::SameEndpoints);
    }
    Ok(edge_network(g).max_flow(s, t, INF) as usize)
}

/// Size of a minimum edge cut; 0 iff disconnected.
pub fn edge_connectivity(g: &Multigraph) -> Result<usize> {
    let n = g.order();
    if n < 2 {
        return Err(Error::OrderTooSmall { needed: 2, order: n });
    }
    // Some minimum cut separates vertex 0 from another vertex.
    let mut best = g.min_valency() as u32;
    for t in 1..n {
        if best == 0 {
            break;
        }
        let f = edge_network(g).max_flow(0, t, best);
        best = best.min(f);
    }
    Ok(best as usize)
}

/// Minimum number of vertices whose removal disconnects the graph; for a
/// graph whose underlying simple graph is complete, `order - 1`.
pub fn vertex_connectivity(g: &Multigraph) -> Result<usize> {
    let n = g.order();
    if n < 2 {
        return Err(Error::OrderTooSmall { needed: 2, order: n });
    }
    let simple = g.underlying_simple();
    let mut adjacent = vec![vec![false; n]; n];
    for &(a, b) in simple.edges() {
        adjacent[a][b] = true;
        adjacent[b][a] = true;
    }
    let mut best = (n - 1) as u32;
    for s in 0..n {
        for t in s + 1..n {
            if adjacent[s][t] || best == 0 {
                continue;
            }
            let mut net = Network::new(2 * n);
            for v in 0..n {
                let c = if v == s || v == t { INF } else { 1 };
                net.add_arc(2 * v, 2 * v + 1, c, 0);
            }
            for &(a, b) in simple.edges() {
                net.add_arc(2 * a + 1, 2 * b, INF, 0);
                net.add_arc(2 * b + 1, 2 * a, INF, 0);
            }
            best = best.min(net.max_flow(2 * s + 1, 2 * t, best));
        }
    }
    Ok(best as usize)
}
