//! Exact Hamilton cycle/path search by backtracking.
//!
//! A `None` answer is certified by exhaustion. Pruning: every unvisited
//! vertex must keep enough usable neighbours, and the unvisited vertices
//! must stay reachable from the current end of the path.

use std::collections::VecDeque;
use std::ops::ControlFlow;

use super::{Multigraph, Vertex, Walk};
use crate::caps::{Caps, SearchControl};
use crate::error::{Error, Result};

struct Search<'a> {
    adj: Vec<Vec<Vertex>>,
    visited: Vec<bool>,
    path: Vec<Vertex>,
    /// Path target, or `None` when closing a cycle back to `path[0]`.
    target: Option<Vertex>,
    ctl: &'a SearchControl,
    queue: VecDeque<Vertex>,
    seen: Vec<bool>,
}

impl<'a> Search<'a> {
    fn new(g: &Multigraph, start: Vertex, target: Option<Vertex>, ctl: &'a SearchControl) -> Self {
        let n = g.order();
        let adj = (0..n).map(|v| g.neighbors(v)).collect();
        let mut visited = vec![false; n];
        visited[start] = true;
        Search {
            adj,
            visited,
            path: vec![start],
            target,
            ctl,
            queue: VecDeque::new(),
            seen: vec![false; n],
        }
    }

    fn n(&self) -> usize {
        self.adj.len()
    }

    fn feasible(&mut self) -> bool {
        let end = *self.path.last().expect("non-empty");
        let start = self.path[0];
        let n = self.n();
        for u in 0..n {
            if self.visited[u] {
                continue;
            }
            let need = if Some(u) == self.target { 1 } else { 2 };
            let mut have = 0;
            for &w in &self.adj[u] {
                let usable = !self.visited[w]
                    || w == end
                    || (self.target.is_none() && w == start && self.path.len() > 1);
                if usable {
                    have += 1;
                    if have >= need {
                        break;
                    }
                }
            }
            // a path of length 0 lets end == start serve both cycle ends
            if self.target.is_none() && self.path.len() == 1 && self.adj[u].contains(&start) {
                have += 1;
            }
            if have < need {
                return false;
            }
        }
        // unvisited vertices reachable from the end through unvisited ones
        self.seen.iter_mut().for_each(|s| *s = false);
        self.queue.clear();
        self.queue.push_back(end);
        self.seen[end] = true;
        let mut reached = 0;
        while let Some(v) = self.queue.pop_front() {
            for &w in &self.adj[v] {
                if !self.visited[w] && !self.seen[w] {
                    self.seen[w] = true;
                    reached += 1;
                    self.queue.push_back(w);
                }
            }
        }
        reached == n - self.path.len()
    }

    fn run<F>(&mut self, visit: &mut F) -> Result<ControlFlow<()>>
    where
        F: FnMut(&[Vertex]) -> ControlFlow<()>,
    {
        self.ctl.tick()?;
        let n = self.n();
        let end = *self.path.last().expect("non-empty");
        if self.path.len() == n {
            let closes = match self.target {
                Some(t) => end == t,
                // each undirected cycle once: second vertex below the last
                None => self.adj[end].contains(&self.path[0]) && self.path[1] < end,
            };
            return Ok(if closes { visit(&self.path) } else { ControlFlow::Continue(()) });
        }
        if !self.feasible() {
            return Ok(ControlFlow::Continue(()));
        }
        let candidates = self.adj[end].clone();
        for w in candidates {
            if self.visited[w] || (Some(w) == self.target && self.path.len() + 1 < n) {
                continue;
            }
            self.visited[w] = true;
            self.path.push(w);
            let flow = self.run(visit)?;
            self.path.pop();
            self.visited[w] = false;
            if flow.is_break() {
                return Ok(flow);
            }
        }
        Ok(ControlFlow::Continue(()))
    }
}

/// Small orders where a Hamilton cycle needs loops or parallel edges.
fn tiny_cycle(g: &Multigraph) -> Option<Option<Walk>> {
    match g.order() {
        0 => Some(None),
        1 => Some(g.edges_between(0, 0).next().map(|e| {
            let mut w = Walk::new(0);
            w.push(e, 0);
            w
        })),
        2 => {
            let es: Vec<_> = g.edges_between(0, 1).collect();
            Some((es.len() >= 2).then(|| Walk::from_parts(vec![0, 1, 0], vec![es[0], es[1]]).expect("shape")))
        }
        _ => None,
    }
}

/// Calls `visit` once per Hamilton cycle of the underlying simple graph
/// (order >= 3), as a vertex sequence starting at 0 with the second vertex
/// below the last.
pub fn for_each_hamilton_cycle<F>(g: &Multigraph, ctl: &SearchControl, mut visit: F) -> Result<ControlFlow<()>>
where
    F: FnMut(&[Vertex]) -> ControlFlow<()>,
{
    Caps::check("hamilton", Caps::current().hamilton_order, g.order())?;
    if g.order() < 3 || !g.is_connected() {
        return Ok(ControlFlow::Continue(()));
    }
    let mut search = Search::new(g, 0, None, ctl);
    if search.adj.iter().any(|a| a.len() < 2) {
        return Ok(ControlFlow::Continue(()));
    }
    search.run(&mut visit)
}

pub fn hamilton_cycle(g: &Multigraph) -> Result<Option<Walk>> {
    hamilton_cycle_with(g, &SearchControl::new())
}

pub fn hamilton_cycle_with(g: &Multigraph, ctl: &SearchControl) -> Result<Option<Walk>> {
    Caps::check("hamilton", Caps::current().hamilton_order, g.order())?;
    if let Some(answer) = tiny_cycle(g) {
        return Ok(answer);
    }
    let mut found = None;
    let _ = for_each_hamilton_cycle(g, ctl, |p| {
        let mut cycle = p.to_vec();
        cycle.push(p[0]);
        found = Walk::through(g, &cycle);
        ControlFlow::Break(())
    })?;
    Ok(found)
}

pub fn hamilton_path(g: &Multigraph, s: Vertex, t: Vertex) -> Result<Option<Walk>> {
    hamilton_path_with(g, s, t, &SearchControl::new())
}

pub fn hamilton_path_with(g: &Multigraph, s: Vertex, t: Vertex, ctl: &SearchControl) -> Result<Option<Walk>> {
    g.check_vertex(s)?;
    g.check_vertex(t)?;
    if s == t {
        return Err(Error::SameEndpoints);
    }
    Caps::check("hamilton", Caps::current().hamilton_order, g.order())?;
    let mut search = Search::new(g, s, Some(t), ctl);
    let mut found = None;
    let _ = search.run(&mut |p: &[Vertex]| {
        found = Walk::through(g, p);
        ControlFlow::Break(())
    })?;
    Ok(found)
}

/// Every pair of distinct vertices is joined by a Hamilton path. Order 1
/// counts as Hamilton-connected.
pub fn is_hamilton_connected(g: &Multigraph) -> Result<bool> {
    let n = g.order();
    for s in 0..n {
        for t in s + 1..n {
            if hamilton_path(g, s, t)?.is_none() {
                return Ok(false);
            }
        }
    }
    Ok(n > 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generators::*;

    #[test]
    fn cycle_examples() {
        let c6 = cycle(6);
        assert!(hamilton_cycle(&c6).unwrap().unwrap().is_hamilton_cycle(&c6));
        assert!(hamilton_cycle(&petersen()).unwrap().is_none());
        assert!(hamilton_cycle(&path(4)).unwrap().is_none());
        assert!(hamilton_cycle(&multi_edge(2)).unwrap().unwrap().is_hamilton_cycle(&multi_edge(2)));
        assert!(hamilton_cycle(&complete(2)).unwrap().is_none());
        let q3 = hypercube(3);
        assert!(hamilton_cycle(&q3).unwrap().unwrap().is_hamilton_cycle(&q3));
    }

    #[test]
    fn path_examples() {
        let k4 = complete(4);
        let p = hamilton_path(&k4, 0, 3).unwrap().unwrap();
        assert!(p.is_hamilton_path(&k4));
        assert_eq!((p.start(), p.end()), (0, 3));
        assert_eq!(hamilton_path(&k4, 1, 1), Err(Error::SameEndpoints));
        // endpoints of a path graph only
        assert!(hamilton_path(&path(4), 0, 3).unwrap().is_some());
        assert!(hamilton_path(&path(4), 0, 2).unwrap().is_none());
        // bipartite, equal parts: same-side endpoints impossible
        assert!(hamilton_path(&cycle(6), 0, 2).unwrap().is_none());
    }

    #[test]
    fn counts_cycles_of_k5() {
        let mut count = 0;
        let _ = for_each_hamilton_cycle(&complete(5), &SearchControl::new(), |_| {
            count += 1;
            ControlFlow::Continue(())
        })
        .unwrap();
        // (5 - 1)! / 2
        assert_eq!(count, 12);
    }

    #[test]
    fn hamilton_connectivity() {
        assert!(is_hamilton_connected(&complete(4)).unwrap());
        assert!(!is_hamilton_connected(&cycle(5)).unwrap());
        assert!(!is_hamilton_connected(&petersen()).unwrap());
    }

    #[test]
    fn cap_is_enforced() {
        assert!(matches!(
            hamilton_cycle(&cycle(41)),
            Err(Error::CapExceeded { search: "hamilton", .. })
        ));
    }
}
