//! Exact vertex and edge colouring by saturation-ordered backtracking.

use serde::Serialize;

use super::{EdgeId, Multigraph, Vertex};
use crate::caps::{Caps, SearchControl};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EdgeColoring {
    /// Colour of each edge, indexed by edge id.
    pub colors: Vec<usize>,
    pub count: usize,
}

impl EdgeColoring {
    pub fn new(colors: Vec<usize>) -> Self {
        let count = colors.iter().map(|&c| c + 1).max().unwrap_or(0);
        EdgeColoring { colors, count }
    }

    /// No two edges sharing an end have the same colour. Loops are never
    /// properly coloured.
    pub fn is_proper(&self, g: &Multigraph) -> bool {
        if self.colors.len() != g.size() || self.colors.iter().any(|&c| c >= self.count) {
            return false;
        }
        (0..g.order()).all(|v| {
            let mut seen = vec![false; self.count];
            g.incident(v)
                .iter()
                .all(|&e| !std::mem::replace(&mut seen[self.colors[e]], true))
        })
    }

    /// Edge ids of each colour class.
    pub fn classes(&self) -> Vec<Vec<EdgeId>> {
        let mut out = vec![Vec::new(); self.count];
        for (e, &c) in self.colors.iter().enumerate() {
            out[c].push(e);
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VertexColoring {
    pub colors: Vec<usize>,
    pub count: usize,
}

impl VertexColoring {
    pub fn new(colors: Vec<usize>) -> Self {
        let count = colors.iter().map(|&c| c + 1).max().unwrap_or(0);
        VertexColoring { colors, count }
    }

    pub fn is_proper(&self, g: &Multigraph) -> bool {
        self.colors.len() == g.order()
            && self.colors.iter().all(|&c| c < self.count)
            && g.edges().iter().all(|&(a, b)| self.colors[a] != self.colors[b])
    }
}

// ---------------------------------------------------------------- vertices

struct VertexSearch<'a> {
    adj: Vec<Vec<Vertex>>,
    k: usize,
    color: Vec<Option<usize>>,
    /// neighbour_colors[v][c] = coloured neighbours of v with colour c
    neighbour_colors: Vec<Vec<u32>>,
    ctl: &'a SearchControl,
}

impl VertexSearch<'_> {
    fn saturation(&self, v: Vertex) -> usize {
        self.neighbour_colors[v].iter().filter(|&&c| c > 0).count()
    }

    fn pick(&self) -> Option<Vertex> {
        let mut best: Option<(usize, usize, Vertex)> = None;
        for v in 0..self.adj.len() {
            if self.color[v].is_some() {
                continue;
            }
            let sat = self.saturation(v);
            let free = self.adj[v].iter().filter(|&&w| self.color[w].is_none()).count();
            let better = match best {
                None => true,
                Some((bs, bf, _)) => (sat, free) > (bs, bf),
            };
            if better {
                best = Some((sat, free, v));
            }
        }
        best.map(|(_, _, v)| v)
    }

    fn set(&mut self, v: Vertex, c: Option<usize>) {
        if let Some(old) = self.color[v] {
            for i in 0..self.adj[v].len() {
                let w = self.adj[v][i];
                self.neighbour_colors[w][old] -= 1;
            }
        }
        self.color[v] = c;
        if let Some(new) = c {
            for i in 0..self.adj[v].len() {
                let w = self.adj[v][i];
                self.neighbour_colors[w][new] += 1;
            }
        }
    }

    fn run(&mut self, max_used: Option<usize>) -> Result<bool> {
        self.ctl.tick()?;
        let Some(v) = self.pick() else {
            return Ok(true);
        };
        let limit = max_used.map_or(1, |m| m + 2).min(self.k);
        for c in 0..limit {
            if self.neighbour_colors[v][c] > 0 {
                continue;
            }
            self.set(v, Some(c));
            if self.run(Some(max_used.map_or(c, |m| m.max(c))))? {
                return Ok(true);
            }
            self.set(v, None);
        }
        Ok(false)
    }
}

/// A proper colouring with at most `k` colours, if one exists.
pub fn k_vertex_coloring(g: &Multigraph, k: usize, ctl: &SearchControl) -> Result<Option<VertexColoring>> {
    g.require_loopless()?;
    let n = g.order();
    if n == 0 {
        return Ok(Some(VertexColoring::new(Vec::new())));
    }
    if k == 0 {
        return Ok(None);
    }
    let mut search = VertexSearch {
        adj: (0..n).map(|v| g.neighbors(v)).collect(),
        k,
        color: vec![None; n],
        neighbour_colors: vec![vec![0; k]; n],
        ctl,
    };
    if search.run(None)? {
        let colors = search.color.into_iter().map(|c| c.expect("complete")).collect();
        Ok(Some(VertexColoring::new(colors)))
    } else {
        Ok(None)
    }
}

fn greedy_clique(g: &Multigraph) -> usize {
    let n = g.order();
    let mut best = usize::from(n > 0);
    for s in 0..n {
        let mut clique = vec![s];
        let mut cand = g.neighbors(s);
        cand.sort_by_key(|&v| std::cmp::Reverse(g.neighbors(v).len()));
        for v in cand {
            if clique.iter().all(|&u| g.adjacent(u, v)) {
                clique.push(v);
            }
        }
        best = best.max(clique.len());
    }
    best
}

pub fn chromatic_number_exact(g: &Multigraph) -> Result<VertexColoring> {
    chromatic_number_exact_with(g, &SearchControl::new())
}

/// Minimum proper vertex colouring, with a witness.
pub fn chromatic_number_exact_with(g: &Multigraph, ctl: &SearchControl) -> Result<VertexColoring> {
    g.require_loopless()?;
    let mut k = greedy_clique(g);
    loop {
        if let Some(c) = k_vertex_coloring(g, k, ctl)? {
            return Ok(c);
        }
        k += 1;
    }
}

// ------------------------------------------------------------------- edges

struct EdgeSearch<'a> {
    ends: Vec<(Vertex, Vertex)>,
    full: u64,
    used: Vec<u64>,
    color: Vec<Option<usize>>,
    ctl: &'a SearchControl,
}

impl EdgeSearch<'_> {
    fn available(&self, e: EdgeId) -> u64 {
        let (a, b) = self.ends[e];
        self.full & !(self.used[a] | self.used[b])
    }

    /// Uncoloured edge with the fewest available colours, lowest id first.
    fn pick(&self) -> Option<(EdgeId, u64)> {
        let mut best: Option<(u32, EdgeId, u64)> = None;
        for e in 0..self.ends.len() {
            if self.color[e].is_some() {
                continue;
            }
            let avail = self.available(e);
            let count = avail.count_ones();
            if best.is_none_or(|(bc, _, _)| count < bc) {
                best = Some((count, e, avail));
                if count == 0 {
                    break;
                }
            }
        }
        best.map(|(_, e, a)| (e, a))
    }

    fn run(&mut self, max_used: Option<usize>) -> Result<bool> {
        self.ctl.tick()?;
        let Some((e, avail)) = self.pick() else {
            return Ok(true);
        };
        let (a, b) = self.ends[e];
        let limit = max_used.map_or(1, |m| m + 2);
        for c in 0..limit.min(64) {
            if avail & (1 << c) == 0 {
                continue;
            }
            self.color[e] = Some(c);
            self.used[a] |= 1 << c;
            self.used[b] |= 1 << c;
            if self.run(Some(max_used.map_or(c, |m| m.max(c))))? {
                return Ok(true);
            }
            self.used[a] &= !(1 << c);
            self.used[b] &= !(1 << c);
            self.color[e] = None;
        }
        Ok(false)
    }
}

/// A proper edge colouring with at most `k` colours (`k <= 64`), if one
/// exists.
pub fn k_edge_coloring(g: &Multigraph, k: usize, ctl: &SearchControl) -> Result<Option<EdgeColoring>> {
    g.require_loopless()?;
    Caps::check("chromatic index", Caps::current().chromatic_index_size, g.size())?;
    if k > 64 {
        return Err(Error::Precondition("edge colouring search supports at most 64 colours".into()));
    }
    if g.size() == 0 {
        return Ok(Some(EdgeColoring::new(Vec::new())));
    }
    if g.max_valency() > k {
        return Ok(None);
    }
    let mut search = EdgeSearch {
        ends: g.edges().to_vec(),
        full: if k == 64 { u64::MAX } else { (1u64 << k) - 1 },
        used: vec![0; g.order()],
        color: vec![None; g.size()],
        ctl,
    };
    if search.run(None)? {
        let colors = search.color.into_iter().map(|c| c.expect("complete")).collect();
        Ok(Some(EdgeColoring::new(colors)))
    } else {
        Ok(None)
    }
}

pub fn chromatic_index_exact(g: &Multigraph) -> Result<EdgeColoring> {
    chromatic_index_exact_with(g, &SearchControl::new())
}

/// Minimum proper edge colouring, with a witness.
pub fn chromatic_index_exact_with(g: &Multigraph, ctl: &SearchControl) -> Result<EdgeColoring> {
    g.require_loopless()?;
    Caps::check("chromatic index", Caps::current().chromatic_index_size, g.size())?;
    let mut k = g.max_valency();
    loop {
        if let Some(c) = k_edge_coloring(g, k, ctl)? {
            return Ok(c);
        }
        k += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generators::*;

    #[test]
    fn chromatic_numbers() {
        let k3 = complete(3);
        let c = chromatic_number_exact(&k3).unwrap();
        assert_eq!(c.count, 3);
        assert!(c.is_proper(&k3));
        assert_eq!(chromatic_number_exact(&cycle(6)).unwrap().count, 2);
        assert_eq!(chromatic_number_exact(&cycle(5)).unwrap().count, 3);
        assert_eq!(chromatic_number_exact(&petersen()).unwrap().count, 3);
        assert_eq!(chromatic_number_exact(&Multigraph::new(3)).unwrap().count, 1);
        let looped = Multigraph::from_edges(1, [(0, 0)]).unwrap();
        assert_eq!(chromatic_number_exact(&looped), Err(Error::LoopPresent(0)));
    }

    #[test]
    fn chromatic_indices() {
        for (g, want) in [(complete(3), 3), (cycle(6), 2), (complete(4), 3), (petersen(), 4), (complete(5), 5)] {
            let c = chromatic_index_exact(&g).unwrap();
            assert_eq!(c.count, want);
            assert!(c.is_proper(&g));
        }
        // Shannon multigraph: three double edges on a triangle
        let shannon = Multigraph::from_edges(3, [(0, 1), (0, 1), (1, 2), (1, 2), (0, 2), (0, 2)]).unwrap();
        assert_eq!(chromatic_index_exact(&shannon).unwrap().count, 6);
    }

    #[test]
    fn improper_colorings_rejected() {
        let g = path(3);
        assert!(!EdgeColoring::new(vec![0, 0]).is_proper(&g));
        assert!(EdgeColoring::new(vec![0, 1]).is_proper(&g));
        assert!(!VertexColoring::new(vec![0, 0, 1]).is_proper(&g));
    }
}
