//! Expanding a walk of the source into a walk of the truncation: each source
//! edge becomes its matching edge, and each pass through a vertex becomes a
//! path inside that vertex's constituent.

use std::collections::VecDeque;

use serde::Serialize;

use super::Truncation;
use crate::error::{Error, Result};
use crate::graph::{hamilton_path, Multigraph, Vertex, Walk};

/// One pass of the walk through a source vertex. For a closed walk the pass
/// through the start vertex (entering by the last edge, leaving by the
/// first) is listed first with `index` 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Visit {
    pub vertex: Vertex,
    pub index: usize,
    pub entry: Vertex,
    pub exit: Vertex,
    /// First listed visit of this source vertex.
    pub first: bool,
}

pub struct VisitContext<'a> {
    pub visit: &'a Visit,
    /// Cluster vertices needed by other visits or by the ends of an open walk.
    pub reserved: &'a [Vertex],
    /// Cluster vertices already on the paths of earlier visits.
    pub used: &'a [Vertex],
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Expansion {
    /// Shortest constituent path for every visit.
    Shortest,
    /// The first visit of each vertex runs through every cluster vertex no
    /// other visit needs; later visits take shortest paths.
    Spanning,
}

pub fn expand_walk(t: &Truncation, w: &Walk, strategy: Expansion) -> Result<Walk> {
    expand_walk_with(t, w, |t, ctx| match strategy {
        Expansion::Shortest => shortest_connector(t, ctx),
        Expansion::Spanning if ctx.visit.first => spanning_connector(t, ctx),
        Expansion::Spanning => shortest_connector(t, ctx),
    })
}

/// Expands `w` using `connect` to choose the constituent path of each visit.
/// Returned paths are checked: they must run from entry to exit along
/// constituent edges without touching reserved or used vertices.
pub fn expand_walk_with<F>(t: &Truncation, w: &Walk, mut connect: F) -> Result<Walk>
where
    F: FnMut(&Truncation, &VisitContext) -> Option<Vec<Vertex>>,
{
    let x = t.source();
    w.validate(x)?;
    if w.is_empty() {
        return Err(Error::InvalidWalk("walk has no edges".into()));
    }
    let lm = t.matching();
    let vs = w.vertices();
    let k = w.len();
    // (leaving end, entering end) of each walk edge
    let ends: Vec<(Vertex, Vertex)> = (0..k)
        .map(|i| lm.end_at(w.edges()[i], vs[i]).expect("validated walk"))
        .collect();

    let closed = w.is_closed();
    let mut visits = Vec::with_capacity(k);
    if closed {
        visits.push((vs[0], 0, ends[k - 1].1, ends[0].0));
    }
    for i in 1..k {
        visits.push((vs[i], i, ends[i - 1].1, ends[i].0));
    }
    let mut seen_vertex = vec![false; x.order()];
    let visits: Vec<Visit> = visits
        .into_iter()
        .map(|(vertex, index, entry, exit)| Visit {
            vertex,
            index,
            entry,
            exit,
            first: !std::mem::replace(&mut seen_vertex[vertex], true),
        })
        .collect();
    let terminals: Vec<Vertex> = if closed { Vec::new() } else { vec![ends[0].0, ends[k - 1].1] };

    let mut claimed = vec![false; lm.order()];
    let endpoint_lists = visits
        .iter()
        .map(|v| if v.entry == v.exit { vec![v.entry] } else { vec![v.entry, v.exit] })
        .chain(terminals.iter().map(|&y| vec![y]));
    for list in endpoint_lists {
        for y in list {
            if std::mem::replace(&mut claimed[y], true) {
                return Err(Error::InvalidWalk(format!("walk passes matching vertex {y} twice")));
            }
        }
    }

    let mut used: Vec<Vec<Vertex>> = vec![Vec::new(); x.order()];
    let mut paths = Vec::with_capacity(visits.len());
    for (i, visit) in visits.iter().enumerate() {
        let v = visit.vertex;
        let reserved: Vec<Vertex> = visits
            .iter()
            .enumerate()
            .filter(|&(j, other)| j != i && other.vertex == v)
            .flat_map(|(_, other)| [other.entry, other.exit])
            .chain(terminals.iter().copied().filter(|&y| lm.label(y) == v))
            .collect();
        let ctx = VisitContext {
            visit,
            reserved: &reserved,
            used: &used[v],
        };
        let path = connect(t, &ctx).ok_or(Error::NoConnectingPath { vertex: v })?;
        check_connector(t, &ctx, &path)?;
        used[v].extend_from_slice(&path);
        paths.push(path);
    }

    let mut out = Walk::new(ends[0].0);
    let push_path = |out: &mut Walk, path: &[Vertex]| {
        for pair in path.windows(2) {
            let e = t.constituent_edge_between(pair[0], pair[1]).expect("checked connector");
            out.push(e, pair[1]);
        }
    };
    // with a closed walk the wrap-around visit is stored first but walked last
    let offset = usize::from(closed);
    for i in 0..k {
        out.push(t.matching_edge(w.edges()[i]), ends[i].1);
        if i + 1 < k {
            push_path(&mut out, &paths[i + offset]);
        } else if closed {
            push_path(&mut out, &paths[0]);
        }
    }
    Ok(out)
}

fn check_connector(t: &Truncation, ctx: &VisitContext, path: &[Vertex]) -> Result<()> {
    let visit = ctx.visit;
    let bad = |why: &str| {
        Err(Error::InvalidWalk(format!(
            "connector for visit {} at vertex {}: {why}",
            visit.index, visit.vertex
        )))
    };
    if path.first() != Some(&visit.entry) || path.last() != Some(&visit.exit) {
        return bad("wrong ends");
    }
    let mut on_path = Vec::with_capacity(path.len());
    for &y in path {
        if y >= t.graph().order() || t.cluster_of(y) != visit.vertex {
            return bad("leaves the cluster");
        }
        if on_path.contains(&y) || ctx.reserved.contains(&y) || ctx.used.contains(&y) {
            return bad("repeats a vertex");
        }
        on_path.push(y);
    }
    if path.windows(2).any(|p| t.constituent_edge_between(p[0], p[1]).is_none()) {
        return bad("not along constituent edges");
    }
    Ok(())
}

fn shortest_connector(t: &Truncation, ctx: &VisitContext) -> Option<Vec<Vertex>> {
    let (s, target) = (ctx.visit.entry, ctx.visit.exit);
    if s == target {
        return Some(vec![s]);
    }
    let y = t.graph();
    let blocked = |u: Vertex| ctx.reserved.contains(&u) || ctx.used.contains(&u);
    let mut parent = vec![usize::MAX; y.order()];
    parent[s] = s;
    let mut queue = VecDeque::from([s]);
    while let Some(u) = queue.pop_front() {
        for &e in y.incident(u) {
            if t.is_matching_edge(e) {
                continue;
            }
            let w = y.other_end(e, u);
            if parent[w] != usize::MAX || blocked(w) {
                continue;
            }
            parent[w] = u;
            if w == target {
                let mut path = vec![target];
                while *path.last().expect("non-empty") != s {
                    path.push(parent[*path.last().expect("non-empty")]);
                }
                path.reverse();
                return Some(path);
            }
            queue.push_back(w);
        }
    }
    None
}

fn spanning_connector(t: &Truncation, ctx: &VisitContext) -> Option<Vec<Vertex>> {
    let visit = ctx.visit;
    let free: Vec<Vertex> = t
        .cluster(visit.vertex)
        .iter()
        .copied()
        .filter(|y| !ctx.reserved.contains(y) && !ctx.used.contains(y))
        .collect();
    if visit.entry == visit.exit {
        return (free.len() == 1).then(|| vec![visit.entry]);
    }
    let mut local = Multigraph::new(free.len());
    for (i, &a) in free.iter().enumerate() {
        for (j, &b) in free.iter().enumerate().skip(i + 1) {
            if t.constituent_edge_between(a, b).is_some() {
                local.add_edge(i, j).expect("in range");
            }
        }
    }
    let s = free.iter().position(|&y| y == visit.entry)?;
    let e = free.iter().position(|&y| y == visit.exit)?;
    let walk = hamilton_path(&local, s, e).ok()??;
    Some(walk.vertices().iter().map(|&i| free[i]).collect())
}
