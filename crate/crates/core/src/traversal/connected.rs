//! Hamilton paths between any two vertices of a truncation of K_n whose
//! constituents are Hamilton-connected.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{hamilton_path, is_hamilton_connected, Multigraph, Vertex, Walk};
use crate::truncation::{expand_walk_with, Truncation, VisitContext};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PathMethod {
    /// Built by routing a Hamilton path of the source through the clusters.
    Construction,
    /// The routing has no suitable source path (only possible for K_4 with
    /// both matching partners in the same third cluster), so the path came
    /// from exact search.
    ExactSearch,
}

fn require_complete_source(x: &Multigraph) -> Result<usize> {
    let n = x.order();
    let complete = x.is_simple() && x.size() == n * n.saturating_sub(1) / 2;
    if !complete {
        return Err(Error::Precondition("source must be a complete graph".into()));
    }
    if n <= 3 {
        return Err(Error::OrderTooSmall { needed: 4, order: n });
    }
    Ok(n)
}

/// Hamilton path of constituent `v` from `a` to `b` (vertices of Y).
fn constituent_path(t: &Truncation, v: Vertex, a: Vertex, b: Vertex) -> Result<Walk> {
    let lm = t.matching();
    let local = hamilton_path(t.constituent(v), lm.local_index(a), lm.local_index(b))?
        .ok_or(Error::NoConnectingPath { vertex: v })?;
    let cluster = t.cluster(v);
    let ids = t.constituent_edges(v);
    let mut w = Walk::new(cluster[local.start()]);
    for (i, &e) in local.edges().iter().enumerate() {
        w.push(ids[e], cluster[local.vertices()[i + 1]]);
    }
    Ok(w)
}

/// Expands the source path `p` (at least two vertices), running every
/// interior constituent through all of its vertices.
fn expand_spanning(t: &Truncation, p: &[Vertex]) -> Result<Walk> {
    let walk = Walk::through(t.source(), p).expect("complete source");
    expand_walk_with(t, &walk, |t, ctx: &VisitContext| {
        constituent_path(t, ctx.visit.vertex, ctx.visit.entry, ctx.visit.exit)
            .ok()
            .map(|w| w.vertices().to_vec())
    })
}

/// Hamilton path of Y from `x` to `y`, following the two routing cases:
/// ends in different clusters, or both ends in one cluster with a detour
/// through every other cluster.
pub fn hamilton_connected_path(t: &Truncation, x: Vertex, y: Vertex) -> Result<(Walk, PathMethod)> {
    let g = t.graph();
    g.check_vertex(x)?;
    g.check_vertex(y)?;
    if x == y {
        return Err(Error::SameEndpoints);
    }
    let n = require_complete_source(t.source())?;
    for v in 0..n {
        if !is_hamilton_connected(t.constituent(v))? {
            return Err(Error::BadConstituent {
                vertex: v,
                reason: "not Hamilton-connected".into(),
            });
        }
    }
    let lm = t.matching();
    // source edge of a matching vertex and its far label
    let partner = |a: Vertex| {
        let e = (0..lm.size()).find(|&e| lm.ends(e).contains(&a)).expect("matched");
        let [p, q] = lm.ends(e);
        lm.label(if p == a { q } else { p })
    };
    let (u, v) = (t.cluster_of(x), t.cluster_of(y));
    let walk = if u != v {
        let (w, z) = (partner(x), partner(y));
        let middle: Vec<Vertex> = (0..n).filter(|&a| a != u && a != v).collect();
        let Some(order) = arrange(&middle, w, z) else {
            let path = hamilton_path(g, x, y)?.ok_or(Error::ConstructionFailed(
                "no Hamilton path between the requested vertices".into(),
            ))?;
            return Ok((path, PathMethod::ExactSearch));
        };
        let mut p = vec![u];
        p.extend(order);
        p.push(v);
        let inner = expand_spanning(t, &p)?;
        let mut out = constituent_path(t, u, x, inner.start())?;
        out.append(&inner)?;
        out.append(&constituent_path(t, v, inner.end(), y)?)?;
        out
    } else {
        let q = constituent_path(t, u, x, y)?;
        let before_y = q.vertices()[q.len() - 1];
        let z = partner(before_y);
        let w = partner(y);
        let mut p = vec![u, z];
        p.extend((0..n).filter(|&a| a != u && a != z && a != w));
        p.push(w);
        let inner = expand_spanning(t, &p)?;
        let mut out = Walk::from_parts(q.vertices()[..q.len()].to_vec(), q.edges()[..q.len() - 1].to_vec())?;
        out.append(&inner)?;
        // inside the last cluster, finish at the partner of y
        let w_end = lm.end_at(
            (0..lm.size()).find(|&e| lm.ends(e).contains(&y)).expect("matched"),
            w,
        );
        let (far, _) = w_end.expect("edge joins u and w");
        out.append(&constituent_path(t, w, inner.end(), far)?)?;
        let e = g.edges_between(far, y).find(|&e| t.is_matching_edge(e)).expect("matching edge");
        out.push(e, y);
        out
    };
    if !walk.is_hamilton_path(g) || walk.start() != x || walk.end() != y {
        return Err(Error::InvalidWalk("routed path is not a Hamilton path".into()));
    }
    Ok((walk, PathMethod::Construction))
}

/// Orders `middle` so that it does not start with `w` or end with `z`.
fn arrange(middle: &[Vertex], w: Vertex, z: Vertex) -> Option<Vec<Vertex>> {
    let (first, last) = middle.iter().filter(|&&a| a != w).find_map(|&first| {
        middle
            .iter()
            .find(|&&a| a != z && a != first)
            .map(|&last| (first, last))
    })?;
    let mut order = vec![first];
    order.extend(middle.iter().copied().filter(|&a| a != first && a != last));
    order.push(last);
    Some(order)
}
