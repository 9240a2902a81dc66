use std::ops::ControlFlow;

use super::walecki::walecki_path_decomposition;
use super::HamiltonDecomposition;
use crate::caps::{Caps, SearchControl};
use crate::error::{Error, Result};
use crate::graph::{for_each_hamilton_cycle, for_each_perfect_matching, EdgeId, Multigraph, Vertex, Walk};
use crate::truncation::{complete_truncation, expand_walk_with, Truncation};

/// Lifts a Hamilton decomposition of `x` to its complete truncation. Each
/// cycle passes every cluster through one pair of vertices; the cluster's
/// complete constituent is split into Hamilton paths joining those pairs,
/// and each cycle of `x` is expanded along its own paths.
pub fn hamilton_decompose_truncation(
    x: &Multigraph,
    hd: &HamiltonDecomposition,
) -> Result<(Truncation, HamiltonDecomposition)> {
    hd.validate(x)?;
    let t = complete_truncation(x)?;
    let lm = t.matching();
    let n = x.order();
    let cycles = hd.cycles.len();

    // pairs[v][i]: local (entry, exit) of cycle i at v
    let mut pairs = vec![vec![(0, 0); cycles]; n];
    for (i, c) in hd.cycles.iter().enumerate() {
        let k = c.len();
        for j in 0..k {
            let v = c.vertices()[j];
            let entry = lm.end_at(c.edges()[(j + k - 1) % k], v).expect("incident").0;
            let exit = lm.end_at(c.edges()[j], v).expect("incident").0;
            pairs[v][i] = (lm.local_index(entry), lm.local_index(exit));
        }
    }
    let mut distinguished = vec![None; n];
    if let Some(m) = &hd.matching {
        for &e in m {
            for v in [x.endpoints(e).0, x.endpoints(e).1] {
                distinguished[v] = Some(lm.local_index(lm.end_at(e, v).expect("incident").0));
            }
        }
    }
    let mut paths: Vec<Vec<Vec<Vertex>>> = Vec::with_capacity(n);
    let mut matching = Vec::new();
    for v in 0..n {
        let size = t.cluster(v).len();
        let dec = walecki_path_decomposition(size, &pairs[v], distinguished[v])?;
        let cluster = t.cluster(v);
        paths.push(
            dec.paths
                .iter()
                .map(|p| p.iter().map(|&l| cluster[l]).collect())
                .collect(),
        );
        for &(a, b) in &dec.matching {
            matching.push(t.constituent_edge_between(cluster[a], cluster[b]).expect("complete constituent"));
        }
    }

    let mut y_cycles = Vec::with_capacity(cycles);
    for (i, c) in hd.cycles.iter().enumerate() {
        let lifted = expand_walk_with(&t, c, |_, ctx| Some(paths[ctx.visit.vertex][i].clone()))?;
        y_cycles.push(lifted);
    }
    let y_matching = hd.matching.as_ref().map(|m| {
        let mut all: Vec<EdgeId> = m.iter().map(|&e| t.matching_edge(e)).chain(matching).collect();
        all.sort_unstable();
        all
    });
    let out = HamiltonDecomposition {
        cycles: y_cycles,
        matching: y_matching,
    };
    out.validate(t.graph())?;
    Ok((t, out))
}

/// Exhaustive search for a Hamilton decomposition of a regular graph: a
/// perfect matching first when the valency is odd, then Hamilton cycles one
/// at a time. `None` certifies that none exists.
pub fn find_hamilton_decomposition(x: &Multigraph) -> Result<Option<HamiltonDecomposition>> {
    x.require_simple()?;
    Caps::check("hamilton", Caps::current().hamilton_order, x.order())?;
    let d = x.regular_valency().ok_or(Error::NotRegular)?;
    if x.order() < 3 || d < 2 {
        return Err(Error::Precondition("needs a regular graph of order >= 3 and valency >= 2".into()));
    }
    let ctl = SearchControl::new();
    let all: Vec<EdgeId> = (0..x.size()).collect();
    if d % 2 == 0 {
        return Ok(cycles_from(x, &all, &ctl)?.map(|cycles| HamiltonDecomposition { cycles, matching: None }));
    }
    let mut found = None;
    let mut failure = None;
    let _ = for_each_perfect_matching(x, |m| {
        let rest: Vec<EdgeId> = all.iter().copied().filter(|e| !m.contains(e)).collect();
        match cycles_from(x, &rest, &ctl) {
            Ok(Some(cycles)) => {
                found = Some(HamiltonDecomposition {
                    cycles,
                    matching: Some(m.to_vec()),
                });
                ControlFlow::Break(())
            }
            Ok(None) => ControlFlow::Continue(()),
            Err(err) => {
                failure = Some(err);
                ControlFlow::Break(())
            }
        }
    });
    match failure {
        Some(err) => Err(err),
        None => Ok(found),
    }
}

/// Splits the edges `rest` of `x` into Hamilton cycles, if possible.
fn cycles_from(x: &Multigraph, rest: &[EdgeId], ctl: &SearchControl) -> Result<Option<Vec<Walk>>> {
    if rest.is_empty() {
        return Ok(Some(Vec::new()));
    }
    let sub = x.edge_subgraph(rest);
    let mut result = None;
    let mut failure = None;
    // the lowest remaining edge lies on the next cycle
    let (a, b) = sub.endpoints(0);
    let _ = for_each_hamilton_cycle(&sub, ctl, |p| {
        let k = p.len();
        let uses_first = (0..k).any(|i| {
            let (u, v) = (p[i], p[(i + 1) % k]);
            (u, v) == (a, b) || (v, u) == (a, b)
        });
        if !uses_first {
            return ControlFlow::Continue(());
        }
        let mut vs = p.to_vec();
        vs.push(p[0]);
        let local = Walk::through(&sub, &vs).expect("cycle of sub");
        let mut walk = Walk::new(local.start());
        for (i, &e) in local.edges().iter().enumerate() {
            walk.push(rest[e], local.vertices()[i + 1]);
        }
        let remaining: Vec<EdgeId> = rest.iter().copied().filter(|e| !walk.edges().contains(e)).collect();
        match cycles_from(x, &remaining, ctl) {
            Ok(Some(mut more)) => {
                more.insert(0, walk);
                result = Some(more);
                ControlFlow::Break(())
            }
            Ok(None) => ControlFlow::Continue(()),
            Err(err) => {
                failure = Some(err);
                ControlFlow::Break(())
            }
        }
    })?;
    match failure {
        Some(err) => Err(err),
        None => Ok(result),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generators::*;
    use crate::traversal::walecki_cycle_decomposition;

    #[test]
    fn k5_lifts_to_two_cycles() {
        let x = complete(5);
        let hd = walecki_cycle_decomposition(5).unwrap();
        let (t, out) = hamilton_decompose_truncation(&x, &hd).unwrap();
        assert_eq!(t.graph().order(), 20);
        assert_eq!(t.graph().size(), 40);
        assert_eq!(out.cycles.len(), 2);
        assert!(out.matching.is_none());
    }

    #[test]
    fn k4_lifts_with_matching() {
        let x = complete(4);
        let hd = find_hamilton_decomposition(&x).unwrap().unwrap();
        assert_eq!(hd.cycles.len(), 1);
        let (t, out) = hamilton_decompose_truncation(&x, &hd).unwrap();
        assert_eq!(out.cycles.len(), 1);
        assert_eq!(out.matching.as_ref().unwrap().len(), 6);
        out.validate(t.graph()).unwrap();
    }

    #[test]
    fn cycle_lifts_to_double_cycle() {
        for n in 3..8 {
            let x = cycle(n);
            let hd = find_hamilton_decomposition(&x).unwrap().unwrap();
            let (t, out) = hamilton_decompose_truncation(&x, &hd).unwrap();
            assert_eq!(out.cycles.len(), 1);
            assert_eq!(out.cycles[0].len(), 2 * n);
            assert!(out.cycles[0].is_hamilton_cycle(t.graph()));
        }
    }

    #[test]
    fn search_examples() {
        let q3 = hypercube(3);
        let hd = find_hamilton_decomposition(&q3).unwrap().unwrap();
        hd.validate(&q3).unwrap();
        assert!(find_hamilton_decomposition(&petersen()).unwrap().is_none());
        let k33 = complete_bipartite(3, 3);
        find_hamilton_decomposition(&k33).unwrap().unwrap().validate(&k33).unwrap();
        assert_eq!(find_hamilton_decomposition(&path(3)).unwrap_err(), Error::NotRegular);
    }

    #[test]
    fn invalid_input_rejected() {
        let x = complete(5);
        let mut hd = walecki_cycle_decomposition(5).unwrap();
        hd.cycles.pop();
        assert!(matches!(
            hamilton_decompose_truncation(&x, &hd),
            Err(Error::InvalidDecomposition(_))
        ));
    }
}
