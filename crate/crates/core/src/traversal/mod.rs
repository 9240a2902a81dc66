//! Euler tours, Hamilton cycles and paths, and Hamilton decompositions of
//! truncations.

mod connected;
mod decompose;
mod walecki;

pub use connected::{hamilton_connected_path, PathMethod};
pub use decompose::{find_hamilton_decomposition, hamilton_decompose_truncation};
pub use walecki::{walecki_cycle_decomposition, walecki_path_decomposition, PathDecomposition};

use std::collections::VecDeque;

use serde::Serialize;

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::graph::{euler_tour, hamilton_cycle, is_perfect_matching, EdgeId, Multigraph, Walk};
use crate::report::VerificationReport;
use crate::truncation::{complete_truncation, expand_walk, Expansion, Truncation};

/// Hamilton cycles of a host graph and, for odd valency, one perfect
/// matching, together using every edge exactly once.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HamiltonDecomposition {
    pub cycles: Vec<Walk>,
    pub matching: Option<Vec<EdgeId>>,
}

impl HamiltonDecomposition {
    pub fn validate(&self, g: &Multigraph) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidDecomposition(msg));
        let mut used = vec![false; g.size()];
        for (i, c) in self.cycles.iter().enumerate() {
            if !c.is_hamilton_cycle(g) {
                return bad(format!("cycle {i} is not a Hamilton cycle"));
            }
            for &e in c.edges() {
                if std::mem::replace(&mut used[e], true) {
                    return bad(format!("edge {e} used twice"));
                }
            }
        }
        if let Some(m) = &self.matching {
            if !is_perfect_matching(g, m) {
                return bad("matching is not perfect".into());
            }
            for &e in m {
                if std::mem::replace(&mut used[e], true) {
                    return bad(format!("edge {e} used twice"));
                }
            }
        }
        if let Some(e) = used.iter().position(|&u| !u) {
            return bad(format!("edge {e} is not covered"));
        }
        Ok(())
    }
}

fn components_eulerian(g: &Multigraph) -> bool {
    g.components().iter().all(|c| {
        let (sub, _) = g.induced_subgraph(c);
        euler_tour(&sub).is_some()
    })
}

/// Every component of Y is eulerian exactly when the source is eulerian
/// and every constituent valency is odd. The left side is decided by
/// running Hierholzer on each component.
pub fn check_euler_theorem(t: &Truncation, subject: &str) -> Result<VerificationReport> {
    let x = t.source();
    if !x.is_connected() {
        return Err(Error::Disconnected);
    }
    let lhs = components_eulerian(t.graph());
    let x_eulerian = euler_tour(x).is_some();
    let odd = t
        .constituents()
        .graphs()
        .iter()
        .all(|c| c.valencies().iter().all(|d| d % 2 == 1));
    let rhs = x_eulerian && odd;
    Ok(VerificationReport::new("eulerian-truncation", subject)
        .fact("components_eulerian", lhs)
        .fact("source_eulerian", x_eulerian)
        .fact("constituent_valencies_odd", odd)
        .require(lhs == rhs, (lhs, rhs)))
}

/// A connected spanning sub-multigraph with every valency even, as a list
/// of edge ids, or `None` when exhaustive search over the cycle space finds
/// none.
pub fn spanning_eulerian_subgraph(x: &Multigraph) -> Result<Option<Vec<EdgeId>>> {
    Caps::check("eulerian", Caps::current().eulerian_size, x.size())?;
    let n = x.order();
    if n <= 1 {
        return Ok(Some(Vec::new()));
    }
    if !x.is_connected() || (0..n).any(|v| x.valency(v) < 2) {
        return Ok(None);
    }
    // fundamental cycles of a breadth-first spanning tree
    let mut parent_edge = vec![usize::MAX; n];
    let mut depth = vec![0; n];
    let mut seen = vec![false; n];
    let mut tree = vec![false; x.size()];
    seen[0] = true;
    let mut queue = VecDeque::from([0]);
    while let Some(v) = queue.pop_front() {
        for &e in x.incident(v) {
            let w = x.other_end(e, v);
            if !seen[w] {
                seen[w] = true;
                tree[e] = true;
                parent_edge[w] = e;
                depth[w] = depth[v] + 1;
                queue.push_back(w);
            }
        }
    }
    let mut basis: Vec<u64> = Vec::new();
    for e in (0..x.size()).filter(|&e| !tree[e]) {
        let mut mask = 1u64 << e;
        let (mut a, mut b) = x.endpoints(e);
        while a != b {
            if depth[a] < depth[b] {
                std::mem::swap(&mut a, &mut b);
            }
            let pe = parent_edge[a];
            mask ^= 1 << pe;
            a = x.other_end(pe, a);
        }
        basis.push(mask);
    }
    let k = basis.len();
    if x.size() > 64 || k >= 64 {
        return Err(Error::CapExceeded {
            search: "eulerian",
            cap: 63,
            actual: x.size(),
        });
    }
    let mut mask = 0u64;
    for step in 1u64..(1u64 << k) {
        // Gray code: flip the basis element at the lowest set bit of step
        mask ^= basis[step.trailing_zeros() as usize];
        if spans_connected(x, mask) {
            return Ok(Some((0..x.size()).filter(|&e| mask >> e & 1 == 1).collect()));
        }
    }
    Ok(None)
}

fn spans_connected(x: &Multigraph, mask: u64) -> bool {
    let n = x.order();
    let mut seen = vec![false; n];
    seen[0] = true;
    let mut stack = vec![0];
    let mut reached = 1;
    while let Some(v) = stack.pop() {
        for &e in x.incident(v) {
            if mask >> e & 1 == 0 {
                continue;
            }
            let w = x.other_end(e, v);
            if !seen[w] {
                seen[w] = true;
                reached += 1;
                stack.push(w);
            }
        }
    }
    reached == n
}

/// A Hamilton cycle of the complete truncation of `x`, built by expanding
/// an Euler tour of a spanning eulerian subgraph. `None` exactly when no
/// such subgraph exists.
pub fn hamilton_cycle_of_complete_truncation(x: &Multigraph) -> Result<Option<(Truncation, Walk)>> {
    if !x.is_connected() {
        return Err(Error::Disconnected);
    }
    let t = complete_truncation(x)?;
    let Some(edges) = spanning_eulerian_subgraph(x)? else {
        return Ok(None);
    };
    let sub = x.edge_subgraph(&edges);
    let tour = euler_tour(&sub).expect("connected with even valencies");
    let mut walk = Walk::new(tour.start());
    for (i, &e) in tour.edges().iter().enumerate() {
        walk.push(edges[e], tour.vertices()[i + 1]);
    }
    let cycle = expand_walk(&t, &walk, Expansion::Spanning)?;
    Ok(Some((t, cycle)))
}

/// The complete truncation is hamiltonian exactly when the source has a
/// spanning eulerian subgraph. The right side uses the constructive
/// expansion, the left side the exact Hamilton search.
pub fn check_hamiltonicity_theorem(x: &Multigraph, subject: &str) -> Result<VerificationReport> {
    let constructed = hamilton_cycle_of_complete_truncation(x)?;
    let t = complete_truncation(x)?;
    let searched = hamilton_cycle(t.graph())?;
    let mut report = VerificationReport::new("complete-truncation-hamiltonian", subject)
        .fact("spanning_eulerian_subgraph", constructed.is_some())
        .fact("hamiltonian", searched.is_some());
    if let Some((_, cycle)) = &constructed {
        report = report.require(cycle.is_hamilton_cycle(t.graph()), cycle);
    }
    Ok(report.require(constructed.is_some() == searched.is_some(), &searched))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generators::*;
    use crate::truncation::{matching_constituent_truncation, spanning_path_truncation};

    #[test]
    fn euler_theorem_examples() {
        let t = matching_constituent_truncation(&cycle(5)).unwrap();
        let r = check_euler_theorem(&t, "C5").unwrap();
        assert!(r.passed());
        assert_eq!(r.facts["components_eulerian"], true);

        let t = complete_truncation(&complete(5)).unwrap();
        let r = check_euler_theorem(&t, "K5").unwrap();
        assert!(r.passed());
        assert_eq!(r.facts["components_eulerian"], true);

        let t = complete_truncation(&complete(4)).unwrap();
        let r = check_euler_theorem(&t, "K4").unwrap();
        assert!(r.passed());
        assert_eq!(r.facts["components_eulerian"], false);

        let t = spanning_path_truncation(&complete(2).disjoint_union(&complete(2))).unwrap();
        assert_eq!(check_euler_theorem(&t, "2K2").unwrap_err(), Error::Disconnected);
    }

    #[test]
    fn spanning_eulerian_examples() {
        let k4 = complete(4);
        let s = spanning_eulerian_subgraph(&k4).unwrap().unwrap();
        let sub = k4.edge_subgraph(&s);
        assert!(sub.valencies().iter().all(|&d| d > 0 && d % 2 == 0) && sub.is_connected());
        assert_eq!(spanning_eulerian_subgraph(&petersen()).unwrap(), None);
        assert_eq!(spanning_eulerian_subgraph(&star(4)).unwrap(), None);
        assert_eq!(spanning_eulerian_subgraph(&path(2)).unwrap(), None);
        assert!(matches!(
            spanning_eulerian_subgraph(&complete(8)),
            Err(Error::CapExceeded { search: "eulerian", .. })
        ));
    }

    #[test]
    fn hamilton_cycles_of_complete_truncations() {
        let (t, c) = hamilton_cycle_of_complete_truncation(&complete(4)).unwrap().unwrap();
        assert_eq!(c.len(), 12);
        assert!(c.is_hamilton_cycle(t.graph()));
        for n in 3..7 {
            let (t, c) = hamilton_cycle_of_complete_truncation(&cycle(n)).unwrap().unwrap();
            assert!(c.is_hamilton_cycle(t.graph()));
        }
        assert!(hamilton_cycle_of_complete_truncation(&petersen()).unwrap().is_none());
        // multigraph source with a doubled edge
        let x = Multigraph::from_edges(3, [(0, 1), (0, 1), (1, 2)]).unwrap();
        assert!(hamilton_cycle_of_complete_truncation(&x).unwrap().is_none());
    }

    #[test]
    fn hamiltonicity_theorem_reports() {
        for x in [complete(4), complete(5), prism(3), hypercube(3), star(3), multi_edge(3)] {
            assert!(check_hamiltonicity_theorem(&x, "x").unwrap().passed());
        }
    }
}
