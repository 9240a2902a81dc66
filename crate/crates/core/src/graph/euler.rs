use super::{EdgeId, Multigraph, Vertex, Walk};
use crate::error::{Error, Result};

fn eulerian(g: &Multigraph) -> bool {
    g.valencies().iter().all(|d| d % 2 == 0) && g.edges_connected()
}

/// Hierholzer from `start`; assumes `g` is eulerian and `start` carries an
/// edge. Edges leave each vertex in ascending id order.
fn hierholzer(g: &Multigraph, start: Vertex) -> Walk {
    let mut used = vec![false; g.size()];
    let mut next = vec![0usize; g.order()];
    let mut stack: Vec<(Vertex, Option<EdgeId>)> = vec![(start, None)];
    let mut circuit = Vec::with_capacity(g.size() + 1);
    while let Some(&(v, _)) = stack.last() {
        let inc = g.incident(v);
        while next[v] < inc.len() && used[inc[next[v]]] {
            next[v] += 1;
        }
        if let Some(&e) = inc.get(next[v]) {
            used[e] = true;
            stack.push((g.other_end(e, v), Some(e)));
        } else {
            circuit.push(stack.pop().expect("non-empty"));
        }
    }
    circuit.reverse();
    let mut walk = Walk::new(circuit[0].0);
    for &(v, e) in &circuit[1..] {
        walk.push(e.expect("only the root lacks an entry edge"), v);
    }
    walk
}

/// A closed trail using every edge once, or `None` when the edges are not
/// connected or some valency is odd. The edgeless graph of positive order
/// gets the trivial walk at vertex 0.
pub fn euler_tour(g: &Multigraph) -> Option<Walk> {
    if g.size() == 0 {
        return (g.order() > 0).then(|| Walk::new(0));
    }
    if !eulerian(g) {
        return None;
    }
    let start = (0..g.order()).find(|&v| g.valency(v) > 0)?;
    Some(hierholzer(g, start))
}

/// A closed Euler tour that leaves `v` along `first` and returns to `v`
/// along `last`, when one exists.
pub fn euler_tour_through(
    g: &Multigraph,
    first: EdgeId,
    last: EdgeId,
    v: Vertex,
) -> Result<Option<Walk>> {
    g.check_vertex(v)?;
    for e in [first, last] {
        g.check_edge(e)?;
        if !g.is_incident(e, v) {
            return Err(Error::NotIncident { edge: e, vertex: v });
        }
    }
    if first == last {
        let single_loop = g.size() == 1 && g.is_loop(first);
        return Ok(single_loop.then(|| {
            let mut w = Walk::new(v);
            w.push(first, v);
            w
        }));
    }
    let u = g.other_end(first, v);
    let w = g.other_end(last, v);

    // An Euler trail u -> w in g - {first, last} closes up through a
    // virtual edge w -> u.
    let (mut h, origin) = g.without_edges(&[first, last]);
    let virtual_edge = h.add_edge(w, u).expect("in range");
    if !eulerian(&h) {
        return Ok(None);
    }
    let mut tour = hierholzer(&h, u);
    let pos = |t: &Walk| t.edges().iter().position(|&e| e == virtual_edge).expect("tour covers all");
    let mut i = pos(&tour);
    if tour.vertices()[i] != w {
        tour = tour.reversed();
        i = pos(&tour);
    }
    // rotate so the virtual edge (w -> u) comes last, then drop it
    let k = tour.len();
    let mut walk = Walk::new(v);
    walk.push(first, u);
    for step in 1..k {
        let j = (i + step) % k;
        walk.push(origin[tour.edges()[j]], tour.vertices()[j + 1]);
    }
    debug_assert_eq!(walk.end(), w);
    walk.push(last, v);
    Ok(Some(walk))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generators::*;

    #[test]
    fn examples() {
        let c5 = cycle(5);
        let t = euler_tour(&c5).unwrap();
        assert!(t.is_euler_tour(&c5));
        assert!(euler_tour(&complete(4)).is_none());
        let k5 = complete(5);
        let t = euler_tour(&k5).unwrap();
        assert_eq!(t.len(), 10);
        assert!(t.is_euler_tour(&k5));
        assert!(euler_tour(&perfect_matching(2).disjoint_union(&cycle(3))).is_none());
    }

    #[test]
    fn loops_and_parallels() {
        let g = Multigraph::from_edges(2, [(0, 0), (0, 1), (1, 0), (1, 1)]).unwrap();
        let t = euler_tour(&g).unwrap();
        assert!(t.is_euler_tour(&g));
        // isolated vertices are ignored
        let mut h = cycle(3);
        h.add_vertex();
        assert!(euler_tour(&h).unwrap().is_euler_tour(&h));
    }

    #[test]
    fn through_forced_cycle() {
        let g = cycle(4);
        let t = euler_tour_through(&g, 0, 3, 0).unwrap().unwrap();
        assert!(t.is_euler_tour(&g));
        assert_eq!(t.start(), 0);
        assert_eq!(t.edges()[0], 0);
        assert_eq!(*t.edges().last().unwrap(), 3);
    }

    #[test]
    fn through_bowtie_must_alternate() {
        // triangles 0-1-2 and 0-3-4 sharing vertex 0
        let g = Multigraph::from_edges(5, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)]).unwrap();
        assert!(euler_tour_through(&g, 0, 2, 0).unwrap().is_none());
        let t = euler_tour_through(&g, 0, 5, 0).unwrap().unwrap();
        assert!(t.is_euler_tour(&g));
    }

    #[test]
    fn through_rejects_non_incident() {
        let g = cycle(4);
        assert_eq!(
            euler_tour_through(&g, 1, 3, 0),
            Err(Error::NotIncident { edge: 1, vertex: 0 })
        );
    }
}
