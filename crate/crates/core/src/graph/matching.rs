use std::ops::ControlFlow;

use super::{EdgeId, Multigraph};

/// Calls `visit` with every perfect matching (edge ids, ascending) until it
/// breaks. Parallel edges give distinct matchings.
pub fn for_each_perfect_matching<F>(g: &Multigraph, mut visit: F) -> ControlFlow<()>
where
    F: FnMut(&[EdgeId]) -> ControlFlow<()>,
{
    if g.order() % 2 == 1 {
        return ControlFlow::Continue(());
    }
    let mut covered = vec![false; g.order()];
    let mut chosen = Vec::with_capacity(g.order() / 2);
    extend(g, &mut covered, &mut chosen, 0, &mut visit)
}

fn extend<F>(
    g: &Multigraph,
    covered: &mut [bool],
    chosen: &mut Vec<EdgeId>,
    from: usize,
    visit: &mut F,
) -> ControlFlow<()>
where
    F: FnMut(&[EdgeId]) -> ControlFlow<()>,
{
    let Some(v) = (from..g.order()).find(|&v| !covered[v]) else {
        let mut m = chosen.clone();
        m.sort_unstable();
        return visit(&m);
    };
    covered[v] = true;
    for &e in g.incident(v) {
        let w = g.other_end(e, v);
        if w == v || covered[w] {
            continue;
        }
        covered[w] = true;
        chosen.push(e);
        let flow = extend(g, covered, chosen, v + 1, visit);
        chosen.pop();
        covered[w] = false;
        flow?;
    }
    covered[v] = false;
    ControlFlow::Continue(())
}

/// All perfect matchings, each as ascending edge ids, listed in
/// lexicographic order. Empty for odd order.
pub fn enumerate_perfect_matchings(g: &Multigraph) -> Vec<Vec<EdgeId>> {
    let mut all = Vec::new();
    let _ = for_each_perfect_matching(g, |m| {
        all.push(m.to_vec());
        ControlFlow::Continue(())
    });
    all.sort();
    all
}

pub fn is_perfect_matching(g: &Multigraph, edges: &[EdgeId]) -> bool {
    let mut covered = vec![false; g.order()];
    for &e in edges {
        if e >= g.size() || g.is_loop(e) {
            return false;
        }
        let (a, b) = g.endpoints(e);
        if std::mem::replace(&mut covered[a], true) || std::mem::replace(&mut covered[b], true) {
            return false;
        }
    }
    covered.iter().all(|&c| c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generators::*;

    #[test]
    fn small_counts() {
        assert_eq!(enumerate_perfect_matchings(&cycle(4)).len(), 2);
        assert_eq!(enumerate_perfect_matchings(&complete(4)).len(), 3);
        assert_eq!(enumerate_perfect_matchings(&cycle(6)).len(), 2);
        assert!(enumerate_perfect_matchings(&complete(3)).is_empty());
        assert_eq!(enumerate_perfect_matchings(&multi_edge(3)).len(), 3);
    }

    #[test]
    fn listed_lexicographically() {
        let all = enumerate_perfect_matchings(&complete(6));
        assert_eq!(all.len(), 15);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert!(all.iter().all(|m| is_perfect_matching(&complete(6), m)));
    }
}
