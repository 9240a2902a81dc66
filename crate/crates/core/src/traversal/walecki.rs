//! Walecki decompositions of complete graphs, with control over which pairs
//! of vertices end the Hamilton paths.

use serde::Serialize;

use super::HamiltonDecomposition;
use crate::error::{Error, Result};
use crate::graph::{generators, Vertex, Walk};

/// Hamilton paths of K_n, plus a matching when n is odd. `paths[i]` runs
/// from the first to the second vertex of the i-th requested pair.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PathDecomposition {
    pub paths: Vec<Vec<Vertex>>,
    pub matching: Vec<(Vertex, Vertex)>,
}

impl PathDecomposition {
    /// Paths are Hamilton paths of K_n and, with the matching, use every
    /// edge exactly once.
    pub fn is_valid(&self, n: usize) -> bool {
        let mut used = vec![vec![false; n]; n];
        let mut take = |a: Vertex, b: Vertex| {
            if a >= n || b >= n || a == b || used[a][b] {
                return false;
            }
            used[a][b] = true;
            used[b][a] = true;
            true
        };
        for p in &self.paths {
            let mut seen = vec![false; n];
            if p.len() != n || p.iter().any(|&v| v >= n || std::mem::replace(&mut seen[v], true)) {
                return false;
            }
            if !p.windows(2).all(|w| take(w[0], w[1])) {
                return false;
            }
        }
        let mut covered = vec![false; n];
        for &(a, b) in &self.matching {
            if !take(a, b) || covered[a] || covered[b] {
                return false;
            }
            covered[a] = true;
            covered[b] = true;
        }
        used.iter().enumerate().all(|(a, row)| row.iter().enumerate().all(|(b, &u)| a == b || u))
    }
}

/// The zigzag path `i, i+1, i-1, i+2, i-2, ..., i+m` on `Z_{2m}`.
fn zigzag(i: usize, m: usize) -> Vec<usize> {
    let n = 2 * m;
    let mut p = Vec::with_capacity(n);
    p.push(i % n);
    for j in 1..m {
        p.push((i + j) % n);
        p.push((i + n - j) % n);
    }
    p.push((i + m) % n);
    p
}

fn check_pairing(n: usize, pairs: &[(Vertex, Vertex)], distinguished: Option<Vertex>) -> Result<()> {
    let mut seen = vec![false; n];
    for v in pairs.iter().flat_map(|&(a, b)| [a, b]).chain(distinguished) {
        if v >= n {
            return Err(Error::InvalidPairing(format!("vertex {v} outside 0..{n}")));
        }
        if std::mem::replace(&mut seen[v], true) {
            return Err(Error::InvalidPairing(format!("vertex {v} appears twice")));
        }
    }
    if let Some(v) = seen.iter().position(|&s| !s) {
        return Err(Error::InvalidPairing(format!("vertex {v} is not covered")));
    }
    Ok(())
}

/// Decomposes K_n into n/2 Hamilton paths (n even), or into (n-1)/2
/// Hamilton paths and a matching of (n-1)/2 edges missing `distinguished`
/// (n odd). Path `i` joins `pairs[i]`; for odd n the matching consists of
/// the pairs themselves.
pub fn walecki_path_decomposition(
    n: usize,
    pairs: &[(Vertex, Vertex)],
    distinguished: Option<Vertex>,
) -> Result<PathDecomposition> {
    if n < 2 {
        return Err(Error::OrderTooSmall { needed: 2, order: n });
    }
    let m = n / 2;
    if pairs.len() != m {
        return Err(Error::InvalidPairing(format!("expected {m} pairs, got {}", pairs.len())));
    }
    match (n % 2, distinguished) {
        (0, Some(_)) => return Err(Error::InvalidPairing("even order takes no distinguished vertex".into())),
        (1, None) => return Err(Error::InvalidPairing("odd order needs a distinguished vertex".into())),
        _ => {}
    }
    check_pairing(n, pairs, distinguished)?;

    // The zigzag paths have ends {i, i+m}. For odd n, cycle i closes the
    // zigzag through the hub 2m; dropping its diameter edge {p_{m-1}, p_m}
    // leaves a Hamilton path ending at the two ends of that diameter.
    let mut phi = vec![0; n];
    let mut paths = Vec::with_capacity(m);
    if n.is_multiple_of(2) {
        for (i, &(a, b)) in pairs.iter().enumerate() {
            phi[i] = a;
            phi[i + m] = b;
        }
        for i in 0..m {
            paths.push(zigzag(i, m).into_iter().map(|v| phi[v]).collect());
        }
        return Ok(PathDecomposition {
            paths,
            matching: Vec::new(),
        });
    }
    let hub = 2 * m;
    phi[hub] = distinguished.expect("checked");
    let mut raw = Vec::with_capacity(m);
    for i in 0..m {
        let z = zigzag(i, m);
        let mut p: Vec<usize> = z[..m].iter().rev().copied().collect();
        p.push(hub);
        p.extend(z[m..].iter().rev());
        let (a, b) = (p[0], p[p.len() - 1]);
        phi[a] = pairs[i].0;
        phi[b] = pairs[i].1;
        raw.push(p);
    }
    for p in raw {
        paths.push(p.into_iter().map(|v| phi[v]).collect());
    }
    Ok(PathDecomposition {
        paths,
        matching: pairs.to_vec(),
    })
}

/// (n-1)/2 edge-disjoint Hamilton cycles of K_n for odd n >= 3, on the
/// edge ids of `generators::complete(n)`.
pub fn walecki_cycle_decomposition(n: usize) -> Result<HamiltonDecomposition> {
    if n.is_multiple_of(2) {
        return Err(Error::Parity {
            what: "order",
            expected: "odd",
            got: n,
        });
    }
    if n < 3 {
        return Err(Error::OrderTooSmall { needed: 3, order: n });
    }
    let m = n / 2;
    let k = generators::complete(n);
    let hub = 2 * m;
    let cycles = (0..m)
        .map(|i| {
            let mut vs = vec![hub];
            vs.extend(zigzag(i, m));
            vs.push(hub);
            Walk::through(&k, &vs).expect("complete graph")
        })
        .collect();
    Ok(HamiltonDecomposition { cycles, matching: None })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pairings(items: &[usize]) -> Vec<Vec<(usize, usize)>> {
        if items.is_empty() {
            return vec![Vec::new()];
        }
        let first = items[0];
        let mut out = Vec::new();
        for j in 1..items.len() {
            let rest: Vec<usize> = items[1..].iter().copied().filter(|&v| v != items[j]).collect();
            for mut p in pairings(&rest) {
                p.insert(0, (first, items[j]));
                out.push(p);
            }
        }
        out
    }

    fn check(n: usize, pairs: &[(usize, usize)], d: Option<usize>) {
        let dec = walecki_path_decomposition(n, pairs, d).unwrap();
        assert!(dec.is_valid(n), "{n} {pairs:?} {d:?}");
        for (p, &(a, b)) in dec.paths.iter().zip(pairs) {
            assert_eq!((p[0], p[n - 1]), (a, b));
        }
        if let Some(d) = d {
            assert_eq!(dec.matching.len(), (n - 1) / 2);
            assert!(dec.matching.iter().all(|&(a, b)| a != d && b != d));
        }
    }

    #[test]
    fn small_examples() {
        let dec = walecki_path_decomposition(2, &[(1, 0)], None).unwrap();
        assert_eq!(dec.paths, vec![vec![1, 0]]);
        check(4, &[(0, 1), (2, 3)], None);
        check(5, &[(0, 1), (2, 3)], Some(4));
        check(3, &[(2, 0)], Some(1));
    }

    #[test]
    fn every_pairing_up_to_eight() {
        for n in 2..=8 {
            let all: Vec<usize> = (0..n).collect();
            if n % 2 == 0 {
                for p in pairings(&all) {
                    check(n, &p, None);
                }
            } else {
                for d in 0..n {
                    let rest: Vec<usize> = all.iter().copied().filter(|&v| v != d).collect();
                    for p in pairings(&rest) {
                        check(n, &p, Some(d));
                    }
                }
            }
        }
    }

    #[test]
    fn malformed_pairings() {
        assert!(matches!(
            walecki_path_decomposition(4, &[(0, 1), (1, 2)], None),
            Err(Error::InvalidPairing(_))
        ));
        assert!(matches!(
            walecki_path_decomposition(5, &[(0, 1), (2, 3)], None),
            Err(Error::InvalidPairing(_))
        ));
        assert!(matches!(walecki_path_decomposition(4, &[(0, 1)], None), Err(Error::InvalidPairing(_))));
    }

    #[test]
    fn cycle_decompositions() {
        for (n, count) in [(3, 1), (5, 2), (7, 3), (9, 4)] {
            let hd = walecki_cycle_decomposition(n).unwrap();
            assert_eq!(hd.cycles.len(), count);
            hd.validate(&generators::complete(n)).unwrap();
        }
        assert!(matches!(walecki_cycle_decomposition(6), Err(Error::Parity { .. })));
    }
}
