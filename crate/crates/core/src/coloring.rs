//! Edge and vertex colourings of truncations: class I colourings of complete
//! truncations, class classification, and cohesive truncations realising
//! prescribed chromatic indices and numbers.

use serde::Serialize;

use crate::caps::SearchControl;
use crate::error::{Error, Result};
use crate::graph::{
    chromatic_index_exact, chromatic_number_exact, generators, is_perfect_matching, k_edge_coloring, EdgeColoring,
    EdgeId, Multigraph, Vertex,
};
use crate::report::VerificationReport;
use crate::truncation::{complete_truncation, spanning_path_truncation, Truncation};

pub use crate::graph::VertexColoring;

/// Round-robin decomposition of K_n (n odd) into n matchings of size
/// (n-1)/2. Matching `i` misses exactly vertex `i`.
pub fn near_one_factorization(n: usize) -> Result<Vec<Vec<(Vertex, Vertex)>>> {
    if n.is_multiple_of(2) {
        return Err(Error::Parity {
            what: "order",
            expected: "odd",
            got: n,
        });
    }
    Ok((0..n)
        .map(|i| {
            (1..=n / 2)
                .map(|j| {
                    let (a, b) = ((i + n - j) % n, (i + j) % n);
                    (a.min(b), a.max(b))
                })
                .collect()
        })
        .collect())
}

/// K_n (n even) split into one perfect matching and n matchings of size
/// (n-2)/2, from the near-one-factorization of K_{n+1} with the apex `n`
/// removed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ApexFactorization {
    pub perfect: Vec<(Vertex, Vertex)>,
    pub matchings: Vec<Vec<(Vertex, Vertex)>>,
    /// `missed[i] = (i, w)`: the two vertices matching `i` leaves uncovered.
    pub missed: Vec<(Vertex, Vertex)>,
}

pub fn one_factorization_via_apex(n: usize) -> Result<ApexFactorization> {
    if n % 2 == 1 {
        return Err(Error::Parity {
            what: "order",
            expected: "even",
            got: n,
        });
    }
    let mut near = near_one_factorization(n + 1)?;
    let perfect = near.pop().expect("n + 1 matchings");
    let mut missed = Vec::with_capacity(n);
    let matchings = near
        .into_iter()
        .enumerate()
        .map(|(i, m)| {
            let (apex_edge, rest): (Vec<_>, Vec<_>) = m.into_iter().partition(|&(_, b)| b == n);
            missed.push((i, apex_edge[0].0));
            rest
        })
        .collect();
    Ok(ApexFactorization {
        perfect,
        matchings,
        missed,
    })
}

/// Colours K_n with n-1 colours (n even) or n colours (n odd), on local
/// vertex indices.
fn color_complete(n: usize) -> Vec<((Vertex, Vertex), usize)> {
    if n < 2 {
        return Vec::new();
    }
    let odd = if n % 2 == 1 { n } else { n - 1 };
    let near = near_one_factorization(odd).expect("odd");
    let mut out = Vec::new();
    for (i, m) in near.into_iter().enumerate() {
        out.extend(m.into_iter().map(|p| (p, i)));
        if n.is_multiple_of(2) {
            out.push(((i, n - 1), i));
        }
    }
    out
}

/// A proper edge colouring of the complete truncation of `x` with exactly
/// Δ(x) colours. For odd Δ the source must be class I; its Δ-edge-colouring
/// comes from the exact solver.
pub fn class1_truncation_coloring(x: &Multigraph) -> Result<(Truncation, EdgeColoring)> {
    x.require_loopless()?;
    let t = complete_truncation(x)?;
    let d = x.max_valency();
    let y = t.graph();
    let mut colors = vec![usize::MAX; y.size()];
    let constituent_edge = |v: Vertex, a: usize, b: usize| {
        let cluster = t.cluster(v);
        t.constituent_edge_between(cluster[a], cluster[b]).expect("complete constituent")
    };

    if d.is_multiple_of(2) {
        for &e in t.matching_edges() {
            colors[e] = d - 1;
        }
        for v in 0..x.order() {
            for ((a, b), c) in color_complete(t.cluster(v).len()) {
                colors[constituent_edge(v, a, b)] = c;
            }
        }
    } else {
        let source_colors = k_edge_coloring(x, d, &SearchControl::new())?.ok_or(Error::ClassTwoOddValency(d))?;
        for e in 0..x.size() {
            colors[t.matching_edge(e)] = source_colors.colors[e];
        }
        for v in 0..x.order() {
            let cluster = t.cluster(v);
            let n = cluster.len();
            // colour of the matching edge at each local vertex
            let alpha: Vec<usize> = cluster
                .iter()
                .map(|&a| {
                    let e = y.incident(a).iter().copied().find(|&e| t.is_matching_edge(e)).expect("matched");
                    colors[e]
                })
                .collect();
            if n % 2 == 1 {
                for (i, m) in near_one_factorization(n)?.into_iter().enumerate() {
                    for (a, b) in m {
                        colors[constituent_edge(v, a, b)] = alpha[i];
                    }
                }
            } else {
                let beta = (0..d).find(|c| !alpha.contains(c)).expect("n < d");
                let f = one_factorization_via_apex(n)?;
                for (a, b) in f.perfect {
                    colors[constituent_edge(v, a, b)] = beta;
                }
                for (i, m) in f.matchings.into_iter().enumerate() {
                    for (a, b) in m {
                        colors[constituent_edge(v, a, b)] = alpha[i];
                    }
                }
            }
        }
    }
    let coloring = EdgeColoring { colors, count: d };
    if !coloring.is_proper(y) {
        return Err(Error::ConstructionFailed("edge colouring is not proper".into()));
    }
    Ok((t, coloring))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum EdgeClass {
    #[serde(rename = "I")]
    ClassI,
    #[serde(rename = "II")]
    ClassII,
}

/// Class I exactly when the chromatic index equals the maximum valency.
pub fn classify(g: &Multigraph) -> Result<EdgeClass> {
    let c = chromatic_index_exact(g)?;
    Ok(if c.count == g.max_valency() {
        EdgeClass::ClassI
    } else {
        EdgeClass::ClassII
    })
}

/// A cohesive truncation realising a prescribed value, with the exact value
/// at every step of the greedy path that produced it.
#[derive(Debug, Clone, Serialize)]
pub struct SpectrumWitness {
    #[serde(skip)]
    pub truncation: Truncation,
    pub value: usize,
    /// Exact value after the base truncation and after each added edge.
    pub trace: Vec<usize>,
}

/// The first missing constituent edge: lowest cluster that is not complete,
/// then the lexicographically first missing pair of local indices.
fn next_missing_edge(t: &Truncation) -> Option<(Vertex, usize, usize)> {
    (0..t.source().order()).find_map(|v| {
        let c = t.constituent(v);
        let n = c.order();
        (0..n)
            .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
            .find(|&(a, b)| !c.adjacent(a, b))
            .map(|(a, b)| (v, a, b))
    })
}

/// Starting from spanning-path constituents, adds constituent edges one at
/// a time until `measure` reaches `k`.
fn greedy_spectrum<F>(x: &Multigraph, k: usize, measure: F) -> Result<SpectrumWitness>
where
    F: Fn(&Multigraph) -> Result<usize>,
{
    let mut t = spanning_path_truncation(x)?;
    let mut value = measure(t.graph())?;
    let mut trace = vec![value];
    while value < k {
        let (v, a, b) = next_missing_edge(&t).ok_or(Error::OutOfRange {
            k,
            low: trace[0],
            high: value,
        })?;
        let mut c = t.constituent(v).clone();
        c.add_edge(a, b)?;
        t = t.with_constituent(v, c)?;
        value = measure(t.graph())?;
        trace.push(value);
    }
    if value != k {
        return Err(Error::OutOfRange {
            k,
            low: value,
            high: value,
        });
    }
    Ok(SpectrumWitness {
        truncation: t,
        value,
        trace,
    })
}

/// A cohesive truncation of `x` with chromatic index `k`, for Δ(x) > 2 and
/// 3 <= k <= χ' of the complete truncation.
pub fn chromatic_index_spectrum(x: &Multigraph, k: usize) -> Result<SpectrumWitness> {
    x.require_loopless()?;
    let d = x.max_valency();
    if d <= 2 {
        return Err(Error::Precondition("maximum valency must exceed 2".into()));
    }
    let high = chromatic_index_exact(complete_truncation(x)?.graph())?.count;
    if !(3..=high).contains(&k) {
        return Err(Error::OutOfRange { k, low: 3, high });
    }
    greedy_spectrum(x, k, |g| Ok(chromatic_index_exact(g)?.count))
}

/// A cohesive truncation of `x` with chromatic number `k`: k = 2 when
/// Δ(x) = 2, otherwise 3 <= k <= Δ(x).
pub fn chromatic_number_spectrum(x: &Multigraph, k: usize) -> Result<SpectrumWitness> {
    x.require_loopless()?;
    let d = x.max_valency();
    if d <= 1 {
        return Err(Error::Precondition("maximum valency must exceed 1".into()));
    }
    let (low, high) = if d == 2 { (2, 2) } else { (3, d) };
    if !(low..=high).contains(&k) {
        return Err(Error::OutOfRange { k, low, high });
    }
    greedy_spectrum(x, k, |g| Ok(chromatic_number_exact(g)?.count))
}

/// The complete truncation of a source with maximum valency d > 1 has
/// chromatic number d, computed exactly.
pub fn check_chi_of_complete_truncation(x: &Multigraph, subject: &str) -> Result<VerificationReport> {
    let report = VerificationReport::new("complete-truncation-chromatic-number", subject);
    let d = x.max_valency();
    if d <= 1 || x.has_loops() {
        return Ok(report.skipped("needs a loopless source with maximum valency > 1"));
    }
    let t = complete_truncation(x)?;
    let c = chromatic_number_exact(t.graph())?;
    Ok(report
        .fact("max_valency", d)
        .fact("chromatic_number", c.count)
        .require(c.count == d && c.is_proper(t.graph()), &c))
}

/// The constructed colouring of the complete truncation is proper and uses
/// exactly Δ colours. Skipped for class II sources of odd maximum valency.
pub fn check_class_one_truncation(x: &Multigraph, subject: &str) -> Result<VerificationReport> {
    let report = VerificationReport::new("complete-truncation-class-one", subject);
    match class1_truncation_coloring(x) {
        Ok((t, c)) => {
            let d = t.graph().max_valency();
            Ok(report
                .fact("max_valency", d)
                .fact("colors", c.count)
                .require(c.is_proper(t.graph()) && c.count == d, &c))
        }
        Err(Error::ClassTwoOddValency(d)) => {
            Ok(report.fact("max_valency", d).skipped("source is class II with odd maximum valency"))
        }
        Err(e) => Err(e),
    }
}

/// The colour classes of the class I colouring of the complete truncation
/// of a regular source, each a perfect matching.
pub fn one_factorization_of_truncation(x: &Multigraph) -> Result<(Truncation, Vec<Vec<EdgeId>>)> {
    x.regular_valency().ok_or(Error::NotRegular)?;
    let (t, c) = class1_truncation_coloring(x)?;
    let classes = c.classes();
    if let Some(i) = classes.iter().position(|m| !is_perfect_matching(t.graph(), m)) {
        return Err(Error::ConstructionFailed(format!("colour class {i} is not a perfect matching")));
    }
    Ok((t, classes))
}

/// K_n edge ids coloured by `near_one_factorization`, for tests and callers
/// that want the factorization as a colouring.
pub fn near_factorization_coloring(n: usize) -> Result<EdgeColoring> {
    let k = generators::complete(n);
    let mut colors = vec![0; k.size()];
    for (i, m) in near_one_factorization(n)?.into_iter().enumerate() {
        for (a, b) in m {
            colors[k.edge_between(a, b).expect("complete")] = i;
        }
    }
    Ok(EdgeColoring { colors, count: n })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generators::*;

    fn is_partition(n: usize, parts: &[&[(Vertex, Vertex)]]) -> bool {
        let mut used = vec![vec![false; n]; n];
        for part in parts {
            let mut seen = vec![false; n];
            for &(a, b) in *part {
                if a == b || std::mem::replace(&mut seen[a], true) || std::mem::replace(&mut seen[b], true) {
                    return false;
                }
                if std::mem::replace(&mut used[a.min(b)][a.max(b)], true) {
                    return false;
                }
            }
        }
        (0..n).all(|a| (a + 1..n).all(|b| used[a][b]))
    }

    #[test]
    fn near_factorizations() {
        for n in [1, 3, 5, 7, 9] {
            let f = near_one_factorization(n).unwrap();
            assert_eq!(f.len(), n);
            let parts: Vec<&[(Vertex, Vertex)]> = f.iter().map(Vec::as_slice).collect();
            assert!(is_partition(n, &parts));
            for (i, m) in f.iter().enumerate() {
                assert_eq!(m.len(), (n - 1) / 2);
                assert!(m.iter().all(|&(a, b)| a != i && b != i));
            }
            assert!(near_factorization_coloring(n).unwrap().is_proper(&complete(n)));
        }
        assert!(matches!(near_one_factorization(4), Err(Error::Parity { .. })));
    }

    #[test]
    fn apex_factorizations() {
        let f = one_factorization_via_apex(2).unwrap();
        assert_eq!(f.perfect, vec![(0, 1)]);
        assert!(f.matchings.iter().all(Vec::is_empty));
        for n in [2, 4, 6, 8] {
            let f = one_factorization_via_apex(n).unwrap();
            assert_eq!(f.perfect.len(), n / 2);
            assert_eq!(f.matchings.len(), n);
            let mut parts: Vec<&[(Vertex, Vertex)]> = vec![&f.perfect];
            parts.extend(f.matchings.iter().map(Vec::as_slice));
            assert!(is_partition(n, &parts));
            for (i, m) in f.matchings.iter().enumerate() {
                assert_eq!(m.len(), (n - 2) / 2);
                let (p, q) = f.missed[i];
                assert_eq!(p, i);
                assert_ne!(p, q);
                assert!(m.iter().all(|&(a, b)| ![a, b].contains(&p) && ![a, b].contains(&q)));
            }
        }
        assert!(matches!(one_factorization_via_apex(5), Err(Error::Parity { .. })));
    }

    #[test]
    fn class_one_colorings() {
        for x in [complete(5), hypercube(3), complete(4), complete(6), cycle(5), prism(3), complete_bipartite(2, 3)] {
            let (t, c) = class1_truncation_coloring(&x).unwrap();
            assert!(c.is_proper(t.graph()));
            assert_eq!(c.count, x.max_valency());
            assert_eq!(t.graph().max_valency(), x.max_valency());
        }
        assert_eq!(class1_truncation_coloring(&petersen()).unwrap_err(), Error::ClassTwoOddValency(3));
        // doubled edge: multigraph source of odd valency
        let x = Multigraph::from_edges(2, [(0, 1), (0, 1), (0, 1)]).unwrap();
        let (t, c) = class1_truncation_coloring(&x).unwrap();
        assert!(c.is_proper(t.graph()) && c.count == 3);
    }

    #[test]
    fn classification() {
        assert_eq!(classify(&complete(4)).unwrap(), EdgeClass::ClassI);
        assert_eq!(classify(&complete(5)).unwrap(), EdgeClass::ClassII);
        assert_eq!(classify(&petersen()).unwrap(), EdgeClass::ClassII);
    }

    #[test]
    fn petersen_truncation_is_class_two() {
        let t = complete_truncation(&petersen()).unwrap();
        assert_eq!(classify(t.graph()).unwrap(), EdgeClass::ClassII);
    }

    #[test]
    fn factorizations_of_truncations() {
        let (t, f) = one_factorization_of_truncation(&complete(5)).unwrap();
        assert_eq!(f.len(), 4);
        assert!(f.iter().all(|m| m.len() == 10 && is_perfect_matching(t.graph(), m)));
        let (_, f) = one_factorization_of_truncation(&hypercube(3)).unwrap();
        assert_eq!(f.len(), 3);
        assert_eq!(one_factorization_of_truncation(&petersen()).unwrap_err(), Error::ClassTwoOddValency(3));
        assert_eq!(one_factorization_of_truncation(&path(3)).unwrap_err(), Error::NotRegular);
    }

    #[test]
    fn k3_truncation_drops_to_two() {
        let t = complete_truncation(&complete(3)).unwrap();
        assert_eq!(chromatic_number_exact(t.graph()).unwrap().count, 2);
        assert_eq!(chromatic_index_exact(t.graph()).unwrap().count, 2);
        assert_eq!(chromatic_number_exact(&complete(3)).unwrap().count, 3);
        assert_eq!(chromatic_index_exact(&complete(3)).unwrap().count, 3);
    }

    fn steps_by_at_most_one(trace: &[usize]) -> bool {
        trace.windows(2).all(|w| w[1] == w[0] || w[1] == w[0] + 1)
    }

    #[test]
    fn index_spectrum() {
        let w = chromatic_index_spectrum(&complete(4), 3).unwrap();
        assert_eq!(w.trace, vec![3]);
        assert!(w.truncation.is_cohesive());
        let w = chromatic_index_spectrum(&complete(5), 4).unwrap();
        assert_eq!(w.value, 4);
        assert_eq!(chromatic_index_exact(w.truncation.graph()).unwrap().count, 4);
        assert!(w.truncation.is_cohesive() && steps_by_at_most_one(&w.trace));
        assert!(matches!(
            chromatic_index_spectrum(&complete(4), 2),
            Err(Error::OutOfRange { k: 2, low: 3, .. })
        ));
        assert!(matches!(chromatic_index_spectrum(&cycle(5), 3), Err(Error::Precondition(_))));
    }

    #[test]
    fn number_spectrum() {
        let w = chromatic_number_spectrum(&cycle(5), 2).unwrap();
        assert_eq!(w.value, 2);
        assert!(matches!(chromatic_number_spectrum(&cycle(5), 3), Err(Error::OutOfRange { .. })));
        // spanning-path constituents of K_4 give a bipartite truncation
        let w = chromatic_number_spectrum(&complete(4), 3).unwrap();
        assert_eq!(w.trace, vec![2, 3]);
        let w = chromatic_number_spectrum(&complete(5), 4).unwrap();
        assert_eq!(chromatic_number_exact(w.truncation.graph()).unwrap().count, 4);
        assert!(w.truncation.is_cohesive() && steps_by_at_most_one(&w.trace));
        // a tree truncation of the star starts below 3 and still reaches it
        let w = chromatic_number_spectrum(&star(3), 3).unwrap();
        assert_eq!(w.trace[0], 2);
        assert_eq!(w.value, 3);
    }

    #[test]
    fn chi_reports() {
        for (x, d) in [(complete(4), 3), (cycle(6), 2), (complete(5), 4), (petersen(), 3)] {
            let r = check_chi_of_complete_truncation(&x, "x").unwrap();
            assert!(r.passed(), "{r:?}");
            assert_eq!(r.facts["chromatic_number"], d);
        }
        assert!(check_class_one_truncation(&complete(5), "K5").unwrap().passed());
        let r = check_class_one_truncation(&petersen(), "petersen").unwrap();
        assert!(!r.passed() && !r.failed());
    }
}
