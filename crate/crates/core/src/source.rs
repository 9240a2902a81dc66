//! Recovering sources: which multigraphs a given graph is a generalized
//! truncation of.

use std::collections::HashMap;
use std::ops::ControlFlow;

use serde::Serialize;

use crate::caps::{Caps, SearchControl};
use crate::error::{Error, Result};
use crate::graph::{canonical_form, for_each_perfect_matching, is_perfect_matching, CanonicalForm};
use crate::graph::{EdgeId, Multigraph, Vertex};
use crate::report::VerificationReport;
use crate::truncation::Truncation;

/// A matching of Y together with the source obtained by contracting groups
/// of components of Y minus the matching.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SourceCertificate {
    /// Matching edge ids of Y, ascending. Source edge `i` comes from
    /// `matching[i]`.
    pub matching: Vec<EdgeId>,
    /// Components of Y minus the matching, each ascending, ordered by their
    /// smallest vertex.
    pub components: Vec<Vec<Vertex>>,
    /// Source vertex of each component.
    pub blocks: Vec<usize>,
    pub source: Multigraph,
}

impl SourceCertificate {
    /// Source vertex of every vertex of Y.
    pub fn cluster_map(&self, order: usize) -> Vec<Vertex> {
        let mut map = vec![0; order];
        for (c, comp) in self.components.iter().enumerate() {
            for &y in comp {
                map[y] = self.blocks[c];
            }
        }
        map
    }

    /// Same matching with the components grouped by `blocks`.
    pub fn regroup(&self, y: &Multigraph, blocks: Vec<usize>) -> Result<SourceCertificate> {
        build(y, self.matching.clone(), self.components.clone(), blocks)
    }

    /// Reads the certificate as a truncation of its source.
    pub fn truncation(&self, y: &Multigraph) -> Result<Truncation> {
        Truncation::from_parts(y.clone(), self.cluster_map(y.order()), self.matching.clone())
    }

    /// Rechecks every field against `y`.
    pub fn verify(&self, y: &Multigraph) -> Result<()> {
        let rebuilt = contract_to_source(y, &self.matching)?;
        if rebuilt.components != self.components {
            return Err(Error::InconsistentTruncation("component partition differs".into()));
        }
        let regrouped = rebuilt.regroup(y, self.blocks.clone())?;
        if regrouped.source != self.source {
            return Err(Error::InconsistentTruncation("contraction does not give the source".into()));
        }
        Ok(())
    }
}

fn build(y: &Multigraph, matching: Vec<EdgeId>, components: Vec<Vec<Vertex>>, blocks: Vec<usize>) -> Result<SourceCertificate> {
    if blocks.len() != components.len() {
        return Err(Error::Precondition(format!(
            "{} blocks for {} components",
            blocks.len(),
            components.len()
        )));
    }
    let count = blocks.iter().map(|&b| b + 1).max().unwrap_or(0);
    let mut cert = SourceCertificate {
        matching,
        components,
        blocks,
        source: Multigraph::new(count),
    };
    let map = cert.cluster_map(y.order());
    let mut source = Multigraph::new(count);
    for &e in &cert.matching {
        let (a, b) = y.endpoints(e);
        if map[a] == map[b] {
            return Err(Error::InvalidMatching(format!("matching edge {e} lies inside one source vertex")));
        }
        source.add_edge(map[a], map[b])?;
    }
    if let Some(v) = source.isolated_vertex() {
        return Err(Error::Precondition(format!("source vertex {v} receives no component")));
    }
    cert.source = source;
    Ok(cert)
}

fn components_without(y: &Multigraph, matching: &[EdgeId]) -> (Multigraph, Vec<Vec<Vertex>>, Vec<usize>) {
    let (rest, _) = y.without_edges(matching);
    let (labels, count) = rest.component_labels();
    let mut components = vec![Vec::new(); count];
    for (v, &c) in labels.iter().enumerate() {
        components[c].push(v);
    }
    components.sort();
    let mut label = vec![0; y.order()];
    for (c, comp) in components.iter().enumerate() {
        for &v in comp {
            label[v] = c;
        }
    }
    (rest, components, label)
}

/// No matching edge has both ends in one component of Y minus the matching.
pub fn is_isolating(y: &Multigraph, matching: &[EdgeId]) -> bool {
    if !is_perfect_matching(y, matching) {
        return false;
    }
    let (_, _, label) = components_without(y, matching);
    matching.iter().all(|&e| {
        let (a, b) = y.endpoints(e);
        label[a] != label[b]
    })
}

/// A perfect matching whose removal leaves a simple graph, if one exists.
/// Such a matching must contain one edge of every doubled pair, so the
/// doubled pairs are fixed first and the rest is matched by search.
pub fn is_truncation_of_reflexive(y: &Multigraph) -> Option<Vec<EdgeId>> {
    if y.has_loops() || y.order() % 2 == 1 {
        return None;
    }
    let mut forced = Vec::new();
    let mut covered = vec![false; y.order()];
    for a in 0..y.order() {
        for b in y.neighbors(a) {
            if b < a {
                continue;
            }
            match y.multiplicity(a, b) {
                1 => {}
                2 => {
                    if covered[a] || covered[b] {
                        return None;
                    }
                    covered[a] = true;
                    covered[b] = true;
                    forced.push(y.edge_between(a, b).expect("adjacent"));
                }
                _ => return None,
            }
        }
    }
    let rest: Vec<Vertex> = (0..y.order()).filter(|&v| !covered[v]).collect();
    let (sub, origin) = y.induced_subgraph(&rest);
    let mut witness = None;
    let _ = for_each_perfect_matching(&sub, |m| {
        let mut all: Vec<EdgeId> = forced.iter().copied().chain(m.iter().map(|&e| origin[e])).collect();
        all.sort_unstable();
        witness = Some(all);
        ControlFlow::Break(())
    });
    witness
}

pub fn isolating_perfect_matchings(y: &Multigraph) -> Result<Vec<Vec<EdgeId>>> {
    isolating_perfect_matchings_with(y, &SearchControl::new())
}

/// Every isolating perfect matching of the graph `y`, each as ascending edge
/// ids, in lexicographic order.
pub fn isolating_perfect_matchings_with(y: &Multigraph, ctl: &SearchControl) -> Result<Vec<Vec<EdgeId>>> {
    y.require_simple()?;
    let mut found = Vec::new();
    let mut failure = None;
    let _ = for_each_perfect_matching(y, |m| {
        if let Err(err) = ctl.tick() {
            failure = Some(err);
            return ControlFlow::Break(());
        }
        if is_isolating(y, m) {
            found.push(m.to_vec());
        }
        ControlFlow::Continue(())
    });
    if let Some(err) = failure {
        return Err(err);
    }
    found.sort();
    Ok(found)
}

/// Contracts each component of Y minus `matching` to a vertex and drops the
/// resulting loops.
pub fn contract_to_source(y: &Multigraph, matching: &[EdgeId]) -> Result<SourceCertificate> {
    if !is_perfect_matching(y, matching) {
        return Err(Error::InvalidMatching("not a perfect matching".into()));
    }
    let mut matching = matching.to_vec();
    matching.sort_unstable();
    let (rest, components, _) = components_without(y, &matching);
    if !rest.is_simple() {
        return Err(Error::InvalidMatching("removing the matching leaves a multigraph".into()));
    }
    let blocks = (0..components.len()).collect();
    build(y, matching, components, blocks).map_err(|err| match err {
        Error::InvalidMatching(_) => Error::InvalidMatching("matching is not isolating".into()),
        other => other,
    })
}

/// Rebuild-and-contract: the components of Y minus the truncation's own
/// matching, grouped by cluster label and contracted. Reproduces the source
/// of `t` up to isomorphism whether or not the matching is isolating.
pub fn recover_source(t: &Truncation) -> Result<SourceCertificate> {
    let y = t.graph();
    let mut matching = t.matching_edges().to_vec();
    matching.sort_unstable();
    if !is_perfect_matching(y, &matching) {
        return Err(Error::InvalidMatching("not a perfect matching".into()));
    }
    let (_, components, _) = components_without(y, &matching);
    let mut blocks = Vec::with_capacity(components.len());
    for comp in &components {
        let v = t.cluster_of(comp[0]);
        if comp.iter().any(|&a| t.cluster_of(a) != v) {
            return Err(Error::InconsistentTruncation("component spans two clusters".into()));
        }
        blocks.push(v);
    }
    build(y, matching, components, blocks)
}

/// The recovered source is isomorphic to the source `t` was built from.
pub fn check_round_trip(t: &Truncation, subject: &str) -> Result<VerificationReport> {
    let cert = recover_source(t)?;
    let same = canonical_form(&cert.source)? == canonical_form(t.source())?;
    Ok(VerificationReport::new("source-round-trip", subject)
        .fact("source_order", cert.source.order())
        .fact("source_size", cert.source.size())
        .require(same, &cert))
}

/// Sources up to isomorphism, each with the first certificate found and
/// the number of certificates giving it.
#[derive(Debug, Clone, Serialize)]
pub struct SourceClass {
    pub certificate: SourceCertificate,
    pub multiplicity: usize,
    /// False when the source exceeded the canonical-form cap and was not
    /// compared against the others.
    pub compared: bool,
}

impl SourceClass {
    pub fn source(&self) -> &Multigraph {
        &self.certificate.source
    }
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct SourceSet {
    pub classes: Vec<SourceClass>,
    /// Certificates before isomorphism deduplication.
    pub raw_count: usize,
}

impl SourceSet {
    fn insert(&mut self, index: &mut HashMap<CanonicalForm, usize>, cert: SourceCertificate) -> Result<()> {
        self.raw_count += 1;
        if cert.source.order() > Caps::current().canonical_order {
            self.classes.push(SourceClass {
                certificate: cert,
                multiplicity: 1,
                compared: false,
            });
            return Ok(());
        }
        let form = canonical_form(&cert.source)?;
        match index.get(&form) {
            Some(&i) => self.classes[i].multiplicity += 1,
            None => {
                index.insert(form, self.classes.len());
                self.classes.push(SourceClass {
                    certificate: cert,
                    multiplicity: 1,
                    compared: true,
                });
            }
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn sources(&self) -> impl Iterator<Item = &Multigraph> {
        self.classes.iter().map(SourceClass::source)
    }

    /// Some uncompared source may duplicate another.
    pub fn is_partial(&self) -> bool {
        self.classes.iter().any(|c| !c.compared)
    }

    /// Contains a source isomorphic to `x`.
    pub fn contains(&self, x: &Multigraph) -> Result<bool> {
        let form = canonical_form(x)?;
        for s in self.sources() {
            if s.order() == x.order() && s.size() == x.size() && canonical_form(s)? == form {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

/// One source per isolating perfect matching, deduplicated by isomorphism.
pub fn minimal_sources(y: &Multigraph) -> Result<SourceSet> {
    let mut set = SourceSet::default();
    let mut index = HashMap::new();
    for m in isolating_perfect_matchings(y)? {
        set.insert(&mut index, contract_to_source(y, &m)?)?;
    }
    Ok(set)
}

/// Minimal sources that are simple graphs.
pub fn graph_sources(y: &Multigraph) -> Result<SourceSet> {
    let all = minimal_sources(y)?;
    let classes: Vec<SourceClass> = all.classes.into_iter().filter(|c| c.source().is_simple()).collect();
    let raw_count = classes.iter().map(|c| c.multiplicity).sum();
    Ok(SourceSet { classes, raw_count })
}

/// Every grouping of the certificate's components into source vertices
/// that keeps each matching edge between two different groups, deduplicated
/// by isomorphism. The ungrouped source comes first.
pub fn coarsened_sources(y: &Multigraph, cert: &SourceCertificate) -> Result<SourceSet> {
    let k = cert.components.len();
    Caps::check("coarsen", Caps::current().coarsen_components, k)?;
    let mut component_of = vec![0; y.order()];
    for (c, comp) in cert.components.iter().enumerate() {
        for &v in comp {
            component_of[v] = c;
        }
    }
    let mut conflict = vec![vec![false; k]; k];
    for &e in &cert.matching {
        let (a, b) = y.endpoints(e);
        let (ca, cb) = (component_of[a], component_of[b]);
        conflict[ca][cb] = true;
        conflict[cb][ca] = true;
    }
    let mut set = SourceSet::default();
    let mut index = HashMap::new();
    let identity: Vec<usize> = (0..k).collect();
    set.insert(&mut index, cert.regroup(y, identity.clone())?)?;
    let mut blocks = Vec::with_capacity(k);
    let mut failure = None;
    partitions(&conflict, &mut blocks, 0, &mut |b: &[usize]| {
        if b == identity.as_slice() {
            return;
        }
        let result = cert.regroup(y, b.to_vec()).and_then(|c| set.insert(&mut index, c));
        if let Err(err) = result {
            failure.get_or_insert(err);
        }
    });
    match failure {
        Some(err) => Err(err),
        None => Ok(set),
    }
}

/// Restricted growth strings whose blocks avoid conflicting pairs.
fn partitions(conflict: &[Vec<bool>], blocks: &mut Vec<usize>, used: usize, visit: &mut impl FnMut(&[usize])) {
    let i = blocks.len();
    if i == conflict.len() {
        visit(blocks);
        return;
    }
    for b in 0..=used {
        let clash = (0..i).any(|j| blocks[j] == b && conflict[i][j]);
        if clash {
            continue;
        }
        blocks.push(b);
        partitions(conflict, blocks, used.max(b + 1), visit);
        blocks.pop();
    }
}

/// Exactly one isolating perfect matching, and its matching edges join
/// every pair of components. This is enough for the source to be unique.
pub fn unique_source_certificate(y: &Multigraph) -> Result<bool> {
    let all = isolating_perfect_matchings(y)?;
    let [m] = all.as_slice() else {
        return Ok(false);
    };
    let cert = contract_to_source(y, m)?;
    let s = &cert.source;
    Ok((0..s.order()).all(|a| (a + 1..s.order()).all(|b| s.adjacent(a, b))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generators::*;

    fn multipath(n: usize, mult: usize) -> Multigraph {
        let mut g = Multigraph::new(n);
        for i in 0..n - 1 {
            for _ in 0..mult {
                g.add_edge(i, i + 1).unwrap();
            }
        }
        g
    }

    #[test]
    fn reflexive_examples() {
        assert!(is_truncation_of_reflexive(&cycle(4)).is_some());
        assert!(is_truncation_of_reflexive(&complete(3)).is_none());
        assert!(is_truncation_of_reflexive(&multi_edge(3)).is_none());
        let w = is_truncation_of_reflexive(&multi_edge(2)).unwrap();
        assert_eq!(w.len(), 1);
        // doubled pairs sharing a vertex
        let g = Multigraph::from_edges(4, [(0, 1), (0, 1), (1, 2), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert!(is_truncation_of_reflexive(&g).is_none());
    }

    #[test]
    fn isolating_examples() {
        assert_eq!(isolating_perfect_matchings(&cycle(4)).unwrap().len(), 2);
        assert_eq!(isolating_perfect_matchings(&complete(4)).unwrap().len(), 0);
        assert_eq!(isolating_perfect_matchings(&prism(3)).unwrap().len(), 1);
    }

    #[test]
    fn contraction_examples() {
        let prism3 = prism(3);
        let m = &isolating_perfect_matchings(&prism3).unwrap()[0];
        let cert = contract_to_source(&prism3, m).unwrap();
        assert_eq!(canonical_form(&cert.source), canonical_form(&multi_edge(3)));
        cert.verify(&prism3).unwrap();

        for m in isolating_perfect_matchings(&cycle(4)).unwrap() {
            let cert = contract_to_source(&cycle(4), &m).unwrap();
            assert_eq!(canonical_form(&cert.source), canonical_form(&multi_edge(2)));
        }

        let ladder = cartesian_product(&path(4), &complete(2));
        let set = minimal_sources(&ladder).unwrap();
        assert_eq!(set.len(), 2);
        assert!(set.contains(&multi_edge(4)).unwrap());
        assert!(set.contains(&multipath(3, 2)).unwrap());
    }

    #[test]
    fn contraction_rejects_non_isolating() {
        let k4 = complete(4);
        let m = crate::graph::enumerate_perfect_matchings(&k4).remove(0);
        assert!(matches!(contract_to_source(&k4, &m), Err(Error::InvalidMatching(_))));
        assert!(matches!(contract_to_source(&k4, &[0]), Err(Error::InvalidMatching(_))));
    }

    #[test]
    fn graph_source_examples() {
        assert!(graph_sources(&cycle(4)).unwrap().is_empty());
        assert!(graph_sources(&prism(3)).unwrap().is_empty());
        let t = crate::truncation::complete_truncation(&complete(4)).unwrap();
        let set = graph_sources(t.graph()).unwrap();
        assert_eq!(set.len(), 1);
        assert!(set.contains(&complete(4)).unwrap());
    }

    #[test]
    fn uniqueness_examples() {
        assert!(unique_source_certificate(&prism(3)).unwrap());
        assert!(!unique_source_certificate(&cycle(4)).unwrap());
        assert_eq!(minimal_sources(&cycle(4)).unwrap().len(), 1);
        assert_eq!(minimal_sources(&cycle(4)).unwrap().raw_count, 2);
        assert!(!unique_source_certificate(&cartesian_product(&path(4), &complete(2))).unwrap());
    }

    #[test]
    fn two_squares_amalgamate() {
        let y = cycle(4).disjoint_union(&cycle(4));
        let m = &isolating_perfect_matchings(&y).unwrap()[0];
        let cert = contract_to_source(&y, m).unwrap();
        let set = coarsened_sources(&y, &cert).unwrap();
        let two_doubles = multi_edge(2).disjoint_union(&multi_edge(2));
        assert_eq!(canonical_form(set.classes[0].source()), canonical_form(&two_doubles));
        assert!(set.contains(&multipath(3, 2)).unwrap());
        assert!(set.contains(&multi_edge(4)).unwrap());
        assert_eq!(set.len(), 3);
    }

    #[test]
    fn fully_joined_components_do_not_coarsen() {
        let y = prism(3);
        let m = &isolating_perfect_matchings(&y).unwrap()[0];
        let cert = contract_to_source(&y, m).unwrap();
        assert_eq!(coarsened_sources(&y, &cert).unwrap().len(), 1);
    }

    #[test]
    fn round_trip_recovers_source() {
        use crate::truncation::random_truncation;
        let doubled = Multigraph::from_edges(3, [(0, 1), (0, 1), (1, 2), (2, 0)]).unwrap();
        for x in [petersen(), complete(4), doubled, perfect_matching(3)] {
            for density in [0.0, 0.3, 1.0] {
                let t = random_truncation(&x, density, 11).unwrap();
                let cert = recover_source(&t).unwrap();
                assert_eq!(cert.source.size(), x.size());
                assert!(check_round_trip(&t, "x").unwrap().passed());
            }
        }
    }
}
