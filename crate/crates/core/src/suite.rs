//! Verification suites: each runs one family of theorem checks over a list
//! of source graphs and seeds and returns the reports in a fixed order.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::coloring::{
    check_chi_of_complete_truncation, check_class_one_truncation, chromatic_index_spectrum, chromatic_number_spectrum,
    one_factorization_of_truncation,
};
use crate::connectivity::{
    check_complete_truncation_connectivity, check_connectedness_theorem, check_edge_connectivity_bound,
    check_regular_completeness_criterion,
};
use crate::error::Result;
use crate::graph::{chromatic_index_exact, vertex_connectivity, Multigraph};
use crate::planarity::{check_cohesive_planarity_theorem, check_nonplanar_lemma, is_planar};
use crate::report::VerificationReport;
use crate::source::check_round_trip;
use crate::traversal::{
    check_euler_theorem, check_hamiltonicity_theorem, find_hamilton_decomposition, hamilton_connected_path,
    hamilton_decompose_truncation,
};
use crate::truncation::{
    complete_truncation, matching_constituent_truncation, random_cohesive_truncation, random_truncation,
    spanning_path_truncation,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Source,
    Conn,
    Euler,
    Ham,
    HamDecomp,
    Color,
    Planar,
    All,
}

impl Suite {
    pub const EACH: [Suite; 7] = [
        Suite::Source,
        Suite::Conn,
        Suite::Euler,
        Suite::Ham,
        Suite::HamDecomp,
        Suite::Color,
        Suite::Planar,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Suite::Source => "source",
            Suite::Conn => "conn",
            Suite::Euler => "euler",
            Suite::Ham => "ham",
            Suite::HamDecomp => "hamdecomp",
            Suite::Color => "color",
            Suite::Planar => "planar",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Suite::EACH
            .into_iter()
            .chain([Suite::All])
            .find(|suite| suite.as_str() == s)
            .ok_or_else(|| format!("unknown suite {s:?}"))
    }
}

/// Edge density used for seed `s`: cycles through 0, 1/4, 1/2, 3/4, 1.
pub fn seed_density(s: u64) -> f64 {
    (s % 5) as f64 / 4.0
}

/// Size limit for the Hamilton suite, matching the spanning eulerian cap.
const HAM_MAX_SIZE: usize = 24;
/// Spectrum constructors run only when the complete truncation is this small.
const SPECTRUM_MAX_SIZE: usize = 40;

/// Turns an error into a report: precondition errors skip, anything else is
/// a failure carrying the error text.
pub fn guard(check: &str, subject: &str, r: Result<VerificationReport>) -> VerificationReport {
    match r {
        Ok(report) => report,
        Err(e) if e.is_precondition() => VerificationReport::new(check, subject).skipped(e.to_string()),
        Err(e) => VerificationReport::new(check, subject).require(false, e.to_string()),
    }
}

pub fn run_suite(suite: Suite, graphs: &[(String, Multigraph)], seeds: u64) -> Vec<VerificationReport> {
    if suite == Suite::All {
        return Suite::EACH.iter().flat_map(|&s| run_suite(s, graphs, seeds)).collect();
    }
    let mut out = Vec::new();
    for (name, x) in graphs {
        match suite {
            Suite::Source => source_suite(name, x, seeds, &mut out),
            Suite::Conn => conn_suite(name, x, seeds, &mut out),
            Suite::Euler => euler_suite(name, x, seeds, &mut out),
            Suite::Ham => ham_suite(name, x, &mut out),
            Suite::HamDecomp => hamdecomp_suite(name, x, &mut out),
            Suite::Color => color_suite(name, x, &mut out),
            Suite::Planar => planar_suite(name, x, seeds, &mut out),
            Suite::All => unreachable!(),
        }
    }
    out
}

fn source_suite(name: &str, x: &Multigraph, seeds: u64, out: &mut Vec<VerificationReport>) {
    for s in 0..seeds {
        let subject = format!("{name}/seed={s}");
        let r = random_truncation(x, seed_density(s), s).and_then(|t| check_round_trip(&t, &subject));
        out.push(guard("source-round-trip", &subject, r));
    }
}

fn conn_suite(name: &str, x: &Multigraph, seeds: u64, out: &mut Vec<VerificationReport>) {
    for s in 0..seeds {
        let subject = format!("{name}/seed={s}");
        match random_truncation(x, seed_density(s), s) {
            Ok(t) => {
                out.push(check_connectedness_theorem(&t, &subject));
                out.push(check_edge_connectivity_bound(&t, &subject));
            }
            Err(e) => out.push(guard("connectedness-via-projection", &subject, Err(e))),
        }
    }
    let check = "complete-truncation-connectivity";
    out.push(guard(check, name, check_complete_truncation_connectivity(x, name)));
    let check = "regular-completeness-criterion";
    out.push(guard(check, name, check_regular_completeness_criterion(x, name)));
}

fn euler_suite(name: &str, x: &Multigraph, seeds: u64, out: &mut Vec<VerificationReport>) {
    let check = "eulerian-truncation";
    let subject = format!("{name}/matching");
    let r = matching_constituent_truncation(x).and_then(|t| check_euler_theorem(&t, &subject));
    out.push(guard(check, &subject, r));
    let subject = format!("{name}/complete");
    let r = complete_truncation(x).and_then(|t| check_euler_theorem(&t, &subject));
    out.push(guard(check, &subject, r));
    for s in 0..seeds {
        let subject = format!("{name}/random/seed={s}");
        let r = random_truncation(x, 0.5, s).and_then(|t| check_euler_theorem(&t, &subject));
        out.push(guard(check, &subject, r));
    }
}

fn ham_suite(name: &str, x: &Multigraph, out: &mut Vec<VerificationReport>) {
    let check = "complete-truncation-hamiltonian";
    if x.size() > HAM_MAX_SIZE {
        out.push(VerificationReport::new(check, name).skipped(format!("source has more than {HAM_MAX_SIZE} edges")));
        return;
    }
    out.push(guard(check, name, check_hamiltonicity_theorem(x, name)));
}

fn hamdecomp_suite(name: &str, x: &Multigraph, out: &mut Vec<VerificationReport>) {
    let check = "hamilton-decomposition-lift";
    let r = find_hamilton_decomposition(x).and_then(|hd| {
        let report = VerificationReport::new(check, name);
        let Some(hd) = hd else {
            return Ok(report.fact("source_decomposable", false).skipped("source has no Hamilton decomposition"));
        };
        let (t, lifted) = hamilton_decompose_truncation(x, &hd)?;
        let valid = lifted.validate(t.graph());
        Ok(report
            .fact("source_decomposable", true)
            .fact("cycles", lifted.cycles.len())
            .fact("matching", lifted.matching.is_some())
            .require(valid.is_ok(), valid.err().map(|e| e.to_string())))
    });
    out.push(guard(check, name, r));

    let check = "hamilton-connected-complete";
    let r = complete_truncation(x).and_then(|t| {
        let order = t.graph().order();
        let mut report = VerificationReport::new(check, name);
        let mut exact = 0;
        for a in 0..order {
            for b in (0..order).filter(|&b| b != a) {
                let (w, method) = hamilton_connected_path(&t, a, b)?;
                if method == crate::traversal::PathMethod::ExactSearch {
                    exact += 1;
                }
                let ok = w.is_hamilton_path(t.graph()) && w.start() == a && w.end() == b;
                report = report.require(ok, (a, b));
            }
        }
        Ok(report.fact("pairs", order * (order - 1)).fact("exact_search_pairs", exact))
    });
    out.push(guard(check, name, r));
}

fn color_suite(name: &str, x: &Multigraph, out: &mut Vec<VerificationReport>) {
    out.push(guard("complete-truncation-class-one", name, check_class_one_truncation(x, name)));
    out.push(guard(
        "complete-truncation-chromatic-number",
        name,
        check_chi_of_complete_truncation(x, name),
    ));

    let check = "truncation-one-factorization";
    let r = one_factorization_of_truncation(x).map(|(t, classes)| {
        VerificationReport::new(check, name)
            .fact("factors", classes.len())
            .require(classes.len() == t.graph().max_valency(), classes.len())
    });
    out.push(guard(check, name, r));

    let check = "complete-truncation-class-two";
    let r = (|| {
        let report = VerificationReport::new(check, name);
        let d = x.max_valency();
        if d.is_multiple_of(2) || crate::coloring::classify(x)? == crate::coloring::EdgeClass::ClassI {
            return Ok(report.skipped("source is class I or has even maximum valency"));
        }
        let t = complete_truncation(x)?;
        let c = chromatic_index_exact(t.graph())?;
        Ok(report
            .fact("max_valency", d)
            .fact("chromatic_index", c.count)
            .require(c.count == d + 1, &c))
    })();
    out.push(guard(check, name, r));

    let d = x.max_valency();
    let complete_size = complete_truncation(x).map(|t| t.graph().size()).unwrap_or(usize::MAX);
    if d > 2 && complete_size <= SPECTRUM_MAX_SIZE {
        let check = "chromatic-index-spectrum";
        let high = complete_truncation(x).and_then(|t| Ok(chromatic_index_exact(t.graph())?.count));
        match high {
            Ok(high) => {
                for k in 3..=high {
                    let subject = format!("{name}/k={k}");
                    let r = chromatic_index_spectrum(x, k).and_then(|w| {
                        let exact = chromatic_index_exact(w.truncation.graph())?.count;
                        Ok(spectrum_report(check, &subject, k, exact, &w))
                    });
                    out.push(guard(check, &subject, r));
                }
            }
            Err(e) => out.push(guard(check, name, Err(e))),
        }
    }
    if d > 1 && complete_size <= SPECTRUM_MAX_SIZE {
        let check = "chromatic-number-spectrum";
        let ks: Vec<usize> = if d == 2 { vec![2] } else { (3..=d).collect() };
        for k in ks {
            let subject = format!("{name}/k={k}");
            let r = chromatic_number_spectrum(x, k).and_then(|w| {
                let exact = crate::graph::chromatic_number_exact(w.truncation.graph())?.count;
                Ok(spectrum_report(check, &subject, k, exact, &w))
            });
            out.push(guard(check, &subject, r));
        }
    }
}

fn spectrum_report(
    check: &str,
    subject: &str,
    k: usize,
    exact: usize,
    w: &crate::coloring::SpectrumWitness,
) -> VerificationReport {
    let steps_ok = w.trace.windows(2).all(|p| p[1] == p[0] || p[1] == p[0] + 1);
    VerificationReport::new(check, subject)
        .fact("k", k)
        .fact("exact", exact)
        .fact("trace", &w.trace)
        .require(exact == k && w.truncation.is_cohesive() && steps_ok, w)
}

fn planar_suite(name: &str, x: &Multigraph, seeds: u64, out: &mut Vec<VerificationReport>) {
    let x_planar = match is_planar(&x.underlying_simple()) {
        Ok(p) => p.planar,
        Err(e) => {
            out.push(guard("cohesive-planarity", name, Err(e)));
            return;
        }
    };
    let two_connected = x.order() >= 3 && vertex_connectivity(x).is_ok_and(|k| k >= 2);
    let mut run = |subject: String, t: Result<crate::truncation::Truncation>| {
        if !x_planar {
            let r = t.and_then(|t| check_nonplanar_lemma(&t, &subject));
            out.push(guard("nonplanar-source", &subject, r));
        } else if two_connected {
            let r = t.and_then(|t| check_cohesive_planarity_theorem(&t, &subject));
            out.push(guard("cohesive-planarity", &subject, r));
        }
    };
    run(format!("{name}/complete"), complete_truncation(x));
    run(format!("{name}/paths"), spanning_path_truncation(x));
    for s in 0..seeds {
        run(format!("{name}/seed={s}"), random_cohesive_truncation(x, seed_density(s), s));
    }
    if x_planar && !two_connected {
        out.push(VerificationReport::new("cohesive-planarity", name).skipped("source is planar but not 2-connected"));
    }
}

/// Catalog graphs by name, or the whole catalog when `names` is empty.
pub fn graphs_for(names: &[String]) -> Result<Vec<(String, Multigraph)>> {
    if names.is_empty() {
        return Ok(crate::catalog::all().into_iter().map(|(n, g)| (n.to_string(), g)).collect());
    }
    crate::catalog::select(names)
}
