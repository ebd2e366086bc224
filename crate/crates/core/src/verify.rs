//! Exhaustive verification suites over `S_n`, addressable by name.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use crate::crystal::{decompose, CrystalWord};
use crate::error::{Error, Result};
use crate::klcells::{
    verify_bar_invariance, verify_basal_module, verify_knuth_mu, verify_prop_descents, CellGraph,
    CellPartition, KlEngine,
};
use crate::report::Report;
use crate::symgroup::{enumerate_with_limit, Permutation, Side, HARD_MAX_DEGREE};
use crate::tableaux::{evacuation, knuth_class, p_symbol, q_symbol, Tableau};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Suite {
    TheoremA,
    Knuth,
    Evacuation,
    BarInvariance,
    Descents,
    KnuthMu,
    CrystalDjm,
    CrystalTheoremA,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::TheoremA,
        Suite::Knuth,
        Suite::Evacuation,
        Suite::BarInvariance,
        Suite::Descents,
        Suite::KnuthMu,
        Suite::CrystalDjm,
        Suite::CrystalTheoremA,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::TheoremA => "theorem-a",
            Suite::Knuth => "knuth",
            Suite::Evacuation => "evacuation",
            Suite::BarInvariance => "bar-invariance",
            Suite::Descents => "descents",
            Suite::KnuthMu => "knuth-mu",
            Suite::CrystalDjm => "crystal-djm",
            Suite::CrystalTheoremA => "crystal-theorem-a",
        }
    }

    /// Whether the suite needs KL polynomials.
    pub fn uses_kl(self) -> bool {
        matches!(
            self,
            Suite::TheoremA
                | Suite::BarInvariance
                | Suite::Descents
                | Suite::KnuthMu
                | Suite::CrystalTheoremA
        )
    }

    /// Smallest `n` at which the suite only runs with the long-run flag.
    pub fn long_threshold(self) -> usize {
        match self {
            Suite::Descents | Suite::KnuthMu => 5,
            Suite::TheoremA | Suite::BarInvariance | Suite::CrystalDjm | Suite::CrystalTheoremA => 6,
            Suite::Knuth | Suite::Evacuation => 9,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| {
                let names: Vec<&str> = Suite::ALL.iter().map(|s| s.name()).collect();
                Error::Parse(format!(
                    "unknown suite {s:?}; expected one of {}",
                    names.join(", ")
                ))
            })
    }
}

/// Runs `suite` on `S_n`. KL-based suites use `engine` when given (it must
/// be for the same `n`), otherwise a fresh one.
pub fn run_suite(suite: Suite, n: usize, engine: Option<&KlEngine>) -> Result<Report> {
    if n == 0 || n > HARD_MAX_DEGREE {
        return Err(Error::DegreeTooLarge {
            n,
            max: HARD_MAX_DEGREE,
        });
    }
    let owned;
    let engine = if suite.uses_kl() {
        match engine {
            Some(e) if e.n() == n => Some(e),
            Some(e) => {
                return Err(Error::DegreeMismatch {
                    left: e.n(),
                    right: n,
                })
            }
            None => {
                owned = KlEngine::with_options(n, Side::Left, HARD_MAX_DEGREE)?;
                Some(&owned)
            }
        }
    } else {
        None
    };
    match suite {
        Suite::TheoremA => Ok(theorem_a(engine.expect("kl suite"))),
        Suite::Knuth => knuth_classes(n),
        Suite::Evacuation => evacuation_identity(n),
        Suite::BarInvariance => Ok(verify_bar_invariance(engine.expect("kl suite"))),
        Suite::Descents => {
            let e = engine.expect("kl suite");
            let mut report = verify_prop_descents(e);
            let basal = verify_basal_module(e);
            report.absorb(basal);
            Ok(report)
        }
        Suite::KnuthMu => Ok(verify_knuth_mu(engine.expect("kl suite"))),
        Suite::CrystalDjm => crate::crystal::verify_djm(n, n as u32),
        Suite::CrystalTheoremA => crystal_theorem_a(engine.expect("kl suite")),
    }
}

fn group_by<K: Ord>(
    items: &[Permutation],
    key: impl Fn(&Permutation) -> K,
) -> BTreeSet<BTreeSet<Permutation>> {
    let mut groups: BTreeMap<K, BTreeSet<Permutation>> = BTreeMap::new();
    for w in items {
        groups.entry(key(w)).or_default().insert(w.clone());
    }
    groups.into_values().collect()
}

fn show_set(set: &BTreeSet<Permutation>) -> String {
    let parts: Vec<String> = set.iter().map(|w| w.to_string()).collect();
    format!("{{{}}}", parts.join(","))
}

/// Compares two partitions class by class; every class of `found` must be a
/// class of `expected` and vice versa.
fn compare_partitions(
    report: &mut Report,
    found_name: &str,
    found: &BTreeSet<BTreeSet<Permutation>>,
    expected_name: &str,
    expected: &BTreeSet<BTreeSet<Permutation>>,
) {
    for class in found {
        report.check(expected.contains(class), || {
            format!(
                "{found_name} class {} is not a {expected_name} class",
                show_set(class)
            )
        });
    }
    for class in expected {
        report.check(found.contains(class), || {
            format!(
                "{expected_name} class {} is not a {found_name} class",
                show_set(class)
            )
        });
    }
}

/// Left cells from the KL graph coincide with the fibres of `Q`.
pub fn theorem_a(engine: &KlEngine) -> Report {
    let n = engine.n();
    Report::run("theorem-a", n, |report| {
        let graph = CellGraph::build(engine);
        let cells = CellPartition::from_graph(&graph, Side::Left).as_sets();
        let elements = engine.group().elements();
        let fibres = group_by(elements, q_symbol);
        compare_partitions(report, "left cell", &cells, "Q-symbol", &fibres);
        for cell in &cells {
            let qs: BTreeSet<Tableau> = cell.iter().map(q_symbol).collect();
            if qs.len() > 1 {
                let shown: Vec<String> = qs.iter().map(Tableau::to_string).collect();
                report.note(format!(
                    "cell {} carries Q-symbols {}",
                    show_set(cell),
                    shown.join(" ")
                ));
            }
        }
        report.note(format!("{} elements, {} cells", elements.len(), cells.len()));
    })
}

/// Knuth classes coincide with the fibres of `P`.
pub fn knuth_classes(n: usize) -> Result<Report> {
    let elements: Vec<Permutation> = enumerate_with_limit(n, HARD_MAX_DEGREE)?.collect();
    Ok(Report::run("knuth", n, |report| {
        let mut classes = BTreeSet::new();
        let mut seen = BTreeSet::new();
        for w in &elements {
            if !seen.contains(w) {
                let class = knuth_class(w);
                seen.extend(class.iter().cloned());
                classes.insert(class);
            }
        }
        let fibres = group_by(&elements, p_symbol);
        compare_partitions(report, "Knuth", &classes, "P-symbol", &fibres);
        report.note(format!("{} elements, {} classes", elements.len(), classes.len()));
    }))
}

/// `transpose(evacuation(Q(w))) = Q(w w0)` and evacuation is an involution.
pub fn evacuation_identity(n: usize) -> Result<Report> {
    let elements: Vec<Permutation> = enumerate_with_limit(n, HARD_MAX_DEGREE)?.collect();
    let w0 = Permutation::longest(n);
    Ok(Report::run("evacuation", n, |report| {
        for w in &elements {
            let q = q_symbol(w);
            let evac = evacuation(&q).expect("Q is standard");
            let reversed = q_symbol(&w.compose(&w0).expect("same degree"));
            report.check(evac.transpose() == reversed, || {
                format!("w={w}: evac(Q)^t = {} but Q(w w0) = {reversed}", evac.transpose())
            });
            report.check(evacuation(&evac).expect("standard") == q, || {
                format!("w={w}: evacuation is not an involution on {q}")
            });
        }
        report.note(format!("{} elements", elements.len()));
    }))
}

/// Permutation words grouped by crystal component (rank `n`) coincide with
/// the fibres of `Q` and with the left cells.
pub fn crystal_theorem_a(engine: &KlEngine) -> Result<Report> {
    let n = engine.n();
    let mut failure = None;
    let report = Report::run("crystal-theorem-a", n, |report| {
        let comps = match decompose(n, n as u32) {
            Ok(c) => c,
            Err(e) => {
                failure = Some(e);
                return;
            }
        };
        let to_perm = |b: &CrystalWord| {
            Permutation::new(b.letters().iter().map(|&l| l as usize)).expect("permutation word")
        };
        let by_component: BTreeSet<BTreeSet<Permutation>> = comps
            .iter()
            .map(|c| {
                c.words
                    .iter()
                    .filter(|b| b.is_permutation())
                    .map(to_perm)
                    .collect::<BTreeSet<_>>()
            })
            .filter(|s| !s.is_empty())
            .collect();
        let elements = engine.group().elements();
        let fibres = group_by(elements, q_symbol);
        compare_partitions(report, "crystal component", &by_component, "Q-symbol", &fibres);
        let cells = CellPartition::from_graph(&CellGraph::build(engine), Side::Left).as_sets();
        compare_partitions(report, "crystal component", &by_component, "left cell", &cells);
        report.note(format!(
            "{} components of B^{n}, {} meet permutation words, {} left cells",
            comps.len(),
            by_component.len(),
            cells.len()
        ));
    });
    match failure {
        Some(e) => Err(e),
        None => Ok(report),
    }
}
