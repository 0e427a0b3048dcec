//! Poset corpora and the property suite that runs every check over them.
//!
//! A run covers every labeled poset up to `exhaustive_max_d` followed by
//! `random_trials` random posets. Posets are checked in parallel; results
//! are merged in corpus order, so a fixed config always yields the same
//! report.

mod checks;
mod generate;

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

pub use checks::{
    check_facts, check_poset, run, CheckOptions, Mutation, Outcome, PosetFacts, Property,
};
pub use generate::{
    enumerate_labeled_posets, random_poset, Density, LabeledPosets, EXHAUSTIVE_MAX_D,
};

use crate::par::Exec;
use crate::poset::Poset;

/// Largest `d` the geometric oracle is run on.
pub const ORACLE_MAX_D: usize = 6;
/// Largest `d` drawn for random posets.
pub const RANDOM_MAX_D: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SuiteConfig {
    pub exhaustive_max_d: usize,
    pub random_trials: usize,
    pub random_d_range: (usize, usize),
    pub seed: u64,
    pub oracle_max_d: usize,
    pub edge_density: Density,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mutation: Option<Mutation>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            exhaustive_max_d: 4,
            random_trials: 1000,
            random_d_range: (5, 8),
            seed: 2014,
            oracle_max_d: 5,
            edge_density: Density::HALF,
            mutation: None,
        }
    }
}

impl SuiteConfig {
    pub fn validate(&self) -> Result<(), String> {
        if self.exhaustive_max_d > EXHAUSTIVE_MAX_D {
            return Err(format!(
                "exhaustive_max_d = {} exceeds the limit of {EXHAUSTIVE_MAX_D}",
                self.exhaustive_max_d
            ));
        }
        if self.oracle_max_d > ORACLE_MAX_D {
            return Err(format!(
                "oracle_max_d = {} exceeds the limit of {ORACLE_MAX_D}",
                self.oracle_max_d
            ));
        }
        let (lo, hi) = self.random_d_range;
        if self.random_trials > 0 && (lo == 0 || lo > hi || hi > RANDOM_MAX_D) {
            return Err(format!(
                "random_d_range = ({lo}, {hi}) must satisfy 1 <= min <= max <= {RANDOM_MAX_D}"
            ));
        }
        Ok(())
    }
}

/// Where a corpus poset came from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Origin {
    Exhaustive { d: usize, index: usize },
    Random { trial: usize, seed: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    /// The poset in the text file format.
    pub poset: String,
    pub origin: Origin,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PropertyReport {
    pub name: &'static str,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
    pub counterexample: Option<Counterexample>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CorpusStats {
    pub posets: usize,
    pub exhaustive: usize,
    pub random: usize,
    pub oracle_posets: usize,
    pub posets_by_d: BTreeMap<usize, usize>,
    pub max_vertices: usize,
    pub total_edges: usize,
    /// Posets with a non-induced copy of X but no induced one.
    pub weak_x_only: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub config: SuiteConfig,
    pub all_passed: bool,
    pub properties: Vec<PropertyReport>,
    pub stats: CorpusStats,
    /// Wall-clock time; left out of the JSON so reports compare byte for byte.
    #[serde(skip)]
    pub elapsed: Duration,
}

impl SuiteReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn property(&self, prop: Property) -> &PropertyReport {
        self.properties
            .iter()
            .find(|r| r.name == prop.name())
            .expect("every property is reported")
    }
}

/// Seed of random trial `trial`, mixed from the suite seed.
pub fn trial_seed(seed: u64, trial: usize) -> u64 {
    // splitmix64 step
    let mut z = seed ^ (trial as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// The suite's corpus: exhaustive posets by size, then random trials.
pub fn build_corpus(cfg: &SuiteConfig) -> Vec<(Poset, Origin)> {
    let mut corpus = Vec::new();
    for d in 1..=cfg.exhaustive_max_d {
        let all = enumerate_labeled_posets(d).expect("size validated");
        corpus.extend(
            all.enumerate()
                .map(|(index, p)| (p, Origin::Exhaustive { d, index })),
        );
    }
    let (lo, hi) = cfg.random_d_range;
    for trial in 0..cfg.random_trials {
        let seed = trial_seed(cfg.seed, trial);
        let d = lo + (seed % (hi - lo + 1) as u64) as usize;
        let p = random_poset(d, cfg.edge_density, seed).expect("size validated");
        corpus.push((p, Origin::Random { trial, seed }));
    }
    corpus
}

pub fn run_property_suite(cfg: &SuiteConfig) -> Result<SuiteReport, String> {
    run_property_suite_with(cfg, Exec::default())
}

pub fn run_property_suite_with(cfg: &SuiteConfig, exec: Exec) -> Result<SuiteReport, String> {
    cfg.validate()?;
    let start = Instant::now();
    let corpus = build_corpus(cfg);

    let results = exec.map(&corpus, |(p, _)| {
        let facts = PosetFacts::new(p, cfg.mutation);
        let outcomes = check_facts(&facts, p.len() <= cfg.oracle_max_d);
        (
            outcomes,
            facts.order.vertex_count(),
            facts.order.edge_count(),
        )
    });

    let mut properties: Vec<PropertyReport> = Property::ALL
        .iter()
        .map(|prop| PropertyReport {
            name: prop.name(),
            passed: 0,
            failed: 0,
            skipped: 0,
            counterexample: None,
        })
        .collect();
    let mut stats = CorpusStats {
        posets: corpus.len(),
        exhaustive: 0,
        random: 0,
        oracle_posets: 0,
        posets_by_d: BTreeMap::new(),
        max_vertices: 0,
        total_edges: 0,
        weak_x_only: 0,
    };

    for ((p, origin), (outcomes, n_vertices, n_edges)) in corpus.iter().zip(&results) {
        match origin {
            Origin::Exhaustive { .. } => stats.exhaustive += 1,
            Origin::Random { .. } => stats.random += 1,
        }
        if p.len() <= cfg.oracle_max_d {
            stats.oracle_posets += 1;
        }
        *stats.posets_by_d.entry(p.len()).or_default() += 1;
        stats.max_vertices = stats.max_vertices.max(*n_vertices);
        stats.total_edges += n_edges;
        if p.contains_weak_x() && p.find_x_subposet().is_none() {
            stats.weak_x_only += 1;
        }
        for (report, (_, outcome)) in properties.iter_mut().zip(outcomes) {
            match outcome {
                Outcome::Pass => report.passed += 1,
                Outcome::Skip => report.skipped += 1,
                Outcome::Fail(detail) => {
                    report.failed += 1;
                    if report.counterexample.is_none() {
                        report.counterexample = Some(Counterexample {
                            poset: p.to_text(),
                            origin: origin.clone(),
                            detail: detail.clone(),
                        });
                    }
                }
            }
        }
    }
    Ok(SuiteReport {
        config: cfg.clone(),
        all_passed: properties.iter().all(|r| r.failed == 0),
        properties,
        stats,
        elapsed: start.elapsed(),
    })
}
