//! Seeded conjecture sweep over many random ideals.

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::classify::{classify_with, KoszulClass};
use crate::config::{Config, DEFAULT_TAYLOR_CAP};
use crate::field::Rational;
use crate::generate::{derive_seed, random_ideal, GeneratorConfig};
use crate::resolution::{resolve, Resolution};

#[derive(Clone, Debug, Serialize)]
pub struct SweepConfig {
    pub seed: u64,
    pub count: usize,
    pub generator: GeneratorConfig,
    pub dim_cap: usize,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            seed: 0,
            count: 500,
            generator: GeneratorConfig::default(),
            dim_cap: crate::ideal::DEFAULT_DIM_CAP,
        }
    }
}

/// One noteworthy outcome with what is needed to reproduce it.
#[derive(Clone, Debug, Serialize)]
pub struct Finding {
    pub index: usize,
    /// Seed handed to the generator for this ideal.
    pub seed: u64,
    pub ideal: String,
    pub kind: String,
    pub class: String,
    pub detail: String,
    /// Full resolution dump for violations of the `f3` clauses.
    pub resolution: Option<Value>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SweepOutcome {
    pub config: SweepConfig,
    /// `(label, count)` sorted by label.
    pub class_counts: Vec<(String, usize)>,
    pub findings: Vec<Finding>,
}

impl SweepOutcome {
    pub fn to_json(&self) -> Value {
        json!({
            "seed": self.config.seed,
            "count": self.config.count,
            "generator": self.config.generator,
            "class_counts": self.class_counts,
            "findings": self.findings,
        })
    }
}

fn examine(index: usize, cfg: &SweepConfig) -> (Option<String>, Vec<Finding>) {
    let seed = derive_seed(cfg.seed, index as u64);
    let gcfg = GeneratorConfig { seed, ..cfg.generator.clone() };
    let finding = |ideal: String, kind: &str, class: String, detail: String, resolution: Option<Value>| Finding {
        index,
        seed,
        ideal,
        kind: kind.to_string(),
        class,
        detail,
        resolution,
    };
    let ideal = match random_ideal(&gcfg) {
        Ok(i) => i,
        Err(e) => return (None, vec![finding(String::new(), "error", String::new(), e.to_string(), None)]),
    };
    let ccfg = Config { dim_cap: cfg.dim_cap, taylor_cap: DEFAULT_TAYLOR_CAP, confirm_with_beta2: true, ..Config::default() };
    let report = match classify_with::<Rational>(&ideal, &ccfg) {
        Ok(r) => r,
        Err(e) => {
            return (None, vec![finding(ideal.to_string(), "error", String::new(), e.to_string(), None)]);
        }
    };
    let label = report.cls.label();
    let dump = || resolve::<Rational>(&ideal, &ccfg).ok().map(|r: Resolution<Rational>| r.to_json());
    let mut out = Vec::new();
    let a = &report.audit;
    if !a.ires_pure_power {
        out.push(finding(ideal.to_string(), "ires_pure_power", label.clone(), a.offending_entries.join("; "), dump()));
    }
    if !a.ires_mu1 {
        let detail = format!(
            "mu1 = {} but m + n - 1 - #(f3 entries in I) = {}",
            report.mu1,
            report.betti[2] as i64 - a.f3_entries_in_ideal as i64
        );
        out.push(finding(ideal.to_string(), "ires_mu1", label.clone(), detail, dump()));
    }
    if a.compclass_match == Some(false) {
        let detail = format!("generator pattern case {} does not predict {}", a.compclass_case, label);
        out.push(finding(ideal.to_string(), "compclass", label.clone(), detail, None));
    }
    match &report.cls {
        KoszulClass::Unclassified(reason) => {
            out.push(finding(ideal.to_string(), "unclassified", label.clone(), reason.clone(), dump()));
        }
        KoszulClass::G(r) => {
            out.push(finding(ideal.to_string(), "g_class", label.clone(), format!("(p,q,r) = (0,1,{r})"), dump()));
        }
        _ => {}
    }
    (Some(label), out)
}

/// Classifies `count` seeded ideals in parallel and collects findings,
/// sorted by index so the output does not depend on scheduling.
pub fn run_sweep(cfg: &SweepConfig) -> SweepOutcome {
    let results: Vec<(Option<String>, Vec<Finding>)> = (0..cfg.count).into_par_iter().map(|i| examine(i, cfg)).collect();
    let mut counts = std::collections::BTreeMap::new();
    let mut findings = Vec::new();
    for (label, f) in results {
        if let Some(l) = label {
            *counts.entry(l).or_insert(0usize) += 1;
        }
        findings.extend(f);
    }
    findings.sort_by(|a, b| a.index.cmp(&b.index).then_with(|| a.kind.cmp(&b.kind)));
    SweepOutcome { config: cfg.clone(), class_counts: counts.into_iter().collect(), findings }
}
