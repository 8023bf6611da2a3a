use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::sim::Transcript;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Stats {
    pub count: usize,
    pub mean: f64,
    pub std: f64,
    pub min: f64,
    pub p50: f64,
    pub p90: f64,
    pub max: f64,
}

impl Stats {
    pub fn of(samples: &[f64]) -> Option<Stats> {
        if samples.is_empty() {
            return None;
        }
        let mut s = samples.to_vec();
        s.sort_by(f64::total_cmp);
        let count = s.len();
        let mean = s.iter().sum::<f64>() / count as f64;
        let var = s.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / count as f64;
        let q = |p: f64| s[((count - 1) as f64 * p).round() as usize];
        Some(Stats {
            count,
            mean,
            std: var.sqrt(),
            min: s[0],
            p50: q(0.5),
            p90: q(0.9),
            max: s[count - 1],
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TranscriptSummary {
    pub rounds_used: usize,
    pub charged_rounds: usize,
    pub max_bits: usize,
    pub violations: usize,
    pub messages: u64,
    pub charges: BTreeMap<String, usize>,
}

impl From<&Transcript> for TranscriptSummary {
    fn from(t: &Transcript) -> Self {
        let mut charges = BTreeMap::new();
        for c in &t.primitive_charges {
            *charges.entry(c.name.clone()).or_insert(0) += c.charged;
        }
        TranscriptSummary {
            rounds_used: t.rounds_used,
            charged_rounds: t.charged_rounds,
            max_bits: t.max_bits(),
            violations: t.violations.len(),
            messages: t.messages,
            charges,
        }
    }
}

/// Output of every CLI subcommand.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct ExperimentReport {
    pub command: String,
    pub config: BTreeMap<String, Value>,
    pub runs: Vec<Value>,
    pub aggregates: BTreeMap<String, Stats>,
    pub fitted: BTreeMap<String, f64>,
    pub valid: bool,
}

impl ExperimentReport {
    pub fn new(command: &str) -> Self {
        ExperimentReport {
            command: command.into(),
            valid: true,
            ..Self::default()
        }
    }

    pub fn set(&mut self, key: &str, value: impl Serialize) {
        self.config.insert(
            key.into(),
            serde_json::to_value(value).expect("serializable config"),
        );
    }

    pub fn push_run(&mut self, run: impl Serialize) {
        self.runs
            .push(serde_json::to_value(run).expect("serializable run"));
    }

    pub fn aggregate(&mut self, key: &str, samples: &[f64]) {
        if let Some(s) = Stats::of(samples) {
            self.aggregates.insert(key.into(), s);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stats_of_small_sample() {
        let s = Stats::of(&[3.0, 1.0, 2.0, 4.0]).unwrap();
        assert_eq!((s.min, s.max, s.count), (1.0, 4.0, 4));
        assert!((s.mean - 2.5).abs() < 1e-12);
        assert!((s.std - 1.25f64.sqrt()).abs() < 1e-12);
        assert!(Stats::of(&[]).is_none());
    }
}
