use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::verify::{verify, VerifyMethod};
use crate::jacobitrudi::SpecializationKind;
use crate::partitions::Partition;

/// One verified `(λ, t, kind)` case, as serialized in reports.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CaseReport {
    pub shape: Partition,
    pub t: usize,
    pub kind: SpecializationKind,
    pub predicted: Vec<String>,
    pub computed: Vec<String>,
    #[serde(rename = "match")]
    pub matches: bool,
    pub ms: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepReport {
    pub cases: usize,
    pub failures: Vec<CaseReport>,
    pub total_ms: f64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepConfig {
    pub max_weight: usize,
    pub extra_rows: usize,
    pub kinds: Vec<SpecializationKind>,
    pub method: VerifyMethod,
    pub parallel: bool,
}

impl SweepConfig {
    pub fn new(max_weight: usize, extra_rows: usize, kinds: &[SpecializationKind]) -> Self {
        SweepConfig {
            max_weight,
            extra_rows,
            kinds: kinds.to_vec(),
            method: VerifyMethod::Reduce,
            parallel: false,
        }
    }

    /// Cases in sweep order: by weight, partitions in reverse lexicographic
    /// order, then `t`, then kind.
    pub fn cases(&self) -> Vec<(Partition, usize, SpecializationKind)> {
        let mut out = Vec::new();
        for shape in Partition::up_to(self.max_weight).into_iter().filter(|p| !p.is_empty()) {
            for t in shape.len()..=shape.len() + self.extra_rows {
                for &kind in &self.kinds {
                    out.push((shape.clone(), t, kind));
                }
            }
        }
        out
    }
}

/// Verifies every nonempty partition of weight at most `max_weight` at each
/// `t` in `ℓ(λ) ..= ℓ(λ) + extra_rows`. Failures, including errors, are
/// collected rather than returned.
pub fn sweep(config: &SweepConfig) -> SweepReport {
    let start = Instant::now();
    let cases = config.cases();
    let run = |(shape, t, kind): &(Partition, usize, SpecializationKind)| {
        let case_start = Instant::now();
        match verify(shape, *t, *kind, config.method) {
            Ok(r) => r.to_case(),
            Err(e) => CaseReport {
                shape: shape.clone(),
                t: *t,
                kind: *kind,
                predicted: Vec::new(),
                computed: vec![format!("error: {e}")],
                matches: false,
                ms: case_start.elapsed().as_secs_f64() * 1e3,
            },
        }
    };
    let reports: Vec<CaseReport> = if config.parallel {
        cases.par_iter().map(run).collect()
    } else {
        cases.iter().map(run).collect()
    };
    SweepReport {
        cases: reports.len(),
        failures: reports.into_iter().filter(|r| !r.matches).collect(),
        total_ms: start.elapsed().as_secs_f64() * 1e3,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_sweep_has_no_failures() {
        let report = sweep(&SweepConfig::new(4, 1, &[SpecializationKind::NPoly]));
        // 11 nonempty partitions of weight <= 4, two values of t each
        assert_eq!(report.cases, 22);
        assert!(report.failures.is_empty(), "{:?}", report.failures);
    }

    #[test]
    fn empty_sweep() {
        let report = sweep(&SweepConfig::new(0, 2, &SpecializationKind::ALL));
        assert_eq!(report.cases, 0);
        assert!(report.failures.is_empty());
    }

    #[test]
    fn weight_one_all_rings() {
        let cfg = SweepConfig::new(1, 0, &SpecializationKind::ALL);
        assert_eq!(cfg.cases().len(), 3);
        assert!(sweep(&cfg).failures.is_empty());
    }

    #[test]
    fn parallel_matches_sequential_verdicts() {
        let mut cfg = SweepConfig::new(3, 1, &SpecializationKind::ALL);
        let seq = sweep(&cfg);
        cfg.parallel = true;
        let par = sweep(&cfg);
        assert_eq!(seq.cases, par.cases);
        assert_eq!(seq.failures.len(), par.failures.len());
    }

    #[test]
    fn report_json_round_trip() {
        let report = sweep(&SweepConfig::new(2, 0, &[SpecializationKind::QBracket]));
        let json = serde_json::to_string(&report).unwrap();
        let back: SweepReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back, report);
        let case = crate::theorems::verify(
            &Partition::new(vec![2, 1]).unwrap(),
            2,
            SpecializationKind::NPoly,
            VerifyMethod::Reduce,
        )
        .unwrap()
        .to_case();
        let v: serde_json::Value = serde_json::to_value(&case).unwrap();
        assert_eq!(v["shape"], "2,1");
        assert_eq!(v["kind"], "n");
        assert_eq!(v["match"], true);
        assert_eq!(v["computed"][1], "n^3 - n");
        assert!(v["ms"].is_number());
    }
}
