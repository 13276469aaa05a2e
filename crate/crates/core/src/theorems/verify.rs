use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use super::predict::{predict, PredictedDiagonal};
use super::sweep::CaseReport;
use crate::error::Result;
use crate::jacobitrudi::{build, NPoly, QBracket, QyPoly, Specialization, SpecializationKind};
use crate::partitions::Partition;

/// Which SNF route(s) to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum VerifyMethod {
    #[default]
    Reduce,
    Minors,
    Both,
}

impl FromStr for VerifyMethod {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "reduce" => Ok(VerifyMethod::Reduce),
            "minors" => Ok(VerifyMethod::Minors),
            "both" => Ok(VerifyMethod::Both),
            other => Err(format!("unknown method {other:?}")),
        }
    }
}

impl fmt::Display for VerifyMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            VerifyMethod::Reduce => "reduce",
            VerifyMethod::Minors => "minors",
            VerifyMethod::Both => "both",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub shape: Partition,
    pub t: usize,
    pub kind: SpecializationKind,
    pub predicted: PredictedDiagonal,
    /// Monic computed diagonal, rendered.
    pub computed: Vec<String>,
    /// Monic computed diagonal from the minors route, when it ran.
    pub computed_minors: Option<Vec<String>>,
    pub matches: bool,
    pub elapsed: Duration,
    pub method: VerifyMethod,
}

impl VerificationReport {
    pub fn to_case(&self) -> CaseReport {
        CaseReport {
            shape: self.shape.clone(),
            t: self.t,
            kind: self.kind,
            predicted: self.predicted.factored(),
            computed: self.computed.clone(),
            matches: self.matches,
            ms: self.elapsed.as_secs_f64() * 1e3,
        }
    }
}

/// Builds the matrix, computes its Smith diagonal and compares monic forms
/// against [`predict`].
pub fn verify(
    shape: &Partition,
    t: usize,
    kind: SpecializationKind,
    method: VerifyMethod,
) -> Result<VerificationReport> {
    match kind {
        SpecializationKind::NPoly => verify_with::<NPoly>(shape, t, method),
        SpecializationKind::QyPoly => verify_with::<QyPoly>(shape, t, method),
        SpecializationKind::QBracket => verify_with::<QBracket>(shape, t, method),
    }
}

pub fn verify_with<S: Specialization>(
    shape: &Partition,
    t: usize,
    method: VerifyMethod,
) -> Result<VerificationReport> {
    let start = Instant::now();
    let matrix = build::<S>(shape, t)?;
    let predicted = predict(shape, t, S::KIND)?;
    let expected = predicted.monic_entries::<S>();

    let reduced = matches!(method, VerifyMethod::Reduce | VerifyMethod::Both)
        .then(|| matrix.snf_reduce().diagonal);
    let minors = match method {
        VerifyMethod::Minors | VerifyMethod::Both => Some(matrix.snf_via_minors()?),
        VerifyMethod::Reduce => None,
    };
    let matches = reduced.iter().chain(minors.iter()).all(|d| *d == expected);
    let render = |d: &Vec<_>| d.iter().map(ToString::to_string).collect::<Vec<String>>();
    let computed = render(reduced.as_ref().or(minors.as_ref()).expect("at least one route ran"));
    let computed_minors = reduced.as_ref().and(minors.as_ref()).map(render);

    Ok(VerificationReport {
        shape: shape.clone(),
        t,
        kind: S::KIND,
        predicted,
        computed,
        computed_minors,
        matches,
        elapsed: start.elapsed(),
        method,
    })
}
