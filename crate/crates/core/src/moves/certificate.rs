use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{apply, Move};
use crate::diagram::{catalog, Diagram};
use crate::error::{Error, Result};

/// Where a certificate starts.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum StartDiagram {
    Catalog { catalog: String },
    Pd { pd: String },
    Inline(Diagram),
}

impl StartDiagram {
    pub fn diagram(&self) -> Result<Diagram> {
        match self {
            StartDiagram::Catalog { catalog: name } => catalog::catalog(name),
            StartDiagram::Pd { pd } => Diagram::parse_pd(pd),
            StartDiagram::Inline(d) => Diagram::new(d.crossings().to_vec(), d.free_loops()),
        }
    }
}

/// What the certificate says the replay ends with.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Claim {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub final_crossings: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub final_components: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub two_two_moves: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MoveCertificate {
    pub start: StartDiagram,
    pub steps: Vec<Move>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub claim: Option<Claim>,
}

impl MoveCertificate {
    pub fn from_json_str(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Malformed { line: e.line(), reason: e.to_string() })
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serializes")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CertificateReport {
    pub steps: usize,
    pub final_crossings: usize,
    pub final_components: usize,
    pub two_two_moves: usize,
    pub move_counts: BTreeMap<String, usize>,
    pub final_pd: String,
}

/// Replay every step. The first failing step, or a claim the final diagram
/// does not meet, is reported as [`Error::StepFailed`].
pub fn verify_certificate(c: &MoveCertificate) -> Result<CertificateReport> {
    let mut d = c.start.diagram().map_err(|e| Error::StepFailed { index: 0, reason: format!("start: {e}") })?;
    let mut counts: BTreeMap<String, usize> = BTreeMap::new();
    let mut two_two = 0;
    for (index, m) in c.steps.iter().enumerate() {
        d = apply(&d, m).map_err(|e| Error::StepFailed { index, reason: e.to_string() })?;
        *counts.entry(m.kind.name().to_string()).or_default() += 1;
        two_two += m.kind.is_two_two() as usize;
    }
    let report = CertificateReport {
        steps: c.steps.len(),
        final_crossings: d.crossing_count(),
        final_components: d.components(),
        two_two_moves: two_two,
        move_counts: counts,
        final_pd: d.to_pd_string(),
    };
    if let Some(claim) = &c.claim {
        let fail = |what: &str, want: usize, got: usize| Error::StepFailed {
            index: c.steps.len(),
            reason: format!("claimed {what} {want}, replay gives {got}"),
        };
        let checks = [
            ("final crossings", claim.final_crossings, report.final_crossings),
            ("final components", claim.final_components, report.final_components),
            ("(2,2)-moves", claim.two_two_moves, report.two_two_moves),
        ];
        for (what, want, got) in checks {
            if let Some(w) = want {
                if w != got {
                    return Err(fail(what, w, got));
                }
            }
        }
    }
    Ok(report)
}
