//! End-to-end analysis of one body: decision, partition, verification and an
//! optional oracle cross-check, gathered into a serializable report.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::decision::{analyze, BorsukAnalysis, CertificateJson, DecisionError};
use crate::geometry::{Chord, ConvexBody, Point2};
use crate::graph::is_bipartite_with_separation;
use crate::oracle::{cross_check, ConsistencyReport, OracleConfig, OracleError};
use crate::partition::{partition_for, verify_partition, Construction, Partition, PartitionError, VerificationReport};

#[derive(Clone, Debug, PartialEq)]
pub struct AnalysisOptions {
    pub eps_rel: f64,
    pub samples: usize,
    pub partition: bool,
    pub oracle: Option<OracleConfig>,
    pub timings: bool,
}

impl Default for AnalysisOptions {
    fn default() -> Self {
        AnalysisOptions { eps_rel: 1e-9, samples: 2048, partition: true, oracle: None, timings: false }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GraphSummary {
    pub classes: usize,
    pub edges: usize,
    pub bipartite: bool,
    pub separable: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PartitionSummary {
    pub construction: Construction,
    pub pieces: usize,
    pub piece_diameters: Vec<f64>,
    pub margin: f64,
    pub area_deficit: f64,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AnalysisReport {
    /// SHA-256 of the body in canonical JSON form.
    pub input_digest: String,
    pub body_kind: String,
    pub diameter: f64,
    pub diameter_witness: Chord,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub symmetry_center: Option<Point2>,
    pub graph: GraphSummary,
    pub alpha: u8,
    pub certificate: CertificateJson,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub warning: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub partition: Option<PartitionSummary>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle: Option<ConsistencyReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timings_ms: Option<BTreeMap<String, f64>>,
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum AnalysisError {
    #[error(transparent)]
    Decision(#[from] DecisionError),
    #[error(transparent)]
    Partition(#[from] PartitionError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error("{0}")]
    Verification(String),
}

/// Everything computed for one body, with the report built from it.
#[derive(Clone, Debug)]
pub struct Analysis {
    pub analysis: BorsukAnalysis,
    pub partition: Option<Partition>,
    pub verification: Option<VerificationReport>,
    pub report: AnalysisReport,
}

pub fn input_digest(body: &ConvexBody) -> String {
    Sha256::digest(body.to_json().as_bytes()).iter().map(|b| format!("{b:02x}")).collect()
}

struct Clock {
    enabled: bool,
    marks: BTreeMap<String, f64>,
    #[cfg(not(target_arch = "wasm32"))]
    last: Option<std::time::Instant>,
}

impl Clock {
    fn new(enabled: bool) -> Self {
        Clock {
            enabled,
            marks: BTreeMap::new(),
            #[cfg(not(target_arch = "wasm32"))]
            last: enabled.then(std::time::Instant::now),
        }
    }

    fn mark(&mut self, _name: &str) {
        #[cfg(not(target_arch = "wasm32"))]
        if let Some(last) = self.last {
            let now = std::time::Instant::now();
            self.marks.insert(_name.to_string(), (now - last).as_secs_f64() * 1e3);
            self.last = Some(now);
        }
    }

    fn finish(self) -> Option<BTreeMap<String, f64>> {
        self.enabled.then_some(self.marks)
    }
}

pub fn analyze_body(body: &ConvexBody, options: &AnalysisOptions) -> Result<Analysis, AnalysisError> {
    let mut clock = Clock::new(options.timings);
    let analysis = analyze(body, options.eps_rel)?;
    clock.mark("decision");

    let (partition, verification) = if options.partition {
        let part = partition_for(body, &analysis.certificate)?;
        clock.mark("partition");
        let rep =
            verify_partition(body, &part, options.samples).map_err(|e| AnalysisError::Verification(e.to_string()))?;
        clock.mark("verification");
        (Some(part), Some(rep))
    } else {
        (None, None)
    };

    let oracle = match &options.oracle {
        Some(cfg) => {
            let r = cross_check(body, cfg)?;
            clock.mark("oracle");
            Some(r)
        }
        None => None,
    };

    let (a, b) = analysis.outline.diameter_witness();
    let graph = &analysis.graph;
    let report = AnalysisReport {
        input_digest: input_digest(body),
        body_kind: body.kind().to_string(),
        diameter: analysis.outline.diameter(),
        diameter_witness: Chord::new(a, b).expect("diameter endpoints are distinct"),
        symmetry_center: analysis.symmetry_center,
        graph: GraphSummary {
            classes: graph.classes.len(),
            edges: graph.edges.len(),
            bipartite: graph.odd_cycle().is_none(),
            separable: is_bipartite_with_separation(graph).is_some(),
        },
        alpha: analysis.certificate.alpha(),
        certificate: analysis.certificate.to_json_value(),
        warning: analysis.warning.clone(),
        partition: partition.as_ref().zip(verification.as_ref()).map(|(p, v)| PartitionSummary {
            construction: p.construction,
            pieces: p.pieces.len(),
            piece_diameters: p.piece_diameters.clone(),
            margin: v.margin,
            area_deficit: v.area_deficit,
            pass: v.pass,
        }),
        oracle,
        timings_ms: clock.finish(),
    };
    Ok(Analysis { analysis, partition, verification, report })
}
