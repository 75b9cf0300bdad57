//! Borsuk number of a planar convex body, with a checkable certificate.
//!
//! Centrally symmetric bodies are decided by whether the diameter-segment
//! endpoints fill the whole boundary (only a disc does). Everything else goes
//! through the separated two-coloring search on the diameter graph; when no
//! split exists the strongest available obstruction is reported.

use serde::{Deserialize, Serialize};

use crate::diameter::{diameter_pairs_of, DiameterPairs};
use crate::geometry::{symmetry_center, Chord, ConvexBody, Outline, Point2};
use crate::graph::{graph_from_pairs, DiameterGraph, SeparatedColoring, MIN_GAP};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum DecisionError {
    #[error("eps_rel {0} outside [0, 1e-3]")]
    InvalidTolerance(f64),
}

/// Why no two-piece division exists.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Obstruction {
    /// Class indices of an odd cycle in the diameter graph.
    OddCycle {
        classes: Vec<usize>,
    },
    /// Closures of the vertex classes cover the whole boundary.
    FullBoundaryVertexSet,
    /// Parameter where the closures of any candidate split meet.
    ClosureContact {
        t: f64,
    },
    EuclideanBall {
        center: Point2,
        radius: f64,
    },
}

#[derive(Clone, Debug, PartialEq)]
pub enum BorsukCertificate {
    Two { coloring: SeparatedColoring, chord: Chord },
    Three(Obstruction),
}

impl BorsukCertificate {
    pub fn alpha(&self) -> u8 {
        match self {
            BorsukCertificate::Two { .. } => 2,
            BorsukCertificate::Three(_) => 3,
        }
    }

    pub fn chord(&self) -> Option<Chord> {
        match self {
            BorsukCertificate::Two { chord, .. } => Some(*chord),
            BorsukCertificate::Three(_) => None,
        }
    }

    pub fn to_json_value(&self) -> CertificateJson {
        match self {
            BorsukCertificate::Two { coloring, chord } => CertificateJson {
                alpha: 2,
                chord: Some(*chord),
                red: Some(coloring.red),
                blue: Some(coloring.blue),
                witness: None,
            },
            BorsukCertificate::Three(w) => {
                CertificateJson { alpha: 3, chord: None, red: None, blue: None, witness: Some(w.clone()) }
            }
        }
    }
}

/// Wire form of a certificate.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CertificateJson {
    pub alpha: u8,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub chord: Option<Chord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub red: Option<(f64, f64)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub blue: Option<(f64, f64)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Obstruction>,
}

/// Everything the decision looked at, for reports and figures.
#[derive(Clone, Debug)]
pub struct BorsukAnalysis {
    pub outline: Outline,
    pub pairs: DiameterPairs,
    pub graph: DiameterGraph,
    pub symmetry_center: Option<Point2>,
    pub certificate: BorsukCertificate,
    /// Set when a symmetric body fell back to an obstruction because its gaps were too small.
    pub warning: Option<String>,
}

pub fn borsuk_number(body: &ConvexBody, eps_rel: f64) -> Result<BorsukCertificate, DecisionError> {
    analyze(body, eps_rel).map(|a| a.certificate)
}

pub fn analyze(body: &ConvexBody, eps_rel: f64) -> Result<BorsukAnalysis, DecisionError> {
    decide(body, eps_rel, true)
}

/// Skips the symmetric shortcut; used to cross-check the two routes.
pub fn analyze_general(body: &ConvexBody, eps_rel: f64) -> Result<BorsukAnalysis, DecisionError> {
    decide(body, eps_rel, false)
}

fn decide(body: &ConvexBody, eps_rel: f64, use_symmetry: bool) -> Result<BorsukAnalysis, DecisionError> {
    if !(0.0..=1e-3).contains(&eps_rel) {
        return Err(DecisionError::InvalidTolerance(eps_rel));
    }
    let outline = body.outline();
    let pairs = diameter_pairs_of(&outline, eps_rel);
    let graph = graph_from_pairs(&pairs);
    let center = symmetry_center(body);
    let mut warning = None;

    let certificate = match center.filter(|_| use_symmetry) {
        Some(p) => {
            if graph.closures_cover_boundary() {
                BorsukCertificate::Three(Obstruction::EuclideanBall { center: p, radius: 0.5 * graph.diameter })
            } else if let Some(coloring) = graph.separated_coloring() {
                let chord = splitting_chord(&outline, &coloring);
                BorsukCertificate::Two { coloring, chord }
            } else {
                warning = Some(format!("symmetric body without a boundary gap wider than {MIN_GAP} of the perimeter"));
                BorsukCertificate::Three(contact(&graph))
            }
        }
        None => match graph.separated_coloring() {
            Some(coloring) => {
                let chord = splitting_chord(&outline, &coloring);
                BorsukCertificate::Two { coloring, chord }
            }
            None => BorsukCertificate::Three(obstruction(&graph)),
        },
    };
    Ok(BorsukAnalysis { outline, pairs, graph, symmetry_center: center, certificate, warning })
}

fn obstruction(graph: &DiameterGraph) -> Obstruction {
    if let Some(classes) = graph.odd_cycle() {
        return Obstruction::OddCycle { classes };
    }
    if graph.closures_cover_boundary() {
        return Obstruction::FullBoundaryVertexSet;
    }
    contact(graph)
}

fn contact(graph: &DiameterGraph) -> Obstruction {
    let k = graph.classes.len();
    let t = (0..k)
        .min_by(|&a, &b| graph.gap_after(a).total_cmp(&graph.gap_after(b)))
        .map(|i| graph.classes[i].closure().1.rem_euclid(1.0))
        .unwrap_or(0.0);
    Obstruction::ClosureContact { t }
}

/// Chord joining the parameter midpoints of the two gap arcs.
pub fn splitting_chord(outline: &Outline, coloring: &SeparatedColoring) -> Chord {
    let [m1, m2] = coloring.gap_midpoints();
    Chord::new(outline.point_at(m1), outline.point_at(m2)).expect("gap arcs are disjoint")
}
