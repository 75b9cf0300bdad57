//! Brute-force oracles that share no logic with the decision procedure:
//! sampled diameters and a direct search over grid chords for a two-piece
//! division.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::decision::{borsuk_number, DecisionError};
use crate::geometry::{Chord, ConvexBody, Outline, Point2};

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct OracleConfig {
    pub boundary_samples: usize,
    pub chord_grid: usize,
    pub seed: u64,
    pub eps_rel: f64,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig { boundary_samples: 2048, chord_grid: 256, seed: 42, eps_rel: 1e-9 }
    }
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum OracleError {
    #[error("boundary_samples must be at least 16, got {0}")]
    TooFewSamples(usize),
    #[error("chord_grid must be at least 8, got {0}")]
    GridTooSmall(usize),
    #[error(transparent)]
    Decision(#[from] DecisionError),
}

impl OracleConfig {
    pub fn validate(&self) -> Result<(), OracleError> {
        if self.boundary_samples < 16 {
            return Err(OracleError::TooFewSamples(self.boundary_samples));
        }
        if self.chord_grid < 8 {
            return Err(OracleError::GridTooSmall(self.chord_grid));
        }
        if !(0.0..=1e-3).contains(&self.eps_rel) {
            return Err(DecisionError::InvalidTolerance(self.eps_rel).into());
        }
        Ok(())
    }

    fn rng(&self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed)
    }
}

/// Boundary samples sorted by parameter: one per stratum `[k/n, (k+1)/n)`
/// (at its middle, or jittered when `rng` is given) plus every joint.
pub fn sample_boundary(outline: &Outline, n: usize, rng: Option<&mut ChaCha8Rng>) -> Vec<(f64, Point2)> {
    let mut out: Vec<(f64, Point2)> = Vec::with_capacity(n + outline.pieces().len());
    match rng {
        Some(rng) => {
            for k in 0..n {
                let t = (k as f64 + rng.gen::<f64>()) / n as f64;
                out.push((t, outline.point_at(t)));
            }
        }
        None => {
            for k in 0..n {
                let t = (k as f64 + 0.5) / n as f64;
                out.push((t, outline.point_at(t)));
            }
        }
    }
    out.extend(outline.joints().map(|(p, t)| (t, p)));
    out.sort_by(|a, b| a.0.total_cmp(&b.0));
    out
}

/// Largest distance between consecutive samples, cyclically.
pub fn max_gap(samples: &[(f64, Point2)]) -> f64 {
    let n = samples.len();
    (0..n).map(|i| samples[i].1.dist(samples[(i + 1) % n].1)).fold(0.0, f64::max)
}

/// Farthest pair by exhaustive comparison.
pub fn max_pair_distance(points: &[Point2]) -> (f64, usize, usize) {
    let mut best = (0.0, 0, 0);
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            let d = points[i].dist(points[j]);
            if d > best.0 {
                best = (d, i, j);
            }
        }
    }
    best
}

/// Sampled lower bound on the diameter with its realizing pair.
pub fn brute_diameter(body: &ConvexBody, config: &OracleConfig) -> (f64, Chord) {
    let outline = body.outline();
    let mut rng = config.rng();
    let pts: Vec<Point2> =
        sample_boundary(&outline, config.boundary_samples, Some(&mut rng)).into_iter().map(|s| s.1).collect();
    let (d, i, j) = max_pair_distance(&pts);
    (d, Chord::new(pts[i], pts[j]).expect("samples of a body with interior are not all equal"))
}

/// Search the chords between `chord_grid` equally spaced boundary points for
/// one whose two pieces both have diameter below `D·(1 − eps_rel)`.
///
/// A piece bounded by a boundary arc and a chord has its diameter attained on
/// the arc, so each piece is judged by the samples on its arc. Pairs are
/// counted as too long when they come within the sample spacing of the
/// sampled diameter, which makes every returned chord a genuine division.
pub fn brute_alpha2(body: &ConvexBody, config: &OracleConfig) -> Option<Chord> {
    let outline = body.outline();
    let mut rng = config.rng();
    let mut pts = sample_boundary(&outline, config.boundary_samples, Some(&mut rng));
    let g = config.chord_grid;
    let grid_t: Vec<f64> = (0..g).map(|k| k as f64 / g as f64).collect();
    pts.extend(grid_t.iter().map(|&t| (t, outline.point_at(t))));
    pts.sort_by(|a, b| a.0.total_cmp(&b.0));
    let n = pts.len();

    let d_est = max_pair_distance(&pts.iter().map(|s| s.1).collect::<Vec<_>>()).0;
    let tau = max_gap(&pts);
    let threshold = d_est * (1.0 - config.eps_rel) - tau;

    // partners j > i at or beyond the threshold
    let mut j_min = vec![usize::MAX; n];
    let mut j_max = vec![0usize; n];
    let mut max_i = None;
    let mut global_min_j = usize::MAX;
    for i in 0..n {
        for j in i + 1..n {
            if pts[i].1.dist(pts[j].1) >= threshold {
                j_min[i] = j_min[i].min(j);
                j_max[i] = j;
                max_i = Some(i);
                global_min_j = global_min_j.min(j);
            }
        }
    }
    let mut suffix_min = vec![usize::MAX; n + 1];
    for i in (0..n).rev() {
        suffix_min[i] = suffix_min[i + 1].min(j_min[i]);
    }
    let mut prefix_max = vec![0usize; n];
    let mut run = 0;
    for i in 0..n {
        run = run.max(j_max[i]);
        prefix_max[i] = run;
    }

    // sample index of every grid point
    let grid_idx: Vec<usize> =
        grid_t.iter().map(|&t| pts.iter().position(|s| s.0 == t).expect("grid points were inserted")).collect();

    for (ka, &a) in grid_idx.iter().enumerate() {
        for &b in &grid_idx[ka + 1..] {
            // both ends of the chord belong to both pieces
            let inside = suffix_min[a] <= b;
            let after = max_i.is_some_and(|m| m >= b);
            let before = global_min_j <= a;
            let straddle = prefix_max[a] >= b;
            if !(inside || after || before || straddle) {
                if let Ok(c) = Chord::new(pts[a].1, pts[b].1) {
                    return Some(c);
                }
            }
        }
    }
    None
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Consistency {
    Consistent,
    /// Decision found a division the grid could not reproduce.
    GridTooCoarse,
    /// The grid found a division the decision ruled out.
    HardFailure,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConsistencyReport {
    pub alpha: u8,
    pub oracle_chord: Option<Chord>,
    pub status: Consistency,
    pub diameter: f64,
    pub brute_diameter: f64,
    pub config: OracleConfig,
}

impl ConsistencyReport {
    pub fn is_hard_failure(&self) -> bool {
        self.status == Consistency::HardFailure
    }
}

pub fn cross_check(body: &ConvexBody, config: &OracleConfig) -> Result<ConsistencyReport, OracleError> {
    config.validate()?;
    let cert = borsuk_number(body, config.eps_rel)?;
    let chord = brute_alpha2(body, config);
    let status = match (cert.alpha(), chord.is_some()) {
        (2, true) | (3, false) => Consistency::Consistent,
        (2, false) => Consistency::GridTooCoarse,
        _ => Consistency::HardFailure,
    };
    Ok(ConsistencyReport {
        alpha: cert.alpha(),
        oracle_chord: chord,
        status,
        diameter: body.outline().diameter(),
        brute_diameter: brute_diameter(body, config).0,
        config: *config,
    })
}
