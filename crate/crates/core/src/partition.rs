//! Explicit divisions into pieces of smaller diameter: a chord cut for
//! Borsuk number 2, and three pieces induced by a covering regular hexagon
//! of width `D` for Borsuk number 3.

use std::f64::consts::{FRAC_PI_3, FRAC_PI_6};

use serde::{Deserialize, Serialize, Serializer};

use crate::decision::BorsukCertificate;
use crate::diameter::EPS_DIAM;
use crate::geometry::{
    clip_halfplane, Chord, ConvexBody, ConvexPolygon, GeometryError, HalfPlane, Outline, Point2, EPS_ON,
};
use crate::oracle::{max_gap, max_pair_distance, sample_boundary};

/// Relative area tolerance for tiling checks.
pub const EPS_AREA: f64 = 1e-6;
/// Relative bound on pairwise overlap of pieces.
pub const EPS_OVERLAP: f64 = 1e-9;

const PAL_GRID: usize = 720;
const PAL_SAMPLES: usize = 4096;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum PartitionError {
    #[error("invalid cut: {0}")]
    InvalidCut(String),
    #[error("hexagon construction failed: {0}")]
    ConstructionFailed(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct RegularHexagon {
    pub center: Point2,
    /// Distance between opposite sides.
    pub width: f64,
    /// Angle of the first outward side normal, in `[0, π/3)`.
    pub orientation: f64,
}

impl RegularHexagon {
    fn normal(&self, k: usize) -> Point2 {
        Point2::polar(self.orientation + k as f64 * FRAC_PI_3)
    }

    /// Midpoint of side `k`, the side with outward normal at `orientation + kπ/3`.
    pub fn side_midpoints(&self) -> [Point2; 6] {
        std::array::from_fn(|k| self.center + self.normal(k) * (0.5 * self.width))
    }

    /// Vertex `k` joins side `k` to side `k + 1`.
    pub fn vertices(&self) -> [Point2; 6] {
        let r = self.width / 3f64.sqrt();
        std::array::from_fn(|k| self.center + Point2::polar(self.orientation + k as f64 * FRAC_PI_3 + FRAC_PI_6) * r)
    }

    pub fn side_length(&self) -> f64 {
        self.width / 3f64.sqrt()
    }

    pub fn contains(&self, q: Point2, tol: f64) -> bool {
        (0..6).all(|k| self.normal(k).dot(q - self.center) <= 0.5 * self.width + tol)
    }

    pub fn to_polygon(&self) -> ConvexPolygon {
        ConvexPolygon::new(self.vertices().to_vec()).expect("a regular hexagon is strictly convex")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Construction {
    ChordCut,
    PalHexagon,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Partition {
    pub construction: Construction,
    pub parent_diameter: f64,
    #[serde(serialize_with = "pieces_as_arcgons")]
    pub pieces: Vec<ConvexBody>,
    pub piece_diameters: Vec<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub chord: Option<Chord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hexagon: Option<RegularHexagon>,
}

fn pieces_as_arcgons<S: Serializer>(pieces: &[ConvexBody], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(pieces.iter().map(ConvexBody::to_arcgon_spec))
}

impl Partition {
    pub fn max_piece_diameter(&self) -> f64 {
        self.piece_diameters.iter().copied().fold(0.0, f64::max)
    }
}

/// Cut along the line through `chord`.
pub fn two_partition(body: &ConvexBody, chord: Chord) -> Result<Partition, PartitionError> {
    let outline = body.outline();
    for end in [chord.a, chord.b] {
        outline
            .param_of(end)
            .map_err(|e| PartitionError::InvalidCut(format!("chord endpoint {end:?} off the boundary: {e}")))?;
    }
    let d = outline.diameter();
    let mut pieces = Vec::with_capacity(2);
    for hp in [HalfPlane::left_of(chord.a, chord.b), HalfPlane::left_of(chord.b, chord.a)] {
        let hp = hp.map_err(|e| PartitionError::InvalidCut(e.to_string()))?;
        let piece = clip_halfplane(body, &hp).map_err(|e| PartitionError::InvalidCut(e.to_string()))?;
        pieces.push(piece);
    }
    let piece_diameters: Vec<f64> = pieces.iter().map(|p| p.outline().diameter()).collect();
    if let Some(&worst) = piece_diameters.iter().find(|&&pd| pd >= d * (1.0 - EPS_DIAM)) {
        return Err(PartitionError::InvalidCut(format!("a piece has diameter {worst} against {d}")));
    }
    Ok(Partition {
        construction: Construction::ChordCut,
        parent_diameter: d,
        pieces,
        piece_diameters,
        chord: Some(chord),
        hexagon: None,
    })
}

/// Equiangular hexagon cut out by the three width-`d` strips centred on the
/// supporting strips of `outline` in directions `θ, θ + π/3, θ + 2π/3`.
/// Returns its vertices (vertex `k` joins sides `k` and `k + 1`).
fn strip_hexagon(outline: &Outline, d: f64, theta: f64) -> [Point2; 6] {
    let mut offsets = [0.0; 6];
    for j in 0..3 {
        let u = Point2::polar(theta + j as f64 * FRAC_PI_3);
        let hi = outline.support(u).0;
        let lo = -outline.support(-u).0;
        let mid = 0.5 * (hi + lo);
        offsets[j] = mid + 0.5 * d;
        offsets[j + 3] = -mid + 0.5 * d;
    }
    std::array::from_fn(|k| {
        let (n1, n2) = (Point2::polar(theta + k as f64 * FRAC_PI_3), Point2::polar(theta + (k + 1) as f64 * FRAC_PI_3));
        let (o1, o2) = (offsets[k], offsets[(k + 1) % 6]);
        let det = n1.cross(n2);
        Point2::new((o1 * n2.y - o2 * n1.y) / det, (n1.x * o2 - n2.x * o1) / det)
    })
}

fn side_lengths(v: &[Point2; 6]) -> [f64; 6] {
    // side k runs from vertex k − 1 to vertex k
    std::array::from_fn(|k| v[(k + 5) % 6].dist(v[k]))
}

/// Side lengths of the equiangular hexagon built from width-`D` strips at `theta`.
pub fn strip_hexagon_sides(outline: &Outline, theta: f64) -> [f64; 6] {
    side_lengths(&strip_hexagon(outline, outline.diameter(), theta))
}

/// Difference of two adjacent sides of the strip hexagon at `theta`.
pub fn pal_gap(outline: &Outline, theta: f64) -> f64 {
    let s = strip_hexagon_sides(outline, theta);
    s[0] - s[1]
}

/// Regular hexagon of width `D` containing the body.
pub fn pal_hexagon(body: &ConvexBody) -> Result<RegularHexagon, PartitionError> {
    let outline = body.outline();
    pal_hexagon_of(&outline)
}

fn pal_hexagon_of(outline: &Outline) -> Result<RegularHexagon, PartitionError> {
    let d = outline.diameter();
    let g = |theta: f64| pal_gap(outline, theta);
    let step = FRAC_PI_3 / PAL_GRID as f64;
    let grid: Vec<(f64, f64)> = (0..=PAL_GRID).map(|i| (i as f64 * step, g(i as f64 * step))).collect();

    let theta = match grid.windows(2).find(|w| w[0].1 == 0.0 || w[0].1.signum() != w[1].1.signum()) {
        Some(w) if w[0].1 == 0.0 => w[0].0,
        Some(w) => {
            let (mut lo, mut hi) = (w[0].0, w[1].0);
            let g_lo = w[0].1;
            while hi - lo > 1e-12 {
                let mid = 0.5 * (lo + hi);
                let gm = g(mid);
                if gm == 0.0 {
                    lo = mid;
                    hi = mid;
                } else if gm.signum() == g_lo.signum() {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            0.5 * (lo + hi)
        }
        None => grid.iter().min_by(|a, b| a.1.abs().total_cmp(&b.1.abs())).expect("grid is nonempty").0,
    };

    let verts = strip_hexagon(outline, d, theta);
    let sides = side_lengths(&verts);
    let spread =
        sides.iter().copied().fold(f64::NEG_INFINITY, f64::max) - sides.iter().copied().fold(f64::INFINITY, f64::min);
    if spread > 1e-6 * d {
        return Err(PartitionError::ConstructionFailed(format!("side lengths spread {spread:.3e} at θ = {theta}")));
    }
    let center = verts.iter().fold(Point2::ORIGIN, |acc, &v| acc + v) / 6.0;
    let hex = RegularHexagon { center, width: d, orientation: theta.rem_euclid(FRAC_PI_3) };
    let tol = EPS_ON * d;
    if let Some(q) = outline
        .uniform_points(PAL_SAMPLES, 0.5)
        .into_iter()
        .chain(outline.joints().map(|j| j.0))
        .find(|&q| !hex.contains(q, tol))
    {
        return Err(PartitionError::ConstructionFailed(format!("boundary point {q:?} outside the hexagon")));
    }
    Ok(hex)
}

/// The three pentagons cut from `hex` by the segments from its center to the
/// midpoints of sides 0, 2 and 4. Piece `k` is bounded by the segments to the
/// midpoints of sides `2k` and `2k + 2`.
pub fn hexagon_three_pieces(hex: &RegularHexagon) -> [ConvexPolygon; 3] {
    let m = hex.side_midpoints();
    let v = hex.vertices();
    std::array::from_fn(|k| {
        let (a, b) = (2 * k, (2 * k + 2) % 6);
        ConvexPolygon::new(vec![hex.center, m[a], v[a], v[a + 1], m[b]]).expect("hexagon pieces are strictly convex")
    })
}

/// Body intersected with each hexagon piece, as the wedge between two center rays.
pub fn three_partition(body: &ConvexBody) -> Result<Partition, PartitionError> {
    let outline = body.outline();
    let hex = pal_hexagon_of(&outline)?;
    let m = hex.side_midpoints();
    let mut pieces = Vec::with_capacity(3);
    for k in 0..3 {
        let (a, b) = (m[2 * k], m[(2 * k + 2) % 6]);
        let wedge = [HalfPlane::left_of(hex.center, a), HalfPlane::left_of(b, hex.center)];
        let mut piece = Some(body.clone());
        for hp in wedge {
            let hp = hp.map_err(|e| PartitionError::ConstructionFailed(e.to_string()))?;
            piece = match piece.map(|p| clip_halfplane(&p, &hp)) {
                Some(Ok(p)) => Some(p),
                Some(Err(GeometryError::EmptyResult)) | None => None,
                Some(Err(e)) => return Err(PartitionError::ConstructionFailed(e.to_string())),
            };
        }
        pieces.extend(piece);
    }
    let piece_diameters = pieces.iter().map(|p| p.outline().diameter()).collect();
    Ok(Partition {
        construction: Construction::PalHexagon,
        parent_diameter: outline.diameter(),
        pieces,
        piece_diameters,
        chord: None,
        hexagon: Some(hex),
    })
}

/// Partition matching a certificate: the certified chord for 2, the hexagon split for 3.
pub fn partition_for(body: &ConvexBody, certificate: &BorsukCertificate) -> Result<Partition, PartitionError> {
    match certificate.chord() {
        Some(chord) => two_partition(body, chord),
        None => three_partition(body),
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub diameter: f64,
    pub samples: usize,
    /// Sampled piece diameters (boundary samples plus every joint).
    pub piece_diameters: Vec<f64>,
    /// Sampled diameter plus the sample spacing for pieces with arcs; exact for polygons.
    pub piece_upper_bounds: Vec<f64>,
    pub max_piece_diameter: f64,
    /// `D` minus the largest upper bound.
    pub margin: f64,
    pub convex: Vec<bool>,
    /// `|Σ area(piece) − area(C)| / area(C)`.
    pub area_deficit: f64,
    /// Largest pairwise overlap area relative to `area(C)`.
    pub max_overlap: f64,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
#[error("at least 100 samples are needed, got {0}")]
pub struct TooFewSamples(pub usize);

pub fn verify_partition(
    body: &ConvexBody,
    partition: &Partition,
    samples: usize,
) -> Result<VerificationReport, TooFewSamples> {
    verify_pieces(body, &partition.pieces, samples)
}

/// Same checks as [`verify_partition`] for a bare list of pieces.
pub fn verify_pieces(
    body: &ConvexBody,
    pieces: &[ConvexBody],
    samples: usize,
) -> Result<VerificationReport, TooFewSamples> {
    if samples < 100 {
        return Err(TooFewSamples(samples));
    }
    let outline = body.outline();
    let d = outline.diameter();
    let area = outline.area();

    let mut piece_diameters = Vec::new();
    let mut piece_upper_bounds = Vec::new();
    let mut convex = Vec::new();
    let mut polys: Vec<Vec<Point2>> = Vec::new();
    for piece in pieces {
        let po = piece.outline();
        let s = sample_boundary(&po, samples, None);
        let pts: Vec<Point2> = s.iter().map(|x| x.1).collect();
        let sampled = max_pair_distance(&pts).0;
        piece_diameters.push(sampled);
        piece_upper_bounds.push(if po.has_arcs() { sampled + max_gap(&s) } else { sampled });
        let poly = po.polygonize(0.01);
        convex.push(is_convex_ring(&poly, 1e-12 * d * d));
        polys.push(poly);
    }
    let total: f64 = pieces.iter().map(ConvexBody::area).sum();
    let area_deficit = (total - area).abs() / area;
    let mut max_overlap: f64 = 0.0;
    for i in 0..polys.len() {
        for j in i + 1..polys.len() {
            max_overlap = max_overlap.max(convex_overlap_area(&polys[i], &polys[j]) / area);
        }
    }
    let max_piece_diameter = piece_diameters.iter().copied().fold(0.0, f64::max);
    let margin = d - piece_upper_bounds.iter().copied().fold(0.0, f64::max);
    let pass = !pieces.is_empty()
        && margin > 0.0
        && area_deficit <= EPS_AREA
        && max_overlap <= EPS_OVERLAP
        && convex.iter().all(|&c| c);
    Ok(VerificationReport {
        diameter: d,
        samples,
        piece_diameters,
        piece_upper_bounds,
        max_piece_diameter,
        margin,
        convex,
        area_deficit,
        max_overlap,
        pass,
    })
}

fn is_convex_ring(v: &[Point2], tol: f64) -> bool {
    let n = v.len();
    n >= 3
        && (0..n).all(|i| {
            let (a, b, c) = (v[i], v[(i + 1) % n], v[(i + 2) % n]);
            (b - a).cross(c - b) >= -tol
        })
}

fn ring_area(v: &[Point2]) -> f64 {
    let n = v.len();
    0.5 * (0..n).map(|i| v[i].cross(v[(i + 1) % n])).sum::<f64>()
}

/// Area of the intersection of two counterclockwise convex rings.
fn convex_overlap_area(p: &[Point2], q: &[Point2]) -> f64 {
    let mut out = p.to_vec();
    let m = q.len();
    for i in 0..m {
        if out.is_empty() {
            return 0.0;
        }
        let (a, b) = (q[i], q[(i + 1) % m]);
        let side = |x: Point2| (b - a).cross(x - a);
        let input = std::mem::take(&mut out);
        let k = input.len();
        for j in 0..k {
            let (c, e) = (input[j], input[(j + 1) % k]);
            let (sc, se) = (side(c), side(e));
            if sc >= 0.0 {
                out.push(c);
            }
            if (sc >= 0.0) != (se >= 0.0) {
                out.push(c.lerp(e, sc / (sc - se)));
            }
        }
    }
    if out.len() < 3 {
        0.0
    } else {
        ring_area(&out).max(0.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::Disc;

    fn p(x: f64, y: f64) -> Point2 {
        Point2::new(x, y)
    }

    fn square() -> ConvexBody {
        ConvexPolygon::new(vec![p(0.0, 0.0), p(1.0, 0.0), p(1.0, 1.0), p(0.0, 1.0)]).unwrap().into()
    }

    #[test]
    fn hexagon_geometry() {
        let hex = RegularHexagon { center: p(1.0, -2.0), width: 1.0, orientation: 0.3 };
        let v = hex.vertices();
        for k in 0..6 {
            assert!((v[k].dist(v[(k + 1) % 6]) - hex.side_length()).abs() < 1e-15);
        }
        let m = hex.side_midpoints();
        for k in 0..3 {
            assert!((m[k].dist(m[k + 3]) - 1.0).abs() < 1e-15);
        }
        // side k runs from vertex k − 1 to vertex k
        assert!(m[2].dist(v[1].midpoint(v[2])) < 1e-15);
    }

    #[test]
    fn hexagon_piece_diameter() {
        for width in [1.0, 2.0] {
            let hex = RegularHexagon { center: p(0.0, 0.0), width, orientation: 0.0 };
            for piece in hexagon_three_pieces(&hex) {
                let v = piece.vertices();
                let dmax =
                    (0..5).flat_map(|i| (0..5).map(move |j| (i, j))).map(|(i, j)| v[i].dist(v[j])).fold(0.0, f64::max);
                assert!((dmax - 3f64.sqrt() / 2.0 * width).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn square_midline_pieces() {
        let part = two_partition(&square(), Chord::new(p(0.0, 0.5), p(1.0, 0.5)).unwrap()).unwrap();
        assert_eq!(part.pieces.len(), 2);
        for pd in &part.piece_diameters {
            assert!((pd - 1.25f64.sqrt()).abs() < 1e-12);
        }
        let rep = verify_partition(&square(), &part, 2048).unwrap();
        assert!(rep.pass);
        assert!((rep.margin - (2f64.sqrt() - 1.25f64.sqrt())).abs() < 1e-12);
    }

    #[test]
    fn diagonal_cut_is_rejected() {
        let err = two_partition(&square(), Chord::new(p(0.0, 0.0), p(1.0, 1.0)).unwrap()).unwrap_err();
        assert!(matches!(err, PartitionError::InvalidCut(_)));
    }

    #[test]
    fn disc_hexagon_is_concentric() {
        let disc: ConvexBody = Disc::new(p(2.0, 3.0), 0.5).unwrap().into();
        let hex = pal_hexagon(&disc).unwrap();
        assert!(hex.center.dist(p(2.0, 3.0)) < 1e-9);
        assert!((hex.width - 1.0).abs() < 1e-15);
    }

    #[test]
    fn disc_three_pieces() {
        let disc: ConvexBody = Disc::new(p(0.0, 0.0), 0.5).unwrap().into();
        let part = three_partition(&disc).unwrap();
        assert_eq!(part.pieces.len(), 3);
        for pd in &part.piece_diameters {
            assert!((pd - 3f64.sqrt() / 2.0).abs() < 1e-9);
        }
        let rep = verify_partition(&disc, &part, 2048).unwrap();
        assert!(rep.pass, "{rep:?}");
        assert!((rep.margin - (1.0 - 3f64.sqrt() / 2.0)).abs() < 5e-3);
    }

    #[test]
    fn square_pal_hexagon() {
        let hex = pal_hexagon(&square()).unwrap();
        assert!((hex.width - 2f64.sqrt()).abs() < 1e-15);
        for q in [p(0.0, 0.0), p(1.0, 0.0), p(1.0, 1.0), p(0.0, 1.0)] {
            assert!(hex.contains(q, 1e-9));
        }
    }

    #[test]
    fn overlap_of_shifted_squares() {
        let a = vec![p(0.0, 0.0), p(1.0, 0.0), p(1.0, 1.0), p(0.0, 1.0)];
        let b = vec![p(0.5, 0.5), p(1.5, 0.5), p(1.5, 1.5), p(0.5, 1.5)];
        assert!((convex_overlap_area(&a, &b) - 0.25).abs() < 1e-15);
    }

    #[test]
    fn partition_json_uses_arcgon_pieces() {
        let part = two_partition(&square(), Chord::new(p(0.0, 0.5), p(1.0, 0.5)).unwrap()).unwrap();
        let v = serde_json::to_value(&part).unwrap();
        assert_eq!(v["construction"], "chord_cut");
        assert_eq!(v["pieces"][0]["type"], "arcgon");
        let back: Partition = serde_json::from_value(v).unwrap();
        assert_eq!(back.pieces.len(), 2);
        assert!((back.pieces[0].area() - 0.5).abs() < 1e-15);
    }
}
