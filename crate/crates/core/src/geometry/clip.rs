use std::f64::consts::TAU;

use serde::{Deserialize, Serialize};

use super::{ArcGon, ConvexBody, ConvexPolygon, Element, GeometryError, Outline, Piece, Point2};

/// Closed half-plane `{x : ⟨normal, x − point⟩ ≤ 0}`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct HalfPlane {
    pub point: Point2,
    pub normal: Point2,
}

impl HalfPlane {
    pub fn new(point: Point2, normal: Point2) -> Result<Self, GeometryError> {
        if !point.is_finite() || !normal.is_finite() {
            return Err(GeometryError::NonFinite);
        }
        let normal =
            normal.normalized().ok_or_else(|| GeometryError::DegenerateInput("half-plane normal is zero".into()))?;
        Ok(HalfPlane { point, normal })
    }

    /// Half-plane to the left of the directed line `a → b`.
    pub fn left_of(a: Point2, b: Point2) -> Result<Self, GeometryError> {
        HalfPlane::new(a, (b - a).perp() * -1.0)
    }

    pub fn offset(&self) -> f64 {
        self.normal.dot(self.point)
    }

    /// Signed distance; negative inside.
    #[inline]
    pub fn eval(&self, p: Point2) -> f64 {
        self.normal.dot(p - self.point)
    }

    pub fn flipped(&self) -> HalfPlane {
        HalfPlane { point: self.point, normal: -self.normal }
    }
}

/// Intersection of `body` with a closed half-plane.
///
/// Polygons stay polygons; discs and arc-gons come back as arc-gons. A
/// half-plane that contains the whole body returns it unchanged, and one that
/// meets the body in at most a point or segment yields `EmptyResult`.
pub fn clip_halfplane(body: &ConvexBody, hp: &HalfPlane) -> Result<ConvexBody, GeometryError> {
    let outline = body.outline();
    clip_with_outline(body, &outline, hp)
}

pub(crate) fn clip_with_outline(
    body: &ConvexBody,
    outline: &Outline,
    hp: &HalfPlane,
) -> Result<ConvexBody, GeometryError> {
    let tol = 1e-12 * outline.diameter();
    match body {
        ConvexBody::Polygon(poly) => clip_polygon(poly, hp, tol).map(ConvexBody::from),
        _ => clip_curved(body, outline, hp, tol),
    }
}

fn clip_polygon(poly: &ConvexPolygon, hp: &HalfPlane, tol: f64) -> Result<ConvexPolygon, GeometryError> {
    let v = poly.vertices();
    let s: Vec<f64> = v.iter().map(|&p| hp.eval(p)).collect();
    if s.iter().all(|&d| d <= tol) {
        return Ok(poly.clone());
    }
    let n = v.len();
    let mut out = Vec::with_capacity(n + 2);
    for i in 0..n {
        let j = (i + 1) % n;
        if s[i] <= tol {
            out.push(v[i]);
        }
        if (s[i] < -tol && s[j] > tol) || (s[i] > tol && s[j] < -tol) {
            let u = s[i] / (s[i] - s[j]);
            out.push(v[i].lerp(v[j], u));
        }
    }
    ConvexPolygon::new(out).map_err(|_| GeometryError::EmptyResult)
}

/// A sub-piece after splitting at the cut line.
struct Sub {
    piece: Piece,
    inside: bool,
}

fn clip_curved(body: &ConvexBody, outline: &Outline, hp: &HalfPlane, tol: f64) -> Result<ConvexBody, GeometryError> {
    let mut subs: Vec<Sub> = Vec::new();
    for piece in outline.pieces() {
        split_piece(piece, hp, tol, &mut subs);
    }
    if subs.iter().all(|s| s.inside) {
        return Ok(body.clone());
    }
    if !subs.iter().any(|s| s.inside) {
        return Err(GeometryError::EmptyResult);
    }

    // Rotate so the kept run starts right after a discarded stretch.
    let m = subs.len();
    let first = (0..m).find(|&k| subs[k].inside && !subs[(k + m - 1) % m].inside).expect("a kept run exists");
    let mut pieces: Vec<Piece> = Vec::new();
    let mut pending_gap_from: Option<Point2> = None;
    for k in 0..m {
        let sub = &subs[(first + k) % m];
        if sub.inside {
            if let Some(from) = pending_gap_from.take() {
                let to = sub.piece.start();
                if from != to {
                    pieces.push(Piece::Segment { a: from, b: to });
                }
            }
            pieces.push(sub.piece);
        } else if pending_gap_from.is_none() {
            pending_gap_from = Some(pieces.last().map(Piece::end).expect("kept run precedes gap"));
        }
    }
    if let Some(from) = pending_gap_from {
        let to = pieces[0].start();
        if from != to {
            pieces.push(Piece::Segment { a: from, b: to });
        }
    }

    let area: f64 = Outline::pieces_area(&pieces);
    let scale = outline.diameter();
    if area <= 1e-12 * scale * scale {
        return Err(GeometryError::EmptyResult);
    }

    let start = pieces[0].start();
    let elements = pieces
        .iter()
        .map(|p| match *p {
            Piece::Segment { b, .. } => Element::Segment { to: b },
            Piece::Arc { center, radius, b, .. } => Element::Arc { center, radius, to: b },
        })
        .collect();
    ArcGon::new(start, elements).map(ConvexBody::from)
}

fn split_piece(piece: &Piece, hp: &HalfPlane, tol: f64, out: &mut Vec<Sub>) {
    match *piece {
        Piece::Segment { a, b } => {
            let (sa, sb) = (hp.eval(a), hp.eval(b));
            if (sa < -tol && sb > tol) || (sa > tol && sb < -tol) {
                let x = a.lerp(b, sa / (sa - sb));
                out.push(Sub { piece: Piece::Segment { a, b: x }, inside: sa < 0.0 });
                out.push(Sub { piece: Piece::Segment { a: x, b }, inside: sb < 0.0 });
            } else {
                out.push(Sub { piece: *piece, inside: sa.max(sb) <= tol });
            }
        }
        Piece::Arc { center, radius, start_angle, sweep, a, b } => {
            // points c + r·u(φ) on the line satisfy cos(φ − φn) = k
            let k = -hp.eval(center) / radius;
            let mut cuts: Vec<f64> = Vec::new();
            if k.abs() < 1.0 {
                let phi_n = hp.normal.angle();
                let w = k.acos();
                for phi in [phi_n - w, phi_n + w] {
                    let d = (phi - start_angle).rem_euclid(TAU);
                    if d * radius > tol && (sweep - d) * radius > tol {
                        cuts.push(d);
                    }
                }
            }
            cuts.sort_by(f64::total_cmp);
            let mut bounds = vec![0.0];
            bounds.extend(cuts);
            bounds.push(sweep);
            let at = |d: f64| {
                if d == 0.0 {
                    a
                } else if d == sweep {
                    b
                } else {
                    center + Point2::polar(start_angle + d) * radius
                }
            };
            for w in bounds.windows(2) {
                let (d0, d1) = (w[0], w[1]);
                let mid = center + Point2::polar(start_angle + 0.5 * (d0 + d1)) * radius;
                out.push(Sub {
                    piece: Piece::Arc {
                        center,
                        radius,
                        start_angle: start_angle + d0,
                        sweep: d1 - d0,
                        a: at(d0),
                        b: at(d1),
                    },
                    inside: hp.eval(mid) <= tol,
                });
            }
        }
    }
}

impl Outline {
    pub(crate) fn pieces_area(pieces: &[Piece]) -> f64 {
        pieces
            .iter()
            .map(|p| match *p {
                Piece::Segment { a, b } => 0.5 * a.cross(b),
                Piece::Arc { center, radius, start_angle, sweep, .. } => {
                    let a0 = start_angle;
                    let a1 = start_angle + sweep;
                    0.5 * (radius * radius * sweep
                        + radius * (center.x * (a1.sin() - a0.sin()) - center.y * (a1.cos() - a0.cos())))
                }
            })
            .sum()
    }
}
