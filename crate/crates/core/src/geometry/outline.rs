use std::f64::consts::TAU;

use super::{arc_sweep, ConvexBody, Element, GeometryError, Point2, EPS_ON};

/// A boundary piece with its geometry resolved (angles, lengths).
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Piece {
    Segment { a: Point2, b: Point2 },
    Arc { center: Point2, radius: f64, start_angle: f64, sweep: f64, a: Point2, b: Point2 },
}

impl Piece {
    pub fn arc(center: Point2, radius: f64, a: Point2, b: Point2, full_if_closed: bool) -> Piece {
        Piece::Arc {
            center,
            radius,
            start_angle: (a - center).angle(),
            sweep: arc_sweep(a, b, center, full_if_closed),
            a,
            b,
        }
    }

    pub fn start(&self) -> Point2 {
        match *self {
            Piece::Segment { a, .. } | Piece::Arc { a, .. } => a,
        }
    }

    pub fn end(&self) -> Point2 {
        match *self {
            Piece::Segment { b, .. } | Piece::Arc { b, .. } => b,
        }
    }

    pub fn length(&self) -> f64 {
        match *self {
            Piece::Segment { a, b } => a.dist(b),
            Piece::Arc { radius, sweep, .. } => radius * sweep,
        }
    }

    /// Point at arc length `s` from the piece start.
    pub fn point_at_len(&self, s: f64) -> Point2 {
        match *self {
            Piece::Segment { a, b } => {
                let len = a.dist(b);
                if len == 0.0 {
                    a
                } else {
                    a.lerp(b, (s / len).clamp(0.0, 1.0))
                }
            }
            Piece::Arc { center, radius, start_angle, sweep, a, b } => {
                let phi = (s / radius).clamp(0.0, sweep);
                if phi == 0.0 {
                    a
                } else if phi == sweep {
                    b
                } else {
                    center + Point2::polar(start_angle + phi) * radius
                }
            }
        }
    }

    /// Closest point on the piece to `p`: (arc length along the piece, distance).
    pub fn closest(&self, p: Point2) -> (f64, f64) {
        match *self {
            Piece::Segment { a, b } => {
                let d = b - a;
                let len_sq = d.norm_sq();
                let s = if len_sq == 0.0 { 0.0 } else { ((p - a).dot(d) / len_sq).clamp(0.0, 1.0) };
                (s * len_sq.sqrt(), p.dist(a + d * s))
            }
            Piece::Arc { center, radius, start_angle, sweep, a, b } => {
                let v = p - center;
                if v.norm() > 0.0 {
                    let delta = (v.angle() - start_angle).rem_euclid(TAU);
                    if delta <= sweep {
                        return (delta * radius, (v.norm() - radius).abs());
                    }
                }
                let (da, db) = (p.dist(a), p.dist(b));
                if da <= db {
                    (0.0, da)
                } else {
                    (radius * sweep, db)
                }
            }
        }
    }

    /// Offset of angle `phi` into the arc's sweep, if strictly inside it.
    pub fn arc_offset(&self, phi: f64, margin: f64) -> Option<f64> {
        match *self {
            Piece::Arc { start_angle, sweep, .. } => {
                let d = (phi - start_angle).rem_euclid(TAU);
                (d > margin && d < sweep - margin).then_some(d)
            }
            Piece::Segment { .. } => None,
        }
    }
}

/// Resolved boundary of a body: pieces, cumulative arc length and diameter.
#[derive(Clone, Debug)]
pub struct Outline {
    pieces: Vec<Piece>,
    cum: Vec<f64>,
    perimeter: f64,
    diameter: f64,
    witness: (Point2, Point2),
    full_circle: bool,
    polygon: bool,
}

impl ConvexBody {
    pub fn outline(&self) -> Outline {
        let (pieces, full_circle, polygon) = match self {
            ConvexBody::Polygon(p) => {
                let v = p.vertices();
                let n = v.len();
                ((0..n).map(|i| Piece::Segment { a: v[i], b: v[(i + 1) % n] }).collect(), false, true)
            }
            ConvexBody::Disc(d) => {
                let a = d.center + Point2::new(d.radius, 0.0);
                (
                    vec![Piece::Arc { center: d.center, radius: d.radius, start_angle: 0.0, sweep: TAU, a, b: a }],
                    true,
                    false,
                )
            }
            ConvexBody::ArcGon(g) => {
                let single = g.elements().len() == 1;
                let mut prev = g.start();
                let pieces = g
                    .elements()
                    .iter()
                    .map(|e| {
                        let piece = match *e {
                            Element::Segment { to } => Piece::Segment { a: prev, b: to },
                            Element::Arc { center, radius, to } => Piece::arc(center, radius, prev, to, single),
                        };
                        prev = e.to();
                        piece
                    })
                    .collect::<Vec<_>>();
                let full = single && matches!(pieces[0], Piece::Arc { sweep, .. } if sweep >= TAU);
                let polygon = pieces.iter().all(|p| matches!(p, Piece::Segment { .. }));
                (pieces, full, polygon)
            }
        };
        Outline::from_pieces(pieces, full_circle, polygon)
    }
}

impl Outline {
    pub(crate) fn from_pieces(pieces: Vec<Piece>, full_circle: bool, polygon: bool) -> Outline {
        let mut cum = Vec::with_capacity(pieces.len() + 1);
        let mut acc = 0.0;
        cum.push(0.0);
        for p in &pieces {
            acc += p.length();
            cum.push(acc);
        }
        let mut out = Outline {
            pieces,
            cum,
            perimeter: acc,
            diameter: f64::NAN,
            witness: (Point2::ORIGIN, Point2::ORIGIN),
            full_circle,
            polygon,
        };
        let (d, a, b) = crate::diameter::farthest_pair(&out);
        out.diameter = d;
        out.witness = (a, b);
        out
    }

    pub fn pieces(&self) -> &[Piece] {
        &self.pieces
    }

    pub fn perimeter(&self) -> f64 {
        self.perimeter
    }

    pub fn diameter(&self) -> f64 {
        self.diameter
    }

    pub fn diameter_witness(&self) -> (Point2, Point2) {
        self.witness
    }

    /// True for a disc (a single closed arc).
    pub fn is_full_circle(&self) -> bool {
        self.full_circle
    }

    pub fn is_polygon(&self) -> bool {
        self.polygon
    }

    /// Start points of the pieces (polygon vertices / arc-gon joints) with their parameters.
    /// A disc has no joints.
    pub fn joints(&self) -> impl Iterator<Item = (Point2, f64)> + '_ {
        let skip = self.full_circle;
        self.pieces
            .iter()
            .enumerate()
            .filter(move |_| !skip)
            .map(move |(i, p)| (p.start(), self.cum[i] / self.perimeter))
    }

    /// Parameter of the start of piece `i`.
    pub fn piece_start_param(&self, i: usize) -> f64 {
        self.cum[i] / self.perimeter
    }

    /// Parameter of the end of piece `i` (1.0 for the last piece).
    pub fn piece_end_param(&self, i: usize) -> f64 {
        self.cum[i + 1] / self.perimeter
    }

    /// Parameter of the point `offset` (arc length) into piece `i`.
    pub fn param_in_piece(&self, i: usize, offset: f64) -> f64 {
        ((self.cum[i] + offset) / self.perimeter).rem_euclid(1.0)
    }

    pub fn point_at(&self, t: f64) -> Point2 {
        let s = t.rem_euclid(1.0) * self.perimeter;
        let i = self.cum[1..].partition_point(|&c| c <= s).min(self.pieces.len() - 1);
        self.pieces[i].point_at_len(s - self.cum[i])
    }

    pub fn param_of(&self, p: Point2) -> Result<f64, GeometryError> {
        let (i, along, dist) = self
            .pieces
            .iter()
            .enumerate()
            .map(|(i, piece)| {
                let (s, d) = piece.closest(p);
                (i, s, d)
            })
            .min_by(|a, b| a.2.total_cmp(&b.2))
            .expect("outline has pieces");
        if dist > EPS_ON * self.diameter {
            return Err(GeometryError::NotOnBoundary { distance: dist });
        }
        let t = ((self.cum[i] + along) / self.perimeter).rem_euclid(1.0);
        Ok(if t >= 1.0 { 0.0 } else { t })
    }

    /// Maximum of `⟨x, u⟩` over the body and the support point, faces resolving to their midpoint.
    pub fn support(&self, direction: Point2) -> (f64, Point2) {
        let u = direction.normalized().unwrap_or(Point2::new(1.0, 0.0));
        let mut cands: Vec<Point2> = Vec::with_capacity(4);
        let mut best = f64::NEG_INFINITY;
        let tol = 1e-12 * self.diameter;
        let mut consider = |q: Point2| {
            let h = q.dot(u);
            if h > best + tol {
                best = h;
                cands.retain(|c| c.dot(u) >= h - tol);
                cands.push(q);
            } else if h >= best - tol {
                best = best.max(h);
                cands.push(q);
            }
        };
        for piece in &self.pieces {
            if !self.full_circle {
                consider(piece.start());
            }
            if let Piece::Arc { center, radius, .. } = *piece {
                if self.full_circle || piece.arc_offset(u.angle(), 0.0).is_some() {
                    consider(center + u * radius);
                }
            }
        }
        let side = u.perp();
        let lo = cands.iter().copied().min_by(|a, b| a.dot(side).total_cmp(&b.dot(side))).unwrap();
        let hi = cands.iter().copied().max_by(|a, b| a.dot(side).total_cmp(&b.dot(side))).unwrap();
        let point = if lo.dist(hi) <= tol { lo } else { lo.midpoint(hi) };
        (best, point)
    }

    /// Width of the narrowest strip orthogonal to `direction` containing the body.
    pub fn width(&self, direction: Point2) -> f64 {
        self.support(direction).0 + self.support(-direction).0
    }

    pub fn area(&self) -> f64 {
        Outline::pieces_area(&self.pieces)
    }

    /// Closed containment test with absolute tolerance `tol`.
    pub fn contains(&self, q: Point2, tol: f64) -> bool {
        if self.full_circle {
            if let Piece::Arc { center, radius, .. } = self.pieces[0] {
                return q.dist(center) <= radius + tol;
            }
        }
        // body = (convex hull of joints) ∪ (circular segments cut off by each arc's chord)
        let chord_side = |a: Point2, b: Point2| {
            let d = b - a;
            let len = d.norm();
            if len == 0.0 {
                0.0
            } else {
                d.cross(q - a) / len
            }
        };
        let in_core = self.pieces.iter().all(|p| chord_side(p.start(), p.end()) >= -tol);
        if in_core {
            return true;
        }
        self.pieces.iter().any(|p| match *p {
            Piece::Arc { center, radius, a, b, .. } => chord_side(a, b) <= tol && q.dist(center) <= radius + tol,
            Piece::Segment { .. } => false,
        })
    }

    /// Inscribed polygon: joints plus arc points at most `max_angle` apart.
    pub fn polygonize(&self, max_angle: f64) -> Vec<Point2> {
        let mut out = Vec::new();
        for p in &self.pieces {
            match *p {
                Piece::Segment { a, .. } => out.push(a),
                Piece::Arc { center, radius, start_angle, sweep, a, .. } => {
                    let k = ((sweep / max_angle).ceil() as usize).max(1);
                    out.push(a);
                    for j in 1..k {
                        out.push(center + Point2::polar(start_angle + sweep * j as f64 / k as f64) * radius);
                    }
                }
            }
        }
        out
    }

    /// Points at `n` equally spaced parameters starting at `offset / n`.
    pub fn uniform_points(&self, n: usize, offset: f64) -> Vec<Point2> {
        (0..n).map(|k| self.point_at((k as f64 + offset) / n as f64)).collect()
    }

    pub fn has_arcs(&self) -> bool {
        !self.polygon
    }
}
