//! Diameter and diameter segments.
//!
//! Polygons use rotating calipers over antipodal vertex pairs. Curved bodies
//! enumerate joint/joint, joint/arc and arc/arc candidates analytically; when
//! a whole arc realizes the diameter the result is a symbolic family instead
//! of a chord list.

use std::collections::BTreeSet;
use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::geometry::{Chord, ConvexBody, Outline, Piece, Point2};

/// Default relative tolerance for "realizes the diameter".
pub const EPS_DIAM: f64 = 1e-9;

/// Centers closer than this (relative to D) count as coincident.
const SAME_CENTER_REL: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct BoundaryPoint {
    pub p: Point2,
    pub t: f64,
}

/// A continuum of diameter segments.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum DiameterFamily {
    /// `apex` is at distance D from every point of the arc `[t_start, t_end]`.
    Fan { apex: BoundaryPoint, t_start: f64, t_end: f64, center: Point2, radius: f64 },
    /// Concentric arcs paired through `center`: the point at angle φ on the
    /// first arc pairs with the point at φ + π on the second. Both ranges run
    /// counterclockwise, `second.0` partners `first.0`, and parameters may
    /// exceed 1 (read them modulo 1).
    Antipodal { center: Point2, first: (f64, f64), second: (f64, f64) },
}

/// Every diameter segment of a body, within a relative tolerance.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DiameterPairs {
    pub diameter: f64,
    pub eps_rel: f64,
    pub chords: Vec<(BoundaryPoint, BoundaryPoint)>,
    pub families: Vec<DiameterFamily>,
}

impl DiameterPairs {
    pub fn chords(&self) -> Vec<Chord> {
        self.chords.iter().filter_map(|(a, b)| Chord::new(a.p, b.p).ok()).collect()
    }

    /// Finite chords plus `per_family` representative chords from every family.
    pub fn representative_chords(&self, outline: &Outline, per_family: usize) -> Vec<Chord> {
        let mut out = self.chords();
        let n = per_family.max(1);
        for fam in &self.families {
            for k in 0..n {
                let s = (k as f64 + 0.5) / n as f64;
                let (a, b) = match *fam {
                    DiameterFamily::Fan { apex, t_start, t_end, .. } => {
                        (apex.p, outline.point_at(t_start + s * (t_end - t_start)))
                    }
                    DiameterFamily::Antipodal { first, second, .. } => (
                        outline.point_at(first.0 + s * (first.1 - first.0)),
                        outline.point_at(second.0 + s * (second.1 - second.0)),
                    ),
                };
                if let Ok(c) = Chord::new(a, b) {
                    out.push(c);
                }
            }
        }
        out
    }
}

/// Diameter with a realizing chord.
pub fn diameter(body: &ConvexBody) -> (f64, Chord) {
    let o = body.outline();
    let (a, b) = o.diameter_witness();
    (o.diameter(), Chord::new(a, b).expect("a body with nonempty interior has distinct diameter endpoints"))
}

/// Farthest pair of boundary points.
pub(crate) fn farthest_pair(o: &Outline) -> (f64, Point2, Point2) {
    let pieces = o.pieces();
    if o.is_full_circle() {
        if let Piece::Arc { center, radius, .. } = pieces[0] {
            let e = Point2::new(radius, 0.0);
            return (2.0 * radius, center + e, center - e);
        }
    }
    if o.is_polygon() {
        let v: Vec<Point2> = pieces.iter().map(Piece::start).collect();
        let (i, j) = antipodal_candidates(&v)
            .into_iter()
            .max_by(|&(a, b), &(c, d)| v[a].dist(v[b]).total_cmp(&v[c].dist(v[d])))
            .expect("polygon has antipodal pairs");
        return (v[i].dist(v[j]), v[i], v[j]);
    }
    let mut best = (f64::NEG_INFINITY, Point2::ORIGIN, Point2::ORIGIN);
    let mut consider = |a: Point2, b: Point2| {
        let d = a.dist(b);
        if d > best.0 {
            best = (d, a, b);
        }
    };
    let joints: Vec<Point2> = pieces.iter().map(Piece::start).collect();
    for (i, &a) in joints.iter().enumerate() {
        for &b in &joints[i + 1..] {
            consider(a, b);
        }
    }
    for (ia, pa) in pieces.iter().enumerate() {
        let Piece::Arc { center: ca, radius: ra, .. } = *pa else { continue };
        for &v in &joints {
            if let Some(f) = far_point_on_arc(pa, v) {
                consider(v, f);
            }
        }
        if let Some((x, y)) = self_antipodal(pa) {
            consider(x, y);
        }
        for pb in &pieces[ia + 1..] {
            let Piece::Arc { center: cb, radius: rb, .. } = *pb else { continue };
            if let Some(u) = (cb - ca).normalized() {
                let xa = ca - u * ra;
                let xb = cb + u * rb;
                if pa.arc_offset((-u).angle(), 0.0).is_some() && pb.arc_offset(u.angle(), 0.0).is_some() {
                    consider(xa, xb);
                }
            } else {
                // concentric: any common antipodal direction gives ra + rb
                if let Some((phi, _)) = antipodal_overlap(pa, pb).first().copied() {
                    consider(ca + Point2::polar(phi) * ra, cb - Point2::polar(phi) * rb);
                }
            }
        }
    }
    best
}

/// Point of arc `piece` farthest from `v`, if it is interior to the arc.
fn far_point_on_arc(piece: &Piece, v: Point2) -> Option<Point2> {
    let Piece::Arc { center, radius, .. } = *piece else { return None };
    let u = (center - v).normalized()?;
    piece.arc_offset(u.angle(), 0.0).map(|_| center + u * radius)
}

/// Antipodal pair inside a single arc sweeping more than a half turn.
fn self_antipodal(piece: &Piece) -> Option<(Point2, Point2)> {
    let Piece::Arc { center, radius, start_angle, sweep, .. } = *piece else { return None };
    (sweep > PI).then(|| {
        let phi = start_angle + 0.5 * (sweep - PI);
        (center + Point2::polar(phi) * radius, center + Point2::polar(phi + PI) * radius)
    })
}

/// Angle intervals (absolute start angle, length) where angle φ lies in arc `a`
/// and φ + π lies in arc `b` (both arcs about the same center).
fn antipodal_overlap(a: &Piece, b: &Piece) -> Vec<(f64, f64)> {
    let (Piece::Arc { start_angle: sa, sweep: wa, .. }, Piece::Arc { start_angle: sb, sweep: wb, .. }) = (*a, *b)
    else {
        return Vec::new();
    };
    // work relative to a's start: a = [0, wa], shifted b = [d, d + wb] modulo 2π
    let d = (sb - PI - sa).rem_euclid(2.0 * PI);
    let mut out = Vec::new();
    for shift in [d - 2.0 * PI, d, d + 2.0 * PI] {
        let lo = shift.max(0.0);
        let hi = (shift + wb).min(wa);
        if hi > lo {
            out.push((sa + lo, hi - lo));
        }
    }
    out
}

/// All antipodal vertex pairs of a strictly convex CCW polygon, plus their
/// immediate neighbours (guards against near-parallel edge ties).
pub(crate) fn antipodal_candidates(v: &[Point2]) -> Vec<(usize, usize)> {
    let n = v.len();
    let mut out = Vec::with_capacity(6 * n);
    if n <= 4 {
        for i in 0..n {
            for j in i + 1..n {
                out.push((i, j));
            }
        }
        return out;
    }
    let area = |i: usize, i1: usize, j: usize| (v[i1] - v[i]).cross(v[j] - v[i]);
    let mut j = 1;
    for i in 0..n {
        let i1 = (i + 1) % n;
        let mut guard = 0;
        while area(i, i1, (j + 1) % n) > area(i, i1, j) && guard < n {
            j = (j + 1) % n;
            guard += 1;
        }
        for dj in [n - 1, 0, 1] {
            let jj = (j + dj) % n;
            out.push((i, jj));
            out.push((i1, jj));
        }
    }
    out
}

/// Every diameter segment, as finite chords plus symbolic arc families.
pub fn diameter_pairs(body: &ConvexBody, eps_rel: f64) -> DiameterPairs {
    diameter_pairs_of(&body.outline(), eps_rel)
}

pub fn diameter_pairs_of(o: &Outline, eps_rel: f64) -> DiameterPairs {
    let d = o.diameter();
    let thr = d * (1.0 - eps_rel);
    let pieces = o.pieces();
    let mut chords: Vec<(BoundaryPoint, BoundaryPoint)> = Vec::new();
    let mut families = Vec::new();

    if o.is_full_circle() {
        families.push(DiameterFamily::Antipodal {
            center: match pieces[0] {
                Piece::Arc { center, .. } => center,
                Piece::Segment { .. } => unreachable!("a full circle is one arc"),
            },
            first: (0.0, 1.0),
            second: (0.5, 1.5),
        });
        return DiameterPairs { diameter: d, eps_rel, chords, families };
    }

    let joints: Vec<BoundaryPoint> = o.joints().map(|(p, t)| BoundaryPoint { p, t }).collect();

    if o.is_polygon() {
        let v: Vec<Point2> = joints.iter().map(|b| b.p).collect();
        let mut seen = BTreeSet::new();
        for (i, j) in antipodal_candidates(&v) {
            let key = (i.min(j), i.max(j));
            if i != j && v[i].dist(v[j]) >= thr && seen.insert(key) {
                chords.push((joints[key.0], joints[key.1]));
            }
        }
        chords.sort_by(|a, b| a.0.t.total_cmp(&b.0.t).then(a.1.t.total_cmp(&b.1.t)));
        return DiameterPairs { diameter: d, eps_rel, chords, families };
    }

    let same_center = SAME_CENTER_REL * d;
    for (i, a) in joints.iter().enumerate() {
        for b in &joints[i + 1..] {
            if a.p.dist(b.p) >= thr {
                chords.push((*a, *b));
            }
        }
    }
    for (ia, pa) in pieces.iter().enumerate() {
        let Piece::Arc { center: ca, radius: ra, start_angle, .. } = *pa else { continue };
        for v in &joints {
            if v.p.dist(ca) <= same_center {
                if ra >= thr {
                    families.push(DiameterFamily::Fan {
                        apex: *v,
                        t_start: o.piece_start_param(ia),
                        t_end: o.piece_end_param(ia),
                        center: ca,
                        radius: ra,
                    });
                }
            } else if let Some(f) = far_point_on_arc(pa, v.p) {
                if v.p.dist(f) >= thr {
                    let off = ((f - ca).angle() - start_angle).rem_euclid(2.0 * PI) * ra;
                    chords.push((*v, BoundaryPoint { p: f, t: o.param_in_piece(ia, off) }));
                }
            }
        }
        for (ib, pb) in pieces.iter().enumerate().skip(ia) {
            let Piece::Arc { center: cb, radius: rb, start_angle: sb, .. } = *pb else { continue };
            if ca.dist(cb) <= same_center {
                if ra + rb < thr {
                    continue;
                }
                for (phi, len) in antipodal_overlap(pa, pb) {
                    let fa = (phi - start_angle).rem_euclid(2.0 * PI);
                    let fb = (phi + PI - sb).rem_euclid(2.0 * PI);
                    let t_a = o.piece_start_param(ia) + fa * ra / o.perimeter();
                    let t_b = o.piece_start_param(ib) + fb * rb / o.perimeter();
                    let first = (t_a, t_a + len * ra / o.perimeter());
                    let second = (t_b, t_b + len * rb / o.perimeter());
                    if len * ra.min(rb) > same_center {
                        families.push(DiameterFamily::Antipodal { center: ca, first, second });
                    }
                }
            } else if ib != ia {
                let u = (cb - ca).normalized().expect("distinct centers");
                let (Some(oa), Some(ob)) = (pa.arc_offset((-u).angle(), 0.0), pb.arc_offset(u.angle(), 0.0)) else {
                    continue;
                };
                let xa = ca - u * ra;
                let xb = cb + u * rb;
                if xa.dist(xb) >= thr {
                    chords.push((
                        BoundaryPoint { p: xa, t: o.param_in_piece(ia, oa * ra) },
                        BoundaryPoint { p: xb, t: o.param_in_piece(ib, ob * rb) },
                    ));
                }
            }
        }
    }
    // a joint/arc chord may coincide with a joint/joint chord when the far point is an endpoint
    chords.sort_by(|a, b| a.0.t.total_cmp(&b.0.t).then(a.1.t.total_cmp(&b.1.t)));
    chords.dedup_by(|a, b| a.0.p.dist(b.0.p) <= same_center && a.1.p.dist(b.1.p) <= same_center);
    DiameterPairs { diameter: d, eps_rel, chords, families }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{ConvexPolygon, Disc};

    fn regular(n: usize, r: f64) -> ConvexBody {
        ConvexPolygon::new((0..n).map(|k| Point2::polar(2.0 * PI * k as f64 / n as f64) * r).collect()).unwrap().into()
    }

    #[test]
    fn square_diameter_and_diagonals() {
        let sq: ConvexBody = ConvexPolygon::new(vec![
            Point2::new(0.0, 0.0),
            Point2::new(1.0, 0.0),
            Point2::new(1.0, 1.0),
            Point2::new(0.0, 1.0),
        ])
        .unwrap()
        .into();
        let (d, w) = diameter(&sq);
        assert_eq!(d, 2f64.sqrt());
        assert_eq!(w.length(), 2f64.sqrt());
        let pairs = diameter_pairs(&sq, EPS_DIAM);
        assert_eq!(pairs.chords.len(), 2);
        assert!(pairs.families.is_empty());
    }

    #[test]
    fn disc_is_one_antipodal_family() {
        let disc: ConvexBody = Disc::new(Point2::ORIGIN, 3.0).unwrap().into();
        assert_eq!(diameter(&disc).0, 6.0);
        let pairs = diameter_pairs(&disc, EPS_DIAM);
        assert!(pairs.chords.is_empty());
        assert!(matches!(pairs.families[..], [DiameterFamily::Antipodal { first: (0.0, 1.0), .. }]));
    }

    #[test]
    fn brute_force_pentagon_pairs() {
        // brute force over all 10 vertex pairs
        let body = regular(5, 1.0);
        let ConvexBody::Polygon(poly) = &body else { unreachable!() };
        let v = poly.vertices();
        let mut dists = Vec::new();
        for i in 0..5 {
            for j in i + 1..5 {
                dists.push(v[i].dist(v[j]));
            }
        }
        let max = dists.iter().copied().fold(0.0, f64::max);
        let attaining = dists.iter().filter(|&&d| d >= max * (1.0 - 1e-9)).count();
        assert_eq!(attaining, 5);
        assert_eq!(diameter_pairs(&body, EPS_DIAM).chords.len(), attaining);
    }

    #[test]
    fn calipers_handle_parallel_edges() {
        // rectangle and regular hexagon have parallel edge pairs
        for body in [regular(6, 1.0), regular(8, 2.0), regular(10, 1.0)] {
            let ConvexBody::Polygon(poly) = &body else { unreachable!() };
            let n = poly.len();
            let pairs = diameter_pairs(&body, EPS_DIAM);
            assert_eq!(pairs.chords.len(), n / 2);
        }
    }

    #[test]
    fn antipodal_overlap_intervals() {
        let c = Point2::ORIGIN;
        let a = Piece::arc(c, 1.0, Point2::polar(0.0), Point2::polar(1.0), false);
        let b = Piece::arc(c, 1.0, Point2::polar(PI + 0.5), Point2::polar(PI + 1.5), false);
        let ov = antipodal_overlap(&a, &b);
        assert_eq!(ov.len(), 1);
        assert!((ov[0].0 - 0.5).abs() < 1e-12 && (ov[0].1 - 0.5).abs() < 1e-12);
    }
}
