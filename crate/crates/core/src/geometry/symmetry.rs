use super::{ConvexBody, Piece, Point2, EPS_SYM};

#[derive(Clone, Copy, Debug)]
enum Desc {
    Seg { start: Point2 },
    Arc { start: Point2, center: Point2, radius: f64 },
}

impl Desc {
    fn start(&self) -> Point2 {
        match *self {
            Desc::Seg { start } | Desc::Arc { start, .. } => start,
        }
    }
}

/// Center of point symmetry, if the body is centrally symmetric within `EPS_SYM·D`.
pub fn symmetry_center(body: &ConvexBody) -> Option<Point2> {
    match body {
        ConvexBody::Disc(d) => Some(d.center),
        ConvexBody::Polygon(poly) => {
            let v = poly.vertices();
            let n = v.len();
            if n % 2 != 0 {
                return None;
            }
            let h = n / 2;
            let center = v[0].midpoint(v[h]);
            let tol = EPS_SYM * body.outline().diameter();
            (0..h).all(|i| (v[i] + v[i + h] - center * 2.0).norm() <= tol).then_some(center)
        }
        ConvexBody::ArcGon(_) => {
            let outline = body.outline();
            let tol = EPS_SYM * outline.diameter();
            let descs = canonical(outline.pieces(), tol);
            if descs.is_empty() {
                // a single closed circle after merging
                return match outline.pieces()[0] {
                    Piece::Arc { center, .. } => Some(center),
                    Piece::Segment { .. } => None,
                };
            }
            let m = descs.len();
            if !m.is_multiple_of(2) {
                return None;
            }
            let h = m / 2;
            let center = descs[0].start().midpoint(descs[h].start());
            let close = |a: Point2, b: Point2| (a + b - center * 2.0).norm() <= tol;
            let ok = (0..h).all(|i| match (descs[i], descs[i + h]) {
                (Desc::Seg { start: a }, Desc::Seg { start: b }) => close(a, b),
                (Desc::Arc { start: a, center: ca, radius: ra }, Desc::Arc { start: b, center: cb, radius: rb }) => {
                    close(a, b) && close(ca, cb) && (ra - rb).abs() <= tol
                }
                _ => false,
            });
            ok.then_some(center)
        }
    }
}

/// Rotation-independent description: collinear and co-circular runs merged
/// cyclically. Empty when the whole boundary is one circle.
fn canonical(pieces: &[Piece], tol: f64) -> Vec<Desc> {
    let same = |p: &Piece, q: &Piece| match (*p, *q) {
        (Piece::Segment { a: a1, b: b1 }, Piece::Segment { a: a2, b: b2 }) => {
            let (e1, e2) = (b1 - a1, b2 - a2);
            e1.cross(e2).abs() <= 1e-12 * e1.norm() * e2.norm() && e1.dot(e2) > 0.0
        }
        (Piece::Arc { center: c1, radius: r1, .. }, Piece::Arc { center: c2, radius: r2, .. }) => {
            c1.dist(c2) <= tol && (r1 - r2).abs() <= tol
        }
        _ => false,
    };
    let m = pieces.len();
    // a run boundary sits before piece i when it differs from piece i-1
    let breaks: Vec<usize> = (0..m).filter(|&i| !same(&pieces[(i + m - 1) % m], &pieces[i])).collect();
    breaks
        .iter()
        .map(|&i| match pieces[i] {
            Piece::Segment { a, .. } => Desc::Seg { start: a },
            Piece::Arc { a, center, radius, .. } => Desc::Arc { start: a, center, radius },
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use std::f64::consts::PI;

    use super::*;
    use crate::geometry::{ArcGon, ConvexPolygon, Disc, Element};

    fn p(x: f64, y: f64) -> Point2 {
        Point2::new(x, y)
    }

    #[test]
    fn square_center() {
        let sq: ConvexBody =
            ConvexPolygon::new(vec![p(0.0, 0.0), p(1.0, 0.0), p(1.0, 1.0), p(0.0, 1.0)]).unwrap().into();
        assert_eq!(symmetry_center(&sq), Some(p(0.5, 0.5)));
    }

    #[test]
    fn triangle_has_none() {
        let tri: ConvexBody =
            ConvexPolygon::new((0..3).map(|k| Point2::polar(2.0 * PI * k as f64 / 3.0)).collect()).unwrap().into();
        assert_eq!(symmetry_center(&tri), None);
        let kite: ConvexBody =
            ConvexPolygon::new(vec![p(0.0, 0.0), p(2.0, 1.0), p(0.0, 3.0), p(-2.0, 1.0)]).unwrap().into();
        assert_eq!(symmetry_center(&kite), None);
    }

    #[test]
    fn disc_center() {
        let d: ConvexBody = Disc::new(p(3.0, 4.0), 1.5).unwrap().into();
        assert_eq!(symmetry_center(&d), Some(p(3.0, 4.0)));
    }

    #[test]
    fn stadium_is_symmetric_regardless_of_anchor() {
        // anchored mid-way along the bottom segment
        let c1 = p(1.0, 0.0);
        let c2 = p(-1.0, 0.0);
        let st: ConvexBody = ArcGon::new(
            p(0.0, -1.0),
            vec![
                Element::Segment { to: p(1.0, -1.0) },
                Element::Arc { center: c1, radius: 1.0, to: p(1.0, 1.0) },
                Element::Segment { to: p(-1.0, 1.0) },
                Element::Arc { center: c2, radius: 1.0, to: p(-1.0, -1.0) },
                Element::Segment { to: p(0.0, -1.0) },
            ],
        )
        .unwrap()
        .into();
        let c = symmetry_center(&st).unwrap();
        assert!(c.norm() < 1e-12);
    }
}
