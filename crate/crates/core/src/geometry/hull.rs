use super::{ConvexPolygon, GeometryError, Point2};

/// Convex hull of a point set (Andrew's monotone chain).
///
/// The result starts at the lowest-leftmost point, runs counterclockwise and
/// keeps only strict corners.
pub fn hull_polygon(points: &[Point2]) -> Result<ConvexPolygon, GeometryError> {
    if points.iter().any(|p| !p.is_finite()) {
        return Err(GeometryError::NonFinite);
    }
    let mut pts = points.to_vec();
    pts.sort_by(|a, b| a.x.total_cmp(&b.x).then(a.y.total_cmp(&b.y)));
    pts.dedup();
    if pts.len() < 3 {
        return Err(GeometryError::DegenerateInput(format!("{} distinct points", pts.len())));
    }

    let turn = |o: Point2, a: Point2, b: Point2| (a - o).cross(b - o);
    let mut hull: Vec<Point2> = Vec::with_capacity(2 * pts.len());
    for &p in &pts {
        while hull.len() >= 2 && turn(hull[hull.len() - 2], hull[hull.len() - 1], p) <= 0.0 {
            hull.pop();
        }
        hull.push(p);
    }
    let lower = hull.len() + 1;
    for &p in pts.iter().rev().skip(1) {
        while hull.len() >= lower && turn(hull[hull.len() - 2], hull[hull.len() - 1], p) <= 0.0 {
            hull.pop();
        }
        hull.push(p);
    }
    hull.pop();
    if hull.len() < 3 {
        return Err(GeometryError::DegenerateInput("points are collinear".into()));
    }
    ConvexPolygon::new(hull)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: f64, y: f64) -> Point2 {
        Point2::new(x, y)
    }

    #[test]
    fn drops_interior_point() {
        let h = hull_polygon(&[p(0.0, 0.0), p(1.0, 0.0), p(1.0, 1.0), p(0.0, 1.0), p(0.5, 0.5)]).unwrap();
        assert_eq!(h.vertices(), &[p(0.0, 0.0), p(1.0, 0.0), p(1.0, 1.0), p(0.0, 1.0)]);
    }

    #[test]
    fn drops_collinear_boundary_point() {
        let h = hull_polygon(&[p(0.0, 0.0), p(2.0, 0.0), p(1.0, 1.0), p(1.0, 0.0)]).unwrap();
        assert_eq!(h.vertices(), &[p(0.0, 0.0), p(2.0, 0.0), p(1.0, 1.0)]);
    }

    #[test]
    fn collinear_input_is_degenerate() {
        let r = hull_polygon(&[p(0.0, 0.0), p(1.0, 1.0), p(2.0, 2.0)]);
        assert!(matches!(r, Err(GeometryError::DegenerateInput(_))));
        let r = hull_polygon(&[p(0.0, 0.0), p(0.0, 0.0), p(1.0, 0.0)]);
        assert!(matches!(r, Err(GeometryError::DegenerateInput(_))));
    }
}
