use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use super::GeometryError;

/// A point (or vector) in the plane.
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(from = "[f64; 2]", into = "[f64; 2]")]
pub struct Point2 {
    pub x: f64,
    pub y: f64,
}

impl From<[f64; 2]> for Point2 {
    fn from([x, y]: [f64; 2]) -> Self {
        Point2 { x, y }
    }
}

impl From<Point2> for [f64; 2] {
    fn from(p: Point2) -> Self {
        [p.x, p.y]
    }
}

impl Point2 {
    pub const ORIGIN: Point2 = Point2 { x: 0.0, y: 0.0 };

    #[inline]
    pub const fn new(x: f64, y: f64) -> Self {
        Point2 { x, y }
    }

    /// Unit vector at angle `theta` (radians, counterclockwise from +x).
    #[inline]
    pub fn polar(theta: f64) -> Self {
        let (s, c) = theta.sin_cos();
        Point2 { x: c, y: s }
    }

    #[inline]
    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    #[inline]
    pub fn dot(self, o: Point2) -> f64 {
        self.x * o.x + self.y * o.y
    }

    /// z-component of the 3D cross product; positive when `o` is counterclockwise of `self`.
    #[inline]
    pub fn cross(self, o: Point2) -> f64 {
        self.x * o.y - self.y * o.x
    }

    #[inline]
    pub fn norm_sq(self) -> f64 {
        self.dot(self)
    }

    #[inline]
    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    #[inline]
    pub fn dist(self, o: Point2) -> f64 {
        (self - o).norm()
    }

    #[inline]
    pub fn dist_sq(self, o: Point2) -> f64 {
        (self - o).norm_sq()
    }

    #[inline]
    pub fn angle(self) -> f64 {
        self.y.atan2(self.x)
    }

    /// Counterclockwise quarter turn.
    #[inline]
    pub fn perp(self) -> Point2 {
        Point2::new(-self.y, self.x)
    }

    pub fn normalized(self) -> Option<Point2> {
        let n = self.norm();
        (n > 0.0 && n.is_finite()).then(|| self / n)
    }

    #[inline]
    pub fn lerp(self, o: Point2, s: f64) -> Point2 {
        self + (o - self) * s
    }

    #[inline]
    pub fn midpoint(self, o: Point2) -> Point2 {
        Point2::new(0.5 * (self.x + o.x), 0.5 * (self.y + o.y))
    }

    /// Rotation by `theta` about the origin.
    pub fn rotated(self, theta: f64) -> Point2 {
        let (s, c) = theta.sin_cos();
        Point2::new(c * self.x - s * self.y, s * self.x + c * self.y)
    }

    /// Point reflection through `center`.
    #[inline]
    pub fn reflect_through(self, center: Point2) -> Point2 {
        center * 2.0 - self
    }
}

impl Add for Point2 {
    type Output = Point2;
    #[inline]
    fn add(self, o: Point2) -> Point2 {
        Point2::new(self.x + o.x, self.y + o.y)
    }
}

impl AddAssign for Point2 {
    #[inline]
    fn add_assign(&mut self, o: Point2) {
        self.x += o.x;
        self.y += o.y;
    }
}

impl Sub for Point2 {
    type Output = Point2;
    #[inline]
    fn sub(self, o: Point2) -> Point2 {
        Point2::new(self.x - o.x, self.y - o.y)
    }
}

impl Mul<f64> for Point2 {
    type Output = Point2;
    #[inline]
    fn mul(self, s: f64) -> Point2 {
        Point2::new(self.x * s, self.y * s)
    }
}

impl Div<f64> for Point2 {
    type Output = Point2;
    #[inline]
    fn div(self, s: f64) -> Point2 {
        Point2::new(self.x / s, self.y / s)
    }
}

impl Neg for Point2 {
    type Output = Point2;
    #[inline]
    fn neg(self) -> Point2 {
        Point2::new(-self.x, -self.y)
    }
}

/// A segment between two distinct boundary points.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "[Point2; 2]", into = "[Point2; 2]")]
pub struct Chord {
    pub a: Point2,
    pub b: Point2,
}

impl Chord {
    pub fn new(a: Point2, b: Point2) -> Result<Self, GeometryError> {
        if !a.is_finite() || !b.is_finite() {
            return Err(GeometryError::NonFinite);
        }
        if a == b {
            return Err(GeometryError::DegenerateInput("chord endpoints coincide".into()));
        }
        Ok(Chord { a, b })
    }

    pub fn length(&self) -> f64 {
        self.a.dist(self.b)
    }

    pub fn midpoint(&self) -> Point2 {
        self.a.midpoint(self.b)
    }

    pub fn reversed(&self) -> Chord {
        Chord { a: self.b, b: self.a }
    }

    /// Distance from `p` to the closed segment.
    pub fn distance_to(&self, p: Point2) -> f64 {
        let d = self.b - self.a;
        let len_sq = d.norm_sq();
        let s = ((p - self.a).dot(d) / len_sq).clamp(0.0, 1.0);
        p.dist(self.a + d * s)
    }

    /// True when the two segments cross at a point interior to both.
    /// `tol` is an absolute length; crossings within `tol` of an endpoint are rejected.
    pub fn crosses_interior(&self, other: &Chord, tol: f64) -> bool {
        let r = self.b - self.a;
        let s = other.b - other.a;
        let denom = r.cross(s);
        if denom.abs() <= f64::EPSILON * r.norm() * s.norm() {
            return false;
        }
        let qp = other.a - self.a;
        let u = qp.cross(s) / denom;
        let v = qp.cross(r) / denom;
        let (lr, ls) = (r.norm(), s.norm());
        u * lr > tol && (1.0 - u) * lr > tol && v * ls > tol && (1.0 - v) * ls > tol
    }
}

impl TryFrom<[Point2; 2]> for Chord {
    type Error = GeometryError;
    fn try_from([a, b]: [Point2; 2]) -> Result<Self, Self::Error> {
        Chord::new(a, b)
    }
}

impl From<Chord> for [Point2; 2] {
    fn from(c: Chord) -> Self {
        [c.a, c.b]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chord_rejects_coincident_endpoints() {
        let p = Point2::new(1.0, 2.0);
        assert!(Chord::new(p, p).is_err());
        assert!(Chord::new(p, Point2::new(f64::NAN, 0.0)).is_err());
    }

    #[test]
    fn crossing_diagonals() {
        let d1 = Chord::new(Point2::new(0.0, 0.0), Point2::new(1.0, 1.0)).unwrap();
        let d2 = Chord::new(Point2::new(1.0, 0.0), Point2::new(0.0, 1.0)).unwrap();
        assert!(d1.crosses_interior(&d2, 1e-12));
        // touching at an endpoint is not an interior crossing
        let e = Chord::new(Point2::new(1.0, 1.0), Point2::new(2.0, 0.0)).unwrap();
        assert!(!d1.crosses_interior(&e, 1e-12));
    }

    #[test]
    fn serde_as_pairs() {
        let c = Chord::new(Point2::new(0.0, 0.5), Point2::new(1.0, 0.5)).unwrap();
        let s = serde_json::to_string(&c).unwrap();
        assert_eq!(s, "[[0.0,0.5],[1.0,0.5]]");
        let back: Chord = serde_json::from_str(&s).unwrap();
        assert_eq!(back, c);
    }
}
