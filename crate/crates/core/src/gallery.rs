//! Named test bodies with known Borsuk numbers, plus seeded random polygons.

use std::collections::BTreeMap;
use std::f64::consts::{FRAC_PI_3, PI, TAU};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::geometry::{hull_polygon, ArcGon, ConvexBody, ConvexPolygon, Disc, Element, GeometryError, Point2};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum GalleryError {
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GalleryShape {
    pub name: String,
    pub parameters: BTreeMap<String, f64>,
    pub body: ConvexBody,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected_alpha: Option<u8>,
}

impl GalleryShape {
    fn new(name: &str, parameters: &[(&str, f64)], body: impl Into<ConvexBody>, expected_alpha: Option<u8>) -> Self {
        GalleryShape {
            name: name.to_string(),
            parameters: parameters.iter().map(|&(k, v)| (k.to_string(), v)).collect(),
            body: body.into(),
            expected_alpha,
        }
    }
}

pub fn regular_polygon(n: usize, circumradius: f64) -> Result<ConvexPolygon, GeometryError> {
    if n < 3 {
        return Err(GeometryError::DegenerateInput(format!("a polygon needs at least 3 vertices, got {n}")));
    }
    if !circumradius.is_finite() || circumradius <= 0.0 {
        return Err(GeometryError::DegenerateInput(format!("circumradius {circumradius} is not positive")));
    }
    ConvexPolygon::new((0..n).map(|k| Point2::polar(TAU * k as f64 / n as f64) * circumradius).collect())
}

pub fn rectangle(w: f64, h: f64) -> Result<ConvexPolygon, GeometryError> {
    ConvexPolygon::new(vec![Point2::new(0.0, 0.0), Point2::new(w, 0.0), Point2::new(w, h), Point2::new(0.0, h)])
}

/// Reuleaux polygon: arc `i` joins vertices `i` and `i + 1` of a regular
/// `n`-gon and is centered at the opposite vertex.
pub fn reuleaux_polygon(n: usize, width: f64) -> Result<ArcGon, GeometryError> {
    if n < 3 || n.is_multiple_of(2) {
        return Err(GeometryError::DegenerateInput(format!("Reuleaux polygons need an odd n ≥ 3, got {n}")));
    }
    if !width.is_finite() || width <= 0.0 {
        return Err(GeometryError::DegenerateInput(format!("width {width} is not positive")));
    }
    let circumradius = width / (2.0 * (PI * (n - 1) as f64 / (2 * n) as f64).sin());
    let v: Vec<Point2> = (0..n).map(|k| Point2::polar(TAU * k as f64 / n as f64) * circumradius).collect();
    let elements = (0..n)
        .map(|i| Element::Arc { center: v[(i + n.div_ceil(2)) % n], radius: width, to: v[(i + 1) % n] })
        .collect();
    let g = ArcGon::new(v[0], elements)?;
    let outline = ConvexBody::from(g.clone()).outline();
    for k in 0..360 {
        let w = outline.width(Point2::polar(PI * k as f64 / 360.0));
        if (w - width).abs() > 1e-9 * width {
            return Err(GeometryError::DegenerateInput(format!("support width {w} differs from {width}")));
        }
    }
    Ok(g)
}

pub const PENTAGON_BETA: f64 = PI / 9.0;
pub const PENTAGON_GAMMA: f64 = 2.0 * PI / 9.0;

/// Pentagon with exactly five diameter segments of length `r` forming a 5-cycle.
///
/// With `o = (0,0)` and `a = (r,0)`, the point `b` sits on the circle of radius
/// `r` about `a` at angle `π − beta`, and `c` on the circle about `o` at angle
/// `gamma`; both angles range over `(0, π/3)`, the upper boundary of the lens
/// between the two circles. `d` is the point of the lens at distance `r` from
/// both `b` and `c`.
pub fn example_pentagon(r: f64, beta: f64, gamma: f64) -> Result<ConvexPolygon, GalleryError> {
    let bad = |m: String| GalleryError::InvalidParameters(m);
    if !r.is_finite() || r <= 0.0 {
        return Err(bad(format!("r = {r} must be positive")));
    }
    for (name, x) in [("beta", beta), ("gamma", gamma)] {
        if !(x > 0.0 && x < FRAC_PI_3) {
            return Err(bad(format!("{name} = {x} is outside (0, π/3)")));
        }
    }
    let o = Point2::ORIGIN;
    let a = Point2::new(r, 0.0);
    let b = a + Point2::polar(PI - beta) * r;
    let c = Point2::polar(gamma) * r;

    let half = b.dist(c) / 2.0;
    if half >= r {
        return Err(bad("b and c are too far apart".into()));
    }
    let m = b.midpoint(c);
    let u = (c - b).normalized().ok_or_else(|| bad("b and c coincide".into()))?.perp();
    let h = (r * r - half * half).sqrt();
    let d = [m + u * h, m - u * h]
        .into_iter()
        .find(|q| q.dist(o) < r && q.dist(a) < r)
        .ok_or_else(|| bad("no intersection point inside the lens".into()))?;

    let poly = hull_polygon(&[o, a, b, c, d])?;
    let v = poly.vertices();
    if v.len() != 5 {
        return Err(bad(format!("hull has {} vertices", v.len())));
    }
    let tol = 1e-9 * r;
    let diameters = [(o, a), (a, b), (b, d), (c, d), (o, c)];
    let pts = [o, a, b, c, d];
    for i in 0..5 {
        for j in i + 1..5 {
            let (p, q) = (pts[i], pts[j]);
            let len = p.dist(q);
            let listed = diameters.iter().any(|&(x, y)| (x == p && y == q) || (x == q && y == p));
            if listed && (len - r).abs() > tol {
                return Err(bad(format!("segment {p:?}–{q:?} has length {len}, not {r}")));
            }
            if !listed && len >= r - tol {
                return Err(bad(format!("segment {p:?}–{q:?} of length {len} reaches the diameter")));
            }
        }
    }
    Ok(poly)
}

/// Convex polygon from `n` random edge vectors sorted by direction.
pub fn random_convex_polygon(n: usize, seed: u64) -> Result<ConvexPolygon, GeometryError> {
    if n < 3 {
        return Err(GeometryError::DegenerateInput(format!("a polygon needs at least 3 vertices, got {n}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let raw: Vec<Point2> =
            (0..n).map(|_| Point2::polar(rng.gen_range(0.0..TAU)) * rng.gen_range(0.2..1.0)).collect();
        let mean = raw.iter().fold(Point2::ORIGIN, |s, &e| s + e) / n as f64;
        let edges: Vec<Point2> = raw.into_iter().map(|e| e - mean).collect();
        if let Ok(p) = polygon_from_edges(edges) {
            if p.len() == n {
                return Ok(p);
            }
        }
    }
}

/// Centrally symmetric polygon from `n/2` random edges and their opposites.
pub fn random_symmetric_polygon(n: usize, seed: u64) -> Result<ConvexPolygon, GeometryError> {
    if n < 4 || !n.is_multiple_of(2) {
        return Err(GeometryError::DegenerateInput(format!("symmetric polygons need an even n ≥ 4, got {n}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let half: Vec<Point2> =
            (0..n / 2).map(|_| Point2::polar(rng.gen_range(0.0..PI)) * rng.gen_range(0.2..1.0)).collect();
        let edges: Vec<Point2> = half.iter().copied().chain(half.iter().map(|&e| -e)).collect();
        if let Ok(p) = polygon_from_edges(edges) {
            if p.len() == n {
                return Ok(p);
            }
        }
    }
}

fn polygon_from_edges(mut edges: Vec<Point2>) -> Result<ConvexPolygon, GeometryError> {
    edges.sort_by(|a, b| a.angle().total_cmp(&b.angle()));
    let mut acc = Point2::ORIGIN;
    let mut v = Vec::with_capacity(edges.len());
    for e in edges {
        v.push(acc);
        acc += e;
    }
    let centroid = v.iter().fold(Point2::ORIGIN, |s, &p| s + p) / v.len() as f64;
    ConvexPolygon::new(v.into_iter().map(|p| p - centroid).collect())
}

/// Every named body with a known Borsuk number.
pub fn gallery() -> Vec<GalleryShape> {
    let mut out = vec![
        GalleryShape::new("square", &[("side", 1.0)], rectangle(1.0, 1.0).unwrap(), Some(2)),
        GalleryShape::new("rectangle", &[("w", 4.0), ("h", 1.0)], rectangle(4.0, 1.0).unwrap(), Some(2)),
        GalleryShape::new("disc", &[("radius", 1.0)], Disc::new(Point2::ORIGIN, 1.0).unwrap(), Some(3)),
    ];
    for n in 3..=10 {
        let alpha = if n % 2 == 1 { 3 } else { 2 };
        out.push(GalleryShape::new(
            "regular",
            &[("n", n as f64), ("circumradius", 1.0)],
            regular_polygon(n, 1.0).unwrap(),
            Some(alpha),
        ));
    }
    for n in [3, 5, 7] {
        out.push(GalleryShape::new(
            "reuleaux",
            &[("n", n as f64), ("width", 1.0)],
            reuleaux_polygon(n, 1.0).unwrap(),
            Some(3),
        ));
    }
    out.push(GalleryShape::new(
        "pentagon",
        &[("r", 4.0), ("beta", PENTAGON_BETA), ("gamma", PENTAGON_GAMMA)],
        example_pentagon(4.0, PENTAGON_BETA, PENTAGON_GAMMA).unwrap(),
        Some(3),
    ));
    out
}

/// Build a shape by name: `square`, `rectangle`, `disc`, `regular`,
/// `reuleaux`, `pentagon`, `random`, `symmetric`. Missing parameters take
/// their gallery defaults.
pub fn named_shape(name: &str, params: &BTreeMap<String, f64>) -> Result<GalleryShape, GalleryError> {
    let get = |k: &str, default: f64| params.get(k).copied().unwrap_or(default);
    let count = |k: &str, default: usize| -> Result<usize, GalleryError> {
        let x = get(k, default as f64);
        if x.fract() != 0.0 || !(0.0..=1e7).contains(&x) {
            return Err(GalleryError::InvalidParameters(format!("{k} = {x} is not a count")));
        }
        Ok(x as usize)
    };
    let shape = match name {
        "square" => {
            let s = get("side", 1.0);
            GalleryShape::new(name, &[("side", s)], rectangle(s, s)?, Some(2))
        }
        "rectangle" => {
            let (w, h) = (get("w", 4.0), get("h", 1.0));
            GalleryShape::new(name, &[("w", w), ("h", h)], rectangle(w, h)?, Some(2))
        }
        "disc" => {
            let r = get("radius", 1.0);
            GalleryShape::new(name, &[("radius", r)], Disc::new(Point2::ORIGIN, r)?, Some(3))
        }
        "regular" => {
            let (n, r) = (count("n", 6)?, get("circumradius", 1.0));
            let alpha = if n % 2 == 1 { 3 } else { 2 };
            GalleryShape::new(name, &[("n", n as f64), ("circumradius", r)], regular_polygon(n, r)?, Some(alpha))
        }
        "reuleaux" => {
            let (n, w) = (count("n", 3)?, get("width", 1.0));
            GalleryShape::new(name, &[("n", n as f64), ("width", w)], reuleaux_polygon(n, w)?, Some(3))
        }
        "pentagon" => {
            let (r, b, g) = (get("r", 4.0), get("beta", PENTAGON_BETA), get("gamma", PENTAGON_GAMMA));
            GalleryShape::new(name, &[("r", r), ("beta", b), ("gamma", g)], example_pentagon(r, b, g)?, Some(3))
        }
        "random" => {
            let (n, seed) = (count("n", 8)?, count("seed", 1)?);
            GalleryShape::new(
                name,
                &[("n", n as f64), ("seed", seed as f64)],
                random_convex_polygon(n, seed as u64)?,
                None,
            )
        }
        "symmetric" => {
            let (n, seed) = (count("n", 10)?, count("seed", 7)?);
            GalleryShape::new(
                name,
                &[("n", n as f64), ("seed", seed as f64)],
                random_symmetric_polygon(n, seed as u64)?,
                Some(2),
            )
        }
        other => return Err(GalleryError::InvalidParameters(format!("unknown shape {other:?}"))),
    };
    Ok(shape)
}

pub const SHAPE_NAMES: [&str; 8] =
    ["square", "rectangle", "disc", "regular", "reuleaux", "pentagon", "random", "symmetric"];
