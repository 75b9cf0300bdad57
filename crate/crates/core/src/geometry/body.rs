use std::f64::consts::{PI, TAU};

use serde::{Deserialize, Serialize};

use super::{normalize_turn, GeometryError, Point2};

/// Relative tolerance below which a turn counts as "straight".
const COLLINEAR_SIN: f64 = 1e-12;
/// Relative tolerance for arc endpoints lying on their circle.
const ON_CIRCLE_REL: f64 = 1e-9;
/// Angular tolerance for convexity of arc-gon joints.
const TURN_TOL: f64 = 1e-9;

/// Counterclockwise, strictly convex polygon.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ConvexPolygon {
    vertices: Vec<Point2>,
}

impl ConvexPolygon {
    /// Validates and normalizes a vertex cycle.
    ///
    /// Coincident and collinear vertices are dropped and a clockwise cycle is
    /// reversed (keeping the first vertex first). Anything else that is not a
    /// strictly convex simple cycle is rejected.
    pub fn new(vertices: Vec<Point2>) -> Result<Self, GeometryError> {
        if vertices.iter().any(|p| !p.is_finite()) {
            return Err(GeometryError::NonFinite);
        }
        if vertices.len() < 3 {
            return Err(GeometryError::DegenerateInput(format!(
                "polygon needs at least 3 vertices, got {}",
                vertices.len()
            )));
        }
        let scale = bbox_diagonal(vertices.iter().copied());
        if scale == 0.0 {
            return Err(GeometryError::DegenerateInput("all vertices coincide".into()));
        }

        let mut v = dedup_cyclic(vertices, 1e-12 * scale);
        if signed_area(&v) < 0.0 {
            v[1..].reverse();
        }

        // drop collinear vertices until every turn is strict
        loop {
            if v.len() < 3 {
                return Err(GeometryError::DegenerateInput("polygon collapses to a segment".into()));
            }
            let n = v.len();
            let straight = (0..n).find(|&i| {
                let e1 = v[i] - v[(i + n - 1) % n];
                let e2 = v[(i + 1) % n] - v[i];
                let c = e1.cross(e2);
                c.abs() <= COLLINEAR_SIN * e1.norm() * e2.norm() && e1.dot(e2) > 0.0
            });
            match straight {
                Some(i) => {
                    v.remove(i);
                }
                None => break,
            }
        }

        let n = v.len();
        let mut total_turn = 0.0;
        for i in 0..n {
            let e1 = v[i] - v[(i + n - 1) % n];
            let e2 = v[(i + 1) % n] - v[i];
            if e1.cross(e2) <= 0.0 {
                return Err(GeometryError::NotConvex(format!("reflex or reversing turn at vertex {i}")));
            }
            total_turn += e1.cross(e2).atan2(e1.dot(e2));
        }
        if (total_turn - TAU).abs() > 1e-6 {
            return Err(GeometryError::NotConvex(format!("vertex cycle winds {:.3} turns", total_turn / TAU)));
        }
        Ok(ConvexPolygon { vertices: v })
    }

    pub fn vertices(&self) -> &[Point2] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn area(&self) -> f64 {
        signed_area(&self.vertices)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Disc {
    pub center: Point2,
    pub radius: f64,
}

impl Disc {
    pub fn new(center: Point2, radius: f64) -> Result<Self, GeometryError> {
        if !center.is_finite() || !radius.is_finite() {
            return Err(GeometryError::NonFinite);
        }
        if radius <= 0.0 {
            return Err(GeometryError::DegenerateInput(format!("disc radius {radius} is not positive")));
        }
        Ok(Disc { center, radius })
    }
}

/// One boundary piece of an [`ArcGon`], running from the previous endpoint to `to`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum Element {
    #[serde(rename = "seg")]
    Segment { to: Point2 },
    /// Counterclockwise arc about `center`.
    Arc { center: Point2, radius: f64, to: Point2 },
}

impl Element {
    pub fn to(&self) -> Point2 {
        match *self {
            Element::Segment { to } | Element::Arc { to, .. } => to,
        }
    }
}

/// Convex body bounded by segments and counterclockwise circular arcs.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ArcGon {
    start: Point2,
    elements: Vec<Element>,
}

impl ArcGon {
    pub fn new(start: Point2, elements: Vec<Element>) -> Result<Self, GeometryError> {
        if !start.is_finite() {
            return Err(GeometryError::NonFinite);
        }
        if elements.is_empty() {
            return Err(GeometryError::DegenerateInput("arc-gon has no elements".into()));
        }
        for e in &elements {
            if !e.to().is_finite() {
                return Err(GeometryError::NonFinite);
            }
            if let Element::Arc { center, radius, .. } = *e {
                if !center.is_finite() || !radius.is_finite() {
                    return Err(GeometryError::NonFinite);
                }
                if radius <= 0.0 {
                    return Err(GeometryError::InvalidArc(format!("radius {radius} is not positive")));
                }
            }
        }
        let scale = bbox_diagonal(std::iter::once(start).chain(elements.iter().map(Element::to)));
        let last = elements.last().map(Element::to).unwrap_or(start);
        if last.dist(start) > 1e-9 * scale.max(f64::MIN_POSITIVE) {
            return Err(GeometryError::DegenerateInput("boundary does not close".into()));
        }

        // Snap the closing point and drop zero-length segments.
        let tiny = 1e-12 * scale;
        let mut elems: Vec<Element> = Vec::with_capacity(elements.len());
        let mut prev = start;
        let count = elements.len();
        for (k, mut e) in elements.into_iter().enumerate() {
            if k + 1 == count {
                match &mut e {
                    Element::Segment { to } | Element::Arc { to, .. } => *to = start,
                }
            }
            if let Element::Segment { to } = e {
                if to.dist(prev) <= tiny {
                    continue;
                }
            }
            prev = e.to();
            elems.push(e);
        }
        if elems.is_empty() {
            return Err(GeometryError::DegenerateInput("arc-gon has zero extent".into()));
        }

        let mut prev = start;
        let mut headings = Vec::with_capacity(elems.len());
        let mut sweep_total = 0.0;
        for e in &elems {
            match *e {
                Element::Segment { to } => {
                    let h = (to - prev).angle();
                    headings.push((h, h));
                }
                Element::Arc { center, radius, to } => {
                    let tol = ON_CIRCLE_REL * radius.max(scale);
                    if (prev.dist(center) - radius).abs() > tol || (to.dist(center) - radius).abs() > tol {
                        return Err(GeometryError::InvalidArc(format!(
                            "endpoint off circle centered at ({}, {}) with radius {radius}",
                            center.x, center.y
                        )));
                    }
                    let a0 = (prev - center).angle();
                    let sweep = arc_sweep(prev, to, center, elems.len() == 1);
                    if sweep <= 0.0 {
                        return Err(GeometryError::InvalidArc("arc has zero sweep".into()));
                    }
                    sweep_total += sweep;
                    headings.push((a0 + PI / 2.0, a0 + sweep + PI / 2.0));
                }
            }
            prev = e.to();
        }

        let m = headings.len();
        let mut turn_total = sweep_total;
        for k in 0..m {
            let out = headings[k].1;
            let inn = headings[(k + 1) % m].0;
            let turn = normalize_turn(inn - out);
            if turn < -TURN_TOL {
                return Err(GeometryError::NotConvex(format!("boundary turns right after element {k}")));
            }
            if m > 1 && (turn - PI).abs() < TURN_TOL {
                return Err(GeometryError::NotConvex(format!("cusp after element {k}")));
            }
            turn_total += turn;
        }
        if (turn_total - TAU).abs() > 1e-6 {
            return Err(GeometryError::NotConvex(format!("boundary winds {:.4} turns", turn_total / TAU)));
        }

        let gon = ArcGon { start, elements: merge_elements(start, elems) };
        if gon.area() <= 1e-14 * scale * scale {
            return Err(GeometryError::DegenerateInput("arc-gon has empty interior".into()));
        }
        Ok(gon)
    }

    pub fn start(&self) -> Point2 {
        self.start
    }

    pub fn elements(&self) -> &[Element] {
        &self.elements
    }

    pub fn area(&self) -> f64 {
        let mut prev = self.start;
        let mut area = 0.0;
        let single = self.elements.len() == 1;
        for e in &self.elements {
            let to = e.to();
            area += 0.5 * prev.cross(to);
            if let Element::Arc { center, radius, .. } = *e {
                let s = arc_sweep(prev, to, center, single);
                area += 0.5 * radius * radius * (s - s.sin());
            }
            prev = to;
        }
        area
    }
}

/// Counterclockwise sweep in (0, 2π] from `from` to `to` about `center`.
/// Coincident endpoints give a full turn only when `full_if_closed` is set.
pub(crate) fn arc_sweep(from: Point2, to: Point2, center: Point2, full_if_closed: bool) -> f64 {
    let a = from - center;
    let b = to - center;
    let s = a.cross(b).atan2(a.dot(b)).rem_euclid(TAU);
    let r = a.norm().max(b.norm());
    if s * r <= 1e-12 * r || (TAU - s) * r <= 1e-12 * r {
        if full_if_closed {
            TAU
        } else {
            0.0
        }
    } else {
        s
    }
}

/// Merges collinear segment runs and co-circular arc runs (never across the start point).
fn merge_elements(start: Point2, elems: Vec<Element>) -> Vec<Element> {
    let mut out: Vec<Element> = Vec::with_capacity(elems.len());
    let mut starts: Vec<Point2> = Vec::with_capacity(elems.len());
    let mut prev = start;
    for e in elems {
        if let (Some(last), Some(&last_start)) = (out.last_mut(), starts.last()) {
            match (&*last, &e) {
                (Element::Segment { to: mid }, Element::Segment { to }) => {
                    let e1 = *mid - last_start;
                    let e2 = *to - *mid;
                    if e1.cross(e2).abs() <= COLLINEAR_SIN * e1.norm() * e2.norm() && e1.dot(e2) > 0.0 {
                        *last = Element::Segment { to: *to };
                        prev = *to;
                        continue;
                    }
                }
                (Element::Arc { center: c1, radius: r1, .. }, Element::Arc { center: c2, radius: r2, to }) => {
                    let tol = ON_CIRCLE_REL * r1.max(*r2);
                    if c1.dist(*c2) <= tol && (r1 - r2).abs() <= tol {
                        let merged_sweep = arc_sweep(last_start, prev, *c1, false) + arc_sweep(prev, *to, *c2, false);
                        if merged_sweep < TAU - 1e-9 {
                            *last = Element::Arc { center: *c1, radius: *r1, to: *to };
                            prev = *to;
                            continue;
                        }
                    }
                }
                _ => {}
            }
        }
        starts.push(prev);
        prev = e.to();
        out.push(e);
    }
    out
}

/// Any planar convex body this crate can represent.
#[derive(Clone, Debug, PartialEq)]
pub enum ConvexBody {
    Polygon(ConvexPolygon),
    Disc(Disc),
    ArcGon(ArcGon),
}

impl From<ConvexPolygon> for ConvexBody {
    fn from(p: ConvexPolygon) -> Self {
        ConvexBody::Polygon(p)
    }
}

impl From<Disc> for ConvexBody {
    fn from(d: Disc) -> Self {
        ConvexBody::Disc(d)
    }
}

impl From<ArcGon> for ConvexBody {
    fn from(a: ArcGon) -> Self {
        ConvexBody::ArcGon(a)
    }
}

impl ConvexBody {
    pub fn kind(&self) -> &'static str {
        match self {
            ConvexBody::Polygon(_) => "polygon",
            ConvexBody::Disc(_) => "disc",
            ConvexBody::ArcGon(_) => "arcgon",
        }
    }

    pub fn area(&self) -> f64 {
        match self {
            ConvexBody::Polygon(p) => p.area(),
            ConvexBody::Disc(d) => PI * d.radius * d.radius,
            ConvexBody::ArcGon(a) => a.area(),
        }
    }

    /// Applies `x ↦ scale·R(rotation)·x + translation` (a proper similarity).
    pub fn transformed(&self, rotation: f64, scale: f64, translation: Point2) -> Result<ConvexBody, GeometryError> {
        if scale.is_nan() || scale <= 0.0 {
            return Err(GeometryError::DegenerateInput(format!("similarity scale {scale} is not positive")));
        }
        let f = |p: Point2| p.rotated(rotation) * scale + translation;
        Ok(match self {
            ConvexBody::Polygon(p) => ConvexPolygon::new(p.vertices().iter().copied().map(f).collect())?.into(),
            ConvexBody::Disc(d) => Disc::new(f(d.center), d.radius * scale)?.into(),
            ConvexBody::ArcGon(a) => ArcGon::new(
                f(a.start()),
                a.elements()
                    .iter()
                    .map(|e| match *e {
                        Element::Segment { to } => Element::Segment { to: f(to) },
                        Element::Arc { center, radius, to } => {
                            Element::Arc { center: f(center), radius: radius * scale, to: f(to) }
                        }
                    })
                    .collect(),
            )?
            .into(),
        })
    }

    /// Point reflection through `center`.
    pub fn reflected(&self, center: Point2) -> Result<ConvexBody, GeometryError> {
        let t = center * 2.0;
        self.transformed(PI, 1.0, t)
    }

    /// Boundary as an arc-gon description (polygons become all-segment arc-gons).
    pub fn to_arcgon_spec(&self) -> BodySpec {
        match self {
            ConvexBody::Polygon(p) => {
                let v = p.vertices();
                BodySpec::ArcGon {
                    start: v[0],
                    elements: v[1..].iter().chain(std::iter::once(&v[0])).map(|&to| Element::Segment { to }).collect(),
                }
            }
            ConvexBody::Disc(d) => {
                let e = d.center + Point2::new(d.radius, 0.0);
                let w = d.center - Point2::new(d.radius, 0.0);
                BodySpec::ArcGon {
                    start: e,
                    elements: vec![
                        Element::Arc { center: d.center, radius: d.radius, to: w },
                        Element::Arc { center: d.center, radius: d.radius, to: e },
                    ],
                }
            }
            ConvexBody::ArcGon(a) => BodySpec::ArcGon { start: a.start(), elements: a.elements().to_vec() },
        }
    }

    pub fn to_spec(&self) -> BodySpec {
        match self {
            ConvexBody::Polygon(p) => BodySpec::Polygon { vertices: p.vertices().to_vec() },
            ConvexBody::Disc(d) => BodySpec::Disc { center: d.center, radius: d.radius },
            ConvexBody::ArcGon(a) => BodySpec::ArcGon { start: a.start(), elements: a.elements().to_vec() },
        }
    }

    /// Parses the JSON body schema, separating schema errors from invariant violations.
    pub fn from_json(text: &str) -> Result<ConvexBody, BodyParseError> {
        let spec: BodySpec = serde_json::from_str(text).map_err(BodyParseError::Schema)?;
        ConvexBody::try_from(spec).map_err(BodyParseError::Invalid)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_spec()).expect("body specs always serialize")
    }
}

/// Unvalidated wire form of a body.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase", deny_unknown_fields)]
pub enum BodySpec {
    Polygon {
        vertices: Vec<Point2>,
    },
    Disc {
        center: Point2,
        radius: f64,
    },
    #[serde(rename = "arcgon")]
    ArcGon {
        start: Point2,
        elements: Vec<Element>,
    },
}

impl TryFrom<BodySpec> for ConvexBody {
    type Error = GeometryError;
    fn try_from(spec: BodySpec) -> Result<Self, Self::Error> {
        Ok(match spec {
            BodySpec::Polygon { vertices } => ConvexPolygon::new(vertices)?.into(),
            BodySpec::Disc { center, radius } => Disc::new(center, radius)?.into(),
            BodySpec::ArcGon { start, elements } => ArcGon::new(start, elements)?.into(),
        })
    }
}

impl Serialize for ConvexBody {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_spec().serialize(s)
    }
}

impl<'de> Deserialize<'de> for ConvexBody {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let spec = BodySpec::deserialize(d)?;
        ConvexBody::try_from(spec).map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, thiserror::Error)]
pub enum BodyParseError {
    #[error("schema violation: {0}")]
    Schema(serde_json::Error),
    #[error("invalid body: {0}")]
    Invalid(GeometryError),
}

pub(crate) fn signed_area(v: &[Point2]) -> f64 {
    let n = v.len();
    (0..n).map(|i| v[i].cross(v[(i + 1) % n])).sum::<f64>() * 0.5
}

pub(crate) fn bbox_diagonal(points: impl IntoIterator<Item = Point2>) -> f64 {
    let mut lo = Point2::new(f64::INFINITY, f64::INFINITY);
    let mut hi = Point2::new(f64::NEG_INFINITY, f64::NEG_INFINITY);
    let mut any = false;
    for p in points {
        any = true;
        lo = Point2::new(lo.x.min(p.x), lo.y.min(p.y));
        hi = Point2::new(hi.x.max(p.x), hi.y.max(p.y));
    }
    if any {
        hi.dist(lo)
    } else {
        0.0
    }
}

fn dedup_cyclic(v: Vec<Point2>, tol: f64) -> Vec<Point2> {
    let mut out: Vec<Point2> = Vec::with_capacity(v.len());
    for p in v {
        if out.last().is_none_or(|q| q.dist(p) > tol) {
            out.push(p);
        }
    }
    while out.len() > 1 && out[0].dist(*out.last().unwrap()) <= tol {
        out.pop();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: f64, y: f64) -> Point2 {
        Point2::new(x, y)
    }

    #[test]
    fn polygon_normalization() {
        // clockwise input with a collinear midpoint and a duplicate
        let poly =
            ConvexPolygon::new(vec![p(0.0, 0.0), p(0.0, 1.0), p(1.0, 1.0), p(1.0, 0.5), p(1.0, 0.0), p(1.0, 0.0)])
                .unwrap();
        assert_eq!(poly.vertices(), &[p(0.0, 0.0), p(1.0, 0.0), p(1.0, 1.0), p(0.0, 1.0)]);
        assert!((poly.area() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn polygon_rejects_reflex_and_degenerate() {
        let dart = vec![p(0.0, 0.0), p(2.0, 0.0), p(1.0, 0.3), p(1.0, 2.0)];
        assert!(matches!(ConvexPolygon::new(dart), Err(GeometryError::NotConvex(_))));
        let line = vec![p(0.0, 0.0), p(1.0, 1.0), p(2.0, 2.0)];
        assert!(matches!(ConvexPolygon::new(line), Err(GeometryError::DegenerateInput(_))));
        let nan = vec![p(0.0, 0.0), p(1.0, f64::NAN), p(2.0, 2.0)];
        assert!(matches!(ConvexPolygon::new(nan), Err(GeometryError::NonFinite)));
        // pentagram: all left turns but winds twice
        let star: Vec<_> = (0..5).map(|k| Point2::polar(4.0 * PI * k as f64 / 5.0)).collect();
        assert!(matches!(ConvexPolygon::new(star), Err(GeometryError::NotConvex(_))));
    }

    #[test]
    fn arcgon_half_disc() {
        let g = ArcGon::new(
            p(0.0, 1.0),
            vec![
                Element::Arc { center: p(0.0, 0.0), radius: 1.0, to: p(0.0, -1.0) },
                Element::Segment { to: p(0.0, 1.0) },
            ],
        )
        .unwrap();
        assert!((g.area() - PI / 2.0).abs() < 1e-12);
    }

    #[test]
    fn arcgon_rejects_clockwise_arc_bulge() {
        // top of a square replaced by an arc whose centre lies above it, so the
        // counter-clockwise sweep goes the long way round
        let bad = ArcGon::new(
            p(0.0, 0.0),
            vec![
                Element::Segment { to: p(1.0, 0.0) },
                Element::Segment { to: p(1.0, 1.0) },
                Element::Arc { center: p(0.5, 2.0), radius: 1.25f64.sqrt(), to: p(0.0, 1.0) },
                Element::Segment { to: p(0.0, 0.0) },
            ],
        );
        assert!(bad.is_err());
        let off_circle = ArcGon::new(
            p(0.0, 1.0),
            vec![
                Element::Arc { center: p(0.0, 0.0), radius: 1.1, to: p(0.0, -1.0) },
                Element::Segment { to: p(0.0, 1.0) },
            ],
        );
        assert!(matches!(off_circle, Err(GeometryError::InvalidArc(_))));
        let open =
            ArcGon::new(p(0.0, 0.0), vec![Element::Segment { to: p(1.0, 0.0) }, Element::Segment { to: p(1.0, 1.0) }]);
        assert!(open.is_err());
    }

    #[test]
    fn arcgon_merges_cocircular_runs() {
        let c = p(0.0, 0.0);
        let g = ArcGon::new(
            p(0.0, 1.0),
            vec![
                Element::Arc { center: c, radius: 1.0, to: Point2::polar(PI * 0.75) },
                Element::Arc { center: c, radius: 1.0, to: p(-1.0, 0.0) },
                Element::Arc { center: c, radius: 1.0, to: p(0.0, -1.0) },
                Element::Segment { to: p(0.0, 0.0) },
                Element::Segment { to: p(0.0, 1.0) },
            ],
        )
        .unwrap();
        assert_eq!(g.elements().len(), 2);
    }

    #[test]
    fn json_schema_roundtrip_and_errors() {
        let text = r#"{"type":"arcgon","start":[0,1],"elements":[{"kind":"arc","center":[0,0],"radius":1,"to":[0,-1]},{"kind":"seg","to":[0,1]}]}"#;
        let body = ConvexBody::from_json(text).unwrap();
        let again = ConvexBody::from_json(&body.to_json()).unwrap();
        assert_eq!(body, again);

        assert!(matches!(ConvexBody::from_json("{\"type\":\"polygon\"}"), Err(BodyParseError::Schema(_))));
        assert!(matches!(ConvexBody::from_json("not json"), Err(BodyParseError::Schema(_))));
        assert!(matches!(
            ConvexBody::from_json(r#"{"type":"disc","center":[0,0],"radius":-1}"#),
            Err(BodyParseError::Invalid(_))
        ));
    }
}
