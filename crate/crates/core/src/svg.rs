//! SVG 1.1 figures: body outline, partition pieces, diameter segments and
//! construction lines. The y axis is flipped so figures read in the usual
//! mathematical orientation.

use std::fmt::Write;

use crate::decision::BorsukAnalysis;
use crate::geometry::{ConvexBody, Outline, Piece, Point2};
use crate::partition::Partition;

pub const PIECE_FILLS: [&str; 3] = ["#8dd3c7", "#ffffb3", "#bebada"];
pub const OUTLINE_COLOR: &str = "#000000";
pub const DIAMETER_COLOR: &str = "#d62728";
pub const CONSTRUCTION_COLOR: &str = "#1f77b4";

const FAMILY_SAMPLES: usize = 12;

fn fmt(v: f64) -> String {
    let s = format!("{v:.6}");
    if s == "-0.000000" {
        "0.000000".into()
    } else {
        s
    }
}

fn xy(p: Point2) -> String {
    format!("{} {}", fmt(p.x), fmt(-p.y))
}

fn path_data(outline: &Outline) -> String {
    let pieces = outline.pieces();
    let mut d = format!("M {}", xy(pieces[0].start()));
    for piece in pieces {
        match *piece {
            Piece::Segment { b, .. } => {
                let _ = write!(d, " L {}", xy(b));
            }
            Piece::Arc { radius, sweep, b, .. } => {
                let large = u8::from(sweep > std::f64::consts::PI);
                let _ = write!(d, " A {r} {r} 0 {large} 0 {}", xy(b), r = fmt(radius));
            }
        }
    }
    d.push_str(" Z");
    d
}

fn shape_element(outline: &Outline, attrs: &str) -> String {
    if outline.is_full_circle() {
        if let Piece::Arc { center, radius, .. } = outline.pieces()[0] {
            return format!(r#"<circle cx="{}" cy="{}" r="{}" {attrs}/>"#, fmt(center.x), fmt(-center.y), fmt(radius));
        }
    }
    format!(r#"<path d="{}" {attrs}/>"#, path_data(outline))
}

struct Bounds {
    lo: Point2,
    hi: Point2,
}

impl Bounds {
    fn new() -> Self {
        Bounds { lo: Point2::new(f64::INFINITY, f64::INFINITY), hi: Point2::new(f64::NEG_INFINITY, f64::NEG_INFINITY) }
    }

    fn add(&mut self, p: Point2) {
        self.lo = Point2::new(self.lo.x.min(p.x), self.lo.y.min(p.y));
        self.hi = Point2::new(self.hi.x.max(p.x), self.hi.y.max(p.y));
    }

    fn add_outline(&mut self, o: &Outline) {
        for p in o.polygonize(0.01) {
            self.add(p);
        }
        for k in 0..4 {
            self.add(o.support(Point2::polar(k as f64 * std::f64::consts::FRAC_PI_2)).1);
        }
    }
}

/// Figure of `body`, optionally with its diameter segments and a partition.
pub fn render(body: &ConvexBody, analysis: Option<&BorsukAnalysis>, partition: Option<&Partition>) -> String {
    let outline = body.outline();
    let mut bounds = Bounds::new();
    bounds.add_outline(&outline);
    let hexagon = partition.and_then(|p| p.hexagon);
    if let Some(hex) = &hexagon {
        for v in hex.vertices() {
            bounds.add(v);
        }
    }
    let extent = (bounds.hi.x - bounds.lo.x).max(bounds.hi.y - bounds.lo.y);
    let margin = 0.05 * extent;
    let (x0, y0) = (bounds.lo.x - margin, -bounds.hi.y - margin);
    let (w, h) = (bounds.hi.x - bounds.lo.x + 2.0 * margin, bounds.hi.y - bounds.lo.y + 2.0 * margin);
    let stroke = fmt(0.004 * extent);

    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" viewBox="{} {} {} {}" width="640" height="{}">"#,
        fmt(x0),
        fmt(y0),
        fmt(w),
        fmt(h),
        (640.0 * h / w).round()
    );

    if let Some(part) = partition {
        s.push_str("<g id=\"pieces\">\n");
        for (i, piece) in part.pieces.iter().enumerate() {
            let attrs = format!(
                r##"fill="{}" stroke="#555555" stroke-width="{stroke}" stroke-linejoin="round""##,
                PIECE_FILLS[i % PIECE_FILLS.len()]
            );
            let _ = writeln!(s, "{}", shape_element(&piece.outline(), &attrs));
        }
        s.push_str("</g>\n");
    }

    let _ = writeln!(
        s,
        "{}",
        shape_element(
            &outline,
            &format!(
                r#"id="body" fill="none" stroke="{OUTLINE_COLOR}" stroke-width="{stroke}" stroke-linejoin="round""#
            )
        )
    );

    if let Some(part) = partition {
        s.push_str("<g id=\"construction\">\n");
        let dash = fmt(0.02 * extent);
        if let Some(c) = part.chord {
            let _ = writeln!(
                s,
                r#"<line x1="{}" y1="{}" x2="{}" y2="{}" stroke="{CONSTRUCTION_COLOR}" stroke-width="{stroke}" stroke-dasharray="{dash}"/>"#,
                fmt(c.a.x),
                fmt(-c.a.y),
                fmt(c.b.x),
                fmt(-c.b.y)
            );
        }
        if let Some(hex) = &hexagon {
            let pts: Vec<String> = hex.vertices().iter().map(|&v| format!("{},{}", fmt(v.x), fmt(-v.y))).collect();
            let _ = writeln!(
                s,
                r#"<polygon points="{}" fill="none" stroke="{CONSTRUCTION_COLOR}" stroke-width="{stroke}" stroke-dasharray="{dash}"/>"#,
                pts.join(" ")
            );
            let m = hex.side_midpoints();
            for k in [0, 2, 4] {
                let _ = writeln!(
                    s,
                    r#"<line x1="{}" y1="{}" x2="{}" y2="{}" stroke="{CONSTRUCTION_COLOR}" stroke-width="{stroke}" stroke-dasharray="{dash}"/>"#,
                    fmt(hex.center.x),
                    fmt(-hex.center.y),
                    fmt(m[k].x),
                    fmt(-m[k].y)
                );
            }
        }
        s.push_str("</g>\n");
    }

    if let Some(an) = analysis {
        s.push_str("<g id=\"diameters\">\n");
        for c in an.pairs.representative_chords(&an.outline, FAMILY_SAMPLES) {
            let _ = writeln!(
                s,
                r#"<line x1="{}" y1="{}" x2="{}" y2="{}" stroke="{DIAMETER_COLOR}" stroke-width="{stroke}"/>"#,
                fmt(c.a.x),
                fmt(-c.a.y),
                fmt(c.b.x),
                fmt(-c.b.y)
            );
        }
        s.push_str("</g>\n");
    }
    s.push_str("</svg>\n");
    s
}
