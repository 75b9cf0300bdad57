//! Diameter graph at the granularity of vertex classes.
//!
//! Classes are isolated boundary points or open boundary arcs (closed only
//! for the full circle of a disc). An arc realized by a fan or an antipodal
//! family stays one class; a point sitting exactly at an arc end stays a
//! separate point class, so closures of neighbouring classes may touch.

use std::collections::{BTreeMap, VecDeque};

use serde::{Deserialize, Serialize};

use crate::diameter::{diameter_pairs_of, BoundaryPoint, DiameterFamily, DiameterPairs};
use crate::geometry::{Chord, ConvexBody, Point2};

/// Smallest usable gap between neighbouring classes, as a fraction of the perimeter.
pub const MIN_GAP: f64 = 1e-6;

/// Parameters closer than this are the same boundary point.
const SAME_T: f64 = 1e-12;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum VertexClass {
    IsolatedPoint { p: Point2, t: f64 },
    BoundaryArc { t_start: f64, t_end: f64, closed: bool },
}

impl VertexClass {
    /// Closure as a parameter interval `[start, end]` (end may exceed 1 only for the full circle).
    pub fn closure(&self) -> (f64, f64) {
        match *self {
            VertexClass::IsolatedPoint { t, .. } => (t, t),
            VertexClass::BoundaryArc { t_start, t_end, .. } => (t_start, t_end),
        }
    }

    pub fn is_full_boundary(&self) -> bool {
        matches!(*self, VertexClass::BoundaryArc { t_start, t_end, .. } if t_end - t_start >= 1.0 - SAME_T)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct GraphEdge {
    pub a: usize,
    pub b: usize,
    /// Realizing segment for point-to-point edges.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub chord: Option<Chord>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DiameterGraph {
    pub diameter: f64,
    pub classes: Vec<VertexClass>,
    pub edges: Vec<GraphEdge>,
}

pub fn build_diameter_graph(body: &ConvexBody, eps_rel: f64) -> DiameterGraph {
    let outline = body.outline();
    let pairs = diameter_pairs_of(&outline, eps_rel);
    graph_from_pairs(&pairs)
}

/// Arc interval being assembled, half-open in spirit: `[s, e]` with touching ends kept apart.
#[derive(Clone, Copy, Debug)]
struct Span {
    s: f64,
    e: f64,
}

pub fn graph_from_pairs(pairs: &DiameterPairs) -> DiameterGraph {
    // ---- arcs ----
    let mut spans: Vec<Span> = Vec::new();
    let mut full = false;
    for fam in &pairs.families {
        match *fam {
            DiameterFamily::Fan { t_start, t_end, .. } => spans.push(Span { s: t_start, e: t_end }),
            DiameterFamily::Antipodal { first, second, .. } => {
                for (s, e) in [first, second] {
                    if e - s >= 1.0 - SAME_T {
                        full = true;
                    } else {
                        push_wrapped(&mut spans, s, e);
                    }
                }
            }
        }
    }
    if full {
        return DiameterGraph {
            diameter: pairs.diameter,
            classes: vec![VertexClass::BoundaryArc { t_start: 0.0, t_end: 1.0, closed: true }],
            edges: vec![GraphEdge { a: 0, b: 0, chord: None }],
        };
    }
    spans.sort_by(|a, b| a.s.total_cmp(&b.s));
    let mut arcs: Vec<Span> = Vec::new();
    for sp in spans {
        match arcs.last_mut() {
            Some(last) if sp.s < last.e - SAME_T => last.e = last.e.max(sp.e),
            _ => arcs.push(sp),
        }
    }

    // ---- points ----
    let mut points: Vec<BoundaryPoint> = Vec::new();
    for (a, b) in &pairs.chords {
        points.push(*a);
        points.push(*b);
    }
    for fam in &pairs.families {
        if let DiameterFamily::Fan { apex, .. } = fam {
            points.push(*apex);
        }
    }
    for p in &mut points {
        p.t = p.t.rem_euclid(1.0);
        if p.t >= 1.0 - SAME_T {
            p.t = 0.0;
        }
    }
    points.sort_by(|a, b| a.t.total_cmp(&b.t));
    points.dedup_by(|a, b| (a.t - b.t).abs() <= SAME_T);
    if points.len() > 1 && (points[0].t + 1.0 - points.last().unwrap().t) <= SAME_T {
        points.pop();
    }

    // ---- classes in circular order ----
    enum Key {
        Point(usize),
        Arc(usize),
    }
    let mut keyed: Vec<(f64, Key)> = Vec::new();
    for (i, a) in arcs.iter().enumerate() {
        keyed.push((a.s, Key::Arc(i)));
    }
    for (i, p) in points.iter().enumerate() {
        if arc_containing(&arcs, p.t).is_none() {
            keyed.push((p.t, Key::Point(i)));
        }
    }
    // points sort before arcs starting at the same parameter
    keyed.sort_by(|a, b| {
        a.0.total_cmp(&b.0).then_with(|| match (&a.1, &b.1) {
            (Key::Point(_), Key::Arc(_)) => std::cmp::Ordering::Less,
            (Key::Arc(_), Key::Point(_)) => std::cmp::Ordering::Greater,
            _ => std::cmp::Ordering::Equal,
        })
    });
    let mut classes = Vec::with_capacity(keyed.len());
    let mut arc_class = vec![usize::MAX; arcs.len()];
    for (_, key) in &keyed {
        match *key {
            Key::Arc(i) => {
                arc_class[i] = classes.len();
                classes.push(VertexClass::BoundaryArc { t_start: arcs[i].s, t_end: arcs[i].e, closed: false });
            }
            Key::Point(i) => classes.push(VertexClass::IsolatedPoint { p: points[i].p, t: points[i].t }),
        }
    }

    let class_of_t = |t: f64| -> usize {
        let t = {
            let r = t.rem_euclid(1.0);
            if r >= 1.0 - SAME_T {
                0.0
            } else {
                r
            }
        };
        if let Some(i) = arc_containing(&arcs, t) {
            return arc_class[i];
        }
        classes
            .iter()
            .position(|c| matches!(*c, VertexClass::IsolatedPoint { t: ct, .. } if circ_dist(ct, t) <= SAME_T))
            .expect("every endpoint has a class")
    };
    let class_of_span = |s: f64| -> usize {
        let mid = s.rem_euclid(1.0);
        arcs.iter()
            .position(|a| mid >= a.s - SAME_T && mid < a.e)
            .map(|i| arc_class[i])
            .expect("family arcs have classes")
    };

    // ---- edges ----
    let mut edges: BTreeMap<(usize, usize), Option<Chord>> = BTreeMap::new();
    let mut add = |a: usize, b: usize, chord: Option<Chord>| {
        let key = (a.min(b), a.max(b));
        edges.entry(key).or_insert(chord);
    };
    for (a, b) in &pairs.chords {
        let (ca, cb) = (class_of_t(a.t), class_of_t(b.t));
        add(ca, cb, Chord::new(a.p, b.p).ok());
    }
    for fam in &pairs.families {
        match *fam {
            DiameterFamily::Fan { apex, t_start, t_end, .. } => {
                add(class_of_t(apex.t), class_of_span(0.5 * (t_start + t_end)), None)
            }
            DiameterFamily::Antipodal { first, second, .. } => {
                add(class_of_span(0.5 * (first.0 + first.1)), class_of_span(0.5 * (second.0 + second.1)), None)
            }
        }
    }
    DiameterGraph {
        diameter: pairs.diameter,
        classes,
        edges: edges.into_iter().map(|((a, b), chord)| GraphEdge { a, b, chord }).collect(),
    }
}

fn push_wrapped(spans: &mut Vec<Span>, s: f64, e: f64) {
    let s0 = s.rem_euclid(1.0);
    let e0 = s0 + (e - s);
    if e0 > 1.0 + SAME_T {
        spans.push(Span { s: s0, e: 1.0 });
        spans.push(Span { s: 0.0, e: e0 - 1.0 });
    } else {
        spans.push(Span { s: s0, e: e0.min(1.0) });
    }
}

/// Arc whose open interior contains `t`.
fn arc_containing(arcs: &[Span], t: f64) -> Option<usize> {
    arcs.iter().position(|a| t > a.s + SAME_T && t < a.e - SAME_T)
}

fn circ_dist(a: f64, b: f64) -> f64 {
    let d = (a - b).rem_euclid(1.0);
    d.min(1.0 - d)
}

impl DiameterGraph {
    pub fn degree(&self, class: usize) -> usize {
        self.edges.iter().map(|e| (e.a == class) as usize + (e.b == class) as usize).sum()
    }

    /// Gap (in parameter units) from the closure end of class `i` to the closure start of the next class.
    pub fn gap_after(&self, i: usize) -> f64 {
        let k = self.classes.len();
        let (_, e) = self.classes[i].closure();
        let (s, _) = self.classes[(i + 1) % k].closure();
        if i + 1 == k {
            s + 1.0 - e
        } else {
            s - e
        }
    }

    /// True when the closures of the vertex classes cover the whole boundary.
    pub fn closures_cover_boundary(&self) -> bool {
        if self.classes.iter().any(VertexClass::is_full_boundary) {
            return true;
        }
        !self.classes.is_empty() && (0..self.classes.len()).all(|i| self.gap_after(i) <= MIN_GAP)
    }

    /// An odd cycle of length ≥ 3 in the class graph, if the graph (without self-loops) is not bipartite.
    pub fn odd_cycle(&self) -> Option<Vec<usize>> {
        let k = self.classes.len();
        let mut adj = vec![Vec::new(); k];
        for e in &self.edges {
            if e.a != e.b {
                adj[e.a].push(e.b);
                adj[e.b].push(e.a);
            }
        }
        let mut color = vec![u8::MAX; k];
        let mut parent = vec![usize::MAX; k];
        let mut depth = vec![0usize; k];
        for root in 0..k {
            if color[root] != u8::MAX {
                continue;
            }
            color[root] = 0;
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                for &v in &adj[u] {
                    if color[v] == u8::MAX {
                        color[v] = 1 - color[u];
                        parent[v] = u;
                        depth[v] = depth[u] + 1;
                        queue.push_back(v);
                    } else if color[v] == color[u] {
                        // climb to the lowest common ancestor
                        let (mut x, mut y) = (u, v);
                        let mut left = vec![x];
                        let mut right = vec![y];
                        while depth[x] > depth[y] {
                            x = parent[x];
                            left.push(x);
                        }
                        while depth[y] > depth[x] {
                            y = parent[y];
                            right.push(y);
                        }
                        while x != y {
                            x = parent[x];
                            y = parent[y];
                            left.push(x);
                            right.push(y);
                        }
                        right.pop();
                        right.reverse();
                        left.extend(right);
                        return Some(left);
                    }
                }
            }
        }
        None
    }

    /// Proper 2-coloring whose colour classes occupy two disjoint closed boundary arcs.
    ///
    /// Among all admissible splits the one maximizing the smaller gap arc wins;
    /// ties go to the split found last.
    pub fn separated_coloring(&self) -> Option<SeparatedColoring> {
        let k = self.classes.len();
        if k < 2 || self.closures_cover_boundary() {
            return None;
        }
        if self.edges.iter().any(|e| e.a == e.b) {
            return None;
        }
        let gaps: Vec<f64> = (0..k).map(|i| self.gap_after(i)).collect();
        let valid: Vec<bool> = gaps.iter().map(|&g| g > MIN_GAP).collect();

        // Cut p sits between class p and p+1. An edge (a, b), a < b, is proper
        // iff exactly one of the two cuts lies in [a, b-1].
        let mut best: Option<(f64, usize, usize)> = None;
        let mut forbid = vec![0i32; k + 1];
        for i in 0..k {
            if !valid[i] {
                continue;
            }
            forbid.iter_mut().for_each(|f| *f = 0);
            let (mut lo, mut hi) = (i + 1, k - 1);
            for e in &self.edges {
                let (a, b) = (e.a.min(e.b), e.a.max(e.b));
                if a <= i && i < b {
                    forbid[a] += 1;
                    forbid[b] -= 1;
                } else {
                    lo = lo.max(a);
                    hi = hi.min(b - 1);
                }
            }
            if lo > hi {
                continue;
            }
            let mut run = 0;
            for j in 0..=hi {
                run += forbid[j];
                if j < lo || run > 0 || !valid[j] {
                    continue;
                }
                let score = gaps[i].min(gaps[j]);
                if best.is_none_or(|(b, _, _)| score >= b - 1e-12) {
                    best = Some((score, i, j));
                }
            }
        }
        let (_, i, j) = best?;
        let colors = (0..k).map(|c| if c > i && c <= j { Color::Red } else { Color::Blue }).collect();
        let span = |from: usize, to: usize| {
            let s = self.classes[from].closure().0;
            let e = self.classes[to].closure().1;
            (s.rem_euclid(1.0), e.rem_euclid(1.0))
        };
        let gap = |c: usize| {
            let e = self.classes[c].closure().1;
            (e.rem_euclid(1.0), (e + gaps[c]).rem_euclid(1.0))
        };
        Some(SeparatedColoring {
            red: span((i + 1) % k, j),
            blue: span((j + 1) % k, i),
            gaps: [gap(i), gap(j)],
            colors,
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Color {
    Red,
    Blue,
}

/// Two-coloring with colour classes in disjoint closed arcs.
/// Intervals are circular `(start, end)` parameter pairs read counterclockwise.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SeparatedColoring {
    pub red: (f64, f64),
    pub blue: (f64, f64),
    pub gaps: [(f64, f64); 2],
    pub colors: Vec<Color>,
}

impl SeparatedColoring {
    /// Midpoint parameter of each gap arc.
    pub fn gap_midpoints(&self) -> [f64; 2] {
        self.gaps.map(|(s, e)| {
            let len = (e - s).rem_euclid(1.0);
            (s + 0.5 * len).rem_euclid(1.0)
        })
    }
}

/// Finite-class entry point matching the decision procedure.
pub fn is_bipartite_with_separation(graph: &DiameterGraph) -> Option<SeparatedColoring> {
    graph.separated_coloring()
}
