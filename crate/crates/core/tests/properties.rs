use std::f64::consts::{FRAC_PI_3, TAU};

use borsuk_core::decision::{analyze, analyze_general, BorsukCertificate, Obstruction};
use borsuk_core::diameter::{diameter, diameter_pairs};
use borsuk_core::gallery::{
    example_pentagon, random_convex_polygon, random_symmetric_polygon, reuleaux_polygon, GalleryError,
};
use borsuk_core::geometry::{
    boundary_param_of, boundary_point_at, clip_halfplane, support_point, symmetry_center, ConvexBody, Disc,
    GeometryError, HalfPlane, Point2,
};
use borsuk_core::graph::{build_diameter_graph, VertexClass};
use borsuk_core::oracle::{brute_alpha2, brute_diameter, OracleConfig};
use borsuk_core::partition::{three_partition, two_partition, verify_partition};
use proptest::prelude::*;

fn polygon(n: usize, seed: u64) -> ConvexBody {
    random_convex_polygon(n, seed).unwrap().into()
}

/// Mixture of polygons, symmetric polygons, Reuleaux polygons and discs.
fn any_body() -> impl Strategy<Value = ConvexBody> {
    prop_oneof![
        4 => (3usize..24, any::<u64>()).prop_map(|(n, s)| polygon(n, s)),
        2 => (2usize..12, any::<u64>()).prop_map(|(h, s)| random_symmetric_polygon(2 * h, s).unwrap().into()),
        1 => (1usize..5, 0.2f64..5.0).prop_map(|(k, w)| reuleaux_polygon(2 * k + 1, w).unwrap().into()),
        1 => (-5.0f64..5.0, -5.0f64..5.0, 0.1f64..3.0).prop_map(|(x, y, r)| Disc::new(Point2::new(x, y), r).unwrap().into()),
    ]
}

fn turns_left(ring: &[Point2], tol: f64) -> bool {
    let n = ring.len();
    (0..n).all(|i| {
        let (a, b, c) = (ring[i], ring[(i + 1) % n], ring[(i + 2) % n]);
        (b - a).cross(c - b) >= -tol
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn clipping_stays_convex(body in any_body(), s in 0.0f64..1.0, phi in 0.0f64..TAU) {
        let o = body.outline();
        let d = o.diameter();
        // line through a point of the diameter witness segment
        let (a, b) = o.diameter_witness();
        let hp = HalfPlane::new(a.lerp(b, s), Point2::polar(phi)).unwrap();
        match clip_halfplane(&body, &hp) {
            Ok(piece) => {
                let po = piece.outline();
                prop_assert!(turns_left(&po.polygonize(0.05), 1e-12 * d * d));
                prop_assert!(piece.area() <= body.area() * (1.0 + 1e-12));
                for q in po.polygonize(0.05) {
                    prop_assert!(hp.eval(q) <= 1e-9 * d);
                }
            }
            Err(e) => prop_assert_eq!(e, GeometryError::EmptyResult),
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn support_point_dominates_boundary(body in any_body()) {
        let o = body.outline();
        let d = o.diameter();
        let samples = o.uniform_points(100, 0.37);
        for k in 0..64 {
            let u = Point2::polar(TAU * k as f64 / 64.0 + 0.01);
            let h = support_point(&body, u).dot(u);
            for p in &samples {
                prop_assert!(h >= p.dot(u) - 1e-12 * d);
            }
        }
    }

    #[test]
    fn boundary_parameter_roundtrip(body in any_body(), offset in 0.0f64..1.0) {
        for k in 0..256 {
            let t = (k as f64 + offset) / 256.0;
            let back = boundary_param_of(&body, boundary_point_at(&body, t)).unwrap();
            let err = (back - t).rem_euclid(1.0).min((t - back).rem_euclid(1.0));
            prop_assert!(err <= 1e-9, "t = {} came back as {}", t, back);
        }
    }

    #[test]
    fn symmetry_center_reflects_onto_itself(h in 2usize..15, seed in any::<u64>(), rot in 0.0f64..TAU) {
        let body: ConvexBody = random_symmetric_polygon(2 * h, seed).unwrap().into();
        let body = body.transformed(rot, 1.0, Point2::new(3.0, -1.0)).unwrap();
        let c = symmetry_center(&body).expect("generated symmetric");
        let d = body.outline().diameter();
        let (ConvexBody::Polygon(p), ConvexBody::Polygon(q)) = (&body, &body.reflected(c).unwrap()) else { unreachable!() };
        for v in q.vertices() {
            let nearest = p.vertices().iter().map(|w| w.dist(*v)).fold(f64::INFINITY, f64::min);
            prop_assert!(nearest <= 1e-9 * d);
        }
    }

    #[test]
    fn symmetric_graph_structure(h in 2usize..20, seed in any::<u64>()) {
        let body: ConvexBody = random_symmetric_polygon(2 * h, seed).unwrap().into();
        let c = symmetry_center(&body).unwrap();
        let g = build_diameter_graph(&body, 1e-9);
        for e in &g.edges {
            let chord = e.chord.expect("polygon edges carry chords");
            prop_assert!(chord.distance_to(c) <= 1e-9 * g.diameter);
        }
        for k in 0..g.classes.len() {
            prop_assert_eq!(g.degree(k), 1);
        }
        prop_assert!(g.odd_cycle().is_none());
        let (sym, gen) = (analyze(&body, 1e-9).unwrap(), analyze_general(&body, 1e-9).unwrap());
        prop_assert_eq!(sym.certificate.alpha(), gen.certificate.alpha());
    }

    #[test]
    fn three_partition_bound(body in any_body()) {
        let part = three_partition(&body).unwrap();
        let d = body.outline().diameter();
        for &pd in &part.piece_diameters {
            prop_assert!(pd <= 3f64.sqrt() / 2.0 * d + 1e-4 * d);
        }
        let rep = verify_partition(&body, &part, 512).unwrap();
        prop_assert!(rep.convex.iter().all(|&c| c));
        prop_assert!(rep.area_deficit <= 1e-6, "deficit {}", rep.area_deficit);
        prop_assert!(rep.max_overlap <= 1e-9, "overlap {}", rep.max_overlap);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn polygon_diameter_matches_brute_force(n in 3usize..=64, seed in any::<u64>()) {
        let body = polygon(n, seed);
        let ConvexBody::Polygon(p) = &body else { unreachable!() };
        let v = p.vertices();
        let brute = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).map(|(i, j)| v[i].dist(v[j])).fold(0.0, f64::max);
        prop_assert_eq!(diameter(&body).0, brute);
    }

    #[test]
    fn diameter_pairs_are_maximal(n in 3usize..=40, seed in any::<u64>()) {
        let body = polygon(n, seed);
        let pairs = diameter_pairs(&body, 1e-9);
        let d = pairs.diameter;
        for c in pairs.chords() {
            prop_assert!((c.length() - d).abs() <= 1e-9 * d);
        }
        let ConvexBody::Polygon(p) = &body else { unreachable!() };
        let v = p.vertices();
        for i in 0..n {
            for j in i + 1..n {
                prop_assert!(v[i].dist(v[j]) < d * (1.0 + 1e-12));
            }
        }
    }

    #[test]
    fn classes_in_circular_order(body in any_body()) {
        let g = build_diameter_graph(&body, 1e-9);
        prop_assert!(g.diameter > 0.0);
        let spans: Vec<(f64, f64)> = g.classes.iter().map(VertexClass::closure).collect();
        // a point may share its parameter with the start of the open arc after it
        for (k, w) in spans.windows(2).enumerate() {
            let point_first = matches!(g.classes[k], VertexClass::IsolatedPoint { .. });
            prop_assert!(w[0].0 < w[1].0 || (w[0].0 == w[1].0 && point_first), "starts {:?}", spans);
            prop_assert!(w[0].1 <= w[1].0 + 1e-12, "overlap {:?}", spans);
        }
        for k in 0..g.classes.len() {
            prop_assert!(g.degree(k) >= 1);
        }
    }

    #[test]
    fn certificates_check_out(body in any_body()) {
        let a = analyze(&body, 1e-9).unwrap();
        let d = a.outline.diameter();
        match &a.certificate {
            BorsukCertificate::Two { chord, .. } => {
                // every diameter segment has its ends strictly on opposite sides of the cut
                let hp = HalfPlane::left_of(chord.a, chord.b).unwrap();
                for c in a.pairs.representative_chords(&a.outline, 8) {
                    let (sa, sb) = (hp.eval(c.a), hp.eval(c.b));
                    prop_assert!(sa * sb < 0.0 && sa.abs().min(sb.abs()) > 1e-9 * d, "{:?} misses {:?}", chord, c);
                }
                let part = two_partition(&body, *chord).unwrap();
                for &pd in &part.piece_diameters {
                    prop_assert!(pd < d);
                }
            }
            BorsukCertificate::Three(Obstruction::OddCycle { classes }) => {
                prop_assert!(classes.len() >= 3 && classes.len() % 2 == 1);
                for w in 0..classes.len() {
                    let (x, y) = (classes[w], classes[(w + 1) % classes.len()]);
                    let edge = a.graph.edges.iter().find(|e| (e.a, e.b) == (x.min(y), x.max(y)));
                    prop_assert!(edge.is_some());
                    if let Some(c) = edge.and_then(|e| e.chord) {
                        prop_assert!((c.length() - d).abs() <= 1e-9 * d);
                    }
                }
            }
            BorsukCertificate::Three(_) => {}
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn oracle_is_a_lower_bound_and_reproducible(body in any_body(), seed in any::<u64>()) {
        let cfg = OracleConfig { boundary_samples: 512, chord_grid: 64, seed, eps_rel: 1e-9 };
        let (bd, _) = brute_diameter(&body, &cfg);
        let d = body.outline().diameter();
        prop_assert!(bd <= d * (1.0 + 1e-14));
        prop_assert_eq!(brute_diameter(&body, &cfg), brute_diameter(&body, &cfg));
        prop_assert_eq!(brute_alpha2(&body, &cfg), brute_alpha2(&body, &cfg));
    }

    #[test]
    fn example_pentagon_is_a_five_cycle(beta in 0.01f64..FRAC_PI_3 - 0.01, gamma in 0.01f64..FRAC_PI_3 - 0.01) {
        match example_pentagon(4.0, beta, gamma) {
            Ok(p) => {
                let g = build_diameter_graph(&p.into(), 1e-9);
                prop_assert_eq!(g.classes.len(), 5);
                prop_assert_eq!(g.edges.len(), 5);
                prop_assert!((0..5).all(|k| g.degree(k) == 2));
                prop_assert_eq!(g.odd_cycle().map(|c| c.len()), Some(5));
            }
            Err(GalleryError::InvalidParameters(_)) => {}
            Err(e) => prop_assert!(false, "{}", e),
        }
    }
}
