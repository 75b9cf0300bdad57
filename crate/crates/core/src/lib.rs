//! Diameter graphs, Borsuk numbers and explicit small-diameter partitions of
//! planar convex bodies.

pub mod decision;
pub mod diameter;
pub mod gallery;
pub mod geometry;
pub mod graph;
pub mod oracle;
pub mod partition;
pub mod report;
pub mod svg;

pub use decision::{analyze, borsuk_number, BorsukAnalysis, BorsukCertificate, DecisionError, Obstruction};
pub use diameter::{diameter, diameter_pairs, DiameterPairs};
pub use geometry::{ArcGon, Chord, ConvexBody, ConvexPolygon, Disc, Element, GeometryError, Point2};
pub use graph::{build_diameter_graph, DiameterGraph};
pub use oracle::{cross_check, OracleConfig};
pub use partition::{partition_for, three_partition, two_partition, verify_partition, Partition};
pub use report::{analyze_body, AnalysisOptions, AnalysisReport};
