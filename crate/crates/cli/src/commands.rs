use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use borsuk_core::gallery::{gallery, named_shape, GalleryError, GalleryShape};
use borsuk_core::geometry::ConvexBody;
use borsuk_core::oracle::{cross_check, OracleError};
use borsuk_core::partition::{verify_pieces, Partition, VerificationReport};
use borsuk_core::report::{analyze_body, Analysis, AnalysisError, AnalysisOptions};
use borsuk_core::svg::render;
use rayon::prelude::*;
use serde::Serialize;

use crate::io::{emit, read_body, read_pieces, to_json, write_text, CliError};
use crate::Tuning;

impl From<AnalysisError> for CliError {
    fn from(e: AnalysisError) -> Self {
        match e {
            AnalysisError::Partition(e) => CliError::Verification(e.to_string()),
            other => CliError::Schema(other.to_string()),
        }
    }
}

impl From<OracleError> for CliError {
    fn from(e: OracleError) -> Self {
        CliError::Schema(e.to_string())
    }
}

impl From<GalleryError> for CliError {
    fn from(e: GalleryError) -> Self {
        match e {
            GalleryError::InvalidParameters(m) => CliError::Schema(m),
            GalleryError::Geometry(g) => CliError::Invalid(g.to_string()),
        }
    }
}

fn options(tuning: &Tuning, oracle: bool, timings: bool) -> AnalysisOptions {
    AnalysisOptions {
        eps_rel: tuning.eps,
        samples: tuning.samples,
        partition: true,
        oracle: oracle.then(|| tuning.oracle()),
        timings,
    }
}

fn figure(body: &ConvexBody, out: &Analysis) -> String {
    render(body, Some(&out.analysis), out.partition.as_ref())
}

/// Exit status implied by a finished analysis.
fn outcome(out: &Analysis) -> Result<(), CliError> {
    if let Some(v) = &out.verification {
        if !v.pass {
            return Err(CliError::Verification(format!(
                "partition margin {:e}, area deficit {:e}",
                v.margin, v.area_deficit
            )));
        }
    }
    if let Some(o) = &out.report.oracle {
        if o.is_hard_failure() {
            return Err(CliError::Oracle(format!("grid found a two-piece division of an alpha {} body", o.alpha)));
        }
    }
    Ok(())
}

pub fn analyze(
    input: &Path,
    tuning: &Tuning,
    out: Option<&Path>,
    svg: Option<&Path>,
    graph: Option<&Path>,
    oracle: bool,
    timings: bool,
) -> Result<(), CliError> {
    let body = read_body(input)?;
    let result = analyze_body(&body, &options(tuning, oracle, timings))?;
    emit(out, &to_json(&result.report))?;
    if let Some(p) = svg {
        write_text(p, &figure(&body, &result))?;
    }
    if let Some(p) = graph {
        write_text(p, &to_json(&result.analysis.graph))?;
    }
    outcome(&result)
}

#[derive(Serialize)]
struct PartitionOutput<'a> {
    partition: &'a Partition,
    verification: &'a VerificationReport,
}

pub fn partition(input: &Path, tuning: &Tuning, out: Option<&Path>, svg: Option<&Path>) -> Result<(), CliError> {
    let body = read_body(input)?;
    let result = analyze_body(&body, &options(tuning, false, false))?;
    let (Some(part), Some(ver)) = (&result.partition, &result.verification) else {
        unreachable!("partition requested");
    };
    emit(out, &to_json(&PartitionOutput { partition: part, verification: ver }))?;
    if let Some(p) = svg {
        write_text(p, &figure(&body, &result))?;
    }
    outcome(&result)
}

/// File stem for a gallery shape, e.g. `reuleaux5` or `square`.
fn stem(shape: &GalleryShape) -> String {
    match shape.parameters.get("n") {
        Some(n) if shape.name != "random" && shape.name != "symmetric" => format!("{}{}", shape.name, n),
        _ => shape.name.clone(),
    }
}

pub fn generate(
    name: &str,
    params: &BTreeMap<String, f64>,
    out: Option<&Path>,
    svg: Option<&Path>,
) -> Result<(), CliError> {
    if name == "gallery" {
        let dir = out.ok_or_else(|| CliError::Schema("generate gallery needs --out DIR".into()))?;
        fs::create_dir_all(dir).map_err(|e| CliError::Io(format!("{}: {e}", dir.display())))?;
        for shape in gallery() {
            write_text(&dir.join(format!("{}.json", stem(&shape))), &to_json(&shape.body))?;
        }
        return Ok(());
    }
    let shape = named_shape(name, params)?;
    emit(out, &to_json(&shape.body))?;
    if let Some(p) = svg {
        write_text(p, &render(&shape.body, None, None))?;
    }
    Ok(())
}

pub fn oracle(input: &Path, tuning: &Tuning, out: Option<&Path>) -> Result<(), CliError> {
    let body = read_body(input)?;
    let report = cross_check(&body, &tuning.oracle())?;
    emit(out, &to_json(&report))?;
    if report.is_hard_failure() {
        return Err(CliError::Oracle(format!("grid found a two-piece division of an alpha {} body", report.alpha)));
    }
    Ok(())
}

pub fn verify(body_path: &Path, partition_path: &Path, tuning: &Tuning, out: Option<&Path>) -> Result<(), CliError> {
    let body = read_body(body_path)?;
    let pieces = read_pieces(partition_path)?;
    let report = verify_pieces(&body, &pieces, tuning.samples).map_err(|e| CliError::Schema(e.to_string()))?;
    emit(out, &to_json(&report))?;
    if !report.pass {
        return Err(CliError::Verification(format!(
            "margin {:e}, area deficit {:e}, overlap {:e}, convex {:?}",
            report.margin, report.area_deficit, report.max_overlap, report.convex
        )));
    }
    Ok(())
}

#[derive(Serialize)]
struct BatchEntry {
    file: String,
    exit_code: u8,
    #[serde(skip_serializing_if = "Option::is_none")]
    alpha: Option<u8>,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<String>,
}

fn batch_one(path: &Path, tuning: &Tuning, out: Option<&Path>, svg: bool, oracle: bool) -> Result<u8, CliError> {
    let body = read_body(path)?;
    let result = analyze_body(&body, &options(tuning, oracle, false))?;
    if let Some(dir) = out {
        let name = path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
        write_text(&dir.join(format!("{name}.report.json")), &to_json(&result.report))?;
        if svg {
            write_text(&dir.join(format!("{name}.svg")), &figure(&body, &result))?;
        }
    }
    outcome(&result).map(|()| result.report.alpha)
}

pub fn batch(dir: &Path, tuning: &Tuning, out: Option<&Path>, svg: bool, oracle: bool) -> Result<(), CliError> {
    let listing = fs::read_dir(dir).map_err(|e| CliError::Io(format!("{}: {e}", dir.display())))?;
    let mut files: Vec<PathBuf> = listing
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.is_file() && p.extension().is_some_and(|x| x == "json"))
        .collect();
    files.sort();
    if let Some(o) = out {
        fs::create_dir_all(o).map_err(|e| CliError::Io(format!("{}: {e}", o.display())))?;
    }

    let entries: Vec<BatchEntry> = files
        .par_iter()
        .map(|path| {
            let file = path.file_name().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
            let run = std::panic::catch_unwind(|| batch_one(path, tuning, out, svg, oracle));
            match run {
                Ok(Ok(alpha)) => BatchEntry { file, exit_code: 0, alpha: Some(alpha), error: None },
                Ok(Err(e)) => BatchEntry { file, exit_code: e.code(), alpha: None, error: Some(e.to_string()) },
                Err(_) => BatchEntry { file, exit_code: 101, alpha: None, error: Some("internal error".into()) },
            }
        })
        .collect();

    print!("{}", to_json(&entries));
    let failed: Vec<&BatchEntry> = entries.iter().filter(|e| e.exit_code != 0).collect();
    match failed.iter().map(|e| e.exit_code).max() {
        None => Ok(()),
        Some(code) => {
            let msg = format!("{} of {} files failed", failed.len(), entries.len());
            Err(match code {
                2 => CliError::Schema(msg),
                3 => CliError::Invalid(msg),
                4 => CliError::Verification(msg),
                5 => CliError::Oracle(msg),
                _ => CliError::Io(msg),
            })
        }
    }
}
