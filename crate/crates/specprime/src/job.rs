//! Job files: a list of inputs, the checks to run on them, and where to put
//! the reports.

use std::fs;
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::checks::{all_checks, run_checks, Report, RunConfig};
use crate::dot::{export_dot, SpaceKind};
use crate::input::{Input, InputKind, InputSpec};
use crate::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Dot,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JobSpec {
    pub inputs: Vec<InputSpec>,
    /// Check names; every applicable check when absent.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub checks: Option<Vec<String>>,
    #[serde(default = "default_output")]
    pub output: PathBuf,
    #[serde(default = "default_formats")]
    pub formats: Vec<Format>,
}

fn default_output() -> PathBuf {
    "specprime-out".into()
}

fn default_formats() -> Vec<Format> {
    vec![Format::Json]
}

impl JobSpec {
    pub fn parse(text: &str) -> Result<Self, Error> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn load(path: &Path) -> Result<Self, Error> {
        let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        Self::parse(&text)
    }

    /// The selected check names, validated.
    pub fn check_names(&self) -> Result<Vec<&'static str>, Error> {
        match &self.checks {
            None => Ok(all_checks()),
            Some(names) => names
                .iter()
                .map(|n| all_checks().into_iter().find(|c| c == n).ok_or_else(|| Error::UnknownCheck(n.clone())))
                .collect(),
        }
    }
}

/// The reports of one input and its DOT diagrams.
type InputResult = (Vec<Report>, Vec<(SpaceKind, String)>);

#[derive(Debug, Clone, Default)]
pub struct JobOutcome {
    pub reports: Vec<Report>,
    /// Files written, in write order.
    pub artifacts: Vec<PathBuf>,
}

impl JobOutcome {
    pub fn failures(&self) -> usize {
        self.reports.iter().filter(|r| !r.passed()).count()
    }

    /// 0 when every report passed, 2 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.failures() == 0 {
            0
        } else {
            2
        }
    }
}

/// Lowercase ASCII words of `label` joined by `-`.
pub fn slug(label: &str) -> String {
    let mut out = String::new();
    for ch in label.chars() {
        if ch.is_ascii_alphanumeric() {
            out.push(ch.to_ascii_lowercase());
        } else if !out.is_empty() && !out.ends_with('-') {
            out.push('-');
        }
    }
    while out.ends_with('-') {
        out.pop();
    }
    out
}

fn dot_spaces(kind: InputKind) -> &'static [SpaceKind] {
    match kind {
        InputKind::Ring => &[SpaceKind::Spec, SpaceKind::Sprimes, SpaceKind::Xspace],
        InputKind::Poset => &[SpaceKind::Spec, SpaceKind::Xspace],
        _ => &[],
    }
}

/// Builds every input, then runs the checks in parallel and writes the
/// artifacts. Any input that fails to build aborts the job before a file is
/// written; an empty input list writes nothing.
pub fn run_job(job: &JobSpec, cfg: &RunConfig) -> Result<JobOutcome, Error> {
    let names = job.check_names()?;
    let inputs: Vec<Input> = job
        .inputs
        .iter()
        .enumerate()
        .map(|(i, s)| s.build().map_err(|e| Error::Usage(format!("input {i}: {e}"))))
        .collect::<Result<_, _>>()?;
    if inputs.is_empty() {
        return Ok(JobOutcome::default());
    }
    let want_dot = job.formats.contains(&Format::Dot);
    let want_json = job.formats.contains(&Format::Json);

    let results: Vec<InputResult> = inputs
        .par_iter()
        .map(|input| {
            let reports = run_checks(input, &names, cfg);
            let dots = if want_dot {
                dot_spaces(input.kind())
                    .iter()
                    .map(|&s| (s, export_dot(input, s).expect("space applies to this kind")))
                    .collect()
            } else {
                Vec::new()
            };
            (reports, dots)
        })
        .collect();

    let labels: Vec<String> = inputs.iter().map(Input::label).collect();
    let artifacts = write_artifacts(&job.output, want_json, &labels, &results)?;
    Ok(JobOutcome { reports: results.into_iter().flat_map(|(r, _)| r).collect(), artifacts })
}

/// Per-report JSON files (when `want_json`), a witness file per failed
/// report, the DOT files and `reports.jsonl`, in input order.
fn write_artifacts(
    out: &Path,
    want_json: bool,
    labels: &[String],
    results: &[InputResult],
) -> Result<Vec<PathBuf>, Error> {
    fs::create_dir_all(out).map_err(|e| Error::io(out, e))?;
    let mut artifacts = Vec::new();
    let mut write = |name: String, contents: String| -> Result<(), Error> {
        let path = out.join(name);
        fs::write(&path, contents).map_err(|e| Error::io(&path, e))?;
        artifacts.push(path);
        Ok(())
    };

    let mut lines = String::new();
    for (i, (label, (reports, dots))) in labels.iter().zip(results).enumerate() {
        let stem = format!("{i:04}-{}", slug(label));
        for r in reports {
            lines.push_str(&serde_json::to_string(r).expect("reports serialize"));
            lines.push('\n');
            if want_json {
                write(format!("{stem}-{}.json", r.check), pretty(r))?;
            }
            if let Some(v) = &r.violation {
                let w = json!({ "input": r.input, "check": r.check, "violation": v });
                write(format!("{stem}-{}.witness.json", r.check), pretty(&w))?;
            }
        }
        for (space, text) in dots {
            write(format!("{stem}-{}.dot", space.name()), text.clone())?;
        }
    }
    write("reports.jsonl".into(), lines)?;
    Ok(artifacts)
}

fn pretty<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}
