//! Survey rows and their CSV and JSON files.

use std::fs::File;
use std::io::{BufReader, BufWriter, Write};
use std::path::Path;

use anyhow::{bail, Context, Result};
use lefschetz_core::verify::{CaseResult, CrossReport};
use lefschetz_core::MaciSpec;
use serde::{Deserialize, Serialize};

pub const CSV_HEADER: [&str; 10] = [
    "n",
    "a",
    "m",
    "symmetric",
    "almost_centered",
    "wlp",
    "slp",
    "slp_predicted",
    "agreement",
    "ms",
];

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SurveyRow {
    pub spec: MaciSpec,
    pub hs_symmetric: bool,
    pub almost_centered: bool,
    pub wlp: bool,
    pub slp: bool,
    pub slp_predicted: Option<bool>,
    pub agreement: Option<bool>,
    pub wall_time_ms: f64,
}

impl From<&CaseResult> for SurveyRow {
    fn from(c: &CaseResult) -> Self {
        SurveyRow {
            spec: c.spec.clone(),
            hs_symmetric: c.hs_symmetric,
            almost_centered: c.almost_centered,
            wlp: c.wlp,
            slp: c.slp,
            slp_predicted: c.slp_predicted,
            agreement: c.agreement,
            wall_time_ms: c.wall_time_ms,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub cases: usize,
    pub classified: usize,
    pub agreements: usize,
    pub discrepancies: usize,
}

impl Summary {
    pub fn of(report: &CrossReport) -> Self {
        Summary {
            cases: report.cases.len(),
            classified: report
                .cases
                .iter()
                .filter(|c| c.slp_predicted.is_some())
                .count(),
            agreements: report
                .cases
                .iter()
                .filter(|c| c.agreement == Some(true))
                .count(),
            discrepancies: report.discrepancies.len(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SurveyFile {
    pub rows: Vec<SurveyRow>,
    pub summary: Summary,
}

fn join(v: &[u32]) -> String {
    v.iter().map(u32::to_string).collect::<Vec<_>>().join(" ")
}

fn opt(b: Option<bool>) -> String {
    b.map(|b| b.to_string()).unwrap_or_default()
}

pub fn write_csv(path: &Path, rows: &[SurveyRow]) -> Result<()> {
    let file = File::create(path).with_context(|| format!("cannot create {}", path.display()))?;
    let mut w = csv::Writer::from_writer(BufWriter::new(file));
    w.write_record(CSV_HEADER)?;
    for r in rows {
        w.write_record([
            r.spec.n().to_string(),
            join(r.spec.a()),
            join(r.spec.p()),
            r.hs_symmetric.to_string(),
            r.almost_centered.to_string(),
            r.wlp.to_string(),
            r.slp.to_string(),
            opt(r.slp_predicted),
            opt(r.agreement),
            r.wall_time_ms.to_string(),
        ])?;
    }
    w.flush()?;
    Ok(())
}

pub fn read_csv(path: &Path) -> Result<Vec<SurveyRow>> {
    let mut r =
        csv::Reader::from_path(path).with_context(|| format!("cannot read {}", path.display()))?;
    if r.headers()?.iter().ne(CSV_HEADER) {
        bail!("unexpected CSV header in {}", path.display());
    }
    let split =
        |s: &str| -> Result<Vec<u32>> { s.split_whitespace().map(|x| Ok(x.parse()?)).collect() };
    let flag = |s: &str| -> Result<bool> { Ok(s.parse()?) };
    let opt_flag = |s: &str| -> Result<Option<bool>> {
        if s.is_empty() {
            Ok(None)
        } else {
            flag(s).map(Some)
        }
    };
    let mut rows = Vec::new();
    for rec in r.records() {
        let rec = rec?;
        let spec = MaciSpec::new(split(&rec[1])?, split(&rec[2])?)?;
        if spec.n() != rec[0].parse::<usize>()? {
            bail!(
                "row {:?}: n does not match the exponent lists",
                rec.position()
            );
        }
        rows.push(SurveyRow {
            spec,
            hs_symmetric: flag(&rec[3])?,
            almost_centered: flag(&rec[4])?,
            wlp: flag(&rec[5])?,
            slp: flag(&rec[6])?,
            slp_predicted: opt_flag(&rec[7])?,
            agreement: opt_flag(&rec[8])?,
            wall_time_ms: rec[9].parse()?,
        });
    }
    Ok(rows)
}

pub fn write_json(path: &Path, file: &SurveyFile) -> Result<()> {
    let f = File::create(path).with_context(|| format!("cannot create {}", path.display()))?;
    let mut w = BufWriter::new(f);
    serde_json::to_writer_pretty(&mut w, file)?;
    writeln!(w)?;
    w.flush()?;
    Ok(())
}

pub fn read_json(path: &Path) -> Result<SurveyFile> {
    let f = File::open(path).with_context(|| format!("cannot read {}", path.display()))?;
    Ok(serde_json::from_reader(BufReader::new(f))?)
}
