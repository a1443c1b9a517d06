use std::fmt::Write as _;
use std::fs;
use std::io::{BufWriter, Write};
use std::path::Path;

use anyhow::{Context, Result};
use lefschetz_core::classify::{csm_decomposition, Presentation, VerdictDetails};
use lefschetz_core::oracle::{lefschetz_report_with, GradedBasis, LinearForm};
use lefschetz_core::parse::parse_ideal_with_vars;
use lefschetz_core::verify::{cross_verify, Grid, VerifyOptions};
use lefschetz_core::{
    classify, render_ideal, Error, Execution, HilbertSeries, MaciSpec, MonomialIdeal,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::args::{Cli, Command, Format, GlobalOpts};
use crate::survey::{write_csv, write_json, Summary, SurveyFile, SurveyRow};

pub const EXIT_OK: u8 = 0;
pub const EXIT_USAGE: u8 = 1;
pub const EXIT_HYPOTHESIS: u8 = 2;
pub const EXIT_DISCREPANCY: u8 = 3;

/// What a command prints and the exit status it asks for.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub text: String,
    pub code: u8,
}

impl Output {
    fn ok(text: String) -> Self {
        Output {
            text,
            code: EXIT_OK,
        }
    }
}

pub fn exit_code_for(err: &anyhow::Error) -> u8 {
    match err.downcast_ref::<Error>() {
        Some(Error::HypothesisViolation(_)) => EXIT_HYPOTHESIS,
        _ => EXIT_USAGE,
    }
}

pub fn run(cli: &Cli) -> Result<Output> {
    let g = &cli.global;
    match &cli.command {
        Command::Hilbert { ideal } => hilbert(g, &parse(g, ideal)?),
        Command::Check {
            wlp,
            slp,
            dump_matrices,
            ideal,
        } => {
            let ideal = parse(g, ideal)?;
            if let Some(path) = dump_matrices {
                dump(&ideal, &linear_form(g, ideal.num_vars()), path)?;
            }
            // neither flag means both
            check(g, &ideal, *wlp || !*slp, *slp || !*wlp)
        }
        Command::Classify { ideal } => classify_cmd(g, &parse(g, ideal)?),
        Command::Csm { var, ideal } => csm(g, &parse(g, ideal)?, *var),
        Command::Survey { grid, out, format } => survey(g, grid, out, *format),
    }
}

/// Generator list, or a MACI given as `{"n": .., "a": [..], "m": [..]}`.
fn parse(g: &GlobalOpts, text: &str) -> Result<MonomialIdeal> {
    if text.trim_start().starts_with('{') {
        let spec: MaciSpec = serde_json::from_str(text).context("malformed MACI JSON")?;
        return Ok(spec.to_ideal());
    }
    Ok(parse_ideal_with_vars(text, g.vars)?)
}

fn linear_form(g: &GlobalOpts, n: usize) -> LinearForm {
    match g.random_form {
        None => LinearForm::AllOnes,
        Some(seed) => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            LinearForm::Coefficients((0..n).map(|_| rng.gen_range(1..=20)).collect())
        }
    }
}

fn to_json(v: &impl serde::Serialize) -> Result<String> {
    Ok(serde_json::to_string_pretty(v)? + "\n")
}

fn comma_list(hs: &HilbertSeries) -> String {
    hs.coeffs()
        .iter()
        .map(u64::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

fn pairs(ws: impl Iterator<Item = (usize, usize)>) -> String {
    let s: Vec<String> = ws.map(|(i, t)| format!("({i},{t})")).collect();
    if s.is_empty() {
        "none".into()
    } else {
        s.join(" ")
    }
}

fn hilbert(g: &GlobalOpts, ideal: &MonomialIdeal) -> Result<Output> {
    let hs = lefschetz_core::hilbert_series(ideal)?;
    if g.json {
        return Ok(Output::ok(to_json(&json!({
            "ideal": render_ideal(ideal),
            "hs": hs,
            "socle_degree": hs.socle_degree(),
            "total_dimension": hs.total_dimension(),
        }))?));
    }
    let mut s = String::new();
    writeln!(s, "{hs}")?;
    writeln!(s, "coefficients: {}", comma_list(&hs))?;
    if let Some(d) = hs.socle_degree() {
        writeln!(s, "socle degree: {d}")?;
    }
    writeln!(s, "dimension: {}", hs.total_dimension())?;
    Ok(Output::ok(s))
}

fn check(g: &GlobalOpts, ideal: &MonomialIdeal, wlp: bool, slp: bool) -> Result<Output> {
    let form = linear_form(g, ideal.num_vars());
    let report = lefschetz_report_with(ideal, &form, Execution::Parallel)?;
    if g.json {
        return Ok(Output::ok(to_json(&report)?));
    }
    let mut s = String::new();
    if let LinearForm::Coefficients(c) = &form {
        writeln!(s, "linear form coefficients: {c:?}")?;
    }
    writeln!(s, "hilbert series: {}", comma_list(&report.hs))?;
    if wlp {
        writeln!(s, "wlp: {}", report.wlp)?;
        writeln!(s, "wlp witnesses: {}", pairs(report.wlp_witnesses()))?;
    }
    if slp {
        writeln!(s, "slp: {}", report.slp)?;
        writeln!(
            s,
            "slp witnesses: {}",
            pairs(report.witnesses.iter().copied())
        )?;
    }
    Ok(Output::ok(s))
}

fn dump(ideal: &MonomialIdeal, form: &LinearForm, path: &Path) -> Result<()> {
    let basis = GradedBasis::new(ideal)?;
    let file =
        fs::File::create(path).with_context(|| format!("cannot create {}", path.display()))?;
    let mut w = BufWriter::new(file);
    let top = basis.socle_degree().unwrap_or(0);
    for i in 0..top {
        for t in 1..=top - i {
            let m = basis.multiplication_matrix(form, i, t)?;
            writeln!(w, "# i={i} t={t} rows={} cols={}", m.rows(), m.cols())?;
            write!(w, "{m}")?;
        }
    }
    w.flush()?;
    Ok(())
}

fn classify_cmd(g: &GlobalOpts, ideal: &MonomialIdeal) -> Result<Output> {
    let spec = MaciSpec::from_ideal(ideal)?;
    let verdict = classify(&spec)?;
    let oracle = if verdict.slp.is_none() {
        let report = lefschetz_report_with(ideal, &linear_form(g, spec.n()), Execution::Parallel)?;
        Some(json!({ "wlp": report.wlp, "slp": report.slp, "witnesses": report.witnesses }))
    } else {
        None
    };
    if g.json {
        return Ok(Output::ok(to_json(&json!({
            "spec": spec,
            "verdict": verdict,
            "oracle": oracle,
        }))?));
    }

    let mut s = String::new();
    writeln!(s, "ideal: {spec}")?;
    writeln!(
        s,
        "rule: {}",
        serde_json::to_value(verdict.rule_fired)?
            .as_str()
            .unwrap_or("?")
    )?;
    match verdict.slp {
        Some(slp) => writeln!(s, "slp: {slp}")?,
        None => writeln!(s, "slp: no rule applies")?,
    }
    match &verdict.details {
        VerdictDetails::SupportTwo(d) => {
            writeln!(
                s,
                "normalized: x{} -> x1, x{} -> x2 (swapped: {})",
                d.pair[0], d.pair[1], d.swapped
            )?;
            writeln!(
                s,
                "a1={} a2={} alpha={} beta={}",
                d.a1, d.a2, d.alpha, d.beta
            )?;
            writeln!(
                s,
                "other exponents: {:?} (effective n = {})",
                d.others, d.effective_n
            )?;
            writeln!(
                s,
                "two-variable series almost centered: {}",
                d.almost_centered
            )?;
            writeln!(
                s,
                "explicit conditions: {} (a2 < a1+beta+2: {}, a1 = alpha+1: {}, beta = 1: {}, a2 >= a1+beta-1: {})",
                d.explicit.holds(),
                d.explicit.bounded,
                d.explicit.a1_is_alpha_plus_one,
                d.explicit.beta_is_one,
                d.explicit.a2_large
            )?;
        }
        VerdictDetails::Symmetric { order, certificate } => {
            writeln!(s, "witness order: {order:?}")?;
            writeln!(
                s,
                "reflecting degree: {}",
                certificate.reflecting_degree.as_f64()
            )?;
        }
        VerdictDetails::None => {}
    }
    if let Some(o) = oracle {
        writeln!(s, "oracle wlp: {}", o["wlp"])?;
        writeln!(s, "oracle slp: {}", o["slp"])?;
    }
    Ok(Output::ok(s))
}

fn presentation(p: &Presentation) -> String {
    match p {
        Presentation::Maci(spec) => format!("MACI {spec}"),
        Presentation::CompleteIntersection(a) => format!("CI {a:?}"),
    }
}

fn csm(g: &GlobalOpts, ideal: &MonomialIdeal, var: usize) -> Result<Output> {
    let spec = MaciSpec::from_ideal(ideal)?;
    if var == 0 {
        return Err(Error::InvalidArgument("variables are numbered from 1".into()).into());
    }
    let d = csm_decomposition(&spec, var - 1)?;
    let total = d.total_series();
    let hs = spec.hilbert_series();
    let holds = total == hs;
    let out = if g.json {
        to_json(&json!({
            "spec": spec,
            "decomposition": d,
            "hs": hs,
            "sum_of_widened_pieces": total,
            "identity_holds": holds,
        }))?
    } else {
        let mut s = String::new();
        writeln!(s, "ideal: {spec}")?;
        writeln!(s, "variable: x{var}")?;
        for (k, piece) in d.pieces.iter().enumerate() {
            writeln!(
                s,
                "piece {}: {} | shift {} | multiplier {} | series {}",
                k + 1,
                presentation(&piece.quotient),
                piece.shift,
                piece.multiplier,
                piece.series()
            )?;
        }
        writeln!(s, "hilbert series: {hs}")?;
        writeln!(s, "identity holds: {holds}")?;
        s
    };
    if !holds {
        return Err(Error::HypothesisViolation(format!(
            "central simple modules sum to {total}, not {hs}"
        ))
        .into());
    }
    Ok(Output::ok(out))
}

fn read_grid(arg: &str) -> Result<Grid> {
    let text = if arg.trim_start().starts_with('{') {
        arg.to_owned()
    } else {
        fs::read_to_string(arg).with_context(|| format!("cannot read grid file {arg}"))?
    };
    serde_json::from_str(&text).context("malformed grid")
}

fn survey(g: &GlobalOpts, grid: &str, out: &Path, format: Format) -> Result<Output> {
    let grid = read_grid(grid)?;
    let opts = VerifyOptions {
        execution: Execution::Parallel,
        form: linear_form(g, grid.n[1]),
    };
    let report = cross_verify(&grid, &opts)?;
    let rows: Vec<SurveyRow> = report.cases.iter().map(SurveyRow::from).collect();
    let summary = Summary::of(&report);
    match format {
        Format::Csv => write_csv(out, &rows)?,
        Format::Json => write_json(out, &SurveyFile { rows, summary })?,
    }

    let text = if g.json {
        to_json(&json!({ "summary": summary, "discrepancies": report.discrepancies }))?
    } else {
        let mut s = String::new();
        for d in &report.discrepancies {
            writeln!(s, "discrepancy: {} ({})", d.spec, d.message)?;
        }
        writeln!(
            s,
            "cases: {}  classified: {}  agreements: {}  discrepancies: {}",
            summary.cases, summary.classified, summary.agreements, summary.discrepancies
        )?;
        s
    };
    let code = if summary.discrepancies > 0 {
        EXIT_DISCREPANCY
    } else {
        EXIT_OK
    };
    Ok(Output { text, code })
}
