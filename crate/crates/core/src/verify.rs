//! Parameter grids and the comparison of closed-form verdicts against the
//! rank oracle.

use std::collections::{BTreeMap, HashMap};
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::analysis::{is_almost_centered, is_symmetric};
use crate::classify::{classify, Rule};
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::maci::MaciSpec;
use crate::oracle::{lefschetz_report_with, recursion_full_rank, LinearForm, RecursionVerdict};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    /// extra generator on exactly two variables
    SupportTwo,
    /// palindromic Hilbert series
    Symmetric,
    AllMaci,
}

/// A finite family of almost complete intersections.
///
/// JSON: `{"n": [2, 4], "max_exp": 6, "family": "support_two"}` with optional
/// `"max_socle": 14` and `"extra_exp": {"4": [2, 2]}`, the latter bounding the
/// exponents of variables outside the support of `m` for a given `n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Grid {
    pub n: [usize; 2],
    pub max_exp: u32,
    pub family: Family,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_socle: Option<i64>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub extra_exp: BTreeMap<String, [u32; 2]>,
}

impl Grid {
    pub fn new(n: [usize; 2], max_exp: u32, family: Family) -> Self {
        Grid {
            n,
            max_exp,
            family,
            max_socle: None,
            extra_exp: BTreeMap::new(),
        }
    }

    fn extra_range(&self, n: usize) -> Result<(u32, u32)> {
        match self.extra_exp.get(&n.to_string()) {
            Some(&[lo, hi]) => Ok((lo.max(1), hi.min(self.max_exp))),
            None => Ok((1, self.max_exp)),
        }
    }

    fn validate(&self) -> Result<()> {
        if self.n[1] > crate::parse::MAX_VARS {
            return Err(Error::InvalidArgument(format!(
                "grid allows up to {} variables",
                crate::parse::MAX_VARS
            )));
        }
        for key in self.extra_exp.keys() {
            key.parse::<usize>().map_err(|_| {
                Error::InvalidArgument(format!("extra_exp key {key:?} is not a variable count"))
            })?;
        }
        Ok(())
    }

    /// Every spec in the grid, ordered by `n`, then `a`, then the exponents
    /// of `m`, all lexicographically.
    pub fn specs(&self) -> Result<Vec<MaciSpec>> {
        self.validate()?;
        let mut out = Vec::new();
        for n in self.n[0].max(2)..=self.n[1] {
            let extra = self.extra_range(n)?;
            for_each_vector(n, &|_| 1, &|_| self.max_exp, &mut |a| {
                if !self.a_admissible(a) {
                    return;
                }
                for_each_vector(n, &|_| 0, &|k| a[k] - 1, &mut |p| {
                    if let Some(spec) = self.accept(a, p, extra) {
                        out.push(spec);
                    }
                });
            });
        }
        Ok(out)
    }

    /// Cheap necessary condition on `a` alone.
    fn a_admissible(&self, a: &[u32]) -> bool {
        match self.max_socle {
            // the socle degree is at least the sum of a_i - 1 over all but the largest a_i
            Some(bound) => {
                let sum: i64 = a.iter().map(|&e| e as i64 - 1).sum();
                let max = *a.iter().max().unwrap() as i64 - 1;
                sum - max <= bound
            }
            None => true,
        }
    }

    fn accept(&self, a: &[u32], p: &[u32], extra: (u32, u32)) -> Option<MaciSpec> {
        let support = p.iter().filter(|&&e| e > 0).count();
        if support < 2 {
            return None;
        }
        if a.iter()
            .zip(p)
            .any(|(&ak, &pk)| pk == 0 && !(extra.0..=extra.1).contains(&ak))
        {
            return None;
        }
        if self.family == Family::SupportTwo && support != 2 {
            return None;
        }
        let spec = MaciSpec::new(a.to_vec(), p.to_vec()).ok()?;
        if let Some(bound) = self.max_socle {
            if spec.socle_degree() > bound {
                return None;
            }
        }
        if self.family == Family::Symmetric && !closed_form_is_palindrome(a, p) {
            return None;
        }
        Some(spec)
    }
}

/// Calls `f` on every vector `v` of length `n` with `lo(k) <= v[k] <= hi(k)`,
/// in lexicographic order.
fn for_each_vector(
    n: usize,
    lo: &dyn Fn(usize) -> u32,
    hi: &dyn Fn(usize) -> u32,
    f: &mut dyn FnMut(&[u32]),
) {
    fn rec(
        k: usize,
        v: &mut Vec<u32>,
        lo: &dyn Fn(usize) -> u32,
        hi: &dyn Fn(usize) -> u32,
        f: &mut dyn FnMut(&[u32]),
    ) {
        if k == v.len() {
            f(v);
            return;
        }
        for e in lo(k)..=hi(k) {
            v[k] = e;
            rec(k + 1, v, lo, hi, f);
        }
    }
    rec(0, &mut vec![0; n], lo, hi, f);
}

/// Palindrome test on `prod [a_i] - t^{|p|} prod [a_i - p_i]`.
fn closed_form_is_palindrome(a: &[u32], p: &[u32]) -> bool {
    fn product(exps: impl Iterator<Item = u32>) -> Vec<i64> {
        let mut acc = vec![1i64];
        for e in exps {
            let mut next = vec![0i64; acc.len() + e as usize - 1];
            for (i, &c) in acc.iter().enumerate() {
                for slot in &mut next[i..i + e as usize] {
                    *slot += c;
                }
            }
            acc = next;
        }
        acc
    }
    let mut h = product(a.iter().copied());
    let shift: usize = p.iter().map(|&e| e as usize).sum();
    for (i, c) in product(a.iter().zip(p).map(|(&x, &y)| x - y))
        .into_iter()
        .enumerate()
    {
        h[shift + i] -= c;
    }
    while h.last() == Some(&0) {
        h.pop();
    }
    h.iter().eq(h.iter().rev())
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct VerifyOptions {
    pub execution: Execution,
    pub form: LinearForm,
}

/// Oracle and closed-form results for one spec.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CaseResult {
    pub spec: MaciSpec,
    pub hs_symmetric: bool,
    pub almost_centered: bool,
    pub wlp: bool,
    pub slp: bool,
    pub slp_predicted: Option<bool>,
    pub rule: Rule,
    pub agreement: Option<bool>,
    /// oracle wall time; specs equal up to relabeling share one measurement
    pub wall_time_ms: f64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Discrepancy {
    pub spec: MaciSpec,
    pub rule: Rule,
    pub predicted: Option<bool>,
    pub oracle_slp: bool,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CrossReport {
    pub cases: Vec<CaseResult>,
    pub discrepancies: Vec<Discrepancy>,
}

#[derive(Clone, Copy)]
struct OracleOutcome {
    wlp: bool,
    slp: bool,
    ms: f64,
}

fn run_oracle(spec: &MaciSpec, form: &LinearForm) -> Result<OracleOutcome> {
    let start = Instant::now();
    let report = lefschetz_report_with(&spec.to_ideal(), form, Execution::Sequential)?;
    Ok(OracleOutcome {
        wlp: report.wlp,
        slp: report.slp,
        ms: start.elapsed().as_secs_f64() * 1e3,
    })
}

/// Runs the oracle on every spec of the grid and compares with the
/// classification wherever a rule applies. Output follows grid order.
pub fn cross_verify(grid: &Grid, opts: &VerifyOptions) -> Result<CrossReport> {
    cross_verify_specs(&grid.specs()?, opts)
}

pub fn cross_verify_specs(specs: &[MaciSpec], opts: &VerifyOptions) -> Result<CrossReport> {
    // the all-ones form is symmetric in the variables, so relabeled specs share a verdict
    let key = |s: &MaciSpec| match opts.form {
        LinearForm::AllOnes => s.canonical(),
        LinearForm::Coefficients(_) => s.clone(),
    };
    let mut unique = Vec::new();
    let mut slot: HashMap<MaciSpec, usize> = HashMap::new();
    let keys: Vec<usize> = specs
        .iter()
        .map(|s| {
            let k = key(s);
            *slot.entry(k.clone()).or_insert_with(|| {
                unique.push(k);
                unique.len() - 1
            })
        })
        .collect();

    let oracle = opts
        .execution
        .map(&unique, |s| run_oracle(s, &opts.form))
        .into_iter()
        .collect::<Result<Vec<_>>>()?;
    let classified = opts.execution.map(specs, classify);

    let mut cases = Vec::with_capacity(specs.len());
    let mut discrepancies = Vec::new();
    for ((spec, &k), verdict) in specs.iter().zip(&keys).zip(classified) {
        let o = oracle[k];
        let hs = spec.hilbert_series();
        let (predicted, rule) = match verdict {
            Ok(v) => (v.slp, v.rule_fired),
            Err(Error::HypothesisViolation(message)) => {
                discrepancies.push(Discrepancy {
                    spec: spec.clone(),
                    rule: Rule::SymmetricHs,
                    predicted: None,
                    oracle_slp: o.slp,
                    message,
                });
                (None, Rule::SymmetricHs)
            }
            Err(e) => return Err(e),
        };
        let agreement = predicted.map(|p| p == o.slp);
        if agreement == Some(false) {
            discrepancies.push(Discrepancy {
                spec: spec.clone(),
                rule,
                predicted,
                oracle_slp: o.slp,
                message: format!("rule predicts slp = {}, oracle finds {}", !o.slp, o.slp),
            });
        }
        cases.push(CaseResult {
            spec: spec.clone(),
            hs_symmetric: is_symmetric(&hs),
            almost_centered: is_almost_centered(&hs)?,
            wlp: o.wlp,
            slp: o.slp,
            slp_predicted: predicted,
            rule,
            agreement,
            wall_time_ms: o.ms,
        });
    }
    Ok(CrossReport {
        cases,
        discrepancies,
    })
}

/// A cell where the tensor-product recursion and the oracle disagree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecursionMismatch {
    pub b: MaciSpec,
    pub d: u32,
    pub i: usize,
    pub t: usize,
    pub oracle_full_rank: bool,
    pub recursion: RecursionVerdict,
}

/// Compares the recursion on `B` with direct ranks on `B (x) k[z]/(z^d)` for
/// every map of the latter. `B` must be a two-variable spec.
pub fn check_recursion(b: &MaciSpec, d: u32, exec: Execution) -> Result<Vec<RecursionMismatch>> {
    if b.n() != 2 {
        return Err(Error::InvalidArgument(
            "recursion check needs a two-variable algebra".into(),
        ));
    }
    if d < 1 {
        return Err(Error::InvalidArgument("d must be at least 1".into()));
    }
    let a = MaciSpec::new(vec![b.a()[0], b.a()[1], d], vec![b.p()[0], b.p()[1], 0])?;
    let report = lefschetz_report_with(&a.to_ideal(), &LinearForm::AllOnes, exec)?;
    let hb = b.hilbert_series();
    let mut out = Vec::new();
    for r in &report.maps {
        let verdict = recursion_full_rank(&hb, d, r.i as i64, r.t as i64)?;
        if (verdict == RecursionVerdict::FullRank) != r.full_rank {
            out.push(RecursionMismatch {
                b: b.clone(),
                d,
                i: r.i,
                t: r.t,
                oracle_full_rank: r.full_rank,
                recursion: verdict,
            });
        }
    }
    Ok(out)
}
