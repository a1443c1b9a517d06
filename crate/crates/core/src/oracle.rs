//! Ground-truth Lefschetz decisions by exact rank computation.
//!
//! For every source degree `i` and power `t >= 1` with `i + t` at most the
//! socle degree, the map `A_i -> A_{i+t}` given by multiplication with
//! `l^t` is written down in standard-monomial bases and its rank computed
//! exactly. The linear form defaults to `l = x1 + ... + xn`.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::matrix::{rank_with_certificate, IntMatrix};
use crate::monomial::{Monomial, MonomialIdeal};
use crate::parse::render_ideal;
use crate::series::HilbertSeries;

/// Coefficients of the linear form `l`. Coefficient lists longer than the
/// number of variables are truncated.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LinearForm {
    #[default]
    AllOnes,
    Coefficients(Vec<u32>),
}

impl LinearForm {
    fn coefficients(&self, n: usize) -> Result<Option<&[u32]>> {
        match self {
            LinearForm::AllOnes => Ok(None),
            LinearForm::Coefficients(c) if c.len() >= n => Ok(Some(&c[..n])),
            LinearForm::Coefficients(c) => Err(Error::InvalidArgument(format!(
                "linear form has {} coefficients for {n} variables",
                c.len()
            ))),
        }
    }
}

/// Standard-monomial bases of every graded piece, with reverse lookup.
#[derive(Debug, Clone)]
pub struct GradedBasis {
    n: usize,
    pieces: Vec<Vec<Monomial>>,
    index: Vec<HashMap<Monomial, usize>>,
}

impl GradedBasis {
    pub fn new(ideal: &MonomialIdeal) -> Result<Self> {
        let pieces = ideal.graded_basis()?;
        let index = pieces
            .iter()
            .map(|b| b.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect())
            .collect();
        Ok(GradedBasis {
            n: ideal.num_vars(),
            pieces,
            index,
        })
    }

    pub fn dim(&self, degree: usize) -> usize {
        self.pieces.get(degree).map_or(0, Vec::len)
    }

    pub fn piece(&self, degree: usize) -> &[Monomial] {
        self.pieces.get(degree).map_or(&[], Vec::as_slice)
    }

    /// Top nonzero degree, `None` for the zero algebra.
    pub fn socle_degree(&self) -> Option<usize> {
        self.pieces.len().checked_sub(1)
    }

    pub fn hilbert_series(&self) -> HilbertSeries {
        HilbertSeries::from_coeffs(self.pieces.iter().map(|p| p.len() as u64).collect())
    }

    /// Matrix of multiplication by `l^t` from degree `i` to degree `i + t`:
    /// rows index the target basis, columns the source basis.
    pub fn multiplication_matrix(
        &self,
        form: &LinearForm,
        i: usize,
        t: usize,
    ) -> Result<IntMatrix> {
        let coeffs = form.coefficients(self.n)?;
        let src = self.piece(i);
        let tgt_dim = self.dim(i + t);
        let mut m = IntMatrix::zeros(tgt_dim, src.len());
        if tgt_dim == 0 || src.is_empty() {
            return Ok(m);
        }
        let tgt_index = &self.index[i + t];
        let terms = expansion_terms(self.n, t, coeffs);
        for (col, v) in src.iter().enumerate() {
            for (e, w) in &terms {
                let Some(u) = v.checked_mul(e) else { continue };
                if let Some(&row) = tgt_index.get(&u) {
                    m.set(row, col, w.clone());
                }
            }
        }
        Ok(m)
    }
}

/// Monomials of degree `t` with their coefficient in `l^t`, i.e. the
/// multinomial coefficient times the product of the form's coefficients.
fn expansion_terms(n: usize, t: usize, coeffs: Option<&[u32]>) -> Vec<(Monomial, BigInt)> {
    let mut factorial = vec![BigInt::one()];
    for k in 1..=t {
        let next = &factorial[k - 1] * BigInt::from(k);
        factorial.push(next);
    }
    let mut out = Vec::new();
    let mut e = vec![0u32; n];
    compositions(n, t, 0, &mut e, &mut |e| {
        let mut w = factorial[t].clone();
        for &k in e {
            w /= &factorial[k as usize];
        }
        if let Some(c) = coeffs {
            for (&k, &ci) in e.iter().zip(c) {
                w *= BigInt::from(ci).pow(k);
            }
        }
        if !w.is_zero() {
            out.push((Monomial::new(e.to_vec()), w));
        }
    });
    out
}

fn compositions(
    n: usize,
    remaining: usize,
    var: usize,
    e: &mut Vec<u32>,
    f: &mut impl FnMut(&[u32]),
) {
    if var + 1 == n {
        e[var] = remaining as u32;
        f(e);
        e[var] = 0;
        return;
    }
    for k in (0..=remaining).rev() {
        e[var] = k as u32;
        compositions(n, remaining - k, var + 1, e, f);
    }
    e[var] = 0;
}

/// `l^t` in the standard-monomial bases of `R/I`, with `l = x1 + ... + xn`.
pub fn multiplication_matrix(ideal: &MonomialIdeal, i: usize, t: usize) -> Result<IntMatrix> {
    GradedBasis::new(ideal)?.multiplication_matrix(&LinearForm::AllOnes, i, t)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum MapReason {
    Injective,
    Surjective,
    Bijective,
    Neither,
}

/// Rank data for one map `A_i -> A_{i+t}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MapRecord {
    pub i: usize,
    pub t: usize,
    pub dim_src: usize,
    pub dim_tgt: usize,
    pub rank: usize,
    pub full_rank: bool,
    pub reason: MapReason,
}

impl MapRecord {
    pub fn new(i: usize, t: usize, dim_src: usize, dim_tgt: usize, rank: usize) -> Self {
        debug_assert!(rank <= dim_src.min(dim_tgt));
        let reason = match (rank == dim_src, rank == dim_tgt) {
            (true, true) => MapReason::Bijective,
            (true, false) => MapReason::Injective,
            (false, true) => MapReason::Surjective,
            (false, false) => MapReason::Neither,
        };
        MapRecord {
            i,
            t,
            dim_src,
            dim_tgt,
            rank,
            full_rank: reason != MapReason::Neither,
            reason,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LefschetzReport {
    /// the ideal in the text syntax
    pub ideal: String,
    pub hs: HilbertSeries,
    pub linear_form: LinearForm,
    pub maps: Vec<MapRecord>,
    pub wlp: bool,
    pub slp: bool,
    /// `(i, t)` of every map without full rank
    pub witnesses: Vec<(usize, usize)>,
}

impl LefschetzReport {
    /// Failing maps with `t = 1`.
    pub fn wlp_witnesses(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.witnesses.iter().copied().filter(|&(_, t)| t == 1)
    }
}

/// Evaluates every `(i, t)` cell with `l = x1 + ... + xn`, in parallel when
/// available.
pub fn lefschetz_report(ideal: &MonomialIdeal) -> Result<LefschetzReport> {
    lefschetz_report_with(ideal, &LinearForm::AllOnes, Execution::default())
}

pub fn lefschetz_report_with(
    ideal: &MonomialIdeal,
    form: &LinearForm,
    exec: Execution,
) -> Result<LefschetzReport> {
    form.coefficients(ideal.num_vars())?;
    let basis = GradedBasis::new(ideal)?;
    let cells: Vec<(usize, usize)> = match basis.socle_degree() {
        Some(top) => (0..top)
            .flat_map(|i| (1..=top - i).map(move |t| (i, t)))
            .collect(),
        None => Vec::new(),
    };
    let maps = exec
        .map(&cells, |&(i, t)| {
            let m = basis.multiplication_matrix(form, i, t)?;
            let rank = rank_with_certificate(&m);
            Ok(MapRecord::new(i, t, basis.dim(i), basis.dim(i + t), rank))
        })
        .into_iter()
        .collect::<Result<Vec<_>>>()?;

    let witnesses: Vec<(usize, usize)> = maps
        .iter()
        .filter(|r| !r.full_rank)
        .map(|r| (r.i, r.t))
        .collect();
    Ok(LefschetzReport {
        ideal: render_ideal(ideal),
        hs: basis.hilbert_series(),
        linear_form: form.clone(),
        wlp: witnesses.iter().all(|&(_, t)| t != 1),
        slp: witnesses.is_empty(),
        witnesses,
        maps,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum RecursionVerdict {
    FullRank,
    NotFullRank,
}

/// One map `B_{i-q} -> B_{i+q+t-(d-1)}` by `l^(2q+t-(d-1))` in the
/// tensor-product recursion, classified by dimensions alone.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecursionMap {
    pub q: i64,
    pub exponent: i64,
    pub src_degree: i64,
    pub dim_src: u64,
    pub dim_tgt: u64,
    pub can_inject: bool,
    pub can_surject: bool,
}

/// The maps on `B` that decide whether `l^t: A_i -> A_{i+t}` has full rank for
/// `A = B (x) k[z]/(z^d)`, assuming `B` has the strong Lefschetz property.
pub fn recursion_maps(hb: &HilbertSeries, d: u32, i: i64, t: i64) -> Result<Vec<RecursionMap>> {
    if d < 1 {
        return Err(Error::InvalidArgument("d must be at least 1".into()));
    }
    if t < 0 {
        return Err(Error::InvalidArgument("t must be nonnegative".into()));
    }
    let d = d as i64;
    let dim = |deg: i64| if deg < 0 { 0 } else { hb.coeff(deg) };
    let mut out = Vec::new();
    for q in (d - t).max(0)..d {
        let exponent = 2 * q + t - (d - 1);
        if exponent < 0 {
            continue;
        }
        let src_degree = i - q;
        let (s, g) = (dim(src_degree), dim(src_degree + exponent));
        out.push(RecursionMap {
            q,
            exponent,
            src_degree,
            dim_src: s,
            dim_tgt: g,
            can_inject: s <= g,
            can_surject: s >= g,
        });
    }
    Ok(out)
}

/// Full rank iff all recursion maps can have full rank for the same reason.
pub fn recursion_full_rank(hb: &HilbertSeries, d: u32, i: i64, t: i64) -> Result<RecursionVerdict> {
    let maps = recursion_maps(hb, d, i, t)?;
    let same_reason = maps.iter().all(|m| m.can_inject) || maps.iter().all(|m| m.can_surject);
    Ok(if same_reason {
        RecursionVerdict::FullRank
    } else {
        RecursionVerdict::NotFullRank
    })
}
