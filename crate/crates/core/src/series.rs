//! Hilbert series of Artinian monomial quotients.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::monomial::{Monomial, MonomialIdeal};

/// A Laurent polynomial `sum_i coeffs[i] * t^(offset + i)` with nonnegative
/// coefficients.
///
/// Kept trimmed at both ends: the first and last coefficients are nonzero, so
/// `offset` is the initial degree. The zero series has no coefficients and
/// offset 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(from = "RawSeries")]
pub struct HilbertSeries {
    offset: i64,
    coeffs: Vec<u64>,
}

#[derive(Deserialize)]
struct RawSeries {
    offset: i64,
    coeffs: Vec<u64>,
}

impl From<RawSeries> for HilbertSeries {
    fn from(raw: RawSeries) -> Self {
        HilbertSeries::new(raw.offset, raw.coeffs)
    }
}

impl HilbertSeries {
    pub fn new(offset: i64, mut coeffs: Vec<u64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        let lead = coeffs.iter().take_while(|&&c| c == 0).count();
        if lead == coeffs.len() {
            return Self::zero();
        }
        coeffs.drain(..lead);
        HilbertSeries {
            offset: offset + lead as i64,
            coeffs,
        }
    }

    pub fn from_coeffs(coeffs: Vec<u64>) -> Self {
        Self::new(0, coeffs)
    }

    pub fn zero() -> Self {
        HilbertSeries {
            offset: 0,
            coeffs: Vec::new(),
        }
    }

    pub fn one() -> Self {
        Self::from_coeffs(vec![1])
    }

    /// `1 + t + ... + t^(k-1)`, the series of `k[x]/(x^k)`.
    pub fn geometric(k: u32) -> Self {
        Self::from_coeffs(vec![1; k as usize])
    }

    pub fn offset(&self) -> i64 {
        self.offset
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of `t^degree`; zero outside the support.
    pub fn coeff(&self, degree: i64) -> u64 {
        let idx = degree - self.offset;
        if idx < 0 {
            return 0;
        }
        self.coeffs.get(idx as usize).copied().unwrap_or(0)
    }

    /// Top degree with a nonzero coefficient.
    pub fn socle_degree(&self) -> Option<i64> {
        if self.is_zero() {
            None
        } else {
            Some(self.offset + self.coeffs.len() as i64 - 1)
        }
    }

    pub fn total_dimension(&self) -> u64 {
        self.coeffs.iter().sum()
    }

    /// Multiplication by `t^s`.
    pub fn shifted(&self, s: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        HilbertSeries {
            offset: self.offset + s,
            coeffs: self.coeffs.clone(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let lo = self.offset.min(other.offset);
        let hi = self.socle_degree().max(other.socle_degree()).unwrap();
        let coeffs = (lo..=hi).map(|d| self.coeff(d) + other.coeff(d)).collect();
        Self::new(lo, coeffs)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Self::new(self.offset + other.offset, coeffs)
    }

    /// `self - other`, or `None` if some coefficient would go negative.
    pub fn checked_sub(&self, other: &Self) -> Option<Self> {
        if other.is_zero() {
            return Some(self.clone());
        }
        if self.is_zero() {
            return None;
        }
        let lo = self.offset.min(other.offset);
        let hi = self.socle_degree().max(other.socle_degree()).unwrap();
        let coeffs = (lo..=hi)
            .map(|d| self.coeff(d).checked_sub(other.coeff(d)))
            .collect::<Option<Vec<_>>>()?;
        Some(Self::new(lo, coeffs))
    }
}

impl fmt::Display for HilbertSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let d = self.offset + i as i64;
            match (c, d) {
                (_, 0) => write!(f, "{c}")?,
                (1, 1) => write!(f, "t")?,
                (1, _) => write!(f, "t^{d}")?,
                (_, 1) => write!(f, "{c}t")?,
                _ => write!(f, "{c}t^{d}")?,
            }
        }
        Ok(())
    }
}

/// Hilbert series of `R/I` for an Artinian monomial ideal `I`.
///
/// Pure-power ideals use the product formula. Otherwise one non-pure-power
/// generator `m` is split off: with `K` the ideal of the remaining generators,
/// `HS(R/I) = HS(R/K) - t^deg(m) HS(R/(K:m))`. Removing a non-pure-power
/// generator keeps `K` Artinian, and `K:m` has fewer generators than `I`, so
/// the recursion terminates.
pub fn hilbert_series(ideal: &MonomialIdeal) -> Result<HilbertSeries> {
    ideal.require_artinian()?;
    Ok(series_rec(ideal))
}

fn series_rec(ideal: &MonomialIdeal) -> HilbertSeries {
    if ideal.is_unit() {
        return HilbertSeries::zero();
    }
    let pivot = ideal
        .generators()
        .iter()
        .filter(|g| g.as_pure_power().is_none())
        .max_by_key(|g| g.degree());
    let Some(pivot) = pivot else {
        return ideal
            .pure_power_exponents()
            .into_iter()
            .map(|e| HilbertSeries::geometric(e.expect("artinian")))
            .fold(HilbertSeries::one(), |acc, s| acc.mul(&s));
    };
    let rest = ideal
        .without_generator(pivot)
        .expect("pivot is a minimal generator and pure powers remain");
    let colon = rest.colon(pivot).expect("same variable count");
    let whole = series_rec(&rest);
    let removed = series_rec(&colon).shifted(pivot.degree() as i64);
    whole
        .checked_sub(&removed)
        .expect("colon quotient embeds in the larger quotient")
}

/// Hilbert series by counting standard monomials degree by degree.
pub fn hilbert_series_by_enumeration(ideal: &MonomialIdeal) -> Result<HilbertSeries> {
    let basis = ideal.graded_basis()?;
    Ok(HilbertSeries::from_coeffs(
        basis.iter().map(|b| b.len() as u64).collect(),
    ))
}

/// Checks `HS(R/K) = HS(R/(K+(m))) + t^deg(m) HS(R/(K:m))` for one instance,
/// with every series counted by enumeration.
///
/// The colon is the unit ideal when `m` lies in `K`, in which case its series
/// is zero.
pub fn short_exact_sequence_holds(k: &MonomialIdeal, m: &Monomial) -> Result<bool> {
    let lhs = hilbert_series_by_enumeration(k)?;
    let sum = hilbert_series_by_enumeration(&k.with_generator(m)?)?;
    let colon = hilbert_series_by_enumeration(&k.colon(m)?)?;
    Ok(lhs == sum.add(&colon.shifted(m.degree() as i64)))
}
