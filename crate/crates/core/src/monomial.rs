//! Monomials and monomial ideals of `k[x1, ..., xn]`.
//!
//! Everything here is an immutable value. Ideals always hold their unique
//! minimal generating set in a canonical order, so two ideals compare equal
//! exactly when they are the same ideal.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An exponent vector `x1^e1 * ... * xn^en`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    /// The unit monomial in `n` variables.
    pub fn one(n: usize) -> Self {
        Monomial(vec![0; n])
    }

    /// `x_var^exp` in `n` variables (`var` is 0-based).
    pub fn pure_power(n: usize, var: usize, exp: u32) -> Self {
        let mut e = vec![0; n];
        e[var] = exp;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn num_vars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> usize {
        self.0.iter().map(|&e| e as usize).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Indices of the variables with a nonzero exponent.
    pub fn support(&self) -> Vec<usize> {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
            .collect()
    }

    /// `Some((var, exp))` when this is `x_var^exp` with `exp > 0`.
    pub fn as_pure_power(&self) -> Option<(usize, u32)> {
        let mut found = None;
        for (i, &e) in self.0.iter().enumerate() {
            if e > 0 {
                if found.is_some() {
                    return None;
                }
                found = Some((i, e));
            }
        }
        found
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.0.len(), other.0.len());
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Componentwise `max(self - other, 0)`, i.e. `self / gcd(self, other)`.
    pub fn quotient_by(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a.saturating_sub(*b))
                .collect(),
        )
    }

    pub fn checked_mul(&self, other: &Monomial) -> Option<Monomial> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_add(*b))
            .collect::<Option<Vec<_>>>()
            .map(Monomial)
    }
}

/// Graded lexicographic order with `x1 > x2 > ... > xn`.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            // the grammar has no literal "1"
            return write!(f, "x1^0");
        }
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{}", i + 1)?;
            } else {
                write!(f, "x{}^{}", i + 1, e)?;
            }
        }
        Ok(())
    }
}

/// Keeps the divisibility-minimal elements of `gens`, deduplicated and sorted.
pub fn minimalize(gens: &[Monomial]) -> Vec<Monomial> {
    let mut sorted: Vec<Monomial> = gens.to_vec();
    sorted.sort();
    sorted.dedup();
    // a divisor always has degree <= its multiple, so it precedes it here
    let mut out: Vec<Monomial> = Vec::with_capacity(sorted.len());
    for g in sorted {
        if !out.iter().any(|h| h.divides(&g)) {
            out.push(g);
        }
    }
    out
}

/// A monomial ideal stored by its minimal generators: pure powers first in
/// variable order, then the rest in descending graded-lex order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    n: usize,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    pub fn new(n: usize, gens: Vec<Monomial>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument(
                "ideal needs at least one variable".into(),
            ));
        }
        if gens.is_empty() {
            return Err(Error::EmptyIdeal);
        }
        for g in &gens {
            if g.num_vars() != n {
                return Err(Error::VariableCount {
                    expected: n,
                    found: g.num_vars(),
                });
            }
        }
        let mut gens = minimalize(&gens);
        gens.sort_by(|g, h| match (g.as_pure_power(), h.as_pure_power()) {
            (Some((u, _)), Some((v, _))) => u.cmp(&v),
            (Some(_), None) => Ordering::Less,
            (None, Some(_)) => Ordering::Greater,
            (None, None) => h.cmp(g),
        });
        Ok(MonomialIdeal { n, gens })
    }

    /// `(x1^a1, ..., xn^an)`.
    pub fn complete_intersection(exponents: &[u32]) -> Result<Self> {
        let n = exponents.len();
        let gens = exponents
            .iter()
            .enumerate()
            .map(|(i, &a)| Monomial::pure_power(n, i, a))
            .collect();
        Self::new(n, gens)
    }

    pub fn num_vars(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(Monomial::is_one)
    }

    /// Exponent of the pure-power generator of each variable, if any.
    pub fn pure_power_exponents(&self) -> Vec<Option<u32>> {
        let mut out = vec![None; self.n];
        if self.is_unit() {
            return vec![Some(0); self.n];
        }
        for g in &self.gens {
            if let Some((v, e)) = g.as_pure_power() {
                out[v] = Some(e);
            }
        }
        out
    }

    pub fn is_artinian(&self) -> bool {
        self.pure_power_exponents().iter().all(Option::is_some)
    }

    pub(crate) fn require_artinian(&self) -> Result<Vec<u32>> {
        self.pure_power_exponents()
            .into_iter()
            .enumerate()
            .map(|(i, e)| e.ok_or(Error::NotArtinian { variable: i + 1 }))
            .collect()
    }

    /// `I + (m)`.
    pub fn with_generator(&self, m: &Monomial) -> Result<Self> {
        let mut gens = self.gens.clone();
        gens.push(m.clone());
        Self::new(self.n, gens)
    }

    /// The ideal generated by all generators except `m`.
    ///
    /// Returns `None` if `m` is not a minimal generator or is the only one.
    pub fn without_generator(&self, m: &Monomial) -> Option<Self> {
        let gens: Vec<Monomial> = self.gens.iter().filter(|g| *g != m).cloned().collect();
        if gens.len() + 1 != self.gens.len() || gens.is_empty() {
            return None;
        }
        Some(MonomialIdeal { n: self.n, gens })
    }

    /// The colon ideal `I : (m)`.
    pub fn colon(&self, m: &Monomial) -> Result<Self> {
        if m.num_vars() != self.n {
            return Err(Error::VariableCount {
                expected: self.n,
                found: m.num_vars(),
            });
        }
        let gens: Vec<Monomial> = self.gens.iter().map(|g| g.quotient_by(m)).collect();
        Self::new(self.n, gens)
    }

    /// Degree-`d` monomials outside the ideal, in descending graded-lex order.
    pub fn standard_monomials(&self, d: usize) -> Result<Vec<Monomial>> {
        let bounds = self.require_artinian()?;
        let mut out = Vec::new();
        if self.is_unit() {
            return Ok(out);
        }
        let mut current = vec![0u32; self.n];
        self.fill_standard(&bounds, 0, d, &mut current, &mut out);
        Ok(out)
    }

    fn fill_standard(
        &self,
        bounds: &[u32],
        var: usize,
        remaining: usize,
        current: &mut Vec<u32>,
        out: &mut Vec<Monomial>,
    ) {
        if var + 1 == self.n {
            if remaining < bounds[var] as usize {
                current[var] = remaining as u32;
                let m = Monomial(current.clone());
                if !self.contains(&m) {
                    out.push(m);
                }
                current[var] = 0;
            }
            return;
        }
        let cap = remaining.min(bounds[var].saturating_sub(1) as usize);
        for e in (0..=cap).rev() {
            current[var] = e as u32;
            self.fill_standard(bounds, var + 1, remaining - e, current, out);
        }
        current[var] = 0;
    }

    /// Standard-monomial bases of every nonzero graded piece, indexed by degree.
    pub fn graded_basis(&self) -> Result<Vec<Vec<Monomial>>> {
        let bounds = self.require_artinian()?;
        let top: usize = bounds.iter().map(|&b| b.saturating_sub(1) as usize).sum();
        let mut out = Vec::new();
        for d in 0..=top {
            let basis = self.standard_monomials(d)?;
            if basis.is_empty() {
                break;
            }
            out.push(basis);
        }
        Ok(out)
    }

    /// The same ideal with variables renamed: variable `i` becomes `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.n {
            return Err(Error::InvalidArgument("permutation length".into()));
        }
        let gens = self
            .gens
            .iter()
            .map(|g| {
                let mut e = vec![0; self.n];
                for (i, &x) in g.exponents().iter().enumerate() {
                    e[perm[i]] = x;
                }
                Monomial(e)
            })
            .collect();
        Self::new(self.n, gens)
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}
