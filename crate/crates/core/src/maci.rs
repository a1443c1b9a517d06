//! Monomial almost complete intersections `(x1^a1, ..., xn^an, m)`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialIdeal};
use crate::series::{hilbert_series, HilbertSeries};

/// Pure-power exponents `a` plus one extra generator `m` with `m_i < a_i` and
/// support of size at least two.
///
/// Serialized as `{"n": .., "a": [..], "m": [..]}`; deserialization validates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawSpec", into = "RawSpec")]
pub struct MaciSpec {
    a: Vec<u32>,
    m: Monomial,
}

#[derive(Serialize, Deserialize)]
struct RawSpec {
    n: usize,
    a: Vec<u32>,
    m: Vec<u32>,
}

impl TryFrom<RawSpec> for MaciSpec {
    type Error = Error;

    fn try_from(raw: RawSpec) -> Result<Self> {
        if raw.a.len() != raw.n || raw.m.len() != raw.n {
            return Err(Error::InvalidMaci(format!(
                "n = {} but a has {} and m has {} entries",
                raw.n,
                raw.a.len(),
                raw.m.len()
            )));
        }
        MaciSpec::new(raw.a, raw.m)
    }
}

impl From<MaciSpec> for RawSpec {
    fn from(spec: MaciSpec) -> Self {
        RawSpec {
            n: spec.n(),
            m: spec.m.exponents().to_vec(),
            a: spec.a,
        }
    }
}

impl MaciSpec {
    pub fn new(a: Vec<u32>, m: Vec<u32>) -> Result<Self> {
        if a.len() != m.len() {
            return Err(Error::InvalidMaci(format!(
                "{} pure powers but the extra monomial has {} exponents",
                a.len(),
                m.len()
            )));
        }
        if let Some(i) = a.iter().position(|&x| x == 0) {
            return Err(Error::InvalidMaci(format!("a{} must be at least 1", i + 1)));
        }
        if let Some(i) = (0..a.len()).find(|&i| m[i] >= a[i]) {
            return Err(Error::InvalidMaci(format!(
                "exponent of x{} in m is {} but must be below a{} = {}",
                i + 1,
                m[i],
                i + 1,
                a[i]
            )));
        }
        let m = Monomial::new(m);
        if m.support().len() < 2 {
            return Err(Error::InvalidMaci(
                "extra monomial must involve at least two variables".into(),
            ));
        }
        Ok(MaciSpec { a, m })
    }

    /// Recognizes an ideal with exactly `n` pure-power generators and one more.
    pub fn from_ideal(ideal: &MonomialIdeal) -> Result<Self> {
        let n = ideal.num_vars();
        let exps = ideal.pure_power_exponents();
        if ideal.is_unit() {
            return Err(Error::InvalidMaci("unit ideal".into()));
        }
        let a = exps
            .iter()
            .enumerate()
            .map(|(i, e)| e.ok_or(Error::NotArtinian { variable: i + 1 }))
            .collect::<Result<Vec<_>>>()?;
        let extra: Vec<&Monomial> = ideal
            .generators()
            .iter()
            .filter(|g| g.as_pure_power().is_none())
            .collect();
        if extra.len() != 1 {
            return Err(Error::InvalidMaci(format!(
                "expected {} minimal generators, found {}",
                n + 1,
                ideal.generators().len()
            )));
        }
        Self::new(a, extra[0].exponents().to_vec())
    }

    pub fn n(&self) -> usize {
        self.a.len()
    }

    pub fn a(&self) -> &[u32] {
        &self.a
    }

    pub fn m(&self) -> &Monomial {
        &self.m
    }

    /// Exponents of the extra generator.
    pub fn p(&self) -> &[u32] {
        self.m.exponents()
    }

    pub fn support(&self) -> Vec<usize> {
        self.m.support()
    }

    pub fn to_ideal(&self) -> MonomialIdeal {
        let n = self.n();
        let mut gens: Vec<Monomial> = self
            .a
            .iter()
            .enumerate()
            .map(|(i, &a)| Monomial::pure_power(n, i, a))
            .collect();
        gens.push(self.m.clone());
        MonomialIdeal::new(n, gens).expect("validated spec")
    }

    pub fn hilbert_series(&self) -> HilbertSeries {
        hilbert_series(&self.to_ideal()).expect("pure powers make it Artinian")
    }

    /// Socle degree from the exponents alone: `sum (a_i - 1) - min (a_k - p_k)`,
    /// the minimum taken over the support of `m`.
    pub fn socle_degree(&self) -> i64 {
        let first = (0..self.n())
            .filter(|&i| self.p()[i] > 0)
            .min_by_key(|&i| self.a[i] - self.p()[i])
            .expect("support of m is nonempty");
        let total: i64 = self.a.iter().map(|&x| x as i64).sum();
        total - self.a[first] as i64 + self.p()[first] as i64 - self.n() as i64
    }

    /// `prod a_i - prod (a_i - p_i)`.
    pub fn total_dimension(&self) -> u64 {
        let full: u64 = self.a.iter().map(|&x| x as u64).product();
        let colon: u64 = self
            .a
            .iter()
            .zip(self.p())
            .map(|(&a, &p)| (a - p) as u64)
            .product();
        full - colon
    }

    /// Same algebra with variable `i` renamed to `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        let mut a = vec![0; self.n()];
        let mut p = vec![0; self.n()];
        for (i, &j) in perm.iter().enumerate() {
            a[j] = self.a[i];
            p[j] = self.p()[i];
        }
        MaciSpec::new(a, p).expect("permutation preserves validity")
    }

    /// Representative of the orbit under variable permutations: the
    /// `(a_i, p_i)` pairs sorted ascending.
    pub fn canonical(&self) -> Self {
        let mut pairs: Vec<(u32, u32)> = self
            .a
            .iter()
            .copied()
            .zip(self.p().iter().copied())
            .collect();
        pairs.sort_unstable();
        let (a, p) = pairs.into_iter().unzip();
        MaciSpec::new(a, p).expect("permutation preserves validity")
    }
}

impl fmt::Display for MaciSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_ideal())
    }
}
