//! Shape predicates on Hilbert series and the closed-form profile of
//! two-variable almost complete intersections.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::series::HilbertSeries;

/// True iff the coefficient vector is a palindrome. The zero series counts as
/// symmetric.
pub fn is_symmetric(hs: &HilbertSeries) -> bool {
    let c = hs.coeffs();
    c.iter().eq(c.iter().rev())
}

/// Weakly increasing up to a peak, then weakly decreasing.
pub fn is_unimodal(hs: &HilbertSeries) -> bool {
    let c = hs.coeffs();
    let mut i = 1;
    while i < c.len() && c[i] >= c[i - 1] {
        i += 1;
    }
    while i < c.len() && c[i] <= c[i - 1] {
        i += 1;
    }
    i >= c.len()
}

/// Center of a symmetric series stored doubled: `p + q` for a series living
/// in degrees `p..=q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ReflectingDegree {
    pub twice_value: i64,
}

impl ReflectingDegree {
    pub fn as_f64(self) -> f64 {
        self.twice_value as f64 / 2.0
    }
}

pub fn reflecting_degree(hs: &HilbertSeries) -> Result<ReflectingDegree> {
    if hs.is_zero() {
        return Err(Error::Precondition(
            "zero series has no reflecting degree".into(),
        ));
    }
    if !is_symmetric(hs) {
        return Err(Error::NotSymmetric);
    }
    Ok(ReflectingDegree {
        twice_value: hs.offset() + hs.socle_degree().unwrap(),
    })
}

/// Reflecting degrees coincide when they differ by at most one half.
pub fn coincides(r1: ReflectingDegree, r2: ReflectingDegree) -> bool {
    (r1.twice_value - r2.twice_value).abs() <= 1
}

fn require_standard(hs: &HilbertSeries) -> Result<()> {
    if hs.offset() != 0 {
        return Err(Error::Precondition(format!(
            "almost-centeredness needs initial degree 0, got {}",
            hs.offset()
        )));
    }
    Ok(())
}

/// `h[i]`, zero out of range.
fn h(c: &[u64], i: i64) -> u64 {
    if i < 0 {
        0
    } else {
        c.get(i as usize).copied().unwrap_or(0)
    }
}

/// Either `h[i-1] <= h[D-i] <= h[i]` for all `0 <= i <= D/2`, or
/// `h[D-i+1] <= h[i] <= h[D-i]` for all such `i`.
pub fn is_almost_centered(hs: &HilbertSeries) -> Result<bool> {
    require_standard(hs)?;
    let c = hs.coeffs();
    if c.is_empty() {
        return Ok(true);
    }
    let d = c.len() as i64 - 1;
    let first = (0..=d / 2).all(|i| h(c, i - 1) <= h(c, d - i) && h(c, d - i) <= h(c, i));
    let second = (0..=d / 2).all(|i| h(c, d - i + 1) <= h(c, i) && h(c, i) <= h(c, d - i));
    Ok(first || second)
}

/// The no-crossing characterization: whenever `h[i] < h[j]` with `i < j`,
/// `h[i-s] <= h[j+s]` for every `s >= 0`, and dually for `h[i] > h[j]`.
pub fn is_almost_centered_by_crossings(hs: &HilbertSeries) -> Result<bool> {
    require_standard(hs)?;
    let c = hs.coeffs();
    let len = c.len() as i64;
    for i in 0..len {
        for j in i + 1..len {
            let (hi, hj) = (c[i as usize], c[j as usize]);
            if hi == hj {
                continue;
            }
            for s in 0..=len {
                let (l, r) = (h(c, i - s), h(c, j + s));
                if (hi < hj && l > r) || (hi > hj && l < r) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Which picture of the two-variable series applies. Informational only.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum ShapeCase {
    /// the colon part sits on the flat top of the complete-intersection part
    AllOnTop,
    /// `b <= alpha`
    AllOnRight,
    Slant1,
    Slant2,
    Slant3,
}

/// Closed-form data for `k[x,y]/(x^a, y^b, x^alpha y^beta)`, after swapping
/// the variables if needed so that `a + beta <= b + alpha`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TwoVarProfile {
    pub a: u32,
    pub b: u32,
    pub alpha: u32,
    pub beta: u32,
    /// whether the input variables were swapped to normalize
    pub swapped: bool,
    pub max_degree: u32,
    pub socle_degree: u32,
    pub symmetric: bool,
    pub almost_centered: bool,
    pub shape_case: ShapeCase,
}

pub fn two_var_profile(a: u32, b: u32, alpha: u32, beta: u32) -> Result<TwoVarProfile> {
    if !(1 <= alpha && alpha < a && 1 <= beta && beta < b) {
        return Err(Error::InvalidArgument(format!(
            "need 1 <= alpha < a and 1 <= beta < b, got a={a}, b={b}, alpha={alpha}, beta={beta}"
        )));
    }
    let swapped = a + beta > b + alpha;
    let (a, b, alpha, beta) = if swapped {
        (b, a, beta, alpha)
    } else {
        (a, b, alpha, beta)
    };

    let not_centered = b >= a + beta + 2 || (a - alpha >= 2 && beta >= 2 && b + 2 <= a + beta);
    let lo = a.min(alpha + beta);
    let hi = a.max(alpha + beta);
    let shape_case = if a + beta - 2 < b {
        ShapeCase::AllOnTop
    } else if b <= alpha {
        ShapeCase::AllOnRight
    } else if hi <= b {
        ShapeCase::Slant1
    } else if lo <= b {
        ShapeCase::Slant2
    } else {
        ShapeCase::Slant3
    };

    Ok(TwoVarProfile {
        a,
        b,
        alpha,
        beta,
        swapped,
        max_degree: lo - 1,
        socle_degree: b + alpha - 2,
        symmetric: a + beta == b,
        almost_centered: !not_centered,
        shape_case,
    })
}

/// Symmetry of `p`, `q` and `p * q`.
pub fn symmetric_product_check(p: &HilbertSeries, q: &HilbertSeries) -> Result<(bool, bool, bool)> {
    if p.is_zero() || q.is_zero() {
        return Err(Error::InvalidArgument("factors must be nonzero".into()));
    }
    Ok((is_symmetric(p), is_symmetric(q), is_symmetric(&p.mul(q))))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(c: &[u64]) -> HilbertSeries {
        HilbertSeries::from_coeffs(c.to_vec())
    }

    #[test]
    fn symmetry() {
        assert!(is_symmetric(&s(&[1, 4, 9, 15, 19, 19, 15, 9, 4, 1])));
        assert!(!is_symmetric(&s(&[1, 3, 6, 6, 3])));
        assert!(is_symmetric(&s(&[1])));
    }

    #[test]
    fn reflecting() {
        let golden = s(&[1, 4, 9, 15, 19, 19, 15, 9, 4, 1]);
        assert_eq!(reflecting_degree(&golden).unwrap().twice_value, 9);
        assert_eq!(reflecting_degree(&s(&[1, 2, 1])).unwrap().twice_value, 2);
        assert_eq!(
            reflecting_degree(&s(&[1, 1]).shifted(3))
                .unwrap()
                .twice_value,
            7
        );
        assert_eq!(
            reflecting_degree(&s(&[1, 3, 6, 6, 3])),
            Err(Error::NotSymmetric)
        );
    }

    #[test]
    fn coincidence() {
        let r = |t| ReflectingDegree { twice_value: t };
        assert!(coincides(r(9), r(9)));
        assert!(coincides(r(9), r(10)));
        assert!(!coincides(r(8), r(10)));
    }

    #[test]
    fn unimodality() {
        assert!(is_unimodal(&s(&[1, 2, 1, 1, 1])));
        assert!(!is_unimodal(&s(&[1, 2, 1, 2])));
        assert!(is_unimodal(&s(&[1, 3, 6, 6, 3])));
        assert!(is_unimodal(&HilbertSeries::zero()));
    }

    #[test]
    fn almost_centered_examples() {
        // k[x,y]/(x^4, y^6, x^2 y^3) and the beta = 4 variant
        assert!(is_almost_centered(&s(&[1, 2, 3, 4, 4, 3, 1])).unwrap());
        assert!(!is_almost_centered(&s(&[1, 2, 3, 4, 4, 4, 2])).unwrap());
        assert!(!is_almost_centered(&s(&[1, 2, 1, 1, 1])).unwrap());
        assert!(is_almost_centered(&s(&[1, 3, 6, 6, 3])).unwrap());
        assert!(is_almost_centered(&s(&[1, 2, 1]).shifted(1)).is_err());
        for c in [
            &[1u64, 2, 1, 1, 1][..],
            &[1, 2, 3, 4, 4, 3, 1],
            &[1, 2, 3, 4, 4, 4, 2],
        ] {
            assert_eq!(
                is_almost_centered(&s(c)).unwrap(),
                is_almost_centered_by_crossings(&s(c)).unwrap()
            );
        }
    }

    #[test]
    fn profile_examples() {
        let p = two_var_profile(4, 6, 2, 3).unwrap();
        assert!(p.almost_centered);
        assert!(!p.symmetric);
        assert_eq!(p.socle_degree, 6);
        assert!(!two_var_profile(4, 6, 2, 4).unwrap().almost_centered);
        let q = two_var_profile(2, 3, 1, 1).unwrap();
        assert!(q.symmetric);
        assert_eq!(q.socle_degree, 2);
        assert!(two_var_profile(2, 3, 2, 1).is_err());
    }

    #[test]
    fn profile_normalizes() {
        // a + beta = 6 + 2 > b + alpha = 4 + 3, so swap
        let p = two_var_profile(6, 4, 2, 3).unwrap();
        assert!(p.swapped);
        assert_eq!((p.a, p.b, p.alpha, p.beta), (4, 6, 3, 2));
    }

    #[test]
    fn product_check() {
        assert_eq!(
            symmetric_product_check(&s(&[1, 1]), &s(&[1, 1, 1])).unwrap(),
            (true, true, true)
        );
        assert_eq!(
            symmetric_product_check(&s(&[1, 1]), &s(&[1, 2])).unwrap(),
            (true, false, false)
        );
        let (_, q_sym, pq_sym) = symmetric_product_check(&s(&[1]), &s(&[2, 5, 2])).unwrap();
        assert_eq!(q_sym, pq_sym);
        assert!(symmetric_product_check(&HilbertSeries::zero(), &s(&[1])).is_err());
    }
}
