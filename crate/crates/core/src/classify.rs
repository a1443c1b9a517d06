//! Closed-form SLP decisions for two families of almost complete
//! intersections: extra generator supported on two variables, and symmetric
//! Hilbert series.

use serde::{Deserialize, Serialize};

use crate::analysis::{
    coincides, is_almost_centered, is_symmetric, reflecting_degree, ReflectingDegree,
};
use crate::error::{Error, Result};
use crate::maci::MaciSpec;
use crate::monomial::MonomialIdeal;
use crate::series::HilbertSeries;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Rule {
    #[serde(rename = "N_EQ_2")]
    NEq2,
    #[serde(rename = "N3_CUBE_LE_2")]
    N3CubeLe2,
    AlmostCentered,
    ExplicitConditions,
    SymmetricHs,
    /// support two, but none of the SLP conditions holds
    NoConditionHolds,
    NotApplicable,
}

/// Which branches of the explicit condition held.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ExplicitBranches {
    /// `a2 < a1 + beta + 2`
    pub bounded: bool,
    /// `a1 = alpha + 1`
    pub a1_is_alpha_plus_one: bool,
    /// `beta = 1`
    pub beta_is_one: bool,
    /// `a2 >= a1 + beta - 1`
    pub a2_large: bool,
}

impl ExplicitBranches {
    pub fn holds(&self) -> bool {
        self.bounded && (self.a1_is_alpha_plus_one || self.beta_is_one || self.a2_large)
    }
}

/// Normalized parameters of a support-two almost complete intersection.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SupportTwoDetails {
    /// original 1-based indices of the variables playing `x1` and `x2`
    pub pair: [usize; 2],
    pub a1: u32,
    pub a2: u32,
    pub alpha: u32,
    pub beta: u32,
    /// whether the support pair was swapped so that `a1 + beta <= a2 + alpha`
    pub swapped: bool,
    /// exponents of the remaining variables, in original order
    pub others: Vec<u32>,
    /// variables with exponent 1 contribute nothing and are dropped
    pub effective_n: usize,
    pub almost_centered: bool,
    pub explicit: ExplicitBranches,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum VerdictDetails {
    SupportTwo(SupportTwoDetails),
    Symmetric {
        /// witness ordering, 1-based
        order: Vec<usize>,
        certificate: SymmetricCertificate,
    },
    None,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationVerdict {
    /// `None` when no rule applies
    pub slp: Option<bool>,
    pub rule_fired: Rule,
    pub details: VerdictDetails,
}

pub fn classify_support_two(spec: &MaciSpec) -> Result<ClassificationVerdict> {
    let support = spec.support();
    let &[i, j] = support.as_slice() else {
        return Err(Error::InvalidArgument(format!(
            "extra generator is supported on {} variables, not 2",
            support.len()
        )));
    };
    let (a, p) = (spec.a(), spec.p());
    let swapped = a[i] + p[j] > a[j] + p[i];
    let (x, y) = if swapped { (j, i) } else { (i, j) };
    let (a1, a2, alpha, beta) = (a[x], a[y], p[x], p[y]);

    let b = MaciSpec::new(vec![a1, a2], vec![alpha, beta]).expect("restriction of a valid spec");
    let almost_centered = is_almost_centered(&b.hilbert_series())?;
    let explicit = ExplicitBranches {
        bounded: a2 < a1 + beta + 2,
        a1_is_alpha_plus_one: a1 == alpha + 1,
        beta_is_one: beta == 1,
        a2_large: a2 + 1 >= a1 + beta,
    };

    let others: Vec<u32> = (0..spec.n())
        .filter(|&k| k != i && k != j)
        .map(|k| a[k])
        .collect();
    let nontrivial: Vec<u32> = others.iter().copied().filter(|&e| e >= 2).collect();
    let effective_n = 2 + nontrivial.len();

    let (slp, rule) = if effective_n == 2 {
        (true, Rule::NEq2)
    } else if effective_n == 3 && nontrivial[0] <= 2 {
        (true, Rule::N3CubeLe2)
    } else if almost_centered {
        (true, Rule::AlmostCentered)
    } else if explicit.holds() {
        (true, Rule::ExplicitConditions)
    } else {
        (false, Rule::NoConditionHolds)
    };

    Ok(ClassificationVerdict {
        slp: Some(slp),
        rule_fired: rule,
        details: VerdictDetails::SupportTwo(SupportTwoDetails {
            pair: [x + 1, y + 1],
            a1,
            a2,
            alpha,
            beta,
            swapped,
            others,
            effective_n,
            almost_centered,
            explicit,
        }),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SymmetryCheck {
    pub symmetric: bool,
    /// 0-based: support variables by ascending exponent, then the rest
    pub order: Option<Vec<usize>>,
}

/// Exponent test for a symmetric Hilbert series: after sorting the support
/// variables by `a`, each exponent is the previous one plus its `p`.
pub fn is_symmetric_maci(spec: &MaciSpec) -> SymmetryCheck {
    let (a, p) = (spec.a(), spec.p());
    let mut support = spec.support();
    support.sort_by_key(|&k| a[k]);
    let chain = support
        .windows(2)
        .all(|w| a[w[1]] > a[w[0]] && a[w[1]] == a[w[0]] + p[w[1]]);
    let order = chain.then(|| {
        let mut order = support.clone();
        order.extend((0..spec.n()).filter(|&k| p[k] == 0));
        order
    });
    SymmetryCheck {
        symmetric: chain,
        order,
    }
}

/// Either a smaller almost complete intersection or a complete intersection.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Presentation {
    Maci(MaciSpec),
    CompleteIntersection(Vec<u32>),
}

impl Presentation {
    fn from_exponents(a: Vec<u32>, p: Vec<u32>) -> Self {
        if p.iter().filter(|&&e| e > 0).count() >= 2 {
            return Presentation::Maci(MaciSpec::new(a, p).expect("truncation keeps p < a"));
        }
        // a lone x_k^{p_k} replaces the pure power x_k^{a_k}
        let a = a
            .iter()
            .zip(&p)
            .map(|(&ak, &pk)| if pk > 0 { pk } else { ak })
            .collect();
        Presentation::CompleteIntersection(a)
    }

    pub fn hilbert_series(&self) -> HilbertSeries {
        match self {
            Presentation::Maci(s) => s.hilbert_series(),
            Presentation::CompleteIntersection(a) => {
                a.iter().fold(HilbertSeries::one(), |acc, &e| {
                    acc.mul(&HilbertSeries::geometric(e))
                })
            }
        }
    }

    pub fn to_ideal(&self) -> MonomialIdeal {
        match self {
            Presentation::Maci(s) => s.to_ideal(),
            Presentation::CompleteIntersection(a) => {
                MonomialIdeal::complete_intersection(a).expect("exponents are positive")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CsmPiece {
    pub quotient: Presentation,
    pub shift: i64,
    pub multiplier: u32,
}

impl CsmPiece {
    /// Series of the piece itself, shifted into place.
    pub fn series(&self) -> HilbertSeries {
        self.quotient.hilbert_series().shifted(self.shift)
    }

    /// Series after tensoring with `k[t]/(t^f)`.
    pub fn widened_series(&self) -> HilbertSeries {
        self.series()
            .mul(&HilbertSeries::geometric(self.multiplier))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CsmDecomposition {
    /// 0-based index of the variable used as the linear form
    pub variable: usize,
    pub pieces: Vec<CsmPiece>,
}

impl CsmDecomposition {
    pub fn total_series(&self) -> HilbertSeries {
        self.pieces
            .iter()
            .fold(HilbertSeries::zero(), |acc, piece| {
                acc.add(&piece.widened_series())
            })
    }

    pub fn identity_holds(&self, spec: &MaciSpec) -> bool {
        self.total_series() == spec.hilbert_series()
    }
}

/// Central simple modules of `A` for the linear form `x_var` (0-based).
pub fn csm_decomposition(spec: &MaciSpec, var: usize) -> Result<CsmDecomposition> {
    let n = spec.n();
    if var >= n {
        return Err(Error::InvalidArgument(format!(
            "variable index {} out of range 1..={n}",
            var + 1
        )));
    }
    let (a, p) = (spec.a(), spec.p());
    let rest = |v: &[u32]| -> Vec<u32> {
        v.iter()
            .enumerate()
            .filter(|&(k, _)| k != var)
            .map(|(_, &e)| e)
            .collect()
    };
    let (ra, rp) = (rest(a), rest(p));
    let mut pieces = vec![CsmPiece {
        quotient: Presentation::from_exponents(ra.clone(), rp.clone()),
        shift: 0,
        multiplier: a[var],
    }];
    if p[var] > 0 {
        pieces.push(CsmPiece {
            quotient: Presentation::CompleteIntersection(
                ra.iter().zip(&rp).map(|(&x, &y)| x - y).collect(),
            ),
            shift: rp.iter().map(|&e| e as i64).sum(),
            multiplier: p[var],
        });
    }
    Ok(CsmDecomposition {
        variable: var,
        pieces,
    })
}

/// The checks performed at one level of the symmetric SLP induction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymmetricCertificate {
    pub spec: MaciSpec,
    pub reflecting_degree: ReflectingDegree,
    pub decomposition: CsmDecomposition,
    /// reflecting degree of each widened piece
    pub piece_reflecting_degrees: Vec<ReflectingDegree>,
    /// certificates for pieces that are again almost complete intersections
    pub sub: Vec<SymmetricCertificate>,
}

fn violation(spec: &MaciSpec, what: String) -> Error {
    Error::HypothesisViolation(format!("{spec}: {what}"))
}

/// Runs the symmetric SLP induction and returns the checks made. Fails with
/// [`Error::Precondition`] if the exponent test fails and with
/// [`Error::HypothesisViolation`] if any step of the induction does not hold.
pub fn symmetric_certificate(spec: &MaciSpec) -> Result<SymmetricCertificate> {
    let check = is_symmetric_maci(spec);
    let Some(order) = check.order else {
        return Err(Error::Precondition(format!(
            "{spec} fails the symmetry exponent test"
        )));
    };
    let hs = spec.hilbert_series();
    if !is_symmetric(&hs) {
        return Err(violation(
            spec,
            format!("exponent test passed but {hs} is not symmetric"),
        ));
    }
    let reflecting = reflecting_degree(&hs)?;
    let support_len = spec.support().len();
    let var = order[support_len - 1];
    let decomposition = csm_decomposition(spec, var)?;
    if !decomposition.identity_holds(spec) {
        return Err(violation(
            spec,
            format!("widened pieces sum to {}", decomposition.total_series()),
        ));
    }

    let mut piece_reflecting_degrees = Vec::new();
    let mut sub = Vec::new();
    for (k, piece) in decomposition.pieces.iter().enumerate() {
        let series = piece.series();
        if !is_symmetric(&series) {
            return Err(violation(
                spec,
                format!("piece {} has series {series}", k + 1),
            ));
        }
        let r = reflecting_degree(&piece.widened_series())?;
        if !coincides(r, reflecting) {
            return Err(violation(
                spec,
                format!(
                    "piece {} reflects at {} but the algebra at {}",
                    k + 1,
                    r.as_f64(),
                    reflecting.as_f64()
                ),
            ));
        }
        piece_reflecting_degrees.push(r);
        if let Presentation::Maci(inner) = &piece.quotient {
            sub.push(symmetric_certificate(inner).map_err(|e| match e {
                Error::Precondition(msg) => violation(spec, format!("piece {}: {msg}", k + 1)),
                other => other,
            })?);
        }
    }

    Ok(SymmetricCertificate {
        spec: spec.clone(),
        reflecting_degree: reflecting,
        decomposition,
        piece_reflecting_degrees,
        sub,
    })
}

/// SLP verdict for a symmetric almost complete intersection, returned only
/// after the induction's checks pass.
pub fn slp_symmetric(spec: &MaciSpec) -> Result<bool> {
    symmetric_certificate(spec).map(|_| true)
}

/// Support-two rule if the extra generator has two variables, else the
/// symmetric rule if it applies, else no verdict.
pub fn classify(spec: &MaciSpec) -> Result<ClassificationVerdict> {
    if spec.support().len() == 2 {
        return classify_support_two(spec);
    }
    let check = is_symmetric_maci(spec);
    match check.order {
        Some(order) => {
            let certificate = symmetric_certificate(spec)?;
            Ok(ClassificationVerdict {
                slp: Some(true),
                rule_fired: Rule::SymmetricHs,
                details: VerdictDetails::Symmetric {
                    order: order.iter().map(|k| k + 1).collect(),
                    certificate,
                },
            })
        }
        None => Ok(ClassificationVerdict {
            slp: None,
            rule_fired: Rule::NotApplicable,
            details: VerdictDetails::None,
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(a: &[u32], p: &[u32]) -> MaciSpec {
        MaciSpec::new(a.to_vec(), p.to_vec()).unwrap()
    }

    #[test]
    fn example_pair() {
        for a3 in 2..=5 {
            for a4 in 2..=5 {
                let yes = classify_support_two(&spec(&[4, 6, a3, a4], &[2, 3, 0, 0])).unwrap();
                assert_eq!(yes.slp, Some(true));
                assert_eq!(yes.rule_fired, Rule::AlmostCentered);
                let no = classify_support_two(&spec(&[4, 6, a3, a4], &[2, 4, 0, 0])).unwrap();
                assert_eq!(no.slp, Some(false));
                assert_eq!(no.rule_fired, Rule::NoConditionHolds);
            }
        }
    }

    #[test]
    fn small_cases() {
        let v = classify_support_two(&spec(&[2, 5, 3], &[1, 1, 0])).unwrap();
        assert_eq!(v.slp, Some(false));
        let v = classify_support_two(&spec(&[2, 2], &[1, 1])).unwrap();
        assert_eq!(v.rule_fired, Rule::NEq2);
        let v = classify_support_two(&spec(&[2, 5, 2], &[1, 1, 0])).unwrap();
        assert_eq!(v.rule_fired, Rule::N3CubeLe2);
        // exponent-1 variables are dropped
        let v = classify_support_two(&spec(&[2, 5, 1, 1], &[1, 1, 0, 0])).unwrap();
        assert_eq!(v.rule_fired, Rule::NEq2);
        assert!(classify_support_two(&spec(&[2, 2, 2], &[1, 1, 1])).is_err());
    }

    #[test]
    fn normalization_recorded() {
        // a1 + beta = 6 + 2 > a2 + alpha = 4 + 3
        let v = classify_support_two(&spec(&[6, 4], &[3, 2])).unwrap();
        let VerdictDetails::SupportTwo(d) = v.details else {
            panic!()
        };
        assert!(d.swapped);
        assert_eq!(d.pair, [2, 1]);
        assert_eq!((d.a1, d.a2, d.alpha, d.beta), (4, 6, 2, 3));
    }

    #[test]
    fn symmetry_examples() {
        let c = is_symmetric_maci(&spec(&[2, 3, 4, 5], &[1, 1, 1, 1]));
        assert!(c.symmetric);
        assert_eq!(c.order, Some(vec![0, 1, 2, 3]));
        assert!(!is_symmetric_maci(&spec(&[3, 3, 3], &[1, 1, 1])).symmetric);
        let c = is_symmetric_maci(&spec(&[2, 3, 7], &[1, 1, 0]));
        assert_eq!(c.order, Some(vec![0, 1, 2]));
        let c = is_symmetric_maci(&spec(&[7, 3, 2], &[0, 1, 1]));
        assert_eq!(c.order, Some(vec![2, 1, 0]));
    }

    #[test]
    fn decomposition_example() {
        let s = spec(&[2, 3, 4, 5], &[1, 1, 1, 1]);
        let d = csm_decomposition(&s, 3).unwrap();
        assert_eq!(d.pieces.len(), 2);
        assert_eq!(
            d.pieces[0].quotient,
            Presentation::Maci(spec(&[2, 3, 4], &[1, 1, 1]))
        );
        assert_eq!((d.pieces[0].multiplier, d.pieces[0].shift), (5, 0));
        assert_eq!(
            d.pieces[1].quotient,
            Presentation::CompleteIntersection(vec![1, 2, 3])
        );
        assert_eq!((d.pieces[1].multiplier, d.pieces[1].shift), (1, 3));
        assert!(d.identity_holds(&s));
        assert!(csm_decomposition(&s, 4).is_err());
    }

    #[test]
    fn decomposition_degenerate_cases() {
        let s = spec(&[3, 3], &[1, 1]);
        for var in 0..2 {
            let d = csm_decomposition(&s, var).unwrap();
            assert_eq!(
                d.pieces[0].quotient,
                Presentation::CompleteIntersection(vec![1])
            );
            assert!(d.identity_holds(&s));
        }
        let s = spec(&[2, 3, 7], &[1, 1, 0]);
        let d = csm_decomposition(&s, 2).unwrap();
        assert_eq!(d.pieces.len(), 1);
        assert!(d.identity_holds(&s));
    }

    #[test]
    fn symmetric_slp() {
        assert!(slp_symmetric(&spec(&[2, 3, 4, 5], &[1, 1, 1, 1])).unwrap());
        assert!(slp_symmetric(&spec(&[2, 3, 7], &[1, 1, 0])).unwrap());
        assert!(matches!(
            slp_symmetric(&spec(&[3, 3, 3], &[1, 1, 1])),
            Err(Error::Precondition(_))
        ));
        let v = classify(&spec(&[2, 3, 4, 5], &[1, 1, 1, 1])).unwrap();
        assert_eq!(v.rule_fired, Rule::SymmetricHs);
        let v = classify(&spec(&[3, 3, 3], &[1, 1, 1])).unwrap();
        assert_eq!((v.slp, v.rule_fired), (None, Rule::NotApplicable));
    }
}
