use lefschetz_core::analysis::{coincides, is_almost_centered, is_symmetric, reflecting_degree};
use lefschetz_core::classify::{
    classify, classify_support_two, csm_decomposition, is_symmetric_maci, slp_symmetric,
    symmetric_certificate, Presentation, Rule, VerdictDetails,
};
use lefschetz_core::verify::{cross_verify, Family, Grid, VerifyOptions};
use lefschetz_core::{lefschetz_report, Error, MaciSpec};
use proptest::prelude::*;

fn spec(a: &[u32], p: &[u32]) -> MaciSpec {
    MaciSpec::new(a.to_vec(), p.to_vec()).unwrap()
}

fn maci_strategy() -> impl Strategy<Value = MaciSpec> {
    prop::collection::vec(1u32..=7, 2..=5)
        .prop_flat_map(|a| {
            let p = a.iter().map(|&x| 0..x).collect::<Vec<_>>();
            (Just(a), p)
        })
        .prop_filter_map("support below two", |(a, p)| MaciSpec::new(a, p).ok())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(3000))]

    #[test]
    fn decomposition_identity_for_every_variable(s in maci_strategy()) {
        for var in 0..s.n() {
            let d = csm_decomposition(&s, var).unwrap();
            prop_assert!(d.identity_holds(&s), "{} at x{}", s, var + 1);
            prop_assert_eq!(d.pieces.len(), if s.p()[var] > 0 { 2 } else { 1 });
            if let [first, second] = d.pieces.as_slice() {
                prop_assert!(first.multiplier > second.multiplier);
            }
        }
    }

    #[test]
    fn symmetry_witness_is_a_chain(s in maci_strategy()) {
        let check = is_symmetric_maci(&s);
        prop_assert_eq!(check.symmetric, is_symmetric(&s.hilbert_series()));
        if let Some(order) = check.order {
            let support = s.support().len();
            let relabeled: Vec<usize> = order.clone();
            for w in relabeled[..support].windows(2) {
                prop_assert_eq!(s.a()[w[1]], s.a()[w[0]] + s.p()[w[1]]);
            }
            let mut sorted = order;
            sorted.sort_unstable();
            prop_assert_eq!(sorted, (0..s.n()).collect::<Vec<_>>());
        }
    }

    #[test]
    fn symmetric_specs_certify(s in maci_strategy()) {
        match symmetric_certificate(&s) {
            Ok(c) => {
                prop_assert!(is_is_symmetric(&s));
                for r in &c.piece_reflecting_degrees {
                    prop_assert!(coincides(*r, c.reflecting_degree));
                }
            }
            Err(Error::Precondition(_)) => prop_assert!(!is_is_symmetric(&s)),
            Err(e) => prop_assert!(false, "{}: {}", s, e),
        }
    }
}

fn is_is_symmetric(s: &MaciSpec) -> bool {
    is_symmetric(&s.hilbert_series())
}

#[test]
fn almost_centered_and_explicit_conditions_coincide() {
    for a1 in 2..=14u32 {
        for a2 in 2..=14u32 {
            for alpha in 1..a1 {
                for beta in 1..a2 {
                    let v =
                        classify_support_two(&spec(&[a1, a2, 3, 3], &[alpha, beta, 0, 0])).unwrap();
                    let VerdictDetails::SupportTwo(d) = v.details else {
                        unreachable!()
                    };
                    assert_eq!(
                        d.almost_centered,
                        d.explicit.holds(),
                        "{a1} {a2} {alpha} {beta}"
                    );
                }
            }
        }
    }
}

#[test]
fn rules_fire_in_order() {
    let cases: [(&[u32], &[u32], Rule, bool); 6] = [
        (&[3, 5], &[1, 2], Rule::NEq2, true),
        (&[2, 5, 2], &[1, 1, 0], Rule::N3CubeLe2, true),
        (&[2, 5, 3], &[1, 1, 0], Rule::NoConditionHolds, false),
        (&[4, 6, 3, 3], &[2, 3, 0, 0], Rule::AlmostCentered, true),
        (&[4, 6, 2, 2], &[2, 4, 0, 0], Rule::NoConditionHolds, false),
        (&[2, 5, 2, 1], &[1, 1, 0, 0], Rule::N3CubeLe2, true),
    ];
    for (a, p, rule, slp) in cases {
        let s = spec(a, p);
        let v = classify(&s).unwrap();
        assert_eq!((v.rule_fired, v.slp), (rule, Some(slp)), "{s}");
        assert_eq!(lefschetz_report(&s.to_ideal()).unwrap().slp, slp, "{s}");
    }
}

#[test]
fn support_two_rejects_other_supports() {
    assert!(matches!(
        classify_support_two(&spec(&[2, 3, 4], &[1, 1, 1])),
        Err(Error::InvalidArgument(_))
    ));
}

#[test]
fn verdict_json_names() {
    let v = classify(&spec(&[2, 2], &[1, 1])).unwrap();
    let j = serde_json::to_value(&v).unwrap();
    assert_eq!(j["rule_fired"], "N_EQ_2");
    assert_eq!(j["slp"], true);
    assert_eq!(j["details"]["support_two"]["a1"], 2);
    let v = classify(&spec(&[3, 3, 3], &[1, 1, 1])).unwrap();
    let j = serde_json::to_value(&v).unwrap();
    assert_eq!(j["rule_fired"], "NOT_APPLICABLE");
    assert!(j["slp"].is_null());
    for (rule, name) in [
        (Rule::N3CubeLe2, "N3_CUBE_LE_2"),
        (Rule::AlmostCentered, "ALMOST_CENTERED"),
        (Rule::ExplicitConditions, "EXPLICIT_CONDITIONS"),
        (Rule::SymmetricHs, "SYMMETRIC_HS"),
        (Rule::NoConditionHolds, "NO_CONDITION_HOLDS"),
    ] {
        assert_eq!(serde_json::to_value(rule).unwrap(), name);
    }
}

#[test]
fn csm_two_variable_degenerate_piece() {
    let s = spec(&[3, 3], &[1, 1]);
    let d = csm_decomposition(&s, 1).unwrap();
    assert_eq!(
        d.pieces[0].quotient,
        Presentation::CompleteIntersection(vec![1])
    );
    assert_eq!(
        d.pieces[1].quotient,
        Presentation::CompleteIntersection(vec![2])
    );
    assert_eq!((d.pieces[1].shift, d.pieces[1].multiplier), (1, 1));
    assert!(d.identity_holds(&s));
}

#[test]
fn symmetric_examples() {
    assert!(slp_symmetric(&spec(&[2, 3, 4, 5], &[1, 1, 1, 1])).unwrap());
    assert!(slp_symmetric(&spec(&[2, 3, 7], &[1, 1, 0])).unwrap());
    let c = symmetric_certificate(&spec(&[2, 3, 4, 5], &[1, 1, 1, 1])).unwrap();
    assert_eq!(c.reflecting_degree.twice_value, 9);
    assert_eq!(c.decomposition.variable, 3);
    // MACI (2,3,4) piece, then MACI (2,3), then complete intersections
    assert_eq!(c.sub.len(), 1);
    assert_eq!(c.sub[0].sub.len(), 1);
    assert!(c.sub[0].sub[0].sub.is_empty());
    let hs = spec(&[2, 3, 4, 5], &[1, 1, 1, 1]).hilbert_series();
    assert_eq!(reflecting_degree(&hs).unwrap(), c.reflecting_degree);
    assert!(is_almost_centered(&hs).unwrap());
}

#[test]
fn survey_of_all_small_macis() {
    let report = cross_verify(
        &Grid::new([2, 3], 4, Family::AllMaci),
        &VerifyOptions::default(),
    )
    .unwrap();
    assert!(
        report.discrepancies.is_empty(),
        "{:?}",
        report.discrepancies
    );
    for c in &report.cases {
        assert_eq!(c.agreement.is_some(), c.slp_predicted.is_some());
        if c.rule == Rule::NotApplicable {
            assert!(c.slp_predicted.is_none());
        }
    }
    assert!(report.cases.iter().any(|c| c.rule == Rule::NotApplicable));
    assert!(report.cases.iter().any(|c| c.rule == Rule::SymmetricHs));
}
