use lefschetz_core::analysis::{is_almost_centered, is_unimodal, two_var_profile};
use lefschetz_core::matrix::{
    matrix_rank, rank_mod_p, rank_with_certificate, IntMatrix, MERSENNE_61,
};
use lefschetz_core::oracle::{
    lefschetz_report_with, multiplication_matrix, recursion_full_rank, GradedBasis, LinearForm,
    MapReason, RecursionVerdict,
};
use lefschetz_core::{
    lefschetz_report, parse_ideal, Execution, HilbertSeries, MaciSpec, MonomialIdeal,
};
use num_rational::BigRational;
use num_traits::Zero;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn spec(a: &[u32], p: &[u32]) -> MaciSpec {
    MaciSpec::new(a.to_vec(), p.to_vec()).unwrap()
}

fn failing_cells(s: &MaciSpec) -> Vec<(usize, usize)> {
    lefschetz_report(&s.to_ideal()).unwrap().witnesses
}

/// Rank by Gaussian elimination over the rationals.
fn rational_rank(m: &IntMatrix) -> usize {
    let mut a: Vec<Vec<BigRational>> = (0..m.rows())
        .map(|r| {
            m.row(r)
                .iter()
                .map(|x| BigRational::from_integer(x.clone()))
                .collect()
        })
        .collect();
    let mut rank = 0;
    for c in 0..m.cols() {
        let Some(p) = (rank..a.len()).find(|&r| !a[r][c].is_zero()) else {
            continue;
        };
        a.swap(p, rank);
        let pivot_row = a[rank].clone();
        for row in a.iter_mut().skip(rank + 1) {
            let f = &row[c] / &pivot_row[c];
            for (x, y) in row.iter_mut().zip(&pivot_row).skip(c) {
                *x -= &f * y;
            }
        }
        rank += 1;
    }
    rank
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2000))]

    #[test]
    fn bareiss_matches_rational_elimination(
        rows in prop::collection::vec(prop::collection::vec(-50i64..=50, 5), 1..=6),
        scale in prop::collection::vec(-3i64..=3, 6),
    ) {
        // append combinations of earlier rows to force dependencies
        let mut rows = rows;
        let extra: Vec<i64> = (0..5).map(|j| rows.iter().zip(&scale).map(|(r, s)| r[j] * s).sum()).collect();
        rows.push(extra);
        let m = IntMatrix::from_rows(&rows);
        let expected = rational_rank(&m);
        prop_assert_eq!(matrix_rank(&m), expected);
        prop_assert_eq!(rank_with_certificate(&m), expected);
        prop_assert!(rank_mod_p(&m, MERSENNE_61) <= expected);
    }

    #[test]
    fn multiplication_rank_invariant_under_shuffles(
        a in prop::collection::vec(2u32..=4, 3),
        p in prop::collection::vec(0u32..=2, 3),
        t in 1usize..=3,
        seed in any::<u64>(),
    ) {
        let p: Vec<u32> = p.iter().zip(&a).map(|(&x, &y)| x.min(y - 1)).collect();
        prop_assume!(p.iter().filter(|&&e| e > 0).count() >= 2);
        let ideal = spec(&a, &p).to_ideal();
        let basis = GradedBasis::new(&ideal).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for i in 0..=basis.socle_degree().unwrap() {
            let m = basis.multiplication_matrix(&LinearForm::AllOnes, i, t).unwrap();
            let mut rp: Vec<usize> = (0..m.rows()).collect();
            let mut cp: Vec<usize> = (0..m.cols()).collect();
            for k in (1..rp.len()).rev() { rp.swap(k, rng.gen_range(0..=k)); }
            for k in (1..cp.len()).rev() { cp.swap(k, rng.gen_range(0..=k)); }
            prop_assert_eq!(matrix_rank(&m), matrix_rank(&m.permuted(&rp, &cp)));
        }
    }
}

#[test]
fn column_sums_count_surviving_products() {
    for text in [
        "x1^3, x2^3, x3^3, x1*x2*x3",
        "x1^2, x2^3, x3^4, x4^5, x1*x2*x3*x4",
        "x1^4, x2^6, x1^2*x2^3",
        "x1^2, x2^2, x3^5, x1*x3^2, x2*x3^3",
    ] {
        let ideal = parse_ideal(text).unwrap();
        let basis = GradedBasis::new(&ideal).unwrap();
        let n = ideal.num_vars();
        for i in 0..basis.socle_degree().unwrap() {
            let m = multiplication_matrix(&ideal, i, 1).unwrap();
            for (col, v) in basis.piece(i).iter().enumerate() {
                let sum: num_bigint::BigInt = (0..m.rows()).map(|r| m.get(r, col).clone()).sum();
                let surviving = (0..n)
                    .filter(|&j| {
                        !ideal.contains(
                            &v.checked_mul(&lefschetz_core::Monomial::pure_power(n, j, 1))
                                .unwrap(),
                        )
                    })
                    .count();
                assert_eq!(sum, surviving.into(), "{text}, degree {i}, {v}");
            }
        }
    }
}

#[test]
fn records_consistent_with_dimensions() {
    let ideal = parse_ideal("x1^4, x2^6, x3^3, x1^2*x2^4").unwrap();
    let report = lefschetz_report(&ideal).unwrap();
    let hs = report.hs.coeffs();
    let top = hs.len() - 1;
    assert_eq!(report.maps.len(), top * (top + 1) / 2);
    for r in &report.maps {
        assert!(r.i + r.t <= top);
        assert_eq!(
            (r.dim_src, r.dim_tgt),
            (hs[r.i] as usize, hs[r.i + r.t] as usize)
        );
        assert_eq!(r.full_rank, r.rank == r.dim_src.min(r.dim_tgt));
        assert_eq!(
            r.reason == MapReason::Bijective,
            r.rank == r.dim_src && r.rank == r.dim_tgt
        );
    }
    // the map from degree 0 to the socle is l^top, nonzero
    assert!(report
        .maps
        .iter()
        .any(|r| r.i == 0 && r.t == top && r.rank == 1));
    let beyond = multiplication_matrix(&ideal, 1, top).unwrap();
    assert_eq!(beyond.rows(), 0);
    assert_eq!(matrix_rank(&beyond), 0);
    assert!(report.wlp == report.maps.iter().filter(|r| r.t == 1).all(|r| r.full_rank));
    assert!(report.slp == report.maps.iter().all(|r| r.full_rank));
}

#[test]
fn two_variables_always_strong_lefschetz() {
    let mut specs = Vec::new();
    for a in 2..=10 {
        for b in 2..=10 {
            for alpha in 1..a {
                for beta in 1..b {
                    specs.push(spec(&[a, b], &[alpha, beta]));
                }
            }
        }
    }
    let failures: Vec<String> = Execution::Parallel
        .map(&specs, |s| {
            let r =
                lefschetz_report_with(&s.to_ideal(), &LinearForm::AllOnes, Execution::Sequential)
                    .unwrap();
            (!r.slp).then(|| s.to_string())
        })
        .into_iter()
        .flatten()
        .collect();
    assert!(failures.is_empty(), "{failures:?}");
}

#[test]
fn three_variables_with_square_have_slp() {
    for a in 2..=6 {
        for b in 2..=6 {
            for alpha in 1..a {
                for beta in 1..b {
                    let s = spec(&[a, b, 2], &[alpha, beta, 0]);
                    assert!(failing_cells(&s).is_empty(), "{s}");
                }
            }
        }
    }
}

/// Normalized `(a, b, alpha, beta)` whose two-variable series is not almost
/// centered.
fn not_almost_centered(max: u32) -> Vec<(u32, u32, u32, u32)> {
    let mut out = Vec::new();
    for a in 2..=max {
        for b in 2..=max {
            for alpha in 1..a {
                for beta in 1..b {
                    if a + beta <= b + alpha
                        && !two_var_profile(a, b, alpha, beta).unwrap().almost_centered
                    {
                        out.push((a, b, alpha, beta));
                    }
                }
            }
        }
    }
    out
}

#[test]
fn three_variable_failure_witnesses() {
    let cases = not_almost_centered(7);
    assert!(!cases.is_empty());
    for (a, b, alpha, beta) in cases {
        for c in 3..=4u32 {
            let s = spec(&[a, b, c], &[alpha, beta, 0]);
            let (i, t) = if b >= a + beta + 2 {
                (alpha, a + beta + c - alpha - 2)
            } else {
                let i = b + alpha - a - beta + 2;
                (i, (a + beta - 3 - i) + c - 1)
            };
            let cells = failing_cells(&s);
            assert!(
                cells.contains(&(i as usize, t as usize)),
                "{s}: expected ({i},{t}) in {cells:?}"
            );
        }
    }
}

#[test]
fn four_variable_failure_witnesses() {
    for (a, b, alpha, beta) in not_almost_centered(6) {
        let s = spec(&[a, b, 2, 2], &[alpha, beta, 0, 0]);
        let (i, t) = if b >= a + beta + 2 {
            (alpha, a + beta - alpha + 1)
        } else {
            let i = b + alpha - a - beta + 2;
            (i, a + beta - 1 - i)
        };
        let cells = failing_cells(&s);
        assert!(
            cells.contains(&(i as usize, t as usize)),
            "{s}: expected ({i},{t}) in {cells:?}"
        );
    }
}

#[test]
fn recursion_never_conflicts_for_symmetric_unimodal() {
    let mut checked = 0;
    for a in 2..=6u32 {
        for b in 2..=8u32 {
            for alpha in 1..a {
                for beta in 1..b {
                    let hb = spec(&[a, b], &[alpha, beta]).hilbert_series();
                    let c = hb.coeffs();
                    if !(c.iter().eq(c.iter().rev()) && is_unimodal(&hb)) {
                        continue;
                    }
                    checked += 1;
                    for d in 1..=5 {
                        for i in 0..=(c.len() as i64 + d as i64) {
                            for t in 0..=(c.len() as i64 + d as i64) {
                                assert_eq!(
                                    recursion_full_rank(&hb, d, i, t).unwrap(),
                                    RecursionVerdict::FullRank,
                                    "{hb}, d={d}, i={i}, t={t}"
                                );
                            }
                        }
                    }
                }
            }
        }
    }
    assert!(checked > 10);
}

#[test]
fn recursion_worked_example() {
    let hb = HilbertSeries::from_coeffs(vec![1, 2, 1, 1, 1]);
    assert!(!is_almost_centered(&hb).unwrap());
    assert_eq!(
        recursion_full_rank(&hb, 3, 1, 3).unwrap(),
        RecursionVerdict::NotFullRank
    );
    let a = spec(&[2, 5, 3], &[1, 1, 0]);
    assert!(failing_cells(&a).contains(&(1, 3)));
}

#[test]
fn random_forms_agree_with_all_ones() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let specs = [
        spec(&[3, 3, 3], &[1, 1, 1]),
        spec(&[2, 3, 4, 5], &[1, 1, 1, 1]),
        spec(&[4, 6, 3], &[2, 4, 0]),
        spec(&[2, 5, 3], &[1, 1, 0]),
        spec(&[3, 4, 2], &[1, 2, 1]),
    ];
    for s in &specs {
        let ideal: MonomialIdeal = s.to_ideal();
        let base = lefschetz_report(&ideal).unwrap();
        for _ in 0..3 {
            let form =
                LinearForm::Coefficients((0..s.n()).map(|_| rng.gen_range(1..=20)).collect());
            let r = lefschetz_report_with(&ideal, &form, Execution::Sequential).unwrap();
            assert_eq!((r.wlp, r.slp), (base.wlp, base.slp), "{s} with {form:?}");
        }
    }
}

#[test]
fn sequential_and_parallel_reports_match() {
    let ideal = parse_ideal("x1^4, x2^6, x3^3, x4^2, x1^2*x2^4").unwrap();
    let seq = lefschetz_report_with(&ideal, &LinearForm::AllOnes, Execution::Sequential).unwrap();
    let par = lefschetz_report_with(&ideal, &LinearForm::AllOnes, Execution::Parallel).unwrap();
    assert_eq!(seq, par);
}

#[test]
fn report_json_shape() {
    let r = lefschetz_report(&parse_ideal("x1^3, x2^3, x3^3, x1*x2*x3").unwrap()).unwrap();
    let v = serde_json::to_value(&r).unwrap();
    assert_eq!(v["wlp"], false);
    assert_eq!(v["linear_form"], "all_ones");
    assert!(v["witnesses"]
        .as_array()
        .unwrap()
        .contains(&serde_json::json!([2, 1])));
    assert_eq!(v["maps"][0]["reason"], "INJECTIVE");
    let back: lefschetz_core::LefschetzReport = serde_json::from_value(v).unwrap();
    assert_eq!(back, r);
}

#[test]
fn big_entries_still_exact() {
    // l^12 on a complete intersection: multinomials up to 12!/(4!4!4!)
    let ideal = parse_ideal("x1^9, x2^9, x3^9").unwrap();
    let m = multiplication_matrix(&ideal, 6, 12).unwrap();
    assert!((0..m.rows()).any(|r| m
        .row(r)
        .iter()
        .any(|x| *x > num_bigint::BigInt::from(30000))));
    assert_eq!(matrix_rank(&m), rational_rank(&m));
}
