//! Acceptance suite: one test per criterion, each printing a PASS line with
//! the extent of what was checked. Run with `cargo test --test acceptance`
//! (add `-- --nocapture` to see the lines).

use nonres::closed_form::{self, MDiscParams};
use nonres::oracle::{self, in_resultant_variety, winding_index, witness_system};
use nonres::spectral;
use nonres::{DegreeProfile, FinAbGroup, GradedGroup};

/// Every profile with `1 <= n <= max_n` forms and `1 <= d_n <= ... <= d1 <= max_d`.
fn all_profiles(max_n: usize, max_d: i64) -> Vec<DegreeProfile> {
    let mut out = Vec::new();
    let mut stack: Vec<Vec<i64>> = (1..=max_d).map(|d| vec![d]).collect();
    while let Some(degs) = stack.pop() {
        out.push(DegreeProfile::new(degs.iter().copied()).unwrap());
        if degs.len() < max_n {
            let last = *degs.last().unwrap();
            for next in 1..=last {
                let mut longer = degs.clone();
                longer.push(next);
                stack.push(longer);
            }
        }
    }
    out
}

fn profiles_with_n(n: usize, max_d: i64) -> Vec<DegreeProfile> {
    all_profiles(n, max_d)
        .into_iter()
        .filter(|p| p.n() == n)
        .collect()
}

#[test]
fn criterion_1_real_equivalence() {
    let profiles = all_profiles(4, 8);
    for p in &profiles {
        let closed = closed_form::real_cohomology(p);
        let spectral = spectral::real_via_spectral(p);
        assert_eq!(
            closed.complement_empty, spectral.complement_empty,
            "emptiness disagrees for {p}"
        );
        assert_eq!(
            closed.reduced, spectral.reduced,
            "cohomology disagrees for {p}"
        );
        assert_eq!(
            closed.component_count, spectral.component_count,
            "component count disagrees for {p}"
        );
    }
    println!(
        "criterion 1 (real closed form == spectral pipeline, {} profiles, n <= 4, d <= 8): PASS",
        profiles.len()
    );
}

#[test]
fn criterion_2_complex_equivalence() {
    let mut checked = 0usize;
    for n in 2..=5 {
        for p in profiles_with_n(n, 8) {
            let closed = closed_form::complex_cohomology(&p).unwrap();
            let via_spectral = spectral::complex_via_spectral(&p).unwrap();
            assert_eq!(closed, via_spectral, "complex paths disagree for {p}");
            let n = n as u32;
            let expected = GradedGroup::new()
                .put(2 * n - 3, FinAbGroup::free(1))
                .put(2 * n - 1, FinAbGroup::free(1))
                .put(4 * n - 4, FinAbGroup::free(1));
            assert_eq!(closed, expected, "complex table wrong for {p}");
            checked += 1;
        }
    }
    println!(
        "criterion 2 (complex closed form == spectral pipeline, {checked} profiles, 2 <= n <= 5, d <= 8): PASS"
    );
}

fn run_census(d1: i64, d2: i64) -> oracle::ComponentReport {
    let p = DegreeProfile::new([d1, d2]).unwrap();
    oracle::component_census(&p, 42, 12, 2000).unwrap()
}

#[test]
fn criterion_3_same_parity_component_counts() {
    for (d1, d2) in [(2i64, 2i64), (3, 3), (4, 2), (5, 3), (6, 2)] {
        let report = run_census(d1, d2);
        assert_eq!(report.invariant_kind, oracle::InvariantKind::Winding);
        assert!(report.accepted_samples >= 2000);
        let legal = report.legal_values();
        assert_eq!(legal.len() as i64, d2 + 1, "legal class count for ({d1},{d2})");
        for value in report.observed.keys() {
            assert!(legal.contains(value), "illegal winding {value} for ({d1},{d2})");
        }
        assert_eq!(
            report.distinct_classes(),
            legal,
            "classes not all realized for ({d1},{d2})"
        );
        assert!(report.verify_witnesses(), "witness replay failed for ({d1},{d2})");
        assert!(report.matches_prediction(), "census mismatch for ({d1},{d2})");
        assert_eq!(report.predicted_b0 as i64, d2 + 1);
    }
    println!(
        "criterion 3 (same parity: d2+1 winding classes at 2000 samples, bound 12, seed 42, profiles (2,2),(3,3),(4,2),(5,3),(6,2)): PASS"
    );
}

#[test]
fn criterion_4_mixed_parity_component_counts() {
    for (d1, d2) in [(2i64, 1i64), (3, 2), (4, 3), (5, 2)] {
        let report = run_census(d1, d2);
        assert_eq!(report.invariant_kind, oracle::InvariantKind::Parity);
        assert_eq!(report.predicted_b0, 2);
        assert_eq!(
            report.distinct_classes(),
            [0i64, 1].into_iter().collect(),
            "parity classes for ({d1},{d2})"
        );
        assert!(report.verify_witnesses(), "witness replay failed for ({d1},{d2})");
        assert!(report.matches_prediction(), "census mismatch for ({d1},{d2})");
    }
    println!(
        "criterion 4 (mixed parity: 2 parity classes with verified witnesses, profiles (2,1),(3,2),(4,3),(5,2)): PASS"
    );
}

#[test]
fn criterion_5_single_form_cases() {
    for d in [4i64, 6] {
        let p = DegreeProfile::new([d]).unwrap();
        let report = oracle::component_census(&p, 42, 12, 500).unwrap();
        assert_eq!(report.invariant_kind, oracle::InvariantKind::Sign);
        assert_eq!(report.predicted_b0, 2);
        assert_eq!(
            report.distinct_classes(),
            [0i64, 1].into_iter().collect(),
            "sign classes for degree {d}"
        );
        assert!(report.matches_prediction(), "census mismatch for degree {d}");
    }
    for d in [3i64, 5] {
        let p = DegreeProfile::new([d]).unwrap();
        assert!(
            closed_form::real_cohomology(&p).complement_empty,
            "degree {d} complement should be empty"
        );
        assert_eq!(
            oracle::component_census(&p, 42, 12, 10).unwrap_err(),
            nonres::Error::EmptyComplement
        );
    }
    println!(
        "criterion 5 (single form: degrees 4,6 give two sign classes; degrees 3,5 flag an empty complement): PASS"
    );
}

#[test]
fn criterion_6_euler_characteristic_invariance() {
    // spot anchors first
    let p63 = DegreeProfile::new([6, 3]).unwrap();
    assert_eq!(spectral::build_real_e1(&p63).euler_char(), 1);
    assert_eq!(closed_form::real_cohomology(&p63).reduced.euler_char(), 1);
    assert_eq!(p63.total_dim(), 11);
    let p73 = DegreeProfile::new([7, 3]).unwrap();
    assert_eq!(spectral::build_real_e1(&p73).euler_char(), 1);
    assert_eq!(closed_form::real_cohomology(&p73).reduced.euler_char(), -1);
    assert_eq!(p73.total_dim(), 12);

    let profiles = all_profiles(4, 8);
    for p in &profiles {
        let page_euler = spectral::build_real_e1(p).euler_char();
        let closed = closed_form::real_cohomology(p);
        // an empty complement carries its single reduced class in degree -1
        let reduced_euler = if closed.complement_empty {
            -1
        } else {
            closed.reduced.euler_char()
        };
        let sign = if p.total_dim() % 2 == 1 { 1 } else { -1 };
        assert_eq!(
            page_euler,
            sign * reduced_euler,
            "Euler characteristic mismatch for {p} (D = {})",
            p.total_dim()
        );
    }
    println!(
        "criterion 6 (Euler characteristic of the first leaf matches the closed form across {} profiles): PASS",
        profiles.len()
    );
}

#[test]
fn criterion_7_m_discriminant_regimes() {
    fn large_regime(m: u32) -> GradedGroup {
        GradedGroup::new()
            .put(2 * m - 3, FinAbGroup::free(1))
            .put(2 * m - 1, FinAbGroup::free(1))
            .put(4 * m - 4, FinAbGroup::free(1))
    }
    fn small_regime(m: u32, d: u32) -> GradedGroup {
        GradedGroup::new()
            .put(2 * m - 3, FinAbGroup::free(1))
            .put(2 * m - 1, FinAbGroup::free(1))
            .put(2 * d - 2, FinAbGroup::free(1))
    }
    for m in 2u32..=4 {
        // both regime formulas agree at the boundary d = 2m - 1
        let boundary = 2 * m - 1;
        assert_eq!(
            small_regime(m, boundary),
            large_regime(m),
            "regime formulas disagree at d = 2m-1 for m = {m}"
        );
        for d in m..=12 {
            let got =
                closed_form::m_discriminant_cohomology(&MDiscParams::new(d.into(), m.into()).unwrap());
            let expected = if d >= 2 * m {
                large_regime(m)
            } else {
                small_regime(m, d)
            };
            assert_eq!(got, expected, "m-discriminant table wrong at d={d}, m={m}");
        }
    }
    println!(
        "criterion 7 (m-discriminant regimes agree at d = 2m-1 and match the table for m in 2..=4, d <= 12): PASS"
    );
}

#[test]
fn criterion_8_witness_round_trip() {
    let mut checked = 0usize;
    for d1 in 1u32..=7 {
        for d2 in 1..=d1.min(5) {
            if (d1 - d2) % 2 != 0 {
                continue;
            }
            let mut k = -i64::from(d2);
            while k <= i64::from(d2) {
                let w = witness_system(d1, d2, k).unwrap();
                assert!(
                    !in_resultant_variety(&w),
                    "witness ({d1},{d2},{k}) lies on the variety"
                );
                assert_eq!(
                    winding_index(w.form(0), w.form(1)).unwrap(),
                    k,
                    "winding mismatch for witness ({d1},{d2},{k})"
                );
                checked += 1;
                k += 2;
            }
        }
    }
    println!(
        "criterion 8 (witness round trip: winding(witness(d1,d2,k)) == k off the variety, {checked} cases, d1 <= 7, d2 <= 5): PASS"
    );
}
