use kron22::chambers::reduced_kron_fast;
use kron22::kron::{vanishing_by_conditions, VanishingSystem};
use kron22::oracle::Oracle;
use kron22::polygon::reduced_kron_count;
use kron22::stretch::{
    find_sh_counterexamples, fit_quasipolynomial, stretch_samples, FitError, StretchProfile,
};
use kron22::{IndexBox, KronIndex, ReducedIndex};
use proptest::prelude::*;

#[test]
fn trivial_stretch() {
    let i = KronIndex::new(2, 1, 1, 0, 0).unwrap();
    let samples = stretch_samples(&i, 4).unwrap();
    assert_eq!(samples, vec![(1, 1), (2, 1), (3, 1), (4, 1)]);
}

#[test]
fn reduced_values_along_a_ray() {
    let mut samples = Vec::new();
    for n in 1..=6i64 {
        let h = [13, 8, 10, 6].map(|x| n * x);
        let by_count = reduced_kron_count(ReducedIndex::from_point(h).unwrap()).unwrap();
        assert_eq!(by_count, reduced_kron_fast(h).unwrap());
        assert_eq!(by_count as i64, (2 * n + 1) * (n + 1));
        samples.push((n as u64, by_count));
    }
    let f = fit_quasipolynomial(&samples, 2, 2).unwrap();
    assert!(f.is_polynomial());
    assert_eq!(f.to_string(), "2N^2 + 3N + 1");
}

#[test]
fn fits_of_oracle_samples_show_the_saturation_failure() {
    let o = Oracle::default();
    let i = KronIndex::new(12, 5, 6, 4, 2).unwrap();
    let samples: Vec<(u64, u64)> = (1..=8u64)
        .map(|k| {
            let (l, m, n) = i.scaled(k as i64).partitions().unwrap();
            (k, o.kron_oracle(&l, &m, &n).unwrap())
        })
        .collect();
    assert_eq!(samples, stretch_samples(&i, 8).unwrap());
    let f = fit_quasipolynomial(&samples, 2, 2).unwrap();
    assert!(!f.is_polynomial());
    assert_eq!(f.eval_integer(1), Some(0));
    assert_eq!(f.eval_integer(0), Some(1));
    assert!(f.eval_integer(3).unwrap() > 0);
}

#[test]
fn fit_needs_three_samples_per_class() {
    let err = fit_quasipolynomial(&[(1, 1), (2, 1), (3, 1), (4, 1)], 2, 2).unwrap_err();
    assert!(matches!(err, FitError::TooFewSamples { class: 0, .. }));
}

#[test]
fn counterexamples_up_to_twelve() {
    let o = Oracle::default();
    let certs = find_sh_counterexamples(&IndexBox::up_to(12), &o).unwrap();
    let found: Vec<[i64; 5]> = certs.iter().map(|c| c.index.to_array()).collect();
    assert_eq!(found, vec![[12, 5, 6, 4, 2], [12, 6, 5, 4, 2]]);
    for c in &certs {
        assert_eq!(c.systems, vec![VanishingSystem::S5]);
        assert!(vanishing_by_conditions(&c.index).unwrap());
        assert_eq!((c.at_1.engine, c.at_1.oracle), (0, 0));
        assert!(c.at_2.oracle > 0 && c.odd_witness.oracle > 0);
        let line = c.to_json_line();
        let back: kron22::stretch::ShCertificate = serde_json::from_str(&line).unwrap();
        assert_eq!(&back, c);
    }
}

#[test]
fn no_counterexamples_on_the_diagonal() {
    let o = Oracle::default();
    for r in 0..=8 {
        let bx = IndexBox {
            r: r..=r,
            s: r..=r,
            ..IndexBox::up_to(16)
        };
        assert!(find_sh_counterexamples(&bx, &o).unwrap().is_empty());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn stretching_is_a_quasipolynomial(pick in any::<usize>()) {
        let all = IndexBox::up_to(10).indices();
        let i = all[pick % all.len()];
        let p = StretchProfile::compute(&i, 12).unwrap();
        let more = stretch_samples(&i, 14).unwrap();
        for &(n, v) in &more[12..] {
            prop_assert_eq!(p.predict(n), Some(v as i128));
        }
        let at0 = p.fitted.eval_integer(0);
        if p.fitted.is_zero() {
            prop_assert_eq!(at0, Some(0));
        } else {
            prop_assert_eq!(at0, Some(1));
        }
    }
}
