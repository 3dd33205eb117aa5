use kron22::kron::{
    kron_from_reduced_general, kron_full, kron_full_with, kron_two_row, vanishing_by_conditions,
    vanishing_systems, ReducedEngine, VanishingSystem,
};
use kron22::oracle::Oracle;
use kron22::{part, IndexBox, KronError, KronIndex, Partition};
use proptest::prelude::*;

fn idx(a: [i64; 5]) -> KronIndex {
    KronIndex::from_array(a).unwrap()
}

#[test]
fn engines_agree_up_to_twelve() {
    let o = Oracle::default();
    let engines = [
        ReducedEngine::Count,
        ReducedEngine::default(),
        ReducedEngine::Oracle(&o),
    ];
    for i in IndexBox::up_to(12).indices() {
        let v: Vec<u64> = engines
            .iter()
            .map(|e| kron_two_row(&i, e).unwrap())
            .collect();
        assert!(v.windows(2).all(|w| w[0] == w[1]), "{i}: {v:?}");
    }
}

#[test]
fn swapping_mu_and_nu() {
    let e = ReducedEngine::default();
    for i in IndexBox::up_to(20).indices() {
        assert_eq!(
            kron_two_row(&i, &e).unwrap(),
            kron_two_row(&i.swapped(), &e).unwrap(),
            "{i}"
        );
    }
}

#[test]
fn vanishing_systems_imply_zero() {
    let e = ReducedEngine::default();
    for i in IndexBox::up_to(20).indices() {
        if vanishing_by_conditions(&i).unwrap() {
            assert_eq!(kron_two_row(&i, &e).unwrap(), 0, "{i}");
        }
    }
}

#[test]
fn vanishing_examples() {
    assert!(vanishing_systems(&idx([4, 2, 2, 1, 1]))
        .unwrap()
        .contains(&VanishingSystem::S1));
    assert!(!vanishing_by_conditions(&idx([2, 1, 1, 0, 0])).unwrap());
    assert_eq!(
        kron_two_row(&idx([2, 1, 1, 0, 0]), &ReducedEngine::Count).unwrap(),
        1
    );
    assert_eq!(
        kron_two_row(&idx([4, 2, 2, 1, 1]), &ReducedEngine::Count).unwrap(),
        0
    );
    // One odd and one even γ entry is not enough for the fifth system.
    assert!(vanishing_systems(&idx([4, 2, 1, 1, 0])).unwrap().is_empty());
    assert_eq!(
        kron_two_row(&idx([4, 2, 1, 1, 0]), &ReducedEngine::Count).unwrap(),
        1
    );
    assert!(matches!(
        vanishing_systems(&KronIndex {
            n: 3,
            r: 2,
            s: 0,
            g1: 0,
            g2: 0
        }),
        Err(KronError::InvalidKronIndex(_))
    ));
}

#[test]
fn general_reconstruction_matches_two_rows() {
    let o = Oracle::default();
    let e = ReducedEngine::default();
    for i in IndexBox::up_to(12).indices() {
        let (l, m, n) = i.partitions().unwrap();
        let general = kron_from_reduced_general(&l, &m, &n, 2, 2, &o).unwrap();
        assert_eq!(general, kron_two_row(&i, &e).unwrap(), "{i}");
    }
}

#[test]
fn full_examples() {
    assert_eq!(
        kron_full(&part![2, 2], &part![2, 2], &part![2, 2]).unwrap(),
        1
    );
    assert_eq!(kron_full(&part![2], &part![1, 1], &part![1, 1]).unwrap(), 1);
    assert_eq!(
        kron_full(&part![1, 1], &part![1, 1], &part![1, 1]).unwrap(),
        0
    );
    // λ4 too large for μ2: zero without reaching an engine.
    assert_eq!(
        kron_full(&part![1, 1, 1, 1], &part![3, 1], &part![2, 2]).unwrap(),
        0
    );
    assert!(matches!(
        kron_full(&part![2, 1, 1, 1, 1], &part![3, 3], &part![3, 3]),
        Err(KronError::InvalidTriple(_))
    ));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    /// Four-row λ against two two-row shapes: normalization plus the formula
    /// agrees with the character inner product.
    #[test]
    fn full_matches_the_oracle(n in 1u32..=12, pick in any::<[usize; 3]>()) {
        let all = Partition::all(n);
        let four: Vec<&Partition> = all.iter().filter(|p| p.length() <= 4).collect();
        let two: Vec<&Partition> = all.iter().filter(|p| p.length() <= 2).collect();
        let l = four[pick[0] % four.len()];
        let m = two[pick[1] % two.len()];
        let nu = two[pick[2] % two.len()];
        let o = Oracle::default();
        for e in [ReducedEngine::Count, ReducedEngine::default()] {
            prop_assert_eq!(kron_full_with(l, m, nu, &e).unwrap(), o.kron_oracle(l, m, nu).unwrap());
        }
    }
}
