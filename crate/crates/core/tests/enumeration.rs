use num_bigint::BigUint;
use proptest::prelude::*;

use lattice_growth::enumeration::{
    count_animals, enumerate_oracle, for_each_animal, ratio_histogram, AnimalKind, EnumConfig, Rooting,
};

fn fast(d: usize, n_max: usize, kind: AnimalKind) -> lattice_growth::enumeration::CountResult {
    count_animals(d, n_max, kind, &EnumConfig::default()).unwrap()
}

#[test]
fn fast_matches_oracle_on_small_sizes() {
    for kind in AnimalKind::ALL {
        let dims: &[(usize, usize)] = if kind == AnimalKind::Interface2d { &[(2, 6)] } else { &[(2, 6), (3, 4), (4, 3)] };
        for &(d, n_max) in dims {
            let r = fast(d, n_max, kind);
            for n in 1..=n_max {
                for rooting in [Rooting::Lexmin, Rooting::Origin] {
                    let want = enumerate_oracle(d, n, kind, rooting).unwrap().len();
                    assert_eq!(r.counts(rooting).at(n), &BigUint::from(want), "d={d} {kind} {rooting} n={n}");
                }
            }
        }
    }
}

#[test]
fn known_small_values() {
    // fixed polyominoes, polycubes and 2D bond animals
    let site2: Vec<u32> = vec![1, 2, 6, 19, 63, 216, 760, 2725, 9910, 36446];
    assert_eq!(fast(2, 10, AnimalKind::Site).lexmin, site2.into_iter().map(BigUint::from).collect::<Vec<_>>());
    let site3: Vec<u32> = vec![1, 3, 15, 86, 534, 3481];
    assert_eq!(fast(3, 6, AnimalKind::Site).lexmin, site3.into_iter().map(BigUint::from).collect::<Vec<_>>());
    let bond2: Vec<u32> = vec![2, 6, 22, 88, 372, 1628];
    assert_eq!(fast(2, 6, AnimalKind::Bond).lexmin, bond2.into_iter().map(BigUint::from).collect::<Vec<_>>());
}

#[test]
fn trees_differ_from_bond_animals_by_the_unit_square() {
    let trees = fast(2, 4, AnimalKind::Tree).lexmin;
    let bonds = fast(2, 4, AnimalKind::Bond).lexmin;
    assert_eq!(trees[2], bonds[2]);
    assert_eq!(&trees[3] + 1u32, bonds[3]);
}

#[test]
fn family_ordering_and_monotonicity() {
    let n_max = 8;
    let t = fast(2, n_max, AnimalKind::Tree).lexmin;
    let i = fast(2, n_max, AnimalKind::Interface2d).lexmin;
    let b = fast(2, n_max, AnimalKind::Bond).lexmin;
    for n in 0..n_max {
        assert!(t[n] <= i[n] && i[n] <= b[n], "n={}", n + 1);
    }
    for kind in AnimalKind::ALL {
        let c = fast(2, 8, kind).lexmin;
        assert!(c.windows(2).all(|w| w[0] <= w[1]), "{kind}");
    }
}

#[test]
fn origin_counts_weight_by_size() {
    for d in 2..=3 {
        let r = fast(d, 5, AnimalKind::Site);
        for n in 1..=5 {
            assert_eq!(r.origin[n - 1], &r.lexmin[n - 1] * BigUint::from(n));
        }
    }
}

#[test]
fn visitor_sees_every_counted_animal_once() {
    let r = fast(3, 4, AnimalKind::Tree);
    let mut seen = std::collections::BTreeSet::new();
    for_each_animal(3, 4, AnimalKind::Tree, &EnumConfig::default(), |x| {
        assert!(x.is_lexmin_rooted());
        assert!(seen.insert(x.clone()), "duplicate {x:?}");
    })
    .unwrap();
    let total: BigUint = r.lexmin.iter().sum();
    assert_eq!(BigUint::from(seen.len()), total);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn thread_and_split_choices_do_not_change_counts(
        kind_idx in 0usize..4,
        threads in 1usize..5,
        split in 0usize..7,
    ) {
        let kind = AnimalKind::ALL[kind_idx];
        let cfg = EnumConfig { node_budget: None, threads, split_depth: split };
        let got = count_animals(2, 7, kind, &cfg).unwrap();
        let serial = count_animals(2, 7, kind, &EnumConfig::serial()).unwrap();
        prop_assert_eq!(got.lexmin, serial.lexmin);
        prop_assert_eq!(got.origin, serial.origin);
    }

    #[test]
    fn histogram_bins_partition_the_count(
        kind_idx in 0usize..4,
        n in 1usize..7,
        eps in 0.01f64..1.0,
    ) {
        let kind = AnimalKind::ALL[kind_idx];
        let h = ratio_histogram(2, n, kind, eps, &EnumConfig::default()).unwrap();
        let total = fast(2, n, kind).lexmin[n - 1].clone();
        prop_assert_eq!(h.total(), total.clone());
        prop_assert_eq!(h.by_boundary.values().sum::<BigUint>(), total);
    }
}
