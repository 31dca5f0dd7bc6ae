use std::collections::BTreeMap;

use num_bigint::BigInt;
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;

use injective_words::characters::{cycle_type, decompose, reconstruct};
use injective_words::combinatorics::{enumerate_partitions, Permutation, RankSet};
use injective_words::poset::{fixed_chain_count, InjectiveWordPoset, DEFAULT_BUDGET};

fn random_permutation(n: usize, seed: u64) -> Permutation {
    let mut rng = rand::rngs::StdRng::seed_from_u64(seed);
    let mut images: Vec<usize> = (1..=n).collect();
    images.shuffle(&mut rng);
    Permutation::new(images).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn decompose_inverts_reconstruct(n in 1usize..=5, coeffs in proptest::collection::vec(-20i64..=20, 7)) {
        let shapes = enumerate_partitions(n);
        let multiplicities: BTreeMap<_, _> = shapes
            .iter()
            .cloned()
            .zip(coeffs.iter().map(|&c| BigInt::from(c)))
            .filter(|(_, c)| *c != BigInt::from(0))
            .collect();
        let f = reconstruct(n, &multiplicities).unwrap();
        prop_assert_eq!(decompose(&f).unwrap(), multiplicities);
    }

    #[test]
    fn fixed_chain_counts_are_class_functions(
        n in 1usize..=4,
        r in 1usize..=2,
        mask in 0u64..16,
        g_seed in any::<u64>(),
        h_seed in any::<u64>(),
    ) {
        let poset = InjectiveWordPoset::build(n, r, DEFAULT_BUDGET).unwrap();
        let s = RankSet::from_mask(mask & ((1 << n) - 1));
        let g = random_permutation(n, g_seed);
        let h = random_permutation(n, h_seed);
        let conjugate = h.compose(&g).compose(&h.inverse());
        prop_assert_eq!(cycle_type(&conjugate), cycle_type(&g));
        prop_assert_eq!(
            fixed_chain_count(&poset, &s, &g).unwrap(),
            fixed_chain_count(&poset, &s, &conjugate).unwrap()
        );
        let rep = cycle_type(&g).representative();
        prop_assert_eq!(
            fixed_chain_count(&poset, &s, &g).unwrap(),
            fixed_chain_count(&poset, &s, &rep).unwrap()
        );
    }
}

#[test]
fn fixed_chain_counts_are_class_functions_n5() {
    let poset = InjectiveWordPoset::build(5, 1, DEFAULT_BUDGET).unwrap();
    for (seed, mask) in [(1u64, 0b11111u64), (2, 0b10101), (3, 0b01110), (4, 0b10000)] {
        let s = RankSet::from_mask(mask);
        let g = random_permutation(5, seed);
        let h = random_permutation(5, seed + 100);
        let conjugate = h.compose(&g).compose(&h.inverse());
        assert_eq!(
            fixed_chain_count(&poset, &s, &g).unwrap(),
            fixed_chain_count(&poset, &s, &conjugate).unwrap()
        );
    }
}
