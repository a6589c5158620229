use std::collections::HashSet;

use euclid_alg::matrix::{
    bezout, euclid_matrix, euclid_matrix_transposed, lr_order_lt, ColVec, LRWord, Letter, Mat2,
    RowVec,
};
use euclid_alg::{Integer, Natural};
use num_traits::One;
use proptest::prelude::*;

fn nat(v: u64) -> Natural {
    Natural::from(v)
}

fn word_strategy(max_len: usize) -> impl Strategy<Value = LRWord> {
    prop::collection::vec(prop_oneof![Just(Letter::L), Just(Letter::R)], 0..=max_len)
        .prop_map(|letters| LRWord::from_letters(&letters))
}

fn all_words(max_len: usize) -> Vec<LRWord> {
    let mut words = vec![LRWord::empty()];
    let mut frontier = vec![LRWord::empty()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &frontier {
            for letter in [Letter::L, Letter::R] {
                let mut child = w.clone();
                child.push(letter);
                next.push(child);
            }
        }
        words.extend(next.iter().cloned());
        frontier = next;
    }
    words
}

proptest! {
    #[test]
    fn binary_search_property(x in word_strategy(12), y in word_strategy(12), z in word_strategy(12)) {
        let left = x.concat(&LRWord::from_letters(&[Letter::L])).concat(&y);
        let right = x.concat(&LRWord::from_letters(&[Letter::R])).concat(&z);
        prop_assert!(lr_order_lt(&left, &x), "{} !< {}", left, x);
        prop_assert!(lr_order_lt(&x, &right), "{} !< {}", x, right);
        prop_assert!(!lr_order_lt(&x, &x));
    }

    #[test]
    fn lr_products_have_unit_determinant(w in word_strategy(40)) {
        prop_assert_eq!(w.matrix().det(), Integer::one());
        prop_assert!(w.matrix().is_lr_product());
    }

    #[test]
    fn mat_mul_is_associative(
        a in word_strategy(8), b in word_strategy(8), c in word_strategy(8),
    ) {
        let (a, b, c) = (a.matrix(), b.matrix(), c.matrix());
        prop_assert_eq!(&(a * b) * c, a * &(b * c));
    }

    #[test]
    fn word_of_ratio_round_trips(m in 1u64..5_000, n in 1u64..5_000) {
        let w = LRWord::of_ratio(&nat(m), &nat(n)).unwrap();
        let (g, d) = euclid_matrix(&nat(m), &nat(n)).unwrap();
        prop_assert_eq!(w.matrix(), &d);
        let sums = d.column_sums();
        prop_assert_eq!(sums, RowVec(Integer::from(m / u64::try_from(&g).unwrap()), Integer::from(n / u64::try_from(&g).unwrap())));
    }
}

#[test]
fn short_words_have_distinct_matrices() {
    let words = all_words(10);
    assert_eq!(words.len(), (1 << 11) - 1);
    let distinct: HashSet<Mat2> = words.iter().map(|w| w.matrix().clone()).collect();
    assert_eq!(distinct.len(), words.len());
}

#[test]
fn euclid_matrix_postconditions() {
    for m in 1..=256u64 {
        for n in 1..=256u64 {
            let (g, d) = euclid_matrix(&nat(m), &nat(n)).unwrap();
            let g64 = u64::try_from(&g).unwrap();
            assert_eq!(g64, euclid_alg::gcd::gcd_oracle(m, n));
            let gi = Integer::from(g.clone());
            assert_eq!(&RowVec(gi.clone(), gi) * &d, RowVec(m.into(), n.into()));
            assert_eq!(d.column_sums(), RowVec((m / g64).into(), (n / g64).into()));
            assert!(d.is_lr_product());
        }
    }
}

#[test]
fn bezout_certificates() {
    for m in 0..=256u64 {
        for n in 0..=256u64 {
            if m == 0 && n == 0 {
                assert!(bezout(&nat(0), &nat(0)).is_err());
                continue;
            }
            let cert = bezout(&nat(m), &nat(n)).unwrap();
            assert!(cert.certifies(&nat(m), &nat(n)), "({m}, {n}) -> {cert:?}");
        }
    }
}

#[test]
fn transposed_variant_is_the_transpose() {
    for m in 1..=64u64 {
        for n in 1..=64u64 {
            let (g, d) = euclid_matrix(&nat(m), &nat(n)).unwrap();
            let (g2, e) = euclid_matrix_transposed(&nat(m), &nat(n)).unwrap();
            assert_eq!(g, g2);
            assert_eq!(e, d.transpose());
            let g64 = u64::try_from(&g).unwrap();
            let ones = ColVec(Integer::one(), Integer::one());
            assert_eq!(&e * &ones, ColVec((m / g64).into(), (n / g64).into()));
        }
    }
}
