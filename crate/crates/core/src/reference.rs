//! Independent reference constructions used to cross-check the fast paths.
//!
//! None of these share code with the matrix enumerator or Brocot's table:
//! they rebuild the trees from their textbook definitions.

use num_traits::Zero;

use crate::rational::{mediant, Fraction, Rational};
use crate::Natural;

/// Stern-Brocot levels `0..=depth` by repeated mediant insertion.
///
/// Starts from the array `0/1, 1/0`; the fractions inserted in round `k + 1`
/// form level `k`.
pub fn mediant_insertion_levels(depth: u32) -> Vec<Vec<Rational>> {
    let mut row = vec![Fraction::new(0u32, 1u32), Fraction::new(1u32, 0u32)];
    let mut levels = Vec::new();
    for _ in 0..=depth {
        let mut next = Vec::with_capacity(2 * row.len() - 1);
        let mut inserted = Vec::new();
        for pair in row.windows(2) {
            next.push(pair[0].clone());
            let m = mediant(&pair[0], &pair[1]);
            inserted.push(m.clone());
            next.push(m);
        }
        next.push(row.last().cloned().expect("row is never empty"));
        levels.push(
            inserted
                .into_iter()
                .map(|f| Rational::new(f.num, f.den).expect("mediants of neighbours are reduced"))
                .collect(),
        );
        row = next;
    }
    levels
}

/// Eisenstein-Stern levels `0..=depth` by breadth-first expansion from `1/1`
/// with children `a/(a+b)` and `(a+b)/b`.
pub fn child_rule_levels(depth: u32) -> Vec<Vec<Rational>> {
    let mut levels = vec![vec![(Natural::from(1u32), Natural::from(1u32))]];
    for _ in 0..depth {
        let prev = levels.last().expect("at least the root");
        let next = prev
            .iter()
            .flat_map(|(a, b)| {
                let s = a + b;
                [(a.clone(), s.clone()), (s, b.clone())]
            })
            .collect();
        levels.push(next);
    }
    levels
        .into_iter()
        .map(|level| {
            level
                .into_iter()
                .map(|(a, b)| Rational::new(a, b).expect("child rules preserve coprimality"))
                .collect()
        })
        .collect()
}

/// Partial quotients `[a0; a1, ..., ak]` of `n/d`, by repeated division.
pub fn continued_fraction(n: &Natural, d: &Natural) -> Vec<Natural> {
    let (mut a, mut b) = (n.clone(), d.clone());
    let mut quotients = Vec::new();
    while !b.is_zero() {
        quotients.push(&a / &b);
        let r = &a % &b;
        a = b;
        b = r;
    }
    quotients
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: u64, d: u64) -> Rational {
        Rational::from_u64(n, d).unwrap()
    }

    #[test]
    fn mediant_levels_small() {
        let levels = mediant_insertion_levels(2);
        assert_eq!(levels[0], vec![r(1, 1)]);
        assert_eq!(levels[1], vec![r(1, 2), r(2, 1)]);
        assert_eq!(levels[2], vec![r(1, 3), r(2, 3), r(3, 2), r(3, 1)]);
    }

    #[test]
    fn child_levels_small() {
        let levels = child_rule_levels(2);
        assert_eq!(levels[2], vec![r(1, 3), r(3, 2), r(2, 3), r(3, 1)]);
    }

    #[test]
    fn continued_fraction_of_191_23() {
        let cf = continued_fraction(&191u32.into(), &23u32.into());
        assert_eq!(cf, [8u32, 3, 3, 2].map(Natural::from).to_vec());
    }
}
