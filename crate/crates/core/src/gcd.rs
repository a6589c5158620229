//! The division relation and Euclid's algorithm.
//!
//! [`gcd_subtractive`] is the reference semantics: the guarded loop
//! `do y < x -> x := x - y [] x < y -> y := y - x od` with invariant
//! "common divisors of (x, y) are the common divisors of (m, n)" and bound
//! function `x + y`. [`gcd`] is the remainder-based variant of the same loop
//! and is property-tested equal to it.

use num_traits::Zero;

use crate::{Error, Integer, Natural, Result};

/// Default cap on `m + n` for [`gcd_traced`].
pub const DEFAULT_TRACE_CAP: u64 = 1_000_000;

/// `m \ n`: true iff `n = k * m` for some integer `k`.
///
/// Every integer divides 0, and 0 divides only 0.
pub fn divides(m: &Integer, n: &Integer) -> bool {
    if m.is_zero() {
        n.is_zero()
    } else {
        (n % m).is_zero()
    }
}

/// [`divides`] restricted to naturals.
pub fn divides_nat(m: &Natural, n: &Natural) -> bool {
    if m.is_zero() {
        n.is_zero()
    } else {
        (n % m).is_zero()
    }
}

/// Greatest common divisor, `gcd(m, 0) = m` and `gcd(0, 0) = 0`.
pub fn gcd(m: &Natural, n: &Natural) -> Natural {
    let (mut x, mut y) = (m.clone(), n.clone());
    while !y.is_zero() {
        let r = &x % &y;
        x = y;
        y = r;
    }
    x
}

/// gcd over the integers, normalising signs first since `(-m) gcd n = m gcd n`.
pub fn gcd_int(m: &Integer, n: &Integer) -> Natural {
    gcd(m.magnitude(), n.magnitude())
}

/// Euclid's subtractive algorithm, total on naturals.
///
/// When either argument is 0 the loop is never entered; the result is the
/// other argument.
pub fn gcd_subtractive(m: &Natural, n: &Natural) -> Natural {
    if m.is_zero() {
        return n.clone();
    }
    if n.is_zero() {
        return m.clone();
    }
    let (mut x, mut y) = (m.clone(), n.clone());
    loop {
        if y < x {
            x -= &y;
        } else if x < y {
            y -= &x;
        } else {
            return x;
        }
    }
}

/// The states visited by the subtractive loop.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GcdTrace {
    pub steps: Vec<(Natural, Natural)>,
    pub result: Natural,
}

impl GcdTrace {
    /// `x + y` at every step; strictly decreasing.
    pub fn bound_values(&self) -> impl Iterator<Item = Natural> + '_ {
        self.steps.iter().map(|(x, y)| x + y)
    }
}

/// Runs the subtractive loop from `(m, n)` and records every state.
///
/// Requires `m > 0` and `n > 0`, and `m + n <= DEFAULT_TRACE_CAP`.
pub fn gcd_traced(m: &Natural, n: &Natural) -> Result<GcdTrace> {
    gcd_traced_with_cap(m, n, DEFAULT_TRACE_CAP)
}

/// [`gcd_traced`] with an explicit cap on `m + n`, which bounds the number of
/// recorded steps.
pub fn gcd_traced_with_cap(m: &Natural, n: &Natural, cap: u64) -> Result<GcdTrace> {
    if m.is_zero() || n.is_zero() {
        return Err(Error::NonPositiveInput);
    }
    if m + n > Natural::from(cap) {
        return Err(Error::TraceTooLong {
            m: m.clone(),
            n: n.clone(),
            cap,
        });
    }
    let (mut x, mut y) = (m.clone(), n.clone());
    let mut steps = vec![(x.clone(), y.clone())];
    while x != y {
        if y < x {
            x -= &y;
        } else {
            y -= &x;
        }
        steps.push((x.clone(), y.clone()));
    }
    Ok(GcdTrace { steps, result: x })
}

/// Trial-division oracle: the largest `d <= max(m, n)` dividing both.
///
/// Independent of the loop-based implementations; intended for exhaustive
/// checks on small ranges. `gcd_oracle(0, 0) = 0`.
pub fn gcd_oracle(m: u64, n: u64) -> u64 {
    (1..=m.max(n))
        .rev()
        .find(|d| m.is_multiple_of(*d) && n.is_multiple_of(*d))
        .unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nat(v: u64) -> Natural {
        Natural::from(v)
    }

    fn int(v: i64) -> Integer {
        Integer::from(v)
    }

    #[test]
    fn divides_examples() {
        assert!(divides(&int(3), &int(12)));
        assert!(divides(&int(5), &int(0)));
        assert!(!divides(&int(0), &int(7)));
        assert!(divides(&int(0), &int(0)));
        assert!(divides(&int(-3), &int(12)));
        assert!(!divides(&int(5), &int(12)));
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(gcd(&nat(3), &nat(5)), nat(1));
        assert_eq!(gcd(&nat(12), &nat(18)), nat(6));
        for m in [0u64, 1, 7, 100] {
            assert_eq!(gcd(&nat(m), &nat(0)), nat(m));
            assert_eq!(gcd(&nat(m), &nat(m)), nat(m));
        }
        assert_eq!(gcd(&nat(0), &nat(0)), nat(0));
    }

    #[test]
    fn gcd_int_ignores_signs() {
        assert_eq!(gcd_int(&int(-12), &int(18)), nat(6));
        assert_eq!(gcd_int(&int(-12), &int(-18)), nat(6));
        assert_eq!(gcd_int(&int(0), &int(-9)), nat(9));
    }

    #[test]
    fn traced_examples() {
        let t = gcd_traced(&nat(2), &nat(3)).unwrap();
        assert_eq!(
            t.steps,
            vec![(nat(2), nat(3)), (nat(2), nat(1)), (nat(1), nat(1))]
        );
        assert_eq!(t.result, nat(1));

        let t = gcd_traced(&nat(4), &nat(4)).unwrap();
        assert_eq!(t.steps, vec![(nat(4), nat(4))]);
        assert_eq!(t.result, nat(4));

        let t = gcd_traced(&nat(6), &nat(4)).unwrap();
        assert_eq!(t.result, nat(2));
        let bounds: Vec<_> = t.bound_values().collect();
        assert!(bounds.windows(2).all(|w| w[1] < w[0]));
    }

    #[test]
    fn traced_rejects_zero() {
        assert_eq!(gcd_traced(&nat(0), &nat(3)), Err(Error::NonPositiveInput));
        assert_eq!(gcd_traced(&nat(3), &nat(0)), Err(Error::NonPositiveInput));
        assert_eq!(
            Error::NonPositiveInput.to_string(),
            "subtractive loop requires positive inputs"
        );
    }

    #[test]
    fn traced_respects_cap() {
        assert!(gcd_traced_with_cap(&nat(10), &nat(10), 20).is_ok());
        assert!(matches!(
            gcd_traced_with_cap(&nat(10), &nat(11), 20),
            Err(Error::TraceTooLong { cap: 20, .. })
        ));
        assert!(gcd_traced(&nat(1), &nat(DEFAULT_TRACE_CAP)).is_err());
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(gcd_oracle(12, 18), 6);
        assert_eq!(gcd_oracle(1, 97), 1);
        assert_eq!(gcd_oracle(0, 9), 9);
        assert_eq!(gcd_oracle(0, 0), 0);
    }

    #[test]
    fn subtractive_handles_zeros() {
        assert_eq!(gcd_subtractive(&nat(0), &nat(0)), nat(0));
        assert_eq!(gcd_subtractive(&nat(0), &nat(5)), nat(5));
        assert_eq!(gcd_subtractive(&nat(5), &nat(0)), nat(5));
    }
}
