//! Natural-valued functions that distribute over gcd.
//!
//! A sufficient condition: `f(0) = 0`, and for all positive `x, y` there are
//! integers `a, b` with `gcd(a, f(y)) = 1` and `f(x + y) = a*f(x) + b*f(y)`.
//! Fibonacci and `m -> k^m - 1` both satisfy it with explicit witnesses.

use std::fmt;

use num_traits::{One, Zero};

use crate::gcd::{divides_nat, gcd, gcd_int};
use crate::identities::IdentityReport;
use crate::{Error, Integer, Natural, Result};

type Eval = dyn Fn(u64) -> Natural + Send + Sync;

/// A named total function from indices to naturals.
pub struct NatFunction {
    name: String,
    eval: Box<Eval>,
}

impl NatFunction {
    pub fn new(
        name: impl Into<String>,
        eval: impl Fn(u64) -> Natural + Send + Sync + 'static,
    ) -> Self {
        NatFunction {
            name: name.into(),
            eval: Box::new(eval),
        }
    }

    pub fn fibonacci() -> Self {
        NatFunction::new("fib", fib)
    }

    /// `m -> k^m - 1`; `k` must be at least 1.
    pub fn mersenne(k: u64) -> Result<Self> {
        mersenne_gen(k, 0)?;
        Ok(NatFunction::new(format!("{k}^m-1"), move |m| {
            mersenne_gen(k, m).expect("base checked at construction")
        }))
    }

    /// `m -> c*m`
    pub fn scale(c: u64) -> Self {
        NatFunction::new(format!("{c}*m"), move |m| Natural::from(c) * m)
    }

    /// `m -> m + 1`, which does not distribute over gcd.
    pub fn successor() -> Self {
        NatFunction::new("m+1", |m| Natural::from(m) + 1u32)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn eval(&self, m: u64) -> Natural {
        (self.eval)(m)
    }

    /// `f(0)`; the lemma's condition covers zero arguments only when this is 0.
    pub fn at_zero(&self) -> Natural {
        self.eval(0)
    }
}

impl fmt::Debug for NatFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("NatFunction")
            .field("name", &self.name)
            .field("at_zero", &self.at_zero())
            .finish()
    }
}

/// `fib(0) = 0`, `fib(1) = 1`, `fib(k) = fib(k-1) + fib(k-2)`.
pub fn fib(k: u64) -> Natural {
    let (mut a, mut b) = (Natural::zero(), Natural::one());
    for _ in 0..k {
        let next = &a + &b;
        a = std::mem::replace(&mut b, next);
    }
    a
}

/// `k^m - 1`.
pub fn mersenne_gen(k: u64, m: u64) -> Result<Natural> {
    if k == 0 {
        return Err(Error::ZeroArgument { what: "base k" });
    }
    let exp = usize::try_from(m).expect("exponent fits in memory");
    Ok(num_traits::pow(Natural::from(k), exp) - 1u32)
}

/// Whether `fib(k)` divides `fib(n*k)`; always true for `k >= 1`.
pub fn fib_multiple_property(n: u64, k: u64) -> Result<bool> {
    if k == 0 {
        return Err(Error::ZeroArgument { what: "stride k" });
    }
    Ok(divides_nat(&fib(k), &fib(n * k)))
}

/// `f(gcd(m, n)) = gcd(f(m), f(n))` for all `0 <= m, n <= bound`.
pub fn distributes_over_gcd(f: &NatFunction, bound: u64) -> IdentityReport {
    let mut report = IdentityReport::new(format!("distributes[{}]", f.name()), bound);
    let values: Vec<Natural> = (0..=bound).map(|m| f.eval(m)).collect();
    for m in 0..=bound {
        for n in 0..=bound {
            let g = gcd(&m.into(), &n.into());
            let idx = usize::try_from(&g).expect("gcd is at most bound");
            let holds = values[idx] == gcd(&values[m as usize], &values[n as usize]);
            report.record(holds, || vec![m.into(), n.into()]);
        }
    }
    report
}

/// Checks the lemma's condition with caller-supplied witnesses.
///
/// For `1 <= x, y <= bound`, with `(a, b) = witness(x, y)`, verifies
/// `f(x + y) = a*f(x) + b*f(y)` and `gcd(|a|, f(y)) = 1`.
pub fn check_lemma_condition(
    f: &NatFunction,
    witness: impl Fn(u64, u64) -> (Integer, Integer),
    bound: u64,
) -> IdentityReport {
    let mut report = IdentityReport::new(format!("lemma[{}]", f.name()), bound);
    let values: Vec<Integer> = (0..=2 * bound).map(|m| Integer::from(f.eval(m))).collect();
    for x in 1..=bound {
        for y in 1..=bound {
            let (a, b) = witness(x, y);
            let (fx, fy, fxy) = (
                &values[x as usize],
                &values[y as usize],
                &values[(x + y) as usize],
            );
            let linear = *fxy == &a * fx + &b * fy;
            let coprime = gcd_int(&a, fy).is_one();
            report.record(linear && coprime, || vec![x.into(), y.into()]);
        }
    }
    report
}

/// Witness for Fibonacci: `fib(x+y) = fib(y-1)*fib(x) + fib(x+1)*fib(y)`.
pub fn fib_witness(x: u64, y: u64) -> (Integer, Integer) {
    (fib(y - 1).into(), fib(x + 1).into())
}

/// Witness for `k^m - 1`: `k^(x+y) - 1 = 1*(k^x - 1) + k^x*(k^y - 1)`.
pub fn mersenne_witness(k: u64) -> impl Fn(u64, u64) -> (Integer, Integer) {
    move |x, _| {
        let exp = usize::try_from(x).expect("exponent fits in memory");
        (Integer::one(), num_traits::pow(Integer::from(k), exp))
    }
}

/// Witness for any additive function: `f(x+y) = 1*f(x) + 1*f(y)`.
pub fn additive_witness(_: u64, _: u64) -> (Integer, Integer) {
    (Integer::one(), Integer::one())
}

/// The distributivity suite: Fibonacci, `k^m - 1` for `k` in {2, 3, 5}, and
/// scaling by 7, each checked directly and through the lemma's condition,
/// plus the Fibonacci multiples property.
pub fn distributivity_suite(bound: u64) -> Vec<IdentityReport> {
    let mut reports = Vec::new();
    let fibonacci = NatFunction::fibonacci();
    reports.push(distributes_over_gcd(&fibonacci, bound));
    reports.push(check_lemma_condition(&fibonacci, fib_witness, bound));
    for k in [2, 3, 5] {
        let f = NatFunction::mersenne(k).expect("k >= 1");
        reports.push(distributes_over_gcd(&f, bound));
        reports.push(check_lemma_condition(&f, mersenne_witness(k), bound));
    }
    let seven = NatFunction::scale(7);
    reports.push(distributes_over_gcd(&seven, bound));
    reports.push(check_lemma_condition(&seven, additive_witness, bound));

    let mut multiples = IdentityReport::new("fib-multiples", bound);
    for k in 1..=bound {
        for n in 0..=bound {
            let holds = fib_multiple_property(n, k).expect("k >= 1");
            multiples.record(holds, || vec![n.into(), k.into()]);
        }
    }
    reports.push(multiples);
    reports
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nat(v: u64) -> Natural {
        Natural::from(v)
    }

    #[test]
    fn fib_values() {
        assert_eq!(fib(0), nat(0));
        assert_eq!(fib(1), nat(1));
        assert_eq!(fib(9), nat(34));
        assert_eq!(gcd(&fib(6), &fib(9)), nat(2));
        assert_eq!(fib(3), nat(2));
    }

    #[test]
    fn mersenne_values() {
        assert_eq!(mersenne_gen(2, 6).unwrap(), nat(63));
        assert_eq!(mersenne_gen(7, 0).unwrap(), nat(0));
        assert_eq!(
            gcd(&mersenne_gen(2, 6).unwrap(), &mersenne_gen(2, 9).unwrap()),
            nat(7)
        );
        assert_eq!(mersenne_gen(1, 5).unwrap(), nat(0));
        assert!(mersenne_gen(0, 3).is_err());
        assert!(NatFunction::mersenne(0).is_err());
    }

    #[test]
    fn fib_multiples() {
        assert!(fib_multiple_property(3, 4).unwrap());
        assert_eq!(fib(12), nat(144));
        assert!(fib_multiple_property(0, 5).unwrap());
        assert!(fib_multiple_property(2, 6).unwrap());
        assert!(fib_multiple_property(2, 0).is_err());
    }

    #[test]
    fn distributivity_examples() {
        assert!(distributes_over_gcd(&NatFunction::fibonacci(), 20).passed());
        assert!(distributes_over_gcd(&NatFunction::scale(7), 20).passed());
        let succ = distributes_over_gcd(&NatFunction::successor(), 5);
        assert!(!succ.passed());
        assert!(succ.counterexamples.contains(&vec![nat(2), nat(4)]));
    }

    #[test]
    fn lemma_examples() {
        assert!(check_lemma_condition(&NatFunction::fibonacci(), fib_witness, 20).passed());
        let f = NatFunction::mersenne(3).unwrap();
        assert!(check_lemma_condition(&f, mersenne_witness(3), 12).passed());
        assert!(check_lemma_condition(&NatFunction::scale(4), additive_witness, 12).passed());
        // A wrong witness is caught.
        let bad = check_lemma_condition(&NatFunction::fibonacci(), additive_witness, 6);
        assert!(!bad.passed());
    }

    #[test]
    fn consecutive_fibs_coprime() {
        for y in 1..=40 {
            assert!(gcd(&fib(y), &fib(y - 1)).is_one(), "y = {y}");
        }
    }

    #[test]
    fn zero_values() {
        assert!(NatFunction::fibonacci().at_zero().is_zero());
        assert!(NatFunction::mersenne(5).unwrap().at_zero().is_zero());
        assert_eq!(NatFunction::successor().at_zero(), nat(1));
    }
}
