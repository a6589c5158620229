//! gcd identities as exhaustive checks over small rectangles.

use std::fmt;

use num_traits::{One, Zero};

use crate::gcd::{divides_nat, gcd};
use crate::Natural;

/// Counterexamples kept per report.
pub const MAX_COUNTEREXAMPLES: usize = 16;

/// Outcome of an exhaustive identity check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityReport {
    pub name: String,
    pub bound: u64,
    /// At most [`MAX_COUNTEREXAMPLES`] failing input tuples, in sweep order.
    pub counterexamples: Vec<Vec<Natural>>,
    pub failures: u64,
    pub cases_checked: u64,
}

impl IdentityReport {
    pub fn new(name: impl Into<String>, bound: u64) -> Self {
        IdentityReport {
            name: name.into(),
            bound,
            counterexamples: Vec::new(),
            failures: 0,
            cases_checked: 0,
        }
    }

    /// Records one case.
    pub fn record(&mut self, holds: bool, inputs: impl FnOnce() -> Vec<Natural>) {
        self.cases_checked += 1;
        if !holds {
            self.failures += 1;
            if self.counterexamples.len() < MAX_COUNTEREXAMPLES {
                self.counterexamples.push(inputs());
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

impl fmt::Display for IdentityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {}: bound={} cases={} counterexamples={}",
            if self.passed() { "PASS" } else { "FAIL" },
            self.name,
            self.bound,
            self.cases_checked,
            self.failures
        )?;
        if let Some(first) = self.counterexamples.first() {
            let shown: Vec<String> = first.iter().map(ToString::to_string).collect();
            write!(f, " first=({})", shown.join(", "))?;
        }
        Ok(())
    }
}

fn nats(bound: u64) -> impl Iterator<Item = Natural> + Clone {
    (0..=bound).map(Natural::from)
}

fn positive(bound: u64) -> impl Iterator<Item = Natural> + Clone {
    (1..=bound).map(Natural::from)
}

/// `k \ (c*m) && k \ (c*n)  ==  k \ (c * gcd(m, n))`
/// for `0 <= m, n <= bound` and `1 <= k, c <= bound`.
pub fn check_gcd_mult(bound: u64) -> IdentityReport {
    let mut report = IdentityReport::new("gcd-mult", bound);
    for m in nats(bound) {
        for n in nats(bound) {
            let g = gcd(&m, &n);
            for k in positive(bound) {
                for c in positive(bound) {
                    let lhs = divides_nat(&k, &(&c * &m)) && divides_nat(&k, &(&c * &n));
                    let rhs = divides_nat(&k, &(&c * &g));
                    report.record(lhs == rhs, || {
                        vec![k.clone(), c.clone(), m.clone(), n.clone()]
                    });
                }
            }
        }
    }
    report
}

/// `gcd(m, n) = 1  =>  (m \ (c*n) == m \ c)` for `0 <= m, n, c <= bound`.
pub fn check_euclids_lemma(bound: u64) -> IdentityReport {
    let mut report = IdentityReport::new("euclids-lemma", bound);
    for m in nats(bound) {
        for n in nats(bound) {
            let coprime = gcd(&m, &n).is_one();
            for c in nats(bound) {
                let holds = !coprime || divides_nat(&m, &(&c * &n)) == divides_nat(&m, &c);
                report.record(holds, || vec![m.clone(), n.clone(), c.clone()]);
            }
        }
    }
    report
}

/// `gcd(c*m, c*n) = c * gcd(m, n)` for `0 <= c, m, n <= bound`.
pub fn check_scaling(bound: u64) -> IdentityReport {
    let mut report = IdentityReport::new("scaling", bound);
    for c in nats(bound) {
        for m in nats(bound) {
            for n in nats(bound) {
                let holds = gcd(&(&c * &m), &(&c * &n)) == &c * gcd(&m, &n);
                report.record(holds, || vec![c.clone(), m.clone(), n.clone()]);
            }
        }
    }
    report
}

/// `gcd(p, n) = 1  =>  gcd(m*p, n) = gcd(m, n)` for `0 <= m, p, n <= bound`.
pub fn check_coprime_absorb(bound: u64) -> IdentityReport {
    let mut report = IdentityReport::new("coprime-absorb", bound);
    for m in nats(bound) {
        for p in nats(bound) {
            for n in nats(bound) {
                let holds = !gcd(&p, &n).is_one() || gcd(&(&m * &p), &n) == gcd(&m, &n);
                report.record(holds, || vec![m.clone(), p.clone(), n.clone()]);
            }
        }
    }
    report
}

/// Number of integer points `(s, t) != (0, 0)` on the closed segment from
/// `(0, 0)` to `(m, n)`, by direct enumeration.
///
/// With both coordinates positive a point is determined by `t` in `1..=n`
/// with `m*t = n*s` for some integer `s`. If one coordinate is zero the
/// segment lies on an axis and the count is the other coordinate.
pub fn lattice_point_count(m: &Natural, n: &Natural) -> Natural {
    if m.is_zero() {
        return n.clone();
    }
    if n.is_zero() {
        return m.clone();
    }
    let mut count = Natural::zero();
    let mut t = Natural::one();
    while &t <= n {
        if divides_nat(n, &(m * &t)) {
            count += 1u32;
        }
        t += 1u32;
    }
    count
}

/// `lattice_point_count(m, n) = gcd(m, n)` for `0 <= m, n <= bound`.
pub fn check_lattice_count(bound: u64) -> IdentityReport {
    let mut report = IdentityReport::new("lattice-count", bound);
    for m in nats(bound) {
        for n in nats(bound) {
            let holds = lattice_point_count(&m, &n) == gcd(&m, &n);
            report.record(holds, || vec![m.clone(), n.clone()]);
        }
    }
    report
}

/// The identity suite: the four gcd identities plus the lattice-point count.
pub fn identity_suite(bound: u64) -> Vec<IdentityReport> {
    vec![
        check_gcd_mult(bound),
        check_euclids_lemma(bound),
        check_scaling(bound),
        check_coprime_absorb(bound),
        check_lattice_count(bound),
    ]
}
