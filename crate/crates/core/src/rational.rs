//! Positive rationals in lowest form, and unreduced formal fractions.

use std::cmp::Ordering;
use std::fmt;

use num_traits::{One, Zero};

use crate::{gcd::gcd, Error, Natural, Result};

/// A positive rational `num/den` with `gcd(num, den) = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Rational {
    num: Natural,
    den: Natural,
}

impl Rational {
    /// Validates that `num/den` is positive and already in lowest form.
    pub fn new(num: Natural, den: Natural) -> Result<Self> {
        if num.is_zero() || den.is_zero() || !gcd(&num, &den).is_one() {
            return Err(Error::NotLowestForm { num, den });
        }
        Ok(Rational { num, den })
    }

    /// Reduces `num/den`; both must be positive.
    pub fn reduced(num: &Natural, den: &Natural) -> Result<Self> {
        if num.is_zero() || den.is_zero() {
            return Err(Error::NotLowestForm {
                num: num.clone(),
                den: den.clone(),
            });
        }
        let g = gcd(num, den);
        Ok(Rational {
            num: num / &g,
            den: den / &g,
        })
    }

    pub fn from_u64(num: u64, den: u64) -> Result<Self> {
        Rational::new(num.into(), den.into())
    }

    /// Callers guarantee positivity and coprimality.
    pub(crate) fn new_unchecked(num: Natural, den: Natural) -> Self {
        debug_assert!(!num.is_zero() && !den.is_zero());
        Rational { num, den }
    }

    pub fn num(&self) -> &Natural {
        &self.num
    }

    pub fn den(&self) -> &Natural {
        &self.den
    }

    pub fn is_integer(&self) -> bool {
        self.den.is_one()
    }

    pub fn into_parts(self) -> (Natural, Natural) {
        (self.num, self.den)
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        (&self.num * &other.den).cmp(&(&other.num * &self.den))
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

/// A formal fraction `num/den` with no constraints, e.g. `0/1` or `1/0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Fraction {
    pub num: Natural,
    pub den: Natural,
}

impl Fraction {
    pub fn new(num: impl Into<Natural>, den: impl Into<Natural>) -> Self {
        Fraction {
            num: num.into(),
            den: den.into(),
        }
    }
}

impl From<Rational> for Fraction {
    fn from(r: Rational) -> Self {
        Fraction {
            num: r.num,
            den: r.den,
        }
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

/// Component-wise sum `(p + p')/(q + q')`. Not reduced.
pub fn mediant(a: &Fraction, b: &Fraction) -> Fraction {
    Fraction {
        num: &a.num + &b.num,
        den: &a.den + &b.den,
    }
}
