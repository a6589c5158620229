//! Brocot's table for approximating a ratio `N/D` by mediants.
//!
//! Each row `(p, q, e)` stands for the ratio `p/q` with error
//! `e = p*D - q*N`. The table starts from the integer bracket
//! `floor(N/D)/1, (floor(N/D) + 1)/1` and repeatedly inserts the mediant of the
//! bracketing pair, adding all three columns. Since the error is linear in
//! `(p, q)`, the new row's error is the sum of its neighbours' errors; its sign
//! decides which side of the bracket it replaces.

use std::fmt;

use num_bigint::Sign;
use num_traits::{One, Zero};

use crate::{gcd::gcd, Error, Integer, Natural, Result};

pub use crate::rational::{mediant, Fraction};

/// One row of the table: `p/q` with error `e = p*D - q*N`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BrocotRow {
    pub p: Natural,
    pub q: Natural,
    pub e: Integer,
}

impl BrocotRow {
    fn for_target(p: Natural, q: Natural, n: &Natural, d: &Natural) -> Self {
        let e = Integer::from(&p * d) - Integer::from(&q * n);
        BrocotRow { p, q, e }
    }

    pub fn from_i64(p: u64, q: u64, e: i64) -> Self {
        BrocotRow {
            p: p.into(),
            q: q.into(),
            e: e.into(),
        }
    }

    /// Adds all three columns.
    pub fn mediant(&self, other: &BrocotRow) -> BrocotRow {
        BrocotRow {
            p: &self.p + &other.p,
            q: &self.q + &other.q,
            e: &self.e + &other.e,
        }
    }

    pub fn is_exact(&self) -> bool {
        self.e.is_zero()
    }
}

impl fmt::Display for BrocotRow {
    /// `p q e`, with positive errors signed as `+e`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.e.sign() == Sign::Plus {
            write!(f, "{} {} +{}", self.p, self.q, self.e)
        } else {
            write!(f, "{} {} {}", self.p, self.q, self.e)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BrocotTable {
    pub target_num: Natural,
    pub target_den: Natural,
    /// Rows sorted ascending by `p/q`.
    pub rows: Vec<BrocotRow>,
    /// The inserted mediants, in insertion order.
    pub inserted: Vec<BrocotRow>,
}

impl BrocotTable {
    /// The row with error 0, if the table reached the target.
    pub fn exact(&self) -> Option<&BrocotRow> {
        self.rows.iter().find(|r| r.is_exact())
    }
}

/// Builds Brocot's table for `N/D`.
///
/// Insertion stops at the exact row `(N/g, D/g, 0)` or as soon as the next
/// mediant would have `q > max_den`. If `N/D` is an integer the table is that
/// single exact row.
pub fn brocot_table(n: &Natural, d: &Natural, max_den: Option<&Natural>) -> Result<BrocotTable> {
    if n.is_zero() {
        return Err(Error::ZeroArgument { what: "N" });
    }
    if d.is_zero() {
        return Err(Error::ZeroArgument { what: "D" });
    }
    if max_den.is_some_and(Zero::is_zero) {
        return Err(Error::ZeroArgument { what: "max_den" });
    }
    let floor = n / d;
    let mut table = BrocotTable {
        target_num: n.clone(),
        target_den: d.clone(),
        rows: Vec::new(),
        inserted: Vec::new(),
    };
    if (n % d).is_zero() {
        table
            .rows
            .push(BrocotRow::for_target(floor, Natural::one(), n, d));
        return Ok(table);
    }

    // `below` ascends towards the target, `above` descends towards it; their
    // last elements form the current bracket.
    let mut below = vec![BrocotRow::for_target(floor.clone(), Natural::one(), n, d)];
    let mut above = vec![BrocotRow::for_target(floor + 1u32, Natural::one(), n, d)];
    let mut exact = None;
    loop {
        let lower = below.last().expect("bracket is never empty");
        let upper = above.last().expect("bracket is never empty");
        let next = lower.mediant(upper);
        if max_den.is_some_and(|bound| &next.q > bound) {
            break;
        }
        table.inserted.push(next.clone());
        match next.e.sign() {
            Sign::Minus => below.push(next),
            Sign::Plus => above.push(next),
            Sign::NoSign => {
                exact = Some(next);
                break;
            }
        }
    }
    table.rows = below;
    table.rows.extend(exact);
    table.rows.extend(above.into_iter().rev());
    Ok(table)
}

/// Closest approximations to `N/D` with denominator at most `max_den`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Approximation {
    Exact(BrocotRow),
    /// `lower` is absent only when the sole candidate below is the endpoint
    /// `0/1`, which is never offered as an approximation.
    Bracket {
        lower: Option<BrocotRow>,
        upper: BrocotRow,
    },
}

/// Best rows below and above `N/D` among those with `q <= max_den`.
pub fn best_bracket(n: &Natural, d: &Natural, max_den: &Natural) -> Result<Approximation> {
    let table = brocot_table(n, d, Some(max_den))?;
    if let Some(row) = table.exact() {
        return Ok(Approximation::Exact(row.clone()));
    }
    let lower = table
        .rows
        .iter()
        .rev()
        .find(|r| r.e.sign() == Sign::Minus)
        .filter(|r| !r.p.is_zero())
        .cloned();
    let upper = table
        .rows
        .iter()
        .find(|r| r.e.sign() == Sign::Plus)
        .cloned()
        .expect("the table always has a row above the target");
    Ok(Approximation::Bracket { lower, upper })
}

/// `N/D` in lowest form.
pub fn reduced_target(n: &Natural, d: &Natural) -> (Natural, Natural) {
    let g = gcd(n, d);
    (n / &g, d / &g)
}
