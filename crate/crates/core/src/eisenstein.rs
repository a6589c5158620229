//! The Eisenstein array `Ei(m, n)`.
//!
//! Row 0 is `[m, n]`; each later row inserts the sum of every adjacent pair
//! between them. Inserted entries are sum elements, carried-over entries are
//! source elements. Consecutive pairs of `Ei(1, 1)` rows are the levels of the
//! Eisenstein-Stern tree, and the coefficients `(k, l)` of the sum elements
//! `k*m + l*n` read as `l/k` are the levels of the Stern-Brocot tree.

use std::ops::Add;

use num_traits::{One, Zero};

use crate::enumerate::{tree_levels, EnumState, Order};
use crate::rational::Rational;
use crate::{Error, Natural, Result};

/// Largest row index materialised by [`ei_rows`].
pub const MAX_EI_DEPTH: u32 = 20;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EiRow {
    pub index: u32,
    pub entries: Vec<Natural>,
}

impl EiRow {
    /// Consecutive pairs within the row.
    pub fn pairs(&self) -> impl Iterator<Item = (&Natural, &Natural)> {
        self.entries.windows(2).map(|w| (&w[0], &w[1]))
    }
}

/// A triple `a b c` of consecutive entries with `c = (2t + 1)*b - a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EiTriple {
    pub a: Natural,
    pub b: Natural,
    pub c: Natural,
    pub t: Natural,
}

fn expand<T>(row: &[T]) -> Vec<T>
where
    T: Clone,
    for<'a> &'a T: Add<&'a T, Output = T>,
{
    let mut next = Vec::with_capacity(2 * row.len() - 1);
    for w in row.windows(2) {
        next.push(w[0].clone());
        next.push(&w[0] + &w[1]);
    }
    next.extend(row.last().cloned());
    next
}

fn check_depth(depth: u32) -> Result<()> {
    if depth > MAX_EI_DEPTH {
        return Err(Error::DepthTooLarge {
            depth,
            max: MAX_EI_DEPTH,
        });
    }
    Ok(())
}

/// Rows `0..=depth` of `Ei(m, n)` by direct insertion.
pub fn ei_rows(m: &Natural, n: &Natural, depth: u32) -> Result<Vec<EiRow>> {
    check_depth(depth)?;
    let mut rows = vec![EiRow {
        index: 0,
        entries: vec![m.clone(), n.clone()],
    }];
    for index in 1..=depth {
        let entries = expand(&rows.last().expect("row 0 exists").entries);
        rows.push(EiRow { index, entries });
    }
    Ok(rows)
}

/// Every triple of consecutive entries in `row`, with `t` solved exactly from
/// `a + c = (2t + 1)*b`.
///
/// A triple that does not fit the form is an error: it cannot occur in a
/// correctly generated row.
pub fn ei_triples(row: &EiRow) -> Result<Vec<EiTriple>> {
    if row.entries.len() < 3 {
        return Err(Error::RowTooShort {
            len: row.entries.len(),
        });
    }
    row.entries
        .windows(3)
        .map(|w| {
            let (a, b, c) = (&w[0], &w[1], &w[2]);
            let malformed = || Error::MalformedTriple {
                a: a.clone(),
                b: b.clone(),
                c: c.clone(),
            };
            if b.is_zero() {
                return Err(malformed());
            }
            let sum = a + c;
            if !(&sum % b).is_zero() {
                return Err(malformed());
            }
            let odd = sum / b;
            if !odd.bit(0) {
                return Err(malformed());
            }
            Ok(EiTriple {
                a: a.clone(),
                b: b.clone(),
                c: c.clone(),
                t: odd >> 1,
            })
        })
        .collect()
}

/// Whether the consecutive pairs `(a, b)` of rows `0..=depth` of `Ei(1, 1)`,
/// read as `a/b`, are exactly the Eisenstein-Stern tree levels `0..=depth`.
pub fn ei_pairs_equal_tree(depth: u32) -> Result<bool> {
    let one = Natural::one();
    let rows = ei_rows(&one, &one, depth)?;
    let levels = tree_levels(Order::EisensteinStern, depth)?;
    Ok(rows.iter().zip(&levels).all(|(row, level)| {
        let pairs: Option<Vec<Rational>> = row
            .pairs()
            .map(|(a, b)| Rational::new(a.clone(), b.clone()).ok())
            .collect();
        pairs.as_ref() == Some(level)
    }))
}

/// Stream of the consecutive pairs of `Ei(M, N)`, row by row, without
/// materialising rows.
///
/// The pair at a given position is linear in `(M, N)` with coefficients taken
/// from the enumerator state `D`: `(b a) = (N M) x D`.
#[derive(Clone, Debug)]
pub struct EiPairs {
    big_m: Natural,
    big_n: Natural,
    state: EnumState,
}

impl Iterator for EiPairs {
    type Item = (Natural, Natural);

    fn next(&mut self) -> Option<Self::Item> {
        let [e00, e01, e10, e11] = self.state.entries();
        let b = &self.big_n * e00 + &self.big_m * e10;
        let a = &self.big_n * e01 + &self.big_m * e11;
        self.state.step();
        Some((a, b))
    }
}

/// The first `count` consecutive pairs of `Ei(M, N)`; `M, N >= 1`.
pub fn ei_enumerate(
    big_m: &Natural,
    big_n: &Natural,
    count: u64,
) -> Result<std::iter::Take<EiPairs>> {
    if big_m.is_zero() {
        return Err(Error::ZeroArgument { what: "M" });
    }
    if big_n.is_zero() {
        return Err(Error::ZeroArgument { what: "N" });
    }
    let pairs = EiPairs {
        big_m: big_m.clone(),
        big_n: big_n.clone(),
        state: EnumState::new(),
    };
    Ok(pairs.take(usize::try_from(count).unwrap_or(usize::MAX)))
}

/// Coefficient pair `(k, l)` standing for `k*M + l*N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coefficients {
    pub k: Natural,
    pub l: Natural,
}

impl Add for &Coefficients {
    type Output = Coefficients;

    fn add(self, rhs: &Coefficients) -> Coefficients {
        Coefficients {
            k: &self.k + &rhs.k,
            l: &self.l + &rhs.l,
        }
    }
}

/// Rows `0..=depth` of `Ei(M, N)` as coefficient pairs over symbolic `M, N`.
pub fn ei_coefficient_rows(depth: u32) -> Result<Vec<Vec<Coefficients>>> {
    check_depth(depth)?;
    let mut rows = vec![vec![
        Coefficients {
            k: Natural::one(),
            l: Natural::zero(),
        },
        Coefficients {
            k: Natural::zero(),
            l: Natural::one(),
        },
    ]];
    for _ in 0..depth {
        let next = expand(rows.last().expect("row 0 exists"));
        rows.push(next);
    }
    Ok(rows)
}

/// The sum elements of rows `1..=depth + 1`, each `k*M + l*N` shown as `l/k`.
/// Entry `i` of the result corresponds to Stern-Brocot level `i`.
pub fn sum_element_tree(depth: u32) -> Result<Vec<Vec<Rational>>> {
    let rows = ei_coefficient_rows(depth + 1)?;
    rows.iter()
        .skip(1)
        .map(|row| {
            row.iter()
                .skip(1)
                .step_by(2)
                .map(|c| Rational::new(c.l.clone(), c.k.clone()))
                .collect()
        })
        .collect()
}
