//! Constant-state enumeration of the positive rationals.
//!
//! The enumerator walks all finite products of `L` and `R` level by level, left
//! to right, keeping only the current product `D`. Projecting `D` gives the
//! Eisenstein-Stern (Calkin-Wilf) order via the column sums `(1 1) x D`,
//! displayed `y/x`, or the Stern-Brocot order via the row sums
//! `D x (1 1)^T`, displayed `x/y`. Newman's recurrence is the specialisation
//! of the Eisenstein-Stern projection to the two column sums alone.
//!
//! No level counter is kept: `D` is a power of `R` exactly when the projected
//! rational is an integer, which marks the last entry of a level.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::matrix::Mat2;
use crate::rational::Rational;
use crate::{Error, Integer, Natural, Result};

/// Largest depth accepted by [`tree_levels`]; level 20 has 2^20 entries.
pub const MAX_TREE_DEPTH: u32 = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Order {
    EisensteinStern,
    SternBrocot,
    Newman,
}

impl Order {
    pub const ALL: [Order; 3] = [Order::EisensteinStern, Order::SternBrocot, Order::Newman];

    pub fn name(self) -> &'static str {
        match self {
            Order::EisensteinStern => "eisenstein-stern",
            Order::SternBrocot => "stern-brocot",
            Order::Newman => "newman",
        }
    }
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Order {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Order::ALL
            .into_iter()
            .find(|o| o.name() == s)
            .ok_or_else(|| format!("unknown order `{s}`"))
    }
}

/// The current product `D = (e00 e01 / e10 e11)` of the matrix enumerator.
///
/// Entries are kept as naturals: every reachable `D` has non-negative entries.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EnumState {
    e00: Natural,
    e01: Natural,
    e10: Natural,
    e11: Natural,
}

impl Default for EnumState {
    fn default() -> Self {
        EnumState::new()
    }
}

impl EnumState {
    /// The identity, i.e. the root `1/1`.
    pub fn new() -> Self {
        EnumState {
            e00: Natural::one(),
            e01: Natural::zero(),
            e10: Natural::zero(),
            e11: Natural::one(),
        }
    }

    /// Accepts any matrix satisfying the LR-product invariants.
    pub fn from_matrix(m: &Mat2) -> Option<Self> {
        if !m.is_lr_product() {
            return None;
        }
        Some(EnumState {
            e00: m.e00.to_biguint()?,
            e01: m.e01.to_biguint()?,
            e10: m.e10.to_biguint()?,
            e11: m.e11.to_biguint()?,
        })
    }

    /// `[e00, e01, e10, e11]`
    pub fn entries(&self) -> [&Natural; 4] {
        [&self.e00, &self.e01, &self.e10, &self.e11]
    }

    pub fn matrix(&self) -> Mat2 {
        Mat2::new(
            Integer::from(self.e00.clone()),
            Integer::from(self.e01.clone()),
            Integer::from(self.e10.clone()),
            Integer::from(self.e11.clone()),
        )
    }

    /// Moves to the next product in level-order.
    ///
    /// At the end of a level (`e00 + e10 = 1`, so `D = R^k`) the successor is
    /// `L^(k+1) = (1 0 / e01+e11 1)`. Otherwise `D = T L R^j` with
    /// `j = floor((e01 + e11 - 1) / (e00 + e10))`, and the successor `T R L^j`
    /// is `D x (2j+1 1 / -1 0)`.
    pub fn step(&mut self) {
        let col0 = &self.e00 + &self.e10;
        if col0.is_one() {
            let k = &self.e01 + &self.e11;
            *self = EnumState {
                e00: Natural::one(),
                e01: Natural::zero(),
                e10: k,
                e11: Natural::one(),
            };
            return;
        }
        let col1 = &self.e01 + &self.e11;
        let j = (col1 - 1u32) / col0;
        let odd: Natural = (j << 1) + 1u32;
        let new00 = &self.e00 * &odd - &self.e01;
        let new10 = &self.e10 * &odd - &self.e11;
        self.e01 = std::mem::replace(&mut self.e00, new00);
        self.e11 = std::mem::replace(&mut self.e10, new10);
    }

    /// `(x y) = (1 1) x D`, displayed as `y/x`.
    pub fn eisenstein_stern(&self) -> Rational {
        Rational::new_unchecked(&self.e01 + &self.e11, &self.e00 + &self.e10)
    }

    /// `(x y)^T = D x (1 1)^T`, displayed as `x/y`.
    pub fn stern_brocot(&self) -> Rational {
        Rational::new_unchecked(&self.e00 + &self.e01, &self.e10 + &self.e11)
    }
}

/// Pure form of [`EnumState::step`].
pub fn enum_step(s: &EnumState) -> EnumState {
    let mut next = s.clone();
    next.step();
    next
}

pub fn project_eisenstein_stern(s: &EnumState) -> Rational {
    s.eisenstein_stern()
}

pub fn project_stern_brocot(s: &EnumState) -> Rational {
    s.stern_brocot()
}

/// Newman's two-variable state; the current rational is `n/m`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NewmanState {
    pub m: Natural,
    pub n: Natural,
}

impl Default for NewmanState {
    fn default() -> Self {
        NewmanState::new()
    }
}

impl NewmanState {
    pub fn new() -> Self {
        NewmanState {
            m: Natural::one(),
            n: Natural::one(),
        }
    }

    /// `m, n := (2 floor(n/m) + 1) m - n, m`
    pub fn step(&mut self) {
        let q: Natural = &self.n / &self.m;
        let next_m = ((q << 1) + 1u32) * &self.m - &self.n;
        self.n = std::mem::replace(&mut self.m, next_m);
    }

    pub fn rational(&self) -> Rational {
        Rational::new_unchecked(self.n.clone(), self.m.clone())
    }
}

pub fn newman_step(s: &NewmanState) -> NewmanState {
    let mut next = s.clone();
    next.step();
    next
}

#[derive(Clone, Debug)]
enum Cursor {
    Matrix(EnumState, Order),
    Newman(NewmanState),
}

/// Infinite stream of the positive rationals in a given [`Order`].
///
/// Holds a single state (one 2x2 matrix, or two naturals for Newman).
#[derive(Clone, Debug)]
pub struct Rationals {
    cursor: Cursor,
}

impl Rationals {
    pub fn new(order: Order) -> Self {
        let cursor = match order {
            Order::Newman => Cursor::Newman(NewmanState::new()),
            other => Cursor::Matrix(EnumState::new(), other),
        };
        Rationals { cursor }
    }

    /// The rational that the next call to `next` returns.
    pub fn peek(&self) -> Rational {
        match &self.cursor {
            Cursor::Matrix(s, Order::SternBrocot) => s.stern_brocot(),
            Cursor::Matrix(s, _) => s.eisenstein_stern(),
            Cursor::Newman(s) => s.rational(),
        }
    }
}

impl Iterator for Rationals {
    type Item = Rational;

    fn next(&mut self) -> Option<Rational> {
        let current = self.peek();
        match &mut self.cursor {
            Cursor::Matrix(s, _) => s.step(),
            Cursor::Newman(s) => s.step(),
        }
        Some(current)
    }
}

/// The first `count` rationals in the given order.
pub fn enumerate(order: Order, count: u64) -> impl Iterator<Item = Rational> {
    // `take` wants a usize; counts beyond usize::MAX cannot be consumed anyway.
    let count = usize::try_from(count).unwrap_or(usize::MAX);
    Rationals::new(order).take(count)
}

/// Levels `0..=depth` of the tree; level `k` has `2^k` entries.
///
/// Levels are split by the integer test alone: the last rational of every
/// level is an integer and no other entry is.
pub fn tree_levels(order: Order, depth: u32) -> Result<Vec<Vec<Rational>>> {
    if depth > MAX_TREE_DEPTH {
        return Err(Error::DepthTooLarge {
            depth,
            max: MAX_TREE_DEPTH,
        });
    }
    let mut levels = Vec::with_capacity(depth as usize + 1);
    let mut current = Vec::new();
    for r in Rationals::new(order) {
        let last_in_level = r.is_integer();
        current.push(r);
        if last_in_level {
            levels.push(std::mem::take(&mut current));
            if levels.len() > depth as usize {
                break;
            }
        }
    }
    Ok(levels)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: u64, d: u64) -> Rational {
        Rational::from_u64(n, d).unwrap()
    }

    fn state(m: Mat2) -> EnumState {
        EnumState::from_matrix(&m).unwrap()
    }

    #[test]
    fn step_examples() {
        assert_eq!(enum_step(&EnumState::new()).matrix(), Mat2::l());
        let after_l = enum_step(&state(Mat2::l()));
        assert_eq!(after_l.matrix(), Mat2::r());
        assert_eq!(after_l.matrix().det(), Integer::one());
        assert_eq!(
            enum_step(&state(Mat2::r())).matrix(),
            &Mat2::l() * &Mat2::l()
        );
    }

    #[test]
    fn projection_examples() {
        let id = EnumState::new();
        assert_eq!(project_eisenstein_stern(&id), r(1, 1));
        assert_eq!(project_stern_brocot(&id), r(1, 1));
        let l = state(Mat2::l());
        assert_eq!(project_eisenstein_stern(&l), r(1, 2));
        assert_eq!(project_stern_brocot(&l), r(1, 2));
    }

    #[test]
    fn first_seven() {
        let es: Vec<_> = enumerate(Order::EisensteinStern, 7).collect();
        let expected = [(1, 1), (1, 2), (2, 1), (1, 3), (3, 2), (2, 3), (3, 1)];
        assert_eq!(es, expected.map(|(n, d)| r(n, d)));

        let sb: Vec<_> = enumerate(Order::SternBrocot, 7).collect();
        let expected = [(1, 1), (1, 2), (2, 1), (1, 3), (2, 3), (3, 2), (3, 1)];
        assert_eq!(sb, expected.map(|(n, d)| r(n, d)));
    }

    #[test]
    fn newman_examples() {
        let s = newman_step(&NewmanState::new());
        assert_eq!((s.m.clone(), s.n.clone()), (2u32.into(), 1u32.into()));
        assert_eq!(s.rational(), r(1, 2));
        let s = newman_step(&s);
        assert_eq!((s.m.clone(), s.n.clone()), (1u32.into(), 2u32.into()));
        assert_eq!(s.rational(), r(2, 1));

        let first: Vec<_> = enumerate(Order::Newman, 4).collect();
        assert_eq!(first, vec![r(1, 1), r(1, 2), r(2, 1), r(1, 3)]);
    }

    #[test]
    fn empty_stream() {
        for order in Order::ALL {
            assert_eq!(enumerate(order, 0).count(), 0);
        }
        let sb: Vec<_> = enumerate(Order::SternBrocot, 3).collect();
        assert_eq!(sb, vec![r(1, 1), r(1, 2), r(2, 1)]);
    }

    #[test]
    fn levels_examples() {
        assert_eq!(
            tree_levels(Order::SternBrocot, 0).unwrap(),
            vec![vec![r(1, 1)]]
        );
        assert_eq!(
            tree_levels(Order::SternBrocot, 2).unwrap(),
            vec![
                vec![r(1, 1)],
                vec![r(1, 2), r(2, 1)],
                vec![r(1, 3), r(2, 3), r(3, 2), r(3, 1)],
            ]
        );
        assert_eq!(
            tree_levels(Order::EisensteinStern, 2).unwrap(),
            vec![
                vec![r(1, 1)],
                vec![r(1, 2), r(2, 1)],
                vec![r(1, 3), r(3, 2), r(2, 3), r(3, 1)],
            ]
        );
        assert_eq!(
            tree_levels(Order::Newman, 3).unwrap(),
            tree_levels(Order::EisensteinStern, 3).unwrap()
        );
    }

    #[test]
    fn depth_cap() {
        assert_eq!(
            tree_levels(Order::SternBrocot, 21),
            Err(Error::DepthTooLarge { depth: 21, max: 20 })
        );
        assert_eq!(
            Error::DepthTooLarge { depth: 21, max: 20 }.to_string(),
            "level too large: depth 21 exceeds the cap of 20"
        );
    }

    #[test]
    fn order_names_round_trip() {
        for order in Order::ALL {
            assert_eq!(order.name().parse::<Order>(), Ok(order));
        }
        assert!("calkin-wilf".parse::<Order>().is_err());
    }

    #[test]
    fn rejects_invalid_state() {
        assert!(EnumState::from_matrix(&Mat2::a()).is_none());
        assert!(EnumState::from_matrix(&Mat2::from_i64(1, 1, 1, 2)).is_some());
    }
}
