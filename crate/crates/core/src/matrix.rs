//! 2x2 integer matrices and the matrix form of Euclid's algorithm.
//!
//! `L = (1 0 / 1 1)` and `R = (1 1 / 0 1)` generate a free monoid of
//! determinant-1 matrices with non-negative entries; every positive rational
//! corresponds to exactly one finite product of them.

use std::fmt;
use std::ops::Mul;

use num_bigint::Sign;
use num_traits::{One, Zero};

use crate::{gcd, Error, Integer, Natural, Result};

/// Row-major 2x2 integer matrix: `(e00 e01 / e10 e11)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Mat2 {
    pub e00: Integer,
    pub e01: Integer,
    pub e10: Integer,
    pub e11: Integer,
}

impl Mat2 {
    pub fn new(e00: Integer, e01: Integer, e10: Integer, e11: Integer) -> Self {
        Mat2 { e00, e01, e10, e11 }
    }

    pub fn from_i64(e00: i64, e01: i64, e10: i64, e11: i64) -> Self {
        Mat2::new(e00.into(), e01.into(), e10.into(), e11.into())
    }

    pub fn identity() -> Self {
        Mat2::from_i64(1, 0, 0, 1)
    }

    /// `(1 0 / 1 1)`
    pub fn l() -> Self {
        Mat2::from_i64(1, 0, 1, 1)
    }

    /// `(1 1 / 0 1)`
    pub fn r() -> Self {
        Mat2::from_i64(1, 1, 0, 1)
    }

    /// `L^-1 = (1 0 / -1 1)`; `(x y) x A` is `x, y := x - y, y`.
    pub fn a() -> Self {
        Mat2::from_i64(1, 0, -1, 1)
    }

    /// `R^-1 = (1 -1 / 0 1)`; `(x y) x B` is `x, y := x, y - x`.
    pub fn b() -> Self {
        Mat2::from_i64(1, -1, 0, 1)
    }

    /// `L^k = (1 0 / k 1)`
    pub fn l_pow(k: impl Into<Integer>) -> Self {
        Mat2::new(Integer::one(), Integer::zero(), k.into(), Integer::one())
    }

    /// `R^k = (1 k / 0 1)`
    pub fn r_pow(k: impl Into<Integer>) -> Self {
        Mat2::new(Integer::one(), k.into(), Integer::zero(), Integer::one())
    }

    pub fn det(&self) -> Integer {
        &self.e00 * &self.e11 - &self.e01 * &self.e10
    }

    pub fn transpose(&self) -> Self {
        Mat2::new(
            self.e00.clone(),
            self.e10.clone(),
            self.e01.clone(),
            self.e11.clone(),
        )
    }

    /// `(e11 -e01 / -e10 e00)`, the inverse whenever `det = 1`.
    pub fn adjugate(&self) -> Self {
        Mat2::new(self.e11.clone(), -&self.e01, -&self.e10, self.e00.clone())
    }

    /// Exact inverse of a unimodular matrix, `None` if `det != 1`.
    pub fn inverse_unimodular(&self) -> Option<Self> {
        self.det().is_one().then(|| self.adjugate())
    }

    /// `(1 1) x self`: the column sums.
    pub fn column_sums(&self) -> RowVec {
        RowVec(&self.e00 + &self.e10, &self.e01 + &self.e11)
    }

    /// `self x (1 1)^T`: the row sums.
    pub fn row_sums(&self) -> ColVec {
        ColVec(&self.e00 + &self.e01, &self.e10 + &self.e11)
    }

    /// Whether this matrix satisfies the invariants of a finite product of
    /// `L`s and `R`s: determinant 1, non-negative entries, positive column sums.
    pub fn is_lr_product(&self) -> bool {
        let nonneg = [&self.e00, &self.e01, &self.e10, &self.e11]
            .iter()
            .all(|e| e.sign() != Sign::Minus);
        let sums = self.column_sums();
        self.det().is_one() && nonneg && sums.0 >= Integer::one() && sums.1 >= Integer::one()
    }

    /// The relation `X < Y` on LR products: compares the rationals
    /// `(e00 + e01) / (e10 + e11)` by cross-multiplication.
    pub fn precedes(&self, other: &Mat2) -> bool {
        let lhs = (&self.e00 + &self.e01) * (&other.e10 + &other.e11);
        let rhs = (&other.e00 + &other.e01) * (&self.e10 + &self.e11);
        lhs < rhs
    }
}

impl fmt::Display for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} {} / {} {})", self.e00, self.e01, self.e10, self.e11)
    }
}

impl Mul for &Mat2 {
    type Output = Mat2;

    fn mul(self, q: &Mat2) -> Mat2 {
        let p = self;
        Mat2::new(
            &p.e00 * &q.e00 + &p.e01 * &q.e10,
            &p.e00 * &q.e01 + &p.e01 * &q.e11,
            &p.e10 * &q.e00 + &p.e11 * &q.e10,
            &p.e10 * &q.e01 + &p.e11 * &q.e11,
        )
    }
}

impl Mul for Mat2 {
    type Output = Mat2;

    fn mul(self, q: Mat2) -> Mat2 {
        &self * &q
    }
}

/// Standard 2x2 product.
pub fn mat_mul(p: &Mat2, q: &Mat2) -> Mat2 {
    p * q
}

/// A row vector `(v0 v1)`; multiplies a [`Mat2`] from the left.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RowVec(pub Integer, pub Integer);

/// A column vector `(v0 v1)^T`; multiplied by a [`Mat2`] from the left.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ColVec(pub Integer, pub Integer);

impl RowVec {
    pub fn transpose(self) -> ColVec {
        ColVec(self.0, self.1)
    }
}

impl ColVec {
    pub fn transpose(self) -> RowVec {
        RowVec(self.0, self.1)
    }
}

impl Mul<&Mat2> for &RowVec {
    type Output = RowVec;

    fn mul(self, m: &Mat2) -> RowVec {
        RowVec(
            &self.0 * &m.e00 + &self.1 * &m.e10,
            &self.0 * &m.e01 + &self.1 * &m.e11,
        )
    }
}

impl Mul<&ColVec> for &Mat2 {
    type Output = ColVec;

    fn mul(self, v: &ColVec) -> ColVec {
        ColVec(
            &self.e00 * &v.0 + &self.e01 * &v.1,
            &self.e10 * &v.0 + &self.e11 * &v.1,
        )
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Letter {
    L,
    R,
}

impl Letter {
    pub fn matrix(self) -> Mat2 {
        match self {
            Letter::L => Mat2::l(),
            Letter::R => Mat2::r(),
        }
    }
}

/// A word over `{L, R}` together with the product of its letters.
///
/// Equality compares matrices only; the word is kept for diagnostics.
#[derive(Clone, Debug)]
pub struct LRWord {
    matrix: Mat2,
    word: Vec<Letter>,
}

impl LRWord {
    pub fn empty() -> Self {
        LRWord {
            matrix: Mat2::identity(),
            word: Vec::new(),
        }
    }

    pub fn from_letters(letters: &[Letter]) -> Self {
        let mut w = LRWord::empty();
        for &letter in letters {
            w.push(letter);
        }
        w
    }

    /// Parses a string of `L` and `R` characters.
    pub fn parse(s: &str) -> Option<Self> {
        let letters = s
            .chars()
            .map(|c| match c {
                'L' => Some(Letter::L),
                'R' => Some(Letter::R),
                _ => None,
            })
            .collect::<Option<Vec<_>>>()?;
        Some(LRWord::from_letters(&letters))
    }

    /// The word of the rational `m/n` (not necessarily reduced), read off the
    /// matrix form of Euclid's algorithm.
    pub fn of_ratio(m: &Natural, n: &Natural) -> Result<Self> {
        let (_, letters) = euclid_run(m, n)?;
        Ok(LRWord::from_letters(&letters))
    }

    pub fn push(&mut self, letter: Letter) {
        self.matrix = &self.matrix * &letter.matrix();
        self.word.push(letter);
    }

    pub fn concat(&self, other: &LRWord) -> LRWord {
        let mut word = self.word.clone();
        word.extend_from_slice(&other.word);
        LRWord {
            matrix: &self.matrix * &other.matrix,
            word,
        }
    }

    pub fn matrix(&self) -> &Mat2 {
        &self.matrix
    }

    pub fn letters(&self) -> &[Letter] {
        &self.word
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }
}

impl PartialEq for LRWord {
    fn eq(&self, other: &Self) -> bool {
        self.matrix == other.matrix
    }
}

impl Eq for LRWord {}

impl fmt::Display for LRWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            return f.write_str("I");
        }
        for letter in &self.word {
            f.write_str(match letter {
                Letter::L => "L",
                Letter::R => "R",
            })?;
        }
        Ok(())
    }
}

/// `x < y` in the binary-search-tree order on LR products.
pub fn lr_order_lt(x: &LRWord, y: &LRWord) -> bool {
    x.matrix().precedes(y.matrix())
}

/// Runs the subtractive loop and returns `gcd` together with the letters
/// premultiplied onto `D`, outermost first.
///
/// Runs of the same guard are taken in one batch: `k` subtractions of `y` from
/// `x` premultiply `D` by `L^k`, with `k` chosen so that `x` stays positive.
fn euclid_run(m: &Natural, n: &Natural) -> Result<(Natural, Vec<Letter>)> {
    if m.is_zero() || n.is_zero() {
        return Err(Error::NonPositiveInput);
    }
    let (mut x, mut y) = (m.clone(), n.clone());
    let mut letters = Vec::new();
    while x != y {
        if y < x {
            let k = (&x - 1u32) / &y;
            x -= &k * &y;
            push_run(&mut letters, Letter::L, &k);
        } else {
            let k = (&y - 1u32) / &x;
            y -= &k * &x;
            push_run(&mut letters, Letter::R, &k);
        }
    }
    letters.reverse();
    Ok((x, letters))
}

fn push_run(letters: &mut Vec<Letter>, letter: Letter, k: &Natural) {
    let mut i = Natural::zero();
    while &i < k {
        letters.push(letter);
        i += 1u32;
    }
}

/// Matrix-augmented Euclid: returns `(g, D)` with `g = gcd(m, n)`,
/// `(m n) = (g g) x D` and `(1 1) x D = (m/g n/g)`.
///
/// `D` is accumulated as `L x D` when `x` is reduced and `R x D` when `y` is
/// reduced. Runs of equal steps are batched as `L^k` or `R^k`.
pub fn euclid_matrix(m: &Natural, n: &Natural) -> Result<(Natural, Mat2)> {
    if m.is_zero() || n.is_zero() {
        return Err(Error::NonPositiveInput);
    }
    let (mut x, mut y) = (m.clone(), n.clone());
    let mut d = Mat2::identity();
    while x != y {
        if y < x {
            let k = (&x - 1u32) / &y;
            x -= &k * &y;
            d = &Mat2::l_pow(Integer::from(k)) * &d;
        } else {
            let k = (&y - 1u32) / &x;
            y -= &k * &x;
            d = &Mat2::r_pow(Integer::from(k)) * &d;
        }
    }
    Ok((x, d))
}

/// The transposed form: keeps `(m n)^T = E x (x y)^T` by postmultiplying `E`
/// with `R = L^T` or `L = R^T`. On termination `E = D^T` for the `D` of
/// [`euclid_matrix`], and `E x (1 1)^T = (m/g n/g)^T`.
pub fn euclid_matrix_transposed(m: &Natural, n: &Natural) -> Result<(Natural, Mat2)> {
    if m.is_zero() || n.is_zero() {
        return Err(Error::NonPositiveInput);
    }
    let (mut x, mut y) = (m.clone(), n.clone());
    let mut e = Mat2::identity();
    while x != y {
        if y < x {
            x -= &y;
            e = &e * &Mat2::r();
        } else {
            y -= &x;
            e = &e * &Mat2::l();
        }
    }
    Ok((x, e))
}

/// Integers `(a, b)` with `m*a + n*b = g = gcd(m, n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BezoutCertificate {
    pub a: Integer,
    pub b: Integer,
    pub g: Natural,
}

impl BezoutCertificate {
    /// Checks `m*a + n*b = g` and `g = gcd(m, n)`.
    pub fn certifies(&self, m: &Natural, n: &Natural) -> bool {
        let lhs = Integer::from(m.clone()) * &self.a + Integer::from(n.clone()) * &self.b;
        lhs == Integer::from(self.g.clone()) && self.g == gcd::gcd(m, n)
    }
}

/// A Bézout certificate for `(m, n)`.
///
/// For positive inputs the coefficients are the first column of `D^-1`, where
/// `D` comes from [`euclid_matrix`]: `(m n) x D^-1 = (g g)`. If one argument
/// is zero the certificate is `(1, 1)`. `(0, 0)` is rejected.
pub fn bezout(m: &Natural, n: &Natural) -> Result<BezoutCertificate> {
    match (m.is_zero(), n.is_zero()) {
        (true, true) => Err(Error::BezoutOfZeros),
        (false, true) => Ok(BezoutCertificate {
            a: Integer::one(),
            b: Integer::one(),
            g: m.clone(),
        }),
        (true, false) => Ok(BezoutCertificate {
            a: Integer::one(),
            b: Integer::one(),
            g: n.clone(),
        }),
        (false, false) => {
            let (g, d) = euclid_matrix(m, n)?;
            let inv = d.adjugate();
            Ok(BezoutCertificate {
                a: inv.e00,
                b: inv.e10,
                g,
            })
        }
    }
}
