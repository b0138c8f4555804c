//! Exact integer linear algebra.
//!
//! Everything here runs fraction-free Gaussian elimination (Bareiss), so every
//! intermediate value is the determinant of a minor and all divisions are
//! exact. Arithmetic first runs in checked `i128`; if any step overflows the
//! same computation is repeated over `BigInt`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

pub(crate) trait ExactInt: Clone + PartialEq + PartialOrd {
    fn from_i64(v: i64) -> Self;
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn mul(&self, other: &Self) -> Option<Self>;
    fn sub(&self, other: &Self) -> Option<Self>;
    fn add(&self, other: &Self) -> Option<Self>;
    fn div_exact(&self, other: &Self) -> Option<Self>;
    fn neg(&self) -> Option<Self>;
    fn to_bigint(&self) -> BigInt;
}

impl ExactInt for i128 {
    fn from_i64(v: i64) -> Self {
        v as i128
    }
    fn zero() -> Self {
        0
    }
    fn one() -> Self {
        1
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn mul(&self, other: &Self) -> Option<Self> {
        self.checked_mul(*other)
    }
    fn sub(&self, other: &Self) -> Option<Self> {
        self.checked_sub(*other)
    }
    fn add(&self, other: &Self) -> Option<Self> {
        self.checked_add(*other)
    }
    fn div_exact(&self, other: &Self) -> Option<Self> {
        debug_assert_eq!(self.checked_rem(*other), Some(0));
        self.checked_div(*other)
    }
    fn neg(&self) -> Option<Self> {
        self.checked_neg()
    }
    fn to_bigint(&self) -> BigInt {
        BigInt::from(*self)
    }
}

impl ExactInt for BigInt {
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        BigInt::from(1)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn mul(&self, other: &Self) -> Option<Self> {
        Some(self * other)
    }
    fn sub(&self, other: &Self) -> Option<Self> {
        Some(self - other)
    }
    fn add(&self, other: &Self) -> Option<Self> {
        Some(self + other)
    }
    fn div_exact(&self, other: &Self) -> Option<Self> {
        debug_assert!(Zero::is_zero(&(self % other)));
        Some(self / other)
    }
    fn neg(&self) -> Option<Self> {
        Some(-self)
    }
    fn to_bigint(&self) -> BigInt {
        self.clone()
    }
}

fn lift<T: ExactInt>(rows: &[&[i64]]) -> Vec<Vec<T>> {
    rows.iter()
        .map(|r| r.iter().map(|&v| T::from_i64(v)).collect())
        .collect()
}

/// Reduces `m` to row echelon form in place. Returns the rank and the sign of
/// the row permutation, or `None` on overflow.
fn bareiss<T: ExactInt>(m: &mut [Vec<T>]) -> Option<(usize, bool)> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut prev = T::one();
    let mut rank = 0;
    let mut negated = false;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        if p != rank {
            m.swap(p, rank);
            negated = !negated;
        }
        for i in rank + 1..rows {
            for j in c + 1..cols {
                let a = m[i][j].mul(&m[rank][c])?;
                let b = m[i][c].mul(&m[rank][j])?;
                m[i][j] = a.sub(&b)?.div_exact(&prev)?;
            }
            m[i][c] = T::zero();
        }
        prev = m[rank][c].clone();
        rank += 1;
    }
    Some((rank, negated))
}

pub(crate) fn rank_with<T: ExactInt>(rows: &[&[i64]]) -> Option<usize> {
    let mut m = lift::<T>(rows);
    bareiss(&mut m).map(|(r, _)| r)
}

pub(crate) fn det_with<T: ExactInt>(rows: &[&[i64]]) -> Option<T> {
    let n = rows.len();
    let mut m = lift::<T>(rows);
    let (rank, negated) = bareiss(&mut m)?;
    if rank < n {
        return Some(T::zero());
    }
    let d = m[n - 1][n - 1].clone();
    if negated {
        d.neg()
    } else {
        Some(d)
    }
}

/// Solves `A x = -1` for square `A` by Cramer's rule. Returns numerators and
/// the common denominator `det(A)`, `Some(None)` when `A` is singular, and
/// `None` on overflow.
pub(crate) fn cramer_minus_ones<T: ExactInt>(rows: &[&[i64]]) -> Option<Option<(Vec<T>, T)>> {
    let n = rows.len();
    let den = det_with::<T>(rows)?;
    if den.is_zero() {
        return Some(None);
    }
    let mut nums = Vec::with_capacity(n);
    let mut buf: Vec<Vec<i64>> = rows.iter().map(|r| r.to_vec()).collect();
    for k in 0..n {
        for row in buf.iter_mut() {
            row[k] = -1;
        }
        let refs: Vec<&[i64]> = buf.iter().map(Vec::as_slice).collect();
        nums.push(det_with::<T>(&refs)?);
        for (row, src) in buf.iter_mut().zip(rows) {
            row[k] = src[k];
        }
    }
    Some(Some((nums, den)))
}

/// Exact rank of an integer matrix given as rows.
pub fn rank(rows: &[Vec<i64>]) -> usize {
    let refs: Vec<&[i64]> = rows.iter().map(Vec::as_slice).collect();
    rank_with::<i128>(&refs)
        .or_else(|| rank_with::<BigInt>(&refs))
        .expect("bigint elimination cannot overflow")
}

/// Exact determinant of a square integer matrix given as rows.
pub fn determinant(rows: &[Vec<i64>]) -> BigInt {
    assert!(
        rows.iter().all(|r| r.len() == rows.len()),
        "matrix must be square"
    );
    if rows.is_empty() {
        return BigInt::from(1);
    }
    let refs: Vec<&[i64]> = rows.iter().map(Vec::as_slice).collect();
    det_with::<i128>(&refs)
        .map(|d| d.to_bigint())
        .or_else(|| det_with::<BigInt>(&refs))
        .expect("bigint elimination cannot overflow")
}

/// Divides an integer vector by the gcd of its entries. The zero vector is
/// returned unchanged.
pub fn primitive(v: &[BigInt]) -> Vec<BigInt> {
    let g = v.iter().fold(<BigInt as Zero>::zero(), |acc, x| acc.gcd(x));
    if Zero::is_zero(&g) {
        return v.to_vec();
    }
    v.iter().map(|x| x / &g).collect()
}

pub(crate) fn gcd_i64(v: &[i64]) -> i64 {
    v.iter().fold(0i64, |acc, &x| acc.gcd(&x)).abs()
}

pub(crate) fn bigint_to_i64(v: &BigInt) -> Option<i64> {
    use num_traits::ToPrimitive;
    v.to_i64()
}
