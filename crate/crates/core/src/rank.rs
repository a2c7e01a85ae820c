//! Exact rank of sparse integer matrices over ℚ.
//!
//! Columns are reduced against earlier pivots by their lowest nonzero row,
//! using fraction-free updates `c ← a·c − b·p` followed by division by the
//! content (gcd of entries). Arithmetic runs in `i64` with overflow checks;
//! if any step overflows the whole reduction is repeated over `BigInt`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// A sparse column: `(row, value)` pairs sorted by row, no zero values.
pub type SparseColumn = Vec<(usize, i64)>;

trait Scalar: Clone + PartialEq + Sized {
    fn from_i64(v: i64) -> Self;
    fn is_zero(&self) -> bool;
    /// `a·x − b·y`, or `None` on overflow.
    fn mul_sub(a: &Self, x: &Self, b: &Self, y: &Self) -> Option<Self>;
    fn gcd(&self, other: &Self) -> Self;
    fn div_exact(&self, d: &Self) -> Self;
    fn is_negative(&self) -> bool;
    fn neg(&self) -> Self;
    fn is_one(&self) -> bool;
}

impl Scalar for i64 {
    fn from_i64(v: i64) -> Self {
        v
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn mul_sub(a: &Self, x: &Self, b: &Self, y: &Self) -> Option<Self> {
        a.checked_mul(*x)?.checked_sub(b.checked_mul(*y)?)
    }
    fn gcd(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn div_exact(&self, d: &Self) -> Self {
        self / d
    }
    fn is_negative(&self) -> bool {
        *self < 0
    }
    fn neg(&self) -> Self {
        -self
    }
    fn is_one(&self) -> bool {
        *self == 1
    }
}

impl Scalar for BigInt {
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn mul_sub(a: &Self, x: &Self, b: &Self, y: &Self) -> Option<Self> {
        Some(a * x - b * y)
    }
    fn gcd(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn div_exact(&self, d: &Self) -> Self {
        self / d
    }
    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
    fn neg(&self) -> Self {
        -self
    }
    fn is_one(&self) -> bool {
        *self == BigInt::from(1)
    }
}

struct Overflow;

fn reduce<T: Scalar>(columns: &[SparseColumn], nrows: usize) -> Result<usize, Overflow> {
    let mut pivot_of_row: Vec<Option<usize>> = vec![None; nrows];
    let mut reduced: Vec<Vec<(usize, T)>> = Vec::new();
    for col in columns {
        let mut cur: Vec<(usize, T)> = col.iter().map(|&(r, v)| (r, T::from_i64(v))).collect();
        loop {
            let Some((low, _)) = cur.last() else { break };
            let low = *low;
            match pivot_of_row[low] {
                None => {
                    pivot_of_row[low] = Some(reduced.len());
                    reduced.push(cur);
                    break;
                }
                Some(p) => {
                    let piv = &reduced[p];
                    let a = piv.last().expect("pivot column is nonzero").1.clone();
                    let b = cur.last().expect("nonzero").1.clone();
                    cur = combine(&a, &cur, &b, piv)?;
                }
            }
        }
    }
    Ok(reduced.len())
}

/// `a·x − b·y` on sparse columns, normalized by content.
fn combine<T: Scalar>(a: &T, x: &[(usize, T)], b: &T, y: &[(usize, T)]) -> Result<Vec<(usize, T)>, Overflow> {
    let zero = T::from_i64(0);
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let (row, xv, yv) = match (x.get(i), y.get(j)) {
            (Some(&(rx, ref vx)), Some(&(ry, ref vy))) if rx == ry => {
                i += 1;
                j += 1;
                (rx, vx, vy)
            }
            (Some(&(rx, ref vx)), Some(&(ry, _))) if rx < ry => {
                i += 1;
                (rx, vx, &zero)
            }
            (Some(&(rx, ref vx)), None) => {
                i += 1;
                (rx, vx, &zero)
            }
            (_, Some(&(ry, ref vy))) => {
                j += 1;
                (ry, &zero, vy)
            }
            (None, None) => unreachable!(),
        };
        let v = T::mul_sub(a, xv, b, yv).ok_or(Overflow)?;
        if !v.is_zero() {
            out.push((row, v));
        }
    }
    if let Some((_, first)) = out.first() {
        let mut g = first.clone();
        for (_, v) in &out[1..] {
            if g.is_one() {
                break;
            }
            g = g.gcd(v);
        }
        if g.is_negative() {
            g = g.neg();
        }
        if !g.is_one() && !g.is_zero() {
            for (_, v) in &mut out {
                *v = v.div_exact(&g);
            }
        }
    }
    Ok(out)
}

/// Rank over ℚ of the matrix with the given sparse columns.
pub fn rank(columns: &[SparseColumn], nrows: usize) -> usize {
    match reduce::<i64>(columns, nrows) {
        Ok(r) => r,
        Err(Overflow) => match reduce::<BigInt>(columns, nrows) {
            Ok(r) => r,
            Err(Overflow) => unreachable!("BigInt arithmetic does not overflow"),
        },
    }
}

#[cfg(test)]
pub(crate) fn rank_bigint(columns: &[SparseColumn], nrows: usize) -> usize {
    match reduce::<BigInt>(columns, nrows) {
        Ok(r) => r,
        Err(Overflow) => unreachable!(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;
    use proptest::prelude::*;

    /// Independent oracle: dense Gauss–Jordan elimination over `BigRational`.
    fn dense_rank(columns: &[SparseColumn], nrows: usize) -> usize {
        let ncols = columns.len();
        let mut m = vec![vec![BigRational::zero(); ncols]; nrows];
        for (c, col) in columns.iter().enumerate() {
            for &(r, v) in col {
                m[r][c] = BigRational::from_integer(BigInt::from(v));
            }
        }
        let mut rank = 0;
        for c in 0..ncols {
            let Some(p) = (rank..nrows).find(|&r| !m[r][c].is_zero()) else { continue };
            m.swap(rank, p);
            let pv = m[rank][c].clone();
            for r in 0..nrows {
                if r != rank && !m[r][c].is_zero() {
                    let f = m[r][c].clone() / pv.clone();
                    for cc in 0..ncols {
                        let sub = f.clone() * m[rank][cc].clone();
                        m[r][cc] -= sub;
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    fn to_sparse(dense: &[Vec<i64>]) -> (Vec<SparseColumn>, usize) {
        let nrows = dense.len();
        let ncols = dense.first().map_or(0, Vec::len);
        let cols = (0..ncols)
            .map(|c| (0..nrows).filter(|&r| dense[r][c] != 0).map(|r| (r, dense[r][c])).collect())
            .collect();
        (cols, nrows)
    }

    #[test]
    fn small_known_ranks() {
        let (c, n) = to_sparse(&[vec![1, 2], vec![2, 4]]);
        assert_eq!(rank(&c, n), 1);
        let (c, n) = to_sparse(&[vec![-1, -1, 0], vec![1, 0, -1], vec![0, 1, 1]]);
        assert_eq!(rank(&c, n), 2);
        assert_eq!(rank(&[], 3), 0);
        assert_eq!(rank(&[vec![], vec![]], 0), 0);
    }

    #[test]
    fn overflow_falls_back_to_bigint() {
        let big = i64::MAX / 3;
        let (c, n) = to_sparse(&[vec![big, 7, 1], vec![5, big, 1], vec![1, 3, big]]);
        assert_eq!(rank(&c, n), dense_rank(&c, n));
        assert_eq!(rank(&c, n), 3);
    }

    proptest! {
        #[test]
        fn matches_dense_rational_oracle(dense in proptest::collection::vec(proptest::collection::vec(-3i64..=3, 6), 1..7)) {
            let (c, n) = to_sparse(&dense);
            let expected = dense_rank(&c, n);
            prop_assert_eq!(rank(&c, n), expected);
            prop_assert_eq!(rank_bigint(&c, n), expected);
        }
    }
}
