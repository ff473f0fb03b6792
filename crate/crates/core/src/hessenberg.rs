//! Upper Hessenberg matrices whose subdiagonal is fixed at `-1`.
//!
//! For such a matrix `A_n` with free entries `p_{i,j}` (`i <= j`), expanding
//! along the last column gives the leading-minor recurrence
//!
//! ```text
//! d_0 = 1,    d_m = sum_{i=1}^{m} p_{i,m} d_{i-1}
//! ```
//!
//! which is how [`HessenbergMatrix::det`] works, in `O(n^2)` ring operations.
//! [`det_oracle`] is a separate fraction-free elimination over a dense matrix
//! and shares no code with the recurrence.
//!
//! Storage and accessors are 0-based. The functions that mirror index-based
//! formulas ([`principal_minor`], [`f_cofactor`], [`cofactor_oracle`]) take
//! 1-based row and column numbers, as in those formulas.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::fib::fib;
use crate::poly::Polynomial;
use crate::scalar::{ExactDiv, Ring};
use crate::{IntHessenberg, IntMatrix};

/// Default cap on the order for exhaustive principal-minor enumeration.
pub const DEFAULT_MINOR_BOUND: usize = 20;

/// Square matrix with `-1` on the subdiagonal, zero below it, and free
/// entries on and above the diagonal. Order 0 is the empty matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HessenbergMatrix<T> {
    /// `upper[i][j - i]` holds the entry at row `i`, column `j >= i`.
    upper: Vec<Vec<T>>,
}

impl<T: Ring> HessenbergMatrix<T> {
    /// Build from the on-and-above-diagonal entries; `f(i, j)` is called for
    /// every `0 <= i <= j < order`.
    pub fn from_fn(order: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let upper = (0..order)
            .map(|i| (i..order).map(|j| f(i, j)).collect())
            .collect();
        HessenbergMatrix { upper }
    }

    /// Build from the upper table, row `i` holding the `order - i` entries
    /// from the diagonal rightwards.
    pub fn from_upper_rows(upper: Vec<Vec<T>>) -> Result<Self> {
        let n = upper.len();
        for (i, row) in upper.iter().enumerate() {
            if row.len() != n - i {
                return Err(Error::domain(
                    "hessenberg",
                    format!("row {i} has {} entries, expected {}", row.len(), n - i),
                ));
            }
        }
        Ok(HessenbergMatrix { upper })
    }

    pub fn order(&self) -> usize {
        self.upper.len()
    }

    /// Free entry `p_{i,j}` for `i <= j` (0-based).
    pub fn upper(&self, i: usize, j: usize) -> &T {
        &self.upper[i][j - i]
    }

    /// Any entry of the full matrix (0-based).
    pub fn entry(&self, i: usize, j: usize) -> T {
        if i <= j {
            self.upper(i, j).clone()
        } else if i == j + 1 {
            -T::one()
        } else {
            T::zero()
        }
    }

    pub fn to_dense(&self) -> DenseMatrix<T> {
        let n = self.order();
        DenseMatrix::from_fn(n, |i, j| self.entry(i, j))
    }

    pub fn map<U: Ring>(&self, mut f: impl FnMut(&T) -> U) -> HessenbergMatrix<U> {
        HessenbergMatrix {
            upper: self
                .upper
                .iter()
                .map(|row| row.iter().map(&mut f).collect())
                .collect(),
        }
    }

    /// Determinants `d_0, ..., d_n` of all leading principal submatrices.
    pub fn leading_dets(&self) -> Vec<T> {
        let n = self.order();
        let mut d = Vec::with_capacity(n + 1);
        d.push(T::one());
        for m in 0..n {
            let next = (0..=m).fold(T::zero(), |acc, i| {
                acc + self.upper(i, m).clone() * d[i].clone()
            });
            d.push(next);
        }
        d
    }

    pub fn det(&self) -> T {
        self.leading_dets().pop().expect("d_0 is always present")
    }

    /// `det(xI - A)`, monic of degree `n`.
    ///
    /// `A - xI` keeps the `-1` subdiagonal, so the determinant recurrence runs
    /// unchanged over polynomial entries; the sign `(-1)^n` converts back.
    pub fn char_poly(&self) -> Polynomial<T> {
        let x = Polynomial::<T>::x();
        let shifted = HessenbergMatrix::from_fn(self.order(), |i, j| {
            let c = Polynomial::constant(self.upper(i, j).clone());
            if i == j {
                &c - &x
            } else {
                c
            }
        });
        shifted.det().scale(&T::neg_one_pow(self.order()))
    }
}

/// `F_n`: ones on the diagonal and the superdiagonal.
pub fn f_matrix(n: usize) -> Result<IntHessenberg> {
    if n < 1 {
        return Err(Error::domain("f_matrix", "order must be at least 1"));
    }
    Ok(HessenbergMatrix::from_fn(n, |i, j| {
        if j - i <= 1 {
            BigInt::one()
        } else {
            BigInt::zero()
        }
    }))
}

/// `G_n`: zero diagonal, ones everywhere strictly above it.
pub fn g_matrix(n: usize) -> Result<IntHessenberg> {
    if n < 1 {
        return Err(Error::domain("g_matrix", "order must be at least 1"));
    }
    Ok(g_matrix_or_empty(n))
}

pub(crate) fn g_matrix_or_empty(n: usize) -> IntHessenberg {
    HessenbergMatrix::from_fn(n, |i, j| if i == j { BigInt::zero() } else { BigInt::one() })
}

/// Random integer Hessenberg table with entries drawn uniformly from `lo..=hi`.
pub fn random_int_hessenberg<R: Rng + ?Sized>(
    order: usize,
    lo: i64,
    hi: i64,
    rng: &mut R,
) -> IntHessenberg {
    HessenbergMatrix::from_fn(order, |_, _| BigInt::from(rng.gen_range(lo..=hi)))
}

/// Square matrix stored row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DenseMatrix<T> {
    order: usize,
    data: Vec<T>,
}

impl<T: Ring> DenseMatrix<T> {
    pub fn from_fn(order: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(order * order);
        for i in 0..order {
            for j in 0..order {
                data.push(f(i, j));
            }
        }
        DenseMatrix { order, data }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let order = rows.len();
        if rows.iter().any(|r| r.len() != order) {
            return Err(Error::domain("dense matrix", "rows must form a square"));
        }
        Ok(DenseMatrix {
            order,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn identity(order: usize) -> Self {
        Self::from_fn(order, |i, j| if i == j { T::one() } else { T::zero() })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.order + j]
    }

    pub fn rows(&self) -> Vec<Vec<T>> {
        self.data.chunks(self.order.max(1)).map(<[T]>::to_vec).take(self.order).collect()
    }

    /// Submatrix keeping the listed (0-based) rows and columns.
    pub fn principal_submatrix(&self, keep: &[usize]) -> Self {
        Self::from_fn(keep.len(), |i, j| self.get(keep[i], keep[j]).clone())
    }

    /// Submatrix with (0-based) row `r` and column `c` removed.
    pub fn without(&self, r: usize, c: usize) -> Self {
        let rows: Vec<usize> = (0..self.order).filter(|&i| i != r).collect();
        let cols: Vec<usize> = (0..self.order).filter(|&j| j != c).collect();
        Self::from_fn(self.order.saturating_sub(1), |i, j| self.get(rows[i], cols[j]).clone())
    }
}

/// Exact determinant by Bareiss fraction-free elimination with row pivoting.
///
/// Every division is exact in an integral domain. Order 0 gives 1.
pub fn det_oracle<T: ExactDiv>(m: &DenseMatrix<T>) -> T {
    let n = m.order();
    if n == 0 {
        return T::one();
    }
    let mut a = m.rows();
    let mut negate = false;
    let mut prev = T::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    negate = !negate;
                }
                None => return T::zero(),
            }
        }
        let pivot = a[k][k].clone();
        for i in k + 1..n {
            let lead = a[i][k].clone();
            for j in k + 1..n {
                let v = pivot.clone() * a[i][j].clone() - lead.clone() * a[k][j].clone();
                a[i][j] = v / prev.clone();
            }
        }
        prev = pivot;
    }
    let d = a[n - 1][n - 1].clone();
    if negate {
        -d
    } else {
        d
    }
}

/// Signed minor `(-1)^{i+j} det(M without row i, column j)`, 1-based.
pub fn cofactor_oracle<T: ExactDiv>(m: &DenseMatrix<T>, i: usize, j: usize) -> T {
    T::neg_one_pow(i + j) * det_oracle(&m.without(i - 1, j - 1))
}

/// Principal minor after deleting the given rows and columns (1-based,
/// strictly increasing).
pub fn principal_minor<T: ExactDiv>(h: &HessenbergMatrix<T>, deleted: &[usize]) -> Result<T> {
    let n = h.order();
    let mut last = 0;
    for &d in deleted {
        if d < 1 || d > n {
            return Err(Error::domain("principal_minor", format!("index {d} outside 1..={n}")));
        }
        if d <= last {
            return Err(Error::domain(
                "principal_minor",
                "deleted indices must be strictly increasing",
            ));
        }
        last = d;
    }
    let keep: Vec<usize> = (1..=n).filter(|i| !deleted.contains(i)).map(|i| i - 1).collect();
    Ok(det_oracle(&h.to_dense().principal_submatrix(&keep)))
}

/// `S_0, ..., S_n`: the sums of all principal minors of each order, by
/// exhaustive enumeration of the `2^n` index subsets. `S_0 = 1`.
pub fn minor_sums<T>(h: &HessenbergMatrix<T>) -> Result<Vec<T>>
where
    T: ExactDiv + Send + Sync,
{
    minor_sums_within(h, DEFAULT_MINOR_BOUND)
}

pub fn minor_sums_within<T>(h: &HessenbergMatrix<T>, bound: usize) -> Result<Vec<T>>
where
    T: ExactDiv + Send + Sync,
{
    let n = h.order();
    Error::check_bound("principal-minor enumeration", n, bound.min(63))?;
    let dense = h.to_dense();
    let add = |mut acc: Vec<T>, other: Vec<T>| {
        for (a, b) in acc.iter_mut().zip(other) {
            *a = a.clone() + b;
        }
        acc
    };
    let sums = (0u64..1 << n)
        .into_par_iter()
        .fold(
            || vec![T::zero(); n + 1],
            |mut acc, mask| {
                let keep: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
                let m = det_oracle(&dense.principal_submatrix(&keep));
                acc[keep.len()] = acc[keep.len()].clone() + m;
                acc
            },
        )
        .reduce(|| vec![T::zero(); n + 1], add);
    Ok(sums)
}

/// Closed-form cofactor of entry `(i, j)` of `F_n` (1-based):
/// `f_i f_{n-j+1}` for `i <= j`, `(-1)^{i+j} f_j f_{n-i+1}` for `i > j`.
pub fn f_cofactor(n: usize, i: usize, j: usize) -> Result<BigInt> {
    if i < 1 || j < 1 || i > n || j > n {
        return Err(Error::domain("f_cofactor", format!("({i}, {j}) outside 1..={n}")));
    }
    let f = |k: usize| fib(k as i64).expect("non-negative index");
    Ok(if i <= j {
        f(i) * f(n - j + 1)
    } else {
        BigInt::neg_one_pow(i + j) * f(j) * f(n - i + 1)
    })
}

/// Matrix of closed-form cofactors of `F_n`.
pub fn f_cofactor_matrix(n: usize) -> Result<IntMatrix> {
    if n < 1 {
        return Err(Error::domain("f_cofactor_matrix", "order must be at least 1"));
    }
    Ok(DenseMatrix::from_fn(n, |i, j| {
        f_cofactor(n, i + 1, j + 1).expect("indices in range")
    }))
}

/// Determinant of the closed-form cofactor matrix of `F_n`, by the oracle.
pub fn f_adjugate_det(n: usize) -> Result<BigInt> {
    if n < 2 {
        return Err(Error::domain("f_adjugate_det", "order must be at least 2"));
    }
    Ok(det_oracle(&f_cofactor_matrix(n)?))
}

/// `a_1, ..., a_{n+1}` from `a_{m+1} = sum_{i=1}^{m} p_{i,m} a_i`.
pub fn linear_recurrence<T: Ring>(h: &HessenbergMatrix<T>, a1: T) -> Vec<T> {
    let n = h.order();
    let mut a = Vec::with_capacity(n + 1);
    a.push(a1);
    for m in 0..n {
        let next = (0..=m).fold(T::zero(), |acc, i| {
            acc + h.upper(i, m).clone() * a[i].clone()
        });
        a.push(next);
    }
    a
}

/// Checks `a_{n+1} = a_1 det A_n`, with the left side from the linear
/// recurrence and the determinant from [`det_oracle`].
pub fn verify_recurrence_determinant<T: ExactDiv>(h: &HessenbergMatrix<T>, a1: T) -> bool {
    let by_recurrence = linear_recurrence(h, a1.clone()).pop().expect("a_1 present");
    by_recurrence == a1 * det_oracle(&h.to_dense())
}
