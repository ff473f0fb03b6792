//! Convolved Fibonacci numbers `f^{(r)}_m`, the coefficient of `x^{m-1}` in
//! `(1 - x - x^2)^{-r}`.
//!
//! Three independent routes are provided: the power series
//! ([`convolved_fib`]), a double sum of binomials ([`convolved_fib_binomial`]),
//! and sums of principal minors of `F_n` ([`convolved_fib_minor_route`]).

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::fib::{choose, fib, fib_poly, fibs_from_minus_one, shift_poly};
use crate::hessenberg::{f_matrix, minor_sums_within, DEFAULT_MINOR_BOUND};
use crate::poly::{series_mul, series_pow};
use crate::scalar::Ring;

/// `1, 1, 2, 3, 5, ...`: the series of `1 / (1 - x - x^2)`, `len` terms.
fn fib_series(len: usize) -> Vec<BigInt> {
    fibs_from_minus_one(len + 2).split_off(2)
}

fn check_rm(r: usize, m: usize) -> Result<()> {
    if r < 1 || m < 1 {
        return Err(Error::domain("convolved_fib", format!("need r >= 1 and m >= 1, got r = {r}, m = {m}")));
    }
    Ok(())
}

fn check_nk(what: &'static str, n: usize, k: usize) -> Result<()> {
    if k > n {
        return Err(Error::domain(what, format!("k = {k} outside 0..={n}")));
    }
    Ok(())
}

/// `f^{(r)}_m` by raising the Fibonacci series to the `r`-th power.
pub fn convolved_fib(r: usize, m: usize) -> Result<BigInt> {
    check_rm(r, m)?;
    let mut series = series_pow(&fib_series(m), r, m);
    Ok(series.swap_remove(m - 1))
}

/// All `f^{(r)}_m` for `1 <= r <= r_max`, `1 <= m <= m_max`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConvolvedTable {
    rows: Vec<Vec<BigInt>>,
}

impl ConvolvedTable {
    /// Row `r` is obtained from row `r - 1` by one more series convolution.
    pub fn new(r_max: usize, m_max: usize) -> Result<Self> {
        check_rm(r_max, m_max)?;
        let base = fib_series(m_max);
        let mut rows = Vec::with_capacity(r_max);
        rows.push(base.clone());
        for _ in 1..r_max {
            let next = series_mul(rows.last().expect("non-empty"), &base, m_max);
            rows.push(next);
        }
        Ok(ConvolvedTable { rows })
    }

    pub fn r_max(&self) -> usize {
        self.rows.len()
    }

    pub fn m_max(&self) -> usize {
        self.rows[0].len()
    }

    /// `f^{(r)}_m`, 1-based in both indices.
    pub fn get(&self, r: usize, m: usize) -> Option<&BigInt> {
        self.rows.get(r.checked_sub(1)?)?.get(m.checked_sub(1)?)
    }

    /// Row `r` holds `f^{(r)}_1, ..., f^{(r)}_{m_max}`.
    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.rows
    }
}

/// `f^{(k+1)}_{n-k+1} = sum_{i <= (n-k)/2} C(n-i, i) C(n-2i, k)`.
pub fn convolved_fib_binomial(n: usize, k: usize) -> Result<BigInt> {
    check_nk("convolved_fib_binomial", n, k)?;
    Ok((0..=(n - k) / 2)
        .map(|i| choose(n - i, i as i64) * choose(n - 2 * i, k as i64))
        .sum())
}

/// `f^{(k+1)}_{n-k+1}` as the sum of the order `n - k` principal minors of `F_n`.
pub fn convolved_fib_minor_route(n: usize, k: usize) -> Result<BigInt> {
    convolved_fib_minor_route_within(n, k, DEFAULT_MINOR_BOUND)
}

pub fn convolved_fib_minor_route_within(n: usize, k: usize, bound: usize) -> Result<BigInt> {
    check_nk("convolved_fib_minor_route", n, k)?;
    let mut sums = minor_sums_within(&f_matrix(n)?, bound)?;
    Ok(sums.swap_remove(n - k))
}

/// Coefficients of `x^0..x^n` in `sum_k (-1)^{n-k} f^{(k+1)}_{n-k+1} x^k`.
pub fn charpoly_expansion(n: usize) -> Vec<BigInt> {
    (0..=n)
        .map(|k| {
            BigInt::neg_one_pow(n - k)
                * convolved_fib(k + 1, n - k + 1).expect("both indices are positive")
        })
        .collect()
}

/// Whether `f_{n+1}(x - 1)` has the coefficients of [`charpoly_expansion`].
pub fn verify_charpoly_coefficients(n: usize) -> bool {
    let shifted = shift_poly(&fib_poly(n + 1).expect("n + 1 >= 1"));
    let expected = charpoly_expansion(n);
    (0..=n).all(|k| shifted.coeff(k) == expected[k]) && shifted.degree() == Some(n)
}

/// `(-1)^n sum_k sum_i (-2)^k C(n-i, i) C(n-2i, k)`, which should equal `f_{n+1}`.
pub fn alternating_sum(n: usize) -> BigInt {
    let mut total = BigInt::zero();
    let mut weight = BigInt::one();
    for k in 0..=n {
        let inner: BigInt = (0..=(n - k) / 2)
            .map(|i| choose(n - i, i as i64) * choose(n - 2 * i, k as i64))
            .sum();
        total += &weight * inner;
        weight *= -2;
    }
    BigInt::neg_one_pow(n) * total
}

pub fn verify_alternating_identity(n: usize) -> bool {
    alternating_sum(n) == fib(n as i64 + 1).expect("non-negative index")
}
