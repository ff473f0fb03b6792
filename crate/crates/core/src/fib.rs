//! Fibonacci numbers on the extended index range `n >= -1`, Fibonacci
//! polynomials and binomial coefficients.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::scalar::Ring;
use crate::IntPolynomial;

/// `f_n` in any ring, with `f_{-1} = 1`, `f_0 = 0`.
pub fn fib_in<T: Ring>(n: i64) -> Result<T> {
    if n < -1 {
        return Err(Error::domain("fib", format!("index {n} is below -1")));
    }
    // (f_{m-1}, f_m) starting at m = -1, where f_{-2} would be -1
    let (mut prev, mut cur) = (-T::one(), T::one());
    for _ in -1..n {
        let next = prev + cur.clone();
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// `f_n` for `n >= -1`.
pub fn fib(n: i64) -> Result<BigInt> {
    fib_in(n)
}

/// `[f_{-1}, f_0, f_1, ..., f_{count-2}]`: entry `i` holds `f_{i-1}`.
pub fn fibs_from_minus_one(count: usize) -> Vec<BigInt> {
    let mut out = Vec::with_capacity(count);
    let (mut a, mut b) = (BigInt::one(), BigInt::zero());
    for _ in 0..count {
        let next = &a + &b;
        out.push(std::mem::replace(&mut a, b));
        b = next;
    }
    out
}

/// Fibonacci polynomial `f_n(x)` for `n >= 1`: `f_1 = 1`, `f_2 = x`,
/// `f_{n+1} = x f_n + f_{n-1}`.
pub fn fib_poly(n: usize) -> Result<IntPolynomial> {
    if n < 1 {
        return Err(Error::domain("fib_poly", "index must be at least 1"));
    }
    let x = Polynomial::x();
    let (mut prev, mut cur) = (Polynomial::zero(), Polynomial::one());
    for _ in 1..n {
        let next = &(&x * &cur) + &prev;
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// `f_{n+1}(x) = sum_{i <= n/2} C(n-i, i) x^{n-2i}`, straight from binomials.
pub fn fib_poly_explicit(n: usize) -> IntPolynomial {
    let mut coeffs = vec![BigInt::zero(); n + 1];
    for i in 0..=n / 2 {
        coeffs[n - 2 * i] = choose(n - i, i as i64);
    }
    Polynomial::new(coeffs)
}

/// `p(x - 1)`.
pub fn shift_poly<T: Ring>(p: &Polynomial<T>) -> Polynomial<T> {
    p.translate(-T::one())
}

/// `C(a, b)`, zero when `b < 0` or `b > a`.
pub fn binomial(a: i64, b: i64) -> Result<BigInt> {
    if a < 0 {
        return Err(Error::domain("binomial", format!("upper index {a} is negative")));
    }
    Ok(choose(a as usize, b))
}

pub(crate) fn choose(a: usize, b: i64) -> BigInt {
    if b < 0 || b as usize > a {
        return BigInt::zero();
    }
    let b = (b as usize).min(a - b as usize);
    let mut acc = BigInt::one();
    for i in 0..b {
        // acc * (a - i) is divisible by i + 1 at every step
        acc = acc * BigInt::from(a - i) / BigInt::from(i + 1);
    }
    acc
}
