//! Dense univariate polynomials over a [`Ring`].

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::scalar::Ring;

/// Dense polynomial; `coeffs[i]` is the coefficient of `x^i`.
///
/// The coefficient vector never ends in a zero, so the zero polynomial is the
/// empty vector and `degree == len - 1` otherwise.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial<T> {
    coeffs: Vec<T>,
}

impl<T: Ring> Polynomial<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn constant(c: T) -> Self {
        Self::new(vec![c])
    }

    /// `c * x^degree`
    pub fn monomial(c: T, degree: usize) -> Self {
        let mut coeffs = vec![T::zero(); degree + 1];
        coeffs[degree] = c;
        Self::new(coeffs)
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        Self::monomial(T::one(), 1)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    /// Coefficient of `x^i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> T {
        self.coeffs.get(i).cloned().unwrap_or_else(T::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    /// `self(inner(x))`, by Horner's scheme in the polynomial ring.
    pub fn compose(&self, inner: &Polynomial<T>) -> Polynomial<T> {
        self.coeffs.iter().rev().fold(Polynomial::zero(), |acc, c| {
            &(&acc * inner) + &Polynomial::constant(c.clone())
        })
    }

    /// `self(x + by)`.
    pub fn translate(&self, by: T) -> Polynomial<T> {
        self.compose(&Polynomial::new(vec![by, T::one()]))
    }

    pub fn scale(&self, c: &T) -> Polynomial<T> {
        Polynomial::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }
}

/// Product of two power series truncated to `len` coefficients.
pub fn series_mul<T: Ring>(a: &[T], b: &[T], len: usize) -> Vec<T> {
    let mut out = vec![T::zero(); len];
    for (i, ai) in a.iter().enumerate().take(len) {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate().take(len - i) {
            out[i + j] = out[i + j].clone() + ai.clone() * bj.clone();
        }
    }
    out
}

/// `base^exp` as a power series truncated to `len` coefficients.
pub fn series_pow<T: Ring>(base: &[T], exp: usize, len: usize) -> Vec<T> {
    let mut acc = vec![T::zero(); len];
    if len == 0 {
        return acc;
    }
    acc[0] = T::one();
    let mut square: Vec<T> = base.iter().take(len).cloned().collect();
    let mut e = exp;
    while e > 0 {
        if e & 1 == 1 {
            acc = series_mul(&acc, &square, len);
        }
        e >>= 1;
        if e > 0 {
            square = series_mul(&square, &square, len);
        }
    }
    acc
}

impl<T: Ring> Add for &Polynomial<T> {
    type Output = Polynomial<T>;

    fn add(self, rhs: &Polynomial<T>) -> Polynomial<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<T: Ring> Sub for &Polynomial<T> {
    type Output = Polynomial<T>;

    fn sub(self, rhs: &Polynomial<T>) -> Polynomial<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl<T: Ring> Mul for &Polynomial<T> {
    type Output = Polynomial<T>;

    fn mul(self, rhs: &Polynomial<T>) -> Polynomial<T> {
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return Polynomial::zero();
        }
        let len = self.coeffs.len() + rhs.coeffs.len() - 1;
        Polynomial::new(series_mul(&self.coeffs, &rhs.coeffs, len))
    }
}

impl<T: Ring> Neg for &Polynomial<T> {
    type Output = Polynomial<T>;

    fn neg(self) -> Polynomial<T> {
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }
}

macro_rules! owned_binop {
    ($tr:ident, $method:ident) => {
        impl<T: Ring> $tr for Polynomial<T> {
            type Output = Polynomial<T>;

            fn $method(self, rhs: Polynomial<T>) -> Polynomial<T> {
                (&self).$method(&rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl<T: Ring> Neg for Polynomial<T> {
    type Output = Polynomial<T>;

    fn neg(self) -> Polynomial<T> {
        -&self
    }
}

impl<T: Ring> Zero for Polynomial<T> {
    fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<T: Ring> One for Polynomial<T> {
    fn one() -> Self {
        Polynomial::constant(T::one())
    }
}

/// Highest power first, e.g. `x^2 - 2x + 2`.
impl<T: Ring + PartialOrd + fmt::Display> fmt::Display for Polynomial<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (power, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let negative = *c < T::zero();
            let magnitude = if negative { -c.clone() } else { c.clone() };
            match (first, negative) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            first = false;
            if power == 0 || !magnitude.is_one() {
                write!(f, "{magnitude}")?;
            }
            match power {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{power}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> Polynomial<i64> {
        Polynomial::new(c.to_vec())
    }

    #[test]
    fn normalizes_trailing_zeros() {
        assert_eq!(p(&[1, 2, 0, 0]).coeffs(), &[1, 2]);
        assert!(p(&[0, 0]).is_zero());
        assert_eq!(p(&[0]).degree(), None);
        assert_eq!(p(&[3, 0, 1]).degree(), Some(2));
    }

    #[test]
    fn arithmetic() {
        let a = p(&[1, 1]);
        let b = p(&[-1, 1]);
        assert_eq!(&a * &b, p(&[-1, 0, 1]));
        assert_eq!(&a + &b, p(&[0, 2]));
        assert_eq!(&a - &a, Polynomial::zero());
        assert_eq!(-a.clone(), p(&[-1, -1]));
    }

    #[test]
    fn compose_and_eval() {
        // (x^2 + 1)(x - 1) = x^2 - 2x + 2
        let q = p(&[1, 0, 1]).translate(-1);
        assert_eq!(q, p(&[2, -2, 1]));
        assert_eq!(q.eval(&3), 5);
        assert_eq!(p(&[7]).compose(&p(&[4, 5])), p(&[7]));
    }

    #[test]
    fn series_power_matches_repeated_product() {
        let base = [1i64, 1, 2, 3, 5, 8];
        let mut direct = vec![1i64, 0, 0, 0, 0, 0];
        for _ in 0..3 {
            direct = series_mul(&direct, &base, 6);
        }
        assert_eq!(series_pow(&base, 3, 6), direct);
        assert_eq!(series_pow(&base, 0, 3), vec![1, 0, 0]);
    }

    #[test]
    fn display() {
        assert_eq!(p(&[2, -2, 1]).to_string(), "x^2 - 2x + 2");
        assert_eq!(p(&[0, -1]).to_string(), "-x");
        assert_eq!(p(&[-3]).to_string(), "-3");
        assert_eq!(p(&[]).to_string(), "0");
        assert_eq!(p(&[1, 0, 0, 4]).to_string(), "4x^3 + 1");
    }
}
