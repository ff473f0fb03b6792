//! `c(n, k)`: the number of compositions of `n` with exactly `k` parts equal
//! to one (OEIS A105422).
//!
//! Routes:
//!
//! - [`Route::BruteForce`]: enumerate all `2^{n-1}` compositions.
//! - [`Route::Formula`]: the Fibonacci convolution
//!   `sum_{j_1 + ... + j_{k+1} = n-2k-1, j_t >= -1} f_{j_1} ... f_{j_{k+1}}`,
//!   evaluated as the coefficient of `x^{n-k}` in `G(x)^{k+1}` with
//!   `G(x) = sum_{m >= 0} f_{m-1} x^m`.
//! - [`Route::Recurrence`]: `c(n, k) = sum_{j=-1}^{n-k-1} f_j c(n-j-2, k-1)`,
//!   seeded with `c(n, 0) = f_{n-1}`.
//! - [`Route::Bitstring`]: length-`n` bit strings starting with `0`, counted
//!   by the number of maximal runs of length exactly one.
//! - [`Route::Minors`]: sums of principal minors of order `n - k` of `G_n`.
//!
//! Degenerate rows follow `c(0, 0) = 1` (the empty composition) and
//! `c(m, k) = 0` outside `0 <= k <= m`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::fib::{fib, fibs_from_minus_one};
use crate::hessenberg::{g_matrix_or_empty, minor_sums_within, DEFAULT_MINOR_BOUND};
use crate::poly::series_mul;

/// Default cap on `n` for routes that enumerate `2^{n-1}` objects.
pub const DEFAULT_COMPOSITION_BOUND: usize = 24;

/// An ordered sequence of positive parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::domain("composition", "parts must be positive"));
        }
        Ok(Composition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of parts equal to one.
    pub fn ones(&self) -> usize {
        self.parts.iter().filter(|&&p| p == 1).count()
    }
}

/// Iterator over the compositions of `n`.
///
/// Bit `i` of the cut mask places a cut after the `(i+1)`-th unit, so the
/// order starts with `(n)` and ends with `(1, ..., 1)`.
#[derive(Clone, Debug)]
pub struct Compositions {
    n: usize,
    mask: u64,
    end: u64,
}

impl Iterator for Compositions {
    type Item = Composition;

    fn next(&mut self) -> Option<Composition> {
        if self.mask >= self.end {
            return None;
        }
        let mask = self.mask;
        self.mask += 1;
        if self.n == 0 {
            return Some(Composition { parts: Vec::new() });
        }
        let mut parts = Vec::with_capacity(mask.count_ones() as usize + 1);
        let mut run = 1;
        for i in 0..self.n - 1 {
            if mask >> i & 1 == 1 {
                parts.push(run);
                run = 1;
            } else {
                run += 1;
            }
        }
        parts.push(run);
        Some(Composition { parts })
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.end - self.mask) as usize;
        (left, Some(left))
    }
}

impl ExactSizeIterator for Compositions {}

pub fn enumerate_compositions(n: usize) -> Result<Compositions> {
    enumerate_compositions_within(n, DEFAULT_COMPOSITION_BOUND)
}

pub fn enumerate_compositions_within(n: usize, bound: usize) -> Result<Compositions> {
    Error::check_bound("composition enumeration", n, bound.min(63))?;
    let end = if n == 0 { 1 } else { 1u64 << (n - 1) };
    Ok(Compositions { n, mask: 0, end })
}

fn check_nk(what: &'static str, n: usize, k: usize) -> Result<()> {
    if k > n {
        return Err(Error::domain(what, format!("k = {k} outside 0..={n}")));
    }
    Ok(())
}

fn histogram(n: usize, counts: impl Iterator<Item = usize>) -> Vec<BigInt> {
    let mut row = vec![0u64; n + 1];
    for k in counts {
        row[k] += 1;
    }
    row.into_iter().map(BigInt::from).collect()
}

/// Row `n` of the triangle by enumerating compositions.
pub fn row_bruteforce_within(n: usize, bound: usize) -> Result<Vec<BigInt>> {
    Ok(histogram(n, enumerate_compositions_within(n, bound)?.map(|c| c.ones())))
}

pub fn c_bruteforce(n: usize, k: usize) -> Result<BigInt> {
    check_nk("c_bruteforce", n, k)?;
    Ok(row_bruteforce_within(n, DEFAULT_COMPOSITION_BOUND)?.swap_remove(k))
}

/// Which index sum the Fibonacci-convolution formula uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IndexConvention {
    /// `j_1 + ... + j_{k+1} = n - 2k - 1`; agrees with every other route.
    Corrected,
    /// `j_1 + ... + j_{k+1} = n - 2k + 1`, the misprinted constraint.
    /// Disagrees with the count, e.g. 5 instead of 2 at `(n, k) = (3, 1)`.
    AsPrinted,
}

impl IndexConvention {
    fn index_sum(self, n: usize, k: usize) -> i64 {
        let base = n as i64 - 2 * k as i64;
        match self {
            IndexConvention::Corrected => base - 1,
            IndexConvention::AsPrinted => base + 1,
        }
    }

    /// Power of `x` whose coefficient in `G^{k+1}` is the formula value.
    fn series_index(self, n: usize, k: usize) -> i64 {
        self.index_sum(n, k) + k as i64 + 1
    }
}

/// Rows `0..=n_max` of the formula route, sharing the powers of `G`.
pub fn formula_triangle(n_max: usize, convention: IndexConvention) -> Vec<Vec<BigInt>> {
    // AsPrinted reaches two degrees further than Corrected
    let len = n_max + 3;
    let g = fibs_from_minus_one(len);
    let mut powers = Vec::with_capacity(n_max + 1);
    powers.push(g.clone());
    for _ in 0..n_max {
        let next = series_mul(powers.last().expect("non-empty"), &g, len);
        powers.push(next);
    }
    (0..=n_max)
        .map(|n| {
            (0..=n)
                .map(|k| {
                    let idx = convention.series_index(n, k);
                    if idx < 0 {
                        BigInt::zero()
                    } else {
                        powers[k][idx as usize].clone()
                    }
                })
                .collect()
        })
        .collect()
}

pub fn c_formula(n: usize, k: usize) -> Result<BigInt> {
    c_formula_with(n, k, IndexConvention::Corrected)
}

pub fn c_formula_with(n: usize, k: usize, convention: IndexConvention) -> Result<BigInt> {
    check_nk("c_formula", n, k)?;
    let idx = convention.series_index(n, k);
    if idx < 0 {
        return Ok(BigInt::zero());
    }
    let g = fibs_from_minus_one(idx as usize + 1);
    let mut acc = g.clone();
    for _ in 0..k {
        acc = series_mul(&acc, &g, g.len());
    }
    Ok(acc.swap_remove(idx as usize))
}

/// The formula as a literal sum over index tuples `j_t >= -1`. Exponential;
/// a reference for small `n` only.
pub fn c_tuple_sum(n: usize, k: usize, convention: IndexConvention) -> Result<BigInt> {
    check_nk("c_tuple_sum", n, k)?;
    fn go(parts: usize, target: i64) -> BigInt {
        if parts == 0 {
            return if target == 0 { BigInt::one() } else { BigInt::zero() };
        }
        // remaining parts are each at least -1
        let max_j = target + (parts as i64 - 1);
        (-1..=max_j)
            .map(|j| {
                let f = fib(j).expect("j >= -1");
                if f.is_zero() {
                    f
                } else {
                    f * go(parts - 1, target - j)
                }
            })
            .sum()
    }
    Ok(go(k + 1, convention.index_sum(n, k)))
}

/// Rows `0..=n_max` of the recurrence route.
pub fn recurrence_triangle(n_max: usize) -> Vec<Vec<BigInt>> {
    let f = fibs_from_minus_one(n_max + 1);
    // f_j for j >= -1 lives at f[j + 1]
    let mut t: Vec<Vec<BigInt>> = Vec::with_capacity(n_max + 1);
    for m in 0..=n_max {
        let mut row = Vec::with_capacity(m + 1);
        row.push(f[m].clone());
        for k in 1..=m {
            let mut v = BigInt::zero();
            // j runs over -1..=m-k-1; shifted s = j + 1 runs over 0..=m-k
            for s in 0..=m - k {
                if f[s].is_zero() {
                    continue;
                }
                let rest = m - s - 1;
                v += &f[s] * &t[rest][k - 1];
            }
            row.push(v);
        }
        t.push(row);
    }
    t
}

pub fn c_recurrence(n: usize, k: usize) -> Result<BigInt> {
    check_nk("c_recurrence", n, k)?;
    Ok(recurrence_triangle(n).swap_remove(n).swap_remove(k))
}

/// Lengths of the maximal runs of equal bits in the low `len` bits of
/// `bits`, read from bit 0 upwards.
pub fn run_lengths(bits: u64, len: usize) -> Vec<usize> {
    let mut runs = Vec::new();
    let mut i = 0;
    while i < len {
        let b = bits >> i & 1;
        let start = i;
        while i < len && bits >> i & 1 == b {
            i += 1;
        }
        runs.push(i - start);
    }
    runs
}

/// Maximal runs of length exactly one.
pub fn singles(bits: u64, len: usize) -> usize {
    run_lengths(bits, len).into_iter().filter(|&r| r == 1).count()
}

/// Row `n` of the bit-string route. Bit 0 is the leading `0`; the remaining
/// `n - 1` bits range freely. `n = 0` counts the empty string once.
pub fn row_bitstring_within(n: usize, bound: usize) -> Result<Vec<BigInt>> {
    Error::check_bound("bit-string enumeration", n, bound.min(63))?;
    if n == 0 {
        return Ok(vec![BigInt::one()]);
    }
    Ok(histogram(n, (0u64..1 << (n - 1)).map(|tail| singles(tail << 1, n))))
}

pub fn bitstring_singles_oracle(n: usize, k: usize) -> Result<BigInt> {
    check_nk("bitstring_singles_oracle", n, k)?;
    Ok(row_bitstring_within(n, DEFAULT_COMPOSITION_BOUND)?.swap_remove(k))
}

/// Row `n` from the principal-minor sums of `G_n`; `G_0` is the empty matrix.
pub fn row_minors_within(n: usize, bound: usize) -> Result<Vec<BigInt>> {
    let sums = minor_sums_within(&g_matrix_or_empty(n), bound)?;
    Ok(sums.into_iter().rev().collect())
}

pub fn c_minor_route(n: usize, k: usize) -> Result<BigInt> {
    check_nk("c_minor_route", n, k)?;
    Ok(row_minors_within(n, DEFAULT_MINOR_BOUND)?.swap_remove(k))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Route {
    BruteForce,
    Formula,
    Recurrence,
    Bitstring,
    Minors,
}

impl Route {
    pub const ALL: [Route; 5] = [
        Route::BruteForce,
        Route::Formula,
        Route::Recurrence,
        Route::Bitstring,
        Route::Minors,
    ];

    pub fn label(self) -> &'static str {
        match self {
            Route::BruteForce => "bruteforce",
            Route::Formula => "formula",
            Route::Recurrence => "recurrence",
            Route::Bitstring => "bitstring",
            Route::Minors => "minors",
        }
    }
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for Route {
    type Err = Error;

    fn from_str(s: &str) -> Result<Route> {
        Route::ALL
            .into_iter()
            .find(|r| r.label() == s)
            .ok_or_else(|| Error::domain("route", format!("unknown route {s:?}")))
    }
}

/// Enumeration caps for the exhaustive routes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest matrix order for principal-minor enumeration.
    pub minors: usize,
    /// Largest `n` for composition and bit-string enumeration.
    pub compositions: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            minors: DEFAULT_MINOR_BOUND,
            compositions: DEFAULT_COMPOSITION_BOUND,
        }
    }
}

impl Limits {
    /// The same cap for every enumeration.
    pub fn uniform(bound: usize) -> Self {
        Limits {
            minors: bound,
            compositions: bound,
        }
    }
}

/// Row `n` of a number triangle, `values[k]` for `k = 0..=n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriangleRow {
    pub n: usize,
    pub values: Vec<BigInt>,
    pub route: Route,
}

/// Rows `0..=n_max` by the chosen route.
pub fn triangle(n_max: usize, route: Route, limits: &Limits) -> Result<Vec<TriangleRow>> {
    let rows: Vec<Vec<BigInt>> = match route {
        Route::Formula => formula_triangle(n_max, IndexConvention::Corrected),
        Route::Recurrence => recurrence_triangle(n_max),
        Route::BruteForce => {
            Error::check_bound("composition enumeration", n_max, limits.compositions)?;
            (0..=n_max)
                .map(|n| row_bruteforce_within(n, limits.compositions))
                .collect::<Result<_>>()?
        }
        Route::Bitstring => {
            Error::check_bound("bit-string enumeration", n_max, limits.compositions)?;
            (0..=n_max)
                .map(|n| row_bitstring_within(n, limits.compositions))
                .collect::<Result<_>>()?
        }
        Route::Minors => {
            Error::check_bound("principal-minor enumeration", n_max, limits.minors)?;
            (0..=n_max)
                .map(|n| row_minors_within(n, limits.minors))
                .collect::<Result<_>>()?
        }
    };
    Ok(rows
        .into_iter()
        .enumerate()
        .map(|(n, values)| TriangleRow { n, values, route })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeMap;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn row(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| big(x)).collect()
    }

    #[test]
    fn enumeration() {
        let zero: Vec<_> = enumerate_compositions(0).unwrap().collect();
        assert_eq!(zero, vec![Composition::new(vec![]).unwrap()]);
        let three: Vec<Vec<usize>> = enumerate_compositions(3)
            .unwrap()
            .map(|c| c.parts().to_vec())
            .collect();
        assert_eq!(three, vec![vec![3], vec![1, 2], vec![2, 1], vec![1, 1, 1]]);
        assert_eq!(enumerate_compositions(10).unwrap().count(), 512);
        assert_eq!(enumerate_compositions(10).unwrap().len(), 512);
        for c in enumerate_compositions(9).unwrap() {
            assert_eq!(c.total(), 9);
        }
        assert!(matches!(
            enumerate_compositions(25),
            Err(Error::BoundExceeded { n: 25, bound: 24, .. })
        ));
        assert!(Composition::new(vec![1, 0]).is_err());
    }

    #[test]
    fn bruteforce_values() {
        assert_eq!(c_bruteforce(3, 1).unwrap(), big(2));
        assert_eq!(c_bruteforce(4, 2).unwrap(), big(3));
        for n in 0..12 {
            assert_eq!(c_bruteforce(n, n).unwrap(), big(1));
        }
        assert!(c_bruteforce(3, 4).is_err());
    }

    #[test]
    fn formula_values() {
        assert_eq!(c_formula(3, 1).unwrap(), big(2));
        for n in 0..=30 {
            assert_eq!(c_formula(n, 0).unwrap(), fib(n as i64 - 1).unwrap());
            assert_eq!(c_formula(n, n).unwrap(), big(1));
        }
        assert!(c_formula(2, 3).is_err());
    }

    #[test]
    fn misprinted_index_fails_at_three_one() {
        assert_eq!(c_formula_with(3, 1, IndexConvention::AsPrinted).unwrap(), big(5));
        assert_eq!(c_tuple_sum(3, 1, IndexConvention::AsPrinted).unwrap(), big(5));
        assert_eq!(c_bruteforce(3, 1).unwrap(), big(2));
        // k = 0 gives f_{n+1} under the misprint
        for n in 1..10 {
            assert_eq!(
                c_formula_with(n, 0, IndexConvention::AsPrinted).unwrap(),
                fib(n as i64 + 1).unwrap()
            );
        }
    }

    #[test]
    fn series_and_tuple_sum_agree() {
        for convention in [IndexConvention::Corrected, IndexConvention::AsPrinted] {
            let tri = formula_triangle(14, convention);
            for n in 0..=14 {
                for k in 0..=n {
                    let t = c_tuple_sum(n, k, convention).unwrap();
                    assert_eq!(tri[n][k], t, "{convention:?} ({n},{k})");
                    assert_eq!(c_formula_with(n, k, convention).unwrap(), t);
                }
            }
        }
    }

    #[test]
    fn recurrence_values() {
        assert_eq!(c_recurrence(4, 1).unwrap(), big(2));
        for k in 0..15 {
            assert_eq!(c_recurrence(k, k).unwrap(), big(1));
        }
        let rec = recurrence_triangle(30);
        let formula = formula_triangle(30, IndexConvention::Corrected);
        assert_eq!(rec, formula);
    }

    #[test]
    fn bitstring_values() {
        assert_eq!(bitstring_singles_oracle(3, 1).unwrap(), big(2));
        assert_eq!(bitstring_singles_oracle(3, 3).unwrap(), big(1));
        assert_eq!(bitstring_singles_oracle(3, 0).unwrap(), big(1));
        assert_eq!(run_lengths(0b0110, 4), vec![1, 2, 1]);
        assert_eq!(singles(0b010, 3), 3);
    }

    #[test]
    fn minor_route_values() {
        assert_eq!(c_minor_route(4, 0).unwrap(), big(2));
        assert_eq!(c_minor_route(4, 2).unwrap(), big(3));
        assert_eq!(c_minor_route(3, 3).unwrap(), big(1));
        assert_eq!(c_minor_route(0, 0).unwrap(), big(1));
    }

    #[test]
    fn small_rows_by_every_route() {
        let limits = Limits::default();
        for route in Route::ALL {
            let t = triangle(4, route, &limits).unwrap();
            let values: Vec<_> = t.iter().map(|r| r.values.clone()).collect();
            assert_eq!(
                values,
                vec![row(&[1]), row(&[0, 1]), row(&[1, 0, 1]), row(&[1, 2, 0, 1]), row(&[2, 2, 3, 0, 1])],
                "{route}"
            );
            assert!(t.iter().all(|r| r.route == route && r.values.len() == r.n + 1));
        }
    }

    #[test]
    fn bound_enforcement() {
        let limits = Limits::default();
        assert!(matches!(
            triangle(30, Route::BruteForce, &limits),
            Err(Error::BoundExceeded { .. })
        ));
        assert!(triangle(30, Route::Formula, &limits).is_ok());
        assert!(triangle(5, Route::Minors, &Limits::uniform(4)).is_err());
    }

    #[test]
    fn runs_biject_with_parts() {
        for n in 1..=14usize {
            let mut from_bits: BTreeMap<usize, Vec<Vec<usize>>> = BTreeMap::new();
            for tail in 0u64..1 << (n - 1) {
                let runs = run_lengths(tail << 1, n);
                let k = runs.iter().filter(|&&r| r == 1).count();
                from_bits.entry(k).or_default().push(runs);
            }
            let mut from_parts: BTreeMap<usize, Vec<Vec<usize>>> = BTreeMap::new();
            for c in enumerate_compositions(n).unwrap() {
                from_parts.entry(c.ones()).or_default().push(c.parts().to_vec());
            }
            for v in from_bits.values_mut().chain(from_parts.values_mut()) {
                v.sort();
            }
            assert_eq!(from_bits, from_parts, "n={n}");
        }
    }

    #[test]
    fn route_names_round_trip() {
        for r in Route::ALL {
            assert_eq!(r.label().parse::<Route>().unwrap(), r);
        }
        assert!("nope".parse::<Route>().is_err());
    }
}
