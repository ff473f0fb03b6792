//! Verification suites: every check compares the values that several
//! independent routes give for one cell, so a failing check always carries
//! the cell coordinates and the disagreeing values.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::{One, Pow, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::compositions::{
    formula_triangle, recurrence_triangle, row_bitstring_within, row_bruteforce_within,
    row_minors_within, IndexConvention,
};
use crate::convolved::{charpoly_expansion, convolved_fib_binomial, alternating_sum, ConvolvedTable};
use crate::error::{Error, Result};
use crate::fib::{fib, fib_poly, fib_poly_explicit, shift_poly};
use crate::hessenberg::{
    cofactor_oracle, det_oracle, f_adjugate_det, f_cofactor, f_matrix, g_matrix,
    linear_recurrence, minor_sums_within, random_int_hessenberg,
};
use crate::scalar::Ring;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    All,
    /// Hessenberg determinants: `det F_n`, `det G_n`, random recurrence tables.
    Thm11,
    /// Principal-minor sums of `F_n` against the series and binomial routes.
    Minors,
    /// Characteristic polynomial of `F_n` against `f_{n+1}(x - 1)`.
    Charpoly,
    /// Alternating binomial identity for `f_{n+1}`.
    Identity24,
    /// Closed-form cofactors of `F_n` and the determinant of their matrix.
    Adjugate,
    /// Five routes for `c(n, k)` plus structural row checks.
    Compositions,
}

impl Suite {
    pub const INDIVIDUAL: [Suite; 6] = [
        Suite::Thm11,
        Suite::Minors,
        Suite::Charpoly,
        Suite::Identity24,
        Suite::Adjugate,
        Suite::Compositions,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::All => "all",
            Suite::Thm11 => "thm11",
            Suite::Minors => "minors",
            Suite::Charpoly => "charpoly",
            Suite::Identity24 => "identity24",
            Suite::Adjugate => "adjugate",
            Suite::Compositions => "compositions",
        }
    }

    pub fn default_nmax(self) -> usize {
        match self {
            Suite::All => 0,
            Suite::Thm11 => 25,
            Suite::Minors => 40,
            Suite::Charpoly => 15,
            Suite::Identity24 => 40,
            Suite::Adjugate => 10,
            Suite::Compositions => 18,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Suite> {
        std::iter::once(Suite::All)
            .chain(Suite::INDIVIDUAL)
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::domain("suite", format!("unknown suite {s:?}")))
    }
}

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    /// Overrides each suite's default range.
    pub nmax: Option<usize>,
    /// Largest order for principal-minor enumeration.
    pub minor_bound: usize,
    /// Largest `n` for composition and bit-string enumeration.
    pub composition_bound: usize,
    /// Index sum used by the formula route of the compositions suite.
    pub convention: IndexConvention,
    /// Seed for the random Hessenberg tables.
    pub seed: u64,
    /// Number of random Hessenberg tables.
    pub random_tables: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            nmax: None,
            minor_bound: 14,
            composition_bound: 18,
            convention: IndexConvention::Corrected,
            seed: 0x5eed,
            random_tables: 50,
        }
    }
}

/// Outcome of comparing several routes on one cell.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub claim: &'static str,
    /// Cell coordinates, e.g. `[("n", 3), ("k", 1)]`.
    pub at: Vec<(&'static str, i64)>,
    /// Value produced by each route.
    pub values: Vec<(String, BigInt)>,
}

impl Check {
    fn new(claim: &'static str, at: Vec<(&'static str, i64)>, values: Vec<(String, BigInt)>) -> Self {
        Check { claim, at, values }
    }

    pub fn passed(&self) -> bool {
        self.values.windows(2).all(|w| w[0].1 == w[1].1)
    }

    /// The cell and the disagreeing values, when the check failed.
    pub fn counterexample(&self) -> Option<Counterexample<'_>> {
        (!self.passed()).then_some(Counterexample(self))
    }

    pub fn coordinate(&self, name: &str) -> Option<i64> {
        self.at.iter().find(|(n, _)| *n == name).map(|&(_, v)| v)
    }
}

pub struct Counterexample<'a>(&'a Check);

impl fmt::Display for Counterexample<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = self.0;
        let at: Vec<String> = c.at.iter().map(|(n, v)| format!("{n}={v}")).collect();
        let values: Vec<String> = c.values.iter().map(|(r, v)| format!("{r}={v}")).collect();
        write!(f, "{} at ({}): {}", c.claim, at.join(", "), values.join(", "))
    }
}

#[derive(Clone, Debug)]
pub struct VerifyReport {
    pub suite: Suite,
    pub checks: Vec<Check>,
    pub duration: Duration,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed())
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // claims in first-seen order
        let mut claims: Vec<&'static str> = Vec::new();
        for c in &self.checks {
            if !claims.contains(&c.claim) {
                claims.push(c.claim);
            }
        }
        for claim in claims {
            let of_claim: Vec<&Check> = self.checks.iter().filter(|c| c.claim == claim).collect();
            let ok = of_claim.iter().filter(|c| c.passed()).count();
            let status = if ok == of_claim.len() { "pass" } else { "FAIL" };
            writeln!(f, "[{}] {status} {claim}: {ok}/{} cells agree", self.suite, of_claim.len())?;
        }
        for c in self.failures() {
            writeln!(f, "[{}]   counterexample: {}", self.suite, c.counterexample().expect("failed"))?;
        }
        let status = if self.passed() { "PASS" } else { "FAIL" };
        write!(f, "[{}] {status} in {:.3}s", self.suite, self.duration.as_secs_f64())
    }
}

/// Runs one suite, or every suite for [`Suite::All`].
pub fn run(suite: Suite, config: &VerifyConfig) -> Result<Vec<VerifyReport>> {
    match suite {
        Suite::All => Suite::INDIVIDUAL
            .par_iter()
            .map(|&s| run_one(s, config))
            .collect(),
        s => Ok(vec![run_one(s, config)?]),
    }
}

pub fn run_one(suite: Suite, config: &VerifyConfig) -> Result<VerifyReport> {
    let start = Instant::now();
    let nmax = config.nmax.unwrap_or(suite.default_nmax());
    let checks = match suite {
        Suite::All => return Err(Error::domain("verify", "run_one needs a single suite")),
        Suite::Thm11 => thm11(nmax, config)?,
        Suite::Minors => minors(nmax, config)?,
        Suite::Charpoly => charpoly(nmax, config)?,
        Suite::Identity24 => identity24(nmax)?,
        Suite::Adjugate => adjugate(nmax)?,
        Suite::Compositions => compositions(nmax, config)?,
    };
    Ok(VerifyReport {
        suite,
        checks,
        duration: start.elapsed(),
    })
}

fn v(route: &str, value: BigInt) -> (String, BigInt) {
    (route.to_string(), value)
}

fn nk(n: usize, k: usize) -> Vec<(&'static str, i64)> {
    vec![("n", n as i64), ("k", k as i64)]
}

fn thm11(nmax: usize, config: &VerifyConfig) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    for n in 1..=nmax {
        let f = f_matrix(n)?;
        checks.push(Check::new(
            "det F_n = f_{n+1}",
            vec![("n", n as i64)],
            vec![
                v("recurrence", f.det()),
                v("oracle", det_oracle(&f.to_dense())),
                v("fib", fib(n as i64 + 1)?),
            ],
        ));
        let g = g_matrix(n)?;
        checks.push(Check::new(
            "det G_n = f_{n-1}",
            vec![("n", n as i64)],
            vec![
                v("recurrence", g.det()),
                v("oracle", det_oracle(&g.to_dense())),
                v("fib", fib(n as i64 - 1)?),
            ],
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let max_order = nmax.clamp(1, 10);
    for instance in 0..config.random_tables {
        let n = rng.gen_range(1..=max_order);
        let h = random_int_hessenberg(n, -3, 3, &mut rng);
        let a1 = BigInt::from(rng.gen_range(-3..=3));
        let by_recurrence = linear_recurrence(&h, a1.clone()).pop().expect("a_1 present");
        checks.push(Check::new(
            "a_{n+1} = a_1 det A_n (random tables)",
            vec![("instance", instance as i64), ("n", n as i64)],
            vec![
                v("linear recurrence", by_recurrence),
                v("a_1 * oracle det", a1 * det_oracle(&h.to_dense())),
            ],
        ));
    }
    Ok(checks)
}

fn minors(nmax: usize, config: &VerifyConfig) -> Result<Vec<Check>> {
    let table = ConvolvedTable::new(nmax + 1, nmax + 1)?;
    let mut checks = Vec::new();
    for n in 1..=nmax {
        let sums = if n <= config.minor_bound {
            Some(minor_sums_within(&f_matrix(n)?, config.minor_bound)?)
        } else {
            None
        };
        for k in 0..=n {
            let mut values = vec![
                v("series", table.get(k + 1, n - k + 1).expect("in table").clone()),
                v("binomial", convolved_fib_binomial(n, k)?),
            ];
            if let Some(s) = &sums {
                values.push(v("minor sum", s[n - k].clone()));
            }
            checks.push(Check::new("S_{n-k}(F_n) = f^{(k+1)}_{n-k+1}", nk(n, k), values));
        }
    }
    Ok(checks)
}

fn charpoly(nmax: usize, config: &VerifyConfig) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    for n in 1..=nmax {
        let cp = f_matrix(n)?.char_poly();
        let shifted = shift_poly(&fib_poly(n + 1)?);
        let explicit = shift_poly(&fib_poly_explicit(n));
        let expansion = charpoly_expansion(n);
        let sums = if n <= config.minor_bound.min(12) {
            Some(minor_sums_within(&f_matrix(n)?, config.minor_bound)?)
        } else {
            None
        };
        checks.push(Check::new(
            "char poly of F_n is monic of degree n",
            vec![("n", n as i64)],
            vec![
                v("degree", BigInt::from(cp.degree().unwrap_or(0))),
                v("n", BigInt::from(n)),
            ],
        ));
        for k in 0..=n {
            let mut values = vec![
                v("det(xI - F_n)", cp.coeff(k)),
                v("f_{n+1}(x-1)", shifted.coeff(k)),
                v("explicit f_{n+1}(x-1)", explicit.coeff(k)),
                v("(-1)^{n-k} f^{(k+1)}_{n-k+1}", expansion[k].clone()),
            ];
            if let Some(s) = &sums {
                values.push(v("(-1)^{n-k} S_{n-k}", BigInt::neg_one_pow(n - k) * s[n - k].clone()));
            }
            checks.push(Check::new("char poly coefficient of x^k", nk(n, k), values));
        }
    }
    Ok(checks)
}

fn identity24(nmax: usize) -> Result<Vec<Check>> {
    let two = BigInt::from(2);
    (0..=nmax)
        .flat_map(|n| {
            let fib_next = fib(n as i64 + 1);
            let shifted = fib_poly(n + 1).map(|p| shift_poly(&p).eval(&two));
            [
                fib_next.clone().map(|f| {
                    Check::new(
                        "alternating binomial sum = f_{n+1}",
                        vec![("n", n as i64)],
                        vec![v("double sum", alternating_sum(n)), v("fib", f)],
                    )
                }),
                fib_next.and_then(|f| {
                    Ok(Check::new(
                        "f_{n+1}(x-1) at x = 2 equals f_{n+1}",
                        vec![("n", n as i64)],
                        vec![v("polynomial", shifted?), v("fib", f)],
                    ))
                }),
            ]
        })
        .collect()
}

fn adjugate(nmax: usize) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    for n in 2..=nmax {
        let f_next = fib(n as i64 + 1)?;
        checks.push(Check::new(
            "det of cofactor matrix of F_n = f_{n+1}^{n-1}",
            vec![("n", n as i64)],
            vec![
                v("closed-form cofactors", f_adjugate_det(n)?),
                v("power", Pow::pow(f_next, (n - 1) as u32)),
            ],
        ));
    }
    for n in 1..=nmax.min(8) {
        let dense = f_matrix(n)?.to_dense();
        for i in 1..=n {
            for j in 1..=n {
                checks.push(Check::new(
                    "closed-form cofactor of F_n",
                    vec![("n", n as i64), ("i", i as i64), ("j", j as i64)],
                    vec![
                        v("closed form", f_cofactor(n, i, j)?),
                        v("oracle signed minor", cofactor_oracle(&dense, i, j)),
                    ],
                ));
            }
        }
    }
    Ok(checks)
}

fn compositions(nmax: usize, config: &VerifyConfig) -> Result<Vec<Check>> {
    let formula_label = match config.convention {
        IndexConvention::Corrected => "formula",
        IndexConvention::AsPrinted => "formula (index sum n-2k+1)",
    };
    let formula = formula_triangle(nmax, config.convention);
    let recurrence = recurrence_triangle(nmax);
    let mut checks = Vec::new();
    for n in 0..=nmax {
        let brute = (n <= config.composition_bound)
            .then(|| row_bruteforce_within(n, config.composition_bound))
            .transpose()?;
        let bits = (n <= config.composition_bound)
            .then(|| row_bitstring_within(n, config.composition_bound))
            .transpose()?;
        let minors = (n <= config.minor_bound)
            .then(|| row_minors_within(n, config.minor_bound))
            .transpose()?;
        for k in 0..=n {
            let mut values = Vec::with_capacity(5);
            if let Some(b) = &brute {
                values.push(v("bruteforce", b[k].clone()));
            }
            values.push(v(formula_label, formula[n][k].clone()));
            values.push(v("recurrence", recurrence[n][k].clone()));
            if let Some(b) = &bits {
                values.push(v("bitstring", b[k].clone()));
            }
            if let Some(m) = &minors {
                values.push(v("minors", m[k].clone()));
            }
            checks.push(Check::new("c(n,k) routes agree", nk(n, k), values));
        }

        let row = &formula[n];
        if n >= 1 {
            checks.push(Check::new(
                "row sum = 2^{n-1}",
                vec![("n", n as i64)],
                vec![
                    v(formula_label, row.iter().sum()),
                    v("2^{n-1}", BigInt::one() << (n - 1)),
                ],
            ));
        }
        checks.push(Check::new(
            "c(n,0) = f_{n-1}",
            vec![("n", n as i64)],
            vec![v(formula_label, row[0].clone()), v("fib", fib(n as i64 - 1)?)],
        ));
        checks.push(Check::new(
            "c(n,n) = 1",
            vec![("n", n as i64)],
            vec![v(formula_label, row[n].clone()), v("one", BigInt::one())],
        ));
        if n >= 2 {
            checks.push(Check::new(
                "c(n,n-1) = 0",
                vec![("n", n as i64)],
                vec![v(formula_label, row[n - 1].clone()), v("zero", BigInt::zero())],
            ));
        }
    }
    Ok(checks)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in std::iter::once(Suite::All).chain(Suite::INDIVIDUAL) {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("prop99".parse::<Suite>().is_err());
    }

    #[test]
    fn failing_check_carries_counterexample() {
        let c = Check::new("x", nk(3, 1), vec![v("a", BigInt::from(5)), v("b", BigInt::from(2))]);
        assert!(!c.passed());
        assert_eq!(c.counterexample().unwrap().to_string(), "x at (n=3, k=1): a=5, b=2");
        let ok = Check::new("x", nk(1, 0), vec![v("a", BigInt::from(1)), v("b", BigInt::from(1))]);
        assert!(ok.passed() && ok.counterexample().is_none());
    }

    #[test]
    fn small_suites_pass() {
        let config = VerifyConfig {
            nmax: Some(6),
            ..VerifyConfig::default()
        };
        for report in run(Suite::All, &config).unwrap() {
            assert!(report.passed(), "{report}");
            assert!(!report.checks.is_empty());
        }
    }

    #[test]
    fn misprinted_index_is_reported() {
        let config = VerifyConfig {
            nmax: Some(3),
            convention: IndexConvention::AsPrinted,
            ..VerifyConfig::default()
        };
        let report = run_one(Suite::Compositions, &config).unwrap();
        assert!(!report.passed());
        let cell = report
            .failures()
            .find(|c| c.claim == "c(n,k) routes agree" && c.coordinate("n") == Some(3) && c.coordinate("k") == Some(1))
            .expect("(3,1) reported");
        assert_eq!(cell.values[0], v("bruteforce", BigInt::from(2)));
        assert_eq!(cell.values[1], v("formula (index sum n-2k+1)", BigInt::from(5)));
    }
}
