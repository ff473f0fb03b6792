//! Acceptance criteria, one test per criterion. Each prints a single
//! `criterion N: PASS|FAIL` line with its elapsed time and time budget.

use std::time::{Duration, Instant};

use convfib::compositions::{
    formula_triangle, recurrence_triangle, row_bitstring_within, row_bruteforce_within,
    row_minors_within, IndexConvention,
};
use convfib::convolved::{
    charpoly_expansion, convolved_fib, convolved_fib_binomial, verify_alternating_identity,
    ConvolvedTable,
};
use convfib::fib::{fib, fib_poly, shift_poly};
use convfib::hessenberg::{
    cofactor_oracle, det_oracle, f_adjugate_det, f_cofactor, f_matrix, g_matrix,
    minor_sums_within, verify_recurrence_determinant, random_int_hessenberg,
};
use convfib::verify::{run_one, Suite, VerifyConfig};
use convfib::BigInt;
use num_traits::{One, Pow, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn criterion(id: u32, what: &str, budget: Duration, body: impl FnOnce() -> Result<(), String>) {
    let start = Instant::now();
    let outcome = body();
    let elapsed = start.elapsed();
    let in_time = elapsed <= budget;
    let pass = outcome.is_ok() && in_time;
    println!(
        "criterion {id}: {} {what} ({:.3}s / budget {:.0}s){}",
        if pass { "PASS" } else { "FAIL" },
        elapsed.as_secs_f64(),
        budget.as_secs_f64(),
        match &outcome {
            Err(e) => format!(" -- {e}"),
            Ok(()) if !in_time => " -- over time budget".to_string(),
            Ok(()) => String::new(),
        }
    );
    assert!(pass, "criterion {id} failed: {outcome:?}, elapsed {elapsed:?}");
}

fn expect_eq(what: impl std::fmt::Display, left: &BigInt, right: &BigInt) -> Result<(), String> {
    if left == right {
        Ok(())
    } else {
        Err(format!("{what}: {left} != {right}"))
    }
}

fn big(v: i64) -> BigInt {
    BigInt::from(v)
}

#[test]
fn criterion_01_determinants() {
    criterion(1, "det F_n = f_{n+1}, det G_n = f_{n-1}, n <= 25, both routes", Duration::from_secs(1), || {
        for n in 1..=25usize {
            let f = f_matrix(n).unwrap();
            let g = g_matrix(n).unwrap();
            let fib_f = fib(n as i64 + 1).unwrap();
            let fib_g = fib(n as i64 - 1).unwrap();
            expect_eq(format!("recurrence det F_{n}"), &f.det(), &fib_f)?;
            expect_eq(format!("oracle det F_{n}"), &det_oracle(&f.to_dense()), &fib_f)?;
            expect_eq(format!("recurrence det G_{n}"), &g.det(), &fib_g)?;
            expect_eq(format!("oracle det G_{n}"), &det_oracle(&g.to_dense()), &fib_g)?;
        }
        Ok(())
    });
}

#[test]
fn criterion_02_generic_recurrence() {
    criterion(2, "50 random tables in [-3,3], n <= 10: a_{n+1} = a_1 det A_n", Duration::from_secs(1), || {
        let mut rng = ChaCha8Rng::seed_from_u64(2024);
        for instance in 0..50 {
            let n = rng.gen_range(1..=10);
            let h = random_int_hessenberg(n, -3, 3, &mut rng);
            let a1 = big(rng.gen_range(-3..=3));
            if !verify_recurrence_determinant(&h, a1) {
                return Err(format!("instance {instance} (n = {n}) disagrees"));
            }
        }
        Ok(())
    });
}

#[test]
fn criterion_03_minor_sums_of_f() {
    criterion(3, "principal-minor sums of F_n = f^{(k+1)}_{n-k+1}, n <= 12", Duration::from_secs(30), || {
        for n in 1..=12usize {
            let sums = minor_sums_within(&f_matrix(n).unwrap(), 12).unwrap();
            for k in 0..n {
                expect_eq(format!("S_{} of F_{n}", n - k), &sums[n - k], &convolved_fib(k + 1, n - k + 1).unwrap())?;
            }
        }
        Ok(())
    });
}

#[test]
fn criterion_04_charpoly() {
    criterion(4, "char poly of F_n = f_{n+1}(x-1) with convolved coefficients, n <= 15", Duration::from_secs(5), || {
        for n in 1..=15usize {
            let cp = f_matrix(n).unwrap().char_poly();
            let shifted = shift_poly(&fib_poly(n + 1).unwrap());
            if cp != shifted {
                return Err(format!("n = {n}: {cp} != {shifted}"));
            }
            let expansion = charpoly_expansion(n);
            for k in 0..=n {
                let direct = BigInt::from(if (n - k) % 2 == 0 { 1 } else { -1 })
                    * convolved_fib(k + 1, n - k + 1).unwrap();
                expect_eq(format!("n = {n}, x^{k}"), &cp.coeff(k), &direct)?;
                expect_eq(format!("expansion n = {n}, x^{k}"), &expansion[k], &direct)?;
            }
        }
        Ok(())
    });
}

#[test]
fn criterion_05_binomial_double_sum() {
    criterion(5, "binomial double sum = series value, n <= 40, 0 <= k <= n", Duration::from_secs(5), || {
        let table = ConvolvedTable::new(41, 41).unwrap();
        for n in 0..=40usize {
            for k in 0..=n {
                let series = table.get(k + 1, n - k + 1).unwrap();
                expect_eq(format!("(n, k) = ({n}, {k})"), &convolved_fib_binomial(n, k).unwrap(), series)?;
            }
        }
        Ok(())
    });
}

#[test]
fn criterion_06_alternating_identity() {
    criterion(6, "alternating double sum = f_{n+1}, n <= 40", Duration::from_secs(1), || {
        match (0..=40).find(|&n| !verify_alternating_identity(n)) {
            Some(n) => Err(format!("fails at n = {n}")),
            None => Ok(()),
        }
    });
}

#[test]
fn criterion_07_adjugate() {
    criterion(7, "det of cofactor matrix = f_{n+1}^{n-1} (n <= 10), cofactors match oracle (n <= 8)", Duration::from_secs(10), || {
        for n in 2..=10usize {
            let expected: BigInt = Pow::pow(fib(n as i64 + 1).unwrap(), (n - 1) as u32);
            expect_eq(format!("n = {n}"), &f_adjugate_det(n).unwrap(), &expected)?;
        }
        for n in 1..=8usize {
            let dense = f_matrix(n).unwrap().to_dense();
            for i in 1..=n {
                for j in 1..=n {
                    expect_eq(
                        format!("cofactor ({i}, {j}) of F_{n}"),
                        &f_cofactor(n, i, j).unwrap(),
                        &cofactor_oracle(&dense, i, j),
                    )?;
                }
            }
        }
        Ok(())
    });
}

#[test]
fn criterion_08_five_routes() {
    criterion(8, "c(n,k) by five routes (minors n <= 14, others n <= 18)", Duration::from_secs(60), || {
        let formula = formula_triangle(18, IndexConvention::Corrected);
        let recurrence = recurrence_triangle(18);
        for n in 0..=18usize {
            let brute = row_bruteforce_within(n, 18).unwrap();
            let bits = row_bitstring_within(n, 18).unwrap();
            let minors = (n <= 14).then(|| row_minors_within(n, 14).unwrap());
            for k in 0..=n {
                let at = format!("(n, k) = ({n}, {k})");
                expect_eq(format!("formula {at}"), &formula[n][k], &brute[k])?;
                expect_eq(format!("recurrence {at}"), &recurrence[n][k], &brute[k])?;
                expect_eq(format!("bitstring {at}"), &bits[k], &brute[k])?;
                if let Some(m) = &minors {
                    expect_eq(format!("minors {at}"), &m[k], &brute[k])?;
                }
            }
        }
        Ok(())
    });
}

#[test]
fn criterion_09_misprinted_index() {
    criterion(9, "index sum n-2k+1 reports (3,1): 5 vs 2", Duration::from_secs(5), || {
        let config = VerifyConfig {
            nmax: Some(3),
            convention: IndexConvention::AsPrinted,
            ..VerifyConfig::default()
        };
        let report = run_one(Suite::Compositions, &config).map_err(|e| e.to_string())?;
        if report.passed() {
            return Err("variant unexpectedly passed".into());
        }
        let cell = report
            .failures()
            .find(|c| c.coordinate("n") == Some(3) && c.coordinate("k") == Some(1) && c.at.len() == 2)
            .ok_or("no counterexample at (3,1)")?;
        let value = |route: &str| cell.values.iter().find(|(r, _)| r.starts_with(route)).map(|(_, v)| v.clone());
        match (value("formula"), value("bruteforce")) {
            (Some(f), Some(b)) if f == big(5) && b == big(2) => {
                println!("  reported: {}", cell.counterexample().unwrap());
                Ok(())
            }
            other => Err(format!("unexpected values {other:?}")),
        }
    });
}

#[test]
fn criterion_10_row_structure() {
    criterion(10, "rows n <= 30: sum 2^{n-1}, c(n,0) = f_{n-1}, c(n,n) = 1, c(n,n-1) = 0", Duration::from_secs(1), || {
        let rows = formula_triangle(30, IndexConvention::Corrected);
        for (n, row) in rows.iter().enumerate() {
            if n >= 1 {
                let sum: BigInt = row.iter().sum();
                expect_eq(format!("row sum {n}"), &sum, &(BigInt::one() << (n - 1)))?;
            }
            expect_eq(format!("c({n},0)"), &row[0], &fib(n as i64 - 1).unwrap())?;
            expect_eq(format!("c({n},{n})"), &row[n], &BigInt::one())?;
            if n >= 2 {
                expect_eq(format!("c({n},{})", n - 1), &row[n - 1], &BigInt::zero())?;
            }
        }
        Ok(())
    });
}
