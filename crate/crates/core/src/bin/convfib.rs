use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use convfib::compositions::{triangle, IndexConvention, Limits, Route};
use convfib::convolved::{convolved_fib, ConvolvedTable};
use convfib::fib::fib;
use convfib::hessenberg::{f_matrix, g_matrix};
use convfib::output::{write_table, write_triangle, Format};
use convfib::verify::{self, Suite, VerifyConfig};
use convfib::Result;

#[derive(Parser)]
#[command(name = "convfib", version, about = "Fibonacci Hessenberg determinants, convolved Fibonacci numbers and compositions by number of ones")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print f_n (n >= -1, with f_{-1} = 1, f_0 = 0).
    Fib {
        #[arg(allow_negative_numbers = true)]
        n: i64,
    },
    /// Print f^{(r)}_m, or a table of them with --table.
    Convolved {
        r: Option<usize>,
        m: Option<usize>,
        /// Print rows r = 1..=R and columns m = 1..=M.
        #[arg(long, num_args = 2, value_names = ["R", "M"])]
        table: Option<Vec<usize>>,
        #[arg(long, value_enum, default_value_t = FormatArg::Plain)]
        format: FormatArg,
    },
    /// Print rows 0..=NMAX of the c(n, k) triangle.
    Triangle {
        nmax: usize,
        #[arg(long, value_enum, default_value_t = RouteArg::Formula)]
        route: RouteArg,
        #[arg(long, value_enum, default_value_t = FormatArg::Plain)]
        format: FormatArg,
        /// Enumeration cap for the bruteforce, bitstring and minors routes.
        #[arg(long)]
        bound: Option<usize>,
    },
    /// Print det F_n or det G_n.
    Det {
        #[arg(value_enum, ignore_case = true)]
        family: Family,
        n: usize,
    },
    /// Print the characteristic polynomial of F_n.
    Charpoly { n: usize },
    /// Run a verification suite; exits 0 exactly when every check passes.
    Verify {
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
        #[arg(long)]
        nmax: Option<usize>,
        /// Enumeration cap for principal minors, compositions and bit strings.
        #[arg(long)]
        bound: Option<usize>,
        #[arg(long, value_enum)]
        variant: Option<Variant>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Plain,
    Csv,
    Bfile,
}

#[derive(Clone, Copy, ValueEnum)]
enum RouteArg {
    Bruteforce,
    Formula,
    Recurrence,
    Bitstring,
    Minors,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    #[value(name = "F", alias = "f")]
    F,
    #[value(name = "G", alias = "g")]
    G,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    All,
    Thm11,
    Minors,
    Charpoly,
    Identity24,
    Adjugate,
    Compositions,
}

#[derive(Clone, Copy, ValueEnum)]
enum Variant {
    /// Use the misprinted index sum n-2k+1 in the formula route.
    WrongIndex,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Format {
        match f {
            FormatArg::Plain => Format::Plain,
            FormatArg::Csv => Format::Csv,
            FormatArg::Bfile => Format::Bfile,
        }
    }
}

impl From<RouteArg> for Route {
    fn from(r: RouteArg) -> Route {
        match r {
            RouteArg::Bruteforce => Route::BruteForce,
            RouteArg::Formula => Route::Formula,
            RouteArg::Recurrence => Route::Recurrence,
            RouteArg::Bitstring => Route::Bitstring,
            RouteArg::Minors => Route::Minors,
        }
    }
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Suite {
        match s {
            SuiteArg::All => Suite::All,
            SuiteArg::Thm11 => Suite::Thm11,
            SuiteArg::Minors => Suite::Minors,
            SuiteArg::Charpoly => Suite::Charpoly,
            SuiteArg::Identity24 => Suite::Identity24,
            SuiteArg::Adjugate => Suite::Adjugate,
            SuiteArg::Compositions => Suite::Compositions,
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Fib { n } => println!("{}", fib(n)?),
        Command::Convolved { r, m, table, format } => match (table, r, m) {
            (Some(t), None, None) => {
                let t = ConvolvedTable::new(t[0], t[1])?;
                print!("{}", write_table(t.rows(), 1, 1, format.into()));
            }
            (None, Some(r), Some(m)) => println!("{}", convolved_fib(r, m)?),
            _ => {
                eprintln!("error: give either R M or --table R M");
                return Ok(ExitCode::from(2));
            }
        },
        Command::Triangle {
            nmax,
            route,
            format,
            bound,
        } => {
            let limits = bound.map(Limits::uniform).unwrap_or_default();
            let rows = triangle(nmax, route.into(), &limits)?;
            print!("{}", write_triangle(&rows, format.into()));
        }
        Command::Det { family, n } => {
            let h = match family {
                Family::F => f_matrix(n)?,
                Family::G => g_matrix(n)?,
            };
            println!("{}", h.det());
        }
        Command::Charpoly { n } => println!("{}", f_matrix(n)?.char_poly()),
        Command::Verify {
            suite,
            nmax,
            bound,
            variant,
        } => {
            let mut config = VerifyConfig {
                nmax,
                ..VerifyConfig::default()
            };
            if let Some(b) = bound {
                config.minor_bound = b;
                config.composition_bound = b;
            }
            if let Some(Variant::WrongIndex) = variant {
                config.convention = IndexConvention::AsPrinted;
            }
            let reports = verify::run(suite.into(), &config)?;
            for r in &reports {
                println!("{r}");
            }
            if !reports.iter().all(|r| r.passed()) {
                return Ok(ExitCode::FAILURE);
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
