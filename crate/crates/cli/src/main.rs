mod output;

use std::fs;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use nc_cumulants::cactus::{enumerate_oriented_cacti, enumerate_rigid_cacti};
use nc_cumulants::cumulant::random::DEFAULT_SEED;
use nc_cumulants::cumulant::{
    anticommutator_cumulant, anticommutator_cumulant_graphwise, product_cumulant,
    quadratic_form_cumulant, semicircular_anticommutator, Route,
};
use nc_cumulants::nc::{enumerate_even_nc, enumerate_nc, enumerate_y, level_counts};
use nc_cumulants::series::{
    anticommutator_poisson_series, cauchy_polynomial_residual, check_functional_equations,
    minverse_closed_form, y_counts, y_series, DEFAULT_ORDER,
};
use nc_cumulants::verify::{self, Suite};
use nc_cumulants::{format_rational, Error, Limits, Rational, RationalSpec, RationalWeights};

use output::{render, Format, Record};

#[derive(Parser, Debug)]
#[command(
    name = "nccumulants",
    version,
    about = "Exact free cumulants of anti-commutators and quadratic forms"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Largest m for which NC(m) may be enumerated.
    #[arg(long, global = true, value_parser = positive)]
    cap: Option<usize>,
    /// Highest order the brute-force oracle may expand to.
    #[arg(long, global = true, value_parser = positive)]
    oracle_cap: Option<usize>,
    /// Seed for randomized verification.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Sizes of Y_m, its levels, NC(m) or the oriented cactus classes.
    Count {
        #[command(subcommand)]
        what: CountWhat,
    },
    /// List partitions, members of Y_m or oriented cacti.
    Enumerate {
        #[command(subcommand)]
        what: EnumerateWhat,
    },
    /// Free cumulants of anti-commutators, products and quadratic forms.
    Cumulants {
        #[command(subcommand)]
        what: CumulantWhat,
    },
    /// Generating-function identities.
    Series {
        #[command(subcommand)]
        what: SeriesWhat,
    },
    /// Run the verification suites.
    Verify {
        #[arg(long, default_value = "all", value_parser = Suite::from_str)]
        suite: Suite,
    },
}

#[derive(Subcommand, Debug)]
enum CountWhat {
    /// |Y_m|.
    Y {
        #[arg(long)]
        m: Span,
        /// Use the series recursion instead of enumeration.
        #[arg(long)]
        recursion: bool,
    },
    /// |Y_m^(r)| for every level r.
    Levels {
        #[arg(long)]
        m: Span,
    },
    /// |NC(m)|.
    Nc {
        #[arg(long)]
        m: Span,
    },
    /// Oriented cactus classes with n edges.
    Cacti {
        #[arg(long)]
        n: Span,
        #[arg(long)]
        bipartite: bool,
        /// Only rigid cacti.
        #[arg(long)]
        rigid: bool,
    },
}

#[derive(Subcommand, Debug)]
enum EnumerateWhat {
    /// NC(m), optionally only the even partitions.
    Partitions {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        even: bool,
    },
    /// Y_m with levels.
    Y {
        #[arg(long)]
        m: usize,
    },
    /// Oriented cactus classes with n edges and their sizes.
    Cacti {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        bipartite: bool,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum RouteArg {
    Partition,
    Graph,
    Both,
}

#[derive(Subcommand, Debug)]
enum CumulantWhat {
    /// κ_n(ab + ba).
    Anticommutator {
        #[arg(long, value_parser = spec)]
        a: RationalSpec,
        #[arg(long, value_parser = spec)]
        b: RationalSpec,
        #[arg(long)]
        n: Span,
        #[arg(long, value_enum, default_value_t = RouteArg::Partition)]
        route: RouteArg,
    },
    /// κ_n(ab).
    Product {
        #[arg(long, value_parser = spec)]
        a: RationalSpec,
        #[arg(long, value_parser = spec)]
        b: RationalSpec,
        #[arg(long)]
        n: Span,
    },
    /// κ_m(sa + as) with s standard semicircular.
    SemicircularAnticom {
        #[arg(long, value_parser = spec)]
        a: RationalSpec,
        #[arg(long)]
        n: Span,
    },
    /// κ_n(Σ w_ij a_i a_j).
    Quadratic {
        /// One spec per variable, in order.
        #[arg(long, value_parser = spec, num_args = 1.., required = true)]
        specs: Vec<RationalSpec>,
        /// JSON file holding the k×k weight matrix.
        #[arg(long)]
        weights: String,
        #[arg(long)]
        n: Span,
        #[arg(long, value_enum, default_value_t = RouteArg::Partition)]
        route: RouteArg,
    },
}

#[derive(Subcommand, Debug)]
enum SeriesWhat {
    /// A(x) = Σ |Y_2n| xⁿ and B(x) = Σ |Y_2n−1| xⁿ.
    Counts {
        #[arg(long, default_value_t = DEFAULT_ORDER)]
        order: usize,
    },
    /// Residuals of the functional equations for A and B.
    Check {
        #[arg(long, default_value_t = DEFAULT_ORDER)]
        order: usize,
    },
    /// Closed form of M⁻¹ for ab + ba with free Poisson a, b, against the series inverse.
    Minverse {
        #[arg(long, default_value_t = DEFAULT_ORDER)]
        order: usize,
    },
    /// Residual of the algebraic equation for the Cauchy transform of ab + ba.
    Cauchy {
        #[arg(long, default_value_t = DEFAULT_ORDER)]
        order: usize,
    },
}

/// Inclusive range `a..b`, or a single value.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Span {
    lo: usize,
    hi: usize,
}

impl FromStr for Span {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let num = |t: &str| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| format!("`{t}` is not a non-negative integer"))
        };
        let (lo, hi) = match s.split_once("..") {
            Some((a, b)) => (num(a)?, num(b.strip_prefix('=').unwrap_or(b))?),
            None => (num(s)?, num(s)?),
        };
        if lo == 0 || lo > hi {
            return Err(format!("range `{s}` must satisfy 1 <= a <= b"));
        }
        Ok(Span { lo, hi })
    }
}

impl Span {
    fn iter(self) -> impl Iterator<Item = usize> {
        self.lo..=self.hi
    }
}

fn positive(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(v) if v > 0 => Ok(v),
        _ => Err(format!("`{s}` is not a positive integer")),
    }
}

fn spec(s: &str) -> Result<RationalSpec, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

enum Failure {
    Library(Error),
    Usage(String),
    /// Output was produced but a check inside it failed.
    Verification(Vec<Record>),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Library(e)
    }
}

type Outcome = Result<Vec<Record>, Failure>;

fn strings(values: &[Rational]) -> Vec<String> {
    values.iter().map(format_rational).collect()
}

/// A JSON integer when it fits in `u64`, otherwise its decimal string.
fn integer_value(digits: String) -> serde_json::Value {
    digits
        .parse::<u64>()
        .map(Into::into)
        .unwrap_or(serde_json::Value::String(digits))
}

fn catalan(m: usize) -> u128 {
    (0..m as u128).fold(1, |c, k| c * 2 * (2 * k + 1) / (k + 2))
}

fn count(what: CountWhat, limits: &Limits) -> Outcome {
    let mut out = Vec::new();
    match what {
        CountWhat::Y { m, recursion } => {
            let by_recursion = recursion.then(|| y_counts::<Rational>(m.hi));
            for m in m.iter() {
                let c = match &by_recursion {
                    Some(all) => all[m - 1].to_string(),
                    None => enumerate_y(m, limits)?.count().to_string(),
                };
                out.push(record!("m" => m, "count" => integer_value(c)));
            }
        }
        CountWhat::Levels { m } => {
            for m in m.iter() {
                out.push(record!("m" => m, "levels" => level_counts(m, limits)?));
            }
        }
        CountWhat::Nc { m } => {
            for m in m.iter() {
                out.push(record!("m" => m, "count" => integer_value(catalan(m).to_string())));
            }
        }
        CountWhat::Cacti {
            n,
            bipartite,
            rigid,
        } => {
            for n in n.iter() {
                let classes = if rigid {
                    enumerate_rigid_cacti(n, limits)?
                } else {
                    enumerate_oriented_cacti(n, bipartite, limits)?
                };
                let c = classes
                    .values()
                    .filter(|c| !bipartite || c.cactus.bipartition.is_some())
                    .count();
                out.push(record!("n" => n, "count" => c));
            }
        }
    }
    Ok(out)
}

fn enumerate(what: EnumerateWhat, limits: &Limits) -> Outcome {
    let mut out = Vec::new();
    match what {
        EnumerateWhat::Partitions { m, even } => {
            let all: Vec<_> = if even {
                enumerate_even_nc(m, limits)?
            } else {
                enumerate_nc(m, limits)?.collect()
            };
            for p in all {
                out.push(record!("partition" => p.to_string(), "blocks" => p.block_count()));
            }
        }
        EnumerateWhat::Y { m } => {
            for (p, d) in enumerate_y(m, limits)? {
                out.push(record!("partition" => p.to_string(), "level" => d.level));
            }
        }
        EnumerateWhat::Cacti { n, bipartite } => {
            for class in enumerate_oriented_cacti(n, bipartite, limits)?.values() {
                let mut r = match class.cactus.to_json() {
                    serde_json::Value::Object(map) => map,
                    _ => unreachable!("cacti serialize as objects"),
                };
                r.insert("size".into(), class.members.len().into());
                out.push(r);
            }
        }
    }
    Ok(out)
}

fn routed(
    n: usize,
    route: RouteArg,
    partition: impl Fn() -> nc_cumulants::Result<Rational>,
    graph: impl Fn() -> nc_cumulants::Result<Rational>,
    mismatch: &mut bool,
) -> Result<Record, Failure> {
    Ok(match route {
        RouteArg::Partition => record!("n" => n, "kappa" => format_rational(&partition()?)),
        RouteArg::Graph => record!("n" => n, "kappa" => format_rational(&graph()?)),
        RouteArg::Both => {
            let (p, g) = (partition()?, graph()?);
            *mismatch |= p != g;
            record!(
                "n" => n,
                "partition" => format_rational(&p),
                "graph" => format_rational(&g),
                "match" => p == g,
            )
        }
    })
}

fn cumulants(what: CumulantWhat, limits: &Limits) -> Outcome {
    let mut out = Vec::new();
    let mut mismatch = false;
    match what {
        CumulantWhat::Anticommutator { a, b, n, route } => {
            for n in n.iter() {
                out.push(routed(
                    n,
                    route,
                    || anticommutator_cumulant(&a, &b, n, limits),
                    || anticommutator_cumulant_graphwise(&a, &b, n, limits),
                    &mut mismatch,
                )?);
            }
        }
        CumulantWhat::Product { a, b, n } => {
            for n in n.iter() {
                out.push(record!("n" => n, "kappa" => format_rational(&product_cumulant(&a, &b, n, limits)?)));
            }
        }
        CumulantWhat::SemicircularAnticom { a, n } => {
            for n in n.iter() {
                let k = semicircular_anticommutator(&a, n, limits)?;
                out.push(record!("n" => n, "kappa" => format_rational(&k)));
            }
        }
        CumulantWhat::Quadratic {
            specs,
            weights,
            n,
            route,
        } => {
            let text = fs::read_to_string(&weights)
                .map_err(|e| Failure::Usage(format!("{weights}: {e}")))?;
            let w = RationalWeights::from_json(&text)?;
            for n in n.iter() {
                out.push(routed(
                    n,
                    route,
                    || quadratic_form_cumulant(&specs, &w, n, Route::Partition, limits),
                    || quadratic_form_cumulant(&specs, &w, n, Route::Graph, limits),
                    &mut mismatch,
                )?);
            }
        }
    }
    if mismatch {
        return Err(Failure::Verification(out));
    }
    Ok(out)
}

fn series(what: SeriesWhat) -> Outcome {
    let order = match &what {
        SeriesWhat::Counts { order }
        | SeriesWhat::Check { order }
        | SeriesWhat::Minverse { order }
        | SeriesWhat::Cauchy { order } => *order,
    };
    if order == 0 {
        return Err(Failure::Usage("--order must be at least 1".into()));
    }
    let (out, passed) = match what {
        SeriesWhat::Counts { .. } => {
            let (a, b) = y_series::<Rational>(order);
            (
                vec![record!("A" => a.to_strings(), "B" => b.to_strings())],
                true,
            )
        }
        SeriesWhat::Check { .. } => {
            let (a, b) = y_series::<Rational>(order);
            let report = check_functional_equations(&a, &b)?;
            let out = report
                .checks
                .iter()
                .map(|c| {
                    record!(
                        "equation" => c.name,
                        "order" => c.order,
                        "passed" => c.passed,
                        "residual" => c.residual.to_strings(),
                    )
                })
                .collect();
            (out, report.all_passed())
        }
        SeriesWhat::Minverse { .. } => {
            let closed = minverse_closed_form::<Rational>(order)?;
            let inverse = anticommutator_poisson_series::<Rational>(order)
                .m
                .comp_inverse()?;
            let same = closed == inverse;
            let r = record!(
                "closed_form" => closed.to_strings(),
                "inverse_of_m" => inverse.to_strings(),
                "match" => same,
            );
            (vec![r], same)
        }
        SeriesWhat::Cauchy { .. } => {
            let nu = anticommutator_poisson_series::<Rational>(order);
            let moments = &nu.m.coefficients()[1..];
            let residual = cauchy_polynomial_residual(moments)?;
            let zero = residual.is_zero();
            let r = record!("moments" => strings(moments), "residual" => residual.to_strings(), "zero" => zero);
            (vec![r], zero)
        }
    };
    if !passed {
        return Err(Failure::Verification(out));
    }
    Ok(out)
}

fn run_verify(suite: Suite, seed: u64, limits: &Limits) -> Outcome {
    let report = verify::run(suite, seed, limits);
    let out: Vec<Record> = report
        .checks
        .iter()
        .map(|c| {
            record!(
                "suite" => c.suite.to_string(),
                "check" => c.name,
                "passed" => c.passed,
                "detail" => c.detail,
            )
        })
        .collect();
    if !report.passed() {
        return Err(Failure::Verification(out));
    }
    Ok(out)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let defaults = Limits::default();
    let limits = Limits {
        enumeration: cli.cap.unwrap_or(defaults.enumeration),
        oracle_anticommutator: cli.oracle_cap.unwrap_or(defaults.oracle_anticommutator),
        oracle_quadratic: cli.oracle_cap.unwrap_or(defaults.oracle_quadratic),
    };
    let result = match cli.command {
        Command::Count { what } => count(what, &limits),
        Command::Enumerate { what } => enumerate(what, &limits),
        Command::Cumulants { what } => cumulants(what, &limits),
        Command::Series { what } => series(what),
        Command::Verify { suite } => run_verify(suite, cli.seed, &limits),
    };
    match result {
        Ok(records) => {
            print!("{}", render(&records, cli.format));
            ExitCode::SUCCESS
        }
        Err(Failure::Verification(records)) => {
            print!("{}", render(&records, cli.format));
            eprintln!("error: verification failed");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Library(e)) => {
            eprintln!("error: {e}");
            match e {
                Error::ResourceLimit { .. } => ExitCode::from(3),
                _ => ExitCode::from(2),
            }
        }
    }
}
