//! Self-checks grouped into suites, used by the `verify` command.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::cactus::{
    canonical_outercycle, enumerate_oriented_cacti, enumerate_rigid_cacti, outercycle_orbit,
    BlockMultigraph,
};
use crate::cumulant::random::{random_even_spec, random_spec, random_weights, rng};
use crate::cumulant::{
    anticommutator_cumulant, anticommutator_cumulant_graphwise, cumulants_from_moments,
    even_anticommutator, moments_by_enumeration, moments_from_cumulants, oracle_cumulants,
    quadratic_form_cumulant, semicircular_anticommutator, CumulantSpec, Expression, Route,
    WeightMatrix,
};
use crate::error::{Error, Result};
use crate::nc::{enumerate_nc, enumerate_y, level_counts, Direction, Partition};
use crate::series::{
    anticommutator_poisson_series, cauchy_polynomial_residual, check_functional_equations,
    minverse_closed_form, y_counts, y_series, TruncatedSeries,
};
use crate::{Limits, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    All,
    Kreweras,
    Cactus,
    Formulas,
    Series,
}

impl Suite {
    pub const ALL: [Suite; 4] = [
        Suite::Kreweras,
        Suite::Cactus,
        Suite::Formulas,
        Suite::Series,
    ];
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Suite::All => "all",
            Suite::Kreweras => "kreweras",
            Suite::Cactus => "cactus",
            Suite::Formulas => "formulas",
            Suite::Series => "series",
        };
        f.write_str(s)
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "all" => Suite::All,
            "kreweras" => Suite::Kreweras,
            "cactus" => Suite::Cactus,
            "formulas" => Suite::Formulas,
            "series" => Suite::Series,
            _ => return Err(Error::Parse(format!("unknown suite `{s}`"))),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub suite: Suite,
    pub name: String,
    pub passed: bool,
    /// First counterexample or mismatch, empty on success.
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub checks: Vec<Check>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

/// Largest `n` the structural checks run over `NC(2n)` for.
const STRUCTURE_N: usize = 5;

struct Recorder {
    suite: Suite,
    checks: Vec<Check>,
}

impl Recorder {
    /// Records a check; `Ok(None)` passes, `Ok(Some(detail))` fails.
    fn run(&mut self, name: &str, f: impl FnOnce() -> Result<Option<String>>) {
        let (passed, detail) = match f() {
            Ok(None) => (true, String::new()),
            Ok(Some(detail)) => (false, detail),
            Err(e) => (false, format!("error: {e}")),
        };
        self.checks.push(Check {
            suite: self.suite,
            name: name.into(),
            passed,
            detail,
        });
    }
}

fn mismatch<A: fmt::Debug, B: fmt::Debug>(
    what: impl fmt::Display,
    got: A,
    want: B,
) -> Option<String> {
    Some(format!("{what}: got {got:?}, expected {want:?}"))
}

fn first_failure<I, F>(items: I, mut f: F) -> Result<Option<String>>
where
    I: IntoIterator,
    F: FnMut(I::Item) -> Result<Option<String>>,
{
    for item in items {
        if let Some(detail) = f(item)? {
            return Ok(Some(detail));
        }
    }
    Ok(None)
}

/// Runs one suite (or all of them) with the given seed.
pub fn run(suite: Suite, seed: u64, limits: &Limits) -> VerifyReport {
    let suites: Vec<Suite> = if suite == Suite::All {
        Suite::ALL.to_vec()
    } else {
        vec![suite]
    };
    let mut report = VerifyReport::default();
    for s in suites {
        let mut rec = Recorder {
            suite: s,
            checks: Vec::new(),
        };
        match s {
            Suite::Kreweras => kreweras_suite(&mut rec, limits),
            Suite::Cactus => cactus_suite(&mut rec, limits),
            Suite::Formulas => formulas_suite(&mut rec, seed, limits),
            Suite::Series => series_suite(&mut rec, limits),
            Suite::All => unreachable!(),
        }
        report.checks.extend(rec.checks);
    }
    report
}

fn catalan(n: usize) -> u64 {
    (0..n as u64).fold(1, |c, i| c * 2 * (2 * i + 1) / (i + 2))
}

fn kreweras_suite(rec: &mut Recorder, limits: &Limits) {
    rec.run(
        "Kr⁻¹ ∘ Kr = id and |Kr(π)| = m + 1 − |π| on NC(m), m ≤ 10",
        || {
            first_failure(1..=2 * STRUCTURE_N, |m| {
                first_failure(enumerate_nc(m, limits)?, |p| {
                    let k = p.kreweras(Direction::Forward)?;
                    if k.kreweras(Direction::Inverse)? != p {
                        return Ok(Some(format!("Kr⁻¹(Kr({p})) ≠ {p}")));
                    }
                    if k.block_count() != m + 1 - p.block_count() {
                        return Ok(mismatch(
                            format!("|Kr({p})|"),
                            k.block_count(),
                            m + 1 - p.block_count(),
                        ));
                    }
                    Ok(None)
                })
            })
        },
    );
    rec.run(
        "Kr maps even partitions onto parity-preserving ones, n ≤ 5",
        || {
            first_failure(1..=STRUCTURE_N, |n| {
                first_failure(enumerate_nc(2 * n, limits)?, |p| {
                    let k = p.kreweras(Direction::Forward)?;
                    let (even, parity) = (p.classify().even, k.classify().parity_preserving);
                    Ok((even != parity)
                        .then(|| format!("{p}: even = {even}, Kr parity-preserving = {parity}")))
                })
            })
        },
    );
    rec.run(
        "connected G_π ⇔ π ∨ interval pairing = 1, n ≤ 5",
        || {
            first_failure(1..=STRUCTURE_N, |n| {
                let pairs = Partition::interval_pairing(n)?;
                let one = Partition::single_block(2 * n)?;
                first_failure(enumerate_nc(2 * n, limits)?, |p| {
                    let connected = BlockMultigraph::from_partition(&p)?.is_connected();
                    let joined = p.join(&pairs)? == one;
                    Ok((connected != joined)
                        .then(|| format!("{p}: connected {connected}, join {joined}")))
                })
            })
        },
    );
    rec.run(
        "X_2n = Kr(Y_2n) = {π : G_π connected and bipartite}, n ≤ 5",
        || {
            first_failure(1..=STRUCTURE_N, |n| {
                first_failure(enumerate_nc(2 * n, limits)?, |p| {
                    let via_kr = p.x_membership()?;
                    let g = BlockMultigraph::from_partition(&p)?;
                    let via_graph = g.is_connected() && g.bipartition(0)?.is_some();
                    Ok((via_kr != via_graph)
                        .then(|| format!("{p}: Kr test {via_kr}, graph test {via_graph}")))
                })
            })
        },
    );
    rec.run("|Y_m| level rows sum to |Y_m|, m ≤ 10", || {
        first_failure(1..=2 * STRUCTURE_N, |m| {
            let total = enumerate_y(m, limits)?.count() as u64;
            let rows: u64 = level_counts(m, limits)?.iter().sum();
            Ok((total != rows).then(|| format!("m = {m}: {rows} ≠ {total}")))
        })
    });
}

fn cactus_suite(rec: &mut Recorder, limits: &Limits) {
    rec.run(
        "connected G_π is a cactus, cycles = |Kr⁻¹(π)| − n, rigidity agrees, n ≤ 5",
        || {
            first_failure(1..=STRUCTURE_N, |n| {
                first_failure(enumerate_nc(2 * n, limits)?, |p| {
                    let g = BlockMultigraph::from_partition(&p)?;
                    if !g.is_connected() {
                        return Ok(None);
                    }
                    let report = g.validate_cactus()?;
                    if !report.is_cactus {
                        return Ok(Some(format!("{p} is not a cactus")));
                    }
                    let sigma = p.kreweras(Direction::Inverse)?;
                    if report.simple_cycle_count + n != sigma.block_count() {
                        return Ok(mismatch(
                            format!("cycles of {p}"),
                            report.simple_cycle_count,
                            sigma.block_count() - n,
                        ));
                    }
                    // Outercycle ids are first-visit; map back through the orbit.
                    let c = canonical_outercycle(&p)?;
                    let mut by_edge = vec![false; n];
                    let mut seen = vec![false; n];
                    let mut next = 0;
                    for x in outercycle_orbit(&p)? {
                        let e = (x - 1) / 2;
                        if !seen[e] {
                            seen[e] = true;
                            by_edge[e] = c.rigid[next];
                            next += 1;
                        }
                    }
                    Ok((by_edge != report.rigid)
                        .then(|| format!("{p}: outercycle and cycle-space rigidity differ")))
                })
            })
        },
    );
    rec.run("every orientation class has 2^f_C members, n ≤ 5", || {
        first_failure(1..=STRUCTURE_N, |n| {
            first_failure(
                enumerate_oriented_cacti(n, false, limits)?.into_values(),
                |class| {
                    let want = 1usize << class.cactus.f_c;
                    Ok((class.members.len() != want).then(|| {
                        format!(
                            "{:?}: {} members, 2^f_C = {want}",
                            class.cactus.signature,
                            class.members.len()
                        )
                    }))
                },
            )
        })
    });
    rec.run("all degrees even ⇔ all edges rigid, n ≤ 5", || {
        first_failure(1..=STRUCTURE_N, |n| {
            first_failure(
                enumerate_oriented_cacti(n, false, limits)?.into_values(),
                |class| {
                    let c = &class.cactus;
                    let even = c.degrees.iter().all(|d| d % 2 == 0);
                    let rigid = c.rigid.iter().all(|&r| r);
                    Ok((even != rigid).then(|| format!("{:?}", c.signature)))
                },
            )
        })
    });
    rec.run(
        "oriented tree classes with n edges number C_n, n ≤ 5",
        || {
            first_failure(1..=STRUCTURE_N, |n| {
                let trees = enumerate_oriented_cacti(n, false, limits)?
                    .values()
                    .filter(|c| c.cactus.vertex_count() == n + 1)
                    .count() as u64;
                Ok((trees != catalan(n)).then(|| format!("n = {n}: {trees} ≠ {}", catalan(n))))
            })
        },
    );
    rec.run(
        "oriented rigid cactus classes from NC(2n) (n edges) number C_n, n ≤ 4",
        || {
            first_failure(1..=4, |n| {
                let rigid = enumerate_rigid_cacti(n, limits)?.len() as u64;
                Ok((rigid != catalan(n)).then(|| format!("n = {n}: {rigid} ≠ {}", catalan(n))))
            })
        },
    );
}

fn formulas_suite(rec: &mut Recorder, seed: u64, limits: &Limits) {
    let mut r = rng(seed);
    let pairs: Vec<_> = (0..5)
        .map(|_| (random_spec(&mut r, 10), random_spec(&mut r, 10)))
        .collect();
    rec.run("partition route = cactus route = oracle, 5 random pairs, n ≤ 5", || {
        let order = 5.min(limits.oracle_anticommutator);
        first_failure(&pairs, |(a, b)| {
            let oracle = oracle_cumulants(&Expression::Anticommutator(a.clone(), b.clone()), order, limits)?;
            first_failure(1..=order, |n| {
                let direct = anticommutator_cumulant(a, b, n, limits)?;
                let graph = anticommutator_cumulant_graphwise(a, b, n, limits)?;
                let swapped = anticommutator_cumulant(b, a, n, limits)?;
                let want = &oracle[n - 1];
                Ok((direct != *want || graph != *want || swapped != *want).then(|| {
                    format!("{a} / {b}, n = {n}: partition {direct}, cactus {graph}, swapped {swapped}, oracle {want}")
                }))
            })
        })
    });
    rec.run("even-element formula = general route, m ≤ 5", || {
        let mut r = rng(seed ^ 1);
        first_failure(0..3, |_| {
            let (a, b) = (random_even_spec(&mut r, 10), random_even_spec(&mut r, 10));
            first_failure(1..=5, |m| {
                let even = even_anticommutator(&a, &b, m, limits)?;
                let general = anticommutator_cumulant(&a, &b, m, limits)?;
                Ok((even != general).then(|| format!("{a} / {b}, m = {m}: {even} vs {general}")))
            })
        })
    });
    rec.run("semicircular formula = oracle, m ≤ 6", || {
        let s = CumulantSpec::<Rational>::semicircular();
        first_failure(&pairs[..2], |(a, _)| {
            let oracle = oracle_cumulants(
                &Expression::Anticommutator(a.clone(), s.clone()),
                5.min(limits.oracle_anticommutator),
                limits,
            )?;
            first_failure(1..=oracle.len(), |m| {
                let got = semicircular_anticommutator(a, m, limits)?;
                Ok((got != oracle[m - 1])
                    .then(|| format!("{a}, m = {m}: {got} vs {}", oracle[m - 1])))
            })
        })
    });
    rec.run(
        "quadratic partition route = graph route = oracle, k ≤ 3, n ≤ 3",
        || {
            let mut r = rng(seed ^ 2);
            first_failure(1..=3, |k| {
                let specs: Vec<_> = (0..k).map(|_| random_spec(&mut r, 8)).collect();
                let w = random_weights(&mut r, k);
                let order = 3.min(limits.oracle_quadratic);
                let oracle = oracle_cumulants(
                    &Expression::Quadratic(specs.clone(), w.clone()),
                    order,
                    limits,
                )?;
                first_failure(1..=order, |n| {
                    let p = quadratic_form_cumulant(&specs, &w, n, Route::Partition, limits)?;
                    let g = quadratic_form_cumulant(&specs, &w, n, Route::Graph, limits)?;
                    Ok((p != g || p != oracle[n - 1])
                        .then(|| format!("k = {k}, n = {n}: {p} / {g} / {}", oracle[n - 1])))
                })
            })
        },
    );
    rec.run(
        "off-diagonal quadratic form = anti-commutator, n ≤ 4",
        || {
            let w = WeightMatrix::<Rational>::anticommutator();
            first_failure(&pairs[..2], |(a, b)| {
                first_failure(1..=4, |n| {
                    let q = quadratic_form_cumulant(
                        &[a.clone(), b.clone()],
                        &w,
                        n,
                        Route::Graph,
                        limits,
                    )?;
                    let d = anticommutator_cumulant(a, b, n, limits)?;
                    Ok((q != d).then(|| format!("n = {n}: {q} ≠ {d}")))
                })
            })
        },
    );
    rec.run(
        "moment/cumulant recursion = NC sums and round-trips, N ≤ 8",
        || {
            let kappa: Vec<Rational> = (0..8)
                .map(|_| crate::cumulant::random::random_rational(&mut r))
                .collect();
            let m = moments_from_cumulants(&kappa);
            let full = moments_by_enumeration(&kappa, limits)?;
            Ok((m != full || cumulants_from_moments(&m) != kappa).then(|| format!("{kappa:?}")))
        },
    );
}

fn series_suite(rec: &mut Recorder, limits: &Limits) {
    rec.run("counting recursion = enumeration, m ≤ 12", || {
        let counts = y_counts::<Rational>(12);
        first_failure(1..=12, |m| {
            let got = Rational::from_integer((enumerate_y(m, limits)?.count() as u64).into());
            Ok((got != counts[m - 1]).then(|| format!("m = {m}: {got} ≠ {}", counts[m - 1])))
        })
    });
    rec.run("functional equations for A and B, order 10", || {
        let (a, b) = y_series::<Rational>(10);
        let report = check_functional_equations(&a, &b)?;
        Ok(report
            .checks
            .iter()
            .find(|c| !c.passed)
            .map(|c| format!("{} residual {:?}", c.name, c.residual.to_strings())))
    });
    rec.run("closed-form inverse of the moment series, order 9", || {
        let nu = anticommutator_poisson_series::<Rational>(9);
        let composed = nu.m.compose(&minverse_closed_form(9)?)?;
        Ok((composed != TruncatedSeries::identity(9))
            .then(|| format!("{:?}", composed.to_strings())))
    });
    rec.run("M^{<-1>} = R^{<-1>}/(1+z), order 8", || {
        let residual = anticommutator_poisson_series::<Rational>(8).inverse_relation_residual()?;
        Ok((!residual.is_zero()).then(|| format!("{:?}", residual.to_strings())))
    });
    rec.run("degree-6 Cauchy polynomial, 8 moments", || {
        let nu = anticommutator_poisson_series::<Rational>(8);
        let residual = cauchy_polynomial_residual(&nu.m.coefficients()[1..])?;
        Ok((!residual.is_zero()).then(|| format!("{:?}", residual.to_strings())))
    });
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names() {
        for s in [
            Suite::All,
            Suite::Kreweras,
            Suite::Cactus,
            Suite::Formulas,
            Suite::Series,
        ] {
            assert_eq!(s.to_string().parse::<Suite>().unwrap(), s);
        }
        assert!("bogus".parse::<Suite>().is_err());
    }

    #[test]
    fn series_suite_passes() {
        let report = run(Suite::Series, 0, &Limits::default());
        assert!(
            report.passed(),
            "{:?}",
            report.failures().collect::<Vec<_>>()
        );
        assert_eq!(report.checks.len(), 5);
    }
}
