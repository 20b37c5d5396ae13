use crate::cactus::{enumerate_oriented_cacti, BlockMultigraph, Coloring, OrientedCactus};
use crate::cumulant::moments::moments_from_cumulants;
use crate::cumulant::{CumulantSpec, WeightMatrix, Word};
use crate::error::{argument, Result};
use crate::nc::{enumerate_nc, enumerate_y, level_counts, Direction, Partition};
use crate::scalar::Scalar;
use crate::Limits;

/// How [`quadratic_form_cumulant`] organises its sum.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Route {
    /// Connected partitions of `[2n]` with every block colouring.
    Partition,
    /// Coloured oriented cacti weighted by `2^{f_C}`.
    Graph,
}

fn require_positive(n: usize) -> Result<()> {
    if n == 0 {
        return argument("cumulant order must be at least 1");
    }
    Ok(())
}

fn product_over<'a, T: Scalar>(table: &[T], sizes: impl Iterator<Item = &'a usize>) -> T {
    sizes.fold(T::one(), |acc, &d| acc * table[d].clone())
}

/// `κ_π[a_{w(1)}, …, a_{w(m)}]`: zero unless every block is monochromatic.
pub fn kappa_pi<T: Scalar>(p: &Partition, word: &Word, specs: &[CumulantSpec<T>]) -> Result<T> {
    if word.len() != p.size() {
        return argument(format!(
            "word of length {} for a partition of [{}]",
            word.len(),
            p.size()
        ));
    }
    if let Some(&c) = word.colors().iter().find(|&&c| c >= specs.len()) {
        return argument(format!("colour {c} has no cumulant spec"));
    }
    let mut total = T::one();
    for block in p.blocks() {
        let color = word.colors()[block[0] - 1];
        if block.iter().any(|&e| word.colors()[e - 1] != color) {
            return Ok(T::zero());
        }
        total = total * specs[color].kappa(block.len())?;
    }
    Ok(total)
}

/// `κ_n(ab) = Σ_{τ ∈ NC(n)} κ_τ(a) κ_{Kr(τ)}(b)`.
pub fn product_cumulant<T: Scalar>(
    a: &CumulantSpec<T>,
    b: &CumulantSpec<T>,
    n: usize,
    limits: &Limits,
) -> Result<T> {
    require_positive(n)?;
    let (ka, kb) = (a.table(n)?, b.table(n)?);
    let mut total = T::zero();
    for tau in enumerate_nc(n, limits)? {
        let kr = tau.kreweras(Direction::Forward)?;
        let left = tau
            .blocks()
            .iter()
            .fold(T::one(), |acc, v| acc * ka[v.len()].clone());
        let right = kr
            .blocks()
            .iter()
            .fold(T::one(), |acc, w| acc * kb[w.len()].clone());
        total = total + left * right;
    }
    Ok(total)
}

/// `κ_n(ab + ba)` as a sum over `π = Kr(σ)`, `σ ∈ Y_2n`, split into the
/// sides of `G_π` with the block of 1 on the first side.
pub fn anticommutator_cumulant<T: Scalar>(
    a: &CumulantSpec<T>,
    b: &CumulantSpec<T>,
    n: usize,
    limits: &Limits,
) -> Result<T> {
    require_positive(n)?;
    limits.check_enumeration(2 * n)?;
    let (ka, kb) = (a.table(2 * n)?, b.table(2 * n)?);
    let mut total = T::zero();
    for (sigma, _) in enumerate_y(2 * n, limits)? {
        let pi = sigma.kreweras(Direction::Forward)?;
        let graph = BlockMultigraph::from_partition(&pi)?;
        let Some(sides) = graph.bipartition(0)? else {
            return argument(format!("Kr({sigma}) has a non-bipartite graph"));
        };
        let first: Vec<usize> = sides.first.iter().map(|&v| graph.degrees()[v]).collect();
        let second: Vec<usize> = sides.second.iter().map(|&v| graph.degrees()[v]).collect();
        total = total
            + product_over(&ka, first.iter()) * product_over(&kb, second.iter())
            + product_over(&kb, first.iter()) * product_over(&ka, second.iter());
    }
    Ok(total)
}

fn side_degrees(cactus: &OrientedCactus, side: &[usize]) -> Vec<usize> {
    side.iter().map(|&v| cactus.degrees[v - 1]).collect()
}

/// `κ_n(ab + ba)` as a sum over bipartite oriented cacti with `n` edges,
/// each weighted by `2^{f_C}`.
pub fn anticommutator_cumulant_graphwise<T: Scalar>(
    a: &CumulantSpec<T>,
    b: &CumulantSpec<T>,
    n: usize,
    limits: &Limits,
) -> Result<T> {
    require_positive(n)?;
    let (ka, kb) = (a.table(2 * n)?, b.table(2 * n)?);
    let mut total = T::zero();
    for class in enumerate_oriented_cacti(n, true, limits)?.values() {
        let c = &class.cactus;
        let (first, second) = c.bipartition.as_ref().expect("bipartite classes only");
        let (first, second) = (side_degrees(c, first), side_degrees(c, second));
        let term = product_over(&ka, first.iter()) * product_over(&kb, second.iter())
            + product_over(&kb, first.iter()) * product_over(&ka, second.iter());
        total = total + T::pow2(c.f_c as u32) * term;
    }
    Ok(total)
}

/// `κ_m(as + sa)` with `s` semicircular: zero for odd `m`, otherwise a sum
/// over all oriented cacti with `m/2` edges of `2^{g_C+1} Π κ_{d(v)}(a)`.
pub fn semicircular_anticommutator<T: Scalar>(
    a: &CumulantSpec<T>,
    m: usize,
    limits: &Limits,
) -> Result<T> {
    require_positive(m)?;
    if m % 2 == 1 {
        return Ok(T::zero());
    }
    let n = m / 2;
    let ka = a.table(2 * n)?;
    let mut total = T::zero();
    for class in enumerate_oriented_cacti(n, false, limits)?.values() {
        let c = &class.cactus;
        total = total + T::pow2(c.g_exponent() as u32 + 1) * product_over(&ka, c.degrees.iter());
    }
    Ok(total)
}

/// `κ_m(ab + ba)` for even `a`, `b`: zero for odd `m`, and for `m = 2n`
/// `2 Σ_{π1 ∈ NC(n)} Π κ_{2|V|}(a) Σ_{π2 ≤ Kr(π1)} Π κ_{2|W|}(b)`.
///
/// The inner sum factors over the blocks `U` of `Kr(π1)` into moments of
/// order `|U|` of the cumulant sequence `j ↦ κ_{2j}(b)`.
pub fn even_anticommutator<T: Scalar>(
    a: &CumulantSpec<T>,
    b: &CumulantSpec<T>,
    m: usize,
    limits: &Limits,
) -> Result<T> {
    require_positive(m)?;
    for (label, spec) in [("a", a), ("b", b)] {
        if !spec.is_even_up_to(m)? {
            return argument(format!(
                "`{}` ({label}) has a non-zero odd cumulant",
                spec.name
            ));
        }
    }
    if m % 2 == 1 {
        return Ok(T::zero());
    }
    let n = m / 2;
    let ka = a.table(m)?;
    let halved: Vec<T> = (1..=n).map(|j| b.kappa(2 * j)).collect::<Result<_>>()?;
    let mb = moments_from_cumulants(&halved);
    let mut total = T::zero();
    for pi1 in enumerate_nc(n, limits)? {
        let kr = pi1.kreweras(Direction::Forward)?;
        let left = pi1
            .blocks()
            .iter()
            .fold(T::one(), |acc, v| acc * ka[2 * v.len()].clone());
        let right = kr
            .blocks()
            .iter()
            .fold(T::one(), |acc, u| acc * mb[u.len() - 1].clone());
        total = total + left * right;
    }
    Ok((T::one() + T::one()) * total)
}

fn check_quadratic<T: Scalar>(specs: &[CumulantSpec<T>], w: &WeightMatrix<T>) -> Result<()> {
    if specs.len() != w.size() {
        return argument(format!(
            "{} specs for a {}x{} weight matrix",
            specs.len(),
            w.size(),
            w.size()
        ));
    }
    Ok(())
}

/// `κ_n(Σ_{i,j} w_ij a_i a_j)` for free `a_1 … a_k` and symmetric `w`.
pub fn quadratic_form_cumulant<T: Scalar>(
    specs: &[CumulantSpec<T>],
    w: &WeightMatrix<T>,
    n: usize,
    route: Route,
    limits: &Limits,
) -> Result<T> {
    require_positive(n)?;
    check_quadratic(specs, w)?;
    let tables: Vec<Vec<T>> = specs
        .iter()
        .map(|s| s.table(2 * n))
        .collect::<Result<_>>()?;
    match route {
        Route::Partition => quadratic_by_partitions(&tables, w, n, limits),
        Route::Graph => quadratic_by_cacti(&tables, w, n, limits),
    }
}

/// Sum over colourings of `vertex_count` vertices of
/// `Π_edges w[λ(u)][λ(v)] · Π_v κ_{d(v)}(a_{λ(v)})`, by depth-first
/// assignment; an edge's weight is applied once both ends are coloured.
fn coloured_sum<T: Scalar>(
    tables: &[Vec<T>],
    w: &WeightMatrix<T>,
    edges: &[(usize, usize)],
    degrees: &[usize],
) -> T {
    let vertex_count = degrees.len();
    // Edges grouped by their later endpoint.
    let mut closing = vec![Vec::new(); vertex_count];
    for &(u, v) in edges {
        closing[u.max(v)].push(u.min(v));
    }
    let dfs = ColouringDfs {
        tables,
        w,
        closing,
        degrees,
    };
    dfs.go(0, &mut vec![0; vertex_count], T::one())
}

struct ColouringDfs<'a, T> {
    tables: &'a [Vec<T>],
    w: &'a WeightMatrix<T>,
    closing: Vec<Vec<usize>>,
    degrees: &'a [usize],
}

impl<T: Scalar> ColouringDfs<'_, T> {
    fn go(&self, v: usize, colors: &mut [usize], acc: T) -> T {
        if v == self.degrees.len() {
            return acc;
        }
        let mut total = T::zero();
        for (c, table) in self.tables.iter().enumerate() {
            let mut term = acc.clone() * table[self.degrees[v]].clone();
            colors[v] = c;
            for &u in &self.closing[v] {
                term = term * self.w.get(colors[u], c).clone();
            }
            if !term.is_zero() {
                total = total + self.go(v + 1, colors, term);
            }
        }
        total
    }
}

fn quadratic_by_partitions<T: Scalar>(
    tables: &[Vec<T>],
    w: &WeightMatrix<T>,
    n: usize,
    limits: &Limits,
) -> Result<T> {
    let mut total = T::zero();
    for pi in enumerate_nc(2 * n, limits)? {
        let graph = BlockMultigraph::from_partition(&pi)?;
        if !graph.is_connected() {
            continue;
        }
        total = total + coloured_sum(tables, w, graph.edges(), graph.degrees());
    }
    Ok(total)
}

fn quadratic_by_cacti<T: Scalar>(
    tables: &[Vec<T>],
    w: &WeightMatrix<T>,
    n: usize,
    limits: &Limits,
) -> Result<T> {
    let mut total = T::zero();
    for class in enumerate_oriented_cacti(n, false, limits)?.values() {
        let c = &class.cactus;
        let edges: Vec<(usize, usize)> = c
            .edge_endpoints()
            .into_iter()
            .map(|(u, v)| (u - 1, v - 1))
            .collect();
        total = total + T::pow2(c.f_c as u32) * coloured_sum(tables, w, &edges, &c.degrees);
    }
    Ok(total)
}

/// The per-colouring terms of the graph route for one oriented cactus:
/// `2^{f_C} w_G Π κ_{d(v)}(a_{λ(v)})` for every colouring `λ`.
pub fn coloured_cactus_terms<T: Scalar>(
    cactus: &OrientedCactus,
    specs: &[CumulantSpec<T>],
    w: &WeightMatrix<T>,
) -> Result<Vec<(OrientedCactus, T)>> {
    check_quadratic(specs, w)?;
    let edges = cactus.edge_endpoints();
    let weight = T::pow2(cactus.f_c as u32);
    let mut out = Vec::new();
    for coloring in Coloring::all(cactus.vertex_count(), w.size()) {
        let mut term = weight.clone();
        for &(u, v) in &edges {
            term = term * w.get(coloring.color(u) - 1, coloring.color(v) - 1).clone();
        }
        for (i, &d) in cactus.degrees.iter().enumerate() {
            term = term * specs[coloring.color(i + 1) - 1].kappa(d)?;
        }
        out.push((cactus.with_coloring(coloring)?, term));
    }
    Ok(out)
}

/// Coefficients `c_0 … c_{n+1}` of `P_n(λ) = κ_n(ab + ba)` for `a`, `b`
/// free Poisson with rate `λ`: `c_{n+1−r} = 2 |Y_2n^{(r)}|`.
pub fn free_poisson_anticommutator_polynomial<T: Scalar>(
    n: usize,
    limits: &Limits,
) -> Result<Vec<T>> {
    require_positive(n)?;
    let levels = level_counts(2 * n, limits)?;
    let mut coefficients = vec![T::zero(); n + 2];
    for (r, &count) in levels.iter().enumerate() {
        coefficients[n + 1 - r] = T::from_count(2 * count);
    }
    Ok(coefficients)
}
