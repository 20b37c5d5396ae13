use std::sync::OnceLock;

use nc_cumulants::cactus::{canonical_outercycle, BlockMultigraph};
use nc_cumulants::cumulant::{
    anticommutator_cumulant, cumulants_from_moments, moments_from_cumulants,
    quadratic_form_cumulant, Route,
};
use nc_cumulants::nc::enumerate_nc;
use nc_cumulants::{
    rational, Direction, Limits, Partition, Rational, RationalSeries, RationalSpec, RationalWeights,
};
use proptest::prelude::*;

const MAX_M: usize = 10;

fn all_nc() -> &'static Vec<Vec<Partition>> {
    static CELL: OnceLock<Vec<Vec<Partition>>> = OnceLock::new();
    CELL.get_or_init(|| {
        (1..=MAX_M)
            .map(|m| enumerate_nc(m, &Limits::default()).unwrap().collect())
            .collect()
    })
}

fn nc_partition() -> impl Strategy<Value = Partition> {
    (1..=MAX_M, any::<prop::sample::Index>()).prop_map(|(m, i)| i.get(&all_nc()[m - 1]).clone())
}

fn small_rational() -> impl Strategy<Value = Rational> {
    (-4i64..=4, 1i64..=3).prop_map(|(n, d)| rational(n, d))
}

fn spec(order: usize) -> impl Strategy<Value = RationalSpec> {
    prop::collection::vec(small_rational(), order).prop_map(RationalSpec::strict)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn kreweras_is_a_bijection(p in nc_partition()) {
        let k = p.kreweras(Direction::Forward).unwrap();
        prop_assert!(k.is_noncrossing());
        prop_assert_eq!(k.kreweras(Direction::Inverse).unwrap(), p.clone());
        prop_assert_eq!(p.block_count() + k.block_count(), p.size() + 1);
    }

    #[test]
    fn kreweras_squared_is_rotation(p in nc_partition()) {
        let m = p.size();
        let k2 = p.kreweras(Direction::Forward).unwrap().kreweras(Direction::Forward).unwrap();
        let rotated = Partition::new(
            m,
            p.blocks().iter().map(|b| b.iter().map(|&e| if e == 1 { m } else { e - 1 }).collect()).collect(),
        ).unwrap();
        prop_assert_eq!(k2, rotated);
    }

    #[test]
    fn outercycle_visits_flexible_edges_twice(p in nc_partition()) {
        let connected = p.size() % 2 == 0 && BlockMultigraph::from_partition(&p).unwrap().is_connected();
        if connected {
            let c = canonical_outercycle(&p).unwrap();
            prop_assert!(c.flexible_count() >= c.f_c);
            prop_assert_eq!(c.signature.edge_count(), p.size() / 2);
            prop_assert_eq!(c.signature.len(), c.edge_count() + c.flexible_count());
        }
    }

    #[test]
    fn series_reciprocal(c in prop::collection::vec(small_rational(), 1..8), c0 in 1i64..=3) {
        let mut coeffs = c;
        coeffs[0] = rational(c0, 1);
        let s = RationalSeries::new(coeffs).unwrap();
        let product = &s * &s.recip().unwrap();
        prop_assert_eq!(product, RationalSeries::constant(rational(1, 1), s.order()));
    }

    #[test]
    fn series_square_root(c in prop::collection::vec(small_rational(), 1..8)) {
        let mut coeffs = c;
        coeffs[0] = rational(1, 1);
        let s = RationalSeries::new(coeffs).unwrap();
        let r = s.sqrt().unwrap();
        prop_assert_eq!(&r * &r, s);
    }

    #[test]
    fn series_compositional_inverse(c in prop::collection::vec(small_rational(), 2..8), lin in 1i64..=3) {
        let mut coeffs = c;
        coeffs[0] = rational(0, 1);
        coeffs[1] = rational(lin, 2);
        let f = RationalSeries::new(coeffs).unwrap();
        let g = f.comp_inverse().unwrap();
        prop_assert_eq!(f.compose(&g).unwrap(), RationalSeries::identity(f.order()));
        prop_assert_eq!(g.compose(&f).unwrap(), RationalSeries::identity(f.order()));
    }

    #[test]
    fn moment_cumulant_round_trip(k in prop::collection::vec(small_rational(), 1..10)) {
        prop_assert_eq!(cumulants_from_moments(&moments_from_cumulants(&k)), k);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn anticommutator_is_symmetric(a in spec(8), b in spec(8), n in 1usize..=4) {
        let limits = Limits::default();
        prop_assert_eq!(
            anticommutator_cumulant(&a, &b, n, &limits).unwrap(),
            anticommutator_cumulant(&b, &a, n, &limits).unwrap()
        );
    }

    #[test]
    fn anticommutator_is_homogeneous(a in spec(8), b in spec(8), n in 1usize..=4, t in 2i64..=3) {
        let limits = Limits::default();
        let t = rational(t, 1);
        let scaled = a.scaled(&t, 2 * n).unwrap();
        let base = anticommutator_cumulant(&a, &b, n, &limits).unwrap();
        let tn = (0..n).fold(rational(1, 1), |acc, _| acc * &t);
        prop_assert_eq!(anticommutator_cumulant(&scaled, &b, n, &limits).unwrap(), base * tn);
    }

    #[test]
    fn quadratic_form_is_homogeneous_in_weights(
        a in spec(6),
        b in spec(6),
        w in prop::collection::vec(small_rational(), 3),
        n in 1usize..=3,
        t in 2i64..=3,
    ) {
        let limits = Limits::default();
        let make = |s: &Rational| {
            RationalWeights::new(vec![
                vec![&w[0] * s, &w[1] * s],
                vec![&w[1] * s, &w[2] * s],
            ]).unwrap()
        };
        let specs = vec![a, b];
        let t = rational(t, 1);
        let base = quadratic_form_cumulant(&specs, &make(&rational(1, 1)), n, Route::Graph, &limits).unwrap();
        let scaled = quadratic_form_cumulant(&specs, &make(&t), n, Route::Partition, &limits).unwrap();
        let tn = (0..n).fold(rational(1, 1), |acc, _| acc * &t);
        prop_assert_eq!(scaled, base * tn);
    }
}
