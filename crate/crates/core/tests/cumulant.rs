use nc_cumulants::cumulant::{
    anticommutator_cumulant, anticommutator_cumulant_graphwise, cumulants_from_moments,
    moments_by_enumeration, moments_from_cumulants, oracle_cumulants, oracle_moments,
    product_cumulant, quadratic_form_cumulant, semicircular_anticommutator, word_moment,
    Expression, Route,
};
use nc_cumulants::{
    integer, rational, CumulantSpec, Error, Limits, RationalSpec, RationalWeights, Word,
};

fn spec(s: &str) -> RationalSpec {
    s.parse().unwrap()
}

#[test]
fn spec_text_round_trip() {
    for s in ["semicircular", "poisson:3/2", "cumulants:[0,1,-1/2]"] {
        assert_eq!(spec(s).to_string(), s);
    }
    assert!(matches!(
        "gaussian".parse::<RationalSpec>(),
        Err(Error::Parse(_))
    ));
    assert!("cumulants:[1,x]".parse::<RationalSpec>().is_err());
}

#[test]
fn explicit_specs_pad_strict_ones_refuse() {
    let padded = spec("cumulants:[1,2]");
    assert_eq!(padded.kappa(5).unwrap(), integer(0));
    let strict = RationalSpec::strict(vec![integer(1), integer(2)]);
    assert!(matches!(
        strict.kappa(3),
        Err(Error::Order { order: 3, .. })
    ));
    assert!(anticommutator_cumulant(&strict, &strict, 2, &Limits::default()).is_err());
}

#[test]
fn weight_matrix_json() {
    let w = RationalWeights::from_json(r#"[[1,"1/2"],["1/2",0]]"#).unwrap();
    assert_eq!(*w.get(0, 1), rational(1, 2));
    assert_eq!(
        RationalWeights::from_json(&w.to_json().to_string()).unwrap(),
        w
    );
    assert!(RationalWeights::from_json("[[1,2],[3,4]]").is_err());
    assert!(RationalWeights::from_json("[[1,2]]").is_err());
}

#[test]
fn product_of_free_poissons_counts_nc() {
    let one = spec("poisson:1");
    let kappa: Vec<i64> = (1..=6)
        .map(|n| {
            product_cumulant(&one, &one, n, &Limits::default())
                .unwrap()
                .to_integer()
                .try_into()
                .unwrap()
        })
        .collect();
    assert_eq!(kappa, [1, 2, 5, 14, 42, 132]);
}

#[test]
fn product_matches_oracle() {
    let a = spec("cumulants:[1,-1,2,1/3]");
    let b = spec("poisson:2");
    let oracle = oracle_cumulants(
        &Expression::Product(a.clone(), b.clone()),
        4,
        &Limits::default(),
    )
    .unwrap();
    for n in 1..=4 {
        assert_eq!(
            product_cumulant(&a, &b, n, &Limits::default()).unwrap(),
            oracle[n - 1]
        );
    }
}

#[test]
fn free_poisson_anticommutator_head() {
    let one = spec("poisson:1");
    let kappa: Vec<_> = (1..=4)
        .map(|n| anticommutator_cumulant(&one, &one, n, &Limits::default()).unwrap())
        .collect();
    assert_eq!(kappa, [2, 10, 52, 310].map(integer));
}

#[test]
fn generic_over_f64() {
    let one = CumulantSpec::free_poisson(1.0f64);
    let k: Vec<f64> = (1..=4)
        .map(|n| anticommutator_cumulant(&one, &one, n, &Limits::default()).unwrap())
        .collect();
    assert_eq!(k, [2.0, 10.0, 52.0, 310.0]);
    let g = anticommutator_cumulant_graphwise(&one, &one, 4, &Limits::default()).unwrap();
    assert_eq!(g, 310.0);
}

#[test]
fn semicircular_pair() {
    let s = spec("semicircular");
    let limits = Limits::default();
    for m in 1..=5 {
        let closed = semicircular_anticommutator(&s, m, &limits).unwrap();
        assert_eq!(closed, anticommutator_cumulant(&s, &s, m, &limits).unwrap());
    }
    assert_eq!(
        semicircular_anticommutator(&s, 2, &limits).unwrap(),
        integer(2)
    );
}

#[test]
fn sums_of_anticommutators_of_semicirculars() {
    let s = spec("semicircular");
    let specs = vec![s.clone(), s.clone(), s];
    let (o, l) = (integer(0), integer(1));
    let w = RationalWeights::new(vec![
        vec![o.clone(), l.clone(), l.clone()],
        vec![l.clone(), o.clone(), l.clone()],
        vec![l.clone(), l, o],
    ])
    .unwrap();
    let limits = Limits::default();
    let oracle =
        oracle_cumulants(&Expression::Quadratic(specs.clone(), w.clone()), 4, &limits).unwrap();
    for n in 1..=4 {
        let by_partition =
            quadratic_form_cumulant(&specs, &w, n, Route::Partition, &limits).unwrap();
        let by_graph = quadratic_form_cumulant(&specs, &w, n, Route::Graph, &limits).unwrap();
        assert_eq!(by_partition, oracle[n - 1]);
        assert_eq!(by_graph, oracle[n - 1]);
    }
}

#[test]
fn quadratic_rejects_mismatched_sizes() {
    let w = RationalWeights::anticommutator();
    let specs = vec![spec("semicircular")];
    assert!(matches!(
        quadratic_form_cumulant(&specs, &w, 2, Route::Partition, &Limits::default()),
        Err(Error::Argument(_))
    ));
}

#[test]
fn oracle_caps() {
    let s = spec("semicircular");
    let expr = Expression::Anticommutator(s.clone(), s);
    assert!(matches!(
        oracle_moments(&expr, 6, &Limits::default()),
        Err(Error::ResourceLimit {
            requested: 6,
            cap: 5,
            ..
        })
    ));
}

#[test]
fn word_moments_of_semicirculars() {
    let s = [spec("semicircular"), spec("semicircular")];
    let abba = Word::new(vec![0, 1, 1, 0]).unwrap();
    let abab = Word::new(vec![0, 1, 0, 1]).unwrap();
    assert_eq!(word_moment(&abba, &s).unwrap(), integer(1));
    assert_eq!(word_moment(&abab, &s).unwrap(), integer(0));
}

#[test]
fn moment_conversions() {
    let kappa = [1, 1, 1, 1, 1].map(integer);
    let catalan = [1, 2, 5, 14, 42].map(integer);
    assert_eq!(moments_from_cumulants(&kappa), catalan);
    assert_eq!(cumulants_from_moments(&catalan), kappa);
    assert_eq!(
        moments_by_enumeration(&kappa, &Limits::default()).unwrap(),
        catalan
    );
}
