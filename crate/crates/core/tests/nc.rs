use nc_cumulants::nc::{
    enumerate_even_nc, enumerate_nc, enumerate_y, level_counts, max_level, q_count,
};
use nc_cumulants::{Direction, Error, Limits, Partition};

fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

#[test]
fn text_round_trip_is_canonical() {
    let q = p("10 12|11|9|5|3 4|2 7 6|8 1");
    assert_eq!(q.to_string(), "1 8|2 6 7|3 4|5|9|10 12|11");
    assert_eq!(p(&q.to_string()), q);
    assert_eq!(Partition::from_json(&q.to_json()).unwrap(), q);
}

#[test]
fn malformed_partitions_are_rejected() {
    assert!(matches!("1 2|".parse::<Partition>(), Err(Error::Parse(_))));
    assert!(matches!("1 x".parse::<Partition>(), Err(Error::Parse(_))));
    assert!("1 2|2 3".parse::<Partition>().is_err());
    assert!("1 3".parse::<Partition>().is_err());
}

#[test]
fn kreweras_of_twelve_element_example() {
    let sigma = p("1 8|2 6 7|3 4|5|9|10 12|11");
    let pi = sigma.kreweras(Direction::Forward).unwrap();
    assert_eq!(pi.kreweras(Direction::Inverse).unwrap(), sigma);
    assert_eq!(pi.block_count() + sigma.block_count(), 13);
    assert!(pi.x_membership().unwrap());
}

#[test]
fn kreweras_extremes() {
    let zero = Partition::singletons(6).unwrap();
    let one = Partition::single_block(6).unwrap();
    assert_eq!(zero.kreweras(Direction::Forward).unwrap(), one);
    assert_eq!(one.kreweras(Direction::Forward).unwrap(), zero);
}

#[test]
fn crossing_input_is_an_argument_error() {
    let crossing = p("1 3|2 4");
    assert!(!crossing.is_noncrossing());
    assert!(matches!(
        crossing.kreweras(Direction::Forward),
        Err(Error::Argument(_))
    ));
    assert!(matches!(crossing.y_membership(), Err(Error::Argument(_))));
}

#[test]
fn interleave_restrict() {
    let odd = p("1 3|2");
    let even = p("1 2 3");
    let both = Partition::interleave(&odd, &even).unwrap();
    assert_eq!(both, p("1 5|3|2 4 6"));
    assert_eq!(both.restrict(&[1, 3, 5]).unwrap(), odd);
    assert_eq!(both.restrict(&[2, 4, 6]).unwrap(), even);
}

#[test]
fn catalan_enumeration() {
    let counts: Vec<usize> = (1..=10)
        .map(|m| enumerate_nc(m, &Limits::default()).unwrap().count())
        .collect();
    assert_eq!(counts, [1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796]);
    assert!(enumerate_nc(9, &Limits::default())
        .unwrap()
        .all(|q| q.is_noncrossing()));
}

#[test]
fn enumeration_cap() {
    let tight = Limits {
        enumeration: 8,
        ..Limits::default()
    };
    assert!(matches!(
        enumerate_nc(9, &tight),
        Err(Error::ResourceLimit {
            requested: 9,
            cap: 8,
            ..
        })
    ));
    assert!(enumerate_even_nc(10, &tight).is_err());
    assert!(level_counts(9, &tight).is_err());
}

#[test]
fn even_partitions_are_fuss_catalan() {
    // even NC partitions of [2n] number binom(3n, n)/(2n + 1)
    let counts: Vec<usize> = (1..=6)
        .map(|n| enumerate_even_nc(2 * n, &Limits::default()).unwrap().len())
        .collect();
    assert_eq!(counts, [1, 3, 12, 55, 273, 1428]);
}

#[test]
fn y_levels() {
    assert_eq!(max_level(8), 2);
    assert_eq!(level_counts(8, &Limits::default()).unwrap(), [112, 41, 2]);
    let top: Vec<Partition> = enumerate_y(8, &Limits::default())
        .unwrap()
        .filter(|(_, d)| d.level == 2)
        .map(|(q, _)| q)
        .collect();
    assert_eq!(top, [p("1|2 4|3|5|6 8|7"), p("1|2 8|3|4 6|5|7")]);
}

#[test]
fn q_counts_sum_to_y() {
    let limits = Limits::default();
    let total: u64 = enumerate_nc(3, &limits)
        .unwrap()
        .map(|q| q_count(&q, &limits).unwrap())
        .sum();
    assert_eq!(total, 26);
}

#[test]
fn kreweras_is_the_maximal_interleavable_partition() {
    let limits = Limits::default();
    for m in 1..=6 {
        let all: Vec<Partition> = enumerate_nc(m, &limits).unwrap().collect();
        for p in &all {
            let admissible: Vec<&Partition> = all
                .iter()
                .filter(|q| Partition::interleave(p, q).unwrap().is_noncrossing())
                .collect();
            let kr = p.kreweras(Direction::Forward).unwrap();
            assert!(admissible.contains(&&kr), "{p}");
            assert!(admissible.iter().all(|q| q.refines(&kr)), "{p}");
        }
    }
}

#[test]
fn q_count_lower_bound() {
    // Each non-empty set S of blocks carrying odd elements gives two distinct
    // attachments; S = ∅ (possible only when every block is even) gives one.
    // At n = 1 the attachment min(V) + 1 falls outside [2].
    let limits = Limits::default();
    for n in 2..=5 {
        for q in enumerate_nc(n, &limits).unwrap() {
            let even = q.blocks().iter().filter(|b| b.len() % 2 == 0).count() as u32;
            let all_even = even as usize == q.block_count();
            let bound = (1u64 << (even + 1)) - u64::from(all_even);
            assert!(q_count(&q, &limits).unwrap() >= bound, "{q}");
        }
    }
    assert_eq!(
        q_count(&Partition::singletons(1).unwrap(), &limits).unwrap(),
        1
    );
    assert_eq!(q_count(&p("1 2"), &limits).unwrap(), 3);
}
