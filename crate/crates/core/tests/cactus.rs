use nc_cumulants::cactus::{
    build_graph, canonical_outercycle, enumerate_oriented_cacti, outercycle_orbit, BlockMultigraph,
    Coloring, Signature,
};
use nc_cumulants::{Limits, Partition};
use serde_json::json;

fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

fn example() -> Partition {
    p("1 8|2 6 7|3 4|5|9|10 12|11")
        .kreweras(nc_cumulants::Direction::Forward)
        .unwrap()
}

#[test]
fn example_graph_is_a_bipartite_cactus() {
    let g = build_graph(&example()).unwrap();
    assert!(g.is_connected());
    let report = g.validate_cactus().unwrap();
    assert!(report.is_cactus);
    assert_eq!(report.simple_cycle_count, 1);
    assert_eq!(report.rigid.iter().filter(|r| !**r).count(), 4);
    assert!(g.bipartition(0).unwrap().is_some());
}

#[test]
fn example_outercycle() {
    let c = canonical_outercycle(&example()).unwrap();
    assert_eq!(c.f_c, 3);
    assert_eq!(c.g_exponent(), 7);
    assert!(!c.first_edge_rigid);
    assert_eq!(c.flexible_count(), 4);
    assert_eq!(c.signature.edge_count(), 6);
    assert_eq!(
        outercycle_orbit(&example()).unwrap().len(),
        c.signature.len()
    );
}

#[test]
fn single_loop() {
    let c = canonical_outercycle(&Partition::single_block(2).unwrap()).unwrap();
    assert_eq!(c.signature, Signature(vec![(1, 1)]));
    assert!(c.first_edge_rigid);
    assert_eq!(c.f_c, 0);
    assert_eq!(c.bipartition, None);
}

#[test]
fn disconnected_graph_has_no_outercycle() {
    let q = Partition::interval_pairing(2).unwrap();
    assert!(!BlockMultigraph::from_partition(&q).unwrap().is_connected());
    assert!(canonical_outercycle(&q).is_err());
}

#[test]
fn json_shape() {
    let c = canonical_outercycle(&p("1 4|2 3")).unwrap();
    let v = c.to_json();
    let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
    assert_eq!(keys, ["signature", "rigid", "fC", "bipartition", "degrees"]);
    assert_eq!(v["signature"], json!([[1, 1], [2, 2]]));
    assert_eq!(v["rigid"], json!([true, true]));
    assert_eq!(v["fC"], json!(0));
    assert_eq!(v["bipartition"], json!([[1], [2]]));
    assert_eq!(v["degrees"], json!([2, 2]));
    let coloured = c
        .with_coloring(Coloring::new(vec![1, 2], 2).unwrap())
        .unwrap();
    assert_eq!(coloured.to_json()["coloring"], json!([1, 2]));
}

#[test]
fn classes_partition_the_connected_graphs() {
    let limits = Limits::default();
    for n in 1..=4 {
        let classes = enumerate_oriented_cacti(n, false, &limits).unwrap();
        let bipartite = enumerate_oriented_cacti(n, true, &limits).unwrap();
        assert!(bipartite.keys().all(|k| classes.contains_key(k)));
        for class in classes.values() {
            for member in &class.members {
                assert_eq!(canonical_outercycle(member).unwrap(), class.cactus);
            }
        }
    }
}

#[test]
fn colourings_enumerate_all_maps() {
    assert_eq!(Coloring::all(3, 2).count(), 8);
    assert!(Coloring::new(vec![0], 2).is_err());
    assert!(Coloring::new(vec![3], 2).is_err());
}
