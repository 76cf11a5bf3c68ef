use latkit_core::search::{
    census, census_subgraph_closure_report, enumerate_congruence_uniform, fig2_right_witness,
    fig6_witness, parse_census_jsonl, realize_graph_as_cjg, CensusOptions, Deletion,
};
use latkit_core::{Error, Graph};

#[test]
fn congruence_uniform_levels() {
    let counts: Vec<usize> = (0..=3)
        .map(|k| enumerate_congruence_uniform(k).unwrap().len())
        .collect();
    assert_eq!(counts, vec![1, 1, 2, 8]);
    for class in enumerate_congruence_uniform(3).unwrap() {
        for (trace, l) in &class.lattices {
            let ll = trace.replay().unwrap();
            assert_eq!(ll.lattice.poset(), l.poset());
            assert_eq!(ll.labeled_cjg().unwrap(), class.graph);
        }
    }
    assert!(matches!(
        enumerate_congruence_uniform(7),
        Err(Error::GuardExceeded { .. })
    ));
}

#[test]
fn census_jsonl_format() {
    let report = census(&CensusOptions::new(2)).unwrap();
    let text = report.to_jsonl();
    let first = text.lines().next().unwrap();
    let v: serde_json::Value = serde_json::from_str(first).unwrap();
    for key in ["n", "edges", "lattice_count", "witness_trace"] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
    assert_eq!(parse_census_jsonl(&text).unwrap().len(), 3);
    assert!(parse_census_jsonl("{\"n\":1}").is_err());
}

#[test]
fn resume_rejects_bad_records() {
    let mut records = parse_census_jsonl(&census(&CensusOptions::new(2)).unwrap().to_jsonl()).unwrap();
    records[0].edges.push((1, 2));
    let mut opts = CensusOptions::new(2);
    opts.resume = records;
    assert!(census(&opts).is_err());
}

#[test]
fn closure_report_rows() {
    let rows = census_subgraph_closure_report(4).unwrap();
    assert!(rows.iter().all(|r| r.in_census));
    assert!(rows.iter().any(|r| matches!(r.deleted, Deletion::Vertex(_))));
    assert!(rows.iter().any(|r| matches!(r.deleted, Deletion::Edge(..))));
}

#[test]
fn realization_not_found_within_bound() {
    assert_eq!(
        realize_graph_as_cjg(&Graph::cycle(4), 3).unwrap_err(),
        Error::NotFound { max_steps: 3 }
    );
    let r = realize_graph_as_cjg(&Graph::path(3), 3).unwrap();
    assert!(r.labeled_graph.is_isomorphic(&Graph::path(3)));
}

#[test]
fn searched_fixtures() {
    let l = fig2_right_witness().unwrap();
    assert!(l.is_meet_semidistributive() && !l.is_join_semidistributive());
    let l = fig6_witness().unwrap();
    assert!(!l.is_join_semidistributive() && !l.is_meet_semidistributive());
    assert!(latkit_core::complex::is_crosscut_simplicial(&l));
}
