use proptest::prelude::*;

use latkit_core::complex::{canonical_join_complex, canonical_join_graph, canonical_meet_complex};
use latkit_core::constructions::{
    congruence_generated, contracted_join_irreducibles, double_interval,
    predicted_doubled_cjg_edges,
};
use latkit_core::families::distributive_from_poset;
use latkit_core::io::{lattice_from_json, lattice_to_json};
use latkit_core::search::{intervals, LabeledLattice};
use latkit_core::{Lattice, Poset};

/// A congruence-uniform lattice from a list of interval choices, each taken
/// modulo the number of intervals available at that step.
fn cu_lattice(choices: &[usize]) -> LabeledLattice {
    let mut cur = LabeledLattice::trivial();
    for &c in choices {
        let ivs = intervals(&cur.lattice);
        let (a, b) = ivs[c % ivs.len()];
        cur = cur.double(a, b).unwrap();
    }
    cur
}

fn random_poset(n: usize, bits: &[bool]) -> Poset {
    let mut covers = Vec::new();
    let mut k = 0;
    for x in 0..n {
        for y in x + 1..n {
            if bits[k] {
                covers.push((x, y));
            }
            k += 1;
        }
    }
    Poset::from_covers(n, &covers).unwrap()
}

fn poset_strategy() -> impl Strategy<Value = Poset> {
    (1usize..=6).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2)
            .prop_map(move |bits| random_poset(n, &bits))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn congruence_uniform_lattices_are_semidistributive_and_flag(
        choices in proptest::collection::vec(0usize..1000, 0..5)
    ) {
        let ll = cu_lattice(&choices);
        let l = &ll.lattice;
        prop_assert!(l.is_semidistributive());
        prop_assert_eq!(l.join_irreducibles().len(), choices.len());
        prop_assert!(canonical_join_complex(l).unwrap().is_flag());
        prop_assert!(canonical_meet_complex(l).unwrap().is_flag());
        let again = ll.trace.replay().unwrap();
        prop_assert_eq!(again.lattice.poset(), l.poset());
    }

    #[test]
    fn doubling_prediction_matches(
        choices in proptest::collection::vec(0usize..1000, 0..4),
        pick in 0usize..1000,
    ) {
        let l = cu_lattice(&choices).lattice;
        let ivs = intervals(&l);
        let (a, b) = ivs[pick % ivs.len()];
        let d = double_interval(&l, a, b).unwrap();
        prop_assert_eq!(
            predicted_doubled_cjg_edges(&l, a, b, &d).unwrap(),
            canonical_join_graph(&d.lattice).unwrap()
        );
    }

    #[test]
    fn canonical_form_ignores_relabelling(p in poset_strategy(), seed in any::<u64>()) {
        let n = p.len();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut s = seed;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        let q = Poset::from_relation(n, |x, y| p.leq(perm[x], perm[y])).unwrap();
        prop_assert_eq!(p.canonical_form(), q.canonical_form());
    }

    #[test]
    fn distributive_join_graph_is_incomparability(p in poset_strategy()) {
        let jp = distributive_from_poset(&p).unwrap();
        let g = canonical_join_graph(&jp).unwrap();
        prop_assert!(g.is_isomorphic(&p.incomparability_graph()));
    }

    #[test]
    fn generated_congruences_are_closed(
        choices in proptest::collection::vec(0usize..1000, 1..5),
        mask in any::<u32>(),
    ) {
        let l = cu_lattice(&choices).lattice;
        let irr = l.join_irreducibles().to_vec();
        let seed: Vec<usize> = irr.iter().enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &j)| j)
            .collect();
        let theta = congruence_generated(&l, &seed).unwrap();
        let contracted = contracted_join_irreducibles(&l, &theta);
        prop_assert!(seed.iter().all(|j| contracted.contains(j)));
        prop_assert_eq!(congruence_generated(&l, &contracted).unwrap(), theta);
    }

    #[test]
    fn json_round_trip(choices in proptest::collection::vec(0usize..1000, 0..5)) {
        let l = cu_lattice(&choices).lattice;
        let back: Lattice = lattice_from_json(&lattice_to_json(&l)).unwrap();
        prop_assert_eq!(back.poset().covers(), l.poset().covers());
        for x in 0..l.len() {
            for y in 0..l.len() {
                prop_assert_eq!(back.join(x, y), l.join(x, y));
            }
        }
    }
}
