//! Shared inputs for the criterion benchmarks.

use latkit_core::families::{tamari, weak_order};
use latkit_core::search::{intervals, LabeledLattice};
use latkit_core::Lattice;

/// Named lattices of a few hundred elements or fewer.
pub fn inputs() -> Vec<(&'static str, Lattice)> {
    vec![
        ("weak4", weak_order(4).expect("S_4 builds")),
        ("tamari4", tamari(4).expect("T_4 builds")),
        ("weak5", weak_order(5).expect("S_5 builds")),
    ]
}

/// A congruence-uniform lattice from `steps` doublings, always picking the
/// middle interval.
pub fn cu_lattice(steps: usize) -> LabeledLattice {
    let mut cur = LabeledLattice::trivial();
    for _ in 0..steps {
        let ivs = intervals(&cur.lattice);
        let (a, b) = ivs[ivs.len() / 2];
        cur = cur.double(a, b).expect("intervals double");
    }
    cur
}
