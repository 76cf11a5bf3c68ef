//! Exhaustive searches: small-lattice enumeration, congruence-uniform
//! lattices built by interval doublings, the labeled canonical join graph
//! census and graph realization.

mod census;
mod posets;
mod realize;

use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::complex::{canonical_join_map, SimplicialComplex};
use crate::constructions::double_interval;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::lattice::{Lattice, Side};

pub use census::{
    census, census_subgraph_closure_report, enumerate_congruence_uniform, parse_census_jsonl,
    CensusOptions, CensusRecord, CensusReport, ClosureRow, CuClass, Deletion, CENSUS_STEP_LIMIT,
};
pub use posets::{
    count_naturally_labeled_lattices, enumerate_lattices, enumerate_posets, is_lattice_naive,
    lattice_automorphism_count, linear_extension_count, LATTICE_ENUMERATION_LIMIT,
};
pub use realize::{realize_chordal, realize_graph_as_cjg, Realization, REALIZE_STEP_LIMIT};

/// Interval endpoints of successive doublings, starting from the
/// one-element lattice. Step `k` names elements of the lattice built by
/// the first `k - 1` steps.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DoublingSequence {
    pub steps: Vec<(usize, usize)>,
}

impl DoublingSequence {
    pub fn new(steps: Vec<(usize, usize)>) -> Self {
        DoublingSequence { steps }
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Rebuilds the lattice, checking every step.
    pub fn replay(&self) -> Result<LabeledLattice> {
        let mut cur = LabeledLattice::trivial();
        for &(a, b) in &self.steps {
            cur = cur.double(a, b)?;
        }
        Ok(cur)
    }
}

/// A congruence-uniform lattice whose join-irreducibles carry the index
/// of the doubling step that created them.
#[derive(Clone, Debug)]
pub struct LabeledLattice {
    pub lattice: Lattice,
    /// Label of each element: `1..=k` for join-irreducibles, `0` otherwise.
    pub labels: Vec<usize>,
    pub trace: DoublingSequence,
}

/// Certifies semidistributivity through the cover labelling on both sides
/// and records the verdict on the lattice.
pub fn certify_semidistributive(l: &Lattice) -> Result<()> {
    if !l.is_join_semidistributive_by_covers() {
        return Err(Error::InvariantViolated {
            what: "doubling produced a lattice that is not join-semidistributive".into(),
        });
    }
    if !l.is_meet_semidistributive_by_covers() {
        return Err(Error::InvariantViolated {
            what: "doubling produced a lattice that is not meet-semidistributive".into(),
        });
    }
    l.assume_semidistributive(Side::Join);
    l.assume_semidistributive(Side::Meet);
    Ok(())
}

impl LabeledLattice {
    pub fn trivial() -> Self {
        let lattice = Lattice::from_covers(1, &[]).expect("one element");
        LabeledLattice {
            lattice,
            labels: vec![0],
            trace: DoublingSequence::default(),
        }
    }

    pub fn steps(&self) -> usize {
        self.trace.len()
    }

    /// Doubles `[a, b]`; the new join-irreducible `(a, 1)` gets the next
    /// label and every old one moves to the bottom of its fibre.
    pub fn double(&self, a: usize, b: usize) -> Result<LabeledLattice> {
        let d = double_interval(&self.lattice, a, b)?;
        let k = self.steps() + 1;
        let mut labels = vec![0; d.lattice.len()];
        for (x, &lab) in self.labels.iter().enumerate() {
            if lab != 0 {
                labels[d.fiber_min(x)] = lab;
            }
        }
        let new_j = d.lift[a][1].expect("a lies in the doubled interval");
        labels[new_j] = k;
        let expected: Vec<usize> = (0..labels.len()).filter(|&x| labels[x] != 0).collect();
        if d.lattice.join_irreducibles() != expected.as_slice() {
            return Err(Error::InvariantViolated {
                what: format!("doubling [{a}, {b}] did not add exactly one join-irreducible"),
            });
        }
        let mut trace = self.trace.clone();
        trace.steps.push((a, b));
        Ok(LabeledLattice {
            lattice: d.lattice,
            labels,
            trace,
        })
    }

    /// Element carrying label `i`.
    pub fn element_of_label(&self, i: usize) -> Option<usize> {
        self.labels.iter().position(|&l| l == i && i != 0)
    }

    /// For each element, the labels of the join-irreducibles below it as a
    /// bitmask; sorted, this determines the labeled lattice up to
    /// label-preserving isomorphism.
    pub fn key(&self) -> Vec<u64> {
        let l = &self.lattice;
        let mut masks: Vec<u64> = (0..l.len())
            .map(|x| {
                l.poset()
                    .down_set(x)
                    .iter()
                    .filter(|&y| self.labels[y] != 0)
                    .fold(0u64, |m, y| m | 1 << self.labels[y])
            })
            .collect();
        masks.sort_unstable();
        masks
    }

    /// Canonical join graph on the labels `1..=k`. Semidistributivity is
    /// certified first.
    pub fn labeled_cjg(&self) -> Result<Graph> {
        Ok(self.labeled_cjc()?.one_skeleton())
    }

    /// Canonical join complex on the labels `1..=k`.
    pub fn labeled_cjc(&self) -> Result<SimplicialComplex> {
        certify_semidistributive(&self.lattice)?;
        let map = canonical_join_map(&self.lattice)?;
        let faces = map
            .into_iter()
            .map(|f| {
                let mut g: Vec<usize> = f.into_iter().map(|x| self.labels[x]).collect();
                g.sort_unstable();
                g
            })
            .collect();
        Ok(SimplicialComplex::from_closed_faces(
            (1..=self.steps()).collect(),
            faces,
        ))
    }
}

/// Every interval `[a, b]` of `l`, ordered by `(a, b)`.
pub fn intervals(l: &Lattice) -> Vec<(usize, usize)> {
    (0..l.len())
        .flat_map(|a| l.poset().up_set(a).iter().map(move |b| (a, b)))
        .collect()
}

fn corpus() -> &'static [Lattice] {
    static CORPUS: OnceLock<Vec<Lattice>> = OnceLock::new();
    CORPUS.get_or_init(|| enumerate_lattices(LATTICE_ENUMERATION_LIMIT).expect("within guard"))
}

fn minimal_top_reps(l: &Lattice) -> Result<usize> {
    let reps = l.irredundant_join_reps(l.top())?;
    Ok(reps
        .iter()
        .filter(|a| !reps.iter().any(|b| b != *a && l.join_refines(b, a)))
        .count())
}

/// Smallest lattice (first in enumeration order) that is
/// meet-semidistributive, not join-semidistributive, and whose top has at
/// least two join-refinement-minimal irredundant join representations.
pub fn fig2_right_witness() -> Result<Lattice> {
    for l in corpus() {
        if l.is_meet_semidistributive()
            && !l.is_join_semidistributive()
            && minimal_top_reps(l)? >= 2
        {
            return Ok(l.clone());
        }
    }
    Err(Error::NotFound {
        max_steps: LATTICE_ENUMERATION_LIMIT,
    })
}

/// Smallest crosscut-simplicial lattice that fails both semidistributive
/// laws.
pub fn fig6_witness() -> Result<Lattice> {
    corpus()
        .iter()
        .find(|l| {
            !l.is_join_semidistributive()
                && !l.is_meet_semidistributive()
                && crate::complex::is_crosscut_simplicial(l)
        })
        .cloned()
        .ok_or(Error::NotFound {
            max_steps: LATTICE_ENUMERATION_LIMIT,
        })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::boolean;

    #[test]
    fn replay_builds_boolean_lattices() {
        let seq = DoublingSequence::new(vec![(0, 0), (0, 1)]);
        let b2 = seq.replay().unwrap();
        assert!(b2.lattice.is_isomorphic(&boolean(2).unwrap()));
        assert_eq!(b2.labeled_cjg().unwrap(), Graph::new(vec![1, 2], [(1, 2)]));
        assert!(DoublingSequence::new(vec![(0, 1)]).replay().is_err());
    }

    #[test]
    fn keys_identify_labeled_lattices() {
        let one = LabeledLattice::trivial().double(0, 0).unwrap();
        let b2 = one.double(0, 1).unwrap();
        // Doubling either atom of B_2 gives N_5, but with different labels.
        let (a1, a2) = (b2.element_of_label(1).unwrap(), b2.element_of_label(2).unwrap());
        let x = b2.double(a1, a1).unwrap();
        let y = b2.double(a2, a2).unwrap();
        assert!(x.lattice.is_isomorphic(&y.lattice));
        assert_ne!(x.key(), y.key());
        assert_eq!(x.labeled_cjg().unwrap(), y.labeled_cjg().unwrap());
    }
}
