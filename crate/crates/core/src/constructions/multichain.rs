//! Lattices of multichains `L^[m]`.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::lattice::Lattice;
use crate::poset::Poset;

/// `L^[m]` with its elements as weakly increasing tuples of ids of `L`.
#[derive(Clone, Debug)]
pub struct Multichain {
    pub lattice: Lattice,
    /// Tuples in lexicographic order; the id of a tuple is its position.
    pub tuples: Vec<Vec<usize>>,
    index: HashMap<Vec<usize>, usize>,
    m: usize,
}

impl Multichain {
    pub fn index_of(&self, tuple: &[usize]) -> Option<usize> {
        self.index.get(tuple).copied()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// `(j)_k`: `0̂` in the first `k - 1` coordinates, `j` from coordinate
    /// `k` on (`k` is 1-based).
    pub fn embedded(&self, base: &Lattice, j: usize, k: usize) -> Option<usize> {
        if k == 0 || k > self.m {
            return None;
        }
        let t: Vec<usize> = (1..=self.m)
            .map(|i| if i < k { base.bottom() } else { j })
            .collect();
        self.index_of(&t)
    }
}

/// Most elements [`multichain_lattice`] will build.
pub const MULTICHAIN_LIMIT: usize = 4096;

pub fn multichain_lattice(l: &Lattice, m: usize) -> Result<Multichain> {
    if m == 0 {
        return Err(Error::PreconditionViolated {
            reason: "multichains need m >= 1".into(),
        });
    }
    let mut tuples: Vec<Vec<usize>> = (0..l.len()).map(|x| vec![x]).collect();
    for _ in 1..m {
        let mut next = Vec::new();
        for t in &tuples {
            let last = *t.last().expect("non-empty");
            for y in l.poset().up_set(last).iter() {
                let mut u = t.clone();
                u.push(y);
                next.push(u);
            }
            if next.len() > MULTICHAIN_LIMIT {
                return Err(Error::guard("multichain elements", next.len(), MULTICHAIN_LIMIT));
            }
        }
        tuples = next;
    }
    tuples.sort();
    let index: HashMap<Vec<usize>, usize> =
        tuples.iter().enumerate().map(|(i, t)| (t.clone(), i)).collect();
    let p = Poset::from_relation(tuples.len(), |x, y| {
        tuples[x].iter().zip(&tuples[y]).all(|(&a, &b)| l.leq(a, b))
    })?;
    let labels = tuples
        .iter()
        .map(|t| {
            let parts: Vec<String> = t.iter().map(|&x| l.label(x)).collect();
            format!("({})", parts.join(","))
        })
        .collect();
    let lattice = Lattice::from_poset(p.with_labels(labels))?;
    Ok(Multichain {
        lattice,
        tuples,
        index,
        m,
    })
}

/// Canonical join graph of `L^[m]` predicted from `L`: for incomparable
/// `(j)_i`, `(j')_k` with `i < k`, an edge iff `j'` is a canonical joinand
/// of `j ∨ j'`; with `i = k`, an edge iff `{j, j'}` is a face for `L`.
pub fn multichain_cjg_predicted(l: &Lattice, mc: &Multichain) -> Result<Graph> {
    if !l.is_semidistributive() {
        return Err(Error::PreconditionViolated {
            reason: "the multichain prediction needs a semidistributive lattice".into(),
        });
    }
    let big = &mc.lattice;
    let can = |w: usize| l.canonical_join_rep(w).expect("semidistributive").joinands;
    let verts: Vec<(usize, usize, usize)> = l
        .join_irreducibles()
        .iter()
        .flat_map(|&j| (1..=mc.m).map(move |k| (j, k)))
        .map(|(j, k)| (j, k, mc.embedded(l, j, k).expect("multichain tuple")))
        .collect();
    let mut edges = Vec::new();
    for &(j, i, u) in &verts {
        for &(jp, k, v) in &verts {
            if u >= v || big.poset().comparable(u, v) {
                continue;
            }
            let edge = match i.cmp(&k) {
                std::cmp::Ordering::Less => can(l.join(j, jp)).contains(&jp),
                std::cmp::Ordering::Greater => can(l.join(j, jp)).contains(&j),
                std::cmp::Ordering::Equal => {
                    let w = l.join(j, jp);
                    let mut pair = vec![j, jp];
                    pair.sort_unstable();
                    can(w) == pair
                }
            };
            if edge {
                edges.push((u, v));
            }
        }
    }
    Ok(Graph::new(verts.iter().map(|v| v.2).collect(), edges))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::canonical_join_graph;
    use crate::families::{boolean, weak_order};

    #[test]
    fn m_equals_one() {
        let b2 = boolean(2).unwrap();
        let mc = multichain_lattice(&b2, 1).unwrap();
        assert!(mc.lattice.is_isomorphic(&b2));
        assert!(multichain_lattice(&b2, 0).is_err());
    }

    #[test]
    fn s3_two_multichains() {
        let s3 = weak_order(3).unwrap();
        let mc = multichain_lattice(&s3, 2).unwrap();
        assert_eq!(mc.lattice.len(), 17);
        assert_eq!(mc.lattice.join_irreducibles().len(), 8);
        let predicted = multichain_cjg_predicted(&s3, &mc).unwrap();
        let direct = canonical_join_graph(&mc.lattice).unwrap();
        assert_eq!(predicted, direct);
        assert_eq!(direct.edge_count(), 8);
    }
}
