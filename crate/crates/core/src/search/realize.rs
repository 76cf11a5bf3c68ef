//! Realizing graphs as canonical join graphs of congruence-uniform lattices.

use std::collections::HashSet;

use super::{intervals, DoublingSequence, LabeledLattice};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::lattice::Lattice;

/// Most doublings [`realize_graph_as_cjg`] will search.
pub const REALIZE_STEP_LIMIT: usize = 7;

#[derive(Clone, Debug)]
pub struct Realization {
    pub lattice: Lattice,
    pub trace: DoublingSequence,
    /// Canonical join graph on the doubling labels `1..=n`.
    pub labeled_graph: Graph,
}

impl Realization {
    fn from_labeled(ll: LabeledLattice) -> Result<Self> {
        let labeled_graph = ll.labeled_cjg()?;
        Ok(Realization {
            lattice: ll.lattice,
            trace: ll.trace,
            labeled_graph,
        })
    }
}

/// Depth-first search over doubling sequences of length `|V(G)|` for a
/// lattice whose canonical join graph is isomorphic to `G`. The graph of
/// every intermediate lattice is an induced subgraph of the final one, so
/// branches whose graph does not embed in `G` are cut. The first witness in
/// interval order is returned.
pub fn realize_graph_as_cjg(g: &Graph, max_steps: usize) -> Result<Realization> {
    if max_steps > REALIZE_STEP_LIMIT {
        return Err(Error::guard("doublings", max_steps, REALIZE_STEP_LIMIT));
    }
    let n = g.vertex_count();
    if n > max_steps {
        return Err(Error::NotFound { max_steps });
    }
    fn dfs(
        ll: &LabeledLattice,
        g: &Graph,
        seen: &mut HashSet<Vec<u64>>,
    ) -> Result<Option<LabeledLattice>> {
        if ll.steps() == g.vertex_count() {
            return Ok(Some(ll.clone()));
        }
        for (a, b) in intervals(&ll.lattice) {
            let next = ll.double(a, b)?;
            if !seen.insert(next.key()) {
                continue;
            }
            if !next.labeled_cjg()?.embeds_induced_in(g) {
                continue;
            }
            if let Some(found) = dfs(&next, g, seen)? {
                return Ok(Some(found));
            }
        }
        Ok(None)
    }
    match dfs(&LabeledLattice::trivial(), g, &mut HashSet::new())? {
        Some(ll) => Realization::from_labeled(ll),
        None => Err(Error::NotFound { max_steps }),
    }
}

/// Builds a lattice whose labeled canonical join graph is `g`, with the
/// vertex `order[i - 1]` receiving label `i`. The earlier neighbours of each
/// vertex must form a clique, and the earlier neighbours of `order[i]` other
/// than `order[i - 1]` must be neighbours of `order[i - 1]`.
pub fn realize_chordal(g: &Graph, order: &[usize]) -> Result<Realization> {
    let n = g.vertex_count();
    let mut sorted = order.to_vec();
    sorted.sort_unstable();
    if sorted != g.vertices() {
        return Err(Error::PreconditionViolated {
            reason: "the ordering must list every vertex exactly once".into(),
        });
    }
    let adj = |i: usize, j: usize| g.has_edge(order[i - 1], order[j - 1]);
    let earlier = |i: usize| (1..i).filter(move |&j| adj(i, j));
    for i in 1..=n {
        let e: Vec<usize> = earlier(i).collect();
        if e.iter().any(|&x| e.iter().any(|&y| x < y && !adj(x, y))) {
            return Err(Error::NotPeo { index: i });
        }
    }
    for i in 1..n {
        if earlier(i + 1).any(|j| j < i && !adj(i, j)) {
            return Err(Error::NeighborhoodNotNested { index: i });
        }
    }
    let mut cur = LabeledLattice::trivial();
    for i in 1..=n {
        cur = if i == 1 {
            cur.double(0, 0)?
        } else {
            let l = &cur.lattice;
            let label = |k: usize| cur.element_of_label(k).expect("labels 1..i-1 exist");
            let prev = label(i - 1);
            let y = earlier(i)
                .filter(|&j| j != i - 1)
                .fold(prev, |acc, j| l.join(acc, label(j)));
            let lower = if adj(i, i - 1) { l.lower_star(prev)? } else { prev };
            cur.double(lower, y)?
        };
    }
    let want = g.map_vertices(|v| order.iter().position(|&w| w == v).expect("checked") + 1);
    let out = Realization::from_labeled(cur)?;
    if out.labeled_graph != want {
        return Err(Error::InvariantViolated {
            what: "chordal construction produced a different labeled graph".into(),
        });
    }
    Ok(out)
}
