//! Simple undirected graphs on element ids.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::bits::BitSet;
use crate::canon::canonical_labeling;

/// A simple graph whose vertices are element ids of some ambient structure
/// (join-irreducibles of a lattice, elements of a poset, ...).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Graph {
    vertices: Vec<usize>,
    edges: BTreeSet<(usize, usize)>,
}

impl Graph {
    /// Loops are dropped and each edge is stored once as `(min, max)`.
    pub fn new(mut vertices: Vec<usize>, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        vertices.sort_unstable();
        vertices.dedup();
        let edges = edges
            .into_iter()
            .filter(|(u, v)| u != v)
            .map(|(u, v)| (u.min(v), u.max(v)))
            .collect::<BTreeSet<_>>();
        debug_assert!(edges
            .iter()
            .all(|(u, v)| vertices.binary_search(u).is_ok() && vertices.binary_search(v).is_ok()));
        Graph { vertices, edges }
    }

    pub fn empty(n: usize) -> Self {
        Graph::new((0..n).collect(), [])
    }

    pub fn complete(n: usize) -> Self {
        Graph::new(
            (0..n).collect(),
            (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))),
        )
    }

    pub fn cycle(n: usize) -> Self {
        Graph::new((0..n).collect(), (0..n).map(|u| (u, (u + 1) % n)))
    }

    pub fn path(n: usize) -> Self {
        Graph::new((0..n).collect(), (1..n).map(|u| (u - 1, u)))
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&(u.min(v), u.max(v)))
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        self.vertices
            .iter()
            .copied()
            .filter(|&u| self.has_edge(u, v))
            .collect()
    }

    pub fn induced_subgraph(&self, keep: &[usize]) -> Graph {
        let keep: BTreeSet<usize> = keep
            .iter()
            .copied()
            .filter(|v| self.vertices.binary_search(v).is_ok())
            .collect();
        Graph::new(
            keep.iter().copied().collect(),
            self.edges
                .iter()
                .copied()
                .filter(|(u, v)| keep.contains(u) && keep.contains(v)),
        )
    }

    /// Renames vertices through `f`.
    pub fn map_vertices(&self, f: impl Fn(usize) -> usize) -> Graph {
        Graph::new(
            self.vertices.iter().map(|&v| f(v)).collect(),
            self.edges.iter().map(|&(u, v)| (f(u), f(v))),
        )
    }

    fn local_rows(&self) -> Vec<BitSet> {
        let n = self.vertices.len();
        let idx = |v: usize| self.vertices.binary_search(&v).expect("edge endpoint is a vertex");
        let mut rows: Vec<BitSet> = (0..n).map(|_| BitSet::new(n)).collect();
        for &(u, v) in &self.edges {
            rows[idx(u)].insert(idx(v));
            rows[idx(v)].insert(idx(u));
        }
        rows
    }

    /// Canonical code of the unlabelled graph.
    pub fn canonical_code(&self) -> Vec<u64> {
        let rows = self.local_rows();
        let init: Vec<u64> = rows.iter().map(|r| r.count() as u64).collect();
        canonical_labeling(&rows, &rows, &init).code
    }

    pub fn is_isomorphic(&self, other: &Graph) -> bool {
        self.vertex_count() == other.vertex_count()
            && self.edge_count() == other.edge_count()
            && self.canonical_code() == other.canonical_code()
    }

    /// Does `self` occur as an induced subgraph of `host`?
    pub fn embeds_induced_in(&self, host: &Graph) -> bool {
        let n = self.vertex_count();
        if n > host.vertex_count() || self.edge_count() > host.edge_count() {
            return false;
        }
        let small = self.local_rows();
        let big = host.local_rows();
        let mut used = vec![false; big.len()];
        let mut map = Vec::with_capacity(n);
        fn extend(
            small: &[BitSet],
            big: &[BitSet],
            used: &mut [bool],
            map: &mut Vec<usize>,
        ) -> bool {
            let i = map.len();
            if i == small.len() {
                return true;
            }
            for h in 0..big.len() {
                if used[h] || big[h].count() < small[i].count() {
                    continue;
                }
                let ok = (0..i).all(|k| small[i].contains(k) == big[h].contains(map[k]));
                if ok {
                    used[h] = true;
                    map.push(h);
                    if extend(small, big, used, map) {
                        return true;
                    }
                    map.pop();
                    used[h] = false;
                }
            }
            false
        }
        extend(&small, &big, &mut used, &mut map)
    }

    pub fn to_dot(&self, name: &str, label: impl Fn(usize) -> String) -> String {
        let mut s = format!("graph \"{name}\" {{\n");
        for &v in &self.vertices {
            s.push_str(&format!("  n{v} [label=\"{}\"];\n", label(v)));
        }
        for &(u, v) in &self.edges {
            s.push_str(&format!("  n{u} -- n{v};\n"));
        }
        s.push_str("}\n");
        s
    }
}

/// Plain isomorphism test by refinement and backtracking.
pub fn graphs_isomorphic(g1: &Graph, g2: &Graph) -> bool {
    g1.is_isomorphic(g2)
}

pub fn induced_subgraph(g: &Graph, keep: &[usize]) -> Graph {
    g.induced_subgraph(keep)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relabeled_graph_is_isomorphic() {
        let c5 = Graph::cycle(5);
        let other = Graph::new((0..5).collect(), [(0, 2), (2, 1), (1, 4), (4, 3), (3, 0)]);
        assert!(graphs_isomorphic(&c5, &other));
        assert!(!graphs_isomorphic(&c5, &Graph::path(5)));
        let shifted = c5.map_vertices(|v| v + 10);
        assert!(graphs_isomorphic(&c5, &shifted));
    }

    #[test]
    fn same_degree_sequence_not_isomorphic() {
        // C6 versus two disjoint triangles.
        let two_triangles = Graph::new((0..6).collect(), [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]);
        assert!(!graphs_isomorphic(&Graph::cycle(6), &two_triangles));
    }

    #[test]
    fn induced_subgraphs() {
        let c5 = Graph::cycle(5);
        let sub = induced_subgraph(&c5, &[0, 1, 2]);
        assert!(graphs_isomorphic(&sub, &Graph::path(3)));
        assert!(Graph::path(4).embeds_induced_in(&c5));
        assert!(!Graph::complete(3).embeds_induced_in(&c5));
        assert!(!Graph::path(5).embeds_induced_in(&c5));
    }
}
