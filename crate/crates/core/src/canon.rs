//! Canonical labeling of small relational structures.
//!
//! Colour refinement followed by individualisation and backtracking. The
//! canonical code is the lexicographically least relation matrix over all
//! leaves of the search tree; branches that are images of explored ones
//! under automorphisms found along the way are skipped.

use crate::bits::BitSet;
use crate::poset::Poset;

/// A canonical labeling: `perm[v]` is the new index of vertex `v`.
#[derive(Clone, Debug)]
pub struct Labeling {
    pub perm: Vec<usize>,
    pub code: Vec<u64>,
}

struct Search<'a> {
    n: usize,
    out: &'a [BitSet],
    inn: &'a [BitSet],
    init: &'a [u64],
    best: Option<(Vec<u64>, Vec<usize>)>,
    automorphisms: Vec<Vec<usize>>,
}

/// Canonical labeling of a directed structure given by out- and
/// in-neighbourhood rows plus an initial vertex colouring. For undirected
/// graphs pass the adjacency rows twice.
pub fn canonical_labeling(out: &[BitSet], inn: &[BitSet], init: &[u64]) -> Labeling {
    let n = out.len();
    assert_eq!(inn.len(), n);
    assert_eq!(init.len(), n);
    if n == 0 {
        return Labeling {
            perm: Vec::new(),
            code: vec![0],
        };
    }
    let mut s = Search {
        n,
        out,
        inn,
        init,
        best: None,
        automorphisms: Vec::new(),
    };
    let colors = rank(init);
    let colors = s.refine(colors);
    let mut prefix = Vec::new();
    s.search(colors, &mut prefix);
    let (code, perm) = s.best.expect("search visits at least one leaf");
    Labeling { perm, code }
}

fn rank<T: Ord + Clone>(keys: &[T]) -> Vec<u32> {
    let mut sorted: Vec<T> = keys.to_vec();
    sorted.sort();
    sorted.dedup();
    keys.iter()
        .map(|k| sorted.binary_search(k).expect("key present") as u32)
        .collect()
}

fn distinct(colors: &[u32]) -> usize {
    colors.iter().copied().max().map_or(0, |m| m as usize + 1)
}

impl Search<'_> {
    fn refine(&self, mut colors: Vec<u32>) -> Vec<u32> {
        loop {
            let k = distinct(&colors);
            if k == self.n {
                return colors;
            }
            let sigs: Vec<Vec<u32>> = (0..self.n)
                .map(|v| {
                    let mut sig = vec![0u32; 1 + 2 * k];
                    sig[0] = colors[v];
                    for u in self.out[v].iter() {
                        sig[1 + colors[u] as usize] += 1;
                    }
                    for u in self.inn[v].iter() {
                        sig[1 + k + colors[u] as usize] += 1;
                    }
                    sig
                })
                .collect();
            let next = rank(&sigs);
            if distinct(&next) == k {
                return colors;
            }
            colors = next;
        }
    }

    fn search(&mut self, colors: Vec<u32>, prefix: &mut Vec<usize>) {
        let k = distinct(&colors);
        if k == self.n {
            self.leaf(&colors);
            return;
        }
        let mut size = vec![0usize; k];
        for &c in &colors {
            size[c as usize] += 1;
        }
        let target = (0..k).find(|&c| size[c] > 1).expect("non-discrete") as u32;
        let cell: Vec<usize> = (0..self.n).filter(|&v| colors[v] == target).collect();
        let mut explored: Vec<usize> = Vec::new();
        for &v in &cell {
            if !explored.is_empty() && self.equivalent_to_explored(v, &explored, prefix) {
                continue;
            }
            let child: Vec<u32> = colors
                .iter()
                .enumerate()
                .map(|(u, &c)| if u == v { 2 * c } else { 2 * c + 1 })
                .collect();
            let child = self.refine(rank(&child));
            prefix.push(v);
            self.search(child, prefix);
            prefix.pop();
            explored.push(v);
        }
    }

    /// Is `v` in the orbit of an explored vertex under the group generated by
    /// the known automorphisms that fix `prefix` pointwise?
    fn equivalent_to_explored(&self, v: usize, explored: &[usize], prefix: &[usize]) -> bool {
        let gens: Vec<&Vec<usize>> = self
            .automorphisms
            .iter()
            .filter(|g| prefix.iter().all(|&p| g[p] == p))
            .collect();
        if gens.is_empty() {
            return false;
        }
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for g in gens {
            for (x, &gx) in g.iter().enumerate() {
                let (a, b) = (find(&mut parent, x), find(&mut parent, gx));
                if a != b {
                    parent[a] = b;
                }
            }
        }
        let rv = find(&mut parent, v);
        explored.iter().any(|&e| find(&mut parent, e) == rv)
    }

    fn leaf(&mut self, colors: &[u32]) {
        let perm: Vec<usize> = colors.iter().map(|&c| c as usize).collect();
        let mut inv = vec![0usize; self.n];
        for (v, &p) in perm.iter().enumerate() {
            inv[p] = v;
        }
        let words = self.n.div_ceil(64);
        let mut code = Vec::with_capacity(1 + self.n * (words + 1));
        code.push(self.n as u64);
        for &v in &inv {
            code.push(self.init[v]);
        }
        for &v in &inv {
            let mut row = vec![0u64; words];
            for u in self.out[v].iter() {
                let p = perm[u];
                row[p / 64] |= 1 << (p % 64);
            }
            code.extend_from_slice(&row);
        }
        match &self.best {
            None => self.best = Some((code, perm)),
            Some((best_code, best_perm)) => {
                if code < *best_code {
                    self.best = Some((code, perm));
                } else if code == *best_code {
                    let mut best_inv = vec![0usize; self.n];
                    for (v, &p) in best_perm.iter().enumerate() {
                        best_inv[p] = v;
                    }
                    let gamma: Vec<usize> = perm.iter().map(|&p| best_inv[p]).collect();
                    if gamma.iter().enumerate().any(|(i, &g)| i != g) {
                        self.automorphisms.push(gamma);
                    }
                }
            }
        }
    }
}

/// Canonical byte string of a poset: equal strings exactly for isomorphic
/// posets. Initial colours are (lower covers, upper covers, up-set size,
/// down-set size).
pub fn poset_canonical_form(p: &Poset) -> Vec<u8> {
    let lab = poset_labeling(p, None);
    let mut bytes = Vec::with_capacity(lab.code.len() * 8);
    for w in lab.code {
        bytes.extend_from_slice(&w.to_le_bytes());
    }
    bytes
}

pub(crate) fn poset_labeling(p: &Poset, extra_colors: Option<&[u64]>) -> Labeling {
    let n = p.len();
    let out: Vec<BitSet> = (0..n).map(|x| p.up_set(x).clone()).collect();
    let inn: Vec<BitSet> = (0..n).map(|x| p.down_set(x).clone()).collect();
    let keys: Vec<(u64, usize, usize, usize, usize)> = (0..n)
        .map(|x| {
            (
                extra_colors.map_or(0, |c| c[x]),
                p.lower_covers(x).len(),
                p.upper_covers(x).len(),
                out[x].count(),
                inn[x].count(),
            )
        })
        .collect();
    let init: Vec<u64> = rank(&keys).into_iter().map(u64::from).collect();
    canonical_labeling(&out, &inn, &init)
}

impl Poset {
    pub fn canonical_form(&self) -> Vec<u8> {
        poset_canonical_form(self)
    }

    pub fn is_isomorphic(&self, other: &Poset) -> bool {
        self.len() == other.len() && self.canonical_form() == other.canonical_form()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_relabelings_agree(p: &Poset) {
        let n = p.len();
        let base = p.canonical_form();
        // Rotate ids and reverse them; both are relabelings.
        for shift in 0..n {
            let map: Vec<usize> = (0..n).map(|x| (x + shift) % n).collect();
            let q = Poset::from_relation(n, |x, y| {
                let (xi, yi) = (
                    map.iter().position(|&m| m == x).unwrap(),
                    map.iter().position(|&m| m == y).unwrap(),
                );
                p.leq(xi, yi)
            })
            .unwrap();
            assert_eq!(q.canonical_form(), base);
        }
    }

    #[test]
    fn boolean_relabeling() {
        let b2a = Poset::from_covers(4, &[(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap();
        let b2b = Poset::from_covers(4, &[(3, 0), (3, 2), (0, 1), (2, 1)]).unwrap();
        assert_eq!(b2a.canonical_form(), b2b.canonical_form());
        all_relabelings_agree(&b2a);
    }

    #[test]
    fn chain_vs_antichain() {
        let c = Poset::from_covers(3, &[(0, 1), (1, 2)]).unwrap();
        let a = Poset::from_covers(3, &[]).unwrap();
        assert_ne!(c.canonical_form(), a.canonical_form());
    }

    #[test]
    fn symmetric_structures_terminate() {
        let a = Poset::from_covers(8, &[]).unwrap();
        let lab = poset_labeling(&a, None);
        assert_eq!(lab.perm.len(), 8);
        // Boolean lattice B_5 has 120 automorphisms.
        let n = 32;
        let b5 = Poset::from_relation(n, |x, y| x & y == x).unwrap();
        all_relabelings_agree(&b5);
    }
}
