//! Finite posets stored as bit-packed order matrices.

use serde::Serialize;

use crate::bits::BitSet;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// A finite partial order on the dense ids `0..n`.
///
/// Both the up-set row (`x ≤ ·`) and the down-set row (`· ≤ x`) of every
/// element are kept, together with the cover relation, so that comparability
/// tests and cover scans are single bit lookups.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poset {
    n: usize,
    up: Vec<BitSet>,
    down: Vec<BitSet>,
    lower: Vec<Vec<usize>>,
    upper: Vec<Vec<usize>>,
    linear: Vec<usize>,
    labels: Option<Vec<String>>,
}

/// A set of pairwise incomparable elements, kept sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Antichain(Vec<usize>);

impl Antichain {
    pub fn empty() -> Self {
        Antichain(Vec::new())
    }

    /// Builds an antichain after checking incomparability in `p`.
    pub fn new(p: &Poset, mut elements: Vec<usize>) -> Result<Self> {
        elements.sort_unstable();
        elements.dedup();
        for &x in &elements {
            p.check(x)?;
        }
        for (i, &x) in elements.iter().enumerate() {
            for &y in &elements[i + 1..] {
                if p.comparable(x, y) {
                    return Err(Error::NotAnAntichain { x, y });
                }
            }
        }
        Ok(Antichain(elements))
    }

    pub fn elements(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl Poset {
    /// Reflexive-transitive closure of a cover list.
    pub fn from_covers(n: usize, covers: &[(usize, usize)]) -> Result<Self> {
        let mut up: Vec<BitSet> = (0..n)
            .map(|x| BitSet::from_iter_with_len(n, [x]))
            .collect();
        for &(l, u) in covers {
            if l >= n {
                return Err(Error::OutOfRange { element: l, n });
            }
            if u >= n {
                return Err(Error::OutOfRange { element: u, n });
            }
            up[l].insert(u);
        }
        Self::close(up)
    }

    /// Poset generated by an arbitrary relation `rel(x, y)` meaning `x ≤ y`.
    pub fn from_relation(n: usize, rel: impl Fn(usize, usize) -> bool) -> Result<Self> {
        let up = (0..n)
            .map(|x| BitSet::from_iter_with_len(n, (0..n).filter(|&y| x == y || rel(x, y))))
            .collect();
        Self::close(up)
    }

    fn close(mut up: Vec<BitSet>) -> Result<Self> {
        let n = up.len();
        // Warshall on bit rows.
        for k in 0..n {
            let row_k = up[k].clone();
            for row in up.iter_mut() {
                if row.contains(k) {
                    row.union_with(&row_k);
                }
            }
        }
        for x in 0..n {
            for y in up[x].iter() {
                if y != x && up[y].contains(x) {
                    return Err(Error::CycleDetected {
                        x: x.min(y),
                        y: x.max(y),
                    });
                }
            }
        }
        Ok(Self::from_up_rows(up))
    }

    /// Builds from rows that are already a reflexive, transitive,
    /// antisymmetric relation. Constructions that produce orders by
    /// definition go through here.
    pub(crate) fn from_up_rows(up: Vec<BitSet>) -> Self {
        let n = up.len();
        let mut down: Vec<BitSet> = (0..n).map(|_| BitSet::new(n)).collect();
        for (x, row) in up.iter().enumerate() {
            for y in row.iter() {
                down[y].insert(x);
            }
        }
        let mut lower = vec![Vec::new(); n];
        let mut upper = vec![Vec::new(); n];
        for x in 0..n {
            let mut strict = up[x].clone();
            strict.remove(x);
            let mut covers = strict.clone();
            for z in strict.iter() {
                let mut above_z = up[z].clone();
                above_z.remove(z);
                covers.difference_with(&above_z);
            }
            for y in covers.iter() {
                upper[x].push(y);
                lower[y].push(x);
            }
        }
        for l in lower.iter_mut() {
            l.sort_unstable();
        }
        let mut linear: Vec<usize> = (0..n).collect();
        linear.sort_by_key(|&x| down[x].count());
        let p = Poset {
            n,
            up,
            down,
            lower,
            upper,
            linear,
            labels: None,
        };
        debug_assert!(p.satisfies_axioms());
        p
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.n, "one label per element");
        self.labels = Some(labels);
        self
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Display name of `x`: its label if any, else the id.
    pub fn label(&self, x: usize) -> String {
        match &self.labels {
            Some(l) => l[x].clone(),
            None => x.to_string(),
        }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub(crate) fn check(&self, x: usize) -> Result<()> {
        if x < self.n {
            Ok(())
        } else {
            Err(Error::OutOfRange {
                element: x,
                n: self.n,
            })
        }
    }

    #[inline]
    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.up[x].contains(y)
    }

    #[inline]
    pub fn lt(&self, x: usize, y: usize) -> bool {
        x != y && self.up[x].contains(y)
    }

    #[inline]
    pub fn comparable(&self, x: usize, y: usize) -> bool {
        self.up[x].contains(y) || self.up[y].contains(x)
    }

    /// `{y : x ≤ y}`
    pub fn up_set(&self, x: usize) -> &BitSet {
        &self.up[x]
    }

    /// `{y : y ≤ x}`
    pub fn down_set(&self, x: usize) -> &BitSet {
        &self.down[x]
    }

    pub fn lower_covers(&self, x: usize) -> &[usize] {
        &self.lower[x]
    }

    pub fn upper_covers(&self, x: usize) -> &[usize] {
        &self.upper[x]
    }

    pub fn covers_pair(&self, lower: usize, upper: usize) -> bool {
        self.upper[lower].contains(&upper)
    }

    /// All cover pairs `(x, y)` with `x ⋖ y`, sorted.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = (0..self.n)
            .flat_map(|x| self.upper[x].iter().map(move |&y| (x, y)))
            .collect();
        out.sort_unstable();
        out
    }

    /// Elements listed so that `x < y` implies `x` comes first.
    pub fn linear_extension(&self) -> &[usize] {
        &self.linear
    }

    /// Closed interval `[x, y]` as a bit set (empty when `x ≰ y`).
    pub fn interval(&self, x: usize, y: usize) -> BitSet {
        self.up[x].intersection(&self.down[y])
    }

    pub fn minimal_elements(&self, set: &BitSet) -> Vec<usize> {
        set.iter()
            .filter(|&x| self.down[x].intersection_count(set) == 1)
            .collect()
    }

    pub fn maximal_elements(&self, set: &BitSet) -> Vec<usize> {
        set.iter()
            .filter(|&x| self.up[x].intersection_count(set) == 1)
            .collect()
    }

    /// Direct matrix check of reflexivity, antisymmetry and transitivity.
    pub fn satisfies_axioms(&self) -> bool {
        for x in 0..self.n {
            if !self.leq(x, x) {
                return false;
            }
            for y in 0..self.n {
                if x != y && self.leq(x, y) && self.leq(y, x) {
                    return false;
                }
                if self.leq(x, y) && !self.up[y].is_subset(&self.up[x]) {
                    return false;
                }
            }
        }
        true
    }

    /// The order with every relation reversed. Ids are unchanged.
    pub fn dual(&self) -> Poset {
        let mut linear = self.linear.clone();
        linear.reverse();
        Poset {
            n: self.n,
            up: self.down.clone(),
            down: self.up.clone(),
            lower: self.upper.clone(),
            upper: self.lower.clone(),
            linear,
            labels: self.labels.clone(),
        }
    }

    /// Subposet induced on `elements`, renumbered in the given order.
    pub fn induced(&self, elements: &[usize]) -> Poset {
        let m = elements.len();
        let up = elements
            .iter()
            .map(|&x| {
                BitSet::from_iter_with_len(
                    m,
                    elements
                        .iter()
                        .enumerate()
                        .filter(|&(_, &y)| self.leq(x, y))
                        .map(|(i, _)| i),
                )
            })
            .collect();
        let p = Poset::from_up_rows(up);
        match &self.labels {
            Some(l) => p.with_labels(elements.iter().map(|&x| l[x].clone()).collect()),
            None => p,
        }
    }

    /// Möbius values `μ(x, ·)` for a fixed source, `None` off the up-set.
    pub fn mobius_row(&self, x: usize) -> Vec<Option<i64>> {
        let mut row: Vec<Option<i64>> = vec![None; self.n];
        for &y in &self.linear {
            if !self.leq(x, y) {
                continue;
            }
            if y == x {
                row[y] = Some(1);
                continue;
            }
            let mut s = 0i64;
            for z in self.interval(x, y).iter() {
                if z != y {
                    s += row[z].expect("linear extension visits lower elements first");
                }
            }
            row[y] = Some(-s);
        }
        row
    }

    pub fn mobius(&self, x: usize, y: usize) -> Result<i64> {
        self.check(x)?;
        self.check(y)?;
        if !self.leq(x, y) {
            return Err(Error::NotComparable { x, y });
        }
        Ok(self.mobius_row(x)[y].expect("y is above x"))
    }

    /// Every antichain, the empty one first; members sorted, list in
    /// lexicographic order of the member sequences.
    pub fn antichains(&self) -> Vec<Antichain> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        self.antichains_rec(0, &mut cur, &mut out);
        out
    }

    fn antichains_rec(&self, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Antichain>) {
        out.push(Antichain(cur.clone()));
        for x in start..self.n {
            if cur.iter().all(|&c| !self.comparable(c, x)) {
                cur.push(x);
                self.antichains_rec(x + 1, cur, out);
                cur.pop();
            }
        }
    }

    /// `I_A`: the order ideal whose maximal elements are `A`.
    pub fn ideal_of(&self, a: &Antichain) -> BitSet {
        let mut s = BitSet::new(self.n);
        for &x in a.elements() {
            s.union_with(&self.down[x]);
        }
        s
    }

    /// `I^A`: the order ideal whose complement has minimal elements `A`.
    pub fn ideal_above(&self, a: &Antichain) -> BitSet {
        let mut s = BitSet::full(self.n);
        for &x in a.elements() {
            s.difference_with(&self.up[x]);
        }
        s
    }

    /// Maximal elements of an ideal, i.e. the antichain generating it.
    pub fn ideal_maximals(&self, ideal: &BitSet) -> Antichain {
        Antichain(self.maximal_elements(ideal))
    }

    /// Minimal elements of the complement of an ideal.
    pub fn co_ideal_minimals(&self, ideal: &BitSet) -> Antichain {
        let mut rest = BitSet::full(self.n);
        rest.difference_with(ideal);
        Antichain(self.minimal_elements(&rest))
    }

    /// Rowmotion: minimal elements outside the ideal generated by `a`.
    pub fn rowmotion(&self, a: &Antichain) -> Result<Antichain> {
        let checked = Antichain::new(self, a.0.clone())?;
        Ok(self.co_ideal_minimals(&self.ideal_of(&checked)))
    }

    pub fn incomparability_graph(&self) -> Graph {
        let mut edges = Vec::new();
        for x in 0..self.n {
            for y in x + 1..self.n {
                if !self.comparable(x, y) {
                    edges.push((x, y));
                }
            }
        }
        Graph::new((0..self.n).collect(), edges)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diamond() -> Poset {
        Poset::from_covers(4, &[(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap()
    }

    #[test]
    fn closure_and_cycles() {
        let c2 = Poset::from_covers(2, &[(0, 1)]).unwrap();
        assert!(c2.leq(0, 1) && !c2.leq(1, 0));
        let c3 = Poset::from_covers(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(c3.leq(0, 2));
        assert_eq!(
            Poset::from_covers(2, &[(0, 1), (1, 0)]),
            Err(Error::CycleDetected { x: 0, y: 1 })
        );
        assert!(matches!(
            Poset::from_covers(2, &[(0, 5)]),
            Err(Error::OutOfRange { element: 5, .. })
        ));
    }

    #[test]
    fn covers_of_small_posets() {
        assert_eq!(diamond().covers().len(), 4);
        let c3 = Poset::from_covers(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(c3.covers(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn mobius_values() {
        let d = diamond();
        assert_eq!(d.mobius(0, 0), Ok(1));
        assert_eq!(d.mobius(0, 1), Ok(-1));
        assert_eq!(d.mobius(0, 3), Ok(1));
        assert_eq!(d.mobius(1, 2), Err(Error::NotComparable { x: 1, y: 2 }));
    }

    #[test]
    fn antichains_and_rowmotion() {
        let anti2 = Poset::from_covers(2, &[]).unwrap();
        assert_eq!(anti2.antichains().len(), 4);
        let c3 = Poset::from_covers(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(c3.antichains().len(), 4);
        // Row(∅) = minimal elements.
        assert_eq!(
            c3.rowmotion(&Antichain::empty()).unwrap().elements(),
            &[0]
        );
        // Row({top of chain}) = ∅.
        let top = Antichain::new(&c3, vec![2]).unwrap();
        assert!(c3.rowmotion(&top).unwrap().is_empty());
        assert_eq!(
            c3.rowmotion(&Antichain(vec![0, 2])),
            Err(Error::NotAnAntichain { x: 0, y: 2 })
        );
    }

    #[test]
    fn ideals_match_rowmotion() {
        let d = diamond();
        for a in d.antichains() {
            let row = d.rowmotion(&a).unwrap();
            assert_eq!(d.ideal_of(&a), d.ideal_above(&row));
        }
    }

    #[test]
    fn incomparability_graph_of_small_posets() {
        let c3 = Poset::from_covers(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(c3.incomparability_graph().edge_count(), 0);
        let a3 = Poset::from_covers(3, &[]).unwrap();
        assert_eq!(a3.incomparability_graph().edge_count(), 3);
        // 2-chain plus a point: the point is incomparable to both.
        let p = Poset::from_covers(3, &[(0, 1)]).unwrap();
        let g = p.incomparability_graph();
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 2), (1, 2)]);
    }

    #[test]
    fn dual_swaps_rows() {
        let c3 = Poset::from_covers(3, &[(0, 1), (1, 2)]).unwrap();
        let d = c3.dual();
        assert!(d.leq(2, 0));
        assert_eq!(d.lower_covers(0), &[1]);
    }
}
