//! Lattices: join/meet tables, irreducibles, the cover labelling η,
//! canonical join and meet representations, semidistributivity and the
//! κ maps.
//!
//! Every algorithm is written once against a [`View`] of the lattice; the
//! meet-side operation is the join-side one run on the order dual, with the
//! same element ids.

use std::sync::OnceLock;

use serde::Serialize;

use crate::bits::BitSet;
use crate::error::{Bound, Error, Result};
use crate::poset::Poset;

/// A finite lattice on the ids `0..n`.
#[derive(Clone, Debug)]
pub struct Lattice {
    poset: Poset,
    join: Vec<u32>,
    meet: Vec<u32>,
    bottom: usize,
    top: usize,
    jirr: Vec<usize>,
    mirr: Vec<usize>,
    sd_cache: [OnceLock<Option<Triple>>; 2],
}

impl PartialEq for Lattice {
    fn eq(&self, other: &Self) -> bool {
        self.poset == other.poset
    }
}

impl Eq for Lattice {}

/// A triple `(x, y, z)` violating a semidistributive law.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Triple {
    pub x: usize,
    pub y: usize,
    pub z: usize,
}

/// Join or meet side of a lattice.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    Join,
    Meet,
}

impl Side {
    fn idx(self) -> usize {
        match self {
            Side::Join => 0,
            Side::Meet => 1,
        }
    }
}

/// A canonical join representation `⋁ joinands = target`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct JoinRep {
    pub target: usize,
    pub joinands: Vec<usize>,
}

/// A canonical meet representation `⋀ meetands = target`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct MeetRep {
    pub target: usize,
    pub meetands: Vec<usize>,
}

/// Result of the cover labelling: the minimal elements `x` with `x ∨ y = w`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Eta {
    Unique(usize),
    NonUnique(Vec<usize>),
}

/// Upper limit on antichains visited by the exhaustive oracle.
pub const ORACLE_GUARD: usize = 1 << 20;

/// Join-side view of a lattice or of its order dual.
#[derive(Clone, Copy)]
pub(crate) struct View<'a> {
    l: &'a Lattice,
    side: Side,
}

impl<'a> View<'a> {
    #[inline]
    fn n(&self) -> usize {
        self.l.len()
    }

    #[inline]
    fn leq(&self, x: usize, y: usize) -> bool {
        match self.side {
            Side::Join => self.l.poset.leq(x, y),
            Side::Meet => self.l.poset.leq(y, x),
        }
    }

    #[inline]
    fn join(&self, x: usize, y: usize) -> usize {
        match self.side {
            Side::Join => self.l.join(x, y),
            Side::Meet => self.l.meet(x, y),
        }
    }

    #[inline]
    fn meet(&self, x: usize, y: usize) -> usize {
        match self.side {
            Side::Join => self.l.meet(x, y),
            Side::Meet => self.l.join(x, y),
        }
    }

    fn bottom(&self) -> usize {
        match self.side {
            Side::Join => self.l.bottom,
            Side::Meet => self.l.top,
        }
    }

    fn down_set(&self, x: usize) -> &'a BitSet {
        match self.side {
            Side::Join => self.l.poset.down_set(x),
            Side::Meet => self.l.poset.up_set(x),
        }
    }

    fn up_set(&self, x: usize) -> &'a BitSet {
        match self.side {
            Side::Join => self.l.poset.up_set(x),
            Side::Meet => self.l.poset.down_set(x),
        }
    }

    fn lower_covers(&self, x: usize) -> &'a [usize] {
        match self.side {
            Side::Join => self.l.poset.lower_covers(x),
            Side::Meet => self.l.poset.upper_covers(x),
        }
    }

    fn join_all(&self, xs: impl IntoIterator<Item = usize>) -> usize {
        xs.into_iter().fold(self.bottom(), |acc, x| self.join(acc, x))
    }

    fn minimal(&self, set: &BitSet) -> Vec<usize> {
        set.iter()
            .filter(|&x| self.down_set(x).intersection_count(set) == 1)
            .collect()
    }

    fn maximal(&self, set: &BitSet) -> Vec<usize> {
        set.iter()
            .filter(|&x| self.up_set(x).intersection_count(set) == 1)
            .collect()
    }

    fn eta(&self, w: usize, y: usize) -> Eta {
        let cands = BitSet::from_iter_with_len(
            self.n(),
            self.down_set(w).iter().filter(|&x| self.join(x, y) == w),
        );
        let mins = self.minimal(&cands);
        if mins.len() == 1 {
            Eta::Unique(mins[0])
        } else {
            Eta::NonUnique(mins)
        }
    }

    fn is_irredundant(&self, parts: &[usize], w: usize) -> bool {
        (0..parts.len()).all(|skip| {
            self.join_all(
                parts
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| i != skip)
                    .map(|(_, &p)| p),
            ) != w
        })
    }

    fn canonical_rep(&self, w: usize) -> Option<Vec<usize>> {
        if w == self.bottom() {
            return Some(Vec::new());
        }
        let mut parts = Vec::with_capacity(self.lower_covers(w).len());
        for &y in self.lower_covers(w) {
            match self.eta(w, y) {
                Eta::Unique(x) => parts.push(x),
                Eta::NonUnique(_) => return None,
            }
        }
        parts.sort_unstable();
        parts.dedup();
        let established = matches!(self.l.sd_cache[self.side.idx()].get(), Some(None));
        if !established && (self.join_all(parts.iter().copied()) != w || !self.is_irredundant(&parts, w)) {
            return None;
        }
        Some(parts)
    }

    /// All irredundant representations of `w`, found by visiting every
    /// antichain below `w`.
    fn irredundant_reps(&self, w: usize) -> Result<Vec<Vec<usize>>> {
        let cands: Vec<usize> = self.down_set(w).iter().collect();
        let mut out = Vec::new();
        let mut cur = Vec::new();
        let mut visited = 0usize;
        self.ijr_rec(w, &cands, 0, &mut cur, &mut out, &mut visited)?;
        Ok(out)
    }

    fn ijr_rec(
        &self,
        w: usize,
        cands: &[usize],
        start: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
        visited: &mut usize,
    ) -> Result<()> {
        *visited += 1;
        if *visited > ORACLE_GUARD {
            return Err(Error::TooLarge {
                limit: ORACLE_GUARD,
            });
        }
        if self.join_all(cur.iter().copied()) == w && self.is_irredundant(cur, w) {
            out.push(cur.clone());
        }
        for i in start..cands.len() {
            let c = cands[i];
            if cur.iter().all(|&x| !self.leq(x, c) && !self.leq(c, x)) {
                cur.push(c);
                self.ijr_rec(w, cands, i + 1, cur, out, visited)?;
                cur.pop();
            }
        }
        Ok(())
    }

    fn refines(&self, a: &[usize], b: &[usize]) -> bool {
        a.iter().all(|&x| b.iter().any(|&y| self.leq(x, y)))
    }

    fn canonical_rep_oracle(&self, w: usize) -> Result<Option<Vec<usize>>> {
        let reps = self.irredundant_reps(w)?;
        let minimal: Vec<&Vec<usize>> = reps
            .iter()
            .filter(|a| !reps.iter().any(|b| b != *a && self.refines(b, a)))
            .collect();
        Ok(match minimal.as_slice() {
            [only] => Some((*only).clone()),
            _ => None,
        })
    }

    fn sd_witness(&self) -> Option<Triple> {
        let n = self.n();
        let p = &self.l.poset;
        for x in 0..n {
            for y in 0..n {
                for z in y + 1..n {
                    if p.comparable(y, z) {
                        continue;
                    }
                    let xy = self.join(x, y);
                    if xy == self.join(x, z) && self.join(x, self.meet(y, z)) != xy {
                        return Some(Triple { x, y, z });
                    }
                }
            }
        }
        None
    }

    /// Local test: only pairs `y, z` with a common upper cover (in this
    /// view) are examined.
    fn sd_witness_local(&self) -> Option<Triple> {
        let n = self.n();
        for c in 0..n {
            let lc = self.lower_covers(c);
            for (i, &y) in lc.iter().enumerate() {
                for &z in &lc[i + 1..] {
                    for x in 0..n {
                        let xy = self.join(x, y);
                        if xy == self.join(x, z) && self.join(x, self.meet(y, z)) != xy {
                            return Some(Triple { x, y, z });
                        }
                    }
                }
            }
        }
        None
    }

    fn sd_by_covers(&self) -> bool {
        (0..self.n()).all(|w| {
            self.lower_covers(w)
                .iter()
                .all(|&y| matches!(self.eta(w, y), Eta::Unique(_)))
        })
    }

    fn lower_star(&self, j: usize) -> Option<usize> {
        match self.lower_covers(j) {
            [only] => Some(*only),
            _ => None,
        }
    }

    fn kappa(&self, j: usize) -> Option<usize> {
        let js = self.lower_star(j).expect("caller checks irreducibility");
        let mut k = self.up_set(js).clone();
        k.difference_with(self.up_set(j));
        match self.maximal(&k).as_slice() {
            [only] => Some(*only),
            _ => None,
        }
    }
}

impl Lattice {
    /// Fills the join and meet tables, rejecting posets in which some pair
    /// has no least upper or greatest lower bound.
    pub fn from_poset(poset: Poset) -> Result<Lattice> {
        let n = poset.len();
        if n == 0 {
            return Err(Error::PreconditionViolated {
                reason: "the empty poset is not a lattice".into(),
            });
        }
        let mut join = vec![0u32; n * n];
        let mut meet = vec![0u32; n * n];
        for x in 0..n {
            for y in x..n {
                let ub = poset.up_set(x).intersection(poset.up_set(y));
                let j = least(&poset, &ub).ok_or(Error::NotALattice {
                    x,
                    y,
                    bound: Bound::Join,
                })?;
                let lb = poset.down_set(x).intersection(poset.down_set(y));
                let m = greatest(&poset, &lb).ok_or(Error::NotALattice {
                    x,
                    y,
                    bound: Bound::Meet,
                })?;
                join[x * n + y] = j as u32;
                join[y * n + x] = j as u32;
                meet[x * n + y] = m as u32;
                meet[y * n + x] = m as u32;
            }
        }
        Ok(Self::from_tables(poset, join, meet))
    }

    pub(crate) fn from_tables(poset: Poset, join: Vec<u32>, meet: Vec<u32>) -> Lattice {
        let n = poset.len();
        let all = BitSet::full(n);
        let bottom = poset.minimal_elements(&all)[0];
        let top = poset.maximal_elements(&all)[0];
        let jirr = (0..n).filter(|&x| poset.lower_covers(x).len() == 1).collect();
        let mirr = (0..n).filter(|&x| poset.upper_covers(x).len() == 1).collect();
        Lattice {
            poset,
            join,
            meet,
            bottom,
            top,
            jirr,
            mirr,
            sd_cache: Default::default(),
        }
    }

    pub fn from_covers(n: usize, covers: &[(usize, usize)]) -> Result<Lattice> {
        Lattice::from_poset(Poset::from_covers(n, covers)?)
    }

    /// First element carrying `label`.
    pub fn element_by_label(&self, label: &str) -> Option<usize> {
        self.poset.labels()?.iter().position(|l| l == label)
    }

    pub(crate) fn view(&self, side: Side) -> View<'_> {
        View { l: self, side }
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn len(&self) -> usize {
        self.poset.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn label(&self, x: usize) -> String {
        self.poset.label(x)
    }

    pub fn with_labels(self, labels: Vec<String>) -> Lattice {
        let Lattice {
            poset, join, meet, ..
        } = self;
        Lattice::from_tables(poset.with_labels(labels), join, meet)
    }

    #[inline]
    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.poset.leq(x, y)
    }

    #[inline]
    pub fn join(&self, x: usize, y: usize) -> usize {
        self.join[x * self.len() + y] as usize
    }

    #[inline]
    pub fn meet(&self, x: usize, y: usize) -> usize {
        self.meet[x * self.len() + y] as usize
    }

    /// `⋁A`; the empty join is the bottom element.
    pub fn join_set(&self, a: impl IntoIterator<Item = usize>) -> usize {
        a.into_iter().fold(self.bottom, |acc, x| self.join(acc, x))
    }

    /// `⋀A`; the empty meet is the top element.
    pub fn meet_set(&self, a: impl IntoIterator<Item = usize>) -> usize {
        a.into_iter().fold(self.top, |acc, x| self.meet(acc, x))
    }

    pub fn join_irreducibles(&self) -> &[usize] {
        &self.jirr
    }

    pub fn meet_irreducibles(&self) -> &[usize] {
        &self.mirr
    }

    pub fn is_join_irreducible(&self, x: usize) -> bool {
        self.poset.lower_covers(x).len() == 1
    }

    pub fn is_meet_irreducible(&self, x: usize) -> bool {
        self.poset.upper_covers(x).len() == 1
    }

    /// `j_*`, the unique lower cover of a join-irreducible.
    pub fn lower_star(&self, j: usize) -> Result<usize> {
        self.poset.check(j)?;
        self.view(Side::Join)
            .lower_star(j)
            .ok_or(Error::NotJoinIrreducible { element: j })
    }

    /// `m^*`, the unique upper cover of a meet-irreducible.
    pub fn upper_star(&self, m: usize) -> Result<usize> {
        self.poset.check(m)?;
        self.view(Side::Meet)
            .lower_star(m)
            .ok_or(Error::NotMeetIrreducible { element: m })
    }

    /// Upper covers of `x` lying below `y`.
    pub fn atoms_of_interval(&self, x: usize, y: usize) -> Vec<usize> {
        self.poset
            .upper_covers(x)
            .iter()
            .copied()
            .filter(|&a| self.leq(a, y))
            .collect()
    }

    /// The order dual, keeping ids.
    pub fn dual(&self) -> Lattice {
        Lattice::from_tables(self.poset.dual(), self.meet.clone(), self.join.clone())
    }

    pub fn canonical_form(&self) -> Vec<u8> {
        self.poset.canonical_form()
    }

    pub fn is_isomorphic(&self, other: &Lattice) -> bool {
        self.poset.is_isomorphic(&other.poset)
    }

    /// Minimal `x` with `x ∨ y = w`, for a lower cover `y` of `w`.
    pub fn eta(&self, w: usize, y: usize) -> Result<Eta> {
        self.poset.check(w)?;
        self.poset.check(y)?;
        if !self.poset.covers_pair(y, w) {
            return Err(Error::NotACover { lower: y, upper: w });
        }
        Ok(self.view(Side::Join).eta(w, y))
    }

    /// Canonical join representation through the cover labelling η.
    pub fn canonical_join_rep(&self, w: usize) -> Option<JoinRep> {
        self.view(Side::Join)
            .canonical_rep(w)
            .map(|joinands| JoinRep { target: w, joinands })
    }

    pub fn canonical_meet_rep(&self, w: usize) -> Option<MeetRep> {
        self.view(Side::Meet)
            .canonical_rep(w)
            .map(|meetands| MeetRep { target: w, meetands })
    }

    /// Brute-force canonical join representation: the join-refinement
    /// minimum of all irredundant join representations.
    pub fn canonical_join_rep_oracle(&self, w: usize) -> Result<Option<JoinRep>> {
        Ok(self
            .view(Side::Join)
            .canonical_rep_oracle(w)?
            .map(|joinands| JoinRep { target: w, joinands }))
    }

    pub fn canonical_meet_rep_oracle(&self, w: usize) -> Result<Option<MeetRep>> {
        Ok(self
            .view(Side::Meet)
            .canonical_rep_oracle(w)?
            .map(|meetands| MeetRep { target: w, meetands }))
    }

    /// Every irredundant join representation of `w`.
    pub fn irredundant_join_reps(&self, w: usize) -> Result<Vec<Vec<usize>>> {
        self.view(Side::Join).irredundant_reps(w)
    }

    /// `A` join-refines `B`: every `a ∈ A` lies below some `b ∈ B`.
    pub fn join_refines(&self, a: &[usize], b: &[usize]) -> bool {
        self.view(Side::Join).refines(a, b)
    }

    /// First triple violating the join-semidistributive law, scanning
    /// incomparable pairs `y < z` for each `x`.
    pub fn join_sd_witness(&self) -> Option<Triple> {
        *self.sd_cache[0].get_or_init(|| self.view(Side::Join).sd_witness())
    }

    pub fn meet_sd_witness(&self) -> Option<Triple> {
        *self.sd_cache[1].get_or_init(|| self.view(Side::Meet).sd_witness())
    }

    pub fn is_join_semidistributive(&self) -> bool {
        self.join_sd_witness().is_none()
    }

    pub fn is_meet_semidistributive(&self) -> bool {
        self.meet_sd_witness().is_none()
    }

    pub fn is_semidistributive(&self) -> bool {
        self.is_join_semidistributive() && self.is_meet_semidistributive()
    }

    /// Meet-semidistributivity restricted to pairs covering a common
    /// element; equivalent to the full scan.
    pub fn meet_sd_witness_local(&self) -> Option<Triple> {
        self.view(Side::Meet).sd_witness_local()
    }

    /// Dual of [`Lattice::meet_sd_witness_local`]: pairs covered by a common
    /// element.
    pub fn join_sd_witness_local(&self) -> Option<Triple> {
        self.view(Side::Join).sd_witness_local()
    }

    /// Join-semidistributivity decided through the cover labelling: every
    /// lower cover `y` of every `w` has a unique minimal `x` with
    /// `x ∨ y = w`.
    pub fn is_join_semidistributive_by_covers(&self) -> bool {
        self.view(Side::Join).sd_by_covers()
    }

    pub fn is_meet_semidistributive_by_covers(&self) -> bool {
        self.view(Side::Meet).sd_by_covers()
    }

    /// Records a semidistributivity verdict obtained elsewhere (for
    /// instance through [`Lattice::is_join_semidistributive_by_covers`]).
    pub(crate) fn assume_semidistributive(&self, side: Side) {
        let _ = self.sd_cache[side.idx()].set(None);
    }

    /// `κ(j)`: the unique maximal element above `j_*` and not above `j`.
    pub fn kappa(&self, j: usize) -> Result<Option<usize>> {
        self.poset.check(j)?;
        if !self.is_join_irreducible(j) {
            return Err(Error::NotJoinIrreducible { element: j });
        }
        Ok(self.view(Side::Join).kappa(j))
    }

    /// `κ*(m)`: the unique minimal element below `m^*` and not below `m`.
    pub fn kappa_star(&self, m: usize) -> Result<Option<usize>> {
        self.poset.check(m)?;
        if !self.is_meet_irreducible(m) {
            return Err(Error::NotMeetIrreducible { element: m });
        }
        Ok(self.view(Side::Meet).kappa(m))
    }

    /// Checks that κ is a bijection from join- to meet-irreducibles with
    /// inverse κ*.
    pub fn kappa_bijection_check(&self) -> Result<bool> {
        if !self.is_semidistributive() {
            return Err(Error::PreconditionViolated {
                reason: "kappa bijection requires a semidistributive lattice".into(),
            });
        }
        if self.jirr.len() != self.mirr.len() {
            return Ok(false);
        }
        let mut seen = BitSet::new(self.len());
        for &j in &self.jirr {
            let Some(m) = self.kappa(j)? else {
                return Ok(false);
            };
            if !self.is_meet_irreducible(m) || !seen.insert(m) {
                return Ok(false);
            }
            if self.kappa_star(m)? != Some(j) {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

fn least(p: &Poset, set: &BitSet) -> Option<usize> {
    match p.minimal_elements(set).as_slice() {
        [only] => Some(*only),
        _ => None,
    }
}

fn greatest(p: &Poset, set: &BitSet) -> Option<usize> {
    match p.maximal_elements(set).as_slice() {
        [only] => Some(*only),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{boolean, chain, fixtures};

    #[test]
    fn boolean_joins() {
        let b2 = boolean(2).unwrap();
        assert_eq!(b2.join(1, 2), b2.top());
        let b3 = boolean(3).unwrap();
        assert_eq!(b3.join_set([1, 2, 4]), b3.top());
        assert_eq!(b3.join_set([]), b3.bottom());
        assert_eq!(b3.join_set([5]), 5);
        assert_eq!(b3.meet_set([]), b3.top());
    }

    #[test]
    fn not_a_lattice() {
        let p = Poset::from_covers(3, &[(0, 1), (0, 2)]).unwrap();
        assert_eq!(
            Lattice::from_poset(p),
            Err(Error::NotALattice {
                x: 1,
                y: 2,
                bound: Bound::Join
            })
        );
    }

    #[test]
    fn irreducibles_of_families() {
        assert_eq!(boolean(3).unwrap().join_irreducibles(), &[1, 2, 4]);
        assert_eq!(chain(3).unwrap().join_irreducibles(), &[1, 2, 3]);
        let b3 = boolean(3).unwrap();
        assert_eq!(b3.lower_star(4), Ok(0));
        assert_eq!(b3.lower_star(3), Err(Error::NotJoinIrreducible { element: 3 }));
    }

    #[test]
    fn eta_on_fixtures() {
        let f = fixtures();
        let n5 = &f.n5; // 0, a, b, c, 1
        assert_eq!(n5.eta(4, 1), Ok(Eta::Unique(2)));
        assert_eq!(n5.eta(4, 3), Ok(Eta::Unique(1)));
        let m3 = &f.m3; // 0, x, y, z, 1
        assert_eq!(m3.eta(4, 1), Ok(Eta::NonUnique(vec![2, 3])));
        for &j in n5.join_irreducibles() {
            let js = n5.lower_star(j).unwrap();
            assert_eq!(n5.eta(j, js), Ok(Eta::Unique(j)));
        }
        assert_eq!(n5.eta(4, 0), Err(Error::NotACover { lower: 0, upper: 4 }));
    }

    #[test]
    fn canonical_reps_on_fixtures() {
        let f = fixtures();
        let fig1 = &f.fig1; // 0 a b c d e 1
        assert_eq!(fig1.canonical_join_rep(6).unwrap().joinands, vec![1, 3]);
        assert_eq!(fig1.canonical_join_rep(4).unwrap().joinands, vec![1, 2]);
        assert_eq!(fig1.canonical_join_rep(5).unwrap().joinands, vec![2, 3]);
        assert_eq!(fig1.canonical_join_rep(0).unwrap().joinands, Vec::<usize>::new());
        assert!(f.m3.canonical_join_rep(4).is_none());
        assert_eq!(f.m3.canonical_join_rep_oracle(4), Ok(None));
        // fig1's bottom has no canonical meet representation.
        assert!(fig1.canonical_meet_rep(0).is_none());
        let b3 = boolean(3).unwrap();
        assert_eq!(
            b3.canonical_join_rep_oracle(7).unwrap().unwrap().joinands,
            vec![1, 2, 4]
        );
    }

    #[test]
    fn join_refinement() {
        let fig1 = fixtures().fig1;
        assert!(fig1.join_refines(&[1], &[1, 3]));
        assert!(fig1.join_refines(&[], &[2]));
        assert!(fig1.join_refines(&[1, 2], &[4]));
        assert!(!fig1.join_refines(&[4], &[1, 2]));
    }

    #[test]
    fn semidistributivity_of_fixtures() {
        let f = fixtures();
        assert_eq!(f.m3.join_sd_witness(), Some(Triple { x: 1, y: 2, z: 3 }));
        assert!(f.fig1.is_join_semidistributive());
        assert!(!f.fig1.is_meet_semidistributive());
        assert!(f.n5.is_semidistributive());
        assert_eq!(
            f.fig1.meet_sd_witness().is_some(),
            f.fig1.meet_sd_witness_local().is_some()
        );
    }

    #[test]
    fn kappa_values() {
        let f = fixtures();
        // fig1: K(b) = {0, a, c} has two maximal elements.
        assert_eq!(f.fig1.kappa(2), Ok(None));
        // N5 = 0, a, b, c, 1 with b < c.
        assert_eq!(f.n5.kappa(1), Ok(Some(3)));
        assert_eq!(f.n5.kappa(2), Ok(Some(1)));
        assert_eq!(f.n5.kappa(3), Ok(Some(2)));
        assert_eq!(f.n5.kappa(4), Err(Error::NotJoinIrreducible { element: 4 }));
        let b3 = boolean(3).unwrap();
        for &a in b3.join_irreducibles() {
            assert_eq!(b3.kappa(a), Ok(Some(7 ^ a)));
        }
        assert_eq!(b3.kappa_bijection_check(), Ok(true));
        let c = chain(4).unwrap();
        for &j in c.join_irreducibles() {
            assert_eq!(c.kappa(j), Ok(Some(j - 1)));
        }
        assert!(matches!(
            f.fig1.kappa_bijection_check(),
            Err(Error::PreconditionViolated { .. })
        ));
    }
}
