//! Enumeration of small posets and lattices up to isomorphism.

use std::collections::HashSet;

use crate::bits::BitSet;
use crate::error::{Error, Result};
use crate::families::order_ideals;
use crate::lattice::Lattice;
use crate::poset::Poset;

/// Largest lattice size accepted by [`enumerate_lattices`].
pub const LATTICE_ENUMERATION_LIMIT: usize = 8;
/// Largest poset size accepted by [`enumerate_posets`].
pub const POSET_ENUMERATION_LIMIT: usize = 8;

/// `p` with one new maximal element `n` whose strict down-set is `ideal`.
fn extend(p: &Poset, ideal: &BitSet) -> Poset {
    let n = p.len();
    Poset::from_relation(n + 1, |x, y| match (x == n, y == n) {
        (false, false) => p.leq(x, y),
        (false, true) => ideal.contains(x),
        (true, false) => false,
        (true, true) => true,
    })
    .expect("adding a maximal element keeps the order")
}

/// One representative of every isomorphism class of posets with exactly
/// `n` elements. Every poset arises from a smaller one by adding a maximal
/// element above an order ideal; duplicates are removed by canonical form.
pub fn enumerate_posets(n: usize) -> Result<Vec<Poset>> {
    if n > POSET_ENUMERATION_LIMIT {
        return Err(Error::guard("poset size", n, POSET_ENUMERATION_LIMIT));
    }
    let mut level = vec![Poset::from_covers(0, &[])?];
    for _ in 0..n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for p in &level {
            for ideal in order_ideals(p)? {
                let q = extend(p, &ideal);
                if seen.insert(q.canonical_form()) {
                    next.push(q);
                }
            }
        }
        level = next;
    }
    Ok(level)
}

/// `p` with a new bottom (id 0) and top (id `n + 1`) attached; the
/// original elements are shifted up by one.
fn add_bounds(p: &Poset) -> Poset {
    let n = p.len();
    Poset::from_relation(n + 2, |x, y| {
        x == 0 || y == n + 1 || (x <= n && y <= n && x > 0 && y > 0 && p.leq(x - 1, y - 1))
    })
    .expect("bounds keep the order")
}

/// One representative of every isomorphism class of lattices with at most
/// `max_n` elements, by size. A lattice with at least two elements is its
/// poset of non-extremal elements with bounds attached, so the classes
/// correspond to posets on `n - 2` elements whose bounded completion is a
/// lattice.
pub fn enumerate_lattices(max_n: usize) -> Result<Vec<Lattice>> {
    if max_n > LATTICE_ENUMERATION_LIMIT {
        return Err(Error::guard("lattice size", max_n, LATTICE_ENUMERATION_LIMIT));
    }
    let mut out = Vec::new();
    if max_n >= 1 {
        out.push(Lattice::from_covers(1, &[])?);
    }
    for n in 2..=max_n {
        for inner in enumerate_posets(n - 2)? {
            if let Ok(l) = Lattice::from_poset(add_bounds(&inner)) {
                out.push(l);
            }
        }
    }
    Ok(out)
}

/// Lattice test straight from the definition: every pair has exactly one
/// minimal upper bound and one maximal lower bound. Written without the
/// bitset machinery so it can serve as an independent check.
pub fn is_lattice_naive(n: usize, leq: impl Fn(usize, usize) -> bool) -> bool {
    if n == 0 {
        return false;
    }
    for x in 0..n {
        for y in 0..n {
            let ub: Vec<usize> = (0..n).filter(|&z| leq(x, z) && leq(y, z)).collect();
            let least = ub.iter().filter(|&&u| ub.iter().all(|&v| leq(u, v))).count();
            let lb: Vec<usize> = (0..n).filter(|&z| leq(z, x) && leq(z, y)).collect();
            let greatest = lb.iter().filter(|&&u| lb.iter().all(|&v| leq(v, u))).count();
            if least != 1 || greatest != 1 {
                return false;
            }
        }
    }
    true
}

/// Number of lattices on `{0..n-1}` whose order is contained in the usual
/// order of integers, counted by brute force: every such order is built by
/// repeatedly adding a new largest label as a maximal element above some
/// down-closed set, without any isomorphism reduction.
pub fn count_naturally_labeled_lattices(n: usize) -> Result<u64> {
    if n > LATTICE_ENUMERATION_LIMIT {
        return Err(Error::guard("lattice size", n, LATTICE_ENUMERATION_LIMIT));
    }
    if n == 0 {
        return Ok(0);
    }
    if n == 1 {
        return Ok(1);
    }
    // `below[y]` is the set of labels x with x <= y. Label 0 must be the
    // bottom and label n-1 the top; the labels in between are added one at
    // a time above a down-closed set containing 0.
    fn rec_inner(n: usize, below: &mut Vec<u64>, count: &mut u64) {
        let k = below.len();
        if k == n - 1 {
            let top = (1u64 << n) - 1;
            below.push(top);
            let leq = |x: usize, y: usize| below[y] >> x & 1 == 1;
            if is_lattice_naive(n, leq) {
                *count += 1;
            }
            below.pop();
            return;
        }
        for mask in 0u64..1 << k {
            let closed = mask & 1 == 1
                && (0..k)
                    .filter(|&y| mask >> y & 1 == 1)
                    .all(|y| below[y] & !mask == 0);
            if closed {
                below.push(mask | 1 << k);
                rec_inner(n, below, count);
                below.pop();
            }
        }
    }
    let mut count = 0;
    rec_inner(n, &mut vec![1u64], &mut count);
    Ok(count)
}

/// Number of linear extensions, by dynamic programming over down-sets.
pub fn linear_extension_count(p: &Poset) -> u64 {
    let n = p.len();
    assert!(n <= 24, "linear extension count is exponential in n");
    let below: Vec<u32> = (0..n)
        .map(|x| {
            p.down_set(x)
                .iter()
                .filter(|&y| y != x)
                .fold(0u32, |m, y| m | 1 << y)
        })
        .collect();
    let mut ways = vec![0u64; 1 << n];
    ways[0] = 1;
    for s in 0..(1usize << n) {
        if ways[s] == 0 {
            continue;
        }
        for x in 0..n {
            if s >> x & 1 == 0 && below[x] as usize & !s == 0 {
                ways[s | 1 << x] += ways[s];
            }
        }
    }
    ways[(1 << n) - 1]
}

/// Order automorphisms of a lattice, by backtracking over bijections that
/// preserve the order relation.
pub fn lattice_automorphism_count(l: &Lattice) -> u64 {
    let p = l.poset();
    let n = p.len();
    fn rec(p: &Poset, img: &mut Vec<usize>, used: &mut Vec<bool>, count: &mut u64) {
        let x = img.len();
        if x == p.len() {
            *count += 1;
            return;
        }
        for y in 0..p.len() {
            if used[y] {
                continue;
            }
            let ok = (0..x).all(|z| p.leq(z, x) == p.leq(img[z], y) && p.leq(x, z) == p.leq(y, img[z]));
            if ok {
                used[y] = true;
                img.push(y);
                rec(p, img, used, count);
                img.pop();
                used[y] = false;
            }
        }
    }
    let mut count = 0;
    rec(p, &mut Vec::with_capacity(n), &mut vec![false; n], &mut count);
    count
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_poset_counts() {
        let counts: Vec<usize> = (0..=5).map(|n| enumerate_posets(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 5, 16, 63]);
    }

    #[test]
    fn small_lattice_counts() {
        let all = enumerate_lattices(6).unwrap();
        let mut counts = [0usize; 7];
        for l in &all {
            counts[l.len()] += 1;
        }
        assert_eq!(counts[1..], [1, 1, 1, 2, 5, 15]);
    }

    #[test]
    fn linear_extensions_and_automorphisms() {
        let b2 = crate::families::boolean(2).unwrap();
        assert_eq!(linear_extension_count(b2.poset()), 2);
        assert_eq!(lattice_automorphism_count(&b2), 2);
        let b3 = crate::families::boolean(3).unwrap();
        assert_eq!(lattice_automorphism_count(&b3), 6);
    }

    #[test]
    fn naive_lattice_test() {
        assert!(is_lattice_naive(2, |x, y| x <= y));
        assert!(!is_lattice_naive(3, |x, y| x == y || x == 0));
    }
}
