//! Named lattice families and small fixtures.

use std::fmt;

use crate::bits::BitSet;
use crate::error::{Error, Result};
use crate::lattice::Lattice;
use crate::poset::Poset;

/// Largest `n` accepted by [`boolean`].
pub const BOOLEAN_LIMIT: usize = 12;
/// Largest `n` accepted by [`weak_order`] and [`tamari`].
pub const PERMUTATION_LIMIT: usize = 5;
/// Most order ideals [`distributive_from_poset`] will build.
pub const IDEAL_LIMIT: usize = 1 << 14;

/// Subsets of `{1..n}` by inclusion; element `s` is the bitmask `s`.
pub fn boolean(n: usize) -> Result<Lattice> {
    if n > BOOLEAN_LIMIT {
        return Err(Error::guard("boolean rank", n, BOOLEAN_LIMIT));
    }
    let size = 1usize << n;
    let p = Poset::from_relation(size, |x, y| x & y == x)?;
    let labels = (0..size)
        .map(|s| {
            let parts: Vec<String> = (0..n)
                .filter(|i| s >> i & 1 == 1)
                .map(|i| (i + 1).to_string())
                .collect();
            format!("{{{}}}", parts.join(","))
        })
        .collect();
    Lattice::from_poset(p.with_labels(labels))
}

/// The chain `0 < 1 < ... < n` with `n + 1` elements.
pub fn chain(n: usize) -> Result<Lattice> {
    Lattice::from_poset(Poset::from_relation(n + 1, |x, y| x <= y)?)
}

/// The `n`-element antichain poset.
pub fn antichain_poset(n: usize) -> Poset {
    Poset::from_relation(n, |x, y| x == y).expect("discrete order")
}

/// The `n`-element chain poset `0 < ... < n-1`.
pub fn chain_poset(n: usize) -> Poset {
    Poset::from_relation(n, |x, y| x <= y).expect("total order")
}

/// Order ideals of `p`, ordered by size and then by member list. The
/// empty ideal comes first.
pub fn order_ideals(p: &Poset) -> Result<Vec<BitSet>> {
    let antichains = p.antichains();
    if antichains.len() > IDEAL_LIMIT {
        return Err(Error::guard("order ideals", antichains.len(), IDEAL_LIMIT));
    }
    let mut ideals: Vec<BitSet> = antichains.iter().map(|a| p.ideal_of(a)).collect();
    ideals.sort_by_cached_key(|s| (s.count(), s.to_vec()));
    Ok(ideals)
}

/// `J(P)`: order ideals of `p` under containment.
pub fn distributive_from_poset(p: &Poset) -> Result<Lattice> {
    let ideals = order_ideals(p)?;
    let q = Poset::from_relation(ideals.len(), |x, y| ideals[x].is_subset(&ideals[y]))?;
    let labels = ideals
        .iter()
        .map(|s| {
            let maxes: Vec<String> = p
                .maximal_elements(s)
                .into_iter()
                .map(|x| p.label(x))
                .collect();
            format!("I[{}]", maxes.join(","))
        })
        .collect();
    Lattice::from_poset(q.with_labels(labels))
}

/// Largest `N` accepted by [`divisor_lattice`].
pub const DIVISOR_LIMIT: u64 = 1 << 40;

/// Divisors of `n` in increasing order.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

/// Divisors of `n` ordered by divisibility, listed in increasing order and
/// labelled by their values.
pub fn divisor_lattice(n: u64) -> Result<Lattice> {
    if n == 0 {
        return Err(Error::PreconditionViolated {
            reason: "divisor lattice needs a positive integer".into(),
        });
    }
    if n > DIVISOR_LIMIT {
        return Err(Error::guard("divisor lattice", n as usize, DIVISOR_LIMIT as usize));
    }
    let ds = divisors(n);
    let p = Poset::from_relation(ds.len(), |x, y| ds[y].is_multiple_of(ds[x]))?;
    Lattice::from_poset(p.with_labels(ds.iter().map(u64::to_string).collect()))
}

/// A permutation of `{1..n}` in one-line notation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(one_line: Vec<usize>) -> Result<Self> {
        let n = one_line.len();
        let mut seen = vec![false; n + 1];
        for &v in &one_line {
            if v == 0 || v > n || seen[v] {
                return Err(Error::Format {
                    message: format!("{one_line:?} is not a permutation"),
                });
            }
            seen[v] = true;
        }
        Ok(Permutation(one_line))
    }

    pub fn one_line(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// All permutations of `{1..n}` in lexicographic order.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut cur: Vec<usize> = (1..=n).collect();
        let mut out = vec![Permutation(cur.clone())];
        // Standard next-permutation step.
        loop {
            let Some(i) = (1..cur.len()).rev().find(|&i| cur[i - 1] < cur[i]) else {
                return out;
            };
            let j = (i..cur.len()).rev().find(|&j| cur[j] > cur[i - 1]).expect("pivot");
            cur.swap(i - 1, j);
            cur[i..].reverse();
            out.push(Permutation(cur.clone()));
        }
    }

    /// Inversions as value pairs `(a, b)` with `a < b` and `b` placed before
    /// `a`, packed into a bitmask indexed by [`pair_index`].
    pub fn inversion_mask(&self) -> u64 {
        let n = self.0.len();
        let mut mask = 0;
        for i in 0..n {
            for k in i + 1..n {
                let (hi, lo) = (self.0[i], self.0[k]);
                if hi > lo {
                    mask |= 1 << pair_index(n, lo, hi);
                }
            }
        }
        mask
    }

    /// Contains positions `i < j < k` with `p_k < p_i < p_j`.
    pub fn contains_231(&self) -> bool {
        let p = &self.0;
        let n = p.len();
        (0..n).any(|j| {
            (0..j).any(|i| p[i] < p[j] && (j + 1..n).any(|k| p[k] < p[i]))
        })
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.0.len() > 9 { "," } else { "" };
        let parts: Vec<String> = self.0.iter().map(usize::to_string).collect();
        f.write_str(&parts.join(sep))
    }
}

/// Bit position of the value pair `a < b` among pairs of `{1..n}`.
pub fn pair_index(n: usize, a: usize, b: usize) -> usize {
    debug_assert!(1 <= a && a < b && b <= n);
    (a - 1) * n + (b - 1)
}

/// Transitive closure of an inversion relation: whenever `c` precedes `b`
/// and `b` precedes `a` (for `a < b < c`), `c` precedes `a`.
fn close_inversions(n: usize, mut mask: u64) -> u64 {
    let has = |m: u64, a: usize, b: usize| m >> pair_index(n, a, b) & 1 == 1;
    loop {
        let mut next = mask;
        for a in 1..=n {
            for b in a + 1..=n {
                for c in b + 1..=n {
                    if has(mask, a, b) && has(mask, b, c) {
                        next |= 1 << pair_index(n, a, c);
                    }
                }
            }
        }
        if next == mask {
            return mask;
        }
        mask = next;
    }
}

fn permutation_lattice(n: usize, perms: Vec<Permutation>, check_join: bool) -> Result<Lattice> {
    let masks: Vec<u64> = perms.iter().map(Permutation::inversion_mask).collect();
    let p = Poset::from_relation(perms.len(), |x, y| masks[x] & !masks[y] == 0)?;
    let l = Lattice::from_poset(p.with_labels(perms.iter().map(|q| q.to_string()).collect()))?;
    if check_join {
        for x in 0..l.len() {
            for y in 0..l.len() {
                let closed = close_inversions(n, masks[x] | masks[y]);
                if masks[l.join(x, y)] != closed {
                    return Err(Error::InvariantViolated {
                        what: format!("weak order join of {} and {}", perms[x], perms[y]),
                    });
                }
            }
        }
    }
    Ok(l)
}

/// Weak order on permutations of `{1..n}`: containment of inversion sets.
/// Elements are listed lexicographically and labelled in one-line notation.
pub fn weak_order(n: usize) -> Result<Lattice> {
    if n == 0 || n > PERMUTATION_LIMIT {
        return Err(Error::guard("weak order rank", n, PERMUTATION_LIMIT));
    }
    permutation_lattice(n, Permutation::all(n), true)
}

/// Tamari lattice `T_n`: 231-avoiding permutations of `{1..n+1}` with the
/// order induced from the weak order.
pub fn tamari(n: usize) -> Result<Lattice> {
    if n == 0 || n > PERMUTATION_LIMIT {
        return Err(Error::guard("tamari rank", n, PERMUTATION_LIMIT));
    }
    let perms: Vec<Permutation> = Permutation::all(n + 1)
        .into_iter()
        .filter(|p| !p.contains_231())
        .collect();
    let l = permutation_lattice(n + 1, perms, false)?;
    if !l.is_semidistributive() {
        return Err(Error::InvariantViolated {
            what: format!("tamari({n}) is not semidistributive"),
        });
    }
    Ok(l)
}

fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// `N(n, k) = C(n+1, k+1) C(n+1, k) / (n+1)`.
pub fn narayana(n: u64, k: u64) -> u128 {
    binomial(n + 1, k + 1) * binomial(n + 1, k) / (n as u128 + 1)
}

/// Catalan numbers by the convolution recurrence.
pub fn catalan(n: usize) -> u128 {
    let mut c = vec![1u128; n + 1];
    for m in 1..=n {
        c[m] = (0..m).map(|i| c[i] * c[m - 1 - i]).sum();
    }
    c[n]
}

/// Hand-entered lattices used as fixtures.
#[derive(Clone, Debug)]
pub struct Fixtures {
    /// `0̂ ⋖ a, b, c`; `a, b ⋖ d`; `b, c ⋖ e`; `d, e ⋖ 1̂` (ids 0..=6 in
    /// that order).
    pub fig1: Lattice,
    /// Three atoms `x, y, z` between `0̂` and `1̂`.
    pub m3: Lattice,
    /// The pentagon `0̂ < a < 1̂`, `0̂ < b < c < 1̂`.
    pub n5: Lattice,
}

fn labelled(n: usize, covers: &[(usize, usize)], labels: &[&str]) -> Lattice {
    let p = Poset::from_covers(n, covers)
        .expect("fixture covers are acyclic")
        .with_labels(labels.iter().map(|s| s.to_string()).collect());
    Lattice::from_poset(p).expect("fixtures are lattices")
}

pub fn fixtures() -> Fixtures {
    Fixtures {
        fig1: labelled(
            7,
            &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (2, 5), (3, 5), (4, 6), (5, 6)],
            &["0̂", "a", "b", "c", "d", "e", "1̂"],
        ),
        m3: labelled(
            5,
            &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)],
            &["0̂", "x", "y", "z", "1̂"],
        ),
        n5: labelled(
            5,
            &[(0, 1), (0, 2), (2, 3), (1, 4), (3, 4)],
            &["0̂", "a", "b", "c", "1̂"],
        ),
    }
}

/// Fixture names understood by [`fixture`].
pub const FIXTURE_NAMES: [&str; 5] = ["fig1", "m3", "n5", "fig2_right", "fig6"];

/// Looks up a fixture by name. `fig2_right` and `fig6` are found by search
/// over small lattices; see [`crate::search::fig2_right_witness`] and
/// [`crate::search::fig6_witness`].
pub fn fixture(name: &str) -> Result<Lattice> {
    let f = fixtures();
    match name {
        "fig1" => Ok(f.fig1),
        "m3" => Ok(f.m3),
        "n5" => Ok(f.n5),
        "fig2_right" => crate::search::fig2_right_witness(),
        "fig6" => crate::search::fig6_witness(),
        _ => Err(Error::Format {
            message: format!("unknown fixture {name:?}; expected one of {FIXTURE_NAMES:?}"),
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_families() {
        assert_eq!(boolean(3).unwrap().len(), 8);
        assert_eq!(chain(3).unwrap().len(), 4);
        assert_eq!(divisor_lattice(7).unwrap().len(), 2);
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert!(matches!(boolean(13), Err(Error::GuardExceeded { .. })));
        assert!(matches!(weak_order(6), Err(Error::GuardExceeded { .. })));
    }

    #[test]
    fn divisor_canonical_reps() {
        let l = divisor_lattice(360).unwrap();
        let top = l.element_by_label("360").unwrap();
        let labels: Vec<String> = l
            .canonical_join_rep(top)
            .unwrap()
            .joinands
            .iter()
            .map(|&x| l.label(x))
            .collect();
        assert_eq!(labels, vec!["5", "8", "9"]);
        let l12 = divisor_lattice(12).unwrap();
        let labels: Vec<String> = l12
            .canonical_join_rep(l12.top())
            .unwrap()
            .joinands
            .iter()
            .map(|&x| l12.label(x))
            .collect();
        assert_eq!(labels, vec!["3", "4"]);
    }

    #[test]
    fn permutations() {
        assert_eq!(Permutation::all(3).len(), 6);
        assert_eq!(Permutation::all(4)[0].to_string(), "1234");
        let p = Permutation::new(vec![2, 3, 1]).unwrap();
        assert!(p.contains_231());
        assert!(!Permutation::new(vec![3, 1, 2]).unwrap().contains_231());
        assert!(Permutation::new(vec![1, 1]).is_err());
        let avoiders = Permutation::all(4).iter().filter(|p| !p.contains_231()).count();
        assert_eq!(avoiders, 14);
    }

    #[test]
    fn weak_order_s3() {
        let s3 = weak_order(3).unwrap();
        assert_eq!(s3.len(), 6);
        let labels: Vec<String> = s3.join_irreducibles().iter().map(|&j| s3.label(j)).collect();
        assert_eq!(labels, vec!["132", "213", "231", "312"]);
        assert_eq!(weak_order(2).unwrap().len(), 2);
    }

    #[test]
    fn tamari_sizes() {
        assert_eq!(tamari(1).unwrap().len(), 2);
        assert_eq!(tamari(3).unwrap().len(), 14);
    }

    #[test]
    fn narayana_and_catalan() {
        assert_eq!(narayana(3, 1), 6);
        assert_eq!(narayana(3, 2), 6);
        assert_eq!(narayana(3, 3), 1);
        for n in 0..=8u64 {
            assert_eq!(narayana(n, 0), 1);
            let s: u128 = (0..=n).map(|k| narayana(n, k)).sum();
            assert_eq!(s, catalan(n as usize + 1));
        }
    }

    #[test]
    fn distributive_lattices() {
        assert!(distributive_from_poset(&antichain_poset(3))
            .unwrap()
            .is_isomorphic(&boolean(3).unwrap()));
        assert!(distributive_from_poset(&chain_poset(3))
            .unwrap()
            .is_isomorphic(&chain(3).unwrap()));
    }
}
