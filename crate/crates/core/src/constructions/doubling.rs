//! Day's doubling `L[C]` of an order-convex set.

use crate::bits::BitSet;
use crate::complex::canonical_join_graph;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::lattice::Lattice;
use crate::poset::Poset;

/// The doubled lattice together with its projection onto the base.
#[derive(Clone, Debug)]
pub struct Doubling {
    pub lattice: Lattice,
    /// `π_C`: id in `L[C]` to id in `L`.
    pub projection: Vec<usize>,
    /// `lift[x][ε]`: id of `(x, ε)` when present.
    pub lift: Vec<[Option<usize>; 2]>,
    /// The doubled set, sorted.
    pub convex_set: Vec<usize>,
}

impl Doubling {
    /// Least element of the fibre `π_C^{-1}(x)`.
    pub fn fiber_min(&self, x: usize) -> usize {
        let [lo, hi] = self.lift[x];
        lo.or(hi).expect("every fibre is non-empty")
    }

    /// `(c, 1)` for each minimal `c` of the doubled set. For an interval
    /// `[a, b]` this is the single new join-irreducible `(a, 1)`.
    pub fn new_join_irreducibles(&self, base: &Lattice) -> Vec<usize> {
        let c = BitSet::from_iter_with_len(base.len(), self.convex_set.iter().copied());
        base.poset()
            .minimal_elements(&c)
            .into_iter()
            .map(|x| self.lift[x][1].expect("doubled elements have a top copy"))
            .collect()
    }
}

/// A triple `x < z < y` with `x, y ∈ C` and `z ∉ C`.
pub fn order_convex_witness(l: &Lattice, c: &[usize]) -> Option<(usize, usize, usize)> {
    let n = l.len();
    let set = BitSet::from_iter_with_len(n, c.iter().copied().filter(|&x| x < n));
    for x in set.iter() {
        for y in set.iter() {
            if x != y && l.leq(x, y) {
                let mut gap = l.poset().interval(x, y);
                gap.difference_with(&set);
                if let Some(z) = gap.first() {
                    return Some((x, z, y));
                }
            }
        }
    }
    None
}

pub fn is_order_convex(l: &Lattice, c: &[usize]) -> bool {
    order_convex_witness(l, c).is_none()
}

/// `L[C] = [((L \ X) ∪ C) × 0] ⊎ (X × 1)` with `X` the up-set of `C`.
/// Elements are listed as `(x, 0)` then `(x, 1)` for `x = 0, 1, ...`,
/// skipping absent pairs.
pub fn double(l: &Lattice, c: &[usize]) -> Result<Doubling> {
    let n = l.len();
    for &x in c {
        if x >= n {
            return Err(Error::OutOfRange { element: x, n });
        }
    }
    if let Some((x, z, y)) = order_convex_witness(l, c) {
        return Err(Error::NotOrderConvex { x, z, y });
    }
    let in_c = BitSet::from_iter_with_len(n, c.iter().copied());
    let mut in_x = BitSet::new(n);
    for x in in_c.iter() {
        in_x.union_with(l.poset().up_set(x));
    }
    let mut lift = vec![[None, None]; n];
    let mut pairs: Vec<(usize, usize)> = Vec::with_capacity(n + in_x.count());
    for (x, slot) in lift.iter_mut().enumerate() {
        if !in_x.contains(x) || in_c.contains(x) {
            slot[0] = Some(pairs.len());
            pairs.push((x, 0));
        }
        if in_x.contains(x) {
            slot[1] = Some(pairs.len());
            pairs.push((x, 1));
        }
    }
    let m = pairs.len();
    let up: Vec<BitSet> = pairs
        .iter()
        .map(|&(x, e)| {
            let mut row = BitSet::new(m);
            for y in l.poset().up_set(x).iter() {
                if e == 0 {
                    if let Some(i) = lift[y][0] {
                        row.insert(i);
                    }
                }
                if let Some(i) = lift[y][1] {
                    row.insert(i);
                }
            }
            row
        })
        .collect();
    let mut poset = Poset::from_up_rows(up);
    if let Some(labels) = l.poset().labels() {
        poset = poset.with_labels(
            pairs
                .iter()
                .map(|&(x, e)| format!("({},{e})", labels[x]))
                .collect(),
        );
    }
    // π_C is a lattice homomorphism, so joins and meets are computed on the
    // first coordinate and the second is the least (greatest) admissible
    // value.
    let mut join = vec![0u32; m * m];
    let mut meet = vec![0u32; m * m];
    for (u, &(x, e)) in pairs.iter().enumerate() {
        for (v, &(y, d)) in pairs.iter().enumerate() {
            let j = l.join(x, y);
            let jv = if e.max(d) == 0 { lift[j][0].or(lift[j][1]) } else { lift[j][1] };
            let mm = l.meet(x, y);
            let mv = if e.min(d) == 1 { lift[mm][1].or(lift[mm][0]) } else { lift[mm][0] };
            join[u * m + v] = jv.expect("doubling is a lattice") as u32;
            meet[u * m + v] = mv.expect("doubling is a lattice") as u32;
        }
    }
    let lattice = Lattice::from_tables(poset, join, meet);
    Ok(Doubling {
        lattice,
        projection: pairs.iter().map(|&(x, _)| x).collect(),
        lift,
        convex_set: in_c.to_vec(),
    })
}

/// Doubles the interval `[a, b]`.
pub fn double_interval(l: &Lattice, a: usize, b: usize) -> Result<Doubling> {
    l.poset().check(a)?;
    l.poset().check(b)?;
    if !l.leq(a, b) {
        return Err(Error::NotComparable { x: a, y: b });
    }
    double(l, &l.poset().interval(a, b).to_vec())
}

fn require_interval_sd(l: &Lattice, a: usize, b: usize, d: &Doubling) -> Result<()> {
    if !l.is_semidistributive() {
        return Err(Error::PreconditionViolated {
            reason: "the doubling formula needs a semidistributive lattice".into(),
        });
    }
    if !l.leq(a, b) || d.convex_set != l.poset().interval(a, b).to_vec() {
        return Err(Error::PreconditionViolated {
            reason: format!("the doubled set is not the interval [{a}, {b}]"),
        });
    }
    Ok(())
}

/// Canonical join graph of `L[I]` as predicted from that of `L`: edges of
/// `L` lifted to fibre minima, plus `{(j, 0), (a, 1)}` for every canonical
/// joinand `j ≰ a` of an element of `I`.
pub fn predicted_doubled_cjg_edges(l: &Lattice, a: usize, b: usize, d: &Doubling) -> Result<Graph> {
    require_interval_sd(l, a, b, d)?;
    let old = canonical_join_graph(l)?;
    let new_j = d.lift[a][1].expect("a is doubled");
    let mut vertices: Vec<usize> = old.vertices().iter().map(|&j| d.fiber_min(j)).collect();
    vertices.push(new_j);
    let mut edges: Vec<(usize, usize)> = old
        .edges()
        .map(|(u, v)| (d.fiber_min(u), d.fiber_min(v)))
        .collect();
    for w in l.poset().interval(a, b).iter() {
        let can = l
            .canonical_join_rep(w)
            .expect("semidistributive lattices have canonical join representations");
        for j in can.joinands {
            if !l.leq(j, a) {
                let j0 = d.lift[j][0].expect("joinands of I outside a lie in C x 0");
                edges.push((j0, new_j));
            }
        }
    }
    Ok(Graph::new(vertices, edges))
}

fn violated(clause: usize, detail: String) -> Error {
    Error::InvariantViolated {
        what: format!("doubling consequence ({clause}): {detail}"),
    }
}

/// Checks the four structural consequences of doubling an interval `[a, b]`
/// of a semidistributive lattice, over every element of `L[I]`.
pub fn check_doubling_consequences(l: &Lattice, a: usize, b: usize, d: &Doubling) -> Result<()> {
    require_interval_sd(l, a, b, d)?;
    let big = &d.lattice;
    let new_j = d.lift[a][1].expect("a is doubled");
    let in_i = |w: usize| l.leq(a, w) && l.leq(w, b);
    let can_old = |w: usize| {
        l.canonical_join_rep(w)
            .expect("base is semidistributive")
            .joinands
    };
    let can_new = |u: usize| -> Result<Vec<usize>> {
        big.canonical_join_rep(u)
            .map(|r| r.joinands)
            .ok_or_else(|| violated(0, format!("element {u} of L[I] has no canonical join representation")))
    };
    for u in 0..big.len() {
        let w = d.projection[u];
        let eps = usize::from(d.lift[w][1] == Some(u));
        let joinands = can_new(u)?;
        for &ju in &joinands {
            let j = d.projection[ju];
            let e = usize::from(d.lift[j][1] == Some(ju));
            if j == a {
                continue;
            }
            if !can_old(w).contains(&j) {
                return Err(violated(1, format!("({j},{e}) joins canonically to ({w},{eps}) but {j} is not a canonical joinand of {w}")));
            }
            if in_i(w) && e != 0 {
                return Err(violated(2, format!("({j},{e}) is a canonical joinand of ({w},{eps}) in I x 2")));
            }
            if in_i(w) && eps == 0 && !l.leq(j, a) {
                let top = d.lift[w][1].expect("I is doubled");
                if !can_new(top)?.contains(&ju) {
                    return Err(violated(3, format!("({j},{e}) is not a canonical joinand of ({w},1)")));
                }
            }
        }
        let has_new = joinands.contains(&new_j);
        if has_new != (in_i(w) && eps == 1) {
            return Err(violated(4, format!("({w},{eps}) and the new join-irreducible ({a},1)")));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{boolean, chain, fixtures};

    fn tables_match(d: &Doubling) {
        let reference = Lattice::from_poset(d.lattice.poset().clone()).unwrap();
        for x in 0..d.lattice.len() {
            for y in 0..d.lattice.len() {
                assert_eq!(d.lattice.join(x, y), reference.join(x, y));
                assert_eq!(d.lattice.meet(x, y), reference.meet(x, y));
            }
        }
    }

    #[test]
    fn first_doubling_is_a_chain() {
        let one = chain(0).unwrap();
        let d = double(&one, &[0]).unwrap();
        assert!(d.lattice.is_isomorphic(&chain(1).unwrap()));
        assert_eq!(d.new_join_irreducibles(&one), vec![1]);
    }

    #[test]
    fn b2_singletons() {
        let b2 = boolean(2).unwrap();
        let n5 = fixtures().n5;
        for x in 0..4 {
            let d = double_interval(&b2, x, x).unwrap();
            tables_match(&d);
            assert_eq!(d.lattice.len(), 5);
            if x == 1 || x == 2 {
                assert!(d.lattice.is_isomorphic(&n5));
            }
            assert_eq!(
                predicted_doubled_cjg_edges(&b2, x, x, &d).unwrap(),
                canonical_join_graph(&d.lattice).unwrap()
            );
            check_doubling_consequences(&b2, x, x, &d).unwrap();
        }
    }

    #[test]
    fn convexity() {
        let b2 = boolean(2).unwrap();
        assert!(is_order_convex(&b2, &[]));
        assert!(is_order_convex(&b2, &[1]));
        assert_eq!(order_convex_witness(&b2, &[0, 3]), Some((0, 1, 3)));
        assert!(matches!(double(&b2, &[0, 3]), Err(Error::NotOrderConvex { .. })));
    }

    #[test]
    fn projection_is_a_homomorphism() {
        let b3 = boolean(3).unwrap();
        let d = double(&b3, &[1, 3, 5, 7]).unwrap();
        tables_match(&d);
        for u in 0..d.lattice.len() {
            for v in 0..d.lattice.len() {
                let (x, y) = (d.projection[u], d.projection[v]);
                assert_eq!(d.projection[d.lattice.join(u, v)], b3.join(x, y));
                assert_eq!(d.projection[d.lattice.meet(u, v)], b3.meet(x, y));
            }
        }
    }
}
