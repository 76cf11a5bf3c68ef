use crate::lattice::Lattice;
use crate::poset::Poset;

fn pair_labels(l1: &Lattice, l2: &Lattice) -> Option<Vec<String>> {
    l1.poset().labels()?;
    l2.poset().labels()?;
    Some(
        (0..l1.len())
            .flat_map(|i| (0..l2.len()).map(move |j| format!("({},{})", l1.label(i), l2.label(j))))
            .collect(),
    )
}

/// `L1 × L2` with the pair `(i, j)` stored at id `i * |L2| + j`.
pub fn direct_product(l1: &Lattice, l2: &Lattice) -> Lattice {
    let n2 = l2.len();
    let p = Poset::from_relation(l1.len() * n2, |x, y| {
        l1.leq(x / n2, y / n2) && l2.leq(x % n2, y % n2)
    })
    .expect("products of orders are orders");
    let p = match pair_labels(l1, l2) {
        Some(labels) => p.with_labels(labels),
        None => p,
    };
    Lattice::from_poset(p).expect("products of lattices are lattices")
}

/// `L1 ⊕ L2`: `L2` placed above `L1`, its ids shifted by `|L1|`.
pub fn ordinal_sum(l1: &Lattice, l2: &Lattice) -> Lattice {
    let n1 = l1.len();
    let p = Poset::from_relation(n1 + l2.len(), |x, y| match (x < n1, y < n1) {
        (true, true) => l1.leq(x, y),
        (false, false) => l2.leq(x - n1, y - n1),
        (true, false) => true,
        (false, true) => false,
    })
    .expect("ordinal sums of orders are orders");
    Lattice::from_poset(p).expect("ordinal sums of lattices are lattices")
}

/// Id in the wedge sum of each element of `l2`: the bottom of `l2` becomes
/// the top of `l1`, the rest follow `l1` in order.
pub fn wedge_right_map(l1: &Lattice, l2: &Lattice) -> Vec<usize> {
    let mut next = l1.len();
    (0..l2.len())
        .map(|y| {
            if y == l2.bottom() {
                l1.top()
            } else {
                next += 1;
                next - 1
            }
        })
        .collect()
}

/// Ordinal sum with the top of `l1` identified with the bottom of `l2`.
pub fn wedge_sum(l1: &Lattice, l2: &Lattice) -> Lattice {
    let map = wedge_right_map(l1, l2);
    let n1 = l1.len();
    let n = n1 + l2.len() - 1;
    let mut back = vec![usize::MAX; n];
    for (y, &m) in map.iter().enumerate() {
        if m >= n1 {
            back[m] = y;
        }
    }
    let p = Poset::from_relation(n, |x, y| match (x < n1, y < n1) {
        (true, true) => l1.leq(x, y),
        (false, false) => l2.leq(back[x], back[y]),
        (true, false) => true,
        (false, true) => false,
    })
    .expect("wedge sums of orders are orders");
    Lattice::from_poset(p).expect("wedge sums of lattices are lattices")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{boolean, chain};

    #[test]
    fn small_products() {
        let b1 = boolean(1).unwrap();
        assert!(direct_product(&b1, &b1).is_isomorphic(&boolean(2).unwrap()));
        let one = chain(0).unwrap();
        let b2 = boolean(2).unwrap();
        assert!(direct_product(&b2, &one).is_isomorphic(&b2));
        assert_eq!(direct_product(&b1, &b1).label(1), "({},{1})");
    }

    #[test]
    fn sums() {
        let c0 = chain(0).unwrap();
        assert!(ordinal_sum(&c0, &c0).is_isomorphic(&chain(1).unwrap()));
        let c1 = chain(1).unwrap();
        assert!(wedge_sum(&c1, &c1).is_isomorphic(&chain(2).unwrap()));
        let b2 = boolean(2).unwrap();
        let w = wedge_sum(&b2, &b2);
        assert_eq!(w.len(), 7);
        assert_eq!(wedge_right_map(&b2, &b2), vec![3, 4, 5, 6]);
        assert_eq!(w.join(1, 2), 3);
    }
}
