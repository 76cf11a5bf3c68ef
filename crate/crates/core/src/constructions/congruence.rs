//! Lattice congruences, quotients and forcing.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::Lattice;

/// A partition of the elements of a lattice. Classes are sorted and listed
/// in order of their smallest id.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Congruence {
    class_of: Vec<usize>,
    classes: Vec<Vec<usize>>,
    least: Vec<usize>,
}

impl Congruence {
    /// Normalises an arbitrary class assignment on the elements of `l`.
    pub fn from_class_ids(l: &Lattice, ids: &[usize]) -> Congruence {
        let mut rename = std::collections::HashMap::new();
        let mut classes: Vec<Vec<usize>> = Vec::new();
        let class_of = ids
            .iter()
            .enumerate()
            .map(|(x, id)| {
                let c = *rename.entry(*id).or_insert_with(|| {
                    classes.push(Vec::new());
                    classes.len() - 1
                });
                classes[c].push(x);
                c
            })
            .collect();
        let least = classes
            .iter()
            .map(|c| l.meet_set(c.iter().copied()))
            .collect();
        Congruence {
            class_of,
            classes,
            least,
        }
    }

    pub fn identity(l: &Lattice) -> Congruence {
        Congruence::from_class_ids(l, &(0..l.len()).collect::<Vec<_>>())
    }

    pub fn full(l: &Lattice) -> Congruence {
        Congruence::from_class_ids(l, &vec![0; l.len()])
    }

    /// Class id to class assignment, suitable for [`check_congruence`].
    pub fn class_ids(&self) -> &[usize] {
        &self.class_of
    }

    pub fn class_of(&self, x: usize) -> usize {
        self.class_of[x]
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.class_of.len()
    }

    pub fn is_empty(&self) -> bool {
        self.class_of.is_empty()
    }

    pub fn equivalent(&self, x: usize, y: usize) -> bool {
        self.class_of[x] == self.class_of[y]
    }

    /// `π↓`: least element of the class of `x`.
    pub fn pi_down(&self, x: usize) -> usize {
        self.least[self.class_of[x]]
    }
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn find(&mut self, mut x: usize) -> usize {
        while self.0[x] != x {
            self.0[x] = self.0[self.0[x]];
            x = self.0[x];
        }
        x
    }

    fn union(&mut self, x: usize, y: usize) -> bool {
        let (a, b) = (self.find(x), self.find(y));
        if a == b {
            return false;
        }
        self.0[a.max(b)] = a.min(b);
        true
    }
}

/// Smallest congruence identifying each given pair.
pub fn congruence_from_pairs(l: &Lattice, pairs: &[(usize, usize)]) -> Result<Congruence> {
    let n = l.len();
    for &(x, y) in pairs {
        l.poset().check(x)?;
        l.poset().check(y)?;
    }
    let mut uf = UnionFind((0..n).collect());
    let mut queue: Vec<(usize, usize)> = Vec::new();
    for &(x, y) in pairs {
        if uf.union(x, y) {
            queue.push((x, y));
        }
    }
    // Every merge is witnessed by a pair; translating all witnessing pairs
    // by every polynomial x ↦ x ∨ t, x ↦ x ∧ t closes the relation.
    while let Some((x, y)) = queue.pop() {
        for t in 0..n {
            for (u, v) in [(l.join(x, t), l.join(y, t)), (l.meet(x, t), l.meet(y, t))] {
                if uf.union(u, v) {
                    queue.push((u, v));
                }
            }
        }
    }
    let ids: Vec<usize> = (0..n).map(|x| uf.find(x)).collect();
    Ok(Congruence::from_class_ids(l, &ids))
}

/// Smallest congruence contracting each `j` with its lower cover `j_*`.
pub fn congruence_generated(l: &Lattice, contracted: &[usize]) -> Result<Congruence> {
    let pairs = contracted
        .iter()
        .map(|&j| l.lower_star(j).map(|js| (j, js)))
        .collect::<Result<Vec<_>>>()?;
    congruence_from_pairs(l, &pairs)
}

/// Join-irreducibles `j` with `j ≡ j_*`.
pub fn contracted_join_irreducibles(l: &Lattice, theta: &Congruence) -> Vec<usize> {
    l.join_irreducibles()
        .iter()
        .copied()
        .filter(|&j| theta.equivalent(j, l.lower_star(j).expect("irreducible")))
        .collect()
}

fn not_congruence(axiom: &str, witness: Vec<usize>) -> Error {
    Error::NotACongruence {
        axiom: axiom.to_string(),
        witness,
    }
}

/// Validates a class assignment against the congruence axioms: classes are
/// intervals, `π↓` and `π↑` preserve order, and joins and meets respect
/// the classes.
pub fn check_congruence(l: &Lattice, ids: &[usize]) -> Result<Congruence> {
    let n = l.len();
    if ids.len() != n {
        return Err(Error::PreconditionViolated {
            reason: format!("partition covers {} of {n} elements", ids.len()),
        });
    }
    let theta = Congruence::from_class_ids(l, ids);
    let p = l.poset();
    let mut lo = vec![0; theta.classes.len()];
    let mut hi = vec![0; theta.classes.len()];
    for (c, class) in theta.classes.iter().enumerate() {
        let bottom = l.meet_set(class.iter().copied());
        let top = l.join_set(class.iter().copied());
        if theta.class_of[bottom] != c || theta.class_of[top] != c {
            return Err(not_congruence("interval", vec![class[0], bottom, top]));
        }
        if let Some(z) = p.interval(bottom, top).iter().find(|&z| theta.class_of[z] != c) {
            return Err(not_congruence("interval", vec![bottom, z, top]));
        }
        lo[c] = bottom;
        hi[c] = top;
    }
    for x in 0..n {
        for y in p.up_set(x).iter() {
            let (cx, cy) = (theta.class_of[x], theta.class_of[y]);
            if !l.leq(lo[cx], lo[cy]) {
                return Err(not_congruence("pi_down_order", vec![x, y]));
            }
            if !l.leq(hi[cx], hi[cy]) {
                return Err(not_congruence("pi_up_order", vec![x, y]));
            }
        }
    }
    for class in &theta.classes {
        for &x in class {
            for &y in class.iter().filter(|&&y| y > x) {
                for t in 0..n {
                    if !theta.equivalent(l.join(x, t), l.join(y, t))
                        || !theta.equivalent(l.meet(x, t), l.meet(y, t))
                    {
                        return Err(not_congruence("compatibility", vec![x, y, t]));
                    }
                }
            }
        }
    }
    Ok(theta)
}

/// `L / Θ` realised on the class minima.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub lattice: Lattice,
    /// Quotient id of the class of each element of `L`.
    pub pi_down: Vec<usize>,
    /// Element of `L` (the class minimum) behind each quotient id.
    pub minima: Vec<usize>,
}

pub fn quotient(l: &Lattice, theta: &Congruence) -> Result<Quotient> {
    let theta = check_congruence(l, &theta.class_of)?;
    let minima = theta.least.clone();
    let lattice = Lattice::from_poset(l.poset().induced(&minima))?;
    if l.is_join_semidistributive() && !lattice.is_join_semidistributive()
        || l.is_meet_semidistributive() && !lattice.is_meet_semidistributive()
    {
        return Err(Error::InvariantViolated {
            what: "quotient lost semidistributivity".into(),
        });
    }
    Ok(Quotient {
        lattice,
        pi_down: (0..l.len()).map(|x| theta.class_of[x]).collect(),
        minima,
    })
}

/// Is `x` the least element of its class? Computed directly and through the
/// canonical joinands of `x` (none may be contracted); the two answers must
/// agree.
pub fn element_in_pi_down_image(l: &Lattice, theta: &Congruence, x: usize) -> Result<bool> {
    l.poset().check(x)?;
    let direct = theta.pi_down(x) == x;
    let can = l.canonical_join_rep(x).ok_or(Error::PreconditionViolated {
        reason: format!("{x} has no canonical join representation"),
    })?;
    let via_joinands = can
        .joinands
        .iter()
        .all(|&j| !theta.equivalent(j, l.lower_star(j).expect("joinands are irreducible")));
    if direct != via_joinands {
        return Err(Error::InvariantViolated {
            what: format!("pi_down image tests disagree at {x}"),
        });
    }
    Ok(direct)
}

/// Every congruence of `l`, generated from each subset of the
/// join-irreducibles and deduplicated. Sorted by class assignment.
pub fn all_congruences(l: &Lattice) -> Result<Vec<Congruence>> {
    let irr = l.join_irreducibles();
    if irr.len() > 20 {
        return Err(Error::guard("join-irreducibles for congruence scan", irr.len(), 20));
    }
    let mut out: Vec<Congruence> = (0u64..1 << irr.len())
        .map(|mask| {
            let chosen: Vec<usize> = irr
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &j)| j)
                .collect();
            congruence_generated(l, &chosen)
        })
        .collect::<Result<_>>()?;
    out.sort_by(|a, b| a.class_of.cmp(&b.class_of));
    out.dedup();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{boolean, fixtures};

    #[test]
    fn trivial_congruences() {
        let b2 = boolean(2).unwrap();
        assert_eq!(congruence_generated(&b2, &[]).unwrap(), Congruence::identity(&b2));
        assert_eq!(congruence_generated(&b2, &[1, 2]).unwrap(), Congruence::full(&b2));
        let q = quotient(&b2, &Congruence::full(&b2)).unwrap();
        assert_eq!(q.lattice.len(), 1);
        let q = quotient(&b2, &Congruence::identity(&b2)).unwrap();
        assert_eq!(q.lattice.len(), 4);
    }

    #[test]
    fn forcing_in_n5() {
        // 0, a, b, c, 1 with b < c: contracting a forces c.
        let n5 = fixtures().n5;
        let theta = congruence_generated(&n5, &[1]).unwrap();
        assert_eq!(contracted_join_irreducibles(&n5, &theta), vec![1, 3]);
        let theta = congruence_generated(&n5, &[3]).unwrap();
        assert_eq!(contracted_join_irreducibles(&n5, &theta), vec![3]);
    }

    #[test]
    fn rejects_bad_partitions() {
        let b2 = boolean(2).unwrap();
        assert!(matches!(
            check_congruence(&b2, &[0, 1, 2, 0]),
            Err(Error::NotACongruence { .. })
        ));
        assert!(matches!(
            check_congruence(&b2, &[0, 0, 2, 3]),
            Err(Error::NotACongruence { .. })
        ));
        assert!(check_congruence(&b2, &[0, 0, 2, 2]).is_ok());
    }

    #[test]
    fn pi_down_tests_agree() {
        let b2 = boolean(2).unwrap();
        let theta = congruence_generated(&b2, &[1]).unwrap();
        assert_eq!(element_in_pi_down_image(&b2, &theta, 0), Ok(true));
        assert_eq!(element_in_pi_down_image(&b2, &theta, 1), Ok(false));
        assert_eq!(element_in_pi_down_image(&b2, &theta, 2), Ok(true));
        assert_eq!(element_in_pi_down_image(&b2, &theta, 3), Ok(false));
    }
}
