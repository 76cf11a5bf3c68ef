//! Simplicial complexes attached to lattices: canonical join and meet
//! complexes, crosscut complexes, flagness and the κ face maps.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::lattice::{Lattice, Side};

/// An abstract simplicial complex on element ids. Faces are sorted vertex
/// lists; the void complex has no faces at all, not even the empty one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertices: Vec<usize>,
    faces: BTreeSet<Vec<usize>>,
    facets: Vec<Vec<usize>>,
}

/// JSON form: `{"vertices": [...], "facets": [[...], ...]}`.
#[derive(Serialize)]
struct ComplexJson<'a> {
    vertices: &'a [usize],
    facets: &'a [Vec<usize>],
}

impl SimplicialComplex {
    /// Builds a complex from a face family that is already closed under
    /// taking subsets.
    pub fn from_closed_faces(mut vertices: Vec<usize>, faces: BTreeSet<Vec<usize>>) -> Self {
        vertices.sort_unstable();
        vertices.dedup();
        let facets = faces
            .iter()
            .filter(|f| {
                vertices.iter().all(|v| {
                    f.binary_search(v).is_ok() || !faces.contains(&insert_sorted(f, *v))
                })
            })
            .cloned()
            .collect();
        SimplicialComplex {
            vertices,
            faces,
            facets,
        }
    }

    /// The complex generated by `facets` (all their subsets).
    pub fn from_facets(vertices: Vec<usize>, facets: &[Vec<usize>]) -> Self {
        let mut faces = BTreeSet::new();
        for f in facets {
            let mut f = f.clone();
            f.sort_unstable();
            f.dedup();
            for mask in 0u64..(1 << f.len()) {
                faces.insert(
                    f.iter()
                        .enumerate()
                        .filter(|(i, _)| mask >> i & 1 == 1)
                        .map(|(_, &v)| v)
                        .collect(),
                );
            }
        }
        SimplicialComplex::from_closed_faces(vertices, faces)
    }

    /// Full simplex on `vertices`.
    pub fn simplex(vertices: &[usize]) -> Self {
        SimplicialComplex::from_facets(vertices.to_vec(), &[vertices.to_vec()])
    }

    /// Boundary of the simplex on `vertices`: every proper subset.
    pub fn simplex_boundary(vertices: &[usize]) -> Self {
        let mut v = vertices.to_vec();
        v.sort_unstable();
        let facets: Vec<Vec<usize>> = (0..v.len())
            .map(|skip| {
                v.iter()
                    .enumerate()
                    .filter(|&(i, _)| i != skip)
                    .map(|(_, &x)| x)
                    .collect()
            })
            .collect();
        if facets.is_empty() {
            // The boundary of the empty simplex is void.
            return SimplicialComplex::from_closed_faces(v, BTreeSet::new());
        }
        SimplicialComplex::from_facets(v, &facets)
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn faces(&self) -> impl Iterator<Item = &Vec<usize>> + '_ {
        self.faces.iter()
    }

    /// Number of faces, counting the empty face when present.
    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn facets(&self) -> &[Vec<usize>] {
        &self.facets
    }

    pub fn contains(&self, face: &[usize]) -> bool {
        self.faces.contains(face)
    }

    pub fn has_empty_face(&self) -> bool {
        self.faces.contains(&Vec::new())
    }

    pub fn is_void(&self) -> bool {
        self.faces.is_empty()
    }

    /// Largest face size minus one; `None` for the void complex.
    pub fn dimension(&self) -> Option<isize> {
        self.faces.iter().map(|f| f.len() as isize - 1).max()
    }

    /// `f[k]` counts faces with `k + 1` vertices; the empty face is left out.
    pub fn f_vector(&self) -> Vec<usize> {
        let top = self.faces.iter().map(Vec::len).max().unwrap_or(0);
        let mut f = vec![0; top];
        for face in &self.faces {
            if !face.is_empty() {
                f[face.len() - 1] += 1;
            }
        }
        f
    }

    pub fn one_skeleton(&self) -> Graph {
        Graph::new(
            self.vertices.clone(),
            self.faces
                .iter()
                .filter(|f| f.len() == 2)
                .map(|f| (f[0], f[1])),
        )
    }

    /// `None` when the complex is flag; otherwise the lexicographically
    /// first clique of the 1-skeleton of least size that is not a face.
    /// All its proper subsets are faces, so it is a minimal non-face.
    pub fn flag_witness(&self) -> Option<Vec<usize>> {
        let g = self.one_skeleton();
        if let Some(&v) = self.vertices.iter().find(|&&v| !self.contains(&[v])) {
            return Some(vec![v]);
        }
        let mut level: Vec<Vec<usize>> = g.edges().map(|(u, v)| vec![u, v]).collect();
        while !level.is_empty() {
            let mut next = Vec::new();
            for clique in &level {
                let last = *clique.last().expect("cliques are non-empty");
                for &v in self.vertices.iter().filter(|&&v| v > last) {
                    if clique.iter().all(|&u| g.has_edge(u, v)) {
                        let mut bigger = clique.clone();
                        bigger.push(v);
                        if !self.contains(&bigger) {
                            return Some(bigger);
                        }
                        next.push(bigger);
                    }
                }
            }
            level = next;
        }
        None
    }

    pub fn is_flag(&self) -> bool {
        self.flag_witness().is_none()
    }

    /// Subcomplex of faces contained in `keep`.
    pub fn induced(&self, keep: &[usize]) -> SimplicialComplex {
        let keep: BTreeSet<usize> = keep.iter().copied().collect();
        SimplicialComplex::from_closed_faces(
            self.vertices
                .iter()
                .copied()
                .filter(|v| keep.contains(v))
                .collect(),
            self.faces
                .iter()
                .filter(|f| f.iter().all(|v| keep.contains(v)))
                .cloned()
                .collect(),
        )
    }

    /// Renames vertices through `f`, which must be injective.
    pub fn map_vertices(&self, f: impl Fn(usize) -> usize) -> SimplicialComplex {
        SimplicialComplex::from_closed_faces(
            self.vertices.iter().map(|&v| f(v)).collect(),
            self.faces
                .iter()
                .map(|face| {
                    let mut g: Vec<usize> = face.iter().map(|&v| f(v)).collect();
                    g.sort_unstable();
                    g
                })
                .collect(),
        )
    }

    /// Simplicial join: faces are unions of a face of each factor. Vertex
    /// sets must be disjoint.
    pub fn join(&self, other: &SimplicialComplex) -> SimplicialComplex {
        let mut faces = BTreeSet::new();
        for a in &self.faces {
            for b in &other.faces {
                let mut f = a.clone();
                f.extend_from_slice(b);
                f.sort_unstable();
                faces.insert(f);
            }
        }
        let mut vertices = self.vertices.clone();
        vertices.extend_from_slice(&other.vertices);
        SimplicialComplex::from_closed_faces(vertices, faces)
    }

    /// Disjoint union on disjoint vertex sets.
    pub fn disjoint_union(&self, other: &SimplicialComplex) -> SimplicialComplex {
        let mut faces = self.faces.clone();
        faces.extend(other.faces.iter().cloned());
        let mut vertices = self.vertices.clone();
        vertices.extend_from_slice(&other.vertices);
        SimplicialComplex::from_closed_faces(vertices, faces)
    }

    /// Adds an isolated vertex.
    pub fn with_isolated_vertex(&self, v: usize) -> SimplicialComplex {
        let mut faces = self.faces.clone();
        faces.insert(Vec::new());
        faces.insert(vec![v]);
        let mut vertices = self.vertices.clone();
        vertices.push(v);
        SimplicialComplex::from_closed_faces(vertices, faces)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(ComplexJson {
            vertices: &self.vertices,
            facets: &self.facets,
        })
        .expect("complexes serialize")
    }
}

fn insert_sorted(face: &[usize], v: usize) -> Vec<usize> {
    let mut f = face.to_vec();
    let pos = f.partition_point(|&x| x < v);
    f.insert(pos, v);
    f
}

fn sd_error(l: &Lattice, side: Side) -> Option<Error> {
    match side {
        Side::Join => l
            .join_sd_witness()
            .map(|t| Error::NotJoinSemidistributive { x: t.x, y: t.y, z: t.z }),
        Side::Meet => l
            .meet_sd_witness()
            .map(|t| Error::NotMeetSemidistributive { x: t.x, y: t.y, z: t.z }),
    }
}

/// `w ↦ can(w)` for every element of a join-semidistributive lattice.
pub fn canonical_join_map(l: &Lattice) -> Result<Vec<Vec<usize>>> {
    if let Some(e) = sd_error(l, Side::Join) {
        return Err(e);
    }
    (0..l.len())
        .map(|w| {
            l.canonical_join_rep(w)
                .map(|r| r.joinands)
                .ok_or_else(|| Error::InvariantViolated {
                    what: format!("element {w} has no canonical join representation"),
                })
        })
        .collect()
}

/// `w ↦` canonical meet representation, for a meet-semidistributive lattice.
pub fn canonical_meet_map(l: &Lattice) -> Result<Vec<Vec<usize>>> {
    if let Some(e) = sd_error(l, Side::Meet) {
        return Err(e);
    }
    (0..l.len())
        .map(|w| {
            l.canonical_meet_rep(w)
                .map(|r| r.meetands)
                .ok_or_else(|| Error::InvariantViolated {
                    what: format!("element {w} has no canonical meet representation"),
                })
        })
        .collect()
}

fn complex_from_map(vertices: &[usize], map: Vec<Vec<usize>>) -> Result<SimplicialComplex> {
    let n = map.len();
    let faces: BTreeSet<Vec<usize>> = map.into_iter().collect();
    if faces.len() != n {
        return Err(Error::InvariantViolated {
            what: "two elements share a canonical representation".into(),
        });
    }
    Ok(SimplicialComplex::from_closed_faces(vertices.to_vec(), faces))
}

/// Faces are the canonical join representations; vertices are the
/// join-irreducibles.
pub fn canonical_join_complex(l: &Lattice) -> Result<SimplicialComplex> {
    complex_from_map(l.join_irreducibles(), canonical_join_map(l)?)
}

pub fn canonical_meet_complex(l: &Lattice) -> Result<SimplicialComplex> {
    complex_from_map(l.meet_irreducibles(), canonical_meet_map(l)?)
}

pub fn canonical_join_graph(l: &Lattice) -> Result<Graph> {
    Ok(canonical_join_complex(l)?.one_skeleton())
}

/// Largest atom count for which crosscut complexes are built by subset scan.
pub const CROSSCUT_ATOM_LIMIT: usize = 24;

/// Atom subsets of `[x, y]` whose join lies strictly below `y`.
pub fn crosscut_complex(l: &Lattice, x: usize, y: usize) -> Result<SimplicialComplex> {
    if !l.leq(x, y) {
        return Err(Error::NotComparable { x, y });
    }
    let atoms = l.atoms_of_interval(x, y);
    if atoms.len() > CROSSCUT_ATOM_LIMIT {
        return Err(Error::TooLarge {
            limit: CROSSCUT_ATOM_LIMIT,
        });
    }
    let mut faces = BTreeSet::new();
    for mask in 0u64..(1 << atoms.len()) {
        let subset = subset_of(&atoms, mask);
        if l.join_set(subset.iter().copied().chain([x])) != y {
            faces.insert(subset);
        }
    }
    Ok(SimplicialComplex::from_closed_faces(atoms, faces))
}

fn subset_of(items: &[usize], mask: u64) -> Vec<usize> {
    items
        .iter()
        .enumerate()
        .filter(|(i, _)| mask >> i & 1 == 1)
        .map(|(_, &v)| v)
        .collect()
}

/// An interval with a proper subset of its atoms joining to the top.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CrosscutWitness {
    pub x: usize,
    pub y: usize,
    pub atoms: Vec<usize>,
}

/// Intervals of `l` with `x < y`, smallest first (ties by `(x, y)`).
pub fn intervals_by_size(l: &Lattice) -> Vec<(usize, usize)> {
    let p = l.poset();
    let mut out: Vec<(usize, usize, usize)> = (0..l.len())
        .flat_map(|x| {
            p.up_set(x)
                .iter()
                .filter(move |&y| y != x)
                .map(move |y| (p.interval(x, y).count(), x, y))
        })
        .collect();
    out.sort_unstable();
    out.into_iter().map(|(_, x, y)| (x, y)).collect()
}

/// Smallest proper atom subset of `[x, y]` joining to `y`, if any.
fn crosscut_failure(l: &Lattice, x: usize, y: usize) -> Option<Vec<usize>> {
    let atoms = l.atoms_of_interval(x, y);
    let k = atoms.len();
    if k < 2 {
        return None;
    }
    // Joins are monotone, so some proper subset reaches y iff one missing a
    // single atom does.
    let any = (0..k).any(|skip| {
        l.join_set(
            atoms
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != skip)
                .map(|(_, &a)| a)
                .chain([x]),
        ) == y
    });
    if !any {
        return None;
    }
    let mut masks: Vec<u64> = (1u64..(1 << k) - 1).collect();
    masks.sort_by_key(|m| (m.count_ones(), subset_of(&atoms, *m)));
    masks
        .into_iter()
        .map(|m| subset_of(&atoms, m))
        .find(|s| l.join_set(s.iter().copied().chain([x])) == y)
}

/// `None` when every proper atom subset of every interval joins strictly
/// below the top of the interval.
pub fn crosscut_simplicial_witness(l: &Lattice) -> Option<CrosscutWitness> {
    intervals_by_size(l).into_iter().find_map(|(x, y)| {
        crosscut_failure(l, x, y).map(|atoms| CrosscutWitness { x, y, atoms })
    })
}

pub fn is_crosscut_simplicial(l: &Lattice) -> bool {
    crosscut_simplicial_witness(l).is_none()
}

/// First interval with a Möbius value outside `{-1, 0, 1}`.
pub fn mobius_range_witness(l: &Lattice) -> Option<(usize, usize, i64)> {
    let p = l.poset();
    (0..l.len()).find_map(|x| {
        let row = p.mobius_row(x);
        row.iter()
            .enumerate()
            .find_map(|(y, m)| m.filter(|m| m.abs() > 1).map(|m| (x, y, m)))
    })
}

pub fn mobius_range_check(l: &Lattice) -> bool {
    mobius_range_witness(l).is_none()
}

fn require_sd(l: &Lattice) -> Result<()> {
    if let Some(e) = sd_error(l, Side::Join).or_else(|| sd_error(l, Side::Meet)) {
        return Err(e);
    }
    Ok(())
}

fn sorted(mut v: Vec<usize>) -> Vec<usize> {
    v.sort_unstable();
    v
}

/// Is `face` the canonical join representation of its join?
fn is_join_face(l: &Lattice, face: &[usize]) -> bool {
    let face = sorted(face.to_vec());
    l.canonical_join_rep(l.join_set(face.iter().copied()))
        .is_some_and(|r| r.joinands == face)
}

fn is_meet_face(l: &Lattice, face: &[usize]) -> bool {
    let face = sorted(face.to_vec());
    l.canonical_meet_rep(l.meet_set(face.iter().copied()))
        .is_some_and(|r| r.meetands == face)
}

fn kappa_all(l: &Lattice, face: &[usize]) -> Result<Vec<usize>> {
    face.iter()
        .map(|&j| {
            l.kappa(j)?.ok_or_else(|| Error::InvariantViolated {
                what: format!("kappa({j}) is undefined"),
            })
        })
        .collect::<Result<Vec<_>>>()
        .map(sorted)
}

fn kappa_star_all(l: &Lattice, face: &[usize]) -> Result<Vec<usize>> {
    face.iter()
        .map(|&m| {
            l.kappa_star(m)?.ok_or_else(|| Error::InvariantViolated {
                what: format!("kappa_star({m}) is undefined"),
            })
        })
        .collect::<Result<Vec<_>>>()
        .map(sorted)
}

/// `{κ(j) : j ∈ F}` for a face `F` of the canonical join complex.
pub fn kappa_face_map(l: &Lattice, face: &[usize]) -> Result<Vec<usize>> {
    require_sd(l)?;
    if !is_join_face(l, face) {
        return Err(Error::NotAFace {
            face: face.to_vec(),
        });
    }
    kappa_all(l, face)
}

/// `{κ*(m) : m ∈ G}` for a face `G` of the canonical meet complex.
pub fn kappa_star_face_map(l: &Lattice, face: &[usize]) -> Result<Vec<usize>> {
    require_sd(l)?;
    if !is_meet_face(l, face) {
        return Err(Error::NotAFace {
            face: face.to_vec(),
        });
    }
    kappa_star_all(l, face)
}

/// `can(⋀κ(F))`: κ acting on the canonical join complex.
pub fn kappa_complex_rotation(l: &Lattice, face: &[usize]) -> Result<Vec<usize>> {
    let image = kappa_face_map(l, face)?;
    let w = l.meet_set(image);
    Ok(l.canonical_join_rep(w)
        .expect("semidistributive lattices have canonical join representations")
        .joinands)
}

/// Canonical meet representation of `⋁κ*(G)`: κ* acting on the canonical
/// meet complex.
pub fn kappa_star_complex_rotation(l: &Lattice, face: &[usize]) -> Result<Vec<usize>> {
    let image = kappa_star_face_map(l, face)?;
    let w = l.join_set(image);
    Ok(l.canonical_meet_rep(w)
        .expect("semidistributive lattices have canonical meet representations")
        .meetands)
}

/// Checks that κ maps the canonical join complex isomorphically onto the
/// canonical meet complex, face by face. Returns the first offending face.
pub fn kappa_isomorphism_witness(l: &Lattice) -> Result<Option<Vec<usize>>> {
    require_sd(l)?;
    let cjc = canonical_join_complex(l)?;
    let cmc = canonical_meet_complex(l)?;
    if cjc.face_count() != cmc.face_count() || !l.kappa_bijection_check()? {
        return Ok(Some(Vec::new()));
    }
    let mut images = BTreeSet::new();
    for f in cjc.faces() {
        let g = kappa_all(l, f)?;
        if g.len() != f.len() || !cmc.contains(&g) || !images.insert(g) {
            return Ok(Some(f.clone()));
        }
    }
    Ok(None)
}
