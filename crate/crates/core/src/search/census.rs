//! Breadth-first enumeration of congruence-uniform lattices by interval
//! doublings, grouped by labeled canonical join graph.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use dashmap::DashMap;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{intervals, DoublingSequence, LabeledLattice};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::lattice::Lattice;

/// Most doublings accepted by [`census`] and [`enumerate_congruence_uniform`].
pub const CENSUS_STEP_LIMIT: usize = 6;

/// One labeled canonical join graph of `G_n`, as persisted line by line.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CensusRecord {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
    /// Isomorphism classes of lattices with this labeled graph.
    pub lattice_count: usize,
    /// Lexicographically least doubling sequence found for the graph.
    pub witness_trace: DoublingSequence,
}

impl CensusRecord {
    pub fn graph(&self) -> Graph {
        Graph::new((1..=self.n).collect(), self.edges.iter().copied())
    }

    /// Replays the witness and checks that it produces the recorded graph.
    pub fn validate(&self) -> Result<LabeledLattice> {
        let in_range = |v: usize| (1..=self.n).contains(&v);
        let ll = self.witness_trace.replay()?;
        if self.edges.iter().any(|&(u, v)| !in_range(u) || !in_range(v) || u >= v)
            || ll.steps() != self.n
            || ll.labeled_cjg()? != self.graph()
        {
            return Err(Error::Format {
                message: format!(
                    "census record for n = {} does not match its witness trace",
                    self.n
                ),
            });
        }
        Ok(ll)
    }
}

#[derive(Clone, Debug, Default)]
pub struct CensusOptions {
    pub max_steps: usize,
    /// Worker threads; `None` uses the global pool.
    pub jobs: Option<usize>,
    /// Records from an earlier run. Levels present here are validated by
    /// replay and reused instead of being recounted.
    pub resume: Vec<CensusRecord>,
}

impl CensusOptions {
    pub fn new(max_steps: usize) -> Self {
        CensusOptions {
            max_steps,
            ..Default::default()
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusReport {
    /// `levels[n - 1]` holds the records of `G_n`, sorted by edge list.
    pub levels: Vec<Vec<CensusRecord>>,
    /// Number of labeled congruence-uniform lattices with `n` doublings;
    /// `None` for a final level taken whole from the resume records.
    pub labeled_lattices: Vec<Option<usize>>,
    /// Levels taken from the resume file.
    pub resumed: Vec<usize>,
}

impl CensusReport {
    /// `|G_n|` for `n = 1, 2, ...`.
    pub fn counts(&self) -> Vec<usize> {
        self.levels.iter().map(Vec::len).collect()
    }

    pub fn records(&self) -> impl Iterator<Item = &CensusRecord> {
        self.levels.iter().flatten()
    }

    pub fn to_jsonl(&self) -> String {
        self.records()
            .map(|r| serde_json::to_string(r).expect("records serialise") + "\n")
            .collect()
    }
}

/// Parses JSON-lines census records, skipping blank lines.
pub fn parse_census_jsonl(text: &str) -> Result<Vec<CensusRecord>> {
    text.lines()
        .enumerate()
        .filter(|(_, line)| !line.trim().is_empty())
        .map(|(i, line)| {
            serde_json::from_str(line).map_err(|e| Error::Format {
                message: format!("census line {}: {e}", i + 1),
            })
        })
        .collect()
}

/// Labeled canonical join graph of `G_n` with the lattices realising it,
/// one per isomorphism class, each with its least doubling sequence.
#[derive(Clone, Debug)]
pub struct CuClass {
    pub graph: Graph,
    pub lattices: Vec<(DoublingSequence, Lattice)>,
}

type Edges = Vec<(usize, usize)>;

/// Every labeled lattice obtained from `frontier` by one more doubling, one
/// per labeled isomorphism class, keeping the least trace. Each is mapped
/// through `summarize` once; the result is sorted by trace so it does not
/// depend on scheduling.
fn expand<T: Send + Sync>(
    frontier: &[LabeledLattice],
    summarize: impl Fn(LabeledLattice) -> Result<T> + Sync,
) -> Result<Vec<(DoublingSequence, T)>> {
    let store: DashMap<Vec<u64>, (DoublingSequence, T)> = DashMap::new();
    frontier.par_iter().try_for_each(|ll| -> Result<()> {
        for (a, b) in intervals(&ll.lattice) {
            let next = ll.double(a, b)?;
            let key = next.key();
            if let Some(mut cur) = store.get_mut(&key) {
                if next.trace < cur.0 {
                    cur.0 = next.trace;
                }
                continue;
            }
            let trace = next.trace.clone();
            let value = summarize(next)?;
            store
                .entry(key)
                .and_modify(|cur| {
                    if trace < cur.0 {
                        cur.0 = trace.clone();
                    }
                })
                .or_insert((trace, value));
        }
        Ok(())
    })?;
    let mut out: Vec<(DoublingSequence, T)> = store.into_iter().map(|(_, v)| v).collect();
    out.par_sort_by(|x, y| x.0.cmp(&y.0));
    Ok(out)
}

/// Rebuilds the frontier from the stored traces, so that element ids follow
/// the least trace of each labeled lattice.
fn replay_all<T: Sync>(level: &[(DoublingSequence, T)]) -> Result<Vec<LabeledLattice>> {
    level.par_iter().map(|(trace, _)| trace.replay()).collect()
}

/// Labeled canonical join graph and canonical form, with semidistributivity
/// and flagness asserted.
fn certify(ll: LabeledLattice) -> Result<(Edges, Vec<u8>)> {
    let cjc = ll.labeled_cjc()?;
    if let Some(face) = cjc.flag_witness() {
        return Err(Error::InvariantViolated {
            what: format!(
                "canonical join complex of {:?} is not flag at {face:?}",
                ll.trace.steps
            ),
        });
    }
    Ok((cjc.one_skeleton().edges().collect(), ll.lattice.canonical_form()))
}

/// Groups a certified level by labeled graph; within a graph, one least
/// trace per isomorphism class of lattices.
fn group(level: Vec<(DoublingSequence, (Edges, Vec<u8>))>) -> BTreeMap<Edges, Vec<DoublingSequence>> {
    let mut groups: BTreeMap<Edges, BTreeMap<Vec<u8>, DoublingSequence>> = BTreeMap::new();
    for (trace, (edges, form)) in level {
        let slot = groups.entry(edges).or_default().entry(form).or_insert(trace.clone());
        if trace < *slot {
            *slot = trace;
        }
    }
    groups
        .into_iter()
        .map(|(edges, forms)| {
            let mut traces: Vec<DoublingSequence> = forms.into_values().collect();
            traces.sort();
            (edges, traces)
        })
        .collect()
}

fn with_jobs<T: Send>(jobs: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T> {
    match jobs {
        None => Ok(f()),
        Some(j) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(j.max(1))
                .build()
                .map_err(|e| Error::PreconditionViolated {
                    reason: format!("thread pool: {e}"),
                })?;
            Ok(pool.install(f))
        }
    }
}

/// The classes of `G_k`: every congruence-uniform lattice reachable by `k`
/// interval doublings, grouped by labeled canonical join graph.
pub fn enumerate_congruence_uniform(k: usize) -> Result<Vec<CuClass>> {
    if k > CENSUS_STEP_LIMIT {
        return Err(Error::guard("doublings", k, CENSUS_STEP_LIMIT));
    }
    let mut frontier = vec![LabeledLattice::trivial()];
    for _ in 1..k {
        frontier = replay_all(&expand(&frontier, |_| Ok(()))?)?;
    }
    let last = if k == 0 {
        vec![(DoublingSequence::default(), certify(LabeledLattice::trivial())?)]
    } else {
        expand(&frontier, certify)?
    };
    group(last)
        .into_iter()
        .map(|(edges, traces)| {
            let lattices = traces
                .into_iter()
                .map(|t| Ok((t.clone(), t.replay()?.lattice)))
                .collect::<Result<_>>()?;
            Ok(CuClass {
                graph: Graph::new((1..=k).collect(), edges),
                lattices,
            })
        })
        .collect()
}

/// Computes `G_1, ..., G_max_steps`. The counts are derived data of this
/// enumeration; no published values exist to compare against.
pub fn census(opts: &CensusOptions) -> Result<CensusReport> {
    if opts.max_steps > CENSUS_STEP_LIMIT {
        return Err(Error::guard("doublings", opts.max_steps, CENSUS_STEP_LIMIT));
    }
    let mut resumed: BTreeMap<usize, Vec<CensusRecord>> = BTreeMap::new();
    for r in &opts.resume {
        if r.n >= 1 && r.n <= opts.max_steps {
            resumed.entry(r.n).or_default().push(r.clone());
        }
    }
    with_jobs(opts.jobs, || {
        for records in resumed.values() {
            records.par_iter().try_for_each(|r| r.validate().map(|_| ()))?;
        }
        let mut levels = Vec::new();
        let mut labeled_lattices = Vec::new();
        let mut frontier = vec![LabeledLattice::trivial()];
        for n in 1..=opts.max_steps {
            let last = n == opts.max_steps;
            if let Some(rs) = resumed.get(&n) {
                let mut rs = rs.clone();
                rs.sort_by(|x, y| x.edges.cmp(&y.edges));
                levels.push(rs);
                if last {
                    labeled_lattices.push(None);
                } else {
                    let level = expand(&frontier, |_| Ok(()))?;
                    labeled_lattices.push(Some(level.len()));
                    frontier = replay_all(&level)?;
                }
                continue;
            }
            let level = expand(&frontier, certify)?;
            labeled_lattices.push(Some(level.len()));
            if !last {
                frontier = replay_all(&level)?;
            }
            levels.push(
                group(level)
                    .into_iter()
                    .map(|(edges, traces)| CensusRecord {
                        n,
                        edges,
                        lattice_count: traces.len(),
                        witness_trace: traces[0].clone(),
                    })
                    .collect(),
            );
        }
        Ok(CensusReport {
            levels,
            labeled_lattices,
            resumed: resumed.keys().copied().collect(),
        })
    })?
}

/// What was removed from a census graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Deletion {
    Edge(usize, usize),
    /// The vertex is removed and the labels above it shift down by one.
    Vertex(usize),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClosureRow {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
    pub deleted: Deletion,
    pub in_census: bool,
}

/// For each graph in `G_k`, whether each one-edge deletion lies in `G_k`
/// and each one-vertex deletion lies in `G_{k-1}`. This only records what
/// the census contains at this size.
pub fn census_subgraph_closure_report(k: usize) -> Result<Vec<ClosureRow>> {
    let report = census(&CensusOptions::new(k))?;
    let key_set = |n: usize| -> HashSet<Edges> {
        if n == 0 {
            return HashSet::from([Vec::new()]);
        }
        report.levels[n - 1].iter().map(|r| r.edges.clone()).collect()
    };
    if k == 0 {
        return Ok(Vec::new());
    }
    let same = key_set(k);
    let below = key_set(k - 1);
    let mut rows = Vec::new();
    for r in &report.levels[k - 1] {
        for &(u, v) in &r.edges {
            let rest: Edges = r.edges.iter().copied().filter(|&e| e != (u, v)).collect();
            rows.push(ClosureRow {
                n: k,
                edges: r.edges.clone(),
                deleted: Deletion::Edge(u, v),
                in_census: same.contains(&rest),
            });
        }
        for x in 1..=k {
            let shift = |y: usize| if y > x { y - 1 } else { y };
            let rest: BTreeSet<(usize, usize)> = r
                .edges
                .iter()
                .filter(|&&(u, v)| u != x && v != x)
                .map(|&(u, v)| (shift(u), shift(v)))
                .collect();
            rows.push(ClosureRow {
                n: k,
                edges: r.edges.clone(),
                deleted: Deletion::Vertex(x),
                in_census: below.contains(&rest.into_iter().collect::<Edges>()),
            });
        }
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{boolean, chain, fixtures};

    #[test]
    fn one_doubling() {
        let classes = enumerate_congruence_uniform(1).unwrap();
        assert_eq!(classes.len(), 1);
        assert_eq!(classes[0].graph, Graph::new(vec![1], []));
        assert!(classes[0].lattices[0].1.is_isomorphic(&chain(1).unwrap()));
    }

    #[test]
    fn singleton_doublings_of_b2_share_a_graph() {
        let b2 = DoublingSequence::new(vec![(0, 0), (0, 1)]).replay().unwrap();
        let mut graphs = Vec::new();
        let mut forms = BTreeSet::new();
        for x in 0..4 {
            let d = b2.double(x, x).unwrap();
            graphs.push(d.labeled_cjg().unwrap());
            forms.insert(d.lattice.canonical_form());
        }
        graphs.dedup();
        assert_eq!(graphs.len(), 1);
        assert_eq!(forms.len(), 3);
        let graph = graphs.pop().unwrap();
        let class = enumerate_congruence_uniform(3)
            .unwrap()
            .into_iter()
            .find(|c| c.graph == graph)
            .unwrap();
        let n5 = fixtures().n5;
        let lower = crate::constructions::ordinal_sum(&chain(0).unwrap(), &boolean(2).unwrap());
        let upper = crate::constructions::ordinal_sum(&boolean(2).unwrap(), &chain(0).unwrap());
        for want in [&n5, &lower, &upper] {
            assert!(class.lattices.iter().any(|(_, l)| l.is_isomorphic(want)));
        }
    }

    #[test]
    fn census_is_stable_and_resumable() {
        let first = census(&CensusOptions::new(3)).unwrap();
        assert_eq!(first.counts()[..2], [1, 2]);
        let mut opts = CensusOptions::new(3);
        opts.jobs = Some(1);
        opts.resume = parse_census_jsonl(&first.to_jsonl()).unwrap();
        let second = census(&opts).unwrap();
        assert_eq!(first.levels, second.levels);
        assert_eq!(second.resumed, vec![1, 2, 3]);
    }

    #[test]
    fn closure_report_small() {
        assert!(census_subgraph_closure_report(1).unwrap().iter().all(|r| r.in_census));
        assert!(census_subgraph_closure_report(3).unwrap().iter().all(|r| r.in_census));
    }
}
