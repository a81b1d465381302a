//! Brute-force oracle: enumerate every `n`-edge subset of `K_B`, find the
//! true maximum triangle count and the isomorphism classes attaining it, and
//! compare both against the closed forms in [`crate::extremal`].
//!
//! Subsets are visited in colexicographic order. The rank range is cut into
//! contiguous chunks that workers scan independently; the per-chunk results
//! (a maximum, then a set of canonical forms) merge associatively, so the
//! outcome does not depend on the worker count.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::canon::{canonical_form, CanonError, CanonicalForm};
use crate::extremal::{
    binomial, build_extremal, choose2, max_triangles, maximizer_catalogue, triangular_decompose,
    ExtremalError,
};
use crate::graph::{
    complete_graph, contract_pair, contracted_index, pair_count, pair_from_index, Graph,
    MAX_VERTICES,
};
use crate::graph6;

pub const DEFAULT_WORK_CEILING: u128 = 200_000_000;

/// Largest vertex count swept by [`verify_rivin_average`].
pub const MAX_SWEEP_VERTICES: usize = 7;

const CHUNKS: u128 = 256;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("edge count must be at least 1")]
    NoEdges,
    #[error("vertex budget {0} outside 3..={MAX_VERTICES}")]
    BadBudget(usize),
    #[error("{edges} edges do not fit on {budget} vertices")]
    TooManyEdges { edges: u64, budget: usize },
    #[error("workload of {estimate} edge subsets exceeds the ceiling of {ceiling}")]
    Infeasible { estimate: u128, ceiling: u128 },
    #[error("n = {n}: {detail}")]
    Mismatch { n: u64, detail: String },
    #[error("exhaustive sweep limited to {MAX_SWEEP_VERTICES} vertices, asked for {0}")]
    SweepTooLarge(usize),
    #[error("need three components containing an edge, found {0}")]
    NotEnoughComponents(usize),
    #[error(transparent)]
    Canon(#[from] CanonError),
    #[error(transparent)]
    Extremal(#[from] ExtremalError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum EnumerationMode {
    /// Budget `r + 2`, enough room for every catalogue member.
    Structural,
    /// Budget `n` (at least 3), independent of any structural argument.
    Exhaustive,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationTask {
    edge_count: u64,
    vertex_budget: usize,
    mode: EnumerationMode,
}

impl EnumerationTask {
    pub fn new(edge_count: u64, mode: EnumerationMode) -> Result<Self, OracleError> {
        let budget = match mode {
            EnumerationMode::Structural => triangular_decompose(edge_count).r + 2,
            EnumerationMode::Exhaustive => edge_count.min(MAX_VERTICES as u64),
        };
        Self::with_budget(edge_count, (budget as usize).max(3), mode)
    }

    pub fn with_budget(
        edge_count: u64,
        vertex_budget: usize,
        mode: EnumerationMode,
    ) -> Result<Self, OracleError> {
        if edge_count == 0 {
            return Err(OracleError::NoEdges);
        }
        if !(3..=MAX_VERTICES).contains(&vertex_budget) {
            return Err(OracleError::BadBudget(vertex_budget));
        }
        if edge_count > pair_count(vertex_budget) as u64 {
            return Err(OracleError::TooManyEdges {
                edges: edge_count,
                budget: vertex_budget,
            });
        }
        Ok(Self {
            edge_count,
            vertex_budget,
            mode,
        })
    }

    pub fn edge_count(&self) -> u64 {
        self.edge_count
    }

    pub fn vertex_budget(&self) -> usize {
        self.vertex_budget
    }

    pub fn mode(&self) -> EnumerationMode {
        self.mode
    }

    /// `C(C(B,2), n)`.
    pub fn subset_count(&self) -> u128 {
        binomial(
            pair_count(self.vertex_budget) as u128,
            self.edge_count as u128,
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationConfig {
    /// Worker threads; 0 lets the pool choose.
    pub jobs: usize,
    pub work_ceiling: u128,
}

impl Default for EnumerationConfig {
    fn default() -> Self {
        Self {
            jobs: 0,
            work_ceiling: DEFAULT_WORK_CEILING,
        }
    }
}

fn forms_as_graph6<S: Serializer>(forms: &[CanonicalForm], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(forms.iter().map(|f| f.graph6.as_str()))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MaximizerReport {
    #[serde(rename = "n")]
    pub edge_count: u64,
    pub r: u64,
    pub t: u64,
    pub mode: EnumerationMode,
    pub vertex_budget: usize,
    pub subsets: u128,
    pub formula_max: u64,
    pub observed_max: u64,
    #[serde(rename = "classes", serialize_with = "forms_as_graph6")]
    pub maximizer_classes: Vec<CanonicalForm>,
    pub catalogue_match: bool,
}

impl MaximizerReport {
    pub fn passes(&self) -> bool {
        self.formula_max == self.observed_max && self.catalogue_match
    }
}

/// Colex unranking: the `k`-subset of `0..m` with the given rank.
fn unrank_colex(mut rank: u128, k: usize, m: usize) -> Vec<usize> {
    let mut out = vec![0; k];
    let mut c = m;
    for i in (1..=k).rev() {
        c -= 1;
        while binomial(c as u128, i as u128) > rank {
            c -= 1;
        }
        rank -= binomial(c as u128, i as u128);
        out[i - 1] = c;
    }
    out
}

/// Advances to the colex successor; false after the last subset.
fn next_colex(comb: &mut [usize], m: usize) -> bool {
    let k = comb.len();
    for i in 0..k {
        let limit = if i + 1 < k { comb[i + 1] } else { m };
        if comb[i] + 1 < limit {
            comb[i] += 1;
            for (j, slot) in comb.iter_mut().enumerate().take(i) {
                *slot = j;
            }
            return true;
        }
    }
    false
}

struct Scanner {
    pairs: Vec<(usize, usize)>,
    edge_count: usize,
    budget: usize,
    total: u128,
}

impl Scanner {
    fn new(task: &EnumerationTask) -> Self {
        let m = pair_count(task.vertex_budget);
        Self {
            pairs: (0..m).map(pair_from_index).collect(),
            edge_count: task.edge_count as usize,
            budget: task.vertex_budget,
            total: task.subset_count(),
        }
    }

    fn chunks(&self) -> Vec<(u128, u128)> {
        let count = CHUNKS.min(self.total).max(1);
        (0..count)
            .map(|c| (self.total * c / count, self.total * (c + 1) / count))
            .filter(|(a, b)| a < b)
            .collect()
    }

    /// Calls `visit(rows, triangles)` for every subset with rank in `range`.
    fn scan(&self, (start, end): (u128, u128), mut visit: impl FnMut(&[u64], u64)) {
        let mut comb = unrank_colex(start, self.edge_count, self.pairs.len());
        let mut rows = [0u64; MAX_VERTICES];
        let mut rank = start;
        loop {
            for &p in &comb {
                let (i, j) = self.pairs[p];
                rows[i] |= 1 << j;
                rows[j] |= 1 << i;
            }
            let per_edge: u32 = comb
                .iter()
                .map(|&p| {
                    let (i, j) = self.pairs[p];
                    (rows[i] & rows[j]).count_ones()
                })
                .sum();
            visit(&rows[..self.budget], (per_edge / 3) as u64);
            for &p in &comb {
                let (i, j) = self.pairs[p];
                rows[i] = 0;
                rows[j] = 0;
            }
            rank += 1;
            if rank == end || !next_colex(&mut comb, self.pairs.len()) {
                break;
            }
        }
    }
}

fn with_pool<T: Send>(jobs: usize, f: impl FnOnce() -> T + Send) -> T {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .expect("thread pool");
    pool.install(f)
}

/// Canonical forms of every catalogue member for `n` edges.
pub fn catalogue_forms(n: u64) -> Result<BTreeSet<CanonicalForm>, OracleError> {
    maximizer_catalogue(n)
        .into_iter()
        .map(|shape| Ok(canonical_form(&build_extremal(shape)?)?))
        .collect()
}

pub fn enumerate_max(
    task: &EnumerationTask,
    config: &EnumerationConfig,
) -> Result<MaximizerReport, OracleError> {
    let subsets = task.subset_count();
    if subsets > config.work_ceiling {
        return Err(OracleError::Infeasible {
            estimate: subsets,
            ceiling: config.work_ceiling,
        });
    }
    let scanner = Scanner::new(task);
    let chunks = scanner.chunks();

    let (observed_max, classes) = with_pool(config.jobs, || {
        let observed_max = chunks
            .par_iter()
            .map(|&range| {
                let mut best = 0;
                scanner.scan(range, |_, tri| best = best.max(tri));
                best
            })
            .reduce(|| 0, u64::max);

        let classes = chunks
            .par_iter()
            .map(|&range| {
                let mut found = BTreeSet::new();
                let mut err = None;
                scanner.scan(range, |rows, tri| {
                    if tri == observed_max && err.is_none() {
                        let g = Graph::from_rows(rows).expect("budget within vertex cap");
                        match canonical_form(&g) {
                            Ok(f) => {
                                found.insert(f);
                            }
                            Err(e) => err = Some(e),
                        }
                    }
                });
                match err {
                    Some(e) => Err(OracleError::from(e)),
                    None => Ok(found),
                }
            })
            .try_reduce(BTreeSet::new, |mut a, b| {
                a.extend(b);
                Ok(a)
            });
        (observed_max, classes)
    });
    let classes = classes?;

    let d = triangular_decompose(task.edge_count);
    let expected = catalogue_forms(task.edge_count)?;
    Ok(MaximizerReport {
        edge_count: task.edge_count,
        r: d.r,
        t: d.t,
        mode: task.mode,
        vertex_budget: task.vertex_budget,
        subsets,
        formula_max: max_triangles(task.edge_count),
        observed_max,
        catalogue_match: classes == expected,
        maximizer_classes: classes.into_iter().collect(),
    })
}

/// Runs the structural-mode oracle for every `n` in `1..=max_n` and fails on
/// the first disagreement with the closed form or the catalogue.
pub fn verify_characterization(
    max_n: u64,
    config: &EnumerationConfig,
) -> Result<Vec<MaximizerReport>, OracleError> {
    let mut reports = Vec::new();
    for n in 1..=max_n {
        let task = EnumerationTask::new(n, EnumerationMode::Structural)?;
        let report = enumerate_max(&task, config)?;
        check_report(&report)?;
        reports.push(report);
    }
    Ok(reports)
}

/// Error describing how `report` deviates from the closed form and catalogue.
pub fn check_report(report: &MaximizerReport) -> Result<(), OracleError> {
    let n = report.edge_count;
    if report.observed_max != report.formula_max {
        return Err(OracleError::Mismatch {
            n,
            detail: format!(
                "observed maximum {} but formula gives {}",
                report.observed_max, report.formula_max
            ),
        });
    }
    if !report.catalogue_match {
        let expected = catalogue_forms(n)?;
        let observed: BTreeSet<_> = report.maximizer_classes.iter().cloned().collect();
        let extra: Vec<_> = observed
            .difference(&expected)
            .map(|f| f.graph6.clone())
            .collect();
        let missing: Vec<_> = expected
            .difference(&observed)
            .map(|f| f.graph6.clone())
            .collect();
        return Err(OracleError::Mismatch {
            n,
            detail: format!(
                "maximizers outside catalogue {extra:?}, catalogue members not found {missing:?}"
            ),
        });
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RivinAverageReport {
    pub vertex_count: usize,
    pub m: u64,
    pub graphs_checked: u64,
    /// Graphs with at least one edge and `E <= C(m,2)`.
    pub applicable: u64,
    pub equality_cases: u64,
    pub holds: bool,
    pub witness: Option<String>,
}

/// Checks `3T <= (m-2)E` for every labeled graph on `vertex_count` vertices
/// with `1 <= E <= C(m,2)`, and that equality only happens for `K_m`
/// (after stripping isolated vertices). Edgeless graphs are counted but
/// have no per-edge average to bound.
pub fn verify_rivin_average(
    vertex_count: usize,
    m: u64,
) -> Result<RivinAverageReport, OracleError> {
    if vertex_count > MAX_SWEEP_VERTICES {
        return Err(OracleError::SweepTooLarge(vertex_count));
    }
    let pairs: Vec<(usize, usize)> = (0..pair_count(vertex_count)).map(pair_from_index).collect();
    let km = if m as usize <= vertex_count {
        Some(canonical_form(
            &complete_graph(m as usize).expect("m <= 7"),
        )?)
    } else {
        None
    };
    let cap = choose2(m);
    let mut report = RivinAverageReport {
        vertex_count,
        m,
        graphs_checked: 0,
        applicable: 0,
        equality_cases: 0,
        holds: true,
        witness: None,
    };
    for mask in 0u64..(1 << pairs.len()) {
        report.graphs_checked += 1;
        let edges = mask.count_ones() as u64;
        if edges == 0 || edges > cap {
            continue;
        }
        report.applicable += 1;
        let list: Vec<_> = pairs
            .iter()
            .enumerate()
            .filter(|(p, _)| mask >> p & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        let g = Graph::from_edges(vertex_count, &list).expect("pairs in range");
        let lhs = 3 * g.triangle_count() as i64;
        let rhs = (m as i64 - 2) * edges as i64;
        if lhs > rhs {
            report.holds = false;
            report.witness = Some(format!("{}: 3T = {lhs} > {rhs}", graph6::encode(&g)));
            break;
        }
        if lhs == rhs {
            report.equality_cases += 1;
            let is_km = match &km {
                Some(km) => canonical_form(&g)? == *km,
                None => false,
            };
            if !is_km {
                report.holds = false;
                report.witness = Some(format!("{}: equality without K_{m}", graph6::encode(&g)));
                break;
            }
        }
    }
    Ok(report)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContractionGain {
    /// One edge `(v_i, w_i)` from each of the first three components that have edges.
    pub chosen: [(usize, usize); 3],
    pub result: Graph,
    /// Indices of the merged vertices `u_1, u_2, u_3` in `result`.
    pub merged: [usize; 3],
    pub edges_before: usize,
    pub edges_after: usize,
    pub triangles_before: u64,
    pub triangles_after: u64,
}

/// With one edge `v_i w_i` from each of three components, merges
/// `v_1~w_3`, `v_2~w_1`, `v_3~w_2`. The merged vertices form a new triangle
/// and no edge is lost.
pub fn three_component_contraction(g: &Graph) -> Result<ContractionGain, OracleError> {
    let label = g.components();
    let mut chosen: Vec<(usize, usize)> = Vec::new();
    let mut seen_components = Vec::new();
    for (i, j) in g.edges() {
        if !seen_components.contains(&label[i]) {
            seen_components.push(label[i]);
            chosen.push((i, j));
        }
    }
    if chosen.len() < 3 {
        return Err(OracleError::NotEnoughComponents(chosen.len()));
    }
    // order by component label so the choice is deterministic
    chosen.sort_by_key(|&(i, _)| label[i]);
    let chosen = [chosen[0], chosen[1], chosen[2]];
    let [(v1, w1), (v2, w2), (v3, w3)] = chosen;

    let mut current = g.clone();
    let mut index: Vec<usize> = (0..g.vertex_count()).collect();
    for (a, b) in [(v1, w3), (v2, w1), (v3, w2)] {
        let (ia, ib) = (index[a], index[b]);
        current = contract_pair(&current, ia, ib).expect("distinct live vertices");
        for slot in index.iter_mut() {
            *slot = contracted_index(*slot, ia, ib);
        }
    }
    Ok(ContractionGain {
        chosen,
        merged: [index[v1], index[v2], index[v3]],
        edges_before: g.edge_count(),
        edges_after: current.edge_count(),
        triangles_before: g.triangle_count(),
        triangles_after: current.triangle_count(),
        result: current,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::disjoint_union;

    fn serial() -> EnumerationConfig {
        EnumerationConfig {
            jobs: 1,
            ..Default::default()
        }
    }

    #[test]
    fn colex_unrank_and_successor_agree() {
        let (k, m) = (3, 7);
        let mut comb = unrank_colex(0, k, m);
        assert_eq!(comb, vec![0, 1, 2]);
        let mut rank = 0u128;
        loop {
            assert_eq!(unrank_colex(rank, k, m), comb);
            rank += 1;
            if !next_colex(&mut comb, m) {
                break;
            }
        }
        assert_eq!(rank, binomial(7, 3));
    }

    #[test]
    fn chunks_cover_the_range() {
        let task = EnumerationTask::with_budget(3, 5, EnumerationMode::Exhaustive).unwrap();
        let s = Scanner::new(&task);
        let mut visited = 0u128;
        for range in s.chunks() {
            s.scan(range, |_, _| visited += 1);
        }
        assert_eq!(visited, binomial(10, 3));
    }

    #[test]
    fn six_edges_on_five_vertices() {
        let task = EnumerationTask::with_budget(6, 5, EnumerationMode::Structural).unwrap();
        assert_eq!(task.subset_count(), 210);
        let r = enumerate_max(&task, &serial()).unwrap();
        assert_eq!(r.observed_max, 4);
        assert_eq!(
            r.maximizer_classes,
            vec![canonical_form(&complete_graph(4).unwrap()).unwrap()]
        );
        assert!(r.catalogue_match);
    }

    #[test]
    fn seven_edges_have_two_classes() {
        let task = EnumerationTask::with_budget(7, 6, EnumerationMode::Structural).unwrap();
        let r = enumerate_max(&task, &serial()).unwrap();
        assert_eq!(r.observed_max, 4);
        assert_eq!(r.maximizer_classes.len(), 2);
        assert!(r.passes());
    }

    #[test]
    fn single_edge() {
        let task = EnumerationTask::with_budget(1, 3, EnumerationMode::Exhaustive).unwrap();
        let r = enumerate_max(&task, &serial()).unwrap();
        assert_eq!(r.observed_max, 0);
        assert_eq!(
            r.maximizer_classes,
            vec![canonical_form(&complete_graph(2).unwrap()).unwrap()]
        );
        assert_eq!(
            EnumerationTask::new(1, EnumerationMode::Exhaustive)
                .unwrap()
                .vertex_budget(),
            3
        );
    }

    #[test]
    fn task_validation() {
        assert_eq!(
            EnumerationTask::new(0, EnumerationMode::Structural),
            Err(OracleError::NoEdges)
        );
        assert_eq!(
            EnumerationTask::with_budget(4, 2, EnumerationMode::Structural),
            Err(OracleError::BadBudget(2))
        );
        assert_eq!(
            EnumerationTask::with_budget(4, 63, EnumerationMode::Structural),
            Err(OracleError::BadBudget(63))
        );
        assert!(matches!(
            EnumerationTask::with_budget(11, 5, EnumerationMode::Structural),
            Err(OracleError::TooManyEdges { .. })
        ));
        let task = EnumerationTask::new(30, EnumerationMode::Exhaustive).unwrap();
        let err = enumerate_max(&task, &serial()).unwrap_err();
        assert!(matches!(
            err,
            OracleError::Infeasible {
                ceiling: DEFAULT_WORK_CEILING,
                ..
            }
        ));
    }

    #[test]
    fn worker_count_does_not_change_the_report() {
        let task = EnumerationTask::new(9, EnumerationMode::Structural).unwrap();
        let one = enumerate_max(&task, &serial()).unwrap();
        let many = enumerate_max(
            &task,
            &EnumerationConfig {
                jobs: 4,
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(one, many);
    }

    #[test]
    fn characterization_small() {
        let reports = verify_characterization(6, &EnumerationConfig::default()).unwrap();
        assert_eq!(reports.len(), 6);
        assert!(reports.iter().all(MaximizerReport::passes));
    }

    #[test]
    fn mismatch_is_reported() {
        let task = EnumerationTask::new(5, EnumerationMode::Structural).unwrap();
        let mut r = enumerate_max(&task, &serial()).unwrap();
        r.observed_max += 1;
        assert!(matches!(
            check_report(&r),
            Err(OracleError::Mismatch { n: 5, .. })
        ));
    }

    #[test]
    fn rivin_average_examples() {
        let r = verify_rivin_average(5, 5).unwrap();
        assert!(r.holds, "{r:?}");
        assert_eq!(r.graphs_checked, 1 << 10);
        let r = verify_rivin_average(4, 4).unwrap();
        assert!(r.holds);
        assert_eq!(r.equality_cases, 1);
        assert!(verify_rivin_average(8, 5).is_err());
    }

    #[test]
    fn contraction_on_three_components() {
        let g = disjoint_union(
            &disjoint_union(&complete_graph(3).unwrap(), &complete_graph(2).unwrap()).unwrap(),
            &complete_graph(4).unwrap(),
        )
        .unwrap();
        let out = three_component_contraction(&g).unwrap();
        assert_eq!(out.edges_after, out.edges_before);
        assert!(out.triangles_after > out.triangles_before);
        let [a, b, c] = out.merged;
        assert!(
            out.result.has_edge(a, b) && out.result.has_edge(b, c) && out.result.has_edge(a, c)
        );

        let two = disjoint_union(&complete_graph(3).unwrap(), &complete_graph(2).unwrap()).unwrap();
        assert_eq!(
            three_component_contraction(&two),
            Err(OracleError::NotEnoughComponents(2))
        );
    }
}
