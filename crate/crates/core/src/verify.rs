//! Exhaustive desk-scale verification: enumerate connected k-uniform
//! hypergraphs and connected multigraphs up to isomorphism, sweep the
//! transversal bound's equality characterization and the matching and
//! edge-coloring counterparts over them, and check the bipartite matching
//! condition with certificates.
//!
//! Enumeration is level-by-level on the number of edges: every canonical
//! representative with m edges is extended by one new edge in every way
//! (a subset of existing vertices plus fresh ones), candidates are
//! canonicalized, and the next level is the deduplicated set. Every
//! hypergraph without isolated vertices arises this way from deleting one
//! edge, so each level is complete; connectivity is filtered at emission.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::canon;
use crate::extremal::{classify, ExtremalClass};
use crate::hypergraph::Hypergraph;
use crate::multigraph::{
    chromatic_index_exact, contains_shannon_submultigraph, matching_bound_check,
    MatchingBoundVerdict, Multigraph,
};
use crate::transversal::tau_value;
use crate::{Error, Rational};

/// Parameters of an enumeration sweep.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepConfig {
    /// uniformity of the enumerated hypergraphs
    pub k: usize,
    /// largest vertex count
    pub n_max: usize,
    /// largest edge count
    pub m_max: usize,
    /// 1 = simple edges; larger values allow duplicate edges up to this count
    pub multiplicity_cap: usize,
    /// advisory wall-clock budget; enforced by the caller's monitor
    pub time_budget_secs: Option<u64>,
}

impl SweepConfig {
    pub fn simple(k: usize, n_max: usize, m_max: usize) -> SweepConfig {
        SweepConfig { k, n_max, m_max, multiplicity_cap: 1, time_budget_secs: None }
    }

    /// Multi-edge mode with the default duplicate cap of 2.
    pub fn multi(k: usize, n_max: usize, m_max: usize) -> SweepConfig {
        SweepConfig { k, n_max, m_max, multiplicity_cap: 2, time_budget_secs: None }
    }

    pub fn with_multiplicity_cap(mut self, cap: usize) -> SweepConfig {
        self.multiplicity_cap = cap;
        self
    }

    pub fn allow_multi_edges(&self) -> bool {
        self.multiplicity_cap > 1
    }

    pub fn validate(&self) -> Result<(), Error> {
        if self.k < 1 {
            return Err(Error::BadArgument("uniformity must be positive"));
        }
        if self.n_max < self.k {
            return Err(Error::BadArgument("n_max must be at least k"));
        }
        if self.m_max < 1 {
            return Err(Error::BadArgument("m_max must be at least 1"));
        }
        if self.multiplicity_cap < 1 {
            return Err(Error::BadArgument("multiplicity cap must be at least 1"));
        }
        Ok(())
    }
}

/// Progress snapshot handed to the monitor after each checked instance.
#[derive(Debug, Clone, Copy)]
pub struct SweepProgress {
    pub instances_checked: u64,
    pub current_level: usize,
}

/// Caller-supplied budget and progress hook. Sweeps honor a stop request at
/// the next level boundary so resumption never loses a partial level.
pub trait SweepMonitor {
    fn should_stop(&mut self, progress: &SweepProgress) -> bool {
        let _ = progress;
        false
    }

    /// Wall-clock seconds spent, reported into the sweep runtime; zero when
    /// the environment has no clock.
    fn elapsed_secs(&self) -> f64 {
        0.0
    }
}

/// Monitor that never stops; for environments without budgets.
pub struct NullMonitor;

impl SweepMonitor for NullMonitor {}

/// Level-by-level generator of canonical representatives.
struct LevelGen {
    k: usize,
    n_max: usize,
    m_max: usize,
    cap: usize,
    words: usize,
}

impl LevelGen {
    fn new(cfg: &SweepConfig) -> LevelGen {
        LevelGen {
            k: cfg.k,
            n_max: cfg.n_max,
            m_max: cfg.m_max,
            cap: cfg.multiplicity_cap,
            words: canon::words_for(cfg.n_max),
        }
    }

    /// Level 1: the single-edge hypergraph on k vertices.
    fn first_level(&self) -> Vec<Hypergraph> {
        let edge: Vec<usize> = (0..self.k).collect();
        vec![Hypergraph::new(self.k, vec![edge]).unwrap()]
    }

    /// All canonical representatives with one more edge.
    fn extend_level(&self, reps: &[Hypergraph]) -> Vec<Hypergraph> {
        let words = self.words;
        let mut next: BTreeSet<(usize, Vec<u64>)> = BTreeSet::new();
        let mut subset = Vec::with_capacity(self.k);
        for rep in reps {
            let n = rep.num_vertices();
            let mut masks = vec![0u64; (rep.num_edges() + 1) * words];
            for (e, edge) in rep.edges().iter().enumerate() {
                for &v in edge {
                    masks[e * words + v / 64] |= 1u64 << (v % 64);
                }
            }
            let j_min = self.k.saturating_sub(self.n_max - n);
            for j in j_min..=self.k.min(n) {
                subset.clear();
                self.extend_with_subsets(rep, &mut masks, n, j, 0, &mut subset, &mut next);
            }
        }
        next.into_iter()
            .map(|(n, form)| hypergraph_from_masks(n, words, &form))
            .collect()
    }

    #[allow(clippy::too_many_arguments)]
    fn extend_with_subsets(
        &self,
        rep: &Hypergraph,
        masks: &mut Vec<u64>,
        n: usize,
        j: usize,
        from: usize,
        subset: &mut Vec<usize>,
        next: &mut BTreeSet<(usize, Vec<u64>)>,
    ) {
        if subset.len() == j {
            if j == self.k {
                // duplicating an existing edge is bounded by the cap
                let copies =
                    rep.edges().iter().filter(|e| e.as_slice() == subset.as_slice()).count();
                if copies >= self.cap {
                    return;
                }
            }
            let fresh = self.k - j;
            let n_new = n + fresh;
            let words = self.words;
            let m = rep.num_edges();
            for w in 0..words {
                masks[m * words + w] = 0;
            }
            for &v in subset.iter() {
                masks[m * words + v / 64] |= 1u64 << (v % 64);
            }
            for v in n..n_new {
                masks[m * words + v / 64] |= 1u64 << (v % 64);
            }
            let outcome = canon::canonicalize_masks(n_new, words, masks);
            next.insert((n_new, outcome.form));
            return;
        }
        let need = j - subset.len();
        for v in from..=n.saturating_sub(need) {
            subset.push(v);
            self.extend_with_subsets(rep, masks, n, j, v + 1, subset, next);
            subset.pop();
        }
    }
}

fn hypergraph_from_masks(n: usize, words: usize, flat: &[u64]) -> Hypergraph {
    let m = flat.len().checked_div(words).unwrap_or(0);
    let mut edges = Vec::with_capacity(m);
    for e in 0..m {
        let mut edge = Vec::new();
        for w in 0..words {
            let mut bits = flat[e * words + w];
            while bits != 0 {
                edge.push(w * 64 + bits.trailing_zeros() as usize);
                bits &= bits - 1;
            }
        }
        edges.push(edge);
    }
    // lexicographic edge order, matching the deterministic file format
    edges.sort();
    Hypergraph::new(n, edges).expect("canonical masks decode to a valid hypergraph")
}

/// Stream of connected k-uniform hypergraphs up to isomorphism: exactly one
/// canonical representative per class with `n <= n_max`, `1 <= m <= m_max`
/// and no isolated vertices.
pub struct HypergraphEnumerator {
    gen: LevelGen,
    level_m: usize,
    current: Vec<Hypergraph>,
    idx: usize,
}

impl HypergraphEnumerator {
    fn start(cfg: &SweepConfig) -> Result<HypergraphEnumerator, Error> {
        cfg.validate()?;
        let gen = LevelGen::new(cfg);
        let current = gen.first_level();
        Ok(HypergraphEnumerator { gen, level_m: 1, current, idx: 0 })
    }
}

impl Iterator for HypergraphEnumerator {
    type Item = Hypergraph;

    fn next(&mut self) -> Option<Hypergraph> {
        loop {
            while self.idx < self.current.len() {
                let h = &self.current[self.idx];
                self.idx += 1;
                if h.is_connected() {
                    return Some(h.clone());
                }
            }
            if self.level_m >= self.gen.m_max {
                return None;
            }
            self.current = self.gen.extend_level(&self.current);
            self.level_m += 1;
            self.idx = 0;
            if self.current.is_empty() {
                return None;
            }
        }
    }
}

/// One representative per isomorphism class of connected k-uniform
/// hypergraphs within the configured limits.
pub fn enumerate_hypergraphs(cfg: &SweepConfig) -> Result<HypergraphEnumerator, Error> {
    HypergraphEnumerator::start(cfg)
}

/// Connected multigraphs up to isomorphism with at most `v_max` vertices and
/// `m_max` edge instances, enumerated through their 2-uniform hypergraphs.
pub struct MultigraphEnumerator {
    inner: HypergraphEnumerator,
}

impl Iterator for MultigraphEnumerator {
    type Item = Multigraph;

    fn next(&mut self) -> Option<Multigraph> {
        self.inner
            .next()
            .map(|h| Multigraph::from_two_uniform(&h).expect("enumerated instances are 2-uniform"))
    }
}

pub fn enumerate_multigraphs(v_max: usize, m_max: usize) -> Result<MultigraphEnumerator, Error> {
    let cfg = SweepConfig::multi(2, v_max, m_max).with_multiplicity_cap(m_max);
    Ok(MultigraphEnumerator { inner: HypergraphEnumerator::start(&cfg)? })
}

/// Trailer-level counts shared by every sweep report.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepSummary {
    pub instances_checked: u64,
    pub violations: usize,
    pub equality_cases: usize,
    pub truncated: bool,
    pub runtime_secs: f64,
}

/// Resumable sweep state: the last fully processed level plus the report so
/// far. Resuming extends to the following level and continues.
#[derive(Debug, Clone)]
pub struct SweepCheckpoint<R> {
    pub level: usize,
    pub representatives: Vec<Hypergraph>,
    pub report: R,
}

/// A finished or truncated sweep; `checkpoint` is present exactly when the
/// monitor stopped the sweep early.
#[derive(Debug, Clone)]
pub struct SweepOutcome<R> {
    pub report: R,
    pub checkpoint: Option<SweepCheckpoint<R>>,
}

struct LevelRun {
    truncated: bool,
    state: Option<(usize, Vec<Hypergraph>)>,
}

fn run_levels(
    gen: &LevelGen,
    start: (usize, Vec<Hypergraph>),
    skip_first_emission: bool,
    monitor: &mut dyn SweepMonitor,
    instances: &mut u64,
    check: &mut dyn FnMut(&Hypergraph) -> bool,
) -> LevelRun {
    let (mut level_m, mut reps) = start;
    let mut skip = skip_first_emission;
    loop {
        if !skip {
            let mut stop = false;
            for h in &reps {
                if h.is_connected() {
                    if check(h) {
                        *instances += 1;
                    }
                    let progress =
                        SweepProgress { instances_checked: *instances, current_level: level_m };
                    if monitor.should_stop(&progress) {
                        stop = true;
                    }
                }
            }
            if stop {
                return LevelRun { truncated: true, state: Some((level_m, reps)) };
            }
        }
        skip = false;
        if level_m >= gen.m_max {
            return LevelRun { truncated: false, state: None };
        }
        reps = gen.extend_level(&reps);
        level_m += 1;
        if reps.is_empty() {
            return LevelRun { truncated: false, state: None };
        }
    }
}

/// A hypergraph at which the bound or its equality characterization failed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Theorem1Violation {
    pub hypergraph: Hypergraph,
    pub tau: usize,
    pub bound: Rational,
}

/// Report of sweeping the transversal bound over every enumerated instance.
#[derive(Debug, Clone, Default)]
pub struct Theorem1Report {
    pub instances_checked: u64,
    /// equality cases: canonical form plus its classification
    pub equality: Vec<(Hypergraph, ExtremalClass)>,
    pub violations: Vec<Theorem1Violation>,
    pub truncated: bool,
    pub runtime_secs: f64,
}

impl Theorem1Report {
    pub fn summary(&self) -> SweepSummary {
        SweepSummary {
            instances_checked: self.instances_checked,
            violations: self.violations.len(),
            equality_cases: self.equality.len(),
            truncated: self.truncated,
            runtime_secs: self.runtime_secs,
        }
    }
}

fn theorem1_check(h: &Hypergraph, k: usize, report: &mut Theorem1Report) {
    let tau = tau_value(h);
    let lhs = tau * (3 * k / 2);
    let rhs = h.num_vertices() + (k / 2) * h.num_edges();
    if lhs < rhs {
        return;
    }
    let bound = crate::transversal::cm_bound(h, k).expect("enumerated instances are k-uniform");
    if lhs > rhs {
        report.violations.push(Theorem1Violation { hypergraph: h.clone(), tau, bound });
        return;
    }
    match classify(h, k).expect("enumerated instances are k-uniform") {
        class @ (ExtremalClass::IsEk { .. } | ExtremalClass::IsTk { .. }) => {
            report.equality.push((h.clone(), class));
        }
        _ => {
            report.violations.push(Theorem1Violation { hypergraph: h.clone(), tau, bound });
        }
    }
}

/// Sweeps every enumerated connected k-uniform hypergraph: asserts the exact
/// bound inequality and that each equality case is one of the two families.
/// Violations are collected, never thrown.
pub fn theorem1_sweep(
    cfg: &SweepConfig,
    monitor: &mut dyn SweepMonitor,
) -> Result<SweepOutcome<Theorem1Report>, Error> {
    cfg.validate()?;
    if cfg.k != 2 && cfg.k < 4 {
        return Err(Error::BadArgument("equality characterization needs k = 2 or k >= 4"));
    }
    let gen = LevelGen::new(cfg);
    let start = (1, gen.first_level());
    theorem1_drive(cfg, gen, start, false, Theorem1Report::default(), monitor)
}

/// Continues a truncated sweep from its checkpoint.
pub fn theorem1_sweep_resume(
    cfg: &SweepConfig,
    checkpoint: SweepCheckpoint<Theorem1Report>,
    monitor: &mut dyn SweepMonitor,
) -> Result<SweepOutcome<Theorem1Report>, Error> {
    cfg.validate()?;
    let gen = LevelGen::new(cfg);
    let mut report = checkpoint.report;
    report.truncated = false;
    theorem1_drive(cfg, gen, (checkpoint.level, checkpoint.representatives), true, report, monitor)
}

fn theorem1_drive(
    cfg: &SweepConfig,
    gen: LevelGen,
    start: (usize, Vec<Hypergraph>),
    skip_first: bool,
    mut report: Theorem1Report,
    monitor: &mut dyn SweepMonitor,
) -> Result<SweepOutcome<Theorem1Report>, Error> {
    let k = cfg.k;
    let mut instances = report.instances_checked;
    let run = {
        let report = &mut report;
        let mut check = |h: &Hypergraph| {
            theorem1_check(h, k, report);
            true
        };
        run_levels(&gen, start, skip_first, monitor, &mut instances, &mut check)
    };
    report.instances_checked = instances;
    report.truncated = run.truncated;
    report.runtime_secs += monitor.elapsed_secs();
    let checkpoint = run.state.map(|(level, representatives)| SweepCheckpoint {
        level,
        representatives,
        report: report.clone(),
    });
    Ok(SweepOutcome { report, checkpoint })
}

/// A multigraph at which the matching bound or its characterization failed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Theorem2Violation {
    pub multigraph: Multigraph,
    pub verdict: MatchingBoundVerdict,
}

#[derive(Debug, Clone, Default)]
pub struct Theorem2Report {
    pub instances_checked: u64,
    /// equality cases with whether each is the extremal multigraph
    pub equality: Vec<(Multigraph, bool)>,
    pub violations: Vec<Theorem2Violation>,
    pub truncated: bool,
    pub runtime_secs: f64,
}

impl Theorem2Report {
    pub fn summary(&self) -> SweepSummary {
        SweepSummary {
            instances_checked: self.instances_checked,
            violations: self.violations.len(),
            equality_cases: self.equality.len(),
            truncated: self.truncated,
            runtime_secs: self.runtime_secs,
        }
    }
}

/// Sweeps connected multigraphs with maximum degree at most `d`: checks
/// `alpha' * floor(3d/2) >= m` everywhere and that equality happens exactly
/// at the degree-`d` extremal multigraph.
pub fn theorem2_sweep(
    d: usize,
    v_max: usize,
    m_max: usize,
    monitor: &mut dyn SweepMonitor,
) -> Result<SweepOutcome<Theorem2Report>, Error> {
    if d < 4 {
        return Err(Error::BadArgument("matching bound characterization needs d >= 4"));
    }
    let cfg = SweepConfig::multi(2, v_max, m_max).with_multiplicity_cap(m_max);
    cfg.validate()?;
    let gen = LevelGen::new(&cfg);
    let start = (1, gen.first_level());
    theorem2_drive(d, gen, start, false, Theorem2Report::default(), monitor)
}

pub fn theorem2_sweep_resume(
    d: usize,
    v_max: usize,
    m_max: usize,
    checkpoint: SweepCheckpoint<Theorem2Report>,
    monitor: &mut dyn SweepMonitor,
) -> Result<SweepOutcome<Theorem2Report>, Error> {
    if d < 4 {
        return Err(Error::BadArgument("matching bound characterization needs d >= 4"));
    }
    let cfg = SweepConfig::multi(2, v_max, m_max).with_multiplicity_cap(m_max);
    cfg.validate()?;
    let gen = LevelGen::new(&cfg);
    let mut report = checkpoint.report;
    report.truncated = false;
    theorem2_drive(d, gen, (checkpoint.level, checkpoint.representatives), true, report, monitor)
}

fn theorem2_drive(
    d: usize,
    gen: LevelGen,
    start: (usize, Vec<Hypergraph>),
    skip_first: bool,
    mut report: Theorem2Report,
    monitor: &mut dyn SweepMonitor,
) -> Result<SweepOutcome<Theorem2Report>, Error> {
    let mut instances = report.instances_checked;
    let run = {
        let report = &mut report;
        let mut check = |h: &Hypergraph| {
            let g = Multigraph::from_two_uniform(h).expect("2-uniform by construction");
            if g.max_degree() > d {
                return false;
            }
            let verdict = matching_bound_check(&g, d).expect("preconditions filtered");
            if verdict.equality {
                report.equality.push((g.clone(), verdict.is_shannon_or_empty));
            }
            if !verdict.bound_holds || !verdict.iff_holds() {
                report.violations.push(Theorem2Violation { multigraph: g, verdict });
            }
            true
        };
        run_levels(&gen, start, skip_first, monitor, &mut instances, &mut check)
    };
    report.instances_checked = instances;
    report.truncated = run.truncated;
    report.runtime_secs += monitor.elapsed_secs();
    let checkpoint = run.state.map(|(level, representatives)| SweepCheckpoint {
        level,
        representatives,
        report: report.clone(),
    });
    Ok(SweepOutcome { report, checkpoint })
}

/// A multigraph whose chromatic index contradicts the coloring bound or the
/// structure forced at the bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VizingViolation {
    pub multigraph: Multigraph,
    pub chromatic_index: usize,
}

#[derive(Debug, Clone, Default)]
pub struct VizingReport {
    pub instances_checked: u64,
    /// instances with `chi' = floor(3d/2)`, with whether the 3-vertex
    /// extremal submultigraph is present
    pub extremal_cases: Vec<(Multigraph, bool)>,
    pub violations: Vec<VizingViolation>,
    pub truncated: bool,
    pub runtime_secs: f64,
}

impl VizingReport {
    pub fn summary(&self) -> SweepSummary {
        SweepSummary {
            instances_checked: self.instances_checked,
            violations: self.violations.len(),
            equality_cases: self.extremal_cases.len(),
            truncated: self.truncated,
            runtime_secs: self.runtime_secs,
        }
    }
}

/// Sweeps connected multigraphs with maximum degree exactly `d`: any instance
/// with `chi' = floor(3d/2)` must contain the 3-vertex extremal multigraph
/// when `d >= 4`; for `d = 2` such instances (odd cycles of length >= 5) are
/// recorded as the expected exceptions. A chromatic index above the bound is
/// always a violation.
pub fn vizing_sweep(
    d: usize,
    v_max: usize,
    m_max: usize,
    monitor: &mut dyn SweepMonitor,
) -> Result<SweepOutcome<VizingReport>, Error> {
    if d < 2 {
        return Err(Error::BadArgument("maximum degree must be at least 2"));
    }
    let cfg = SweepConfig::multi(2, v_max, m_max).with_multiplicity_cap(m_max);
    cfg.validate()?;
    let gen = LevelGen::new(&cfg);
    let start = (1, gen.first_level());
    vizing_drive(d, gen, start, false, VizingReport::default(), monitor)
}

pub fn vizing_sweep_resume(
    d: usize,
    v_max: usize,
    m_max: usize,
    checkpoint: SweepCheckpoint<VizingReport>,
    monitor: &mut dyn SweepMonitor,
) -> Result<SweepOutcome<VizingReport>, Error> {
    if d < 2 {
        return Err(Error::BadArgument("maximum degree must be at least 2"));
    }
    let cfg = SweepConfig::multi(2, v_max, m_max).with_multiplicity_cap(m_max);
    cfg.validate()?;
    let gen = LevelGen::new(&cfg);
    let mut report = checkpoint.report;
    report.truncated = false;
    vizing_drive(d, gen, (checkpoint.level, checkpoint.representatives), true, report, monitor)
}

fn vizing_drive(
    d: usize,
    gen: LevelGen,
    start: (usize, Vec<Hypergraph>),
    skip_first: bool,
    mut report: VizingReport,
    monitor: &mut dyn SweepMonitor,
) -> Result<SweepOutcome<VizingReport>, Error> {
    let bound = 3 * d / 2;
    let mut instances = report.instances_checked;
    let run = {
        let report = &mut report;
        let mut check = |h: &Hypergraph| {
            let g = Multigraph::from_two_uniform(h).expect("2-uniform by construction");
            if g.max_degree() != d {
                return false;
            }
            let (chi, _) = chromatic_index_exact(&g).expect("enumerated instances have edges");
            if chi > bound {
                report.violations.push(VizingViolation { multigraph: g, chromatic_index: chi });
                return true;
            }
            if chi == bound {
                let has_extremal = contains_shannon_submultigraph(&g, d).is_some();
                report.extremal_cases.push((g.clone(), has_extremal));
                if d >= 4 && !has_extremal {
                    report.violations.push(VizingViolation { multigraph: g, chromatic_index: chi });
                }
            }
            true
        };
        run_levels(&gen, start, skip_first, monitor, &mut instances, &mut check)
    };
    report.instances_checked = instances;
    report.truncated = run.truncated;
    report.runtime_secs += monitor.elapsed_secs();
    let checkpoint = run.state.map(|(level, representatives)| SweepCheckpoint {
        level,
        representatives,
        report: report.clone(),
    });
    Ok(SweepOutcome { report, checkpoint })
}

/// Certificate outcome for whether one side of a bipartite graph can be
/// matched into the other: either a saturating matching or a subset whose
/// neighborhood is smaller than itself. The two witnesses are mutually
/// exclusive.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HallOutcome {
    Saturating { matching: Vec<(usize, usize)> },
    Deficient { subset: Vec<usize>, neighborhood: Vec<usize> },
}

impl HallOutcome {
    pub fn saturates(&self) -> bool {
        matches!(self, HallOutcome::Saturating { .. })
    }
}

/// Decides whether every vertex of the X side (indices `0..x_size`) can be
/// matched into the Y side, with a certificate either way. Adjacency pairs
/// are `(x, y)` indices.
///
/// Panics if a pair is out of range.
pub fn hall_check(x_size: usize, y_size: usize, adjacency: &[(usize, usize)]) -> HallOutcome {
    let mut adj = vec![Vec::new(); x_size];
    for &(x, y) in adjacency {
        assert!(x < x_size && y < y_size, "adjacency pair out of range");
        adj[x].push(y);
    }
    for a in adj.iter_mut() {
        a.sort_unstable();
        a.dedup();
    }
    let mut mate_of_y: Vec<Option<usize>> = vec![None; y_size];
    let mut mate_of_x: Vec<Option<usize>> = vec![None; x_size];

    fn augment(
        x: usize,
        adj: &[Vec<usize>],
        mate_of_y: &mut [Option<usize>],
        mate_of_x: &mut [Option<usize>],
        visited: &mut [bool],
    ) -> bool {
        for &y in &adj[x] {
            if visited[y] {
                continue;
            }
            visited[y] = true;
            if mate_of_y[y].is_none()
                || augment(mate_of_y[y].unwrap(), adj, mate_of_y, mate_of_x, visited)
            {
                mate_of_y[y] = Some(x);
                mate_of_x[x] = Some(y);
                return true;
            }
        }
        false
    }

    for x in 0..x_size {
        let mut visited = vec![false; y_size];
        augment(x, &adj, &mut mate_of_y, &mut mate_of_x, &mut visited);
    }

    if let Some(unmatched) = (0..x_size).find(|&x| mate_of_x[x].is_none()) {
        // alternating reachability from one unmatched vertex: every reached
        // Y vertex is matched back into the set, so it falls short by one
        let mut in_subset = vec![false; x_size];
        let mut in_nbhd = vec![false; y_size];
        in_subset[unmatched] = true;
        let mut stack = vec![unmatched];
        while let Some(x) = stack.pop() {
            for &y in &adj[x] {
                if !in_nbhd[y] {
                    in_nbhd[y] = true;
                    let mate = mate_of_y[y].expect("maximum matching leaves no augmenting path");
                    if !in_subset[mate] {
                        in_subset[mate] = true;
                        stack.push(mate);
                    }
                }
            }
        }
        let subset: Vec<usize> = (0..x_size).filter(|&x| in_subset[x]).collect();
        let neighborhood: Vec<usize> = (0..y_size).filter(|&y| in_nbhd[y]).collect();
        debug_assert!(neighborhood.len() < subset.len());
        HallOutcome::Deficient { subset, neighborhood }
    } else {
        let matching = (0..x_size).map(|x| (x, mate_of_x[x].unwrap())).collect();
        HallOutcome::Saturating { matching }
    }
}
