//! Reduction from maximum-degree-2 uniform hypergraphs to multigraphs: one
//! multigraph vertex per hypergraph edge, one multigraph edge per degree-2
//! hypergraph vertex joining its two containing edges. A matching in the
//! conflict multigraph converts back into a transversal of size `m - |M|`,
//! which is how the transversal bound connects to the matching bound.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::hypergraph::{Hypergraph, VertexSet};
use crate::multigraph::{Matching, Multigraph};
use crate::transversal::{self, Transversal};
use crate::{Error, Rational};

/// The conflict multigraph of a hypergraph, with the inducing vertex recorded
/// for every parallel edge instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConflictMultigraph {
    graph: Multigraph,
    /// per joined pair of edge indices, the degree-2 vertices inducing the
    /// parallel instances, sorted ascending
    witness: BTreeMap<(usize, usize), Vec<usize>>,
}

impl ConflictMultigraph {
    pub fn graph(&self) -> &Multigraph {
        &self.graph
    }

    /// Inducing vertices for the pair of edge indices `{e, f}`.
    pub fn witnesses(&self, e: usize, f: usize) -> &[usize] {
        self.witness
            .get(&(e.min(f), e.max(f)))
            .map(Vec::as_slice)
            .unwrap_or(&[])
    }

    /// All edge instances as `(edge-instance-index, inducing vertex)` rows,
    /// instances ordered pair-lexicographically.
    pub fn instance_witnesses(&self) -> Vec<(usize, usize)> {
        let mut rows = Vec::new();
        for vs in self.witness.values() {
            for &v in vs {
                rows.push((rows.len(), v));
            }
        }
        rows
    }
}

/// Builds the conflict multigraph of a k-uniform hypergraph with
/// `1 <= degree <= 2` everywhere.
pub fn to_conflict_multigraph(h: &Hypergraph, k: usize) -> Result<ConflictMultigraph, Error> {
    if k < 2 {
        return Err(Error::BadArgument("reduction requires k >= 2"));
    }
    if !h.is_k_uniform(k) {
        return Err(Error::ContractViolation("hypergraph is not k-uniform"));
    }
    if h.max_degree().unwrap_or(0) > 2 {
        return Err(Error::ContractViolation("reduction is defined only for maximum degree 2"));
    }
    if h.min_degree().unwrap_or(1) < 1 {
        return Err(Error::ContractViolation("isolated vertices are not allowed"));
    }
    let mut containing: Vec<Vec<usize>> = vec![Vec::new(); h.num_vertices()];
    for (e, edge) in h.edges().iter().enumerate() {
        for &v in edge {
            containing[v].push(e);
        }
    }
    let mut graph = Multigraph::new(h.num_edges());
    let mut witness: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
    for (v, edges) in containing.iter().enumerate() {
        if let [e, f] = edges[..] {
            graph.add(e, f, 1)?;
            witness.entry((e.min(f), e.max(f))).or_default().push(v);
        }
    }
    for vs in witness.values_mut() {
        vs.sort_unstable();
    }
    debug_assert_eq!(graph.size(), k * h.num_edges() - h.num_vertices());
    Ok(ConflictMultigraph { graph, witness })
}

/// Converts a matching of the conflict multigraph into a transversal of size
/// exactly `m - |M|`: the lexicographically least inducing vertex of each
/// matched pair, plus one distinct vertex from every edge the matched
/// vertices miss.
pub fn transversal_from_matching(
    h: &Hypergraph,
    conflict: &ConflictMultigraph,
    matching: &Matching,
) -> Result<Transversal, Error> {
    Matching::new(conflict.graph(), matching.pairs().to_vec())
        .map_err(|_| Error::ContractViolation("matching is not valid in the conflict multigraph"))?;
    let m = h.num_edges();
    let mut in_s = vec![false; h.num_vertices()];
    let mut covered = vec![false; m];
    let mut chosen: Vec<usize> = Vec::new();
    for &(e, f) in matching.pairs() {
        let v = conflict.witnesses(e, f)[0];
        chosen.push(v);
        in_s[v] = true;
        covered[e] = true;
        covered[f] = true;
    }
    // Distinct representatives for the uncovered edges; lowest-index greedy
    // with augmenting reassignment. Degrees <= 2 guarantee one exists.
    let uncovered: Vec<usize> = (0..m).filter(|&e| !covered[e]).collect();
    let mut owner: BTreeMap<usize, usize> = BTreeMap::new();
    fn assign(
        h: &Hypergraph,
        e: usize,
        owner: &mut BTreeMap<usize, usize>,
        visited: &mut Vec<bool>,
    ) -> bool {
        for &v in h.edge(e) {
            if !visited[v] && !owner.contains_key(&v) {
                visited[v] = true;
                owner.insert(v, e);
                return true;
            }
        }
        for &v in h.edge(e) {
            if !visited[v] {
                visited[v] = true;
                let current = owner[&v];
                if assign(h, current, owner, visited) {
                    owner.insert(v, e);
                    return true;
                }
            }
        }
        false
    }
    for &e in &uncovered {
        let mut visited = vec![false; h.num_vertices()];
        let ok = assign(h, e, &mut owner, &mut visited);
        debug_assert!(ok, "distinct representatives must exist at degree <= 2");
        if !ok {
            return Err(Error::ContractViolation("no distinct representative for an edge"));
        }
    }
    for &v in owner.keys() {
        debug_assert!(!in_s[v]);
        chosen.push(v);
    }
    let vertices = VertexSet::new(chosen)?;
    let transversal = Transversal::new(h, vertices)?;
    debug_assert_eq!(transversal.len(), m - matching.len());
    Ok(transversal)
}

/// The full inequality chain from the reduction, with exact arithmetic:
/// `tau <= m - alpha' <= m - n2/floor(3k/2) = (n + floor(k/2) m)/floor(3k/2)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClaimDBound {
    pub tau: usize,
    pub matching_number: usize,
    pub num_edges: usize,
    /// number of degree-2 vertices, `k m - n`
    pub degree2_count: usize,
    /// `m - alpha'`
    pub matching_upper: usize,
    /// `m - n2 / floor(3k/2)` as an exact rational
    pub packing_upper: Rational,
    /// `(n + floor(k/2) m) / floor(3k/2)`
    pub bound: Rational,
    pub tau_le_matching_upper: bool,
    pub matching_upper_le_packing: bool,
    /// the algebraic identity `m - n2/floor(3k/2) = bound`
    pub packing_equals_bound: bool,
    pub tau_link_tight: bool,
    pub matching_link_tight: bool,
    /// `tau` attains the bound itself
    pub overall_equality: bool,
}

pub fn claim_d_bound(h: &Hypergraph, k: usize) -> Result<ClaimDBound, Error> {
    let conflict = to_conflict_multigraph(h, k)?;
    let matching = crate::multigraph::max_matching(conflict.graph());
    let tau = transversal::tau_value(h);
    let m = h.num_edges();
    let n = h.num_vertices();
    let n2 = k * m - n;
    let denom = (3 * k / 2) as i64;
    let matching_upper = m - matching.len();
    let packing_upper = Rational::from_integer(m as i64)
        .sub(&Rational::new(n2 as i64, denom));
    let bound = transversal::cm_bound(h, k)?;
    let tau_r = Rational::from_integer(tau as i64);
    let upper_r = Rational::from_integer(matching_upper as i64);
    Ok(ClaimDBound {
        tau,
        matching_number: matching.len(),
        num_edges: m,
        degree2_count: n2,
        matching_upper,
        packing_upper,
        bound,
        tau_le_matching_upper: tau <= matching_upper,
        matching_upper_le_packing: upper_r <= packing_upper,
        packing_equals_bound: packing_upper == bound,
        tau_link_tight: tau == matching_upper,
        matching_link_tight: upper_r == packing_upper,
        overall_equality: tau_r == bound,
    })
}
