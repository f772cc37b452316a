//! Exact minimum transversals and the transversal-number upper bound
//! `(n + floor(k/2) m) / floor(3k/2)` as exact rational arithmetic.
//!
//! The solver is a branch and bound: pick the first uncovered edge, branch on
//! its vertices in decreasing degree, prune with the incumbent and a greedy
//! disjoint-edge packing lower bound. Witnesses are the lexicographically
//! smallest minimum transversal so results are reproducible.

use alloc::vec::Vec;

use crate::bits::Bits;
use crate::hypergraph::{Hypergraph, VertexSet};
use crate::{Error, Rational};

/// A vertex set that intersects every edge of its host.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Transversal {
    vertices: VertexSet,
}

impl Transversal {
    /// Validates that `vertices` really hits every edge of `host`.
    pub fn new(host: &Hypergraph, vertices: VertexSet) -> Result<Transversal, Error> {
        if !vertices.is_valid_in(host.num_vertices()) {
            return Err(Error::ContractViolation("transversal vertices out of range"));
        }
        if !is_transversal(host, &vertices) {
            return Err(Error::ContractViolation("vertex set misses an edge"));
        }
        Ok(Transversal { vertices })
    }

    pub fn vertices(&self) -> &VertexSet {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }
}

/// True iff `t` has nonempty intersection with every edge of `h`.
///
/// Panics if `t` is not a valid vertex set of `h`.
pub fn is_transversal(h: &Hypergraph, t: &VertexSet) -> bool {
    assert!(t.is_valid_in(h.num_vertices()), "vertex set not valid in host");
    h.edges().iter().all(|e| e.iter().any(|&v| t.contains(v)))
}

struct Solver {
    n: usize,
    edges: Vec<Bits>,
    degree: Vec<usize>,
    best_size: usize,
}

impl Solver {
    fn new(h: &Hypergraph) -> Solver {
        let n = h.num_vertices();
        let mut edges: Vec<Bits> = h
            .edges()
            .iter()
            .map(|e| Bits::from_indices(n, e))
            .collect();
        // duplicate edges add nothing to coverage
        edges.sort();
        edges.dedup();
        Solver { n, edges, degree: h.degrees(), best_size: usize::MAX }
    }

    /// Greedy max-degree cover, used as the incumbent before searching.
    fn greedy_upper_bound(&self, forced: &Bits) -> usize {
        let mut chosen = forced.clone();
        let mut count = forced.count();
        loop {
            let uncovered: Vec<&Bits> = self.edges.iter().filter(|e| !e.intersects(&chosen)).collect();
            if uncovered.is_empty() {
                return count;
            }
            let mut best_v = usize::MAX;
            let mut best_hits = 0;
            for v in 0..self.n {
                if chosen.contains(v) {
                    continue;
                }
                let hits = uncovered.iter().filter(|e| e.contains(v)).count();
                if hits > best_hits {
                    best_hits = hits;
                    best_v = v;
                }
            }
            chosen.set(best_v);
            count += 1;
        }
    }

    /// Greedy disjoint-edge packing among edges missed by `chosen`; each
    /// packed edge forces one more transversal vertex.
    fn packing_bound(&self, chosen: &Bits) -> usize {
        let mut taken = Bits::empty(self.n);
        let mut packed = 0;
        for e in &self.edges {
            if !e.intersects(chosen) && !e.intersects(&taken) {
                taken.union_with(e);
                packed += 1;
            }
        }
        packed
    }

    fn search(&mut self, chosen: &Bits, excluded: &Bits, count: usize) {
        let uncovered = self.edges.iter().position(|e| !e.intersects(chosen));
        let Some(first) = uncovered else {
            self.best_size = self.best_size.min(count);
            return;
        };
        if count + self.packing_bound(chosen) >= self.best_size {
            return;
        }
        let mut branch: Vec<usize> = self.edges[first]
            .iter()
            .filter(|&v| !excluded.contains(v))
            .collect();
        branch.sort_by_key(|&v| (usize::MAX - self.degree[v], v));
        let mut excluded = excluded.clone();
        for v in branch {
            let mut next = chosen.clone();
            next.set(v);
            self.search(&next, &excluded, count + 1);
            excluded.set(v);
        }
    }

    /// Minimum size of a transversal containing all of `forced`. The greedy
    /// cover seeds the incumbent; the search only improves on it.
    fn solve(&mut self, forced: &Bits) -> usize {
        self.best_size = self.greedy_upper_bound(forced);
        self.search(forced, &Bits::empty(self.n), forced.count());
        self.best_size
    }
}

/// The transversal number: size of a minimum transversal.
pub fn tau_value(h: &Hypergraph) -> usize {
    Solver::new(h).solve(&Bits::empty(h.num_vertices()))
}

fn min_forced(solver: &mut Solver, forced: &Bits) -> usize {
    solver.solve(forced)
}

/// Lexicographically smallest transversal of size `target` containing `base`.
fn lex_min_completion(solver: &mut Solver, base: &Bits, target: usize) -> Bits {
    let mut chosen = base.clone();
    let mut size = chosen.count();
    let mut v = 0;
    while size < target {
        debug_assert!(v < solver.n);
        if !chosen.contains(v) {
            let mut candidate = chosen.clone();
            candidate.set(v);
            if min_forced(solver, &candidate) == target {
                chosen = candidate;
                size += 1;
            }
        }
        v += 1;
    }
    chosen
}

/// Minimum transversal size together with the lexicographically smallest
/// witness of that size.
pub fn tau_exact(h: &Hypergraph) -> (usize, Transversal) {
    let mut solver = Solver::new(h);
    let tau = min_forced(&mut solver, &Bits::empty(h.num_vertices()));
    let witness = lex_min_completion(&mut solver, &Bits::empty(h.num_vertices()), tau);
    let vertices = VertexSet::new(witness.iter().collect()).unwrap();
    (tau, Transversal::new(h, vertices).expect("solver returned a non-transversal"))
}

/// A minimum transversal containing every vertex of `forced`, if one exists.
///
/// Panics if `forced` is not a valid vertex set of `h`.
pub fn tau_set_containing(h: &Hypergraph, forced: &VertexSet) -> Option<Transversal> {
    assert!(forced.is_valid_in(h.num_vertices()), "forced set not valid in host");
    let mut solver = Solver::new(h);
    let tau = min_forced(&mut solver, &Bits::empty(h.num_vertices()));
    let base = Bits::from_indices(h.num_vertices(), &forced.iter().collect::<Vec<_>>());
    if min_forced(&mut solver, &base) != tau {
        return None;
    }
    let witness = lex_min_completion(&mut solver, &base, tau);
    let vertices = VertexSet::new(witness.iter().collect()).unwrap();
    Some(Transversal::new(h, vertices).expect("solver returned a non-transversal"))
}

/// The upper bound `(n + floor(k/2) m) / floor(3k/2)` as an exact rational.
pub fn cm_bound(h: &Hypergraph, k: usize) -> Result<Rational, Error> {
    if k < 2 {
        return Err(Error::BadArgument("uniformity k must be at least 2"));
    }
    if !h.is_k_uniform(k) {
        return Err(Error::ContractViolation("hypergraph is not k-uniform"));
    }
    let n = h.num_vertices() as i64;
    let m = h.num_edges() as i64;
    let k = k as i64;
    Ok(Rational::new(n + (k / 2) * m, 3 * k / 2))
}

/// True iff `tau(h) * floor(3k/2) = n + floor(k/2) * m`, decided entirely in
/// integer arithmetic.
pub fn meets_bound_with_equality(h: &Hypergraph, k: usize) -> Result<bool, Error> {
    if k < 2 {
        return Err(Error::BadArgument("uniformity k must be at least 2"));
    }
    if !h.is_k_uniform(k) {
        return Err(Error::ContractViolation("hypergraph is not k-uniform"));
    }
    let tau = tau_value(h);
    Ok(tau * (3 * k / 2) == h.num_vertices() + (k / 2) * h.num_edges())
}
