//! Hypergraph data model and structural queries.
//!
//! A hypergraph is a vertex set `0..num_vertices` together with a multiset
//! of edges; each edge is a set of distinct vertices stored as a strictly
//! increasing index list. Duplicate edges are allowed and count with
//! multiplicity everywhere.

use alloc::vec;
use alloc::vec::Vec;

use crate::canon;
use crate::Error;

/// A set of vertices, stored as a strictly increasing index list.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Default)]
pub struct VertexSet {
    vertices: Vec<usize>,
}

impl VertexSet {
    /// Builds a vertex set from arbitrary indices; sorts and rejects repeats.
    pub fn new(mut vertices: Vec<usize>) -> Result<VertexSet, Error> {
        vertices.sort_unstable();
        if vertices.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::MalformedEdge("repeated vertex in vertex set"));
        }
        Ok(VertexSet { vertices })
    }

    pub fn empty() -> VertexSet {
        VertexSet { vertices: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.vertices.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.vertices
    }

    /// True when every index is a vertex of a host with `num_vertices` vertices.
    pub fn is_valid_in(&self, num_vertices: usize) -> bool {
        self.vertices.last().is_none_or(|&v| v < num_vertices)
    }
}

impl From<VertexSet> for Vec<usize> {
    fn from(s: VertexSet) -> Vec<usize> {
        s.vertices
    }
}

/// Partition of the vertices into connected components.
///
/// Cells are pairwise disjoint, cover every vertex, and no edge meets two
/// different cells. Isolated vertices sit in singleton cells. Cells are
/// ordered by their smallest vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentPartition {
    cells: Vec<VertexSet>,
}

impl ComponentPartition {
    pub fn cells(&self) -> &[VertexSet] {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }
}

/// Result of strongly deleting a vertex set: the surviving hypergraph plus
/// the index maps between old and new labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexDeletion {
    pub hypergraph: Hypergraph,
    /// `old_to_new[v]` is the new index of old vertex `v`, `None` if deleted.
    pub old_to_new: Vec<Option<usize>>,
    /// `new_to_old[w]` is the original index of new vertex `w`.
    pub new_to_old: Vec<usize>,
}

/// A finite vertex set with a multiset of edges.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Hypergraph {
    num_vertices: usize,
    edges: Vec<Vec<usize>>,
}

impl Hypergraph {
    /// Builds a hypergraph, sorting each edge and validating that edges are
    /// nonempty, repeat-free and within range. Duplicate edges are kept.
    pub fn new(num_vertices: usize, edges: Vec<Vec<usize>>) -> Result<Hypergraph, Error> {
        let mut edges = edges;
        for edge in &mut edges {
            if edge.is_empty() {
                return Err(Error::MalformedEdge("empty edge"));
            }
            edge.sort_unstable();
            if edge.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::MalformedEdge("repeated vertex within an edge"));
            }
            let last = *edge.last().unwrap();
            if last >= num_vertices {
                return Err(Error::VertexOutOfRange { vertex: last, num_vertices });
            }
        }
        Ok(Hypergraph { num_vertices, edges })
    }

    /// The empty hypergraph (0 vertices, 0 edges). By convention tau = 0 and
    /// the bound value is 0.
    pub fn empty() -> Hypergraph {
        Hypergraph { num_vertices: 0, edges: Vec::new() }
    }

    pub fn num_vertices(&self) -> usize {
        self.num_vertices
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    pub fn edge(&self, index: usize) -> &[usize] {
        &self.edges[index]
    }

    /// Number of edges containing `v`, counting multiplicity.
    pub fn degree(&self, v: usize) -> Result<usize, Error> {
        if v >= self.num_vertices {
            return Err(Error::VertexOutOfRange { vertex: v, num_vertices: self.num_vertices });
        }
        Ok(self.degrees()[v])
    }

    /// Degree of every vertex in one pass.
    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0usize; self.num_vertices];
        for edge in &self.edges {
            for &v in edge {
                deg[v] += 1;
            }
        }
        deg
    }

    /// Maximum degree; `None` for a hypergraph without vertices.
    pub fn max_degree(&self) -> Option<usize> {
        self.degrees().into_iter().max()
    }

    /// Minimum degree; `None` for a hypergraph without vertices.
    pub fn min_degree(&self) -> Option<usize> {
        self.degrees().into_iter().min()
    }

    /// True iff every edge has exactly `k` vertices.
    pub fn is_k_uniform(&self, k: usize) -> bool {
        self.edges.iter().all(|e| e.len() == k)
    }

    /// Uniform edge size, if the hypergraph is nonempty and uniform.
    pub fn uniformity(&self) -> Option<usize> {
        let k = self.edges.first()?.len();
        self.is_k_uniform(k).then_some(k)
    }

    /// Partition into maximal connected cells under "shares an edge";
    /// isolated vertices become singleton cells.
    pub fn components(&self) -> ComponentPartition {
        let mut parent: Vec<usize> = (0..self.num_vertices).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for edge in &self.edges {
            let r = find(&mut parent, edge[0]);
            for &v in &edge[1..] {
                let rv = find(&mut parent, v);
                parent[rv] = r;
            }
        }
        let mut cells_by_root: Vec<Vec<usize>> = vec![Vec::new(); self.num_vertices];
        for v in 0..self.num_vertices {
            let r = find(&mut parent, v);
            cells_by_root[r].push(v);
        }
        let cells = cells_by_root
            .into_iter()
            .filter(|c| !c.is_empty())
            .map(|c| VertexSet { vertices: c })
            .collect();
        ComponentPartition { cells }
    }

    /// True iff the hypergraph consists of exactly one component.
    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// Strong deletion `H - X`: removes the vertices of `X`, every edge that
    /// intersects `X`, and all vertices left isolated by that; survivors are
    /// re-indexed densely.
    ///
    /// Panics if `X` is not a valid vertex set of `self`.
    pub fn delete_vertices(&self, x: &VertexSet) -> VertexDeletion {
        assert!(x.is_valid_in(self.num_vertices), "vertex set not valid in host");
        let surviving_edges: Vec<&Vec<usize>> = self
            .edges
            .iter()
            .filter(|e| !e.iter().any(|&v| x.contains(v)))
            .collect();
        let mut keep = vec![false; self.num_vertices];
        for e in &surviving_edges {
            for &v in e.iter() {
                keep[v] = true;
            }
        }
        let mut old_to_new = vec![None; self.num_vertices];
        let mut new_to_old = Vec::new();
        for v in 0..self.num_vertices {
            if keep[v] {
                old_to_new[v] = Some(new_to_old.len());
                new_to_old.push(v);
            }
        }
        let edges = surviving_edges
            .into_iter()
            .map(|e| e.iter().map(|&v| old_to_new[v].unwrap()).collect())
            .collect();
        VertexDeletion {
            hypergraph: Hypergraph { num_vertices: new_to_old.len(), edges },
            old_to_new,
            new_to_old,
        }
    }

    /// Relabels vertices by `perm` (old index -> new index). The permutation
    /// must be a bijection on `0..num_vertices`.
    pub fn relabel(&self, perm: &[usize]) -> Hypergraph {
        assert_eq!(perm.len(), self.num_vertices);
        let mut edges: Vec<Vec<usize>> = self
            .edges
            .iter()
            .map(|e| {
                let mut e: Vec<usize> = e.iter().map(|&v| perm[v]).collect();
                e.sort_unstable();
                e
            })
            .collect();
        edges.sort();
        Hypergraph { num_vertices: self.num_vertices, edges }
    }

    /// A canonical representative of the isomorphism class: relabelled so
    /// that equal outputs characterize isomorphic inputs.
    pub fn canonical_form(&self) -> Hypergraph {
        let (labeling, _) = canon::canonical_labeling(self);
        self.relabel(&labeling)
    }

    /// The canonicalizing permutation (old index -> canonical index).
    pub fn canonical_labeling(&self) -> Vec<usize> {
        canon::canonical_labeling(self).0
    }

    /// True iff some vertex bijection maps one edge multiset onto the other.
    pub fn are_isomorphic(a: &Hypergraph, b: &Hypergraph) -> bool {
        if a.num_vertices != b.num_vertices || a.edges.len() != b.edges.len() {
            return false;
        }
        let mut sizes_a: Vec<usize> = a.edges.iter().map(Vec::len).collect();
        let mut sizes_b: Vec<usize> = b.edges.iter().map(Vec::len).collect();
        sizes_a.sort_unstable();
        sizes_b.sort_unstable();
        if sizes_a != sizes_b {
            return false;
        }
        let mut deg_a = a.degrees();
        let mut deg_b = b.degrees();
        deg_a.sort_unstable();
        deg_b.sort_unstable();
        if deg_a != deg_b {
            return false;
        }
        a.canonical_form() == b.canonical_form()
    }

    /// An isomorphism from `self` onto `target` (old index in `self` -> index
    /// in `target`), if one exists.
    pub fn isomorphism_to(&self, target: &Hypergraph) -> Option<Vec<usize>> {
        if !Hypergraph::are_isomorphic(self, target) {
            return None;
        }
        let p = self.canonical_labeling();
        let q = target.canonical_labeling();
        // q_inv . p maps self onto target through the shared canonical form.
        let mut q_inv = vec![0usize; q.len()];
        for (old, &new) in q.iter().enumerate() {
            q_inv[new] = old;
        }
        Some(p.iter().map(|&c| q_inv[c]).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extremal::{gen_e, gen_t};

    fn h(n: usize, edges: &[&[usize]]) -> Hypergraph {
        Hypergraph::new(n, edges.iter().map(|e| e.to_vec()).collect()).unwrap()
    }

    #[test]
    fn construction_validates() {
        assert!(Hypergraph::new(3, vec![vec![0, 1, 1]]).is_err());
        assert!(Hypergraph::new(3, vec![vec![0, 3]]).is_err());
        assert!(Hypergraph::new(3, vec![vec![]]).is_err());
        // duplicate edges are fine
        let g = Hypergraph::new(2, vec![vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(g.num_edges(), 2);
        assert_eq!(g.edge(1), &[0, 1]);
    }

    #[test]
    fn degree_in_extremal_families() {
        let e4 = gen_e(4).unwrap();
        for v in 0..4 {
            assert_eq!(e4.degree(v).unwrap(), 1);
        }
        // T_5 blocks: A = {0,1,2}, B = {3,4}, C = {5,6}, D = {7}
        let t5 = gen_t(5).unwrap();
        assert_eq!(t5.degree(0).unwrap(), 2);
        assert_eq!(t5.degree(7).unwrap(), 1);
        assert!(t5.degree(8).is_err());
    }

    #[test]
    fn uniformity() {
        let e4 = gen_e(4).unwrap();
        assert!(e4.is_k_uniform(4));
        assert!(!e4.is_k_uniform(3));
        let t5 = gen_t(5).unwrap();
        assert!(t5.is_k_uniform(5));
        assert!(Hypergraph::empty().is_k_uniform(7));
    }

    #[test]
    fn handshake() {
        let t5 = gen_t(5).unwrap();
        let total: usize = t5.degrees().iter().sum();
        let edge_total: usize = t5.edges().iter().map(Vec::len).sum();
        assert_eq!(total, edge_total);
        assert_eq!(edge_total, 5 * t5.num_edges());
    }

    #[test]
    fn components_of_extremal_families() {
        for k in 2..=8 {
            let ek = gen_e(k).unwrap();
            assert_eq!(ek.components().len(), 1);
            assert_eq!(ek.components().cells()[0].len(), k);
        }
        let t4 = gen_t(4).unwrap();
        assert_eq!(t4.components().len(), 1);
        assert_eq!(t4.components().cells()[0].len(), 6);
    }

    #[test]
    fn components_of_disjoint_union() {
        let g = h(8, &[&[0, 1, 2, 3], &[4, 5, 6, 7]]);
        let parts = g.components();
        assert_eq!(parts.len(), 2);
        assert_eq!(parts.cells()[0].as_slice(), &[0, 1, 2, 3]);
        assert_eq!(parts.cells()[1].as_slice(), &[4, 5, 6, 7]);
    }

    #[test]
    fn isolated_vertices_are_singleton_cells() {
        let g = h(4, &[&[0, 1]]);
        let parts = g.components();
        assert_eq!(parts.len(), 3);
        assert_eq!(parts.cells()[1].as_slice(), &[2]);
    }

    #[test]
    fn deletion_of_single_edge_hypergraph_is_empty() {
        for k in 2..=6 {
            let ek = gen_e(k).unwrap();
            let del = ek.delete_vertices(&VertexSet::new(vec![0]).unwrap());
            assert_eq!(del.hypergraph, Hypergraph::empty());
        }
    }

    #[test]
    fn deletion_in_t4() {
        // T_4: A = {0,1}, B = {2,3}, C = {4,5}; deleting one vertex of A kills
        // e1 and e2, the other A vertex becomes isolated, e3 = B u C survives.
        let t4 = gen_t(4).unwrap();
        let del = t4.delete_vertices(&VertexSet::new(vec![0]).unwrap());
        assert_eq!(del.hypergraph.num_vertices(), 4);
        assert_eq!(del.hypergraph.num_edges(), 1);
        assert_eq!(del.new_to_old, vec![2, 3, 4, 5]);
        assert_eq!(del.old_to_new[1], None);
        assert_eq!(del.old_to_new[4], Some(2));
    }

    #[test]
    fn deletion_of_empty_set_drops_preexisting_isolated_vertices() {
        let g = h(4, &[&[0, 2]]);
        let del = g.delete_vertices(&VertexSet::empty());
        assert_eq!(del.hypergraph.num_vertices(), 2);
        assert_eq!(del.hypergraph.num_edges(), 1);
    }

    #[test]
    fn deletion_result_has_no_isolated_vertices_and_misses_x() {
        let t5 = gen_t(5).unwrap();
        let x = VertexSet::new(vec![3, 7]).unwrap();
        let del = t5.delete_vertices(&x);
        let g = &del.hypergraph;
        assert!(g.min_degree().is_none_or(|d| d >= 1));
        for e in g.edges() {
            for &v in e {
                assert!(!x.contains(del.new_to_old[v]));
            }
        }
    }

    #[test]
    fn isomorphism_basics() {
        let e4 = gen_e(4).unwrap();
        let permuted = e4.relabel(&[2, 0, 3, 1]);
        assert!(Hypergraph::are_isomorphic(&e4, &permuted));
        assert!(!Hypergraph::are_isomorphic(&e4, &gen_e(5).unwrap()));
    }

    #[test]
    fn t4_matches_its_block_presentation() {
        let t4 = gen_t(4).unwrap();
        let other = h(6, &[&[0, 1, 2, 3], &[0, 1, 4, 5], &[2, 3, 4, 5]]);
        assert!(Hypergraph::are_isomorphic(&t4, &other));
        let iso = other.isomorphism_to(&t4).unwrap();
        assert_eq!(other.relabel(&iso), t4.relabel(&(0..6).collect::<Vec<_>>()));
    }

    #[test]
    fn edges_never_cross_component_cells() {
        let g = h(7, &[&[0, 1], &[1, 2], &[4, 5, 6]]);
        let parts = g.components();
        for e in g.edges() {
            let cell = parts.cells().iter().find(|c| c.contains(e[0])).unwrap();
            assert!(e.iter().all(|&v| cell.contains(v)));
        }
    }
}
