//! Canonical labeling of hypergraphs by partition refinement and
//! individualization backtracking.
//!
//! Edges are handled as bitmasks (`words` u64 words per edge). The refinement
//! assigns vertex colors from iterated neighborhood signatures; whenever the
//! partition is not discrete, every vertex of an invariantly chosen cell is
//! individualized in turn. The canonical form is the largest edge-mask image
//! over all leaves; the leaf set is an isomorphism invariant, so two
//! structures have equal canonical forms exactly when they are isomorphic.
//!
//! Two leaves with equal images differ by an automorphism, so once an image
//! repeats the search backtracks to just below the deepest common ancestor of
//! the two leaf paths. Without this the single-edge hypergraph alone would
//! cost k! leaves.

use alloc::collections::btree_map::Entry;
use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::hypergraph::Hypergraph;

pub(crate) struct CanonOutcome {
    /// old vertex index -> canonical index
    pub perm: Vec<usize>,
    /// flattened sorted edge masks under the canonical labeling
    pub form: Vec<u64>,
}

pub(crate) fn words_for(n: usize) -> usize {
    n.div_ceil(64).max(1)
}

/// Canonicalize a structure given as `m` edge masks of `words` words each.
pub(crate) fn canonicalize_masks(n: usize, words: usize, edge_masks: &[u64]) -> CanonOutcome {
    let m = edge_masks.len().checked_div(words).unwrap_or(0);
    if n == 0 || m == 0 {
        return CanonOutcome { perm: (0..n).collect(), form: Vec::new() };
    }
    let incidence = build_incidence(n, words, m, edge_masks);
    let ctx = Ctx { n, words, m, edges: edge_masks, incidence: &incidence };

    // images seen so far -> (leaf path, labeling that produced it)
    let mut seen: BTreeMap<Vec<u64>, (Vec<usize>, Vec<usize>)> = BTreeMap::new();
    let mut ancestors: Vec<Node> = Vec::new();
    let mut path: Vec<usize> = Vec::new();
    let mut node = Node::root(&ctx);
    loop {
        if node.discrete {
            let (image, perm) = ctx.leaf_image(&node.colors);
            match seen.entry(image) {
                Entry::Occupied(entry) => {
                    let keep = first_difference(&entry.get().0, &path) + 1;
                    ancestors.truncate(keep);
                    path.truncate(keep);
                }
                Entry::Vacant(entry) => {
                    entry.insert((path.clone(), perm));
                }
            }
        }
        if let Some(v) = node.children.pop() {
            let child = node.explore(&ctx, v);
            ancestors.push(node);
            path.push(v);
            node = child;
        } else {
            match ancestors.pop() {
                Some(parent) => {
                    node = parent;
                    path.pop();
                }
                None => break,
            }
        }
    }
    let (form, (_, perm)) = seen.into_iter().next_back().expect("at least one leaf");
    CanonOutcome { perm, form }
}

fn first_difference(a: &[usize], b: &[usize]) -> usize {
    let mut i = 0;
    while i < a.len() && i < b.len() && a[i] == b[i] {
        i += 1;
    }
    i
}

fn build_incidence(n: usize, words: usize, m: usize, edges: &[u64]) -> Vec<Vec<u32>> {
    let mut inc = vec![Vec::new(); n];
    for e in 0..m {
        let mask = &edges[e * words..(e + 1) * words];
        for (w, &bits) in mask.iter().enumerate() {
            let mut bits = bits;
            while bits != 0 {
                let v = w * 64 + bits.trailing_zeros() as usize;
                bits &= bits - 1;
                inc[v].push(e as u32);
            }
        }
    }
    inc
}

struct Ctx<'a> {
    n: usize,
    words: usize,
    m: usize,
    edges: &'a [u64],
    incidence: &'a [Vec<u32>],
}

impl Ctx<'_> {
    /// Edge-mask image under a discrete coloring: the color of a vertex is
    /// its canonical index.
    fn leaf_image(&self, colors: &[u32]) -> (Vec<u64>, Vec<usize>) {
        let words = self.words;
        let mut image = vec![0u64; self.m * words];
        for (v, &c) in colors.iter().enumerate() {
            let new = c as usize;
            for &e in &self.incidence[v] {
                image[e as usize * words + new / 64] |= 1u64 << (new % 64);
            }
        }
        let mut order: Vec<usize> = (0..self.m).collect();
        order.sort_unstable_by(|&a, &b| {
            image[a * words..(a + 1) * words].cmp(&image[b * words..(b + 1) * words])
        });
        let mut flat = Vec::with_capacity(self.m * words);
        for &e in &order {
            flat.extend_from_slice(&image[e * words..(e + 1) * words]);
        }
        (flat, colors.iter().map(|&c| c as usize).collect())
    }
}

struct Node {
    colors: Vec<u32>,
    /// vertices of the target cell still to individualize, popped in
    /// ascending order
    children: Vec<usize>,
    discrete: bool,
}

impl Node {
    fn root(ctx: &Ctx<'_>) -> Node {
        Node::settle(ctx, vec![0u32; ctx.n])
    }

    fn explore(&self, ctx: &Ctx<'_>, v: usize) -> Node {
        let mut colors = self.colors.clone();
        let num_colors = colors.iter().copied().max().unwrap_or(0) + 1;
        colors[v] = num_colors;
        Node::settle(ctx, colors)
    }

    fn settle(ctx: &Ctx<'_>, mut colors: Vec<u32>) -> Node {
        let num_colors = refine(ctx, &mut colors);
        if num_colors as usize == ctx.n {
            return Node { colors, children: Vec::new(), discrete: true };
        }
        // smallest non-singleton cell, lowest color on ties; trying every
        // vertex of one invariantly chosen cell keeps the leaf set invariant
        let mut counts = vec![0u32; num_colors as usize];
        for &c in &colors {
            counts[c as usize] += 1;
        }
        let target = counts
            .iter()
            .enumerate()
            .filter(|&(_, &cnt)| cnt >= 2)
            .min_by_key(|&(c, &cnt)| (cnt, c))
            .map(|(c, _)| c as u32)
            .expect("non-discrete partition has a splittable cell");
        let children = (0..ctx.n).rev().filter(|&v| colors[v] == target).collect();
        Node { colors, children, discrete: false }
    }
}

/// Refines `colors` to a stable coloring; returns the number of colors.
/// Signatures combine a vertex's color with the multiset of its incident
/// edges' member-color multisets, so the result only depends on the
/// isomorphism type and the initial coloring.
fn refine(ctx: &Ctx<'_>, colors: &mut [u32]) -> u32 {
    let (n, m, words) = (ctx.n, ctx.m, ctx.words);
    let mut num_colors = rank_colors(colors);
    loop {
        // Edge signatures: sorted member colors.
        let mut edge_sigs: Vec<Vec<u32>> = Vec::with_capacity(m);
        for e in 0..m {
            let mask = &ctx.edges[e * words..(e + 1) * words];
            let mut sig = Vec::new();
            for (w, &bits) in mask.iter().enumerate() {
                let mut bits = bits;
                while bits != 0 {
                    let v = w * 64 + bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    sig.push(colors[v]);
                }
            }
            sig.sort_unstable();
            edge_sigs.push(sig);
        }
        let edge_colors = rank_by(&edge_sigs);

        // Vertex signatures: own color plus sorted incident edge colors.
        let mut vertex_sigs: Vec<Vec<u32>> = Vec::with_capacity(n);
        for (inc, &color) in ctx.incidence.iter().zip(colors.iter()) {
            let mut sig = Vec::with_capacity(inc.len() + 1);
            sig.push(color);
            for &e in inc {
                sig.push(edge_colors[e as usize]);
            }
            sig[1..].sort_unstable();
            vertex_sigs.push(sig);
        }
        let new_colors = rank_by(&vertex_sigs);
        let new_count = new_colors.iter().copied().max().unwrap_or(0) + 1;
        colors.copy_from_slice(&new_colors);
        if new_count == num_colors {
            return num_colors;
        }
        num_colors = new_count;
    }
}

/// Replaces color values by their rank among the distinct values present.
fn rank_colors(colors: &mut [u32]) -> u32 {
    let mut seen: Vec<u32> = colors.to_vec();
    seen.sort_unstable();
    seen.dedup();
    for c in colors.iter_mut() {
        *c = seen.binary_search(c).unwrap() as u32;
    }
    seen.len() as u32
}

/// Ranks items by sorted order of their signature; equal signatures share a rank.
fn rank_by(sigs: &[Vec<u32>]) -> Vec<u32> {
    let mut order: Vec<usize> = (0..sigs.len()).collect();
    order.sort_unstable_by(|&a, &b| sigs[a].cmp(&sigs[b]));
    let mut ranks = vec![0u32; sigs.len()];
    let mut rank = 0u32;
    for i in 0..order.len() {
        if i > 0 && sigs[order[i]] != sigs[order[i - 1]] {
            rank += 1;
        }
        ranks[order[i]] = rank;
    }
    ranks
}

/// Canonical labeling of a hypergraph: old index -> canonical index, plus the
/// flattened canonical edge masks.
pub(crate) fn canonical_labeling(h: &Hypergraph) -> (Vec<usize>, Vec<u64>) {
    let n = h.num_vertices();
    let words = words_for(n);
    let mut masks = vec![0u64; h.num_edges() * words];
    for (e, edge) in h.edges().iter().enumerate() {
        for &v in edge {
            masks[e * words + v / 64] |= 1u64 << (v % 64);
        }
    }
    let outcome = canonicalize_masks(n, words, &masks);
    (outcome.perm, outcome.form)
}

#[cfg(test)]
mod tests {
    
    use crate::hypergraph::Hypergraph;
    use alloc::vec::Vec;

    fn h(n: usize, edges: &[&[usize]]) -> Hypergraph {
        Hypergraph::new(n, edges.iter().map(|e| e.to_vec()).collect()).unwrap()
    }

    /// Brute-force isomorphism by trying every bijection; the independent
    /// check for the canonical form on small instances.
    fn iso_brute(a: &Hypergraph, b: &Hypergraph) -> bool {
        if a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges() {
            return false;
        }
        let n = a.num_vertices();
        let mut sorted_b: Vec<Vec<usize>> = b.edges().to_vec();
        sorted_b.sort();
        let mut perm: Vec<usize> = (0..n).collect();
        permute(&mut perm, 0, a, &sorted_b)
    }

    fn permute(perm: &mut Vec<usize>, i: usize, a: &Hypergraph, sorted_b: &[Vec<usize>]) -> bool {
        if i == perm.len() {
            let mut image: Vec<Vec<usize>> = a
                .edges()
                .iter()
                .map(|e| {
                    let mut e: Vec<usize> = e.iter().map(|&v| perm[v]).collect();
                    e.sort_unstable();
                    e
                })
                .collect();
            image.sort();
            return image == sorted_b;
        }
        for j in i..perm.len() {
            perm.swap(i, j);
            if permute(perm, i + 1, a, sorted_b) {
                perm.swap(i, j);
                return true;
            }
            perm.swap(i, j);
        }
        false
    }

    struct XorShift(u64);
    impl XorShift {
        fn next(&mut self) -> u64 {
            let mut x = self.0;
            x ^= x << 13;
            x ^= x >> 7;
            x ^= x << 17;
            self.0 = x;
            x
        }
        fn below(&mut self, n: usize) -> usize {
            (self.next() % n as u64) as usize
        }
    }

    fn random_hypergraph(rng: &mut XorShift) -> Hypergraph {
        let n = 1 + rng.below(7);
        let m = rng.below(5);
        let mut edges = Vec::new();
        for _ in 0..m {
            let size = 1 + rng.below(n.min(4));
            let mut edge: Vec<usize> = Vec::new();
            while edge.len() < size {
                let v = rng.below(n);
                if !edge.contains(&v) {
                    edge.push(v);
                }
            }
            edges.push(edge);
        }
        Hypergraph::new(n, edges).unwrap()
    }

    fn random_perm(rng: &mut XorShift, n: usize) -> Vec<usize> {
        let mut p: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            p.swap(i, rng.below(i + 1));
        }
        p
    }

    #[test]
    fn canonical_form_is_relabeling_invariant() {
        let mut rng = XorShift(0x9e3779b97f4a7c15);
        for _ in 0..300 {
            let g = random_hypergraph(&mut rng);
            let p = random_perm(&mut rng, g.num_vertices());
            let permuted = g.relabel(&p);
            assert_eq!(g.canonical_form(), permuted.canonical_form(), "g = {g:?}, p = {p:?}");
        }
    }

    #[test]
    fn canonical_forms_match_brute_force_isomorphism() {
        // Equal canonical form <=> brute-force bijection exists, on random
        // pairs with matching cheap invariants (n <= 7 keeps 7! tolerable).
        let mut rng = XorShift(0xdeadbeefcafe1234);
        let mut checked = 0;
        while checked < 120 {
            let a = random_hypergraph(&mut rng);
            let b = random_hypergraph(&mut rng);
            if a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges() {
                continue;
            }
            checked += 1;
            assert_eq!(
                a.canonical_form() == b.canonical_form(),
                iso_brute(&a, &b),
                "a = {a:?}, b = {b:?}"
            );
        }
    }

    #[test]
    fn isomorphism_is_an_equivalence_on_samples() {
        let mut rng = XorShift(0x1357246813572468);
        let mut graphs = Vec::new();
        for _ in 0..12 {
            graphs.push(random_hypergraph(&mut rng));
        }
        for g in &graphs {
            assert!(Hypergraph::are_isomorphic(g, g));
        }
        for a in &graphs {
            for b in &graphs {
                assert_eq!(
                    Hypergraph::are_isomorphic(a, b),
                    Hypergraph::are_isomorphic(b, a)
                );
                for c in &graphs {
                    if Hypergraph::are_isomorphic(a, b) && Hypergraph::are_isomorphic(b, c) {
                        assert!(Hypergraph::are_isomorphic(a, c));
                    }
                }
            }
        }
    }

    #[test]
    fn duplicate_edges_are_distinguished() {
        let single = h(2, &[&[0, 1]]);
        let double = h(2, &[&[0, 1], &[0, 1]]);
        assert!(!Hypergraph::are_isomorphic(&single, &double));
        assert_eq!(double.canonical_form(), double.clone());
    }

    #[test]
    fn highly_symmetric_cases() {
        // Complete graph K5 vs C5: same degrees at n=5 only for K5/K5.
        let c5 = h(5, &[&[0, 1], &[1, 2], &[2, 3], &[3, 4], &[0, 4]]);
        let c5_shuffled = h(5, &[&[0, 2], &[2, 4], &[1, 4], &[1, 3], &[0, 3]]);
        assert!(Hypergraph::are_isomorphic(&c5, &c5_shuffled));
        let p5 = h(5, &[&[0, 1], &[1, 2], &[2, 3], &[3, 4]]);
        assert!(!Hypergraph::are_isomorphic(&c5, &p5));
    }
}
