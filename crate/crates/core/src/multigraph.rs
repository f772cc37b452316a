//! Multigraphs with edge multiplicities: maximum matching, exact chromatic
//! index, proper edge colorings within the `floor(3*Delta/2)` bound, and the
//! 3-vertex extremal multigraphs that bound construction is tight for.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::hypergraph::Hypergraph;
use crate::Error;

/// A loopless multigraph: vertices `0..num_vertices` and a multiplicity for
/// each unordered pair that carries at least one edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Multigraph {
    num_vertices: usize,
    multiplicity: BTreeMap<(usize, usize), usize>,
}

impl Multigraph {
    pub fn new(num_vertices: usize) -> Multigraph {
        Multigraph { num_vertices, multiplicity: BTreeMap::new() }
    }

    pub fn from_edges(
        num_vertices: usize,
        edges: &[(usize, usize, usize)],
    ) -> Result<Multigraph, Error> {
        let mut g = Multigraph::new(num_vertices);
        for &(u, v, mult) in edges {
            g.add(u, v, mult)?;
        }
        Ok(g)
    }

    /// Adds `mult` parallel edges between `u` and `v`.
    pub fn add(&mut self, u: usize, v: usize, mult: usize) -> Result<(), Error> {
        if u == v {
            return Err(Error::MalformedEdge("loops are not allowed"));
        }
        if u >= self.num_vertices || v >= self.num_vertices {
            return Err(Error::VertexOutOfRange {
                vertex: u.max(v),
                num_vertices: self.num_vertices,
            });
        }
        if mult == 0 {
            return Err(Error::BadArgument("edge multiplicity must be positive"));
        }
        *self.multiplicity.entry((u.min(v), u.max(v))).or_insert(0) += mult;
        Ok(())
    }

    pub fn num_vertices(&self) -> usize {
        self.num_vertices
    }

    /// Number of edge instances, counting multiplicity.
    pub fn size(&self) -> usize {
        self.multiplicity.values().sum()
    }

    /// Multiplicity of the pair `{u, v}`; zero when they are not joined.
    pub fn mu(&self, u: usize, v: usize) -> usize {
        if u == v {
            return 0;
        }
        self.multiplicity.get(&(u.min(v), u.max(v))).copied().unwrap_or(0)
    }

    /// The distinct joined pairs in lexicographic order, with multiplicities.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        self.multiplicity.iter().map(|(&(u, v), &m)| (u, v, m))
    }

    pub fn num_pairs(&self) -> usize {
        self.multiplicity.len()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.multiplicity
            .iter()
            .filter(|(&(a, b), _)| a == v || b == v)
            .map(|(_, &m)| m)
            .sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0usize; self.num_vertices];
        for (&(u, v), &m) in &self.multiplicity {
            deg[u] += m;
            deg[v] += m;
        }
        deg
    }

    pub fn max_degree(&self) -> usize {
        self.degrees().into_iter().max().unwrap_or(0)
    }

    pub fn is_connected(&self) -> bool {
        if self.num_vertices == 0 {
            return false;
        }
        let mut seen = vec![false; self.num_vertices];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &(a, b) in self.multiplicity.keys() {
                let w = if a == v { b } else if b == v { a } else { continue };
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// The equivalent 2-uniform hypergraph, with each pair expanded to its
    /// multiplicity. Shares the canonical-labeling machinery.
    pub fn as_two_uniform(&self) -> Hypergraph {
        let mut edges = Vec::with_capacity(self.size());
        for (u, v, m) in self.pairs() {
            for _ in 0..m {
                edges.push(vec![u, v]);
            }
        }
        Hypergraph::new(self.num_vertices, edges).expect("pairs are valid 2-edges")
    }

    /// Rebuilds a multigraph from a 2-uniform hypergraph.
    pub fn from_two_uniform(h: &Hypergraph) -> Result<Multigraph, Error> {
        if !h.is_k_uniform(2) {
            return Err(Error::ContractViolation("hypergraph is not 2-uniform"));
        }
        let mut g = Multigraph::new(h.num_vertices());
        for e in h.edges() {
            g.add(e[0], e[1], 1)?;
        }
        Ok(g)
    }

    pub fn are_isomorphic(a: &Multigraph, b: &Multigraph) -> bool {
        Hypergraph::are_isomorphic(&a.as_two_uniform(), &b.as_two_uniform())
    }

    /// Expanded edge instances in deterministic order: pairs lexicographic,
    /// parallel instances consecutive.
    pub fn instances(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size());
        for (u, v, m) in self.pairs() {
            for _ in 0..m {
                out.push((u, v));
            }
        }
        out
    }
}

/// A set of pairwise vertex-disjoint edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matching {
    pairs: Vec<(usize, usize)>,
}

impl Matching {
    /// Validates disjointness and membership in the host.
    pub fn new(host: &Multigraph, mut pairs: Vec<(usize, usize)>) -> Result<Matching, Error> {
        for p in pairs.iter_mut() {
            *p = (p.0.min(p.1), p.0.max(p.1));
        }
        pairs.sort_unstable();
        let mut used = vec![false; host.num_vertices()];
        for &(u, v) in &pairs {
            if host.mu(u, v) == 0 {
                return Err(Error::ContractViolation("matching uses a non-edge"));
            }
            if used[u] || used[v] {
                return Err(Error::ContractViolation("matching edges share a vertex"));
            }
            used[u] = true;
            used[v] = true;
        }
        Ok(Matching { pairs })
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }
}

/// Maximum matching by augmenting-path search with blossom contraction.
/// Parallel edges collapse: a matching takes at most one edge per pair, so
/// this is maximum matching on the underlying simple graph.
pub fn max_matching(g: &Multigraph) -> Matching {
    let n = g.num_vertices();
    let mut adj = vec![Vec::new(); n];
    for (u, v, _) in g.pairs() {
        adj[u].push(v);
        adj[v].push(u);
    }
    for a in adj.iter_mut() {
        a.sort_unstable();
    }
    let mate = blossom(n, &adj);
    let mut pairs = Vec::new();
    for (v, u) in mate.iter().enumerate() {
        if let Some(u) = *u {
            if v < u {
                pairs.push((v, u));
            }
        }
    }
    Matching::new(g, pairs).expect("blossom search produced an invalid matching")
}

fn blossom(n: usize, adj: &[Vec<usize>]) -> Vec<Option<usize>> {
    let none = usize::MAX;
    let mut mate = vec![none; n];
    let mut parent = vec![none; n];
    let mut base: Vec<usize> = (0..n).collect();

    fn lca(
        n: usize,
        mate: &[usize],
        parent: &[usize],
        base: &[usize],
        mut a: usize,
        mut b: usize,
    ) -> usize {
        let none = usize::MAX;
        let mut used = vec![false; n];
        loop {
            a = base[a];
            used[a] = true;
            if mate[a] == none {
                break;
            }
            a = parent[mate[a]];
        }
        loop {
            b = base[b];
            if used[b] {
                return b;
            }
            b = parent[mate[b]];
        }
    }

    #[allow(clippy::too_many_arguments)]
    fn mark_path(
        mate: &[usize],
        parent: &mut [usize],
        base: &[usize],
        blossom_flag: &mut [bool],
        mut v: usize,
        b: usize,
        mut child: usize,
    ) {
        while base[v] != b {
            blossom_flag[base[v]] = true;
            blossom_flag[base[mate[v]]] = true;
            parent[v] = child;
            child = mate[v];
            v = parent[mate[v]];
        }
    }

    fn find_path(
        n: usize,
        adj: &[Vec<usize>],
        mate: &[usize],
        parent: &mut [usize],
        base: &mut [usize],
        start: usize,
    ) -> Option<usize> {
        let none = usize::MAX;
        for p in parent.iter_mut() {
            *p = none;
        }
        for (i, b) in base.iter_mut().enumerate() {
            *b = i;
        }
        let mut used = vec![false; n];
        used[start] = true;
        let mut queue = alloc::collections::VecDeque::new();
        queue.push_back(start);
        while let Some(v) = queue.pop_front() {
            for &to in &adj[v] {
                if base[v] == base[to] || mate[v] == to {
                    continue;
                }
                if to == start || (mate[to] != none && parent[mate[to]] != none) {
                    // odd cycle: contract the blossom
                    let cur = lca(n, mate, parent, base, v, to);
                    let mut blossom_flag = vec![false; n];
                    mark_path(mate, parent, base, &mut blossom_flag, v, cur, to);
                    mark_path(mate, parent, base, &mut blossom_flag, to, cur, v);
                    for i in 0..n {
                        if blossom_flag[base[i]] {
                            base[i] = cur;
                            if !used[i] {
                                used[i] = true;
                                queue.push_back(i);
                            }
                        }
                    }
                } else if parent[to] == none {
                    parent[to] = v;
                    if mate[to] == none {
                        return Some(to);
                    }
                    used[mate[to]] = true;
                    queue.push_back(mate[to]);
                }
            }
        }
        None
    }

    for v in 0..n {
        if mate[v] == none {
            if let Some(finish) = find_path(n, adj, &mate, &mut parent, &mut base, v) {
                // flip matched status along the augmenting path
                let mut cur = finish;
                while cur != none {
                    let prev = parent[cur];
                    let next = if prev == none { none } else { mate[prev] };
                    mate[cur] = prev;
                    if prev != none {
                        mate[prev] = cur;
                    }
                    cur = next;
                }
            }
        }
    }
    mate.into_iter().map(|m| (m != none).then_some(m)).collect()
}

/// The 3-vertex multigraph with pair multiplicities floor(d/2), floor(d/2)
/// and ceil(d/2): vertex 0 joined to 1 and to 2 with floor(d/2) edges each,
/// vertices 1 and 2 joined by ceil(d/2) edges. Its maximum degree is d and it
/// has floor(3d/2) edges, all pairwise adjacent.
pub fn make_shannon(d: usize) -> Result<Multigraph, Error> {
    if d < 2 {
        return Err(Error::BadArgument("shannon multigraph needs degree >= 2"));
    }
    Multigraph::from_edges(3, &[(0, 1, d / 2), (0, 2, d / 2), (1, 2, d.div_ceil(2))])
}

/// Finds a vertex triple over which the multiplicities dominate those of the
/// degree-`d` 3-vertex extremal multigraph: two pairs with at least
/// floor(d/2) and one with at least ceil(d/2) parallel edges. Returns the
/// lexicographically first such triple.
///
/// Panics if `d < 2`.
pub fn contains_shannon_submultigraph(g: &Multigraph, d: usize) -> Option<[usize; 3]> {
    assert!(d >= 2, "degree must be at least 2");
    let low = d / 2;
    let high = d.div_ceil(2);
    let n = g.num_vertices();
    for x in 0..n {
        for y in x + 1..n {
            for z in y + 1..n {
                let mut mults = [g.mu(x, y), g.mu(x, z), g.mu(y, z)];
                mults.sort_unstable();
                if mults[0] >= low && mults[1] >= low && mults[2] >= high {
                    return Some([x, y, z]);
                }
            }
        }
    }
    None
}

/// A proper assignment of colors to edge instances: instances sharing a
/// vertex (including parallel instances) receive distinct colors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeColoring {
    num_colors: usize,
    /// per pair, one color per parallel instance, sorted ascending
    colors: BTreeMap<(usize, usize), Vec<usize>>,
}

impl EdgeColoring {
    pub fn num_colors(&self) -> usize {
        self.num_colors
    }

    pub fn pair_colors(&self, u: usize, v: usize) -> &[usize] {
        self.colors
            .get(&(u.min(v), u.max(v)))
            .map(Vec::as_slice)
            .unwrap_or(&[])
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, &[usize])> + '_ {
        self.colors.iter().map(|(&(u, v), c)| (u, v, c.as_slice()))
    }

    /// The instances carrying `color`, as a pair list.
    pub fn color_class(&self, color: usize) -> Vec<(usize, usize)> {
        self.colors
            .iter()
            .filter(|(_, cols)| cols.contains(&color))
            .map(|(&p, _)| p)
            .collect()
    }

    /// Checks properness against a host: every instance colored, every color
    /// below `num_colors`, and no two instances at a vertex sharing a color.
    pub fn is_proper(&self, g: &Multigraph) -> bool {
        if self.colors.len() != g.num_pairs() {
            return false;
        }
        for (u, v, m) in g.pairs() {
            let cols = self.pair_colors(u, v);
            if cols.len() != m {
                return false;
            }
            if cols.iter().any(|&c| c >= self.num_colors) {
                return false;
            }
            if cols.windows(2).any(|w| w[0] == w[1]) {
                return false;
            }
        }
        for v in 0..g.num_vertices() {
            let mut seen = Vec::new();
            for (a, b, _) in g.pairs() {
                if a == v || b == v {
                    seen.extend_from_slice(self.pair_colors(a, b));
                }
            }
            seen.sort_unstable();
            if seen.windows(2).any(|w| w[0] == w[1]) {
                return false;
            }
        }
        true
    }

    fn from_assignment(instances: &[(usize, usize)], assigned: &[usize]) -> EdgeColoring {
        let mut colors: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
        for (&(u, v), &c) in instances.iter().zip(assigned) {
            colors.entry((u, v)).or_default().push(c);
        }
        let mut num_colors = 0;
        for cols in colors.values_mut() {
            cols.sort_unstable();
            num_colors = num_colors.max(cols.last().copied().unwrap_or(0) + 1);
        }
        EdgeColoring { num_colors, colors }
    }
}

/// Exact backtracking: a proper coloring with at most `limit` colors, or
/// `None` if impossible. Color symmetry is broken by only introducing a new
/// color index one past the largest used so far, and parallel instances are
/// forced into increasing color order.
fn color_with_at_most(instances: &[(usize, usize)], n: usize, limit: usize) -> Option<Vec<usize>> {
    assert!(limit <= 128, "color limit above supported palette");
    let m = instances.len();
    let mut assigned = vec![0usize; m];
    let mut vertex_used = vec![0u128; n];
    fn dfs(
        instances: &[(usize, usize)],
        i: usize,
        max_used: usize,
        limit: usize,
        assigned: &mut [usize],
        vertex_used: &mut [u128],
    ) -> bool {
        if i == instances.len() {
            return true;
        }
        let (u, v) = instances[i];
        let lowest = if i > 0 && instances[i - 1] == (u, v) { assigned[i - 1] + 1 } else { 0 };
        let highest = (max_used + 1).min(limit - 1);
        for c in lowest..=highest {
            let bit = 1u128 << c;
            if vertex_used[u] & bit != 0 || vertex_used[v] & bit != 0 {
                continue;
            }
            vertex_used[u] |= bit;
            vertex_used[v] |= bit;
            assigned[i] = c;
            if dfs(instances, i + 1, max_used.max(c), limit, assigned, vertex_used) {
                return true;
            }
            vertex_used[u] &= !bit;
            vertex_used[v] &= !bit;
        }
        false
    }
    if m == 0 {
        return Some(assigned);
    }
    if limit == 0 {
        return None;
    }
    dfs(instances, 0, 0, limit, &mut assigned, &mut vertex_used).then_some(assigned)
}

/// The chromatic index with a witness coloring: exact backtracking over edge
/// instances with color-symmetry pruning, starting the search at the maximum
/// degree. The witness is the first coloring in the search order, which is
/// deterministic.
pub fn chromatic_index_exact(g: &Multigraph) -> Result<(usize, EdgeColoring), Error> {
    if g.size() == 0 {
        return Err(Error::BadArgument("chromatic index of an empty edge set"));
    }
    let instances = g.instances();
    let mut limit = g.max_degree();
    loop {
        if let Some(assigned) = color_with_at_most(&instances, g.num_vertices(), limit) {
            let coloring = EdgeColoring::from_assignment(&instances, &assigned);
            debug_assert!(coloring.is_proper(g));
            return Ok((coloring.num_colors(), coloring));
        }
        limit += 1;
    }
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
}

/// Greedy coloring pass with alternating-chain repair, at a fixed palette.
fn greedy_kempe(
    instances: &[(usize, usize)],
    n: usize,
    palette: usize,
    order: &[usize],
) -> Option<Vec<usize>> {
    // at[v][c] = instance currently colored c at v
    let unset = usize::MAX;
    let mut at = vec![vec![unset; palette]; n];
    let mut assigned = vec![unset; instances.len()];

    let free = |at: &[Vec<usize>], v: usize, skip: usize| -> Vec<usize> {
        (0..palette).filter(|&c| at[v][c] == unset && c != skip).collect()
    };

    for &i in order {
        let (u, v) = instances[i];
        let direct = (0..palette).find(|&c| at[u][c] == unset && at[v][c] == unset);
        if let Some(c) = direct {
            assigned[i] = c;
            at[u][c] = i;
            at[v][c] = i;
            continue;
        }
        // Kempe repair: pick a free at u and b free at v, flip the a/b chain
        // starting at v; fails only if the chain ends at u.
        let mut done = false;
        'pairs: for &a in &free(&at, u, usize::MAX) {
            for &b in &free(&at, v, a) {
                let mut chain = Vec::new();
                let mut cur = v;
                let mut want = a;
                let mut reached_u = false;
                while at[cur][want] != unset {
                    let inst = at[cur][want];
                    chain.push(inst);
                    let (x, y) = instances[inst];
                    cur = if x == cur { y } else { x };
                    want = if want == a { b } else { a };
                    if cur == u {
                        reached_u = true;
                        break;
                    }
                }
                if reached_u {
                    continue;
                }
                // unset every chain entry before writing the swapped colors;
                // adjacent chain edges trade colors, so interleaving the two
                // passes would clobber live entries
                for &inst in &chain {
                    let (x, y) = instances[inst];
                    let old = assigned[inst];
                    at[x][old] = unset;
                    at[y][old] = unset;
                }
                for &inst in &chain {
                    let (x, y) = instances[inst];
                    let new = if assigned[inst] == a { b } else { a };
                    at[x][new] = inst;
                    at[y][new] = inst;
                    assigned[inst] = new;
                }
                assigned[i] = a;
                at[u][a] = i;
                at[v][a] = i;
                done = true;
                break 'pairs;
            }
        }
        if !done {
            return None;
        }
    }
    Some(assigned)
}

/// A proper coloring with at most `floor(3 * Delta / 2)` colors, which always
/// exists. A bounded number of greedy-with-repair passes handles virtually
/// every instance; exact backtracking at the full palette is the fallback.
pub fn edge_color_shannon(g: &Multigraph) -> EdgeColoring {
    let instances = g.instances();
    if instances.is_empty() {
        return EdgeColoring { num_colors: 0, colors: BTreeMap::new() };
    }
    let palette = 3 * g.max_degree() / 2;
    let n = g.num_vertices();
    let mut rng = XorShift(0x853c49e6748fea9b);
    for attempt in 0..32 {
        let mut order: Vec<usize> = (0..instances.len()).collect();
        if attempt > 0 {
            for i in (1..order.len()).rev() {
                order.swap(i, (rng.next() % (i as u64 + 1)) as usize);
            }
        }
        if let Some(assigned) = greedy_kempe(&instances, n, palette, &order) {
            let coloring = EdgeColoring::from_assignment(&instances, &assigned);
            debug_assert!(coloring.is_proper(g));
            return coloring;
        }
    }
    let assigned = color_with_at_most(&instances, n, palette)
        .expect("a coloring within floor(3*Delta/2) colors always exists");
    let coloring = EdgeColoring::from_assignment(&instances, &assigned);
    debug_assert!(coloring.is_proper(g));
    coloring
}

/// Verdict of checking `alpha'(G) >= m / floor(3d/2)` on one multigraph,
/// with both sides of the equality characterization spelled out.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatchingBoundVerdict {
    pub matching_number: usize,
    pub size: usize,
    pub shannon_bound: usize,
    /// `alpha' * floor(3d/2) >= m`, in exact integers.
    pub bound_holds: bool,
    /// `alpha' * floor(3d/2) == m`.
    pub equality: bool,
    /// `m = 0` or isomorphic to the degree-`d` extremal multigraph.
    pub is_shannon_or_empty: bool,
}

impl MatchingBoundVerdict {
    /// The characterization: equality exactly on the extremal multigraphs.
    pub fn iff_holds(&self) -> bool {
        self.equality == self.is_shannon_or_empty
    }
}

/// Checks the matching lower bound and its equality characterization for a
/// connected multigraph with maximum degree at most `d`, `d >= 4`.
pub fn matching_bound_check(g: &Multigraph, d: usize) -> Result<MatchingBoundVerdict, Error> {
    if d < 4 {
        return Err(Error::BadArgument("matching bound check requires d >= 4"));
    }
    if !g.is_connected() {
        return Err(Error::ContractViolation("multigraph must be connected"));
    }
    if g.max_degree() > d {
        return Err(Error::ContractViolation("maximum degree exceeds d"));
    }
    let alpha = max_matching(g).len();
    let m = g.size();
    let shannon_bound = 3 * d / 2;
    let lhs = alpha * shannon_bound;
    let is_shannon_or_empty =
        m == 0 || Multigraph::are_isomorphic(g, &make_shannon(d)?);
    Ok(MatchingBoundVerdict {
        matching_number: alpha,
        size: m,
        shannon_bound,
        bound_holds: lhs >= m,
        equality: lhs == m,
        is_shannon_or_empty,
    })
}

/// The cycle multigraph C_n.
pub fn cycle(n: usize) -> Result<Multigraph, Error> {
    if n < 3 {
        return Err(Error::BadArgument("cycles need at least 3 vertices"));
    }
    let mut g = Multigraph::new(n);
    for v in 0..n {
        g.add(v, (v + 1) % n, 1)?;
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Brute-force maximum matching over all subsets of the distinct pairs.
    pub(crate) fn matching_brute(g: &Multigraph) -> usize {
        let pairs: Vec<(usize, usize)> = g.pairs().map(|(u, v, _)| (u, v)).collect();
        assert!(pairs.len() <= 20);
        let mut best = 0;
        for mask in 0u32..1 << pairs.len() {
            let chosen: Vec<(usize, usize)> = pairs
                .iter()
                .enumerate()
                .filter(|&(i, _)| mask >> i & 1 == 1)
                .map(|(_, &p)| p)
                .collect();
            let mut used = vec![false; g.num_vertices()];
            let mut ok = true;
            for &(u, v) in &chosen {
                if used[u] || used[v] {
                    ok = false;
                    break;
                }
                used[u] = true;
                used[v] = true;
            }
            if ok {
                best = best.max(chosen.len());
            }
        }
        best
    }

    fn random_multigraph(state: &mut u64, max_n: usize, max_mu: usize) -> Multigraph {
        let mut next = || {
            *state ^= *state << 13;
            *state ^= *state >> 7;
            *state ^= *state << 17;
            *state
        };
        let n = 2 + (next() % (max_n as u64 - 1)) as usize;
        let mut g = Multigraph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                if next() % 3 == 0 {
                    let m = 1 + (next() % max_mu as u64) as usize;
                    g.add(u, v, m).unwrap();
                }
            }
        }
        g
    }

    #[test]
    fn shannon_multigraph_shape() {
        let s4 = make_shannon(4).unwrap();
        assert_eq!((s4.mu(0, 1), s4.mu(0, 2), s4.mu(1, 2)), (2, 2, 2));
        assert_eq!(s4.size(), 6);
        assert_eq!(s4.max_degree(), 4);

        let s5 = make_shannon(5).unwrap();
        assert_eq!((s5.mu(0, 1), s5.mu(0, 2), s5.mu(1, 2)), (2, 2, 3));
        assert_eq!(s5.size(), 7);

        let s2 = make_shannon(2).unwrap();
        assert_eq!(s2.size(), 3);
        assert!(Multigraph::are_isomorphic(&s2, &cycle(3).unwrap()));

        assert!(make_shannon(1).is_err());
    }

    #[test]
    fn shannon_degree_profile() {
        // two vertices of degree d and one of degree 2*floor(d/2)
        for d in 2..=9 {
            let s = make_shannon(d).unwrap();
            let mut degs = s.degrees();
            degs.sort_unstable();
            assert_eq!(degs, vec![(2 * (d / 2)).min(d), d, d]);
        }
    }

    #[test]
    fn matching_examples() {
        for d in [4, 5, 6] {
            assert_eq!(max_matching(&make_shannon(d).unwrap()).len(), 1);
        }
        assert_eq!(max_matching(&Multigraph::new(4)).len(), 0);
        let path4 = Multigraph::from_edges(4, &[(0, 1, 1), (1, 2, 1), (2, 3, 1)]).unwrap();
        assert_eq!(matching_brute(&path4), 2);
        assert_eq!(max_matching(&path4).len(), 2);
    }

    #[test]
    fn blossom_handles_odd_cycles() {
        let c5 = cycle(5).unwrap();
        assert_eq!(max_matching(&c5).len(), 2);
        // 5-cycle plus a chord, classic contraction case
        let mut g = cycle(5).unwrap();
        g.add(1, 3, 1).unwrap();
        assert_eq!(max_matching(&g).len(), matching_brute(&g));
        // two triangles joined by a bridge
        let g = Multigraph::from_edges(
            6,
            &[(0, 1, 1), (1, 2, 1), (0, 2, 1), (2, 3, 1), (3, 4, 1), (4, 5, 1), (3, 5, 1)],
        )
        .unwrap();
        assert_eq!(max_matching(&g).len(), matching_brute(&g));
    }

    #[test]
    fn matching_agrees_with_brute_force_on_randoms() {
        let mut state = 0x123456789abcdef0u64;
        for _ in 0..300 {
            let g = random_multigraph(&mut state, 7, 3);
            let m = max_matching(&g);
            assert_eq!(m.len(), matching_brute(&g), "{g:?}");
            assert!(Matching::new(&g, m.pairs().to_vec()).is_ok());
        }
    }

    #[test]
    fn chromatic_index_examples() {
        assert_eq!(chromatic_index_exact(&make_shannon(4).unwrap()).unwrap().0, 6);
        assert_eq!(chromatic_index_exact(&cycle(5).unwrap()).unwrap().0, 3);
        let single = Multigraph::from_edges(2, &[(0, 1, 1)]).unwrap();
        assert_eq!(chromatic_index_exact(&single).unwrap().0, 1);
        assert!(chromatic_index_exact(&Multigraph::new(3)).is_err());
    }

    #[test]
    fn chromatic_index_witness_is_proper() {
        let mut state = 0xfeedfacecafebeefu64;
        for _ in 0..60 {
            let g = random_multigraph(&mut state, 5, 3);
            if g.size() == 0 || g.size() > 9 {
                continue;
            }
            let (chi, coloring) = chromatic_index_exact(&g).unwrap();
            assert!(coloring.is_proper(&g));
            assert_eq!(coloring.num_colors(), chi);
            assert!(chi >= g.max_degree());
        }
    }

    #[test]
    fn color_classes_are_matchings() {
        let g = make_shannon(5).unwrap();
        let (chi, coloring) = chromatic_index_exact(&g).unwrap();
        for c in 0..chi {
            let class = coloring.color_class(c);
            if !class.is_empty() {
                assert!(Matching::new(&g, class).is_ok());
            }
        }
    }

    #[test]
    fn shannon_coloring_stays_in_bound() {
        for d in 2..=8 {
            let s = make_shannon(d).unwrap();
            let coloring = edge_color_shannon(&s);
            assert!(coloring.is_proper(&s));
            assert_eq!(coloring.num_colors(), 3 * d / 2);
        }
        let path = Multigraph::from_edges(4, &[(0, 1, 1), (1, 2, 1), (2, 3, 1)]).unwrap();
        assert_eq!(edge_color_shannon(&path).num_colors(), 2);
        let c5 = cycle(5).unwrap();
        let col = edge_color_shannon(&c5);
        assert!(col.is_proper(&c5));
        assert_eq!(col.num_colors(), 3);
        assert_eq!(edge_color_shannon(&Multigraph::new(2)).num_colors(), 0);
    }

    #[test]
    fn shannon_coloring_on_randoms() {
        let mut state = 0x2545f4914f6cdd1du64;
        for _ in 0..150 {
            let g = random_multigraph(&mut state, 6, 4);
            let coloring = edge_color_shannon(&g);
            assert!(coloring.is_proper(&g), "{g:?}");
            if g.size() > 0 {
                assert!(coloring.num_colors() <= 3 * g.max_degree() / 2, "{g:?}");
            }
        }
    }

    #[test]
    fn shannon_containment() {
        let s5 = make_shannon(5).unwrap();
        assert_eq!(contains_shannon_submultigraph(&s5, 5), Some([0, 1, 2]));
        assert_eq!(contains_shannon_submultigraph(&cycle(5).unwrap(), 2), None);
        // pendant edge at the degree-4 vertex of the degree-5 instance
        let mut g = Multigraph::from_edges(4, &[(0, 1, 2), (0, 2, 2), (1, 2, 3)]).unwrap();
        g.add(0, 3, 1).unwrap();
        assert_eq!(g.degree(0), 5);
        assert_eq!(contains_shannon_submultigraph(&g, 5), Some([0, 1, 2]));
    }

    #[test]
    fn matching_bound_verdicts() {
        let v = matching_bound_check(&make_shannon(5).unwrap(), 5).unwrap();
        assert!(v.bound_holds && v.equality && v.is_shannon_or_empty && v.iff_holds());

        let single = Multigraph::from_edges(2, &[(0, 1, 1)]).unwrap();
        let v = matching_bound_check(&single, 4).unwrap();
        assert!(v.bound_holds && !v.equality && !v.is_shannon_or_empty && v.iff_holds());

        let path4 = Multigraph::from_edges(4, &[(0, 1, 1), (1, 2, 1), (2, 3, 1)]).unwrap();
        let v = matching_bound_check(&path4, 4).unwrap();
        assert_eq!(v.matching_number, 2);
        assert!(v.bound_holds && !v.equality && v.iff_holds());

        // m = 0 on a single vertex: the vacuous equality clause
        let trivial = Multigraph::new(1);
        let v = matching_bound_check(&trivial, 4).unwrap();
        assert!(v.equality && v.is_shannon_or_empty && v.iff_holds());

        assert!(matching_bound_check(&make_shannon(5).unwrap(), 3).is_err());
        assert!(matching_bound_check(&make_shannon(6).unwrap(), 5).is_err());
        let disconnected = Multigraph::from_edges(4, &[(0, 1, 1), (2, 3, 1)]).unwrap();
        assert!(matching_bound_check(&disconnected, 4).is_err());
    }

    #[test]
    fn construction_rejects_loops_and_range_errors() {
        let mut g = Multigraph::new(3);
        assert!(g.add(1, 1, 1).is_err());
        assert!(g.add(0, 3, 1).is_err());
        assert!(g.add(0, 1, 0).is_err());
        g.add(2, 0, 2).unwrap();
        assert_eq!(g.mu(0, 2), 2);
    }

    #[test]
    fn two_uniform_round_trip() {
        let g = Multigraph::from_edges(4, &[(0, 1, 2), (2, 3, 1)]).unwrap();
        let h = g.as_two_uniform();
        assert_eq!(h.num_edges(), 3);
        assert_eq!(Multigraph::from_two_uniform(&h).unwrap(), g);
    }
}
