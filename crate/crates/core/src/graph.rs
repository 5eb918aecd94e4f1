//! Unembedded multigraphs with loops and parallel edges.

use std::collections::VecDeque;
use std::fmt::Write;

use serde::Serialize;
use thiserror::Error;

pub const DEFAULT_ISO_BUDGET: usize = 40;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("edge {edge} has endpoint {vertex} outside 0..{n}")]
    BadEndpoint { edge: usize, vertex: usize, n: usize },
    #[error("label list has {got} entries for {expected} edges")]
    LabelCount { expected: usize, got: usize },
    #[error("graph has {edges} edges, isomorphism budget is {budget}")]
    BudgetExceeded { edges: usize, budget: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbstractMultigraph {
    n: usize,
    edges: Vec<(usize, usize)>,
    labels: Option<Vec<usize>>,
}

/// Biconnected components (edge index lists) and cut vertices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Blocks {
    pub blocks: Vec<Vec<usize>>,
    pub cut_vertices: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GraphPredicates {
    pub is_bipartite: bool,
    pub components_eulerian: bool,
    pub blocks: Blocks,
}

impl AbstractMultigraph {
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<Self, GraphError> {
        for (i, &(a, b)) in edges.iter().enumerate() {
            for v in [a, b] {
                if v >= n {
                    return Err(GraphError::BadEndpoint { edge: i, vertex: v, n });
                }
            }
        }
        Ok(AbstractMultigraph { n, edges, labels: None })
    }

    pub fn with_labels(n: usize, edges: Vec<(usize, usize)>, labels: Vec<usize>) -> Result<Self, GraphError> {
        if labels.len() != edges.len() {
            return Err(GraphError::LabelCount { expected: edges.len(), got: labels.len() });
        }
        let mut g = Self::new(n, edges)?;
        g.labels = Some(labels);
        Ok(g)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn labels(&self) -> Option<&[usize]> {
        self.labels.as_deref()
    }

    /// Degrees with loops counted twice.
    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.n];
        for &(a, b) in &self.edges {
            d[a] += 1;
            d[b] += 1;
        }
        d
    }

    fn multiplicity(&self) -> Vec<Vec<usize>> {
        let mut m = vec![vec![0; self.n]; self.n];
        for &(a, b) in &self.edges {
            m[a][b] += 1;
            if a != b {
                m[b][a] += 1;
            }
        }
        m
    }

    pub fn components(&self) -> (Vec<usize>, usize) {
        let mut uf = crate::map::UnionFind::new(self.n);
        for &(a, b) in &self.edges {
            uf.union(a, b);
        }
        let mut id = vec![usize::MAX; self.n];
        let mut comp = vec![0; self.n];
        let mut k = 0;
        for v in 0..self.n {
            let r = uf.find(v);
            if id[r] == usize::MAX {
                id[r] = k;
                k += 1;
            }
            comp[v] = id[r];
        }
        (comp, k)
    }

    /// Proper 2-colouring if one exists.
    pub fn two_colouring(&self) -> Option<Vec<bool>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(a, b) in &self.edges {
            if a == b {
                return None;
            }
            adj[a].push(b);
            adj[b].push(a);
        }
        let mut col: Vec<Option<bool>> = vec![None; self.n];
        for s in 0..self.n {
            if col[s].is_some() {
                continue;
            }
            col[s] = Some(false);
            let mut q = VecDeque::from([s]);
            while let Some(v) = q.pop_front() {
                let c = col[v].unwrap();
                for &w in &adj[v] {
                    match col[w] {
                        None => {
                            col[w] = Some(!c);
                            q.push_back(w);
                        }
                        Some(x) if x == c => return None,
                        _ => {}
                    }
                }
            }
        }
        Some(col.into_iter().map(|c| c.unwrap()).collect())
    }

    pub fn is_bipartite(&self) -> bool {
        self.two_colouring().is_some()
    }

    /// Every vertex has even degree (loops counted twice), so every
    /// connected component is Eulerian.
    pub fn components_eulerian(&self) -> bool {
        self.odd_vertices().is_empty()
    }

    pub fn odd_vertices(&self) -> Vec<usize> {
        self.degrees().iter().enumerate().filter(|(_, d)| *d % 2 == 1).map(|(v, _)| v).collect()
    }

    /// Biconnected components by Hopcroft–Tarjan over edges. A loop forms a
    /// block of its own; parallel edges share a block.
    pub fn blocks(&self) -> Blocks {
        let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); self.n];
        let mut blocks = Vec::new();
        for (i, &(a, b)) in self.edges.iter().enumerate() {
            if a == b {
                blocks.push(vec![i]);
            } else {
                adj[a].push((b, i));
                adj[b].push((a, i));
            }
        }
        let mut disc = vec![usize::MAX; self.n];
        let mut low = vec![0; self.n];
        let mut is_cut = vec![false; self.n];
        let mut time = 0;
        let mut estack: Vec<usize> = Vec::new();
        for root in 0..self.n {
            if disc[root] != usize::MAX {
                continue;
            }
            disc[root] = time;
            low[root] = time;
            time += 1;
            let mut root_children = 0;
            // (vertex, parent edge, next adjacency index)
            let mut stack: Vec<(usize, usize, usize)> = vec![(root, usize::MAX, 0)];
            while let Some(top) = stack.last_mut() {
                let (v, pe, idx) = *top;
                if idx < adj[v].len() {
                    top.2 += 1;
                    let (w, ei) = adj[v][idx];
                    if ei == pe {
                        continue;
                    }
                    if disc[w] == usize::MAX {
                        estack.push(ei);
                        disc[w] = time;
                        low[w] = time;
                        time += 1;
                        if v == root {
                            root_children += 1;
                        }
                        stack.push((w, ei, 0));
                    } else if disc[w] < disc[v] {
                        estack.push(ei);
                        low[v] = low[v].min(disc[w]);
                    }
                } else {
                    stack.pop();
                    if let Some(&(u, _, _)) = stack.last() {
                        low[u] = low[u].min(low[v]);
                        if low[v] >= disc[u] {
                            if u != root {
                                is_cut[u] = true;
                            }
                            let mut block = Vec::new();
                            while let Some(e) = estack.pop() {
                                block.push(e);
                                if e == pe {
                                    break;
                                }
                            }
                            block.sort_unstable();
                            blocks.push(block);
                        }
                    }
                }
            }
            if root_children > 1 {
                is_cut[root] = true;
            }
        }
        // Loops also make their vertex a cut vertex when it has other edges.
        let degrees = self.degrees();
        for &(a, b) in &self.edges {
            if a == b && degrees[a] > 2 {
                is_cut[a] = true;
            }
        }
        blocks.sort();
        Blocks { blocks, cut_vertices: (0..self.n).filter(|&v| is_cut[v]).collect() }
    }

    pub fn predicates(&self) -> GraphPredicates {
        GraphPredicates {
            is_bipartite: self.is_bipartite(),
            components_eulerian: self.components_eulerian(),
            blocks: self.blocks(),
        }
    }

    /// Fundamental cycles of a spanning forest, as edge index lists.
    pub fn cycle_basis(&self) -> Vec<Vec<usize>> {
        let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); self.n];
        for (i, &(a, b)) in self.edges.iter().enumerate() {
            if a != b {
                adj[a].push((b, i));
                adj[b].push((a, i));
            }
        }
        let mut parent: Vec<Option<(usize, usize)>> = vec![None; self.n];
        let mut depth = vec![usize::MAX; self.n];
        let mut tree = vec![false; self.edges.len()];
        for s in 0..self.n {
            if depth[s] != usize::MAX {
                continue;
            }
            depth[s] = 0;
            let mut q = VecDeque::from([s]);
            while let Some(v) = q.pop_front() {
                for &(w, ei) in &adj[v] {
                    if depth[w] == usize::MAX {
                        depth[w] = depth[v] + 1;
                        parent[w] = Some((v, ei));
                        tree[ei] = true;
                        q.push_back(w);
                    }
                }
            }
        }
        let mut basis = Vec::new();
        for (i, &(a, b)) in self.edges.iter().enumerate() {
            if tree[i] {
                continue;
            }
            let mut cycle = vec![i];
            let (mut x, mut y) = (a, b);
            while x != y {
                if depth[x] >= depth[y] {
                    let (p, e) = parent[x].unwrap();
                    cycle.push(e);
                    x = p;
                } else {
                    let (p, e) = parent[y].unwrap();
                    cycle.push(e);
                    y = p;
                }
            }
            basis.push(cycle);
        }
        basis
    }

    /// Exact isomorphism test by backtracking over vertex assignments,
    /// pruned by degree, loop count, neighbour-degree profile and pairwise
    /// edge multiplicities. Labels are ignored.
    pub fn is_isomorphic(&self, other: &AbstractMultigraph, budget: usize) -> Result<bool, GraphError> {
        for g in [self, other] {
            if g.edge_count() > budget {
                return Err(GraphError::BudgetExceeded { edges: g.edge_count(), budget });
            }
        }
        if self.n != other.n || self.edges.len() != other.edges.len() {
            return Ok(false);
        }
        let (ma, mb) = (self.multiplicity(), other.multiplicity());
        let (ia, ib) = (self.vertex_invariants(&ma), other.vertex_invariants(&mb));
        let mut sa = ia.clone();
        let mut sb = ib.clone();
        sa.sort();
        sb.sort();
        if sa != sb {
            return Ok(false);
        }
        // Visit vertices so that each (after the first in a component) has an
        // already-placed neighbour.
        let order = self.search_order(&ma);
        let mut map = vec![usize::MAX; self.n];
        let mut used = vec![false; self.n];
        Ok(iso_search(0, &order, &ma, &mb, &ia, &ib, &mut map, &mut used))
    }

    /// Isomorphism that must send every edge to the edge carrying the same
    /// label. Graphs without labels, or with repeated labels, never match.
    pub fn is_label_isomorphic(&self, other: &AbstractMultigraph) -> bool {
        let (Some(la), Some(lb)) = (self.labels(), other.labels()) else {
            return false;
        };
        if self.n != other.n || la.len() != lb.len() {
            return false;
        }
        let mut by_label = std::collections::BTreeMap::new();
        for (i, &l) in lb.iter().enumerate() {
            if by_label.insert(l, i).is_some() {
                return false;
            }
        }
        let mut pairs = Vec::with_capacity(la.len());
        for (i, l) in la.iter().enumerate() {
            match by_label.remove(l) {
                Some(j) => pairs.push((self.edges[i], other.edges[j])),
                None => return false,
            }
        }
        let mut fwd = vec![usize::MAX; self.n];
        let mut bwd = vec![usize::MAX; self.n];
        label_search(0, &pairs, &mut fwd, &mut bwd)
    }

    fn vertex_invariants(&self, m: &[Vec<usize>]) -> Vec<(usize, usize, Vec<usize>)> {
        let deg = self.degrees();
        (0..self.n)
            .map(|v| {
                let mut nb: Vec<usize> = (0..self.n)
                    .filter(|&w| w != v)
                    .flat_map(|w| std::iter::repeat_n(deg[w], m[v][w]))
                    .collect();
                nb.sort_unstable();
                (deg[v], m[v][v], nb)
            })
            .collect()
    }

    fn search_order(&self, m: &[Vec<usize>]) -> Vec<usize> {
        let deg = self.degrees();
        let mut placed = vec![false; self.n];
        let mut order = Vec::with_capacity(self.n);
        while order.len() < self.n {
            let start = (0..self.n).filter(|&v| !placed[v]).max_by_key(|&v| (deg[v], std::cmp::Reverse(v))).unwrap();
            placed[start] = true;
            order.push(start);
            loop {
                let next = (0..self.n)
                    .filter(|&v| !placed[v])
                    .map(|v| (order.iter().filter(|&&u| m[u][v] > 0).count(), deg[v], std::cmp::Reverse(v)))
                    .zip((0..self.n).filter(|&v| !placed[v]))
                    .filter(|((c, _, _), _)| *c > 0)
                    .max_by_key(|(k, _)| *k)
                    .map(|(_, v)| v);
                match next {
                    Some(v) => {
                        placed[v] = true;
                        order.push(v);
                    }
                    None => break,
                }
            }
        }
        order
    }

    pub fn to_dot(&self, name: &str) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "graph {name} {{");
        for v in 0..self.n {
            let _ = writeln!(s, "  v{v};");
        }
        for (i, &(a, b)) in self.edges.iter().enumerate() {
            let label = self.labels.as_ref().map_or(i, |l| l[i]);
            let _ = writeln!(s, "  v{a} -- v{b} [label=\"{}\"];", label + 1);
        }
        s.push_str("}\n");
        s
    }
}

#[allow(clippy::too_many_arguments)]
fn iso_search(
    depth: usize,
    order: &[usize],
    ma: &[Vec<usize>],
    mb: &[Vec<usize>],
    ia: &[(usize, usize, Vec<usize>)],
    ib: &[(usize, usize, Vec<usize>)],
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    if depth == order.len() {
        return true;
    }
    let v = order[depth];
    for w in 0..used.len() {
        if used[w] || ia[v] != ib[w] {
            continue;
        }
        let consistent = order[..depth].iter().all(|&u| ma[v][u] == mb[w][map[u]]);
        if !consistent {
            continue;
        }
        map[v] = w;
        used[w] = true;
        if iso_search(depth + 1, order, ma, mb, ia, ib, map, used) {
            return true;
        }
        used[w] = false;
        map[v] = usize::MAX;
    }
    false
}

type Ends = (usize, usize);

fn label_search(i: usize, pairs: &[(Ends, Ends)], fwd: &mut [usize], bwd: &mut [usize]) -> bool {
    let Some(&((a, b), (x, y))) = pairs.get(i) else {
        return true;
    };
    for (p, q) in [(x, y), (y, x)] {
        let mut set = Vec::new();
        let mut ok = true;
        for (u, w) in [(a, p), (b, q)] {
            if fwd[u] == usize::MAX && bwd[w] == usize::MAX {
                fwd[u] = w;
                bwd[w] = u;
                set.push(u);
            } else if fwd[u] != w {
                ok = false;
                break;
            }
        }
        if ok && label_search(i + 1, pairs, fwd, bwd) {
            return true;
        }
        for u in set {
            bwd[fwd[u]] = usize::MAX;
            fwd[u] = usize::MAX;
        }
        if x == y {
            break;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: usize, e: &[(usize, usize)]) -> AbstractMultigraph {
        AbstractMultigraph::new(n, e.to_vec()).unwrap()
    }

    fn triangle() -> AbstractMultigraph {
        g(3, &[(0, 1), (1, 2), (2, 0)])
    }

    fn theta() -> AbstractMultigraph {
        g(2, &[(0, 1), (0, 1), (0, 1)])
    }

    #[test]
    fn iso_examples() {
        assert!(!triangle().is_isomorphic(&theta(), 40).unwrap());
        let doubled = g(3, &[(0, 1), (1, 2), (2, 0), (0, 1)]);
        let theta_plus = g(3, &[(0, 1), (0, 1), (0, 1), (1, 2)]);
        assert!(!doubled.is_isomorphic(&theta_plus, 40).unwrap());
        let relabelled = g(3, &[(2, 1), (0, 2), (1, 0)]);
        assert!(triangle().is_isomorphic(&relabelled, 40).unwrap());
    }

    #[test]
    fn budget_is_enforced() {
        let big = g(1, &vec![(0, 0); 41]);
        assert_eq!(
            big.is_isomorphic(&big, 40).unwrap_err(),
            GraphError::BudgetExceeded { edges: 41, budget: 40 }
        );
    }

    #[test]
    fn predicates_examples() {
        let p = theta().predicates();
        assert!(p.is_bipartite && !p.components_eulerian);
        let p = triangle().predicates();
        assert!(!p.is_bipartite && p.components_eulerian);
        let two = g(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]);
        let p = two.predicates();
        assert!(p.components_eulerian);
        assert_eq!(p.blocks.blocks.len(), 2);
        assert!(!g(1, &[(0, 0)]).is_bipartite());
    }

    #[test]
    fn blocks_and_cut_vertices() {
        // Two triangles sharing vertex 2, plus a pendant edge at 4.
        let bowtie = g(6, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2), (4, 5)]);
        let b = bowtie.blocks();
        assert_eq!(b.blocks, vec![vec![0, 1, 2], vec![3, 4, 5], vec![6]]);
        assert_eq!(b.cut_vertices, vec![2, 4]);
        assert_eq!(theta().blocks().blocks, vec![vec![0, 1, 2]]);
    }

    #[test]
    fn cycle_basis_size() {
        let basis = g(3, &[(0, 1), (1, 2), (2, 0), (0, 1), (2, 2)]).cycle_basis();
        assert_eq!(basis.len(), 3);
        assert!(basis.contains(&vec![4]));
    }

    #[test]
    fn label_isomorphism() {
        let a = AbstractMultigraph::with_labels(3, vec![(0, 1), (1, 2), (2, 0)], vec![5, 6, 7]).unwrap();
        let b = AbstractMultigraph::with_labels(3, vec![(2, 0), (0, 1), (1, 2)], vec![5, 6, 7]).unwrap();
        assert!(a.is_label_isomorphic(&b));
        // Path 5-6 with 7 a pendant at the middle versus at an end.
        let p = AbstractMultigraph::with_labels(4, vec![(0, 1), (1, 2), (1, 3)], vec![5, 6, 7]).unwrap();
        let q = AbstractMultigraph::with_labels(4, vec![(0, 1), (1, 2), (2, 3)], vec![5, 6, 7]).unwrap();
        assert!(!p.is_label_isomorphic(&q));
        assert!(p.is_isomorphic(&p, DEFAULT_ISO_BUDGET).unwrap());
    }

    #[test]
    fn bad_endpoint() {
        assert!(AbstractMultigraph::new(2, vec![(0, 2)]).is_err());
    }
}
