//! Orientable ribbon graphs encoded as dart permutations.
//!
//! A map on `2e` darts is a pair `(sigma, alpha)`: `sigma` rotates darts
//! counterclockwise around their vertex and `alpha` swaps the two darts of an
//! edge. Internally edge `k` always owns darts `2k` and `2k + 1`, so `alpha`
//! is `d ^ 1`. Faces are the orbits of `sigma ∘ alpha`.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::Neg;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arrow::{Arrow, ArrowPresentation};

pub type Dart = usize;
pub type EdgeId = usize;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MapError {
    #[error("alpha fixes dart {0}")]
    FixedPointAlpha(usize),
    #[error("{0} is not a permutation of the dart set")]
    NotPermutation(&'static str),
    #[error("alpha is not an involution at dart {0}")]
    NotInvolution(usize),
    #[error("edge weights cover {got} edges, map has {expected}")]
    WeightCoverage { expected: usize, got: usize },
    #[error("unknown edge {0}")]
    UnknownEdge(EdgeId),
    #[error("label {0} does not occur exactly twice")]
    LabelNotTwice(usize),
    #[error("arrow presentation is not orientable")]
    NonOrientable,
    #[error("malformed map json: {0}")]
    Json(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

impl Sign {
    pub fn from_bool(positive: bool) -> Self {
        if positive {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    pub fn is_plus(self) -> bool {
        self == Sign::Plus
    }
}

impl Neg for Sign {
    type Output = Sign;
    fn neg(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(if self.is_plus() { "+" } else { "-" })
    }
}

/// Contraction / deletion label of a Tait graph edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Cd {
    #[serde(rename = "c")]
    C,
    #[serde(rename = "d")]
    D,
}

impl fmt::Display for Cd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Cd::C => "c",
            Cd::D => "d",
        })
    }
}

/// Edge weight: Tait sign, optional oriented sign and optional c/d label.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    pub tait: Sign,
    pub oriented: Option<Sign>,
    pub cd: Option<Cd>,
}

impl Weight {
    pub fn signed(tait: Sign) -> Self {
        Weight { tait, oriented: None, cd: None }
    }

    /// Bi-weight `(m, sigma)` with the c/d label it determines.
    pub fn biweighted(tait: Sign, oriented: Sign) -> Self {
        Weight { tait, oriented: Some(oriented), cd: Some(cd_of(tait, oriented)) }
    }

    /// The weight carried by the partner edge after dualising this edge.
    pub fn dualised(self) -> Self {
        let tait = -self.tait;
        Weight { tait, oriented: self.oriented, cd: self.oriented.map(|o| cd_of(tait, o)) }
    }
}

pub fn cd_of(tait: Sign, oriented: Sign) -> Cd {
    if tait == oriented {
        Cd::C
    } else {
        Cd::D
    }
}

/// Per-map counts. `genus_per_component` lists dart-carrying components in
/// order of least dart, followed by one zero per isolated vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counts {
    pub v: usize,
    pub e: usize,
    pub k: usize,
    pub p: usize,
    pub genus_per_component: Vec<usize>,
    pub g: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CombinatorialMap {
    sigma: Vec<Dart>,
    isolated: usize,
    weights: Option<Vec<Weight>>,
}

#[inline]
pub fn alpha(d: Dart) -> Dart {
    d ^ 1
}

#[inline]
pub fn edge_of(d: Dart) -> EdgeId {
    d / 2
}

fn check_permutation(p: &[usize], what: &'static str) -> Result<(), MapError> {
    let mut seen = vec![false; p.len()];
    for &x in p {
        if x >= p.len() || seen[x] {
            return Err(MapError::NotPermutation(what));
        }
        seen[x] = true;
    }
    Ok(())
}

/// Orbits of a permutation, each starting at its least element, ordered by
/// that element.
pub fn orbits(perm: &[usize]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; perm.len()];
    let mut out = Vec::new();
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut orbit = Vec::new();
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            orbit.push(x);
            x = perm[x];
        }
        out.push(orbit);
    }
    out
}

/// Orbit index of every element.
pub fn orbit_index(perm: &[usize]) -> (Vec<usize>, usize) {
    let orbs = orbits(perm);
    let mut idx = vec![0; perm.len()];
    for (i, o) in orbs.iter().enumerate() {
        for &x in o {
            idx[x] = i;
        }
    }
    (idx, orbs.len())
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    pub(crate) fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.parent[r] != r {
            r = self.parent[r];
        }
        let mut y = x;
        while self.parent[y] != r {
            let next = self.parent[y];
            self.parent[y] = r;
            y = next;
        }
        r
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[hi] = lo;
        true
    }
}

impl CombinatorialMap {
    /// Builds a map from arbitrary `sigma`/`alpha` permutations on darts
    /// `0..n`. Edges are renumbered by least dart; edge `k`'s least dart
    /// becomes dart `2k`. `weights`, if given, is indexed by that edge order.
    pub fn build(
        sigma: &[usize],
        alpha_perm: &[usize],
        isolated: usize,
        weights: Option<Vec<Weight>>,
    ) -> Result<Self, MapError> {
        if sigma.len() != alpha_perm.len() {
            return Err(MapError::NotPermutation("sigma/alpha length"));
        }
        check_permutation(sigma, "sigma")?;
        check_permutation(alpha_perm, "alpha")?;
        for (d, &a) in alpha_perm.iter().enumerate() {
            if a == d {
                return Err(MapError::FixedPointAlpha(d));
            }
            if alpha_perm[a] != d {
                return Err(MapError::NotInvolution(d));
            }
        }
        let n = sigma.len();
        let mut relabel = vec![usize::MAX; n];
        let mut next = 0;
        for d in 0..n {
            if relabel[d] == usize::MAX {
                relabel[d] = next;
                relabel[alpha_perm[d]] = next + 1;
                next += 2;
            }
        }
        let mut new_sigma = vec![0; n];
        for d in 0..n {
            new_sigma[relabel[d]] = relabel[sigma[d]];
        }
        Self::from_sigma(new_sigma, isolated, weights)
    }

    /// Builds a map whose edge `k` owns darts `2k`, `2k + 1`.
    pub fn from_sigma(
        sigma: Vec<Dart>,
        isolated: usize,
        weights: Option<Vec<Weight>>,
    ) -> Result<Self, MapError> {
        if sigma.len() % 2 != 0 {
            return Err(MapError::FixedPointAlpha(sigma.len() - 1));
        }
        check_permutation(&sigma, "sigma")?;
        if let Some(w) = &weights {
            if w.len() != sigma.len() / 2 {
                return Err(MapError::WeightCoverage { expected: sigma.len() / 2, got: w.len() });
            }
        }
        Ok(CombinatorialMap { sigma, isolated, weights })
    }

    pub fn isolated_vertex() -> Self {
        CombinatorialMap { sigma: Vec::new(), isolated: 1, weights: None }
    }

    pub fn num_darts(&self) -> usize {
        self.sigma.len()
    }

    pub fn num_edges(&self) -> usize {
        self.sigma.len() / 2
    }

    pub fn isolated(&self) -> usize {
        self.isolated
    }

    pub fn sigma(&self) -> &[Dart] {
        &self.sigma
    }

    pub fn sigma_inverse(&self) -> Vec<Dart> {
        let mut inv = vec![0; self.sigma.len()];
        for (d, &s) in self.sigma.iter().enumerate() {
            inv[s] = d;
        }
        inv
    }

    /// `phi = sigma ∘ alpha`; its orbits are the faces.
    pub fn phi(&self) -> Vec<Dart> {
        (0..self.num_darts()).map(|d| self.sigma[alpha(d)]).collect()
    }

    pub fn weights(&self) -> Option<&[Weight]> {
        self.weights.as_deref()
    }

    pub fn weight(&self, e: EdgeId) -> Option<Weight> {
        self.weights.as_ref().map(|w| w[e])
    }

    pub fn with_weights(mut self, weights: Option<Vec<Weight>>) -> Result<Self, MapError> {
        if let Some(w) = &weights {
            if w.len() != self.num_edges() {
                return Err(MapError::WeightCoverage { expected: self.num_edges(), got: w.len() });
            }
        }
        self.weights = weights;
        Ok(self)
    }

    pub fn vertices(&self) -> Vec<Vec<Dart>> {
        orbits(&self.sigma)
    }

    pub fn faces(&self) -> Vec<Vec<Dart>> {
        orbits(&self.phi())
    }

    /// Component index per dart and the number of dart-carrying components.
    pub fn dart_components(&self) -> (Vec<usize>, usize) {
        let n = self.num_darts();
        let mut uf = UnionFind::new(n);
        for d in 0..n {
            uf.union(d, self.sigma[d]);
            uf.union(d, alpha(d));
        }
        let mut ids = vec![usize::MAX; n];
        let mut comp = vec![0; n];
        let mut count = 0;
        for d in 0..n {
            let r = uf.find(d);
            if ids[r] == usize::MAX {
                ids[r] = count;
                count += 1;
            }
            comp[d] = ids[r];
        }
        (comp, count)
    }

    pub fn counts(&self) -> Counts {
        let (comp, kd) = self.dart_components();
        let mut vi = vec![0usize; kd];
        let mut ei = vec![0usize; kd];
        let mut pi = vec![0usize; kd];
        for o in self.vertices() {
            vi[comp[o[0]]] += 1;
        }
        for d in (0..self.num_darts()).step_by(2) {
            ei[comp[d]] += 1;
        }
        for o in self.faces() {
            pi[comp[o[0]]] += 1;
        }
        let mut genus_per_component: Vec<usize> = (0..kd)
            .map(|i| {
                let chi = 2 + ei[i] - vi[i] - pi[i];
                debug_assert!(chi % 2 == 0);
                chi / 2
            })
            .collect();
        genus_per_component.extend(std::iter::repeat_n(0, self.isolated));
        let g = genus_per_component.iter().sum();
        Counts {
            v: vi.iter().sum::<usize>() + self.isolated,
            e: self.num_edges(),
            k: kd + self.isolated,
            p: pi.iter().sum::<usize>() + self.isolated,
            genus_per_component,
            g,
        }
    }

    pub fn genus(&self) -> usize {
        self.counts().g
    }

    pub fn is_plane(&self) -> bool {
        let c = self.counts();
        c.k == 1 && c.g == 0
    }

    /// Geometric dual: `(sigma ∘ alpha, alpha)` with every weight dualised.
    pub fn dual(&self) -> CombinatorialMap {
        CombinatorialMap {
            sigma: self.phi(),
            isolated: self.isolated,
            weights: self.weights.as_ref().map(|w| w.iter().map(|x| x.dualised()).collect()),
        }
    }

    /// Spanning subgraph without the edges in `remove`. Surviving edges keep
    /// their relative order; vertices left without darts become isolated.
    pub fn delete_edges(&self, remove: &BTreeSet<EdgeId>) -> Result<CombinatorialMap, MapError> {
        for &e in remove {
            if e >= self.num_edges() {
                return Err(MapError::UnknownEdge(e));
            }
        }
        let keep: Vec<EdgeId> = (0..self.num_edges()).filter(|e| !remove.contains(e)).collect();
        let mut new_id = vec![usize::MAX; self.num_edges()];
        for (i, &e) in keep.iter().enumerate() {
            new_id[e] = i;
        }
        let relabel = |d: Dart| 2 * new_id[edge_of(d)] + (d & 1);
        let mut sigma = vec![0; 2 * keep.len()];
        let mut isolated = self.isolated;
        for orbit in self.vertices() {
            let kept: Vec<Dart> = orbit.into_iter().filter(|&d| !remove.contains(&edge_of(d))).collect();
            if kept.is_empty() {
                isolated += 1;
                continue;
            }
            for i in 0..kept.len() {
                sigma[relabel(kept[i])] = relabel(kept[(i + 1) % kept.len()]);
            }
        }
        let weights = self.weights.as_ref().map(|w| keep.iter().map(|&e| w[e]).collect());
        Ok(CombinatorialMap { sigma, isolated, weights })
    }

    /// Number of boundary components of the spanning subgraph `G - remove`.
    pub fn boundary_count_without(&self, remove: &BTreeSet<EdgeId>) -> Result<usize, MapError> {
        Ok(self.delete_edges(remove)?.counts().p)
    }

    pub fn all_edges(&self) -> BTreeSet<EdgeId> {
        (0..self.num_edges()).collect()
    }

    pub fn complement(&self, set: &BTreeSet<EdgeId>) -> BTreeSet<EdgeId> {
        (0..self.num_edges()).filter(|e| !set.contains(e)).collect()
    }

    /// Vertex boundary cycles, one arrow per dart, each label owning both
    /// darts of its edge. Isolated vertices become empty cycles.
    pub fn to_arrow_presentation(&self) -> ArrowPresentation {
        let mut cycles: Vec<Vec<Arrow>> = self
            .vertices()
            .into_iter()
            .map(|o| o.into_iter().map(|d| Arrow { label: edge_of(d), along: true }).collect())
            .collect();
        cycles.extend(std::iter::repeat_with(Vec::new).take(self.isolated));
        ArrowPresentation::new(cycles, self.weights.clone())
    }

    pub fn from_arrow_presentation(ap: &ArrowPresentation) -> Result<CombinatorialMap, MapError> {
        ap.to_map()
    }

    /// Partial dual with respect to `a`, built by hiding the edges outside
    /// `a` as marking arrows, dualising the remaining spanning subgraph and
    /// re-attaching the hidden edges along their induced arrows.
    pub fn partial_dual(&self, a: &BTreeSet<EdgeId>) -> Result<CombinatorialMap, MapError> {
        for &e in a {
            if e >= self.num_edges() {
                return Err(MapError::UnknownEdge(e));
            }
        }
        let n = self.num_darts();
        let in_a = |d: Dart| a.contains(&edge_of(d));
        // Each mark on a boundary cycle of G - A^c is either a hidden dart
        // (an arrow sitting in a vertex corner) or the side of an A edge
        // traversed from dart d to alpha(d). Both are named by the dart.
        let next_mark = |d: Dart| -> Dart {
            if in_a(d) {
                self.sigma[alpha(d)]
            } else {
                self.sigma[d]
            }
        };
        let mut seen = vec![false; n];
        let mut cycles = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut d = start;
            while !seen[d] {
                seen[d] = true;
                cycle.push(Arrow { label: edge_of(d), along: true });
                d = next_mark(d);
            }
            cycles.push(cycle);
        }
        cycles.extend(std::iter::repeat_with(Vec::new).take(self.isolated));
        let weights = self.weights.as_ref().map(|w| {
            w.iter()
                .enumerate()
                .map(|(e, &x)| if a.contains(&e) { x.dualised() } else { x })
                .collect()
        });
        ArrowPresentation::new(cycles, weights).to_map()
    }

    /// Canonical arrow-presentation key; equal keys mean equal labelled
    /// ribbon graphs (mirror images identified).
    pub fn canonical_key(&self) -> (Vec<Vec<usize>>, usize) {
        let fwd = self.to_arrow_presentation().canonical_labels();
        let mirrored = CombinatorialMap {
            sigma: self.sigma_inverse(),
            isolated: self.isolated,
            weights: None,
        };
        let bwd = mirrored.to_arrow_presentation().canonical_labels();
        (fwd.min(bwd), self.isolated)
    }

    /// Equality of edge-labelled ribbon graphs, weights included.
    pub fn same_labelled(&self, other: &CombinatorialMap) -> bool {
        self.num_edges() == other.num_edges()
            && self.weights == other.weights
            && self.canonical_key() == other.canonical_key()
    }

    /// Isomorphism of ribbon graphs ignoring edge ids, optionally requiring
    /// weights to correspond. Orientation reversal is allowed.
    pub fn is_isomorphic(&self, other: &CombinatorialMap, respect_weights: bool) -> bool {
        if self.num_darts() != other.num_darts() || self.isolated != other.isolated {
            return false;
        }
        let mut a = self.component_codes(respect_weights);
        let mut b = other.component_codes(respect_weights);
        a.sort();
        b.sort();
        a == b
    }

    /// Isomorphism invariant: sorted per-component codes, then the number of
    /// isolated vertices. Equal codes iff `is_isomorphic`.
    pub fn iso_code(&self, respect_weights: bool) -> (Vec<Vec<usize>>, usize) {
        let mut a = self.component_codes(respect_weights);
        a.sort();
        (a, self.isolated)
    }

    fn component_codes(&self, respect_weights: bool) -> Vec<Vec<usize>> {
        let (comp, kd) = self.dart_components();
        let inv = self.sigma_inverse();
        let mut out = Vec::with_capacity(kd);
        for c in 0..kd {
            let darts: Vec<Dart> = (0..self.num_darts()).filter(|&d| comp[d] == c).collect();
            let mut best: Option<Vec<usize>> = None;
            for &root in &darts {
                for rot in [&self.sigma, &inv] {
                    let code = self.rooted_code(root, rot, respect_weights);
                    if best.as_ref().is_none_or(|b| code < *b) {
                        best = Some(code);
                    }
                }
            }
            out.push(best.unwrap_or_default());
        }
        out
    }

    fn rooted_code(&self, root: Dart, rot: &[Dart], respect_weights: bool) -> Vec<usize> {
        let n = self.num_darts();
        let mut num = vec![usize::MAX; n];
        let mut order = vec![root];
        num[root] = 0;
        let mut code = Vec::with_capacity(3 * n);
        let mut i = 0;
        while i < order.len() {
            let d = order[i];
            for nb in [rot[d], alpha(d)] {
                if num[nb] == usize::MAX {
                    num[nb] = order.len();
                    order.push(nb);
                }
                code.push(num[nb]);
            }
            if respect_weights {
                if let Some(w) = self.weight(edge_of(d)) {
                    code.push(weight_code(&w));
                }
            }
            i += 1;
        }
        code
    }

    /// 1-indexed JSON form.
    pub fn to_json(&self) -> MapJson {
        MapJson {
            sigma: self.sigma.iter().map(|&x| x + 1).collect(),
            alpha: (0..self.num_darts()).map(|d| alpha(d) + 1).collect(),
            isolated_vertices: self.isolated,
            weights: self.weights.as_ref().map(|w| {
                w.iter()
                    .enumerate()
                    .map(|(e, x)| WeightJson { edge: e + 1, tait: x.tait, oriented: x.oriented, cd: x.cd })
                    .collect()
            }),
        }
    }

    pub fn from_json(j: &MapJson) -> Result<CombinatorialMap, MapError> {
        let sigma: Vec<usize> = j.sigma.iter().map(|&x| x.wrapping_sub(1)).collect();
        let alpha_perm: Vec<usize> = j.alpha.iter().map(|&x| x.wrapping_sub(1)).collect();
        let mut map = CombinatorialMap::build(&sigma, &alpha_perm, j.isolated_vertices, None)?;
        if let Some(ws) = &j.weights {
            // JSON edge numbers follow the least-dart order, as does `build`.
            let mut table: Vec<Option<Weight>> = vec![None; map.num_edges()];
            for w in ws {
                if w.edge == 0 || w.edge > table.len() || table[w.edge - 1].is_some() {
                    return Err(MapError::WeightCoverage { expected: table.len(), got: ws.len() });
                }
                table[w.edge - 1] = Some(Weight { tait: w.tait, oriented: w.oriented, cd: w.cd });
            }
            let table: Option<Vec<Weight>> = table.into_iter().collect();
            match table {
                Some(t) => map = map.with_weights(Some(t))?,
                None => return Err(MapError::WeightCoverage { expected: map.num_edges(), got: ws.len() }),
            }
        }
        Ok(map)
    }

    pub fn from_json_str(s: &str) -> Result<CombinatorialMap, MapError> {
        let j: MapJson = serde_json::from_str(s).map_err(|e| MapError::Json(e.to_string()))?;
        Self::from_json(&j)
    }

    /// Connected components as separate maps, each with the original ids of
    /// its edges; isolated vertices come last as edgeless maps.
    pub fn component_maps(&self) -> Vec<(CombinatorialMap, Vec<EdgeId>)> {
        let (comp, kd) = self.dart_components();
        let mut out = Vec::with_capacity(kd + self.isolated);
        for c in 0..kd {
            let edges: Vec<EdgeId> = (0..self.num_edges()).filter(|&e| comp[2 * e] == c).collect();
            let mut new_dart = vec![usize::MAX; self.num_darts()];
            for (k, &e) in edges.iter().enumerate() {
                new_dart[2 * e] = 2 * k;
                new_dart[2 * e + 1] = 2 * k + 1;
            }
            let mut sigma = vec![0; 2 * edges.len()];
            for &e in &edges {
                for d in [2 * e, 2 * e + 1] {
                    sigma[new_dart[d]] = new_dart[self.sigma[d]];
                }
            }
            let weights = self.weights.as_ref().map(|w| edges.iter().map(|&e| w[e]).collect());
            let m = CombinatorialMap::from_sigma(sigma, 0, weights).expect("restriction of a valid map");
            out.push((m, edges));
        }
        out.extend((0..self.isolated).map(|_| (CombinatorialMap::isolated_vertex(), Vec::new())));
        out
    }

    /// Abstract multigraph obtained by forgetting the embedding; edge `k`
    /// keeps label `k`.
    pub fn underlying_graph(&self) -> crate::graph::AbstractMultigraph {
        let (vid, nv) = orbit_index(&self.sigma);
        let edges = (0..self.num_edges()).map(|e| (vid[2 * e], vid[2 * e + 1])).collect();
        crate::graph::AbstractMultigraph::with_labels(
            nv + self.isolated,
            edges,
            (0..self.num_edges()).collect(),
        )
        .expect("vertex ids are in range")
    }
}

fn weight_code(w: &Weight) -> usize {
    let o = match w.oriented {
        None => 0,
        Some(Sign::Plus) => 1,
        Some(Sign::Minus) => 2,
    };
    1_000_000 + 10 * (w.tait.is_plus() as usize) + o
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightJson {
    pub edge: usize,
    pub tait: Sign,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oriented: Option<Sign>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cd: Option<Cd>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MapJson {
    pub sigma: Vec<usize>,
    pub alpha: Vec<usize>,
    #[serde(default)]
    pub isolated_vertices: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weights: Option<Vec<WeightJson>>,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn components_split() {
        let m = CombinatorialMap::from_sigma(vec![1, 0, 2, 3], 2, None).unwrap();
        let parts = m.component_maps();
        assert_eq!(parts.len(), 4);
        assert_eq!(parts[0].1, vec![0]);
        assert_eq!(parts[1].1, vec![1]);
        assert!(parts[0].0.same_labelled(&plane_loop()));
        assert!(parts[1].0.same_labelled(&bridge()));
    }

    fn set(xs: &[usize]) -> BTreeSet<usize> {
        xs.iter().copied().collect()
    }

    fn plane_loop() -> CombinatorialMap {
        CombinatorialMap::build(&[1, 0], &[1, 0], 0, None).unwrap()
    }

    fn bridge() -> CombinatorialMap {
        CombinatorialMap::build(&[0, 1], &[1, 0], 0, None).unwrap()
    }

    fn interlaced() -> CombinatorialMap {
        // sigma = (1 3 2 4), alpha = (1 2)(3 4), 0-indexed.
        CombinatorialMap::build(&[2, 3, 1, 0], &[1, 0, 3, 2], 0, None).unwrap()
    }

    fn triangle() -> CombinatorialMap {
        // Edges 0:(a,b) 1:(b,c) 2:(c,a); darts 2k at the first endpoint.
        // a: 0,5  b: 1,2  c: 3,4
        CombinatorialMap::from_sigma(vec![5, 2, 1, 4, 3, 0], 0, None).unwrap()
    }

    #[test]
    fn build_examples() {
        let c = plane_loop().counts();
        assert_eq!((c.v, c.e, c.k, c.p, c.genus_per_component.clone(), c.g), (1, 1, 1, 2, vec![0], 0));
        let c = bridge().counts();
        assert_eq!((c.v, c.e, c.p, c.g), (2, 1, 1, 0));
        let c = interlaced().counts();
        assert_eq!((c.v, c.e, c.p, c.g), (1, 2, 1, 1));
        let c = CombinatorialMap::isolated_vertex().counts();
        assert_eq!((c.v, c.e, c.k, c.p, c.genus_per_component, c.g), (1, 0, 1, 1, vec![0], 0));
    }

    #[test]
    fn build_errors() {
        assert_eq!(
            CombinatorialMap::build(&[0, 1], &[0, 1], 0, None).unwrap_err(),
            MapError::FixedPointAlpha(0)
        );
        assert!(matches!(
            CombinatorialMap::build(&[0, 0], &[1, 0], 0, None).unwrap_err(),
            MapError::NotPermutation(_)
        ));
        assert!(matches!(
            CombinatorialMap::build(&[1, 0], &[1, 0], 0, Some(vec![])).unwrap_err(),
            MapError::WeightCoverage { .. }
        ));
    }

    #[test]
    fn dual_of_loop_is_bridge() {
        let d = plane_loop().dual();
        assert!(d.is_isomorphic(&bridge(), false));
        assert!(plane_loop().dual().dual().same_labelled(&plane_loop()));
        let t = triangle();
        let c = t.dual().counts();
        assert_eq!((c.v, c.e, c.p, c.g), (2, 3, 3, 0));
    }

    #[test]
    fn delete_edges_examples() {
        let t = triangle();
        assert!(t.delete_edges(&BTreeSet::new()).unwrap().same_labelled(&t));
        let none = t.delete_edges(&t.all_edges()).unwrap();
        assert_eq!((none.num_edges(), none.isolated(), none.counts().v), (0, 3, 3));
        let c = t.delete_edges(&set(&[1])).unwrap().counts();
        assert_eq!((c.v, c.e, c.p, c.g), (3, 2, 1, 0));
        assert_eq!(t.delete_edges(&set(&[7])).unwrap_err(), MapError::UnknownEdge(7));
    }

    #[test]
    fn bridge_arrow_presentation() {
        let ap = bridge().to_arrow_presentation();
        assert_eq!(ap.cycles().len(), 2);
        assert!(ap.cycles().iter().all(|c| c.len() == 1 && c[0].label == 0));
        let back = CombinatorialMap::from_arrow_presentation(&ap).unwrap();
        assert!(back.same_labelled(&bridge()));
    }

    #[test]
    fn partial_dual_extremes() {
        for g in [plane_loop(), bridge(), interlaced(), triangle()] {
            assert!(g.partial_dual(&BTreeSet::new()).unwrap().same_labelled(&g));
            assert!(g.partial_dual(&g.all_edges()).unwrap().same_labelled(&g.dual()));
        }
    }

    #[test]
    fn partial_dual_weights() {
        let w = vec![
            Weight::biweighted(Sign::Plus, Sign::Plus),
            Weight::biweighted(Sign::Minus, Sign::Plus),
            Weight::signed(Sign::Minus),
        ];
        let t = triangle().with_weights(Some(w.clone())).unwrap();
        let pd = t.partial_dual(&set(&[0, 2])).unwrap();
        let got = pd.weights().unwrap();
        assert_eq!(got[0], Weight::biweighted(Sign::Minus, Sign::Plus));
        assert_eq!(got[1], w[1]);
        assert_eq!(got[2], Weight::signed(Sign::Plus));
    }

    #[test]
    fn json_round_trip() {
        let t = triangle()
            .with_weights(Some(vec![Weight::signed(Sign::Plus); 3]))
            .unwrap();
        let s = serde_json::to_string(&t.to_json()).unwrap();
        let back = CombinatorialMap::from_json_str(&s).unwrap();
        assert!(back.same_labelled(&t));
        assert!(CombinatorialMap::from_json_str("{\"sigma\":[1],\"alpha\":[1]}").is_err());
    }

    #[test]
    fn mirror_is_same_labelled() {
        let t = interlaced();
        let m = CombinatorialMap::from_sigma(t.sigma_inverse(), 0, None).unwrap();
        assert!(t.same_labelled(&m));
    }
}
