//! Contraction/deletion labels, the immersed graph of c-edges of a Tait
//! graph and d-edges of its dual, its region dual, and the reconstruction
//! of a link diagram from an admissible labelled plane graph.

use std::collections::BTreeSet;

use serde::Serialize;
use thiserror::Error;

use crate::diagram::{dart_at, CheckerboardColouring, DiagramError, LinkDiagram};
use crate::graph::{AbstractMultigraph, DEFAULT_ISO_BUDGET};
use crate::map::{alpha, edge_of, orbit_index, Cd, CombinatorialMap, Dart, EdgeId, Sign, UnionFind, Weight};
use crate::report::{all_pass, Check};
use crate::states::{seifert_data, seifert_state, tait_graph, Splice};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SeifertError {
    #[error("graph is not plane (genus {0})")]
    NotPlane(usize),
    #[error("graph must be connected with at least one edge")]
    NotConnected,
    #[error("label list has {got} entries for {expected} edges")]
    LabelCount { expected: usize, got: usize },
    #[error("odd c-degree at vertices {tait_vertices:?} of T and {dual_vertices:?} of T*")]
    NotEulerian { tait_vertices: Vec<usize>, dual_vertices: Vec<usize> },
    #[error("labels cannot be realised by orienting the medial diagram")]
    Unrealizable,
    #[error(transparent)]
    Diagram(#[from] DiagramError),
}

/// `c` exactly when the Tait sign equals the oriented sign.
pub fn cd_labeling(d: &LinkDiagram, colouring: &CheckerboardColouring) -> Vec<Cd> {
    d.crossing_signs(colouring).iter().map(|s| crate::map::cd_of(s.tait, s.oriented)).collect()
}

/// Labels read off the oriented resolution: `c` when the Seifert splice at a
/// crossing joins its two black corners.
pub fn cd_by_region_merge(d: &LinkDiagram, colouring: &CheckerboardColouring) -> Vec<Cd> {
    let s = seifert_state(d);
    (0..d.crossing_count())
        .map(|c| {
            // An A-splice opens a channel through corners 1 and 3, a B-splice
            // through corners 0 and 2.
            let q = if s.get(c) == Splice::A { 1 } else { 0 };
            if d.corner_colour(colouring, c, q) == crate::diagram::Colour::Black {
                Cd::C
            } else {
                Cd::D
            }
        })
        .collect()
}

/// Distinct labelings over all orientations of the components, each read
/// with the colouring whose black faces are those of `colouring`.
pub fn labelings_over_orientations(d: &LinkDiagram, colouring: &CheckerboardColouring) -> BTreeSet<Vec<Cd>> {
    let k = d.component_count();
    let reference = d.crossing_signs(colouring);
    let mut out = BTreeSet::new();
    for mask in 0u64..1 << k {
        let rev: Vec<bool> = (0..k).map(|i| mask >> i & 1 == 1).collect();
        let r = d.with_reversed(&rev);
        let (c1, c2) = r.checkerboard();
        let col = if r.crossing_signs(&c1)[0].tait == reference[0].tait { c1 } else { c2 };
        out.insert(cd_labeling(&r, &col));
    }
    out
}

pub fn cd_string(labels: &[Cd]) -> String {
    labels.iter().map(|c| c.to_string()).collect()
}

pub fn labels_from_weights(t: &CombinatorialMap) -> Option<Vec<Cd>> {
    t.weights()?.iter().map(|w| w.cd).collect()
}

fn check_plane_connected(t: &CombinatorialMap) -> Result<(), SeifertError> {
    let k = t.counts();
    if k.g != 0 {
        return Err(SeifertError::NotPlane(k.g));
    }
    if k.e == 0 || k.k != 1 {
        return Err(SeifertError::NotConnected);
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum Source {
    #[serde(rename = "T")]
    Tait,
    #[serde(rename = "T*")]
    Dual,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VertexClass {
    Original(usize),
    Dual(usize),
    Crossing(EdgeId),
}

/// The plane map of `T ∪ T*` with a degree-four vertex where each edge meets
/// its dual. For every dart `d` of `T` the overlay has four darts: `4d` at
/// the vertex of `d`, `4d + 1` at the crossing (together the half of `e`
/// on the side of `d`), `4d + 2` at the dual vertex of the face of `d` and
/// `4d + 3` at the crossing (the half of `e*` reaching that face). Overlay
/// edge `2d` is thus a half of a `T` edge and `2d + 1` a half of a `T*` edge.
#[derive(Debug, Clone)]
pub struct OverlayMap {
    map: CombinatorialMap,
    base: CombinatorialMap,
    vertex_of: Vec<usize>,
    face_of: Vec<usize>,
}

impl OverlayMap {
    pub fn map(&self) -> &CombinatorialMap {
        &self.map
    }

    pub fn base(&self) -> &CombinatorialMap {
        &self.base
    }

    /// Source and parent edge of every overlay edge.
    pub fn provenance(&self, overlay_edge: EdgeId) -> (Source, EdgeId) {
        let d = overlay_edge / 2;
        let src = if overlay_edge % 2 == 0 { Source::Tait } else { Source::Dual };
        (src, edge_of(d))
    }

    pub fn vertex_class(&self, overlay_dart: Dart) -> VertexClass {
        let d = overlay_dart / 4;
        match overlay_dart % 4 {
            0 => VertexClass::Original(self.vertex_of[d]),
            2 => VertexClass::Dual(self.face_of[d]),
            _ => VertexClass::Crossing(edge_of(d)),
        }
    }
}

pub fn overlay_pair(t: &CombinatorialMap) -> Result<OverlayMap, SeifertError> {
    check_plane_connected(t)?;
    let n = t.num_darts();
    let sigma = t.sigma();
    let inv = t.sigma_inverse();
    let mut s = vec![0; 4 * n];
    for d in 0..n {
        let phi_inv = alpha(inv[d]);
        s[4 * d] = 4 * sigma[d];
        s[4 * d + 1] = 4 * d + 3;
        s[4 * d + 2] = 4 * phi_inv + 2;
        s[4 * d + 3] = 4 * alpha(d) + 1;
    }
    let weights = t.weights().map(|w| {
        (0..2 * n).map(|k| if k % 2 == 0 { w[edge_of(k / 2)] } else { w[edge_of(k / 2)].dualised() }).collect()
    });
    let map = CombinatorialMap::from_sigma(s, 0, weights).expect("overlay darts are consistent");
    let (vertex_of, _) = orbit_index(sigma);
    let (face_of, _) = orbit_index(&t.phi());
    Ok(OverlayMap { map, base: t.clone(), vertex_of, face_of })
}

/// The overlay with a chosen set of kept `T` edges; every other edge is
/// replaced by its dual. Regions are unions of overlay faces across the
/// halves that are not kept.
#[derive(Debug, Clone)]
pub struct PhiGraph {
    overlay: OverlayMap,
    kept: BTreeSet<EdgeId>,
    region_of_face: Vec<usize>,
    face_of_dart: Vec<usize>,
    regions: usize,
}

impl PhiGraph {
    pub fn overlay(&self) -> &OverlayMap {
        &self.overlay
    }

    /// Edges of `T` kept in the immersion (the c-edges).
    pub fn kept(&self) -> &BTreeSet<EdgeId> {
        &self.kept
    }

    pub fn region_count(&self) -> usize {
        self.regions
    }

    pub fn region_of_dart(&self, overlay_dart: Dart) -> usize {
        self.region_of_face[self.face_of_dart[overlay_dart]]
    }

    /// `C`: the vertices of `T` with its kept edges.
    pub fn c_graph(&self) -> AbstractMultigraph {
        let t = self.overlay.base();
        let (vid, nv) = orbit_index(t.sigma());
        let es: Vec<EdgeId> = self.kept.iter().copied().collect();
        AbstractMultigraph::with_labels(nv, es.iter().map(|&e| (vid[2 * e], vid[2 * e + 1])).collect(), es)
            .expect("vertex ids are in range")
    }

    /// `C'`: the vertices of `T*` with the duals of the edges not kept.
    pub fn c_prime_graph(&self) -> AbstractMultigraph {
        let t = self.overlay.base();
        let (fid, nf) = orbit_index(&t.phi());
        let es: Vec<EdgeId> = t.complement(&self.kept).into_iter().collect();
        AbstractMultigraph::with_labels(nf, es.iter().map(|&e| (fid[2 * e], fid[2 * e + 1])).collect(), es)
            .expect("face ids are in range")
    }

    /// Region dual: a vertex per region and, for every edge of `T`, one edge
    /// across whichever of `e`, `e*` is kept, labelled by `e`.
    pub fn region_dual(&self) -> AbstractMultigraph {
        let m = self.overlay.base().num_edges();
        let edges = (0..m)
            .map(|e| {
                let d = 2 * e;
                let o = if self.kept.contains(&e) { 4 * d } else { 4 * d + 2 };
                (self.region_of_dart(o), self.region_of_dart(o + 1))
            })
            .collect();
        AbstractMultigraph::with_labels(self.regions, edges, (0..m).collect()).expect("region ids are in range")
    }
}

pub fn phi_from_kept(t: &CombinatorialMap, kept: &BTreeSet<EdgeId>) -> Result<PhiGraph, SeifertError> {
    let overlay = overlay_pair(t)?;
    for &e in kept {
        if e >= t.num_edges() {
            return Err(SeifertError::LabelCount { expected: t.num_edges(), got: e + 1 });
        }
    }
    let (face_of_dart, nf) = orbit_index(&overlay.map().phi());
    let mut uf = UnionFind::new(nf);
    for k in 0..overlay.map().num_edges() {
        let (src, e) = overlay.provenance(k);
        let present = (src == Source::Tait) == kept.contains(&e);
        if !present {
            uf.union(face_of_dart[2 * k], face_of_dart[2 * k + 1]);
        }
    }
    let mut region_of_face = vec![usize::MAX; nf];
    let mut regions = 0;
    for f in 0..nf {
        let r = uf.find(f);
        if region_of_face[r] == usize::MAX {
            region_of_face[r] = regions;
            regions += 1;
        }
        region_of_face[f] = region_of_face[r];
    }
    Ok(PhiGraph { overlay, kept: kept.clone(), region_of_face, face_of_dart, regions })
}

pub fn build_phi(t: &CombinatorialMap, labels: &[Cd]) -> Result<PhiGraph, SeifertError> {
    if labels.len() != t.num_edges() {
        return Err(SeifertError::LabelCount { expected: t.num_edges(), got: labels.len() });
    }
    let kept = (0..labels.len()).filter(|&e| labels[e] == Cd::C).collect();
    phi_from_kept(t, &kept)
}

/// Vertices of `T` and of `T*` with odd c-degree (an edge of `T*` is `c`
/// when its partner in `T` is `d`).
pub fn odd_c_degree(t: &CombinatorialMap, labels: &[Cd]) -> (Vec<usize>, Vec<usize>) {
    let (vid, nv) = orbit_index(t.sigma());
    let (fid, nf) = orbit_index(&t.phi());
    let mut dv = vec![0usize; nv];
    let mut df = vec![0usize; nf];
    for d in 0..t.num_darts() {
        match labels[edge_of(d)] {
            Cd::C => dv[vid[d]] += 1,
            Cd::D => df[fid[d]] += 1,
        }
    }
    let odd = |v: Vec<usize>| v.iter().enumerate().filter(|(_, x)| *x % 2 == 1).map(|(i, _)| i).collect();
    (odd(dv), odd(df))
}

/// Cycles of a fundamental basis of `T` holding an odd number of d-edges.
pub fn odd_d_cycles(t: &CombinatorialMap, labels: &[Cd]) -> Vec<Vec<EdgeId>> {
    t.underlying_graph()
        .cycle_basis()
        .into_iter()
        .filter(|c| c.iter().filter(|&&e| labels[e] == Cd::D).count() % 2 == 1)
        .collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct SeifertReport {
    pub diagram: String,
    pub colouring: &'static str,
    pub labels: String,
    pub tait_vertices: usize,
    pub dual_vertices: usize,
    pub regions: usize,
    pub seifert_circles: usize,
    pub checks: Vec<Check>,
    pub pass: bool,
}

/// Runs every check of the characterisation on one diagram and colouring.
pub fn verify_seifert_characterization(d: &LinkDiagram, colouring: &CheckerboardColouring) -> SeifertReport {
    let (first, _) = d.checkerboard();
    let which = if *colouring == first { "first" } else { "second" };
    let t = tait_graph(d, colouring);
    let labels = cd_labeling(d, colouring);
    let mut checks = Vec::new();
    let merge = cd_by_region_merge(d, colouring);
    checks.push(Check::new("cd_region_merge", merge == labels, cd_string(&merge)));
    let (ov, of) = odd_c_degree(&t, &labels);
    checks.push(Check::new(
        "even_c_degree",
        ov.is_empty() && of.is_empty(),
        if ov.is_empty() && of.is_empty() { String::new() } else { format!("T {ov:?} T* {of:?}") },
    ));
    let phi = build_phi(&t, &labels).expect("tait graphs are plane and connected");
    let (c, cp) = (phi.c_graph(), phi.c_prime_graph());
    checks.push(Check::new(
        "c_components_eulerian",
        c.components_eulerian() && cp.components_eulerian(),
        String::new(),
    ));
    let bad = odd_d_cycles(&t, &labels);
    checks.push(Check::new("even_d_cycles", bad.is_empty(), if bad.is_empty() { String::new() } else { format!("{bad:?}") }));
    let rd = phi.region_dual();
    let sd = seifert_data(d);
    let iso = match rd.is_isomorphic(&sd.graph, DEFAULT_ISO_BUDGET.max(rd.edge_count())) {
        Ok(b) => b,
        Err(e) => return failed_budget(d, which, &labels, e.to_string()),
    };
    checks.push(Check::new(
        "region_dual_is_seifert_graph",
        iso && rd.is_label_isomorphic(&sd.graph),
        format!("{} regions, {} circles", rd.vertex_count(), sd.circle_count),
    ));
    checks.push(Check::new("region_dual_bipartite", rd.is_bipartite(), String::new()));
    let pass = all_pass(&checks);
    SeifertReport {
        diagram: d.to_pd(),
        colouring: which,
        labels: cd_string(&labels),
        tait_vertices: t.vertices().len(),
        dual_vertices: t.faces().len(),
        regions: phi.region_count(),
        seifert_circles: sd.circle_count,
        checks,
        pass,
    }
}

fn failed_budget(d: &LinkDiagram, which: &'static str, labels: &[Cd], msg: String) -> SeifertReport {
    SeifertReport {
        diagram: d.to_pd(),
        colouring: which,
        labels: cd_string(labels),
        tait_vertices: 0,
        dual_vertices: 0,
        regions: 0,
        seifert_circles: 0,
        checks: vec![Check::new("region_dual_is_seifert_graph", false, msg)],
        pass: false,
    }
}

/// Compares the underlying graph of `G^A` with the region dual of the
/// immersion keeping `A` and the duals of the other edges.
pub fn remark_identity_check(g: &CombinatorialMap, a: &BTreeSet<EdgeId>) -> Result<bool, SeifertError> {
    let phi = phi_from_kept(g, a)?;
    let pd = g.partial_dual(a).map_err(|_| SeifertError::LabelCount { expected: g.num_edges(), got: a.len() })?;
    let lhs = pd.underlying_graph();
    let rhs = phi.region_dual();
    Ok(lhs.is_label_isomorphic(&rhs))
}

/// Medial diagram of a plane connected map: crossings at edge midpoints,
/// over/under set by the Tait signs, each strand oriented arbitrarily.
pub fn medial_diagram(t: &CombinatorialMap) -> Result<LinkDiagram, SeifertError> {
    check_plane_connected(t)?;
    let (partner, incoming, _, _) = medial_strands(t);
    Ok(LinkDiagram::from_darts(None, partner, incoming)?.relabeled())
}

/// Partners, straight-through orientation, component of each dart and the
/// number of components.
fn medial_strands(t: &CombinatorialMap) -> (Vec<usize>, Vec<bool>, Vec<usize>, usize) {
    let m = t.num_edges();
    let sigma = t.sigma();
    let sign = |e: EdgeId| t.weight(e).map_or(Sign::Plus, |w| w.tait);
    // Around the midpoint of edge e (darts d0 = 2e, d1 = 2e + 1) the corners
    // are, counterclockwise: inv(d1), d0, inv(d0), d1. The corner of dart x
    // lies between x and sigma(x).
    let slot_of_corner_self = |x: Dart| -> (usize, usize) {
        let base = if x % 2 == 0 { 1 } else { 3 };
        (edge_of(x), base)
    };
    // The same corner seen from the edge of sigma(x).
    let slot_of_corner_prev = |x: Dart| -> (usize, usize) {
        let y = sigma[x];
        let base = if y % 2 == 0 { 2 } else { 0 };
        (edge_of(y), base)
    };
    // Geometric slot s_k becomes diagram slot (k - shift) so that slots 0
    // and 2 carry the under-strand.
    let dart_of = |(e, k): (usize, usize)| -> usize {
        let shift = if sign(e) == Sign::Plus { 0 } else { 1 };
        dart_at(e, (k + 4 - shift) % 4)
    };
    let nd = 4 * m;
    let mut partner = vec![usize::MAX; nd];
    for x in 0..t.num_darts() {
        let a = dart_of(slot_of_corner_self(x));
        let b = dart_of(slot_of_corner_prev(x));
        partner[a] = b;
        partner[b] = a;
    }
    // Orient every strand by tracing straight through crossings.
    let mut incoming = vec![false; nd];
    let mut comp = vec![usize::MAX; nd];
    let mut k = 0;
    for s in 0..nd {
        if comp[s] != usize::MAX {
            continue;
        }
        let mut x = s;
        while comp[x] == usize::MAX {
            let out = dart_at(x / 4, x % 4 + 2);
            comp[x] = k;
            comp[out] = k;
            incoming[x] = true;
            x = partner[out];
        }
        k += 1;
    }
    (partner, incoming, comp, k)
}

/// Builds an oriented diagram whose Tait graph is `t` (signs from its
/// weights, `+` when absent) and whose labels are `labels`.
///
/// The diagram is the medial graph of `t`: a crossing at the midpoint of each
/// edge, strands running through the corners of `t`. Over/under is set to
/// realise the Tait sign and each link component is then oriented so that
/// every crossing gets its requested label.
pub fn reconstruct_link(t: &CombinatorialMap, labels: &[Cd]) -> Result<LinkDiagram, SeifertError> {
    check_plane_connected(t)?;
    let m = t.num_edges();
    if labels.len() != m {
        return Err(SeifertError::LabelCount { expected: m, got: labels.len() });
    }
    let (ov, of) = odd_c_degree(t, labels);
    if !ov.is_empty() || !of.is_empty() {
        return Err(SeifertError::NotEulerian { tait_vertices: ov, dual_vertices: of });
    }
    let (partner, mut incoming, comp, k) = medial_strands(t);
    let sign = |e: EdgeId| t.weight(e).map_or(Sign::Plus, |w| w.tait);
    // flip[a] ^ flip[b] must equal the mismatch at each crossing of a, b.
    let mut adj: Vec<Vec<(usize, bool)>> = vec![Vec::new(); k];
    for e in 0..m {
        let b = 4 * e;
        let pos = (incoming[b] && incoming[b + 3]) || (incoming[b + 2] && incoming[b + 1]);
        let have = crate::map::cd_of(sign(e), Sign::from_bool(pos));
        let mismatch = have != labels[e];
        let (u, o) = (comp[b], comp[b + 1]);
        if u == o {
            if mismatch {
                return Err(SeifertError::Unrealizable);
            }
        } else {
            adj[u].push((o, mismatch));
            adj[o].push((u, mismatch));
        }
    }
    let mut flip: Vec<Option<bool>> = vec![None; k];
    for s in 0..k {
        if flip[s].is_some() {
            continue;
        }
        flip[s] = Some(false);
        let mut stack = vec![s];
        while let Some(c) = stack.pop() {
            let fc = flip[c].unwrap();
            for &(o, mm) in &adj[c] {
                let want = fc ^ mm;
                match flip[o] {
                    None => {
                        flip[o] = Some(want);
                        stack.push(o);
                    }
                    Some(f) if f != want => return Err(SeifertError::Unrealizable),
                    _ => {}
                }
            }
        }
    }
    for x in 0..4 * m {
        if flip[comp[x]] == Some(true) {
            incoming[x] = !incoming[x];
        }
    }
    Ok(LinkDiagram::from_darts(None, partner, incoming)?.relabeled())
}

/// The colouring of a reconstructed diagram whose black faces are the
/// vertices of `t`.
pub fn matching_colouring(d: &LinkDiagram, t: &CombinatorialMap) -> CheckerboardColouring {
    let (c1, c2) = d.checkerboard();
    let want = t.weight(0).map_or(Sign::Plus, |w| w.tait);
    if d.crossing_signs(&c1)[0].tait == want {
        c1
    } else {
        c2
    }
}

/// Round trip: the Tait graph of the reconstruction equals `t` as a
/// labelled plane graph with Tait signs, and its labels are `labels`.
pub fn reconstruction_round_trips(t: &CombinatorialMap, labels: &[Cd], d: &LinkDiagram) -> bool {
    let col = matching_colouring(d, t);
    let back = tait_graph(d, &col);
    let signs: Vec<Sign> = (0..t.num_edges()).map(|e| t.weight(e).map_or(Sign::Plus, |w| w.tait)).collect();
    let signed = |m: &CombinatorialMap, s: &[Sign]| {
        m.clone().with_weights(Some(s.iter().map(|&x| Weight::signed(x)).collect())).expect("one sign per edge")
    };
    let back_signs: Vec<Sign> = back.weights().unwrap().iter().map(|w| w.tait).collect();
    signed(&back, &back_signs).same_labelled(&signed(t, &signs)) && cd_labeling(d, &col) == labels
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::tests::{FIGURE_EIGHT, HOPF, KINK, TREFOIL};

    fn triangle() -> CombinatorialMap {
        CombinatorialMap::from_sigma(vec![5, 2, 1, 4, 3, 0], 0, None).unwrap()
    }

    fn diagrams() -> Vec<LinkDiagram> {
        [KINK, HOPF, TREFOIL, FIGURE_EIGHT].iter().map(|s| LinkDiagram::parse_pd(s).unwrap()).collect()
    }

    #[test]
    fn overlay_counts() {
        let lp = CombinatorialMap::from_sigma(vec![1, 0], 0, None).unwrap();
        let k = overlay_pair(&lp).unwrap().map().counts();
        assert_eq!((k.v, k.e, k.p, k.g), (4, 4, 2, 0));
        let k = overlay_pair(&triangle()).unwrap().map().counts();
        assert_eq!((k.v, k.e, k.p, k.g), (8, 12, 6, 0));
        for d in diagrams() {
            let ov = overlay_pair(&tait_graph(&d, &d.checkerboard().0)).unwrap();
            assert!(ov.map().faces().iter().all(|f| f.len() == 4));
            assert!(ov.map().is_plane());
        }
    }

    #[test]
    fn overlay_rejects_nonplane() {
        let torus = CombinatorialMap::from_sigma(vec![2, 3, 1, 0], 0, None).unwrap();
        assert_eq!(torus.genus(), 1);
        assert!(matches!(overlay_pair(&torus), Err(SeifertError::NotPlane(1))));
    }

    #[test]
    fn phi_extremes() {
        let t = triangle();
        let all_c = build_phi(&t, &[Cd::C; 3]).unwrap();
        assert_eq!(all_c.region_count(), 2);
        let rd = all_c.region_dual();
        assert_eq!(rd.degrees(), vec![3, 3]);
        let all_d = build_phi(&t, &[Cd::D; 3]).unwrap();
        assert_eq!(all_d.region_count(), 3);
    }

    #[test]
    fn labels_agree_with_region_merge() {
        for d in diagrams() {
            for c in [d.checkerboard().0, d.checkerboard().1] {
                assert_eq!(cd_labeling(&d, &c), cd_by_region_merge(&d, &c));
            }
        }
    }

    #[test]
    fn labelings_count() {
        let t = LinkDiagram::parse_pd(TREFOIL).unwrap();
        assert_eq!(labelings_over_orientations(&t, &t.checkerboard().0).len(), 1);
        let h = LinkDiagram::parse_pd(HOPF).unwrap();
        assert_eq!(labelings_over_orientations(&h, &h.checkerboard().0).len(), 2);
    }

    #[test]
    fn characterization_on_small_diagrams() {
        for d in diagrams() {
            for c in [d.checkerboard().0, d.checkerboard().1] {
                let r = verify_seifert_characterization(&d, &c);
                assert!(r.pass, "{}", serde_json::to_string(&r).unwrap());
            }
        }
        let f = LinkDiagram::parse_pd(FIGURE_EIGHT).unwrap();
        let r = verify_seifert_characterization(&f, &f.checkerboard().0);
        assert_eq!(r.seifert_circles, 3);
    }

    #[test]
    fn reconstruct_triangle() {
        let t = triangle();
        let d = reconstruct_link(&t, &[Cd::C; 3]).unwrap();
        assert_eq!(d.crossing_count(), 3);
        assert!(reconstruction_round_trips(&t, &[Cd::C; 3], &d));
    }

    #[test]
    fn reconstruct_rejects_odd() {
        let bridge = CombinatorialMap::from_sigma(vec![0, 1], 0, None).unwrap();
        assert!(matches!(reconstruct_link(&bridge, &[Cd::C]), Err(SeifertError::NotEulerian { .. })));
        assert!(reconstruct_link(&bridge, &[Cd::D]).is_ok());
    }

    #[test]
    fn reconstruct_catalog_tait_graphs() {
        for d in diagrams() {
            for c in [d.checkerboard().0, d.checkerboard().1] {
                let t = tait_graph(&d, &c);
                let labels = cd_labeling(&d, &c);
                let r = reconstruct_link(&t, &labels).unwrap();
                assert!(reconstruction_round_trips(&t, &labels, &r), "{d}");
            }
        }
    }

    #[test]
    fn region_dual_identity_extremes() {
        let t = triangle();
        assert!(remark_identity_check(&t, &BTreeSet::new()).unwrap());
        assert!(remark_identity_check(&t, &t.all_edges()).unwrap());
        assert!(remark_identity_check(&t, &[0].into_iter().collect()).unwrap());
    }
}
