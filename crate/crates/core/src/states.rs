//! Splice states and the ribbon graphs they determine: Tait graphs, all-A,
//! all-B and Seifert ribbon graphs.
//!
//! An A-splice joins slots 0–1 and 2–3 of a crossing, a B-splice joins
//! 1–2 and 3–0. The marking arrow recorded when a state circle passes
//! through a crossing points along the circle exactly when the circle
//! turns counterclockwise (slot `p` to `p + 1`).

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::arrow::{Arrow, ArrowPresentation};
use crate::diagram::{crossing_of, dart_at, slot_of, CheckerboardColouring, Colour, LinkDiagram};
use crate::graph::AbstractMultigraph;
use crate::map::{CombinatorialMap, Dart, Sign, Weight};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Splice {
    A,
    B,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum StateError {
    #[error("state has {got} entries for {expected} crossings")]
    Length { expected: usize, got: usize },
    #[error("state character {0:?} is neither A nor B")]
    Char(char),
}

/// One splice per crossing, indexed by crossing order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SpliceState(Vec<Splice>);

impl SpliceState {
    pub fn new(splices: Vec<Splice>) -> Self {
        SpliceState(splices)
    }

    pub fn uniform(n: usize, s: Splice) -> Self {
        SpliceState(vec![s; n])
    }

    /// The `bits`-th state of `n` crossings: bit `c` set means B at `c`.
    pub fn from_bits(n: usize, bits: u64) -> Self {
        SpliceState((0..n).map(|c| if bits >> c & 1 == 1 { Splice::B } else { Splice::A }).collect())
    }

    pub fn splices(&self) -> &[Splice] {
        &self.0
    }

    pub fn get(&self, c: usize) -> Splice {
        self.0[c]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn check_length(&self, n: usize) -> Result<(), StateError> {
        if self.0.len() != n {
            return Err(StateError::Length { expected: n, got: self.0.len() });
        }
        Ok(())
    }
}

impl FromStr for SpliceState {
    type Err = StateError;
    fn from_str(s: &str) -> Result<Self, StateError> {
        s.chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| match c {
                'A' | 'a' => Ok(Splice::A),
                'B' | 'b' => Ok(Splice::B),
                other => Err(StateError::Char(other)),
            })
            .collect::<Result<Vec<_>, _>>()
            .map(SpliceState)
    }
}

impl fmt::Display for SpliceState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.0 {
            f.write_str(match s {
                Splice::A => "A",
                Splice::B => "B",
            })?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalStates {
    pub all_a: SpliceState,
    pub all_b: SpliceState,
    pub seifert: SpliceState,
    /// A at `-` crossings, B at `+` crossings: circles follow black faces.
    pub tait_black: SpliceState,
    pub tait_white: SpliceState,
}

/// Slot joined to `p` by the splice.
pub fn splice_partner(p: usize, s: Splice) -> usize {
    match (s, p) {
        (Splice::A, 0) => 1,
        (Splice::A, 1) => 0,
        (Splice::A, 2) => 3,
        (Splice::A, 3) => 2,
        (Splice::B, 0) => 3,
        (Splice::B, 3) => 0,
        (Splice::B, 1) => 2,
        (Splice::B, 2) => 1,
        _ => unreachable!("slot out of range"),
    }
}

/// Bi-weighted Tait graph: one vertex per black face, one edge per crossing
/// (edge id = crossing index), rotation following the crossings around each
/// black face.
pub fn tait_graph(d: &LinkDiagram, colouring: &CheckerboardColouring) -> CombinatorialMap {
    let n = d.crossing_count();
    let signs = d.crossing_signs(colouring);
    // Corners 0,1 carry the even dart of the crossing's edge, 2,3 the odd one.
    let dart_of_corner = |k: usize| 2 * crossing_of(k) + slot_of(k) / 2;
    let mut sigma = vec![0; 2 * n];
    for (f, corners) in d.faces().iter().enumerate() {
        if colouring.colour(f) != Colour::Black {
            continue;
        }
        let m = corners.len();
        for i in 0..m {
            sigma[dart_of_corner(corners[i])] = dart_of_corner(corners[(i + m - 1) % m]);
        }
    }
    let weights = signs.iter().map(|s| Weight::biweighted(s.tait, s.oriented)).collect();
    CombinatorialMap::from_sigma(sigma, 0, Some(weights)).expect("tait graph darts are consistent")
}

/// State circles as arrow cycles, labels being crossing indices.
pub fn state_circles(d: &LinkDiagram, s: &SpliceState) -> Vec<Vec<Arrow>> {
    let nd = 4 * d.crossing_count();
    let mut seen = vec![false; nd];
    let mut cycles = Vec::new();
    for start in 0..nd {
        if seen[start] {
            continue;
        }
        let mut cycle = Vec::new();
        let mut x: Dart = start;
        while !seen[x] {
            let c = crossing_of(x);
            let p = slot_of(x);
            let q = splice_partner(p, s.get(c));
            seen[x] = true;
            seen[dart_at(c, q)] = true;
            cycle.push(Arrow { label: c, along: q == (p + 1) % 4 });
            x = d.partner(dart_at(c, q));
        }
        cycles.push(cycle);
    }
    cycles
}

/// Tait sign carried by a state graph edge: `+` for a B-splice, `-` for an
/// A-splice, independent of the colouring.
pub fn state_sign(s: Splice) -> Sign {
    Sign::from_bool(s == Splice::B)
}

/// The ribbon graph of a state, edges weighted by the state sign and the
/// oriented sign of their crossing.
pub fn state_ribbon_graph(d: &LinkDiagram, s: &SpliceState) -> CombinatorialMap {
    let (c1, _) = d.checkerboard();
    let signs = d.crossing_signs(&c1);
    let weights = (0..d.crossing_count())
        .map(|c| Weight::biweighted(state_sign(s.get(c)), signs[c].oriented))
        .collect();
    ArrowPresentation::new(state_circles(d, s), Some(weights))
        .to_map()
        .expect("state circles of a plane diagram form an orientable presentation")
}

pub fn canonical_states(d: &LinkDiagram, colouring: &CheckerboardColouring) -> CanonicalStates {
    let n = d.crossing_count();
    let signs = d.crossing_signs(colouring);
    let pick = |f: &dyn Fn(usize) -> bool| SpliceState((0..n).map(|c| if f(c) { Splice::A } else { Splice::B }).collect());
    CanonicalStates {
        all_a: SpliceState::uniform(n, Splice::A),
        all_b: SpliceState::uniform(n, Splice::B),
        seifert: pick(&|c| signs[c].oriented.is_plus()),
        tait_black: pick(&|c| !signs[c].tait.is_plus()),
        tait_white: pick(&|c| signs[c].tait.is_plus()),
    }
}

pub fn seifert_state(d: &LinkDiagram) -> SpliceState {
    let (c1, _) = d.checkerboard();
    canonical_states(d, &c1).seifert
}

/// Edges of the Tait graph to partially dualise to reach the state graph.
pub fn state_dual_set(d: &LinkDiagram, s: &SpliceState, colouring: &CheckerboardColouring) -> BTreeSet<usize> {
    d.crossing_signs(colouring)
        .iter()
        .enumerate()
        .filter(|(c, sg)| (sg.tait == Sign::Plus) == (s.get(*c) == Splice::A))
        .map(|(c, _)| c)
        .collect()
}

#[derive(Debug, Clone)]
pub struct SeifertData {
    pub circle_count: usize,
    pub seifert_map: CombinatorialMap,
    pub genus: usize,
    pub graph: AbstractMultigraph,
}

pub fn seifert_data(d: &LinkDiagram) -> SeifertData {
    let s = seifert_state(d);
    let seifert_map = state_ribbon_graph(d, &s);
    SeifertData {
        circle_count: state_circles(d, &s).len(),
        genus: seifert_map.genus(),
        graph: seifert_map.underlying_graph(),
        seifert_map,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::tests::{FIGURE_EIGHT, HOPF, KINK, TREFOIL};

    fn all() -> Vec<LinkDiagram> {
        [KINK, HOPF, TREFOIL, FIGURE_EIGHT].iter().map(|s| LinkDiagram::parse_pd(s).unwrap()).collect()
    }

    #[test]
    fn parse_state() {
        let s: SpliceState = "AaB".parse().unwrap();
        assert_eq!(s.to_string(), "AAB");
        assert_eq!("AC".parse::<SpliceState>().unwrap_err(), StateError::Char('C'));
    }

    #[test]
    fn trefoil_tait_graphs() {
        let d = LinkDiagram::parse_pd(TREFOIL).unwrap();
        let (c1, c2) = d.checkerboard();
        let mut got: Vec<(usize, usize)> = [c1, c2]
            .iter()
            .map(|c| {
                let k = tait_graph(&d, c).counts();
                assert_eq!((k.e, k.g), (3, 0));
                (k.v, k.p)
            })
            .collect();
        got.sort();
        assert_eq!(got, vec![(2, 3), (3, 2)]);
    }

    #[test]
    fn tait_graphs_are_dual() {
        for d in all() {
            let (c1, c2) = d.checkerboard();
            let t1 = tait_graph(&d, &c1);
            let t2 = tait_graph(&d, &c2);
            assert!(t1.is_plane() && t2.is_plane());
            assert!(t1.dual().same_labelled(&t2), "{d}");
        }
    }

    #[test]
    fn tait_state_gives_tait_graph() {
        for d in all() {
            for c in [d.checkerboard().0, d.checkerboard().1] {
                let st = canonical_states(&d, &c);
                assert!(state_ribbon_graph(&d, &st.tait_black).same_labelled(&tait_graph(&d, &c)), "{d}");
                assert!(state_ribbon_graph(&d, &st.tait_white).same_labelled(&tait_graph(&d, &c.swapped())));
            }
        }
    }

    #[test]
    fn trefoil_all_a() {
        let d = LinkDiagram::parse_pd(TREFOIL).unwrap();
        let g = state_ribbon_graph(&d, &SpliceState::uniform(3, Splice::A));
        let k = g.counts();
        assert_eq!((k.e, k.g, k.v + k.p), (3, 0, 5));
    }

    #[test]
    fn kink_states() {
        let d = LinkDiagram::parse_pd(KINK).unwrap();
        let mut vp: Vec<(usize, usize)> = [Splice::A, Splice::B]
            .iter()
            .map(|&s| {
                let k = state_ribbon_graph(&d, &SpliceState::uniform(1, s)).counts();
                (k.v, k.p)
            })
            .collect();
        vp.sort();
        assert_eq!(vp, vec![(1, 2), (2, 1)]);
    }

    #[test]
    fn state_dual_sets() {
        let d = LinkDiagram::parse_pd(FIGURE_EIGHT).unwrap();
        let (c1, _) = d.checkerboard();
        let signs = d.crossing_signs(&c1);
        let st = canonical_states(&d, &c1);
        let plus: BTreeSet<usize> = (0..4).filter(|&c| signs[c].tait.is_plus()).collect();
        assert_eq!(state_dual_set(&d, &st.all_a, &c1), plus);
        assert_eq!(state_dual_set(&d, &st.all_b, &c1), (0..4).filter(|c| !plus.contains(c)).collect());
        let same: BTreeSet<usize> = (0..4).filter(|&c| signs[c].tait == signs[c].oriented).collect();
        assert_eq!(state_dual_set(&d, &st.seifert, &c1), same);
    }

    #[test]
    fn every_state_is_a_partial_dual() {
        for d in all() {
            let n = d.crossing_count();
            for c in [d.checkerboard().0, d.checkerboard().1] {
                let t = tait_graph(&d, &c);
                for bits in 0..1u64 << n {
                    let s = SpliceState::from_bits(n, bits);
                    let a = state_dual_set(&d, &s, &c);
                    let g = state_ribbon_graph(&d, &s);
                    assert!(t.partial_dual(&a).unwrap().same_labelled(&g), "{d} {s}");
                    let k = g.counts();
                    assert!(2 * k.g <= n + k.k - k.v);
                }
            }
        }
    }

    #[test]
    fn seifert_examples() {
        let t = seifert_data(&LinkDiagram::parse_pd(TREFOIL).unwrap());
        // All crossings weighted (-,-): the Seifert graph is the dual Tait graph.
        assert_eq!((t.circle_count, t.genus, t.seifert_map.counts().p), (2, 0, 3));
        assert_eq!(t.graph.degrees(), vec![3, 3]);
        let f = seifert_data(&LinkDiagram::parse_pd(FIGURE_EIGHT).unwrap());
        assert_eq!((f.circle_count, f.genus, f.seifert_map.counts().p), (3, 1, 1));
        let k = seifert_data(&LinkDiagram::parse_pd(KINK).unwrap());
        assert_eq!((k.circle_count, k.genus, k.graph.edge_count()), (2, 0, 1));
        for d in all() {
            assert!(seifert_data(&d).graph.is_bipartite());
        }
    }

    #[test]
    fn seifert_state_ignores_colouring() {
        for d in all() {
            let (c1, c2) = d.checkerboard();
            assert_eq!(canonical_states(&d, &c1).seifert, canonical_states(&d, &c2).seifert);
        }
    }
}
