//! Seeded generators for maps, plane maps and link diagrams, and exhaustive
//! enumeration of small connected plane maps.

use std::collections::{BTreeSet, HashSet};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::diagram::LinkDiagram;
use crate::map::{alpha, CombinatorialMap, Dart, EdgeId, Sign, Weight};
use crate::seifert::medial_diagram;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniformly random rotation on `2e` darts: any genus, possibly
/// disconnected, plus up to one isolated vertex.
pub fn random_map<R: Rng>(rng: &mut R, edges: usize) -> CombinatorialMap {
    let mut sigma: Vec<Dart> = (0..2 * edges).collect();
    sigma.shuffle(rng);
    let isolated = usize::from(rng.gen_bool(0.1));
    CombinatorialMap::from_sigma(sigma, isolated, None).expect("a shuffle is a permutation")
}

pub fn random_subset<R: Rng>(rng: &mut R, n: usize) -> BTreeSet<EdgeId> {
    (0..n).filter(|_| rng.gen_bool(0.5)).collect()
}

pub fn random_signs<R: Rng>(rng: &mut R, m: &CombinatorialMap) -> CombinatorialMap {
    let w = (0..m.num_edges()).map(|_| Weight::signed(Sign::from_bool(rng.gen_bool(0.5)))).collect();
    m.clone().with_weights(Some(w)).expect("one weight per edge")
}

fn insert_after(sigma: &mut [Dart], x: Dart, y: Dart) {
    sigma[y] = sigma[x];
    sigma[x] = y;
}

/// Adds a pendant edge in the corner after dart `x`.
fn with_pendant(sigma: &[Dart], x: Dart) -> Vec<Dart> {
    let n = sigma.len();
    let mut s = sigma.to_vec();
    s.extend([n, n + 1]);
    insert_after(&mut s, x, n);
    s
}

/// Adds an edge joining the corners after `alpha(x)` and `alpha(z)`, where
/// `x` and `z` lie on one face.
fn with_chord(sigma: &[Dart], x: Dart, z: Dart) -> Vec<Dart> {
    let n = sigma.len();
    let mut s = sigma.to_vec();
    s.extend([n + 1, n]);
    insert_after(&mut s, alpha(x), n);
    insert_after(&mut s, alpha(z), n + 1);
    s
}

fn single_edge() -> Vec<Dart> {
    vec![0, 1]
}

/// Connected plane map with `edges` edges grown by pendant edges and face
/// chords.
pub fn random_plane_map<R: Rng>(rng: &mut R, edges: usize) -> CombinatorialMap {
    if edges == 0 {
        return CombinatorialMap::isolated_vertex();
    }
    let mut sigma = single_edge();
    while sigma.len() < 2 * edges {
        let n = sigma.len();
        if rng.gen_bool(0.4) {
            sigma = with_pendant(&sigma, rng.gen_range(0..n));
        } else {
            let m = CombinatorialMap::from_sigma(sigma.clone(), 0, None).expect("valid");
            let faces = m.faces();
            let f = &faces[rng.gen_range(0..faces.len())];
            let x = f[rng.gen_range(0..f.len())];
            let z = f[rng.gen_range(0..f.len())];
            sigma = with_chord(&sigma, x, z);
        }
    }
    CombinatorialMap::from_sigma(sigma, 0, None).expect("valid")
}

/// All connected plane maps with `1..=max_edges` edges, one per isomorphism
/// class (mirror images identified).
pub fn enumerate_plane_maps(max_edges: usize) -> Vec<CombinatorialMap> {
    let mut out = Vec::new();
    if max_edges == 0 {
        return out;
    }
    let mut seen = HashSet::new();
    let mut level = Vec::new();
    for sigma in [single_edge(), vec![1, 0]] {
        let m = CombinatorialMap::from_sigma(sigma, 0, None).expect("valid");
        seen.insert(m.iso_code(false));
        level.push(m);
    }
    for _ in 1..max_edges {
        let mut next = Vec::new();
        for m in &level {
            let sigma = m.sigma();
            let mut children: Vec<Vec<Dart>> = (0..sigma.len()).map(|x| with_pendant(sigma, x)).collect();
            for f in m.faces() {
                for &x in &f {
                    for &z in &f {
                        children.push(with_chord(sigma, x, z));
                    }
                }
            }
            for s in children {
                let c = CombinatorialMap::from_sigma(s, 0, None).expect("valid");
                if seen.insert(c.iso_code(false)) {
                    next.push(c);
                }
            }
        }
        out.append(&mut level);
        level = next;
    }
    out.append(&mut level);
    out
}

/// Connected diagram with `crossings` crossings: the medial diagram of a
/// random plane map with random Tait signs, components randomly reversed.
pub fn random_diagram<R: Rng>(rng: &mut R, crossings: usize) -> LinkDiagram {
    let m = random_plane_map(rng, crossings.max(1));
    let t = random_signs(rng, &m);
    let d = medial_diagram(&t).expect("plane connected maps have medial diagrams");
    let flips: Vec<bool> = (0..d.component_count()).map(|_| rng.gen_bool(0.5)).collect();
    d.with_reversed(&flips).relabeled()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn plane_maps_are_plane() {
        let mut r = rng(7);
        for e in 0..12 {
            let m = random_plane_map(&mut r, e);
            assert!(m.is_plane());
            assert_eq!(m.counts().k, 1);
            assert_eq!(m.num_edges(), e);
        }
    }

    #[test]
    fn enumeration_counts() {
        // Unrooted planar maps up to reflection (OEIS A006384).
        let maps = enumerate_plane_maps(5);
        let by_e = |e| maps.iter().filter(|m| m.num_edges() == e).count();
        assert_eq!((by_e(1), by_e(2), by_e(3), by_e(4), by_e(5)), (2, 4, 14, 52, 248));
        assert!(maps.iter().all(|m| m.is_plane()));
    }

    #[test]
    fn random_diagrams_are_valid() {
        let mut r = rng(11);
        for n in 1..=8 {
            let d = random_diagram(&mut r, n);
            assert_eq!(d.crossing_count(), n);
            assert!(LinkDiagram::parse_pd(&d.to_pd()).is_ok());
        }
    }

    #[test]
    fn seeded() {
        let a = random_map(&mut rng(3), 6);
        let b = random_map(&mut rng(3), 6);
        assert_eq!(a, b);
    }
}
