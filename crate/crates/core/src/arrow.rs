//! Arrow presentations: oriented circles carrying labelled marking arrows,
//! two arrows per label.

use std::collections::BTreeMap;

use crate::map::{CombinatorialMap, MapError, Weight};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Arrow {
    pub label: usize,
    /// `true` when the arrow points along the cycle's orientation.
    pub along: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArrowPresentation {
    cycles: Vec<Vec<Arrow>>,
    label_weights: Option<Vec<Weight>>,
}

impl ArrowPresentation {
    pub fn new(cycles: Vec<Vec<Arrow>>, label_weights: Option<Vec<Weight>>) -> Self {
        ArrowPresentation { cycles, label_weights }
    }

    pub fn cycles(&self) -> &[Vec<Arrow>] {
        &self.cycles
    }

    pub fn label_weights(&self) -> Option<&[Weight]> {
        self.label_weights.as_deref()
    }

    /// Positions `(cycle, index)` of the two arrows of each label, sorted by
    /// label.
    fn occurrences(&self) -> Result<BTreeMap<usize, Vec<(usize, usize)>>, MapError> {
        let mut occ: BTreeMap<usize, Vec<(usize, usize)>> = BTreeMap::new();
        for (ci, c) in self.cycles.iter().enumerate() {
            for (i, a) in c.iter().enumerate() {
                occ.entry(a.label).or_default().push((ci, i));
            }
        }
        if let Some((&l, _)) = occ.iter().find(|(_, v)| v.len() != 2) {
            return Err(MapError::LabelNotTwice(l));
        }
        Ok(occ)
    }

    /// Reorients cycles so both arrows of every label agree, then reverses
    /// label pairs so every arrow points along. Fails on a non-orientable
    /// presentation.
    pub fn normalized(&self) -> Result<ArrowPresentation, MapError> {
        let occ = self.occurrences()?;
        let nc = self.cycles.len();
        // flip[c] xor flip[c'] == (along1 != along2) for each label.
        let mut adj: Vec<Vec<(usize, bool)>> = vec![Vec::new(); nc];
        for v in occ.values() {
            let (c1, i1) = v[0];
            let (c2, i2) = v[1];
            let differ = self.cycles[c1][i1].along != self.cycles[c2][i2].along;
            adj[c1].push((c2, differ));
            adj[c2].push((c1, differ));
        }
        let mut flip: Vec<Option<bool>> = vec![None; nc];
        for s in 0..nc {
            if flip[s].is_some() {
                continue;
            }
            flip[s] = Some(false);
            let mut stack = vec![s];
            while let Some(c) = stack.pop() {
                let fc = flip[c].unwrap();
                for &(o, differ) in &adj[c] {
                    let want = fc ^ differ;
                    match flip[o] {
                        None => {
                            flip[o] = Some(want);
                            stack.push(o);
                        }
                        Some(f) if f != want => return Err(MapError::NonOrientable),
                        _ => {}
                    }
                }
            }
        }
        let cycles = self
            .cycles
            .iter()
            .zip(flip)
            .map(|(c, f)| {
                let f = f.unwrap_or(false);
                let mut c: Vec<Arrow> =
                    c.iter().map(|a| Arrow { label: a.label, along: a.along ^ f }).collect();
                if f {
                    c.reverse();
                }
                c
            })
            .collect::<Vec<_>>();
        let cycles = cycles
            .into_iter()
            .map(|c| c.into_iter().map(|a| Arrow { label: a.label, along: true }).collect())
            .collect();
        Ok(ArrowPresentation { cycles, label_weights: self.label_weights.clone() })
    }

    /// Canonical form: normalized, each cycle rotated to its least label
    /// sequence, cycles sorted.
    pub fn canonical(&self) -> Result<ArrowPresentation, MapError> {
        let n = self.normalized()?;
        let mut cycles: Vec<Vec<Arrow>> = n.cycles.into_iter().map(least_rotation).collect();
        cycles.sort();
        Ok(ArrowPresentation { cycles, label_weights: n.label_weights })
    }

    /// Label sequences of the canonical form.
    pub fn canonical_labels(&self) -> Vec<Vec<usize>> {
        match self.canonical() {
            Ok(c) => c.cycles.iter().map(|cy| cy.iter().map(|a| a.label).collect()).collect(),
            Err(_) => Vec::new(),
        }
    }

    pub fn equivalent(&self, other: &ArrowPresentation) -> bool {
        match (self.canonical(), other.canonical()) {
            (Ok(a), Ok(b)) => a == b,
            _ => false,
        }
    }

    /// The ribbon graph described by the presentation. Labels are renumbered
    /// in increasing order to edge ids `0..e`; the first occurrence of a label
    /// in cycle order becomes the even dart.
    pub fn to_map(&self) -> Result<CombinatorialMap, MapError> {
        let n = self.normalized()?;
        let occ = n.occurrences()?;
        let edge_of_label: BTreeMap<usize, usize> = occ.keys().enumerate().map(|(i, &l)| (l, i)).collect();
        let mut dart_at: Vec<Vec<usize>> = n.cycles.iter().map(|c| vec![0; c.len()]).collect();
        for (l, v) in &occ {
            let e = edge_of_label[l];
            let (c1, i1) = v[0];
            let (c2, i2) = v[1];
            dart_at[c1][i1] = 2 * e;
            dart_at[c2][i2] = 2 * e + 1;
        }
        let mut sigma = vec![0; 2 * occ.len()];
        let mut isolated = 0;
        for darts in &dart_at {
            if darts.is_empty() {
                isolated += 1;
                continue;
            }
            for i in 0..darts.len() {
                sigma[darts[i]] = darts[(i + 1) % darts.len()];
            }
        }
        let weights = match &self.label_weights {
            None => None,
            Some(w) => Some(
                occ.keys()
                    .map(|&l| w.get(l).copied().ok_or(MapError::WeightCoverage { expected: l + 1, got: w.len() }))
                    .collect::<Result<Vec<_>, _>>()?,
            ),
        };
        CombinatorialMap::from_sigma(sigma, isolated, weights)
    }
}

fn least_rotation(c: Vec<Arrow>) -> Vec<Arrow> {
    if c.is_empty() {
        return c;
    }
    (0..c.len())
        .map(|r| c[r..].iter().chain(&c[..r]).copied().collect::<Vec<_>>())
        .min()
        .unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn arr(label: usize, along: bool) -> Arrow {
        Arrow { label, along }
    }

    #[test]
    fn label_not_twice() {
        let ap = ArrowPresentation::new(vec![vec![arr(0, true)]], None);
        assert_eq!(ap.to_map().unwrap_err(), MapError::LabelNotTwice(0));
    }

    #[test]
    fn reversed_pair_is_equivalent() {
        let a = ArrowPresentation::new(vec![vec![arr(0, true), arr(1, true), arr(0, true), arr(1, true)]], None);
        let b = ArrowPresentation::new(vec![vec![arr(0, false), arr(1, true), arr(0, false), arr(1, true)]], None);
        assert!(a.equivalent(&b));
        assert_eq!(a.to_map().unwrap().genus(), 1);
    }

    #[test]
    fn twisted_loop_is_rejected() {
        let ap = ArrowPresentation::new(vec![vec![arr(0, true), arr(0, false)]], None);
        assert_eq!(ap.to_map().unwrap_err(), MapError::NonOrientable);
    }

    #[test]
    fn flipped_cycle_is_reoriented() {
        // Two cycles joined by two edges; the second cycle is traced backwards.
        let a = ArrowPresentation::new(
            vec![vec![arr(0, true), arr(1, true)], vec![arr(0, true), arr(1, true)]],
            None,
        );
        let b = ArrowPresentation::new(
            vec![vec![arr(0, true), arr(1, true)], vec![arr(1, false), arr(0, false)]],
            None,
        );
        assert!(a.equivalent(&b));
        assert!(a.to_map().unwrap().same_labelled(&b.to_map().unwrap()));
    }

    #[test]
    fn canonicalization_is_idempotent() {
        let a = ArrowPresentation::new(
            vec![vec![arr(2, false), arr(0, false), arr(1, true)], vec![arr(1, true), arr(2, false), arr(0, false)]],
            None,
        );
        let c = a.canonical().unwrap();
        assert_eq!(c.canonical().unwrap(), c);
    }
}
