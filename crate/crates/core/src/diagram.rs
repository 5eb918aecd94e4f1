//! Oriented link diagrams in planar-diagram (PD) notation.
//!
//! `X(a,b,c,d)` lists the four arcs at a crossing counterclockwise, starting
//! with the incoming under-strand `a`; the under-strand leaves along `c`.
//! Internally every crossing is stored in that normal form: slot 0 is the
//! incoming under-strand, slot 2 the outgoing one and slots 1/3 carry the
//! over-strand. A *dart* is `4 * crossing + slot`; corner `4 * crossing + q`
//! is the region between slots `q` and `q + 1`.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::map::{Sign, UnionFind};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DiagramError {
    #[error("syntax error: {0}")]
    Syntax(String),
    #[error("arc labels are inconsistent: {0}")]
    ArcCount(String),
    #[error("diagram is not planar (Euler characteristic {chi}, expected 2)")]
    NonPlanar { chi: i64 },
    #[error("diagram is disconnected ({0} pieces)")]
    Disconnected(usize),
    #[error("orientation is inconsistent at arc {0}")]
    BadOrientation(usize),
    #[error("diagram has no crossings")]
    Empty,
}

pub type Crossing = usize;

#[inline]
pub fn crossing_of(dart: usize) -> Crossing {
    dart / 4
}

#[inline]
pub fn slot_of(dart: usize) -> usize {
    dart % 4
}

#[inline]
pub fn dart_at(c: Crossing, slot: usize) -> usize {
    4 * c + slot % 4
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Colour {
    Black,
    White,
}

impl Colour {
    pub fn other(self) -> Colour {
        match self {
            Colour::Black => Colour::White,
            Colour::White => Colour::Black,
        }
    }
}

/// Face colours indexed by face id.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckerboardColouring {
    colours: Vec<Colour>,
}

impl CheckerboardColouring {
    pub fn new(colours: Vec<Colour>) -> Self {
        CheckerboardColouring { colours }
    }

    pub fn colour(&self, face: usize) -> Colour {
        self.colours[face]
    }

    pub fn colours(&self) -> &[Colour] {
        &self.colours
    }

    pub fn swapped(&self) -> Self {
        CheckerboardColouring { colours: self.colours.iter().map(|c| c.other()).collect() }
    }

    pub fn count(&self, c: Colour) -> usize {
        self.colours.iter().filter(|&&x| x == c).count()
    }
}

/// Tait sign `m` and oriented sign `sigma` of one crossing.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CrossingSigns {
    pub tait: Sign,
    pub oriented: Sign,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinkDiagram {
    labels: Vec<usize>,
    partner: Vec<usize>,
    incoming: Vec<bool>,
    /// Component of every dart.
    component: Vec<usize>,
    /// Each component as the list of its arcs' head darts, in travel order.
    components: Vec<Vec<usize>>,
    faces: Vec<Vec<usize>>,
    face_of_corner: Vec<usize>,
}

impl LinkDiagram {
    /// Parses PD text: `X(a,b,c,d)` records separated by whitespace or
    /// commas, `#` starting a comment.
    pub fn parse_pd(text: &str) -> Result<LinkDiagram, DiagramError> {
        let records = parse_records(text)?;
        if records.is_empty() {
            return Err(DiagramError::Empty);
        }
        let n = records.len();
        let labels: Vec<usize> = records.iter().flatten().copied().collect();
        let mut where_: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (d, &l) in labels.iter().enumerate() {
            where_.entry(l).or_default().push(d);
        }
        if let Some((l, v)) = where_.iter().find(|(_, v)| v.len() != 2) {
            return Err(DiagramError::ArcCount(format!("arc {l} occurs {} times", v.len())));
        }
        if where_.len() != 2 * n {
            return Err(DiagramError::ArcCount(format!("{} arcs for {n} crossings", where_.len())));
        }
        let mut partner = vec![0; 4 * n];
        for v in where_.values() {
            partner[v[0]] = v[1];
            partner[v[1]] = v[0];
        }
        check_connected_planar(&partner)?;
        let incoming = infer_orientation(&labels, &partner)?;
        Self::assemble(labels, partner, incoming)
    }

    /// Builds a diagram from dart data. Slots 0/2 must carry the under-strand
    /// and 1/3 the over-strand; `incoming` marks the darts where a strand
    /// enters its crossing. Crossings are rotated into normal form.
    pub fn from_darts(
        labels: Option<Vec<usize>>,
        partner: Vec<usize>,
        incoming: Vec<bool>,
    ) -> Result<LinkDiagram, DiagramError> {
        let nd = partner.len();
        if nd == 0 {
            return Err(DiagramError::Empty);
        }
        if nd % 4 != 0 || incoming.len() != nd {
            return Err(DiagramError::ArcCount("dart count is not a multiple of four".into()));
        }
        for d in 0..nd {
            let p = partner[d];
            if p >= nd || p == d || partner[p] != d {
                return Err(DiagramError::ArcCount(format!("dart {d} has no valid partner")));
            }
        }
        check_connected_planar(&partner)?;
        let labels = labels.unwrap_or_else(|| provisional_labels(&partner));
        Self::assemble(labels, partner, incoming)
    }

    fn assemble(labels: Vec<usize>, partner: Vec<usize>, incoming: Vec<bool>) -> Result<LinkDiagram, DiagramError> {
        let nd = partner.len();
        let n = nd / 4;
        for d in 0..nd {
            if incoming[d] == incoming[partner[d]] {
                return Err(DiagramError::BadOrientation(labels[d]));
            }
        }
        for c in 0..n {
            let b = 4 * c;
            if incoming[b] == incoming[b + 2] || incoming[b + 1] == incoming[b + 3] {
                return Err(DiagramError::BadOrientation(labels[b]));
            }
        }
        // Rotate crossings whose under-strand enters at slot 2.
        let new_dart: Vec<usize> = (0..nd)
            .map(|d| {
                let c = crossing_of(d);
                if incoming[4 * c] {
                    d
                } else {
                    dart_at(c, slot_of(d) + 2)
                }
            })
            .collect();
        let mut p2 = vec![0; nd];
        let mut in2 = vec![false; nd];
        let mut l2 = vec![0; nd];
        for d in 0..nd {
            p2[new_dart[d]] = new_dart[partner[d]];
            in2[new_dart[d]] = incoming[d];
            l2[new_dart[d]] = labels[d];
        }
        let (partner, incoming, labels) = (p2, in2, l2);

        // Components: follow heads straight through crossings.
        let mut component = vec![usize::MAX; nd];
        let mut heads: Vec<usize> = (0..nd).filter(|&d| incoming[d]).collect();
        heads.sort_by_key(|&d| (labels[d], d));
        let mut components = Vec::new();
        for &h in &heads {
            if component[h] != usize::MAX {
                continue;
            }
            let id = components.len();
            let mut comp = Vec::new();
            let mut x = h;
            while component[x] == usize::MAX {
                component[x] = id;
                component[partner[x]] = id;
                comp.push(x);
                let out = dart_at(crossing_of(x), slot_of(x) + 2);
                x = partner[out];
            }
            components.push(comp);
        }

        let phi: Vec<usize> = (0..nd).map(|d| {
            let a = partner[d];
            dart_at(crossing_of(a), slot_of(a) + 1)
        }).collect();
        let mut face_of_corner = vec![usize::MAX; nd];
        let mut faces = Vec::new();
        for start in 0..nd {
            let corner = |y: usize| dart_at(crossing_of(y), slot_of(y) + 3);
            if face_of_corner[corner(start)] != usize::MAX {
                continue;
            }
            let id = faces.len();
            let mut face = Vec::new();
            let mut y = start;
            loop {
                let k = corner(y);
                if face_of_corner[k] != usize::MAX {
                    break;
                }
                face_of_corner[k] = id;
                face.push(k);
                y = phi[y];
            }
            faces.push(face);
        }
        Ok(LinkDiagram { labels, partner, incoming, component, components, faces, face_of_corner })
    }

    pub fn crossing_count(&self) -> usize {
        self.partner.len() / 4
    }

    pub fn arc_count(&self) -> usize {
        self.partner.len() / 2
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn component_count(&self) -> usize {
        self.components.len()
    }

    pub fn partner(&self, dart: usize) -> usize {
        self.partner[dart]
    }

    pub fn partners(&self) -> &[usize] {
        &self.partner
    }

    pub fn is_incoming(&self, dart: usize) -> bool {
        self.incoming[dart]
    }

    pub fn incoming(&self) -> &[bool] {
        &self.incoming
    }

    pub fn label(&self, dart: usize) -> usize {
        self.labels[dart]
    }

    pub fn component_of(&self, dart: usize) -> usize {
        self.component[dart]
    }

    pub fn components(&self) -> &[Vec<usize>] {
        &self.components
    }

    /// Faces as corner lists, in boundary-walk order.
    pub fn faces(&self) -> &[Vec<usize>] {
        &self.faces
    }

    pub fn face_of_corner(&self, corner: usize) -> usize {
        self.face_of_corner[corner]
    }

    /// `true` when the over-strand enters through slot 3.
    pub fn over_enters_at_3(&self, c: Crossing) -> bool {
        self.incoming[dart_at(c, 3)]
    }

    /// The two proper colourings; the first makes the face on the left of
    /// the least-labelled arc white.
    pub fn checkerboard(&self) -> (CheckerboardColouring, CheckerboardColouring) {
        let nf = self.faces.len();
        let mut adj = vec![Vec::new(); nf];
        for c in 0..self.crossing_count() {
            for q in 0..4 {
                let f = self.face_of_corner[dart_at(c, q)];
                let g = self.face_of_corner[dart_at(c, q + 1)];
                adj[f].push(g);
            }
        }
        let head = (0..self.partner.len())
            .filter(|&d| self.incoming[d])
            .min_by_key(|&d| (self.labels[d], d))
            .unwrap();
        let left = self.face_of_corner[dart_at(crossing_of(head), slot_of(head) + 3)];
        let mut col: Vec<Option<Colour>> = vec![None; nf];
        col[left] = Some(Colour::White);
        let mut stack = vec![left];
        while let Some(f) = stack.pop() {
            let c = col[f].unwrap();
            for &g in &adj[f] {
                if col[g].is_none() {
                    col[g] = Some(c.other());
                    stack.push(g);
                }
            }
        }
        let first = CheckerboardColouring::new(col.into_iter().map(|c| c.expect("diagram is connected")).collect());
        let second = first.swapped();
        (first, second)
    }

    pub fn corner_colour(&self, colouring: &CheckerboardColouring, c: Crossing, q: usize) -> Colour {
        colouring.colour(self.face_of_corner[dart_at(c, q)])
    }

    /// Tait sign: `+` when the corners swept counterclockwise by the
    /// over-strand (corners 1 and 3) are black. Oriented sign: `+` when
    /// (over, under) directions form a positive frame.
    pub fn crossing_signs(&self, colouring: &CheckerboardColouring) -> Vec<CrossingSigns> {
        (0..self.crossing_count())
            .map(|c| CrossingSigns {
                tait: Sign::from_bool(self.corner_colour(colouring, c, 1) == Colour::Black),
                oriented: Sign::from_bool(self.over_enters_at_3(c)),
            })
            .collect()
    }

    /// Same diagram with the chosen components reversed.
    pub fn with_reversed(&self, reverse: &[bool]) -> LinkDiagram {
        let incoming = (0..self.partner.len())
            .map(|d| self.incoming[d] ^ reverse[self.component[d]])
            .collect();
        Self::assemble(self.labels.clone(), self.partner.clone(), incoming)
            .expect("reversal preserves validity")
    }

    /// Same diagram with arcs renumbered `1..=2n` along components.
    pub fn relabeled(&self) -> LinkDiagram {
        let mut labels = vec![0; self.partner.len()];
        let mut next = 1;
        for comp in &self.components {
            for &h in comp {
                labels[h] = next;
                labels[self.partner[h]] = next;
                next += 1;
            }
        }
        Self::assemble(labels, self.partner.clone(), self.incoming.clone()).expect("relabel preserves validity")
    }

    pub fn pd_records(&self) -> Vec<[usize; 4]> {
        (0..self.crossing_count())
            .map(|c| [0, 1, 2, 3].map(|s| self.labels[dart_at(c, s)]))
            .collect()
    }

    pub fn to_pd(&self) -> String {
        self.pd_records()
            .iter()
            .map(|r| format!("X({},{},{},{})", r[0], r[1], r[2], r[3]))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl fmt::Display for LinkDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_pd())
    }
}

fn parse_records(text: &str) -> Result<Vec<[usize; 4]>, DiagramError> {
    let mut cleaned = String::new();
    for line in text.lines() {
        cleaned.push_str(line.split('#').next().unwrap_or(""));
        cleaned.push(' ');
    }
    let mut out = Vec::new();
    let mut rest = cleaned.trim_start_matches(|c: char| c.is_whitespace() || c == ',');
    while !rest.is_empty() {
        let body = rest
            .strip_prefix('X')
            .and_then(|r| r.trim_start().strip_prefix('('))
            .ok_or_else(|| DiagramError::Syntax(format!("expected X( at `{}`", preview(rest))))?;
        let close = body.find(')').ok_or_else(|| DiagramError::Syntax("missing `)`".into()))?;
        let nums: Vec<usize> = body[..close]
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|s| !s.is_empty())
            .map(|s| s.parse::<usize>().map_err(|_| DiagramError::Syntax(format!("bad arc label `{s}`"))))
            .collect::<Result<_, _>>()?;
        let rec: [usize; 4] = nums
            .try_into()
            .map_err(|v: Vec<usize>| DiagramError::Syntax(format!("crossing has {} arcs", v.len())))?;
        out.push(rec);
        rest = body[close + 1..].trim_start_matches(|c: char| c.is_whitespace() || c == ',');
    }
    Ok(out)
}

fn preview(s: &str) -> String {
    s.chars().take(12).collect()
}

fn provisional_labels(partner: &[usize]) -> Vec<usize> {
    let mut labels = vec![0; partner.len()];
    let mut next = 1;
    for d in 0..partner.len() {
        if d < partner[d] {
            labels[d] = next;
            labels[partner[d]] = next;
            next += 1;
        }
    }
    labels
}

fn check_connected_planar(partner: &[usize]) -> Result<(), DiagramError> {
    let nd = partner.len();
    let n = nd / 4;
    let mut uf = UnionFind::new(n);
    for d in 0..nd {
        uf.union(crossing_of(d), crossing_of(partner[d]));
    }
    let pieces = (0..n).filter(|&c| uf.find(c) == c).count();
    if pieces != 1 {
        return Err(DiagramError::Disconnected(pieces));
    }
    let phi: Vec<usize> = (0..nd).map(|d| dart_at(crossing_of(partner[d]), slot_of(partner[d]) + 1)).collect();
    let f = crate::map::orbits(&phi).len() as i64;
    let chi = n as i64 - 2 * n as i64 + f;
    if chi != 2 {
        return Err(DiagramError::NonPlanar { chi });
    }
    Ok(())
}

/// Head/tail of every dart. Under-strands fix slot 0 as incoming; the rest
/// propagates along arcs and over-strands. Components never passing under
/// fall back to arc-number succession.
fn infer_orientation(labels: &[usize], partner: &[usize]) -> Result<Vec<bool>, DiagramError> {
    let nd = partner.len();
    let mut inc: Vec<Option<bool>> = vec![None; nd];
    let mut stack = Vec::new();
    let set = |inc: &mut Vec<Option<bool>>, stack: &mut Vec<usize>, d: usize, v: bool| -> Result<(), DiagramError> {
        match inc[d] {
            Some(x) if x != v => Err(DiagramError::BadOrientation(labels[d])),
            Some(_) => Ok(()),
            None => {
                inc[d] = Some(v);
                stack.push(d);
                Ok(())
            }
        }
    };
    for c in 0..nd / 4 {
        set(&mut inc, &mut stack, dart_at(c, 0), true)?;
        set(&mut inc, &mut stack, dart_at(c, 2), false)?;
    }
    loop {
        while let Some(d) = stack.pop() {
            let v = inc[d].unwrap();
            set(&mut inc, &mut stack, partner[d], !v)?;
            let opposite = dart_at(crossing_of(d), slot_of(d) + 2);
            set(&mut inc, &mut stack, opposite, !v)?;
        }
        let Some(d) = (0..nd).find(|&d| inc[d].is_none()) else { break };
        // d is an over slot; enters at b when d's label is succeeded by the
        // opposite label.
        let c = crossing_of(d);
        let (b, dd) = (labels[dart_at(c, 1)], labels[dart_at(c, 3)]);
        let b_in = dd == b + 1 || b > dd + 1;
        set(&mut inc, &mut stack, dart_at(c, 1), b_in)?;
    }
    Ok(inc.into_iter().map(|x| x.unwrap()).collect())
}
