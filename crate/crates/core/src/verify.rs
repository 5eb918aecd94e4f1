//! The acceptance suites, shared by the test target and `selftest`.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use rand::Rng;
use serde::Serialize;

use crate::catalog;
use crate::cli::{invariants_output, seifert_check_output, Format};
use crate::diagram::LinkDiagram;
use crate::map::{Cd, CombinatorialMap, EdgeId, Sign, Weight};
use crate::parallels::{
    check_sign_projection, parallel_genus_report, parallel_tait, predicted_counts, predicted_histogram,
    verify_overlay_recurrence,
};
use crate::random::{enumerate_plane_maps, random_diagram, random_map, random_plane_map, random_signs, random_subset, rng};
use crate::seifert::{
    labelings_over_orientations, odd_c_degree, reconstruct_link, reconstruction_round_trips, remark_identity_check,
    verify_seifert_characterization, SeifertError,
};
use crate::states::{canonical_states, state_dual_set, state_ribbon_graph, tait_graph, SpliceState};

#[derive(Debug, Clone, Serialize)]
pub struct SuiteResult {
    pub id: usize,
    pub name: &'static str,
    pub pass: bool,
    pub cases: usize,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub detail: String,
    #[serde(skip)]
    pub elapsed: Duration,
}

#[derive(Default)]
struct Tally {
    cases: usize,
    failures: Vec<String>,
    note: String,
}

impl Tally {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn finish(self, id: usize, name: &'static str, start: Instant) -> SuiteResult {
        let mut detail = self.note;
        if let Some(f) = self.failures.first() {
            if !detail.is_empty() {
                detail.push_str("; ");
            }
            detail.push_str(&format!("{} failures, first: {f}", self.failures.len()));
        }
        SuiteResult { id, name, pass: self.failures.is_empty(), cases: self.cases, detail, elapsed: start.elapsed() }
    }
}

pub const SUITES: [(usize, &str); 11] = [
    (1, "partial duality"),
    (2, "tait duality"),
    (3, "state graphs as partial duals"),
    (4, "seifert characterisation"),
    (5, "reconstruction round trip"),
    (6, "region dual identity"),
    (7, "parallel counts"),
    (8, "overlay base case"),
    (9, "sign structure"),
    (10, "parallel genus"),
    (11, "cli golden files"),
];

pub fn run(id: usize) -> Option<SuiteResult> {
    Some(match id {
        1 => partial_duality(),
        2 => tait_duality(),
        3 => state_graphs(),
        4 => seifert_characterisation(),
        5 => reconstruction(),
        6 => region_dual_identity(),
        7 => parallel_counts(),
        8 => overlay_base_case(),
        9 => sign_structure(),
        10 => parallel_genus(),
        11 => golden_files(),
        _ => return None,
    })
}

pub fn run_all() -> Vec<SuiteResult> {
    SUITES.iter().filter_map(|&(id, _)| run(id)).collect()
}

fn name(id: usize) -> &'static str {
    SUITES[id - 1].1
}

fn sym_diff(a: &BTreeSet<EdgeId>, b: &BTreeSet<EdgeId>) -> BTreeSet<EdgeId> {
    a.symmetric_difference(b).copied().collect()
}

/// Random maps with random subsets: the five identities and the genus
/// formula.
pub fn partial_duality() -> SuiteResult {
    let start = Instant::now();
    let mut t = Tally::default();
    let mut r = rng(1);
    for i in 0..500 {
        let e = r.gen_range(0..=12);
        let g = random_map(&mut r, e);
        let a = random_subset(&mut r, e);
        let b = random_subset(&mut r, e);
        let ga = g.partial_dual(&a).expect("subset of edges");
        t.check(g.partial_dual(&BTreeSet::new()).unwrap().same_labelled(&g), || format!("map {i}: empty set"));
        t.check(g.partial_dual(&g.all_edges()).unwrap().same_labelled(&g.dual()), || format!("map {i}: all edges"));
        t.check(ga.partial_dual(&b).unwrap().same_labelled(&g.partial_dual(&sym_diff(&a, &b)).unwrap()), || {
            format!("map {i}: composition")
        });
        t.check(CombinatorialMap::from_sigma(ga.sigma().to_vec(), ga.isolated(), None).is_ok(), || {
            format!("map {i}: validity")
        });
        let mut pieces = ga.component_maps();
        let mut expected: Vec<(CombinatorialMap, Vec<EdgeId>)> = g
            .component_maps()
            .into_iter()
            .map(|(m, edges)| {
                let local: BTreeSet<EdgeId> = edges.iter().enumerate().filter(|(_, e)| a.contains(e)).map(|(k, _)| k).collect();
                (m.partial_dual(&local).unwrap(), edges)
            })
            .collect();
        pieces.sort_by(|x, y| x.1.cmp(&y.1));
        expected.sort_by(|x, y| x.1.cmp(&y.1));
        let local_ok = pieces.len() == expected.len()
            && pieces.iter().zip(&expected).all(|(p, q)| p.1 == q.1 && p.0.same_labelled(&q.0));
        t.check(local_ok, || format!("map {i}: components"));
        let k = g.counts().k;
        let lhs = 2 * ga.genus();
        let rhs = 2 * k + e - g.boundary_count_without(&g.complement(&a)).unwrap() - g.boundary_count_without(&a).unwrap();
        t.check(lhs == rhs, || format!("map {i}: genus {lhs} vs {rhs}"));
    }
    t.finish(1, name(1), start)
}

pub fn tait_duality() -> SuiteResult {
    let start = Instant::now();
    let mut t = Tally::default();
    for (n, d) in catalog::all() {
        let (c1, c2) = d.checkerboard();
        let t1 = tait_graph(&d, &c1);
        let t2 = tait_graph(&d, &c2);
        t.check(t1.is_plane() && t2.is_plane(), || format!("{n}: not plane"));
        t.check(t1.dual().same_labelled(&t2), || format!("{n}: not dual"));
        let w1 = t1.weights().unwrap();
        let w2 = t2.weights().unwrap();
        let signs_ok = w1.iter().zip(w2).all(|(x, y)| x.tait == -y.tait && x.oriented == y.oriented);
        t.check(signs_ok, || format!("{n}: signs"));
    }
    t.finish(2, name(2), start)
}

fn small_diagrams() -> Vec<(String, LinkDiagram)> {
    let mut out: Vec<(String, LinkDiagram)> =
        catalog::all().into_iter().filter(|(_, d)| d.crossing_count() <= 4).map(|(n, d)| (n.to_string(), d)).collect();
    let mut r = rng(3);
    for i in 0..20 {
        let n = 1 + i % 4;
        out.push((format!("random {i}"), random_diagram(&mut r, n)));
    }
    out
}

fn all_states(n: usize) -> impl Iterator<Item = SpliceState> {
    (0u64..1 << n).map(move |b| SpliceState::from_bits(n, b))
}

pub fn state_graphs() -> SuiteResult {
    let start = Instant::now();
    let mut t = Tally::default();
    for (n, d) in catalog::all() {
        let (c1, _) = d.checkerboard();
        let tg = tait_graph(&d, &c1);
        let w = tg.weights().unwrap();
        let pick = |f: &dyn Fn(&Weight) -> bool| -> BTreeSet<EdgeId> { (0..w.len()).filter(|&e| f(&w[e])).collect() };
        let st = canonical_states(&d, &c1);
        let cases = [
            ("all-A", pick(&|x| x.tait == Sign::Plus), &st.all_a),
            ("all-B", pick(&|x| x.tait == Sign::Minus), &st.all_b),
            ("seifert", pick(&|x| x.cd == Some(Cd::C)), &st.seifert),
        ];
        for (label, a, s) in cases {
            t.check(tg.partial_dual(&a).unwrap().same_labelled(&state_ribbon_graph(&d, s)), || format!("{n}: {label}"));
        }
    }
    for (n, d) in small_diagrams() {
        let (c1, c2) = d.checkerboard();
        for c in [&c1, &c2] {
            let tg = tait_graph(&d, c);
            for s in all_states(d.crossing_count()) {
                let pd = tg.partial_dual(&state_dual_set(&d, &s, c)).unwrap();
                t.check(pd.same_labelled(&state_ribbon_graph(&d, &s)), || format!("{n}: state {s}"));
            }
        }
    }
    t.finish(3, name(3), start)
}

fn orientation_classes(d: &LinkDiagram) -> Vec<LinkDiagram> {
    let k = d.component_count();
    (0u64..1 << (k - 1))
        .map(|mask| {
            let rev: Vec<bool> = (0..k).map(|i| i > 0 && mask >> (i - 1) & 1 == 1).collect();
            d.with_reversed(&rev)
        })
        .collect()
}

pub fn seifert_characterisation() -> SuiteResult {
    let start = Instant::now();
    let mut t = Tally::default();
    let mut diagrams: Vec<(String, LinkDiagram)> = catalog::all().into_iter().map(|(n, d)| (n.to_string(), d)).collect();
    let mut r = rng(4);
    for i in 0..100 {
        let n = r.gen_range(1..=8);
        diagrams.push((format!("random {i}"), random_diagram(&mut r, n)));
    }
    for (n, d) in &diagrams {
        let (c1, _) = d.checkerboard();
        let k = d.component_count();
        let count = labelings_over_orientations(d, &c1).len();
        t.check(count == 1 << (k - 1), || format!("{n}: {count} labelings for {k} components"));
        for o in orientation_classes(d) {
            let (a, b) = o.checkerboard();
            for c in [a, b] {
                let rep = verify_seifert_characterization(&o, &c);
                t.check(rep.pass, || {
                    let bad: Vec<&str> = rep.checks.iter().filter(|x| !x.pass).map(|x| x.name.as_str()).collect();
                    format!("{n} {}: {}", o.to_pd(), bad.join(","))
                });
            }
        }
    }
    t.finish(4, name(4), start)
}

pub fn reconstruction() -> SuiteResult {
    let start = Instant::now();
    let mut t = Tally::default();
    let maps = enumerate_plane_maps(5);
    let mut admissible = 0;
    for (i, m) in maps.iter().enumerate() {
        let e = m.num_edges();
        for signs in 0u64..1 << e {
            let w = (0..e).map(|k| Weight::signed(Sign::from_bool(signs >> k & 1 == 1))).collect();
            let tg = m.clone().with_weights(Some(w)).unwrap();
            for bits in 0u64..1 << e {
                let labels: Vec<Cd> = (0..e).map(|k| if bits >> k & 1 == 1 { Cd::C } else { Cd::D }).collect();
                let (ov, of) = odd_c_degree(&tg, &labels);
                match reconstruct_link(&tg, &labels) {
                    Ok(d) => {
                        admissible += 1;
                        t.check(ov.is_empty() && of.is_empty(), || format!("map {i}: accepted odd labelling"));
                        t.check(reconstruction_round_trips(&tg, &labels, &d), || format!("map {i} signs {signs:b} labels {bits:b}"));
                    }
                    Err(SeifertError::NotEulerian { .. }) => {
                        t.check(!(ov.is_empty() && of.is_empty()), || format!("map {i}: rejected even labelling"));
                    }
                    Err(err) => t.check(false, || format!("map {i} labels {bits:b}: {err}")),
                }
            }
        }
    }
    t.note = format!("{} maps, {admissible} admissible labelings", maps.len());
    t.finish(5, name(5), start)
}

pub fn region_dual_identity() -> SuiteResult {
    let start = Instant::now();
    let mut t = Tally::default();
    let mut r = rng(6);
    for i in 0..200 {
        let e = r.gen_range(1..=8);
        let m = random_plane_map(&mut r, e);
        let g = random_signs(&mut r, &m);
        let a = random_subset(&mut r, e);
        let ok = remark_identity_check(&g, &a).unwrap_or(false);
        t.check(ok, || format!("pair {i}: A = {a:?}"));
    }
    t.finish(6, name(6), start)
}

pub fn parallel_counts() -> SuiteResult {
    let start = Instant::now();
    let mut t = Tally::default();
    for (n, d) in catalog::all() {
        let (c1, c2) = d.checkerboard();
        for c in [c1, c2] {
            let tg = tait_graph(&d, &c);
            let k = tg.counts();
            for r in 2..=5 {
                let pt = parallel_tait(&d, &c, r).expect("r >= 1");
                let got = (pt.counts.v, pt.counts.e, pt.counts.f);
                let want = predicted_counts(k.v, k.e, k.p, r);
                t.check(got == want && got.0 + got.2 == got.1 + 2, || format!("{n} r={r}: {got:?} vs {want:?}"));
                if r <= 4 {
                    t.check(pt.counts.histogram == predicted_histogram(&tg, r), || format!("{n} r={r}: faces"));
                }
            }
        }
    }
    t.finish(7, name(7), start)
}

pub fn overlay_base_case() -> SuiteResult {
    let start = Instant::now();
    let mut t = Tally::default();
    for (n, d) in catalog::all() {
        let (c1, c2) = d.checkerboard();
        for c in [c1, c2] {
            t.check(verify_overlay_recurrence(&d, &c).unwrap_or(false), || n.to_string());
        }
    }
    t.finish(8, name(8), start)
}

pub fn sign_structure() -> SuiteResult {
    let start = Instant::now();
    let mut t = Tally::default();
    for (n, d) in catalog::all() {
        let (c1, c2) = d.checkerboard();
        for c in [c1, c2] {
            for r in 2..=3 {
                t.check(check_sign_projection(&parallel_tait(&d, &c, r).unwrap()), || format!("{n} r={r}"));
            }
        }
    }
    for (n, d) in small_diagrams() {
        let (c1, c2) = d.checkerboard();
        for c in [c1, c2] {
            for s in all_states(d.crossing_count()) {
                let rep = parallel_genus_report(&d, &c, &s, 1).unwrap();
                let rec = &rep.records[0];
                t.check(rec.ca6, || format!("{n} state {s}: partial dual at r=2"));
                t.check(rec.ca5_item1 && rec.ca5_item2, || format!("{n} state {s}: boundary counts"));
            }
        }
    }
    t.finish(9, name(9), start)
}

pub fn parallel_genus() -> SuiteResult {
    let start = Instant::now();
    let mut t = Tally::default();
    let mut forms = BTreeSet::new();
    for (n, d) in catalog::all() {
        let (c1, _) = d.checkerboard();
        let st = canonical_states(&d, &c1);
        for (label, s) in [("all-A", &st.all_a), ("all-B", &st.all_b), ("seifert", &st.seifert)] {
            let rep = parallel_genus_report(&d, &c1, s, 2).unwrap();
            let r1 = &rep.records[0];
            t.check(r1.oracle_genus == 2 * rep.g + rep.e - 1, || format!("{n} {label}: r=1 genus {}", r1.oracle_genus));
            let r2 = &rep.records[1];
            t.check(r2.matches.ca4_iterated != r2.matches.ca1, || format!("{n} {label}: r=2 matches neither closed form"));
            t.check(rep.records.iter().all(|x| x.matches.ca4 && x.matches.ca3), || format!("{n} {label}: recurrence"));
            forms.insert(rep.closed_form);
        }
    }
    t.check(forms.len() == 1, || format!("closed forms differ across diagrams: {forms:?}"));
    t.note = format!("oracle matches {}", forms.iter().copied().collect::<Vec<_>>().join("/"));
    t.finish(10, name(10), start)
}

/// Committed outputs of `invariants` and `seifert-check` for the catalog.
pub const GOLDEN: [(&str, &str, &str); 5] = [
    ("kink", include_str!("../tests/fixtures/kink.invariants.txt"), include_str!("../tests/fixtures/kink.seifert.json")),
    ("hopf", include_str!("../tests/fixtures/hopf.invariants.txt"), include_str!("../tests/fixtures/hopf.seifert.json")),
    (
        "trefoil",
        include_str!("../tests/fixtures/trefoil.invariants.txt"),
        include_str!("../tests/fixtures/trefoil.seifert.json"),
    ),
    (
        "figure-eight",
        include_str!("../tests/fixtures/figure-eight.invariants.txt"),
        include_str!("../tests/fixtures/figure-eight.seifert.json"),
    ),
    (
        "nonalt6",
        include_str!("../tests/fixtures/nonalt6.invariants.txt"),
        include_str!("../tests/fixtures/nonalt6.seifert.json"),
    ),
];

pub fn golden_files() -> SuiteResult {
    let start = Instant::now();
    let mut t = Tally::default();
    for (n, inv, sei) in GOLDEN {
        let d = catalog::get(n).expect("catalog entry");
        t.check(invariants_output(&d, Format::Text).0 == inv, || format!("{n}: invariants"));
        t.check(seifert_check_output(&d, Format::Json).0 == sei, || format!("{n}: seifert-check"));
    }
    t.finish(11, name(11), start)
}
