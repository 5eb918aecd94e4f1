use std::collections::BTreeSet;

use proptest::prelude::*;
use ribbonlink::diagram::LinkDiagram;
use ribbonlink::map::CombinatorialMap;
use ribbonlink::random::{random_diagram, random_map, random_plane_map, rng};
use ribbonlink::seifert::{cd_labeling, reconstruct_link, reconstruction_round_trips};
use ribbonlink::states::{state_dual_set, state_ribbon_graph, tait_graph, SpliceState};

fn map_and_set() -> impl Strategy<Value = (CombinatorialMap, BTreeSet<usize>)> {
    (any::<u64>(), 0usize..=12, any::<u64>()).prop_map(|(seed, e, bits)| {
        let m = random_map(&mut rng(seed), e);
        let a = (0..e).filter(|k| bits >> k & 1 == 1).collect();
        (m, a)
    })
}

fn diagram() -> impl Strategy<Value = LinkDiagram> {
    (any::<u64>(), 1usize..=6).prop_map(|(seed, n)| random_diagram(&mut rng(seed), n))
}

proptest! {
    #[test]
    fn partial_dual_is_an_involution((m, a) in map_and_set()) {
        prop_assert!(m.partial_dual(&a).unwrap().partial_dual(&a).unwrap().same_labelled(&m));
    }

    #[test]
    fn dual_keeps_genus_and_swaps_v_p((m, _) in map_and_set()) {
        let (c, d) = (m.counts(), m.dual().counts());
        prop_assert_eq!(c.g, d.g);
        prop_assert_eq!(c.v, d.p);
        prop_assert_eq!(c.p, d.v);
    }

    #[test]
    fn json_round_trip((m, _) in map_and_set()) {
        let back = CombinatorialMap::from_json_str(&serde_json::to_string(&m.to_json()).unwrap()).unwrap();
        prop_assert!(back.same_labelled(&m));
    }

    #[test]
    fn every_state_graph_is_a_partial_dual(d in diagram(), bits in any::<u64>()) {
        let n = d.crossing_count();
        let s = SpliceState::from_bits(n, bits & ((1 << n) - 1));
        let (c1, _) = d.checkerboard();
        let pd = tait_graph(&d, &c1).partial_dual(&state_dual_set(&d, &s, &c1)).unwrap();
        prop_assert!(pd.same_labelled(&state_ribbon_graph(&d, &s)));
    }

    #[test]
    fn pd_text_round_trip(d in diagram()) {
        let again = LinkDiagram::parse_pd(&d.to_pd()).unwrap();
        prop_assert_eq!(again.to_pd(), d.to_pd());
    }

    #[test]
    fn diagrams_reconstruct_from_their_tait_graphs(d in diagram()) {
        for c in [d.checkerboard().0, d.checkerboard().1] {
            let t = tait_graph(&d, &c);
            let labels = cd_labeling(&d, &c);
            let r = reconstruct_link(&t, &labels).unwrap();
            prop_assert!(reconstruction_round_trips(&t, &labels, &r));
        }
    }

    #[test]
    fn seifert_graph_is_bipartite(d in diagram()) {
        prop_assert!(ribbonlink::states::seifert_data(&d).graph.is_bipartite());
    }

    #[test]
    fn plane_maps_are_plane(seed in any::<u64>(), e in 0usize..=16) {
        let m = random_plane_map(&mut rng(seed), e);
        prop_assert!(m.is_plane());
        prop_assert_eq!(m.num_edges(), e);
    }
}
