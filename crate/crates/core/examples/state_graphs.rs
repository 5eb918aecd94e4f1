//! Tait graphs and state ribbon graphs of the figure-eight knot.

use ribbonlink::catalog;
use ribbonlink::states::{canonical_states, state_circles, state_dual_set, state_ribbon_graph, tait_graph};

fn main() {
    let d = catalog::get("figure-eight").unwrap();
    println!("{d}");
    let (black, white) = d.checkerboard();
    for (name, c) in [("black", &black), ("white", &white)] {
        let t = tait_graph(&d, c);
        let signs: String = d.crossing_signs(c).iter().map(|s| s.tait.to_string()).collect();
        println!("tait graph on {name} regions: {:?}, signs {signs}", t.counts());
    }

    let st = canonical_states(&d, &black);
    let t = tait_graph(&d, &black);
    for (name, s) in [("all-A", &st.all_a), ("all-B", &st.all_b), ("seifert", &st.seifert)] {
        let g = state_ribbon_graph(&d, s);
        let a = state_dual_set(&d, s, &black);
        let same = t.partial_dual(&a).unwrap().same_labelled(&g);
        println!(
            "{name:<8} state {s}: {} circles, genus {}, partial dual of T over {a:?}: {same}",
            state_circles(&d, s).len(),
            g.genus()
        );
    }
}
