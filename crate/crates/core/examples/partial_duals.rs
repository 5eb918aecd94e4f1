//! Partial duals of a small ribbon graph and the genus formula.

use std::collections::BTreeSet;

use ribbonlink::map::CombinatorialMap;

fn main() {
    // One vertex with two interlaced loops: a torus.
    let g = CombinatorialMap::from_sigma(vec![2, 3, 1, 0], 0, None).unwrap();
    let c = g.counts();
    println!("G: v={} e={} p={} g={}", c.v, c.e, c.p, c.g);

    for a in [vec![], vec![0], vec![1], vec![0, 1]] {
        let a: BTreeSet<usize> = a.into_iter().collect();
        let pd = g.partial_dual(&a).unwrap();
        let k = pd.counts();
        let predicted = (2 * c.k + c.e - g.boundary_count_without(&g.complement(&a)).unwrap()
            - g.boundary_count_without(&a).unwrap())
            / 2;
        println!("A={a:?}: v={} p={} g={} (formula {predicted})", k.v, k.p, k.g);
    }

    let all = g.partial_dual(&g.all_edges()).unwrap();
    println!("G^E equals G*: {}", all.same_labelled(&g.dual()));
    println!("{}", serde_json::to_string(&g.to_json()).unwrap());
}
