//! Exhaustive small plane maps and seeded random diagrams.

use ribbonlink::random::{enumerate_plane_maps, random_diagram, rng};
use ribbonlink::verify;

fn main() {
    let maps = enumerate_plane_maps(5);
    for e in 1..=5 {
        println!("{} plane maps with {e} edges", maps.iter().filter(|m| m.num_edges() == e).count());
    }
    let mut r = rng(42);
    for n in [3, 5, 8] {
        let d = random_diagram(&mut r, n);
        println!("{n} crossings, {} components: {}", d.component_count(), d.to_pd());
    }
    let s = verify::seifert_characterisation();
    println!("{}: {} cases, pass {}", s.name, s.cases, s.pass);
}
