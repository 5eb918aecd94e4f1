//! Link diagrams from admissible cd-labelled plane graphs.

use ribbonlink::map::{Cd, CombinatorialMap, Sign, Weight};
use ribbonlink::seifert::{reconstruct_link, reconstruction_round_trips};

fn main() {
    // A square 0-1-2-3 with the diagonal 0-2; edge k owns darts 2k, 2k + 1.
    let sigma = vec![8, 2, 1, 4, 9, 6, 5, 0, 7, 3];
    let square = CombinatorialMap::from_sigma(sigma, 0, None).unwrap();
    println!("{:?}", square.counts());
    let signs = [Sign::Plus, Sign::Plus, Sign::Minus, Sign::Plus, Sign::Minus];
    let t = square.with_weights(Some(signs.iter().map(|&s| Weight::signed(s)).collect())).unwrap();

    let (mut found, mut rejected) = (0, 0);
    for bits in 0u32..1 << 5 {
        let labels: Vec<Cd> = (0..5).map(|k| if bits >> k & 1 == 1 { Cd::C } else { Cd::D }).collect();
        match reconstruct_link(&t, &labels) {
            Ok(d) => {
                found += 1;
                let ok = reconstruction_round_trips(&t, &labels, &d);
                println!("{:?} -> {} ({} components), round trip {ok}", labels, d.to_pd(), d.component_count());
            }
            Err(_) => rejected += 1,
        }
    }
    println!("{found} admissible labelings, {rejected} rejected");
}
