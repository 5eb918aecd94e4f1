//! Parallels of the trefoil: Tait graph counts and the genus of state graphs.

use ribbonlink::catalog;
use ribbonlink::parallels::{counts_csv, parallel_genus_report, parallel_tait, turaev_upper_bound, verify_overlay_recurrence};
use ribbonlink::states::{tait_graph, SpliceState};

fn main() {
    let d = catalog::get("trefoil").unwrap();
    let (c1, _) = d.checkerboard();
    let t = tait_graph(&d, &c1);
    let rows: Vec<_> = (1..=5).map(|r| parallel_tait(&d, &c1, r).unwrap().counts).collect();
    print!("{}", counts_csv(&t, &rows));
    println!("T(D_2) is the overlay of T and T*: {}", verify_overlay_recurrence(&d, &c1).unwrap());

    let all_a = SpliceState::uniform(3, ribbonlink::states::Splice::A);
    let rep = parallel_genus_report(&d, &c1, &all_a, 3).unwrap();
    for x in &rep.records {
        println!(
            "D_{}: {} crossings, genus {} (recurrence {}, iterated {}, printed closed form {})",
            x.r + 1,
            x.crossings,
            x.oracle_genus,
            x.ca4_value,
            x.ca4_iterated,
            x.ca1_value
        );
    }
    println!("closed form matching the direct genus: {}", rep.closed_form);
    for r in 0..=3 {
        println!("turaev genus bound from this diagram, r={r}: {}", turaev_upper_bound(&d, r));
    }
}
