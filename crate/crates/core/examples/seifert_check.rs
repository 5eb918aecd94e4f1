//! The Seifert graph of a diagram recovered from its cd-labelled Tait graph.

use ribbonlink::catalog;
use ribbonlink::seifert::{build_phi, cd_labeling, cd_string, labelings_over_orientations, verify_seifert_characterization};
use ribbonlink::states::{seifert_data, tait_graph};

fn main() {
    for name in ["hopf", "figure-eight", "nonalt6"] {
        let d = catalog::get(name).unwrap();
        let (c1, _) = d.checkerboard();
        let t = tait_graph(&d, &c1);
        let labels = cd_labeling(&d, &c1);
        let phi = build_phi(&t, &labels).unwrap();
        let s = seifert_data(&d);
        println!(
            "{name}: labels {}, {} regions, {} seifert circles, {} labelings over orientations",
            cd_string(&labels),
            phi.region_count(),
            s.circle_count,
            labelings_over_orientations(&d, &c1).len()
        );
        let report = verify_seifert_characterization(&d, &c1);
        for c in &report.checks {
            println!("  {:<30}{}", c.name, c.pass);
        }
    }
}
