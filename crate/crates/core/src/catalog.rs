//! Named diagrams used by the examples, the selftest and the golden files.

use crate::diagram::LinkDiagram;

pub const KINK: &str = "X(1,2,2,1)";
pub const HOPF: &str = "X(1,4,2,3) X(3,2,4,1)";
pub const TREFOIL: &str = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)";
pub const FIGURE_EIGHT: &str = "X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)";
/// Reduced six-crossing knot diagram with three Tait signs of each kind.
pub const NONALT6: &str = "X(1,10,2,11) X(6,9,7,10) X(3,9,4,8) X(4,12,5,11) X(2,7,3,8) X(5,12,6,1)";

pub const ENTRIES: [(&str, &str); 5] = [
    ("kink", KINK),
    ("hopf", HOPF),
    ("trefoil", TREFOIL),
    ("figure-eight", FIGURE_EIGHT),
    ("nonalt6", NONALT6),
];

pub fn get(name: &str) -> Option<LinkDiagram> {
    ENTRIES.iter().find(|(n, _)| *n == name).map(|(_, pd)| LinkDiagram::parse_pd(pd).expect("catalog entries parse"))
}

/// Every entry, parsed.
pub fn all() -> Vec<(&'static str, LinkDiagram)> {
    ENTRIES.iter().map(|&(n, pd)| (n, LinkDiagram::parse_pd(pd).expect("catalog entries parse"))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::states::tait_graph;

    #[test]
    fn entries_parse() {
        let all = all();
        assert_eq!(all.len(), 5);
        assert_eq!(get("trefoil").unwrap().crossing_count(), 3);
        assert!(get("unknot").is_none());
    }

    #[test]
    fn nonalt6_is_mixed() {
        let d = get("nonalt6").unwrap();
        assert_eq!(d.crossing_count(), 6);
        assert_eq!(d.component_count(), 1);
        for c in [d.checkerboard().0, d.checkerboard().1] {
            let plus = d.crossing_signs(&c).iter().filter(|s| s.tait.is_plus()).count();
            assert_eq!(plus, 3);
            let g = tait_graph(&d, &c).underlying_graph();
            assert!(g.edges().iter().all(|(a, b)| a != b));
        }
    }
}
