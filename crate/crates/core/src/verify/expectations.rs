//! Expected values, keyed by campaign. Campaigns compare against these and
//! report mismatches; they never adjust them.

use crate::graph::Graph;
use crate::io::catalog::{complete, path};

/// figure1: number of graphs with F = 2, and the largest order among them.
pub const FIGURE1_COUNT: usize = 15;
pub const FIGURE1_MAX_ORDER: usize = 6;

/// theorem21: lower bound on F for every graph of at least this order.
pub const THEOREM21_MIN_ORDER: usize = 7;
pub const THEOREM21_BOUND: usize = 3;

/// exceptions16: connected 6-vertex graphs without an extension-safe
/// stalled 3-set.
pub const EXCEPTION_ORDER: usize = 6;
pub const EXCEPTION_SET_SIZE: usize = 3;
pub const EXCEPTION_COUNT: usize = 16;
pub const CONNECTED_ORDER6_COUNT: usize = 112;

/// extension_argument: largest order the inductive extension reaches.
pub const EXTENSION_BOUND: usize = 8;

/// gap: claimed values of F(G) and F(H).
pub fn gap_expected_fg(n: usize) -> usize {
    n - 2
}

pub fn gap_expected_fh(n: usize) -> usize {
    n / 2 + 1
}

/// Graphs with F = 0.
pub fn f0_catalog() -> Vec<(&'static str, Graph)> {
    vec![
        ("K1", Graph::empty(1).expect("K1")),
        ("K2", complete(2).expect("K2")),
    ]
}

/// Graphs with F = 1.
pub fn f1_catalog() -> Vec<(&'static str, Graph)> {
    vec![
        ("2K1", Graph::empty(2).expect("2K1")),
        ("P3", path(3).expect("P3")),
        ("K3", complete(3).expect("K3")),
        ("P4", path(4).expect("P4")),
    ]
}

/// Listed exception graphs on vertices 1..=6, by their reference label.
pub const REFERENCE_EXCEPTIONS: [(u16, &[(usize, usize)]); 16] = [
    (
        54,
        &[
            (1, 2),
            (2, 3),
            (2, 4),
            (2, 5),
            (3, 4),
            (3, 5),
            (3, 6),
            (4, 5),
        ],
    ),
    (
        58,
        &[
            (1, 2),
            (2, 3),
            (2, 4),
            (2, 5),
            (2, 6),
            (3, 4),
            (4, 5),
            (5, 6),
        ],
    ),
    (
        59,
        &[
            (1, 2),
            (1, 5),
            (2, 3),
            (2, 5),
            (3, 4),
            (3, 5),
            (3, 6),
            (4, 5),
        ],
    ),
    (
        60,
        &[
            (1, 2),
            (1, 5),
            (2, 3),
            (2, 5),
            (3, 4),
            (3, 5),
            (4, 5),
            (4, 6),
        ],
    ),
    (
        76,
        &[(1, 2), (2, 3), (2, 4), (2, 5), (3, 4), (3, 5), (3, 6)],
    ),
    (
        77,
        &[(1, 2), (2, 3), (2, 4), (2, 5), (3, 4), (4, 5), (5, 6)],
    ),
    (
        80,
        &[(1, 2), (2, 4), (2, 5), (3, 4), (3, 5), (3, 6), (4, 5)],
    ),
    (
        85,
        &[(1, 2), (1, 3), (1, 4), (2, 5), (3, 4), (4, 5), (4, 6)],
    ),
    (
        86,
        &[(1, 2), (1, 3), (1, 5), (2, 3), (2, 6), (3, 4), (5, 6)],
    ),
    (
        87,
        &[(1, 2), (1, 3), (1, 5), (2, 3), (2, 6), (4, 6), (5, 6)],
    ),
    (96, &[(1, 2), (2, 3), (2, 5), (3, 4), (3, 5), (5, 6)]),
    (98, &[(1, 2), (2, 3), (2, 6), (3, 4), (3, 6), (4, 5)]),
    (102, &[(1, 2), (1, 4), (2, 3), (3, 4), (3, 5), (4, 6)]),
    (103, &[(1, 2), (2, 4), (2, 5), (3, 4), (3, 5), (3, 6)]),
    (105, &[(1, 3), (1, 5), (2, 3), (2, 6), (3, 4), (5, 6)]),
    (112, &[(1, 2), (2, 3), (3, 4), (4, 5), (5, 6)]),
];

pub fn reference_exceptions() -> Vec<(u16, Graph)> {
    REFERENCE_EXCEPTIONS
        .iter()
        .map(|&(label, edges)| {
            let e: Vec<_> = edges.iter().map(|&(u, v)| (u - 1, v - 1)).collect();
            (
                label,
                Graph::new(EXCEPTION_ORDER, &e).expect("reference graph"),
            )
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::canonical_form;
    use std::collections::HashSet;

    #[test]
    fn reference_graphs_are_distinct_and_connected() {
        let refs = reference_exceptions();
        assert_eq!(refs.len(), EXCEPTION_COUNT);
        let forms: HashSet<_> = refs.iter().map(|(_, g)| canonical_form(g)).collect();
        assert_eq!(forms.len(), EXCEPTION_COUNT);
        assert!(refs.iter().all(|(_, g)| g.is_connected()));
    }

    #[test]
    fn gap_claims() {
        assert_eq!(gap_expected_fg(8), 6);
        assert_eq!(gap_expected_fh(8), 5);
        assert_eq!(gap_expected_fh(9), 5);
    }
}
