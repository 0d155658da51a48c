//! Hand-transcribed figure fixtures.
//!
//! Coordinates are `(row, col, val)` with row 1 at the top and column 1 at
//! the left.

use crate::diagram::Diagram;
use crate::filling::Filling;

fn filling(n: usize, entries: &[(u32, usize, u32)]) -> Filling {
    let mut columns = vec![Vec::new(); n];
    for &(row, col, _) in entries {
        columns[col - 1].push(row);
    }
    let diagram = Diagram::new(n, columns).expect("fixture diagram");
    Filling::from_entries(diagram, entries).expect("fixture filling")
}

/// `({1}, ∅, {1,2,3}, {2,3})` in the 4×4 grid; not a skyline diagram.
pub fn fig1_diagram() -> Diagram {
    Diagram::new(4, vec![vec![1], vec![], vec![1, 2, 3], vec![2, 3]]).expect("fixture diagram")
}

/// The 5×5 diagram `({3,4,5}, {2,3,4}, {2,4,5}, {4,5}, {1,3,4})` carrying the
/// unsorted filling of the column-sorting example.
pub fn fig3a() -> Filling {
    filling(
        5,
        &[
            (3, 1, 2), (4, 1, 1), (5, 1, 4),
            (2, 2, 1), (3, 2, 3), (4, 2, 2),
            (2, 3, 1), (4, 3, 2), (5, 3, 4),
            (4, 4, 4), (5, 4, 2),
            (1, 5, 1), (3, 5, 3), (4, 5, 2),
        ],
    )
}

/// Columns of [`fig3a`] sorted increasingly downward.
pub fn fig3b() -> Filling {
    filling(
        5,
        &[
            (3, 1, 1), (4, 1, 2), (5, 1, 4),
            (2, 2, 1), (3, 2, 2), (4, 2, 3),
            (2, 3, 1), (4, 3, 2), (5, 3, 4),
            (4, 4, 2), (5, 4, 4),
            (1, 5, 1), (3, 5, 2), (4, 5, 3),
        ],
    )
}

/// Optimization of [`fig3a`].
pub fn fig4_optimized() -> Filling {
    filling(
        5,
        &[
            (3, 1, 2), (4, 1, 4), (5, 1, 1),
            (2, 2, 2), (3, 2, 3), (4, 2, 1),
            (2, 3, 2), (4, 3, 4), (5, 3, 1),
            (4, 4, 4), (5, 4, 2),
            (1, 5, 1), (3, 5, 3), (4, 5, 2),
        ],
    )
}

// Raise example: skyline diagram of α = (0,4,1,0,2,6,1,3), 8×8 grid.

pub fn fig5_input() -> Filling {
    filling(
        8,
        &[
            (2, 1, 1), (3, 1, 3), (5, 1, 2), (6, 1, 5), (7, 1, 4), (8, 1, 6),
            (2, 2, 2), (5, 2, 5), (6, 2, 6), (8, 2, 7),
            (2, 3, 2), (6, 3, 5), (8, 3, 6),
            (2, 4, 2), (6, 4, 6),
            (6, 5, 3),
            (6, 6, 3),
        ],
    )
}

pub fn fig5_optimized() -> Filling {
    filling(
        8,
        &[
            (2, 1, 2), (3, 1, 3), (5, 1, 5), (6, 1, 6), (7, 1, 4), (8, 1, 1),
            (2, 2, 2), (5, 2, 5), (6, 2, 6), (8, 2, 7),
            (2, 3, 2), (6, 3, 6), (8, 3, 5),
            (2, 4, 2), (6, 4, 6),
            (6, 5, 3),
            (6, 6, 3),
        ],
    )
}

/// Box (6,5) raised from 3 to 6.
pub fn fig5_output() -> Filling {
    filling(
        8,
        &[
            (2, 1, 2), (3, 1, 3), (5, 1, 5), (6, 1, 6), (7, 1, 4), (8, 1, 1),
            (2, 2, 2), (5, 2, 5), (6, 2, 6), (8, 2, 7),
            (2, 3, 2), (6, 3, 6), (8, 3, 5),
            (2, 4, 2), (6, 4, 6),
            (6, 5, 6),
            (6, 6, 3),
        ],
    )
}

// Exchange example: skyline diagram of α = (0,4,2,0,7,5,1,8), 8×8 grid.
//
// In the optimized filling below the value 3 occurs 5 times and 5 occurs 6
// times, so the case rule (β_3 ≤ β_5) selects the raise rewrite even though
// the example illustrates the exchange rewrite with i = 3, j = 5.

pub fn fig6_input() -> Filling {
    filling(
        8,
        &[
            (2, 1, 1), (3, 1, 2), (5, 1, 5), (6, 1, 4), (7, 1, 6), (8, 1, 3),
            (2, 2, 2), (3, 2, 3), (5, 2, 4), (6, 2, 6), (8, 2, 5),
            (2, 3, 2), (5, 3, 1), (6, 3, 5), (8, 3, 7),
            (2, 4, 2), (5, 4, 3), (6, 4, 6), (8, 4, 4),
            (5, 5, 2), (6, 5, 6), (8, 5, 5),
            (5, 6, 2), (8, 6, 3),
            (5, 7, 3), (8, 7, 5),
            (8, 8, 5),
        ],
    )
}

pub fn fig6_optimized() -> Filling {
    filling(
        8,
        &[
            (2, 1, 2), (3, 1, 3), (5, 1, 5), (6, 1, 6), (7, 1, 4), (8, 1, 1),
            (2, 2, 2), (3, 2, 3), (5, 2, 5), (6, 2, 6), (8, 2, 4),
            (2, 3, 2), (5, 3, 5), (6, 3, 1), (8, 3, 7),
            (2, 4, 2), (5, 4, 3), (6, 4, 6), (8, 4, 4),
            (5, 5, 5), (6, 5, 6), (8, 5, 2),
            (5, 6, 2), (8, 6, 3),
            (5, 7, 5), (8, 7, 3),
            (8, 8, 5),
        ],
    )
}

/// 3 and 5 exchanged in the columns holding exactly one of them (3, 4, 5, 6, 8).
pub fn fig6_output() -> Filling {
    filling(
        8,
        &[
            (2, 1, 2), (3, 1, 3), (5, 1, 5), (6, 1, 6), (7, 1, 4), (8, 1, 1),
            (2, 2, 2), (3, 2, 3), (5, 2, 5), (6, 2, 6), (8, 2, 4),
            (2, 3, 2), (5, 3, 3), (6, 3, 1), (8, 3, 7),
            (2, 4, 2), (5, 4, 5), (6, 4, 6), (8, 4, 4),
            (5, 5, 3), (6, 5, 6), (8, 5, 2),
            (5, 6, 2), (8, 6, 5),
            (5, 7, 5), (8, 7, 3),
            (8, 8, 3),
        ],
    )
}
