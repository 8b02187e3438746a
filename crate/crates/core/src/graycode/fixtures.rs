//! Hand-written Gray codes used as reference listings.

use super::CyclicGrayCode;
use crate::coloring::Coloring;
use crate::graph::families;

/// A Hamiltonian cycle through the 2-localized 3-coloring graph of the
/// 4-cycle, vertices in cyclic order.
pub const C4_THREE_COLORS: [&str; 18] = [
    "1312", "1212", "1232", "1213", "1313", "1323", "2123", "2323", "2313", "2321", "2121", "2131", "3231",
    "3131", "3121", "3132", "3232", "3212",
];

pub fn c4_fixture() -> CyclicGrayCode {
    CyclicGrayCode {
        host: families::cycle(4).expect("4-cycle"),
        k: 3,
        j: 2,
        sequence: C4_THREE_COLORS
            .iter()
            .map(|s| Coloring::parse(s).expect("fixture entries parse"))
            .collect(),
    }
}
