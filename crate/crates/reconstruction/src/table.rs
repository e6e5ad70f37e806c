//! Residual exclusions that need arguments beyond the generic filters.

use quiver_core::{is_isomorphic_or_opposite, Quiver};

use crate::Mode;

/// One excluded quiver, matched up to isomorphism and opposite.
#[derive(Clone, Copy, Debug)]
pub struct TableEntry {
    pub id: &'static str,
    pub n: usize,
    /// Catalog name of the reduced quiver.
    pub shadow: &'static str,
    /// 1-based `(source, target, multiplicity)`.
    pub arrows: &'static [(usize, usize, u8)],
    /// Applies only when periodicity of the algebra may be assumed.
    pub tsp4_only: bool,
    pub reason: &'static str,
}

impl TableEntry {
    pub fn quiver(&self) -> Quiver {
        let arrows: Vec<_> = self
            .arrows
            .iter()
            .map(|&(s, t, m)| (s - 1, t - 1, m))
            .collect();
        Quiver::from_arrows(self.n, &arrows).expect("static table entry")
    }

    pub fn applies(&self, mode: Mode) -> bool {
        mode == Mode::Tsp4 || !self.tsp4_only
    }
}

pub const CASE_TABLE: &[TableEntry] = &[
    TableEntry {
        id: "n5-q17-loopless",
        n: 5,
        shadow: "Q17",
        arrows: &[
            (1, 3, 1),
            (1, 4, 1),
            (1, 5, 1),
            (5, 2, 1),
            (2, 1, 2),
            (4, 2, 1),
            (3, 2, 1),
        ],
        tsp4_only: true,
        reason: "periodicity forces a loop at one of the three middle vertices",
    },
    TableEntry {
        id: "n5-q23-bridge-loopless",
        n: 5,
        shadow: "Q23",
        arrows: &[
            (1, 5, 1),
            (5, 4, 1),
            (2, 1, 1),
            (4, 2, 1),
            (4, 3, 1),
            (3, 1, 1),
            (1, 4, 1),
            (4, 1, 1),
        ],
        tsp4_only: true,
        reason: "periodicity forces a loop at the outlet vertex 5",
    },
    TableEntry {
        id: "n5-q23-square-cycle",
        n: 5,
        shadow: "Q23",
        arrows: &[
            (1, 5, 1),
            (5, 4, 1),
            (2, 1, 1),
            (4, 2, 1),
            (4, 3, 1),
            (3, 1, 1),
            (3, 5, 1),
            (5, 3, 1),
        ],
        tsp4_only: false,
        reason: "biserial with both non-regular vertices of type N, which gives a wild subcategory",
    },
];

/// The first applicable entry matching `q`.
pub fn table_match(q: &Quiver, mode: Mode) -> Option<&'static TableEntry> {
    CASE_TABLE.iter().find(|e| {
        e.n == q.n()
            && e.applies(mode)
            && is_isomorphic_or_opposite(q, &e.quiver()).unwrap_or(false)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn entries_are_connected_and_distinct() {
        for (k, e) in CASE_TABLE.iter().enumerate() {
            assert!(e.quiver().is_connected(), "{}", e.id);
            for f in &CASE_TABLE[k + 1..] {
                assert!(!is_isomorphic_or_opposite(&e.quiver(), &f.quiver()).unwrap());
            }
        }
    }

    #[test]
    fn periodicity_entries_are_skipped_in_gqt_mode() {
        let q17 = CASE_TABLE[0].quiver();
        assert!(table_match(&q17, Mode::Gqt).is_none());
        assert_eq!(
            table_match(&q17, Mode::Tsp4).map(|e| e.id),
            Some("n5-q17-loopless")
        );
    }
}
