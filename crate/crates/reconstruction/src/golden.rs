//! Transcribed reference classifications for three, four and five vertices.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use quiver_core::Quiver;
use serde::Deserialize;

#[derive(Deserialize)]
struct RawEntry {
    name: String,
    #[serde(default)]
    family: Option<String>,
    #[serde(default)]
    shadow: Option<String>,
    figure: usize,
    arrows: Vec<[usize; 3]>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GoldenQuiver {
    pub name: String,
    /// Loop-free family label, used at three vertices.
    pub family: Option<String>,
    /// Name of the reduced quiver in the shadow catalog.
    pub shadow: Option<String>,
    /// Position of the source figure in the reference list, 1-based.
    pub figure: usize,
    pub quiver: Quiver,
}

fn load() -> BTreeMap<usize, Vec<GoldenQuiver>> {
    let raw: BTreeMap<usize, Vec<RawEntry>> =
        serde_json::from_str(include_str!("../data/golden.json"))
            .expect("bundled golden data parses");
    raw.into_iter()
        .map(|(n, list)| {
            let list = list
                .into_iter()
                .map(|e| {
                    let arrows: Vec<_> = e
                        .arrows
                        .iter()
                        .map(|&[s, t, m]| (s - 1, t - 1, m as u8))
                        .collect();
                    let quiver = Quiver::from_arrows(n, &arrows).expect("golden quivers are tame");
                    GoldenQuiver {
                        name: e.name,
                        family: e.family,
                        shadow: e.shadow,
                        figure: e.figure,
                        quiver,
                    }
                })
                .collect();
            (n, list)
        })
        .collect()
}

/// Reference quivers for `n` vertices; empty outside 3..=5.
pub fn golden_quivers(n: usize) -> &'static [GoldenQuiver] {
    static DATA: OnceLock<BTreeMap<usize, Vec<GoldenQuiver>>> = OnceLock::new();
    DATA.get_or_init(load).get(&n).map_or(&[], Vec::as_slice)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        assert_eq!(golden_quivers(3).len(), 6);
        assert_eq!(golden_quivers(4).len(), 6);
        assert_eq!(golden_quivers(5).len(), 19);
        assert!(golden_quivers(6).is_empty());
    }

    #[test]
    fn golden_quivers_are_connected_with_at_most_one_loop_per_vertex() {
        for n in 3..=5 {
            for g in golden_quivers(n) {
                assert!(g.quiver.is_connected(), "{}", g.name);
                assert!((0..n).all(|v| g.quiver.mult(v, v) <= 1), "{}", g.name);
            }
        }
    }
}
