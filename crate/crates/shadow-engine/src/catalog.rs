//! Reference shadows for three, four and five vertices, stored as the
//! 2-acyclic quivers they come from.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use serde::Deserialize;

use crate::shadow::Shadow;

#[derive(Deserialize)]
struct RawEntry {
    name: String,
    arrows: Vec<[usize; 3]>,
    essential: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NamedShadow {
    pub name: String,
    pub shadow: Shadow,
    pub essential: bool,
}

fn load() -> BTreeMap<usize, Vec<NamedShadow>> {
    let raw: BTreeMap<usize, Vec<RawEntry>> =
        serde_json::from_str(include_str!("../data/shadows.json")).expect("bundled catalog parses");
    raw.into_iter()
        .map(|(n, entries)| {
            let list = entries
                .into_iter()
                .map(|e| {
                    let cells: Vec<_> = e
                        .arrows
                        .iter()
                        .map(|&[s, t, m]| (s - 1, t - 1, m as i8))
                        .collect();
                    let shadow =
                        Shadow::from_entries(n, &cells).expect("bundled catalog is well formed");
                    NamedShadow {
                        name: e.name,
                        shadow,
                        essential: e.essential,
                    }
                })
                .collect();
            (n, list)
        })
        .collect()
}

fn all() -> &'static BTreeMap<usize, Vec<NamedShadow>> {
    static CATALOG: OnceLock<BTreeMap<usize, Vec<NamedShadow>>> = OnceLock::new();
    CATALOG.get_or_init(load)
}

/// The reference list for `n` vertices, if one is bundled.
pub fn reference_shadows(n: usize) -> Option<&'static [NamedShadow]> {
    all().get(&n).map(Vec::as_slice)
}

pub fn reference_shadow(n: usize, name: &str) -> Option<&'static Shadow> {
    reference_shadows(n)?
        .iter()
        .find(|e| e.name == name)
        .map(|e| &e.shadow)
}
