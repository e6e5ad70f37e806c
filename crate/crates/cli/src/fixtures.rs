//! Named quivers and shadow lists shipped with the tool.

use quiver_core::{io, Quiver};
use reconstruction::golden_quivers;
use serde_json::{json, Value};
use shadow_engine::{reference_shadows, shadow, Shadow};

pub const FIXTURE_NAMES: &[&str] = &[
    "markov3",
    "tri3",
    "q13",
    "q17",
    "golden-n3",
    "golden-n4",
    "golden-n5",
    "shadows-n3",
    "shadows-n4",
    "shadows-n5",
    "survivor-shadows-n5",
];

/// Catalog names of the ten five-vertex shadows that carry Gabriel quivers.
pub const SURVIVOR_SHADOWS_N5: [&str; 10] = [
    "Q4", "Q11", "Q13", "Q14", "Q16", "Q17", "Q23", "Q24", "Q25", "Q26",
];

#[derive(Clone, Debug)]
pub enum Fixture {
    Quiver(Quiver),
    Quivers {
        n: usize,
        entries: Vec<(String, Quiver)>,
    },
    Shadows {
        n: usize,
        entries: Vec<(String, Shadow)>,
    },
}

impl Fixture {
    pub fn to_json_value(&self) -> Value {
        match self {
            Fixture::Quiver(q) => io::to_json_value(q),
            Fixture::Quivers { n, entries } => json!({
                "n": n,
                "quivers": entries.iter().map(|(name, q)| json!({"name": name, "quiver": io::to_json_value(q)})).collect::<Vec<_>>(),
            }),
            Fixture::Shadows { n, entries } => json!({
                "n": n,
                "shadows": entries.iter().map(|(name, s)| json!({"name": name, "shadow": shadow::to_json_value(s)})).collect::<Vec<_>>(),
            }),
        }
    }
}

fn from_one_based(n: usize, arrows: &[(usize, usize, u8)]) -> Quiver {
    let a: Vec<_> = arrows.iter().map(|&(s, t, m)| (s - 1, t - 1, m)).collect();
    Quiver::from_arrows(n, &a).expect("static fixture")
}

fn golden(n: usize, name: &str) -> Quiver {
    golden_quivers(n)
        .iter()
        .find(|g| g.name == name)
        .expect("bundled reference quiver")
        .quiver
        .clone()
}

fn shadows(n: usize, keep: impl Fn(&str, bool) -> bool) -> Fixture {
    let entries = reference_shadows(n)
        .unwrap_or_default()
        .iter()
        .filter(|e| keep(&e.name, e.essential))
        .map(|e| (e.name.clone(), e.shadow.clone()))
        .collect();
    Fixture::Shadows { n, entries }
}

pub fn fixture(name: &str) -> Option<Fixture> {
    let f = match name {
        "markov3" => Fixture::Quiver(golden(3, "markov")),
        "tri3" => Fixture::Quiver(golden(3, "triangle")),
        "q13" => Fixture::Quiver(golden(5, "Q(13)")),
        // Vertices (y1, y2, x1, x2, e).
        "q17" => Fixture::Quiver(from_one_based(
            5,
            &[
                (2, 1, 1),
                (2, 3, 1),
                (4, 1, 1),
                (4, 3, 1),
                (1, 5, 1),
                (3, 5, 1),
                (5, 4, 1),
                (5, 2, 1),
                (5, 5, 1),
            ],
        )),
        "golden-n3" | "golden-n4" | "golden-n5" => {
            let n = name.as_bytes()[name.len() - 1] as usize - b'0' as usize;
            let entries = golden_quivers(n)
                .iter()
                .map(|g| (g.name.clone(), g.quiver.clone()))
                .collect();
            Fixture::Quivers { n, entries }
        }
        "shadows-n3" => shadows(3, |_, _| true),
        "shadows-n4" => shadows(4, |_, essential| essential),
        "shadows-n5" => shadows(5, |_, essential| essential),
        "survivor-shadows-n5" => shadows(5, |name, _| SURVIVOR_SHADOWS_N5.contains(&name)),
        _ => return None,
    };
    Some(f)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_name_resolves() {
        for name in FIXTURE_NAMES {
            assert!(fixture(name).is_some(), "{name}");
        }
        assert!(fixture("q99").is_none());
    }

    #[test]
    fn quiver_fixtures_round_trip() {
        for name in ["markov3", "tri3", "q13", "q17"] {
            let Some(Fixture::Quiver(q)) = fixture(name) else {
                panic!("{name}")
            };
            let text = io::to_json(&q);
            assert_eq!(io::from_json(&text).unwrap(), q);
            assert_eq!(io::to_json(&io::from_json(&text).unwrap()), text);
        }
    }

    #[test]
    fn shadow_lists_have_the_reference_sizes() {
        let size = |name| match fixture(name) {
            Some(Fixture::Shadows { entries, .. }) => entries.len(),
            _ => unreachable!(),
        };
        assert_eq!(size("shadows-n3"), 5);
        assert_eq!(size("shadows-n4"), 7);
        assert_eq!(size("shadows-n5"), 26);
        assert_eq!(size("survivor-shadows-n5"), 10);
    }

    #[test]
    fn q17_reduces_to_an_essential_shadow() {
        let Some(Fixture::Quiver(q)) = fixture("q17") else {
            unreachable!()
        };
        assert!(shadow_engine::is_essential(&Shadow::of_quiver(&q)).is_essential());
    }
}
