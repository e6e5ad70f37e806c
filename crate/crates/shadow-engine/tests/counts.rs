use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use shadow_engine::{
    canonical_shadow, enumerate, enumerate_with, reference_shadows, EnumerateOptions, Mode, Shadow,
};

fn canonical_set<'a>(it: impl IntoIterator<Item = &'a Shadow>) -> BTreeSet<Shadow> {
    it.into_iter()
        .map(|s| canonical_shadow(s).unwrap())
        .collect()
}

fn timed(n: usize, mode: Mode) -> (Vec<Shadow>, Duration) {
    let t = Instant::now();
    let v = enumerate(n, mode).unwrap();
    (v, t.elapsed())
}

#[test]
fn three_vertices() {
    let (basic, t) = timed(3, Mode::BasicTame);
    let (ess, _) = timed(3, Mode::Essential);
    assert_eq!((basic.len(), ess.len()), (5, 4));
    assert!(t < Duration::from_secs(1));
}

#[test]
fn four_vertices() {
    let (basic, t) = timed(4, Mode::BasicTame);
    let (ess, _) = timed(4, Mode::Essential);
    assert_eq!((basic.len(), ess.len()), (12, 7));
    assert!(t < Duration::from_secs(10));
}

#[test]
fn five_vertices_essential() {
    let (ess, t) = timed(5, Mode::Essential);
    assert_eq!(ess.len(), 26);
    assert!(t < Duration::from_secs(300));
}

#[test]
fn output_is_canonical_and_distinct() {
    for n in 3..=5 {
        let v = enumerate(n, Mode::BasicTame).unwrap();
        let set = canonical_set(&v);
        assert_eq!(set.len(), v.len());
        assert!(v.iter().all(|s| set.contains(s)));
    }
}

#[test]
fn matches_reference_lists() {
    for n in 3..=5 {
        let refs = reference_shadows(n).unwrap();
        let essential_ref = canonical_set(refs.iter().filter(|e| e.essential).map(|e| &e.shadow));
        let ess = enumerate(n, Mode::Essential).unwrap();
        assert_eq!(canonical_set(&ess), essential_ref, "essential, n = {n}");
        if n <= 4 {
            let basic = enumerate(n, Mode::BasicTame).unwrap();
            assert_eq!(
                canonical_set(&basic),
                canonical_set(refs.iter().map(|e| &e.shadow)),
                "basic, n = {n}"
            );
        }
    }
}

#[test]
fn thread_count_does_not_change_output() {
    let single = enumerate_with(
        5,
        &EnumerateOptions {
            mode: Mode::BasicTame,
            threads: Some(1),
        },
    )
    .unwrap();
    for t in [2, 8] {
        let multi = enumerate_with(
            5,
            &EnumerateOptions {
                mode: Mode::BasicTame,
                threads: Some(t),
            },
        )
        .unwrap();
        assert_eq!(single, multi);
    }
}
