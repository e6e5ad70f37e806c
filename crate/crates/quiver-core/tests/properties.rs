use proptest::prelude::*;
use quiver_core::{
    canonical, canonical_form, find_pattern, for_each_permutation, io, is_isomorphic, ArrowRule,
    PatternSpec, Quiver,
};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_quiver(rng: &mut impl Rng, max_n: usize) -> Quiver {
    let n = rng.gen_range(1..=max_n);
    let mut q = Quiver::empty(n).unwrap();
    for i in 0..n {
        for j in 0..n {
            let bound = if i == j { 1 } else { 2 };
            if rng.gen_bool(0.35) {
                q.set_mult(i, j, rng.gen_range(1..=bound));
            }
        }
    }
    q
}

fn random_perm(rng: &mut impl Rng, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}

/// Direct search for a relabeling carrying `a` onto `b`.
fn iso_oracle(a: &Quiver, b: &Quiver) -> bool {
    if a.n() != b.n() {
        return false;
    }
    let mut found = false;
    for_each_permutation(a.n(), |p| {
        if !found && a.relabel(p) == *b {
            found = true;
        }
    });
    found
}

#[test]
fn canonical_form_is_orbit_constant() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..200 {
        let q = random_quiver(&mut rng, 6);
        let c = canonical(&q).unwrap();
        assert_eq!(canonical(&c).unwrap(), c);
        for _ in 0..5 {
            let p = random_perm(&mut rng, q.n());
            assert_eq!(canonical(&q.relabel(&p)).unwrap(), c);
        }
    }
}

#[test]
fn isomorphism_agrees_with_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut pool: Vec<Quiver> = (0..30).map(|_| random_quiver(&mut rng, 4)).collect();
    // Seed isomorphic pairs so the positive branch is exercised.
    for k in 0..20 {
        let base = pool[k].clone();
        let p = random_perm(&mut rng, base.n());
        pool.push(base.relabel(&p));
    }
    for a in &pool {
        for b in &pool {
            assert_eq!(is_isomorphic(a, b).unwrap(), iso_oracle(a, b));
        }
    }
}

#[test]
fn canonical_perm_maps_input_to_form() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..50 {
        let q = random_quiver(&mut rng, 6);
        let (c, perm) = canonical_form(&q).unwrap();
        assert_eq!(q.relabel(&perm), c);
    }
}

fn quiver_strategy() -> impl Strategy<Value = Quiver> {
    (1usize..=6).prop_flat_map(|n| {
        proptest::collection::vec(0u8..=2, n * n).prop_map(move |cells| {
            let mut q = Quiver::empty(n).unwrap();
            for i in 0..n {
                for j in 0..n {
                    let m = cells[i * n + j];
                    q.set_mult(i, j, if i == j { m.min(1) } else { m });
                }
            }
            q
        })
    })
}

proptest! {
    #[test]
    fn adjacency_is_skew(q in quiver_strategy()) {
        let a = q.signed_adjacency();
        for i in 0..q.n() {
            prop_assert_eq!(a[i][i], 0);
            for j in 0..q.n() {
                prop_assert_eq!(a[i][j], -a[j][i]);
            }
        }
    }

    #[test]
    fn reduced_is_two_acyclic_and_idempotent(q in quiver_strategy()) {
        let r = q.reduced();
        for i in 0..q.n() {
            prop_assert_eq!(r.mult(i, i), 0);
            for j in 0..q.n() {
                prop_assert_eq!(r.mult(i, j).min(r.mult(j, i)), 0);
            }
        }
        prop_assert_eq!(r.reduced(), r.clone());
        prop_assert_eq!(q.loop_free().reduced(), r);
    }

    #[test]
    fn degree_sums_match_arrow_count(q in quiver_strategy()) {
        let d = q.degrees_all();
        let ins: u32 = d.iter().map(|x| x.indeg).sum();
        let outs: u32 = d.iter().map(|x| x.outdeg).sum();
        prop_assert_eq!(ins, q.arrow_count());
        prop_assert_eq!(outs, q.arrow_count());
    }

    #[test]
    fn json_round_trips(q in quiver_strategy()) {
        let text = io::to_json(&q);
        prop_assert_eq!(io::from_json(&text).unwrap(), q.clone());
        prop_assert_eq!(io::to_json(&io::from_json(&text).unwrap()), text);
    }

    #[test]
    fn self_match_includes_identity(q in quiver_strategy()) {
        let spec = PatternSpec::new(q.clone(), ArrowRule::Exact);
        let id: Vec<usize> = (0..q.n()).collect();
        prop_assert!(find_pattern(&q, &spec).contains(&id));
    }

    #[test]
    fn opposite_is_involution(q in quiver_strategy()) {
        prop_assert_eq!(q.opposite().opposite(), q);
    }
}
