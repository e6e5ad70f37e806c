use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use shadow_engine::predicates::{determinant, ps3_system};
use shadow_engine::{canonical_shadow, exact, is_canonical, ps3_decide, Shadow};

fn random_shadow(rng: &mut impl Rng, n: usize, bound: i8) -> Shadow {
    let mut s = Shadow::zero(n).unwrap();
    for j in 1..n {
        for i in 0..j {
            s.set(i, j, rng.gen_range(-bound..=bound));
        }
    }
    s
}

/// Pfaffian by expansion along the first row.
fn pfaffian(a: &[Vec<i64>]) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::from(1);
    }
    let mut total = BigInt::from(0);
    for j in 1..n {
        if a[0][j] == 0 {
            continue;
        }
        let keep: Vec<usize> = (1..n).filter(|&k| k != j).collect();
        let minor: Vec<Vec<i64>> = keep
            .iter()
            .map(|&r| keep.iter().map(|&c| a[r][c]).collect())
            .collect();
        let term = BigInt::from(a[0][j]) * pfaffian(&minor);
        if j % 2 == 1 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

#[test]
fn determinant_vanishes_in_odd_size_and_is_a_square_in_even_size() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for _ in 0..300 {
        let n = rng.gen_range(1..=8);
        let s = random_shadow(&mut rng, n, 3);
        let d = determinant(&s);
        if n % 2 == 1 {
            assert_eq!(d, BigInt::from(0));
        } else {
            let p = pfaffian(&s.rows());
            assert_eq!(d, &p * &p);
        }
    }
}

#[test]
fn canonical_form_is_idempotent_and_orbit_constant() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for _ in 0..200 {
        let n = rng.gen_range(2..=6);
        let s = random_shadow(&mut rng, n, 2);
        let c = canonical_shadow(&s).unwrap();
        assert_eq!(canonical_shadow(&c).unwrap(), c);
        assert!(is_canonical(&c));
        let mut p: Vec<usize> = (0..n).collect();
        p.shuffle(&mut rng);
        let t = if rng.gen_bool(0.5) {
            s.relabel(&p)
        } else {
            s.relabel(&p).negated()
        };
        assert_eq!(canonical_shadow(&t).unwrap(), c);
    }
}

/// Search over symmetric `C` with entries in `0..=4`.
fn ps3_oracle(a: &Shadow) -> bool {
    let n = 3;
    let idx = [(0, 0), (0, 1), (0, 2), (1, 1), (1, 2), (2, 2)];
    let mut vals = [0i64; 6];
    loop {
        let mut c = [[0i64; 3]; 3];
        for (k, &(i, j)) in idx.iter().enumerate() {
            c[i][j] = vals[k];
            c[j][i] = vals[k];
        }
        let cols = (0..n).all(|j| (0..n).any(|i| c[i][j] > 0));
        let kernel = (0..n).all(|i| {
            (0..n).all(|j| {
                (0..n)
                    .map(|k| i64::from(a.get(i, k)) * c[k][j])
                    .sum::<i64>()
                    == 0
            })
        });
        if cols && kernel {
            return true;
        }
        let mut k = 0;
        loop {
            if k == 6 {
                return false;
            }
            vals[k] += 1;
            if vals[k] <= 4 {
                break;
            }
            vals[k] = 0;
            k += 1;
        }
    }
}

#[test]
fn ps3_agrees_with_brute_force_on_all_small_matrices() {
    let mut positives = 0;
    for x in -2i8..=2 {
        for y in -2i8..=2 {
            for z in -2i8..=2 {
                let s = Shadow::from_entries(3, &[(0, 1, x), (0, 2, y), (1, 2, z)]).unwrap();
                let expected = ps3_oracle(&s);
                match ps3_decide(&s) {
                    Ok(w) => {
                        assert!(expected, "{s:?}");
                        assert!(w.verify(&s));
                        positives += 1;
                    }
                    Err(y) => {
                        assert!(!expected, "{s:?}");
                        let (m, b) = ps3_system(&s);
                        assert!(exact::verify(&m, &b, &exact::Feasibility::Infeasible(y)));
                    }
                }
            }
        }
    }
    assert!(positives > 0);
}
