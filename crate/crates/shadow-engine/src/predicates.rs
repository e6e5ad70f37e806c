//! The shadow predicates.
//!
//! | name | condition |
//! |------|-----------|
//! | PS1  | `det A = 0` |
//! | PS2  | no nonzero row whose entries all share one sign |
//! | PS3  | some symmetric `C ≥ 0` with nonzero columns has `AC = 0` |
//! | T1   | `|a_ij| ≤ 2` |
//! | T2   | a row holding `2` has no other positive entry; dually for `-2` |
//! | T3   | at most four positive and four negative entries per row |
//! | PS4  | no row holds both `2` and `-2` (the Markov shadow is exempt) |
//! | PS5  | `a_ij = 2, a_jk = 1 ⇒ a_ki > 0` and `a_ij = -2, a_jk = -1 ⇒ a_ki < 0` |

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::canon::canonical_shadow;
use crate::exact::{self, rat, Feasibility};
use crate::shadow::Shadow;

/// Evidence attached to a failed check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// Offending row (0-based).
    Row(usize),
    /// Offending entry.
    Entry(usize, usize),
    /// Offending `(i, j, k)`.
    Triple(usize, usize, usize),
    /// Nonzero determinant.
    Determinant(BigInt),
    /// `y` with `yᵀM ≤ 0`, `yᵀb > 0` for the PS3 system `Mx = b`.
    Farkas(Vec<BigRational>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub pass: bool,
    pub witness: Option<Witness>,
}

impl Check {
    fn ok() -> Self {
        Check {
            pass: true,
            witness: None,
        }
    }

    fn fail(w: Witness) -> Self {
        Check {
            pass: false,
            witness: Some(w),
        }
    }

    fn from(first_failure: Option<Witness>) -> Self {
        first_failure.map_or_else(Check::ok, Check::fail)
    }
}

/// Symmetric nonnegative integer matrix `C` with nonzero columns and `AC = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CartanWitness {
    pub c: Vec<Vec<BigInt>>,
}

impl CartanWitness {
    /// Exact re-check of every defining property against `a`.
    pub fn verify(&self, a: &Shadow) -> bool {
        let n = a.n();
        if self.c.len() != n || self.c.iter().any(|r| r.len() != n) {
            return false;
        }
        let symmetric = (0..n).all(|i| (0..n).all(|j| self.c[i][j] == self.c[j][i]));
        let nonneg = self.c.iter().flatten().all(|x| !x.is_negative());
        let cols = (0..n).all(|j| (0..n).any(|i| self.c[i][j].is_positive()));
        let kernel = (0..n).all(|i| {
            (0..n).all(|j| {
                let s: BigInt = (0..n)
                    .map(|k| BigInt::from(a.get(i, k)) * &self.c[k][j])
                    .sum();
                s.is_zero()
            })
        });
        symmetric && nonneg && cols && kernel
    }
}

/// Verdicts for every predicate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShadowReport {
    pub ps1: Check,
    pub ps2: Check,
    pub ps3: Check,
    pub cartan: Option<CartanWitness>,
    pub t1: Check,
    pub t2: Check,
    pub t3: Check,
    /// Raw PS4 verdict, before the Markov exemption.
    pub ps4: Check,
    pub ps5: Check,
    pub markov_exception: bool,
}

impl ShadowReport {
    pub fn is_tame(&self) -> bool {
        self.ps1.pass
            && self.ps2.pass
            && self.ps3.pass
            && self.t1.pass
            && self.t2.pass
            && self.t3.pass
    }

    pub fn is_essential(&self) -> bool {
        self.is_tame() && (self.ps4.pass || self.markov_exception) && self.ps5.pass
    }
}

pub fn det_is_zero(a: &Shadow) -> bool {
    determinant(a).is_zero()
}

pub fn determinant(a: &Shadow) -> BigInt {
    exact::determinant(&a.rows())
}

fn row_signs(a: &Shadow, i: usize) -> (usize, usize, bool, bool) {
    let row = a.row(i);
    let pos = row.iter().filter(|&&x| x > 0).count();
    let neg = row.iter().filter(|&&x| x < 0).count();
    (pos, neg, row.contains(&2), row.contains(&-2))
}

pub fn ps2(a: &Shadow) -> Check {
    Check::from((0..a.n()).find_map(|i| {
        let (pos, neg, _, _) = row_signs(a, i);
        ((pos > 0) != (neg > 0)).then_some(Witness::Row(i))
    }))
}

pub fn t1(a: &Shadow) -> Check {
    let n = a.n();
    Check::from(
        (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .find_map(|(i, j)| (a.get(i, j).abs() > 2).then_some(Witness::Entry(i, j))),
    )
}

pub fn t2(a: &Shadow) -> Check {
    Check::from((0..a.n()).find_map(|i| {
        let (pos, neg, p2, m2) = row_signs(a, i);
        ((p2 && pos > 1) || (m2 && neg > 1)).then_some(Witness::Row(i))
    }))
}

pub fn t3(a: &Shadow) -> Check {
    Check::from((0..a.n()).find_map(|i| {
        let (pos, neg, _, _) = row_signs(a, i);
        (pos > 4 || neg > 4).then_some(Witness::Row(i))
    }))
}

pub fn ps4(a: &Shadow) -> Check {
    Check::from((0..a.n()).find_map(|i| {
        let (_, _, p2, m2) = row_signs(a, i);
        (p2 && m2).then_some(Witness::Row(i))
    }))
}

pub fn ps5(a: &Shadow) -> Check {
    let n = a.n();
    for i in 0..n {
        for j in 0..n {
            let aij = a.get(i, j);
            if aij.abs() != 2 {
                continue;
            }
            let s = aij.signum();
            for k in 0..n {
                if a.get(j, k) == s && a.get(k, i) * s <= 0 {
                    return Check::fail(Witness::Triple(i, j, k));
                }
            }
        }
    }
    Check::ok()
}

/// The double-arrow 3-cycle `1 ⇉ 3 ⇉ 2 ⇉ 1`.
pub fn markov_shadow() -> Shadow {
    Shadow::from_entries(3, &[(0, 2, 2), (1, 0, 2), (2, 1, 2)]).expect("static shadow")
}

pub fn is_markov(a: &Shadow) -> bool {
    static CANON: OnceLock<Shadow> = OnceLock::new();
    let m = CANON.get_or_init(|| canonical_shadow(&markov_shadow()).expect("3 vertices"));
    a.n() == 3 && canonical_shadow(a).is_ok_and(|c| c == *m)
}

fn var_index(n: usize, i: usize, j: usize) -> usize {
    let (i, j) = if i <= j { (i, j) } else { (j, i) };
    // Row-major enumeration of the upper triangle including the diagonal.
    i * n - i * (i + 1) / 2 + j
}

/// The PS3 system `Mx = b, x ≥ 0` in the variables `c_ij` (`i ≤ j`) followed
/// by one surplus per column.
pub fn ps3_system(a: &Shadow) -> (Vec<Vec<BigRational>>, Vec<BigRational>) {
    let n = a.n();
    let nc = n * (n + 1) / 2;
    let nv = nc + n;
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for i in 0..n {
        if a.row(i).iter().all(|&x| x == 0) {
            continue;
        }
        for j in 0..n {
            let mut row = vec![0i64; nv];
            for k in 0..n {
                row[var_index(n, k, j)] += i64::from(a.get(i, k));
            }
            rows.push(row.into_iter().map(rat).collect());
            rhs.push(BigRational::zero());
        }
    }
    for j in 0..n {
        let mut row = vec![BigRational::zero(); nv];
        for i in 0..n {
            row[var_index(n, i, j)] = BigRational::one();
        }
        row[nc + j] = rat(-1);
        rows.push(row);
        rhs.push(BigRational::one());
    }
    (rows, rhs)
}

/// Decides PS3 exactly; the error value is a Farkas certificate.
pub fn ps3_decide(a: &Shadow) -> Result<CartanWitness, Vec<BigRational>> {
    let n = a.n();
    let (m, b) = ps3_system(a);
    match exact::feasible(&m, &b) {
        Feasibility::Feasible(x) => {
            let scale = x.iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
            let mut c = vec![vec![BigInt::zero(); n]; n];
            for i in 0..n {
                for j in 0..n {
                    let v = &x[var_index(n, i, j)] * BigRational::from_integer(scale.clone());
                    c[i][j] = v.to_integer();
                }
            }
            Ok(CartanWitness { c })
        }
        Feasibility::Infeasible(y) => Err(y),
    }
}

pub fn ps3_feasible(a: &Shadow) -> Option<CartanWitness> {
    ps3_decide(a).ok()
}

/// All verdicts.
pub fn report(a: &Shadow) -> ShadowReport {
    let det = determinant(a);
    let ps1 = if det.is_zero() {
        Check::ok()
    } else {
        Check::fail(Witness::Determinant(det))
    };
    let (ps3, cartan) = match ps3_decide(a) {
        Ok(c) => (Check::ok(), Some(c)),
        Err(y) => (Check::fail(Witness::Farkas(y)), None),
    };
    ShadowReport {
        ps1,
        ps2: ps2(a),
        ps3,
        cartan,
        t1: t1(a),
        t2: t2(a),
        t3: t3(a),
        ps4: ps4(a),
        ps5: ps5(a),
        markov_exception: is_markov(a),
    }
}

pub fn is_tame_shadow(a: &Shadow) -> ShadowReport {
    report(a)
}

pub fn is_essential(a: &Shadow) -> ShadowReport {
    report(a)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn markov_is_exempt_from_ps4() {
        let m = markov_shadow();
        let r = report(&m);
        assert!(!r.ps4.pass);
        assert!(r.markov_exception);
        assert!(r.is_essential());
        let ones = vec![vec![BigInt::one(); 3]; 3];
        assert!(CartanWitness { c: ones }.verify(&m));
    }

    #[test]
    fn example_ps5_and_ps3() {
        // a_13 = 1, a_21 = 1, a_32 = 2 (1-based)
        let s = Shadow::from_entries(3, &[(0, 2, 1), (1, 0, 1), (2, 1, 2)]).unwrap();
        let r = report(&s);
        assert!(r.ps5.pass);
        assert!(r.is_essential());
        let w = r.cartan.unwrap();
        assert!(w.verify(&s));
        // The kernel is spanned by (2,1,1), so the witness is a multiple of v vᵀ.
        let v = [2, 1, 1];
        let k = w.c[0][0].clone() / BigInt::from(4);
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(w.c[i][j], &k * BigInt::from(v[i] * v[j]));
            }
        }
    }

    #[test]
    fn s4_is_tame_not_essential() {
        // a_13 = 2, a_32 = 2, a_21 = 1
        let s = Shadow::from_entries(3, &[(0, 2, 2), (2, 1, 2), (1, 0, 1)]).unwrap();
        let r = report(&s);
        assert!(r.is_tame());
        assert!(!r.ps4.pass && !r.markov_exception);
        assert!(!r.is_essential());
    }

    #[test]
    fn single_arrow_has_farkas_certificate() {
        let s = Shadow::from_entries(3, &[(0, 1, 1)]).unwrap();
        let (m, b) = ps3_system(&s);
        match ps3_decide(&s) {
            Err(y) => assert!(exact::verify(&m, &b, &Feasibility::Infeasible(y))),
            Ok(c) => panic!("unexpected witness {c:?}"),
        }
    }

    #[test]
    fn zero_matrix_is_essential() {
        for n in 1..=4 {
            let r = report(&Shadow::zero(n).unwrap());
            assert!(r.is_essential());
        }
    }

    #[test]
    fn four_cycle_determinant() {
        let s = Shadow::from_entries(4, &[(0, 3, 1), (3, 2, 1), (2, 1, 1), (1, 0, 1)]).unwrap();
        assert!(det_is_zero(&s));
        assert!(!det_is_zero(
            &Shadow::from_entries(2, &[(0, 1, 1)]).unwrap()
        ));
    }
}
