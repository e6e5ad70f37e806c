//! The linear system satisfied by dimension vectors of projective modules.
//!
//! Each vertex gets a positive scalar symbol `p_i`. Every vertex balances
//! incoming against outgoing arrows, `Σ_{j→i} p_j = Σ_{i→j} p_j`, and the
//! common value `ĥ_i` must differ from `p_i`.

use num_rational::BigRational;
use num_traits::{One, Zero};
use quiver_core::Quiver;
use serde::Serialize;
use shadow_engine::exact::{self, Feasibility};

/// Balance rows `r_i = Σ_{j→i} e_j − Σ_{i→j} e_j`; loops cancel.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimensionSystem {
    pub rows: Vec<Vec<i64>>,
}

impl DimensionSystem {
    pub fn of(q: &Quiver) -> Self {
        let n = q.n();
        let rows = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| i64::from(q.mult(j, i)) - i64::from(q.mult(i, j)))
                    .collect()
            })
            .collect();
        DimensionSystem { rows }
    }

    /// `ĥ_i` as a coefficient vector: sources of arrows into `i`, loops included.
    pub fn incoming(q: &Quiver, i: usize) -> Vec<i64> {
        (0..q.n()).map(|j| i64::from(q.mult(j, i))).collect()
    }

    fn rational_rows(&self) -> Vec<Vec<BigRational>> {
        self.rows
            .iter()
            .map(|r| r.iter().map(|&x| exact::rat(x)).collect())
            .collect()
    }

    /// Vertices `i` for which the balance equations force `ĥ_i = p_i`.
    pub fn forced_equalities(&self, q: &Quiver) -> Vec<usize> {
        let rows = self.rational_rows();
        (0..q.n())
            .filter(|&i| {
                let mut v: Vec<BigRational> =
                    Self::incoming(q, i).into_iter().map(exact::rat).collect();
                v[i] -= BigRational::one();
                v.iter().all(Zero::is_zero) || exact::in_row_space(&rows, &v)
            })
            .collect()
    }

    /// A solution with every `p_i ≥ 1`, if one exists.
    pub fn positive_solution(&self) -> Option<Vec<BigRational>> {
        let rows = self.rational_rows();
        // p = 1 + x with x ≥ 0 turns R p = 0 into R x = −R·1.
        let rhs: Vec<BigRational> = rows
            .iter()
            .map(|r| -r.iter().cloned().sum::<BigRational>())
            .collect();
        match exact::feasible(&rows, &rhs) {
            Feasibility::Feasible(x) => {
                Some(x.into_iter().map(|v| v + BigRational::one()).collect())
            }
            Feasibility::Infeasible(_) => None,
        }
    }
}

/// Why the dimension system rules a quiver out.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum DimensionObstruction {
    /// `ĥ_v = p_v` is implied (vertex 1-based).
    ForcedEquality { vertex: usize },
    /// No strictly positive solution.
    NoPositiveSolution,
}

/// The first obstruction found, or `None` if the system is consistent.
pub fn dimension_obstruction(q: &Quiver) -> Option<DimensionObstruction> {
    let sys = DimensionSystem::of(q);
    if let Some(&v) = sys.forced_equalities(q).first() {
        return Some(DimensionObstruction::ForcedEquality { vertex: v + 1 });
    }
    if sys.positive_solution().is_none() {
        return Some(DimensionObstruction::NoPositiveSolution);
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle_with_loops(loops: &[usize]) -> Quiver {
        let mut q = Quiver::from_arrows(3, &[(0, 1, 1), (1, 2, 1), (2, 0, 1)]).unwrap();
        for &v in loops {
            q.add_arrows(v, v, 1);
        }
        q
    }

    #[test]
    fn rows_sum_to_zero() {
        let q = triangle_with_loops(&[0]);
        let sys = DimensionSystem::of(&q);
        for j in 0..3 {
            assert_eq!(sys.rows.iter().map(|r| r[j]).sum::<i64>(), 0);
        }
    }

    #[test]
    fn two_loops_on_a_triangle_force_an_equality() {
        let q = triangle_with_loops(&[0, 1]);
        assert_eq!(
            dimension_obstruction(&q),
            Some(DimensionObstruction::ForcedEquality { vertex: 3 })
        );
    }

    #[test]
    fn three_loops_on_a_triangle_are_consistent() {
        assert_eq!(
            dimension_obstruction(&triangle_with_loops(&[0, 1, 2])),
            None
        );
    }

    #[test]
    fn one_loop_short_of_q6_is_excluded() {
        let q = Quiver::from_arrows(
            4,
            &[
                (3, 2, 1),
                (2, 0, 1),
                (0, 3, 1),
                (3, 1, 1),
                (1, 0, 1),
                (3, 3, 1),
            ],
        )
        .unwrap();
        assert_eq!(
            dimension_obstruction(&q),
            Some(DimensionObstruction::ForcedEquality { vertex: 1 })
        );
    }

    #[test]
    fn positive_solutions_satisfy_the_balance() {
        let q = Quiver::from_arrows(
            4,
            &[
                (3, 2, 1),
                (2, 0, 1),
                (0, 3, 1),
                (3, 1, 1),
                (1, 0, 1),
                (3, 3, 1),
                (0, 0, 1),
            ],
        )
        .unwrap();
        let sys = DimensionSystem::of(&q);
        let p = sys.positive_solution().expect("consistent");
        for r in &sys.rows {
            let dot: BigRational = r.iter().zip(&p).map(|(&a, x)| exact::rat(a) * x).sum();
            assert!(dot.is_zero());
        }
        assert!(p.iter().all(|x| *x >= BigRational::one()));
    }
}
