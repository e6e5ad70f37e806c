//! Quiver-level evidence that a short path lies in no minimal relation.
//!
//! A path of length 2 or 3 from `a` to `b` is certified when `Q` has no arrow
//! `b → a`. A `false` answer means "unknown", never "in a relation".

use quiver_core::Quiver;

use crate::error::ReconstructionError;

/// Arrows are given as `(source, target)` pairs in path order.
pub fn relation_free_certificate(
    q: &Quiver,
    path: &[(usize, usize)],
) -> Result<bool, ReconstructionError> {
    if !(2..=3).contains(&path.len()) {
        return Err(ReconstructionError::PathLength(path.len()));
    }
    for (k, &(s, t)) in path.iter().enumerate() {
        q.check_vertex(s)?;
        q.check_vertex(t)?;
        if q.mult(s, t) == 0 || (k > 0 && path[k - 1].1 != s) {
            return Err(ReconstructionError::NotComposable(k));
        }
    }
    Ok(closes(q, path[0].0, path[path.len() - 1].1))
}

/// True if no arrow runs from `end` back to `start`.
pub(crate) fn closes(q: &Quiver, start: usize, end: usize) -> bool {
    q.mult(end, start) == 0
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle() -> Quiver {
        Quiver::from_arrows(3, &[(0, 1, 1), (1, 2, 1), (2, 0, 1)]).unwrap()
    }

    #[test]
    fn triangle_paths_are_not_certified() {
        assert!(!relation_free_certificate(&triangle(), &[(0, 1), (1, 2)]).unwrap());
    }

    #[test]
    fn open_paths_are_certified() {
        let q = Quiver::from_arrows(4, &[(0, 1, 1), (1, 2, 1), (2, 3, 1), (3, 0, 1)]).unwrap();
        assert!(relation_free_certificate(&q, &[(0, 1), (1, 2)]).unwrap());
        assert!(!relation_free_certificate(&q, &[(0, 1), (1, 2), (2, 3)]).unwrap());
        let q6 = Quiver::from_arrows(
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
        assert!(relation_free_certificate(&q6, &[(2, 0), (0, 3), (3, 1)]).unwrap());
    }

    #[test]
    fn malformed_paths_are_errors() {
        let q = triangle();
        assert_eq!(
            relation_free_certificate(&q, &[(0, 1)]),
            Err(ReconstructionError::PathLength(1))
        );
        assert_eq!(
            relation_free_certificate(&q, &[(0, 1), (2, 0)]),
            Err(ReconstructionError::NotComposable(1))
        );
        assert_eq!(
            relation_free_certificate(&q, &[(0, 2), (2, 0)]),
            Err(ReconstructionError::NotComposable(0))
        );
    }
}
