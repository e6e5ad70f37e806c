//! Quiver-level block rewrites realizing mutation at a vertex.
//!
//! The rewrite at `v` adds an arrow `p → s` for every path `p → v → s`,
//! cancels it against an existing `s → p`, and reverses the arrows at `v`.
//! Only the four block patterns below are accepted:
//!
//! | pivot | before | after |
//! |-------|--------|-------|
//! | 1-vertex, closing arrow present | IV | V2 |
//! | 1-vertex, no closing arrow | V2 | IV |
//! | (2,1)- or (1,2)-vertex, every closing arrow present | V | V3 |
//! | (2,1)- or (1,2)-vertex, no closing arrow | V3 | V |

use quiver_core::Quiver;

use crate::error::SurfaceError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RewriteRule {
    IvToV2,
    V2ToIv,
    VToV3,
    V3ToV,
}

impl RewriteRule {
    pub fn inverse(self) -> RewriteRule {
        match self {
            RewriteRule::IvToV2 => RewriteRule::V2ToIv,
            RewriteRule::V2ToIv => RewriteRule::IvToV2,
            RewriteRule::VToV3 => RewriteRule::V3ToV,
            RewriteRule::V3ToV => RewriteRule::VToV3,
        }
    }
}

pub fn mutate_block(q: &Quiver, v: usize) -> Result<Quiver, SurfaceError> {
    mutate_block_with_rule(q, v).map(|(m, _)| m)
}

pub fn mutate_block_with_rule(q: &Quiver, v: usize) -> Result<(Quiver, RewriteRule), SurfaceError> {
    q.check_vertex(v)?;
    if q.has_loop(v) {
        return Err(SurfaceError::LoopAtPivot(v));
    }
    let no_match = SurfaceError::NoMatchingPattern(v);
    let preds = q.predecessors(v);
    let succs = q.successors(v);
    let simple = preds
        .iter()
        .all(|&p| q.mult(p, v) == 1 && q.mult(v, p) == 0)
        && succs.iter().all(|&s| q.mult(v, s) == 1);
    if !simple {
        return Err(no_match);
    }
    let shape = (preds.len(), succs.len());
    if !matches!(shape, (1, 1) | (2, 1) | (1, 2)) {
        return Err(no_match);
    }
    let mut closing = 0;
    for &p in &preds {
        for &s in &succs {
            if q.mult(p, s) > 0 && q.mult(s, p) > 0 {
                return Err(no_match);
            }
            if q.mult(s, p) > 0 {
                closing += 1;
            }
        }
    }
    let paths = preds.len() * succs.len();
    let rule = match (shape, closing) {
        ((1, 1), 1) => RewriteRule::IvToV2,
        ((1, 1), 0) => RewriteRule::V2ToIv,
        (_, c) if c == paths => RewriteRule::VToV3,
        (_, 0) => RewriteRule::V3ToV,
        _ => return Err(no_match),
    };
    let mut out = q.clone();
    for &p in &preds {
        for &s in &succs {
            if q.mult(s, p) > 0 {
                out.set_mult(s, p, q.mult(s, p) - 1);
            } else {
                out.set_mult(p, s, q.mult(p, s) + 1);
            }
        }
    }
    for &p in &preds {
        out.set_mult(p, v, 0);
        out.set_mult(v, p, 1);
    }
    for &s in &succs {
        out.set_mult(v, s, 0);
        out.set_mult(s, v, 1);
    }
    out.check_tame()
        .map_err(|_| SurfaceError::NoMatchingPattern(v))?;
    Ok((out, rule))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::blocks::BlockType;
    use crate::decompose::recognize_gwsa_gabriel;

    fn q(n: usize, arrows: &[(usize, usize, u8)]) -> Quiver {
        Quiver::from_arrows(n, arrows).unwrap()
    }

    #[test]
    fn block_four_becomes_v2_and_back() {
        // L=0, R=1, T=2, B=3, with a loop glued at each outlet.
        let iv = q(
            4,
            &[
                (0, 1, 1),
                (1, 2, 1),
                (2, 0, 1),
                (1, 3, 1),
                (3, 0, 1),
                (0, 0, 1),
                (1, 1, 1),
            ],
        );
        let (m, rule) = mutate_block_with_rule(&iv, 2).unwrap();
        assert_eq!(rule, RewriteRule::IvToV2);
        let kinds = recognize_gwsa_gabriel(&m).unwrap().kinds();
        assert!(kinds.contains(&BlockType::V2));
        let (back, rule) = mutate_block_with_rule(&m, 2).unwrap();
        assert_eq!(rule, RewriteRule::V2ToIv);
        assert_eq!(back, iv);
    }

    #[test]
    fn refuses_loops_and_unknown_shapes() {
        let l = q(2, &[(0, 0, 1), (0, 1, 1), (1, 0, 1)]);
        assert_eq!(mutate_block(&l, 0), Err(SurfaceError::LoopAtPivot(0)));
        let two_cycle = q(2, &[(0, 1, 1), (1, 0, 1)]);
        assert_eq!(
            mutate_block(&two_cycle, 0),
            Err(SurfaceError::NoMatchingPattern(0))
        );
    }
}
