//! Where 2-cycles and loops may be added to a reduced quiver.

use quiver_core::{Quiver, VertexDegree};

use crate::certificate::closes;
use crate::error::ReconstructionError;

/// Largest vertex count handled by the placement rules.
pub const MAX_PLACEMENT_VERTICES: usize = 5;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Kind {
    Isolated,
    OneRegular,
    OneTwo,
    TwoOne,
    Other,
}

fn kind(d: VertexDegree) -> Kind {
    match (d.indeg, d.outdeg) {
        (0, 0) => Kind::Isolated,
        (1, 1) => Kind::OneRegular,
        (1, 2) => Kind::OneTwo,
        (2, 1) => Kind::TwoOne,
        _ => Kind::Other,
    }
}

/// `i → x → j → y → i` with `i`, `j` the 1-regular corners.
fn alternating_square(qx: &Quiver, i: usize, j: usize) -> bool {
    let (si, pi) = (qx.successors(i), qx.predecessors(i));
    let (sj, pj) = (qx.successors(j), qx.predecessors(j));
    si.len() == 1 && pi.len() == 1 && si == pj && pi == sj && si != pi
}

/// `a` the (1,2)-vertex, `b` the (2,1)-vertex: both successors of `a` are
/// closed 1-regular vertices entering `b`, and `b` returns to `a` through one
/// outlet vertex.
fn split_triangle(qx: &Quiver, a: usize, b: usize) -> bool {
    let mid = qx.successors(a);
    let deg = qx.degrees_all();
    mid.len() == 2
        && mid == qx.predecessors(b)
        && mid.iter().all(|&t| deg[t].is_regular(1))
        && qx.predecessors(a).len() == 1
        && qx.predecessors(a) == qx.successors(b)
}

fn eligible_pair(qx: &Quiver, i: usize, j: usize) -> bool {
    if qx.mult(i, j) > 0 || qx.mult(j, i) > 0 {
        return false;
    }
    let (di, dj) = (qx.degree(i), qx.degree(j));
    let (ki, kj) = (kind(di), kind(dj));
    if [ki, kj].contains(&Kind::Other) || qx.touches_double_arrow(i) || qx.touches_double_arrow(j) {
        return false;
    }
    match (ki, kj) {
        (Kind::Isolated, _) | (_, Kind::Isolated) => true,
        (Kind::OneRegular, Kind::OneRegular) => alternating_square(qx, i, j),
        (Kind::OneTwo, Kind::TwoOne) => split_triangle(qx, i, j),
        (Kind::TwoOne, Kind::OneTwo) => split_triangle(qx, j, i),
        _ => false,
    }
}

/// Every set of pairwise disjoint admissible 2-cycles, the empty set first.
pub fn two_cycle_placements(qx: &Quiver) -> Result<Vec<Vec<(usize, usize)>>, ReconstructionError> {
    let n = qx.n();
    if n > MAX_PLACEMENT_VERTICES {
        return Err(ReconstructionError::UnsupportedSize(n));
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .filter(|&(i, j)| eligible_pair(qx, i, j))
        .collect();
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    disjoint_subsets(&pairs, 0, &mut vec![false; n], &mut chosen, &mut out);
    Ok(out)
}

fn disjoint_subsets(
    pairs: &[(usize, usize)],
    from: usize,
    used: &mut [bool],
    chosen: &mut Vec<(usize, usize)>,
    out: &mut Vec<Vec<(usize, usize)>>,
) {
    out.push(chosen.clone());
    for k in from..pairs.len() {
        let (i, j) = pairs[k];
        if used[i] || used[j] {
            continue;
        }
        used[i] = true;
        used[j] = true;
        chosen.push((i, j));
        disjoint_subsets(pairs, k + 1, used, chosen, out);
        chosen.pop();
        used[i] = false;
        used[j] = false;
    }
}

/// The two loop-free quivers with zero shadow on three vertices: the
/// triangle of 2-cycles and the chain of two 2-cycles.
pub fn zero_shadow_quivers() -> Vec<Quiver> {
    let k3 = Quiver::from_arrows(
        3,
        &[
            (0, 1, 1),
            (1, 0, 1),
            (0, 2, 1),
            (2, 0, 1),
            (1, 2, 1),
            (2, 1, 1),
        ],
    );
    let chain = Quiver::from_arrows(3, &[(0, 1, 1), (1, 0, 1), (1, 2, 1), (2, 1, 1)]);
    vec![k3.expect("static quiver"), chain.expect("static quiver")]
}

/// Whether a loop at `v` is compatible with the rest of `q`, which already
/// carries the proposed loops. `qo` is the loop-free part.
fn loop_allowed(qo: &Quiver, q: &Quiver, v: usize) -> bool {
    let d = qo.degree(v);
    if !d.at_most_2_regular() {
        return false;
    }
    let forward = d.outdeg == 2;
    let backward = d.indeg == 2;
    if forward {
        for s in qo.successors(v) {
            if q.degree(s).indeg >= 2 {
                return false;
            }
            // A certified continuation v → s → t also blocks the loop.
            if q.successors(s).into_iter().any(|t| closes(q, v, t)) {
                return false;
            }
        }
    }
    if backward {
        for p in qo.predecessors(v) {
            if q.degree(p).outdeg >= 2 {
                return false;
            }
            if q.predecessors(p).into_iter().any(|t| closes(q, t, v)) {
                return false;
            }
        }
    }
    true
}

/// Every loop set compatible with the loop rules, as ascending vertex lists.
pub fn loop_placements(qo: &Quiver) -> Vec<Vec<usize>> {
    loop_placements_within(qo, &(0..qo.n()).collect::<Vec<_>>())
}

pub(crate) fn loop_placements_within(qo: &Quiver, allowed: &[usize]) -> Vec<Vec<usize>> {
    let slots: Vec<usize> = allowed
        .iter()
        .copied()
        .filter(|&v| qo.degree(v).at_most_2_regular())
        .collect();
    let mut out = Vec::new();
    for mask in 0u32..(1 << slots.len()) {
        let set: Vec<usize> = slots
            .iter()
            .enumerate()
            .filter(|(k, _)| mask >> k & 1 == 1)
            .map(|(_, &v)| v)
            .collect();
        let mut q = qo.clone();
        for &v in &set {
            q.add_arrows(v, v, 1);
        }
        if set.iter().all(|&v| loop_allowed(qo, &q, v)) {
            out.push(set);
        }
    }
    out
}
