//! The permutations `f` and `g` of a triangulation quiver.

use quiver_core::Quiver;

use crate::blocks::{BlockDecomposition, BlockType};
use crate::decompose::decompose_into_blocks;
use crate::error::SurfaceError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriangulationStructure {
    pub n: usize,
    /// Arrow `k` runs `arrows[k].0 → arrows[k].1`; parallel arrows get
    /// separate indices.
    pub arrows: Vec<(usize, usize)>,
    pub f: Vec<usize>,
    pub g: Vec<usize>,
    /// `g`-orbits, each starting at its smallest arrow index.
    pub orbits: Vec<Vec<usize>>,
    pub decomposition: BlockDecomposition,
}

/// The structure of a 2-regular quiver glued from blocks I to III.
pub fn triangulation_structure(q: &Quiver) -> Option<TriangulationStructure> {
    if !q.is_regular(2) {
        return None;
    }
    let decomposition = decompose_into_blocks(q, &BlockType::TRIANGULATION)?;
    let mut arrows = Vec::new();
    let mut f = Vec::new();
    for block in &decomposition.blocks {
        let base = arrows.len();
        let block_arrows = block.arrows();
        let len = block_arrows.len();
        arrows.extend(block_arrows);
        for k in 0..len {
            f.push(base + (k + 1) % len);
        }
    }
    let bar: Vec<usize> = (0..arrows.len())
        .map(|a| {
            (0..arrows.len())
                .find(|&b| b != a && arrows[b].0 == arrows[a].0)
                .expect("2-regular vertices have two outgoing arrows")
        })
        .collect();
    let g: Vec<usize> = f.iter().map(|&x| bar[x]).collect();
    let orbits = cycles(&g);
    Some(TriangulationStructure {
        n: q.n(),
        arrows,
        f,
        g,
        orbits,
        decomposition,
    })
}

fn cycles(perm: &[usize]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; perm.len()];
    let mut out = Vec::new();
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut orbit = Vec::new();
        let mut a = start;
        while !seen[a] {
            seen[a] = true;
            orbit.push(a);
            a = perm[a];
        }
        out.push(orbit);
    }
    out
}

impl TriangulationStructure {
    /// The `g`-orbits.
    pub fn g_orbits(&self) -> &[Vec<usize>] {
        &self.orbits
    }

    /// Length of the `g`-orbit containing arrow `a`.
    pub fn orbit_length(&self, a: usize) -> usize {
        self.orbits
            .iter()
            .find(|o| o.contains(&a))
            .map_or(0, Vec::len)
    }

    /// Arrows `α` with `m_α n_α = 2` for per-arrow weights `m`.
    pub fn virtual_arrows(&self, weights: &[u32]) -> Result<Vec<usize>, SurfaceError> {
        if weights.len() != self.arrows.len() {
            return Err(SurfaceError::WeightCount {
                expected: self.arrows.len(),
                found: weights.len(),
            });
        }
        for orbit in &self.orbits {
            if let Some(&a) = orbit.iter().find(|&&a| weights[a] != weights[orbit[0]]) {
                return Err(SurfaceError::WeightNotOrbitConstant(a));
            }
        }
        let mut out = Vec::new();
        for a in 0..self.arrows.len() {
            let product = weights[a] as usize * self.orbit_length(a);
            if product < 2 {
                return Err(SurfaceError::WeightTooSmall(a));
            }
            if product == 2 {
                out.push(a);
            }
        }
        Ok(out)
    }

    /// The quiver without its virtual arrows.
    pub fn gabriel_quiver_of(&self, weights: &[u32]) -> Result<Quiver, SurfaceError> {
        let virt = self.virtual_arrows(weights)?;
        let mut q = Quiver::empty(self.n)?;
        for (k, &(s, t)) in self.arrows.iter().enumerate() {
            if !virt.contains(&k) {
                q.add_arrows(s, t, 1);
            }
        }
        Ok(q)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: usize, arrows: &[(usize, usize, u8)]) -> Quiver {
        Quiver::from_arrows(n, arrows).unwrap()
    }

    fn compose(p: &[usize], r: &[usize]) -> Vec<usize> {
        p.iter().map(|&x| r[x]).collect()
    }

    #[test]
    fn three_loop_triangle_structure() {
        let tri = q(
            3,
            &[
                (0, 1, 1),
                (1, 2, 1),
                (2, 0, 1),
                (0, 0, 1),
                (1, 1, 1),
                (2, 2, 1),
            ],
        );
        let ts = triangulation_structure(&tri).unwrap();
        let id: Vec<usize> = (0..6).collect();
        assert_eq!(compose(&compose(&ts.f, &ts.f), &ts.f), id);
        for (k, &(s, t)) in ts.arrows.iter().enumerate() {
            if s == t {
                assert_eq!(ts.f[k], k);
            }
        }
        assert_eq!(ts.orbits.iter().map(Vec::len).sum::<usize>(), 6);
    }

    #[test]
    fn block_two_loop_is_virtual_at_weight_two() {
        // II + I: loops at both ends of a 2-cycle.
        let quiver = q(2, &[(0, 0, 1), (0, 1, 1), (1, 0, 1), (1, 1, 1)]);
        let ts = triangulation_structure(&quiver).unwrap();
        let two = ts
            .decomposition
            .blocks
            .iter()
            .find(|b| b.kind == BlockType::II)
            .unwrap();
        let inner = two.vertices[0];
        let inner_loop = ts
            .arrows
            .iter()
            .position(|&(s, t)| s == inner && t == inner)
            .unwrap();
        assert_eq!(ts.orbit_length(inner_loop), 1);
        let mut weights = vec![3u32; ts.arrows.len()];
        for orbit in &ts.orbits {
            if orbit.contains(&inner_loop) {
                for &a in orbit {
                    weights[a] = 2;
                }
            }
        }
        assert_eq!(ts.virtual_arrows(&weights).unwrap(), vec![inner_loop]);
        let g = ts.gabriel_quiver_of(&weights).unwrap();
        assert!(!g.has_loop(inner) && g.has_loop(1 - inner));
    }

    #[test]
    fn two_triangles_share_a_length_two_orbit() {
        // Triangles 0 → 1 → 3 → 0 and 1 → 2 → 3 → 1 meeting along 1 ⇄ 3,
        // with loops at 0 and 2.
        let quiver = q(
            4,
            &[
                (0, 1, 1),
                (1, 2, 1),
                (2, 3, 1),
                (3, 0, 1),
                (1, 3, 1),
                (3, 1, 1),
                (0, 0, 1),
                (2, 2, 1),
            ],
        );
        let ts = triangulation_structure(&quiver).unwrap();
        let a = ts.arrows.iter().position(|&x| x == (1, 3)).unwrap();
        let b = ts.arrows.iter().position(|&x| x == (3, 1)).unwrap();
        assert_eq!(ts.orbit_length(a), 2);
        assert!(ts.orbits.iter().any(|o| o.contains(&a) && o.contains(&b)));
        let weights: Vec<u32> = (0..ts.arrows.len())
            .map(|k| if k == a || k == b { 1 } else { 3 })
            .collect();
        let g = ts.gabriel_quiver_of(&weights).unwrap();
        assert_eq!(g.mult(1, 3) + g.mult(3, 1), 0);
    }

    #[test]
    fn weight_checks() {
        let tri = q(
            3,
            &[
                (0, 1, 1),
                (1, 2, 1),
                (2, 0, 1),
                (0, 0, 1),
                (1, 1, 1),
                (2, 2, 1),
            ],
        );
        let ts = triangulation_structure(&tri).unwrap();
        assert!(matches!(
            ts.virtual_arrows(&[1; 5]),
            Err(SurfaceError::WeightCount { .. })
        ));
        assert_eq!(ts.virtual_arrows(&[5; 6]).unwrap(), Vec::<usize>::new());
        if let Some(orbit) = ts.orbits.iter().find(|o| o.len() > 1) {
            let mut w = vec![5; 6];
            w[orbit[1]] = 6;
            assert!(matches!(
                ts.virtual_arrows(&w),
                Err(SurfaceError::WeightNotOrbitConstant(_))
            ));
        }
    }

    #[test]
    fn pentagon_with_loops_is_not_a_triangulation() {
        let mut arrows: Vec<_> = (0..5).map(|i| (i, (i + 1) % 5, 1)).collect();
        arrows.extend((0..5).map(|i| (i, i, 1)));
        assert!(triangulation_structure(&q(5, &arrows)).is_none());
    }
}
