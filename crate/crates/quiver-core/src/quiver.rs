use crate::error::QuiverError;

/// Largest off-diagonal multiplicity allowed in tame mode.
pub const TAME_MAX_ARROWS: u8 = 2;
/// Largest loop count allowed in tame mode.
pub const TAME_MAX_LOOPS: u8 = 1;

/// A finite quiver stored as an `n × n` multiplicity matrix.
///
/// `mult(i, j)` is the number of arrows `i → j`; the diagonal holds loops.
/// Vertices are 0-based in the Rust API and 1-based in every text format.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Quiver {
    n: usize,
    mult: Vec<u8>,
}

/// In- and out-degree of a vertex, counted with multiplicity.
///
/// A loop contributes one to each.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct VertexDegree {
    pub indeg: u32,
    pub outdeg: u32,
}

/// Regularity of a single vertex.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Regularity {
    /// An `(r, r)`-vertex.
    Regular(u32),
    /// A `(p, q)`-vertex with `p != q`.
    Mixed { indeg: u32, outdeg: u32 },
}

impl VertexDegree {
    pub fn regularity(self) -> Regularity {
        if self.indeg == self.outdeg {
            Regularity::Regular(self.indeg)
        } else {
            Regularity::Mixed {
                indeg: self.indeg,
                outdeg: self.outdeg,
            }
        }
    }

    pub fn is(self, indeg: u32, outdeg: u32) -> bool {
        self.indeg == indeg && self.outdeg == outdeg
    }

    pub fn is_regular(self, r: u32) -> bool {
        self.is(r, r)
    }

    /// Both degrees are at most 2.
    pub fn at_most_2_regular(self) -> bool {
        self.indeg <= 2 && self.outdeg <= 2
    }

    pub fn is_isolated(self) -> bool {
        self.is(0, 0)
    }
}

impl Quiver {
    /// The quiver on `n` vertices with no arrows.
    pub fn empty(n: usize) -> Result<Self, QuiverError> {
        if n == 0 {
            return Err(QuiverError::Empty);
        }
        Ok(Quiver {
            n,
            mult: vec![0; n * n],
        })
    }

    /// Validates a raw multiplicity matrix.
    ///
    /// In tame mode at most two arrows join any ordered pair of distinct
    /// vertices and each vertex carries at most one loop.
    pub fn from_matrix(rows: &[Vec<i64>], tame: bool) -> Result<Self, QuiverError> {
        let n = rows.len();
        if n == 0 {
            return Err(QuiverError::Empty);
        }
        let mut mult = Vec::with_capacity(n * n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(QuiverError::NonSquare {
                    row: i,
                    len: row.len(),
                    n,
                });
            }
            for (j, &m) in row.iter().enumerate() {
                if m < 0 {
                    return Err(QuiverError::NegativeEntry { i, j });
                }
                let m = u8::try_from(m).map_err(|_| QuiverError::MultiplicityOverflow {
                    i,
                    j,
                    mult: m,
                })?;
                mult.push(m);
            }
        }
        let q = Quiver { n, mult };
        if tame {
            q.check_tame()?;
        }
        Ok(q)
    }

    /// Builds a tame quiver from 0-based `(source, target, multiplicity)` triples.
    ///
    /// Repeated pairs accumulate.
    pub fn from_arrows(n: usize, arrows: &[(usize, usize, u8)]) -> Result<Self, QuiverError> {
        let mut q = Quiver::empty(n)?;
        for &(s, t, m) in arrows {
            q.check_vertex(s)?;
            q.check_vertex(t)?;
            let cell = &mut q.mult[s * n + t];
            *cell = cell
                .checked_add(m)
                .ok_or(QuiverError::MultiplicityOverflow {
                    i: s,
                    j: t,
                    mult: i64::from(*cell) + i64::from(m),
                })?;
        }
        q.check_tame()?;
        Ok(q)
    }

    pub(crate) fn from_raw(n: usize, mult: Vec<u8>) -> Self {
        debug_assert_eq!(mult.len(), n * n);
        Quiver { n, mult }
    }

    /// Fails with the first pair exceeding the tame bounds.
    pub fn check_tame(&self) -> Result<(), QuiverError> {
        for i in 0..self.n {
            for j in 0..self.n {
                let m = self.mult(i, j);
                let bound = if i == j {
                    TAME_MAX_LOOPS
                } else {
                    TAME_MAX_ARROWS
                };
                if m > bound {
                    return Err(QuiverError::TameBoundViolated {
                        i,
                        j,
                        mult: u32::from(m),
                    });
                }
            }
        }
        Ok(())
    }

    pub fn check_vertex(&self, v: usize) -> Result<(), QuiverError> {
        if v < self.n {
            Ok(())
        } else {
            Err(QuiverError::VertexOutOfRange { v, n: self.n })
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn mult(&self, i: usize, j: usize) -> u8 {
        self.mult[i * self.n + j]
    }

    /// Row-major flattened multiplicity matrix.
    pub fn as_flat(&self) -> &[u8] {
        &self.mult
    }

    pub fn to_matrix(&self) -> Vec<Vec<u8>> {
        self.mult.chunks(self.n).map(<[u8]>::to_vec).collect()
    }

    /// Sets a multiplicity without validation; callers re-check tameness if needed.
    pub fn set_mult(&mut self, i: usize, j: usize, m: u8) {
        self.mult[i * self.n + j] = m;
    }

    pub fn loops(&self, i: usize) -> u8 {
        self.mult(i, i)
    }

    pub fn has_loop(&self, i: usize) -> bool {
        self.loops(i) > 0
    }

    pub fn arrow_count(&self) -> u32 {
        self.mult.iter().map(|&m| u32::from(m)).sum()
    }

    /// Degrees of `v`; fails if `v` is out of range.
    pub fn degrees(&self, v: usize) -> Result<VertexDegree, QuiverError> {
        self.check_vertex(v)?;
        Ok(self.degree(v))
    }

    /// Degrees of `v` without the range check.
    pub fn degree(&self, v: usize) -> VertexDegree {
        let n = self.n;
        let outdeg = self.mult[v * n..(v + 1) * n]
            .iter()
            .map(|&m| u32::from(m))
            .sum();
        let indeg = (0..n).map(|i| u32::from(self.mult[i * n + v])).sum();
        VertexDegree { indeg, outdeg }
    }

    pub fn degrees_all(&self) -> Vec<VertexDegree> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    /// Vertices `j != v` with an arrow `v → j`, ascending.
    pub fn successors(&self, v: usize) -> Vec<usize> {
        (0..self.n)
            .filter(|&j| j != v && self.mult(v, j) > 0)
            .collect()
    }

    /// Vertices `j != v` with an arrow `j → v`, ascending.
    pub fn predecessors(&self, v: usize) -> Vec<usize> {
        (0..self.n)
            .filter(|&j| j != v && self.mult(j, v) > 0)
            .collect()
    }

    /// Vertices joined to `v` by an arrow in either direction.
    pub fn neighbours(&self, v: usize) -> Vec<usize> {
        (0..self.n)
            .filter(|&j| j != v && (self.mult(v, j) > 0 || self.mult(j, v) > 0))
            .collect()
    }

    /// True if `v` is the source or target of a pair of parallel non-loop arrows.
    pub fn touches_double_arrow(&self, v: usize) -> bool {
        (0..self.n).any(|j| j != v && (self.mult(v, j) >= 2 || self.mult(j, v) >= 2))
    }

    /// Every vertex has in- and out-degree `r`.
    pub fn is_regular(&self, r: u32) -> bool {
        (0..self.n).all(|v| self.degree(v).is_regular(r))
    }

    /// Every vertex is 1- or 2-regular.
    pub fn is_biregular(&self) -> bool {
        (0..self.n).all(|v| {
            let d = self.degree(v);
            d.is_regular(1) || d.is_regular(2)
        })
    }

    /// Every vertex has in- and out-degree at most 2.
    pub fn is_biserial(&self) -> bool {
        (0..self.n).all(|v| self.degree(v).at_most_2_regular())
    }

    /// Connectivity of the underlying undirected graph.
    pub fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for w in 0..self.n {
                if !seen[w] && (self.mult(v, w) > 0 || self.mult(w, v) > 0) {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Removes all loops.
    pub fn loop_free(&self) -> Quiver {
        let mut q = self.clone();
        for i in 0..self.n {
            q.set_mult(i, i, 0);
        }
        q
    }

    /// Cancels opposite arrows pairwise and removes loops.
    ///
    /// The result has `max(mult(i,j) - mult(j,i), 0)` arrows `i → j`.
    pub fn reduced(&self) -> Quiver {
        let n = self.n;
        let mut mult = vec![0u8; n * n];
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    mult[i * n + j] = self.mult(i, j).saturating_sub(self.mult(j, i));
                }
            }
        }
        Quiver { n, mult }
    }

    /// Signed adjacency matrix: `a[i][j] = mult(i,j) - mult(j,i)`.
    pub fn signed_adjacency(&self) -> Vec<Vec<i32>> {
        (0..self.n)
            .map(|i| {
                (0..self.n)
                    .map(|j| i32::from(self.mult(i, j)) - i32::from(self.mult(j, i)))
                    .collect()
            })
            .collect()
    }

    /// The quiver with every arrow reversed.
    pub fn opposite(&self) -> Quiver {
        let n = self.n;
        let mut mult = vec![0u8; n * n];
        for i in 0..n {
            for j in 0..n {
                mult[j * n + i] = self.mult(i, j);
            }
        }
        Quiver { n, mult }
    }

    /// Relabels vertices: old vertex `v` becomes `perm[v]`.
    ///
    /// # Panics
    /// If `perm` is not a permutation of `0..n`.
    pub fn relabel(&self, perm: &[usize]) -> Quiver {
        assert!(
            is_permutation(perm, self.n),
            "relabel needs a permutation of 0..{}",
            self.n
        );
        let n = self.n;
        let mut mult = vec![0u8; n * n];
        for i in 0..n {
            for j in 0..n {
                mult[perm[i] * n + perm[j]] = self.mult(i, j);
            }
        }
        Quiver { n, mult }
    }

    /// 0-based `(source, target, multiplicity)` for every nonzero entry, sorted.
    pub fn arrows(&self) -> Vec<(usize, usize, u8)> {
        let mut out = Vec::new();
        for i in 0..self.n {
            for j in 0..self.n {
                let m = self.mult(i, j);
                if m > 0 {
                    out.push((i, j, m));
                }
            }
        }
        out
    }

    /// Adds `k` arrows `i → j` without validation.
    pub fn add_arrows(&mut self, i: usize, j: usize, k: u8) {
        let idx = i * self.n + j;
        self.mult[idx] = self.mult[idx].saturating_add(k);
    }
}

pub(crate) fn is_permutation(perm: &[usize], n: usize) -> bool {
    if perm.len() != n {
        return false;
    }
    let mut seen = vec![false; n];
    for &p in perm {
        if p >= n || seen[p] {
            return false;
        }
        seen[p] = true;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn markov() -> Quiver {
        Quiver::from_arrows(3, &[(1, 0, 2), (0, 2, 2), (2, 1, 2)]).unwrap()
    }

    #[test]
    fn validation_rejects_bad_input() {
        assert_eq!(Quiver::from_matrix(&[], true), Err(QuiverError::Empty));
        assert!(matches!(
            Quiver::from_matrix(&[vec![0, 1], vec![0]], true),
            Err(QuiverError::NonSquare { row: 1, .. })
        ));
        assert!(matches!(
            Quiver::from_matrix(&[vec![0, -1], vec![0, 0]], true),
            Err(QuiverError::NegativeEntry { i: 0, j: 1 })
        ));
        let three = vec![vec![0, 3, 0], vec![0, 0, 0], vec![0, 0, 0]];
        assert!(matches!(
            Quiver::from_matrix(&three, true),
            Err(QuiverError::TameBoundViolated {
                i: 0,
                j: 1,
                mult: 3
            })
        ));
        assert!(Quiver::from_matrix(&three, false).is_ok());
        let two_loops = vec![vec![2]];
        assert!(matches!(
            Quiver::from_matrix(&two_loops, true),
            Err(QuiverError::TameBoundViolated { .. })
        ));
        assert_eq!(
            Quiver::from_matrix(&[vec![0]], true).unwrap().arrow_count(),
            0
        );
    }

    #[test]
    fn degrees_count_loops_once_each_way() {
        let m = markov();
        assert_eq!(
            m.degrees(0).unwrap(),
            VertexDegree {
                indeg: 2,
                outdeg: 2
            }
        );
        assert!(m.is_regular(2));
        let mut q = Quiver::from_arrows(2, &[(0, 1, 1), (1, 0, 1)]).unwrap();
        q.add_arrows(0, 0, 1);
        assert_eq!(
            q.degree(0),
            VertexDegree {
                indeg: 2,
                outdeg: 2
            }
        );
        assert!(q.degrees(2).is_err());
    }

    #[test]
    fn reduced_cancels_pairs() {
        let q = Quiver::from_arrows(2, &[(0, 1, 2), (1, 0, 1)]).unwrap();
        assert_eq!(q.reduced(), Quiver::from_arrows(2, &[(0, 1, 1)]).unwrap());
        let cyc = Quiver::from_arrows(2, &[(0, 1, 1), (1, 0, 1)]).unwrap();
        assert_eq!(cyc.reduced().arrow_count(), 0);
    }

    #[test]
    fn opposite_negates_adjacency() {
        let m = markov();
        let a = m.signed_adjacency();
        let b = m.opposite().signed_adjacency();
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(a[i][j], -b[i][j]);
            }
        }
        assert_eq!(m.opposite().opposite(), m);
    }

    #[test]
    fn connectivity() {
        assert!(markov().is_connected());
        assert!(!Quiver::from_arrows(3, &[(0, 1, 1)]).unwrap().is_connected());
    }
}
