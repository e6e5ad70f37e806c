use std::fmt;
use std::str::FromStr;

use quiver_core::Quiver;
use serde::{Deserialize, Serialize};

use crate::error::SurfaceError;

/// Building blocks of generalized triangulation quivers and of the Gabriel
/// quivers obtained from them by deleting virtual arrows.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum BlockType {
    I,
    II,
    III,
    IV,
    V,
    V1,
    V2,
    V3,
    V4,
}

/// Whether a block vertex is glued to another block or stays private.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Role {
    /// Glued with exactly one outlet of a different block.
    Outlet,
    /// Belongs to this block only.
    Inner,
}

/// A block shape: roles per vertex and arrows as `(source, target)` pairs.
///
/// For blocks I to III the arrow order is the cycle order of `f`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockTemplate {
    pub kind: BlockType,
    pub roles: Vec<Role>,
    pub arrows: Vec<(usize, usize)>,
}

use Role::{Inner as B, Outlet as O};

impl BlockType {
    pub const ALL: [BlockType; 9] = [
        BlockType::I,
        BlockType::II,
        BlockType::III,
        BlockType::IV,
        BlockType::V,
        BlockType::V1,
        BlockType::V2,
        BlockType::V3,
        BlockType::V4,
    ];

    /// Blocks of triangulation quivers.
    pub const TRIANGULATION: [BlockType; 3] = [BlockType::I, BlockType::II, BlockType::III];

    pub fn template(self) -> BlockTemplate {
        let (roles, arrows): (Vec<Role>, Vec<(usize, usize)>) = match self {
            BlockType::I => (vec![O], vec![(0, 0)]),
            BlockType::II => (vec![B, O], vec![(0, 1), (1, 0), (0, 0)]),
            BlockType::III => (vec![O, O, O], vec![(0, 1), (1, 2), (2, 0)]),
            // Two triangles sharing the arrow 0 → 1.
            BlockType::IV => (
                vec![O, O, B, B],
                vec![(0, 1), (1, 2), (2, 0), (1, 3), (3, 0)],
            ),
            // Vertex order (y1, y2, x1, x2, e).
            BlockType::V => (
                vec![B, B, B, B, O],
                vec![
                    (1, 0),
                    (1, 2),
                    (3, 0),
                    (3, 2),
                    (0, 4),
                    (2, 4),
                    (4, 3),
                    (4, 1),
                ],
            ),
            BlockType::V1 => (vec![O, B], vec![(0, 1), (1, 0)]),
            BlockType::V2 => (vec![O, B, O, B], vec![(0, 1), (1, 2), (2, 3), (3, 0)]),
            // Vertex order (a, t1, t2, b, c).
            BlockType::V3 => (
                vec![B, B, B, B, O],
                vec![(0, 1), (0, 2), (1, 3), (2, 3), (3, 4), (4, 0)],
            ),
            BlockType::V4 => (
                vec![B; 6],
                vec![
                    (0, 1),
                    (0, 2),
                    (1, 3),
                    (2, 3),
                    (3, 4),
                    (3, 5),
                    (4, 0),
                    (5, 0),
                ],
            ),
        };
        BlockTemplate {
            kind: self,
            roles,
            arrows,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            BlockType::I => "I",
            BlockType::II => "II",
            BlockType::III => "III",
            BlockType::IV => "IV",
            BlockType::V => "V",
            BlockType::V1 => "V1",
            BlockType::V2 => "V2",
            BlockType::V3 => "V3",
            BlockType::V4 => "V4",
        }
    }

    /// Template vertices at which [`crate::mutate_block`] rewrites this block.
    pub fn pivots(self) -> &'static [usize] {
        match self {
            BlockType::IV => &[2, 3],
            BlockType::V2 => &[1, 3],
            BlockType::V => &[0, 2],
            BlockType::V3 => &[0],
            _ => &[],
        }
    }
}

impl fmt::Display for BlockType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BlockType {
    type Err = SurfaceError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        BlockType::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| SurfaceError::UnknownBlockType(s.to_string()))
    }
}

impl BlockTemplate {
    pub fn n(&self) -> usize {
        self.roles.len()
    }

    pub fn quiver(&self) -> Quiver {
        let arrows: Vec<_> = self.arrows.iter().map(|&(s, t)| (s, t, 1)).collect();
        Quiver::from_arrows(self.n(), &arrows).expect("block templates are tame")
    }
}

/// A block placed in a quiver.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BlockInstance {
    pub kind: BlockType,
    /// `vertices[t]` is the global vertex of template vertex `t`.
    pub vertices: Vec<usize>,
}

impl BlockInstance {
    /// Global arrows in template order.
    pub fn arrows(&self) -> Vec<(usize, usize)> {
        self.kind
            .template()
            .arrows
            .iter()
            .map(|&(s, t)| (self.vertices[s], self.vertices[t]))
            .collect()
    }

    pub fn role_of(&self, v: usize) -> Option<Role> {
        let roles = self.kind.template().roles;
        self.vertices.iter().position(|&w| w == v).map(|t| roles[t])
    }

    /// Global vertices at which the block can be mutated.
    pub fn pivot_vertices(&self) -> Vec<usize> {
        self.kind
            .pivots()
            .iter()
            .map(|&t| self.vertices[t])
            .collect()
    }
}

/// A partition of a quiver's arrows into glued blocks.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BlockDecomposition {
    pub blocks: Vec<BlockInstance>,
}

impl BlockDecomposition {
    /// Checks the arrow partition and the glueing rule against `q`.
    pub fn is_valid_for(&self, q: &Quiver) -> bool {
        let n = q.n();
        let mut mult = vec![0u32; n * n];
        let mut outlets = vec![0usize; n];
        let mut inner = vec![0usize; n];
        for b in &self.blocks {
            let roles = b.kind.template().roles;
            if b.vertices.len() != roles.len() || b.vertices.iter().any(|&v| v >= n) {
                return false;
            }
            let mut seen = b.vertices.clone();
            seen.sort_unstable();
            seen.dedup();
            if seen.len() != b.vertices.len() {
                return false;
            }
            for (t, &v) in b.vertices.iter().enumerate() {
                match roles[t] {
                    Role::Outlet => outlets[v] += 1,
                    Role::Inner => inner[v] += 1,
                }
            }
            for (s, t) in b.arrows() {
                mult[s * n + t] += 1;
            }
        }
        let arrows_match =
            (0..n).all(|i| (0..n).all(|j| mult[i * n + j] == u32::from(q.mult(i, j))));
        let glued = (0..n)
            .all(|v| (inner[v] == 1 && outlets[v] == 0) || (inner[v] == 0 && outlets[v] == 2));
        arrows_match && glued
    }

    pub fn kinds(&self) -> Vec<BlockType> {
        let mut k: Vec<_> = self.blocks.iter().map(|b| b.kind).collect();
        k.sort();
        k
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn template_degrees() {
        for kind in BlockType::ALL {
            let t = kind.template();
            let q = t.quiver();
            assert_eq!(q.arrow_count() as usize, t.arrows.len());
            assert!(q.reduced().n() == t.n());
        }
        let v = BlockType::V.template().quiver();
        assert!(v.degree(4).is_regular(2));
        assert!(v.degree(0).is(2, 1) && v.degree(1).is(1, 2));
        let v3 = BlockType::V3.template().quiver();
        assert!(v3.degree(0).is(1, 2) && v3.degree(3).is(2, 1));
    }

    #[test]
    fn names_round_trip() {
        for kind in BlockType::ALL {
            assert_eq!(kind.name().parse::<BlockType>().unwrap(), kind);
        }
        assert!("VI".parse::<BlockType>().is_err());
    }
}
