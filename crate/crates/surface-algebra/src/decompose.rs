//! Exact cover of a quiver's arrows by glued blocks.

use std::collections::BTreeSet;

use quiver_core::{find_pattern, ArrowRule, PatternSpec, Quiver, VertexRule};

use crate::blocks::{BlockDecomposition, BlockInstance, BlockType, Role};

/// First decomposition of `q` using only `allowed` block types, in a fixed
/// search order (blocks tried in `allowed` order, placements in lex order).
pub fn decompose_into_blocks(q: &Quiver, allowed: &[BlockType]) -> Option<BlockDecomposition> {
    all_decompositions(q, allowed, 1).into_iter().next()
}

/// Every decomposition of `q` into `allowed` blocks, up to `limit` results.
/// Decompositions are reported once each, with blocks in a canonical order.
pub fn all_decompositions(
    q: &Quiver,
    allowed: &[BlockType],
    limit: usize,
) -> Vec<BlockDecomposition> {
    let candidates = placements(q, allowed);
    let n = q.n();
    let mut state = Cover {
        n,
        remaining: q.as_flat().iter().map(|&m| u32::from(m)).collect(),
        outlets: vec![0; n],
        inner: vec![false; n],
        chosen: Vec::new(),
        found: Vec::new(),
        seen: BTreeSet::new(),
        limit,
    };
    state.search(&candidates);
    state.found
}

/// Every block of the full catalog; the decompositions accepted here are the
/// Gabriel quivers of generalized weighted surface algebras.
pub fn recognize_gwsa_gabriel(q: &Quiver) -> Option<BlockDecomposition> {
    decompose_into_blocks(q, &BlockType::ALL)
}

/// Distinct block placements in `q`. Inner vertices must be closed in `q`.
fn placements(q: &Quiver, allowed: &[BlockType]) -> Vec<BlockInstance> {
    let mut out = Vec::new();
    let mut seen = BTreeSet::new();
    for &kind in allowed {
        let t = kind.template();
        if t.n() > q.n() {
            continue;
        }
        let mut spec = PatternSpec::new(t.quiver(), ArrowRule::AtLeast);
        for (v, role) in t.roles.iter().enumerate() {
            if *role == Role::Inner {
                spec = spec.with_rule(v, VertexRule::Closed);
            }
        }
        for image in find_pattern(q, &spec) {
            let inst = BlockInstance {
                kind,
                vertices: image,
            };
            // Template automorphisms give the same placement more than once.
            let mut arrows = inst.arrows();
            arrows.sort_unstable();
            let mut roles: Vec<(usize, Role)> = inst
                .vertices
                .iter()
                .zip(&t.roles)
                .map(|(&v, &r)| (v, r))
                .collect();
            roles.sort_unstable();
            if seen.insert((kind, arrows, roles)) {
                out.push(inst);
            }
        }
    }
    out
}

struct Cover {
    n: usize,
    remaining: Vec<u32>,
    outlets: Vec<u8>,
    inner: Vec<bool>,
    chosen: Vec<BlockInstance>,
    found: Vec<BlockDecomposition>,
    seen: BTreeSet<Vec<BlockInstance>>,
    limit: usize,
}

impl Cover {
    fn search(&mut self, candidates: &[BlockInstance]) {
        if self.found.len() >= self.limit {
            return;
        }
        let Some(first) = self.remaining.iter().position(|&m| m > 0) else {
            self.record();
            return;
        };
        let target = (first / self.n, first % self.n);
        for inst in candidates {
            if !inst.arrows().contains(&target) || !self.fits(inst) {
                continue;
            }
            self.apply(inst, true);
            self.chosen.push(inst.clone());
            self.search(candidates);
            self.chosen.pop();
            self.apply(inst, false);
            if self.found.len() >= self.limit {
                return;
            }
        }
    }

    fn fits(&self, inst: &BlockInstance) -> bool {
        let roles = inst.kind.template().roles;
        let vertices_ok = inst
            .vertices
            .iter()
            .zip(&roles)
            .all(|(&v, role)| match role {
                Role::Inner => !self.inner[v] && self.outlets[v] == 0,
                Role::Outlet => !self.inner[v] && self.outlets[v] < 2,
            });
        if !vertices_ok {
            return false;
        }
        let mut need = vec![0u32; self.n * self.n];
        for (s, t) in inst.arrows() {
            need[s * self.n + t] += 1;
        }
        need.iter().zip(&self.remaining).all(|(a, b)| a <= b)
    }

    fn apply(&mut self, inst: &BlockInstance, add: bool) {
        let roles = inst.kind.template().roles;
        for (&v, role) in inst.vertices.iter().zip(&roles) {
            match (role, add) {
                (Role::Inner, _) => self.inner[v] = add,
                (Role::Outlet, true) => self.outlets[v] += 1,
                (Role::Outlet, false) => self.outlets[v] -= 1,
            }
        }
        for (s, t) in inst.arrows() {
            let m = &mut self.remaining[s * self.n + t];
            if add {
                *m -= 1;
            } else {
                *m += 1;
            }
        }
    }

    fn record(&mut self) {
        let glued = (0..self.n).all(|v| {
            self.inner[v] != (self.outlets[v] == 2) && (self.inner[v] || self.outlets[v] == 2)
        });
        if !glued {
            return;
        }
        let mut blocks = self.chosen.clone();
        blocks.sort();
        if self.seen.insert(blocks.clone()) {
            self.found.push(BlockDecomposition { blocks });
        }
    }
}
