//! Wild subcategories found as certified trees in the universal covering.
//!
//! A tree node is labeled by a vertex of `Q`, an edge by an arrow. Around
//! each node every arrow end is used at most once, so the tree lifts
//! injectively to the covering. Every directed path of length at least two
//! inside the tree must carry a relation-free certificate. A tree whose
//! underlying graph is neither Dynkin nor extended Dynkin witnesses wildness.

use quiver_core::Quiver;
use serde::Serialize;

use crate::certificate::closes;

/// Default node cap for [`wild_unfolding_filter`].
pub const DEFAULT_TREE_CAP: usize = 10;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TreeEdge {
    /// Tree node indices.
    pub from: usize,
    pub to: usize,
    /// Number of parallel arrows used, 1 or 2.
    pub mult: u8,
}

/// A certified tree; `labels` are 1-based vertices of the host quiver.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UnfoldingTree {
    pub labels: Vec<usize>,
    pub edges: Vec<TreeEdge>,
}

/// Representation type of a connected graph given by an edge list.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DiagramType {
    Dynkin,
    Euclidean,
    Wild,
}

/// Classifies a tree with edge multiplicities on `nodes` vertices.
pub fn classify_tree(nodes: usize, edges: &[(usize, usize, u8)]) -> DiagramType {
    if edges.iter().any(|e| e.2 >= 3) {
        return DiagramType::Wild;
    }
    if edges.iter().any(|e| e.2 == 2) {
        return if nodes == 2 {
            DiagramType::Euclidean
        } else {
            DiagramType::Wild
        };
    }
    let mut adj = vec![Vec::new(); nodes];
    for &(a, b, _) in edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    let max_deg = adj.iter().map(Vec::len).max().unwrap_or(0);
    if max_deg >= 5 {
        return DiagramType::Wild;
    }
    if max_deg == 4 {
        return if nodes == 5 {
            DiagramType::Euclidean
        } else {
            DiagramType::Wild
        };
    }
    let branches: Vec<usize> = (0..nodes).filter(|&v| adj[v].len() == 3).collect();
    match branches.len() {
        0 => DiagramType::Dynkin,
        1 => {
            let c = branches[0];
            // Arm lengths counted with the centre, as in T_{p,q,r}.
            let arms: Vec<u64> = adj[c].iter().map(|&s| arm_length(&adj, c, s) + 1).collect();
            let (p, q, r) = (arms[0], arms[1], arms[2]);
            let lhs = q * r + p * r + p * q;
            let rhs = p * q * r;
            match lhs.cmp(&rhs) {
                std::cmp::Ordering::Greater => DiagramType::Dynkin,
                std::cmp::Ordering::Equal => DiagramType::Euclidean,
                std::cmp::Ordering::Less => DiagramType::Wild,
            }
        }
        2 => {
            let pendant = |c: usize| adj[c].iter().filter(|&&s| adj[s].len() == 1).count();
            if branches.iter().all(|&c| pendant(c) == 2) {
                DiagramType::Euclidean
            } else {
                DiagramType::Wild
            }
        }
        _ => DiagramType::Wild,
    }
}

/// Number of nodes on the arm entered from `centre` through `start`.
fn arm_length(adj: &[Vec<usize>], centre: usize, start: usize) -> u64 {
    let (mut prev, mut cur, mut len) = (centre, start, 1);
    while adj[cur].len() == 2 {
        let next = if adj[cur][0] == prev {
            adj[cur][1]
        } else {
            adj[cur][0]
        };
        prev = cur;
        cur = next;
        len += 1;
    }
    len
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Dir {
    Out,
    In,
}

/// An arrow class at a vertex: all parallel arrows to or from `other`.
#[derive(Clone, Copy, Debug)]
struct End {
    dir: Dir,
    other: usize,
    copies: u8,
}

struct Search<'a> {
    q: &'a Quiver,
    cap: usize,
    ends: Vec<Vec<End>>,
    labels: Vec<usize>,
    used: Vec<Vec<u8>>,
    /// Directed tree edges `(from, to, mult)`.
    edges: Vec<(usize, usize, u8)>,
}

impl<'a> Search<'a> {
    fn new(q: &'a Quiver, cap: usize) -> Self {
        let n = q.n();
        let ends = (0..n)
            .map(|v| {
                let mut e = Vec::new();
                for w in 0..n {
                    if q.mult(v, w) > 0 {
                        e.push(End {
                            dir: Dir::Out,
                            other: w,
                            copies: q.mult(v, w),
                        });
                    }
                    if q.mult(w, v) > 0 {
                        e.push(End {
                            dir: Dir::In,
                            other: w,
                            copies: q.mult(w, v),
                        });
                    }
                }
                e
            })
            .collect();
        Search {
            q,
            cap,
            ends,
            labels: Vec::new(),
            used: Vec::new(),
            edges: Vec::new(),
        }
    }

    fn class_of(&self, v: usize, dir: Dir, other: usize) -> usize {
        self.ends[v]
            .iter()
            .position(|e| e.dir == dir && e.other == other)
            .expect("arrow class exists")
    }

    /// Nodes reachable from `x` along edges in the given direction, excluding `x`.
    fn reach(&self, x: usize, forward: bool) -> Vec<usize> {
        let mut out = Vec::new();
        let mut stack = vec![x];
        while let Some(u) = stack.pop() {
            for &(a, b, _) in &self.edges {
                let next = if forward && a == u {
                    b
                } else if !forward && b == u {
                    a
                } else {
                    continue;
                };
                out.push(next);
                stack.push(next);
            }
        }
        out
    }

    /// Every new directed path through the edge between `x` and a fresh node
    /// labeled `w` must be certified.
    fn certified(&self, x: usize, dir: Dir, w: usize) -> bool {
        match dir {
            Dir::Out => self
                .reach(x, false)
                .iter()
                .all(|&z| closes(self.q, self.labels[z], w)),
            Dir::In => self
                .reach(x, true)
                .iter()
                .all(|&z| closes(self.q, w, self.labels[z])),
        }
    }

    fn is_wild(&self) -> bool {
        classify_tree(self.labels.len(), &self.edges) == DiagramType::Wild
    }

    fn run(&mut self, node: usize, class: usize) -> bool {
        if self.labels.len() >= self.cap {
            return false;
        }
        for i in node..self.labels.len() {
            let v = self.labels[i];
            let start = if i == node { class } else { 0 };
            for c in start..self.ends[v].len() {
                let end = self.ends[v][c];
                let avail = end.copies - self.used[i][c];
                for m in 1..=avail.min(2) {
                    if !self.certified(i, end.dir, end.other) {
                        continue;
                    }
                    let w = end.other;
                    let back = self.class_of(
                        w,
                        if end.dir == Dir::Out {
                            Dir::In
                        } else {
                            Dir::Out
                        },
                        v,
                    );
                    let child = self.labels.len();
                    self.labels.push(w);
                    self.used.push(vec![0; self.ends[w].len()]);
                    self.used[child][back] += m;
                    self.used[i][c] += m;
                    self.edges.push(if end.dir == Dir::Out {
                        (i, child, m)
                    } else {
                        (child, i, m)
                    });
                    if self.is_wild() || self.run(i, c) {
                        return true;
                    }
                    self.edges.pop();
                    self.used[i][c] -= m;
                    self.used.pop();
                    self.labels.pop();
                }
            }
        }
        false
    }

    fn tree(&self) -> UnfoldingTree {
        UnfoldingTree {
            labels: self.labels.iter().map(|v| v + 1).collect(),
            edges: self
                .edges
                .iter()
                .map(|&(from, to, mult)| TreeEdge { from, to, mult })
                .collect(),
        }
    }
}

/// The first wild certified tree with at most `cap` nodes, searching roots in
/// vertex order.
pub fn wild_unfolding_filter_with_cap(q: &Quiver, cap: usize) -> Option<UnfoldingTree> {
    let mut s = Search::new(q, cap);
    for root in 0..q.n() {
        s.labels = vec![root];
        s.used = vec![vec![0; s.ends[root].len()]];
        s.edges.clear();
        if s.run(0, 0) {
            return Some(s.tree());
        }
    }
    None
}

pub fn wild_unfolding_filter(q: &Quiver) -> Option<UnfoldingTree> {
    wild_unfolding_filter_with_cap(q, DEFAULT_TREE_CAP)
}
