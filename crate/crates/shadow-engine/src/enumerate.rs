//! Orderly generation of tame shadows.
//!
//! Upper-triangle entries are assigned in code order, so every completed
//! column closes a leading principal submatrix. Canonical forms are
//! hereditary under that order, which lets non-canonical prefixes be
//! discarded as soon as their column is complete.

use rayon::prelude::*;

use crate::canon::{is_canonical, MAX_CANON_SHADOW};
use crate::error::ShadowError;
use crate::predicates::{det_is_zero, is_markov, ps3_feasible, ps4, ps5};
use crate::shadow::Shadow;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    /// PS1, PS2, PS3 and T1 to T3.
    BasicTame,
    /// Additionally PS4 (with the Markov exemption) and PS5.
    Essential,
}

/// Prefix size at which the search fans out across threads.
const SPLIT_AT: usize = 4;

#[derive(Clone, Debug)]
pub struct EnumerateOptions {
    pub mode: Mode,
    /// Worker count; `None` uses the global rayon pool.
    pub threads: Option<usize>,
}

impl Default for EnumerateOptions {
    fn default() -> Self {
        EnumerateOptions {
            mode: Mode::BasicTame,
            threads: None,
        }
    }
}

/// Canonical representatives of every orbit passing `mode`, sorted by code.
pub fn enumerate(n: usize, mode: Mode) -> Result<Vec<Shadow>, ShadowError> {
    enumerate_with(
        n,
        &EnumerateOptions {
            mode,
            threads: None,
        },
    )
}

pub fn enumerate_with(n: usize, opts: &EnumerateOptions) -> Result<Vec<Shadow>, ShadowError> {
    if n == 0 {
        return Err(ShadowError::Empty);
    }
    if n > MAX_CANON_SHADOW {
        return Err(ShadowError::TooLarge {
            n,
            max: MAX_CANON_SHADOW,
        });
    }
    match opts.threads {
        None => Ok(run(n, opts.mode)),
        Some(t) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(t.max(1))
                .build()
                .map_err(|e| ShadowError::ThreadPool(e.to_string()))?;
            Ok(pool.install(|| run(n, opts.mode)))
        }
    }
}

fn run(n: usize, mode: Mode) -> Vec<Shadow> {
    let split = n.min(SPLIT_AT);
    let mut prefixes = Vec::new();
    let mut g = Generator {
        n: split,
        s: Shadow::zero(split).expect("n >= 1"),
    };
    g.extend(1, 0, &mut |s| prefixes.push(s.clone()));

    let mut out: Vec<Shadow> = prefixes
        .par_iter()
        .flat_map_iter(|p| {
            let mut found = Vec::new();
            let mut g = Generator { n, s: embed(p, n) };
            g.extend(split, 0, &mut |s| {
                if accepts(s, mode) {
                    found.push(s.clone());
                }
            });
            found
        })
        .collect();
    out.sort_by_key(Shadow::code);
    out
}

fn embed(p: &Shadow, n: usize) -> Shadow {
    let mut s = Shadow::zero(n).expect("n >= 1");
    for i in 0..p.n() {
        for j in 0..p.n() {
            if i < j {
                s.set(i, j, p.get(i, j));
            }
        }
    }
    s
}

fn leading(s: &Shadow, k: usize) -> Shadow {
    let mut t = Shadow::zero(k).expect("k >= 1");
    for j in 1..k {
        for i in 0..j {
            t.set(i, j, s.get(i, j));
        }
    }
    t
}

struct Generator {
    n: usize,
    s: Shadow,
}

impl Generator {
    /// Fills column `k` from row `i` onward, then the remaining columns.
    /// Calls `leaf` on every canonical matrix satisfying T1 to T3.
    fn extend(&mut self, k: usize, i: usize, leaf: &mut dyn FnMut(&Shadow)) {
        if k >= self.n {
            leaf(&self.s);
            return;
        }
        if i == k {
            if k + 1 == self.n {
                if is_canonical(&self.s) {
                    leaf(&self.s);
                }
            } else if is_canonical(&leading(&self.s, k + 1)) {
                self.extend(k + 1, 0, leaf);
            }
            return;
        }
        for v in -2i8..=2 {
            self.s.set(i, k, v);
            if v == 0 || (row_ok(&self.s, i) && row_ok(&self.s, k)) {
                self.extend(k, i + 1, leaf);
            }
        }
        self.s.set(i, k, 0);
    }
}

/// T2 and T3 on one row; unassigned entries are zero and can only add
/// further entries later, so a failing row stays failing.
fn row_ok(s: &Shadow, r: usize) -> bool {
    let (mut pos, mut neg, mut p2, mut m2) = (0, 0, false, false);
    for &x in s.row(r) {
        if x > 0 {
            pos += 1;
            p2 |= x == 2;
        } else if x < 0 {
            neg += 1;
            m2 |= x == -2;
        }
    }
    !(p2 && pos > 1 || m2 && neg > 1 || pos > 4 || neg > 4)
}

fn ps2_ok(s: &Shadow) -> bool {
    (0..s.n()).all(|i| {
        let row = s.row(i);
        row.iter().any(|&x| x > 0) == row.iter().any(|&x| x < 0)
    })
}

fn accepts(s: &Shadow, mode: Mode) -> bool {
    if !ps2_ok(s) {
        return false;
    }
    if mode == Mode::Essential && !(ps5(s).pass && (ps4(s).pass || is_markov(s))) {
        return false;
    }
    det_is_zero(s) && ps3_feasible(s).is_some()
}
