use std::cmp::Ordering;

use crate::error::ShadowError;
use crate::shadow::Shadow;

/// Largest size accepted by [`canonical_shadow`].
pub const MAX_CANON_SHADOW: usize = 8;

/// Branch-and-bound over vertex orderings and the global sign.
///
/// Candidate orderings are built one vertex at a time; after placing vertex
/// `k` the `k`-th column of the code is fixed, so a prefix that already
/// compares greater than the incumbent is abandoned.
struct Search<'a> {
    s: &'a Shadow,
    sigma: Vec<usize>,
    used: Vec<bool>,
    sign: i8,
    best: Vec<i8>,
    /// Set when only testing minimality: any strictly smaller prefix ends the search.
    test_only: bool,
    found_smaller: bool,
}

fn col_start(k: usize) -> usize {
    k * (k - 1) / 2
}

impl Search<'_> {
    /// Compares column `k` of the candidate against the incumbent.
    fn cmp_column(&self, k: usize) -> Ordering {
        let base = col_start(k);
        for i in 0..k {
            let v = self.sign * self.s.get(self.sigma[i], self.sigma[k]);
            let ord = v.cmp(&self.best[base + i]);
            if ord != Ordering::Equal {
                return ord;
            }
        }
        Ordering::Equal
    }

    fn run(&mut self, k: usize) {
        let n = self.s.n();
        if k == n {
            return;
        }
        for v in 0..n {
            if self.used[v] {
                continue;
            }
            self.sigma[k] = v;
            let ord = if k == 0 {
                Ordering::Equal
            } else {
                self.cmp_column(k)
            };
            match ord {
                Ordering::Greater => continue,
                Ordering::Less if self.test_only => {
                    self.found_smaller = true;
                    return;
                }
                Ordering::Less => {
                    // Every completion of this prefix beats the incumbent, so
                    // the incumbent's later columns become unbounded.
                    let base = col_start(k);
                    for i in 0..k {
                        self.best[base + i] = self.sign * self.s.get(self.sigma[i], self.sigma[k]);
                    }
                    for x in &mut self.best[col_start(k + 1)..] {
                        *x = i8::MAX;
                    }
                }
                Ordering::Equal => {}
            }
            self.used[v] = true;
            self.run(k + 1);
            self.used[v] = false;
            if self.found_smaller {
                return;
            }
        }
    }
}

fn search(s: &Shadow, test_only: bool) -> Search<'_> {
    let n = s.n();
    let mut st = Search {
        s,
        sigma: vec![0; n],
        used: vec![false; n],
        sign: 1,
        best: s.code(),
        test_only,
        found_smaller: false,
    };
    for sign in [1i8, -1] {
        st.sign = sign;
        st.run(0);
        if st.found_smaller {
            break;
        }
    }
    st
}

/// Orbit representative under vertex relabeling and negation: the shadow
/// whose column-wise upper-triangle code is lexicographically smallest.
pub fn canonical_shadow(s: &Shadow) -> Result<Shadow, ShadowError> {
    if s.n() > MAX_CANON_SHADOW {
        return Err(ShadowError::TooLarge {
            n: s.n(),
            max: MAX_CANON_SHADOW,
        });
    }
    if s.n() == 1 {
        return Ok(s.clone());
    }
    let st = search(s, false);
    Ok(Shadow::from_code(s.n(), &st.best))
}

/// True if `s` equals its own canonical form.
pub fn is_canonical(s: &Shadow) -> bool {
    s.n() <= 1 || !search(s, true).found_smaller
}

/// Same orbit under relabeling and negation.
pub fn equivalent(a: &Shadow, b: &Shadow) -> Result<bool, ShadowError> {
    Ok(a.n() == b.n() && canonical_shadow(a)? == canonical_shadow(b)?)
}
