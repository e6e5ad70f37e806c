use std::fmt;

use quiver_core::Quiver;
use serde::{Deserialize, Serialize};

use crate::error::ShadowError;

/// Largest entry magnitude a [`Shadow`] may store.
pub const MAX_ENTRY: i64 = i8::MAX as i64;

/// A skew-symmetric integer matrix.
///
/// Entries are small (tame shadows use `-2..=2`), so they are stored as `i8`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Shadow {
    n: usize,
    a: Vec<i8>,
}

impl Shadow {
    pub fn zero(n: usize) -> Result<Self, ShadowError> {
        if n == 0 {
            return Err(ShadowError::Empty);
        }
        Ok(Shadow {
            n,
            a: vec![0; n * n],
        })
    }

    /// Validates a full matrix.
    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self, ShadowError> {
        let n = rows.len();
        if n == 0 {
            return Err(ShadowError::Empty);
        }
        let mut a = Vec::with_capacity(n * n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(ShadowError::NonSquare {
                    row: i,
                    len: row.len(),
                    n,
                });
            }
            for &x in row {
                if x.abs() > MAX_ENTRY {
                    return Err(ShadowError::EntryTooLarge { value: x });
                }
                a.push(x as i8);
            }
        }
        let s = Shadow { n, a };
        for i in 0..n {
            for j in i..n {
                if s.get(i, j) != -s.get(j, i) {
                    return Err(ShadowError::NotSkewSymmetric { i, j });
                }
            }
        }
        Ok(s)
    }

    /// Builds a shadow from 0-based `(i, j, a_ij)` entries above or below the
    /// diagonal; the mirror entry is filled in.
    pub fn from_entries(n: usize, entries: &[(usize, usize, i8)]) -> Result<Self, ShadowError> {
        let mut s = Shadow::zero(n)?;
        for &(i, j, v) in entries {
            if i >= n || j >= n || i == j {
                return Err(ShadowError::BadEntry { i, j });
            }
            s.set(i, j, v);
        }
        Ok(s)
    }

    /// Signed adjacency matrix of a quiver.
    pub fn of_quiver(q: &Quiver) -> Self {
        let n = q.n();
        let mut a = vec![0i8; n * n];
        for i in 0..n {
            for j in 0..n {
                a[i * n + j] = (i16::from(q.mult(i, j)) - i16::from(q.mult(j, i))) as i8;
            }
        }
        Shadow { n, a }
    }

    /// The 2-acyclic loop-free quiver with `max(a_ij, 0)` arrows `i → j`.
    pub fn to_quiver(&self) -> Quiver {
        let mut q = Quiver::empty(self.n).expect("n >= 1");
        for i in 0..self.n {
            for j in 0..self.n {
                let v = self.get(i, j);
                if v > 0 {
                    q.set_mult(i, j, v as u8);
                }
            }
        }
        q
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> i8 {
        self.a[i * self.n + j]
    }

    /// Sets `a_ij = v` and `a_ji = -v`.
    pub fn set(&mut self, i: usize, j: usize, v: i8) {
        self.a[i * self.n + j] = v;
        self.a[j * self.n + i] = -v;
    }

    pub fn row(&self, i: usize) -> &[i8] {
        &self.a[i * self.n..(i + 1) * self.n]
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        (0..self.n)
            .map(|i| self.row(i).iter().map(|&x| i64::from(x)).collect())
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.a.iter().all(|&x| x == 0)
    }

    pub fn negated(&self) -> Shadow {
        Shadow {
            n: self.n,
            a: self.a.iter().map(|&x| -x).collect(),
        }
    }

    /// Relabels vertices: old vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Shadow {
        let n = self.n;
        assert_eq!(perm.len(), n, "permutation length");
        let mut a = vec![0i8; n * n];
        for i in 0..n {
            for j in 0..n {
                a[perm[i] * n + perm[j]] = self.get(i, j);
            }
        }
        Shadow { n, a }
    }

    /// Upper-triangle entries read column by column:
    /// `a_01, a_02, a_12, a_03, a_13, a_23, ...`.
    ///
    /// Canonical forms minimize this sequence; reading by columns makes the
    /// code of a leading principal submatrix a prefix of the full code.
    pub fn code(&self) -> Vec<i8> {
        let mut out = Vec::with_capacity(self.n * (self.n - 1) / 2);
        for j in 1..self.n {
            for i in 0..j {
                out.push(self.get(i, j));
            }
        }
        out
    }

    /// Inverse of [`Shadow::code`].
    pub fn from_code(n: usize, code: &[i8]) -> Shadow {
        assert_eq!(code.len(), n * (n - 1) / 2, "code length");
        let mut s = Shadow {
            n,
            a: vec![0; n * n],
        };
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                s.set(i, j, code[k]);
                k += 1;
            }
        }
        s
    }
}

impl fmt::Debug for Shadow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Shadow{:?}", self.rows())
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ShadowJson {
    n: usize,
    rows: Vec<Vec<i64>>,
}

/// `{"n":3,"rows":[[0,-2,2],[2,0,-2],[-2,2,0]]}`
pub fn to_json_value(s: &Shadow) -> serde_json::Value {
    serde_json::to_value(ShadowJson {
        n: s.n,
        rows: s.rows(),
    })
    .expect("shadow JSON is representable")
}

pub fn to_json(s: &Shadow) -> String {
    serde_json::to_string(&ShadowJson {
        n: s.n,
        rows: s.rows(),
    })
    .expect("shadow JSON is representable")
}

pub fn from_json(text: &str) -> Result<Shadow, ShadowError> {
    let raw: ShadowJson = serde_json::from_str(text).map_err(|e| ShadowError::Parse {
        location: format!("line {} column {}", e.line(), e.column()),
        message: e.to_string(),
    })?;
    from_raw(raw)
}

pub fn from_json_value(v: &serde_json::Value) -> Result<Shadow, ShadowError> {
    let raw: ShadowJson = serde_json::from_value(v.clone()).map_err(|e| ShadowError::Parse {
        location: "value".into(),
        message: e.to_string(),
    })?;
    from_raw(raw)
}

fn from_raw(raw: ShadowJson) -> Result<Shadow, ShadowError> {
    if raw.rows.len() != raw.n {
        return Err(ShadowError::Parse {
            location: "rows".into(),
            message: format!("expected {} rows, found {}", raw.n, raw.rows.len()),
        });
    }
    Shadow::from_rows(&raw.rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn skew_symmetry_is_enforced() {
        assert!(matches!(
            Shadow::from_rows(&[vec![0, 1], vec![1, 0]]),
            Err(ShadowError::NotSkewSymmetric { i: 0, j: 1 })
        ));
        assert!(matches!(
            Shadow::from_rows(&[vec![1]]),
            Err(ShadowError::NotSkewSymmetric { .. })
        ));
    }

    #[test]
    fn code_round_trip() {
        let s = Shadow::from_entries(4, &[(0, 3, 1), (3, 2, 1), (2, 1, 1), (1, 0, 1)]).unwrap();
        assert_eq!(Shadow::from_code(4, &s.code()), s);
    }

    #[test]
    fn quiver_round_trip() {
        let s = Shadow::from_entries(3, &[(0, 2, 2), (1, 0, 2), (2, 1, 2)]).unwrap();
        assert_eq!(Shadow::of_quiver(&s.to_quiver()), s);
    }

    #[test]
    fn json_round_trip() {
        let s = Shadow::from_entries(3, &[(0, 2, 1), (1, 0, 1), (2, 1, 2)]).unwrap();
        let text = to_json(&s);
        assert_eq!(from_json(&text).unwrap(), s);
        assert!(from_json(r#"{"n":2,"rows":[[0,1],[1,0]]}"#).is_err());
    }
}
