use std::cmp::Ordering;

use crate::error::QuiverError;
use crate::quiver::Quiver;

/// Largest vertex count accepted by the brute-force canonical form.
pub const MAX_CANON_VERTICES: usize = 8;

/// Calls `f` on every permutation of `0..n` (Heap's algorithm, fixed order).
pub fn for_each_permutation(n: usize, mut f: impl FnMut(&[usize])) {
    let mut perm: Vec<usize> = (0..n).collect();
    let mut c = vec![0usize; n];
    f(&perm);
    let mut i = 1;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            f(&perm);
            c[i] += 1;
            i = 1;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

/// Compares the relabeled matrix `sigma · q` (new vertex `k` is old vertex
/// `sigma[k]`) with `best` in row-major order.
fn cmp_relabeled(q: &Quiver, sigma: &[usize], best: &[u8]) -> Ordering {
    let n = q.n();
    for i in 0..n {
        for j in 0..n {
            let ord = q.mult(sigma[i], sigma[j]).cmp(&best[i * n + j]);
            if ord != Ordering::Equal {
                return ord;
            }
        }
    }
    Ordering::Equal
}

/// Lexicographically smallest row-major multiplicity matrix over all vertex
/// relabelings, with the relabeling (`perm[old] = new`) that produces it.
pub fn canonical_form(q: &Quiver) -> Result<(Quiver, Vec<usize>), QuiverError> {
    let n = q.n();
    if n > MAX_CANON_VERTICES {
        return Err(QuiverError::TooLarge {
            n,
            max: MAX_CANON_VERTICES,
        });
    }
    let mut best = q.as_flat().to_vec();
    let mut best_sigma: Vec<usize> = (0..n).collect();
    for_each_permutation(n, |sigma| {
        if cmp_relabeled(q, sigma, &best) == Ordering::Less {
            for i in 0..n {
                for j in 0..n {
                    best[i * n + j] = q.mult(sigma[i], sigma[j]);
                }
            }
            best_sigma.copy_from_slice(sigma);
        }
    });
    let mut perm = vec![0; n];
    for (new, &old) in best_sigma.iter().enumerate() {
        perm[old] = new;
    }
    Ok((Quiver::from_raw(n, best), perm))
}

/// Canonical representative of `q`; see [`canonical_form`].
pub fn canonical(q: &Quiver) -> Result<Quiver, QuiverError> {
    canonical_form(q).map(|(c, _)| c)
}

/// Canonical representative of the pair `{q, q^op}`: the smaller of the two
/// canonical forms.
pub fn canonical_up_to_opposite(q: &Quiver) -> Result<Quiver, QuiverError> {
    let a = canonical(q)?;
    let b = canonical(&q.opposite())?;
    Ok(a.min(b))
}

/// Isomorphism test by canonical forms; quivers of different size are never
/// isomorphic.
pub fn is_isomorphic(a: &Quiver, b: &Quiver) -> Result<bool, QuiverError> {
    if a.n() != b.n() || a.arrow_count() != b.arrow_count() {
        return Ok(false);
    }
    Ok(canonical(a)? == canonical(b)?)
}

/// Isomorphic to `b` or to `b^op`.
pub fn is_isomorphic_or_opposite(a: &Quiver, b: &Quiver) -> Result<bool, QuiverError> {
    Ok(is_isomorphic(a, b)? || is_isomorphic(a, &b.opposite())?)
}
