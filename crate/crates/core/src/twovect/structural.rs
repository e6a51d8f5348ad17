//! Structural 2-isomorphisms of the concrete model.
//!
//! Horizontal composition of 1-morphisms is associative only after
//! forgetting component structure: the two bracketings enumerate the same
//! tensor components in a different order. The same happens when
//! composition meets a biproduct of 1-morphisms. Every such coincidence is
//! witnessed here by an explicit permutation 2-isomorphism whose entries
//! are 0/1 matrices built from identity blocks; nothing is ever identified
//! silently.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::twovect::{hcompose1, oplus_one, OneMor, TwoMor};
use crate::Mat;

/// Builds the permutation 2-isomorphism `src => tgt` given, per entry, the
/// component relocation map: `perm[p] = q` sends source component `p` to
/// target component `q` (dimensions must agree). Entries are placed as
/// identity blocks, so the result is invertible by construction.
pub fn perm_iso(src: &OneMor, tgt: &OneMor, perms: &[Vec<usize>]) -> Result<TwoMor> {
    if perms.len() != src.src() * src.tgt() {
        return Err(Error::Shape("one permutation per entry required".into()));
    }
    let mut entries = Vec::with_capacity(perms.len());
    for k in 0..src.tgt() {
        for j in 0..src.src() {
            let s = src.entry(k, j);
            let t = tgt.entry(k, j);
            let perm = &perms[k * src.src() + j];
            if perm.len() != s.len() {
                return Err(Error::Shape(format!(
                    "entry ({}, {}): permutation of length {} for {} components",
                    k,
                    j,
                    perm.len(),
                    s.len()
                )));
            }
            let (s_off, t_off) = (s.offsets(), t.offsets());
            let mut m = Mat::zero(t.total(), s.total());
            for (p, &q) in perm.iter().enumerate() {
                let dim = s.components()[p];
                if t.components().get(q) != Some(&dim) {
                    return Err(Error::Shape(format!(
                        "entry ({}, {}): component {} of dim {} cannot move to slot {}",
                        k, j, p, dim, q
                    )));
                }
                m.paste(t_off[q], s_off[p], &Mat::identity(dim));
            }
            entries.push(m);
        }
    }
    TwoMor::new(src.clone(), tgt.clone(), entries)
}

/// Builds a permutation 2-iso between two enumerations of the same keyed
/// component family. For entry `(k, j)`, `left(k, j)` and `right(k, j)`
/// list `(key, dim)` pairs; the iso moves each left component to the right
/// slot holding the same key.
fn keyed_perm_iso<K: Eq + std::hash::Hash + std::fmt::Debug>(
    src: &OneMor,
    tgt: &OneMor,
    mut left: impl FnMut(usize, usize) -> Vec<(K, usize)>,
    mut right: impl FnMut(usize, usize) -> Vec<(K, usize)>,
) -> Result<TwoMor> {
    let mut perms = Vec::with_capacity(src.src() * src.tgt());
    for k in 0..src.tgt() {
        for j in 0..src.src() {
            let l = left(k, j);
            let r = right(k, j);
            let slots: HashMap<K, usize> =
                r.into_iter().enumerate().map(|(i, (key, _))| (key, i)).collect();
            let perm = l
                .into_iter()
                .map(|(key, _)| {
                    slots.get(&key).copied().ok_or_else(|| {
                        Error::Shape(format!("entry ({}, {}): unmatched component {:?}", k, j, key))
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            perms.push(perm);
        }
    }
    perm_iso(src, tgt, &perms)
}

/// Component keys of an `hcompose1(r, f)` entry `(l, j)`:
/// `(k, a, b)` for contracted index `k`, outer component `a`, inner `b`.
fn composite_keys(r: &OneMor, f: &OneMor, l: usize, j: usize) -> Vec<((usize, usize, usize), usize)> {
    let mut out = Vec::new();
    for k in 0..r.src() {
        for (a, &da) in r.entry(l, k).components().iter().enumerate() {
            for (b, &db) in f.entry(k, j).components().iter().enumerate() {
                out.push(((k, a, b), da * db));
            }
        }
    }
    out
}

/// The associator `(r . f) . e  =>  r . (f . e)` for a composable triple
/// (`e` first). Each entry is a permutation matrix relocating components
/// keyed `(k, (c, a, b), g)` to `(c, a, (k, b, g))`; when any member of the
/// triple is an identity the permutation is the identity.
pub fn associator(r: &OneMor, f: &OneMor, e: &OneMor) -> Result<TwoMor> {
    let rf = hcompose1(r, f)?;
    let fe = hcompose1(f, e)?;
    let left = hcompose1(&rf, e)?;
    let right = hcompose1(r, &fe)?;
    // Canonical key of one component: (contracted k, contracted c, a, b, g).
    keyed_perm_iso(
        &left,
        &right,
        |l, j| {
            let mut out = Vec::new();
            for k in 0..e.tgt() {
                for ((c, a, b), d_rf) in composite_keys(r, f, l, k) {
                    for (g, &dg) in e.entry(k, j).components().iter().enumerate() {
                        out.push(((k, c, a, b, g), d_rf * dg));
                    }
                }
            }
            out
        },
        |l, j| {
            let mut out = Vec::new();
            for c in 0..r.src() {
                for (a, &da) in r.entry(l, c).components().iter().enumerate() {
                    for ((k, b, g), d_fe) in composite_keys(f, e, c, j) {
                        out.push(((k, c, a, b, g), da * d_fe));
                    }
                }
            }
            out
        },
    )
}

/// The left distributor and its inverse:
/// `alpha : f . (g (+) h)  =>  (f . g) (+) (f . h)`.
///
/// Both directions are pure component permutations; the usual equations
/// (projection/injection compatibility, both composites identities) are
/// checked by the law suite rather than assumed.
pub fn distributor(f: &OneMor, g: &OneMor, h: &OneMor) -> Result<(TwoMor, TwoMor)> {
    let gh = oplus_one(g, h)?;
    let lhs = hcompose1(f, &gh)?;
    let rhs = oplus_one(&hcompose1(f, g)?, &hcompose1(f, h)?)?;
    let alpha = keyed_perm_iso(
        &lhs,
        &rhs,
        |c, j| {
            let mut out = Vec::new();
            for k in 0..f.src() {
                let g_len = g.entry(k, j).len();
                for (a, &da) in f.entry(c, k).components().iter().enumerate() {
                    for (b, &db) in gh.entry(k, j).components().iter().enumerate() {
                        let side = usize::from(b >= g_len);
                        let b_local = if side == 0 { b } else { b - g_len };
                        out.push(((side, k, a, b_local), da * db));
                    }
                }
            }
            out
        },
        |c, j| {
            let mut out = Vec::new();
            for (side, part) in [g, h].into_iter().enumerate() {
                for ((k, a, b), d) in composite_keys(f, part, c, j) {
                    out.push(((side, k, a, b), d));
                }
            }
            out
        },
    )?;
    let alpha_inv = transpose_perm(&alpha);
    Ok((alpha, alpha_inv))
}

/// The right distributor and its inverse:
/// `(u (+) v) . f  =>  (u . f) (+) (v . f)`.
pub fn distributor_right(u: &OneMor, v: &OneMor, f: &OneMor) -> Result<(TwoMor, TwoMor)> {
    let uv = oplus_one(u, v)?;
    let lhs = hcompose1(&uv, f)?;
    let rhs = oplus_one(&hcompose1(u, f)?, &hcompose1(v, f)?)?;
    let alpha = keyed_perm_iso(
        &lhs,
        &rhs,
        |c, j| {
            let mut out = Vec::new();
            for k in 0..f.tgt() {
                let u_len = u.entry(c, k).len();
                for (a, &da) in uv.entry(c, k).components().iter().enumerate() {
                    for (b, &db) in f.entry(k, j).components().iter().enumerate() {
                        let side = usize::from(a >= u_len);
                        let a_local = if side == 0 { a } else { a - u_len };
                        out.push(((side, k, a_local, b), da * db));
                    }
                }
            }
            out
        },
        |c, j| {
            let mut out = Vec::new();
            for (side, part) in [u, v].into_iter().enumerate() {
                for ((k, a, b), d) in composite_keys(part, f, c, j) {
                    out.push(((side, k, a, b), d));
                }
            }
            out
        },
    )?;
    let alpha_inv = transpose_perm(&alpha);
    Ok((alpha, alpha_inv))
}

/// Inverse of a permutation 2-iso: transpose every entry.
fn transpose_perm(t: &TwoMor) -> TwoMor {
    let entries = t.entries().iter().map(Mat::transpose).collect();
    TwoMor::new(t.tgt().clone(), t.src().clone(), entries)
        .expect("transposing a permutation iso swaps source and target")
}
