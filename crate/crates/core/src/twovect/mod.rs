//! The concrete two-level matrix calculus.
//!
//! One level up from the matrix category: objects are natural numbers,
//! a 1-morphism `n -> m` is an `m x n` grid whose entries are direct-sum
//! decompositions of vector spaces (ordered lists of component dimensions),
//! and a 2-morphism is a grid of block matrices between the entry
//! decompositions. Horizontal composition of 1-morphisms multiplies grids
//! with the tensor product of decompositions in the entries; vertical
//! composition of 2-morphisms is entrywise matrix multiplication; horizontal
//! composition of 2-morphisms is an entrywise direct sum of Kronecker
//! products laid out block by block.
//!
//! Dimension-0 components are kept, never silently dropped: deleting them is
//! the job of [`normalize`], which returns the deletion as an explicit
//! invertible 2-morphism. That choice is what makes the weak biproduct
//! structure of [`crate::biproduct`] honestly weak and testable.
//!
//! All values are immutable after construction and all operations are pure.

mod structural;
mod twomor;

pub use structural::{associator, distributor, distributor_right, perm_iso};
pub use twomor::{
    add_two, flatten, hcompose2, id_two, inverse, local_inj, local_proj, oplus_two, vcompose2,
    whisker_left, whisker_right, zero_two, TwoMor,
};

use std::fmt;

use crate::error::{Error, Result};
use crate::matcat::{MatMor, MatObj};
use crate::{rati, Mat};

/// An ordered direct-sum decomposition of a vector space: the list of
/// component dimensions. The empty list is the zero space; components of
/// dimension 0 are legal and only removed by explicit [`normalize`].
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SpaceDecomp(Vec<usize>);

impl SpaceDecomp {
    pub fn new(components: Vec<usize>) -> Self {
        SpaceDecomp(components)
    }

    /// The zero space: no components at all.
    pub fn empty() -> Self {
        SpaceDecomp(Vec::new())
    }

    /// A single component of the given dimension.
    pub fn single(dim: usize) -> Self {
        SpaceDecomp(vec![dim])
    }

    pub fn components(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    /// Prefix sums: `offsets()[i]` is the first row/column of component `i`,
    /// and the final element equals `total()`.
    pub fn offsets(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.0.len() + 1);
        let mut acc = 0;
        out.push(0);
        for d in &self.0 {
            acc += d;
            out.push(acc);
        }
        out
    }

    /// Tensor product of decompositions: the row-major pair list with
    /// component dimensions multiplied, `self` as the outer factor.
    pub fn tensor(&self, other: &Self) -> Self {
        let mut out = Vec::with_capacity(self.0.len() * other.0.len());
        for &a in &self.0 {
            for &b in &other.0 {
                out.push(a * b);
            }
        }
        SpaceDecomp(out)
    }

    /// Concatenation: the decomposition of the direct sum.
    pub fn concat(&self, other: &Self) -> Self {
        let mut out = self.0.clone();
        out.extend_from_slice(&other.0);
        SpaceDecomp(out)
    }

    /// The same space with all dimension-0 components deleted.
    pub fn normalized(&self) -> Self {
        SpaceDecomp(self.0.iter().copied().filter(|&d| d > 0).collect())
    }
}

impl fmt::Debug for SpaceDecomp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// A 1-morphism `src -> tgt`: a `tgt x src` grid of [`SpaceDecomp`] entries.
/// Entry `(k, j)` sits at target index `k` and source index `j`.
#[derive(Clone, PartialEq, Eq)]
pub struct OneMor {
    src: usize,
    tgt: usize,
    entries: Vec<SpaceDecomp>,
}

impl OneMor {
    pub fn new(src: usize, tgt: usize, entries: Vec<SpaceDecomp>) -> Result<Self> {
        if entries.len() != src * tgt {
            return Err(Error::Shape(format!(
                "grid of {} entries does not fill {} x {}",
                entries.len(),
                tgt,
                src
            )));
        }
        Ok(OneMor { src, tgt, entries })
    }

    pub fn from_fn(src: usize, tgt: usize, mut f: impl FnMut(usize, usize) -> SpaceDecomp) -> Self {
        let mut entries = Vec::with_capacity(src * tgt);
        for k in 0..tgt {
            for j in 0..src {
                entries.push(f(k, j));
            }
        }
        OneMor { src, tgt, entries }
    }

    pub fn src(&self) -> usize {
        self.src
    }

    pub fn tgt(&self) -> usize {
        self.tgt
    }

    pub fn entry(&self, k: usize, j: usize) -> &SpaceDecomp {
        debug_assert!(k < self.tgt && j < self.src);
        &self.entries[k * self.src + j]
    }

    pub fn entries(&self) -> &[SpaceDecomp] {
        &self.entries
    }

    /// True when every entry has total dimension zero.
    pub fn is_zero_dim(&self) -> bool {
        self.entries.iter().all(|d| d.total() == 0)
    }
}

impl fmt::Debug for OneMor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "OneMor({} -> {}) [", self.src, self.tgt)?;
        for k in 0..self.tgt {
            if k > 0 {
                write!(f, "; ")?;
            }
            for j in 0..self.src {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{:?}", self.entry(k, j))?;
            }
        }
        write!(f, "]")
    }
}

/// Identity 1-morphism: single dimension-1 components on the diagonal,
/// empty decompositions elsewhere.
pub fn id_one(n: usize) -> OneMor {
    OneMor::from_fn(n, n, |k, j| {
        if k == j {
            SpaceDecomp::single(1)
        } else {
            SpaceDecomp::empty()
        }
    })
}

/// Zero 1-morphism: every entry is the empty decomposition.
pub fn zero_one(src: usize, tgt: usize) -> OneMor {
    OneMor::from_fn(src, tgt, |_, _| SpaceDecomp::empty())
}

/// Horizontal composition `r . f` (apply `f` first; `f.tgt == r.src`).
///
/// Entry `(l, j)` is the concatenation, over the contracted index `k`
/// ascending, of `r(l, k) (x) f(k, j)` with `r` as the outer tensor factor.
pub fn hcompose1(r: &OneMor, f: &OneMor) -> Result<OneMor> {
    if f.tgt != r.src {
        return Err(Error::Object(format!(
            "cannot compose through {} != {}",
            f.tgt, r.src
        )));
    }
    Ok(OneMor::from_fn(f.src, r.tgt, |l, j| {
        let mut acc = SpaceDecomp::empty();
        for k in 0..r.src {
            acc = acc.concat(&r.entry(l, k).tensor(f.entry(k, j)));
        }
        acc
    }))
}

/// Biproduct of parallel 1-morphisms: entrywise concatenation.
pub fn oplus_one(f: &OneMor, g: &OneMor) -> Result<OneMor> {
    if f.src != g.src || f.tgt != g.tgt {
        return Err(Error::Object(format!(
            "cannot sum {} -> {} with {} -> {}",
            f.src, f.tgt, g.src, g.tgt
        )));
    }
    Ok(OneMor::from_fn(f.src, f.tgt, |k, j| {
        f.entry(k, j).concat(g.entry(k, j))
    }))
}

/// Forgets component structure: the matrix of entry totals, viewed in the
/// matrix category. Multiplicative oracle: `decat(r . f) = decat(r) . decat(f)`.
pub fn decat(f: &OneMor) -> MatMor<crate::Rat> {
    let mat = Mat::from_fn(f.tgt, f.src, |k, j| rati(f.entry(k, j).total() as i64));
    MatMor::new(MatObj(f.src), MatObj(f.tgt), mat).expect("grid shape carries over")
}

/// Deletes all dimension-0 components and returns the cleaned 1-morphism
/// together with the mutually inverse deletion 2-isomorphisms
/// `f => f'` and `f' => f`. Totals are unchanged, so both carry identity
/// matrices; only the typing (the component partition) differs.
pub fn normalize(f: &OneMor) -> (OneMor, TwoMor, TwoMor) {
    let cleaned = OneMor::from_fn(f.src, f.tgt, |k, j| f.entry(k, j).normalized());
    let mats: Vec<Mat> = f
        .entries
        .iter()
        .map(|d| Mat::identity(d.total()))
        .collect();
    let fwd = TwoMor::new(f.clone(), cleaned.clone(), mats.clone())
        .expect("deletion preserves totals");
    let bwd = TwoMor::new(cleaned.clone(), f.clone(), mats).expect("deletion preserves totals");
    (cleaned, fwd, bwd)
}

#[cfg(test)]
mod tests;
