//! 2-morphisms: grids of block matrices between entry decompositions.

use std::fmt;

use crate::error::{Error, Result};
use crate::twovect::{hcompose1, oplus_one, OneMor, SpaceDecomp};
use crate::{Mat, Side};

/// A 2-morphism between parallel 1-morphisms.
///
/// Entry `(k, j)` is a `tgt(k,j).total() x src(k,j).total()` matrix carrying
/// the block partition induced by the two entry decompositions: block
/// `(beta, alpha)` is the component map from source component `alpha` to
/// target component `beta`.
#[derive(Clone, PartialEq, Eq)]
pub struct TwoMor {
    src: OneMor,
    tgt: OneMor,
    entries: Vec<Mat>,
}

impl TwoMor {
    pub fn new(src: OneMor, tgt: OneMor, entries: Vec<Mat>) -> Result<Self> {
        if src.src() != tgt.src() || src.tgt() != tgt.tgt() {
            return Err(Error::Object(format!(
                "2-morphism requires parallel 1-morphisms, got {} -> {} and {} -> {}",
                src.src(),
                src.tgt(),
                tgt.src(),
                tgt.tgt()
            )));
        }
        if entries.len() != src.src() * src.tgt() {
            return Err(Error::Shape(format!(
                "expected {} entry matrices, got {}",
                src.src() * src.tgt(),
                entries.len()
            )));
        }
        for k in 0..src.tgt() {
            for j in 0..src.src() {
                let m = &entries[k * src.src() + j];
                let (want_r, want_c) = (tgt.entry(k, j).total(), src.entry(k, j).total());
                if m.rows() != want_r || m.cols() != want_c {
                    return Err(Error::Shape(format!(
                        "entry ({}, {}) is {}x{}, expected {}x{}",
                        k,
                        j,
                        m.rows(),
                        m.cols(),
                        want_r,
                        want_c
                    )));
                }
            }
        }
        Ok(TwoMor { src, tgt, entries })
    }

    pub fn from_fn(src: OneMor, tgt: OneMor, mut f: impl FnMut(usize, usize) -> Mat) -> Result<Self> {
        let mut entries = Vec::with_capacity(src.src() * src.tgt());
        for k in 0..src.tgt() {
            for j in 0..src.src() {
                entries.push(f(k, j));
            }
        }
        TwoMor::new(src, tgt, entries)
    }

    pub fn src(&self) -> &OneMor {
        &self.src
    }

    pub fn tgt(&self) -> &OneMor {
        &self.tgt
    }

    pub fn entry(&self, k: usize, j: usize) -> &Mat {
        debug_assert!(k < self.src.tgt() && j < self.src.src());
        &self.entries[k * self.src.src() + j]
    }

    pub fn entries(&self) -> &[Mat] {
        &self.entries
    }

    /// Component block `(beta, alpha)` of entry `(k, j)`.
    pub fn block(&self, k: usize, j: usize, beta: usize, alpha: usize) -> Mat {
        let r_off = self.tgt.entry(k, j).offsets();
        let c_off = self.src.entry(k, j).offsets();
        self.entry(k, j)
            .submatrix(
                r_off[beta],
                c_off[alpha],
                r_off[beta + 1] - r_off[beta],
                c_off[alpha + 1] - c_off[alpha],
            )
            .expect("block offsets stay in range")
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Mat::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.src == self.tgt && self.entries.iter().all(Mat::is_identity)
    }
}

impl fmt::Debug for TwoMor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TwoMor {{ src: {:?}, tgt: {:?}, entries: [", self.src, self.tgt)?;
        for (i, m) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{:?}", m)?;
        }
        write!(f, "] }}")
    }
}

/// Identity 2-morphism on `f`.
pub fn id_two(f: &OneMor) -> TwoMor {
    let entries = f.entries().iter().map(|d| Mat::identity(d.total())).collect();
    TwoMor::new(f.clone(), f.clone(), entries).expect("identity shapes are consistent")
}

/// Zero 2-morphism `f => g` for parallel `f`, `g`.
pub fn zero_two(f: &OneMor, g: &OneMor) -> Result<TwoMor> {
    TwoMor::from_fn(f.clone(), g.clone(), |k, j| {
        Mat::zero(g.entry(k, j).total(), f.entry(k, j).total())
    })
}

/// Vertical composition `eta . theta` (apply `theta` first): entrywise
/// matrix multiplication, contracting the shared middle 1-morphism blockwise.
pub fn vcompose2(eta: &TwoMor, theta: &TwoMor) -> Result<TwoMor> {
    if theta.tgt != eta.src {
        return Err(Error::Object(
            "vertical composition requires matching middle 1-morphism".into(),
        ));
    }
    let entries = eta
        .entries
        .iter()
        .zip(&theta.entries)
        .map(|(e, t)| e.mat_mul(t))
        .collect::<Result<Vec<_>>>()?;
    TwoMor::new(theta.src.clone(), eta.tgt.clone(), entries)
}

/// Kronecker product of two partitioned matrices, laid out block by block:
/// the result carries the tensor partitions (`x` outer), and block
/// `((c, d), (a, b))` equals `kron(x[c, a], t[d, b])`.
///
/// This differs from the raw Kronecker product by a row/column shuffle: the
/// raw product interleaves the inner components, while the block layout
/// keeps each tensor component contiguous, as the entry partitions require.
fn blocked_kron(
    x: &Mat,
    x_rows: &SpaceDecomp,
    x_cols: &SpaceDecomp,
    t: &Mat,
    t_rows: &SpaceDecomp,
    t_cols: &SpaceDecomp,
) -> Mat {
    let mut out = Mat::zero(x.rows() * t.rows(), x.cols() * t.cols());
    let row_off = x_rows.tensor(t_rows).offsets();
    let col_off = x_cols.tensor(t_cols).offsets();
    let (xro, xco) = (x_rows.offsets(), x_cols.offsets());
    let (tro, tco) = (t_rows.offsets(), t_cols.offsets());
    for c in 0..x_rows.len() {
        for d in 0..t_rows.len() {
            let r0 = row_off[c * t_rows.len() + d];
            let (xr, tr) = (x_rows.components()[c], t_rows.components()[d]);
            for a in 0..x_cols.len() {
                for b in 0..t_cols.len() {
                    let c0 = col_off[a * t_cols.len() + b];
                    let (xc, tc) = (x_cols.components()[a], t_cols.components()[b]);
                    for u in 0..xr {
                        for s in 0..xc {
                            let xv = &x[(xro[c] + u, xco[a] + s)];
                            if num::Zero::is_zero(xv) {
                                continue;
                            }
                            for v in 0..tr {
                                for w in 0..tc {
                                    out[(r0 + u * tr + v, c0 + s * tc + w)] =
                                        xv.clone() * t[(tro[d] + v, tco[b] + w)].clone();
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

/// Horizontal composition `xi . theta` of 2-morphisms
/// (`theta: f => g : A -> B`, `xi: h => k : B -> C`).
///
/// Entry `(m, j)` is the direct sum, over the contracted object index `k`
/// ascending, of the block-layout Kronecker product of `xi(m, k)` with
/// `theta(k, j)`; source and target are the horizontal composites of the
/// sources and targets.
pub fn hcompose2(xi: &TwoMor, theta: &TwoMor) -> Result<TwoMor> {
    if theta.src.tgt() != xi.src.src() {
        return Err(Error::Object(format!(
            "cannot compose through {} != {}",
            theta.src.tgt(),
            xi.src.src()
        )));
    }
    let src = hcompose1(&xi.src, &theta.src)?;
    let tgt = hcompose1(&xi.tgt, &theta.tgt)?;
    let mid = xi.src.src();
    TwoMor::from_fn(src, tgt, |m, j| {
        let mut acc = Mat::zero(0, 0);
        for k in 0..mid {
            let part = blocked_kron(
                xi.entry(m, k),
                xi.tgt.entry(m, k),
                xi.src.entry(m, k),
                theta.entry(k, j),
                theta.tgt.entry(k, j),
                theta.src.entry(k, j),
            );
            acc = acc.direct_sum(&part);
        }
        acc
    })
}

/// Whisker on the left: `f . theta` as `hcompose2(id_two(f), theta)`.
pub fn whisker_left(f: &OneMor, theta: &TwoMor) -> Result<TwoMor> {
    hcompose2(&id_two(f), theta)
}

/// Whisker on the right: `theta . f` as `hcompose2(theta, id_two(f))`.
pub fn whisker_right(theta: &TwoMor, f: &OneMor) -> Result<TwoMor> {
    hcompose2(theta, &id_two(f))
}

/// Addition of parallel 2-morphisms: entrywise matrix addition.
pub fn add_two(a: &TwoMor, b: &TwoMor) -> Result<TwoMor> {
    if a.src != b.src || a.tgt != b.tgt {
        return Err(Error::Object(
            "addition requires equal sources and targets".into(),
        ));
    }
    let entries = a
        .entries
        .iter()
        .zip(&b.entries)
        .map(|(x, y)| x.mat_add(y))
        .collect::<Result<Vec<_>>>()?;
    TwoMor::new(a.src.clone(), a.tgt.clone(), entries)
}

/// Biproduct of 2-morphisms in the hom-category: entrywise block-diagonal
/// sum, `a (+) b : f (+) g => f' (+) g'`.
pub fn oplus_two(a: &TwoMor, b: &TwoMor) -> Result<TwoMor> {
    let src = oplus_one(&a.src, &b.src)?;
    let tgt = oplus_one(&a.tgt, &b.tgt)?;
    let entries = a
        .entries
        .iter()
        .zip(&b.entries)
        .map(|(x, y)| x.direct_sum(y))
        .collect();
    TwoMor::new(src, tgt, entries)
}

/// Local projection `pi : f (+) g => f` (or `=> g`), the per-entry
/// `(I | 0)` block rows.
pub fn local_proj(f: &OneMor, g: &OneMor, side: Side) -> Result<TwoMor> {
    let sum = oplus_one(f, g)?;
    let pick = match side {
        Side::First => f,
        Side::Second => g,
    };
    TwoMor::from_fn(sum.clone(), pick.clone(), |k, j| {
        let (ft, gt) = (f.entry(k, j).total(), g.entry(k, j).total());
        match side {
            Side::First => Mat::identity(ft)
                .hstack(&Mat::zero(ft, gt))
                .expect("row counts agree"),
            Side::Second => Mat::zero(gt, ft)
                .hstack(&Mat::identity(gt))
                .expect("row counts agree"),
        }
    })
}

/// Local injection `nu : f => f (+) g` (or `g => f (+) g`); the transpose
/// of the corresponding [`local_proj`].
pub fn local_inj(f: &OneMor, g: &OneMor, side: Side) -> Result<TwoMor> {
    let p = local_proj(f, g, side)?;
    let entries = p.entries.iter().map(Mat::transpose).collect();
    TwoMor::new(p.tgt.clone(), p.src.clone(), entries)
}

/// Exact two-sided inverse; errors when some entry is not square or not
/// invertible.
pub fn inverse(t: &TwoMor) -> Result<TwoMor> {
    let mut entries = Vec::with_capacity(t.entries.len());
    for k in 0..t.src.tgt() {
        for j in 0..t.src.src() {
            let inv = t.entry(k, j).inverse().ok_or_else(|| {
                Error::NotInvertible(format!("entry ({}, {}) has no inverse", k, j))
            })?;
            entries.push(inv);
        }
    }
    TwoMor::new(t.tgt.clone(), t.src.clone(), entries)
}

/// Forgets the block partitions: the raw grid of entry matrices.
/// This is the hook for the brute-force oracles in the test suites, which
/// recompute the compositions directly from these matrices.
pub fn flatten(t: &TwoMor) -> Vec<Mat> {
    t.entries.clone()
}
