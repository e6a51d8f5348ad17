//! The semiadditive category of matrices over a field.
//!
//! Objects are natural numbers, morphisms from `n` to `m` are `m x n`
//! matrices, composition is matrix multiplication. Biproducts are witnessed
//! by explicit projection/injection matrices, and addition of morphisms is
//! recovered from the biproduct structure through the diagonal and
//! codiagonal mediators. Partitioning a matrix by composing with projections
//! and injections gives the index-free divide-and-conquer multiplication
//! [`dnc_mul`]: the only indexed kernel is the small-size fallback.

use crate::error::{Error, Result};
use crate::field::{DenseMatrix, FieldScalar, Scalar};
use crate::Side;

/// An object: a natural number. Dimension 0 is the zero object.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MatObj(pub usize);

/// A morphism `src -> tgt`, carried by a `tgt x src` matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatMor<T> {
    src: MatObj,
    tgt: MatObj,
    mat: DenseMatrix<T>,
}

impl<T: Scalar> MatMor<T> {
    pub fn new(src: MatObj, tgt: MatObj, mat: DenseMatrix<T>) -> Result<Self> {
        if mat.rows() != tgt.0 || mat.cols() != src.0 {
            return Err(Error::Shape(format!(
                "matrix {}x{} does not carry a morphism {} -> {}",
                mat.rows(),
                mat.cols(),
                src.0,
                tgt.0
            )));
        }
        Ok(MatMor { src, tgt, mat })
    }

    /// Wraps a matrix as the morphism its shape dictates.
    pub fn from_matrix(mat: DenseMatrix<T>) -> Self {
        MatMor {
            src: MatObj(mat.cols()),
            tgt: MatObj(mat.rows()),
            mat,
        }
    }

    pub fn identity(n: MatObj) -> Self {
        MatMor {
            src: n,
            tgt: n,
            mat: DenseMatrix::identity(n.0),
        }
    }

    pub fn zero(src: MatObj, tgt: MatObj) -> Self {
        MatMor {
            src,
            tgt,
            mat: DenseMatrix::zero(tgt.0, src.0),
        }
    }

    pub fn src(&self) -> MatObj {
        self.src
    }

    pub fn tgt(&self) -> MatObj {
        self.tgt
    }

    pub fn mat(&self) -> &DenseMatrix<T> {
        &self.mat
    }
}

/// Composition `g . f` (apply `f` first); matrix multiplication underneath.
pub fn compose<T: Scalar>(g: &MatMor<T>, f: &MatMor<T>) -> Result<MatMor<T>> {
    if f.tgt != g.src {
        return Err(Error::Object(format!(
            "cannot compose through {} != {}",
            f.tgt.0, g.src.0
        )));
    }
    Ok(MatMor {
        src: f.src,
        tgt: g.tgt,
        mat: g.mat.mat_mul(&f.mat)?,
    })
}

/// Projection out of the biproduct `n (+) m`: `(I_n | 0)` or `(0 | I_m)`.
pub fn proj<T: Scalar>(n: MatObj, m: MatObj, side: Side) -> MatMor<T> {
    let total = n.0 + m.0;
    let (dim, offset) = match side {
        Side::First => (n.0, 0),
        Side::Second => (m.0, n.0),
    };
    let mat = DenseMatrix::from_fn(dim, total, |i, j| {
        if j == i + offset {
            T::one()
        } else {
            T::zero()
        }
    });
    MatMor {
        src: MatObj(total),
        tgt: MatObj(dim),
        mat,
    }
}

/// Injection into the biproduct `n (+) m`; the transpose of [`proj`].
pub fn inj<T: Scalar>(n: MatObj, m: MatObj, side: Side) -> MatMor<T> {
    let p = proj::<T>(n, m, side);
    MatMor {
        src: p.tgt,
        tgt: p.src,
        mat: p.mat.transpose(),
    }
}

/// Mediator into the product: the vertical stack `(f // g)`.
pub fn pair<T: Scalar>(f: &MatMor<T>, g: &MatMor<T>) -> Result<MatMor<T>> {
    if f.src != g.src {
        return Err(Error::Object(format!(
            "pair requires a common source, got {} and {}",
            f.src.0, g.src.0
        )));
    }
    Ok(MatMor {
        src: f.src,
        tgt: MatObj(f.tgt.0 + g.tgt.0),
        mat: f.mat.vstack(&g.mat)?,
    })
}

/// Mediator out of the coproduct: the horizontal block `(h | k)`.
pub fn copair<T: Scalar>(h: &MatMor<T>, k: &MatMor<T>) -> Result<MatMor<T>> {
    if h.tgt != k.tgt {
        return Err(Error::Object(format!(
            "copair requires a common target, got {} and {}",
            h.tgt.0, k.tgt.0
        )));
    }
    Ok(MatMor {
        src: MatObj(h.src.0 + k.src.0),
        tgt: h.tgt,
        mat: h.mat.hstack(&k.mat)?,
    })
}

/// Block-diagonal sum of morphisms.
pub fn oplus<T: Scalar>(f: &MatMor<T>, g: &MatMor<T>) -> MatMor<T> {
    MatMor {
        src: MatObj(f.src.0 + g.src.0),
        tgt: MatObj(f.tgt.0 + g.tgt.0),
        mat: f.mat.direct_sum(&g.mat),
    }
}

/// Diagonal mediator `(id // id) : n -> n (+) n`.
pub fn diagonal<T: Scalar>(n: MatObj) -> MatMor<T> {
    let id = MatMor::identity(n);
    pair(&id, &id).expect("identities share a source")
}

/// Codiagonal mediator `(id | id) : n (+) n -> n`.
pub fn codiagonal<T: Scalar>(n: MatObj) -> MatMor<T> {
    let id = MatMor::identity(n);
    copair(&id, &id).expect("identities share a target")
}

/// Monoid addition induced by the biproduct structure:
/// `f + g = codiagonal . (f (+) g) . diagonal`.
///
/// Coincides with entrywise matrix addition; the entrywise route is the
/// independent oracle in the tests.
pub fn add_via_biproduct<T: Scalar>(f: &MatMor<T>, g: &MatMor<T>) -> Result<MatMor<T>> {
    if f.src != g.src || f.tgt != g.tgt {
        return Err(Error::Object(format!(
            "cannot add {} -> {} and {} -> {}",
            f.src.0, f.tgt.0, g.src.0, g.tgt.0
        )));
    }
    compose(
        &compose(&codiagonal(f.tgt), &oplus(f, g))?,
        &diagonal(f.src),
    )
}

/// The canonical morphism from the coproduct `n + m` to the product `n x m`,
/// determined by `p_k . r . i_j = delta(k, j)`. In the matrix category both
/// sides are the same object, and `r` is the identity matrix.
pub fn canonical_r<T: Scalar>(n: MatObj, m: MatObj) -> MatMor<T> {
    MatMor::identity(MatObj(n.0 + m.0))
}

fn split(n: usize) -> (usize, usize) {
    (n.div_ceil(2), n / 2)
}

/// Divide-and-conquer multiplication through biproduct partitioning.
///
/// Each object `n` splits as `ceil(n/2) (+) floor(n/2)`; blocks of the
/// factors are extracted as `p . a . i` composites, the four quadrants are
/// recombined with `pair`/`copair`, and block sums go through
/// [`add_via_biproduct`]. Sizes at or below `threshold` fall back to the
/// direct product. The result is exactly `compose(a, b)`.
pub fn dnc_mul<T: Scalar>(a: &MatMor<T>, b: &MatMor<T>, threshold: usize) -> Result<MatMor<T>> {
    if threshold == 0 {
        return Err(Error::Invalid("dnc_mul threshold must be >= 1".into()));
    }
    if b.tgt != a.src {
        return Err(Error::Object(format!(
            "cannot compose through {} != {}",
            b.tgt.0, a.src.0
        )));
    }
    dnc_rec(a, b, threshold)
}

fn dnc_rec<T: Scalar>(a: &MatMor<T>, b: &MatMor<T>, t: usize) -> Result<MatMor<T>> {
    let (z, y, x) = (a.tgt.0, a.src.0, b.src.0);
    if z <= t && y <= t && x <= t {
        return compose(a, b);
    }
    let (z1, z2) = split(z);
    let (y1, y2) = split(y);
    let (x1, x2) = split(x);
    let (z1, z2) = (MatObj(z1), MatObj(z2));
    let (y1, y2) = (MatObj(y1), MatObj(y2));
    let (x1, x2) = (MatObj(x1), MatObj(x2));

    let block = |row: Side, p_fst: MatObj, p_snd: MatObj, m: &MatMor<T>, col: Side,
                 i_fst: MatObj, i_snd: MatObj|
     -> Result<MatMor<T>> {
        compose(&compose(&proj(p_fst, p_snd, row), m)?, &inj(i_fst, i_snd, col))
    };

    let a11 = block(Side::First, z1, z2, a, Side::First, y1, y2)?;
    let a12 = block(Side::First, z1, z2, a, Side::Second, y1, y2)?;
    let a21 = block(Side::Second, z1, z2, a, Side::First, y1, y2)?;
    let a22 = block(Side::Second, z1, z2, a, Side::Second, y1, y2)?;
    let b11 = block(Side::First, y1, y2, b, Side::First, x1, x2)?;
    let b12 = block(Side::First, y1, y2, b, Side::Second, x1, x2)?;
    let b21 = block(Side::Second, y1, y2, b, Side::First, x1, x2)?;
    let b22 = block(Side::Second, y1, y2, b, Side::Second, x1, x2)?;

    let c11 = add_via_biproduct(&dnc_rec(&a11, &b11, t)?, &dnc_rec(&a12, &b21, t)?)?;
    let c12 = add_via_biproduct(&dnc_rec(&a11, &b12, t)?, &dnc_rec(&a12, &b22, t)?)?;
    let c21 = add_via_biproduct(&dnc_rec(&a21, &b11, t)?, &dnc_rec(&a22, &b21, t)?)?;
    let c22 = add_via_biproduct(&dnc_rec(&a21, &b12, t)?, &dnc_rec(&a22, &b22, t)?)?;

    copair(&pair(&c11, &c21)?, &pair(&c12, &c22)?)
}

/// Exact inverse of a morphism, when one exists.
pub fn inverse<T: FieldScalar>(f: &MatMor<T>) -> Option<MatMor<T>> {
    if f.src != f.tgt {
        return None;
    }
    Some(MatMor {
        src: f.tgt,
        tgt: f.src,
        mat: f.mat.inverse()?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{rat, rati, Mat, Rat};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    type M = MatMor<Rat>;

    fn ints(rows: &[&[i64]]) -> M {
        M::from_matrix(
            Mat::from_rows(rows.iter().map(|r| r.iter().map(|&v| rati(v)).collect()).collect())
                .unwrap(),
        )
    }

    fn random_mor(rng: &mut ChaCha8Rng, src: usize, tgt: usize) -> M {
        let mat = Mat::from_fn(tgt, src, |_, _| {
            rat(rng.gen_range(-9..=9), rng.gen_range(1..=9))
        });
        M::from_matrix(mat)
    }

    #[test]
    fn compose_basics() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let f = random_mor(&mut rng, 2, 3);
        assert_eq!(compose(&M::identity(MatObj(3)), &f).unwrap(), f);
        let g = random_mor(&mut rng, 4, 2);
        let fg = compose(&f, &g).unwrap();
        assert_eq!(fg.mat(), &f.mat().mat_mul(g.mat()).unwrap());
        assert!(compose(&g, &f).is_err());
    }

    #[test]
    fn proj_matrices() {
        let p1: M = proj(MatObj(1), MatObj(1), Side::First);
        assert_eq!(p1, ints(&[&[1, 0]]));
        let p2: M = proj(MatObj(1), MatObj(1), Side::Second);
        assert_eq!(p2, ints(&[&[0, 1]]));
        let i1: M = inj(MatObj(1), MatObj(1), Side::First);
        assert_eq!(i1.mat(), &p1.mat().transpose());
    }

    #[test]
    fn biproduct_axioms_small() {
        for n in 0..=6usize {
            for m in 0..=6usize {
                let (n, m) = (MatObj(n), MatObj(m));
                let pa: M = proj(n, m, Side::First);
                let pb: M = proj(n, m, Side::Second);
                let ia: M = inj(n, m, Side::First);
                let ib: M = inj(n, m, Side::Second);
                assert_eq!(compose(&pa, &ia).unwrap(), M::identity(n));
                assert_eq!(compose(&pb, &ib).unwrap(), M::identity(m));
                assert_eq!(compose(&pa, &ib).unwrap(), M::zero(m, n));
                assert_eq!(compose(&pb, &ia).unwrap(), M::zero(n, m));
                let total = MatObj(n.0 + m.0);
                let sum = add_via_biproduct(
                    &compose(&ia, &pa).unwrap(),
                    &compose(&ib, &pb).unwrap(),
                )
                .unwrap();
                assert_eq!(sum, M::identity(total));
            }
        }
    }

    #[test]
    fn pair_copair_mediators() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let f = random_mor(&mut rng, 2, 3);
        let g = random_mor(&mut rng, 2, 4);
        let b = pair(&f, &g).unwrap();
        let p1: M = proj(MatObj(3), MatObj(4), Side::First);
        let p2: M = proj(MatObj(3), MatObj(4), Side::Second);
        assert_eq!(compose(&p1, &b).unwrap(), f);
        assert_eq!(compose(&p2, &b).unwrap(), g);

        let h = random_mor(&mut rng, 3, 2);
        let k = random_mor(&mut rng, 4, 2);
        let c = copair(&h, &k).unwrap();
        let i2: M = inj(MatObj(3), MatObj(4), Side::Second);
        assert_eq!(compose(&c, &i2).unwrap(), k);

        let delta: M = diagonal(MatObj(1));
        assert_eq!(delta, ints(&[&[1], &[1]]));
    }

    #[test]
    fn addition_via_biproduct_matches_entrywise() {
        let f = ints(&[&[1, 2], &[3, 4]]);
        let g = ints(&[&[10, 0], &[0, 10]]);
        let sum = add_via_biproduct(&f, &g).unwrap();
        assert_eq!(sum, ints(&[&[11, 2], &[3, 14]]));

        let zero = M::zero(MatObj(2), MatObj(2));
        assert_eq!(add_via_biproduct(&f, &zero).unwrap(), f);

        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..50 {
            let a = random_mor(&mut rng, 3, 3);
            let b = random_mor(&mut rng, 3, 3);
            let lhs = add_via_biproduct(&a, &b).unwrap();
            assert_eq!(lhs.mat(), &a.mat().mat_add(b.mat()).unwrap());
            assert_eq!(lhs, add_via_biproduct(&b, &a).unwrap());
        }
    }

    #[test]
    fn canonical_r_properties() {
        assert_eq!(canonical_r::<Rat>(MatObj(1), MatObj(1)), M::identity(MatObj(2)));
        let r: M = canonical_r(MatObj(2), MatObj(3));
        let p1: M = proj(MatObj(2), MatObj(3), Side::First);
        let i2: M = inj(MatObj(2), MatObj(3), Side::Second);
        let picked = compose(&compose(&p1, &r).unwrap(), &i2).unwrap();
        assert!(picked.mat().is_zero());
        for n in 0..=4usize {
            for m in 0..=4usize {
                let r: M = canonical_r(MatObj(n), MatObj(m));
                let inv = inverse(&r).expect("canonical morphism is invertible");
                assert_eq!(compose(&r, &inv).unwrap(), M::identity(MatObj(n + m)));
            }
        }
    }

    #[test]
    fn dnc_mul_matches_direct_product() {
        let a = ints(&[&[3]]);
        let b = ints(&[&[4]]);
        assert_eq!(dnc_mul(&a, &b, 1).unwrap(), ints(&[&[12]]));

        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let a = random_mor(&mut rng, 8, 8);
        let b = random_mor(&mut rng, 8, 8);
        assert_eq!(dnc_mul(&a, &b, 2).unwrap(), compose(&a, &b).unwrap());

        // odd splits on both sides
        let a = random_mor(&mut rng, 5, 7);
        let b = random_mor(&mut rng, 9, 5);
        assert_eq!(dnc_mul(&a, &b, 2).unwrap(), compose(&a, &b).unwrap());

        assert!(dnc_mul(&a, &b, 0).is_err());
    }
}
