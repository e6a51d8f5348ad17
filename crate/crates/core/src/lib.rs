//! boxplus: an exact engine for block-matrix calculus in semiadditive
//! matrix categories.
//!
//! The crate builds up a small tower:
//!
//! - [`field`] — exact scalars and dense matrices (generic over the scalar).
//! - [`matcat`] — the matrix category over a field: objects are naturals,
//!   morphisms are matrices, with biproducts, mediators, addition through
//!   diagonal/codiagonal maps, and biproduct-partitioned divide-and-conquer
//!   multiplication.
//! - [`twovect`] — one level up: 1-morphisms are grids of direct-sum
//!   decomposed vector spaces, 2-morphisms are grids of block matrices, with
//!   horizontal/vertical composition, local biproducts, normalization, and
//!   the structural permutation isomorphisms (associator, distributors).
//! - [`biproduct`] — weak biproducts of objects at the two-level stage:
//!   global projections/injections, the weakening isomorphism family, the
//!   mediator constructions and their uniqueness checks, and the
//!   equivalence-form witness.
//! - [`laws`] — a seeded, reproducible harness that checks every equational
//!   law the tower promises, with counterexample reporting and deliberate
//!   mutation fixtures.
//! - [`cli`] — the `boxplus` command-line front end and its textual morphism
//!   format.
//!
//! ```
//! use boxplus::twovect::{hcompose2, vcompose2, id_two, OneMor, SpaceDecomp, TwoMor};
//! use boxplus::{rat, Mat};
//!
//! // a 1-morphism 1 -> 1 whose single entry splits into two components
//! let f = OneMor::new(1, 1, vec![SpaceDecomp::new(vec![1, 1])]).unwrap();
//! let theta = TwoMor::new(
//!     f.clone(),
//!     f.clone(),
//!     vec![Mat::from_rows(vec![
//!         vec![rat(1, 2), rat(0, 1)],
//!         vec![rat(0, 1), rat(2, 1)],
//!     ])
//!     .unwrap()],
//! )
//! .unwrap();
//!
//! // whiskering by an identity leaves a 2-morphism untouched, exactly
//! let whiskered = hcompose2(&id_two(&boxplus::twovect::id_one(1)), &theta).unwrap();
//! assert_eq!(whiskered, theta);
//!
//! // and vertical composition with its inverse is the identity
//! let inv = boxplus::twovect::inverse(&theta).unwrap();
//! assert!(vcompose2(&theta, &inv).unwrap().is_identity());
//! ```

pub mod biproduct;
pub mod cli;
pub mod error;
pub mod field;
pub mod laws;
pub mod matcat;
pub mod twovect;

pub use error::{Error, Result};

/// The exact scalar used throughout the concrete tower: arbitrary-precision
/// rationals in canonical reduced form (positive denominator, zero is 0/1).
pub type Rat = num::BigRational;

/// Dense matrix over [`Rat`].
pub type Mat = field::DenseMatrix<Rat>;

/// Exact rational `n / d`. Panics when `d == 0`.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(n.into(), d.into())
}

/// Exact integer as a rational.
pub fn rati(n: i64) -> Rat {
    Rat::from_integer(n.into())
}

/// Selects one half of a binary (bi)product.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    First,
    Second,
}
