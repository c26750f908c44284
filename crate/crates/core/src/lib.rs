//! Exact computations deciding the almost Gorenstein property of Rees
//! algebras of m-primary ideals in `k[x,y]`.
//!
//! The crate is layered bottom-up:
//!
//! - [`field`], [`order`], [`ring`], [`poly`]: coefficient fields, monomial
//!   orders and sparse polynomial arithmetic.
//! - [`groebner`] and [`ideal`]: a Buchberger engine with optional cofactor
//!   tracking, and the ideal algebra built on it (products, powers,
//!   intersections, colons, elimination, graded generator counts).
//! - [`monomial`]: combinatorics of monomial ideals in two variables, Newton
//!   polygons and integral closure.
//! - [`rees`]: reductions, reduction numbers, joint reductions and Rees
//!   algebra presentations.
//! - [`agcheck`]: witness search for the two joint-reduction equalities
//!   `IJ = gJ + Ih`, `mJ = fJ + mh`, the socle-ideal obstruction, and the
//!   quadric hypersurface family.
//! - [`text`]: the plain-text polynomial and ideal grammar.
//!
//! # Local versus global
//!
//! The statements being checked live in the local ring `k[x,y]` at the
//! origin. For ideals that are m-primary in the polynomial ring, products,
//! colons, powers and equality commute with localization, so computations in
//! `k[x,y]` decide them. Equalities that involve single elements (a
//! reduction `(a,b)`, the witness elements `f, g, h`) need not be m-primary
//! globally; those are decided with [`ideal::locally_equal`], which reduces
//! local equality to two global containments via Nakayama's lemma.

pub mod agcheck;
pub mod error;
pub mod field;
pub mod groebner;
pub mod ideal;
mod linalg;
pub mod monomial;
pub mod order;
pub mod poly;
pub mod rees;
pub mod ring;
pub mod search;
pub mod text;

pub use error::{Error, Result};
pub use field::{Field, FieldSpec, PrimeField, Rationals};
pub use ideal::IdealHandle;
pub use order::{Exponent, MonomialOrder};
pub use poly::Poly;
pub use ring::{Ring, RingRef};
