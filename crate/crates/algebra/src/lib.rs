//! Exact algebra for embedding obstructions: scalar rings, sparse Laurent
//! polynomials, group rings of finitely generated abelian groups, and
//! certified Smith normal forms over ℤ and over univariate Laurent rings.

pub mod bareiss;
pub mod error;
pub mod group_ring;
pub mod ideal;
pub mod matrix;
pub mod poly;
pub mod ring;
pub mod snf;
pub mod text;
pub mod unipoly;

pub use error::AlgebraError;
pub use group_ring::{AbGroupRing, GkRing};
pub use matrix::Matrix;
pub use poly::{Coeff, LaurentPoly};
pub use ring::{EuclideanDomain, Field, Integers, PrimeField, Rationals, Ring};
pub use snf::{smith_normal_form, SmithForm};
pub use unipoly::{LaurentPid, UniLaurent};

pub type IntMatrix = Matrix<num_bigint::BigInt>;
