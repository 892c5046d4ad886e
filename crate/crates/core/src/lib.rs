//! Crystal graphs, Key maps and Demazure crystals for Kac–Moody algebras of finite
//! types A and C and of affine type A.
//!
//! The [`crystal`] module is realization independent. Concrete realizations live in
//! [`type_a`], [`type_c`] and [`affine`]; [`binfinity`] handles multisegments.

pub mod affine;
pub mod binfinity;
pub mod crystal;
pub mod error;
pub mod tableau;
pub mod type_a;
pub mod type_c;
pub mod weyl;

pub use error::{Error, Result};
pub use weyl::{CartanDatum, CartanKind, Node, Weight, WeylWord};
