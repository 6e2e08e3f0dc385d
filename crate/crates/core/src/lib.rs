//! Linear codes described by an indexed basis: finite fields, well-behaving
//! pairs, Feng-Rao style bounds, dual bases, codes from monomial algebras, and
//! majority-voting decoding of primary codes.

pub mod algcode;
pub mod error;
pub mod fqla;
pub mod frdecode;
pub mod gf;
pub mod wbcore;

pub use error::{DecodeFailure, Error, Result};
pub use gf::{Elem, Field};
