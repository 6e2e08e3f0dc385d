//! Codes from multivariate monomial algebras evaluated on Cartesian point
//! sets, and order bounds computed from the value semigroup.

mod algebra;
mod order;
mod poly;
mod semigroup;

pub use algebra::{build_algebra, semigroup_wb_table, MonomialAlgebra, MAX_POINTS};
pub use order::{MonomialOrder, OrderKind};
pub use poly::Poly;
pub use semigroup::{
    construct_code, design_improved_code, order_bound, order_mu, order_sigma, DesignedCode, SemigroupData,
};
