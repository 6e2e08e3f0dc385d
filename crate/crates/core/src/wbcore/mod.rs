//! Indexed bases, well-behaving pairs and the Feng-Rao bounds for primary and
//! dual codes.

mod basis;
mod bounds;
mod code;
mod duality;
mod table;

pub use basis::{express_in_basis, star, IndexedBasis};
pub use bounds::{
    ghw_bound, lambda_set, min_distance_bound, mu_counts, mu_row, sigma_counts, sigma_row, v_set,
};
pub use code::{complement, Code, IndexSet, Side};
pub use duality::{check_duality_condition, dualize, translate_wb_table, DualityCondition};
pub use table::{
    build_wb_table, classify_pair, rho_grid, BuildMode, Completeness, Variant, WbEntry, WbStatus, WbTable,
};
