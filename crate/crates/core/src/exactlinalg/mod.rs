//! Exact arithmetic over GF(p^k) and dense matrix primitives.

mod field;
mod mat;
pub mod poly;

pub use field::{field_make, Elt, Field};
pub(crate) use field::{gcd, mult_order};
pub use mat::{kernel_basis, rank, Echelon, Mat};
