//! Exact modular-representation toolkit for screening alternating subgroups
//! of exceptional groups: finite-field linear algebra, modules for Alt(n),
//! a MeatAxe, Brauer-tree block calculus, a composition-factor sieve,
//! Jordan-type tables and a case screener.

pub mod blocks;
pub mod error;
pub mod exactlinalg;
pub mod gmod;
pub mod jordan;
pub mod groups;
pub mod meataxe;
pub mod multiset;
pub mod repdata;
pub mod sieve;

pub use error::{Error, Result};
pub use multiset::CompFactorMultiset;
