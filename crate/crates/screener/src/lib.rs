//! Case screening for Alt(n) inside exceptional groups, built on `altsieve`.

pub mod config;
pub mod fixtures;
mod pipeline;
pub mod realize;
pub mod report;

pub use config::{CaseConfig, Cover, Flags, ModuleSel};
pub use pipeline::run_case;
pub use report::{render_report, CaseReport, Format, Verdict};
