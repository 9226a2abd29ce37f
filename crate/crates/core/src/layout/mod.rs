//! The three layout algorithms.

pub mod compact;
pub mod cycle;
pub mod dual;
pub mod path;

pub use cycle::{layout_cycle_matching, layout_cycle_matching_with_shift, rac_layout_from_decomposition, Shift};
pub use path::{layout_path_matching, layout_path_matching_instrumented, OpStats};
pub use dual::{layout_dual_outerplanar, layout_dual_outerplanar_observed, layout_dual_outerplanar_with, Construction, DualStats, RecursionFrame};
pub use compact::compact_grid;
