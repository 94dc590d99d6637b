//! Maximal roots, their bounds and asymptotic diagnostics.

pub mod asymptotics;
pub mod boundary;
pub mod bounds;
pub mod crosscheck;
pub mod real;
pub mod roots;

pub use asymptotics::{
    asymptotic_row, asymptotic_table, first_roots, lambda_n4_distance, smallest_root_distance, AsymptoticRow, Distance,
    Target, Targets,
};
pub use boundary::{mu_cross_check, mu_max, MuCheck};
pub use bounds::{
    bound_big_m, bound_m, bound_report, c1_hat, check_monotone, comparison_lemma_check, monotone_from, BoundReport,
    MonotoneReport, Orderings, Radical, UpperBound, UpperMethod, Verdict,
};
pub use crosscheck::{float_eigen_crosscheck, FloatCheck};
pub use real::{Real, DEFAULT_BITS};
pub use roots::{all_roots, max_root, smallest_root, Enclosure, RootTable};
