//! Checks of known identities and bounds against certified values.
//!
//! Each check yields a [`TheoremReport`] that serializes to one JSON line.
//! The exact integral oracles and the seeded experiments live here too.

pub mod experiments;
pub mod integral;
pub mod ramsey;
pub mod report;
pub mod suites;
pub mod theorems;

pub use experiments::{
    aks_subgraph_sample, gap_experiment, gap_on_graph, remark6_experiment, zf_nm_search, AksSample,
    GapReport, Remark6Report, ZfNmSearch,
};
pub use integral::{
    greedy_colors, integral_chi, integral_chi_with_limit, integral_z, integral_z_with_limit,
};
pub use ramsey::{
    check_theorem7, check_theorem7_with_cover, manufactured_edge_cover, ramsey_convert,
    ramsey_number, RamseyConversionTrace,
};
pub use report::{all_pass, TheoremReport, Verdict};
pub use theorems::{
    check_example1, check_kneser, check_mycielski, check_proposition1, check_theorem3,
    check_theorem4, check_theorem5, check_theorem6, star_shape, star_z_f,
};
