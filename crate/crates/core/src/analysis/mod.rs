//! Growth series, GK-dimension estimates, label maps and witnesses.

mod estimate;
mod iso;
mod series;

pub use estimate::{estimate_from_log2, estimate_gkdim, Classification, GkEstimate, TAU_EXP, TAU_POLY};
pub use iso::{
    check_measured_iso, extend_map, find_witness, infinite_growth_witness, Counterexample, DimCheck, IsoMap,
    IsoOutcome, WitnessCertificate,
};
pub use series::{growth_series, growth_series_of, growth_series_with, log2_biguint, GrowthOptions, GrowthRecord, GrowthSeries};
