//! Exact q-expansions, the Hauptmodul `J`, synthetic harmonic expansions,
//! point evaluation and the `ξ`-operator.

mod eisenstein;
mod expansion;
mod qseries;

pub use eisenstein::{build_delta, build_eisenstein, build_j_series, build_jsq_series};
pub use expansion::{
    build_j, build_jsq, eval_expansion, eval_expansion_with, synth_harmonic, xi_image,
    FourierExpansion, PointValue, DEFAULT_J_PRECISION,
};
pub use qseries::{QSeries, EXACT};
