//! Run-time knobs shared by the pipeline.

use serde::{Deserialize, Serialize};

use crate::field::FieldKind;
use crate::ideal::DEFAULT_DIM_CAP;

/// Default bound on the number of generators for the Taylor route.
pub const DEFAULT_TAYLOR_CAP: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Config {
    pub field: FieldKind,
    /// Largest `dim_k R` the vector-space model may use.
    pub dim_cap: usize,
    /// Largest `n` for which the Taylor complex is built.
    pub taylor_cap: usize,
    /// Confirm the T / H(3,0) split with the second Bass number.
    pub confirm_with_beta2: bool,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            field: FieldKind::Qq,
            dim_cap: DEFAULT_DIM_CAP,
            taylor_cap: DEFAULT_TAYLOR_CAP,
            confirm_with_beta2: false,
        }
    }
}
