use thiserror::Error;

use crate::rootsys::RootVector;

#[derive(Debug, Error)]
pub enum Error {
    #[error("positivity tests disagree on {0}: sign-of-first-coefficient and all-coefficients-nonnegative give different answers")]
    PositivityMismatch(RootVector),

    #[error("root expression {label} normalizes to {vector}, which has norm {norm} (not a root)")]
    NotARoot {
        label: String,
        vector: RootVector,
        norm: i64,
    },

    #[error("root list inconsistent: {0}")]
    RootList(String),

    #[error("bracket [{g}, x{index}] leaves span{{x1..x27}}")]
    OutsideModule { g: String, index: usize },

    #[error("{0} is not an element of the E6 subalgebra basis")]
    NotInE6(String),

    #[error("parse error in {context}: {message}")]
    Parse { context: String, message: String },

    #[error("expected a {expected}-dimensional space, found {found}")]
    Dimension { expected: usize, found: usize },

    #[error("expansion mismatch for {label}: {detail}")]
    Mismatch { label: String, detail: String },

    #[error("degree {degree} exceeds the configured bound {bound} (pass --force to override)")]
    CostGuard { degree: u32, bound: u32 },

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
