//! Group-algebra images, centralizers and isotypic projectors for the
//! sign-permutation action, and the named verification runs built on them.

mod checks;
mod isotypic;
mod operators;
mod report;

pub use checks::{
    centralizer, image_dim, image_span, verify_classical_anomaly, verify_crossed_product,
    verify_dimensions, verify_hook_theorem, verify_invariant_decomposition, verify_pq, DimEntry,
    DimensionRow, Method, RunOptions, VerifyError, MAX_ACTION_ENTRIES, MAX_COMMUTANT_UNKNOWNS,
    MAX_ENUMERATED_DEGREE, SPAN_ROUTE_MAX_DIM,
};
pub use isotypic::{isotypic, BlockOperator, IsotypicComponent, IsotypicData, SubmoduleCoordinates};
pub use operators::{gram_rank, left_mul, mat_mul, right_mul_by_inverse_of, span_of, vec_of_signed};
pub use report::{ArithmeticInfo, Check, Observation, Outcome, Params, VerificationReport};
