//! Gröbner bases and the ideal operations built on them.

mod buchberger;
mod budget;
mod dim;
mod ideal;
mod ops;
mod reduce;

pub use buchberger::is_groebner_basis;
pub use budget::{Budget, BudgetKind, GroebnerError};
pub use dim::{krull_dim, max_independent_set, DimReport};
pub use ideal::{GroebnerBasis, Ideal};
pub use ops::{eliminate, intersect, quotient, radical_member, saturate, saturate_by};

pub(crate) use ops::{extend_ring, fresh_var};
