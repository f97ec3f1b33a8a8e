//! Jet schemes at the level of ideals.
//!
//! For `X = V(f_1, …, f_r) ⊂ A^N` the `m`-jet scheme `X_m` lives in
//! `A^{N(m+1)}` with coordinates `x_i_j` (`0 ≤ j ≤ m`). Its ideal is generated
//! by the coefficients of `t^0, …, t^m` in `f_k(x_0 + x_1 t + … + x_m t^m)`.
//! Those coefficients are weight-homogeneous for `weight(x_i_j) = j`.

mod context;
mod jacobian;
mod jet_ideal;

use thiserror::Error;

use crate::groebner::GroebnerError;
use crate::polyring::RingError;

pub use context::{jet_var_name, JetContext};
pub use jacobian::{determinant, jacobian_ideal, jacobian_matrix};
pub use jet_ideal::{formal_derivation_check, jet_equations, jetify, jetify_with, truncation_compatibility, JetIdeal};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum JetError {
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
    #[error("point does not lie on the scheme")]
    PointNotOnX,
    #[error("point has {got} coordinates, expected {expected}")]
    PointDimension { expected: usize, got: usize },
    #[error("precondition violated: {0}")]
    Precondition(String),
}

impl JetError {
    pub fn is_budget(&self) -> bool {
        matches!(self, JetError::Groebner(e) if e.is_budget())
    }
}
