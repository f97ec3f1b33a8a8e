use std::time::{Duration, Instant};

use thiserror::Error;

use crate::par::Parallelism;
use crate::polyring::RingError;

/// Resource caps for one computation. Exceeding any cap aborts with
/// [`GroebnerError::BudgetExceeded`]; no partial result escapes.
#[derive(Clone, Debug)]
pub struct Budget {
    pub max_basis: usize,
    pub max_degree: u64,
    deadline: Option<Instant>,
    time_limit: Option<Duration>,
    pub parallelism: Parallelism,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_basis: 20_000,
            max_degree: 256,
            deadline: None,
            time_limit: None,
            parallelism: Parallelism::default(),
        }
    }
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget {
            max_basis: usize::MAX,
            max_degree: u64::MAX,
            ..Self::default()
        }
    }

    /// The wall-clock allowance starts counting now.
    pub fn with_time_limit(mut self, limit: Duration) -> Self {
        self.deadline = Some(Instant::now() + limit);
        self.time_limit = Some(limit);
        self
    }

    /// Same caps, with the wall clock (if any) starting over from now.
    pub fn restarted(&self) -> Self {
        match self.time_limit {
            Some(limit) => self.clone().with_time_limit(limit),
            None => self.clone(),
        }
    }

    pub fn time_limit(&self) -> Option<Duration> {
        self.time_limit
    }

    pub fn with_max_basis(mut self, n: usize) -> Self {
        self.max_basis = n;
        self
    }

    pub fn with_max_degree(mut self, d: u64) -> Self {
        self.max_degree = d;
        self
    }

    pub fn with_parallelism(mut self, p: Parallelism) -> Self {
        self.parallelism = p;
        self
    }

    pub fn deadline(&self) -> Option<Instant> {
        self.deadline
    }

    pub(crate) fn check_time(&self) -> Result<(), GroebnerError> {
        match self.deadline {
            Some(d) if Instant::now() > d => Err(GroebnerError::BudgetExceeded(BudgetKind::WallTime)),
            _ => Ok(()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BudgetKind {
    BasisSize,
    Degree,
    WallTime,
}

impl std::fmt::Display for BudgetKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            BudgetKind::BasisSize => "basis size",
            BudgetKind::Degree => "degree",
            BudgetKind::WallTime => "wall time",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroebnerError {
    #[error("budget exceeded: {0}")]
    BudgetExceeded(BudgetKind),
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl GroebnerError {
    pub fn is_budget(&self) -> bool {
        matches!(self, GroebnerError::BudgetExceeded(_))
    }
}
