use jetscheme::jets::JetError;
use jetscheme::GroebnerError;

#[derive(Debug)]
pub enum CliError {
    /// Malformed flags, JSON or polynomials.
    Input(String),
    /// Well-formed input that violates an operation's precondition.
    Precondition(String),
    Budget(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 2,
            CliError::Precondition(_) => 3,
            CliError::Budget(_) => 4,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CliError::Input(m) | CliError::Precondition(m) | CliError::Budget(m) => m,
        }
    }
}

impl From<GroebnerError> for CliError {
    fn from(e: GroebnerError) -> Self {
        match e {
            GroebnerError::BudgetExceeded(_) => CliError::Budget(e.to_string()),
            GroebnerError::Ring(r) => CliError::Input(r.to_string()),
            other => CliError::Precondition(other.to_string()),
        }
    }
}

impl From<JetError> for CliError {
    fn from(e: JetError) -> Self {
        match e {
            JetError::Groebner(g) => g.into(),
            JetError::Ring(r) => CliError::Input(r.to_string()),
            JetError::PointDimension { .. } => CliError::Input(e.to_string()),
            JetError::PointNotOnX | JetError::Precondition(_) => CliError::Precondition(e.to_string()),
        }
    }
}

impl From<jetscheme::RingError> for CliError {
    fn from(e: jetscheme::RingError) -> Self {
        CliError::Input(e.to_string())
    }
}
