use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("argument {re}{im:+}i is within 1e-12 of a nonpositive integer")]
    Pole { re: f64, im: f64 },

    #[error("degree {0} exceeds the supported maximum of 64")]
    DegreeTooLarge(usize),

    #[error("Apostol-Bernoulli base is 1; use the Bernoulli/Hurwitz path")]
    DegenerateBase,

    #[error("Lerch base lies on the branch cut [1, inf)")]
    BranchCut,

    #[error("domain error: {0}")]
    Domain(String),

    #[error("degenerate parameters: {0}")]
    DegenerateParameters(String),

    #[error("no closed form for {0}")]
    NoClosedForm(String),

    #[error("quadrature did not converge (estimate {estimate:e}, nodes {nodes})")]
    NonConvergence { estimate: f64, nodes: usize },

    #[error("integrand returned a non-finite value at t = {0}")]
    SingularEvaluation(f64),

    #[error("output error: {0}")]
    OutputIo(String),
}

impl Error {
    /// Short machine-readable tag used in verification records.
    pub fn tag(&self) -> &'static str {
        match self {
            Error::Pole { .. } => "PoleError",
            Error::DegreeTooLarge(_) => "DegreeTooLarge",
            Error::DegenerateBase => "DegenerateBase",
            Error::BranchCut => "BranchCutError",
            Error::Domain(_) => "DomainError",
            Error::DegenerateParameters(_) => "DegenerateParameters",
            Error::NoClosedForm(_) => "NoClosedForm",
            Error::NonConvergence { .. } => "NonConvergence",
            Error::SingularEvaluation(_) => "SingularEvaluation",
            Error::OutputIo(_) => "OutputIOError",
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::OutputIo(e.to_string())
    }
}
