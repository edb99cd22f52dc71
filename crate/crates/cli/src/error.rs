use grover_abszeta_core::Error as CoreError;
use thiserror::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_ACCEPTANCE: i32 = 3;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("config: {0}")]
    Config(String),
    #[error(transparent)]
    Math(#[from] CoreError),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Config(_) => EXIT_USAGE,
            CliError::Math(CoreError::InvalidSize(_)) => EXIT_USAGE,
            CliError::Math(_) => EXIT_DOMAIN,
        }
    }

    /// Short machine-readable kind, e.g. `NotFinitePeriod`.
    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Usage(_) => "Usage",
            CliError::Config(_) => "Config",
            CliError::Math(e) => match e {
                CoreError::SizeMismatch { .. } => "SizeMismatch",
                CoreError::DegreeMismatch { .. } => "DegreeMismatch",
                CoreError::NotMonic => "NotMonic",
                CoreError::ZeroPolynomial => "ZeroPolynomial",
                CoreError::InvalidSize(_) => "InvalidSize",
                CoreError::IndexOutOfRange { .. } => "IndexOutOfRange",
                CoreError::NotFinitePeriod(_) => "NotFinitePeriod",
                CoreError::AutomorphyFailed(_) => "AutomorphyFailed",
                CoreError::Pole(_) => "Pole",
                CoreError::Domain(_) => "Domain",
                CoreError::NonFinite(_) => "NonFinite",
                CoreError::Divergent(_) => "Divergent",
                CoreError::Quadrature(_) => "Quadrature",
                CoreError::Inconsistent(_) => "Inconsistent",
            },
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;
