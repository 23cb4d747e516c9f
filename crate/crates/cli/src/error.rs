use std::fmt;

/// Failure classes of the CLI, each with its own exit code.
#[derive(Debug)]
pub enum CliError {
    /// Malformed input: command line, scenario file, or an invariant of the
    /// scenario itself.
    Parse(String),
    /// Well-formed input describing an impossible geometry or link.
    Domain(String),
    /// The quadrature reference would exceed its sampling budget.
    Resolution(String),
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Io(_) => 1,
            CliError::Parse(_) => 2,
            CliError::Domain(_) => 3,
            CliError::Resolution(_) => 4,
        }
    }

    fn tag(&self) -> &'static str {
        match self {
            CliError::Parse(_) => "parse",
            CliError::Domain(_) => "domain",
            CliError::Resolution(_) => "resolution",
            CliError::Io(_) => "io",
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Parse(m)
            | CliError::Domain(m)
            | CliError::Resolution(m)
            | CliError::Io(m) => m,
        }
    }
}

/// Single line: `error[<class>]: <message>`.
impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let one_line = self
            .message()
            .split_whitespace()
            .collect::<Vec<_>>()
            .join(" ");
        write!(f, "error[{}]: {}", self.tag(), one_line)
    }
}

impl From<holoirs::Error> for CliError {
    fn from(e: holoirs::Error) -> Self {
        match e {
            holoirs::Error::Resolution { .. } => CliError::Resolution(e.to_string()),
            _ => CliError::Domain(e.to_string()),
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;
