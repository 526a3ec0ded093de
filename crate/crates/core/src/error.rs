use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("generator index {index} out of range for {count} generators")]
    GeneratorIndex { index: usize, count: usize },
    #[error("invalid presentation: {0}")]
    Presentation(String),
    #[error("point does not satisfy relation {relation}: entry ({row},{col}) = {value}")]
    InvalidPoint {
        relation: usize,
        row: usize,
        col: usize,
        value: String,
    },
    #[error("matrix is singular")]
    Singular,
    #[error("invalid resolution step: {0}")]
    Resolution(String),
    #[error("direction is not a tangent vector (relation {relation} has a nonzero linearization)")]
    NotTangent { relation: usize },
    #[error("pointed representation is not cyclic (span dimension {span} < {n})")]
    NotCyclic { span: usize, n: usize },
    #[error("expected a one-dimensional point, got n = {0}")]
    NotOneDimensional(usize),
    #[error("family member '{label}' is invalid: {source}")]
    FamilyMember {
        label: String,
        #[source]
        source: Box<Error>,
    },
    #[error("invalid argument: {0}")]
    Argument(String),
    #[error("parse error at {line}:{column}: {message}{}", expected_suffix(.expected))]
    Parse {
        line: usize,
        column: usize,
        message: String,
        expected: Vec<String>,
    },
}

fn expected_suffix(expected: &[String]) -> String {
    if expected.is_empty() {
        String::new()
    } else {
        format!(" (expected one of: {})", expected.join(", "))
    }
}
