use thiserror::Error;

/// Errors raised by every layer of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("duplicate generator name `{0}`")]
    DuplicateName(String),
    #[error("Coxeter matrix entry for pair ({0}, {1}) is missing or given more than once")]
    AsymmetricOrMissingEntry(String, String),
    #[error("bad Coxeter label for pair ({s}, {t}): {reason}")]
    BadLabel { s: String, t: String, reason: String },
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("at most {max} generators are supported, got {got}")]
    TooManyGenerators { max: usize, got: usize },
    #[error("elements belong to different Coxeter graphs")]
    GraphMismatch,
    #[error("enumeration exceeded the cap of {0} elements")]
    CapExceeded(usize),
    #[error("parabolic subgroup on {0} is infinite")]
    NotFinite(String),
    #[error("delta factor requires l(ws) > l(w), violated for generator {0}")]
    SideConditionViolated(String),
    #[error("word does not lie in the colored Artin group (theta is not trivial)")]
    NotColored,
    #[error("word support {support} is not contained in {allowed}")]
    SupportViolation { support: String, allowed: String },
    #[error("oracle covers {oracle} but {required} was required")]
    OracleSubsetMismatch { oracle: String, required: String },
    #[error("subset {0} is not of spherical type")]
    NotSpherical(String),
    #[error("affine embedding self-check failed on relation {0}")]
    EmbeddingSelfCheckFailed(String),
    #[error("components {0} and {1} do not commute")]
    NotCommutingComponents(String, String),
    #[error("no word oracle available for component {component} ({kind})")]
    NoOracleAvailable { component: String, kind: String },
    #[error("subset {0} is not free of infinity")]
    NotFreeOfInfinity(String),
    #[error("cube prepath link violated: {0}")]
    PrepathLinkViolation(String),
    #[error("internal invariant breached: {0}")]
    InvariantBreach(String),
    #[error("strand count must be at least 2, got {0}")]
    BadN(usize),
    #[error("index {index} out of range for {n} strands")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("virtual braid words have different strand counts ({0} vs {1})")]
    StrandMismatch(usize, usize),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("refcheck search bounds exceeded: {0}")]
    BoundsExceeded(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
