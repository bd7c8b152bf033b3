use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed tables: {0}")]
    MalformedTables(String),
    #[error("lattice axiom violated: {law} at {witness}")]
    LatticeAxiomViolation { law: String, witness: String },
    #[error("monoid axiom violated: {law} at {witness}")]
    MonoidAxiomViolation { law: String, witness: String },
    #[error("residuation violated at (a,b,c)=({a},{b},{c}): a <= b->c is {lhs} but a*b <= c is {rhs}")]
    ResiduationViolation {
        a: String,
        b: String,
        c: String,
        lhs: bool,
        rhs: bool,
    },
    #[error("join order and meet order disagree at ({a},{b})")]
    OrderInconsistency { a: String, b: String },
    #[error("distributivity fails at ({a},{b},{c})")]
    NotDistributive { a: String, b: String, c: String },
    #[error("invalid size {size} for {kind}")]
    InvalidSize { kind: String, size: usize },
    #[error("direct product of size {size} exceeds cap {cap}")]
    ProductTooLarge { size: usize, cap: usize },
    #[error("isomorphism search on {size} elements exceeds cap {cap}")]
    SearchCapExceeded { size: usize, cap: usize },
    #[error("{what}: {size} exceeds cap {cap}")]
    CapExceeded { what: String, size: usize, cap: usize },
    #[error("index poset is not directed: {0}")]
    NotDirected(String),
    #[error("invalid inductive system: {0}")]
    InvalidSystem(String),
    #[error("congruence check failed: {0}")]
    CongruenceFailure(String),
    #[error("not a filter: {0}")]
    NotAFilter(String),
    #[error("filters belong to different hosts ({0} vs {1} elements)")]
    HostMismatch(usize, usize),
    #[error("co-annihilator of the empty set requested")]
    EmptySet,
    #[error("not a reticulation: {0}")]
    NotAReticulation(String),
    #[error("not a morphism: {0}")]
    NotAMorphism(String),
    #[error("not a partition: {0}")]
    InvalidPartition(String),
    #[error("not a refinement: {0}")]
    NotRefinement(String),
    #[error("unknown corpus key `{0}`")]
    UnknownKey(String),
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("validation failed: {0}")]
    Validation(Box<Error>),
    #[error("io error: {0}")]
    Io(String),
}
