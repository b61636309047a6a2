use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),

    #[error("presentation is not good: generator `{0}` occurs {1} time(s) in the relators")]
    NotGood(String, usize),

    #[error("not a cohomology class: nonzero value {value} on relator `{relator}`")]
    NotAClass { relator: String, value: String },

    #[error("class does not vanish on the attaching walk of face {0}")]
    NotACocycle(usize),

    #[error("complex has boundary: edge `{0}` appears only {1} time(s) on face walks")]
    BoundaryNotEmpty(String, usize),

    #[error("complex is not connected")]
    Disconnected,

    #[error("the zero class is not admitted here")]
    ZeroClass,

    #[error("first Betti number is zero; Alexander invariants are not defined here")]
    BettiZero,

    #[error("degree of the zero polynomial")]
    DegreeOfZero,

    #[error("not a covering action: relator `{0}` moves sheet {1}")]
    NotACover(String, usize),

    #[error("covering action is not transitive; the cover would be disconnected")]
    CoverNotTransitive,

    #[error("cover specs need a presentation complex: {0}")]
    NotAPresentationComplex(String),

    #[error("presentations have different abelianizations: {0}")]
    InconsistentAbelianizations(String),

    #[error("instance too large for brute-force enumeration ({0} assignments)")]
    BruteTooLarge(String),

    #[error("internal error: {0}")]
    Internal(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
