use thiserror::Error;

use crate::group::ElementId;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("closure grew past the order cap of {cap}")]
    ClosureExceedsCap { cap: usize },
    #[error("images {images:?} do not form a permutation of 1..={degree}")]
    InvalidPermutation { degree: usize, images: Vec<usize> },
    #[error("generator has degree {found}, expected {expected}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("cayley table is malformed: {0}")]
    MalformedTable(String),
    #[error("cayley table is not a latin square: {line} {index} repeats an entry")]
    NotLatinSquare { line: &'static str, index: usize },
    #[error("cayley table has no two-sided identity")]
    NoIdentity,
    #[error("element {0} has no two-sided inverse")]
    NoInverse(usize),
    #[error("multiplication is not associative at ({0}, {1}, {2})")]
    NotAssociative(usize, usize, usize),
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("element {0} is central")]
    CentralElement(ElementId),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CharacterError {
    #[error("no prime congruent to 1 mod {exponent} above {lower} found below 10^6")]
    InternalPrimeSearchFailed { exponent: usize, lower: usize },
    #[error("class algebra did not split into one-dimensional eigenspaces")]
    EigenspaceSplitFailed,
    #[error("character table failed validation: {0}")]
    Inconsistent(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CaminaError {
    #[error("invalid pair target: {0}")]
    InvalidPairTarget(&'static str),
    #[error("not applicable: {0}")]
    NotApplicable(&'static str),
    #[error("Camina criteria disagree: classes={by_classes} commutators={by_commutators} centralizers={by_centralizers} characters={by_characters:?}")]
    EquivalenceViolation {
        by_classes: bool,
        by_commutators: bool,
        by_centralizers: bool,
        by_characters: Option<bool>,
    },
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Character(#[from] CharacterError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CorpusError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: group {order}:{index} declares order {order} but generators close to {actual}")]
    OrderMismatch {
        line: usize,
        order: usize,
        index: usize,
        actual: String,
    },
    #[error("line {line}: duplicate group id {order}:{index}")]
    DuplicateId { line: usize, order: usize, index: usize },
    #[error("unsupported family parameters: {0}")]
    UnsupportedParameters(String),
    #[error(transparent)]
    Group(#[from] GroupError),
}
