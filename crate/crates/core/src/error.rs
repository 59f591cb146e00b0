use thiserror::Error;

/// Errors across the word/permutation/triangulation/algebra layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    // word validation
    #[error("word contains a symbol other than 'a' or 'b'")]
    WrongAlphabet,
    #[error("word must use both letters")]
    AllSameLetter,
    #[error("word must have length at least 2")]
    TooShort,
    #[error("word length exceeds the supported maximum of 128")]
    TooLong,
    #[error("operands have different ranks: {0} vs {1}")]
    RankMismatch(usize, usize),
    #[error("word {0} is a projective word; the translate vanishes")]
    IsProjective(String),
    #[error("word {0} is a shifted-projective word, not a module word")]
    IsShiftedProjective(String),
    #[error("word {0} is not a module word")]
    NotModuleWord(String),

    // permutations
    #[error("sequence is not a permutation of 0..={0}")]
    InvalidPermutation(usize),
    #[error("permutation has {0} descents; expected exactly one")]
    NotJoinIrreducible(usize),
    #[error("word set is not nested; no permutation produces it")]
    NotNested,

    // triangulations
    #[error("expected {expected} words, got {got}")]
    WrongCount { expected: usize, got: usize },
    #[error("words {0} and {1} cross")]
    CrossingPair(String, String),
    #[error("word {0} is not a simplex of the triangulation")]
    WordNotInTriangulation(String),

    // geometry
    #[error("vertex set is not an internal word simplex")]
    NotWordSimplex,
    #[error("points are affinely dependent")]
    DegenerateSimplex,
    #[error("unknown vertex label {0}")]
    UnknownVertex(String),

    // algebra kernel
    #[error("no zero graded piece reached by degree {0}; raise the degree bound")]
    DegreeBoundTooSmall(usize),
    #[error("relation is not homogeneous in path length")]
    InhomogeneousRelations,
    #[error("isomorphism test inconclusive after {retries} randomized trials")]
    Inconclusive { retries: usize },

    // silting
    #[error("word {0} is not a summand of the complex")]
    WordNotInComplex(String),
    #[error("verification failed at {check}: {witness}")]
    VerificationFailed { check: String, witness: String },

    // frontend
    #[error("cannot parse {kind}: {input}")]
    ParseError { kind: String, input: String },
    #[error("value is not in the image of the requested map: {0}")]
    NotInImage(String),
    #[error("n = {n} exceeds the bound {bound} for this suite (use --force to override)")]
    BoundExceeded { n: usize, bound: usize },
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
}

pub type Result<T> = std::result::Result<T, Error>;
