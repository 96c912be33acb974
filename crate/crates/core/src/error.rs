use thiserror::Error;

/// Errors produced while building or transforming hesitant fuzzy soft values.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("a hesitant fuzzy element needs at least one degree")]
    EmptyHfe,

    #[error("degree {value} is outside [0, 1]")]
    DegreeOutOfRange { value: f64 },

    #[error("duplicate id `{id}`")]
    DuplicateId { id: String },

    #[error("universe must contain at least one element")]
    EmptyUniverse,

    #[error("attribute set must contain at least one attribute")]
    EmptyAttributeSet,

    #[error("unknown attribute `{id}`")]
    UnknownAttribute { id: String },

    #[error("unknown element `{id}`")]
    UnknownElement { id: String },

    #[error("unknown id `{id}`")]
    UnknownId { id: String },

    #[error("supported attribute `{attribute}` has no row")]
    MissingRow { attribute: String },

    #[error("row `{attribute}` has no value for element `{element}`")]
    MissingElement { attribute: String, element: String },

    #[error("row `{attribute}` is not in the declared support")]
    RowOutsideSupport { attribute: String },

    #[error("soft classes do not match")]
    ClassMismatch,

    #[error("point map `{map}` has no image for `{id}`")]
    NonTotalMap { map: String, id: String },

    #[error("point map `{map}` lists `{id}` more than once")]
    ConflictingPair { map: String, id: String },

    #[error("mapping is not bijective")]
    NotBijective,

    #[error("mapping is injective, so it is not many-one")]
    NotManyOne,

    #[error("enumeration of {count} soft sets exceeds the limit of {limit}")]
    EnumerationTooLarge { count: u128, limit: u128 },

    #[error("unknown class `{name}`")]
    UnknownClass { name: String },

    #[error("unknown mapping `{name}`")]
    UnknownMapping { name: String },

    #[error("unknown set `{name}`")]
    UnknownSet { name: String },

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
