use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ring mismatch: `{left}` vs `{right}`")]
    RingMismatch { left: String, right: String },

    #[error("invalid label `{label}` for ring `{ring}`: {reason}")]
    InvalidLabel {
        ring: String,
        label: String,
        reason: String,
    },

    #[error("generator set is empty")]
    EmptyGenerators,

    #[error("generator set does not contain the unit `{unit}` of ring `{ring}`")]
    MissingUnit { ring: String, unit: String },

    #[error("invalid ring parameter: {0}")]
    InvalidParameter(String),

    #[error("unknown ring identifier `{0}`")]
    UnknownRing(String),

    #[error("growth series has {len} records; the doubling estimator needs at least 16")]
    SeriesTooShort { len: usize },

    #[error("growth series length {len} is not a power of two")]
    NotPowerOfTwo { len: usize },

    #[error("ring definition rejected:\n{0}")]
    RingDefinition(String),

    #[error("{0}")]
    Io(String),

    #[error("ambiguous extension at {pair}: {candidates} candidate targets with equal dimension and fusion")]
    AmbiguousExtension { pair: String, candidates: usize },

    #[error("map is not fusion-compatible: {0}")]
    IncompatibleMap(String),

    #[error("`{0}` is not in the region covered by the map")]
    Unmapped(String),
}
