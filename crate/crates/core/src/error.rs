use thiserror::Error;

use crate::dsl::ParseError;
use crate::lfun::GeneralPositionReport;
use crate::registry::ValidationError;
use crate::scalar::EulerFactor;
use crate::segment::Segment;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{den} does not divide {num}")]
    NotDivisible { num: EulerFactor, den: EulerFactor },
    #[error("unknown cuspidal label `{0}`")]
    UnknownLabel(String),
    #[error("cuspidal `{0}` has no duality data")]
    NoDualData(String),
    #[error("derivative order {k} out of range 0..={max}")]
    OutOfRange { k: u32, max: u32 },
    #[error("exceptional factor requested on odd dimension {0}")]
    OddDimension(u32),
    #[error("parts {} and {} are linked", .0.0, .0.1)]
    LinkedParts(Box<(Segment, Segment)>),
    #[error("representation is not generic (some pair of segments is linked)")]
    NotGeneric,
    #[error("representation is not in general position: {0}")]
    NotGeneralPosition(GeneralPositionReport),
    #[error("representation has no segments")]
    EmptyRepresentation,
    #[error(transparent)]
    Validation(#[from] ValidationError),
    #[error("registry format: {0}")]
    RegistryFormat(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
