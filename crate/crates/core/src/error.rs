use alloc::string::String;
use alloc::vec::Vec;

use crate::rootsys::Family;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid root system {family}{rank}: {reason}")]
    InvalidType {
        family: Family,
        rank: usize,
        reason: &'static str,
    },
    #[error("unknown root system type {0:?}")]
    UnknownType(String),
    #[error("index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },
    #[error("vector {coords:?} has length {len}, expected rank {rank}")]
    DimensionMismatch {
        coords: Vec<i64>,
        len: usize,
        rank: usize,
    },
    #[error("{0:?} is not a root")]
    NotARoot(Vec<i64>),
    #[error("weight {0:?} is not dominant")]
    NotDominant(Vec<i64>),
    #[error("parabolic must be maximal, got omitted set {0:?}")]
    NotMaximal(Vec<usize>),
    #[error("epsilon combination {0:?} is not a root")]
    NotAnEpsilonRoot(Vec<i64>),
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
    #[error("no shortest extremal path from source to sink")]
    Unreachable,
    #[error("no certificate recorded for this configuration")]
    NoPaperCertificate,
}
