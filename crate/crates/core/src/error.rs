use thiserror::Error;

use crate::poly::PolyError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("system is not cubic (the cubic homogeneous part vanishes or the degree exceeds 3)")]
    NotCubic,
    #[error("P and Q share a non-constant common factor")]
    DegenerateSystem,
    #[error("C3 vanishes identically: the line at infinity is filled with singular points")]
    LineAtInfinityDegenerate,
    #[error("translated C0 vanishes identically; cannot eliminate")]
    DegenerateOmega,
    #[error("direction is not a root of C3")]
    NotAnAsymptoticDirection,
    #[error("line coefficients need more than one quadratic radicand")]
    UnsupportedExtension,
    #[error("comitant signs match no root configuration of C3")]
    InconsistentRootStructure,
    #[error("certificate and line configuration disagree: {0}")]
    InconsistentCertificate(String),
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
}
