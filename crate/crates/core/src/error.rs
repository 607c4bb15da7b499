use thiserror::Error;

use crate::grading::GroupElement;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GradingError {
    #[error("malformed group element (a2={a2}, b2={b2}, c2={c2}, d={d}): b + c must be an integer")]
    Malformed { a2: i64, b2: i64, c2: i64, d: i64 },
    #[error("grading arithmetic overflow")]
    Overflow,
    #[error("invalid double coset context: {0}")]
    BadContext(&'static str),
    #[error("cannot normalize {element}: non-integral {stage}-component")]
    NonIntegral { stage: &'static str, element: GroupElement },
    #[error("{0} has no grading")]
    Ungraded(&'static str),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ModelError {
    #[error("asymmetric squares: {count_pos} square(s) centered at {center} but {count_neg} at {}", -center)]
    AsymmetricSquares { center: i64, count_pos: usize, count_neg: usize },
    #[error("invalid L-space exponents: {0}")]
    BadLspace(String),
    #[error("Alexander polynomial evaluates to {0} at t = 1")]
    NotAKnot(i64),
    #[error("model fails validation: {0}")]
    Invalid(String),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum StructureError {
    #[error(transparent)]
    Grading(#[from] GradingError),
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error("inconsistent grading on edge {src} -> {dst} ({label})")]
    EdgeGrading { src: String, dst: String, label: String },
    #[error("differential does not square to zero ({0} nonzero entries in d^2)")]
    NotAComplex(usize),
    #[error("differential {src} -> {dst} breaks the bigrading")]
    BadArrowGrading { src: String, dst: String },
    #[error("no Alexander shift makes the ranks symmetric")]
    NoSymmetricShift,
    #[error("Alexander support has odd width {0}")]
    OddWidth(i64),
    #[error("homology is empty")]
    Empty,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CscError {
    #[error("the trivial satellite Q_0(U) has no cosmetic surgery question")]
    TrivialSatellite,
    #[error(transparent)]
    Structure(#[from] StructureError),
}
