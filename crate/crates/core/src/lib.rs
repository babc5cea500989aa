//! Numerical semigroups, their gluings, and the tangent cones and Hilbert
//! functions of the associated monomial curves, in exact arithmetic.
//!
//! The pipeline for one curve runs [`toric::defining_ideal`] (elimination),
//! [`tangentcone::tangent_cone`] (standard basis under a local order) and
//! [`hilbert::local_hilbert_function`]. [`gluing`] builds glued curves and
//! checks the cone and Hilbert function statements on each instance.

pub mod basis;
pub mod gluing;
pub mod hilbert;
pub mod polyalg;
pub mod semigroup;
pub mod tangentcone;
pub mod toric;

use thiserror::Error;

pub use basis::{BasisError, BasisResult};
pub use gluing::{
    glued_curve, glued_ideal, scan_family, validate_gluing, verify_instance,
    verify_instance_with_limit, AnalysisError, CurveAnalysis, CurveReport, Gluing, GluingError,
    ScanError, ScanRecord, ScanTemplate, VerificationReport,
};
pub use hilbert::{HilbertData, HilbertError, IntPoly};
pub use polyalg::{Coeff, Monomial, MonomialOrder, PolyError, Polynomial, VarNames};
pub use semigroup::{minimal_generators, NumericalSemigroup, Representation, SemigroupError};
pub use tangentcone::{ConeError, TangentConeReport};
pub use toric::{defining_ideal, CurveError, MonomialCurve};

/// Any error raised by the library, with a stable name from [`Error::code`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Semigroup(#[from] SemigroupError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Basis(#[from] BasisError),
    #[error(transparent)]
    Curve(#[from] CurveError),
    #[error(transparent)]
    Cone(#[from] ConeError),
    #[error(transparent)]
    Hilbert(#[from] HilbertError),
    #[error(transparent)]
    Gluing(#[from] GluingError),
    #[error(transparent)]
    Analysis(#[from] AnalysisError),
    #[error(transparent)]
    Scan(#[from] ScanError),
}

impl Error {
    pub fn code(&self) -> &'static str {
        match self {
            Error::Semigroup(e) => e.code(),
            Error::Poly(e) => e.code(),
            Error::Basis(e) => e.code(),
            Error::Curve(e) => e.code(),
            Error::Cone(e) => e.code(),
            Error::Hilbert(e) => e.code(),
            Error::Gluing(e) => e.code(),
            Error::Analysis(e) => e.code(),
            Error::Scan(e) => e.code(),
        }
    }
}
