//! Tangent cones of monomial curves and the Cohen–Macaulay test.
//!
//! With a minimal standard basis of `I(C)` under a negative degrevlex order
//! whose lowest variable belongs to the smallest generator, the tangent
//! cone is Cohen–Macaulay exactly when that variable divides no leading
//! monomial of the basis.

use thiserror::Error;

use crate::basis::{self, BasisError, BasisResult};
use crate::polyalg::{Monomial, MonomialOrder, PolyError, Polynomial};
use crate::toric::{defining_ideal, MonomialCurve};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConeError {
    #[error("lowest variable must belong to the smallest generator (slot {smallest}), got slot {lowest}")]
    LowestNotSmallest { lowest: usize, smallest: usize },
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Basis(#[from] BasisError),
}

impl ConeError {
    pub fn code(&self) -> &'static str {
        match self {
            ConeError::LowestNotSmallest { .. } => "LowestNotSmallest",
            ConeError::Poly(e) => e.code(),
            ConeError::Basis(e) => e.code(),
        }
    }
}

#[derive(Debug, Clone)]
pub struct TangentConeReport {
    pub curve: MonomialCurve,
    pub order: MonomialOrder,
    pub basis: BasisResult,
    /// Minimal generators of the leading ideal.
    pub leading_monomials: Vec<Monomial>,
    /// Least-degree forms of the basis elements; they generate `I(C)_*`.
    pub cone_generators: Vec<Polynomial>,
    pub is_cohen_macaulay: bool,
    /// A basis element whose leading monomial the lowest variable divides.
    pub witness: Option<Polynomial>,
}

impl TangentConeReport {
    pub fn lowest_variable(&self) -> usize {
        self.order.lowest_variable()
    }
}

pub fn tangent_cone(curve: &MonomialCurve) -> TangentConeReport {
    let ideal = defining_ideal(curve);
    tangent_cone_with(curve, &ideal, None).expect("canonical priority is valid")
}

/// Tangent cone from a known generating set of `I(C)`, with an optional
/// variable priority (highest first). The priority must end with the
/// variable of the smallest generator.
pub fn tangent_cone_with(
    curve: &MonomialCurve,
    ideal: &[Polynomial],
    priority: Option<&[usize]>,
) -> Result<TangentConeReport, ConeError> {
    let priority = priority
        .map(<[usize]>::to_vec)
        .unwrap_or_else(|| curve.canonical_priority());
    let order = MonomialOrder::local_with_priority(priority)?;
    if order.nvars() != curve.nvars() {
        return Err(PolyError::ArityMismatch {
            expected: curve.nvars(),
            found: order.nvars(),
        }
        .into());
    }
    let lowest = order.lowest_variable();
    if lowest != curve.smallest_slot() {
        return Err(ConeError::LowestNotSmallest {
            lowest,
            smallest: curve.smallest_slot(),
        });
    }
    let basis = basis::standard_basis(ideal, &order)?;
    let leading_monomials = basis::leading_ideal(&basis);
    let cone_generators = basis
        .elements
        .iter()
        .map(|g| g.least_degree_form().map(|f| f.monic()))
        .collect::<Result<Vec<_>, _>>()?;
    let witness = basis
        .elements
        .iter()
        .find(|g| g.lm().exponent(lowest) > 0)
        .cloned();
    Ok(TangentConeReport {
        curve: curve.clone(),
        order,
        basis,
        leading_monomials,
        cone_generators,
        is_cohen_macaulay: witness.is_none(),
        witness,
    })
}

pub fn cone_generators(curve: &MonomialCurve) -> Vec<Polynomial> {
    tangent_cone(curve).cone_generators
}
