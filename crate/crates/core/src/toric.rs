//! Monomial curves and their defining (toric) ideals.

use thiserror::Error;

use crate::basis::{self, BasisError};
use crate::polyalg::{Monomial, MonomialOrder, Polynomial, VarNames};
use crate::semigroup::{minimal_generators, NumericalSemigroup, SemigroupError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CurveError {
    #[error(transparent)]
    Semigroup(#[from] SemigroupError),
    #[error("generators {0:?} are not a minimal generating set")]
    NotMinimal(Vec<u64>),
    #[error("{names} variable names for {gens} generators")]
    NameCount { names: usize, gens: usize },
}

impl CurveError {
    pub fn code(&self) -> &'static str {
        match self {
            CurveError::Semigroup(e) => e.code(),
            CurveError::NotMinimal(_) => "NotMinimal",
            CurveError::NameCount { .. } => "NameCount",
        }
    }
}

/// The affine curve `t ↦ (t^{n₁}, …, t^{n_k})`.
///
/// Slot `i` carries the variable `names[i]` and the generator
/// `generators[i]`. Curves built from a semigroup list their generators in
/// increasing order; glued curves keep the `x`-block then the `y`-block.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialCurve {
    semigroup: NumericalSemigroup,
    generators: Vec<u64>,
    names: VarNames,
}

impl MonomialCurve {
    pub fn new(semigroup: NumericalSemigroup) -> Self {
        let generators = semigroup.generators().to_vec();
        let names = VarNames::curve(generators.len());
        MonomialCurve {
            semigroup,
            generators,
            names,
        }
    }

    pub fn from_generators(raw: &[u64]) -> Result<Self, CurveError> {
        Ok(Self::new(minimal_generators(raw)?))
    }

    /// A curve whose slots follow `generators` exactly, which must be a
    /// permutation of a minimal generating set.
    pub fn with_layout(generators: Vec<u64>, names: VarNames) -> Result<Self, CurveError> {
        if names.len() != generators.len() {
            return Err(CurveError::NameCount {
                names: names.len(),
                gens: generators.len(),
            });
        }
        let semigroup = minimal_generators(&generators)?;
        let mut sorted = generators.clone();
        sorted.sort_unstable();
        if sorted != semigroup.generators() {
            return Err(CurveError::NotMinimal(generators));
        }
        Ok(MonomialCurve {
            semigroup,
            generators,
            names,
        })
    }

    pub fn semigroup(&self) -> &NumericalSemigroup {
        &self.semigroup
    }

    pub fn generators(&self) -> &[u64] {
        &self.generators
    }

    pub fn names(&self) -> &VarNames {
        &self.names
    }

    pub fn nvars(&self) -> usize {
        self.generators.len()
    }

    /// Slot of the smallest generator.
    pub fn smallest_slot(&self) -> usize {
        (0..self.nvars())
            .min_by_key(|&i| self.generators[i])
            .unwrap()
    }

    /// Slots sorted by decreasing generator, so the smallest generator's
    /// variable comes last.
    pub fn canonical_priority(&self) -> Vec<usize> {
        let mut p: Vec<usize> = (0..self.nvars()).collect();
        p.sort_by_key(|&i| std::cmp::Reverse(self.generators[i]));
        p
    }

    /// Degree of a monomial in the grading `deg xᵢ = nᵢ`.
    pub fn weighted_degree(&self, m: &Monomial) -> u64 {
        m.exponents()
            .iter()
            .zip(&self.generators)
            .map(|(&e, &n)| e as u64 * n)
            .sum()
    }

    /// Degrevlex in slot order; the order defining ideals are returned in.
    pub fn global_order(&self) -> MonomialOrder {
        MonomialOrder::degrevlex(self.nvars())
    }

    pub fn display_name(&self) -> String {
        let g: Vec<String> = self.generators.iter().map(|n| n.to_string()).collect();
        format!("C({})", g.join(","))
    }
}

/// Generators of the kernel of `xᵢ ↦ t^{nᵢ}`.
///
/// Eliminates `t` from `⟨xᵢ − t^{nᵢ}⟩` with a block order (pairs taken in
/// increasing weighted degree), keeps the
/// `t`-free part of the reduced Gröbner basis and drops redundant elements.
/// The output binomials are monic under [`MonomialCurve::global_order`],
/// sorted by weighted degree.
pub fn defining_ideal(curve: &MonomialCurve) -> Vec<Polynomial> {
    let k = curve.nvars();
    let n = k + 1;
    let mut block = vec![false; n];
    block[0] = true;
    let elim = MonomialOrder::elimination(block);
    let gens: Vec<Polynomial> = curve
        .generators()
        .iter()
        .enumerate()
        .map(|(i, &g)| {
            let exp = u32::try_from(g).expect("generator exceeds exponent range");
            Polynomial::binomial(
                Monomial::var_power(n, 0, exp),
                Monomial::var_power(n, i + 1, 1),
                &elim,
            )
        })
        .collect();
    // the input is homogeneous for deg t = 1, deg xᵢ = nᵢ
    let weights: Vec<u64> = std::iter::once(1)
        .chain(curve.generators().iter().copied())
        .collect();
    let gb = basis::buchberger_weighted(&gens, &elim, Some(&weights))
        .expect("elimination order is global");

    let order = curve.global_order();
    let eliminated: Vec<Polynomial> = gb
        .elements
        .iter()
        .filter(|p| !p.uses_variable(0))
        .map(|p| p.restrict(&order, 1..n).monic())
        .collect();
    let mut out = basis::prune_redundant(&eliminated, &order).expect("degrevlex is global");
    for f in &out {
        debug_assert!(
            is_homogeneous_binomial(curve, f),
            "{f:?} is not in the kernel"
        );
    }
    out.sort_by(|a, b| {
        curve
            .weighted_degree(a.lm())
            .cmp(&curve.weighted_degree(b.lm()))
            .then_with(|| order.cmp(a.lm(), b.lm()))
    });
    out
}

/// `x^u − x^v` with equal weighted degrees on both sides.
pub fn is_homogeneous_binomial(curve: &MonomialCurve, f: &Polynomial) -> bool {
    use num_traits::{One, Zero};
    match f.terms() {
        [(u, a), (v, b)] => {
            a.is_one() && (b + a).is_zero() && curve.weighted_degree(u) == curve.weighted_degree(v)
        }
        _ => false,
    }
}

/// Size of a minimal generating set: each generator is dropped if it lies
/// in the ideal of the others.
///
/// Toric ideals are homogeneous for a positive grading, so any
/// irredundant homogeneous generating set has minimal size.
pub fn minimal_generator_count(gens: &[Polynomial]) -> Result<usize, BasisError> {
    let Some(first) = gens.first() else {
        return Ok(0);
    };
    let order = MonomialOrder::degrevlex(first.nvars());
    Ok(basis::prune_redundant(gens, &order)?.len())
}

/// Whether `I(C)` is minimally generated by `k − 1` binomials.
pub fn is_complete_intersection(curve: &MonomialCurve) -> bool {
    let ideal = defining_ideal(curve);
    minimal_generator_count(&ideal).expect("degrevlex is global") + 1 == curve.nvars()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn curve(g: &[u64]) -> MonomialCurve {
        MonomialCurve::from_generators(g).unwrap()
    }

    fn show(c: &MonomialCurve, ideal: &[Polynomial]) -> Vec<String> {
        ideal.iter().map(|f| c.names().format(f)).collect()
    }

    fn same_up_to_sign(c: &MonomialCurve, ideal: &[Polynomial], expected: &[&str]) {
        let ord = c.global_order();
        let mut got: Vec<Polynomial> = ideal.iter().map(|f| f.monic()).collect();
        let mut want: Vec<Polynomial> = expected
            .iter()
            .map(|s| c.names().parse(s, &ord).unwrap().monic())
            .collect();
        let key = |p: &Polynomial| c.names().format(p);
        got.sort_by_key(key);
        want.sort_by_key(key);
        assert_eq!(got, want, "{:?}", show(c, ideal));
    }

    #[test]
    fn defining_ideal_examples() {
        let c = curve(&[2, 3]);
        same_up_to_sign(&c, &defining_ideal(&c), &["x1^3 - x2^2"]);
        let c = curve(&[5, 12]);
        same_up_to_sign(&c, &defining_ideal(&c), &["x1^12 - x2^5"]);
        let c = curve(&[6, 7, 15]);
        same_up_to_sign(&c, &defining_ideal(&c), &["x1^5 - x3^2", "x1*x3 - x2^3"]);
        let c = curve(&[1]);
        assert!(defining_ideal(&c).is_empty());
    }

    #[test]
    fn twisted_cubic_like_curve_needs_three_generators() {
        let c = curve(&[3, 4, 5]);
        let ideal = defining_ideal(&c);
        assert_eq!(ideal.len(), 3);
        assert_eq!(minimal_generator_count(&ideal).unwrap(), 3);
        assert!(!is_complete_intersection(&c));
    }

    #[test]
    fn complete_intersections() {
        assert!(is_complete_intersection(&curve(&[2, 3])));
        assert!(is_complete_intersection(&curve(&[6, 7, 15])));
        assert!(is_complete_intersection(&curve(&[16, 24, 28, 35])));
        assert_eq!(
            minimal_generator_count(&defining_ideal(&curve(&[2, 3]))).unwrap(),
            1
        );
    }

    #[test]
    fn kernel_soundness() {
        for g in [
            &[3u64, 5, 7][..],
            &[4, 6, 9],
            &[5, 7, 9, 11],
            &[8, 9, 10, 11],
        ] {
            let c = curve(g);
            for f in defining_ideal(&c) {
                assert!(is_homogeneous_binomial(&c, &f), "{g:?}: {f:?}");
            }
        }
    }

    #[test]
    fn layout_checks() {
        let names = VarNames::glued(2, 2);
        let c = MonomialCurve::with_layout(vec![105, 252, 119, 136], names.clone()).unwrap();
        assert_eq!(c.smallest_slot(), 0);
        assert_eq!(c.canonical_priority(), vec![1, 3, 2, 0]);
        assert!(matches!(
            MonomialCurve::with_layout(vec![2, 4, 3, 5], names),
            Err(CurveError::NotMinimal(_))
        ));
    }
}
