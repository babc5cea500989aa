//! Gluings of numerical semigroups and their monomial curves.
//!
//! Given `S₁ = ⟨m₁,…,m_l⟩`, `S₂ = ⟨n₁,…,n_k⟩` and coprime `p ∈ S₁`,
//! `q ∈ S₂`, the glued semigroup is `⟨qm₁,…,qm_l, pn₁,…,pn_k⟩`. Its defining
//! ideal is generated by `I(C₁)`, `I(C₂)` and one binomial `x^b − y^a`,
//! where `p = Σ bᵢmᵢ` and `q = Σ aⱼnⱼ`.

mod scan;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::basis::{self, BasisError};
use crate::hilbert::{HilbertData, HilbertError, IntPoly};
use crate::polyalg::{minimize_monomials, Monomial, MonomialOrder, Polynomial, VarNames};
use crate::semigroup::{NumericalSemigroup, Representation};
use crate::tangentcone::{tangent_cone_with, ConeError, TangentConeReport};
use crate::toric::{defining_ideal, MonomialCurve};

pub use scan::{
    scan_family, LinearExpr, ReproductionBundle, ScanError, ScanOutcome, ScanRecord, ScanTemplate,
    Verdicts,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GluingError {
    #[error("gcd(p, q) = {gcd}, expected 1")]
    GcdViolation { gcd: u64 },
    #[error("p = {0} is a minimal generator of S1")]
    PIsMinimalGenerator(u64),
    #[error("q = {0} is a minimal generator of S2")]
    QIsMinimalGenerator(u64),
    #[error("{which} = {value} does not lie in {semigroup}")]
    NotInSemigroup {
        which: &'static str,
        value: u64,
        semigroup: String,
    },
    #[error("q*{m} = p*{n} = {value} appears in both generator blocks")]
    GeneratorCollision { m: u64, n: u64, value: u64 },
}

impl GluingError {
    pub fn code(&self) -> &'static str {
        match self {
            GluingError::GcdViolation { .. } => "GcdViolation",
            GluingError::PIsMinimalGenerator(_) => "PIsMinimalGenerator",
            GluingError::QIsMinimalGenerator(_) => "QIsMinimalGenerator",
            GluingError::NotInSemigroup { .. } => "NotInSemigroup",
            GluingError::GeneratorCollision { .. } => "GeneratorCollision",
        }
    }
}

/// A validated gluing together with the witnesses used for the glued binomial.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Gluing {
    pub s1: NumericalSemigroup,
    pub s2: NumericalSemigroup,
    pub p: u64,
    pub q: u64,
    /// `p = Σ bᵢmᵢ`.
    pub b: Representation,
    /// `q = Σ aⱼnⱼ`.
    pub a: Representation,
    pub nice: bool,
}

impl Gluing {
    pub fn l(&self) -> usize {
        self.s1.len()
    }

    pub fn k(&self) -> usize {
        self.s2.len()
    }

    /// `q·m₁, …, q·m_l, p·n₁, …, p·n_k` in slot order.
    pub fn glued_generators(&self) -> Vec<u64> {
        let q = self.q;
        let p = self.p;
        self.s1
            .generators()
            .iter()
            .map(|m| q * m)
            .chain(self.s2.generators().iter().map(|n| p * n))
            .collect()
    }

    /// `a₁` when the gluing is nice.
    pub fn a1(&self) -> Option<u64> {
        self.nice.then(|| self.a.coefficients[0])
    }
}

/// Lexicographically largest representation of `v` of length at least
/// `need`, if any.
fn lex_largest_representation(s: &NumericalSemigroup, v: u64, need: u64) -> Option<Representation> {
    let gens = s.generators();
    let k = gens.len();
    let v = v as usize;
    // best[i][w]: longest representation of w by gens[i..], or None
    let mut best = vec![vec![None::<u64>; v + 1]; k + 1];
    best[k][0] = Some(0);
    for i in (0..k).rev() {
        let g = gens[i] as usize;
        for w in 0..=v {
            let mut top = best[i + 1][w];
            if w >= g {
                if let Some(x) = best[i][w - g] {
                    top = top.max(Some(x + 1));
                }
            }
            best[i][w] = top;
        }
    }
    if best[0][v].map_or(true, |x| x < need) {
        return None;
    }
    let mut coefficients = vec![0u64; k];
    let mut rest = v;
    let mut have = 0u64;
    for i in 0..k {
        let g = gens[i] as usize;
        let c = (0..=rest / g)
            .rev()
            .find(|&c| best[i + 1][rest - c * g].is_some_and(|x| have + c as u64 + x >= need))
            .expect("feasible by the table");
        coefficients[i] = c as u64;
        rest -= c * g;
        have += c as u64;
    }
    Some(Representation::new(coefficients, gens))
}

/// Longest representation length of `v`.
fn max_length(s: &NumericalSemigroup, v: u64) -> Option<u64> {
    let gens = s.generators();
    let mut best = vec![None::<u64>; v as usize + 1];
    best[0] = Some(0);
    for w in 1..=v as usize {
        best[w] = gens
            .iter()
            .filter(|&&g| g as usize <= w)
            .filter_map(|&g| best[w - g as usize].map(|x| x + 1))
            .max();
    }
    best[v as usize]
}

/// Checks the gluing conditions and picks the witness representations.
///
/// The gluing is nice when `n₁ | q` and some representation of `p` has
/// length at least `a₁ = q/n₁`. Witnesses: `a` concentrated on `n₁` when
/// possible, and `b` the lexicographically largest representation of
/// length `≥ a₁` (nice) or of maximal length (otherwise).
pub fn validate_gluing(
    s1: &NumericalSemigroup,
    s2: &NumericalSemigroup,
    p: u64,
    q: u64,
) -> Result<Gluing, GluingError> {
    let gcd = num_integer::gcd(p, q);
    if gcd != 1 {
        return Err(GluingError::GcdViolation { gcd });
    }
    if !s1.is_member(p) {
        return Err(GluingError::NotInSemigroup {
            which: "p",
            value: p,
            semigroup: s1.to_string(),
        });
    }
    if !s2.is_member(q) {
        return Err(GluingError::NotInSemigroup {
            which: "q",
            value: q,
            semigroup: s2.to_string(),
        });
    }
    if s1.generators().contains(&p) {
        return Err(GluingError::PIsMinimalGenerator(p));
    }
    if s2.generators().contains(&q) {
        return Err(GluingError::QIsMinimalGenerator(q));
    }
    // unreachable once the clauses above hold, kept as a guard
    for &m in s1.generators() {
        for &n in s2.generators() {
            if q * m == p * n {
                return Err(GluingError::GeneratorCollision { m, n, value: q * m });
            }
        }
    }

    let n1 = s2.multiplicity();
    let longest = max_length(s1, p).expect("p is a member");
    let nice = q % n1 == 0 && longest >= q / n1;
    let (a, b) = if nice {
        let a1 = q / n1;
        let mut coefficients = vec![0; s2.len()];
        coefficients[0] = a1;
        (
            Representation::new(coefficients, s2.generators()),
            lex_largest_representation(s1, p, a1).expect("nice witness exists"),
        )
    } else {
        let a = if q % n1 == 0 {
            let mut coefficients = vec![0; s2.len()];
            coefficients[0] = q / n1;
            Representation::new(coefficients, s2.generators())
        } else {
            lex_largest_representation(s2, q, 0).expect("q is a member")
        };
        (
            a,
            lex_largest_representation(s1, p, longest).expect("p is a member"),
        )
    };
    Ok(Gluing {
        s1: s1.clone(),
        s2: s2.clone(),
        p,
        q,
        b,
        a,
        nice,
    })
}

/// The glued curve, slots `x₁…x_l` then `y₁…y_k`.
pub fn glued_curve(gluing: &Gluing) -> MonomialCurve {
    MonomialCurve::with_layout(
        gluing.glued_generators(),
        VarNames::glued(gluing.l(), gluing.k()),
    )
    .expect("gluing conditions give a minimal generating set")
}

/// `G₁ ∪ G₂ ∪ {x^b − y^a}` in the joint ring, under degrevlex, each
/// element monic.
pub fn glued_ideal(gluing: &Gluing, g1: &[Polynomial], g2: &[Polynomial]) -> Vec<Polynomial> {
    let (l, k) = (gluing.l(), gluing.k());
    let order = MonomialOrder::degrevlex(l + k);
    let exps = |r: &Representation| -> Vec<u32> {
        r.coefficients
            .iter()
            .map(|&c| u32::try_from(c).expect("exponent range"))
            .collect()
    };
    let xb = Monomial::new(&exps(&gluing.b)).embed(l + k, 0);
    let ya = Monomial::new(&exps(&gluing.a)).embed(l + k, l);
    g1.iter()
        .map(|f| f.embed(&order, 0))
        .chain(g2.iter().map(|g| g.embed(&order, l)))
        .chain(std::iter::once(
            Polynomial::binomial(xb, ya, &order).monic(),
        ))
        .collect()
}

/// Everything computed for one curve, rendered with its variable names.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveReport {
    pub generators: Vec<u64>,
    pub variables: Vec<String>,
    pub order: String,
    pub ideal: Vec<String>,
    pub standard_basis: Vec<String>,
    pub leading_monomials: Vec<String>,
    pub cohen_macaulay: bool,
    pub witness: Option<String>,
    pub cone: Vec<String>,
    pub h: IntPoly,
    pub hf_prefix: Vec<u64>,
    pub multiplicity: i64,
    pub nondecreasing: bool,
    pub gorenstein: bool,
    pub complete_intersection: bool,
}

/// Tangent cone and Hilbert function of one curve, kept in algebraic form.
#[derive(Debug, Clone)]
pub struct CurveAnalysis {
    pub curve: MonomialCurve,
    pub ideal: Vec<Polynomial>,
    pub cone: TangentConeReport,
    pub hilbert: HilbertData,
}

impl CurveAnalysis {
    /// Runs the pipeline with `ideal` as the generating set of `I(C)` and
    /// an optional priority (highest first).
    pub fn run(
        curve: &MonomialCurve,
        ideal: Vec<Polynomial>,
        priority: Option<&[usize]>,
        limit: Option<usize>,
    ) -> Result<Self, AnalysisError> {
        let cone = tangent_cone_with(curve, &ideal, priority)?;
        let hilbert =
            HilbertData::from_leading_ideal(&cone.leading_monomials, curve.nvars(), limit)?;
        Ok(CurveAnalysis {
            curve: curve.clone(),
            ideal,
            cone,
            hilbert,
        })
    }

    pub fn new(
        curve: &MonomialCurve,
        priority: Option<&[usize]>,
        limit: Option<usize>,
    ) -> Result<Self, AnalysisError> {
        Self::run(curve, defining_ideal(curve), priority, limit)
    }

    pub fn multiplicity_consistent(&self) -> bool {
        !self.cone.is_cohen_macaulay
            || self.hilbert.multiplicity == self.curve.semigroup().multiplicity() as i64
    }

    pub fn report(&self) -> CurveReport {
        let names = self.curve.names();
        let fmt_all = |v: &[Polynomial]| v.iter().map(|f| names.format(f)).collect::<Vec<_>>();
        CurveReport {
            generators: self.curve.generators().to_vec(),
            variables: names.names().to_vec(),
            order: names.format_priority(self.cone.order.priority()),
            ideal: fmt_all(&self.ideal),
            standard_basis: fmt_all(&self.cone.basis.elements),
            leading_monomials: self
                .cone
                .leading_monomials
                .iter()
                .map(|m| names.format_monomial(m))
                .collect(),
            cohen_macaulay: self.cone.is_cohen_macaulay,
            witness: self.cone.witness.as_ref().map(|w| names.format(w)),
            cone: fmt_all(&self.cone.cone_generators),
            h: self.hilbert.reduced_numerator.clone(),
            hf_prefix: self.hilbert.hf_prefix.clone(),
            multiplicity: self.hilbert.multiplicity,
            nondecreasing: self.hilbert.nondecreasing,
            gorenstein: self.curve.semigroup().is_symmetric(),
            complete_intersection: self.ideal.len() + 1 == self.curve.nvars(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AnalysisError {
    #[error(transparent)]
    Cone(#[from] ConeError),
    #[error(transparent)]
    Hilbert(#[from] HilbertError),
    #[error(transparent)]
    Basis(#[from] BasisError),
}

impl AnalysisError {
    pub fn code(&self) -> &'static str {
        match self {
            AnalysisError::Cone(e) => e.code(),
            AnalysisError::Hilbert(e) => e.code(),
            AnalysisError::Basis(e) => e.code(),
        }
    }
}

/// Leading ideal of the glued basis under `y₂>…>y_k>y₁>x₂>…>x_l>x₁`
/// against the union of the component leading ideals and `y₁^{a₁}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionCheck {
    pub order: String,
    pub expected: Vec<String>,
    pub found: Vec<String>,
    pub ok: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub gluing: Gluing,
    pub c1: CurveReport,
    pub c2: CurveReport,
    pub glued: CurveReport,
    /// `G₁ ∪ G₂ ∪ {x^b − y^a}`.
    pub gluing_generators: Vec<String>,
    /// The set above and the elimination result generate the same ideal.
    pub ideal_agreement: bool,
    /// For nice gluings: `q·m₁` is the smallest glued generator and `q·m₁ < p·n₁`.
    pub smallest_generator_ok: Option<bool>,
    /// A CM cone has multiplicity equal to the smallest generator, on all three curves.
    pub multiplicity_ok: bool,
    /// Nice gluing of two CM cones.
    pub cm_transfer_applicable: bool,
    pub cm_transfer_confirmed: bool,
    /// Nice gluing with `HF(C₁)` nondecreasing and `C₂` CM.
    pub monotone_transfer_applicable: bool,
    pub monotone_transfer_confirmed: bool,
    pub decomposition: Option<DecompositionCheck>,
    pub factorization_ok: Option<bool>,
    pub gorenstein: bool,
    pub complete_intersection: bool,
    /// Gorenstein with a decreasing Hilbert function.
    pub decreasing_gorenstein: bool,
}

impl VerificationReport {
    /// Names of the checks that failed. Empty on every correct instance.
    pub fn violations(&self) -> Vec<&'static str> {
        let mut v = Vec::new();
        if !self.ideal_agreement {
            v.push("ideal_agreement");
        }
        if self.smallest_generator_ok == Some(false) {
            v.push("smallest_generator");
        }
        if !self.multiplicity_ok {
            v.push("multiplicity");
        }
        if self.cm_transfer_applicable && !self.cm_transfer_confirmed {
            v.push("cm_transfer");
        }
        if self.monotone_transfer_applicable && !self.monotone_transfer_confirmed {
            v.push("monotone_transfer");
        }
        if self.decomposition.as_ref().is_some_and(|d| !d.ok) {
            v.push("decomposition");
        }
        if self.factorization_ok == Some(false) {
            v.push("factorization");
        }
        v
    }
}

/// Priority `x₂ > … > x_l > x₁` on `l` slots.
fn component_priority(l: usize) -> Vec<usize> {
    (1..l).chain(std::iter::once(0)).collect()
}

pub fn verify_instance(gluing: &Gluing) -> Result<VerificationReport, AnalysisError> {
    verify_instance_with_limit(gluing, None)
}

/// Verification with the Hilbert function prefix of the glued curve taken
/// through `limit` (components use their default length).
pub fn verify_instance_with_limit(
    gluing: &Gluing,
    limit: Option<usize>,
) -> Result<VerificationReport, AnalysisError> {
    let (l, k) = (gluing.l(), gluing.k());
    let c1 = MonomialCurve::new(gluing.s1.clone());
    let y_names = VarNames::new((1..=k).map(|i| format!("y{i}")).collect()).expect("valid names");
    let c2 = MonomialCurve::with_layout(gluing.s2.generators().to_vec(), y_names)
        .expect("minimal generators");
    let a1 = CurveAnalysis::new(&c1, Some(&component_priority(l)), None)?;
    let a2 = CurveAnalysis::new(&c2, Some(&component_priority(k)), None)?;

    let glued = glued_curve(gluing);
    let g = glued_ideal(gluing, &a1.ideal, &a2.ideal);
    let elim = defining_ideal(&glued);
    let ideal_agreement = basis::same_ideal(&g, &elim, &glued.global_order())?;
    let ag = CurveAnalysis::run(&glued, elim, None, limit)?;

    let gens = gluing.glued_generators();
    let min_gen = *gens.iter().min().unwrap();
    let qm1 = gluing.q * gluing.s1.multiplicity();
    let smallest_generator_ok = gluing
        .nice
        .then(|| qm1 < gluing.p * gluing.s2.multiplicity() && qm1 == min_gen);

    let cm1 = a1.cone.is_cohen_macaulay;
    let cm2 = a2.cone.is_cohen_macaulay;
    let cm_transfer_applicable = gluing.nice && cm1 && cm2;
    let monotone_transfer_applicable = gluing.nice && cm2 && a1.hilbert.nondecreasing;

    let (decomposition, factorization_ok) = if monotone_transfer_applicable {
        let a1_exp = gluing.a1().unwrap();
        let check = decomposition_check(gluing, &glued, &g, &a1, &a2, a1_exp)?;
        let h1 = &a1.hilbert.reduced_numerator;
        let h2 = &a2.hilbert.reduced_numerator;
        let fact = crate::hilbert::product_factorization_check(&ag.hilbert, h1, h2, a1_exp);
        (Some(check), Some(fact))
    } else {
        (None, None)
    };

    let glued_report = ag.report();
    Ok(VerificationReport {
        gluing: gluing.clone(),
        gluing_generators: g.iter().map(|f| glued.names().format(f)).collect(),
        ideal_agreement,
        smallest_generator_ok,
        multiplicity_ok: a1.multiplicity_consistent()
            && a2.multiplicity_consistent()
            && ag.multiplicity_consistent(),
        cm_transfer_applicable,
        cm_transfer_confirmed: cm_transfer_applicable && glued_report.cohen_macaulay,
        monotone_transfer_applicable,
        monotone_transfer_confirmed: monotone_transfer_applicable && glued_report.nondecreasing,
        decomposition,
        factorization_ok,
        gorenstein: glued_report.gorenstein,
        complete_intersection: glued_report.complete_intersection,
        decreasing_gorenstein: glued_report.gorenstein && !glued_report.nondecreasing,
        c1: a1.report(),
        c2: a2.report(),
        glued: glued_report,
    })
}

fn decomposition_check(
    gluing: &Gluing,
    glued: &MonomialCurve,
    g: &[Polynomial],
    a1: &CurveAnalysis,
    a2: &CurveAnalysis,
    a1_exp: u64,
) -> Result<DecompositionCheck, AnalysisError> {
    let (l, k) = (gluing.l(), gluing.k());
    let n = l + k;
    let priority: Vec<usize> = (l + 1..n)
        .chain(std::iter::once(l))
        .chain(1..l)
        .chain(std::iter::once(0))
        .collect();
    let cone = tangent_cone_with(glued, g, Some(&priority))?;
    let names = glued.names();
    let mut expected: Vec<Monomial> = a1
        .cone
        .leading_monomials
        .iter()
        .map(|m| m.embed(n, 0))
        .chain(a2.cone.leading_monomials.iter().map(|m| m.embed(n, l)))
        .collect();
    expected.push(Monomial::var_power(
        n,
        l,
        u32::try_from(a1_exp).expect("exponent range"),
    ));
    let expected = minimize_monomials(expected);
    let fmt = |v: &[Monomial]| {
        let mut s: Vec<String> = v.iter().map(|m| names.format_monomial(m)).collect();
        s.sort();
        s
    };
    let expected = fmt(&expected);
    let found = fmt(&cone.leading_monomials);
    Ok(DecompositionCheck {
        order: names.format_priority(&priority),
        ok: expected == found,
        expected,
        found,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::minimal_generators;

    fn sg(g: &[u64]) -> NumericalSemigroup {
        minimal_generators(g).unwrap()
    }

    #[test]
    fn validation_examples() {
        let s = validate_gluing(&sg(&[5, 12]), &sg(&[7, 8]), 17, 21).unwrap();
        assert!(!s.nice);
        assert_eq!(s.b.coefficients, vec![1, 1]);
        assert_eq!(s.a.coefficients, vec![3, 0]);

        let s = validate_gluing(&sg(&[2, 3]), &sg(&[4, 5]), 7, 8).unwrap();
        assert!(s.nice);
        assert_eq!(s.a.coefficients, vec![2, 0]);
        assert_eq!(s.b.coefficients, vec![2, 1]);

        let e = validate_gluing(&sg(&[2, 3]), &sg(&[4, 5]), 6, 8).unwrap_err();
        assert_eq!(e.code(), "GcdViolation");
    }

    #[test]
    fn each_clause_is_named() {
        let code = |s1: &[u64], s2: &[u64], p, q| {
            validate_gluing(&sg(s1), &sg(s2), p, q).unwrap_err().code()
        };
        assert_eq!(code(&[2, 3], &[4, 5], 1, 8), "NotInSemigroup");
        assert_eq!(code(&[2, 3], &[4, 5], 7, 7), "GcdViolation");
        assert_eq!(code(&[2, 3], &[4, 5], 7, 11), "NotInSemigroup");
        assert_eq!(code(&[2, 3], &[4, 5], 3, 8), "PIsMinimalGenerator");
        assert_eq!(code(&[2, 3], &[4, 5], 7, 5), "QIsMinimalGenerator");
        assert_eq!(code(&[6, 7, 15], &[1], 13, 1), "QIsMinimalGenerator");
    }

    #[test]
    fn niceness_is_role_asymmetric() {
        let fwd = validate_gluing(&sg(&[5, 12]), &sg(&[7, 8]), 17, 21).unwrap();
        let back = validate_gluing(&sg(&[7, 8]), &sg(&[5, 12]), 21, 17).unwrap();
        assert!(!fwd.nice);
        // 17 = 5 + 12 is not a multiple of 5
        assert!(!back.nice);
        // <2,3> glued with <4,5> at (7, 8) is nice; swapping roles is not
        let fwd = validate_gluing(&sg(&[2, 3]), &sg(&[4, 5]), 7, 8).unwrap();
        let back = validate_gluing(&sg(&[4, 5]), &sg(&[2, 3]), 8, 7).unwrap();
        assert!(fwd.nice);
        assert!(!back.nice);
    }

    #[test]
    fn lex_largest_matches_enumeration() {
        for gens in [&[2u64, 3][..], &[5, 12], &[6, 7, 15], &[4, 6, 9, 11]] {
            let s = sg(gens);
            for v in 0..80 {
                let all = s.all_representations(v);
                for need in 0..8 {
                    let want = all.iter().filter(|r| r.length() >= need).max().cloned();
                    assert_eq!(
                        lex_largest_representation(&s, v, need),
                        want,
                        "{gens:?} {v} {need}"
                    );
                }
                assert_eq!(
                    max_length(&s, v),
                    all.iter().map(Representation::length).max()
                );
            }
        }
    }

    #[test]
    fn glued_curves_of_the_examples() {
        let s = validate_gluing(&sg(&[5, 12]), &sg(&[7, 8]), 17, 21).unwrap();
        assert_eq!(glued_curve(&s).generators(), &[105, 252, 119, 136]);
        let s = validate_gluing(&sg(&[2, 3]), &sg(&[4, 5]), 7, 8).unwrap();
        assert_eq!(glued_curve(&s).generators(), &[16, 24, 28, 35]);
        let s = validate_gluing(&sg(&[6, 7, 15]), &sg(&[1]), 19, 2).unwrap();
        assert_eq!(glued_curve(&s).generators(), &[12, 14, 30, 19]);
        assert!(s.nice);
        assert_eq!(s.b.coefficients, vec![2, 1, 0]);
    }

    #[test]
    fn gluing_generators() {
        let s = validate_gluing(&sg(&[5, 12]), &sg(&[7, 8]), 17, 21).unwrap();
        let r = verify_instance(&s).unwrap();
        let mut got = r.gluing_generators.clone();
        got.sort();
        assert_eq!(got, vec!["x1^12 - x2^5", "y1^3 - x1*x2", "y1^8 - y2^7"]);
        assert!(r.ideal_agreement);

        let s = validate_gluing(&sg(&[6, 7, 15]), &sg(&[1]), 6 * 5 + 7, 5).unwrap();
        let r = verify_instance(&s).unwrap();
        assert!(
            r.gluing_generators.contains(&"x1^5*x2 - y1^5".to_string()),
            "{:?}",
            r.gluing_generators
        );
    }

    #[test]
    fn example_verdicts() {
        let s = validate_gluing(&sg(&[5, 12]), &sg(&[7, 8]), 17, 21).unwrap();
        let r = verify_instance(&s).unwrap();
        assert!(!r.cm_transfer_applicable && !r.monotone_transfer_applicable);
        assert!(!r.glued.cohen_macaulay);
        assert!(r.glued.nondecreasing);
        assert!(r.violations().is_empty());

        let s = validate_gluing(&sg(&[2, 3]), &sg(&[4, 5]), 7, 8).unwrap();
        let r = verify_instance(&s).unwrap();
        assert!(r.cm_transfer_applicable && r.cm_transfer_confirmed);
        assert!(r.monotone_transfer_applicable && r.monotone_transfer_confirmed);
        assert_eq!(r.factorization_ok, Some(true));
        assert!(
            r.decomposition.as_ref().unwrap().ok,
            "{:?}",
            r.decomposition
        );
        assert!(r.gorenstein && r.complete_intersection && !r.decreasing_gorenstein);
        assert_eq!(r.glued.h, IntPoly::new(vec![1, 3, 4, 4, 3, 1]));
        assert_eq!(r.smallest_generator_ok, Some(true));

        let s = validate_gluing(&sg(&[6, 7, 15]), &sg(&[1]), 19, 2).unwrap();
        let r = verify_instance(&s).unwrap();
        assert!(!r.cm_transfer_applicable);
        assert!(r.monotone_transfer_applicable && r.monotone_transfer_confirmed);
        assert!(!r.glued.cohen_macaulay);
        assert_eq!(r.factorization_ok, Some(true));
        assert_eq!(r.c2.h, IntPoly::one());
        assert!(r.violations().is_empty(), "{:?}", r.violations());
    }
}
