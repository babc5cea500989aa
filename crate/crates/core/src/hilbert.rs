//! Hilbert series of monomial quotients and Hilbert functions of the
//! associated graded rings of monomial curves.
//!
//! The numerator `N(t)` of `HS(K[x]/I) = N(t)/(1−t)^n` comes from the pivot
//! recursion `N(I) = N(I + ⟨p⟩) + t^{deg p}·N(I : p)`, bottoming out when the
//! generators are pairwise coprime. For a curve the quotient has dimension
//! one, so `N(t)` is divisible by `(1−t)^{n−1}`, leaving `h(t)/(1−t)`.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::polyalg::{minimize_monomials, Monomial};
use crate::tangentcone::tangent_cone;
use crate::toric::MonomialCurve;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HilbertError {
    #[error("numerator {numerator} is not divisible by (1-t)^{power}")]
    DimensionMismatch { numerator: IntPoly, power: usize },
    #[error("Hilbert function turned negative at degree {0}")]
    NegativeValue(usize),
}

impl HilbertError {
    pub fn code(&self) -> &'static str {
        match self {
            HilbertError::DimensionMismatch { .. } => "DimensionMismatch",
            HilbertError::NegativeValue(_) => "NegativeValue",
        }
    }
}

/// Univariate integer polynomial in `t`, coefficients from degree 0 up.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct IntPoly(Vec<i64>);

impl IntPoly {
    pub fn new(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        IntPoly(coeffs)
    }

    pub fn one() -> Self {
        IntPoly(vec![1])
    }

    /// `t^d`.
    pub fn monomial(d: usize) -> Self {
        let mut c = vec![0; d + 1];
        c[d] = 1;
        IntPoly(c)
    }

    /// `1 − t^d`.
    pub fn one_minus_power(d: usize) -> Self {
        if d == 0 {
            return IntPoly::default();
        }
        let mut c = vec![0; d + 1];
        c[0] = 1;
        c[d] = -1;
        IntPoly(c)
    }

    /// `1 + t + … + t^{n−1}`.
    pub fn geometric(n: usize) -> Self {
        IntPoly::new(vec![1; n])
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    pub fn coeff(&self, i: usize) -> i64 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn eval_at_one(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn add(&self, other: &IntPoly) -> IntPoly {
        let n = self.0.len().max(other.0.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::default();
        }
        let mut c = vec![0i64; self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in other.0.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        IntPoly::new(c)
    }

    pub fn shift(&self, d: usize) -> IntPoly {
        if self.is_zero() {
            return self.clone();
        }
        let mut c = vec![0; d];
        c.extend_from_slice(&self.0);
        IntPoly(c)
    }

    /// Exact division by `1 − t`, or `None` when the remainder is nonzero.
    pub fn div_one_minus_t(&self) -> Option<IntPoly> {
        if self.eval_at_one() != 0 {
            return None;
        }
        // q = p / (1 - t) has coefficients q_i = p_0 + … + p_i
        let n = self.0.len();
        let mut q = Vec::with_capacity(n.saturating_sub(1));
        let mut acc = 0;
        for &c in self.0.iter().take(n.saturating_sub(1)) {
            acc += c;
            q.push(acc);
        }
        Some(IntPoly::new(q))
    }

    /// First `len` coefficients of `self / (1−t)^power` as a power series.
    pub fn series(&self, power: usize, len: usize) -> Vec<i64> {
        let mut s: Vec<i64> = (0..len).map(|i| self.coeff(i)).collect();
        for _ in 0..power {
            for i in 1..len {
                s[i] += s[i - 1];
            }
        }
        s
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else { "+" };
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.abs();
            match (i, a) {
                (0, _) => write!(f, "{a}")?,
                (1, 1) => write!(f, "t")?,
                (1, _) => write!(f, "{a}t")?,
                (_, 1) => write!(f, "t^{i}")?,
                _ => write!(f, "{a}t^{i}")?,
            }
        }
        Ok(())
    }
}

/// Pivot rule for the numerator recursion. The result does not depend on it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Pivot {
    /// Most frequent variable, lowest positive power present.
    #[default]
    MostFrequent,
    /// First variable shared by two generators, largest power found in a
    /// mixed generator.
    FirstSharedLargest,
}

pub fn hilbert_numerator(lms: &[Monomial], nvars: usize) -> IntPoly {
    hilbert_numerator_with(lms, nvars, Pivot::default())
}

pub fn hilbert_numerator_with(lms: &[Monomial], nvars: usize, pivot: Pivot) -> IntPoly {
    debug_assert!(lms.iter().all(|m| m.nvars() == nvars));
    numerator(minimize_monomials(lms.to_vec()), nvars, pivot)
}

fn numerator(gens: Vec<Monomial>, nvars: usize, pivot: Pivot) -> IntPoly {
    if gens.iter().any(Monomial::is_one) {
        return IntPoly::default();
    }
    let mut count = vec![0usize; nvars];
    for m in &gens {
        for v in m.support() {
            count[v] += 1;
        }
    }
    if count.iter().all(|&c| c <= 1) {
        return gens.iter().fold(IntPoly::one(), |acc, m| {
            acc.mul(&IntPoly::one_minus_power(m.degree() as usize))
        });
    }
    let (var, exp) = match pivot {
        Pivot::MostFrequent => {
            let var = (0..nvars)
                .max_by_key(|&v| (count[v], std::cmp::Reverse(v)))
                .unwrap();
            let exp = gens
                .iter()
                .map(|m| m.exponent(var))
                .filter(|&e| e > 0)
                .min()
                .unwrap();
            (var, exp)
        }
        Pivot::FirstSharedLargest => {
            let var = (0..nvars).find(|&v| count[v] >= 2).unwrap();
            let exp = gens
                .iter()
                .filter(|m| m.support().count() >= 2)
                .map(|m| m.exponent(var))
                .max()
                .unwrap();
            (var, exp)
        }
    };
    let p = Monomial::var_power(nvars, var, exp);

    let mut plus = gens.clone();
    plus.push(p.clone());
    let colon: Vec<Monomial> = gens.iter().map(|m| m.saturating_div(&p)).collect();

    let a = numerator(minimize_monomials(plus), nvars, pivot);
    let b = numerator(minimize_monomials(colon), nvars, pivot);
    a.add(&b.shift(exp as usize))
}

/// Monotonicity of a Hilbert function read off `h(t)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Monotonicity {
    pub nondecreasing: bool,
    /// Index of the first negative coefficient of `h(t)`.
    pub first_violation: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertData {
    /// `N(t)` with `HS = N(t)/(1−t)^k`.
    pub numerator: IntPoly,
    /// `h(t)` with `HS = h(t)/(1−t)`.
    pub reduced_numerator: IntPoly,
    pub hf_prefix: Vec<u64>,
    pub multiplicity: i64,
    pub nondecreasing: bool,
}

impl HilbertData {
    /// Builds the data for `K[x]/⟨lms⟩` in `nvars` variables of Krull
    /// dimension one. `limit` defaults to `deg h + 3`.
    pub fn from_leading_ideal(
        lms: &[Monomial],
        nvars: usize,
        limit: Option<usize>,
    ) -> Result<Self, HilbertError> {
        let numerator = hilbert_numerator(lms, nvars);
        let power = nvars.saturating_sub(1);
        let mut reduced = numerator.clone();
        for _ in 0..power {
            reduced = reduced
                .div_one_minus_t()
                .ok_or_else(|| HilbertError::DimensionMismatch {
                    numerator: numerator.clone(),
                    power,
                })?;
        }
        if reduced.is_zero() {
            return Err(HilbertError::DimensionMismatch { numerator, power });
        }
        let limit = limit.unwrap_or_else(|| reduced.degree().unwrap() + 3);
        let hf_prefix = reduced
            .series(1, limit + 1)
            .into_iter()
            .enumerate()
            .map(|(n, v)| u64::try_from(v).map_err(|_| HilbertError::NegativeValue(n)))
            .collect::<Result<Vec<_>, _>>()?;
        let nondecreasing = reduced.coeffs().iter().all(|&c| c >= 0);
        Ok(HilbertData {
            multiplicity: reduced.eval_at_one(),
            numerator,
            reduced_numerator: reduced,
            hf_prefix,
            nondecreasing,
        })
    }

    /// `H(n)` for any `n`.
    pub fn value(&self, n: usize) -> u64 {
        self.reduced_numerator.series(1, n + 1)[n] as u64
    }
}

pub fn is_nondecreasing(data: &HilbertData) -> Monotonicity {
    let first_violation = data.reduced_numerator.coeffs().iter().position(|&c| c < 0);
    Monotonicity {
        nondecreasing: first_violation.is_none(),
        first_violation,
    }
}

/// Hilbert function of the local ring of `C`, read from the leading ideal
/// of a standard basis under the canonical local order.
pub fn local_hilbert_function(
    curve: &MonomialCurve,
    limit: usize,
) -> Result<HilbertData, HilbertError> {
    let cone = tangent_cone(curve);
    HilbertData::from_leading_ideal(&cone.leading_monomials, curve.nvars(), Some(limit))
}

/// Whether `h_glued = h₁ · h₂ · (1 + t + … + t^{a₁−1})` exactly.
pub fn product_factorization_check(
    glued: &HilbertData,
    h1: &IntPoly,
    h2: &IntPoly,
    a1: u64,
) -> bool {
    let h3 = IntPoly::geometric(a1 as usize);
    glued.reduced_numerator == h1.mul(h2).mul(&h3)
}
