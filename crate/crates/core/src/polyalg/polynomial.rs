use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{Monomial, MonomialOrder, PolyError};

pub type Coeff = BigRational;

pub fn coeff(n: i64) -> Coeff {
    BigRational::from_integer(BigInt::from(n))
}

/// Sparse polynomial with exact rational coefficients.
///
/// Terms are kept sorted in descending order under the polynomial's own
/// monomial order, so the leading term is always `terms[0]`. Switching to
/// another order goes through [`Polynomial::reorder`].
#[derive(Clone)]
pub struct Polynomial {
    order: MonomialOrder,
    terms: Vec<(Monomial, Coeff)>,
}

impl Polynomial {
    pub fn zero(order: &MonomialOrder) -> Self {
        Polynomial {
            order: order.clone(),
            terms: Vec::new(),
        }
    }

    pub fn constant(c: Coeff, order: &MonomialOrder) -> Self {
        Self::term(Monomial::one(order.nvars()), c, order)
    }

    pub fn term(m: Monomial, c: Coeff, order: &MonomialOrder) -> Self {
        debug_assert_eq!(m.nvars(), order.nvars());
        let terms = if c.is_zero() {
            Vec::new()
        } else {
            vec![(m, c)]
        };
        Polynomial {
            order: order.clone(),
            terms,
        }
    }

    /// Collects arbitrary terms, merging duplicates and dropping zeros.
    pub fn from_terms<I>(terms: I, order: &MonomialOrder) -> Self
    where
        I: IntoIterator<Item = (Monomial, Coeff)>,
    {
        let mut terms: Vec<(Monomial, Coeff)> = terms.into_iter().collect();
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        let mut out: Vec<(Monomial, Coeff)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc += c,
                _ => out.push((m, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        Polynomial {
            order: order.clone(),
            terms: out,
        }
    }

    /// `x^u - x^v`.
    pub fn binomial(u: Monomial, v: Monomial, order: &MonomialOrder) -> Self {
        Self::from_terms([(u, coeff(1)), (v, coeff(-1))], order)
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn nvars(&self) -> usize {
        self.order.nvars()
    }

    pub fn terms(&self) -> &[(Monomial, Coeff)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Leading term under the stored order.
    pub fn lead(&self) -> Option<(&Monomial, &Coeff)> {
        self.terms.first().map(|(m, c)| (m, c))
    }

    /// Leading monomial under the stored order. Panics on zero.
    pub fn lm(&self) -> &Monomial {
        &self.terms[0].0
    }

    pub fn lc(&self) -> &Coeff {
        &self.terms[0].1
    }

    /// Leading term under an arbitrary order.
    pub fn leading_monomial(&self, order: &MonomialOrder) -> Result<(Monomial, Coeff), PolyError> {
        if self.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        if order.nvars() != self.nvars() {
            return Err(PolyError::ArityMismatch {
                expected: self.nvars(),
                found: order.nvars(),
            });
        }
        if *order == self.order {
            return Ok(self.terms[0].clone());
        }
        let best = self
            .terms
            .iter()
            .max_by(|a, b| order.cmp(&a.0, &b.0))
            .unwrap();
        Ok(best.clone())
    }

    /// Same polynomial, terms re-sorted under `order`.
    pub fn reorder(&self, order: &MonomialOrder) -> Polynomial {
        if *order == self.order {
            return self.clone();
        }
        assert_eq!(order.nvars(), self.nvars(), "reorder across rings");
        let mut terms = self.terms.clone();
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        Polynomial {
            order: order.clone(),
            terms,
        }
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn min_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).min()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.total_degree() == self.min_degree()
    }

    /// The homogeneous summand of least total degree.
    pub fn least_degree_form(&self) -> Result<Polynomial, PolyError> {
        let d = self.min_degree().ok_or(PolyError::ZeroPolynomial)?;
        Ok(Polynomial {
            order: self.order.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == d)
                .cloned()
                .collect(),
        })
    }

    /// Total degree minus the degree of the leading monomial (stored order).
    pub fn ecart(&self) -> Result<u32, PolyError> {
        let d = self.total_degree().ok_or(PolyError::ZeroPolynomial)?;
        Ok(d - self.lm().degree())
    }

    pub fn scale(&self, c: &Coeff) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.order);
        }
        Polynomial {
            order: self.order.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    /// Scaled so the leading coefficient is 1.
    pub fn monic(&self) -> Polynomial {
        match self.lead() {
            None => self.clone(),
            Some((_, c)) if c.is_one() => self.clone(),
            Some((_, c)) => self.scale(&c.recip()),
        }
    }

    /// `c · m · self`; monomial orders are multiplicative so no re-sort.
    pub fn mul_term(&self, m: &Monomial, c: &Coeff) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.order);
        }
        Polynomial {
            order: self.order.clone(),
            terms: self.terms.iter().map(|(n, a)| (n * m, a * c)).collect(),
        }
    }

    /// `self - c · m · g`, merging in a single pass.
    pub fn sub_scaled(&self, c: &Coeff, m: &Monomial, g: &Polynomial) -> Polynomial {
        let g = if g.order == self.order {
            std::borrow::Cow::Borrowed(g)
        } else {
            std::borrow::Cow::Owned(g.reorder(&self.order))
        };
        let rhs = g.terms.iter().map(|(n, a)| (n * m, -(a * c)));
        Polynomial {
            order: self.order.clone(),
            terms: merge(&self.order, self.terms.iter().cloned(), rhs),
        }
    }

    /// `(lcm/LT(f))·f − (lcm/LT(g))·g` under the order of `f`.
    pub fn spoly(f: &Polynomial, g: &Polynomial) -> Result<Polynomial, PolyError> {
        if f.is_zero() || g.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        let g = g.reorder(&f.order);
        let lcm = f.lm().lcm(g.lm());
        let mf = lcm.checked_div(f.lm()).unwrap();
        let mg = lcm.checked_div(g.lm()).unwrap();
        let left = f.mul_term(&mf, &f.lc().recip());
        Ok(left.sub_scaled(&g.lc().recip(), &mg, &g))
    }

    /// Moves the polynomial into a ring of `order.nvars()` variables,
    /// shifting slots by `offset`.
    pub fn embed(&self, order: &MonomialOrder, offset: usize) -> Polynomial {
        Polynomial::from_terms(
            self.terms
                .iter()
                .map(|(m, c)| (m.embed(order.nvars(), offset), c.clone())),
            order,
        )
    }

    /// Drops the slots outside `range`; callers ensure they carry no exponents.
    pub fn restrict(&self, order: &MonomialOrder, range: std::ops::Range<usize>) -> Polynomial {
        Polynomial::from_terms(
            self.terms
                .iter()
                .map(|(m, c)| (m.restrict(range.clone()), c.clone())),
            order,
        )
    }

    /// Removes and returns the leading term.
    pub(crate) fn pop_lead(&mut self) -> Option<(Monomial, Coeff)> {
        if self.terms.is_empty() {
            None
        } else {
            Some(self.terms.remove(0))
        }
    }

    /// Builds from terms already sorted descending under `order`, nonzero, distinct.
    pub(crate) fn from_sorted(terms: Vec<(Monomial, Coeff)>, order: &MonomialOrder) -> Self {
        debug_assert!(terms
            .windows(2)
            .all(|w| order.cmp(&w[0].0, &w[1].0).is_gt()));
        Polynomial {
            order: order.clone(),
            terms,
        }
    }

    pub fn uses_variable(&self, slot: usize) -> bool {
        self.terms.iter().any(|(m, _)| m.exponent(slot) > 0)
    }

    /// At most two terms.
    pub fn is_binomial(&self) -> bool {
        self.len() <= 2
    }
}

fn merge<A, B>(order: &MonomialOrder, a: A, b: B) -> Vec<(Monomial, Coeff)>
where
    A: Iterator<Item = (Monomial, Coeff)>,
    B: Iterator<Item = (Monomial, Coeff)>,
{
    let mut a = a.peekable();
    let mut b = b.peekable();
    let mut out = Vec::new();
    loop {
        let ord = match (a.peek(), b.peek()) {
            (None, None) => break,
            (Some(_), None) => Ordering::Greater,
            (None, Some(_)) => Ordering::Less,
            (Some(x), Some(y)) => order.cmp(&x.0, &y.0),
        };
        match ord {
            Ordering::Greater => out.push(a.next().unwrap()),
            Ordering::Less => out.push(b.next().unwrap()),
            Ordering::Equal => {
                let (m, c) = a.next().unwrap();
                let (_, d) = b.next().unwrap();
                let s = c + d;
                if !s.is_zero() {
                    out.push((m, s));
                }
            }
        }
    }
    out
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        if self.nvars() != other.nvars() {
            return false;
        }
        if self.order == other.order {
            self.terms == other.terms
        } else {
            self.terms == other.reorder(&self.order).terms
        }
    }
}

impl Eq for Polynomial {}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = super::VarNames::generic(self.nvars());
        write!(f, "{}", names.format(self))
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        let rhs = rhs.reorder(&self.order);
        Polynomial {
            order: self.order.clone(),
            terms: merge(
                &self.order,
                self.terms.iter().cloned(),
                rhs.terms.into_iter(),
            ),
        }
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self + &(-rhs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial {
            order: self.order.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let mut acc = Polynomial::zero(&self.order);
        for (m, c) in &rhs.terms {
            acc = &acc + &self.mul_term(m, c);
        }
        acc
    }
}
