use std::fmt;

use smallvec::SmallVec;

/// Exponent vector, indexed by variable slot.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: SmallVec<[u32; 8]>,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial {
            exps: SmallVec::from_elem(0, nvars),
        }
    }

    pub fn new(exps: &[u32]) -> Self {
        Monomial {
            exps: SmallVec::from_slice(exps),
        }
    }

    /// `x_slot^e` in a ring with `nvars` variables.
    pub fn var_power(nvars: usize, slot: usize, e: u32) -> Self {
        let mut m = Monomial::one(nvars);
        m.exps[slot] = e;
        m
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn exponent(&self, slot: usize) -> u32 {
        self.exps[slot]
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
    }

    /// Whether `self` divides `other`.
    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.nvars(), other.nvars());
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(&other.exps)
            .all(|(&a, &b)| a == 0 || b == 0)
    }

    /// `self / other` when `other` divides `self`.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        let mut exps = SmallVec::with_capacity(self.exps.len());
        for (&a, &b) in self.exps.iter().zip(&other.exps) {
            exps.push(a.checked_sub(b)?);
        }
        Some(Monomial { exps })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(&a, &b)| a.max(b))
                .collect(),
        }
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(&a, &b)| a.min(b))
                .collect(),
        }
    }

    /// Colon by a monomial: exponents `max(a - b, 0)`.
    pub fn saturating_div(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(&a, &b)| a.saturating_sub(b))
                .collect(),
        }
    }

    /// Places this monomial into a larger ring starting at `offset`.
    pub fn embed(&self, nvars: usize, offset: usize) -> Monomial {
        let mut m = Monomial::one(nvars);
        m.exps[offset..offset + self.nvars()].copy_from_slice(&self.exps);
        m
    }

    /// Keeps the slots in `range`.
    pub fn restrict(&self, range: std::ops::Range<usize>) -> Monomial {
        Monomial::new(&self.exps[range])
    }
}

impl std::ops::Mul for &Monomial {
    type Output = Monomial;

    fn mul(self, rhs: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), rhs.nvars());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&rhs.exps)
                .map(|(&a, &b)| a.checked_add(b).expect("exponent overflow"))
                .collect(),
        }
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.exps.as_slice())
    }
}

/// Drops every monomial divisible by another one in the list, keeping one
/// copy of duplicates. Result is sorted for determinism.
pub fn minimize_monomials(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.cmp(b)));
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::with_capacity(gens.len());
    for m in gens {
        // sorted by degree: only earlier entries can divide m
        if !out.iter().any(|d| d.divides(&m)) {
            out.push(m);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn divisibility_and_lcm() {
        let a = Monomial::new(&[1, 2, 0]);
        let b = Monomial::new(&[1, 3, 1]);
        assert!(a.divides(&b));
        assert!(!b.divides(&a));
        assert_eq!(b.checked_div(&a), Some(Monomial::new(&[0, 1, 1])));
        assert_eq!(a.checked_div(&b), None);
        assert_eq!(a.lcm(&Monomial::new(&[2, 0, 1])), Monomial::new(&[2, 2, 1]));
        assert!(Monomial::new(&[1, 0, 0]).is_coprime(&Monomial::new(&[0, 4, 4])));
    }

    #[test]
    fn minimize_prunes_multiples() {
        let x1 = Monomial::new(&[1, 0]);
        let x1x2 = Monomial::new(&[1, 1]);
        assert_eq!(
            minimize_monomials(vec![x1x2, x1.clone(), x1.clone()]),
            vec![x1]
        );
    }
}
