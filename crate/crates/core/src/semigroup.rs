//! Numerical semigroups: minimal generators, membership, Apéry sets and the
//! order filtration that gives the Hilbert function of the semigroup ring.

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SemigroupError {
    #[error("empty generator list")]
    Empty,
    #[error("generator must be positive")]
    ZeroGenerator,
    #[error("generators have gcd {0}, expected 1")]
    GcdNotOne(u64),
}

impl SemigroupError {
    pub fn code(&self) -> &'static str {
        match self {
            SemigroupError::Empty => "Empty",
            SemigroupError::ZeroGenerator => "ZeroGenerator",
            SemigroupError::GcdNotOne(_) => "GcdNotOne",
        }
    }
}

/// A numerical semigroup given by its minimal generating set.
///
/// Generators are strictly increasing, have gcd 1, and none is a
/// non-negative combination of the others. The Apéry set with respect to
/// the smallest generator is computed once at construction; it answers
/// membership queries in constant time.
#[derive(Clone, PartialEq, Eq)]
pub struct NumericalSemigroup {
    generators: Vec<u64>,
    apery: Vec<u64>,
}

/// A non-negative integer combination of the generators.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Representation {
    pub coefficients: Vec<u64>,
    pub value: u64,
}

impl Representation {
    pub fn new(coefficients: Vec<u64>, generators: &[u64]) -> Self {
        let value = dot(&coefficients, generators);
        Representation {
            coefficients,
            value,
        }
    }

    /// Σ aᵢ, the length of the factorization.
    pub fn length(&self) -> u64 {
        self.coefficients.iter().sum()
    }

    /// True when only the first coefficient is nonzero.
    pub fn is_concentrated_on_first(&self) -> bool {
        self.coefficients.iter().skip(1).all(|&c| c == 0)
    }
}

fn dot(coefficients: &[u64], generators: &[u64]) -> u64 {
    coefficients
        .iter()
        .zip(generators)
        .map(|(&a, &n)| a.checked_mul(n).expect("representation overflow"))
        .fold(0u64, |acc, x| {
            acc.checked_add(x).expect("representation overflow")
        })
}

/// Normalizes an arbitrary generating list into the minimal generating set.
pub fn minimal_generators(raw: &[u64]) -> Result<NumericalSemigroup, SemigroupError> {
    if raw.is_empty() {
        return Err(SemigroupError::Empty);
    }
    if raw.contains(&0) {
        return Err(SemigroupError::ZeroGenerator);
    }
    let g = raw.iter().fold(0u64, |acc, &x| acc.gcd(&x));
    if g != 1 {
        return Err(SemigroupError::GcdNotOne(g));
    }
    let mut sorted = raw.to_vec();
    sorted.sort_unstable();
    sorted.dedup();

    // reachable[s] <=> s is a combination of the generators kept so far
    let max = *sorted.last().unwrap() as usize;
    let mut reachable = vec![false; max + 1];
    reachable[0] = true;
    let mut kept = Vec::new();
    for &g in &sorted {
        if reachable[g as usize] {
            continue;
        }
        kept.push(g);
        let g = g as usize;
        for s in g..=max {
            if reachable[s - g] {
                reachable[s] = true;
            }
        }
    }
    Ok(NumericalSemigroup::from_minimal(kept))
}

impl NumericalSemigroup {
    /// Builds a semigroup from a list already known to be minimal.
    fn from_minimal(generators: Vec<u64>) -> Self {
        let apery = apery_set(&generators);
        NumericalSemigroup { generators, apery }
    }

    /// Shorthand for [`minimal_generators`].
    pub fn new(raw: &[u64]) -> Result<Self, SemigroupError> {
        minimal_generators(raw)
    }

    pub fn generators(&self) -> &[u64] {
        &self.generators
    }

    /// Embedding dimension.
    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn multiplicity(&self) -> u64 {
        self.generators[0]
    }

    pub fn largest_generator(&self) -> u64 {
        *self.generators.last().unwrap()
    }

    /// Apéry set with respect to the smallest generator, indexed by residue.
    pub fn apery(&self) -> &[u64] {
        &self.apery
    }

    pub fn frobenius(&self) -> i64 {
        *self.apery.iter().max().unwrap() as i64 - self.multiplicity() as i64
    }

    pub fn frobenius_and_apery(&self) -> (i64, Vec<u64>) {
        let mut ap = self.apery.clone();
        ap.sort_unstable();
        (self.frobenius(), ap)
    }

    pub fn is_member(&self, n: u64) -> bool {
        let m = self.multiplicity();
        n >= self.apery[(n % m) as usize]
    }

    /// Some representation of `n`, or `None` when `n` is a gap.
    pub fn contains(&self, n: u64) -> Option<Representation> {
        if !self.is_member(n) {
            return None;
        }
        let mut coefficients = vec![0u64; self.len()];
        let mut rest = n;
        // walk down from the largest generator, staying inside S
        'outer: while rest > 0 {
            for (i, &g) in self.generators.iter().enumerate().rev() {
                if g <= rest && self.is_member(rest - g) {
                    coefficients[i] += 1;
                    rest -= g;
                    continue 'outer;
                }
            }
            unreachable!("member {rest} has no predecessor in S");
        }
        Some(Representation::new(coefficients, &self.generators))
    }

    /// Every representation of `n`, in lexicographic order of coefficients.
    pub fn all_representations(&self, n: u64) -> Vec<Representation> {
        let mut out = Vec::new();
        let mut current = vec![0u64; self.len()];
        self.enumerate(0, n, &mut current, &mut out);
        out
    }

    fn enumerate(
        &self,
        i: usize,
        rest: u64,
        current: &mut Vec<u64>,
        out: &mut Vec<Representation>,
    ) {
        let g = self.generators[i];
        if i + 1 == self.len() {
            if rest % g == 0 {
                current[i] = rest / g;
                out.push(Representation::new(current.clone(), &self.generators));
                current[i] = 0;
            }
            return;
        }
        for c in 0..=rest / g {
            current[i] = c;
            self.enumerate(i + 1, rest - c * g, current, out);
        }
        current[i] = 0;
    }

    /// Kunz's criterion: exactly one of z and F − z lies in S for 0 ≤ z ≤ F.
    pub fn is_symmetric(&self) -> bool {
        let f = self.frobenius();
        if f < 0 {
            return true;
        }
        (0..=f as u64).all(|z| self.is_member(z) != self.is_member(f as u64 - z))
    }

    /// Hilbert function of the order filtration: H(n) counts the elements
    /// of S whose maximal factorization length is exactly n.
    ///
    /// Computed directly on the semigroup by dynamic programming, without
    /// any polynomial machinery.
    pub fn order_filtration_hilbert(&self, n: usize) -> Vec<u64> {
        let f = self.frobenius().max(0) as u64;
        let bound = (f + (n as u64 + 1) * self.largest_generator()) as usize;
        // ord[s] = -1 marks a gap
        let mut ord = vec![-1i64; bound + 1];
        ord[0] = 0;
        for s in 1..=bound {
            let mut best = -1i64;
            for &g in &self.generators {
                let g = g as usize;
                if g <= s && ord[s - g] >= 0 {
                    best = best.max(ord[s - g] + 1);
                }
            }
            ord[s] = best;
        }
        let mut h = vec![0u64; n + 1];
        for &o in &ord {
            if o >= 0 && (o as usize) <= n {
                h[o as usize] += 1;
            }
        }
        h
    }
}

/// Least element of S in each residue class mod the smallest generator,
/// by Dijkstra over the residue graph.
fn apery_set(generators: &[u64]) -> Vec<u64> {
    let m = generators[0] as usize;
    let mut dist = vec![u64::MAX; m];
    let mut done = vec![false; m];
    dist[0] = 0;
    for _ in 0..m {
        let (r, d) = dist
            .iter()
            .enumerate()
            .filter(|(r, _)| !done[*r])
            .min_by_key(|(_, &d)| d)
            .map(|(r, &d)| (r, d))
            .unwrap();
        assert!(d != u64::MAX, "generators do not have gcd 1");
        done[r] = true;
        for &g in &generators[1..] {
            let nr = (r + g as usize) % m;
            let nd = d + g;
            if nd < dist[nr] {
                dist[nr] = nd;
            }
        }
    }
    dist
}

impl fmt::Debug for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NumericalSemigroup{:?}", self.generators)
    }
}

impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ">")
    }
}

impl Serialize for NumericalSemigroup {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.generators.serialize(s)
    }
}

impl<'de> Deserialize<'de> for NumericalSemigroup {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = Vec::<u64>::deserialize(d)?;
        let s = minimal_generators(&raw).map_err(serde::de::Error::custom)?;
        if s.generators != raw {
            return Err(serde::de::Error::custom("generator list is not minimal"));
        }
        Ok(s)
    }
}
