use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use super::{Monomial, PolyError};

/// The three orderings the engine knows about.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum OrderKind {
    /// Degree reverse lexicographic; global (1 is the smallest monomial).
    DegRevLex,
    /// Negative degree reverse lexicographic; local (1 is the largest monomial).
    NegDegRevLex,
    /// Block order: the flagged variables are compared first by degrevlex,
    /// ties broken by degrevlex on the remaining variables. Global.
    Elimination { block: Arc<[bool]> },
}

/// A monomial ordering together with a variable priority.
///
/// `priority[0]` is the highest variable, `priority[n-1]` the lowest. With
/// priority v₁ > … > vₙ, the reverse-lexicographic tie-break declares
/// `a > b` when, scanning `a - b` from vₙ upward, the first nonzero entry
/// is negative.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialOrder {
    kind: OrderKind,
    priority: Arc<[usize]>,
}

impl MonomialOrder {
    pub fn new(kind: OrderKind, priority: Vec<usize>) -> Result<Self, PolyError> {
        let n = priority.len();
        let mut seen = vec![false; n];
        for &v in &priority {
            if v >= n || seen[v] {
                return Err(PolyError::InvalidPriority(priority.clone()));
            }
            seen[v] = true;
        }
        if let OrderKind::Elimination { block } = &kind {
            if block.len() != n {
                return Err(PolyError::ArityMismatch {
                    expected: n,
                    found: block.len(),
                });
            }
        }
        Ok(MonomialOrder {
            kind,
            priority: priority.into(),
        })
    }

    /// Degrevlex with slot 0 highest.
    pub fn degrevlex(nvars: usize) -> Self {
        Self::new(OrderKind::DegRevLex, (0..nvars).collect()).unwrap()
    }

    /// Negative degrevlex with slot 0 highest.
    pub fn negdegrevlex(nvars: usize) -> Self {
        Self::new(OrderKind::NegDegRevLex, (0..nvars).collect()).unwrap()
    }

    pub fn local_with_priority(priority: Vec<usize>) -> Result<Self, PolyError> {
        Self::new(OrderKind::NegDegRevLex, priority)
    }

    pub fn global_with_priority(priority: Vec<usize>) -> Result<Self, PolyError> {
        Self::new(OrderKind::DegRevLex, priority)
    }

    /// Eliminates the variables flagged in `block`, slot order as priority.
    pub fn elimination(block: Vec<bool>) -> Self {
        let n = block.len();
        Self::new(
            OrderKind::Elimination {
                block: block.into(),
            },
            (0..n).collect(),
        )
        .unwrap()
    }

    pub fn kind(&self) -> &OrderKind {
        &self.kind
    }

    pub fn priority(&self) -> &[usize] {
        &self.priority
    }

    pub fn nvars(&self) -> usize {
        self.priority.len()
    }

    pub fn is_local(&self) -> bool {
        matches!(self.kind, OrderKind::NegDegRevLex)
    }

    pub fn is_global(&self) -> bool {
        !self.is_local()
    }

    pub fn lowest_variable(&self) -> usize {
        *self.priority.last().unwrap()
    }

    /// Same kind, different priority.
    pub fn with_priority(&self, priority: Vec<usize>) -> Result<Self, PolyError> {
        Self::new(self.kind.clone(), priority)
    }

    /// Checked comparison.
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Result<Ordering, PolyError> {
        for m in [a, b] {
            if m.nvars() != self.nvars() {
                return Err(PolyError::ArityMismatch {
                    expected: self.nvars(),
                    found: m.nvars(),
                });
            }
        }
        Ok(self.cmp(a, b))
    }

    /// Comparison without arity checks; callers guarantee matching rings.
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let (a, b) = (a.exponents(), b.exponents());
        match &self.kind {
            OrderKind::DegRevLex => {
                let (da, db): (u32, u32) = (a.iter().sum(), b.iter().sum());
                da.cmp(&db).then_with(|| self.revlex(a, b, |_| true))
            }
            OrderKind::NegDegRevLex => {
                let (da, db): (u32, u32) = (a.iter().sum(), b.iter().sum());
                db.cmp(&da).then_with(|| self.revlex(a, b, |_| true))
            }
            OrderKind::Elimination { block } => {
                let deg = |m: &[u32], inside: bool| -> u32 {
                    m.iter()
                        .zip(block.iter())
                        .filter(|(_, &f)| f == inside)
                        .map(|(e, _)| e)
                        .sum()
                };
                deg(a, true)
                    .cmp(&deg(b, true))
                    .then_with(|| self.revlex(a, b, |v| block[v]))
                    .then_with(|| deg(a, false).cmp(&deg(b, false)))
                    .then_with(|| self.revlex(a, b, |v| !block[v]))
            }
        }
    }

    fn revlex(&self, a: &[u32], b: &[u32], keep: impl Fn(usize) -> bool) -> Ordering {
        for &v in self.priority.iter().rev() {
            if !keep(v) {
                continue;
            }
            match a[v].cmp(&b[v]) {
                Ordering::Equal => continue,
                // smaller exponent in the lowest variable wins
                Ordering::Less => return Ordering::Greater,
                Ordering::Greater => return Ordering::Less,
            }
        }
        Ordering::Equal
    }
}

impl fmt::Debug for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match &self.kind {
            OrderKind::DegRevLex => "degrevlex".to_string(),
            OrderKind::NegDegRevLex => "negdegrevlex".to_string(),
            OrderKind::Elimination { block } => format!("elim{:?}", block),
        };
        write!(f, "{name}{:?}", &*self.priority)
    }
}
