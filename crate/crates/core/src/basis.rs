//! Gröbner bases for global orders and standard bases for local orders.
//!
//! Global orders use Buchberger's algorithm with the Gebauer–Möller pair
//! criteria and full (tail) reduction. Local orders use Mora's weak normal
//! form: reduction against an ecart-controlled reductor set that grows with
//! intermediate remainders. Tails are never reduced under a local order,
//! since full reduction need not terminate there.

use thiserror::Error;

use crate::polyalg::{minimize_monomials, Monomial, MonomialOrder, PolyError, Polynomial};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BasisError {
    #[error("Buchberger's algorithm needs a global order")]
    NonGlobalOrder,
    #[error("Mora's normal form needs a local order")]
    NonLocalOrder,
    #[error(transparent)]
    Poly(#[from] PolyError),
}

impl BasisError {
    pub fn code(&self) -> &'static str {
        match self {
            BasisError::NonGlobalOrder => "NonGlobalOrder",
            BasisError::NonLocalOrder => "NonLocalOrder",
            BasisError::Poly(e) => e.code(),
        }
    }
}

/// A Gröbner or standard basis together with the order it was computed in.
///
/// Elements are monic. When `minimal` is set, no leading monomial divides
/// another.
#[derive(Debug, Clone)]
pub struct BasisResult {
    pub elements: Vec<Polynomial>,
    pub order: MonomialOrder,
    pub minimal: bool,
}

impl BasisResult {
    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elements.iter().map(|g| g.lm().clone()).collect()
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

/// Minimal monomial generators of the ideal spanned by the basis leading monomials.
pub fn leading_ideal(basis: &BasisResult) -> Vec<Monomial> {
    minimize_monomials(basis.leading_monomials())
}

fn prepare(gens: &[Polynomial], order: &MonomialOrder) -> Result<Vec<Polynomial>, BasisError> {
    gens.iter()
        .map(|g| {
            if g.nvars() != order.nvars() {
                Err(BasisError::Poly(PolyError::ArityMismatch {
                    expected: order.nvars(),
                    found: g.nvars(),
                }))
            } else {
                Ok(g.reorder(order).monic())
            }
        })
        .filter(|g| !matches!(g, Ok(p) if p.is_zero()))
        .collect()
}

/// Full reduction of `f` modulo `basis` under a global order.
pub fn reduce(f: &Polynomial, basis: &[Polynomial]) -> Polynomial {
    let refs: Vec<&Polynomial> = basis.iter().collect();
    reduce_refs(f, &refs)
}

fn reduce_refs(f: &Polynomial, basis: &[&Polynomial]) -> Polynomial {
    let order = f.order().clone();
    let mut p = f.clone();
    let mut rem = Vec::new();
    while let Some((m, c)) = p.lead() {
        match basis.iter().find(|g| g.lm().divides(m)) {
            Some(g) => {
                let q = m.checked_div(g.lm()).unwrap();
                let factor = c / g.lc();
                p = p.sub_scaled(&factor, &q, g);
            }
            None => rem.push(p.pop_lead().unwrap()),
        }
    }
    Polynomial::from_sorted(rem, &order)
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    sugar: u64,
}

fn weighted_degree(m: &Monomial, weights: &[u64]) -> u64 {
    m.exponents()
        .iter()
        .zip(weights)
        .map(|(&e, &w)| e as u64 * w)
        .sum()
}

fn sugar_of(p: &Polynomial, weights: &[u64]) -> u64 {
    p.terms()
        .iter()
        .map(|(m, _)| weighted_degree(m, weights))
        .max()
        .unwrap_or(0)
}

/// Gebauer–Möller update of the active set `active` and pair list `pairs`
/// with the new element `h`.
fn update(
    polys: &[Polynomial],
    sugars: &[u64],
    weights: &[u64],
    active: &mut Vec<usize>,
    pairs: &mut Vec<Pair>,
    h: usize,
) {
    let lm_h = polys[h].lm();
    let mut candidates: Vec<Pair> = active
        .iter()
        .map(|&g| {
            let lcm = polys[g].lm().lcm(lm_h);
            let w = weighted_degree(&lcm, weights);
            let sugar = (sugars[g] + w - weighted_degree(polys[g].lm(), weights))
                .max(sugars[h] + w - weighted_degree(lm_h, weights));
            Pair {
                i: g,
                j: h,
                lcm,
                sugar,
            }
        })
        .collect();
    let coprime = |p: &Pair| polys[p.i].lm().is_coprime(lm_h);

    let mut kept: Vec<Pair> = Vec::new();
    while let Some(p) = candidates.pop() {
        let dominated = || {
            candidates
                .iter()
                .chain(kept.iter())
                .any(|o| o.lcm.divides(&p.lcm))
        };
        if coprime(&p) || !dominated() {
            kept.push(p);
        }
    }
    kept.retain(|p| !coprime(p));

    pairs.retain(|p| {
        !(lm_h.divides(&p.lcm)
            && polys[p.i].lm().lcm(lm_h) != p.lcm
            && polys[p.j].lm().lcm(lm_h) != p.lcm)
    });
    pairs.extend(kept);

    active.retain(|&g| !lm_h.divides(polys[g].lm()));
    active.push(h);
}

/// Reduced Gröbner basis of `gens` under a global order.
pub fn buchberger(gens: &[Polynomial], order: &MonomialOrder) -> Result<BasisResult, BasisError> {
    buchberger_weighted(gens, order, None)
}

/// Buchberger with pairs selected by least sugar, the degree being taken
/// with respect to `weights` (all ones when `None`). For input that is
/// homogeneous in the weights, this processes pairs degree by degree.
pub fn buchberger_weighted(
    gens: &[Polynomial],
    order: &MonomialOrder,
    weights: Option<&[u64]>,
) -> Result<BasisResult, BasisError> {
    if !order.is_global() {
        return Err(BasisError::NonGlobalOrder);
    }
    let ones = vec![1u64; order.nvars()];
    let weights = weights.unwrap_or(&ones);
    if weights.len() != order.nvars() {
        return Err(PolyError::ArityMismatch {
            expected: order.nvars(),
            found: weights.len(),
        }
        .into());
    }
    let mut polys: Vec<Polynomial> = Vec::new();
    let mut sugars: Vec<u64> = Vec::new();
    let mut active: Vec<usize> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();

    for f in prepare(gens, order)? {
        let h = {
            let current: Vec<&Polynomial> = active.iter().map(|&i| &polys[i]).collect();
            reduce_refs(&f, &current).monic()
        };
        if h.is_zero() {
            continue;
        }
        sugars.push(sugar_of(&f, weights).max(sugar_of(&h, weights)));
        polys.push(h);
        update(
            &polys,
            &sugars,
            weights,
            &mut active,
            &mut pairs,
            polys.len() - 1,
        );
    }

    while !pairs.is_empty() {
        let best = (0..pairs.len())
            .min_by(|&a, &b| {
                pairs[a]
                    .sugar
                    .cmp(&pairs[b].sugar)
                    .then_with(|| order.cmp(&pairs[a].lcm, &pairs[b].lcm))
            })
            .unwrap();
        let pair = pairs.swap_remove(best);
        let s = Polynomial::spoly(&polys[pair.i], &polys[pair.j])?;
        let h = {
            let current: Vec<&Polynomial> = active.iter().map(|&i| &polys[i]).collect();
            reduce_refs(&s, &current)
        };
        if h.is_zero() {
            continue;
        }
        sugars.push(pair.sugar);
        polys.push(h.monic());
        update(
            &polys,
            &sugars,
            weights,
            &mut active,
            &mut pairs,
            polys.len() - 1,
        );
    }

    let mut reduced = Vec::with_capacity(active.len());
    for (k, &g) in active.iter().enumerate() {
        let others: Vec<&Polynomial> = active
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != k)
            .map(|(_, &i)| &polys[i])
            .collect();
        reduced.push(reduce_refs(&polys[g], &others).monic());
    }
    reduced.sort_by(|a, b| order.cmp(a.lm(), b.lm()));
    Ok(BasisResult {
        elements: reduced,
        order: order.clone(),
        minimal: true,
    })
}

/// Mora's weak normal form of `f` with respect to `basis` under a local order.
///
/// Returns `r` with `u·f = Σ qᵢgᵢ + r` for a unit `u` of the local ring, and
/// either `r = 0` or no `LM(gᵢ)` divides `LM(r)`.
pub fn mora_weak_nf(
    f: &Polynomial,
    basis: &[Polynomial],
    order: &MonomialOrder,
) -> Result<Polynomial, BasisError> {
    if !order.is_local() {
        return Err(BasisError::NonLocalOrder);
    }
    let basis = prepare(basis, order)?;
    let f = prepare(std::slice::from_ref(f), order)?;
    let Some(f) = f.into_iter().next() else {
        return Ok(Polynomial::zero(order));
    };
    Ok(mora_nf(f, &basis))
}

fn mora_nf(f: Polynomial, basis: &[Polynomial]) -> Polynomial {
    let mut reductors: Vec<(Polynomial, u32)> = basis
        .iter()
        .map(|g| (g.clone(), g.ecart().unwrap()))
        .collect();
    let mut h = f;
    while !h.is_zero() {
        let lm = h.lm().clone();
        let choice = reductors
            .iter()
            .enumerate()
            .filter(|(_, (g, _))| g.lm().divides(&lm))
            .min_by_key(|(i, (_, e))| (*e, *i))
            .map(|(i, _)| i);
        let Some(idx) = choice else { break };
        let ecart_h = h.ecart().unwrap();
        let (g, ecart_g) = &reductors[idx];
        let g = g.clone();
        if *ecart_g > ecart_h {
            reductors.push((h.clone(), ecart_h));
        }
        let q = lm.checked_div(g.lm()).unwrap();
        let factor = h.lc() / g.lc();
        h = h.sub_scaled(&factor, &q, &g);
    }
    h
}

/// Minimal standard basis of `gens` under a local order.
///
/// Leading monomials form the minimal generating set of the leading ideal.
/// Among elements with equal leading monomial the earliest generated is
/// kept. Tails are left as produced by the weak normal form.
pub fn standard_basis(
    gens: &[Polynomial],
    order: &MonomialOrder,
) -> Result<BasisResult, BasisError> {
    if !order.is_local() {
        return Err(BasisError::NonLocalOrder);
    }
    let mut elements = prepare(gens, order)?;
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for j in 0..elements.len() {
        for i in 0..j {
            pairs.push((i, j));
        }
    }
    let lcm_degree =
        |els: &[Polynomial], (i, j): (usize, usize)| els[i].lm().lcm(els[j].lm()).degree();

    while !pairs.is_empty() {
        let best = (0..pairs.len())
            .min_by_key(|&k| (lcm_degree(&elements, pairs[k]), pairs[k]))
            .unwrap();
        let (i, j) = pairs.remove(best);
        // product criterion
        if elements[i].lm().is_coprime(elements[j].lm()) {
            continue;
        }
        let s = Polynomial::spoly(&elements[i], &elements[j])?;
        if s.is_zero() {
            continue;
        }
        let h = mora_nf(s, &elements);
        if h.is_zero() {
            continue;
        }
        let new = elements.len();
        elements.push(h.monic());
        pairs.extend((0..new).map(|k| (k, new)));
    }

    let keep: Vec<bool> = (0..elements.len())
        .map(|i| {
            !elements.iter().enumerate().any(|(j, g)| {
                let lm_i = elements[i].lm();
                g.lm().divides(lm_i) && (g.lm() != lm_i || j < i)
            })
        })
        .collect();
    let elements = elements
        .into_iter()
        .zip(keep)
        .filter_map(|(g, k)| k.then_some(g))
        .collect();
    Ok(BasisResult {
        elements,
        order: order.clone(),
        minimal: true,
    })
}

/// Whether every s-polynomial of the basis has weak normal form (local
/// orders) or normal form (global orders) zero.
pub fn is_basis(basis: &BasisResult) -> bool {
    let els = &basis.elements;
    for j in 0..els.len() {
        for i in 0..j {
            let s = Polynomial::spoly(&els[i], &els[j]).unwrap();
            let r = if basis.order.is_local() {
                mora_nf(s, els)
            } else {
                reduce(&s, els)
            };
            if !r.is_zero() {
                return false;
            }
        }
    }
    true
}

/// Ideal membership via a Gröbner basis under `order` (which must be global).
pub fn ideal_contains(
    gens: &[Polynomial],
    f: &Polynomial,
    order: &MonomialOrder,
) -> Result<bool, BasisError> {
    let gb = buchberger(gens, order)?;
    Ok(reduce(&f.reorder(order), &gb.elements).is_zero())
}

/// Mutual membership of two generating sets.
pub fn same_ideal(
    a: &[Polynomial],
    b: &[Polynomial],
    order: &MonomialOrder,
) -> Result<bool, BasisError> {
    let ga = buchberger(a, order)?;
    let gb = buchberger(b, order)?;
    let inside = |g: &BasisResult, fs: &[Polynomial]| {
        fs.iter()
            .all(|f| reduce(&f.reorder(order), &g.elements).is_zero())
    };
    Ok(inside(&ga, b) && inside(&gb, a))
}

/// Drops generators lying in the ideal of the remaining ones, testing the
/// highest-degree candidates first.
pub fn prune_redundant(
    gens: &[Polynomial],
    order: &MonomialOrder,
) -> Result<Vec<Polynomial>, BasisError> {
    let mut kept = prepare(gens, order)?;
    let mut idx: Vec<usize> = (0..kept.len()).collect();
    idx.sort_by_key(|&i| std::cmp::Reverse(kept[i].total_degree().unwrap()));
    let mut alive = vec![true; kept.len()];
    for &i in &idx {
        let others: Vec<Polynomial> = kept
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i && alive[j])
            .map(|(_, g)| g.clone())
            .collect();
        if !others.is_empty() && ideal_contains(&others, &kept[i], order)? {
            alive[i] = false;
        }
    }
    let mut out = Vec::new();
    for (g, a) in kept.drain(..).zip(alive) {
        if a {
            out.push(g);
        }
    }
    Ok(out)
}
