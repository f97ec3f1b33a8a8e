//! Buchberger's algorithm with the Gebauer–Möller installation of the
//! product and chain criteria, normal selection strategy.

use std::cmp::Ordering;
use std::sync::Arc;

use num_bigint::BigInt;

use super::reduce::{integral_terms, rational_terms, reduce_terms, remainder, Scalar, Terms};
use super::{Budget, BudgetKind, GroebnerError};
use crate::polyring::{Coeff, Monomial, Poly, PolyRing};

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    degree: u64,
}

struct State<'a> {
    ring: &'a Arc<PolyRing>,
    polys: Vec<Poly>,
    /// Integer copies of `polys` when working over the rationals.
    ints: Vec<Terms<BigInt>>,
    active: Vec<bool>,
    pairs: Vec<Pair>,
    budget: &'a Budget,
}

/// Reduced Gröbner basis of the ideal generated by `gens` under the order of
/// their ring: monic, inter-reduced and sorted by ascending leading monomial.
pub(crate) fn reduced_groebner_basis(
    ring: &Arc<PolyRing>,
    gens: &[Poly],
    budget: &Budget,
) -> Result<Vec<Poly>, GroebnerError> {
    let mut input: Vec<Poly> = gens.iter().filter(|g| !g.is_zero()).map(|g| g.primitive()).collect();
    if input.is_empty() {
        return Ok(Vec::new());
    }
    if input.iter().any(|g| g.is_unit()) {
        return Ok(vec![ring.one()]);
    }
    let order = ring.order().clone();
    input.sort_by(|a, b| order.compare(a.leading_monomial().unwrap(), b.leading_monomial().unwrap()));

    let mut st = State {
        ring,
        polys: Vec::new(),
        ints: Vec::new(),
        active: Vec::new(),
        pairs: Vec::new(),
        budget,
    };
    for g in input {
        let h = st.reduce(g)?;
        if h.is_zero() {
            continue;
        }
        if h.is_unit() {
            return Ok(vec![ring.one()]);
        }
        st.insert(h)?;
    }

    while let Some(k) = st.select_pair() {
        budget.check_time()?;
        let pair = st.pairs.swap_remove(k);
        let s = st.s_poly(pair.i, pair.j, &pair.lcm);
        let h = st.reduce(s)?;
        if h.is_zero() {
            continue;
        }
        if h.is_unit() {
            return Ok(vec![ring.one()]);
        }
        st.insert(h)?;
    }

    let basis: Vec<Poly> = st
        .polys
        .into_iter()
        .zip(st.active)
        .filter_map(|(p, a)| a.then_some(p))
        .collect();
    Ok(inter_reduce(basis))
}

impl State<'_> {
    fn select_pair(&self) -> Option<usize> {
        self.pairs
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| a.degree.cmp(&b.degree).then(a.i.cmp(&b.i)).then(a.j.cmp(&b.j)))
            .map(|(k, _)| k)
    }

    fn lm(&self, i: usize) -> &Monomial {
        self.polys[i].leading_monomial().expect("basis elements are nonzero")
    }

    fn s_poly(&self, i: usize, j: usize, lcm: &Monomial) -> Poly {
        let (f, g) = (&self.polys[i], &self.polys[j]);
        let qf = f.leading_monomial().unwrap().quotient_of(lcm).unwrap();
        let qg = g.leading_monomial().unwrap().quotient_of(lcm).unwrap();
        let (cf, cg) = Coeff::cofactors(f.leading_coeff().unwrap(), g.leading_coeff().unwrap());
        f.mul_term(&cf, &qf).sub_mul_term(&cg, &qg, g)
    }

    /// Fully reduces `p` by the active elements; the result is primitive.
    fn reduce(&self, p: Poly) -> Result<Poly, GroebnerError> {
        let p = p.primitive();
        let order = self.ring.order();
        let terms = if self.ring.field().is_exact_char_zero() {
            let reducers: Vec<&[(Monomial, BigInt)]> = self
                .ints
                .iter()
                .zip(&self.active)
                .filter_map(|(g, &a)| a.then_some(g.as_slice()))
                .collect();
            rational_terms(reduce_terms(integral_terms(&p), &reducers, order, self.budget)?)
        } else {
            let reducers: Vec<&[(Monomial, Coeff)]> = self
                .polys
                .iter()
                .zip(&self.active)
                .filter_map(|(g, &a)| a.then_some(g.terms()))
                .collect();
            reduce_terms(p.into_terms(), &reducers, order, self.budget)?
        };
        Ok(Poly::from_sorted_terms(self.ring, terms).primitive())
    }

    fn insert(&mut self, h: Poly) -> Result<(), GroebnerError> {
        let h = h.primitive();
        if self.polys.len() >= self.budget.max_basis {
            return Err(GroebnerError::BudgetExceeded(BudgetKind::BasisSize));
        }
        if h.total_degree().unwrap_or(0) > self.budget.max_degree {
            return Err(GroebnerError::BudgetExceeded(BudgetKind::Degree));
        }
        let order = self.ring.order();
        let hi = self.polys.len();
        let h_lm = h.leading_monomial().unwrap().clone();
        if self.ring.field().is_exact_char_zero() {
            self.ints.push(integral_terms(&h));
        }
        self.polys.push(h);
        self.active.push(true);

        // candidate pairs (g, h) with every active g
        let cands: Vec<(usize, Monomial, bool)> = (0..hi)
            .filter(|&g| self.active[g])
            .map(|g| {
                let lm = self.lm(g);
                (g, lm.lcm(&h_lm), lm.is_coprime(&h_lm))
            })
            .collect();

        // chain criterion among the new pairs
        let mut kept: Vec<(usize, Monomial, bool)> = Vec::new();
        for (k, (g, lcm, coprime)) in cands.iter().enumerate() {
            let redundant = !coprime
                && (cands[k + 1..].iter().any(|(_, l2, _)| l2.divides(lcm))
                    || kept.iter().any(|(_, l2, _)| l2.divides(lcm)));
            if !redundant {
                kept.push((*g, lcm.clone(), *coprime));
            }
        }

        // chain criterion on old pairs
        self.pairs.retain(|p| {
            let lcm_i = self.polys[p.i].leading_monomial().unwrap().lcm(&h_lm);
            let lcm_j = self.polys[p.j].leading_monomial().unwrap().lcm(&h_lm);
            !(h_lm.divides(&p.lcm) && lcm_i != p.lcm && lcm_j != p.lcm)
        });

        // product criterion
        for (g, lcm, coprime) in kept {
            if !coprime {
                let degree = order.pair_degree(&lcm);
                self.pairs.push(Pair {
                    i: g,
                    j: hi,
                    lcm,
                    degree,
                });
            }
        }

        for g in 0..hi {
            if self.active[g] && h_lm.divides(self.lm(g)) {
                self.active[g] = false;
            }
        }
        Ok(())
    }
}

/// Turns a minimal basis into the reduced one.
fn inter_reduce(mut basis: Vec<Poly>) -> Vec<Poly> {
    if basis.is_empty() {
        return basis;
    }
    let order = basis[0].ring().order().clone();
    basis.sort_by(|a, b| order.compare(a.leading_monomial().unwrap(), b.leading_monomial().unwrap()));
    let monic: Vec<Poly> = basis.iter().map(Poly::monic).collect();
    let mut out = Vec::with_capacity(monic.len());
    for (k, g) in monic.iter().enumerate() {
        let others: Vec<Poly> = monic
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != k)
            .map(|(_, p)| p.clone())
            .collect();
        // the leading term is irreducible by minimality, so only the tail moves
        out.push(remainder(g, &others).monic());
    }
    debug_assert!(out
        .windows(2)
        .all(|w| order.compare(w[0].leading_monomial().unwrap(), w[1].leading_monomial().unwrap()) == Ordering::Less));
    out
}

/// Buchberger's criterion: every S-polynomial reduces to zero.
pub fn is_groebner_basis(basis: &[Poly]) -> bool {
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            let (f, g) = (&basis[i], &basis[j]);
            let (lf, lg) = (f.leading_monomial().unwrap(), g.leading_monomial().unwrap());
            let lcm = lf.lcm(lg);
            let s = f
                .mul_term(&g.leading_coeff().unwrap().clone(), &lf.quotient_of(&lcm).unwrap())
                .sub_mul_term(f.leading_coeff().unwrap(), &lg.quotient_of(&lcm).unwrap(), g);
            if !remainder(&s, basis).is_zero() {
                return false;
            }
        }
    }
    true
}
