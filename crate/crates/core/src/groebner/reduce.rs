//! Multivariate division. The partial remainder lives in a map keyed by the
//! monomial order so that its leading term is always at hand and each step
//! only touches the terms of the reducer.

use std::collections::btree_map::{BTreeMap, Entry};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use smallvec::SmallVec;

use super::{Budget, GroebnerError};
use crate::polyring::{Coeff, Monomial, MonomialOrder, Poly};

/// How many reduction steps between deadline checks and content removals.
const CHECK_EVERY: usize = 64;

pub(crate) type Terms<C> = Vec<(Monomial, C)>;

/// Coefficients usable by the fraction-free reducer.
pub(crate) trait Scalar: Clone {
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;
    fn mul(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// `(a, b)` with `a * lc_f == b * lc_g`.
    fn cofactors(lc_f: &Self, lc_g: &Self) -> (Self, Self);
    /// A common factor worth dividing out of all of `coeffs`.
    fn content<'a>(coeffs: impl Iterator<Item = &'a Self>) -> Option<Self>
    where
        Self: 'a;
    fn div_exact(&self, by: &Self) -> Self;
}

impl Scalar for Coeff {
    fn is_zero(&self) -> bool {
        Coeff::is_zero(self)
    }

    fn is_one(&self) -> bool {
        Coeff::is_one(self)
    }

    fn mul(&self, other: &Self) -> Self {
        Coeff::mul(self, other)
    }

    fn sub(&self, other: &Self) -> Self {
        Coeff::sub(self, other)
    }

    fn neg(&self) -> Self {
        Coeff::neg(self)
    }

    /// Over the rationals both are integers whenever the leading
    /// coefficients are.
    fn cofactors(lc_f: &Self, lc_g: &Self) -> (Self, Self) {
        match (lc_f, lc_g) {
            (Coeff::Rational(a), Coeff::Rational(b)) if a.is_integer() && b.is_integer() => {
                let (a, b) = BigInt::cofactors(a.numer(), b.numer());
                (
                    Coeff::Rational(BigRational::from_integer(a)),
                    Coeff::Rational(BigRational::from_integer(b)),
                )
            }
            _ => (lc_f.field().one(), lc_f.div(lc_g)),
        }
    }

    fn content<'a>(coeffs: impl Iterator<Item = &'a Self>) -> Option<Self> {
        let mut ints = Vec::new();
        for c in coeffs {
            match c {
                Coeff::Rational(q) if q.is_integer() => ints.push(q.numer()),
                _ => return None,
            }
        }
        BigInt::content(ints.into_iter()).map(|g| Coeff::Rational(BigRational::from_integer(g)))
    }

    fn div_exact(&self, by: &Self) -> Self {
        self.div(by)
    }
}

impl Scalar for BigInt {
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn is_one(&self) -> bool {
        One::is_one(self)
    }

    fn mul(&self, other: &Self) -> Self {
        self * other
    }

    fn sub(&self, other: &Self) -> Self {
        self - other
    }

    fn neg(&self) -> Self {
        -self
    }

    fn cofactors(lc_f: &Self, lc_g: &Self) -> (Self, Self) {
        let g = lc_f.gcd(lc_g);
        (lc_g / &g, lc_f / &g)
    }

    fn content<'a>(coeffs: impl Iterator<Item = &'a Self>) -> Option<Self> {
        let mut g = BigInt::zero();
        for c in coeffs {
            g = g.gcd(c);
            if One::is_one(&g) {
                return None;
            }
        }
        (g > BigInt::one()).then_some(g)
    }

    fn div_exact(&self, by: &Self) -> Self {
        self / by
    }
}

type SortKey = SmallVec<[i64; 24]>;

struct Rest<'o, C> {
    order: &'o MonomialOrder,
    terms: BTreeMap<SortKey, (Monomial, C)>,
}

impl<'o, C: Scalar> Rest<'o, C> {
    fn new(order: &'o MonomialOrder, p: Terms<C>) -> Self {
        let terms = p.into_iter().map(|(m, c)| (order.sort_key(&m), (m, c))).collect();
        Rest { order, terms }
    }

    fn pop_leading(&mut self) -> Option<(Monomial, C)> {
        self.terms.pop_last().map(|(_, t)| t)
    }

    fn scale(&mut self, a: &C) {
        for (_, c) in self.terms.values_mut() {
            *c = c.mul(a);
        }
    }

    fn divide(&mut self, a: &C) {
        for (_, c) in self.terms.values_mut() {
            *c = c.div_exact(a);
        }
    }

    /// `self -= b * q * (g - lt(g))`.
    fn sub_mul_tail(&mut self, b: &C, q: &Monomial, g: &[(Monomial, C)]) {
        for (gm, gc) in &g[1..] {
            let m = gm.mul(q);
            let d = gc.mul(b);
            match self.terms.entry(self.order.sort_key(&m)) {
                Entry::Occupied(mut e) => {
                    let c = e.get().1.sub(&d);
                    if c.is_zero() {
                        e.remove();
                    } else {
                        e.get_mut().1 = c;
                    }
                }
                Entry::Vacant(e) => {
                    e.insert((m, d.neg()));
                }
            }
        }
    }
}

fn find_reducer<'r, C>(reducers: &[&'r [(Monomial, C)]], m: &Monomial) -> Option<&'r [(Monomial, C)]> {
    reducers.iter().find(|g| g[0].0.divides(m)).copied()
}

/// Fully reduces `p` by `reducers` (each sorted descending, nonempty),
/// scaling by nonzero constants as needed to stay fraction-free.
pub(crate) fn reduce_terms<C: Scalar>(
    p: Terms<C>,
    reducers: &[&[(Monomial, C)]],
    order: &MonomialOrder,
    budget: &Budget,
) -> Result<Terms<C>, GroebnerError> {
    let mut rest = Rest::new(order, p);
    let mut done: Terms<C> = Vec::new();
    let mut steps = 0usize;
    loop {
        steps += 1;
        if steps.is_multiple_of(CHECK_EVERY) {
            budget.check_time()?;
            let content = C::content(rest.terms.values().map(|(_, c)| c).chain(done.iter().map(|(_, c)| c)));
            if let Some(g) = content {
                rest.divide(&g);
                for (_, c) in done.iter_mut() {
                    *c = c.div_exact(&g);
                }
            }
        }
        let Some((m, c)) = rest.pop_leading() else {
            break;
        };
        let Some(g) = find_reducer(reducers, &m) else {
            done.push((m, c));
            continue;
        };
        let q = g[0].0.quotient_of(&m).unwrap();
        let (a, b) = C::cofactors(&c, &g[0].1);
        // a * rest - b * q * g, with `done` scaled along
        if !a.is_one() {
            rest.scale(&a);
            for (_, dc) in done.iter_mut() {
                *dc = dc.mul(&a);
            }
        }
        rest.sub_mul_tail(&b, &q, g);
    }
    Ok(done)
}

/// Exact remainder of `p` modulo `basis` (no rescaling). Reducers are tried
/// in the given order.
pub(crate) fn remainder(p: &Poly, basis: &[Poly]) -> Poly {
    let ring = p.ring();
    let reducers: Vec<&[(Monomial, Coeff)]> = basis.iter().map(|g| g.terms()).collect();
    let mut rest = Rest::new(ring.order(), p.terms().to_vec());
    let mut done = Vec::new();
    while let Some((m, c)) = rest.pop_leading() {
        match find_reducer(&reducers, &m) {
            Some(g) => {
                let q = g[0].0.quotient_of(&m).unwrap();
                rest.sub_mul_tail(&c.div(&g[0].1), &q, g);
            }
            None => done.push((m, c)),
        }
    }
    Poly::from_sorted_terms(ring, done)
}

/// Integer coefficients of a primitive rational polynomial.
pub(crate) fn integral_terms(p: &Poly) -> Terms<BigInt> {
    p.terms()
        .iter()
        .map(|(m, c)| {
            let q = c.as_rational().expect("rational coefficients");
            debug_assert!(q.is_integer());
            (m.clone(), q.numer().clone())
        })
        .collect()
}

pub(crate) fn rational_terms(t: Terms<BigInt>) -> Terms<Coeff> {
    t.into_iter()
        .map(|(m, c)| (m, Coeff::Rational(BigRational::from_integer(c))))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integer_cofactors_cancel() {
        let (f, g) = (BigInt::from(-12), BigInt::from(18));
        let (a, b) = BigInt::cofactors(&f, &g);
        assert_eq!(&a * &f, &b * &g);
        assert_eq!((a, b), (BigInt::from(3), BigInt::from(-2)));
    }

    #[test]
    fn content_ignores_units() {
        let v = [BigInt::from(6), BigInt::from(-9)];
        assert_eq!(BigInt::content(v.iter()), Some(BigInt::from(3)));
        let w = [BigInt::from(6), BigInt::from(5)];
        assert_eq!(BigInt::content(w.iter()), None);
    }
}
