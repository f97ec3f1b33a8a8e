use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_rational::BigRational;
use num_traits::Signed;

use super::coeff::rational_content;
use super::{Coeff, Monomial, PolyRing, RingError};

/// Sparse polynomial. Terms are kept in strictly descending monomial order
/// with no zero coefficients.
#[derive(Clone)]
pub struct Poly {
    ring: Arc<PolyRing>,
    terms: Vec<(Monomial, Coeff)>,
}

/// Result of [`Poly::weight_of`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WeightClass {
    Homogeneous(u64),
    Inhomogeneous,
    /// The zero polynomial is homogeneous of every weight.
    Zero,
}

impl Poly {
    pub fn zero(ring: &Arc<PolyRing>) -> Self {
        Poly {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn constant(ring: &Arc<PolyRing>, c: Coeff) -> Self {
        Self::monomial(ring, Monomial::one(ring.nvars()), c)
    }

    pub fn monomial(ring: &Arc<PolyRing>, m: Monomial, c: Coeff) -> Self {
        debug_assert_eq!(m.len(), ring.nvars());
        let terms = if c.is_zero() { Vec::new() } else { vec![(m, c)] };
        Poly {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn var(ring: &Arc<PolyRing>, index: usize) -> Self {
        Self::monomial(ring, Monomial::var(ring.nvars(), index, 1), ring.field().one())
    }

    /// Builds a polynomial from arbitrary terms, combining duplicates.
    pub fn from_terms(ring: &Arc<PolyRing>, terms: impl IntoIterator<Item = (Monomial, Coeff)>) -> Self {
        let mut acc: HashMap<Monomial, Coeff> = HashMap::new();
        for (m, c) in terms {
            debug_assert_eq!(m.len(), ring.nvars());
            match acc.get_mut(&m) {
                Some(e) => *e = e.add(&c),
                None => {
                    acc.insert(m, c);
                }
            }
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        let order = ring.order();
        terms.sort_by(|a, b| order.compare(&b.0, &a.0));
        Poly {
            ring: ring.clone(),
            terms,
        }
    }

    /// Trusts the caller that `terms` are already canonical.
    pub(crate) fn from_sorted_terms(ring: &Arc<PolyRing>, terms: Vec<(Monomial, Coeff)>) -> Self {
        debug_assert!(terms
            .windows(2)
            .all(|w| ring.order().compare(&w[0].0, &w[1].0) == Ordering::Greater));
        debug_assert!(terms.iter().all(|(_, c)| !c.is_zero()));
        Poly {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn terms(&self) -> &[(Monomial, Coeff)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, Coeff)> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    /// A nonzero constant.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|(m, _)| m)
    }

    pub fn leading_coeff(&self) -> Option<&Coeff> {
        self.terms.first().map(|(_, c)| c)
    }

    pub fn total_degree(&self) -> Option<u64> {
        self.terms.iter().map(|(m, _)| m.total_degree()).max()
    }

    /// Bitmask of the variables that occur.
    pub fn support_mask(&self) -> u64 {
        self.terms.iter().fold(0, |acc, (m, _)| acc | m.support_mask())
    }

    pub fn uses_var(&self, index: usize) -> bool {
        self.terms.iter().any(|(m, _)| m.exponent(index) > 0)
    }

    pub(crate) fn check_ring(&self, other: &Poly) -> Result<(), RingError> {
        if self.ring.same_as(&other.ring) {
            Ok(())
        } else {
            Err(RingError::RingMismatch)
        }
    }

    pub fn try_add(&self, other: &Poly) -> Result<Poly, RingError> {
        self.check_ring(other)?;
        Ok(self.merge(other, false))
    }

    pub fn try_sub(&self, other: &Poly) -> Result<Poly, RingError> {
        self.check_ring(other)?;
        Ok(self.merge(other, true))
    }

    pub fn try_mul(&self, other: &Poly) -> Result<Poly, RingError> {
        self.check_ring(other)?;
        Ok(self.mul_unchecked(other))
    }

    pub fn try_pow(&self, e: i64) -> Result<Poly, RingError> {
        if e < 0 {
            return Err(RingError::NegativeExponent(e));
        }
        let e = u32::try_from(e).map_err(|_| RingError::NegativeExponent(e))?;
        Ok(self.pow(e))
    }

    /// Square-and-multiply.
    pub fn pow(&self, mut e: u32) -> Poly {
        if self.terms.len() == 1 {
            let (m, c) = &self.terms[0];
            return Poly::monomial(&self.ring, m.pow(e), c.pow(e));
        }
        let mut base = self.clone();
        let mut acc = self.ring.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_unchecked(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_unchecked(&base);
            }
        }
        acc
    }

    fn merge(&self, other: &Poly, subtract: bool) -> Poly {
        let order = self.ring.order();
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() && j < b.len() {
            match order.compare(&a[i].0, &b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let c = if subtract { b[j].1.neg() } else { b[j].1.clone() };
                    out.push((b[j].0.clone(), c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if subtract {
                        a[i].1.sub(&b[j].1)
                    } else {
                        a[i].1.add(&b[j].1)
                    };
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(
            b[j..]
                .iter()
                .map(|(m, c)| (m.clone(), if subtract { c.neg() } else { c.clone() })),
        );
        Poly {
            ring: self.ring.clone(),
            terms: out,
        }
    }

    fn mul_unchecked(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero(&self.ring);
        }
        if self.terms.len() == 1 {
            let (m, c) = &self.terms[0];
            return other.mul_term(c, m);
        }
        if other.terms.len() == 1 {
            let (m, c) = &other.terms[0];
            return self.mul_term(c, m);
        }
        let mut acc: HashMap<Monomial, Coeff> = HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.mul(mb);
                let c = ca.mul(cb);
                match acc.get_mut(&m) {
                    Some(e) => *e = e.add(&c),
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        let order = self.ring.order();
        terms.sort_by(|a, b| order.compare(&b.0, &a.0));
        Poly {
            ring: self.ring.clone(),
            terms,
        }
    }

    /// `c * m * self`. Order is preserved since monomial orders are multiplicative.
    pub fn mul_term(&self, c: &Coeff, m: &Monomial) -> Poly {
        if c.is_zero() {
            return Poly::zero(&self.ring);
        }
        Poly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(tm, tc)| (tm.mul(m), tc.mul(c))).collect(),
        }
    }

    pub fn scale(&self, c: &Coeff) -> Poly {
        if c.is_zero() {
            return Poly::zero(&self.ring);
        }
        Poly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, tc)| (m.clone(), tc.mul(c))).collect(),
        }
    }

    /// `self - c * m * g` in one merge pass.
    pub(crate) fn sub_mul_term(&self, c: &Coeff, m: &Monomial, g: &Poly) -> Poly {
        let order = self.ring.order();
        let a = &self.terms;
        let mut out = Vec::with_capacity(a.len() + g.terms.len());
        let mut i = 0;
        for (gm, gc) in &g.terms {
            let bm = gm.mul(m);
            while i < a.len() && order.compare(&a[i].0, &bm) == Ordering::Greater {
                out.push(a[i].clone());
                i += 1;
            }
            let bc = gc.mul(c);
            if i < a.len() && a[i].0 == bm {
                let s = a[i].1.sub(&bc);
                if !s.is_zero() {
                    out.push((bm, s));
                }
                i += 1;
            } else {
                out.push((bm, bc.neg()));
            }
        }
        out.extend(a[i..].iter().cloned());
        Poly {
            ring: self.ring.clone(),
            terms: out,
        }
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self) -> Poly {
        match self.leading_coeff() {
            None => self.clone(),
            Some(c) if c.is_one() => self.clone(),
            Some(c) => self.scale(&c.inv().expect("nonzero leading coefficient")),
        }
    }

    /// Over the rationals: integral coefficients with unit content and a
    /// positive leading coefficient. Over a prime field: monic.
    pub fn primitive(&self) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        match self.leading_coeff().unwrap() {
            Coeff::Rational(lc) => {
                let content = rational_content(self.terms.iter().map(|(_, c)| c.as_rational().expect("rational ring")));
                let content = if lc.is_negative() { -content } else { content };
                if content == BigRational::from_integer(1.into()) {
                    return self.clone();
                }
                self.scale(&Coeff::Rational(content.recip()))
            }
            Coeff::Prime(_) => self.monic(),
        }
    }

    /// Weighted degree of every term under the ring's weights (all ones if
    /// the ring carries none).
    pub fn weight_of(&self) -> WeightClass {
        let ones;
        let w = match self.ring.weights() {
            Some(w) => w,
            None => {
                ones = vec![1; self.ring.nvars()];
                &ones
            }
        };
        let mut it = self.terms.iter().map(|(m, _)| m.weighted_degree(w));
        match it.next() {
            None => WeightClass::Zero,
            Some(first) => {
                if it.all(|d| d == first) {
                    WeightClass::Homogeneous(first)
                } else {
                    WeightClass::Inhomogeneous
                }
            }
        }
    }

    pub fn derivative(&self, index: usize) -> Poly {
        let field = self.ring.field();
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.exponent(index) > 0)
            .map(|(m, c)| {
                let e = m.exponent(index);
                let mut dm = m.clone();
                dm.set_exponent(index, e - 1);
                (dm, c.mul(&field.from_i64(e as i64)))
            })
            .filter(|(_, c)| !c.is_zero());
        // Order can change only between terms that differed in this variable
        // alone, so re-sort.
        Poly::from_terms(&self.ring, terms)
    }

    /// Value at a point given by one coefficient per variable.
    pub fn evaluate(&self, point: &[Coeff]) -> Coeff {
        assert_eq!(point.len(), self.ring.nvars(), "point dimension");
        let mut acc = self.ring.field().zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    t = t.mul(&point[i].pow(e));
                }
            }
            acc = acc.add(&t);
        }
        acc
    }

    /// Drops every term whose exponent in variable `index` exceeds `max`.
    pub fn truncate_in_var(&self, index: usize, max: u32) -> Poly {
        Poly {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.exponent(index) <= max)
                .cloned()
                .collect(),
        }
    }

    /// Exact multivariate division; `None` if `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &Poly) -> Option<Poly> {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        let (lm, lc) = &divisor.terms[0];
        let lc_inv = lc.inv().expect("nonzero");
        let mut rem = self.clone();
        let mut quot = Vec::new();
        while let Some((m, c)) = rem.terms.first() {
            let qm = lm.quotient_of(m)?;
            let qc = c.mul(&lc_inv);
            rem = rem.sub_mul_term(&qc, &qm, divisor);
            quot.push((qm, qc));
        }
        // quotient terms come out in descending order
        Some(Poly::from_sorted_terms(&self.ring, quot))
    }

    /// Re-expresses this polynomial in `target`, matching variables by name.
    pub fn to_ring(&self, target: &Arc<PolyRing>) -> Result<Poly, RingError> {
        if self.ring.same_as(target) {
            return Ok(self.clone());
        }
        if self.ring.field() != target.field() {
            return Err(RingError::RingMismatch);
        }
        let src_of: Vec<Option<usize>> = target.vars().iter().map(|v| self.ring.var_index(v)).collect();
        for (i, v) in self.ring.vars().iter().enumerate() {
            if target.var_index(v).is_none() && self.uses_var(i) {
                return Err(RingError::UnknownVariable(v.clone()));
            }
        }
        let terms = self.terms.iter().map(|(m, c)| (m.permuted(&src_of), c.clone()));
        Ok(Poly::from_terms(target, terms))
    }
}

impl PartialEq for Poly {
    fn eq(&self, other: &Self) -> bool {
        self.ring.same_as(&other.ring) && self.terms == other.terms
    }
}

impl Eq for Poly {}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let unit = c.is_one() || c.neg().is_one();
            let mut first = true;
            if !unit || m.is_one() {
                c.fmt_abs(f)?;
                first = false;
            }
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if !first {
                    write!(f, "*")?;
                }
                first = false;
                write!(f, "{}", self.ring.vars()[i])?;
                if e > 1 {
                    write!(f, "^{e}")?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        self.try_add(rhs).expect("polynomials from different rings")
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self.try_sub(rhs).expect("polynomials from different rings")
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        self.try_mul(rhs).expect("polynomials from different rings")
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c.neg())).collect(),
        }
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(self, rhs: Poly) -> Poly {
        &self + &rhs
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(self, rhs: Poly) -> Poly {
        &self - &rhs
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        &self * &rhs
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::{Field, MonomialOrder};

    fn ring() -> Arc<PolyRing> {
        PolyRing::rational(["x", "y", "z"]).unwrap()
    }

    #[test]
    fn difference_of_squares() {
        let r = ring();
        let (x, y) = (r.gen(0), r.gen(1));
        assert_eq!((&x + &y) * (&x - &y), r.parse("x^2 - y^2").unwrap());
    }

    #[test]
    fn binomial_cube_matches_repeated_multiplication() {
        let r = ring();
        let p = &r.gen(0) + &r.one();
        let by_mul = &(&p * &p) * &p;
        assert_eq!(p.pow(3), by_mul);
        assert_eq!(p.pow(3).to_string(), "x^3 + 3*x^2 + 3*x + 1");
    }

    #[test]
    fn sum_of_squares_has_degree_two() {
        let r = ring();
        let f = r.parse("x^2 + y^2 + z^2").unwrap();
        assert_eq!(f.total_degree(), Some(2));
        assert_eq!((&f + &f).total_degree(), Some(2));
    }

    #[test]
    fn negative_exponent_and_ring_mismatch() {
        let r = ring();
        let other = PolyRing::rational(["a"]).unwrap();
        assert!(matches!(r.gen(0).try_pow(-1), Err(RingError::NegativeExponent(-1))));
        assert!(matches!(r.gen(0).try_add(&other.gen(0)), Err(RingError::RingMismatch)));
        let same = PolyRing::rational(["x", "y", "z"]).unwrap();
        assert!(r.gen(0).try_add(&same.gen(0)).is_ok());
    }

    #[test]
    fn weights() {
        let r = PolyRing::rational(["x_0", "y_0", "x_1", "y_1"])
            .unwrap()
            .with_weights(vec![0, 0, 1, 1])
            .unwrap();
        assert_eq!(r.parse("x_0*y_0").unwrap().weight_of(), WeightClass::Homogeneous(0));
        assert_eq!(
            r.parse("x_0*y_1 + x_1*y_0").unwrap().weight_of(),
            WeightClass::Homogeneous(1)
        );
        assert_eq!(r.parse("x_0 + x_1").unwrap().weight_of(), WeightClass::Inhomogeneous);
        assert_eq!(r.zero().weight_of(), WeightClass::Zero);
    }

    #[test]
    fn exact_division() {
        let r = ring();
        let f = r.parse("x^2*y + x*y^2").unwrap();
        let g = r.parse("x*y").unwrap();
        assert_eq!(f.div_exact(&g), Some(r.parse("x + y").unwrap()));
        assert_eq!(r.parse("x + 1").unwrap().div_exact(&g), None);
    }

    #[test]
    fn primitive_part() {
        let r = ring();
        let f = r.parse("-4/3*x + 2/3").unwrap();
        assert_eq!(f.primitive(), r.parse("2*x - 1").unwrap());
        let rp = PolyRing::new(["x"], MonomialOrder::Grevlex, Field::Prime(7)).unwrap();
        assert_eq!(rp.parse("3*x + 1").unwrap().primitive(), rp.parse("x + 5").unwrap());
    }

    #[test]
    fn derivative_and_evaluation() {
        let r = ring();
        let f = r.parse("x^3*y - 2*y^2 + z").unwrap();
        assert_eq!(f.derivative(1), r.parse("x^3 - 4*y").unwrap());
        let fq = Field::Rational;
        let pt = [fq.from_i64(2), fq.from_i64(1), fq.from_i64(-1)];
        assert_eq!(f.evaluate(&pt), fq.from_i64(8 - 2 - 1));
    }

    #[test]
    fn to_ring_by_name() {
        let r = ring();
        let s = PolyRing::rational(["t", "z", "y", "x"]).unwrap();
        let f = r.parse("x^2 - y*z").unwrap();
        let g = f.to_ring(&s).unwrap();
        assert_eq!(g.to_string(), "-z*y + x^2");
        assert_eq!(g.to_ring(&r).unwrap(), f);
        let small = PolyRing::rational(["x"]).unwrap();
        assert!(f.to_ring(&small).is_err());
    }
}
