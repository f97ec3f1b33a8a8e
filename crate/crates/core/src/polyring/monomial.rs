use std::cmp::Ordering;

use smallvec::SmallVec;

/// Exponent vector, one entry per ring variable.
///
/// Exponents are 32-bit; overflowing one during multiplication panics.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(SmallVec<[u32; 12]>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(SmallVec::from_elem(0, nvars))
    }

    pub fn from_exponents(exps: &[u32]) -> Self {
        Monomial(SmallVec::from_slice(exps))
    }

    pub fn var(nvars: usize, index: usize, exp: u32) -> Self {
        let mut m = Self::one(nvars);
        m.0[index] = exp;
        m
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn exponent(&self, index: usize) -> u32 {
        self.0[index]
    }

    pub fn total_degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn weighted_degree(&self, weights: &[u32]) -> u64 {
        self.0.iter().zip(weights).map(|(&e, &w)| e as u64 * w as u64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.len(), other.len());
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a.checked_add(*b).expect("monomial exponent overflow"))
                .collect(),
        )
    }

    pub fn pow(&self, e: u32) -> Monomial {
        Monomial(
            self.0
                .iter()
                .map(|a| a.checked_mul(e).expect("monomial exponent overflow"))
                .collect(),
        )
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`, when `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if self.divides(other) {
            Some(Monomial(other.0.iter().zip(&self.0).map(|(b, a)| b - a).collect()))
        } else {
            None
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Bit `i` is set when variable `i` occurs. Requires at most 64 variables.
    pub fn support_mask(&self) -> u64 {
        assert!(self.len() <= 64, "support masks cover at most 64 variables");
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .fold(0u64, |acc, (i, _)| acc | (1 << i))
    }

    /// Re-index the exponent vector: entry `k` of the result is entry
    /// `source_of[k]` of `self` (or zero for `None`).
    pub(crate) fn permuted(&self, source_of: &[Option<usize>]) -> Monomial {
        Monomial(source_of.iter().map(|s| s.map_or(0, |i| self.0[i])).collect())
    }

    pub(crate) fn set_exponent(&mut self, index: usize, e: u32) {
        self.0[index] = e;
    }
}

/// A global monomial order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    /// Graded reverse lexicographic.
    Grevlex,
    Lex,
    /// Lex on the first `k` variables, ties broken by grevlex on the rest.
    /// Eliminates the first `k` variables.
    Block(usize),
    /// Weighted degree first, ties broken by grevlex.
    Weighted(Vec<u32>),
}

impl MonomialOrder {
    pub fn name(&self) -> String {
        match self {
            MonomialOrder::Grevlex => "grevlex".into(),
            MonomialOrder::Lex => "lex".into(),
            MonomialOrder::Block(k) => format!("block({k})"),
            MonomialOrder::Weighted(w) => format!(
                "weighted({})",
                w.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
            ),
        }
    }

    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::Grevlex => grevlex(a.exponents(), b.exponents()),
            MonomialOrder::Lex => a.exponents().cmp(b.exponents()),
            MonomialOrder::Block(k) => {
                let k = (*k).min(a.len());
                a.exponents()[..k]
                    .cmp(&b.exponents()[..k])
                    .then_with(|| grevlex(&a.exponents()[k..], &b.exponents()[k..]))
            }
            MonomialOrder::Weighted(w) => a
                .weighted_degree(w)
                .cmp(&b.weighted_degree(w))
                .then_with(|| grevlex(a.exponents(), b.exponents())),
        }
    }

    /// A key whose lexicographic order agrees with this order on monomials
    /// of one ring.
    pub(crate) fn sort_key(&self, m: &Monomial) -> SmallVec<[i64; 24]> {
        let e = m.exponents();
        let mut key = SmallVec::new();
        let grevlex_key = |key: &mut SmallVec<[i64; 24]>, part: &[u32]| {
            key.push(part.iter().map(|&x| x as i64).sum());
            key.extend(part.iter().rev().map(|&x| -(x as i64)));
        };
        match self {
            MonomialOrder::Grevlex => grevlex_key(&mut key, e),
            MonomialOrder::Lex => key.extend(e.iter().map(|&x| x as i64)),
            MonomialOrder::Block(k) => {
                let k = (*k).min(e.len());
                key.extend(e[..k].iter().map(|&x| x as i64));
                grevlex_key(&mut key, &e[k..]);
            }
            MonomialOrder::Weighted(w) => {
                key.push(m.weighted_degree(w) as i64);
                grevlex_key(&mut key, e);
            }
        }
        key
    }

    /// The degree used for pair selection in Buchberger's algorithm.
    pub(crate) fn pair_degree(&self, m: &Monomial) -> u64 {
        m.total_degree()
    }
}

fn grevlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u64 = a.iter().map(|&e| e as u64).sum();
    let db: u64 = b.iter().map(|&e| e as u64).sum();
    da.cmp(&db).then_with(|| {
        for (x, y) in a.iter().rev().zip(b.iter().rev()) {
            if x != y {
                // smaller exponent in the last differing variable is larger
                return y.cmp(x);
            }
        }
        Ordering::Equal
    })
}
