use std::fmt;
use std::sync::{Arc, OnceLock};

use super::buchberger::reduced_groebner_basis;
use super::reduce::remainder;
use super::{Budget, GroebnerError};
use crate::polyring::{MonomialOrder, ParseError, Poly, PolyRing, RingError};

/// A reduced Gröbner basis together with the ring (and hence order) it was
/// computed in.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    ring: Arc<PolyRing>,
    elems: Vec<Poly>,
}

impl GroebnerBasis {
    /// Wraps `elems` without checking that they form a Gröbner basis;
    /// `normal_form` is then plain multivariate division.
    pub fn from_elements_unchecked(ring: &Arc<PolyRing>, elems: Vec<Poly>) -> Self {
        GroebnerBasis {
            ring: ring.clone(),
            elems,
        }
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn elements(&self) -> &[Poly] {
        &self.elems
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    /// The basis is `{1}`.
    pub fn is_unit(&self) -> bool {
        self.elems.len() == 1 && self.elems[0].is_unit()
    }

    /// Remainder under division by the basis.
    pub fn normal_form(&self, f: &Poly) -> Result<Poly, RingError> {
        let f = f.to_ring(&self.ring)?;
        Ok(remainder(&f, &self.elems))
    }

    pub fn contains(&self, f: &Poly) -> Result<bool, RingError> {
        Ok(self.normal_form(f)?.is_zero())
    }
}

/// An ideal given by generators, with a lazily computed reduced Gröbner basis
/// for the ring's own order.
#[derive(Clone)]
pub struct Ideal {
    ring: Arc<PolyRing>,
    gens: Vec<Poly>,
    basis: OnceLock<Arc<GroebnerBasis>>,
}

impl Ideal {
    /// Zero generators are dropped.
    pub fn new(ring: &Arc<PolyRing>, gens: impl IntoIterator<Item = Poly>) -> Result<Self, RingError> {
        let mut out = Vec::new();
        for g in gens {
            if !g.ring().same_as(ring) {
                return Err(RingError::RingMismatch);
            }
            if !g.is_zero() {
                out.push(g);
            }
        }
        Ok(Ideal {
            ring: ring.clone(),
            gens: out,
            basis: OnceLock::new(),
        })
    }

    pub fn zero(ring: &Arc<PolyRing>) -> Self {
        Ideal {
            ring: ring.clone(),
            gens: Vec::new(),
            basis: OnceLock::new(),
        }
    }

    pub fn unit(ring: &Arc<PolyRing>) -> Self {
        Ideal::new(ring, [ring.one()]).expect("same ring")
    }

    pub fn parse<S: AsRef<str>>(ring: &Arc<PolyRing>, gens: &[S]) -> Result<Self, ParseError> {
        let polys = gens
            .iter()
            .map(|s| ring.parse(s.as_ref()))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Ideal::new(ring, polys).expect("parsed in this ring"))
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn gens(&self) -> &[Poly] {
        &self.gens
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.gens.is_empty()
    }

    /// Reduced basis in the ring's order; computed once, then cached.
    pub fn groebner(&self, budget: &Budget) -> Result<&GroebnerBasis, GroebnerError> {
        if let Some(b) = self.basis.get() {
            return Ok(b);
        }
        let elems = reduced_groebner_basis(&self.ring, &self.gens, budget)?;
        let gb = Arc::new(GroebnerBasis {
            ring: self.ring.clone(),
            elems,
        });
        Ok(self.basis.get_or_init(|| gb))
    }

    /// Reduced basis under another order on the same variables.
    pub fn groebner_basis(&self, order: &MonomialOrder, budget: &Budget) -> Result<GroebnerBasis, GroebnerError> {
        if order == self.ring.order() {
            return self.groebner(budget).cloned();
        }
        let ring = self.ring.with_order(order.clone())?;
        let gens = self
            .gens
            .iter()
            .map(|g| g.to_ring(&ring))
            .collect::<Result<Vec<_>, _>>()?;
        let elems = reduced_groebner_basis(&ring, &gens, budget)?;
        Ok(GroebnerBasis { ring, elems })
    }

    pub fn normal_form(&self, f: &Poly, budget: &Budget) -> Result<Poly, GroebnerError> {
        if !f.ring().same_as(&self.ring) {
            return Err(RingError::RingMismatch.into());
        }
        Ok(self.groebner(budget)?.normal_form(f)?)
    }

    pub fn contains(&self, f: &Poly, budget: &Budget) -> Result<bool, GroebnerError> {
        Ok(self.normal_form(f, budget)?.is_zero())
    }

    pub fn is_unit(&self, budget: &Budget) -> Result<bool, GroebnerError> {
        Ok(self.groebner(budget)?.is_unit())
    }

    /// `self ⊆ other`.
    pub fn is_subset_of(&self, other: &Ideal, budget: &Budget) -> Result<bool, GroebnerError> {
        let gb = other.groebner(budget)?;
        for g in &self.gens {
            if !gb.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Equality as ideals: identical reduced bases.
    pub fn same_ideal(&self, other: &Ideal, budget: &Budget) -> Result<bool, GroebnerError> {
        if !self.ring.same_as(&other.ring) {
            return Err(RingError::RingMismatch.into());
        }
        Ok(self.groebner(budget)?.elements() == other.groebner(budget)?.elements())
    }

    /// `self + other`.
    pub fn sum(&self, other: &Ideal) -> Result<Ideal, RingError> {
        Ideal::new(&self.ring, self.gens.iter().chain(&other.gens).cloned())
    }

    /// `self + (extra)`.
    pub fn with_generators(&self, extra: impl IntoIterator<Item = Poly>) -> Result<Ideal, RingError> {
        Ideal::new(&self.ring, self.gens.iter().cloned().chain(extra))
    }

    /// The same generators in another ring (variables matched by name).
    pub fn to_ring(&self, ring: &Arc<PolyRing>) -> Result<Ideal, RingError> {
        let gens = self
            .gens
            .iter()
            .map(|g| g.to_ring(ring))
            .collect::<Result<Vec<_>, _>>()?;
        Ideal::new(ring, gens)
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ideal{self}")
    }
}
