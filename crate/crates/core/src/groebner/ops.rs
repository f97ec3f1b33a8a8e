//! Elimination, intersection, quotients, saturation and radical membership.

use std::sync::Arc;

use super::{Budget, GroebnerError, Ideal};
use crate::par;
use crate::polyring::{MonomialOrder, Poly, PolyRing, RingError};

/// A variable name not used in `ring`, derived from `base`.
pub(crate) fn fresh_var(ring: &PolyRing, base: &str) -> String {
    if ring.var_index(base).is_none() {
        return base.to_string();
    }
    (0..)
        .map(|k| format!("{base}aux{k}"))
        .find(|n| ring.var_index(n).is_none())
        .unwrap()
}

/// `I ∩ k[vars \ drop]`, returned in the subring on the remaining variables.
pub fn eliminate(ideal: &Ideal, drop: &[&str], budget: &Budget) -> Result<Ideal, GroebnerError> {
    let ring = ideal.ring();
    for d in drop {
        if ring.var_index(d).is_none() {
            return Err(RingError::UnknownVariable(d.to_string()).into());
        }
    }
    let keep: Vec<&str> = ring
        .vars()
        .iter()
        .map(String::as_str)
        .filter(|v| !drop.contains(v))
        .collect();
    let sub = ring.with_vars(keep.iter().copied(), None)?;
    let elim_ring = ring.with_vars(
        drop.iter().copied().chain(keep.iter().copied()),
        Some(MonomialOrder::Block(drop.len())),
    )?;
    let gb = ideal.to_ring(&elim_ring)?.groebner(budget)?.clone();
    let mut kept = Vec::new();
    for g in gb.elements() {
        if (0..drop.len()).all(|i| !g.uses_var(i)) {
            kept.push(g.to_ring(&sub)?);
        }
    }
    Ok(Ideal::new(&sub, kept)?)
}

/// `I ∩ J` by eliminating `t` from `t·I + (1 − t)·J`.
pub fn intersect(i: &Ideal, j: &Ideal, budget: &Budget) -> Result<Ideal, GroebnerError> {
    let ring = i.ring();
    if !ring.same_as(j.ring()) {
        return Err(RingError::RingMismatch.into());
    }
    if i.is_zero_ideal() || j.is_zero_ideal() {
        return Ok(Ideal::zero(ring));
    }
    let t = fresh_var(ring, "t");
    let ext = ring.with_vars(
        std::iter::once(t.as_str()).chain(ring.vars().iter().map(String::as_str)),
        Some(MonomialOrder::Block(1)),
    )?;
    let tv = ext.gen(0);
    let one_minus_t = &ext.one() - &tv;
    let mut gens = Vec::with_capacity(i.gens().len() + j.gens().len());
    for g in i.gens() {
        gens.push(&tv * &g.to_ring(&ext)?);
    }
    for h in j.gens() {
        gens.push(&one_minus_t * &h.to_ring(&ext)?);
    }
    let gb = Ideal::new(&ext, gens)?.groebner(budget)?.clone();
    let mut out = Vec::new();
    for g in gb.elements() {
        if !g.uses_var(0) {
            out.push(g.to_ring(ring)?);
        }
    }
    Ok(Ideal::new(ring, out)?)
}

/// `(I : f) = {g : g·f ∈ I}`, via `I ∩ (f)` divided by `f`.
pub fn quotient(ideal: &Ideal, f: &Poly, budget: &Budget) -> Result<Ideal, GroebnerError> {
    if f.is_zero() {
        return Err(GroebnerError::Precondition("quotient by the zero polynomial".into()));
    }
    let ring = ideal.ring();
    if !f.ring().same_as(ring) {
        return Err(RingError::RingMismatch.into());
    }
    let principal = Ideal::new(ring, [f.clone()])?;
    let meet = intersect(ideal, &principal, budget)?;
    let mut gens = Vec::with_capacity(meet.gens().len());
    for g in meet.gens() {
        let q = g
            .div_exact(f)
            .ok_or_else(|| GroebnerError::Internal(format!("{f} does not divide {g}")))?;
        gens.push(q);
    }
    Ok(Ideal::new(ring, gens)?)
}

/// `(I : f^∞)`, iterating quotients until the ideal stops growing.
pub fn saturate_by(ideal: &Ideal, f: &Poly, budget: &Budget) -> Result<Ideal, GroebnerError> {
    let mut cur = ideal.clone();
    loop {
        budget.check_time()?;
        let next = quotient(&cur, f, budget)?;
        if next.same_ideal(&cur, budget)? {
            // hand back the canonical generators
            let gb = cur.groebner(budget)?.elements().to_vec();
            return Ok(Ideal::new(cur.ring(), gb)?);
        }
        cur = next;
    }
}

/// `(I : J^∞)`: the intersection of the saturations by each element of the
/// reduced basis of `J`.
pub fn saturate(ideal: &Ideal, by: &Ideal, budget: &Budget) -> Result<Ideal, GroebnerError> {
    if !ideal.ring().same_as(by.ring()) {
        return Err(RingError::RingMismatch.into());
    }
    let gb = by.groebner(budget)?.clone();
    if gb.is_empty() {
        return Err(GroebnerError::Precondition("saturation by the zero ideal".into()));
    }
    if gb.is_unit() {
        return Ok(ideal.clone());
    }
    let parts = par::map(gb.elements(), budget.parallelism, |g| saturate_by(ideal, g, budget));
    let mut parts = parts.into_iter();
    let mut acc = parts.next().unwrap()?;
    for p in parts {
        acc = intersect(&acc, &p?, budget)?;
    }
    Ok(acc)
}

/// `f ∈ √I`, decided by whether `1 ∈ I + (1 − z·f)` with `z` a new variable.
pub fn radical_member(f: &Poly, ideal: &Ideal, budget: &Budget) -> Result<bool, GroebnerError> {
    let ring = ideal.ring();
    if !f.ring().same_as(ring) {
        return Err(RingError::RingMismatch.into());
    }
    if f.is_zero() {
        return Ok(true);
    }
    let z = fresh_var(ring, "z");
    let ext = extend_ring(ring, &z)?;
    let zv = ext.var(&z)?;
    let rabinowitsch = &ext.one() - &(&zv * &f.to_ring(&ext)?);
    let ext_ideal = ideal.to_ring(&ext)?.with_generators([rabinowitsch])?;
    ext_ideal.is_unit(budget)
}

/// `ring` with one more variable appended, grevlex.
pub(crate) fn extend_ring(ring: &Arc<PolyRing>, name: &str) -> Result<Arc<PolyRing>, RingError> {
    ring.with_vars(
        ring.vars().iter().map(String::as_str).chain(std::iter::once(name)),
        Some(MonomialOrder::Grevlex),
    )
}
