use std::sync::Arc;

use crate::groebner::fresh_var;
use crate::polyring::{MonomialOrder, Poly, PolyRing, RingError, RingMap};

/// Renders the jet coordinate of order `j` of variable `base`.
pub fn jet_var_name(base: &str, j: usize) -> String {
    format!("{base}_{j}")
}

/// The ambient data of the `m`-jet scheme of a subscheme of affine space:
/// the base ring `k[x_1..x_N]` and the jet ring `k[x_i_j : 0 ≤ j ≤ m]` graded
/// by `weight(x_i_j) = j`.
///
/// Jet variables are ordered by order first: `x_1_0, …, x_N_0, x_1_1, …`.
#[derive(Debug)]
pub struct JetContext {
    base: Arc<PolyRing>,
    order: usize,
    jet_ring: Arc<PolyRing>,
}

impl JetContext {
    pub fn new(base: &Arc<PolyRing>, m: usize) -> Result<Arc<Self>, RingError> {
        let n = base.nvars();
        let mut names = Vec::with_capacity(n * (m + 1));
        let mut weights = Vec::with_capacity(n * (m + 1));
        for j in 0..=m {
            for v in base.vars() {
                names.push(jet_var_name(v, j));
                weights.push(j as u32);
            }
        }
        let jet_ring = PolyRing::new(names, MonomialOrder::Grevlex, base.field())?.with_weights(weights)?;
        Ok(Arc::new(JetContext {
            base: base.clone(),
            order: m,
            jet_ring,
        }))
    }

    pub fn base(&self) -> &Arc<PolyRing> {
        &self.base
    }

    /// The jet order `m`.
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn jet_ring(&self) -> &Arc<PolyRing> {
        &self.jet_ring
    }

    pub fn nbase(&self) -> usize {
        self.base.nvars()
    }

    pub fn jet_index(&self, var: usize, j: usize) -> usize {
        debug_assert!(var < self.nbase() && j <= self.order);
        j * self.nbase() + var
    }

    pub fn jet_var(&self, var: usize, j: usize) -> Poly {
        self.jet_ring.gen(self.jet_index(var, j))
    }

    /// `π_m^*`: `x_i ↦ x_i_0`.
    pub fn projection(&self) -> RingMap {
        let images = (0..self.nbase()).map(|i| self.jet_var(i, 0)).collect();
        RingMap::from_images(&self.base, &self.jet_ring, images).expect("images in the jet ring")
    }

    /// `σ_m^*`: `x_i_0 ↦ x_i`, `x_i_j ↦ 0` for `j ≥ 1`.
    pub fn section(&self) -> RingMap {
        let images = (0..=self.order)
            .flat_map(|j| (0..self.nbase()).map(move |i| if j == 0 { self.base.gen(i) } else { self.base.zero() }))
            .collect();
        RingMap::from_images(&self.jet_ring, &self.base, images).expect("images in the base ring")
    }

    /// `ψ_{m′,m}^*` from this jet ring into the jet ring of a higher order:
    /// the inclusion `x_i_j ↦ x_i_j`.
    pub fn truncation_into(&self, higher: &JetContext) -> Result<RingMap, RingError> {
        if !self.base.same_as(&higher.base) || higher.order <= self.order {
            return Err(RingError::RingMismatch);
        }
        let images = (0..=self.order)
            .flat_map(|j| (0..self.nbase()).map(move |i| higher.jet_var(i, j)))
            .collect();
        RingMap::from_images(&self.jet_ring, &higher.jet_ring, images)
    }

    /// Jet ring with one extra variable appended (for `t` or `s`).
    pub(crate) fn extended_ring(&self, base_name: &str) -> Result<(Arc<PolyRing>, usize), RingError> {
        let name = fresh_var(&self.jet_ring, base_name);
        let ring = crate::groebner::extend_ring(&self.jet_ring, &name)?;
        Ok((ring, self.jet_ring.nvars()))
    }

    /// `k[x_i_j : 1 ≤ j ≤ m]`, the ambient ring of a fiber of `π_m`.
    pub fn positive_weight_ring(&self) -> Arc<PolyRing> {
        let names: Vec<String> = self.jet_ring.vars()[self.nbase()..].to_vec();
        let weights: Vec<u32> = self.jet_ring.weights().unwrap()[self.nbase()..].to_vec();
        PolyRing::new(names, MonomialOrder::Grevlex, self.base.field())
            .and_then(|r| r.with_weights(weights))
            .expect("jet names are valid")
    }
}
