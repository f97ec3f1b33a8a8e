use std::sync::{Arc, OnceLock};

use super::{JetContext, JetError};
use crate::groebner::Ideal;
use crate::par::{self, Parallelism};
use crate::polyring::{Coeff, Monomial, Poly, RingError, RingMap};

/// The jet equations `F_i^(e)` of an ideal: the coefficient of `t^e` in
/// `f_i(Σ_j x_j t^j) mod t^(m+1)`.
#[derive(Clone)]
pub struct JetIdeal {
    ctx: Arc<JetContext>,
    source: Ideal,
    /// `equations[i][e]` is `F_i^(e)`.
    equations: Vec<Vec<Poly>>,
    ideal: OnceLock<Ideal>,
}

/// Coefficients of `t^0..=t^m` of `f` evaluated on the universal `m`-jet.
pub fn jet_equations(ctx: &JetContext, f: &Poly) -> Result<Vec<Poly>, RingError> {
    if !f.ring().same_as(ctx.base()) {
        return Err(RingError::RingMismatch);
    }
    let m = ctx.order();
    let (series_ring, t) = ctx.extended_ring("t")?;
    let images = (0..ctx.nbase())
        .map(|i| {
            let terms = (0..=m).map(|j| {
                let mut mono = Monomial::var(series_ring.nvars(), ctx.jet_index(i, j), 1);
                mono.set_exponent(t, j as u32);
                (mono, series_ring.field().one())
            });
            Poly::from_terms(&series_ring, terms)
        })
        .collect();
    let lambda = RingMap::from_images(ctx.base(), &series_ring, images)?;
    let series = lambda.apply_truncated(f, Some((t, m as u32)))?;

    let jet_ring = ctx.jet_ring();
    let drop_t: Vec<Option<usize>> = (0..jet_ring.nvars()).map(Some).collect();
    let mut buckets: Vec<Vec<(Monomial, Coeff)>> = vec![Vec::new(); m + 1];
    for (mono, c) in series.terms() {
        let e = mono.exponent(t) as usize;
        buckets[e].push((mono.permuted(&drop_t), c.clone()));
    }
    Ok(buckets
        .into_iter()
        .map(|terms| Poly::from_terms(jet_ring, terms))
        .collect())
}

/// Builds `I_m` from the given generators of `I`.
pub fn jetify(ideal: &Ideal, m: usize) -> Result<JetIdeal, JetError> {
    jetify_with(ideal, m, Parallelism::default())
}

pub fn jetify_with(ideal: &Ideal, m: usize, mode: Parallelism) -> Result<JetIdeal, JetError> {
    let ctx = JetContext::new(ideal.ring(), m)?;
    let equations = par::map(ideal.gens(), mode, |f| jet_equations(&ctx, f))
        .into_iter()
        .collect::<Result<Vec<_>, _>>()?;
    Ok(JetIdeal {
        ctx,
        source: ideal.clone(),
        equations,
        ideal: OnceLock::new(),
    })
}

impl JetIdeal {
    /// Assembles a jet ideal from explicit equations without checking them.
    pub fn from_parts(ctx: Arc<JetContext>, source: Ideal, equations: Vec<Vec<Poly>>) -> Self {
        JetIdeal {
            ctx,
            source,
            equations,
            ideal: OnceLock::new(),
        }
    }

    pub fn context(&self) -> &Arc<JetContext> {
        &self.ctx
    }

    pub fn source(&self) -> &Ideal {
        &self.source
    }

    pub fn order(&self) -> usize {
        self.ctx.order()
    }

    pub fn equation(&self, generator: usize, weight: usize) -> &Poly {
        &self.equations[generator][weight]
    }

    pub fn equations(&self) -> &[Vec<Poly>] {
        &self.equations
    }

    /// `(weight, F_i^(weight))` ordered by weight, then generator.
    pub fn listing(&self) -> Vec<(usize, &Poly)> {
        (0..=self.order())
            .flat_map(|e| self.equations.iter().map(move |eqs| (e, &eqs[e])))
            .collect()
    }

    /// `I_m` as an ideal of the jet ring.
    pub fn ideal(&self) -> &Ideal {
        self.ideal.get_or_init(|| {
            Ideal::new(self.ctx.jet_ring(), self.listing().into_iter().map(|(_, p)| p.clone()))
                .expect("equations live in the jet ring")
        })
    }

    /// Equivalent to weight-homogeneity: `F^(e)(s^j x_j) = s^e F^(e)` for
    /// every equation, checked in the ring with the extra variable `s`.
    pub fn gm_action_check(&self) -> Result<bool, RingError> {
        let jet_ring = self.ctx.jet_ring();
        let (s_ring, s) = self.ctx.extended_ring("s")?;
        let s_var = s_ring.gen(s);
        let images = (0..jet_ring.nvars())
            .map(|k| {
                let j = jet_ring.weights().unwrap()[k];
                let mut mono = Monomial::var(s_ring.nvars(), k, 1);
                mono.set_exponent(s, j);
                Poly::monomial(&s_ring, mono, s_ring.field().one())
            })
            .collect();
        let act = RingMap::from_images(jet_ring, &s_ring, images)?;
        for eqs in &self.equations {
            for (e, f) in eqs.iter().enumerate() {
                let lhs = act.apply(f)?;
                let rhs = &s_var.pow(e as u32) * &f.to_ring(&s_ring)?;
                if lhs != rhs {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Applies `σ_m^*` to every equation. Equals the source ideal's
    /// generator list: weight-zero equations map back to the generators and
    /// positive-weight ones vanish.
    pub fn section_pullback(&self) -> Result<Ideal, RingError> {
        let sigma = self.ctx.section();
        let gens = self
            .listing()
            .into_iter()
            .map(|(_, f)| sigma.apply(f))
            .collect::<Result<Vec<_>, _>>()?;
        Ideal::new(self.ctx.base(), gens)
    }

    /// The ideal of `π_m^{-1}(point)` in the positive-weight jet variables.
    pub fn fiber_ideal(&self, point: &[Coeff]) -> Result<Ideal, JetError> {
        let n = self.ctx.nbase();
        if point.len() != n {
            return Err(JetError::PointDimension {
                expected: n,
                got: point.len(),
            });
        }
        let field = self.ctx.base().field();
        if point.iter().any(|c| c.field() != field) {
            return Err(RingError::RingMismatch.into());
        }
        if self.source.gens().iter().any(|f| !f.evaluate(point).is_zero()) {
            return Err(JetError::PointNotOnX);
        }
        let fiber_ring = self.ctx.positive_weight_ring();
        let images = (0..self.ctx.jet_ring().nvars())
            .map(|k| {
                if k < n {
                    fiber_ring.constant(point[k].clone())
                } else {
                    fiber_ring.gen(k - n)
                }
            })
            .collect();
        let restrict = RingMap::from_images(self.ctx.jet_ring(), &fiber_ring, images)?;
        let gens = self
            .listing()
            .into_iter()
            .map(|(_, f)| restrict.apply(f))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Ideal::new(&fiber_ring, gens)?)
    }
}

/// Whether the weight-`≤ m` equations of `I_{m′}` are the images of those of
/// `I_m` under the inclusion of jet rings.
pub fn truncation_compatibility(ideal: &Ideal, m: usize, m_higher: usize) -> Result<bool, JetError> {
    if m_higher <= m {
        return Err(JetError::Precondition(format!(
            "truncation needs m′ > m, got m′ = {m_higher}, m = {m}"
        )));
    }
    let low = jetify(ideal, m)?;
    let high = jetify(ideal, m_higher)?;
    let psi = low.context().truncation_into(high.context())?;
    for (i, eqs) in low.equations().iter().enumerate() {
        for (e, f) in eqs.iter().enumerate() {
            if psi.apply(f)? != *high.equation(i, e) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Whether `(f·g)^(e) = Σ_{a+b=e} f^(a) g^(b)` for all `e ≤ m`.
pub fn formal_derivation_check(f: &Poly, g: &Poly, m: usize) -> Result<bool, JetError> {
    f.check_ring(g)?;
    let ctx = JetContext::new(f.ring(), m)?;
    let jf = jet_equations(&ctx, f)?;
    let jg = jet_equations(&ctx, g)?;
    let jfg = jet_equations(&ctx, &(f * g))?;
    for e in 0..=m {
        let mut conv = ctx.jet_ring().zero();
        for a in 0..=e {
            conv = &conv + &(&jf[a] * &jg[e - a]);
        }
        if conv != jfg[e] {
            return Ok(false);
        }
    }
    Ok(true)
}
