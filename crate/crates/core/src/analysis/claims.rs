use std::sync::Arc;

use super::{Status, Verdict};
use crate::groebner::{eliminate, krull_dim, radical_member, saturate, Budget, DimReport, GroebnerError, Ideal};
use crate::jets::{formal_derivation_check, jacobian_ideal, jetify, truncation_compatibility, JetError};
use crate::polyring::{Coeff, Field, MonomialOrder, Poly, PolyRing, RingError, WeightClass};

fn dim_of(ideal: &Ideal, budget: &Budget) -> Result<i64, JetError> {
    Ok(krull_dim(ideal, budget)?.dim)
}

fn fmt_point(p: &[Coeff]) -> String {
    let parts: Vec<String> = p.iter().map(|c| c.to_string()).collect();
    format!("({})", parts.join(", "))
}

/// `f ∉ I_m` but `f² ∈ I_m`: a nilpotent of the jet scheme.
pub fn nilpotent_witness(ideal: &Ideal, m: usize, f: &Poly, budget: &Budget) -> Result<Verdict, JetError> {
    let jets = jetify(ideal, m)?;
    if !f.ring().same_as(jets.context().jet_ring()) {
        return Err(RingError::RingMismatch.into());
    }
    let im = jets.ideal();
    let nf = im.normal_form(f, budget)?;
    let nf_sq = im.normal_form(&f.pow(2), budget)?;
    let mut v = Verdict::new("nilpotent-witness", ideal.ring().field(), "f not in I_m, f^2 in I_m");
    v.record("f", f.to_string());
    v.record("normal_form_f", nf.to_string());
    v.record("normal_form_f2", nf_sq.to_string());
    v.record("f_in_I_m", nf.is_zero());
    v.record("f2_in_I_m", nf_sq.is_zero());
    v.require(!nf.is_zero() && nf_sq.is_zero());
    Ok(v)
}

pub struct MainComponent {
    pub ideal: Ideal,
    pub dim: DimReport,
}

/// Saturates `I_m` by the pullback `x_i ↦ x_i_0` of an ideal cutting out the
/// singular locus; with `sing = None` the Jacobian ideal of `I` is used.
pub fn main_component(
    ideal: &Ideal,
    m: usize,
    sing: Option<&Ideal>,
    budget: &Budget,
) -> Result<MainComponent, JetError> {
    let jets = jetify(ideal, m)?;
    let ctx = jets.context();
    let sing = match sing {
        Some(s) if !s.ring().same_as(ideal.ring()) => return Err(RingError::RingMismatch.into()),
        Some(s) => s.clone(),
        None if ideal.is_zero_ideal() => Ideal::unit(ideal.ring()),
        None => jacobian_ideal(ideal, budget)?,
    };
    let pi = ctx.projection();
    let pulled = Ideal::new(
        ctx.jet_ring(),
        sing.gens().iter().map(|g| pi.apply(g)).collect::<Result<Vec<_>, _>>()?,
    )?;
    let sat = if pulled.is_zero_ideal() {
        // V(0) is everything, so nothing survives
        Ideal::unit(ctx.jet_ring())
    } else {
        saturate(jets.ideal(), &pulled, budget)?
    };
    let dim = krull_dim(&sat, budget)?;
    Ok(MainComponent { ideal: sat, dim })
}

/// The unique singular point of `V(I)` when the singular locus is a single
/// rational point; `None` when `V(I)` is smooth.
pub fn singular_point(ideal: &Ideal, budget: &Budget) -> Result<Option<Vec<Coeff>>, JetError> {
    let jac = jacobian_ideal(ideal, budget)?;
    let d = dim_of(&jac, budget)?;
    if d < 0 {
        return Ok(None);
    }
    if d > 0 {
        return Err(JetError::Precondition(format!(
            "singular locus has dimension {d}, expected isolated points"
        )));
    }
    let ring = ideal.ring();
    let mut point = Vec::with_capacity(ring.nvars());
    for (i, name) in ring.vars().iter().enumerate() {
        let others: Vec<&str> = ring
            .vars()
            .iter()
            .enumerate()
            .filter(|&(k, _)| k != i)
            .map(|(_, v)| v.as_str())
            .collect();
        let uni = eliminate(&jac, &others, budget)?;
        let gb = uni.groebner(budget)?;
        let [g] = gb.elements() else {
            return Err(GroebnerError::Internal(format!("univariate elimination for {name} is not principal")).into());
        };
        point.push(single_root(g).ok_or_else(|| {
            JetError::Precondition(format!(
                "singular locus is not a single rational point (projection to {name}: {g})"
            ))
        })?);
    }
    Ok(Some(point))
}

/// `c` when the univariate `g` is a unit multiple of `(x − c)^k`.
fn single_root(g: &Poly) -> Option<Coeff> {
    let ring = g.ring();
    let g = g.monic();
    let k = g.total_degree()?;
    let field = ring.field();
    let kc = field.from_i64(k as i64);
    if k == 0 || kc.is_zero() {
        return None;
    }
    let sub = g
        .terms()
        .iter()
        .find(|(mono, _)| mono.total_degree() == k - 1)
        .map(|(_, c)| c.clone())
        .unwrap_or_else(|| field.zero());
    let c = sub.neg().div(&kc);
    let root_factor = &ring.gen(0) - &ring.constant(c.clone());
    (root_factor.pow(k as u32) == g).then_some(c)
}

/// Certifies that `X_m` has a component besides the main one: the fiber over
/// the singular point is bigger than the main component.
pub fn irreducibility_failure_check(ideal: &Ideal, m: usize, budget: &Budget) -> Result<Verdict, JetError> {
    let mut v = Verdict::new(
        "irreducibility-failure",
        ideal.ring().field(),
        "dim of fiber over the singular point > dim of main component",
    );
    let jets = jetify(ideal, m)?;
    let dim_xm = dim_of(jets.ideal(), budget)?;
    v.record("dim_X_m", dim_xm);
    if dim_xm < 0 {
        v.status = Status::Fail;
        v.add_note("jet scheme is empty");
        return Ok(v);
    }
    let Some(point) = singular_point(ideal, budget)? else {
        v.status = Status::Fail;
        v.add_note("X is smooth, so there is no singular fiber");
        return Ok(v);
    };
    v.record("singular_point", fmt_point(&point));
    let fiber = dim_of(&jets.fiber_ideal(&point)?, budget)?;
    let main = main_component(ideal, m, None, budget)?.dim.dim;
    v.record("fiber_dim", fiber);
    v.record("main_dim", main);
    v.require(fiber > main);
    Ok(v)
}

/// Fiber dimensions of `X_m → A^1_m`, `t_0` fixed, for `X = V(t^d + x^d + y^d)`.
pub fn flatness_fiber_gap(d: u32, m: usize, field: Field, slow: bool, budget: &Budget) -> Result<Verdict, JetError> {
    if !(3..=4).contains(&d) || m > 3 {
        return Err(JetError::Precondition(format!(
            "supported range is 3 ≤ d ≤ 4, m ≤ 3 (got d = {d}, m = {m})"
        )));
    }
    let mut v = Verdict::new(
        "flatness-gap",
        field,
        format!("dim over t_0=0 > dim over t_0=1 = {}", 2 * m + 1),
    );
    if m < 2 {
        v.status = Status::Skipped;
        v.add_note("the gap argument needs m ≥ 2");
        return Ok(v);
    }
    let ring = PolyRing::new(["t", "x", "y"], MonomialOrder::Grevlex, field)?;
    let f = ring
        .parse(&format!("t^{d} + x^{d} + y^{d}"))
        .map_err(|e| JetError::Precondition(e.to_string()))?;
    let jets = jetify(&Ideal::new(&ring, [f])?, m)?;
    let jr = jets.context().jet_ring().clone();
    let t0 = jets.context().jet_var(0, 0);
    let fiber_dim = |c: i64| -> Result<i64, JetError> {
        let g = &t0 - &jr.constant_i64(c);
        dim_of(&jets.ideal().with_generators([g])?, budget)
    };
    let special = fiber_dim(0)?;
    let generic = fiber_dim(1)?;
    v.record("dim_over_t0_0", special);
    v.record("dim_over_t0_1", generic);
    v.require(generic == 2 * m as i64 + 1 && special > generic);
    if slow {
        let second = fiber_dim(2)?;
        v.record("dim_over_t0_2", second);
        v.require(second == generic);
    }
    Ok(v)
}

/// First jets of the quadric `Σ x_i^2` in `n` variables: the equations, the
/// singular locus and the dimension.
pub fn quadric_x1_report(n: usize, field: Field, budget: &Budget) -> Result<Verdict, JetError> {
    if !(3..=6).contains(&n) {
        return Err(JetError::Precondition(format!("n must lie in 3..=6, got {n}")));
    }
    let names: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
    let ring = PolyRing::new(names, MonomialOrder::Grevlex, field)?;
    let f = (0..n).map(|i| ring.gen(i).pow(2)).fold(ring.zero(), |a, b| &a + &b);
    let jets = jetify(&Ideal::new(&ring, [f])?, 1)?;
    let ctx = jets.context();
    let jr = ctx.jet_ring();
    let eq0 = (0..n).map(|i| ctx.jet_var(i, 0).pow(2)).fold(jr.zero(), |a, b| &a + &b);
    let eq1 = (0..n)
        .map(|i| &ctx.jet_var(i, 0) * &ctx.jet_var(i, 1))
        .fold(jr.zero(), |a, b| &a + &b);

    let mut v = Verdict::new(
        "quadric-first-jets",
        field,
        format!(
            "equations match; x_i_0 in sqrt(Jac); Sing dim = {n}; dim X_1 = {}",
            2 * n - 2
        ),
    );
    let matches = *jets.equation(0, 0) == eq0 && jets.equation(0, 1).monic() == eq1.monic();
    v.record("equations_match", matches);
    let jac = jacobian_ideal(jets.ideal(), budget)?;
    let mut all_in = true;
    for i in 0..n {
        all_in &= radical_member(&ctx.jet_var(i, 0), &jac, budget)?;
    }
    v.record("x_i_0_in_sqrt_jac", all_in);
    let sing = dim_of(&jac, budget)?;
    let dim_x1 = dim_of(jets.ideal(), budget)?;
    v.record("sing_dim", sing);
    v.record("dim_X_1", dim_x1);
    v.require(matches && all_in && sing == n as i64 && dim_x1 == 2 * n as i64 - 2);
    Ok(v)
}

/// For smooth `X`: `dim X_m = (m+1)·dim X` and the Jacobian system of `I_m`
/// is the unit ideal.
pub fn smooth_jets_report(ideal: &Ideal, m: usize, budget: &Budget) -> Result<Verdict, JetError> {
    let dim_x = dim_of(ideal, budget)?;
    let jets = jetify(ideal, m)?;
    let dim_xm = dim_of(jets.ideal(), budget)?;
    let unit = jacobian_ideal(jets.ideal(), budget)?.is_unit(budget)?;
    let mut v = Verdict::new(
        "smooth-jets",
        ideal.ring().field(),
        format!(
            "Jacobian system is the unit ideal; dim X_m = {}",
            (m as i64 + 1) * dim_x
        ),
    );
    v.record("dim_X", dim_x);
    v.record("dim_X_m", dim_xm);
    v.record("jacobian_unit", unit);
    v.require(unit && dim_xm == (m as i64 + 1) * dim_x);
    Ok(v)
}

/// Structural identities of the jet construction over a corpus of
/// `(ideal, m)` pairs: weight homogeneity, the `G_m` action, the section
/// pullback, truncation coherence and the derivation law.
pub fn structure_report(corpus: &[(Ideal, usize)]) -> Result<Verdict, JetError> {
    let field = corpus.first().map_or(Field::Rational, |(i, _)| i.ring().field());
    let mut v = Verdict::new("jet-structure", field, "all identities hold");
    let mut checks = 0i64;
    let mut failures: Vec<String> = Vec::new();
    for (k, (ideal, m)) in corpus.iter().enumerate() {
        let jets = jetify(ideal, *m)?;
        let mut check = |name: &str, ok: bool| {
            checks += 1;
            if !ok {
                failures.push(format!("{name}#{k}"));
            }
        };
        let homogeneous = jets.equations().iter().all(|eqs| {
            eqs.iter().enumerate().all(|(e, f)| match f.weight_of() {
                WeightClass::Homogeneous(w) => w == e as u64,
                WeightClass::Zero => true,
                WeightClass::Inhomogeneous => false,
            })
        });
        check("weight", homogeneous);
        check("gm", jets.gm_action_check()?);
        check("section", jets.section_pullback()?.gens() == ideal.gens());
        check("truncation", truncation_compatibility(ideal, *m, m + 1)?);
        let gens = ideal.gens();
        let mut derivation = true;
        for a in 0..gens.len() {
            for b in a..gens.len() {
                derivation &= formal_derivation_check(&gens[a], &gens[b], *m)?;
            }
        }
        check("derivation", derivation);
    }
    v.record("ideals", corpus.len() as i64);
    v.record("checks", checks);
    v.record("failures", failures.len() as i64);
    if !failures.is_empty() {
        v.add_note(&format!("failed: {}", failures.join(", ")));
    }
    v.require(failures.is_empty());
    Ok(v)
}

pub(crate) fn ring_over(vars: &[&str], field: Field) -> Result<Arc<PolyRing>, RingError> {
    PolyRing::new(vars.iter().copied(), MonomialOrder::Grevlex, field)
}
