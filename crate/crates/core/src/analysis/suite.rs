use std::time::{Duration, Instant};

use super::claims::*;
use super::{Status, Verdict};
use crate::groebner::{krull_dim, Budget, Ideal};
use crate::jets::{jacobian_ideal, jetify, JetContext, JetError};
use crate::par::{self, Parallelism};
use crate::polyring::{Field, DEFAULT_PRIME};

#[derive(Clone, Debug)]
pub struct SuiteOptions {
    pub field: Field,
    /// Claim ids or id prefixes ending at a `-` boundary; empty runs all.
    pub filter: Vec<String>,
    pub per_claim: Duration,
    /// Also compute the second generic-fiber witness `t_0 = 2`.
    pub slow: bool,
    pub parallelism: Parallelism,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            field: Field::Rational,
            filter: Vec::new(),
            per_claim: Duration::from_secs(60),
            slow: false,
            parallelism: Parallelism::default(),
        }
    }
}

struct Env {
    field: Field,
    slow: bool,
}

type ClaimFn = fn(&Env, &Budget) -> Result<Verdict, JetError>;

struct Claim {
    id: &'static str,
    run: ClaimFn,
    /// May be retried over `GF(p)` when the rational computation runs out of budget.
    prime_fallback: bool,
}

const CLAIMS: &[Claim] = &[
    Claim {
        id: "sec1-smooth-m1",
        run: |e, b| smooth(e, b, 1),
        prime_fallback: false,
    },
    Claim {
        id: "sec1-smooth-m2",
        run: |e, b| smooth(e, b, 2),
        prime_fallback: false,
    },
    Claim {
        id: "sec2-structure",
        run: structure,
        prime_fallback: false,
    },
    Claim {
        id: "ex3.1-m1",
        run: |e, b| nilpotent(e, b, 1),
        prime_fallback: false,
    },
    Claim {
        id: "ex3.1-m2",
        run: |e, b| nilpotent(e, b, 2),
        prime_fallback: false,
    },
    Claim {
        id: "ex3.1-m3",
        run: |e, b| nilpotent(e, b, 3),
        prime_fallback: false,
    },
    Claim {
        id: "ex3.1-control",
        run: nilpotent_control,
        prime_fallback: false,
    },
    Claim {
        id: "ex3.3-m1",
        run: |e, b| curve(e, b, 1),
        prime_fallback: true,
    },
    Claim {
        id: "ex3.3-m2",
        run: |e, b| curve(e, b, 2),
        prime_fallback: true,
    },
    Claim {
        id: "ex3.5-m1",
        run: |e, b| cone(e, b, 1),
        prime_fallback: false,
    },
    Claim {
        id: "ex3.5-m2",
        run: |e, b| cone(e, b, 2),
        prime_fallback: false,
    },
    Claim {
        id: "ex3.5-irreducible-m1",
        run: cone_irreducible,
        prime_fallback: false,
    },
    Claim {
        id: "ex3.12-n3",
        run: |e, b| quadric_x1_report(3, e.field, b),
        prime_fallback: false,
    },
    Claim {
        id: "ex3.12-n4",
        run: |e, b| quadric_x1_report(4, e.field, b),
        prime_fallback: false,
    },
    Claim {
        id: "ex3.12-n5",
        run: |e, b| quadric_x1_report(5, e.field, b),
        prime_fallback: false,
    },
    Claim {
        id: "ex4.2-d3-m2",
        run: |e, b| flatness_fiber_gap(3, 2, e.field, e.slow, b),
        prime_fallback: true,
    },
    Claim {
        id: "ex4.2-d4-m2",
        run: |e, b| flatness_fiber_gap(4, 2, e.field, e.slow, b),
        prime_fallback: true,
    },
    Claim {
        id: "ex4.2-d3-m1",
        run: |e, b| flatness_fiber_gap(3, 1, e.field, e.slow, b),
        prime_fallback: true,
    },
];

/// Every claim id, in output order.
pub fn claim_ids() -> Vec<&'static str> {
    CLAIMS.iter().map(|c| c.id).collect()
}

fn selected(id: &str, filter: &[String]) -> bool {
    filter.is_empty()
        || filter
            .iter()
            .any(|f| id == f || (id.starts_with(f.as_str()) && id[f.len()..].starts_with('-')))
}

/// Runs the selected claims (possibly in parallel) and returns one verdict
/// per claim in fixed order. Budget exhaustion yields `Skipped`, any other
/// error `Fail`.
pub fn run_suite(opts: &SuiteOptions) -> Vec<Verdict> {
    let chosen: Vec<&Claim> = CLAIMS.iter().filter(|c| selected(c.id, &opts.filter)).collect();
    par::map(&chosen, opts.parallelism, |claim| {
        let start = Instant::now();
        let mut v = run_one(claim, opts);
        v.claim = claim.id.to_string();
        v.elapsed = start.elapsed();
        v
    })
}

fn run_one(claim: &Claim, opts: &SuiteOptions) -> Verdict {
    let budget = Budget::default()
        .with_parallelism(opts.parallelism)
        .with_time_limit(opts.per_claim);
    let env = Env {
        field: opts.field,
        slow: opts.slow,
    };
    match (claim.run)(&env, &budget) {
        Ok(v) => v,
        Err(e) if e.is_budget() && claim.prime_fallback && opts.field.is_exact_char_zero() => {
            let prime = Field::prime(DEFAULT_PRIME).expect("default modulus is prime");
            let env = Env {
                field: prime,
                slow: opts.slow,
            };
            match (claim.run)(&env, &budget.restarted()) {
                Ok(mut v) => {
                    v.add_note(&format!("{e} over QQ; recomputed over {prime}"));
                    v
                }
                Err(e2) => errored(claim.id, prime, &e2),
            }
        }
        Err(e) => errored(claim.id, opts.field, &e),
    }
}

fn errored(id: &str, field: Field, e: &JetError) -> Verdict {
    let mut v = Verdict::new(id, field, "");
    v.status = if e.is_budget() { Status::Skipped } else { Status::Fail };
    v.add_note(&e.to_string());
    v
}

fn parse(field: Field, vars: &[&str], gens: &[&str]) -> Result<Ideal, JetError> {
    let ring = ring_over(vars, field)?;
    Ideal::parse(&ring, gens).map_err(|e| JetError::Precondition(e.to_string()))
}

fn xyz(field: Field, gens: &[&str]) -> Result<Ideal, JetError> {
    parse(field, &["x", "y", "z"], gens)
}

fn smooth(env: &Env, budget: &Budget, m: usize) -> Result<Verdict, JetError> {
    smooth_jets_report(&xyz(env.field, &["z - x*y"])?, m, budget)
}

fn structure(env: &Env, _: &Budget) -> Result<Verdict, JetError> {
    let f = env.field;
    let corpus = vec![
        (xyz(f, &["x*y"])?, 3),
        (xyz(f, &["x^3 - y^2", "x^2 - z^3"])?, 2),
        (xyz(f, &["x^2 + y^2 + z^2"])?, 3),
        (xyz(f, &["z - x*y"])?, 3),
        (xyz(f, &["x^2*y + 3*x*z - 1/2", "y^3 - z"])?, 2),
        (xyz(f, &["x^3 + y^3 + z^3", "x*y*z - 1", "x - 2*y + 5"])?, 1),
        (parse(f, &["t", "x", "y"], &["t^3 + x^3 + y^3"])?, 3),
    ];
    structure_report(&corpus)
}

fn nilpotent(env: &Env, budget: &Budget, m: usize) -> Result<Verdict, JetError> {
    let ideal = parse(env.field, &["x", "y"], &["x*y"])?;
    let ctx = JetContext::new(ideal.ring(), m)?;
    let f = &ctx.jet_var(0, 0) * &ctx.jet_var(1, 1);
    nilpotent_witness(&ideal, m, &f, budget)
}

/// `(x)` is smooth, so its jets are reduced and `x_1` is no witness.
fn nilpotent_control(env: &Env, budget: &Budget) -> Result<Verdict, JetError> {
    let ideal = parse(env.field, &["x", "y"], &["x"])?;
    let ctx = JetContext::new(ideal.ring(), 1)?;
    let inner = nilpotent_witness(&ideal, 1, &ctx.jet_var(0, 1), budget)?;
    let mut v = Verdict::new("", env.field, "not a witness: f in I_m");
    v.computed = inner.computed;
    v.require(inner.status == Status::Fail && v.flag("f_in_I_m") == Some(true));
    Ok(v)
}

fn curve(env: &Env, budget: &Budget, m: usize) -> Result<Verdict, JetError> {
    let ideal = xyz(env.field, &["x^3 - y^2", "x^2 - z^3"])?;
    let mut v = irreducibility_failure_check(&ideal, m, budget)?;
    v.expected = format!("main dim = {}; fiber dim >= {}; fiber dim > main dim", m + 1, m + 2);
    let origin = xyz(env.field, &["x", "y", "z"])?;
    let by_origin = main_component(&ideal, m, Some(&origin), budget)?.dim.dim;
    v.record("main_dim_by_origin", by_origin);
    let origin_text = format!("({})", ["0"; 3].join(", "));
    let main = v.int("main_dim");
    let fiber = v.int("fiber_dim");
    let at_origin = v.value("singular_point").map(|p| p.to_string()) == Some(origin_text);
    v.require(at_origin);
    v.require(main == Some(m as i64 + 1) && main == Some(by_origin));
    v.require(fiber.is_some_and(|d| d >= m as i64 + 2));
    Ok(v)
}

fn cone(env: &Env, budget: &Budget, m: usize) -> Result<Verdict, JetError> {
    let ideal = xyz(env.field, &["x^2 + y^2 + z^2"])?;
    let jets = jetify(&ideal, m)?;
    let zero = env.field.zero();
    let dim_xm = krull_dim(jets.ideal(), budget)?.dim;
    let fiber = krull_dim(&jets.fiber_ideal(&[zero.clone(), zero.clone(), zero])?, budget)?.dim;
    let sing = krull_dim(&jacobian_ideal(jets.ideal(), budget)?, budget)?.dim;
    let (mi, two_m1) = (m as i64, 2 * m as i64 + 1);
    let mut v = Verdict::new(
        "",
        env.field,
        format!("dim X_m = {}; fiber dim = {two_m1}; Sing dim = {two_m1}", 2 * (mi + 1)),
    );
    v.record("dim_X_m", dim_xm);
    v.record("fiber_dim", fiber);
    v.record("sing_dim", sing);
    v.require(dim_xm == 2 * (mi + 1) && fiber == two_m1 && sing == two_m1);
    Ok(v)
}

/// The fiber comparison cannot certify reducibility here; the jet scheme is
/// irreducible.
fn cone_irreducible(env: &Env, budget: &Budget) -> Result<Verdict, JetError> {
    let ideal = xyz(env.field, &["x^2 + y^2 + z^2"])?;
    let inner = irreducibility_failure_check(&ideal, 1, budget)?;
    let mut v = Verdict::new("", env.field, "no certificate: fiber dim < dim X_m");
    v.computed = inner.computed;
    let (fiber, dim_xm) = (v.int("fiber_dim"), v.int("dim_X_m"));
    v.require(inner.status == Status::Fail && matches!((fiber, dim_xm), (Some(a), Some(b)) if a < b));
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn filter_matches_on_dash_boundaries() {
        let f = vec!["ex3.1".to_string()];
        assert!(selected("ex3.1-m2", &f));
        assert!(selected("ex3.1-control", &f));
        assert!(!selected("ex3.12-n3", &f));
        assert!(selected("ex3.12-n3", &["ex3.12-n3".to_string()]));
        assert!(selected("anything", &[]));
    }

    #[test]
    fn ids_are_unique() {
        let mut ids = claim_ids();
        ids.sort();
        ids.dedup();
        assert_eq!(ids.len(), CLAIMS.len());
    }
}
