//! End-to-end acceptance run: one line per criterion, non-zero exit if any
//! fails.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use jetscheme::analysis::{irreducibility_failure_check, main_component, Status};
use jetscheme::groebner::{krull_dim, radical_member};
use jetscheme::jets::{jacobian_ideal, jet_equations, jetify, JetContext, JetError};
use jetscheme::polyring::DEFAULT_PRIME;
use jetscheme::{Budget, Field, Ideal, PolyRing};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::{jet_weight, random_ideal, random_poly, series_jet_equations, Macaulay};

type Outcome = Result<(bool, String), JetError>;
type Criterion = (&'static str, fn() -> Outcome);

fn budget() -> Budget {
    Budget::default().with_time_limit(Duration::from_secs(120))
}

fn ring(vars: &[&str], field: Field) -> std::sync::Arc<PolyRing> {
    PolyRing::new(vars.iter().copied(), jetscheme::MonomialOrder::Grevlex, field).unwrap()
}

fn parse(vars: &[&str], field: Field, gens: &[&str]) -> Ideal {
    Ideal::parse(&ring(vars, field), gens).unwrap()
}

fn nilpotence() -> Outcome {
    let i = parse(&["x", "y"], Field::Rational, &["x*y"]);
    let mut ok = true;
    let mut parts = Vec::new();
    for m in 1..=3 {
        let jets = jetify(&i, m)?;
        let f = &jets.context().jet_var(0, 0) * &jets.context().jet_var(1, 1);
        let nf = jets.ideal().normal_form(&f, &budget())?;
        let nf2 = jets.ideal().normal_form(&f.pow(2), &budget())?;
        ok &= !nf.is_zero() && nf2.is_zero();
        parts.push(format!("m={m}: nf(f)={nf}, nf(f^2)={nf2}"));
    }
    Ok((ok, parts.join("; ")))
}

fn cone_dimensions() -> Outcome {
    let i = parse(&["x", "y", "z"], Field::Rational, &["x^2 + y^2 + z^2"]);
    let mut ok = true;
    let mut parts = Vec::new();
    for m in 1..=2usize {
        let jets = jetify(&i, m)?;
        let dim = krull_dim(jets.ideal(), &budget())?.dim;
        let zero = Field::Rational.zero();
        let fiber = krull_dim(&jets.fiber_ideal(&vec![zero; 3])?, &budget())?.dim;
        ok &= dim == 2 * (m as i64 + 1) && fiber == 2 * m as i64 + 1;
        parts.push(format!(
            "m={m}: dim={dim} (want {}), fiber={fiber} (want {})",
            2 * (m + 1),
            2 * m + 1
        ));
    }
    Ok((ok, parts.join("; ")))
}

fn curve_at(field: Field, m: usize) -> Result<(bool, String), JetError> {
    let i = parse(&["x", "y", "z"], field, &["x^3 - y^2", "x^2 - z^3"]);
    let mc = main_component(&i, m, None, &budget())?;
    let jets = jetify(&i, m)?;
    let fiber = krull_dim(&jets.fiber_ideal(&vec![field.zero(); 3])?, &budget())?.dim;
    let check = irreducibility_failure_check(&i, m, &budget())?;
    let ok = mc.dim.dim == m as i64 + 1 && fiber >= m as i64 + 2 && check.status == Status::Pass;
    Ok((
        ok,
        format!("m={m}: main={} fiber={fiber} check={}", mc.dim.dim, check.status),
    ))
}

fn curve_reducibility() -> Outcome {
    let mut ok = true;
    let mut parts = Vec::new();
    for m in 1..=2 {
        let (o, text) = match curve_at(Field::Rational, m) {
            Err(e) if e.is_budget() => {
                let (o, t) = curve_at(Field::prime(DEFAULT_PRIME).unwrap(), m)?;
                (o, format!("{t} [char p: QQ exceeded budget]"))
            }
            r => r?,
        };
        ok &= o;
        parts.push(text);
    }
    Ok((ok, parts.join("; ")))
}

fn quadric_first_jets() -> Outcome {
    let mut ok = true;
    let mut parts = Vec::new();
    for n in 3..=5usize {
        let names: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
        let names: Vec<&str> = names.iter().map(String::as_str).collect();
        let sum: Vec<String> = names.iter().map(|v| format!("{v}^2")).collect();
        let i = parse(&names, Field::Rational, &[&sum.join(" + ")]);
        let jets = jetify(&i, 1)?;
        let jr = jets.context().jet_ring();
        let eq0 = jr
            .parse(&names.iter().map(|v| format!("{v}_0^2")).collect::<Vec<_>>().join(" + "))
            .unwrap();
        let eq1 = jr
            .parse(
                &names
                    .iter()
                    .map(|v| format!("{v}_0*{v}_1"))
                    .collect::<Vec<_>>()
                    .join(" + "),
            )
            .unwrap();
        let equations = *jets.equation(0, 0) == eq0 && *jets.equation(0, 1) == &eq1 * &jr.constant_i64(2);
        let jac = jacobian_ideal(jets.ideal(), &budget())?;
        let mut radical = true;
        for k in 0..n {
            radical &= radical_member(&jets.context().jet_var(k, 0), &jac, &budget())?;
        }
        let sing = krull_dim(&jac, &budget())?.dim;
        let dim = krull_dim(jets.ideal(), &budget())?.dim;
        ok &= equations && radical && sing == n as i64 && dim == 2 * n as i64 - 2;
        parts.push(format!(
            "n={n}: equations={equations} radical={radical} sing={sing} dim={dim}"
        ));
    }
    Ok((ok, parts.join("; ")))
}

fn flatness_gap() -> Outcome {
    let i = parse(&["t", "x", "y"], Field::Rational, &["t^3 + x^3 + y^3"]);
    let m = 2;
    let jets = jetify(&i, m)?;
    let jr = jets.context().jet_ring().clone();
    let t0 = jets.context().jet_var(0, 0);
    let generic = krull_dim(&jets.ideal().with_generators([&t0 - &jr.one()])?, &budget())?.dim;
    let special = krull_dim(&jets.ideal().with_generators([t0])?, &budget())?.dim;
    let ok = generic == 2 * m as i64 + 1 && special >= 6 && special > generic;
    Ok((
        ok,
        format!("d=3 m=2: dim over t_0=1 is {generic}, over t_0=0 is {special}"),
    ))
}

fn structural_suite() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x6a65_7473);
    let (mut checks, mut failures) = (0usize, Vec::new());
    let corpus = 24;
    for k in 0..corpus {
        let ideal = random_ideal(&mut rng);
        let m = rng.gen_range(1..=3usize);
        let jets = jetify(&ideal, m)?;
        let ctx = jets.context();
        let higher = JetContext::new(ideal.ring(), m + 1)?;
        let up = ctx.truncation_into(&higher)?;
        let section = ctx.section();
        let mut check = |name: &str, ok: bool| {
            checks += 1;
            if !ok {
                failures.push(format!("#{k} {name}"));
            }
        };
        check("gm", jets.gm_action_check()?);
        for (g, f) in ideal.gens().iter().enumerate() {
            let eqs = &jets.equations()[g];
            check("series", *eqs == series_jet_equations(ctx, f));
            let homogeneous = eqs
                .iter()
                .enumerate()
                .all(|(e, p)| p.terms().iter().all(|(mono, _)| jet_weight(ctx, mono) == e as u64));
            check("weights", homogeneous);
            let pulled: Vec<_> = eqs.iter().map(|p| section.apply(p).unwrap()).collect();
            check("section", pulled[0] == *f && pulled[1..].iter().all(|p| p.is_zero()));
            let longer = series_jet_equations(&higher, f);
            check("truncation", (0..=m).all(|e| up.apply(&eqs[e]).unwrap() == longer[e]));
            for h in ideal.gens() {
                let product = jet_equations(ctx, &(f * h))?;
                let other = jet_equations(ctx, h)?;
                let law = (0..=m).all(|e| {
                    let conv = (0..=e).fold(ctx.jet_ring().zero(), |acc, a| &acc + &(&eqs[a] * &other[e - a]));
                    conv == product[e]
                });
                check("derivation", law);
            }
        }
    }
    let ok = failures.is_empty();
    Ok((
        ok,
        format!("{corpus} ideals, {checks} checks, failures: [{}]", failures.join(", ")),
    ))
}

fn smooth_graph() -> Outcome {
    let i = parse(&["x", "y", "z"], Field::Rational, &["z - x*y"]);
    let mut ok = true;
    let mut parts = Vec::new();
    for m in 1..=2usize {
        let jets = jetify(&i, m)?;
        let unit = jacobian_ideal(jets.ideal(), &budget())?.is_unit(&budget())?;
        let dim = krull_dim(jets.ideal(), &budget())?.dim;
        ok &= unit && dim == 2 * (m as i64 + 1);
        parts.push(format!("m={m}: jacobian unit={unit} dim={dim}"));
    }
    Ok((ok, parts.join("; ")))
}

fn oracle_agreement() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x6d61_6361);
    let (mut tested, mut members, mut disagreements) = (0usize, 0usize, Vec::new());
    for k in 0..50 {
        let ideal = random_ideal(&mut rng);
        let ring = ideal.ring().clone();
        let mut tests = Vec::new();
        for _ in 0..2 {
            let combo = ideal.gens().iter().fold(ring.zero(), |acc, g| {
                let d = rng.gen_range(0..=5 - g.total_degree().unwrap() as u32);
                &acc + &(g * &random_poly(&mut rng, &ring, d, 3))
            });
            tests.push(combo);
            let d = rng.gen_range(0..=5);
            tests.push(random_poly(&mut rng, &ring, d, 5));
            let p = random_poly(&mut rng, &ring, 5, 4);
            let nf = ideal.normal_form(&p, &budget())?;
            tests.push(&p - &nf);
            tests.push(nf);
        }
        let mut mac: Option<Macaulay> = None;
        for f in &tests {
            let gb = ideal.contains(f, &budget())?;
            // smallest certificate degree that settles the question, up to 12
            let mut oracle = false;
            for d in [8, 10, 12] {
                if mac.as_ref().is_none_or(|m| m.degree < d) {
                    mac = Some(Macaulay::new(ideal.gens(), d));
                }
                oracle = mac.as_ref().unwrap().contains(f).unwrap();
                if oracle || !gb {
                    break;
                }
            }
            tested += 1;
            members += gb as usize;
            if gb != oracle {
                disagreements.push(format!("ideal #{k}: {f} (gb {gb}, oracle {oracle})"));
            }
        }
    }
    let ok = disagreements.is_empty();
    Ok((
        ok,
        format!(
            "50 ideals, {tested} decisions ({members} members), disagreements: [{}]",
            disagreements.join("; ")
        ),
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("nilpotent jets of (xy)", nilpotence),
        ("A1 cone dimensions", cone_dimensions),
        ("curve jets reducible", curve_reducibility),
        ("quadric first jets", quadric_first_jets),
        ("flatness gap", flatness_gap),
        ("structural identities", structural_suite),
        ("smooth graph jets", smooth_graph),
        ("Groebner vs Macaulay oracle", oracle_agreement),
    ];
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let (ok, detail) = match run() {
            Ok(r) => r,
            Err(e) => (false, format!("error: {e}")),
        };
        failed += !ok as usize;
        println!(
            "criterion {} {:<28} {}  {}  ({:.1}s)",
            k + 1,
            name,
            if ok { "PASS" } else { "FAIL" },
            detail,
            start.elapsed().as_secs_f64()
        );
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
