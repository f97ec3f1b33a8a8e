//! Oracles and seeded samplers shared by the integration tests.

#![allow(dead_code)]

use std::collections::HashMap;
use std::sync::Arc;

use jetscheme::jets::JetContext;
use jetscheme::{Field, Ideal, Monomial, Poly, PolyRing};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// `2^61 - 1`.
pub const P: u64 = (1 << 61) - 1;

fn mul_mod(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % P as u128) as u64
}

fn sub_mod(a: u64, b: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + P - b
    }
}

fn inv_mod(a: u64) -> u64 {
    let (mut base, mut e, mut acc) = (a, P - 2, 1u64);
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, base);
        }
        base = mul_mod(base, base);
        e >>= 1;
    }
    acc
}

fn big_mod(n: &BigInt) -> u64 {
    n.mod_floor(&BigInt::from(P)).to_u64().unwrap()
}

/// A rational coefficient reduced mod `P`.
pub fn coeff_mod(p: &Poly, k: usize) -> u64 {
    let q = p.terms()[k].1.as_rational().expect("rational coefficients");
    mul_mod(big_mod(q.numer()), inv_mod(big_mod(q.denom())))
}

/// Exponent vectors of total degree at most `d` in `n` variables.
pub fn monomials_up_to(n: usize, d: u32) -> Vec<Vec<u32>> {
    fn go(n: usize, d: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        for e in 0..=d {
            prefix.push(e);
            go(n, d - e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, d, &mut Vec::new(), &mut out);
    out
}

/// Linear-algebra membership test: `f` is declared a member iff it lies in
/// the span of `{ u * g : g a generator, u a monomial, deg(u * g) <= D }`,
/// computed mod `P`. A positive answer is a certificate; a negative one only
/// says no certificate of degree `D` exists.
pub struct Macaulay {
    pub degree: u32,
    columns: HashMap<Vec<u32>, usize>,
    /// Echelon rows in insertion order, each normalised at its pivot.
    rows: Vec<(usize, Vec<u64>)>,
}

impl Macaulay {
    pub fn new(gens: &[Poly], degree: u32) -> Self {
        let n = gens.first().map_or(0, |g| g.ring().nvars());
        let columns: HashMap<Vec<u32>, usize> = monomials_up_to(n, degree)
            .into_iter()
            .enumerate()
            .map(|(i, m)| (m, i))
            .collect();
        let mut mac = Macaulay {
            degree,
            columns,
            rows: Vec::new(),
        };
        for g in gens {
            let Some(dg) = g.total_degree() else { continue };
            if dg as u32 > degree {
                continue;
            }
            for u in monomials_up_to(n, degree - dg as u32) {
                let mut row = vec![0u64; mac.columns.len()];
                for (k, (m, _)) in g.terms().iter().enumerate() {
                    let e: Vec<u32> = m.exponents().iter().zip(&u).map(|(a, b)| a + b).collect();
                    row[mac.columns[&e]] = coeff_mod(g, k);
                }
                mac.insert(row);
            }
        }
        mac
    }

    fn reduce(&self, v: &mut [u64]) {
        for (pivot, row) in &self.rows {
            let c = v[*pivot];
            if c == 0 {
                continue;
            }
            for (x, r) in v.iter_mut().zip(row) {
                if *r != 0 {
                    *x = sub_mod(*x, mul_mod(c, *r));
                }
            }
        }
    }

    fn insert(&mut self, mut v: Vec<u64>) {
        self.reduce(&mut v);
        if let Some(pivot) = v.iter().position(|&x| x != 0) {
            let inv = inv_mod(v[pivot]);
            for x in v.iter_mut() {
                *x = mul_mod(*x, inv);
            }
            self.rows.push((pivot, v));
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// `None` if `f` has degree above the matrix degree.
    pub fn contains(&self, f: &Poly) -> Option<bool> {
        if f.total_degree().unwrap_or(0) as u32 > self.degree {
            return None;
        }
        let mut v = vec![0u64; self.columns.len()];
        for (k, (m, _)) in f.terms().iter().enumerate() {
            v[self.columns[m.exponents()]] = coeff_mod(f, k);
        }
        self.reduce(&mut v);
        Some(v.iter().all(|&x| x == 0))
    }
}

pub fn rational_ring(n: usize) -> Arc<PolyRing> {
    let names = ["x", "y", "z", "w"];
    PolyRing::rational(names[..n].iter().copied()).unwrap()
}

/// A random polynomial of total degree at most `d` (and exactly `d` in some
/// term) with small integer coefficients and up to `max_terms` terms.
pub fn random_poly(rng: &mut ChaCha8Rng, ring: &Arc<PolyRing>, d: u32, max_terms: usize) -> Poly {
    let n = ring.nvars();
    let field = ring.field();
    let pool = monomials_up_to(n, d);
    let top: Vec<&Vec<u32>> = pool.iter().filter(|m| m.iter().sum::<u32>() == d).collect();
    let mut terms = Vec::new();
    let lead = top[rng.gen_range(0..top.len())];
    terms.push((Monomial::from_exponents(lead), nonzero(rng, field)));
    for _ in 1..rng.gen_range(1..=max_terms) {
        let m = &pool[rng.gen_range(0..pool.len())];
        terms.push((Monomial::from_exponents(m), nonzero(rng, field)));
    }
    Poly::from_terms(ring, terms)
}

fn nonzero(rng: &mut ChaCha8Rng, field: Field) -> jetscheme::Coeff {
    let c = rng.gen_range(1..=7i64);
    field.from_i64(if rng.gen_bool(0.5) { c } else { -c })
}

/// Ideal with 1..=3 variables and 1..=3 generators of degree 1..=3.
pub fn random_ideal(rng: &mut ChaCha8Rng) -> Ideal {
    let ring = rational_ring(rng.gen_range(1..=3));
    let k = rng.gen_range(1..=3);
    let gens: Vec<Poly> = (0..k)
        .map(|_| {
            let d = rng.gen_range(1..=3);
            random_poly(rng, &ring, d, 4)
        })
        .collect();
    Ideal::new(&ring, gens).unwrap()
}

/// Jet equations by direct power-series expansion: each monomial of `f` is
/// expanded as a product of truncated series in `t`, whose coefficients are
/// polynomials in the jet variables.
pub fn series_jet_equations(ctx: &JetContext, f: &Poly) -> Vec<Poly> {
    let m = ctx.order();
    let jr = ctx.jet_ring();
    let series_mul = |a: &[Poly], b: &[Poly]| -> Vec<Poly> {
        (0..=m)
            .map(|e| (0..=e).fold(jr.zero(), |acc, i| &acc + &(&a[i] * &b[e - i])))
            .collect()
    };
    let mut total: Vec<Poly> = vec![jr.zero(); m + 1];
    for (mono, c) in f.terms() {
        let mut s: Vec<Poly> = (0..=m)
            .map(|e| if e == 0 { jr.constant(c.clone()) } else { jr.zero() })
            .collect();
        for (i, &exp) in mono.exponents().iter().enumerate() {
            let x: Vec<Poly> = (0..=m).map(|j| ctx.jet_var(i, j)).collect();
            for _ in 0..exp {
                s = series_mul(&s, &x);
            }
        }
        for e in 0..=m {
            total[e] = &total[e] + &s[e];
        }
    }
    total
}

/// `Σ j · exp(x_i_j)` over the jet variables of a monomial.
pub fn jet_weight(ctx: &JetContext, m: &Monomial) -> u64 {
    let n = ctx.nbase();
    m.exponents()
        .iter()
        .enumerate()
        .map(|(k, &e)| (k / n) as u64 * e as u64)
        .sum()
}
