//! Exact coefficients: arbitrary-precision rationals or residues modulo a prime.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::RingError;

/// Default prime for fast modular checks.
pub const DEFAULT_PRIME: u32 = 32003;

/// The coefficient domain of a ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Field {
    Rational,
    Prime(u32),
}

impl Field {
    /// Builds a prime field, rejecting composite or out-of-range moduli.
    pub fn prime(p: u32) -> Result<Self, RingError> {
        if !(2..=(1 << 31)).contains(&p) || !is_prime(p) {
            return Err(RingError::BadModulus(p));
        }
        Ok(Field::Prime(p))
    }

    pub fn is_exact_char_zero(self) -> bool {
        matches!(self, Field::Rational)
    }

    pub fn zero(self) -> Coeff {
        match self {
            Field::Rational => Coeff::Rational(BigRational::zero()),
            Field::Prime(p) => Coeff::Prime(Fp { value: 0, modulus: p }),
        }
    }

    pub fn one(self) -> Coeff {
        self.from_i64(1)
    }

    pub fn from_i64(self, n: i64) -> Coeff {
        match self {
            Field::Rational => Coeff::Rational(BigRational::from_integer(n.into())),
            Field::Prime(p) => Coeff::Prime(Fp::new(n.rem_euclid(p as i64) as u32, p)),
        }
    }

    pub fn from_bigint(self, n: &BigInt) -> Coeff {
        match self {
            Field::Rational => Coeff::Rational(BigRational::from_integer(n.clone())),
            Field::Prime(p) => Coeff::Prime(Fp::new(reduce_bigint(n, p), p)),
        }
    }

    /// `num / den` in this field; `None` when the denominator vanishes here.
    pub fn from_ratio(self, num: &BigInt, den: &BigInt) -> Option<Coeff> {
        match self {
            Field::Rational => {
                if den.is_zero() {
                    None
                } else {
                    Some(Coeff::Rational(BigRational::new(num.clone(), den.clone())))
                }
            }
            Field::Prime(p) => {
                let d = Fp::new(reduce_bigint(den, p), p);
                let n = Fp::new(reduce_bigint(num, p), p);
                d.inv().map(|di| Coeff::Prime(n.mul(di)))
            }
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "QQ"),
            Field::Prime(p) => write!(f, "GF({p})"),
        }
    }
}

fn reduce_bigint(n: &BigInt, p: u32) -> u32 {
    let r = n.mod_floor(&BigInt::from(p));
    r.to_u32().expect("residue fits in u32")
}

pub(crate) fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let p = p as u64;
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Residue modulo a prime. The modulus travels with the value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Fp {
    value: u32,
    modulus: u32,
}

impl Fp {
    fn new(value: u32, modulus: u32) -> Self {
        debug_assert!(value < modulus);
        Fp { value, modulus }
    }

    pub fn value(self) -> u32 {
        self.value
    }

    pub fn modulus(self) -> u32 {
        self.modulus
    }

    fn check(self, other: Fp) {
        assert_eq!(
            self.modulus, other.modulus,
            "mixing coefficients of GF({}) and GF({})",
            self.modulus, other.modulus
        );
    }

    fn add(self, o: Fp) -> Fp {
        self.check(o);
        let s = self.value as u64 + o.value as u64;
        Fp::new((s % self.modulus as u64) as u32, self.modulus)
    }

    fn neg(self) -> Fp {
        if self.value == 0 {
            self
        } else {
            Fp::new(self.modulus - self.value, self.modulus)
        }
    }

    fn mul(self, o: Fp) -> Fp {
        self.check(o);
        let s = self.value as u64 * o.value as u64;
        Fp::new((s % self.modulus as u64) as u32, self.modulus)
    }

    fn pow(self, mut e: u64) -> Fp {
        let mut base = self;
        let mut acc = Fp::new(1 % self.modulus, self.modulus);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(base);
            }
            base = base.mul(base);
            e >>= 1;
        }
        acc
    }

    fn inv(self) -> Option<Fp> {
        if self.value == 0 {
            None
        } else {
            Some(self.pow(self.modulus as u64 - 2))
        }
    }

    /// Representative in `(-p/2, p/2]`, used for printing.
    fn symmetric(self) -> i64 {
        let v = self.value as i64;
        let p = self.modulus as i64;
        if v > p / 2 {
            v - p
        } else {
            v
        }
    }
}

/// A field element. All coefficients of one ring share a variant (and modulus).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Coeff {
    Rational(BigRational),
    Prime(Fp),
}

impl Coeff {
    pub fn field(&self) -> Field {
        match self {
            Coeff::Rational(_) => Field::Rational,
            Coeff::Prime(x) => Field::Prime(x.modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Coeff::Rational(q) => q.is_zero(),
            Coeff::Prime(x) => x.value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Coeff::Rational(q) => q.is_one(),
            Coeff::Prime(x) => x.value == 1,
        }
    }

    /// True when the printed form carries a leading minus sign.
    pub fn is_negative(&self) -> bool {
        match self {
            Coeff::Rational(q) => q.is_negative(),
            Coeff::Prime(x) => x.symmetric() < 0,
        }
    }

    pub fn add(&self, other: &Coeff) -> Coeff {
        match (self, other) {
            (Coeff::Rational(a), Coeff::Rational(b)) => Coeff::Rational(a + b),
            (Coeff::Prime(a), Coeff::Prime(b)) => Coeff::Prime(a.add(*b)),
            _ => panic!("mixing rational and modular coefficients"),
        }
    }

    pub fn sub(&self, other: &Coeff) -> Coeff {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Coeff) -> Coeff {
        match (self, other) {
            (Coeff::Rational(a), Coeff::Rational(b)) => Coeff::Rational(a * b),
            (Coeff::Prime(a), Coeff::Prime(b)) => Coeff::Prime(a.mul(*b)),
            _ => panic!("mixing rational and modular coefficients"),
        }
    }

    pub fn neg(&self) -> Coeff {
        match self {
            Coeff::Rational(a) => Coeff::Rational(-a),
            Coeff::Prime(a) => Coeff::Prime(a.neg()),
        }
    }

    pub fn inv(&self) -> Option<Coeff> {
        match self {
            Coeff::Rational(a) => {
                if a.is_zero() {
                    None
                } else {
                    Some(Coeff::Rational(a.recip()))
                }
            }
            Coeff::Prime(a) => a.inv().map(Coeff::Prime),
        }
    }

    /// Panics on division by zero.
    pub fn div(&self, other: &Coeff) -> Coeff {
        self.mul(&other.inv().expect("division by zero coefficient"))
    }

    pub fn pow(&self, e: u32) -> Coeff {
        match self {
            Coeff::Rational(a) => Coeff::Rational(num_traits::pow(a.clone(), e as usize)),
            Coeff::Prime(a) => Coeff::Prime(a.pow(e as u64)),
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Coeff::Rational(q) => Some(q),
            Coeff::Prime(_) => None,
        }
    }

    /// Writes the absolute value; the sign is handled by the polynomial printer.
    pub(crate) fn fmt_abs(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coeff::Rational(q) => {
                let q = q.abs();
                if q.denom().is_one() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            Coeff::Prime(x) => write!(f, "{}", x.symmetric().abs()),
        }
    }
}

impl fmt::Display for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_negative() {
            write!(f, "-")?;
        }
        self.fmt_abs(f)
    }
}

/// `gcd` of numerators over `lcm` of denominators; the scalar that makes a
/// rational coefficient list primitive and integral.
pub(crate) fn rational_content<'a>(coeffs: impl Iterator<Item = &'a BigRational>) -> BigRational {
    let mut g = BigInt::zero();
    let mut l = BigInt::one();
    for q in coeffs {
        g = g.gcd(q.numer());
        l = l.lcm(q.denom());
    }
    if g.is_zero() {
        BigRational::one()
    } else {
        BigRational::new(g, l)
    }
}
