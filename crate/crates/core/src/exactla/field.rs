//! Exact scalars: rationals with a machine-word fast path, and prime fields.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::Error;

/// The ground field of every object in a computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Field {
    /// The rationals.
    Rationals,
    /// The prime field with the given characteristic.
    Prime(u64),
}

impl Field {
    /// Builds a prime field, rejecting composite or tiny moduli.
    pub fn prime(p: u64) -> Result<Field, Error> {
        if !(2..(1 << 62)).contains(&p) || !is_prime(p) {
            return Err(Error::Input(format!("{p} is not a supported prime")));
        }
        Ok(Field::Prime(p))
    }

    pub fn zero(self) -> FieldElem {
        self.from_i64(0)
    }

    pub fn one(self) -> FieldElem {
        self.from_i64(1)
    }

    pub fn from_i64(self, n: i64) -> FieldElem {
        match self {
            Field::Rationals => FieldElem::Rat(Rational::from_i64(n)),
            Field::Prime(p) => FieldElem::Mod(Fp::new(n.rem_euclid(p as i64) as u64, p)),
        }
    }

    /// Parses `"p/q"`, `"k"`, or `"k mod p"` into this field.
    pub fn parse(self, text: &str) -> Result<FieldElem, Error> {
        let bad = || Error::Input(format!("cannot parse scalar {text:?}"));
        let text = text.trim();
        if let Some((value, modulus)) = text.split_once("mod") {
            let modulus: u64 = modulus.trim().parse().map_err(|_| bad())?;
            if self != Field::Prime(modulus) {
                return Err(Error::Input(format!(
                    "scalar {text:?} does not live in {self}"
                )));
            }
            let value: BigInt = value.trim().parse().map_err(|_| bad())?;
            return Ok(self.from_bigint(&value));
        }
        let q: BigRational = match text.split_once('/') {
            Some((n, d)) => {
                let n: BigInt = n.trim().parse().map_err(|_| bad())?;
                let d: BigInt = d.trim().parse().map_err(|_| bad())?;
                if d.is_zero() {
                    return Err(bad());
                }
                BigRational::new(n, d)
            }
            None => BigRational::from_integer(text.parse().map_err(|_| bad())?),
        };
        self.from_rational(&q)
    }

    fn from_bigint(self, n: &BigInt) -> FieldElem {
        match self {
            Field::Rationals => FieldElem::Rat(Rational::from_big(BigRational::from_integer(n.clone()))),
            Field::Prime(p) => {
                let r = n.mod_floor(&BigInt::from(p));
                FieldElem::Mod(Fp::new(r.to_u64().expect("reduced residue"), p))
            }
        }
    }

    /// Maps a rational into this field; fails when the denominator vanishes mod p.
    pub fn from_rational(self, q: &BigRational) -> Result<FieldElem, Error> {
        match self {
            Field::Rationals => Ok(FieldElem::Rat(Rational::from_big(q.clone()))),
            Field::Prime(p) => {
                let den = self.from_bigint(q.denom());
                if den.is_zero() {
                    return Err(Error::Input(format!(
                        "denominator of {q} vanishes in characteristic {p}"
                    )));
                }
                Ok(self.from_bigint(q.numer()).div(&den))
            }
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rationals => write!(f, "q"),
            Field::Prime(p) => write!(f, "fp:{p}"),
        }
    }
}

impl FromStr for Field {
    type Err = Error;
    fn from_str(s: &str) -> Result<Field, Error> {
        match s.trim() {
            "q" | "Q" => Ok(Field::Rationals),
            other => match other.strip_prefix("fp:") {
                Some(p) => Field::prime(
                    p.parse()
                        .map_err(|_| Error::Input(format!("bad field {other:?}")))?,
                ),
                None => Err(Error::Input(format!("bad field {other:?}"))),
            },
        }
    }
}

fn is_prime(p: u64) -> bool {
    if p < 4 {
        return p >= 2;
    }
    if p.is_multiple_of(2) {
        return false;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// A rational number kept in lowest terms with positive denominator.
///
/// Values that fit in machine words stay unboxed.
#[derive(Clone, Debug)]
pub enum Rational {
    Small(i64, i64),
    Big(BigRational),
}

impl Rational {
    pub fn from_i64(n: i64) -> Rational {
        Rational::Small(n, 1)
    }

    fn from_i128(num: i128, den: i128) -> Rational {
        debug_assert!(den != 0);
        let g = num.gcd(&den);
        let (mut n, mut d) = (num / g, den / g);
        if d < 0 {
            n = -n;
            d = -d;
        }
        match (i64::try_from(n), i64::try_from(d)) {
            (Ok(n), Ok(d)) => Rational::Small(n, d),
            _ => Rational::Big(BigRational::new(BigInt::from(n), BigInt::from(d))),
        }
    }

    pub fn from_big(q: BigRational) -> Rational {
        match (q.numer().to_i64(), q.denom().to_i64()) {
            (Some(n), Some(d)) => Rational::Small(n, d),
            _ => Rational::Big(q),
        }
    }

    pub fn to_big(&self) -> BigRational {
        match self {
            Rational::Small(n, d) => BigRational::new_raw(BigInt::from(*n), BigInt::from(*d)),
            Rational::Big(q) => q.clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Rational::Small(0, _))
    }

    fn add(&self, other: &Rational) -> Rational {
        if let (Rational::Small(a, b), Rational::Small(c, d)) = (self, other) {
            if *b == 1 && *d == 1 {
                if let Some(s) = a.checked_add(*c) {
                    return Rational::Small(s, 1);
                }
            }
            let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
            return Rational::from_i128(a * d + c * b, b * d);
        }
        Rational::from_big(self.to_big() + other.to_big())
    }

    fn mul(&self, other: &Rational) -> Rational {
        if let (Rational::Small(a, b), Rational::Small(c, d)) = (self, other) {
            if *b == 1 && *d == 1 {
                if let Some(s) = a.checked_mul(*c) {
                    return Rational::Small(s, 1);
                }
            }
            return Rational::from_i128(*a as i128 * *c as i128, *b as i128 * *d as i128);
        }
        Rational::from_big(self.to_big() * other.to_big())
    }

    fn neg(&self) -> Rational {
        match self {
            Rational::Small(n, d) if *n != i64::MIN => Rational::Small(-n, *d),
            _ => Rational::from_big(-self.to_big()),
        }
    }

    fn recip(&self) -> Rational {
        match self {
            Rational::Small(n, d) => Rational::from_i128(*d as i128, *n as i128),
            Rational::Big(q) => Rational::from_big(q.recip()),
        }
    }
}

impl PartialEq for Rational {
    fn eq(&self, other: &Rational) -> bool {
        match (self, other) {
            (Rational::Small(a, b), Rational::Small(c, d)) => a == c && b == d,
            (Rational::Big(p), Rational::Big(q)) => p == q,
            _ => false,
        }
    }
}

impl Eq for Rational {}

impl Hash for Rational {
    fn hash<H: Hasher>(&self, state: &mut H) {
        match self {
            Rational::Small(n, d) => (n, d).hash(state),
            Rational::Big(q) => q.hash(state),
        }
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rational::Small(n, 1) => write!(f, "{n}"),
            Rational::Small(n, d) => write!(f, "{n}/{d}"),
            Rational::Big(q) if q.denom().is_one() => write!(f, "{}", q.numer()),
            Rational::Big(q) => write!(f, "{}/{}", q.numer(), q.denom()),
        }
    }
}

/// An element of a prime field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Fp {
    value: u64,
    p: u64,
}

impl Fp {
    fn new(value: u64, p: u64) -> Fp {
        debug_assert!(value < p);
        Fp { value, p }
    }

    pub fn value(self) -> u64 {
        self.value
    }

    pub fn modulus(self) -> u64 {
        self.p
    }

    fn mul(self, other: Fp) -> Fp {
        Fp::new(((self.value as u128 * other.value as u128) % self.p as u128) as u64, self.p)
    }

    fn pow(self, mut e: u64) -> Fp {
        let mut base = self;
        let mut acc = Fp::new(1 % self.p, self.p);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(base);
            }
            base = base.mul(base);
            e >>= 1;
        }
        acc
    }
}

/// A scalar tagged with its field.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FieldElem {
    Rat(Rational),
    Mod(Fp),
}

impl FieldElem {
    pub fn field(&self) -> Field {
        match self {
            FieldElem::Rat(_) => Field::Rationals,
            FieldElem::Mod(x) => Field::Prime(x.p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            FieldElem::Rat(q) => q.is_zero(),
            FieldElem::Mod(x) => x.value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            FieldElem::Rat(q) => matches!(q, Rational::Small(1, 1)),
            FieldElem::Mod(x) => x.value == 1,
        }
    }

    /// Multiplicative inverse.
    ///
    /// # Panics
    /// Panics on zero.
    pub fn inv(&self) -> FieldElem {
        assert!(!self.is_zero(), "inverse of zero");
        match self {
            FieldElem::Rat(q) => FieldElem::Rat(q.recip()),
            FieldElem::Mod(x) => FieldElem::Mod(x.pow(x.p - 2)),
        }
    }

    /// The rational value, if this is a rational scalar.
    pub fn to_rational(&self) -> Option<BigRational> {
        match self {
            FieldElem::Rat(q) => Some(q.to_big()),
            FieldElem::Mod(_) => None,
        }
    }

    /// Canonical text form, parseable by [`Field::parse`].
    pub fn to_text(&self) -> String {
        self.to_string()
    }
}

fn mismatch(a: &FieldElem, b: &FieldElem) -> ! {
    panic!("field mismatch: {} vs {}", a.field(), b.field())
}

impl<'a> Add<&'a FieldElem> for &'a FieldElem {
    type Output = FieldElem;
    fn add(self, other: &FieldElem) -> FieldElem {
        match (self, other) {
            (FieldElem::Rat(a), FieldElem::Rat(b)) => FieldElem::Rat(a.add(b)),
            (FieldElem::Mod(a), FieldElem::Mod(b)) if a.p == b.p => {
                let s = a.value + b.value;
                FieldElem::Mod(Fp::new(if s >= a.p { s - a.p } else { s }, a.p))
            }
            _ => mismatch(self, other),
        }
    }
}

impl<'a> Mul<&'a FieldElem> for &'a FieldElem {
    type Output = FieldElem;
    fn mul(self, other: &FieldElem) -> FieldElem {
        match (self, other) {
            (FieldElem::Rat(a), FieldElem::Rat(b)) => FieldElem::Rat(a.mul(b)),
            (FieldElem::Mod(a), FieldElem::Mod(b)) if a.p == b.p => FieldElem::Mod(a.mul(*b)),
            _ => mismatch(self, other),
        }
    }
}

impl Neg for &FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        match self {
            FieldElem::Rat(a) => FieldElem::Rat(a.neg()),
            FieldElem::Mod(a) => FieldElem::Mod(Fp::new((a.p - a.value) % a.p, a.p)),
        }
    }
}

impl Neg for FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        -&self
    }
}

impl<'a> Sub<&'a FieldElem> for &'a FieldElem {
    type Output = FieldElem;
    fn sub(self, other: &FieldElem) -> FieldElem {
        self + &(-other)
    }
}

impl<'a> Div<&'a FieldElem> for &'a FieldElem {
    type Output = FieldElem;
    fn div(self, other: &FieldElem) -> FieldElem {
        self * &other.inv()
    }
}

impl FieldElem {
    fn div(&self, other: &FieldElem) -> FieldElem {
        <&FieldElem as Div>::div(self, other)
    }
}

impl Add for FieldElem {
    type Output = FieldElem;
    fn add(self, other: FieldElem) -> FieldElem {
        &self + &other
    }
}

impl Sub for FieldElem {
    type Output = FieldElem;
    fn sub(self, other: FieldElem) -> FieldElem {
        &self - &other
    }
}

impl Mul for FieldElem {
    type Output = FieldElem;
    fn mul(self, other: FieldElem) -> FieldElem {
        &self * &other
    }
}

impl AddAssign<&FieldElem> for FieldElem {
    fn add_assign(&mut self, other: &FieldElem) {
        *self = &*self + other;
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldElem::Rat(q) => write!(f, "{q}"),
            FieldElem::Mod(x) => write!(f, "{} mod {}", x.value, x.p),
        }
    }
}
