//! Exact scalars over ℚ and 𝔽_p, square classes, and the local symbols
//! (Legendre, Hilbert) used to decide isometry of rational forms.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::integer::{self, is_prime_u64, pow_mod_u64};

/// The ground field: ℚ or a prime field of odd characteristic.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Field {
    Rationals,
    Prime(u64),
}

impl Field {
    /// 𝔽_p for an odd prime `p`. Characteristic 2 is rejected.
    pub fn prime(p: u64) -> Result<Self> {
        if p == 2 {
            return Err(Error::domain("characteristic 2 is not supported"));
        }
        if !is_prime_u64(p) {
            return Err(Error::domain(format!("{p} is not an odd prime")));
        }
        Ok(Field::Prime(p))
    }

    pub fn modulus(self) -> Option<u64> {
        match self {
            Field::Rationals => None,
            Field::Prime(p) => Some(p),
        }
    }

    pub fn is_rationals(self) -> bool {
        matches!(self, Field::Rationals)
    }

    pub(crate) fn ensure_same(self, other: Field) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::domain(format!("field mismatch: {self} vs {other}")))
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rationals => write!(f, "Q"),
            Field::Prime(p) => write!(f, "Fp:{p}"),
        }
    }
}

impl FromStr for Field {
    type Err = Error;

    /// Accepts `Q` or `Fp:<prime>`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "Q" {
            return Ok(Field::Rationals);
        }
        match s.strip_prefix("Fp:").or_else(|| s.strip_prefix("F:")) {
            Some(p) => {
                let p: u64 = p
                    .trim()
                    .parse()
                    .map_err(|_| Error::domain(format!("bad modulus in field spec {s:?}")))?;
                Field::prime(p)
            }
            None => Err(Error::domain(format!(
                "unknown field {s:?}; expected Q or Fp:<prime>"
            ))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum Repr {
    Rational(BigRational),
    Residue { value: u64, modulus: u64 },
}

/// An exact element of ℚ or 𝔽_p.
///
/// Rationals are always in lowest terms with positive denominator and
/// residues are reduced. Operators panic when the operands live in
/// different fields; the `checked_*` methods report a [`Error::Domain`]
/// instead.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FieldElement {
    repr: Repr,
}

impl FieldElement {
    pub fn zero(field: Field) -> Self {
        Self::from_i64(field, 0)
    }

    pub fn one(field: Field) -> Self {
        Self::from_i64(field, 1)
    }

    pub fn from_i64(field: Field, n: i64) -> Self {
        match field {
            Field::Rationals => Self::rational(BigRational::from_integer(n.into())),
            Field::Prime(p) => Self::residue(n.rem_euclid(p as i64) as u64, p),
        }
    }

    pub fn from_bigint(field: Field, n: &BigInt) -> Self {
        match field {
            Field::Rationals => Self::rational(BigRational::from_integer(n.clone())),
            Field::Prime(p) => Self::residue(reduce_bigint(n, p), p),
        }
    }

    /// Map a rational number into `field`; fails over 𝔽_p when `p` divides
    /// the denominator.
    pub fn from_rational(field: Field, q: &BigRational) -> Result<Self> {
        match field {
            Field::Rationals => Ok(Self::rational(q.clone())),
            Field::Prime(p) => {
                let num = reduce_bigint(q.numer(), p);
                let den = reduce_bigint(q.denom(), p);
                if den == 0 {
                    return Err(Error::domain(format!(
                        "{q} has a denominator divisible by {p}"
                    )));
                }
                let inv = pow_mod_u64(den, p - 2, p);
                Ok(Self::residue(mul_mod(num, inv, p), p))
            }
        }
    }

    pub fn from_ratio(field: Field, num: i64, den: i64) -> Result<Self> {
        if den == 0 {
            return Err(Error::domain("zero denominator"));
        }
        Self::from_rational(field, &BigRational::new(num.into(), den.into()))
    }

    fn rational(q: BigRational) -> Self {
        FieldElement {
            repr: Repr::Rational(q),
        }
    }

    fn residue(value: u64, modulus: u64) -> Self {
        FieldElement {
            repr: Repr::Residue { value, modulus },
        }
    }

    /// Parse `n`, `-n`, or `p/q` into `field`.
    pub fn parse(field: Field, text: &str) -> Result<Self> {
        let text = text.trim();
        let bad = || Error::domain(format!("cannot parse scalar {text:?}"));
        let (num, den) = match text.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (text, "1"),
        };
        let num: BigInt = num.parse().map_err(|_| bad())?;
        let den: BigInt = den.parse().map_err(|_| bad())?;
        if den.is_zero() {
            return Err(Error::domain(format!("zero denominator in {text:?}")));
        }
        Self::from_rational(field, &BigRational::new(num, den))
    }

    pub fn field(&self) -> Field {
        match self.repr {
            Repr::Rational(_) => Field::Rationals,
            Repr::Residue { modulus, .. } => Field::Prime(modulus),
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match &self.repr {
            Repr::Rational(q) => Some(q),
            Repr::Residue { .. } => None,
        }
    }

    pub fn as_residue(&self) -> Option<u64> {
        match self.repr {
            Repr::Rational(_) => None,
            Repr::Residue { value, .. } => Some(value),
        }
    }

    pub fn is_zero(&self) -> bool {
        match &self.repr {
            Repr::Rational(q) => q.is_zero(),
            Repr::Residue { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match &self.repr {
            Repr::Rational(q) => q.is_one(),
            Repr::Residue { value, .. } => *value == 1,
        }
    }

    /// Positive (ℚ only); residues are never positive or negative.
    pub fn is_negative(&self) -> bool {
        matches!(&self.repr, Repr::Rational(q) if q.is_negative())
    }

    fn binary(
        &self,
        other: &Self,
        rat: impl FnOnce(&BigRational, &BigRational) -> BigRational,
        res: impl FnOnce(u64, u64, u64) -> u64,
    ) -> Result<Self> {
        match (&self.repr, &other.repr) {
            (Repr::Rational(a), Repr::Rational(b)) => Ok(Self::rational(rat(a, b))),
            (
                Repr::Residue { value: a, modulus: p },
                Repr::Residue { value: b, modulus: q },
            ) if p == q => Ok(Self::residue(res(*a, *b, *p), *p)),
            _ => Err(Error::domain(format!(
                "field mismatch: {} vs {}",
                self.field(),
                other.field()
            ))),
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.binary(other, |a, b| a + b, |a, b, p| ((a as u128 + b as u128) % p as u128) as u64)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.binary(other, |a, b| a - b, |a, b, p| ((a as u128 + p as u128 - b as u128) % p as u128) as u64)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.binary(other, |a, b| a * b, mul_mod)
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        let inv = other.inv()?;
        self.checked_mul(&inv)
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::domain("division by zero"));
        }
        Ok(match &self.repr {
            Repr::Rational(q) => Self::rational(q.recip()),
            Repr::Residue { value, modulus } => {
                Self::residue(pow_mod_u64(*value, modulus - 2, *modulus), *modulus)
            }
        })
    }

    /// Integer power; negative exponents invert.
    pub fn pow(&self, exp: i64) -> Result<Self> {
        let base = if exp < 0 { self.inv()? } else { self.clone() };
        let mut e = exp.unsigned_abs();
        let mut acc = Self::one(self.field());
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &sq;
            }
            e >>= 1;
            if e > 0 {
                sq = &sq * &sq;
            }
        }
        Ok(acc)
    }

    /// Bit size of numerator plus denominator; a rough cost measure used to
    /// pick pivots.
    pub fn height(&self) -> u64 {
        match &self.repr {
            Repr::Rational(q) => q.numer().bits() + q.denom().bits(),
            Repr::Residue { .. } => 0,
        }
    }

    /// Canonical order: `(numerator, denominator)` lexicographic over ℚ,
    /// ascending residue over 𝔽_p.
    pub fn canonical_cmp(&self, other: &Self) -> Ordering {
        match (&self.repr, &other.repr) {
            (Repr::Rational(a), Repr::Rational(b)) => a
                .numer()
                .cmp(b.numer())
                .then_with(|| a.denom().cmp(b.denom())),
            (Repr::Residue { value: a, .. }, Repr::Residue { value: b, .. }) => a.cmp(b),
            (Repr::Rational(_), _) => Ordering::Less,
            (_, Repr::Rational(_)) => Ordering::Greater,
        }
    }
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn reduce_bigint(n: &BigInt, p: u64) -> u64 {
    n.mod_floor(&BigInt::from(p)).to_u64().expect("reduced residue fits in u64")
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.repr {
            Repr::Rational(q) => write!(f, "{q}"),
            Repr::Residue { value, .. } => write!(f, "{value}"),
        }
    }
}

macro_rules! forward_op {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&FieldElement> for &FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: &FieldElement) -> FieldElement {
                self.$checked(rhs).expect(concat!("FieldElement::", stringify!($method)))
            }
        }
        impl $trait<FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: FieldElement) -> FieldElement {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_op!(Add, add, checked_add);
forward_op!(Sub, sub, checked_sub);
forward_op!(Mul, mul, checked_mul);
forward_op!(Div, div, checked_div);

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        match &self.repr {
            Repr::Rational(q) => FieldElement::rational(-q),
            Repr::Residue { value, modulus } => {
                FieldElement::residue((modulus - value) % modulus, *modulus)
            }
        }
    }
}

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        -&self
    }
}

/// A place of ℚ: the real place or a finite prime (2 or odd).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Place {
    Real,
    Finite(BigUint),
}

impl Place {
    /// The place at the (probable) prime `p`.
    pub fn finite(p: impl Into<BigUint>) -> Result<Self> {
        let p = p.into();
        if !integer::is_probable_prime(&p) {
            return Err(Error::domain(format!("{p} is not prime")));
        }
        Ok(Place::Finite(p))
    }
}

impl fmt::Display for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Place::Real => write!(f, "inf"),
            Place::Finite(p) => write!(f, "{p}"),
        }
    }
}

fn nonzero(a: &FieldElement, what: &str) -> Result<()> {
    if a.is_zero() {
        Err(Error::domain(format!("{what} requires a nonzero argument")))
    } else {
        Ok(())
    }
}

/// Integer with the same rational square class as `q` (`num·den`).
fn square_class_integer(q: &BigRational) -> BigInt {
    q.numer() * q.denom()
}

fn least_nonresidue(p: u64) -> u64 {
    (2..p)
        .find(|&a| pow_mod_u64(a, (p - 1) / 2, p) == p - 1)
        .expect("odd prime has a nonresidue")
}

/// Canonical representative of `a·(k×)²`: the signed squarefree integer over
/// ℚ; over 𝔽_p, 1 for residues and the least nonresidue otherwise.
pub fn square_class_reduce(a: &FieldElement) -> Result<FieldElement> {
    nonzero(a, "square_class_reduce")?;
    match &a.repr {
        Repr::Rational(q) => {
            let n = square_class_integer(q);
            let core = integer::squarefree_part(n.magnitude())?;
            let signed = BigInt::from_biguint(n.sign(), core);
            Ok(FieldElement::from_bigint(Field::Rationals, &signed))
        }
        Repr::Residue { value, modulus } => {
            let p = *modulus;
            let rep = if pow_mod_u64(*value, (p - 1) / 2, p) == 1 {
                1
            } else {
                least_nonresidue(p)
            };
            Ok(FieldElement::residue(rep, p))
        }
    }
}

/// Whether nonzero `a` is a square in its field.
pub fn is_square(a: &FieldElement) -> Result<bool> {
    nonzero(a, "is_square")?;
    Ok(match &a.repr {
        Repr::Rational(q) => {
            q.is_positive()
                && integer::exact_sqrt(q.numer().magnitude()).is_some()
                && integer::exact_sqrt(q.denom().magnitude()).is_some()
        }
        Repr::Residue { value, modulus } => pow_mod_u64(*value, (modulus - 1) / 2, *modulus) == 1,
    })
}

/// Legendre symbol `(a/p)` for an odd prime `p`.
pub fn legendre_symbol(a: &BigInt, p: &BigUint) -> Result<i8> {
    if p.is_even() || !integer::is_probable_prime(p) {
        return Err(Error::domain(format!("{p} is not an odd prime")));
    }
    Ok(legendre_unchecked(a, p))
}

fn legendre_unchecked(a: &BigInt, p: &BigUint) -> i8 {
    let p_int = BigInt::from_biguint(Sign::Plus, p.clone());
    let r = a.mod_floor(&p_int).to_biguint().expect("nonnegative");
    if r.is_zero() {
        return 0;
    }
    let e = (p - 1u32) >> 1;
    if r.modpow(&e, p).is_one() {
        1
    } else {
        -1
    }
}

/// Hilbert symbol `(a, b)_v` of nonzero rationals at the place `v`.
pub fn hilbert_symbol(a: &FieldElement, b: &FieldElement, v: &Place) -> Result<i8> {
    nonzero(a, "hilbert_symbol")?;
    nonzero(b, "hilbert_symbol")?;
    let (Some(a), Some(b)) = (a.as_rational(), b.as_rational()) else {
        return Err(Error::domain("hilbert_symbol is defined for rationals only"));
    };
    Ok(hilbert_integers(
        &square_class_integer(a),
        &square_class_integer(b),
        v,
    ))
}

/// Hilbert symbol of nonzero integers.
pub(crate) fn hilbert_integers(a: &BigInt, b: &BigInt, v: &Place) -> i8 {
    match v {
        Place::Real => {
            if a.is_negative() && b.is_negative() {
                -1
            } else {
                1
            }
        }
        Place::Finite(p) => {
            let (alpha, u) = integer::split_valuation(a, p);
            let (beta, w) = integer::split_valuation(b, p);
            if p == &BigUint::from(2u32) {
                let eps = |x: &BigInt| -> u32 { (x.mod_floor(&BigInt::from(4)) == BigInt::from(3)) as u32 };
                let omega = |x: &BigInt| -> u32 {
                    let r = x.mod_floor(&BigInt::from(8));
                    (r == BigInt::from(3) || r == BigInt::from(5)) as u32
                };
                let exp = eps(&u) * eps(&w) + alpha * omega(&w) + beta * omega(&u);
                if exp % 2 == 0 {
                    1
                } else {
                    -1
                }
            } else {
                let p_mod_4_is_3 = (p % 4u32) == BigUint::from(3u32);
                let mut s: i8 = if p_mod_4_is_3 && (alpha * beta) % 2 == 1 { -1 } else { 1 };
                if beta % 2 == 1 {
                    s *= legendre_unchecked(&u, p);
                }
                if alpha % 2 == 1 {
                    s *= legendre_unchecked(&w, p);
                }
                s
            }
        }
    }
}
