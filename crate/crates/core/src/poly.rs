//! Dense univariate polynomials and pointed rational functions.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};
use crate::integer;

/// A polynomial with coefficients in ascending powers of `x`.
///
/// The highest stored coefficient is nonzero; the zero polynomial stores
/// no coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    field: Field,
    coeffs: Vec<FieldElement>,
}

impl Polynomial {
    pub fn new(field: Field, coeffs: Vec<FieldElement>) -> Result<Self> {
        for c in &coeffs {
            field.ensure_same(c.field())?;
        }
        Ok(Self::from_trusted(field, coeffs))
    }

    fn from_trusted(field: Field, mut coeffs: Vec<FieldElement>) -> Self {
        while coeffs.last().is_some_and(FieldElement::is_zero) {
            coeffs.pop();
        }
        Polynomial { field, coeffs }
    }

    pub fn from_i64s(field: Field, coeffs: &[i64]) -> Self {
        Self::from_trusted(
            field,
            coeffs.iter().map(|&c| FieldElement::from_i64(field, c)).collect(),
        )
    }

    pub fn zero(field: Field) -> Self {
        Polynomial {
            field,
            coeffs: Vec::new(),
        }
    }

    pub fn one(field: Field) -> Self {
        Self::constant(FieldElement::one(field))
    }

    pub fn constant(c: FieldElement) -> Self {
        Self::from_trusted(c.field(), vec![c])
    }

    /// The polynomial `x`.
    pub fn x(field: Field) -> Self {
        Self::from_i64s(field, &[0, 1])
    }

    /// `x - r`.
    pub fn linear(r: &FieldElement) -> Self {
        let field = r.field();
        Self::from_trusted(field, vec![-r, FieldElement::one(field)])
    }

    /// `∏ (x - r)^e`.
    pub fn from_roots<'a>(roots: impl IntoIterator<Item = (&'a FieldElement, usize)>, field: Field) -> Self {
        roots.into_iter().fold(Self::one(field), |acc, (r, e)| {
            &acc * &Self::linear(r).pow(e)
        })
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    /// Coefficient of `x^i` (zero past the degree).
    pub fn coeff(&self, i: usize) -> FieldElement {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(|| FieldElement::zero(self.field))
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with `-1` for the zero polynomial.
    pub fn signed_degree(&self) -> isize {
        self.coeffs.len() as isize - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading_coefficient(&self) -> Option<&FieldElement> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coefficient().is_some_and(FieldElement::is_one)
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.field.ensure_same(other.field)?;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| &self.coeff(i) + &other.coeff(i)).collect();
        Ok(Self::from_trusted(self.field, coeffs))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.field.ensure_same(other.field)?;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| &self.coeff(i) - &other.coeff(i)).collect();
        Ok(Self::from_trusted(self.field, coeffs))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.field.ensure_same(other.field)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.field));
        }
        let mut out = vec![FieldElement::zero(self.field); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        Ok(Self::from_trusted(self.field, out))
    }

    pub fn scale(&self, c: &FieldElement) -> Self {
        Self::from_trusted(self.field, self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, e: usize) -> Self {
        (0..e).fold(Self::one(self.field), |acc, _| &acc * self)
    }

    /// Multiply by `x^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![FieldElement::zero(self.field); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self::from_trusted(self.field, coeffs)
    }

    /// Scale so the leading coefficient is 1.
    pub fn monic(&self) -> Self {
        match self.leading_coefficient() {
            Some(lc) => self.scale(&lc.inv().expect("leading coefficient is nonzero")),
            None => self.clone(),
        }
    }

    /// Euclidean division `self = q·divisor + r` with `deg r < deg divisor`.
    pub fn divrem(&self, divisor: &Self) -> Result<(Self, Self)> {
        self.field.ensure_same(divisor.field)?;
        let Some(dd) = divisor.degree() else {
            return Err(Error::domain("division by the zero polynomial"));
        };
        let lc_inv = divisor.coeffs[dd].inv()?;
        let mut rem = self.coeffs.clone();
        let Some(nd) = self.degree().filter(|&n| n >= dd) else {
            return Ok((Self::zero(self.field), self.clone()));
        };
        let mut quot = vec![FieldElement::zero(self.field); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let c = &rem[k + dd] * &lc_inv;
            if c.is_zero() {
                continue;
            }
            for (i, d) in divisor.coeffs.iter().enumerate() {
                rem[k + i] = &rem[k + i] - &(&c * d);
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        Ok((Self::from_trusted(self.field, quot), Self::from_trusted(self.field, rem)))
    }

    /// Exact quotient; fails if `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self> {
        let (q, r) = self.divrem(divisor)?;
        if !r.is_zero() {
            return Err(Error::domain(format!("{divisor} does not divide {self}")));
        }
        Ok(q)
    }

    pub fn rem(&self, divisor: &Self) -> Result<Self> {
        Ok(self.divrem(divisor)?.1)
    }

    /// Monic greatest common divisor (zero if both inputs are zero).
    pub fn gcd(&self, other: &Self) -> Result<Self> {
        self.field.ensure_same(other.field)?;
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            b = r;
        }
        Ok(a.monic())
    }

    /// `(g, s, t)` with `s·self + t·other = g`, `g` monic.
    pub fn extended_gcd(&self, other: &Self) -> Result<(Self, Self, Self)> {
        self.field.ensure_same(other.field)?;
        let field = self.field;
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Self::one(field), Self::zero(field));
        let (mut t0, mut t1) = (Self::zero(field), Self::one(field));
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1)?;
            let s = &s0 - &(&q * &s1);
            let t = &t0 - &(&q * &t1);
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
            t0 = std::mem::replace(&mut t1, t);
        }
        match r0.leading_coefficient().cloned() {
            Some(lc) => {
                let inv = lc.inv()?;
                Ok((r0.scale(&inv), s0.scale(&inv), t0.scale(&inv)))
            }
            None => Ok((r0, s0, t0)),
        }
    }

    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * &FieldElement::from_i64(self.field, i as i64))
            .collect();
        Self::from_trusted(self.field, coeffs)
    }

    pub fn evaluate(&self, at: &FieldElement) -> Result<FieldElement> {
        self.field.ensure_same(at.field())?;
        Ok(self
            .coeffs
            .iter()
            .rev()
            .fold(FieldElement::zero(self.field), |acc, c| &(&acc * at) + c))
    }

    /// `f(x + r)`.
    pub fn taylor_shift(&self, r: &FieldElement) -> Result<Self> {
        self.field.ensure_same(r.field())?;
        let shift = Self::from_trusted(self.field, vec![r.clone(), FieldElement::one(self.field)]);
        Ok(self
            .coeffs
            .iter()
            .rev()
            .fold(Self::zero(self.field), |acc, c| &(&acc * &shift) + &Self::constant(c.clone())))
    }

    /// Order of vanishing at `r`.
    pub fn multiplicity_at(&self, r: &FieldElement) -> Result<usize> {
        if self.is_zero() {
            return Err(Error::domain("multiplicity at a root of the zero polynomial"));
        }
        let shifted = self.taylor_shift(r)?;
        Ok(shifted.coeffs.iter().take_while(|c| c.is_zero()).count())
    }
}

macro_rules! poly_op {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                self.$checked(rhs).expect(concat!("Polynomial::", stringify!($method)))
            }
        }
    };
}

poly_op!(Add, add, checked_add);
poly_op!(Sub, sub, checked_sub);
poly_op!(Mul, mul, checked_mul);

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::from_trusted(self.field, self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let (negative, mag) = if c.is_negative() { (true, -c) } else { (false, c.clone()) };
            match (first, negative) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            first = false;
            let unit = mag.is_one();
            match i {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !unit {
                        write!(f, "{mag}*")?;
                    }
                    if i == 1 {
                        write!(f, "x")?;
                    } else {
                        write!(f, "x^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// A pointed rational function `f/g` normalized so `f` is monic.
///
/// Invariants: `gcd(f, g) = 1` and `deg f > deg g ≥ 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalFunction {
    numerator: Polynomial,
    denominator: Polynomial,
    leading_coefficient: FieldElement,
}

impl RationalFunction {
    pub fn numerator(&self) -> &Polynomial {
        &self.numerator
    }

    pub fn denominator(&self) -> &Polynomial {
        &self.denominator
    }

    /// Leading coefficient of the numerator before normalization.
    pub fn leading_coefficient(&self) -> &FieldElement {
        &self.leading_coefficient
    }

    pub fn field(&self) -> Field {
        self.numerator.field
    }

    /// `deg f`.
    pub fn degree(&self) -> usize {
        self.numerator.degree().expect("numerator is nonzero")
    }

    pub fn is_polynomial_map(&self) -> bool {
        self.denominator.is_constant()
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denominator.is_one() {
            write!(f, "{}", self.numerator)
        } else {
            write!(f, "({}) / ({})", self.numerator, self.denominator)
        }
    }
}

/// Divide `f` and `g` by the leading coefficient of `f` and check that
/// `f/g` is pointed and reduced.
pub fn normalize_pointed(f: &Polynomial, g: &Polynomial) -> Result<RationalFunction> {
    f.field.ensure_same(g.field)?;
    let lc = f
        .leading_coefficient()
        .cloned()
        .ok_or_else(|| Error::domain("numerator must be nonzero"))?;
    if f.signed_degree() <= g.signed_degree() {
        return Err(Error::NotPointed {
            numerator: f.signed_degree(),
            denominator: g.signed_degree(),
        });
    }
    let common = f.gcd(g)?;
    if !common.is_one() {
        return Err(Error::NotReduced(common.to_string()));
    }
    let inv = lc.inv()?;
    Ok(RationalFunction {
        numerator: f.scale(&inv),
        denominator: g.scale(&inv),
        leading_coefficient: lc,
    })
}

/// The unique `(u, v)` with `f·u + g·v = 1`, `deg u ≤ n-2`, `deg v ≤ n-1`.
pub fn bezout_pair(func: &RationalFunction) -> Result<(Polynomial, Polynomial)> {
    let (f, g) = (&func.numerator, &func.denominator);
    let (d, _, t) = f.extended_gcd(g)?;
    if !d.is_one() {
        return Err(Error::Internal(format!("gcd({f}, {g}) = {d} after normalization")));
    }
    let v = t.rem(f)?;
    let u = (&Polynomial::one(f.field) - &(g * &v)).div_exact(f)?;
    let n = func.degree() as isize;
    if u.signed_degree() > n - 2 || v.signed_degree() > n - 1 {
        return Err(Error::Internal(format!(
            "Bezout pair degrees ({}, {}) exceed bounds for degree {n}",
            u.signed_degree(),
            v.signed_degree()
        )));
    }
    Ok((u, v))
}

/// A root in the ground field with its multiplicity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootDatum {
    pub root: FieldElement,
    pub multiplicity: usize,
}

impl RootDatum {
    pub fn new(root: FieldElement, multiplicity: usize) -> Result<Self> {
        if multiplicity == 0 {
            return Err(Error::domain("root multiplicity must be positive"));
        }
        Ok(RootDatum { root, multiplicity })
    }
}

fn divisors(n: &BigInt) -> Result<Vec<BigInt>> {
    let mut divs = vec![BigInt::one()];
    for (p, e) in integer::factorize(n.magnitude())? {
        let p = BigInt::from(p);
        let mut next = Vec::with_capacity(divs.len() * (e as usize + 1));
        for d in &divs {
            let mut pk = BigInt::one();
            for _ in 0..=e {
                next.push(d * &pk);
                pk *= &p;
            }
        }
        divs = next;
    }
    Ok(divs)
}

fn rational_root_candidates(f: &Polynomial) -> Result<Vec<FieldElement>> {
    // primitive integer form
    let coeffs: Vec<&BigRational> = f
        .coeffs
        .iter()
        .map(|c| c.as_rational().expect("rational field"))
        .collect();
    let lcm = coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = coeffs.iter().map(|c| (*c * &lcm).to_integer()).collect();
    let a0 = ints.iter().find(|c| !c.is_zero()).expect("nonzero polynomial");
    let an = ints.last().expect("nonzero polynomial");
    let mut out = Vec::new();
    for p in divisors(a0)? {
        for q in divisors(an)? {
            if !p.gcd(&q).is_one() {
                continue;
            }
            for s in [p.clone(), -p.clone()] {
                out.push(FieldElement::from_rational(Field::Rationals, &BigRational::new(s, q.clone()))?);
            }
        }
    }
    Ok(out)
}

/// All roots of `f` in its field with multiplicities, in canonical order,
/// plus the rootless cofactor (which carries the leading coefficient).
pub fn rational_roots(f: &Polynomial) -> Result<(Vec<RootDatum>, Polynomial)> {
    if f.is_zero() {
        return Err(Error::domain("rational_roots of the zero polynomial"));
    }
    let field = f.field;
    let mut rest = f.clone();
    let mut roots = Vec::new();
    let zero = FieldElement::zero(field);
    let zero_mult = rest.coeffs.iter().take_while(|c| c.is_zero()).count();
    if zero_mult > 0 {
        rest = Polynomial::from_trusted(field, rest.coeffs[zero_mult..].to_vec());
        roots.push(RootDatum { root: zero.clone(), multiplicity: zero_mult });
    }
    let candidates: Vec<FieldElement> = match field {
        _ if rest.is_constant() => Vec::new(),
        Field::Rationals => rational_root_candidates(&rest)?,
        Field::Prime(p) => (1..p as i64).map(|a| FieldElement::from_i64(field, a)).collect(),
    };
    for r in candidates {
        if rest.is_constant() {
            break;
        }
        let lin = Polynomial::linear(&r);
        let mut mult = 0;
        loop {
            let (q, rem) = rest.divrem(&lin)?;
            if !rem.is_zero() {
                break;
            }
            rest = q;
            mult += 1;
        }
        if mult > 0 {
            roots.push(RootDatum { root: r, multiplicity: mult });
        }
    }
    roots.sort_by(|a, b| a.root.canonical_cmp(&b.root));
    Ok((roots, rest))
}

/// The polar coefficients `A_{r,m}, …, A_{r,1}` of `g/f` at a root `r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrincipalPart {
    pub center: FieldElement,
    /// `A_{r,m}` first, `A_{r,1}` last.
    pub coefficients: Vec<FieldElement>,
}

impl PrincipalPart {
    /// The pole order `m`.
    pub fn order(&self) -> usize {
        self.coefficients.len()
    }

    /// `A_{r,j}` for `1 ≤ j ≤ m`, zero outside that range.
    pub fn coefficient(&self, j: usize) -> FieldElement {
        let m = self.order();
        if j == 0 || j > m {
            FieldElement::zero(self.center.field())
        } else {
            self.coefficients[m - j].clone()
        }
    }
}

/// Principal part of `g/f` at a root `r` of `f`, by inverting the unit
/// part of `f(x + r)` as a truncated power series.
pub fn laurent_principal_part(func: &RationalFunction, r: &FieldElement) -> Result<PrincipalPart> {
    let field = func.field();
    let shifted_f = func.numerator.taylor_shift(r)?;
    let m = shifted_f.coeffs.iter().take_while(|c| c.is_zero()).count();
    if m == 0 {
        return Err(Error::domain(format!("{r} is not a root of {}", func.numerator)));
    }
    let unit: Vec<FieldElement> = shifted_f.coeffs[m..].to_vec();
    let u0_inv = unit[0].inv()?;
    let mut inverse: Vec<FieldElement> = Vec::with_capacity(m);
    inverse.push(u0_inv.clone());
    for k in 1..m {
        let mut acc = FieldElement::zero(field);
        for i in 1..=k.min(unit.len() - 1) {
            acc = &acc + &(&unit[i] * &inverse[k - i]);
        }
        inverse.push(-&(&acc * &u0_inv));
    }
    let shifted_g = func.denominator.taylor_shift(r)?;
    let coefficients = (0..m)
        .map(|k| {
            (0..=k).fold(FieldElement::zero(field), |acc, i| {
                &acc + &(&shifted_g.coeff(i) * &inverse[k - i])
            })
        })
        .collect();
    Ok(PrincipalPart {
        center: r.clone(),
        coefficients,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Field = Field::Rationals;

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_i64s(Q, c)
    }

    fn q(n: i64, d: i64) -> FieldElement {
        FieldElement::from_ratio(Q, n, d).unwrap()
    }

    #[test]
    fn core_operations() {
        assert_eq!(p(&[-1, 0, 1]).gcd(&p(&[-1, 1])).unwrap(), p(&[-1, 1]));
        let cube = p(&[0, 0, 0, 1]);
        assert_eq!(cube.derivative().evaluate(&q(2, 1)).unwrap(), q(12, 1));
        assert_eq!(p(&[0, 0, 1]).taylor_shift(&q(1, 1)).unwrap(), p(&[1, 2, 1]));
        let (quot, rem) = p(&[1, 0, 0, 1]).divrem(&p(&[1, 1])).unwrap();
        assert_eq!((quot, rem), (p(&[1, -1, 1]), Polynomial::zero(Q)));
        assert!(p(&[1]).divrem(&Polynomial::zero(Q)).is_err());
        let f7 = Polynomial::from_i64s(Field::Prime(7), &[1, 1]);
        assert!(p(&[1]).checked_add(&f7).is_err());
    }

    #[test]
    fn display_round_trips_through_text() {
        let f = Polynomial::new(Q, vec![q(-1, 2), q(0, 1), q(3, 1), q(1, 1)]).unwrap();
        assert_eq!(f.to_string(), "x^3 + 3*x^2 - 1/2");
        assert_eq!(p(&[0, -1]).to_string(), "-x");
    }

    #[test]
    fn normalize_examples() {
        let f = normalize_pointed(&p(&[0, 0, 3]), &p(&[3])).unwrap();
        assert_eq!(f.numerator(), &p(&[0, 0, 1]));
        assert_eq!(f.denominator(), &p(&[1]));
        assert_eq!(f.leading_coefficient(), &q(3, 1));

        let f = normalize_pointed(&p(&[-1, 0, 1]), &p(&[0, 1])).unwrap();
        assert_eq!(f.numerator(), &p(&[-1, 0, 1]));
        assert_eq!(f.leading_coefficient(), &q(1, 1));

        assert!(matches!(
            normalize_pointed(&p(&[1, 1]), &p(&[2, 1])),
            Err(Error::NotPointed { .. })
        ));
        assert!(matches!(
            normalize_pointed(&p(&[-1, 0, 1]), &p(&[-1, 1])),
            Err(Error::NotReduced(_))
        ));
        assert!(normalize_pointed(&Polynomial::zero(Q), &p(&[1])).is_err());
    }

    #[test]
    fn bezout_pair_examples() {
        let cases: [(&[i64], &[i64], &[i64], &[i64]); 3] = [
            (&[0, 1], &[1], &[], &[1]),
            (&[-1, 0, 1], &[0, 1], &[-1], &[0, 1]),
            (&[0, 0, 1], &[1], &[], &[1]),
        ];
        for (f, g, u, v) in cases {
            let func = normalize_pointed(&p(f), &p(g)).unwrap();
            assert_eq!(bezout_pair(&func).unwrap(), (p(u), p(v)));
        }
    }

    #[test]
    fn rational_root_examples() {
        let (roots, cof) = rational_roots(&p(&[0, 0, -1, 1])).unwrap();
        assert_eq!(
            roots,
            vec![RootDatum::new(q(0, 1), 2).unwrap(), RootDatum::new(q(1, 1), 1).unwrap()]
        );
        assert!(cof.is_one());

        let (roots, cof) = rational_roots(&p(&[1, 0, 1])).unwrap();
        assert!(roots.is_empty());
        assert_eq!(cof, p(&[1, 0, 1]));

        // (x - 1/2)(x^2 + 1)
        let f = &Polynomial::linear(&q(1, 2)) * &p(&[1, 0, 1]);
        let (roots, cof) = rational_roots(&f).unwrap();
        assert_eq!(roots, vec![RootDatum::new(q(1, 2), 1).unwrap()]);
        assert_eq!(cof, p(&[1, 0, 1]));
    }

    #[test]
    fn roots_over_prime_field() {
        let f7 = Field::Prime(7);
        // x^2 - 2 = (x - 3)(x - 4) mod 7, times x
        let f = Polynomial::from_i64s(f7, &[0, -2, 0, 1]);
        let (roots, cof) = rational_roots(&f).unwrap();
        let got: Vec<u64> = roots.iter().map(|r| r.root.as_residue().unwrap()).collect();
        assert_eq!(got, vec![0, 3, 4]);
        assert!(cof.is_one());
    }

    #[test]
    fn principal_part_examples() {
        let f = normalize_pointed(&p(&[0, 0, 1]), &p(&[1])).unwrap();
        let pp = laurent_principal_part(&f, &q(0, 1)).unwrap();
        assert_eq!(pp.coefficients, vec![q(1, 1), q(0, 1)]);

        let f = normalize_pointed(&p(&[-1, 0, 1]), &p(&[0, 1])).unwrap();
        let pp = laurent_principal_part(&f, &q(1, 1)).unwrap();
        assert_eq!(pp.coefficients, vec![q(1, 2)]);

        let f = normalize_pointed(&p(&[0, -1, 1]), &p(&[1])).unwrap();
        let pp = laurent_principal_part(&f, &q(0, 1)).unwrap();
        assert_eq!(pp.coefficients, vec![q(-1, 1)]);

        assert!(laurent_principal_part(&f, &q(2, 1)).is_err());
    }
}
