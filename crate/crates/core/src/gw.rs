//! The unstable Grothendieck–Witt group `GW^u(k) = GW(k) ×_{k×/k×²} k×`.
//!
//! Classes are pairs of a virtual diagonal form and an exact unit whose
//! square class is the discriminant of the form. Equality over 𝔽_p is
//! decided by rank and discriminant; over ℚ by rank, discriminant,
//! signature and Hasse invariants (Hasse–Minkowski), after Witt
//! cancellation turns the virtual comparison into one of genuine forms.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::One;

use crate::error::{Error, Result};
use crate::field::{self, Field, FieldElement, Place};
use crate::integer;
use crate::matrix::Matrix;

/// A virtual diagonal form `⟨a₁,…⟩ − ⟨b₁,…⟩`.
///
/// Over ℚ the form also carries a list of integers whose prime divisors
/// include every odd prime at which some piece of the form fails to be
/// unimodular. Hasse invariants only need checking at those primes and 2,
/// so huge diagonal entries produced by elimination never get factored.
#[derive(Clone, Debug)]
pub struct DiagonalForm {
    field: Field,
    positive: Vec<FieldElement>,
    negative: Vec<FieldElement>,
    support: Vec<BigUint>,
}

fn entry_support(entries: &[FieldElement]) -> Vec<BigUint> {
    entries
        .iter()
        .filter_map(FieldElement::as_rational)
        .flat_map(|q| [q.numer().magnitude().clone(), q.denom().magnitude().clone()])
        .filter(|n| n > &BigUint::one())
        .collect()
}

impl DiagonalForm {
    pub fn new(field: Field, positive: Vec<FieldElement>, negative: Vec<FieldElement>) -> Result<Self> {
        for a in positive.iter().chain(&negative) {
            field.ensure_same(a.field())?;
            if a.is_zero() {
                return Err(Error::domain("diagonal form entries must be nonzero"));
            }
        }
        let mut support = entry_support(&positive);
        support.extend(entry_support(&negative));
        Ok(DiagonalForm {
            field,
            positive,
            negative,
            support,
        })
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn positive_entries(&self) -> &[FieldElement] {
        &self.positive
    }

    pub fn negative_entries(&self) -> &[FieldElement] {
        &self.negative
    }

    pub fn is_genuine(&self) -> bool {
        self.negative.is_empty()
    }

    pub fn rank(&self) -> i64 {
        self.positive.len() as i64 - self.negative.len() as i64
    }

    /// `∏pos / ∏neg`, the exact discriminant before square-class reduction.
    pub fn determinant(&self) -> FieldElement {
        let one = FieldElement::one(self.field);
        let p = self.positive.iter().fold(one.clone(), |acc, a| &acc * a);
        let n = self.negative.iter().fold(one, |acc, a| &acc * a);
        &p / &n
    }

    /// Canonical square class of the discriminant.
    pub fn discriminant(&self) -> Result<FieldElement> {
        field::square_class_reduce(&self.determinant())
    }

    /// Signature over ℚ (`None` over 𝔽_p).
    pub fn signature(&self) -> Option<i64> {
        if !self.field.is_rationals() {
            return None;
        }
        let sig = |xs: &[FieldElement]| -> i64 { xs.iter().map(|a| if a.is_negative() { -1 } else { 1 }).sum() };
        Some(sig(&self.positive) - sig(&self.negative))
    }
}

impl PartialEq for DiagonalForm {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.positive == other.positive && self.negative == other.negative
    }
}

impl Eq for DiagonalForm {}

impl fmt::Display for DiagonalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |xs: &[FieldElement]| xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ");
        match (self.positive.is_empty(), self.negative.is_empty()) {
            (false, true) | (true, true) => write!(f, "<{}>", list(&self.positive)),
            (true, false) => write!(f, "-<{}>", list(&self.negative)),
            (false, false) => write!(f, "<{}> - <{}>", list(&self.positive), list(&self.negative)),
        }
    }
}

/// An element `(β, d)` of `GW^u(k)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnstableClass {
    form: DiagonalForm,
    unit: FieldElement,
}

impl UnstableClass {
    /// Checks the fiber condition: `unit` and `disc(form)` agree mod squares.
    pub fn new(form: DiagonalForm, unit: FieldElement) -> Result<Self> {
        form.field.ensure_same(unit.field())?;
        if unit.is_zero() {
            return Err(Error::domain("unit of an unstable class must be nonzero"));
        }
        if !field::is_square(&(&unit / &form.determinant()))? {
            return Err(Error::domain(format!(
                "unit {unit} is not the discriminant of {form} up to squares"
            )));
        }
        Ok(UnstableClass { form, unit })
    }

    /// The neutral element.
    pub fn zero(field: Field) -> Self {
        UnstableClass {
            form: DiagonalForm::new(field, Vec::new(), Vec::new()).expect("empty form"),
            unit: FieldElement::one(field),
        }
    }

    /// `H^u = ⟨1⟩^u + ⟨−1⟩^u`.
    pub fn hyperbolic(field: Field) -> Self {
        let one = FieldElement::one(field);
        gw_add(&gw_generator(&one).expect("1 ≠ 0"), &gw_generator(&-&one).expect("-1 ≠ 0"))
            .expect("same field")
    }

    pub fn form(&self) -> &DiagonalForm {
        &self.form
    }

    pub fn unit(&self) -> &FieldElement {
        &self.unit
    }

    pub fn field(&self) -> Field {
        self.form.field
    }

    pub fn rank(&self) -> i64 {
        self.form.rank()
    }
}

impl fmt::Display for UnstableClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.form, self.unit)
    }
}

/// A symmetric nondegenerate matrix, with its determinant cached.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GramMatrix {
    matrix: Matrix,
    determinant: FieldElement,
}

impl GramMatrix {
    pub fn new(matrix: Matrix) -> Result<Self> {
        if !matrix.is_symmetric() {
            return Err(Error::domain("Gram matrix must be symmetric"));
        }
        let determinant = matrix.determinant()?;
        if determinant.is_zero() {
            return Err(Error::domain("Gram matrix must be nondegenerate"));
        }
        Ok(GramMatrix { matrix, determinant })
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn determinant(&self) -> &FieldElement {
        &self.determinant
    }

    pub fn dimension(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn field(&self) -> Field {
        self.matrix.field()
    }

    /// `Sᵀ·M·S`.
    pub fn congruent(&self, s: &Matrix) -> Result<Self> {
        Self::new(s.transpose().mul(&self.matrix)?.mul(s)?)
    }
}

/// `⟨a⟩^u = (⟨a⟩, a)`.
pub fn gw_generator(a: &FieldElement) -> Result<UnstableClass> {
    if a.is_zero() {
        return Err(Error::domain("generator <0> is not allowed"));
    }
    let form = DiagonalForm::new(a.field(), vec![a.clone()], Vec::new())?;
    Ok(UnstableClass { form, unit: a.clone() })
}

pub fn gw_add(a: &UnstableClass, b: &UnstableClass) -> Result<UnstableClass> {
    a.field().ensure_same(b.field())?;
    let cat = |x: &[FieldElement], y: &[FieldElement]| [x, y].concat();
    let form = DiagonalForm {
        field: a.field(),
        positive: cat(&a.form.positive, &b.form.positive),
        negative: cat(&a.form.negative, &b.form.negative),
        support: cat_support(&a.form.support, &b.form.support),
    };
    Ok(UnstableClass {
        form,
        unit: &a.unit * &b.unit,
    })
}

fn cat_support(a: &[BigUint], b: &[BigUint]) -> Vec<BigUint> {
    let mut s = [a, b].concat();
    s.sort();
    s.dedup();
    s
}

pub fn gw_neg(a: &UnstableClass) -> UnstableClass {
    UnstableClass {
        form: DiagonalForm {
            field: a.field(),
            positive: a.form.negative.clone(),
            negative: a.form.positive.clone(),
            support: a.form.support.clone(),
        },
        unit: a.unit.inv().expect("unit is nonzero"),
    }
}

pub fn gw_sub(a: &UnstableClass, b: &UnstableClass) -> Result<UnstableClass> {
    gw_add(a, &gw_neg(b))
}

fn integer_class(a: &FieldElement) -> BigInt {
    let q = a.as_rational().expect("rational entry");
    q.numer() * q.denom()
}

fn hasse_of(entries: &[BigInt], v: &Place) -> i8 {
    let mut c = 1;
    for (i, a) in entries.iter().enumerate() {
        for b in &entries[i + 1..] {
            c *= field::hilbert_integers(a, b, v);
        }
    }
    c
}

/// `∏_{i<j} (a_i, a_j)_v` for a genuine form over ℚ.
pub fn hasse_invariant(form: &DiagonalForm, v: &Place) -> Result<i8> {
    if !form.field.is_rationals() {
        return Err(Error::domain("hasse_invariant is defined over Q only"));
    }
    if !form.is_genuine() {
        return Err(Error::domain("hasse_invariant needs a genuine form; cancel virtual entries first"));
    }
    let ints: Vec<BigInt> = form.positive.iter().map(integer_class).collect();
    Ok(hasse_of(&ints, v))
}

/// Decide equality in `GW^u(k)`.
pub fn gw_equal(a: &UnstableClass, b: &UnstableClass) -> Result<bool> {
    a.field().ensure_same(b.field())?;
    if a.unit != b.unit {
        return Ok(false);
    }
    // a.pos - a.neg = b.pos - b.neg  ⟺  a.pos ⊕ b.neg ≅ b.pos ⊕ a.neg
    let left: Vec<&FieldElement> = a.form.positive.iter().chain(&b.form.negative).collect();
    let right: Vec<&FieldElement> = b.form.positive.iter().chain(&a.form.negative).collect();
    if left.len() != right.len() {
        return Ok(false);
    }
    if left.is_empty() {
        return Ok(true);
    }
    let field = a.field();
    let prod = |xs: &[&FieldElement]| xs.iter().fold(FieldElement::one(field), |acc, x| &acc * *x);
    if !field::is_square(&(&prod(&left) / &prod(&right)))? {
        return Ok(false);
    }
    if !field.is_rationals() {
        return Ok(true);
    }
    let negatives = |xs: &[&FieldElement]| xs.iter().filter(|x| x.is_negative()).count();
    if negatives(&left) != negatives(&right) {
        return Ok(false);
    }
    let li: Vec<BigInt> = left.iter().map(|x| integer_class(x)).collect();
    let ri: Vec<BigInt> = right.iter().map(|x| integer_class(x)).collect();
    let two = BigUint::from(2u32);
    let mut primes = integer::prime_support(&cat_support(&a.form.support, &b.form.support))?;
    primes.retain(|p| p != &two);
    primes.insert(0, two);
    for p in primes {
        let v = Place::Finite(p);
        if hasse_of(&li, &v) != hasse_of(&ri, &v) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Diagonalize a Gram matrix by symmetric elimination; the unit is the
/// exact determinant of the untouched matrix.
pub fn gram_to_class(m: &GramMatrix) -> Result<UnstableClass> {
    let field = m.field();
    let mut a = m.matrix().to_rows();
    let mut alive: Vec<usize> = (0..a.len()).collect();
    let mut diagonal = Vec::with_capacity(a.len());
    while !alive.is_empty() {
        let pivot = alive
            .iter()
            .copied()
            .filter(|&i| !a[i][i].is_zero())
            .min_by_key(|&i| a[i][i].height());
        let k = match pivot {
            Some(k) => k,
            None => {
                let (i, j) = alive
                    .iter()
                    .flat_map(|&i| alive.iter().map(move |&j| (i, j)))
                    .find(|&(i, j)| !a[i][j].is_zero())
                    .ok_or_else(|| Error::Internal("degenerate block during elimination".into()))?;
                // row_i += row_j, col_i += col_j
                for &t in &alive {
                    a[i][t] = &a[i][t] + &a[j][t];
                }
                for &t in &alive {
                    a[t][i] = &a[t][i] + &a[t][j];
                }
                i
            }
        };
        let d = a[k][k].clone();
        let d_inv = d.inv()?;
        alive.retain(|&i| i != k);
        for &i in &alive {
            if a[i][k].is_zero() {
                continue;
            }
            let factor = &a[i][k] * &d_inv;
            for &j in &alive {
                a[i][j] = &a[i][j] - &(&factor * &a[k][j]);
            }
        }
        diagonal.push(d);
    }
    let det = m.determinant().clone();
    let mut support = Vec::new();
    if let Some(q) = det.as_rational() {
        let entry_denoms = m
            .matrix()
            .to_rows()
            .iter()
            .flatten()
            .fold(BigInt::one(), |acc, x| acc.lcm(x.as_rational().expect("rational").denom()));
        support = [q.numer().magnitude().clone(), q.denom().magnitude().clone(), entry_denoms.magnitude().clone()]
            .into_iter()
            .filter(|n| n > &BigUint::one())
            .collect();
        support.sort();
        support.dedup();
    }
    let form = DiagonalForm {
        field,
        positive: diagonal,
        negative: Vec::new(),
        support,
    };
    UnstableClass::new(form, det)
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Field = Field::Rationals;

    fn q(n: i64, d: i64) -> FieldElement {
        FieldElement::from_ratio(Q, n, d).unwrap()
    }

    fn gen(n: i64, d: i64) -> UnstableClass {
        gw_generator(&q(n, d)).unwrap()
    }

    fn class(pos: &[i64], unit: i64) -> UnstableClass {
        let form = DiagonalForm::new(Q, pos.iter().map(|&a| q(a, 1)).collect(), vec![]).unwrap();
        UnstableClass::new(form, q(unit, 1)).unwrap()
    }

    #[test]
    fn generators_and_group_law() {
        assert_eq!(gen(1, 2).unit(), &q(1, 2));
        let s = gw_add(&gen(2, 1), &gen(3, 1)).unwrap();
        assert_eq!(s.unit(), &q(6, 1));
        assert_eq!(s.form().positive_entries(), &[q(2, 1), q(3, 1)]);
        let n = gw_neg(&gen(2, 1));
        assert_eq!(n.unit(), &q(1, 2));
        assert_eq!(n.rank(), -1);
        assert!(gw_generator(&q(0, 1)).is_err());
        assert!(gw_add(&gen(1, 1), &gw_generator(&FieldElement::one(Field::Prime(3))).unwrap()).is_err());
    }

    #[test]
    fn fiber_condition_is_enforced() {
        let form = DiagonalForm::new(Q, vec![q(2, 1)], vec![]).unwrap();
        assert!(UnstableClass::new(form.clone(), q(1, 1)).is_err());
        assert!(UnstableClass::new(form, q(8, 1)).is_ok());
    }

    #[test]
    fn hasse_examples() {
        let two = Place::finite(2u32).unwrap();
        let f = |xs: &[i64]| DiagonalForm::new(Q, xs.iter().map(|&a| q(a, 1)).collect(), vec![]).unwrap();
        assert_eq!(hasse_invariant(&f(&[1, 1]), &Place::Real).unwrap(), 1);
        assert_eq!(hasse_invariant(&f(&[2, 2]), &two).unwrap(), 1);
        assert_eq!(hasse_invariant(&f(&[-1, -1]), &Place::Real).unwrap(), -1);
        let virt = DiagonalForm::new(Q, vec![q(1, 1)], vec![q(1, 1)]).unwrap();
        assert!(hasse_invariant(&virt, &Place::Real).is_err());
    }

    #[test]
    fn equality_examples() {
        assert!(gw_equal(&class(&[2, 2], 1), &class(&[1, 1], 1)).unwrap());
        assert!(!gw_equal(&gen(1, 1), &gen(2, 1)).unwrap());
        // same rank, disc, signature; differ at 3
        assert!(!gw_equal(&class(&[1, 1], 9), &class(&[3, 3], 9)).unwrap());
        assert!(gw_equal(&class(&[1, 1], 4), &class(&[2, 2], 4)).unwrap());
        // <1,-1> virtual minus itself is zero
        let h = UnstableClass::hyperbolic(Q);
        assert!(gw_equal(&gw_sub(&h, &h).unwrap(), &UnstableClass::zero(Q)).unwrap());
    }

    #[test]
    fn presentation_relations() {
        for (a, b) in [(3, 5), (-2, 7), (1, 1), (-6, 2)] {
            let (a, b) = (q(a, 1), q(b, 1));
            let g = |x: &FieldElement| gw_generator(x).unwrap();
            let lhs = g(&(&a * &(&b * &b)));
            let rhs = gw_sub(&gw_add(&g(&a), &g(&b)).unwrap(), &g(&b.inv().unwrap())).unwrap();
            assert!(gw_equal(&lhs, &rhs).unwrap());
            let s = &a + &b;
            if !s.is_zero() {
                let lhs = gw_add(&g(&a), &g(&b)).unwrap();
                let rhs = gw_add(&g(&s.inv().unwrap()), &g(&(&(&a * &b) * &s))).unwrap();
                assert!(gw_equal(&lhs, &rhs).unwrap());
            }
            let lhs = gw_add(&g(&a.inv().unwrap()), &g(&-&a)).unwrap();
            assert!(gw_equal(&lhs, &UnstableClass::hyperbolic(Q)).unwrap());
        }
    }

    #[test]
    fn gram_examples() {
        let m = GramMatrix::new(Matrix::from_i64_rows(Q, &[&[0, 1], &[1, 0]]).unwrap()).unwrap();
        let c = gram_to_class(&m).unwrap();
        assert_eq!(c.form().positive_entries(), &[q(2, 1), q(-1, 2)]);
        assert_eq!(c.unit(), &q(-1, 1));
        assert!(gw_equal(&c, &UnstableClass::hyperbolic(Q)).unwrap());

        let m = GramMatrix::new(Matrix::from_rows(Q, vec![vec![q(1, 2)]]).unwrap()).unwrap();
        assert!(gw_equal(&gram_to_class(&m).unwrap(), &gen(1, 2)).unwrap());

        assert!(GramMatrix::new(Matrix::from_i64_rows(Q, &[&[0, 1], &[2, 0]]).unwrap()).is_err());
        assert!(GramMatrix::new(Matrix::from_i64_rows(Q, &[&[1, 1], &[1, 1]]).unwrap()).is_err());
    }

    #[test]
    fn equality_over_prime_field() {
        let f5 = Field::Prime(5);
        let g = |a: i64| gw_generator(&FieldElement::from_i64(f5, a)).unwrap();
        // <1> + <1> vs <2> + <3>: same rank, disc 1 vs 6 = 1; units 1 vs 6 = 1
        assert!(gw_equal(&gw_add(&g(1), &g(1)).unwrap(), &gw_add(&g(2), &g(3)).unwrap()).unwrap());
        assert!(!gw_equal(&g(1), &g(4)).unwrap());
    }
}
