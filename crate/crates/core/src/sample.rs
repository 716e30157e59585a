//! Seeded random instances for property suites and benchmarks.
//!
//! Rational scalars have numerators and denominators in `[−9, 9]`, which
//! keeps intermediate growth small at desk scale.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::field::{Field, FieldElement};
use crate::poly::{normalize_pointed, Polynomial, RationalFunction, RootDatum};

pub const HEIGHT_BOUND: i64 = 9;

pub fn element<R: Rng + ?Sized>(rng: &mut R, field: Field) -> FieldElement {
    match field {
        Field::Rationals => {
            let n = rng.gen_range(-HEIGHT_BOUND..=HEIGHT_BOUND);
            let d = rng.gen_range(1..=HEIGHT_BOUND);
            FieldElement::from_ratio(field, n, d).expect("nonzero denominator")
        }
        Field::Prime(p) => FieldElement::from_i64(field, rng.gen_range(0..p) as i64),
    }
}

pub fn nonzero_element<R: Rng + ?Sized>(rng: &mut R, field: Field) -> FieldElement {
    loop {
        let a = element(rng, field);
        if !a.is_zero() {
            return a;
        }
    }
}

/// `count` pairwise distinct elements (fewer if the field is too small).
pub fn distinct_elements<R: Rng + ?Sized>(rng: &mut R, field: Field, count: usize) -> Vec<FieldElement> {
    if let Field::Prime(p) = field {
        let mut all: Vec<i64> = (0..p as i64).collect();
        all.shuffle(rng);
        return all
            .into_iter()
            .take(count)
            .map(|a| FieldElement::from_i64(field, a))
            .collect();
    }
    let mut out: Vec<FieldElement> = Vec::with_capacity(count);
    while out.len() < count {
        let a = element(rng, field);
        if !out.contains(&a) {
            out.push(a);
        }
    }
    out
}

/// Random polynomial of exact degree `degree`.
pub fn polynomial<R: Rng + ?Sized>(rng: &mut R, field: Field, degree: usize) -> Polynomial {
    let mut coeffs: Vec<FieldElement> = (0..degree).map(|_| element(rng, field)).collect();
    coeffs.push(nonzero_element(rng, field));
    Polynomial::new(field, coeffs).expect("same field")
}

/// Distinct roots with multiplicities: at most `max_distinct` roots, each
/// multiplicity at most `max_multiplicity`, total at most `max_total`.
pub fn root_data<R: Rng + ?Sized>(
    rng: &mut R,
    field: Field,
    max_distinct: usize,
    max_multiplicity: usize,
    max_total: usize,
) -> Vec<RootDatum> {
    let cap = match field {
        Field::Prime(p) => max_distinct.min(p as usize),
        Field::Rationals => max_distinct,
    };
    let k = rng.gen_range(1..=cap.min(max_total).max(1));
    let mut remaining = max_total;
    let mut out = Vec::with_capacity(k);
    for (i, root) in distinct_elements(rng, field, k).into_iter().enumerate() {
        let reserve = k - i - 1;
        let top = max_multiplicity.min(remaining - reserve);
        let e = rng.gen_range(1..=top);
        remaining -= e;
        out.push(RootDatum { root, multiplicity: e });
    }
    out.sort_by(|a, b| a.root.canonical_cmp(&b.root));
    out
}

/// A pointed function with split monic numerator (degree ≤ `max_degree`,
/// at most `max_distinct` distinct roots) and a random denominator of lower
/// degree that vanishes at none of the roots.
pub fn split_instance<R: Rng + ?Sized>(
    rng: &mut R,
    field: Field,
    max_degree: usize,
    max_distinct: usize,
) -> RationalFunction {
    let roots = root_data(rng, field, max_distinct, max_degree, max_degree);
    let f = Polynomial::from_roots(roots.iter().map(|r| (&r.root, r.multiplicity)), field);
    let n = f.degree().expect("nonzero");
    loop {
        let dg = rng.gen_range(0..n);
        let g = polynomial(rng, field, dg);
        let coprime = roots
            .iter()
            .all(|r| !g.evaluate(&r.root).expect("same field").is_zero());
        if coprime {
            return normalize_pointed(&f, &g).expect("split numerator coprime to denominator");
        }
    }
}

/// A random reduced pointed function of degree in `1..=max_degree`.
pub fn pointed<R: Rng + ?Sized>(rng: &mut R, field: Field, max_degree: usize) -> RationalFunction {
    loop {
        let n = rng.gen_range(1..=max_degree);
        let f = polynomial(rng, field, n);
        let dg = rng.gen_range(0..n);
        let g = polynomial(rng, field, dg);
        if let Ok(func) = normalize_pointed(&f, &g) {
            return func;
        }
    }
}

/// A random polynomial map `f/1` with `deg f` in `1..=max_degree`; `f` is
/// generally not monic.
pub fn polynomial_map<R: Rng + ?Sized>(rng: &mut R, field: Field, max_degree: usize) -> (Polynomial, Polynomial) {
    let n = rng.gen_range(1..=max_degree);
    (polynomial(rng, field, n), Polynomial::one(field))
}
