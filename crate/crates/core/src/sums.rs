//! The naïve sum, the algebraic D-sum, and the local-to-global verifier.

use crate::bezout::{bezoutian_matrix, unstable_degree};
use crate::duplicant::{congruence_holds, sigma_matrix};
use crate::error::{Error, Result};
use crate::field::FieldElement;
use crate::gw::{gram_to_class, gw_add, gw_equal, UnstableClass};
use crate::local_degree::{local_degree, LocalDegreeReport};
use crate::poly::{bezout_pair, normalize_pointed, rational_roots, RationalFunction};

/// `F₁ ⊕^N F₂`: the top-left/bottom-left entries of
/// `[[f₁, −v₁], [g₁, u₁]] · [[f₂, −v₂], [g₂, u₂]]`.
pub fn naive_sum(a: &RationalFunction, b: &RationalFunction) -> Result<RationalFunction> {
    a.field().ensure_same(b.field())?;
    let (u1, v1) = bezout_pair(a)?;
    let f3 = &(a.numerator() * b.numerator()) - &(&v1 * b.denominator());
    let g3 = &(a.denominator() * b.numerator()) + &(&u1 * b.denominator());
    normalize_pointed(&f3, &g3)
}

/// A class placed at a rational point of the divisor `D`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DsumEntry {
    pub class: UnstableClass,
    pub point: FieldElement,
}

/// `(⊕ β_i, ∏ d_i · ∏_{i<j} (r_i − r_j)^{2 m_i m_j})` with `m_i` the rank of
/// `β_i` (negative ranks give inverse powers).
pub fn dsum_algebraic(entries: &[DsumEntry]) -> Result<UnstableClass> {
    let first = entries.first().ok_or_else(|| Error::domain("D-sum of no entries"))?;
    let field = first.class.field();
    let mut correction = FieldElement::one(field);
    for (i, a) in entries.iter().enumerate() {
        field.ensure_same(a.class.field())?;
        field.ensure_same(a.point.field())?;
        for b in &entries[..i] {
            if a.point == b.point {
                return Err(Error::domain(format!("repeated point {} in D", a.point)));
            }
            let e = 2 * a.class.rank() * b.class.rank();
            correction = &correction * &(&b.point - &a.point).pow(e)?;
        }
    }
    let sum = entries[1..]
        .iter()
        .try_fold(first.class.clone(), |acc, e| gw_add(&acc, &e.class))?;
    let unit = sum.unit() * &correction;
    UnstableClass::new(sum.form().clone(), unit)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LtgReport {
    pub global_class: UnstableClass,
    pub local_reports: Vec<LocalDegreeReport>,
    pub dsum_class: UnstableClass,
    pub classes_equal: bool,
    pub matrix_identity_holds: bool,
}

/// Compare the global degree of `F` with the D-sum of its local degrees
/// over the vanishing locus, and check the matrix congruence behind it.
pub fn verify_local_to_global(func: &RationalFunction) -> Result<LtgReport> {
    let func = normalize_pointed(func.numerator(), func.denominator())?;
    let (roots, cofactor) = rational_roots(func.numerator())?;
    if !cofactor.is_one() {
        return Err(Error::UnsupportedVanishingLocus(format!(
            "numerator {} has non-rational factor {cofactor}",
            func.numerator()
        )));
    }
    let bezoutian = bezoutian_matrix(&func)?;
    let global_class = gram_to_class(&bezoutian)?;
    let local_reports = roots
        .iter()
        .map(|r| local_degree(&func, &r.root))
        .collect::<Result<Vec<_>>>()?;
    let entries: Vec<DsumEntry> = local_reports
        .iter()
        .map(|r| DsumEntry {
            class: r.class.clone(),
            point: r.root.clone(),
        })
        .collect();
    let dsum_class = dsum_algebraic(&entries)?;
    let classes_equal = gw_equal(&global_class, &dsum_class)?;
    let blocks: Vec<_> = local_reports.iter().map(|r| r.newton_matrix.matrix().clone()).collect();
    let matrix_identity_holds = congruence_holds(&sigma_matrix(&roots)?, &blocks, bezoutian.matrix())?;
    debug_assert!(gw_equal(&global_class, &unstable_degree(&func)?)?);
    Ok(LtgReport {
        global_class,
        local_reports,
        dsum_class,
        classes_equal,
        matrix_identity_holds,
    })
}
