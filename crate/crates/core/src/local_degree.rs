//! Unstable local degrees at rational roots.

use crate::error::{Error, Result};
use crate::field::FieldElement;
use crate::gw::{gram_to_class, gw_generator, GramMatrix, UnstableClass};
use crate::matrix::Matrix;
use crate::poly::{laurent_principal_part, Polynomial, PrincipalPart, RationalFunction};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalDegreeReport {
    pub root: FieldElement,
    pub multiplicity: usize,
    pub newton_matrix: GramMatrix,
    pub class: UnstableClass,
}

fn newton_from_principal_part(pp: &PrincipalPart) -> Result<GramMatrix> {
    let m = pp.order();
    let mut out = Matrix::zeros(pp.center.field(), m, m);
    for i in 0..m {
        for j in 0..m - i {
            out.set(i, j, pp.coefficient(i + j + 1));
        }
    }
    GramMatrix::new(out).map_err(|e| Error::Internal(format!("Newton matrix at {}: {e}", pp.center)))
}

/// Anti-triangular matrix `(A_{r,i+j+1})` of principal-part coefficients.
pub fn newton_matrix(func: &RationalFunction, r: &FieldElement) -> Result<GramMatrix> {
    newton_from_principal_part(&laurent_principal_part(func, r)?)
}

/// `deg^u_r(f/g)`, presented by the Newton matrix at `r`.
pub fn local_degree(func: &RationalFunction, r: &FieldElement) -> Result<LocalDegreeReport> {
    let pp = laurent_principal_part(func, r)?;
    let newton_matrix = newton_from_principal_part(&pp)?;
    let class = gram_to_class(&newton_matrix)?;
    Ok(LocalDegreeReport {
        root: r.clone(),
        multiplicity: pp.order(),
        newton_matrix,
        class,
    })
}

/// Local degree at the closed point cut out by the monic irreducible
/// `point`. Only degree-one points are supported.
pub fn local_degree_at_point(func: &RationalFunction, point: &Polynomial) -> Result<LocalDegreeReport> {
    let point = point.monic();
    match point.degree() {
        Some(1) => local_degree(func, &-&point.coeff(0)),
        Some(d) if d > 1 && func.numerator().rem(&point)?.is_zero() => Err(Error::UnsupportedPoint(format!(
            "closed point {point} of degree {d} is not rational"
        ))),
        _ => Err(Error::domain(format!("{point} does not define a zero of {}", func.numerator()))),
    }
}

/// `Res^m`: the coefficient of `(x − r)^{−m}` in `g/f`.
pub fn higher_residue(func: &RationalFunction, r: &FieldElement, m: usize) -> Result<FieldElement> {
    let pp = laurent_principal_part(func, r)?;
    if m == 0 || m > pp.order() {
        return Err(Error::domain(format!(
            "residue order {m} outside 1..={} at {r}",
            pp.order()
        )));
    }
    Ok(pp.coefficient(m))
}

/// `⟨((f/g)'(r))⁻¹⟩^u = ⟨g(r)/f'(r)⟩^u` at a simple root.
pub fn simple_zero_degree(func: &RationalFunction, r: &FieldElement) -> Result<UnstableClass> {
    let mult = func.numerator().multiplicity_at(r)?;
    if mult != 1 {
        return Err(Error::domain(format!("{r} has multiplicity {mult}, not 1")));
    }
    let derivative = func.numerator().derivative().evaluate(r)?;
    gw_generator(&func.denominator().evaluate(r)?.checked_div(&derivative)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bezout::unstable_degree;
    use crate::field::Field;
    use crate::gw::gw_equal;
    use crate::poly::normalize_pointed;

    const Q: Field = Field::Rationals;

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_i64s(Q, c)
    }

    fn func(f: &[i64], g: &[i64]) -> RationalFunction {
        normalize_pointed(&p(f), &p(g)).unwrap()
    }

    fn q(n: i64, d: i64) -> FieldElement {
        FieldElement::from_ratio(Q, n, d).unwrap()
    }

    #[test]
    fn newton_examples() {
        let m = newton_matrix(&func(&[0, 0, 1], &[1]), &q(0, 1)).unwrap();
        assert_eq!(m.matrix(), &Matrix::from_i64_rows(Q, &[&[0, 1], &[1, 0]]).unwrap());
        let m = newton_matrix(&func(&[-1, 0, 1], &[0, 1]), &q(1, 1)).unwrap();
        assert_eq!(m.matrix().get(0, 0), &q(1, 2));

        // (x-2)^3 / 5
        let cube = Polynomial::linear(&q(2, 1)).pow(3);
        let f = normalize_pointed(&cube, &p(&[5])).unwrap();
        let m = newton_matrix(&f, &q(2, 1)).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                let want = if i + j == 2 { q(5, 1) } else { q(0, 1) };
                assert_eq!(m.matrix().get(i, j), &want);
            }
        }
        assert_eq!(higher_residue(&f, &q(2, 1), 3).unwrap(), q(5, 1));
        assert!(higher_residue(&f, &q(2, 1), 4).is_err());
        assert!(newton_matrix(&f, &q(3, 1)).is_err());
    }

    #[test]
    fn local_degree_examples() {
        let f = func(&[0, 0, 1], &[1]);
        let report = local_degree(&f, &q(0, 1)).unwrap();
        assert_eq!(report.multiplicity, 2);
        assert!(gw_equal(&report.class, &unstable_degree(&f).unwrap()).unwrap());

        let f = func(&[-1, 0, 1], &[0, 1]);
        let report = local_degree(&f, &q(1, 1)).unwrap();
        assert!(gw_equal(&report.class, &gw_generator(&q(1, 2)).unwrap()).unwrap());
        assert!(gw_equal(&report.class, &simple_zero_degree(&f, &q(1, 1)).unwrap()).unwrap());
    }

    #[test]
    fn simple_zero_examples() {
        let f = func(&[0, 1], &[1]);
        assert_eq!(simple_zero_degree(&f, &q(0, 1)).unwrap(), gw_generator(&q(1, 1)).unwrap());
        let f = func(&[-6, 3], &[1]);
        assert_eq!(simple_zero_degree(&f, &q(2, 1)).unwrap(), gw_generator(&q(1, 3)).unwrap());
        let f = func(&[0, 0, 1], &[1]);
        assert!(simple_zero_degree(&f, &q(0, 1)).is_err());
    }

    #[test]
    fn closed_points() {
        // (x^2 + 1)·x over Q
        let f = func(&[0, 1, 0, 1], &[1]);
        assert!(matches!(
            local_degree_at_point(&f, &p(&[1, 0, 1])),
            Err(Error::UnsupportedPoint(_))
        ));
        assert_eq!(local_degree_at_point(&f, &p(&[0, 2])).unwrap().multiplicity, 1);
    }
}
