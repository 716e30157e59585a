//! Bézoutians and the global unstable degree.

use crate::error::{Error, Result};
use crate::field::FieldElement;
use crate::gw::{gram_to_class, GramMatrix, UnstableClass};
use crate::matrix::Matrix;
use crate::poly::{normalize_pointed, Polynomial, RationalFunction};

/// Coefficients `a_ij` of `(f(X)g(Y) − f(Y)g(X)) / (X − Y) = Σ a_ij X^i Y^j`,
/// `0 ≤ i, j < deg f`, for arbitrary (not necessarily normalized) `f`, `g`
/// with `deg g < deg f`.
///
/// Write the numerator as `Σ_k c_k(Y) X^k` with `c_k = f_k·g(Y) − g_k·f(Y)`
/// and divide by `X − Y` synthetically in `X`.
pub fn bezoutian_coefficients(f: &Polynomial, g: &Polynomial) -> Result<Matrix> {
    f.field().ensure_same(g.field())?;
    let field = f.field();
    let n = f
        .degree()
        .filter(|&n| n >= 1 && g.signed_degree() < n as isize)
        .ok_or_else(|| Error::domain("Bezoutian needs deg f > deg g and deg f >= 1"))?;
    let c: Vec<Polynomial> = (0..=n)
        .map(|k| &g.scale(&f.coeff(k)) - &f.scale(&g.coeff(k)))
        .collect();
    let y = Polynomial::x(field);
    let mut q = vec![Polynomial::zero(field); n];
    q[n - 1] = c[n].clone();
    for i in (1..n).rev() {
        q[i - 1] = &c[i] + &(&y * &q[i]);
    }
    let remainder = &c[0] + &(&y * &q[0]);
    if !remainder.is_zero() {
        return Err(Error::Internal(format!("X - Y does not divide the Bezoutian numerator: {remainder}")));
    }
    let mut m = Matrix::zeros(field, n, n);
    for (i, qi) in q.iter().enumerate() {
        if qi.signed_degree() >= n as isize {
            return Err(Error::Internal("Bezoutian coefficient degree out of range".into()));
        }
        for (j, a) in qi.coeffs().iter().enumerate() {
            m.set(i, j, a.clone());
        }
    }
    Ok(m)
}

/// `Béz^mon(f/g)` of a monic-normalized pointed function.
pub fn bezoutian_matrix(func: &RationalFunction) -> Result<GramMatrix> {
    let m = bezoutian_coefficients(func.numerator(), func.denominator())?;
    GramMatrix::new(m).map_err(|e| Error::Internal(format!("Bezoutian of a reduced pointed map: {e}")))
}

/// `deg^u(f/g) = (Béz^mon, det Béz^mon)`.
pub fn unstable_degree(func: &RationalFunction) -> Result<UnstableClass> {
    let func = normalize_pointed(func.numerator(), func.denominator())?;
    gram_to_class(&bezoutian_matrix(&func)?)
}

/// For a polynomial map `f/c`, check that `Béz^mon` vanishes strictly below
/// its anti-diagonal and is constant `c/lc(f)` on it.
pub fn polynomial_degree_shape_check(f: &Polynomial, g: &Polynomial) -> Result<bool> {
    if !g.is_constant() {
        return Err(Error::domain(format!("({f}) / ({g}) is not a polynomial map")));
    }
    let func = normalize_pointed(f, g)?;
    let bez = bezoutian_matrix(&func)?;
    let expected: FieldElement = func.denominator().coeff(0);
    let n = func.degree();
    let m = bez.matrix();
    Ok((0..n).all(|i| {
        (0..n).all(|j| match (i + j + 1).cmp(&n) {
            std::cmp::Ordering::Greater => m.get(i, j).is_zero(),
            std::cmp::Ordering::Equal => m.get(i, j) == &expected,
            std::cmp::Ordering::Less => true,
        })
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::gw::{gw_equal, gw_generator, gw_add};

    const Q: Field = Field::Rationals;

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_i64s(Q, c)
    }

    fn func(f: &[i64], g: &[i64]) -> RationalFunction {
        normalize_pointed(&p(f), &p(g)).unwrap()
    }

    #[test]
    fn bezoutian_examples() {
        let cases: [(&[i64], &[i64], &[&[i64]]); 3] = [
            (&[0, 1], &[1], &[&[1]]),
            (&[0, 0, 1], &[1], &[&[0, 1], &[1, 0]]),
            (&[-1, 0, 1], &[0, 1], &[&[1, 0], &[0, 1]]),
        ];
        for (f, g, want) in cases {
            let m = bezoutian_matrix(&func(f, g)).unwrap();
            assert_eq!(m.matrix(), &Matrix::from_i64_rows(Q, want).unwrap());
        }
    }

    #[test]
    fn degree_examples() {
        let one = FieldElement::one(Q);
        let d = unstable_degree(&func(&[0, 1], &[1])).unwrap();
        assert!(gw_equal(&d, &gw_generator(&one).unwrap()).unwrap());
        let d = unstable_degree(&func(&[0, 0, 1], &[1])).unwrap();
        assert!(gw_equal(&d, &UnstableClass::hyperbolic(Q)).unwrap());
        let d = unstable_degree(&func(&[-1, 0, 1], &[0, 1])).unwrap();
        let two_ones = gw_add(&gw_generator(&one).unwrap(), &gw_generator(&one).unwrap()).unwrap();
        assert!(gw_equal(&d, &two_ones).unwrap());
        assert_eq!(d.rank(), 2);
    }

    #[test]
    fn raw_bezoutian_scales_quadratically() {
        let (f, g) = (p(&[1, -3, 0, 2]), p(&[5, 1]));
        let c = FieldElement::from_i64(Q, -3);
        let base = bezoutian_coefficients(&f, &g).unwrap();
        let scaled = bezoutian_coefficients(&f.scale(&c), &g.scale(&c)).unwrap();
        let c2 = &c * &c;
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(scaled.get(i, j), &(base.get(i, j) * &c2));
            }
        }
    }

    #[test]
    fn shape_check_examples() {
        assert!(polynomial_degree_shape_check(&p(&[0, 0, 3]), &p(&[1])).unwrap());
        assert!(polynomial_degree_shape_check(&p(&[0, 1, 0, 1]), &p(&[1])).unwrap());
        assert!(polynomial_degree_shape_check(&p(&[-1, 0, 1]), &p(&[0, 1])).is_err());
        let m = bezoutian_matrix(&func(&[0, 0, 3], &[1])).unwrap();
        assert_eq!(m.matrix().get(0, 1), &FieldElement::from_ratio(Q, 1, 3).unwrap());
    }
}
