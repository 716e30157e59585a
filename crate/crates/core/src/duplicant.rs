//! The coefficient matrix `Σ(f)` and the duplicant `𝔇(f) = det Σ(f)²`.
//!
//! Orientation: row `i` of `Σ(f)` indexes the monomial `x^i`; the columns
//! run over roots `r_ℓ` in canonical order and, within a root, over
//! `j = 1..=e_ℓ`. Column `(ℓ, j)` is the coefficient vector of
//! `f / (x − r_ℓ)^j`. With this orientation
//! `Béz^mon(f/g) = Σ(f) · (⊕_ℓ Nwt_{r_ℓ}(f/g)) · Σ(f)ᵀ`.

use std::ops::Range;

use crate::bezout::bezoutian_matrix;
use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};
use crate::local_degree::newton_matrix;
use crate::matrix::Matrix;
use crate::poly::{rational_roots, Polynomial, RationalFunction, RootDatum};

/// `σ_{m,n}(values)`, zero for `m` outside `[0, n]`.
pub fn elementary_symmetric(field: Field, m: i64, values: &[FieldElement]) -> Result<FieldElement> {
    let mut e = vec![FieldElement::zero(field); values.len() + 1];
    e[0] = FieldElement::one(field);
    for (n, v) in values.iter().enumerate() {
        field.ensure_same(v.field())?;
        for k in (1..=n + 1).rev() {
            e[k] = &e[k] + &(v * &e[k - 1]);
        }
    }
    Ok(usize::try_from(m)
        .ok()
        .and_then(|m| e.get(m).cloned())
        .unwrap_or_else(|| FieldElement::zero(field)))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SigmaMatrix {
    matrix: Matrix,
    roots: Vec<RootDatum>,
    blocks: Vec<Range<usize>>,
}

impl SigmaMatrix {
    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn roots(&self) -> &[RootDatum] {
        &self.roots
    }

    /// Column range of the block for root `ℓ`.
    pub fn block(&self, l: usize) -> Range<usize> {
        self.blocks[l].clone()
    }

    /// `N = Σ e_ℓ`.
    pub fn size(&self) -> usize {
        self.matrix.nrows()
    }

    /// Ascending coefficients of `f / (x − r_ℓ)^j`, `1 ≤ j ≤ e_ℓ`.
    pub fn coefficient_vector(&self, l: usize, j: usize) -> Vec<FieldElement> {
        assert!(j >= 1 && j <= self.roots[l].multiplicity, "j out of range");
        self.matrix.column(self.blocks[l].start + j - 1)
    }

    pub fn determinant(&self) -> Result<FieldElement> {
        self.matrix.determinant()
    }
}

fn field_of(roots: &[RootDatum]) -> Result<Field> {
    let first = roots
        .first()
        .ok_or_else(|| Error::domain("Sigma matrix needs at least one root"))?;
    let field = first.root.field();
    for (i, r) in roots.iter().enumerate() {
        field.ensure_same(r.root.field())?;
        if r.multiplicity == 0 {
            return Err(Error::domain("root multiplicity must be positive"));
        }
        if roots[..i].iter().any(|s| s.root == r.root) {
            return Err(Error::domain(format!("repeated root {}", r.root)));
        }
    }
    Ok(field)
}

/// Monic `∏ (x − r_ℓ)^{e_ℓ}`.
pub fn split_polynomial(roots: &[RootDatum]) -> Result<Polynomial> {
    let field = field_of(roots)?;
    Ok(Polynomial::from_roots(roots.iter().map(|r| (&r.root, r.multiplicity)), field))
}

/// Assemble `Σ(f)` for `f = ∏ (x − r_ℓ)^{e_ℓ}` from elementary symmetric
/// functions, cross-checked against polynomial division.
pub fn sigma_matrix(roots: &[RootDatum]) -> Result<SigmaMatrix> {
    let field = field_of(roots)?;
    let n: usize = roots.iter().map(|r| r.multiplicity).sum();
    let f = split_polynomial(roots)?;
    let mut matrix = Matrix::zeros(field, n, n);
    let mut blocks = Vec::with_capacity(roots.len());
    let mut col = 0;
    for (l, datum) in roots.iter().enumerate() {
        let start = col;
        for j in 1..=datum.multiplicity {
            // the N − j roots of f/(x − r_ℓ)^j
            let mut rest: Vec<FieldElement> = Vec::with_capacity(n - j);
            for (k, other) in roots.iter().enumerate() {
                let count = if k == l { other.multiplicity - j } else { other.multiplicity };
                rest.extend(std::iter::repeat(other.root.clone()).take(count));
            }
            let quotient = f.div_exact(&Polynomial::linear(&datum.root).pow(j))?;
            for i in 0..n {
                let k = (n - j) as i64 - i as i64;
                let mut entry = elementary_symmetric(field, k, &rest)?;
                if k.rem_euclid(2) == 1 {
                    entry = -&entry;
                }
                if entry != quotient.coeff(i) {
                    return Err(Error::Internal(format!(
                        "Vieta entry ({i}, {l}, {j}) disagrees with f/(x - {})^{j}",
                        datum.root
                    )));
                }
                matrix.set(i, col, entry);
            }
            col += 1;
        }
        blocks.push(start..col);
    }
    Ok(SigmaMatrix {
        matrix,
        roots: roots.to_vec(),
        blocks,
    })
}

fn total_degree(roots: &[RootDatum]) -> i64 {
    roots.iter().map(|r| r.multiplicity as i64).sum()
}

fn check_leading(c: &FieldElement, roots: &[RootDatum]) -> Result<()> {
    field_of(roots)?.ensure_same(c.field())?;
    if c.is_zero() {
        return Err(Error::domain("leading coefficient must be nonzero"));
    }
    Ok(())
}

/// `c^{2N} · det Σ(f)²`.
pub fn duplicant(roots: &[RootDatum], leading_coefficient: &FieldElement) -> Result<FieldElement> {
    check_leading(leading_coefficient, roots)?;
    let det = sigma_matrix(roots)?.determinant()?;
    Ok(&leading_coefficient.pow(2 * total_degree(roots))? * &(&det * &det))
}

/// `∏_{i<j} (r_i − r_j)^{e_i e_j}`, the square root of the monic closed form.
fn root_difference_product(roots: &[RootDatum]) -> FieldElement {
    let field = roots[0].root.field();
    let mut acc = FieldElement::one(field);
    for (i, a) in roots.iter().enumerate() {
        for b in &roots[i + 1..] {
            let d = &a.root - &b.root;
            let e = (a.multiplicity * b.multiplicity) as i64;
            acc = &acc * &d.pow(e).expect("distinct roots");
        }
    }
    acc
}

/// `c^{2N} · ∏_{i<j} (r_i − r_j)^{2 e_i e_j}`.
pub fn duplicant_closed_form(roots: &[RootDatum], leading_coefficient: &FieldElement) -> Result<FieldElement> {
    check_leading(leading_coefficient, roots)?;
    let s = root_difference_product(roots);
    Ok(&leading_coefficient.pow(2 * total_degree(roots))? * &(&s * &s))
}

/// The sign `ε` in `det Σ(f) = ε · ∏_{i<j} (r_i − r_j)^{e_i e_j}`.
pub fn sigma_determinant_sign(roots: &[RootDatum]) -> Result<i8> {
    let det = sigma_matrix(roots)?.determinant()?;
    let s = root_difference_product(roots);
    if det == s {
        Ok(1)
    } else if det == -&s {
        Ok(-1)
    } else {
        Err(Error::Internal(format!("det Sigma = {det} is not ±{s}")))
    }
}

fn split_roots(func: &RationalFunction) -> Result<Vec<RootDatum>> {
    let (roots, cofactor) = rational_roots(func.numerator())?;
    if !cofactor.is_one() {
        return Err(Error::domain(format!(
            "numerator {} does not split (cofactor {cofactor})",
            func.numerator()
        )));
    }
    Ok(roots)
}

/// Check that every column of `Σ(f)` is the monomial coefficient vector of
/// the corresponding Newton basis element `f / (x − r_ℓ)^j`.
pub fn newton_basis_verify(func: &RationalFunction) -> Result<bool> {
    let roots = split_roots(func)?;
    let sigma = sigma_matrix(&roots)?;
    let f = func.numerator();
    for (l, datum) in roots.iter().enumerate() {
        for j in 1..=datum.multiplicity {
            let basis = f.div_exact(&Polynomial::linear(&datum.root).pow(j))?;
            let want: Vec<FieldElement> = (0..sigma.size()).map(|i| basis.coeff(i)).collect();
            if sigma.coefficient_vector(l, j) != want {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Whether `Σ · (⊕ Newton blocks) · Σᵀ` equals `bezoutian`.
pub fn congruence_holds(sigma: &SigmaMatrix, newton_blocks: &[Matrix], bezoutian: &Matrix) -> Result<bool> {
    let field = sigma.matrix.field();
    let block = Matrix::block_diagonal(field, newton_blocks)?;
    if block.nrows() != sigma.size() {
        return Ok(false);
    }
    let conj = sigma.matrix.mul(&block)?.mul(&sigma.matrix.transpose())?;
    Ok(&conj == bezoutian)
}

/// `Béz^mon(f/g) = Σ(f) · ⊕_ℓ Nwt_{r_ℓ}(f/g) · Σ(f)ᵀ` for a split numerator.
pub fn congruence_identity(func: &RationalFunction) -> Result<bool> {
    let roots = split_roots(func)?;
    let sigma = sigma_matrix(&roots)?;
    let blocks = roots
        .iter()
        .map(|r| Ok(newton_matrix(func, &r.root)?.matrix().clone()))
        .collect::<Result<Vec<_>>>()?;
    congruence_holds(&sigma, &blocks, bezoutian_matrix(func)?.matrix())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::normalize_pointed;

    const Q: Field = Field::Rationals;

    fn q(n: i64) -> FieldElement {
        FieldElement::from_i64(Q, n)
    }

    fn roots(rs: &[(i64, usize)]) -> Vec<RootDatum> {
        rs.iter().map(|&(r, e)| RootDatum::new(q(r), e).unwrap()).collect()
    }

    #[test]
    fn elementary_symmetric_examples() {
        let v = [q(1), q(2), q(3)];
        assert_eq!(elementary_symmetric(Q, 0, &v).unwrap(), q(1));
        assert_eq!(elementary_symmetric(Q, 2, &v).unwrap(), q(11));
        assert_eq!(elementary_symmetric(Q, 4, &v).unwrap(), q(0));
        assert_eq!(elementary_symmetric(Q, -1, &v).unwrap(), q(0));
        assert_eq!(elementary_symmetric(Q, 0, &[]).unwrap(), q(1));
    }

    #[test]
    fn worked_example() {
        // (x - 2)(x - 0)^2
        let rs = roots(&[(2, 1), (0, 2)]);
        let s = sigma_matrix(&rs).unwrap();
        assert_eq!(s.coefficient_vector(0, 1), vec![q(0), q(0), q(1)]);
        assert_eq!(s.coefficient_vector(1, 1), vec![q(0), q(-2), q(1)]);
        assert_eq!(s.coefficient_vector(1, 2), vec![q(-2), q(1), q(0)]);
        assert_eq!(duplicant(&rs, &q(1)).unwrap(), q(16));
        assert_eq!(duplicant_closed_form(&rs, &q(1)).unwrap(), q(16));
    }

    #[test]
    fn small_cases() {
        assert_eq!(sigma_matrix(&roots(&[(5, 1)])).unwrap().matrix(), &Matrix::identity(Q, 1));
        assert_eq!(duplicant(&roots(&[(5, 1)]), &q(1)).unwrap(), q(1));
        assert_eq!(duplicant(&roots(&[(1, 1), (3, 1)]), &q(1)).unwrap(), q(4));
        assert_eq!(duplicant_closed_form(&roots(&[(7, 1)]), &q(3)).unwrap(), q(9));
        assert_eq!(duplicant(&roots(&[(7, 1)]), &q(3)).unwrap(), q(9));
        assert!(sigma_matrix(&roots(&[(1, 1), (1, 2)])).is_err());
        assert!(sigma_matrix(&[]).is_err());
        assert!(duplicant(&roots(&[(1, 1)]), &q(0)).is_err());
    }

    #[test]
    fn sign_is_reported() {
        assert!(sigma_determinant_sign(&roots(&[(2, 1), (0, 2)])).is_ok());
        assert!(sigma_determinant_sign(&roots(&[(-1, 2), (3, 3), (4, 1)])).is_ok());
    }

    #[test]
    fn newton_basis_and_congruence() {
        let p = |c: &[i64]| Polynomial::from_i64s(Q, c);
        for (f, g) in [
            (p(&[0, 0, -2, 1]), p(&[1, 1])),
            (p(&[-5, 1]), p(&[3])),
            (p(&[2, -3, 1]), p(&[1])),
            (p(&[-1, 0, 1]), p(&[0, 1])),
        ] {
            let func = normalize_pointed(&f, &g).unwrap();
            assert!(newton_basis_verify(&func).unwrap());
            assert!(congruence_identity(&func).unwrap());
        }
        let func = normalize_pointed(&p(&[1, 0, 1]), &p(&[1])).unwrap();
        assert!(newton_basis_verify(&func).is_err());
    }
}
