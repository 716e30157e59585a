//! Dense exact matrices.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};

/// A row-major matrix over a single field.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<FieldElement>,
}

impl Matrix {
    pub fn from_rows(field: Field, rows: Vec<Vec<FieldElement>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        let nrows = rows.len();
        let mut data = Vec::with_capacity(nrows * cols);
        for row in rows {
            if row.len() != cols {
                return Err(Error::domain("ragged matrix rows"));
            }
            for x in row {
                field.ensure_same(x.field())?;
                data.push(x);
            }
        }
        Ok(Matrix {
            field,
            rows: nrows,
            cols,
            data,
        })
    }

    pub fn from_i64_rows(field: Field, rows: &[&[i64]]) -> Result<Self> {
        Self::from_rows(
            field,
            rows.iter()
                .map(|r| r.iter().map(|&x| FieldElement::from_i64(field, x)).collect())
                .collect(),
        )
    }

    pub fn zeros(field: Field, rows: usize, cols: usize) -> Self {
        Matrix {
            field,
            rows,
            cols,
            data: vec![FieldElement::zero(field); rows * cols],
        }
    }

    pub fn identity(field: Field, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, FieldElement::one(field));
        }
        m
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &FieldElement {
        &self.data[i * self.cols + j]
    }

    /// Panics if `x` is from another field.
    pub fn set(&mut self, i: usize, j: usize, x: FieldElement) {
        assert_eq!(x.field(), self.field, "matrix entry from a different field");
        self.data[i * self.cols + j] = x;
    }

    pub fn row(&self, i: usize) -> &[FieldElement] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<FieldElement> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<FieldElement>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.field.ensure_same(other.field)?;
        if self.cols != other.rows {
            return Err(Error::domain(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let cur = out.get(i, j) + &(a * other.get(k, j));
                    out.set(i, j, cur);
                }
            }
        }
        Ok(out)
    }

    /// Block-diagonal sum of square blocks.
    pub fn block_diagonal(field: Field, blocks: &[Matrix]) -> Result<Self> {
        let n = blocks.iter().map(|b| b.rows).sum();
        let mut out = Self::zeros(field, n, n);
        let mut offset = 0;
        for b in blocks {
            field.ensure_same(b.field)?;
            if !b.is_square() {
                return Err(Error::domain("block_diagonal needs square blocks"));
            }
            for i in 0..b.rows {
                for j in 0..b.cols {
                    out.set(offset + i, offset + j, b.get(i, j).clone());
                }
            }
            offset += b.rows;
        }
        Ok(out)
    }

    /// Exact determinant: fraction-free Bareiss elimination over ℚ,
    /// Gaussian elimination over 𝔽_p.
    pub fn determinant(&self) -> Result<FieldElement> {
        if !self.is_square() {
            return Err(Error::domain("determinant of a non-square matrix"));
        }
        match self.field {
            Field::Rationals => Ok(FieldElement::from_rational(Field::Rationals, &self.bareiss())?),
            Field::Prime(_) => self.gaussian_determinant(),
        }
    }

    fn bareiss(&self) -> BigRational {
        let n = self.rows;
        if n == 0 {
            return BigRational::one();
        }
        // Clear denominators row by row; the determinant picks up their product.
        let mut scale = BigInt::one();
        let mut a: Vec<Vec<BigInt>> = (0..n)
            .map(|i| {
                let row: Vec<&BigRational> = self.row(i).iter().map(|x| x.as_rational().expect("rational")).collect();
                let l = row.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
                scale *= &l;
                row.iter().map(|q| (*q * &l).to_integer()).collect()
            })
            .collect();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n {
            let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
                return BigRational::zero();
            };
            if p != k {
                a.swap(p, k);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                    a[i][j] = v / &prev;
                }
                a[i][k] = BigInt::zero();
            }
            prev = a[k][k].clone();
        }
        BigRational::new(sign * &a[n - 1][n - 1], scale)
    }

    fn gaussian_determinant(&self) -> Result<FieldElement> {
        let n = self.rows;
        let mut a = self.to_rows();
        let mut det = FieldElement::one(self.field);
        for k in 0..n {
            let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
                return Ok(FieldElement::zero(self.field));
            };
            if p != k {
                a.swap(p, k);
                det = -&det;
            }
            let inv = a[k][k].inv()?;
            det = &det * &a[k][k];
            for i in k + 1..n {
                let factor = &a[i][k] * &inv;
                if factor.is_zero() {
                    continue;
                }
                for j in k..n {
                    a[i][j] = &a[i][j] - &(&factor * &a[k][j]);
                }
            }
        }
        Ok(det)
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for (j, x) in self.row(i).iter().enumerate() {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}
