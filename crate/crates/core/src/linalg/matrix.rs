use std::fmt;

use crate::error::{Error, Result};
use crate::field::{Coeff, Field};

/// Row-major dense matrix over an exact field.
#[derive(Clone)]
pub struct DenseMatrix<F: Field> {
    field: F,
    rows: usize,
    cols: usize,
    data: Vec<F::Elem>,
}

impl<F: Field> PartialEq for DenseMatrix<F> {
    fn eq(&self, other: &Self) -> bool {
        self.field.tag() == other.field.tag()
            && self.rows == other.rows
            && self.cols == other.cols
            && self.data == other.data
    }
}

impl<F: Field> fmt::Debug for DenseMatrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "DenseMatrix {}x{} over {}",
            self.rows,
            self.cols,
            self.field.tag()
        )?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| self.field.format(x)).collect();
            writeln!(f, "  [{}]", row.join(" "))?;
        }
        Ok(())
    }
}

impl<F: Field> DenseMatrix<F> {
    pub fn zeros(field: F, rows: usize, cols: usize) -> Self {
        let data = vec![field.zero(); rows * cols];
        DenseMatrix {
            field,
            rows,
            cols,
            data,
        }
    }

    pub fn identity(field: F, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = m.field.one();
        }
        m
    }

    /// Builds a matrix from explicit rows; every row must have `cols` entries.
    pub fn from_rows(field: F, cols: usize, rows: Vec<Vec<F::Elem>>) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        let n = rows.len();
        for (i, r) in rows.into_iter().enumerate() {
            if r.len() != cols {
                return Err(Error::Malformed(format!(
                    "row {i} has {} entries, expected {cols}",
                    r.len()
                )));
            }
            data.extend(r);
        }
        Ok(DenseMatrix {
            field,
            rows: n,
            cols,
            data,
        })
    }

    pub fn from_coeff_rows(field: F, cols: usize, rows: &[Vec<Coeff>]) -> Result<Self> {
        let converted = rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|c| field.from_coeff(c))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_rows(field, cols, converted)
    }

    pub fn from_i64_rows(field: F, rows: &[Vec<i64>]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        let converted = rows
            .iter()
            .map(|r| r.iter().map(|&v| field.from_i64(v)).collect())
            .collect();
        Self::from_rows(field, cols, converted)
    }

    pub fn field(&self) -> &F {
        &self.field
    }
    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }
    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn get(&self, i: usize, j: usize) -> &F::Elem {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: F::Elem) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[F::Elem] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_mut(&mut self, i: usize) -> &mut [F::Elem] {
        &mut self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<F::Elem>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.field.clone(), self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        t
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &Self) -> Result<Self> {
        if self.field.tag() != other.field.tag() {
            return Err(Error::FieldMismatch {
                left: self.field.tag().to_string(),
                right: other.field.tag().to_string(),
            });
        }
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: other.cols,
            });
        }
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Ok(DenseMatrix {
            field: self.field.clone(),
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        })
    }

    pub fn mul_vec(&self, v: &[F::Elem]) -> Result<Vec<F::Elem>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: v.len(),
            });
        }
        let f = &self.field;
        Ok((0..self.rows)
            .map(|i| {
                self.row(i).iter().zip(v).fold(f.zero(), |acc, (a, b)| {
                    if f.is_zero(a) || f.is_zero(b) {
                        acc
                    } else {
                        f.add(&acc, &f.mul(a, b))
                    }
                })
            })
            .collect())
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        let (head, tail) = self.data.split_at_mut(hi * self.cols);
        head[lo * self.cols..(lo + 1) * self.cols].swap_with_slice(&mut tail[..self.cols]);
    }
}

/// Result of Gauss–Jordan elimination.
#[derive(Debug, Clone, PartialEq)]
pub struct RcfResult<F: Field> {
    pub rank: usize,
    pub rcf: DenseMatrix<F>,
    pub pivot_columns: Vec<usize>,
}

/// Reduced row-echelon form by Gauss–Jordan elimination. The pivot for each
/// column is the first row at or below the current position with a nonzero
/// entry. The result has the same shape as the input; zero rows sit at the
/// bottom.
pub fn rcf<F: Field>(m: &DenseMatrix<F>) -> RcfResult<F> {
    let mut a = m.clone();
    let f = m.field.clone();
    let (rows, cols) = a.shape();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !f.is_zero(a.get(i, c))) else {
            continue;
        };
        a.swap_rows(p, r);
        let inv = f.inv(a.get(r, c)).expect("pivot is nonzero");
        f.scale(&mut a.row_mut(r)[c..], &inv);
        let pivot_row = a.row(r)[c..].to_vec();
        for i in 0..rows {
            if i == r {
                continue;
            }
            let factor = a.get(i, c).clone();
            if f.is_zero(&factor) {
                continue;
            }
            f.sub_scaled(&mut a.row_mut(i)[c..], &pivot_row, &factor);
        }
        pivots.push(c);
        r += 1;
    }
    RcfResult {
        rank: pivots.len(),
        rcf: a,
        pivot_columns: pivots,
    }
}

/// Canonical nullspace basis read off a reduced row-echelon form: one vector
/// per free column, with 1 in that column, 0 in the other free columns and
/// the pivot entries solved from the rcf.
pub fn nullspace_from_rcf<F: Field>(r: &RcfResult<F>) -> Vec<Vec<F::Elem>> {
    let f = r.rcf.field();
    let cols = r.rcf.cols();
    let mut is_pivot = vec![false; cols];
    for &c in &r.pivot_columns {
        is_pivot[c] = true;
    }
    (0..cols)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut v = vec![f.zero(); cols];
            v[free] = f.one();
            for (i, &pc) in r.pivot_columns.iter().enumerate() {
                let e = r.rcf.get(i, free);
                if !f.is_zero(e) {
                    v[pc] = f.neg(e);
                }
            }
            v
        })
        .collect()
}

pub fn nullspace_basis<F: Field>(m: &DenseMatrix<F>) -> Vec<Vec<F::Elem>> {
    nullspace_from_rcf(&rcf(m))
}

pub fn support_size<F: Field>(field: &F, v: &[F::Elem]) -> usize {
    v.iter().filter(|x| !field.is_zero(x)).count()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};

    #[test]
    fn identity_is_its_own_rcf() {
        let m = DenseMatrix::identity(Rationals, 5);
        let r = rcf(&m);
        assert_eq!(r.rank, 5);
        assert_eq!(r.rcf, m);
        assert!(nullspace_basis(&m).is_empty());
    }

    #[test]
    fn small_rational_example() {
        let m =
            DenseMatrix::from_i64_rows(Rationals, &[vec![2, 4, 2], vec![1, 2, 3], vec![3, 6, 5]])
                .unwrap();
        let r = rcf(&m);
        assert_eq!(r.rank, 2);
        assert_eq!(r.pivot_columns, vec![0, 2]);
        let ns = nullspace_from_rcf(&r);
        assert_eq!(ns.len(), 1);
        let q = Rationals;
        let expected: Vec<_> = [-2, 1, 0].iter().map(|&v| q.from_i64(v)).collect();
        assert_eq!(ns[0], expected);
        assert!(m.mul_vec(&ns[0]).unwrap().iter().all(|x| q.is_zero(x)));
    }

    #[test]
    fn vstack_rejects_mixed_fields() {
        let a = DenseMatrix::zeros(PrimeField::new(101).unwrap(), 1, 2);
        let b = DenseMatrix::zeros(PrimeField::new(103).unwrap(), 1, 2);
        assert!(matches!(a.vstack(&b), Err(Error::FieldMismatch { .. })));
    }

    #[test]
    fn ragged_rows_are_malformed() {
        let r = DenseMatrix::from_rows(Rationals, 2, vec![vec![Rationals.one()]]);
        assert!(matches!(r, Err(Error::Malformed(_))));
    }
}
