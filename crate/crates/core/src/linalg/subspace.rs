//! Subspaces of `F^n` kept in reduced row-echelon form under incremental
//! insertion.
//!
//! Rows are stored densely together with their sorted support, so reducing a
//! sparse vector only touches the pivot rows it actually meets. Because the
//! row canonical form of a row space is unique, the stored basis does not
//! depend on insertion order.

use rayon::prelude::*;

use super::matrix::DenseMatrix;
use crate::error::{Error, Result};
use crate::field::Field;

#[derive(Clone, Debug)]
struct EchelonRow<E> {
    pivot: usize,
    data: Vec<E>,
    support: Vec<u32>,
}

/// A subspace of `F^n` stored as the row canonical form of its basis.
#[derive(Clone, Debug)]
pub struct Subspace<F: Field> {
    field: F,
    ambient: usize,
    rows: Vec<EchelonRow<F::Elem>>,
    pivot_row: Vec<Option<u32>>,
}

const PARALLEL_THRESHOLD: usize = 512;

impl<F: Field> Subspace<F> {
    pub fn new(field: F, ambient: usize) -> Self {
        Subspace {
            field,
            ambient,
            rows: Vec::new(),
            pivot_row: vec![None; ambient],
        }
    }

    /// Span of the given vectors.
    pub fn from_rows<I>(field: F, ambient: usize, vectors: I) -> Result<Self>
    where
        I: IntoIterator<Item = Vec<F::Elem>>,
    {
        let mut s = Self::new(field, ambient);
        for v in vectors {
            s.insert(v)?;
        }
        Ok(s)
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.ambient
    }

    fn check_len(&self, v: &[F::Elem]) -> Result<()> {
        if v.len() != self.ambient {
            return Err(Error::DimensionMismatch {
                expected: self.ambient,
                found: v.len(),
            });
        }
        Ok(())
    }

    /// Replaces `v` by its remainder modulo the subspace. The remainder is
    /// zero in every pivot column.
    pub fn reduce(&self, v: &mut [F::Elem]) -> Result<()> {
        self.check_len(v)?;
        let f = &self.field;
        let hits: Vec<(u32, F::Elem)> = v
            .iter()
            .enumerate()
            .filter(|(_, x)| !f.is_zero(x))
            .filter_map(|(c, x)| self.pivot_row[c].map(|r| (r, x.clone())))
            .collect();
        for (r, coef) in hits {
            let row = &self.rows[r as usize];
            f.sub_scaled_at(v, &row.data, &coef, &row.support);
        }
        Ok(())
    }

    pub fn contains(&self, v: &[F::Elem]) -> Result<bool> {
        let mut w = v.to_vec();
        self.reduce(&mut w)?;
        Ok(w.iter().all(|x| self.field.is_zero(x)))
    }

    /// Adds `v` to the spanning set. Returns whether the dimension grew.
    pub fn insert(&mut self, mut v: Vec<F::Elem>) -> Result<bool> {
        self.reduce(&mut v)?;
        let f = self.field.clone();
        let Some(pivot) = v.iter().position(|x| !f.is_zero(x)) else {
            return Ok(false);
        };
        let inv = f.inv(&v[pivot]).expect("nonzero pivot");
        f.scale(&mut v[pivot..], &inv);
        let support: Vec<u32> = (pivot..self.ambient)
            .filter(|&j| !f.is_zero(&v[j]))
            .map(|j| j as u32)
            .collect();

        let eliminate = |row: &mut EchelonRow<F::Elem>| {
            let factor = row.data[pivot].clone();
            if f.is_zero(&factor) {
                return;
            }
            f.sub_scaled_at(&mut row.data, &v, &factor, &support);
            row.support = merge_support(&f, &row.data, &row.support, &support);
        };
        if self.rows.len() >= PARALLEL_THRESHOLD {
            self.rows.par_iter_mut().for_each(eliminate);
        } else {
            self.rows.iter_mut().for_each(eliminate);
        }

        self.pivot_row[pivot] = Some(self.rows.len() as u32);
        self.rows.push(EchelonRow {
            pivot,
            data: v,
            support,
        });
        Ok(true)
    }

    /// Inserts every vector; returns how many increased the dimension.
    pub fn extend<I>(&mut self, vectors: I) -> Result<usize>
    where
        I: IntoIterator<Item = Vec<F::Elem>>,
    {
        let mut n = 0;
        for v in vectors {
            if self.insert(v)? {
                n += 1;
            }
        }
        Ok(n)
    }

    /// Pivot columns in increasing order.
    pub fn pivots(&self) -> Vec<usize> {
        let mut p: Vec<usize> = self.rows.iter().map(|r| r.pivot).collect();
        p.sort_unstable();
        p
    }

    /// Basis rows in row canonical form, ordered by pivot column.
    pub fn rcf_rows(&self) -> Vec<Vec<F::Elem>> {
        let mut order: Vec<&EchelonRow<F::Elem>> = self.rows.iter().collect();
        order.sort_by_key(|r| r.pivot);
        order.into_iter().map(|r| r.data.clone()).collect()
    }

    /// The canonical basis as a `dim x ambient` matrix.
    pub fn to_matrix(&self) -> DenseMatrix<F> {
        DenseMatrix::from_rows(self.field.clone(), self.ambient, self.rcf_rows())
            .expect("rows have ambient length")
    }

    /// Two subspaces are equal iff their row canonical forms coincide.
    pub fn equals(&self, other: &Self) -> Result<bool> {
        if self.field.tag() != other.field.tag() {
            return Err(Error::FieldMismatch {
                left: self.field.tag().to_string(),
                right: other.field.tag().to_string(),
            });
        }
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch {
                expected: self.ambient,
                found: other.ambient,
            });
        }
        Ok(self.dim() == other.dim()
            && self.pivots() == other.pivots()
            && self.rcf_rows() == other.rcf_rows())
    }

    /// Whether every vector of `other` lies in `self`.
    pub fn contains_subspace(&self, other: &Self) -> Result<bool> {
        for r in &other.rows {
            if !self.contains(&r.data)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

fn merge_support<F: Field>(f: &F, data: &[F::Elem], a: &[u32], b: &[u32]) -> Vec<u32> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let next = match (a.get(i), b.get(j)) {
            (Some(&x), Some(&y)) if x == y => {
                i += 1;
                j += 1;
                x
            }
            (Some(&x), Some(&y)) if x < y => {
                i += 1;
                x
            }
            (Some(_), Some(&y)) => {
                j += 1;
                y
            }
            (Some(&x), None) => {
                i += 1;
                x
            }
            (None, Some(&y)) => {
                j += 1;
                y
            }
            (None, None) => unreachable!(),
        };
        if !f.is_zero(&data[next as usize]) {
            out.push(next);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;

    fn v(f: &PrimeField, xs: &[i64]) -> Vec<u32> {
        xs.iter().map(|&x| f.from_i64(x)).collect()
    }

    #[test]
    fn order_independent_equality() {
        let f = PrimeField::new(101).unwrap();
        let gens = vec![
            v(&f, &[1, 2, 0, 1]),
            v(&f, &[0, 1, 1, 0]),
            v(&f, &[1, 3, 1, 1]),
        ];
        let a = Subspace::from_rows(f, 4, gens.clone()).unwrap();
        let b = Subspace::from_rows(f, 4, gens.into_iter().rev()).unwrap();
        assert_eq!(a.dim(), 2);
        assert!(a.equals(&b).unwrap());
    }

    #[test]
    fn membership() {
        let f = PrimeField::new(101).unwrap();
        let s = Subspace::from_rows(f, 3, vec![v(&f, &[1, 1, 0])]).unwrap();
        assert!(s.contains(&v(&f, &[5, 5, 0])).unwrap());
        assert!(!s.contains(&v(&f, &[1, 0, 0])).unwrap());
        assert!(s.contains(&v(&f, &[1, 0])).is_err());
    }
}
