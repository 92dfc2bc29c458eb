//! Dense exact matrices and fraction-free elimination.

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use super::rational::{big_lcm, Rational};
use crate::error::{Error, Result};

/// A dense row-major matrix of rationals.
#[derive(Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl ExactMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<Rational>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::LengthMismatch { expected: rows * cols, found: data.len() });
        }
        Ok(ExactMatrix { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMatrix { rows, cols, data: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    /// Builds a matrix from rows; `cols` fixes the width so that an empty
    /// row list still has a well-defined shape.
    pub fn from_rows(rows: &[Vec<Rational>], cols: usize) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::LengthMismatch { expected: cols, found: r.len() });
            }
            data.extend(r.iter().cloned());
        }
        Ok(ExactMatrix { rows: rows.len(), cols, data })
    }

    /// Convenience constructor from small integers.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let data: Vec<Rational> = rows
            .iter()
            .flat_map(|r| {
                assert_eq!(r.len(), cols, "ragged rows");
                r.iter().map(|&v| Rational::from_int(v))
            })
            .collect();
        ExactMatrix { rows: rows.len(), cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Result<Vec<Rational>> {
        if v.len() != self.cols {
            return Err(Error::LengthMismatch { expected: self.cols, found: v.len() });
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect())
    }

    pub fn mul(&self, other: &ExactMatrix) -> Result<ExactMatrix> {
        if self.cols != other.rows {
            return Err(Error::LengthMismatch { expected: self.cols, found: other.rows });
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let v = out.get(i, j) + &(a * b);
                        out.set(i, j, v);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Rational::is_zero)
    }
}

impl fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries((0..self.rows).map(|i| self.row(i))).finish()
    }
}

/// Scales a row by the lcm of its denominators so that every entry is integral.
fn clear_denominators(row: &mut [Rational]) {
    let mut l = BigInt::one();
    for v in row.iter() {
        if !v.is_integer() {
            l = big_lcm(&l, &v.denom());
        }
    }
    if !l.is_one() {
        let s = Rational::from(l);
        for v in row.iter_mut() {
            *v = &*v * &s;
        }
    }
}

/// Reduced row echelon form with unit pivots, plus the pivot columns.
///
/// The forward pass is fraction-free (Bareiss) on the integer-scaled input,
/// so intermediate entries stay integral and bounded by minors of the input;
/// a final pass normalizes pivots and clears entries above them.
pub fn rref(m: &ExactMatrix) -> (ExactMatrix, Vec<usize>) {
    let (rows, cols) = (m.rows, m.cols);
    let mut a: Vec<Vec<Rational>> = m.to_rows();
    for r in a.iter_mut() {
        clear_denominators(r);
    }
    let mut pivots = Vec::new();
    let mut prev = Rational::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let (top, bottom) = a.split_at_mut(r + 1);
        let pivot_row = &top[r];
        let pv = &pivot_row[c];
        for row in bottom.iter_mut() {
            let f = row[c].clone();
            for j in c + 1..cols {
                let lhs = pv * &row[j];
                let v = if f.is_zero() || pivot_row[j].is_zero() {
                    lhs
                } else {
                    lhs - &f * &pivot_row[j]
                };
                row[j] = if prev.is_one() { v } else { v / &prev };
            }
            row[c] = Rational::zero();
        }
        prev = a[r][c].clone();
        pivots.push(c);
        r += 1;
    }
    // Back substitution to reduced form.
    for (k, &c) in pivots.iter().enumerate().rev() {
        let inv = a[k][c].recip();
        if !inv.is_one() {
            for v in a[k][c..].iter_mut() {
                *v = &*v * &inv;
            }
        }
        let (upper, lower) = a.split_at_mut(k);
        let prow = &lower[0];
        for row in upper.iter_mut() {
            let f = row[c].clone();
            if f.is_zero() {
                continue;
            }
            for j in c..cols {
                if !prow[j].is_zero() {
                    row[j] = &row[j] - &(&f * &prow[j]);
                }
            }
        }
    }
    for row in a.iter_mut().skip(pivots.len()) {
        for v in row.iter_mut() {
            *v = Rational::zero();
        }
    }
    let data = a.into_iter().flatten().collect();
    (ExactMatrix { rows, cols, data }, pivots)
}

pub fn rank(m: &ExactMatrix) -> usize {
    rref(m).1.len()
}

/// Basis of the right nullspace, one vector per free column in increasing
/// order, with that free variable set to 1 and the other free variables 0.
pub fn kernel_basis(m: &ExactMatrix) -> Vec<Vec<Rational>> {
    let (r, pivots) = rref(m);
    kernel_from_rref(&r, &pivots)
}

fn kernel_from_rref(r: &ExactMatrix, pivots: &[usize]) -> Vec<Vec<Rational>> {
    let cols = r.cols;
    let mut is_pivot = vec![false; cols];
    for &p in pivots {
        is_pivot[p] = true;
    }
    (0..cols)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = vec![Rational::zero(); cols];
            v[f] = Rational::one();
            for (k, &p) in pivots.iter().enumerate() {
                let e = r.get(k, f);
                if !e.is_zero() {
                    v[p] = -e;
                }
            }
            v
        })
        .collect()
}

fn check_lengths(vs: &[Vec<Rational>], len: usize) -> Result<()> {
    for v in vs {
        if v.len() != len {
            return Err(Error::LengthMismatch { expected: len, found: v.len() });
        }
    }
    Ok(())
}

/// True iff `v` lies in the span of `basis`.
pub fn in_span(v: &[Rational], basis: &[Vec<Rational>]) -> Result<bool> {
    check_lengths(basis, v.len())?;
    if v.iter().all(Rational::is_zero) {
        return Ok(true);
    }
    let m = ExactMatrix::from_rows(basis, v.len())?;
    let r0 = rank(&m);
    let mut with = basis.to_vec();
    with.push(v.to_vec());
    let m1 = ExactMatrix::from_rows(&with, v.len())?;
    Ok(rank(&m1) == r0)
}

/// Canonical basis of a span: the nonzero rows of its RREF.
pub fn span_basis(vs: &[Vec<Rational>], len: usize) -> Result<Vec<Vec<Rational>>> {
    check_lengths(vs, len)?;
    let m = ExactMatrix::from_rows(vs, len)?;
    let (r, piv) = rref(&m);
    Ok((0..piv.len()).map(|i| r.row(i).to_vec()).collect())
}

/// Basis of span(b1) ∩ span(b2), in RREF row form.
pub fn intersect(b1: &[Vec<Rational>], b2: &[Vec<Rational>]) -> Result<Vec<Vec<Rational>>> {
    let len = b1.first().or(b2.first()).map_or(0, |v| v.len());
    check_lengths(b1, len)?;
    check_lengths(b2, len)?;
    let b1 = span_basis(b1, len)?;
    let b2 = span_basis(b2, len)?;
    if b1.is_empty() || b2.is_empty() {
        return Ok(Vec::new());
    }
    // Columns: b1 vectors then -b2 vectors; a kernel vector (c, d) gives
    // the common element Σ c_i b1_i.
    let ncols = b1.len() + b2.len();
    let mut m = ExactMatrix::zeros(len, ncols);
    for (j, v) in b1.iter().enumerate() {
        for (i, x) in v.iter().enumerate() {
            m.set(i, j, x.clone());
        }
    }
    for (j, v) in b2.iter().enumerate() {
        for (i, x) in v.iter().enumerate() {
            m.set(i, b1.len() + j, -x);
        }
    }
    let common: Vec<Vec<Rational>> = kernel_basis(&m)
        .into_iter()
        .map(|k| {
            let mut out = vec![Rational::zero(); len];
            for (c, v) in k.iter().zip(&b1) {
                if c.is_zero() {
                    continue;
                }
                for (o, x) in out.iter_mut().zip(v) {
                    *o = &*o + &(c * x);
                }
            }
            out
        })
        .collect();
    span_basis(&common, len)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| Rational::from_int(x)).collect()
    }

    #[test]
    fn rref_examples() {
        let (r, p) = rref(&ExactMatrix::identity(2));
        assert_eq!(r, ExactMatrix::identity(2));
        assert_eq!(p, vec![0, 1]);

        let (r, p) = rref(&ExactMatrix::zeros(2, 3));
        assert!(r.is_zero());
        assert!(p.is_empty());

        let (r, p) = rref(&ExactMatrix::from_i64(&[&[2, 4], &[1, 2]]));
        assert_eq!(r, ExactMatrix::from_i64(&[&[1, 2], &[0, 0]]));
        assert_eq!(p, vec![0]);
    }

    #[test]
    fn kernel_examples() {
        assert!(kernel_basis(&ExactMatrix::identity(2)).is_empty());
        assert_eq!(kernel_basis(&ExactMatrix::zeros(1, 2)), vec![q(&[1, 0]), q(&[0, 1])]);
        assert_eq!(kernel_basis(&ExactMatrix::from_i64(&[&[1, 1]])), vec![q(&[-1, 1])]);
    }

    #[test]
    fn span_examples() {
        assert!(in_span(&q(&[2, 2]), &[q(&[1, 1])]).unwrap());
        assert!(!in_span(&q(&[1, 0]), &[q(&[1, 1])]).unwrap());
        assert!(in_span(&q(&[1, 2]), &[q(&[1, 0]), q(&[0, 1])]).unwrap());
        assert!(in_span(&q(&[1, 2]), &[q(&[1])]).is_err());
    }

    #[test]
    fn intersect_examples() {
        assert!(intersect(&[q(&[1, 0])], &[q(&[0, 1])]).unwrap().is_empty());
        assert_eq!(intersect(&[q(&[1, 0]), q(&[0, 1])], &[q(&[1, 1])]).unwrap(), vec![q(&[1, 1])]);
        assert_eq!(
            intersect(&[q(&[1, 1, 0]), q(&[0, 1, 1])], &[q(&[1, 2, 1])]).unwrap(),
            vec![q(&[1, 2, 1])]
        );
    }

    #[test]
    fn rational_entries() {
        let m = ExactMatrix::new(
            1,
            2,
            vec![Rational::new(1, 2), Rational::new(1, 3)],
        )
        .unwrap();
        assert_eq!(kernel_basis(&m), vec![vec![Rational::new(-2, 3), Rational::one()]]);
    }
}
