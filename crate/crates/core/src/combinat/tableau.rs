//! Standard Young tableaux, stored as insertion-row sequences.

use std::fmt;

use serde_json::{json, Value};

use super::partition::Partition;
use crate::error::{Error, Result};

/// A standard Young tableau. `rows[i-1]` is the (1-based) row holding i;
/// equivalently a path ∅ → … → shape in the Young graph.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tableau {
    shape: Partition,
    rows: Vec<usize>,
    cols: Vec<usize>,
}

impl Tableau {
    pub fn empty() -> Self {
        Tableau { shape: Partition::empty(), rows: Vec::new(), cols: Vec::new() }
    }

    /// Builds from the insertion-row sequence; fails if some prefix is not
    /// a partition.
    pub fn from_rows(rows: &[usize]) -> Result<Self> {
        let mut t = Tableau::empty();
        for &r in rows {
            t = t.push(r)?;
        }
        Ok(t)
    }

    /// Builds from a filling given row by row, e.g. [[1,3],[2,4]].
    pub fn from_filling(filling: &[Vec<usize>]) -> Result<Self> {
        let n: usize = filling.iter().map(Vec::len).sum();
        let mut rows = vec![0; n];
        for (r, row) in filling.iter().enumerate() {
            for &v in row {
                if v == 0 || v > n || rows[v - 1] != 0 {
                    return Err(Error::InvalidArgument(format!("bad tableau filling {filling:?}")));
                }
                rows[v - 1] = r + 1;
            }
        }
        let t = Self::from_rows(&rows)?;
        if t.filling() != filling {
            return Err(Error::InvalidArgument(format!("filling {filling:?} is not standard")));
        }
        Ok(t)
    }

    /// Adds box n+1 in row `r`.
    pub fn push(&self, r: usize) -> Result<Tableau> {
        let shape = self.shape.add_box(r)?;
        let mut rows = self.rows.clone();
        let mut cols = self.cols.clone();
        rows.push(r);
        cols.push(shape.part(r));
        Ok(Tableau { shape, rows, cols })
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn n(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    /// Row of entry i (1-based).
    pub fn row_of(&self, i: usize) -> usize {
        self.rows[i - 1]
    }

    /// Column of entry i (1-based).
    pub fn col_of(&self, i: usize) -> usize {
        self.cols[i - 1]
    }

    /// The tableau on entries 1..=k.
    pub fn truncate(&self, k: usize) -> Tableau {
        Self::from_rows(&self.rows[..k.min(self.n())]).expect("prefix of a standard tableau")
    }

    /// The transposed tableau (rows and columns exchanged).
    pub fn transpose(&self) -> Tableau {
        Self::from_rows(&self.cols).expect("transpose of a standard tableau is standard")
    }

    /// Entries row by row.
    pub fn filling(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.shape.len()];
        for (i, &r) in self.rows.iter().enumerate() {
            out[r - 1].push(i + 1);
        }
        out
    }

    /// content(i) = column − row.
    pub fn content(&self, i: usize) -> Result<i64> {
        if i == 0 || i > self.n() {
            return Err(Error::IndexOutOfRange { index: i, min: 1, max: self.n() });
        }
        Ok(self.col_of(i) as i64 - self.row_of(i) as i64)
    }

    pub fn contents(&self) -> Vec<i64> {
        (1..=self.n()).map(|i| self.content(i).expect("in range")).collect()
    }

    pub fn to_json(&self) -> Value {
        json!({ "shape": self.shape.parts(), "rows": self.rows })
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .filling()
            .iter()
            .map(|r| format!("[{}]", r.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")))
            .collect();
        write!(f, "[{}]", rows.join(","))
    }
}

impl fmt::Debug for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// All standard tableaux of shape λ, ordered lexicographically by their
/// insertion-row sequences.
pub fn standard_tableaux(lambda: &Partition) -> Vec<Tableau> {
    fn rec(t: Tableau, lambda: &Partition, out: &mut Vec<Tableau>) {
        if t.n() == lambda.size() {
            out.push(t);
            return;
        }
        for (r, _) in t.shape().addable_rows() {
            if t.shape().part(r) < lambda.part(r) {
                rec(t.push(r).expect("addable"), lambda, out);
            }
        }
    }
    let mut out = Vec::new();
    rec(Tableau::empty(), lambda, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn content_examples() {
        let t = Tableau::from_filling(&[vec![1, 2]]).unwrap();
        assert_eq!(t.content(2).unwrap(), 1);
        let t = Tableau::from_filling(&[vec![1], vec![2]]).unwrap();
        assert_eq!(t.content(2).unwrap(), -1);
        let t = Tableau::from_filling(&[vec![1, 3], vec![2, 4]]).unwrap();
        assert_eq!(t.contents(), vec![0, -1, 1, 0]);
        assert!(t.content(5).is_err());
    }

    #[test]
    fn enumeration() {
        let p = |v: &[usize]| Partition::new(v.to_vec()).unwrap();
        assert_eq!(standard_tableaux(&p(&[2, 2])).len(), 2);
        assert_eq!(standard_tableaux(&p(&[5])).len(), 1);
        let t21 = standard_tableaux(&p(&[2, 1]));
        assert_eq!(t21.len(), 2);
        assert_eq!(t21[0].rows(), &[1, 1, 2]);
        assert_eq!(t21[1].rows(), &[1, 2, 1]);
    }

    #[test]
    fn filling_and_transpose() {
        let t = Tableau::from_filling(&[vec![1, 3], vec![2, 4]]).unwrap();
        assert_eq!(t.rows(), &[1, 2, 1, 2]);
        assert_eq!(t.transpose().filling(), vec![vec![1, 2], vec![3, 4]]);
        assert!(Tableau::from_filling(&[vec![2, 1]]).is_err());
        assert!(Tableau::from_rows(&[2]).is_err());
    }
}
