//! Integer partitions and the Young graph.

use std::fmt;

use crate::error::{Error, Result};

/// A partition λ = (λ(1) ≥ λ(2) ≥ … > 0); λ(i) = 0 beyond the last part.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Validates the parts; trailing zeros are dropped.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidArgument(format!("{parts:?} is not weakly decreasing")));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidArgument(format!("{parts:?} has an interior zero")));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// |λ|.
    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// λ(r) for 1-based r, zero past the end.
    pub fn part(&self, r: usize) -> usize {
        if r == 0 {
            return usize::MAX;
        }
        self.0.get(r - 1).copied().unwrap_or(0)
    }

    /// λᶜ(i) = #{m : λ(m) ≥ i}.
    pub fn conjugate(&self) -> Partition {
        let top = self.0.first().copied().unwrap_or(0);
        Partition((1..=top).map(|i| self.0.iter().filter(|&&p| p >= i).count()).collect())
    }

    /// Rows where a box can be added, with a = λ(r): every r with
    /// λ(r−1) > λ(r), counting row 1 and the first empty row.
    pub fn addable_rows(&self) -> Vec<(usize, usize)> {
        (1..=self.len() + 1)
            .filter(|&r| self.part(r - 1) > self.part(r))
            .map(|r| (r, self.part(r)))
            .collect()
    }

    /// Rows whose last box can be removed, leaving a partition.
    pub fn removable_rows(&self) -> Vec<usize> {
        (1..=self.len()).filter(|&r| self.part(r) > self.part(r + 1)).collect()
    }

    /// λ with one more box in row r (1-based).
    pub fn add_box(&self, r: usize) -> Result<Partition> {
        if r == 0 || r > self.len() + 1 || self.part(r - 1) <= self.part(r) {
            return Err(Error::InvalidArgument(format!("row {r} is not addable for {self}")));
        }
        let mut parts = self.0.clone();
        if r == parts.len() + 1 {
            parts.push(1);
        } else {
            parts[r - 1] += 1;
        }
        Ok(Partition(parts))
    }

    /// Hook length at box (row r, column c), both 1-based.
    pub fn hook(&self, r: usize, c: usize) -> usize {
        let arm = self.part(r) - c;
        let leg = self.0.iter().skip(r).filter(|&&p| p >= c).count();
        arm + leg + 1
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!(self.0)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// All partitions of n, reverse-lexicographically decreasing ((n) first).
pub fn partitions(n: usize) -> Vec<Partition> {
    fn rec(left: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if left == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=left.min(max)).rev() {
            cur.push(p);
            rec(left - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// Number of standard tableaux of shape λ by the hook length formula.
pub fn syt_count(lambda: &Partition) -> u128 {
    let n = lambda.size();
    let num: u128 = (1..=n as u128).product();
    let hooks: u128 = (1..=lambda.len())
        .flat_map(|r| (1..=lambda.part(r)).map(move |c| (r, c)))
        .map(|(r, c)| lambda.hook(r, c) as u128)
        .product();
    num / hooks
}
