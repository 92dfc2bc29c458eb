//! Set partitions of [n].

use std::fmt;

use super::partition::Partition;
use crate::error::{Error, Result};

/// An unordered partition of {1, …, n} into nonempty blocks.
///
/// Blocks are kept sorted internally and ordered by (size descending,
/// smallest element ascending), so equal set partitions compare equal.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetPartition {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

impl SetPartition {
    pub fn new(n: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = vec![false; n];
        let mut blocks: Vec<Vec<usize>> = blocks
            .into_iter()
            .map(|mut b| {
                b.sort_unstable();
                b
            })
            .collect();
        for b in &blocks {
            if b.is_empty() {
                return Err(Error::InvalidArgument("empty block".into()));
            }
            for &v in b {
                if v == 0 || v > n {
                    return Err(Error::IndexOutOfRange { index: v, min: 1, max: n });
                }
                if std::mem::replace(&mut seen[v - 1], true) {
                    return Err(Error::InvalidArgument(format!("blocks overlap at {v}")));
                }
            }
        }
        if let Some(i) = seen.iter().position(|s| !s) {
            return Err(Error::InvalidArgument(format!("{} is not covered by any block", i + 1)));
        }
        blocks.sort_by(|a, b| b.len().cmp(&a.len()).then(a[0].cmp(&b[0])));
        Ok(SetPartition { n, blocks })
    }

    /// Parses "{1,2},{3}"; n is the largest element.
    pub fn parse(s: &str) -> Result<Self> {
        let err = || Error::Parse(format!("bad set partition {s:?}"));
        let mut blocks = Vec::new();
        let mut rest = s.trim();
        while !rest.is_empty() {
            let body = rest.strip_prefix('{').ok_or_else(err)?;
            let end = body.find('}').ok_or_else(err)?;
            let block: Vec<usize> = body[..end]
                .split(',')
                .map(str::trim)
                .filter(|t| !t.is_empty())
                .map(|t| t.parse().map_err(|_| err()))
                .collect::<Result<_>>()?;
            blocks.push(block);
            rest = body[end + 1..].trim_start().trim_start_matches(',').trim_start();
        }
        let n = blocks.iter().flatten().copied().max().unwrap_or(0);
        Self::new(n, blocks)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// λ^P: the block sizes in decreasing order.
    pub fn shape(&self) -> Partition {
        Partition::new(self.blocks.iter().map(Vec::len).collect()).expect("sorted by size")
    }
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self
            .blocks
            .iter()
            .map(|b| format!("{{{}}}", b.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")))
            .collect();
        write!(f, "{}", s.join(","))
    }
}

impl fmt::Debug for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// All set partitions of [n] (Bell many), via restricted growth strings.
pub fn set_partitions(n: usize) -> Vec<SetPartition> {
    fn rec(i: usize, n: usize, labels: &mut Vec<usize>, nblocks: usize, out: &mut Vec<SetPartition>) {
        if i == n {
            let mut blocks = vec![Vec::new(); nblocks];
            for (v, &l) in labels.iter().enumerate() {
                blocks[l].push(v + 1);
            }
            out.push(SetPartition::new(n, blocks).expect("valid by construction"));
            return;
        }
        for l in 0..=nblocks {
            labels.push(l);
            rec(i + 1, n, labels, nblocks.max(l + 1), out);
            labels.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, &mut Vec::new(), 0, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bell_numbers() {
        let b: Vec<usize> = (0..7).map(|n| set_partitions(n).len()).collect();
        assert_eq!(b, vec![1, 1, 2, 5, 15, 52, 203]);
    }

    #[test]
    fn parse_and_canonical_order() {
        let p = SetPartition::parse("{3},{2,1}").unwrap();
        assert_eq!(p.blocks(), &[vec![1, 2], vec![3]]);
        assert_eq!(p.to_string(), "{1,2},{3}");
        assert!(SetPartition::parse("{1,2},{2}").is_err());
        assert!(SetPartition::new(3, vec![vec![1, 2]]).is_err());
    }
}
