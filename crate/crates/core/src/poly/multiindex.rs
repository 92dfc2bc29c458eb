//! Exponent vectors ordered reverse-lexicographically.

use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

/// An exponent vector α: [n] → ℕ.
///
/// The `Ord` instance is the reverse lexicographic order: α > β iff at the
/// last position where they differ α is larger. Indices of different length
/// compare by length first.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct MultiIndex(SmallVec<[u32; 6]>);

impl MultiIndex {
    pub fn new(exps: impl IntoIterator<Item = u32>) -> Self {
        MultiIndex(exps.into_iter().collect())
    }

    pub fn zeros(n: usize) -> Self {
        MultiIndex(SmallVec::from_elem(0, n))
    }

    /// The exponent of x_i (0-based `i`).
    pub fn unit(n: usize, i: usize) -> Self {
        let mut m = Self::zeros(n);
        m.0[i] = 1;
        m
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.0.iter().map(|&e| e as usize).sum()
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn get(&self, i: usize) -> u32 {
        self.0[i]
    }

    pub fn set(&mut self, i: usize, v: u32) {
        self.0[i] = v;
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = u32> + ExactSizeIterator + '_ {
        self.0.iter().copied()
    }

    pub fn max_entry(&self) -> u32 {
        self.0.iter().copied().max().unwrap_or(0)
    }

    pub fn add(&self, other: &MultiIndex) -> MultiIndex {
        debug_assert_eq!(self.len(), other.len());
        MultiIndex(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self − other` when every entry stays non-negative.
    pub fn checked_sub(&self, other: &MultiIndex) -> Option<MultiIndex> {
        debug_assert_eq!(self.len(), other.len());
        let mut out = SmallVec::with_capacity(self.len());
        for (a, b) in self.0.iter().zip(&other.0) {
            out.push(a.checked_sub(*b)?);
        }
        Some(MultiIndex(out))
    }

    /// Entry i of the result is entry `perm[i]` of `self` (0-based).
    pub fn gather(&self, perm: &[usize]) -> MultiIndex {
        MultiIndex(perm.iter().map(|&p| self.0[p]).collect())
    }

    pub fn swapped(&self, i: usize, j: usize) -> MultiIndex {
        let mut m = self.clone();
        m.0.swap(i, j);
        m
    }

    /// Appends `extra` zero entries.
    pub fn extended(&self, extra: usize) -> MultiIndex {
        let mut m = self.clone();
        m.0.extend(std::iter::repeat_n(0, extra));
        m
    }

    /// α! = ∏ α(i)! as an integer (panics on overflow of u128).
    pub fn factorial(&self) -> u128 {
        self.0
            .iter()
            .map(|&e| (1..=e as u128).product::<u128>())
            .product()
    }

    /// The sorted exponent multiset, used to group an Sₙ-orbit.
    pub fn sorted(&self) -> MultiIndex {
        let mut v = self.0.clone();
        v.sort_unstable();
        MultiIndex(v)
    }
}

impl Ord for MultiIndex {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| {
            for (a, b) in self.0.iter().rev().zip(other.0.iter().rev()) {
                match a.cmp(b) {
                    Ordering::Equal => continue,
                    o => return o,
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for MultiIndex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl From<Vec<u32>> for MultiIndex {
    fn from(v: Vec<u32>) -> Self {
        MultiIndex(v.into_iter().collect())
    }
}

impl From<&[u32]> for MultiIndex {
    fn from(v: &[u32]) -> Self {
        MultiIndex(v.iter().copied().collect())
    }
}

/// λ^α as an ordered partition: entry i counts the positions where α takes
/// the value i. Entries run up to the largest value occurring in α.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct OrderedPartition(pub Vec<usize>);

impl OrderedPartition {
    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// The unordered partition: nonzero entries sorted decreasingly.
    pub fn to_sorted_parts(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.0.iter().copied().filter(|&x| x > 0).collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        v
    }
}

impl fmt::Display for OrderedPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

pub fn lambda_of_multiindex(alpha: &MultiIndex) -> OrderedPartition {
    let top = alpha.max_entry() as usize;
    let mut counts = vec![0usize; if alpha.is_empty() { 0 } else { top + 1 }];
    for e in alpha.iter() {
        counts[e as usize] += 1;
    }
    OrderedPartition(counts)
}
