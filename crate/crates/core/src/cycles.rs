//! Cycle structure: decompositions, types and integer partitions.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{check_degree, Error, Result};
use crate::perm::Permutation;

/// The cycles of a permutation, each starting at its smallest element and
/// ordered by that element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleDecomposition {
    n: usize,
    cycles: Vec<Vec<usize>>,
}

impl CycleDecomposition {
    pub(crate) fn from_canonical(n: usize, cycles: Vec<Vec<usize>>) -> Self {
        Self { n, cycles }
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn cycles(&self) -> &[Vec<usize>] {
        &self.cycles
    }

    pub fn len(&self) -> usize {
        self.cycles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycles.is_empty()
    }

    /// Rebuilds the permutation the cycles describe.
    pub fn to_permutation(&self) -> Permutation {
        let mut raw = vec![0u8; self.n];
        for cycle in &self.cycles {
            for (i, &x) in cycle.iter().enumerate() {
                let next = cycle[(i + 1) % cycle.len()];
                raw[x - 1] = (next - 1) as u8;
            }
        }
        Permutation::from_raw_unchecked(raw)
    }

    /// Cycles ordered by `(length, minimum)`.
    pub fn by_length(&self) -> Vec<&[usize]> {
        let mut out: Vec<&[usize]> = self.cycles.iter().map(Vec::as_slice).collect();
        out.sort_by_key(|c| (c.len(), c[0]));
        out
    }
}

/// `C(φ)`: `counts[i - 1]` is the number of cycles of length `i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycleType {
    counts: Vec<usize>,
}

impl CycleType {
    pub fn new(counts: Vec<usize>) -> Result<Self> {
        let n = counts.len();
        check_degree(n)?;
        let total: usize = counts.iter().enumerate().map(|(i, l)| (i + 1) * l).sum();
        if total != n {
            return Err(Error::InvalidPartition(format!(
                "cycle type {counts:?} has weight {total}, expected {n}"
            )));
        }
        Ok(Self { counts })
    }

    pub(crate) fn from_counts_unchecked(counts: Vec<usize>) -> Self {
        Self { counts }
    }

    pub fn degree(&self) -> usize {
        self.counts.len()
    }

    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    /// Number of cycles of length `len`.
    pub fn count(&self, len: usize) -> usize {
        self.counts.get(len.wrapping_sub(1)).copied().unwrap_or(0)
    }

    pub fn to_partition(&self) -> Partition {
        let parts = self
            .counts
            .iter()
            .enumerate()
            .flat_map(|(i, &l)| std::iter::repeat_n(i + 1, l))
            .collect();
        Partition::from_sorted_unchecked(parts)
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, l) in self.counts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{l}")?;
        }
        write!(f, "}}")
    }
}

/// `Z(φ)`: cycle lengths sorted ascending, an integer partition of `n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Accepts parts in any order; they are sorted.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() || parts.contains(&0) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} must be non-empty with positive parts"
            )));
        }
        parts.sort_unstable();
        check_degree(parts.iter().sum())?;
        Ok(Self { parts })
    }

    pub(crate) fn from_sorted_unchecked(parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] <= w[1]));
        Self { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// The `n` being partitioned.
    pub fn degree(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn to_cycle_type(&self) -> CycleType {
        let mut counts = vec![0; self.degree()];
        for &k in &self.parts {
            counts[k - 1] += 1;
        }
        CycleType::from_counts_unchecked(counts)
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Self::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, k) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{k}")?;
        }
        write!(f, "]")
    }
}

/// Parses `"1,2,2"` or `"[1,2,2]"`.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('[').trim_end_matches(']');
        let parts = inner
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidPartition(format!("bad part {t:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(parts)
    }
}

/// All partitions of `n`, each non-decreasing, in lexicographic order of the
/// part lists (so `[1,1,…,1]` first and `[n]` last).
pub fn partitions_of(n: usize) -> Result<Vec<Partition>> {
    check_degree(n)?;
    let mut out = Vec::new();
    let mut current = Vec::new();
    extend_partitions(n, 1, &mut current, &mut out);
    Ok(out)
}

fn extend_partitions(rest: usize, min: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if rest == 0 {
        out.push(Partition::from_sorted_unchecked(current.clone()));
        return;
    }
    for k in min..=rest {
        // a part k must leave either nothing or at least k behind
        if rest - k != 0 && rest - k < k {
            continue;
        }
        current.push(k);
        extend_partitions(rest - k, k, current, out);
        current.pop();
    }
}
