//! Flocks: the conjugacy classes of `S_n`, one per partition of `n`.

use crate::conjugacy::count_conjugators;
use crate::cycles::{partitions_of, Partition};
use crate::error::{check_degree, Result};
use crate::perm::{factorial, Permutation};

/// All permutations of one cyclic type, with a distinguished stem.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Flock {
    partition: Partition,
    stem: Permutation,
    size: u64,
}

impl Flock {
    /// The flock of cyclic type `p`, with its canonical stem.
    pub fn new(p: &Partition) -> Result<Self> {
        check_degree(p.degree())?;
        let stem = stem_permutation(p);
        let size = factorial(p.degree()) / count_conjugators(&p.to_cycle_type())?;
        Ok(Self {
            partition: p.clone(),
            stem,
            size,
        })
    }

    /// The flock containing `phi`.
    pub fn containing(phi: &Permutation) -> Self {
        Self::new(&phi.cyclic_type()).expect("degree of a permutation is in range")
    }

    pub fn degree(&self) -> usize {
        self.stem.degree()
    }

    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    pub fn stem(&self) -> &Permutation {
        &self.stem
    }

    /// `n! / Π lᵢ!·i^lᵢ`.
    pub fn size(&self) -> u64 {
        self.size
    }

    pub fn contains(&self, phi: &Permutation) -> bool {
        phi.degree() == self.degree() && phi.cyclic_type() == self.partition
    }

    /// Members in ascending rank order.
    pub fn members(&self) -> FlockMembers<'_> {
        FlockMembers {
            flock: self,
            next: Some(Permutation::identity(self.degree()).expect("valid degree")),
        }
    }
}

/// Consecutive integers grouped into cycles of the given lengths, shortest
/// first: `[2,3]` gives `(12.345.)`.
pub fn stem_permutation(p: &Partition) -> Permutation {
    let n = p.degree();
    let mut raw = vec![0u8; n];
    let mut start = 0;
    for &k in p.parts() {
        for i in 0..k {
            raw[start + i] = (start + (i + 1) % k) as u8;
        }
        start += k;
    }
    Permutation::from_raw_unchecked(raw)
}

pub fn flock_of(p: &Partition) -> Result<Flock> {
    Flock::new(p)
}

pub fn membership(f: &Flock, phi: &Permutation) -> bool {
    f.contains(phi)
}

/// All flocks of `S_n`, in partition order.
pub fn flocks_of(n: usize) -> Result<Vec<Flock>> {
    partitions_of(n)?.iter().map(Flock::new).collect()
}

/// Walks `S_n` in lexicographic (= rank) order and keeps the members.
#[derive(Debug, Clone)]
pub struct FlockMembers<'a> {
    flock: &'a Flock,
    next: Option<Permutation>,
}

impl Iterator for FlockMembers<'_> {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        loop {
            let current = self.next.take()?;
            let mut following = current.clone();
            if following.advance_lex() {
                self.next = Some(following);
            }
            if self.flock.contains(&current) {
                return Some(current);
            }
        }
    }
}

pub fn enumerate_flock(f: &Flock) -> FlockMembers<'_> {
    f.members()
}
