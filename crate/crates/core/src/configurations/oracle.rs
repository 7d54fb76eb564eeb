use std::collections::HashMap;

use super::require_stem;
use crate::conjugacy::ORACLE_MAX_DEGREE;
use crate::error::{Error, Result};
use crate::flock::Flock;
use crate::perm::{factorial, Permutation};

/// Disjoint sets with path halving and union by size.
#[derive(Debug, Clone)]
pub struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
            size: vec![1; n],
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns `false` if `a` and `b` were already joined.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut a, mut b) = (self.find(a), self.find(b));
        if a == b {
            return false;
        }
        if self.size[a] < self.size[b] {
            std::mem::swap(&mut a, &mut b);
        }
        self.parent[b] = a;
        self.size[a] += self.size[b];
        true
    }

    pub fn same(&mut self, a: usize, b: usize) -> bool {
        self.find(a) == self.find(b)
    }
}

/// Weak components of the step-map graph on `flock`, computed the slow way:
/// members by filtering every rank of `S_n`, edges by explicit
/// `φ∘σ∘φ⁻¹`, components by union-find. Each component is sorted and the
/// list is ordered by smallest member.
pub fn oracle_components(flock: &Flock, sigma: &Permutation) -> Result<Vec<Vec<Permutation>>> {
    require_stem(flock, sigma)?;
    let n = flock.degree();
    if n > ORACLE_MAX_DEGREE {
        return Err(Error::OracleTooLarge(n));
    }
    let z = sigma.cyclic_type();
    let mut members = Vec::new();
    for r in 0..factorial(n) {
        let phi = Permutation::unrank(n, r)?;
        if phi.cyclic_type() == z {
            members.push(phi);
        }
    }
    let index: HashMap<&Permutation, usize> =
        members.iter().enumerate().map(|(i, p)| (p, i)).collect();

    let mut sets = UnionFind::new(members.len());
    for (i, phi) in members.iter().enumerate() {
        let next = phi.compose(sigma)?.compose(&phi.inverse())?;
        sets.union(i, index[&next]);
    }

    let mut groups: HashMap<usize, Vec<Permutation>> = HashMap::new();
    for (i, phi) in members.iter().enumerate() {
        groups.entry(sets.find(i)).or_default().push(phi.clone());
    }
    let mut out: Vec<Vec<Permutation>> = groups.into_values().collect();
    for g in &mut out {
        g.sort();
    }
    out.sort();
    Ok(out)
}
