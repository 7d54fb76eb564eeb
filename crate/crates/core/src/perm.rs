//! Permutations of `{1..n}` and their group operations.
//!
//! Points are 1-based on every public surface. Internally the image table is
//! stored 0-based in a `Box<[u8]>`, which is plenty for `n <= 20`.

use std::cmp::Ordering;
use std::fmt;

use crate::cycles::{CycleDecomposition, CycleType, Partition};
use crate::error::{check_degree, Error, Result};

/// A bijection of `{1..n}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Box<[u8]>,
}

impl Permutation {
    /// The identity permutation `ε` of degree `n`.
    pub fn identity(n: usize) -> Result<Self> {
        check_degree(n)?;
        Ok(Self {
            images: (0..n as u8).collect(),
        })
    }

    /// Builds a permutation from its one-line form, `images[i - 1] = φ(i)`.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        check_degree(n)?;
        let mut seen = [false; crate::MAX_DEGREE];
        let mut raw = Vec::with_capacity(n);
        for &x in images {
            if x == 0 || x > n {
                return Err(Error::ElementOutOfRange { element: x, n });
            }
            if std::mem::replace(&mut seen[x - 1], true) {
                return Err(Error::NotABijection(n));
            }
            raw.push((x - 1) as u8);
        }
        Ok(Self { images: raw.into() })
    }

    /// Caller guarantees `raw` is a 0-based bijection with `1 <= len <= 20`.
    pub(crate) fn from_raw_unchecked(raw: Vec<u8>) -> Self {
        debug_assert!(is_bijection(&raw));
        Self { images: raw.into() }
    }

    /// The degree `n`.
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// `φ(x)` for a 1-based point `x`.
    ///
    /// Panics if `x` is not in `1..=n`.
    pub fn apply(&self, x: usize) -> usize {
        self.images[x - 1] as usize + 1
    }

    /// The one-line form `[φ(1), …, φ(n)]`.
    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x as usize + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, &x)| i == x as usize)
    }

    /// `φ∘ψ`, i.e. `x ↦ φ(ψ(x))`: `psi` is applied first.
    pub fn compose(&self, psi: &Permutation) -> Result<Self> {
        same_degree(self, psi)?;
        Ok(self.compose_unchecked(psi))
    }

    pub(crate) fn compose_unchecked(&self, psi: &Permutation) -> Self {
        let raw = psi
            .images
            .iter()
            .map(|&x| self.images[x as usize])
            .collect();
        Self { images: raw }
    }

    pub fn inverse(&self) -> Self {
        let mut raw = vec![0u8; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            raw[x as usize] = i as u8;
        }
        Self { images: raw.into() }
    }

    /// `ρφρ⁻¹` where `self` is `ρ`.
    pub fn conjugate(&self, phi: &Permutation) -> Result<Self> {
        same_degree(self, phi)?;
        Ok(self.conjugate_unchecked(phi))
    }

    /// `ρφρ⁻¹` maps `ρ(x)` to `ρ(φ(x))`, so no inverse needs to be formed.
    pub(crate) fn conjugate_unchecked(&self, phi: &Permutation) -> Self {
        let mut raw = vec![0u8; self.degree()];
        for (x, &px) in phi.images.iter().enumerate() {
            raw[self.images[x] as usize] = self.images[px as usize];
        }
        Self { images: raw.into() }
    }

    /// `φ^k` for any integer `k`.
    pub fn pow(&self, k: i64) -> Self {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut acc = Self {
            images: (0..self.degree() as u8).collect(),
        };
        for _ in 0..k.unsigned_abs() {
            acc = base.compose_unchecked(&acc);
        }
        acc
    }

    /// Cycles in canonical order: each cycle starts at its minimum and cycles
    /// are sorted by minimum. Fixed points are included.
    pub fn decompose(&self) -> CycleDecomposition {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut cycles = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x + 1);
                x = self.images[x] as usize;
            }
            cycles.push(cycle);
        }
        CycleDecomposition::from_canonical(n, cycles)
    }

    /// The cycle lengths, unsorted, without allocating a decomposition.
    pub(crate) fn cycle_lengths(&self) -> Vec<usize> {
        let n = self.degree();
        let mut seen = [false; crate::MAX_DEGREE];
        let mut lengths = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                len += 1;
                x = self.images[x] as usize;
            }
            lengths.push(len);
        }
        lengths
    }

    /// The type `C(φ) = {l₁, …, l_n}`.
    pub fn type_of(&self) -> CycleType {
        let mut counts = vec![0usize; self.degree()];
        for len in self.cycle_lengths() {
            counts[len - 1] += 1;
        }
        CycleType::from_counts_unchecked(counts)
    }

    /// The cyclic type `Z(φ)`: cycle lengths sorted ascending.
    pub fn cyclic_type(&self) -> Partition {
        let mut parts = self.cycle_lengths();
        parts.sort_unstable();
        Partition::from_sorted_unchecked(parts)
    }

    /// Position of `self` in lexicographic order of one-line forms (Lehmer
    /// code read in the factorial number system).
    pub fn rank(&self) -> u64 {
        let n = self.degree();
        let mut rank = 0u64;
        for i in 0..n {
            let smaller_later = self.images[i + 1..]
                .iter()
                .filter(|&&y| y < self.images[i])
                .count() as u64;
            rank = rank * (n - i) as u64 + smaller_later;
        }
        rank
    }

    /// Inverse of [`Permutation::rank`].
    pub fn unrank(n: usize, index: u64) -> Result<Self> {
        check_degree(n)?;
        if index >= factorial(n) {
            return Err(Error::IndexOutOfRange { index, n });
        }
        let mut digits = vec![0usize; n];
        let mut rest = index;
        for (i, d) in digits.iter_mut().enumerate().rev() {
            let radix = (n - i) as u64;
            *d = (rest % radix) as usize;
            rest /= radix;
        }
        let mut pool: Vec<u8> = (0..n as u8).collect();
        let raw = digits.into_iter().map(|d| pool.remove(d)).collect();
        Ok(Self { images: raw })
    }

    /// Advances to the lexicographically next permutation (rank + 1). Returns
    /// `false`, leaving `self` unchanged, at the last permutation.
    pub(crate) fn advance_lex(&mut self) -> bool {
        let a = &mut self.images;
        let Some(i) = (1..a.len()).rev().find(|&i| a[i - 1] < a[i]) else {
            return false;
        };
        let pivot = i - 1;
        let j = (i..a.len()).rev().find(|&j| a[j] > a[pivot]).unwrap();
        a.swap(pivot, j);
        a[i..].reverse();
        true
    }
}

impl Ord for Permutation {
    /// Degree first, then lexicographic on the one-line form, which agrees
    /// with rank order.
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.images.cmp(&other.images))
    }
}

impl PartialOrd for Permutation {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// `n!` for `n <= 20`.
pub fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

pub(crate) fn same_degree(a: &Permutation, b: &Permutation) -> Result<()> {
    if a.degree() == b.degree() {
        Ok(())
    } else {
        Err(Error::DegreeMismatch {
            left: a.degree(),
            right: b.degree(),
        })
    }
}

fn is_bijection(raw: &[u8]) -> bool {
    let mut seen = vec![false; raw.len()];
    raw.iter()
        .all(|&x| (x as usize) < raw.len() && !std::mem::replace(&mut seen[x as usize], true))
}

/// Every permutation of degree `n` in rank order.
pub fn all_permutations(n: usize) -> Result<impl Iterator<Item = Permutation>> {
    let first = Permutation::identity(n)?;
    Ok(std::iter::successors(Some(first), |p| {
        let mut next = p.clone();
        next.advance_lex().then_some(next)
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(images: &[usize]) -> Permutation {
        Permutation::from_images(images).unwrap()
    }

    #[test]
    fn identity_bounds() {
        assert_eq!(Permutation::identity(3).unwrap().images(), vec![1, 2, 3]);
        assert_eq!(Permutation::identity(1).unwrap().images(), vec![1]);
        assert_eq!(Permutation::identity(0), Err(Error::DegreeOutOfRange(0)));
        assert_eq!(Permutation::identity(21), Err(Error::DegreeOutOfRange(21)));
        assert!(Permutation::identity(20).is_ok());
    }

    #[test]
    fn rejects_non_bijections() {
        assert_eq!(
            Permutation::from_images(&[1, 1, 2]),
            Err(Error::NotABijection(3))
        );
        assert!(matches!(
            Permutation::from_images(&[1, 4, 2]),
            Err(Error::ElementOutOfRange { element: 4, n: 3 })
        ));
        assert!(Permutation::from_images(&[]).is_err());
    }

    #[test]
    fn compose_applies_right_operand_first() {
        let phi = p(&[2, 1, 3]);
        let psi = p(&[1, 3, 2]);
        // x=1: psi(1)=1, phi(1)=2
        assert_eq!(phi.compose(&psi).unwrap().images(), vec![2, 3, 1]);
        assert!(matches!(
            phi.compose(&Permutation::identity(4).unwrap()),
            Err(Error::DegreeMismatch { left: 3, right: 4 })
        ));
    }

    #[test]
    fn conjugate_matches_definition() {
        for rho in all_permutations(4).unwrap() {
            for phi in all_permutations(4).unwrap().step_by(5) {
                let slow = rho.compose(&phi).unwrap().compose(&rho.inverse()).unwrap();
                assert_eq!(rho.conjugate(&phi).unwrap(), slow);
            }
        }
    }

    #[test]
    fn unrank_three_five_is_reversal() {
        // rank order of S₃ enumerated by hand: 123 132 213 231 312 321
        let order: Vec<_> = all_permutations(3).unwrap().map(|p| p.images()).collect();
        assert_eq!(
            order,
            vec![
                vec![1, 2, 3],
                vec![1, 3, 2],
                vec![2, 1, 3],
                vec![2, 3, 1],
                vec![3, 1, 2],
                vec![3, 2, 1]
            ]
        );
        assert_eq!(Permutation::unrank(3, 5).unwrap().images(), vec![3, 2, 1]);
        assert_eq!(Permutation::identity(7).unwrap().rank(), 0);
        assert!(matches!(
            Permutation::unrank(3, 6),
            Err(Error::IndexOutOfRange { index: 6, n: 3 })
        ));
    }

    #[test]
    fn rank_round_trip_exhaustive() {
        for n in 1..=7 {
            let mut count = 0u64;
            for (i, perm) in all_permutations(n).unwrap().enumerate() {
                assert_eq!(perm.rank(), i as u64);
                assert_eq!(Permutation::unrank(n, i as u64).unwrap(), perm);
                count += 1;
            }
            assert_eq!(count, factorial(n));
        }
    }

    #[test]
    fn rank_fits_at_max_degree() {
        let last = Permutation::from_images(&(1..=20).rev().collect::<Vec<_>>()).unwrap();
        assert_eq!(last.rank(), factorial(20) - 1);
        assert_eq!(Permutation::unrank(20, factorial(20) - 1).unwrap(), last);
    }

    #[test]
    fn pow_and_inverse() {
        let sigma = p(&[2, 3, 4, 5, 6, 1]);
        assert!(sigma.pow(6).is_identity());
        assert_eq!(sigma.pow(-1), sigma.inverse());
        assert_eq!(sigma.pow(5), sigma.inverse());
        assert!(sigma.pow(0).is_identity());
    }

    #[test]
    fn type_sums_to_degree_on_s6() {
        for phi in all_permutations(6).unwrap() {
            let t = phi.type_of();
            let total: usize = t
                .counts()
                .iter()
                .enumerate()
                .map(|(i, l)| (i + 1) * l)
                .sum();
            assert_eq!(total, 6);
            assert_eq!(t.to_partition(), phi.cyclic_type());
            assert_eq!(phi.cyclic_type().to_cycle_type(), t);
        }
    }
}
