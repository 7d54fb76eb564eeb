//! Solutions of the conjugation equation `ρφρ⁻¹ = ψ`.
//!
//! When `φ` and `ψ` have the same type, every solution is obtained by
//! pairing each cycle of `φ` with a cycle of `ψ` of the same length and
//! choosing where in the target cycle the source cycle starts. A class of
//! `m` cycles of length `k` contributes `m!·k^m` choices, so the solution
//! count is `Π lᵢ!·i^lᵢ`.

use std::collections::BTreeSet;

use crate::cycles::CycleType;
use crate::error::{Error, Result};
use crate::perm::{all_permutations, same_degree, Permutation};

/// `true` iff `φ` and `ψ` have the same type, i.e. some `ρ` conjugates one
/// into the other.
pub fn are_conjugate(phi: &Permutation, psi: &Permutation) -> Result<bool> {
    same_degree(phi, psi)?;
    Ok(phi.cyclic_type() == psi.cyclic_type())
}

fn require_conjugate(phi: &Permutation, psi: &Permutation) -> Result<()> {
    if are_conjugate(phi, psi)? {
        Ok(())
    } else {
        Err(Error::NotConjugate {
            left: phi.type_of().to_string(),
            right: psi.type_of().to_string(),
        })
    }
}

/// Exact number of solutions `Π lᵢ!·i^lᵢ` of `ρφρ⁻¹ = ψ` for `φ` of type `t`.
/// This is also the order of the centralizer of `φ`.
pub fn count_conjugators(t: &CycleType) -> Result<u64> {
    let mut total = 1u64;
    for (i, &l) in t.counts().iter().enumerate() {
        let len = (i + 1) as u64;
        for j in 1..=l as u64 {
            total = total
                .checked_mul(j)
                .and_then(|x| x.checked_mul(len))
                .ok_or(Error::Overflow)?;
        }
    }
    Ok(total)
}

/// The solution `β` that maps the cycles of `φ` onto those of `ψ` position by
/// position, both listed by `(length, minimum)` and started at their minima.
pub fn canonical_conjugator(phi: &Permutation, psi: &Permutation) -> Result<Permutation> {
    Ok(all_conjugators(phi, psi)?.base().clone())
}

/// One block of equal-length cycles: `phi_cycles[j]` may be sent onto any of
/// `psi_cycles`, starting at any of its `len` positions.
#[derive(Debug, Clone)]
struct LengthClass {
    len: usize,
    phi_cycles: Vec<Vec<usize>>,
    psi_cycles: Vec<Vec<usize>>,
}

/// Every solution of `ρφρ⁻¹ = ψ`, described lazily.
#[derive(Debug, Clone)]
pub struct ConjugatorFamily {
    phi: Permutation,
    psi: Permutation,
    base: Permutation,
    classes: Vec<LengthClass>,
    total: u64,
}

impl ConjugatorFamily {
    pub fn phi(&self) -> &Permutation {
        &self.phi
    }

    pub fn psi(&self) -> &Permutation {
        &self.psi
    }

    /// The canonical solution, also the first one enumerated.
    pub fn base(&self) -> &Permutation {
        &self.base
    }

    /// `(multiplicity, length)` for each distinct cycle length, ascending.
    pub fn length_classes(&self) -> Vec<(usize, usize)> {
        self.classes
            .iter()
            .map(|c| (c.phi_cycles.len(), c.len))
            .collect()
    }

    /// Number of solutions.
    pub fn total(&self) -> u64 {
        self.total
    }

    /// Solutions in enumeration order. Classes are odometer digits with the
    /// shortest length most significant; inside a class the assignment of
    /// cycles (lexicographic) is more significant than the rotation offsets,
    /// which count little-endian.
    pub fn iter(&self) -> Conjugators<'_> {
        Conjugators {
            family: self,
            state: Some(
                self.classes
                    .iter()
                    .map(|c| ClassState {
                        assignment: (0..c.phi_cycles.len()).collect(),
                        offsets: vec![0; c.phi_cycles.len()],
                    })
                    .collect(),
            ),
        }
    }
}

impl<'a> IntoIterator for &'a ConjugatorFamily {
    type Item = Permutation;
    type IntoIter = Conjugators<'a>;

    fn into_iter(self) -> Self::IntoIter {
        self.iter()
    }
}

#[derive(Debug, Clone)]
struct ClassState {
    assignment: Vec<usize>,
    offsets: Vec<usize>,
}

/// Cursor over a [`ConjugatorFamily`].
#[derive(Debug, Clone)]
pub struct Conjugators<'a> {
    family: &'a ConjugatorFamily,
    state: Option<Vec<ClassState>>,
}

impl ConjugatorFamily {
    fn solution_at(&self, state: &[ClassState]) -> Permutation {
        let mut raw = vec![0u8; self.phi.degree()];
        for (class, st) in self.classes.iter().zip(state) {
            let k = class.len;
            for (j, source) in class.phi_cycles.iter().enumerate() {
                let target = &class.psi_cycles[st.assignment[j]];
                for (t, &x) in source.iter().enumerate() {
                    raw[x - 1] = (target[(t + st.offsets[j]) % k] - 1) as u8;
                }
            }
        }
        Permutation::from_raw_unchecked(raw)
    }
}

impl Iterator for Conjugators<'_> {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let state = self.state.as_mut()?;
        let out = self.family.solution_at(state);
        let mut carried = true;
        for (class, st) in self.family.classes.iter().zip(state.iter_mut()).rev() {
            if advance_offsets(&mut st.offsets, class.len) {
                carried = false;
                break;
            }
            if next_lex(&mut st.assignment) {
                carried = false;
                break;
            }
            st.assignment.sort_unstable();
        }
        if carried {
            self.state = None;
        }
        Some(out)
    }
}

/// Little-endian counter in base `radix`; `false` on wrap-around.
fn advance_offsets(offsets: &mut [usize], radix: usize) -> bool {
    for d in offsets.iter_mut() {
        *d += 1;
        if *d < radix {
            return true;
        }
        *d = 0;
    }
    false
}

fn next_lex(a: &mut [usize]) -> bool {
    let Some(i) = (1..a.len()).rev().find(|&i| a[i - 1] < a[i]) else {
        return false;
    };
    let j = (i..a.len()).rev().find(|&j| a[j] > a[i - 1]).unwrap();
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

/// Describes every `ρ` with `ρφρ⁻¹ = ψ`.
pub fn all_conjugators(phi: &Permutation, psi: &Permutation) -> Result<ConjugatorFamily> {
    require_conjugate(phi, psi)?;
    let phi_cycles = phi.decompose();
    let psi_cycles = psi.decompose();
    let phi_sorted = phi_cycles.by_length();
    let psi_sorted = psi_cycles.by_length();

    let mut classes: Vec<LengthClass> = Vec::new();
    for (a, b) in phi_sorted.iter().zip(&psi_sorted) {
        debug_assert_eq!(a.len(), b.len());
        match classes.last_mut() {
            Some(c) if c.len == a.len() => {
                c.phi_cycles.push(a.to_vec());
                c.psi_cycles.push(b.to_vec());
            }
            _ => classes.push(LengthClass {
                len: a.len(),
                phi_cycles: vec![a.to_vec()],
                psi_cycles: vec![b.to_vec()],
            }),
        }
    }

    let mut raw = vec![0u8; phi.degree()];
    for (a, b) in phi_sorted.iter().zip(&psi_sorted) {
        for (&x, &y) in a.iter().zip(b.iter()) {
            raw[x - 1] = (y - 1) as u8;
        }
    }
    let base = Permutation::from_raw_unchecked(raw);
    let total = count_conjugators(&phi.type_of())?;
    Ok(ConjugatorFamily {
        phi: phi.clone(),
        psi: psi.clone(),
        base,
        classes,
        total,
    })
}

/// Largest degree the brute-force oracle accepts.
pub const ORACLE_MAX_DEGREE: usize = 7;

/// Filters all of `S_n` by `ρφρ⁻¹ = ψ`. Independent of [`all_conjugators`].
pub fn brute_force_conjugators(
    phi: &Permutation,
    psi: &Permutation,
) -> Result<BTreeSet<Permutation>> {
    same_degree(phi, psi)?;
    let n = phi.degree();
    if n > ORACLE_MAX_DEGREE {
        return Err(Error::OracleTooLarge(n));
    }
    let out = all_permutations(n)?
        .filter(|rho| {
            let lhs = rho.compose_unchecked(phi).compose_unchecked(&rho.inverse());
            lhs == *psi
        })
        .collect();
    Ok(out)
}
