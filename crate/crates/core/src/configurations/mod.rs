//! The step map `T(φ) = φσφ⁻¹` on a flock and its functional graph.
//!
//! `T` preserves cyclic type, so for a stem `σ` it maps the flock of `σ`
//! into itself. Following `T` from any start eventually repeats (a rho
//! shape), and the weakly connected components of the graph of `T` are the
//! configurations of the flock.

mod graph;
mod oracle;

use std::collections::HashMap;

pub use graph::{
    atlas, atlas_with_threads, build_configuration, telomere_closure, telomere_set, Component,
    ConfigurationGraph, TelomereClosure, ATLAS_MAX_NODES,
};
pub use oracle::{oracle_components, UnionFind};

use crate::conjugacy::all_conjugators;
use crate::error::{Error, Result};
use crate::flock::Flock;
use crate::perm::{same_degree, Permutation};

/// One application of the step map: `φσφ⁻¹`.
pub fn step(phi: &Permutation, sigma: &Permutation) -> Result<Permutation> {
    phi.conjugate(sigma)
}

/// The forward orbit of a start permutation under the step map, split into
/// the pre-periodic tail and the cycle it falls into.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitTrace {
    pub start: Permutation,
    pub tail: Vec<Permutation>,
    pub cycle: Vec<Permutation>,
}

impl OrbitTrace {
    pub fn tail_length(&self) -> usize {
        self.tail.len()
    }

    pub fn cycle_length(&self) -> usize {
        self.cycle.len()
    }

    /// Tail followed by cycle, in visiting order.
    pub fn visited(&self) -> impl Iterator<Item = &Permutation> {
        self.tail.iter().chain(&self.cycle)
    }
}

pub(crate) fn require_in_flock(phi: &Permutation, sigma: &Permutation) -> Result<()> {
    same_degree(phi, sigma)?;
    let z = sigma.cyclic_type();
    if phi.cyclic_type() == z {
        Ok(())
    } else {
        Err(Error::NotInFlock {
            phi: phi.to_string(),
            partition: z.to_string(),
        })
    }
}

/// Iterates the step map from `phi0` until the first repeat.
pub fn forward_orbit(phi0: &Permutation, sigma: &Permutation) -> Result<OrbitTrace> {
    require_in_flock(phi0, sigma)?;
    let mut position: HashMap<Permutation, usize> = HashMap::new();
    let mut seq = Vec::new();
    let mut current = phi0.clone();
    let repeat_at = loop {
        if let Some(&i) = position.get(&current) {
            break i;
        }
        position.insert(current.clone(), seq.len());
        let next = current.conjugate_unchecked(sigma);
        seq.push(current);
        current = next;
    };
    let cycle = seq.split_off(repeat_at);
    Ok(OrbitTrace {
        start: phi0.clone(),
        tail: seq,
        cycle,
    })
}

/// All `ρ` in the flock of `σ` with `ρσρ⁻¹ = ψ`, sorted by rank.
pub fn preimages_in_flock(psi: &Permutation, sigma: &Permutation) -> Result<Vec<Permutation>> {
    let family = all_conjugators(sigma, psi)?;
    let z = sigma.cyclic_type();
    let mut out: Vec<Permutation> = family.iter().filter(|rho| rho.cyclic_type() == z).collect();
    out.sort();
    Ok(out)
}

/// How many in-flock preimages a node has.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NodeClass {
    /// No preimage: a source of the graph.
    Telomere,
    /// Exactly one preimage.
    Simple,
    /// Two or more preimages; carries the count.
    Branching(usize),
}

impl NodeClass {
    pub fn from_count(count: usize) -> Self {
        match count {
            0 => NodeClass::Telomere,
            1 => NodeClass::Simple,
            k => NodeClass::Branching(k),
        }
    }

    pub fn preimage_count(self) -> usize {
        match self {
            NodeClass::Telomere => 0,
            NodeClass::Simple => 1,
            NodeClass::Branching(k) => k,
        }
    }

    pub fn is_telomere(self) -> bool {
        self == NodeClass::Telomere
    }
}

pub fn classify(psi: &Permutation, sigma: &Permutation) -> Result<NodeClass> {
    Ok(NodeClass::from_count(preimages_in_flock(psi, sigma)?.len()))
}

/// Checks that `sigma` is a member of `flock`.
pub(crate) fn require_stem(flock: &Flock, sigma: &Permutation) -> Result<()> {
    if flock.contains(sigma) {
        Ok(())
    } else {
        Err(Error::NotInFlock {
            phi: sigma.to_string(),
            partition: flock.partition().to_string(),
        })
    }
}
