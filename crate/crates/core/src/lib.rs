//! Conjugation in the symmetric group and the configuration graphs of
//! flocks.
//!
//! A *flock* is a conjugacy class of `S_n`, named by the partition of `n`
//! formed by its cycle lengths. Fixing a *stem* `σ` in the flock, the map
//! `T(φ) = φσφ⁻¹` sends the flock to itself. This crate enumerates the
//! solutions of `ρφρ⁻¹ = ψ`, builds the functional graph of `T`, splits it
//! into configurations (weak components), finds telomeres (nodes with no
//! preimage) and compares configurations up to graph isomorphism.
//!
//! ```
//! use flockgraph::{build_configuration, parse, telomere_set};
//!
//! let sigma = parse("(123456.)", 6)?;
//! let start = parse("(125634.)", 6)?;
//! let conf = build_configuration(&start, &sigma)?;
//! assert_eq!(conf.len(), 10);
//! assert_eq!(telomere_set(&conf).len(), 6);
//! # Ok::<(), flockgraph::Error>(())
//! ```

pub mod canon;
pub mod configurations;
pub mod conjugacy;
pub mod cycles;
mod error;
pub mod flock;
pub mod notation;
pub mod perm;
pub mod report;
pub mod verify;

pub use canon::{canonical_code, is_isomorphic, iso_classes, CanonicalCode, IsoClass};
pub use configurations::{
    atlas, atlas_with_threads, build_configuration, classify, forward_orbit, oracle_components,
    preimages_in_flock, step, telomere_closure, telomere_set, Component, ConfigurationGraph,
    NodeClass, OrbitTrace, TelomereClosure,
};
pub use conjugacy::{
    all_conjugators, are_conjugate, brute_force_conjugators, canonical_conjugator,
    count_conjugators, ConjugatorFamily,
};
pub use cycles::{partitions_of, CycleDecomposition, CycleType, Partition};
pub use error::{Error, Result, MAX_DEGREE};
pub use flock::{enumerate_flock, flock_of, flocks_of, membership, stem_permutation, Flock};
pub use notation::{format, parse, parse_strict};
pub use perm::{factorial, Permutation};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../README.md")]
    mod readme {}
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/permutations.md")]
    mod permutations {}
    #[doc = include_str!("../../../book/src/conjugation.md")]
    mod conjugation {}
    #[doc = include_str!("../../../book/src/flocks.md")]
    mod flocks {}
    #[doc = include_str!("../../../book/src/configurations.md")]
    mod configurations {}
    #[doc = include_str!("../../../book/src/isomorphism.md")]
    mod isomorphism {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
