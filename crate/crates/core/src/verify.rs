//! Self-check harness: compares every fast path against its brute-force
//! oracle for all degrees up to a bound.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::configurations::{atlas, build_configuration, oracle_components, preimages_in_flock};
use crate::conjugacy::{
    all_conjugators, are_conjugate, brute_force_conjugators, count_conjugators, ORACLE_MAX_DEGREE,
};
use crate::cycles::{partitions_of, Partition};
use crate::error::{Error, Result};
use crate::flock::Flock;
use crate::perm::{all_permutations, factorial, Permutation};

/// Exhaustive up to this degree, sampled above it.
const EXHAUSTIVE_DEGREE: usize = 4;
const SAMPLED_PAIRS: usize = 200;
const SAMPLED_STARTS: usize = 25;
const SEED: u64 = 0x5eed_f10c;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct VerifyReport {
    pub checks: Vec<Check>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    fn record(&mut self, name: String, outcome: std::result::Result<String, String>) {
        let (passed, detail) = match outcome {
            Ok(d) => (true, d),
            Err(d) => (false, d),
        };
        self.checks.push(Check {
            name,
            passed,
            detail,
        });
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let tag = if c.passed { "PASS" } else { "FAIL" };
            out.push_str(&format!("{tag}  {}: {}\n", c.name, c.detail));
        }
        let failed = self.checks.iter().filter(|c| !c.passed).count();
        out.push_str(&format!(
            "{} checks, {} failed\n",
            self.checks.len(),
            failed
        ));
        out
    }
}

/// Runs every oracle comparison for degrees `1..=n_max` (`n_max <= 7`).
pub fn verify(n_max: usize) -> Result<VerifyReport> {
    if !(1..=ORACLE_MAX_DEGREE).contains(&n_max) {
        return Err(Error::OracleTooLarge(n_max));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut report = VerifyReport::default();
    for n in 1..=n_max {
        report.record(format!("n={n} orbit-stabilizer"), orbit_stabilizer(n));
        report.record(format!("n={n} flock enumeration"), flock_enumeration(n));
        report.record(
            format!("n={n} conjugators vs oracle"),
            conjugators(n, &mut rng),
        );
        for p in partitions_of(n)? {
            let flock = Flock::new(&p)?;
            report.record(
                format!("n={n} {p} configurations"),
                configurations(&flock, &mut rng),
            );
        }
    }
    if n_max >= 6 {
        report.record("n=6 [6] golden sizes".into(), golden_six());
    }
    Ok(report)
}

fn orbit_stabilizer(n: usize) -> std::result::Result<String, String> {
    let parts = partitions_of(n).map_err(|e| e.to_string())?;
    let mut sum = 0;
    for p in &parts {
        let f = Flock::new(p).map_err(|e| e.to_string())?;
        let c = count_conjugators(&p.to_cycle_type()).map_err(|e| e.to_string())?;
        if f.size() * c != factorial(n) {
            return Err(format!("{p}: {} * {c} != {n}!", f.size()));
        }
        sum += f.size();
    }
    if sum != factorial(n) {
        return Err(format!("flock sizes sum to {sum}"));
    }
    Ok(format!("{} flocks, sizes sum to {sum}", parts.len()))
}

fn flock_enumeration(n: usize) -> std::result::Result<String, String> {
    let parts = partitions_of(n).map_err(|e| e.to_string())?;
    let mut seen = BTreeSet::new();
    for p in &parts {
        let f = Flock::new(p).map_err(|e| e.to_string())?;
        let mut count = 0;
        for phi in f.members() {
            if phi.cyclic_type() != *p || !seen.insert(phi.rank()) {
                return Err(format!("{p}: bad or repeated member {phi}"));
            }
            count += 1;
        }
        if count != f.size() {
            return Err(format!("{p}: enumerated {count}, expected {}", f.size()));
        }
    }
    if seen.len() as u64 != factorial(n) {
        return Err(format!("flocks cover {} permutations", seen.len()));
    }
    Ok(format!("{} permutations, disjoint", seen.len()))
}

fn conjugate_pairs(n: usize, rng: &mut ChaCha8Rng) -> Vec<(Permutation, Permutation)> {
    if n <= EXHAUSTIVE_DEGREE {
        let all: Vec<Permutation> = all_permutations(n).unwrap().collect();
        let mut pairs = Vec::new();
        for a in &all {
            for b in &all {
                if are_conjugate(a, b).unwrap() {
                    pairs.push((a.clone(), b.clone()));
                }
            }
        }
        pairs
    } else {
        (0..SAMPLED_PAIRS)
            .map(|_| {
                let a = Permutation::unrank(n, rng.gen_range(0..factorial(n))).unwrap();
                let alpha = Permutation::unrank(n, rng.gen_range(0..factorial(n))).unwrap();
                let b = alpha.conjugate(&a).unwrap();
                (a, b)
            })
            .collect()
    }
}

fn conjugators(n: usize, rng: &mut ChaCha8Rng) -> std::result::Result<String, String> {
    let pairs = conjugate_pairs(n, rng);
    for (phi, psi) in &pairs {
        let fam = all_conjugators(phi, psi).map_err(|e| e.to_string())?;
        let fast: Vec<Permutation> = fam.iter().collect();
        let set: BTreeSet<Permutation> = fast.iter().cloned().collect();
        if set.len() != fast.len() {
            return Err(format!("duplicate solutions for {phi}, {psi}"));
        }
        if fast.len() as u64 != fam.total() {
            return Err(format!("count mismatch for {phi}, {psi}"));
        }
        let slow = brute_force_conjugators(phi, psi).map_err(|e| e.to_string())?;
        if slow != set {
            return Err(format!("solution sets differ for {phi}, {psi}"));
        }
    }
    Ok(format!("{} conjugate pairs", pairs.len()))
}

fn configurations(flock: &Flock, rng: &mut ChaCha8Rng) -> std::result::Result<String, String> {
    let sigma = flock.stem();
    let graph = atlas(flock, sigma).map_err(|e| e.to_string())?;
    let oracle = oracle_components(flock, sigma).map_err(|e| e.to_string())?;

    let mut from_atlas: Vec<Vec<Permutation>> = graph
        .components()
        .iter()
        .map(|c| c.members.iter().map(|&i| graph.node(i).clone()).collect())
        .collect();
    from_atlas.sort();
    if from_atlas != oracle {
        return Err("atlas components differ from union-find".into());
    }

    let mut starts: Vec<usize> = (0..graph.len()).collect();
    if flock.degree() > 5 {
        starts.shuffle(rng);
        starts.truncate(SAMPLED_STARTS);
    }
    for &s in &starts {
        let phi0 = graph.node(s);
        let conf = build_configuration(phi0, sigma).map_err(|e| e.to_string())?;
        let comp = graph.component(graph.component_of(s));
        let expected: Vec<&Permutation> = comp.members.iter().map(|&i| graph.node(i)).collect();
        if conf.nodes().iter().collect::<Vec<_>>() != expected {
            return Err(format!(
                "configuration of {phi0} differs from its component"
            ));
        }
        let pre = preimages_in_flock(phi0, sigma).map_err(|e| e.to_string())?;
        let by_graph: Vec<Permutation> = graph
            .predecessors(s)
            .iter()
            .map(|&i| graph.node(i).clone())
            .collect();
        if pre != by_graph {
            return Err(format!("preimages of {phi0} differ"));
        }
    }

    let closure = graph.telomere_closure();
    if let Some(bad) = closure.counterexample {
        return Err(format!("telomere {bad} maps to a non-telomere"));
    }
    Ok(format!(
        "{} configurations, {} starts checked, telomeres closed",
        graph.components().len(),
        starts.len()
    ))
}

fn golden_six() -> std::result::Result<String, String> {
    let flock = Flock::new(&Partition::new(vec![6]).unwrap()).unwrap();
    let graph = atlas(&flock, flock.stem()).map_err(|e| e.to_string())?;
    let sizes = graph.component_sizes();
    if sizes == [2, 6, 10, 18, 42, 42] {
        Ok(format!("{sizes:?}"))
    } else {
        Err(format!("{sizes:?}"))
    }
}
