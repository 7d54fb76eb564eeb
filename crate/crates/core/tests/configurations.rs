use std::collections::{BTreeMap, BTreeSet};

use flockgraph::perm::all_permutations;
use flockgraph::{
    atlas, atlas_with_threads, build_configuration, factorial, flocks_of, forward_orbit,
    iso_classes, oracle_components, parse, preimages_in_flock, step, telomere_closure,
    telomere_set, ConfigurationGraph, Flock, Partition, Permutation,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn p6(t: &str) -> Permutation {
    parse(t, 6).unwrap()
}

fn six_cycles() -> Flock {
    Flock::new(&Partition::new(vec![6]).unwrap()).unwrap()
}

fn node_sets(g: &ConfigurationGraph) -> Vec<Vec<Permutation>> {
    let mut out: Vec<Vec<Permutation>> = g
        .components()
        .iter()
        .map(|c| c.members.iter().map(|&i| g.node(i).clone()).collect())
        .collect();
    out.sort();
    out
}

#[test]
fn step_stays_in_flock_on_s6() {
    let all: Vec<Permutation> = all_permutations(6).unwrap().collect();
    for sigma in all.iter().step_by(17) {
        for phi in all
            .iter()
            .filter(|p| p.cyclic_type() == sigma.cyclic_type())
        {
            assert_eq!(step(phi, sigma).unwrap().cyclic_type(), phi.cyclic_type());
        }
    }
}

#[test]
fn orbit_invariants() {
    let f = six_cycles();
    let sigma = f.stem();
    for phi in f.members() {
        let o = forward_orbit(&phi, sigma).unwrap();
        let visited: Vec<&Permutation> = o.visited().collect();
        let distinct: BTreeSet<&Permutation> = visited.iter().copied().collect();
        assert_eq!(distinct.len(), visited.len());
        for w in visited.windows(2) {
            assert_eq!(step(w[0], sigma).unwrap(), *w[1]);
        }
        assert_eq!(step(o.cycle.last().unwrap(), sigma).unwrap(), o.cycle[0]);
        assert!(o.cycle_length() >= 1);
        assert!(visited.iter().all(|p| f.contains(p)));
    }
}

#[test]
fn in_degree_equals_preimage_count() {
    for n in 4..=6 {
        for f in flocks_of(n).unwrap() {
            let g = atlas(&f, f.stem()).unwrap();
            for i in (0..g.len()).step_by(3) {
                let pre = preimages_in_flock(g.node(i), f.stem()).unwrap();
                let by_graph: Vec<Permutation> = g
                    .predecessors(i)
                    .iter()
                    .map(|&j| g.node(j).clone())
                    .collect();
                assert_eq!(pre, by_graph);
                assert_eq!(g.node(g.successor(i)), &step(g.node(i), f.stem()).unwrap());
            }
        }
    }
}

#[test]
fn one_cycle_per_component_and_tails_reach_it() {
    for f in flocks_of(6).unwrap() {
        let g = atlas(&f, f.stem()).unwrap();
        let total: usize = g.components().iter().map(|c| c.size()).sum();
        assert_eq!(total as u64, f.size());
        let mut cycle_nodes = 0;
        for c in g.components() {
            cycle_nodes += c.cycle_length();
            let on_cycle: BTreeSet<usize> = c.cycle.iter().copied().collect();
            for &v in &c.members {
                let mut x = v;
                for _ in 0..c.size() {
                    x = g.successor(x);
                }
                assert!(on_cycle.contains(&x));
                assert_eq!(g.component_of(v), c.id);
            }
        }
        let recurrent = (0..g.len())
            .filter(|&v| {
                let mut x = g.successor(v);
                for _ in 0..g.len() {
                    if x == v {
                        return true;
                    }
                    x = g.successor(x);
                }
                false
            })
            .count();
        assert_eq!(recurrent, cycle_nodes);
        let s = g.index_of(f.stem()).unwrap();
        assert_eq!(g.successor(s), s);
    }
}

#[test]
fn configuration_equals_oracle_component_on_s5() {
    for f in flocks_of(5).unwrap() {
        let oracle = oracle_components(&f, f.stem()).unwrap();
        let g = atlas(&f, f.stem()).unwrap();
        assert_eq!(node_sets(&g), oracle);
        for phi in f.members() {
            let conf = build_configuration(&phi, f.stem()).unwrap();
            let comp = oracle.iter().find(|c| c.contains(&phi)).unwrap();
            assert_eq!(conf.nodes(), comp.as_slice());
        }
    }
}

#[test]
fn configuration_equals_oracle_component_sampled_s6_s7() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut cache: BTreeMap<(usize, Partition), Vec<Vec<Permutation>>> = BTreeMap::new();
    for k in 0..500 {
        let n = if k % 2 == 0 { 6 } else { 7 };
        let phi = Permutation::unrank(n, rng.gen_range(0..factorial(n))).unwrap();
        let f = Flock::containing(&phi);
        let oracle = cache
            .entry((n, f.partition().clone()))
            .or_insert_with(|| oracle_components(&f, f.stem()).unwrap());
        let conf = build_configuration(&phi, f.stem()).unwrap();
        let comp = oracle.iter().find(|c| c.contains(&phi)).unwrap();
        assert_eq!(conf.nodes(), comp.as_slice(), "{phi}");
    }
}

#[test]
fn atlas_matches_oracle_on_s6() {
    for f in flocks_of(6).unwrap() {
        let g = atlas(&f, f.stem()).unwrap();
        assert_eq!(node_sets(&g), oracle_components(&f, f.stem()).unwrap());
    }
}

#[test]
fn telomeres_closed_under_stem_conjugation() {
    for n in 1..=6 {
        for f in flocks_of(n).unwrap() {
            let closure = telomere_closure(&f, f.stem()).unwrap();
            assert!(
                closure.holds(),
                "{}: {:?}",
                f.partition(),
                closure.counterexample
            );
        }
    }
    let f = six_cycles();
    let g = atlas(&f, f.stem()).unwrap();
    let tel: BTreeSet<Permutation> = telomere_set(&g).into_iter().collect();
    let x = p6("(143256.)");
    assert!(tel.contains(&x));
    assert!(tel.contains(&f.stem().conjugate(&x).unwrap()));
}

#[test]
fn stem_invariance_on_six_cycles() {
    let f = six_cycles();
    let base = atlas(&f, f.stem()).unwrap();
    let base_classes: Vec<(String, usize)> = iso_classes(&base)
        .into_iter()
        .map(|c| (c.code.to_string(), c.components.len()))
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..10 {
        let alpha = Permutation::unrank(6, rng.gen_range(0..720)).unwrap();
        let sigma = alpha.conjugate(f.stem()).unwrap();
        let g = atlas(&f, &sigma).unwrap();
        assert_eq!(g.component_sizes(), base.component_sizes());
        let classes: Vec<(String, usize)> = iso_classes(&g)
            .into_iter()
            .map(|c| (c.code.to_string(), c.components.len()))
            .collect();
        assert_eq!(classes, base_classes);
        // the conjugate of a configuration is a configuration
        let image = alpha.conjugate(&p6("(125634.)")).unwrap();
        assert_eq!(g.component_containing(&image).unwrap().size(), 10);
    }
}

#[test]
fn examples_on_six_cycles() {
    let f = six_cycles();
    let sigma = f.stem();
    let g = atlas(&f, sigma).unwrap();
    assert_eq!(g.component_sizes(), vec![2, 6, 10, 18, 42, 42]);
    let k6: BTreeSet<Permutation> = g
        .component_containing(sigma)
        .unwrap()
        .members
        .iter()
        .map(|&i| g.node(i).clone())
        .collect();
    assert_eq!(k6, BTreeSet::from([sigma.clone(), sigma.inverse()]));
    assert_eq!(g.component_containing(&p6("(125643.)")).unwrap().size(), 18);
    assert_eq!(g.component_containing(&p6("(135624.)")).unwrap().size(), 42);
    assert_eq!(g.component_containing(&p6("(136245.)")).unwrap().size(), 42);
    assert_ne!(
        g.component_containing(&p6("(135624.)")).unwrap().id,
        g.component_containing(&p6("(136245.)")).unwrap().id
    );
    assert_eq!(g.component_containing(&p6("(162435.)")).unwrap().size(), 6);

    let k1 = build_configuration(&p6("(125634.)"), sigma).unwrap();
    let oracle = oracle_components(&f, sigma).unwrap();
    assert!(oracle.iter().any(|c| c.as_slice() == k1.nodes()));
    assert_eq!(
        telomere_set(&build_configuration(sigma, sigma).unwrap()),
        vec![sigma.inverse()]
    );
}

#[test]
fn identity_flock_is_a_self_loop() {
    for n in [1, 3, 7] {
        let f = Flock::new(&Partition::new(vec![1; n]).unwrap()).unwrap();
        let g = atlas(&f, f.stem()).unwrap();
        assert_eq!(g.len(), 1);
        assert_eq!(g.successor(0), 0);
        assert!(telomere_set(&g).is_empty());
        assert_eq!(oracle_components(&f, f.stem()).unwrap().len(), 1);
    }
}

#[test]
fn threads_give_identical_graphs() {
    for parts in [vec![7], vec![1, 2, 4], vec![3, 4]] {
        let f = Flock::new(&Partition::new(parts).unwrap()).unwrap();
        let one = atlas_with_threads(&f, f.stem(), 1).unwrap();
        for t in [2, 3, 8] {
            let many = atlas_with_threads(&f, f.stem(), t).unwrap();
            assert_eq!(one.successors(), many.successors());
            assert_eq!(one.components(), many.components());
        }
    }
}

#[test]
fn memory_guard() {
    let f = Flock::new(&Partition::new(vec![13]).unwrap()).unwrap();
    assert!(matches!(
        atlas(&f, f.stem()),
        Err(flockgraph::Error::TooLarge { .. })
    ));
}
