use std::collections::{BTreeSet, HashMap};

use super::{forward_orbit, preimages_in_flock, require_stem, NodeClass};
use crate::canon::{canonical_code, CanonicalCode};
use crate::error::{Error, Result};
use crate::flock::Flock;
use crate::perm::Permutation;

/// Largest flock [`atlas`] will materialize.
pub const ATLAS_MAX_NODES: u64 = 20_000_000;

/// One weakly connected component (a configuration).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    /// Position in the graph's component list, ordered by `(size, smallest
    /// member rank)`.
    pub id: usize,
    /// Node indices, ascending (so ascending rank).
    pub members: Vec<usize>,
    /// The periodic part in successor order, starting at its lowest-rank node.
    pub cycle: Vec<usize>,
    pub telomere_count: usize,
}

impl Component {
    pub fn size(&self) -> usize {
        self.members.len()
    }

    pub fn cycle_length(&self) -> usize {
        self.cycle.len()
    }
}

/// The functional graph of the step map restricted to a set of flock members
/// closed under successors and in-flock predecessors: either a single
/// configuration or the whole flock.
///
/// Nodes are indexed by position in rank order.
#[derive(Debug, Clone)]
pub struct ConfigurationGraph {
    sigma: Permutation,
    nodes: Vec<Permutation>,
    ranks: Vec<u64>,
    successor: Vec<usize>,
    predecessors: Vec<Vec<usize>>,
    component_of: Vec<usize>,
    components: Vec<Component>,
}

impl ConfigurationGraph {
    /// `nodes` sorted by rank, `successor` indexed into `nodes`.
    fn assemble(sigma: Permutation, nodes: Vec<Permutation>, successor: Vec<usize>) -> Self {
        let ranks = nodes.iter().map(Permutation::rank).collect();
        let mut predecessors = vec![Vec::new(); nodes.len()];
        for (v, &s) in successor.iter().enumerate() {
            predecessors[s].push(v);
        }
        let (component_of, components) = label_components(&successor, &predecessors);
        Self {
            sigma,
            nodes,
            ranks,
            successor,
            predecessors,
            component_of,
            components,
        }
    }

    pub fn sigma(&self) -> &Permutation {
        &self.sigma
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn nodes(&self) -> &[Permutation] {
        &self.nodes
    }

    pub fn node(&self, i: usize) -> &Permutation {
        &self.nodes[i]
    }

    pub fn rank_of(&self, i: usize) -> u64 {
        self.ranks[i]
    }

    pub fn index_of(&self, phi: &Permutation) -> Option<usize> {
        if phi.degree() != self.sigma.degree() {
            return None;
        }
        self.ranks.binary_search(&phi.rank()).ok()
    }

    pub fn successor(&self, i: usize) -> usize {
        self.successor[i]
    }

    pub fn successors(&self) -> &[usize] {
        &self.successor
    }

    /// In-flock preimages of node `i`, ascending.
    pub fn predecessors(&self, i: usize) -> &[usize] {
        &self.predecessors[i]
    }

    pub fn class_of(&self, i: usize) -> NodeClass {
        NodeClass::from_count(self.predecessors[i].len())
    }

    pub fn is_telomere(&self, i: usize) -> bool {
        self.predecessors[i].is_empty()
    }

    /// Telomere indices, ascending.
    pub fn telomeres(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.is_telomere(i)).collect()
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn component(&self, id: usize) -> &Component {
        &self.components[id]
    }

    pub fn component_of(&self, i: usize) -> usize {
        self.component_of[i]
    }

    /// The component holding `phi`, if it is a node.
    pub fn component_containing(&self, phi: &Permutation) -> Option<&Component> {
        self.index_of(phi)
            .map(|i| self.component(self.component_of[i]))
    }

    pub fn is_on_cycle(&self, i: usize) -> bool {
        self.components[self.component_of[i]].cycle.contains(&i)
    }

    /// Successor table of one component in member-local indices.
    pub fn local_successors(&self, id: usize) -> Vec<usize> {
        let members = &self.components[id].members;
        let local: HashMap<usize, usize> =
            members.iter().enumerate().map(|(l, &g)| (g, l)).collect();
        members.iter().map(|g| local[&self.successor[*g]]).collect()
    }

    /// Label-free code of component `id`.
    pub fn component_code(&self, id: usize) -> CanonicalCode {
        canonical_code(&self.local_successors(id)).expect("components are connected")
    }

    /// Sizes of all components, ascending.
    pub fn component_sizes(&self) -> Vec<usize> {
        self.components.iter().map(Component::size).collect()
    }
}

/// Finds the cycle of each component by walking forward, then floods each
/// component backward from its cycle. Component ids follow `(size, lowest
/// member index)`.
fn label_components(
    successor: &[usize],
    predecessors: &[Vec<usize>],
) -> (Vec<usize>, Vec<Component>) {
    const UNSEEN: usize = usize::MAX;
    let n = successor.len();
    let mut walk_mark = vec![UNSEEN; n];
    let mut cycles: Vec<Vec<usize>> = Vec::new();
    for start in 0..n {
        if walk_mark[start] != UNSEEN {
            continue;
        }
        let mut v = start;
        while walk_mark[v] == UNSEEN {
            walk_mark[v] = start;
            v = successor[v];
        }
        if walk_mark[v] == start {
            let mut cycle = vec![v];
            let mut u = successor[v];
            while u != v {
                cycle.push(u);
                u = successor[u];
            }
            let lowest = (0..cycle.len()).min_by_key(|&i| cycle[i]).unwrap();
            cycle.rotate_left(lowest);
            cycles.push(cycle);
        }
    }

    let mut comp = vec![UNSEEN; n];
    let mut raw: Vec<(Vec<usize>, Vec<usize>)> = Vec::with_capacity(cycles.len());
    for (c, cycle) in cycles.into_iter().enumerate() {
        let mut members = Vec::new();
        let mut stack = cycle.clone();
        for &v in &cycle {
            comp[v] = c;
        }
        while let Some(v) = stack.pop() {
            members.push(v);
            for &u in &predecessors[v] {
                if comp[u] == UNSEEN {
                    comp[u] = c;
                    stack.push(u);
                }
            }
        }
        members.sort_unstable();
        raw.push((members, cycle));
    }

    let mut order: Vec<usize> = (0..raw.len()).collect();
    order.sort_by_key(|&c| (raw[c].0.len(), raw[c].0[0]));
    let mut relabel = vec![0; raw.len()];
    for (id, &c) in order.iter().enumerate() {
        relabel[c] = id;
    }
    let mut slots: Vec<Option<(Vec<usize>, Vec<usize>)>> = raw.into_iter().map(Some).collect();
    let components = order
        .iter()
        .enumerate()
        .map(|(id, &c)| {
            let (members, cycle) = slots[c].take().unwrap();
            let telomere_count = members
                .iter()
                .filter(|&&v| predecessors[v].is_empty())
                .count();
            Component {
                id,
                members,
                cycle,
                telomere_count,
            }
        })
        .collect();
    let component_of = comp.into_iter().map(|c| relabel[c]).collect();
    (component_of, components)
}

/// The configuration of `phi0`: its forward orbit, then repeated backward
/// closure through in-flock preimages until no new permutation appears.
pub fn build_configuration(phi0: &Permutation, sigma: &Permutation) -> Result<ConfigurationGraph> {
    let orbit = forward_orbit(phi0, sigma)?;
    let mut found: BTreeSet<Permutation> = orbit.visited().cloned().collect();
    let mut frontier: Vec<Permutation> = orbit.visited().cloned().collect();
    while let Some(psi) = frontier.pop() {
        for rho in preimages_in_flock(&psi, sigma)? {
            if found.insert(rho.clone()) {
                frontier.push(rho);
            }
        }
    }
    let nodes: Vec<Permutation> = found.into_iter().collect();
    let successor = nodes
        .iter()
        .map(|phi| {
            let next = phi.conjugate_unchecked(sigma);
            nodes
                .binary_search(&next)
                .expect("node set is closed under the step map")
        })
        .collect();
    Ok(ConfigurationGraph::assemble(
        sigma.clone(),
        nodes,
        successor,
    ))
}

/// The full functional graph on `flock` for stem `sigma`, single-threaded.
pub fn atlas(flock: &Flock, sigma: &Permutation) -> Result<ConfigurationGraph> {
    atlas_with_threads(flock, sigma, 1)
}

/// As [`atlas`], computing successors on `threads` workers over disjoint
/// rank ranges. The result does not depend on `threads`.
pub fn atlas_with_threads(
    flock: &Flock,
    sigma: &Permutation,
    threads: usize,
) -> Result<ConfigurationGraph> {
    require_stem(flock, sigma)?;
    if flock.size() > ATLAS_MAX_NODES {
        return Err(Error::TooLarge {
            size: flock.size(),
            limit: ATLAS_MAX_NODES,
        });
    }
    let nodes: Vec<Permutation> = flock.members().collect();
    debug_assert_eq!(nodes.len() as u64, flock.size());
    let ranks: Vec<u64> = nodes.iter().map(Permutation::rank).collect();
    let index = |phi: &Permutation| {
        ranks
            .binary_search(&phi.rank())
            .expect("step map preserves the flock")
    };

    let threads = threads.max(1);
    let successor: Vec<usize> = if threads == 1 || nodes.len() < 2 * threads {
        nodes
            .iter()
            .map(|phi| index(&phi.conjugate_unchecked(sigma)))
            .collect()
    } else {
        let chunk = nodes.len().div_ceil(threads);
        std::thread::scope(|scope| {
            let handles: Vec<_> = nodes
                .chunks(chunk)
                .map(|part| {
                    let index = &index;
                    scope.spawn(move || {
                        part.iter()
                            .map(|phi| index(&phi.conjugate_unchecked(sigma)))
                            .collect::<Vec<_>>()
                    })
                })
                .collect();
            handles
                .into_iter()
                .flat_map(|h| h.join().expect("successor worker panicked"))
                .collect()
        })
    };
    Ok(ConfigurationGraph::assemble(
        sigma.clone(),
        nodes,
        successor,
    ))
}

/// Telomeres of `graph` as permutations, ascending.
pub fn telomere_set(graph: &ConfigurationGraph) -> Vec<Permutation> {
    graph
        .telomeres()
        .into_iter()
        .map(|i| graph.node(i).clone())
        .collect()
}

/// Outcome of checking that telomeres stay telomeres under `x ↦ σxσ⁻¹`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TelomereClosure {
    /// A telomere whose image is not a telomere, if any.
    pub counterexample: Option<Permutation>,
}

impl TelomereClosure {
    pub fn holds(&self) -> bool {
        self.counterexample.is_none()
    }
}

/// Whether the telomere set of the full atlas of `flock` is closed under
/// conjugation by `sigma`.
pub fn telomere_closure(flock: &Flock, sigma: &Permutation) -> Result<TelomereClosure> {
    let graph = atlas(flock, sigma)?;
    Ok(telomere_closure_of(&graph))
}

pub(crate) fn telomere_closure_of(graph: &ConfigurationGraph) -> TelomereClosure {
    let sigma = graph.sigma();
    let counterexample = graph
        .telomeres()
        .into_iter()
        .map(|i| graph.node(i))
        .find(|phi| {
            let image = sigma.conjugate_unchecked(phi);
            !graph.index_of(&image).is_some_and(|j| graph.is_telomere(j))
        })
        .cloned();
    TelomereClosure { counterexample }
}

impl ConfigurationGraph {
    /// See [`telomere_closure`].
    pub fn telomere_closure(&self) -> TelomereClosure {
        telomere_closure_of(self)
    }
}
