//! Label-free canonical codes for connected functional graphs.
//!
//! A connected functional graph is one directed cycle with an in-tree hanging
//! off every cycle node. Each tree is encoded bottom-up as a bracket string
//! whose children are sorted, and the component code is the smallest
//! rotation of the sequence of tree codes around the cycle, wrapped in `[]`.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::configurations::ConfigurationGraph;
use crate::error::{Error, Result};

/// Two connected functional graphs are isomorphic iff their codes are equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct CanonicalCode(String);

impl CanonicalCode {
    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// Code of the functional graph `i ↦ successors[i]`, which must be a single
/// weakly connected component.
pub fn canonical_code(successors: &[usize]) -> Result<CanonicalCode> {
    let n = successors.len();
    if n == 0 || successors.iter().any(|&s| s >= n) {
        return Err(Error::NotAComponent);
    }

    let mut v = 0;
    for _ in 0..n {
        v = successors[v];
    }
    let mut cycle = vec![v];
    let mut u = successors[v];
    while u != v {
        cycle.push(u);
        u = successors[u];
    }
    let mut on_cycle = vec![false; n];
    for &c in &cycle {
        on_cycle[c] = true;
    }

    let mut children: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (x, &s) in successors.iter().enumerate() {
        if !on_cycle[x] {
            children[s].push(x);
        }
    }

    // post-order over every tree rooted on the cycle
    let mut code: Vec<Option<String>> = vec![None; n];
    let mut reached = 0;
    for &root in &cycle {
        let mut stack = vec![(root, false)];
        while let Some((x, expanded)) = stack.pop() {
            if expanded {
                let mut parts: Vec<String> = children[x]
                    .iter()
                    .map(|&c| code[c].take().expect("child encoded first"))
                    .collect();
                parts.sort_unstable();
                let mut s = String::with_capacity(2 + parts.iter().map(String::len).sum::<usize>());
                s.push('(');
                parts.iter().for_each(|p| s.push_str(p));
                s.push(')');
                code[x] = Some(s);
                reached += 1;
            } else {
                stack.push((x, true));
                stack.extend(children[x].iter().map(|&c| (c, false)));
            }
        }
    }
    if reached != n {
        return Err(Error::NotAComponent);
    }

    let trees: Vec<String> = cycle.iter().map(|&c| code[c].take().unwrap()).collect();
    let best = (0..trees.len())
        .map(|r| {
            let mut s = String::new();
            for t in trees[r..].iter().chain(&trees[..r]) {
                s.push_str(t);
            }
            s
        })
        .min()
        .unwrap();
    Ok(CanonicalCode(format!("[{best}]")))
}

/// Isomorphism of two connected functional graphs given as successor tables.
pub fn is_isomorphic(a: &[usize], b: &[usize]) -> Result<bool> {
    if a.len() != b.len() {
        canonical_code(a)?;
        canonical_code(b)?;
        return Ok(false);
    }
    Ok(canonical_code(a)? == canonical_code(b)?)
}

/// Components of `graph` sharing one canonical code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsoClass {
    pub code: CanonicalCode,
    /// Component ids, ascending.
    pub components: Vec<usize>,
}

/// Groups the components of `graph` by code, classes ordered by code.
pub fn iso_classes(graph: &ConfigurationGraph) -> Vec<IsoClass> {
    let mut by_code: BTreeMap<CanonicalCode, Vec<usize>> = BTreeMap::new();
    for c in graph.components() {
        by_code
            .entry(graph.component_code(c.id))
            .or_default()
            .push(c.id);
    }
    by_code
        .into_iter()
        .map(|(code, components)| IsoClass { code, components })
        .collect()
}
