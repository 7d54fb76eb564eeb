//! Serializable reports and text/JSON/DOT rendering for the command line.

use std::fmt::Write as _;

use serde::Serialize;

use crate::canon::iso_classes;
use crate::configurations::{ConfigurationGraph, NodeClass, OrbitTrace};
use crate::conjugacy::{count_conjugators, ConjugatorFamily};
use crate::cycles::{partitions_of, Partition};
use crate::error::Result;
use crate::flock::Flock;

/// One row of the flock listing.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FlockRow {
    pub partition: Partition,
    pub stem: String,
    pub size: u64,
    pub conjugators: u64,
}

pub fn flock_rows(n: usize) -> Result<Vec<FlockRow>> {
    partitions_of(n)?
        .iter()
        .map(|p| {
            let f = Flock::new(p)?;
            Ok(FlockRow {
                partition: p.clone(),
                stem: f.stem().to_string(),
                size: f.size(),
                conjugators: count_conjugators(&p.to_cycle_type())?,
            })
        })
        .collect()
}

pub fn flock_rows_text(rows: &[FlockRow]) -> String {
    let width = |f: &dyn Fn(&FlockRow) -> String, head: &str| {
        rows.iter()
            .map(|r| f(r).len())
            .chain([head.len()])
            .max()
            .unwrap()
    };
    let wp = width(&|r| r.partition.to_string(), "partition");
    let ws = width(&|r| r.stem.clone(), "stem");
    let wz = width(&|r| r.size.to_string(), "size");
    let mut out = String::new();
    writeln!(
        out,
        "{:wp$}  {:ws$}  {:>wz$}  conjugators",
        "partition", "stem", "size"
    )
    .unwrap();
    for r in rows {
        writeln!(
            out,
            "{:wp$}  {:ws$}  {:>wz$}  {}",
            r.partition.to_string(),
            r.stem,
            r.size,
            r.conjugators
        )
        .unwrap();
    }
    out
}

/// Summary of one configuration.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComponentRecord {
    pub id: usize,
    pub size: usize,
    pub cycle_length: usize,
    pub telomere_count: usize,
    pub canonical_code: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub members: Option<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Totals {
    pub components: usize,
    pub nodes: usize,
    pub telomeres: usize,
    pub iso_classes: usize,
}

/// The configurations of a flock (or of a single configuration) as data.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AtlasReport {
    pub n: usize,
    pub partition: Partition,
    pub stem: String,
    pub flock_size: u64,
    pub components: Vec<ComponentRecord>,
    pub totals: Totals,
}

impl AtlasReport {
    pub fn new(graph: &ConfigurationGraph, with_members: bool) -> Self {
        let sigma = graph.sigma();
        let flock = Flock::containing(sigma);
        let components: Vec<ComponentRecord> = graph
            .components()
            .iter()
            .map(|c| ComponentRecord {
                id: c.id,
                size: c.size(),
                cycle_length: c.cycle_length(),
                telomere_count: c.telomere_count,
                canonical_code: graph.component_code(c.id).to_string(),
                members: with_members.then(|| {
                    c.members
                        .iter()
                        .map(|&i| graph.node(i).to_string())
                        .collect()
                }),
            })
            .collect();
        let totals = Totals {
            components: components.len(),
            nodes: graph.len(),
            telomeres: components.iter().map(|c| c.telomere_count).sum(),
            iso_classes: iso_classes(graph).len(),
        };
        Self {
            n: sigma.degree(),
            partition: flock.partition().clone(),
            stem: sigma.to_string(),
            flock_size: flock.size(),
            components,
            totals,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }

    /// Table of components. Codes can be long, so the table shows the
    /// isomorphism class index (classes ordered by code) instead.
    pub fn to_text(&self) -> String {
        let mut codes: Vec<&str> = self
            .components
            .iter()
            .map(|c| c.canonical_code.as_str())
            .collect();
        codes.sort_unstable();
        codes.dedup();
        let mut out = String::new();
        writeln!(
            out,
            "flock {} of S_{}, stem {}, {} permutations",
            self.partition, self.n, self.stem, self.flock_size
        )
        .unwrap();
        writeln!(
            out,
            "{:>4}  {:>8}  {:>5}  {:>9}  {:>5}",
            "id", "size", "cycle", "telomeres", "class"
        )
        .unwrap();
        for c in &self.components {
            let class = codes.binary_search(&c.canonical_code.as_str()).unwrap();
            writeln!(
                out,
                "{:>4}  {:>8}  {:>5}  {:>9}  {:>5}",
                c.id, c.size, c.cycle_length, c.telomere_count, class
            )
            .unwrap();
            if let Some(members) = &c.members {
                writeln!(out, "      {}", members.join(" ")).unwrap();
            }
        }
        writeln!(
            out,
            "total: {} configurations, {} permutations, {} telomeres, {} isomorphism classes",
            self.totals.components,
            self.totals.nodes,
            self.totals.telomeres,
            self.totals.iso_classes
        )
        .unwrap();
        out
    }
}

/// `a → b → c → back to b`.
pub fn orbit_text(orbit: &OrbitTrace) -> String {
    let mut parts: Vec<String> = orbit.visited().map(|p| p.to_string()).collect();
    parts.push(format!("back to {}", orbit.cycle[0]));
    parts.join(" → ") + "\n"
}

fn class_label(class: NodeClass) -> String {
    match class {
        NodeClass::Telomere => "telomere".into(),
        NodeClass::Simple => "simple".into(),
        NodeClass::Branching(k) => format!("branching({k})"),
    }
}

/// One line per node: `φ → T(φ)  class`, nodes in rank order.
pub fn graph_text(graph: &ConfigurationGraph) -> String {
    let mut out = String::new();
    for i in 0..graph.len() {
        let mut tags = vec![class_label(graph.class_of(i))];
        if graph.is_on_cycle(i) {
            tags.push("cycle".into());
        }
        writeln!(
            out,
            "{} → {}  {}",
            graph.node(i),
            graph.node(graph.successor(i)),
            tags.join(", ")
        )
        .unwrap();
    }
    out
}

/// Graphviz description: one node per permutation labelled with its cycle
/// notation, edges `φ → T(φ)`. Telomeres are boxes, cycle nodes are bold.
pub fn graph_dot(graph: &ConfigurationGraph) -> String {
    let mut out = String::from("digraph configuration {\n    node [shape=ellipse];\n");
    for i in 0..graph.len() {
        let mut attrs = vec![format!("label=\"{}\"", graph.node(i))];
        if graph.is_telomere(i) {
            attrs.push("shape=box".into());
        }
        if graph.is_on_cycle(i) {
            attrs.push("style=bold".into());
        }
        writeln!(out, "    r{} [{}];", graph.rank_of(i), attrs.join(", ")).unwrap();
    }
    for i in 0..graph.len() {
        writeln!(
            out,
            "    r{} -> r{};",
            graph.rank_of(i),
            graph.rank_of(graph.successor(i))
        )
        .unwrap();
    }
    out.push_str("}\n");
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConjugatorReport {
    pub phi: String,
    pub psi: String,
    pub count: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub solutions: Option<Vec<String>>,
}

impl ConjugatorReport {
    pub fn new(family: &ConjugatorFamily, count_only: bool) -> Self {
        Self {
            phi: family.phi().to_string(),
            psi: family.psi().to_string(),
            count: family.total(),
            solutions: (!count_only).then(|| family.iter().map(|r| r.to_string()).collect()),
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("N = {}\n", self.count);
        for s in self.solutions.iter().flatten() {
            out.push_str(s);
            out.push('\n');
        }
        out
    }
}
