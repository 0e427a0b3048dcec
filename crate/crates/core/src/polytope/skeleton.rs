use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::Kind;
use crate::error::{Error, Result};
use crate::par::Exec;
use crate::poset::{ElementSet, Poset};

/// Whether `rho(i)` and `rho(j)` span an edge of `O(P)`: one ideal must
/// contain the other and their difference must be connected.
///
/// The pair is oriented internally, so argument order does not matter.
pub fn order_edge(p: &Poset, i: ElementSet, j: ElementSet) -> Result<bool> {
    for s in [i, j] {
        if !p.is_ideal(s) {
            return Err(Error::NotIdeal(s));
        }
    }
    Ok(order_edge_unchecked(p, i, j))
}

pub(crate) fn order_edge_unchecked(p: &Poset, i: ElementSet, j: ElementSet) -> bool {
    let (lower, upper) = if i.is_subset(j) { (i, j) } else { (j, i) };
    if !lower.is_proper_subset(upper) {
        return false;
    }
    p.is_connected_subset(upper - lower).unwrap_or(false)
}

/// Whether `rho(a)` and `rho(b)` span an edge of `C(P)`: the symmetric
/// difference of the antichains must be connected.
pub fn chain_edge(p: &Poset, a: ElementSet, b: ElementSet) -> Result<bool> {
    for s in [a, b] {
        if !p.is_antichain(s) {
            return Err(Error::NotAntichain(s));
        }
    }
    Ok(chain_edge_unchecked(p, a, b))
}

pub(crate) fn chain_edge_unchecked(p: &Poset, a: ElementSet, b: ElementSet) -> bool {
    a != b && p.is_connected_subset(a ^ b).unwrap_or(false)
}

/// The 1-skeleton of `O(P)` or `C(P)`.
///
/// `vertices` are ideals (order) or antichains (chain) in ascending mask
/// order; `edges` are index pairs `(u, v)` with `u < v`, sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkeletonGraph {
    pub kind: Kind,
    pub d: usize,
    pub vertices: Vec<ElementSet>,
    pub edges: Vec<(usize, usize)>,
}

/// Builds the skeleton from the combinatorial edge predicates, testing
/// every vertex pair.
pub fn skeleton(p: &Poset, kind: Kind) -> SkeletonGraph {
    skeleton_with(p, kind, Exec::default())
}

pub fn skeleton_with(p: &Poset, kind: Kind, exec: Exec) -> SkeletonGraph {
    let vertices = kind.vertex_sets(p);
    match kind {
        Kind::Order => SkeletonGraph::from_predicate(kind, p.len(), vertices, exec, |i, j| {
            order_edge_unchecked(p, i, j)
        }),
        Kind::Chain => SkeletonGraph::from_predicate(kind, p.len(), vertices, exec, |a, b| {
            chain_edge_unchecked(p, a, b)
        }),
    }
}

/// Ascending vertex degrees.
pub fn degree_sequence(g: &SkeletonGraph) -> Vec<usize> {
    let mut degrees = g.degrees();
    degrees.sort_unstable();
    degrees
}

impl SkeletonGraph {
    /// All-pairs construction from an arbitrary edge predicate.
    pub fn from_predicate<F>(
        kind: Kind,
        d: usize,
        vertices: Vec<ElementSet>,
        exec: Exec,
        is_edge: F,
    ) -> SkeletonGraph
    where
        F: Fn(ElementSet, ElementSet) -> bool + Sync + Send,
    {
        let n = vertices.len();
        let verts = &vertices;
        let edges = exec.flat_map_range(n, |u| {
            ((u + 1)..n)
                .filter(|&v| is_edge(verts[u], verts[v]))
                .map(|v| (u, v))
                .collect()
        });
        SkeletonGraph {
            kind,
            d,
            vertices,
            edges,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Degrees indexed like `vertices`.
    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.vertices.len()];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    pub fn index_of(&self, s: ElementSet) -> Option<usize> {
        self.vertices.binary_search(&s).ok()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        let key = if u < v { (u, v) } else { (v, u) };
        self.edges.binary_search(&key).is_ok()
    }

    pub fn to_json(&self) -> String {
        let doc = SkeletonJson {
            kind: self.kind,
            vertices: self
                .vertices
                .iter()
                .map(|&w| (0..self.d).map(|i| u8::from(w.contains(i))).collect())
                .collect(),
            edges: self.edges.iter().map(|&(u, v)| [u, v]).collect(),
        };
        serde_json::to_string(&doc).expect("skeleton serializes")
    }

    pub fn from_json(input: &str) -> Result<SkeletonGraph, SkeletonJsonError> {
        let doc: SkeletonJson = serde_json::from_str(input)?;
        let d = doc.vertices.first().map_or(0, Vec::len);
        let mut vertices = Vec::with_capacity(doc.vertices.len());
        for bits in &doc.vertices {
            if bits.len() != d {
                return Err(SkeletonJsonError::Invalid(
                    "vertex bit lists differ in length",
                ));
            }
            if bits.iter().any(|&b| b > 1) {
                return Err(SkeletonJsonError::Invalid("vertex bits must be 0 or 1"));
            }
            vertices.push(
                bits.iter()
                    .enumerate()
                    .filter(|(_, &b)| b == 1)
                    .map(|(i, _)| i)
                    .collect::<ElementSet>(),
            );
        }
        if vertices.windows(2).any(|w| w[0] >= w[1]) {
            return Err(SkeletonJsonError::Invalid(
                "vertices not in ascending mask order",
            ));
        }
        let mut edges = Vec::with_capacity(doc.edges.len());
        for [u, v] in doc.edges {
            if u >= v || v >= vertices.len() {
                return Err(SkeletonJsonError::Invalid(
                    "edge endpoints must satisfy u < v < n",
                ));
            }
            edges.push((u, v));
        }
        if edges.windows(2).any(|w| w[0] >= w[1]) {
            return Err(SkeletonJsonError::Invalid("edges not sorted or duplicated"));
        }
        Ok(SkeletonGraph {
            kind: doc.kind,
            d,
            vertices,
            edges,
        })
    }

    /// Undirected DOT graph, one node per vertex labeled by its hex mask.
    pub fn to_dot(&self) -> String {
        let mut out = format!("graph {} {{\n", self.kind);
        for (k, w) in self.vertices.iter().enumerate() {
            let _ = writeln!(out, "  v{k} [label=\"{:#x}\"];", w.mask());
        }
        for &(u, v) in &self.edges {
            let _ = writeln!(out, "  v{u} -- v{v};");
        }
        out.push_str("}\n");
        out
    }
}

#[derive(Serialize, Deserialize)]
struct SkeletonJson {
    kind: Kind,
    vertices: Vec<Vec<u8>>,
    edges: Vec<[usize; 2]>,
}

#[derive(Debug, Error)]
pub enum SkeletonJsonError {
    #[error("malformed skeleton JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("invalid skeleton: {0}")]
    Invalid(&'static str),
}
