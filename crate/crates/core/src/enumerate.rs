//! Isomorphism classes of small graphs, and one-vertex extensions.
//!
//! Graphs of order `n` are produced by adding a vertex to every graph of
//! order `n - 1` in every possible way and keeping one representative per
//! canonical form. Connected graphs only need connected parents: deleting a
//! leaf of a spanning tree leaves a connected graph.

use std::collections::{BTreeMap, HashSet};
use std::io::BufRead;

use rayon::prelude::*;
use thiserror::Error;

use crate::canon::{canonical_form, CanonicalForm};
use crate::graph::{Graph, VertexSet, MAX_ORDER};
use crate::io::graph6::{read_graph6_stream, Graph6Error};

/// Largest order the built-in generator accepts.
pub const MAX_GENERATED_ORDER: usize = 9;

/// Number of isomorphism classes of graphs of order `n`, index `n`.
pub const GRAPH_COUNTS: [usize; 10] = [0, 1, 2, 4, 11, 34, 156, 1044, 12346, 274668];

/// Number of isomorphism classes of connected graphs of order `n`.
pub const CONNECTED_GRAPH_COUNTS: [usize; 10] = [0, 1, 1, 2, 6, 21, 112, 853, 11117, 261080];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerateError {
    #[error("order {0} outside 1..={MAX_GENERATED_ORDER} for the built-in generator")]
    UnsupportedOrder(usize),
    #[error("stream record {index} repeats an earlier isomorphism class")]
    DuplicateClass { index: usize },
    #[error(transparent)]
    Graph6(#[from] Graph6Error),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StreamSource {
    Generated,
    External,
}

/// A finite stream of pairwise non-isomorphic graphs.
#[derive(Debug, Clone)]
pub struct GraphStream {
    /// `None` when an external stream mixes orders.
    pub order: Option<usize>,
    pub connected_only: bool,
    pub source: StreamSource,
    graphs: Vec<Graph>,
}

impl GraphStream {
    /// Wraps externally supplied graphs, rejecting repeated classes.
    pub fn from_graphs(graphs: Vec<Graph>) -> Result<GraphStream, EnumerateError> {
        let forms: Vec<CanonicalForm> = graphs.par_iter().map(canonical_form).collect();
        let mut seen = HashSet::with_capacity(forms.len());
        for (index, f) in forms.into_iter().enumerate() {
            if !seen.insert(f) {
                return Err(EnumerateError::DuplicateClass { index });
            }
        }
        let order = graphs
            .first()
            .map(Graph::order)
            .filter(|&n| graphs.iter().all(|g| g.order() == n));
        let connected_only = graphs.iter().all(Graph::is_connected);
        Ok(GraphStream {
            order,
            connected_only,
            source: StreamSource::External,
            graphs,
        })
    }

    /// Reads newline-separated graph6 records.
    pub fn from_graph6_reader<R: BufRead>(reader: R) -> Result<GraphStream, EnumerateError> {
        GraphStream::from_graphs(read_graph6_stream(reader)?)
    }

    pub fn graphs(&self) -> &[Graph] {
        &self.graphs
    }

    pub fn len(&self) -> usize {
        self.graphs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.graphs.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Graph> {
        self.graphs.iter()
    }

    pub fn into_graphs(self) -> Vec<Graph> {
        self.graphs
    }
}

impl IntoIterator for GraphStream {
    type Item = Graph;
    type IntoIter = std::vec::IntoIter<Graph>;
    fn into_iter(self) -> Self::IntoIter {
        self.graphs.into_iter()
    }
}

impl<'a> IntoIterator for &'a GraphStream {
    type Item = &'a Graph;
    type IntoIter = std::slice::Iter<'a, Graph>;
    fn into_iter(self) -> Self::IntoIter {
        self.graphs.iter()
    }
}

/// Canonical forms of every child of `parents`, deduplicated and sorted.
fn extend_level(parents: &[Graph], connected_only: bool) -> Vec<CanonicalForm> {
    let children: Vec<Vec<CanonicalForm>> = parents
        .par_iter()
        .map(|g| {
            let n = g.order();
            let first = if connected_only { 1 } else { 0 };
            (first..1u64 << n)
                .map(|mask| {
                    let h = g
                        .with_new_vertex(VertexSet::from_bits(mask))
                        .expect("order stays below the cap");
                    canonical_form(&h)
                })
                .collect()
        })
        .collect();
    let mut forms: Vec<CanonicalForm> = children.into_iter().flatten().collect();
    forms.par_sort_unstable();
    forms.dedup();
    forms
}

/// One graph per isomorphism class of order `n`, each in canonical labeling,
/// sorted by canonical form.
pub fn graphs_of_order(n: usize, connected_only: bool) -> Result<GraphStream, EnumerateError> {
    if !(1..=MAX_GENERATED_ORDER).contains(&n) {
        return Err(EnumerateError::UnsupportedOrder(n));
    }
    let mut level = vec![Graph::empty(1).expect("K1")];
    for _ in 2..=n {
        level = extend_level(&level, connected_only)
            .iter()
            .map(CanonicalForm::to_graph)
            .collect();
    }
    Ok(GraphStream {
        order: Some(n),
        connected_only,
        source: StreamSource::Generated,
        graphs: level,
    })
}

/// Graphs of every order in `orders`, concatenated in order.
pub fn graphs_of_orders(
    orders: impl IntoIterator<Item = usize>,
    connected_only: bool,
) -> Result<Vec<Graph>, EnumerateError> {
    let mut out = Vec::new();
    for n in orders {
        out.extend(graphs_of_order(n, connected_only)?.into_graphs());
    }
    Ok(out)
}

/// `g` plus one new vertex `n`, once per isomorphism class of the result.
///
/// Neighborhoods are tried in increasing bitmask order and the first one
/// reaching each class is kept, so the original labels of `g` survive and
/// the new vertex is always `n`. The empty neighborhood is skipped when
/// `require_connected` is set.
pub fn one_vertex_extensions(g: &Graph, require_connected: bool) -> Vec<Graph> {
    let n = g.order();
    if n >= MAX_ORDER {
        return Vec::new();
    }
    assert!(n < 63, "neighborhood masks need n < 63");
    let first = if require_connected { 1 } else { 0 };
    let mut seen: BTreeMap<CanonicalForm, ()> = BTreeMap::new();
    let mut out = Vec::new();
    for mask in first..1u64 << n {
        let h = g
            .with_new_vertex(VertexSet::from_bits(mask))
            .expect("order stays below the cap");
        if seen.insert(canonical_form(&h), ()).is_none() {
            out.push(h);
        }
    }
    out
}
