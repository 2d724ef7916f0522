//! Bit-packed simple graphs on at most 62 vertices.

use std::fmt;
use std::ops::{BitAnd, BitOr, Not, Sub};

use thiserror::Error;

/// Largest supported order. One neighbor set fits in a `u64` and the order
/// fits the short graph6 header.
pub const MAX_ORDER: usize = 62;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("order {0} outside 1..={MAX_ORDER}")]
    OrderOutOfRange(usize),
    #[error("vertex {vertex} out of range for order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("vertex set is empty")]
    EmptyVertexSet,
}

/// A subset of `{0, .., 63}` stored as one machine word.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    #[inline]
    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    #[inline]
    pub const fn bits(self) -> u64 {
        self.0
    }

    /// `{0, .., n-1}`.
    #[inline]
    pub const fn full(n: usize) -> Self {
        if n >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    #[inline]
    pub const fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    #[inline]
    pub const fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u64 << v);
    }

    #[inline]
    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub const fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Smallest member, if any.
    #[inline]
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Largest member, if any.
    #[inline]
    pub fn last(self) -> Option<usize> {
        (self.0 != 0).then(|| 63 - self.0.leading_zeros() as usize)
    }

    pub fn iter(self) -> VertexIter {
        VertexIter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// All `k`-subsets of `{0, .., n-1}` in lexicographic order of their
    /// sorted member tuples.
    pub fn combinations(n: usize, k: usize) -> Combinations {
        Combinations::new(n, k)
    }
}

impl BitOr for VertexSet {
    type Output = VertexSet;
    #[inline]
    fn bitor(self, rhs: Self) -> Self {
        VertexSet(self.0 | rhs.0)
    }
}

impl BitAnd for VertexSet {
    type Output = VertexSet;
    #[inline]
    fn bitand(self, rhs: Self) -> Self {
        VertexSet(self.0 & rhs.0)
    }
}

impl Sub for VertexSet {
    type Output = VertexSet;
    #[inline]
    fn sub(self, rhs: Self) -> Self {
        VertexSet(self.0 & !rhs.0)
    }
}

impl Not for VertexSet {
    type Output = VertexSet;
    #[inline]
    fn not(self) -> Self {
        VertexSet(!self.0)
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = VertexIter;
    fn into_iter(self) -> VertexIter {
        self.iter()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

pub struct VertexIter(u64);

impl Iterator for VertexIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let c = self.0.count_ones() as usize;
        (c, Some(c))
    }
}

impl ExactSizeIterator for VertexIter {}

/// Lexicographic `k`-subset iterator.
pub struct Combinations {
    n: usize,
    idx: Vec<usize>,
    done: bool,
}

impl Combinations {
    fn new(n: usize, k: usize) -> Self {
        Combinations {
            n,
            idx: (0..k).collect(),
            done: k > n,
        }
    }
}

impl Iterator for Combinations {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        if self.done {
            return None;
        }
        let out = self.idx.iter().copied().collect();
        let k = self.idx.len();
        // advance the rightmost index that still has room
        let mut i = k;
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.idx[i] < self.n - k + i {
                self.idx[i] += 1;
                for j in i + 1..k {
                    self.idx[j] = self.idx[j - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    }
}

/// A simple undirected graph with vertices `0..n`.
///
/// Immutable once built; every constructor checks symmetry, the absence of
/// loops and `1 <= n <= 62`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<VertexSet>,
}

impl Graph {
    /// Builds a graph from an edge list. Loops and repeated edges are rejected.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange {
                        vertex: w,
                        order: n,
                    });
                }
            }
            if u == v {
                return Err(GraphError::Loop(u));
            }
            if g.has_edge(u, v) {
                return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
            }
            g.adj[u].insert(v);
            g.adj[v].insert(u);
        }
        Ok(g)
    }

    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Graph, GraphError> {
        if !(1..=MAX_ORDER).contains(&n) {
            return Err(GraphError::OrderOutOfRange(n));
        }
        Ok(Graph {
            adj: vec![VertexSet::EMPTY; n],
        })
    }

    /// Builds from neighbor sets. Callers inside the crate guarantee the
    /// invariants; they are re-checked in debug builds.
    pub(crate) fn from_adjacency(adj: Vec<VertexSet>) -> Graph {
        let g = Graph { adj };
        debug_assert!(g.check_invariants());
        g
    }

    pub(crate) fn check_invariants(&self) -> bool {
        let n = self.order();
        (1..=MAX_ORDER).contains(&n)
            && self.adj.iter().enumerate().all(|(v, nb)| {
                !nb.contains(v)
                    && nb.is_subset(VertexSet::full(n))
                    && nb.iter().all(|u| self.adj[u].contains(v))
            })
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.adj.len()
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.order())
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, nb)| nb.iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.order()).map(|v| self.degree(v)).collect();
        d.sort_unstable();
        d
    }

    pub fn isolated_vertices(&self) -> VertexSet {
        (0..self.order())
            .filter(|&v| self.adj[v].is_empty())
            .collect()
    }

    /// Relabels so that old vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.order());
        let mut adj = vec![VertexSet::EMPTY; self.order()];
        for (v, nb) in self.adj.iter().enumerate() {
            adj[perm[v]] = nb.iter().map(|u| perm[u]).collect();
        }
        Graph::from_adjacency(adj)
    }

    /// `g` followed by `h`, with `h` shifted to `g.n..g.n + h.n`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph, GraphError> {
        let n = self.order() + other.order();
        if n > MAX_ORDER {
            return Err(GraphError::OrderOutOfRange(n));
        }
        let shift = self.order();
        let adj = self
            .adj
            .iter()
            .copied()
            .chain(
                other
                    .adj
                    .iter()
                    .map(|nb| VertexSet::from_bits(nb.bits() << shift)),
            )
            .collect();
        Ok(Graph::from_adjacency(adj))
    }

    /// Adds vertex `n` adjacent to `neighborhood`.
    pub fn with_new_vertex(&self, neighborhood: VertexSet) -> Result<Graph, GraphError> {
        let n = self.order();
        if n + 1 > MAX_ORDER {
            return Err(GraphError::OrderOutOfRange(n + 1));
        }
        if let Some(v) = (neighborhood - self.vertices()).first() {
            return Err(GraphError::VertexOutOfRange {
                vertex: v,
                order: n,
            });
        }
        let mut adj = self.adj.clone();
        for u in neighborhood {
            adj[u].insert(n);
        }
        adj.push(neighborhood);
        Ok(Graph::from_adjacency(adj))
    }

    /// Graph induced on `s`, relabeled by increasing original index.
    pub fn induced_subgraph(&self, s: VertexSet) -> Result<Graph, GraphError> {
        if s.is_empty() {
            return Err(GraphError::EmptyVertexSet);
        }
        if let Some(v) = (s - self.vertices()).first() {
            return Err(GraphError::VertexOutOfRange {
                vertex: v,
                order: self.order(),
            });
        }
        let kept: Vec<usize> = s.to_vec();
        let mut new_index = [usize::MAX; 64];
        for (i, &v) in kept.iter().enumerate() {
            new_index[v] = i;
        }
        let adj = kept
            .iter()
            .map(|&v| (self.adj[v] & s).iter().map(|u| new_index[u]).collect())
            .collect();
        Ok(Graph::from_adjacency(adj))
    }

    /// Removes `v` and its edges, relabeling the rest downward.
    pub fn without_vertex(&self, v: usize) -> Result<Graph, GraphError> {
        let mut s = self.vertices();
        s.remove(v);
        self.induced_subgraph(s)
    }

    /// Vertices reachable from `start` using only vertices of `within`.
    pub fn reach(&self, start: usize, within: VertexSet) -> VertexSet {
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while let Some(v) = frontier.first() {
            frontier.remove(v);
            let fresh = (self.adj[v] & within) - seen;
            seen = seen | fresh;
            frontier = frontier | fresh;
        }
        seen
    }

    /// Components of the subgraph induced on `within`, sorted by least vertex.
    pub fn components_within(&self, within: VertexSet) -> Vec<VertexSet> {
        let mut left = within;
        let mut parts = Vec::new();
        while let Some(v) = left.first() {
            let c = self.reach(v, within);
            left = left - c;
            parts.push(c);
        }
        parts
    }

    pub fn connected_components(&self) -> Vec<VertexSet> {
        self.components_within(self.vertices())
    }

    pub fn is_connected(&self) -> bool {
        self.reach(0, self.vertices()) == self.vertices()
    }

    /// True when the induced subgraph on `s` is a path (a single vertex counts).
    pub fn is_path_on(&self, s: VertexSet) -> bool {
        let Some(first) = s.first() else {
            return false;
        };
        let edges2: usize = s.iter().map(|v| (self.adj[v] & s).len()).sum();
        s.iter().all(|v| (self.adj[v] & s).len() <= 2)
            && edges2 == 2 * (s.len() - 1)
            && self.reach(first, s) == s
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.order())?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "])")
    }
}
