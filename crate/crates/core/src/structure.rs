//! Structural patterns: cherries, pendant triangles, pendant V's, modules of
//! order two, cut vertices, extension-safe blue sets and reduction vertices.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Graph, VertexSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PatternKind {
    Cherry,
    PendantTriangle,
    PendantV,
    Module2,
}

impl fmt::Display for PatternKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PatternKind::Cherry => "cherry",
            PatternKind::PendantTriangle => "pendant_triangle",
            PatternKind::PendantV => "pendant_v",
            PatternKind::Module2 => "module2",
        })
    }
}

/// A pattern occurrence with its witness vertices:
///
/// * cherry: `(center, a, b)` with `a < b`
/// * pendant triangle: `(v, u, w)`, `v` the cut vertex, `u < w`
/// * pendant V: `(v, p, q)`, `v` the cut vertex, `p` and `q` the least vertices
///   of two path components of `g - v`
/// * module of order two: `(u, v)` with `u < v`
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PatternHit {
    pub kind: PatternKind,
    pub vertices: Vec<usize>,
}

impl PatternHit {
    /// Re-checks the witness against the pattern definition.
    pub fn validate(&self, g: &Graph) -> bool {
        let n = g.order();
        if self.vertices.iter().any(|&v| v >= n) {
            return false;
        }
        match (self.kind, self.vertices.as_slice()) {
            (PatternKind::Cherry, &[c, a, b]) => {
                a != b && g.has_edge(c, a) && g.has_edge(c, b) && !g.has_edge(a, b)
            }
            (PatternKind::PendantTriangle, &[v, u, w]) => {
                is_cut_vertex(g, v)
                    && g.degree(v) == 3
                    && g.has_edge(v, u)
                    && g.has_edge(v, w)
                    && g.has_edge(u, w)
                    && g.degree(u) == 2
                    && g.degree(w) == 2
            }
            (PatternKind::PendantV, &[v, p, q]) => {
                if g.degree(v) < 3 || !is_cut_vertex(g, v) || p == v || q == v {
                    return false;
                }
                let mut rest = g.vertices();
                rest.remove(v);
                let cp = g.reach(p, rest);
                let cq = g.reach(q, rest);
                cp != cq && g.is_path_on(cp) && g.is_path_on(cq)
            }
            (PatternKind::Module2, &[u, v]) => u != v && is_twin_pair(g, u, v),
            _ => false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StructureError {
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph has {0} vertices; at least 6 required")]
    TooSmall(usize),
    #[error("graph already contains a {0}")]
    PatternPresent(PatternKind),
    #[error("{0} cannot be avoided by reduction")]
    UnsupportedPattern(PatternKind),
}

/// Every induced path on three vertices, one hit per center and leaf pair.
pub fn find_cherries(g: &Graph) -> Vec<PatternHit> {
    let mut hits = Vec::new();
    for c in 0..g.order() {
        let nb = g.neighbors(c);
        for a in nb {
            for b in nb.iter().filter(|&b| b > a) {
                if !g.has_edge(a, b) {
                    hits.push(PatternHit {
                        kind: PatternKind::Cherry,
                        vertices: vec![c, a, b],
                    });
                }
            }
        }
    }
    hits
}

fn component_count_without(g: &Graph, v: usize) -> usize {
    let mut rest = g.vertices();
    rest.remove(v);
    g.components_within(rest).len()
}

fn is_cut_vertex(g: &Graph, v: usize) -> bool {
    g.order() > 1 && component_count_without(g, v) > g.connected_components().len()
}

/// Vertices whose removal increases the number of components.
pub fn cut_vertices(g: &Graph) -> VertexSet {
    let base = g.connected_components().len();
    (0..g.order())
        .filter(|&v| g.order() > 1 && component_count_without(g, v) > base)
        .collect()
}

/// First pendant triangle: a cut vertex of degree 3 whose other two
/// neighbors are adjacent and both of degree 2.
pub fn has_pendant_triangle(g: &Graph) -> Option<PatternHit> {
    for v in cut_vertices(g) {
        if g.degree(v) != 3 {
            continue;
        }
        let nb = g.neighbors(v);
        for u in nb {
            for w in nb.iter().filter(|&w| w > u) {
                if g.has_edge(u, w) && g.degree(u) == 2 && g.degree(w) == 2 {
                    return Some(PatternHit {
                        kind: PatternKind::PendantTriangle,
                        vertices: vec![v, u, w],
                    });
                }
            }
        }
    }
    None
}

/// First cut vertex of degree at least 3 leaving two or more components
/// that are paths. A single vertex counts as a path.
pub fn has_pendant_v(g: &Graph) -> Option<PatternHit> {
    for v in cut_vertices(g) {
        if g.degree(v) < 3 {
            continue;
        }
        let mut rest = g.vertices();
        rest.remove(v);
        let paths: Vec<usize> = g
            .components_within(rest)
            .into_iter()
            .filter(|&c| g.is_path_on(c))
            .filter_map(|c| c.first())
            .collect();
        if paths.len() >= 2 {
            return Some(PatternHit {
                kind: PatternKind::PendantV,
                vertices: vec![v, paths[0], paths[1]],
            });
        }
    }
    None
}

fn is_twin_pair(g: &Graph, u: usize, v: usize) -> bool {
    let mut nu = g.neighbors(u);
    nu.remove(v);
    let mut nv = g.neighbors(v);
    nv.remove(u);
    nu == nv
}

/// All pairs with identical neighborhoods outside the pair.
pub fn modules_of_order_2(g: &Graph) -> Vec<PatternHit> {
    let n = g.order();
    let mut hits = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if is_twin_pair(g, u, v) {
                hits.push(PatternHit {
                    kind: PatternKind::Module2,
                    vertices: vec![u, v],
                });
            }
        }
    }
    hits
}

/// Every blue vertex has at least two white neighbors, so `s` stays stalled
/// in any supergraph whose extra vertices are white.
pub fn is_extension_safe(g: &Graph, s: VertexSet) -> bool {
    s.iter().all(|v| (g.neighbors(v) - s).len() >= 2)
}

/// Lexicographically least extension-safe set of `size` vertices. Such a set
/// is always stalled.
pub fn find_safe_stalled_set(g: &Graph, size: usize) -> Option<VertexSet> {
    VertexSet::combinations(g.order(), size).find(|&s| is_extension_safe(g, s))
}

pub(crate) fn has_pattern(g: &Graph, kind: PatternKind) -> bool {
    match kind {
        PatternKind::PendantV => has_pendant_v(g).is_some(),
        PatternKind::PendantTriangle => has_pendant_triangle(g).is_some(),
        PatternKind::Cherry => !find_cherries(g).is_empty(),
        PatternKind::Module2 => !modules_of_order_2(g).is_empty(),
    }
}

/// A vertex whose removal keeps `g` connected and free of `avoid`.
///
/// Candidates are tried in this order: leaves, then degree-2 vertices that
/// lie on a cycle and touch a vertex of degree at least 3, then every vertex.
pub fn reduction_vertex(g: &Graph, avoid: PatternKind) -> Result<Option<usize>, StructureError> {
    if !matches!(avoid, PatternKind::PendantV | PatternKind::PendantTriangle) {
        return Err(StructureError::UnsupportedPattern(avoid));
    }
    if g.order() < 6 {
        return Err(StructureError::TooSmall(g.order()));
    }
    if !g.is_connected() {
        return Err(StructureError::Disconnected);
    }
    if has_pattern(g, avoid) {
        return Err(StructureError::PatternPresent(avoid));
    }
    let n = g.order();
    let cuts = cut_vertices(g);
    let leaves = (0..n).filter(|&v| g.degree(v) == 1);
    let cycle_twos = (0..n).filter(|&v| {
        g.degree(v) == 2 && !cuts.contains(v) && g.neighbors(v).iter().any(|u| g.degree(u) >= 3)
    });
    let qualifies = |v: usize| {
        let h = g.without_vertex(v).expect("order >= 6");
        h.is_connected() && !has_pattern(&h, avoid)
    };
    Ok(leaves.chain(cycle_twos).chain(0..n).find(|&v| qualifies(v)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::new(n, edges).unwrap()
    }

    fn set(vs: &[usize]) -> VertexSet {
        vs.iter().copied().collect()
    }

    fn path(n: usize) -> Graph {
        let e: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        g(n, &e)
    }

    fn cycle(n: usize) -> Graph {
        let mut e: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        e.push((n - 1, 0));
        g(n, &e)
    }

    fn paw() -> Graph {
        g(4, &[(0, 1), (0, 2), (1, 2), (0, 3)])
    }

    fn net() -> Graph {
        g(6, &[(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (2, 5)])
    }

    fn house() -> Graph {
        g(5, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (1, 4)])
    }

    #[test]
    fn cherries() {
        let claw = g(4, &[(0, 1), (0, 2), (0, 3)]);
        let hits = find_cherries(&claw);
        assert_eq!(hits.len(), 3);
        assert!(hits.iter().all(|h| h.validate(&claw)));
        assert!(find_cherries(&cycle(3)).is_empty());
        assert_eq!(find_cherries(&path(3)).len(), 1);
    }

    #[test]
    fn pendant_triangles() {
        let hit = has_pendant_triangle(&paw()).unwrap();
        assert_eq!(hit.vertices, vec![0, 1, 2]);
        assert!(hit.validate(&paw()));
        assert!(has_pendant_triangle(&cycle(5)).is_none());
        assert!(has_pendant_triangle(&net()).is_none());
    }

    #[test]
    fn pendant_vs() {
        let claw = g(4, &[(0, 1), (0, 2), (0, 3)]);
        let hit = has_pendant_v(&claw).unwrap();
        assert_eq!(hit.vertices, vec![0, 1, 2]);
        assert!(hit.validate(&claw));
        assert!(has_pendant_v(&cycle(6)).is_none());
        assert!(has_pendant_v(&house()).is_none());
    }

    #[test]
    fn order_two_modules() {
        let c4 = cycle(4);
        let pairs: Vec<_> = modules_of_order_2(&c4)
            .into_iter()
            .map(|h| h.vertices)
            .collect();
        assert_eq!(pairs, vec![vec![0, 2], vec![1, 3]]);
        assert!(modules_of_order_2(&path(4)).is_empty());
        let k2k1 = g(3, &[(0, 1)]);
        let pairs: Vec<_> = modules_of_order_2(&k2k1)
            .into_iter()
            .map(|h| h.vertices)
            .collect();
        assert!(pairs.contains(&vec![0, 1]));
    }

    #[test]
    fn cut_vertex_examples() {
        assert_eq!(cut_vertices(&path(4)), set(&[1, 2]));
        assert_eq!(cut_vertices(&cycle(5)), VertexSet::EMPTY);
        assert_eq!(cut_vertices(&paw()), set(&[0]));
        assert_eq!(cut_vertices(&g(1, &[])), VertexSet::EMPTY);
        // a cut vertex inside one component of a disconnected graph
        let p3k1 = g(4, &[(0, 1), (1, 2)]);
        assert_eq!(cut_vertices(&p3k1), set(&[1]));
    }

    #[test]
    fn extension_safety() {
        assert!(is_extension_safe(&cycle(5), set(&[0, 2])));
        assert!(!is_extension_safe(&path(4), set(&[0])));
        let h = path(6).with_new_vertex(set(&[0])).unwrap();
        assert!(is_extension_safe(&h, set(&[0, 2, 4])));
        assert_eq!(find_safe_stalled_set(&h, 3), Some(set(&[0, 2, 4])));
        assert_eq!(find_safe_stalled_set(&path(6), 3), None);
    }

    #[test]
    fn reduction_examples() {
        let p6 = path(6);
        let v = reduction_vertex(&p6, PatternKind::PendantV)
            .unwrap()
            .unwrap();
        assert!(v == 0 || v == 5);

        let c7 = cycle(7);
        let v = reduction_vertex(&c7, PatternKind::PendantV)
            .unwrap()
            .unwrap();
        let h = c7.without_vertex(v).unwrap();
        assert!(crate::canon::is_isomorphic(&h, &path(6)));
    }

    #[test]
    fn reduction_preconditions() {
        assert_eq!(
            reduction_vertex(&path(5), PatternKind::PendantV),
            Err(StructureError::TooSmall(5))
        );
        let two = path(3).disjoint_union(&path(3)).unwrap();
        assert_eq!(
            reduction_vertex(&two, PatternKind::PendantV),
            Err(StructureError::Disconnected)
        );
        let star = g(6, &[(0, 1), (0, 2), (0, 3), (0, 4), (0, 5)]);
        assert_eq!(
            reduction_vertex(&star, PatternKind::PendantV),
            Err(StructureError::PatternPresent(PatternKind::PendantV))
        );
        assert_eq!(
            reduction_vertex(&path(6), PatternKind::Cherry),
            Err(StructureError::UnsupportedPattern(PatternKind::Cherry))
        );
    }

    #[test]
    fn bad_witnesses_fail_validation() {
        let claw = g(4, &[(0, 1), (0, 2), (0, 3)]);
        let bogus = PatternHit {
            kind: PatternKind::Cherry,
            vertices: vec![1, 0, 2],
        };
        assert!(!bogus.validate(&claw));
        let wrong_arity = PatternHit {
            kind: PatternKind::Module2,
            vertices: vec![1],
        };
        assert!(!wrong_arity.validate(&claw));
    }
}
