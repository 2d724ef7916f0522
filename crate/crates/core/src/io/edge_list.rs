//! Plain-text edge lists.
//!
//! ```text
//! # comment lines and blank lines are ignored
//! 4 3
//! 0 1
//! 0 2
//! 0 3
//! ```
//!
//! The header gives `n m`; exactly `m` edge lines follow.

use std::fmt::Write;

use thiserror::Error;

use crate::graph::{Graph, GraphError, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EdgeListError {
    #[error("missing header line")]
    MissingHeader,
    #[error("line {line}: expected two non-negative integers")]
    Malformed { line: usize },
    #[error("header declares {declared} edges, found {found}")]
    EdgeCount { declared: usize, found: usize },
    #[error("line {line}: {source}")]
    Graph { line: usize, source: GraphError },
}

fn pair(line: &str, lineno: usize) -> Result<(usize, usize), EdgeListError> {
    let mut it = line.split_whitespace();
    let malformed = || EdgeListError::Malformed { line: lineno };
    let a = it
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(malformed)?;
    let b = it
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(malformed)?;
    if it.next().is_some() {
        return Err(malformed());
    }
    Ok((a, b))
}

pub fn parse_edge_list(text: &str) -> Result<Graph, EdgeListError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (hline, header) = lines.next().ok_or(EdgeListError::MissingHeader)?;
    let (n, m) = pair(header, hline)?;
    Graph::empty(n).map_err(|source| EdgeListError::Graph {
        line: hline,
        source,
    })?;
    let mut seen = vec![VertexSet::EMPTY; n];
    let mut edges = Vec::new();
    let mut found = 0;
    for (lineno, line) in lines {
        let (u, v) = pair(line, lineno)?;
        found += 1;
        if found > m {
            continue;
        }
        let err = |source| EdgeListError::Graph {
            line: lineno,
            source,
        };
        if let Some(&w) = [u, v].iter().find(|&&w| w >= n) {
            return Err(err(GraphError::VertexOutOfRange {
                vertex: w,
                order: n,
            }));
        }
        if u == v {
            return Err(err(GraphError::Loop(u)));
        }
        if seen[u].contains(v) {
            return Err(err(GraphError::DuplicateEdge(u.min(v), u.max(v))));
        }
        seen[u].insert(v);
        seen[v].insert(u);
        edges.push((u, v));
    }
    if found != m {
        return Err(EdgeListError::EdgeCount { declared: m, found });
    }
    Graph::new(n, &edges).map_err(|source| EdgeListError::Graph {
        line: hline,
        source,
    })
}

pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.size());
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let p3 = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(parse_edge_list("3 2\n0 1\n1 2").unwrap(), p3);
        let claw = Graph::new(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(parse_edge_list("4 3\n0 1\n0 2\n0 3").unwrap(), claw);
        assert_eq!(
            parse_edge_list("2 1\n0 0"),
            Err(EdgeListError::Graph {
                line: 2,
                source: GraphError::Loop(0)
            })
        );
    }

    #[test]
    fn comments_and_whitespace() {
        let text = "# a claw\n\n  4   3 \n0\t1\n# spoke two\n0 2\n0 3\n\n";
        assert_eq!(parse_edge_list(text).unwrap().size(), 3);
    }

    #[test]
    fn errors() {
        assert_eq!(
            parse_edge_list("# nothing"),
            Err(EdgeListError::MissingHeader)
        );
        assert_eq!(
            parse_edge_list("3 2\n0 1\n0 1"),
            Err(EdgeListError::Graph {
                line: 3,
                source: GraphError::DuplicateEdge(0, 1)
            })
        );
        assert_eq!(
            parse_edge_list("3 1\n0 3"),
            Err(EdgeListError::Graph {
                line: 2,
                source: GraphError::VertexOutOfRange {
                    vertex: 3,
                    order: 3
                }
            })
        );
        assert_eq!(
            parse_edge_list("3 1\n0 x"),
            Err(EdgeListError::Malformed { line: 2 })
        );
        assert_eq!(
            parse_edge_list("3 1\n0 1 2"),
            Err(EdgeListError::Malformed { line: 2 })
        );
        assert_eq!(
            parse_edge_list("3 2\n0 1"),
            Err(EdgeListError::EdgeCount {
                declared: 2,
                found: 1
            })
        );
        assert_eq!(
            parse_edge_list("3 1\n0 1\n1 2"),
            Err(EdgeListError::EdgeCount {
                declared: 1,
                found: 2
            })
        );
        assert!(matches!(
            parse_edge_list("0 0"),
            Err(EdgeListError::Graph {
                source: GraphError::OrderOutOfRange(0),
                ..
            })
        ));
    }

    #[test]
    fn writer_round_trip() {
        let g = Graph::new(5, &[(0, 4), (1, 2), (3, 4)]).unwrap();
        assert_eq!(parse_edge_list(&to_edge_list(&g)).unwrap(), g);
    }
}
