//! Named graphs.
//!
//! | name                       | params | graph                                        |
//! |----------------------------|--------|----------------------------------------------|
//! | `complete`                 | n      | K_n                                          |
//! | `path`                     | n      | P_n, `0-1-..-(n-1)`                          |
//! | `cycle`                    | n >= 3 | C_n, path plus `(n-1)-0`                     |
//! | `empty`                    | n      | n isolated vertices                          |
//! | `complete_bipartite`       | r, t   | K_{r,t}, parts `0..r` and `r..r+t`           |
//! | `star`                     | k      | K_{1,k}, center 0                            |
//! | `wheel`                    | n >= 4 | hub 0 joined to the cycle `1..n`             |
//! | `claw`                     |        | K_{1,3}                                      |
//! | `paw`                      |        | triangle 0,1,2 plus edge 0-3                 |
//! | `diamond`                  |        | K_4 minus the edge 2-3                       |
//! | `bull`                     |        | triangle 0,1,2 plus edges 0-3 and 1-4        |
//! | `house`                    |        | square 0-1-2-3 with roof vertex 4 on 0 and 1 |
//! | `gem`                      |        | hub 0 joined to the path 1-2-3-4             |
//! | `net`, `corona_k3`         |        | triangle 0,1,2 with pendants 0-3, 1-4, 2-5   |
//! | `figure1`                  | i      | i-th graph with failed zero forcing number 2 |
//!
//! `figure1` order, 1 through 15: 3K1, K2+K1, K2+K2, claw, paw, C4, diamond,
//! K4, bull, P5, house, the five-vertex hub graph, C5, P6, net.
//!
//! The hub entry (12) is not fixed in advance. Its two candidates are the
//! wheel on five vertices and the gem; the entry resolves to whichever one
//! the forcing engine finds to have failed zero forcing number 2.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::forcing::failed_zero_forcing_number;
use crate::graph::{Graph, GraphError, MAX_ORDER};

pub const FIGURE1_LEN: usize = 15;

/// Position of the hub graph in the `figure1` list.
pub const FIGURE1_HUB_INDEX: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("unknown graph name `{0}`")]
    UnknownName(String),
    #[error("`{name}` takes {expected} parameter(s), got {found}")]
    Arity {
        name: String,
        expected: usize,
        found: usize,
    },
    #[error("parameters {params:?} out of range for `{name}`")]
    OutOfRange { name: String, params: Vec<usize> },
    #[error("cannot parse `{0}` as NAME[:P1,P2]")]
    Syntax(String),
    #[error("no hub candidate has failed zero forcing number 2")]
    HubUnresolved,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// A catalog lookup such as `path:6` or `complete_bipartite:2,3`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NamedGraphSpec {
    pub name: String,
    pub params: Vec<usize>,
}

impl NamedGraphSpec {
    pub fn new(name: impl Into<String>, params: &[usize]) -> Self {
        NamedGraphSpec {
            name: name.into(),
            params: params.to_vec(),
        }
    }
}

impl FromStr for NamedGraphSpec {
    type Err = CatalogError;

    fn from_str(s: &str) -> Result<Self, CatalogError> {
        let syntax = || CatalogError::Syntax(s.to_string());
        let (name, params) = match s.split_once(':') {
            Some((name, rest)) => {
                let params = rest
                    .split(',')
                    .map(|p| p.trim().parse::<usize>().map_err(|_| syntax()))
                    .collect::<Result<Vec<_>, _>>()?;
                (name, params)
            }
            None => (s, Vec::new()),
        };
        let name = name.trim();
        if name.is_empty() || !name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
            return Err(syntax());
        }
        Ok(NamedGraphSpec {
            name: name.to_ascii_lowercase(),
            params,
        })
    }
}

impl fmt::Display for NamedGraphSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)?;
        for (i, p) in self.params.iter().enumerate() {
            write!(f, "{}{p}", if i == 0 { ':' } else { ',' })?;
        }
        Ok(())
    }
}

pub fn complete(n: usize) -> Result<Graph, GraphError> {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    Graph::new(n, &edges)
}

pub fn path(n: usize) -> Result<Graph, GraphError> {
    let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    Graph::new(n, &edges)
}

pub fn cycle(n: usize) -> Result<Graph, GraphError> {
    let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    edges.push((n - 1, 0));
    Graph::new(n, &edges)
}

pub fn complete_bipartite(r: usize, t: usize) -> Result<Graph, GraphError> {
    let mut edges = Vec::new();
    for u in 0..r {
        for v in r..r + t {
            edges.push((u, v));
        }
    }
    Graph::new(r + t, &edges)
}

pub fn star(k: usize) -> Result<Graph, GraphError> {
    complete_bipartite(1, k)
}

pub fn wheel(n: usize) -> Result<Graph, GraphError> {
    let mut edges: Vec<_> = (1..n).map(|v| (0, v)).collect();
    edges.extend((2..n).map(|v| (v - 1, v)));
    edges.push((n - 1, 1));
    Graph::new(n, &edges)
}

fn fixed(n: usize, edges: &[(usize, usize)]) -> Graph {
    Graph::new(n, edges).expect("catalog edge lists are valid")
}

pub fn claw() -> Graph {
    fixed(4, &[(0, 1), (0, 2), (0, 3)])
}

pub fn paw() -> Graph {
    fixed(4, &[(0, 1), (0, 2), (1, 2), (0, 3)])
}

pub fn diamond() -> Graph {
    fixed(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])
}

pub fn bull() -> Graph {
    fixed(5, &[(0, 1), (0, 2), (1, 2), (0, 3), (1, 4)])
}

pub fn house() -> Graph {
    fixed(5, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (1, 4)])
}

pub fn gem() -> Graph {
    fixed(5, &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (2, 3), (3, 4)])
}

pub fn net() -> Graph {
    fixed(6, &[(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (2, 5)])
}

/// The hub entry of the `figure1` list, chosen by computing F on both
/// candidates.
pub fn figure1_hub() -> Result<Graph, CatalogError> {
    [wheel(5)?, gem()]
        .into_iter()
        .find(|g| failed_zero_forcing_number(g) == 2)
        .ok_or(CatalogError::HubUnresolved)
}

/// The `i`-th entry (1-based) of the list of graphs with failed zero forcing
/// number 2.
pub fn figure1(i: usize) -> Result<Graph, CatalogError> {
    let k1 = Graph::empty(1)?;
    let k2 = complete(2)?;
    let g = match i {
        1 => Graph::empty(3)?,
        2 => k2.disjoint_union(&k1)?,
        3 => k2.disjoint_union(&k2)?,
        4 => claw(),
        5 => paw(),
        6 => cycle(4)?,
        7 => diamond(),
        8 => complete(4)?,
        9 => bull(),
        10 => path(5)?,
        11 => house(),
        FIGURE1_HUB_INDEX => figure1_hub()?,
        13 => cycle(5)?,
        14 => path(6)?,
        15 => net(),
        _ => {
            return Err(CatalogError::OutOfRange {
                name: "figure1".into(),
                params: vec![i],
            })
        }
    };
    Ok(g)
}

const FIGURE1_NAMES: [&str; FIGURE1_LEN] = [
    "3K1", "K2+K1", "K2+K2", "claw", "paw", "C4", "diamond", "K4", "bull", "P5", "house", "", "C5",
    "P6", "net",
];

/// Short display name of the `i`-th `figure1` entry.
pub fn figure1_name(i: usize) -> Result<String, CatalogError> {
    if i == FIGURE1_HUB_INDEX {
        let hub = figure1_hub()?;
        return Ok(if hub == gem() { "gem" } else { "W5" }.to_string());
    }
    FIGURE1_NAMES
        .get(i.wrapping_sub(1))
        .map(|s| s.to_string())
        .ok_or(CatalogError::OutOfRange {
            name: "figure1".into(),
            params: vec![i],
        })
}

/// All fifteen `figure1` entries in catalog order.
pub fn figure1_list() -> Result<Vec<Graph>, CatalogError> {
    (1..=FIGURE1_LEN).map(figure1).collect()
}

pub fn named_graph(spec: &NamedGraphSpec) -> Result<Graph, CatalogError> {
    let name = spec.name.as_str();
    let p = &spec.params;
    let arity = |expected: usize| -> Result<(), CatalogError> {
        if p.len() == expected {
            Ok(())
        } else {
            Err(CatalogError::Arity {
                name: name.to_string(),
                expected,
                found: p.len(),
            })
        }
    };
    let range = |ok: bool| -> Result<(), CatalogError> {
        if ok {
            Ok(())
        } else {
            Err(CatalogError::OutOfRange {
                name: name.to_string(),
                params: p.clone(),
            })
        }
    };
    let order_ok = |n: usize| (1..=MAX_ORDER).contains(&n);

    let g = match name {
        "complete" | "path" | "empty" => {
            arity(1)?;
            range(order_ok(p[0]))?;
            match name {
                "complete" => complete(p[0])?,
                "path" => path(p[0])?,
                _ => Graph::empty(p[0])?,
            }
        }
        "cycle" => {
            arity(1)?;
            range((3..=MAX_ORDER).contains(&p[0]))?;
            cycle(p[0])?
        }
        "wheel" => {
            arity(1)?;
            range((4..=MAX_ORDER).contains(&p[0]))?;
            wheel(p[0])?
        }
        "complete_bipartite" => {
            arity(2)?;
            range(p[0] >= 1 && p[1] >= 1 && p[0].checked_add(p[1]).is_some_and(order_ok))?;
            complete_bipartite(p[0], p[1])?
        }
        "star" => {
            arity(1)?;
            range(p[0] < MAX_ORDER)?;
            star(p[0])?
        }
        "figure1" => {
            arity(1)?;
            range((1..=FIGURE1_LEN).contains(&p[0]))?;
            figure1(p[0])?
        }
        "claw" | "paw" | "diamond" | "bull" | "house" | "gem" | "net" | "corona_k3" => {
            arity(0)?;
            match name {
                "claw" => claw(),
                "paw" => paw(),
                "diamond" => diamond(),
                "bull" => bull(),
                "house" => house(),
                "gem" => gem(),
                _ => net(),
            }
        }
        _ => return Err(CatalogError::UnknownName(spec.name.clone())),
    };
    Ok(g)
}
