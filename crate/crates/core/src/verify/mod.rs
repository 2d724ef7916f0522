//! Verification campaigns over exhaustive graph enumerations, the gap
//! construction, and a rule-based predictor for F.

mod campaigns;
pub mod expectations;
pub mod report;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::canon::is_isomorphic;
use crate::enumerate::{EnumerateError, GraphStream, MAX_GENERATED_ORDER};
use crate::forcing::failed_zero_forcing_number;
use crate::graph::Graph;
use crate::io::catalog::figure1_list;
use crate::structure::{has_pendant_triangle, modules_of_order_2};

pub use report::{CampaignReport, Discrepancy, ReportParams, Witness};

/// Largest order accepted by the gap campaign.
pub const MAX_GAP_ORDER: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("unknown campaign `{0}`")]
    UnknownCampaign(String),
    #[error("campaign {campaign} does not support orders {min}..={max}")]
    UnsupportedOrder {
        campaign: &'static str,
        min: usize,
        max: usize,
    },
    #[error("campaign {0} does not read a graph stream")]
    StreamNotAccepted(&'static str),
    #[error("graph is connected")]
    Connected,
    #[error("gap construction needs n >= 6, got {0}")]
    GapOrder(usize),
    #[error(transparent)]
    Enumerate(#[from] EnumerateError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Campaign {
    Figure1,
    Theorem21,
    F0F1,
    Isolated,
    ModuleNMinus2,
    DisconnectedFormula,
    Exceptions16,
    ExtensionArgument,
    FortDuality,
    Gap,
}

impl Campaign {
    pub const ALL: [Campaign; 10] = [
        Campaign::Figure1,
        Campaign::Theorem21,
        Campaign::F0F1,
        Campaign::Isolated,
        Campaign::ModuleNMinus2,
        Campaign::DisconnectedFormula,
        Campaign::Exceptions16,
        Campaign::ExtensionArgument,
        Campaign::FortDuality,
        Campaign::Gap,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Campaign::Figure1 => "figure1",
            Campaign::Theorem21 => "theorem21",
            Campaign::F0F1 => "f0f1",
            Campaign::Isolated => "isolated",
            Campaign::ModuleNMinus2 => "module_nminus2",
            Campaign::DisconnectedFormula => "disconnected_formula",
            Campaign::Exceptions16 => "exceptions16",
            Campaign::ExtensionArgument => "extension_argument",
            Campaign::FortDuality => "fort_duality",
            Campaign::Gap => "gap",
        }
    }

    /// Default `(min_n, max_n)`.
    fn default_orders(self) -> (usize, usize) {
        match self {
            Campaign::Figure1 => (1, 8),
            Campaign::Theorem21 => (7, 8),
            Campaign::FortDuality => (1, 6),
            Campaign::Exceptions16 | Campaign::ExtensionArgument => (6, 6),
            Campaign::Gap => (6, 14),
            _ => (1, 7),
        }
    }

    fn connected_only(self) -> bool {
        matches!(self, Campaign::Exceptions16 | Campaign::ExtensionArgument)
    }
}

impl fmt::Display for Campaign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Campaign {
    type Err = VerifyError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Campaign::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| VerifyError::UnknownCampaign(s.to_string()))
    }
}

/// Order bounds for a campaign. For `extension_argument`, `max_n` is the
/// order the extension recursion may reach; its base graphs have order 6.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct CampaignParams {
    pub min_n: Option<usize>,
    pub max_n: Option<usize>,
}

impl CampaignParams {
    pub fn up_to(max_n: usize) -> Self {
        CampaignParams {
            min_n: None,
            max_n: Some(max_n),
        }
    }

    pub fn range(min_n: usize, max_n: usize) -> Self {
        CampaignParams {
            min_n: Some(min_n),
            max_n: Some(max_n),
        }
    }
}

/// Scanned orders, plus the recursion bound for `extension_argument`.
fn resolve_orders(c: Campaign, p: CampaignParams) -> Result<(usize, usize), VerifyError> {
    let (dmin, dmax) = c.default_orders();
    let (min, max) = match c {
        Campaign::ExtensionArgument => (
            p.min_n.unwrap_or(6),
            p.max_n.unwrap_or(expectations::EXTENSION_BOUND),
        ),
        _ => (p.min_n.unwrap_or(dmin), p.max_n.unwrap_or(dmax)),
    };
    let ok = min <= max
        && match c {
            Campaign::Gap => min >= 6 && max <= MAX_GAP_ORDER,
            Campaign::Theorem21 => {
                min >= expectations::THEOREM21_MIN_ORDER && max <= MAX_GENERATED_ORDER
            }
            Campaign::Exceptions16 => min == 6 && max == 6,
            Campaign::ExtensionArgument => min == 6 && (7..=MAX_GENERATED_ORDER).contains(&max),
            _ => min >= 1 && max <= MAX_GENERATED_ORDER,
        };
    if ok {
        Ok((min, max))
    } else {
        Err(VerifyError::UnsupportedOrder {
            campaign: c.name(),
            min,
            max,
        })
    }
}

/// Runs a campaign on internally generated graphs.
pub fn run_campaign(c: Campaign, p: CampaignParams) -> Result<CampaignReport, VerifyError> {
    let (min, max) = resolve_orders(c, p)?;
    if c == Campaign::Gap {
        return Ok(campaigns::gap(min, max));
    }
    let base_max = if c == Campaign::ExtensionArgument {
        6
    } else {
        max
    };
    let mut graphs = Vec::new();
    for n in min..=base_max {
        graphs.extend(crate::enumerate::graphs_of_order(n, c.connected_only())?.into_graphs());
    }
    Ok(campaigns::run(c, graphs, max))
}

/// Runs a campaign on the graphs of an external stream. Graphs outside the
/// campaign's scope (wrong order, or disconnected where only connected
/// graphs are meant) are skipped.
pub fn run_campaign_on_stream(
    c: Campaign,
    p: CampaignParams,
    stream: &GraphStream,
) -> Result<CampaignReport, VerifyError> {
    if c == Campaign::Gap {
        return Err(VerifyError::StreamNotAccepted(c.name()));
    }
    let explicit = p.min_n.is_some() || p.max_n.is_some();
    let (min, max) = resolve_orders(c, p)?;
    let base_max = if c == Campaign::ExtensionArgument {
        6
    } else {
        max
    };
    let pinned = explicit
        || matches!(
            c,
            Campaign::Exceptions16 | Campaign::ExtensionArgument | Campaign::Theorem21
        );
    let graphs = stream
        .iter()
        .filter(|g| !pinned || (min..=base_max).contains(&g.order()))
        .filter(|g| !c.connected_only() || g.is_connected())
        .cloned()
        .collect();
    Ok(campaigns::run(c, graphs, max))
}

/// F of a disconnected graph: the best choice of one component to keep
/// partly white, with every other component fully blue.
pub fn disconnected_f(g: &Graph) -> Result<usize, VerifyError> {
    let comps = g.connected_components();
    if comps.len() < 2 {
        return Err(VerifyError::Connected);
    }
    let n = g.order();
    Ok(comps
        .iter()
        .map(|&c| {
            let h = g.induced_subgraph(c).expect("nonempty component");
            failed_zero_forcing_number(&h) + n - c.len()
        })
        .max()
        .expect("at least two components"))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Prediction {
    Exact { value: usize, rule: &'static str },
    LowerBound { value: usize, rule: &'static str },
    Compute,
}

/// The first structural rule that pins down or bounds F.
pub fn predict_f(g: &Graph) -> Prediction {
    let n = g.order();
    let exact = |value, rule| Prediction::Exact { value, rule };
    let in_catalog = |cat: Vec<(&str, Graph)>| cat.iter().any(|(_, h)| is_isomorphic(g, h));
    if in_catalog(expectations::f0_catalog()) {
        return exact(0, "f0_catalog");
    }
    if in_catalog(expectations::f1_catalog()) {
        return exact(1, "f1_catalog");
    }
    if !g.isolated_vertices().is_empty() {
        return exact(n - 1, "isolated_vertex");
    }
    if g.is_connected() && !modules_of_order_2(g).is_empty() {
        return exact(n - 2, "module_of_order_2");
    }
    if n <= expectations::FIGURE1_MAX_ORDER
        && figure1_list()
            .expect("catalog builds")
            .iter()
            .any(|h| is_isomorphic(g, h))
    {
        return exact(2, "figure1_catalog");
    }
    if n >= expectations::THEOREM21_MIN_ORDER {
        return Prediction::LowerBound {
            value: expectations::THEOREM21_BOUND,
            rule: "order_at_least_7",
        };
    }
    if has_pendant_triangle(g).is_some() {
        return Prediction::LowerBound {
            value: n - 2,
            rule: "pendant_triangle",
        };
    }
    Prediction::Compute
}

/// G is the path `0..n-2` plus the edge `(n-3, n-1)`; H adds `(0, n-1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GapPair {
    pub n: usize,
    pub g: Graph,
    pub h: Graph,
}

pub fn gap_construction(n: usize) -> Result<GapPair, VerifyError> {
    if !(6..=crate::graph::MAX_ORDER).contains(&n) {
        return Err(VerifyError::GapOrder(n));
    }
    let mut edges: Vec<_> = (1..n - 1).map(|i| (i - 1, i)).collect();
    edges.push((n - 3, n - 1));
    let g = Graph::new(n, &edges).expect("valid construction");
    edges.push((0, n - 1));
    let h = Graph::new(n, &edges).expect("valid construction");
    Ok(GapPair { n, g, h })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forcing::failed_zero_forcing_number_brute_force;
    use crate::graph::VertexSet;
    use crate::io::catalog::{claw, complete, cycle, path};

    #[test]
    fn campaign_names_round_trip() {
        for c in Campaign::ALL {
            assert_eq!(c.name().parse::<Campaign>().unwrap(), c);
        }
        assert!(matches!(
            "nope".parse::<Campaign>(),
            Err(VerifyError::UnknownCampaign(_))
        ));
    }

    #[test]
    fn order_validation() {
        assert!(resolve_orders(Campaign::Figure1, CampaignParams::up_to(10)).is_err());
        assert!(resolve_orders(Campaign::Theorem21, CampaignParams::up_to(6)).is_err());
        assert!(resolve_orders(Campaign::Exceptions16, CampaignParams::up_to(7)).is_err());
        assert!(resolve_orders(Campaign::Gap, CampaignParams::range(5, 8)).is_err());
        assert_eq!(
            resolve_orders(Campaign::Gap, CampaignParams::default()).unwrap(),
            (6, 14)
        );
        assert_eq!(
            resolve_orders(Campaign::ExtensionArgument, CampaignParams::default()).unwrap(),
            (6, 8)
        );
    }

    #[test]
    fn disconnected_formula_examples() {
        let k2 = complete(2).unwrap();
        let k1 = Graph::empty(1).unwrap();
        assert_eq!(disconnected_f(&k2.disjoint_union(&k2).unwrap()), Ok(2));
        assert_eq!(disconnected_f(&Graph::empty(3).unwrap()), Ok(2));
        let k3k1 = complete(3).unwrap().disjoint_union(&k1).unwrap();
        assert_eq!(disconnected_f(&k3k1), Ok(3));
        assert_eq!(
            disconnected_f(&path(4).unwrap()),
            Err(VerifyError::Connected)
        );
    }

    #[test]
    fn predictions() {
        assert_eq!(
            predict_f(&claw()),
            Prediction::Exact {
                value: 2,
                rule: "module_of_order_2"
            }
        );
        let k3k1 = complete(3)
            .unwrap()
            .disjoint_union(&Graph::empty(1).unwrap())
            .unwrap();
        assert_eq!(
            predict_f(&k3k1),
            Prediction::Exact {
                value: 3,
                rule: "isolated_vertex"
            }
        );
        assert_eq!(
            predict_f(&cycle(7).unwrap()),
            Prediction::LowerBound {
                value: 3,
                rule: "order_at_least_7"
            }
        );
        assert_eq!(
            predict_f(&cycle(5).unwrap()),
            Prediction::Exact {
                value: 2,
                rule: "figure1_catalog"
            }
        );
        assert_eq!(
            predict_f(&path(2).unwrap()),
            Prediction::Exact {
                value: 0,
                rule: "f0_catalog"
            }
        );
        assert_eq!(predict_f(&cycle(6).unwrap()), Prediction::Compute);
    }

    #[test]
    fn gap_pair_shape() {
        assert_eq!(gap_construction(5), Err(VerifyError::GapOrder(5)));
        for n in 6..=12 {
            let GapPair { g, h, .. } = gap_construction(n).unwrap();
            assert_eq!(h.size(), g.size() + 1);
            let pendant = n - 2;
            assert_eq!(h.degree(pendant), 1);
            let rest = h.vertices() - VertexSet::singleton(pendant);
            let c = h.induced_subgraph(rest).unwrap();
            assert!(is_isomorphic(&c, &cycle(n - 1).unwrap()));
        }
    }

    #[test]
    fn gap_values_n8() {
        let p = gap_construction(8).unwrap();
        assert_eq!(failed_zero_forcing_number_brute_force(&p.g), 6);
        assert_eq!(failed_zero_forcing_number_brute_force(&p.h), 4);
    }
}
