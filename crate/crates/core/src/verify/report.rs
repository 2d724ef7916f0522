use std::collections::BTreeMap;
use std::fmt::Write;

use serde::{Deserialize, Serialize};

use crate::forcing::failed_zero_forcing_number;
use crate::io::graph6::parse_graph6;

/// A graph singled out by a campaign. `graph6` encodes the canonical
/// relabeling, so witnesses are label-invariant.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub graph6: String,
    pub order: usize,
    #[serde(rename = "F")]
    pub f: usize,
    pub annotations: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Discrepancy {
    pub claim: String,
    pub expected: String,
    pub observed: String,
}

impl Discrepancy {
    pub fn new(claim: impl Into<String>, expected: impl ToString, observed: impl ToString) -> Self {
        Discrepancy {
            claim: claim.into(),
            expected: expected.to_string(),
            observed: observed.to_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportParams {
    pub orders: Vec<usize>,
    pub connected_only: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CampaignReport {
    pub campaign: String,
    pub params: ReportParams,
    pub scanned: usize,
    pub matches: usize,
    pub witnesses: Vec<Witness>,
    pub discrepancies: Vec<Discrepancy>,
    pub findings: Vec<String>,
    pub counts: BTreeMap<String, usize>,
    /// Wall-clock seconds; left out unless timing was requested so that
    /// reports stay byte-identical across runs.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub runtime_secs: Option<f64>,
}

impl CampaignReport {
    pub fn new(campaign: &str, orders: Vec<usize>, connected_only: bool) -> Self {
        CampaignReport {
            campaign: campaign.to_string(),
            params: ReportParams {
                orders,
                connected_only,
            },
            scanned: 0,
            matches: 0,
            witnesses: Vec::new(),
            discrepancies: Vec::new(),
            findings: Vec::new(),
            counts: BTreeMap::new(),
            runtime_secs: None,
        }
    }

    pub fn is_clean(&self) -> bool {
        self.discrepancies.is_empty()
    }

    pub fn bump(&mut self, key: impl Into<String>, by: usize) {
        *self.counts.entry(key.into()).or_insert(0) += by;
    }

    /// Witnesses whose stored F does not match a fresh computation from the
    /// stored graph6 string.
    pub fn invalid_witnesses(&self) -> Vec<&Witness> {
        self.witnesses
            .iter()
            .filter(|w| match parse_graph6(w.graph6.as_bytes()) {
                Ok(g) => g.order() != w.order || failed_zero_forcing_number(&g) != w.f,
                Err(_) => true,
            })
            .collect()
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<CampaignReport, serde_json::Error> {
        serde_json::from_str(text)
    }

    /// Human-readable summary.
    pub fn pretty(&self) -> String {
        let mut out = String::new();
        let orders: Vec<String> = self.params.orders.iter().map(|n| n.to_string()).collect();
        writeln!(out, "campaign      {}", self.campaign).unwrap();
        writeln!(out, "orders        {}", orders.join(",")).unwrap();
        writeln!(out, "scanned       {}", self.scanned).unwrap();
        writeln!(out, "matches       {}", self.matches).unwrap();
        writeln!(out, "discrepancies {}", self.discrepancies.len()).unwrap();
        if let Some(t) = self.runtime_secs {
            writeln!(out, "runtime       {t:.3}s").unwrap();
        }
        if !self.counts.is_empty() {
            writeln!(out, "\ncounts").unwrap();
            for (k, v) in &self.counts {
                writeln!(out, "  {k:<32} {v}").unwrap();
            }
        }
        if !self.witnesses.is_empty() {
            writeln!(out, "\n  {:<14} {:>2} {:>2}  notes", "graph6", "n", "F").unwrap();
            for w in &self.witnesses {
                writeln!(
                    out,
                    "  {:<14} {:>2} {:>2}  {}",
                    w.graph6,
                    w.order,
                    w.f,
                    w.annotations.join("; ")
                )
                .unwrap();
            }
        }
        for d in &self.discrepancies {
            writeln!(
                out,
                "\nMISMATCH {}\n  expected {}\n  observed {}",
                d.claim, d.expected, d.observed
            )
            .unwrap();
        }
        for f in &self.findings {
            writeln!(out, "\nnote: {f}").unwrap();
        }
        out
    }
}
