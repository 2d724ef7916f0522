use std::fs;
use std::io::{self, BufReader, Read};
use std::path::Path;

use anyhow::{Context, Result};
use clap::Args;
use zfkit::enumerate::GraphStream;
use zfkit::io::{named_graph, parse_edge_list, parse_graph6, NamedGraphSpec};
use zfkit::Graph;

/// Where per-graph commands read their graph from.
#[derive(Args, Debug, Clone)]
#[group(required = true, multiple = false)]
pub struct GraphSource {
    /// Graph in graph6 format
    #[arg(long, value_name = "S")]
    pub graph6: Option<String>,
    /// Edge-list file (`-` for stdin)
    #[arg(long, value_name = "PATH")]
    pub edges: Option<String>,
    /// Named graph such as `path:6`, `complete_bipartite:2,3` or `net`
    #[arg(long, value_name = "NAME[:P1,P2]")]
    pub named: Option<String>,
    /// Newline-separated graph6 records (`-` for stdin)
    #[arg(long, value_name = "PATH")]
    pub stream: Option<String>,
}

pub fn read_text(path: &str) -> Result<Vec<u8>> {
    if path == "-" {
        let mut buf = Vec::new();
        io::stdin().read_to_end(&mut buf).context("reading stdin")?;
        Ok(buf)
    } else {
        fs::read(Path::new(path)).with_context(|| format!("reading {path}"))
    }
}

pub fn read_stream(path: &str) -> Result<GraphStream> {
    let bytes = read_text(path)?;
    GraphStream::from_graph6_reader(BufReader::new(&bytes[..]))
        .with_context(|| format!("parsing stream {path}"))
}

impl GraphSource {
    /// All graphs named by the source; one unless `--stream` was given.
    pub fn graphs(&self) -> Result<Vec<Graph>> {
        if let Some(s) = &self.graph6 {
            return Ok(vec![
                parse_graph6(s.as_bytes()).with_context(|| format!("parsing graph6 `{s}`"))?
            ]);
        }
        if let Some(p) = &self.edges {
            let text = String::from_utf8(read_text(p)?).context("edge list is not UTF-8")?;
            return Ok(vec![
                parse_edge_list(&text).with_context(|| format!("parsing edge list {p}"))?
            ]);
        }
        if let Some(n) = &self.named {
            let spec: NamedGraphSpec = n.parse()?;
            return Ok(vec![named_graph(&spec)?]);
        }
        let p = self.stream.as_deref().expect("clap enforces one source");
        Ok(read_stream(p)?.into_graphs())
    }
}
