//! Export of the extension DAG as a DOT or JSON document.
//!
//! Nodes are head arrays rendered as `[m,h1,…]`, grouped into one level per
//! genus; an edge connects a node to each of its one-step extensions and is
//! labeled with the raised class. All ordering is lexicographic by head
//! array, so the output is byte-stable for a given multiplicity and depth.

use std::io::Write;

use serde::Serialize;

use crate::check::relation_table;
use crate::error::{Error, Result};
use crate::extension::{expand_into, EnumConfig, LevelFrontier};

/// Output syntax for [`export_dag`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DagFormat {
    Dot,
    Json,
}

/// Size of an exported DAG.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DagStats {
    pub nodes: u64,
    pub edges: u64,
}

#[derive(Serialize)]
struct LevelDoc<'a> {
    g: u64,
    nodes: &'a [Vec<u64>],
}

#[derive(Serialize)]
struct EdgeDoc<'a> {
    from: &'a [u64],
    to: &'a [u64],
    index: usize,
}

#[derive(Serialize)]
struct DagDoc<'a> {
    m: u64,
    g_max: u64,
    levels: Vec<LevelDoc<'a>>,
    edges: Vec<EdgeDoc<'a>>,
}

fn render_node(node: &[u64]) -> String {
    let body = node
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(",");
    format!("[{body}]")
}

/// Writes the extension DAG for multiplicity `m` down to genus `g_max` and
/// returns its size.
pub fn export_dag<W: Write>(
    m: u64,
    g_max: u64,
    format: DagFormat,
    cfg: &EnumConfig,
    sink: &mut W,
) -> Result<DagStats> {
    if m < 2 {
        return Err(Error::InvalidModulus(m));
    }
    if g_max < m - 1 {
        return Err(Error::InvalidBound {
            bound: g_max,
            required: m - 1,
        });
    }
    let table = relation_table(m)?;

    let mut levels: Vec<Vec<Vec<u64>>> = Vec::new();
    let mut edges: Vec<(Vec<u64>, Vec<u64>, usize)> = Vec::new();
    let mut level: Vec<Vec<u64>> = LevelFrontier::root_level(m)?.nodes().to_vec();
    for _g in (m - 1)..g_max {
        let mut next: Vec<Vec<u64>> = Vec::new();
        let mut expanded = Vec::new();
        for node in &level {
            expanded.clear();
            expand_into(node, m, &table, &mut expanded)?;
            for child in &expanded {
                let raised = (1..node.len())
                    .find(|&i| node[i] != child[i])
                    .expect("a child differs from its parent in exactly one class");
                edges.push((node.clone(), child.clone(), raised));
                next.push(child.clone());
            }
        }
        next.sort_unstable();
        next.dedup();
        if next.len() as u64 > cfg.node_cap {
            return Err(Error::ResourceLimit(format!(
                "level of multiplicity {m} holds {} nodes, over the cap of {}",
                next.len(),
                cfg.node_cap
            )));
        }
        levels.push(std::mem::replace(&mut level, next));
    }
    levels.push(level);
    edges.sort_unstable();

    let stats = DagStats {
        nodes: levels.iter().map(|l| l.len() as u64).sum(),
        edges: edges.len() as u64,
    };

    match format {
        DagFormat::Dot => {
            writeln!(sink, "digraph extension_dag {{")?;
            writeln!(sink, "  rankdir=TB;")?;
            writeln!(sink, "  node [shape=box];")?;
            for (offset, nodes) in levels.iter().enumerate() {
                writeln!(sink, "  subgraph level_{} {{", m - 1 + offset as u64)?;
                writeln!(sink, "    rank=same;")?;
                for node in nodes {
                    writeln!(sink, "    \"{}\";", render_node(node))?;
                }
                writeln!(sink, "  }}")?;
            }
            for (from, to, index) in &edges {
                writeln!(
                    sink,
                    "  \"{}\" -> \"{}\" [label=\"h_{index}+{m}\"];",
                    render_node(from),
                    render_node(to)
                )?;
            }
            writeln!(sink, "}}")?;
        }
        DagFormat::Json => {
            let doc = DagDoc {
                m,
                g_max,
                levels: levels
                    .iter()
                    .enumerate()
                    .map(|(offset, nodes)| LevelDoc {
                        g: m - 1 + offset as u64,
                        nodes,
                    })
                    .collect(),
                edges: edges
                    .iter()
                    .map(|(from, to, index)| EdgeDoc {
                        from,
                        to,
                        index: *index,
                    })
                    .collect(),
            };
            let text = serde_json::to_string(&doc)
                .map_err(|e| Error::Internal(format!("JSON serialization failed: {e}")))?;
            writeln!(sink, "{text}")?;
        }
    }
    Ok(stats)
}
