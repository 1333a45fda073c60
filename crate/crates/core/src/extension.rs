//! Enumeration of gapsets by multiplicity and genus.
//!
//! Gapsets of multiplicity `m` form a leveled directed acyclic graph: level
//! `g` holds the head sets of genus `g`, and each node points to the head
//! sets obtained by raising one head by `m` while the sum inequalities still
//! hold. Level-by-level breadth-first traversal from the minimal node
//! `[m, m+1, …, 2m−1]` visits every gapset of that multiplicity exactly once
//! after deduplication (nodes can have several parents, so the structure is
//! a DAG rather than a tree).

use std::collections::BTreeMap;
use std::io::{BufRead, Write};

use rayon::prelude::*;

use crate::check::{check_head_conditions, relation_table, RelationTable};
use crate::error::{Error, Result};
use crate::headset::HeadSet;
use crate::stdbasis::MAX_MODULUS;

/// Default bound on nodes per frontier.
pub const DEFAULT_NODE_CAP: u64 = 1 << 28;

/// Guard for count-table allocations (one totals slot per genus).
pub const MAX_COUNT_GENUS: u64 = 10_000;

/// Brute-force counting refuses anything above this genus.
pub const MAX_ORACLE_GENUS: u64 = 14;

/// Below this frontier size levels are expanded on the calling thread.
const PAR_THRESHOLD: usize = 4096;

/// Nodes handed to each parallel expansion task.
const PAR_CHUNK: usize = 1024;

/// Tuning knobs for enumeration.
#[derive(Clone, Debug)]
pub struct EnumConfig {
    /// Maximum nodes per frontier before aborting with a resource error.
    pub node_cap: u64,
    /// Worker threads for level expansion; 0 uses the global thread pool.
    pub workers: usize,
}

impl Default for EnumConfig {
    fn default() -> Self {
        Self {
            node_cap: DEFAULT_NODE_CAP,
            workers: 0,
        }
    }
}

/// Runs `f` on a dedicated pool of `cfg.workers` threads, or inline on the
/// global pool when the worker count is 0.
pub(crate) fn with_pool<T: Send>(
    cfg: &EnumConfig,
    f: impl FnOnce() -> Result<T> + Send,
) -> Result<T> {
    match cfg.workers {
        0 => f(),
        n => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| Error::Internal(format!("failed to build thread pool: {e}")))?
            .install(f),
    }
}

/// The minimal head set of multiplicity `m`: `[m, m+1, …, 2m−1]`, the unique
/// gapset with genus `m − 1`.
pub fn root(m: u64) -> Result<HeadSet> {
    if m < 2 {
        return Err(Error::InvalidModulus(m));
    }
    if m > MAX_MODULUS {
        return Err(Error::ResourceLimit(format!(
            "modulus {m} exceeds the supported maximum {MAX_MODULUS}"
        )));
    }
    HeadSet::from_finite(&(m..2 * m).collect::<Vec<_>>())
}

/// Validates that `h` is usable as an enumeration node and returns its heads
/// as plain integers.
fn standard_finite_node(h: &HeadSet) -> Result<Vec<u64>> {
    if h.modulus() < 2 {
        return Err(Error::MalformedHeadSet(
            "extension needs a modulus of at least 2".into(),
        ));
    }
    if !h.all_finite() {
        return Err(Error::MalformedHeadSet(
            "extension needs all heads finite".into(),
        ));
    }
    if !h.is_standard() {
        return Err(Error::MalformedHeadSet(
            "extension needs a standard head set".into(),
        ));
    }
    if !check_head_conditions(h) {
        return Err(Error::MalformedHeadSet(
            "extension needs the head sum conditions to hold".into(),
        ));
    }
    Ok(h.heads().iter().map(|v| v.finite().unwrap()).collect())
}

/// Appends every valid one-step extension of `node` to `out`.
///
/// Raising head `i` by `m` can only break inequalities whose target class is
/// `i` itself — the raised head never appears as a summand for its own class
/// (that would need the partner ≡ 0), and as a summand elsewhere it only
/// loosens the bound — so rechecking the single bucket `i` is equivalent to
/// a full recheck of the candidate.
pub(crate) fn expand_into(
    node: &[u64],
    m: u64,
    table: &RelationTable,
    out: &mut Vec<Vec<u64>>,
) -> Result<()> {
    for i in 1..node.len() {
        let raised = node[i].checked_add(m).ok_or(Error::Overflow)?;
        let mut ok = true;
        for &(a, b) in table.pairs_for(i as u64) {
            let bound = node[a as usize]
                .checked_add(node[b as usize])
                .ok_or(Error::Overflow)?;
            if raised > bound {
                ok = false;
                break;
            }
        }
        if ok {
            let mut child = node.to_vec();
            child[i] = raised;
            out.push(child);
        }
    }
    Ok(())
}

/// One-step extensions of `h`, in ascending order of the raised class.
///
/// Always yields between 1 and `m − 1` children: the largest head can
/// always be raised, and there are only `m − 1` raisable classes.
pub fn children(h: &HeadSet) -> Result<Vec<HeadSet>> {
    let node = standard_finite_node(h)?;
    let m = h.modulus();
    let table = relation_table(m)?;
    let mut out = Vec::new();
    expand_into(&node, m, &table, &mut out)?;
    debug_assert!(!out.is_empty() && out.len() < m as usize);
    out.iter().map(|n| HeadSet::from_finite(n)).collect()
}

/// One-step restrictions of `h`: heads lowered by `m` where the result
/// stays a valid head set, in ascending order of the lowered class.
///
/// Lowering tightens inequalities in several buckets at once, so each
/// candidate gets a full recheck. Every non-root node has at least one
/// parent.
pub fn parents(h: &HeadSet) -> Result<Vec<HeadSet>> {
    let node = standard_finite_node(h)?;
    let m = h.modulus();
    if h.genus()? == m - 1 {
        return Err(Error::RootHasNoParent);
    }
    let mut out = Vec::new();
    for i in 1..node.len() {
        if node[i] > 2 * m {
            let mut lowered = node.clone();
            lowered[i] -= m;
            let candidate = HeadSet::from_finite(&lowered)?;
            if check_head_conditions(&candidate) {
                out.push(candidate);
            }
        }
    }
    debug_assert!(!out.is_empty());
    Ok(out)
}

/// All gapset head sets sharing one multiplicity and genus: one level of the
/// extension DAG, deduplicated and sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LevelFrontier {
    m: u64,
    g: u64,
    /// Head arrays, strictly ascending in lexicographic order.
    nodes: Vec<Vec<u64>>,
}

impl LevelFrontier {
    /// The frontier at the lowest populated level, holding only the root.
    pub fn root_level(m: u64) -> Result<Self> {
        let r = root(m)?;
        let node = r.heads().iter().map(|v| v.finite().unwrap()).collect();
        Ok(Self {
            m,
            g: m - 1,
            nodes: vec![node],
        })
    }

    /// Multiplicity shared by every node.
    pub fn multiplicity(&self) -> u64 {
        self.m
    }

    /// Genus shared by every node.
    pub fn genus(&self) -> u64 {
        self.g
    }

    /// Number of nodes.
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    /// True when the level holds no node (genus below `m − 1`).
    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// The head arrays, strictly ascending lexicographically.
    pub fn nodes(&self) -> &[Vec<u64>] {
        &self.nodes
    }

    /// The nodes as validated head sets.
    pub fn head_sets(&self) -> impl Iterator<Item = HeadSet> + '_ {
        self.nodes
            .iter()
            .map(|n| HeadSet::from_finite(n).expect("frontier nodes are valid head sets"))
    }

    /// The next level: children of every node, merged and deduplicated.
    ///
    /// Expansion may be split across worker threads; the merge sorts the
    /// combined candidate list and drops duplicates, so the result does not
    /// depend on the split.
    pub fn advance(&self, cfg: &EnumConfig) -> Result<Self> {
        let m = self.m;
        let table = relation_table(m)?;
        let mut merged: Vec<Vec<u64>> = if self.nodes.len() >= PAR_THRESHOLD {
            let per_chunk: Vec<Vec<Vec<u64>>> = self
                .nodes
                .par_chunks(PAR_CHUNK)
                .map(|chunk| {
                    let mut out = Vec::with_capacity(chunk.len() * 2);
                    for node in chunk {
                        expand_into(node, m, &table, &mut out)?;
                    }
                    Ok(out)
                })
                .collect::<Result<_>>()?;
            per_chunk.into_iter().flatten().collect()
        } else {
            let mut out = Vec::with_capacity(self.nodes.len() * 2);
            for node in &self.nodes {
                expand_into(node, m, &table, &mut out)?;
            }
            out
        };
        merged.sort_unstable();
        merged.dedup();
        if merged.len() as u64 > cfg.node_cap {
            return Err(Error::ResourceLimit(format!(
                "frontier for multiplicity {m} at genus {} holds {} nodes, over the cap of {}",
                self.g + 1,
                merged.len(),
                cfg.node_cap
            )));
        }
        Ok(Self {
            m,
            g: self.g + 1,
            nodes: merged,
        })
    }
}

/// The frontier of all multiplicity-`m` gapsets of genus `g`.
///
/// Empty when `g < m − 1`; otherwise reached by advancing level by level
/// from the root.
pub fn enumerate_level(m: u64, g: u64, cfg: &EnumConfig) -> Result<LevelFrontier> {
    if m < 2 {
        return Err(Error::InvalidModulus(m));
    }
    if g < m - 1 {
        return Ok(LevelFrontier {
            m,
            g,
            nodes: Vec::new(),
        });
    }
    with_pool(cfg, || {
        let mut frontier = LevelFrontier::root_level(m)?;
        while frontier.genus() < g {
            frontier = frontier.advance(cfg)?;
        }
        Ok(frontier)
    })
}

/// Counts of gapsets by multiplicity and genus, with per-genus totals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountTable {
    g_max: u64,
    counts: BTreeMap<(u64, u64), u64>,
    totals: Vec<u64>,
}

impl CountTable {
    /// Builds totals from per-(multiplicity, genus) counts and re-derives
    /// the structural facts the enumeration guarantees; a violation is
    /// reported as an internal error because it can only come from a bug or
    /// from inconsistent resumed state.
    pub fn from_parts(g_max: u64, counts: BTreeMap<(u64, u64), u64>) -> Result<Self> {
        let mut totals = vec![0u64; g_max as usize + 1];
        // Genus 0 is the whole of ℕ₀, multiplicity 1 — the one gapset
        // outside the m ≥ 2 enumeration.
        totals[0] = 1;
        for (&(m, g), &n) in &counts {
            if m < 2 || g < m - 1 || g > g_max {
                return Err(Error::Internal(format!(
                    "count entry ({m}, {g}) outside the table range"
                )));
            }
            totals[g as usize] += n;
        }
        for (&(m, g), &n) in &counts {
            if g == m - 1 && n != 1 {
                return Err(Error::Internal(format!(
                    "level ({m}, {g}) must hold exactly the root, found {n}"
                )));
            }
            if g == m && n != m - 1 {
                return Err(Error::Internal(format!(
                    "level ({m}, {g}) must hold {} nodes, found {n}",
                    m - 1
                )));
            }
        }
        if let Some(w) = totals.windows(2).position(|w| w[0] > w[1]) {
            return Err(Error::Internal(format!(
                "totals decrease from genus {w} to {}",
                w + 1
            )));
        }
        Ok(Self {
            g_max,
            counts,
            totals,
        })
    }

    /// Largest genus covered.
    pub fn g_max(&self) -> u64 {
        self.g_max
    }

    /// Count for one (multiplicity, genus) cell, when in range.
    pub fn count(&self, m: u64, g: u64) -> Option<u64> {
        self.counts.get(&(m, g)).copied()
    }

    /// Per-genus totals, indexed by genus.
    pub fn totals(&self) -> &[u64] {
        &self.totals
    }

    /// All cells as `(multiplicity, genus, count)`, sorted.
    pub fn iter(&self) -> impl Iterator<Item = (u64, u64, u64)> + '_ {
        self.counts.iter().map(|(&(m, g), &n)| (m, g, n))
    }
}

/// Full count table up to `g_max`: one streaming breadth-first run per
/// multiplicity, so at most one frontier is resident at a time.
pub fn count_table(g_max: u64, cfg: &EnumConfig) -> Result<CountTable> {
    if g_max > MAX_COUNT_GENUS {
        return Err(Error::ResourceLimit(format!(
            "count table to genus {g_max} exceeds the supported maximum {MAX_COUNT_GENUS}"
        )));
    }
    with_pool(cfg, || {
        let mut counts = BTreeMap::new();
        for m in 2..=g_max + 1 {
            let mut frontier = LevelFrontier::root_level(m)?;
            counts.insert((m, frontier.genus()), frontier.len() as u64);
            while frontier.genus() < g_max {
                frontier = frontier.advance(cfg)?;
                counts.insert((m, frontier.genus()), frontier.len() as u64);
            }
        }
        CountTable::from_parts(g_max, counts)
    })
}

/// Independent counting oracle: the number of size-`g` subsets of
/// `{1, …, 2g−1}` in which every sum landing in the subset has a summand in
/// the subset.
///
/// Gapsets of genus `g` have their largest gap at most `2g − 1`, so the
/// window is exhaustive. Exponential; refuses genus beyond
/// [`MAX_ORACLE_GENUS`].
pub fn brute_force_genus_count(g: u64) -> Result<u64> {
    if g > MAX_ORACLE_GENUS {
        return Err(Error::GenusTooLarge {
            genus: g,
            max: MAX_ORACLE_GENUS,
        });
    }
    if g == 0 {
        return Ok(1);
    }
    let width = (2 * g - 1) as u32;

    // Bit v−1 of a mask encodes membership of the value v.
    fn closed(mask: u32, width: u32) -> bool {
        for s in 1..=width {
            if mask & (1 << (s - 1)) == 0 {
                continue;
            }
            for x in 1..=s / 2 {
                let y = s - x;
                if mask & (1 << (x - 1)) == 0 && mask & (1 << (y - 1)) == 0 {
                    return false;
                }
            }
        }
        true
    }

    let mut count = 0u64;
    let mut mask: u32 = (1u32 << g) - 1;
    let limit: u32 = 1u32 << width;
    while mask < limit {
        if closed(mask, width) {
            count += 1;
        }
        // Next mask with the same number of set bits.
        let c = mask & mask.wrapping_neg();
        let r = mask + c;
        mask = (((r ^ mask) >> 2) / c) | r;
    }
    Ok(count)
}

/// Expected head sum for every node of a `(m, g)` frontier.
fn level_head_sum(m: u64, g: u64) -> u128 {
    g as u128 * m as u128 + m as u128 * (m as u128 - 1) / 2
}

/// Serializes a frontier: a header carrying the multiplicity, genus, and
/// per-node head sum, then one space-separated head array per line in
/// ascending lexicographic order.
pub fn write_frontier<W: Write>(frontier: &LevelFrontier, w: &mut W) -> Result<()> {
    use std::fmt::Write as _;
    writeln!(
        w,
        "# m={} g={} sum={}",
        frontier.m,
        frontier.g,
        level_head_sum(frontier.m, frontier.g)
    )?;
    let mut line = String::new();
    for node in &frontier.nodes {
        line.clear();
        for (i, v) in node.iter().enumerate() {
            if i > 0 {
                line.push(' ');
            }
            let _ = write!(line, "{v}");
        }
        writeln!(w, "{line}")?;
    }
    Ok(())
}

fn corrupt(msg: impl Into<String>) -> Error {
    Error::CorruptCheckpoint(msg.into())
}

/// Loads a frontier written by [`write_frontier`], validating the header
/// checksum, the per-node head sums and residues, the sum conditions, and
/// the ordering before accepting any node.
pub fn read_frontier<R: BufRead>(r: &mut R) -> Result<LevelFrontier> {
    let mut lines = r.lines();
    let header: String = match lines.next() {
        Some(line) => line.map_err(Error::Io)?,
        None => return Err(corrupt("missing header line")),
    };
    let rest = header
        .strip_prefix("# ")
        .ok_or_else(|| corrupt("header must start with '# '"))?;
    let mut m = None;
    let mut g = None;
    let mut sum = None;
    for field in rest.split_whitespace() {
        let (key, value) = field
            .split_once('=')
            .ok_or_else(|| corrupt(format!("bad header field '{field}'")))?;
        let slot = match key {
            "m" => &mut m,
            "g" => &mut g,
            "sum" => &mut sum,
            _ => return Err(corrupt(format!("unknown header field '{key}'"))),
        };
        *slot = Some(
            value
                .parse::<u64>()
                .map_err(|_| corrupt(format!("non-numeric header field '{field}'")))?,
        );
    }
    let (m, g, sum) = match (m, g, sum) {
        (Some(m), Some(g), Some(sum)) => (m, g, sum),
        _ => return Err(corrupt("header must carry m, g, and sum")),
    };
    if m < 2 {
        return Err(corrupt(format!("modulus {m} below 2")));
    }
    if g < m - 1 {
        return Err(corrupt(format!("genus {g} below the root level {}", m - 1)));
    }
    let expected_sum = level_head_sum(m, g);
    if u128::from(sum) != expected_sum {
        return Err(corrupt(format!(
            "header sum {sum} does not match the expected {expected_sum} for m={m} g={g}"
        )));
    }

    let mut nodes: Vec<Vec<u64>> = Vec::new();
    for (idx, line) in lines.enumerate() {
        let line = line.map_err(Error::Io)?;
        if line.trim().is_empty() {
            continue;
        }
        let node: Vec<u64> = line
            .split_whitespace()
            .map(|tok| {
                tok.parse::<u64>()
                    .map_err(|_| corrupt(format!("non-numeric head '{tok}' on node line {idx}")))
            })
            .collect::<Result<_>>()?;
        if node.len() as u64 != m {
            return Err(corrupt(format!(
                "node line {idx} has {} heads, expected {m}",
                node.len()
            )));
        }
        let head_set = HeadSet::from_finite(&node)
            .map_err(|e| corrupt(format!("node line {idx}: {e}")))?;
        if !head_set.is_standard() || !check_head_conditions(&head_set) {
            return Err(corrupt(format!("node line {idx} is not a valid gapset node")));
        }
        let node_sum: u128 = node[1..].iter().map(|&v| v as u128).sum();
        if node_sum != expected_sum {
            return Err(corrupt(format!(
                "node line {idx} has head sum {node_sum}, expected {expected_sum}"
            )));
        }
        if let Some(prev) = nodes.last() {
            if *prev >= node {
                return Err(corrupt(format!(
                    "node line {idx} breaks the ascending order"
                )));
            }
        }
        nodes.push(node);
    }
    if nodes.is_empty() {
        return Err(corrupt("no nodes: every populated level has at least one"));
    }
    Ok(LevelFrontier { m, g, nodes })
}
