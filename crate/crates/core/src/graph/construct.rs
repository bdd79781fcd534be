use super::analysis::{is_acyclic, is_hereditary, is_saturated, simple_cycles};
use super::{Cycle, EdgeId, Graph, GraphBuilder, GraphError, Path, VertexSet};

fn check_hereditary_saturated(g: &Graph, h: &VertexSet) -> Result<(), GraphError> {
    if is_hereditary(g, h)? && is_saturated(g, h)? {
        Ok(())
    } else {
        Err(GraphError::NotHereditarySaturated)
    }
}

/// The quotient graph `E/H`: vertices outside `H`, edges whose range is outside `H`.
pub fn quotient_graph(g: &Graph, h: &VertexSet) -> Result<Graph, GraphError> {
    check_hereditary_saturated(g, h)?;
    let mut b = GraphBuilder::default();
    for v in g.vertices().filter(|&v| !h.contains(v)) {
        b.vertex(g.vertex_name(v).to_string(), 0)?;
    }
    for e in g.edges().filter(|&e| !h.contains(g.range(e))) {
        b.edge(
            g.edge_name(e).to_string(),
            g.vertex_name(g.source(e)).to_string(),
            g.vertex_name(g.range(e)).to_string(),
            0,
        )?;
    }
    b.finish()
}

/// The hedgehog graph of a hereditary saturated set `H`, possibly truncated.
///
/// Its vertices are `H` together with the entry paths into `H` (paths that
/// start outside `H`, stay outside until their last edge, and end in `H`).
/// Each entry path `α` emits a single edge `~α` landing on `r(α)`.
#[derive(Debug, Clone)]
pub struct HedgehogGraph {
    pub graph: Graph,
    /// Vertices of `graph` copied from `H`.
    pub h_part: VertexSet,
    /// Vertices of `graph` standing for entry paths, parallel to `entry_paths`.
    pub f_part: VertexSet,
    /// Entry paths in the original graph, sorted.
    pub entry_paths: Vec<Path>,
    pub depth_bound: usize,
    /// Every entry path is present (there are finitely many, none longer than the bound).
    pub complete: bool,
    /// A cycle outside `H` that feeds `H`, making the entry paths infinite.
    pub detecting_cycle: Option<Cycle>,
}

pub fn hedgehog_graph(
    g: &Graph,
    h: &VertexSet,
    depth_bound: usize,
) -> Result<HedgehogGraph, GraphError> {
    if h.is_empty() {
        return Err(GraphError::EmptySet);
    }
    check_hereditary_saturated(g, h)?;

    let feeds = feeders(g, h);
    let mut entry_paths = Vec::new();
    let mut truncated = false;
    for s in g.vertices().filter(|&s| feeds[s.0]) {
        let mut stack = vec![Path::trivial(s)];
        while let Some(p) = stack.pop() {
            for &e in g.out_edges(p.range()) {
                let r = g.range(e);
                if !h.contains(r) && !feeds[r.0] {
                    continue;
                }
                if p.len() + 1 > depth_bound {
                    truncated = true;
                    break;
                }
                let q = p.push_edge(e, r);
                if h.contains(r) {
                    entry_paths.push(q);
                } else {
                    stack.push(q);
                }
            }
        }
    }
    entry_paths.sort();

    let detecting_cycle = feeding_cycle(g, h, &feeds);
    let complete = !truncated && detecting_cycle.is_none();

    let mut b = GraphBuilder::default();
    for v in h {
        b.vertex(g.vertex_name(v).to_string(), 0)?;
    }
    let entry_name = |p: &Path| {
        p.edges()
            .iter()
            .map(|&e| g.edge_name(e))
            .collect::<Vec<_>>()
            .join(".")
    };
    for p in &entry_paths {
        b.vertex(entry_name(p), 0)?;
    }
    for e in g.edges().filter(|&e| h.contains(g.source(e))) {
        b.edge(
            g.edge_name(e).to_string(),
            g.vertex_name(g.source(e)).to_string(),
            g.vertex_name(g.range(e)).to_string(),
            0,
        )?;
    }
    for p in &entry_paths {
        let name = entry_name(p);
        b.edge(
            format!("~{name}"),
            name,
            g.vertex_name(p.range()).to_string(),
            0,
        )?;
    }
    let graph = b.finish()?;
    let h_part = (0..h.len()).map(super::VertexId).collect();
    let f_part = (h.len()..h.len() + entry_paths.len())
        .map(super::VertexId)
        .collect();
    Ok(HedgehogGraph {
        graph,
        h_part,
        f_part,
        entry_paths,
        depth_bound,
        complete,
        detecting_cycle,
    })
}

/// Marks the vertices outside `h` that have a path into `h`.
fn feeders(g: &Graph, h: &VertexSet) -> Vec<bool> {
    let mut feeds = vec![false; g.vertex_count()];
    let mut stack: Vec<_> = h.iter().collect();
    let mut seen = vec![false; g.vertex_count()];
    while let Some(w) = stack.pop() {
        for &e in g.in_edges(w) {
            let y = g.source(e);
            if !h.contains(y) && !seen[y.0] {
                seen[y.0] = true;
                feeds[y.0] = true;
                stack.push(y);
            }
        }
    }
    feeds
}

/// First cycle lying outside `h` from which `h` can be reached.
fn feeding_cycle(g: &Graph, h: &VertexSet, feeds: &[bool]) -> Option<Cycle> {
    simple_cycles(g).into_iter().find(|c| {
        c.edges()
            .iter()
            .all(|&e: &EdgeId| !h.contains(g.source(e)) && feeds[g.source(e).0])
    })
}

impl HedgehogGraph {
    /// The hedgehog has no cycles.
    pub fn is_acyclic(&self) -> bool {
        is_acyclic(&self.graph)
    }
}
