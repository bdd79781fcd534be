use std::collections::VecDeque;

use super::{Cycle, Graph, GraphError, Path, VertexId, VertexSet};

/// The tree `T(X)`: every vertex reachable from `xs`, including `xs` itself.
pub fn tree(g: &Graph, xs: &VertexSet) -> Result<VertexSet, GraphError> {
    g.check_set(xs)?;
    let mut seen = vec![false; g.vertex_count()];
    let mut queue: VecDeque<VertexId> = xs.iter().collect();
    for v in xs {
        seen[v.0] = true;
    }
    while let Some(v) = queue.pop_front() {
        for &e in g.out_edges(v) {
            let w = g.range(e);
            if !seen[w.0] {
                seen[w.0] = true;
                queue.push_back(w);
            }
        }
    }
    Ok(g.vertices().filter(|v| seen[v.0]).collect())
}

pub fn sinks(g: &Graph) -> VertexSet {
    g.vertices().filter(|&v| g.is_sink(v)).collect()
}

pub fn is_bifurcation(g: &Graph, v: VertexId) -> Result<bool, GraphError> {
    g.check_vertex(v)?;
    Ok(g.out_degree(v) >= 2)
}

/// Vertices whose tree contains neither bifurcations nor cycles.
///
/// On a finite graph this is exactly the set of vertices whose forced walk
/// (out-degree one at every step) ends in a sink without revisiting a vertex.
pub fn line_points(g: &Graph) -> VertexSet {
    // 0 = unknown, 1 = line point, 2 = not
    let mut state = vec![0u8; g.vertex_count()];
    for start in g.vertices() {
        if state[start.0] != 0 {
            continue;
        }
        let mut walk = vec![start];
        let mut on_walk = vec![false; g.vertex_count()];
        on_walk[start.0] = true;
        let verdict = loop {
            let v = *walk.last().expect("walk is never empty");
            if state[v.0] != 0 && v != start {
                break state[v.0];
            }
            match g.out_edges(v) {
                [] => break 1,
                [e] => {
                    let w = g.range(*e);
                    if on_walk[w.0] {
                        break 2;
                    }
                    on_walk[w.0] = true;
                    walk.push(w);
                }
                _ => break 2,
            }
        };
        for v in walk {
            state[v.0] = verdict;
        }
    }
    g.vertices().filter(|v| state[v.0] == 1).collect()
}

pub fn is_hereditary(g: &Graph, xs: &VertexSet) -> Result<bool, GraphError> {
    g.check_set(xs)?;
    Ok(xs
        .iter()
        .all(|v| g.out_edges(v).iter().all(|&e| xs.contains(g.range(e)))))
}

/// Saturation: every non-sink whose edges all land in `xs` belongs to `xs`.
pub fn is_saturated(g: &Graph, xs: &VertexSet) -> Result<bool, GraphError> {
    g.check_set(xs)?;
    Ok(g.vertices().all(|v| {
        xs.contains(v) || g.is_sink(v) || g.out_edges(v).iter().any(|&e| !xs.contains(g.range(e)))
    }))
}

/// The staged closure `Λ_0 = T(X) ⊆ Λ_1 ⊆ …`, each stage adding the non-sinks
/// that only feed into the previous stage. The last entry is the fixpoint.
pub fn lambda_stages(g: &Graph, xs: &VertexSet) -> Result<Vec<VertexSet>, GraphError> {
    let mut stages = vec![tree(g, xs)?];
    loop {
        let prev = stages.last().expect("nonempty");
        let mut next = prev.clone();
        next.extend(g.vertices().filter(|&y| {
            !g.is_sink(y) && g.out_edges(y).iter().all(|&e| prev.contains(g.range(e)))
        }));
        if next == *prev {
            return Ok(stages);
        }
        stages.push(next);
    }
}

/// Smallest hereditary saturated set containing `xs`, by worklist: each
/// vertex keeps a count of its edges still leaving the set and joins once
/// that count drops to zero.
pub fn hereditary_saturated_closure(g: &Graph, xs: &VertexSet) -> Result<VertexSet, GraphError> {
    let start = tree(g, xs)?;
    let mut inside = vec![false; g.vertex_count()];
    let mut outside_edges: Vec<usize> = g.vertices().map(|v| g.out_degree(v)).collect();
    let mut work: Vec<VertexId> = start.iter().collect();
    for v in &start {
        inside[v.0] = true;
    }
    while let Some(w) = work.pop() {
        for &e in g.in_edges(w) {
            let y = g.source(e);
            outside_edges[y.0] -= 1;
            if outside_edges[y.0] == 0 && !inside[y.0] {
                inside[y.0] = true;
                work.push(y);
            }
        }
    }
    Ok(g.vertices().filter(|v| inside[v.0]).collect())
}

/// All cycles of `g`, each rotated to start at its least vertex, sorted.
///
/// A cycle is found exactly once, from its least vertex, by a depth-first
/// search confined to larger vertices.
pub fn simple_cycles(g: &Graph) -> Vec<Cycle> {
    fn dfs(
        g: &Graph,
        start: VertexId,
        at: VertexId,
        on_path: &mut [bool],
        edges: &mut Vec<super::EdgeId>,
        out: &mut Vec<Cycle>,
    ) {
        for &e in g.out_edges(at) {
            let w = g.range(e);
            if w == start {
                edges.push(e);
                let p = g.path(start, edges).expect("walk is a path");
                out.push(Cycle(p));
                edges.pop();
            } else if w > start && !on_path[w.0] {
                on_path[w.0] = true;
                edges.push(e);
                dfs(g, start, w, on_path, edges, out);
                edges.pop();
                on_path[w.0] = false;
            }
        }
    }

    let mut out = Vec::new();
    let mut on_path = vec![false; g.vertex_count()];
    for start in g.vertices() {
        on_path[start.0] = true;
        dfs(g, start, start, &mut on_path, &mut Vec::new(), &mut out);
        on_path[start.0] = false;
    }
    out.sort();
    out
}

/// Vertices in an order where every edge points forward, or `None` when the
/// graph has a cycle (Kahn's algorithm).
pub fn topological_order(g: &Graph) -> Option<Vec<VertexId>> {
    let mut indegree: Vec<usize> = g.vertices().map(|v| g.in_edges(v).len()).collect();
    let mut ready: VecDeque<VertexId> = g.vertices().filter(|v| indegree[v.0] == 0).collect();
    let mut order = Vec::with_capacity(g.vertex_count());
    while let Some(v) = ready.pop_front() {
        order.push(v);
        for &e in g.out_edges(v) {
            let w = g.range(e);
            indegree[w.0] -= 1;
            if indegree[w.0] == 0 {
                ready.push_back(w);
            }
        }
    }
    (order.len() == g.vertex_count()).then_some(order)
}

pub fn is_acyclic(g: &Graph) -> bool {
    topological_order(g).is_some()
}

pub fn cycle_has_exit(g: &Graph, c: &Cycle) -> Result<bool, GraphError> {
    // rejects cycles taken from another graph
    let c = Cycle::new(g, c.path())?;
    Ok(c.edges().iter().any(|&e| g.out_degree(g.source(e)) > 1))
}

/// Every cycle has an exit. Decided without enumerating cycles: a cycle
/// without exit is exactly a forced walk that returns to its start.
pub fn condition_l(g: &Graph) -> bool {
    g.vertices().all(|v| no_exit_cycle_through(g, v).is_none())
}

/// The cycle without exits passing through `v`, read as a closed path based
/// at `v`, if there is one.
pub fn no_exit_cycle_through(g: &Graph, v: VertexId) -> Option<Path> {
    let mut edges = Vec::new();
    let mut at = v;
    loop {
        match g.out_edges(at) {
            [e] => {
                edges.push(*e);
                at = g.range(*e);
                if at == v {
                    return Some(g.path(v, &edges).expect("forced walk is a path"));
                }
                if edges.len() > g.vertex_count() {
                    return None;
                }
            }
            _ => return None,
        }
    }
}
