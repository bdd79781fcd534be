//! Finite directed graphs and the purely graph-theoretic machinery behind
//! Leavitt path algebras: trees, bifurcations, line points, hereditary and
//! saturated sets, cycles, quotient graphs and hedgehog graphs.
//!
//! Vertices and edges are identified by their position in declaration order.
//! That order is the tie-breaker for every canonical choice made in this
//! crate, so output is reproducible byte for byte.

mod analysis;
mod construct;
mod dot;
mod parse;

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use thiserror::Error;

pub use analysis::{
    condition_l, cycle_has_exit, hereditary_saturated_closure, is_acyclic, is_bifurcation,
    is_hereditary, is_saturated, lambda_stages, line_points, no_exit_cycle_through, simple_cycles,
    sinks, topological_order, tree,
};
pub use construct::{hedgehog_graph, quotient_graph, HedgehogGraph};
pub use dot::to_dot;
pub use parse::parse_graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("line {line}: duplicate name `{name}`")]
    DuplicateName { line: usize, name: String },
    #[error("line {line}: edge `{edge}` uses undeclared endpoint `{vertex}`")]
    UndeclaredEndpoint {
        line: usize,
        edge: String,
        vertex: String,
    },
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("unknown edge `{0}`")]
    UnknownEdge(String),
    #[error("vertex set is not hereditary and saturated")]
    NotHereditarySaturated,
    #[error("vertex set must be nonempty")]
    EmptySet,
    #[error("edge sequence is not a path")]
    NotAPath,
    #[error("path is not a cycle of this graph")]
    NotACycle,
    #[error("graph has a cycle")]
    HasCycle,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub usize);

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeId(pub usize);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub name: String,
    pub source: VertexId,
    pub range: VertexId,
}

/// A finite directed graph with named vertices and edges.
///
/// Names are unique across vertices and edges together, so a bare name in an
/// element expression always resolves unambiguously.
#[derive(Debug, Clone)]
pub struct Graph {
    vertices: Vec<String>,
    edges: Vec<Edge>,
    out_edges: Vec<Vec<EdgeId>>,
    in_edges: Vec<Vec<EdgeId>>,
    names: HashMap<String, Name>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Name {
    Vertex(VertexId),
    Edge(EdgeId),
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.vertices == other.vertices && self.edges == other.edges
    }
}

impl Eq for Graph {}

impl Graph {
    /// Builds a graph from vertex names and `(edge, source, range)` triples.
    pub fn new<V, E>(vertices: V, edges: E) -> Result<Self, GraphError>
    where
        V: IntoIterator,
        V::Item: Into<String>,
        E: IntoIterator<Item = (String, String, String)>,
    {
        let mut builder = GraphBuilder::default();
        for v in vertices {
            builder.vertex(v.into(), 0)?;
        }
        for (name, s, r) in edges {
            builder.edge(name, s, r, 0)?;
        }
        builder.finish()
    }

    /// Convenience constructor used heavily by fixtures and tests.
    pub fn from_strs(vertices: &[&str], edges: &[(&str, &str, &str)]) -> Result<Self, GraphError> {
        Graph::new(
            vertices.iter().copied(),
            edges
                .iter()
                .map(|(e, s, r)| (e.to_string(), s.to_string(), r.to_string())),
        )
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> impl ExactSizeIterator<Item = VertexId> + '_ {
        (0..self.vertices.len()).map(VertexId)
    }

    pub fn edges(&self) -> impl ExactSizeIterator<Item = EdgeId> + '_ {
        (0..self.edges.len()).map(EdgeId)
    }

    pub fn vertex_name(&self, v: VertexId) -> &str {
        &self.vertices[v.0]
    }

    pub fn edge_name(&self, e: EdgeId) -> &str {
        &self.edges[e.0].name
    }

    pub fn edge(&self, e: EdgeId) -> &Edge {
        &self.edges[e.0]
    }

    pub fn source(&self, e: EdgeId) -> VertexId {
        self.edges[e.0].source
    }

    pub fn range(&self, e: EdgeId) -> VertexId {
        self.edges[e.0].range
    }

    /// Outgoing edges of `v` in declaration order.
    pub fn out_edges(&self, v: VertexId) -> &[EdgeId] {
        &self.out_edges[v.0]
    }

    pub fn in_edges(&self, v: VertexId) -> &[EdgeId] {
        &self.in_edges[v.0]
    }

    pub fn out_degree(&self, v: VertexId) -> usize {
        self.out_edges[v.0].len()
    }

    pub fn is_sink(&self, v: VertexId) -> bool {
        self.out_edges[v.0].is_empty()
    }

    pub fn contains_vertex(&self, v: VertexId) -> bool {
        v.0 < self.vertices.len()
    }

    pub fn contains_edge(&self, e: EdgeId) -> bool {
        e.0 < self.edges.len()
    }

    pub fn lookup(&self, name: &str) -> Option<Name> {
        self.names.get(name).copied()
    }

    pub fn vertex_id(&self, name: &str) -> Result<VertexId, GraphError> {
        match self.lookup(name) {
            Some(Name::Vertex(v)) => Ok(v),
            _ => Err(GraphError::UnknownVertex(name.to_string())),
        }
    }

    pub fn edge_id(&self, name: &str) -> Result<EdgeId, GraphError> {
        match self.lookup(name) {
            Some(Name::Edge(e)) => Ok(e),
            _ => Err(GraphError::UnknownEdge(name.to_string())),
        }
    }

    /// Resolves a list of vertex names into a set.
    pub fn vertex_set<'a, I>(&self, names: I) -> Result<VertexSet, GraphError>
    where
        I: IntoIterator<Item = &'a str>,
    {
        names.into_iter().map(|n| self.vertex_id(n)).collect()
    }

    pub fn all_vertices(&self) -> VertexSet {
        self.vertices().collect()
    }

    pub(crate) fn check_vertex(&self, v: VertexId) -> Result<(), GraphError> {
        if self.contains_vertex(v) {
            Ok(())
        } else {
            Err(GraphError::UnknownVertex(format!("#{}", v.0)))
        }
    }

    pub(crate) fn check_set(&self, xs: &VertexSet) -> Result<(), GraphError> {
        xs.iter().try_for_each(|v| self.check_vertex(v))
    }

    /// Builds the path `edges` starting at `source`, checking composability.
    pub fn path(&self, source: VertexId, edges: &[EdgeId]) -> Result<Path, GraphError> {
        self.check_vertex(source)?;
        let mut at = source;
        for &e in edges {
            if !self.contains_edge(e) || self.source(e) != at {
                return Err(GraphError::NotAPath);
            }
            at = self.range(e);
        }
        Ok(Path {
            source,
            range: at,
            edges: edges.to_vec(),
        })
    }

    /// Path from a nonempty edge sequence.
    pub fn path_of_edges(&self, edges: &[EdgeId]) -> Result<Path, GraphError> {
        let first = edges.first().ok_or(GraphError::NotAPath)?;
        if !self.contains_edge(*first) {
            return Err(GraphError::NotAPath);
        }
        self.path(self.source(*first), edges)
    }

    pub fn path_by_names(&self, names: &[&str]) -> Result<Path, GraphError> {
        let edges = names
            .iter()
            .map(|n| self.edge_id(n))
            .collect::<Result<Vec<_>, _>>()?;
        self.path_of_edges(&edges)
    }

    /// Renders a path as space-separated edge names, or the vertex name when trivial.
    pub fn path_name(&self, p: &Path) -> String {
        if p.is_trivial() {
            self.vertex_name(p.source).to_string()
        } else {
            p.edges
                .iter()
                .map(|&e| self.edge_name(e))
                .collect::<Vec<_>>()
                .join(" ")
        }
    }
}

#[derive(Default)]
pub(crate) struct GraphBuilder {
    vertices: Vec<String>,
    pending_edges: Vec<(String, String, String, usize)>,
    names: HashMap<String, Name>,
}

impl GraphBuilder {
    pub(crate) fn vertex(&mut self, name: String, line: usize) -> Result<(), GraphError> {
        if self.names.contains_key(&name) || self.pending_edges.iter().any(|p| p.0 == name) {
            return Err(GraphError::DuplicateName { line, name });
        }
        self.names
            .insert(name.clone(), Name::Vertex(VertexId(self.vertices.len())));
        self.vertices.push(name);
        Ok(())
    }

    pub(crate) fn edge(
        &mut self,
        name: String,
        source: String,
        range: String,
        line: usize,
    ) -> Result<(), GraphError> {
        if self.names.contains_key(&name) || self.pending_edges.iter().any(|p| p.0 == name) {
            return Err(GraphError::DuplicateName { line, name });
        }
        self.pending_edges.push((name, source, range, line));
        Ok(())
    }

    /// Endpoints are resolved here, so vertex declarations may follow edges.
    pub(crate) fn finish(self) -> Result<Graph, GraphError> {
        let GraphBuilder {
            vertices,
            pending_edges,
            mut names,
        } = self;
        let mut edges = Vec::with_capacity(pending_edges.len());
        for (name, s, r, line) in pending_edges {
            let resolve = |v: &str| match names.get(v) {
                Some(Name::Vertex(id)) => Ok(*id),
                _ => Err(GraphError::UndeclaredEndpoint {
                    line,
                    edge: name.clone(),
                    vertex: v.to_string(),
                }),
            };
            let source = resolve(&s)?;
            let range = resolve(&r)?;
            if names.contains_key(&name) {
                return Err(GraphError::DuplicateName { line, name });
            }
            names.insert(name.clone(), Name::Edge(EdgeId(edges.len())));
            edges.push(Edge {
                name,
                source,
                range,
            });
        }
        let mut out_edges = vec![Vec::new(); vertices.len()];
        let mut in_edges = vec![Vec::new(); vertices.len()];
        for (i, e) in edges.iter().enumerate() {
            out_edges[e.source.0].push(EdgeId(i));
            in_edges[e.range.0].push(EdgeId(i));
        }
        Ok(Graph {
            vertices,
            edges,
            out_edges,
            in_edges,
            names,
        })
    }
}

/// A path: a source vertex followed by a (possibly empty) sequence of
/// composable edges. The empty sequence is the trivial path at `source`.
///
/// Ordering is length-lexicographic over declaration order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Path {
    source: VertexId,
    range: VertexId,
    edges: Vec<EdgeId>,
}

impl Path {
    pub fn trivial(v: VertexId) -> Self {
        Path {
            source: v,
            range: v,
            edges: Vec::new(),
        }
    }

    pub fn source(&self) -> VertexId {
        self.source
    }

    pub fn range(&self) -> VertexId {
        self.range
    }

    pub fn edges(&self) -> &[EdgeId] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_trivial()
    }

    pub fn last_edge(&self) -> Option<EdgeId> {
        self.edges.last().copied()
    }

    /// `self` followed by `other`; `None` when the ranges do not meet.
    pub fn concat(&self, other: &Path) -> Option<Path> {
        if self.range != other.source {
            return None;
        }
        let mut edges = self.edges.clone();
        edges.extend_from_slice(&other.edges);
        Some(Path {
            source: self.source,
            range: other.range,
            edges,
        })
    }

    /// If `self = prefix · rest`, returns `rest`.
    pub fn strip_prefix(&self, prefix: &Path) -> Option<Path> {
        if self.source != prefix.source || !self.edges.starts_with(&prefix.edges) {
            return None;
        }
        Some(Path {
            source: prefix.range,
            range: self.range,
            edges: self.edges[prefix.edges.len()..].to_vec(),
        })
    }

    /// Drops the final edge; `prev_range` is the source of that edge.
    pub(crate) fn pop_edge(&self, prev_range: VertexId) -> Path {
        let mut edges = self.edges.clone();
        edges.pop();
        Path {
            source: self.source,
            range: prev_range,
            edges,
        }
    }

    pub(crate) fn push_edge(&self, e: EdgeId, new_range: VertexId) -> Path {
        let mut edges = self.edges.clone();
        edges.push(e);
        Path {
            source: self.source,
            range: new_range,
            edges,
        }
    }

    /// Vertices visited by the path, in order, including both endpoints.
    pub fn vertices(&self, g: &Graph) -> Vec<VertexId> {
        let mut vs = vec![self.source];
        vs.extend(self.edges.iter().map(|&e| g.range(e)));
        vs
    }
}

impl PartialOrd for Path {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Path {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.edges.len(), self.source, &self.edges).cmp(&(
            other.edges.len(),
            other.source,
            &other.edges,
        ))
    }
}

/// A cycle: a closed path whose edges have pairwise distinct sources,
/// rotated to start at its least vertex.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cycle(Path);

impl Cycle {
    /// Validates `path` as a cycle of `g` and puts it in canonical rotation.
    pub fn new(g: &Graph, path: &Path) -> Result<Self, GraphError> {
        if path.is_trivial() || path.source != path.range {
            return Err(GraphError::NotACycle);
        }
        // revalidate against this graph
        let path = g
            .path(path.source, &path.edges)
            .map_err(|_| GraphError::NotACycle)?;
        if path.source != path.range {
            return Err(GraphError::NotACycle);
        }
        let sources: BTreeSet<_> = path.edges.iter().map(|&e| g.source(e)).collect();
        if sources.len() != path.len() {
            return Err(GraphError::NotACycle);
        }
        let least = *sources.iter().next().expect("nonempty");
        Ok(Cycle(
            rotate(g, &path, least).expect("least vertex lies on the cycle"),
        ))
    }

    pub fn path(&self) -> &Path {
        &self.0
    }

    pub fn base(&self) -> VertexId {
        self.0.source
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn edges(&self) -> &[EdgeId] {
        self.0.edges()
    }

    /// The same cycle read as a closed path based at `v`, if `v` lies on it.
    pub fn based_at(&self, g: &Graph, v: VertexId) -> Option<Path> {
        rotate(g, &self.0, v)
    }

    pub fn vertices(&self, g: &Graph) -> Vec<VertexId> {
        self.0.edges.iter().map(|&e| g.source(e)).collect()
    }
}

fn rotate(g: &Graph, closed: &Path, v: VertexId) -> Option<Path> {
    let k = closed.edges.iter().position(|&e| g.source(e) == v)?;
    let mut edges = closed.edges[k..].to_vec();
    edges.extend_from_slice(&closed.edges[..k]);
    Some(Path {
        source: v,
        range: v,
        edges,
    })
}

/// A set of vertices, iterated in declaration order.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(BTreeSet<VertexId>);

impl VertexSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.0.contains(&v)
    }

    pub fn insert(&mut self, v: VertexId) -> bool {
        self.0.insert(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = VertexId> + '_ {
        self.0.iter().copied()
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        VertexSet(self.0.union(&other.0).copied().collect())
    }

    pub fn names<'g>(&self, g: &'g Graph) -> Vec<&'g str> {
        self.iter().map(|v| g.vertex_name(v)).collect()
    }

    /// `{a, b}` style rendering with graph names.
    pub fn display<'a>(&'a self, g: &'a Graph) -> impl fmt::Display + 'a {
        DisplaySet(self, g)
    }
}

/// Writes the graph in the format read by [`parse_graph`].
impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.vertex_count() > 0 {
            let names: Vec<_> = self.vertices().map(|v| self.vertex_name(v)).collect();
            writeln!(f, "vertices: {}", names.join(" "))?;
        }
        for e in self.edges() {
            writeln!(
                f,
                "edge {}: {} -> {}",
                self.edge_name(e),
                self.vertex_name(self.source(e)),
                self.vertex_name(self.range(e))
            )?;
        }
        Ok(())
    }
}

struct DisplaySet<'a>(&'a VertexSet, &'a Graph);

impl fmt::Display for DisplaySet<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.0.names(self.1).join(", "))
    }
}

impl FromIterator<VertexId> for VertexSet {
    fn from_iter<T: IntoIterator<Item = VertexId>>(iter: T) -> Self {
        VertexSet(iter.into_iter().collect())
    }
}

impl Extend<VertexId> for VertexSet {
    fn extend<T: IntoIterator<Item = VertexId>>(&mut self, iter: T) {
        self.0.extend(iter)
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = VertexId;
    type IntoIter = std::iter::Copied<std::collections::btree_set::Iter<'a, VertexId>>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter().copied()
    }
}
