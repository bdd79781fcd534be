//! The socle of `L_K(E)`: the ideal generated by the hereditary saturated
//! closure `H` of the line points. It is nonzero exactly when `E` has a sink,
//! and it is a direct sum of matrix algebras `M_{n(w)}(K)`, one per sink
//! `w`, where `n(w)` counts the paths ending at `w` (possibly infinitely
//! many).

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num::{BigUint, One, ToPrimitive};
use serde::{Serialize, Serializer};

use crate::algebra::{Algebra, Element, Monomial};
use crate::graph::{
    hedgehog_graph, hereditary_saturated_closure, line_points, quotient_graph, to_dot,
    topological_order, EdgeId, Graph, GraphError, HedgehogGraph, Path, VertexId, VertexSet,
};
use crate::scalar::Scalar;

/// `H`, the hereditary saturated closure of the line points.
pub fn socle_generators(g: &Graph) -> VertexSet {
    hereditary_saturated_closure(g, &line_points(g)).expect("line points belong to g")
}

pub fn socle_is_nonzero(g: &Graph) -> bool {
    !line_points(g).is_empty()
}

pub fn socle_equals_algebra(g: &Graph) -> bool {
    socle_generators(g) == g.all_vertices()
}

/// The projection `L(E) -> L(E/H)` for a hereditary saturated `H`.
#[derive(Debug, Clone)]
pub struct Quotient {
    target: Algebra,
    h: VertexSet,
    vertex_map: Vec<Option<VertexId>>,
    edge_map: Vec<Option<EdgeId>>,
}

impl Quotient {
    pub fn new(source: &Algebra, h: &VertexSet) -> Result<Self, GraphError> {
        let g = source.graph();
        let q = quotient_graph(g, h)?;
        let vertex_map = g
            .vertices()
            .map(|v| q.vertex_id(g.vertex_name(v)).ok())
            .collect();
        let edge_map = g.edges().map(|e| q.edge_id(g.edge_name(e)).ok()).collect();
        Ok(Quotient {
            target: Algebra::new(q, source.field()),
            h: h.clone(),
            vertex_map,
            edge_map,
        })
    }

    pub fn target(&self) -> &Algebra {
        &self.target
    }

    fn map_path(&self, p: &Path) -> Path {
        let edges: Vec<EdgeId> = p
            .edges()
            .iter()
            .map(|e| self.edge_map[e.0].expect("edge survives"))
            .collect();
        let source = self.vertex_map[p.source().0].expect("vertex survives");
        self.target
            .graph()
            .path(source, &edges)
            .expect("image of a path")
    }

    /// A monomial survives exactly when its common range is outside `H`:
    /// `H` is hereditary, so then no vertex of either path lies in `H`.
    pub fn image(&self, x: &Element) -> Element {
        let terms = x
            .terms()
            .filter(|(m, _)| !self.h.contains(m.real().range()))
            .map(|(m, k)| {
                let mono = Monomial::new(self.map_path(m.real()), self.map_path(m.ghost()))
                    .expect("ranges agree");
                (mono, k.clone())
            })
            .collect::<Vec<_>>();
        // special edges may differ in the quotient, so renormalise
        self.target.normal_form(terms)
    }
}

/// Image of `x` in `L(E/H)`.
pub fn quotient_image(h: &VertexSet, x: &Element) -> Result<Element, GraphError> {
    Ok(Quotient::new(x.algebra(), h)?.image(x))
}

/// Whether `x` lies in the socle, i.e. in the kernel of `L(E) -> L(E/H)`.
pub fn in_socle(x: &Element) -> bool {
    let h = socle_generators(x.algebra().graph());
    quotient_image(&h, x)
        .expect("closure is hereditary and saturated")
        .is_zero()
}

/// Whether `x ∈ Σ_{u ∈ vs} L(E)u`, decided by `x · Σ_{u ∈ vs} u = x`.
pub fn left_ideal_sum_membership(x: &Element, vs: &VertexSet) -> Result<bool, GraphError> {
    let alg = x.algebra();
    alg.graph().check_set(vs)?;
    if vs.is_empty() {
        return Err(GraphError::EmptySet);
    }
    let unit = vs.iter().fold(alg.zero(), |acc, v| &acc + &alg.vertex(v));
    Ok(&(x * &unit) == x)
}

/// Size of a matrix summand: a count of paths, or infinite.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum SummandSize {
    Finite(BigUint),
    Infinite,
}

impl fmt::Display for SummandSize {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SummandSize::Finite(n) => write!(f, "{n}"),
            SummandSize::Infinite => write!(f, "inf"),
        }
    }
}

impl Serialize for SummandSize {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            SummandSize::Finite(n) => match n.to_u64() {
                Some(small) => s.serialize_u64(small),
                None => s.serialize_str(&n.to_string()),
            },
            SummandSize::Infinite => s.serialize_str("inf"),
        }
    }
}

impl SummandSize {
    pub fn finite(n: u64) -> Self {
        SummandSize::Finite(BigUint::from(n))
    }
}

/// Number of paths ending at each vertex, `Infinite` when a cycle reaches it.
pub fn paths_ending_at(g: &Graph) -> Vec<SummandSize> {
    // everything downstream of a cycle is the range of infinitely many paths
    let mut infinite = on_cycles(g);
    let mut stack: Vec<VertexId> = g.vertices().filter(|v| infinite[v.0]).collect();
    while let Some(v) = stack.pop() {
        for &e in g.out_edges(v) {
            let w = g.range(e);
            if !infinite[w.0] {
                infinite[w.0] = true;
                stack.push(w);
            }
        }
    }
    let mut counts: Vec<Option<BigUint>> = vec![None; g.vertex_count()];
    fn count(g: &Graph, v: VertexId, infinite: &[bool], memo: &mut [Option<BigUint>]) -> BigUint {
        if let Some(n) = &memo[v.0] {
            return n.clone();
        }
        let mut n = BigUint::one();
        for &e in g.in_edges(v) {
            let s = g.source(e);
            debug_assert!(!infinite[s.0]);
            n += count(g, s, infinite, memo);
        }
        memo[v.0] = Some(n.clone());
        n
    }
    g.vertices()
        .map(|v| {
            if infinite[v.0] {
                SummandSize::Infinite
            } else {
                SummandSize::Finite(count(g, v, &infinite, &mut counts))
            }
        })
        .collect()
}

/// Marks vertices lying on some cycle, i.e. reachable from themselves.
fn on_cycles(g: &Graph) -> Vec<bool> {
    g.vertices()
        .map(|v| {
            let mut seen = vec![false; g.vertex_count()];
            let mut stack = vec![v];
            while let Some(x) = stack.pop() {
                for &e in g.out_edges(x) {
                    let w = g.range(e);
                    if !seen[w.0] {
                        seen[w.0] = true;
                        stack.push(w);
                    }
                }
            }
            seen[v.0]
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Summand {
    pub sink: VertexId,
    pub size: SummandSize,
}

/// The socle as a locally matricial algebra.
#[derive(Debug, Clone)]
pub struct SocleReport {
    pub line_points: VertexSet,
    pub closure: VertexSet,
    /// One summand `M_{n(w)}(K)` per sink `w` in `H`, in declaration order.
    pub summands: Vec<Summand>,
    /// `None` when `H` is empty.
    pub hedgehog: Option<HedgehogGraph>,
    pub socle_is_whole: bool,
}

impl SocleReport {
    /// Summand sizes as a sorted multiset.
    pub fn sizes(&self) -> Vec<SummandSize> {
        let mut out: Vec<_> = self.summands.iter().map(|s| s.size.clone()).collect();
        out.sort();
        out
    }
}

/// The default hedgehog depth bound, `|E⁰| + 1`.
pub fn default_depth(g: &Graph) -> usize {
    g.vertex_count() + 1
}

/// Line points, `H`, summand sizes and the hedgehog graph of `H`.
///
/// Panics if the hedgehog graph has a cycle, which cannot happen for a
/// hereditary saturated closure of line points.
pub fn socle_structure(g: &Graph, depth: Option<usize>) -> SocleReport {
    let lp = line_points(g);
    let closure = socle_generators(g);
    let counts = paths_ending_at(g);
    let summands = g
        .vertices()
        .filter(|&w| g.is_sink(w) && closure.contains(w))
        .map(|w| Summand {
            sink: w,
            size: counts[w.0].clone(),
        })
        .collect();
    let hedgehog = (!closure.is_empty()).then(|| {
        let hh = hedgehog_graph(g, &closure, depth.unwrap_or_else(|| default_depth(g)))
            .expect("closure is hereditary and saturated");
        assert!(hh.is_acyclic(), "hedgehog graph of the socle has a cycle");
        hh
    });
    let socle_is_whole = closure == g.all_vertices();
    SocleReport {
        line_points: lp,
        closure,
        summands,
        hedgehog,
        socle_is_whole,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SummandRepr {
    pub sink: String,
    pub size: SummandSize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HedgehogRepr {
    pub vertices: usize,
    pub edges: usize,
    pub entry_paths: Vec<String>,
    pub depth_bound: usize,
    pub complete: bool,
    pub detecting_cycle: Option<Vec<String>>,
    pub dot: String,
}

/// Name-based form of a [`SocleReport`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SocleReportRepr {
    pub line_points: Vec<String>,
    pub closure: Vec<String>,
    pub summands: Vec<SummandRepr>,
    pub socle_is_nonzero: bool,
    pub socle_is_whole: bool,
    pub hedgehog: Option<HedgehogRepr>,
}

impl SocleReport {
    pub fn to_repr(&self, g: &Graph) -> SocleReportRepr {
        let names = |s: &VertexSet| s.names(g).into_iter().map(str::to_string).collect();
        let hedgehog = self.hedgehog.as_ref().map(|hh| HedgehogRepr {
            vertices: hh.graph.vertex_count(),
            edges: hh.graph.edge_count(),
            entry_paths: hh.entry_paths.iter().map(|p| g.path_name(p)).collect(),
            depth_bound: hh.depth_bound,
            complete: hh.complete,
            detecting_cycle: hh.detecting_cycle.as_ref().map(|c| {
                c.edges()
                    .iter()
                    .map(|&e| g.edge_name(e).to_string())
                    .collect()
            }),
            dot: to_dot(&hh.graph),
        });
        SocleReportRepr {
            line_points: names(&self.line_points),
            closure: names(&self.closure),
            summands: self
                .summands
                .iter()
                .map(|s| SummandRepr {
                    sink: g.vertex_name(s.sink).to_string(),
                    size: s.size.clone(),
                })
                .collect(),
            socle_is_nonzero: !self.line_points.is_empty(),
            socle_is_whole: self.socle_is_whole,
            hedgehog,
        }
    }

    /// Plain-text rendering, one fact per line.
    pub fn to_text(&self, g: &Graph) -> String {
        let r = self.to_repr(g);
        let list = |xs: &[String]| {
            if xs.is_empty() {
                "(none)".to_string()
            } else {
                xs.join(" ")
            }
        };
        let mut out = String::new();
        out.push_str(&format!("line points: {}\n", list(&r.line_points)));
        out.push_str(&format!("closure: {}\n", list(&r.closure)));
        let summands: Vec<String> = r
            .summands
            .iter()
            .map(|s| format!("{}={}", s.sink, s.size))
            .collect();
        out.push_str(&format!("summands: {}\n", list(&summands)));
        out.push_str(&format!("socle nonzero: {}\n", r.socle_is_nonzero));
        out.push_str(&format!("socle is whole: {}\n", r.socle_is_whole));
        match &r.hedgehog {
            None => out.push_str("hedgehog: (none)\n"),
            Some(h) => {
                out.push_str(&format!(
                    "hedgehog: {} vertices, {} edges, depth bound {}, {}\n",
                    h.vertices,
                    h.edges,
                    h.depth_bound,
                    if h.complete { "complete" } else { "truncated" }
                ));
                let entries = if h.entry_paths.is_empty() {
                    "(none)".to_string()
                } else {
                    h.entry_paths.join(", ")
                };
                out.push_str(&format!("entry paths: {entries}\n"));
                if let Some(c) = &h.detecting_cycle {
                    out.push_str(&format!("feeding cycle: {}\n", c.join(" ")));
                }
            }
        }
        out
    }
}

/// Image of an element of `L(E)`, `E` finite and acyclic, in
/// `⊕_w M_{n(w)}(K)`: the block of sink `w` is indexed by the paths ending
/// at `w`, and `pq*` maps to `Σ_ρ E_{pρ, qρ}` over paths `ρ` from `r(p)` to
/// a sink.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixRep {
    /// `(sink, paths ending there)` in declaration order of sinks.
    pub blocks: Vec<(VertexId, Vec<Path>)>,
    /// Nonzero entries keyed by `(block, row, column)`.
    pub entries: BTreeMap<(usize, usize, usize), Scalar>,
}

struct PathIndex {
    blocks: Vec<(VertexId, Vec<Path>)>,
    position: HashMap<Path, (usize, usize)>,
    to_sinks: Vec<Vec<Path>>,
}

impl PathIndex {
    fn new(g: &Graph) -> Self {
        let mut all = Vec::new();
        for v in g.vertices() {
            let mut stack = vec![Path::trivial(v)];
            while let Some(p) = stack.pop() {
                for &e in g.out_edges(p.range()) {
                    stack.push(p.push_edge(e, g.range(e)));
                }
                all.push(p);
            }
        }
        all.sort();
        let mut blocks: Vec<(VertexId, Vec<Path>)> = g
            .vertices()
            .filter(|&w| g.is_sink(w))
            .map(|w| (w, Vec::new()))
            .collect();
        let mut to_sinks = vec![Vec::new(); g.vertex_count()];
        for p in &all {
            if let Some(b) = blocks.iter_mut().find(|(w, _)| *w == p.range()) {
                b.1.push(p.clone());
                to_sinks[p.source().0].push(p.clone());
            }
        }
        let position = blocks
            .iter()
            .enumerate()
            .flat_map(|(b, (_, ps))| ps.iter().enumerate().map(move |(i, p)| (p.clone(), (b, i))))
            .collect();
        PathIndex {
            blocks,
            position,
            to_sinks,
        }
    }
}

impl MatrixRep {
    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// Block sizes `n(w)` in sink order.
    pub fn sizes(&self) -> Vec<usize> {
        self.blocks.iter().map(|(_, ps)| ps.len()).collect()
    }

    /// `Σ_w n(w)²`.
    pub fn dimension(&self) -> usize {
        self.sizes().iter().map(|n| n * n).sum()
    }

    fn same_shape(&self, other: &MatrixRep) {
        assert_eq!(self.blocks, other.blocks, "matrices over different graphs");
    }

    pub fn add(&self, other: &MatrixRep) -> MatrixRep {
        self.same_shape(other);
        let mut entries = self.entries.clone();
        for (k, v) in &other.entries {
            let sum = match entries.get(k) {
                Some(a) => a + v,
                None => v.clone(),
            };
            if sum.is_zero() {
                entries.remove(k);
            } else {
                entries.insert(*k, sum);
            }
        }
        MatrixRep {
            blocks: self.blocks.clone(),
            entries,
        }
    }

    pub fn mul(&self, other: &MatrixRep) -> MatrixRep {
        self.same_shape(other);
        let mut rows: HashMap<(usize, usize), Vec<(usize, &Scalar)>> = HashMap::new();
        for (&(b, i, j), v) in &other.entries {
            rows.entry((b, i)).or_default().push((j, v));
        }
        let mut entries: BTreeMap<(usize, usize, usize), Scalar> = BTreeMap::new();
        for (&(b, i, k), a) in &self.entries {
            for &(j, c) in rows.get(&(b, k)).into_iter().flatten() {
                let prod = a * c;
                let slot = entries
                    .entry((b, i, j))
                    .or_insert_with(|| prod.field().zero());
                *slot = &*slot + &prod;
            }
        }
        entries.retain(|_, v| !v.is_zero());
        MatrixRep {
            blocks: self.blocks.clone(),
            entries,
        }
    }
}

/// The matrix image of `x`; the graph must be acyclic.
pub fn matrix_rep(x: &Element) -> Result<MatrixRep, GraphError> {
    let g = x.algebra().graph();
    if topological_order(g).is_none() {
        return Err(GraphError::HasCycle);
    }
    let idx = PathIndex::new(g);
    let mut entries: BTreeMap<(usize, usize, usize), Scalar> = BTreeMap::new();
    for (m, k) in x.terms() {
        for rho in &idx.to_sinks[m.real().range().0] {
            let p = m.real().concat(rho).expect("composable");
            let q = m.ghost().concat(rho).expect("composable");
            let (b, i) = idx.position[&p];
            let (_, j) = idx.position[&q];
            let slot = entries.entry((b, i, j)).or_insert_with(|| k.field().zero());
            *slot = &*slot + k;
        }
    }
    entries.retain(|_, v| !v.is_zero());
    Ok(MatrixRep {
        blocks: idx.blocks,
        entries,
    })
}

/// `matrix_rep` of the unit, for size checks.
pub fn matrix_sizes(g: &Graph) -> Result<Vec<usize>, GraphError> {
    Ok(matrix_rep(&Algebra::rational(g.clone()).one())?.sizes())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn set(g: &Graph, names: &[&str]) -> VertexSet {
        g.vertex_set(names.iter().copied()).unwrap()
    }

    fn elem(g: Graph, text: &str) -> Element {
        Algebra::rational(g).parse_element(text).unwrap()
    }

    #[test]
    fn generators_examples() {
        let w = fixtures::w();
        assert_eq!(socle_generators(&w), w.all_vertices());
        assert!(socle_generators(&fixtures::t()).is_empty());
        let ls = fixtures::ls();
        assert_eq!(socle_generators(&ls), set(&ls, &["v"]));
    }

    #[test]
    fn nonzero_and_whole() {
        let check = |g: &Graph| (socle_is_nonzero(g), socle_equals_algebra(g));
        assert_eq!(check(&fixtures::r2()), (false, false));
        assert_eq!(check(&fixtures::l3()), (true, true));
        assert_eq!(check(&fixtures::ls()), (true, false));
    }

    #[test]
    fn quotient_examples() {
        let ls = fixtures::ls();
        let h = set(&ls, &["v"]);
        let u = elem(ls.clone(), "u");
        assert_eq!(quotient_image(&h, &u).unwrap().to_string(), "1*u");
        assert!(quotient_image(&h, &elem(ls.clone(), "e"))
            .unwrap()
            .is_zero());
        // c c^* = u - e e^* in L(LS), while in the quotient c c^* = u
        let cc = elem(ls.clone(), "c c^*");
        assert_eq!(quotient_image(&h, &cc).unwrap().to_string(), "1*u");

        let t = elem(fixtures::t(), "e f^* + 2 u");
        let image = quotient_image(&VertexSet::new(), &t).unwrap();
        assert_eq!(image.to_string(), t.to_string());

        let w = fixtures::w();
        assert!(quotient_image(&set(&w, &["z"]), &elem(w.clone(), "z")).is_err());
    }

    #[test]
    fn membership_examples() {
        assert!(in_socle(&elem(fixtures::w(), "e^*")));
        assert!(!in_socle(&elem(fixtures::ls(), "u")));
        assert!(in_socle(&elem(fixtures::ls(), "e")));
        assert!(!in_socle(&elem(fixtures::t(), "f")));
        assert!(in_socle(&elem(fixtures::t(), "0")));

        let w = fixtures::w();
        let x = elem(w.clone(), "e^*");
        assert!(!left_ideal_sum_membership(&x, &set(&w, &["v", "w"])).unwrap());
        assert!(left_ideal_sum_membership(&elem(w.clone(), "v"), &set(&w, &["v"])).unwrap());
        assert!(left_ideal_sum_membership(&elem(w.clone(), "e"), &set(&w, &["v"])).unwrap());
        assert_eq!(
            left_ideal_sum_membership(&x, &VertexSet::new()),
            Err(GraphError::EmptySet)
        );
    }

    #[test]
    fn structure_examples() {
        let r = socle_structure(&fixtures::w(), None);
        assert_eq!(r.sizes(), [SummandSize::finite(2), SummandSize::finite(2)]);
        assert!(r.socle_is_whole);

        let r = socle_structure(&fixtures::l3(), None);
        assert_eq!(r.sizes(), [SummandSize::finite(3)]);

        let r = socle_structure(&fixtures::ls(), None);
        assert_eq!(r.sizes(), [SummandSize::Infinite]);
        let hh = r.hedgehog.as_ref().unwrap();
        assert!(!hh.complete && hh.detecting_cycle.is_some());
        assert!(!r.socle_is_whole);

        let r = socle_structure(&fixtures::r2(), None);
        assert!(r.summands.is_empty() && r.hedgehog.is_none());
    }

    #[test]
    fn report_text() {
        let g = fixtures::w();
        let text = socle_structure(&g, None).to_text(&g);
        assert!(text.contains("summands: v=2 w=2\n"), "{text}");
        assert!(text.contains("socle is whole: true\n"));
        let g = fixtures::ls();
        let text = socle_structure(&g, Some(2)).to_text(&g);
        assert!(text.contains("summands: v=inf\n"), "{text}");
        assert!(text.contains("entry paths: e, c e\n"), "{text}");
    }

    #[test]
    fn path_counts() {
        let counts = paths_ending_at(&fixtures::ls());
        assert_eq!(counts, [SummandSize::Infinite, SummandSize::Infinite]);
        let counts = paths_ending_at(&fixtures::line(4));
        let expect: Vec<_> = (1..=4).map(SummandSize::finite).collect();
        assert_eq!(counts, expect);
        // a cycle upstream of v but not through it
        let g = Graph::from_strs(
            &["a", "b", "v", "s"],
            &[
                ("x", "a", "b"),
                ("y", "b", "a"),
                ("z", "b", "v"),
                ("t", "s", "v"),
            ],
        )
        .unwrap();
        let counts = paths_ending_at(&g);
        assert_eq!(counts[2], SummandSize::Infinite);
        assert_eq!(counts[3], SummandSize::finite(1));
    }

    #[test]
    fn matrix_examples() {
        let x = elem(fixtures::w(), "z");
        let m = matrix_rep(&x).unwrap();
        assert_eq!(m.sizes(), [2, 2]);
        assert_eq!(m.mul(&m), m);
        let g = x.algebra().graph();
        let unit = |b: usize, p: &str, q: &str| {
            let find = |name: &str| {
                m.blocks[b]
                    .1
                    .iter()
                    .position(|path| g.path_name(path) == name)
                    .unwrap()
            };
            (b, find(p), find(q))
        };
        let keys: Vec<_> = m.entries.keys().copied().collect();
        assert_eq!(keys, [unit(0, "e", "e"), unit(1, "f", "f")]);

        let e = matrix_rep(&elem(fixtures::w(), "e")).unwrap();
        let keys: Vec<_> = e.entries.keys().copied().collect();
        assert_eq!(keys, [unit(0, "e", "v")]);

        assert_eq!(
            matrix_sizes(&fixtures::l3())
                .unwrap()
                .iter()
                .map(|n| n * n)
                .sum::<usize>(),
            9
        );
        assert_eq!(
            matrix_rep(&elem(fixtures::t(), "u")),
            Err(GraphError::HasCycle)
        );
    }
}
