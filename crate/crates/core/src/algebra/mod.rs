//! Exact arithmetic in the Leavitt path algebra `L_K(E)` of a finite graph.
//!
//! Elements are finite combinations of monomials `p q*` (`p`, `q` paths with
//! a common range) kept in a canonical normal form. The normal form comes from
//! orienting the relation `v = Σ_{s(e)=v} e e*` as a rewrite rule: for every
//! non-sink `v` one outgoing edge `γ_v` is designated special, and a monomial
//! is reducible exactly when both its real and ghost part end in the same
//! special edge. Such a monomial is rewritten as
//!
//! ```text
//! p'γ (q'γ)*  ->  p'q'*  -  Σ_{e ∈ s⁻¹(v), e ≠ γ} (p'e)(q'e)*
//! ```
//!
//! The irreducible monomials form a basis, so two elements are equal exactly
//! when their normal forms coincide.

mod corner;
mod element;
mod expr;
mod relations;
pub mod rewrite;

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::sync::Arc;

use thiserror::Error;

use crate::graph::{EdgeId, Graph, GraphError, Path, VertexId};
use crate::scalar::{Field, Scalar, ScalarError};

pub use element::Element;
pub use relations::{check_relations, Relation, RelationCheck, RelationReport};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("elements belong to different algebras")]
    MixedAlgebras,
    #[error("operation is undefined on the zero element")]
    ZeroElement,
    #[error("unknown name `{0}`")]
    UnknownName(String),
    #[error("column {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("malformed witness: {0}")]
    MalformedWitness(String),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// The designated edge `γ_v` of each non-sink: its first outgoing edge in
/// declaration order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpecialEdges(Vec<Option<EdgeId>>);

impl SpecialEdges {
    pub fn of(g: &Graph) -> Self {
        SpecialEdges(
            g.vertices()
                .map(|v| g.out_edges(v).first().copied())
                .collect(),
        )
    }

    pub fn get(&self, v: VertexId) -> Option<EdgeId> {
        self.0.get(v.0).copied().flatten()
    }

    pub fn is_special(&self, g: &Graph, e: EdgeId) -> bool {
        self.get(g.source(e)) == Some(e)
    }

    /// `(v, γ_v)` pairs for non-sinks in declaration order.
    pub fn iter(&self) -> impl Iterator<Item = (VertexId, EdgeId)> + '_ {
        self.0
            .iter()
            .enumerate()
            .filter_map(|(i, e)| e.map(|e| (VertexId(i), e)))
    }
}

/// A generator of the algebra: a vertex, a real edge or a ghost edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    Vertex(VertexId),
    Edge(EdgeId),
    Ghost(EdgeId),
}

impl Generator {
    pub fn name(&self, g: &Graph) -> String {
        match *self {
            Generator::Vertex(v) => g.vertex_name(v).to_string(),
            Generator::Edge(e) => g.edge_name(e).to_string(),
            Generator::Ghost(e) => format!("{}^*", g.edge_name(e)),
        }
    }

    /// Inverse of [`Generator::name`].
    pub fn parse(g: &Graph, text: &str) -> Result<Self, AlgebraError> {
        let (base, ghost) = match text.strip_suffix("^*") {
            Some(b) => (b, true),
            None => (text, false),
        };
        match (g.lookup(base), ghost) {
            (Some(crate::graph::Name::Vertex(v)), false) => Ok(Generator::Vertex(v)),
            (Some(crate::graph::Name::Edge(e)), false) => Ok(Generator::Edge(e)),
            (Some(crate::graph::Name::Edge(e)), true) => Ok(Generator::Ghost(e)),
            _ => Err(AlgebraError::UnknownName(text.to_string())),
        }
    }

    pub fn adjoint(self) -> Self {
        match self {
            Generator::Edge(e) => Generator::Ghost(e),
            Generator::Ghost(e) => Generator::Edge(e),
            v => v,
        }
    }
}

/// The monomial `p q*`, with `r(p) = r(q)`.
///
/// Monomials are ordered by total length `l(p) + l(q)`, then by `p`, then by
/// `q`, each path compared length-lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    real: Path,
    ghost: Path,
}

impl Monomial {
    /// `None` when the ranges differ (the product `p q*` would be zero).
    pub fn new(real: Path, ghost: Path) -> Option<Self> {
        (real.range() == ghost.range()).then_some(Monomial { real, ghost })
    }

    pub fn vertex(v: VertexId) -> Self {
        Monomial {
            real: Path::trivial(v),
            ghost: Path::trivial(v),
        }
    }

    pub fn path(p: Path) -> Self {
        let r = p.range();
        Monomial {
            real: p,
            ghost: Path::trivial(r),
        }
    }

    pub fn ghost_path(q: Path) -> Self {
        let r = q.range();
        Monomial {
            real: Path::trivial(r),
            ghost: q,
        }
    }

    pub fn edge(g: &Graph, e: EdgeId) -> Self {
        Monomial::path(g.path_of_edges(&[e]).expect("single edge is a path"))
    }

    pub fn ghost_edge(g: &Graph, e: EdgeId) -> Self {
        Monomial::ghost_path(g.path_of_edges(&[e]).expect("single edge is a path"))
    }

    pub fn generator(g: &Graph, gen: Generator) -> Self {
        match gen {
            Generator::Vertex(v) => Monomial::vertex(v),
            Generator::Edge(e) => Monomial::edge(g, e),
            Generator::Ghost(e) => Monomial::ghost_edge(g, e),
        }
    }

    pub fn real(&self) -> &Path {
        &self.real
    }

    pub fn ghost(&self) -> &Path {
        &self.ghost
    }

    /// `l(p) - l(q)`.
    pub fn degree(&self) -> i64 {
        self.real.len() as i64 - self.ghost.len() as i64
    }

    pub fn total_len(&self) -> usize {
        self.real.len() + self.ghost.len()
    }

    /// `s(p)`: the vertex `u` with `u · pq* = pq*`.
    pub fn left_vertex(&self) -> VertexId {
        self.real.source()
    }

    /// `s(q)`: the vertex `u` with `pq* · u = pq*`.
    pub fn right_vertex(&self) -> VertexId {
        self.ghost.source()
    }

    pub fn is_vertex(&self) -> bool {
        self.real.is_trivial() && self.ghost.is_trivial()
    }

    pub fn is_real(&self) -> bool {
        self.ghost.is_trivial()
    }

    /// `q p*`.
    pub fn adjoint(&self) -> Self {
        Monomial {
            real: self.ghost.clone(),
            ghost: self.real.clone(),
        }
    }

    /// The product of two monomials before normalisation:
    /// `(p₁q₁*)(p₂q₂*)` is `p₁ r q₂*` if `p₂ = q₁ r`, `p₁ (q₂ r)*` if
    /// `q₁ = p₂ r`, and zero otherwise.
    pub fn raw_product(&self, other: &Monomial) -> Option<Monomial> {
        if let Some(rest) = other.real.strip_prefix(&self.ghost) {
            let real = self.real.concat(&rest).expect("ranges meet");
            Some(Monomial {
                real,
                ghost: other.ghost.clone(),
            })
        } else if let Some(rest) = self.ghost.strip_prefix(&other.real) {
            let ghost = other.ghost.concat(&rest).expect("ranges meet");
            Some(Monomial {
                real: self.real.clone(),
                ghost,
            })
        } else {
            None
        }
    }

    /// Renders as juxtaposed generators, e.g. `a b d^* c^*` for `(ab)(cd)*`.
    pub fn display(&self, g: &Graph) -> String {
        if self.is_vertex() {
            return g.vertex_name(self.real.source()).to_string();
        }
        let real = self
            .real
            .edges()
            .iter()
            .map(|&e| g.edge_name(e).to_string());
        let ghost = self
            .ghost
            .edges()
            .iter()
            .rev()
            .map(|&e| format!("{}^*", g.edge_name(e)));
        real.chain(ghost).collect::<Vec<_>>().join(" ")
    }

    /// Generators whose product is this monomial.
    pub fn generators(&self) -> Vec<Generator> {
        if self.is_vertex() {
            return vec![Generator::Vertex(self.real.source())];
        }
        let real = self.real.edges().iter().map(|&e| Generator::Edge(e));
        let ghost = self
            .ghost
            .edges()
            .iter()
            .rev()
            .map(|&e| Generator::Ghost(e));
        real.chain(ghost).collect()
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.total_len(), &self.real, &self.ghost).cmp(&(
            other.total_len(),
            &other.real,
            &other.ghost,
        ))
    }
}

#[derive(Debug)]
struct Inner {
    graph: Graph,
    field: Field,
    special: SpecialEdges,
}

/// `L_K(E)` for a fixed graph and field. Cheap to clone; elements hold a handle.
#[derive(Debug, Clone)]
pub struct Algebra(Arc<Inner>);

impl PartialEq for Algebra {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.field == other.0.field && self.0.graph == other.0.graph)
    }
}

impl Eq for Algebra {}

pub(crate) type Terms = BTreeMap<Monomial, Scalar>;

impl Algebra {
    pub fn new(graph: Graph, field: Field) -> Self {
        let special = SpecialEdges::of(&graph);
        Algebra(Arc::new(Inner {
            graph,
            field,
            special,
        }))
    }

    pub fn rational(graph: Graph) -> Self {
        Algebra::new(graph, Field::Rational)
    }

    pub fn graph(&self) -> &Graph {
        &self.0.graph
    }

    pub fn field(&self) -> Field {
        self.0.field
    }

    pub fn special_edges(&self) -> &SpecialEdges {
        &self.0.special
    }

    pub fn zero(&self) -> Element {
        Element::from_normal(self.clone(), Terms::new())
    }

    /// `Σ_v v`, the identity of `L_K(E)` for a finite graph.
    pub fn one(&self) -> Element {
        self.normal_form(
            self.graph()
                .vertices()
                .map(|v| (Monomial::vertex(v), self.field().one())),
        )
    }

    pub fn scalar(&self, k: Scalar) -> Element {
        self.one().scale(&k)
    }

    pub fn vertex(&self, v: VertexId) -> Element {
        self.monomial(Monomial::vertex(v))
    }

    pub fn edge(&self, e: EdgeId) -> Element {
        self.monomial(Monomial::edge(self.graph(), e))
    }

    pub fn ghost(&self, e: EdgeId) -> Element {
        self.monomial(Monomial::ghost_edge(self.graph(), e))
    }

    pub fn generator(&self, gen: Generator) -> Element {
        self.monomial(Monomial::generator(self.graph(), gen))
    }

    /// Product of a generator sequence; the empty product is `1`.
    pub fn product_of(&self, gens: &[Generator]) -> Element {
        gens.iter().fold(self.one(), |acc, &gen| {
            acc.mul_unchecked(&self.generator(gen))
        })
    }

    pub fn monomial(&self, m: Monomial) -> Element {
        self.normal_form([(m, self.field().one())])
    }

    pub fn path(&self, p: Path) -> Element {
        self.monomial(Monomial::path(p))
    }

    /// Looks up a vertex by name.
    pub fn vertex_named(&self, name: &str) -> Result<Element, AlgebraError> {
        Ok(self.vertex(self.graph().vertex_id(name)?))
    }

    /// The special edge both parts end in, if the monomial is reducible.
    pub fn redex(&self, m: &Monomial) -> Option<EdgeId> {
        let e = m.real.last_edge()?;
        (m.ghost.last_edge() == Some(e) && self.special_edges().is_special(self.graph(), e))
            .then_some(e)
    }

    pub fn is_normal(&self, m: &Monomial) -> bool {
        self.redex(m).is_none()
    }

    /// Normal form of a formal combination of monomials.
    pub fn normal_form<I>(&self, raw: I) -> Element
    where
        I: IntoIterator<Item = (Monomial, Scalar)>,
    {
        self.normal_form_counted(raw).0
    }

    /// Like [`Algebra::normal_form`], also returning the number of rewrite steps.
    pub fn normal_form_counted<I>(&self, raw: I) -> (Element, usize)
    where
        I: IntoIterator<Item = (Monomial, Scalar)>,
    {
        let mut acc = Terms::new();
        let mut steps = 0;
        for (m, c) in raw {
            steps += self.reduce_into(&mut acc, m, c);
        }
        (Element::from_normal(self.clone(), acc), steps)
    }

    pub(crate) fn reduce_into(&self, acc: &mut Terms, m: Monomial, c: Scalar) -> usize {
        let g = self.graph();
        let mut steps = 0;
        let mut stack = vec![(m, c)];
        while let Some((m, c)) = stack.pop() {
            if c.is_zero() {
                continue;
            }
            let Some(gamma) = self.redex(&m) else {
                add_term(acc, m, c);
                continue;
            };
            steps += 1;
            let v = g.source(gamma);
            let real = m.real.pop_edge(v);
            let ghost = m.ghost.pop_edge(v);
            for &e in g.out_edges(v).iter().filter(|&&e| e != gamma) {
                let r = g.range(e);
                let side = Monomial {
                    real: real.push_edge(e, r),
                    ghost: ghost.push_edge(e, r),
                };
                add_term(acc, side, -&c);
            }
            stack.push((Monomial { real, ghost }, c));
        }
        steps
    }

    /// `m1 · m2` in normal form.
    pub fn mono_mul(&self, m1: &Monomial, m2: &Monomial) -> Element {
        match m1.raw_product(m2) {
            Some(m) => self.monomial(m),
            None => self.zero(),
        }
    }

    /// Every normal monomial with `l(p) + l(q) ≤ max_len`, sorted.
    pub fn normal_monomials(&self, max_len: usize) -> Vec<Monomial> {
        let all: Vec<VertexId> = self.graph().vertices().collect();
        corner::monomials(self, &all, &all, max_len)
    }

    /// The full normal basis when the graph is acyclic, `None` otherwise.
    pub fn finite_basis(&self) -> Option<Vec<Monomial>> {
        if !crate::graph::is_acyclic(self.graph()) {
            return None;
        }
        Some(self.normal_monomials(2 * self.graph().vertex_count()))
    }

    pub fn parse_element(&self, text: &str) -> Result<Element, AlgebraError> {
        expr::parse(self, text)
    }
}

fn add_term(acc: &mut Terms, m: Monomial, c: Scalar) {
    use std::collections::btree_map::Entry;
    match acc.entry(m) {
        Entry::Vacant(slot) => {
            if !c.is_zero() {
                slot.insert(c);
            }
        }
        Entry::Occupied(mut slot) => {
            let sum = slot.get() + &c;
            if sum.is_zero() {
                slot.remove();
            } else {
                slot.insert(sum);
            }
        }
    }
}

/// `special_edges` for a bare graph.
pub fn special_edges(g: &Graph) -> SpecialEdges {
    SpecialEdges::of(g)
}

pub use corner::{corner_basis, corner_is_trivial};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn alg(g: Graph) -> Algebra {
        Algebra::rational(g)
    }

    #[test]
    fn special_edge_examples() {
        let w = fixtures::w();
        let s = special_edges(&w);
        let names: Vec<_> = s
            .iter()
            .map(|(v, e)| (w.vertex_name(v), w.edge_name(e)))
            .collect();
        assert_eq!(names, [("z", "e")]);

        let l3 = fixtures::l3();
        let names: Vec<_> = special_edges(&l3)
            .iter()
            .map(|(v, e)| (l3.vertex_name(v).to_string(), l3.edge_name(e).to_string()))
            .collect();
        assert_eq!(
            names,
            [
                ("v1".to_string(), "a".to_string()),
                ("v2".into(), "b".into())
            ]
        );

        let r2 = fixtures::r2();
        let s = special_edges(&r2);
        assert_eq!(r2.edge_name(s.get(VertexId(0)).unwrap()), "g");
    }

    #[test]
    fn mono_mul_examples() {
        let a = alg(fixtures::w());
        let g = a.graph();
        let e = g.edge_id("e").unwrap();
        let f = g.edge_id("f").unwrap();
        let v = g.vertex_id("v").unwrap();
        let e_star = Monomial::ghost_edge(g, e);
        assert_eq!(a.mono_mul(&e_star, &Monomial::edge(g, e)), a.vertex(v));
        assert!(a.mono_mul(&e_star, &Monomial::edge(g, f)).is_zero());
        assert!(a
            .mono_mul(&Monomial::vertex(v), &Monomial::edge(g, e))
            .is_zero());
    }

    #[test]
    fn normal_form_examples() {
        let a = alg(fixtures::w());
        let g = a.graph();
        let e = g.edge_id("e").unwrap();
        let f = g.edge_id("f").unwrap();
        let z = a.vertex(g.vertex_id("z").unwrap());
        let ee = &a.edge(e) * &a.ghost(e);
        let ff = &a.edge(f) * &a.ghost(f);
        assert_eq!(ee, &z - &ff);
        assert_eq!(ee.to_string(), "1*z - 1*f f^*");
        assert_eq!(ff.len(), 1);
        assert_eq!(ff.to_string(), "1*f f^*");
        assert_eq!(&ee + &ff, z);

        let l = alg(fixtures::l3());
        let ab = l.graph().path_by_names(&["a", "b"]).unwrap();
        let m = Monomial::new(ab.clone(), ab).unwrap();
        let (nf, steps) = l.normal_form_counted([(m, Field::Rational.one())]);
        assert_eq!(nf, l.vertex_named("v1").unwrap());
        assert_eq!(steps, 2);
    }

    #[test]
    fn rose_relation_four() {
        let a = alg(fixtures::r2());
        let g = a.graph();
        let (ge, he) = (g.edge_id("g").unwrap(), g.edge_id("h").unwrap());
        let v = a.vertex(VertexId(0));
        assert_eq!(&a.ghost(ge) * &a.edge(ge), v);
        assert!((&a.ghost(ge) * &a.edge(he)).is_zero());
        let sum = &(&a.edge(ge) * &a.ghost(ge)) + &(&a.edge(he) * &a.ghost(he));
        assert_eq!(sum, v);
    }

    #[test]
    fn monomial_requires_common_range() {
        let g = fixtures::w();
        let e = g.path_by_names(&["e"]).unwrap();
        let f = g.path_by_names(&["f"]).unwrap();
        assert!(Monomial::new(e, f).is_none());
    }

    #[test]
    fn generator_names_round_trip() {
        let g = fixtures::w();
        for gen in [
            Generator::Vertex(VertexId(1)),
            Generator::Edge(EdgeId(0)),
            Generator::Ghost(EdgeId(1)),
        ] {
            assert_eq!(Generator::parse(&g, &gen.name(&g)).unwrap(), gen);
        }
        assert!(Generator::parse(&g, "z^*").is_err());
        assert!(Generator::parse(&g, "nope").is_err());
    }

    #[test]
    fn line_graph_basis_has_n_squared_elements() {
        for n in 1..=5 {
            let a = alg(fixtures::line(n));
            assert_eq!(a.finite_basis().unwrap().len(), n * n);
        }
        assert!(alg(fixtures::t()).finite_basis().is_none());
    }
}
