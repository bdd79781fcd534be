//! Reducing a nonzero element to a scalar multiple of a vertex, or to a
//! Laurent polynomial in a cycle without exits, by multiplying with
//! generators on both sides.
//!
//! [`reduce`] returns a [`ReductionWitness`]: the generator sequences used on
//! each side and the claimed outcome. [`verify_witness`] rechecks a witness
//! with nothing but algebra multiplication.

use std::collections::BTreeMap;
use std::fmt::Write;

use serde::{Deserialize, Serialize};

use crate::algebra::{Algebra, AlgebraError, Element, Generator, Monomial};
use crate::graph::{
    condition_l, hereditary_saturated_closure, line_points, no_exit_cycle_through, Graph,
    GraphError, Path, VertexId, VertexSet,
};
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    /// `k·v` with `k ≠ 0`.
    ScalarVertex { scalar: Scalar, vertex: VertexId },
    /// `Σ_m k_m c^m`, where `c` is a cycle without exits read as a closed
    /// path at `vertex` and negative powers mean powers of `c*`.
    CyclePolynomial {
        vertex: VertexId,
        cycle: Path,
        coefficients: BTreeMap<i64, Scalar>,
    },
}

impl Outcome {
    /// The element the outcome denotes.
    pub fn element(&self, alg: &Algebra) -> Element {
        match self {
            Outcome::ScalarVertex { scalar, vertex } => alg.vertex(*vertex).scale(scalar),
            Outcome::CyclePolynomial {
                vertex,
                cycle,
                coefficients,
            } => {
                let terms = coefficients.iter().map(|(&m, k)| {
                    let power = cycle_power(cycle, *vertex, m.unsigned_abs() as usize);
                    let mono = if m >= 0 {
                        Monomial::path(power)
                    } else {
                        Monomial::ghost_path(power)
                    };
                    (mono, k.clone())
                });
                alg.normal_form(terms)
            }
        }
    }

    pub fn is_scalar_vertex(&self) -> bool {
        matches!(self, Outcome::ScalarVertex { .. })
    }
}

fn cycle_power(c: &Path, base: VertexId, m: usize) -> Path {
    (0..m).fold(Path::trivial(base), |acc, _| {
        acc.concat(c).expect("closed path")
    })
}

/// `left · x · right = outcome`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionWitness {
    pub left: Vec<Generator>,
    pub right: Vec<Generator>,
    pub outcome: Outcome,
}

/// Multiplies `x` on the right by a path `ν` so that the result is nonzero
/// and has no ghost edges.
///
/// `ν` starts at the first vertex `v` (declaration order) with `xv ≠ 0` and
/// then repeatedly takes the first edge `e` out of the current vertex with
/// `ye ≠ 0`; such an edge exists because `y = y·u = Σ_{s(e)=u} y e e*`.
pub fn realify(x: &Element) -> Result<(Path, Element), AlgebraError> {
    if x.is_zero() {
        return Err(AlgebraError::ZeroElement);
    }
    let alg = x.algebra();
    let g = alg.graph();
    let (v, mut y) = g
        .vertices()
        .map(|v| (v, x * &alg.vertex(v)))
        .find(|(_, y)| !y.is_zero())
        .expect("a nonzero element has a nonzero right vertex component");
    let mut nu = Path::trivial(v);
    while !y.is_ghost_free() {
        let u = nu.range();
        let (e, next) = g
            .out_edges(u)
            .iter()
            .map(|&e| (e, &y * &alg.edge(e)))
            .find(|(_, ye)| !ye.is_zero())
            .expect("y = Σ y e e* leaves a surviving edge");
        nu = nu
            .concat(&g.path_of_edges(&[e]).expect("edge"))
            .expect("composable");
        y = next;
    }
    Ok((nu, y))
}

struct Builder<'a> {
    alg: &'a Algebra,
    left: Vec<Generator>,
    right: Vec<Generator>,
    y: Element,
}

impl Builder<'_> {
    fn apply_left(&mut self, gens: Vec<Generator>) {
        self.y = &self.alg.product_of(&gens) * &self.y;
        self.left.splice(0..0, gens);
    }

    fn apply_right(&mut self, gens: Vec<Generator>) {
        self.y = &self.y * &self.alg.product_of(&gens);
        self.right.extend(gens);
    }

    /// Multiplies by a vertex only if that changes `y`.
    fn restrict_left(&mut self, v: VertexId) {
        let next = &self.alg.vertex(v) * &self.y;
        if next != self.y {
            self.y = next;
            self.left.insert(0, Generator::Vertex(v));
        }
    }

    fn restrict_right(&mut self, v: VertexId) {
        let next = &self.y * &self.alg.vertex(v);
        if next != self.y {
            self.y = next;
            self.right.push(Generator::Vertex(v));
        }
    }

    fn finish(self, outcome: Outcome) -> ReductionWitness {
        ReductionWitness {
            left: self.left,
            right: self.right,
            outcome,
        }
    }
}

fn ghosts_of(p: &Path) -> Vec<Generator> {
    p.edges()
        .iter()
        .rev()
        .map(|&e| Generator::Ghost(e))
        .collect()
}

fn real_paths(y: &Element) -> Vec<Path> {
    y.monomials().map(|m| m.real().clone()).collect()
}

/// Produces a witness that `left · x · right` is `k·v` or a nonzero Laurent
/// polynomial in a cycle without exits.
///
/// Steps, each deterministic: make `x` ghost-free with [`realify`]; while
/// the two shortest paths have equal length, multiply on the left by
/// `(μf)*` where `μf` is the shortest prefix of the first that is not a
/// prefix of the second; strip the shortest path `α` with `α*`, leaving
/// `k v + Σ k_i β_i` with `β_i` closed at `v`; if `v` lies on a cycle
/// without exits report the polynomial, otherwise conjugate by a path `τ`
/// out of `v` that is not a prefix of any `β_i^∞`, which kills every `β_i`.
pub fn reduce(x: &Element) -> Result<ReductionWitness, AlgebraError> {
    let alg = x.algebra();
    let g = alg.graph();
    let (nu, y) = realify(x)?;
    let mut b = Builder {
        alg,
        left: Vec::new(),
        right: Vec::new(),
        y: x.clone(),
    };
    b.restrict_right(nu.source());
    b.apply_right(nu.edges().iter().map(|&e| Generator::Edge(e)).collect());
    debug_assert_eq!(b.y, y);

    loop {
        let paths = real_paths(&b.y);
        let [a, c, ..] = paths.as_slice() else { break };
        if a.len() != c.len() {
            break;
        }
        if a.source() != c.source() {
            b.restrict_left(a.source());
            continue;
        }
        let j = a
            .edges()
            .iter()
            .zip(c.edges())
            .position(|(e, f)| e != f)
            .expect("distinct paths of equal length and source diverge");
        let prefix = g
            .path(a.source(), &a.edges()[..=j])
            .expect("prefix of a path");
        b.apply_left(ghosts_of(&prefix));
    }

    let (alpha, k) = {
        let (m, k) = b.y.terms().next().expect("reduction keeps y nonzero");
        (m.real().clone(), k.clone())
    };
    let v = alpha.range();
    if b.y.len() == 1 {
        b.apply_left(ghosts_of(&alpha));
        return Ok(b.finish(Outcome::ScalarVertex {
            scalar: k,
            vertex: v,
        }));
    }
    if alpha.is_trivial() {
        b.restrict_left(v);
    } else {
        b.apply_left(ghosts_of(&alpha));
    }
    b.restrict_right(v);
    if b.y.len() == 1 {
        return Ok(b.finish(Outcome::ScalarVertex {
            scalar: k,
            vertex: v,
        }));
    }

    if let Some(c) = no_exit_cycle_through(g, v) {
        let coefficients =
            b.y.terms()
                .map(|(m, k)| {
                    let len = m.real().len();
                    debug_assert_eq!(len % c.len(), 0);
                    ((len / c.len()) as i64, k.clone())
                })
                .collect();
        return Ok(b.finish(Outcome::CyclePolynomial {
            vertex: v,
            cycle: c,
            coefficients,
        }));
    }

    let tau = escape_path(g, v, &real_paths(&b.y));
    b.apply_left(ghosts_of(&tau));
    b.apply_right(tau.edges().iter().map(|&e| Generator::Edge(e)).collect());
    Ok(b.finish(Outcome::ScalarVertex {
        scalar: k,
        vertex: tau.range(),
    }))
}

/// A path `τ` from `v` with `τ* β τ = 0` for every nontrivial closed path
/// `β` at `v` in `closed`. `v` must not lie on a cycle without exits.
///
/// `τ* β τ ≠ 0` exactly when `τ` is a prefix of `β^∞`. The walk keeps the
/// set of `β` still predicting `τ` and leaves it through an unpredicted
/// edge as soon as one exists; each `β` passes a vertex of out-degree at
/// least two, so every `β` is eventually discarded.
fn escape_path(g: &Graph, v: VertexId, closed: &[Path]) -> Path {
    let betas: Vec<&[crate::graph::EdgeId]> = closed
        .iter()
        .filter(|p| !p.is_trivial())
        .map(|p| p.edges())
        .collect();
    let guard: usize = betas.iter().map(|b| b.len()).sum::<usize>() + g.vertex_count() + 1;
    let mut alive: Vec<usize> = (0..betas.len()).collect();
    let mut edges = Vec::new();
    let mut at = v;
    while !alive.is_empty() {
        assert!(edges.len() <= guard, "escape walk did not terminate");
        let pos = edges.len();
        let predicted = |e| alive.iter().any(|&i| betas[i][pos % betas[i].len()] == e);
        let out = g.out_edges(at);
        let e = out
            .iter()
            .copied()
            .find(|&e| !predicted(e))
            .unwrap_or(out[0]);
        alive.retain(|&i| betas[i][pos % betas[i].len()] == e);
        edges.push(e);
        at = g.range(e);
    }
    g.path(v, &edges).expect("walk follows edges")
}

/// Rechecks `left · x · right = outcome` and the outcome's side conditions.
pub fn verify_witness(x: &Element, w: &ReductionWitness) -> bool {
    let alg = x.algebra();
    let g = alg.graph();
    let known = |gen: &Generator| match *gen {
        Generator::Vertex(v) => g.contains_vertex(v),
        Generator::Edge(e) | Generator::Ghost(e) => g.contains_edge(e),
    };
    if !w.left.iter().chain(&w.right).all(known) {
        return false;
    }
    let side_conditions = match &w.outcome {
        Outcome::ScalarVertex { scalar, vertex } => {
            !scalar.is_zero() && g.contains_vertex(*vertex) && scalar.field() == alg.field()
        }
        Outcome::CyclePolynomial {
            vertex,
            cycle,
            coefficients,
        } => {
            g.contains_vertex(*vertex)
                && no_exit_cycle_through(g, *vertex).as_ref() == Some(cycle)
                && coefficients.values().any(|k| !k.is_zero())
                && coefficients.values().all(|k| k.field() == alg.field())
        }
    };
    if !side_conditions {
        return false;
    }
    let product = &(&alg.product_of(&w.left) * x) * &alg.product_of(&w.right);
    product == w.outcome.element(alg)
}

/// An element `a` with `x a x ≠ 0`.
///
/// With `μ`, `ν` the products of the left and right multipliers of
/// [`reduce`], `a = ν μ` works because `(μ x ν)²` is nonzero: `K v` is a
/// field and the corner at a cycle without exits is a Laurent polynomial
/// ring, a domain. An empty product is taken to be the local unit of `x`.
pub fn nondegeneracy_witness(x: &Element) -> Result<Element, AlgebraError> {
    let w = reduce(x)?;
    let alg = x.algebra();
    let side = |gens: &[Generator]| {
        if gens.is_empty() {
            x.local_unit()
        } else {
            alg.product_of(gens)
        }
    };
    Ok(&side(&w.right) * &side(&w.left))
}

/// Whether `L_K(E)` is simple: Condition (L) holds and the only hereditary
/// saturated sets are `∅` and `E⁰`, i.e. every single vertex generates all
/// of `E⁰`.
pub fn is_simple(g: &Graph) -> bool {
    let all = g.all_vertices();
    condition_l(g)
        && g.vertices().all(|v| {
            let single: VertexSet = [v].into_iter().collect();
            hereditary_saturated_closure(g, &single).expect("vertex of g") == all
        })
}

/// Whether the left ideal `L(E)u` is minimal, i.e. `u` is a line point.
pub fn vertex_ideal_minimal(g: &Graph, u: VertexId) -> Result<bool, GraphError> {
    g.check_vertex(u)?;
    Ok(line_points(g).contains(u))
}

/// Name-based form of a witness, for JSON and text output.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessRepr {
    pub left: Vec<String>,
    pub right: Vec<String>,
    pub outcome: OutcomeRepr,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum OutcomeRepr {
    ScalarVertex {
        scalar: String,
        vertex: String,
    },
    CyclePolynomial {
        vertex: String,
        cycle: Vec<String>,
        /// `(power, coefficient)` pairs, powers increasing.
        coefficients: Vec<(i64, String)>,
    },
}

impl ReductionWitness {
    pub fn to_repr(&self, g: &Graph) -> WitnessRepr {
        let names = |gens: &[Generator]| gens.iter().map(|x| x.name(g)).collect();
        let outcome = match &self.outcome {
            Outcome::ScalarVertex { scalar, vertex } => OutcomeRepr::ScalarVertex {
                scalar: scalar.to_string(),
                vertex: g.vertex_name(*vertex).to_string(),
            },
            Outcome::CyclePolynomial {
                vertex,
                cycle,
                coefficients,
            } => OutcomeRepr::CyclePolynomial {
                vertex: g.vertex_name(*vertex).to_string(),
                cycle: cycle
                    .edges()
                    .iter()
                    .map(|&e| g.edge_name(e).to_string())
                    .collect(),
                coefficients: coefficients
                    .iter()
                    .map(|(&m, k)| (m, k.to_string()))
                    .collect(),
            },
        };
        WitnessRepr {
            left: names(&self.left),
            right: names(&self.right),
            outcome,
        }
    }

    pub fn from_repr(alg: &Algebra, repr: &WitnessRepr) -> Result<Self, AlgebraError> {
        let g = alg.graph();
        let gens = |names: &[String]| {
            names
                .iter()
                .map(|n| Generator::parse(g, n))
                .collect::<Result<Vec<_>, _>>()
        };
        let scalar = |text: &str| alg.field().parse_scalar(text).map_err(AlgebraError::from);
        let outcome = match &repr.outcome {
            OutcomeRepr::ScalarVertex { scalar: k, vertex } => Outcome::ScalarVertex {
                scalar: scalar(k)?,
                vertex: g.vertex_id(vertex)?,
            },
            OutcomeRepr::CyclePolynomial {
                vertex,
                cycle,
                coefficients,
            } => {
                let v = g.vertex_id(vertex)?;
                let names: Vec<&str> = cycle.iter().map(String::as_str).collect();
                let cycle = g.path_by_names(&names)?;
                if cycle.source() != v || cycle.range() != v {
                    return Err(AlgebraError::MalformedWitness(
                        "cycle is not closed at its vertex".into(),
                    ));
                }
                let coefficients = coefficients
                    .iter()
                    .map(|(m, k)| Ok((*m, scalar(k)?)))
                    .collect::<Result<_, AlgebraError>>()?;
                Outcome::CyclePolynomial {
                    vertex: v,
                    cycle,
                    coefficients,
                }
            }
        };
        Ok(ReductionWitness {
            left: gens(&repr.left)?,
            right: gens(&repr.right)?,
            outcome,
        })
    }

    /// Three-line text form:
    ///
    /// ```text
    /// left: e^*
    /// right: f
    /// outcome: scalar_vertex 1 v
    /// ```
    ///
    /// A polynomial outcome reads `cycle_polynomial v f | 0:1 1:-2`.
    pub fn to_text(&self, g: &Graph) -> String {
        let repr = self.to_repr(g);
        let mut out = String::new();
        let line = |label: &str, items: &[String]| {
            if items.is_empty() {
                format!("{label}:\n")
            } else {
                format!("{label}: {}\n", items.join(" "))
            }
        };
        out.push_str(&line("left", &repr.left));
        out.push_str(&line("right", &repr.right));
        match &repr.outcome {
            OutcomeRepr::ScalarVertex { scalar, vertex } => {
                writeln!(out, "outcome: scalar_vertex {scalar} {vertex}").unwrap();
            }
            OutcomeRepr::CyclePolynomial {
                vertex,
                cycle,
                coefficients,
            } => {
                let coeffs: Vec<String> = coefficients
                    .iter()
                    .map(|(m, k)| format!("{m}:{k}"))
                    .collect();
                writeln!(
                    out,
                    "outcome: cycle_polynomial {vertex} {} | {}",
                    cycle.join(" "),
                    coeffs.join(" ")
                )
                .unwrap();
            }
        }
        out
    }

    pub fn parse_text(alg: &Algebra, text: &str) -> Result<Self, AlgebraError> {
        let bad = |msg: &str| AlgebraError::MalformedWitness(msg.to_string());
        let mut fields: BTreeMap<&str, Vec<String>> = BTreeMap::new();
        for line in text.lines().filter(|l| !l.trim().is_empty()) {
            let (label, rest) = line
                .split_once(':')
                .ok_or_else(|| bad("expected `label: ...`"))?;
            let label = label.trim();
            if !matches!(label, "left" | "right" | "outcome") {
                return Err(bad(&format!("unknown field `{label}`")));
            }
            let words = rest.split_whitespace().map(str::to_string).collect();
            if fields.insert(label, words).is_some() {
                return Err(bad(&format!("repeated field `{label}`")));
            }
        }
        let mut take = |label| {
            fields
                .remove(label)
                .ok_or_else(|| bad(&format!("missing `{label}`")))
        };
        let left = take("left")?;
        let right = take("right")?;
        let outcome = take("outcome")?;
        let outcome = match outcome.first().map(String::as_str) {
            Some("scalar_vertex") => match &outcome[1..] {
                [k, v] => OutcomeRepr::ScalarVertex {
                    scalar: k.clone(),
                    vertex: v.clone(),
                },
                _ => return Err(bad("expected `scalar_vertex SCALAR VERTEX`")),
            },
            Some("cycle_polynomial") => {
                let bar = outcome
                    .iter()
                    .position(|w| w == "|")
                    .ok_or_else(|| bad("expected `|` before coefficients"))?;
                let vertex = outcome
                    .get(1)
                    .filter(|_| bar > 1)
                    .ok_or_else(|| bad("missing vertex"))?;
                let mut coefficients = BTreeMap::new();
                for item in &outcome[bar + 1..] {
                    let (m, k) = item
                        .split_once(':')
                        .ok_or_else(|| bad("expected `EXP:SCALAR`"))?;
                    let m: i64 = m.parse().map_err(|_| bad("bad exponent"))?;
                    coefficients.insert(m, k.to_string());
                }
                OutcomeRepr::CyclePolynomial {
                    vertex: vertex.clone(),
                    cycle: outcome[2..bar].to_vec(),
                    coefficients: coefficients.into_iter().collect(),
                }
            }
            _ => return Err(bad("unknown outcome")),
        };
        let repr = WitnessRepr {
            left,
            right,
            outcome,
        };
        Self::from_repr(alg, &repr)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::scalar::Field;

    fn parse(g: Graph, text: &str) -> Element {
        Algebra::rational(g).parse_element(text).unwrap()
    }

    fn names(g: &Graph, gens: &[Generator]) -> Vec<String> {
        gens.iter().map(|x| x.name(g)).collect()
    }

    #[test]
    fn realify_examples() {
        let x = parse(fixtures::w(), "e^*");
        let (nu, y) = realify(&x).unwrap();
        let g = x.algebra().graph();
        assert_eq!(g.path_name(&nu), "e");
        assert_eq!(y.to_string(), "1*v");

        let x = parse(fixtures::w(), "z");
        let (nu, y) = realify(&x).unwrap();
        assert!(nu.is_trivial());
        assert_eq!(y, x);

        let x = parse(fixtures::t(), "f^* + v");
        let (nu, y) = realify(&x).unwrap();
        assert_eq!(x.algebra().graph().path_name(&nu), "f");
        assert!(y.is_ghost_free() && !y.is_zero());
        assert_eq!(y, &x * &x.algebra().path(nu));

        assert_eq!(
            realify(&x.algebra().zero()).unwrap_err(),
            AlgebraError::ZeroElement
        );
    }

    #[test]
    fn vertex_reduces_to_itself() {
        let x = parse(fixtures::l3(), "v1");
        let w = reduce(&x).unwrap();
        assert!(w.left.is_empty() && w.right.is_empty());
        assert_eq!(
            w.outcome,
            Outcome::ScalarVertex {
                scalar: Field::Rational.one(),
                vertex: VertexId(0)
            }
        );
        assert!(verify_witness(&x, &w));
    }

    #[test]
    fn loop_with_vertex_is_a_polynomial() {
        let x = parse(fixtures::t(), "f + v");
        let w = reduce(&x).unwrap();
        let g = x.algebra().graph();
        assert!(w.left.is_empty() && w.right.is_empty());
        let Outcome::CyclePolynomial {
            vertex,
            cycle,
            coefficients,
        } = &w.outcome
        else {
            panic!("expected a polynomial, got {:?}", w.outcome);
        };
        assert_eq!(g.vertex_name(*vertex), "v");
        assert_eq!(g.path_name(cycle), "f");
        let one = Field::Rational.one();
        assert_eq!(coefficients, &BTreeMap::from([(0, one.clone()), (1, one)]));
        assert!(verify_witness(&x, &w));
    }

    #[test]
    fn rose_escapes_through_the_other_petal() {
        let x = parse(fixtures::r2(), "g + v");
        let w = reduce(&x).unwrap();
        let g = x.algebra().graph();
        assert!(w.outcome.is_scalar_vertex());
        assert_eq!(names(g, &w.left), ["h^*"]);
        assert_eq!(names(g, &w.right), ["h"]);
        assert!(verify_witness(&x, &w));
    }

    #[test]
    fn equal_length_paths_are_split() {
        let x = parse(fixtures::w(), "e + 2 f");
        let w = reduce(&x).unwrap();
        assert!(verify_witness(&x, &w));
        let g = x.algebra().graph();
        assert_eq!(names(g, &w.left), ["e^*"]);
        assert_eq!(w.outcome.element(x.algebra()).to_string(), "1*v");
    }

    #[test]
    fn tampered_witnesses_fail() {
        let x = parse(fixtures::r2(), "g + v");
        let mut w = reduce(&x).unwrap();
        assert!(!verify_witness(&parse(fixtures::r2(), "h + v"), &w));
        if let Outcome::ScalarVertex { scalar, .. } = &mut w.outcome {
            *scalar = Field::Rational.from_i64(2);
        }
        assert!(!verify_witness(&x, &w));
    }

    #[test]
    fn nondegeneracy_examples() {
        let x = parse(fixtures::w(), "e");
        let a = nondegeneracy_witness(&x).unwrap();
        assert_eq!(a.to_string(), "1*e^*");
        let x = parse(fixtures::w(), "z");
        assert_eq!(nondegeneracy_witness(&x).unwrap(), x);
        let x = parse(fixtures::t(), "f + v");
        let a = nondegeneracy_witness(&x).unwrap();
        assert!(!(&(&x * &a) * &x).is_zero());
    }

    #[test]
    fn simplicity() {
        assert!(is_simple(&fixtures::r2()));
        assert!(!is_simple(&fixtures::w()));
        assert!(!is_simple(&fixtures::t()));
        assert!(is_simple(&fixtures::line(1)));
        assert!(!is_simple(&fixtures::ls()));
    }

    #[test]
    fn minimal_vertex_ideals() {
        let w = fixtures::w();
        assert!(vertex_ideal_minimal(&w, w.vertex_id("v").unwrap()).unwrap());
        assert!(!vertex_ideal_minimal(&w, w.vertex_id("z").unwrap()).unwrap());
        let t = fixtures::t();
        assert!(!vertex_ideal_minimal(&t, t.vertex_id("u").unwrap()).unwrap());
        assert!(vertex_ideal_minimal(&fixtures::l3(), VertexId(0)).unwrap());
        assert!(vertex_ideal_minimal(&t, VertexId(5)).is_err());
    }

    #[test]
    fn witness_text_round_trip() {
        for (g, text) in [
            (fixtures::t(), "f + v"),
            (fixtures::r2(), "g h^* - 1/2 v"),
            (fixtures::ls(), "c^* + e"),
        ] {
            let x = parse(g, text);
            let alg = x.algebra();
            let w = reduce(&x).unwrap();
            let back = ReductionWitness::parse_text(alg, &w.to_text(alg.graph())).unwrap();
            assert_eq!(back, w, "{text}");
            assert_eq!(
                ReductionWitness::from_repr(alg, &w.to_repr(alg.graph())).unwrap(),
                w
            );
        }
        let alg = Algebra::rational(fixtures::w());
        assert!(ReductionWitness::parse_text(&alg, "left:\nright:\noutcome: nonsense").is_err());
        assert!(ReductionWitness::parse_text(&alg, "left:\noutcome: scalar_vertex 1 v").is_err());
    }
}
