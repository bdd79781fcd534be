//! Seeded generators for property tests and benchmarks.

use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::rewrite::Word;
use crate::algebra::{Algebra, Element, Generator, Monomial};
use crate::graph::{Graph, Path};
use crate::scalar::{Field, Scalar};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A graph with `1..=max_vertices` vertices `v0, v1, ...` and
/// `0..=max_edges` edges `e0, e1, ...` between uniformly chosen endpoints.
/// Loops and parallel edges are allowed.
pub fn random_graph<R: Rng>(rng: &mut R, max_vertices: usize, max_edges: usize) -> Graph {
    let n = rng.random_range(1..=max_vertices.max(1));
    let m = rng.random_range(0..=max_edges);
    let vertices: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
    let edges: Vec<(String, String, String)> = (0..m)
        .map(|i| {
            let s = rng.random_range(0..n);
            let r = rng.random_range(0..n);
            (format!("e{i}"), format!("v{s}"), format!("v{r}"))
        })
        .collect();
    Graph::new(vertices, edges).expect("generated names are unique")
}

/// A small nonzero coefficient; over `Q` sometimes a proper fraction.
pub fn random_scalar<R: Rng>(rng: &mut R, field: Field) -> Scalar {
    loop {
        let n: i64 = rng.random_range(-4..=4);
        if n == 0 {
            continue;
        }
        let k = field.from_i64(n);
        if k.is_zero() {
            continue;
        }
        if field == Field::Rational && rng.random_bool(0.2) {
            let d = field.from_i64(rng.random_range(2..=5));
            return &k * &d.inverse().expect("nonzero");
        }
        return k;
    }
}

fn forward_walk<R: Rng>(rng: &mut R, g: &Graph, mut p: Path, len: usize) -> Path {
    for _ in 0..len {
        let Some(&e) = g.out_edges(p.range()).choose(rng) else {
            break;
        };
        p = p.push_edge(e, g.range(e));
    }
    p
}

/// A path ending at `w`, built backwards along incoming edges.
fn backward_walk<R: Rng>(rng: &mut R, g: &Graph, w: crate::graph::VertexId, len: usize) -> Path {
    let mut edges = Vec::new();
    let mut at = w;
    for _ in 0..len {
        let Some(&e) = g.in_edges(at).choose(rng) else {
            break;
        };
        edges.push(e);
        at = g.source(e);
    }
    edges.reverse();
    g.path(at, &edges).expect("backward walk is a path")
}

/// A monomial `pq*` with `l(p), l(q) ≤ max_len`, not necessarily normal.
pub fn random_monomial<R: Rng>(rng: &mut R, g: &Graph, max_len: usize) -> Monomial {
    let v = crate::graph::VertexId(rng.random_range(0..g.vertex_count()));
    let lp = rng.random_range(0..=max_len);
    let p = forward_walk(rng, g, Path::trivial(v), lp);
    let lq = rng.random_range(0..=max_len);
    let q = backward_walk(rng, g, p.range(), lq);
    Monomial::new(p, q).expect("both paths end at the same vertex")
}

/// `Σ k_i m_i` over up to `max_terms` random monomials, normalised.
/// May be zero after cancellation.
pub fn random_element<R: Rng>(
    rng: &mut R,
    alg: &Algebra,
    max_terms: usize,
    max_len: usize,
) -> Element {
    let terms = rng.random_range(1..=max_terms.max(1));
    let raw: Vec<_> = (0..terms)
        .map(|_| {
            (
                random_monomial(rng, alg.graph(), max_len),
                random_scalar(rng, alg.field()),
            )
        })
        .collect();
    alg.normal_form(raw)
}

pub fn random_nonzero_element<R: Rng>(
    rng: &mut R,
    alg: &Algebra,
    max_terms: usize,
    max_len: usize,
) -> Element {
    loop {
        let x = random_element(rng, alg, max_terms, max_len);
        if !x.is_zero() {
            return x;
        }
    }
}

/// A word of `1..=max_len` generators chosen uniformly, so usually a
/// product that collapses to zero or needs many rewrites.
pub fn random_word<R: Rng>(rng: &mut R, g: &Graph, max_len: usize) -> Word {
    let len = rng.random_range(1..=max_len.max(1));
    let gens: Vec<Generator> = g
        .vertices()
        .map(Generator::Vertex)
        .chain(g.edges().map(Generator::Edge))
        .chain(g.edges().map(Generator::Ghost))
        .collect();
    (0..len)
        .map(|_| *gens.choose(rng).expect("graph has a vertex"))
        .collect()
}

/// A word tracing a monomial, then a random neighbouring monomial's word:
/// products of this shape exercise the special-edge rule far more often
/// than uniform words.
pub fn random_composable_word<R: Rng>(rng: &mut R, g: &Graph, max_len: usize) -> Word {
    let mut w = random_monomial(rng, g, max_len).generators();
    w.extend(random_monomial(rng, g, max_len).generators());
    w
}

/// A formal combination of words, half uniform and half composable.
pub fn random_raw_combination<R: Rng>(
    rng: &mut R,
    alg: &Algebra,
    max_terms: usize,
    max_len: usize,
) -> Vec<(Scalar, Word)> {
    let terms = rng.random_range(1..=max_terms.max(1));
    (0..terms)
        .map(|_| {
            let w = if rng.random_bool(0.5) {
                random_word(rng, alg.graph(), 2 * max_len)
            } else {
                random_composable_word(rng, alg.graph(), max_len)
            };
            (random_scalar(rng, alg.field()), w)
        })
        .collect()
}
