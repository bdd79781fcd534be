//! The defining relations as a rewriting system on words in the generators.
//!
//! Each rule rewrites an adjacent pair of generators. Every reduction
//! sequence ends in words of the form `v` or `e₁…eₙ f_m*…f₁*`, i.e. normal
//! monomials, and the final combination does not depend on the order in which
//! redexes are contracted. [`rewrite`] exposes two orders so that this can be
//! checked against the monomial arithmetic in [`Element`].

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{add_term, Algebra, Element, Generator, Monomial};
use crate::scalar::Scalar;

pub type Word = Vec<Generator>;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    /// Always contract the leftmost redex of the first reducible word.
    LeftmostInnermost,
    /// Contract a uniformly chosen redex of a uniformly chosen reducible word.
    Random { seed: u64 },
}

#[derive(Debug, Clone)]
pub struct Rewritten {
    pub element: Element,
    pub steps: usize,
}

/// Replacement for a redex: signed words, empty meaning zero.
type Replacement = Vec<(bool, Word)>;

fn pair_rule(alg: &Algebra, x: Generator, y: Generator) -> Option<Replacement> {
    use Generator::*;
    let g = alg.graph();
    let keep = |w: Word, ok: bool| Some(if ok { vec![(false, w)] } else { vec![] });
    match (x, y) {
        (Vertex(a), Vertex(b)) => keep(vec![Vertex(a)], a == b),
        (Vertex(a), Edge(e)) => keep(vec![Edge(e)], a == g.source(e)),
        (Edge(e), Vertex(a)) => keep(vec![Edge(e)], a == g.range(e)),
        (Vertex(a), Ghost(e)) => keep(vec![Ghost(e)], a == g.range(e)),
        (Ghost(e), Vertex(a)) => keep(vec![Ghost(e)], a == g.source(e)),
        (Ghost(e), Edge(f)) => keep(vec![Vertex(g.range(e))], e == f),
        (Edge(e), Edge(f)) => (g.range(e) != g.source(f)).then(Vec::new),
        (Ghost(e), Ghost(f)) => (g.source(e) != g.range(f)).then(Vec::new),
        (Edge(e), Ghost(f)) => {
            if g.range(e) != g.range(f) {
                return Some(vec![]);
            }
            if e != f || !alg.special_edges().is_special(g, e) {
                return None;
            }
            let v = g.source(e);
            let mut out = vec![(false, vec![Vertex(v)])];
            for &h in g.out_edges(v).iter().filter(|&&h| h != e) {
                out.push((true, vec![Edge(h), Ghost(h)]));
            }
            Some(out)
        }
    }
}

fn redexes(alg: &Algebra, w: &Word) -> Vec<usize> {
    (0..w.len().saturating_sub(1))
        .filter(|&i| pair_rule(alg, w[i], w[i + 1]).is_some())
        .collect()
}

fn word_to_monomial(alg: &Algebra, w: &Word) -> Monomial {
    let g = alg.graph();
    if let [Generator::Vertex(v)] = w.as_slice() {
        return Monomial::vertex(*v);
    }
    let split = w
        .iter()
        .position(|x| !matches!(x, Generator::Edge(_)))
        .unwrap_or(w.len());
    let real: Vec<_> = w[..split]
        .iter()
        .map(|x| match x {
            Generator::Edge(e) => *e,
            _ => unreachable!(),
        })
        .collect();
    let ghost: Vec<_> = w[split..]
        .iter()
        .rev()
        .map(|x| match x {
            Generator::Ghost(e) => *e,
            other => panic!("irreducible word contains {other:?} after an edge"),
        })
        .collect();
    let p = g.path_of_edges(&real).ok();
    let q = g.path_of_edges(&ghost).ok();
    let m = match (p, q) {
        (Some(p), Some(q)) => Monomial::new(p, q),
        (Some(p), None) => Some(Monomial::path(p)),
        (None, Some(q)) => Some(Monomial::ghost_path(q)),
        (None, None) => None,
    };
    m.expect("irreducible words are monomials")
}

const STEP_GUARD: usize = 10_000_000;

/// Rewrites `Σ k_i w_i` to a combination of irreducible words.
///
/// Panics if an irreducible word is not a normal monomial, which would mean
/// the rule set is inconsistent with the normal form.
pub fn rewrite(alg: &Algebra, input: &[(Scalar, Word)], strategy: Strategy) -> Rewritten {
    let mut rng = match strategy {
        Strategy::Random { seed } => Some(ChaCha8Rng::seed_from_u64(seed)),
        Strategy::LeftmostInnermost => None,
    };
    let mut pending: Vec<(Scalar, Word)> = input
        .iter()
        .filter(|(k, w)| !k.is_zero() && !w.is_empty())
        .cloned()
        .collect();
    let mut done = BTreeMap::new();
    let mut steps = 0;
    while !pending.is_empty() {
        let idx = match rng.as_mut() {
            Some(r) => r.random_range(0..pending.len()),
            None => 0,
        };
        let reds = redexes(alg, &pending[idx].1);
        if reds.is_empty() {
            let (k, w) = pending.swap_remove(idx);
            let m = word_to_monomial(alg, &w);
            assert!(alg.is_normal(&m), "irreducible word {w:?} is not normal");
            add_term(&mut done, m, k);
            continue;
        }
        let at = match rng.as_mut() {
            Some(r) => reds[r.random_range(0..reds.len())],
            None => reds[0],
        };
        steps += 1;
        assert!(steps < STEP_GUARD, "rewriting did not terminate");
        let (k, w) = pending.swap_remove(idx);
        let rule = pair_rule(alg, w[at], w[at + 1]).expect("position is a redex");
        for (negate, mid) in rule {
            let mut nw = Vec::with_capacity(w.len() + 1);
            nw.extend_from_slice(&w[..at]);
            nw.extend(mid);
            nw.extend_from_slice(&w[at + 2..]);
            let c = if negate { -&k } else { k.clone() };
            pending.push((c, nw));
        }
    }
    Rewritten {
        element: Element::from_normal(alg.clone(), done),
        steps,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::graph::EdgeId;

    fn word(alg: &Algebra, text: &str) -> Word {
        text.split_whitespace()
            .map(|t| Generator::parse(alg.graph(), t).unwrap())
            .collect()
    }

    #[test]
    fn strategies_agree_with_multiplication() {
        let a = Algebra::rational(fixtures::w());
        let one = a.field().one();
        for text in [
            "e e^*",
            "z e e^* z",
            "f^* e",
            "e^* e e^* f f^* e",
            "z f f^* e e^*",
        ] {
            let w = word(&a, text);
            let expected = a.product_of(&w);
            let lm = rewrite(&a, &[(one.clone(), w.clone())], Strategy::LeftmostInnermost);
            assert_eq!(lm.element, expected, "{text}");
            for seed in 0..5 {
                let r = rewrite(&a, &[(one.clone(), w.clone())], Strategy::Random { seed });
                assert_eq!(r.element, expected, "{text} seed {seed}");
            }
        }
    }

    #[test]
    fn special_pair_expands() {
        let a = Algebra::rational(fixtures::r2());
        let r = rewrite(
            &a,
            &[(
                a.field().one(),
                vec![Generator::Edge(EdgeId(0)), Generator::Ghost(EdgeId(0))],
            )],
            Strategy::LeftmostInnermost,
        );
        assert_eq!(r.steps, 1);
        assert_eq!(r.element.to_string(), "1*v - 1*h h^*");
    }
}
