//! Shared inputs for the benchmarks.

use leavitt::random::{random_nonzero_element, rng};
use leavitt::{fixtures, Algebra, Element, Graph};

/// Seeded nonzero elements of `alg`, identical across runs.
pub fn elements(alg: &Algebra, n: usize, max_terms: usize, max_len: usize) -> Vec<Element> {
    let mut r = rng(0xBE7C);
    (0..n)
        .map(|_| random_nonzero_element(&mut r, alg, max_terms, max_len))
        .collect()
}

/// The named fixtures plus a few larger graphs for the graph-level routines.
pub fn graphs() -> Vec<(String, Graph)> {
    let mut out: Vec<(String, Graph)> = fixtures::named()
        .into_iter()
        .map(|(n, g)| (n.to_string(), g))
        .collect();
    out.push(("line12".into(), fixtures::line(12)));
    out.push(("rose4_3".into(), fixtures::rose(4, 3)));
    out
}
