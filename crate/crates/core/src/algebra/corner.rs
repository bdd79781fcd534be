use std::collections::HashMap;

use super::{Algebra, Monomial};
use crate::graph::{GraphError, Path, VertexId};

/// Paths of length exactly `len + 1` extending those in `level`.
fn next_level(alg: &Algebra, level: &[Path]) -> Vec<Path> {
    let g = alg.graph();
    level
        .iter()
        .flat_map(|p| {
            g.out_edges(p.range())
                .iter()
                .map(move |&e| p.push_edge(e, g.range(e)))
        })
        .collect()
}

/// `levels[k]` holds all paths of length `k` starting in `from`.
fn levels(alg: &Algebra, from: &[VertexId], max_len: usize) -> Vec<Vec<Path>> {
    let mut out = vec![from.iter().map(|&v| Path::trivial(v)).collect::<Vec<_>>()];
    for _ in 0..max_len {
        let next = next_level(alg, out.last().expect("nonempty"));
        if next.is_empty() {
            break;
        }
        out.push(next);
    }
    out
}

/// Normal monomials `pq*` with `s(p) ∈ p_from`, `s(q) ∈ q_from` and
/// `l(p) + l(q) ≤ max_len`, sorted.
pub(super) fn monomials(
    alg: &Algebra,
    p_from: &[VertexId],
    q_from: &[VertexId],
    max_len: usize,
) -> Vec<Monomial> {
    let ps = levels(alg, p_from, max_len);
    let qs = levels(alg, q_from, max_len);
    let mut by_range: HashMap<VertexId, Vec<&Path>> = HashMap::new();
    for q in qs.iter().flatten() {
        by_range.entry(q.range()).or_default().push(q);
    }
    let mut out = Vec::new();
    for p in ps.iter().flatten() {
        for q in by_range.get(&p.range()).into_iter().flatten() {
            if p.len() + q.len() > max_len {
                continue;
            }
            let m = Monomial::new(p.clone(), (*q).clone()).expect("ranges agree");
            if alg.is_normal(&m) {
                out.push(m);
            }
        }
    }
    out.sort();
    out
}

/// Normal monomials of the corner `u L u` with `l(p) + l(q) ≤ max_len`,
/// in monomial order.
pub fn corner_basis(
    alg: &Algebra,
    u: VertexId,
    max_len: usize,
) -> Result<Vec<Monomial>, GraphError> {
    alg.graph().check_vertex(u)?;
    Ok(monomials(alg, &[u], &[u], max_len))
}

/// Whether [`corner_basis`] would return only `u`, stopping at the first
/// other monomial found.
pub fn corner_is_trivial(alg: &Algebra, u: VertexId, max_len: usize) -> Result<bool, GraphError> {
    alg.graph().check_vertex(u)?;
    let mut lv = vec![vec![Path::trivial(u)]];
    for total in 1..=max_len {
        let next = next_level(alg, lv.last().expect("nonempty"));
        lv.push(next);
        for lp in 0..=total {
            for p in &lv[lp] {
                for q in lv[total - lp].iter().filter(|q| q.range() == p.range()) {
                    let m = Monomial::new(p.clone(), q.clone()).expect("ranges agree");
                    if alg.is_normal(&m) {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(true)
}
