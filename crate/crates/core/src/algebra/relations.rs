use serde::Serialize;

use super::{Algebra, Element};

/// The four families of defining relations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Relation {
    /// `vw = δ_{v,w} v`
    Vertices,
    /// `s(e)e = e = e r(e)` and `r(e)e* = e* = e*s(e)`
    Incidence,
    /// `e*f = δ_{e,f} r(e)`
    Orthogonality,
    /// `v = Σ_{s(e)=v} ee*` for non-sinks `v`
    Summation,
}

/// One instance of a defining relation, evaluated in normal form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RelationCheck {
    pub relation: Relation,
    pub instance: String,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RelationReport {
    pub checks: Vec<RelationCheck>,
}

impl RelationReport {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }

    pub fn failures(&self) -> impl Iterator<Item = &RelationCheck> {
        self.checks.iter().filter(|c| !c.holds)
    }
}

/// Evaluates every instance of the four defining relations.
pub fn check_relations(alg: &Algebra) -> RelationReport {
    let g = alg.graph();
    let mut checks = Vec::new();
    let mut push = |relation: Relation, instance: String, lhs: Element, rhs: Element| {
        checks.push(RelationCheck {
            relation,
            instance,
            holds: lhs == rhs,
        });
    };

    for v in g.vertices() {
        for w in g.vertices() {
            let rhs = if v == w { alg.vertex(v) } else { alg.zero() };
            let name = format!("{} {}", g.vertex_name(v), g.vertex_name(w));
            push(
                Relation::Vertices,
                name,
                &alg.vertex(v) * &alg.vertex(w),
                rhs,
            );
        }
    }
    for e in g.edges() {
        let (s, r) = (alg.vertex(g.source(e)), alg.vertex(g.range(e)));
        let (x, xs) = (alg.edge(e), alg.ghost(e));
        let n = g.edge_name(e);
        push(
            Relation::Incidence,
            format!("s({n}) {n}"),
            &s * &x,
            x.clone(),
        );
        push(
            Relation::Incidence,
            format!("{n} r({n})"),
            &x * &r,
            x.clone(),
        );
        push(
            Relation::Incidence,
            format!("r({n}) {n}^*"),
            &r * &xs,
            xs.clone(),
        );
        push(
            Relation::Incidence,
            format!("{n}^* s({n})"),
            &xs * &s,
            xs.clone(),
        );
        for f in g.edges() {
            let rhs = if e == f { r.clone() } else { alg.zero() };
            push(
                Relation::Orthogonality,
                format!("{n}^* {}", g.edge_name(f)),
                &xs * &alg.edge(f),
                rhs,
            );
        }
    }
    for v in g.vertices().filter(|&v| !g.is_sink(v)) {
        let sum = g
            .out_edges(v)
            .iter()
            .fold(alg.zero(), |acc, &e| &acc + &(&alg.edge(e) * &alg.ghost(e)));
        push(
            Relation::Summation,
            g.vertex_name(v).to_string(),
            sum,
            alg.vertex(v),
        );
    }
    RelationReport { checks }
}
