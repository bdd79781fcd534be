//! Acceptance criteria, one line per criterion. Exits nonzero on any failure.
//!
//! All arithmetic is exact, so every comparison is an equality; there are no
//! tolerances to tune.

use std::collections::BTreeMap;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::Instant;

use leavitt::algebra::rewrite::{rewrite, Strategy};
use leavitt::algebra::{check_relations, corner_basis, corner_is_trivial};
use leavitt::graph::{hedgehog_graph, line_points, sinks};
use leavitt::random::{
    random_element, random_graph, random_nonzero_element, random_raw_combination, rng,
};
use leavitt::reduction::{is_simple, vertex_ideal_minimal};
use leavitt::socle::{matrix_sizes, socle_structure, SummandSize};
use leavitt::{
    fixtures, left_ideal_sum_membership, matrix_rep, nondegeneracy_witness, reduce,
    socle_equals_algebra, socle_generators, socle_is_nonzero, verify_witness, Algebra, Element,
    Graph, Monomial, Scalar,
};

type Outcome = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Cycle detection by three-colour DFS, independent of the library's
/// topological sort.
fn has_cycle(g: &Graph) -> bool {
    fn visit(g: &Graph, v: usize, colour: &mut [u8]) -> bool {
        colour[v] = 1;
        for &e in g.out_edges(leavitt::VertexId(v)) {
            let w = g.range(e).0;
            if colour[w] == 1 || (colour[w] == 0 && visit(g, w, colour)) {
                return true;
            }
        }
        colour[v] = 2;
        false
    }
    let mut colour = vec![0u8; g.vertex_count()];
    (0..g.vertex_count()).any(|v| colour[v] == 0 && visit(g, v, &mut colour))
}

/// Rank of a family of sparse vectors over a field, by Gaussian elimination.
fn rank<K: Ord + Clone>(vectors: Vec<BTreeMap<K, Scalar>>) -> usize {
    let mut pivots: Vec<BTreeMap<K, Scalar>> = Vec::new();
    for mut v in vectors {
        for p in &pivots {
            let (lead, lead_coef) = p.iter().next().expect("pivot rows are nonzero");
            if let Some(c) = v.get(lead).cloned() {
                let factor = &c * &lead_coef.inverse().expect("nonzero pivot");
                for (k, a) in p {
                    let cur = v.get(k).cloned().unwrap_or_else(|| a.field().zero());
                    let next = &cur - &(&factor * a);
                    if next.is_zero() {
                        v.remove(k);
                    } else {
                        v.insert(k.clone(), next);
                    }
                }
            }
        }
        if !v.is_empty() {
            // keep rows in echelon form: sort by leading key
            pivots.push(v);
            pivots.sort_by(|a, b| a.keys().next().cmp(&b.keys().next()));
        }
    }
    pivots.len()
}

fn c1_relations() -> Outcome {
    let mut graphs: Vec<Graph> = fixtures::all();
    let mut r = rng(0xC1);
    graphs.extend((0..200).map(|_| random_graph(&mut r, 8, 12)));
    let mut instances = 0;
    for g in &graphs {
        let report = check_relations(&Algebra::rational(g.clone()));
        instances += report.checks.len();
        let failures: Vec<_> = report.failures().cloned().collect();
        if let Some(f) = failures.first() {
            return Err(format!("{} fails: {}", f.instance, g));
        }
    }
    Ok(format!(
        "{} graphs, {instances} relation instances",
        graphs.len()
    ))
}

fn c2_two_by_two() -> Outcome {
    let g = fixtures::w();
    let report = socle_structure(&g, None);
    let two = SummandSize::finite(2);
    ensure(report.sizes() == [two.clone(), two], || {
        format!("summands {:?}", report.sizes())
    })?;
    ensure(
        matrix_sizes(&g).map_err(|e| e.to_string())? == [2, 2],
        || "matrix oracle disagrees".into(),
    )?;
    ensure(socle_equals_algebra(&g), || {
        "socle is not the whole algebra".into()
    })?;
    let alg = Algebra::rational(g.clone());
    let x = alg.parse_element("e^*").unwrap();
    let vs = g.vertex_set(["v", "w"]).unwrap();
    ensure(!left_ideal_sum_membership(&x, &vs).unwrap(), || {
        "e^* found in L v + L w".into()
    })?;
    Ok("summands {2,2}, socle = L(W), e^* not in L v + L w".into())
}

fn c3_line_graphs() -> Outcome {
    for n in 1..=6usize {
        let g = fixtures::line(n);
        let report = socle_structure(&g, None);
        ensure(report.sizes() == [SummandSize::finite(n as u64)], || {
            format!("E_{n}: summands {:?}", report.sizes())
        })?;
        let alg = Algebra::rational(g);
        let basis = alg.finite_basis().ok_or("line graph reported cyclic")?;
        let images = basis
            .iter()
            .map(|m| {
                let rep = matrix_rep(&alg.monomial(m.clone())).unwrap();
                rep.entries.into_iter().collect::<BTreeMap<_, _>>()
            })
            .collect();
        let r = rank(images);
        ensure(basis.len() == n * n && r == n * n, || {
            format!("E_{n}: {} normal monomials of rank {r}", basis.len())
        })?;
    }
    Ok("E_1..E_6: one summand of size n, n^2 independent normal monomials".into())
}

fn c4_zero_socle() -> Outcome {
    for m in 1..=3 {
        for n in 1..=3 {
            let g = fixtures::rose(m, n);
            ensure(line_points(&g).is_empty(), || {
                format!("E_{n}^{m} has line points")
            })?;
            ensure(!socle_is_nonzero(&g), || {
                format!("E_{n}^{m} has nonzero socle")
            })?;
        }
    }
    Ok("9 graphs, no line points, zero socle".into())
}

fn c5_toeplitz() -> Outcome {
    let g = fixtures::t();
    let u = g.vertex_id("u").unwrap();
    let v = g.vertex_id("v").unwrap();
    ensure(!vertex_ideal_minimal(&g, u).unwrap(), || {
        "L u reported minimal".into()
    })?;
    let alg = Algebra::rational(g);
    let corner = corner_basis(&alg, v, 4).unwrap();
    ensure(
        corner.len() > 1 && corner.contains(&Monomial::vertex(v)),
        || format!("corner at v has {} monomials", corner.len()),
    )?;
    Ok(format!(
        "L u not minimal, |corner_basis(v, 4)| = {}",
        corner.len()
    ))
}

fn c6_minimality() -> Outcome {
    let mut r = rng(0xC6);
    let mut vertices = 0;
    let mut minimal = 0;
    for i in 0..300 {
        let g = random_graph(&mut r, 8, 12);
        let alg = Algebra::rational(g.clone());
        let depth = 2 * g.vertex_count();
        for u in g.vertices() {
            let by_graph = vertex_ideal_minimal(&g, u).unwrap();
            let by_corner = corner_is_trivial(&alg, u, depth).unwrap();
            ensure(by_graph == by_corner, || {
                format!(
                    "graph {i}, vertex {}: line point {by_graph}, trivial corner {by_corner}",
                    g.vertex_name(u)
                )
            })?;
            vertices += 1;
            minimal += by_graph as usize;
        }
    }
    Ok(format!(
        "300 graphs, {vertices} vertices ({minimal} line points) agree"
    ))
}

/// 500 seeded nonzero elements per fixture, shared by criteria 7 and 8.
fn sample_elements() -> Vec<(&'static str, Vec<Element>)> {
    fixtures::named()
        .into_iter()
        .enumerate()
        .map(|(i, (name, g))| {
            let alg = Algebra::rational(g);
            let mut r = rng(0x700 + i as u64);
            let xs = (0..500)
                .map(|_| random_nonzero_element(&mut r, &alg, 4, 3))
                .collect();
            (name, xs)
        })
        .collect()
}

fn c7_reduction(samples: &[(&str, Vec<Element>)]) -> Outcome {
    let mut polys = 0;
    for (name, xs) in samples {
        let condition_l = matches!(*name, "R2" | "W" | "L3");
        for x in xs {
            let w = reduce(x).map_err(|e| e.to_string())?;
            ensure(verify_witness(x, &w), || {
                format!("{name}: witness for {x} fails")
            })?;
            if !w.outcome.is_scalar_vertex() {
                ensure(!condition_l, || {
                    format!("{name}: polynomial outcome for {x}")
                })?;
                polys += 1;
            }
        }
    }
    Ok(format!(
        "2500 witnesses verified, {polys} cycle-polynomial outcomes (T, LS only)"
    ))
}

fn c8_nondegeneracy(samples: &[(&str, Vec<Element>)]) -> Outcome {
    for (name, xs) in samples {
        for x in xs {
            let a = nondegeneracy_witness(x).map_err(|e| e.to_string())?;
            ensure(!(&(x * &a) * x).is_zero(), || {
                format!("{name}: x a x = 0 for {x}")
            })?;
        }
    }
    Ok("2500 elements with x a x != 0".into())
}

fn random_graphs_c9() -> Vec<Graph> {
    let mut r = rng(0xC9);
    (0..500).map(|_| random_graph(&mut r, 10, 15)).collect()
}

fn c9_sinks(graphs: &[Graph]) -> Outcome {
    let mut nonzero = 0;
    for (i, g) in graphs.iter().enumerate() {
        let has_sink = !sinks(g).is_empty();
        ensure(socle_is_nonzero(g) == has_sink, || {
            format!("graph {i}: sink {has_sink}")
        })?;
        nonzero += has_sink as usize;
    }
    Ok(format!("500 graphs ({nonzero} with a sink)"))
}

fn c10_hedgehog(graphs: &[Graph]) -> Outcome {
    let mut checked = 0;
    let mut truncated = 0;
    for (i, g) in graphs.iter().enumerate() {
        if line_points(g).is_empty() {
            continue;
        }
        let h = socle_generators(g);
        let hh = hedgehog_graph(g, &h, g.vertex_count() + 1).map_err(|e| e.to_string())?;
        ensure(!has_cycle(&hh.graph) && hh.is_acyclic(), || {
            format!("graph {i}: hedgehog has a cycle")
        })?;
        checked += 1;
        truncated += (!hh.complete) as usize;
    }
    Ok(format!(
        "{checked} hedgehog graphs acyclic ({truncated} truncated)"
    ))
}

fn c11_simplicity() -> Outcome {
    let got = [
        is_simple(&fixtures::r2()),
        is_simple(&fixtures::w()),
        is_simple(&fixtures::t()),
    ];
    ensure(got == [true, false, false], || format!("R2, W, T: {got:?}"))?;
    Ok("R2 simple, W and T not".into())
}

fn c12_matrix_oracle() -> Outcome {
    let mut zeros = 0;
    for (i, g) in [fixtures::l3(), fixtures::w()].into_iter().enumerate() {
        let alg = Algebra::rational(g);
        let mut r = rng(0xC12 + i as u64);
        for _ in 0..500 {
            let x = random_element(&mut r, &alg, 4, 3);
            let y = random_element(&mut r, &alg, 4, 3);
            let (mx, my) = (matrix_rep(&x).unwrap(), matrix_rep(&y).unwrap());
            ensure(matrix_rep(&(&x * &y)).unwrap() == mx.mul(&my), || {
                format!("product {x} . {y}")
            })?;
            ensure(matrix_rep(&(&x + &y)).unwrap() == mx.add(&my), || {
                format!("sum {x} + {y}")
            })?;
            for z in [&x, &(&x - &y), &(&x * &y)] {
                let rz = matrix_rep(z).unwrap();
                ensure(z.is_zero() == rz.is_zero(), || format!("zero test on {z}"))?;
                zeros += z.is_zero() as usize;
            }
        }
    }
    Ok(format!(
        "1000 pairs on L3 and W, {zeros} zero elements detected on both sides"
    ))
}

fn c13_confluence() -> Outcome {
    let mut steps = 0;
    for (i, (name, g)) in fixtures::named().into_iter().enumerate() {
        let alg = Algebra::rational(g);
        let mut r = rng(0xC13 + i as u64);
        for j in 0..1000u64 {
            let raw = random_raw_combination(&mut r, &alg, 3, 3);
            let a = rewrite(&alg, &raw, Strategy::LeftmostInnermost);
            let b = rewrite(&alg, &raw, Strategy::Random { seed: j });
            ensure(a.element == b.element, || {
                format!("{name}: strategies disagree on {raw:?}")
            })?;
            let direct = raw
                .iter()
                .fold(alg.zero(), |acc, (k, w)| &acc + &alg.product_of(w).scale(k));
            ensure(a.element == direct, || {
                format!("{name}: rewriting disagrees with multiplication")
            })?;
            steps += a.steps + b.steps;
        }
    }
    Ok(format!("5000 combinations, {steps} rewrite steps"))
}

fn main() -> ExitCode {
    let samples = sample_elements();
    let graphs = random_graphs_c9();
    let criteria: Vec<Criterion> = vec![
        ("relations", Box::new(c1_relations)),
        ("socle of W is M2 + M2", Box::new(c2_two_by_two)),
        (
            "line graphs are full matrix algebras",
            Box::new(c3_line_graphs),
        ),
        ("roses over lines have zero socle", Box::new(c4_zero_socle)),
        ("T: L u not minimal", Box::new(c5_toeplitz)),
        (
            "minimal ideal iff line point iff trivial corner",
            Box::new(c6_minimality),
        ),
        (
            "reduction certificates",
            Box::new(|| c7_reduction(&samples)),
        ),
        ("nondegeneracy", Box::new(|| c8_nondegeneracy(&samples))),
        ("nonzero socle iff sink", Box::new(|| c9_sinks(&graphs))),
        (
            "hedgehog graphs are acyclic",
            Box::new(|| c10_hedgehog(&graphs)),
        ),
        ("simplicity", Box::new(c11_simplicity)),
        (
            "matrix representation is a faithful homomorphism",
            Box::new(c12_matrix_oracle),
        ),
        ("rewriting strategies agree", Box::new(c13_confluence)),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("PASS {:>2} {name}: {detail} ({secs:.2}s)", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {why} ({secs:.2}s)", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
