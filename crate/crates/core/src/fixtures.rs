//! Small named graphs used throughout the tests, benches and docs.
//!
//! | name | graph |
//! |------|-------|
//! | `L3` | `v1 -a-> v2 -b-> v3` |
//! | `W`  | `v <-e- z -f-> w` |
//! | `T`  | `u -e-> v`, loop `f` at `v` |
//! | `R2` | loops `g`, `h` at `v` |
//! | `LS` | loop `c` at `u`, `u -e-> v` |

use crate::graph::Graph;

/// Edge names for line graphs: `a`, `b`, `c`, ...
fn line_edge_name(i: usize) -> String {
    if i < 26 {
        char::from(b'a' + i as u8).to_string()
    } else {
        format!("e{i}")
    }
}

/// The line graph `v1 -> v2 -> ... -> vn`.
pub fn line(n: usize) -> Graph {
    let vertices: Vec<String> = (1..=n).map(|i| format!("v{i}")).collect();
    let edges = (1..n).map(|i| {
        (
            line_edge_name(i - 1),
            format!("v{i}"),
            format!("v{}", i + 1),
        )
    });
    Graph::new(vertices, edges).expect("line graph is well formed")
}

pub fn l3() -> Graph {
    line(3)
}

pub fn w() -> Graph {
    Graph::from_strs(&["v", "z", "w"], &[("e", "z", "v"), ("f", "z", "w")]).expect("fixture")
}

pub fn t() -> Graph {
    Graph::from_strs(&["u", "v"], &[("e", "u", "v"), ("f", "v", "v")]).expect("fixture")
}

pub fn r2() -> Graph {
    Graph::from_strs(&["v"], &[("g", "v", "v"), ("h", "v", "v")]).expect("fixture")
}

pub fn ls() -> Graph {
    Graph::from_strs(&["u", "v"], &[("c", "u", "u"), ("e", "u", "v")]).expect("fixture")
}

/// A line of `m` vertices whose last vertex carries `n` loops:
/// edges `e1 .. e(m-1)` along the line, loops `f1 .. fn` at `vm`.
pub fn rose(m: usize, n: usize) -> Graph {
    assert!(m >= 1, "rose graph needs at least one vertex");
    let vertices: Vec<String> = (1..=m).map(|i| format!("v{i}")).collect();
    let line = (1..m).map(|i| (format!("e{i}"), format!("v{i}"), format!("v{}", i + 1)));
    let loops = (1..=n).map(|j| (format!("f{j}"), format!("v{m}"), format!("v{m}")));
    Graph::new(vertices, line.chain(loops)).expect("rose graph is well formed")
}

/// The five canonical fixtures, in the order L3, W, T, R2, LS.
pub fn all() -> Vec<Graph> {
    vec![l3(), w(), t(), r2(), ls()]
}

pub fn named() -> Vec<(&'static str, Graph)> {
    vec![
        ("L3", l3()),
        ("W", w()),
        ("T", t()),
        ("R2", r2()),
        ("LS", ls()),
    ]
}
