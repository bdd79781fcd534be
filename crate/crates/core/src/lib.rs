//! Exact computations in Leavitt path algebras `L_K(E)` of finite graphs.
//!
//! The crate is organised bottom-up:
//!
//! * [`graph`]: finite directed graphs, line points, hereditary saturated
//!   closures, cycles, quotient and hedgehog graphs;
//! * [`algebra`]: elements of `L_K(E)` in a canonical normal form, with
//!   exact arithmetic over `Q` or `GF(p)`;
//! * [`reduction`]: certified reduction of nonzero elements to a vertex or
//!   a cycle polynomial, nondegeneracy witnesses and the simplicity test;
//! * [`socle`]: the socle as the ideal of the line points, its matrix
//!   summands and the hedgehog graph.
//!
//! Everything is deterministic: ties are broken by declaration order.
//!
//! ```
//! use leavitt::{fixtures, Algebra};
//!
//! let alg = Algebra::rational(fixtures::w());
//! let x = alg.parse_element("e e^*").unwrap();
//! assert_eq!(x.to_string(), "1*z - 1*f f^*");
//! ```

pub mod algebra;
pub mod fixtures;
pub mod graph;
pub mod random;
pub mod reduction;
pub mod scalar;
pub mod socle;

pub use algebra::{Algebra, AlgebraError, Element, Generator, Monomial};
pub use graph::{Cycle, EdgeId, Graph, GraphError, Path, VertexId, VertexSet};
pub use reduction::{
    nondegeneracy_witness, realify, reduce, verify_witness, Outcome, ReductionWitness,
};
pub use scalar::{Field, Scalar, ScalarError};
pub use socle::{
    in_socle, left_ideal_sum_membership, matrix_rep, socle_equals_algebra, socle_generators,
    socle_is_nonzero, socle_structure, MatrixRep, SocleReport, SummandSize,
};
