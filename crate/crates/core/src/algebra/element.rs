use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{add_term, Algebra, AlgebraError, Monomial, Terms};
use crate::graph::VertexId;
use crate::scalar::Scalar;

/// An element of `L_K(E)` in normal form: a finite map from normal
/// monomials to nonzero coefficients.
#[derive(Clone)]
pub struct Element {
    alg: Algebra,
    terms: Terms,
}

impl Element {
    /// `terms` must already be normal with nonzero coefficients.
    pub(crate) fn from_normal(alg: Algebra, terms: Terms) -> Self {
        Element { alg, terms }
    }

    pub fn algebra(&self) -> &Algebra {
        &self.alg
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.terms.keys()
    }

    pub fn coefficient(&self, m: &Monomial) -> Scalar {
        self.terms
            .get(m)
            .cloned()
            .unwrap_or_else(|| self.alg.field().zero())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of monomials with nonzero coefficient.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    fn check(&self, other: &Element) -> Result<(), AlgebraError> {
        if self.alg == other.alg {
            Ok(())
        } else {
            Err(AlgebraError::MixedAlgebras)
        }
    }

    pub fn try_add(&self, other: &Element) -> Result<Element, AlgebraError> {
        self.check(other)?;
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            add_term(&mut terms, m.clone(), c.clone());
        }
        Ok(Element::from_normal(self.alg.clone(), terms))
    }

    pub fn try_sub(&self, other: &Element) -> Result<Element, AlgebraError> {
        self.try_add(&other.negate())
    }

    pub fn try_mul(&self, other: &Element) -> Result<Element, AlgebraError> {
        self.check(other)?;
        Ok(self.mul_unchecked(other))
    }

    pub(crate) fn mul_unchecked(&self, other: &Element) -> Element {
        let mut acc = Terms::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                if let Some(m) = m1.raw_product(m2) {
                    self.alg.reduce_into(&mut acc, m, c1 * c2);
                }
            }
        }
        Element::from_normal(self.alg.clone(), acc)
    }

    pub fn negate(&self) -> Element {
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect();
        Element::from_normal(self.alg.clone(), terms)
    }

    pub fn scale(&self, k: &Scalar) -> Element {
        if k.is_zero() {
            return self.alg.zero();
        }
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), c * k)).collect();
        Element::from_normal(self.alg.clone(), terms)
    }

    /// The involution `Σ k pq* ↦ Σ k qp*` (trivial on `K`).
    pub fn involution(&self) -> Element {
        // the normality condition is symmetric in p and q
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.adjoint(), c.clone()))
            .collect();
        Element::from_normal(self.alg.clone(), terms)
    }

    /// Largest `n` with a nonzero homogeneous component of degree `n`.
    pub fn degree(&self) -> Result<i64, AlgebraError> {
        self.degree_range()
            .map(|(_, hi)| hi)
            .ok_or(AlgebraError::ZeroElement)
    }

    /// Smallest and largest degree of a nonzero component.
    pub fn degree_range(&self) -> Option<(i64, i64)> {
        let mut degrees = self.terms.keys().map(Monomial::degree);
        let first = degrees.next()?;
        Some(degrees.fold((first, first), |(lo, hi), d| (lo.min(d), hi.max(d))))
    }

    pub fn is_homogeneous(&self) -> bool {
        matches!(self.degree_range(), Some((lo, hi)) if lo == hi)
    }

    /// The degree-`n` component. Normal forms respect the grading, so this
    /// filters monomials by degree.
    pub fn homogeneous_component(&self, n: i64) -> Element {
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.degree() == n)
            .map(|(m, c)| (m.clone(), c.clone()))
            .collect();
        Element::from_normal(self.alg.clone(), terms)
    }

    /// Vertices `s(p)` and `s(q)` over all monomials `pq*`; their sum `u`
    /// satisfies `ux = xu = x`.
    pub fn local_unit_vertices(&self) -> Vec<VertexId> {
        let mut vs: Vec<VertexId> = self
            .terms
            .keys()
            .flat_map(|m| [m.left_vertex(), m.right_vertex()])
            .collect();
        vs.sort();
        vs.dedup();
        vs
    }

    pub fn local_unit(&self) -> Element {
        let one = self.alg.field().one();
        let terms = self
            .local_unit_vertices()
            .into_iter()
            .map(|v| (Monomial::vertex(v), one.clone()))
            .collect();
        Element::from_normal(self.alg.clone(), terms)
    }

    /// Whether every monomial has trivial ghost part.
    pub fn is_ghost_free(&self) -> bool {
        self.terms.keys().all(Monomial::is_real)
    }

    /// `k` when this element is `k·v` for the vertex `v`.
    pub fn as_scalar_vertex(&self, v: VertexId) -> Option<Scalar> {
        match self.terms.iter().next() {
            Some((m, c)) if self.terms.len() == 1 && *m == Monomial::vertex(v) => Some(c.clone()),
            _ => None,
        }
    }
}

impl PartialEq for Element {
    fn eq(&self, other: &Self) -> bool {
        self.alg == other.alg && self.terms == other.terms
    }
}

impl Eq for Element {}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Element({self})")
    }
}

/// Canonical text: terms in monomial order, each `k*m`, e.g. `1*z - 1*f f^*`.
impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let g = self.alg.graph();
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let mono = m.display(g);
            match (i, c.is_negative()) {
                (0, false) => write!(f, "{c}*{mono}")?,
                (0, true) => write!(f, "-{}*{mono}", c.abs())?,
                (_, false) => write!(f, " + {c}*{mono}")?,
                (_, true) => write!(f, " - {}*{mono}", c.abs())?,
            }
        }
        Ok(())
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $try:ident) => {
        impl $trait for &Element {
            type Output = Element;

            /// Panics when the operands live in different algebras.
            fn $method(self, rhs: &Element) -> Element {
                self.$try(rhs).expect("operands from the same algebra")
            }
        }

        impl $trait for Element {
            type Output = Element;

            fn $method(self, rhs: Element) -> Element {
                (&self).$method(&rhs)
            }
        }
    };
}

binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, try_mul);

impl Neg for &Element {
    type Output = Element;

    fn neg(self) -> Element {
        self.negate()
    }
}

impl Neg for Element {
    type Output = Element;

    fn neg(self) -> Element {
        self.negate()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::scalar::Field;

    #[test]
    fn mixed_algebras_are_rejected() {
        let a = Algebra::rational(fixtures::w());
        let b = Algebra::rational(fixtures::t());
        assert_eq!(
            a.one().try_mul(&b.one()).unwrap_err(),
            AlgebraError::MixedAlgebras
        );
        let c = Algebra::new(fixtures::w(), Field::Prime(5));
        assert!(a.one().try_add(&c.one()).is_err());
        // structurally equal algebras interoperate
        let d = Algebra::rational(fixtures::w());
        assert!(a.one().try_add(&d.one()).is_ok());
    }

    #[test]
    fn degree_of_mixed_element() {
        let a = Algebra::rational(fixtures::t());
        let x = a.parse_element("e + f f + f^*").unwrap();
        assert_eq!(x.degree().unwrap(), 2);
        assert_eq!(x.degree_range(), Some((-1, 2)));
        assert_eq!(x.homogeneous_component(1).to_string(), "1*e");
        assert_eq!(a.zero().degree(), Err(AlgebraError::ZeroElement));
    }

    #[test]
    fn local_unit_fixes_element() {
        let a = Algebra::rational(fixtures::w());
        let x = a.parse_element("f f^* + 2 v").unwrap();
        let u = x.local_unit();
        assert_eq!(u.to_string(), "1*v + 1*z");
        assert_eq!(&u * &x, x);
        assert_eq!(&x * &u, x);
    }

    #[test]
    fn prime_field_display_has_no_minus() {
        let a = Algebra::new(fixtures::w(), Field::Prime(3));
        let x = a.parse_element("e e^*").unwrap();
        assert_eq!(x.to_string(), "1*z + 2*f f^*");
    }

    #[test]
    fn involution_reverses_products() {
        let a = Algebra::rational(fixtures::ls());
        let x = a.parse_element("c e - 3 u").unwrap();
        let y = a.parse_element("e^* c^* + c").unwrap();
        assert_eq!((&x * &y).involution(), &y.involution() * &x.involution());
    }
}
