//! Polynomial rings and exact multivariate polynomials.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::error::{AlgebraError, Result};
use crate::field::Field;
use crate::monomial::{Monomial, MonomialOrder, MAX_VARS};

/// Largest ring a caller may create; two variable slots stay free for the
/// auxiliary variables used by elimination.
pub const MAX_RING_VARS: usize = MAX_VARS - 2;

/// `k[x_0, ..., x_r]` with named variables and an active monomial order.
#[derive(Clone, Debug, PartialEq)]
pub struct PolyRing<F: Field> {
    field: F,
    names: Vec<String>,
    order: MonomialOrder,
}

impl<F: Field> PolyRing<F> {
    pub fn new(field: F, names: Vec<String>) -> Result<Arc<Self>> {
        if names.len() > MAX_RING_VARS {
            return Err(AlgebraError::TooManyVariables {
                requested: names.len(),
                max: MAX_RING_VARS,
            });
        }
        if names.is_empty() {
            return Err(AlgebraError::InvalidInput("ring needs a variable".into()));
        }
        for (i, n) in names.iter().enumerate() {
            if names[..i].contains(n) {
                return Err(AlgebraError::InvalidInput(format!("duplicate variable {n}")));
            }
        }
        Ok(Arc::new(PolyRing {
            field,
            names,
            order: MonomialOrder::Grevlex,
        }))
    }

    /// Variables named `x0, ..., x{n-1}`.
    pub fn with_vars(field: F, n: usize) -> Result<Arc<Self>> {
        Self::new(field, (0..n).map(|i| format!("x{i}")).collect())
    }

    pub fn with_order(&self, order: MonomialOrder) -> Arc<Self> {
        Arc::new(PolyRing {
            field: self.field.clone(),
            names: self.names.clone(),
            order,
        })
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    /// The projective dimension `r` of `P^r = Proj k[x_0..x_r]`.
    pub fn r(&self) -> usize {
        self.names.len() - 1
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    /// Same field and variables; orders may differ.
    pub fn compatible(&self, other: &PolyRing<F>) -> bool {
        self.field == other.field && self.names == other.names
    }

    pub fn zero(self: &Arc<Self>) -> Polynomial<F> {
        Polynomial {
            ring: self.clone(),
            terms: Vec::new(),
        }
    }

    pub fn one(self: &Arc<Self>) -> Polynomial<F> {
        self.constant(self.field.one())
    }

    pub fn constant(self: &Arc<Self>, c: F::Elem) -> Polynomial<F> {
        self.monomial(c, Monomial::ONE)
    }

    pub fn var(self: &Arc<Self>, i: usize) -> Polynomial<F> {
        assert!(i < self.nvars(), "variable index out of range");
        self.monomial(self.field.one(), Monomial::var(i, 1))
    }

    pub fn monomial(self: &Arc<Self>, c: F::Elem, m: Monomial) -> Polynomial<F> {
        let terms = if self.field.is_zero(&c) {
            Vec::new()
        } else {
            vec![(c, m)]
        };
        Polynomial {
            ring: self.clone(),
            terms,
        }
    }

    /// Builds a normalized polynomial from arbitrary terms: like monomials are
    /// combined, zeros dropped, terms sorted descending.
    pub fn from_terms(self: &Arc<Self>, mut terms: Vec<(F::Elem, Monomial)>) -> Polynomial<F> {
        let order = self.order;
        terms.sort_by(|a, b| order.cmp(&b.1, &a.1));
        let field = &self.field;
        let mut out: Vec<(F::Elem, Monomial)> = Vec::with_capacity(terms.len());
        for (c, m) in terms {
            match out.last_mut() {
                Some(last) if last.1 == m => last.0 = field.add(&last.0, &c),
                _ => {
                    if let Some(last) = out.last() {
                        if field.is_zero(&last.0) {
                            out.pop();
                        }
                    }
                    out.push((c, m));
                }
            }
        }
        if let Some(last) = out.last() {
            if field.is_zero(&last.0) {
                out.pop();
            }
        }
        Polynomial {
            ring: self.clone(),
            terms: out,
        }
    }

    /// Terms given as `(integer coefficient, exponent vector)`.
    pub fn from_int_terms(self: &Arc<Self>, terms: &[(i64, &[u32])]) -> Polynomial<F> {
        let ts = terms
            .iter()
            .map(|(c, e)| {
                assert_eq!(e.len(), self.nvars(), "exponent vector length");
                (self.field.from_i64(*c), Monomial::new(e))
            })
            .collect();
        self.from_terms(ts)
    }

    pub fn parse(self: &Arc<Self>, text: &str) -> Result<Polynomial<F>> {
        crate::parse::parse_polynomial(self, text)
    }
}

/// Whether a polynomial is a form, and of which degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Homogeneity {
    pub homogeneous: bool,
    /// `None` for the zero polynomial, whose degree is undefined.
    pub degree: Option<u32>,
}

/// A polynomial with terms sorted strictly descending in its ring's order,
/// with no zero coefficients.
#[derive(Clone)]
pub struct Polynomial<F: Field> {
    ring: Arc<PolyRing<F>>,
    terms: Vec<(F::Elem, Monomial)>,
}

impl<F: Field> Polynomial<F> {
    pub fn ring(&self) -> &Arc<PolyRing<F>> {
        &self.ring
    }

    pub fn terms(&self) -> &[(F::Elem, Monomial)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(F::Elem, Monomial)> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.1)
    }

    pub fn leading_coefficient(&self) -> Option<&F::Elem> {
        self.terms.first().map(|t| &t.0)
    }

    /// Largest total degree of a term; `None` for zero.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.1.degree()).max()
    }

    pub fn homogeneity(&self) -> Homogeneity {
        let Some(d) = self.terms.first().map(|t| t.1.degree()) else {
            return Homogeneity {
                homogeneous: true,
                degree: None,
            };
        };
        let homogeneous = self.terms.iter().all(|t| t.1.degree() == d);
        Homogeneity {
            homogeneous,
            degree: homogeneous.then_some(d),
        }
    }

    pub fn is_homogeneous(&self) -> bool {
        self.homogeneity().homogeneous
    }

    /// Degree of a nonzero form.
    pub fn form_degree(&self) -> Option<u32> {
        self.homogeneity().degree
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|t| t.1.is_one())
    }

    fn check_ring(&self, other: &Polynomial<F>) -> Result<()> {
        if Arc::ptr_eq(&self.ring, &other.ring) || *self.ring == *other.ring {
            Ok(())
        } else {
            Err(AlgebraError::RingMismatch)
        }
    }

    fn merge(&self, other: &Polynomial<F>, negate: bool) -> Polynomial<F> {
        let field = self.ring.field();
        let order = self.ring.order;
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match order.cmp(&a[i].1, &b[j].1) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let c = if negate { field.neg(&b[j].0) } else { b[j].0.clone() };
                    out.push((c, b[j].1));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate {
                        field.sub(&a[i].0, &b[j].0)
                    } else {
                        field.add(&a[i].0, &b[j].0)
                    };
                    if !field.is_zero(&c) {
                        out.push((c, a[i].1));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|(c, m)| {
            let c = if negate { field.neg(c) } else { c.clone() };
            (c, *m)
        }));
        Polynomial {
            ring: self.ring.clone(),
            terms: out,
        }
    }

    pub fn checked_add(&self, other: &Polynomial<F>) -> Result<Polynomial<F>> {
        self.check_ring(other)?;
        Ok(self.merge(other, false))
    }

    pub fn checked_sub(&self, other: &Polynomial<F>) -> Result<Polynomial<F>> {
        self.check_ring(other)?;
        Ok(self.merge(other, true))
    }

    pub fn checked_mul(&self, other: &Polynomial<F>) -> Result<Polynomial<F>> {
        self.check_ring(other)?;
        let field = self.ring.field();
        let mut prods = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (ca, ma) in &self.terms {
            for (cb, mb) in &other.terms {
                prods.push((field.mul(ca, cb), ma.mul(mb)));
            }
        }
        Ok(self.ring.from_terms(prods))
    }

    pub fn scale(&self, c: &F::Elem) -> Polynomial<F> {
        let field = self.ring.field();
        if field.is_zero(c) {
            return self.ring.zero();
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(a, m)| (field.mul(a, c), *m))
                .collect(),
        }
    }

    pub fn mul_monomial(&self, c: &F::Elem, m: &Monomial) -> Polynomial<F> {
        let field = self.ring.field();
        if field.is_zero(c) {
            return self.ring.zero();
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(a, t)| (field.mul(a, c), t.mul(m)))
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Polynomial<F> {
        let mut acc = self.ring.one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Scales so the leading coefficient is 1; zero stays zero.
    pub fn monic(&self) -> Polynomial<F> {
        match self.leading_coefficient() {
            None => self.clone(),
            Some(lc) => {
                let inv = self.ring.field().inv(lc).expect("nonzero leading coefficient");
                self.scale(&inv)
            }
        }
    }

    pub fn derivative(&self, var: usize) -> Polynomial<F> {
        let field = self.ring.field();
        let terms = self
            .terms
            .iter()
            .filter(|(_, m)| m.exp(var) > 0)
            .map(|(c, m)| {
                (
                    field.mul(c, &field.from_i64(m.exp(var) as i64)),
                    m.lower_var(var, 1),
                )
            })
            .collect();
        self.ring.from_terms(terms)
    }

    /// Re-expresses the polynomial in a compatible ring (typically the same
    /// variables under another order).
    pub fn in_ring(&self, ring: &Arc<PolyRing<F>>) -> Result<Polynomial<F>> {
        if !self.ring.compatible(ring) {
            return Err(AlgebraError::RingMismatch);
        }
        let mut terms = self.terms.clone();
        let order = ring.order;
        terms.sort_by(|a, b| order.cmp(&b.1, &a.1));
        Ok(Polynomial {
            ring: ring.clone(),
            terms,
        })
    }

    /// Applies a permutation of variables (`x_i -> x_{perm[i]}`).
    pub fn permute_vars(&self, perm: &[usize]) -> Polynomial<F> {
        let terms = self
            .terms
            .iter()
            .map(|(c, m)| (c.clone(), m.permute(perm)))
            .collect();
        self.ring.from_terms(terms)
    }
}

impl<F: Field> PartialEq for Polynomial<F> {
    fn eq(&self, other: &Self) -> bool {
        self.ring.compatible(&other.ring)
            && self.terms.len() == other.terms.len()
            && if self.ring.order == other.ring.order {
                self.terms == other.terms
            } else {
                match other.in_ring(&self.ring) {
                    Ok(o) => self.terms == o.terms,
                    Err(_) => false,
                }
            }
    }
}

impl<F: Field> Eq for Polynomial<F> {}

impl<F: Field> fmt::Debug for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

impl<F: Field> fmt::Display for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let field = self.ring.field();
        let n = self.ring.nvars();
        for (k, (c, m)) in self.terms.iter().enumerate() {
            let (neg, mag) = field.signed_repr(c);
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mut factors: Vec<String> = Vec::new();
            if mag != "1" || m.is_one() {
                factors.push(mag);
            }
            for i in 0..n {
                match m.exp(i) {
                    0 => {}
                    1 => factors.push(self.ring.names[i].clone()),
                    e => factors.push(format!("{}^{}", self.ring.names[i], e)),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl<'a, F: Field> $tr<&'a Polynomial<F>> for &'a Polynomial<F> {
            type Output = Polynomial<F>;
            /// Panics when the operands live in different rings; use the
            /// `checked_*` form to get an error instead.
            fn $method(self, rhs: &'a Polynomial<F>) -> Polynomial<F> {
                self.$checked(rhs).expect("polynomial ring mismatch")
            }
        }
    };
}

binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);

impl<F: Field> Neg for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn neg(self) -> Polynomial<F> {
        let field = self.ring.field();
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(c, m)| (field.neg(c), *m)).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, RationalField};
    use proptest::prelude::*;

    fn ring() -> Arc<PolyRing<PrimeField>> {
        PolyRing::new(
            PrimeField::default(),
            vec!["x".into(), "y".into(), "z".into()],
        )
        .unwrap()
    }

    #[test]
    fn additive_inverse() {
        let r = ring();
        let f = r.parse("x + y").unwrap();
        let g = r.parse("-x - y").unwrap();
        assert!((&f + &g).is_zero());
    }

    #[test]
    fn difference_of_squares() {
        let r = ring();
        let f = r.parse("x + y").unwrap();
        let g = r.parse("x - y").unwrap();
        assert_eq!(&f * &g, r.parse("x^2 - y^2").unwrap());
    }

    #[test]
    fn scaling_over_f5() {
        let r = PolyRing::new(PrimeField::new(5).unwrap(), vec!["x".into()]).unwrap();
        let x = r.var(0);
        let two = r.field().from_i64(2);
        assert_eq!(x.scale(&two).to_string(), "2*x");
        assert_eq!(x.scale(&r.field().from_i64(5)), r.zero());
    }

    #[test]
    fn homogeneity_examples() {
        let r = ring();
        let h = r.parse("x^2 + y*z").unwrap().homogeneity();
        assert_eq!((h.homogeneous, h.degree), (true, Some(2)));
        assert!(!r.parse("x^2 + y").unwrap().is_homogeneous());
        let z = r.zero().homogeneity();
        assert!(z.homogeneous && z.degree.is_none());
        // x0^{d-1} * l with l linear is a form of degree d
        let l = r.parse("x + y + z").unwrap();
        let f = &r.parse("x^3").unwrap() * &l;
        assert_eq!(f.form_degree(), Some(4));
    }

    #[test]
    fn ring_mismatch_is_an_error() {
        let a = ring();
        let b = PolyRing::with_vars(PrimeField::default(), 3).unwrap();
        assert_eq!(
            a.var(0).checked_add(&b.var(0)),
            Err(AlgebraError::RingMismatch)
        );
        let c = PolyRing::new(PrimeField::new(7).unwrap(), a.names().to_vec()).unwrap();
        assert!(a.var(0).checked_mul(&c.var(0)).is_err());
    }

    #[test]
    fn derivative_and_monic() {
        let r = PolyRing::new(RationalField, vec!["x".into(), "y".into()]).unwrap();
        let f = r.parse("3*x^2*y - 2*y^3").unwrap();
        assert_eq!(f.derivative(0), r.parse("6*x*y").unwrap());
        assert_eq!(f.monic().to_string(), "x^2*y - 2/3*y^3");
    }

    #[test]
    fn reordering_keeps_value() {
        let r = ring();
        let f = r.parse("x*z^3 + y^2").unwrap();
        let lex = r.with_order(MonomialOrder::Lex);
        let g = f.in_ring(&lex).unwrap();
        assert_eq!(f, g);
        assert_eq!(r.parse("y^2 + x").unwrap().leading_monomial(), Some(&Monomial::new(&[0, 2, 0])));
        assert_eq!(
            r.parse("y^2 + x").unwrap().in_ring(&lex).unwrap().leading_monomial(),
            Some(&Monomial::new(&[1, 0, 0]))
        );
    }

    fn arb_poly(r: Arc<PolyRing<PrimeField>>) -> impl Strategy<Value = Polynomial<PrimeField>> {
        proptest::collection::vec((-20i64..20, proptest::collection::vec(0u32..4, 3)), 0..6)
            .prop_map(move |ts| {
                let terms = ts
                    .into_iter()
                    .map(|(c, e)| (r.field().from_i64(c), Monomial::new(&e)))
                    .collect();
                r.from_terms(terms)
            })
    }

    fn arb_qpoly(r: Arc<PolyRing<RationalField>>) -> impl Strategy<Value = Polynomial<RationalField>> {
        proptest::collection::vec((-20i64..20, proptest::collection::vec(0u32..4, 2)), 0..5)
            .prop_map(move |ts| {
                let terms = ts
                    .into_iter()
                    .map(|(c, e)| (r.field().from_i64(c), Monomial::new(&e)))
                    .collect();
                r.from_terms(terms)
            })
    }

    proptest! {
        #[test]
        fn ring_axioms_prime(f in arb_poly(ring()), g in arb_poly(ring()), h in arb_poly(ring())) {
            let f = f.in_ring(&ring()).unwrap();
            let r = f.ring().clone();
            let g = g.in_ring(&r).unwrap();
            let h = h.in_ring(&r).unwrap();
            prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
            prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
            prop_assert_eq!(&(&f + &g) + &h, &f + &(&g + &h));
            prop_assert_eq!(&f * &g, &g * &f);
            prop_assert!((&f - &f).is_zero());
        }

        #[test]
        fn ring_axioms_rational(
            f in arb_qpoly(PolyRing::new(RationalField, vec!["a".into(), "b".into()]).unwrap()),
            g in arb_qpoly(PolyRing::new(RationalField, vec!["a".into(), "b".into()]).unwrap()),
            h in arb_qpoly(PolyRing::new(RationalField, vec!["a".into(), "b".into()]).unwrap()),
        ) {
            let r = f.ring().clone();
            let g = g.in_ring(&r).unwrap();
            let h = h.in_ring(&r).unwrap();
            prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
            prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
        }

        #[test]
        fn print_parse_round_trip(f in arb_poly(ring())) {
            let r = f.ring().clone();
            let back = r.parse(&f.to_string()).unwrap();
            prop_assert_eq!(back.terms(), f.terms());
        }
    }
}
