//! Gröbner bases, normal forms, and the [`Ideal`] type with its caches.

pub mod engine;
pub mod hilbert;
pub mod syzygy;

use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use serde::{Deserialize, Serialize};

use crate::combinat::monomial_count;
use crate::error::{AlgebraError, Result};
use crate::field::Field;
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::{PolyRing, Polynomial};
use engine::{Budget, Frame, Reducers, Term, Vector};
pub use hilbert::HilbertData;

/// Step budgets. A computation that exceeds its budget fails with
/// [`AlgebraError::BudgetExceeded`] instead of running unbounded.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Limits {
    /// Reduction steps per Gröbner basis computation.
    pub gb_steps: u64,
    /// Reduction steps per resolution.
    pub resolution_steps: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            gb_steps: 200_000_000,
            resolution_steps: 400_000_000,
        }
    }
}

pub(crate) fn to_vector<F: Field>(f: &Polynomial<F>, frame: &Frame, comp: u32) -> Vector<F::Elem> {
    let terms = f
        .terms()
        .iter()
        .map(|(c, m)| Term {
            coef: c.clone(),
            mon: *m,
            comp,
        })
        .collect();
    Vector::from_terms(f.ring().field(), frame, terms)
}

/// Drops component indices; the ring's order decides the term order.
pub(crate) fn to_poly<F: Field>(ring: &Arc<PolyRing<F>>, v: &Vector<F::Elem>) -> Polynomial<F> {
    ring.from_terms(v.terms.iter().map(|t| (t.coef.clone(), t.mon)).collect())
}

/// A reduced Gröbner basis: monic, interreduced, sorted ascending by leading
/// monomial.
#[derive(Clone, Debug)]
pub struct GroebnerBasis<F: Field> {
    ring: Arc<PolyRing<F>>,
    elements: Vec<Polynomial<F>>,
    vectors: Vec<Vector<F::Elem>>,
    limits: Limits,
}

impl<F: Field> GroebnerBasis<F> {
    fn compute(ring: &Arc<PolyRing<F>>, gens: &[Polynomial<F>], order: MonomialOrder, limits: Limits) -> Result<Self> {
        let ring = ring.with_order(order);
        let frame = Frame::ideal(order);
        let input = gens.iter().map(|g| to_vector(g, &frame, 0)).collect();
        let mut budget = Budget::new("groebner basis", limits.gb_steps);
        let vectors = engine::buchberger(ring.field(), &frame, input, &mut budget)?;
        let elements = vectors.iter().map(|v| to_poly(&ring, v)).collect();
        Ok(GroebnerBasis {
            ring,
            elements,
            vectors,
            limits,
        })
    }

    pub fn order(&self) -> MonomialOrder {
        self.ring.order()
    }

    pub fn ring(&self) -> &Arc<PolyRing<F>> {
        &self.ring
    }

    pub fn elements(&self) -> &[Polynomial<F>] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Minimal generators of the leading-term ideal.
    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.vectors.iter().map(|v| v.lead().mon).collect()
    }

    pub(crate) fn vectors(&self) -> &[Vector<F::Elem>] {
        &self.vectors
    }

    pub fn is_unit(&self) -> bool {
        self.vectors.iter().any(|v| v.lead().mon.is_one())
    }

    /// Remainder of `f` on division by the basis. No term of the result is
    /// divisible by a leading monomial of the basis.
    pub fn normal_form(&self, f: &Polynomial<F>) -> Result<Polynomial<F>> {
        if !f.ring().compatible(&self.ring) {
            return Err(AlgebraError::RingMismatch);
        }
        let frame = Frame::ideal(self.order());
        let v = to_vector(f, &frame, 0);
        let reds = Reducers::new(self.vectors.iter().collect());
        let mut budget = Budget::new("normal form", self.limits.gb_steps);
        let r = engine::reduce(self.ring.field(), &frame, v, &reds, true, &mut budget)?;
        Ok(to_poly(f.ring(), &r))
    }

    /// Buchberger's criterion, checked pair by pair.
    pub fn satisfies_buchberger(&self) -> Result<bool> {
        let frame = Frame::ideal(self.order());
        let mut budget = Budget::new("groebner check", self.limits.gb_steps);
        engine::is_groebner(self.ring.field(), &frame, &self.vectors, &mut budget)
    }

    /// No leading monomial divides a term of another element, and every
    /// element is monic.
    pub fn is_reduced(&self) -> bool {
        let field = self.ring.field();
        self.vectors.iter().enumerate().all(|(i, v)| {
            field.is_one(&v.lead().coef)
                && self.vectors.iter().enumerate().all(|(j, w)| {
                    i == j || !v.terms.iter().any(|t| w.lead().mon.divides(&t.mon))
                })
        })
    }
}

struct IdealCache<F: Field> {
    gbs: Mutex<Vec<(MonomialOrder, Arc<GroebnerBasis<F>>)>>,
    numerator: OnceLock<Vec<i64>>,
    saturation: OnceLock<Ideal<F>>,
    saturated: OnceLock<()>,
    betti: OnceLock<crate::resolution::BettiTable>,
}

impl<F: Field> Default for IdealCache<F> {
    fn default() -> Self {
        IdealCache {
            gbs: Mutex::new(Vec::new()),
            numerator: OnceLock::new(),
            saturation: OnceLock::new(),
            saturated: OnceLock::new(),
            betti: OnceLock::new(),
        }
    }
}

/// A homogeneous ideal of `S = k[x_0..x_r]` given by generators. Clones
/// share their caches, so a Gröbner basis or saturation computed through one
/// handle is visible through all of them.
#[derive(Clone)]
pub struct Ideal<F: Field> {
    ring: Arc<PolyRing<F>>,
    gens: Vec<Polynomial<F>>,
    limits: Limits,
    cache: Arc<IdealCache<F>>,
}

impl<F: Field> Ideal<F> {
    /// Zero generators are dropped; every other generator must be
    /// homogeneous and live in `ring`.
    pub fn new(ring: &Arc<PolyRing<F>>, gens: Vec<Polynomial<F>>) -> Result<Self> {
        let ring = if ring.order() == MonomialOrder::Grevlex {
            ring.clone()
        } else {
            ring.with_order(MonomialOrder::Grevlex)
        };
        let mut out = Vec::with_capacity(gens.len());
        for g in gens {
            if g.is_zero() {
                continue;
            }
            if !g.is_homogeneous() {
                return Err(AlgebraError::NotHomogeneous(g.to_string()));
            }
            out.push(g.in_ring(&ring)?);
        }
        Ok(Ideal {
            ring,
            gens: out,
            limits: Limits::default(),
            cache: Arc::new(IdealCache::default()),
        })
    }

    /// Parses each generator with the polynomial grammar.
    pub fn parse(ring: &Arc<PolyRing<F>>, gens: &[&str]) -> Result<Self> {
        let polys = gens.iter().map(|s| ring.parse(s)).collect::<Result<Vec<_>>>()?;
        Ideal::new(ring, polys)
    }

    pub fn unit(ring: &Arc<PolyRing<F>>) -> Self {
        Ideal::new(ring, vec![ring.one()]).expect("constants are homogeneous")
    }

    /// The irrelevant ideal `(x_0, ..., x_r)`.
    pub fn maximal(ring: &Arc<PolyRing<F>>) -> Self {
        Ideal::new(ring, (0..ring.nvars()).map(|i| ring.var(i)).collect()).expect("linear")
    }

    /// Same generators and limits, empty caches.
    pub(crate) fn derived(&self, gens: Vec<Polynomial<F>>) -> Result<Self> {
        Ok(Ideal::new(&self.ring, gens)?.with_limits(self.limits))
    }

    pub fn with_limits(mut self, limits: Limits) -> Self {
        self.limits = limits;
        self
    }

    pub fn limits(&self) -> Limits {
        self.limits
    }

    pub fn ring(&self) -> &Arc<PolyRing<F>> {
        &self.ring
    }

    pub fn nvars(&self) -> usize {
        self.ring.nvars()
    }

    pub fn generators(&self) -> &[Polynomial<F>] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn max_generator_degree(&self) -> Option<u32> {
        self.gens.iter().filter_map(|g| g.total_degree()).max()
    }

    pub fn groebner_basis(&self, order: MonomialOrder) -> Result<Arc<GroebnerBasis<F>>> {
        if let Some((_, gb)) = self
            .cache
            .gbs
            .lock()
            .expect("gb cache poisoned")
            .iter()
            .find(|(o, _)| *o == order)
        {
            return Ok(gb.clone());
        }
        let gb = Arc::new(GroebnerBasis::compute(&self.ring, &self.gens, order, self.limits)?);
        let mut cache = self.cache.gbs.lock().expect("gb cache poisoned");
        if let Some((_, existing)) = cache.iter().find(|(o, _)| *o == order) {
            return Ok(existing.clone());
        }
        cache.push((order, gb.clone()));
        Ok(gb)
    }

    /// Grevlex basis, the one every other query uses.
    pub fn gb(&self) -> Result<Arc<GroebnerBasis<F>>> {
        self.groebner_basis(MonomialOrder::Grevlex)
    }

    pub fn normal_form(&self, f: &Polynomial<F>) -> Result<Polynomial<F>> {
        self.gb()?.normal_form(f)
    }

    /// Ideal membership.
    pub fn contains(&self, f: &Polynomial<F>) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }

    /// Whether every generator of `other` lies in `self`.
    pub fn contains_ideal(&self, other: &Ideal<F>) -> Result<bool> {
        let gb = self.gb()?;
        for g in other.generators() {
            if !gb.normal_form(g)?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn same_ideal(&self, other: &Ideal<F>) -> Result<bool> {
        Ok(self.contains_ideal(other)? && other.contains_ideal(self)?)
    }

    pub fn is_unit(&self) -> Result<bool> {
        Ok(self.gb()?.is_unit())
    }

    pub fn leading_monomials(&self) -> Result<Vec<Monomial>> {
        Ok(self.gb()?.leading_monomials())
    }

    /// `dim_k I_t`, counted from standard monomials of the leading-term
    /// ideal.
    pub fn graded_dim(&self, t: u32) -> Result<u64> {
        let lts = self.leading_monomials()?;
        let n = self.nvars();
        Ok(monomial_count(n, t as i64) - hilbert::standard_monomial_count(&lts, n, t))
    }

    /// `dim_k (S/I)_t`.
    pub fn quotient_dim(&self, t: u32) -> Result<u64> {
        let lts = self.leading_monomials()?;
        Ok(hilbert::standard_monomial_count(&lts, self.nvars(), t))
    }

    /// Numerator of the Hilbert series of `S/I` over `(1 - s)^(r+1)`.
    pub fn hilbert_numerator(&self) -> Result<Vec<i64>> {
        if let Some(n) = self.cache.numerator.get() {
            return Ok(n.clone());
        }
        let n = hilbert::hilbert_numerator(&self.leading_monomials()?);
        let _ = self.cache.numerator.set(n.clone());
        Ok(n)
    }

    pub fn hilbert_data(&self, t_max: u32) -> Result<HilbertData> {
        Ok(HilbertData::from_numerator(
            self.hilbert_numerator()?,
            self.nvars(),
            t_max,
        ))
    }

    /// Projective dimension of `V(I)`; `-1` for the empty scheme.
    pub fn dimension(&self) -> Result<i64> {
        Ok(self.hilbert_data(0)?.dimension)
    }

    /// `r - dimension`; the empty scheme has codimension `r + 1`.
    pub fn codimension(&self) -> Result<i64> {
        Ok(self.ring.r() as i64 - self.dimension()?)
    }

    pub(crate) fn cached_saturation(&self) -> Option<Ideal<F>> {
        if self.cache.saturated.get().is_some() {
            return Some(self.clone());
        }
        self.cache.saturation.get().cloned()
    }

    pub(crate) fn store_saturation(&self, sat: &Ideal<F>) {
        // A self-reference would keep the cache alive forever.
        if Arc::ptr_eq(&self.cache, &sat.cache) {
            let _ = self.cache.saturated.set(());
        } else {
            let _ = self.cache.saturation.set(sat.clone());
        }
    }

    pub(crate) fn cached_betti(&self) -> Option<crate::resolution::BettiTable> {
        self.cache.betti.get().cloned()
    }

    pub(crate) fn store_betti(&self, b: &crate::resolution::BettiTable) {
        let _ = self.cache.betti.set(b.clone());
    }
}

impl<F: Field> fmt::Display for Ideal<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}

impl<F: Field> fmt::Debug for Ideal<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ideal{self}")
    }
}
