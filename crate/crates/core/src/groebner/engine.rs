//! Buchberger's algorithm over free modules `S^k`, with Gebauer–Möller pair
//! pruning and degree-by-degree pair selection. Ideals are the `k = 1` case.

use std::cmp::Ordering;

use crate::error::{AlgebraError, Result};
use crate::field::Field;
use crate::monomial::{Monomial, MonomialOrder, MAX_VARS};

/// Step counter shared by a computation and everything it calls.
#[derive(Clone, Debug)]
pub struct Budget {
    stage: &'static str,
    limit: u64,
    used: u64,
}

impl Budget {
    pub fn new(stage: &'static str, limit: u64) -> Self {
        Budget {
            stage,
            limit,
            used: 0,
        }
    }

    #[inline]
    pub fn charge(&mut self, n: u64) -> Result<()> {
        self.used += n;
        if self.used > self.limit {
            Err(AlgebraError::BudgetExceeded {
                stage: self.stage,
                limit: self.limit,
            })
        } else {
            Ok(())
        }
    }

    pub fn used(&self) -> u64 {
        self.used
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term<E> {
    pub coef: E,
    pub mon: Monomial,
    pub comp: u32,
}

/// How terms of different components compare.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Position {
    /// Monomial first, then component (lower index is larger).
    TermOverPosition,
    /// Component first (lower index is larger), then monomial.
    PositionOverTerm,
}

/// Order induced on a free module `F_k` by the map to `F_{k-1}`: the term
/// `u e_a` is compared through `u * tms[a]`, ties broken by `ranks` (a lower
/// rank is larger).
#[derive(Clone, Debug)]
pub struct SchreyerOrder {
    pub tms: Vec<Monomial>,
    pub ranks: Vec<u32>,
}

/// Monomial order, module order, and grading for one computation.
#[derive(Clone, Debug)]
pub struct Frame {
    pub order: MonomialOrder,
    pub position: Position,
    /// Components below this index beat every term of a component at or
    /// above it. Zero disables the split.
    pub elim_split: u32,
    /// Degree shift of each component; missing entries are zero.
    pub shifts: Vec<i64>,
    /// Variable weights of the grading the inputs are homogeneous for.
    pub weights: [u32; MAX_VARS],
    standard_weights: bool,
    pub schreyer: Option<std::sync::Arc<SchreyerOrder>>,
}

impl Frame {
    pub fn ideal(order: MonomialOrder) -> Self {
        Frame {
            order,
            position: Position::TermOverPosition,
            elim_split: 0,
            shifts: Vec::new(),
            weights: [1; MAX_VARS],
            standard_weights: true,
            schreyer: None,
        }
    }

    pub fn schreyer(order: MonomialOrder, induced: SchreyerOrder, shifts: Vec<i64>) -> Self {
        let mut f = Frame::module(order, shifts, 0);
        f.schreyer = Some(std::sync::Arc::new(induced));
        f
    }

    pub fn with_weights(mut self, weights: &[u32]) -> Self {
        let mut w = [1u32; MAX_VARS];
        w[..weights.len()].copy_from_slice(weights);
        self.standard_weights = w.iter().all(|&x| x == 1);
        self.weights = w;
        self
    }

    pub fn module(order: MonomialOrder, shifts: Vec<i64>, elim_split: u32) -> Self {
        Frame {
            order,
            position: Position::TermOverPosition,
            elim_split,
            shifts,
            weights: [1; MAX_VARS],
            standard_weights: true,
            schreyer: None,
        }
    }

    #[inline]
    pub fn cmp(&self, am: &Monomial, ac: u32, bm: &Monomial, bc: u32) -> Ordering {
        if let Some(s) = &self.schreyer {
            let (ac, bc) = (ac as usize, bc as usize);
            return self
                .order
                .cmp(&am.mul(&s.tms[ac]), &bm.mul(&s.tms[bc]))
                .then_with(|| s.ranks[bc].cmp(&s.ranks[ac]));
        }
        if self.elim_split > 0 {
            let a_top = ac < self.elim_split;
            let b_top = bc < self.elim_split;
            if a_top != b_top {
                return if a_top {
                    Ordering::Greater
                } else {
                    Ordering::Less
                };
            }
        }
        match self.position {
            Position::TermOverPosition => self
                .order
                .cmp(am, bm)
                .then_with(|| bc.cmp(&ac)),
            Position::PositionOverTerm => bc.cmp(&ac).then_with(|| self.order.cmp(am, bm)),
        }
    }

    #[inline]
    pub fn cmp_terms<E>(&self, a: &Term<E>, b: &Term<E>) -> Ordering {
        self.cmp(&a.mon, a.comp, &b.mon, b.comp)
    }

    #[inline]
    pub fn degree(&self, mon: &Monomial, comp: u32) -> i64 {
        let d = if self.standard_weights {
            mon.degree()
        } else {
            mon.weighted_degree(&self.weights)
        } as i64;
        d + self.shifts.get(comp as usize).copied().unwrap_or(0)
    }
}

/// A module element: terms sorted strictly descending in the frame's order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Vector<E> {
    pub terms: Vec<Term<E>>,
}

impl<E: Clone> Vector<E> {
    pub fn zero() -> Self {
        Vector { terms: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> &Term<E> {
        &self.terms[0]
    }

    /// Normalizes arbitrary terms: sort, combine, drop zeros.
    pub fn from_terms<F: Field<Elem = E>>(field: &F, frame: &Frame, mut terms: Vec<Term<E>>) -> Self {
        terms.sort_by(|a, b| frame.cmp_terms(b, a));
        let mut out: Vec<Term<E>> = Vec::with_capacity(terms.len());
        for t in terms {
            if let Some(last) = out.last_mut() {
                if last.mon == t.mon && last.comp == t.comp {
                    last.coef = field.add(&last.coef, &t.coef);
                    continue;
                }
                if field.is_zero(&last.coef) {
                    out.pop();
                }
            }
            out.push(t);
        }
        if out.last().is_some_and(|t| field.is_zero(&t.coef)) {
            out.pop();
        }
        Vector { terms: out }
    }

    pub fn scale<F: Field<Elem = E>>(&self, field: &F, c: &E) -> Self {
        Vector {
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coef: field.mul(&t.coef, c),
                    mon: t.mon,
                    comp: t.comp,
                })
                .collect(),
        }
    }

    pub fn make_monic<F: Field<Elem = E>>(&mut self, field: &F) {
        if let Some(t) = self.terms.first() {
            if !field.is_one(&t.coef) {
                let inv = field.inv(&t.coef).expect("nonzero lead");
                *self = self.scale(field, &inv);
            }
        }
    }

    /// `self + c * m * other`.
    pub fn add_mul<F: Field<Elem = E>>(
        &self,
        field: &F,
        frame: &Frame,
        c: &E,
        m: &Monomial,
        other: &Vector<E>,
    ) -> Vector<E> {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        merge_sub(field, frame, &self.terms, &field.neg(c), m, &other.terms, &mut out);
        Vector { terms: out }
    }

    /// Whether all terms share one degree.
    pub fn is_homogeneous(&self, frame: &Frame) -> bool {
        match self.terms.first() {
            None => true,
            Some(t) => {
                let d = frame.degree(&t.mon, t.comp);
                self.terms.iter().all(|s| frame.degree(&s.mon, s.comp) == d)
            }
        }
    }
}

/// `out = a - c * m * b`, both inputs sorted descending.
fn merge_sub<F: Field>(
    field: &F,
    frame: &Frame,
    a: &[Term<F::Elem>],
    c: &F::Elem,
    m: &Monomial,
    b: &[Term<F::Elem>],
    out: &mut Vec<Term<F::Elem>>,
) {
    let (mut i, mut j) = (0, 0);
    let mut bm = b.first().map(|t| t.mon.mul(m));
    while i < a.len() && j < b.len() {
        let bmon = bm.unwrap();
        match frame.cmp(&a[i].mon, a[i].comp, &bmon, b[j].comp) {
            Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Less => {
                out.push(Term {
                    coef: field.neg(&field.mul(c, &b[j].coef)),
                    mon: bmon,
                    comp: b[j].comp,
                });
                j += 1;
                bm = b.get(j).map(|t| t.mon.mul(m));
            }
            Ordering::Equal => {
                let v = field.sub_mul(&a[i].coef, c, &b[j].coef);
                if !field.is_zero(&v) {
                    out.push(Term {
                        coef: v,
                        mon: a[i].mon,
                        comp: a[i].comp,
                    });
                }
                i += 1;
                j += 1;
                bm = b.get(j).map(|t| t.mon.mul(m));
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    for t in &b[j..] {
        out.push(Term {
            coef: field.neg(&field.mul(c, &t.coef)),
            mon: t.mon.mul(m),
            comp: t.comp,
        });
    }
}

/// Two bits per variable: exponent >= 1 and exponent >= 2. A divisor's mask
/// must be a subset of the dividend's.
#[inline]
pub fn divmask(m: &Monomial) -> u32 {
    let mut mask = 0u32;
    for i in 0..MAX_VARS {
        let e = m.exp(i);
        if e >= 1 {
            mask |= 1 << i;
        }
        if e >= 2 {
            mask |= 1 << (i + 16);
        }
    }
    mask
}

/// A set of monic reducers with cached lead data.
pub struct Reducers<'a, E> {
    pub elems: Vec<&'a Vector<E>>,
    masks: Vec<u32>,
}

impl<'a, E: Clone> Reducers<'a, E> {
    pub fn new(elems: Vec<&'a Vector<E>>) -> Self {
        let masks = elems.iter().map(|v| divmask(&v.lead().mon)).collect();
        Reducers { elems, masks }
    }

    #[inline]
    pub fn find(&self, mon: &Monomial, comp: u32) -> Option<usize> {
        let mask = divmask(mon);
        (0..self.elems.len()).find(|&k| {
            self.masks[k] & !mask == 0 && {
                let l = self.elems[k].lead();
                l.comp == comp && l.mon.divides(mon)
            }
        })
    }
}

/// Reduces `f` modulo the reducers. With `full`, every term is reduced;
/// otherwise only until the leading term is irreducible. The result is not
/// normalized to be monic.
pub fn reduce<F: Field>(
    field: &F,
    frame: &Frame,
    f: Vector<F::Elem>,
    reducers: &Reducers<'_, F::Elem>,
    full: bool,
    budget: &mut Budget,
) -> Result<Vector<F::Elem>> {
    let mut cur = f.terms;
    let mut next: Vec<Term<F::Elem>> = Vec::new();
    let mut pos = 0;
    while pos < cur.len() {
        let t = &cur[pos];
        match reducers.find(&t.mon, t.comp) {
            None => {
                if !full {
                    break;
                }
                pos += 1;
            }
            Some(k) => {
                budget.charge(1)?;
                let g = reducers.elems[k];
                let lead = g.lead();
                let c = field.div(&t.coef, &lead.coef).expect("nonzero lead");
                let m = t.mon.div(&lead.mon);
                next.clear();
                next.extend_from_slice(&cur[..pos]);
                merge_sub(field, frame, &cur[pos + 1..], &c, &m, &g.terms[1..], &mut next);
                std::mem::swap(&mut cur, &mut next);
            }
        }
    }
    Ok(Vector { terms: cur })
}

/// Top-reduces `f` to zero and returns the quotient terms
/// `(coefficient, multiplier, reducer index)`. Fails if some leading term has
/// no reducer, i.e. `f` is not in the submodule.
pub fn divide_to_zero<F: Field>(
    field: &F,
    frame: &Frame,
    f: Vector<F::Elem>,
    reducers: &Reducers<'_, F::Elem>,
    budget: &mut Budget,
) -> Result<Vec<(F::Elem, Monomial, usize)>> {
    let mut cur = f.terms;
    let mut next: Vec<Term<F::Elem>> = Vec::new();
    let mut quotients = Vec::new();
    while let Some(t) = cur.first() {
        let k = reducers.find(&t.mon, t.comp).ok_or_else(|| {
            AlgebraError::ContractViolation("syzygy candidate does not reduce to zero".into())
        })?;
        budget.charge(1)?;
        let g = reducers.elems[k];
        let lead = g.lead();
        let c = field.div(&t.coef, &lead.coef).expect("nonzero lead");
        let m = t.mon.div(&lead.mon);
        next.clear();
        merge_sub(field, frame, &cur[1..], &c, &m, &g.terms[1..], &mut next);
        std::mem::swap(&mut cur, &mut next);
        quotients.push((c, m, k));
    }
    Ok(quotients)
}

/// `m * v`; multiplying by a monomial preserves the term order.
pub fn mul_monomial<E: Clone>(v: &Vector<E>, m: &Monomial) -> Vector<E> {
    Vector {
        terms: v
            .terms
            .iter()
            .map(|t| Term {
                coef: t.coef.clone(),
                mon: t.mon.mul(m),
                comp: t.comp,
            })
            .collect(),
    }
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    comp: u32,
    deg: i64,
}

/// S-vector of two monic elements with leads in the same component.
fn s_vector<F: Field>(field: &F, frame: &Frame, a: &Vector<F::Elem>, b: &Vector<F::Elem>, lcm: &Monomial) -> Vector<F::Elem> {
    let ma = lcm.div(&a.lead().mon);
    let mb = lcm.div(&b.lead().mon);
    let a_tail: Vec<Term<F::Elem>> = a.terms[1..]
        .iter()
        .map(|t| Term {
            coef: t.coef.clone(),
            mon: t.mon.mul(&ma),
            comp: t.comp,
        })
        .collect();
    let mut out = Vec::with_capacity(a.terms.len() + b.terms.len());
    merge_sub(field, frame, &a_tail, &field.one(), &mb, &b.terms[1..], &mut out);
    Vector { terms: out }
}

struct State<'f, F: Field> {
    frame: &'f Frame,
    basis: Vec<Vector<F::Elem>>,
    active: Vec<bool>,
    pairs: Vec<Pair>,
    ideal_case: bool,
}

impl<'f, F: Field> State<'f, F> {
    fn lead(&self, i: usize) -> &Term<F::Elem> {
        self.basis[i].lead()
    }

    /// Gebauer–Möller update for a new monic, reduced element.
    fn insert(&mut self, h: Vector<F::Elem>) {
        let k = self.basis.len();
        let hl = h.lead().clone();
        self.basis.push(h);
        self.active.push(true);

        struct Cand {
            g: usize,
            lcm: Monomial,
            coprime: bool,
        }
        let mut cands: Vec<Cand> = (0..k)
            .filter(|&g| self.active[g] && self.lead(g).comp == hl.comp)
            .map(|g| {
                let gl = &self.lead(g).mon;
                Cand {
                    g,
                    lcm: gl.lcm(&hl.mon),
                    coprime: self.ideal_case && gl.is_coprime(&hl.mon),
                }
            })
            .collect();

        // Chain criterion among the new pairs; one representative per lcm.
        let mut kept: Vec<Cand> = Vec::new();
        while let Some(c) = cands.pop() {
            let dominated = !c.coprime
                && cands
                    .iter()
                    .chain(kept.iter())
                    .any(|o| o.lcm.divides(&c.lcm));
            if !dominated {
                kept.push(c);
            }
        }
        // Old pairs made redundant by h.
        let frame = self.frame;
        let basis = &self.basis;
        self.pairs.retain(|p| {
            if p.comp != hl.comp || !hl.mon.divides(&p.lcm) {
                return true;
            }
            let li = basis[p.i].lead().mon.lcm(&hl.mon);
            let lj = basis[p.j].lead().mon.lcm(&hl.mon);
            li == p.lcm || lj == p.lcm
        });
        for c in kept.into_iter().filter(|c| !c.coprime) {
            let deg = frame.degree(&c.lcm, hl.comp);
            self.pairs.push(Pair {
                i: c.g,
                j: k,
                lcm: c.lcm,
                comp: hl.comp,
                deg,
            });
        }
        for g in 0..k {
            if self.active[g] {
                let gl = self.basis[g].lead();
                if gl.comp == hl.comp && hl.mon.divides(&gl.mon) {
                    self.active[g] = false;
                }
            }
        }
    }

    fn reducers(&self) -> Reducers<'_, F::Elem> {
        Reducers::new(
            self.basis
                .iter()
                .zip(&self.active)
                .filter(|(_, &a)| a)
                .map(|(v, _)| v)
                .collect(),
        )
    }
}

/// Computes the reduced Gröbner basis (monic, interreduced, sorted ascending
/// by leading term) of the submodule generated by `input`. Every input vector
/// must be homogeneous for the frame's grading.
pub fn buchberger<F: Field>(
    field: &F,
    frame: &Frame,
    input: Vec<Vector<F::Elem>>,
    budget: &mut Budget,
) -> Result<Vec<Vector<F::Elem>>> {
    let mut pending: Vec<(i64, Vector<F::Elem>)> = Vec::new();
    let mut max_comp = 0;
    for v in input {
        if v.is_zero() {
            continue;
        }
        if !v.is_homogeneous(frame) {
            return Err(AlgebraError::NotHomogeneous(
                "Gröbner input must be homogeneous".into(),
            ));
        }
        max_comp = max_comp.max(v.terms.iter().map(|t| t.comp).max().unwrap());
        let l = v.lead();
        pending.push((frame.degree(&l.mon, l.comp), v));
    }
    let mut st: State<'_, F> = State {
        frame,
        basis: Vec::new(),
        active: Vec::new(),
        pairs: Vec::new(),
        ideal_case: max_comp == 0,
    };
    // Highest degree last so the next batch pops off the end.
    pending.sort_by(|a, b| b.0.cmp(&a.0));

    loop {
        let pair_deg = st.pairs.iter().map(|p| p.deg).min();
        let in_deg = pending.last().map(|p| p.0);
        let deg = match (pair_deg, in_deg) {
            (None, None) => break,
            (Some(a), None) | (None, Some(a)) => a,
            (Some(a), Some(b)) => a.min(b),
        };
        let mut batch: Vec<Vector<F::Elem>> = Vec::new();
        while pending.last().is_some_and(|p| p.0 == deg) {
            batch.push(pending.pop().unwrap().1);
        }
        let mut selected: Vec<Pair> = Vec::new();
        st.pairs.retain(|p| {
            if p.deg == deg {
                selected.push(p.clone());
                false
            } else {
                true
            }
        });
        selected.sort_by(|a, b| {
            frame
                .cmp(&a.lcm, a.comp, &b.lcm, b.comp)
                .then(a.i.cmp(&b.i))
                .then(a.j.cmp(&b.j))
        });
        for p in &selected {
            let s = s_vector(field, frame, &st.basis[p.i], &st.basis[p.j], &p.lcm);
            batch.push(s);
        }
        for cand in batch {
            budget.charge(1)?;
            let r = {
                let reds = st.reducers();
                reduce(field, frame, cand, &reds, false, budget)?
            };
            if r.is_zero() {
                continue;
            }
            let mut r = {
                let reds = st.reducers();
                reduce(field, frame, r, &reds, true, budget)?
            };
            r.make_monic(field);
            st.insert(r);
        }
    }

    interreduce(field, frame, st.basis, &st.active, budget)
}

/// Keeps the minimal leads, tail-reduces, normalizes, sorts ascending.
pub fn interreduce<F: Field>(
    field: &F,
    frame: &Frame,
    basis: Vec<Vector<F::Elem>>,
    active: &[bool],
    budget: &mut Budget,
) -> Result<Vec<Vector<F::Elem>>> {
    let cands: Vec<Vector<F::Elem>> = basis
        .into_iter()
        .zip(active)
        .filter(|(_, &a)| a)
        .map(|(v, _)| v)
        .collect();
    let mut minimal: Vec<Vector<F::Elem>> = Vec::new();
    for (i, v) in cands.iter().enumerate() {
        let l = v.lead();
        let redundant = cands.iter().enumerate().any(|(j, w)| {
            let wl = w.lead();
            j != i && wl.comp == l.comp && wl.mon.divides(&l.mon) && (wl.mon != l.mon || j < i)
        });
        if !redundant {
            minimal.push(v.clone());
        }
    }
    let mut out = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<&Vector<F::Elem>> = minimal
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, v)| v)
            .collect();
        let reds = Reducers::new(others);
        let v = &minimal[i];
        let head = v.terms[0].clone();
        let tail = Vector {
            terms: v.terms[1..].to_vec(),
        };
        let tail = reduce(field, frame, tail, &reds, true, budget)?;
        let mut terms = Vec::with_capacity(tail.terms.len() + 1);
        terms.push(head);
        terms.extend(tail.terms);
        let mut w = Vector { terms };
        w.make_monic(field);
        out.push(w);
    }
    out.sort_by(|a, b| frame.cmp_terms(a.lead(), b.lead()));
    Ok(out)
}

/// Checks Buchberger's criterion: every S-vector reduces to zero.
pub fn is_groebner<F: Field>(
    field: &F,
    frame: &Frame,
    basis: &[Vector<F::Elem>],
    budget: &mut Budget,
) -> Result<bool> {
    let reds = Reducers::new(basis.iter().collect());
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            let (a, b) = (basis[i].lead(), basis[j].lead());
            if a.comp != b.comp {
                continue;
            }
            let lcm = a.mon.lcm(&b.mon);
            let mut ai = basis[i].clone();
            ai.make_monic(field);
            let mut bj = basis[j].clone();
            bj.make_monic(field);
            let s = s_vector(field, frame, &ai, &bj, &lcm);
            if !reduce(field, frame, s, &reds, false, budget)?.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
