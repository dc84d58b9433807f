//! Ideal arithmetic: powers, colons, intersections, saturation, saturation
//! degree, symbolic powers, and the Jacobian smoothness test.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{AlgebraError, Result};
use crate::field::{CoefficientField, Field};
use crate::groebner::engine::{self, Budget, Frame, Term, Vector};
use crate::groebner::syzygy::kernel;
use crate::groebner::Ideal;
use crate::monomial::{Monomial, MonomialOrder, MAX_VARS};
use crate::poly::Polynomial;

/// `I^a`, generated by all `a`-fold products of generators (made monic and
/// deduplicated).
pub fn ideal_power<F: Field>(i: &Ideal<F>, a: u32) -> Result<Ideal<F>> {
    if a == 0 {
        return Err(AlgebraError::InvalidInput("power must be at least 1".into()));
    }
    if a == 1 {
        return Ok(i.clone());
    }
    let gens: Vec<Polynomial<F>> = i.generators().iter().map(|g| g.monic()).collect();
    let mut layer: Vec<(usize, Polynomial<F>)> = gens.iter().cloned().enumerate().collect();
    for _ in 1..a {
        let mut next = Vec::new();
        for (k, p) in &layer {
            for (j, g) in gens.iter().enumerate().skip(*k) {
                next.push((j, p * g));
            }
        }
        layer = next;
    }
    let mut out: Vec<Polynomial<F>> = Vec::new();
    for (_, p) in layer {
        let p = p.monic();
        if !p.is_zero() && !out.contains(&p) {
            out.push(p);
        }
    }
    i.derived(out)
}

/// `I + K`.
pub fn ideal_sum<F: Field>(i: &Ideal<F>, k: &Ideal<F>) -> Result<Ideal<F>> {
    if !i.ring().compatible(k.ring()) {
        return Err(AlgebraError::RingMismatch);
    }
    let mut gens = i.generators().to_vec();
    gens.extend(k.generators().iter().cloned());
    i.derived(gens)
}

/// `I : f = {g : g f in I}`, from the syzygies of `(f, g_1, ..., g_n)`.
pub fn colon<F: Field>(i: &Ideal<F>, f: &Polynomial<F>) -> Result<Ideal<F>> {
    if f.is_zero() {
        return Err(AlgebraError::InvalidInput("colon by the zero polynomial".into()));
    }
    if !f.is_homogeneous() {
        return Err(AlgebraError::NotHomogeneous(f.to_string()));
    }
    let f = f.in_ring(i.ring())?;
    if f.is_constant() || i.is_zero() {
        return if f.is_constant() {
            Ok(i.clone())
        } else {
            i.derived(Vec::new())
        };
    }
    let ring = i.ring();
    let mut columns = vec![vec![f.clone()]];
    let mut degrees = vec![f.form_degree().unwrap() as i64];
    for g in i.generators() {
        columns.push(vec![g.clone()]);
        degrees.push(g.form_degree().unwrap() as i64);
    }
    let mut budget = Budget::new("colon", i.limits().gb_steps);
    let syz = kernel(ring, &columns, &[0], &degrees, &mut budget)?;
    let gens = syz.into_iter().map(|s| s.entries[0].clone()).collect();
    i.derived(gens)
}

/// `I : K = {g : g K subset I}`, the intersection of `I : g` over the
/// generators of `K`.
pub fn colon_ideal<F: Field>(i: &Ideal<F>, k: &Ideal<F>) -> Result<Ideal<F>> {
    if k.is_zero() {
        return Err(AlgebraError::InvalidInput("colon by the zero ideal".into()));
    }
    let mut acc: Option<Ideal<F>> = None;
    for g in k.generators() {
        let c = colon(i, g)?;
        acc = Some(match acc {
            None => c,
            Some(a) => intersect(&a, &c)?,
        });
    }
    Ok(acc.expect("nonzero ideal has a generator"))
}

/// `I ∩ K`. Containment is checked first; otherwise eliminates `t` from
/// `t I + (1 - t) K` with `t` of weight zero.
pub fn intersect<F: Field>(i: &Ideal<F>, k: &Ideal<F>) -> Result<Ideal<F>> {
    if !i.ring().compatible(k.ring()) {
        return Err(AlgebraError::RingMismatch);
    }
    if i.is_zero() || k.is_zero() {
        return i.derived(Vec::new());
    }
    if k.contains_ideal(i)? {
        return Ok(i.clone());
    }
    if i.contains_ideal(k)? {
        return Ok(k.clone());
    }
    intersect_by_elimination(i, k)
}

pub fn intersect_by_elimination<F: Field>(i: &Ideal<F>, k: &Ideal<F>) -> Result<Ideal<F>> {
    let ring = i.ring();
    let field = ring.field();
    let n = ring.nvars();
    debug_assert!(n < MAX_VARS);
    let mut weights = vec![1u32; n + 1];
    weights[0] = 0;
    let frame = Frame::ideal(MonomialOrder::BlockElim { split: 1 }).with_weights(&weights);
    let t = Monomial::var(0, 1);
    let mut input = Vec::new();
    for f in i.generators() {
        let terms = f
            .terms()
            .iter()
            .map(|(c, m)| Term {
                coef: c.clone(),
                mon: m.shift_vars(1).mul(&t),
                comp: 0,
            })
            .collect();
        input.push(Vector::from_terms(field, &frame, terms));
    }
    for g in k.generators() {
        let mut terms = Vec::with_capacity(2 * g.len());
        for (c, m) in g.terms() {
            let m = m.shift_vars(1);
            terms.push(Term {
                coef: c.clone(),
                mon: m,
                comp: 0,
            });
            terms.push(Term {
                coef: field.neg(c),
                mon: m.mul(&t),
                comp: 0,
            });
        }
        input.push(Vector::from_terms(field, &frame, terms));
    }
    let mut budget = Budget::new("intersection", i.limits().gb_steps);
    let gb = engine::buchberger(field, &frame, input, &mut budget)?;
    let gens = gb
        .into_iter()
        .filter(|v| v.lead().mon.exp(0) == 0)
        .map(|v| {
            ring.from_terms(
                v.terms
                    .iter()
                    .map(|t| (t.coef.clone(), t.mon.unshift_vars(1)))
                    .collect(),
            )
        })
        .collect();
    i.derived(gens)
}

/// `I ∩ K` from the syzygies of `(f_1, ..., f_n, g_1, ..., g_m)`: a syzygy
/// `(a, b)` gives `sum a_i f_i = -sum b_j g_j` in both ideals.
pub fn intersect_by_syzygies<F: Field>(i: &Ideal<F>, k: &Ideal<F>) -> Result<Ideal<F>> {
    if i.is_zero() || k.is_zero() {
        return i.derived(Vec::new());
    }
    let ring = i.ring();
    let gens: Vec<&Polynomial<F>> = i.generators().iter().chain(k.generators()).collect();
    let columns: Vec<Vec<Polynomial<F>>> = gens.iter().map(|g| vec![(*g).clone()]).collect();
    let degrees: Vec<i64> = gens.iter().map(|g| g.form_degree().unwrap() as i64).collect();
    let mut budget = Budget::new("intersection", i.limits().gb_steps);
    let syz = kernel(ring, &columns, &[0], &degrees, &mut budget)?;
    let n = i.generators().len();
    let out = syz
        .into_iter()
        .map(|s| {
            s.entries[..n]
                .iter()
                .zip(i.generators())
                .fold(ring.zero(), |acc, (a, f)| &acc + &(a * f))
        })
        .filter(|p| !p.is_zero())
        .collect();
    i.derived(out)
}

/// Divides out powers of the last variable from a grevlex basis computed
/// with `x_v` moved last. `cap` bounds the power removed (`None`: all).
fn divide_var<F: Field>(i: &Ideal<F>, v: usize, cap: Option<u32>) -> Result<Ideal<F>> {
    let n = i.nvars();
    let last = n - 1;
    let mut perm: Vec<usize> = (0..n).collect();
    perm.swap(v, last);
    let gb = if v == last {
        i.gb()?
    } else {
        let moved = i.generators().iter().map(|g| g.permute_vars(&perm)).collect();
        i.derived(moved)?.gb()?
    };
    let ring = i.ring();
    let gens = gb
        .elements()
        .iter()
        .map(|g| {
            let k = g.terms().iter().map(|(_, m)| m.exp(last)).min().unwrap_or(0);
            let k = cap.map_or(k, |c| k.min(c));
            let lowered = ring.from_terms(
                g.terms()
                    .iter()
                    .map(|(c, m)| (c.clone(), m.lower_var(last, k)))
                    .collect(),
            );
            lowered.permute_vars(&perm)
        })
        .collect();
    i.derived(gens)
}

/// `I : x_v^∞`.
pub fn saturate_var<F: Field>(i: &Ideal<F>, v: usize) -> Result<Ideal<F>> {
    divide_var(i, v, None)
}

/// `I : x_v`.
pub fn colon_var<F: Field>(i: &Ideal<F>, v: usize) -> Result<Ideal<F>> {
    divide_var(i, v, Some(1))
}

/// Whether `small ⊆ big` have the same Hilbert series, i.e. are equal.
fn equal_given_containment<F: Field>(small: &Ideal<F>, big: &Ideal<F>) -> Result<bool> {
    Ok(small.hilbert_numerator()? == big.hilbert_numerator()?)
}

/// `sat(I) = ∩_v (I : x_v^∞)`. The variable saturations run in parallel.
/// The result is cached on `I`.
pub fn saturate<F: Field>(i: &Ideal<F>) -> Result<Ideal<F>> {
    if let Some(s) = i.cached_saturation() {
        return Ok(s);
    }
    let sat = if i.is_zero() {
        i.clone()
    } else {
        let parts: Vec<Ideal<F>> = (0..i.nvars())
            .into_par_iter()
            .map(|v| saturate_var(i, v))
            .collect::<Result<_>>()?;
        combine_saturations(i, parts)?
    };
    sat.store_saturation(&sat);
    i.store_saturation(&sat);
    Ok(sat)
}

fn combine_saturations<F: Field>(i: &Ideal<F>, parts: Vec<Ideal<F>>) -> Result<Ideal<F>> {
    // sat(I) sits between I and every I : x_v^∞, so one equality settles it.
    for p in &parts {
        if equal_given_containment(i, p)? {
            return Ok(i.clone());
        }
    }
    let mut acc: Option<Ideal<F>> = None;
    for p in parts {
        if p.is_unit()? {
            continue;
        }
        acc = Some(match acc {
            None => p,
            Some(a) => intersect(&a, &p)?,
        });
    }
    Ok(match acc {
        Some(a) => a,
        None => Ideal::unit(i.ring()).with_limits(i.limits()),
    })
}

/// Saturation by iterating `J -> J : m` until it stabilizes, with colons and
/// intersections taken through syzygies. Independent of [`saturate`].
pub fn saturate_by_colon_iteration<F: Field>(i: &Ideal<F>) -> Result<Ideal<F>> {
    let ring = i.ring();
    let mut cur = i.clone();
    loop {
        let mut next: Option<Ideal<F>> = None;
        for v in 0..i.nvars() {
            let c = colon(&cur, &ring.var(v))?;
            next = Some(match next {
                None => c,
                Some(a) => intersect_by_syzygies(&a, &c)?,
            });
        }
        let next = next.expect("ring has variables");
        if equal_given_containment(&cur, &next)? {
            return Ok(cur);
        }
        cur = next;
    }
}

/// Saturation degree of `J` with the graded pieces where `J` and `sat(J)`
/// differ.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SatDegreeResult {
    /// Least `t0` with `J_t = sat(J)_t` for all `t >= t0`; zero when `J` is
    /// saturated.
    pub sat_degree: u32,
    /// Degrees `t` with `J_t` strictly inside `sat(J)_t`.
    pub witness_degrees: Vec<u32>,
    /// `t -> dim sat(J)_t - dim J_t` for `0 <= t < sat_degree`.
    pub gap_dims: BTreeMap<u32, u64>,
}

impl SatDegreeResult {
    pub fn is_saturated(&self) -> bool {
        self.witness_degrees.is_empty()
    }

    pub fn first_witness(&self) -> Option<u32> {
        self.witness_degrees.first().copied()
    }

    pub fn gap(&self, t: u32) -> u64 {
        self.gap_dims.get(&t).copied().unwrap_or(0)
    }
}

/// `N / (1 - s)^k`, failing unless every division is exact.
fn divide_exact(n: &[i64], k: usize) -> Result<Vec<i64>> {
    let mut q: Vec<i64> = n.to_vec();
    for _ in 0..k {
        while q.last() == Some(&0) {
            q.pop();
        }
        if q.is_empty() {
            return Ok(q);
        }
        if q.iter().sum::<i64>() != 0 {
            return Err(AlgebraError::ContractViolation(
                "Hilbert series difference is not a polynomial".into(),
            ));
        }
        let mut run = 0;
        q = q[..q.len() - 1]
            .iter()
            .map(|c| {
                run += c;
                run
            })
            .collect();
    }
    while q.last() == Some(&0) {
        q.pop();
    }
    Ok(q)
}

pub fn sat_degree<F: Field>(j: &Ideal<F>) -> Result<SatDegreeResult> {
    let sat = saturate(j)?;
    sat_degree_with(j, &sat)
}

/// Saturation degree given `sat(J)`. The generating function of the gaps
/// `dim sat(J)_t - dim J_t` is the difference of the two Hilbert series, a
/// polynomial; its degree plus one is the saturation degree.
pub fn sat_degree_with<F: Field>(j: &Ideal<F>, sat: &Ideal<F>) -> Result<SatDegreeResult> {
    let nj = j.hilbert_numerator()?;
    let ns = sat.hilbert_numerator()?;
    let len = nj.len().max(ns.len());
    let diff: Vec<i64> = (0..len)
        .map(|k| nj.get(k).copied().unwrap_or(0) - ns.get(k).copied().unwrap_or(0))
        .collect();
    let gaps = divide_exact(&diff, j.nvars())?;
    if gaps.iter().any(|&g| g < 0) {
        return Err(AlgebraError::ContractViolation(
            "saturation is smaller than the ideal in some degree".into(),
        ));
    }
    let sat_degree = gaps.len() as u32;
    let gap_dims: BTreeMap<u32, u64> = gaps
        .iter()
        .enumerate()
        .map(|(t, &g)| (t as u32, g as u64))
        .collect();
    let witness_degrees = gap_dims
        .iter()
        .filter(|(_, &g)| g > 0)
        .map(|(&t, _)| t)
        .collect();
    Ok(SatDegreeResult {
        sat_degree,
        witness_degrees,
        gap_dims,
    })
}

/// `I^(a) = sat(I^a)`, valid for smooth `V(I)`. Refuses unless the caller
/// has run [`is_smooth`] (`smooth_checked`).
pub fn symbolic_power<F: Field>(i: &Ideal<F>, a: u32, smooth_checked: bool) -> Result<Ideal<F>> {
    if !smooth_checked {
        return Err(AlgebraError::SmoothnessNotChecked);
    }
    saturate(&ideal_power(i, a)?)
}

/// `sat(I^a)` without the smoothness gate. For singular `V(I)` this is not
/// the symbolic power; the caller takes responsibility.
pub fn symbolic_power_unchecked<F: Field>(i: &Ideal<F>, a: u32) -> Result<Ideal<F>> {
    saturate(&ideal_power(i, a)?)
}

pub fn dimension<F: Field>(i: &Ideal<F>) -> Result<i64> {
    i.dimension()
}

pub fn codimension<F: Field>(i: &Ideal<F>) -> Result<i64> {
    i.codimension()
}

/// Evidence behind an [`is_smooth`] verdict.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SmoothnessCertificate {
    pub smooth: bool,
    pub codimension: i64,
    /// Distinct nonzero `c x c` Jacobian minors added to the ideal.
    pub minors: usize,
    /// Projective dimension of the singular locus, `-1` when empty.
    pub singular_locus_dimension: i64,
    /// Degree of the singular locus (zero when empty).
    pub singular_locus_degree: u64,
    /// The Jacobian criterion needs `V(I)` equidimensional; this is assumed,
    /// not checked.
    pub equidimensional_assumed: bool,
    /// Smoothness over a prime field stands in for smoothness over the
    /// complex numbers.
    pub field: CoefficientField,
}

fn determinant<F: Field>(m: &[Vec<Polynomial<F>>]) -> Polynomial<F> {
    let n = m.len();
    if n == 1 {
        return m[0][0].clone();
    }
    let ring = m[0][0].ring();
    let mut acc = ring.zero();
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<Polynomial<F>>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(k, _)| *k != j)
                    .map(|(_, p)| p.clone())
                    .collect()
            })
            .collect();
        let term = &m[0][j] * &determinant(&minor);
        acc = if j % 2 == 0 { &acc + &term } else { &acc - &term };
    }
    acc
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Jacobian criterion: with `c` the codimension, `V(I)` is smooth iff
/// `sat(I) + (c x c minors of the Jacobian)` defines the empty scheme.
pub fn is_smooth<F: Field>(i: &Ideal<F>) -> Result<SmoothnessCertificate> {
    let dim = i.dimension()?;
    if dim < 0 {
        return Err(AlgebraError::InvalidInput(
            "smoothness of the empty scheme is undefined".into(),
        ));
    }
    let sat = saturate(i)?;
    let ring = i.ring();
    let c = ring.r() as i64 - dim;
    let gens = sat.generators();
    let jac: Vec<Vec<Polynomial<F>>> = gens
        .iter()
        .map(|g| (0..ring.nvars()).map(|v| g.derivative(v)).collect())
        .collect();
    let c = c as usize;
    let mut minors: Vec<Polynomial<F>> = Vec::new();
    if c <= gens.len() {
        for rows in subsets(gens.len(), c) {
            for cols in subsets(ring.nvars(), c) {
                let sub: Vec<Vec<Polynomial<F>>> = rows
                    .iter()
                    .map(|&r| cols.iter().map(|&k| jac[r][k].clone()).collect())
                    .collect();
                let d = determinant(&sub).monic();
                if !d.is_zero() && !minors.contains(&d) {
                    minors.push(d);
                }
            }
        }
    }
    let count = minors.len();
    let mut all = gens.to_vec();
    all.extend(minors);
    let k = i.derived(all)?;
    let hd = k.hilbert_data(0)?;
    Ok(SmoothnessCertificate {
        smooth: hd.dimension < 0,
        codimension: c as i64,
        minors: count,
        singular_locus_dimension: hd.dimension,
        singular_locus_degree: hd.degree,
        equidimensional_assumed: true,
        field: ring.field().descriptor(),
    })
}
