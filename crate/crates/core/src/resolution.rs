//! Graded free resolutions: Schreyer frames, minimization, Betti tables and
//! regularity.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{AlgebraError, Result};
use crate::field::Field;
use crate::groebner::engine::{self, Budget, Frame, Reducers, SchreyerOrder, Term, Vector};
use crate::groebner::syzygy::{kernel, GradedVector};
use crate::groebner::{Ideal, Limits};
use crate::ideal_ops::saturate;
use crate::linalg;
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::{PolyRing, Polynomial};

/// A graded free module `⊕ S(-d)`, recorded by its generator degrees.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FreeModule {
    pub generator_degrees: Vec<i64>,
}

impl FreeModule {
    pub fn rank(&self) -> usize {
        self.generator_degrees.len()
    }

    pub fn max_degree(&self) -> Option<i64> {
        self.generator_degrees.iter().copied().max()
    }
}

/// Generators of the kernel of a homogeneous matrix. Column `j` is the image
/// of the `j`-th source generator, of degree `col_degrees[j]`.
pub fn syzygies<F: Field>(
    ring: &Arc<PolyRing<F>>,
    columns: &[Vec<Polynomial<F>>],
    row_degrees: &[i64],
    col_degrees: &[i64],
    limits: Limits,
) -> Result<Vec<GradedVector<F>>> {
    let mut budget = Budget::new("syzygies", limits.gb_steps);
    kernel(ring, columns, row_degrees, col_degrees, &mut budget)
}

/// One differential `F_k -> F_{k-1}` as sparse columns `row -> entry`.
type Columns<F> = Vec<BTreeMap<usize, Polynomial<F>>>;

/// A graded free resolution `... -> F_1 -> F_0 -> I -> 0` of an ideal.
/// `maps[0]` lists the generators of `I` (one-row columns); `maps[k]` is
/// `F_k -> F_{k-1}`.
#[derive(Clone, Debug)]
pub struct Resolution<F: Field> {
    ring: Arc<PolyRing<F>>,
    degrees: Vec<Vec<i64>>,
    maps: Vec<Columns<F>>,
}

impl<F: Field> Resolution<F> {
    pub fn ring(&self) -> &Arc<PolyRing<F>> {
        &self.ring
    }

    /// Number of free modules `F_0 .. F_{len-1}`.
    pub fn len(&self) -> usize {
        self.degrees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.degrees.is_empty()
    }

    pub fn module(&self, k: usize) -> FreeModule {
        FreeModule {
            generator_degrees: self.degrees.get(k).cloned().unwrap_or_default(),
        }
    }

    pub fn modules(&self) -> Vec<FreeModule> {
        (0..self.len()).map(|k| self.module(k)).collect()
    }

    /// Dense matrix of `F_k -> F_{k-1}` (rows indexed by `F_{k-1}`); for
    /// `k = 0` a single row holding the generators.
    pub fn differential(&self, k: usize) -> Vec<Vec<Polynomial<F>>> {
        let nrows = if k == 0 { 1 } else { self.degrees[k - 1].len() };
        let mut m = vec![vec![self.ring.zero(); self.maps[k].len()]; nrows];
        for (j, col) in self.maps[k].iter().enumerate() {
            for (&i, p) in col {
                m[i][j] = p.clone();
            }
        }
        m
    }

    /// Whether `d_{k-1} ∘ d_k = 0` for every `k`.
    pub fn is_complex(&self) -> bool {
        for k in 1..self.len() {
            for col in &self.maps[k] {
                let mut acc: HashMap<usize, Polynomial<F>> = HashMap::new();
                for (&mid, a) in col {
                    for (&row, b) in &self.maps[k - 1][mid] {
                        let e = acc.entry(row).or_insert_with(|| self.ring.zero());
                        *e = &*e + &(a * b);
                    }
                }
                if acc.values().any(|p| !p.is_zero()) {
                    return false;
                }
            }
        }
        true
    }

    /// Whether some differential `d_k`, `k >= 1`, has a nonzero constant
    /// entry.
    pub fn has_unit_entries(&self) -> bool {
        self.maps[1..]
            .iter()
            .any(|cols| cols.iter().any(|c| c.values().any(|p| p.is_constant() && !p.is_zero())))
    }

    /// Graded Betti numbers read off the generator degrees. Exact for a
    /// minimal resolution.
    pub fn betti_of_ranks(&self) -> BettiTable {
        let mut entries = BTreeMap::new();
        for (i, degs) in self.degrees.iter().enumerate() {
            for &j in degs {
                *entries.entry((i, j)).or_insert(0) += 1;
            }
        }
        BettiTable::from_map(entries)
    }

    /// Minimal Betti numbers from any resolution: `dim Tor_i(I, k)_j`,
    /// computed as the homology of the resolution tensored with `k`, i.e.
    /// the ranks of the constant parts of the differentials.
    pub fn betti_by_constant_ranks(&self) -> BettiTable {
        let field = self.ring.field();
        // rank of the constant part of d_k in internal degree j
        let mut ranks: HashMap<(usize, i64), usize> = HashMap::new();
        for k in 1..self.len() {
            let mut by_degree: BTreeMap<i64, (Vec<usize>, Vec<usize>)> = BTreeMap::new();
            for (q, &d) in self.degrees[k].iter().enumerate() {
                by_degree.entry(d).or_default().1.push(q);
            }
            for (p, &d) in self.degrees[k - 1].iter().enumerate() {
                if let Some(e) = by_degree.get_mut(&d) {
                    e.0.push(p);
                }
            }
            for (d, (rows, cols)) in by_degree {
                if rows.is_empty() || cols.is_empty() {
                    continue;
                }
                let index: HashMap<usize, usize> = rows.iter().enumerate().map(|(i, &p)| (p, i)).collect();
                let mut mat = vec![vec![field.zero(); cols.len()]; rows.len()];
                for (c, &q) in cols.iter().enumerate() {
                    for (p, e) in &self.maps[k][q] {
                        if let Some(&r) = index.get(p) {
                            mat[r][c] = e.leading_coefficient().cloned().unwrap_or_else(|| field.zero());
                        }
                    }
                }
                ranks.insert((k, d), linalg::rank(field, mat));
            }
        }
        let mut entries = BTreeMap::new();
        for (i, degs) in self.degrees.iter().enumerate() {
            let mut counts: BTreeMap<i64, usize> = BTreeMap::new();
            for &j in degs {
                *counts.entry(j).or_default() += 1;
            }
            for (j, f) in counts {
                let b = f
                    - ranks.get(&(i, j)).copied().unwrap_or(0)
                    - ranks.get(&(i + 1, j)).copied().unwrap_or(0);
                if b > 0 {
                    entries.insert((i, j), b as u64);
                }
            }
        }
        BettiTable::from_map(entries)
    }
}

/// Free resolution of `I` by iterated Schreyer syzygies on its reduced
/// grevlex Gröbner basis. Usually not minimal.
pub fn schreyer_resolution<F: Field>(i: &Ideal<F>) -> Result<Resolution<F>> {
    if i.is_zero() {
        return Err(AlgebraError::InvalidInput("cannot resolve the zero ideal".into()));
    }
    let ring = i.ring().clone();
    let field = ring.field();
    let gb = i.gb()?;
    let mut budget = Budget::new("resolution", i.limits().resolution_steps);

    // Sorting each level by descending exponent of the next variable keeps
    // that variable out of the following level's leading terms, so the
    // frame stops after at most nvars steps.
    let mut elems: Vec<Vector<F::Elem>> = gb.vectors().to_vec();
    elems.sort_by(|a, b| b.lead().mon.exp(0).cmp(&a.lead().mon.exp(0)));
    let mut tms: Vec<Monomial> = elems.iter().map(|v| v.lead().mon).collect();
    let mut ranks: Vec<u32> = (0..elems.len() as u32).collect();
    let mut degrees: Vec<i64> = tms.iter().map(|m| m.degree() as i64).collect();
    let mut prev_frame = Frame::ideal(MonomialOrder::Grevlex);

    let mut res = Resolution {
        ring: ring.clone(),
        degrees: vec![degrees.clone()],
        maps: vec![to_columns(&ring, &elems)],
    };

    for level in 0.. {
        let frame = Frame::schreyer(
            MonomialOrder::Grevlex,
            SchreyerOrder {
                tms: tms.clone(),
                ranks: ranks.clone(),
            },
            degrees.clone(),
        );
        let reds = Reducers::new(elems.iter().collect());
        let mut next: Vec<Vector<F::Elem>> = Vec::new();
        for t in 0..elems.len() {
            let lt = elems[t].lead();
            let mut cands: Vec<(Monomial, usize)> = (t + 1..elems.len())
                .filter(|&u| elems[u].lead().comp == lt.comp)
                .map(|u| (elems[u].lead().mon.lcm(&lt.mon).div(&lt.mon), u))
                .collect();
            cands.sort_by_key(|c| c.0.degree());
            let mut chosen: Vec<(Monomial, usize)> = Vec::new();
            for c in cands {
                if !chosen.iter().any(|d| d.0.divides(&c.0)) {
                    chosen.push(c);
                }
            }
            for (mu, u) in chosen {
                let lu = elems[u].lead();
                let nu = lt.mon.mul(&mu).div(&lu.mon);
                let s = engine::mul_monomial(&elems[t], &mu).add_mul(
                    field,
                    &prev_frame,
                    &field.neg(&field.one()),
                    &nu,
                    &elems[u],
                );
                let quotients = engine::divide_to_zero(field, &prev_frame, s, &reds, &mut budget)?;
                let mut terms = vec![
                    Term {
                        coef: field.one(),
                        mon: mu,
                        comp: t as u32,
                    },
                    Term {
                        coef: field.neg(&field.one()),
                        mon: nu,
                        comp: u as u32,
                    },
                ];
                terms.extend(quotients.into_iter().map(|(c, m, k)| Term {
                    coef: field.neg(&c),
                    mon: m,
                    comp: k as u32,
                }));
                let sigma = Vector::from_terms(field, &frame, terms);
                let lead = sigma.lead();
                if lead.comp != t as u32 || lead.mon != mu || !field.is_one(&lead.coef) {
                    return Err(AlgebraError::ContractViolation(
                        "Schreyer syzygy has an unexpected leading term".into(),
                    ));
                }
                next.push(sigma);
            }
        }
        if next.is_empty() {
            break;
        }
        let var = level + 1;
        if var < crate::monomial::MAX_VARS {
            next.sort_by(|a, b| b.lead().mon.exp(var).cmp(&a.lead().mon.exp(var)));
        }
        let new_tms: Vec<Monomial> = next
            .iter()
            .map(|v| v.lead().mon.mul(&tms[v.lead().comp as usize]))
            .collect();
        let mut order: Vec<usize> = (0..next.len()).collect();
        order.sort_by_key(|&a| (ranks[next[a].lead().comp as usize], a));
        let mut new_ranks = vec![0u32; next.len()];
        for (pos, &a) in order.iter().enumerate() {
            new_ranks[a] = pos as u32;
        }
        degrees = next
            .iter()
            .map(|v| frame.degree(&v.lead().mon, v.lead().comp))
            .collect();
        res.degrees.push(degrees.clone());
        res.maps.push(to_columns(&ring, &next));
        tms = new_tms;
        ranks = new_ranks;
        elems = next;
        prev_frame = frame;
    }
    Ok(res)
}

fn to_columns<F: Field>(ring: &Arc<PolyRing<F>>, vs: &[Vector<F::Elem>]) -> Columns<F> {
    vs.iter()
        .map(|v| {
            let mut per: BTreeMap<usize, Vec<(F::Elem, Monomial)>> = BTreeMap::new();
            for t in &v.terms {
                per.entry(t.comp as usize).or_default().push((t.coef.clone(), t.mon));
            }
            per.into_iter().map(|(k, ts)| (k, ring.from_terms(ts))).collect()
        })
        .collect()
}

/// Splits off trivial summands `S(-d) -> S(-d)` until no differential has a
/// unit entry. Cancelling the unit `c = d_k[p][q]` replaces `d_k` by its
/// Schur complement, drops row `q` of `d_{k+1}` and column `p` of `d_{k-1}`.
pub fn minimize<F: Field>(res: &Resolution<F>) -> Resolution<F> {
    let field = res.ring.field();
    let mut maps = res.maps.clone();
    let mut alive: Vec<Vec<bool>> = res.degrees.iter().map(|d| vec![true; d.len()]).collect();
    for k in 1..maps.len() {
        let mut q = 0;
        while q < maps[k].len() {
            if !alive[k][q] {
                q += 1;
                continue;
            }
            let unit = maps[k][q]
                .iter()
                .find(|(p, e)| alive[k - 1][**p] && e.is_constant() && !e.is_zero())
                .map(|(p, e)| (*p, e.leading_coefficient().unwrap().clone()));
            let Some((p, c)) = unit else {
                q += 1;
                continue;
            };
            let inv = field.inv(&c).expect("unit");
            let col_q: Vec<(usize, Polynomial<F>)> = maps[k][q]
                .iter()
                .filter(|(r, _)| **r != p && alive[k - 1][**r])
                .map(|(r, e)| (*r, e.clone()))
                .collect();
            for q2 in 0..maps[k].len() {
                if q2 == q || !alive[k][q2] {
                    continue;
                }
                let Some(lambda) = maps[k][q2].get(&p).cloned() else {
                    continue;
                };
                let lambda = lambda.scale(&inv);
                let col = &mut maps[k][q2];
                col.remove(&p);
                for (r, e) in &col_q {
                    let upd = &lambda * e;
                    let cur = col.remove(r).unwrap_or_else(|| res.ring.zero());
                    let v = &cur - &upd;
                    if !v.is_zero() {
                        col.insert(*r, v);
                    }
                }
            }
            alive[k][q] = false;
            alive[k - 1][p] = false;
            // The complement may have put units in columns already passed.
            q = 0;
        }
    }
    // Compact, renumbering rows.
    let mut degrees = Vec::new();
    let mut new_maps = Vec::new();
    let mut prev_index: Vec<Option<usize>> = vec![Some(0)];
    for k in 0..maps.len() {
        let mut index = vec![None; alive[k].len()];
        let mut degs = Vec::new();
        let mut cols = Vec::new();
        for (q, col) in maps[k].iter().enumerate() {
            if !alive[k][q] {
                continue;
            }
            index[q] = Some(degs.len());
            degs.push(res.degrees[k][q]);
            cols.push(
                col.iter()
                    .filter_map(|(r, e)| prev_index[*r].map(|nr| (nr, e.clone())))
                    .collect(),
            );
        }
        if degs.is_empty() {
            break;
        }
        degrees.push(degs);
        new_maps.push(cols);
        prev_index = index;
    }
    Resolution {
        ring: res.ring.clone(),
        degrees,
        maps: new_maps,
    }
}

/// Minimal graded free resolution of `I`.
pub fn minimal_resolution<F: Field>(i: &Ideal<F>) -> Result<Resolution<F>> {
    Ok(minimize(&schreyer_resolution(i)?))
}

/// One nonzero graded Betti number.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiEntry {
    pub i: usize,
    pub j: i64,
    pub beta: u64,
}

/// Graded Betti numbers `β_{i,j}` of a module, stored sparsely. For an
/// ideal `I`, `β_{0,j}` counts minimal generators of degree `j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct BettiTable {
    entries: Vec<BettiEntry>,
}

impl BettiTable {
    pub fn from_map(map: BTreeMap<(usize, i64), u64>) -> Self {
        BettiTable {
            entries: map
                .into_iter()
                .filter(|(_, b)| *b > 0)
                .map(|((i, j), beta)| BettiEntry { i, j, beta })
                .collect(),
        }
    }

    pub fn entries(&self) -> &[BettiEntry] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: i64) -> u64 {
        self.entries
            .iter()
            .find(|e| e.i == i && e.j == j)
            .map_or(0, |e| e.beta)
    }

    /// Largest homological index with a nonzero entry.
    pub fn length(&self) -> usize {
        self.entries.iter().map(|e| e.i).max().unwrap_or(0)
    }

    pub fn total(&self, i: usize) -> u64 {
        self.entries.iter().filter(|e| e.i == i).map(|e| e.beta).sum()
    }

    /// Generator degrees of the `i`-th module, with multiplicity.
    pub fn module(&self, i: usize) -> FreeModule {
        let mut generator_degrees = Vec::new();
        for e in self.entries.iter().filter(|e| e.i == i) {
            generator_degrees.extend(std::iter::repeat_n(e.j, e.beta as usize));
        }
        FreeModule { generator_degrees }
    }

    /// `max { j - i : β_{i,j} ≠ 0 }`.
    pub fn regularity(&self) -> Option<i64> {
        self.entries.iter().map(|e| e.j - e.i as i64).max()
    }

    /// Betti numbers of `S/I` from those of `I`: `β_{i,j}(S/I) = β_{i-1,j}(I)`
    /// plus `β_{0,0}(S/I) = 1`.
    pub fn quotient(&self) -> BettiTable {
        let mut map: BTreeMap<(usize, i64), u64> = BTreeMap::new();
        map.insert((0, 0), 1);
        for e in &self.entries {
            map.insert((e.i + 1, e.j), e.beta);
        }
        BettiTable::from_map(map)
    }

    /// `Σ (-1)^i β_{i,j} s^j`, lowest degree first.
    pub fn alternating_sum(&self) -> Vec<i64> {
        let top = self.entries.iter().map(|e| e.j).max().unwrap_or(0).max(0) as usize;
        let mut out = vec![0i64; top + 1];
        for e in &self.entries {
            let sign = if e.i % 2 == 0 { 1 } else { -1 };
            out[e.j as usize] += sign * e.beta as i64;
        }
        out
    }

    /// Staircase layout: column `i`, row `j - i`, dots for zeros.
    pub fn staircase(&self) -> String {
        let mut s = String::new();
        if self.entries.is_empty() {
            s.push_str("total: 0\n");
            return s;
        }
        let cols = self.length() + 1;
        let lo = self.entries.iter().map(|e| e.j - e.i as i64).min().unwrap();
        let hi = self.regularity().unwrap();
        let width = self
            .entries
            .iter()
            .map(|e| e.beta.to_string().len())
            .chain((0..cols).map(|i| self.total(i).to_string().len().max(i.to_string().len())))
            .max()
            .unwrap();
        let label = format!("{hi}:").len().max(format!("{lo}:").len()).max("total:".len());
        let _ = write!(s, "{:>label$}", "");
        for i in 0..cols {
            let _ = write!(s, " {:>width$}", i);
        }
        s.push('\n');
        let _ = write!(s, "{:>label$}", "total:");
        for i in 0..cols {
            let _ = write!(s, " {:>width$}", self.total(i));
        }
        s.push('\n');
        for row in lo..=hi {
            let _ = write!(s, "{:>label$}", format!("{row}:"));
            for i in 0..cols {
                let b = self.get(i, row + i as i64);
                if b == 0 {
                    let _ = write!(s, " {:>width$}", ".");
                } else {
                    let _ = write!(s, " {:>width$}", b);
                }
            }
            s.push('\n');
        }
        s
    }
}

/// Betti table of a minimal free resolution of `I` (cached on `I`).
pub fn minimal_betti<F: Field>(i: &Ideal<F>) -> Result<BettiTable> {
    if let Some(b) = i.cached_betti() {
        return Ok(b);
    }
    let b = minimal_resolution(i)?.betti_of_ranks();
    i.store_betti(&b);
    Ok(b)
}

/// Arithmetic (Eisenbud–Goto) regularity `max { j - i : β_{i,j}(I) ≠ 0 }`.
pub fn arith_reg<F: Field>(i: &Ideal<F>) -> Result<i64> {
    Ok(minimal_betti(i)?.regularity().expect("nonzero ideal has generators"))
}

/// Regularity of the saturation. `degenerate` marks an empty scheme, whose
/// saturated ideal is the unit ideal.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeomReg {
    pub value: i64,
    pub degenerate: bool,
}

pub fn geom_reg<F: Field>(i: &Ideal<F>) -> Result<GeomReg> {
    let sat = saturate(i)?;
    Ok(GeomReg {
        value: arith_reg(&sat)?,
        degenerate: sat.is_unit()?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;

    fn ring(n: usize) -> Arc<PolyRing<PrimeField>> {
        PolyRing::with_vars(PrimeField::default(), n).unwrap()
    }

    fn check(i: &Ideal<PrimeField>) -> BettiTable {
        let s = schreyer_resolution(i).unwrap();
        assert!(s.is_complex());
        let m = minimize(&s);
        assert!(m.is_complex());
        assert!(!m.has_unit_entries());
        let b = m.betti_of_ranks();
        assert_eq!(b, s.betti_by_constant_ranks());
        assert!(b.length() < i.nvars());
        // Hilbert series identity
        let mut n = vec![1i64];
        for (k, c) in b.alternating_sum().into_iter().enumerate() {
            if n.len() <= k {
                n.resize(k + 1, 0);
            }
            n[k] -= c;
        }
        while n.last() == Some(&0) {
            n.pop();
        }
        assert_eq!(n, i.hilbert_numerator().unwrap());
        b
    }

    #[test]
    fn koszul() {
        let b = check(&Ideal::maximal(&ring(3)));
        assert_eq!((b.get(0, 1), b.get(1, 2), b.get(2, 3)), (3, 3, 1));
        assert_eq!(b.regularity(), Some(1));
    }

    #[test]
    fn three_points_and_twisted_cubic() {
        let p = Ideal::parse(&ring(3), &["x0*x1", "x1*x2", "x0*x2"]).unwrap();
        let b = check(&p);
        assert_eq!(b.entries().len(), 2);
        assert_eq!((b.get(0, 2), b.get(1, 3)), (3, 2));
        assert_eq!(arith_reg(&p).unwrap(), 2);
        let c = Ideal::parse(&ring(4), &["x0*x2 - x1^2", "x0*x3 - x1*x2", "x1*x3 - x2^2"]).unwrap();
        let b = check(&c);
        assert_eq!((b.get(0, 2), b.get(1, 3), b.length()), (3, 2, 1));
        assert_eq!(b.quotient().get(2, 3), 2);
    }

    #[test]
    fn complete_intersection_regularity() {
        let i = Ideal::parse(&ring(4), &["x0^2", "x1^3"]).unwrap();
        let b = check(&i);
        assert_eq!(b.get(1, 5), 1);
        // d1 + d2 - 2 + 1
        assert_eq!(arith_reg(&i).unwrap(), 4);
    }

    #[test]
    fn syzygy_examples() {
        let r = ring(3);
        let cols: Vec<Vec<Polynomial<PrimeField>>> = ["x0*x1", "x1*x2", "x0*x2"]
            .iter()
            .map(|s| vec![r.parse(s).unwrap()])
            .collect();
        let k = syzygies(&r, &cols, &[0], &[2, 2, 2], Limits::default()).unwrap();
        assert!(k.iter().all(|v| v.degree == 3));
        assert_eq!(k.len(), 2);
        let f = vec![vec![r.parse("x0^2 + x1*x2").unwrap()]];
        assert!(syzygies(&r, &f, &[0], &[2], Limits::default()).unwrap().is_empty());
    }

    #[test]
    fn nonminimal_generators_are_pruned() {
        let r = ring(3);
        let i = Ideal::parse(&r, &["x0^2", "x0*x1", "x0^2 + x0*x1", "x1^3"]).unwrap();
        let b = check(&i);
        assert_eq!(b.total(0), 3);
    }

    #[test]
    fn staircase_text() {
        let p = Ideal::parse(&ring(3), &["x0*x1", "x1*x2", "x0*x2"]).unwrap();
        let s = minimal_betti(&p).unwrap().staircase();
        assert_eq!(s, "       0 1\ntotal: 3 2\n    2: 3 2\n");
        let json = serde_json::to_string(&minimal_betti(&p).unwrap()).unwrap();
        assert_eq!(json, r#"[{"i":0,"j":2,"beta":3},{"i":1,"j":3,"beta":2}]"#);
    }

    #[test]
    fn geometric_regularity() {
        let r = ring(3);
        let j = Ideal::parse(&r, &["x0*(x0+x1+x2)", "x1*(x0+x1+x2)", "x2*(x0+x1+x2)"]).unwrap();
        assert_eq!(geom_reg(&j).unwrap(), GeomReg { value: 1, degenerate: false });
        assert_eq!(arith_reg(&j).unwrap(), 2);
        let m2 = Ideal::parse(&r, &["x0^2", "x1^2", "x2^2"]).unwrap();
        assert!(geom_reg(&m2).unwrap().degenerate);
    }
}
