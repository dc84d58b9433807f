//! Graded characters of symmetric, exterior and hook Schur powers of split
//! vector bundles `V = ⊕ O(-d)`, the terms of the Weyman and
//! Buchsbaum–Eisenbud complexes built from them, and the saturation bound
//! formulas.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::combinat::{binomial, binomial_big};
use crate::error::{AlgebraError, Result};
use crate::resolution::FreeModule;

/// A multiset of generator degrees: `d` with multiplicity `m` stands for
/// `O(-d)^m`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "Vec<DegreeCount>", from = "Vec<DegreeCount>")]
pub struct GradedMultiset {
    counts: BTreeMap<i64, u64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeCount {
    pub degree: i64,
    pub multiplicity: u64,
}

impl From<GradedMultiset> for Vec<DegreeCount> {
    fn from(g: GradedMultiset) -> Self {
        g.counts
            .into_iter()
            .map(|(degree, multiplicity)| DegreeCount {
                degree,
                multiplicity,
            })
            .collect()
    }
}

impl From<Vec<DegreeCount>> for GradedMultiset {
    fn from(v: Vec<DegreeCount>) -> Self {
        let mut g = GradedMultiset::new();
        for c in v {
            g.add(c.degree, c.multiplicity);
        }
        g
    }
}

impl GradedMultiset {
    pub fn new() -> Self {
        GradedMultiset::default()
    }

    pub fn from_degrees(degrees: &[i64]) -> Self {
        let mut g = GradedMultiset::new();
        for &d in degrees {
            g.add(d, 1);
        }
        g
    }

    /// The trivial line bundle `O`, unit for the tensor product.
    pub fn unit() -> Self {
        GradedMultiset::from_degrees(&[0])
    }

    fn add(&mut self, d: i64, m: u64) {
        if m > 0 {
            *self.counts.entry(d).or_insert(0) += m;
        }
    }

    pub fn rank(&self) -> u64 {
        self.counts.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    pub fn multiplicity(&self, d: i64) -> u64 {
        self.counts.get(&d).copied().unwrap_or(0)
    }

    pub fn max_degree(&self) -> Option<i64> {
        self.counts.keys().next_back().copied()
    }

    pub fn min_degree(&self) -> Option<i64> {
        self.counts.keys().next().copied()
    }

    /// `(degree, multiplicity)` ascending.
    pub fn iter(&self) -> impl Iterator<Item = (i64, u64)> + '_ {
        self.counts.iter().map(|(&d, &m)| (d, m))
    }

    /// Every degree repeated by its multiplicity, ascending.
    pub fn degrees(&self) -> Vec<i64> {
        self.iter()
            .flat_map(|(d, m)| std::iter::repeat_n(d, m as usize))
            .collect()
    }

    /// Direct sum.
    pub fn merge(&self, other: &GradedMultiset) -> Result<GradedMultiset> {
        let mut out = self.clone();
        for (d, m) in other.iter() {
            let e = out.counts.entry(d).or_insert(0);
            *e = e.checked_add(m).ok_or(AlgebraError::Overflow("graded multiset sum"))?;
        }
        Ok(out)
    }

    /// Tensor product: degrees add, multiplicities multiply.
    pub fn tensor(&self, other: &GradedMultiset) -> Result<GradedMultiset> {
        let mut out = GradedMultiset::new();
        for (d1, m1) in self.iter() {
            for (d2, m2) in other.iter() {
                let m = m1
                    .checked_mul(m2)
                    .ok_or(AlgebraError::Overflow("graded multiset tensor"))?;
                let e = out.counts.entry(d1 + d2).or_insert(0);
                *e = e.checked_add(m).ok_or(AlgebraError::Overflow("graded multiset tensor"))?;
            }
        }
        Ok(out)
    }

    /// Exact difference; a negative multiplicity is a contract violation.
    pub fn subtract(&self, other: &GradedMultiset) -> Result<GradedMultiset> {
        let mut out = self.clone();
        for (d, m) in other.iter() {
            let have = out.multiplicity(d);
            if have < m {
                return Err(AlgebraError::ContractViolation(format!(
                    "negative multiplicity in degree {d}"
                )));
            }
            if have == m {
                out.counts.remove(&d);
            } else {
                out.counts.insert(d, have - m);
            }
        }
        Ok(out)
    }

    /// Twist every summand by `c`.
    pub fn shift(&self, c: i64) -> GradedMultiset {
        GradedMultiset {
            counts: self.iter().map(|(d, m)| (d + c, m)).collect(),
        }
    }

    fn scale(&self, k: u64) -> Result<GradedMultiset> {
        let mut out = GradedMultiset::new();
        for (d, m) in self.iter() {
            out.add(d, m.checked_mul(k).ok_or(AlgebraError::Overflow("graded multiset scale"))?);
        }
        Ok(out)
    }
}

impl From<&FreeModule> for GradedMultiset {
    fn from(f: &FreeModule) -> Self {
        GradedMultiset::from_degrees(&f.generator_degrees)
    }
}

impl fmt::Display for GradedMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (d, m)) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            if m == 1 {
                write!(f, "{d}")?;
            } else {
                write!(f, "{d}^{m}")?;
            }
        }
        write!(f, "}}")
    }
}

/// Shared shape of `S^a` and `Λ^k`: split by distinct degree `d` with
/// multiplicity `m`; `j` copies drawn from that block give `coeff(m, j)`
/// summands of degree `j d`.
fn power(v: &GradedMultiset, a: u32, coeff: impl Fn(u64, u64) -> Option<u64>) -> Result<GradedMultiset> {
    let a = a as usize;
    let mut by_used: Vec<GradedMultiset> = vec![GradedMultiset::new(); a + 1];
    by_used[0] = GradedMultiset::unit();
    for (d, m) in v.iter() {
        let mut next: Vec<GradedMultiset> = vec![GradedMultiset::new(); a + 1];
        for (used, cur) in by_used.iter().enumerate() {
            if cur.is_empty() {
                continue;
            }
            for j in 0..=(a - used) {
                let c = coeff(m, j as u64).ok_or(AlgebraError::Overflow("binomial"))?;
                if c == 0 {
                    continue;
                }
                let part = cur.shift(j as i64 * d).scale(c)?;
                next[used + j] = next[used + j].merge(&part)?;
            }
        }
        by_used = next;
    }
    Ok(by_used.swap_remove(a))
}

/// `S^a V`.
pub fn sym_power(v: &GradedMultiset, a: u32) -> Result<GradedMultiset> {
    power(v, a, |m, j| if m == 0 { Some(u64::from(j == 0)) } else { binomial(m + j - 1, j) })
}

/// `Λ^k V`; empty when `k > rank V`.
pub fn ext_power(v: &GradedMultiset, k: u32) -> Result<GradedMultiset> {
    power(v, k, binomial)
}

/// Memoized hook Schur powers `S^{a,1^{k-1}} V` of one bundle.
pub struct HookCalculator {
    v: GradedMultiset,
    memo: HashMap<(u32, u32), GradedMultiset>,
}

impl HookCalculator {
    pub fn new(v: GradedMultiset) -> Self {
        HookCalculator {
            v,
            memo: HashMap::new(),
        }
    }

    /// Pieri recursion `S^{a-1} V ⊗ Λ^k V = S^{a,1^{k-1}} V ⊕ S^{a-1,1^k} V`.
    pub fn hook(&mut self, a: u32, k: u32) -> Result<GradedMultiset> {
        if a == 0 || k == 0 {
            return Err(AlgebraError::InvalidInput("hook shape needs a, k >= 1".into()));
        }
        if let Some(h) = self.memo.get(&(a, k)) {
            return Ok(h.clone());
        }
        let h = if k as u64 > self.v.rank() {
            GradedMultiset::new()
        } else if k == 1 {
            sym_power(&self.v, a)?
        } else if a == 1 {
            ext_power(&self.v, k)?
        } else {
            let prod = sym_power(&self.v, a - 1)?.tensor(&ext_power(&self.v, k)?)?;
            prod.subtract(&self.hook(a - 1, k + 1)?)?
        };
        self.memo.insert((a, k), h.clone());
        Ok(h)
    }
}

/// `S^{a,1^{k-1}} V`.
pub fn hook_graded(a: u32, k: u32, v: &GradedMultiset) -> Result<GradedMultiset> {
    HookCalculator::new(v.clone()).hook(a, k)
}

/// Number of semistandard tableaux of shape `(a, 1^{k-1})` with entries in
/// `1..=n`, by direct enumeration.
pub fn hook_rank_oracle(a: u32, k: u32, n: u32) -> u64 {
    fn row(len: u32, min: u32, n: u32) -> u64 {
        if len == 0 {
            return 1;
        }
        (min..=n).map(|x| row(len - 1, x, n)).sum()
    }
    fn column(len: u32, above: u32, n: u32) -> u64 {
        if len == 0 {
            return 1;
        }
        (above + 1..=n).map(|x| column(len - 1, x, n)).sum()
    }
    if a == 0 || k == 0 {
        return 0;
    }
    (1..=n)
        .map(|corner| row(a - 1, corner, n) * column(k - 1, corner, n))
        .sum()
}

/// One summand `⊗_j C^{k_j} U_j` of a Weyman complex term.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeymanSummand {
    pub k: Vec<u32>,
    pub label: String,
    pub degrees: GradedMultiset,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeymanTerm {
    pub a: u32,
    pub i: u32,
    pub summands: Vec<WeymanSummand>,
    pub total: GradedMultiset,
}

fn compositions(a: u32, i: u32, parts: usize) -> Vec<Vec<u32>> {
    // k_0 + ... + k_{parts-1} = a, sum j k_j = i
    fn rec(j: usize, parts: usize, left: u32, weight: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if j == parts {
            if left == 0 && weight == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let cap = if j == 0 { left } else { left.min(weight / j as u32) };
        for kj in (0..=cap).rev() {
            cur.push(kj);
            rec(j + 1, parts, left - kj, weight - kj * j as u32, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, parts, a, i, &mut Vec::new(), &mut out);
    out
}

/// The term `L_i` of the `a`-th Weyman complex of a resolution `U_0, U_1, ...`:
/// all `(k_j)` with `Σ k_j = a` and `Σ j k_j = i`, where `C^k` is `S^k` for
/// even `j` and `Λ^k` for odd `j`. Positions beyond the resolution
/// contribute nothing.
pub fn weyman_terms(a: u32, i: u32, u: &[FreeModule]) -> Result<WeymanTerm> {
    if a == 0 {
        return Err(AlgebraError::InvalidInput("power must be at least 1".into()));
    }
    let mods: Vec<GradedMultiset> = u.iter().map(GradedMultiset::from).collect();
    let mut summands = Vec::new();
    let mut total = GradedMultiset::new();
    for k in compositions(a, i, u.len()) {
        let mut degrees = GradedMultiset::unit();
        let mut label = Vec::new();
        for (j, &kj) in k.iter().enumerate() {
            if kj == 0 {
                continue;
            }
            let (factor, name) = if j % 2 == 0 {
                (sym_power(&mods[j], kj)?, "S")
            } else {
                (ext_power(&mods[j], kj)?, "Λ")
            };
            degrees = degrees.tensor(&factor)?;
            label.push(if kj == 1 {
                format!("U_{j}")
            } else {
                format!("{name}^{kj} U_{j}")
            });
        }
        total = total.merge(&degrees)?;
        summands.push(WeymanSummand {
            k,
            label: label.join(" ⊗ "),
            degrees,
        });
    }
    Ok(WeymanTerm {
        a,
        i,
        summands,
        total,
    })
}

/// Whether every summand of `L_i` has degree at most `a m + i`, given an
/// `m`-regular resolution (`U_j` generated in degrees `<= m + j`).
pub fn weyman_reg_check(a: u32, i: u32, m: i64, u: &[FreeModule]) -> Result<bool> {
    for (j, uj) in u.iter().enumerate() {
        if uj.max_degree().is_some_and(|d| d > m + j as i64) {
            return Err(AlgebraError::InvalidInput(format!(
                "resolution is not {m}-regular at position {j}"
            )));
        }
    }
    let term = weyman_terms(a, i, u)?;
    Ok(term
        .total
        .max_degree()
        .is_none_or(|d| d <= a as i64 * m + i as i64))
}

/// Degrees `d_0 >= ... >= d_p > 0` of forms in `k[x_0..x_r]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeSequence {
    pub d: Vec<u32>,
    pub r: usize,
}

impl DegreeSequence {
    pub fn new(mut d: Vec<u32>, r: usize) -> Result<Self> {
        if d.is_empty() || d.contains(&0) {
            return Err(AlgebraError::InvalidInput("degrees must be positive".into()));
        }
        d.sort_unstable_by(|a, b| b.cmp(a));
        Ok(DegreeSequence { d, r })
    }

    /// `d_0, ..., d_r`, cut off or padded with zeros.
    pub fn padded(&self) -> Vec<u32> {
        (0..=self.r).map(|i| self.d.get(i).copied().unwrap_or(0)).collect()
    }

    pub fn bundle(&self) -> GradedMultiset {
        GradedMultiset::from_degrees(&self.d.iter().map(|&x| x as i64).collect::<Vec<_>>())
    }
}

/// Terms `C_i = S^{a,1^i} V` for `i = 0..p`, with `V = ⊕ O(-d_i)`.
pub fn be_complex(a: u32, ds: &DegreeSequence) -> Result<Vec<GradedMultiset>> {
    let mut calc = HookCalculator::new(ds.bundle());
    (0..ds.d.len() as u32).map(|i| calc.hook(a, i + 1)).collect()
}

/// `Σ_i (-1)^i Σ_{d in C_i} C(t - d + r, r)`.
pub fn be_euler_char(a: u32, ds: &DegreeSequence, t: i64) -> Result<BigInt> {
    let r = ds.r as i64;
    let mut acc = BigInt::zero();
    for (i, c) in be_complex(a, ds)?.iter().enumerate() {
        for (d, m) in c.iter() {
            let h = binomial_big(t - d + r, r) * m;
            if i % 2 == 0 {
                acc += h;
            } else {
                acc -= h;
            }
        }
    }
    Ok(acc)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundKind {
    Macaulay,
    ThmA,
    ThmB,
}

impl fmt::Display for BoundKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BoundKind::Macaulay => "macaulay",
            BoundKind::ThmA => "thmA",
            BoundKind::ThmB => "thmB",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BoundParams {
    Degrees(DegreeSequence),
    Regularity(i64),
}

/// `a d_0 + d_1 + ... + d_r - r`, zero-padded.
pub fn degree_bound(a: u32, ds: &DegreeSequence) -> i64 {
    let p = ds.padded();
    a as i64 * p[0] as i64 + p[1..].iter().map(|&x| x as i64).sum::<i64>() - ds.r as i64
}

pub fn thm_bound(kind: BoundKind, a: u32, params: &BoundParams) -> Result<i64> {
    match (kind, params) {
        (BoundKind::Macaulay | BoundKind::ThmA, BoundParams::Degrees(ds)) => Ok(degree_bound(a, ds)),
        (BoundKind::ThmB, BoundParams::Regularity(m)) => Ok(a as i64 * m),
        _ => Err(AlgebraError::InvalidInput(format!(
            "{kind} bound needs {}",
            if kind == BoundKind::ThmB { "a regularity" } else { "a degree sequence" }
        ))),
    }
}

/// Aligned text table: one row per labelled multiset.
pub fn render_table(rows: &[(String, GradedMultiset)]) -> String {
    let w = rows.iter().map(|r| r.0.chars().count()).max().unwrap_or(0);
    let mut s = String::new();
    for (label, g) in rows {
        let pad = w - label.chars().count();
        s.push_str(&format!(
            "{label}{}  rank {:>4}  max {:>4}  {g}\n",
            " ".repeat(pad),
            g.rank(),
            g.max_degree().map_or("-".to_string(), |d| d.to_string())
        ));
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn gm(d: &[i64]) -> GradedMultiset {
        GradedMultiset::from_degrees(d)
    }

    #[test]
    fn powers() {
        assert_eq!(sym_power(&gm(&[2, 1]), 2).unwrap(), gm(&[4, 3, 2]));
        assert_eq!(ext_power(&gm(&[2, 2, 2]), 3).unwrap(), gm(&[6]));
        assert!(ext_power(&gm(&[1, 1]), 3).unwrap().is_empty());
        assert_eq!(sym_power(&gm(&[1, 1, 1]), 0).unwrap(), gm(&[0]));
    }

    #[test]
    fn hooks() {
        let h = hook_graded(2, 2, &gm(&[1, 1])).unwrap();
        assert_eq!(h, gm(&[3, 3]));
        let v = gm(&[3, 2, 2, 1]);
        assert_eq!(hook_graded(1, 3, &v).unwrap(), ext_power(&v, 3).unwrap());
        assert_eq!(hook_graded(4, 1, &v).unwrap(), sym_power(&v, 4).unwrap());
        assert!(hook_graded(0, 1, &v).is_err());
        // max degree a d0 + d1 + ... + d_{k-1}
        assert_eq!(hook_graded(3, 3, &v).unwrap().max_degree(), Some(3 * 3 + 2 + 2));
    }

    #[test]
    fn oracle_small_cases() {
        assert_eq!(hook_rank_oracle(2, 2, 2), 2);
        assert_eq!(hook_rank_oracle(3, 1, 4), 20);
        assert_eq!(hook_rank_oracle(1, 3, 5), 10);
        assert_eq!(hook_rank_oracle(1, 4, 3), 0);
    }

    #[test]
    fn weyman_shapes() {
        let u = vec![
            FreeModule { generator_degrees: vec![2, 2, 2] },
            FreeModule { generator_degrees: vec![3, 3] },
            FreeModule { generator_degrees: vec![4] },
        ];
        let t = weyman_terms(2, 2, &u).unwrap();
        let labels: Vec<&str> = t.summands.iter().map(|s| s.label.as_str()).collect();
        assert_eq!(labels, vec!["U_0 ⊗ U_2", "Λ^2 U_1"]);
        let t0 = weyman_terms(3, 0, &u).unwrap();
        assert_eq!(t0.summands.len(), 1);
        assert_eq!(t0.total, sym_power(&u[0].clone().into_multiset(), 3).unwrap());
        let t1 = weyman_terms(3, 1, &u).unwrap();
        assert_eq!(t1.summands[0].label, "S^2 U_0 ⊗ U_1");
        // no U_3: i large enough to need it vanishes
        assert!(weyman_terms(1, 3, &u).unwrap().summands.is_empty());
        assert!(weyman_reg_check(2, 2, 2, &u).unwrap());
        assert!(weyman_reg_check(2, 2, 1, &u).is_err());
    }

    trait IntoMultiset {
        fn into_multiset(self) -> GradedMultiset;
    }
    impl IntoMultiset for FreeModule {
        fn into_multiset(self) -> GradedMultiset {
            GradedMultiset::from(&self)
        }
    }

    #[test]
    fn buchsbaum_eisenbud_examples() {
        let ds = DegreeSequence::new(vec![2, 2, 2], 2).unwrap();
        let c = be_complex(2, &ds).unwrap();
        assert_eq!(c[0], gm(&[4; 6]));
        let k = be_complex(1, &ds).unwrap();
        assert_eq!(k, vec![gm(&[2, 2, 2]), gm(&[4, 4, 4]), gm(&[6])]);
        assert_eq!(be_euler_char(1, &ds, 4).unwrap(), BigInt::from(15));
        assert_eq!(be_euler_char(1, &ds, 3).unwrap(), BigInt::from(9));
        assert_eq!(be_euler_char(2, &ds, 3).unwrap(), BigInt::zero());
    }

    #[test]
    fn bounds() {
        let ds = DegreeSequence::new(vec![2, 2, 2], 2).unwrap();
        assert_eq!(thm_bound(BoundKind::ThmA, 1, &BoundParams::Degrees(ds.clone())).unwrap(), 4);
        assert_eq!(thm_bound(BoundKind::ThmB, 3, &BoundParams::Regularity(2)).unwrap(), 6);
        assert!(thm_bound(BoundKind::ThmB, 3, &BoundParams::Degrees(ds)).is_err());
        // hyperplane family: r + 1 forms of degree d
        for (r, d) in [(2usize, 2u32), (3, 2), (2, 3)] {
            let ds = DegreeSequence::new(vec![d; r + 1], r).unwrap();
            for a in 1..4u32 {
                assert_eq!(degree_bound(a, &ds), (a as i64 + r as i64) * d as i64 - r as i64);
            }
        }
        // fewer forms than r + 1: zero padding
        let ds = DegreeSequence::new(vec![3, 2], 3).unwrap();
        assert_eq!(ds.padded(), vec![3, 2, 0, 0]);
        assert_eq!(degree_bound(2, &ds), 6 + 2 - 3);
    }

    #[test]
    fn serde_roundtrip() {
        let g = gm(&[4, 3, 3]);
        let s = serde_json::to_string(&g).unwrap();
        assert_eq!(s, r#"[{"degree":3,"multiplicity":2},{"degree":4,"multiplicity":1}]"#);
        assert_eq!(serde_json::from_str::<GradedMultiset>(&s).unwrap(), g);
        assert_eq!(g.to_string(), "{3^2, 4}");
    }

    fn bundle() -> impl Strategy<Value = GradedMultiset> {
        proptest::collection::vec(0i64..5, 1..5).prop_map(|d| gm(&d))
    }

    proptest! {
        #[test]
        fn pieri_identity(v in bundle(), a in 2u32..5, k in 1u32..5) {
            let lhs = sym_power(&v, a - 1).unwrap().tensor(&ext_power(&v, k).unwrap()).unwrap();
            let rhs = hook_graded(a, k, &v).unwrap().merge(&hook_graded(a - 1, k + 1, &v).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn twist_rule(v in bundle(), a in 1u32..5, k in 1u32..5, c in -3i64..4) {
            let h = hook_graded(a, k, &v.shift(c)).unwrap();
            prop_assert_eq!(h, hook_graded(a, k, &v).unwrap().shift((a + k - 1) as i64 * c));
        }

        #[test]
        fn multiset_algebra(x in bundle(), y in bundle(), z in bundle()) {
            prop_assert_eq!(x.tensor(&y).unwrap(), y.tensor(&x).unwrap());
            prop_assert_eq!(x.tensor(&y).unwrap().rank(), x.rank() * y.rank());
            prop_assert_eq!(
                x.tensor(&y.merge(&z).unwrap()).unwrap(),
                x.tensor(&y).unwrap().merge(&x.tensor(&z).unwrap()).unwrap()
            );
            prop_assert_eq!(x.merge(&y).unwrap().subtract(&y).unwrap(), x.clone());
        }
    }
}
