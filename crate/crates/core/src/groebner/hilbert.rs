//! Counting in monomial ideals: standard monomials of a given degree and the
//! Hilbert series numerator.

use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

use crate::combinat::monomial_count;
use crate::monomial::Monomial;

/// Drops generators divisible by another one (and duplicates).
pub fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by_key(|m| m.degree());
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !out.iter().any(|h| h.divides(&g)) {
            out.push(g);
        }
    }
    out
}

/// Number of monomials of degree `t` in variables `0..nvars` outside the
/// monomial ideal generated by `gens`.
///
/// Walks the exponent of the first variable; after fixing it the ideal
/// restricts to the remaining variables, and an empty restriction is counted
/// in closed form.
pub fn standard_monomial_count(gens: &[Monomial], nvars: usize, t: u32) -> u64 {
    let gens = minimalize(gens.to_vec());
    walk(&gens, 0, nvars, t)
}

fn walk(gens: &[Monomial], first: usize, nvars: usize, t: u32) -> u64 {
    if gens.iter().any(|g| g.is_one()) {
        return 0;
    }
    let left = nvars - first;
    if gens.is_empty() {
        return monomial_count(left, t as i64);
    }
    if left == 1 {
        // Only pure powers of the last variable remain.
        return u64::from(!gens.iter().any(|g| g.degree() <= t));
    }
    let mut total = 0;
    for e in 0..=t {
        let restricted: Vec<Monomial> = gens
            .iter()
            .filter(|g| g.exp(first) <= e)
            .map(|g| g.strip_var(first))
            .collect();
        if restricted.iter().any(|g| g.is_one()) {
            // Larger e only adds generators.
            break;
        }
        let restricted = minimalize(restricted);
        total += walk(&restricted, first + 1, nvars, t - e);
    }
    total
}

/// Coefficients of the numerator `N(s)` in
/// `HS_{S/M}(s) = N(s) / (1 - s)^nvars`, lowest degree first, trailing zeros
/// trimmed (the zero ideal's quotient by the unit ideal gives `[]`).
pub fn hilbert_numerator(gens: &[Monomial]) -> Vec<i64> {
    let mut n = numerator_rec(minimalize(gens.to_vec()));
    trim(&mut n);
    n
}

fn trim(p: &mut Vec<i64>) {
    while p.last() == Some(&0) {
        p.pop();
    }
}

fn add_shifted(acc: &mut Vec<i64>, p: &[i64], shift: usize) {
    if acc.len() < p.len() + shift {
        acc.resize(p.len() + shift, 0);
    }
    for (i, c) in p.iter().enumerate() {
        acc[i + shift] += c;
    }
}

fn numerator_rec(gens: Vec<Monomial>) -> Vec<i64> {
    if gens.is_empty() {
        return vec![1];
    }
    if gens.iter().any(|g| g.is_one()) {
        return Vec::new();
    }
    let coprime = gens
        .iter()
        .enumerate()
        .all(|(i, g)| gens[i + 1..].iter().all(|h| g.is_coprime(h)));
    if coprime {
        let mut acc = vec![1i64];
        for g in &gens {
            let d = g.degree() as usize;
            let mut next = vec![0i64; acc.len() + d];
            for (i, c) in acc.iter().enumerate() {
                next[i] += c;
                next[i + d] -= c;
            }
            acc = next;
        }
        return acc;
    }
    // Pivot on a power of the variable that occurs most often among the
    // mixed generators, using an exponent one of them carries.
    let mixed: Vec<&Monomial> = gens.iter().filter(|g| g.support_count() > 1).collect();
    let mut best = (0usize, 0usize);
    for v in 0..crate::monomial::MAX_VARS {
        let c = mixed.iter().filter(|g| g.exp(v) > 0).count();
        if c > best.1 {
            best = (v, c);
        }
    }
    let v = best.0;
    let e = mixed
        .iter()
        .filter(|g| g.exp(v) > 0)
        .map(|g| g.exp(v))
        .min()
        .expect("pivot variable occurs");
    let p = Monomial::var(v, e);

    let mut plus = gens.clone();
    plus.push(p);
    let colon: Vec<Monomial> = gens.iter().map(|g| g.lower_var(v, e)).collect();

    let mut acc = numerator_rec(minimalize(plus));
    let rest = numerator_rec(minimalize(colon));
    add_shifted(&mut acc, &rest, e as usize);
    trim(&mut acc);
    acc
}

/// Divides out factors of `(1 - s)`: returns `(k, Q)` with `N = (1 - s)^k Q`
/// and `Q(1) != 0`. The zero polynomial gives `(0, [])`.
pub fn split_one_minus_s(n: &[i64]) -> (usize, Vec<i64>) {
    let mut q: Vec<i64> = n.to_vec();
    trim(&mut q);
    if q.is_empty() {
        return (0, q);
    }
    let mut k = 0;
    while q.iter().sum::<i64>() == 0 {
        // N(s) = (1 - s) Q(s): Q_i = N_i + Q_{i-1}.
        let mut next = Vec::with_capacity(q.len() - 1);
        let mut run = 0;
        for c in &q[..q.len() - 1] {
            run += c;
            next.push(run);
        }
        q = next;
        trim(&mut q);
        k += 1;
    }
    (k, q)
}

/// `dim_k (S/M)_t` from the numerator over `nvars` variables.
pub fn quotient_dim_from_numerator(n: &[i64], nvars: usize, t: u32) -> i64 {
    n.iter()
        .enumerate()
        .filter(|(i, _)| *i as u32 <= t)
        .map(|(i, c)| c * monomial_count(nvars, t as i64 - i as i64) as i64)
        .sum()
}

/// Hilbert function of `S/J` together with the invariants read off its
/// series.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertData {
    /// `t -> dim_k (S/J)_t` for `0 <= t <= t_max`.
    pub values: BTreeMap<u32, u64>,
    /// Projective dimension of `V(J)`; `-1` when the scheme is empty.
    pub dimension: i64,
    /// Degree of `V(J)`; zero for the empty scheme.
    pub degree: u64,
    /// Numerator of the Hilbert series over `(1 - s)^(r+1)`.
    pub numerator: Vec<i64>,
    /// Whether `t_max` reaches the range where the Hilbert function is
    /// polynomial.
    pub stable: bool,
}

impl HilbertData {
    pub fn from_numerator(numerator: Vec<i64>, nvars: usize, t_max: u32) -> Self {
        let (c, q) = split_one_minus_s(&numerator);
        let (dimension, degree, regular_from) = if q.is_empty() {
            (-1, 0, 0)
        } else {
            let krull = nvars as i64 - c as i64;
            let deg_q = q.len() as i64 - 1;
            // Hilbert function equals its polynomial from deg Q - krull + 1 on.
            (krull - 1, q.iter().sum::<i64>() as u64, deg_q - krull + 1)
        };
        let values = (0..=t_max)
            .map(|t| (t, quotient_dim_from_numerator(&numerator, nvars, t) as u64))
            .collect();
        HilbertData {
            values,
            dimension,
            degree,
            numerator,
            stable: t_max as i64 >= regular_from,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e)
    }

    #[test]
    fn three_points() {
        let g = [m(&[1, 1, 0]), m(&[0, 1, 1]), m(&[1, 0, 1])];
        assert_eq!(standard_monomial_count(&g, 3, 2), 3);
        assert_eq!(standard_monomial_count(&g, 3, 3), 3);
        let n = hilbert_numerator(&g);
        let hd = HilbertData::from_numerator(n, 3, 6);
        assert_eq!(hd.dimension, 0);
        assert_eq!(hd.degree, 3);
        assert!(hd.values.values().skip(1).all(|&v| v == 3));
    }

    #[test]
    fn unit_and_zero() {
        assert!(hilbert_numerator(&[Monomial::ONE]).is_empty());
        assert_eq!(hilbert_numerator(&[]), vec![1]);
        let hd = HilbertData::from_numerator(vec![], 3, 4);
        assert_eq!(hd.dimension, -1);
        assert!(hd.values.values().all(|&v| v == 0));
    }

    #[test]
    fn complete_intersection_numerator() {
        // (x^2, y^3): (1 - s^2)(1 - s^3)
        let n = hilbert_numerator(&[m(&[2, 0, 0]), m(&[0, 3, 0])]);
        assert_eq!(n, vec![1, 0, -1, -1, 0, 1]);
        let (k, q) = split_one_minus_s(&n);
        assert_eq!(k, 2);
        assert_eq!(q.iter().sum::<i64>(), 6);
    }

    fn brute(gens: &[Monomial], nvars: usize, t: u32) -> u64 {
        crate::monomial::monomials_of_degree(nvars, t)
            .into_iter()
            .filter(|x| !gens.iter().any(|g| g.divides(x)))
            .count() as u64
    }

    proptest! {
        #[test]
        fn walk_and_series_agree_with_brute_force(
            raw in proptest::collection::vec(proptest::collection::vec(0u32..4, 4), 0..6),
            t in 0u32..7,
        ) {
            let gens: Vec<Monomial> = raw.iter().map(|e| m(e)).collect();
            let b = brute(&gens, 4, t);
            prop_assert_eq!(standard_monomial_count(&gens, 4, t), b);
            let n = hilbert_numerator(&gens);
            prop_assert_eq!(quotient_dim_from_numerator(&n, 4, t), b as i64);
        }
    }
}
