//! Dense exponent-vector monomials and the monomial orders.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

/// Upper bound on the number of variables, auxiliary elimination variables
/// included.
pub const MAX_VARS: usize = 12;

/// A monomial `x_0^e_0 ... x_r^e_r`. Unused trailing slots are zero, so two
/// monomials are equal exactly when their exponent vectors are.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    exps: [u16; MAX_VARS],
    degree: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial {
        exps: [0; MAX_VARS],
        degree: 0,
    };

    /// Panics if `exps` is longer than [`MAX_VARS`] or an entry exceeds `u16`.
    pub fn new(exps: &[u32]) -> Self {
        assert!(exps.len() <= MAX_VARS, "too many variables");
        let mut m = Monomial::ONE;
        for (slot, &e) in m.exps.iter_mut().zip(exps) {
            *slot = u16::try_from(e).expect("exponent overflows u16");
            m.degree += e;
        }
        m
    }

    pub fn var(i: usize, e: u32) -> Self {
        let mut m = Monomial::ONE;
        m.exps[i] = u16::try_from(e).expect("exponent overflows u16");
        m.degree = e;
        m
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.degree
    }

    #[inline]
    pub fn exp(&self, i: usize) -> u32 {
        self.exps[i] as u32
    }

    pub fn exponents(&self, nvars: usize) -> Vec<u32> {
        self.exps[..nvars].iter().map(|&e| e as u32).collect()
    }

    /// Highest index with a nonzero exponent, plus one.
    pub fn support_len(&self) -> usize {
        self.exps.iter().rposition(|&e| e != 0).map_or(0, |i| i + 1)
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    /// Number of variables with a nonzero exponent.
    pub fn support_count(&self) -> usize {
        self.exps.iter().filter(|&&e| e != 0).count()
    }

    #[inline]
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut exps = [0u16; MAX_VARS];
        for i in 0..MAX_VARS {
            exps[i] = self.exps[i] + other.exps[i];
        }
        Monomial {
            exps,
            degree: self.degree + other.degree,
        }
    }

    /// `self / other`, assuming `other` divides `self`.
    #[inline]
    pub fn div(&self, other: &Monomial) -> Monomial {
        debug_assert!(other.divides(self));
        let mut exps = [0u16; MAX_VARS];
        for i in 0..MAX_VARS {
            exps[i] = self.exps[i] - other.exps[i];
        }
        Monomial {
            exps,
            degree: self.degree - other.degree,
        }
    }

    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        other.divides(self).then(|| self.div(other))
    }

    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut exps = [0u16; MAX_VARS];
        let mut degree = 0;
        for i in 0..MAX_VARS {
            exps[i] = self.exps[i].max(other.exps[i]);
            degree += exps[i] as u32;
        }
        Monomial { exps, degree }
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let mut exps = [0u16; MAX_VARS];
        let mut degree = 0;
        for i in 0..MAX_VARS {
            exps[i] = self.exps[i].min(other.exps[i]);
            degree += exps[i] as u32;
        }
        Monomial { exps, degree }
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(&other.exps)
            .all(|(&a, &b)| a == 0 || b == 0)
    }

    pub fn pow(&self, k: u32) -> Monomial {
        let mut exps = [0u16; MAX_VARS];
        for i in 0..MAX_VARS {
            exps[i] = u16::try_from(self.exps[i] as u32 * k).expect("exponent overflows u16");
        }
        Monomial {
            exps,
            degree: self.degree * k,
        }
    }

    /// Weighted degree `sum w_i e_i`.
    pub fn weighted_degree(&self, weights: &[u32]) -> u32 {
        self.exps
            .iter()
            .zip(weights)
            .map(|(&e, &w)| e as u32 * w)
            .sum()
    }

    /// Moves variable `i` to slot `perm[i]`.
    pub fn permute(&self, perm: &[usize]) -> Monomial {
        let mut exps = [0u16; MAX_VARS];
        for (i, &j) in perm.iter().enumerate() {
            exps[j] = self.exps[i];
        }
        Monomial {
            exps,
            degree: self.degree,
        }
    }

    /// Inserts `k` zero exponents in front (variables shift up by `k`).
    pub fn shift_vars(&self, k: usize) -> Monomial {
        let mut exps = [0u16; MAX_VARS];
        exps[k..].copy_from_slice(&self.exps[..MAX_VARS - k]);
        Monomial {
            exps,
            degree: self.degree,
        }
    }

    /// Drops the first `k` variables, which must have zero exponent.
    pub fn unshift_vars(&self, k: usize) -> Monomial {
        debug_assert!(self.exps[..k].iter().all(|&e| e == 0));
        let mut exps = [0u16; MAX_VARS];
        exps[..MAX_VARS - k].copy_from_slice(&self.exps[k..]);
        Monomial {
            exps,
            degree: self.degree,
        }
    }

    /// Removes every power of variable `i`.
    pub fn strip_var(&self, i: usize) -> Monomial {
        let mut m = *self;
        m.degree -= m.exps[i] as u32;
        m.exps[i] = 0;
        m
    }

    /// Lowers the exponent of variable `i` by at most `k`.
    pub fn lower_var(&self, i: usize, k: u32) -> Monomial {
        let mut m = *self;
        let drop = (m.exps[i] as u32).min(k);
        m.exps[i] -= drop as u16;
        m.degree -= drop;
        m
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.support_len().max(1);
        write!(f, "x{:?}", &self.exps[..n])
    }
}

/// The monomial orders supported by the Gröbner engine.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
#[derive(Default)]
pub enum MonomialOrder {
    /// Graded reverse lexicographic with `x_0 > x_1 > ... > x_r`.
    #[default]
    Grevlex,
    /// Lexicographic with `x_0 > x_1 > ... > x_r`.
    Lex,
    /// Grevlex on `x_0..x_{split-1}` first, ties broken by grevlex on the
    /// remaining variables. Eliminates the first block.
    BlockElim { split: usize },
}


#[inline]
fn grevlex_range(a: &Monomial, b: &Monomial, lo: usize, hi: usize) -> Ordering {
    let da: u32 = a.exps[lo..hi].iter().map(|&e| e as u32).sum();
    let db: u32 = b.exps[lo..hi].iter().map(|&e| e as u32).sum();
    if da != db {
        return da.cmp(&db);
    }
    for i in (lo..hi).rev() {
        if a.exps[i] != b.exps[i] {
            return b.exps[i].cmp(&a.exps[i]);
        }
    }
    Ordering::Equal
}

impl MonomialOrder {
    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match *self {
            MonomialOrder::Grevlex => {
                if a.degree != b.degree {
                    return a.degree.cmp(&b.degree);
                }
                for i in (0..MAX_VARS).rev() {
                    if a.exps[i] != b.exps[i] {
                        return b.exps[i].cmp(&a.exps[i]);
                    }
                }
                Ordering::Equal
            }
            MonomialOrder::Lex => a.exps.cmp(&b.exps),
            MonomialOrder::BlockElim { split } => grevlex_range(a, b, 0, split)
                .then_with(|| grevlex_range(a, b, split, MAX_VARS)),
        }
    }

    /// Whether the order refines total degree.
    pub fn is_graded(&self) -> bool {
        matches!(self, MonomialOrder::Grevlex)
    }
}

/// Compares two monomials, rejecting exponent vectors of different lengths.
pub fn monomial_compare(
    order: MonomialOrder,
    a: &[u32],
    b: &[u32],
) -> crate::error::Result<Ordering> {
    if a.len() != b.len() {
        return Err(crate::error::AlgebraError::InvalidInput(format!(
            "monomials have {} and {} variables",
            a.len(),
            b.len()
        )));
    }
    if a.len() > MAX_VARS {
        return Err(crate::error::AlgebraError::TooManyVariables {
            requested: a.len(),
            max: MAX_VARS,
        });
    }
    Ok(order.cmp(&Monomial::new(a), &Monomial::new(b)))
}

/// All exponent vectors of total degree `deg` in `nvars` variables, in
/// descending lex order.
pub fn monomials_of_degree(nvars: usize, deg: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut exps = vec![0u32; nvars];
    fn rec(i: usize, left: u32, exps: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        let n = exps.len();
        if i + 1 == n {
            exps[i] = left;
            out.push(Monomial::new(exps));
            return;
        }
        for e in (0..=left).rev() {
            exps[i] = e;
            rec(i + 1, left - e, exps, out);
        }
        exps[i] = 0;
    }
    if nvars == 0 {
        if deg == 0 {
            out.push(Monomial::ONE);
        }
        return out;
    }
    rec(0, deg, &mut exps, &mut out);
    out
}
