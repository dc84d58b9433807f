//! Kernels of graded maps `S^m -> S^p`, by a Gröbner basis of the graph
//! module under an order that eliminates the target.

use std::sync::Arc;

use crate::error::{AlgebraError, Result};
use crate::field::Field;
use crate::monomial::MonomialOrder;
use crate::poly::{PolyRing, Polynomial};

use super::engine::{self, Budget, Frame, Term, Vector};

/// A homogeneous element of a graded free module: its entries and degree.
#[derive(Clone, Debug, PartialEq)]
pub struct GradedVector<F: Field> {
    pub degree: i64,
    pub entries: Vec<Polynomial<F>>,
}

/// Generators of the kernel of the map sending `e_j` to `columns[j]`.
///
/// `row_degrees[i]` is the degree of the `i`-th target generator and
/// `col_degrees[j]` the degree of `e_j`; each nonzero entry `columns[j][i]`
/// must be homogeneous of degree `col_degrees[j] - row_degrees[i]`. The
/// result is a Gröbner basis of the kernel, not necessarily minimal.
pub fn kernel<F: Field>(
    ring: &Arc<PolyRing<F>>,
    columns: &[Vec<Polynomial<F>>],
    row_degrees: &[i64],
    col_degrees: &[i64],
    budget: &mut Budget,
) -> Result<Vec<GradedVector<F>>> {
    let p = row_degrees.len();
    let m = columns.len();
    if col_degrees.len() != m || columns.iter().any(|c| c.len() != p) {
        return Err(AlgebraError::InvalidInput("matrix shape does not match degrees".into()));
    }
    let field = ring.field();
    let mut shifts: Vec<i64> = row_degrees.to_vec();
    shifts.extend_from_slice(col_degrees);
    let frame = Frame::module(MonomialOrder::Grevlex, shifts, p as u32);
    let mut input = Vec::with_capacity(m);
    for (j, col) in columns.iter().enumerate() {
        let mut terms = Vec::new();
        for (i, f) in col.iter().enumerate() {
            if f.is_zero() {
                continue;
            }
            if f.form_degree().map(|d| d as i64 + row_degrees[i]) != Some(col_degrees[j]) {
                return Err(AlgebraError::InvalidInput(format!(
                    "entry ({i}, {j}) has inconsistent degree"
                )));
            }
            terms.extend(f.terms().iter().map(|(c, mon)| Term {
                coef: c.clone(),
                mon: *mon,
                comp: i as u32,
            }));
        }
        terms.push(Term {
            coef: field.one(),
            mon: crate::monomial::Monomial::ONE,
            comp: (p + j) as u32,
        });
        input.push(Vector::from_terms(field, &frame, terms));
    }
    let gb = engine::buchberger(field, &frame, input, budget)?;
    let mut out = Vec::new();
    for v in gb {
        let lead = v.lead();
        if (lead.comp as usize) < p {
            continue;
        }
        let degree = frame.degree(&lead.mon, lead.comp);
        let mut per: Vec<Vec<(F::Elem, crate::monomial::Monomial)>> = vec![Vec::new(); m];
        for t in &v.terms {
            per[t.comp as usize - p].push((t.coef.clone(), t.mon));
        }
        out.push(GradedVector {
            degree,
            entries: per.into_iter().map(|ts| ring.from_terms(ts)).collect(),
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;

    #[test]
    fn koszul_syzygy() {
        let r = PolyRing::with_vars(PrimeField::default(), 2).unwrap();
        let cols = vec![vec![r.var(0)], vec![r.var(1)]];
        let mut b = Budget::new("test", 1000);
        let k = kernel(&r, &cols, &[0], &[1, 1], &mut b).unwrap();
        assert_eq!(k.len(), 1);
        assert_eq!(k[0].degree, 2);
        // x * s0 + y * s1 = 0
        let s = &k[0].entries;
        assert!((&(&r.var(0) * &s[0]) + &(&r.var(1) * &s[1])).is_zero());
    }

    #[test]
    fn domain_has_no_syzygy() {
        let r = PolyRing::with_vars(PrimeField::default(), 3).unwrap();
        let f = r.parse("x0^2 + x1*x2").unwrap();
        let mut b = Budget::new("test", 1000);
        assert!(kernel(&r, &[vec![f]], &[0], &[2], &mut b).unwrap().is_empty());
    }

    #[test]
    fn rejects_inconsistent_degrees() {
        let r = PolyRing::with_vars(PrimeField::default(), 2).unwrap();
        let mut b = Budget::new("test", 1000);
        assert!(kernel(&r, &[vec![r.var(0)], vec![r.var(1)]], &[0], &[1, 2], &mut b).is_err());
    }
}
