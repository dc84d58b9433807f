//! Dense Gaussian elimination over a coefficient field.

use crate::field::Field;

/// Rank of a dense matrix (rows of equal length).
pub fn rank<F: Field>(field: &F, mut rows: Vec<Vec<F::Elem>>) -> usize {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..rows.len()).find(|&r| !field.is_zero(&rows[r][col])) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = field.inv(&rows[rank][col]).expect("nonzero pivot");
        let prow: Vec<F::Elem> = rows[rank].iter().map(|x| field.mul(x, &inv)).collect();
        for r in rank + 1..rows.len() {
            if field.is_zero(&rows[r][col]) {
                continue;
            }
            let factor = rows[r][col].clone();
            for (x, p) in rows[r].iter_mut().zip(&prow).skip(col) {
                *x = field.sub_mul(x, &factor, p);
            }
        }
        rows[rank] = prow;
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}
