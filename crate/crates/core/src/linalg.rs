//! Dense row reduction over a field.

use crate::field::Field;

/// Rank of `rows` (all of equal length). The matrix is consumed.
pub(crate) fn rank<F: Field>(field: &F, mut rows: Vec<Vec<F::Elem>>) -> usize {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !field.is_zero(&rows[i][c])) else {
            continue;
        };
        rows.swap(r, p);
        let inv = field.inv(&rows[r][c]);
        for v in rows[r].iter_mut().skip(c) {
            *v = field.mul(v, &inv);
        }
        let pivot = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || field.is_zero(&row[c]) {
                continue;
            }
            let k = row[c].clone();
            for (v, pv) in row.iter_mut().zip(&pivot).skip(c) {
                *v = field.sub(v, &field.mul(&k, pv));
            }
        }
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    r
}
