//! Exact row reduction.

use crate::poly::field::Field;

/// Rank of a matrix given as rows, by Gaussian elimination.
pub fn rank<F: Field>(rows: &[Vec<F>]) -> usize {
    let mut m: Vec<Vec<F>> = rows.to_vec();
    let width = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..width {
        let Some(pivot) = (rank..m.len()).find(|r| !m[*r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot);
        let inv = m[rank][col].inv().expect("nonzero pivot");
        let pivot_row: Vec<F> = m[rank].iter().map(|x| x.mul(&inv)).collect();
        for r in (rank + 1)..m.len() {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = m[r][col].clone();
            for (x, p) in m[r].iter_mut().zip(&pivot_row) {
                *x = x.sub(&p.mul(&factor));
            }
        }
        m[rank] = pivot_row;
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::field::Fp;
    use num_rational::BigRational;

    fn q(rows: &[&[i64]]) -> Vec<Vec<BigRational>> {
        rows.iter()
            .map(|r| r.iter().map(|x| BigRational::from_i64(*x, ())).collect())
            .collect()
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank(&q(&[&[1, 2], &[2, 4]])), 1);
        assert_eq!(rank(&q(&[&[1, 2], &[2, 3]])), 2);
        assert_eq!(rank::<BigRational>(&[]), 0);
        assert_eq!(rank(&q(&[&[0, 0, 1], &[0, 1, 0], &[1, 1, 1]])), 3);
        let f2: Vec<Vec<Fp>> = vec![
            vec![Fp::new(1, 2), Fp::new(1, 2)],
            vec![Fp::new(1, 2), Fp::new(-1, 2)],
        ];
        assert_eq!(rank(&f2), 1);
    }
}
