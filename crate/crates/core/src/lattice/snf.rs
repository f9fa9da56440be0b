//! Smith normal form over the integers with both transforms tracked.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::IntMatrix;

/// `u · m · v = d` with `u`, `v` unimodular and `d` diagonal, `d[i] | d[i+1]`.
#[derive(Clone, Debug)]
pub struct SmithForm {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
}

impl SmithForm {
    /// Diagonal entries of `d`, length `min(rows, cols)`.
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.d.rows().min(self.d.cols())).map(|i| self.d.get(i, i).clone()).collect()
    }
}

struct Work {
    a: Vec<Vec<BigInt>>,
    u: Vec<Vec<BigInt>>,
    v: Vec<Vec<BigInt>>,
}

impl Work {
    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap(i, j);
        self.u.swap(i, j);
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        for row in &mut self.a {
            row.swap(i, j);
        }
        for row in &mut self.v {
            row.swap(i, j);
        }
    }

    /// row_dst += k · row_src
    fn add_row(&mut self, dst: usize, src: usize, k: &BigInt) {
        for mat in [&mut self.a, &mut self.u] {
            let src_row = mat[src].clone();
            for (x, y) in mat[dst].iter_mut().zip(&src_row) {
                *x += k * y;
            }
        }
    }

    /// col_dst += k · col_src
    fn add_col(&mut self, dst: usize, src: usize, k: &BigInt) {
        for mat in [&mut self.a, &mut self.v] {
            for row in mat.iter_mut() {
                let s = row[src].clone();
                row[dst] += k * s;
            }
        }
    }

    fn negate_row(&mut self, i: usize) {
        for mat in [&mut self.a, &mut self.u] {
            for x in mat[i].iter_mut() {
                *x = -&*x;
            }
        }
    }
}

fn to_matrix(rows: Vec<Vec<BigInt>>, r: usize, c: usize) -> IntMatrix {
    IntMatrix::new(r, c, rows.into_iter().flatten().collect())
}

fn identity_rows(n: usize) -> Vec<Vec<BigInt>> {
    let id = IntMatrix::identity(n);
    (0..n).map(|i| id.row(i).to_vec()).collect()
}

pub fn smith_normal_form(m: &IntMatrix) -> SmithForm {
    let (rows, cols) = (m.rows(), m.cols());
    let mut w = Work {
        a: (0..rows).map(|i| m.row(i).to_vec()).collect(),
        u: identity_rows(rows),
        v: identity_rows(cols),
    };

    for t in 0..rows.min(cols) {
        loop {
            // smallest nonzero entry of the trailing block becomes the pivot
            let mut best: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    if w.a[i][j].is_zero() {
                        continue;
                    }
                    if best.map_or(true, |(bi, bj)| w.a[i][j].abs() < w.a[bi][bj].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else {
                return finish(w, rows, cols);
            };
            w.swap_rows(t, pi);
            w.swap_cols(t, pj);

            let mut clean = true;
            for i in t + 1..rows {
                if w.a[i][t].is_zero() {
                    continue;
                }
                let q = w.a[i][t].div_floor(&w.a[t][t]);
                w.add_row(i, t, &-q);
                if !w.a[i][t].is_zero() {
                    clean = false;
                }
            }
            for j in t + 1..cols {
                if w.a[t][j].is_zero() {
                    continue;
                }
                let q = w.a[t][j].div_floor(&w.a[t][t]);
                w.add_col(j, t, &-q);
                if !w.a[t][j].is_zero() {
                    clean = false;
                }
            }
            if !clean {
                continue;
            }
            // pivot must divide the whole trailing block
            let pivot = w.a[t][t].clone();
            let offender = (t + 1..rows)
                .find(|&i| (t + 1..cols).any(|j| !w.a[i][j].is_multiple_of(&pivot)));
            match offender {
                Some(i) => w.add_row(t, i, &BigInt::from(1)),
                None => break,
            }
        }
        if w.a[t][t].is_negative() {
            w.negate_row(t);
        }
    }
    finish(w, rows, cols)
}

fn finish(w: Work, rows: usize, cols: usize) -> SmithForm {
    SmithForm {
        u: to_matrix(w.u, rows, rows),
        d: to_matrix(w.a, rows, cols),
        v: to_matrix(w.v, cols, cols),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn check(m: &IntMatrix) -> SmithForm {
        let s = smith_normal_form(m);
        assert_eq!(&(&s.u * m) * &s.v, s.d);
        assert!(s.d.is_diagonal());
        assert!(s.u.det().abs().is_one());
        assert!(s.v.det().abs().is_one());
        let diag = s.diagonal();
        for pair in diag.windows(2) {
            if !pair[0].is_zero() {
                assert!(pair[1].is_multiple_of(&pair[0]), "{diag:?}");
            } else {
                assert!(pair[1].is_zero());
            }
        }
        s
    }

    #[test]
    fn one_by_one() {
        let s = check(&IntMatrix::from_rows(&[vec![2]]));
        assert_eq!(s.d, IntMatrix::from_rows(&[vec![2]]));
        assert_eq!(s.u, IntMatrix::identity(1));
        assert_eq!(s.v, IntMatrix::identity(1));
        let s = check(&IntMatrix::from_rows(&[vec![0]]));
        assert_eq!(s.d, IntMatrix::from_rows(&[vec![0]]));
    }

    #[test]
    fn two_by_two_example() {
        // hand reduction: [[2,4],[4,2]] -> [[2,4],[0,-6]] -> [[2,0],[0,-6]] -> diag(2,6)
        let s = check(&IntMatrix::from_rows(&[vec![2, 4], vec![4, 2]]));
        assert_eq!(s.diagonal(), vec![BigInt::from(2), BigInt::from(6)]);
    }

    #[test]
    fn coprime_entries_force_unit_pivot() {
        let s = check(&IntMatrix::from_rows(&[vec![2, 0], vec![0, 3]]));
        assert_eq!(s.diagonal(), vec![BigInt::from(1), BigInt::from(6)]);
    }

    #[test]
    fn rectangular_and_rank_deficient() {
        check(&IntMatrix::from_rows(&[vec![1, 2, 3], vec![2, 4, 6]]));
        check(&IntMatrix::from_rows(&[vec![0, 0], vec![0, 4], vec![6, 0]]));
        let s = check(&IntMatrix::zeros(2, 3));
        assert!(s.d.is_zero());
    }
}
