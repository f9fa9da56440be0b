use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Dense integer matrix with arbitrary-precision entries, row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<BigInt>) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count must equal rows*cols");
        Self { rows, cols, entries }
    }

    pub fn from_i64(rows: usize, cols: usize, entries: &[i64]) -> Self {
        Self::new(rows, cols, entries.iter().map(|&x| BigInt::from(x)).collect())
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let flat: Vec<i64> = rows.iter().flat_map(|row| {
            assert_eq!(row.len(), c, "ragged rows");
            row.iter().copied()
        }).collect();
        Self::from_i64(r, c, &flat)
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self::new(rows, cols, vec![BigInt::zero(); rows * cols])
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.entries[i * n + i] = BigInt::one();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: BigInt) {
        self.entries[i * self.cols + j] = value;
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        Self::new(self.rows, self.cols, self.entries.iter().map(|x| x * k).collect())
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self.get(i, j).is_zero()))
    }

    /// Entries as `i64`, if they all fit.
    pub fn to_i64(&self) -> Option<Vec<i64>> {
        self.entries.iter().map(ToPrimitive::to_i64).collect()
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> BigInt {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut a: Vec<Vec<BigInt>> = (0..n).map(|i| self.row(i).to_vec()).collect();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                    return BigInt::zero();
                };
                a.swap(k, p);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                    a[i][j] = num / &prev;
                }
                a[i][k] = BigInt::zero();
            }
            prev = a[k][k].clone();
        }
        sign * &a[n - 1][n - 1]
    }

    fn minor(&self, skip_row: usize, skip_col: usize) -> Self {
        let mut entries = Vec::with_capacity((self.rows - 1) * (self.cols - 1));
        for i in (0..self.rows).filter(|&i| i != skip_row) {
            for j in (0..self.cols).filter(|&j| j != skip_col) {
                entries.push(self.get(i, j).clone());
            }
        }
        Self::new(self.rows - 1, self.cols - 1, entries)
    }

    /// Classical adjugate, so that `adj(M)·M = det(M)·I`.
    pub fn adjugate(&self) -> Self {
        assert!(self.is_square());
        let n = self.rows;
        if n == 1 {
            return Self::identity(1);
        }
        let mut adj = Self::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                let c = self.minor(i, j).det();
                let c = if (i + j) % 2 == 0 { c } else { -c };
                adj.set(j, i, c);
            }
        }
        adj
    }

    /// Exact inverse of a unimodular matrix.
    pub fn unimodular_inverse(&self) -> Option<Self> {
        let d = self.det();
        if d.is_one() {
            Some(self.adjugate())
        } else if (-&d).is_one() {
            Some(-self.adjugate())
        } else {
            None
        }
    }

    /// `self⁻¹ · other` when it is integral, `None` otherwise (including singular `self`).
    pub fn exact_left_divide(&self, other: &Self) -> Option<Self> {
        let d = self.det();
        if d.is_zero() {
            return None;
        }
        let num = &self.adjugate() * other;
        let mut out = Vec::with_capacity(num.entries.len());
        for x in &num.entries {
            let (q, r) = x.div_rem(&d);
            if !r.is_zero() {
                return None;
            }
            out.push(q);
        }
        Some(Self::new(num.rows, num.cols, out))
    }

    pub fn max_abs(&self) -> BigInt {
        self.entries.iter().map(Signed::abs).max().unwrap_or_default()
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            write!(f, "{}", row.join(" "))?;
        }
        write!(f, "]")
    }
}

impl Mul for &IntMatrix {
    type Output = IntMatrix;
    fn mul(self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in product");
        let mut out = IntMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let idx = i * rhs.cols + j;
                    out.entries[idx] += a * rhs.get(k, j);
                }
            }
        }
        out
    }
}

impl Add for &IntMatrix {
    type Output = IntMatrix;
    fn add(self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        IntMatrix::new(self.rows, self.cols, self.entries.iter().zip(&rhs.entries).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &IntMatrix {
    type Output = IntMatrix;
    fn sub(self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        IntMatrix::new(self.rows, self.cols, self.entries.iter().zip(&rhs.entries).map(|(a, b)| a - b).collect())
    }
}

impl Neg for IntMatrix {
    type Output = IntMatrix;
    fn neg(self) -> IntMatrix {
        IntMatrix::new(self.rows, self.cols, self.entries.into_iter().map(|x| -x).collect())
    }
}
