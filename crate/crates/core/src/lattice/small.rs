use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;

use super::IntMatrix;

/// Small square integer matrix used for Weyl group elements and other
/// lattice automorphisms; entries stay tiny so `i64` is ample.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SquareMat {
    n: usize,
    data: Vec<i64>,
}

impl SquareMat {
    pub fn new(n: usize, data: Vec<i64>) -> Self {
        assert_eq!(data.len(), n * n);
        Self { n, data }
    }

    pub fn identity(n: usize) -> Self {
        let mut data = vec![0; n * n];
        for i in 0..n {
            data[i * n + i] = 1;
        }
        Self { n, data }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.n + j]
    }

    pub fn data(&self) -> &[i64] {
        &self.data
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.data.chunks(self.n.max(1)).map(<[i64]>::to_vec).collect()
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.n)
    }

    pub fn scale(&self, k: i64) -> Self {
        Self::new(self.n, self.data.iter().map(|x| x * k).collect())
    }

    pub fn sub_identity(&self) -> Self {
        let mut out = self.clone();
        for i in 0..self.n {
            out.data[i * self.n + i] -= 1;
        }
        out
    }

    pub fn neg(&self) -> Self {
        self.scale(-1)
    }

    pub fn apply(&self, v: &[i64]) -> Vec<i64> {
        (0..self.n).map(|i| (0..self.n).map(|j| self.get(i, j) * v[j]).sum()).collect()
    }

    pub fn trace(&self) -> i64 {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::identity(self.n);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Multiplicative order, if finite and at most `limit`.
    pub fn order(&self, limit: u32) -> Option<u32> {
        let mut p = self.clone();
        for k in 1..=limit {
            if p.is_identity() {
                return Some(k);
            }
            p = &p * self;
        }
        None
    }

    /// Exact inverse when the matrix is unimodular.
    pub fn inverse(&self) -> Option<Self> {
        IntMatrix::from(self).unimodular_inverse().and_then(|m| Self::try_from(&m).ok())
    }

    pub fn to_int_matrix(&self) -> IntMatrix {
        IntMatrix::from(self)
    }
}

impl Mul for &SquareMat {
    type Output = SquareMat;
    fn mul(self, rhs: &SquareMat) -> SquareMat {
        assert_eq!(self.n, rhs.n);
        let n = self.n;
        let mut data = vec![0i64; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.data[i * n + k];
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    data[i * n + j] += a * rhs.data[k * n + j];
                }
            }
        }
        SquareMat { n, data }
    }
}

impl From<&SquareMat> for IntMatrix {
    fn from(m: &SquareMat) -> Self {
        IntMatrix::new(m.n, m.n, m.data.iter().map(|&x| BigInt::from(x)).collect())
    }
}

impl TryFrom<&IntMatrix> for SquareMat {
    type Error = ();
    fn try_from(m: &IntMatrix) -> Result<Self, ()> {
        if !m.is_square() {
            return Err(());
        }
        Ok(SquareMat::new(m.rows(), m.to_i64().ok_or(())?))
    }
}

impl fmt::Debug for SquareMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows()
            .iter()
            .map(|r| r.iter().map(ToString::to_string).collect::<Vec<_>>().join(" "))
            .collect();
        write!(f, "[{}]", rows.join("; "))
    }
}
