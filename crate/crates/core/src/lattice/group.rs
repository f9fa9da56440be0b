//! Finite abelian groups in invariant-factor form, homomorphisms between
//! them, and cokernels of integer matrices.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use super::{smith_normal_form, IntMatrix, LatticeError};

/// Element of a [`FinAbGroup`]: coordinate `i` lies in `0..d_i`.
pub type Element = Vec<i64>;

/// `ℤ/d₁ ⊕ … ⊕ ℤ/d_k` with `d₁ | d₂ | … | d_k`, every `d_i ≥ 2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FinAbGroup {
    factors: Vec<i64>,
}

impl FinAbGroup {
    pub fn new(factors: Vec<i64>) -> Result<Self, LatticeError> {
        if factors.iter().any(|&d| d < 2) {
            return Err(LatticeError::BadInvariantFactors(factors));
        }
        if factors.windows(2).any(|w| w[1] % w[0] != 0) {
            return Err(LatticeError::BadInvariantFactors(factors));
        }
        Ok(Self { factors })
    }

    pub fn trivial() -> Self {
        Self { factors: Vec::new() }
    }

    pub fn invariant_factors(&self) -> &[i64] {
        &self.factors
    }

    pub fn rank(&self) -> usize {
        self.factors.len()
    }

    pub fn order(&self) -> u128 {
        self.factors.iter().map(|&d| d as u128).product()
    }

    pub fn is_cyclic(&self) -> bool {
        self.factors.len() <= 1
    }

    pub fn zero(&self) -> Element {
        vec![0; self.factors.len()]
    }

    pub fn reduce(&self, v: &[i64]) -> Element {
        v.iter().zip(&self.factors).map(|(&x, &d)| x.rem_euclid(d)).collect()
    }

    pub fn contains(&self, v: &[i64]) -> bool {
        v.len() == self.factors.len() && v.iter().zip(&self.factors).all(|(&x, &d)| (0..d).contains(&x))
    }

    pub fn add(&self, a: &[i64], b: &[i64]) -> Element {
        a.iter()
            .zip(b)
            .zip(&self.factors)
            .map(|((&x, &y), &d)| (x + y).rem_euclid(d))
            .collect()
    }

    pub fn neg(&self, a: &[i64]) -> Element {
        a.iter().zip(&self.factors).map(|(&x, &d)| (-x).rem_euclid(d)).collect()
    }

    pub fn scalar(&self, k: i64, a: &[i64]) -> Element {
        a.iter()
            .zip(&self.factors)
            .map(|(&x, &d)| ((k as i128 * x as i128).rem_euclid(d as i128)) as i64)
            .collect()
    }

    /// Order of an element.
    pub fn element_order(&self, a: &[i64]) -> i64 {
        a.iter()
            .zip(&self.factors)
            .map(|(&x, &d)| d / x.gcd(&d))
            .fold(1, |acc, o| acc.lcm(&o))
    }

    /// Element with the given position in canonical (lexicographic) order.
    pub fn element_at(&self, mut index: u128) -> Element {
        let mut out = vec![0; self.factors.len()];
        for (slot, &d) in out.iter_mut().zip(&self.factors).rev() {
            *slot = (index % d as u128) as i64;
            index /= d as u128;
        }
        out
    }

    pub fn index_of(&self, a: &[i64]) -> u128 {
        a.iter().zip(&self.factors).fold(0u128, |acc, (&x, &d)| acc * d as u128 + x as u128)
    }

    pub fn elements(&self) -> impl Iterator<Item = Element> + '_ {
        (0..self.order()).map(|i| self.element_at(i))
    }
}

/// Homomorphism between finite abelian groups; column `j` is the image of
/// the `j`-th generator of the domain.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AbHom {
    domain: FinAbGroup,
    codomain: FinAbGroup,
    /// `codomain.rank() × domain.rank()`, row-major, reduced.
    matrix: Vec<i64>,
}

impl AbHom {
    pub fn new(domain: FinAbGroup, codomain: FinAbGroup, columns: Vec<Element>) -> Result<Self, LatticeError> {
        if columns.len() != domain.rank() || columns.iter().any(|c| c.len() != codomain.rank()) {
            return Err(LatticeError::DimensionMismatch);
        }
        let (r, c) = (codomain.rank(), domain.rank());
        let mut matrix = vec![0; r * c];
        for (j, col) in columns.iter().enumerate() {
            let col = codomain.reduce(col);
            for i in 0..r {
                matrix[i * c + j] = col[i];
            }
        }
        let hom = Self { domain, codomain, matrix };
        if !hom.is_well_defined() {
            return Err(LatticeError::IllDefinedHom);
        }
        Ok(hom)
    }

    pub fn identity(g: &FinAbGroup) -> Self {
        let n = g.rank();
        let mut matrix = vec![0; n * n];
        for i in 0..n {
            matrix[i * n + i] = 1;
        }
        Self { domain: g.clone(), codomain: g.clone(), matrix }
    }

    pub fn multiplication(g: &FinAbGroup, k: i64) -> Self {
        let n = g.rank();
        let mut matrix = vec![0; n * n];
        for i in 0..n {
            matrix[i * n + i] = k.rem_euclid(g.invariant_factors()[i]);
        }
        Self { domain: g.clone(), codomain: g.clone(), matrix }
    }

    pub fn domain(&self) -> &FinAbGroup {
        &self.domain
    }

    pub fn codomain(&self) -> &FinAbGroup {
        &self.codomain
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.matrix[i * self.domain.rank() + j]
    }

    pub fn column(&self, j: usize) -> Element {
        (0..self.codomain.rank()).map(|i| self.entry(i, j)).collect()
    }

    /// The image of `d_j · e_j` must vanish for every domain generator.
    pub fn is_well_defined(&self) -> bool {
        let dom = self.domain.invariant_factors();
        (0..self.domain.rank()).all(|j| {
            let col = self.column(j);
            self.codomain.scalar(dom[j], &col).iter().all(|&x| x == 0)
        })
    }

    pub fn apply(&self, v: &[i64]) -> Element {
        let c = self.domain.rank();
        self.codomain
            .invariant_factors()
            .iter()
            .enumerate()
            .map(|(i, &d)| {
                let row = &self.matrix[i * c..(i + 1) * c];
                let s: i128 = row.iter().zip(v).map(|(&a, &x)| a as i128 * x as i128).sum();
                s.rem_euclid(d as i128) as i64
            })
            .collect()
    }

    /// `self ∘ inner`
    pub fn compose(&self, inner: &AbHom) -> Result<AbHom, LatticeError> {
        if inner.codomain != self.domain {
            return Err(LatticeError::DimensionMismatch);
        }
        let columns = (0..inner.domain.rank()).map(|j| self.apply(&inner.column(j))).collect();
        AbHom::new(inner.domain.clone(), self.codomain.clone(), columns)
    }

    pub fn is_identity(&self) -> bool {
        self.domain == self.codomain && *self == AbHom::identity(&self.domain)
    }
}

/// `ℤⁿ / M·ℤⁿ` for a nonsingular square `M`, with the projection from ℤⁿ.
#[derive(Clone, Debug)]
pub struct Cokernel {
    relations: IntMatrix,
    group: FinAbGroup,
    /// Rows of the left Smith transform that survive (invariant factor ≠ 1).
    proj_rows: IntMatrix,
    /// Columns of the inverse left transform for the same indices: lifts of generators.
    lifts: IntMatrix,
}

impl Cokernel {
    pub fn group(&self) -> &FinAbGroup {
        &self.group
    }

    pub fn relations(&self) -> &IntMatrix {
        &self.relations
    }

    pub fn project(&self, x: &[BigInt]) -> Element {
        let y = self.proj_rows.mul_vec(x);
        y.iter()
            .zip(self.group.invariant_factors())
            .map(|(v, &d)| v.mod_floor(&BigInt::from(d)).to_i64().expect("reduced below d"))
            .collect()
    }

    pub fn project_i64(&self, x: &[i64]) -> Element {
        let big: Vec<BigInt> = x.iter().map(|&v| BigInt::from(v)).collect();
        self.project(&big)
    }

    /// A lattice vector mapping onto generator `j`.
    pub fn lift_generator(&self, j: usize) -> Vec<BigInt> {
        self.lifts.column(j)
    }

    /// A lattice vector mapping onto `v`.
    pub fn lift(&self, v: &[i64]) -> Vec<BigInt> {
        let n = self.relations.rows();
        let mut out = vec![BigInt::zero(); n];
        for (j, &c) in v.iter().enumerate() {
            let col = self.lifts.column(j);
            for (o, x) in out.iter_mut().zip(col) {
                *o += x * c;
            }
        }
        out
    }
}

pub fn cokernel(m: &IntMatrix) -> Result<Cokernel, LatticeError> {
    if !m.is_square() {
        return Err(LatticeError::DimensionMismatch);
    }
    if m.det().is_zero() {
        return Err(LatticeError::SingularMatrix);
    }
    let snf = smith_normal_form(m);
    let u_inv = snf.u.unimodular_inverse().expect("left transform is unimodular");
    let n = m.rows();
    let keep: Vec<usize> = (0..n).filter(|&i| !snf.d.get(i, i).is_one()).collect();
    let mut factors = Vec::with_capacity(keep.len());
    for &i in &keep {
        let d = snf.d.get(i, i).to_i64().ok_or(LatticeError::GroupTooLarge)?;
        factors.push(d);
    }
    let group = FinAbGroup::new(factors)?;
    let proj_rows = IntMatrix::new(keep.len(), n, keep.iter().flat_map(|&i| snf.u.row(i).to_vec()).collect());
    let mut lifts = IntMatrix::zeros(n, keep.len());
    for (j, &i) in keep.iter().enumerate() {
        for r in 0..n {
            lifts.set(r, j, u_inv.get(r, i).clone());
        }
    }
    Ok(Cokernel { relations: m.clone(), group, proj_rows, lifts })
}

/// Endomorphism of the cokernel induced by a lattice map `a` that preserves
/// the relation lattice `M·ℤⁿ`.
pub fn induce_endomorphism(a: &IntMatrix, coker: &Cokernel) -> Result<AbHom, LatticeError> {
    let m = coker.relations();
    if a.rows() != m.rows() || !a.is_square() {
        return Err(LatticeError::DimensionMismatch);
    }
    // M⁻¹·A·M integral ⇔ A(Mℤⁿ) ⊆ Mℤⁿ
    if m.exact_left_divide(&(a * m)).is_none() {
        return Err(LatticeError::DoesNotDescend);
    }
    let g = coker.group();
    let columns = (0..g.rank()).map(|j| coker.project(&a.mul_vec(&coker.lift_generator(j)))).collect();
    AbHom::new(g.clone(), g.clone(), columns)
}
