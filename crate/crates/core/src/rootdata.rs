//! Based root data for the irreducible types, realised on an explicit
//! character lattice `X` with `Q ⊆ X ⊆ P`.
//!
//! Coordinates: the weight lattice `P` is written in the basis of
//! fundamental weights; a simple root `α_j` has coordinates given by column
//! `j` of the Cartan matrix `a_ij = ⟨α_i^∨, α_j⟩`. The lattice `X` is carried
//! by a basis matrix whose columns are weight coordinates, and every
//! operator (reflections, the diagram automorphism `σ₀`) is expressed in
//! that basis.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::lattice::{smith_normal_form, IntMatrix, SquareMat};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RootDataError {
    #[error("unsupported type {0}")]
    UnsupportedType(String),
    #[error("twist of order {twist} is not supported for type {label}")]
    UnsupportedTwist { label: String, twist: u8 },
    #[error("sublattice is not stable under {0}")]
    LatticeNotStable(&'static str),
    #[error("sublattice must have full rank and contain the root lattice")]
    BadSublattice,
    #[error("invalid group spec: {0}")]
    Spec(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    fn from_letter(c: char) -> Option<Self> {
        Some(match c.to_ascii_uppercase() {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'E' => Family::E,
            'F' => Family::F,
            'G' => Family::G,
            _ => return None,
        })
    }
}

/// Absolute type of an irreducible root system.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CartanType {
    family: Family,
    rank: usize,
}

impl CartanType {
    pub fn new(family: Family, rank: usize) -> Result<Self, RootDataError> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(Self { family, rank })
        } else {
            Err(RootDataError::UnsupportedType(format!("{}{}", family.letter(), rank)))
        }
    }

    pub fn family(self) -> Family {
        self.family
    }

    pub fn rank(self) -> usize {
        self.rank
    }

    pub fn is_simply_laced(self) -> bool {
        matches!(self.family, Family::A | Family::D | Family::E)
    }

    /// `A_n` with `n` even.
    pub fn is_a_even(self) -> bool {
        self.family == Family::A && self.rank % 2 == 0
    }

    /// Orders of the diagram automorphisms usable as twists.
    pub fn allowed_twists(self) -> &'static [u8] {
        match (self.family, self.rank) {
            (Family::A, n) if n >= 2 => &[1, 2],
            (Family::D, 4) => &[1, 2, 3],
            (Family::D, _) => &[1, 2],
            (Family::E, 6) => &[1, 2],
            _ => &[1],
        }
    }

    pub fn cartan_matrix(self) -> Vec<Vec<i64>> {
        let n = self.rank;
        let mut a = vec![vec![0i64; n]; n];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = 2;
        }
        let mut link = |i: usize, j: usize, aij: i64, aji: i64| {
            a[i][j] = aij;
            a[j][i] = aji;
        };
        match self.family {
            Family::A => (0..n - 1).for_each(|i| link(i, i + 1, -1, -1)),
            Family::B => {
                (0..n - 2).for_each(|i| link(i, i + 1, -1, -1));
                // α_n short: ⟨α_{n-1}^∨, α_n⟩ = -1, ⟨α_n^∨, α_{n-1}⟩ = -2
                link(n - 2, n - 1, -1, -2);
            }
            Family::C => {
                (0..n - 2).for_each(|i| link(i, i + 1, -1, -1));
                // α_n long
                link(n - 2, n - 1, -2, -1);
            }
            Family::D => {
                (0..n - 2).for_each(|i| link(i, i + 1, -1, -1));
                link(n - 3, n - 1, -1, -1);
            }
            Family::E => {
                // Bourbaki numbering: 1-3-4-5-6(-7-8), 2 attached to 4
                link(0, 2, -1, -1);
                link(1, 3, -1, -1);
                (2..n - 1).for_each(|i| link(i, i + 1, -1, -1));
            }
            Family::F => {
                link(0, 1, -1, -1);
                link(1, 2, -1, -2);
                link(2, 3, -1, -1);
            }
            Family::G => link(0, 1, -1, -3),
        }
        a
    }

    pub fn weyl_order(self) -> u128 {
        let n = self.rank as u128;
        let fact = |k: u128| (1..=k).product::<u128>();
        match self.family {
            Family::A => fact(n + 1),
            Family::B | Family::C => (1u128 << n) * fact(n),
            Family::D => (1u128 << (n - 1)) * fact(n),
            Family::E => match self.rank {
                6 => 51_840,
                7 => 2_903_040,
                _ => 696_729_600,
            },
            Family::F => 1152,
            Family::G => 12,
        }
    }

    pub fn coxeter_number(self) -> u32 {
        let n = self.rank as u32;
        match self.family {
            Family::A => n + 1,
            Family::B | Family::C => 2 * n,
            Family::D => 2 * n - 2,
            Family::E => match n {
                6 => 12,
                7 => 18,
                _ => 30,
            },
            Family::F => 12,
            Family::G => 6,
        }
    }

    /// `[P:Q]`, the order of the centre of the simply connected group.
    pub fn center_order(self) -> u64 {
        match self.family {
            Family::A => self.rank as u64 + 1,
            Family::B | Family::C => 2,
            Family::D => 4,
            Family::E => match self.rank {
                6 => 3,
                7 => 2,
                _ => 1,
            },
            Family::F | Family::G => 1,
        }
    }

    /// Node permutation of the diagram automorphism of the given order.
    pub fn diagram_permutation(self, twist: u8) -> Result<Vec<usize>, RootDataError> {
        let n = self.rank;
        if !self.allowed_twists().contains(&twist) {
            return Err(RootDataError::UnsupportedTwist { label: self.to_string(), twist });
        }
        let mut perm: Vec<usize> = (0..n).collect();
        match (self.family, twist) {
            (_, 1) => {}
            (Family::A, 2) => perm.reverse(),
            (Family::D, 2) => perm.swap(n - 2, n - 1),
            (Family::D, 3) => {
                // triality on the three outer nodes 1 → 3 → 4 → 1
                perm[0] = 2;
                perm[2] = 3;
                perm[3] = 0;
            }
            (Family::E, 2) => {
                perm.swap(0, 5);
                perm.swap(2, 4);
            }
            _ => unreachable!("checked against allowed_twists"),
        }
        Ok(perm)
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

/// A type together with the order of its twist, written `A2`, `2A3`, `3D4`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TwistedType {
    pub cartan: CartanType,
    pub twist: u8,
}

impl TwistedType {
    pub fn new(cartan: CartanType, twist: u8) -> Result<Self, RootDataError> {
        cartan.diagram_permutation(twist)?;
        Ok(Self { cartan, twist })
    }

    pub fn split(cartan: CartanType) -> Self {
        Self { cartan, twist: 1 }
    }

    /// Inner form of split `A_n` with `n` even.
    pub fn is_a_even(self) -> bool {
        self.twist == 1 && self.cartan.is_a_even()
    }

    /// `²A_k` for some `k`.
    pub fn unitary_rank(self) -> Option<usize> {
        (self.twist == 2 && self.cartan.family == Family::A).then_some(self.cartan.rank)
    }
}

impl fmt::Display for TwistedType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.twist > 1 {
            write!(f, "{}{}", self.twist, self.cartan)
        } else {
            write!(f, "{}", self.cartan)
        }
    }
}

impl FromStr for TwistedType {
    type Err = RootDataError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || RootDataError::UnsupportedType(s.to_string());
        let s = s.trim();
        let (twist, rest) = match s.chars().next() {
            Some(c @ ('2' | '3')) => (c.to_digit(10).unwrap() as u8, &s[1..]),
            _ => (1, s),
        };
        let mut chars = rest.chars();
        let family = chars.next().and_then(Family::from_letter).ok_or_else(bad)?;
        let rank: usize = chars.as_str().parse().map_err(|_| bad())?;
        TwistedType::new(CartanType::new(family, rank)?, twist)
    }
}

/// Choice of character lattice between the root and weight lattices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Isogeny {
    #[default]
    #[serde(alias = "sc")]
    SimplyConnected,
    #[serde(alias = "ad")]
    Adjoint,
    /// Generators of `X`, in fundamental-weight coordinates.
    Sublattice(Vec<Vec<i64>>),
}

#[derive(Clone, Debug)]
pub struct RootDatum {
    ty: TwistedType,
    isogeny: Isogeny,
    cartan: Vec<Vec<i64>>,
    /// Columns: basis of `X` in weight coordinates.
    basis: IntMatrix,
    reflections: Vec<SquareMat>,
    sigma: SquareMat,
    node_perm: Vec<usize>,
}

impl RootDatum {
    pub fn twisted_type(&self) -> TwistedType {
        self.ty
    }

    pub fn cartan_type(&self) -> CartanType {
        self.ty.cartan
    }

    pub fn twist(&self) -> u8 {
        self.ty.twist
    }

    pub fn isogeny(&self) -> &Isogeny {
        &self.isogeny
    }

    pub fn rank(&self) -> usize {
        self.ty.cartan.rank
    }

    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn basis(&self) -> &IntMatrix {
        &self.basis
    }

    pub fn simple_reflections(&self) -> &[SquareMat] {
        &self.reflections
    }

    /// The diagram automorphism `σ₀` acting on `X`.
    pub fn sigma(&self) -> &SquareMat {
        &self.sigma
    }

    pub fn node_permutation(&self) -> &[usize] {
        &self.node_perm
    }

    /// Order of the centre of the simply connected form, `[P:Q]`.
    pub fn center_order(&self) -> u64 {
        self.ty.cartan.center_order()
    }

    /// `[X:Q]`, the order of the centre of the group with this character lattice.
    pub fn own_center_order(&self) -> u64 {
        let cartan = IntMatrix::from_rows(&self.cartan);
        let q_index = cartan.det().to_u64().expect("positive Cartan determinant");
        let x_index = self.basis.det().magnitude().to_u64().expect("small index");
        q_index / x_index
    }

    /// Product of one simple reflection per `σ₀`-orbit of nodes, orbits taken
    /// in order of their smallest node.
    pub fn twisted_coxeter_element(&self) -> SquareMat {
        let n = self.rank();
        let mut seen = vec![false; n];
        let mut acc = SquareMat::identity(n);
        for i in 0..n {
            if seen[i] {
                continue;
            }
            let mut j = i;
            while !seen[j] {
                seen[j] = true;
                j = self.node_perm[j];
            }
            acc = &acc * &self.reflections[i];
        }
        acc
    }

    /// Order of `σ₀ ∘ ω_cox` on `X`.
    pub fn twisted_coxeter_number(&self) -> u32 {
        let w = &self.sigma * &self.twisted_coxeter_element();
        w.order(1000).expect("finite order")
    }
}

fn to_square(m: &IntMatrix) -> SquareMat {
    SquareMat::try_from(m).expect("small integral matrix")
}

/// Basis (as columns) of the lattice spanned by the given generators.
fn lattice_basis(n: usize, generators: &[Vec<i64>]) -> Result<IntMatrix, RootDataError> {
    if generators.is_empty() || generators.iter().any(|g| g.len() != n) {
        return Err(RootDataError::BadSublattice);
    }
    let cols: Vec<i64> = (0..n).flat_map(|i| generators.iter().map(move |g| g[i])).collect();
    let g = IntMatrix::from_i64(n, generators.len(), &cols);
    let snf = smith_normal_form(&g);
    let u_inv = snf.u.unimodular_inverse().expect("unimodular");
    let mut basis = IntMatrix::zeros(n, n);
    for i in 0..n {
        let d = if i < g.cols() { snf.d.get(i, i).clone() } else { Zero::zero() };
        if d.is_zero() {
            return Err(RootDataError::BadSublattice);
        }
        for r in 0..n {
            basis.set(r, i, u_inv.get(r, i) * &d);
        }
    }
    Ok(basis)
}

pub fn build_root_datum(ty: TwistedType, isogeny: Isogeny) -> Result<RootDatum, RootDataError> {
    let cartan_type = ty.cartan;
    let n = cartan_type.rank;
    let cartan = cartan_type.cartan_matrix();
    let node_perm = cartan_type.diagram_permutation(ty.twist)?;
    let a = IntMatrix::from_rows(&cartan);

    let basis = match &isogeny {
        Isogeny::SimplyConnected => IntMatrix::identity(n),
        Isogeny::Adjoint => a.clone(),
        Isogeny::Sublattice(gens) => {
            let b = lattice_basis(n, gens)?;
            if b.exact_left_divide(&a).is_none() {
                return Err(RootDataError::BadSublattice);
            }
            b
        }
    };

    // operators on P in weight coordinates
    let weight_reflections: Vec<IntMatrix> = (0..n)
        .map(|i| {
            let mut s = IntMatrix::identity(n);
            for r in 0..n {
                let v = s.get(r, i) - cartan[r][i];
                s.set(r, i, v);
            }
            s
        })
        .collect();
    let mut perm_matrix = IntMatrix::zeros(n, n);
    for (i, &j) in node_perm.iter().enumerate() {
        perm_matrix.set(j, i, One::one());
    }

    let conjugate = |m: &IntMatrix, what: &'static str| -> Result<SquareMat, RootDataError> {
        basis
            .exact_left_divide(&(m * &basis))
            .map(|x| to_square(&x))
            .ok_or(RootDataError::LatticeNotStable(what))
    };
    let reflections = weight_reflections
        .iter()
        .map(|s| conjugate(s, "the Weyl group"))
        .collect::<Result<Vec<_>, _>>()?;
    let sigma = conjugate(&perm_matrix, "the diagram automorphism")?;

    Ok(RootDatum { ty, isogeny, cartan, basis, reflections, sigma, node_perm })
}

fn default_twist() -> u8 {
    1
}

fn default_degree() -> u32 {
    1
}

/// One almost-simple factor `Res_{E_i/𝔣} G_i` of a group specification.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorSpec {
    #[serde(rename = "type")]
    pub family: Family,
    pub rank: usize,
    #[serde(default = "default_twist")]
    pub twist: u8,
    #[serde(default)]
    pub isogeny: Isogeny,
    /// `[E_i : 𝔣]`; the factor is seen over a field of size `q^scalars_degree`.
    #[serde(default = "default_degree")]
    pub scalars_degree: u32,
}

impl FactorSpec {
    pub fn new(ty: TwistedType, isogeny: Isogeny) -> Self {
        Self { family: ty.cartan.family, rank: ty.cartan.rank, twist: ty.twist, isogeny, scalars_degree: 1 }
    }

    pub fn twisted_type(&self) -> Result<TwistedType, RootDataError> {
        TwistedType::new(CartanType::new(self.family, self.rank)?, self.twist)
    }
}

/// A finite reductive group given factor by factor over `𝔽_q`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupSpec {
    pub q: u64,
    pub factors: Vec<FactorSpec>,
}

impl GroupSpec {
    pub fn single(ty: TwistedType, isogeny: Isogeny, q: u64) -> Self {
        Self { q, factors: vec![FactorSpec::new(ty, isogeny)] }
    }

    pub fn validate(&self) -> Result<(), RootDataError> {
        if self.q < 2 {
            return Err(RootDataError::Spec(format!("field size q = {} must be at least 2", self.q)));
        }
        if num_prime::nt_funcs::factorize64(self.q).len() != 1 {
            return Err(RootDataError::Spec(format!("field size q = {} is not a prime power", self.q)));
        }
        for f in &self.factors {
            f.twisted_type()?;
            if f.scalars_degree == 0 {
                return Err(RootDataError::Spec("scalars_degree must be positive".into()));
            }
            self.effective_q(f)?;
        }
        Ok(())
    }

    /// `q_i = q^{n_i}`.
    pub fn effective_q(&self, f: &FactorSpec) -> Result<u64, RootDataError> {
        self.q
            .checked_pow(f.scalars_degree)
            .ok_or_else(|| RootDataError::Spec("effective field size overflows".into()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ty(s: &str) -> TwistedType {
        s.parse().unwrap()
    }

    #[test]
    fn parse_labels() {
        assert_eq!(ty("2A3").to_string(), "2A3");
        assert_eq!(ty("g2").to_string(), "G2");
        assert!("2B3".parse::<TwistedType>().is_err());
        assert!("2A1".parse::<TwistedType>().is_err());
        assert!("D3".parse::<TwistedType>().is_err());
        assert!("3D4".parse::<TwistedType>().is_ok());
    }

    #[test]
    fn a1_reflection_is_minus_one() {
        let rd = build_root_datum(ty("A1"), Isogeny::SimplyConnected).unwrap();
        assert_eq!(rd.rank(), 1);
        assert_eq!(rd.simple_reflections()[0], SquareMat::new(1, vec![-1]));
    }

    #[test]
    fn reflections_are_involutions_and_sigma_normalizes() {
        for s in ["A3", "2A4", "B3", "C3", "D4", "2D4", "3D4", "2D5", "G2", "F4", "E6", "2E6", "E7"] {
            for iso in [Isogeny::SimplyConnected, Isogeny::Adjoint] {
                let rd = build_root_datum(ty(s), iso).unwrap();
                let n = rd.rank();
                for r in rd.simple_reflections() {
                    assert!((r * r).is_identity());
                }
                let sig = rd.sigma();
                let sig_inv = sig.inverse().unwrap();
                for (i, r) in rd.simple_reflections().iter().enumerate() {
                    let conj = &(sig * r) * &sig_inv;
                    assert_eq!(conj, rd.simple_reflections()[rd.node_permutation()[i]], "{s}");
                }
                assert!(sig.pow(rd.twist() as u32).is_identity());
                assert_eq!(sig.dim(), n);
            }
        }
    }

    #[test]
    fn center_orders() {
        let det = |s: &str| IntMatrix::from_rows(&ty(s).cartan.cartan_matrix()).det();
        for s in ["A1", "A4", "B3", "C4", "D5", "E6", "E7", "E8", "F4", "G2"] {
            let rd = build_root_datum(ty(s), Isogeny::SimplyConnected).unwrap();
            assert_eq!(det(s), rd.center_order().into(), "{s}");
            assert_eq!(rd.own_center_order(), rd.center_order());
            let ad = build_root_datum(ty(s), Isogeny::Adjoint).unwrap();
            assert_eq!(ad.own_center_order(), 1);
        }
        assert_eq!(build_root_datum(ty("E6"), Isogeny::SimplyConnected).unwrap().center_order(), 3);
    }

    #[test]
    fn coxeter_numbers_split() {
        for s in ["A1", "A2", "A5", "B2", "B4", "C3", "D4", "D5", "G2", "F4", "E6", "E7"] {
            let rd = build_root_datum(ty(s), Isogeny::SimplyConnected).unwrap();
            assert_eq!(rd.twisted_coxeter_number(), rd.cartan_type().coxeter_number(), "{s}");
        }
    }

    #[test]
    fn twisted_coxeter_numbers() {
        let h = |s: &str| build_root_datum(ty(s), Isogeny::SimplyConnected).unwrap().twisted_coxeter_number();
        assert_eq!(h("2A2"), 6);
        assert_eq!(h("2A3"), 6);
        assert_eq!(h("2A4"), 10);
        assert_eq!(h("2D4"), 8);
        assert_eq!(h("3D4"), 12);
        assert_eq!(h("2E6"), 18);
    }

    #[test]
    fn custom_sublattice() {
        // SL4 weight lattice P ⊃ X ⊃ Q with [X:Q] = 2: spanned by Q and 2ϖ₁
        let a3 = ty("A3");
        let mut gens = a3.cartan.cartan_matrix();
        gens = (0..3).map(|j| gens.iter().map(|r| r[j]).collect()).collect();
        gens.push(vec![2, 0, 0]);
        let rd = build_root_datum(a3, Isogeny::Sublattice(gens.clone())).unwrap();
        assert_eq!(rd.own_center_order(), 2);
        // the same sublattice is stable under the unitary twist
        assert!(build_root_datum(ty("2A3"), Isogeny::Sublattice(gens)).is_ok());
        // ϖ₁ alone with Q gives P; a lattice missing Q is rejected
        let err = build_root_datum(a3, Isogeny::Sublattice(vec![vec![4, 0, 0], vec![0, 4, 0], vec![0, 0, 4]]));
        assert!(matches!(err, Err(RootDataError::BadSublattice)));
    }

    #[test]
    fn unstable_sublattice_rejected() {
        // Q + ℤϖ₁ in D4 is Weyl-stable but triality moves it
        let d4 = ty("3D4");
        let cartan = d4.cartan.cartan_matrix();
        let mut gens: Vec<Vec<i64>> = (0..4).map(|j| cartan.iter().map(|r| r[j]).collect()).collect();
        gens.push(vec![1, 0, 0, 0]);
        let err = build_root_datum(d4, Isogeny::Sublattice(gens));
        assert!(matches!(err, Err(RootDataError::LatticeNotStable(_))));
    }

    #[test]
    fn group_spec_json() {
        let spec: GroupSpec = serde_json::from_str(
            r#"{"q": 2, "factors": [{"type": "A", "rank": 1, "scalars_degree": 3}, {"type": "A", "rank": 3, "twist": 2, "isogeny": "adjoint"}]}"#,
        )
        .unwrap();
        spec.validate().unwrap();
        assert_eq!(spec.effective_q(&spec.factors[0]).unwrap(), 8);
        assert_eq!(spec.factors[1].isogeny, Isogeny::Adjoint);
        let bad = GroupSpec { q: 1, factors: vec![] };
        assert!(bad.validate().is_err());
    }
}
