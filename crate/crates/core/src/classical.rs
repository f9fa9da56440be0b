//! Product models of elliptic tori in unitary groups and non-split even
//! orthogonal groups, where `T(𝔣) ≅ ∏ 𝒯_{d_i}` with `𝒯_d` cyclic of order
//! `q^d + 1`, and the explicit character constructions built on them.
//!
//! The rational Weyl group acts by multiplication by `q²` on each factor
//! and by permuting factors of equal degree. For unitary groups the
//! passage to `SU(n)` is the quotient by the diagonal copy of `𝒯₁`-characters
//! and the passage to `PU(n)` is the subgroup of characters trivial on the
//! diagonal `𝒯₁` (trivial central character).

use std::collections::BTreeMap;
use std::fmt;

use itertools::Itertools;
use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::existence::zsygmondy;
use crate::lattice::Element;
use crate::par::Exec;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ClassicalError {
    #[error("invalid shape {0}")]
    InvalidShape(String),
    #[error("shape {0} does not match the pattern of the construction")]
    ShapeMismatch(String),
    #[error("field of size {q} is too small for n = {n}")]
    FieldTooSmall { n: u32, q: u64 },
    #[error("factor order q^{d} + 1 does not fit in 64 bits")]
    Overflow { d: u32 },
    #[error("construction failed verification: {0}")]
    ConstructionFailed(String),
    #[error("search space of {0} element-actions exceeds the work cap")]
    TooLarge(u128),
    #[error("operation needs the unitary kind")]
    NotUnitary,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TorusKind {
    /// Elliptic tori of `U(m)`: all parts odd.
    Unitary,
    /// Elliptic tori of the non-split `SO(2n)`: an odd number of parts.
    OrthogonalNonsplit,
}

/// Parts in non-increasing order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct TorusShape {
    pub kind: TorusKind,
    pub parts: Vec<u32>,
}

impl TorusShape {
    pub fn new(kind: TorusKind, mut parts: Vec<u32>) -> Result<Self, ClassicalError> {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let shape = Self { kind, parts };
        let ok = !shape.parts.is_empty()
            && shape.parts.iter().all(|&d| d >= 1)
            && match kind {
                TorusKind::Unitary => shape.parts.iter().all(|d| d % 2 == 1),
                TorusKind::OrthogonalNonsplit => shape.parts.len() % 2 == 1,
            };
        if ok {
            Ok(shape)
        } else {
            Err(ClassicalError::InvalidShape(shape.to_string()))
        }
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Number of `𝒯₁` factors.
    pub fn t1_count(&self) -> usize {
        self.parts.iter().filter(|&&d| d == 1).count()
    }

    /// At most one `𝒯₁` factor.
    pub fn is_good(&self) -> bool {
        self.t1_count() <= 1
    }
}

impl fmt::Display for TorusShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.parts.iter().join(","))
    }
}

/// Partitions of `n` into parts at most `max`, non-increasing, in
/// reverse lexicographic order.
fn partitions(n: u32, max: u32) -> Vec<Vec<u32>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in (1..=max.min(n)).rev() {
        for mut rest in partitions(n - first, first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

pub fn enumerate_shapes(kind: TorusKind, size: u32) -> Vec<TorusShape> {
    partitions(size, size).into_iter().filter_map(|p| TorusShape::new(kind, p).ok()).collect()
}

/// One element of the action group: factor `i` is multiplied by
/// `multipliers[i]` and moved to position `perm[i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Action {
    perm: Vec<usize>,
    multipliers: Vec<i64>,
}

fn pow_mod(base: u64, exp: u64, m: u64) -> u64 {
    let mut acc: u128 = 1 % m as u128;
    let mut b = base as u128 % m as u128;
    let mut e = exp;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % m as u128;
        }
        b = b * b % m as u128;
        e >>= 1;
    }
    acc as u64
}

/// Character group `∏ ℤ/(q^{d_i}+1)` of a product torus with the action of
/// its rational Weyl group.
#[derive(Clone, Debug)]
pub struct ProductL {
    shape: TorusShape,
    q: u64,
    orders: Vec<i64>,
    /// Identity first.
    actions: Vec<Action>,
}

/// Cap on `|action group|`, enumerated in full.
const ACTION_CAP: usize = 2_000_000;

pub fn build_product_l(shape: &TorusShape, q: u64) -> Result<ProductL, ClassicalError> {
    let orders = shape
        .parts
        .iter()
        .map(|&d| q.checked_pow(d).and_then(|x| x.checked_add(1)).and_then(|x| i64::try_from(x).ok()).ok_or(ClassicalError::Overflow { d }))
        .collect::<Result<Vec<_>, _>>()?;

    // blocks of equal degree
    let mut blocks: BTreeMap<u32, Vec<usize>> = BTreeMap::new();
    for (i, &d) in shape.parts.iter().enumerate() {
        blocks.entry(d).or_default().push(i);
    }
    let group_order: u128 = shape.parts.iter().map(|&d| d as u128).product::<u128>()
        * blocks.values().map(|b| (1..=b.len() as u128).product::<u128>()).product::<u128>();
    if group_order > ACTION_CAP as u128 {
        return Err(ClassicalError::TooLarge(group_order));
    }

    // every permutation preserving the blocks
    let block_perms: Vec<Vec<Vec<usize>>> = blocks.values().map(|b| b.iter().copied().permutations(b.len()).collect()).collect();
    let n = shape.parts.len();
    let mut perms = Vec::new();
    for choice in block_perms.iter().multi_cartesian_product() {
        let mut perm = vec![0usize; n];
        for (block, image) in blocks.values().zip(choice) {
            for (&src, &dst) in block.iter().zip(image) {
                perm[src] = dst;
            }
        }
        perms.push(perm);
    }
    if perms.is_empty() {
        perms.push((0..n).collect());
    }

    // per-factor powers of q², exponent e_i ∈ 0..d_i
    let exps: Vec<Vec<i64>> = shape
        .parts
        .iter()
        .zip(&orders)
        .map(|(&d, &m)| (0..d as u64).map(|e| pow_mod(q, 2 * e, m as u64) as i64).collect())
        .collect();
    let mut actions = Vec::with_capacity(group_order as usize);
    for perm in &perms {
        for mults in exps.iter().multi_cartesian_product() {
            actions.push(Action { perm: perm.clone(), multipliers: mults.into_iter().copied().collect() });
        }
    }
    // identity first, then a fixed order
    let id = actions.iter().position(|a| a.perm.iter().enumerate().all(|(i, &p)| i == p) && a.multipliers.iter().all(|&m| m == 1));
    actions.swap(0, id.expect("identity present"));
    Ok(ProductL { shape: shape.clone(), q, orders, actions })
}

impl ProductL {
    pub fn shape(&self) -> &TorusShape {
        &self.shape
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// `q^{d_i} + 1` for each factor.
    pub fn factor_orders(&self) -> &[i64] {
        &self.orders
    }

    pub fn order(&self) -> u128 {
        self.orders.iter().map(|&m| m as u128).product()
    }

    pub fn action_order(&self) -> usize {
        self.actions.len()
    }

    pub fn reduce(&self, v: &[i64]) -> Element {
        v.iter().zip(&self.orders).map(|(&x, &m)| x.rem_euclid(m)).collect()
    }

    pub fn neg(&self, v: &[i64]) -> Element {
        self.reduce(&v.iter().map(|x| -x).collect::<Vec<_>>())
    }

    pub fn add(&self, a: &[i64], b: &[i64]) -> Element {
        self.reduce(&a.iter().zip(b).map(|(x, y)| x + y).collect::<Vec<_>>())
    }

    /// Mixed radix, first coordinate most significant.
    pub fn element_at(&self, mut index: u128) -> Element {
        let mut v = vec![0i64; self.orders.len()];
        for (x, &m) in v.iter_mut().zip(&self.orders).rev() {
            *x = (index % m as u128) as i64;
            index /= m as u128;
        }
        v
    }

    fn apply(&self, a: &Action, v: &[i64]) -> Element {
        let mut out = vec![0i64; v.len()];
        for (i, &x) in v.iter().enumerate() {
            let m = self.orders[i];
            out[a.perm[i]] = ((x as i128 * a.multipliers[i] as i128).rem_euclid(m as i128)) as i64;
        }
        out
    }

    /// The Weyl orbit of `v`, sorted and deduplicated.
    pub fn orbit(&self, v: &[i64]) -> Vec<Element> {
        let mut out: Vec<Element> = self.actions.iter().map(|a| self.apply(a, v)).collect();
        out.sort();
        out.dedup();
        out
    }

    pub fn is_general_position(&self, v: &[i64]) -> bool {
        let v = self.reduce(v);
        self.actions[1..].iter().all(|a| self.apply(a, &v) != v)
    }

    pub fn is_conjugate_self_dual(&self, v: &[i64]) -> bool {
        let v = self.reduce(v);
        let neg = self.neg(&v);
        self.actions.iter().any(|a| self.apply(a, &v) == neg)
    }

    /// Element orders in `ℤ/(q^{d_i}+1)`, combined: the order of `v`.
    pub fn element_order(&self, v: &[i64]) -> i64 {
        v.iter().zip(&self.orders).fold(1i64, |acc, (&x, &m)| acc.lcm(&(m / x.rem_euclid(m).gcd(&m))))
    }

    /// Exponent of the subgroup generated by the Weyl orbit of `v`; its prime
    /// divisors are those of the subgroup order.
    pub fn orbit_exponent(&self, v: &[i64]) -> i64 {
        self.orbit(v).iter().fold(1i64, |acc, w| acc.lcm(&self.element_order(w)))
    }

    /// Restriction to the diagonal `𝒯₁` (the centre of `U(m)`), as an element of `ℤ/(q+1)`.
    pub fn central_character(&self, v: &[i64]) -> Result<i64, ClassicalError> {
        if self.shape.kind != TorusKind::Unitary {
            return Err(ClassicalError::NotUnitary);
        }
        let m = self.q as i64 + 1;
        Ok(v.iter().fold(0i64, |acc, &x| (acc + x.rem_euclid(m)) % m))
    }

    /// Characters with trivial central character: the image of the
    /// character group of the torus of `PU(m)`.
    pub fn in_sum_zero_subgroup(&self, v: &[i64]) -> Result<bool, ClassicalError> {
        Ok(self.central_character(v)? == 0)
    }

    /// The diagonal subgroup `{(λ·(q^{d_i}+1)/(q+1))_i}` of order `q + 1`.
    pub fn diagonal_subgroup(&self) -> Result<Vec<Element>, ClassicalError> {
        if self.shape.kind != TorusKind::Unitary {
            return Err(ClassicalError::NotUnitary);
        }
        let c = self.q as i64 + 1;
        Ok((0..c).map(|lambda| self.orders.iter().map(|&m| lambda * (m / c)).collect()).collect())
    }

    /// `L' = L / diag` with the image of `v`.
    pub fn restrict_to_su(&self, v: &[i64]) -> Result<(SuQuotient<'_>, Element), ClassicalError> {
        let su = SuQuotient { l: self, diag: self.diagonal_subgroup()? };
        let image = su.canonical(v);
        Ok((su, image))
    }

    /// First element (canonical order) qualifying at `level`, along with the
    /// requested property.
    pub fn search(&self, level: Level, want_sd: bool, exec: Exec) -> Result<Option<Element>, ClassicalError> {
        let su = match level {
            Level::Su => Some(SuQuotient { l: self, diag: self.diagonal_subgroup()? }),
            _ => None,
        };
        if level == Level::Pu && self.shape.kind != TorusKind::Unitary {
            return Err(ClassicalError::NotUnitary);
        }
        let work = self.order() * self.actions.len() as u128;
        if work > SEARCH_WORK_CAP {
            return Err(ClassicalError::TooLarge(work));
        }
        let hit = exec.find_first(self.order() as u64, |i| {
            let v = self.element_at(i as u128);
            match (&su, level) {
                (Some(su), _) => su.is_general_position(&v) && (!want_sd || su.is_conjugate_self_dual(&v)),
                (None, Level::Pu) => {
                    self.central_character(&v) == Ok(0) && self.is_general_position(&v) && (!want_sd || self.is_conjugate_self_dual(&v))
                }
                (None, _) => self.is_general_position(&v) && (!want_sd || self.is_conjugate_self_dual(&v)),
            }
        });
        Ok(hit.map(|i| self.element_at(i as u128)))
    }
}

/// Bound on `|L| · |action group|` for exhaustive product-model searches.
pub const SEARCH_WORK_CAP: u128 = 400_000_000;

/// Which group the characters are considered for.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Level {
    /// `U(m)` or the non-split `SO(2n)`.
    Full,
    /// `PU(m)`: characters with trivial central character.
    Pu,
    /// `SU(m)`: characters modulo the diagonal.
    Su,
}

/// `L / diag(ℤ/(q+1))` with the descended action.
pub struct SuQuotient<'a> {
    l: &'a ProductL,
    diag: Vec<Element>,
}

impl SuQuotient<'_> {
    pub fn order(&self) -> u128 {
        self.l.order() / self.diag.len() as u128
    }

    /// Smallest representative of the coset `v + diag`.
    pub fn canonical(&self, v: &[i64]) -> Element {
        self.diag.iter().map(|d| self.l.add(v, d)).min().expect("diagonal contains zero")
    }

    fn same_coset(&self, a: &[i64], b: &[i64]) -> bool {
        let diff = self.l.add(a, &self.l.neg(b));
        self.diag.contains(&diff)
    }

    pub fn is_general_position(&self, v: &[i64]) -> bool {
        let v = self.l.reduce(v);
        self.l.actions[1..].iter().all(|a| !self.same_coset(&self.l.apply(a, &v), &v))
    }

    pub fn is_conjugate_self_dual(&self, v: &[i64]) -> bool {
        let v = self.l.reduce(v);
        let neg = self.l.neg(&v);
        self.l.actions.iter().any(|a| self.same_coset(&self.l.apply(a, &v), &neg))
    }
}

/// A constructed character with the shape it lives on.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Construction {
    pub shape: TorusShape,
    pub q: u64,
    pub element: Element,
    /// `true` when the scripted choice failed and an exhaustive search supplied the element.
    pub from_search: bool,
}

/// The element `(v_k, v'_k, …, 𝒯₁ part)` for two copies of `𝒯_{k₁}`, zero
/// or two of `𝒯_{k₂}` and at most three of `𝒯₁`.
pub fn construct_v_element(l: &ProductL) -> Result<Element, ClassicalError> {
    let shape = l.shape();
    let mismatch = || ClassicalError::ShapeMismatch(shape.to_string());
    let counts = shape.parts.iter().counts();
    let big: Vec<u32> = counts.keys().map(|&&d| d).filter(|&d| d > 1).sorted().collect();
    if big.is_empty() || big.len() > 2 || big.iter().any(|d| counts[d] != 2) || shape.t1_count() > 3 {
        return Err(mismatch());
    }
    let q = l.q();
    let mut v = vec![0i64; shape.parts.len()];
    for &k in &big {
        let idx: Vec<usize> = (0..shape.parts.len()).filter(|&i| shape.parts[i] == k).collect();
        let m = l.factor_orders()[idx[0]];
        let (vk, vk2) = if (k, q) == (3, 2) {
            (1, m - 1)
        } else {
            let ell = zsygmondy(q, 2 * k as u64).ok_or_else(|| ClassicalError::ConstructionFailed(format!("no prime of order {} mod {q}", 2 * k)))?;
            let vk = m / ell as i64;
            let vk2 = if k % 2 == 0 { (vk as i128 * q as i128).rem_euclid(m as i128) as i64 } else { m - vk };
            (vk, vk2)
        };
        v[idx[0]] = vk;
        v[idx[1]] = vk2;
    }
    let ones: Vec<usize> = (0..shape.parts.len()).filter(|&i| shape.parts[i] == 1).collect();
    if ones.len() >= 2 {
        let m = l.factor_orders()[ones[0]];
        v[ones[0]] = 1;
        v[ones[1]] = m - 1;
    }
    if !(l.is_conjugate_self_dual(&v) && l.is_general_position(&v)) {
        return Err(ClassicalError::ConstructionFailed(format!("{v:?} on {shape}")));
    }
    Ok(v)
}

/// For good shapes: the Weyl orbit generates a subgroup of order prime to 2
/// and, when `q ≠ 2`, to `q + 1`.
pub fn has_coprime_orbit(l: &ProductL, v: &[i64]) -> bool {
    let e = l.orbit_exponent(v);
    e % 2 == 1 && (l.q() == 2 || e.gcd(&(l.q() as i64 + 1)) == 1)
}

/// `(c,−c,2c,−2c,…)` or `(0,c,−c,…)` on `𝒯₁ⁿ`.
pub fn construct_u_crude(n: u32, q: u64) -> Result<Construction, ClassicalError> {
    let enough = if q % 2 == 0 && n % 2 == 1 { q + 1 >= n as u64 } else { q >= n as u64 };
    if !enough || n == 0 {
        return Err(ClassicalError::FieldTooSmall { n, q });
    }
    let shape = TorusShape::new(TorusKind::Unitary, vec![1; n as usize])?;
    let l = build_product_l(&shape, q)?;
    let c = 1i64;
    let mut coords = Vec::with_capacity(n as usize);
    if n % 2 == 1 {
        coords.push(0);
    }
    for j in 1..=(n / 2) as i64 {
        coords.push(j * c);
        coords.push(-j * c);
    }
    let v = l.reduce(&coords);
    let ok = l.is_general_position(&v) && l.is_conjugate_self_dual(&v) && l.in_sum_zero_subgroup(&v)?;
    if !ok {
        return Err(ClassicalError::ConstructionFailed(format!("{v:?} for n = {n}, q = {q}")));
    }
    Ok(Construction { shape, q, element: v, from_search: false })
}

/// `(c,−c,d,−d)` on `𝒯_k × 𝒯_k × 𝒯₁ × 𝒯₁`, `k = n/2 − 1`, for `n ∈ {8, 12}`.
pub fn construct_su8_12(n: u32, q: u64, exec: Exec) -> Result<Construction, ClassicalError> {
    if n != 8 && n != 12 {
        return Err(ClassicalError::ShapeMismatch(format!("n = {n}")));
    }
    let k = n / 2 - 1;
    let shape = TorusShape::new(TorusKind::Unitary, vec![k, k, 1, 1])?;
    let l = build_product_l(&shape, q)?;
    let mk = l.factor_orders()[0];
    let m1 = l.factor_orders()[2];
    let qualifies = |v: &[i64]| -> bool {
        if l.in_sum_zero_subgroup(v) != Ok(true) || !l.is_conjugate_self_dual(v) || !l.is_general_position(v) {
            return false;
        }
        let (su, image) = l.restrict_to_su(v).expect("unitary");
        su.is_general_position(&image)
    };

    // scripted: c of the smallest prime order ℓ | q^k+1 with ℓ ∤ q+1
    let ell = num_prime::nt_funcs::factorize64(mk as u64).into_keys().find(|&p| (q + 1) % p != 0);
    if let Some(ell) = ell {
        let c = mk / ell as i64;
        let v = vec![c, mk - c, 1, m1 - 1];
        if qualifies(&v) {
            return Ok(Construction { shape, q, element: v, from_search: false });
        }
    }

    // same pattern, every (c, d)
    let patterned = (1..mk).cartesian_product(1..m1).map(|(c, d)| vec![c, mk - c, d, m1 - d]).find(|v| qualifies(v));
    if let Some(v) = patterned {
        return Ok(Construction { shape, q, element: v, from_search: true });
    }
    let found = exec.find_first(l.order() as u64, |i| qualifies(&l.element_at(i as u128)));
    match found {
        Some(i) => Ok(Construction { shape, q, element: l.element_at(i as u128), from_search: true }),
        None => Err(ClassicalError::ConstructionFailed(format!("no qualifying character on {shape} at q = {q}"))),
    }
}

/// First shape (canonical order) and element with the property at `level`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProductWitness {
    pub shape: TorusShape,
    pub element: Element,
}

/// Sweep every shape of `U(m)` (or `SO(2n)`) at the given level.
///
/// Shapes too large to search are skipped; if one was skipped and nothing
/// was found the answer is unknown and the size error is returned.
pub fn sweep_shapes(kind: TorusKind, size: u32, q: u64, level: Level, want_sd: bool, exec: Exec) -> Result<Option<ProductWitness>, ClassicalError> {
    let mut skipped = None;
    for shape in enumerate_shapes(kind, size) {
        let found = build_product_l(&shape, q).and_then(|l| l.search(level, want_sd, exec));
        match found {
            Ok(Some(element)) => return Ok(Some(ProductWitness { shape, element })),
            Ok(None) => {}
            Err(e @ (ClassicalError::TooLarge(_) | ClassicalError::Overflow { .. })) => skipped = skipped.or(Some(e)),
            Err(e) => return Err(e),
        }
    }
    skipped.map_or(Ok(None), Err)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn shape(kind: TorusKind, parts: &[u32]) -> TorusShape {
        TorusShape::new(kind, parts.to_vec()).unwrap()
    }

    #[test]
    fn shapes() {
        let u3: Vec<String> = enumerate_shapes(TorusKind::Unitary, 3).iter().map(ToString::to_string).collect();
        assert_eq!(u3, ["(3)", "(1,1,1)"]);
        let u4: Vec<String> = enumerate_shapes(TorusKind::Unitary, 4).iter().map(ToString::to_string).collect();
        assert_eq!(u4, ["(3,1)", "(1,1,1,1)"]);
        let o5: Vec<String> = enumerate_shapes(TorusKind::OrthogonalNonsplit, 5).iter().map(ToString::to_string).collect();
        assert_eq!(o5, ["(5)", "(3,1,1)", "(2,2,1)", "(1,1,1,1,1)"]);
    }

    #[test]
    fn product_groups() {
        let l = build_product_l(&shape(TorusKind::Unitary, &[1, 1, 1]), 4).unwrap();
        assert_eq!(l.factor_orders(), &[5, 5, 5]);
        assert_eq!(l.action_order(), 6);
        let l = build_product_l(&shape(TorusKind::Unitary, &[3]), 2).unwrap();
        assert_eq!(l.factor_orders(), &[9]);
        assert_eq!(l.orbit(&[1]), vec![vec![1], vec![4], vec![7]]);
        let l = build_product_l(&shape(TorusKind::OrthogonalNonsplit, &[2, 2, 1]), 2).unwrap();
        assert_eq!(l.factor_orders(), &[5, 5, 3]);
    }

    #[test]
    fn diagonal_and_sum_zero() {
        let l = build_product_l(&shape(TorusKind::Unitary, &[3, 1]), 2).unwrap();
        assert_eq!(l.diagonal_subgroup().unwrap(), vec![vec![0, 0], vec![3, 1], vec![6, 2]]);
        let l = build_product_l(&shape(TorusKind::Unitary, &[1, 1, 1]), 2).unwrap();
        let count = (0..27).filter(|&i| l.in_sum_zero_subgroup(&l.element_at(i)).unwrap()).count();
        assert_eq!(count, 9);
    }

    #[test]
    fn crude_boundaries() {
        assert_eq!(construct_u_crude(3, 4).unwrap().element, vec![0, 1, 4]);
        assert_eq!(construct_u_crude(4, 4).unwrap().element, vec![1, 4, 2, 3]);
        assert!(construct_u_crude(3, 2).is_ok());
        assert!(matches!(construct_u_crude(4, 3), Err(ClassicalError::FieldTooSmall { .. })));
        assert!(matches!(construct_u_crude(5, 3), Err(ClassicalError::FieldTooSmall { .. })));
    }
}
