//! The character group `L = X/(q·w − 1)X` of an elliptic torus, `w = σ₀ω⁻¹`,
//! with its `Ω`-action and Frobenius, and the exhaustive searches for
//! characters in general position and conjugate self-dual characters.

use std::collections::{BTreeSet, HashSet, VecDeque};

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::lattice::{cokernel, induce_endomorphism, AbHom, Cokernel, Element, FinAbGroup, IntMatrix, LatticeError, SquareMat};
use crate::par::Exec;
use crate::rootdata::RootDatum;
use crate::weyl::{enumerate_weyl, twisted_centralizer, twisted_classes, TwistedClass, WeylError, WeylGroup};

/// Default bound on `|L|` for exhaustive searches.
pub const DEFAULT_CAP: u128 = 1_000_000;
/// Bound on the size of the `Ω`-image closure.
pub const CLOSURE_CAP: usize = 100_000;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TorusError {
    #[error("class is not elliptic; the character group is infinite")]
    NonElliptic,
    #[error("|L| = {order} exceeds the search cap {cap}")]
    CapExceeded { order: u128, cap: u128 },
    #[error("Ω-image closure exceeds {CLOSURE_CAP} elements")]
    ClosureTooLarge,
    #[error("element is not a member of the Weyl group")]
    NotInWeylGroup,
    #[error(transparent)]
    Weyl(#[from] WeylError),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    pub cap: u128,
    pub exec: Exec,
}

impl Default for SearchOptions {
    fn default() -> Self {
        Self { cap: DEFAULT_CAP, exec: Exec::default() }
    }
}

#[derive(Clone, Debug)]
pub struct CharGroupL {
    coker: Cokernel,
    q: u64,
    omega: SquareMat,
    w: SquareMat,
    frobenius: AbHom,
    omega_order: usize,
    /// Images of the generators of `Ω`.
    omega_generators: Vec<AbHom>,
    /// Distinct automorphisms in the image of `Ω`, identity first.
    omega_image: Vec<AbHom>,
}

impl CharGroupL {
    pub fn group(&self) -> &FinAbGroup {
        self.coker.group()
    }

    pub fn order(&self) -> u128 {
        self.group().order()
    }

    pub fn invariant_factors(&self) -> &[i64] {
        self.group().invariant_factors()
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn omega(&self) -> &SquareMat {
        &self.omega
    }

    /// `σ₀ ω⁻¹` on `X`.
    pub fn w(&self) -> &SquareMat {
        &self.w
    }

    pub fn cokernel(&self) -> &Cokernel {
        &self.coker
    }

    /// The map induced by `w⁻¹`; equals multiplication by `q`.
    pub fn frobenius(&self) -> &AbHom {
        &self.frobenius
    }

    pub fn omega_order(&self) -> usize {
        self.omega_order
    }

    pub fn omega_generators(&self) -> &[AbHom] {
        &self.omega_generators
    }

    pub fn omega_image(&self) -> &[AbHom] {
        &self.omega_image
    }

    /// `Ω` acts faithfully on `L`.
    pub fn is_faithful(&self) -> bool {
        self.omega_image.len() == self.omega_order
    }

    pub fn project(&self, x: &[i64]) -> Element {
        self.coker.project_i64(x)
    }

    /// No nonidentity element of `Ω` fixes `v`.
    pub fn is_general_position(&self, v: &[i64]) -> bool {
        self.is_faithful() && self.omega_image[1..].iter().all(|a| a.apply(v) != v)
    }

    /// Some element of `Ω` sends `v` to `−v`.
    pub fn is_conjugate_self_dual(&self, v: &[i64]) -> bool {
        let neg = self.group().neg(v);
        self.omega_image.iter().any(|a| a.apply(v) == neg)
    }

    /// The `Ω`-orbit of `v`, sorted.
    pub fn orbit(&self, v: &[i64]) -> Vec<Element> {
        let set: BTreeSet<Element> = self.omega_image.iter().map(|a| a.apply(v)).collect();
        set.into_iter().collect()
    }
}

fn descend(m: &SquareMat, coker: &Cokernel) -> Result<AbHom, LatticeError> {
    induce_endomorphism(&IntMatrix::from(m), coker)
}

/// `L` for an elliptic twisted class representative `ω ∈ W`.
pub fn build_l(wg: &WeylGroup, omega: &SquareMat, q: u64, exec: Exec) -> Result<CharGroupL, TorusError> {
    wg.index_of(omega).ok_or(TorusError::NotInWeylGroup)?;
    let w = wg.twisted_endomorphism(omega);
    let relation = &IntMatrix::from(&w).scale(&BigInt::from(q)) - &IntMatrix::identity(w.dim());
    let coker = cokernel(&relation).map_err(|e| match e {
        LatticeError::SingularMatrix => TorusError::NonElliptic,
        other => other.into(),
    })?;
    let w_inv = w.inverse().expect("w is invertible");
    let frobenius = descend(&w_inv, &coker)?;

    let cent = twisted_centralizer(wg, omega, exec);
    let omega_generators = cent
        .generators
        .iter()
        .map(|&g| descend(wg.element(g), &coker))
        .collect::<Result<Vec<_>, _>>()?;

    let g = coker.group();
    let identity = AbHom::identity(g);
    let mut seen: HashSet<AbHom> = HashSet::from([identity.clone()]);
    let mut image = vec![identity];
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        for gen in &omega_generators {
            let next = gen.compose(&image[i])?;
            if seen.insert(next.clone()) {
                if image.len() >= CLOSURE_CAP {
                    return Err(TorusError::ClosureTooLarge);
                }
                image.push(next);
                queue.push_back(image.len() - 1);
            }
        }
    }
    image[1..].sort();

    Ok(CharGroupL {
        coker,
        q,
        omega: omega.clone(),
        w,
        frobenius,
        omega_order: cent.order(),
        omega_generators,
        omega_image: image,
    })
}

/// First element of `L` in canonical order satisfying `pred`.
fn search(l: &CharGroupL, opts: SearchOptions, pred: impl Fn(&CharGroupL, &[i64]) -> bool + Sync + Send) -> Result<Option<Element>, TorusError> {
    let order = l.order();
    if order > opts.cap {
        return Err(TorusError::CapExceeded { order, cap: opts.cap });
    }
    if !l.is_faithful() {
        return Ok(None);
    }
    let g = l.group();
    let hit = opts.exec.find_first(order as u64, |i| pred(l, &g.element_at(i as u128)));
    Ok(hit.map(|i| g.element_at(i as u128)))
}

/// A conjugate self-dual element in general position, if any.
pub fn search_sd_gp(l: &CharGroupL, opts: SearchOptions) -> Result<Option<Element>, TorusError> {
    search(l, opts, |l, v| l.is_conjugate_self_dual(v) && l.is_general_position(v))
}

/// An element in general position, if any.
pub fn search_gp(l: &CharGroupL, opts: SearchOptions) -> Result<Option<Element>, TorusError> {
    search(l, opts, |l, v| l.is_general_position(v))
}

/// A character found by a sweep, with enough data to rebuild and re-check it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    /// Index of the class representative in the sorted Weyl group.
    pub class_representative: usize,
    /// `ω` on `X`, row by row.
    pub omega: Vec<Vec<i64>>,
    pub char_poly: Vec<i64>,
    pub l_order: u128,
    pub invariant_factors: Vec<i64>,
    pub element: Element,
}

/// Result of sweeping every elliptic class of one group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sweep {
    pub q: u64,
    pub elliptic_classes: usize,
    /// First class (by representative) with an element in general position.
    pub dl: Option<Witness>,
    /// First class with a conjugate self-dual element in general position.
    pub sd_dl: Option<Witness>,
}

fn witness(class: &TwistedClass, l: &CharGroupL, element: Element) -> Witness {
    Witness {
        class_representative: class.representative,
        omega: class.omega.rows(),
        char_poly: class.char_poly.clone(),
        l_order: l.order(),
        invariant_factors: l.invariant_factors().to_vec(),
        element,
    }
}

/// Run the searches over all elliptic classes of `W`.
pub fn sweep_classes(wg: &WeylGroup, classes: &[TwistedClass], q: u64, opts: SearchOptions) -> Result<Sweep, TorusError> {
    let elliptic: Vec<&TwistedClass> = classes.iter().filter(|c| c.elliptic).collect();
    for c in &elliptic {
        let order = c.char_poly_at(q).abs();
        if order > BigInt::from(opts.cap) {
            return Err(TorusError::CapExceeded { order: order.to_u128().unwrap_or(u128::MAX), cap: opts.cap });
        }
    }
    let mut out = Sweep { q, elliptic_classes: elliptic.len(), dl: None, sd_dl: None };
    for c in elliptic {
        let l = build_l(wg, &c.omega, q, opts.exec)?;
        if out.dl.is_none() {
            if let Some(v) = search_gp(&l, opts)? {
                out.dl = Some(witness(c, &l, v));
            }
        }
        if out.sd_dl.is_none() {
            if let Some(v) = search_sd_gp(&l, opts)? {
                out.sd_dl = Some(witness(c, &l, v));
            }
        }
        if out.dl.is_some() && out.sd_dl.is_some() {
            break;
        }
    }
    Ok(out)
}

/// Whole-group sweep from a root datum.
pub fn exists_sd_dl(rd: &RootDatum, q: u64, opts: SearchOptions) -> Result<Sweep, TorusError> {
    let wg = enumerate_weyl(rd)?;
    let classes = twisted_classes(&wg)?;
    sweep_classes(&wg, &classes, q, opts)
}

/// Rebuild `L` from a witness and re-run both tests; returns `(gp, csd)`.
pub fn recheck(wg: &WeylGroup, q: u64, w: &Witness) -> Result<(bool, bool), TorusError> {
    let n = wg.datum().rank();
    let omega = SquareMat::new(n, w.omega.iter().flatten().copied().collect());
    let l = build_l(wg, &omega, q, Exec::Sequential)?;
    if l.invariant_factors() != w.invariant_factors.as_slice() || !l.group().contains(&w.element) {
        return Err(LatticeError::DimensionMismatch.into());
    }
    Ok((l.is_general_position(&w.element), l.is_conjugate_self_dual(&w.element)))
}
