//! The Weyl group as a set of lattice automorphisms of `X`, its
//! `σ₀`-twisted conjugacy classes, and twisted centralizers.
//!
//! The twisted action of `x` on `ω` is `x·ω = x ω σ₀⁻¹ x⁻¹ σ₀`; the
//! stabilizer of `ω` is then exactly the ordinary centralizer of the lattice
//! endomorphism `w = σ₀ ω⁻¹`, which is the group `Ω` acting on the character
//! group of the torus.

mod poly;

use std::collections::{HashMap, HashSet, VecDeque};

use num_bigint::BigInt;

use crate::lattice::SquareMat;
use crate::par::Exec;
use crate::rootdata::RootDatum;

pub use poly::{char_poly, cyclotomic, cyclotomic_factor, euler_phi, eval as eval_poly, expand as expand_cyclotomic};

/// Largest Weyl group enumerated element by element.
pub const WEYL_CEILING: u128 = 200_000;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum WeylError {
    #[error("Weyl group of {label} has order {order}, above the enumeration ceiling {WEYL_CEILING}")]
    TooLarge { label: String, order: u128 },
    #[error("polynomial {0:?} is not a product of cyclotomic polynomials")]
    NotCyclotomic(Vec<i64>),
    #[error("matrix is not an element of the Weyl group")]
    NotInGroup,
}

#[derive(Clone, Debug)]
pub struct WeylGroup {
    datum: RootDatum,
    elements: Vec<SquareMat>,
    index: HashMap<SquareMat, usize>,
    generators: Vec<usize>,
    sigma_inv: SquareMat,
}

impl WeylGroup {
    pub fn datum(&self) -> &RootDatum {
        &self.datum
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// Elements in lexicographic order of their matrix entries.
    pub fn elements(&self) -> &[SquareMat] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &SquareMat {
        &self.elements[i]
    }

    pub fn index_of(&self, m: &SquareMat) -> Option<usize> {
        self.index.get(m).copied()
    }

    /// Indices of the simple reflections.
    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    /// `x ω σ₀⁻¹ x⁻¹ σ₀`.
    pub fn twisted_conjugate(&self, x: &SquareMat, omega: &SquareMat) -> SquareMat {
        let x_inv = x.inverse().expect("Weyl elements are invertible");
        let sigma = self.datum.sigma();
        &(&(&(x * omega) * &self.sigma_inv) * &x_inv) * sigma
    }

    /// `w = σ₀ ω⁻¹`, the endomorphism whose fixed points detect ellipticity.
    pub fn twisted_endomorphism(&self, omega: &SquareMat) -> SquareMat {
        twisted_endomorphism(&self.datum, omega)
    }
}

pub fn twisted_endomorphism(rd: &RootDatum, omega: &SquareMat) -> SquareMat {
    rd.sigma() * &omega.inverse().expect("Weyl elements are invertible")
}

pub fn enumerate_weyl(rd: &RootDatum) -> Result<WeylGroup, WeylError> {
    let ct = rd.cartan_type();
    let order = ct.weyl_order();
    if order > WEYL_CEILING {
        return Err(WeylError::TooLarge { label: ct.to_string(), order });
    }
    let gens = rd.simple_reflections();
    let n = rd.rank();
    let mut seen: HashSet<SquareMat> = HashSet::with_capacity(order as usize);
    let mut queue = VecDeque::new();
    seen.insert(SquareMat::identity(n));
    queue.push_back(SquareMat::identity(n));
    while let Some(g) = queue.pop_front() {
        for s in gens {
            let h = s * &g;
            if seen.insert(h.clone()) {
                queue.push_back(h);
            }
        }
    }
    let mut elements: Vec<SquareMat> = seen.into_iter().collect();
    elements.sort();
    let index = elements.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect::<HashMap<_, _>>();
    let generators = gens.iter().map(|s| index[s]).collect();
    let sigma_inv = rd.sigma().inverse().expect("σ₀ is an automorphism");
    Ok(WeylGroup { datum: rd.clone(), elements, index, generators, sigma_inv })
}

/// `1` is not an eigenvalue of `σ₀ ω⁻¹`.
pub fn is_elliptic(rd: &RootDatum, omega: &SquareMat) -> bool {
    let w = twisted_endomorphism(rd, omega);
    let p = char_poly(&w);
    p.iter().sum::<i64>() != 0
}

#[derive(Clone, Debug)]
pub struct TwistedClass {
    /// Index of the representative: the smallest member.
    pub representative: usize,
    pub omega: SquareMat,
    /// Member indices, ascending.
    pub members: Vec<usize>,
    pub elliptic: bool,
    /// Characteristic polynomial of `w = σ₀ ω⁻¹`, ascending coefficients.
    pub char_poly: Vec<i64>,
    /// `(d, m_d)` with `char_poly = ∏ Φ_d^{m_d}`.
    pub cyclotomic: Vec<(u32, u32)>,
}

impl TwistedClass {
    pub fn size(&self) -> usize {
        self.members.len()
    }

    /// `ch_w(q)`.
    pub fn char_poly_at(&self, q: u64) -> BigInt {
        eval_poly(&self.char_poly, &BigInt::from(q))
    }

    pub fn contains(&self, index: usize) -> bool {
        self.members.binary_search(&index).is_ok()
    }
}

/// All twisted classes, ordered by representative.
pub fn twisted_classes(w: &WeylGroup) -> Result<Vec<TwistedClass>, WeylError> {
    let n = w.order();
    let gens: Vec<(SquareMat, SquareMat)> = w
        .generators
        .iter()
        .map(|&g| {
            let s = &w.elements[g];
            // s·ω = s ω (σ₀⁻¹ s σ₀) for an involution s
            (s.clone(), &(&w.sigma_inv * s) * w.datum.sigma())
        })
        .collect();
    let mut class_of = vec![usize::MAX; n];
    let mut classes = Vec::new();
    for start in 0..n {
        if class_of[start] != usize::MAX {
            continue;
        }
        let id = classes.len();
        class_of[start] = id;
        let mut members = vec![start];
        let mut queue = VecDeque::from([start]);
        while let Some(i) = queue.pop_front() {
            for (s, s_tw) in &gens {
                let m = &(s * &w.elements[i]) * s_tw;
                let j = w.index[&m];
                if class_of[j] == usize::MAX {
                    class_of[j] = id;
                    members.push(j);
                    queue.push_back(j);
                }
            }
        }
        members.sort_unstable();
        let omega = w.elements[start].clone();
        let cp = char_poly(&w.twisted_endomorphism(&omega));
        let cyclo = cyclotomic_factor(&cp).ok_or_else(|| WeylError::NotCyclotomic(cp.clone()))?;
        let elliptic = !cyclo.iter().any(|&(d, _)| d == 1);
        classes.push(TwistedClass { representative: start, omega, members, elliptic, char_poly: cp, cyclotomic: cyclo });
    }
    Ok(classes)
}

/// The class containing the twisted Coxeter element.
pub fn twisted_coxeter_class<'a>(w: &WeylGroup, classes: &'a [TwistedClass]) -> &'a TwistedClass {
    let idx = w.index[&w.datum.twisted_coxeter_element()];
    classes.iter().find(|c| c.contains(idx)).expect("classes partition W")
}

/// `Ω`: the centralizer in `W` of `w = σ₀ ω⁻¹`.
#[derive(Clone, Debug)]
pub struct TwistedCentralizer {
    /// Member indices into the Weyl group, ascending.
    pub elements: Vec<usize>,
    /// Greedy generating set: each generator is the smallest element outside
    /// the subgroup generated by the earlier ones.
    pub generators: Vec<usize>,
}

impl TwistedCentralizer {
    pub fn order(&self) -> usize {
        self.elements.len()
    }
}

pub fn twisted_centralizer(w: &WeylGroup, omega: &SquareMat, exec: Exec) -> TwistedCentralizer {
    let tw = w.twisted_endomorphism(omega);
    let elements: Vec<usize> = exec
        .filter(w.order() as u64, |i| {
            let x = &w.elements[i as usize];
            &(x * &tw) == &(&tw * x)
        })
        .into_iter()
        .map(|i| i as usize)
        .collect();

    let mut generators = Vec::new();
    let mut span: HashSet<usize> = HashSet::from([w.index[&SquareMat::identity(w.datum.rank())]]);
    for &e in &elements {
        if span.contains(&e) {
            continue;
        }
        generators.push(e);
        // closure of span under right multiplication by generators
        let mut queue: VecDeque<usize> = span.iter().copied().collect();
        while let Some(i) = queue.pop_front() {
            for &g in &generators {
                let j = w.index[&(&w.elements[i] * &w.elements[g])];
                if span.insert(j) {
                    queue.push_back(j);
                }
            }
        }
    }
    debug_assert_eq!(span.len(), elements.len());
    TwistedCentralizer { elements, generators }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::{build_root_datum, Isogeny};

    fn group(label: &str) -> WeylGroup {
        let rd = build_root_datum(label.parse().unwrap(), Isogeny::SimplyConnected).unwrap();
        enumerate_weyl(&rd).unwrap()
    }

    #[test]
    fn a1_group_and_classes() {
        let w = group("A1");
        assert_eq!(w.order(), 2);
        assert_eq!(w.elements(), &[SquareMat::new(1, vec![-1]), SquareMat::identity(1)]);
        let classes = twisted_classes(&w).unwrap();
        assert_eq!(classes.len(), 2);
        assert_eq!(classes.iter().filter(|c| c.elliptic).count(), 1);
    }

    #[test]
    fn a2_has_one_elliptic_class() {
        let w = group("A2");
        let classes = twisted_classes(&w).unwrap();
        assert_eq!(classes.len(), 3);
        let ell: Vec<_> = classes.iter().filter(|c| c.elliptic).collect();
        assert_eq!(ell.len(), 1);
        assert_eq!(ell[0].cyclotomic, vec![(3, 1)]);
        assert_eq!(twisted_coxeter_class(&w, &classes).representative, ell[0].representative);
    }

    #[test]
    fn orbit_stabilizer() {
        for label in ["A3", "2A3", "B3", "2D4", "3D4", "G2"] {
            let w = group(label);
            let classes = twisted_classes(&w).unwrap();
            assert_eq!(classes.iter().map(TwistedClass::size).sum::<usize>(), w.order());
            for c in &classes {
                let omega_group = twisted_centralizer(&w, &c.omega, Exec::Sequential);
                assert_eq!(c.size() * omega_group.order(), w.order(), "{label}");
            }
        }
    }

    #[test]
    fn centralizer_is_twisted_stabilizer() {
        let w = group("3D4");
        for c in twisted_classes(&w).unwrap().iter().filter(|c| c.elliptic) {
            let cent = twisted_centralizer(&w, &c.omega, Exec::Parallel);
            for &x in &cent.elements {
                assert_eq!(w.twisted_conjugate(w.element(x), &c.omega), c.omega);
            }
        }
    }
}
