use cusp_core::classical::{
    build_product_l, construct_su8_12, construct_u_crude, construct_v_element, enumerate_shapes, sweep_shapes, ClassicalError, Level, TorusKind, TorusShape,
};
use cusp_core::par::Exec;
use itertools::Itertools;
use num_integer::Integer;

/// Rational Weyl group of ∏ 𝒯_{d_i}, written out independently: a
/// permutation of equal-degree factors followed by q^{2e_i} on factor i.
struct Oracle {
    orders: Vec<i64>,
    q: i64,
    elements: Vec<(Vec<usize>, Vec<i64>)>,
}

impl Oracle {
    fn new(parts: &[u32], q: u64) -> Self {
        let q = q as i64;
        let orders: Vec<i64> = parts.iter().map(|&d| q.pow(d) + 1).collect();
        let n = parts.len();
        let perms: Vec<Vec<usize>> = (0..n)
            .permutations(n)
            .filter(|p| p.iter().enumerate().all(|(i, &j)| parts[i] == parts[j]))
            .unique()
            .collect();
        let mut elements = Vec::new();
        for p in perms {
            let ranges = parts.iter().map(|&d| 0..d as i64);
            for exps in ranges.multi_cartesian_product() {
                let mults = exps.iter().zip(&orders).map(|(&e, &m)| (0..2 * e).fold(1, |acc, _| acc * q % m)).collect();
                elements.push((p.clone(), mults));
            }
            if parts.is_empty() {
                elements.push((p, vec![]));
            }
        }
        Self { orders, q, elements }
    }

    fn act(&self, (perm, mults): &(Vec<usize>, Vec<i64>), v: &[i64]) -> Vec<i64> {
        let mut out = vec![0; v.len()];
        for (i, &j) in perm.iter().enumerate() {
            out[j] = (v[i] * mults[i]).rem_euclid(self.orders[j]);
        }
        out
    }

    fn reduce(&self, v: &[i64]) -> Vec<i64> {
        v.iter().zip(&self.orders).map(|(x, m)| x.rem_euclid(*m)).collect()
    }

    /// Modulo the diagonal copy of ℤ/(q+1) when `su`.
    fn same(&self, a: &[i64], b: &[i64], su: bool) -> bool {
        if !su {
            return self.reduce(a) == self.reduce(b);
        }
        let c = self.q + 1;
        (0..c).any(|lambda| {
            let shifted: Vec<i64> = b.iter().zip(&self.orders).map(|(x, m)| x + lambda * (m / c)).collect();
            self.reduce(a) == self.reduce(&shifted)
        })
    }

    fn gp(&self, v: &[i64], su: bool) -> bool {
        self.elements.iter().filter(|w| !is_identity(w)).all(|w| !self.same(&self.act(w, v), v, su))
    }

    fn csd(&self, v: &[i64], su: bool) -> bool {
        let neg: Vec<i64> = v.iter().map(|x| -x).collect();
        self.elements.iter().any(|w| self.same(&self.act(w, v), &neg, su))
    }

    /// The central character: 𝒯₁ ⊂ 𝒯_d restricts characters by reduction mod q + 1.
    fn sum_zero(&self, v: &[i64]) -> bool {
        v.iter().sum::<i64>().rem_euclid(self.q + 1) == 0
    }

    fn element_order(&self, v: &[i64]) -> i64 {
        v.iter().zip(&self.orders).map(|(x, m)| m / x.gcd(m)).fold(1, |a, b| a.lcm(&b))
    }
}

fn is_identity((perm, mults): &(Vec<usize>, Vec<i64>)) -> bool {
    perm.iter().enumerate().all(|(i, &j)| i == j) && mults.iter().all(|&m| m == 1)
}

fn v_shapes(kind: TorusKind) -> Vec<Vec<u32>> {
    let ok_k = |k: u32| kind == TorusKind::OrthogonalNonsplit || k % 2 == 1;
    let mut out = Vec::new();
    for k1 in (2..=5).filter(|&k| ok_k(k)) {
        let seconds = std::iter::once(None).chain((2..=5).filter(|&k| k != k1 && ok_k(k)).map(Some));
        for k2 in seconds {
            for r in 0..=3 {
                let mut parts = vec![k1, k1];
                if let Some(k2) = k2 {
                    parts.extend([k2, k2]);
                }
                parts.extend(std::iter::repeat(1).take(r));
                out.push(parts);
            }
        }
    }
    out
}

#[test]
fn v_elements_pass_brute_force() {
    let mut checked = 0;
    for kind in [TorusKind::Unitary, TorusKind::OrthogonalNonsplit] {
        for parts in v_shapes(kind) {
            let Ok(shape) = TorusShape::new(kind, parts.clone()) else {
                // an orthogonal torus needs an odd number of factors
                assert_eq!(kind, TorusKind::OrthogonalNonsplit);
                assert_eq!(parts.len() % 2, 0);
                continue;
            };
            for q in [2u64, 3] {
                let l = build_product_l(&shape, q).unwrap();
                let v = construct_v_element(&l).unwrap();
                let oracle = Oracle::new(&shape.parts, q);
                assert!(oracle.gp(&v, false), "{shape} q={q} {v:?}");
                assert!(oracle.csd(&v, false), "{shape} q={q} {v:?}");
                let r = parts.iter().filter(|&&d| d == 1).count();
                if r <= 1 {
                    let bad = if q == 2 { 2 } else { 2 * (q as i64 + 1) };
                    assert_eq!(oracle.element_order(&v).gcd(&bad), 1, "{shape} q={q} {v:?}");
                }
                checked += 1;
            }
        }
    }
    assert!(checked > 40);
}

fn crude_pu_condition(n: u32, q: u64) -> bool {
    if q % 2 == 0 && n % 2 == 1 {
        q + 1 >= n as u64
    } else {
        q >= n as u64
    }
}

fn crude_su_condition(n: u32, q: u64) -> bool {
    if q % 2 == 1 && n % 2 == 0 {
        q > n as u64 + 1
    } else {
        q >= n as u64
    }
}

#[test]
fn crude_unitary_construction_at_the_boundary() {
    for n in 1..=5u32 {
        for q in [2u64, 3, 4, 5, 7, 8] {
            let result = construct_u_crude(n, q);
            if !crude_pu_condition(n, q) {
                assert!(matches!(result, Err(ClassicalError::FieldTooSmall { .. })), "n={n} q={q}");
                continue;
            }
            let c = result.unwrap();
            let parts = vec![1; n as usize];
            let oracle = Oracle::new(&parts, q);
            assert!(oracle.gp(&c.element, false) && oracle.csd(&c.element, false), "n={n} q={q}");
            assert!(oracle.sum_zero(&c.element), "n={n} q={q}");
            // the restriction to SU(n) stays in general position exactly under the stronger bound
            assert_eq!(oracle.gp(&c.element, true), crude_su_condition(n, q), "n={n} q={q}");
        }
    }
    // the documented failures: q = n − 1 (q even, n odd) and q = n + 1 (q odd, n even)
    for (n, q) in [(3, 2), (5, 4), (4, 5), (2, 3)] {
        let c = construct_u_crude(n, q).unwrap();
        assert!(!Oracle::new(&vec![1; n as usize], q).gp(&c.element, true), "n={n} q={q}");
    }
}

#[test]
fn su8_and_su12_constructions() {
    for n in [8u32, 12] {
        for q in [2u64, 3] {
            let c = construct_su8_12(n, q, Exec::Parallel).unwrap();
            let oracle = Oracle::new(&c.shape.parts, q);
            for su in [false, true] {
                assert!(oracle.gp(&c.element, su), "n={n} q={q} su={su}");
                assert!(oracle.csd(&c.element, su), "n={n} q={q} su={su}");
            }
        }
    }
}

#[test]
fn small_unitary_sweep_matches_the_crude_lemma() {
    for m in 3..=5u32 {
        for q in [2u64, 3, 4] {
            let pu = sweep_shapes(TorusKind::Unitary, m, q, Level::Pu, true, Exec::Parallel).unwrap();
            let su = sweep_shapes(TorusKind::Unitary, m, q, Level::Su, true, Exec::Parallel).unwrap();
            assert_eq!(pu.is_some(), crude_pu_condition(m, q), "PU({m}) q={q}: {pu:?}");
            assert_eq!(su.is_some(), crude_su_condition(m, q), "SU({m}) q={q}: {su:?}");
            if let Some(w) = &pu {
                let oracle = Oracle::new(&w.shape.parts, q);
                assert!(oracle.gp(&w.element, false) && oracle.csd(&w.element, false) && oracle.sum_zero(&w.element));
            }
            if let Some(w) = &su {
                let oracle = Oracle::new(&w.shape.parts, q);
                assert!(oracle.gp(&w.element, true) && oracle.csd(&w.element, true));
            }
        }
    }
}

#[test]
fn coxeter_tori_of_small_unitary_groups_have_no_self_dual_characters() {
    for m in [3u32, 5] {
        for q in [2u64, 3, 4] {
            let shape = TorusShape::new(TorusKind::Unitary, vec![m]).unwrap();
            let l = build_product_l(&shape, q).unwrap();
            assert_eq!(l.search(Level::Full, true, Exec::Sequential).unwrap(), None);
            let oracle = Oracle::new(&[m], q);
            let n = q.pow(m) as i64 + 1;
            assert!((0..n).all(|v| !(oracle.gp(&[v], false) && oracle.csd(&[v], false))));
        }
    }
    assert_eq!(enumerate_shapes(TorusKind::Unitary, 5).len(), 3);
}
