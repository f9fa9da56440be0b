use cusp_core::lattice::SquareMat;
use cusp_core::par::Exec;
use cusp_core::rootdata::{build_root_datum, Isogeny, RootDatum};
use cusp_core::toruschar::{build_l, search_gp, search_sd_gp, CharGroupL, SearchOptions};
use cusp_core::weyl::{enumerate_weyl, twisted_classes, twisted_coxeter_class, WeylGroup};

fn datum(label: &str, iso: Isogeny) -> RootDatum {
    build_root_datum(label.parse().unwrap(), iso).unwrap()
}

fn coxeter(label: &str, iso: Isogeny, q: u64) -> (WeylGroup, CharGroupL) {
    let wg = enumerate_weyl(&datum(label, iso)).unwrap();
    let classes = twisted_classes(&wg).unwrap();
    let omega = twisted_coxeter_class(&wg, &classes).omega.clone();
    let l = build_l(&wg, &omega, q, Exec::Parallel).unwrap();
    (wg, l)
}

/// Orbit of `v` under every power of a single automorphism, by direct iteration.
fn cyclic_orbit(mul: i64, v: i64, n: i64) -> Vec<i64> {
    let mut out = vec![v.rem_euclid(n)];
    loop {
        let next = (out.last().unwrap() * mul).rem_euclid(n);
        if next == out[0] {
            return out;
        }
        out.push(next);
    }
}

#[test]
fn coxeter_torus_fixtures() {
    let (_, l) = coxeter("A5", Isogeny::SimplyConnected, 2);
    assert_eq!(l.invariant_factors(), &[63]);
    let (_, l) = coxeter("C3", Isogeny::SimplyConnected, 2);
    assert_eq!(l.invariant_factors(), &[9]);
    let (_, l) = coxeter("2A3", Isogeny::SimplyConnected, 2);
    assert_eq!(l.invariant_factors(), &[9]);
    for iso in [Isogeny::SimplyConnected, Isogeny::Adjoint] {
        let (_, l) = coxeter("D4", iso, 2);
        assert_eq!(l.invariant_factors(), &[3, 9]);
    }
    for q in 2..=9u64 {
        let (_, l) = coxeter("A1", Isogeny::SimplyConnected, q);
        assert_eq!(l.invariant_factors(), &[q as i64 + 1]);
    }
}

#[test]
fn g2_at_two_uses_the_square_of_coxeter() {
    let rd = datum("G2", Isogeny::SimplyConnected);
    let wg = enumerate_weyl(&rd).unwrap();
    let c = rd.twisted_coxeter_element();
    let c2 = &c * &c;
    let l = build_l(&wg, &c2, 2, Exec::Sequential).unwrap();
    assert_eq!(l.invariant_factors(), &[7]);
    assert_eq!(l.omega_order(), 6);
    assert!(l.is_faithful());
    // Aut(ℤ/7) has order 6; the image is all of it
    assert_eq!(l.omega_image().len(), 6);
    for v in 1..7 {
        assert!(l.is_general_position(&[v]));
        assert!(l.is_conjugate_self_dual(&[v]));
    }
    assert!(l.is_conjugate_self_dual(&[0]));
    // the Coxeter torus itself has |L| = Φ₆(2) = 3 and Ω of order 6: nothing is in general position
    let (_, lc) = coxeter("G2", Isogeny::SimplyConnected, 2);
    assert_eq!(lc.order(), 3);
    assert_eq!(search_gp(&lc, SearchOptions::default()).unwrap(), None);
    // c² is a rotation of order 3: char poly x² + x + 1, a Coxeter element of type A₂
    assert_eq!(cusp_core::weyl::char_poly(&c2), vec![1, 1, 1]);
    assert_eq!(c2.order(10), Some(3));
}

#[test]
fn unitary_coxeter_orbits_match_powers_of_q_squared() {
    // Ω = ⟨q²⟩ acting on ℤ/(q²−q+1)
    for q in 2..=5i64 {
        let (_, l) = coxeter("2A2", Isogeny::SimplyConnected, q as u64);
        let n = q * q - q + 1;
        assert_eq!(l.invariant_factors(), &[n]);
        for v in 0..n {
            let mut expected = cyclic_orbit(q * q, v, n);
            expected.sort();
            expected.dedup();
            let got: Vec<i64> = l.orbit(&[v]).into_iter().map(|e| e[0]).collect();
            assert_eq!(got, expected);
            assert!(!l.is_conjugate_self_dual(&[v]) || v == 0);
        }
    }
}

#[test]
fn parity_examples() {
    let (_, l) = coxeter("A2", Isogeny::SimplyConnected, 2);
    assert_eq!(search_sd_gp(&l, SearchOptions::default()).unwrap(), None);
    let (_, l) = coxeter("C2", Isogeny::SimplyConnected, 2);
    assert!(search_sd_gp(&l, SearchOptions::default()).unwrap().is_some());
}

#[test]
fn identity_is_first_in_omega_image() {
    let (_, l) = coxeter("B3", Isogeny::Adjoint, 3);
    assert!(l.omega_image()[0].is_identity());
    let id = SquareMat::identity(3);
    assert_eq!(l.omega().dim(), id.dim());
}
