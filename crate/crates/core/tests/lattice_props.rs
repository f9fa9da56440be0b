use cusp_core::lattice::{cokernel, smith_normal_form, IntMatrix};
use cusp_core::par::Exec;
use cusp_core::rootdata::{build_root_datum, Isogeny};
use cusp_core::toruschar::build_l;
use cusp_core::weyl::{enumerate_weyl, twisted_classes};
use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use proptest::prelude::*;

/// Determinant by cofactor expansion.
fn det(m: &[Vec<i64>]) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    (0..n)
        .map(|j| {
            let minor: Vec<Vec<i64>> = m[1..].iter().map(|r| r.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, &x)| x).collect()).collect();
            let sign = if j % 2 == 0 { 1 } else { -1 };
            sign * m[0][j] as i128 * det(&minor)
        })
        .sum()
}

/// Determinantal divisors: δ_k = gcd of all k×k minors; d_k = δ_k / δ_{k−1}.
fn invariant_factors_by_minors(m: &[Vec<i64>]) -> Vec<i128> {
    let n = m.len();
    let mut delta = vec![1i128];
    for k in 1..=n {
        let g = (0..n)
            .combinations(k)
            .cartesian_product((0..n).combinations(k).collect::<Vec<_>>())
            .map(|(rows, cols)| det(&rows.iter().map(|&r| cols.iter().map(|&c| m[r][c]).collect()).collect::<Vec<_>>()))
            .fold(0i128, |a, b| a.gcd(&b));
        delta.push(g);
    }
    (1..=n).filter(|&k| delta[k] != 0).map(|k| delta[k] / delta[k - 1]).collect()
}

fn square(n: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec(prop::collection::vec(-9i64..=9, n), n)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn smith_form_is_a_unimodular_diagonalisation(rows in (1usize..=4).prop_flat_map(square)) {
        let m = IntMatrix::from_rows(&rows);
        let s = smith_normal_form(&m);
        prop_assert_eq!(&(&s.u * &m) * &s.v, s.d.clone());
        prop_assert_eq!(s.u.det().abs(), BigInt::from(1));
        prop_assert_eq!(s.v.det().abs(), BigInt::from(1));
        let diag = s.diagonal();
        for w in diag.windows(2) {
            prop_assert!(w[0].is_zero() && w[1].is_zero() || !w[0].is_zero() && (&w[1] % &w[0]).is_zero());
            prop_assert!(!w[0].is_negative());
        }
        for i in 0..s.d.rows() {
            for j in 0..s.d.cols() {
                prop_assert!(i == j || s.d.get(i, j).is_zero());
            }
        }
    }

    #[test]
    fn cokernel_order_is_the_determinant(rows in (1usize..=4).prop_flat_map(square)) {
        let d = det(&rows);
        let m = IntMatrix::from_rows(&rows);
        match cokernel(&m) {
            Err(_) => prop_assert_eq!(d, 0),
            Ok(c) => {
                prop_assert_eq!(c.group().order() as i128, d.abs());
                let nontrivial: Vec<i128> = invariant_factors_by_minors(&rows).into_iter().filter(|&x| x.abs() != 1).map(i128::abs).collect();
                let got: Vec<i128> = c.group().invariant_factors().iter().map(|&x| x as i128).collect();
                prop_assert_eq!(got, nontrivial);
                // the columns of M project to zero
                let n = rows.len();
                for j in 0..n {
                    let col: Vec<i64> = (0..n).map(|i| rows[i][j]).collect();
                    prop_assert!(c.project_i64(&col).iter().all(|&x| x == 0));
                }
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn general_position_and_self_duality_are_omega_invariant(
        label in prop::sample::select(vec!["A2", "A3", "B2", "G2", "2A2", "2A3", "C3", "3D4"]),
        q in 2u64..=4,
        class_pick in any::<prop::sample::Index>(),
        v_pick in any::<u64>(),
        g_pick in any::<prop::sample::Index>(),
    ) {
        let rd = build_root_datum(label.parse().unwrap(), Isogeny::SimplyConnected).unwrap();
        let w = enumerate_weyl(&rd).unwrap();
        let classes: Vec<_> = twisted_classes(&w).unwrap().into_iter().filter(|c| c.elliptic).collect();
        let class = class_pick.get(&classes);
        let l = build_l(&w, &class.omega, q, Exec::Sequential).unwrap();
        let v = l.group().element_at(v_pick as u128 % l.order());
        let g = g_pick.get(l.omega_image());
        let gv = g.apply(&v);
        prop_assert_eq!(l.is_general_position(&v), l.is_general_position(&gv));
        prop_assert_eq!(l.is_conjugate_self_dual(&v), l.is_conjugate_self_dual(&gv));
        prop_assert_eq!(l.orbit(&v), l.orbit(&gv));
        // Frobenius commutes with Ω
        let fv = l.frobenius().apply(&v);
        prop_assert_eq!(l.frobenius().apply(&gv), g.apply(&fv));
    }
}
