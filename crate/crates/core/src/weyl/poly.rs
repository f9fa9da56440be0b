//! Integer polynomials (coefficients in ascending degree), characteristic
//! polynomials and factorization into cyclotomic polynomials.

use num_bigint::BigInt;
use num_integer::Integer;

use crate::lattice::SquareMat;

/// `det(x·I − m)` by Faddeev–LeVerrier; ascending coefficients, monic.
pub fn char_poly(m: &SquareMat) -> Vec<i64> {
    let n = m.dim();
    let a: Vec<i128> = m.data().iter().map(|&x| x as i128).collect();
    let mul = |x: &[i128], y: &[i128]| -> Vec<i128> {
        let mut out = vec![0i128; n * n];
        for i in 0..n {
            for k in 0..n {
                let xik = x[i * n + k];
                if xik != 0 {
                    for j in 0..n {
                        out[i * n + j] += xik * y[k * n + j];
                    }
                }
            }
        }
        out
    };
    // M_1 = I, c_{n} = 1; AM_k, c_{n-k} = -tr(AM_k)/k, M_{k+1} = AM_k + c_{n-k} I
    let mut coeffs = vec![0i128; n + 1];
    coeffs[n] = 1;
    let mut mk: Vec<i128> = (0..n * n).map(|i| i128::from(i % (n + 1) == 0)).collect();
    for k in 1..=n {
        let amk = mul(&a, &mk);
        let tr: i128 = (0..n).map(|i| amk[i * n + i]).sum();
        assert_eq!(tr % k as i128, 0, "Faddeev-LeVerrier trace not divisible");
        let c = -tr / k as i128;
        coeffs[n - k] = c;
        mk = amk;
        for i in 0..n {
            mk[i * n + i] += c;
        }
    }
    coeffs.into_iter().map(|c| i64::try_from(c).expect("coefficient fits in i64")).collect()
}

pub fn eval(poly: &[i64], x: &BigInt) -> BigInt {
    poly.iter().rev().fold(BigInt::from(0), |acc, &c| acc * x + c)
}

fn mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0i64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Exact division by a monic polynomial; `None` when the remainder is nonzero.
fn div_exact(a: &[i64], b: &[i64]) -> Option<Vec<i64>> {
    if a.len() < b.len() {
        return None;
    }
    let mut rem = a.to_vec();
    let mut quot = vec![0i64; a.len() - b.len() + 1];
    for k in (0..quot.len()).rev() {
        let c = rem[k + b.len() - 1];
        quot[k] = c;
        for (j, &y) in b.iter().enumerate() {
            rem[k + j] -= c * y;
        }
    }
    rem.iter().all(|&r| r == 0).then_some(quot)
}

/// `Φ_d`, computed from `x^d − 1 = ∏_{e | d} Φ_e`.
pub fn cyclotomic(d: u32) -> Vec<i64> {
    let mut p = vec![0i64; d as usize + 1];
    p[0] = -1;
    p[d as usize] = 1;
    for e in (1..d).filter(|e| d % e == 0) {
        p = div_exact(&p, &cyclotomic(e)).expect("cyclotomic divides x^d - 1");
    }
    p
}

pub fn euler_phi(d: u32) -> u32 {
    (1..=d).filter(|k| k.gcd(&d) == 1).count() as u32
}

/// Factor `poly` as `∏ Φ_d^{m_d}`; returns `(d, m_d)` in increasing `d`.
pub fn cyclotomic_factor(poly: &[i64]) -> Option<Vec<(u32, u32)>> {
    let deg = poly.len().checked_sub(1)? as u32;
    if *poly.last()? != 1 {
        return None;
    }
    let mut rest = poly.to_vec();
    let mut out = Vec::new();
    // φ(d) ≥ √(d/2), so every candidate satisfies d ≤ 2·deg²
    let bound = 2 * deg.max(1) * deg.max(1);
    for d in 1..=bound.max(2) {
        if euler_phi(d) > deg {
            continue;
        }
        let phi = cyclotomic(d);
        let mut m = 0;
        while let Some(q) = div_exact(&rest, &phi) {
            rest = q;
            m += 1;
        }
        if m > 0 {
            out.push((d, m));
        }
        if rest.len() == 1 {
            break;
        }
    }
    (rest == [1]).then_some(out)
}

/// `∏ Φ_d^{m_d}` expanded.
pub fn expand(factors: &[(u32, u32)]) -> Vec<i64> {
    factors.iter().fold(vec![1], |acc, &(d, m)| (0..m).fold(acc, |a, _| mul(&a, &cyclotomic(d))))
}
