//! Existence of (self-dual) cuspidal and Deligne-Lusztig cuspidal
//! representations of `G(𝔣)`: the decision rules, and their cross-check
//! against exhaustive character searches.

use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::classical::{sweep_shapes, ClassicalError, Level, ProductWitness, TorusKind};
use crate::rootdata::{build_root_datum, CartanType, FactorSpec, GroupSpec, Isogeny, RootDataError, TwistedType};
use crate::toruschar::{exists_sd_dl, SearchOptions, TorusError, Witness};
use crate::weyl::{cyclotomic, WeylError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExistenceError {
    #[error(transparent)]
    Spec(#[from] RootDataError),
    #[error("oracle infeasible for factor {factor}: {reason}")]
    OracleInfeasible { factor: String, reason: String },
    #[error("isogeny kernel is not described well enough to apply any transfer rule")]
    UnknownKernel,
}

// ---------------------------------------------------------------------------
// Zsygmondy primes

fn pow_mod_big(base: &BigUint, exp: u64, m: &BigUint) -> BigUint {
    base.modpow(&BigUint::from(exp), m)
}

fn prime_divisors(n: u64) -> Vec<u64> {
    num_prime::nt_funcs::factorize64(n).into_keys().collect()
}

/// `ord_ℓ(q) = h` exactly.
pub fn has_order(q: u64, ell: &BigUint, h: u64) -> bool {
    let qb = BigUint::from(q) % ell;
    if qb.is_zero() || !pow_mod_big(&qb, h, ell).is_one() {
        return false;
    }
    prime_divisors(h).into_iter().all(|r| !pow_mod_big(&qb, h / r, ell).is_one())
}

/// Multiplicative order of `q` modulo a prime `ℓ` not dividing `q`.
pub fn multiplicative_order(q: u64, ell: u64) -> Option<u64> {
    if ell < 2 || q % ell == 0 {
        return None;
    }
    let mut x = q % ell;
    let mut k = 1u64;
    while x != 1 {
        x = ((x as u128 * q as u128) % ell as u128) as u64;
        k += 1;
    }
    Some(k)
}

/// Smallest prime `ℓ` with `ord_ℓ(q) = h`, as an arbitrary-precision integer.
pub fn zsygmondy_big(q: u64, h: u64) -> Option<BigUint> {
    if q < 2 || h == 0 {
        return None;
    }
    // every such prime divides Φ_h(q)
    let phi = cyclotomic(u32::try_from(h).ok()?);
    let value = crate::weyl::eval_poly(&phi, &q.into()).to_biguint().expect("Φ_h(q) > 0 for q ≥ 2");
    let primes: Vec<BigUint> = match value.to_u128() {
        Some(v) => num_prime::nt_funcs::factorize128(v).into_keys().map(BigUint::from).collect(),
        None => num_prime::nt_funcs::factorize(value).into_keys().collect(),
    };
    primes.into_iter().find(|p| has_order(q, p, h))
}

/// Smallest prime `ℓ` with `ord_ℓ(q) = h`; `None` for `h = 2, q = 2^a − 1`
/// and for `(q, h) = (2, 6)`.
pub fn zsygmondy(q: u64, h: u64) -> Option<u64> {
    zsygmondy_big(q, h).map(|p| p.to_u64().expect("prime fits in 64 bits"))
}

/// `ℓ` is prime to the order of the centre of the simply connected group.
pub fn center_coprimality(ty: CartanType, ell: u64) -> bool {
    ell.gcd(&ty.center_order()) == 1
}

// ---------------------------------------------------------------------------
// verdicts

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Yes,
    No,
    OutsideHypotheses,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Yes => "yes",
            Verdict::No => "no",
            Verdict::OutsideHypotheses => "outside-hypotheses",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Ruling {
    pub verdict: Verdict,
    pub citation: String,
}

impl Ruling {
    fn new(verdict: Verdict, citation: &str) -> Self {
        Self { verdict, citation: citation.to_string() }
    }
}

pub mod cite {
    pub const CUSPIDAL: &str = "every connected reductive group over a finite field has irreducible cuspidal representations";
    pub const DL: &str = "Deligne-Lusztig cuspidal representations exist when no factor is 2A2(2)";
    pub const DL_OUTSIDE: &str = "a factor of type 2A2(2) falls outside the small-unitary hypothesis (a)";
    pub const SD_YES: &str = "self-dual Deligne-Lusztig cuspidals exist under the small-unitary hypotheses (a) and (b) when no split factor has type A_n with n even";
    pub const SD_NO: &str = "a split factor of type A_n with n even rules out self-dual cuspidals (Coxeter tori of PGL_{n+1} and odd-kernel isogeny transfer)";
    pub const SD_OUTSIDE: &str = "a factor of type 2A_k(q) falls outside the small-unitary hypotheses (a) or (b)";
    pub const TRIVIAL_KERNEL: &str = "a central isogeny whose kernel has no rational points induces an isomorphism on rational points";
    pub const ODD_KERNEL: &str = "a central isogeny with kernel of odd order preserves existence of self-dual cuspidals in both directions";
    pub const ODD_KERNEL_DL: &str = "a central isogeny with kernel of odd order pushes self-dual Deligne-Lusztig cuspidals forward";
    pub const UNIPOTENT_2A2: &str = "SU(3) has a unique cuspidal unipotent representation, which is therefore self-dual";
}

/// The small-unitary hypotheses on factors `²A_k(q_i)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HypothesisStatus {
    pub hyp_a: bool,
    pub hyp_b: bool,
    /// Offending factors, as `2A<k>(<q_i>)`.
    pub violations: Vec<String>,
}

fn violates_a(ty: TwistedType, q: u64) -> bool {
    ty.unitary_rank() == Some(2) && q == 2
}

fn violates_b(ty: TwistedType, q: u64) -> bool {
    match ty.unitary_rank() {
        Some(2) => matches!(q, 3 | 4),
        Some(3) => matches!(q, 2 | 3 | 5),
        Some(4) => matches!(q, 2..=5),
        _ => false,
    }
}

pub fn hypothesis_status(factors: &[(TwistedType, u64)]) -> HypothesisStatus {
    let mut status = HypothesisStatus { hyp_a: true, hyp_b: true, violations: Vec::new() };
    for &(ty, q) in factors {
        let (a, b) = (violates_a(ty, q), violates_b(ty, q));
        status.hyp_a &= !a;
        status.hyp_b &= !b;
        if a || b {
            status.violations.push(format!("{ty}({q})"));
        }
    }
    status
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecisionReport {
    pub cuspidal: Ruling,
    pub dl_cuspidal: Ruling,
    pub sd_cuspidal: Ruling,
    pub sd_dl_cuspidal: Ruling,
    pub hypotheses: HypothesisStatus,
    pub annotations: Vec<String>,
}

/// `(type, q_i)` for every factor of a validated spec.
pub fn effective_factors(spec: &GroupSpec) -> Result<Vec<(TwistedType, u64)>, ExistenceError> {
    spec.validate()?;
    if spec.factors.is_empty() {
        return Err(RootDataError::Spec("at least one factor is required".into()).into());
    }
    spec.factors.iter().map(|f| Ok((f.twisted_type()?, spec.effective_q(f)?))).collect()
}

/// The rule verdicts for a list of `(type, q_i)` factors.
pub fn decide_factors(factors: &[(TwistedType, u64)]) -> DecisionReport {
    let hyp = hypothesis_status(factors);
    let a_even = factors.iter().any(|(t, _)| t.is_a_even());

    let dl = if hyp.hyp_a { Ruling::new(Verdict::Yes, cite::DL) } else { Ruling::new(Verdict::OutsideHypotheses, cite::DL_OUTSIDE) };
    let sd = if a_even {
        Ruling::new(Verdict::No, cite::SD_NO)
    } else if hyp.hyp_a && hyp.hyp_b {
        Ruling::new(Verdict::Yes, cite::SD_YES)
    } else {
        Ruling::new(Verdict::OutsideHypotheses, cite::SD_OUTSIDE)
    };
    let annotations = factors
        .iter()
        .filter(|(t, _)| t.unitary_rank() == Some(2))
        .map(|(t, q)| format!("{t}({q}): {}", cite::UNIPOTENT_2A2))
        .collect();
    DecisionReport {
        cuspidal: Ruling::new(Verdict::Yes, cite::CUSPIDAL),
        dl_cuspidal: dl,
        sd_cuspidal: sd.clone(),
        sd_dl_cuspidal: sd,
        hypotheses: hyp,
        annotations,
    }
}

pub fn decide_finite(spec: &GroupSpec) -> Result<DecisionReport, ExistenceError> {
    Ok(decide_factors(&effective_factors(spec)?))
}

// ---------------------------------------------------------------------------
// isogeny transfer

/// The four existence questions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictSet {
    pub cuspidal: Verdict,
    pub dl_cuspidal: Verdict,
    pub sd_cuspidal: Verdict,
    pub sd_dl_cuspidal: Verdict,
}

impl From<&DecisionReport> for VerdictSet {
    fn from(r: &DecisionReport) -> Self {
        Self {
            cuspidal: r.cuspidal.verdict,
            dl_cuspidal: r.dl_cuspidal.verdict,
            sd_cuspidal: r.sd_cuspidal.verdict,
            sd_dl_cuspidal: r.sd_dl_cuspidal.verdict,
        }
    }
}

/// Kernel of a central isogeny `G → G'`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct KernelInfo {
    pub order: Option<u64>,
    pub rational_points_trivial: Option<bool>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Direction {
    /// Known verdicts for the source `G`, deduce for the target `G'`.
    Forward,
    /// Known verdicts for `G'`, deduce for `G`.
    Backward,
}

/// Verdicts the rules transport; `None` where they are silent.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Transferred {
    pub cuspidal: Option<Verdict>,
    pub dl_cuspidal: Option<Verdict>,
    pub sd_cuspidal: Option<Verdict>,
    pub sd_dl_cuspidal: Option<Verdict>,
    pub citations: Vec<String>,
}

pub fn transfer_rules(source: &VerdictSet, kernel: &KernelInfo, direction: Direction) -> Result<Transferred, ExistenceError> {
    if kernel.rational_points_trivial == Some(true) || kernel.order == Some(1) {
        return Ok(Transferred {
            cuspidal: Some(source.cuspidal),
            dl_cuspidal: Some(source.dl_cuspidal),
            sd_cuspidal: Some(source.sd_cuspidal),
            sd_dl_cuspidal: Some(source.sd_dl_cuspidal),
            citations: vec![cite::TRIVIAL_KERNEL.to_string()],
        });
    }
    let order = kernel.order.ok_or(ExistenceError::UnknownKernel)?;
    let mut out = Transferred::default();
    if order % 2 == 1 {
        out.sd_cuspidal = Some(source.sd_cuspidal);
        out.citations.push(cite::ODD_KERNEL.to_string());
        if direction == Direction::Forward && source.sd_dl_cuspidal == Verdict::Yes {
            out.sd_dl_cuspidal = Some(Verdict::Yes);
            out.citations.push(cite::ODD_KERNEL_DL.to_string());
        }
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// oracle

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Certificate {
    /// A twisted class of the Weyl group and a character of its torus.
    Weyl(Witness),
    /// A product torus of `U(n+1)` seen in `SU(n+1)`.
    Product(ProductWitness),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorOracle {
    pub factor: String,
    pub q: u64,
    pub dl: bool,
    pub sd_dl: bool,
    pub dl_certificate: Option<Certificate>,
    pub sd_dl_certificate: Option<Certificate>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Agreement {
    Agree,
    Disagree,
    /// The rule abstains; the oracle value is character-level ground truth,
    /// not a theorem.
    GroundTruth { exists: bool },
}

fn agreement(verdict: Verdict, exists: bool) -> Agreement {
    match (verdict, exists) {
        (Verdict::Yes, true) | (Verdict::No, false) => Agreement::Agree,
        (Verdict::OutsideHypotheses, e) => Agreement::GroundTruth { exists: e },
        _ => Agreement::Disagree,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleRecord {
    pub factors: Vec<FactorOracle>,
    pub dl: bool,
    pub sd_dl: bool,
    pub dl_cuspidal: Agreement,
    pub sd_cuspidal: Agreement,
    pub sd_dl_cuspidal: Agreement,
}

impl OracleRecord {
    pub fn has_disagreement(&self) -> bool {
        [self.dl_cuspidal, self.sd_cuspidal, self.sd_dl_cuspidal].contains(&Agreement::Disagree)
    }
}

fn oracle_factor(f: &FactorSpec, q: u64, opts: SearchOptions) -> Result<FactorOracle, ExistenceError> {
    let ty = f.twisted_type()?;
    let label = format!("{ty}({q})");
    let rd = build_root_datum(ty, f.isogeny.clone())?;
    let infeasible = |reason: String| ExistenceError::OracleInfeasible { factor: label.clone(), reason };
    match exists_sd_dl(&rd, q, opts) {
        Ok(sweep) => Ok(FactorOracle {
            factor: label.clone(),
            q,
            dl: sweep.dl.is_some(),
            sd_dl: sweep.sd_dl.is_some(),
            dl_certificate: sweep.dl.map(Certificate::Weyl),
            sd_dl_certificate: sweep.sd_dl.map(Certificate::Weyl),
        }),
        Err(e @ (TorusError::Weyl(WeylError::TooLarge { .. }) | TorusError::CapExceeded { .. })) => {
            // large unitary groups: product tori of U(n+1), restricted to SU(n+1)
            let (Some(k), Isogeny::SimplyConnected) = (ty.unitary_rank(), &f.isogeny) else {
                return Err(infeasible(e.to_string()));
            };
            let m = k as u32 + 1;
            let run = |want_sd| sweep_shapes(TorusKind::Unitary, m, q, Level::Su, want_sd, opts.exec);
            let map_err = |e: ClassicalError| infeasible(format!("product model: {e}"));
            let dl = run(false).map_err(map_err)?;
            let sd = run(true).map_err(map_err)?;
            Ok(FactorOracle {
                factor: label.clone(),
                q,
                dl: dl.is_some(),
                sd_dl: sd.is_some(),
                dl_certificate: dl.map(Certificate::Product),
                sd_dl_certificate: sd.map(Certificate::Product),
            })
        }
        Err(e) => Err(infeasible(e.to_string())),
    }
}

/// Exhaustive character-level check of the spec, factor by factor.
pub fn verify_decision(spec: &GroupSpec, opts: SearchOptions) -> Result<(DecisionReport, OracleRecord), ExistenceError> {
    let report = decide_finite(spec)?;
    let factors = spec
        .factors
        .iter()
        .map(|f| oracle_factor(f, spec.effective_q(f).expect("validated"), opts))
        .collect::<Result<Vec<_>, _>>()?;
    // characters of a direct product: both properties hold factorwise
    let dl = factors.iter().all(|f| f.dl);
    let sd_dl = factors.iter().all(|f| f.sd_dl);
    let record = OracleRecord {
        dl,
        sd_dl,
        dl_cuspidal: agreement(report.dl_cuspidal.verdict, dl),
        sd_cuspidal: agreement(report.sd_cuspidal.verdict, sd_dl),
        sd_dl_cuspidal: agreement(report.sd_dl_cuspidal.verdict, sd_dl),
        factors,
    };
    Ok((report, record))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ty(s: &str) -> TwistedType {
        s.parse().unwrap()
    }

    #[test]
    fn zsygmondy_examples() {
        assert_eq!(zsygmondy(2, 6), None);
        assert_eq!(zsygmondy(2, 2), Some(3));
        assert_eq!(zsygmondy(3, 2), None);
        assert_eq!(zsygmondy(2, 12), Some(13));
        assert_eq!(zsygmondy(7, 2), None);
        assert_eq!(zsygmondy(5, 2), Some(3));
    }

    #[test]
    fn order_helper() {
        assert_eq!(multiplicative_order(2, 7), Some(3));
        assert_eq!(multiplicative_order(4, 2), None);
    }

    #[test]
    fn hypotheses() {
        let s = hypothesis_status(&[(ty("2A2"), 2), (ty("2A3"), 5)]);
        assert!(!s.hyp_a && !s.hyp_b);
        assert_eq!(s.violations, ["2A2(2)", "2A3(5)"]);
        let s = hypothesis_status(&[(ty("2A4"), 7), (ty("A4"), 2)]);
        assert!(s.hyp_a && s.hyp_b);
    }

    #[test]
    fn trichotomy_rules() {
        let r = decide_factors(&[(ty("A2"), 7)]);
        assert_eq!(r.sd_cuspidal.verdict, Verdict::No);
        let r = decide_factors(&[(ty("C2"), 3)]);
        assert_eq!(VerdictSet::from(&r), VerdictSet { cuspidal: Verdict::Yes, dl_cuspidal: Verdict::Yes, sd_cuspidal: Verdict::Yes, sd_dl_cuspidal: Verdict::Yes });
        let r = decide_factors(&[(ty("2A2"), 2)]);
        assert_eq!(r.dl_cuspidal.verdict, Verdict::OutsideHypotheses);
        assert_eq!(r.annotations.len(), 1);
        let r = decide_factors(&[(ty("2A2"), 2), (ty("A4"), 3)]);
        assert_eq!(r.sd_cuspidal.verdict, Verdict::No);
    }

    #[test]
    fn transfers() {
        let src = VerdictSet { cuspidal: Verdict::Yes, dl_cuspidal: Verdict::Yes, sd_cuspidal: Verdict::No, sd_dl_cuspidal: Verdict::No };
        let t = transfer_rules(&src, &KernelInfo { order: Some(3), rational_points_trivial: Some(true) }, Direction::Forward).unwrap();
        assert_eq!(t.sd_cuspidal, Some(Verdict::No));
        assert_eq!(t.dl_cuspidal, Some(Verdict::Yes));
        let t = transfer_rules(&src, &KernelInfo { order: Some(5), rational_points_trivial: None }, Direction::Forward).unwrap();
        assert_eq!((t.sd_cuspidal, t.sd_dl_cuspidal, t.dl_cuspidal), (Some(Verdict::No), None, None));
        let yes = VerdictSet { sd_dl_cuspidal: Verdict::Yes, sd_cuspidal: Verdict::Yes, ..src };
        let fwd = transfer_rules(&yes, &KernelInfo { order: Some(3), rational_points_trivial: Some(false) }, Direction::Forward).unwrap();
        assert_eq!(fwd.sd_dl_cuspidal, Some(Verdict::Yes));
        let back = transfer_rules(&yes, &KernelInfo { order: Some(3), rational_points_trivial: Some(false) }, Direction::Backward).unwrap();
        assert_eq!(back.sd_dl_cuspidal, None);
        let even = transfer_rules(&yes, &KernelInfo { order: Some(2), rational_points_trivial: Some(false) }, Direction::Forward).unwrap();
        assert_eq!(even, Transferred::default());
        assert_eq!(transfer_rules(&yes, &KernelInfo::default(), Direction::Forward), Err(ExistenceError::UnknownKernel));
    }
}
