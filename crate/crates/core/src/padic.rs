//! Decision rules for depth-zero supercuspidal representations of reductive
//! groups over a nonarchimedean local field `F` with residue field of size
//! `q` and characteristic `p`.
//!
//! Every question is moved to the reductive quotient at an absolutely
//! special vertex and answered there by the finite-field engine.

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::existence::{hypothesis_status, ExistenceError, HypothesisStatus, Ruling, Verdict};
use crate::rootdata::{CartanType, Family, Isogeny, RootDataError, TwistedType};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Ramification {
    #[default]
    Unramified,
    RamifiedTame,
    Wild,
}

fn default_true() -> bool {
    true
}

fn default_one() -> u32 {
    1
}

fn default_twist() -> u8 {
    1
}

/// One `F`-almost-simple factor `Res_{E/F} H`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PadicFactorSpec {
    #[serde(rename = "type")]
    pub family: Family,
    pub rank: usize,
    #[serde(default = "default_twist")]
    pub twist: u8,
    /// Ramification of the splitting field of the quasi-split inner form.
    #[serde(default)]
    pub ramification: Ramification,
    /// `true` for a non-quasi-split inner form.
    #[serde(default)]
    pub inner_form: bool,
    #[serde(default = "default_true")]
    pub isotropic: bool,
    /// Residue degree of `E/F`; the special vertex sees `q^f`.
    #[serde(default = "default_one")]
    pub residue_degree: u32,
    #[serde(default)]
    pub isogeny: Isogeny,
}

impl PadicFactorSpec {
    pub fn new(ty: TwistedType, ramification: Ramification) -> Self {
        Self {
            family: ty.cartan.family(),
            rank: ty.cartan.rank(),
            twist: ty.twist,
            ramification,
            inner_form: false,
            isotropic: true,
            residue_degree: 1,
            isogeny: Isogeny::SimplyConnected,
        }
    }

    pub fn twisted_type(&self) -> Result<TwistedType, RootDataError> {
        TwistedType::new(CartanType::new(self.family, self.rank)?, self.twist)
    }

    /// Splits over an unramified extension of `F`.
    pub fn splits_unramified(&self) -> bool {
        self.twist == 1 || self.ramification == Ramification::Unramified
    }

    /// Inner form of a split group of type `A_n`, `n` even.
    pub fn is_a_even(&self) -> bool {
        self.family == Family::A && self.twist == 1 && self.rank % 2 == 0
    }

    fn label(&self) -> String {
        match self.twisted_type() {
            Ok(t) => t.to_string(),
            Err(_) => format!("{:?}{}", self.family, self.rank),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PadicSpec {
    pub p: u64,
    pub q: u64,
    pub factors: Vec<PadicFactorSpec>,
}

impl PadicSpec {
    pub fn validate(&self) -> Result<(), RootDataError> {
        let bad = |m: String| Err(RootDataError::Spec(m));
        if !num_prime::nt_funcs::is_prime64(self.p) {
            return bad(format!("p = {} is not prime", self.p));
        }
        let mut r = self.q;
        while r > 1 && r % self.p == 0 {
            r /= self.p;
        }
        if self.q < 2 || r != 1 {
            return bad(format!("q = {} is not a power of p = {}", self.q, self.p));
        }
        if self.factors.is_empty() {
            return bad("at least one factor is required".into());
        }
        for f in &self.factors {
            let ty = f.twisted_type()?;
            if f.twist == 1 && f.ramification != Ramification::Unramified {
                return bad(format!("{ty}: a split type has no ramified splitting field"));
            }
            let wild = self.p.gcd(&(f.twist as u64)) != 1;
            match f.ramification {
                Ramification::Wild if !wild => return bad(format!("{ty}: wild ramification needs p | {}", f.twist)),
                Ramification::RamifiedTame if wild => return bad(format!("{ty}: a ramified degree-{} extension is wild for p = {}", f.twist, self.p)),
                _ => {}
            }
            if !f.isotropic && !f.inner_form {
                return bad(format!("{ty}: quasi-split groups are isotropic"));
            }
            if f.residue_degree == 0 {
                return bad(format!("{ty}: residue degree must be positive"));
            }
            if self.q.checked_pow(f.residue_degree).is_none() {
                return bad(format!("{ty}: q^{} overflows", f.residue_degree));
            }
        }
        Ok(())
    }
}

/// The reductive quotient at an absolutely special vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum QuotientType {
    /// Same type as the factor, over the residue field of `E`.
    Finite { #[serde(with = "display_fromstr")] ty: TwistedType, q: u64 },
    /// Ramified splitting: the Weyl group is a relative Weyl group, so the
    /// quotient is not simply laced. The exact type is not needed.
    NonSimplyLaced { q: u64 },
}

mod display_fromstr {
    use crate::rootdata::TwistedType;
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(t: &TwistedType, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(t)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<TwistedType, D::Error> {
        String::deserialize(d)?.parse().map_err(D::Error::custom)
    }
}

pub fn reductive_quotient_type(factor: &PadicFactorSpec, q: u64) -> Result<QuotientType, RootDataError> {
    let ty = factor.twisted_type()?;
    let qf = q.checked_pow(factor.residue_degree).ok_or_else(|| RootDataError::Spec("q^f overflows".into()))?;
    Ok(if factor.splits_unramified() { QuotientType::Finite { ty, q: qf } } else { QuotientType::NonSimplyLaced { q: qf } })
}

/// The case through which the torus decomposition hypothesis holds.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TorusDecompositionCase {
    UnramifiedSplit,
    Wild,
    SimplyConnected,
    Unitary,
    PEqualsTwo,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", content = "case", rename_all = "snake_case")]
pub enum TorusDecompositionStatus {
    Satisfied(TorusDecompositionCase),
    Unknown,
}

pub fn torus_decomposition_status(factor: &PadicFactorSpec, p: u64) -> TorusDecompositionStatus {
    use TorusDecompositionCase::*;
    let case = if factor.splits_unramified() {
        UnramifiedSplit
    } else if factor.ramification == Ramification::Wild {
        Wild
    } else if factor.isogeny == Isogeny::SimplyConnected {
        SimplyConnected
    } else if factor.family == Family::A && factor.twist == 2 {
        Unitary
    } else if p == 2 {
        PEqualsTwo
    } else {
        return TorusDecompositionStatus::Unknown;
    };
    TorusDecompositionStatus::Satisfied(case)
}

pub mod cite {
    pub const DEPTH0: &str = "every connected reductive p-adic group has depth-zero supercuspidal representations, induced from cuspidal representations of a vertex reductive quotient";
    pub const REGULAR: &str = "regular depth-zero supercuspidals exist when no reductive quotient at an absolutely special vertex has a 2A2(2) factor";
    pub const REGULAR_OUTSIDE: &str = "a factor with reductive quotient 2A2(2) falls outside the small-unitary hypothesis (a)";
    pub const SD_REGULAR: &str = "self-dual regular depth-zero supercuspidals exist under the small-unitary hypotheses, the torus decomposition hypothesis and the absence of A_n factors with n even";
    pub const SD_NO: &str = "for p odd, an isotropic inner form of a split group of type A_n with n even has no self-dual supercuspidal representations (division algebras of odd degree and odd-kernel isogeny transfer)";
    pub const SD_OUTSIDE: &str = "outside the small-unitary or torus decomposition hypotheses, or an anisotropic A_n factor with n even";
    pub const P2_YES: &str = "for p = 2, self-dual supercuspidal representations exist unless q = 2 and a factor has type 2A3 or 2A4";
    pub const P2_OUTSIDE: &str = "for p = 2 and q = 2 a factor of type 2A3 or 2A4 is excluded";
    pub const P2_NO_REGULAR_NO: &str = "for p = 2 no non-existence rule is known for self-dual regular depth-zero supercuspidals";
    pub const ANISOTROPIC_A: &str = "self-dual supercuspidals exist for an anisotropic group of type A_n (the trivial representation) but they are not regular";
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PadicFactorReport {
    pub factor: String,
    pub quotient: QuotientType,
    pub torus_decomposition: TorusDecompositionStatus,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PadicReport {
    pub depth0_sc: Ruling,
    pub regular_depth0_sc: Ruling,
    pub sd_sc: Ruling,
    pub sd_regular_depth0_sc: Ruling,
    /// Small-unitary hypotheses, evaluated on the reductive quotients.
    pub hypotheses: HypothesisStatus,
    pub factors: Vec<PadicFactorReport>,
    pub annotations: Vec<String>,
}

fn ruling(verdict: Verdict, citation: &str) -> Ruling {
    Ruling { verdict, citation: citation.to_string() }
}

pub fn decide_padic(spec: &PadicSpec) -> Result<PadicReport, ExistenceError> {
    spec.validate()?;
    let (p, q) = (spec.p, spec.q);
    let mut factors = Vec::with_capacity(spec.factors.len());
    let mut finite = Vec::new();
    for f in &spec.factors {
        let quotient = reductive_quotient_type(f, q)?;
        if let QuotientType::Finite { ty, q } = quotient {
            finite.push((ty, q));
        }
        factors.push(PadicFactorReport { factor: f.label(), quotient, torus_decomposition: torus_decomposition_status(f, p) });
    }
    let hyp = hypothesis_status(&finite);
    let decomposition_ok = factors.iter().all(|f| f.torus_decomposition != TorusDecompositionStatus::Unknown);
    let a_even = spec.factors.iter().any(PadicFactorSpec::is_a_even);
    let isotropic_a_even = spec.factors.iter().any(|f| f.is_a_even() && f.isotropic);

    let regular = if hyp.hyp_a { ruling(Verdict::Yes, cite::REGULAR) } else { ruling(Verdict::OutsideHypotheses, cite::REGULAR_OUTSIDE) };
    let sd_regular_in = hyp.hyp_a && hyp.hyp_b && decomposition_ok && !a_even;

    let (sd, sd_regular) = if p == 2 {
        let excluded = spec.factors.iter().zip(&factors).any(|(f, r)| {
            matches!(r.quotient, QuotientType::Finite { q: 2, .. }) && f.family == Family::A && f.twist == 2 && matches!(f.rank, 3 | 4)
        });
        let sd = if excluded { ruling(Verdict::OutsideHypotheses, cite::P2_OUTSIDE) } else { ruling(Verdict::Yes, cite::P2_YES) };
        let sdr = if sd_regular_in { ruling(Verdict::Yes, cite::SD_REGULAR) } else { ruling(Verdict::OutsideHypotheses, cite::P2_NO_REGULAR_NO) };
        (sd, sdr)
    } else if isotropic_a_even {
        (ruling(Verdict::No, cite::SD_NO), ruling(Verdict::No, cite::SD_NO))
    } else if sd_regular_in {
        (ruling(Verdict::Yes, cite::SD_REGULAR), ruling(Verdict::Yes, cite::SD_REGULAR))
    } else {
        (ruling(Verdict::OutsideHypotheses, cite::SD_OUTSIDE), ruling(Verdict::OutsideHypotheses, cite::SD_OUTSIDE))
    };

    let mut annotations: Vec<String> = spec
        .factors
        .iter()
        .filter(|f| f.family == Family::A && !f.isotropic)
        .map(|f| format!("{}: {}", f.label(), cite::ANISOTROPIC_A))
        .collect();
    annotations.extend(
        finite
            .iter()
            .filter(|(t, _)| t.unitary_rank() == Some(2))
            .map(|(t, q)| format!("{t}({q}): {}", crate::existence::cite::UNIPOTENT_2A2)),
    );

    Ok(PadicReport {
        depth0_sc: ruling(Verdict::Yes, cite::DEPTH0),
        regular_depth0_sc: regular,
        sd_sc: sd,
        sd_regular_depth0_sc: sd_regular,
        hypotheses: hyp,
        factors,
        annotations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn factor(label: &str, ram: Ramification) -> PadicFactorSpec {
        PadicFactorSpec::new(label.parse().unwrap(), ram)
    }

    #[test]
    fn quotient_types() {
        let f = factor("2A3", Ramification::Unramified);
        assert_eq!(reductive_quotient_type(&f, 2).unwrap(), QuotientType::Finite { ty: "2A3".parse().unwrap(), q: 2 });
        let f = factor("2A5", Ramification::RamifiedTame);
        assert_eq!(reductive_quotient_type(&f, 3).unwrap(), QuotientType::NonSimplyLaced { q: 3 });
        let mut f = factor("A1", Ramification::Unramified);
        f.residue_degree = 3;
        assert_eq!(reductive_quotient_type(&f, 2).unwrap(), QuotientType::Finite { ty: "A1".parse().unwrap(), q: 8 });
    }

    #[test]
    fn torus_decomposition_cases() {
        assert_eq!(torus_decomposition_status(&factor("E6", Ramification::Unramified), 5), TorusDecompositionStatus::Satisfied(TorusDecompositionCase::UnramifiedSplit));
        assert_eq!(torus_decomposition_status(&factor("2D4", Ramification::RamifiedTame), 3), TorusDecompositionStatus::Satisfied(TorusDecompositionCase::SimplyConnected));
        let mut f = factor("2D4", Ramification::RamifiedTame);
        f.isogeny = Isogeny::Adjoint;
        assert_eq!(torus_decomposition_status(&f, 3), TorusDecompositionStatus::Unknown);
        assert_eq!(torus_decomposition_status(&f, 2), TorusDecompositionStatus::Satisfied(TorusDecompositionCase::PEqualsTwo));
    }

    #[test]
    fn validation() {
        let spec = |p, q, f| PadicSpec { p, q, factors: vec![f] };
        assert!(spec(4, 4, factor("A1", Ramification::Unramified)).validate().is_err());
        assert!(spec(2, 6, factor("A1", Ramification::Unramified)).validate().is_err());
        assert!(spec(3, 3, factor("2A2", Ramification::Wild)).validate().is_err());
        assert!(spec(2, 2, factor("2A2", Ramification::Wild)).validate().is_ok());
        assert!(spec(2, 4, factor("A2", Ramification::RamifiedTame)).validate().is_err());
    }
}
