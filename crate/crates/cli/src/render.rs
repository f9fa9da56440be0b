//! Fixed-width text and CSV output.

use std::fmt::Write;

use cusp_core::existence::{Agreement, Certificate, DecisionReport, FactorOracle, HypothesisStatus, OracleRecord, Ruling, Verdict};
use cusp_core::padic::{PadicReport, QuotientType, TorusDecompositionStatus};
use cusp_core::rootdata::{FactorSpec, Isogeny};

use crate::report::{ReportBody, ReportDocument};
use crate::TableRow;

const GROUND_TRUTH: &str = "character-level ground truth, not a theorem";

pub fn verdict_cell(v: Verdict) -> &'static str {
    match v {
        Verdict::Yes => "yes",
        Verdict::No => "no",
        Verdict::OutsideHypotheses => "[outside]",
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn isogeny_label(i: &Isogeny) -> String {
    match i {
        Isogeny::SimplyConnected => "sc".into(),
        Isogeny::Adjoint => "ad".into(),
        Isogeny::Sublattice(gens) => format!("lattice {gens:?}"),
    }
}

fn factor_label(f: &FactorSpec) -> String {
    let ty = f.twisted_type().map_or_else(|_| "?".into(), |t| t.to_string());
    let res = if f.scalars_degree > 1 { format!(" over degree {}", f.scalars_degree) } else { String::new() };
    format!("{ty} {}{res}", isogeny_label(&f.isogeny))
}

fn rulings(s: &mut String, rows: &[(&str, &Ruling)]) {
    writeln!(s, "{:<24}{:<12}citation", "question", "verdict").unwrap();
    for (name, r) in rows {
        writeln!(s, "{name:<24}{:<12}{}", verdict_cell(r.verdict), r.citation).unwrap();
    }
}

fn hypotheses(s: &mut String, h: &HypothesisStatus, annotations: &[String]) {
    let word = |b| if b { "holds" } else { "fails" };
    write!(s, "\nsmall-unitary hypotheses: (a) {}, (b) {}", word(h.hyp_a), word(h.hyp_b)).unwrap();
    if !h.violations.is_empty() {
        write!(s, "; excluded factors: {}", h.violations.join(", ")).unwrap();
    }
    s.push('\n');
    for a in annotations {
        writeln!(s, "note: {a}").unwrap();
    }
}

fn certificate(c: &Certificate) -> String {
    match c {
        Certificate::Weyl(w) => {
            let inv: Vec<String> = w.invariant_factors.iter().map(|d| format!("Z/{d}")).collect();
            let group = if inv.is_empty() { "0".into() } else { inv.join(" + ") };
            format!("class #{}  L = {group} (order {})  v = {:?}", w.class_representative, w.l_order, w.element)
        }
        Certificate::Product(p) => format!("product torus {}  v = {:?} (restricted to SU)", p.shape, p.element),
    }
}

fn agreement(a: Agreement) -> String {
    match a {
        Agreement::Agree => "agree".into(),
        Agreement::Disagree => "DISAGREE".into(),
        Agreement::GroundTruth { exists } => format!("{} ({GROUND_TRUTH})", if exists { "exists" } else { "none" }),
    }
}

fn oracle(s: &mut String, o: &OracleRecord) {
    writeln!(s, "\noracle (exhaustive character search)").unwrap();
    for f in &o.factors {
        write_factor_oracle(s, f);
    }
    writeln!(s, "{:<24}{}", "dl_cuspidal", agreement(o.dl_cuspidal)).unwrap();
    writeln!(s, "{:<24}{}", "sd_cuspidal", agreement(o.sd_cuspidal)).unwrap();
    writeln!(s, "{:<24}{}", "sd_dl_cuspidal", agreement(o.sd_dl_cuspidal)).unwrap();
}

fn write_factor_oracle(s: &mut String, f: &FactorOracle) {
    writeln!(s, "  {:<12}dl {:<5}sd-dl {}", f.factor, yes_no(f.dl), yes_no(f.sd_dl)).unwrap();
    if let Some(c) = &f.dl_certificate {
        writeln!(s, "    dl witness     {}", certificate(c)).unwrap();
    }
    if let Some(c) = &f.sd_dl_certificate {
        writeln!(s, "    sd-dl witness  {}", certificate(c)).unwrap();
    }
}

fn finite_text(s: &mut String, spec: &cusp_core::rootdata::GroupSpec, d: &DecisionReport, o: Option<&OracleRecord>) {
    writeln!(s, "group over F_{}", spec.q).unwrap();
    for f in &spec.factors {
        let qi = spec.effective_q(f).map_or_else(|_| "?".into(), |q| q.to_string());
        writeln!(s, "  factor {:<24}q_i = {qi}", factor_label(f)).unwrap();
    }
    s.push('\n');
    rulings(
        s,
        &[("cuspidal", &d.cuspidal), ("dl_cuspidal", &d.dl_cuspidal), ("sd_cuspidal", &d.sd_cuspidal), ("sd_dl_cuspidal", &d.sd_dl_cuspidal)],
    );
    hypotheses(s, &d.hypotheses, &d.annotations);
    if let Some(o) = o {
        oracle(s, o);
    }
}

fn padic_text(s: &mut String, spec: &cusp_core::padic::PadicSpec, d: &PadicReport) {
    writeln!(s, "group over a p-adic field, p = {}, residue field F_{}", spec.p, spec.q).unwrap();
    for f in &d.factors {
        let quotient = match f.quotient {
            QuotientType::Finite { ty, q } => format!("{ty}({q})"),
            QuotientType::NonSimplyLaced { q } => format!("non-simply-laced over F_{q}"),
        };
        let decomposition = match f.torus_decomposition {
            TorusDecompositionStatus::Satisfied(case) => format!("satisfied ({case:?})"),
            TorusDecompositionStatus::Unknown => "unknown".into(),
        };
        writeln!(s, "  factor {:<8}special-vertex quotient {quotient:<28}torus decomposition {decomposition}", f.factor).unwrap();
    }
    s.push('\n');
    rulings(
        s,
        &[
            ("depth0_sc", &d.depth0_sc),
            ("regular_depth0_sc", &d.regular_depth0_sc),
            ("sd_sc", &d.sd_sc),
            ("sd_regular_depth0_sc", &d.sd_regular_depth0_sc),
        ],
    );
    hypotheses(s, &d.hypotheses, &d.annotations);
}

pub fn analyze_text(doc: &ReportDocument) -> String {
    let mut s = String::new();
    match &doc.report {
        ReportBody::Finite { spec, decision, oracle } => finite_text(&mut s, spec, decision, oracle.as_ref()),
        ReportBody::Padic { spec, decision } => padic_text(&mut s, spec, decision),
    }
    if let Some(t) = &doc.timing {
        write!(s, "\ntiming: decision {} ms", t.decision_ms).unwrap();
        if let Some(o) = t.oracle_ms {
            write!(s, ", oracle {o} ms").unwrap();
        }
        s.push('\n');
    }
    s
}

/// `=` agreement, `~` the rules abstain and the oracle settles it,
/// `!` disagreement, `?` oracle infeasible, `-` not run.
fn mark(r: &TableRow) -> &'static str {
    match &r.oracle {
        Err(_) => "?",
        Ok(None) => "-",
        Ok(Some(o)) if o.has_disagreement() => "!",
        Ok(Some(o)) if [o.dl_cuspidal, o.sd_cuspidal, o.sd_dl_cuspidal].iter().any(|a| matches!(a, Agreement::GroundTruth { .. })) => "~",
        Ok(Some(_)) => "=",
    }
}

fn oracle_cells(r: &TableRow) -> (&'static str, &'static str) {
    match &r.oracle {
        Ok(Some(o)) => (yes_no(o.dl), yes_no(o.sd_dl)),
        Ok(None) => ("-", "-"),
        Err(_) => ("n/a", "n/a"),
    }
}

pub fn table_text(rows: &[TableRow]) -> String {
    let mut s = String::new();
    writeln!(s, "{:<6}{:>4}  {:<10}{:<10}{:<10}{:<10}{:<10}{:<10}{}", "type", "q", "cusp", "dl", "sd", "sd-dl", "oracle-dl", "oracle-sd", "check").unwrap();
    for r in rows {
        let d = &r.decision;
        let (od, osd) = oracle_cells(r);
        writeln!(
            s,
            "{:<6}{:>4}  {:<10}{:<10}{:<10}{:<10}{:<10}{:<10}{}",
            r.ty.to_string(),
            r.q,
            verdict_cell(d.cuspidal.verdict),
            verdict_cell(d.dl_cuspidal.verdict),
            verdict_cell(d.sd_cuspidal.verdict),
            verdict_cell(d.sd_dl_cuspidal.verdict),
            od,
            osd,
            mark(r)
        )
        .unwrap();
    }
    writeln!(s, "\ncheck: = rules and oracle agree, ~ rules abstain ({GROUND_TRUTH}), ! disagreement, ? oracle infeasible").unwrap();
    s
}

pub fn table_csv(rows: &[TableRow]) -> String {
    let mut s = String::from("type,q,cuspidal,dl_cuspidal,sd_cuspidal,sd_dl_cuspidal,oracle_dl,oracle_sd_dl,check\n");
    let v = |x: Verdict| x.to_string();
    for r in rows {
        let d = &r.decision;
        let (od, osd) = oracle_cells(r);
        writeln!(
            s,
            "{},{},{},{},{},{},{},{},{}",
            r.ty,
            r.q,
            v(d.cuspidal.verdict),
            v(d.dl_cuspidal.verdict),
            v(d.sd_cuspidal.verdict),
            v(d.sd_dl_cuspidal.verdict),
            od,
            osd,
            mark(r)
        )
        .unwrap();
    }
    s
}
