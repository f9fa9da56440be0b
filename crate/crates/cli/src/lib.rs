//! The `cusp` command line: group specs in, verdict reports and tables out.
//!
//! Exit codes: 0 success, 1 I/O failure, 2 spec error, 3 oracle infeasible,
//! 4 rule/oracle disagreement, 5 certificate check failure.

pub mod args;
pub mod render;
pub mod report;

use std::ffi::OsString;
use std::io::Write;
use std::path::Path;
use std::time::Instant;

use clap::Parser;

use cusp_core::classical::build_product_l;
use cusp_core::existence::{decide_finite, verify_decision, zsygmondy_big, Certificate, ExistenceError, FactorOracle};
use cusp_core::padic::{decide_padic, PadicFactorSpec, PadicSpec, Ramification};
use cusp_core::rootdata::{build_root_datum, FactorSpec, GroupSpec, Isogeny, TwistedType};
use cusp_core::toruschar::{recheck, SearchOptions, DEFAULT_CAP};
use cusp_core::weyl::enumerate_weyl;

use args::{AnalyzeArgs, Cli, Command, TableArgs};
use report::{ReportBody, ReportDocument, Timing};

pub const EXIT_IO: i32 = 1;
pub const EXIT_SPEC: i32 = 2;
pub const EXIT_INFEASIBLE: i32 = 3;
pub const EXIT_DISAGREEMENT: i32 = 4;
pub const EXIT_CHECK_FAILED: i32 = 5;

/// Environment variable overriding the `|L|` search cap.
pub const CAP_VAR: &str = "CUSP_CAP";

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Io(String),
    #[error("spec error: {0}")]
    Spec(String),
    #[error("{0}")]
    Infeasible(String),
    #[error("rule and oracle disagree")]
    Disagreement,
    #[error("certificate check failed: {0}")]
    CheckFailed(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io(_) => EXIT_IO,
            CliError::Spec(_) => EXIT_SPEC,
            CliError::Infeasible(_) => EXIT_INFEASIBLE,
            CliError::Disagreement => EXIT_DISAGREEMENT,
            CliError::CheckFailed(_) => EXIT_CHECK_FAILED,
        }
    }
}

impl From<ExistenceError> for CliError {
    fn from(e: ExistenceError) -> Self {
        match e {
            ExistenceError::OracleInfeasible { .. } => CliError::Infeasible(e.to_string()),
            other => CliError::Spec(other.to_string()),
        }
    }
}

fn io(e: impl std::fmt::Display) -> CliError {
    CliError::Io(e.to_string())
}

/// Parse `args` (program name first), run, and return the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_SPEC } else { 0 };
            let _ = if code == 0 { write!(out, "{e}") } else { write!(err, "{e}") };
            return code;
        }
    };
    let result = match cli.command {
        Command::Analyze(a) => analyze(&a, out),
        Command::Table(t) => table(&t, out),
        Command::Zsygmondy { q, h } => {
            let ell = if q >= 2 && h >= 1 { zsygmondy_big(q, h) } else { None };
            let line = ell.map_or_else(|| "NONE".to_string(), |l| l.to_string());
            writeln!(out, "{line}").map_err(io)
        }
        Command::Check { report } => check(&report, out),
    };
    match result {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "cusp: {e}");
            e.exit_code()
        }
    }
}

pub fn search_options() -> Result<SearchOptions, CliError> {
    let cap = match std::env::var(CAP_VAR) {
        Ok(s) => s.trim().parse::<u128>().map_err(|_| CliError::Spec(format!("{CAP_VAR}={s} is not a positive integer")))?,
        Err(_) => DEFAULT_CAP,
    };
    if cap == 0 {
        return Err(CliError::Spec(format!("{CAP_VAR} must be positive")));
    }
    Ok(SearchOptions { cap, ..SearchOptions::default() })
}

fn read_json(path: &Path) -> Result<serde_json::Value, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| CliError::Spec(format!("{}: {e}", path.display())))
}

fn parse_isogeny(s: &str) -> Result<Isogeny, CliError> {
    match s {
        "sc" | "simply_connected" => Ok(Isogeny::SimplyConnected),
        "ad" | "adjoint" => Ok(Isogeny::Adjoint),
        _ => Err(CliError::Spec(format!("unknown isogeny {s:?} (expected sc or ad)"))),
    }
}

fn inline_type(a: &AnalyzeArgs) -> Result<TwistedType, CliError> {
    let family = a.family.as_deref().ok_or_else(|| CliError::Spec("--type is required without a spec file".into()))?;
    let label = match a.rank {
        Some(r) => format!("{family}{r}"),
        None => family.to_string(),
    };
    label.parse().map_err(|e| CliError::Spec(format!("{e}")))
}

/// `TYPE[:modifier]*` with modifiers `unramified`, `tame`, `wild`, `inner`,
/// `anisotropic`, `sc`, `ad`, `f=N`.
pub fn parse_padic_factor(s: &str) -> Result<PadicFactorSpec, CliError> {
    let mut parts = s.split(':');
    let ty: TwistedType = parts.next().unwrap_or_default().parse().map_err(|e| CliError::Spec(format!("{s}: {e}")))?;
    let mut f = PadicFactorSpec::new(ty, Ramification::Unramified);
    for m in parts {
        match m {
            "unramified" => f.ramification = Ramification::Unramified,
            "tame" | "ramified_tame" | "ramified" => f.ramification = Ramification::RamifiedTame,
            "wild" => f.ramification = Ramification::Wild,
            "inner" => f.inner_form = true,
            "anisotropic" => {
                f.inner_form = true;
                f.isotropic = false;
            }
            "isotropic" => f.isotropic = true,
            "sc" | "ad" => f.isogeny = parse_isogeny(m)?,
            _ => match m.strip_prefix("f=").and_then(|n| n.parse().ok()) {
                Some(deg) => f.residue_degree = deg,
                None => return Err(CliError::Spec(format!("{s}: unknown factor modifier {m:?}"))),
            },
        }
    }
    Ok(f)
}

fn elapsed_ms(t: Instant) -> f64 {
    (t.elapsed().as_secs_f64() * 1e6).round() / 1e3
}

/// The report for `analyze`, without printing it.
pub fn build_report(a: &AnalyzeArgs) -> Result<ReportDocument, CliError> {
    let file = a.spec.as_deref().map(read_json).transpose()?;
    let padic = a.padic || file.as_ref().is_some_and(|v| v.get("p").is_some());
    if padic {
        if a.force_oracle {
            return Err(CliError::Spec("--force-oracle applies to finite-field specs only".into()));
        }
        let spec: PadicSpec = match file {
            Some(v) => serde_json::from_value(v).map_err(|e| CliError::Spec(e.to_string()))?,
            None => PadicSpec {
                p: a.p.ok_or_else(|| CliError::Spec("--p is required with --padic".into()))?,
                q: a.q.ok_or_else(|| CliError::Spec("--q is required".into()))?,
                factors: a.factors.iter().map(|f| parse_padic_factor(f)).collect::<Result<_, _>>()?,
            },
        };
        let start = Instant::now();
        let decision = decide_padic(&spec)?;
        let mut doc = ReportDocument::new(ReportBody::Padic { spec, decision });
        if a.timing {
            doc.timing = Some(Timing { decision_ms: elapsed_ms(start), oracle_ms: None });
        }
        return Ok(doc);
    }

    let spec: GroupSpec = match file {
        Some(v) => serde_json::from_value(v).map_err(|e| CliError::Spec(e.to_string()))?,
        None => {
            let q = a.q.ok_or_else(|| CliError::Spec("--q is required".into()))?;
            let mut factor = FactorSpec::new(inline_type(a)?, parse_isogeny(&a.isogeny)?);
            factor.scalars_degree = a.scalars_degree;
            GroupSpec { q, factors: vec![factor] }
        }
    };
    let start = Instant::now();
    let decision = decide_finite(&spec)?;
    let decision_ms = elapsed_ms(start);
    let (oracle, oracle_ms) = if a.force_oracle {
        let start = Instant::now();
        let (_, record) = verify_decision(&spec, search_options()?)?;
        (Some(record), Some(elapsed_ms(start)))
    } else {
        (None, None)
    };
    let mut doc = ReportDocument::new(ReportBody::Finite { spec, decision, oracle });
    if a.timing {
        doc.timing = Some(Timing { decision_ms, oracle_ms });
    }
    Ok(doc)
}

fn analyze(a: &AnalyzeArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let doc = build_report(a)?;
    let json = serde_json::to_string_pretty(&doc).map_err(io)? + "\n";
    match a.json.as_deref() {
        Some(p) if p == Path::new("-") => out.write_all(json.as_bytes()).map_err(io)?,
        Some(p) => {
            std::fs::write(p, &json).map_err(|e| CliError::Io(format!("{}: {e}", p.display())))?;
            out.write_all(render::analyze_text(&doc).as_bytes()).map_err(io)?;
        }
        None => out.write_all(render::analyze_text(&doc).as_bytes()).map_err(io)?,
    }
    match &doc.report {
        ReportBody::Finite { oracle: Some(o), .. } if o.has_disagreement() => Err(CliError::Disagreement),
        _ => Ok(()),
    }
}

/// One `(type, q)` row of the verdict table.
pub struct TableRow {
    pub ty: TwistedType,
    pub q: u64,
    pub decision: cusp_core::existence::DecisionReport,
    pub oracle: Result<Option<cusp_core::existence::OracleRecord>, String>,
}

/// Simply connected types of rank ≤ `rank_max`, split first.
pub fn table_types(rank_max: usize, twisted: bool) -> Vec<TwistedType> {
    let mut labels: Vec<String> = Vec::new();
    labels.extend((1..=rank_max).map(|n| format!("A{n}")));
    labels.extend((2..=rank_max).map(|n| format!("B{n}")));
    labels.extend((3..=rank_max).map(|n| format!("C{n}")));
    labels.extend((4..=rank_max).map(|n| format!("D{n}")));
    labels.extend((6..=rank_max.min(8)).map(|n| format!("E{n}")));
    if rank_max >= 4 {
        labels.push("F4".into());
    }
    if rank_max >= 2 {
        labels.push("G2".into());
    }
    if twisted {
        labels.extend((2..=rank_max).map(|n| format!("2A{n}")));
        labels.extend((4..=rank_max).map(|n| format!("2D{n}")));
        if rank_max >= 4 {
            labels.push("3D4".into());
        }
        if rank_max >= 6 {
            labels.push("2E6".into());
        }
    }
    labels.iter().map(|l| l.parse().expect("table labels are valid")).collect()
}

pub fn table_rows(t: &TableArgs) -> Result<Vec<TableRow>, CliError> {
    if t.q_list.is_empty() {
        return Err(CliError::Spec("--q-list is empty".into()));
    }
    let opts = search_options()?;
    let mut rows = Vec::new();
    for ty in table_types(t.rank_max, t.twisted) {
        for &q in &t.q_list {
            let spec = GroupSpec::single(ty, Isogeny::SimplyConnected, q);
            let decision = decide_finite(&spec)?;
            let oracle = if t.no_oracle {
                Ok(None)
            } else {
                match verify_decision(&spec, opts) {
                    Ok((_, record)) => Ok(Some(record)),
                    Err(e @ ExistenceError::OracleInfeasible { .. }) => Err(e.to_string()),
                    Err(e) => return Err(e.into()),
                }
            };
            rows.push(TableRow { ty, q, decision, oracle });
        }
    }
    Ok(rows)
}

fn table(t: &TableArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let rows = table_rows(t)?;
    let text = if t.csv { render::table_csv(&rows) } else { render::table_text(&rows) };
    out.write_all(text.as_bytes()).map_err(io)?;
    if rows.iter().any(|r| matches!(&r.oracle, Ok(Some(o)) if o.has_disagreement())) {
        return Err(CliError::Disagreement);
    }
    Ok(())
}

/// Re-verify one factor's certificates; `Ok` lines describe what was checked.
pub fn check_factor(f: &FactorSpec, fo: &FactorOracle) -> Result<Vec<String>, String> {
    let mut lines = Vec::new();
    if fo.dl != fo.dl_certificate.is_some() || fo.sd_dl != fo.sd_dl_certificate.is_some() {
        return Err(format!("{}: stored flags do not match the certificates", fo.factor));
    }
    for (name, cert, want_sd) in [("dl", &fo.dl_certificate, false), ("sd-dl", &fo.sd_dl_certificate, true)] {
        let Some(cert) = cert else { continue };
        let (gp, csd) = match cert {
            Certificate::Weyl(w) => {
                let ty = f.twisted_type().map_err(|e| e.to_string())?;
                let rd = build_root_datum(ty, f.isogeny.clone()).map_err(|e| e.to_string())?;
                let wg = enumerate_weyl(&rd).map_err(|e| e.to_string())?;
                recheck(&wg, fo.q, w).map_err(|e| format!("{}: {e}", fo.factor))?
            }
            Certificate::Product(p) => {
                let l = build_product_l(&p.shape, fo.q).map_err(|e| e.to_string())?;
                if p.element.len() != l.factor_orders().len() {
                    return Err(format!("{}: element has the wrong length", fo.factor));
                }
                let (su, image) = l.restrict_to_su(&p.element).map_err(|e| e.to_string())?;
                (su.is_general_position(&image), su.is_conjugate_self_dual(&image))
            }
        };
        if !gp || (want_sd && !csd) {
            return Err(format!("{}: {name} certificate fails (general position {gp}, conjugate self-dual {csd})", fo.factor));
        }
        lines.push(format!("ok  {:<10} {name:<6} general position{}", fo.factor, if want_sd { ", conjugate self-dual" } else { "" }));
    }
    Ok(lines)
}

fn check(path: &Path, out: &mut dyn Write) -> Result<(), CliError> {
    let doc: ReportDocument = serde_json::from_value(read_json(path)?).map_err(|e| CliError::Spec(e.to_string()))?;
    if doc.schema != report::SCHEMA {
        return Err(CliError::Spec(format!("unsupported schema {:?}", doc.schema)));
    }
    let fail = CliError::CheckFailed;
    match &doc.report {
        ReportBody::Padic { spec, decision } => {
            if &decide_padic(spec)? != decision {
                return Err(fail("stored verdicts differ from the rules".into()));
            }
            writeln!(out, "ok  verdicts reproduce").map_err(io)?;
        }
        ReportBody::Finite { spec, decision, oracle } => {
            if &decide_finite(spec)? != decision {
                return Err(fail("stored verdicts differ from the rules".into()));
            }
            writeln!(out, "ok  verdicts reproduce").map_err(io)?;
            if let Some(o) = oracle {
                if o.factors.len() != spec.factors.len() {
                    return Err(fail("one oracle entry per factor expected".into()));
                }
                for (f, fo) in spec.factors.iter().zip(&o.factors) {
                    for line in check_factor(f, fo).map_err(fail)? {
                        writeln!(out, "{line}").map_err(io)?;
                    }
                }
            }
        }
    }
    Ok(())
}
