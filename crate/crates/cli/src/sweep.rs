//! Sweep rows and their byte-stable CSV/JSON rendering.

use std::io::Write;

use fdl_core::measures::EntanglementReport;
use serde::Serialize;

pub const CSV_HEADER: &str = "p,C2_ab,C2_E_ab,C2_a_Eb,neg_aE,epsilon_nats,Q1,Q2,Qinf,R_a,R_E";

/// One grid point of a sweep. Residuals are `None` when the
/// fermion-environment tangle convention does not apply.
#[derive(Debug, Clone, Serialize)]
pub struct SweepRow {
    pub p: f64,
    #[serde(rename = "C2_ab")]
    pub c2_ab: f64,
    #[serde(rename = "C2_E_ab")]
    pub c2_e_ab: f64,
    #[serde(rename = "C2_a_Eb")]
    pub c2_a_eb: f64,
    #[serde(rename = "neg_aE")]
    pub neg_ae: f64,
    pub epsilon_nats: f64,
    #[serde(rename = "Q1")]
    pub q1: f64,
    #[serde(rename = "Q2")]
    pub q2: f64,
    #[serde(rename = "Qinf")]
    pub q_inf: f64,
    #[serde(rename = "R_a")]
    pub r_a: Option<f64>,
    #[serde(rename = "R_E")]
    pub r_e: Option<f64>,
}

impl SweepRow {
    pub fn from_report(p: f64, report: &EntanglementReport) -> Self {
        Self {
            p,
            c2_ab: report.c2_ab,
            c2_e_ab: report.c2_e_ab,
            c2_a_eb: report.c2_a_eb,
            neg_ae: report.negativity_ae,
            epsilon_nats: report.epsilon_nats,
            q1: report.q1,
            q2: report.q2,
            q_inf: report.q_inf,
            r_a: report.residuals.map(|r| r.r_a),
            r_e: report.residuals.map(|r| r.r_e),
        }
    }
}

/// 17 significant digits, sign-normalized zero, no locale dependence.
fn fmt_float(x: f64) -> String {
    let x = if x == 0.0 { 0.0 } else { x };
    format!("{x:.16e}")
}

fn fmt_optional(x: Option<f64>) -> String {
    match x {
        Some(v) => fmt_float(v),
        None => "NA".into(),
    }
}

pub fn write_csv(mut out: impl Write, rows: &[SweepRow]) -> std::io::Result<()> {
    writeln!(out, "{CSV_HEADER}")?;
    for row in rows {
        writeln!(
            out,
            "{},{},{},{},{},{},{},{},{},{},{}",
            fmt_float(row.p),
            fmt_float(row.c2_ab),
            fmt_float(row.c2_e_ab),
            fmt_float(row.c2_a_eb),
            fmt_float(row.neg_ae),
            fmt_float(row.epsilon_nats),
            fmt_float(row.q1),
            fmt_float(row.q2),
            fmt_float(row.q_inf),
            fmt_optional(row.r_a),
            fmt_optional(row.r_e),
        )?;
    }
    Ok(())
}

pub fn write_json(mut out: impl Write, rows: &[SweepRow]) -> std::io::Result<()> {
    serde_json::to_writer(&mut out, rows)?;
    writeln!(out)
}
