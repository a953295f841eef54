//! The output document: one JSON object per run.

use linecone::{format_rat, Classification, EnvelopeReport, Ideal, Rat};
use serde::Serialize;

use crate::input::ArrangementFile;

#[derive(Serialize)]
pub struct Document<R: Serialize> {
    pub command: &'static str,
    pub input: ArrangementFile,
    pub input_digest: String,
    pub result: R,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timings: Option<Timings>,
}

#[derive(Serialize)]
pub struct Timings {
    pub total_ms: u128,
}

pub fn ideal(i: &Ideal) -> Vec<String> {
    i.canonical_strings()
}

#[derive(Serialize)]
pub struct ClassificationOut {
    pub case: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub d: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub e: Option<u32>,
    #[serde(rename = "F_d", skip_serializing_if = "Option::is_none")]
    pub f_d: Option<String>,
    #[serde(rename = "I_W", skip_serializing_if = "Option::is_none")]
    pub i_w: Option<Vec<String>>,
    #[serde(rename = "I_Zd", skip_serializing_if = "Option::is_none")]
    pub i_zd: Option<Vec<String>>,
    #[serde(rename = "Z_d_degree", skip_serializing_if = "Option::is_none")]
    pub zd_degree: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

impl From<&Classification> for ClassificationOut {
    fn from(c: &Classification) -> Self {
        let mut out = ClassificationOut {
            case: c.name(),
            d: c.d(),
            e: c.e(),
            f_d: None,
            i_w: None,
            i_zd: None,
            zd_degree: None,
            reason: None,
        };
        match c {
            Classification::CaseA { .. } => {}
            Classification::CaseB { f_d, .. } => out.f_d = Some(f_d.to_string()),
            Classification::CaseC { w_ideal, zd_ideal, .. } => {
                out.i_w = Some(ideal(w_ideal));
                out.i_zd = Some(ideal(zd_ideal));
            }
            Classification::Unsupported { reason } => out.reason = Some(reason.clone()),
        }
        out
    }
}

#[derive(Serialize)]
pub struct ClassifyOut {
    pub classification: ClassificationOut,
    pub ggds: Vec<u32>,
    pub generator_degrees: Vec<u32>,
}

#[derive(Serialize)]
pub struct ZeroDimOut {
    pub degree: u64,
    pub reduced: bool,
}

#[derive(Serialize)]
pub struct EnvelopeOut {
    pub degree: u32,
    pub kind: &'static str,
    pub generators: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub finite_scheme: Option<ZeroDimOut>,
}

#[derive(Serialize)]
pub struct EnvelopesOut {
    pub envelopes: Vec<EnvelopeOut>,
    pub ggds: Vec<u32>,
    pub generator_degrees: Vec<u32>,
}

impl From<&EnvelopeReport> for EnvelopesOut {
    fn from(r: &EnvelopeReport) -> Self {
        let envelopes = r
            .entries
            .iter()
            .map(|e| EnvelopeOut {
                degree: e.degree,
                kind: e.kind.as_str(),
                generators: ideal(&e.ideal),
                finite_scheme: e
                    .report
                    .as_ref()
                    .filter(|z| z.is_zero_dimensional)
                    .map(|z| ZeroDimOut { degree: z.degree, reduced: z.is_reduced }),
            })
            .collect();
        EnvelopesOut { envelopes, ggds: r.ggds.clone(), generator_degrees: r.generator_degrees.clone() }
    }
}

#[derive(Serialize)]
pub struct MiOut {
    pub case: &'static str,
    pub lambda: String,
    pub branch: &'static str,
    pub generators: Vec<String>,
}

#[derive(Serialize)]
pub struct JumpOut {
    pub lambda: String,
    pub generators: Vec<String>,
}

#[derive(Serialize)]
pub struct JumpsOut {
    pub case: &'static str,
    pub lambda_max: String,
    pub lct: Option<String>,
    pub jumps: Vec<JumpOut>,
}

#[derive(Serialize)]
pub struct LctOut {
    pub case: &'static str,
    pub lct: String,
}

#[derive(Serialize)]
pub struct CheckOut {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Serialize)]
pub struct VerifyOut {
    pub classification: ClassificationOut,
    pub grid: Vec<String>,
    pub all_passed: bool,
    pub checks: Vec<CheckOut>,
}

pub fn rat(r: &Rat) -> String {
    format_rat(r)
}
