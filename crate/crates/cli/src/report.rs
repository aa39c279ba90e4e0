use std::fmt::Write as _;

use cubiclines::classifier::{class_family, classify, Family, Outcome, Verdict};
use cubiclines::lines::{LineConfiguration, Realness};
use cubiclines::rootstructure::sign_class;
use cubiclines::{ComitantTable, CubicSystem, Error};
use serde::{Deserialize, Serialize};

use crate::input::{InputDocument, InputError};

/// Process exit status of one classification.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Classified,
    NotMaximal,
    Invalid,
    Internal,
}

impl Status {
    pub fn code(self) -> i32 {
        match self {
            Status::Classified => 0,
            Status::Internal => 1,
            Status::NotMaximal => 2,
            Status::Invalid => 3,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LineReport {
    pub equation: String,
    pub u: String,
    pub v: String,
    pub w: String,
    /// d when the coefficients lie in Q(√d), absent for rational lines.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub radicand: Option<String>,
    pub real: bool,
    pub multiplicity: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockReport {
    /// φ(αx + βy) = 0 with φ irreducible of degree > 2.
    pub factor: String,
    pub lines: u32,
    pub real_lines: u32,
    pub multiplicity: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConditionReport {
    pub condition: String,
    pub observed: String,
    pub holds: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateReport {
    pub path: Vec<String>,
    pub conditions: Vec<ConditionReport>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComitantSummary {
    pub name: String,
    pub sign: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub xy_degree: Option<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub system: InputDocument,
    /// "class", "not maximal", "degenerate", "unsupported", "invalid input" or "error".
    pub verdict: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub class: Option<u8>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub figure: Option<u8>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub config: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub root_structure: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub total_multiplicity: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub infinite_line_multiplicity: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub slope_partition: Option<Vec<u32>>,
    #[serde(default)]
    pub lines: Vec<LineReport>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub unsplit: Vec<BlockReport>,
    #[serde(default)]
    pub certificate: CertificateReport,
    #[serde(default)]
    pub comitants: Vec<ComitantSummary>,
}

fn family_label(class: u8) -> &'static str {
    match class_family(class) {
        Family::Type3311 => "(3,3,1,1)",
        Family::Type3221 => "(3,2,2,1)",
        Family::BothPotential => "(3,3,1,1)|(3,2,2,1)",
    }
}

fn lines_of(c: &LineConfiguration) -> Vec<LineReport> {
    c.expanded_lines()
        .iter()
        .map(|l| LineReport {
            equation: l.equation(),
            u: l.u.to_string(),
            v: l.v.to_string(),
            w: l.w.to_string(),
            radicand: l.radicand().map(|d| d.to_string()),
            real: l.realness == Realness::Real,
            multiplicity: l.multiplicity,
        })
        .collect()
}

fn comitant_summary(s: &CubicSystem) -> Vec<ComitantSummary> {
    let t = ComitantTable::new(s);
    t.entries()
        .map(|(name, f)| ComitantSummary {
            name: name.to_string(),
            sign: sign_class(f).name().to_string(),
            xy_degree: (!f.is_zero()).then(|| f.degree()),
        })
        .collect()
}

impl Report {
    fn bare(system: InputDocument, verdict: &str) -> Self {
        Report {
            system,
            verdict: verdict.into(),
            class: None,
            figure: None,
            config: None,
            reason: None,
            root_structure: None,
            total_multiplicity: None,
            infinite_line_multiplicity: None,
            slope_partition: None,
            lines: vec![],
            unsplit: vec![],
            certificate: CertificateReport::default(),
            comitants: vec![],
        }
    }

    pub fn invalid(doc: InputDocument, e: &InputError) -> (Self, Status) {
        let mut r = Self::bare(doc, "invalid input");
        r.reason = Some(e.to_string());
        (r, Status::Invalid)
    }

    fn from_verdict(s: &CubicSystem, v: &Verdict) -> (Self, Status) {
        let doc = InputDocument::from_system(s);
        let (label, status) = match &v.outcome {
            Outcome::Class { .. } => ("class", Status::Classified),
            Outcome::NotMaximal { .. } => ("not maximal", Status::NotMaximal),
            Outcome::Degenerate => ("degenerate", Status::Invalid),
            Outcome::Unsupported => ("unsupported", Status::Invalid),
        };
        let mut r = Self::bare(doc, label);
        match &v.outcome {
            Outcome::Class { class, figure } => {
                r.class = Some(*class);
                r.figure = Some(*figure);
                r.config = Some(family_label(*class).into());
            }
            Outcome::NotMaximal { reason } => r.reason = Some(reason.clone()),
            Outcome::Degenerate => r.reason = Some("P and Q have a non-constant common factor".into()),
            Outcome::Unsupported => r.reason = Some("C3 vanishes: the infinite line consists of singular points".into()),
        }
        r.root_structure = v.root_structure.as_ref().map(|rs| rs.case.roman().to_string());
        if let Some(c) = &v.configuration {
            r.total_multiplicity = Some(c.total_multiplicity);
            r.infinite_line_multiplicity = Some(c.infinite_multiplicity);
            r.slope_partition = Some(c.slope_partition.clone());
            r.lines = lines_of(c);
            r.unsplit = c
                .blocks
                .iter()
                .map(|b| BlockReport {
                    factor: b.factor.to_string(),
                    lines: b.degree,
                    real_lines: b.real_lines,
                    multiplicity: b.multiplicity,
                })
                .collect();
        }
        r.certificate = CertificateReport {
            path: v.certificate.path.clone(),
            conditions: v
                .certificate
                .conditions
                .iter()
                .map(|c| ConditionReport {
                    condition: format!("{}{}", c.name, c.relation.symbol()),
                    observed: c.observed.name().to_string(),
                    holds: c.satisfied,
                })
                .collect(),
        };
        if !matches!(v.outcome, Outcome::Unsupported) {
            r.comitants = comitant_summary(s);
        }
        (r, status)
    }

    pub fn error(s: &CubicSystem, e: &Error) -> (Self, Status) {
        let status = match e {
            Error::NotCubic | Error::DegenerateSystem | Error::LineAtInfinityDegenerate | Error::DegenerateOmega => {
                Status::Invalid
            }
            _ => Status::Internal,
        };
        let mut r = Self::bare(InputDocument::from_system(s), "error");
        r.reason = Some(e.to_string());
        (r, status)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialises") + "\n"
    }

    pub fn to_text(&self, with_lines: bool, with_certificate: bool) -> String {
        let mut out = String::new();
        if let Ok(sys) = self.system.to_system() {
            let _ = writeln!(out, "x' = {}", sys.p());
            let _ = writeln!(out, "y' = {}", sys.q());
        }
        match (self.class, &self.reason) {
            (Some(c), _) => {
                let _ = writeln!(
                    out,
                    "verdict: class {c} (figure {}), configuration {}",
                    self.figure.unwrap_or(c),
                    self.config.as_deref().unwrap_or("?")
                );
            }
            (None, Some(reason)) => {
                let _ = writeln!(out, "verdict: {}: {reason}", self.verdict);
            }
            (None, None) => {
                let _ = writeln!(out, "verdict: {}", self.verdict);
            }
        }
        if let Some(rs) = &self.root_structure {
            let _ = writeln!(out, "root structure of C3: [{rs}]");
        }
        if let (Some(total), Some(inf)) = (self.total_multiplicity, self.infinite_line_multiplicity) {
            let _ = writeln!(out, "invariant lines: total multiplicity {total} (infinite line {inf})");
        }
        if with_lines {
            for l in &self.lines {
                let kind = if l.real { "real" } else { "complex" };
                let _ = writeln!(out, "  {:<36} {kind:<7} multiplicity {}", l.equation, l.multiplicity);
            }
            for b in &self.unsplit {
                let _ = writeln!(
                    out,
                    "  {} = 0: {} parallel lines ({} real), multiplicity {}",
                    b.factor, b.lines, b.real_lines, b.multiplicity
                );
            }
        }
        if with_certificate {
            let _ = writeln!(out, "certificate:");
            for step in &self.certificate.path {
                let _ = writeln!(out, "  {step}");
            }
            for c in &self.certificate.conditions {
                let _ = writeln!(
                    out,
                    "  {:<10} observed {:<22} {}",
                    c.condition,
                    c.observed,
                    if c.holds { "holds" } else { "fails" }
                );
            }
        }
        out
    }
}

/// Classify and build the report.
pub fn run(s: &CubicSystem) -> (Report, Status, Option<LineConfiguration>) {
    match classify(s) {
        Ok(v) => {
            let (r, st) = Report::from_verdict(s, &v);
            (r, st, v.configuration)
        }
        Err(e) => {
            let (r, st) = Report::error(s, &e);
            (r, st, None)
        }
    }
}
