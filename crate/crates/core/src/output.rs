//! Stable JSON documents and text rendering shared by the CLI and its tests.
//!
//! Documents are versioned and field order is fixed; dimensions ascend, so
//! output is byte-stable for golden-file comparisons. Coefficients serialize
//! as exact JSON integers of arbitrary size.

use std::fmt::Write as _;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use serde_json::Number;

use crate::algebra::{DegreeProfile, FinAbGroup, GradedGroup};
use crate::closed_form::{MDiscParams, RealCohomology};
use crate::oracle::{BinaryForm, ComponentReport, InvariantKind, PolySystem};
use crate::spectral::{PageLeaf, SpectralPage};

pub const SCHEMA_VERSION: u32 = 1;

/// Coefficient field of a rendered table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Field {
    #[serde(rename = "Z")]
    Integer,
    #[serde(rename = "Q")]
    Rational,
}

impl Field {
    /// `Z^r + Z/t...`, `Q^r`, or `0`.
    pub fn group_string(self, g: &FinAbGroup) -> String {
        if g.is_zero() {
            return "0".to_string();
        }
        match self {
            Field::Integer => g.to_string(),
            Field::Rational => match g.free_rank() {
                0 => "0".to_string(),
                1 => "Q".to_string(),
                r => format!("Q^{r}"),
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupEntry {
    pub dim: u32,
    pub rank: u32,
    pub torsion: Vec<u64>,
}

pub fn graded_to_entries(g: &GradedGroup) -> Vec<GroupEntry> {
    g.iter()
        .map(|(dim, group)| GroupEntry {
            dim,
            rank: group.free_rank(),
            torsion: group.torsion().to_vec(),
        })
        .collect()
}

pub fn entries_to_graded(entries: &[GroupEntry]) -> GradedGroup {
    let mut g = GradedGroup::new();
    for e in entries {
        g = g.put(e.dim, FinAbGroup::with_torsion(e.rank, e.torsion.clone()));
    }
    g
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RealDoc {
    pub version: u32,
    pub profile: Vec<u32>,
    pub field: Field,
    pub reduced: Vec<GroupEntry>,
    pub empty: bool,
    pub components: Option<u32>,
}

pub fn real_doc(profile: &DegreeProfile, r: &RealCohomology) -> RealDoc {
    RealDoc {
        version: SCHEMA_VERSION,
        profile: profile.degrees().to_vec(),
        field: Field::Integer,
        reduced: graded_to_entries(&r.reduced),
        empty: r.complement_empty,
        components: r.component_count,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexDoc {
    pub version: u32,
    pub profile: Vec<u32>,
    pub field: Field,
    pub reduced: Vec<GroupEntry>,
    pub empty: bool,
}

pub fn complex_doc(profile: &DegreeProfile, reduced: &GradedGroup) -> ComplexDoc {
    ComplexDoc {
        version: SCHEMA_VERSION,
        profile: profile.degrees().to_vec(),
        field: Field::Rational,
        reduced: graded_to_entries(reduced),
        empty: false,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MDiscDoc {
    pub version: u32,
    pub d: u32,
    pub m: u32,
    pub field: Field,
    pub reduced: Vec<GroupEntry>,
    pub empty: bool,
}

pub fn mdisc_doc(params: &MDiscParams, reduced: &GradedGroup) -> MDiscDoc {
    MDiscDoc {
        version: SCHEMA_VERSION,
        d: params.d,
        m: params.m,
        field: Field::Rational,
        reduced: graded_to_entries(reduced),
        empty: false,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PageCell {
    pub p: i64,
    pub q: i64,
    pub rank: u32,
    pub torsion: Vec<u64>,
    pub provenance: crate::spectral::Provenance,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PageDoc {
    pub version: u32,
    pub profile: Vec<u32>,
    pub field: Field,
    pub leaf: String,
    pub entries: Vec<PageCell>,
}

pub fn page_doc(profile: &DegreeProfile, page: &SpectralPage, field: Field) -> PageDoc {
    PageDoc {
        version: SCHEMA_VERSION,
        profile: profile.degrees().to_vec(),
        field,
        leaf: match page.leaf {
            PageLeaf::First => "1".to_string(),
            PageLeaf::Infinity => "inf".to_string(),
        },
        entries: page
            .cells()
            .map(|((p, q), e)| PageCell {
                p,
                q,
                rank: e.group.free_rank(),
                torsion: e.group.torsion().to_vec(),
                provenance: e.provenance,
            })
            .collect(),
    }
}

fn form_to_numbers(form: &BinaryForm) -> Vec<Number> {
    form.coeffs()
        .iter()
        .map(|c| c.to_string().parse::<Number>().expect("integer literal"))
        .collect()
}

pub fn numbers_to_form(coeffs: &[Number]) -> BinaryForm {
    BinaryForm::new(
        coeffs
            .iter()
            .map(|n| n.to_string().parse::<BigInt>().expect("integer literal"))
            .collect(),
    )
}

fn system_to_numbers(sys: &PolySystem) -> Vec<Vec<Number>> {
    sys.forms().iter().map(form_to_numbers).collect()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WitnessDoc {
    pub version: u32,
    pub d1: u32,
    pub d2: u32,
    pub index: i64,
    pub forms: Vec<Vec<Number>>,
    pub winding: i64,
    pub in_resultant: bool,
}

pub fn witness_doc(d1: u32, d2: u32, index: i64, sys: &PolySystem, winding: i64) -> WitnessDoc {
    WitnessDoc {
        version: SCHEMA_VERSION,
        d1,
        d2,
        index,
        forms: system_to_numbers(sys),
        winding,
        in_resultant: crate::oracle::in_resultant_variety(sys),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ObservedClass {
    pub value: i64,
    pub count: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WitnessClass {
    pub value: i64,
    pub forms: Vec<Vec<Number>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifyDoc {
    pub version: u32,
    pub profile: Vec<u32>,
    pub empty: bool,
    pub invariant: Option<InvariantKind>,
    pub predicted_b0: Option<u32>,
    pub observed: Vec<ObservedClass>,
    pub witnesses: Vec<WitnessClass>,
    pub accepted: u64,
    pub rejected: u64,
    pub seed: u64,
    pub verified: bool,
}

pub fn verify_doc(report: &ComponentReport) -> VerifyDoc {
    VerifyDoc {
        version: SCHEMA_VERSION,
        profile: report.profile.degrees().to_vec(),
        empty: false,
        invariant: Some(report.invariant_kind),
        predicted_b0: Some(report.predicted_b0),
        observed: report
            .observed
            .iter()
            .map(|(&value, &count)| ObservedClass { value, count })
            .collect(),
        witnesses: report
            .witnesses
            .iter()
            .map(|(&value, sys)| WitnessClass {
                value,
                forms: system_to_numbers(sys),
            })
            .collect(),
        accepted: report.accepted_samples,
        rejected: report.rejected_samples,
        seed: report.seed,
        verified: report.matches_prediction(),
    }
}

pub fn verify_doc_empty(profile: &DegreeProfile, seed: u64) -> VerifyDoc {
    VerifyDoc {
        version: SCHEMA_VERSION,
        profile: profile.degrees().to_vec(),
        empty: true,
        invariant: None,
        predicted_b0: None,
        observed: Vec::new(),
        witnesses: Vec::new(),
        accepted: 0,
        rejected: 0,
        seed,
        verified: true,
    }
}

// ---------------------------------------------------------------------------
// text rendering

/// Cohomology table, one `H~^i = G` line per dimension. The unreduced view
/// bumps the rank in dimension zero by one when the space is non-empty.
pub fn render_graded(reduced: &GradedGroup, field: Field, unreduced: bool) -> String {
    let mut shown = reduced.clone();
    let symbol = if unreduced {
        shown = shown.put(0, FinAbGroup::free(1));
        "H^"
    } else {
        "H~^"
    };
    let mut out = String::new();
    if shown.is_empty() {
        let _ = writeln!(out, "(trivial in every dimension)");
        return out;
    }
    for (dim, g) in shown.iter() {
        let _ = writeln!(out, "{symbol}{dim} = {}", field.group_string(g));
    }
    out
}

pub fn render_real_text(profile: &DegreeProfile, r: &RealCohomology, unreduced: bool) -> String {
    let mut out = format!("profile {profile}: D = {}\n", profile.total_dim());
    if r.complement_empty {
        out.push_str("complement is empty\n");
        return out;
    }
    out.push_str(&render_graded(&r.reduced, Field::Integer, unreduced));
    if let Some(c) = r.component_count {
        let _ = writeln!(out, "components: {c}");
    }
    out
}

pub fn render_complex_text(profile: &DegreeProfile, reduced: &GradedGroup) -> String {
    let mut out = format!(
        "profile {profile} over C: ambient dimension 2D = {}\n",
        2 * profile.total_dim()
    );
    out.push_str(&render_graded(reduced, Field::Rational, false));
    out
}

pub fn render_mdisc_text(params: &MDiscParams, reduced: &GradedGroup) -> String {
    let mut out = format!(
        "m-discriminant complement, d = {}, m = {}\n",
        params.d, params.m
    );
    out.push_str(&render_graded(reduced, Field::Rational, false));
    out
}

/// Text grid of a page: columns `p` ascending, rows `q` descending, empty
/// cells drawn as dots.
pub fn render_page_text(page: &SpectralPage, field: Field) -> String {
    if page.is_empty() {
        return "empty page\n".to_string();
    }
    let p_max = page.cells().map(|((p, _), _)| p).max().unwrap();
    let q_min = page.cells().map(|((_, q), _)| q).min().unwrap();
    let q_max = page.cells().map(|((_, q), _)| q).max().unwrap();

    let cell = |p: i64, q: i64| -> String {
        match page.group(p, q) {
            Some(g) => field.group_string(g),
            None => ".".to_string(),
        }
    };
    let mut width = 3;
    for p in 1..=p_max {
        for q in q_min..=q_max {
            width = width.max(cell(p, q).len());
        }
        width = width.max(p.to_string().len());
    }
    let label_width = q_max.to_string().len().max(q_min.to_string().len()).max(3);

    let mut out = String::new();
    let _ = write!(out, "{:>label_width$} |", "q\\p");
    for p in 1..=p_max {
        let _ = write!(out, " {p:>width$}");
    }
    out.push('\n');
    let _ = writeln!(out, "{}-+{}", "-".repeat(label_width), "-".repeat((width + 1) * p_max as usize));
    for q in (q_min..=q_max).rev() {
        let _ = write!(out, "{q:>label_width$} |");
        for p in 1..=p_max {
            let _ = write!(out, " {:>width$}", cell(p, q));
        }
        out.push('\n');
    }
    out
}

fn class_label(kind: InvariantKind, value: i64) -> String {
    match kind {
        InvariantKind::Winding => format!("winding {value}"),
        InvariantKind::Parity => format!("parity {value}"),
        InvariantKind::Sign => {
            if value == 1 {
                "sign +".to_string()
            } else {
                "sign -".to_string()
            }
        }
    }
}

pub fn render_report_text(report: &ComponentReport) -> String {
    let kind_name = match report.invariant_kind {
        InvariantKind::Winding => "winding",
        InvariantKind::Parity => "parity",
        InvariantKind::Sign => "sign",
    };
    let mut out = format!(
        "profile {}: {kind_name} census, seed {}, {} accepted / {} rejected\n",
        report.profile, report.seed, report.accepted_samples, report.rejected_samples
    );
    let _ = writeln!(out, "predicted components: {}", report.predicted_b0);
    for (&value, &count) in &report.observed {
        let _ = writeln!(
            out,
            "  {}: {count} samples",
            class_label(report.invariant_kind, value)
        );
    }
    for value in report.legal_values() {
        if !report.observed.contains_key(&value) {
            let _ = writeln!(
                out,
                "  {}: 0 samples (witness constructed)",
                class_label(report.invariant_kind, value)
            );
        }
    }
    let distinct = report.distinct_classes().len();
    let _ = writeln!(
        out,
        "distinct classes: {distinct}, witnesses verified: {}",
        if report.verify_witnesses() { "yes" } else { "NO" }
    );
    let _ = writeln!(
        out,
        "verdict: {}",
        if report.matches_prediction() {
            "PASS"
        } else {
            "MISMATCH"
        }
    );
    out
}

pub fn render_witness_text(doc: &WitnessDoc) -> String {
    let mut out = format!(
        "witness for degrees ({}, {}) with winding index {}\n",
        doc.d1, doc.d2, doc.index
    );
    for (i, form) in doc.forms.iter().enumerate() {
        let coeffs: Vec<String> = form.iter().map(|n| n.to_string()).collect();
        let _ = writeln!(out, "  f{} = [{}]", i + 1, coeffs.join(", "));
    }
    let _ = writeln!(out, "winding re-check: {}", doc.winding);
    let _ = writeln!(
        out,
        "on resultant variety: {}",
        if doc.in_resultant { "yes" } else { "no" }
    );
    out
}
