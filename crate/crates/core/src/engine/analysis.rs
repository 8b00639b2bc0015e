//! The quasi-Gorenstein decision pipeline and its JSON report.
//!
//! Rules, tried in order:
//! 1. NR: G has no pseudo-reflection, so S = A and R is quasi-Gorenstein iff
//!    det is trivial on G.
//! 2. Reflection quotient: H = G (H = W̃ in positive characteristic, W
//!    otherwise), so every character of G/H is trivial and R is
//!    quasi-Gorenstein.
//! 3. W̃: S = A^H is polynomial with generator spaces U_i; the eigen-character
//!    of S is λ_S = ∏ det(g|U_i)⁻¹ and R is quasi-Gorenstein iff λ_S = 1.
//!    The verdict is conditional unless polynomiality is proven or asserted.

use serde::Serialize;

use super::probe::{induced_generator_action, probe_polynomial_structure, GradedAction, ProbeResult, ProbeStatus};
use super::spec::{GroupSpec, SubgroupChoice};
use crate::chars::{character_group, class_group, det_character, graded_det_characters, LinearCharacter};
use crate::error::{Error, Result};
use crate::exactnum::{cyclo_field, RootOfUnity};
use crate::matgroup::{FiniteMatrixGroup, Matrix};
use crate::reflect::{reflection_report, ElementClassification, ReflectionReport};
use crate::series::{graded_poly_series, lambda_via_duality};

/// Upper limit of the default degree bound max(8, |G|).
pub const DEFAULT_DEGREE_CAP: u32 = 10;

pub fn default_degree_bound(order: usize) -> u32 {
    (order.max(8) as u32).min(DEFAULT_DEGREE_CAP)
}

#[derive(Clone, Debug, Serialize)]
pub struct CharacterJson {
    pub m: u64,
    pub exponents: Vec<u64>,
    pub values_on_generators: Vec<String>,
}

impl CharacterJson {
    pub fn new(g: &FiniteMatrixGroup, chi: &LinearCharacter) -> CharacterJson {
        CharacterJson {
            m: chi.root_order(),
            exponents: chi.exponents().to_vec(),
            values_on_generators: g
                .generators()
                .iter()
                .map(|s| chi.value(g.index_of(s).unwrap(), g.field()).to_string())
                .collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SubgroupJson {
    pub order: usize,
    pub index: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassGroupJson {
    pub invariant_factors: Vec<u64>,
    pub order: usize,
    /// Characters of G trivial on W, as indices into Hom(G, μ(k)).
    pub members: Vec<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ProbeJson {
    pub subgroup: &'static str,
    pub subgroup_order: usize,
    pub status: ProbeStatus,
    pub bound: u32,
    pub degrees: Vec<u32>,
    pub generators: Vec<String>,
    pub dims: Vec<usize>,
    pub matched_to: Option<u32>,
    /// Polynomiality proven from the degree product and the Jacobian.
    pub certified: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct CrossCheckJson {
    pub element: usize,
    pub via_dets: String,
    pub via_duality: String,
    pub agree: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct ChiSJson {
    pub m: u64,
    pub exponents: Vec<u64>,
    pub values_on_generators: Vec<String>,
    pub trivial: bool,
    pub generator_degrees: Vec<u32>,
    pub det_characters: Vec<CharacterJson>,
    pub cross_check: Vec<CrossCheckJson>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum VerdictStatus {
    Yes,
    No,
    Conditional,
    Inconclusive,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Rule {
    NrRule,
    ReflectionQuotientRule,
    WtildeRule,
    None,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerdictJson {
    pub status: VerdictStatus,
    pub rule: Rule,
    /// For a conditional verdict: the answer once the conditions hold.
    pub if_conditions_hold: Option<VerdictStatus>,
    pub conditions: Vec<String>,
    pub assertions: Vec<String>,
    pub citations: Vec<String>,
    pub remarks: Vec<String>,
    /// When both the NR rule and the W̃ rule apply: whether they agree.
    pub rules_agree: Option<bool>,
}

#[derive(Clone, Debug, Serialize)]
pub struct AnalysisReport {
    pub field: String,
    pub dim: usize,
    pub order: usize,
    pub reflections: Vec<ElementClassification>,
    #[serde(rename = "W")]
    pub w: SubgroupJson,
    #[serde(rename = "Wtilde")]
    pub wtilde: SubgroupJson,
    pub nr: bool,
    pub class_group: ClassGroupJson,
    pub det_character: CharacterJson,
    pub probe: ProbeJson,
    #[serde(rename = "chi_S")]
    pub chi_s: Option<ChiSJson>,
    pub verdict: VerdictJson,
}

/// Everything computed along the way, for callers that need more than JSON.
pub struct Analysis {
    pub group: FiniteMatrixGroup,
    pub reflections: ReflectionReport,
    pub subgroup: FiniteMatrixGroup,
    pub probe: ProbeResult,
    pub action: Option<GradedAction>,
    pub lambda_s: Option<LinearCharacter>,
    pub report: AnalysisReport,
}

/// λ_S = ∏ det_i⁻¹ and its check against the duality route at one p-regular
/// element of every coset of H.
fn chi_s(
    g: &FiniteMatrixGroup,
    h: &FiniteMatrixGroup,
    action: &GradedAction,
) -> Result<(LinearCharacter, ChiSJson)> {
    let cap = g.field().root_capacity();
    let dets = graded_det_characters(g, &action.matrices, cap)?;
    let mut lambda = LinearCharacter::trivial(g.order(), cap);
    for d in &dets {
        lambda = lambda.mul(&d.inv());
    }
    let sizes: Vec<u32> = action.matrices.iter().zip(&action.degrees).flat_map(|(m, &d)| vec![d; m[0].dim()]).collect();
    let (label, _) = g.cosets(h)?;
    let p = g.field().characteristic();
    let mut done = vec![false; label.len()];
    let mut cross = Vec::new();
    for x in 0..g.order() {
        let ord = g.element_order(x);
        if done[label[x]] || (p > 0 && ord % p == 0) {
            continue;
        }
        done[label[x]] = true;
        let xi = g.inverse_index(x);
        let hx = graded_poly_series(&action.of(x), &action.degrees, ord)?;
        let hi = graded_poly_series(&action.of(xi), &action.degrees, ord)?;
        let (val, _) = lambda_via_duality(&hx, &hi, sizes.len())?;
        let lift: RootOfUnity = lambda.lift(x);
        let f = cyclo_field(num_integer::lcm(lift.order(), val.field().cyclotomic_order().unwrap_or(1)));
        let via_dets = lift.to_scalar(&f)?;
        let via_duality = val.embed(&f)?;
        cross.push(CrossCheckJson {
            element: x,
            agree: via_dets == via_duality,
            via_dets: via_dets.to_string(),
            via_duality: via_duality.to_string(),
        });
    }
    let json = ChiSJson {
        m: cap,
        exponents: lambda.exponents().to_vec(),
        values_on_generators: CharacterJson::new(g, &lambda).values_on_generators,
        trivial: lambda.is_trivial(),
        generator_degrees: action.degrees.clone(),
        det_characters: dets.iter().map(|d| CharacterJson::new(g, d)).collect(),
        cross_check: cross,
    };
    Ok((lambda, json))
}

fn yes_no(b: bool) -> VerdictStatus {
    if b {
        VerdictStatus::Yes
    } else {
        VerdictStatus::No
    }
}

pub fn analyze(spec: &GroupSpec) -> Result<Analysis> {
    let g = spec.enumerate()?;
    let field = g.field().clone();
    let p = field.characteristic();
    let cap = field.root_capacity();
    let bound = spec.options.max_degree.unwrap_or_else(|| default_degree_bound(g.order()));
    let refl = reflection_report(&g);
    let use_wtilde = match spec.options.subgroup {
        SubgroupChoice::Auto => p > 0,
        SubgroupChoice::W => false,
        SubgroupChoice::Wtilde => true,
    };
    let h = if use_wtilde { refl.wtilde.clone() } else { refl.w.clone() };
    let hname = if use_wtilde { "Wtilde" } else { "W" };

    let chars = character_group(&g, cap);
    let cg = class_group(&g, &refl.w, &chars)?;
    let det = det_character(&g, cap)?;

    let probe = probe_polynomial_structure(&h, bound);
    let certified = probe.certified(&h);
    let action = match probe.status {
        ProbeStatus::Polynomial => Some(induced_generator_action(&g, &probe)?),
        _ => None,
    };
    let (lambda_s, chi_json) = match &action {
        Some(a) => {
            let (l, j) = chi_s(&g, &h, a)?;
            if j.cross_check.iter().any(|c| !c.agree) {
                return Err(Error::Internal("λ_S from determinants disagrees with the duality limit".into()));
            }
            (Some(l), Some(j))
        }
        None => (None, None),
    };

    let mut verdict = VerdictJson {
        status: VerdictStatus::Inconclusive,
        rule: Rule::None,
        if_conditions_hold: None,
        conditions: Vec::new(),
        assertions: Vec::new(),
        citations: Vec::new(),
        remarks: Vec::new(),
        rules_agree: None,
    };
    if spec.options.assert_polynomial {
        verdict.assertions.push(format!("user asserts that A^{hname} is a polynomial ring"));
    }
    let proven = certified || spec.options.assert_polynomial;
    let wtilde_value = lambda_s.as_ref().map(|l| l.is_trivial());
    if refl.nr {
        verdict.status = yes_no(det.is_trivial());
        verdict.rule = Rule::NrRule;
        verdict.citations.push("no pseudo-reflections: W = 1 and S = A, so R is quasi-Gorenstein iff G ⊆ SL(V)".into());
        verdict.rules_agree = wtilde_value.map(|v| v == det.is_trivial());
    } else if h.order() == g.order() {
        verdict.status = VerdictStatus::Yes;
        verdict.rule = Rule::ReflectionQuotientRule;
        verdict.citations.push(format!(
            "G = {hname}: the class of the quasi-canonical module lies in Hom(G/{hname}, U(k)) = 1"
        ));
        verdict.rules_agree = wtilde_value;
    } else if let Some(v) = wtilde_value {
        verdict.rule = Rule::WtildeRule;
        verdict.citations.push(format!(
            "A^{hname} polynomial with generator spaces U_i: R is quasi-Gorenstein iff ∏ det(g|U_i)⁻¹ = 1 on G"
        ));
        if proven {
            verdict.status = yes_no(v);
        } else {
            verdict.status = VerdictStatus::Conditional;
            verdict.if_conditions_hold = Some(yes_no(v));
            verdict.conditions.push(format!("A^{hname} is a polynomial ring (checked up to degree {bound})"));
        }
    } else {
        verdict.conditions.push(format!("probe of A^{hname} up to degree {bound}: {:?}", probe.status));
    }
    if verdict.rules_agree == Some(false) {
        return Err(Error::Internal("NR rule and W̃ rule disagree".into()));
    }
    if wtilde_value.is_some() && proven {
        if use_wtilde || p == 0 || g.order() as u64 % p != 0 {
            verdict.remarks.push("A^G is Cohen-Macaulay, so quasi-Gorenstein and Gorenstein coincide".into());
        } else {
            verdict.remarks.push("A^G is Gorenstein if it is Cohen-Macaulay".into());
        }
    }
    if matches!(verdict.status, VerdictStatus::Yes) {
        verdict.remarks.push("the Cohen-Macaulay and Gorenstein loci of R coincide".into());
    }

    let report = AnalysisReport {
        field: field.to_string(),
        dim: g.dim(),
        order: g.order(),
        reflections: refl.classifications.clone(),
        w: SubgroupJson { order: refl.w.order(), index: refl.index_w },
        wtilde: SubgroupJson { order: refl.wtilde.order(), index: refl.index_wtilde },
        nr: refl.nr,
        class_group: ClassGroupJson {
            invariant_factors: cg.structure.invariant_factors.clone(),
            order: cg.order(),
            members: cg.members.clone(),
        },
        det_character: CharacterJson::new(&g, &det),
        probe: ProbeJson {
            subgroup: hname,
            subgroup_order: h.order(),
            status: probe.status,
            bound,
            degrees: probe.degrees.clone(),
            generators: probe.generators.iter().map(|f| f.to_string()).collect(),
            dims: probe.dims.clone(),
            matched_to: probe.matched_to,
            certified,
        },
        chi_s: chi_json,
        verdict,
    };
    Ok(Analysis { group: g, reflections: refl, subgroup: h, probe, action, lambda_s, report })
}

/// The report alone.
pub fn quasi_gorenstein_verdict(spec: &GroupSpec) -> Result<AnalysisReport> {
    Ok(analyze(spec)?.report)
}

pub fn report_json(report: &AnalysisReport) -> String {
    serde_json::to_string_pretty(report).expect("report serializes")
}

/// Human-readable summary of a report.
pub fn report_text(r: &AnalysisReport) -> String {
    let mut s = String::new();
    let tags = |t: crate::reflect::ReflectionTag| r.reflections.iter().filter(|c| c.tag == t).count();
    s.push_str(&format!("group of order {} in GL({}, {})\n", r.order, r.dim, r.field));
    s.push_str(&format!(
        "reflections: {} diagonalizable, {} transvections; NR: {}\n",
        tags(crate::reflect::ReflectionTag::DiagonalizableReflection),
        tags(crate::reflect::ReflectionTag::Transvection),
        r.nr
    ));
    s.push_str(&format!("W: order {}, index {}\n", r.w.order, r.w.index));
    s.push_str(&format!("W~: order {}, index {}\n", r.wtilde.order, r.wtilde.index));
    s.push_str(&format!("class group: {}\n", fmt_factors(&r.class_group.invariant_factors)));
    s.push_str(&format!("det on generators: [{}]\n", r.det_character.values_on_generators.join(", ")));
    s.push_str(&format!(
        "probe of A^{} (order {}) up to degree {}: {:?}, degrees {:?}{}\n",
        r.probe.subgroup,
        r.probe.subgroup_order,
        r.probe.bound,
        r.probe.status,
        r.probe.degrees,
        if r.probe.certified { " (proven)" } else { "" }
    ));
    for (d, f) in r.probe.degrees.iter().zip(&r.probe.generators) {
        s.push_str(&format!("  degree {d}: {f}\n"));
    }
    if let Some(c) = &r.chi_s {
        s.push_str(&format!(
            "lambda_S on generators: [{}] ({})\n",
            c.values_on_generators.join(", "),
            if c.trivial { "trivial" } else { "nontrivial" }
        ));
    }
    let v = &r.verdict;
    s.push_str(&format!("verdict: {:?} by {:?}", v.status, v.rule));
    if let Some(w) = v.if_conditions_hold {
        s.push_str(&format!(" ({w:?} if the conditions hold)"));
    }
    s.push('\n');
    for c in &v.conditions {
        s.push_str(&format!("  condition: {c}\n"));
    }
    for c in &v.assertions {
        s.push_str(&format!("  assertion: {c}\n"));
    }
    for c in &v.citations {
        s.push_str(&format!("  because: {c}\n"));
    }
    for c in &v.remarks {
        s.push_str(&format!("  remark: {c}\n"));
    }
    s
}

pub fn fmt_factors(f: &[u64]) -> String {
    if f.is_empty() {
        "trivial".into()
    } else {
        f.iter().map(|m| format!("Z/{m}")).collect::<Vec<_>>().join(" x ")
    }
}

/// Matrix of element i as rows of display strings.
pub fn matrix_rows(x: &Matrix) -> Vec<Vec<String>> {
    x.rows().iter().map(|r| r.iter().map(|v| v.to_string()).collect()).collect()
}
