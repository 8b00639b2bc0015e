//! Reports behind the `series`, `classgroup`, `invariants`, `semiinv` and
//! `check-identities` commands.

use serde::Serialize;

use super::analysis::{default_degree_bound, matrix_rows, CharacterJson, ClassGroupJson};
use super::spec::GroupSpec;
use crate::chars::{character_group, class_group, det_character};
use crate::error::{Error, Result};
use crate::exactnum::cyclo_field;
use crate::invariants::{dchi_estimate, invariants_of_degree, semi_invariants_of_degree, transversal_check, TransversalReport};
use crate::matgroup::FiniteMatrixGroup;
use crate::reflect::reflection_subgroup;
use crate::series::{
    brauer_series_of, det_lift, duality_check, isotypic_average, lambda_via_duality, molien_average, trace_compatible,
    EmbeddingRecord,
};

#[derive(Clone, Debug, Serialize)]
pub struct ElementSeries {
    pub element: usize,
    pub matrix: Vec<Vec<String>>,
    pub order: u64,
    /// None for p-singular elements.
    pub series: Option<String>,
    pub embedding: Option<EmbeddingRecord>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SeriesReport {
    pub order: usize,
    pub elements: Vec<ElementSeries>,
    /// Molien series; None in the modular case.
    pub molien: Option<String>,
}

pub fn series_report(spec: &GroupSpec, element: Option<usize>) -> Result<SeriesReport> {
    let g = spec.enumerate()?;
    let idx: Vec<usize> = match element {
        Some(i) if i >= g.order() => return Err(Error::Parse(format!("element {i} out of range 0..{}", g.order()))),
        Some(i) => vec![i],
        None => (0..g.order()).collect(),
    };
    let mut elements = Vec::with_capacity(idx.len());
    for i in idx {
        let order = g.element_order(i);
        let (series, embedding) = match brauer_series_of(g.element(i), order) {
            Ok(r) => (Some(r.series.to_string()), Some(r.embedding)),
            Err(Error::PSingular { .. }) => (None, None),
            Err(e) => return Err(e),
        };
        elements.push(ElementSeries { element: i, matrix: matrix_rows(g.element(i)), order, series, embedding });
    }
    let molien = match molien_average(&g) {
        Ok(m) => Some(m.to_string()),
        Err(Error::Modular { .. }) => None,
        Err(e) => return Err(e),
    };
    Ok(SeriesReport { order: g.order(), elements, molien })
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct SuiteResult {
    pub checked: usize,
    pub passed: usize,
    /// Elements (or character indices) that failed.
    pub failures: Vec<usize>,
    /// Why the suite did not run, if it did not.
    pub skipped: Option<String>,
}

impl SuiteResult {
    fn record(&mut self, id: usize, ok: bool) {
        self.checked += 1;
        if ok {
            self.passed += 1;
        } else {
            self.failures.push(id);
        }
    }

    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct IdentityReport {
    pub order: usize,
    pub bound: u32,
    /// H_g(t)/H_{g⁻¹}(1/t) = (−1)^n t^{−n} det̂(g)⁻¹ on p-regular elements.
    pub duality: SuiteResult,
    /// The duality limit equals det̂(g)⁻¹.
    pub lambda: SuiteResult,
    /// Brauer series coefficients reduce to the traces on A_d.
    pub traces: SuiteResult,
    /// Molien coefficients equal dim (A^G)_d.
    pub molien: SuiteResult,
    /// Isotypic coefficients equal dim (A_χ)_d, per character index.
    pub isotypic: SuiteResult,
    pub all_pass: bool,
}

pub fn identity_report(spec: &GroupSpec, bound: Option<u32>) -> Result<IdentityReport> {
    let g = spec.enumerate()?;
    let bound = bound.or(spec.options.max_degree).unwrap_or_else(|| default_degree_bound(g.order()));
    let p = g.field().characteristic();
    let n = g.dim();
    let mut duality = SuiteResult::default();
    let mut lambda = SuiteResult::default();
    let mut traces = SuiteResult::default();
    for i in 0..g.order() {
        let order = g.element_order(i);
        if p > 0 && order % p == 0 {
            continue;
        }
        let x = g.element(i);
        duality.record(i, duality_check(x, order)?.pass);
        let hg = brauer_series_of(x, order)?.series;
        let hi = brauer_series_of(g.element(g.inverse_index(i)), order)?.series;
        let (val, a) = lambda_via_duality(&hg, &hi, n)?;
        let want = det_lift(x)?.inv();
        let f = cyclo_field(num_integer::lcm(want.order(), val.field().cyclotomic_order().unwrap_or(1)));
        lambda.record(i, a == -(n as i64) && val.embed(&f)? == want.to_scalar(&f)?);
        traces.record(i, trace_compatible(x, order, bound)?);
    }
    let (molien, isotypic) = molien_suites(&g, bound)?;
    let all_pass = duality.ok() && lambda.ok() && traces.ok() && molien.ok() && isotypic.ok();
    Ok(IdentityReport { order: g.order(), bound, duality, lambda, traces, molien, isotypic, all_pass })
}

fn molien_suites(g: &FiniteMatrixGroup, bound: u32) -> Result<(SuiteResult, SuiteResult)> {
    let mut molien = SuiteResult::default();
    let mut isotypic = SuiteResult::default();
    let coeffs = match molien_average(g) {
        Ok(m) => m.series_coefficients(bound as usize)?,
        Err(Error::Modular { p, order }) => {
            let why = Some(format!("characteristic {p} divides |G| = {order}"));
            molien.skipped = why.clone();
            isotypic.skipped = why;
            return Ok((molien, isotypic));
        }
        Err(e) => return Err(e),
    };
    let q = coeffs[0].field().clone();
    for d in 0..=bound {
        let dim = invariants_of_degree(g, d).dim();
        molien.record(d as usize, coeffs[d as usize] == q.from_int(dim as i64));
    }
    let chars = character_group(g, g.field().root_capacity());
    for (k, chi) in chars.characters.iter().enumerate() {
        let c = isotypic_average(g, Some(chi))?.series_coefficients(bound as usize)?;
        let ok = (0..=bound)
            .map(|d| semi_invariants_of_degree(g, chi, d).map(|b| c[d as usize] == q.from_int(b.dim() as i64)))
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .all(|x| x);
        isotypic.record(k, ok);
    }
    Ok((molien, isotypic))
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassGroupReport {
    pub order: usize,
    pub class_group: ClassGroupJson,
    pub characters: Vec<CharacterJson>,
    pub transversal: TransversalReport,
}

pub fn classgroup_report(spec: &GroupSpec, bound: Option<u32>) -> Result<ClassGroupReport> {
    let g = spec.enumerate()?;
    let bound = bound.or(spec.options.max_degree).unwrap_or_else(|| default_degree_bound(g.order()));
    let w = reflection_subgroup(&g);
    let chars = character_group(&g, g.field().root_capacity());
    let cg = class_group(&g, &w, &chars)?;
    Ok(ClassGroupReport {
        order: g.order(),
        class_group: ClassGroupJson {
            invariant_factors: cg.structure.invariant_factors.clone(),
            order: cg.order(),
            members: cg.members.clone(),
        },
        characters: chars.characters.iter().map(|c| CharacterJson::new(&g, c)).collect(),
        transversal: transversal_check(&g, &w, bound)?,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct DegreeBasis {
    pub degree: u32,
    pub basis: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct InvariantsReport {
    pub order: usize,
    pub max_degree: u32,
    pub degrees: Vec<DegreeBasis>,
}

pub fn invariants_report(spec: &GroupSpec, max_degree: u32) -> Result<InvariantsReport> {
    let g = spec.enumerate()?;
    let degrees = (0..=max_degree)
        .map(|d| DegreeBasis {
            degree: d,
            basis: invariants_of_degree(&g, d).basis.iter().map(|f| f.to_string()).collect(),
        })
        .collect();
    Ok(InvariantsReport { order: g.order(), max_degree, degrees })
}

#[derive(Clone, Debug, Serialize)]
pub struct SemiInvariantsReport {
    pub order: usize,
    pub max_degree: u32,
    pub character_index: usize,
    pub character: CharacterJson,
    pub degrees: Vec<DegreeBasis>,
    /// gcd of everything above; None if there is nothing up to the bound.
    pub dchi: Option<String>,
    pub mu: Option<CharacterJson>,
    /// Index of [χ⁻¹μ_χ] in Hom(G, μ(k)).
    pub class: Option<usize>,
    pub free: Option<bool>,
}

/// Semi-invariants of character `index` of Hom(G, μ(k)); index `det` style
/// lookups are left to the caller.
pub fn semiinv_report(spec: &GroupSpec, index: usize, max_degree: u32) -> Result<SemiInvariantsReport> {
    let g = spec.enumerate()?;
    let chars = character_group(&g, g.field().root_capacity());
    let chi = chars
        .characters
        .get(index)
        .ok_or_else(|| Error::Parse(format!("character {index} out of range 0..{}", chars.len())))?;
    let degrees = (0..=max_degree)
        .map(|d| {
            semi_invariants_of_degree(&g, chi, d).map(|b| DegreeBasis {
                degree: d,
                basis: b.basis.iter().map(|f| f.to_string()).collect(),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let (dchi, mu, class, free) = match dchi_estimate(&g, chi, max_degree) {
        Ok(s) => (
            Some(s.dchi.to_string()),
            Some(CharacterJson::new(&g, &s.mu)),
            chars.index_of(&s.class),
            Some(s.free),
        ),
        Err(Error::Inconclusive(_)) => (None, None, None, None),
        Err(e) => return Err(e),
    };
    Ok(SemiInvariantsReport {
        order: g.order(),
        max_degree,
        character_index: index,
        character: CharacterJson::new(&g, chi),
        degrees,
        dchi,
        mu,
        class,
        free,
    })
}

/// Index of the determinant character in Hom(G, μ(k)).
pub fn det_character_index(spec: &GroupSpec) -> Result<usize> {
    let g = spec.enumerate()?;
    let cap = g.field().root_capacity();
    let chars = character_group(&g, cap);
    chars.index_of(&det_character(&g, cap)?).ok_or_else(|| Error::Internal("det outside Hom(G, μ(k))".into()))
}
