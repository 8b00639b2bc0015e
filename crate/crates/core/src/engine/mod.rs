//! Group specs, the polynomiality probe, the quasi-Gorenstein verdict and the
//! reports behind the command-line tool.

mod analysis;
mod probe;
mod reports;
mod spec;

pub use analysis::{
    analyze, default_degree_bound, fmt_factors, quasi_gorenstein_verdict, report_json, report_text, Analysis,
    AnalysisReport, CharacterJson, ChiSJson, ClassGroupJson, CrossCheckJson, ProbeJson, Rule, SubgroupJson,
    VerdictJson, VerdictStatus, DEFAULT_DEGREE_CAP,
};
pub use probe::{
    induced_generator_action, probe_polynomial_structure, product_series_coefficients, GradedAction, ProbeResult,
    ProbeStatus,
};
pub use reports::{
    classgroup_report, det_character_index, identity_report, invariants_report, semiinv_report, series_report,
    ClassGroupReport, DegreeBasis, ElementSeries, IdentityReport, InvariantsReport, SemiInvariantsReport,
    SeriesReport, SuiteResult,
};
pub use spec::{AnalysisOptions, GroupSpec, SubgroupChoice};
