//! Fixture groups shared by the kernel benchmarks in `benches/`.

use quasigor::engine::GroupSpec;
use quasigor::matgroup::FiniteMatrixGroup;

/// Hyperoctahedral group B_3 ⊂ GL(3, ℚ), order 48.
pub const B3: &str = r#"{"field": {"kind": "rational"}, "dim": 3,
  "generators": [[[0,1,0],[1,0,0],[0,0,1]], [[0,0,1],[1,0,0],[0,1,0]], [[-1,0,0],[0,1,0],[0,0,1]]]}"#;

/// ⟨diag(ζ_12, ζ_12⁻¹)⟩ over ℚ(ζ_12), order 12.
pub const CYCLIC12: &str = r#"{"field": {"kind": "cyclotomic", "n": 12}, "dim": 2,
  "generators": [[["z", 0], [0, "z^11"]]]}"#;

/// SL(2, 3) in its natural modular representation, order 24.
pub const SL2F3: &str = r#"{"field": {"kind": "finite", "p": 3}, "dim": 2,
  "generators": [[[1,1],[0,1]], [[1,0],[1,1]]]}"#;

/// ⟨t, −I⟩ over 𝔽_3 with t a transvection: the W̃ rule with a nontrivial quotient.
pub const TRANSVECTION_PM_F3: &str = r#"{"field": {"kind": "finite", "p": 3}, "dim": 2,
  "generators": [[[1,1],[0,1]], [[-1,0],[0,-1]]]}"#;

pub fn spec(text: &str) -> GroupSpec {
    GroupSpec::from_json(text).expect("fixture spec parses")
}

pub fn group(text: &str) -> FiniteMatrixGroup {
    spec(text).enumerate().expect("fixture group is finite")
}
