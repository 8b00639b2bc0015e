//! Degree-bounded invariants and semi-invariants by exact linear solving, the
//! gcd d_χ of A_χ with its character μ_χ, and the class map χ ↦ [χ⁻¹μ_χ].

use std::collections::HashMap;

use serde::Serialize;

use crate::chars::{character_from_values, character_group, class_group, LinearCharacter};
use crate::error::{Error, Result};
use crate::exactnum::{Field, Scalar};
use crate::linalg::{nullspace, Span};
use crate::matgroup::{FiniteMatrixGroup, Matrix};
use crate::polyalg::{monomials_of_degree, multipoly_gcd, Monomial, MultiPoly};

/// g·f, with g·x_j = Σ_i M_ij x_i extended multiplicatively.
pub fn group_action(g: &Matrix, f: &MultiPoly) -> Result<MultiPoly> {
    if f.nvars() != g.dim() {
        return Err(Error::DimensionMismatch { expected: g.dim(), got: f.nvars() });
    }
    Ok(g.act(f))
}

/// A basis of (A_χ)_d; `character` is None for invariants.
#[derive(Clone, Debug)]
pub struct GradedBasis {
    pub degree: u32,
    pub basis: Vec<MultiPoly>,
    pub character: Option<LinearCharacter>,
}

impl GradedBasis {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

pub fn invariants_of_degree(g: &FiniteMatrixGroup, d: u32) -> GradedBasis {
    let ones = vec![g.field().one(); g.generators().len()];
    GradedBasis { degree: d, basis: eigen_solve(g, &ones, d), character: None }
}

fn check_in_field(g: &FiniteMatrixGroup, chi: &LinearCharacter) -> Result<()> {
    let f = g.field();
    if f.root_capacity() % chi.root_order() != 0 {
        return Err(Error::InvalidField(format!("values of the character lie outside {f}")));
    }
    if chi.exponents().len() != g.order() {
        return Err(Error::DimensionMismatch { expected: g.order(), got: chi.exponents().len() });
    }
    Ok(())
}

fn generator_values(g: &FiniteMatrixGroup, chi: &LinearCharacter) -> Vec<Scalar> {
    g.generators().iter().map(|s| chi.value(g.index_of(s).unwrap(), g.field())).collect()
}

pub fn semi_invariants_of_degree(g: &FiniteMatrixGroup, chi: &LinearCharacter, d: u32) -> Result<GradedBasis> {
    check_in_field(g, chi)?;
    let basis = eigen_solve(g, &generator_values(g, chi), d);
    Ok(GradedBasis { degree: d, basis, character: Some(chi.clone()) })
}

/// Solutions of s·f = c_s f for every generator s, over the monomials of degree d.
fn eigen_solve(g: &FiniteMatrixGroup, values: &[Scalar], d: u32) -> Vec<MultiPoly> {
    let field = g.field();
    let n = g.dim();
    let mons = monomials_of_degree(n, d);
    let pos: HashMap<&Monomial, usize> = mons.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    for (s, c) in g.generators().iter().zip(values) {
        // column j holds the coordinates of (s − c)·m_j
        let mut block = vec![vec![field.zero(); mons.len()]; mons.len()];
        for (j, m) in mons.iter().enumerate() {
            let img = s.act(&MultiPoly::term(m.clone(), field.one()));
            for (mi, v) in img.terms() {
                block[pos[mi]][j] = v.clone();
            }
            block[j][j] = &block[j][j] - c;
        }
        rows.extend(block.into_iter().filter(|r| r.iter().any(|x| !x.is_zero())));
    }
    nullspace(field, rows, mons.len())
        .into_iter()
        .map(|v| MultiPoly::from_terms(field, n, mons.iter().cloned().zip(v)))
        .collect()
}

fn require_nonmodular(g: &FiniteMatrixGroup) -> Result<Scalar> {
    let p = g.field().characteristic();
    if p > 0 && g.order() as u64 % p == 0 {
        return Err(Error::Modular { p, order: g.order() });
    }
    Ok(g.field().from_int(g.order() as i64).inv().unwrap())
}

/// |G|⁻¹ Σ_g g·f.
pub fn reynolds(f: &MultiPoly, g: &FiniteMatrixGroup) -> Result<MultiPoly> {
    let inv = require_nonmodular(g)?;
    let mut acc = MultiPoly::zero(g.field(), g.dim());
    for x in g.elements() {
        acc = &acc + &group_action(x, f)?;
    }
    Ok(acc.scale(&inv))
}

/// |G|⁻¹ Σ_g χ(g) g⁻¹·f, the projection onto A_χ.
pub fn twisted_projection(f: &MultiPoly, g: &FiniteMatrixGroup, chi: &LinearCharacter) -> Result<MultiPoly> {
    let inv = require_nonmodular(g)?;
    check_in_field(g, chi)?;
    let mut acc = MultiPoly::zero(g.field(), g.dim());
    for i in 0..g.order() {
        let h = g.element(g.inverse_index(i));
        acc = &acc + &group_action(h, f)?.scale(&chi.value(i, g.field()));
    }
    Ok(acc.scale(&inv))
}

/// gcd of A_χ up to a degree bound, with its character and ideal class.
#[derive(Clone, Debug)]
pub struct SemiInvariantSummary {
    pub character: LinearCharacter,
    pub bound: u32,
    pub spanning: Vec<GradedBasis>,
    /// Monic gcd of all spanning polynomials.
    pub dchi: MultiPoly,
    /// g(d_χ) = μ_χ(g)·d_χ, over the full root group of k.
    pub mu: LinearCharacter,
    /// χ⁻¹μ_χ, over the full root group of k.
    pub class: LinearCharacter,
    pub free: bool,
}

/// c with g·f = c·f, if f is an eigenvector of g.
fn eigenvalue_of(g: &Matrix, f: &MultiPoly) -> Option<Scalar> {
    let img = g.act(f);
    let (m, c) = f.leading_term()?;
    let ratio = img.coeff(m).div(c).ok()?;
    (img == f.scale(&ratio)).then_some(ratio)
}

pub fn dchi_estimate(g: &FiniteMatrixGroup, chi: &LinearCharacter, bound: u32) -> Result<SemiInvariantSummary> {
    check_in_field(g, chi)?;
    let spanning = (0..=bound).map(|d| semi_invariants_of_degree(g, chi, d)).collect::<Result<Vec<_>>>()?;
    let all: Vec<MultiPoly> = spanning.iter().flat_map(|b| b.basis.iter().cloned()).collect();
    if all.is_empty() {
        return Err(Error::Inconclusive(format!("no semi-invariants up to degree {bound}")));
    }
    let dchi = multipoly_gcd(&all)?.monic();
    let values = g
        .elements()
        .iter()
        .map(|x| eigenvalue_of(x, &dchi).ok_or_else(|| Error::Internal(format!("gcd {dchi} is not semi-invariant"))))
        .collect::<Result<Vec<_>>>()?;
    let cap = g.field().root_capacity();
    let mu = character_from_values(g, &values, cap)?;
    let class = chi.rescale(cap).expect("checked above").inv().mul(&mu);
    Ok(SemiInvariantSummary { free: class.is_trivial(), character: chi.clone(), bound, spanning, dchi, mu, class })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum TransversalStatus {
    Injective,
    Collision,
    Inconclusive,
}

#[derive(Clone, Debug, Serialize)]
pub struct TransversalEntry {
    /// Index in Hom(G, μ(k)).
    pub character: usize,
    /// Index of [χ⁻¹μ_χ] in Hom(G, μ(k)); None when inconclusive.
    pub class: Option<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct TransversalReport {
    pub bound: u32,
    pub entries: Vec<TransversalEntry>,
    pub collisions: Vec<(usize, usize)>,
    pub status: TransversalStatus,
}

/// Checks that χ ↦ [χ⁻¹μ_χ] is injective on ker(res_W).
pub fn transversal_check(g: &FiniteMatrixGroup, w: &FiniteMatrixGroup, bound: u32) -> Result<TransversalReport> {
    let chars = character_group(g, g.field().root_capacity());
    let cg = class_group(g, w, &chars)?;
    let mut entries = Vec::with_capacity(cg.members.len());
    let mut seen: HashMap<usize, usize> = HashMap::new();
    let mut collisions = Vec::new();
    let mut inconclusive = false;
    for &i in &cg.members {
        let class = match dchi_estimate(g, &chars.characters[i], bound) {
            Ok(s) => Some(chars.index_of(&s.class).ok_or_else(|| Error::Internal("class outside Hom(G, μ(k))".into()))?),
            Err(Error::Inconclusive(_)) => None,
            Err(e) => return Err(e),
        };
        match class {
            Some(c) => {
                if let Some(&j) = seen.get(&c) {
                    collisions.push((j, i));
                } else {
                    seen.insert(c, i);
                }
            }
            None => inconclusive = true,
        }
        entries.push(TransversalEntry { character: i, class });
    }
    let status = if !collisions.is_empty() {
        TransversalStatus::Collision
    } else if inconclusive {
        TransversalStatus::Inconclusive
    } else {
        TransversalStatus::Injective
    };
    Ok(TransversalReport { bound, entries, collisions, status })
}

/// Coordinates of f over the monomials of its degree.
pub fn coordinates(f: &MultiPoly, d: u32) -> Vec<Scalar> {
    monomials_of_degree(f.nvars(), d).iter().map(|m| f.coeff(m)).collect()
}

/// Whether f lies in the span of a graded basis.
pub fn in_span(basis: &GradedBasis, f: &MultiPoly, field: &Field) -> bool {
    let mut span = Span::new(field, monomials_of_degree(f.nvars(), basis.degree).len());
    for b in &basis.basis {
        span.insert(&coordinates(b, basis.degree));
    }
    span.contains(&coordinates(f, basis.degree))
}
