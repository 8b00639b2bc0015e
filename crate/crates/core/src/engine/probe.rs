//! Polynomiality probe for A^H and the induced action of G on the graded
//! generator spaces U_d = S_d / (S⁺S⁺)_d of S = A^H.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::invariants::{coordinates, invariants_of_degree};
use crate::linalg::{solve, Span};
use crate::matgroup::{FiniteMatrixGroup, Matrix};
use crate::polyalg::{monomials_of_degree, MultiPoly};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ProbeStatus {
    /// n generators whose monomials span A^H in every degree up to the bound.
    Polynomial,
    NotPolynomial,
    /// Fewer than n generators up to the bound.
    Inconclusive,
}

#[derive(Clone, Debug)]
pub struct ProbeResult {
    pub status: ProbeStatus,
    pub bound: u32,
    /// Generator degrees, ascending.
    pub degrees: Vec<u32>,
    pub generators: Vec<MultiPoly>,
    /// dim (A^H)_d for d ≤ bound.
    pub dims: Vec<usize>,
    /// Largest d with dim (A^H)_e equal to the coefficient of ∏ 1/(1 − t^{d_i})
    /// for all e ≤ d.
    pub matched_to: Option<u32>,
    /// Basis of the degree-d part of the subalgebra generated so far.
    subalgebra: Vec<Vec<MultiPoly>>,
}

/// Number of monomials of degree d in generators of the given degrees.
pub fn product_series_coefficients(degrees: &[u32], bound: u32) -> Vec<usize> {
    let mut c = vec![0usize; bound as usize + 1];
    c[0] = 1;
    for &e in degrees {
        for d in e as usize..=bound as usize {
            c[d] += c[d - e as usize];
        }
    }
    c
}

/// Extracts minimal generators of A^H degree by degree up to `bound`.
pub fn probe_polynomial_structure(h: &FiniteMatrixGroup, bound: u32) -> ProbeResult {
    let h = h.with_reduced_generators();
    let field = h.field();
    let n = h.dim();
    let mut degrees = Vec::new();
    let mut generators: Vec<MultiPoly> = Vec::new();
    let mut dims = vec![1usize];
    let mut subalgebra = vec![vec![MultiPoly::one(field, n)]];
    let mut too_many = false;
    for d in 1..=bound {
        let mons = monomials_of_degree(n, d).len();
        let mut span = Span::new(field, mons);
        let mut basis = Vec::new();
        for (f, &e) in generators.iter().zip(&degrees) {
            for b in &subalgebra[(d - e) as usize] {
                let prod = f * b;
                if span.insert(&coordinates(&prod, d)) {
                    basis.push(prod);
                }
            }
        }
        let inv = invariants_of_degree(&h, d);
        dims.push(inv.dim());
        for f in inv.basis {
            if span.insert(&coordinates(&f, d)) {
                degrees.push(d);
                generators.push(f.clone());
                basis.push(f);
            }
        }
        subalgebra.push(basis);
        if generators.len() > n {
            too_many = true;
            break;
        }
    }
    let reached = dims.len() as u32 - 1;
    let expected = product_series_coefficients(&degrees, reached);
    let matched_to = dims.iter().zip(&expected).take_while(|(a, b)| a == b).count().checked_sub(1).map(|d| d as u32);
    let status = if too_many {
        ProbeStatus::NotPolynomial
    } else if generators.len() < n {
        ProbeStatus::Inconclusive
    } else if matched_to == Some(bound) {
        ProbeStatus::Polynomial
    } else {
        ProbeStatus::NotPolynomial
    };
    ProbeResult { status, bound, degrees, generators, dims, matched_to, subalgebra }
}

/// det of a square matrix of polynomials, by cofactor expansion along row 0.
fn poly_det(m: &[Vec<MultiPoly>]) -> MultiPoly {
    let k = m.len();
    if k == 1 {
        return m[0][0].clone();
    }
    let mut acc = MultiPoly::zero(m[0][0].field(), m[0][0].nvars());
    for j in 0..k {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<MultiPoly>> =
            m[1..].iter().map(|row| row.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, x)| x.clone()).collect()).collect();
        let t = &m[0][j] * &poly_det(&minor);
        acc = if j % 2 == 0 { &acc + &t } else { &acc - &t };
    }
    acc
}

impl ProbeResult {
    /// Whether A^H = k[f_1..f_n] is proven: the generators are algebraically
    /// independent (nonzero Jacobian) and ∏ deg f_i = |H|.
    pub fn certified(&self, h: &FiniteMatrixGroup) -> bool {
        if self.status != ProbeStatus::Polynomial {
            return false;
        }
        let prod: u64 = self.degrees.iter().map(|&d| d as u64).product();
        if prod != h.order() as u64 {
            return false;
        }
        let n = h.dim();
        let jac: Vec<Vec<MultiPoly>> = self.generators.iter().map(|f| (0..n).map(|i| f.derivative(i)).collect()).collect();
        !poly_det(&jac).is_zero()
    }

    /// Span of products of at least two generators in degree d.
    fn decomposable(&self, d: u32) -> Vec<MultiPoly> {
        let mut out = Vec::new();
        for (f, &e) in self.generators.iter().zip(&self.degrees) {
            if e < d {
                out.extend(self.subalgebra[(d - e) as usize].iter().map(|b| f * b));
            }
        }
        out
    }
}

/// Matrices of every element of G on each U_d, one family per distinct
/// generator degree d (ascending).
#[derive(Clone, Debug)]
pub struct GradedAction {
    pub degrees: Vec<u32>,
    /// `matrices[i][g]` is the action of element g on the i-th space.
    pub matrices: Vec<Vec<Matrix>>,
}

impl GradedAction {
    /// Matrices of one element, one per space.
    pub fn of(&self, g: usize) -> Vec<Matrix> {
        self.matrices.iter().map(|m| m[g].clone()).collect()
    }
}

/// Action of G on U_d through generator representatives: g·f_j ≡ Σ_k a_kj f_k
/// modulo decomposables, so that a matrix column holds the image of f_j.
pub fn induced_generator_action(g: &FiniteMatrixGroup, probe: &ProbeResult) -> Result<GradedAction> {
    if probe.status != ProbeStatus::Polynomial {
        return Err(Error::Inconclusive("probe did not find a polynomial structure".into()));
    }
    let field = g.field();
    let n = g.dim();
    let mut distinct: Vec<u32> = probe.degrees.clone();
    distinct.dedup();
    let mut matrices = Vec::with_capacity(distinct.len());
    for &d in &distinct {
        let gens: Vec<&MultiPoly> = probe.generators.iter().zip(&probe.degrees).filter(|(_, &e)| e == d).map(|(f, _)| f).collect();
        let k = gens.len();
        let mut columns: Vec<_> = gens.iter().map(|f| coordinates(f, d)).collect();
        columns.extend(probe.decomposable(d).iter().map(|f| coordinates(f, d)));
        let mut family = Vec::with_capacity(g.order());
        for x in g.elements() {
            let mut data = vec![field.zero(); k * k];
            for (j, f) in gens.iter().enumerate() {
                let img = coordinates(&x.act(f), d);
                let sol = solve(field, &columns, &img)
                    .ok_or_else(|| Error::Internal(format!("image of a degree-{d} generator leaves A^H")))?;
                for (r, v) in sol.into_iter().take(k).enumerate() {
                    data[r * k + j] = v;
                }
            }
            family.push(Matrix::from_entries(field, k, data)?);
        }
        for s in g.generators() {
            let si = g.index_of(s).unwrap();
            for a in 0..g.order() {
                let prod = &family[a] * &family[si];
                if prod != family[g.mul_index(a, si)] {
                    return Err(Error::Internal(format!("induced action on U_{d} is not a homomorphism")));
                }
            }
        }
        matrices.push(family);
    }
    debug_assert_eq!(matrices.iter().map(|m| m[0].dim()).sum::<usize>(), n);
    Ok(GradedAction { degrees: distinct, matrices })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::Field;
    use crate::matgroup::{enumerate_group, DEFAULT_CAP};
    use crate::polyalg::parse_poly;

    fn group(f: &Field, gens: &[Matrix]) -> FiniteMatrixGroup {
        enumerate_group(f, gens[0].dim(), gens, DEFAULT_CAP).unwrap()
    }

    #[test]
    fn product_series() {
        assert_eq!(product_series_coefficients(&[1, 2], 5), vec![1, 1, 2, 2, 3, 3]);
        assert_eq!(product_series_coefficients(&[1, 1, 1], 2), vec![1, 3, 6]);
    }

    #[test]
    fn trivial_group_is_polynomial_in_degree_one() {
        let q = Field::rational();
        let h = group(&q, &[Matrix::identity(&q, 3)]);
        let p = probe_polynomial_structure(&h, 4);
        assert_eq!(p.status, ProbeStatus::Polynomial);
        assert_eq!(p.degrees, vec![1, 1, 1]);
        assert!(p.certified(&h));
    }

    #[test]
    fn transvection_groups() {
        // the second generator is the orbit product of x2
        for (prime, second) in [(2u64, "x1*x2 + x2^2"), (3, "2*x1^2*x2 + x2^3")] {
            let f = Field::prime(prime).unwrap();
            let h = group(&f, &[Matrix::from_ints(&f, &[&[1, 1], &[0, 1]])]);
            let p = probe_polynomial_structure(&h, 6);
            assert_eq!(p.status, ProbeStatus::Polynomial);
            assert_eq!(p.degrees, vec![1, prime as u32]);
            assert_eq!(p.generators[0], parse_poly(&f, 2, "x1").unwrap());
            assert_eq!(p.generators[1], parse_poly(&f, 2, second).unwrap());
            assert_eq!(p.matched_to, Some(6));
            assert!(p.certified(&h));
        }
    }

    #[test]
    fn pm_identity_is_not_polynomial() {
        let q = Field::rational();
        let h = group(&q, &[Matrix::from_ints(&q, &[&[-1, 0], &[0, -1]])]);
        let p = probe_polynomial_structure(&h, 4);
        assert_eq!(p.status, ProbeStatus::NotPolynomial);
        assert_eq!(p.degrees, vec![2, 2, 2]);
        assert!(!p.certified(&h));
    }

    #[test]
    fn low_bound_is_inconclusive() {
        let c3 = Field::cyclotomic(3).unwrap();
        let h = group(&c3, &[Matrix::diag(&c3, &[c3.zeta_power(1), c3.one()])]);
        let p = probe_polynomial_structure(&h, 2);
        assert_eq!(p.status, ProbeStatus::Inconclusive);
        let p = probe_polynomial_structure(&h, 4);
        assert_eq!(p.degrees, vec![1, 3]);
        assert!(p.certified(&h));
    }

    #[test]
    fn reflection_group_degrees_multiply_to_the_order() {
        let q = Field::rational();
        // the dihedral group of order 8 is generated by reflections
        let h = group(&q, &[Matrix::from_ints(&q, &[&[0, 1], &[1, 0]]), Matrix::from_ints(&q, &[&[-1, 0], &[0, 1]])]);
        let p = probe_polynomial_structure(&h, 8);
        assert_eq!(p.degrees, vec![2, 4]);
        assert!(p.certified(&h));
    }

    #[test]
    fn induced_action_on_transvection_generators() {
        for prime in [3u64, 5] {
            let f = Field::prime(prime).unwrap();
            let t = Matrix::from_ints(&f, &[&[1, 1], &[0, 1]]);
            let minus = Matrix::from_ints(&f, &[&[-1, 0], &[0, -1]]);
            let g = group(&f, &[t.clone(), minus.clone()]);
            let h = group(&f, std::slice::from_ref(&t));
            let p = probe_polynomial_structure(&h, prime as u32 + 1);
            let act = induced_generator_action(&g, &p).unwrap();
            assert_eq!(act.degrees, vec![1, prime as u32]);
            let mi = g.index_of(&minus).unwrap();
            assert_eq!(act.matrices[0][mi], Matrix::from_ints(&f, &[&[-1]]));
            assert_eq!(act.matrices[1][mi], Matrix::from_ints(&f, &[&[-1]]));
            let ti = g.index_of(&t).unwrap();
            assert!(act.of(ti).iter().all(Matrix::is_identity));
        }
    }

    #[test]
    fn trivial_subgroup_gives_the_defining_matrices() {
        let q = Field::rational();
        let g = group(&q, &[Matrix::from_ints(&q, &[&[0, -1], &[1, 0]])]);
        let h = group(&q, &[Matrix::identity(&q, 2)]);
        let act = induced_generator_action(&g, &probe_polynomial_structure(&h, 2)).unwrap();
        for (i, x) in g.elements().iter().enumerate() {
            assert_eq!(&act.matrices[0][i], x);
        }
    }
}
