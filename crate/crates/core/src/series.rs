//! Brauer character series of graded actions, the duality identity and
//! Molien-type averages.

use std::collections::HashMap;

use num_integer::Integer;
use serde::Serialize;

use crate::chars::LinearCharacter;
use crate::error::{Error, Result};
use crate::exactnum::{cyclo_field, reduce_to_finite, Field, RootOfUnity, Scalar};
use crate::matgroup::{eigenvalues, eigenvalues_over, Eigenvalues, FiniteMatrixGroup, Matrix};
use crate::polyalg::{monomials_of_degree, Monomial, RationalFunction, UniPoly};

/// Where the Brauer lifts of one element were taken.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EmbeddingRecord {
    /// L with all lifts in ℚ(ζ_L).
    pub conductor: u64,
    /// Degree of the splitting extension over k (finite fields only).
    pub extension_degree: Option<usize>,
    pub extension_size: Option<u128>,
    /// Code of the generator ρ whose lift is ζ_{|𝔽_Q^*|}.
    pub root_code: Option<u128>,
}

#[derive(Clone, Debug)]
pub struct BrauerSeriesResult {
    pub series: RationalFunction,
    pub lifts: Vec<(RootOfUnity, usize)>,
    pub embedding: EmbeddingRecord,
}

impl BrauerSeriesResult {
    pub fn degree(&self) -> i64 {
        self.series.degree().unwrap()
    }
}

fn conductor(lifts: &[(RootOfUnity, usize)]) -> u64 {
    lifts.iter().fold(1u64, |acc, (r, _)| acc.lcm(&r.order()))
}

fn record(e: &Eigenvalues, base: &Field) -> EmbeddingRecord {
    EmbeddingRecord {
        conductor: conductor(&e.lifts),
        extension_degree: base.is_finite().then(|| e.field.degree() / base.degree()),
        extension_size: if base.is_finite() { e.field.size() } else { None },
        root_code: e.root.as_ref().and_then(|r| r.code()),
    }
}

/// ∏ over pieces of ∏_j 1/(1 − ζ_j t^{d})^{mult_j}, over ℚ(ζ_L).
pub fn lifted_product(pieces: &[(&[(RootOfUnity, usize)], u32)]) -> Result<RationalFunction> {
    let l = pieces.iter().fold(1u64, |acc, (lifts, _)| acc.lcm(&conductor(lifts)));
    let f = cyclo_field(l);
    let mut den = UniPoly::one(&f);
    for (lifts, d) in pieces {
        for &(z, mult) in lifts.iter() {
            let c = z.to_scalar(&f)?;
            let factor = &UniPoly::one(&f) - &UniPoly::monomial(c, *d as usize);
            den = &den * &factor.pow(mult);
        }
    }
    RationalFunction::new(UniPoly::one(&f), den)
}

fn p_singular(g: &Matrix, order: u64) -> Error {
    Error::PSingular { order, p: g.field().characteristic() }
}

/// H_{A,g}(t) = ∏ 1/(1 − λ̂_i t) for a p-regular g.
pub fn brauer_series_sym(g: &Matrix) -> Result<BrauerSeriesResult> {
    let e = eigenvalues(g)?;
    series_from_eigen(g, e)
}

/// As [`brauer_series_sym`] for an element of known order.
pub fn brauer_series_of(g: &Matrix, order: u64) -> Result<BrauerSeriesResult> {
    let e = eigenvalues_over(g, order)?;
    series_from_eigen(g, e)
}

fn series_from_eigen(g: &Matrix, e: Eigenvalues) -> Result<BrauerSeriesResult> {
    if e.p_singular {
        return Err(p_singular(g, e.order));
    }
    let series = lifted_product(&[(&e.lifts, 1)])?;
    Ok(BrauerSeriesResult { series, embedding: record(&e, g.field()), lifts: e.lifts })
}

/// Traces of g on A_0..A_D, by acting on monomial bases.
pub fn trace_series_truncated(g: &Matrix, d: u32) -> Vec<Scalar> {
    let images = g.variable_images();
    let n = g.dim();
    let f = g.field();
    let mut out = Vec::with_capacity(d as usize + 1);
    // images of monomials degree by degree: m·x_i ↦ image(m)·image(x_i)
    let mut prev: HashMap<Monomial, crate::polyalg::MultiPoly> = HashMap::new();
    prev.insert(Monomial::one(n), crate::polyalg::MultiPoly::one(f, n));
    out.push(f.one());
    for deg in 1..=d {
        let mut cur = HashMap::new();
        let mut tr = f.zero();
        for m in monomials_of_degree(n, deg) {
            let i = m.0.iter().rposition(|&e| e > 0).unwrap();
            let mut lower = m.clone();
            lower.0[i] -= 1;
            let img = &prev[&lower] * &images[i];
            tr = &tr + &img.coeff(&m);
            cur.insert(m, img);
        }
        out.push(tr);
        prev = cur;
    }
    out
}

/// ∏_i ∏_j 1/(1 − λ̂_{ij} t^{d_i}) for the matrices of one element on graded
/// generator spaces U_i; `order` is the order of that element.
pub fn graded_poly_series(actions: &[Matrix], degrees: &[u32], order: u64) -> Result<RationalFunction> {
    if actions.len() != degrees.len() {
        return Err(Error::DimensionMismatch { expected: degrees.len(), got: actions.len() });
    }
    let mut eig = Vec::with_capacity(actions.len());
    for m in actions {
        let e = eigenvalues_over(m, order)?;
        if e.p_singular {
            return Err(p_singular(m, order));
        }
        eig.push(e);
    }
    let pieces: Vec<(&[(RootOfUnity, usize)], u32)> =
        eig.iter().zip(degrees).map(|(e, &d)| (&e.lifts[..], d)).collect();
    lifted_product(&pieces)
}

/// Bring two rational functions over cyclotomic fields into a common one.
pub fn unify(a: &RationalFunction, b: &RationalFunction) -> Result<(RationalFunction, RationalFunction)> {
    let na = a.field().cyclotomic_order().ok_or_else(|| Error::InvalidField(a.field().to_string()))?;
    let nb = b.field().cyclotomic_order().ok_or_else(|| Error::InvalidField(b.field().to_string()))?;
    let f = cyclo_field(na.lcm(&nb));
    Ok((a.embed(&f)?, b.embed(&f)?))
}

/// λ̂(g) = (−1)^d · [H_g(t) / H_{g⁻¹}(1/t)] at t = 1, together with a with
/// ratio = c·t^a.
pub fn lambda_via_duality(hg: &RationalFunction, hg_inv: &RationalFunction, d: usize) -> Result<(Scalar, i64)> {
    let (hg, hg_inv) = unify(hg, hg_inv)?;
    let ratio = hg.div(&hg_inv.substitute_inverse())?;
    let (c, a) = ratio.as_monomial().ok_or_else(|| Error::NotMonomial(ratio.to_string()))?;
    let sign = if d % 2 == 0 { c } else { -&c };
    Ok((sign, a))
}

/// Brauer lift of det(g) (the value itself in characteristic 0).
pub fn det_lift(g: &Matrix) -> Result<RootOfUnity> {
    let f = g.field();
    let e = f.root_log(&g.det())?.ok_or_else(|| Error::NotInRoots(f.root_capacity()))?;
    Ok(RootOfUnity::new(f.root_capacity(), e as i64))
}

#[derive(Clone, Debug)]
pub struct DualityCheckResult {
    pub left: RationalFunction,
    pub expected: RationalFunction,
    pub lambda: RootOfUnity,
    pub pass: bool,
}

/// H_{A,g}(t)/H_{A,g⁻¹}(1/t) against (−1)^n t^{−n} det̂(g)⁻¹.
pub fn duality_check(g: &Matrix, order: u64) -> Result<DualityCheckResult> {
    let n = g.dim();
    let hg = brauer_series_of(g, order)?.series;
    let hinv = brauer_series_of(&g.inverse()?, order)?.series;
    let (hg, hinv) = unify(&hg, &hinv)?;
    let left = hg.div(&hinv.substitute_inverse())?;
    let lambda = det_lift(g)?.inv();
    let (left, base) = unify(&left, &RationalFunction::one(&cyclo_field(lambda.order())))?;
    let f = left.field().clone();
    let c = lambda.to_scalar(&f)?;
    let c = if n % 2 == 0 { c } else { -&c };
    let expected = RationalFunction::monomial(c, -(n as i64)).mul(&base);
    Ok(DualityCheckResult { pass: left == expected, left, expected, lambda })
}

/// Reduce the Brauer series coefficients of g back to k and compare with the
/// traces on A_0..A_D. In characteristic 0 the comparison is direct.
pub fn trace_compatible(g: &Matrix, order: u64, d: u32) -> Result<bool> {
    let e = eigenvalues_over(g, order)?;
    let series = lifted_product(&[(&e.lifts, 1)])?;
    let coeffs = series.series_coefficients(d as usize)?;
    let traces = trace_series_truncated(g, d);
    if g.field().is_finite() {
        let l = series.field().cyclotomic_order().unwrap();
        let zeta = e.zeta_image(l).ok_or_else(|| Error::Internal("conductor outside the extension".into()))?;
        let emb = g.field().extension(e.field.degree() / g.field().degree())?;
        for (c, t) in coeffs.iter().zip(&traces) {
            if reduce_to_finite(c, &zeta)? != emb.apply(t)? {
                return Ok(false);
            }
        }
        Ok(true)
    } else {
        let (a, b) = (series.field().clone(), g.field().clone());
        let l = a.cyclotomic_order().unwrap().lcm(&b.cyclotomic_order().unwrap());
        let f = cyclo_field(l);
        for (c, t) in coeffs.iter().zip(&traces) {
            if c.embed(&f)? != t.embed(&f)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

fn to_rational_poly(p: &UniPoly) -> Result<UniPoly> {
    let q = Field::rational();
    let v = p
        .coeffs()
        .iter()
        .map(|c| {
            c.to_rational()
                .ok_or_else(|| Error::Internal(format!("irrational coefficient {c}")))
                .and_then(|r| q.from_rational(&r))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(UniPoly::new(&q, v))
}

/// Rewrite a rational function whose coefficients are rational over ℚ.
pub fn to_rational_coefficients(f: &RationalFunction) -> Result<RationalFunction> {
    RationalFunction::new(to_rational_poly(f.numerator())?, to_rational_poly(f.denominator())?)
}

/// (1/|G|) Σ_g χ(g)⁻¹ H_{A,g}(t), returned over ℚ. `None` gives the Molien series.
pub fn isotypic_average(g: &FiniteMatrixGroup, chi: Option<&LinearCharacter>) -> Result<RationalFunction> {
    let p = g.field().characteristic();
    if p > 0 && g.order() as u64 % p == 0 {
        return Err(Error::Modular { p, order: g.order() });
    }
    // group by (characteristic polynomial, character value)
    let mut keys: Vec<(Vec<Scalar>, u64)> = Vec::new();
    let mut reps: Vec<usize> = Vec::new();
    let mut counts: Vec<u64> = Vec::new();
    let mut pos: HashMap<(Vec<Scalar>, u64), usize> = HashMap::new();
    for i in 0..g.order() {
        let key = (g.element(i).charpoly().coeffs().to_vec(), chi.map_or(0, |c| c.exponent(i)));
        match pos.get(&key) {
            Some(&k) => counts[k] += 1,
            None => {
                pos.insert(key.clone(), keys.len());
                keys.push(key);
                reps.push(i);
                counts.push(1);
            }
        }
    }
    let mut terms = Vec::with_capacity(reps.len());
    let mut l = 1u64;
    for (k, &i) in reps.iter().enumerate() {
        let e = eigenvalues_over(g.element(i), g.element_order(i))?;
        let w = chi.map_or(RootOfUnity::one(), |c| c.lift(i).inv());
        l = l.lcm(&conductor(&e.lifts)).lcm(&w.order());
        terms.push((e.lifts, w, counts[k]));
    }
    // every 1/(1 − λt) with λ ∈ μ_L is (1 + λt + … + λ^{L−1}t^{L−1})/(1 − t^L), so the
    // sum has denominator (1 − t^L)^n and only the final reduction needs a gcd (over ℚ)
    let f = cyclo_field(l);
    let n = g.dim();
    let mut num = UniPoly::zero(&f);
    for (lifts, w, c) in terms {
        let mut term = UniPoly::constant(&w.to_scalar(&f)? * &f.from_int(c as i64));
        for (z, mult) in lifts {
            let z = z.to_scalar(&f)?;
            let mut geo = Vec::with_capacity(l as usize);
            let mut pw = f.one();
            for _ in 0..l {
                geo.push(pw.clone());
                pw = &pw * &z;
            }
            term = &term * &UniPoly::new(&f, geo).pow(mult);
        }
        num = &num + &term;
    }
    let num = num.scale(&f.from_int(g.order() as i64).inv().unwrap());
    let q = Field::rational();
    let num = to_rational_poly(&num)?;
    let base = &UniPoly::one(&q) - &UniPoly::monomial(q.one(), l as usize);
    RationalFunction::new(num, base.pow(n))
}

pub fn molien_average(g: &FiniteMatrixGroup) -> Result<RationalFunction> {
    isotypic_average(g, None)
}

#[cfg(test)]
mod tests {
    use proptest::prelude::*;

    use super::*;
    use crate::chars::{character_group, det_character};
    use crate::matgroup::{enumerate_group, DEFAULT_CAP};

    fn q() -> Field {
        Field::rational()
    }

    fn rf(f: &Field, num: &[i64], den: &[i64]) -> RationalFunction {
        RationalFunction::new(UniPoly::from_ints(f, num), UniPoly::from_ints(f, den)).unwrap()
    }

    fn group(f: &Field, gens: &[Matrix]) -> FiniteMatrixGroup {
        enumerate_group(f, gens[0].dim(), gens, DEFAULT_CAP).unwrap()
    }

    /// dim of degree-d monomials fixed up to the character: brute force over
    /// diagonal groups, where monomials are eigenvectors.
    fn diagonal_dims(g: &FiniteMatrixGroup, chi: Option<&LinearCharacter>, d: u32) -> usize {
        let n = g.dim();
        monomials_of_degree(n, d)
            .into_iter()
            .filter(|m| {
                (0..g.order()).all(|i| {
                    let x = g.element(i);
                    let v = (0..n).fold(g.field().one(), |acc, j| &acc * &x.get(j, j).pow_u(m.0[j] as u64));
                    let target = chi.map_or(g.field().one(), |c| c.value(i, g.field()));
                    v == target
                })
            })
            .count()
    }

    #[test]
    fn brauer_series_examples() {
        let h = brauer_series_sym(&Matrix::identity(&q(), 2)).unwrap();
        assert_eq!(h.series, rf(&q(), &[1], &[1, -2, 1]));
        assert_eq!(h.degree(), -2);
        let h = brauer_series_sym(&Matrix::from_ints(&q(), &[&[-1, 0], &[0, -1]])).unwrap();
        assert_eq!(h.series, rf(&q(), &[1], &[1, 2, 1]));
        let h = brauer_series_sym(&Matrix::from_ints(&q(), &[&[0, -1], &[1, 0]])).unwrap();
        let c4 = Field::cyclotomic(4).unwrap();
        assert_eq!(h.series, rf(&c4, &[1], &[1, 0, 1]));
        let t = Matrix::from_ints(&Field::prime(3).unwrap(), &[&[1, 1], &[0, 1]]);
        assert!(matches!(brauer_series_sym(&t), Err(Error::PSingular { order: 3, p: 3 })));
    }

    #[test]
    fn finite_field_series_record_the_extension() {
        let k = Field::prime(3).unwrap();
        let g = Matrix::from_ints(&k, &[&[0, -1], &[1, 0]]);
        let h = brauer_series_sym(&g).unwrap();
        assert_eq!(h.embedding.extension_degree, Some(2));
        assert_eq!(h.embedding.conductor, 4);
        assert_eq!(h.series, rf(&Field::cyclotomic(4).unwrap(), &[1], &[1, 0, 1]));
    }

    #[test]
    fn trace_series_examples() {
        let one = Matrix::identity(&q(), 1);
        assert_eq!(trace_series_truncated(&one, 3), vec![q().one(); 4]);
        let s = Matrix::from_ints(&q(), &[&[-1, 0], &[0, 1]]);
        assert_eq!(trace_series_truncated(&s, 2), vec![q().one(), q().zero(), q().one()]);
        let f2 = Field::prime(2).unwrap();
        let t = Matrix::from_ints(&f2, &[&[1, 1], &[0, 1]]);
        assert_eq!(trace_series_truncated(&t, 2), vec![f2.one(), f2.zero(), f2.one()]);
    }

    #[test]
    fn graded_series_examples() {
        let g = Matrix::from_ints(&q(), &[&[0, -1], &[1, 0]]);
        assert_eq!(graded_poly_series(std::slice::from_ref(&g), &[1], 4).unwrap(), brauer_series_sym(&g).unwrap().series);
        let minus = Matrix::from_ints(&q(), &[&[-1]]);
        assert_eq!(graded_poly_series(&[minus], &[2], 2).unwrap(), rf(&q(), &[1], &[1, 0, 1]));
        let one = Matrix::identity(&q(), 1);
        let h = graded_poly_series(&[one.clone(), one], &[1, 2], 1).unwrap();
        assert_eq!(h, rf(&q(), &[1], &[1, -1]).mul(&rf(&q(), &[1], &[1, 0, -1])));
    }

    #[test]
    fn lambda_examples() {
        let hg = brauer_series_sym(&Matrix::identity(&q(), 1)).unwrap().series;
        let (l, a) = lambda_via_duality(&hg, &hg, 1).unwrap();
        assert_eq!((l, a), (q().one(), -1));
        let s = Matrix::from_ints(&q(), &[&[-1, 0], &[0, 1]]);
        let hs = brauer_series_sym(&s).unwrap().series;
        assert_eq!(lambda_via_duality(&hs, &hs, 2).unwrap(), (q().from_int(-1), -2));
        let c3 = Field::cyclotomic(3).unwrap();
        let z = c3.zeta_power(1);
        let g = Matrix::diag(&c3, &[z.clone(), z.clone()]);
        let hg = brauer_series_sym(&g).unwrap().series;
        let hi = brauer_series_sym(&g.inverse().unwrap()).unwrap().series;
        let (l, a) = lambda_via_duality(&hg, &hi, 2).unwrap();
        assert_eq!(a, -2);
        assert_eq!(l.embed(&c3).unwrap_or(l.clone()), z);
        let bad = rf(&q(), &[1, 1], &[1]);
        assert!(matches!(lambda_via_duality(&bad, &hg, 1), Err(Error::NotMonomial(_))));
    }

    #[test]
    fn duality_examples() {
        let r = duality_check(&Matrix::identity(&q(), 3), 1).unwrap();
        assert!(r.pass);
        assert_eq!(r.left, RationalFunction::monomial(q().from_int(-1), -3));
        let minus = Matrix::from_ints(&q(), &[&[-1, 0], &[0, -1]]);
        let r = duality_check(&minus, 2).unwrap();
        assert!(r.pass);
        assert_eq!(r.left, RationalFunction::monomial(q().one(), -2));
    }

    fn test_groups() -> Vec<FiniteMatrixGroup> {
        let c3 = Field::cyclotomic(3).unwrap();
        let z = c3.zeta_power(1);
        let c4 = Field::cyclotomic(4).unwrap();
        let i = c4.zeta_power(1);
        let f7 = Field::prime(7).unwrap();
        let f4 = Field::finite(2, vec![1, 1, 1]).unwrap();
        vec![
            group(&q(), &[Matrix::from_ints(&q(), &[&[-1, 0], &[0, -1]])]),
            group(&q(), &[Matrix::from_ints(&q(), &[&[0, -1], &[1, 0]]), Matrix::from_ints(&q(), &[&[0, 1], &[1, 0]])]),
            group(&c3, &[Matrix::diag(&c3, &[z.clone(), z.pow_u(2)])]),
            group(&c4, &[Matrix::from_ints(&c4, &[&[0, -1], &[1, 0]]), Matrix::diag(&c4, &[i.clone(), -&i])]),
            group(&f7, &[Matrix::diag(&f7, &[f7.from_int(2), f7.from_int(4)]), Matrix::from_ints(&f7, &[&[0, 1], &[1, 0]])]),
            group(&f4, &[Matrix::diag(&f4, &[f4.generator(), f4.one(), f4.one()])]),
        ]
    }

    #[test]
    fn duality_and_lambda_on_groups() {
        for g in test_groups() {
            for i in 0..g.order() {
                let x = g.element(i);
                let r = duality_check(x, g.element_order(i)).unwrap();
                assert!(r.pass, "element {x}");
                let hg = brauer_series_of(x, g.element_order(i)).unwrap().series;
                let hi = brauer_series_of(&x.inverse().unwrap(), g.element_order(i)).unwrap().series;
                let (l, a) = lambda_via_duality(&hg, &hi, g.dim()).unwrap();
                assert_eq!(a, -(g.dim() as i64));
                let want = det_lift(x).unwrap().inv();
                let f = cyclo_field(want.order().lcm(&l.field().cyclotomic_order().unwrap()));
                assert_eq!(l.embed(&f).unwrap(), want.to_scalar(&f).unwrap());
            }
        }
    }

    #[test]
    fn traces_match_reduced_series() {
        for g in test_groups() {
            for i in 0..g.order() {
                assert!(trace_compatible(g.element(i), g.element_order(i), 6).unwrap());
            }
        }
    }

    #[test]
    fn molien_examples() {
        let triv = group(&q(), &[Matrix::identity(&q(), 1)]);
        assert_eq!(molien_average(&triv).unwrap(), rf(&q(), &[1], &[1, -1]));
        let g = &test_groups()[0];
        let m = molien_average(g).unwrap();
        assert_eq!(m, rf(&q(), &[1, 0, 1], &[1, 0, -2, 0, 1]));
        let c = m.series_coefficients(4).unwrap();
        assert_eq!(c, [1, 0, 3, 0, 5].iter().map(|&v| q().from_int(v)).collect::<Vec<_>>());
        let g = &test_groups()[2];
        let c = molien_average(g).unwrap().series_coefficients(6).unwrap();
        let want: Vec<_> = (0..=6).map(|d| q().from_int(diagonal_dims(g, None, d) as i64)).collect();
        assert_eq!(c, want);
        assert_eq!(want[..6], [1, 0, 1, 2, 1, 2].iter().map(|&v| q().from_int(v)).collect::<Vec<_>>()[..]);
    }

    #[test]
    fn modular_average_is_refused() {
        let f3 = Field::prime(3).unwrap();
        let g = group(&f3, &[Matrix::from_ints(&f3, &[&[1, 1], &[0, 1]])]);
        assert!(matches!(molien_average(&g), Err(Error::Modular { p: 3, order: 3 })));
    }

    #[test]
    fn isotypic_examples() {
        let g = &test_groups()[0];
        let cg = character_group(g, 2);
        assert_eq!(isotypic_average(g, Some(&cg.characters[0])).unwrap(), molien_average(g).unwrap());
        let sign = &cg.characters[1];
        let h = isotypic_average(g, Some(sign)).unwrap();
        assert_eq!(h, rf(&q(), &[0, 2], &[1, 0, -2, 0, 1]));
        let s = group(&q(), &[Matrix::from_ints(&q(), &[&[-1, 0], &[0, 1]])]);
        let det = det_character(&s, 2).unwrap();
        let h = isotypic_average(&s, Some(&det)).unwrap();
        let c = h.series_coefficients(8).unwrap();
        let want: Vec<_> = (0..=8).map(|d| q().from_int(diagonal_dims(&s, Some(&det), d) as i64)).collect();
        assert_eq!(c, want);
        assert_eq!(h, rf(&q(), &[0, 1], &[1, -1, -1, 1]));
    }

    #[test]
    fn isotypic_over_finite_field_matches_brute_force() {
        let f7 = Field::prime(7).unwrap();
        let d7 = group(&f7, &[Matrix::diag(&f7, &[f7.from_int(2), f7.from_int(4)]), Matrix::diag(&f7, &[f7.from_int(-1), f7.one()])]);
        for g in [&d7, &test_groups()[5]] {
            let cg = character_group(g, g.field().root_capacity());
            for chi in &cg.characters {
                let c = isotypic_average(g, Some(chi)).unwrap().series_coefficients(6).unwrap();
                let want: Vec<_> = (0..=6).map(|d| q().from_int(diagonal_dims(g, Some(chi), d) as i64)).collect();
                assert_eq!(c, want);
            }
        }
    }

    #[test]
    fn tensor_factorization_for_diagonal_elements() {
        // B = k[x1] ⊂ A = k[x1, x2], A/B₊A = k[x2]
        let c12 = Field::cyclotomic(12).unwrap();
        for (a, b) in [(1i64, 5i64), (3, 4), (6, 2), (0, 11)] {
            let g = Matrix::diag(&c12, &[c12.zeta_power(a), c12.zeta_power(b)]);
            let ha = brauer_series_sym(&g).unwrap().series;
            let hb = brauer_series_sym(&Matrix::diag(&c12, &[c12.zeta_power(a)])).unwrap().series;
            let hq = brauer_series_sym(&Matrix::diag(&c12, &[c12.zeta_power(b)])).unwrap().series;
            let (hb, hq) = unify(&hb, &hq).unwrap();
            let (x, y) = unify(&hb.mul(&hq), &ha).unwrap();
            assert_eq!(x, y);
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(40))]

        #[test]
        fn random_f3_elements_satisfy_duality(v in prop::collection::vec(0i64..3, 9)) {
            let k = Field::prime(3).unwrap();
            let m = Matrix::from_entries(&k, 3, v.iter().map(|&x| k.from_int(x)).collect()).unwrap();
            prop_assume!(!m.det().is_zero());
            let e = eigenvalues(&m).unwrap();
            prop_assume!(!e.p_singular);
            prop_assert!(duality_check(&m, e.order).unwrap().pass);
            prop_assert!(trace_compatible(&m, e.order, 5).unwrap());
        }
    }
}
