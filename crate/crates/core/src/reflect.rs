//! Pseudo-reflections: classification of elements, the reflection subgroup W,
//! the subgroup W̃ generated by reflections and p-elements, and the (NR) test.

use serde::Serialize;

use crate::error::Result;
use crate::matgroup::{matrix_order, FiniteMatrixGroup, Matrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ReflectionTag {
    Identity,
    DiagonalizableReflection,
    Transvection,
    NonReflection,
}

impl ReflectionTag {
    pub fn is_reflection(self) -> bool {
        matches!(self, ReflectionTag::DiagonalizableReflection | ReflectionTag::Transvection)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ElementClassification {
    pub index: usize,
    pub tag: ReflectionTag,
    pub order: u64,
    pub fixed_dim: usize,
}

/// Tag from rank(g − I) and, when that rank is 1, whether (g − I)² vanishes.
fn tag_of(g: &Matrix) -> (ReflectionTag, usize) {
    let n = g.dim();
    let d = g.sub(&Matrix::identity(g.field(), n));
    let r = d.rank();
    let tag = match r {
        0 => ReflectionTag::Identity,
        1 if (&d * &d).entries().iter().all(|x| x.is_zero()) => ReflectionTag::Transvection,
        1 => ReflectionTag::DiagonalizableReflection,
        _ => ReflectionTag::NonReflection,
    };
    (tag, n - r)
}

pub fn classify_element(g: &Matrix) -> Result<ElementClassification> {
    let (tag, fixed_dim) = tag_of(g);
    Ok(ElementClassification { index: 0, tag, order: matrix_order(g)?, fixed_dim })
}

/// Classification of every element, in the group's element order.
pub fn classify_group(g: &FiniteMatrixGroup) -> Vec<ElementClassification> {
    (0..g.order())
        .map(|i| {
            let (tag, fixed_dim) = tag_of(g.element(i));
            ElementClassification { index: i, tag, order: g.element_order(i), fixed_dim }
        })
        .collect()
}

fn reflections(g: &FiniteMatrixGroup, cls: &[ElementClassification]) -> Vec<Matrix> {
    cls.iter().filter(|c| c.tag.is_reflection()).map(|c| g.element(c.index).clone()).collect()
}

fn is_p_power(mut n: u64, p: u64) -> bool {
    if p == 0 || n == 1 {
        return false;
    }
    while n % p == 0 {
        n /= p;
    }
    n == 1
}

/// W = ⟨all reflections⟩; normal since the generating set is a union of classes.
pub fn reflection_subgroup(g: &FiniteMatrixGroup) -> FiniteMatrixGroup {
    let cls = classify_group(g);
    g.generated_subgroup(&reflections(g, &cls)).expect("reflections lie in G")
}

/// W̃ = ⟨reflections, elements of p-power order⟩; equals W in characteristic 0.
pub fn wtilde_subgroup(g: &FiniteMatrixGroup) -> FiniteMatrixGroup {
    let cls = classify_group(g);
    wtilde_from(g, &cls)
}

fn wtilde_from(g: &FiniteMatrixGroup, cls: &[ElementClassification]) -> FiniteMatrixGroup {
    let p = g.field().characteristic();
    let gens: Vec<Matrix> = cls
        .iter()
        .filter(|c| c.tag.is_reflection() || is_p_power(c.order, p))
        .map(|c| g.element(c.index).clone())
        .collect();
    g.generated_subgroup(&gens).expect("elements lie in G")
}

/// True iff G contains no pseudo-reflection.
pub fn check_nr(g: &FiniteMatrixGroup) -> bool {
    g.elements().iter().all(|x| !tag_of(x).0.is_reflection())
}

#[derive(Clone)]
pub struct ReflectionReport {
    pub w: FiniteMatrixGroup,
    pub wtilde: FiniteMatrixGroup,
    pub classifications: Vec<ElementClassification>,
    pub nr: bool,
    pub index_w: usize,
    pub index_wtilde: usize,
}

pub fn reflection_report(g: &FiniteMatrixGroup) -> ReflectionReport {
    let cls = classify_group(g);
    let refl = reflections(g, &cls);
    let nr = refl.is_empty();
    let w = g.generated_subgroup(&refl).expect("reflections lie in G");
    let wtilde = wtilde_from(g, &cls);
    debug_assert!(g.is_normal(&w) && g.is_normal(&wtilde));
    ReflectionReport {
        index_w: g.order() / w.order(),
        index_wtilde: g.order() / wtilde.order(),
        w,
        wtilde,
        classifications: cls,
        nr,
    }
}

#[cfg(test)]
mod tests {
    use proptest::prelude::*;

    use super::*;
    use crate::exactnum::Field;
    use crate::matgroup::{enumerate_group, DEFAULT_CAP};

    fn q() -> Field {
        Field::rational()
    }

    fn group(f: &Field, gens: &[Matrix]) -> FiniteMatrixGroup {
        enumerate_group(f, gens[0].dim(), gens, DEFAULT_CAP).unwrap()
    }

    #[test]
    fn classify_examples() {
        assert_eq!(classify_element(&Matrix::identity(&q(), 2)).unwrap().tag, ReflectionTag::Identity);
        let s = classify_element(&Matrix::from_ints(&q(), &[&[-1, 0], &[0, 1]])).unwrap();
        assert_eq!(s.tag, ReflectionTag::DiagonalizableReflection);
        assert_eq!((s.order, s.fixed_dim), (2, 1));
        for p in [2, 3, 5] {
            let f = Field::prime(p).unwrap();
            let t = classify_element(&Matrix::from_ints(&f, &[&[1, 1], &[0, 1]])).unwrap();
            assert_eq!(t.tag, ReflectionTag::Transvection);
            assert_eq!(t.order, p);
        }
        let m = classify_element(&Matrix::from_ints(&q(), &[&[-1, 0], &[0, -1]])).unwrap();
        assert_eq!(m.tag, ReflectionTag::NonReflection);
    }

    #[test]
    fn reflection_subgroup_examples() {
        let minus = Matrix::from_ints(&q(), &[&[-1, 0], &[0, -1]]);
        assert_eq!(reflection_subgroup(&group(&q(), &[minus])).order(), 1);
        let c3 = Field::cyclotomic(3).unwrap();
        let g = group(&c3, &[Matrix::diag(&c3, &[c3.zeta_power(1), c3.one()])]);
        assert_eq!(reflection_subgroup(&g).order(), 3);
        let f2 = Field::prime(2).unwrap();
        let gl = group(
            &f2,
            &[Matrix::from_ints(&f2, &[&[1, 1], &[0, 1]]), Matrix::from_ints(&f2, &[&[0, 1], &[1, 0]])],
        );
        assert_eq!(gl.order(), 6);
        assert_eq!(reflection_subgroup(&gl).order(), 6);
    }

    #[test]
    fn wtilde_examples() {
        let minus = Matrix::from_ints(&q(), &[&[-1, 0], &[0, -1]]);
        let s = Matrix::from_ints(&q(), &[&[0, 1], &[1, 0]]);
        let g = group(&q(), &[minus, s]);
        assert_eq!(wtilde_subgroup(&g).order(), reflection_subgroup(&g).order());
        let f3 = Field::prime(3).unwrap();
        let g = group(&f3, &[Matrix::from_ints(&f3, &[&[1, 1], &[0, 1]])]);
        assert_eq!(wtilde_subgroup(&g).order(), 3);
        let f7 = Field::prime(7).unwrap();
        let g = group(&f7, &[Matrix::from_ints(&f7, &[&[-1, 0], &[0, -1]])]);
        assert_eq!(wtilde_subgroup(&g).order(), 1);
    }

    #[test]
    fn wtilde_contains_non_reflection_p_elements() {
        // two unipotent Jordan blocks: a 3-element with rank(g − I) = 2
        let f3 = Field::prime(3).unwrap();
        let u = Matrix::from_ints(&f3, &[&[1, 1, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 1], &[0, 0, 0, 1]]);
        let g = group(&f3, &[u]);
        assert!(check_nr(&g));
        let rep = reflection_report(&g);
        assert_eq!(rep.w.order(), 1);
        assert_eq!(rep.wtilde.order(), 3);
        assert_eq!(rep.index_wtilde, 1);
    }

    #[test]
    fn nr_examples() {
        let minus = Matrix::from_ints(&q(), &[&[-1, 0], &[0, -1]]);
        assert!(check_nr(&group(&q(), &[minus])));
        assert!(!check_nr(&group(&q(), &[Matrix::from_ints(&q(), &[&[-1, 0], &[0, 1]])])));
        for (p, a) in [(7u64, 2i64), (5, 2), (13, 5)] {
            let f = Field::prime(p).unwrap();
            let x = f.from_int(a);
            assert!(x.mult_order().unwrap() >= 3);
            let g = group(&f, &[Matrix::diag(&f, &[x.clone(), x.inv().unwrap()])]);
            assert!(check_nr(&g));
            assert_eq!(reflection_subgroup(&g).order(), 1);
        }
    }

    fn gl2(p: u64) -> FiniteMatrixGroup {
        let k = Field::prime(p).unwrap();
        group(
            &k,
            &[
                Matrix::from_ints(&k, &[&[1, 1], &[0, 1]]),
                Matrix::from_ints(&k, &[&[0, 1], &[1, 0]]),
                Matrix::diag(&k, &[k.generator(), k.one()]),
            ],
        )
    }

    #[test]
    fn report_invariants() {
        let k = Field::prime(3).unwrap();
        let s3 = group(&k, &[Matrix::from_ints(&k, &[&[0, 1, 0], &[0, 0, 1], &[1, 0, 0]])]);
        for g in [gl2(3), gl2(5), s3] {
            let rep = reflection_report(&g);
            assert!(g.is_normal(&rep.w));
            assert!(g.is_normal(&rep.wtilde));
            assert_eq!(rep.wtilde.order() % rep.w.order(), 0);
            assert_ne!(rep.index_wtilde as u64 % g.field().characteristic(), 0);
            assert_eq!(rep.nr, rep.w.order() == 1);
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn tags_are_conjugation_invariant(i in 0usize..48, j in 0usize..48) {
            let g = gl2(3);
            let x = g.element(i);
            let h = g.element(j);
            let c = &(h * x) * &h.inverse().unwrap();
            prop_assert_eq!(classify_element(x).unwrap().tag, classify_element(&c).unwrap().tag);
        }
    }
}
