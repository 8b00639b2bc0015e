use proptest::prelude::*;

use super::*;
use crate::exactnum::{Field, RootOfUnity};

fn q() -> Field {
    Field::rational()
}

fn f(p: u64) -> Field {
    Field::prime(p).unwrap()
}

fn quaternion() -> FiniteMatrixGroup {
    let c = Field::cyclotomic(4).unwrap();
    let i = c.zeta_power(1);
    let a = Matrix::from_ints(&c, &[&[0, -1], &[1, 0]]);
    let b = Matrix::diag(&c, &[i.clone(), -&i]);
    enumerate_group(&c, 2, &[a, b], DEFAULT_CAP).unwrap()
}

fn gl2(p: u64) -> FiniteMatrixGroup {
    let k = f(p);
    let t = Matrix::from_ints(&k, &[&[1, 1], &[0, 1]]);
    let s = Matrix::from_ints(&k, &[&[0, 1], &[1, 0]]);
    let d = Matrix::diag(&k, &[k.generator(), k.one()]);
    enumerate_group(&k, 2, &[t, s, d], DEFAULT_CAP).unwrap()
}

fn closed(g: &FiniteMatrixGroup) -> bool {
    g.elements().iter().all(|a| {
        g.contains(&a.inverse().unwrap()) && g.elements().iter().all(|b| g.contains(&(a * b)))
    })
}

#[test]
fn enumerate_examples() {
    assert_eq!(enumerate_group(&q(), 2, &[], 10).unwrap().order(), 1);
    let minus = Matrix::from_ints(&q(), &[&[-1, 0], &[0, -1]]);
    assert_eq!(enumerate_group(&q(), 2, &[minus], 10).unwrap().order(), 2);
    let r = Matrix::from_ints(&q(), &[&[0, -1], &[1, 0]]);
    let g = enumerate_group(&q(), 2, std::slice::from_ref(&r), 10).unwrap();
    assert_eq!(g.order(), 4);
    // BFS order: I, g, g², g³
    assert_eq!(g.element(1), &r);
    assert_eq!(g.element(2), &(&r * &r));
}

#[test]
fn enumerate_errors() {
    let t = Matrix::from_ints(&q(), &[&[1, 1], &[0, 1]]);
    assert_eq!(enumerate_group(&q(), 2, &[t], 50).err(), Some(crate::Error::CapExceeded(50)));
    let big = Matrix::from_ints(&q(), &[&[1, 2], &[3, 4]]);
    assert_eq!(enumerate_group(&q(), 2, &[big], 10_000).err(), Some(crate::Error::InfiniteOrder));
    // det 1 but hyperbolic: caught by coefficient growth, not by the cap
    let hyp = Matrix::from_ints(&q(), &[&[2, 1], &[1, 1]]);
    assert_eq!(enumerate_group(&q(), 2, &[hyp], 10_000).err(), Some(crate::Error::InfiniteOrder));
    let s = Matrix::from_ints(&q(), &[&[1, 1], &[1, 1]]);
    assert_eq!(enumerate_group(&q(), 2, &[s], 50).err(), Some(crate::Error::SingularMatrix));
    let m = Matrix::from_ints(&f(3), &[&[1, 0], &[0, 1]]);
    assert!(matches!(enumerate_group(&q(), 2, &[m], 50), Err(crate::Error::FieldMismatch(..))));
}

#[test]
fn element_order_examples() {
    assert_eq!(element_order(&Matrix::identity(&q(), 2), 10).unwrap(), 1);
    assert_eq!(element_order(&Matrix::from_ints(&q(), &[&[-1, 0], &[0, -1]]), 10).unwrap(), 2);
    let t = Matrix::from_ints(&f(3), &[&[1, 1], &[0, 1]]);
    assert_eq!(element_order(&t, 10).unwrap(), 3);
    assert_eq!(matrix_order(&t).unwrap(), 3);
    let u = Matrix::from_ints(&q(), &[&[1, 1], &[0, 1]]);
    assert!(element_order(&u, 100).is_err());
}

#[test]
fn group_element_orders_and_inverses() {
    let g = gl2(3);
    assert_eq!(g.order(), 48);
    assert!(closed(&g));
    for i in 0..g.order() {
        assert_eq!(g.element_order(i), element_order(g.element(i), 100).unwrap());
        assert_eq!(g.element_order(i), matrix_order(g.element(i)).unwrap());
        assert!(g.element(g.mul_index(i, g.inverse_index(i))).is_identity());
    }
    assert_eq!(g.exponent(), 24);
}

#[test]
fn commutator_examples() {
    let c4 = enumerate_group(&q(), 2, &[Matrix::from_ints(&q(), &[&[0, -1], &[1, 0]])], 10).unwrap();
    assert_eq!(c4.commutator_subgroup().order(), 1);
    let s3 = gl2(2);
    assert_eq!(s3.order(), 6);
    let k = s3.commutator_subgroup();
    assert_eq!(k.order(), 3);
    assert!(s3.is_normal(&k));
    let q8 = quaternion();
    assert_eq!(q8.order(), 8);
    let k = q8.commutator_subgroup();
    assert_eq!(k.order(), 2);
    assert!(k.contains(&Matrix::identity(q8.field(), 2).scale(&q8.field().from_int(-1))));
    assert_eq!(gl2(3).commutator_subgroup().order(), 24);
}

#[test]
fn abelianization_examples() {
    let minus = Matrix::from_ints(&q(), &[&[-1, 0], &[0, -1]]);
    let c2 = enumerate_group(&q(), 2, &[minus], 10).unwrap();
    assert_eq!(c2.abelianization().abelian.invariant_factors, vec![2]);
    assert_eq!(gl2(2).abelianization().abelian.invariant_factors, vec![2]);
    assert_eq!(quaternion().abelianization().abelian.invariant_factors, vec![2, 2]);
    assert_eq!(gl2(3).abelianization().abelian.invariant_factors, vec![2]);
    let c = Field::cyclotomic(4).unwrap();
    let d = Matrix::diag(&c, &[c.zeta_power(1), c.one()]);
    let e = Matrix::diag(&c, &[c.one(), c.from_int(-1)]);
    let g = enumerate_group(&c, 2, &[d, e], 100).unwrap();
    assert_eq!(g.abelianization().abelian.invariant_factors, vec![2, 4]);
}

#[test]
fn abelianization_map_is_a_homomorphism() {
    for g in [quaternion(), gl2(3), gl2(2)] {
        let ab = g.abelianization();
        let ms = &ab.abelian.invariant_factors;
        for a in 0..g.order() {
            for b in 0..g.order() {
                let s: Vec<u64> = ab.map(a).iter().zip(ab.map(b)).zip(ms).map(|((x, y), m)| (x + y) % m).collect();
                assert_eq!(ab.map(g.mul_index(a, b)), &s[..]);
            }
        }
        for x in ab.commutator.elements() {
            assert!(ab.map(g.index_of(x).unwrap()).iter().all(|&c| c == 0));
        }
        assert_eq!(ab.abelian.order() as usize * ab.commutator.order(), g.order());
    }
}

#[test]
fn generated_subgroup_examples() {
    let r = Matrix::from_ints(&q(), &[&[0, -1], &[1, 0]]);
    let c4 = enumerate_group(&q(), 2, &[r], 10).unwrap();
    assert_eq!(c4.generated_subgroup(&[]).unwrap().order(), 1);
    let minus = Matrix::from_ints(&q(), &[&[-1, 0], &[0, -1]]);
    assert_eq!(c4.generated_subgroup(&[minus]).unwrap().order(), 2);
    let s3 = gl2(2);
    let transvections: Vec<Matrix> = s3
        .elements()
        .iter()
        .filter(|g| {
            let d = g.sub(&Matrix::identity(s3.field(), 2));
            d.rank() == 1 && (&d * &d).entries().iter().all(|x| x.is_zero())
        })
        .cloned()
        .collect();
    assert_eq!(transvections.len(), 3);
    assert_eq!(s3.generated_subgroup(&transvections).unwrap().order(), 6);
    let outside = Matrix::from_ints(&q(), &[&[2, 0], &[0, 1]]);
    assert_eq!(c4.generated_subgroup(&[outside]).err(), Some(crate::Error::NotSubgroup));
}

#[test]
fn conjugation_stable_sets_generate_normal_subgroups() {
    let g = gl2(3);
    // elements of order 3 form a union of conjugacy classes
    let s: Vec<Matrix> = (0..g.order()).filter(|&i| g.element_order(i) == 3).map(|i| g.element(i).clone()).collect();
    let h = g.generated_subgroup(&s).unwrap();
    for x in g.elements() {
        let xi = x.inverse().unwrap();
        for y in h.elements() {
            assert!(h.contains(&(&(x * y) * &xi)));
        }
    }
}

#[test]
fn eigenvalue_examples() {
    let e = eigenvalues(&Matrix::identity(&q(), 2)).unwrap();
    assert_eq!(e.lifts, vec![(RootOfUnity::one(), 2)]);
    let e = eigenvalues(&Matrix::from_ints(&q(), &[&[-1, 0], &[0, -1]])).unwrap();
    assert_eq!(e.lifts, vec![(RootOfUnity::new(2, 1), 2)]);
    let e = eigenvalues(&Matrix::from_ints(&q(), &[&[0, -1], &[1, 0]])).unwrap();
    assert_eq!(e.lifts, vec![(RootOfUnity::new(4, 1), 1), (RootOfUnity::new(4, 3), 1)]);
    assert_eq!(e.field, Field::cyclotomic(4).unwrap());
    assert!(eigenvalues(&Matrix::from_ints(&q(), &[&[1, 1], &[1, 1]])).is_err());
}

#[test]
fn finite_field_eigenvalues() {
    // x² + 1 is irreducible over 𝔽_3: eigenvalues live in 𝔽_9 with order 4
    let k = f(3);
    let g = Matrix::from_ints(&k, &[&[0, -1], &[1, 0]]);
    let e = eigenvalues(&g).unwrap();
    assert_eq!(e.field.size(), Some(9));
    assert_eq!(e.order, 4);
    assert!(e.lifts.iter().all(|(r, m)| r.order() == 4 && *m == 1));
    let t = Matrix::from_ints(&k, &[&[1, 1], &[0, 1]]);
    let e = eigenvalues(&t).unwrap();
    assert!(e.p_singular);
    assert_eq!(e.lifts, vec![(RootOfUnity::one(), 2)]);
}

#[test]
fn charpoly_of_companion_matrix() {
    // companion matrix of t³ − 2t + 5
    let m = Matrix::from_ints(&q(), &[&[0, 0, -5], &[1, 0, 2], &[0, 1, 0]]);
    assert_eq!(m.charpoly(), crate::polyalg::UniPoly::from_ints(&q(), &[5, -2, 0, 1]));
}

fn arb_matrix(p: u64, n: usize) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(0i64..p as i64, n * n)
}

fn from_flat(k: &Field, n: usize, v: &[i64]) -> Matrix {
    Matrix::from_entries(k, n, v.iter().map(|&x| k.from_int(x)).collect()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn charpoly_matches_determinant(v in arb_matrix(7, 4), c in 0i64..7) {
        let k = f(7);
        let m = from_flat(&k, 4, &v);
        let ci = Matrix::identity(&k, 4).scale(&k.from_int(c));
        prop_assert_eq!(m.charpoly().eval(&k.from_int(c)), ci.sub(&m).det());
    }

    #[test]
    fn eigenvalues_multiply_to_det_and_sum_to_trace(v in arb_matrix(5, 3)) {
        let k = f(5);
        let m = from_flat(&k, 3, &v);
        prop_assume!(!m.det().is_zero());
        let e = eigenvalues(&m).unwrap();
        let emb = k.extension(e.field.degree() / k.degree()).unwrap();
        let mut prod = e.field.one();
        let mut sum = e.field.zero();
        for (x, mult) in &e.values {
            prod = &prod * &x.pow_u(*mult as u64);
            sum = &sum + &(x * &e.field.from_int(*mult as i64));
        }
        prop_assert_eq!(prod, emb.apply(&m.det()).unwrap());
        prop_assert_eq!(sum, emb.apply(&m.trace()).unwrap());
        prop_assert!(m.pow(e.order).is_identity());
        prop_assert_eq!(e.p_singular, e.order % 5 == 0);
        let direct = eigenvalues_over(&m, e.order).unwrap();
        prop_assert_eq!(&direct.lifts, &e.lifts);
        prop_assert_eq!(direct.field.size(), e.field.size());
    }

    #[test]
    fn signed_permutation_eigenvalues(perm in Just(vec![0usize, 1, 2]).prop_shuffle(), signs in prop::collection::vec(prop::bool::ANY, 3)) {
        let k = q();
        let mut m = Matrix::zero(&k, 3);
        for (i, &j) in perm.iter().enumerate() {
            m.set(i, j, k.from_int(if signs[i] { -1 } else { 1 }));
        }
        let e = eigenvalues(&m).unwrap();
        let mut prod = e.field.one();
        let mut sum = e.field.zero();
        for (x, mult) in &e.values {
            prod = &prod * &x.pow_u(*mult as u64);
            sum = &sum + &(x * &e.field.from_int(*mult as i64));
        }
        prop_assert_eq!(prod, m.det().embed(&e.field).unwrap());
        prop_assert_eq!(sum, m.trace().embed(&e.field).unwrap());
    }
}

#[test]
fn small_groups_are_closed() {
    for g in [quaternion(), gl2(2), gl2(3)] {
        assert!(closed(&g));
        assert_eq!(g.order() % g.commutator_subgroup().order(), 0);
    }
}
