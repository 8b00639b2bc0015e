//! Linear characters G → μ_m ⊆ k^*, stored as exponents of ζ_m.
//!
//! ζ_m is ω^{M/m} for the fixed primitive root ω of order M = root_capacity(k),
//! so exponents convert to field values and Brauer lifts without logarithms.

use std::collections::HashMap;

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactnum::{Field, RootOfUnity, Scalar};
use crate::matgroup::{decompose_abelian, FiniteAbelianGroup, FiniteMatrixGroup, Matrix};

/// χ(g_i) = ζ_m^{values[i]} for the elements g_i of the source group.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinearCharacter {
    m: u64,
    values: Vec<u64>,
}

impl LinearCharacter {
    pub fn trivial(order: usize, m: u64) -> LinearCharacter {
        LinearCharacter { m, values: vec![0; order] }
    }

    pub fn from_exponents(m: u64, values: Vec<u64>) -> LinearCharacter {
        LinearCharacter { m, values: values.into_iter().map(|v| v % m.max(1)).collect() }
    }

    pub fn root_order(&self) -> u64 {
        self.m
    }

    pub fn exponents(&self) -> &[u64] {
        &self.values
    }

    /// Exponent of χ(g_i) as a power of ζ_m.
    pub fn exponent(&self, i: usize) -> u64 {
        self.values[i]
    }

    pub fn is_trivial(&self) -> bool {
        self.values.iter().all(|&v| v == 0)
    }

    /// χ(g_i) as a root of unity; for finite fields this is the Brauer lift.
    pub fn lift(&self, i: usize) -> RootOfUnity {
        RootOfUnity::new(self.m, self.values[i] as i64)
    }

    /// χ(g_i) in k.
    pub fn value(&self, i: usize, field: &Field) -> Scalar {
        let big = field.root_capacity();
        field.root_of_unity(self.values[i] * (big / self.m))
    }

    pub fn mul(&self, other: &LinearCharacter) -> LinearCharacter {
        assert_eq!(self.m, other.m);
        LinearCharacter {
            m: self.m,
            values: self.values.iter().zip(&other.values).map(|(a, b)| (a + b) % self.m).collect(),
        }
    }

    pub fn inv(&self) -> LinearCharacter {
        LinearCharacter { m: self.m, values: self.values.iter().map(|&a| (self.m - a) % self.m).collect() }
    }

    pub fn pow(&self, k: i64) -> LinearCharacter {
        let m = self.m as i128;
        LinearCharacter {
            m: self.m,
            values: self.values.iter().map(|&a| ((a as i128 * k as i128).rem_euclid(m)) as u64).collect(),
        }
    }

    /// The same character with exponents over ζ_big; None unless m divides big.
    pub fn rescale(&self, big: u64) -> Option<LinearCharacter> {
        (big % self.m == 0).then(|| LinearCharacter {
            m: big,
            values: self.values.iter().map(|&v| v * (big / self.m)).collect(),
        })
    }

    /// Order of χ in the character group.
    pub fn order(&self) -> u64 {
        self.values.iter().fold(1, |acc, &v| acc.lcm(&(self.m / v.gcd(&self.m))))
    }

    /// Whether the character is trivial on every listed element.
    pub fn trivial_on(&self, idx: &[usize]) -> bool {
        idx.iter().all(|&i| self.values[i] == 0)
    }
}

/// Hom(G, μ_m), enumerated through the abelianization.
#[derive(Clone)]
pub struct CharacterGroup {
    pub m: u64,
    pub characters: Vec<LinearCharacter>,
    /// Orders gcd(m_i, m) of the images of the abelianization generators.
    pub factors: Vec<u64>,
}

impl CharacterGroup {
    pub fn len(&self) -> usize {
        self.characters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.characters.is_empty()
    }

    pub fn index_of(&self, chi: &LinearCharacter) -> Option<usize> {
        self.characters.iter().position(|c| c == chi)
    }
}

/// All homomorphisms G → μ_m. Character k (mixed radix over the factors,
/// last factor fastest) sends the i-th abelianization generator to
/// ζ_m^{k_i·m/gcd(m_i,m)}; index 0 is the trivial character.
pub fn character_group(g: &FiniteMatrixGroup, m: u64) -> CharacterGroup {
    let ab = g.abelianization();
    let ms = &ab.abelian.invariant_factors;
    let factors: Vec<u64> = ms.iter().map(|&mi| mi.gcd(&m)).collect();
    let mut characters = Vec::new();
    let total: u64 = factors.iter().product();
    for code in 0..total {
        let mut k = vec![0u64; factors.len()];
        let mut c = code;
        for (i, &f) in factors.iter().enumerate().rev() {
            k[i] = c % f;
            c /= f;
        }
        let steps: Vec<u64> = k.iter().zip(&factors).map(|(&ki, &f)| ki * (m / f)).collect();
        let values = (0..g.order())
            .map(|x| ab.map(x).iter().zip(&steps).map(|(&a, &s)| a * s).sum::<u64>() % m)
            .collect();
        characters.push(LinearCharacter { m, values });
    }
    CharacterGroup { m, characters, factors }
}

/// χ|_H, indexed by the elements of H.
pub fn restrict_character(
    g: &FiniteMatrixGroup,
    chi: &LinearCharacter,
    h: &FiniteMatrixGroup,
) -> Result<LinearCharacter> {
    let idx = g.subgroup_indices(h)?;
    Ok(LinearCharacter { m: chi.m, values: idx.iter().map(|&i| chi.values[i]).collect() })
}

/// Character from field values, checked against the multiplication of G.
pub fn character_from_values(g: &FiniteMatrixGroup, values: &[Scalar], m: u64) -> Result<LinearCharacter> {
    let field = g.field();
    let big = field.root_capacity();
    if big % m != 0 {
        return Err(Error::Internal(format!("μ_{m} is not contained in {field}")));
    }
    let mut exps = Vec::with_capacity(values.len());
    for v in values {
        let e = field.root_log(v)?.ok_or_else(|| Error::NotHomomorphism(format!("{v} is not a root of unity")))?;
        if e % (big / m) != 0 {
            return Err(Error::NotInRoots(m));
        }
        exps.push(e / (big / m));
    }
    let chi = LinearCharacter { m, values: exps };
    for s in g.generators() {
        let si = g.index_of(s).unwrap();
        for a in 0..g.order() {
            let ab = g.index_of(&(g.element(a) * s)).unwrap();
            if chi.values[ab] != (chi.values[a] + chi.values[si]) % m {
                return Err(Error::NotHomomorphism(format!("fails at element {a} times generator {si}")));
            }
        }
    }
    Ok(chi)
}

/// g ↦ det(g) in μ_m.
pub fn det_character(g: &FiniteMatrixGroup, m: u64) -> Result<LinearCharacter> {
    let dets: Vec<Scalar> = g.elements().iter().map(Matrix::det).collect();
    character_from_values(g, &dets, m)
}

/// det_i(g) = det(g|U_i) for each family of matrices `actions[i][g]`.
pub fn graded_det_characters(g: &FiniteMatrixGroup, actions: &[Vec<Matrix>], m: u64) -> Result<Vec<LinearCharacter>> {
    actions
        .iter()
        .map(|mats| {
            if mats.len() != g.order() {
                return Err(Error::DimensionMismatch { expected: g.order(), got: mats.len() });
            }
            let dets: Vec<Scalar> = mats.iter().map(Matrix::det).collect();
            character_from_values(g, &dets, m)
        })
        .collect()
}

/// ker(res_W) ⊆ Hom(G, μ_m) with its abstract structure.
#[derive(Clone, Debug, Serialize)]
pub struct ClassGroupDescription {
    /// Indices into the character group.
    pub members: Vec<usize>,
    /// Invariant factors; `generators` index into `members`.
    pub structure: FiniteAbelianGroup,
}

impl ClassGroupDescription {
    pub fn order(&self) -> usize {
        self.members.len()
    }
}

pub fn class_group(g: &FiniteMatrixGroup, w: &FiniteMatrixGroup, chars: &CharacterGroup) -> Result<ClassGroupDescription> {
    let widx = g.subgroup_indices(w)?;
    let members: Vec<usize> =
        (0..chars.len()).filter(|&i| chars.characters[i].trivial_on(&widx)).collect();
    let structure = abelian_structure(chars, &members);
    Ok(ClassGroupDescription { members, structure })
}

/// Structure of a subgroup of the character group given by member indices.
pub fn abelian_structure(chars: &CharacterGroup, members: &[usize]) -> FiniteAbelianGroup {
    let pos: HashMap<&LinearCharacter, usize> =
        members.iter().enumerate().map(|(k, &i)| (&chars.characters[i], k)).collect();
    let identity = members.iter().position(|&i| chars.characters[i].is_trivial()).expect("trivial character");
    let mul = |a: usize, b: usize| {
        let c = chars.characters[members[a]].mul(&chars.characters[members[b]]);
        pos[&c]
    };
    let (gens, _) = decompose_abelian(members.len(), identity, &mul);
    FiniteAbelianGroup {
        invariant_factors: gens.iter().map(|&(_, o)| o).collect(),
        generators: gens.iter().map(|&(x, _)| x).collect(),
    }
}

#[cfg(test)]
mod tests {
    use proptest::prelude::*;

    use super::*;
    use crate::matgroup::{enumerate_group, DEFAULT_CAP};
    use crate::reflect::{classify_group, reflection_subgroup, ReflectionTag};

    fn group(f: &Field, gens: &[Matrix]) -> FiniteMatrixGroup {
        enumerate_group(f, gens[0].dim(), gens, DEFAULT_CAP).unwrap()
    }

    fn q() -> Field {
        Field::rational()
    }

    fn minus_i() -> FiniteMatrixGroup {
        group(&q(), &[Matrix::from_ints(&q(), &[&[-1, 0], &[0, -1]])])
    }

    fn c3_reflection() -> (Field, FiniteMatrixGroup) {
        let c3 = Field::cyclotomic(3).unwrap();
        let g = group(&c3, &[Matrix::diag(&c3, &[c3.zeta_power(1), c3.one()])]);
        (c3, g)
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
    fn character_group_examples() {
        assert_eq!(character_group(&minus_i(), 2).len(), 2);
        let r = Matrix::from_ints(&q(), &[&[0, -1, 0], &[1, -1, 0], &[0, 0, 1]]);
        let c3 = group(&q(), &[r]);
        assert_eq!(c3.order(), 3);
        assert_eq!(character_group(&c3, 2).len(), 1);
        let f2 = Field::prime(2).unwrap();
        assert_eq!(f2.root_capacity(), 1);
        assert_eq!(character_group(&gl2(2), 1).len(), 1);
        let cg = character_group(&gl2(5), 4);
        assert_eq!(cg.len(), 4);
        assert!(cg.characters[0].is_trivial());
    }

    #[test]
    fn restriction_examples() {
        let g = minus_i();
        let cg = character_group(&g, 2);
        let triv = group(&q(), &[Matrix::identity(&q(), 2)]);
        for chi in &cg.characters {
            assert!(restrict_character(&g, chi, &triv).unwrap().is_trivial());
        }
        let (c3, g) = c3_reflection();
        let w = reflection_subgroup(&g);
        let det = det_character(&g, c3.root_capacity()).unwrap();
        let r = restrict_character(&g, &det, &w).unwrap();
        assert!(!r.is_trivial());
        assert_eq!(r.order(), 3);
        let other = group(&q(), &[Matrix::from_ints(&q(), &[&[2, 0], &[0, 1]]).pow(0)]);
        assert!(restrict_character(&g, &det, &other).is_err());
    }

    #[test]
    fn det_character_examples() {
        let g = minus_i();
        assert!(det_character(&g, 2).unwrap().is_trivial());
        let s = group(&q(), &[Matrix::from_ints(&q(), &[&[-1, 0], &[0, 1]])]);
        let d = det_character(&s, 2).unwrap();
        assert_eq!(d.exponents(), &[0, 1]);
        let (c3, g) = c3_reflection();
        let d = det_character(&g, c3.root_capacity()).unwrap();
        assert_eq!(d.order(), 3);
        assert_eq!(d.value(1, &c3), c3.zeta_power(1));
        assert_eq!(d.lift(1), RootOfUnity::new(3, 1));
    }

    #[test]
    fn det_outside_restricted_roots() {
        let c4 = Field::cyclotomic(4).unwrap();
        let g = group(&c4, &[Matrix::diag(&c4, &[c4.zeta_power(1), c4.one()])]);
        assert_eq!(det_character(&g, 2).err(), Some(Error::NotInRoots(2)));
        assert_eq!(det_character(&g, 4).unwrap().order(), 4);
    }

    #[test]
    fn class_group_examples() {
        let g = minus_i();
        let w = reflection_subgroup(&g);
        let cl = class_group(&g, &w, &character_group(&g, 2)).unwrap();
        assert_eq!(cl.structure.invariant_factors, vec![2]);
        let (c3, g) = c3_reflection();
        let cl = class_group(&g, &reflection_subgroup(&g), &character_group(&g, c3.root_capacity())).unwrap();
        assert!(cl.structure.is_trivial());
        for p in [2u64, 3, 5] {
            let k = Field::prime(p).unwrap();
            let g = group(&k, &[Matrix::from_ints(&k, &[&[1, 1], &[0, 1]])]);
            let cl = class_group(&g, &reflection_subgroup(&g), &character_group(&g, k.root_capacity())).unwrap();
            assert_eq!(cl.order(), 1);
        }
        // C_4 = ⟨i·I⟩ over ℚ(ζ_4) has no reflections
        let c4 = Field::cyclotomic(4).unwrap();
        let g = group(&c4, &[Matrix::identity(&c4, 2).scale(&c4.zeta_power(1))]);
        let cl = class_group(&g, &reflection_subgroup(&g), &character_group(&g, 4)).unwrap();
        assert_eq!(cl.structure.invariant_factors, vec![4]);
    }

    #[test]
    fn graded_det_examples() {
        let (c3, g) = c3_reflection();
        let lin: Vec<Matrix> = g.elements().to_vec();
        let d = graded_det_characters(&g, &[lin], 6).unwrap();
        assert_eq!(d[0], det_character(&g, 6).unwrap());
        let triv: Vec<Matrix> = vec![Matrix::identity(&c3, 1); g.order()];
        assert!(graded_det_characters(&g, &[triv.clone(), triv], 6).unwrap().iter().all(|c| c.is_trivial()));
        let mut bad: Vec<Matrix> = vec![Matrix::identity(&c3, 1); g.order()];
        bad[1] = Matrix::identity(&c3, 1).scale(&c3.from_int(-1));
        assert!(matches!(graded_det_characters(&g, &[bad], 6), Err(Error::NotHomomorphism(_))));
    }

    #[test]
    fn det_is_trivial_on_transvections() {
        for p in [2u64, 3, 5] {
            let g = gl2(p);
            let det = det_character(&g, g.field().root_capacity()).unwrap();
            for c in classify_group(&g) {
                if c.tag == ReflectionTag::Transvection {
                    assert_eq!(det.exponent(c.index), 0);
                }
            }
        }
    }

    fn groups() -> Vec<FiniteMatrixGroup> {
        let c4 = Field::cyclotomic(4).unwrap();
        let i = c4.zeta_power(1);
        vec![
            minus_i(),
            c3_reflection().1,
            gl2(3),
            gl2(5),
            group(&c4, &[Matrix::from_ints(&c4, &[&[0, -1], &[1, 0]]), Matrix::diag(&c4, &[i.clone(), -&i])]),
            group(&c4, &[Matrix::diag(&c4, &[i.clone(), c4.one()]), Matrix::from_ints(&c4, &[&[0, 1], &[1, 0]])]),
        ]
    }

    #[test]
    fn character_group_order_formula() {
        for g in groups() {
            let m = g.field().root_capacity();
            let ab = g.abelianization();
            let formula: u64 = ab.abelian.invariant_factors.iter().map(|&mi| mi.gcd(&m)).product();
            let cg = character_group(&g, m);
            assert_eq!(cg.len() as u64, formula);
            // every enumerated map is a homomorphism and they are distinct
            for chi in &cg.characters {
                for a in 0..g.order() {
                    for s in g.generators() {
                        let si = g.index_of(s).unwrap();
                        assert_eq!(chi.exponent(g.mul_index(a, si)), (chi.exponent(a) + chi.exponent(si)) % m);
                    }
                }
            }
            let set: std::collections::HashSet<_> = cg.characters.iter().collect();
            assert_eq!(set.len(), cg.len());
        }
    }

    #[test]
    fn class_group_members_vanish_on_reflections() {
        for g in groups() {
            let cg = character_group(&g, g.field().root_capacity());
            let cl = class_group(&g, &reflection_subgroup(&g), &cg).unwrap();
            for &i in &cl.members {
                for c in classify_group(&g) {
                    if c.tag.is_reflection() {
                        assert_eq!(cg.characters[i].exponent(c.index), 0);
                    }
                }
                for &j in &cl.members {
                    let prod = cg.characters[i].mul(&cg.characters[j]);
                    assert!(cl.members.iter().any(|&k| cg.characters[k] == prod));
                }
            }
            assert_eq!(cl.structure.order() as usize, cl.order());
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(50))]

        #[test]
        fn products_and_inverses_stay_in_group(a in 0usize..64, b in 0usize..64) {
            let g = &groups()[5];
            let cg = character_group(g, 4);
            let x = &cg.characters[a % cg.len()];
            let y = &cg.characters[b % cg.len()];
            prop_assert!(cg.index_of(&x.mul(y)).is_some());
            prop_assert!(cg.index_of(&x.inv()).is_some());
            prop_assert!(x.mul(&x.inv()).is_trivial());
        }
    }
}
