use std::collections::{HashMap, VecDeque};
use std::sync::OnceLock;

use super::abelian::{decompose_abelian, FiniteAbelianGroup};
use super::Matrix;
use crate::error::{Error, Result};
use crate::exactnum::Field;

pub const DEFAULT_CAP: usize = 10_000;

/// Finite subgroup of GL(n, k), fully enumerated. Element 0 is the identity;
/// the remaining elements appear in BFS discovery order from the generators.
#[derive(Clone)]
pub struct FiniteMatrixGroup {
    field: Field,
    n: usize,
    gens: Vec<Matrix>,
    elements: Vec<Matrix>,
    index: HashMap<Matrix, usize>,
    powers: OnceLock<(Vec<u64>, Vec<usize>)>,
}

/// BFS closure of `gens` under right multiplication by generators.
pub fn enumerate_group(field: &Field, n: usize, gens: &[Matrix], cap: usize) -> Result<FiniteMatrixGroup> {
    for g in gens {
        if g.field() != field {
            return Err(Error::FieldMismatch(field.to_string(), g.field().to_string()));
        }
        if g.dim() != n {
            return Err(Error::DimensionMismatch { expected: n, got: g.dim() });
        }
        let det = g.det();
        if det.is_zero() {
            return Err(Error::SingularMatrix);
        }
        // det of a finite-order matrix is a root of unity
        det.mult_order()?;
    }
    // in characteristic 0 the elements of a finite group are P·U·P⁻¹ with U of
    // bounded height, so runaway coefficient growth means infinite order
    let height_limit = 8 * gens.iter().map(height_bits).max().unwrap_or(0) + 256;
    let id = Matrix::identity(field, n);
    let mut elements = vec![id.clone()];
    let mut index = HashMap::new();
    index.insert(id, 0);
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        for s in gens {
            let y = &elements[i] * s;
            if index.contains_key(&y) {
                continue;
            }
            if elements.len() >= cap {
                return Err(Error::CapExceeded(cap));
            }
            if !field.is_finite() && height_bits(&y) > height_limit {
                return Err(Error::InfiniteOrder);
            }
            index.insert(y.clone(), elements.len());
            queue.push_back(elements.len());
            elements.push(y);
        }
    }
    Ok(FiniteMatrixGroup { field: field.clone(), n, gens: gens.to_vec(), elements, index, powers: OnceLock::new() })
}

/// Largest bit length of a numerator or denominator among the rational
/// coordinates of the entries; 0 over finite fields.
fn height_bits(g: &Matrix) -> u64 {
    g.entries()
        .iter()
        .filter_map(|x| x.rational_coeffs())
        .flatten()
        .map(|c| c.numer().bits().max(c.denom().bits()))
        .max()
        .unwrap_or(0)
}

/// Least r ≥ 1 with g^r = I, by repeated multiplication.
pub fn element_order(g: &Matrix, cap: u64) -> Result<u64> {
    if g.det().is_zero() {
        return Err(Error::SingularMatrix);
    }
    let mut acc = g.clone();
    let mut r = 1u64;
    while !acc.is_identity() {
        if r >= cap {
            return Err(Error::OrderCapExceeded(cap as usize));
        }
        acc = &acc * g;
        r += 1;
    }
    Ok(r)
}

impl FiniteMatrixGroup {
    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Matrix] {
        &self.gens
    }

    pub fn elements(&self) -> &[Matrix] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Matrix {
        &self.elements[i]
    }

    pub fn identity_index(&self) -> usize {
        0
    }

    pub fn index_of(&self, g: &Matrix) -> Option<usize> {
        self.index.get(g).copied()
    }

    pub fn contains(&self, g: &Matrix) -> bool {
        self.index.contains_key(g)
    }

    pub fn mul_index(&self, a: usize, b: usize) -> usize {
        self.index[&(&self.elements[a] * &self.elements[b])]
    }

    /// Orders and inverses, filled one cyclic subgroup at a time.
    fn powers(&self) -> &(Vec<u64>, Vec<usize>) {
        self.powers.get_or_init(|| {
            let m = self.order();
            let mut ord = vec![0u64; m];
            let mut inv = vec![usize::MAX; m];
            for g in 0..m {
                if ord[g] != 0 {
                    continue;
                }
                let mut cyc = vec![0usize, g];
                let mut cur = self.elements[g].clone();
                while !cur.is_identity() {
                    cur = &cur * &self.elements[g];
                    cyc.push(self.index[&cur]);
                }
                cyc.pop();
                let r = cyc.len() as u64;
                for (k, &x) in cyc.iter().enumerate() {
                    if ord[x] == 0 {
                        ord[x] = r / num_integer::gcd(k as u64, r);
                        inv[x] = cyc[(cyc.len() - k) % cyc.len()];
                    }
                }
            }
            (ord, inv)
        })
    }

    pub fn element_order(&self, i: usize) -> u64 {
        self.powers().0[i]
    }

    pub fn inverse_index(&self, i: usize) -> usize {
        self.powers().1[i]
    }

    /// Least common multiple of element orders.
    pub fn exponent(&self) -> u64 {
        self.powers().0.iter().fold(1, |acc, &o| num_integer::lcm(acc, o))
    }

    pub fn is_abelian(&self) -> bool {
        self.gens.iter().all(|a| self.gens.iter().all(|b| a * b == b * a))
    }

    /// ⟨S⟩ for a subset of this group.
    pub fn generated_subgroup(&self, s: &[Matrix]) -> Result<FiniteMatrixGroup> {
        if s.iter().any(|g| !self.contains(g)) {
            return Err(Error::NotSubgroup);
        }
        enumerate_group(&self.field, self.n, s, self.order())
    }

    /// The same group, generated by the given generators that enlarge the
    /// subgroup generated by their predecessors.
    pub fn with_reduced_generators(&self) -> FiniteMatrixGroup {
        let mut kept: Vec<Matrix> = Vec::new();
        let mut cur = enumerate_group(&self.field, self.n, &[], 1).expect("trivial group");
        for s in &self.gens {
            if cur.order() == self.order() {
                break;
            }
            if !cur.contains(s) {
                kept.push(s.clone());
                cur = enumerate_group(&self.field, self.n, &kept, self.order()).expect("subgroup");
            }
        }
        cur
    }

    /// Smallest normal subgroup containing S.
    pub fn normal_closure(&self, s: &[Matrix]) -> Result<FiniteMatrixGroup> {
        let mut h = self.generated_subgroup(s)?;
        loop {
            let mut extra = None;
            'search: for g in &self.gens {
                let gi = g.inverse().expect("group element");
                for x in h.generators() {
                    let c = &(g * x) * &gi;
                    if !h.contains(&c) {
                        extra = Some(c);
                        break 'search;
                    }
                }
            }
            match extra {
                None => return Ok(h),
                Some(c) => {
                    let mut gens = h.gens.clone();
                    gens.push(c);
                    h = enumerate_group(&self.field, self.n, &gens, self.order())?;
                }
            }
        }
    }

    /// [G, G] as the normal closure of commutators of generators.
    pub fn commutator_subgroup(&self) -> FiniteMatrixGroup {
        let mut comms = Vec::new();
        for (i, a) in self.gens.iter().enumerate() {
            for b in &self.gens[i + 1..] {
                let ab = a * b;
                let ba = b * a;
                if ab != ba {
                    let c = &ab * &ba.inverse().expect("group element");
                    if !comms.contains(&c) {
                        comms.push(c);
                    }
                }
            }
        }
        self.normal_closure(&comms).expect("commutators lie in G")
    }

    /// Indices in `self` of the elements of a subgroup.
    pub fn subgroup_indices(&self, h: &FiniteMatrixGroup) -> Result<Vec<usize>> {
        h.elements.iter().map(|x| self.index_of(x).ok_or(Error::NotSubgroup)).collect()
    }

    pub fn is_normal(&self, h: &FiniteMatrixGroup) -> bool {
        self.gens.iter().all(|g| {
            let gi = g.inverse().expect("group element");
            h.gens.iter().all(|x| h.contains(&(&(g * x) * &gi)))
        })
    }

    /// Left cosets gH: label of every element and the first element of each coset.
    pub fn cosets(&self, h: &FiniteMatrixGroup) -> Result<(Vec<usize>, Vec<usize>)> {
        let hidx = self.subgroup_indices(h)?;
        let mut label = vec![usize::MAX; self.order()];
        let mut reps = Vec::new();
        for g in 0..self.order() {
            if label[g] != usize::MAX {
                continue;
            }
            let c = reps.len();
            reps.push(g);
            for &x in &hidx {
                label[self.mul_index(g, x)] = c;
            }
        }
        Ok((label, reps))
    }

    /// G/[G,G] with invariant factors and the quotient map on elements.
    pub fn abelianization(&self) -> Abelianization {
        let k = self.commutator_subgroup();
        let (label, reps) = self.cosets(&k).expect("subgroup");
        let qmul = |a: usize, b: usize| label[self.mul_index(reps[a], reps[b])];
        let (gens, coords) = decompose_abelian(reps.len(), label[0], &qmul);
        let abelian = FiniteAbelianGroup {
            invariant_factors: gens.iter().map(|&(_, m)| m).collect(),
            generators: gens.iter().map(|&(q, _)| reps[q]).collect(),
        };
        let map = label.iter().map(|&c| coords[c].clone()).collect();
        Abelianization { abelian, commutator: k, map }
    }
}

/// The quotient G → G/[G,G] ≅ ⊕ ℤ/m_i.
#[derive(Clone)]
pub struct Abelianization {
    pub abelian: FiniteAbelianGroup,
    pub commutator: FiniteMatrixGroup,
    map: Vec<Vec<u64>>,
}

impl Abelianization {
    /// Exponent vector of the image of element `i`.
    pub fn map(&self, i: usize) -> &[u64] {
        &self.map[i]
    }
}
