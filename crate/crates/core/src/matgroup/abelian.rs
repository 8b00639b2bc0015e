use serde::Serialize;

/// ⊕ ℤ/m_i with m_1 | m_2 | … and each m_i ≥ 2; `generators[i]` is an element
/// (index into the ambient group) mapping to the i-th standard generator.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FiniteAbelianGroup {
    pub invariant_factors: Vec<u64>,
    pub generators: Vec<usize>,
}

impl FiniteAbelianGroup {
    pub fn order(&self) -> u64 {
        self.invariant_factors.iter().product()
    }

    pub fn is_trivial(&self) -> bool {
        self.invariant_factors.is_empty()
    }
}

fn order_of(a: usize, identity: usize, mul: &dyn Fn(usize, usize) -> usize) -> u64 {
    let mut cur = a;
    let mut r = 1;
    while cur != identity {
        cur = mul(cur, a);
        r += 1;
    }
    r
}

fn pow(a: usize, e: u64, identity: usize, mul: &dyn Fn(usize, usize) -> usize) -> usize {
    (0..e).fold(identity, |acc, _| mul(acc, a))
}

/// Split off cyclic factors generated by elements of maximal order.
/// Returns generators with orders in decreasing order.
fn split(size: usize, identity: usize, mul: &dyn Fn(usize, usize) -> usize) -> Vec<(usize, u64)> {
    if size <= 1 {
        return Vec::new();
    }
    let (x, e) = (0..size)
        .map(|a| (a, order_of(a, identity, mul)))
        .fold((identity, 1), |best, cand| if cand.1 > best.1 { cand } else { best });
    let mut cyc = Vec::with_capacity(e as usize);
    let mut log = vec![u64::MAX; size];
    let mut cur = identity;
    for k in 0..e {
        cyc.push(cur);
        log[cur] = k;
        cur = mul(cur, x);
    }
    let mut label = vec![usize::MAX; size];
    let mut reps = Vec::new();
    for a in 0..size {
        if label[a] != usize::MAX {
            continue;
        }
        let c = reps.len();
        reps.push(a);
        for &h in &cyc {
            label[mul(a, h)] = c;
        }
    }
    let qmul = |a: usize, b: usize| label[mul(reps[a], reps[b])];
    let sub = split(reps.len(), label[identity], &qmul);
    let mut out = vec![(x, e)];
    for (yq, m) in sub {
        // y^m = x^s with m | s because x has maximal order; correct y by x^{-s/m}
        let y = reps[yq];
        let s = log[pow(y, m, identity, mul)];
        assert!(s != u64::MAX && s % m == 0, "cyclic factor is not a direct summand");
        let shift = (e - (s / m) % e) % e;
        out.push((mul(y, cyc[shift as usize]), m));
    }
    out
}

/// Invariant-factor decomposition of a finite abelian group given by its
/// multiplication on element indices `0..size`.
///
/// Returns the generators with their orders (ascending, each dividing the
/// next) and the coordinate vector of every element.
pub fn decompose_abelian(
    size: usize,
    identity: usize,
    mul: &dyn Fn(usize, usize) -> usize,
) -> (Vec<(usize, u64)>, Vec<Vec<u64>>) {
    let mut gens = split(size, identity, mul);
    gens.reverse();
    let mut coords = vec![Vec::new(); size];
    let mut layer = vec![(identity, Vec::<u64>::new())];
    for &(g, m) in &gens {
        let mut next = Vec::with_capacity(layer.len() * m as usize);
        for (elem, c) in &layer {
            let mut cur = *elem;
            for k in 0..m {
                let mut v = c.clone();
                v.push(k);
                next.push((cur, v));
                cur = mul(cur, g);
            }
        }
        layer = next;
    }
    debug_assert_eq!(layer.len(), size);
    for (elem, c) in layer {
        coords[elem] = c;
    }
    (gens, coords)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zmod_product(ms: &[u64]) -> (usize, impl Fn(usize, usize) -> usize + '_) {
        let size: u64 = ms.iter().product();
        let to = move |mut a: usize| -> Vec<u64> {
            ms.iter()
                .map(|&m| {
                    let r = a as u64 % m;
                    a /= m as usize;
                    r
                })
                .collect()
        };
        let from = move |v: &[u64]| -> usize {
            v.iter().zip(ms).rev().fold(0u64, |acc, (&x, &m)| acc * m + x) as usize
        };
        let mul = move |a: usize, b: usize| {
            let (x, y) = (to(a), to(b));
            let s: Vec<u64> = x.iter().zip(&y).zip(ms).map(|((p, q), m)| (p + q) % m).collect();
            from(&s)
        };
        (size as usize, mul)
    }

    #[test]
    fn invariant_factors_of_products() {
        for (ms, expect) in [
            (vec![2u64, 3], vec![6u64]),
            (vec![2, 2], vec![2, 2]),
            (vec![4, 6], vec![2, 12]),
            (vec![2, 4, 3, 2], vec![2, 2, 12]),
            (vec![1], vec![]),
        ] {
            let (size, mul) = zmod_product(&ms);
            let (gens, coords) = decompose_abelian(size, 0, &mul);
            assert_eq!(gens.iter().map(|g| g.1).collect::<Vec<_>>(), expect);
            // coordinates are a bijection onto the box
            let mut seen = std::collections::HashSet::new();
            for c in &coords {
                assert!(seen.insert(c.clone()));
            }
            // and the coordinate map is additive
            for a in 0..size {
                for b in 0..size {
                    let s: Vec<u64> =
                        coords[a].iter().zip(&coords[b]).zip(&expect).map(|((x, y), m)| (x + y) % m).collect();
                    assert_eq!(coords[mul(a, b)], s);
                }
            }
        }
    }
}
