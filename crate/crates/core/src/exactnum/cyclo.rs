//! Cyclotomic polynomials and ℚ[x] helpers for residues modulo Φ_N.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Φ_N with integer coefficients, low-to-high, via Φ_N = (x^N − 1) / ∏_{d | N, d < N} Φ_d.
pub fn cyclotomic_poly(n: u64) -> Vec<BigInt> {
    assert!(n >= 1);
    let mut num: Vec<BigInt> = vec![BigInt::zero(); n as usize + 1];
    num[0] = -BigInt::one();
    num[n as usize] = BigInt::one();
    for d in 1..n {
        if n % d == 0 {
            num = div_exact_int(&num, &cyclotomic_poly(d));
        }
    }
    num
}

fn div_exact_int(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let da = a.len() - 1;
    let mut q = vec![BigInt::zero(); da - db + 1];
    for i in (0..=da - db).rev() {
        let c = r[i + db].clone();
        if c.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            r[i + j] -= &c * bj;
        }
        q[i] = c;
    }
    debug_assert!(r.iter().all(|c| c.is_zero()));
    q
}

pub(crate) type QPoly = Vec<BigRational>;

pub(crate) fn qtrim(v: &mut QPoly) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

/// Reduce a polynomial modulo the monic integer polynomial `m`, padding to `deg(m)` slots.
pub(crate) fn reduce_monic(mut a: QPoly, m: &[BigInt]) -> QPoly {
    let d = m.len() - 1;
    if a.len() > d {
        for i in (d..a.len()).rev() {
            let c = std::mem::take(&mut a[i]);
            if c.is_zero() {
                continue;
            }
            for (j, mj) in m.iter().enumerate().take(d) {
                if !mj.is_zero() {
                    a[i - d + j] -= &c * BigRational::from_integer(mj.clone());
                }
            }
        }
        a.truncate(d);
    }
    a.resize(d, BigRational::zero());
    a
}

pub(crate) fn qmul(a: &[BigRational], b: &[BigRational]) -> QPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    out
}

fn qdivrem(a: &[BigRational], b: &[BigRational]) -> (QPoly, QPoly) {
    let mut r = a.to_vec();
    qtrim(&mut r);
    let mut bb = b.to_vec();
    qtrim(&mut bb);
    let db = bb.len() - 1;
    if r.len() < bb.len() {
        return (Vec::new(), r);
    }
    let mut q = vec![BigRational::zero(); r.len() - db];
    let lc = bb[db].clone();
    while r.len() > db && !r.is_empty() {
        let dr = r.len() - 1;
        let c = &r[dr] / &lc;
        for (j, bj) in bb.iter().enumerate() {
            r[dr - db + j] -= &c * bj;
        }
        q[dr - db] = c;
        qtrim(&mut r);
    }
    (q, r)
}

/// Inverse of `a` modulo the irreducible `m`, by the extended Euclidean algorithm.
pub(crate) fn qinv_mod(a: &[BigRational], m: &[BigInt]) -> Option<QPoly> {
    let mq: QPoly = m.iter().cloned().map(BigRational::from_integer).collect();
    let mut r0 = mq.clone();
    let mut r1 = a.to_vec();
    qtrim(&mut r1);
    if r1.is_empty() {
        return None;
    }
    let mut s0: QPoly = Vec::new();
    let mut s1: QPoly = vec![BigRational::one()];
    while !r1.is_empty() {
        let (q, r) = qdivrem(&r0, &r1);
        let qs = qmul(&q, &s1);
        let n = s0.len().max(qs.len());
        let mut s2: QPoly = (0..n)
            .map(|i| {
                s0.get(i).cloned().unwrap_or_else(BigRational::zero)
                    - qs.get(i).cloned().unwrap_or_else(BigRational::zero)
            })
            .collect();
        qtrim(&mut s2);
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s2;
    }
    // r0 is a nonzero constant when gcd(a, m) = 1
    if r0.len() != 1 {
        return None;
    }
    let c = r0[0].clone();
    let inv: QPoly = s0.into_iter().map(|x| x / &c).collect();
    Some(reduce_monic(inv, m))
}
