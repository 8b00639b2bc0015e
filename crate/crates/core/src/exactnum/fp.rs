//! Dense polynomials over a prime field 𝔽_p, coefficients low-to-high.
//!
//! These are the building blocks for the extension fields 𝔽_{p^m}: reduction
//! modulo a monic modulus, Rabin's irreducibility test and the search for the
//! canonical modulus of a given degree.

#[inline]
pub(crate) fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub(crate) fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(a % p != 0);
    pow_mod(a, p - 2, p)
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Prime factorization by trial division; inputs stay desk-scale.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            let mut e = 0;
            while n % d == 0 {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub(crate) fn trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

pub(crate) fn degree(v: &[u64]) -> Option<usize> {
    v.iter().rposition(|&c| c != 0)
}

pub(crate) fn sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let n = a.len().max(b.len());
    let mut out: Vec<u64> = (0..n)
        .map(|i| {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            (x + p - y) % p
        })
        .collect();
    trim(&mut out);
    out
}

pub(crate) fn mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + mul_mod(x, y, p)) % p;
        }
    }
    trim(&mut out);
    out
}

/// Remainder of `a` modulo the polynomial `m` (any nonzero `m`).
pub(crate) fn rem(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    let mut r = a.to_vec();
    trim(&mut r);
    let dm = degree(m).expect("nonzero modulus");
    let lc_inv = inv_mod(m[dm], p);
    while let Some(dr) = degree(&r) {
        if dr < dm {
            break;
        }
        let c = mul_mod(r[dr], lc_inv, p);
        let shift = dr - dm;
        for (j, &mj) in m.iter().enumerate().take(dm + 1) {
            let idx = shift + j;
            r[idx] = (r[idx] + p - mul_mod(c, mj, p)) % p;
        }
        trim(&mut r);
    }
    r
}

pub(crate) fn mulmod_poly(a: &[u64], b: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    rem(&mul(a, b, p), m, p)
}

pub(crate) fn gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    trim(&mut x);
    trim(&mut y);
    while !y.is_empty() {
        let r = rem(&x, &y, p);
        x = y;
        y = r;
    }
    if let Some(d) = degree(&x) {
        let inv = inv_mod(x[d], p);
        for c in x.iter_mut() {
            *c = mul_mod(*c, inv, p);
        }
    }
    x
}

/// x^(p^k) mod m, by k successive p-th powers.
fn frobenius_power_of_x(m: &[u64], p: u64, k: usize) -> Vec<u64> {
    let mut cur = rem(&[0, 1], m, p);
    for _ in 0..k {
        cur = pow_poly(&cur, p as u128, m, p);
    }
    cur
}

pub(crate) fn pow_poly(base: &[u64], mut exp: u128, m: &[u64], p: u64) -> Vec<u64> {
    let mut acc = vec![1u64];
    let mut b = rem(base, m, p);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mulmod_poly(&acc, &b, m, p);
        }
        b = mulmod_poly(&b, &b, m, p);
        exp >>= 1;
    }
    rem(&acc, m, p)
}

/// Rabin's test for a monic polynomial of degree ≥ 1 over 𝔽_p.
pub(crate) fn is_irreducible(m: &[u64], p: u64) -> bool {
    let Some(n) = degree(m) else { return false };
    if n == 0 {
        return false;
    }
    if n == 1 {
        return true;
    }
    let x = vec![0u64, 1];
    let full = frobenius_power_of_x(m, p, n);
    if sub(&full, &rem(&x, m, p), p) != Vec::<u64>::new() {
        return false;
    }
    for (r, _) in factorize(n as u64) {
        let k = n / r as usize;
        let h = sub(&frobenius_power_of_x(m, p, k), &x, p);
        let g = gcd(&h, m, p);
        if degree(&g) != Some(0) {
            return false;
        }
    }
    true
}

/// The monic irreducible polynomial of degree `d` over 𝔽_p whose coefficient
/// code Σ c_i p^i (over the non-leading coefficients) is smallest.
pub(crate) fn least_irreducible(p: u64, d: usize) -> Vec<u64> {
    let total = (p as u128).pow(d as u32);
    let mut code: u128 = 0;
    while code < total {
        let mut poly = decode(code, p, d);
        poly.push(1);
        if is_irreducible(&poly, p) {
            return poly;
        }
        code += 1;
    }
    unreachable!("irreducible polynomials exist in every degree")
}

pub(crate) fn decode(mut code: u128, p: u64, len: usize) -> Vec<u64> {
    let mut out = vec![0u64; len];
    for c in out.iter_mut() {
        *c = (code % p as u128) as u64;
        code /= p as u128;
    }
    out
}

pub(crate) fn encode(v: &[u64], p: u64) -> u128 {
    v.iter().rev().fold(0u128, |acc, &c| acc * p as u128 + c as u128)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn irreducibility_small_cases() {
        assert!(is_irreducible(&[1, 1, 1], 2));
        assert!(!is_irreducible(&[1, 0, 1], 2));
        assert!(is_irreducible(&[1, 0, 1], 3));
        assert!(!is_irreducible(&[1, 0, 1], 5));
        // x^4 + x + 1 over 𝔽_2
        assert!(is_irreducible(&[1, 1, 0, 0, 1], 2));
        // (x^2+x+1)^2 = x^4+x^2+1 has no roots but is reducible
        assert!(!is_irreducible(&[1, 0, 1, 0, 1], 2));
    }

    #[test]
    fn least_irreducible_degree_two() {
        assert_eq!(least_irreducible(2, 2), vec![1, 1, 1]);
        assert_eq!(least_irreducible(3, 2), vec![1, 0, 1]);
    }

    #[test]
    fn factorize_small() {
        assert_eq!(factorize(12), vec![(2, 2), (3, 1)]);
        assert_eq!(factorize(1), vec![]);
        assert_eq!(factorize(28560), vec![(2, 4), (3, 1), (5, 1), (7, 1), (17, 1)]);
    }
}
