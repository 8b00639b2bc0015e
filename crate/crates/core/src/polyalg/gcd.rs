//! Multivariate gcd by recursive content / primitive-part Euclid.
//!
//! k[x_1..x_v] is viewed as k[x_1..x_{v-1}][x_v]; the gcd is
//! gcd(contents) · pp(gcd of primitive parts), the latter from a primitive
//! pseudo-remainder sequence. Every intermediate primitive part is made monic
//! so coefficients over ℚ stay small.

use super::MultiPoly;
use crate::error::{Error, Result};

/// Monic (grlex) gcd of a nonempty list of nonzero polynomials.
pub fn multipoly_gcd(fs: &[MultiPoly]) -> Result<MultiPoly> {
    let first = fs.first().ok_or(Error::EmptyInput)?;
    if fs.iter().any(|f| f.is_zero()) {
        return Err(Error::ZeroPolynomial);
    }
    for f in &fs[1..] {
        if f.field() != first.field() {
            return Err(Error::FieldMismatch(first.field().to_string(), f.field().to_string()));
        }
        if f.nvars() != first.nvars() {
            return Err(Error::DimensionMismatch { expected: first.nvars(), got: f.nvars() });
        }
    }
    let mut g = first.monic();
    for f in &fs[1..] {
        if g.is_constant() {
            break;
        }
        g = gcd2(&g, f);
    }
    Ok(g)
}

/// Gcd of two polynomials (either may be zero), monic.
pub fn gcd2(f: &MultiPoly, g: &MultiPoly) -> MultiPoly {
    gcd_rec(f, g, f.nvars()).monic()
}

fn gcd_rec(f: &MultiPoly, g: &MultiPoly, v: usize) -> MultiPoly {
    if f.is_zero() {
        return g.monic();
    }
    if g.is_zero() {
        return f.monic();
    }
    if v == 0 || f.is_constant() || g.is_constant() {
        return MultiPoly::one(f.field(), f.nvars());
    }
    let var = v - 1;
    if f.degree_in(var) == Some(0) && g.degree_in(var) == Some(0) {
        return gcd_rec(f, g, v - 1);
    }
    let cf = content(f, var);
    let cg = content(g, var);
    let pf = f.div_exact(&cf).expect("content divides");
    let pg = g.div_exact(&cg).expect("content divides");
    let c = gcd_rec(&cf, &cg, v - 1);

    let (mut a, mut b) = if pf.degree_in(var) >= pg.degree_in(var) { (pf, pg) } else { (pg, pf) };
    while !b.is_zero() && b.degree_in(var) != Some(0) {
        let r = pseudo_rem(&a, &b, var);
        a = b;
        b = if r.is_zero() { r } else { primitive_part(&r, var) };
    }
    // b is a nonzero constant in var: the primitive gcd is trivial
    let h = if b.is_zero() { primitive_part(&a, var) } else { MultiPoly::one(f.field(), f.nvars()) };
    (&c * &h).monic()
}

/// Gcd of the coefficients of f viewed as a polynomial in x_var.
pub fn content(f: &MultiPoly, var: usize) -> MultiPoly {
    let coeffs = f.to_univariate(var);
    let mut acc = MultiPoly::zero(f.field(), f.nvars());
    for c in coeffs.iter().rev() {
        if c.is_zero() {
            continue;
        }
        acc = gcd_rec(&acc, c, var);
        if acc.is_constant() {
            return MultiPoly::one(f.field(), f.nvars());
        }
    }
    acc
}

pub fn primitive_part(f: &MultiPoly, var: usize) -> MultiPoly {
    let c = content(f, var);
    f.div_exact(&c).expect("content divides").monic()
}

/// Pseudo-remainder of a by b in x_var (up to a factor lc(b)^k).
fn pseudo_rem(a: &MultiPoly, b: &MultiPoly, var: usize) -> MultiPoly {
    let bc = b.to_univariate(var);
    let db = bc.len() - 1;
    let lb = &bc[db];
    let mut r = a.clone();
    while !r.is_zero() {
        let rc = r.to_univariate(var);
        let dr = rc.len() - 1;
        if dr < db {
            break;
        }
        let mut shift = vec![0u32; a.nvars()];
        shift[var] = (dr - db) as u32;
        let shift = super::Monomial(shift);
        r = &(lb * &r) - &(&rc[dr] * &b.mul_monomial(&shift));
    }
    r
}
