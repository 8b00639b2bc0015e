use std::fmt;

use super::UniPoly;
use crate::error::{Error, Result};
use crate::exactnum::{Field, Scalar};

/// Quotient of univariate polynomials in t, kept in canonical form:
/// gcd(num, den) = 1 and den monic. Equality is therefore componentwise.
#[derive(Clone, PartialEq, Eq)]
pub struct RationalFunction {
    num: UniPoly,
    den: UniPoly,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RatOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl RationalFunction {
    pub fn new(num: UniPoly, den: UniPoly) -> Result<RationalFunction> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.field() != den.field() {
            return Err(Error::FieldMismatch(num.field().to_string(), den.field().to_string()));
        }
        if num.is_zero() {
            return Ok(RationalFunction { den: UniPoly::one(num.field()), num });
        }
        let g = num.gcd(&den);
        let (num, den) = if g.is_one() { (num, den) } else { (num.div_exact(&g)?, den.div_exact(&g)?) };
        let lc_inv = den.leading_coeff().unwrap().inv().unwrap();
        Ok(RationalFunction { num: num.scale(&lc_inv), den: den.scale(&lc_inv) })
    }

    /// For num and den already coprime: only normalizes den to be monic.
    fn from_coprime(num: UniPoly, den: UniPoly) -> RationalFunction {
        if num.is_zero() {
            return RationalFunction { den: UniPoly::one(num.field()), num };
        }
        let lc_inv = den.leading_coeff().unwrap().inv().unwrap();
        RationalFunction { num: num.scale(&lc_inv), den: den.scale(&lc_inv) }
    }

    pub fn from_poly(p: UniPoly) -> RationalFunction {
        let den = UniPoly::one(p.field());
        RationalFunction { num: p, den }
    }

    pub fn zero(field: &Field) -> RationalFunction {
        RationalFunction::from_poly(UniPoly::zero(field))
    }

    pub fn one(field: &Field) -> RationalFunction {
        RationalFunction::from_poly(UniPoly::one(field))
    }

    pub fn constant(c: Scalar) -> RationalFunction {
        RationalFunction::from_poly(UniPoly::constant(c))
    }

    /// c·t^k for any integer k.
    pub fn monomial(c: Scalar, k: i64) -> RationalFunction {
        let f = c.field().clone();
        if k >= 0 {
            RationalFunction::from_poly(UniPoly::monomial(c, k as usize))
        } else {
            RationalFunction::new(UniPoly::constant(c), UniPoly::monomial(f.one(), (-k) as usize)).unwrap()
        }
    }

    /// 1 / (1 − c·t^d)
    pub fn geometric(c: &Scalar, d: usize) -> RationalFunction {
        let f = c.field().clone();
        let den = &UniPoly::one(&f) - &UniPoly::monomial(c.clone(), d);
        RationalFunction::new(UniPoly::one(&f), den).unwrap()
    }

    pub fn field(&self) -> &Field {
        self.num.field()
    }

    pub fn numerator(&self) -> &UniPoly {
        &self.num
    }

    pub fn denominator(&self) -> &UniPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// deg(num) − deg(den); `None` for the zero function.
    pub fn degree(&self) -> Option<i64> {
        Some(self.num.degree()? as i64 - self.den.degree().unwrap() as i64)
    }

    pub fn neg(&self) -> RationalFunction {
        RationalFunction { num: -&self.num, den: self.den.clone() }
    }

    pub fn add(&self, other: &RationalFunction) -> RationalFunction {
        if self.den == other.den {
            return RationalFunction::new(&self.num + &other.num, self.den.clone()).unwrap();
        }
        let g = self.den.gcd(&other.den);
        let a = self.den.div_exact(&g).unwrap();
        let b = other.den.div_exact(&g).unwrap();
        let num = &(&self.num * &b) + &(&other.num * &a);
        RationalFunction::new(num, &a * &other.den).unwrap()
    }

    pub fn sub(&self, other: &RationalFunction) -> RationalFunction {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &RationalFunction) -> RationalFunction {
        // cross-cancel first to keep degrees small
        let g1 = self.num.gcd(&other.den);
        let g2 = other.num.gcd(&self.den);
        let n1 = if g1.is_zero() { self.num.clone() } else { self.num.div_exact(&g1).unwrap() };
        let d2 = if g1.is_zero() { other.den.clone() } else { other.den.div_exact(&g1).unwrap() };
        let n2 = if g2.is_zero() { other.num.clone() } else { other.num.div_exact(&g2).unwrap() };
        let d1 = if g2.is_zero() { self.den.clone() } else { self.den.div_exact(&g2).unwrap() };
        // both inputs are reduced, so after cross-cancelling so is the product
        RationalFunction::from_coprime(&n1 * &n2, &d1 * &d2)
    }

    pub fn inv(&self) -> Result<RationalFunction> {
        RationalFunction::new(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, other: &RationalFunction) -> Result<RationalFunction> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn scale(&self, c: &Scalar) -> RationalFunction {
        RationalFunction::new(self.num.scale(c), self.den.clone()).unwrap()
    }

    /// F(1/t), with negative powers cleared into the denominator.
    pub fn substitute_inverse(&self) -> RationalFunction {
        if self.is_zero() {
            return self.clone();
        }
        let dn = self.num.degree().unwrap();
        let dd = self.den.degree().unwrap();
        let rn = self.num.reversed();
        let rd = self.den.reversed();
        let (num, den) = if dd >= dn { (rn.shift(dd - dn), rd) } else { (rn, rd.shift(dn - dd)) };
        // reversal keeps num and den coprime and neither vanishes at 0, so the
        // shift cannot create a common factor either
        RationalFunction::from_coprime(num, den)
    }

    /// Exact value at a point; a pole is reported with its order.
    pub fn evaluate(&self, at: &Scalar) -> Result<Scalar> {
        let d = self.den.eval(at);
        if d.is_zero() {
            return Err(Error::Pole(self.den.root_multiplicity(at)));
        }
        self.num.eval(at).div(&d)
    }

    /// Taylor coefficients c_0..c_D at t = 0.
    pub fn series_coefficients(&self, d: usize) -> Result<Vec<Scalar>> {
        let d0 = self.den.coeff(0);
        let inv = d0.inv().ok_or(Error::PoleAtZero)?;
        let mut out: Vec<Scalar> = Vec::with_capacity(d + 1);
        for k in 0..=d {
            let mut acc = self.num.coeff(k);
            let top = k.min(self.den.degree().unwrap());
            for j in 1..=top {
                let dj = self.den.coeff(j);
                if !dj.is_zero() {
                    acc = &acc - &(&dj * &out[k - j]);
                }
            }
            out.push(&acc * &inv);
        }
        Ok(out)
    }

    /// (c, k) when the function equals c·t^k.
    pub fn as_monomial(&self) -> Option<(Scalar, i64)> {
        let nonzero: Vec<usize> =
            self.num.coeffs().iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, _)| i).collect();
        if nonzero.len() != 1 {
            return None;
        }
        let dd = self.den.degree().unwrap();
        let den_is_power = self.den.coeffs()[..dd].iter().all(|c| c.is_zero());
        if !den_is_power {
            return None;
        }
        let a = nonzero[0];
        Some((self.num.coeff(a), a as i64 - dd as i64))
    }

    pub fn embed(&self, target: &Field) -> Result<RationalFunction> {
        RationalFunction::new(self.num.embed(target)?, self.den.embed(target)?)
    }
}

/// Checked arithmetic entry point.
pub fn ratfun_arith(f: &RationalFunction, g: &RationalFunction, op: RatOp) -> Result<RationalFunction> {
    if f.field() != g.field() {
        return Err(Error::FieldMismatch(f.field().to_string(), g.field().to_string()));
    }
    Ok(match op {
        RatOp::Add => f.add(g),
        RatOp::Sub => f.sub(g),
        RatOp::Mul => f.mul(g),
        RatOp::Div => f.div(g)?,
    })
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
