use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Signed;

use crate::error::{Error, Result};
use crate::exactnum::{Embedding, Field, Scalar};

/// Dense univariate polynomial in t, coefficients low-to-high, no trailing zeros.
#[derive(Clone, PartialEq, Eq)]
pub struct UniPoly {
    field: Field,
    coeffs: Vec<Scalar>,
}

impl UniPoly {
    pub fn new(field: &Field, mut coeffs: Vec<Scalar>) -> UniPoly {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { field: field.clone(), coeffs }
    }

    pub fn from_ints(field: &Field, coeffs: &[i64]) -> UniPoly {
        UniPoly::new(field, coeffs.iter().map(|&c| field.from_int(c)).collect())
    }

    pub fn zero(field: &Field) -> UniPoly {
        UniPoly { field: field.clone(), coeffs: Vec::new() }
    }

    pub fn constant(c: Scalar) -> UniPoly {
        let f = c.field().clone();
        UniPoly::new(&f, vec![c])
    }

    pub fn one(field: &Field) -> UniPoly {
        UniPoly::constant(field.one())
    }

    /// c·t^k
    pub fn monomial(c: Scalar, k: usize) -> UniPoly {
        let f = c.field().clone();
        let mut v = vec![f.zero(); k + 1];
        v[k] = c;
        UniPoly::new(&f, v)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Scalar {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Option<&Scalar> {
        self.coeffs.last()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn scale(&self, c: &Scalar) -> UniPoly {
        UniPoly::new(&self.field, self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn monic(&self) -> UniPoly {
        match self.leading_coeff() {
            None => self.clone(),
            Some(c) => self.scale(&c.inv().unwrap()),
        }
    }

    /// Multiplicity of t as a factor.
    pub fn t_valuation(&self) -> usize {
        self.coeffs.iter().position(|c| !c.is_zero()).unwrap_or(0)
    }

    pub fn shift(&self, k: usize) -> UniPoly {
        if self.is_zero() {
            return self.clone();
        }
        let mut v = vec![self.field.zero(); k];
        v.extend(self.coeffs.iter().cloned());
        UniPoly::new(&self.field, v)
    }

    /// Drop k leading-low zero coefficients (division by t^k, which must be exact).
    pub fn unshift(&self, k: usize) -> UniPoly {
        debug_assert!(self.coeffs.iter().take(k).all(|c| c.is_zero()));
        UniPoly::new(&self.field, self.coeffs.iter().skip(k).cloned().collect())
    }

    /// t^deg · p(1/t).
    pub fn reversed(&self) -> UniPoly {
        UniPoly::new(&self.field, self.coeffs.iter().rev().cloned().collect())
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        let mut acc = self.field.zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    pub fn divrem(&self, d: &UniPoly) -> Result<(UniPoly, UniPoly)> {
        let dd = d.degree().ok_or(Error::DivisionByZero)?;
        let lc_inv = d.leading_coeff().unwrap().inv().unwrap();
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return Ok((UniPoly::zero(&self.field), self.clone()));
        }
        let mut q = vec![self.field.zero(); r.len() - dd];
        for i in (0..q.len()).rev() {
            let c = &r[i + dd] * &lc_inv;
            if c.is_zero() {
                continue;
            }
            for (j, dj) in d.coeffs.iter().enumerate() {
                r[i + j] = &r[i + j] - &(&c * dj);
            }
            q[i] = c;
        }
        r.truncate(dd);
        Ok((UniPoly::new(&self.field, q), UniPoly::new(&self.field, r)))
    }

    pub fn div_exact(&self, d: &UniPoly) -> Result<UniPoly> {
        let (q, r) = self.divrem(d)?;
        if !r.is_zero() {
            return Err(Error::Internal("inexact univariate division".into()));
        }
        Ok(q)
    }

    /// Monic gcd (zero if both are zero).
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        // shortcuts that avoid Euclid's coefficient growth over large fields
        for (x, y) in [(self, other), (other, self)] {
            match x.degree() {
                None => return y.monic(),
                Some(0) => return UniPoly::one(&self.field),
                _ => {}
            }
            let low = x.coeffs.iter().position(|c| !c.is_zero()).unwrap();
            if low + 1 == x.coeffs.len() && !y.is_zero() {
                let ylow = y.coeffs.iter().position(|c| !c.is_zero()).unwrap();
                return UniPoly::monomial(self.field.one(), low.min(ylow));
            }
        }
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b).unwrap();
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn pow(&self, e: usize) -> UniPoly {
        let mut acc = UniPoly::one(&self.field);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Map every coefficient into a larger field.
    pub fn embed(&self, target: &Field) -> Result<UniPoly> {
        let v = self.coeffs.iter().map(|c| c.embed(target)).collect::<Result<Vec<_>>>()?;
        Ok(UniPoly::new(target, v))
    }

    /// Map coefficients through a finite-field embedding.
    pub fn embed_by(&self, e: &Embedding) -> Result<UniPoly> {
        let v = self.coeffs.iter().map(|c| e.apply(c)).collect::<Result<Vec<_>>>()?;
        Ok(UniPoly::new(&e.target, v))
    }

    /// Multiplicity of x as a root.
    pub fn root_multiplicity(&self, x: &Scalar) -> usize {
        let lin = UniPoly::new(&self.field, vec![-x, self.field.one()]);
        let mut p = self.clone();
        let mut k = 0;
        while !p.is_zero() && p.eval(x).is_zero() {
            p = p.div_exact(&lin).unwrap();
            k += 1;
        }
        k
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new(&self.field, (0..n).map(|i| &self.coeff(i) + &rhs.coeff(i)).collect())
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new(&self.field, (0..n).map(|i| &self.coeff(i) - &rhs.coeff(i)).collect())
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly::new(&self.field, self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero(&self.field);
        }
        let mut out = vec![self.field.zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = &out[i + j] + &(a * b);
                }
            }
        }
        UniPoly::new(&self.field, out)
    }
}

impl fmt::Display for UniPoly {
    /// Increasing powers of t, e.g. `1 - 2*t + t^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.to_rational().is_some_and(|q| q.is_negative());
            let abs = if neg { -c } else { c.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            first = false;
            let mono = match i {
                0 => String::new(),
                1 => "t".into(),
                _ => format!("t^{i}"),
            };
            if mono.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{abs}*{mono}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
