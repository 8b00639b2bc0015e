use std::fmt;

use num_integer::Integer;
use serde::Serialize;

use super::{Field, FieldKind, Scalar};
use crate::error::{Error, Result};

/// ζ_order^exp in normalized form: gcd(exp, order) = 1 and 0 ≤ exp < order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct RootOfUnity {
    order: u64,
    exp: u64,
}

impl RootOfUnity {
    /// ζ_n^e, reduced to its true order.
    pub fn new(n: u64, e: i64) -> RootOfUnity {
        assert!(n >= 1);
        let e = e.rem_euclid(n as i64) as u64;
        let g = e.gcd(&n);
        let g = if e == 0 { n } else { g };
        RootOfUnity { order: n / g, exp: if e == 0 { 0 } else { e / g } }
    }

    pub fn one() -> RootOfUnity {
        RootOfUnity { order: 1, exp: 0 }
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn exp(&self) -> u64 {
        self.exp
    }

    pub fn is_one(&self) -> bool {
        self.order == 1
    }

    /// Exponent of this root as a power of ζ_n; requires order | n.
    pub fn exponent_in(&self, n: u64) -> Option<u64> {
        (n % self.order == 0).then(|| self.exp * (n / self.order))
    }

    pub fn mul(&self, other: &RootOfUnity) -> RootOfUnity {
        let n = self.order.lcm(&other.order);
        let e = self.exponent_in(n).unwrap() + other.exponent_in(n).unwrap();
        RootOfUnity::new(n, e as i64)
    }

    pub fn inv(&self) -> RootOfUnity {
        RootOfUnity::new(self.order, -(self.exp as i64))
    }

    pub fn pow(&self, k: i64) -> RootOfUnity {
        let e = (self.exp as i128 * k as i128).rem_euclid(self.order as i128) as i64;
        RootOfUnity::new(self.order, e)
    }

    /// The value inside ℚ or ℚ(ζ_N); fails unless the order divides lcm(2, N).
    pub fn to_scalar(&self, field: &Field) -> Result<Scalar> {
        let m = match field.kind() {
            FieldKind::Finite { .. } => {
                return Err(Error::InvalidField("Brauer values live in characteristic 0".into()))
            }
            _ => field.root_capacity(),
        };
        let k = self.exponent_in(m).ok_or_else(|| {
            Error::FieldMismatch(format!("root of unity of order {}", self.order), field.to_string())
        })?;
        Ok(field.root_of_unity(k))
    }
}

impl fmt::Display for RootOfUnity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.order, self.exp) {
            (1, _) => write!(f, "1"),
            (2, _) => write!(f, "-1"),
            (n, 1) => write!(f, "zeta_{n}"),
            (n, e) => write!(f, "zeta_{n}^{e}"),
        }
    }
}

/// ℚ for N ≤ 2, otherwise ℚ(ζ_N).
pub fn cyclo_field(n: u64) -> Field {
    if n <= 2 {
        Field::rational()
    } else {
        Field::cyclotomic(n).expect("positive order")
    }
}

/// Brauer lift of a nonzero finite-field element: with γ the fixed generator of
/// its field and a = γ^e, returns ζ_M^e where M = |𝔽^*|. Multiplicative, and
/// sends 1 to 1.
pub fn brauer_lift(a: &Scalar) -> Result<RootOfUnity> {
    let f = a.field();
    if !f.is_finite() {
        return Err(Error::InvalidField("Brauer lift needs a finite field".into()));
    }
    if a.is_zero() {
        return Err(Error::ZeroElement);
    }
    let m = f.root_capacity();
    let e = f.root_log(a)?.ok_or_else(|| Error::Internal("nonzero element outside the cyclic group".into()))?;
    Ok(RootOfUnity::new(m, e as i64))
}

/// Reduction ℤ[ζ_r] → 𝔽 sending ζ_r to `zeta_image` (a primitive r-th root of
/// unity in the finite field); inverse of the Brauer lift on roots of unity.
pub fn reduce_to_finite(value: &Scalar, zeta_image: &Scalar) -> Result<Scalar> {
    let target = zeta_image.field();
    let coeffs = value
        .rational_coeffs()
        .ok_or_else(|| Error::InvalidField("expected a characteristic-0 value".into()))?;
    let mut acc = target.zero();
    let mut pw = target.one();
    for c in coeffs {
        acc = &acc + &(&target.from_rational(c)? * &pw);
        pw = &pw * zeta_image;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalization() {
        assert_eq!(RootOfUnity::new(12, 4), RootOfUnity::new(3, 1));
        assert_eq!(RootOfUnity::new(5, 0), RootOfUnity::one());
        assert_eq!(RootOfUnity::new(4, 2).order(), 2);
        assert_eq!(RootOfUnity::new(3, 1).mul(&RootOfUnity::new(3, 2)), RootOfUnity::one());
    }

    #[test]
    fn lift_of_one_and_minus_one() {
        let f7 = Field::prime(7).unwrap();
        assert!(brauer_lift(&f7.one()).unwrap().is_one());
        // −1 is the unique element of order 2 in 𝔽_7
        let m1 = brauer_lift(&f7.from_int(-1)).unwrap();
        assert_eq!(m1.to_scalar(&Field::rational()).unwrap(), Field::rational().from_int(-1));
    }

    #[test]
    fn lift_of_generator_is_zeta_m() {
        let f5 = Field::prime(5).unwrap();
        let g = f5.generator();
        assert_eq!(g, f5.from_int(2));
        let l = brauer_lift(&g).unwrap();
        assert_eq!(l, RootOfUnity::new(4, 1));
        let c4 = Field::cyclotomic(4).unwrap();
        assert_eq!(l.to_scalar(&c4).unwrap(), c4.zeta_power(1));
        assert_eq!(brauer_lift(&f5.zero()), Err(Error::ZeroElement));
    }

    #[test]
    fn to_scalar_odd_cyclotomic() {
        let c3 = Field::cyclotomic(3).unwrap();
        let r = RootOfUnity::new(6, 1);
        let v = r.to_scalar(&c3).unwrap();
        assert_eq!(&v * &v, c3.zeta_power(1));
        assert!(RootOfUnity::new(4, 1).to_scalar(&c3).is_err());
    }
}
