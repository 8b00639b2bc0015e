//! Exact scalars over ℚ, the cyclotomic fields ℚ(ζ_N) and finite fields 𝔽_{p^m}.
//!
//! A [`Field`] is a cheap, shareable descriptor; a [`Scalar`] carries its field
//! and a canonical representation, so equality and hashing are structural.
//! Cyclotomic numbers are residues modulo Φ_N and finite-field elements are
//! residues modulo the (verified irreducible) field modulus.
//!
//! Arithmetic operators panic when the operands live in different fields; the
//! public entry points of the higher layers check fields up front and report
//! [`Error::FieldMismatch`] instead.

mod cyclo;
pub(crate) mod fp;
mod roots;

pub use cyclo::cyclotomic_poly;
pub use fp::factorize;
pub use roots::{brauer_lift, cyclo_field, reduce_to_finite, RootOfUnity};

use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};

/// Largest finite field the exhaustive searches (roots, logarithms, extension
/// embeddings) are allowed to walk.
pub const FIELD_SEARCH_GUARD: u128 = 1 << 22;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum FieldKind {
    Rational,
    Cyclotomic { n: u64 },
    Finite { p: u64, modulus: Vec<u64> },
}

struct FieldInner {
    kind: FieldKind,
    degree: usize,
    /// Monic modulus for characteristic 0 (x for ℚ, Φ_N otherwise).
    phi: Vec<BigInt>,
    generator: OnceLock<Repr>,
    log: OnceLock<HashMap<Repr, u64>>,
    extensions: Mutex<HashMap<usize, Embedding>>,
}

/// Shared field descriptor. Clones are reference-counted.
#[derive(Clone)]
pub struct Field(Arc<FieldInner>);

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.kind == other.0.kind
    }
}
impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0.kind {
            FieldKind::Rational => write!(f, "Q"),
            FieldKind::Cyclotomic { n } => write!(f, "Q(zeta_{n})"),
            FieldKind::Finite { p, modulus } => {
                if modulus.len() == 2 {
                    write!(f, "GF({p})")
                } else {
                    write!(f, "GF({p}^{})[{:?}]", modulus.len() - 1, modulus)
                }
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) enum Repr {
    Q(Vec<BigRational>),
    F(Vec<u64>),
}

impl Field {
    fn build(kind: FieldKind, degree: usize, phi: Vec<BigInt>) -> Field {
        Field(Arc::new(FieldInner {
            kind,
            degree,
            phi,
            generator: OnceLock::new(),
            log: OnceLock::new(),
            extensions: Mutex::new(HashMap::new()),
        }))
    }

    pub fn rational() -> Field {
        Field::build(FieldKind::Rational, 1, vec![BigInt::zero(), BigInt::one()])
    }

    pub fn cyclotomic(n: u64) -> Result<Field> {
        if n == 0 {
            return Err(Error::InvalidField("cyclotomic order must be positive".into()));
        }
        let phi = cyclotomic_poly(n);
        Ok(Field::build(FieldKind::Cyclotomic { n }, phi.len() - 1, phi))
    }

    /// 𝔽_{p^m} presented as 𝔽_p[x]/(modulus); coefficients low-to-high, monic.
    pub fn finite(p: u64, modulus: Vec<u64>) -> Result<Field> {
        if !fp::is_prime(p) {
            return Err(Error::InvalidField(format!("{p} is not prime")));
        }
        if p >= 1 << 31 {
            return Err(Error::InvalidField(format!("prime {p} too large")));
        }
        let mut m: Vec<u64> = modulus.iter().map(|c| c % p).collect();
        fp::trim(&mut m);
        if m.len() < 2 || *m.last().unwrap() != 1 {
            return Err(Error::InvalidField("modulus must be monic of degree >= 1".into()));
        }
        if !fp::is_irreducible(&m, p) {
            return Err(Error::InvalidField(format!("modulus {modulus:?} is reducible over GF({p})")));
        }
        let degree = m.len() - 1;
        if degree == 1 {
            m = vec![0, 1];
        }
        Ok(Field::build(FieldKind::Finite { p, modulus: m }, degree, Vec::new()))
    }

    pub fn prime(p: u64) -> Result<Field> {
        Field::finite(p, vec![0, 1])
    }

    pub fn kind(&self) -> &FieldKind {
        &self.0.kind
    }

    /// Dimension over the prime field.
    pub fn degree(&self) -> usize {
        self.0.degree
    }

    pub fn characteristic(&self) -> u64 {
        match &self.0.kind {
            FieldKind::Finite { p, .. } => *p,
            _ => 0,
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self.0.kind, FieldKind::Finite { .. })
    }

    pub fn size(&self) -> Option<u128> {
        match &self.0.kind {
            FieldKind::Finite { p, .. } => Some((*p as u128).pow(self.0.degree as u32)),
            _ => None,
        }
    }

    /// Order of the group of roots of unity of the field: 2 for ℚ, lcm(2, N)
    /// for ℚ(ζ_N) and p^m − 1 for 𝔽_{p^m}.
    pub fn root_capacity(&self) -> u64 {
        match &self.0.kind {
            FieldKind::Rational => 2,
            FieldKind::Cyclotomic { n } => n.lcm(&2),
            FieldKind::Finite { .. } => (self.size().unwrap() - 1) as u64,
        }
    }

    /// Order N of the adjoined root for ℚ(ζ_N); 1 for ℚ.
    pub fn cyclotomic_order(&self) -> Option<u64> {
        match &self.0.kind {
            FieldKind::Rational => Some(1),
            FieldKind::Cyclotomic { n } => Some(*n),
            FieldKind::Finite { .. } => None,
        }
    }

    fn mk(&self, repr: Repr) -> Scalar {
        Scalar { field: self.clone(), repr }
    }

    pub fn zero(&self) -> Scalar {
        match &self.0.kind {
            FieldKind::Finite { .. } => self.mk(Repr::F(vec![0; self.0.degree])),
            _ => self.mk(Repr::Q(vec![BigRational::zero(); self.0.degree])),
        }
    }

    pub fn one(&self) -> Scalar {
        self.from_int(1)
    }

    pub fn from_int(&self, v: i64) -> Scalar {
        self.from_bigint(&BigInt::from(v))
    }

    pub fn from_bigint(&self, v: &BigInt) -> Scalar {
        match &self.0.kind {
            FieldKind::Finite { p, .. } => {
                let r = v.mod_floor(&BigInt::from(*p)).to_u64().unwrap();
                let mut c = vec![0; self.0.degree];
                c[0] = r;
                self.mk(Repr::F(c))
            }
            _ => {
                let mut c = vec![BigRational::zero(); self.0.degree];
                c[0] = BigRational::from_integer(v.clone());
                self.mk(Repr::Q(c))
            }
        }
    }

    pub fn from_rational(&self, v: &BigRational) -> Result<Scalar> {
        match &self.0.kind {
            FieldKind::Finite { .. } => {
                let num = self.from_bigint(v.numer());
                let den = self.from_bigint(v.denom());
                let inv = den.inv().ok_or(Error::DivisionByZero)?;
                Ok(&num * &inv)
            }
            _ => {
                let mut c = vec![BigRational::zero(); self.0.degree];
                c[0] = v.clone();
                Ok(self.mk(Repr::Q(c)))
            }
        }
    }

    /// Element with the given coefficient vector in the power basis of the field
    /// generator (x mod Φ_N, or x mod the finite modulus).
    pub fn from_coeffs_u64(&self, coeffs: &[u64]) -> Result<Scalar> {
        match &self.0.kind {
            FieldKind::Finite { p, modulus } => {
                let v: Vec<u64> = coeffs.iter().map(|c| c % p).collect();
                let mut r = fp::rem(&v, modulus, *p);
                r.resize(self.0.degree, 0);
                Ok(self.mk(Repr::F(r)))
            }
            _ => {
                let v: Vec<BigRational> =
                    coeffs.iter().map(|&c| BigRational::from_integer(BigInt::from(c))).collect();
                Ok(self.mk(Repr::Q(cyclo::reduce_monic(v, &self.0.phi))))
            }
        }
    }

    pub fn from_coeffs_rational(&self, coeffs: Vec<BigRational>) -> Result<Scalar> {
        match &self.0.kind {
            FieldKind::Finite { .. } => {
                let mut acc = self.zero();
                let x = self.poly_generator();
                let mut pw = self.one();
                for c in coeffs {
                    acc = &acc + &(&self.from_rational(&c)? * &pw);
                    pw = &pw * &x;
                }
                Ok(acc)
            }
            _ => Ok(self.mk(Repr::Q(cyclo::reduce_monic(coeffs, &self.0.phi)))),
        }
    }

    /// The class of x: ζ_N for cyclotomic fields, the modulus root for finite fields.
    pub fn poly_generator(&self) -> Scalar {
        match &self.0.kind {
            FieldKind::Rational => self.zero(),
            FieldKind::Cyclotomic { .. } => {
                let v = vec![BigRational::zero(), BigRational::one()];
                self.mk(Repr::Q(cyclo::reduce_monic(v, &self.0.phi)))
            }
            FieldKind::Finite { .. } => self.from_coeffs_u64(&[0, 1]).unwrap(),
        }
    }

    /// ζ_N^k in ℚ(ζ_N) (and ±1 in ℚ for N ≤ 2).
    pub fn zeta_power(&self, k: i64) -> Scalar {
        match &self.0.kind {
            FieldKind::Rational => self.from_int(if k % 2 == 0 { 1 } else { -1 }),
            FieldKind::Cyclotomic { n } => {
                let e = k.rem_euclid(*n as i64) as usize;
                let mut v = vec![BigRational::zero(); e + 1];
                v[e] = BigRational::one();
                self.mk(Repr::Q(cyclo::reduce_monic(v, &self.0.phi)))
            }
            FieldKind::Finite { .. } => panic!("zeta_power on a finite field"),
        }
    }

    /// The fixed primitive root ω of order `root_capacity()`: −1 in ℚ; ζ_N for
    /// even N and −ζ_N^{(N+1)/2} for odd N; for finite fields the multiplicative
    /// generator with the smallest coefficient code Σ c_i p^i.
    pub fn generator(&self) -> Scalar {
        let repr = self
            .0
            .generator
            .get_or_init(|| match &self.0.kind {
                FieldKind::Rational => self.from_int(-1).repr,
                FieldKind::Cyclotomic { n } => {
                    if n % 2 == 0 {
                        self.zeta_power(1).repr
                    } else {
                        (-&self.zeta_power(u64::div_ceil(*n, 2) as i64)).repr
                    }
                }
                FieldKind::Finite { p, .. } => {
                    let q = self.size().unwrap();
                    let order = (q - 1) as u64;
                    let primes = factorize(order);
                    (1..q)
                        .map(|code| self.from_code(code))
                        .find(|a| primes.iter().all(|(r, _)| !a.pow_u(order / r).is_one()))
                        .map(|a| a.repr)
                        .unwrap_or_else(|| panic!("no generator found in GF({p})"))
                }
            })
            .clone();
        self.mk(repr)
    }

    /// ω^e for the fixed primitive root ω.
    pub fn root_of_unity(&self, e: u64) -> Scalar {
        self.generator().pow_u(e % self.root_capacity())
    }

    /// Exponent e with x = ω^e, or `None` when x is not a root of unity of the field.
    pub fn root_log(&self, x: &Scalar) -> Result<Option<u64>> {
        self.check(x)?;
        let m = self.root_capacity();
        if m as u128 > FIELD_SEARCH_GUARD {
            return Err(Error::ExtensionTooLarge(m as u128));
        }
        let table = self.0.log.get_or_init(|| {
            let w = self.generator();
            let mut t = HashMap::with_capacity(m as usize);
            let mut cur = self.one();
            for e in 0..m {
                t.insert(cur.repr.clone(), e);
                cur = &cur * &w;
            }
            t
        });
        Ok(table.get(&x.repr).copied())
    }

    /// Finite-field element with coefficient code Σ c_i p^i.
    pub fn from_code(&self, code: u128) -> Scalar {
        match &self.0.kind {
            FieldKind::Finite { p, .. } => self.mk(Repr::F(fp::decode(code, *p, self.0.degree))),
            _ => panic!("from_code on a characteristic-0 field"),
        }
    }

    pub(crate) fn check(&self, x: &Scalar) -> Result<()> {
        if &x.field != self {
            return Err(Error::FieldMismatch(self.to_string(), x.field.to_string()));
        }
        Ok(())
    }

    /// Embedding of this finite field into its degree-`j` extension.
    ///
    /// For j = 1 this is the identity. Otherwise the target is 𝔽_p[x]/(f) with f
    /// the monic irreducible of degree m·j having the smallest coefficient code,
    /// and the base generator x is sent to the root of the base modulus with the
    /// smallest code. Results are memoized on the descriptor.
    pub fn extension(&self, j: usize) -> Result<Embedding> {
        let FieldKind::Finite { p, modulus } = &self.0.kind else {
            return Err(Error::InvalidField("extensions only exist for finite fields here".into()));
        };
        assert!(j >= 1);
        if j == 1 {
            return Ok(Embedding {
                source: self.clone(),
                target: self.clone(),
                theta: self.poly_generator(),
                root: self.generator(),
            });
        }
        if let Some(e) = self.0.extensions.lock().unwrap().get(&j) {
            return Ok(e.clone());
        }
        let d = self.0.degree * j;
        let size = (*p as u128).checked_pow(d as u32).unwrap_or(u128::MAX);
        if size > FIELD_SEARCH_GUARD {
            return Err(Error::ExtensionTooLarge(size));
        }
        let target = Field::finite(*p, fp::least_irreducible(*p, d))?;
        let theta = if self.0.degree == 1 {
            target.zero()
        } else {
            (0..size)
                .map(|c| target.from_code(c))
                .find(|y| {
                    let mut acc = target.zero();
                    for &c in modulus.iter().rev() {
                        acc = &(&acc * y) + &target.from_int(c as i64);
                    }
                    acc.is_zero()
                })
                .ok_or_else(|| Error::Internal("base modulus has no root in the extension".into()))?
        };
        let mut e = Embedding { source: self.clone(), root: target.zero(), target, theta };
        e.root = e.norm_compatible_root()?;
        self.0.extensions.lock().unwrap().insert(j, e.clone());
        Ok(e)
    }

    /// Every element, in increasing coefficient code. Finite fields only.
    pub fn elements(&self) -> Result<Vec<Scalar>> {
        let q = self.size().ok_or_else(|| Error::InvalidField("infinite field".into()))?;
        if q > FIELD_SEARCH_GUARD {
            return Err(Error::ExtensionTooLarge(q));
        }
        Ok((0..q).map(|c| self.from_code(c)).collect())
    }
}

/// Field homomorphism 𝔽_{p^m} → 𝔽_{p^{mj}} determined by the image of the base generator.
///
/// Carries a generator ρ of the target's multiplicative group with
/// ρ^{(Q−1)/(q−1)} = γ (the fixed generator of the source), so Brauer lifts
/// taken in the extension agree with those taken in the base.
#[derive(Clone, Debug)]
pub struct Embedding {
    pub source: Field,
    pub target: Field,
    theta: Scalar,
    root: Scalar,
}

impl Embedding {
    /// The norm-compatible generator ρ of the target.
    pub fn root(&self) -> &Scalar {
        &self.root
    }

    fn norm_compatible_root(&self) -> Result<Scalar> {
        let big = self.target.root_capacity();
        let small = self.source.root_capacity();
        let norm = big / small;
        let gt = self.target.generator();
        let base = self.apply(&self.source.generator())?;
        // gt^norm = base^s with s a unit mod (q − 1)
        let image = gt.pow_u(norm);
        let mut cur = self.target.one();
        let mut s = None;
        for e in 0..small {
            if cur == image {
                s = Some(e);
                break;
            }
            cur = &cur * &base;
        }
        let s = s.ok_or_else(|| Error::Internal("norm of a generator is not a generator".into()))?;
        let k0 = if small == 1 { 0 } else { (1..small).find(|&k| fp::mul_mod(s, k, small) == 1).unwrap() };
        let k = (0..)
            .map(|m| k0 + m * small)
            .find(|&k| k > 0 && num_integer::Integer::gcd(&k, &big) == 1)
            .unwrap();
        Ok(gt.pow_u(k))
    }

    pub fn apply(&self, x: &Scalar) -> Result<Scalar> {
        self.source.check(x)?;
        if self.source == self.target {
            return Ok(x.clone());
        }
        let Repr::F(c) = &x.repr else { unreachable!() };
        let mut acc = self.target.zero();
        for &ci in c.iter().rev() {
            acc = &(&acc * &self.theta) + &self.target.from_int(ci as i64);
        }
        Ok(acc)
    }

    /// Degree of the target over the source.
    pub fn relative_degree(&self) -> usize {
        self.target.degree() / self.source.degree()
    }
}

/// An exact element of a [`Field`].
#[derive(Clone)]
pub struct Scalar {
    field: Field,
    repr: Repr,
}

/// Values of Brauer characters: scalars of ℚ or of a cyclotomic field.
pub type CycloNumber = Scalar;

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.repr == other.repr
    }
}
impl Eq for Scalar {}

impl Hash for Scalar {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.repr.hash(state);
    }
}

impl Scalar {
    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn is_zero(&self) -> bool {
        match &self.repr {
            Repr::Q(c) => c.iter().all(|x| x.is_zero()),
            Repr::F(c) => c.iter().all(|&x| x == 0),
        }
    }

    pub fn is_one(&self) -> bool {
        *self == self.field.one()
    }

    /// Coefficients over 𝔽_p in the power basis (finite fields only).
    pub fn finite_coeffs(&self) -> Option<&[u64]> {
        match &self.repr {
            Repr::F(c) => Some(c),
            Repr::Q(_) => None,
        }
    }

    /// Coefficients over ℚ in the power basis of ζ_N (characteristic 0 only).
    pub fn rational_coeffs(&self) -> Option<&[BigRational]> {
        match &self.repr {
            Repr::Q(c) => Some(c),
            Repr::F(_) => None,
        }
    }

    /// Coefficient code Σ c_i p^i of a finite-field element.
    pub fn code(&self) -> Option<u128> {
        match (&self.repr, self.field.kind()) {
            (Repr::F(c), FieldKind::Finite { p, .. }) => Some(fp::encode(c, *p)),
            _ => None,
        }
    }

    /// The value as a rational number when it lies in the prime field ℚ.
    pub fn to_rational(&self) -> Option<BigRational> {
        match &self.repr {
            Repr::Q(c) if c[1..].iter().all(|x| x.is_zero()) => Some(c[0].clone()),
            _ => None,
        }
    }

    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        match (&self.repr, self.field.kind()) {
            (Repr::F(_), FieldKind::Finite { .. }) => {
                let q = self.field.size().unwrap();
                Some(self.pow_u128(q - 2))
            }
            (Repr::Q(c), _) => {
                if self.field.0.degree == 1 {
                    return Some(self.field.mk(Repr::Q(vec![c[0].recip()])));
                }
                cyclo::qinv_mod(c, &self.field.0.phi).map(|v| self.field.mk(Repr::Q(v)))
            }
            _ => unreachable!(),
        }
    }

    pub fn div(&self, other: &Scalar) -> Result<Scalar> {
        let inv = other.inv().ok_or(Error::DivisionByZero)?;
        Ok(self * &inv)
    }

    pub fn pow_u(&self, e: u64) -> Scalar {
        self.pow_u128(e as u128)
    }

    fn pow_u128(&self, mut e: u128) -> Scalar {
        let mut acc = self.field.one();
        let mut b = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &b;
            }
            e >>= 1;
            if e > 0 {
                b = &b * &b;
            }
        }
        acc
    }

    pub fn pow(&self, e: i64) -> Result<Scalar> {
        if e >= 0 {
            Ok(self.pow_u(e as u64))
        } else {
            Ok(self.inv().ok_or(Error::DivisionByZero)?.pow_u(e.unsigned_abs()))
        }
    }

    /// Least r ≥ 1 with a^r = 1.
    pub fn mult_order(&self) -> Result<u64> {
        if self.is_zero() {
            return Err(Error::ZeroElement);
        }
        let m = self.field.root_capacity();
        if !self.pow_u(m).is_one() {
            return Err(Error::InfiniteOrder);
        }
        let mut order = m;
        for (r, e) in factorize(m) {
            for _ in 0..e {
                if self.pow_u(order / r).is_one() {
                    order /= r;
                } else {
                    break;
                }
            }
        }
        Ok(order)
    }

    /// Image in a larger field: ℚ(ζ_a) → ℚ(ζ_b) for a | b (ζ_a ↦ ζ_b^{b/a}),
    /// with ℚ embedding everywhere.
    pub fn embed(&self, target: &Field) -> Result<Scalar> {
        if &self.field == target {
            return Ok(self.clone());
        }
        let err = || Error::FieldMismatch(self.field.to_string(), target.to_string());
        let (Some(a), Some(b)) = (self.field.cyclotomic_order(), target.cyclotomic_order()) else {
            return Err(err());
        };
        let Repr::Q(c) = &self.repr else { unreachable!() };
        if self.field.0.degree == 1 {
            return target.from_rational(&c[0]);
        }
        if b % a != 0 {
            return Err(err());
        }
        let step = (b / a) as usize;
        let mut v = vec![BigRational::zero(); step * (c.len() - 1) + 1];
        for (i, ci) in c.iter().enumerate() {
            v[i * step] = ci.clone();
        }
        Ok(target.mk(Repr::Q(cyclo::reduce_monic(v, &target.0.phi))))
    }

    /// Galois conjugate ζ ↦ ζ^k (characteristic 0, gcd(k, N) = 1).
    pub fn galois_conjugate(&self, k: u64) -> Scalar {
        let Repr::Q(c) = &self.repr else { panic!("galois_conjugate on a finite field") };
        if self.field.0.degree == 1 {
            return self.clone();
        }
        let n = self.field.cyclotomic_order().unwrap();
        let mut acc = self.field.zero();
        for (i, ci) in c.iter().enumerate() {
            if !ci.is_zero() {
                let z = self.field.zeta_power(((i as u64 * k) % n) as i64);
                acc = &acc + &(&self.field.from_rational(ci).unwrap() * &z);
            }
        }
        acc
    }
}

fn binop(a: &Scalar, b: &Scalar, name: &str) {
    assert!(a.field == b.field, "{name}: field mismatch {} vs {}", a.field, b.field);
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        binop(self, rhs, "add");
        let repr = match (&self.repr, &rhs.repr) {
            (Repr::Q(a), Repr::Q(b)) => Repr::Q(a.iter().zip(b).map(|(x, y)| x + y).collect()),
            (Repr::F(a), Repr::F(b)) => {
                let p = self.field.characteristic();
                Repr::F(a.iter().zip(b).map(|(x, y)| (x + y) % p).collect())
            }
            _ => unreachable!(),
        };
        self.field.mk(repr)
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        binop(self, rhs, "sub");
        let repr = match (&self.repr, &rhs.repr) {
            (Repr::Q(a), Repr::Q(b)) => Repr::Q(a.iter().zip(b).map(|(x, y)| x - y).collect()),
            (Repr::F(a), Repr::F(b)) => {
                let p = self.field.characteristic();
                Repr::F(a.iter().zip(b).map(|(x, y)| (x + p - y) % p).collect())
            }
            _ => unreachable!(),
        };
        self.field.mk(repr)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        let repr = match &self.repr {
            Repr::Q(a) => Repr::Q(a.iter().map(|x| -x).collect()),
            Repr::F(a) => {
                let p = self.field.characteristic();
                Repr::F(a.iter().map(|x| (p - x) % p).collect())
            }
        };
        self.field.mk(repr)
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        binop(self, rhs, "mul");
        let repr = match (&self.repr, &rhs.repr, self.field.kind()) {
            (Repr::Q(a), Repr::Q(b), _) => {
                if self.field.0.degree == 1 {
                    Repr::Q(vec![&a[0] * &b[0]])
                } else {
                    Repr::Q(cyclo::reduce_monic(cyclo::qmul(a, b), &self.field.0.phi))
                }
            }
            (Repr::F(a), Repr::F(b), FieldKind::Finite { p, modulus }) => {
                if modulus.len() == 2 {
                    Repr::F(vec![fp::mul_mod(a[0], b[0], *p)])
                } else {
                    let mut r = fp::mulmod_poly(a, b, modulus, *p);
                    r.resize(self.field.0.degree, 0);
                    Repr::F(r)
                }
            }
            _ => unreachable!(),
        };
        self.field.mk(repr)
    }
}

macro_rules! owned_ops {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar { (&self).$m(&rhs) }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar { (&self).$m(rhs) }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

fn fmt_rational(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

impl fmt::Display for Scalar {
    /// Rationals as `a/b`, cyclotomic numbers as polynomials in `z` = ζ_N,
    /// prime-field elements as residues and extension-field elements as `a^k`
    /// for the fixed generator `a`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.repr {
            Repr::Q(c) => {
                let terms: Vec<(usize, &BigRational)> =
                    c.iter().enumerate().filter(|(_, x)| !x.is_zero()).collect();
                if terms.is_empty() {
                    return write!(f, "0");
                }
                if terms.len() == 1 && terms[0].0 == 0 {
                    return write!(f, "{}", fmt_rational(terms[0].1));
                }
                let mut s = String::new();
                for (k, (i, x)) in terms.iter().enumerate() {
                    let neg = x.is_negative();
                    let abs = x.abs();
                    if k == 0 {
                        if neg {
                            s.push('-');
                        }
                    } else {
                        s.push_str(if neg { " - " } else { " + " });
                    }
                    let mono = match i {
                        0 => String::new(),
                        1 => "z".to_string(),
                        _ => format!("z^{i}"),
                    };
                    if mono.is_empty() {
                        s.push_str(&fmt_rational(&abs));
                    } else if abs.is_one() {
                        s.push_str(&mono);
                    } else {
                        s.push_str(&format!("{}*{}", fmt_rational(&abs), mono));
                    }
                }
                if terms.len() > 1 {
                    write!(f, "({s})")
                } else {
                    write!(f, "{s}")
                }
            }
            Repr::F(c) => {
                if self.field.degree() == 1 {
                    write!(f, "{}", c[0])
                } else if self.is_zero() {
                    write!(f, "0")
                } else {
                    match self.field.root_log(self) {
                        Ok(Some(k)) => write!(f, "a^{k}"),
                        _ => write!(f, "{c:?}"),
                    }
                }
            }
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
