use num_integer::Integer;

use super::group::element_order;
use super::Matrix;
use crate::error::{Error, Result};
use crate::exactnum::{cyclo_field, Field, RootOfUnity, Scalar};

/// Guard for repeated-multiplication orders in characteristic 0.
pub const ORDER_CAP: u64 = 100_000;

/// Eigenvalues of a finite-order matrix over a splitting field.
///
/// In characteristic 0, `values` live in ℚ(ζ_L) and `lifts` are the same roots
/// as [`RootOfUnity`]. In characteristic p, `values` live in the smallest
/// extension 𝔽_Q containing all r'-th roots of unity (r' the p'-part of the
/// order), written as powers of the norm-compatible generator `root`, and
/// `lifts` are their Brauer lifts ρ^e ↦ ζ_{Q−1}^e.
#[derive(Clone, Debug)]
pub struct Eigenvalues {
    pub field: Field,
    pub values: Vec<(Scalar, usize)>,
    pub lifts: Vec<(RootOfUnity, usize)>,
    pub order: u64,
    pub p_singular: bool,
    pub root: Option<Scalar>,
}

impl Eigenvalues {
    /// Each lift repeated by multiplicity.
    pub fn lift_multiset(&self) -> Vec<RootOfUnity> {
        self.lifts.iter().flat_map(|&(r, m)| std::iter::repeat_n(r, m)).collect()
    }

    /// Image of ζ_r under the reduction map paired with the lift (finite fields only).
    pub fn zeta_image(&self, r: u64) -> Option<Scalar> {
        let root = self.root.as_ref()?;
        let m = self.field.root_capacity();
        (m % r == 0).then(|| root.pow_u(m / r))
    }
}

/// Order of a finite-order matrix. Over finite fields the p'-part comes from
/// the eigenvalues and the p-part from powering; otherwise by multiplication.
pub fn matrix_order(g: &Matrix) -> Result<u64> {
    if g.field().is_finite() {
        Ok(finite_eigenvalues(g)?.order)
    } else {
        element_order(g, ORDER_CAP)
    }
}

pub fn eigenvalues(g: &Matrix) -> Result<Eigenvalues> {
    if g.det().is_zero() {
        return Err(Error::SingularMatrix);
    }
    if g.field().is_finite() {
        finite_eigenvalues(g)
    } else {
        cyclotomic_eigenvalues(g)
    }
}

fn cyclotomic_eigenvalues(g: &Matrix) -> Result<Eigenvalues> {
    let order = element_order(g, ORDER_CAP)?;
    eigenvalues_over(g, order)
}

/// Eigenvalues of a matrix representing a group element whose order divides
/// `order` (any representation of it: on V, on a graded piece, ...).
///
/// Candidates are restricted to μ_{r'} with r' the p'-part of `order`. Over
/// 𝔽_q they are searched in the extension of degree ord_{r'}(q), which
/// depends only on r', so all representations of one element share the same
/// lift.
pub fn eigenvalues_over(g: &Matrix, order: u64) -> Result<Eigenvalues> {
    if g.field().is_finite() {
        finite_eigenvalues_over(g, order)
    } else {
        cyclotomic_eigenvalues_over(g, order)
    }
}

fn cyclotomic_eigenvalues_over(g: &Matrix, order: u64) -> Result<Eigenvalues> {
    let base = g.field();
    let l = order.lcm(&base.cyclotomic_order().unwrap_or(1));
    let target = cyclo_field(l);
    let cp = g.charpoly().embed(&target)?;
    let mut values = Vec::new();
    let mut lifts = Vec::new();
    for k in 0..order {
        let root = RootOfUnity::new(order, k as i64);
        let x = root.to_scalar(&target)?;
        let mult = cp.root_multiplicity(&x);
        if mult > 0 {
            values.push((x, mult));
            lifts.push((root, mult));
        }
    }
    if lifts.iter().map(|l| l.1).sum::<usize>() != g.dim() {
        return Err(Error::Internal(format!("eigenvalues are not {order}-th roots of unity")));
    }
    Ok(Eigenvalues { field: target, values, lifts, order, p_singular: false, root: None })
}

/// Degree j of the extension of 𝔽_q generated by the r-th roots of unity.
pub fn splitting_degree(q: u128, r: u64) -> usize {
    let r = r as u128;
    if r <= 1 {
        return 1;
    }
    let mut x = q % r;
    let mut j = 1;
    while x != 1 {
        x = x * (q % r) % r;
        j += 1;
    }
    j
}

fn finite_eigenvalues_over(g: &Matrix, order: u64) -> Result<Eigenvalues> {
    let base = g.field();
    let p = base.characteristic();
    let mut r = order;
    while r % p == 0 {
        r /= p;
    }
    let emb = base.extension(splitting_degree(base.size().unwrap(), r))?;
    let big = emb.target.root_capacity();
    let cp = g.charpoly().embed_by(&emb)?;
    let step = emb.root().pow_u(big / r);
    let mut values = Vec::new();
    let mut lifts = Vec::new();
    let mut cur = emb.target.one();
    for k in 0..r {
        let mult = cp.root_multiplicity(&cur);
        if mult > 0 {
            values.push((cur.clone(), mult));
            lifts.push((RootOfUnity::new(r, k as i64), mult));
        }
        cur = &cur * &step;
    }
    if lifts.iter().map(|l| l.1).sum::<usize>() != g.dim() {
        return Err(Error::Internal(format!("eigenvalues are not {r}-th roots of unity")));
    }
    Ok(Eigenvalues {
        field: emb.target.clone(),
        values,
        lifts,
        order,
        p_singular: order % p == 0,
        root: Some(emb.root().clone()),
    })
}

fn finite_eigenvalues(g: &Matrix) -> Result<Eigenvalues> {
    let base = g.field();
    let p = base.characteristic();
    let n = g.dim();
    let cp = g.charpoly();
    if cp.coeff(0).is_zero() {
        return Err(Error::SingularMatrix);
    }
    // all eigenvalues lie in 𝔽_Q^* for the splitting extension; walk its powers of ρ
    // in successive extensions until the multiset is complete
    for j in 1..=usize::MAX {
        let emb = base.extension(j)?;
        let big = emb.target.root_capacity();
        let cpj = cp.embed_by(&emb)?;
        let rho = emb.root().clone();
        let mut values = Vec::new();
        let mut lifts = Vec::new();
        let mut found = 0;
        let mut cur = emb.target.one();
        for e in 0..big {
            let mult = cpj.root_multiplicity(&cur);
            if mult > 0 {
                found += mult;
                values.push((cur.clone(), mult));
                lifts.push((RootOfUnity::new(big, e as i64), mult));
                if found == n {
                    break;
                }
            }
            cur = &cur * &rho;
        }
        if found < n {
            continue;
        }
        let r = lifts.iter().fold(1u64, |acc, (l, _)| acc.lcm(&l.order()));
        let u = g.pow(r);
        let mut pp = 1;
        let mut h = u;
        while !h.is_identity() {
            h = h.pow(p);
            pp *= p;
            if pp > (n as u64) * p {
                return Err(Error::InfiniteOrder);
            }
        }
        let order = r * pp;
        return Ok(Eigenvalues {
            field: emb.target.clone(),
            values,
            lifts,
            order,
            p_singular: pp > 1,
            root: Some(rho),
        });
    }
    unreachable!()
}
